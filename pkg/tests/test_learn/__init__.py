"""Tests for the learn package."""
