"""Tests for the signal package."""
