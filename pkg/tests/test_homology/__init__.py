"""Tests for the homology package."""
