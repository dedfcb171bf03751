"""Tests for the diagrams package."""
