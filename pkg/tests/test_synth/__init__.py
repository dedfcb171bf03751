"""Tests for the synth package."""
