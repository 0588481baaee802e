"""Tests for corrlab."""
