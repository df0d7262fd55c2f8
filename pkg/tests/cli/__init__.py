"""Tests for neuralhss.cli."""
