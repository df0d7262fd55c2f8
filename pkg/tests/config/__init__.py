"""Tests for neuralhss.config."""
