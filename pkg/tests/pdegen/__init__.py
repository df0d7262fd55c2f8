"""Tests for neuralhss.pdegen."""
