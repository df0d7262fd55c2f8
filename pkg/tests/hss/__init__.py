"""Tests for neuralhss.hss."""
