"""Tests for neuralhss.metrics."""
