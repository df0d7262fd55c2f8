"""Tests for neuralhss.neural."""
