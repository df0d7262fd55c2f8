"""Tests for neuralhss.optim."""
