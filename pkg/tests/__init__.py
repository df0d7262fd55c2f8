"""Tests for the Neural-HSS toolkit."""
