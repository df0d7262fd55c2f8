"""Test helpers for Neural-HSS."""
