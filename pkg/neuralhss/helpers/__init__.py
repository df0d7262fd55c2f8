"""Helpers module."""
