"""Unit tests for the exact algebra layer."""
