"""Unit tests for output renderers."""
