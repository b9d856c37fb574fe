"""Unit tests for seqformula."""
