"""Shared utilities for seqformula."""
