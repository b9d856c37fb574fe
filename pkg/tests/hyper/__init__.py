"""Unit tests for hypergeometric terms and section bases."""
