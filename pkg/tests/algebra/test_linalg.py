"""Unit tests for exact linear algebra."""

import unittest
from fractions import Fraction

from seqformula.algebra import nullspace, rref, solve_linear


class TestLinalg(unittest.TestCase):
    """Test cases for Gauss-Jordan elimination."""

    def test_rref(self):
        """Test reduced row echelon form and pivots."""
        reduced, pivots = rref([[2, 4], [1, 3]])
        self.assertEqual(reduced, [[1, 0], [0, 1]])
        self.assertEqual(pivots, [0, 1])

        reduced, pivots = rref([[1, 2, 3], [2, 4, 6]])
        self.assertEqual(reduced[0], [1, 2, 3])
        self.assertEqual(pivots, [0])
        self.assertEqual(rref([]), ([], []))

    def test_nullspace(self):
        """Test nullspace bases."""
        self.assertEqual(nullspace([[1, 1]]), [[Fraction(-1), Fraction(1)]])
        self.assertEqual(nullspace([[1, 0], [0, 1]]), [])
        self.assertEqual(nullspace([], 2), [[1, 0], [0, 1]])
        for vector in nullspace([[1, 2, 3], [0, 1, 1]]):
            self.assertEqual(vector[0] + 2 * vector[1] + 3 * vector[2], 0)
            self.assertEqual(vector[1] + vector[2], 0)

    def test_solve_linear(self):
        """Test particular solutions and inconsistency."""
        self.assertEqual(solve_linear([[1, 1], [1, -1]], [3, 1], 2), [2, 1])
        self.assertEqual(solve_linear([[1, 1]], [2], 2), [2, 0])
        self.assertIsNone(solve_linear([[1, 1], [1, 1]], [1, 2], 2))
        self.assertEqual(solve_linear([], [], 3), [0, 0, 0])
        # zero unknowns: consistent only for a zero right-hand side
        self.assertEqual(solve_linear([[], []], [0, 0], 0), [])
        self.assertIsNone(solve_linear([[], []], [0, 1], 0))

    def test_fractions_are_exact(self):
        """Test that solutions stay exact rationals."""
        solution = solve_linear([[3, 1], [1, 2]], [1, 0], 2)
        self.assertEqual(solution, [Fraction(2, 5), Fraction(-1, 5)])


if __name__ == "__main__":
    unittest.main()
