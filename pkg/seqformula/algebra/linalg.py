"""Exact Gauss-Jordan elimination over the rationals."""

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

Matrix = List[List[Fraction]]


def rref(rows: Sequence[Sequence[Fraction]]) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form.

    Args:
        rows: Matrix given as a list of equally long rows

    Returns:
        Tuple[Matrix, List[int]]: The reduced matrix (nonzero rows first) and the pivot column of each
        nonzero row
    """
    matrix = [[Fraction(v) for v in row] for row in rows]
    if not matrix:
        return [], []
    width = len(matrix[0])
    pivots: List[int] = []
    rank = 0
    for col in range(width):
        pivot_row = next((r for r in range(rank, len(matrix)) if matrix[r][col] != 0), None)
        if pivot_row is None:
            continue
        matrix[rank], matrix[pivot_row] = matrix[pivot_row], matrix[rank]
        inv = 1 / matrix[rank][col]
        matrix[rank] = [v * inv for v in matrix[rank]]
        for r, row in enumerate(matrix):
            if r != rank and row[col] != 0:
                factor = row[col]
                matrix[r] = [a - factor * b for a, b in zip(row, matrix[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(matrix):
            break
    return matrix, pivots


def nullspace(rows: Sequence[Sequence[Fraction]], width: Optional[int] = None) -> List[List[Fraction]]:
    """Basis of {v : rows * v = 0}, one vector per free column.

    Args:
        rows: Matrix rows
        width: Number of unknowns, required when `rows` is empty

    Returns:
        List[List[Fraction]]: Basis vectors; each has a 1 in its free column
    """
    width = len(rows[0]) if rows else (width or 0)
    reduced, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for f in free:
        vector = [Fraction(0)] * width
        vector[f] = Fraction(1)
        for r, p in enumerate(pivots):
            vector[p] = -reduced[r][f]
        basis.append(vector)
    return basis


def solve_linear(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction], width: int) -> Optional[List[Fraction]]:
    """A particular solution of rows * v = rhs with every free unknown set to zero.

    Args:
        rows: Coefficient rows (may be empty)
        rhs: Right-hand side, one entry per row
        width: Number of unknowns

    Returns:
        Optional[List[Fraction]]: The solution, or None when the system is inconsistent
    """
    if not rows:
        return [Fraction(0)] * width
    augmented = [list(row) + [value] for row, value in zip(rows, rhs)]
    reduced, pivots = rref(augmented)
    if width in pivots:
        return None
    solution = [Fraction(0)] * width
    for r, p in enumerate(pivots):
        solution[p] = reduced[r][width]
    return solution
