from fractions import Fraction

from eigenstrata.matrices import ExactMatrix


def rand_matrix(rng, rows, cols, height=10):
    return ExactMatrix.from_rows(
        [[Fraction(rng.randint(-height, height), rng.randint(1, height))
          for _ in range(cols)] for _ in range(rows)])
