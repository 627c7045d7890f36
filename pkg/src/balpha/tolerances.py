"""Numerical tolerances used throughout the package, kept in one place."""

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Tolerances:
    # eigenvalue accuracy, scaled by max(1, ||M||_inf)
    eig: float = 1e-10
    # determinant zero-snapping of a pivot, scaled by max(1, ||M||_inf)
    det: float = 1e-9
    # characteristic polynomial residual at an eigenvalue, scaled by scale**n
    poly: float = 1e-7
    # sign decisions on the smallest eigenvalue
    psd: float = 1e-9
    # beta_o predicate slack, multiplied by n * max degree
    beta_sign: float = 1e-11
    # bisection stopping width for beta_o
    beta_bracket: float = 1e-10
    # inequality slack for the eigenvalue bounds
    bound: float = 1e-7
    # Jacobi: stop once off-diagonal Frobenius norm < jacobi_off * ||M||_F
    jacobi_off: float = 1e-13
    jacobi_max_sweeps: int = 100

    def with_overrides(self, **kw) -> "Tolerances":
        return replace(self, **kw)


DEFAULT = Tolerances()
