from dataclasses import dataclass


@dataclass(frozen=True)
class NumericFlags:
    """
    Numeric tolerances shared by all operations.
    """

    """
    Absolute tolerance for degeneracy tests (coincident points, parallel
    lines, collinear triples) on unit-scale data.
    """
    eps_deg: float = 1e-12

    """
    Minimum distance to the domain boundary for metric evaluation. Points
    closer than this raise NearBoundary.
    """
    eps_bnd: float = 1e-9

    """
    How far a point may be from the unit circle and still count as on it.
    """
    eps_circle: float = 1e-10

    """
    Rounding allowance for arguments of arch and arth at the edge of their
    domains.
    """
    clamp: float = 1e-15

    """
    Iteration cap of the bisections used for inverting monotone functions.
    """
    bisect_maxiter: int = 200

    """
    Edge samples used by the Apollonian maximization when the critical point
    equation is degenerate.
    """
    apollonian_fallback_samples: int = 1024

    """
    Leading coefficient below which the per-edge critical point equation is
    treated as degenerate.
    """
    apollonian_flat_coefficient: float = 1e-14

    """
    Largest side of the coarse boundary grid of the Möbius metric search.
    """
    mobius_grid_max: int = 256

    """
    Number of best coarse cells refined by the Möbius metric search.
    """
    mobius_refine_cells: int = 16


DEFAULT_FLAGS = NumericFlags()

DEFAULT_SEED = 20240601
