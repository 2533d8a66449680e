"""Independent reference implementations used by several test modules."""

from fractions import Fraction

from powerbasis.polygon import INFINITY


def brute_phi_index(points):
    """Lattice points with positive coordinates on or under the principal polygon,
    counted straight from the lower envelope of the points."""
    pts = [(i, v) for i, v in points if v != INFINITY]
    low = min(v for _, v in pts)
    end = min(i for i, v in pts if v == low)
    top = max(v for _, v in pts)

    def envelope(x):
        return min(
            Fraction(vi * (j - x) + vj * (x - i), j - i) if j > i else Fraction(vi)
            for i, vi in pts
            for j, vj in pts
            if i <= x <= j
        )

    return sum(1 for x in range(1, end + 1) for y in range(1, top + 1) if y <= envelope(x))
