"""Schubert varieties and the stratification of the cut locus.

A Schubert symbol for G_n(C^{n+m}) is a nondecreasing tuple
0 <= w(1) <= ... <= w(n) <= m.  Against a full flag C^1 ⊂ ... ⊂ C^N it
cuts out the variety of planes X with dim(X ∩ C^{w(i)+i}) >= i for all i,
and the open stratum where equality holds exactly at the jump positions of
w.  With the flag adapted to a base plane O (the complement of O appearing
as C^m), the cut locus of O is the variety of the single symbol
(m−1, m, ..., m): planes meeting the complement of O nontrivially.  Its
strata sort members by the exact intersection dimension.
"""

from dataclasses import dataclass

import numpy as np

from .errors import Malformed
from .subspaces import (
    DEFAULT_TOLERANCES,
    Plane,
    TolerancePolicy,
    base_point,
    complex_gaussian,
    intersection_dim,
    plane_equal,
    plane_new,
)


@dataclass(frozen=True)
class SchubertSymbol:
    """Nondecreasing integer tuple w with 0 <= w(i) <= m, of length n."""

    omega: tuple
    n: int
    m: int

    def sigma(self, i: int) -> int:
        """Flag index w(i) + i attached to position i (both 1-based)."""
        return self.omega[i - 1] + i


@dataclass(frozen=True)
class Flag:
    """A full flag C^1 ⊂ C^2 ⊂ ... ⊂ C^N, one Plane per dimension."""

    subspaces: tuple

    def at(self, k: int) -> Plane:
        """The k-dimensional member (1-based)."""
        return self.subspaces[k - 1]

    @property
    def ambient(self):
        return self.subspaces[0].ambient


def symbol_new(omega, n: int, m: int) -> SchubertSymbol:
    """Validate monotonicity and bounds, then build the symbol."""
    w = tuple(int(v) for v in omega)
    if len(w) != n:
        raise Malformed(f"symbol needs {n} entries, got {len(w)}")
    if any(w[i] > w[i + 1] for i in range(n - 1)):
        raise Malformed("symbol entries must be nondecreasing")
    if w and (w[0] < 0 or w[-1] > m):
        raise Malformed(f"symbol entries must lie in 0..{m}")
    return SchubertSymbol(omega=w, n=n, m=m)


def jump_indices(s: SchubertSymbol) -> tuple:
    """Positions where the symbol strictly increases, plus the last position.

    The symbol is constant on the half-open runs between consecutive
    returned indices; equality constraints for the open stratum are imposed
    exactly at these right endpoints.
    """
    n = s.n
    return tuple(
        i for i in range(1, n + 1) if i == n or s.omega[i - 1] < s.omega[i]
    )


def standard_flag_adapted(o: Plane, tol: TolerancePolicy = DEFAULT_TOLERANCES) -> Flag:
    """The coordinate flag adapted to the standard base plane.

    C^k = span(e_{n+1}, ..., e_{n+k}) for k <= m (so C^m is the orthogonal
    complement of O), then C^{m+j} adds e_1, ..., e_j on top.
    """
    n, big_n = o.basis.shape
    m = big_n - n
    if not plane_equal(o, base_point(n, big_n)):
        raise Malformed("the adapted flag is defined for the standard base plane")
    order = list(range(n, big_n)) + list(range(n))
    members = []
    for k in range(1, big_n + 1):
        frame = np.zeros((k, big_n), dtype=np.complex128)
        for row, col in enumerate(order[:k]):
            frame[row, col] = 1.0
        members.append(plane_new(frame, tol))
    return Flag(subspaces=tuple(members))


def variety_member(
    x: Plane, s: SchubertSymbol, f: Flag, tol: TolerancePolicy = DEFAULT_TOLERANCES
) -> bool:
    """Whether dim(X ∩ C^{w(i)+i}) >= i holds for every position i."""
    if x.n != s.n or x.ambient != s.n + s.m:
        raise Malformed("plane and symbol sizes disagree")
    return all(
        intersection_dim(x, f.at(s.sigma(i)), tol) >= i for i in range(1, s.n + 1)
    )


def stratum_member(
    x: Plane, s: SchubertSymbol, f: Flag, tol: TolerancePolicy = DEFAULT_TOLERANCES
) -> bool:
    """Whether the intersection dimensions hit the symbol exactly.

    Equality dim(X ∩ C^{w(i)+i}) = i is required at each jump index; the
    remaining positions are then pinned automatically.
    """
    if x.n != s.n or x.ambient != s.n + s.m:
        raise Malformed("plane and symbol sizes disagree")
    return all(
        intersection_dim(x, f.at(s.sigma(i)), tol) == i for i in jump_indices(s)
    )


def symbol_vpl(p: int, l: int, n: int, m: int) -> SchubertSymbol:
    """The symbol (p−l, ..., p−l, m, ..., m) with l leading entries.

    Its variety collects the planes meeting C^p in at least l dimensions;
    requires 0 <= l <= min(n, p) and p <= m.
    """
    if not (0 <= l <= min(n, p)):
        raise Malformed("need 0 <= l <= min(n, p)")
    if p > m:
        raise Malformed("need p <= m for a valid symbol")
    return symbol_new((p - l,) * l + (m,) * (n - l), n, m)


def codim(s: SchubertSymbol) -> int:
    """Complex codimension of the variety: n m − sum(w)."""
    return s.n * s.m - sum(s.omega)


def cutlocus_stratification(n: int, m: int) -> list:
    """Symbols and descriptions of the strata making up the cut locus.

    For n = 1 the cut locus is a single projective space; for n > 1 it
    splits by the exact dimension l = 1..min(n, m) of the intersection
    with the complement of the base plane.
    """
    if n < 1 or m < 1:
        raise Malformed("need n, m >= 1")
    if n == 1:
        return [
            (
                symbol_vpl(m, 1, 1, m),
                f"the whole cut locus: a projective space CP^{m - 1}",
            )
        ]
    r = min(n, m)
    out = []
    for l in range(1, r + 1):
        s = symbol_vpl(m, l, n, m)
        if l < r:
            desc = f"planes meeting the base complement in exactly {l} dimensions"
        elif n == m:
            desc = "a single point: the full orthogonal complement of the base"
        else:
            desc = (
                f"planes meeting the base complement in exactly {r} dimensions; "
                f"a copy of G_{r}(C^{max(m, n)})"
            )
        out.append((s, desc))
    return out


def sample_intersecting_plane(
    n: int, m: int, l: int, rng, scale: float = 1.0
) -> Plane:
    """A random n-plane meeting the complement of the base in >= l dimensions.

    The first l frame rows are random vectors of the complement
    span(e_{n+1}, ..., e_N); the rest are generic, so the intersection
    dimension is exactly l almost surely.  Draws 2 n (n+m) reals from
    ``rng`` regardless of l, keeping seed streams aligned across strata.
    """
    if not (0 <= l <= min(n, m)):
        raise Malformed("need 0 <= l <= min(n, m)")
    big_n = n + m
    g = scale * complex_gaussian(rng, (n, big_n))
    g[:l, :n] = 0.0
    return plane_new(g)
