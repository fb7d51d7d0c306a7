"""The bracket of six lines: determinant form and its 24-monomial expansion.

Six lines, each spanned by an ordered pair of points (twelve points in
all), have a 6x6 matrix of Pluecker coordinates.  Its determinant vanishes
exactly when the lines are linearly dependent -- for a wrench system, at a
parallel singularity.

The same quantity expands into a signed sum of 24 monomials, each a
product of three brackets of four points.  The expansion is generated
mechanically from four tableau terms.  In every term each line's point
pair is either kept whole inside one bracket or split across two
brackets; every split pair is summed over its two assignments with
alternating sign.  With lines (ab, cd, ef, gh, ij, kl) the four terms are

    + [abcd][ef g. i.][h. j. kl]      splits {g,h} {i,j}
    - [ab c. e.][d. f. gh][ij kl]     splits {c,d} {e,f}
    + [ab c. e.][d. gh i.][f. j. kl]  splits {c,d} {e,f} {i,j}
    - [ab c. g.][d. ef i.][h. j. kl]  splits {c,d} {g,h} {i,j}

(a trailing dot marks the split letters).  The term signs above were
validated against exact integer determinants; the identity

    expand == KAPPA * det,    KAPPA = +1

is the module's central contract and is re-checked by the verification
suite on every run.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .projective import HomogeneousPoint, PlueckerLine, bracket4, join

#: Universal ratio expand / det; pinned empirically, hard-asserted in tests.
KAPPA = 1.0


@dataclass(frozen=True)
class LineSpan:
    """An ordered pair of projectively distinct points spanning a line."""

    first: HomogeneousPoint
    second: HomogeneousPoint

    def __post_init__(self):
        join(self.first, self.second)  # raises DegenerateLine if coincident

    def line(self) -> PlueckerLine:
        return join(self.first, self.second)


@dataclass(frozen=True)
class SuperbracketInput:
    """Six ordered line spans; the twelve points feed the expansion."""

    spans: tuple

    def __post_init__(self):
        if len(self.spans) != 6:
            raise ValueError(f"need exactly 6 spans, got {len(self.spans)}")

    def points(self):
        pts = []
        for s in self.spans:
            pts.append(s.first)
            pts.append(s.second)
        return pts


# Tableau terms: (sign, bracket letters, split pairs with their home brackets).
# Letters a..l name the 12 points in span order; pair (x, bx, y, by) says x
# sits in bracket bx and y in bracket by under the identity assignment.
_TABLEAU = (
    (+1, ("abcd", "efgi", "hjkl"), (("g", 1, "h", 2), ("i", 1, "j", 2))),
    (-1, ("abce", "dfgh", "ijkl"), (("c", 0, "d", 1), ("e", 0, "f", 1))),
    (+1, ("abce", "dghi", "fjkl"), (("c", 0, "d", 1), ("e", 0, "f", 2), ("i", 1, "j", 2))),
    (-1, ("abcg", "defi", "hjkl"), (("c", 0, "d", 1), ("g", 0, "h", 2), ("i", 1, "j", 2))),
)

_LETTERS = "abcdefghijkl"


def _build_monomials():
    monomials = []
    for sign0, brackets, pairs in _TABLEAU:
        for mask in range(1 << len(pairs)):
            brs = [list(b) for b in brackets]
            sign = sign0
            for k, (x, bx, y, by) in enumerate(pairs):
                if mask >> k & 1:
                    ix, iy = brs[bx].index(x), brs[by].index(y)
                    brs[bx][ix], brs[by][iy] = y, x
                    sign = -sign
            monomials.append(
                (sign, tuple(tuple(_LETTERS.index(c) for c in b) for b in brs)))
    return tuple(monomials)


#: The 24 signed bracket monomials, as (sign, three 4-tuples of point slots).
MONOMIALS = _build_monomials()
assert len(MONOMIALS) == 24


def plucker_matrix(inp: SuperbracketInput) -> np.ndarray:
    """6x6 matrix whose row i is the Pluecker coordinates of span i."""
    return np.array([s.line().coords() for s in inp.spans])


def superbracket_det(inp: SuperbracketInput) -> float:
    """Determinant of the six Pluecker coordinate vectors."""
    return float(np.linalg.det(plucker_matrix(inp)))


def superbracket_expand(inp: SuperbracketInput, monomials=MONOMIALS) -> float:
    """Signed sum of the 24 bracket monomials over the twelve points.

    Bracket values are cached per call (several monomials share brackets)
    and a monomial is abandoned as soon as one of its factors is exactly
    zero.
    """
    pts = inp.points()
    cache = {}
    total = 0.0
    for sign, brackets in monomials:
        product = float(sign)
        for key in brackets:
            value = cache.get(key)
            if value is None:
                i, j, k, l = key
                value = bracket4(pts[i], pts[j], pts[k], pts[l])
                cache[key] = value
            if value == 0.0:
                product = 0.0
                break
            product *= value
        total += product
    return total


def span_scale(inp: SuperbracketInput) -> float:
    """Magnitude gauge: product of the six spans' point-norm products."""
    total = 1.0
    for s in inp.spans:
        total *= s.first.scale() * s.second.scale()
    return total
