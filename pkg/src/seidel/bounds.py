"""Upper and lower bounds on equiangular line counts, and the bound tables.

Two classical ceilings anchor everything: the absolute bound d(d+1)/2 and
the angle-dependent relative bound d(1-a^2)/(1-d*a^2).  On top of those sit
the parity filter for many lines (``neumann_filter``), the assembled
best-known tables (``max_lines_table`` for all angles, ``n5_bounds`` for
angle 1/5), and the running lower-bound envelope ``best_known_lower``.

Every numeric entry carries a provenance string: either the name of an
operation in this package that produces or proves it, or "literature" for
values quoted from published tables that this package does not re-derive.
Quoted external values live in ``data/external_bounds.json``; bounds that
are only known symbolically (the SDP column B(d), the Dynkin threshold V)
are printed as symbols rather than invented numbers.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from math import isqrt
from typing import Optional, Sequence, Union

from . import spectra
from .errors import AngleOutOfRangeError, PreconditionFailsError

__all__ = [
    "absolute_bound",
    "absolute_equality_possible",
    "relative_bound",
    "relative_bound_info",
    "RelativeBoundResult",
    "TWO_EIGENVALUE_CONDITION",
    "neumann_filter",
    "even_eigenvalues_simple",
    "SymbolicCount",
    "BoundTableRow",
    "max_lines_table",
    "n5_bounds",
    "n5_table",
    "best_known_lower",
    "external_data",
    "DYNKIN_THRESHOLD_RANGE",
    "table_csv",
    "table_text",
]


def absolute_bound(d: int) -> int:
    """Most lines any angle allows in dimension d: d(d+1)/2.

    The Gram matrices of n lines span an n-dimensional space inside the
    d(d+1)/2-dimensional space of symmetric d x d matrices.
    """
    if d < 2:
        raise PreconditionFailsError(f"need d >= 2, got {d}")
    return d * (d + 1) // 2


def absolute_equality_possible(d: int) -> bool:
    """Necessary condition for attaining the absolute bound.

    Equality needs d = 2, 3 or d + 2 an odd perfect square.  The condition
    is not sufficient; ``external_data()`` lists dimensions where it holds
    but equality is known to fail.
    """
    if d < 2:
        raise PreconditionFailsError(f"need d >= 2, got {d}")
    if d in (2, 3):
        return True
    r = isqrt(d + 2)
    return r * r == d + 2 and r % 2 == 1


TWO_EIGENVALUE_CONDITION = "exactly two distinct Seidel eigenvalues"


@dataclass(frozen=True)
class RelativeBoundResult:
    value: int
    exact: Fraction
    # equality in the bound holds iff the Seidel matrix satisfies this
    equality_condition: str = TWO_EIGENVALUE_CONDITION

    @property
    def integral(self) -> bool:
        return self.exact.denominator == 1


def relative_bound_info(d: int, alpha) -> RelativeBoundResult:
    """Angle-aware ceiling: n <= d(1-a^2)/(1-d*a^2) for angle a <= 1/sqrt(d+2).

    Exact rational arithmetic throughout; the applicability condition is
    checked on squares so irrational thresholds never enter.  Equality holds
    exactly when the Seidel matrix has two distinct eigenvalues.
    """
    if d < 2:
        raise PreconditionFailsError(f"need d >= 2, got {d}")
    a = Fraction(alpha)
    if a <= 0:
        raise AngleOutOfRangeError(f"need alpha > 0, got {a}")
    # alpha <= 1/sqrt(d+2)  <=>  alpha^2 (d+2) <= 1
    if a * a * (d + 2) > 1:
        raise AngleOutOfRangeError(
            f"alpha = {a} exceeds 1/sqrt({d + 2}); the bound does not apply"
        )
    exact = d * (1 - a * a) / (1 - d * a * a)
    return RelativeBoundResult(exact.numerator // exact.denominator, exact)


def relative_bound(d: int, alpha) -> int:
    """Floor of the relative bound; see ``relative_bound_info``."""
    return relative_bound_info(d, alpha).value


def neumann_filter(n: int, d: int, alpha) -> bool:
    """Parity gate for crowded systems: n > 2d forces 1/alpha odd integral.

    Returns True when the parameters survive (including vacuously, n <= 2d)
    and False when they are impossible.
    """
    if n <= 2 * d:
        return True
    inv = 1 / Fraction(alpha)
    return inv.denominator == 1 and inv.numerator % 2 == 1


def even_eigenvalues_simple(spec: spectra.Spectrum) -> bool:
    """Spectral filter: every even integer Seidel eigenvalue is simple.

    Over GF(2) a Seidel matrix S of order n has S - 2k*I = J - I, whose rank
    is at least n - 1; the rational eigenspace of an even integer therefore
    has dimension at most 1.  Returns False when the spectrum violates that.
    """
    for value, mult in spec.pairs:
        v = Fraction(value) if not isinstance(value, (int, Fraction)) else value
        if isinstance(v, Fraction) and v.denominator != 1:
            continue
        if int(v) % 2 == 0 and mult > 1:
            return False
    return True


@dataclass(frozen=True)
class SymbolicCount:
    """A bound known only as a symbol (B(d), V), with optional numeric range."""

    expr: str
    lo: Optional[int] = None
    hi: Optional[int] = None

    def __str__(self) -> str:
        return self.expr


Count = Union[int, SymbolicCount]


@dataclass(frozen=True)
class BoundTableRow:
    """One dimension's best known window, with provenance for both ends."""

    d: int
    lower: int
    upper: Count
    lower_source: str
    upper_source: str
    angles: tuple = ()

    def __post_init__(self):
        if isinstance(self.upper, int) and self.lower > self.upper:
            raise PreconditionFailsError(
                f"d={self.d}: lower {self.lower} exceeds upper {self.upper}"
            )

    @property
    def exact(self) -> bool:
        return isinstance(self.upper, int) and self.lower == self.upper

    def window(self) -> str:
        if self.exact:
            return str(self.lower)
        return f"{self.lower}-{self.upper}"


# Best known bounds on the number of equiangular lines, any angle, as
# (d_lo, d_hi, lower, upper, angles, lower_source, upper_source).
# "literature" marks values quoted rather than re-derived here.
_MAX_LINES_ROWS = (
    (2, 2, 3, 3, ("2",), "plane trisection", "absolute_bound (tight)"),
    (3, 3, 6, 6, ("sqrt(5)",), "icosahedron diagonals", "absolute_bound (tight)"),
    (4, 4, 6, 6, ("sqrt(5)", "3"), "icosahedron diagonals", "literature"),
    (5, 5, 10, 10, ("3",), "literature", "literature"),
    (6, 6, 16, 16, ("3",), "literature", "literature"),
    (7, 13, 28, 28, ("3",), "literature", "literature"),
    (14, 14, 28, 29, ("3", "5"), "two_graph_36_deletion_system",
     "dimension_ceiling_proof"),
    (15, 15, 36, 36, ("5",), "regular_two_graph_36", "literature"),
    (16, 16, 40, 41, ("5",), "literature", "dimension_ceiling_proof"),
    (17, 17, 48, 50, ("5",), "netto_sts19_system", "literature"),
    (18, 18, 48, 61, ("5",), "netto_sts19_system (embedded)", "literature"),
    (19, 19, 72, 76, ("5",), "witt_octad_system", "literature"),
    (20, 20, 90, 96, ("5",), "literature", "literature"),
    (21, 21, 126, 126, ("5",), "literature", "literature"),
    (22, 22, 176, 176, ("5",), "literature", "literature"),
    (23, 41, 276, 276, ("5",), "literature", "literature"),
)


def max_lines_table(d_lo: int = 2, d_hi: int = 41) -> list:
    """Best known bounds on equiangular line counts for 2 <= d <= 41."""
    if not 2 <= d_lo <= d_hi <= 41:
        raise PreconditionFailsError(
            f"table covers 2..41, got {d_lo}..{d_hi}"
        )
    rows = []
    for lo, hi, lower, upper, angles, src_lo, src_up in _MAX_LINES_ROWS:
        for d in range(max(lo, d_lo), min(hi, d_hi) + 1):
            rows.append(BoundTableRow(d, lower, upper, src_lo, src_up, angles))
    return rows


# Reported range for the order V beyond which every Seidel matrix with
# smallest eigenvalue -5 switches to a Dynkin ambient graph.
DYNKIN_THRESHOLD_RANGE = (2486, 45374)


def external_data() -> dict:
    """Quoted literature values shipped with the package (not re-derived)."""
    path = resources.files(__package__) / "data" / "external_bounds.json"
    return json.loads(path.read_text())


def _no_22_lines_in_dim12() -> bool:
    """22 lines at angle 1/5 in dimension 12 are impossible.

    Order 22 is even, so det S = 1 - n = -21 is odd (mod 4) and S has no
    even integer eigenvalues; mu = 4 then has multiplicity 0, violating the
    eigenvalue-concentration bound.
    """
    fb = spectra.forced_spectrum_bound(22, 12, -5, 4, 0)
    return not fb.holds


# Exact values of the angle-1/5 table for 5 <= d <= 22, with sources.
_N5_SMALL = {
    5: (6, 6, "tensor_blowup(J2 - I2, 3)", "relative_bound"),
    6: (7, 7, "dynkin_triangles(6)", "relative_bound"),
    7: (9, 9, "tensor_blowup(J3 - I3, 3)", "relative_bound"),
    8: (10, 10, "dynkin_triangles(8)", "classification of orders <= 12"),
    9: (12, 12, "tensor_blowup(J4 - I4, 3)",
        "extend_system (no 13th line on the four order-12 classes)"),
    10: (16, 16, "hadamard16_system", "relative_bound (equality)"),
    11: (18, 18, "extend_system on hadamard16_system", "relative_bound"),
    12: (20, 21, "delete_switchable_clique(conference_two_graph(25), 6)",
         "relative_bound minus excluded order 22"),
    13: (26, 26, "conference_two_graph(25)", "relative_bound (equality)"),
    14: (28, 29, "two_graph_36_deletion_system", "dimension_ceiling_proof"),
    15: (36, 36, "regular_two_graph_36", "relative_bound (equality)"),
    16: (40, 41, "literature", "dimension_ceiling_proof"),
    17: (48, 50, "netto_sts19_system", "literature"),
    18: (48, 61, "netto_sts19_system (embedded)", "literature"),
    19: (72, 76, "witt_octad_system", "literature"),
    20: (90, 96, "literature", "literature"),
    21: (126, 126, "literature", "literature"),
    22: (176, 176, "literature", "literature"),
}


def n5_bounds(d: int, V: Optional[int] = None) -> BoundTableRow:
    """Best known window for lines at angle exactly 1/5 in dimension d.

    The threshold order V that switches the tail regimes is unknown; pass a
    number to commit to one, otherwise tail rows stay symbolic in V.
    """
    if d < 2:
        raise PreconditionFailsError(f"need d >= 2, got {d}")
    angles = ("5",)
    if d <= 4:
        rb = relative_bound(d, Fraction(1, 5))
        if rb != d:
            raise PreconditionFailsError(f"relative bound at d={d} moved off {d}")
        return BoundTableRow(d, d, d, "unit vectors with Gram I + (J-I)/5",
                             "relative_bound", angles)
    if d <= 22:
        lower, upper, src_lo, src_up = _N5_SMALL[d]
        if d == 12:
            # upper = relative bound 22 with the top order excluded
            if relative_bound(12, Fraction(1, 5)) != 22 or not _no_22_lines_in_dim12():
                raise PreconditionFailsError("order-22 exclusion failed to verify")
        return BoundTableRow(d, lower, upper, src_lo, src_up, angles)
    if d <= 60:
        src_up = ("relative_bound (equality)" if d == 23
                  else "literature (SDP tables)")
        if d == 23 and relative_bound(23, Fraction(1, 5)) != 276:
            raise PreconditionFailsError("relative bound at d=23 moved off 276")
        return BoundTableRow(d, 276, 276, "literature (276-line system)",
                             src_up, angles)
    if d <= 136:
        return BoundTableRow(
            d, 276, SymbolicCount("B(d)"),
            "literature (276-line system)",
            "literature (SDP tables; values not bundled)", angles)
    if d <= 185:
        return BoundTableRow(d, 276, absolute_bound(d),
                             "literature (276-line system)",
                             "absolute_bound", angles)
    # d >= 186: triangle forests / blowups meet the Dynkin ceiling
    lower = 3 * (d - 1) // 2
    src_lo = ("dynkin_triangles" if d % 2 == 0
              else "tensor_blowup(J_((d-1)/2) - I, 3)")
    if V is not None:
        if V < 1:
            raise PreconditionFailsError(f"threshold must be positive, got {V}")
        if 3 * d >= 2 * V + 5:
            return BoundTableRow(d, lower, lower, src_lo,
                                 "Dynkin ambient classification", angles)
        return BoundTableRow(d, lower, V, src_lo,
                             "Dynkin threshold (given V)", angles)
    v_lo, v_hi = DYNKIN_THRESHOLD_RANGE
    if 3 * d >= 2 * v_hi + 5:
        # beyond every admissible threshold: the tail value is unconditional
        return BoundTableRow(d, lower, lower, src_lo,
                             "Dynkin ambient classification", angles)
    if 3 * d <= 2 * v_lo + 2:
        upper = SymbolicCount("V", v_lo, v_hi)
    else:
        upper = SymbolicCount("max(V, floor(3(d-1)/2))", lower, v_hi)
    return BoundTableRow(d, lower, upper, src_lo,
                         "Dynkin threshold (symbolic V)", angles)


def n5_table(d_lo: int = 2, d_hi: int = 22, V: Optional[int] = None) -> list:
    """Angle-1/5 windows for a dimension range; see ``n5_bounds``."""
    if not 2 <= d_lo <= d_hi:
        raise PreconditionFailsError(f"bad range {d_lo}..{d_hi}")
    return [n5_bounds(d, V) for d in range(d_lo, d_hi + 1)]


def best_known_lower(d: int) -> int:
    """Envelope of the constructions' line counts for 2 <= d <= 96."""
    if not 2 <= d <= 96:
        raise PreconditionFailsError(f"envelope kept for 2..96, got {d}")
    if d <= 41:
        for lo, hi, lower, *_ in _MAX_LINES_ROWS:
            if lo <= d <= hi:
                return lower
    from .constructions import mub_dimension_lower

    # the 276-line system embeds upward; unbiased bases take over later
    return max(276, mub_dimension_lower(d))


def table_csv(rows: Sequence[BoundTableRow]) -> str:
    """CSV form of a bound table; provenance columns always included."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["d", "lower", "upper", "exact", "angles",
                "lower_source", "upper_source"])
    for r in rows:
        w.writerow([r.d, r.lower, str(r.upper), "yes" if r.exact else "no",
                    " ".join(r.angles), r.lower_source, r.upper_source])
    return buf.getvalue()


def table_text(rows: Sequence[BoundTableRow]) -> str:
    """Aligned text form of a bound table; provenance columns included."""
    header = ("d", "lines", "angles (1/a)", "lower from", "upper from")
    cells = [header]
    for r in rows:
        cells.append((str(r.d), r.window(), " ".join(r.angles),
                      r.lower_source, r.upper_source))
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    lines = []
    for i, row in enumerate(cells):
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
        if i == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"
