"""Exact verifiers for the defining 6j identities and the Pachner moves.

The orthogonality condition

    sum_x (2x+1) {a b x; c d y} {c d x; a b y'}
        = delta_{yy'} delta_(ady) delta_(bcy) / (2y'+1)

and the pentagon identity

    sum_x (-1)^(phi+x) (2x+1) {a b x; c d p} {c d x; e f q} {e f x; b a r}
        = {p q r; f b c} {p q r; e a d},    phi = a+b+c+d+e+f+p+q+r

are evaluated exactly on both sides.  NOTE: the (2x+1) weight in the
pentagon sum is required for the identity to hold (it is false already
for the all-ones instance without it); the weighted form is therefore
the default.  The unweighted variant stays available through
literal_form=True so the discrepancy is observable rather than
silently patched.

The 2-3 move check is the pentagon identity rephrased in tetrahedral
terms; the 1-4 move check contracts the pentagon with the orthogonality
kernel in the p slot, which keeps every sum finite (no divergent volume
factor is ever introduced).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import IncompatibleRadicands, InvalidInstance, PhaseParityError
from .exactnum import Spin, SqrtRational
from .wigner import (
    TRIAD_SLOTS,
    sixj_or_zero_twice,
    triad_valid_twice,
)

__all__ = [
    "BEInstance",
    "ExactCheckResult",
    "FIVE_SYMBOLS",
    "X_FREE_TRIADS",
    "orthogonality_check",
    "be_check",
    "pachner_23_check",
    "pachner_14_check",
    "iter_orthogonality_grid",
    "iter_be_grid",
]

BE_SYMBOL_NAMES = ("a", "b", "c", "d", "e", "f", "p", "q", "r")

# the five symbols of the pentagon identity / the five quadrangles,
# each as (A, B, X, C, D, Y) slot names
FIVE_SYMBOLS = (
    ("a", "b", "x", "c", "d", "p"),
    ("c", "d", "x", "e", "f", "q"),
    ("e", "f", "x", "b", "a", "r"),
    ("p", "q", "r", "f", "b", "c"),
    ("p", "q", "r", "e", "a", "d"),
)


def _derive_triads():
    seen = {}
    for sym in FIVE_SYMBOLS:
        for i, j, k in TRIAD_SLOTS:
            names = (sym[i], sym[j], sym[k])
            seen.setdefault(frozenset(names), names)
    return tuple(sorted(seen.values()))


ALL_TRIADS = _derive_triads()
X_FREE_TRIADS = tuple(t for t in ALL_TRIADS if "x" not in t)
X_TRIADS = tuple(t for t in ALL_TRIADS if "x" in t)
assert len(ALL_TRIADS) == 10 and len(X_FREE_TRIADS) == 7


@dataclass(frozen=True)
class BEInstance:
    """The nine fixed spins of the pentagon identity."""

    a: Spin
    b: Spin
    c: Spin
    d: Spin
    e: Spin
    f: Spin
    p: Spin
    q: Spin
    r: Spin

    def __post_init__(self):
        bad = []
        for names in X_FREE_TRIADS:
            tv = tuple(getattr(self, n).twice for n in names)
            if not triad_valid_twice(*tv):
                bad.append(names)
        if bad:
            raise InvalidInstance(
                "invalid fixed triads: "
                + ", ".join("(" + "".join(t) + ")" for t in bad),
                triads=bad)

    @classmethod
    def from_twice(cls, t: tuple[int, ...]) -> "BEInstance":
        return cls(*(Spin(v) for v in t))

    def twice_tuple(self) -> tuple[int, ...]:
        return tuple(getattr(self, n).twice for n in BE_SYMBOL_NAMES)

    def spin_map(self) -> dict[str, Spin]:
        return {n: getattr(self, n) for n in BE_SYMBOL_NAMES}

    @property
    def phi_twice(self) -> int:
        return sum(self.twice_tuple())

    def __str__(self):
        return ("(" + ", ".join(f"{n}={getattr(self, n)}"
                                for n in BE_SYMBOL_NAMES) + ")")


@dataclass(frozen=True)
class ExactCheckResult:
    """Both sides of an exact identity check, plus their comparison."""

    lhs: SqrtRational
    rhs: SqrtRational
    equal: bool
    form: str
    detail: str = ""

    @property
    def diff(self) -> SqrtRational | None:
        """lhs - rhs when representable in one radicand, else None."""
        try:
            return self.lhs - self.rhs
        except IncompatibleRadicands:
            return None

    def to_json_dict(self) -> dict:
        return {
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "equal": self.equal,
            "form": self.form,
        }


def _result(lhs, rhs, form, detail="") -> ExactCheckResult:
    return ExactCheckResult(lhs, rhs, lhs == rhs, form, detail)


def _x_range(*triad_pairs):
    """Joint admissible twice-range for a slot appearing in given pairs."""
    parity = None
    lo, hi = 0, None
    for u, v in triad_pairs:
        if parity is None:
            parity = (u + v) % 2
        elif (u + v) % 2 != parity:
            return range(0)
        lo = max(lo, abs(u - v))
        hi = min(hi, u + v) if hi is not None else u + v
    if hi is None or lo > hi:
        return range(0)
    return range(lo, hi + 2, 2)


def orthogonality_check(a: Spin, b: Spin, c: Spin, d: Spin,
                        y: Spin, yp: Spin) -> ExactCheckResult:
    """Exact check of the dimension-weighted completeness relation."""
    ta, tb, tc, td, ty, typ = (a.twice, b.twice, c.twice, d.twice,
                               y.twice, yp.twice)
    lhs = SqrtRational.zero()
    for tx in _x_range((ta, tb), (tc, td)):
        term = (sixj_or_zero_twice((ta, tb, tx, tc, td, ty))
                * sixj_or_zero_twice((tc, td, tx, ta, tb, typ)))
        lhs = lhs + term * Fraction(tx + 1)
    if (ty == typ and triad_valid_twice(ta, td, ty)
            and triad_valid_twice(tb, tc, ty)):
        rhs = SqrtRational(Fraction(1, typ + 1))
    else:
        rhs = SqrtRational.zero()
    return _result(lhs, rhs, "orthogonality")


def _be_sides(inst: BEInstance, literal_form: bool):
    ta, tb, tc, td, te, tf, tp, tq, tr = inst.twice_tuple()
    phi = inst.phi_twice
    lhs = SqrtRational.zero()
    for tx in _x_range((ta, tb), (tc, td), (te, tf)):
        if (phi + tx) % 2:
            raise PhaseParityError(
                f"phi + x is half-integral for {inst} at x={tx}/2")
        sign = -1 if ((phi + tx) // 2) % 2 else 1
        weight = Fraction(sign) if literal_form else Fraction(sign * (tx + 1))
        term = (sixj_or_zero_twice((ta, tb, tx, tc, td, tp))
                * sixj_or_zero_twice((tc, td, tx, te, tf, tq))
                * sixj_or_zero_twice((te, tf, tx, tb, ta, tr)))
        lhs = lhs + term * weight
    rhs = (sixj_or_zero_twice((tp, tq, tr, tf, tb, tc))
           * sixj_or_zero_twice((tp, tq, tr, te, ta, td)))
    return lhs, rhs


def be_check(inst: BEInstance, literal_form: bool = False) -> ExactCheckResult:
    """Exact pentagon-identity check; literal_form drops the (2x+1) weight."""
    lhs, rhs = _be_sides(inst, literal_form)
    form = "pentagon-unweighted" if literal_form else "pentagon"
    return _result(lhs, rhs, form)


def pachner_23_check(inst: BEInstance,
                     literal_form: bool = False) -> ExactCheckResult:
    """The 2-3 move: three tetrahedra glued along x against two sharing a face."""
    lhs, rhs = _be_sides(inst, literal_form)
    form = "pachner-2-3" + ("-unweighted" if literal_form else "")
    return _result(
        lhs, rhs, form,
        detail="x-sum of the three x-tetrahedra vs the two-tetrahedron product")


def pachner_14_check(inst: BEInstance, p_prime: Spin) -> ExactCheckResult:
    """The 1-4 move as a finite contraction.

    Multiplies the pentagon x-sum by the orthogonality kernel pairing p
    with p_prime; the product collapses to the delta_{p p'}-filtered
    two-symbol product:

        [sum_x (2x+1) {a b x; c d p}{c d x; a b p'}] * [pentagon x-sum]
            = delta_{pp'} {p' q r; f b c}{p' q r; e a d}
              * delta_(adp') delta_(bcp') / (2p'+1)
    """
    ta, tb, tc, td, te, tf, tp, tq, tr = inst.twice_tuple()
    tpp = p_prime.twice

    ortho = SqrtRational.zero()
    for tx in _x_range((ta, tb), (tc, td)):
        term = (sixj_or_zero_twice((ta, tb, tx, tc, td, tp))
                * sixj_or_zero_twice((tc, td, tx, ta, tb, tpp)))
        ortho = ortho + term * Fraction(tx + 1)
    pentagon, _ = _be_sides(inst, literal_form=False)
    lhs = ortho * pentagon

    if (tp == tpp and triad_valid_twice(ta, td, tpp)
            and triad_valid_twice(tb, tc, tpp)):
        rhs = (sixj_or_zero_twice((tpp, tq, tr, tf, tb, tc))
               * sixj_or_zero_twice((tpp, tq, tr, te, ta, td))
               * Fraction(1, tpp + 1))
    else:
        rhs = SqrtRational.zero()
    return _result(lhs, rhs, "pachner-1-4",
                   detail=f"p'={p_prime}, contraction over x and the p slot")


def iter_orthogonality_grid(max_twice: int):
    """All (a, b, c, d, y, y') twice-tuples with entries <= max_twice."""
    rng = range(max_twice + 1)
    for ta in rng:
        for tb in rng:
            for tc in rng:
                for td in rng:
                    for ty in rng:
                        for typ in rng:
                            yield (ta, tb, tc, td, ty, typ)


def iter_be_grid(max_twice: int):
    """All valid nine-spin twice-tuples with entries <= max_twice.

    Enumerates constructively through the seven fixed triads, so every
    yielded tuple already satisfies the instance invariants.
    """
    rng = range(max_twice + 1)

    def couple(t1, t2):
        lo = abs(t1 - t2)
        hi = min(t1 + t2, max_twice)
        return range(lo, hi + 2, 2) if lo <= hi else range(0)

    for ta in rng:
        for td in rng:
            for tp in couple(ta, td):                # (adp)
                for tb in rng:
                    for tc in couple(tb, tp):        # (bcp)
                        for te in rng:
                            for tq in couple(td, te):        # (deq)
                                for tf in couple(tc, tq):    # (cfq)
                                    for tr in couple(te, ta):    # (ear)
                                        if not triad_valid_twice(tf, tb, tr):
                                            continue
                                        if not triad_valid_twice(tp, tq, tr):
                                            continue
                                        yield (ta, tb, tc, td, te,
                                               tf, tp, tq, tr)
