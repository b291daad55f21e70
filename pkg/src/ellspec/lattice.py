"""Intersection calculus on a pair of rational elliptic surfaces.

The Picard lattice of each surface is modeled in the blowup basis
(l, e1, ..., e9) with intersection form diag(1, -1, ..., -1).  Two surfaces
named B and B' carry the same basis; classes from different surfaces never
pair.  On top of the raw lattice this module provides the named classes used
throughout the package (fiber f, sections, I2-fiber components, the
polarization frame (f, e1, xi), and the m-classes), an ampleness certificate
for polarizations in the (f, e1, xi) frame, an effectivity descent, and an
integral-point decision procedure for affine subspaces of the lattice.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg
from .errors import SpanError, SurfaceMismatchError

RANK = 10
BASIS = ("l", "e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8", "e9")
GRAM_DIAG = (1, -1, -1, -1, -1, -1, -1, -1, -1, -1)


class Surface(Enum):
    B = "B"
    BPRIME = "Bprime"


@dataclass(frozen=True)
class DivisorClass:
    """A rational divisor class on one of the two surfaces."""

    surface: Surface
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if len(coeffs) != RANK:
            raise ValueError(f"expected {RANK} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        _require_same_surface(self, other)
        return DivisorClass(self.surface, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        _require_same_surface(self, other)
        return DivisorClass(self.surface, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(self.surface, tuple(-a for a in self.coeffs))

    def __mul__(self, scalar) -> "DivisorClass":
        s = Fraction(scalar)
        return DivisorClass(self.surface, tuple(s * a for a in self.coeffs))

    __rmul__ = __mul__

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def __str__(self) -> str:
        terms = []
        for name, c in zip(BASIS, self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            body = name if mag == 1 else f"{mag}*{name}"
            terms.append(("- " if c < 0 else "+ ") + body)
        if not terms:
            return "0"
        head = terms[0][2:] if terms[0].startswith("+ ") else "-" + terms[0][2:]
        return " ".join([head] + terms[1:])


def _require_same_surface(a: DivisorClass, b: DivisorClass) -> None:
    if a.surface is not b.surface:
        raise SurfaceMismatchError(
            f"classes live on different surfaces: {a.surface.value} vs {b.surface.value}"
        )


def zero_class(surface: Surface) -> DivisorClass:
    return DivisorClass(surface, (Fraction(0),) * RANK)


def basis_class(surface: Surface, name: str) -> DivisorClass:
    idx = BASIS.index(name)
    return DivisorClass(surface, tuple(Fraction(int(i == idx)) for i in range(RANK)))


def intersect(a: DivisorClass, b: DivisorClass) -> Fraction:
    """Intersection number of two classes on the same surface."""
    _require_same_surface(a, b)
    return sum(
        (g * x * y for g, x, y in zip(GRAM_DIAG, a.coeffs, b.coeffs)),
        Fraction(0),
    )


def _build_named(surface: Surface) -> dict[str, DivisorClass]:
    l = basis_class(surface, "l")
    e = {i: basis_class(surface, f"e{i}") for i in range(1, 10)}
    f = 3 * l - sum(e.values(), zero_class(surface))
    n1 = e[8] - e[9]
    o2 = e[7] + e[8] + e[9] + f - l
    named = {
        "l": l,
        **{f"e{i}": e[i] for i in range(1, 10)},
        "f": f,
        "e": e[9],  # the zero section
        "zeta": e[1],  # the auxiliary section of the polarization frame
        "n1": n1,
        "o1": f - n1,
        "o2": o2,
        "n2": f - o2,
        "xi": e[4] - e[5] + e[9] + f,
        "m1": e[4] - e[5],
        "m2": e[4] - e[6],
        "m3": 3 * l - 2 * (e[4] + e[5] + e[6]) - 3 * e[7],
    }
    return named


_NAMED = {surface: _build_named(surface) for surface in Surface}
NAMED_CLASS_NAMES = tuple(_NAMED[Surface.B])


def named_class(surface: Surface, name: str) -> DivisorClass:
    """One of the distinguished classes (fiber, sections, I2 components, ...)."""
    try:
        return _NAMED[surface][name]
    except KeyError:
        raise ValueError(f"unknown class name {name!r}; known: {', '.join(NAMED_CLASS_NAMES)}") from None


def named_combination(surface: Surface, terms: dict[str, object]) -> DivisorClass:
    """Linear combination of named classes, e.g. {"e": 1, "zeta": 1, "f": 5}."""
    acc = zero_class(surface)
    for name, coeff in terms.items():
        acc = acc + Fraction(coeff) * named_class(surface, name)
    return acc


PairingMatrix = tuple[tuple[Fraction, ...], ...]


def pairing_table(classes: Sequence[DivisorClass]) -> PairingMatrix:
    """Symmetric matrix of pairwise intersection numbers."""
    return tuple(tuple(intersect(a, b) for b in classes) for a in classes)


# === the (f, e1, xi) polarization frame ===


def fxi_coordinates(d: DivisorClass) -> tuple[Fraction, Fraction, Fraction] | None:
    """Coordinates (a, b, c) with d = a*f + b*e1 + c*xi, or None if outside."""
    frame = [named_class(d.surface, n) for n in ("f", "e1", "xi")]
    columns = [list(col) for col in zip(*(v.coeffs for v in frame))]
    sol = linalg.solve_rational(columns, list(d.coeffs))
    if sol is None:
        return None
    return sol[0], sol[1], sol[2]


@dataclass(frozen=True)
class AmplenessCertificate:
    """Positivity witnesses for h = a*f + b*e1 + c*xi.

    The witnesses are the pairings against the extremal curve classes of the
    frame plus the self-intersection; h is ample iff every witness is
    positive, which happens exactly when a, b, c > 0 and a > |b - c|.
    """

    ample: bool
    pairing_e1: Fraction
    pairing_xi: Fraction
    pairing_f: Fraction
    pairing_n: Fraction
    pairing_o: Fraction
    self_intersection: Fraction

    def witnesses(self) -> tuple[Fraction, ...]:
        return (
            self.pairing_e1,
            self.pairing_xi,
            self.pairing_f,
            self.pairing_n,
            self.pairing_o,
            self.self_intersection,
        )


def is_ample_fxi(a: int, b: int, c: int) -> AmplenessCertificate:
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    cert = AmplenessCertificate(
        ample=bool(a > 0 and b > 0 and c > 0 and a > abs(b - c)),
        pairing_e1=a - b + c,
        pairing_xi=a + b - c,
        pairing_f=b + c,
        pairing_n=c,
        pairing_o=b,
        self_intersection=2 * (a * b + a * c + b * c) - b * b - c * c,
    )
    # the two characterizations agree; keep them cross-checked
    assert cert.ample == all(w > 0 for w in cert.witnesses())
    return cert


# === effectivity descent in the (e1, xi, f) span ===

NOT_EFFECTIVE = "not-effective"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class DescentStep:
    subtracted: str
    result: DivisorClass


@dataclass(frozen=True)
class DescentCertificate:
    start: DivisorClass
    steps: tuple[DescentStep, ...]
    terminal: DivisorClass
    verdict: str


def descent_not_effective(d: DivisorClass) -> DescentCertificate:
    """Decide non-effectivity of d = A*e1 + B*xi + C*f by descent.

    Subtracting an irreducible class of negative self-intersection that pairs
    negatively with d preserves effectivity, so once the fiber pairing goes
    negative the original class cannot have been effective.  Requires integer
    coordinates in the (e1, xi, f) span.
    """
    frame = [named_class(d.surface, n) for n in ("e1", "xi", "f")]
    columns = [list(col) for col in zip(*(v.coeffs for v in frame))]
    coords = linalg.solve_rational(columns, list(d.coeffs))
    if coords is None:
        raise SpanError("class is outside span{e1, xi, f}")
    if any(c.denominator != 1 for c in coords):
        raise ValueError("descent requires integer coordinates in the (e1, xi, f) span")

    e1, xi, f = frame
    steps: list[DescentStep] = []
    current = d
    while True:
        if intersect(current, f) < 0:
            verdict = NOT_EFFECTIVE
            break
        if intersect(current, xi) < 0:
            current = current - xi
            steps.append(DescentStep("xi", current))
            continue
        if intersect(current, e1) < 0:
            current = current - e1
            steps.append(DescentStep("e1", current))
            continue
        verdict = INCONCLUSIVE
        break
    return DescentCertificate(start=d, steps=tuple(steps), terminal=current, verdict=verdict)


# === integral points on affine subspaces ===


@dataclass(frozen=True)
class IntegralPointResult:
    """Outcome of the integral-point decision for offset + span_Q(...).

    When no integral point exists, ``obstruction`` is an integer functional
    (coordinate vector) vanishing on the span whose value on the offset is
    not an integer.  When one exists, ``point`` is an explicit integral
    representative.
    """

    exists: bool
    point: DivisorClass | None
    obstruction: tuple[int, ...] | None
    obstruction_value: Fraction | None


def _default_obstruction_offset() -> DivisorClass:
    return Fraction(-1, 2) * named_class(Surface.B, "e1")


def _default_obstruction_span() -> tuple[DivisorClass, ...]:
    n = lambda name: named_class(Surface.B, name)
    return (
        n("f"),
        n("e9"),
        n("e4") - n("e5"),
        n("e4") - n("e6"),
        n("m3"),
        n("l") - n("e7") - 2 * n("e8"),
    )


def invariant_subspace_has_integral_point(
    offset: DivisorClass | None = None,
    span: Iterable[DivisorClass] | None = None,
) -> IntegralPointResult:
    """Decide whether offset + span_Q(...) meets the integer lattice.

    Defaults to the subspace of involution-invariant classes that the
    bundle-existence obstruction lives on.  A point t lies in Z^10 + V
    exactly when every integer functional vanishing on V takes an integer
    value on t; the functionals are enumerated through a saturated basis of
    the annihilator lattice, so the criterion is complete in both directions.
    """
    t = offset if offset is not None else _default_obstruction_offset()
    vectors = tuple(span) if span is not None else _default_obstruction_span()
    for v in vectors:
        _require_same_surface(t, v)

    rows = [list(v.coeffs) for v in vectors]
    annihilators = linalg.kernel_integer(rows) if rows else [
        [int(i == j) for j in range(RANK)] for i in range(RANK)
    ]
    for w in annihilators:
        value = linalg.dot(w, t.coeffs)
        if value.denominator != 1:
            return IntegralPointResult(
                exists=False,
                point=None,
                obstruction=tuple(w),
                obstruction_value=value,
            )
    if not annihilators:
        point = t
    else:
        target = [int(linalg.dot(w, t.coeffs)) for w in annihilators]
        solution = linalg.solve_integer(annihilators, target)
        # a saturated annihilator basis always maps Z^10 onto Z^r
        assert solution is not None
        point = DivisorClass(t.surface, tuple(Fraction(x) for x in solution))
    return IntegralPointResult(exists=True, point=point, obstruction=None, obstruction_value=None)


# === the m-class subspace ===


def m_space_check(m: DivisorClass) -> bool:
    """Whether m lies in span_Q{m1, m2, m3} and pairs to zero with the
    section sum, the fiber, and the I2 component sum."""
    if m.surface is not Surface.BPRIME:
        raise SurfaceMismatchError("m-space classes live on the second surface")
    span = [list(named_class(Surface.BPRIME, name).coeffs) for name in ("m1", "m2", "m3")]
    if not linalg.in_span(span, list(m.coeffs)):
        return False
    esum = named_combination(Surface.BPRIME, {"e": 1, "zeta": 1})
    fiber = named_class(Surface.BPRIME, "f")
    comps = named_combination(Surface.BPRIME, {"n1": 1, "o2": 1})
    return all(intersect(m, other) == 0 for other in (esum, fiber, comps))
