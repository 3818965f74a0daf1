"""Clifford algebra of spacetime, R_{1,3}, on dense 16-component multivectors.

Basis blades are indexed by a 4-bit mask: bit ``i`` set means the blade
contains the i-th orthonormal coframe 1-form, factors ordered by ascending
index.  The signature is fixed, eta = diag(+1, -1, -1, -1).

All products are table driven.  The sign/mask tables are built once from the
standard popcount-swap algorithm and are validated in the test suite against
a naive symbol-pushing expansion.
"""

from __future__ import annotations

import numpy as np

ETA = (1.0, -1.0, -1.0, -1.0)
DIM = 16
PSEUDO = 0b1111  # mask of the volume element

GRADE = np.array([bin(m).count("1") for m in range(DIM)], dtype=np.int64)

# reverse multiplies grade r by (-1)^(r(r-1)/2); involution by (-1)^r
REVERSE_SIGN = np.array([(-1.0) ** (g * (g - 1) // 2) for g in GRADE])
INVOLUTE_SIGN = np.array([(-1.0) ** g for g in GRADE])


def _reorder_sign(a: int, b: int) -> float:
    """Sign from sorting the concatenation of two ascending blades."""
    a >>= 1
    swaps = 0
    while a:
        swaps += bin(a & b).count("1")
        a >>= 1
    return -1.0 if swaps & 1 else 1.0


def _metric_factor(common: int) -> float:
    f = 1.0
    for i in range(4):
        if common & (1 << i):
            f *= ETA[i]
    return f


def _build_tables():
    mask = np.zeros((DIM, DIM), dtype=np.int64)
    sign = np.zeros((DIM, DIM))
    for a in range(DIM):
        for b in range(DIM):
            mask[a, b] = a ^ b
            sign[a, b] = _reorder_sign(a, b) * _metric_factor(a & b)
    return mask, sign


GP_MASK, GP_SIGN = _build_tables()

# structure tensor: gp(x, y)[k] = sum_{a^b=k} GP[a,b,k] x[a] y[b]
GP_TENSOR = np.zeros((DIM, DIM, DIM))
for _a in range(DIM):
    for _b in range(DIM):
        GP_TENSOR[_a, _b, GP_MASK[_a, _b]] = GP_SIGN[_a, _b]

# wedge keeps disjoint blades; contractions keep subset blades
WEDGE_TENSOR = np.zeros((DIM, DIM, DIM))
LCON_TENSOR = np.zeros((DIM, DIM, DIM))
RCON_TENSOR = np.zeros((DIM, DIM, DIM))
for _a in range(DIM):
    for _b in range(DIM):
        _k = GP_MASK[_a, _b]
        if _a & _b == 0:
            WEDGE_TENSOR[_a, _b, _k] = GP_SIGN[_a, _b]
        if _a & _b == _a:  # a subset of b: grade(b) - grade(a) part
            LCON_TENSOR[_a, _b, _k] = GP_SIGN[_a, _b]
        if _a & _b == _b:
            RCON_TENSOR[_a, _b, _k] = GP_SIGN[_a, _b]

# scalar product X.Y = <reverse(X) Y>_0: diagonal in the blade basis
SCALAR_DIAG = np.array([REVERSE_SIGN[m] * GP_SIGN[m, m] for m in range(DIM)])

# Hodge dual *X := reverse(X) _| tau, blade-wise
HODGE_MASK = np.array([m ^ PSEUDO for m in range(DIM)], dtype=np.int64)
HODGE_SIGN = np.array([REVERSE_SIGN[m] * GP_SIGN[m, PSEUDO] for m in range(DIM)])
# inverse: unstar(Y) per grade q carries -(-1)^q before another star
UNSTAR_SIGN = np.array(
    [-((-1.0) ** GRADE[m]) * REVERSE_SIGN[m] * GP_SIGN[m, PSEUDO] for m in range(DIM)]
)

# nonzero product triples, used by the jet-valued field layer
GP_TRIPLES = [
    (a, b, int(GP_MASK[a, b]), float(GP_SIGN[a, b]))
    for a in range(DIM)
    for b in range(DIM)
]


class Multivector:
    """Dense multivector over the orthonormal tetrad blade basis."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            self.coeffs = np.zeros(DIM)
        else:
            self.coeffs = np.asarray(coeffs, dtype=float).copy()
            if self.coeffs.shape != (DIM,):
                raise ValueError("multivector needs 16 coefficients")

    @classmethod
    def scalar(cls, value: float) -> "Multivector":
        m = cls()
        m.coeffs[0] = value
        return m

    @classmethod
    def basis(cls, mask: int, value: float = 1.0) -> "Multivector":
        m = cls()
        m.coeffs[mask] = value
        return m

    @classmethod
    def coframe(cls, a: int) -> "Multivector":
        """The a-th orthonormal coframe 1-form (upper index)."""
        return cls.basis(1 << a)

    @classmethod
    def volume(cls) -> "Multivector":
        return cls.basis(PSEUDO)

    def copy(self) -> "Multivector":
        return Multivector(self.coeffs)

    def __add__(self, other: "Multivector") -> "Multivector":
        return Multivector(self.coeffs + other.coeffs)

    def __sub__(self, other: "Multivector") -> "Multivector":
        return Multivector(self.coeffs - other.coeffs)

    def __neg__(self) -> "Multivector":
        return Multivector(-self.coeffs)

    def scale(self, s: float) -> "Multivector":
        return Multivector(self.coeffs * s)

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return self.gp(other)
        return self.scale(float(other))

    def __rmul__(self, other):
        return self.scale(float(other))

    def __xor__(self, other: "Multivector") -> "Multivector":
        return self.wedge(other)

    def gp(self, other: "Multivector") -> "Multivector":
        return Multivector(np.einsum("abk,a,b->k", GP_TENSOR, self.coeffs, other.coeffs))

    def wedge(self, other: "Multivector") -> "Multivector":
        return Multivector(np.einsum("abk,a,b->k", WEDGE_TENSOR, self.coeffs, other.coeffs))

    def left_contract(self, other: "Multivector") -> "Multivector":
        return Multivector(np.einsum("abk,a,b->k", LCON_TENSOR, self.coeffs, other.coeffs))

    def right_contract(self, other: "Multivector") -> "Multivector":
        return Multivector(np.einsum("abk,a,b->k", RCON_TENSOR, self.coeffs, other.coeffs))

    def scalar_product(self, other: "Multivector") -> float:
        return float(np.dot(SCALAR_DIAG * self.coeffs, other.coeffs))

    def commutator(self, other: "Multivector") -> "Multivector":
        return self.gp(other) - other.gp(self)

    def reverse(self) -> "Multivector":
        return Multivector(REVERSE_SIGN * self.coeffs)

    def grade_involution(self) -> "Multivector":
        return Multivector(INVOLUTE_SIGN * self.coeffs)

    def grade(self, r: int) -> "Multivector":
        out = np.where(GRADE == r, self.coeffs, 0.0)
        return Multivector(out)

    def grades(self) -> set[int]:
        return {int(g) for g, c in zip(GRADE, self.coeffs) if c != 0.0}

    def hodge(self) -> "Multivector":
        out = np.zeros(DIM)
        out[HODGE_MASK] = HODGE_SIGN * self.coeffs
        return Multivector(out)

    def unhodge(self) -> "Multivector":
        out = np.zeros(DIM)
        out[HODGE_MASK] = UNSTAR_SIGN * self.coeffs
        return Multivector(out)

    def norm(self) -> float:
        """Euclidean norm of the coefficient vector (not the algebra metric)."""
        return float(np.linalg.norm(self.coeffs))

    def __getitem__(self, mask: int) -> float:
        return float(self.coeffs[mask])

    def __eq__(self, other) -> bool:
        return isinstance(other, Multivector) and bool(np.array_equal(self.coeffs, other.coeffs))

    def approx_eq(self, other: "Multivector", tol: float = 1e-12) -> bool:
        return bool(np.all(np.abs(self.coeffs - other.coeffs) <= tol))

    def __repr__(self) -> str:
        names = _blade_names()
        parts = [
            f"{c:+g}*{names[m]}" if m else f"{c:+g}"
            for m, c in enumerate(self.coeffs)
            if c != 0.0
        ]
        return "Multivector(" + (" ".join(parts) if parts else "0") + ")"


def _blade_names():
    names = []
    for m in range(DIM):
        if m == 0:
            names.append("1")
        else:
            names.append("g" + "".join(str(i) for i in range(4) if m & (1 << i)))
    return names


def geometric_product(a: Multivector, b: Multivector) -> Multivector:
    return a.gp(b)


def wedge(a: Multivector, b: Multivector) -> Multivector:
    return a.wedge(b)


def scalar_product(a: Multivector, b: Multivector) -> float:
    return a.scalar_product(b)


def left_contraction(a: Multivector, b: Multivector) -> Multivector:
    return a.left_contract(b)


def right_contraction(a: Multivector, b: Multivector) -> Multivector:
    return a.right_contract(b)


def reverse(a: Multivector) -> Multivector:
    return a.reverse()


def grade_involution(a: Multivector) -> Multivector:
    return a.grade_involution()


def grade(a: Multivector, r: int) -> Multivector:
    return a.grade(r)


def hodge_star(a: Multivector) -> Multivector:
    return a.hodge()


def commutator(a: Multivector, b: Multivector) -> Multivector:
    return a.commutator(b)


def eta(a: int, b: int) -> float:
    return ETA[a] if a == b else 0.0
