"""Matrix factorizations of polynomials and their morphisms.

A matrix factorization of a polynomial f is a pair of n x n matrices
(phi, psi) with phi*psi = psi*phi = f*I, both products checked exactly on
construction.  The library never inverts a matrix symbolically: both factors
are always supplied, and validation is two multiplications.

A morphism (phi1, psi1) -> (phi2, psi2) between factorizations of the same f
is a pair (alpha, beta) of n2 x n1 matrices making the two squares commute:

    alpha * phi1 = phi2 * beta        psi2 * alpha = beta * psi1

Morphism equality is component-wise matrix equality; several of the negative
results checked by this library hinge on matrices that are row-permutation
equivalent without being equal, so no weaker comparison is offered.

All values are immutable and safe to share between threads.
"""

from __future__ import annotations

import random

from .errors import (
    ComposabilityError,
    MfFileError,
    NotSquareError,
    PotentialMismatchError,
    ProductMismatchError,
    ShapeMismatchError,
    SizeMismatchError,
    SquareFailureError,
)
from .matrices import PolyMatrix, matrix_literal, parse_matrix
from .polynomials import ONE, Polynomial, parse_polynomial, random_polynomial


def _first_mismatch(a: PolyMatrix, b: PolyMatrix) -> tuple[int, int] | None:
    """Row-major coordinates of the first differing entry, or None."""
    if a == b:
        return None
    keys = {(i, j) for i, j, _ in a.items()} | {(i, j) for i, j, _ in b.items()}
    for i, j in sorted(keys):
        if a.entry(i, j) != b.entry(i, j):
            return (i, j)
    return None


class MatrixFactorization:
    """A validated pair (phi, psi) with phi*psi = psi*phi = potential*I."""

    __slots__ = ("potential", "phi", "psi", "size")

    def __init__(self, phi: PolyMatrix, psi: PolyMatrix, potential: Polynomial):
        if phi.rows != phi.cols:
            raise NotSquareError(f"phi is {phi.rows}x{phi.cols}")
        if psi.rows != psi.cols:
            raise NotSquareError(f"psi is {psi.rows}x{psi.cols}")
        if phi.rows != psi.rows:
            raise SizeMismatchError(
                f"phi is {phi.rows}x{phi.cols} but psi is {psi.rows}x{psi.cols}"
            )
        if not isinstance(potential, Polynomial):
            potential = Polynomial.constant(potential)
        n = phi.rows
        expected = potential * PolyMatrix.identity(n)
        mismatch = _first_mismatch(phi @ psi, expected)
        if mismatch is not None:
            raise ProductMismatchError("phi*psi", mismatch)
        mismatch = _first_mismatch(psi @ phi, expected)
        if mismatch is not None:
            raise ProductMismatchError("psi*phi", mismatch)
        object.__setattr__(self, "potential", potential)
        object.__setattr__(self, "phi", phi)
        object.__setattr__(self, "psi", psi)
        object.__setattr__(self, "size", n)

    def syzygy(self) -> "MatrixFactorization":
        """Swap the two factors; an involution preserving potential and size."""
        return MatrixFactorization(self.psi, self.phi, self.potential)

    def identity_morphism(self) -> "MfMorphism":
        eye = PolyMatrix.identity(self.size)
        return MfMorphism(self, self, eye, eye)

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, MatrixFactorization):
            return NotImplemented
        return (
            self.size == other.size
            and self.potential == other.potential
            and self.phi == other.phi
            and self.psi == other.psi
        )

    __hash__ = None

    def __repr__(self) -> str:
        return (
            f"MatrixFactorization(size={self.size}, potential={self.potential})"
        )


def mf_new(
    phi: PolyMatrix, psi: PolyMatrix, potential: Polynomial
) -> MatrixFactorization:
    return MatrixFactorization(phi, psi, potential)


def mf_equal(x: MatrixFactorization, y: MatrixFactorization) -> bool:
    return x == y


def syzygy(x: MatrixFactorization) -> MatrixFactorization:
    return x.syzygy()


class MfMorphism:
    """A validated morphism between two factorizations of the same potential."""

    __slots__ = ("source", "target", "alpha", "beta")

    def __init__(
        self,
        source: MatrixFactorization,
        target: MatrixFactorization,
        alpha: PolyMatrix,
        beta: PolyMatrix,
    ):
        if source.potential != target.potential:
            raise PotentialMismatchError(
                f"source potential {source.potential} != target potential {target.potential}"
            )
        shape = (target.size, source.size)
        if (alpha.rows, alpha.cols) != shape or (beta.rows, beta.cols) != shape:
            raise ShapeMismatchError(
                f"morphism components must be {shape[0]}x{shape[1]}"
            )
        if alpha @ source.phi != target.phi @ beta:
            raise SquareFailureError("phi-square")
        if target.psi @ alpha != beta @ source.psi:
            raise SquareFailureError("psi-square")
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    @staticmethod
    def identity(x: MatrixFactorization) -> "MfMorphism":
        return x.identity_morphism()

    def compose(self, inner: "MfMorphism") -> "MfMorphism":
        """self o inner (apply ``inner`` first)."""
        if inner.target != self.source:
            raise ComposabilityError("inner.target != outer.source")
        return MfMorphism(
            inner.source,
            self.target,
            self.alpha @ inner.alpha,
            self.beta @ inner.beta,
        )

    def is_nonzero(self) -> bool:
        return not (self.alpha.is_zero_matrix() and self.beta.is_zero_matrix())

    def __eq__(self, other: object) -> bool:
        # Component-wise matrix equality only; the stated endpoints do not
        # participate.  Two equal-matrix morphisms with different (equal-sized)
        # endpoints compare equal, which is what the axiom checks compare.
        if self is other:
            return True
        if not isinstance(other, MfMorphism):
            return NotImplemented
        return self.alpha == other.alpha and self.beta == other.beta

    __hash__ = None

    def __repr__(self) -> str:
        return (
            f"MfMorphism({self.source.size} -> {self.target.size}, "
            f"potential={self.source.potential})"
        )


def morphism_new(
    source: MatrixFactorization,
    target: MatrixFactorization,
    alpha: PolyMatrix,
    beta: PolyMatrix,
) -> MfMorphism:
    return MfMorphism(source, target, alpha, beta)


def morphism_identity(x: MatrixFactorization) -> MfMorphism:
    return x.identity_morphism()


def morphism_compose(outer: MfMorphism, inner: MfMorphism) -> MfMorphism:
    return outer.compose(inner)


# ---------------------------------------------------------------------------
# sampling objects of MF(1)


def _elementary_step(rng: random.Random, n: int) -> tuple[PolyMatrix, PolyMatrix]:
    """A random elementary unimodular matrix together with its inverse."""
    kinds = ["transvection", "swap", "scale"] if n > 1 else ["scale"]
    kind = rng.choice(kinds)
    eye = {(k, k): ONE for k in range(n)}
    if kind == "transvection":
        i = rng.randrange(n)
        j = rng.randrange(n)
        while j == i:
            j = rng.randrange(n)
        p = random_polynomial(rng, max_degree=2, max_terms=2, allow_zero=False)
        fwd = dict(eye)
        fwd[(i, j)] = p
        inv = dict(eye)
        inv[(i, j)] = -p
        return PolyMatrix(n, n, fwd), PolyMatrix(n, n, inv)
    if kind == "swap":
        i = rng.randrange(n)
        j = rng.randrange(n)
        while j == i:
            j = rng.randrange(n)
        entries = dict(eye)
        del entries[(i, i)]
        del entries[(j, j)]
        entries[(i, j)] = ONE
        entries[(j, i)] = ONE
        swap = PolyMatrix(n, n, entries)
        return swap, swap
    # scale a row by -1 (the only rational units stable under inversion
    # without leaving integer matrices are +-1)
    i = rng.randrange(n)
    entries = dict(eye)
    entries[(i, i)] = Polynomial.constant(-1)
    scale = PolyMatrix(n, n, entries)
    return scale, scale


def random_mf1(seed: int, size: int, num_elementary: int) -> MatrixFactorization:
    """A seeded random object (M, M^-1) of MF(1).

    M is a product of elementary unimodular matrices (row transvections with
    polynomial multipliers, row swaps, -1 scalings); the inverse is
    accumulated as the reversed product of elementary inverses, so the result
    always passes validation.
    """
    rng = random.Random(seed)
    m = PolyMatrix.identity(size)
    m_inv = PolyMatrix.identity(size)
    for _ in range(num_elementary):
        step, step_inv = _elementary_step(rng, size)
        m = step @ m
        m_inv = m_inv @ step_inv
    return MatrixFactorization(m, m_inv, ONE)


# ---------------------------------------------------------------------------
# factorization file format
#
#   # comment
#   potential = x^2 + y^2
#   phi = [[x, -y], [y, x]]
#   psi = [[x, y], [-y, x]]


def factorization_to_text(x: MatrixFactorization) -> str:
    return (
        f"potential = {x.potential}\n"
        f"phi = {matrix_literal(x.phi)}\n"
        f"psi = {matrix_literal(x.psi)}\n"
    )


def factorization_from_text(text: str) -> MatrixFactorization:
    """Parse the line-oriented factorization format; validation included."""
    fields: dict[str, object] = {}
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        last_line = lineno
        if "=" not in line:
            raise MfFileError("expected 'key = value'", lineno)
        key, _, value = line.partition("=")
        key = key.strip()
        if key not in ("potential", "phi", "psi"):
            raise MfFileError(f"unknown key {key!r}", lineno)
        if key in fields:
            raise MfFileError(f"duplicate key {key!r}", lineno)
        try:
            if key == "potential":
                fields[key] = parse_polynomial(value.strip())
            else:
                fields[key] = parse_matrix(value.strip())
        except Exception as exc:
            raise MfFileError(str(exc), lineno) from exc
    for key in ("potential", "phi", "psi"):
        if key not in fields:
            raise MfFileError(f"missing key {key!r}", max(last_line, 1))
    return MatrixFactorization(fields["phi"], fields["psi"], fields["potential"])
