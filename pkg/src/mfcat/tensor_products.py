"""Two tensor products of matrix factorizations.

For X = (phi, psi) of f at size n and X' = (phi', psi') of g at size m, both
constructions produce a factorization of size 2nm, but of different
potentials:

* additive (Yoshino) product, a factorization of f + g::

      ( [ phi (x) I_m    I_n (x) phi' ]   [ psi (x) I_m   -I_n (x) phi' ]
        [-I_n (x) psi'   psi (x) I_m  ] , [ I_n (x) psi'   phi (x) I_m  ] )

* multiplicative product, a factorization of f*g::

      ( (phi (x) phi') (+) (phi (x) phi') , (psi (x) psi') (+) (psi (x) psi') )

The multiplicative product also acts on morphisms (one-sided whiskering and a
full pairing), making it a bifunctor; those three constructions are validated
on the nose here.  The syzygy swap distributes over the multiplicative
product as a literal identity, which :func:`check_syzygy_identity` verifies;
:func:`check_syzygy_inequalities` records the literal inequalities that
distinguish it from the additive product's behaviour.

Variable disjointness between the two factors is deliberately not enforced;
identifying variables (in particular for potential 1) is a supported use.
"""

from __future__ import annotations

from .factorizations import MatrixFactorization, MfMorphism
from .matrices import PolyMatrix, block2x2, direct_sum, kronecker
from .reporting import FAIL, PASS, CheckReport


def _doubled(m: PolyMatrix) -> PolyMatrix:
    return direct_sum(m, m)


def yoshino_tensor(
    x: MatrixFactorization, y: MatrixFactorization
) -> MatrixFactorization:
    """The additive tensor product, a validated factorization of f + g."""
    eye_n = PolyMatrix.identity(x.size)
    eye_m = PolyMatrix.identity(y.size)
    first = block2x2(
        kronecker(x.phi, eye_m),
        kronecker(eye_n, y.phi),
        -kronecker(eye_n, y.psi),
        kronecker(x.psi, eye_m),
    )
    second = block2x2(
        kronecker(x.psi, eye_m),
        -kronecker(eye_n, y.phi),
        kronecker(eye_n, y.psi),
        kronecker(x.phi, eye_m),
    )
    return MatrixFactorization(first, second, x.potential + y.potential)


def mult_tensor(
    x: MatrixFactorization, y: MatrixFactorization
) -> MatrixFactorization:
    """The multiplicative tensor product, a validated factorization of f*g."""
    return MatrixFactorization(
        _doubled(kronecker(x.phi, y.phi)),
        _doubled(kronecker(x.psi, y.psi)),
        x.potential * y.potential,
    )


def mult_tensor_morph_left(z: MfMorphism, y: MatrixFactorization) -> MfMorphism:
    """Whisker a morphism on the right by an object: z (x) y."""
    eye = PolyMatrix.identity(y.size)
    return MfMorphism(
        mult_tensor(z.source, y),
        mult_tensor(z.target, y),
        _doubled(kronecker(z.alpha, eye)),
        _doubled(kronecker(z.beta, eye)),
    )


def mult_tensor_morph_right(x: MatrixFactorization, z: MfMorphism) -> MfMorphism:
    """Whisker a morphism on the left by an object: x (x) z."""
    eye = PolyMatrix.identity(x.size)
    return MfMorphism(
        mult_tensor(x, z.source),
        mult_tensor(x, z.target),
        _doubled(kronecker(eye, z.alpha)),
        _doubled(kronecker(eye, z.beta)),
    )


def mult_tensor_morph_pair(zf: MfMorphism, zg: MfMorphism) -> MfMorphism:
    """The tensor product of two morphisms."""
    return MfMorphism(
        mult_tensor(zf.source, zg.source),
        mult_tensor(zf.target, zg.target),
        _doubled(kronecker(zf.alpha, zg.alpha)),
        _doubled(kronecker(zf.beta, zg.beta)),
    )


def check_syzygy_identity(
    x: MatrixFactorization, y: MatrixFactorization
) -> CheckReport:
    """Swap-then-tensor equals tensor-then-swap, as a literal identity."""
    lhs = mult_tensor(x, y).syzygy()
    rhs = mult_tensor(x.syzygy(), y.syzygy())
    equal = lhs == rhs
    return CheckReport(
        check_id="syzygy-identity",
        verdict=PASS if equal else FAIL,
        detail=(
            "syzygy(X (x) Y) == syzygy(X) (x) syzygy(Y)"
            if equal
            else "syzygy identity violated"
        ),
    )


def check_syzygy_inequalities(
    x: MatrixFactorization, y: MatrixFactorization
) -> CheckReport:
    """Literal inequalities separating the multiplicative product from the
    additive one under the syzygy swap.

    Reports whether X (x) Y != syzygy(X) (x) syzygy(Y) and
    syzygy(X) (x) Y != X (x) syzygy(Y) hold as literal matrix inequalities.
    Equality is only possible for degenerate (symmetric) inputs, which the
    report calls out; isomorphism is never tested, so results carry the
    ``literal-only`` caveat.
    """
    plain = mult_tensor(x, y)
    both_swapped = mult_tensor(x.syzygy(), y.syzygy())
    left_swapped = mult_tensor(x.syzygy(), y)
    right_swapped = mult_tensor(x, y.syzygy())
    first_differs = plain != both_swapped
    second_differs = left_swapped != right_swapped
    notes = []
    notes.append(
        "X(x)Y != sX(x)sY" if first_differs else "X(x)Y == sX(x)sY (degenerate: phi(x)phi' = psi(x)psi')"
    )
    notes.append(
        "sX(x)Y != X(x)sY" if second_differs else "sX(x)Y == X(x)sY (degenerate: psi(x)phi' = phi(x)psi')"
    )
    return CheckReport(
        check_id="syzygy-inequalities",
        verdict=PASS,
        detail="; ".join(notes) + " [literal-only]",
    )
