"""Sidon subspaces of extension fields and their product factorization.

A k-dimensional subspace V of F_{q^n} is a Sidon space when the product of
any two nonzero elements determines the pair of lines it came from: ab = cd
forces {aF_q, bF_q} = {cF_q, dF_q}.  The spaces built here have the shape
V = {u + u^q * gamma : u in F_{q^k}} for a suitably chosen gamma.  With
n = 2k and gamma a root of x^2 + bx + c where c is not a (q-1)'th power,
products factor in O(k^3): split over the {1, gamma} basis, undo the
linearized map x - c x^q, solve one quadratic, and take two (q-1)'th roots.
"""

from __future__ import annotations

import numpy as np

from . import linalg
from .errors import CapacityError, FactorizationError, ParameterError
from .ffcore import (
    ExtensionField,
    TowerContext,
    frobenius,
    is_irreducible,
    is_qm1_power,
    linearized_T,
    random_irreducible,
    solve_quadratic,
)

#: exhaustive verification refuses spaces with more than this many elements
BRUTEFORCE_LIMIT = 1 << 14


class SidonSpace:
    """A Sidon space with its tower context and canonical basis.

    ``basis0`` holds the k elements omega_i + omega_i^q * gamma, which span
    the space; ``ctx`` (immutable) carries the field chain.  For quadratic
    towers the pair (T, T^-1) of the factorization map is precomputed.
    """

    def __init__(self, ctx: TowerContext):
        self.ctx = ctx
        F = ctx.Fqk
        self.basis0 = tuple(
            ctx.Fqn.add(ctx.embed_k(w), ctx.Fqn.mul(ctx.gamma, ctx.embed_k(frobenius(F, w))))
            for w in ctx.omega
        )
        if ctx.r == 2:
            self.T, self.T_inv = linearized_T(ctx)
        else:
            self.T = self.T_inv = None
        flat = np.array([ctx.flatten(v) for v in self.basis0], dtype=np.int64)
        if linalg.matrix_rank(flat, ctx.q) != ctx.k:
            raise ParameterError("canonical basis is not independent")
        self.basis0_flat = flat

    @property
    def q(self) -> int:
        return self.ctx.q

    @property
    def k(self) -> int:
        return self.ctx.k

    @property
    def gamma(self):
        return self.ctx.gamma


def sidon_element(V: SidonSpace, u):
    """The space element u + u^q * gamma for u in F_{q^k}; F_q-linear in u."""
    ctx = V.ctx
    uq = frobenius(ctx.Fqk, u)
    return ctx.Fqn.add(ctx.embed_k(u), ctx.Fqn.mul(ctx.gamma, ctx.embed_k(uq)))


def construct_sidon_2k(q: int, k: int, rng) -> SidonSpace:
    """Sidon space of dimension k inside F_{q^(2k)}.

    Samples the degree-k modulus, then c uniformly outside the (q-1)'th
    powers, then b until x^2 + bx + c is irreducible over F_{q^k}.  All
    draws come from ``rng``, so the construction is repeatable.
    """
    if k < 3:
        raise ParameterError("k must be >= 3 (dimension bound on the product span)")
    from .ffcore import PrimeField

    Fq = PrimeField(q)  # validates q: odd prime >= 3
    modulus_k = random_irreducible(Fq, k, rng)
    Fqk = ExtensionField(Fq, modulus_k)
    while True:
        c = Fqk.random_nonzero(rng)
        if not is_qm1_power(Fqk, c):
            break
    while True:
        b = Fqk.random(rng)
        if is_irreducible(Fqk, [c, b, Fqk.one]):
            break
    ctx = TowerContext(q, k, modulus_k, (c, b, Fqk.one))
    return SidonSpace(ctx)


def construct_sidon_rk(q: int, k: int, r: int, rng) -> SidonSpace:
    """Sidon space of dimension k inside F_{q^(rk)} for r >= 3 (cross-checks only)."""
    if r < 3:
        raise ParameterError("r must be >= 3")
    if k < 1:
        raise ParameterError("k must be >= 1")
    from .ffcore import PrimeField

    Fq = PrimeField(q)
    modulus_k = random_irreducible(Fq, k, rng)
    Fqk = ExtensionField(Fq, modulus_k)
    top = random_irreducible(Fqk, r, rng)
    ctx = TowerContext(q, k, modulus_k, top)
    return SidonSpace(ctx)


def _normalize_line(F, u):
    """Scale u so its first nonzero coefficient is 1 (line representative)."""
    for coeff in u:
        if coeff != 0:
            return F.scale(u, F.base.inv(coeff))
    raise FactorizationError("zero element has no line representative")


def factor_product(V: SidonSpace, pi):
    """Factor pi = a*b with a, b nonzero elements of V.

    Returns the unordered pair of line representatives (u*, v*) in F_{q^k}
    (first nonzero coefficient 1, sorted), where a is a scalar multiple of
    u* + (u*)^q gamma and likewise for b.  A repeated root yields u* = v*.

    Raises FactorizationError when pi is not such a product.
    """
    ctx = V.ctx
    if ctx.r != 2:
        raise ParameterError("factorization requires the quadratic tower")
    F = ctx.Fqk
    q0, q1 = pi  # coordinates over the F_{q^k}-basis {1, gamma}
    uv = tuple(int(x) for x in (V.T_inv @ np.array(q0, dtype=np.int64)) % ctx.q)
    if uv == F.zero:
        raise FactorizationError("product component vanishes; not in V*V")
    uv_q = frobenius(F, uv)
    # uv^q + u^q v, recovered by adding back b*(uv)^q
    w1 = F.add(q1, F.mul(ctx.b, uv_q))
    # roots of uv + w1*x + (uv)^q x^2 are -1/u^(q-1) and -1/v^(q-1)
    lead_inv = F.inv(uv_q)
    quad = [F.mul(uv, lead_inv), F.mul(w1, lead_inv), F.one]
    roots = solve_quadratic(F, quad)
    if len(roots) == 0:
        raise FactorizationError("factor quadratic has no roots in F_{q^k}")
    reps = []
    from .ffcore import rth_root

    for root in roots:
        target = F.neg(F.inv(root))  # u^(q-1)
        u = rth_root(F, target, ctx.q - 1)
        if u is None:
            raise FactorizationError("root is not a (q-1)'th power")
        reps.append(_normalize_line(F, u))
    if roots.double:
        reps = [reps[0], reps[0]]
    reps.sort()
    return tuple(reps)


def verify_sidon_bruteforce(V: SidonSpace) -> bool:
    """Exhaustively check the defining property over all line pairs."""
    return verify_span_bruteforce(V.ctx.Fqn, V.basis0, V.ctx.q)


def verify_span_bruteforce(F, basis, q: int) -> bool:
    """Whether the F_q-span of ``basis`` (inside field F) is a Sidon space.

    Enumerates one representative per line of the span and compares all
    pairwise products projectively (scaled to leading coefficient 1), which
    quotients out exactly the F_q^* ambiguity of the definition.  Distinct
    line pairs must give distinct products.
    """
    k = len(basis)
    if q ** k > BRUTEFORCE_LIMIT:
        raise CapacityError(f"space of size {q ** k} exceeds the exhaustive bound")
    scalars = [F.from_int(s) for s in range(q)]
    lines = []
    for p in range(_num_proj_points(q, k)):
        coeffs = _proj_unrank(q, k, p)
        v = F.zero
        for t, basis_el in zip(coeffs, basis):
            if t:
                v = F.add(v, F.mul(basis_el, scalars[t]))
        lines.append(v)
    seen: dict = {}
    for i in range(len(lines)):
        for j in range(i, len(lines)):
            prod = F.mul(lines[i], lines[j])
            key = _normalize_coeffs(F.coeff_vector(prod), q)
            if key in seen:
                return False
            seen[key] = (i, j)
    return True


def dim_v_squared(V: SidonSpace) -> int:
    """Dimension over F_q of the span of all pairwise basis products."""
    ctx = V.ctx
    rows = []
    for i in range(ctx.k):
        for j in range(i, ctx.k):
            rows.append(ctx.flatten(ctx.Fqn.mul(V.basis0[i], V.basis0[j])))
    return linalg.matrix_rank(np.array(rows, dtype=np.int64), ctx.q)


# ---------------------------------------------------------------------------
# projective-point helpers (shared with the message codec)


def _num_proj_points(q: int, k: int) -> int:
    return (q ** k - 1) // (q - 1)


def _proj_unrank(q: int, k: int, p: int) -> tuple:
    """The p-th projective point of F_q^k: first nonzero entry 1, block order."""
    if not 0 <= p < _num_proj_points(q, k):
        raise ParameterError("projective index out of range")
    j = 0
    block = q ** (k - 1)
    while p >= block:
        p -= block
        j += 1
        block //= q
    vec = [0] * k
    vec[j] = 1
    # remaining digits fill positions j+1..k-1, most significant first
    for pos in range(k - 1, j, -1):
        vec[pos] = p % q
        p //= q
    return tuple(vec)


def _proj_rank(q: int, k: int, vec) -> int:
    vec = tuple(int(x) % q for x in vec)
    j = 0
    while j < k and vec[j] == 0:
        j += 1
    if j == k or vec[j] != 1:
        raise ParameterError("not a normalized projective representative")
    rank = sum(q ** (k - 1 - t) for t in range(j))
    val = 0
    for pos in range(j + 1, k):
        val = val * q + vec[pos]
    return rank + val


def _normalize_coeffs(flat, q: int):
    """Scale a flat coordinate vector to leading coefficient 1."""
    for x in flat:
        if x:
            inv = pow(int(x), -1, q)
            return tuple((inv * int(y)) % q for y in flat)
    raise FactorizationError("zero product")
