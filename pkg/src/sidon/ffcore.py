"""Exact arithmetic in F_q and its extension towers.

The base field F_q (q an odd prime, q >= 3) uses plain Python ints reduced
mod q.  Extensions are built as quotient rings F[y]/(m(y)) over any base
field object; elements are fixed-width tuples of base elements in the power
basis of the modulus, little-endian.  Towers nest: F_{q^n} with n = 2k is
represented as F_{q^k}[x]/(x^2 + b x + c), so an F_{q^n} element is a pair
(e0, e1) of F_{q^k} coefficient tuples standing for e0 + e1*gamma.

Besides the field classes this module provides the root-extraction and
linearized-polynomial machinery that decryption needs: Tonelli-Shanks
square roots, Adleman-Manders-Miller r'th roots, quadratic solving, and
the matrix of the invertible map x -> x - c*x^q.
"""

from __future__ import annotations

import numpy as np

from .errors import InternalError, ParameterError

# degree above which coefficient convolutions go through numpy
_NUMPY_DEGREE_CUTOFF = 12


# ---------------------------------------------------------------------------
# primality


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (witness set exact for n < 3.3e24)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


# ---------------------------------------------------------------------------
# fields


class PrimeField:
    """F_q for an odd prime q >= 3.  Elements are ints in [0, q)."""

    __slots__ = ("q",)

    def __init__(self, q: int):
        if q < 3 or q % 2 == 0 or not is_prime(q):
            raise ParameterError(f"q must be an odd prime >= 3, got {q}")
        self.q = q

    @property
    def order(self) -> int:
        return self.q

    @property
    def char(self) -> int:
        return self.q

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def add(self, a, b):
        return (a + b) % self.q

    def sub(self, a, b):
        return (a - b) % self.q

    def neg(self, a):
        return -a % self.q

    def mul(self, a, b):
        return a * b % self.q

    def inv(self, a):
        if a % self.q == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.q)

    def pow(self, a, e: int):
        if e < 0:
            return pow(self.inv(a), -e, self.q)
        return pow(a, e, self.q)

    def random(self, rng):
        return rng.below(self.q)

    def random_nonzero(self, rng):
        return rng.nonzero_below(self.q)

    def element_from_index(self, i: int):
        if not 0 <= i < self.q:
            raise ValueError("index out of range")
        return i

    def from_int(self, s: int):
        return s % self.q

    def coeff_vector(self, a) -> tuple:
        return (a,)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.q == self.q

    def __hash__(self):
        return hash(("PrimeField", self.q))

    def __repr__(self):
        return f"PrimeField({self.q})"


class ExtensionField:
    """F[y]/(m(y)) over a base field.

    ``modulus`` is a monic polynomial over the base, little-endian, of
    degree >= 2.  Elements are tuples of ``degree`` base elements.  When the
    base is a PrimeField, multiplication runs on raw int tuples, switching
    to numpy convolutions past degree 12; with an extension base the generic
    schoolbook path is used (towers in this package keep the top degree
    tiny, so that path is never hot).
    """

    __slots__ = (
        "base", "modulus", "degree", "order", "char",
        "_tail", "_is_prime_base", "_q", "_np_tail",
    )

    def __init__(self, base, modulus):
        modulus = tuple(modulus)
        if len(modulus) < 3:
            raise ParameterError("extension modulus must have degree >= 2")
        if modulus[-1] != base.one:
            raise ParameterError("extension modulus must be monic")
        self.base = base
        self.modulus = modulus
        self.degree = len(modulus) - 1
        self.order = base.order ** self.degree
        self.char = base.char
        # x^degree = -tail in the quotient ring
        self._tail = tuple(base.neg(c) for c in modulus[:-1])
        self._is_prime_base = isinstance(base, PrimeField)
        self._q = base.q if self._is_prime_base else None
        self._np_tail = (
            np.array(self._tail, dtype=np.int64) if self._is_prime_base else None
        )

    @property
    def zero(self):
        return (self.base.zero,) * self.degree

    @property
    def one(self):
        return (self.base.one,) + (self.base.zero,) * (self.degree - 1)

    def from_base(self, c):
        """Embed a base-field scalar."""
        return (c,) + (self.base.zero,) * (self.degree - 1)

    def from_int(self, s: int):
        """Embed a prime-field integer scalar (recursing through towers)."""
        return self.from_base(self.base.from_int(s))

    def add(self, a, b):
        base = self.base
        return tuple(base.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        base = self.base
        return tuple(base.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        base = self.base
        return tuple(base.neg(x) for x in a)

    def scale(self, a, s):
        """Multiply by a base-field scalar."""
        base = self.base
        return tuple(base.mul(x, s) for x in a)

    def mul(self, a, b):
        if self._is_prime_base:
            if self.degree > _NUMPY_DEGREE_CUTOFF:
                return self._mul_np(a, b)
            return self._mul_int(a, b)
        return self._mul_generic(a, b)

    def _mul_int(self, a, b):
        q = self._q
        d = self.degree
        prod = [0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        tail = self._tail
        for i in range(2 * d - 2, d - 1, -1):
            c = prod[i] % q
            if c:
                base = i - d
                for j, tj in enumerate(tail):
                    if tj:
                        prod[base + j] += c * tj
        return tuple(x % q for x in prod[:d])

    def _mul_np(self, a, b):
        q = self._q
        d = self.degree
        prod = np.convolve(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        prod %= q
        tail = self._np_tail
        for i in range(2 * d - 2, d - 1, -1):
            c = int(prod[i])
            if c:
                prod[i - d:i] += c * tail
                prod[i - d:i] %= q
        return tuple(int(x) for x in prod[:d])

    def _mul_generic(self, a, b):
        base = self.base
        d = self.degree
        zero = base.zero
        prod = [zero] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai != zero:
                for j, bj in enumerate(b):
                    prod[i + j] = base.add(prod[i + j], base.mul(ai, bj))
        tail = self._tail
        for i in range(2 * d - 2, d - 1, -1):
            c = prod[i]
            if c != zero:
                for j, tj in enumerate(tail):
                    if tj != zero:
                        prod[i - d + j] = base.add(prod[i - d + j], base.mul(c, tj))
        return tuple(prod[:d])

    def inv(self, a):
        """Extended Euclid on (a, modulus) over the base field."""
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero")
        base = self.base
        r0 = list(self.modulus)
        r1 = _ptrim(base, list(a))
        s0: list = [base.zero]
        s1: list = [base.one]
        while True:
            if len(r1) == 1:  # nonzero constant: done
                c = base.inv(r1[0])
                out = [base.mul(c, x) for x in s1]
                out += [base.zero] * (self.degree - len(out))
                return tuple(out[: self.degree])
            quot, rem = _pdivmod(base, r0, r1)
            r0, r1 = r1, rem
            if r1 == [base.zero]:
                raise ZeroDivisionError("element not invertible (modulus not irreducible?)")
            s0, s1 = s1, _psub(base, s0, _pmul(base, quot, s1))

    def pow(self, a, e: int):
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = self.one
        acc = a
        while e:
            if e & 1:
                result = self.mul(result, acc)
            acc = self.mul(acc, acc)
            e >>= 1
        return result

    def random(self, rng):
        base = self.base
        return tuple(base.random(rng) for _ in range(self.degree))

    def random_nonzero(self, rng):
        while True:
            a = self.random(rng)
            if a != self.zero:
                return a

    def element_from_index(self, i: int):
        """Bijection [0, order) -> elements, little-endian base-|base| digits."""
        if not 0 <= i < self.order:
            raise ValueError("index out of range")
        b = self.base.order
        out = []
        for _ in range(self.degree):
            out.append(self.base.element_from_index(i % b))
            i //= b
        return tuple(out)

    def coeff_vector(self, a) -> tuple:
        """Flat little-endian int vector over the prime field."""
        base = self.base
        out: tuple = ()
        for c in a:
            out += base.coeff_vector(c)
        return out

    def __eq__(self, other):
        return (
            isinstance(other, ExtensionField)
            and other.base == self.base
            and other.modulus == self.modulus
        )

    def __hash__(self):
        return hash(("ExtensionField", self.base, self.modulus))

    def __repr__(self):
        return f"ExtensionField(degree={self.degree}, order={self.order})"


# ---------------------------------------------------------------------------
# polynomials over a field object (variable-length little-endian lists)


def _ptrim(F, f):
    f = list(f)
    while len(f) > 1 and f[-1] == F.zero:
        f.pop()
    return f


def poly_deg(F, f) -> int:
    f = _ptrim(F, f)
    if f == [F.zero]:
        return -1
    return len(f) - 1


def _padd(F, f, g):
    n = max(len(f), len(g))
    f = list(f) + [F.zero] * (n - len(f))
    g = list(g) + [F.zero] * (n - len(g))
    return _ptrim(F, [F.add(a, b) for a, b in zip(f, g)])


def _psub(F, f, g):
    n = max(len(f), len(g))
    f = list(f) + [F.zero] * (n - len(f))
    g = list(g) + [F.zero] * (n - len(g))
    return _ptrim(F, [F.sub(a, b) for a, b in zip(f, g)])


def _pmul(F, f, g):
    f = _ptrim(F, f)
    g = _ptrim(F, g)
    if f == [F.zero] or g == [F.zero]:
        return [F.zero]
    out = [F.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a != F.zero:
            for j, b in enumerate(g):
                out[i + j] = F.add(out[i + j], F.mul(a, b))
    return out


def _pdivmod(F, f, g):
    f = _ptrim(F, f)
    g = _ptrim(F, g)
    if g == [F.zero]:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [F.zero] * max(1, len(f) - len(g) + 1)
    rem = list(f)
    ginv = F.inv(g[-1])
    while len(rem) >= len(g) and rem != [F.zero]:
        shift = len(rem) - len(g)
        c = F.mul(rem[-1], ginv)
        quot[shift] = c
        for i, gc in enumerate(g):
            rem[shift + i] = F.sub(rem[shift + i], F.mul(c, gc))
        rem = _ptrim(F, rem)
        if poly_deg(F, rem) < len(g) - 1:
            break
    return _ptrim(F, quot), _ptrim(F, rem)


def poly_mod(F, f, g):
    return _pdivmod(F, f, g)[1]


def poly_gcd(F, f, g):
    """Monic gcd."""
    a, b = _ptrim(F, f), _ptrim(F, g)
    while b != [F.zero]:
        a, b = b, poly_mod(F, a, b)
    if a != [F.zero]:
        c = F.inv(a[-1])
        a = [F.mul(c, x) for x in a]
    return a


def poly_mulmod(F, f, g, m):
    return poly_mod(F, _pmul(F, f, g), m)


def poly_powmod(F, f, e: int, m):
    result = [F.one]
    acc = poly_mod(F, f, m)
    while e:
        if e & 1:
            result = poly_mulmod(F, result, acc, m)
        acc = poly_mulmod(F, acc, acc, m)
        e >>= 1
    return result


def poly_eval(F, f, x):
    acc = F.zero
    for c in reversed(_ptrim(F, f)):
        acc = F.add(F.mul(acc, x), c)
    return acc


# ---------------------------------------------------------------------------
# irreducibility


def is_irreducible(F, f) -> bool:
    """Whether the monic polynomial f over F has no nontrivial factor.

    Degree 2 over odd characteristic goes through the discriminant
    (one exponentiation); the general case is the gcd(x^{Q^i} - x, f)
    sieve for i up to deg(f)/2, rejecting most random reducibles at i=1.
    """
    f = _ptrim(F, f)
    d = poly_deg(F, f)
    if d < 1:
        raise ParameterError("irreducibility needs degree >= 1")
    if f[-1] != F.one:
        raise ParameterError("irreducibility test expects a monic polynomial")
    if d == 1:
        return True
    if d == 2 and F.char % 2 == 1:
        # x^2 + sx + t irreducible iff disc = s^2 - 4t is a non-square
        t, s = f[0], f[1]
        four_t = F.add(F.add(t, t), F.add(t, t))
        disc = F.sub(F.mul(s, s), four_t)
        if disc == F.zero:
            return False
        return F.pow(disc, (F.order - 1) // 2) != F.one
    Q = F.order
    x = [F.zero, F.one]
    h = list(x)
    for _ in range(d // 2):
        h = poly_powmod(F, h, Q, f)
        g = poly_gcd(F, _psub(F, h, x), f)
        if poly_deg(F, g) > 0:
            return False
    return True


def random_irreducible(F, degree: int, rng):
    """Uniform-ish monic irreducible of the given degree (~degree trials)."""
    if degree < 1:
        raise ParameterError("degree must be >= 1")
    for _ in range(64 * degree):
        f = [F.random(rng) for _ in range(degree)] + [F.one]
        if is_irreducible(F, f):
            return tuple(f)
    raise InternalError(f"no irreducible of degree {degree} found in {64 * degree} trials")


# ---------------------------------------------------------------------------
# Frobenius, roots


def frobenius(F, a, i: int = 1):
    """a^(q^i) where q is the characteristic; F_q-linear in a."""
    if i == 0 or a == F.zero:
        return a
    e = pow(F.char, i, F.order - 1) if F.order > F.char else F.char ** i
    return F.pow(a, e)


def _find_power_nonresidue(F, p: int):
    """Deterministic smallest-index element that is not a p-th power."""
    N = F.order - 1
    e = N // p
    for i in range(1, min(F.order, 10_000_000)):
        cand = F.element_from_index(i)
        if F.pow(cand, e) != F.one:
            return cand
    raise InternalError("no p-th power non-residue found")


def sqrt(F, a):
    """A square root of a, or None; odd characteristic Tonelli-Shanks.

    When two roots exist the one with the lexicographically smaller
    coefficient vector is returned.
    """
    if a == F.zero:
        return F.zero
    N = F.order - 1
    if F.pow(a, N // 2) != F.one:
        return None
    # N = 2^t * s
    s, t = N, 0
    while s % 2 == 0:
        s //= 2
        t += 1
    if t == 1:
        w = F.pow(a, (s + 1) // 2)
    else:
        eta = _find_power_nonresidue(F, 2)
        g = F.pow(eta, s)  # order 2^t
        w = F.pow(a, (s + 1) // 2)
        err = F.mul(F.mul(w, w), F.inv(a))
        # reduce err (an element of the 2-Sylow subgroup) to one
        while err != F.one:
            m = 0
            e2 = err
            while e2 != F.one:
                e2 = F.mul(e2, e2)
                m += 1
            # g^(2^(t-m-1)) squares to an element of order 2^m
            w = F.mul(w, F.pow(g, 1 << (t - m - 1)))
            err = F.mul(F.mul(w, w), F.inv(a))
    w2 = F.neg(w)
    return w if F.coeff_vector(w) <= F.coeff_vector(w2) else w2


class QuadraticRoots:
    """Roots of a monic quadratic: 0, 1, or 2 of them; ``double`` marks a repeated root."""

    __slots__ = ("roots", "double")

    def __init__(self, roots, double):
        self.roots = tuple(roots)
        self.double = double

    def __iter__(self):
        return iter(self.roots)

    def __len__(self):
        return len(self.roots)

    def __repr__(self):
        return f"QuadraticRoots(roots={self.roots!r}, double={self.double})"


def solve_quadratic(F, f) -> QuadraticRoots:
    """All roots in F of the monic quadratic f = x^2 + s x + t (odd char)."""
    f = list(f)
    if len(_ptrim(F, f)) != 3 or f[2] != F.one:
        raise ParameterError("expected a monic quadratic")
    t, s = f[0], f[1]
    four_t = F.add(F.add(t, t), F.add(t, t))
    disc = F.sub(F.mul(s, s), four_t)
    inv2 = F.inv(F.add(F.one, F.one))
    if disc == F.zero:
        r = F.mul(F.neg(s), inv2)
        return QuadraticRoots((r,), True)
    w = sqrt(F, disc)
    if w is None:
        return QuadraticRoots((), False)
    r1 = F.mul(F.add(F.neg(s), w), inv2)
    r2 = F.mul(F.sub(F.neg(s), w), inv2)
    roots = sorted((r1, r2), key=F.coeff_vector)
    return QuadraticRoots(roots, False)


def is_qm1_power(F, c) -> bool:
    """Whether c is a (q-1)'th power of some field element, q = characteristic."""
    if c == F.zero:
        raise ParameterError("membership test undefined at zero")
    e = (F.order - 1) // (F.char - 1)
    return F.pow(c, e) == F.one


def _dlog_in_p_group(F, h, g, p: int, t: int) -> int:
    """z with h = g^z, where g has order p^t.  Digit-by-digit, O(t^2 * p)."""
    z = 0
    gamma = F.pow(g, p ** (t - 1))  # order p
    for i in range(t):
        u = F.pow(F.mul(h, F.inv(F.pow(g, z))), p ** (t - 1 - i))
        d, cur = 0, F.one
        while cur != u:
            cur = F.mul(cur, gamma)
            d += 1
            if d >= p:
                raise InternalError("discrete log digit search failed")
        z += d * p ** i
    return z


def _prime_root(F, a, p: int):
    """One x with x^p = a, or None if a is not a p-th power."""
    N = F.order - 1
    if a == F.one:
        return F.one
    s, t = N, 0
    while s % p == 0:
        s //= p
        t += 1
    if t == 0:
        return F.pow(a, pow(p, -1, N))
    if F.pow(a, N // p) != F.one:
        return None
    eta = _find_power_nonresidue(F, p)
    g = F.pow(eta, s)  # generates the p-Sylow subgroup, order p^t
    alpha = pow(p, -1, s) if s > 1 else 0
    x = F.pow(a, alpha) if alpha else F.one
    err = F.mul(F.pow(x, p), F.inv(a))  # lies in the Sylow subgroup, is a p-th power
    z = _dlog_in_p_group(F, err, g, p, t)
    if z % p != 0:
        raise InternalError("root correction term is not a p-th power")
    return F.mul(x, F.inv(F.pow(g, z // p)))


def _factorize(n: int) -> list[tuple[int, int]]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def rth_root(F, a, r: int | None = None):
    """Some u with u^r = a, or None; r defaults to q-1 (q = characteristic).

    Adleman-Manders-Miller, one prime of r at a time.  Inside a prime-power
    tower the candidate is nudged by p-th roots of unity whenever the next
    level would be unsolvable; across distinct primes no adjustment is ever
    needed.  Any valid root is acceptable to callers (they quotient by the
    base field's scalars).
    """
    if a == F.zero:
        raise ParameterError("r'th root undefined at zero")
    if r is None:
        r = F.char - 1
    if r <= 0:
        raise ParameterError("root exponent must be positive")
    x = a
    N = F.order - 1
    for p, e in _factorize(r):
        for level in range(e):
            y = _prime_root(F, x, p)
            if y is None:
                return None
            if level + 1 < e:
                # pick the p-th root that remains a p-th power
                y = _adjust_to_residue(F, y, p)
                if y is None:
                    return None
            x = y
    return x


def _adjust_to_residue(F, y, p: int):
    N = F.order - 1
    if F.pow(y, N // p) == F.one:
        return y
    zeta = F.pow(_find_power_nonresidue(F, p), N // p)  # primitive p-th root of unity
    cand = y
    for _ in range(p - 1):
        cand = F.mul(cand, zeta)
        if F.pow(cand, N // p) == F.one:
            return cand
    return None


# ---------------------------------------------------------------------------
# the two-level tower F_q < F_{q^k} < F_{q^(rk)}


class TowerContext:
    """The field chain F_q < F_{q^k} < F_{q^(r*k)} with flattening maps.

    ``modulus_k`` defines F_{q^k} = F_q[y]/(modulus_k) with power basis
    omega = (1, y, ..., y^(k-1)).  ``top_modulus`` (degree r >= 2, over
    F_{q^k}) defines the top field; gamma is the class of x.  Cryptosystem
    towers use r = 2 with top modulus x^2 + b x + c.

    ``flatten`` maps a top-field element to its F_q coordinate vector of
    length n = r*k over the basis (omega_1, ..., omega_k, omega_1*gamma,
    ..., omega_k*gamma, ..., omega_k*gamma^(r-1)); ``unflatten`` inverts it.
    Instances are immutable and safe to share across threads.
    """

    def __init__(self, q: int, k: int, modulus_k, top_modulus):
        self.q = q
        self.k = k
        self.Fq = PrimeField(q)
        self.modulus_k = tuple(int(c) % q for c in modulus_k)
        if len(self.modulus_k) != k + 1:
            raise ParameterError("modulus_k must have degree k")
        if not is_irreducible(self.Fq, list(self.modulus_k)):
            raise ParameterError("modulus_k is not irreducible over F_q")
        self.Fqk = ExtensionField(self.Fq, self.modulus_k)
        top_modulus = tuple(tuple(c) for c in top_modulus)
        if not is_irreducible(self.Fqk, list(top_modulus)):
            raise ParameterError("top modulus is not irreducible over F_{q^k}")
        self.top_modulus = top_modulus
        self.r = len(top_modulus) - 1
        self.n = self.r * k
        self.Fqn = ExtensionField(self.Fqk, self.top_modulus)
        zk = self.Fqk.zero
        ok = self.Fqk.one
        self.gamma = tuple(ok if j == 1 else zk for j in range(self.r))
        # omega_i = y^(i-1) as F_{q^k} elements
        self.omega = tuple(
            tuple(1 if j == i else 0 for j in range(k)) for i in range(k)
        )

    @property
    def b(self):
        """Linear coefficient of the quadratic top modulus (r = 2 only)."""
        if self.r != 2:
            raise ParameterError("b is defined only for quadratic towers")
        return self.top_modulus[1]

    @property
    def c(self):
        """Constant coefficient of the quadratic top modulus (r = 2 only)."""
        if self.r != 2:
            raise ParameterError("c is defined only for quadratic towers")
        return self.top_modulus[0]

    def embed_k(self, u):
        """View an F_{q^k} element inside the top field."""
        return (u,) + (self.Fqk.zero,) * (self.r - 1)

    def flatten(self, e) -> tuple:
        out: tuple = ()
        for comp in e:
            out += comp
        return out

    def unflatten(self, vec):
        vec = tuple(int(x) % self.q for x in vec)
        if len(vec) != self.n:
            raise ParameterError(f"expected a length-{self.n} coordinate vector")
        k = self.k
        return tuple(vec[i * k:(i + 1) * k] for i in range(self.r))

    def flat_basis(self):
        """The n tower basis elements, in flattening order."""
        out = []
        for j in range(self.r):
            for i in range(self.k):
                vec = [0] * self.n
                vec[j * self.k + i] = 1
                out.append(self.unflatten(vec))
        return tuple(out)

    def structure_constants(self) -> np.ndarray:
        """C with C[d, i*n+j] the delta_d-coordinate of delta_i*delta_j (flat basis)."""
        n = self.n
        basis = self.flat_basis()
        C = np.zeros((n, n * n), dtype=np.int64)
        for i in range(n):
            for j in range(n):
                prod = self.flatten(self.Fqn.mul(basis[i], basis[j]))
                C[:, i * n + j] = prod
        return C

    def serialize(self) -> dict:
        if self.r != 2:
            raise ParameterError("only quadratic towers serialize")
        return {
            "q": self.q,
            "k": self.k,
            "modulusK": [int(c) for c in self.modulus_k],
            "b": [int(c) for c in self.b],
            "c": [int(c) for c in self.c],
        }


def make_tower(q: int, k: int, modulus_k, b, c) -> TowerContext:
    """Quadratic tower from the (b, c) coefficients of x^2 + b x + c."""
    Fq = PrimeField(q)
    Fqk = ExtensionField(Fq, tuple(int(x) % q for x in modulus_k))
    b = tuple(int(x) % q for x in b)
    c = tuple(int(x) % q for x in c)
    return TowerContext(q, k, modulus_k, (c, b, Fqk.one))


def linearized_T(ctx: TowerContext):
    """Matrices (T, T^-1) of x -> x - c*x^q on F_{q^k} in the power basis.

    The map is invertible precisely when c is not a (q-1)'th power.
    """
    from . import linalg

    F = ctx.Fqk
    c = ctx.c
    if is_qm1_power(F, c):
        raise ParameterError("c is a (q-1)'th power; the linearized map is singular")
    k = ctx.k
    T = np.zeros((k, k), dtype=np.int64)
    for j in range(k):
        w = ctx.omega[j]
        img = F.sub(w, F.mul(c, frobenius(F, w)))
        T[:, j] = img
    elim = linalg.gaussian_elim(T, ctx.q)
    if elim.rank != k:
        raise ParameterError("linearized map unexpectedly singular")
    Tinv = np.zeros((k, k), dtype=np.int64)
    for j in range(k):
        e = np.zeros(k, dtype=np.int64)
        e[j] = 1
        Tinv[:, j] = elim.solve(e)
    return T, Tinv
