"""Exact arithmetic in GR(p^2, m), its Galois extensions, and finite quotients.

Two concrete ring classes are provided:

* ``PrimeRing`` is Z_{p^2}; elements are plain ints in [0, p^2).
* ``QuotientRing`` is base[x]/(g) for a monic g over another ring object;
  elements are tuples of base elements of length deg g.  When g is basic
  irreducible over a Galois ring the result is again a Galois ring and
  carries ``residue_size``; otherwise the ring need not be local.

Every operation returns fully reduced values, so equality is structural.
"""
from __future__ import annotations

import itertools
from typing import Iterator, Sequence

from . import polyops
from .errors import BadSubfieldDegree, NonPrime, NotAUnit, NotBasicIrreducible


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors by trial division."""
    out = []
    k = 2
    while k * k <= n:
        if n % k == 0:
            out.append(k)
            while n % k == 0:
                n //= k
        k += 1
    if n > 1:
        out.append(n)
    return out


def multiplicative_order(a: int, n: int) -> int:
    """Smallest s >= 1 with a^s = 1 mod n (n = 1 gives 1)."""
    if n == 1:
        return 1
    s, v = 1, a % n
    while v != 1:
        v = (v * a) % n
        s += 1
    return s


class Ring:
    """Generic layer shared by the concrete rings.

    Subclasses define the primitive operations plus ``to_ints``/``from_ints``,
    which flatten an element to its coordinates over Z_{p^2}.
    """

    p: int
    char: int
    rank: int
    size: int
    residue_size: int | None = None
    unit_exponent: int | None = None

    # -- generic arithmetic ------------------------------------------------
    def pow(self, a, e: int):
        if e < 0:
            return self.pow(self.inv(a), -e)
        result, base = self.one, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result

    def smul(self, k: int, a):
        return self.mul(self.from_int(k), a)

    def is_zero(self, a) -> bool:
        return a == self.zero

    @property
    def is_local(self) -> bool:
        return self.residue_size is not None

    def is_unit(self, a) -> bool:
        if self.is_local:
            return self.mod_p(a) != self.zero
        if self.unit_exponent is None:
            raise NotImplementedError("unit test needs a unit exponent")
        return self.pow(a, self.unit_exponent) == self.one

    def inv(self, a):
        if not self.is_unit(a):
            raise NotAUnit(f"{self.to_json(a)} is not a unit")
        return self.pow(a, self.unit_exponent - 1)

    def key(self, a) -> tuple:
        """Canonical sort key: highest coordinate most significant."""
        return tuple(reversed(self.to_ints(a)))

    def elements(self) -> Iterator:
        for digits in itertools.product(range(self.char), repeat=self.rank):
            yield self.from_ints(digits[::-1])

    def residues(self) -> Iterator:
        """Canonical lifts (coordinates in [0, p)) in canonical order."""
        for digits in itertools.product(range(self.p), repeat=self.rank):
            yield self.from_ints(digits[::-1])

    def mul_p(self, a):
        return self.smul(self.p, a)

    def is_residue_lift(self, a) -> bool:
        return all(c < self.p for c in self.to_ints(a))

    # -- Galois-ring structure (local rings only) ----------------------------
    def _require_local(self):
        if not self.is_local:
            raise TypeError("operation needs a Galois ring")

    @property
    def total_degree(self) -> int:
        """m such that the residue field has p^m elements."""
        self._require_local()
        q, k = self.residue_size, 0
        while q > 1:
            q //= self.p
            k += 1
        return k

    def teichmuller(self, a):
        """Teichmüller representative with the same residue as ``a``."""
        self._require_local()
        q = self.residue_size
        t = self.pow(a, q)
        while True:
            nxt = self.pow(t, q)
            if nxt == t:
                return t
            t = nxt

    def teichmuller_set(self) -> list:
        self._require_local()
        return sorted((self.teichmuller(r) for r in self.residues()), key=self.key)

    def decompose(self, a):
        """Return (b0, b1) Teichmüller with a = b0 + p*b1."""
        b0 = self.teichmuller(a)
        b1 = self.teichmuller(self.div_p(self.sub(a, b0)))
        return b0, b1

    def recompose(self, b0, b1):
        return self.add(b0, self.mul_p(b1))

    def residue_order(self, a) -> int:
        """Multiplicative order of the residue of a unit ``a``."""
        self._require_local()
        group = self.residue_size - 1
        order = group
        for ell in prime_factors(group):
            while order % ell == 0 and self.mod_p(self.pow(a, order // ell)) == self.mod_p(self.one):
                order //= ell
        return order

    def is_primitive_residue(self, a) -> bool:
        if self.mod_p(a) == self.zero:
            return False
        return self.residue_order(a) == self.residue_size - 1

    def multiplicative_order(self, a) -> int:
        """Exact order of a unit."""
        e = self.unit_exponent
        order = e
        for ell in prime_factors(e):
            while order % ell == 0 and self.pow(a, order // ell) == self.one:
                order //= ell
        if self.pow(a, order) != self.one:
            raise NotAUnit("element is not a unit")
        return order


class PrimeRing(Ring):
    """Z_{p^2}, i.e. GR(p^2, 1)."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise NonPrime(f"p={p} is not prime")
        self.p = p
        self.char = p * p
        self.rank = 1
        self.size = p * p
        self.zero = 0
        self.one = 1
        self.residue_size = p
        self.unit_exponent = p * (p - 1)
        self.modulus = None
        self.base = None

    def __repr__(self) -> str:
        return f"PrimeRing(Z_{self.char})"

    def add(self, a, b):
        return (a + b) % self.char

    def sub(self, a, b):
        return (a - b) % self.char

    def neg(self, a):
        return (-a) % self.char

    def mul(self, a, b):
        return (a * b) % self.char

    def from_int(self, k: int):
        return k % self.char

    def mod_p(self, a):
        return a % self.p

    def div_p(self, a):
        if a % self.p:
            raise ArithmeticError("element is not divisible by p")
        return (a // self.p) % self.p

    def is_unit(self, a) -> bool:
        return a % self.p != 0

    def inv(self, a):
        if a % self.p == 0:
            raise NotAUnit(f"{a} is not a unit in Z_{self.char}")
        return pow(a, -1, self.char)

    def to_ints(self, a) -> tuple:
        return (a,)

    def from_ints(self, v: Sequence[int]):
        return int(v[0]) % self.char

    def to_json(self, a):
        return a

    def from_json(self, obj):
        if isinstance(obj, list):
            if len(obj) != 1:
                raise ValueError("expected a single coefficient")
            obj = obj[0]
        return int(obj) % self.char

    def embed(self, c):
        return c


class QuotientRing(Ring):
    """base[x]/(modulus) for a monic modulus of degree >= 1."""

    def __init__(self, base: Ring, modulus: Sequence, *, residue_size: int | None = None,
                 unit_exponent: int | None = None):
        mod = polyops.trim(base, modulus)
        if len(mod) < 2 or mod[-1] != base.one:
            raise ValueError("modulus must be monic of degree >= 1")
        d = len(mod) - 1
        self.base = base
        self.modulus = tuple(mod)
        self.degree = d
        self.p = base.p
        self.char = base.char
        self.rank = base.rank * d
        self.size = base.size ** d
        self.zero = (base.zero,) * d
        self.one = (base.one,) + (base.zero,) * (d - 1)
        self.residue_size = residue_size
        self.unit_exponent = unit_exponent
        self._int = isinstance(base, PrimeRing)
        self.fixed_width = False
        xd = tuple(base.neg(c) for c in mod[:d])
        self._fold = []
        cur = xd
        for _ in range(d, 2 * d - 1):
            self._fold.append(cur)
            cur = self._times_x(cur, xd)

    def __repr__(self) -> str:
        return f"QuotientRing(deg={self.degree}, size={self.size})"

    def _times_x(self, a, xd):
        b = self.base
        top = a[-1]
        shifted = (b.zero,) + tuple(a[:-1])
        return tuple(b.add(s, b.mul(top, c)) for s, c in zip(shifted, xd))

    # -- primitive operations -----------------------------------------------
    def add(self, a, b):
        if self._int:
            n = self.char
            return tuple((x + y) % n for x, y in zip(a, b))
        ad = self.base.add
        return tuple(ad(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        if self._int:
            n = self.char
            return tuple((x - y) % n for x, y in zip(a, b))
        sb = self.base.sub
        return tuple(sb(x, y) for x, y in zip(a, b))

    def neg(self, a):
        if self._int:
            n = self.char
            return tuple((-x) % n for x in a)
        ng = self.base.neg
        return tuple(ng(x) for x in a)

    def mul(self, a, b):
        d = self.degree
        if self._int:
            n = self.char
            conv = [0] * (2 * d - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        if y:
                            conv[i + j] += x * y
            res = conv[:d]
            for k in range(d, 2 * d - 1):
                c = conv[k] % n
                if c:
                    fold = self._fold[k - d]
                    for j in range(d):
                        res[j] += c * fold[j]
            return tuple(v % n for v in res)
        B = self.base
        z = B.zero
        conv = [z] * (2 * d - 1)
        for i, x in enumerate(a):
            if x == z:
                continue
            for j, y in enumerate(b):
                if y != z:
                    conv[i + j] = B.add(conv[i + j], B.mul(x, y))
        res = conv[:d]
        for k in range(d, 2 * d - 1):
            c = conv[k]
            if c != z:
                fold = self._fold[k - d]
                for j in range(d):
                    res[j] = B.add(res[j], B.mul(c, fold[j]))
        return tuple(res)

    def from_int(self, k: int):
        return (self.base.from_int(k),) + self.zero[1:]

    def embed(self, c):
        """Image of a base element."""
        return (c,) + self.zero[1:]

    def mod_p(self, a):
        return tuple(self.base.mod_p(c) for c in a)

    def div_p(self, a):
        return tuple(self.base.div_p(c) for c in a)

    def mul_p(self, a):
        return tuple(self.base.mul_p(c) for c in a)

    def to_ints(self, a) -> tuple:
        if self._int:
            return tuple(a)
        out: list[int] = []
        for c in a:
            out.extend(self.base.to_ints(c))
        return tuple(out)

    def from_ints(self, v: Sequence[int]):
        if self._int:
            n = self.char
            return tuple(int(x) % n for x in v)
        r = self.base.rank
        return tuple(self.base.from_ints(v[k * r:(k + 1) * r]) for k in range(self.degree))

    # -- polynomial views ---------------------------------------------------
    @property
    def gen(self):
        """The class of x."""
        return self.from_poly([self.base.zero, self.base.one])

    def from_poly(self, coeffs: Sequence):
        """Reduce an arbitrary base polynomial modulo the modulus."""
        r = polyops.pmod(self.base, list(coeffs), list(self.modulus))
        return tuple(polyops.pad(self.base, r, self.degree))

    def to_poly(self, a) -> list:
        return polyops.trim(self.base, a)

    def to_json(self, a):
        coeffs = a if self.fixed_width else self.to_poly(a)
        return [self.base.to_json(c) for c in coeffs]

    def from_json(self, obj):
        if not isinstance(obj, list):
            obj = [obj]
        return self.from_poly([self.base.from_json(c) for c in obj])


def extend(base: Ring, modulus: Sequence, *, check: bool = True) -> QuotientRing:
    """Galois extension base[x]/(modulus) for a basic irreducible modulus."""
    mod = polyops.trim(base, modulus)
    d = len(mod) - 1
    if d < 1 or mod[-1] != base.one:
        raise NotBasicIrreducible("modulus must be monic of degree >= 1")
    if check and not is_basic_irreducible(base, mod):
        raise NotBasicIrreducible(f"{[base.to_json(c) for c in mod]} is not basic irreducible")
    q = base.residue_size ** d
    return QuotientRing(base, mod, residue_size=q, unit_exponent=base.p * (q - 1))


def is_basic_primitive(base: Ring, g: Sequence) -> bool:
    """True when g mod p is primitive over the residue field of ``base``."""
    d = len(g) - 1
    q = base.residue_size ** d
    ring = QuotientRing(base, g)
    x = ring.gen
    one = ring.mod_p(ring.one)
    if ring.mod_p(ring.pow(x, q - 1)) != one:
        return False
    return all(ring.mod_p(ring.pow(x, (q - 1) // ell)) != one for ell in prime_factors(q - 1))


def is_basic_irreducible(base: Ring, g: Sequence) -> bool:
    """Rabin's irreducibility test applied to g mod p."""
    g = polyops.trim(base, g)
    d = len(g) - 1
    if polyops.rreduce(base, g)[-1:] != [base.one]:
        return False
    q = base.residue_size
    ring = QuotientRing(base, g)
    x = ring.gen

    def frob(k):
        y = x
        for _ in range(k):
            y = ring.pow(y, q)
        return ring.mod_p(y)

    if frob(d) != ring.mod_p(x):
        return False
    gbar = polyops.rreduce(base, g)
    for ell in prime_factors(d):
        h = polyops.rsub(base, ring.to_poly(frob(d // ell)), ring.to_poly(x))
        if len(polyops.rgcd(base, h, gbar)) != 1:
            return False
    return True


def default_modulus(base: Ring, d: int) -> list:
    """First monic degree-d polynomial (leading coefficients most significant)
    whose residue is primitive over the residue field of ``base``."""
    residues = list(base.residues())
    q = len(residues)
    for k in range(q ** d):
        coeffs = []
        for _ in range(d):
            coeffs.append(residues[k % q])
            k //= q
        g = coeffs + [base.one]
        if is_basic_primitive(base, g):
            return g
    raise NotBasicIrreducible("no primitive polynomial found")  # pragma: no cover


def construct_ring(p: int, m: int, modulus: Sequence | None = None) -> Ring:
    """GR(p^2, m), built over Z_{p^2} with a validated or default modulus."""
    if not is_prime(p):
        raise NonPrime(f"p={p} is not prime")
    if m < 1:
        raise ValueError("m must be positive")
    base = PrimeRing(p)
    if m == 1:
        if modulus is not None:
            mod = polyops.trim(base, [base.from_int(c) for c in modulus])
            if len(mod) != 2 or mod[-1] != 1:
                raise NotBasicIrreducible("modulus must be monic of degree 1")
        return base
    if modulus is None:
        mod = default_modulus(base, m)
    else:
        mod = polyops.trim(base, [base.from_int(c) for c in modulus])
        if len(mod) != m + 1:
            raise NotBasicIrreducible(f"modulus must have degree {m}")
    ring = extend(base, mod)
    ring.fixed_width = True
    return ring


def teichmuller_set(ring: Ring) -> list:
    return ring.teichmuller_set()


def primitive_unit(ring: Ring):
    """Teichmüller lift of the first primitive residue in canonical order."""
    for r in ring.residues():
        if ring.is_primitive_residue(r):
            return ring.teichmuller(r)
    raise AssertionError("residue field without primitive element")  # pragma: no cover


def generalized_frobenius(ring: Ring, base_m: int, a):
    """b0 + p b1 -> b0^(p^base_m) + p b1^(p^base_m)."""
    if base_m < 1 or ring.total_degree % base_m:
        raise BadSubfieldDegree(f"{base_m} does not divide {ring.total_degree}")
    e = ring.p ** base_m
    b0, b1 = ring.decompose(a)
    return ring.recompose(ring.pow(b0, e), ring.pow(b1, e))
