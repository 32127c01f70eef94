"""Submodules of (Z_{p^k})^c kept in Howell form.

The Howell form gives a unique representation, exact cardinality
prod p^(k - v_i), a membership test, and a bijective enumeration of the
module's elements.
"""
from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

import numpy as np


def _valuation(x: int, p: int) -> int:
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


class ZModule:
    def __init__(self, p: int, k: int, ncols: int, rows: Iterable[Sequence[int]] = ()):
        self.p, self.k, self.ncols = p, k, ncols
        self.N = p ** k
        rows = [list(r) for r in rows]
        for r in rows:
            if len(r) != ncols:
                raise ValueError("row length mismatch")
        self.basis = self._howell(rows)

    # -- construction ---------------------------------------------------------
    def _howell(self, rows):
        p, k, N = self.p, self.k, self.N
        W = np.array(rows, dtype=np.int64).reshape(-1, self.ncols) % N
        W = W[W.any(axis=1)]
        basis = []
        for col in range(self.ncols):
            if W.shape[0] == 0:
                break
            colv = W[:, col]
            nz = np.flatnonzero(colv)
            if nz.size == 0:
                continue
            vals = [_valuation(int(colv[i]), p) for i in nz]
            j = int(np.argmin(vals))
            v = vals[j]
            idx = int(nz[j])
            pv = p ** v
            unit = int(colv[idx]) // pv
            row = (W[idx] * pow(unit, -1, N)) % N
            W = np.delete(W, idx, axis=0)
            if W.shape[0]:
                W = (W - np.outer(W[:, col] // pv, row)) % N
            extra = (row * p ** (k - v)) % N
            if extra.any():
                W = np.vstack([W, extra[None, :]])
            W = W[W.any(axis=1)]
            basis.append([col, v, row])
        for j, (cj, vj, rj) in enumerate(basis):
            pv = p ** vj
            for i in range(j):
                ri = basis[i][2]
                t = int(ri[cj]) // pv
                if t:
                    basis[i][2] = (ri - t * rj) % N
        return [(c, v, r.astype(np.int64)) for c, v, r in basis]

    # -- queries -------------------------------------------------------------
    @property
    def log_cardinality(self) -> int:
        """log_p of the number of elements."""
        return sum(self.k - v for _, v, _ in self.basis)

    @property
    def cardinality(self) -> int:
        return self.p ** self.log_cardinality

    def rows(self) -> list[list[int]]:
        return [r.tolist() for _, _, r in self.basis]

    def key(self) -> tuple:
        return tuple(tuple(r.tolist()) for _, _, r in self.basis)

    def __eq__(self, other) -> bool:
        return isinstance(other, ZModule) and (self.p, self.k, self.ncols) == (other.p, other.k, other.ncols) \
            and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def contains(self, vec: Sequence[int]) -> bool:
        p, N = self.p, self.N
        x = np.array(vec, dtype=np.int64) % N
        for col, v, row in self.basis:
            pv = p ** v
            c = int(x[col])
            if c % pv:
                return False
            if c:
                x = (x - (c // pv) * row) % N
        return not x.any()

    def contains_module(self, other: "ZModule") -> bool:
        return all(self.contains(r) for r in other.rows())

    def __add__(self, other: "ZModule") -> "ZModule":
        return ZModule(self.p, self.k, self.ncols, self.rows() + other.rows())

    # -- enumeration -----------------------------------------------------------
    def iter_chunks(self, chunk: int = 1 << 16) -> Iterator[np.ndarray]:
        """Yield arrays of distinct elements; together they cover the module once."""
        N = self.N
        counts = [self.p ** (self.k - v) for _, v, _ in self.basis]
        rows = [r for _, _, r in self.basis]
        inner = np.zeros((1, self.ncols), dtype=np.int64)
        split = len(rows)
        size = 1
        while split > 0 and size * counts[split - 1] <= chunk:
            split -= 1
            size *= counts[split]
            coeff = np.arange(counts[split], dtype=np.int64)
            inner = ((inner[:, None, :] + coeff[None, :, None] * rows[split][None, None, :]) % N
                     ).reshape(-1, self.ncols)
        outer_rows = rows[:split]
        for combo in itertools.product(*(range(c) for c in counts[:split])):
            offset = np.zeros(self.ncols, dtype=np.int64)
            for c, r in zip(combo, outer_rows):
                if c:
                    offset = offset + c * r
            yield (inner + offset) % N

    def elements(self) -> Iterator[tuple]:
        for block in self.iter_chunks():
            for row in block:
                yield tuple(int(x) for x in row)
