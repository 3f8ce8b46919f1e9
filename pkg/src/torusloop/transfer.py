"""Transfer matrices on standard modules of the periodic Temperley-Lieb
algebra (dense model) and its dilute enlargement.

Link states live on N sites around the periodic row.  Each site carries a
defect "|", a vacancy "." (dilute only), an arc opener "(" or an arc closer
")"; arcs pair openers to closers by the unique non-crossing cyclic matching
and may pass across the periodic seam between sites N-1 and 0.  With d > 0
defects every defect gap must be balanced.  The dimension of the dense
module is binom(N, (N-d)/2).

The one-row transfer matrix acts by stacking a row of faces on a link state
and reading off the top.  Scalars produced while contracting:

  * each contractible closed loop contributes beta;
  * for d = 0, each loop closing around the periodic direction contributes
    omega + 1/omega (the twist-parameterised non-contractible fugacity);
  * each defect strand contributes omega^{+1} per rightward crossing of the
    seam and omega^{-1} per leftward crossing;
  * a row that joins two defects annihilates the state.

Weights are Laurent polynomials in omega with float coefficients.  Traces of
transfer-matrix powers decompose as sum_j omega^{-j} C_{d,j}; the Markov
trace reassembles the torus partition functions from the C_{d,j} with
Chebyshev fugacity factors, the defining cross-check being equality with the
lattice enumeration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator

import numpy as np

from .arith import chebyshev_T, gcd_conv
from .model import (B, L, R, T, TILE_EDGES, TILE_LINKS, TILE_PARTNER,
                    ModelSpec, face_weights)

TRANSFER_SITE_GUARD = {"dense": 10, "dilute": 8}

_SORT_ORDER = {"|": 0, "(": 1, ")": 2, ".": 3}


class TransferSizeError(ValueError):
    """Module too large for dense matrix powering."""


class OmegaLaurent:
    """Finite Laurent polynomial sum_k c_k omega^k with float coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict | None = None):
        self.coeffs = {k: c for k, c in (coeffs or {}).items() if c != 0.0}

    @classmethod
    def constant(cls, c: float) -> "OmegaLaurent":
        return cls({0: float(c)})

    @classmethod
    def monomial(cls, k: int, c: float = 1.0) -> "OmegaLaurent":
        return cls({k: float(c)})

    def coeff(self, k: int) -> float:
        return self.coeffs.get(k, 0.0)

    def support(self) -> tuple:
        return tuple(sorted(self.coeffs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "OmegaLaurent") -> "OmegaLaurent":
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0.0) + c
        return OmegaLaurent(out)

    def __mul__(self, other: "OmegaLaurent") -> "OmegaLaurent":
        out: dict = {}
        for k1, c1 in self.coeffs.items():
            for k2, c2 in other.coeffs.items():
                out[k1 + k2] = out.get(k1 + k2, 0.0) + c1 * c2
        return OmegaLaurent(out)

    def scale(self, c: float) -> "OmegaLaurent":
        return OmegaLaurent({k: c * v for k, v in self.coeffs.items()})

    def evaluate(self, omega: complex) -> complex:
        return sum(c * omega**k for k, c in self.coeffs.items())

    def max_abs(self) -> float:
        return max((abs(c) for c in self.coeffs.values()), default=0.0)

    def __repr__(self):
        parts = [f"{c:+g}*w^{k}" for k, c in sorted(self.coeffs.items())]
        return f"OmegaLaurent({' '.join(parts) or '0'})"


# ---------------------------------------------------------------------------
# link states


def match_word(word: str):
    """Non-crossing cyclic matching of a link word.

    Returns a list of (opener, closer) site pairs, or None when the word is
    not a valid link state (a defect gap fails to balance).  Arcs cross the
    periodic seam exactly when closer < opener.
    """
    N = len(word)
    if word.count("(") != word.count(")"):
        return None
    if "|" in word:
        starts = [word.index("|") + 1]
    else:
        starts = range(N)
    for rot in starts:
        stack: list = []
        pairs = []
        ok = True
        for t in range(N):
            i = (rot + t) % N
            ch = word[i]
            if ch == "(":
                stack.append(i)
            elif ch == ")":
                if not stack:
                    ok = False
                    break
                pairs.append((stack.pop(), i))
            elif ch == "|":
                if stack:
                    ok = False
                    break
        if ok and not stack:
            return pairs
    return None


def _word_sort_key(word: str) -> tuple:
    return tuple(_SORT_ORDER[ch] for ch in word)


@lru_cache(maxsize=None)
def link_states(kind: str, N: int, d: int) -> tuple:
    """All canonical link words with d defects, sorted defects-leftmost first."""
    if not 0 <= d <= N:
        raise ValueError("need 0 <= d <= N")
    if kind == "dense":
        if (N - d) % 2:
            raise ValueError("dense model needs d = N mod 2")
        alphabet = "|()"
    else:
        alphabet = "|()."
    found = []
    for word in product(alphabet, repeat=N):
        w = "".join(word)
        if w.count("|") != d:
            continue
        if kind == "dense" and "." in w:
            continue
        if match_word(w) is not None:
            found.append(w)
    return tuple(sorted(found, key=_word_sort_key))


def arc_crossings(word: str) -> dict:
    """Per-site arc data: site -> (partner, signed crossing when leaving site)."""
    out = {}
    for opener, closer in match_word(word):
        cross = 1 if closer < opener else 0
        out[opener] = (closer, +cross)
        out[closer] = (opener, -cross)
    return out


# ---------------------------------------------------------------------------
# one-row action


def _apply_row(kind: str, rho: tuple, word: str) -> Iterator[tuple]:
    """All single-row transitions from a link state.

    Yields (rho_product, omega_power, n_alpha_loops, n_beta_loops, new_word)
    for every structurally valid row of tiles with nonzero weight.  Rows that
    join two defects are dropped (they act as zero on the standard module).
    """
    N = len(word)
    occ_b = [ch != "." for ch in word]
    arcs = arc_crossings(word)
    defects = {i for i, ch in enumerate(word) if ch == "|"}
    d = len(defects)
    tile_options = (8, 9) if kind == "dense" else (1, 2, 3, 4, 5, 6, 7, 8, 9)
    options_by_b = {
        flag: tuple(t for t in tile_options
                    if (B in TILE_EDGES[t]) == flag and rho[t - 1] != 0.0)
        for flag in (False, True)
    }

    tiles = [0] * N

    def emit() -> tuple | None:
        # walk the composite diagram: row of tiles over the old link state
        used_links: set = set()

        def step(col: int, entry: int):
            """One strand move through tile `col`; returns (exit_info, seam_delta)."""
            t = tiles[col]
            out = TILE_PARTNER[t][entry]
            used_links.add((col, frozenset((entry, out))))
            if out == T:
                return ("top", col), 0
            if out == B:
                return ("state", col), 0
            if out == R:
                nxt = (col + 1) % N
                return ("tile", nxt, L), (1 if nxt == 0 else 0)
            nxt = (col - 1) % N
            return ("tile", nxt, R), (-1 if col == 0 else 0)

        def walk_from_tile(col: int, entry: int):
            """Follow a strand until it hits a top edge or a defect anchor.

            Returns (kind, site, seam_total) with kind in {"top", "anchor"}.
            """
            cross = 0
            while True:
                info, dcross = step(col, entry)
                cross += dcross
                if info[0] == "top":
                    return "top", info[1], cross
                if info[0] == "state":
                    site = info[1]
                    if site in defects:
                        return "anchor", site, cross
                    partner, dc = arcs[site]
                    cross += dc
                    col, entry = partner, B
                    continue
                _, col, entry = info

        omega_power = 0
        new_defects = {}
        # defect strands upward
        for site in sorted(defects):
            kind_, end, cross = walk_from_tile(site, B)
            if kind_ == "anchor":
                return None  # two defects joined: zero in the standard module
            if end in new_defects:
                raise AssertionError("two defects exiting the same top edge")
            new_defects[end] = True
            omega_power += cross

        # strands seen from the top edges
        top_occ = [T in TILE_EDGES[tiles[c]] for c in range(N)]
        new_arcs = []
        seen_tops = set(new_defects)
        for c in range(N):
            if not top_occ[c] or c in seen_tops:
                continue
            kind_, end, cross = walk_from_tile(c, T)
            if kind_ == "anchor":
                raise AssertionError("anchor reached twice")
            seen_tops.add(c)
            seen_tops.add(end)
            new_arcs.append((c, end, cross))

        # remaining strands are closed loops
        n_beta = 0
        n_alpha = 0
        for c in range(N):
            t = tiles[c]
            for pair in TILE_LINKS[t]:
                if (c, frozenset(pair)) in used_links:
                    continue
                cross = 0
                col, entry = c, pair[0]
                start = (c, frozenset(pair))
                while True:
                    info, dcross = step(col, entry)
                    cross += dcross
                    if info[0] == "state":
                        site = info[1]
                        partner, dc = arcs[site]
                        cross += dc
                        col, entry = partner, B
                    elif info[0] == "tile":
                        _, col, entry = info
                    else:
                        raise AssertionError("closed loop reached a top edge")
                    if (col, frozenset((entry, TILE_PARTNER[tiles[col]][entry]))) == start:
                        break
                if cross % 2 == 0:
                    n_beta += 1
                else:
                    if d > 0:
                        raise AssertionError(
                            "non-contractible loop in a module with defects")
                    n_alpha += 1

        # assemble and validate the new word
        letters = ["."] * N
        for c in new_defects:
            letters[c] = "|"
        computed = {}
        for a, b, cross in new_arcs:
            if cross % 2 == 0:
                opener, closer = min(a, b), max(a, b)
            else:
                opener, closer = max(a, b), min(a, b)
            letters[opener] = "("
            letters[closer] = ")"
            computed[(opener, closer)] = None
        new_word = "".join(letters)
        pairs = match_word(new_word)
        if pairs is None or set(pairs) != set(computed):
            raise AssertionError(
                f"inconsistent composite diagram {word} -> {new_word}")

        rho_prod = 1.0
        for t in tiles:
            rho_prod *= rho[t - 1]
        return rho_prod, omega_power, n_alpha, n_beta, new_word

    def rec(col: int):
        if col == N:
            if (R in TILE_EDGES[tiles[N - 1]]) != (L in TILE_EDGES[tiles[0]]):
                return
            result = emit()
            if result is not None:
                yield result
            return
        for t in options_by_b[occ_b[col]]:
            if col > 0 and ((L in TILE_EDGES[t]) != (R in TILE_EDGES[tiles[col - 1]])):
                continue
            if N == 1 and ((L in TILE_EDGES[t]) != (R in TILE_EDGES[t])):
                continue
            tiles[col] = t
            yield from rec(col + 1)

    yield from rec(0)


@dataclass
class TransferOperator:
    """One-row transfer matrix on the standard module with d defects."""

    spec: ModelSpec
    N: int
    d: int
    basis: tuple
    matrix: list  # matrix[i][j]: OmegaLaurent weight of basis[j] -> basis[i]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def to_numeric(self, omega: complex) -> np.ndarray:
        out = np.zeros((self.dim, self.dim), dtype=complex)
        for i in range(self.dim):
            for j in range(self.dim):
                entry = self.matrix[i][j]
                if entry is not None:
                    out[i, j] = entry.evaluate(omega)
        return out


@lru_cache(maxsize=256)
def build_transfer(spec: ModelSpec, N: int, d: int, _basis: tuple | None = None) -> TransferOperator:
    """Assemble the transfer operator of `spec` on the (N, d) standard module."""
    if spec.kind == "dense" and (N - d) % 2:
        raise ValueError("dense model needs d = N mod 2")
    if N > TRANSFER_SITE_GUARD[spec.kind]:
        raise TransferSizeError(
            f"{spec.kind} transfer matrix limited to N <= {TRANSFER_SITE_GUARD[spec.kind]}")
    basis = _basis if _basis is not None else link_states(spec.kind, N, d)
    index = {w: i for i, w in enumerate(basis)}
    rho = face_weights(spec)
    dim = len(basis)
    matrix: list = [[None] * dim for _ in range(dim)]
    for j, word in enumerate(basis):
        for rho_prod, k, n_alpha, n_beta, new_word in _apply_row(spec.kind, rho, word):
            weight = OmegaLaurent.monomial(k, rho_prod * spec.beta**n_beta)
            for _ in range(n_alpha):
                weight = weight * OmegaLaurent({1: 1.0, -1: 1.0})
            i = index[new_word]
            cur = matrix[i][j]
            matrix[i][j] = weight if cur is None else cur + weight
    return TransferOperator(spec, N, d, basis, matrix)


def _matmul(A: list, Bm: list, dim: int) -> list:
    """Laurent matrix product with correctly rounded per-power sums."""
    out: list = [[None] * dim for _ in range(dim)]
    for i in range(dim):
        Ai = A[i]
        for j in range(dim):
            buckets: dict = {}
            for k in range(dim):
                a = Ai[k]
                b = Bm[k][j]
                if a is None or b is None:
                    continue
                for ka, ca in a.coeffs.items():
                    for kb, cb in b.coeffs.items():
                        buckets.setdefault(ka + kb, []).append(ca * cb)
            if buckets:
                out[i][j] = OmegaLaurent(
                    {k: math.fsum(v) for k, v in buckets.items()})
    return out


def matrix_power_trace(op: TransferOperator, M: int) -> OmegaLaurent:
    """Trace of the M-th power as a Laurent polynomial in omega."""
    dim = op.dim
    if M == 0:
        return OmegaLaurent.constant(float(dim))
    P = op.matrix
    for _ in range(M - 1):
        P = _matmul(P, op.matrix, dim)
    buckets: dict = {}
    for i in range(dim):
        entry = P[i][i]
        if entry is not None:
            for k, c in entry.coeffs.items():
                buckets.setdefault(k, []).append(c)
    return OmegaLaurent({k: math.fsum(v) for k, v in buckets.items()})


def trace_TM(spec: ModelSpec, N: int, M: int, d: int) -> OmegaLaurent:
    """tr T(u)^M on the (N, d) standard module: sum_j omega^{-j} C_{d,j}."""
    return matrix_power_trace(build_transfer(spec, N, d), M)


def C_coefficients(spec: ModelSpec, N: int, M: int, d: int) -> dict:
    """The coefficients C_{d,j} for j in [-M, M], from the omega expansion."""
    tr = trace_TM(spec, N, M, d)
    assert all(abs(k) <= M for k in tr.coeffs), "trace support exceeds [-M, M]"
    return {j: tr.coeff(-j) for j in range(-M, M + 1)}


def markov_Z(spec: ModelSpec, M: int, N: int, h: int, v: int,
             alpha: float | None = None) -> float:
    """Torus partition function in sector (h, v) via the Markov trace.

    Z^{(h,v)} = sum_{d >= 0, d = h mod 2} mult(d) sum_{j = v mod 2}
                T_{gcd(d,|j|)}(alpha/2) C_{d,j},
    with mult(d) = 1 for d = 0 and 2 for d > 0 (the d and -d modules carry
    equal weight since C_{-d,j} = C_{d,-j} and the Chebyshev factor is even).
    """
    if alpha is None:
        alpha = spec.alpha
    if alpha is None:
        raise ValueError("no non-contractible fugacity given")
    if spec.kind == "dense":
        if (h, v) != (N % 2, M % 2):
            raise ValueError(
                f"dense {M}x{N} torus lies in sector {(N % 2, M % 2)}, not {(h, v)}")
    half = alpha / 2.0
    total = 0.0
    for d in range(h % 2, N + 1, 2):
        if spec.kind == "dense" and (N - d) % 2:
            continue
        C = C_coefficients(spec, N, M, d)
        mult = 1.0 if d == 0 else 2.0
        s = 0.0
        for j in range(-M, M + 1):
            if (j - v) % 2:
                continue
            c = C[j]
            if c:
                s += chebyshev_T(gcd_conv(d, abs(j)), half) * c
        total += mult * s
    return total


def commutator_residual(spec_a: ModelSpec, spec_b: ModelSpec, N: int, d: int) -> float:
    """Largest coefficient of [T(u), T(u')] on the (N, d) module."""
    A = build_transfer(spec_a, N, d)
    Bo = build_transfer(spec_b, N, d)
    AB = _matmul(A.matrix, Bo.matrix, A.dim)
    BA = _matmul(Bo.matrix, A.matrix, A.dim)
    worst = 0.0
    for i in range(A.dim):
        for j in range(A.dim):
            x = AB[i][j] or OmegaLaurent()
            y = BA[i][j] or OmegaLaurent()
            diff = x + y.scale(-1.0)
            worst = max(worst, diff.max_abs())
    return worst


def leading_eigenvalue(spec: ModelSpec, N: int, d: int = 0, omega: complex = 1.0) -> float:
    """Largest-magnitude transfer eigenvalue at a fixed twist."""
    mat = build_transfer(spec, N, d).to_numeric(omega)
    eigs = np.linalg.eigvals(mat)
    lead = eigs[np.argmax(np.abs(eigs))]
    if abs(lead.imag) > 1e-8 * max(1.0, abs(lead.real)):
        raise ArithmeticError("leading eigenvalue is not real")
    return float(lead.real)


def effective_central_charge(spec: ModelSpec, sizes: tuple = (6, 8, 10)) -> float:
    """Finite-size estimate of c_eff from -ln Lambda_N / N = f - pi c_eff / (6 N^2).

    Pairs of consecutive sizes give c_eff estimates; the two estimates are
    Richardson-extrapolated in 1/N^2.
    """
    fs = {}
    for N in sizes:
        lam = leading_eigenvalue(spec.isotropic(), N, d=0, omega=1.0)
        fs[N] = -math.log(lam) / N
    ests = []
    pairs = list(zip(sizes, sizes[1:]))
    for n1, n2 in pairs:
        c = 6 * (fs[n2] - fs[n1]) / (math.pi * (1 / n1**2 - 1 / n2**2))
        ests.append(c)
    if len(ests) == 1:
        return ests[0]
    # extrapolate the pair estimates (midpoint scale 1/(n1*n2)) to zero
    x1 = 1.0 / (pairs[0][0] * pairs[0][1])
    x2 = 1.0 / (pairs[1][0] * pairs[1][1])
    return ests[1] + (ests[1] - ests[0]) * x2 / (x1 - x2)
