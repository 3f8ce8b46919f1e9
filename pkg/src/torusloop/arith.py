"""Arithmetic kernel: gcd conventions, multiplicative functions, Chebyshev
polynomials, and the winding-weight functions that attach Chebyshev loop
fugacities to lattice winding sectors.

Two families of weights appear.  The sector-resolved weights take a complex
exponential sum over residues and a parity projector; the sector-summed
weights reduce to rational combinations of cos(k*gamma) with Ramanujan-sum
integer coefficients, which is what makes the exact series pipeline possible.
An equivalent divisor-sum form (with Moebius/totient data) is implemented
independently and cross-checked.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache

IMAG_TOL = 1e-12


class ImaginaryResidueError(ArithmeticError):
    """A quantity that must be real came out with a large imaginary part."""


def gcd_conv(a: int, b: int) -> int:
    """gcd with the conventions i^j for windings: gcd(i, 0) = |i|, gcd(0, 0) = 0."""
    return math.gcd(a, b)


@lru_cache(maxsize=None)
def prime_factors(n: int) -> tuple:
    """Sorted (prime, multiplicity) pairs of n >= 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            k = 0
            while n % d == 0:
                n //= d
                k += 1
            out.append((d, k))
        d += 1
    if n > 1:
        out.append((n, 1))
    return tuple(out)


@lru_cache(maxsize=None)
def mobius(n: int) -> int:
    fac = prime_factors(n)
    if any(k > 1 for _, k in fac):
        return 0
    return -1 if len(fac) % 2 else 1


@lru_cache(maxsize=None)
def totient(n: int) -> int:
    out = n
    for p, _ in prime_factors(n):
        out = out // p * (p - 1)
    return out


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple:
    out = [1]
    for p, k in prime_factors(n):
        out = [d * p**j for d in out for j in range(k + 1)]
    return tuple(sorted(out))


class ArithCache:
    """Memoized mu, phi and divisor lists up to a bound, with definitional checks."""

    def __init__(self, bound: int):
        self.bound = bound
        self.mu = {n: mobius(n) for n in range(1, bound + 1)}
        self.phi = {n: totient(n) for n in range(1, bound + 1)}
        self.divs = {n: divisors(n) for n in range(1, bound + 1)}

    def selfcheck(self) -> bool:
        for n in range(1, self.bound + 1):
            squarefree = all(n % (p * p) for p in range(2, int(n**0.5) + 1))
            if not squarefree:
                if self.mu[n] != 0:
                    return False
            else:
                nprimes = len(prime_factors(n))
                if self.mu[n] != (-1) ** nprimes:
                    return False
            if self.phi[n] != sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1):
                return False
            if self.divs[n] != tuple(d for d in range(1, n + 1) if n % d == 0):
                return False
        return True


def chebyshev_T(k: int, x):
    """T_k(x) of the first kind via the recurrence; exact on exact inputs."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return x * 0 + 1
    prev, cur = x * 0 + 1, x
    for _ in range(k - 1):
        prev, cur = cur, 2 * x * cur - prev
    return cur


@lru_cache(maxsize=None)
def ramanujan_sum(q: int, m: int) -> int:
    """c_q(m) = sum over residues k coprime to q of exp(2*pi*i*k*m/q)."""
    g = math.gcd(q, abs(m))
    return mobius(q // g) * totient(q) // totient(q // g)


def _real_part(z: complex) -> float:
    if abs(z.imag) > IMAG_TOL * max(1.0, abs(z.real)):
        raise ImaginaryResidueError(f"imaginary residue {z.imag!r}")
    return z.real


def gamma_v(d: int, m: int, alpha: float, v: int) -> float:
    """Sector-resolved winding weight for d != 0.

    (1/|2d|) sum_{j} (1 + (-1)^{j+v} + (-1)^m + (-1)^{m+j+d+v})
                e^{i pi j m / d} T_{gcd(d,j)}(alpha/2),
    with j running over d consecutive integers starting at 0 (downwards for
    negative d).  Real by construction; the imaginary residue is certified.
    """
    if d == 0:
        raise ValueError("d must be nonzero")
    js = range(0, d, 1 if d > 0 else -1)
    total = 0j
    half = alpha / 2.0
    for j in js:
        proj = 1 + (-1) ** ((j + v) % 2) + (-1) ** (m % 2) + (-1) ** ((m + j + d + v) % 2)
        if proj == 0:
            continue
        total += proj * cmath.exp(1j * math.pi * j * m / d) * chebyshev_T(gcd_conv(d, abs(j)), half)
    return _real_part(total / abs(2 * d))


def gamma_dm(d: int, m: int, gamma: float) -> float:
    """Sector-summed winding weight (1/d) sum_{j=1..d} e^{2 pi i j m/d} cos(gcd(d,j) gamma)."""
    if d <= 0:
        raise ValueError("d must be positive")
    total = 0j
    for j in range(1, d + 1):
        total += cmath.exp(2j * math.pi * j * m / d) * math.cos(gcd_conv(d, j) * gamma)
    return _real_part(total / d)


def gamma_dm_cospoly(d: int, m: int) -> dict:
    """gamma_dm as an exact map {k: Fraction} meaning sum_k c_k cos(k*gamma).

    Grouping j by g = gcd(d, j) turns the residue sum into a Ramanujan sum:
    (1/d) sum_{g | d} c_{d/g}(m) cos(g*gamma).
    """
    if d <= 0:
        raise ValueError("d must be positive")
    out: dict = {}
    for g in divisors(d):
        c = ramanujan_sum(d // g, m)
        if c:
            out[g] = out.get(g, Fraction(0)) + Fraction(c, d)
    return {k: v for k, v in out.items() if v}


def lambda_fsz_cospoly(M: int, N: int) -> dict:
    """Half of the divisor-sum weight Lambda(M, N), exact as {k: Fraction} in cos(k*gamma).

    (1/2) Lambda(d, n) = sum_{r | d/n} (1/(n r)) sum_{a | n r} mu(a) cos((n r / a) gamma),
    here with d = M and n = N, requiring N | M.
    """
    if M <= 0 or N <= 0 or M % N:
        raise ValueError("need positive M, N with N | M")
    out: dict = {}
    for r in divisors(M // N):
        nr = N * r
        for a in divisors(nr):
            mu = mobius(a)
            if mu:
                k = nr // a
                out[k] = out.get(k, Fraction(0)) + Fraction(mu, nr)
    return {k: v for k, v in out.items() if v}


def lambda_prime_form(M: int, N: int, e0: float) -> float:
    """Lambda(M, N) from its prime-decomposition form.

    With M = prod p_i^{alpha_i} and N = prod p_i^{beta_i}, sum over exponent
    vectors beta_i <= gamma_i <= alpha_i and deletion flags delta_i in
    {0, min(gamma_i, 1)} of
        2 / prod p_i^{gamma_i} * (-1)^{sum delta_i} cos(pi e0 prod p_i^{gamma_i - delta_i}).
    """
    if M <= 0 or N <= 0 or M % N:
        raise ValueError("need positive M, N with N | M")
    fac = prime_factors(M)
    primes = [p for p, _ in fac]
    alphas = [k for _, k in fac]
    betas = []
    for p, _ in fac:
        b = 0
        nn = N
        while nn % p == 0:
            nn //= p
            b += 1
        betas.append(b)

    total = 0.0
    def rec_gamma(i, denom, gammas):
        nonlocal total
        if i == len(primes):
            def rec_delta(j, sign, arg):
                nonlocal total
                if j == len(primes):
                    total += (2.0 / denom) * sign * math.cos(math.pi * e0 * arg)
                    return
                for delta in range(min(gammas[j], 1) + 1):
                    rec_delta(j + 1, sign * (-1) ** delta,
                              arg * primes[j] ** (gammas[j] - delta))
            rec_delta(0, 1, 1)
            return
        for g in range(betas[i], alphas[i] + 1):
            rec_gamma(i + 1, denom * primes[i] ** g, gammas + [g])
    rec_gamma(0, 1, [])
    return total


def lambda_fsz(M: int, N: int, e0: float) -> float:
    """Lambda(M, N) at gamma = pi*e0; both closed forms computed and reconciled."""
    gamma = math.pi * e0
    divisor_form = 2.0 * sum(float(c) * math.cos(k * gamma)
                             for k, c in lambda_fsz_cospoly(M, N).items())
    prime_form = lambda_prime_form(M, N, e0)
    if abs(divisor_form - prime_form) > 1e-12 * max(1.0, abs(divisor_form)):
        raise ArithmeticError(
            f"Lambda({M},{N}) forms disagree: {divisor_form} vs {prime_form}")
    return divisor_form


def s1_elements(d: int, window: int) -> list:
    """The pairs ((m - l*d)/gcd(m,d), d/gcd(m,d)) with |first| <= window.

    Returned with multiplicity: one entry per generating (m, l), so the
    caller can certify the set is degeneracy-free.
    """
    out = []
    for m in range(1, d + 1):
        g = math.gcd(m, d)
        for l in range(-window - 1, window + 2):
            if (m - l * d) % g:
                raise ArithmeticError("gcd does not divide m - l*d")
            P = (m - l * d) // g
            if abs(P) <= window:
                out.append((P, d // g))
    return out


def s2_elements(d: int, window: int) -> set:
    """The pairs (P, N) with N | d, gcd(P, N) = 1 and |P| <= window."""
    return {(P, N) for N in divisors(d)
            for P in range(-window, window + 1) if math.gcd(P, N) == 1}


def verify_s1_s2(d: int, window: int = 25) -> bool:
    """Windowed equality of the two index sets plus inverse-map roundtrip."""
    s1_list = s1_elements(d, window)
    if len(s1_list) != len(set(s1_list)):
        return False  # a degenerate (m, l) pair would break the bijection
    if set(s1_list) != s2_elements(d, window):
        return False
    # (P, N) -> (m, l) -> (P, N) must be the identity
    for (P, N) in set(s1_list):
        t = P * d // N
        m = (t - 1) % d + 1
        l = (m - t) // d
        if m - l * d != t or not 1 <= m <= d:
            return False
        g = math.gcd(m, d)
        if (m - l * d) // g != P or d // g != N:
            return False
    return True


def verify_master(a: int, l: int) -> bool:
    """Exact rational check of (a*l/phi(a*l)) sum_{k|l} mu(a*k)/(a*k) = mu(a)/phi(a)."""
    if a <= 0 or l <= 0:
        raise ValueError("a and l must be positive")
    lhs = Fraction(a * l, totient(a * l)) * sum(
        Fraction(mobius(a * k), a * k) for k in divisors(l))
    return lhs == Fraction(mobius(a), totient(a))


def gamma_via_mobius_inversion(d: int, n: int, gamma: float) -> float:
    """Gamma_{d/n, d} from the Moebius-inverted divisor form, for n | d.

    phi(n) Gamma_{d/n, d} = sum_{a|n} mu(a) (n/(a d)) sum_{l=1..a d/n}
                            cos(gcd(a d/n, l) * (n/a) * gamma).
    """
    if d % n:
        raise ValueError("n must divide d")
    total = 0.0
    for a in divisors(n):
        mu = mobius(a)
        if not mu:
            continue
        top = a * d // n
        inner = sum(math.cos(math.gcd(top, l) * (n / a) * gamma)
                    for l in range(1, top + 1))
        total += mu * (n / (a * d)) * inner
    return total / totient(n)


def gamma_via_totient_form(d: int, n: int, gamma: float) -> float:
    """Gamma_{d/n, d} from the fully reduced divisor/totient form, for n | d."""
    if d % n:
        raise ValueError("n must divide d")
    total = 0.0
    for a in divisors(n):
        mu = mobius(a)
        if not mu:
            continue
        top = a * d // n
        inner = sum(totient(top // r) * math.cos((n * r / a) * gamma)
                    for r in divisors(top))
        total += mu / a * inner
    return total * n / (totient(n) * d)
