"""Loop-model definition: tile set, face weights, and model parameters.

Faces of the square lattice are decorated with one of nine tiles.  A tile is
a non-crossing pairing of a subset of its four edge midpoints; the dense
model uses only the two fully packed tiles, the dilute model all nine.

Tile catalogue (edge ids B, T, L, R):

    1  empty                     6  horizontal segment L-R
    2  lower-left corner B-L     7  vertical segment B-T
    3  upper-right corner T-R    8  double arc {B-L, T-R}
    4  lower-right corner B-R    9  double arc {B-R, T-L}
    5  upper-left corner T-L

Within the weight-degenerate pairs (2,3), (4,5), (6,7) the labels are fixed
by requiring the transfer matrix at u = 0 to reduce to a lattice shift,
which pins tiles 2, 3 to the B-L / T-R corners.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

B, T, L, R = 0, 1, 2, 3

TILE_LINKS: dict[int, tuple] = {
    1: (),
    2: ((B, L),),
    3: ((T, R),),
    4: ((B, R),),
    5: ((T, L),),
    6: ((L, R),),
    7: ((B, T),),
    8: ((B, L), (T, R)),
    9: ((B, R), (T, L)),
}

TILE_EDGES: dict[int, frozenset] = {
    t: frozenset(e for pair in links for e in pair) for t, links in TILE_LINKS.items()
}

DENSE_TILES = (8, 9)
DILUTE_TILES = (1, 2, 3, 4, 5, 6, 7, 8, 9)

# tile partner lookup: TILE_PARTNER[t][e] is the edge connected to e, or None
TILE_PARTNER: dict[int, dict] = {}
for _t, _links in TILE_LINKS.items():
    part: dict = {}
    for a, b in _links:
        part[a] = b
        part[b] = a
    TILE_PARTNER[_t] = part

# local midpoint coordinates of the edge centres, faces are unit squares
EDGE_MID = {B: (0.5, 0.0), T: (0.5, 1.0), L: (0.0, 0.5), R: (1.0, 0.5)}


@dataclass(frozen=True)
class ModelSpec:
    """A loop model at a root-of-unity point.

    kind is "dense" or "dilute"; p, pq are the coprime integers p < p' with
    crossing parameter lambda = pi (p'-p)/p' (dense) or pi (2p'-p)/(4p')
    (dilute), and contractible-loop fugacity beta = 2 cos(pi (p'-p)/p').
    The non-contractible fugacity alpha may be given directly or through
    gamma with alpha = 2 cos(gamma).
    """

    kind: str
    p: int
    pq: int
    u: float
    alpha: float | None = None
    gamma: float | None = None
    lam: float = field(init=False)
    beta: float = field(init=False)

    def __post_init__(self):
        if self.kind not in ("dense", "dilute"):
            raise ValueError(f"unknown model kind {self.kind!r}")
        p, pq = self.p, self.pq
        if not (0 < p < pq and math.gcd(p, pq) == 1):
            raise ValueError("need coprime integers 0 < p < p'")
        if self.kind == "dense":
            lam = math.pi * (pq - p) / pq
        else:
            lam = math.pi * (2 * pq - p) / (4 * pq)
        beta = 2.0 * math.cos(math.pi * (pq - p) / pq)
        if self.kind == "dilute":
            # same beta from the dilute parameterisation, as a consistency guard
            assert abs(beta + 2.0 * math.cos(4 * lam)) < 1e-12
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "beta", beta)
        if self.gamma is not None:
            a = 2.0 * math.cos(self.gamma)
            if self.alpha is not None and abs(self.alpha - a) > 1e-12:
                raise ValueError("alpha and gamma are inconsistent")
            object.__setattr__(self, "alpha", a)

    @property
    def tiles(self) -> tuple:
        return DENSE_TILES if self.kind == "dense" else DILUTE_TILES

    def isotropic(self) -> "ModelSpec":
        """The same model at its isotropic point u = lambda/2 resp. 3 lambda/2."""
        u = self.lam / 2 if self.kind == "dense" else 3 * self.lam / 2
        return ModelSpec(self.kind, self.p, self.pq, u, self.alpha, self.gamma)


def face_weights(spec: ModelSpec) -> tuple:
    """The nine tile weights rho_1..rho_9 at the spectral parameter of `spec`."""
    lam, u = spec.lam, spec.u
    sl = math.sin(lam)
    if abs(sl) < 1e-15:
        raise ValueError("crossing parameter is a multiple of pi")

    def s(x: float) -> float:
        return math.sin(x) / sl

    if spec.kind == "dense":
        return (0.0,) * 7 + (s(lam - u), s(u))
    r1 = s(2 * lam) * s(3 * lam) + s(u) * s(3 * lam - u)
    r23 = s(2 * lam) * s(3 * lam - u)
    r45 = s(2 * lam) * s(u)
    r67 = s(u) * s(3 * lam - u)
    r8 = s(2 * lam - u) * s(3 * lam - u)
    r9 = -s(u) * s(lam - u)
    return (r1, r23, r23, r45, r45, r67, r67, r8, r9)
