"""Invariant inner products, the face sign function, and signatures.

Every module here carries an invariant indefinite inner product that is
diagonal in the face basis with values in {+1, -1}.  The sign of a face is
determined by a difference rule: crossing an edge flips the sign exactly
when the count of same-orientation supported edges above it is odd.
Conservation makes the rule path independent, so integrating it along any
path from the weight-zero face (normalized to +1) gives a well defined
global sign function.

Two ways to compute the signature of a finite component module:

* directly, counting faces by sign;
* combinatorially, two-coloring the subcomponents cut out by the red
  overlay edges and counting faces per color.

Both must agree; their agreement is the central cross-validation of the
whole construction.  A module is unitarizable iff one of the counts is 0,
and five equivalent criteria for that are evaluated independently.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .configuration import Configuration
from .lattice import Edge, Vertex
from .linalg import SparseMat
from .representation import ModuleRep
from .topology import Component, overlay, subcomponents

Signature = tuple[int, int]  # unordered pair, stored sorted ascending


def _unit_block(lat) -> tuple[list[int], list[int]]:
    """Signed step sequences realizing weight change +1 and -1."""
    m, n = lat.m, lat.n
    if n == 1:
        y0 = 1
    else:
        y0 = pow(m, -1, n)
    x0 = (m * y0 - 1) // n
    up = [2] * y0 + [1] * x0      # y0 steps of +beta then x0 of +alpha: net +1
    down = [-2] * y0 + [-1] * x0  # the reverse signs: net -1
    return up, down


def path_phase2(cfg: Configuration, steps) -> int:
    """Doubled phase accumulated along a signed step path from weight 0.

    Each token +-1 or +-2 moves by +-alpha or +-beta and contributes the
    above-count of the crossed edge.  Only the parity is path independent.
    """
    a, b = cfg.lat.alpha, cfg.lat.beta
    w = 0
    total = 0
    for s in steps:
        if s == 1:
            total += cfg.count_above(1, 2 * w + a)
            w += a
        elif s == -1:
            total += cfg.count_above(1, 2 * w - a)
            w -= a
        elif s == 2:
            total += cfg.count_above(2, 2 * w + b)
            w += b
        elif s == -2:
            total += cfg.count_above(2, 2 * w - b)
            w -= b
        else:
            raise ValueError(f"signed step must be in {{1,-1,2,-2}}, got {s!r}")
    return total


class SignTable:
    """Memoized global sign function, +1 at weight 0."""

    def __init__(self, cfg: Configuration):
        self.cfg = cfg
        self._signs: dict[int, int] = {0: 1}
        self._up, self._down = _unit_block(cfg.lat)

    def sign(self, w) -> int:
        w = self.cfg.lat.face_weight(w) if not isinstance(w, int) else w
        if w in self._signs:
            return self._signs[w]
        # extend the table from the nearest computed weight, unit by unit
        cur = max(x for x in self._signs if x < w) if w > 0 else min(self._signs)
        sign = self._signs[cur]
        while cur != w:
            steps_phase = self._block_phase(cur, w > cur)
            sign = sign if steps_phase % 2 == 0 else -sign
            cur += 1 if w > cur else -1
            self._signs[cur] = sign
        return sign

    def _block_phase(self, start: int, upward: bool) -> int:
        a, b = self.cfg.lat.alpha, self.cfg.lat.beta
        w = start
        total = 0
        for s in self._up if upward else self._down:
            if s == 2:
                total += self.cfg.count_above(2, 2 * w + b)
                w += b
            elif s == -2:
                total += self.cfg.count_above(2, 2 * w - b)
                w -= b
            elif s == 1:
                total += self.cfg.count_above(1, 2 * w + a)
                w += a
            else:
                total += self.cfg.count_above(1, 2 * w - a)
                w -= a
        assert w == start + (1 if upward else -1)
        return total


def face_sign(cfg: Configuration, f, table: SignTable | None = None) -> int:
    """Global sign of a face, via a fixed staircase from weight 0."""
    return (table or SignTable(cfg)).sign(f)


@dataclass
class SignConsistencyReport:
    vertex_failures: list[Vertex]
    path_failures: list[str]
    paths_checked: int

    @property
    def ok(self) -> bool:
        return not self.vertex_failures and not self.path_failures


def check_sign_consistency(cfg: Configuration, window: tuple[int, int],
                           box: int = 4, backtracks: int = 10,
                           rng=None) -> SignConsistencyReport:
    """Brute-force path independence of the phase parity.

    (a) The vertex consistency identity: at every window vertex the above
    counts satisfy up + right = down + left as exact integers.
    (b) For each target weight reachable inside a step box, every monotone
    interleaving (and a sample of backtracking paths) accumulates the same
    phase parity.
    """
    import random
    from itertools import combinations

    rng = rng or random.Random(0)
    lat = cfg.lat
    a, b = lat.alpha, lat.beta
    vertex_failures = []
    lo, hi = window
    parity = (a + b) % 2
    first = 2 * lo + (0 if (2 * lo) % 2 == parity else 1)
    for t in range(first, 2 * hi + 1, 2):
        if (cfg.count_above(1, t + b) + cfg.count_above(2, t + a)
                != cfg.count_above(1, t - b) + cfg.count_above(2, t - a)):
            vertex_failures.append(lat.vertex_of_val2(t))
    path_failures = []
    paths_checked = 0
    for sgn in (1, -1):
        for na in range(box + 1):
            for nb in range(box + 1):
                if na == nb == 0:
                    continue
                target = sgn * (na * a + nb * b)
                parities = set()
                for pos in combinations(range(na + nb), nb):
                    steps = [sgn * 1] * (na + nb)
                    for p in pos:
                        steps[p] = sgn * 2
                    parities.add(path_phase2(cfg, steps) % 2)
                    paths_checked += 1
                base = [sgn * 1] * na + [sgn * 2] * nb
                for _ in range(backtracks):
                    steps = list(base)
                    for _ in range(rng.randrange(1, 4)):
                        s = rng.choice([1, -1, 2, -2])
                        at = rng.randrange(0, len(steps) + 1)
                        steps[at:at] = [s, -s]
                    rng.shuffle(steps)  # endpoint is preserved, order is not needed
                    parities.add(path_phase2(cfg, steps) % 2)
                    paths_checked += 1
                if len(parities) != 1:
                    path_failures.append(f"parity differs on paths to weight {target}")
    return SignConsistencyReport(vertex_failures, path_failures, paths_checked)


# -- the invariant form on a module --------------------------------------------


def gram_diag(rep: ModuleRep, table: SignTable | None = None) -> list[int]:
    """Diagonal of the invariant form in the face basis."""
    table = table or SignTable(rep.cfg)
    return [table.sign(w) for w in rep.weights]


def gram_matrix(rep: ModuleRep, table: SignTable | None = None) -> SparseMat:
    return SparseMat.diagonal([Fraction(s) for s in gram_diag(rep, table)])


@dataclass
class InvarianceReport:
    failures: list[str]
    checked: int

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_invariance(rep: ModuleRep, table: SignTable | None = None) -> InvarianceReport:
    """conj-transpose(X_i^+) G = G X_i^- and H real, as exact identities.

    Entry presence is symmetric between the two sides even on windowed
    modules, so no boundary skipping is needed here.
    """
    G = gram_matrix(rep, table)
    failures = []
    checked = 0
    for i in (1, 2):
        plus, minus = rep.matrix(f"X{i}+"), rep.matrix(f"X{i}-")
        if plus.conj_transpose() @ G != G @ minus:
            failures.append(f"form invariance fails for X{i}+-")
        checked += 1
    H = rep.h_matrix()
    if H.conj_transpose() != H:
        failures.append("H is not real diagonal")
    checked += 1
    return InvarianceReport(failures=failures, checked=checked)


def adjoint_matrix(rep: ModuleRep, gen: str, table: SignTable | None = None) -> SparseMat:
    """Form adjoint G^-1 M^dagger G (G is its own inverse)."""
    G = gram_matrix(rep, table)
    return G @ rep.matrix(gen).conj_transpose() @ G


# -- signatures ------------------------------------------------------------------


def signature_direct(cfg: Configuration, comp: Component,
                     table: SignTable | None = None) -> Signature:
    """Counts of faces by global sign; unordered, returned sorted."""
    if not comp.finite:
        raise ValueError("signature of an infinite component; use signature_window")
    table = table or SignTable(cfg)
    pos = sum(1 for w in comp.weights if table.sign(w) > 0)
    return tuple(sorted((pos, len(comp.weights) - pos)))


def signature_window(cfg: Configuration, comp: Component, window: tuple[int, int],
                     table: SignTable | None = None) -> tuple[Signature, bool]:
    """Window-restricted sign counts; the flag marks the result partial."""
    table = table or SignTable(cfg)
    ws = [w for w in comp.weights if window[0] <= w <= window[1]]
    pos = sum(1 for w in ws if table.sign(w) > 0)
    return tuple(sorted((pos, len(ws) - pos))), not comp.finite


def signature_coloring(cfg: Configuration, comp: Component,
                       involution: str = "star") -> Signature:
    """Face counts per color of the two-colored red-edge decomposition.

    Never inspects the sign function or the formal parameter; this is the
    independent combinatorial route.
    """
    if not comp.finite:
        raise ValueError("coloring signature needs a finite component")
    ov = overlay(cfg, comp, involution)
    pieces = subcomponents(cfg, comp, ov)
    pos = sum(len(p.weights) for p in pieces if p.color > 0)
    neg = sum(len(p.weights) for p in pieces if p.color < 0)
    return tuple(sorted((pos, neg)))


# -- unitarizability -------------------------------------------------------------


@dataclass
class UnitarizabilityReport:
    component_id: int
    involution: str
    conditions: dict[str, bool]
    verdict: bool

    @property
    def agree(self) -> bool:
        return len(set(self.conditions.values())) == 1


def unitarizability_report(cfg: Configuration, comp: Component,
                           involution: str = "star") -> UnitarizabilityReport:
    """Five independent equivalent criteria for a definite invariant form.

    (i) a zero in the coloring signature; (ii) the sign function constant on
    the component; (iii) positive edge polynomial on every internal edge;
    (iv) even above-counts there; (v) the geometric slope-line count,
    recomputed by brute force over drawn midpoints.  All five must agree.
    """
    from .topology import internal_elements

    if not comp.finite:
        raise ValueError("unitarizability report needs a finite component")
    lat = cfg.lat
    elems = internal_elements(cfg, comp)
    internal = [(1, e) for e in elems.vertical] + [(2, e) for e in elems.horizontal]
    flip = involution == "dagger"

    sig = signature_coloring(cfg, comp, involution)
    cond_i = 0 in sig

    cond_ii = _component_sign_constant(cfg, comp, flip)

    vals = [cfg.poly_eval(i, lat.edge_mid2(e)) for i, e in internal]
    cond_iii = all((-v if flip else v) > 0 for v in vals)

    want = 1 if flip else 0
    cond_iv = all(cfg.count_above(i, e) % 2 == want for i, e in internal)

    cond_v = all(_geometric_count_above(cfg, i, e) % 2 == want for i, e in internal)

    conditions = {"i": cond_i, "ii": cond_ii, "iii": cond_iii, "iv": cond_iv, "v": cond_v}
    if len(set(conditions.values())) != 1:
        raise AssertionError(f"unitarizability criteria disagree: {conditions}")
    return UnitarizabilityReport(component_id=comp.id, involution=involution,
                                 conditions=conditions, verdict=cond_i)


def _component_sign_constant(cfg: Configuration, comp: Component, flip: bool) -> bool:
    """Is the (possibly dagger-flipped) sign function constant on the component?

    For the flipped rule the sign is rebuilt inside the component only; an
    inconsistent flipped rule (possible on incontractible components with
    odd period length) raises.
    """
    if not flip:
        table = SignTable(cfg)
        signs = {table.sign(w) for w in comp.weights}
        return len(signs) == 1
    from collections import deque

    from .topology import _neighbor_steps

    w0 = comp.min_weight
    local = {w0: 1}
    queue = deque([w0])
    while queue:
        w = queue.popleft()
        for dw, i, dmid, _ in _neighbor_steps(cfg):
            if cfg.mult_mid2(i, 2 * w + dmid) or (w + dw) not in comp.weights:
                continue
            parity = (cfg.count_above(i, 2 * w + dmid) + 1) % 2
            s = local[w] if parity == 0 else -local[w]
            if w + dw in local:
                if local[w + dw] != s:
                    raise ValueError(
                        "the flipped involution admits no consistent sign on this component"
                    )
            else:
                local[w + dw] = s
                queue.append(w + dw)
    return len(set(local.values())) == 1


def _geometric_count_above(cfg: Configuration, i: int, e: Edge) -> int:
    """Slope-line count over drawn midpoints: the independent geometric oracle.

    A supported same-orientation edge lies above the slope n/m line through
    the midpoint of e iff m*py - n*px exceeds the same form at e, where
    (px, py) is the drawn midpoint; the comparison is period invariant.
    """
    lat = cfg.lat

    def drawn_level(kind, x, y) -> Fraction:
        if kind == "V":
            return lat.m * (Fraction(y) - Fraction(1, 2)) - lat.n * x
        return lat.m * y - lat.n * (Fraction(x) - Fraction(1, 2))

    level = drawn_level(e.kind, e.x, e.y)
    total = 0
    for other, mult in cfg.edges.items():
        if other.kind != e.kind:
            continue
        if drawn_level(other.kind, other.x, other.y) > level:
            total += mult
    return total


# -- finitistic dual -------------------------------------------------------------


@dataclass
class DualReport:
    support: list[int]
    dual_parameter: str
    pseudo_unitarizable: bool


def dual_invariants(comp: Component, xi: complex | None = None) -> DualReport:
    """Support and Casimir parameter of the finitistic dual, plus the verdict.

    The dual has the same support; its parameter is the conjugate inverse.
    Contractible components are always pseudo-unitarizable; incontractible
    ones exactly when the parameter is unimodular (the formal parameter is
    treated as unimodular).
    """
    support = comp.sorted_weights()
    if comp.contractible:
        return DualReport(support=support, dual_parameter="0", pseudo_unitarizable=True)
    if xi is None:
        return DualReport(support=support, dual_parameter="xi", pseudo_unitarizable=True)
    unit = abs(abs(xi) - 1.0) < 1e-12
    return DualReport(
        support=support,
        dual_parameter=str(1 / xi.conjugate() if xi else "undefined"),
        pseudo_unitarizable=unit,
    )
