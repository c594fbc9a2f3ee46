"""Claim registry and exhaustive verification over small graphs.

Every claim is a per-graph (hypothesis, check) pair. A verification run
scans a source of graphs, counts the ones satisfying the hypothesis, and
collects a counterexample entry for every check diagnostic. Guard errors
raised while evaluating a graph become counterexample entries too: the
harness never silently skips a graph it was asked to verify.
"""

from __future__ import annotations

import json
import multiprocessing
import os
import time
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .errors import InvalidOrder, RomanCritError, TooLarge, UnknownClaim
from .graphs import Graph, gen_family
from .graph6 import emit_graph6, parse_graph6
from .iso import is_isomorphic
from .solver import gamma_r, minimal_partitions
from .criticality import (
    _pivot_condition,
    _saturated_over_partitions,
    first_gamma_changing_edge,
    first_non_critical_vertex,
    first_non_ecritical_edge,
    first_unsaturated_nonedge,
    nonelementary_by_components,
)
from .gamma4 import (
    CRITICAL_BUT_UNCLASSIFIED,
    IS_C5,
    IS_DN,
    _cut_structure,
    _witness_pairs_raw,
    classify_critical4,
    ecrit4_by_degrees,
    high_class_bounds,
    local8_conditions,
    local8_fast,
    saturated4_by_degrees,
    vcrit4_by_degrees,
)

ENUMERATION_MAX_ORDER = 7
WORKERS_ENV = "ROMANCRIT_WORKERS"

_EDGE_PAIRS: dict[int, tuple[tuple[int, int], ...]] = {}


def _edge_pairs(n: int) -> tuple[tuple[int, int], ...]:
    if n not in _EDGE_PAIRS:
        _EDGE_PAIRS[n] = tuple(
            (u, v) for u in range(n) for v in range(u + 1, n)
        )
    return _EDGE_PAIRS[n]


def graph_from_edge_mask(n: int, mask: int) -> Graph:
    """Graph whose edge set is the mask over the canonical pair order."""
    pairs = _edge_pairs(n)
    adj = [0] * n
    m = mask
    while m:
        low = m & -m
        u, v = pairs[low.bit_length() - 1]
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        m ^= low
    return Graph(n, tuple(adj))


def iter_labeled_graphs(n: int, allow_large: bool = False) -> Iterator[Graph]:
    """All 2^C(n,2) labeled graphs of order n, ascending edge bitmask."""
    if n < 0:
        raise InvalidOrder(f"order must be >= 0, got {n}")
    if n > ENUMERATION_MAX_ORDER and not allow_large:
        raise TooLarge(
            f"enumeration guarded at order {ENUMERATION_MAX_ORDER}; "
            f"pass allow_large to override"
        )
    total = 1 << (n * (n - 1) // 2)
    for mask in range(total):
        yield graph_from_edge_mask(n, mask)


def enumerate_labeled_graphs(
    n: int, consumer: Callable[[Graph], None], allow_large: bool = False
) -> int:
    """Feed every labeled graph of order n to consumer; return the count."""
    count = 0
    for g in iter_labeled_graphs(n, allow_large):
        consumer(g)
        count += 1
    return count


class Facts:
    """Per-graph lazy cache of the predicates claims keep asking about."""

    __slots__ = ("g", "_gamma", "_vcrit", "_ecrit", "_sat", "_parts")

    def __init__(self, g: Graph):
        self.g = g
        self._gamma: int | None = None
        self._vcrit: bool | None = None
        self._ecrit: bool | None = None
        self._sat: bool | None = None
        self._parts: list | None = None

    @property
    def gamma(self) -> int:
        if self._gamma is None:
            self._gamma = gamma_r(self.g)
        return self._gamma

    @property
    def nonelementary(self) -> bool:
        return self.gamma < self.g.n

    @property
    def v_critical(self) -> bool:
        if self._vcrit is None:
            if self.g.n == 0:
                raise InvalidOrder("criticality needs order >= 1")
            self._vcrit = first_non_critical_vertex(self.g) is None
        return self._vcrit

    @property
    def e_critical(self) -> bool:
        if self._ecrit is None:
            self._ecrit = (
                self.v_critical and first_non_ecritical_edge(self.g) is None
            )
        return self._ecrit

    @property
    def saturated(self) -> bool:
        if self._sat is None:
            self._sat = first_unsaturated_nonedge(self.g) is None
        return self._sat

    @property
    def partitions(self) -> list:
        if self._parts is None:
            self._parts = minimal_partitions(self.g)
        return self._parts


@dataclass(frozen=True)
class Claim:
    id: str
    description: str
    hypothesis: Callable[[Facts], bool]
    check: Callable[[Facts], list[str]]


@dataclass(frozen=True)
class Counterexample:
    graph6: str
    diagnostic: str


@dataclass(frozen=True)
class VerificationReport:
    claim: str
    source: str
    graphs_scanned: int
    graphs_in_hypothesis: int
    counterexamples: tuple[Counterexample, ...]
    wall_time_ms: int

    def to_json_dict(self, include_timing: bool = False) -> dict:
        out = {
            "claim": self.claim,
            "source": self.source,
            "graphs_scanned": self.graphs_scanned,
            "graphs_in_hypothesis": self.graphs_in_hypothesis,
            "counterexamples": [
                {"graph6": c.graph6, "diagnostic": c.diagnostic}
                for c in self.counterexamples
            ],
        }
        if include_timing:
            out["wall_time_ms"] = self.wall_time_ms
        return out

    def to_json(self, include_timing: bool = False) -> str:
        return json.dumps(self.to_json_dict(include_timing), indent=2)


# -- claim checks ------------------------------------------------------------


def _is_cycle(g: Graph) -> bool:
    return (
        g.n >= 3
        and all(d == 2 for d in g.degrees())
        and len(g.connected_components()) == 1
    )


def _dual(name_a: str, val_a: bool, name_b: str, val_b: bool) -> list[str]:
    if val_a != val_b:
        return [f"dual-path-disagreement: {name_a}={val_a} {name_b}={val_b}"]
    return []


def _chk_cycle(f: Facts) -> list[str]:
    n = f.g.n
    k, r = divmod(n, 3)
    diags = []
    if r == 1 and f.gamma != 2 * k + 1:
        diags.append(f"gamma={f.gamma} expected={2 * k + 1} for cycle order {n}")
    if r == 2 and f.gamma != 2 * k + 2:
        diags.append(f"gamma={f.gamma} expected={2 * k + 2} for cycle order {n}")
    expected_vc = r != 0
    if f.v_critical != expected_vc:
        diags.append(
            f"is_v_critical={f.v_critical} expected={expected_vc} for cycle order {n}"
        )
    return diags


def _chk_nonelementary(f: Facts) -> list[str]:
    return _dual(
        "is_nonelementary",
        f.nonelementary,
        "by_components",
        nonelementary_by_components(f.g),
    )


def _chk_gamma_le_3(f: Facts) -> list[str]:
    n = f.g.n
    by_degree = any(d >= n - 2 for d in f.g.degrees())
    return _dual("gamma_le_3", f.gamma <= 3, "degree_route", by_degree)


def _chk_vcrit_partitions(f: Facts) -> list[str]:
    union = 0
    for p in f.partitions:
        union |= p.label_mask(1)
    return _dual(
        "is_v_critical",
        f.v_critical,
        "v_critical_by_partitions",
        union == f.g.full_mask,
    )


def _chk_saturated_partitions(f: Facts) -> list[str]:
    return _dual(
        "is_roman_saturated",
        f.saturated,
        "saturated_by_partitions",
        _saturated_over_partitions(f.g, f.partitions),
    )


def _chk_edge_removal(f: Facts) -> list[str]:
    hit = first_gamma_changing_edge(f.g)
    if hit is not None:
        u, v, after = hit
        return [f"deleting edge ({u},{v}) changes gamma {f.gamma}->{after}"]
    return []


def _chk_ecrit_condition(f: Facts) -> list[str]:
    return _dual(
        "is_e_critical",
        f.e_critical,
        "e_critical_condition",
        _pivot_condition(f.g, f.partitions),
    )


_ELEM_TAGS = ("elem1", "elem2", "elem3")


def _chk_elementary4(f: Facts) -> list[str]:
    in_list = any(is_isomorphic(f.g, gen_family(t)) for t in _ELEM_TAGS)
    return _dual("is_v_critical", f.v_critical, "in_order4_catalog", in_list)


def _chk_carac_lemma(f: Facts) -> list[str]:
    g = f.g
    pairs = [_witness_pairs_raw(g, x) for x in range(g.n)]
    all_witnessed = all(pairs)
    diags = _dual(
        "is_v_critical", f.v_critical, "witness_everywhere", all_witnessed
    )
    if f.v_critical and all_witnessed:
        for x in range(g.n):
            a, b = pairs[x][0]
            if not any(a2 in (x, b) for a2, _ in pairs[a]):
                diags.append(
                    f"witness chase fails at vertex {x}: no witness of {a} lands in ({x},{b})"
                )
    return diags


def _chk_carac2(f: Facts) -> list[str]:
    return _dual(
        "is_v_critical", f.v_critical, "vcrit4_by_degrees", vcrit4_by_degrees(f.g)
    )


def _chk_half_bound(f: Facts) -> list[str]:
    ok, _ = high_class_bounds(f.g)
    if not ok:
        return [f"fewer than n/2 vertices of degree n-3 (n={f.g.n})"]
    return []


def _chk_threequarter_bound(f: Facts) -> list[str]:
    _, ok = high_class_bounds(f.g)
    if not ok:
        return [f"fewer than 3n/4 vertices of degree n-3 (n={f.g.n})"]
    return []


def _chk_cutvertex(f: Facts) -> list[str]:
    g = f.g
    for v in sorted(g.cut_vertices()):
        if not any(len(c) == 1 for c in g.delete_vertex(v).connected_components()):
            return [f"cut vertex {v} leaves no single-vertex component"]
    return []


def _chk_saturated4(f: Facts) -> list[str]:
    return _dual(
        "is_roman_saturated",
        f.saturated,
        "saturated4_by_degrees",
        saturated4_by_degrees(f.g),
    )


def _chk_ecrit4(f: Facts) -> list[str]:
    return _dual(
        "is_e_critical", f.e_critical, "ecrit4_by_degrees", ecrit4_by_degrees(f.g)
    )


def _chk_cut_structure(f: Facts) -> list[str]:
    if not _cut_structure(f.g):
        return ["neither the 5-cycle nor a single pendant low vertex on a cut vertex"]
    return []


def _chk_classification(f: Facts) -> list[str]:
    cls = classify_critical4(f.g)
    n = f.g.n
    if cls.verdict == CRITICAL_BUT_UNCLASSIFIED:
        return ["classification=CriticalButUnclassified"]
    expected = IS_C5 if n == 5 else IS_DN
    if cls.verdict != expected or (cls.verdict == IS_DN and cls.order != n):
        return [f"classification={cls} inconsistent with order {n}"]
    return []


def _chk_local8(f: Facts) -> list[str]:
    g = f.g
    lit = local8_conditions(g)
    fast = local8_fast(g)
    diags = []
    if lit != fast:
        diags.append(
            f"dual-path-disagreement: local8_conditions={lit} local8_fast={fast}"
        )
    conj = all(lit)
    matches = g.n % 2 == 0 and is_isomorphic(g, gen_family("dn", g.n))
    if conj != matches:
        diags.append(
            f"local-conditions-conjunction={conj} matches-even-pendant-family={matches}"
        )
    critical = f.v_critical and f.e_critical and f.saturated
    if conj != critical:
        diags.append(
            f"local-conditions-conjunction={conj} criticality-conjunction={critical}"
        )
    return diags


_DN_PROPERTIES = (
    ("gamma", lambda f: f.gamma == 4),
    ("nonelementary", lambda f: f.nonelementary),
    ("v_critical", lambda f: f.v_critical),
    ("e_critical", lambda f: f.e_critical),
    ("saturated", lambda f: f.saturated),
)


def _hyp_dn(f: Facts) -> bool:
    n = f.g.n
    if n < 6 or n % 2:
        return False
    if sorted(f.g.degrees()) != [1] + [n - 3] * (n - 1):
        return False
    return is_isomorphic(f.g, gen_family("dn", n))


def _chk_dn(f: Facts) -> list[str]:
    diags = [f"{name} fails" for name, prop in _DN_PROPERTIES if not prop(f)]
    g = f.g
    pendant = next(v for v, d in enumerate(g.degrees()) if d == 1)
    neighbor = g.adj[pendant].bit_length() - 1
    if neighbor not in g.cut_vertices():
        diags.append(f"pendant neighbor {neighbor} is not a cut vertex")
    return diags


def _hyp_all(f: Facts) -> bool:
    return True


def _hyp_order1(f: Facts) -> bool:
    return f.g.n >= 1


def _hyp_vcrit(f: Facts) -> bool:
    return f.g.n >= 1 and f.v_critical


def _hyp_gamma4(f: Facts) -> bool:
    return f.gamma == 4 and f.nonelementary


def _hyp_gamma4_vcrit(f: Facts) -> bool:
    return _hyp_gamma4(f) and f.v_critical


def _hyp_gamma4_vcrit_sat(f: Facts) -> bool:
    return _hyp_gamma4_vcrit(f) and f.saturated


def _hyp_qualifying(f: Facts) -> bool:
    return _hyp_gamma4_vcrit(f) and f.saturated and f.e_critical


def _hyp_elementary4(f: Facts) -> bool:
    return f.g.n == 4 and f.gamma == 4


def _hyp_local8(f: Facts) -> bool:
    return f.g.n >= 8 and f.gamma == 4


_CLAIM_LIST = [
    Claim(
        "cycle-criticality",
        "Cycle orders 3k+1 and 3k+2 have gamma_r 2k+1 and 2k+2, and a cycle "
        "is v-critical exactly when its order is not divisible by 3.",
        lambda f: _is_cycle(f.g),
        _chk_cycle,
    ),
    Claim(
        "nonelementary-components",
        "gamma_r < n holds exactly when some connected component has at "
        "least 3 vertices.",
        _hyp_all,
        _chk_nonelementary,
    ),
    Claim(
        "gamma-le-3-degree",
        "gamma_r <= 3 holds exactly when some vertex has degree >= n-2 "
        "(order >= 1).",
        _hyp_order1,
        _chk_gamma_le_3,
    ),
    Claim(
        "vcrit-partition-lemma",
        "v-critical holds exactly when every vertex is labeled 1 in some "
        "minimum assignment.",
        _hyp_order1,
        _chk_vcrit_partitions,
    ),
    Claim(
        "saturated-partition-prop",
        "Roman saturated holds exactly when every non-adjacent pair is "
        "split 1/2 by some minimum assignment.",
        _hyp_all,
        _chk_saturated_partitions,
    ),
    Claim(
        "edge-removal-gamma",
        "Removing one edge from a v-critical graph never changes gamma_r.",
        _hyp_vcrit,
        _chk_edge_removal,
    ),
    Claim(
        "ecrit-condition-prop",
        "A v-critical graph is e-critical exactly when every edge has a "
        "pivot vertex whose 1-labelings pin the edge as (0-endpoint, its "
        "unique 2-neighbor).",
        _hyp_vcrit,
        _chk_ecrit_condition,
    ),
    Claim(
        "elementary4-list",
        "The order-4 graphs with gamma_r = 4 are v-critical exactly when "
        "isomorphic to one of the three catalog graphs (edge sets {}, {ab}, "
        "{ab, cd}).",
        _hyp_elementary4,
        _chk_elementary4,
    ),
    Claim(
        "carac-lemma",
        "At gamma_r = 4 (nonelementary): v-critical holds exactly when every "
        "vertex x has a pair (a, b) with N[a] = V minus {x, b}; chasing the "
        "witness from a lands back in {x, b}.",
        _hyp_gamma4,
        _chk_carac_lemma,
    ),
    Claim(
        "carac2-theorem",
        "At gamma_r = 4 (nonelementary): v-critical holds exactly when every "
        "vertex has a non-neighbor of degree n-3.",
        _hyp_gamma4,
        _chk_carac2,
    ),
    Claim(
        "half-bound",
        "Nonelementary v-critical graphs with gamma_r = 4 have at least n/2 "
        "vertices of degree n-3.",
        _hyp_gamma4_vcrit,
        _chk_half_bound,
    ),
    Claim(
        "threequarter-bound",
        "Nonelementary v-critical saturated graphs with gamma_r = 4 have at "
        "least 3n/4 vertices of degree n-3.",
        _hyp_gamma4_vcrit_sat,
        _chk_threequarter_bound,
    ),
    Claim(
        "cutvertex-lemma",
        "In nonelementary v-critical graphs with gamma_r = 4, every cut "
        "vertex leaves a single-vertex component.",
        _hyp_gamma4_vcrit,
        _chk_cutvertex,
    ),
    Claim(
        "saturated4-degrees",
        "At gamma_r = 4 (nonelementary): saturated holds exactly when every "
        "two vertices of degree below n-3 are adjacent.",
        _hyp_gamma4,
        _chk_saturated4,
    ),
    Claim(
        "ecrit4-degrees",
        "At gamma_r = 4 (nonelementary, v-critical): e-critical holds "
        "exactly when every edge has a vertex whose non-dominated "
        "degree-(n-3) vertices are the edge's endpoints.",
        _hyp_gamma4_vcrit,
        _chk_ecrit4,
    ),
    Claim(
        "cut-structure-prop",
        "Qualifying graphs (gamma_r = 4, nonelementary, v- and e-critical, "
        "saturated) are the 5-cycle or have exactly one low vertex, pendant "
        "on a cut vertex.",
        _hyp_qualifying,
        _chk_cut_structure,
    ),
    Claim(
        "classification-theorem",
        "Qualifying graphs are exactly the 5-cycle and the even pendant "
        "family members.",
        _hyp_qualifying,
        _chk_classification,
    ),
    Claim(
        "local8-theorem",
        "At gamma_r = 4 and order >= 8: the three local adjacency conditions "
        "hold exactly for even-order pendant family members, and exactly for "
        "the v-critical e-critical saturated graphs; literal and degree "
        "evaluations agree.",
        _hyp_local8,
        _chk_local8,
    ),
    Claim(
        "dn-properties",
        "Every even pendant family member of order >= 6 is nonelementary, "
        "v-critical, e-critical, saturated, has gamma_r = 4, and hangs its "
        "pendant off a cut vertex.",
        _hyp_dn,
        _chk_dn,
    ),
]

CLAIMS: dict[str, Claim] = {c.id: c for c in _CLAIM_LIST}


def claim_catalog() -> list[tuple[str, str]]:
    return [(c.id, c.description) for c in _CLAIM_LIST]


# -- verification runs -------------------------------------------------------

Source = tuple


def _source_label(source: Source) -> str:
    kind = source[0]
    if kind == "enumerate":
        return f"enumerate({source[1]})"
    if kind == "file":
        return f"file:{source[1]}"
    if kind == "families":
        items = ",".join(
            tag if n is None else f"{tag}:{n}" for tag, n in source[1]
        )
        return f"families:{items}"
    if kind == "graphs":
        return f"graphs:{len(source[1])}"
    raise ValueError(f"unknown source kind {kind!r}")


def _iter_source(source: Source, allow_large: bool) -> Iterator[Graph]:
    kind = source[0]
    if kind == "enumerate":
        yield from iter_labeled_graphs(source[1], allow_large)
    elif kind == "file":
        with open(source[1], "r", encoding="ascii") as fh:
            for line in fh:
                if line.strip():
                    yield parse_graph6(line)
    elif kind == "families":
        for tag, n in source[1]:
            yield gen_family(tag, n)
    elif kind == "graphs":
        yield from source[1]
    else:
        raise ValueError(f"unknown source kind {kind!r}")


def _resolve_claims(claim_ids: Sequence[str]) -> list[Claim]:
    out = []
    seen = set()
    for cid in claim_ids:
        if cid not in CLAIMS:
            known = ", ".join(CLAIMS)
            raise UnknownClaim(f"unknown claim {cid!r}; known claims: {known}")
        if cid not in seen:
            seen.add(cid)
            out.append(CLAIMS[cid])
    return out


def _scan_one(claims: list[Claim], f: Facts, acc: dict[str, list]) -> None:
    for claim in claims:
        entry = acc[claim.id]
        try:
            if not claim.hypothesis(f):
                continue
            entry[0] += 1
            diags = claim.check(f)
        except RomanCritError as exc:
            entry[1].append(
                (emit_graph6(f.g), f"guard-error: {type(exc).__name__}: {exc}")
            )
            continue
        if diags:
            g6 = emit_graph6(f.g)
            entry[1].extend((g6, d) for d in diags)


def _scan_block(args: tuple) -> tuple[int, dict[str, list]]:
    claim_ids, n, lo, hi = args
    claims = [CLAIMS[c] for c in claim_ids]
    acc: dict[str, list] = {c.id: [0, []] for c in claims}
    for mask in range(lo, hi):
        _scan_one(claims, Facts(graph_from_edge_mask(n, mask)), acc)
    return hi - lo, acc


def resolve_worker_count(workers: int | None = None) -> int:
    """Explicit argument, else the environment variable, else cpu count."""
    if workers is not None:
        return max(1, workers)
    env = os.environ.get(WORKERS_ENV)
    if env is not None:
        try:
            value = int(env)
        except ValueError:
            raise RomanCritError(
                f"{WORKERS_ENV} must be an integer, got {env!r}"
            ) from None
        return max(1, value)
    return os.cpu_count() or 1


def verify_claims(
    claim_ids: Sequence[str],
    source: Source,
    workers: int | None = None,
    allow_large: bool = False,
) -> list[VerificationReport]:
    """Run several claims over one source in a single scan.

    Reports come back in claim order, with counterexamples sorted by graph6
    string then diagnostic, so output is byte-stable across runs and worker
    counts.
    """
    claims = _resolve_claims(claim_ids)
    nworkers = resolve_worker_count(workers)
    label = _source_label(source)
    start = time.monotonic()
    acc: dict[str, list] = {c.id: [0, []] for c in claims}
    scanned = 0

    parallel = source[0] == "enumerate" and nworkers > 1
    if parallel:
        n = source[1]
        if n < 0:
            raise InvalidOrder(f"order must be >= 0, got {n}")
        if n > ENUMERATION_MAX_ORDER and not allow_large:
            raise TooLarge(
                f"enumeration guarded at order {ENUMERATION_MAX_ORDER}; "
                f"pass allow_large to override"
            )
        total = 1 << (n * (n - 1) // 2)
        nblocks = min(total, nworkers * 4)
        step = (total + nblocks - 1) // nblocks
        ids = [c.id for c in claims]
        blocks = [
            (ids, n, lo, min(lo + step, total)) for lo in range(0, total, step)
        ]
        with multiprocessing.Pool(processes=nworkers) as pool:
            for part_scanned, part_acc in pool.imap(_scan_block, blocks):
                scanned += part_scanned
                for cid, (in_hyp, cex) in part_acc.items():
                    acc[cid][0] += in_hyp
                    acc[cid][1].extend(cex)
    else:
        for g in _iter_source(source, allow_large):
            _scan_one(claims, Facts(g), acc)
            scanned += 1

    wall_ms = int(round((time.monotonic() - start) * 1000))
    reports = []
    for claim in claims:
        in_hyp, cex = acc[claim.id]
        assert in_hyp <= scanned
        reports.append(
            VerificationReport(
                claim=claim.id,
                source=label,
                graphs_scanned=scanned,
                graphs_in_hypothesis=in_hyp,
                counterexamples=tuple(
                    Counterexample(g6, d) for g6, d in sorted(cex)
                ),
                wall_time_ms=wall_ms,
            )
        )
    return reports


def verify_claim(
    claim_id: str,
    source: Source,
    workers: int | None = None,
    allow_large: bool = False,
) -> VerificationReport:
    """Run one claim over a source of graphs."""
    return verify_claims([claim_id], source, workers, allow_large)[0]
