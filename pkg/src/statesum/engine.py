"""The handle state sum for closed 3-manifolds and its surface (n = 1) version.

For a 3-dimensional cell complex and fusion data with empty-sphere value
lambda, a labeling puts a simple object on every 2-cell and a vertex basis
element on every 1-cell.  Its weight is the product over cells of
``ev(boundary) / N(label)``:

* 3-cells: ``lambda / (lambda^2 GD)``
* 2-cells: ``lambda d_a / 1``
* 1-cells: ``lambda <x, x> / (lambda theta_x)^2``
* 0-cells: ``lambda ev(link)``, with no norm.

Every boundary evaluation is computed by :mod:`statesum.sphere_eval`; the
norms come from their closed forms and are checked against the recursive
definition in :func:`norm`.

Internally the labeling problem is compiled to integer factor tables
(cached by the local structure of each link) and handed to the kernel,
which returns a histogram of weight exponents; the exact value is then
assembled here.
"""

from __future__ import annotations

import atexit
import itertools
import multiprocessing
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from . import kernels
from .catdata.fusion import FusionData, FusionError
from .catdata.onecat import OneCatData
from .cells import CellComplex, ComplexError, LinkDiagram
from .scalar import FieldElement
from .sphere_eval import (
    Basis,
    EvaluationError,
    SphereGraph,
    SphereVertex,
    evaluate_circle,
    evaluate_graph,
    pairing,
    theta_graph,
    tree_norm,
)

__all__ = [
    "EngineError",
    "StateSumResult",
    "enumerate_labelings",
    "link_graphs",
    "sphere_trace",
    "norm",
    "norm_closed_form",
    "handle_evaluation",
    "labeling_weight",
    "state_sum",
    "n1_state_sum",
    "lambda_rescale_check",
    "LambdaReport",
]


class EngineError(ValueError):
    pass


@dataclass
class StateSumResult:
    value: FieldElement
    labeling_count: int
    per_handle_trace: dict | None = None

    def to_json(self) -> dict:
        out = {"value": self.value.format(), "approx": self.value.approx_str(), "labelings": self.labeling_count}
        if self.per_handle_trace is not None:
            out["trace"] = {
                str(k): [ev.format(), n.format()] for k, (ev, n) in sorted(self.per_handle_trace.items())
            }
        return out


Labeling = dict


def _lam(d, lam):
    if lam is None:
        return d.lam
    return lam if isinstance(lam, FieldElement) else d.field(lam)


def _power(x: FieldElement, k: int) -> FieldElement:
    return x ** k if k >= 0 else x.inverse() ** (-k)


# traces and norms ------------------------------------------------------------------


def sphere_trace(d: FusionData, label, k: int, word: Sequence[int] | None = None) -> FieldElement:
    """Closure of a label to the sphere, without lambda.

    ``k = 2``: a vertex basis element over ``word``, traced as ev(x̄ ∪ x);
    ``k = 1``: a simple object, traced as its loop; ``k = 0``: the empty sphere.
    """
    if k == 0:
        return d.field.one()
    if k == 1:
        return d.qdim[d.index(label)]
    if k == 2:
        if word is None:
            raise EngineError("a vertex label needs its boundary word")
        return pairing(d, label, label, word)
    raise EngineError(f"no sphere trace at level {k}")


def norm(d: FusionData, label, j: int, lam=None, word: Sequence[int] | None = None) -> FieldElement:
    """Recursive norm of a j-handle label.

    The base case is the square of the norm-square of a top-level morphism,
    ``N(x) = <x, x>^2``; above it ``N(x) = sum_y tr_s(y)^2 / N(y)`` over
    minimal endomorphisms ``y`` of ``x``.
    """
    lam = _lam(d, lam)
    if j == 1:
        # a vertex: top-level, base case
        ns = lam * sphere_trace(d, label, 2, word)
        return ns * ns
    if j == 2:
        # the only minimal endomorphism of a simple object is its identity,
        # a two-valent vertex over (a, a*)
        a = d.index(label)
        ident: Basis = ((), ())
        w = (a, d.dual[a])
        tr = lam * sphere_trace(d, ident, 2, w)
        return tr * tr / norm(d, ident, 1, lam, w)
    if j == 3:
        total = d.field.zero()
        for a in range(d.rank):
            tr = lam * sphere_trace(d, a, 1)
            total = total + tr * tr / norm(d, a, 2, lam)
        return total
    raise EngineError(f"no norm for {j}-handles in a 3-manifold")


def norm_closed_form(d: FusionData, label, j: int, lam=None, word: Sequence[int] | None = None) -> FieldElement:
    """(lambda theta)^2, 1 and lambda^2 GD for 1-, 2- and 3-handles."""
    lam = _lam(d, lam)
    if j == 1:
        t = lam * tree_norm(d, word, label)
        return t * t
    if j == 2:
        return d.field.one()
    if j == 3:
        return lam * lam * d.global_dimension()
    raise EngineError(f"no norm for {j}-handles in a 3-manifold")


# diagrams from labelings -----------------------------------------------------------


def _word_labels(d: FusionData, word: Sequence[tuple[int, int]], beta) -> tuple[int, ...]:
    return tuple(beta[c] if s == 1 else d.dual[beta[c]] for c, s in word)


def _link_graph(c: CellComplex, link: LinkDiagram, d: FusionData, beta) -> SphereGraph:
    verts = []
    for v in link.vertices:
        w = _word_labels(d, c.link_of(v.cell).word, beta)
        verts.append(SphereVertex(list(v.darts), w, beta[v.cell], mirrored=(v.sign == -1)))
    g = SphereGraph(verts)
    lab = g.dart_labels(d)
    for e in link.edges:
        a = beta[e.cell] if e.sign == 1 else d.dual[beta[e.cell]]
        if not e.ends:
            g.loops.append(a)
            continue
        x, y = e.ends
        if lab[x] != a:
            raise ComplexError(f"link edge of cell {e.cell} disagrees with the word of its vertex")
        g.edges.append((x, y))
    return g


def link_graphs(c: CellComplex, d: FusionData, limit: int | None = None) -> Iterator[tuple[int, SphereGraph]]:
    """Distinct labeled 0-cell links met by admissible labelings, at most ``limit`` of them."""
    seen = set()
    zero = c.cells_of_dim(0)
    for beta in enumerate_labelings(c, d):
        for v in zero:
            g = _link_graph(c, c.link_of(v), d, beta)
            key = _graph_key(g)
            if key in seen:
                continue
            seen.add(key)
            yield v, g
            if limit is not None and len(seen) >= limit:
                return


def handle_evaluation(c: CellComplex, cell: int, beta: Labeling, d: FusionData, lam=None) -> FieldElement:
    """lambda times the evaluation of the labeled boundary diagram of ``cell``."""
    lam = _lam(d, lam)
    k = c.cells[cell].dim
    if k == 3:
        return lam
    if k == 2:
        return lam * d.qdim[beta[cell]]
    if k == 1:
        w = _word_labels(d, c.link_of(cell).word, beta)
        return lam * evaluate_graph(theta_graph(w, beta[cell]), d)
    return lam * evaluate_graph(_link_graph(c, c.link_of(cell), d, beta), d)


def labeling_weight(c: CellComplex, beta: Labeling, d: FusionData, lam=None, trace: dict | None = None) -> FieldElement:
    """Product over handles of ev / N for one labeling, straight from the definitions."""
    lam = _lam(d, lam)
    total = d.field.one()
    for cell in c.enumeration_order():
        k = c.cells[cell].dim
        ev = handle_evaluation(c, cell, beta, d, lam)
        if k == 0:
            n = d.field.one()
        elif k == 1:
            n = norm_closed_form(d, beta[cell], 1, lam, _word_labels(d, c.link_of(cell).word, beta))
        elif k == 2:
            n = norm_closed_form(d, beta[cell], 2, lam)
        else:
            n = norm_closed_form(d, 0, 3, lam)
        if trace is not None:
            trace[cell] = (ev, n)
        total = total * ev / n
    return total


# compilation -------------------------------------------------------------------------


@dataclass
class _Factor:
    scope: list[int]  # variable positions
    values: dict[tuple[int, ...], FieldElement | None]  # assignment -> value (missing means inadmissible)
    check_only: bool = False


@dataclass
class _Problem:
    cells: list[int]
    domains: list[int]
    factors: list[_Factor]
    constant: FieldElement
    basis_lists: dict = field(default_factory=dict)


class _Tables:
    """Per-(category, lambda) cache of local factor tables keyed by link structure."""

    def __init__(self, d: FusionData, lam: FieldElement):
        self.d = d
        self.lam = lam
        self.words: dict[tuple[int, ...], list[Basis]] = {}
        self.edge_tables: dict = {}
        self.vertex_tables: dict = {}
        self.pair: dict = {}
        self.graphs: dict = {}

    def basis(self, w: tuple[int, ...]) -> list[Basis]:
        b = self.words.get(w)
        if b is None:
            b = self.words[w] = evaluate_circle(w, self.d)
        return b

    def one_cell_weight(self, w: tuple[int, ...], x: Basis) -> FieldElement:
        key = (w, x)
        v = self.pair.get(key)
        if v is None:
            lam = self.lam
            ev = lam * evaluate_graph(theta_graph(w, x), self.d)
            t = lam * tree_norm(self.d, w, x)
            v = self.pair[key] = ev / (t * t)
        return v


_CACHE: dict = {}


def _tables_for(d: FusionData, lam: FieldElement) -> _Tables:
    key = (id(d), lam.field.name, lam.format())
    hit = _CACHE.get(key)
    if hit is None or hit.d is not d:
        if len(_CACHE) > 32:
            _CACHE.clear()
        hit = _CACHE[key] = _Tables(d, lam)
    return hit


def _local(cells: Sequence[int]) -> tuple[list[int], dict[int, int]]:
    uniq: list[int] = []
    pos: dict[int, int] = {}
    for x in cells:
        if x not in pos:
            pos[x] = len(uniq)
            uniq.append(x)
    return uniq, pos


def _compile_fusion(c: CellComplex, d: FusionData, lam: FieldElement) -> _Problem:
    if c.dim != 3:
        raise EngineError(f"the fusion state sum needs a 3-dimensional complex, got dimension {c.dim}")
    T = _tables_for(d, lam)
    du = d.dual
    order = [x for x in c.enumeration_order() if c.cells[x].dim in (1, 2)]
    pos = {x: i for i, x in enumerate(order)}
    domains = [d.rank if c.cells[x].dim == 2 else 0 for x in order]
    factors: list[_Factor] = []
    words = {x: c.link_of(x).word for x in c.cells_of_dim(1)}

    # 1-cells
    for x in c.cells_of_dim(1):
        word = words[x]
        uniq, lp = _local([cell for cell, _ in word])
        skey = tuple((lp[cell], s) for cell, s in word)
        tab = T.edge_tables.get(skey)
        if tab is None:
            tab = {}
            for assign in itertools.product(range(d.rank), repeat=len(uniq)):
                w = tuple(assign[i] if s == 1 else du[assign[i]] for i, s in skey)
                tab[assign] = w
            T.edge_tables[skey] = tab
        m = 1
        check, weight = {}, {}
        for assign, w in tab.items():
            b = T.basis(w)
            if b:
                check[assign] = None
                m = max(m, len(b))
                for i, xb in enumerate(b):
                    weight[assign + (i,)] = T.one_cell_weight(w, xb)
        domains[pos[x]] = m
        scope = [pos[u] for u in uniq]
        factors.append(_Factor(scope, check, check_only=True))
        factors.append(_Factor(scope + [pos[x]], weight))

    # 2-cells
    for x in c.cells_of_dim(2):
        factors.append(_Factor([pos[x]], {(a,): lam * d.qdim[a] for a in range(d.rank)}))

    # 0-cells
    for v in c.cells_of_dim(0):
        link = c.link_of(v)
        if link.sphere != 2:
            raise EngineError(f"0-cell {v} has no 2-sphere link")
        two = [e.cell for e in link.edges]
        for vert in link.vertices:
            two += [cell for cell, _ in words[vert.cell]]
        uniq2, lp2 = _local(two)
        uniq1, lp1 = _local([vert.cell for vert in link.vertices])
        skey = (
            tuple((lp1[vt.cell], vt.sign, tuple(vt.darts)) for vt in link.vertices),
            tuple((lp2[e.cell], e.sign, tuple(e.ends)) for e in link.edges),
            tuple(tuple((lp2[cell], s) for cell, s in words[u]) for u in uniq1),
        )
        tab = T.vertex_tables.get(skey)
        if tab is None:
            tab = T.vertex_tables[skey] = _vertex_table(c, d, T, link, uniq2, uniq1, words)
        check = {}
        for key in tab:
            check[key[: len(uniq2)]] = None
        factors.append(_Factor([pos[u] for u in uniq2], check, check_only=True))
        factors.append(_Factor([pos[u] for u in uniq2] + [pos[u] for u in uniq1], tab))

    n3 = len(c.cells_of_dim(3))
    constant = _power(lam / (lam * lam * d.global_dimension()), n3)
    return _Problem(order, domains, factors, constant)


def _vertex_table(c, d, T: _Tables, link: LinkDiagram, uniq2, uniq1, words) -> dict:
    """Assignment of (2-cells, 1-cell basis indices) -> lambda * ev(link); zeros kept as values."""
    du = d.dual
    lam = T.lam
    idx2 = {cell: i for i, cell in enumerate(uniq2)}
    out: dict = {}
    vwords = [tuple((idx2[cell], s) for cell, s in words[u]) for u in uniq1]
    # search 2-cell labels with every 1-cell word admissible as soon as it is complete
    last = [max((i for i, _ in vw), default=-1) for vw in vwords]
    at = {i: [k for k, l in enumerate(last) if l == i] for i in range(len(uniq2))}
    pre = [k for k, l in enumerate(last) if l == -1]
    assign = [0] * len(uniq2)
    cache_vals = T.graphs

    def word(k):
        return tuple(assign[i] if s == 1 else du[assign[i]] for i, s in vwords[k])

    if any(not T.basis(word(k)) for k in pre):
        return out

    def rec(i):
        if i == len(uniq2):
            bases = [T.basis(word(k)) for k in range(len(uniq1))]
            for choice in itertools.product(*(range(len(b)) for b in bases)):
                beta = {cell: assign[j] for j, cell in enumerate(uniq2)}
                for k, u in enumerate(uniq1):
                    beta[u] = bases[k][choice[k]]
                g = _link_graph(c, link, d, beta)
                key = _graph_key(g)
                val = cache_vals.get(key)
                if val is None:
                    val = cache_vals[key] = lam * evaluate_graph(g, d)
                out[tuple(assign) + choice] = val
            return
        for a in range(d.rank):
            assign[i] = a
            if all(T.basis(word(k)) for k in at[i]):
                rec(i + 1)

    rec(0)
    return out


def _graph_key(g: SphereGraph):
    return (
        tuple((tuple(v.darts), v.word, v.basis, v.mirrored) for v in g.vertices),
        tuple(g.edges),
        tuple(sorted(g.loops)),
    )


# kernel interface --------------------------------------------------------------------------


def _kernel_inputs(p: _Problem):
    weights: dict[FieldElement, int] = {}
    wlist: list[FieldElement] = [p.constant.field.one()]  # id 0 is weight one
    one = wlist[0]
    tables = []
    checks: list[list[int]] = [[] for _ in p.domains]
    for f in p.factors:
        doms = [p.domains[s] for s in f.scope]
        strides = []
        acc = 1
        for dm in reversed(doms):
            strides.append(acc)
            acc *= dm
        strides.reverse()
        table = [-1] * acc
        for key, val in f.values.items():
            i = sum(k * st for k, st in zip(key, strides))
            if f.check_only or val == one:
                table[i] = 0
            else:
                w = weights.get(val)
                if w is None:
                    w = weights[val] = len(wlist)
                    wlist.append(val)
                table[i] = w
        fi = len(tables)
        tables.append((list(f.scope), strides, table))
        if f.scope:
            checks[max(f.scope)].append(fi)
    gens, wvecs = _generators(wlist)
    return tables, checks, gens, wvecs


_TRIAL_LIMIT = 1 << 16


def _factor_int(n: int) -> dict[int, int] | None:
    """Prime factorization by trial division; None when a cofactor is out of reach."""
    out: dict[int, int] = {}
    q = 2
    while q * q <= n:
        if q > _TRIAL_LIMIT:
            return None
        while n % q == 0:
            out[q] = out.get(q, 0) + 1
            n //= q
        q += 1 if q == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _generators(wlist: list[FieldElement]):
    """Write every weight as a product of generator powers.

    Nonzero rationals split into -1 and primes, so labelings whose weights
    differ only in bookkeeping land in the same histogram bucket; anything
    else is its own generator.
    """
    fld = wlist[0].field
    gens: list[FieldElement] = []
    index: dict = {}

    def gen(key, value):
        g = index.get(key)
        if g is None:
            g = index[key] = len(gens)
            gens.append(value)
        return g

    wvecs: list[list[tuple[int, int]]] = [[]]
    for w in wlist[1:]:
        vec: dict[int, int] = {}
        parts = None
        if w.is_rational() and not w.is_zero():
            q = w.to_fraction()
            num, den = _factor_int(abs(q.numerator)), _factor_int(q.denominator)
            if num is not None and den is not None:
                parts = [(("p", pr), fld.rational(pr), e) for pr, e in num.items()]
                parts += [(("p", pr), fld.rational(pr), -e) for pr, e in den.items()]
                if q < 0:
                    parts.append((("sign",), fld.rational(-1), 1))
        if parts is None:
            parts = [(("w", w), w, 1)]
        for key, value, e in parts:
            g = gen(key, value)
            vec[g] = vec.get(g, 0) + e
        wvecs.append(sorted(vec.items()))
    return gens, wvecs


_POOLS: dict[int, ProcessPoolExecutor] = {}


def _pool(n: int) -> ProcessPoolExecutor:
    ex = _POOLS.get(n)
    if ex is None:
        ctx = multiprocessing.get_context("fork") if hasattr(os, "fork") else None
        ex = _POOLS[n] = ProcessPoolExecutor(max_workers=n, mp_context=ctx)
    return ex


@atexit.register
def _close_pools() -> None:
    for ex in _POOLS.values():
        ex.shutdown(cancel_futures=True)
    _POOLS.clear()


def _run_chunk(args):
    domains, tables, checks, wvecs, ngens, values, backend = args
    fn = kernels.python_kernel if backend == "python" else kernels.enumerate_histogram
    return fn(domains, tables, checks, wvecs, ngens, values)


def _solve(p: _Problem, workers: int = 1, backend: str | None = None) -> tuple[FieldElement, int]:
    tables, checks, gens, wvecs = _kernel_inputs(p)
    if backend is None:
        backend = kernels.BACKEND
    hist: dict[tuple, int] = {}
    base = (p.domains, tables, checks, wvecs, len(gens))
    if not p.domains or workers <= 1 or p.domains[0] <= 1:
        hist = _run_chunk(base + (None, backend))
    else:
        vals = list(range(p.domains[0]))
        chunks = [vals[i::workers] for i in range(workers) if vals[i::workers]]
        parts = list(_pool(len(chunks)).map(_run_chunk, [base + (ch, backend) for ch in chunks]))
        for part in parts:
            for k, n in part.items():
                hist[k] = hist.get(k, 0) + n
    count = sum(hist.values())
    fld = p.constant.field
    total = fld.zero()
    for key in sorted(hist):
        term = fld.rational(hist[key])
        for g, e in enumerate(key):
            if e:
                term = term * _power(gens[g], e)
        total = total + term
    return total * p.constant, count


# public API -----------------------------------------------------------------------------------


def _check_data(c: CellComplex, d: FusionData, verify: bool) -> None:
    if c.dim != 3:
        raise EngineError(f"dimension mismatch: the fusion state sum needs a 3-manifold, got dimension {c.dim}")
    if verify:
        from .catdata.fusion import verify_consistency

        rep = verify_consistency(d)
        if not rep.ok:
            raise EngineError("category data fails verification: " + "; ".join(rep.problems[:5]))


def state_sum(c: CellComplex, d: FusionData, lam=None, workers: int = 1, backend: str | None = None,
              verify: bool = False, trace: bool = False) -> StateSumResult:
    """Z = sum over labelings of prod_handles ev / N, exactly."""
    _check_data(c, d, verify)
    lam = _lam(d, lam)
    if lam.is_zero():
        raise EngineError("lambda must be nonzero")
    try:
        p = _compile_fusion(c, d, lam)
    except (FusionError, EvaluationError) as exc:
        raise EngineError(str(exc)) from None
    value, count = _solve(p, workers, backend)
    per = None
    if trace:
        per = {}
        for beta in enumerate_labelings(c, d):
            per = {}
            labeling_weight(c, beta, d, lam, per)
            break
    return StateSumResult(value, count, per)


def enumerate_labelings(c: CellComplex, d: FusionData, prune: bool = True) -> Iterator[Labeling]:
    """Admissible labelings in enumeration order (2-cells by id, then 1-cells by id).

    With ``prune`` a partial 2-cell labeling is abandoned as soon as some
    1-cell word is complete and has no vertex basis; without it every
    2-cell labeling is generated and filtered at the end.
    """
    if c.dim != 3:
        raise EngineError("labelings are defined for 3-dimensional complexes")
    du = d.dual
    two = c.cells_of_dim(2)
    one = c.cells_of_dim(1)
    words = {x: c.link_of(x).word for x in one}
    pos = {x: i for i, x in enumerate(two)}
    last = {x: max((pos[cell] for cell, _ in words[x]), default=-1) for x in one}
    at: dict[int, list[int]] = {}
    for x in one:
        at.setdefault(last[x], []).append(x)
    assign: dict[int, int] = {}

    def word(x):
        return tuple(assign[cell] if s == 1 else du[assign[cell]] for cell, s in words[x])

    def finish():
        bases = [evaluate_circle(word(x), d) for x in one]
        if any(not b for b in bases):
            return
        for choice in itertools.product(*bases):
            beta = dict(assign)
            beta.update(zip(one, choice))
            for x in c.cells_of_dim(3):
                beta[x] = 0
            yield beta

    if prune and any(not evaluate_circle(word(x), d) for x in at.get(-1, [])):
        return

    def rec(i):
        if i == len(two):
            yield from finish()
            return
        for a in range(d.rank):
            assign[two[i]] = a
            if prune and any(not evaluate_circle(word(x), d) for x in at.get(i, [])):
                continue
            yield from rec(i + 1)
        del assign[two[i]]

    yield from rec(0)


# surfaces ------------------------------------------------------------------------------------


def _compile_onecat(c: CellComplex, d: OneCatData, lam: FieldElement, oriented: bool) -> _Problem:
    r = list(range(d.rank)) if oriented else d.involution

    def read(x, s):
        return x if s == 1 else r[x]

    two = c.cells_of_dim(2)
    pos = {x: i for i, x in enumerate(two)}
    domains = [d.rank] * len(two)
    factors: list[_Factor] = []
    for x in two:
        factors.append(_Factor([pos[x]], {(i,): lam * d.circle_value[i] for i in range(d.rank)}))
    for e in c.cells_of_dim(1):
        link = c.link_of(e)
        if link.sphere != 0 or len(link.points) != 2:
            raise EngineError(f"1-cell {e} of a surface needs a two-point link")
        uniq, lp = _local([p for p, _ in link.points])
        vals = {}
        for assign in itertools.product(range(d.rank), repeat=len(uniq)):
            (p0, s0), (p1, s1) = link.points
            a, b = read(assign[lp[p0]], s0), read(assign[lp[p1]], s1)
            if a == b:
                # the identity of p_a: circle value over its norm
                vals[assign] = (lam * d.circle_value[a]) / (lam * d.circle_value[a]) ** 2
        factors.append(_Factor([pos[u] for u in uniq], vals))
    for v in c.cells_of_dim(0):
        link = c.link_of(v)
        if link.sphere != 1:
            raise EngineError(f"0-cell {v} of a surface needs a circle link")
        uniq, lp = _local([p for p, _ in link.regions])
        vals = {}
        for assign in itertools.product(range(d.rank), repeat=len(uniq)):
            reads = {read(assign[lp[p]], s) for p, s in link.regions}
            if len(reads) == 1:
                vals[assign] = lam * d.circle_value[reads.pop()]
        factors.append(_Factor([pos[u] for u in uniq], vals))
    return _Problem(two, domains, factors, lam.field.one())


def n1_state_sum(c: CellComplex, d: OneCatData, oriented: bool = True, lam=None, workers: int = 1,
                 backend: str | None = None) -> StateSumResult:
    """The surface state sum; unoriented runs read labels through the involution at -1 frames."""
    if c.dim != 2:
        raise EngineError(f"dimension mismatch: the n = 1 sum needs a surface, got dimension {c.dim}")
    if not _connected(c):
        raise EngineError("the n = 1 state sum needs a connected surface")
    lam = _lam(d, lam)
    value, count = _solve(_compile_onecat(c, d, lam, oriented), workers, backend)
    return StateSumResult(value, count)


def _connected(c: CellComplex) -> bool:
    if not c.cells:
        return True
    parent = list(range(len(c.cells)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for lo, ups in c.incidences.items():
        for hi, _, _ in ups:
            parent[find(lo)] = find(hi)
    return len({find(x) for x in range(len(c.cells))}) == 1


# lambda scaling -------------------------------------------------------------------------------


@dataclass
class LambdaReport:
    mu: FieldElement
    euler: int
    before: FieldElement
    after: FieldElement

    @property
    def expected(self) -> FieldElement:
        return self.before * _power(self.mu, self.euler)

    @property
    def ok(self) -> bool:
        return self.after == self.expected

    def __str__(self) -> str:
        return (f"chi = {self.euler}, Z(lambda) = {self.before.format()}, Z(mu lambda) = {self.after.format()}, "
                f"mu^chi Z(lambda) = {self.expected.format()}: {'PASS' if self.ok else 'FAIL'}")


def lambda_rescale_check(c: CellComplex, d, mu, oriented: bool = True) -> LambdaReport:
    mu = mu if isinstance(mu, FieldElement) else d.field(mu)
    if mu.is_zero():
        raise EngineError("mu must be nonzero")
    if isinstance(d, OneCatData):
        before = n1_state_sum(c, d, oriented).value
        after = n1_state_sum(c, d, oriented, lam=mu * d.lam).value
    else:
        before = state_sum(c, d).value
        after = state_sum(c, d, lam=mu * d.lam).value
    return LambdaReport(mu, c.euler_characteristic(), before, after)
