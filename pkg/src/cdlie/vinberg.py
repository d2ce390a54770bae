"""Special-unitary Lie algebras over composition algebras and their tensor
products, built as exact structure constants.

For a metric diag(m_0..m_{n-1}) with m_i in {+1,-1}, the matrix space is the
set of X with X*^T I = -I X (entrywise star, then transpose).  The bracket is

    [A, B] = AB - BA - (1/n) Tr(AB - BA) Id + (1/n) Sum_ij D_{a_ij, b_ji}

where the derivation summand for monomial tensor entries reduces to one-sided
factor derivations via

    D_{x1 (x) x2, y1 (x) y2} = <x1,y1> D_{x2,y2} + <x2,y2> D_{x1,y1}.

For associative entries with a nonstandard star the plain matrix commutator on
the full antihermitian space is used instead (no derivation summand).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct

from . import cd, tensor
from .descriptors import parse_factor
from .errors import (
    ClosureFailure,
    OctonionicRequiresN3,
    UnsupportedFactor,
    ZeroLabel,
)
from .liealg import LieAlgebra, check_jacobi, sort_sc

# ---------------------------------------------------------------------------
# Cayley-Klein metrics and label classes


@dataclass(frozen=True)
class CKMetric:
    n: int
    labels: tuple[int, ...]
    diag: tuple[int, ...]
    l_raw: int
    l: int

    def two_index(self, i, j):
        """Sign of kappa_{ij} = kappa_{i+1} ... kappa_j for 0 <= i < j < n."""
        s = 1
        for m in range(i, j):
            s *= self.labels[m]
        return s


def build_metric(n, labels):
    """Metric diagonal from n-1 nonzero labels; only signs matter."""
    labels = tuple(labels)
    if len(labels) != n - 1:
        raise ValueError("expected %d labels, got %d" % (n - 1, len(labels)))
    signs = []
    for k in labels:
        if k == 0:
            raise ZeroLabel("labels must be nonzero")
        signs.append(1 if k > 0 else -1)
    diag = [1]
    for s in signs:
        diag.append(diag[-1] * s)
    l_raw = sum(1 for m in diag if m < 0)
    return CKMetric(
        n=n, labels=tuple(signs), diag=tuple(diag), l_raw=l_raw, l=min(l_raw, n - l_raw)
    )


def expand_label_class(n, cls):
    """Concrete sign lists for a label-class shorthand, lexicographic order."""
    cls = cls.strip()
    if n == 1:
        return [()]
    if cls == "{+}":
        return [(1,) * (n - 1)]
    if cls == "{-}":
        return [(-1,) * (n - 1)]
    if cls in ("{{pm}}", "{{+-}}", "any"):
        return [tuple(p) for p in iproduct((1, -1), repeat=n - 1)]
    m = re.match(r"\{\{(\d+);(\d+)\}\}$", cls)
    if m:
        nn, ll = int(m.group(1)), int(m.group(2))
        if nn != n:
            raise ValueError("label class %s does not match n=%d" % (cls, n))
        out = []
        for p in iproduct((1, -1), repeat=n - 1):
            if build_metric(n, p).l == ll:
                out.append(tuple(p))
        if not out:
            raise ValueError("label class %s is empty" % cls)
        return out
    # explicit list: "+,-", "+-", "1,-1"
    text = cls
    if "," in text:
        parts = [p.strip() for p in text.split(",") if p.strip()]
    else:
        parts = list(text)
    signs = []
    for p in parts:
        if p in ("+", "1", "+1"):
            signs.append(1)
        elif p in ("-", "-1"):
            signs.append(-1)
        else:
            raise ValueError("bad label %r in %r" % (p, cls))
    if len(signs) != n - 1:
        raise ValueError("expected %d labels in %r" % (n - 1, cls))
    return [tuple(signs)]


def class_representative(n, cls):
    return expand_label_class(n, cls)[0]


def labels_text(labels):
    return ",".join("+" if s > 0 else "-" for s in labels)


# ---------------------------------------------------------------------------
# construction recipes

SPECIAL_UNITARY = "su"
FULL_ANTIHERMITIAN = "a"


@dataclass(frozen=True)
class ConstructionRecipe:
    k1: str
    k2: str = "R"
    n: int = 3
    labels: tuple[int, ...] = ()
    space: str = SPECIAL_UNITARY
    force: bool = False
    strategy: str = "auto"  # auto | vinberg | commutator


def recipe_text(r):
    body = "n=%d, k1=%s, k2=%s" % (r.n, r.k1, r.k2)
    if r.n > 1:
        body += ", labels=%s" % labels_text(r.labels)
    if r.force:
        body += ", force=true"
    return "%s(%s)" % (r.space, body)


def parse_recipe(text):
    m = re.match(r"(su|a)\((.*)\)$", text.strip())
    if not m:
        raise ValueError("bad recipe text %r" % text)
    space, body = m.group(1), m.group(2)
    force = False
    fm = re.search(r",\s*force=(true|false)\s*$", body)
    if fm:
        force = fm.group(1) == "true"
        body = body[: fm.start()]
    lm = re.search(r"labels=([^)]*)$", body)
    labels_raw = None
    if lm:
        labels_raw = lm.group(1).strip().rstrip(",")
        body = body[: lm.start()].rstrip().rstrip(",")
    kv = {}
    for part in body.split(","):
        part = part.strip()
        if not part:
            continue
        key, _, val = part.partition("=")
        kv[key.strip()] = val.strip()
    n = int(kv.get("n", "3"))
    k1 = kv.get("k1", "R")
    k2 = kv.get("k2", "R")
    if labels_raw:
        labels = class_representative(n, labels_raw)
    else:
        labels = class_representative(n, "{+}")
    return ConstructionRecipe(k1=k1, k2=k2, n=n, labels=labels, space=space, force=force)


# ---------------------------------------------------------------------------
# context: one tensor algebra plus everything derivable from the factors alone


class VinbergContext:
    def __init__(self, k1, k2):
        self.k1, self.k2 = k1, k2
        left = parse_factor(k1)
        right = parse_factor(k2)
        self.t = tensor.tensor_product(left, right)
        self.left, self.right = left, right
        self.gram1 = cd.gram_diagonal(left)
        self.gram2 = cd.gram_diagonal(right)
        # nonstandard stars restrict the usable derivations
        self.span1 = cd.DerivationSpan(left, star_compatible=left.star_variant != "conj")
        self.span2 = cd.DerivationSpan(
            right, star_compatible=right.star_variant != "conj"
        )
        self.nL = len(self.span1)
        self.nR = len(self.span2)
        self.dcoef1 = self._pair_table(left, self.span1)
        self.dcoef2 = self._pair_table(right, self.span2)
        self.der_cols_l = [self._sparse_cols(m) for m in self.span1.maps]
        self.der_cols_r = [self._sparse_cols(m) for m in self.span2.maps]
        self.im_star = cd.im_star_basis(self.t)
        self.im_pos = {q: k for k, q in enumerate(self.im_star)}
        self.octonionic = left.dim == 8 or right.dim == 8
        self.associative = left.dim <= 4 and right.dim <= 4
        self.nonstandard = left.star_variant != "conj" or right.star_variant != "conj"

    @staticmethod
    def _pair_table(alg, span):
        """Coefficients of D_{e_a, e_b} in the span, None where outside it."""
        d = alg.dim
        table = [[None] * d for _ in range(d)]
        for a in range(d):
            for b in range(d):
                m = cd.derivation_map(
                    alg, cd.basis_element(alg, a), cd.basis_element(alg, b)
                )
                if cd.map_is_zero(m):
                    table[a][b] = ()
                else:
                    co = span.decompose(m)
                    table[a][b] = tuple(co) if co is not None else None
        return table

    @staticmethod
    def _sparse_cols(m):
        d = len(m)
        cols = []
        for c in range(d):
            col = [(r, m[r][c]) for r in range(d) if m[r][c] != 0]
            cols.append(tuple(col))
        return cols


@lru_cache(maxsize=None)
def get_context(k1, k2):
    return VinbergContext(k1, k2)


# ---------------------------------------------------------------------------
# basis enumeration and the bracket engine


class _Builder:
    def __init__(self, ctx, n, metric, space, strategy, strict):
        self.ctx = ctx
        self.n = n
        self.metric = metric
        self.space = space
        self.strategy = strategy
        self.strict = strict
        self.failures = []
        t = ctx.t
        descs = []
        if strategy == "vinberg":
            descs += [("dL", k) for k in range(ctx.nL)]
            descs += [("dR", k) for k in range(ctx.nR)]
        for i in range(n):
            for j in range(i + 1, n):
                for b in range(t.dim):
                    descs.append(("off", i, j, b))
        if space == SPECIAL_UNITARY:
            for i in range(n - 1):
                for q in ctx.im_star:
                    descs.append(("diag", i, q))
        else:
            for i in range(n):
                for q in ctx.im_star:
                    descs.append(("diaga", i, q))
        self.descs = descs
        self.index = {d: k for k, d in enumerate(descs)}
        self.der_count = (ctx.nL + ctx.nR) if strategy == "vinberg" else 0
        self.mats = [self._mat_of(d) for d in descs]

    def label_of(self, desc):
        kind = desc[0]
        if kind == "dL":
            return "dL[%d]" % desc[1]
        if kind == "dR":
            return "dR[%d]" % desc[1]
        if kind == "off":
            return "E[%d,%d;%d]" % desc[1:]
        return "T[%d;%d]" % desc[1:]

    def _mat_of(self, desc):
        kind = desc[0]
        m = self.metric.diag
        t = self.ctx.t
        one = Fraction(1)
        if kind in ("dL", "dR"):
            return None
        if kind == "off":
            _, i, j, b = desc
            partner = -one * m[i] * m[j] * t.star_signs[b]
            return {(i, j): {b: one}, (j, i): {b: partner}}
        if kind == "diag":
            _, i, q = desc
            return {(i, i): {q: one}, (i + 1, i + 1): {q: -one}}
        _, i, q = desc
        return {(i, i): {q: one}}

    # -- matrix helpers ----------------------------------------------------

    def _matmul(self, a, b):
        t = self.ctx.t
        out = {}
        for (r, c), da in a.items():
            for (r2, c2), db in b.items():
                if r2 != c:
                    continue
                target = out.setdefault((r, c2), {})
                for p, al in da.items():
                    srow = t.mul_sign[p]
                    irow = t.mul_index[p]
                    for q, be in db.items():
                        k = irow[q]
                        v = target.get(k)
                        w = al * be * srow[q]
                        target[k] = w if v is None else v + w
        return out

    def _mat_sub(self, a, b):
        out = {rc: dict(dv) for rc, dv in a.items()}
        for rc, dv in b.items():
            target = out.setdefault(rc, {})
            for p, v in dv.items():
                target[p] = target.get(p, Fraction(0)) - v
        return out

    def _record(self, message, witness):
        if self.strict:
            raise ClosureFailure(message, witness=witness)
        self.failures.append((message, witness))

    # -- bracket cases -----------------------------------------------------

    def bracket(self, ia, ib):
        da, db = self.descs[ia], self.descs[ib]
        ka, kb = da[0], db[0]
        a_is_der = ka in ("dL", "dR")
        b_is_der = kb in ("dL", "dR")
        if a_is_der and b_is_der:
            return self._bracket_der_der(da, db)
        if a_is_der and not b_is_der:
            return self._decompose_matrix(self._apply_der(da, self.mats[ib]))
        if not a_is_der and b_is_der:
            out = self._decompose_matrix(self._apply_der(db, self.mats[ia]))
            return {k: -v for k, v in out.items()}
        return self._bracket_mat_mat(ia, ib)

    def _bracket_der_der(self, da, db):
        ctx = self.ctx
        if da[0] != db[0]:
            return {}
        if da[0] == "dL":
            span, offset = ctx.span1, 0
        else:
            span, offset = ctx.span2, ctx.nL
        m = cd.map_commutator(span.maps[da[1]], span.maps[db[1]])
        co = span.decompose(m)
        if co is None:
            self._record("derivation commutator left the span", (da, db))
            return {}
        return {offset + k: v for k, v in enumerate(co) if v != 0}

    def _apply_der(self, dd, mat):
        ctx = self.ctx
        side_left = dd[0] == "dL"
        cols = (ctx.der_cols_l if side_left else ctx.der_cols_r)[dd[1]]
        d2 = ctx.right.dim
        out = {}
        for rc, dv in mat.items():
            target = {}
            for p, al in dv.items():
                p1, p2 = divmod(p, d2)
                if side_left:
                    for r, val in cols[p1]:
                        k = r * d2 + p2
                        target[k] = target.get(k, Fraction(0)) + al * val
                else:
                    for r, val in cols[p2]:
                        k = p1 * d2 + r
                        target[k] = target.get(k, Fraction(0)) + al * val
            target = {k: v for k, v in target.items() if v != 0}
            if target:
                out[rc] = target
        return out

    def _bracket_mat_mat(self, ia, ib):
        a, b = self.mats[ia], self.mats[ib]
        p = self._mat_sub(self._matmul(a, b), self._matmul(b, a))
        out = {}
        if self.strategy == "vinberg":
            n = self.n
            trace = {}
            for r in range(n):
                dv = p.get((r, r))
                if dv:
                    for q, v in dv.items():
                        trace[q] = trace.get(q, Fraction(0)) + v
            if any(v != 0 for v in trace.values()):
                inv = Fraction(1, n)
                for r in range(n):
                    target = p.setdefault((r, r), {})
                    for q, v in trace.items():
                        if v != 0:
                            target[q] = target.get(q, Fraction(0)) - inv * v
            self._d_term(a, b, out)
        return self._decompose_matrix(p, out)

    def _d_term(self, a, b, out):
        """(1/n) sum_rc m_r m_c D_{a_rc, b_rc} decomposed over the derivation
        basis; the metric weights make the sum equal -sum_rc D_{a_rc, conj
        b_cr}, which is what stays invariant under congruence."""
        ctx = self.ctx
        d2 = ctx.right.dim
        mdiag = self.metric.diag
        gram1, gram2 = ctx.gram1, ctx.gram2
        dcoef1, dcoef2 = ctx.dcoef1, ctx.dcoef2
        accl = [Fraction(0)] * ctx.nL
        accr = [Fraction(0)] * ctx.nR
        for (r, c), da in a.items():
            db = b.get((r, c))
            if not db:
                continue
            wmet = mdiag[r] * mdiag[c]
            for p, al in da.items():
                p1, p2 = divmod(p, d2)
                for q, be in db.items():
                    q1, q2 = divmod(q, d2)
                    w = al * be * wmet
                    if p1 == q1:
                        co = dcoef2[p2][q2]
                        if co is None:
                            self._record(
                                "derivation pair outside the filtered span",
                                ((p1, p2), (q1, q2)),
                            )
                        elif co:
                            g = gram1[p1] * w
                            for k, v in enumerate(co):
                                if v != 0:
                                    accr[k] += g * v
                    if p2 == q2:
                        co = dcoef1[p1][q1]
                        if co is None:
                            self._record(
                                "derivation pair outside the filtered span",
                                ((p1, p2), (q1, q2)),
                            )
                        elif co:
                            g = gram2[p2] * w
                            for k, v in enumerate(co):
                                if v != 0:
                                    accl[k] += g * v
        inv = Fraction(1, self.n)
        for k, v in enumerate(accl):
            if v != 0:
                out[k] = inv * v
        for k, v in enumerate(accr):
            if v != 0:
                out[ctx.nL + k] = inv * v

    def _decompose_matrix(self, p, out=None):
        """Read sa coordinates off a matrix dict, checking consistency."""
        out = {} if out is None else out
        ctx = self.ctx
        m = self.metric.diag
        star = ctx.t.star_signs
        index = self.index
        n = self.n
        for i in range(n):
            for j in range(i + 1, n):
                dij = p.get((i, j), {})
                dji = p.get((j, i), {})
                for b in set(dij) | set(dji):
                    cij = dij.get(b, Fraction(0))
                    cji = dji.get(b, Fraction(0))
                    if cji != -m[i] * m[j] * star[b] * cij:
                        self._record(
                            "matrix part is not antihermitian", ((i, j), b)
                        )
                        continue
                    if cij != 0:
                        out[index[("off", i, j, b)]] = cij
        if self.space == SPECIAL_UNITARY:
            coords = set()
            for r in range(n):
                coords.update(p.get((r, r), {}))
            for q in sorted(coords):
                seq = [p.get((r, r), {}).get(q, Fraction(0)) for r in range(n)]
                if all(v == 0 for v in seq):
                    continue
                if q not in ctx.im_pos:
                    self._record("diagonal entry outside the star-odd span", q)
                    continue
                if sum(seq) != 0:
                    self._record("diagonal part has a nonzero trace", q)
                    continue
                run = Fraction(0)
                for i in range(n - 1):
                    run += seq[i]
                    if run != 0:
                        out[index[("diag", i, q)]] = run
        else:
            for r in range(n):
                dv = p.get((r, r), {})
                for q, v in dv.items():
                    if v == 0:
                        continue
                    if q not in ctx.im_pos:
                        self._record("diagonal entry outside the star-odd span", q)
                        continue
                    out[index[("diaga", r, q)]] = v
        return out

    def structure_constants(self):
        nb = len(self.descs)
        sc = []
        for a in range(nb):
            for b in range(a + 1, nb):
                co = self.bracket(a, b)
                for k in sorted(co):
                    v = co[k]
                    if v != 0:
                        sc.append((a, b, k, v))
        return sort_sc(sc)


# ---------------------------------------------------------------------------
# public construction entry points


def resolve_strategy(recipe, ctx):
    if recipe.strategy == "vinberg":
        return "vinberg", SPECIAL_UNITARY
    if recipe.strategy == "commutator":
        return "commutator", FULL_ANTIHERMITIAN
    if recipe.space == FULL_ANTIHERMITIAN:
        return "commutator", FULL_ANTIHERMITIAN
    if not ctx.nonstandard:
        return "vinberg", SPECIAL_UNITARY
    if ctx.associative:
        return "commutator", FULL_ANTIHERMITIAN
    return "vinberg", SPECIAL_UNITARY


def sa_basis_size(ctx, n, space):
    pairs = n * (n - 1) // 2
    diag = (n - 1) if space == SPECIAL_UNITARY else n
    return pairs * ctx.t.dim + diag * len(ctx.im_star)


@lru_cache(maxsize=None)
def build_lie_algebra(recipe):
    """Structure constants for a construction recipe.

    Raises OctonionicRequiresN3 for octonionic sizes that cannot close unless
    the recipe is forced; forced builds record their failures in meta.
    """
    ctx = get_context(recipe.k1, recipe.k2)
    n = recipe.n
    metric = build_metric(n, recipe.labels) if n > 1 else CKMetric(1, (), (1,), 0, 0)
    strategy, space_eff = resolve_strategy(recipe, ctx)
    if ctx.octonionic and not recipe.force:
        if strategy == "commutator":
            raise OctonionicRequiresN3(
                "plain commutators over nonassociative entries do not satisfy "
                "Jacobi; pass force to demonstrate"
            )
        if n not in (1, 3):
            raise OctonionicRequiresN3(
                "octonionic special-unitary construction closes only for "
                "n in {1, 3}; got n=%d (pass force to demonstrate)" % n
            )
    builder = _Builder(ctx, n, metric, space_eff, strategy, strict=not recipe.force)
    sc = builder.structure_constants()
    basis = [builder.label_of(d) for d in builder.descs]
    meta = {
        "recipe": recipe_text(recipe),
        "k1": recipe.k1,
        "k2": recipe.k2,
        "n": n,
        "labels": labels_text(recipe.labels),
        "metric_diag": list(metric.diag),
        "space": recipe.space,
        "space_effective": space_eff,
        "strategy": strategy,
        "non_lie": False,
        "closure_failures": len(builder.failures),
    }
    alg = LieAlgebra(dim=len(basis), basis=basis, sc=sc, meta=meta)
    if recipe.force:
        bad = check_jacobi(alg)
        if bad is not None:
            meta["non_lie"] = True
            meta["jacobi_witness"] = list(bad[:3])
    return alg


@dataclass(frozen=True)
class U2Count:
    sa: int
    im_star: int
    der: int
    label: str

    @property
    def dim(self):
        return self.sa + self.im_star + self.der


def predict_u2(k, labels=(1,)):
    """Dimension count for the octonionic n=2 unitary algebra (no brackets).

    dim = |sa_2| + |im_star| + |der|; the label names the expected real form.
    """
    ctx = get_context(k, "R")
    if ctx.t.left.dim != 8:
        raise UnsupportedFactor("u(2) counting applies to octonionic factors")
    sa = sa_basis_size(ctx, 2, SPECIAL_UNITARY)
    im = len(ctx.im_star)
    der = ctx.nL + ctx.nR
    split = any(g < 0 for g in cd.gram_diagonal(ctx.t.left))
    if split:
        label = "so(5,4)"
    else:
        metric = build_metric(2, tuple(labels))
        label = "so(9)" if metric.l == 0 else "so(8,1)"
    return U2Count(sa=sa, im_star=im, der=der, label=label)
