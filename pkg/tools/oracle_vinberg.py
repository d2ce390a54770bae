"""Literal reference implementation of the Vinberg bracket, for debugging.

Elements are pairs (Dmat, M): Dmat a dim x dim rational matrix acting on the
tensor algebra, M an n x n matrix of coefficient vectors.  No span
decomposition anywhere; Jacobi is checked on the literal pairs.
"""

import sys
from fractions import Fraction

sys.path.insert(0, "/root/pkg/src")

from cdlie import cd, tensor
from cdlie.descriptors import parse_factor

F = Fraction


def mat_zero(d):
    return [[F(0)] * d for _ in range(d)]


def mat_add(a, b, s=1):
    return [[x + s * y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_mul(a, b):
    d = len(a)
    out = mat_zero(d)
    for i in range(d):
        for k in range(d):
            if a[i][k] != 0:
                aik = a[i][k]
                for j in range(d):
                    if b[k][j] != 0:
                        out[i][j] += aik * b[k][j]
    return out


def vec_zero(d):
    return [F(0)] * d


def vmul(t, x, y):
    out = vec_zero(t.dim)
    for p, xp in enumerate(x):
        if xp == 0:
            continue
        for q, yq in enumerate(y):
            if yq == 0:
                continue
            out[t.mul_index[p][q]] += xp * yq * t.mul_sign[p][q]
    return out


class Oracle:
    def __init__(self, k1, k2, n, diag):
        self.left = parse_factor(k1)
        self.right = parse_factor(k2)
        self.t = tensor.tensor_product(self.left, self.right)
        self.n = n
        self.diag = diag
        self.d = self.t.dim
        self.d1 = self.left.dim
        self.d2 = self.right.dim
        self.g1 = cd.gram_diagonal(self.left)
        self.g2 = cd.gram_diagonal(self.right)
        # factor derivation tables as embedded dim x dim matrices
        self.D1 = [[None] * self.d1 for _ in range(self.d1)]
        self.D2 = [[None] * self.d2 for _ in range(self.d2)]
        for a in range(self.d1):
            for b in range(self.d1):
                m = cd.derivation_map(
                    self.left, cd.basis_element(self.left, a), cd.basis_element(self.left, b)
                )
                self.D1[a][b] = self.embed_left(m)
        for a in range(self.d2):
            for b in range(self.d2):
                m = cd.derivation_map(
                    self.right, cd.basis_element(self.right, a), cd.basis_element(self.right, b)
                )
                self.D2[a][b] = self.embed_right(m)

    def embed_left(self, m):
        out = mat_zero(self.d)
        for r in range(self.d1):
            for c in range(self.d1):
                if m[r][c] != 0:
                    for s in range(self.d2):
                        out[r * self.d2 + s][c * self.d2 + s] = F(m[r][c])
        return out

    def embed_right(self, m):
        out = mat_zero(self.d)
        for r in range(self.d2):
            for c in range(self.d2):
                if m[r][c] != 0:
                    for s in range(self.d1):
                        out[s * self.d2 + r][s * self.d2 + c] = F(m[r][c])
        return out

    # elements -------------------------------------------------------------

    def zero(self):
        return (mat_zero(self.d), [[vec_zero(self.d)] * 0 or [vec_zero(self.d) for _ in range(self.n)] for _ in range(self.n)])

    def el_off(self, i, j, b):
        M = [[vec_zero(self.d) for _ in range(self.n)] for _ in range(self.n)]
        M[i][j][b] = F(1)
        M[j][i][b] = -F(self.diag[i] * self.diag[j] * self.t.star_signs[b])
        return (mat_zero(self.d), M)

    def el_diag(self, i, q):
        M = [[vec_zero(self.d) for _ in range(self.n)] for _ in range(self.n)]
        M[i][i][q] = F(1)
        M[i + 1][i + 1][q] = -F(1)
        return (mat_zero(self.d), M)

    def el_der(self, mat):
        M = [[vec_zero(self.d) for _ in range(self.n)] for _ in range(self.n)]
        return ([row[:] for row in mat], M)

    # bracket --------------------------------------------------------------

    def dpair(self, p, q):
        """D_{e_p, e_q} for tensor monomials, via the factor reduction."""
        p1, p2 = divmod(p, self.d2)
        q1, q2 = divmod(q, self.d2)
        out = mat_zero(self.d)
        if p1 == q1:
            out = mat_add(out, self.D2[p2][q2], self.g1[p1])
        if p2 == q2:
            out = mat_add(out, self.D1[p1][q1], self.g2[p2])
        return out

    def bracket(self, u, v):
        Du, Mu = u
        Dv, Mv = v
        n, d = self.n, self.d
        Dout = mat_add(mat_mul(Du, Dv), mat_mul(Dv, Du), -1)
        Mout = [[vec_zero(d) for _ in range(n)] for _ in range(n)]
        # derivations act entrywise
        for i in range(n):
            for j in range(n):
                for c in range(d):
                    x = Mv[i][j][c]
                    y = Mu[i][j][c]
                    if x != 0:
                        for r in range(d):
                            if Du[r][c] != 0:
                                Mout[i][j][r] += Du[r][c] * x
                    if y != 0:
                        for r in range(d):
                            if Dv[r][c] != 0:
                                Mout[i][j][r] -= Dv[r][c] * y
        # matrix part: AB - BA - (1/n) tr + (1/n) D(A,B)
        P = [[vec_zero(d) for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for j in range(n):
                acc = vec_zero(d)
                for k in range(n):
                    ab = vmul(self.t, Mu[i][k], Mv[k][j])
                    ba = vmul(self.t, Mv[i][k], Mu[k][j])
                    for c in range(d):
                        acc[c] += ab[c] - ba[c]
                P[i][j] = acc
        tr = vec_zero(d)
        for i in range(n):
            for c in range(d):
                tr[c] += P[i][i][c]
        for i in range(n):
            for c in range(d):
                P[i][i][c] -= F(tr[c], n)
        for i in range(n):
            for j in range(n):
                for c in range(d):
                    Mout[i][j][c] += P[i][j][c]
        # derivation summand
        for i in range(n):
            for j in range(n):
                a = Mu[i][j]
                b = Mv[j][i]
                for p in range(d):
                    if a[p] == 0:
                        continue
                    for q in range(d):
                        if b[q] == 0:
                            continue
                        w = a[p] * b[q]
                        dm = self.dpair(p, q)
                        for r in range(d):
                            for c in range(d):
                                if dm[r][c] != 0:
                                    Dout[r][c] += F(w * dm[r][c], n)
        return (Dout, Mout)

    def is_zero(self, u):
        Du, Mu = u
        return all(all(x == 0 for x in row) for row in Du) and all(
            all(all(x == 0 for x in v) for v in row) for row in Mu
        )

    def add(self, u, v, s=1):
        Du, Mu = u
        Dv, Mv = v
        D = mat_add(Du, Dv, s)
        M = [
            [[x + s * y for x, y in zip(a, b)] for a, b in zip(ru, rv)]
            for ru, rv in zip(Mu, Mv)
        ]
        return (D, M)


def basis_elements(o):
    els = []
    names = []
    seen = []
    for i in range(1, o.d1):
        for j in range(i + 1, o.d1):
            m = cd.derivation_map(
                o.left, cd.basis_element(o.left, i), cd.basis_element(o.left, j)
            )
            flat = tuple(x for row in m for x in row)
            if any(flat) and flat not in seen:
                seen.append(flat)
                els.append(o.el_der(o.embed_left(m)))
                names.append("dL(%d,%d)" % (i, j))
    seen = []
    for i in range(1, o.d2):
        for j in range(i + 1, o.d2):
            m = cd.derivation_map(
                o.right, cd.basis_element(o.right, i), cd.basis_element(o.right, j)
            )
            flat = tuple(x for row in m for x in row)
            if any(flat) and flat not in seen:
                seen.append(flat)
                els.append(o.el_der(o.embed_right(m)))
                names.append("dR(%d,%d)" % (i, j))
    for i in range(o.n):
        for j in range(i + 1, o.n):
            for b in range(o.d):
                els.append(o.el_off(i, j, b))
                names.append("E[%d,%d;%d]" % (i, j, b))
    for i in range(o.n - 1):
        for q in range(o.d):
            if o.t.star_signs[q] < 0:
                els.append(o.el_diag(i, q))
                names.append("T[%d;%d]" % (i, q))
    return els, names


def jacobi_scan(k1, k2, n, diag, limit=None):
    o = Oracle(k1, k2, n, diag)
    els, names = basis_elements(o)
    bad = 0
    total = 0
    br = {}
    for a in range(len(els)):
        for b in range(a + 1, len(els)):
            br[(a, b)] = o.bracket(els[a], els[b])
    def get(a, b):
        if a == b:
            return None
        if a < b:
            return br[(a, b)]
        u = br[(b, a)]
        return (mat_add(mat_zero(o.d), u[0], -1), [[[-x for x in v] for v in row] for row in u[1]])
    for a in range(len(els)):
        for b in range(a + 1, len(els)):
            for c in range(b + 1, len(els)):
                total += 1
                t1 = o.bracket(get(a, b), els[c])
                t2 = o.bracket(get(b, c), els[a])
                t3 = o.bracket(get(c, a), els[b])
                s = o.add(o.add(t1, t2), t3)
                if not o.is_zero(s):
                    bad += 1
                    if bad <= limit if limit else bad <= 5:
                        print("JACOBI FAIL at", names[a], names[b], names[c])
                if limit and bad >= limit:
                    return bad, total
    return bad, total


if __name__ == "__main__":
    k1, k2, n = sys.argv[1], sys.argv[2], int(sys.argv[3])
    diag = tuple(int(x) for x in sys.argv[4].split(",")) if len(sys.argv) > 4 else (1,) * n
    bad, total = jacobi_scan(k1, k2, n, diag, limit=3)
    print("%s x %s n=%d: %d bad of %d triples" % (k1, k2, n, bad, total))
