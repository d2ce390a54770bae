"""Scan D-term conventions: pairing b_ji vs b_ij, sign, scale."""

import sys
from fractions import Fraction

sys.path.insert(0, "/root/pkg/src")
sys.path.insert(0, "/root/pkg/tools")

from oracle_vinberg import Oracle, basis_elements, mat_add, mat_zero, vec_zero, vmul

F = Fraction


class Tuned(Oracle):
    pairing = "ji"
    gamma = F(1)

    def bracket(self, u, v):
        Du, Mu = u
        Dv, Mv = v
        n, d = self.n, self.d
        from oracle_vinberg import mat_mul

        Dout = mat_add(mat_mul(Du, Dv), mat_mul(Dv, Du), -1)
        Mout = [[vec_zero(d) for _ in range(n)] for _ in range(n)]
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
        for i in range(n):
            for j in range(n):
                a = Mu[i][j]
                b = Mv[j][i] if self.pairing == "ji" else Mv[i][j]
                for p in range(d):
                    if a[p] == 0:
                        continue
                    for q in range(d):
                        if b[q] == 0:
                            continue
                        w = a[p] * b[q] * self.gamma
                        dm = self.dpair(p, q)
                        for r in range(d):
                            for c in range(d):
                                if dm[r][c] != 0:
                                    Dout[r][c] += F(w * dm[r][c], n)
        return (Dout, Mout)


def scan(k1, k2, n):
    o = Tuned(k1, k2, n, (1,) * n)
    els, names = basis_elements(o)
    results = []
    for pairing in ("ji", "ij"):
        for gamma in (F(1), F(-1), F(2), F(-2), F(1, 2), F(-1, 2), F(3), F(-3), F(1, 4), F(4)):
            o.pairing = pairing
            o.gamma = gamma
            br = {}
            for a in range(len(els)):
                for b in range(a + 1, len(els)):
                    br[(a, b)] = o.bracket(els[a], els[b])

            def get(a, b):
                if a < b:
                    return br[(a, b)]
                u = br[(b, a)]
                return (
                    mat_add(mat_zero(o.d), u[0], -1),
                    [[[-x for x in v] for v in row] for row in u[1]],
                )

            bad = 0
            m = len(els)
            for a in range(m):
                for b in range(a + 1, m):
                    for c in range(b + 1, m):
                        t1 = o.bracket(get(a, b), els[c])
                        t2 = o.bracket(get(b, c), els[a])
                        t3 = o.bracket(get(c, a), els[b])
                        s = o.add(o.add(t1, t2), t3)
                        if not o.is_zero(s):
                            bad += 1
                            break
                    if bad:
                        break
                if bad:
                    break
            tag = "OK " if bad == 0 else "bad"
            results.append((pairing, gamma, tag))
            print("%s %s pairing=%s gamma=%s: %s" % (k1, k2, pairing, gamma, tag))
    return results


if __name__ == "__main__":
    scan(sys.argv[1], sys.argv[2], int(sys.argv[3]))
