"""Degree-zero-side structure: bialgebras, Lie actions, module algebras,
semidirect (smash) products and Takiff-type Lie (super)algebras.

Two kinds of acting objects are supported:
  * a finite-dimensional bialgebra given by structure constants, acting on
    the generator space V on the right, extended to tensor powers by
    distributing the iterated comultiplication across the factors;
  * a finite-dimensional Lie algebra acting by derivations; it stands in
    for its (infinite-dimensional) enveloping algebra, which is never
    materialized: primitivity of the generators determines the extension
    to tensor powers (Leibniz sums), and all smash-product identities are
    checked in their derivation form.

Side and comultiplication bookkeeping: every action is stored as plain
matrices (one per basis element of the acting object) together with a
side flag and a cop flag.  The cop flag says the extension to tensor
powers distributes the comultiplication legs in reverse, which is what
the dual action on V* requires.
"""

from __future__ import annotations

from fractions import Fraction

from koszulkit.exactlin import (
    F0, F1, Mat, Subspace, kron, kron_list, rat_from_str, rat_to_str,
)


# ---------------------------------------------------------------------------
# bialgebras

class Bialgebra:
    """Finite-dimensional bialgebra by structure constants.

    mult is the (dim x dim^2) matrix of the multiplication, comult the
    (dim^2 x dim) matrix of the comultiplication, counit a (1 x dim) row,
    unit a coefficient vector.  Tensor squares are flattened row-major.
    """

    def __init__(self, dim, mult, unit, comult, counit, names=None):
        self.dim = dim
        assert mult.rows == dim and mult.cols == dim * dim
        assert comult.rows == dim * dim and comult.cols == dim
        assert counit.rows == 1 and counit.cols == dim
        assert len(unit) == dim
        self.mult = mult
        self.unit = [Fraction(x) for x in unit]
        self.comult = comult
        self.counit = counit
        self.names = list(names) if names else ["b%d" % i for i in range(dim)]

    def mult_vec(self, u, v):
        return self.mult.apply([x * y for x in u for y in v])

    def unit_mat(self):
        return Mat(self.dim, 1, [[x] for x in self.unit])

    def cop(self):
        """Same algebra with the comultiplication legs swapped."""
        d = self.dim
        swapped = Mat(d * d, d)
        for a in range(d):
            for b in range(d):
                swapped.data[b * d + a] = self.comult.data[a * d + b][:]
        return Bialgebra(d, self.mult, self.unit, swapped, self.counit,
                         self.names)

    def is_cocommutative(self):
        return self.cop().comult == self.comult

    def delta_power(self, r):
        """Matrix of the iterated comultiplication into r tensor legs.

        r = 0 gives the counit, r = 1 the identity."""
        d = self.dim
        if r == 0:
            return self.counit
        m = Mat.identity(d)
        for k in range(1, r):
            m = kron(self.comult, Mat.identity(d ** (k - 1))) @ m
        return m

    def to_json_obj(self):
        d = self.dim
        return {
            "dim": d,
            "names": list(self.names),
            "mult": [[[rat_to_str(self.mult.data[c][a * d + b])
                       for c in range(d)] for b in range(d)]
                     for a in range(d)],
            "unit": [rat_to_str(x) for x in self.unit],
            "comult": [[rat_to_str(x) for x in row] for row in self.comult.data],
            "counit": [rat_to_str(x) for x in self.counit.data[0]],
        }

    @staticmethod
    def from_json_obj(obj):
        d = int(obj["dim"])
        mult = Mat(d, d * d)
        for a in range(d):
            for b in range(d):
                for c in range(d):
                    mult.data[c][a * d + b] = rat_from_str(obj["mult"][a][b][c])
        unit = [rat_from_str(x) for x in obj["unit"]]
        comult = Mat(d * d, d, [[rat_from_str(x) for x in row]
                                for row in obj["comult"]])
        counit = Mat(1, d, [[rat_from_str(x) for x in obj["counit"]]])
        return Bialgebra(d, mult, unit, comult, counit, obj.get("names"))


def validate_bialgebra(b):
    """(True, None), or (False, name-of-violated-axiom)."""
    d = b.dim
    idm = Mat.identity(d)
    u = b.unit_mat()
    if b.mult @ kron(b.mult, idm) != b.mult @ kron(idm, b.mult):
        return False, "associativity"
    if b.mult @ kron(u, idm) != idm or b.mult @ kron(idm, u) != idm:
        return False, "unit law"
    if kron(b.comult, idm) @ b.comult != kron(idm, b.comult) @ b.comult:
        return False, "coassociativity"
    if (kron(b.counit, idm) @ b.comult != idm
            or kron(idm, b.counit) @ b.comult != idm):
        return False, "counit law"
    # comultiplication and counit are algebra maps
    mid_swap = [0] * d ** 4
    for a in range(d):
        for x in range(d):
            for y in range(d):
                for c in range(d):
                    src = ((a * d + x) * d + y) * d + c
                    dst = ((a * d + y) * d + x) * d + c
                    mid_swap[src] = dst
    from koszulkit.exactlin import perm_matrix
    tau = perm_matrix(mid_swap)
    lhs = b.comult @ b.mult
    rhs = kron(b.mult, b.mult) @ tau @ kron(b.comult, b.comult)
    if lhs != rhs:
        return False, "comultiplication not multiplicative"
    if b.comult @ u != kron(u, u):
        return False, "comultiplication of the unit"
    if b.counit @ b.mult != kron(b.counit, b.counit):
        return False, "counit not multiplicative"
    if (b.counit @ u) != Mat.identity(1):
        return False, "counit of the unit"
    return True, None


# ---------------------------------------------------------------------------
# Lie actions

class LieAction:
    """Lie algebra by structure constants with a representation on V and
    optional representations on named test modules.

    brackets[(a, b)] is the coefficient vector of [x_a, x_b]; missing keys
    are zero.  rho[a] is the matrix of x_a on V (a left action)."""

    def __init__(self, names, brackets, rho, modules=None):
        self.names = list(names)
        self.dim = len(self.names)
        self.brackets = {k: [Fraction(x) for x in v]
                         for k, v in brackets.items() if any(v)}
        self.rho = list(rho)
        self.v_dim = self.rho[0].rows if self.rho else 0
        for m in self.rho:
            assert m.rows == m.cols == self.v_dim
        # modules: name -> list of matrices, one per Lie basis element
        self.modules = {k: list(v) for k, v in (modules or {}).items()}

    def bracket_basis(self, a, b):
        return list(self.brackets.get((a, b), [F0] * self.dim))

    def bracket_vec(self, u, v):
        out = [F0] * self.dim
        for a, x in enumerate(u):
            if x:
                for b, y in enumerate(v):
                    if y:
                        for c, z in enumerate(self.bracket_basis(a, b)):
                            if z:
                                out[c] += x * y * z
        return out

    def rep_of(self, mats, vec):
        out = Mat.zeros(mats[0].rows, mats[0].cols) if mats else Mat.zeros(0, 0)
        for a, x in enumerate(vec):
            if x:
                out = out + mats[a].scale(x)
        return out

    def to_json_obj(self):
        br = {}
        for (a, b), vec in sorted(self.brackets.items()):
            if a < b:
                br["%s,%s" % (self.names[a], self.names[b])] = [
                    {"c": rat_to_str(x), "b": self.names[c]}
                    for c, x in enumerate(vec) if x]
        return {
            "basis": list(self.names),
            "brackets": br,
            "action": {self.names[a]: [[rat_to_str(x) for x in row]
                                       for row in self.rho[a].data]
                       for a in range(self.dim)},
        }

    @staticmethod
    def from_json_obj(obj, modules_obj=None):
        names = list(obj["basis"])
        pos = {g: i for i, g in enumerate(names)}
        dim = len(names)
        brackets = {}
        given = set()
        for key, terms in obj.get("brackets", {}).items():
            a_name, b_name = key.split(",")
            a, b = pos[a_name], pos[b_name]
            vec = [F0] * dim
            for t in terms:
                vec[pos[t["b"]]] += rat_from_str(t["c"])
            brackets[(a, b)] = vec
            given.add((a, b))
        for (a, b) in list(given):
            if a != b and (b, a) not in given:
                brackets[(b, a)] = [-x for x in brackets[(a, b)]]
        rho = [Mat.from_rows([[rat_from_str(x) for x in row]
                              for row in obj["action"][name]])
               for name in names]
        modules = {}
        for mname, mobj in (modules_obj or {}).items():
            mats = [Mat.from_rows([[rat_from_str(x) for x in row]
                                   for row in mobj["action"][name]])
                    for name in names]
            modules[mname] = mats
        return LieAction(names, brackets, rho, modules)


def _jacobi_ok(dim, bracket_basis, bracket_vec, parities):
    """Graded antisymmetry plus the graded cyclic Jacobi identity on all
    basis triples; plain Lie is the all-even case."""
    for a in range(dim):
        for b in range(dim):
            sign = -1 if (parities[a] and parities[b]) else 1
            lhs = bracket_basis(a, b)
            rhs = [sign * -x for x in bracket_basis(b, a)]
            if lhs != rhs:
                return False, ("antisymmetry", a, b)
    def e(i):
        v = [F0] * dim
        v[i] = F1
        return v
    for a in range(dim):
        for b in range(dim):
            for c in range(dim):
                s_ac = -1 if (parities[a] and parities[c]) else 1
                s_ba = -1 if (parities[b] and parities[a]) else 1
                s_cb = -1 if (parities[c] and parities[b]) else 1
                total = [F0] * dim
                for s, (x, y, z) in ((s_ac, (a, b, c)), (s_ba, (b, c, a)),
                                     (s_cb, (c, a, b))):
                    inner = bracket_basis(y, z)
                    term = bracket_vec(e(x), inner)
                    for i, t in enumerate(term):
                        total[i] += s * t
                if any(total):
                    return False, ("jacobi", a, b, c)
    return True, None


def validate_lie(l):
    """Antisymmetry, Jacobi, and the representation property on V and on
    every registered test module."""
    ok, where = _jacobi_ok(l.dim, l.bracket_basis, l.bracket_vec,
                           [0] * l.dim)
    if not ok:
        return ok, where
    for label, mats in [("V", l.rho)] + sorted(l.modules.items()):
        for a in range(l.dim):
            for b in range(l.dim):
                want = l.rep_of(mats, l.bracket_basis(a, b))
                got = mats[a] @ mats[b] - mats[b] @ mats[a]
                if want != got:
                    return False, ("representation", label, a, b)
    return True, None


# ---------------------------------------------------------------------------
# action providers

class ActionProvider:
    """Uniform wrapper for the acting object.

    mats[b] is the matrix of the action of the b-th basis element on the
    space (dimension space_dim).  side records on which side the action
    is written; cop means tensor-power extensions distribute the
    comultiplication legs in reverse order.  Lie providers store the
    right-action matrices (the negated representation)."""

    def __init__(self, kind, base, mats, side="right", cop=False):
        assert kind in ("bialgebra", "lie")
        self.kind = kind
        self.base = base
        self.mats = list(mats)
        self.space_dim = self.mats[0].rows if self.mats else 0
        self.side = side
        self.cop = cop

    @property
    def basis_size(self):
        return self.base.dim

    @staticmethod
    def from_bialgebra(b, act_mats):
        return ActionProvider("bialgebra", b, act_mats)

    @staticmethod
    def from_lie(l):
        return ActionProvider("lie", l, [m.scale(-1) for m in l.rho])

    def act_on_tensor(self, elem, r):
        """Matrix of the action of the element (a coefficient vector over
        the acting basis) on the r-th tensor power of the space."""
        n = self.space_dim
        if self.kind == "lie":
            if r == 0:
                return Mat.zeros(1, 1)
            m = self.base.rep_of(self.mats, elem)
            total = Mat.zeros(n ** r, n ** r)
            for pos in range(r):
                total = total + kron_list(
                    [Mat.identity(n ** pos), m,
                     Mat.identity(n ** (r - 1 - pos))])
            return total
        d = self.base.dim
        if r == 0:
            val = sum(self.base.counit.data[0][b] * x
                      for b, x in enumerate(elem))
            return Mat(1, 1, [[val]])
        legs = self.base.delta_power(r).apply(list(elem))
        total = Mat.zeros(n ** r, n ** r)
        for idx, coeff in enumerate(legs):
            if coeff:
                letters = []
                rem = idx
                for _ in range(r):
                    letters.append(rem % d)
                    rem //= d
                letters.reverse()
                if self.cop:
                    letters.reverse()
                total = total + kron_list(
                    [self.mats[b] for b in letters]).scale(coeff)
        return total

    def act_basis_on_tensor(self, b, r):
        elem = [F0] * self.basis_size
        elem[b] = F1
        return self.act_on_tensor(elem, r)

    def act_on_component(self, alg, elem, i):
        """Induced action matrix on the quotient component H_i."""
        return alg.proj[i] @ self.act_on_tensor(elem, i) @ alg.sect[i]

    def act_basis_on_component(self, alg, b, i):
        elem = [F0] * self.basis_size
        elem[b] = F1
        return self.act_on_component(alg, elem, i)

    def unit_vector(self):
        if self.kind == "bialgebra":
            return list(self.base.unit)
        return None


def dual_action(provider):
    """Transport to the dual space: matrices transpose, the side flips,
    and (for bialgebras) tensor extensions switch to the reversed legs."""
    side = "left" if provider.side == "right" else "right"
    return ActionProvider(provider.kind, provider.base,
                          [m.transpose() for m in provider.mats],
                          side=side, cop=not provider.cop)


def validate_module_algebra(provider, pres):
    """R-stability under the degree-2 action plus the unit law on V."""
    R = pres.relations
    n = pres.n
    assert provider.space_dim == n
    for b in range(provider.basis_size):
        T = provider.act_basis_on_tensor(b, 2)
        for row in R.basis.data:
            if not R.contains(T.apply(row)):
                return False, ("relation escapes", provider.base.names[b] if
                               hasattr(provider.base, "names") else b)
    if provider.kind == "bialgebra":
        if provider.act_on_tensor(provider.base.unit, 1) != Mat.identity(n):
            return False, ("unit law",)
    return True, None


def validate_action_multiplicative(provider, r):
    """The tensor-power action respects products of the acting object
    (with the composition order dictated by the side)."""
    if provider.kind == "lie":
        # bracket compatibility in right-action (anti-homomorphism) form
        for a in range(provider.basis_size):
            for b in range(provider.basis_size):
                ta = provider.act_basis_on_tensor(a, r)
                tb = provider.act_basis_on_tensor(b, r)
                tbr = provider.act_on_tensor(provider.base.bracket_basis(a, b), r)
                want = tb @ ta - ta @ tb
                if provider.side == "left":
                    want = ta @ tb - tb @ ta
                if tbr != want:
                    return False, (a, b)
        return True, None
    d = provider.base.dim
    for a in range(d):
        for b in range(d):
            ea = [F1 if i == a else F0 for i in range(d)]
            eb = [F1 if i == b else F0 for i in range(d)]
            prod = provider.base.mult_vec(ea, eb)
            tp = provider.act_on_tensor(prod, r)
            ta = provider.act_on_tensor(ea, r)
            tb = provider.act_on_tensor(eb, r)
            want = tb @ ta if provider.side == "right" else ta @ tb
            if tp != want:
                return False, (a, b)
    return True, None


# ---------------------------------------------------------------------------
# smash products

class SmashAlgebra:
    """Semidirect product of the acting object with the graded algebra.

    For bialgebra providers the graded components and multiplication
    tensors are materialized explicitly: side "right" gives components
    A0 (x) H_i with (b (x) h)(b' (x) h') = b b'_(1) (x) (h <| b'_(2)) h';
    side "left" gives H_i (x) A0 with
    (h (x) b)(h' (x) b') = h (b_(1) |> h') (x) b_(2) b'.

    Lie providers are virtual: the enveloping algebra is not materialized
    and associativity is verified in its equivalent derivation form
    (bracket compatibility on every component plus the Leibniz identity
    against every multiplication tensor)."""

    def __init__(self, provider, alg, side="right"):
        self.provider = provider
        self.alg = alg
        self.side = side
        self.N = alg.N
        self.explicit = provider.kind == "bialgebra"
        self.d0 = provider.base.dim if self.explicit else None
        self._mult = {}
        self._act_h = {}
        if self.explicit:
            assert (side == "right") == (provider.side == "right"), \
                "side of the smash must match the side of the action"

    def comp_dim(self, i):
        h = self.alg.hdim(i)
        return self.d0 * h if self.explicit else h

    def _component_action(self, b, i):
        key = (b, i)
        m = self._act_h.get(key)
        if m is None:
            elem = [F0] * self.provider.basis_size
            elem[b] = F1
            m = self.provider.act_on_component(self.alg, elem, i)
            self._act_h[key] = m
        return m

    def mult(self, i, j):
        """Multiplication tensor of components i and j (explicit case)."""
        assert self.explicit and i + j <= self.N
        key = (i, j)
        m = self._mult.get(key)
        if m is not None:
            return m
        d = self.d0
        hi, hj, hij = (self.alg.hdim(i), self.alg.hdim(j),
                       self.alg.hdim(i + j))
        base = self.provider.base
        bialg = base.cop() if self.provider.cop else base
        mh = self.alg.mult(i, j)
        m = Mat(d * hij if self.side == "right" else hij * d,
                self.comp_dim(i) * self.comp_dim(j))
        for b in range(d):
            for mi in range(hi):
                for bp in range(d):
                    for mj in range(hj):
                        if self.side == "right":
                            col = ((b * hi + mi) * d + bp) * hj + mj
                            legs = bialg.comult.col(bp)  # (c1, c2) pairs
                            for idx, coeff in enumerate(legs):
                                if not coeff:
                                    continue
                                c1, c2 = idx // d, idx % d
                                eb = [F1 if t == b else F0 for t in range(d)]
                                ec = [F1 if t == c1 else F0 for t in range(d)]
                                a0_part = base.mult_vec(eb, ec)
                                hv = self._component_action(c2, i).col(mi)
                                prod_in = [x * (F1 if t == mj else F0)
                                           for x in hv for t in range(hj)]
                                h_part = mh.apply(prod_in)
                                for t, xv in enumerate(a0_part):
                                    if xv:
                                        for u, yv in enumerate(h_part):
                                            if yv:
                                                m.data[t * hij + u][col] += \
                                                    coeff * xv * yv
                        else:
                            col = ((mi * d + b) * hj + mj) * d + bp
                            legs = bialg.comult.col(b)
                            for idx, coeff in enumerate(legs):
                                if not coeff:
                                    continue
                                c1, c2 = idx // d, idx % d
                                hv = self._component_action(c1, j).col(mj)
                                prod_in = [(F1 if t == mi else F0) * x
                                           for t in range(hi) for x in hv]
                                h_part = mh.apply(prod_in)
                                ec = [F1 if t == c2 else F0 for t in range(d)]
                                ebp = [F1 if t == bp else F0 for t in range(d)]
                                a0_part = base.mult_vec(ec, ebp)
                                for u, yv in enumerate(h_part):
                                    if yv:
                                        for t, xv in enumerate(a0_part):
                                            if xv:
                                                m.data[u * d + t][col] += \
                                                    coeff * yv * xv
        self._mult[key] = m
        return m

    def validate_associativity(self, max_total=None):
        """Exact associativity on all materialized component triples; for
        virtual Lie providers, the equivalent derivation identities."""
        N = max_total if max_total is not None else self.N
        if not self.explicit:
            for r in range(N + 1):
                ok, where = _lie_component_bracket_ok(self, r)
                if not ok:
                    return False, where
            for i in range(N + 1):
                for j in range(N + 1 - i):
                    ok, where = _lie_leibniz_ok(self, i, j)
                    if not ok:
                        return False, where
            return True, None
        for i in range(N + 1):
            for j in range(N + 1 - i):
                for k in range(N + 1 - i - j):
                    lhs = self.mult(i + j, k) @ kron(
                        self.mult(i, j), Mat.identity(self.comp_dim(k)))
                    rhs = self.mult(i, j + k) @ kron(
                        Mat.identity(self.comp_dim(i)), self.mult(j, k))
                    if lhs != rhs:
                        return False, (i, j, k)
        return True, None


def _lie_component_bracket_ok(smash_alg, r):
    prov, alg = smash_alg.provider, smash_alg.alg
    for a in range(prov.basis_size):
        for b in range(prov.basis_size):
            ta = smash_alg._component_action(a, r)
            tb = smash_alg._component_action(b, r)
            elem = prov.base.bracket_basis(a, b)
            tbr = prov.act_on_component(alg, elem, r)
            want = tb @ ta - ta @ tb if prov.side == "right" else \
                ta @ tb - tb @ ta
            if tbr != want:
                return False, ("bracket", a, b, r)
    return True, None


def _lie_leibniz_ok(smash_alg, i, j):
    prov, alg = smash_alg.provider, smash_alg.alg
    mh = alg.mult(i, j)
    for a in range(prov.basis_size):
        lhs = smash_alg._component_action(a, i + j) @ mh
        rhs = mh @ (kron(smash_alg._component_action(a, i),
                         Mat.identity(alg.hdim(j)))
                    + kron(Mat.identity(alg.hdim(i)),
                           smash_alg._component_action(a, j)))
        if lhs != rhs:
            return False, ("leibniz", a, i, j)
    return True, None


def smash(provider, alg, side="right"):
    ok, why = validate_module_algebra(provider, alg.pres)
    if not ok:
        raise ValueError("not a module algebra: %r" % (why,))
    s = SmashAlgebra(provider, alg, side)
    ok, where = s.validate_associativity()
    if not ok:
        raise ValueError("smash product not associative at %r" % (where,))
    return s


# ---------------------------------------------------------------------------
# Takiff constructions

class TakiffLie:
    """Lie (super)algebra on g + V: the bracket restricts to g, g acts on
    V, and V brackets to zero.  In the super case V sits in odd parity.

    The mixed bracket is stored in its graded-antisymmetric form
    [x, v] = xv, [v, x] = -xv for both parities; with V odd this is the
    unique graded-antisymmetric completion, and it is the one that
    satisfies the super Jacobi identity."""

    def __init__(self, lie, parity):
        assert parity in ("even", "super")
        self.base = lie
        self.parity = parity
        m, k = lie.dim, lie.v_dim
        self.dim = m + k
        self.names = list(lie.names) + ["v%d" % (i + 1) for i in range(k)]
        self.parities = [0] * m + ([1] * k if parity == "super" else [0] * k)
        self.brackets = {}
        for (a, b), vec in lie.brackets.items():
            self.brackets[(a, b)] = list(vec) + [F0] * k
        for a in range(m):
            rho = lie.rho[a]
            for i in range(k):
                col = rho.col(i)
                if any(col):
                    self.brackets[(a, m + i)] = [F0] * m + col
                    self.brackets[(m + i, a)] = [F0] * m + [-x for x in col]

    def bracket_basis(self, a, b):
        return list(self.brackets.get((a, b), [F0] * self.dim))

    def bracket_vec(self, u, v):
        out = [F0] * self.dim
        for a, x in enumerate(u):
            if x:
                for b, y in enumerate(v):
                    if y:
                        for c, z in enumerate(self.bracket_basis(a, b)):
                            if z:
                                out[c] += x * y * z
        return out


def validate_jacobi(t):
    """Graded antisymmetry + graded Jacobi on all basis triples."""
    return _jacobi_ok(t.dim, t.bracket_basis, t.bracket_vec, t.parities)


def takiff(lie, parity):
    ok, where = validate_lie(lie)
    if not ok:
        raise ValueError("invalid Lie action: %r" % (where,))
    t = TakiffLie(lie, parity)
    ok, where = validate_jacobi(t)
    if not ok:
        raise ValueError("Takiff bracket fails Jacobi at %r" % (where,))
    return t


def takiff_graded_dims(t, D):
    """Dimension bookkeeping for the enveloping algebra of the Takiff
    (super)algebra, graded by V-degree and truncated at D.

    Returns (pbw_counts, grown_dims): the count of ordered monomials with
    d factors from V predicted by a PBW basis, against the degree-d
    dimension of the corresponding quadratic algebra on V (symmetric for
    even parity, exterior for super), computed independently by the
    relation-growth engine."""
    from math import comb
    from koszulkit.fixtures import ext_presentation, sym_presentation
    from koszulkit.quadratic import grow
    k = t.base.v_dim
    if t.parity == "super":
        pbw = [comb(k, d) for d in range(D + 1)]
    else:
        pbw = [1] + [comb(k + d - 1, d) for d in range(1, D + 1)]
    if k == 0:
        return pbw, [1] + [0] * D
    pres = (ext_presentation(k) if t.parity == "super"
            else sym_presentation(k))
    return pbw, grow(pres, D).hdims()


# ---------------------------------------------------------------------------
# action-file serialization

def _mat_to_json(m):
    return [[rat_to_str(x) for x in row] for row in m.data]


def _mat_from_json(rows):
    return Mat.from_rows([[rat_from_str(x) for x in row] for row in rows])


def action_bundle_to_json(provider, modules=None):
    """Serialize a provider plus its named left test modules.

    Bialgebra form: {"bialgebra": ..., "action": [matrix per basis
    element], "modules": {name: {"dim": d, "action": [matrices]}}}.
    Lie form: {"lie": {..., "action": {gen: matrix}}, "modules":
    {name: {"dim": d, "action": {gen: matrix}}}}."""
    modules = modules or {}
    if provider.kind == "bialgebra":
        return {
            "bialgebra": provider.base.to_json_obj(),
            "action": [_mat_to_json(m) for m in provider.mats],
            "modules": {name: {"dim": mats[0].rows,
                               "action": [_mat_to_json(m) for m in mats]}
                        for name, mats in sorted(modules.items())},
        }
    lie = provider.base
    return {
        "lie": lie.to_json_obj(),
        "modules": {name: {"dim": mats[0].rows,
                           "action": {lie.names[a]: _mat_to_json(mats[a])
                                      for a in range(lie.dim)}}
                    for name, mats in sorted(modules.items())},
    }


def action_bundle_from_json(obj):
    """Parse an action file; returns (provider, modules) where modules maps
    names to lists of left-action matrices aligned with the acting basis."""
    if "bialgebra" in obj:
        b = Bialgebra.from_json_obj(obj["bialgebra"])
        mats = [_mat_from_json(m) for m in obj.get("action", [])]
        if len(mats) != b.dim:
            raise ValueError("need one action matrix per basis element")
        provider = ActionProvider.from_bialgebra(b, mats)
        modules = {}
        for name, mobj in obj.get("modules", {}).items():
            mmats = [_mat_from_json(m) for m in mobj["action"]]
            if len(mmats) != b.dim:
                raise ValueError("module %r: wrong matrix count" % name)
            modules[name] = mmats
        return provider, modules
    if "lie" in obj:
        lie = LieAction.from_json_obj(obj["lie"], obj.get("modules"))
        return ActionProvider.from_lie(lie), dict(lie.modules)
    raise ValueError("action file needs a 'bialgebra' or 'lie' key")


def validate_left_modules(provider, modules):
    """Each named module is a genuine left module for the acting object:
    multiplicativity + unit law (bialgebra) or bracket compatibility (Lie)."""
    if provider.kind == "lie":
        lie = provider.base
        for name, mats in sorted(modules.items()):
            for a in range(lie.dim):
                for b in range(lie.dim):
                    want = lie.rep_of(mats, lie.bracket_basis(a, b))
                    if want != mats[a] @ mats[b] - mats[b] @ mats[a]:
                        return False, (name, a, b)
        return True, None
    base = provider.base
    d = base.dim
    for name, mats in sorted(modules.items()):
        dim = mats[0].rows
        rho_unit = Mat.zeros(dim, dim)
        for a, x in enumerate(base.unit):
            if x:
                rho_unit = rho_unit + mats[a].scale(x)
        if rho_unit != Mat.identity(dim):
            return False, (name, "unit")
        for a in range(d):
            for b in range(d):
                ea = [F1 if i == a else F0 for i in range(d)]
                eb = [F1 if i == b else F0 for i in range(d)]
                prod = base.mult_vec(ea, eb)
                want = Mat.zeros(dim, dim)
                for c, x in enumerate(prod):
                    if x:
                        want = want + mats[c].scale(x)
                if want != mats[a] @ mats[b]:
                    return False, (name, a, b)
    return True, None
