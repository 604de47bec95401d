"""Almost complex structures on Lie algebra presentations: integrability via
the Nijenhuis tensor, (1,0)-coframes, (p,q) bigrading and the operators
del, delbar and d^c, all in exact arithmetic.

Conventions.  A structure J acts on the vector basis in column convention
(J e_j = sum_i J_ij e_i) and on 1-forms by (J alpha)(X) = -alpha(J X),
extended complex-linearly.  The coframe element built on a real index r is
eta = e^r - i (e^r o J), which satisfies eta(JX) = i eta(X).  The twisted
differential is fixed as d^c = i (delbar - del); with this choice
d d^c a = 2 i del(delbar(a)) on pure-bidegree inputs, so every
"d d^c (omega^k) = 0" style condition is tested through del(delbar(.)).
"""

from __future__ import annotations

from . import linear
from .cealg import Form, FormError, LieAlgebraPresentation, PresentationError
from .scalars import Scalar


class IntegrabilityError(PresentationError):
    pass


class NijenhuisReport:
    def __init__(self, witnesses):
        # witnesses: list of (a, b, coefficient list of N(e_a, e_b))
        self.witnesses = witnesses

    @property
    def passed(self):
        return not self.witnesses

    def __repr__(self):
        if self.passed:
            return "NijenhuisReport(pass)"
        pairs = [(a, b) for a, b, _v in self.witnesses]
        return f"NijenhuisReport(fail on pairs {pairs})"


class AlmostComplexStructure:
    """An endomorphism J with J^2 = -Id on an even-dimensional presentation."""

    def __init__(self, presentation: LieAlgebraPresentation, matrix, name="J"):
        self.presentation = presentation
        self.name = name
        self.matrix = presentation._as_matrix(matrix)
        n = presentation.dim
        if n % 2:
            raise IntegrabilityError("almost complex structures need even dimension")
        table = presentation.table
        square = linear.mat_mul(self.matrix, self.matrix, table)
        minus_id = linear.mat_scale(-table.one, linear.identity(table, n))
        if not linear.mat_eq(square, minus_id):
            raise IntegrabilityError(f"{name}^2 != -Id")
        self._model = None
        self._nijenhuis = None

    @classmethod
    def from_action(cls, presentation, action, name="J"):
        """Build J from a partial basis action {index or name: (coeff, index)
        or signed name like "-e2"}; the remaining half is forced by J^2 = -Id.
        """
        n = presentation.dim
        table = presentation.table
        cols = {}

        def res(x):
            return presentation.index_of(x) if isinstance(x, str) else int(x)

        for src, dst in action.items():
            j = res(src)
            if isinstance(dst, str):
                sgn = 1
                if dst.startswith("-"):
                    sgn, dst = -1, dst[1:]
                i, c = res(dst), table.scalar(sgn)
            else:
                coeff, tgt = dst
                i = res(tgt)
                c = coeff if isinstance(coeff, Scalar) else table.scalar(coeff)
            cols[j] = (i, c)
        for j, (i, c) in list(cols.items()):
            if i not in cols:
                cols[i] = (j, -c)
        if len(cols) != n:
            raise IntegrabilityError("action does not determine J on the whole basis")
        zero = table.zero
        mat = [[zero] * n for _ in range(n)]
        for j, (i, c) in cols.items():
            mat[i - 1][j - 1] = c
        return cls(presentation, mat, name=name)

    # -- basic actions -------------------------------------------------------

    def apply_to_vector(self, coeffs):
        """J acting on a vector given by dense basis coefficients."""
        n = self.presentation.dim
        table = self.presentation.table
        out = [table.zero] * n
        for j, c in enumerate(coeffs):
            if c.is_zero():
                continue
            for i in range(n):
                m = self.matrix[i][j]
                if not m.is_zero():
                    out[i] = out[i] + m * c
        return out

    def pullback_one_form(self, form: Form) -> Form:
        """alpha o J on a 1-form: e^r o J is row r of the matrix."""
        pres = self.presentation
        out = {}
        for idx, c in form.terms.items():
            if len(idx) != 1:
                raise FormError("pullback_one_form expects a 1-form")
            r = idx[0]
            for s in range(1, pres.dim + 1):
                m = self.matrix[r - 1][s - 1]
                if m.is_zero():
                    continue
                key = (s,)
                v = c * m
                acc = out.get(key)
                acc = v if acc is None else acc + v
                if acc.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = acc
        return Form(pres, out, _canonical=True)

    def apply_to_one_form(self, form: Form) -> Form:
        """J alpha = -(alpha o J), extended complex-linearly."""
        return -self.pullback_one_form(form)

    # -- integrability ---------------------------------------------------------

    def nijenhuis_vanishes(self) -> NijenhuisReport:
        """N(e_a, e_b) = [e_a,e_b] + J[Je_a,e_b] + J[e_a,Je_b] - [Je_a,Je_b]
        over all basis pairs a < b; pass iff every value vanishes."""
        if self._nijenhuis is not None:
            return self._nijenhuis
        pres = self.presentation
        pres.require_jacobi()
        n = pres.dim
        table = pres.table
        zero = table.zero
        brackets = [
            [pres.bracket_coefficients(i + 1, j + 1) for j in range(n)] for i in range(n)
        ]

        def bracket_vec(u, v):
            out = [zero] * n
            for i, ci in enumerate(u):
                if ci.is_zero():
                    continue
                for j, cj in enumerate(v):
                    if cj.is_zero():
                        continue
                    bk = brackets[i][j]
                    f = ci * cj
                    for k in range(n):
                        if not bk[k].is_zero():
                            out[k] = out[k] + f * bk[k]
            return out

        basis = []
        for a in range(n):
            v = [zero] * n
            v[a] = table.one
            basis.append(v)
        jbasis = [self.apply_to_vector(v) for v in basis]

        witnesses = []
        for a in range(n):
            for b in range(a + 1, n):
                t1 = brackets[a][b]
                t2 = self.apply_to_vector(bracket_vec(jbasis[a], basis[b]))
                t3 = self.apply_to_vector(bracket_vec(basis[a], jbasis[b]))
                t4 = bracket_vec(jbasis[a], jbasis[b])
                total = [t1[k] + t2[k] + t3[k] - t4[k] for k in range(n)]
                if any(not c.is_zero() for c in total):
                    witnesses.append((a + 1, b + 1, total))
        self._nijenhuis = NijenhuisReport(witnesses)
        return self._nijenhuis

    def model(self) -> "ComplexModel":
        if self._model is None:
            rep = self.nijenhuis_vanishes()
            if not rep.passed:
                a, b, _v = rep.witnesses[0]
                raise IntegrabilityError(
                    f"{self.name} is not integrable: N(e_{a}, e_{b}) != 0"
                )
            self._model = ComplexModel(self)
        return self._model

    def __repr__(self):
        return f"AlmostComplexStructure({self.name}, dim={self.presentation.dim})"


class ComplexModel:
    """The (1,0)-coframe of an integrable structure and the induced complex
    presentation, with exact change of basis in both directions.

    Complex generator k <= m is eta_k; generator m + k is its conjugate.
    """

    def __init__(self, J: AlmostComplexStructure):
        self.J = J
        pres = J.presentation
        self.real = pres
        table = pres.table
        n = pres.dim
        m = n // 2
        self.m = m

        # greedy coframe selection: take the lowest real index whose dual is
        # not yet in the complex span of the chosen pairs
        span = []

        def reduce_against(v, rows):
            v = list(v)
            for lead, rv in rows:
                if not v[lead].is_zero():
                    f = v[lead]
                    v = [x - f * y for x, y in zip(v, rv)]
            return v

        def add_row(v):
            v = reduce_against(v, span)
            lead = next((k for k in range(n) if not v[k].is_zero()), None)
            if lead is None:
                return False
            pv = v[lead]
            v = [x / pv for x in v]
            span.append((lead, v))
            return True

        sigma = []
        for r in range(1, n + 1):
            dual = [table.zero] * n
            dual[r - 1] = table.one
            if not add_row(list(dual)):
                continue
            jrow = [self.J.matrix[r - 1][s] for s in range(n)]
            add_row(jrow)
            sigma.append(r)
            if len(sigma) == m:
                break
        if len(sigma) != m or len(span) != n:
            raise IntegrabilityError("coframe selection failed to span the dual")
        self.sigma = tuple(sigma)

        i_unit = table.i
        self.eta_forms = []
        for r in self.sigma:
            er = pres.generator(r)
            self.eta_forms.append(er - i_unit * J.pullback_one_form(er))

        # change of basis: rows 0..m-1 are eta, rows m..2m-1 conjugates
        cmat = []
        for eta in self.eta_forms:
            cmat.append([eta.coefficient((s,)) for s in range(1, n + 1)])
        for eta in self.eta_forms:
            cmat.append([eta.coefficient((s,)).conjugate() for s in range(1, n + 1)])
        self.C = tuple(tuple(row) for row in cmat)
        self.Cinv = linear.invert(self.C, table)

        # sparse expansion rows: real generator r -> [(complex index, coeff)]
        self._real_to_cx = []
        for r in range(n):
            row = [
                (j + 1, self.Cinv[r][j])
                for j in range(n)
                if not self.Cinv[r][j].is_zero()
            ]
            self._real_to_cx.append(row)
        self._cx_to_real = []
        for a in range(n):
            row = [(s + 1, self.C[a][s]) for s in range(n) if not self.C[a][s].is_zero()]
            self._cx_to_real.append(row)

        names = tuple(f"z{k}" for k in range(1, m + 1)) + tuple(
            f"zb{k}" for k in range(1, m + 1)
        )
        # differential of the complex coframe, rewritten in the coframe itself
        coframe = list(self.eta_forms) + [eta.conjugate() for eta in self.eta_forms]
        dgen = {}
        for a, element in enumerate(coframe):
            cterms = self._substitute(pres.d(element).terms, self._real_to_cx)
            if cterms:
                dgen[a + 1] = cterms
        self.cpres = LieAlgebraPresentation(
            n,
            {g: [(c, idx) for idx, c in t.items()] for g, t in dgen.items()},
            names=names,
            table=table,
        )
        self.cpres.require_jacobi()
        for g, t in dgen.items():
            if g <= m:
                for idx in t:
                    if self.bidegree_of_indices(idx) == (0, 2):
                        raise IntegrabilityError(
                            "non-integrable structure: d of a (1,0) coframe "
                            "element has a (0,2) component"
                        )

    # -- index helpers ---------------------------------------------------------

    def bidegree_of_indices(self, idx):
        p = sum(1 for k in idx if k <= self.m)
        return p, len(idx) - p

    def conjugate_index(self, k):
        return k + self.m if k <= self.m else k - self.m

    def _conjugate_cx_terms(self, terms):
        from .cealg import _sort_signed

        out = {}
        for idx, c in terms.items():
            mapped, sign = _sort_signed(tuple(self.conjugate_index(k) for k in idx))
            cc = c.conjugate()
            if sign < 0:
                cc = -cc
            out[mapped] = out.get(mapped, self.real.table.zero) + cc
        return {k: v for k, v in out.items() if not v.is_zero()}

    def _substitute(self, terms, rows):
        """Expand each generator through the sparse substitution rows."""
        from .cealg import _merge_signed

        out = {}
        for idx, coeff in terms.items():
            partial = {(): coeff}
            for r in idx:
                nxt = {}
                for pidx, pc in partial.items():
                    for tgt, tc in rows[r - 1]:
                        merged, sign = _merge_signed(pidx, (tgt,))
                        if merged is None:
                            continue
                        v = pc * tc
                        if sign < 0:
                            v = -v
                        acc = nxt.get(merged)
                        acc = v if acc is None else acc + v
                        if acc.is_zero():
                            nxt.pop(merged, None)
                        else:
                            nxt[merged] = acc
                partial = nxt
                if not partial:
                    break
            for pidx, pc in partial.items():
                acc = out.get(pidx)
                acc = pc if acc is None else acc + pc
                if acc.is_zero():
                    out.pop(pidx, None)
                else:
                    out[pidx] = acc
        return out

    # -- conversions ------------------------------------------------------------

    def to_complex(self, form: Form) -> Form:
        if not self.real.same_algebra(form.presentation):
            raise FormError("form does not live over this model's presentation")
        return Form(self.cpres, self._substitute(form.terms, self._real_to_cx), _canonical=True)

    def to_real(self, cform: Form) -> Form:
        if not self.cpres.same_algebra(cform.presentation):
            raise FormError("form does not live over this model's complex coframe")
        return Form(self.real, self._substitute(cform.terms, self._cx_to_real), _canonical=True)

    def eta(self, a: int) -> Form:
        """The a-th coframe element (1-based) as a real-basis form."""
        return self.eta_forms[a - 1]

    def eta_monomial(self, etas, conj_etas=()) -> Form:
        """eta_{a1} ^ .. ^ eta_{ap} ^ conj(eta_{b1}) ^ .. as a complex form."""
        idx = tuple(etas) + tuple(self.m + b for b in conj_etas)
        return self.cpres.form([(1, idx)])

    def split_bidegrees(self, cform: Form):
        buckets = {}
        for idx, c in cform.terms.items():
            buckets.setdefault(self.bidegree_of_indices(idx), {})[idx] = c
        return {
            pq: Form(self.cpres, t, _canonical=True) for pq, t in buckets.items()
        }

    def d_split_complex(self, cform: Form):
        """(del part, delbar part) of d on a complex-basis form; a component
        of d outside {(p+1,q), (p,q+1)} raises (non-integrability signal)."""
        del_terms = {}
        delbar_terms = {}
        for (p, q), comp in self.split_bidegrees(cform).items():
            for idx, c in self.cpres.d(comp).terms.items():
                pq2 = self.bidegree_of_indices(idx)
                if pq2 == (p + 1, q):
                    bucket = del_terms
                elif pq2 == (p, q + 1):
                    bucket = delbar_terms
                else:
                    raise IntegrabilityError(
                        f"d maps bidegree {(p, q)} into {pq2}: structure is not integrable"
                    )
                acc = bucket.get(idx)
                acc = c if acc is None else acc + c
                if acc.is_zero():
                    bucket.pop(idx, None)
                else:
                    bucket[idx] = acc
        return (
            Form(self.cpres, del_terms, _canonical=True),
            Form(self.cpres, delbar_terms, _canonical=True),
        )


class BigradedForm:
    """The (p,q)-decomposition of a form with respect to a fixed structure."""

    def __init__(self, J, components):
        self.J = J
        self.components = components  # {(p, q): Form over the real presentation}

    def component(self, p, q) -> Form:
        got = self.components.get((p, q))
        if got is None:
            return Form.zero(self.J.presentation)
        return got

    def bidegrees(self):
        return sorted(self.components)

    def total(self) -> Form:
        out = Form.zero(self.J.presentation)
        for f in self.components.values():
            out = out + f
        return out

    def is_pure(self, p, q):
        return set(self.components) <= {(p, q)}

    def __repr__(self):
        return f"BigradedForm({sorted(self.components)})"


def nijenhuis_vanishes(J: AlmostComplexStructure) -> NijenhuisReport:
    return J.nijenhuis_vanishes()


def coframe_10(J: AlmostComplexStructure):
    """The (1,0)-coframe as real-basis forms, in greedy selection order."""
    return list(J.model().eta_forms)


def bidegree(a: Form, J: AlmostComplexStructure) -> BigradedForm:
    model = J.model()
    ca = model.to_complex(a)
    parts = model.split_bidegrees(ca)
    return BigradedForm(J, {pq: model.to_real(f) for pq, f in parts.items()})


def _d_split(a: Form, J: AlmostComplexStructure):
    """d decomposed as (del part, delbar part) on each pure component; a
    residual outside {(p+1,q),(p,q+1)} raises (non-integrability signal)."""
    model = J.model()
    dl, db = model.d_split_complex(model.to_complex(a))
    return model.to_real(dl), model.to_real(db)


def del_(a: Form, J: AlmostComplexStructure) -> Form:
    return _d_split(a, J)[0]


def delbar(a: Form, J: AlmostComplexStructure) -> Form:
    return _d_split(a, J)[1]


def dc(a: Form, J: AlmostComplexStructure) -> Form:
    """d^c = i (delbar - del)."""
    dl, db = _d_split(a, J)
    return a.presentation.table.i * (db - dl)


def conjugate_form(a: Form, J: AlmostComplexStructure | None = None) -> Form:
    """Conjugate all coefficients; swaps (p,q) and (q,p) components."""
    return a.conjugate()


def weil_operator(a: Form, J: AlmostComplexStructure) -> Form:
    """Multiply each (p,q)-component by i^(p-q)."""
    model = J.model()
    table = a.presentation.table
    ca = model.to_complex(a)
    out = {}
    for idx, c in ca.terms.items():
        p, q = model.bidegree_of_indices(idx)
        out[idx] = c * table.i ** ((p - q) % 4)
    return model.to_real(Form(model.cpres, out, _canonical=True))


def fundamental_form(J: AlmostComplexStructure, gram) -> Form:
    """The 2-form omega(X, Y) = g(JX, Y) of a J-compatible metric g."""
    pres = J.presentation
    table = pres.table
    n = pres.dim
    g = pres._as_matrix(gram)
    m = linear.mat_mul(linear.transpose(J.matrix), g, table)
    terms = []
    for r in range(n):
        for s in range(r + 1, n):
            if not (m[r][s] + m[s][r]).is_zero():
                raise FormError("metric is not compatible with the structure")
            if not m[r][s].is_zero():
                terms.append((m[r][s], (r + 1, s + 1)))
    return pres.form(terms)
