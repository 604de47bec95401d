"""Hypercomplex triples and quaternionic metric conditions: the quaternion
relations, pseudo-hyperkahler data, HKT and quaternionic balanced equations
for a (2,0)-form, and the holomorphic pairing that obstructs HKT metrics.

For a triple (I, J, K) the second structure J maps (1,0)-forms of I to
(0,1)-forms, so eta_a ^ J(conj(eta_b)) is again (2,0); restricted to a
greedily chosen half frame S (|S| = m/2) these products form a basis of the
J-anti-invariant (2,0)-forms, and a candidate decomposes with a uniquely
determined coefficient matrix which is Hermitian exactly when the candidate
is compatible with J.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linear
from .cealg import Form, FormError, wedge, wedge_power, top_coefficient
from .complexops import AlmostComplexStructure, bidegree, del_
from .metrics import _symbol_free
from .scalars import Scalar


class QuaternionError(ValueError):
    pass


@dataclass
class SubCheck:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class QuaternionReport:
    kind: str
    checks: list

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def failed_checks(self):
        return [c for c in self.checks if not c.passed]

    def __bool__(self):
        return self.passed


class HypercomplexTriple:
    """Three anticommuting complex structures with K = IJ."""

    def __init__(self, I: AlmostComplexStructure, J: AlmostComplexStructure, K: AlmostComplexStructure):
        if not (I.presentation.same_algebra(J.presentation) and I.presentation.same_algebra(K.presentation)):
            raise QuaternionError("structures live over different presentations")
        self.I, self.J, self.K = I, J, K
        self.presentation = I.presentation

    @classmethod
    def from_ij(cls, I, J, name="K"):
        table = I.presentation.table
        K = AlmostComplexStructure(
            I.presentation, linear.mat_mul(I.matrix, J.matrix, table), name=name
        )
        return cls(I, J, K)


def check_hypercomplex(t: HypercomplexTriple) -> QuaternionReport:
    """Quaternion relations plus all three integrability checks."""
    table = t.presentation.table
    n = t.presentation.dim
    minus_id = linear.mat_scale(-table.one, linear.identity(table, n))
    checks = []
    for s in (t.I, t.J, t.K):
        sq = linear.mat_mul(s.matrix, s.matrix, table)
        checks.append(SubCheck(f"{s.name}^2 = -Id", linear.mat_eq(sq, minus_id)))
    ij = linear.mat_mul(t.I.matrix, t.J.matrix, table)
    ji = linear.mat_mul(t.J.matrix, t.I.matrix, table)
    checks.append(SubCheck("IJ = K", linear.mat_eq(ij, t.K.matrix)))
    checks.append(SubCheck("JI = -K", linear.mat_eq(ji, linear.mat_neg(t.K.matrix))))
    for s in (t.I, t.J, t.K):
        rep = s.nijenhuis_vanishes()
        detail = "" if rep.passed else f"witness pair {rep.witnesses[0][:2]}"
        checks.append(SubCheck(f"{s.name} integrable", rep.passed, detail))
    return QuaternionReport("hypercomplex", checks)


def check_pseudo_hyperkahler(t: HypercomplexTriple, omega_i: Form, omega_j: Form, omega_k: Form) -> QuaternionReport:
    """Closedness of the three fundamental forms, compatibility of each with
    its own structure, and the (2,0) bidegree of omega_J + i omega_K."""
    pres = t.presentation
    checks = []
    for s, w in ((t.I, omega_i), (t.J, omega_j), (t.K, omega_k)):
        dw = pres.d(w)
        checks.append(SubCheck(f"d omega_{s.name} = 0", dw.is_zero(), "" if dw.is_zero() else str(dw)))
        real_ok = (w.conjugate() - w).is_zero()
        pure = bidegree(w, s).is_pure(1, 1)
        checks.append(SubCheck(f"omega_{s.name} real (1,1) for {s.name}", real_ok and pure))
    omega20 = omega_j + pres.table.i * omega_k
    checks.append(
        SubCheck(
            "omega_J + i omega_K is (2,0) for I",
            bidegree(omega20, t.I).is_pure(2, 0),
        )
    )
    return QuaternionReport("pseudo_hyperkahler", checks)


class HKTCandidate:
    """A (2,0)-form candidate for the quaternionic metric equations.

    The derived data is the half frame S and the coefficient matrix a with
    Omega = sum_{r,s in S} a_rs eta_r ^ J(conj(eta_s)); the candidate is
    J-compatible iff the decomposition exists, and Hermitian iff a is.
    """

    def __init__(self, triple: HypercomplexTriple, omega20: Form):
        self.triple = triple
        self.presentation = triple.presentation
        if self.presentation.dim % 4:
            raise QuaternionError("quaternionic structures need dimension divisible by 4")
        self.quaternionic_dim = self.presentation.dim // 4
        bg = bidegree(omega20, triple.I)
        if not bg.is_pure(2, 0):
            raise QuaternionError(f"candidate is not pure (2,0): {bg.bidegrees()}")
        self.omega = omega20
        self.frame, self.coefficients = _half_frame_decomposition(triple, omega20)

    def hermitian_violation(self):
        a = self.coefficients
        k = len(a)
        for r in range(k):
            for s in range(k):
                if not (a[r][s] - a[s][r].conjugate()).is_zero():
                    return (self.frame[r], self.frame[s])
        return None


def _half_frame(triple: HypercomplexTriple):
    """Greedy half frame S: eta_r for r in S plus J(conj(eta_s)) span (1,0)."""
    model = triple.I.model()
    m = model.m
    table = triple.presentation.table
    n = triple.presentation.dim

    def as_row(form):
        return [form.coefficient((s,)) for s in range(1, n + 1)]

    span = []

    def try_add(v):
        v = list(v)
        for lead, rv in span:
            if not v[lead].is_zero():
                f = v[lead]
                v = [x - f * y for x, y in zip(v, rv)]
        lead = next((k for k in range(n) if not v[k].is_zero()), None)
        if lead is None:
            return False
        pv = v[lead]
        span.append((lead, [x / pv for x in v]))
        return True

    frame = []
    jbars = {}
    for r in range(1, m + 1):
        eta = model.eta(r)
        if not try_add(as_row(eta)):
            continue
        jbar = triple.J.apply_to_one_form(eta.conjugate())
        if not try_add(as_row(jbar)):
            raise QuaternionError("half frame selection failed (J does not pair the coframe)")
        frame.append(r)
        jbars[r] = jbar
        if len(frame) == m // 2:
            break
    if len(frame) != m // 2:
        raise QuaternionError("half frame selection failed to span the (1,0) forms")
    return frame, jbars


def _half_frame_decomposition(triple: HypercomplexTriple, omega20: Form):
    """Solve Omega = sum a_rs eta_r ^ J(conj(eta_s)) over the half frame."""
    model = triple.I.model()
    frame, jbars = _half_frame(triple)
    table = triple.presentation.table
    basis = []
    for r in frame:
        for s in frame:
            basis.append(wedge(model.eta(r), jbars[s]))
    target = model.to_complex(omega20)
    cbasis = [model.to_complex(b) for b in basis]
    rows_idx = sorted(
        set(target.terms) | {idx for b in cbasis for idx in b.terms},
        key=lambda u: (len(u), u),
    )
    mat = [[b.terms.get(idx, table.zero) for b in cbasis] for idx in rows_idx]
    rhs = [target.terms.get(idx, table.zero) for idx in rows_idx]
    sol, _free = linear.solve(mat, rhs, table)
    if sol is None:
        raise QuaternionError(
            "candidate is not J-compatible: no decomposition over eta_r ^ J(conj(eta_s))"
        )
    k = len(frame)
    coeffs = tuple(tuple(sol[r * k + s] for s in range(k)) for r in range(k))
    return frame, coeffs


def check_hkt(c: HKTCandidate, valuation=None) -> QuaternionReport:
    """del(Omega) = 0 plus positive definiteness of the coefficient matrix."""
    checks = []
    viol = c.hermitian_violation()
    checks.append(
        SubCheck(
            "coefficient matrix Hermitian (J-anti-invariance)",
            viol is None,
            "" if viol is None else f"entry pair {viol}",
        )
    )
    res = del_(c.omega, c.triple.I)
    checks.append(SubCheck("del Omega = 0", res.is_zero(), "" if res.is_zero() else str(res)))
    if viol is None:
        checks.append(_positive_definite_check(c, valuation))
    return QuaternionReport("hkt", checks)


def _positive_definite_check(c: HKTCandidate, valuation):
    table = c.presentation.table
    mat = c.coefficients
    if all(_symbol_free(x) for row in mat for x in row):
        p, q, z = linear.hermitian_signature(mat, table)
        ok = q == 0 and z == 0
        return SubCheck("coefficient matrix positive definite", ok, f"signature {(p, q, z)}")
    if valuation is None:
        return SubCheck(
            "coefficient matrix positive definite",
            False,
            "matrix has symbols and no valuation was supplied",
        )
    num = np.array([[x.evaluate(valuation) for x in row] for row in mat], dtype=complex)
    evs = np.linalg.eigvalsh((num + num.conj().T) / 2)
    ok = bool(np.all(evs > 1e-9))
    return SubCheck(
        "coefficient matrix positive definite",
        ok,
        f"eigenvalues {[float(f'{v:.6g}') for v in evs]}",
    )


def check_quaternionic_balanced(c: HKTCandidate) -> QuaternionReport:
    """del(Omega^(q-1)) = 0 where q is the quaternionic dimension."""
    q = c.quaternionic_dim
    checks = []
    if q == 1:
        checks.append(SubCheck("del Omega^0 = 0", True, "trivial at quaternionic dimension 1"))
    else:
        res = del_(wedge_power(c.omega, q - 1), c.triple.I)
        checks.append(
            SubCheck(
                f"del Omega^{q - 1} = 0", res.is_zero(), "" if res.is_zero() else str(res)
            )
        )
    return QuaternionReport("quaternionic_balanced", checks)


@dataclass
class PrimitiveReport:
    exists: bool
    primitive: Form | None = None


def del_primitive(form: Form, J: AlmostComplexStructure) -> PrimitiveReport:
    """Solve del(x) = form exactly for x of bidegree (p-1, 0); the primitive
    witnesses del-exactness constructively."""
    model = J.model()
    table = form.presentation.table
    cform = model.to_complex(form)
    if cform.is_zero():
        return PrimitiveReport(True, Form.zero(form.presentation))
    degs = {model.bidegree_of_indices(idx) for idx in cform.terms}
    if len(degs) != 1:
        raise FormError(f"primitive solving needs a pure bidegree, got {sorted(degs)}")
    (p, q), = degs
    if q != 0 or p < 1:
        raise FormError(f"del-exactness applies to (p,0)-forms with p >= 1, got {(p, q)}")
    from itertools import combinations

    m = model.m
    unknowns = list(combinations(range(1, m + 1), p - 1))
    cols = []
    for idx in unknowns:
        mono = model.cpres.form([(1, idx)])
        dmono = model.cpres.d(mono)
        # keep only the (p,0) component of d
        kept = {
            jdx: cc
            for jdx, cc in dmono.terms.items()
            if model.bidegree_of_indices(jdx) == (p, 0)
        }
        cols.append(kept)
    rows_idx = sorted(
        set(cform.terms) | {jdx for col in cols for jdx in col},
        key=lambda u: (len(u), u),
    )
    mat = [[col.get(jdx, table.zero) for col in cols] for jdx in rows_idx]
    rhs = [cform.terms.get(jdx, table.zero) for jdx in rows_idx]
    sol, _free = linear.solve(mat, rhs, table)
    if sol is None:
        return PrimitiveReport(False)
    terms = {}
    for coeff, idx in zip(sol, unknowns):
        if not coeff.is_zero():
            terms[idx] = coeff
    candidate = model.to_real(Form(model.cpres, terms, _canonical=True))
    if not (del_(candidate, J) - form).is_zero():
        raise QuaternionError("primitive verification failed")
    return PrimitiveReport(True, candidate)


def hkt_obstruction(
    t: HypercomplexTriple,
    alpha: Form,
    beta: Form,
    a_matrix,
) -> Scalar:
    """The pairing coefficient of Omega~ ^ alpha ^ conj(beta) against
    beta ^ conj(beta), for the symbolic candidate built from the Hermitian
    matrix ``a_matrix`` over the half frame.

    Preconditions checked here: alpha is del-exact (a primitive is solved
    for; failure is an error), beta is d-closed, and the matrix is Hermitian.
    The result is linear in the matrix entries.
    """
    pres = t.presentation
    table = pres.table
    model = t.I.model()
    bg_a = bidegree(alpha, t.I)
    if not bg_a.is_pure(4, 0):
        raise FormError(f"alpha must be a (4,0)-form, got {bg_a.bidegrees()}")
    bg_b = bidegree(beta, t.I)
    if not bg_b.is_pure(model.m, 0):
        raise FormError(f"beta must be a ({model.m},0)-form")
    prim = del_primitive(alpha, t.I)
    if not prim.exists:
        raise QuaternionError("alpha is not del-exact: no primitive found")
    if not pres.d(beta).is_zero():
        raise QuaternionError("beta is not closed")
    frame, jbars = _half_frame(t)
    k = len(frame)
    a_matrix = [list(row) for row in a_matrix]
    if len(a_matrix) != k or any(len(r) != k for r in a_matrix):
        raise QuaternionError(f"the Hermitian matrix must be {k}x{k} over the half frame {frame}")
    rows = []
    for r in range(k):
        rows.append([x if isinstance(x, Scalar) else table.parse(x) if isinstance(x, str) else table.scalar(x) for x in a_matrix[r]])
    for r in range(k):
        for s in range(k):
            if not (rows[r][s] - rows[s][r].conjugate()).is_zero():
                raise QuaternionError("the coefficient matrix is not Hermitian")
    omega_t = Form.zero(pres)
    for r in range(k):
        for s in range(k):
            if rows[r][s].is_zero():
                continue
            omega_t = omega_t + rows[r][s] * wedge(model.eta(frame[r]), jbars[frame[s]])
    vol = wedge(beta, beta.conjugate())
    return top_coefficient(wedge(wedge(omega_t, alpha), beta.conjugate()), vol)
