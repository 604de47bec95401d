"""Hermitian metric predicates on invariant (1,1)-forms: Kahler, balanced,
pluriclosed, astheno-Kahler, k-pluriclosed and the conformally Kahler
equation, plus Bismut torsion, coframe Gram matrices with exact or numeric
signatures, and positivity testing for (p,p)-forms.

Every predicate is a vanishing statement evaluated in exact arithmetic; the
report carries the residual form on failure.  Positivity of (p,p)-forms is
only falsifiable here (sampling decomposable tuples with a fixed, seeded
generator) or certifiable syntactically through an explicit strongly
positive decomposition.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import linear
from .cealg import Form, wedge, wedge_power
from .complexops import AlmostComplexStructure, bidegree, dc, del_, delbar
from .scalars import Scalar


class MetricError(ValueError):
    pass


@dataclass
class PredicateReport:
    kind: str
    passed: bool
    residual: Form | None = None
    notes: dict = field(default_factory=dict)

    def __bool__(self):
        return self.passed


class HermitianCandidate:
    """A real (1,1)-form with respect to a named integrable structure."""

    def __init__(self, J: AlmostComplexStructure, omega: Form):
        self.J = J
        self.presentation = J.presentation
        if self.presentation.dim % 2:
            raise MetricError("odd-dimensional presentation")
        self.m = self.presentation.dim // 2
        if not (omega.conjugate() - omega).is_zero():
            raise MetricError("fundamental form candidate is not real")
        bg = bidegree(omega, J)
        if not bg.is_pure(1, 1):
            raise MetricError(f"fundamental form is not of pure bidegree (1,1): {bg.bidegrees()}")
        self.omega = omega

    def __repr__(self):
        return f"HermitianCandidate(m={self.m}, omega={self.omega})"


def is_kahler(c: HermitianCandidate) -> PredicateReport:
    res = c.presentation.d(c.omega)
    return PredicateReport("kahler", res.is_zero(), None if res.is_zero() else res)


def is_balanced(c: HermitianCandidate) -> PredicateReport:
    if c.m < 2:
        raise MetricError("balanced needs complex dimension >= 2")
    res = c.presentation.d(wedge_power(c.omega, c.m - 1))
    return PredicateReport("balanced", res.is_zero(), None if res.is_zero() else res)


def is_pluriclosed(c: HermitianCandidate) -> PredicateReport:
    res = del_(delbar(c.omega, c.J), c.J)
    return PredicateReport("pluriclosed", res.is_zero(), None if res.is_zero() else res)


def is_astheno(c: HermitianCandidate) -> PredicateReport:
    if c.m < 3:
        raise MetricError("astheno-Kahler needs complex dimension >= 3")
    res = del_(delbar(wedge_power(c.omega, c.m - 2), c.J), c.J)
    return PredicateReport("astheno", res.is_zero(), None if res.is_zero() else res)


def is_k_pluriclosed(c: HermitianCandidate, k: int) -> PredicateReport:
    """d d^c (omega^k) = 0, tested through the equivalent del(delbar(omega^k))."""
    if not 1 <= k <= c.m - 1:
        raise MetricError(f"k-pluriclosed needs 1 <= k <= {c.m - 1}, got {k}")
    res = del_(delbar(wedge_power(c.omega, k), c.J), c.J)
    return PredicateReport(
        "k_pluriclosed", res.is_zero(), None if res.is_zero() else res, notes={"k": k}
    )


@dataclass
class LeeFormSolution:
    theta: Form | None
    d_theta_zero: bool | None
    unique: bool | None

    @property
    def exists(self):
        return self.theta is not None


def lee_form(c: HermitianCandidate) -> LeeFormSolution:
    """Solve d(omega) = theta ^ omega exactly for a 1-form theta.

    Returns one solution (free coefficients set to zero) together with the
    d(theta) = 0 verdict and whether the solution is unique; non-existence is
    a value, not an error.
    """
    if c.m < 2:
        raise MetricError("the conformally Kahler equation needs complex dimension >= 2")
    pres = c.presentation
    table = pres.table
    n = pres.dim
    target = pres.d(c.omega)
    cols = [wedge(pres.generator(r), c.omega) for r in range(1, n + 1)]
    rows_idx = sorted(
        set(target.terms) | {idx for col in cols for idx in col.terms},
        key=lambda t: (len(t), t),
    )
    mat = [[col.terms.get(idx, table.zero) for col in cols] for idx in rows_idx]
    rhs = [target.terms.get(idx, table.zero) for idx in rows_idx]
    if not rows_idx:
        return LeeFormSolution(Form.zero(pres), True, False)
    sol, free = linear.solve(mat, rhs, table)
    if sol is None:
        return LeeFormSolution(None, None, None)
    theta = pres.form([(sol[r], (r + 1,)) for r in range(n) if not sol[r].is_zero()])
    return LeeFormSolution(theta, pres.d(theta).is_zero(), free == 0)


def bismut_torsion(c: HermitianCandidate):
    """The torsion 3-form -d^c(omega) together with its differential."""
    t = -dc(c.omega, c.J)
    return t, c.presentation.d(t)


def coframe_gram(c: HermitianCandidate):
    """The Hermitian matrix h with omega = i sum h_ab eta_a ^ conj(eta_b)."""
    model = c.J.model()
    com = model.to_complex(c.omega)
    table = c.presentation.table
    m = model.m
    minus_i = -table.i
    rows = []
    for a in range(1, m + 1):
        row = []
        for b in range(1, m + 1):
            coeff = com.terms.get(tuple(sorted((a, m + b))))
            if coeff is None:
                row.append(table.zero)
            else:
                # index pair (a, m+b) is already increasing, no reorder sign
                row.append(minus_i * coeff)
        rows.append(tuple(row))
    return tuple(rows)


@dataclass
class SignatureResult:
    matrix: tuple
    signature: tuple
    exact: bool
    degenerate: bool


def _symbol_free(s: Scalar) -> bool:
    return all(idx == 0 for part in (s.num, s.den) for mono in part for idx, _e in mono)


def gram_and_signature(candidate_or_matrix, valuation=None, table=None) -> SignatureResult:
    """Gram matrix plus signature (p, q, z).

    For a Hermitian candidate the matrix is its coframe Gram matrix; a raw
    square Scalar matrix (a bilinear form on the real basis) is used as is.
    Symbol-free matrices are diagonalized by exact congruence; otherwise
    eigenvalue signs are counted numerically at the valuation, flagging
    near-zero eigenvalues (|ev| < 1e-9) as degenerate.
    """
    if isinstance(candidate_or_matrix, HermitianCandidate):
        mat = coframe_gram(candidate_or_matrix)
        table = candidate_or_matrix.presentation.table
    else:
        mat = tuple(tuple(r) for r in candidate_or_matrix)
        if table is None:
            table = mat[0][0].table
    if all(_symbol_free(x) for row in mat for x in row):
        p, q, z = linear.hermitian_signature(mat, table)
        return SignatureResult(mat, (p, q, z), exact=True, degenerate=z > 0)
    if valuation is None:
        raise MetricError("matrix has symbols: a valuation is required for the signature")
    num = np.array(
        [[x.evaluate(valuation) for x in row] for row in mat], dtype=complex
    )
    if np.max(np.abs(num - num.conj().T)) > 1e-9 * max(1.0, np.max(np.abs(num))):
        raise MetricError("matrix is not Hermitian at the valuation")
    evs = np.linalg.eigvalsh((num + num.conj().T) / 2)
    p = int(np.sum(evs > 1e-9))
    q = int(np.sum(evs < -1e-9))
    z = len(evs) - p - q
    return SignatureResult(mat, (p, q, z), exact=False, degenerate=z > 0)


@dataclass
class PositivityVerdict:
    status: str  # "violation" | "no_violation"
    samples: int
    witness: list | None = None
    value: float | None = None

    @property
    def violated(self):
        return self.status == "violation"


def positivity_falsify(
    a: Form,
    J: AlmostComplexStructure,
    samples: int = 10000,
    seed: int = 0,
    valuation=None,
) -> PositivityVerdict:
    """Search for a decomposable tuple violating weak positivity of a real
    (p,p)-form.

    Draws ``samples`` pseudorandom p-tuples of unit (1,0) vectors from
    numpy's PCG64 generator seeded with ``seed`` and evaluates
    i^p a(v_1, conj v_1, ..., v_p, conj v_p).  Returns a certified violation
    (witness tuple and value) or an inconclusive "no_violation" verdict.
    """
    if not (a.conjugate() - a).is_zero():
        raise MetricError("positivity applies to real forms")
    model = J.model()
    ca = model.to_complex(a)
    if ca.is_zero():
        return PositivityVerdict("no_violation", 0)
    bidegs = {model.bidegree_of_indices(idx) for idx in ca.terms}
    if len(bidegs) != 1:
        raise MetricError(f"form is not of pure bidegree: {sorted(bidegs)}")
    (p, q), = bidegs
    if p != q:
        raise MetricError(f"positivity applies to (p,p)-forms, got {(p, q)}")
    valuation = valuation or {}
    m = model.m
    terms = []
    scale = 0.0
    for idx, cval in ca.terms.items():
        cnum = cval.evaluate(valuation)
        holo = [k - 1 for k in idx if k <= m]
        anti = [k - m - 1 for k in idx if k > m]
        terms.append((holo, anti, cnum))
        scale += abs(cnum)
    rng = np.random.default_rng(seed)
    # evaluation constant fixed so that i * eta ^ conj(eta) (and products of
    # such blocks) come out nonnegative on every decomposable tuple
    ipow = (-1j) ** p
    tol = 1e-9 * max(1.0, scale)
    for batch_start in range(0, samples, 512):
        count = min(512, samples - batch_start)
        vs = rng.normal(size=(count, p, m)) + 1j * rng.normal(size=(count, p, m))
        norms = np.linalg.norm(vs, axis=2, keepdims=True)
        norms[norms == 0] = 1.0
        vs = vs / norms
        values = np.zeros(count, dtype=complex)
        mats = np.zeros((count, 2 * p, 2 * p), dtype=complex)
        for holo, anti, cnum in terms:
            mats[:] = 0
            for rpos, aa in enumerate(holo):
                mats[:, rpos, 0::2] = vs[:, :, aa]
            for rpos, bb in enumerate(anti):
                mats[:, p + rpos, 1::2] = np.conj(vs[:, :, bb])
            values += cnum * np.linalg.det(mats)
        values = ipow * values
        real = values.real
        bad = np.where(real < -tol)[0]
        if bad.size:
            k = int(bad[0])
            witness = [list(map(complex, vs[k, t])) for t in range(p)]
            return PositivityVerdict(
                "violation", batch_start + k + 1, witness=witness, value=float(real[k])
            )
    return PositivityVerdict("no_violation", samples)


@dataclass
class CertificateReport:
    valid: bool
    residual: Form | None = None
    notes: dict = field(default_factory=dict)

    def __bool__(self):
        return self.valid


def strong_positivity_certificate(
    a: Form,
    J: AlmostComplexStructure,
    decomposition,
    valuation=None,
) -> CertificateReport:
    """Verify that ``a`` equals i^p sum_j c_j xi_j1 ^ conj(xi_j1) ^ ... with
    the stated coefficients, and that every coefficient is nonnegative
    (exactly if rational, else under the valuation)."""
    pres = a.presentation
    table = pres.table
    if not decomposition:
        raise MetricError("empty decomposition")
    p = len(decomposition[0][1])
    expanded = Form.zero(pres)
    for coeff, tuple_of_forms in decomposition:
        if isinstance(coeff, str):
            coeff = table.parse(coeff)
        elif isinstance(coeff, (int, Fraction)):
            coeff = table.scalar(coeff)
        if len(tuple_of_forms) != p:
            raise MetricError("decomposition tuples must share one length p")
        if coeff.is_rational():
            if coeff.as_rational() < 0:
                return CertificateReport(False, notes={"negative_coefficient": str(coeff)})
        else:
            if valuation is None:
                raise MetricError("symbolic coefficients need a valuation")
            v = coeff.evaluate(valuation)
            if abs(v.imag) > 1e-9 or v.real < -1e-12:
                return CertificateReport(False, notes={"negative_coefficient": str(coeff)})
        block = None
        for xi in tuple_of_forms:
            if not bidegree(xi, J).is_pure(1, 0):
                raise MetricError("decomposition factors must be (1,0)-forms")
            pair = wedge(xi, xi.conjugate())
            block = pair if block is None else wedge(block, pair)
        expanded = expanded + (coeff * (table.i**p)) * block
    residual = a - expanded
    if residual.is_zero():
        return CertificateReport(True, notes={"terms": len(decomposition), "p": p})
    return CertificateReport(False, residual=residual)
