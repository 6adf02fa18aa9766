"""Decision engine for the wedge decomposition of the (double) suspension
of a closed smooth connected orientable 4-manifold.

The input is the record of algebraic invariants (Betti data, torsion,
spin flag, secondary-operation action, the Sq^2/Bockstein case selector
and the degree-1 Postnikov-square triviality flag); the output is the
exact wedge of catalog complexes for the double suspension, the
desuspended wedge for the single suspension when the Postnikov square
permits it, and the intermediate homology-section stages.
"""

from __future__ import annotations

from dataclasses import dataclass

from .abelian import CyclicFactor, FgAbelianGroup, ZERO_GROUP
from .catalog import (
    ElementaryComplex,
    WedgeComplex,
    a_2r_eta2,
    a_tilde,
    bockstein_profile,
    chang_eta,
    chang_r,
    integral_homology,
    peterson_of_group,
    sphere,
    sq2_is_nonzero,
    theta_flag,
)

# Branch identifiers: spin cases split on the secondary operation, the
# non-spin/theta-trivial cases on the Sq^2/Bockstein selector A/B/C.
BRANCH_SPIN_THETA_TRIVIAL = "spin-theta-trivial"
BRANCH_SPIN_THETA_NONTRIVIAL = "spin-theta-nontrivial"
BRANCH_NONSPIN_CASE_A = "nonspin-case-a"
BRANCH_NONSPIN_CASE_B = "nonspin-case-b"
BRANCH_NONSPIN_CASE_C = "nonspin-case-c"

ALL_BRANCHES = (
    BRANCH_SPIN_THETA_TRIVIAL,
    BRANCH_SPIN_THETA_NONTRIVIAL,
    BRANCH_NONSPIN_CASE_A,
    BRANCH_NONSPIN_CASE_B,
    BRANCH_NONSPIN_CASE_C,
)


class InvalidInvariants(ValueError):
    """The invariant record violates its own consistency constraints."""


class OmittedCase(ValueError):
    """Non-spin with nontrivial secondary-operation action: the
    classification declines this case ("We omit the discussion")."""


THETA_TRIVIAL = "trivial"
THETA_NONTRIVIAL = "nontrivial"

SQ2_NOT_APPLICABLE = "not_applicable"
SQ2_CASE_A = "A"
SQ2_CASE_B = "B"
SQ2_CASE_C = "C"


@dataclass(frozen=True)
class ThetaAction:
    action: str  # "trivial" | "nontrivial"
    j0: int | None = None  # 1-based index into the sorted 2-exponents

    def __post_init__(self):
        if self.action not in (THETA_TRIVIAL, THETA_NONTRIVIAL):
            raise InvalidInvariants(f"unknown theta action {self.action!r}")
        if self.action == THETA_NONTRIVIAL and self.j0 is None:
            raise InvalidInvariants("nontrivial theta action needs an index j0")
        if self.action == THETA_TRIVIAL and self.j0 is not None:
            raise InvalidInvariants("trivial theta action carries no index")

    @property
    def nontrivial(self) -> bool:
        return self.action == THETA_NONTRIVIAL


@dataclass(frozen=True)
class Sq2Case:
    case: str  # "not_applicable" | "A" | "B" | "C"
    index: int | None = None  # j1 for case B, j2 for case C

    def __post_init__(self):
        if self.case not in (SQ2_NOT_APPLICABLE, SQ2_CASE_A, SQ2_CASE_B, SQ2_CASE_C):
            raise InvalidInvariants(f"unknown sq2 case {self.case!r}")
        needs_index = self.case in (SQ2_CASE_B, SQ2_CASE_C)
        if needs_index and self.index is None:
            raise InvalidInvariants(f"case {self.case} needs an index")
        if not needs_index and self.index is not None:
            raise InvalidInvariants(f"case {self.case} carries no index")


@dataclass(frozen=True)
class ManifoldInvariants:
    """Input record of the classifier; all entries are declared data.

    ``m`` and ``d`` are the free ranks of first and second homology,
    ``torsion`` the common torsion subgroup of both.  The index fields
    point into the ascending list of 2-primary exponents r_1 <= ... <= r_n.
    """

    m: int
    d: int
    torsion: FgAbelianGroup
    spin: bool
    theta: ThetaAction
    sq2_case: Sq2Case
    postnikov_trivial: bool
    label: str | None = None

    def __post_init__(self):
        if self.m < 0 or self.d < 0:
            raise InvalidInvariants("m and d must be non-negative")
        if not self.torsion.is_torsion:
            raise InvalidInvariants("torsion group must have free rank 0")
        n = len(self.two_exponents)
        if self.theta.nontrivial and not 1 <= self.theta.j0 <= max(n, 0):
            raise InvalidInvariants(f"theta index j0 must lie in 1..{n}")
        if self.spin and self.sq2_case.case != SQ2_NOT_APPLICABLE:
            raise InvalidInvariants("spin manifolds take sq2_case not_applicable")
        if not self.spin and self.sq2_case.case == SQ2_NOT_APPLICABLE:
            raise InvalidInvariants("non-spin manifolds need sq2_case A, B or C")
        if self.sq2_case.case == SQ2_CASE_A and not self.spin and self.d < 1:
            raise InvalidInvariants("case A consumes a free degree-4 class; d >= 1 required")
        if self.sq2_case.case in (SQ2_CASE_B, SQ2_CASE_C):
            if not 1 <= self.sq2_case.index <= n:
                raise InvalidInvariants(f"sq2 index must lie in 1..{n}")

    @property
    def two_exponents(self) -> tuple[int, ...]:
        return self.torsion.two_primary_exponents()

    def exponent_at(self, index: int) -> int:
        return self.two_exponents[index - 1]

    def homology(self, i: int) -> FgAbelianGroup:
        """Reduced integral homology of the manifold itself."""
        if i in (0,):
            return ZERO_GROUP
        if i == 4:
            return FgAbelianGroup.free(1)
        if i == 1:
            return FgAbelianGroup.free(self.m).direct_sum(self.torsion)
        if i == 2:
            return FgAbelianGroup.free(self.d).direct_sum(self.torsion)
        if i == 3:
            return FgAbelianGroup.free(self.m)
        return ZERO_GROUP

    # ----- JSON descriptor form ------------------------------------------

    def to_json_dict(self) -> dict:
        theta: dict = {"action": self.theta.action}
        if self.theta.j0 is not None:
            theta["j0"] = self.theta.j0
        sq2: dict = {"case": self.sq2_case.case}
        if self.sq2_case.index is not None:
            key = "j1" if self.sq2_case.case == SQ2_CASE_B else "j2"
            sq2[key] = self.sq2_case.index
        out = {
            "m": self.m,
            "d": self.d,
            "torsion": self.torsion.to_json_dict()["torsion"],
            "spin": self.spin,
            "theta": theta,
            "sq2_case": sq2,
            "postnikov_trivial": self.postnikov_trivial,
        }
        if self.label is not None:
            out["label"] = self.label
        return out

    @classmethod
    def from_json_dict(cls, data: dict) -> "ManifoldInvariants":
        torsion = FgAbelianGroup.from_json_dict({"torsion": data.get("torsion", [])})
        theta_data = data.get("theta", {"action": THETA_TRIVIAL})
        theta = ThetaAction(theta_data["action"], theta_data.get("j0"))
        sq2_data = data.get("sq2_case", {"case": SQ2_NOT_APPLICABLE})
        index = sq2_data.get("j1", sq2_data.get("j2"))
        sq2 = Sq2Case(sq2_data["case"], index)
        return cls(
            m=data["m"],
            d=data["d"],
            torsion=torsion,
            spin=data["spin"],
            theta=theta,
            sq2_case=sq2,
            postnikov_trivial=data["postnikov_trivial"],
            label=data.get("label"),
        )


@dataclass(frozen=True)
class Unresolved:
    """Placeholder for a suspension decomposition the hypotheses do not pin down."""

    reason: str


@dataclass(frozen=True)
class StageDecompositions:
    """The homology-section stages of the suspension pipeline.

    ``w4`` is the split form, available only when the Postnikov square is
    trivial; otherwise ``w4_symbolic`` carries the unsplit description
    with the symbolic cofiber remainder C_{g2}.
    """

    w3: WedgeComplex
    w4: WedgeComplex | None
    w4_symbolic: str | None
    sigma_w4: WedgeComplex

    def to_json_dict(self) -> dict:
        return {
            "W3": self.w3.notation,
            "W4": self.w4.notation if self.w4 is not None else {"symbolic": self.w4_symbolic},
            "SigmaW4": self.sigma_w4.notation,
        }


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str

    def __str__(self):
        status = "pass" if self.passed else "FAIL"
        return f"[{status}] {self.name}: {self.detail}"


@dataclass(frozen=True)
class DecompositionReport:
    invariants: ManifoldInvariants
    branch: str
    sigma2: WedgeComplex
    sigma: WedgeComplex | Unresolved
    stages: StageDecompositions
    notes: tuple[str, ...] = ()

    def to_json_dict(self) -> dict:
        if isinstance(self.sigma, Unresolved):
            sigma: object = {"unresolved": True, "note": self.sigma.reason}
        else:
            sigma = self.sigma.notation
        return {
            "label": self.invariants.label,
            "branch": self.branch,
            "sigma2": self.sigma2.notation,
            "sigma": sigma,
            "stages": self.stages.to_json_dict(),
            "notes": list(self.notes),
            "invariants": self.invariants.to_json_dict(),
        }

    def pretty(self) -> str:
        lines = []
        if self.invariants.label:
            lines.append(f"label:   {self.invariants.label}")
        lines.append(f"branch:  {self.branch}")
        lines.append(f"Sigma^2 M ~ {self.sigma2.notation}")
        if isinstance(self.sigma, Unresolved):
            lines.append(f"Sigma M   : unresolved ({self.sigma.reason})")
        else:
            lines.append(f"Sigma M   ~ {self.sigma.notation}")
        for note in self.notes:
            lines.append(f"note:    {note}")
        return "\n".join(lines)


def _sphere_wedge(n: int, count: int) -> WedgeComplex:
    return WedgeComplex(tuple(sphere(n) for _ in range(count)))


def stage_decompositions(inv: ManifoldInvariants) -> StageDecompositions:
    """The three pipeline stages W3, W4 and Sigma W4."""
    T = inv.torsion
    w3 = (
        _sphere_wedge(3, inv.d)
        .wedge(peterson_of_group(3, T))
        .wedge(peterson_of_group(4, T))
    )
    sigma_w4 = (
        _sphere_wedge(4, inv.d)
        .wedge(peterson_of_group(4, T))
        .wedge(peterson_of_group(5, T))
        .wedge(_sphere_wedge(5, inv.m))
    )
    if inv.postnikov_trivial or not T.two_primary_exponents():
        w4 = w3.wedge(_sphere_wedge(4, inv.m))
        return StageDecompositions(w3, w4, None, sigma_w4)
    known = _sphere_wedge(3, inv.d).wedge(peterson_of_group(4, T))
    symbolic = (f"{known.notation} v C_{{g2}}" if not known.is_point else "C_{g2}")
    return StageDecompositions(w3, None, symbolic, sigma_w4)


def _top_piece(inv: ManifoldInvariants) -> tuple[str, ElementaryComplex, CyclicFactor | None, int]:
    """Branch id, degree-6 top summand, quotiented factor, quotient slot (4 or 5)."""
    exps = inv.two_exponents
    if inv.spin:
        if not inv.theta.nontrivial:
            return BRANCH_SPIN_THETA_TRIVIAL, sphere(6), None, 0
        r = exps[inv.theta.j0 - 1]
        return BRANCH_SPIN_THETA_NONTRIVIAL, a_2r_eta2(3, r), CyclicFactor(2, r), 4
    if inv.theta.nontrivial:
        raise OmittedCase(
            "non-spin with nontrivial secondary-operation action on degree-1 "
            'cohomology: "We omit the discussion" of this case; no decomposition '
            "is emitted"
        )
    case = inv.sq2_case.case
    if case == SQ2_CASE_A:
        return BRANCH_NONSPIN_CASE_A, chang_eta(4), None, 0
    if case == SQ2_CASE_B:
        r = exps[inv.sq2_case.index - 1]
        return BRANCH_NONSPIN_CASE_B, chang_r(4, r), CyclicFactor(2, r), 5
    r = exps[inv.sq2_case.index - 1]
    return BRANCH_NONSPIN_CASE_C, a_tilde(3, r), CyclicFactor(2, r), 4


def classify_double_suspension(inv: ManifoldInvariants) -> DecompositionReport:
    """The exact wedge decomposition of the double suspension."""
    branch, top, removed, slot = _top_piece(inv)
    T = inv.torsion
    t4 = T.quotient_by_factor(removed) if slot == 4 else T
    t5 = T.quotient_by_factor(removed) if slot == 5 else T
    d4 = inv.d - 1 if branch == BRANCH_NONSPIN_CASE_A else inv.d
    sigma2 = (
        _sphere_wedge(3, inv.m)
        .wedge(_sphere_wedge(5, inv.m))
        .wedge(_sphere_wedge(4, d4))
        .wedge(peterson_of_group(4, t4))
        .wedge(peterson_of_group(5, t5))
        .wedge(WedgeComplex.of(top))
    )

    notes: list[str] = []
    if branch == BRANCH_NONSPIN_CASE_B:
        notes.append(
            "the index j1 is taken as declared input; the hypothesis clause "
            "mixing degree-2 and degree-4 classes is ambiguous in the source "
            "statement"
        )
    if branch == BRANCH_NONSPIN_CASE_C:
        notes.append("j2 is the minimum of the qualifying indices")

    sigma: WedgeComplex | Unresolved
    if inv.postnikov_trivial:
        sigma = sigma2.desuspend()
    elif not inv.two_exponents:
        sigma = sigma2.desuspend()
        notes.append(
            "postnikov_trivial was not set, but the 2-primary torsion is zero, "
            "which forces the degree-1 Postnikov square to vanish"
        )
    else:
        sigma = Unresolved(
            "the degree-1 Postnikov square is not declared trivial, so the "
            "double-suspension decomposition does not desuspend"
        )

    return DecompositionReport(
        invariants=inv,
        branch=branch,
        sigma2=sigma2,
        sigma=sigma,
        stages=stage_decompositions(inv),
        notes=tuple(notes),
    )


def classify_suspension(inv: ManifoldInvariants) -> WedgeComplex | Unresolved:
    """Decomposition of the single suspension, when it is pinned down."""
    return classify_double_suspension(inv).sigma


def validate_roundtrip(inv: ManifoldInvariants, report: DecompositionReport) -> list[CheckResult]:
    """Consistency audit of a report against its input invariants."""
    checks: list[CheckResult] = []

    ok = True
    detail = []
    for i in range(0, 8):
        expected = inv.homology(i - 2)
        actual = integral_homology(report.sigma2, i)
        if actual != expected:
            ok = False
            detail.append(f"H_{i} = {actual} != {expected}")
    checks.append(
        CheckResult(
            "homology",
            ok,
            "; ".join(detail) if detail else "H_i(Sigma^2 M) matches the shifted table",
        )
    )

    flag = theta_flag(report.sigma2)
    checks.append(
        CheckResult(
            "theta-flag",
            flag == inv.theta.nontrivial,
            f"secondary operation on the wedge is {'non' if flag else ''}trivial, "
            f"input says {'non' if inv.theta.nontrivial else ''}trivial",
        )
    )

    sq2 = sq2_is_nonzero(report.sigma2, 4)
    checks.append(
        CheckResult(
            "sq2-degree-4",
            sq2 == (not inv.spin),
            f"Sq^2 on H^4 of the wedge is {'non' if sq2 else ''}zero, "
            f"input is {'non-' if not inv.spin else ''}spin",
        )
    )

    expected_pairs = sorted(
        [(r, 3) for r in inv.two_exponents] + [(r, 4) for r in inv.two_exponents],
        key=lambda p: (p[1], p[0]),
    )
    actual_pairs = list(bockstein_profile(report.sigma2))
    checks.append(
        CheckResult(
            "bockstein-profile",
            actual_pairs == expected_pairs,
            f"profile {actual_pairs} vs torsion expectation {expected_pairs}",
        )
    )
    return checks
