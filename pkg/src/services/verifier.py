import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property, partial
from typing import Callable, NamedTuple, Union

from src.confg.config import settings
from src.core.bitset import is_subset
from src.core.semilattice import (
    Homomorphism, filters, order_ideals, is_distributive, irreducibility_equivalents, separation_witness,
)
from src.duality import axioms, extension, morphisms, relations, space
from src.duality.relations import MDSAlgebra, SMultirelation, CMultirelation, Multirelation
from src.duality.space import DSSpace
from src.errors import InvalidStructure, PreconditionError, UsageError
from src.repository.documents import from_algebra
from src.schemas import TheoremVerdict, VerificationReport, FuzzReport
from src.services import generator

logger = logging.getLogger(__name__)

SUITES = ("representation", "duality", "axioms", "canonicity", "boolean")

Outcome = Union[bool, None, tuple[Union[bool, None], str]]


@dataclass(frozen=True)
class Theorem:
    id: str
    suite: str
    target: str
    anchor: str
    check: Callable


class TheoremRegistry:
    """
    Theorem checks by target kind (``algebra``, ``space``, ``relation``) and suite.

    A check returns ``True``/``False``, ``None`` for skipped, or one of those with a witness string.
    """

    def __init__(self):
        self.theorems: list[Theorem] = []

    def theorem(self, id: str, suite: str, anchor: str, target: str = "algebra"):
        def register(check: Callable) -> Callable:
            if any(t.id == id and t.target == target for t in self.theorems):
                raise ValueError(f"theorem id {id!r} registered twice for {target}")
            self.theorems.append(Theorem(id, suite, target, anchor, check))
            return check
        return register

    def select(self, target: str, suite: str) -> list[Theorem]:
        if suite != "all" and suite not in SUITES:
            raise UsageError(f"unknown suite {suite!r}; expected one of all, {', '.join(SUITES)}")
        return [t for t in self.theorems if t.target == target and suite in ("all", t.suite)]


registry = TheoremRegistry()


@dataclass
class AlgebraContext:
    M: MDSAlgebra
    seed: int = 0

    @property
    def A(self):
        return self.M.algebra

    @property
    def D(self):
        return self.M.dual

    @property
    def X(self) -> DSSpace:
        return self.M.dual.space

    @cached_property
    def R(self) -> SMultirelation:
        return relations.relation_from_algebra_S(self.M)

    @cached_property
    def G(self) -> CMultirelation:
        return relations.relation_from_algebra_C(self.M)

    @cached_property
    def arrows(self) -> list[tuple[int, int, Homomorphism]]:
        rng = random.Random(self.seed)
        found = [(0, 0, Homomorphism.identity(self.A))]
        found += [(0, 0, generator.random_homomorphism(rng, self.A, self.A)) for _ in range(3)]
        return found


def _run(theorem: Theorem, context) -> TheoremVerdict:
    try:
        outcome = theorem.check(context)
    except PreconditionError as e:
        logger.warning("%s skipped: %s", theorem.id, e.detail)
        outcome = (None, e.detail)
    except InvalidStructure as e:
        outcome = (False, e.detail)
    witness = None
    if isinstance(outcome, tuple):
        outcome, witness = outcome
    status = "skipped" if outcome is None else "pass" if outcome else "fail"
    return TheoremVerdict(id=theorem.id, anchor=theorem.anchor, status=status, witness=witness)


def run_suite(context, target: str, suite: str, instance: str, timing: bool | None = None) -> VerificationReport:
    """
    Run every theorem of a suite on one instance

    :param context: an :class:`AlgebraContext`, a :class:`DSSpace` or a multirelation, matching ``target``
    :param target: ``algebra``, ``space`` or ``relation``
    :type target: str
    :param suite: a suite name or ``all``
    :type suite: str
    :param instance: instance id written into the report
    :type instance: str
    :param timing: record wall-clock seconds; defaults to ``settings.report_timing``
    :type timing: bool | None
    :return: the report, verdicts in registration order
    :rtype: VerificationReport
    """
    theorems = registry.select(target, suite)
    if timing is None:
        timing = settings.report_timing
    logger.info("verifying %s: %d theorems in suite %s", instance, len(theorems), suite)
    started = time.perf_counter()
    verdicts = [_run(t, context) for t in theorems]
    report = VerificationReport(instance=instance, suite=suite, verdicts=verdicts)
    if timing:
        report.timing = round(time.perf_counter() - started, 6)
    logger.info("%s: %d failed", instance, len(report.failures))
    return report


def verify_algebra(M: MDSAlgebra, suite: str = "all", instance: str = "algebra",
                   timing: bool | None = None) -> VerificationReport:
    return run_suite(AlgebraContext(M, settings.fuzz_seed), "algebra", suite, instance, timing)


def verify_space(X: DSSpace, suite: str = "all", instance: str = "space",
                 timing: bool | None = None) -> VerificationReport:
    return run_suite(X, "space", suite, instance, timing)


def verify_relation(rel: Multirelation, suite: str = "all", instance: str = "relation",
                    timing: bool | None = None) -> VerificationReport:
    return run_suite(rel, "relation", suite, instance, timing)


# representation


@registry.theorem("thm.distributive", "representation", "the semilattice is distributive")
def check_distributive(ctx: AlgebraContext) -> Outcome:
    verdict = is_distributive(ctx.A)
    if verdict.holds:
        return True
    a, b, c = (ctx.A.names[i] for i in verdict.witness)
    return False, f"{a}∧{b} <= {c} does not split"


@registry.theorem("thm.separation", "representation",
                  "a filter disjoint from an order ideal extends to an irreducible filter missing the ideal")
def check_separation(ctx: AlgebraContext) -> Outcome:
    A = ctx.A
    for F in filters(A):
        for I in order_ideals(A, include_empty=False):
            if F & I:
                continue
            try:
                separation_witness(A, F, I)
            except PreconditionError:
                return False, f"F={A.label(F)} I={A.label(I)}"
    return True


@registry.theorem("thm.irreducible", "representation",
                  "irreducible, prime-like separating and complement-is-ideal filters coincide")
def check_irreducible(ctx: AlgebraContext) -> Outcome:
    A = ctx.A
    for F in filters(A):
        if F == A.universe:
            continue
        report = irreducibility_equivalents(A, F)
        if not report.agree:
            return False, f"{A.label(F)}: {report}"
    return True


@registry.theorem("thm.representation", "representation",
                  "β is an isomorphism onto D(X(A)) and β(ma) = m_{R_m}(β(a))")
def check_representation(ctx: AlgebraContext) -> Outcome:
    return relations.representation_holds(ctx.M)


@registry.theorem("thm.filters_closed", "representation",
                  "filters and closed sets of the dual are dually isomorphic")
def check_filters_closed(ctx: AlgebraContext) -> Outcome:
    return space.filter_closed_bijection(ctx.D)


@registry.theorem("thm.ideals_saturated", "representation",
                  "nonempty order ideals and special saturated sets are dually isomorphic via α and I_A")
def check_ideals_saturated(ctx: AlgebraContext) -> Outcome:
    return space.ideal_saturated_bijection(ctx.D)


@registry.theorem("ideal.empty_collapse", "representation",
                  "the empty ideal and (0] have the same saturated set α(∅) = α((0]) = X(A)")
def check_empty_collapse(ctx: AlgebraContext) -> Outcome:
    if not settings.admit_empty_ideal:
        return None, "the empty ideal is not admitted"
    return space.empty_ideal_collapse(ctx.D)


@registry.theorem("thm.saturated_closed", "representation",
                  "F_Y ∩ I_A(Z) = ∅ iff Y ∩ Z ≠ ∅ for nonempty closed Y and special saturated Z")
def check_saturated_closed(ctx: AlgebraContext) -> Outcome:
    X = ctx.X
    for Y in X.C:
        for Z in X.S:
            algebraic, topological = space.sat_closed_disjointness(ctx.D, Y, Z)
            if algebraic != topological:
                return False, f"Y={X.label(Y)} Z={X.label(Z)}"
    return True


def _space_sober(X: DSSpace) -> Outcome:
    report = space.sobriety_equivalents(X)
    return report.sober and report.t0_and_directed_meets, str(report)


def _space_saturated_oracle(X: DSSpace) -> Outcome:
    return space.saturated_by_families(X) == set(X.S)


@registry.theorem("space.sober", "representation",
                  "the dual is sober, and sobriety matches the dually directed characterization")
def check_sober(ctx: AlgebraContext) -> Outcome:
    return _space_sober(ctx.X)


@registry.theorem("space.saturated_oracle", "representation",
                  "special saturated sets equal the literal intersections of dually directed families")
def check_saturated_oracle(ctx: AlgebraContext) -> Outcome:
    return _space_saturated_oracle(ctx.X)


@registry.theorem("space.h_x", "representation",
                  "H_X sends D(X) onto β-images and preserves disjointness from saturated sets")
def check_h_x(ctx: AlgebraContext) -> Outcome:
    return space.h_x_remark_holds(ctx.X)


@registry.theorem("ext.completion", "representation", "Up(X(A)) is a dense and compact completion of A")
def check_completion(ctx: AlgebraContext) -> Outcome:
    report = extension.completion_report(extension.UpsetLattice(ctx.D))
    return report.dense and report.compact, str(report)


@registry.theorem("ext.closed_open", "representation",
                  "closed elements are the closed sets and open elements the complements of saturated sets")
def check_closed_open(ctx: AlgebraContext) -> Outcome:
    L = extension.UpsetLattice(ctx.D)
    X = ctx.X
    opened = {X.universe & ~Z for Z in X.S}
    return extension.closed_elements(L) == set(X.K) and extension.open_elements(L) == opened


@registry.theorem("ext.primes", "representation",
                  "completely join primes are the [P) and completely meet primes the (P]^c")
def check_primes(ctx: AlgebraContext) -> Outcome:
    L = extension.UpsetLattice(ctx.D)
    joins, meets = extension.prime_formulas(L)
    return extension.j_infinity(L) == joins and extension.m_infinity(L) == meets


@registry.theorem("ext.sigma_pi", "representation",
                  "m^σ and m^π extend m, m^σ <= m^π with equality on closed and open elements")
def check_sigma_pi(ctx: AlgebraContext) -> Outcome:
    M = ctx.M
    if not extension.extensions_agree_on_algebra(M):
        return False, "extensions differ from β(ma) on β(a)"
    if not extension.sigma_below_pi(M):
        return False, "m^σ is not below m^π"
    if not extension.extensions_preserve_kinds(M):
        return False, "an extension leaves its family"
    monotone = all(extension.extension_operator(M, kind).is_monotone() for kind in ("sigma", "pi"))
    return monotone, None if monotone else "an extension is not monotone"


# duality


@registry.theorem("rel.galois", "duality", "R_m(P) = ψ(G_m(P)) and G_m(P) = φ(R_m(P))")
def check_galois(ctx: AlgebraContext) -> Outcome:
    return relations.galois_closed_check(ctx.M)


@registry.theorem("rel.monotonic_space", "duality",
                  "R_m and G_m satisfy the four conditions of a monotonic DS-space")
def check_monotonic_space(ctx: AlgebraContext) -> Outcome:
    for verdict in (relations.is_S_monotonic_space(ctx.X, ctx.R), relations.is_C_monotonic_space(ctx.X, ctx.G)):
        if not verdict:
            return False, f"condition {verdict.failed_condition}: {verdict.witness}"
    return True


@registry.theorem("rel.interdefinable", "duality", "G_{R_m} = G_m, R_{G_m} = R_m and m_R = 𝐦_{G_R} on D(X)")
def check_interdefinable(ctx: AlgebraContext) -> Outcome:
    X = ctx.X
    g = relations.g_from_r(X, ctx.R)
    if g != ctx.G or relations.r_from_g(X, ctx.G) != ctx.R:
        return False, "round trip changed a relation"
    return all(relations.m_R(ctx.R, U) == relations.m_G(g, U) for U in X.D)


@registry.theorem("thm.equivalent", "duality",
                  "the intersection, reflection and union characterizations of R agree")
def check_equivalent(ctx: AlgebraContext) -> Outcome:
    report = relations.equivalent_conditions(ctx.X, ctx.R)
    return all(report), str(report)


@registry.theorem("thm.equivalent.mutants", "duality",
                  "on corrupted relations the three characterizations fail together or m_R leaves D(X)")
def check_equivalent_mutants(ctx: AlgebraContext) -> Outcome:
    rng = random.Random(ctx.seed)
    X = ctx.X
    checked = 0
    for _ in range(16):
        mutant = relations.mutate_relation(ctx.R, rng)
        if mutant is None:
            continue
        checked += 1
        try:
            report = relations.equivalent_conditions(X, mutant)
        except PreconditionError:
            continue
        if any(report):
            return False, f"mutant {mutant.pairs()} gives {report}"
    if not checked:
        return None, "no invalid mutant found"
    return True


@registry.theorem("rel.r_upset", "duality", "each R_m(P) is an upset of S(X)")
def check_r_upset(ctx: AlgebraContext) -> Outcome:
    return relations.is_r_upset(ctx.X, ctx.R)


@registry.theorem("rel.frame_laws", "duality", "R_m shrinks and G_m grows along the order")
def check_frame_laws(ctx: AlgebraContext) -> Outcome:
    return relations.frame_laws(ctx.X, ctx.R, ctx.G)


@registry.theorem("rel.dual_hilbert", "duality", "R_m and G_m are intersections over the β-images")
def check_dual_hilbert(ctx: AlgebraContext) -> Outcome:
    return relations.dual_hilbert_identities(ctx.M)


@registry.theorem("rel.ideal_image", "duality", "I_A(m_{R_m}(α(I)^c)^c) = (m(I)]")
def check_ideal_image(ctx: AlgebraContext) -> Outcome:
    return relations.ideal_image_identity(ctx.M)


@registry.theorem("rel.filter_image", "duality", "F_{𝐦_{G_m}(F̂)} = [m(F))")
def check_filter_image(ctx: AlgebraContext) -> Outcome:
    return relations.filter_image_identity(ctx.M)


@registry.theorem("thm.hx_monotonic", "duality", "H_X is an isomorphism onto the dual of ⟨D(X), m_R⟩")
def check_hx_monotonic(ctx: AlgebraContext) -> Outcome:
    return morphisms.h_x_monotonic_check(ctx.X, ctx.R)


@registry.theorem("rel.frames", "duality", "β embeds the algebra into the frame algebras of R_m and G_m on Up(X)")
def check_frames(ctx: AlgebraContext) -> Outcome:
    for kind in ("S", "C"):
        holds, witness = relations.frame_representation(ctx.M, kind)
        if not holds:
            return False, f"{kind}-frame: {witness}"
    return True


@registry.theorem("morph.dual_equivalence", "duality",
                  "algebras with homomorphisms and spaces with meet-relations are dually equivalent")
def check_dual_equivalence(ctx: AlgebraContext) -> Outcome:
    report = morphisms.dual_equivalence_check([ctx.M], ctx.arrows)
    failed = [name for name, ok in report._asdict().items() if not ok]
    return report.holds, ", ".join(failed) or None


@registry.theorem("morph.inverse_image", "duality", "S⁻¹[U^c] = h_S(U)^c is special saturated")
def check_inverse_image(ctx: AlgebraContext) -> Outcome:
    return all(morphisms.inverse_image_identity(morphisms.s_h(h)) for _, _, h in ctx.arrows)


@registry.theorem("morph.order_monotonic", "duality", "the order of the dual is a monotonic meet-relation")
def check_order_monotonic(ctx: AlgebraContext) -> Outcome:
    verdict = morphisms.is_monotonic_meet_relation(morphisms.identity_relation(ctx.X), ctx.R, ctx.R)
    return verdict.relational and verdict.agree


# axioms


def _axiom(index: int) -> Callable[[AlgebraContext], Outcome]:
    def check(ctx: AlgebraContext) -> Outcome:
        verdict = axioms.axiom_report(ctx.M)[index]
        return verdict.agree, (f"algebraic={verdict.algebraic} r_side={verdict.r_side} "
                               f"g_side={verdict.g_side}")
    return check


for _index, (_id, _name) in enumerate([("axiom.m1", "m1=1"), ("axiom.m0", "m0=0"),
                                       ("axiom.t", "ma<=a"), ("axiom.t_converse", "a<=ma")]):
    registry.theorem(_id, "axioms", f"{_name} iff its R_m and G_m characterizations")(_axiom(_index))


@registry.theorem("axiom.four", "axioms",
                  "ma <= m²a iff R_m transitive iff G_m weakly dense, and dually for m²a <= ma")
def check_four(ctx: AlgebraContext) -> Outcome:
    report = axioms.four_axioms_check(ctx.M)
    return report.agree, str(report)


@registry.theorem("axiom.ideal_bridge", "axioms", "(P, α(I)) ∈ R_m² iff I ⊆ {a : m²a ∉ P}")
def check_ideal_bridge(ctx: AlgebraContext) -> Outcome:
    return axioms.ideal_lemma_bridge(ctx.M)


@registry.theorem("axiom.g_squared_bridge", "axioms", "(P, F̂) ∈ G_m² iff F ⊆ {a : m²a ∈ P}")
def check_g_squared_bridge(ctx: AlgebraContext) -> Outcome:
    return axioms.g_squared_bridge(ctx.M)


@registry.theorem("modal.normal", "axioms", "m is modal iff the dual monotonic space is normal")
def check_modal_normal(ctx: AlgebraContext) -> Outcome:
    modal = axioms.is_modal(ctx.M)
    normal = axioms.is_normal_space(ctx.X, ctx.R)
    return modal == normal, f"modal={modal} normal={normal}"


@registry.theorem("modal.translation", "axioms", "m_R = m_{S_R}, R = R_{S_R} and S = S_{R_S} for normal R")
def check_modal_translation(ctx: AlgebraContext) -> Outcome:
    if not axioms.is_modal(ctx.M):
        return None, "operator is not modal"
    report = axioms.normal_translation_check(ctx.X, ctx.R)
    return report.holds, str(report)


@registry.theorem("modal.meet_relation", "axioms", "m_S = m_{R_S} on every upset")
def check_modal_meet_relation(ctx: AlgebraContext) -> Outcome:
    if not axioms.is_modal(ctx.M):
        return None, "operator is not modal"
    return axioms.meet_relation_triviality(axioms.s_from_r(ctx.X, ctx.R))


@registry.theorem("modal.point_relation", "axioms",
                  "□^π((Q]^c) ⊆ (P]^c iff □⁻¹(P) ⊆ Q, and this relation is S_{R_□}")
def check_point_relation(ctx: AlgebraContext) -> Outcome:
    verdict = axioms.gehrke_relation_check(ctx.M)
    return verdict.holds, str(verdict)


# canonicity


def _status(value: str) -> Outcome:
    return {"pass": True, "fail": False, "skipped": None}[value]


@registry.theorem("canon.pi_diamond_four", "canonicity", "m²a <= ma gives m_{R_m}² <= m_{R_m} on all upsets")
def check_pi_canonicity(ctx: AlgebraContext) -> Outcome:
    return _status(axioms.canonicity_check(ctx.M).pi_diamond_four)


@registry.theorem("canon.sigma_box_four", "canonicity", "ma <= m²a gives 𝐦_{G_m} <= 𝐦_{G_m}² on all upsets")
def check_sigma_canonicity(ctx: AlgebraContext) -> Outcome:
    return _status(axioms.canonicity_check(ctx.M).sigma_box_four)


# boolean


@registry.theorem("boolean.duality", "boolean", "G_◇ = R_□ and G_□ = R_◇ on a Boolean algebra")
def check_boolean(ctx: AlgebraContext) -> Outcome:
    if not axioms.is_boolean(ctx.A):
        return None, "semilattice is not Boolean"
    report = axioms.boolean_duality_check(axioms.boolean_from_algebra(ctx.M))
    return report.holds, str(report)


# spaces and relations given directly


@registry.theorem("space.sober", "representation",
                  "the space is sober, and sobriety matches the dually directed characterization", target="space")
def check_space_sober(X: DSSpace) -> Outcome:
    return _space_sober(X)


@registry.theorem("space.saturated_oracle", "representation",
                  "special saturated sets equal the literal intersections of dually directed families",
                  target="space")
def check_space_saturated_oracle(X: DSSpace) -> Outcome:
    return _space_saturated_oracle(X)


@registry.theorem("space.h_x", "representation",
                  "H_X sends D(X) onto β-images and preserves disjointness from saturated sets", target="space")
def check_space_h_x(X: DSSpace) -> Outcome:
    return space.h_x_remark_holds(X)


@registry.theorem("rel.monotonic_space", "duality", "the relation satisfies the monotonic DS-space conditions",
                  target="relation")
def check_relation_space(rel: Multirelation) -> Outcome:
    if isinstance(rel, CMultirelation):
        verdict = relations.is_C_monotonic_space(rel.space, rel)
    else:
        verdict = relations.is_S_monotonic_space(rel.space, rel)
    if verdict:
        return True
    return False, f"condition {verdict.failed_condition}: {verdict.witness}"


@registry.theorem("thm.equivalent", "duality",
                  "the intersection, reflection and union characterizations of R agree", target="relation")
def check_relation_equivalent(rel: Multirelation) -> Outcome:
    if isinstance(rel, CMultirelation):
        return None, "characterizations apply to S-relations"
    report = relations.equivalent_conditions(rel.space, rel)
    return report.agree, str(report)


@registry.theorem("rel.interdefinable", "duality", "translating to the other side and back is the identity",
                  target="relation")
def check_relation_interdefinable(rel: Multirelation) -> Outcome:
    X = rel.space
    if isinstance(rel, CMultirelation):
        return relations.g_from_r(X, relations.r_from_g(X, rel)) == rel
    return relations.r_from_g(X, relations.g_from_r(X, rel)) == rel


@registry.theorem("thm.hx_monotonic", "duality", "H_X is an isomorphism onto the dual of ⟨D(X), m_R⟩",
                  target="relation")
def check_relation_hx(rel: Multirelation) -> Outcome:
    if isinstance(rel, CMultirelation):
        return None, "H_X check applies to S-relations"
    if not relations.is_S_monotonic_space(rel.space, rel):
        return None, "relation does not make an S-monotonic space"
    return morphisms.h_x_monotonic_check(rel.space, rel)


# fuzzing


def _verify_instance(item: tuple[str, MDSAlgebra], suite: str = "all") -> VerificationReport:
    instance, M = item
    return verify_algebra(M, suite, instance, timing=False)


def _verify_items(items: list[tuple[str, MDSAlgebra]], suite: str, workers: int) -> list[VerificationReport]:
    check = partial(_verify_instance, suite=suite)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            return list(executor.map(check, items))
    return [check(item) for item in items]


def _still_fails(M: MDSAlgebra) -> bool:
    return not verify_algebra(M, "all", "shrink", timing=False).passed


def fuzz(seed: int | None = None, count: int | None = None, max_size: int | None = None,
         workers: int | None = None, timing: bool | None = None) -> FuzzReport:
    """
    Verify a deterministic stream of random instances with every suite and shrink the failures

    :param seed: stream seed; defaults to ``settings.fuzz_seed``
    :type seed: int | None
    :param count: number of instances; defaults to ``settings.fuzz_count``
    :type count: int | None
    :param max_size: largest carrier size; defaults to ``settings.fuzz_max_size``
    :type max_size: int | None
    :param workers: worker processes; defaults to ``settings.workers``
    :type workers: int | None
    :param timing: record wall-clock seconds; defaults to ``settings.report_timing``
    :type timing: bool | None
    :return: reports in stream order, plus the shrunk counterexamples
    :rtype: FuzzReport
    """
    seed = settings.fuzz_seed if seed is None else seed
    count = settings.fuzz_count if count is None else count
    max_size = settings.fuzz_max_size if max_size is None else max_size
    workers = settings.workers if workers is None else workers
    timing = settings.report_timing if timing is None else timing
    started = time.perf_counter()
    items = list(generator.instance_stream(seed, count, max_size))
    reports = _verify_items(items, "all", workers)
    counterexamples = []
    for (instance, M), report in zip(items, reports):
        if not report.passed:
            logger.info("%s failed %s; shrinking", instance, [v.id for v in report.failures])
            counterexamples.append(from_algebra(generator.shrink(M, _still_fails), name=instance))
    logger.info("fuzzed %d instances with seed %d: %d failed", count, seed, len(counterexamples))
    result = FuzzReport(seed=seed, count=count, max_size=max_size, reports=reports, counterexamples=counterexamples)
    if timing:
        result.timing = round(time.perf_counter() - started, 6)
    return result


def sweep_catalog(seed: int | None = None, operators: int = 40, max_size: int = 6, suite: str = "representation",
                  workers: int | None = None, timing: bool | None = None) -> FuzzReport:
    """
    Verify every catalog semilattice, each with a batch of random operators; failures are kept as they are

    :param seed: operator seed; defaults to ``settings.fuzz_seed``
    :type seed: int | None
    :param operators: operators per semilattice
    :type operators: int
    :param max_size: largest carrier size
    :type max_size: int
    :param suite: suite name or ``all``
    :type suite: str
    :param workers: worker processes; defaults to ``settings.workers``
    :type workers: int | None
    :param timing: record wall-clock seconds; defaults to ``settings.report_timing``
    :type timing: bool | None
    :return: one report per instance in catalog order
    :rtype: FuzzReport
    """
    registry.select("algebra", suite)
    seed = settings.fuzz_seed if seed is None else seed
    workers = settings.workers if workers is None else workers
    timing = settings.report_timing if timing is None else timing
    started = time.perf_counter()
    items = list(generator.catalog_stream(seed, operators, max_size))
    reports = _verify_items(items, suite, workers)
    counterexamples = [from_algebra(M, name=instance)
                       for (instance, M), report in zip(items, reports) if not report.passed]
    logger.info("swept %d catalog instances with suite %s: %d failed", len(items), suite, len(counterexamples))
    result = FuzzReport(source="catalog", seed=seed, count=len(items), max_size=max_size, reports=reports,
                        counterexamples=counterexamples)
    if timing:
        result.timing = round(time.perf_counter() - started, 6)
    return result


def render_text(report: VerificationReport) -> str:
    """
    Human readable report, one line per verdict
    """
    counts = {status: sum(v.status == status for v in report.verdicts) for status in ("pass", "fail", "skipped")}
    lines = [f"{report.instance} [{report.suite}]: {counts['pass']} passed, {counts['fail']} failed, "
             f"{counts['skipped']} skipped"]
    for v in report.verdicts:
        line = f"  {v.status.upper():7} {v.id}  {v.anchor}"
        if v.witness and v.status != "pass":
            line += f"  ({v.witness})"
        lines.append(line)
    if report.timing is not None:
        lines.append(f"  time {report.timing:.3f}s")
    return "\n".join(lines)


def render_fuzz_text(report: FuzzReport) -> str:
    failed = [r for r in report.reports if not r.passed]
    lines = [f"{report.source} seed={report.seed} count={report.count} max_size={report.max_size}: "
             f"{len(report.reports) - len(failed)} passed, {len(failed)} failed"]
    lines += [render_text(r) for r in failed]
    if report.timing is not None:
        lines.append(f"time {report.timing:.3f}s")
    return "\n".join(lines)
