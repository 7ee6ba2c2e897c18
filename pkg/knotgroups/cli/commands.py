"""Subcommand handlers: each returns a payload, its text rendering and a success flag."""
import logging
import random
from dataclasses import dataclass
from typing import Callable, Dict

from pydantic import BaseModel

from knotgroups.braidrep.braids import parse_braid
from knotgroups.braidrep.fixtures import fixture, parse_fixture_name
from knotgroups.braidrep.rewriting import rewriting_check
from knotgroups.braidrep.wada import W1, WadaKind, link_group
from knotgroups.config.loader import Config
from knotgroups.foxcalc.fox import fox_gradient
from knotgroups.foxcalc.kishino import kishino_pipeline
from knotgroups.foxcalc.metabelian import relator_annihilator
from knotgroups.freegroup.words import Alphabet, format_word, parse_word
from knotgroups.ncalg.basis import monomial_basis, representation_check
from knotgroups.ncalg.functor import series_letters, verify_relation
from knotgroups.ncalg.invariance import moves_invariance
from knotgroups.ncalg.series import free_series
from knotgroups.nilpotent.lcs import (
    g1_printed_relations, g2_printed_relations, holds_in_quotient, lcs_quotient,
)
from knotgroups.presentation.abelian import abelianization
from knotgroups.presentation.presentation import GroupPresentation, random_tietze_moves
from knotgroups.selftest.checks import run_checks
from knotgroups.validation.schemas import (
    AbelianPayload, AlgebraReportPayload, AlgebraSpecRequest, AnnihilatorPayload, CertificatePayload,
    CheckResultPayload, FoxPayload, KishinoPayload, LayerPayload, PresentationPayload,
    RelationCheckPayload, RelationFatePayload, RewriteCheckPayload, SelftestPayload,
    TietzeCheckPayload, TietzeReportPayload,
)

logger = logging.getLogger(__name__)


@dataclass
class CommandResult:
    payload: BaseModel
    text: str
    ok: bool = True


def _read_presentation(value: str) -> GroupPresentation:
    """JSON text, or @path to a file holding it."""
    if value.startswith('@'):
        with open(value[1:], 'r') as f:
            value = f.read()
    return PresentationPayload.model_validate_json(value).to_presentation()


def _fixture(args, config: Config) -> GroupPresentation:
    base, r = parse_fixture_name(args.fixture, getattr(args, 'r', None))
    if base == 'trefoil-g1' and r is None:
        r = config.default_r
    return fixture(base, r, config.relation_one, config.include_relation_one)


def resolve_presentation(args, config: Config) -> GroupPresentation:
    """The single input source of a command."""
    if getattr(args, 'fixture', None):
        return _fixture(args, config)
    if getattr(args, 'braid', None):
        if not args.strands:
            raise ValueError("--braid needs --strands")
        kind = WadaKind(args.kind, args.r or config.default_r) if args.kind == W1 else WadaKind(args.kind)
        return link_group(kind, parse_braid(args.braid, args.strands))
    if getattr(args, 'presentation', None):
        return _read_presentation(args.presentation)
    raise ValueError("No input: give --fixture, --braid or --presentation")


def _source_name(args) -> str:
    if getattr(args, 'fixture', None):
        return args.fixture
    if getattr(args, 'braid', None):
        return f"braid {args.braid} ({args.kind})"
    return 'presentation'


def _presentation_result(p: GroupPresentation) -> CommandResult:
    payload = PresentationPayload.from_presentation(p)
    return CommandResult(payload, str(p))


def cmd_present(args, config: Config) -> CommandResult:
    return _presentation_result(resolve_presentation(args, config))


def cmd_fixture(args, config: Config) -> CommandResult:
    args.fixture = args.name
    return _presentation_result(_fixture(args, config))


def cmd_abelianize(args, config: Config) -> CommandResult:
    structure = abelianization(resolve_presentation(args, config))
    payload = AbelianPayload(rank=structure.rank, torsion=list(structure.torsion), structure=str(structure))
    return CommandResult(payload, str(structure))


def cmd_annihilator(args, config: Config) -> CommandResult:
    p = resolve_presentation(args, config)
    if not 0 <= args.index < len(p.relators):
        raise ValueError(f"Relator index {args.index} out of range for {len(p.relators)} relators")
    poly = relator_annihilator(p, args.index)
    payload = AnnihilatorPayload(source=_source_name(args), polynomial=str(poly),
                                 normalized=str(poly.normalized()), factored=poly.format_factored())
    return CommandResult(payload, payload.factored)


def _printed_relations(args, p: GroupPresentation, config: Config) -> Dict[str, bool]:
    if not getattr(args, 'fixture', None):
        raise ValueError("--printed-relations needs --fixture trefoil-g1 or trefoil-g2")
    base, r = parse_fixture_name(args.fixture, args.r)
    if base == 'trefoil-g2':
        words = g2_printed_relations(p.alphabet)
    elif base == 'trefoil-g1':
        words = g1_printed_relations(p.alphabet, r or config.default_r)
    else:
        raise ValueError(f"No printed relations for {base}")
    return {name: holds_in_quotient(p, w, args.layer) for name, w in words.items()}


def cmd_lcs(args, config: Config) -> CommandResult:
    p = resolve_presentation(args, config)
    if p.rank > config.max_rank or args.layer > config.max_class:
        raise ValueError(f"Layer {args.layer} on {p.rank} generators exceeds the configured limits "
                         f"(class {config.max_class}, rank {config.max_rank})")
    layer = lcs_quotient(p, args.layer)
    payload = LayerPayload(k=layer.k, rank=layer.rank, torsion=layer.torsion, structure=str(layer),
                           basis=layer.basis, relationMatrix=layer.relation_matrix)
    lines = [str(layer)]
    if args.printed_relations:
        payload.relations = _printed_relations(args, p, config)
        lines.extend(f"{name}: {'holds' if holds else 'fails'}" for name, holds in payload.relations.items())
    return CommandResult(payload, '\n'.join(lines))


def cmd_fox(args, config: Config) -> CommandResult:
    labels = [v.strip() for v in args.vars.split(',') if v.strip()]
    alphabet = Alphabet.from_labels(labels)
    w = parse_word(args.word, alphabet)
    gradient = fox_gradient(w, args.convention)
    derivatives = {label: str(d) for label, d in zip(labels, gradient)}
    payload = FoxPayload(word=format_word(w), convention=args.convention, derivatives=derivatives)
    text = '\n'.join(f"d/d{label}: {d}" for label, d in derivatives.items())
    return CommandResult(payload, text)


def cmd_algebra(args, config: Config) -> CommandResult:
    request = AlgebraSpecRequest(letters=list(args.letters), ideal=args.ideal,
                                 commutative=args.commutative, truncate=args.truncate)
    spec = request.to_spec()
    if not args.check_relation:
        report = monomial_basis(spec, config.degree_cap)
        payload = AlgebraReportPayload(spec=spec.describe(), saturated=report.saturated,
                                       dimension=report.dimension, perDegree=list(report.per_degree),
                                       basis=report.words())
        dimension = report.dimension if report.saturated else f"> {len(report.monomials)}"
        text = f"{spec.describe()}: dimension {dimension}\nbasis: {' '.join(report.words())}"
        return CommandResult(payload, text)
    if not (args.fixture or args.presentation):
        raise ValueError("--check-relation needs --fixture or --presentation")
    p = resolve_presentation(args, config)
    check = verify_relation(p, spec)
    payload = RelationCheckPayload(spec=check.spec.describe(), holds=check.holds,
                                   residuals=check.residual_strings())
    lines = [f"{check.spec.describe()}: {'relation holds' if check.holds else 'relation fails'}"]
    lines.extend(f"relator {i}: {residual}" for i, residual in enumerate(payload.residuals))
    ok = check.holds
    if args.representation:
        payload.representation = representation_check(p, spec)
        lines.append(f"regular representation: {payload.representation}")
        ok = ok and all(payload.representation)
    return CommandResult(payload, '\n'.join(lines), ok)


def cmd_tietze_check(args, config: Config) -> CommandResult:
    p = resolve_presentation(args, config)
    truncate = args.truncate if args.truncate is not None else config.truncate
    rng = random.Random(args.seed if args.seed is not None else config.seed)
    moved, moves = random_tietze_moves(p, args.moves, rng)
    spec = free_series(series_letters(p.alphabet).values(), truncate)
    reports = moves_invariance(p, moves, spec)
    preserved = abelianization(moved) == abelianization(p)
    checks = [TietzeCheckPayload(move=r.move, checks=r.checks, notes=r.notes, holdsBefore=r.holds_before,
                                 holdsAfter=r.holds_after, consistent=r.consistent) for r in reports]
    consistent = preserved and all(c.consistent for c in checks)
    payload = TietzeReportPayload(truncate=truncate, moves=checks, abelianizationPreserved=preserved,
                                  consistent=consistent)
    lines = [f"{c.move}: {'consistent' if c.consistent else 'INCONSISTENT'}" for c in checks]
    lines.append(f"abelianization preserved: {preserved}")
    return CommandResult(payload, '\n'.join(lines), consistent)


def cmd_kishino(args, config: Config) -> CommandResult:
    report = kishino_pipeline(config.relation_one, config.include_relation_one)
    cert = report.certificate
    certificate = CertificatePayload(
        foxConvention=cert.fox_convention, foxDerivatives=cert.fox_derivatives,
        printedMatches=cert.printed_matches, clearedVector=cert.cleared_vector,
        minimalPolynomial=cert.minimal_polynomial, point=cert.point, evaluations=cert.evaluations,
        nonzeroChecks=cert.nonzero_checks, verdict=cert.verdict, conclusion=cert.conclusion)
    payload = KishinoPayload(
        abelianRows=report.abelian.rows, abelianization=str(report.abelian.structure),
        aEqualsCInverseCubed=report.abelian.a_equals_c_inverse_cubed, bEqualsC=report.abelian.b_equals_c,
        moduleResidual=str(report.module.residual), productsAgree=report.module.products_agree,
        quotientRelators=report.quotient.presentation.relation_strings(),
        fates=[RelationFatePayload(index=f.index, relator=f.relator, fate=f.fate) for f in report.quotient.fates],
        certificate=certificate, verified=report.verified)
    lines = [
        f"abelianization: {payload.abelianization} (A = C^-3: {payload.aEqualsCInverseCubed}, "
        f"B = C: {payload.bEqualsC})",
        f"module relation residual: {payload.moduleResidual}",
        f"quotient: {'; '.join(payload.quotientRelators)}",
    ]
    lines.extend(f"  relation {f.index}: {f.fate}" for f in payload.fates)
    lines.append(f"fox convention: {cert.fox_convention}")
    lines.extend(f"  d/d{name}: {value}" for name, value in cert.fox_derivatives.items())
    lines.append(f"cleared vector: ({', '.join(cert.cleared_vector)})")
    lines.append(f"common zero over Q[c]/({cert.minimal_polynomial}): "
                 + ', '.join(f"{k} = {v}" for k, v in cert.point.items()))
    lines.append(f"verdict: {cert.verdict}")
    lines.append(cert.conclusion)
    return CommandResult(payload, '\n'.join(lines), report.verified)


def cmd_selftest(args, config: Config) -> CommandResult:
    seed = args.seed if args.seed is not None else config.seed
    iterations = args.iterations if args.iterations is not None else config.iterations
    if iterations < 1:
        raise ValueError("--iterations must be positive")
    results = run_checks(seed, iterations, args.check)
    payload = SelftestPayload(
        seed=seed, iterations=iterations,
        results=[CheckResultPayload(name=r.name, passed=r.passed, trials=r.trials, detail=r.detail)
                 for r in results],
        passed=all(r.passed for r in results))
    lines = [f"{'ok  ' if r.passed else 'FAIL'} {r.name} ({r.trials} trials)"
             + (f": {r.detail}" if r.detail else '') for r in results]
    return CommandResult(payload, '\n'.join(lines), payload.passed)


def cmd_rewrite_check(args, config: Config) -> CommandResult:
    check = rewriting_check(args.family, args.r, corrected=not args.printed)
    payload = RewriteCheckPayload(family=check.family, relation=check.relation, substituted=check.substituted,
                                  fixtureRelator=check.fixture_relator, matches=check.matches)
    text = (f"{check.family}: {check.relation}\n"
            f"substituted: {check.substituted}\n"
            f"fixture relator: {check.fixture_relator}\n"
            f"{'matches' if check.matches else 'does not match'}")
    return CommandResult(payload, text, check.matches)


COMMANDS: Dict[str, Callable[..., CommandResult]] = {
    'present': cmd_present,
    'fixture': cmd_fixture,
    'abelianize': cmd_abelianize,
    'annihilator': cmd_annihilator,
    'lcs': cmd_lcs,
    'fox': cmd_fox,
    'algebra': cmd_algebra,
    'tietze-check': cmd_tietze_check,
    'kishino': cmd_kishino,
    'selftest': cmd_selftest,
    'rewrite-check': cmd_rewrite_check,
}
