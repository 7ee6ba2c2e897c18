"""Argument parser for the knotgroups command line."""
import argparse

from knotgroups.braidrep.fixtures import FIXTURE_NAMES
from knotgroups.braidrep.wada import W1, W2, W3
from knotgroups.config.loader import LOG_LEVELS
from knotgroups.foxcalc.fox import CONVENTIONS
from knotgroups.selftest.checks import CHECKS


def _input_parent() -> argparse.ArgumentParser:
    """Exactly one of --fixture, --braid, --presentation."""
    parent = argparse.ArgumentParser(add_help=False)
    source = parent.add_argument_group('input')
    group = source.add_mutually_exclusive_group(required=True)
    group.add_argument('--fixture', help=f"embedded presentation ({', '.join(FIXTURE_NAMES)})")
    group.add_argument('--braid', help="virtual braid word, e.g. 's1 s1 v1'")
    group.add_argument('--presentation', help='presentation JSON, or @path to a JSON file')
    source.add_argument('--r', type=int, help='parameter of trefoil-g1 and of W1')
    source.add_argument('--strands', type=int, help='strand count for --braid')
    source.add_argument('--kind', choices=(W1, W2, W3), default=W3, help='Wada representation for --braid')
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='knotgroups',
        description='Group-theoretic invariants of virtual knots: presentations, Fox calculus, '
                    'lower central series and noncommutative algebra checks.')
    parser.add_argument('--json', action='store_true', help='emit JSON instead of text')
    parser.add_argument('--truncate', type=int, help='series truncation degree (overrides algebra.truncate)')
    parser.add_argument('--seed', type=int, help='seed for randomized checks (overrides selftest.seed)')
    parser.add_argument('--log-level', choices=LOG_LEVELS, type=str.upper, help='logging level on stderr')
    parser.add_argument('--config', help='YAML configuration file (default: $KNOTGROUPS_CONFIG or config.yaml)')

    sub = parser.add_subparsers(dest='command', required=True, metavar='command')
    source = _input_parent()

    sub.add_parser('present', parents=[source], help='link group presentation of a braid or input')

    fixture = sub.add_parser('fixture', help='print an embedded presentation')
    fixture.add_argument('name', help=f"one of {', '.join(FIXTURE_NAMES)}; trefoil-g1(2) is accepted")
    fixture.add_argument('--r', type=int, help='parameter of trefoil-g1')

    sub.add_parser('abelianize', parents=[source], help='abelianization via Smith normal form')

    annihilator = sub.add_parser('annihilator', parents=[source],
                                 help='Laurent polynomial annihilating [x,y] for a rank-2 relator')
    annihilator.add_argument('--index', type=int, default=0, help='relator index')

    lcs = sub.add_parser('lcs', parents=[source], help='lower central series layer')
    lcs.add_argument('--class', dest='layer', type=int, required=True, help='layer k of γ_k/γ_{k+1}')
    lcs.add_argument('--printed-relations', action='store_true',
                     help='also decide the printed relations of trefoil-g1/trefoil-g2 in G/γ_{k+1}')

    fox = sub.add_parser('fox', help='Fox derivatives of a word')
    fox.add_argument('--word', required=True, help='word such as c*d*c^2*d^-1')
    fox.add_argument('--vars', required=True, help='comma-separated generator labels')
    fox.add_argument('--convention', choices=CONVENTIONS, default=CONVENTIONS[0])

    algebra = sub.add_parser('algebra', help='monomial algebra basis and relation checks')
    algebra.add_argument('--ideal', default='XX,YY', help='comma-separated forbidden words')
    algebra.add_argument('--letters', default='XY', help='algebra letters, one character each')
    algebra.add_argument('--commutative', action='store_true')
    algebra.add_argument('--check-relation', action='store_true',
                         help='check that the input relators vanish (needs an input source)')
    algebra.add_argument('--representation', action='store_true',
                         help='also check relators in the regular representation')
    relation_source = algebra.add_mutually_exclusive_group()
    relation_source.add_argument('--fixture')
    relation_source.add_argument('--presentation')
    algebra.add_argument('--r', type=int)

    tietze = sub.add_parser('tietze-check', parents=[source],
                            help='random Tietze moves against the relator ideal')
    tietze.add_argument('--moves', type=int, default=3, help='number of random moves')

    sub.add_parser('kishino', help='non-freeness certificate for the Kishino knot group')

    selftest = sub.add_parser('selftest', help='randomized property checks')
    selftest.add_argument('--iterations', type=int, help='overrides selftest.iterations')
    selftest.add_argument('--check', action='append', choices=[name for name, _, _ in CHECKS],
                          help='run only the named check (repeatable)')

    rewrite = sub.add_parser('rewrite-check', help='substitute into a conjugated relation family')
    rewrite.add_argument('--family', choices=('trefoil-g1', 'trefoil-g2'), required=True)
    rewrite.add_argument('--r', type=int, default=1)
    rewrite.add_argument('--printed', action='store_true', help='use the family as printed')

    return parser
