"""
Command line interface

    morsecx gen KIND [N]
    morsecx build-morse FILE
    morsecx aut FILE --of complex|hasse|morse
    morsecx verify FILE
    morsecx export-dot FILE
    morsecx export-json FILE

FILE may be - for standard input, and any command but gen may take
--gen KIND [N] instead of FILE.  Exit codes are 0 on success, 1 for input
errors and exhausted budgets, 2 when a verification check fails.
"""
import argparse
import io
import json
import logging
import sys
from dataclasses import dataclass
from typing import Optional

from ._version import __version__
from .simplicial import (
    generate_cycle,
    generate_boundary_simplex,
    generate_path,
    generate_simplex,
    generate_star,
    generate_kite,
    generate_moebius,
    generate_moebius_strip6,
)
from .hasse import build_hasse, as_graph
from .morse import build_morse_complex
from .autgroup import complex_automorphisms, graph_automorphisms
from .theorem import verify_main_theorem, transport_group
from .facetio import read_facets, read_json, write_facets, write_json
from .defaults import (
    DEFAULT_GVF_BUDGET,
    DEFAULT_GROUP_BUDGET,
    DEFAULT_NWORKERS,
)
from .mexceptions import MorseBaseException, BudgetExceeded

logger = logging.getLogger(__name__)

COMMANDS = ['gen', 'build-morse', 'aut', 'verify', 'export-dot', 'export-json']
FORMATS = ['table', 'json', 'dot']
GROUP_KINDS = ['complex', 'hasse', 'morse']

# kind -> (generator, takes a size argument)
GENERATORS = {
    'cycle': (generate_cycle, True),
    'boundary': (generate_boundary_simplex, True),
    'path': (generate_path, True),
    'simplex': (generate_simplex, True),
    'star': (generate_star, True),
    'kite': (generate_kite, False),
    'moebius': (generate_moebius, False),
    'moebius6': (generate_moebius_strip6, False),
}

_handler = None


@dataclass
class CliConfig:
    """
    validated settings of one command line run
    """
    command: str
    input: Optional[str] = None
    generator: Optional[tuple] = None
    budget: int = DEFAULT_GVF_BUDGET
    group_budget: int = DEFAULT_GROUP_BUDGET
    fmt: str = 'table'
    of: str = 'complex'
    via_hasse: bool = False
    nworkers: int = DEFAULT_NWORKERS
    seed: Optional[int] = None
    oracle_sweep: int = 0
    output: Optional[str] = None
    timings: bool = False

    def __post_init__(self):
        self.validate()

    def validate(self):
        if self.command not in COMMANDS:
            raise ValueError("unknown command %r" % self.command)

        nsources = (self.input is not None) + (self.generator is not None)
        if nsources != 1:
            raise ValueError(
                "exactly one input source is required, got %d" % nsources
            )
        if self.command == 'gen' and self.generator is None:
            raise ValueError("gen needs a generator")

        if self.generator is not None:
            kind, n = self.generator
            if kind not in GENERATORS:
                raise ValueError("unknown generator %r, choose from %s"
                                 % (kind, sorted(GENERATORS)))
            if GENERATORS[kind][1] and n is None:
                raise ValueError("generator %r needs a size" % kind)

        if self.budget <= 0 or self.group_budget <= 0:
            raise ValueError("budgets must be positive")
        if self.nworkers < 1:
            raise ValueError("nworkers must be >= 1")
        if self.oracle_sweep < 0:
            raise ValueError("oracle sweep count must be >= 0")
        if self.fmt not in FORMATS:
            raise ValueError("unknown format %r" % self.fmt)
        if self.of not in GROUP_KINDS:
            raise ValueError("unknown group kind %r" % self.of)

    @classmethod
    def from_args(cls, args):
        generator = None
        if args.command == 'gen':
            generator = (args.kind, args.n)
        elif args.gen is not None:
            generator = _parse_gen_option(args.gen)

        return cls(
            command=args.command,
            input=getattr(args, 'file', None),
            generator=generator,
            budget=getattr(args, 'budget', DEFAULT_GVF_BUDGET),
            group_budget=getattr(args, 'group_budget', DEFAULT_GROUP_BUDGET),
            fmt=getattr(args, 'format', 'table'),
            of=getattr(args, 'of', 'complex'),
            via_hasse=getattr(args, 'via_hasse', False),
            nworkers=getattr(args, 'nworkers', DEFAULT_NWORKERS),
            seed=getattr(args, 'seed', None),
            oracle_sweep=getattr(args, 'oracle_sweep', 0),
            output=args.output,
            timings=getattr(args, 'timings', False),
        )


def _parse_gen_option(values):
    if len(values) not in (1, 2):
        raise ValueError("--gen takes KIND [N]")
    kind = values[0]
    n = None
    if len(values) == 2:
        try:
            n = int(values[1])
        except ValueError:
            raise ValueError("bad generator size %r" % values[1])
    return kind, n


def get_parser():
    parser = argparse.ArgumentParser(
        prog='morsecx',
        description=(
            'Morse complexes of simplicial complexes and their '
            'automorphism groups'
        ),
    )
    parser.add_argument('--version', action='version', version=__version__)
    parser.add_argument(
        '-v', '--verbose', action='count', default=0,
        help='log progress to stderr; -v for info, -vv for debug',
    )
    subparsers = parser.add_subparsers(dest='command')

    gen_p = subparsers.add_parser('gen', help='write a standard complex')
    gen_p.add_argument('kind', choices=sorted(GENERATORS))
    gen_p.add_argument('n', type=int, nargs='?', default=None)
    gen_p.add_argument('--format', choices=['table', 'json'], default='table',
                       help='table writes the facet text format')

    helps = {
        'build-morse': 'build M(K), print its f-vector',
        'aut': 'compute an automorphism group',
        'verify': 'check the automorphism classification on K',
        'export-dot': 'write the Hasse diagram as graphviz',
        'export-json': 'write K or M(K) as json',
    }
    for command in COMMANDS[1:]:
        sub = subparsers.add_parser(command, help=helps[command])
        sub.add_argument('file', nargs='?', default=None,
                         help='facet or json file, - for standard input')
        sub.add_argument('--gen', nargs='+', metavar='ARG', default=None,
                         help='use a generated complex: KIND [N]')
        sub.add_argument('--budget', type=int, default=DEFAULT_GVF_BUDGET,
                         help='maximum number of gradient vector fields')
        sub.add_argument('--group-budget', type=int,
                         default=DEFAULT_GROUP_BUDGET,
                         help='maximum automorphism group order')
        sub.add_argument('--nworkers', type=int, default=DEFAULT_NWORKERS)
        sub.add_argument('--format', choices=FORMATS, default='table')
        sub.add_argument('--of', choices=GROUP_KINDS, default='complex')
        sub.add_argument('--via-hasse', action='store_true',
                         help='get Aut(M) by transport from the Hasse '
                              'diagram instead of building M')
        if command == 'verify':
            sub.add_argument('--timings', action='store_true')
            sub.add_argument('--oracle-sweep', type=int, default=0,
                             metavar='N',
                             help='also test N random vector fields')
            sub.add_argument('--seed', type=int, default=None)

    for sub in [gen_p] + [subparsers.choices[c] for c in COMMANDS[1:]]:
        sub.add_argument('-o', '--output', default=None,
                         help='output file, default standard output')

    return parser


def setup_logging(verbosity):
    """
    send morsecx log records to stderr
    """
    global _handler

    lgr = logging.getLogger('morsecx')
    if _handler is not None:
        lgr.removeHandler(_handler)

    _handler = logging.StreamHandler(sys.stderr)
    _handler.setFormatter(logging.Formatter(logging.BASIC_FORMAT))
    lgr.addHandler(_handler)

    if verbosity >= 2:
        lgr.setLevel(logging.DEBUG)
    elif verbosity == 1:
        lgr.setLevel(logging.INFO)
    else:
        lgr.setLevel(logging.WARNING)


def load_complex(cfg):
    """
    get the input complex of a run
    """
    if cfg.generator is not None:
        kind, n = cfg.generator
        func, sized = GENERATORS[kind]
        return func(n) if sized else func()

    if cfg.input == '-':
        text = sys.stdin.read()
    else:
        with open(cfg.input) as fobj:
            text = fobj.read()

    if text.lstrip().startswith('{'):
        return read_json(io.StringIO(text))
    return read_facets(io.StringIO(text))


class _Output(object):
    """
    context for writing to a file or, for None or -, standard output
    """
    def __init__(self, path):
        self.path = path
        self.fobj = None

    def __enter__(self):
        if self.path is None or self.path == '-':
            return sys.stdout
        self.fobj = open(self.path, 'w')
        return self.fobj

    def __exit__(self, *exc):
        if self.fobj is not None:
            self.fobj.close()
        return False


def cmd_gen(cfg, K):
    with _Output(cfg.output) as out:
        if cfg.fmt == 'json':
            write_json(K, out)
        else:
            write_facets(K, out)
    return 0


def _write_partial(cfg, err, force=False):
    """
    report an exceeded GVF budget; the partial count goes out as json when
    json output was asked for
    """
    sys.stderr.write('error: %s\n' % err.value)
    if force or cfg.output is not None or cfg.fmt == 'json':
        partial = {'partial': True, 'count': err.count, 'budget': err.budget}
        with _Output(cfg.output) as out:
            json.dump(partial, out, indent=2)
            out.write('\n')
    return 1


def cmd_build_morse(cfg, K):
    try:
        M = build_morse_complex(K, budget=cfg.budget, nworkers=cfg.nworkers)
    except BudgetExceeded as err:
        return _write_partial(cfg, err)

    extra = {'partial': False}
    if cfg.fmt == 'json' and cfg.output is None:
        write_json(M, sys.stdout, extra=extra)
        return 0

    sys.stdout.write(
        'f-vector: (%s)\n' % ', '.join(str(c) for c in M.get_f_vector())
    )
    if cfg.output is not None:
        with _Output(cfg.output) as out:
            write_json(M, out, extra=extra)
    return 0


def _get_group(cfg, K):
    if cfg.of == 'complex':
        return complex_automorphisms(K, budget=cfg.group_budget), False
    if cfg.of == 'hasse':
        group = graph_automorphisms(
            as_graph(build_hasse(K)), budget=cfg.group_budget,
        )
        return group, False

    if not cfg.via_hasse:
        try:
            M = build_morse_complex(
                K, budget=cfg.budget, nworkers=cfg.nworkers,
            )
            return complex_automorphisms(M, budget=cfg.group_budget), False
        except BudgetExceeded as err:
            logger.warning('%s; using transport from the Hasse diagram',
                           err.value)
    return transport_group(K, group_budget=cfg.group_budget), True


def cmd_aut(cfg, K):
    group, via_hasse = _get_group(cfg, K)

    with _Output(cfg.output) as out:
        if cfg.fmt == 'json':
            data = group.to_dict()
            data['of'] = cfg.of
            data['via_hasse'] = via_hasse
            json.dump(data, out, indent=2)
            out.write('\n')
        else:
            out.write('order: %d\n' % group.order)
            if via_hasse:
                out.write('via hasse: true\n')
            out.write('generators:\n')
            for g in group.generators:
                out.write('  %s\n' % g)
    return 0


def cmd_verify(cfg, K):
    report = verify_main_theorem(
        K,
        budget=cfg.budget,
        group_budget=cfg.group_budget,
        via_hasse=cfg.via_hasse,
        nworkers=cfg.nworkers,
        timings=cfg.timings,
        oracle_sweep=cfg.oracle_sweep,
        seed=cfg.seed,
    )

    with _Output(cfg.output) as out:
        if cfg.fmt == 'json':
            out.write(report.to_json() + '\n')
        else:
            report.write_table(stream=out)

    if report.budget_exceeded():
        return 1
    return 0 if report['overall'] else 2


def cmd_export_dot(cfg, K):
    with _Output(cfg.output) as out:
        out.write(build_hasse(K).to_dot())
    return 0


def cmd_export_json(cfg, K):
    if cfg.of == 'morse':
        try:
            K = build_morse_complex(
                K, budget=cfg.budget, nworkers=cfg.nworkers,
            )
        except BudgetExceeded as err:
            return _write_partial(cfg, err, force=True)
    with _Output(cfg.output) as out:
        write_json(K, out)
    return 0


COMMAND_FUNCS = {
    'gen': cmd_gen,
    'build-morse': cmd_build_morse,
    'aut': cmd_aut,
    'verify': cmd_verify,
    'export-dot': cmd_export_dot,
    'export-json': cmd_export_json,
}


def run(argv):
    """
    run one command

    Parameters
    ----------
    argv: list of str
        Arguments without the program name

    Returns
    -------
    exit code: int
    """
    parser = get_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return 0 if not err.code else 1

    if args.command is None:
        parser.print_help(sys.stderr)
        return 1

    setup_logging(args.verbose)

    try:
        cfg = CliConfig.from_args(args)
        K = load_complex(cfg)
        return COMMAND_FUNCS[cfg.command](cfg, K)
    except (MorseBaseException, ValueError, OSError) as err:
        value = getattr(err, 'value', err)
        sys.stderr.write('error: %s\n' % value)
        return 1


def main():
    sys.exit(run(sys.argv[1:]))
