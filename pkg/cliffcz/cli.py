"""
    Command line entry point.

    cliffcz [-v] generate|orbits|graph|synth|lookup|verify [options]
"""

import argparse
import logging
import os
import sys

from cliffcz.atlas import CliffordAtlas
from cliffcz.flow.acceptance import AcceptanceSuite
from cliffcz.flow.check import CheckResult
from cliffcz.flow.report import VerificationReport
from cliffcz.synth.circuit import evaluate
from cliffcz.util.action import Command, ExitStatus, GraphFormat
from cliffcz.util.config import get_atlas_dir
from cliffcz.util.exception import (ClosureOverflowError, CorruptTableError, DimensionError, MatrixFormatError,
                                    NotCliffordError, NotUnitaryError, RingOverflowError, VerificationError,
                                    WordError)
from cliffcz.util.file.graph_export import GraphExportUtil, node_name
from cliffcz.util.file.matrix_text import MatrixTextUtil
from cliffcz.util.file.orbit_file import OrbitFileUtil
from cliffcz.util.method import Entangler

logger = logging.getLogger(__name__)

PROG = 'cliffcz'

EXIT_STATUS = [
    (DimensionError, ExitStatus.USAGE_ERROR),
    (CorruptTableError, ExitStatus.INPUT_FORMAT_ERROR),
    (MatrixFormatError, ExitStatus.INPUT_FORMAT_ERROR),
    (NotUnitaryError, ExitStatus.INPUT_FORMAT_ERROR),
    (WordError, ExitStatus.INPUT_FORMAT_ERROR),
    (NotCliffordError, ExitStatus.NOT_CLIFFORD),
    (VerificationError, ExitStatus.VERIFICATION_FAILURE),
    (ClosureOverflowError, ExitStatus.VERIFICATION_FAILURE),
    (RingOverflowError, ExitStatus.VERIFICATION_FAILURE),
    (OSError, ExitStatus.INPUT_FORMAT_ERROR),
]


def build_parser():
    parser = argparse.ArgumentParser(
        prog=PROG, description='Two qubit Clifford group orbits under local gates and minimal CZ synthesis')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='INFO logging and progress bars with -v, DEBUG logging with -vv')
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    def add_command(name, help_text):
        command = commands.add_parser(name, help=help_text)
        command.add_argument('--out-dir', help='Table directory. Default is $CLIFFORD_ATLAS_DIR or ~/.cliffcz/atlas')
        command.add_argument('--no-regen', action='store_true', help='Fail instead of building missing tables')
        return command

    add_command(Command.GENERATE, 'Build C1, LC2 and C2 and write the table files')
    add_command(Command.ORBITS, 'Write the orbit map and summary and print the layer trace')

    graph = add_command(Command.GRAPH, 'Print the orbit connectivity graph')
    graph.add_argument('--format', choices=GraphFormat.getall(), default=GraphFormat.DOT)

    synth = add_command(Command.SYNTH, 'Print a circuit with the least number of CZ gates')
    source = synth.add_mutually_exclusive_group(required=True)
    source.add_argument('matrix', nargs='?', help='Matrix text file, or - for standard input')
    source.add_argument('--id', type=int, help='Element id in the C2 table')
    synth.add_argument('--time-order', action='store_true', help='Print items in time order')
    synth.add_argument('--verify', action='store_true', help='Check the circuit exactly before printing')
    synth.add_argument('--entangler', choices=[e.lower() for e in Entangler.getall()], default='cz')

    lookup = add_command(Command.LOOKUP, 'Print membership, orbit and layer of a matrix')
    lookup.add_argument('matrix', help='Matrix text file, or - for standard input')

    add_command(Command.VERIFY, 'Run the acceptance suite')
    return parser


def configure_logging(verbose):
    level = logging.WARNING if verbose == 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format='%(levelname)s %(name)s: %(message)s')


def load_atlas(args):
    return CliffordAtlas.load_or_build(get_atlas_dir(args.out_dir), regen=not args.no_regen, verbose=args.verbose)


def cmd_generate(args, out):
    directory = get_atlas_dir(args.out_dir)
    atlas = CliffordAtlas.build(verbose=args.verbose)
    for path, table in zip(atlas.save(directory), atlas.tables.values()):
        out.write('{} {}\n'.format(path, len(table)))
    return ExitStatus.SUCCESS


def cmd_orbits(args, out):
    atlas = load_atlas(args)
    directory = get_atlas_dir(args.out_dir)
    os.makedirs(directory, exist_ok=True)
    OrbitFileUtil.write(atlas.orbits, directory)

    out.write(OrbitFileUtil.summary_text(atlas.orbits))
    for layer, orbit, fresh in atlas.orbits.discovery_trace(atlas.graph):
        out.write('TRACE layer={} {} -> {}\n'.format(
            layer, node_name(orbit), ' '.join(node_name(o) for o in fresh) or '-'))
    return ExitStatus.SUCCESS


def cmd_graph(args, out):
    atlas = load_atlas(args)
    if args.format == GraphFormat.JSON:
        out.write(GraphExportUtil.to_json(atlas.graph, atlas.orbits, atlas.figure_labels()))
    else:
        out.write(GraphExportUtil.to_dot(atlas.graph, atlas.orbits))
    return ExitStatus.SUCCESS


def cmd_synth(args, out):
    atlas = load_atlas(args)
    if args.id is not None:
        if not 0 <= args.id < len(atlas.c2):
            raise NotCliffordError('Element id must be between 0 and {} while {} is passed'.format(
                len(atlas.c2) - 1, args.id))
        target = atlas.c2.element(args.id)
    else:
        target = MatrixTextUtil.read(args.matrix)

    circuit = atlas.synthesize(target)
    if args.verify and evaluate(circuit) != target:
        raise VerificationError('Synthesised circuit does not reproduce the matrix')
    circuit = circuit.with_entangler(args.entangler.upper())
    out.write(circuit.to_text(time_order=args.time_order))
    return ExitStatus.SUCCESS


def cmd_lookup(args, out):
    m = MatrixTextUtil.read(args.matrix)
    atlas = load_atlas(args)
    try:
        found = atlas.lookup(m)
    except NotCliffordError:
        out.write('in_c2 False\n')
        raise
    out.write('in_c2 True\n')
    out.write('element_id {}\n'.format(found['element_id']))
    out.write('orbit {}\n'.format(found['orbit']))
    out.write('paper_label {}\n'.format(node_name(found['paper_label']) if found['paper_label'] else '-'))
    out.write('layer {}\n'.format(found['layer']))
    return ExitStatus.SUCCESS


def cmd_verify(args, out):
    try:
        atlas = load_atlas(args)
    except VerificationError as e:
        report = VerificationReport([CheckResult('build', 'ok', 'error:{}'.format(e), False, False)])
    else:
        report = AcceptanceSuite(verbose=args.verbose).run(atlas)
    out.write(report.to_text())
    return ExitStatus.SUCCESS if report.overall else ExitStatus.VERIFICATION_FAILURE


COMMANDS = {
    Command.GENERATE: cmd_generate,
    Command.ORBITS: cmd_orbits,
    Command.GRAPH: cmd_graph,
    Command.SYNTH: cmd_synth,
    Command.LOOKUP: cmd_lookup,
    Command.VERIFY: cmd_verify,
}


def exit_status_of(error):
    for error_type, status in EXIT_STATUS:
        if isinstance(error, error_type):
            return status
    raise error


def main(argv=None, out=None):
    """
    :param list argv: Arguments without the program name. Default is sys.argv[1:].
    :param out: Stream for command output. Default is sys.stdout.
    :return: int Exit status
    """
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    try:
        return COMMANDS[args.command](args, out)
    except (ValueError, ArithmeticError, OSError) as e:
        status = exit_status_of(e)
        sys.stderr.write('{}: error: {}\n'.format(PROG, e))
        return status


if __name__ == '__main__':
    sys.exit(main())
