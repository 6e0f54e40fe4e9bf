# Copyright (C) 2024 treespec developers
# All rights reserved.
#
# This file is part of treespec. Distributed under the BSD 3-clause
# license; see LICENSE at the top of the source tree.

import sys
import time
from treespec.version import __version__
from treespec.graph.graph import line_graph, CapacityError, MissingEdgeError
from treespec.graph.families import (FamilySpec, build_family,
                                     check_t4_structure, ParameterOrderError,
                                     StructuralHypothesisError)
from treespec.graph.codecs import (encode_graph6, decode_graph6,
                                   edge_list_lines, Graph6ParseError,
                                   EdgeListParseError)
from treespec.graph.trees import DEFAULT_CENSUS_LIMIT
from treespec.poly.intpoly import DomainError
from treespec.poly.charpoly import charpoly
from treespec.walks.census import (closed_walks, derive_walk_identity,
                                   pattern_counts, verify_walk_identities)
from treespec.walks.patterns import pattern_catalog
from treespec.invariants.degrees import HypothesisError, InconsistencyError
from treespec.invariants.bounds import ExceptionCaseError
from treespec.invariants.survey import (tree_invariant_census,
                                        subdivision_sample, t4_census)
from treespec.closedforms.tables import check_tables, UnknownTableError
from treespec.closedforms.audit import (audit_grid, injectivity_scan,
                                        identity_names, formula_names,
                                        CaseMismatchError)
from treespec.dsverify.spectrum import SpectrumCache
from treespec.dsverify.search import (cospectral_mate_search, ds_check_t4,
                                      family_collision_scan,
                                      verify_line_correspondence,
                                      centipede_ds_check, complement_ds_check)
from treespec.file_IO import (read_graph6_file, read_edge_list,
                              write_pattern_catalog, write_report,
                              report_formats)
from treespec.cui.settings import ConfParser
from treespec.cui.treespec_argparse import get_parser

input_errors = (CapacityError, MissingEdgeError, ParameterOrderError,
                StructuralHypothesisError, Graph6ParseError,
                EdgeListParseError, DomainError, HypothesisError,
                InconsistencyError, ExceptionCaseError, CaseMismatchError,
                UnknownTableError, ValueError, IOError)

DEFAULT_IDENTITY_MAX_SUM = 15
DEFAULT_SCAN_MAX_SUM = 24
DEFAULT_T4_CENSUS_MAX_SUM = 12


def print_error(message):
    print("")
    print("  ___ _ __ _ __ ___  _ __")
    print(" / _ \\ '__| '__/ _ \\| '__|")
    print("|  __/ |  | | | (_) | |")
    print(" \\___|_|  |_|  \\___/|_|")
    print("")
    print(message)
    print("Please check the input graph, the options and the limits.")


class TaskResult(object):
    """Payload of a task with its exit status and optional text output

    lines replaces the report when a graph format is requested. rows_key
    and columns lay out the TSV table.

    """

    def __init__(self, payload, passed=True, lines=None, rows_key=None,
                 columns=None):
        self.payload = payload
        self.passed = passed
        self.lines = lines
        self.rows_key = rows_key
        self.columns = columns


def _read_graphs(args):
    if getattr(args, 'graph6', None):
        return [decode_graph6(args.graph6)]
    if getattr(args, 'graph6_filename', None):
        return read_graph6_file(args.graph6_filename)
    if getattr(args, 'edge_list_filename', None):
        return [read_edge_list(args.edge_list_filename)]
    if getattr(args, 'family', None):
        kind = args.family[0]
        try:
            params = [int(x) for x in args.family[1:]]
        except ValueError:
            raise ValueError("Family parameters have to be integers: %s"
                             % " ".join(args.family[1:]))
        return [build_family(FamilySpec(kind, params))]
    raise ValueError("No graph given; use --graph6, --graph6-file, "
                     "--edge-list or --family.")


def _graph_lines(graphs, fmt):
    lines = []
    for graph in graphs:
        if fmt == 'edgelist':
            lines += edge_list_lines(graph)
        else:
            lines.append(encode_graph6(graph))
    return lines


def _graph_entry(graph):
    return {'graph6': encode_graph6(graph),
            'num_vertices': graph.n,
            'num_edges': graph.m}


def _cache(settings):
    if settings.get_cache_dir() is None:
        return None
    return SpectrumCache(directory=settings.get_cache_dir(),
                         log_level=settings.get_log_level())


def _run_gen(args, settings):
    spec = FamilySpec(args.family_kind, args.family_params)
    graph = build_family(spec)
    payload = _graph_entry(graph)
    payload.update({'family': spec.kind, 'params': list(spec.params)})
    if spec.kind == 'T4':
        payload['structure'] = check_t4_structure(*spec.params, graph=graph)
    fmt = settings.get_format() or 'graph6'
    lines = _graph_lines([graph], fmt) if fmt in ('graph6', 'edgelist') \
        else None
    return TaskResult(payload, lines=lines)


def _run_charpoly(args, settings):
    entries = []
    for graph in _read_graphs(args):
        poly = charpoly(graph, args.kind)
        entry = _graph_entry(graph)
        entry.update({'kind': args.kind,
                      'coeffs': list(poly.coeffs),
                      'polynomial': poly.to_string('x')})
        entries.append(entry)
    return TaskResult({'graphs': entries}, rows_key='graphs',
                      columns=['graph6', 'kind', 'coeffs'])


def _run_linegraph(args, settings):
    graphs = [line_graph(g) for g in _read_graphs(args)]
    fmt = settings.get_format() or 'graph6'
    lines = _graph_lines(graphs, fmt) if fmt in ('graph6', 'edgelist') \
        else None
    return TaskResult({'line_graphs': [_graph_entry(g) for g in graphs]},
                      lines=lines, rows_key='line_graphs')


def _run_walks(args, settings):
    log_level = settings.get_log_level()
    if args.verify:
        max_n = settings.get_census_max_n()
        report = verify_walk_identities(
            max_n, ks=args.walk_lengths, limit=DEFAULT_CENSUS_LIMIT,
            workers=settings.get_workers(), log_level=log_level)
        return TaskResult(report, passed=report['passed'],
                          rows_key='violations')
    identities = [derive_walk_identity(k) for k in args.walk_lengths]
    entries = []
    holds = True
    for graph in _read_graphs(args):
        entry = _graph_entry(graph)
        walks = {}
        for identity in identities:
            lhs = closed_walks(graph, identity.k)
            counts = pattern_counts(graph, identity)
            rhs = identity.evaluate(graph)
            holds = holds and lhs == rhs
            walks["%d" % identity.k] = {'closed_walks': lhs,
                                        'pattern_counts': counts,
                                        'identity_value': rhs}
        entry['walks'] = walks
        entries.append(entry)
    return TaskResult({'graphs': entries,
                       'identities': [str(x) for x in identities]},
                      passed=holds, rows_key='graphs')


def _run_derive_coeffs(args, settings):
    identity = derive_walk_identity(args.walk_length)
    payload = identity.to_dict()
    payload['identity'] = "%s" % identity
    if args.catalog_filename:
        write_pattern_catalog(pattern_catalog(), args.catalog_filename)
        payload['catalog'] = args.catalog_filename
    return TaskResult(payload, rows_key='terms',
                      columns=['name', 'coefficient', 'graph6',
                               'num_vertices', 'num_edges'])


def _run_identities(args, settings):
    max_sum = settings.get_max_sum() or DEFAULT_IDENTITY_MAX_SUM
    tables = check_tables()
    if args.which == 'all':
        identities = identity_names + formula_names
    else:
        identities = (args.which,)
    report = audit_grid(max_sum, identities=identities,
                        repair=settings.get_repair(),
                        workers=settings.get_workers(),
                        log_level=settings.get_log_level())
    report['tables'] = tables
    passed = tables['passed'] and report['mismatches'] == 0
    return TaskResult(report, passed=passed, rows_key='entries',
                      columns=['identity', 'params', 'case', 'status',
                               'expected', 'documented', 'shift'])


def _cache_check(cache, settings, report):
    if cache is None:
        return True
    incoherent = cache.verify_sample(settings.get_sample_fraction(),
                                     settings.get_seed())
    report['cache'] = {'filename': cache.filename,
                       'keys': len(cache),
                       'incoherent': incoherent}
    return not incoherent


def _run_ds_search(args, settings):
    cache = _cache(settings)
    limit = settings.get_enumeration_limit()
    workers = settings.get_workers()
    log_level = settings.get_log_level()
    if args.num_vertices is not None:
        report = ds_check_t4(args.num_vertices, kind=args.kind, limit=limit,
                             cache=cache, workers=workers,
                             log_level=log_level)
        rows_key = 'members'
    elif args.centipedes:
        report = centipede_ds_check(args.centipedes, limit=limit,
                                    cache=cache, workers=workers,
                                    log_level=log_level)
        rows_key = 'centipedes'
    elif args.complement is not None:
        report = complement_ds_check(args.complement, limit=limit,
                                     log_level=log_level)
        rows_key = 'members'
    else:
        entries = []
        for graph in _read_graphs(args):
            mates = cospectral_mate_search(graph, kind=args.kind,
                                           space=args.space, limit=limit,
                                           cache=cache, workers=workers,
                                           log_level=log_level)
            entry = _graph_entry(graph)
            entry['mates'] = [encode_graph6(g) for g in mates]
            entries.append(entry)
        report = {'kind': args.kind, 'space': args.space, 'graphs': entries,
                  'passed': True}
        rows_key = 'graphs'
    passed = _cache_check(cache, settings, report) and report['passed']
    return TaskResult(report, passed=passed, rows_key=rows_key)


def _run_family_scan(args, settings):
    max_sum = settings.get_max_sum() or DEFAULT_SCAN_MAX_SUM
    log_level = settings.get_log_level()
    if args.table:
        report = injectivity_scan(args.table, max_sum, log_level=log_level)
        rows_key = 'collisions'
    else:
        report = family_collision_scan(args.kind, max_sum,
                                       workers=settings.get_workers(),
                                       log_level=log_level)
        rows_key = 'collisions'
    return TaskResult(report, passed=report['passed'], rows_key=rows_key)


def _run_correspondence(args, settings):
    report = verify_line_correspondence(args.max_n,
                                        log_level=settings.get_log_level())
    return TaskResult(report, passed=report['passed'],
                      rows_key='pair_violations')


def _run_census(args, settings):
    log_level = settings.get_log_level()
    max_sum = settings.get_max_sum() or DEFAULT_T4_CENSUS_MAX_SUM
    trees = tree_invariant_census(args.max_n, log_level=log_level)
    subdivisions = subdivision_sample(args.max_n,
                                      num_samples=args.num_subdivisions,
                                      seed=settings.get_seed(),
                                      log_level=log_level)
    members = t4_census(max_sum, log_level=log_level)
    report = {'trees': trees,
              'subdivisions': subdivisions,
              't4': members,
              'passed': (trees['passed'] and subdivisions['passed'] and
                         members['passed'])}
    return TaskResult(report, passed=report['passed'])


_tasks = {'gen': _run_gen,
          'charpoly': _run_charpoly,
          'linegraph': _run_linegraph,
          'walks': _run_walks,
          'derive-coeffs': _run_derive_coeffs,
          'identities': _run_identities,
          'ds-search': _run_ds_search,
          'family-scan': _run_family_scan,
          'correspondence': _run_correspondence,
          'census': _run_census}


def run(argv=None):
    """Run one subcommand; returns 0, 2 (mismatches or violations) or 1"""
    if argv is None:
        argv = sys.argv[1:]
    argv = list(argv)
    parser = get_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 1 if e.code else 0
    try:
        conf_parser = ConfParser(filename=args.conf_filename, args=args)
    except SystemExit:
        return 1
    settings = conf_parser.get_settings()
    fmt = settings.get_format()
    graph_task = args.command in ('gen', 'linegraph')
    if fmt is not None and fmt not in report_formats and not graph_task:
        print_error("Format '%s' is only available for gen and linegraph."
                    % fmt)
        return 1

    start = time.time()
    try:
        result = _tasks[args.command](args, settings)
    except input_errors as e:
        print_error("%s: %s" % (e.__class__.__name__, e))
        return 1
    elapsed = time.time() - start

    if result.lines is not None:
        text = "\n".join(result.lines) + "\n"
        if args.output_filename is None:
            sys.stdout.write(text)
        else:
            with open(args.output_filename, 'w') as w:
                w.write(text)
        return 0 if result.passed else 2

    report = {'task': args.command,
              'version': __version__,
              'config': settings.get_config_dict()}
    report.update(result.payload)
    write_report(report, filename=args.output_filename,
                 fmt=fmt if fmt in report_formats else 'json',
                 columns=result.columns, rows_key=result.rows_key)
    if args.output_filename is not None and settings.get_log_level():
        print("%s finished in %.3f s" % (args.command, elapsed))
    return 0 if result.passed else 2


def main():
    sys.exit(run())
