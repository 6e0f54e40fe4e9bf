# Copyright (C) 2024 treespec developers
# All rights reserved.
#
# This file is part of treespec. Distributed under the BSD 3-clause
# license; see LICENSE at the top of the source tree.

import argparse
from treespec.poly.charpoly import charpoly_kinds
from treespec.walks.census import identity_lengths
from treespec.closedforms.audit import audit_names
from treespec.dsverify.search import search_spaces

subcommands = ('gen', 'charpoly', 'linegraph', 'walks', 'derive-coeffs',
               'identities', 'ds-search', 'family-scan', 'correspondence',
               'census')


def _common_parser():
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument(
        "--config", dest="conf_filename", metavar="FILE",
        help="Configuration file with KEY = value lines")
    parser.add_argument(
        "--format", dest="output_format",
        help="Report format: json, tsv or yaml (graph6 or edgelist for "
             "graphs)")
    parser.add_argument(
        "-o", "--output", dest="output_filename", metavar="FILE",
        help="Write the report to FILE instead of stdout")
    parser.add_argument(
        "--workers", dest="workers", type=int,
        help="Number of worker processes")
    parser.add_argument(
        "--cache-dir", dest="cache_dir", metavar="DIR",
        help="Directory of the spectrum key cache")
    parser.add_argument(
        "--limit", dest="enumeration_limit", type=int,
        help="Largest number of vertices enumerated")
    parser.add_argument(
        "--loglevel", dest="log_level", type=int,
        help="Log level: 0 silent, 1 summaries, 2 progress")
    parser.add_argument(
        "-v", "--verbose", dest="log_level", action="store_const", const=2,
        help="Same as --loglevel 2")
    parser.add_argument(
        "-q", "--quiet", dest="log_level", action="store_const", const=0,
        help="Same as --loglevel 0")
    parser.add_argument(
        "--seed", dest="seed", type=int,
        help="Seed of the cache sampling")
    parser.add_argument(
        "--sample-fraction", dest="sample_fraction", type=float,
        help="Fraction of cached keys recomputed after a search")
    return parser


def _add_graph_input(parser):
    group = parser.add_mutually_exclusive_group()
    group.add_argument(
        "--graph6", dest="graph6",
        help="Graph as a graph6 string")
    group.add_argument(
        "--graph6-file", dest="graph6_filename", metavar="FILE",
        help="Read graphs from a graph6 file")
    group.add_argument(
        "--edge-list", dest="edge_list_filename", metavar="FILE",
        help="Read a graph from an edge-list file")
    group.add_argument(
        "--family", nargs='+', dest="family", metavar="KIND_OR_PARAM",
        help="Graph family and its parameters, e.g. --family t4 2 3 4")


def get_parser():
    common = _common_parser()
    parser = argparse.ArgumentParser(
        description="Spectral characterization workbench for T4(p,q,r) "
                    "trees")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p = sub.add_parser("gen", parents=[common],
                       help="Build a family member")
    p.add_argument("family_kind", metavar="FAMILY")
    p.add_argument("family_params", nargs='*', type=int, metavar="PARAM")

    p = sub.add_parser("charpoly", parents=[common],
                       help="Characteristic polynomial, lowest degree first")
    _add_graph_input(p)
    p.add_argument("--kind", dest="kind", choices=charpoly_kinds,
                   default='adjacency')

    p = sub.add_parser("linegraph", parents=[common], help="Line graph")
    _add_graph_input(p)

    p = sub.add_parser("walks", parents=[common],
                       help="Closed walks and pattern counts")
    _add_graph_input(p)
    p.add_argument("--k", nargs='+', dest="walk_lengths", type=int,
                   default=list(identity_lengths))
    p.add_argument("--verify", dest="verify", action="store_true",
                   help="Check the identities on all connected graphs")
    p.add_argument("--max-n", dest="census_max_n", type=int,
                   help="Largest graph of the identity census")

    p = sub.add_parser("derive-coeffs", parents=[common],
                       help="Closed-walk identity of length K")
    p.add_argument("walk_length", type=int, metavar="K")
    p.add_argument("--catalog", dest="catalog_filename", metavar="FILE",
                   help="Write the pattern catalog to FILE")

    p = sub.add_parser("identities", parents=[common],
                       help="Audit ledger of the closed forms")
    p.add_argument("which", choices=audit_names + ('all',))
    p.add_argument("--max-sum", dest="max_sum", type=int)
    p.add_argument("--repair", dest="repair", action="store_true",
                   help="Include the labelled repair audits")

    p = sub.add_parser("ds-search", parents=[common],
                       help="Cospectral mates among trees or forests")
    _add_graph_input(p)
    p.add_argument("--n", dest="num_vertices", type=int,
                   help="Check every T4 on this many vertices")
    p.add_argument("--kind", dest="kind", choices=charpoly_kinds,
                   default='laplacian')
    p.add_argument("--space", dest="space", choices=search_spaces,
                   default='trees_same_n')
    p.add_argument("--centipedes", nargs='+', dest="centipedes", type=int,
                   metavar="N", help="Check centipedes on N vertices")
    p.add_argument("--complement", dest="complement", type=int, metavar="N",
                   help="Check complements of trees on N vertices")

    p = sub.add_parser("family-scan", parents=[common],
                       help="Key collisions inside the T4 family")
    p.add_argument("--kind", dest="kind", choices=charpoly_kinds,
                   default='laplacian')
    p.add_argument("--max-sum", dest="max_sum", type=int)
    p.add_argument("--table", dest="table", choices=('W', 'U', 'W1', 'U1'),
                   help="Injectivity scan of a coefficient table instead")

    p = sub.add_parser("correspondence", parents=[common],
                       help="Laplacian spectra of trees and line graphs")
    p.add_argument("--max-n", dest="max_n", type=int, default=9)

    p = sub.add_parser("census", parents=[common],
                       help="Spectral invariants, bounds and censuses")
    p.add_argument("--max-n", dest="max_n", type=int, default=10)
    p.add_argument("--max-sum", dest="max_sum", type=int)
    p.add_argument("--subdivisions", dest="num_subdivisions", type=int,
                   default=100, help="Number of sampled subdivisions")

    return parser
