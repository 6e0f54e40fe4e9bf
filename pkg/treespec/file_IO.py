# Copyright (C) 2024 treespec developers
# All rights reserved.
#
# This file is part of treespec. Distributed under the BSD 3-clause
# license; see LICENSE at the top of the source tree.

import json
from treespec.graph.codecs import (encode_graph6, decode_graph6,
                                   edge_list_lines, parse_edge_list,
                                   GRAPH6_HEADER)
from treespec.walks.patterns import PatternCatalog

report_formats = ('json', 'tsv', 'yaml')


#
# graph6 files
#
def write_graph6_file(graphs, filename='graphs.g6', header=False):
    lines = get_graph6_lines(graphs, header=header)
    with open(filename, 'w') as w:
        w.write("\n".join(lines) + "\n")


def get_graph6_lines(graphs, header=False):
    lines = []
    for i, graph in enumerate(graphs):
        if header and i == 0:
            lines.append(GRAPH6_HEADER + encode_graph6(graph))
        else:
            lines.append(encode_graph6(graph))
    return lines


def read_graph6_file(filename):
    """One graph per non-empty line; a leading >>graph6<< is accepted"""
    graphs = []
    with open(filename) as f:
        for line in f:
            text = line.strip()
            if text:
                graphs.append(decode_graph6(text))
    return graphs


#
# edge lists
#
def write_edge_list(graph, filename='graph.edges'):
    with open(filename, 'w') as w:
        w.write("\n".join(edge_list_lines(graph)) + "\n")


def read_edge_list(filename):
    with open(filename) as f:
        return parse_edge_list(f.readlines())


#
# pattern catalog ("name<TAB>graph6")
#
def write_pattern_catalog(catalog, filename='patterns.txt'):
    with open(filename, 'w') as w:
        w.write("\n".join(catalog.get_lines()) + "\n")


def read_pattern_catalog(filename):
    with open(filename) as f:
        return PatternCatalog.from_lines(f.readlines())


#
# reports
#
def get_report_lines(report, fmt='json', columns=None, rows_key=None):
    """Text lines of a report

    json   one line, keys sorted
    yaml   block style, keys sorted
    tsv    header fields as '# key: value' comment lines, then the list
           report[rows_key] of dicts as a table with the given columns

    """
    if fmt == 'json':
        return [json.dumps(report, sort_keys=True)]
    if fmt == 'yaml':
        import yaml
        # tuples become lists
        report = json.loads(json.dumps(report))
        return yaml.safe_dump(report, default_flow_style=False,
                              sort_keys=True).rstrip("\n").split("\n")
    if fmt == 'tsv':
        return _get_tsv_lines(report, columns, rows_key)
    raise ValueError("Unknown report format '%s'." % fmt)


def _tsv_value(value):
    if isinstance(value, (list, tuple, dict)):
        return json.dumps(value, sort_keys=True)
    return "%s" % value


def _get_tsv_lines(report, columns, rows_key):
    lines = []
    for key in sorted(report):
        if key == rows_key:
            continue
        lines.append("# %s: %s" % (key, _tsv_value(report[key])))
    if rows_key is None or rows_key not in report:
        return lines
    rows = report[rows_key]
    if columns is None:
        columns = sorted(rows[0]) if rows else []
    lines.append("\t".join(columns))
    for row in rows:
        lines.append("\t".join(_tsv_value(row.get(c, '')) for c in columns))
    return lines


def write_report(report, filename=None, fmt='json', columns=None,
                 rows_key=None):
    """Write a report to filename, or to stdout when filename is None"""
    text = "\n".join(get_report_lines(report, fmt=fmt, columns=columns,
                                      rows_key=rows_key)) + "\n"
    if filename is None:
        import sys
        sys.stdout.write(text)
    else:
        with open(filename, 'w') as w:
            w.write(text)


def read_report(filename):
    """Read a JSON or YAML report; JSON is parsed by the YAML loader"""
    import yaml
    try:
        from yaml import CLoader as Loader
    except ImportError:
        from yaml import Loader

    with open(filename) as f:
        text = f.read()
    return yaml.load(text, Loader=Loader)
