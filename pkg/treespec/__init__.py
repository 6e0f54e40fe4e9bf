# Copyright (C) 2024 treespec developers
# All rights reserved.
#
# This file is part of treespec. Distributed under the BSD 3-clause
# license; see LICENSE at the top of the source tree.

from treespec.version import __version__
from treespec.graph.graph import Graph, line_graph
from treespec.graph.families import FamilySpec, build_family, t4
from treespec.graph.codecs import encode_graph6, decode_graph6
from treespec.poly.intpoly import IntPoly
from treespec.poly.charpoly import charpoly
from treespec.walks.census import derive_walk_identity
from treespec.closedforms.audit import audit, audit_grid
from treespec.dsverify.search import cospectral_mate_search, ds_check_t4
