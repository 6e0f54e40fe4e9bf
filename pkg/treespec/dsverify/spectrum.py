# Copyright (C) 2024 treespec developers
# All rights reserved.
#
# This file is part of treespec. Distributed under the BSD 3-clause
# license; see LICENSE at the top of the source tree.

import os
import numpy as np
from treespec.graph.canonical import canonical_form
from treespec.graph.codecs import decode_graph6
from treespec.poly.intpoly import IntPoly, DomainError
from treespec.poly.charpoly import charpoly, charpoly_kinds

CACHE_FILENAME = "spectra.txt"
CACHE_DIR_ENV = "TREESPEC_CACHE_DIR"


class SpectrumKey(object):
    """Characteristic polynomial coefficients of a graph matrix

    Two graphs are cospectral with respect to kind exactly when their keys
    are equal. coeffs are ordered lowest degree first.

    """

    def __init__(self, kind, coeffs):
        if kind not in charpoly_kinds:
            raise DomainError("Unknown matrix kind '%s'." % kind)
        self._kind = kind
        self._coeffs = tuple(int(c) for c in coeffs)

    @classmethod
    def from_poly(cls, kind, poly):
        return cls(kind, poly.coeffs)

    @property
    def kind(self):
        return self._kind

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def num_vertices(self):
        return len(self._coeffs) - 1

    def to_poly(self):
        return IntPoly(self._coeffs)

    def to_text(self):
        return " ".join(str(c) for c in self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, SpectrumKey):
            return NotImplemented
        return (self._kind == other.kind and self._coeffs == other.coeffs)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self._kind, self._coeffs))

    def __repr__(self):
        return "SpectrumKey(%s, %s)" % (self._kind, self.to_text())


class SpectrumCache(object):
    """Spectrum keys by canonical graph6 and matrix kind

    With a directory the cache is backed by the append-only text file
    CACHE_FILENAME there, one record per line:

        <canonical graph6><TAB><kind><TAB><coefficients, lowest first>

    Each record is written with a single line-buffered write. Lines that
    do not parse, such as a partial last line, are ignored on reading.
    Without a directory the cache lives in memory only.

    """

    def __init__(self, directory=None, filename=CACHE_FILENAME,
                 log_level=0):
        self._keys = {}
        self._filename = None
        self._log_level = log_level
        if directory is not None:
            if not os.path.isdir(directory):
                os.makedirs(directory)
            self._filename = os.path.join(directory, filename)
            self._read()

    @classmethod
    def from_environment(cls, directory=None, log_level=0):
        """CACHE_DIR if given, otherwise $TREESPEC_CACHE_DIR, otherwise
        an in-memory cache"""
        if directory is None:
            directory = os.environ.get(CACHE_DIR_ENV)
        return cls(directory=directory, log_level=log_level)

    @property
    def filename(self):
        return self._filename

    def _read(self):
        if not os.path.exists(self._filename):
            return
        skipped = 0
        with open(self._filename) as f:
            for line in f:
                record = self._parse(line)
                if record is None:
                    skipped += 1
                    continue
                self._keys[(record[0], record[1].kind)] = record[1]
        if self._log_level:
            print("Spectrum cache %s: %d keys, %d unreadable lines"
                  % (self._filename, len(self._keys), skipped))

    def _parse(self, line):
        if not line.endswith("\n"):
            return None
        fields = line.rstrip("\n").split("\t")
        if len(fields) != 3:
            return None
        try:
            key = SpectrumKey(fields[1], [int(x) for x in fields[2].split()])
        except (ValueError, DomainError):
            return None
        if not key.coeffs:
            return None
        return fields[0], key

    def get(self, graph6, kind):
        return self._keys.get((graph6, kind))

    def put(self, graph6, key):
        if (graph6, key.kind) in self._keys:
            return
        self._keys[(graph6, key.kind)] = key
        if self._filename is not None:
            with open(self._filename, 'a', buffering=1) as w:
                w.write("%s\t%s\t%s\n" % (graph6, key.kind, key.to_text()))

    def keys(self):
        return sorted(self._keys)

    def __len__(self):
        return len(self._keys)

    def __contains__(self, item):
        return item in self._keys

    def verify_sample(self, fraction=0.01, seed=0):
        """Recompute a random sample of cached keys

        Returns the (graph6, kind) pairs whose stored key differs from a
        fresh computation. At least one entry is checked when the cache is
        not empty.

        """
        entries = self.keys()
        if not entries:
            return []
        size = max(1, int(round(len(entries) * fraction)))
        rng = np.random.RandomState(seed)
        picks = sorted(rng.choice(len(entries), size=size, replace=False))
        incoherent = []
        for i in picks:
            graph6, kind = entries[i]
            fresh = SpectrumKey.from_poly(kind,
                                          charpoly(decode_graph6(graph6),
                                                   kind))
            if fresh != self._keys[(graph6, kind)]:
                incoherent.append(list(entries[i]))
        if self._log_level:
            print("Spectrum cache sample: %d of %d keys recomputed, %d "
                  "incoherent" % (size, len(entries), len(incoherent)))
        return incoherent


def spectrum_key(graph, kind='adjacency', cache=None):
    """Exact SpectrumKey, looked up by canonical form when cached"""
    if cache is None:
        return SpectrumKey.from_poly(kind, charpoly(graph, kind))
    graph6 = canonical_form(graph).graph6
    key = cache.get(graph6, kind)
    if key is None:
        key = SpectrumKey.from_poly(kind, charpoly(graph, kind))
        cache.put(graph6, key)
    return key
