# Copyright (C) 2024 treespec developers
# All rights reserved.
#
# This file is part of treespec. Distributed under the BSD 3-clause
# license; see LICENSE at the top of the source tree.

from treespec.graph.graph import line_graph, CapacityError
from treespec.graph.families import t4
from treespec.poly.intpoly import DomainError
from treespec.poly.laurent import LaurentPoly, to_laurent, laurent_diff, \
    monomial_shift
from treespec.poly.charpoly import charpoly
from treespec.closedforms.tables import instantiate_table
from treespec.closedforms.formulas import (
    formula_line_t4_charpoly, formula_t4_charpoly_cases,
    repaired_case_formulas, triangle_decomposition_charpoly, case_of)

identity_names = ('eq31', 'eq32', 'eq41')
formula_names = ('head', 'cases', 'triangle')
repair_names = ('eq31-repair', 'cases-repair')
audit_names = identity_names + formula_names + repair_names

# Families audited by injectivity_scan: (lowest p, lowest q)
_scan_ranges = {'W': (2, 2), 'U': (2, 2), 'W1': (1, 2), 'U1': (1, 2)}

DEFAULT_SCAN_LIMIT = 30

PASS = 'PASS'
MISMATCH = 'MISMATCH'
GAP = 'GAP'


class CaseMismatchError(ValueError):
    pass


def _x2_minus_1():
    return LaurentPoly.from_terms([(1, 2), (-1, 0)])


def identity_applies(which, p, q, r):
    if which in ('eq31', 'eq31-repair'):
        return p >= 2
    if which == 'eq32':
        return p == 1 and q >= 2
    if which == 'eq41':
        return r >= 2
    if which in ('head', 'cases', 'triangle', 'cases-repair'):
        return True
    raise ValueError("Unknown identity '%s'." % which)


def _identity_sides(which, p, q, r, repair):
    n = p + q + r + 7
    if which == 'eq31':
        shift = n + 4 if repair else n + 5
        pre_factor = _x2_minus_1() ** 3 * LaurentPoly.monomial(shift)
        lhs = to_laurent(charpoly(line_graph(t4(p, q, r))), pre_factor)
        rhs = (instantiate_table('C0', n=n) +
               instantiate_table('W', p=p, q=q, r=r))
        return 'C0+W', lhs, rhs
    if which == 'eq32':
        pre_factor = _x2_minus_1() ** 2 * LaurentPoly.monomial(n + 2)
        lhs = to_laurent(charpoly(line_graph(t4(p, q, r))), pre_factor)
        rhs = (instantiate_table('C0p', n=n) +
               instantiate_table('W1', p=p, q=q, r=r))
        return 'C0p+W1', lhs, rhs
    pre_factor = _x2_minus_1() ** 3 * LaurentPoly.monomial(n)
    lhs = to_laurent(charpoly(t4(p, q, r)), pre_factor)
    case = case_of(p, q, r)
    if case == '1=p=q<r':
        return 'C1', lhs, instantiate_table('C1', n=n)
    if case == '1=p<q':
        return 'C2+U1', lhs, (instantiate_table('C2', n=n) +
                              instantiate_table('U1', p=p, q=q, r=r))
    return 'C3+U', lhs, (instantiate_table('C3', n=n) +
                         instantiate_table('U', p=p, q=q, r=r))


def verify_identity(which, p, q, r, repair=False):
    """Compare pre-factor * P(lambda = x + 1/x) with its table expansion

    which is 'eq31', 'eq32' or 'eq41'. With repair=True the eq31 pre-factor
    x^(n+5) is replaced by x^(n+4). Both sides are exact Laurent
    polynomials; a mismatch carries the full monomial diff and, when the
    two sides differ by a power of x only, that power as 'shift'.

    """
    if which not in identity_names:
        raise ValueError("Unknown identity '%s'." % which)
    if not (1 <= p <= q <= r):
        raise CaseMismatchError("Parameters (%d, %d, %d) are not ordered "
                                "1 <= p <= q <= r." % (p, q, r))
    if not identity_applies(which, p, q, r):
        raise CaseMismatchError("%s does not cover (%d, %d, %d)."
                                % (which, p, q, r))
    case, lhs, rhs = _identity_sides(which, p, q, r, repair)
    label = which + '-repair' if repair and which == 'eq31' else which
    diff = laurent_diff(lhs, rhs)
    return {'identity': label,
            'params': [p, q, r],
            'n': p + q + r + 7,
            'case': case,
            'status': MISMATCH if diff else PASS,
            'shift': monomial_shift(lhs, rhs) if diff else 0,
            'diff': [list(d) for d in diff]}


def _poly_diff(formula, direct):
    degree = max(formula.degree, direct.degree)
    diff = []
    for i in range(degree, -1, -1):
        a, b = formula.coefficient(i), direct.coefficient(i)
        if a != b:
            diff.append([i, a, b])
    return diff


_formula_functions = {'head': formula_line_t4_charpoly,
                      'cases': formula_t4_charpoly_cases,
                      'cases-repair': repaired_case_formulas,
                      'triangle': triangle_decomposition_charpoly}


def audit_formula(which, p, q, r):
    """Formula against the directly computed characteristic polynomial

    GAP is reported when the formula is undefined at (p, q, r).

    """
    if which not in _formula_functions:
        raise ValueError("Unknown formula '%s'." % which)
    if which in ('head', 'triangle'):
        direct = charpoly(line_graph(t4(p, q, r)))
    else:
        direct = charpoly(t4(p, q, r))
    report = {'identity': which,
              'params': [p, q, r],
              'n': p + q + r + 7,
              'case': case_of(p, q, r)}
    try:
        formula = _formula_functions[which](p, q, r)
    except DomainError as e:
        report.update({'status': GAP, 'reason': str(e), 'diff': []})
        return report
    diff = _poly_diff(formula, direct)
    report.update({'status': MISMATCH if diff else PASS,
                   'formula_degree': formula.degree,
                   'direct_degree': direct.degree,
                   'diff': diff})
    return report


def audit(which, p, q, r):
    if which in identity_names:
        return verify_identity(which, p, q, r)
    if which == 'eq31-repair':
        return verify_identity('eq31', p, q, r, repair=True)
    return audit_formula(which, p, q, r)


def expected_status(which, p, q, r):
    """Documented outcome of an audit at (p, q, r)"""
    if which == 'eq31':
        return MISMATCH
    if which in ('eq31-repair', 'eq32', 'triangle', 'cases-repair'):
        return PASS
    if which == 'eq41':
        return PASS if p >= 2 else MISMATCH
    if which == 'cases':
        return PASS if p >= 2 else MISMATCH
    if which == 'head':
        if q == 1:
            return GAP
        return MISMATCH
    raise ValueError("Unknown identity '%s'." % which)


def valid_triples(max_sum, min_p=1, min_q=1):
    for total in range(3, max_sum + 1):
        for p in range(min_p, total // 3 + 1):
            for q in range(max(p, min_q), (total - p) // 2 + 1):
                yield (p, q, total - p - q)


def _audit_entry(args):
    which, p, q, r = args
    report = audit(which, p, q, r)
    expected = expected_status(which, p, q, r)
    report['expected'] = expected
    report['documented'] = report['status'] == expected
    return report


def audit_grid(max_sum, identities=None, repair=False, workers=1,
               log_level=0):
    """Ledger of every audit at every valid triple with p + q + r <= max_sum

    The ledger passes when every entry has its documented status.

    """
    if identities is None:
        identities = identity_names + formula_names
    identities = list(identities)
    if repair:
        identities += [x for x in repair_names if x not in identities]
    for which in identities:
        if which not in audit_names:
            raise ValueError("Unknown identity '%s'." % which)
    tasks = [(which, p, q, r)
             for which in identities
             for p, q, r in valid_triples(max_sum)
             if identity_applies(which, p, q, r)]
    if log_level:
        print("Closed-form audit: %s, p + q + r <= %d, %d entries"
              % (", ".join(identities), max_sum, len(tasks)))
    if workers > 1:
        from multiprocessing import Pool
        pool = Pool(workers)
        try:
            entries = list(pool.imap(_audit_entry, tasks, chunksize=4))
        finally:
            pool.close()
            pool.join()
    else:
        entries = []
        for task in tasks:
            entries.append(_audit_entry(task))
            if log_level > 1:
                print("  %-12s %-12s %s" % (task[0], "(%d, %d, %d)" % task[1:],
                                            entries[-1]['status']))
    summary = {}
    for which in identities:
        counts = {PASS: 0, MISMATCH: 0, GAP: 0, 'undocumented': 0}
        for entry in entries:
            if entry['identity'] == which:
                counts[entry['status']] += 1
                if not entry['documented']:
                    counts['undocumented'] += 1
        summary[which] = counts
    if log_level:
        for which in identities:
            c = summary[which]
            print("  %-12s PASS %4d  MISMATCH %4d  GAP %4d  undocumented %d"
                  % (which, c[PASS], c[MISMATCH], c[GAP], c['undocumented']))
    mismatches = sum(1 for e in entries if e['status'] != PASS)
    return {'max_sum': max_sum,
            'identities': identities,
            'entries': entries,
            'summary': summary,
            'mismatches': mismatches,
            'passed': all(e['documented'] for e in entries)}


def injectivity_scan(table, sum_bound, limit=DEFAULT_SCAN_LIMIT,
                     log_level=0):
    """Distinct parameter triples give distinct table instantiations

    W and U run over 2 <= p <= q <= r, W1 and U1 over p = 1 < q <= r.

    """
    if table not in _scan_ranges:
        raise ValueError("Injectivity scans cover %s, not '%s'."
                         % (", ".join(sorted(_scan_ranges)), table))
    if sum_bound > limit:
        raise CapacityError("Sum bound %d exceeds the scan limit %d."
                            % (sum_bound, limit))
    min_p, min_q = _scan_ranges[table]
    seen = {}
    collisions = []
    checked = 0
    for p, q, r in valid_triples(sum_bound, min_p=min_p, min_q=min_q):
        if min_p == 1 and p != 1:
            continue
        key = instantiate_table(table, p=p, q=q, r=r)
        checked += 1
        if key in seen:
            collisions.append([list(seen[key]), [p, q, r]])
        else:
            seen[key] = (p, q, r)
    if log_level:
        print("Injectivity of %s for p + q + r <= %d: %d triples, %d "
              "collisions" % (table, sum_bound, checked, len(collisions)))
    return {'table': table,
            'sum_bound': sum_bound,
            'triples_checked': checked,
            'collisions': collisions,
            'passed': not collisions}
