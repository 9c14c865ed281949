"""Brute-force reference implementation, deliberately sharing no code with tsim.

Works on plain lists of count rows. Standard deviations come from the
``statistics`` module; every item's contribution is written out by hand.
"""

import math
import statistics


def column_std(rows, sample=True):
    cols = list(zip(*rows))
    fn = statistics.stdev if sample else statistics.pstdev
    return [fn([float(x) for x in col]) for col in cols]


def naive_std(col, sample=True):
    """Two-pass mean/deviation."""
    n = len(col)
    mean = sum(col) / n
    ss = sum((x - mean) ** 2 for x in col)
    return math.sqrt(ss / (n - 1 if sample else n))


def item_terms(a, b, sigmas):
    """(alpha, beta) per item for count rows a, b."""
    terms = []
    for x, y, s in zip(a, b, sigmas):
        if x == 0 and y == 0:
            terms.append((0.0, 0))
            continue
        diff = abs(x - y)
        if diff == 0:
            w = 1.0
        elif s == 0:
            w = 0.0
        else:
            w = math.exp(-((diff / s) ** 2))
        if x > 0 and y > 0:
            terms.append((0.5 * (1 + w), 1))
        else:
            terms.append((-w, 1))
    return terms


def tsim(a, b, sigmas, lam=1.0):
    terms = item_terms(a, b, sigmas)
    num = math.fsum(t[0] for t in terms)
    den = sum(t[1] for t in terms)
    s = num / den if den else -1.0
    return (s + 1) / (lam + 1)


def tsim_matrix(rows, sample=True, lam=1.0):
    sig = column_std(rows, sample)
    n = len(rows)
    return [[tsim(rows[i], rows[j], sig, lam) for j in range(n)] for i in range(n)]


def components(n, edges):
    """Connected components by repeated breadth-first search."""
    adj = {i: set() for i in range(n)}
    for i, j in edges:
        adj[i].add(j)
        adj[j].add(i)
    seen, out = set(), []
    for start in range(n):
        if start in seen:
            continue
        comp, frontier = {start}, [start]
        while frontier:
            nxt = []
            for v in frontier:
                for w in adj[v] - comp:
                    comp.add(w)
                    nxt.append(w)
            frontier = nxt
        seen |= comp
        out.append(frozenset(comp))
    return out


def threshold_components(values, threshold):
    n = len(values)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if values[i][j] >= threshold]
    return components(n, edges)
