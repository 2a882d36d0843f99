"""Pure-Python labeling kernel; mirrors ``_kernels.pyx`` line for line.

The problem is a list of variables with finite domains and factors with
dense integer tables over their scopes.  A table entry is ``-1`` for an
inadmissible combination, ``0`` for weight one, and ``w > 0`` for the
weight with id ``w``.  Weight ``w`` stands for the product
``prod g^e`` over the sparse pairs ``(g, e)`` in ``wvecs[w]``, with the
generators ``0..ngens-1`` chosen by the caller.  The search assigns
variables in order, checks each factor as soon as its last variable is
set, and returns a histogram mapping generator exponent vectors to the
number of labelings that produce them.
"""

from __future__ import annotations


def enumerate_histogram(domains, factors, checks, wvecs, ngens, first_values=None):
    """``factors[f] = (scope, strides, table)``; ``checks[i]`` lists factors completed at variable ``i``."""
    n = len(domains)
    assign = [0] * n
    counts = [0] * ngens
    hist: dict[tuple, int] = {}
    # factors without variables act once, up front
    for scope, strides, table in factors:
        if not scope:
            w = table[0]
            if w < 0:
                return hist
            for g, e in wvecs[w]:
                counts[g] += e
    if n == 0:
        hist[tuple(counts)] = 1
        return hist

    def rec(i):
        values = first_values if (i == 0 and first_values is not None) else range(domains[i])
        for v in values:
            assign[i] = v
            done = []
            ok = True
            for f in checks[i]:
                scope, strides, table = factors[f]
                idx = 0
                for s, st in zip(scope, strides):
                    idx += assign[s] * st
                w = table[idx]
                if w < 0:
                    ok = False
                    break
                if w:
                    for g, e in wvecs[w]:
                        counts[g] += e
                    done.append(w)
            if ok:
                if i + 1 == n:
                    key = tuple(counts)
                    hist[key] = hist.get(key, 0) + 1
                else:
                    rec(i + 1)
            for w in done:
                for g, e in wvecs[w]:
                    counts[g] -= e

    rec(0)
    return hist
