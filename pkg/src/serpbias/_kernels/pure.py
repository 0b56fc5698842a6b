"""Pure-Python kernel implementations.

These are the reference semantics for the hot inner loops; the compiled
``_native`` extension mirrors them operation-for-operation so that either
backend yields the same results up to floating-point noise. Within one
backend every function is deterministic: identical inputs give
bit-identical outputs.
"""

import math

BACKEND = "pure"

# Token kinds consumed by score_adjusted_mean.
KIND_PLAIN = 0
KIND_ENTRY = 1
KIND_INTENSIFIER = 2
KIND_NEGATOR = 3


def score_adjusted_mean(values, kinds, window, negation_factor):
    """Mean polarity of lexicon-entry tokens after context adjustment.

    ``values[i]`` holds the base polarity for entry tokens and the
    multiplicative factor for intensifier tokens; it is ignored for the
    other kinds.  For each entry token, every intensifier within the
    preceding ``window`` tokens multiplies the polarity, and a single
    negation flip (``negation_factor``) applies if any negator occurs in
    that window.  Returns 0.0 when no entry token is present; the mean is
    clamped to [-1, 1].
    """
    total = 0.0
    count = 0
    n = len(kinds)
    for i in range(n):
        if kinds[i] != KIND_ENTRY:
            continue
        v = values[i]
        lo = i - window
        if lo < 0:
            lo = 0
        negated = False
        for j in range(lo, i):
            kj = kinds[j]
            if kj == KIND_INTENSIFIER:
                v *= values[j]
            elif kj == KIND_NEGATOR:
                negated = True
        if negated:
            v *= negation_factor
        total += v
        count += 1
    if count == 0:
        return 0.0
    mean = total / count
    if mean < -1.0:
        return -1.0
    if mean > 1.0:
        return 1.0
    return mean


def ndcg(scores, k, exponential=False):
    """Rank-discounted gain of ``scores[:k]`` relative to the ideal order.

    Gains are the scores themselves, or ``2**s - 1`` when ``exponential``
    is set; position ``i`` (1-based) is discounted by ``log2(i + 1)``.
    The ideal ordering is the top-``k`` of the whole input sorted
    descending.  An all-zero ideal yields 0.0 by convention.
    """
    m = min(k, len(scores))
    if m == 0:
        return 0.0
    dcg = 0.0
    for i in range(m):
        g = (2.0 ** scores[i] - 1.0) if exponential else scores[i]
        dcg += g / math.log2(i + 2.0)
    ideal = sorted(scores, reverse=True)
    idcg = 0.0
    for i in range(m):
        g = (2.0 ** ideal[i] - 1.0) if exponential else ideal[i]
        idcg += g / math.log2(i + 2.0)
    if idcg == 0.0:
        return 0.0
    return dcg / idcg


def expected_average_precision(probabilities):
    """Exact E[AP] when document ``i`` is relevant with probability ``p_i``.

    Relevance draws are independent; an outcome's AP is the mean of the
    precision at each relevant rank, and 0 when nothing is relevant.  The
    expectation is computed exactly from the distributions of the number
    of relevant documents before and after each rank (each a
    Poisson-binomial, and the two are independent):

        E[AP] = sum_i (p_i / i) * E[(1 + T_i) / (1 + T_i + U_i)]

    where T_i / U_i count relevant documents at ranks < i / > i.  Cost is
    O(n^3); exact for degenerate probabilities.
    """
    n = len(probabilities)
    if n == 0:
        return 0.0
    # prefix[i] = distribution of the relevant count among ranks 1..i
    prefix = [[1.0]]
    for p in probabilities:
        prev = prefix[-1]
        nxt = [0.0] * (len(prev) + 1)
        q = 1.0 - p
        for r in range(len(prev)):
            w = prev[r]
            nxt[r] += w * q
            nxt[r + 1] += w * p
        prefix.append(nxt)
    # suffix[i] = distribution of the relevant count among ranks i..n
    suffix = [None] * (n + 2)
    cur = [1.0]
    suffix[n + 1] = cur
    for i in range(n, 0, -1):
        p = probabilities[i - 1]
        nxt = [0.0] * (len(cur) + 1)
        q = 1.0 - p
        for r in range(len(cur)):
            w = cur[r]
            nxt[r] += w * q
            nxt[r + 1] += w * p
        cur = nxt
        suffix[i] = cur
    total = 0.0
    for i in range(1, n + 1):
        p = probabilities[i - 1]
        if p == 0.0:
            continue
        before = prefix[i - 1]
        after = suffix[i + 1]
        e = 0.0
        for t in range(len(before)):
            wt = before[t]
            if wt == 0.0:
                continue
            for u in range(len(after)):
                e += wt * after[u] * (1.0 + t) / (1.0 + t + u)
        total += (p / i) * e
    return total


def fair_metric_samples(lists, exponential=False):
    """Per-list NDCG and expected-AP scores for random binary score lists.

    Returns ``(ndcg_samples, ap_samples)``; binary {0, 1} scores are
    already valid normalized inputs, so each list is scored at its full
    length.
    """
    ndcg_samples = []
    ap_samples = []
    for scores in lists:
        for s in scores:
            if s != 0 and s != 1:
                raise ValueError(f"fair lists must contain binary scores, got {s!r}")
        ndcg_samples.append(ndcg(scores, len(scores), exponential))
        ap_samples.append(expected_average_precision(scores))
    return ndcg_samples, ap_samples
