# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled search kernel.

Twin of _kernel_py.py: same entry points, same exploration order, same node
accounting, C loops for the inner search.  Keep the two in sync; the parity
test compares full traces (solutions and node counts) on shared instances.
"""

from libc.stdlib cimport calloc, free
from libc.string cimport memcpy

PROGRESS_INTERVAL = 10_000_000

RULE_DUPLICATE = 1
RULE_REMAINING = 2
RULE_LETTER_BUDGET = 4
RULE_CONNECTIVITY = 8
ALL_RULES = 15

KERNEL_NAME = "compiled"

cdef long _PROGRESS = 10_000_000


cdef struct SearchState:
    int k
    int sigma
    int length
    int n_vec
    int pdb_only
    int rule_dup
    int rule_rem
    int rule_bud
    int rule_con
    int m_min
    int diameter
    int collect_limit
    long node_budget
    long nodes
    int max_depth
    int exhausted
    int code
    int uncovered
    int dups
    int* word
    int* counts
    int* mult
    long* powers
    int* code_to_index
    int* dist


cdef inline void _place(SearchState* s, int pos, int c):
    cdef int idx
    if pos >= s.k:
        s.code -= s.powers[s.word[pos - s.k]]
    s.code += s.powers[c]
    s.word[pos] = c
    s.counts[c] += 1
    if pos >= s.k - 1:
        idx = s.code_to_index[s.code]
        s.mult[idx] += 1
        if s.mult[idx] == 1:
            s.uncovered -= 1
        else:
            s.dups += 1
    if pos + 1 > s.max_depth:
        s.max_depth = pos + 1


cdef inline void _unplace(SearchState* s, int pos, int c):
    cdef int idx
    if pos >= s.k - 1:
        idx = s.code_to_index[s.code]
        s.mult[idx] -= 1
        if s.mult[idx] == 0:
            s.uncovered += 1
        else:
            s.dups -= 1
    s.counts[c] -= 1
    s.code -= s.powers[c]
    if pos >= s.k:
        s.code += s.powers[s.word[pos - s.k]]


cdef inline int _pruned(SearchState* s, int pos):
    cdef int rem = s.length - 1 - pos
    cdef int x, idx
    cdef long cur
    if s.rule_rem and pos >= s.k - 1 and rem < s.uncovered:
        return 1
    if s.rule_bud:
        for x in range(s.sigma):
            if s.counts[x] + rem < s.m_min:
                return 1
    if s.rule_con and pos >= s.k - 1 and rem < s.diameter and s.uncovered > 0:
        cur = <long>s.code_to_index[s.code] * s.n_vec
        for idx in range(s.n_vec):
            if s.mult[idx] == 0 and s.dist[cur + idx] > rem:
                return 1
    return 0


cdef int _dfs(SearchState* s, int pos, int used, list solutions,
              object progress) except -1:
    cdef int top = used + 1 if used < s.sigma else s.sigma
    cdef int c, stop, nxt
    cdef bytes sol
    for c in range(top):
        s.nodes += 1
        if s.node_budget and s.nodes > s.node_budget:
            s.exhausted = 1
            return 1
        if progress is not None and s.nodes % _PROGRESS == 0:
            progress(s.nodes, pos, len(solutions))
        if s.rule_dup and pos >= s.k - 1:
            nxt = s.code + <int>s.powers[c]
            if pos >= s.k:
                nxt -= <int>s.powers[s.word[pos - s.k]]
            if s.mult[s.code_to_index[nxt]] > 0:
                continue
        _place(s, pos, c)
        stop = 0
        if not _pruned(s, pos):
            if pos + 1 == s.length:
                if s.uncovered == 0 and (not s.pdb_only or s.dups == 0):
                    sol = bytes(bytearray([s.word[i] for i in range(s.length)]))
                    solutions.append(sol)
                    if 0 < s.collect_limit <= len(solutions):
                        stop = 1
            else:
                stop = _dfs(s, pos + 1, used if c < used else c + 1,
                            solutions, progress)
        _unplace(s, pos, c)
        if stop:
            return 1
    return 0


def fixed_length_search(k, sigma, length, tables, pdb_only, rules, prefix,
                        collect_limit, node_budget, progress=None):
    """See _kernel_py.fixed_length_search; identical contract."""
    n_vec, powers, code_to_index, m_min, dist, diameter = tables
    cdef SearchState s
    cdef int i, c, used, ok
    cdef list solutions = []

    s.k = k
    s.sigma = sigma
    s.length = length
    s.n_vec = n_vec
    s.pdb_only = 1 if pdb_only else 0
    s.rule_dup = 1 if (rules & RULE_DUPLICATE) and pdb_only else 0
    s.rule_rem = 1 if rules & RULE_REMAINING else 0
    s.rule_bud = 1 if rules & RULE_LETTER_BUDGET else 0
    s.rule_con = 1 if (rules & RULE_CONNECTIVITY) and dist is not None else 0
    s.m_min = m_min
    s.diameter = diameter if diameter is not None else 0
    s.collect_limit = collect_limit
    s.node_budget = node_budget if node_budget else 0
    s.nodes = 0
    s.max_depth = 0
    s.exhausted = 0
    s.code = 0
    s.uncovered = n_vec
    s.dups = 0

    s.word = <int*>calloc(length if length > 0 else 1, sizeof(int))
    s.counts = <int*>calloc(sigma, sizeof(int))
    s.mult = <int*>calloc(n_vec, sizeof(int))
    s.powers = <long*>calloc(sigma, sizeof(long))
    s.code_to_index = <int*>calloc(len(code_to_index), sizeof(int))
    s.dist = <int*>calloc(n_vec * n_vec if s.rule_con else 1, sizeof(int))
    if (s.word == NULL or s.counts == NULL or s.mult == NULL
            or s.powers == NULL or s.code_to_index == NULL or s.dist == NULL):
        _free_state(&s)
        raise MemoryError()

    try:
        for i in range(sigma):
            s.powers[i] = powers[i]
        for i in range(len(code_to_index)):
            s.code_to_index[i] = code_to_index[i]
        if s.rule_con:
            for i in range(n_vec * n_vec):
                s.dist[i] = dist[i]

        used = 0
        ok = 1
        for i in range(len(prefix)):
            c = prefix[i]
            _place(&s, i, c)
            if c >= used:
                used = c + 1
            if _pruned(&s, i):
                ok = 0
                break
        if ok and len(prefix) < length:
            _dfs(&s, len(prefix), used, solutions, progress)
        elif ok and s.uncovered == 0 and (not s.pdb_only or s.dups == 0):
            solutions.append(bytes(bytearray([s.word[i] for i in range(length)])))
        return (not s.exhausted, solutions, s.nodes, s.max_depth)
    finally:
        _free_state(&s)


cdef void _free_state(SearchState* s):
    free(s.word)
    free(s.counts)
    free(s.mult)
    free(s.powers)
    free(s.code_to_index)
    free(s.dist)


cdef int _naive_rec(int pos, int code, int uncovered, int k, int sigma,
                    int length, int* word, int* mult, long* powers,
                    int* code_to_index):
    cdef int c, ncode, idx, covered_now, hit
    for c in range(sigma):
        word[pos] = c
        ncode = code + <int>powers[c]
        if pos >= k:
            ncode -= <int>powers[word[pos - k]]
        if pos >= k - 1:
            idx = code_to_index[ncode]
            mult[idx] += 1
            covered_now = uncovered - 1 if mult[idx] == 1 else uncovered
        else:
            idx = -1
            covered_now = uncovered
        if pos + 1 == length:
            hit = 1 if covered_now == 0 else 0
        else:
            hit = _naive_rec(pos + 1, ncode, covered_now, k, sigma, length,
                             word, mult, powers, code_to_index)
        if idx >= 0:
            mult[idx] -= 1
        if hit:
            return 1
    return 0


def find_covering_naive(k, sigma, length, tables):
    """See _kernel_py.find_covering_naive; identical contract."""
    n_vec, powers, code_to_index, _m_min, _dist, _diam = tables
    if length < 1:
        return None
    cdef int* word = <int*>calloc(length, sizeof(int))
    cdef int* mult = <int*>calloc(n_vec, sizeof(int))
    cdef long* cpowers = <long*>calloc(sigma, sizeof(long))
    cdef int* ctable = <int*>calloc(len(code_to_index), sizeof(int))
    if word == NULL or mult == NULL or cpowers == NULL or ctable == NULL:
        free(word); free(mult); free(cpowers); free(ctable)
        raise MemoryError()
    cdef int i, hit
    try:
        for i in range(sigma):
            cpowers[i] = powers[i]
        for i in range(len(code_to_index)):
            ctable[i] = code_to_index[i]
        hit = _naive_rec(0, 0, n_vec, k, sigma, length, word, mult, cpowers,
                         ctable)
        if hit:
            return bytes(bytearray([word[i] for i in range(length)]))
        return None
    finally:
        free(word); free(mult); free(cpowers); free(ctable)
