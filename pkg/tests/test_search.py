import pytest

from parikhgrid import covering as C
from parikhgrid import kernel
from parikhgrid import search as S
from parikhgrid import vectors as V
from parikhgrid.errors import CapacityExceeded

from helpers import covering_word_exists_naive

# (k, sigma) -> expected shortest covering length
SHORTEST = {(2, 3): 7, (3, 3): 12, (2, 4): 12, (2, 5): 16, (4, 3): 19,
            (1, 3): 3, (2, 2): 4, (3, 2): 6, (4, 2): 8, (5, 2): 10}


class TestShortestCovering:
    @pytest.mark.parametrize("k,sigma", sorted(SHORTEST))
    def test_lengths_and_minimality(self, k, sigma):
        out = S.search_shortest_covering(S.SearchConfig(k=k, sigma=sigma))
        assert out.status == S.STATUS_FOUND
        assert len(out.witness) == SHORTEST[(k, sigma)]
        assert out.minimal
        assert C.verify(out.witness, k, sigma).is_covering

    def test_length_never_below_bound(self):
        for (k, sigma), length in SHORTEST.items():
            assert length >= C.bounds(k, sigma).shortest_lower_bound

    def test_k2_closed_form(self):
        for sigma in range(2, 6):
            out = S.search_shortest_covering(S.SearchConfig(k=2, sigma=sigma))
            expected = (sigma * (sigma + 1)) // 2 + (1 if sigma % 2
                                                     else sigma // 2)
            assert len(out.witness) == expected

    def test_max_len_refutation(self):
        out = S.search_shortest_covering(
            S.SearchConfig(k=3, sigma=3, max_len=11))
        assert out.status == S.STATUS_REFUTED
        assert out.refuted_up_to == 11

    def test_budget_exhaustion_reported(self):
        out = S.search_shortest_covering(
            S.SearchConfig(k=4, sigma=3, node_budget=50))
        assert out.status == S.STATUS_BUDGET


class TestPdbExistence:
    def test_4_3_refuted_at_18(self):
        out = S.search_pdb_existence(4, 3)
        assert out.status == S.STATUS_REFUTED
        assert out.refuted_up_to == 18

    def test_3_3_found(self):
        out = S.search_pdb_existence(3, 3)
        assert out.status == S.STATUS_FOUND
        assert C.verify(out.witness, 3, 3).is_pdb
        assert out.minimal

    def test_binary_found(self):
        for k in (2, 3, 5):
            out = S.search_pdb_existence(k, 2)
            assert out.status == S.STATUS_FOUND
            assert len(out.witness) == 2 * k

    @pytest.mark.skipif(kernel.KERNEL_NAME != "compiled",
                        reason="~2*10^7 nodes; slow on the pure kernel")
    def test_5_4_sixty_letter_word_found(self):
        out = S.search_pdb_existence(5, 4)
        assert out.status == S.STATUS_FOUND
        assert len(out.witness) == 60
        assert C.verify(out.witness, 5, 4).is_pdb


class TestMinimalityCertificates:
    """Refutations re-checked by plain enumeration with no pruning."""

    def test_2_3_state_space(self):
        # 3^6 words of length 6: pure-Python oracle
        assert not covering_word_exists_naive(2, 3, 6)

    def test_3_3_naive_kernel(self):
        tables = S._build_tables(3, 3, False)
        assert kernel.find_covering_naive(3, 3, 11, tables) is None

    def test_2_4_naive_kernel(self):
        tables = S._build_tables(2, 4, False)
        assert kernel.find_covering_naive(2, 4, 11, tables) is None

    def test_naive_finds_when_one_exists(self):
        tables = S._build_tables(2, 3, False)
        word = kernel.find_covering_naive(2, 3, 7, tables)
        assert word is not None
        rendered = V.Alphabet(3).indices_to_word(list(word))
        assert C.verify(rendered, 2, 3).is_covering

    def test_kernel_naive_matches_pure_oracle(self):
        # cross-check the kernel enumerator against itertools enumeration
        for k, sigma, length in [(2, 2, 3), (2, 2, 4), (2, 3, 6), (2, 3, 7),
                                 (3, 2, 5), (3, 2, 6)]:
            tables = S._build_tables(k, sigma, False)
            got = kernel.find_covering_naive(k, sigma, length, tables)
            assert (got is not None) == covering_word_exists_naive(
                k, sigma, length)

    @pytest.mark.skipif(kernel.KERNEL_NAME != "compiled",
                        reason="3^18 words need the compiled enumerator")
    def test_4_3_refutation_confirmed_over_full_space(self):
        # a length-18 covering word over three letters would have exactly
        # 15 windows for 15 vectors, i.e. be a perfect cover; enumerating
        # all 3^18 words with no pruning and no symmetry confirms there is
        # none, independently of the backtracking search
        tables = S._build_tables(4, 3, False)
        assert kernel.find_covering_naive(4, 3, 18, tables) is None


REGRESSION = [
    ("shortest", 2, 3), ("shortest", 3, 3), ("shortest", 2, 4), ("pdb", 4, 3),
]


class TestPruningRules:
    @pytest.mark.parametrize("target,k,sigma", REGRESSION)
    @pytest.mark.parametrize("dropped", sorted(S.ALL_RULES))
    def test_each_rule_removable(self, target, k, sigma, dropped):
        rules = frozenset(S.ALL_RULES - {dropped})
        reference = self._run(target, k, sigma, S.ALL_RULES)
        got = self._run(target, k, sigma, rules)
        assert got.status == reference.status
        assert got.witness == reference.witness
        assert got.minimal == reference.minimal

    @staticmethod
    def _run(target, k, sigma, rules):
        cfg = S.SearchConfig(k=k, sigma=sigma, rules=rules)
        if target == "pdb":
            return S.search_pdb_existence(k, sigma, cfg)
        return S.search_shortest_covering(cfg)

    def test_letter_budget_rule_matches_count_bound(self):
        # the rule prunes exactly when some letter cannot reach the minimum
        for k, sigma in [(2, 3), (3, 3), (2, 4)]:
            m_min = C.min_letter_occurrences(k, sigma)
            out = S.search_shortest_covering(S.SearchConfig(k=k, sigma=sigma))
            counts = V.pv_of(out.witness, sigma)
            assert min(counts) >= m_min


class TestDeterminism:
    def test_witness_stable_across_worker_counts(self):
        outs = [S.search_shortest_covering(
            S.SearchConfig(k=3, sigma=3, worker_count=w)) for w in (1, 2, 4)]
        assert len({o.witness for o in outs}) == 1
        assert len({o.status for o in outs}) == 1

    def test_repeat_runs_identical(self):
        a = S.search_shortest_covering(S.SearchConfig(k=2, sigma=4))
        b = S.search_shortest_covering(S.SearchConfig(k=2, sigma=4))
        assert a.witness == b.witness and a.stats.nodes == b.stats.nodes

    def test_split_depth_does_not_change_witness(self):
        outs = [S.search_shortest_covering(
            S.SearchConfig(k=2, sigma=4, split_depth=d)) for d in (0, 2, 5)]
        assert len({o.witness for o in outs}) == 1


class TestEnumerateAllPdb:
    def test_3_3_single_class(self):
        reps = S.enumerate_all_pdb(3, 3)
        assert reps == ["abbbcccaaabc"]

    def test_3_3_confirmed_over_full_space(self):
        # from scratch: scan all 3^12 words for perfect covers; the orbit
        # has all 12 images distinct and forms a single class
        import itertools
        words = []
        for tup in itertools.product("abc", repeat=12):
            word = "".join(tup)
            counts = [word[:3].count(c) for c in "abc"]
            seen = {tuple(counts)}
            ok = True
            for i in range(3, 12):
                counts["abc".index(word[i - 3])] -= 1
                counts["abc".index(word[i])] += 1
                key = tuple(counts)
                if key in seen:
                    ok = False
                    break
                seen.add(key)
            if ok and len(seen) == 10:
                words.append(word)
        assert len(words) == 12
        assert {S.canonical_form(w, 3) for w in words} == {"abbbcccaaabc"}

    def test_4_3_empty(self):
        assert S.enumerate_all_pdb(4, 3) == []

    def test_binary_single_class(self):
        for k in range(2, 7):
            assert S.enumerate_all_pdb(k, 2) == ["a" * k + "b" * k]

    def test_gate(self):
        with pytest.raises(CapacityExceeded):
            S.enumerate_all_pdb(4, 4)

    def test_canonical_form_is_orbit_minimum(self):
        word = "abbbcccaaabc"
        images = set()
        import itertools
        for perm in itertools.permutations("abc"):
            table = str.maketrans("abc", "".join(perm))
            for w in (word, word[::-1]):
                images.add(w.translate(table))
        assert S.canonical_form(word, 3) == min(images)


class TestExistenceAtLength:
    def test_found_at_exact_length(self):
        cfg = S.SearchConfig(k=2, sigma=3, target=S.TARGET_AT_LENGTH,
                             target_length=8)
        out = S.run_search(cfg)
        assert out.status == S.STATUS_FOUND
        assert len(out.witness) == 8
        assert not out.minimal

    def test_refuted_below_shortest(self):
        cfg = S.SearchConfig(k=2, sigma=3, target=S.TARGET_AT_LENGTH,
                             target_length=6)
        out = S.run_search(cfg)
        assert out.status == S.STATUS_REFUTED


class TestCoveringEnumeration:
    def test_words_sorted_and_covering(self):
        words = list(S.iter_covering_words(2, 3, 8))
        assert words[0] == "aabbcca"
        assert all(C.verify(w, 2, 3).is_covering for w in words)
        lengths = [len(w) for w in words]
        assert lengths == sorted(lengths)

    def test_every_found_word_obeys_lower_order_regression(self):
        # covering words over two letters, and k<=3 words generally, stay
        # covering one order down
        for k, sigma, max_len in [(3, 2, 7), (4, 2, 9), (3, 3, 12)]:
            for word in S.iter_covering_words(k, sigma, max_len):
                below = V.parikh_set(word, k - 1, sigma).members
                assert below == set(V.enumerate_pv(k - 1, sigma))
