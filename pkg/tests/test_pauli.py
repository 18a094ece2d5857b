"""Signed Pauli-word algebra, parity structures, and joint eigenrays."""

from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from ksrays import builtin
from ksrays.pauli import (
    OPERATOR_LINES,
    PROOF_LINES,
    SATURATED_WORDS,
    PauliWord,
    SignedWord,
    apply_word,
    commutes,
    eight_edge_proof,
    enumerate_parity_tuples,
    four_edges,
    joint_eigenrays,
    pauli_mul,
    product_sign,
    verify_parity_proof,
    word,
    word_from_index,
)

words3 = st.builds(
    PauliWord, st.tuples(*[st.integers(0, 3)] * 3)
)


def matrix(w: PauliWord):
    """Dense integer matrix of the word in the real-Y convention."""
    dim = 1 << w.n_qubits
    cols = []
    for b in range(dim):
        vec = [0] * dim
        vec[b] = 1
        cols.append(apply_word(w, vec))
    # apply_word gives W e_b; assemble column-major.
    return [[cols[b][a] for b in range(dim)] for a in range(dim)]


def mat_mul(a, b):
    n = len(a)
    return [
        [sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)]
        for i in range(n)
    ]


class TestAlgebra:
    def test_parse_and_print(self):
        w = word("IXZ")
        assert str(w) == "IXZ"
        with pytest.raises(ValueError):
            word("IXW")

    def test_index_round_trip(self):
        for alpha in range(64):
            assert word_from_index(alpha, 3).index == alpha

    @given(words3, words3)
    def test_mul_matches_matrix_product(self, a, b):
        got = pauli_mul(SignedWord(1, a), SignedWord(1, b))
        lhs = mat_mul(matrix(a), matrix(b))
        rhs = [[got.sign * x for x in row] for row in matrix(got.word)]
        assert lhs == rhs

    @given(words3, words3)
    def test_commutes_matches_matrices(self, a, b):
        ab = mat_mul(matrix(a), matrix(b))
        ba = mat_mul(matrix(b), matrix(a))
        assert commutes(a, b) == (ab == ba)

    @given(words3)
    def test_square_is_plus_or_minus_identity(self, a):
        sq = pauli_mul(SignedWord(1, a), SignedWord(1, a))
        assert sq.word.is_identity()
        # Squares to -1 exactly when the Y count is odd (real convention).
        y_count = sum(1 for c in a.codes if c == 2)
        assert sq.sign == (-1) ** y_count

    def test_product_sign_identity_detection(self):
        assert product_sign([word("XXI"), word("XXI")]) == 1
        assert product_sign([word("XII"), word("IXI"), word("XXI")]) == 1
        assert product_sign([word("XII"), word("IXI")]) is None


class TestParityTuples:
    def test_one_qubit_has_no_tuples(self):
        assert enumerate_parity_tuples(1, 3) == []

    def test_two_qubit_triples(self):
        triples = enumerate_parity_tuples(2, 3)
        assert len(triples) > 0
        for ws, sign in triples:
            assert len(set(ws)) == 3
            for a, b in combinations(ws, 2):
                assert commutes(a, b)
            assert product_sign(list(ws)) == sign

    def test_three_qubit_seven_tuple_count(self):
        tuples = enumerate_parity_tuples(3, 7)
        assert len(tuples) == 135

    def test_operator_lines_are_parity_tuples(self):
        tuples = {frozenset(ws) for ws, _ in enumerate_parity_tuples(3, 7)}
        for line in OPERATOR_LINES:
            assert frozenset(line) in tuples


class TestEigenrays:
    def test_line_produces_orthonormal_octuple(self, m_config):
        rays = joint_eigenrays(OPERATOR_LINES[0])
        assert len(rays) == 8
        assert len(set(rays)) == 8
        from ksrays.rays import inner_product

        for a, b in combinations(rays, 2):
            assert inner_product(a, b).is_zero()

    def test_eigenray_is_fixed_by_each_word(self):
        rays = joint_eigenrays(OPERATOR_LINES[1])
        for ray in rays:
            vec = [c.re for c in ray.coords]
            for w in OPERATOR_LINES[1]:
                out = apply_word(w, vec)
                assert out == vec or out == [-x for x in vec]

    def test_all_lines_rebuild_the_64_ray_set(self, m_config):
        rays = set()
        for line in OPERATOR_LINES:
            rays.update(joint_eigenrays(line))
        assert rays == set(m_config.rays)

    def test_wrong_arity_rejected(self):
        with pytest.raises(ValueError):
            joint_eigenrays([word("XII")] * 6)


class TestParityProofs:
    def test_eight_edge_proof_verifies(self):
        proof = eight_edge_proof()
        assert len(proof.edges) == 8
        assert verify_parity_proof(proof)

    def test_eight_edge_proof_degrees(self):
        proof = eight_edge_proof()
        degree = [0] * len(proof.vertices)
        for members, _ in proof.edges:
            for v in members:
                degree[v] += 1
        by_word = {str(proof.vertices[i]): d for i, d in enumerate(degree)}
        assert by_word["XZZ"] == 4
        assert all(d == 2 for w, d in by_word.items() if w != "XZZ")

    def test_sign_tampering_detected(self):
        proof = eight_edge_proof()
        members, sign = proof.edges[0]
        bad = type(proof)(proof.vertices, ((members, -sign),) + proof.edges[1:])
        with pytest.raises(ValueError):
            verify_parity_proof(bad)

    def test_four_edge_counts_over_saturated_words(self):
        neg, pos = four_edges(SATURATED_WORDS)
        assert len(neg) == 24
        assert len(pos) == 54

    def test_proof_lines_signs_recomputed(self):
        for text, sign in PROOF_LINES:
            ws = [word(t) for t in text.split()]
            assert product_sign(ws) == sign
