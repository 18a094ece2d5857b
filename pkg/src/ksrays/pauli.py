"""n-qubit Pauli-word algebra in the real-Y convention, and parity proofs.

Words are tensor products of the real 2x2 matrices I, X, Y = [[0,1],[-1,0]],
Z.  Products of such words stay in +-{words}, so every signed quantity in
this module is an exact integer.  Letter position 0 acts on the least
significant bit of the 2^n-dimensional index.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .rays import Ray, make_ray
from math import gcd

LETTERS = "IXYZ"

# letter codes: I=0, X=1, Y=2, Z=3.
# _MUL[a][b] = (sign, code) for the 2x2 product A*B in the real-Y
# convention; the test suite re-derives this table from integer matrix
# products.
_MUL = (
    ((1, 0), (1, 1), (1, 2), (1, 3)),
    ((1, 1), (1, 0), (-1, 3), (-1, 2)),
    ((1, 2), (1, 3), (-1, 0), (-1, 1)),
    ((1, 3), (1, 2), (1, 1), (1, 0)),
)


@dataclass(frozen=True)
class PauliWord:
    """Tensor word over {I, X, Y, Z}; codes[k] is the letter on qubit k."""

    codes: tuple[int, ...]

    @property
    def n_qubits(self) -> int:
        return len(self.codes)

    @property
    def index(self) -> int:
        """Encoded index: sum of code_k * 4^k."""
        return sum(c << (2 * k) for k, c in enumerate(self.codes))

    def __str__(self) -> str:
        return "".join(LETTERS[c] for c in self.codes)

    def is_identity(self) -> bool:
        return all(c == 0 for c in self.codes)

    def y_count(self) -> int:
        return sum(1 for c in self.codes if c == 2)


@dataclass(frozen=True)
class SignedWord:
    sign: int
    word: PauliWord

    def __str__(self) -> str:
        return ("+" if self.sign > 0 else "-") + str(self.word)


def word(text: str) -> PauliWord:
    """Parse compact notation such as 'IXX'."""
    try:
        return PauliWord(tuple(LETTERS.index(ch) for ch in text.upper()))
    except ValueError as exc:
        raise ValueError(f"bad Pauli word {text!r}") from exc


def word_from_index(alpha: int, n_qubits: int) -> PauliWord:
    return PauliWord(
        tuple((alpha >> (2 * k)) & 3 for k in range(n_qubits))
    )


def pauli_mul(a: SignedWord, b: SignedWord) -> SignedWord:
    """Exact signed product, per-qubit lookup with sign accumulation."""
    if a.word.n_qubits != b.word.n_qubits:
        raise ValueError("qubit count mismatch")
    sign = a.sign * b.sign
    codes = []
    for ca, cb in zip(a.word.codes, b.word.codes):
        s, c = _MUL[ca][cb]
        sign *= s
        codes.append(c)
    return SignedWord(sign, PauliWord(tuple(codes)))


def commutes(a: PauliWord, b: PauliWord) -> bool:
    """True iff the words anticommute on an even number of positions."""
    if a.n_qubits != b.n_qubits:
        raise ValueError("qubit count mismatch")
    odd = 0
    for ca, cb in zip(a.codes, b.codes):
        if ca and cb and ca != cb:
            odd ^= 1
    return odd == 0


def product_sign(words) -> int | None:
    """Sign s if the ordered product of the words is s * identity, else None."""
    acc = SignedWord(1, PauliWord((0,) * words[0].n_qubits))
    for w in words:
        acc = pauli_mul(acc, SignedWord(1, w))
    return acc.sign if acc.word.is_identity() else None


def enumerate_parity_tuples(n_qubits: int, s: int):
    """All index-increasing s-tuples of distinct non-identity, mutually
    commuting words whose product is +-identity; returns
    [(words, sign), ...] sorted by encoded indices."""
    total = 4**n_qubits
    words = [word_from_index(a, n_qubits) for a in range(1, total)]
    m = len(words)
    compat = [0] * m
    for i in range(m):
        for j in range(i + 1, m):
            if commutes(words[i], words[j]):
                compat[i] |= 1 << j

    out = []
    stack: list[int] = []

    def rec(cand: int, depth: int):
        while cand:
            low = cand & -cand
            cand ^= low
            i = low.bit_length() - 1
            stack.append(i)
            if depth + 1 == s:
                tup = tuple(words[k] for k in stack)
                sign = product_sign(tup)
                if sign is not None:
                    out.append((tup, sign))
            else:
                nxt = cand & compat[i]
                if nxt.bit_count() >= s - depth - 1:
                    rec(nxt, depth + 1)
            stack.pop()

    rec((1 << m) - 1, 0)
    return out


# --- word action and joint eigenrays ------------------------------------

def apply_word(w: PauliWord, vec: list[int]) -> list[int]:
    """Apply the (real, signed-permutation) word to an integer vector."""
    n = w.n_qubits
    dim = 1 << n
    if len(vec) != dim:
        raise ValueError("vector length mismatch")
    out = [0] * dim
    flip = 0
    for k, c in enumerate(w.codes):
        if c in (1, 2):  # X or Y flip bit k
            flip |= 1 << k
    for j, x in enumerate(vec):
        if x == 0:
            continue
        i = j ^ flip
        sign = 1
        for k, c in enumerate(w.codes):
            bit = (j >> k) & 1
            if c == 2:  # Y: e0 -> -e1, e1 -> e0
                if bit == 0:
                    sign = -sign
            elif c == 3:  # Z: e1 -> -e1
                if bit:
                    sign = -sign
        out[i] += sign * x
    return out


def _symplectic_bits(w: PauliWord) -> int:
    bits = 0
    for k, c in enumerate(w.codes):
        x = 1 if c in (1, 2) else 0
        z = 1 if c in (2, 3) else 0
        bits |= (x << (2 * k)) | (z << (2 * k + 1))
    return bits


def _independent_triple(words) -> list[int]:
    """Indices of words forming an F2-independent generating triple."""
    pivots: dict[int, int] = {}  # leading-bit position -> reduced vector
    chosen: list[int] = []
    for i, w in enumerate(words):
        v = _symplectic_bits(w)
        while v:
            p = v.bit_length() - 1
            if p not in pivots:
                pivots[p] = v
                chosen.append(i)
                break
            v ^= pivots[p]
        if len(chosen) == 3:
            return chosen
    raise ValueError("words do not generate a maximal abelian subgroup")


def joint_eigenrays(words) -> list[Ray]:
    """The 8 joint eigenrays of 7 commuting 3-qubit words, exactly.

    Each word must square to +identity (even Y count).  Projectors
    (1 +- W)/2 for three independent generators are applied to standard
    basis vectors; the common power of two is scaled out at the end.
    """
    words = list(words)
    if len(words) != 7 or any(w.n_qubits != 3 for w in words):
        raise ValueError("expected 7 three-qubit words")
    for w in words:
        if w.y_count() % 2:
            raise ValueError(f"{w} has odd Y count (squares to -identity)")
    for a, b in combinations(words, 2):
        if not commutes(a, b):
            raise ValueError(f"{a} and {b} do not commute")
    gens = [words[i] for i in _independent_triple(words)]
    dim = 8
    rays = []
    for signs in (
        (s0, s1, s2) for s0 in (1, -1) for s1 in (1, -1) for s2 in (1, -1)
    ):
        vec = None
        for j in range(dim):
            v = [0] * dim
            v[j] = 1
            for g, s in zip(gens, signs):
                gv = apply_word(g, v)
                v = [a + s * b for a, b in zip(v, gv)]
            if any(v):
                vec = v
                break
        if vec is None:
            raise ValueError("empty joint eigenspace; generators inconsistent")
        g0 = 0
        for x in vec:
            g0 = gcd(g0, abs(x))
        rays.append(make_ray([x // g0 for x in vec]))
    rays.sort(key=lambda r: tuple((c.re, c.im) for c in r.coords))
    return rays


# --- parity-proof hypergraphs -------------------------------------------

@dataclass(frozen=True)
class SignedHypergraph:
    """Hypergraph with mutually commuting edges of signed word products."""

    vertices: tuple[PauliWord, ...]
    edges: tuple[tuple[tuple[int, ...], int], ...]  # (vertex indices, sign)


def verify_parity_proof(h: SignedHypergraph) -> bool:
    """Odd number of negative edges and even degree at every vertex.

    Edge signs are recomputed from the word products; a mismatch raises.
    """
    degree = [0] * len(h.vertices)
    negatives = 0
    for members, sign in h.edges:
        ws = [h.vertices[i] for i in members]
        for a, b in combinations(ws, 2):
            if not commutes(a, b):
                raise ValueError("edge contains non-commuting words")
        true_sign = product_sign(ws)
        if true_sign is None or true_sign != sign:
            raise ValueError(
                f"edge sign mismatch: recorded {sign}, product gives {true_sign}"
            )
        if sign < 0:
            negatives += 1
        for i in members:
            degree[i] += 1
    return negatives % 2 == 1 and all(d % 2 == 0 for d in degree)


def four_edges(vertices) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    """(negative, positive) mutually-commuting 4-subsets with product -+1."""
    vertices = list(vertices)
    neg, pos = [], []
    for combo in combinations(range(len(vertices)), 4):
        ws = [vertices[i] for i in combo]
        if any(not commutes(a, b) for a, b in combinations(ws, 2)):
            continue
        sign = product_sign(ws)
        if sign == -1:
            neg.append(combo)
        elif sign == 1:
            pos.append(combo)
    return neg, pos


def mine_parity_proofs(vertices):
    """All single-positive-edge parity proofs over the vertex set.

    Iterates the odd-cardinality subsets of the negative 4-edges in Gray
    order, tracking vertex-degree parity as a bitmask; a subset with
    exactly 4 odd-degree vertices closing to a positive 4-edge is a
    proof.  Returns (proofs, profiles) where each proof is a
    SignedHypergraph and profiles is the sorted set of distinct {n_k}
    degree profiles (n_k = vertices in exactly k negative edges,
    reported as a sorted tuple of (k, n_k) for k >= 1).
    """
    vertices = tuple(vertices)
    neg, pos = four_edges(vertices)
    pos_set = {frozenset(c) for c in pos}
    edge_masks = [sum(1 << i for i in c) for c in neg]
    m = len(edge_masks)

    hits: list[tuple[int, tuple[int, ...]]] = []
    parity = 0
    size_odd = 0
    for g in range(1, 1 << m):
        e = (g & -g).bit_length() - 1
        parity ^= edge_masks[e]
        size_odd ^= 1
        if size_odd and parity.bit_count() == 4:
            subset = g ^ (g >> 1)  # Gray code of g
            odd_vs = tuple(
                i for i in range(len(vertices)) if (parity >> i) & 1
            )
            if frozenset(odd_vs) in pos_set:
                hits.append((subset, odd_vs))

    proofs = []
    profiles = set()
    for subset, odd_vs in hits:
        chosen = [neg[i] for i in range(m) if (subset >> i) & 1]
        degree = [0] * len(vertices)
        for c in chosen:
            for i in c:
                degree[i] += 1
        counts: dict[int, int] = {}
        for dgr in degree:
            if dgr:
                counts[dgr] = counts.get(dgr, 0) + 1
        profiles.add(tuple(sorted(counts.items())))
        edges = tuple([(c, -1) for c in chosen] + [(odd_vs, 1)])
        proofs.append(SignedHypergraph(vertices, edges))
    return proofs, sorted(profiles)


#: The eight commuting 7-tuples whose joint eigenrays assemble the
#: 64-ray saturated configuration.
OPERATOR_LINES = tuple(
    tuple(word(t) for t in line.split())
    for line in (
        "XII IXI XXI IIZ XIZ IXZ XXZ",
        "XII IXX XXX IYY XYY IZZ XZZ",
        "IXI ZIX ZXX YIY YXY XIZ XXZ",
        "XXI YYX ZZX ZYY YZY XIZ IXZ",
        "ZXI YYI XZI IIZ ZXZ YYZ XZZ",
        "ZXI ZIX IXX XYY YZY YYZ XZZ",
        "YYI XXX ZZX YIY IYY ZXZ XZZ",
        "XZI ZXX YYX YXY ZYY XIZ IZZ",
    )
)

#: The 26 distinct words appearing in OPERATOR_LINES.
SATURATED_WORDS = tuple(
    word(t)
    for t in (
        "XII IXI XXI ZXI YYI XZI ZIX IXX XXX "
        "ZXX YYX ZZX YIY YXY IYY XYY ZYY YZY "
        "IIZ XIZ IXZ XXZ ZXZ YYZ IZZ XZZ"
    ).split()
)

#: The eight-edge hypergraph proof over 15 of the 26 words: seven
#: negative 4-edges and one positive.
PROOF_LINES = (
    ("IXI ZIX YXY XIZ", -1),
    ("IXI ZXX YIY XIZ", -1),
    ("ZXI YYI IIZ XZZ", -1),
    ("ZXI XZI IIZ YYZ", -1),
    ("YYI XXX YIY XZZ", -1),
    ("XZI ZXX YXY IZZ", -1),
    ("ZIX IXX YYZ XZZ", -1),
    ("IXX XXX IZZ XZZ", 1),
)


def eight_edge_proof() -> SignedHypergraph:
    """The explicit 8-edge parity proof on 15 vertices."""
    vertex_words: list[PauliWord] = []
    index: dict[str, int] = {}
    edges = []
    for text, sign in PROOF_LINES:
        members = []
        for t in text.split():
            if t not in index:
                index[t] = len(vertex_words)
                vertex_words.append(word(t))
            members.append(index[t])
        edges.append((tuple(members), sign))
    return SignedHypergraph(tuple(vertex_words), tuple(edges))
