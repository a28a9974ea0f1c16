"""The permutation skew brace of a finite solution.

Elements are pairs ``(p, q)`` of permutations of the carrier; the generator
of a point ``x`` is ``g_x = (lambda_x, rho_x^{-1})`` and the product is
componentwise composition.  Each element keeps a shortest witness word over
signed letters: ``+(x+1)`` stands for ``g_x`` and ``-(x+1)`` for its inverse.

The additive structure comes from ``a + b = a * lambda_{a^{-1}}(b)`` where
``lambda`` is evaluated on a witness word of ``b`` with the product rule

    lambda_w(w1 w2 ... wn) = lambda_w(w1) * lambda_{rho_{w1}(w)}(w2 ... wn)

and ``rho`` on words with the mirrored rule

    rho_w(w1 ... wn) = rho_{lambda_{wn}(w)}(w1 ... w(n-1)) * rho_w(wn).

Base cases on positive letters: ``lambda_g(g_y) = g_{p(y)}`` and
``rho_g(g_y) = g_{q^{-1}(y)}``.  Inverse letters follow from
``lambda_w(1) = rho_w(1) = 1``:

* from ``1 = lambda_v'(u u^{-1}) = lambda_v'(u) lambda_{rho_u(v')}(u^{-1})``,
  ``lambda_v(u^{-1}) = lambda_v'(u)^{-1}`` where ``rho_u(v') = v``;
* from ``1 = rho_v(u^{-1} u) = rho_{lambda_u(v)}(u^{-1}) rho_v(u)``,
  ``rho_v(u^{-1}) = rho_{lambda_{u^{-1}}(v)}(u)^{-1}``.

``rho_w(1) = 1`` itself follows from ``w * 1 = lambda_w(1) rho_1(w)`` with
``lambda_w(1) = 1``, ``rho_1 = id`` and the antihomomorphism property.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from . import groups
from .braces import (
    SkewBrace,
    associated_solution,
    brace_hom_kernel,
    generated_subset,
    is_brace_hom,
    is_ideal,
    is_strong_left_ideal,
    validate_brace,
)
from .braces import ideal_closure as _brace_ideal_closure
from .errors import CapacityError, PreconditionError, SelfCheckError
from .morphisms import SolutionMap, i_kernels, is_homomorphism, kernel_congruence
from .solutions import FiniteSolution, invert_permutation

DEFAULT_MAX_ORDER = 10**6
DEFAULT_ADD_BUDGET = 5 * 10**7

Pair = tuple[tuple[int, ...], tuple[int, ...]]
Word = tuple[int, ...]


def _compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    return tuple(p[i] for i in q)


def generator_pairs(S: FiniteSolution) -> list[Pair]:
    return [(S.lam[x], S.rho_inv[x]) for x in range(S.n)]


@dataclass(frozen=True)
class GElement:
    index: int
    pair: Pair
    witness: Word


@dataclass
class PermGroup:
    """BFS closure of the generator pairs with shortest witness words."""

    solution: FiniteSolution
    elements: list[Pair]
    witnesses: list[Word]
    mul: list[list[int]]
    inv: list[int]
    gen: list[int]  # point x -> element index of g_x
    gen_inv: list[int]  # point x -> element index of g_x^{-1}

    @property
    def order(self) -> int:
        return len(self.elements)


def generate_perm_group(S: FiniteSolution, max_order: int = DEFAULT_MAX_ORDER) -> PermGroup:
    n = S.n
    ident = tuple(range(n))
    gens = generator_pairs(S)
    letters: list[tuple[int, Pair]] = []
    for x, (p, q) in enumerate(gens):
        letters.append((x + 1, (p, q)))
        letters.append((-(x + 1), (invert_permutation(p), invert_permutation(q))))
    elements: list[Pair] = [(ident, ident)]
    witnesses: list[Word] = [()]
    index = {elements[0]: 0}
    i = 0
    while i < len(elements):
        p, q = elements[i]
        for letter, (lp, lq) in letters:
            h = (_compose(p, lp), _compose(q, lq))
            if h not in index:
                if len(elements) >= max_order:
                    raise CapacityError(f"permutation group exceeds the order cap {max_order}")
                index[h] = len(elements)
                elements.append(h)
                witnesses.append(witnesses[i] + (letter,))
        i += 1
    m = len(elements)
    mul = [[index[(_compose(a[0], b[0]), _compose(a[1], b[1]))] for b in elements] for a in elements]
    inv = [index[(invert_permutation(a[0]), invert_permutation(a[1]))] for a in elements]
    gen = [index[g] for g in gens]
    gen_inv = [inv[g] for g in gen]
    if any(mul[a][inv[a]] != 0 for a in range(m)):
        raise SelfCheckError("inverse table inconsistent")
    return PermGroup(S, elements, witnesses, mul, inv, gen, gen_inv)


class PermBrace:
    """The finite permutation skew brace of a solution.

    ``add`` is filled lazily; :attr:`brace` materialises the full table.
    """

    def __init__(self, group: PermGroup, add_budget: int = DEFAULT_ADD_BUDGET):
        self.group = group
        self.solution = group.solution
        self.add_budget = add_budget
        n = self.solution.n
        G = group
        # positive-letter lambda action: lam_letter[g][y] = point p_g(y)
        self._p = [pair[0] for pair in G.elements]
        self._qinv = [invert_permutation(pair[1]) for pair in G.elements]
        # rho_{g_y}(h) = lambda_h(g_y)^{-1} * h * g_y, tabulated and inverted
        self._rho_gen = []
        self._rho_gen_inv = []
        for y in range(n):
            row = [G.mul[G.mul[G.inv[G.gen[self._p[h][y]]]][h]][G.gen[y]] for h in range(G.order)]
            if sorted(row) != list(range(G.order)):
                raise SelfCheckError(f"rho of generator {y} is not a bijection")
            self._rho_gen.append(row)
            self._rho_gen_inv.append(invert_permutation(row))
        self._add: dict[tuple[int, int], int] = {}

    # --- element helpers ----------------------------------------------------

    @property
    def order(self) -> int:
        return self.group.order

    @property
    def identity(self) -> int:
        return 0

    def element(self, index: int) -> GElement:
        return GElement(index, self.group.elements[index], self.group.witnesses[index])

    def letter_element(self, letter: int) -> int:
        x = abs(letter) - 1
        if not 0 <= x < self.solution.n:
            raise IndexError(f"letter {letter} out of range")
        return self.group.gen[x] if letter > 0 else self.group.gen_inv[x]

    def evaluate(self, word: Iterable[int]) -> int:
        g = 0
        for letter in word:
            g = self.group.mul[g][self.letter_element(letter)]
        return g

    # --- lambda and rho on words -------------------------------------------

    def _lam_letter(self, g: int, letter: int) -> int:
        """lambda_g applied to a single letter; the result is again a letter."""
        if letter > 0:
            return self._p[g][letter - 1] + 1
        y = -letter - 1
        g_prime = self._rho_gen_inv[y][g]
        return -(self._p[g_prime][y] + 1)

    def _rho_letter(self, g: int, letter: int) -> int:
        """rho_g applied to a single letter; the result is again a letter."""
        if letter > 0:
            return self._qinv[g][letter - 1] + 1
        y = -letter - 1
        v = self.lam_index(self.letter_element(letter), self.group.witnesses[g])
        return -(self._qinv[v][y] + 1)

    def lam_word(self, g: int, word: Sequence[int]) -> Word:
        out = []
        mul, inv = self.group.mul, self.group.inv
        cur = g
        for letter in word:
            if not 0 < abs(letter) <= self.solution.n:
                raise IndexError(f"letter {letter} out of range")
            image = self._lam_letter(cur, letter)
            out.append(image)
            # rho_{letter}(cur) = lambda_cur(letter)^{-1} * cur * letter
            cur = mul[mul[inv[self.letter_element(image)]][cur]][self.letter_element(letter)]
        return tuple(out)

    def lam_index(self, g: int, word: Sequence[int]) -> int:
        return self.evaluate(self.lam_word(g, word))

    def rho_word(self, g: int, word: Sequence[int]) -> Word:
        out = []
        cur = g
        for letter in reversed(word):
            if not 0 < abs(letter) <= self.solution.n:
                raise IndexError(f"letter {letter} out of range")
            out.append(self._rho_letter(cur, letter))
            cur = self.lam_index(self.letter_element(letter), self.group.witnesses[cur])
        return tuple(reversed(out))

    def lam_eval(self, g: int, word: Sequence[int]) -> GElement:
        w = self.lam_word(g, word)
        idx = self.evaluate(w)
        return GElement(idx, self.group.elements[idx], w)

    def rho_eval(self, g: int, word: Sequence[int]) -> GElement:
        w = self.rho_word(g, word)
        idx = self.evaluate(w)
        return GElement(idx, self.group.elements[idx], w)

    # --- additive structure -------------------------------------------------

    def add(self, a: int, b: int) -> int:
        key = (a, b)
        if key not in self._add:
            lam_b = self.lam_index(self.group.inv[a], self.group.witnesses[b])
            self._add[key] = self.group.mul[a][lam_b]
        return self._add[key]

    @cached_property
    def brace(self) -> SkewBrace:
        m = self.order
        if self.solution.n * m * m > self.add_budget:
            raise CapacityError(
                f"full addition table needs n*|G|^2 = {self.solution.n * m * m} > budget {self.add_budget}"
            )
        add = [[self.add(a, b) for b in range(m)] for a in range(m)]
        return SkewBrace(m, add, self.group.mul, 0)

    @property
    def generators(self) -> list[int]:
        return list(self.group.gen)

    # --- self checks --------------------------------------------------------

    def self_check(self) -> None:
        B = self.brace
        report = validate_brace(B)
        if not report.ok:
            raise SelfCheckError(f"permutation brace fails validation: {report.message}")
        gens = set(self.group.gen)
        mul_closure = groups.closure(B.mul, gens, 0)
        add_closure = groups.closure(B.add, gens, 0)
        if mul_closure != add_closure or len(mul_closure) != self.order:
            raise SelfCheckError("additive and multiplicative closures of the generators differ")
        for g in range(self.order):
            for y in range(self.solution.n):
                if B.lam[g][self.group.gen[y]] != self.group.gen[self._p[g][y]]:
                    raise SelfCheckError(f"lambda action inconsistent at element {g}, point {y}")


def build_perm_brace(
    S: FiniteSolution,
    max_order: int = DEFAULT_MAX_ORDER,
    add_budget: int = DEFAULT_ADD_BUDGET,
    check: bool = True,
) -> PermBrace:
    PB = PermBrace(generate_perm_group(S, max_order), add_budget)
    if check:
        PB.self_check()
    return PB


def h_map(S: FiniteSolution, PB: PermBrace) -> SolutionMap:
    """x -> g_x into the solution of the permutation brace; checked homomorphism."""
    f = SolutionMap(S, associated_solution(PB.brace), tuple(PB.group.gen))
    if not is_homomorphism(f):
        raise SelfCheckError("h is not a homomorphism of solutions")
    return f


def ideal_closure(PB: PermBrace, seed: Iterable[int]):
    return _brace_ideal_closure(PB.brace, seed)


def random_witness_pairs(PB: PermBrace, count: int = 100, seed: int = 0) -> list[tuple[int, Word, Word]]:
    """Random (element, word, alternative word) triples for the same target.

    The alternative word appends a cancelling pair ``x x^{-1}`` or inserts one
    at a random position, so both words evaluate to the same element.
    """
    rng = random.Random(seed)
    n = PB.solution.n
    out = []
    for _ in range(count):
        g = rng.randrange(PB.order)
        b = rng.randrange(PB.order)
        w = PB.group.witnesses[b]
        x = rng.randrange(n) + 1
        pos = rng.randrange(len(w) + 1)
        pair = (x, -x) if rng.random() < 0.5 else (-x, x)
        alt = w[:pos] + pair + w[pos:]
        out.append((g, w, alt))
    return out


# --- induced maps and the i-kernel check -----------------------------------


def induced_perm_epi(f: SolutionMap, PB_S: PermBrace, PB_T: PermBrace) -> tuple[list[int], frozenset[int]]:
    """Extend g_x -> g_{f(x)} to the permutation braces; return (map, kernel)."""
    if not f.is_surjective or not is_homomorphism(f):
        raise PreconditionError("f must be a surjective homomorphism")
    G = PB_S.group
    phi = []
    for w in G.witnesses:
        phi.append(PB_T.evaluate(tuple((1 if l > 0 else -1) * (f.table[abs(l) - 1] + 1) for l in w)))
    # every edge of the Cayley graph must be respected, otherwise two words
    # for one element would map to different targets
    for g in range(G.order):
        for x in range(PB_S.solution.n):
            for letter_idx, t_idx in ((G.gen[x], PB_T.group.gen[f.table[x]]), (G.gen_inv[x], PB_T.group.gen_inv[f.table[x]])):
                if phi[G.mul[g][letter_idx]] != PB_T.group.mul[phi[g]][t_idx]:
                    raise SelfCheckError("induced map is not well defined on the permutation brace")
    if not is_brace_hom(phi, PB_S.brace, PB_T.brace):
        raise SelfCheckError("induced map is not a brace homomorphism")
    kernel = brace_hom_kernel(phi, PB_S.brace, PB_T.brace).members
    return phi, kernel


@dataclass
class IKernelIdealReport:
    """Image-level checks of the i-kernel ideal statements in the permutation brace."""

    strong_left_ideal: bool
    ideal: bool
    coset_separation: bool
    closure: frozenset[int] = field(default_factory=frozenset)
    ideal_members: frozenset[int] = field(default_factory=frozenset)
    notes: list[str] = field(default_factory=list)
    level: str = "image-level"

    @property
    def ok(self) -> bool:
        return self.strong_left_ideal and self.ideal and self.coset_separation


def i_kernel_ideal_check(
    S: FiniteSolution,
    f: SolutionMap,
    X0: Iterable[int],
    PB_S: PermBrace | None = None,
    PB_T: PermBrace | None = None,
) -> IKernelIdealReport:
    X0 = tuple(sorted(set(X0)))
    if X0 not in i_kernels(f):
        raise PreconditionError(f"{X0} is not an i-kernel of f")
    if not f.is_surjective:
        raise PreconditionError("f must be an i-epimorphism")
    PB_S = PB_S or build_perm_brace(S)
    PB_T = PB_T or build_perm_brace(f.target)
    B = PB_S.brace
    seed = {PB_S.group.gen[x] for x in X0}
    by_mul = groups.closure(B.mul, seed, 0)
    by_add = groups.closure(B.add, seed, 0)
    notes = []
    if by_mul != by_add:
        notes.append("multiplicative and additive closures of the i-kernel differ")
    strong = by_mul == by_add and is_strong_left_ideal(B, by_mul)
    _, K = induced_perm_epi(f, PB_S, PB_T)
    product = frozenset(B.mul[a][k] for a in by_mul for k in K)
    ideal_ok = is_ideal(B, product)
    if not ideal_ok:
        notes.append("product with the induced kernel is not an ideal")
    coset_ok = True
    if ideal_ok:
        for block in kernel_congruence(f).blocks:
            g0 = PB_S.group.gen[block[0]]
            for y in block[1:]:
                if B.mul[B.inv[g0]][PB_S.group.gen[y]] not in product:
                    coset_ok = False
        if not coset_ok:
            notes.append("kernel-related points fall in different cosets")
    else:
        coset_ok = False
    return IKernelIdealReport(strong, ideal_ok, coset_ok, by_mul, product, notes)
