"""
Hecke algebras with a Kazhdan-Lusztig C-basis engine, cells and ideals.

The engine works over the ring 𝓐 = ℤ[v, v^{-1}] (module `laurent`) and is
parameterized by a small Coxeter-group interface so that the same code
serves two groups:

  * the type-B group W_n of signed permutations with unequal parameters
    q_{s_0} = v, q_{s_i} = v^2 for i >= 1 (the Γ = ℤ, a = 2, b = 1 regime);
  * the symmetric group S_N with the equal parameter v^2, used for the
    comparison along the doubling embedding ι : W_n → S_{2n}.

Elements are finitely supported maps window → LaurentPoly in the T-basis.
T_s satisfies (T_s - q_s)(T_s + q_s^{-1}) = 0 and C_s := T_s - q_s.  The
C-basis is the unique family with bar(C_w) = C_w and C_w - T_w supported on
strictly positive powers of v; it is constructed by triangular correction.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from . import weylb
from .laurent import LaurentPoly
from .weylb import BoundExceeded, SizeMismatch

__all__ = [
    "Coxeter", "type_b", "type_a",
    "t_gen", "c_gen", "multiply_t", "bar_involution",
    "KLBasis", "compute_kl_basis", "left_cells", "IdealJn", "ideal_jn",
    "type_a_kl_compare",
    "tensor_identity", "tensor_action", "tensor_c_action",
    "permutation_module", "tensor_ideal_annihilates", "ideal_vanish_symbolic",
    "NotInWb", "WeightOutOfRange",
]

KL_MAX_N = 4


class NotInWb(ValueError):
    """Raised when a cell-module base point lies outside W_b."""


class WeightOutOfRange(ValueError):
    """Raised for a weight outside Lambda_n."""


class Coxeter:
    """
    Minimal Coxeter-group interface for the KL engine: a finite list of
    generator indices, right/left multiplication on group elements (stored
    as windows), length, descents and the parameter q_s of each generator.
    """

    def __init__(self, name, gens, identity, apply_right, length, weight):
        self.name = name
        self.gens = tuple(gens)
        self.identity = identity
        self.apply_right = apply_right
        self.length = length
        self.weight = weight  # gen index -> LaurentPoly q_s
        self._gen_elts = {k: apply_right(identity, k) for k in gens}

    def apply_left(self, k, w):
        g = self._gen_elts[k]
        return self._compose(g, w)

    def right_descents(self, w):
        return {k for k in self.gens
                if self.length(self.apply_right(w, k)) < self.length(w)}

    def left_descents(self, w):
        return {k for k in self.gens
                if self.length(self.apply_left(k, w)) < self.length(w)}


def type_b(n: int) -> Coxeter:
    """W_n with unequal parameters q_{s_0} = v, q_{s_i} = v^2."""
    q = LaurentPoly.monomial(2)
    big_q = LaurentPoly.monomial(1)
    cox = Coxeter(
        name=f"B{n}",
        gens=range(n),
        identity=weylb.identity(n),
        apply_right=weylb.apply_generator,
        length=weylb.length,
        weight=lambda k: big_q if k == 0 else q,
    )
    cox._compose = weylb.multiply
    return cox


def _sym_apply(w, k):
    lst = list(w)
    lst[k - 1], lst[k] = lst[k], lst[k - 1]
    return tuple(lst)


def _sym_length(w):
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w))
               if w[i] > w[j])


def _sym_multiply(u, w):
    return tuple(u[x - 1] for x in w)


def type_a(n_points: int) -> Coxeter:
    """The symmetric group S_N with the equal parameter v^2."""
    q = LaurentPoly.monomial(2)
    cox = Coxeter(
        name=f"A{n_points - 1}",
        gens=range(1, n_points),
        identity=tuple(range(1, n_points + 1)),
        apply_right=_sym_apply,
        length=_sym_length,
        weight=lambda k: q,
    )
    cox._compose = _sym_multiply
    return cox


# ---------------------------------------------------------------------------
# T-basis arithmetic
# ---------------------------------------------------------------------------

HeckeElement = dict  # window -> LaurentPoly, no zero values stored


def _add_term(x: HeckeElement, w, c: LaurentPoly) -> None:
    s = x.get(w)
    s = c if s is None else s + c
    if s.is_zero():
        x.pop(w, None)
    else:
        x[w] = s


def t_gen(cox: Coxeter, k: int) -> HeckeElement:
    return {cox._gen_elts[k]: LaurentPoly.one()}


def c_gen(cox: Coxeter, k: int) -> HeckeElement:
    """C_s = T_s - q_s."""
    out = {cox._gen_elts[k]: LaurentPoly.one()}
    _add_term(out, cox.identity, -cox.weight(k))
    return out


def _mult_gen_right(cox: Coxeter, x: HeckeElement, k: int) -> HeckeElement:
    """x * T_k."""
    out: HeckeElement = {}
    qk = cox.weight(k)
    twist = qk - LaurentPoly.monomial(-qk.max_exp())
    for w, c in x.items():
        wk = cox.apply_right(w, k)
        if cox.length(wk) > cox.length(w):
            _add_term(out, wk, c)
        else:
            _add_term(out, wk, c)
            _add_term(out, w, c * twist)
    return out


def _mult_gen_left(cox: Coxeter, k: int, x: HeckeElement) -> HeckeElement:
    """T_k * x."""
    out: HeckeElement = {}
    qk = cox.weight(k)
    twist = qk - LaurentPoly.monomial(-qk.max_exp())
    for w, c in x.items():
        kw = cox.apply_left(k, w)
        if cox.length(kw) > cox.length(w):
            _add_term(out, kw, c)
        else:
            _add_term(out, kw, c)
            _add_term(out, w, c * twist)
    return out


def _mult_gen_right_inv(cox: Coxeter, x: HeckeElement, k: int) -> HeckeElement:
    """x * T_k^{-1}, with T_k^{-1} = T_k - q_k + q_k^{-1}."""
    qk = cox.weight(k)
    twist = LaurentPoly.monomial(-qk.max_exp()) - qk
    out = _mult_gen_right(cox, x, k)
    for w, c in x.items():
        _add_term(out, w, c * twist)
    return out


def _reduced_word(cox: Coxeter, w) -> tuple[int, ...]:
    out = []
    while True:
        d = cox.right_descents(w)
        if not d:
            return tuple(reversed(out))
        k = min(d)
        out.append(k)
        w = cox.apply_right(w, k)


def multiply_t(cox: Coxeter, x: HeckeElement, y: HeckeElement) -> HeckeElement:
    """The product x*y in the T-basis."""
    sizes = {len(w) for w in itertools.chain(x, y)}
    if len(sizes) > 1:
        raise SizeMismatch(f"mixed window sizes {sorted(sizes)}")
    out: HeckeElement = {}
    for w, c in y.items():
        acc = {u: cu * c for u, cu in x.items()}
        for k in _reduced_word(cox, w):
            acc = _mult_gen_right(cox, acc, k)
        for u, cu in acc.items():
            _add_term(out, u, cu)
    return out


def _inverse(cox: Coxeter, w):
    out = cox.identity
    for k in reversed(_reduced_word(cox, w)):
        out = cox.apply_right(out, k)
    return out


def bar_involution(cox: Coxeter, x: HeckeElement) -> HeckeElement:
    """T_w ↦ T_{w^{-1}}^{-1}, v ↦ v^{-1}, extended additively."""
    out: HeckeElement = {}
    for w, c in x.items():
        acc = {cox.identity: c.bar()}
        for k in _reduced_word(cox, w):
            acc = _mult_gen_right_inv(cox, acc, k)
        for u, cu in acc.items():
            _add_term(out, u, cu)
    return out


def _scale(x: HeckeElement, c: LaurentPoly) -> HeckeElement:
    if c.is_zero():
        return {}
    return {w: cw * c for w, cw in x.items()}


def _sub_into(x: HeckeElement, y: HeckeElement) -> None:
    for w, c in y.items():
        _add_term(x, w, -c)


# ---------------------------------------------------------------------------
# KL C-basis
# ---------------------------------------------------------------------------


class KLBasis:
    """
    The C-basis {C_w} of the Hecke algebra of `cox`, with the left cell
    edge relation derived from the expansions C_s C_w.
    """

    def __init__(self, cox: Coxeter, elements):
        self.cox = cox
        self.elements = sorted(elements, key=lambda w: (cox.length(w), w))
        self.c: dict = {}
        self._build()

    def _build(self) -> None:
        cox = self.cox
        for w in self.elements:
            if w == cox.identity:
                self.c[w] = {w: LaurentPoly.one()}
                continue
            s = min(cox.left_descents(w))
            w1 = cox.apply_left(s, w)
            d = _mult_gen_left(cox, s, self.c[w1])
            _sub_into(d, _scale(self.c[w1], cox.weight(s)))
            for y in sorted((y for y in d if y != w),
                            key=lambda y: -cox.length(y)):
                h = d.get(y)
                if h is None:
                    continue
                low = h.nonpositive_part()
                if low.is_zero():
                    continue
                mu = h.bar_symmetrize_nonpositive()
                _sub_into(d, _scale(self.c[y], mu))
            assert d.get(w, LaurentPoly.zero()).is_one(), w
            for y, h in d.items():
                if y != w:
                    assert h.nonpositive_part().is_zero(), (w, y, h)
            self.c[w] = d

    def check_bar_invariance(self, w) -> bool:
        return bar_involution(self.cox, self.c[w]) == self.c[w]

    def c_coordinates(self, x: HeckeElement) -> dict:
        """Expand x in the C-basis (triangular elimination by length)."""
        rest = dict(x)
        out = {}
        while rest:
            w = max(rest, key=lambda u: (self.cox.length(u), u))
            coeff = rest[w]
            out[w] = coeff
            _sub_into(rest, _scale(self.c[w], coeff))
        return out

    def left_cell_edges(self) -> dict:
        """w -> {y != w : C_y appears in some C_s C_w}."""
        edges: dict = {w: set() for w in self.elements}
        for w in self.elements:
            for s in self.cox.gens:
                prod = multiply_t(self.cox, c_gen(self.cox, s), self.c[w])
                for y in self.c_coordinates(prod):
                    if y != w:
                        edges[w].add(y)
        return edges


def compute_kl_basis(n: int, bound: int | None = None) -> KLBasis:
    """The unequal-parameter C-basis of W_n (default bound 4)."""
    cap = bound if bound is not None else KL_MAX_N
    if n > cap:
        raise BoundExceeded(f"n={n} exceeds KL bound {cap}")
    return KLBasis(type_b(n), list(weylb.enumerate_wn(n)))


def _sccs(edges: dict) -> list[frozenset]:
    """Strongly connected components (iterative Tarjan)."""
    index: dict = {}
    low: dict = {}
    on_stack: set = set()
    stack: list = []
    out: list[frozenset] = []
    counter = itertools.count()

    for root in edges:
        if root in index:
            continue
        work = [(root, iter(edges[root]))]
        index[root] = low[root] = next(counter)
        stack.append(root)
        on_stack.add(root)
        while work:
            node, it = work[-1]
            advanced = False
            for nxt in it:
                if nxt not in index:
                    index[nxt] = low[nxt] = next(counter)
                    stack.append(nxt)
                    on_stack.add(nxt)
                    work.append((nxt, iter(edges[nxt])))
                    advanced = True
                    break
                if nxt in on_stack:
                    low[node] = min(low[node], index[nxt])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
            if low[node] == index[node]:
                comp = set()
                while True:
                    u = stack.pop()
                    on_stack.discard(u)
                    comp.add(u)
                    if u == node:
                        break
                out.append(frozenset(comp))
    return out


def left_cells(basis: KLBasis) -> list[frozenset]:
    """Left cells: strongly connected components of the ≤_L edge relation."""
    cached = getattr(basis, "_cells", None)
    if cached is None:
        cached = sorted(_sccs(basis.left_cell_edges()), key=lambda c: sorted(c))
        basis._cells = cached
    return cached


# ---------------------------------------------------------------------------
# The ideal spanned by {C_w : w outside W_b}
# ---------------------------------------------------------------------------


class IdealJn:
    """span{C_w : w ∉ W_b} with a membership test in C-coordinates."""

    def __init__(self, basis: KLBasis):
        self.basis = basis
        n = len(basis.cox.identity)
        self.outside = {w for w in basis.elements
                        if not weylb.is_in_wb_by_words(w)}
        self.n = n

    def contains(self, x: HeckeElement) -> bool:
        coords = self.basis.c_coordinates(x)
        return all(w in self.outside for w in coords)

    def verify_two_sided(self) -> bool:
        """Closure under left and right multiplication by every C_s."""
        cox = self.basis.cox
        for w in self.outside:
            cw = self.basis.c[w]
            for s in cox.gens:
                cs = c_gen(cox, s)
                if not self.contains(multiply_t(cox, cs, cw)):
                    return False
                if not self.contains(multiply_t(cox, cw, cs)):
                    return False
        return True

    def generators(self) -> list[HeckeElement]:
        """C_1C_2C_1 - C_1 and C_1C_0C_1 - [2]_{Q/q} C_1."""
        cox = self.basis.cox
        c1 = c_gen(cox, 1)
        gens = []
        if self.n >= 3:
            g = multiply_t(cox, multiply_t(cox, c1, c_gen(cox, 2)), c1)
            _sub_into(g, c1)
            gens.append(g)
        # [2]_{Q/q} = Q/q + q/Q = v^{-1} + v
        ratio2 = LaurentPoly({1: 1, -1: 1})
        g = multiply_t(cox, multiply_t(cox, c1, c_gen(cox, 0)), c1)
        _sub_into(g, _scale(c1, ratio2))
        gens.append(g)
        return gens


def ideal_jn(n: int, basis: KLBasis | None = None) -> IdealJn:
    if n < 2:
        raise ValueError("the ideal needs n >= 2")
    return IdealJn(basis if basis is not None else compute_kl_basis(n))


# ---------------------------------------------------------------------------
# Cell modules
# ---------------------------------------------------------------------------


def cell_module(basis: KLBasis, w, spec=None):
    """
    The left cell module of w in W_b: ordered basis {C_z : z ~_L w} and the
    matrix of each C_s acting by left multiplication, with coordinates
    outside the cell discarded.  `spec` maps v to a CycloNumber; when given
    the matrices are specialized, otherwise they stay over ℤ[v, v^{-1}].
    Returns (cell: ordered tuple, matrices: dict gen -> row-major matrix).
    """
    from .laurent import specialize

    if not weylb.is_in_wb_by_words(w):
        raise NotInWb(f"{w} lies outside W_b")
    cell = None
    for comp in left_cells(basis):
        if w in comp:
            cell = sorted(comp)
            break
    pos = {z: i for i, z in enumerate(cell)}
    mats = {}
    for s in basis.cox.gens:
        cs = c_gen(basis.cox, s)
        cols = []
        for z in cell:
            coords = basis.c_coordinates(multiply_t(basis.cox, cs, basis.c[z]))
            col = [coords.get(y, LaurentPoly.zero()) for y in cell]
            cols.append(col)
        mat = [[cols[j][i] for j in range(len(cell))] for i in range(len(cell))]
        if spec is not None:
            mat = [[specialize(entry, spec) for entry in row] for row in mat]
        mats[s] = mat
    return tuple(cell), mats


# ---------------------------------------------------------------------------
# Type-A comparison along the doubling embedding
# ---------------------------------------------------------------------------


def _iota_perm(w) -> tuple[int, ...]:
    """The image of w in S_{2n} as a window over 1..2n."""
    n = len(w)
    return tuple(x + n + 1 if x < 0 else x + n for x in weylb.iota(w))


def type_a_kl_compare(n: int, progress: bool = False) -> dict:
    """
    Structure-constant transfer along ι: for every w ∈ W_b(n), expand
    C_{s_{n-1}} C_w in type B and C̃_{ι(s_{n-1})} C̃_{ι(w)} in the
    equal-parameter algebra of S_{2n}; report each z with a nonzero type-B
    coefficient whose type-A counterpart vanishes (expected: none).  Also
    check that each left cell of W_n inside W_b is ι^{-1} of the ι-image
    trace of a type-A left cell.
    """
    if n < 2:
        return {"violations": [], "cells_match": True, "pairs_checked": 0}
    if n > 3:
        raise BoundExceeded(f"type-A comparison supported for n <= 3, got {n}")
    cox_b = type_b(n)
    basis_b = KLBasis(cox_b, list(weylb.enumerate_wn(n)))
    cox_a = type_a(2 * n)
    basis_a = KLBasis(cox_a, list(itertools.permutations(range(1, 2 * n + 1))))

    s = n - 1
    cs_b = basis_b.c[cox_b._gen_elts[s]]
    iota_s = _iota_perm(cox_b._gen_elts[s])
    cs_a = basis_a.c[iota_s]

    violations = []
    pairs = 0
    wb = [w for w in basis_b.elements if weylb.is_in_wb_by_words(w)]
    for w in wb:
        nb = basis_b.c_coordinates(multiply_t(cox_b, cs_b, basis_b.c[w]))
        na = basis_a.c_coordinates(
            multiply_t(cox_a, cs_a, basis_a.c[_iota_perm(w)]))
        for z, coeff in nb.items():
            pairs += 1
            if not coeff.is_zero() and na.get(_iota_perm(z),
                                              LaurentPoly.zero()).is_zero():
                violations.append((w, z))

    cells_b = [c for c in left_cells(basis_b) if min(c) in set(wb) and
               all(weylb.is_in_wb_by_words(u) for u in c)]
    cells_a = left_cells(basis_a)
    image = {_iota_perm(u): u for u in basis_b.elements}
    cells_match = True
    for cb in cells_b:
        target = {_iota_perm(u) for u in cb}
        hit = [ca for ca in cells_a if target <= ca]
        if len(hit) != 1 or {image[p] for p in hit[0] if p in image} != set(cb):
            cells_match = False
    return {"violations": violations, "cells_match": cells_match,
            "pairs_checked": pairs}


# ---------------------------------------------------------------------------
# Tensor representation on V^{⊗n}, dim V = 2
# ---------------------------------------------------------------------------
#
# Scalars are pluggable: anything with +, -, * and a `one`; `q`, `q_inv`,
# `big_q`, `big_q_inv` are passed in a small dict.  The default is the
# one-variable ring q = v^2, Q = v.


def generic_tensor_scalars() -> dict:
    return {
        "one": LaurentPoly.one(),
        "q": LaurentPoly.monomial(2),
        "q_inv": LaurentPoly.monomial(-2),
        "big_q": LaurentPoly.monomial(1),
        "big_q_inv": LaurentPoly.monomial(-1),
    }


def sympy_tensor_scalars():
    """Fully independent symbols q, Q (exact rational functions)."""
    import sympy

    q, big_q = sympy.symbols("q Q")
    return {"one": sympy.Integer(1), "q": q, "q_inv": 1 / q,
            "big_q": big_q, "big_q_inv": 1 / big_q}


def tensor_identity(word, scalars) -> dict:
    return {tuple(word): scalars["one"]}


def _tv_is_zero(s) -> bool:
    if hasattr(s, "is_zero") and callable(s.is_zero):
        return s.is_zero()
    return not s


def _tv_add(x: dict, w, c) -> None:
    s = x.get(w)
    s = c if s is None else s + c
    if s.__class__.__module__.split(".")[0] == "sympy":
        import sympy

        s = sympy.expand(sympy.cancel(s))
    if _tv_is_zero(s):
        x.pop(w, None)
    else:
        x[w] = s


def _apply_r(x: dict, slot: int, sc: dict, inverse: bool = False) -> dict:
    """R (or R^{-1}) acting on tensor slots slot, slot+1 (0-based)."""
    out: dict = {}
    qq, qi = sc["q"], sc["q_inv"]
    diff = qq - qi
    for w, c in x.items():
        a, b = w[slot], w[slot + 1]
        if a == b:
            _tv_add(out, w, c * (qi if inverse else qq))
        elif (a, b) == (2, 1):
            swapped = w[:slot] + (1, 2) + w[slot + 2:]
            if inverse:
                # R^{-1} = R - (q - q^{-1}): R(v2⊗v1) = v1⊗v2
                _tv_add(out, swapped, c)
                _tv_add(out, w, -c * diff)
            else:
                _tv_add(out, swapped, c)
        else:  # (1, 2)
            swapped = w[:slot] + (2, 1) + w[slot + 2:]
            _tv_add(out, swapped, c)
            if not inverse:
                _tv_add(out, w, c * diff)
    return out


def _apply_s(x: dict, k: int, sc: dict) -> dict:
    """S_k: multiply by q when letters k-1, k (1-based) agree, else swap."""
    out: dict = {}
    for w, c in x.items():
        if w[k - 1] == w[k]:
            _tv_add(out, w, c * sc["q"])
        else:
            _tv_add(out, w[:k - 1] + (w[k], w[k - 1]) + w[k + 1:], c)
    return out


def _apply_varpi(x: dict, sc: dict) -> dict:
    out: dict = {}
    for w, c in x.items():
        _tv_add(out, w, c * (sc["big_q"] if w[0] == 1 else -sc["big_q_inv"]))
    return out


def tensor_action(n: int, gen: int, x: dict, scalars: dict | None = None) -> dict:
    """Apply T_gen to the tensor vector x (words over {1,2} of length n)."""
    sc = scalars if scalars is not None else generic_tensor_scalars()
    if gen != 0:
        return _apply_r(x, gen - 1, sc)
    # T_0 = T_1^{-1} ... T_{n-1}^{-1} S_{n-1} ... S_1 ϖ, rightmost first.
    x = _apply_varpi(x, sc)
    for k in range(1, n):
        x = _apply_s(x, k, sc)
    for k in range(n - 1, 0, -1):
        x = _apply_r(x, k - 1, sc, inverse=True)
    return x


def tensor_c_action(n: int, gen: int, x: dict, scalars: dict | None = None) -> dict:
    """Apply C_gen = T_gen - q_gen."""
    sc = scalars if scalars is not None else generic_tensor_scalars()
    out = tensor_action(n, gen, x, sc)
    p = sc["big_q"] if gen == 0 else sc["q"]
    for w, c in x.items():
        _tv_add(out, w, -c * p)
    return out


def permutation_module(n: int, lam: int) -> list[tuple[int, ...]]:
    """Basis words of M_n(λ): #1s - #2s = λ."""
    if abs(lam) > n or (n - lam) % 2:
        raise WeightOutOfRange(f"weight {lam} not in Lambda_{n}")
    ones = (n + lam) // 2
    return sorted(w for w in itertools.product((1, 2), repeat=n)
                  if w.count(1) == ones)


def tensor_ideal_annihilates(n: int, scalars: dict | None = None) -> bool:
    """
    Both ideal generators C_1C_2C_1 - C_1 and C_1C_0C_1 - [2]_{Q/q} C_1
    kill every basis word of V^{⊗n} (in the one-variable generic ring).
    """
    if n < 2:
        raise ValueError("the ideal generators need n >= 2")
    sc = scalars if scalars is not None else generic_tensor_scalars()
    ratio2 = LaurentPoly({1: 1, -1: 1})  # [2]_{Q/q} = v + v^{-1}
    for word in itertools.product((1, 2), repeat=n):
        c1x = tensor_c_action(n, 1, tensor_identity(word, sc), sc)
        if n >= 3:
            y = tensor_c_action(n, 1, tensor_c_action(n, 2, dict(c1x), sc), sc)
            for w, c in c1x.items():
                _tv_add(y, w, -c)
            if y:
                return False
        y = tensor_c_action(n, 1, tensor_c_action(n, 0, dict(c1x), sc), sc)
        for w, c in c1x.items():
            _tv_add(y, w, -(c * ratio2))
        if y:
            return False
    return True


def ideal_vanish_symbolic(n: int = 3) -> bool:
    """
    The identity C_1 C_0 (v_1⊗v_2 - q v_2⊗v_1) ⊗ v̄ = [2]_{Q/q} (same),
    with q, Q independent symbols, for every basis word v̄.
    """
    import sympy

    sc = sympy_tensor_scalars()
    two = sc["big_q"] / sc["q"] + sc["q"] / sc["big_q"]
    for tail in itertools.product((1, 2), repeat=n - 2):
        x = {(1, 2) + tail: sc["one"], (2, 1) + tail: -sc["q"]}
        lhs = tensor_c_action(n, 1, tensor_c_action(n, 0, x, sc), sc)
        rhs = {w: sympy.expand(sympy.cancel(two * c)) for w, c in x.items()}
        if lhs != rhs:
            return False
    return True
