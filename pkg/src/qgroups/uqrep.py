"""Finite-dimensional highest-weight modules of the quantized enveloping algebra.

Modules are built as explicit generator matrices over Q(v).  Starting from
the highest-weight vector, lowering operators are applied level by level;
within each weight space the contravariant form (the bilinear form with
(x u, w) = (u, x* w) for the compact star structure e* = f, f* = e, k* = k)
is computed recursively, dependent vectors are discarded and the survivors
are Gram-Schmidt orthogonalized.  Because the specialized form is positive
definite for real v > 0, v != 1, a vector is zero in the module exactly when
its self-pairing vanishes, so the procedure lands on the irreducible module
with a per-weight orthogonal basis and a diagonal Gram matrix.

The same machinery builds modules of a reductive (Levi) subalgebra by
restricting the set of lowering indices.

Conventions (the single convention ledger for everything downstream):
the Cartan generator k_i acts on a weight-mu vector by v^(mu, alpha_i),
k_i e_j k_i^-1 = v^(alpha_i, alpha_j) e_j, and the antipode has
S(e_i) = -q_i e_i, S(f_i) = -q_i^-1 f_i, S(k_i) = k_i^-1 with q_i = v^(2 d_i).
"""

from __future__ import annotations

import threading

from .cartan import CartanData
from .linalg import Mat, vec_add, vec_scale
from .scalar import (
    RF_ONE,
    RF_ZERO,
    RationalFunction,
    gauss_binomial,
    q_integer,
    rf_from_text,
    rf_to_text,
)


# --- formal algebra words -----------------------------------------------------


def gen_e(i):
    return ("e", i)


def gen_f(i):
    return ("f", i)


def gen_k(i):
    return ("k", i)


def gen_kinv(i):
    return ("K", i)


class AlgebraWord:
    """Formal Q(v)-linear combination of words in e_i, f_i, k_i, k_i^-1.

    No relations are imposed; words only ever get evaluated in modules or
    hit with the structure maps below, all of which send a single generator
    to a scalar multiple of a single generator.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for w, c in terms.items():
                if c:
                    self.terms[tuple(w)] = c

    @classmethod
    def unit(cls):
        return cls({(): RF_ONE})

    @classmethod
    def of_gen(cls, gen, coeff=RF_ONE):
        return cls({(gen,): coeff})

    @classmethod
    def of_word(cls, *gens):
        return cls({tuple(gens): RF_ONE})

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, RF_ZERO) + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return AlgebraWord(out)

    def __sub__(self, other):
        return self + other.scale(-RF_ONE)

    def scale(self, c: RationalFunction):
        return AlgebraWord({w: c * x for w, x in self.terms.items()})

    def __mul__(self, other):
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                s = out.get(w, RF_ZERO) + c1 * c2
                if s:
                    out[w] = s
                else:
                    del out[w]
        return AlgebraWord(out)

    def __eq__(self, other):
        return isinstance(other, AlgebraWord) and self.terms == other.terms

    def __repr__(self):
        return f"AlgebraWord({self.terms})"


def _q_i(cd: CartanData, i) -> RationalFunction:
    return RationalFunction.v_power(2 * cd.d[i - 1])


def _q_i_inv(cd: CartanData, i) -> RationalFunction:
    return RationalFunction.v_power(-2 * cd.d[i - 1])


def counit(cd: CartanData, x: AlgebraWord) -> RationalFunction:
    total = RF_ZERO
    for word, c in x.terms.items():
        if all(g[0] in ("k", "K") for g in word):
            total = total + c
    return total


_ANTIPODE = {
    "e": lambda cd, i: ("e", -_q_i(cd, i)),
    "f": lambda cd, i: ("f", -_q_i_inv(cd, i)),
    "k": lambda cd, i: ("K", RF_ONE),
    "K": lambda cd, i: ("k", RF_ONE),
}

_ANTIPODE_INV = {
    "e": lambda cd, i: ("e", -_q_i_inv(cd, i)),
    "f": lambda cd, i: ("f", -_q_i(cd, i)),
    "k": lambda cd, i: ("K", RF_ONE),
    "K": lambda cd, i: ("k", RF_ONE),
}

# theta = (compact star) after the antipode: an algebra homomorphism
_CARTAN_INVOLUTION = {
    "e": lambda cd, i: ("f", -_q_i(cd, i)),
    "f": lambda cd, i: ("e", -_q_i_inv(cd, i)),
    "k": lambda cd, i: ("K", RF_ONE),
    "K": lambda cd, i: ("k", RF_ONE),
}


def _map_word(cd, x: AlgebraWord, table, reverse) -> AlgebraWord:
    out = {}
    for word, c in x.terms.items():
        gens = []
        coeff = c
        src = reversed(word) if reverse else word
        for kind, i in src:
            new_kind, factor = table[kind](cd, i)
            gens.append((new_kind, i))
            coeff = coeff * factor
        w = tuple(gens)
        s = out.get(w, RF_ZERO) + coeff
        if s:
            out[w] = s
        else:
            del out[w]
    return AlgebraWord(out)


def antipode_word(cd, x: AlgebraWord) -> AlgebraWord:
    return _map_word(cd, x, _ANTIPODE, reverse=True)


def antipode_inv_word(cd, x: AlgebraWord) -> AlgebraWord:
    return _map_word(cd, x, _ANTIPODE_INV, reverse=True)


def cartan_involution_word(cd, x: AlgebraWord) -> AlgebraWord:
    return _map_word(cd, x, _CARTAN_INVOLUTION, reverse=False)


def coproduct_word(cd, x: AlgebraWord) -> dict:
    """Coproduct as {(word_left, word_right): coefficient}.

    Delta(e_i) = e_i (x) k_i + k_i^-1 (x) e_i, Delta(f_i) likewise, the
    Cartan generators are grouplike.
    """
    out = {}
    for word, c in x.terms.items():
        partial = {((), ()): c}
        for kind, i in word:
            if kind == "e":
                pieces = [((("e", i),), (("k", i),), RF_ONE),
                          ((("K", i),), (("e", i),), RF_ONE)]
            elif kind == "f":
                pieces = [((("f", i),), (("k", i),), RF_ONE),
                          ((("K", i),), (("f", i),), RF_ONE)]
            else:
                pieces = [(((kind, i),), ((kind, i),), RF_ONE)]
            nxt = {}
            for (w1, w2), cc in partial.items():
                for p1, p2, pc in pieces:
                    key = (w1 + p1, w2 + p2)
                    s = nxt.get(key, RF_ZERO) + cc * pc
                    if s:
                        nxt[key] = s
                    else:
                        nxt.pop(key, None)
            partial = nxt
        for key, cc in partial.items():
            s = out.get(key, RF_ZERO) + cc
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return out


def coideal_span(cd: CartanData, theta=()) -> list:
    """Spanning words of the coideal attached to a compact subalgebra choice.

    For the full algebra pass theta = all indices.  Imaginary-unit prefactors
    are dropped: they do not change any span over the complexification.
    """
    theta = set(theta)
    out = []
    for i in range(1, cd.rank + 1):
        if i in theta:
            qi = _q_i(cd, i)
            e = AlgebraWord.of_gen(gen_e(i))
            f = AlgebraWord.of_gen(gen_f(i))
            out.append(e - f.scale(qi))       # e_i - q_i f_i
            out.append(e + f.scale(qi))       # e_i + q_i f_i (dropped sqrt(-1))
        k = AlgebraWord.of_gen(gen_k(i))
        kin = AlgebraWord.of_gen(gen_kinv(i))
        out.append(k - kin)                   # dropped scalar prefactor
        out.append(k + kin - AlgebraWord.unit().scale(RationalFunction.const(2)))
    return out


# --- modules ------------------------------------------------------------------


class IrrepModule:
    """Irreducible highest-weight module given by explicit sparse matrices.

    ``lowering`` is the tuple of simple-root indices whose e/f generators act
    nontrivially; the full algebra uses all of 1..rank, a Levi subalgebra a
    subset.  Cartan generators always act, diagonally, via the stored weights.
    ``constructions[s]`` expresses basis vector s as a combination of lowered
    earlier vectors: a list of (parent_index, lowering_index, coefficient).
    It lets the same basis be rebuilt inside any other module from a chosen
    highest-weight vector, which is how intertwiners are produced downstream.
    """

    __slots__ = ("cd", "hw", "lowering", "dim", "weights", "E", "F", "gram",
                 "constructions", "_kmats")

    def __init__(self, cd, hw, lowering, weights, E, F, gram, constructions):
        self.cd = cd
        self.hw = tuple(hw)
        self.lowering = tuple(lowering)
        self.weights = [tuple(w) for w in weights]
        self.dim = len(self.weights)
        self.E = E
        self.F = F
        self.gram = gram
        self.constructions = constructions
        self._kmats = {}

    @property
    def is_full(self):
        return len(self.lowering) == self.cd.rank

    def k_exponent(self, i, s) -> int:
        """Exponent of v in the k_i eigenvalue on basis vector s."""
        return self.weights[s][i - 1] * self.cd.d[i - 1]

    def k_matrix(self, i, inverse=False) -> Mat:
        key = (i, inverse)
        m = self._kmats.get(key)
        if m is None:
            sign = -1 if inverse else 1
            m = Mat.diag(
                RationalFunction.v_power(sign * self.k_exponent(i, s))
                for s in range(self.dim)
            )
            self._kmats[key] = m
        return m

    def e_matrix(self, i) -> Mat:
        m = self.E.get(i)
        if m is None:
            # parabolic extension: raising generators outside the subalgebra
            # act by zero
            return Mat.zero(self.dim, self.dim)
        return m

    def f_matrix(self, i) -> Mat:
        m = self.F.get(i)
        if m is None:
            raise ValueError(
                f"f_{i} does not act on this module (lowering set {self.lowering})"
            )
        return m

    def gen_matrix(self, gen) -> Mat:
        kind, i = gen
        if kind == "e":
            return self.e_matrix(i)
        if kind == "f":
            return self.f_matrix(i)
        if kind == "k":
            return self.k_matrix(i)
        if kind == "K":
            return self.k_matrix(i, inverse=True)
        raise ValueError(f"unknown generator {gen!r}")

    def weight_spaces(self):
        """Map weight -> list of basis indices, in basis order."""
        out = {}
        for s, w in enumerate(self.weights):
            out.setdefault(w, []).append(s)
        return out

    def embed_from_highest(self, f_apply, hwv: dict) -> list:
        """Images of the canonical basis inside another module.

        ``f_apply(i, vec)`` must apply the target module's f_i to a sparse
        vector; ``hwv`` is the image of the highest-weight vector.  Returns a
        list of sparse vectors, one per basis index.
        """
        cols = [dict(hwv)]
        for s in range(1, self.dim):
            acc = {}
            for parent, i, coeff in self.constructions[s]:
                acc = vec_add(acc, vec_scale(f_apply(i, cols[parent]), coeff))
            cols.append(acc)
        return cols

    def __repr__(self):
        return f"IrrepModule({self.cd.name}, hw={self.hw}, dim={self.dim})"


def _weight_key(w):
    # deterministic group order inside a level: lexicographically descending
    return tuple(-c for c in w)


def build_module(cd: CartanData, hw, lowering) -> IrrepModule:
    """Shared builder; see the module docstring for the algorithm."""
    lowering = tuple(sorted(lowering))
    for i in lowering:
        if hw[i - 1] < 0:
            raise ValueError(f"weight {hw} not dominant for lowering set {lowering}")

    weights = [tuple(hw)]
    gram = [RF_ONE]
    constructions = [[]]
    e_cols = {i: {} for i in lowering}   # column index -> {row: RF}
    f_cols = {i: {} for i in lowering}
    level = [0]

    alphas = {i: cd.alpha_fundamental(i) for i in lowering}

    while level:
        groups = {}
        for p in level:
            wp = weights[p]
            for i in lowering:
                w = tuple(wp[t] - alphas[i][t] for t in range(cd.rank))
                groups.setdefault(w, []).append((p, i))
        new_level = []
        for w in sorted(groups, key=_weight_key):
            cands = groups[w]
            ncand = len(cands)
            # raising action on each candidate: e_j f_i w_p =
            #   f_i e_j w_p + delta_ij [<wt(p), i>] w_p
            ecols = []
            for p, i in cands:
                col = {}
                for j in lowering:
                    vec = {}
                    for r, x in e_cols[j].get(p, {}).items():
                        for rr, y in f_cols[i].get(r, {}).items():
                            s = vec.get(rr, RF_ZERO) + y * x
                            if s:
                                vec[rr] = s
                            else:
                                vec.pop(rr, None)
                    if j == i:
                        scalar = q_integer(weights[p][i - 1], cd.d[i - 1])
                        if scalar:
                            s = vec.get(p, RF_ZERO) + scalar
                            if s:
                                vec[p] = s
                            else:
                                vec.pop(p, None)
                    col[j] = vec
                ecols.append(col)
            # candidate pair Gram: (c_a, c_b) = g_{p_a} * [e_{i_a} c_b]_{p_a}
            G = [[RF_ZERO] * ncand for _ in range(ncand)]
            for a, (pa, ia) in enumerate(cands):
                ga = gram[pa]
                for b in range(ncand):
                    comp = ecols[b][ia].get(pa)
                    if comp:
                        G[a][b] = ga * comp
            # Gram-Schmidt over the candidate span; zero self-pairing means the
            # candidate is already a combination of the accepted vectors
            accepted = []   # (basis_index, coeffs over candidate indices, g)
            for b, (pb, ib) in enumerate(cands):
                proj = {}
                for s_idx, coeffs, g in accepted:
                    pair = RF_ZERO
                    for u, cu in coeffs.items():
                        if G[u][b]:
                            pair = pair + cu * G[u][b]
                    if pair:
                        proj[s_idx] = pair / g
                r_coeffs = {b: RF_ONE}
                for s_idx, coeffs, g in accepted:
                    x = proj.get(s_idx)
                    if x:
                        for u, cu in coeffs.items():
                            s = r_coeffs.get(u, RF_ZERO) - x * cu
                            if s:
                                r_coeffs[u] = s
                            else:
                                r_coeffs.pop(u, None)
                g_r = RF_ZERO
                for u, cu in r_coeffs.items():
                    if G[u][b]:
                        g_r = g_r + cu * G[u][b]
                if g_r:
                    s_new = len(weights)
                    weights.append(w)
                    gram.append(g_r)
                    constructions.append(
                        [(cands[u][0], cands[u][1], cu) for u, cu in sorted(r_coeffs.items())]
                    )
                    # raising matrices on the new basis vector
                    for j in lowering:
                        acc = {}
                        for u, cu in r_coeffs.items():
                            for rr, y in ecols[u][j].items():
                                s = acc.get(rr, RF_ZERO) + cu * y
                                if s:
                                    acc[rr] = s
                                else:
                                    acc.pop(rr, None)
                        if acc:
                            e_cols[j][s_new] = acc
                    coords = {s_new: RF_ONE}
                    for s_idx, x in proj.items():
                        coords[s_idx] = x
                    accepted.append((s_new, r_coeffs, g_r))
                    new_level.append(s_new)
                else:
                    coords = dict(proj)
                # lowering matrix column for the candidate's parent
                if coords:
                    target = f_cols[ib].setdefault(pb, {})
                    for rr, y in coords.items():
                        s = target.get(rr, RF_ZERO) + y
                        if s:
                            target[rr] = s
                        else:
                            target.pop(rr, None)
        level = new_level

    dim = len(weights)
    E = {
        i: Mat(dim, dim, {(r, c): x for c, col in e_cols[i].items() for r, x in col.items()})
        for i in lowering
    }
    F = {
        i: Mat(dim, dim, {(r, c): x for c, col in f_cols[i].items() for r, x in col.items()})
        for i in lowering
    }
    return IrrepModule(cd, hw, lowering, weights, E, F, gram, constructions)


def build_irrep(cd: CartanData, hw) -> IrrepModule:
    """Irreducible module of the full algebra with dominant highest weight."""
    if any(c < 0 for c in hw):
        raise ValueError(f"highest weight {tuple(hw)} is not dominant")
    return build_module(cd, hw, range(1, cd.rank + 1))


def act_word(m: IrrepModule, x: AlgebraWord) -> Mat:
    """Evaluate a formal word combination as a matrix on the module."""
    out = Mat.zero(m.dim, m.dim)
    for word, c in x.terms.items():
        acc = Mat.identity(m.dim)
        for gen in word:
            acc = acc @ m.gen_matrix(gen)
        out = out + acc.scale(c)
    return out


# --- relations report ---------------------------------------------------------


def check_serre(m: IrrepModule) -> list:
    """Verify every defining relation as an exact matrix identity.

    Returns a list of {"relation": ..., "ok": bool}; failures are entries,
    not exceptions.
    """
    cd = m.cd
    report = []
    idx = m.lowering

    def record(name, ok):
        report.append({"relation": name, "ok": bool(ok)})

    for i in range(1, cd.rank + 1):
        ki = m.k_matrix(i)
        kiv = m.k_matrix(i, inverse=True)
        record(f"k{i} k{i}^-1 = 1", (ki @ kiv) == Mat.identity(m.dim))
        for j in range(1, cd.rank + 1):
            kj = m.k_matrix(j)
            record(f"k{i} k{j} = k{j} k{i}", (ki @ kj) == (kj @ ki))
        for j in idx:
            ej = m.e_matrix(j)
            fj = m.f_matrix(j)
            pairing = cd.d[i - 1] * cd.cartan[i - 1][j - 1]
            ve = RationalFunction.v_power(pairing)
            vf = RationalFunction.v_power(-pairing)
            record(
                f"k{i} e{j} k{i}^-1 = v^({pairing}) e{j}",
                (ki @ ej @ kiv) == ej.scale(ve),
            )
            record(
                f"k{i} f{j} k{i}^-1 = v^(-{pairing}) f{j}",
                (ki @ fj @ kiv) == fj.scale(vf),
            )

    for i in idx:
        ei, fi = m.e_matrix(i), m.f_matrix(i)
        for j in idx:
            ej, fj = m.e_matrix(j), m.f_matrix(j)
            lhs = (ei @ fj) - (fj @ ei)
            if i == j:
                rhs = Mat.diag(
                    q_integer(m.weights[s][i - 1], cd.d[i - 1]) for s in range(m.dim)
                )
            else:
                rhs = Mat.zero(m.dim, m.dim)
            record(f"[e{i}, f{j}]", lhs == rhs)

    for i in idx:
        for j in idx:
            if i == j:
                continue
            n = 1 - cd.cartan[i - 1][j - 1]
            for kind in ("e", "f"):
                xi = m.gen_matrix((kind, i))
                xj = m.gen_matrix((kind, j))
                powers = [Mat.identity(m.dim)]
                for _ in range(n):
                    powers.append(powers[-1] @ xi)
                total = Mat.zero(m.dim, m.dim)
                for t in range(n + 1):
                    term = powers[t] @ xj @ powers[n - t]
                    coeff = gauss_binomial(n, t, cd.d[i - 1])
                    if t % 2:
                        coeff = -coeff
                    total = total + term.scale(coeff)
                record(f"serre {kind}{i},{kind}{j}", total.is_zero())
    return report


def relations_ok(m: IrrepModule) -> bool:
    return all(entry["ok"] for entry in check_serre(m))


# --- Cartan monomial for the square of the antipode ---------------------------


class CartanMonomial:
    """Product of k_j powers, acting on a weight mu by v^(mu, sum c_j alpha_j)."""

    __slots__ = ("cd", "exponents")

    def __init__(self, cd, exponents):
        self.cd = cd
        self.exponents = tuple(exponents)

    def weight_exponent(self, mu) -> int:
        total = 0
        for j, c in enumerate(self.exponents):
            total += c * mu[j] * self.cd.d[j]
        return total

    def matrix(self, m: IrrepModule, inverse=False) -> Mat:
        sign = -1 if inverse else 1
        return Mat.diag(
            RationalFunction.v_power(sign * self.weight_exponent(w))
            for w in m.weights
        )


def k2rho(cd: CartanData) -> CartanMonomial:
    """The Cartan monomial implementing the square of the antipode.

    Its exponent vector c satisfies sum c_j alpha_j = 4 rho, so conjugation
    scales e_i by q^(2 rho, alpha_i).
    """
    return CartanMonomial(cd, (2 * c for c in cd.two_rho))


def quantum_dimension(m: IrrepModule) -> RationalFunction:
    """Trace of the k2rho action: sum over weights of v^(4 rho, mu)."""
    mono = k2rho(m.cd)
    total = RF_ZERO
    for w in m.weights:
        total = total + RationalFunction.v_power(mono.weight_exponent(w))
    return total


# --- cache and serialization ---------------------------------------------------


class IrrepCache:
    """Shared store of built modules; concurrent readers, locked insertion."""

    def __init__(self):
        self._lock = threading.Lock()
        self._store = {}

    def irrep(self, cd: CartanData, hw) -> IrrepModule:
        return self._get(cd, tuple(hw), tuple(range(1, cd.rank + 1)))

    def levi(self, cd: CartanData, theta, hw) -> IrrepModule:
        return self._get(cd, tuple(hw), tuple(sorted(theta)))

    def _get(self, cd, hw, lowering):
        key = (cd.name, hw, lowering)
        m = self._store.get(key)
        if m is not None:
            return m
        m = build_module(cd, hw, lowering)
        with self._lock:
            return self._store.setdefault(key, m)


def _mat_to_json(m: Mat):
    return {
        "shape": [m.nrows, m.ncols],
        "entries": [[r, c, rf_to_text(x)] for (r, c), x in sorted(m.data.items())],
    }


def _mat_from_json(obj) -> Mat:
    nr, nc = obj["shape"]
    m = Mat(nr, nc)
    for r, c, text in obj["entries"]:
        m.data[(int(r), int(c))] = rf_from_text(text)
    return m


def irrep_to_json(m: IrrepModule) -> dict:
    return {
        "algebra": m.cd.name,
        "highest_weight": list(m.hw),
        "lowering": list(m.lowering),
        "weights": [list(w) for w in m.weights],
        "E": {str(i): _mat_to_json(mat) for i, mat in sorted(m.E.items())},
        "F": {str(i): _mat_to_json(mat) for i, mat in sorted(m.F.items())},
        "gram": [rf_to_text(g) for g in m.gram],
        "constructions": [
            [[p, i, rf_to_text(c)] for p, i, c in entry] for entry in m.constructions
        ],
    }


def irrep_from_json(cd: CartanData, obj) -> IrrepModule:
    if obj["algebra"] != cd.name:
        raise ValueError("algebra mismatch in serialized module")
    return IrrepModule(
        cd,
        tuple(obj["highest_weight"]),
        tuple(obj["lowering"]),
        [tuple(w) for w in obj["weights"]],
        {int(i): _mat_from_json(mj) for i, mj in obj["E"].items()},
        {int(i): _mat_from_json(mj) for i, mj in obj["F"].items()},
        [rf_from_text(t) for t in obj["gram"]],
        [
            [(int(p), int(i), rf_from_text(t)) for p, i, t in entry]
            for entry in obj["constructions"]
        ],
    )
