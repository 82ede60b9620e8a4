"""Cartan data, weights and Weyl-group computations for small-rank types.

Weights live in fundamental coordinates (integer tuples); roots are kept in
simple-root coordinates.  The supported types are hard-coded data tables for
A1, A2, A3 and B2 (Bourbaki numbering, so for B2 the first simple root is
long).  The symmetrizers d_i satisfy (alpha_i, alpha_i) = 2 d_i.
"""

from __future__ import annotations

from fractions import Fraction


class CartanData:
    """Rank, Cartan matrix, symmetrizers, positive roots, 2*rho, highest root."""

    __slots__ = (
        "letter",
        "rank",
        "cartan",
        "d",
        "positive_roots",
        "two_rho",
        "highest_root",
        "_inv_cartan",
    )

    def __init__(self, letter, rank, cartan, d, positive_roots, highest_root):
        self.letter = letter
        self.rank = rank
        self.cartan = tuple(tuple(row) for row in cartan)
        self.d = tuple(d)
        self.positive_roots = tuple(tuple(r) for r in positive_roots)
        self.two_rho = tuple(
            sum(root[i] for root in self.positive_roots) for i in range(rank)
        )
        self.highest_root = tuple(highest_root)
        self._inv_cartan = _invert_rational(self.cartan)

    @property
    def name(self):
        return f"{self.letter}{self.rank}"

    def simple_indices(self):
        return tuple(range(1, self.rank + 1))

    def root_to_fundamental(self, root):
        """Fundamental coordinates of sum(c_j alpha_j): component i is sum_j a_ij c_j."""
        return tuple(
            sum(self.cartan[i][j] * root[j] for j in range(self.rank))
            for i in range(self.rank)
        )

    def fundamental_to_root(self, weight):
        """Simple-root coordinates (rational) of a weight given in fundamental ones."""
        return tuple(
            sum(self._inv_cartan[i][j] * weight[j] for j in range(self.rank))
            for i in range(self.rank)
        )

    def alpha_fundamental(self, i):
        """Fundamental coordinates of the simple root alpha_i (1-based i)."""
        return tuple(self.cartan[k][i - 1] for k in range(self.rank))

    def to_json(self):
        return {
            "type": self.letter,
            "rank": self.rank,
            "cartan": [list(r) for r in self.cartan],
            "d": list(self.d),
            "positive_roots": [list(r) for r in self.positive_roots],
            "two_rho": list(self.two_rho),
            "highest_root": list(self.highest_root),
        }

    def __repr__(self):
        return f"CartanData({self.name})"


def _invert_rational(a):
    n = len(a)
    work = [[Fraction(x) for x in row] + [Fraction(i == j) for j in range(n)]
            for i, row in enumerate(a)]
    for c in range(n):
        pr = next(i for i in range(c, n) if work[i][c])
        work[c], work[pr] = work[pr], work[c]
        piv = work[c][c]
        work[c] = [x / piv for x in work[c]]
        for i in range(n):
            if i != c and work[i][c]:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[c])]
    return tuple(tuple(row[n:]) for row in work)


_TABLES = {
    "A1": dict(
        cartan=[[2]],
        d=[1],
        positive_roots=[(1,)],
        highest_root=(1,),
    ),
    "A2": dict(
        cartan=[[2, -1], [-1, 2]],
        d=[1, 1],
        positive_roots=[(1, 0), (0, 1), (1, 1)],
        highest_root=(1, 1),
    ),
    "A3": dict(
        cartan=[[2, -1, 0], [-1, 2, -1], [0, -1, 2]],
        d=[1, 1, 1],
        positive_roots=[
            (1, 0, 0), (0, 1, 0), (0, 0, 1),
            (1, 1, 0), (0, 1, 1), (1, 1, 1),
        ],
        highest_root=(1, 1, 1),
    ),
    "B2": dict(
        cartan=[[2, -1], [-2, 2]],
        d=[2, 1],
        positive_roots=[(1, 0), (0, 1), (1, 1), (1, 2)],
        highest_root=(1, 2),
    ),
}


def cartan_data(name: str) -> CartanData:
    """Look up a supported type by its name, e.g. "A2"."""
    name = name.strip().upper()
    if name not in _TABLES:
        supported = ", ".join(sorted(_TABLES))
        raise ValueError(f"unsupported algebra {name!r} (supported: {supported})")
    t = _TABLES[name]
    return CartanData(name[0], int(name[1:]), t["cartan"], t["d"],
                      t["positive_roots"], t["highest_root"])


SUPPORTED_TYPES = tuple(sorted(_TABLES))


# --- weight operations (weights are integer tuples in fundamental coords) ---


def inner(cd: CartanData, lam, mu) -> Fraction:
    """Inner product (lam, mu) induced by the normalization (a_i, a_i) = 2 d_i."""
    c = cd.fundamental_to_root(mu)
    return sum(
        (Fraction(c[j]) * lam[j] * cd.d[j] for j in range(cd.rank)),
        Fraction(0),
    )


def inner_with_root(cd: CartanData, lam, root) -> Fraction:
    """(lam, alpha) with alpha in simple-root coordinates."""
    return sum(
        (Fraction(root[j]) * lam[j] * cd.d[j] for j in range(cd.rank)),
        Fraction(0),
    )


def reflect(cd: CartanData, lam, i):
    """Simple reflection s_i in fundamental coordinates (1-based i)."""
    c = lam[i - 1]
    alpha = cd.alpha_fundamental(i)
    return tuple(lam[k] - c * alpha[k] for k in range(cd.rank))


def is_dominant(lam) -> bool:
    return all(c >= 0 for c in lam)


def _require_dominant(lam):
    if not is_dominant(lam):
        raise ValueError(f"weight {lam} is not dominant")


def lowest_weight(cd: CartanData, lam):
    """Image of a dominant weight under the longest Weyl element."""
    _require_dominant(lam)
    mu = tuple(lam)
    while True:
        for i in range(cd.rank):
            if mu[i] > 0:
                mu = reflect(cd, mu, i + 1)
                break
        else:
            return mu


def dual_weight(cd: CartanData, lam):
    """Highest weight of the dual module: minus the lowest weight of lam's."""
    return tuple(-c for c in lowest_weight(cd, lam))


def dominant_orbit_rep(cd: CartanData, mu):
    """Dominant representative of the Weyl orbit plus the reflection word used.

    Applying the returned word left to right to mu reproduces the dominant
    representative.
    """
    word = []
    cur = tuple(mu)
    while True:
        for i in range(cd.rank):
            if cur[i] < 0:
                cur = reflect(cd, cur, i + 1)
                word.append(i + 1)
                break
        else:
            return cur, tuple(word)


def weyl_orbit(cd: CartanData, mu):
    """Full Weyl orbit of a weight, by reflection closure."""
    seen = {tuple(mu)}
    queue = [tuple(mu)]
    while queue:
        w = queue.pop()
        for i in range(1, cd.rank + 1):
            s = reflect(cd, w, i)
            if s not in seen:
                seen.add(s)
                queue.append(s)
    return seen


def weyl_dim(cd: CartanData, lam) -> int:
    """Classical Weyl dimension of the highest-weight module."""
    _require_dominant(lam)
    rho = (1,) * cd.rank
    lam_rho = tuple(lam[i] + 1 for i in range(cd.rank))
    num = Fraction(1)
    for alpha in cd.positive_roots:
        num *= inner_with_root(cd, lam_rho, alpha) / inner_with_root(cd, rho, alpha)
    if num.denominator != 1 or num <= 0:
        raise ArithmeticError(f"Weyl dimension came out as {num}")
    return int(num)


def weight_multiplicities(cd: CartanData, lam) -> dict:
    """Weight multiplicities of the classical module, by Freudenthal recursion.

    Serves as the independent oracle for the weight-space decomposition of
    the deformed modules.
    """
    _require_dominant(lam)
    rho = (1,) * cd.rank
    lam_rho = tuple(x + 1 for x in lam)
    c_top = inner(cd, lam_rho, lam_rho)
    low = lowest_weight(cd, lam)
    height_bound = sum(cd.fundamental_to_root(tuple(
        lam[i] - low[i] for i in range(cd.rank))))
    if height_bound != int(height_bound):
        raise ArithmeticError("non-integral height bound")
    height_bound = int(height_bound)

    mults = {tuple(lam): 1}
    alphas = [cd.alpha_fundamental(i) for i in range(1, cd.rank + 1)]
    level = {tuple(lam)}
    for _ in range(height_bound):
        candidates = set()
        for mu in level:
            for a in alphas:
                candidates.add(tuple(mu[k] - a[k] for k in range(cd.rank)))
        nxt = set()
        for mu in candidates:
            mu_rho = tuple(x + 1 for x in mu)
            denom = c_top - inner(cd, mu_rho, mu_rho)
            total = Fraction(0)
            for alpha in cd.positive_roots:
                af = cd.root_to_fundamental(alpha)
                k = 1
                while True:
                    nu = tuple(mu[t] + k * af[t] for t in range(cd.rank))
                    m = mults.get(nu, 0)
                    if m == 0 and k > height_bound:
                        break
                    if m:
                        total += 2 * m * inner_with_root(cd, nu, alpha)
                    k += 1
            if total == 0:
                continue
            if denom == 0:
                raise ArithmeticError("Freudenthal denominator vanished")
            m = total / denom
            if m.denominator != 1:
                raise ArithmeticError("non-integral Freudenthal multiplicity")
            if m > 0:
                mults[mu] = int(m)
                nxt.add(mu)
        level = nxt
        if not level:
            break
    return mults


def character_product(cd: CartanData, lam, mu) -> dict:
    """Formal product of two characters as a weight-multiplicity dict."""
    ml = weight_multiplicities(cd, lam)
    mm = weight_multiplicities(cd, mu)
    out = {}
    for w1, m1 in ml.items():
        for w2, m2 in mm.items():
            w = tuple(a + b for a, b in zip(w1, w2))
            out[w] = out.get(w, 0) + m1 * m2
    return out


def char_decompose_oracle(cd: CartanData, lam, mu) -> dict:
    """Tensor-product decomposition {nu: multiplicity} by character arithmetic.

    Multiplies the formal characters and repeatedly subtracts the character
    of the dominant leading term; fully independent of the deformed theory.
    """
    _require_dominant(lam)
    _require_dominant(mu)
    remaining = {w: m for w, m in character_product(cd, lam, mu).items() if m}
    out = {}
    rho = (1,) * cd.rank
    while remaining:
        # a weight of maximal height is dominant and leads an irreducible character
        lead = max(remaining, key=lambda w: (inner(cd, tuple(x + 1 for x in w), rho), w))
        if not is_dominant(lead):
            raise ArithmeticError(f"leading weight {lead} not dominant")
        mult = remaining[lead]
        if mult < 0:
            raise ArithmeticError("negative multiplicity in character subtraction")
        out[lead] = out.get(lead, 0) + mult
        for w, m in weight_multiplicities(cd, lead).items():
            left = remaining.get(w, 0) - mult * m
            if left:
                remaining[w] = left
            else:
                remaining.pop(w, None)
    return out
