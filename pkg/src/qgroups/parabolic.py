"""Reductive and parabolic subalgebras: branching and intertwiner spaces.

A subalgebra is selected by a subset Theta of the simple-root indices.  The
reductive (Levi) part is generated by the full torus plus e_j, f_j for j in
Theta; the parabolic part adds the remaining raising generators, which act
by zero on any irreducible module of the Levi part.

Levi irreducibles are labeled by their full torus character (all Cartan
eigenvalues), not just the Theta components, because intertwiner existence
depends on the complete weight.  They are built with the same machinery as
the full modules, restricted to lowering indices in Theta.
"""

from __future__ import annotations

from fractions import Fraction

from .cartan import CartanData, inner, inner_with_root, weight_multiplicities
from .linalg import Mat, kernel_basis
from .scalar import RF_ZERO
from .uqrep import IrrepCache, IrrepModule


class ParabolicData:
    """Subset Theta plus the generator bookkeeping derived from it."""

    __slots__ = ("cd", "theta")

    def __init__(self, cd: CartanData, theta):
        theta = tuple(sorted(set(theta)))
        for j in theta:
            if not 1 <= j <= cd.rank:
                raise ValueError(f"index {j} outside 1..{cd.rank}")
        self.cd = cd
        self.theta = theta

    @property
    def complement(self):
        return tuple(j for j in range(1, self.cd.rank + 1) if j not in self.theta)

    def levi_generators(self):
        """Generators of the reductive subalgebra, as (kind, index) pairs."""
        gens = []
        for i in range(1, self.cd.rank + 1):
            gens.append(("k", i))
            gens.append(("K", i))
        for j in self.theta:
            gens.append(("e", j))
            gens.append(("f", j))
        return gens

    def parabolic_generators(self):
        return self.levi_generators() + [("e", j) for j in self.complement]

    def sub_positive_roots(self):
        """Positive roots of the ambient system supported on Theta."""
        theta = set(self.theta)
        out = []
        for root in self.cd.positive_roots:
            if all(c == 0 or (j + 1) in theta for j, c in enumerate(root)):
                out.append(root)
        return tuple(out)

    def __repr__(self):
        return f"ParabolicData({self.cd.name}, theta={self.theta})"


def levi_reflect_to_antidominant(p: ParabolicData, mu):
    """Apply Theta-reflections until all Theta coordinates are nonpositive."""
    cd = p.cd
    cur = tuple(mu)
    while True:
        for j in p.theta:
            if cur[j - 1] > 0:
                alpha = cd.alpha_fundamental(j)
                c = cur[j - 1]
                cur = tuple(cur[t] - c * alpha[t] for t in range(cd.rank))
                break
        else:
            return cur


def levi_lowest_weight(p: ParabolicData, mu):
    """Lowest weight of the Levi irreducible with highest weight mu."""
    for j in p.theta:
        if mu[j - 1] < 0:
            raise ValueError(f"{mu} is not Theta-dominant for {p.theta}")
    return levi_reflect_to_antidominant(p, mu)


def levi_weight_multiplicities(p: ParabolicData, mu) -> dict:
    """Freudenthal recursion inside the Theta subsystem, ambient coordinates."""
    cd = p.cd
    for j in p.theta:
        if mu[j - 1] < 0:
            raise ValueError(f"{mu} is not Theta-dominant")
    pos = p.sub_positive_roots()
    if not pos:
        return {tuple(mu): 1}
    rho_sub = tuple(
        Fraction(sum(r[t] for r in pos), 2) for t in range(cd.rank)
    )  # simple-root coordinates

    def inner_rho(w):
        # (w + rho_sub, w + rho_sub) with rho_sub given on the root side
        wr = cd.fundamental_to_root(w)
        tot = Fraction(0)
        full = [wr[t] + rho_sub[t] for t in range(cd.rank)]
        for s in range(cd.rank):
            for t in range(cd.rank):
                tot += full[s] * full[t] * cd.d[t] * cd.cartan[t][s]
        return tot

    low = levi_reflect_to_antidominant(p, mu)
    diff = cd.fundamental_to_root(tuple(mu[t] - low[t] for t in range(cd.rank)))
    height_bound = int(sum(diff))

    c_top = inner_rho(mu)
    mults = {tuple(mu): 1}
    alphas = [cd.alpha_fundamental(j) for j in p.theta]
    level = {tuple(mu)}
    for _ in range(height_bound):
        candidates = set()
        for w in level:
            for a in alphas:
                candidates.add(tuple(w[t] - a[t] for t in range(cd.rank)))
        nxt = set()
        for w in candidates:
            total = Fraction(0)
            for root in pos:
                af = cd.root_to_fundamental(root)
                for k in range(1, height_bound + 1):
                    nu = tuple(w[t] + k * af[t] for t in range(cd.rank))
                    m = mults.get(nu, 0)
                    if m:
                        total += 2 * m * inner_with_root(cd, nu, root)
            if total == 0:
                continue
            denom = c_top - inner_rho(w)
            if denom == 0:
                raise ArithmeticError("branching Freudenthal denominator vanished")
            m = total / denom
            if m.denominator != 1 or m < 0:
                raise ArithmeticError(f"bad Levi multiplicity {m}")
            if m:
                mults[w] = int(m)
                nxt.add(w)
        level = nxt
        if not level:
            break
    return mults


def branching_oracle(cd: CartanData, p: ParabolicData, lam) -> dict:
    """Classical branching multiplicities {levi_hw: mult} by character arithmetic."""
    remaining = dict(weight_multiplicities(cd, lam))
    rho = (1,) * cd.rank
    out = {}
    while remaining:
        lead = max(remaining, key=lambda w: (inner(cd, w, rho), w))
        mult = remaining[lead]
        for j in p.theta:
            if lead[j - 1] < 0:
                raise ArithmeticError("leading branch weight not Theta-dominant")
        if mult <= 0:
            raise ArithmeticError("negative branching multiplicity")
        out[lead] = out.get(lead, 0) + mult
        for w, m in levi_weight_multiplicities(p, lead).items():
            left = remaining.get(w, 0) - mult * m
            if left:
                remaining[w] = left
            elif w in remaining:
                del remaining[w]
    return out


class LeviBranching:
    """Decomposition of a module under the Levi subalgebra.

    summands: list of (mu, levi_module, columns) where columns are the images
    of the Levi-canonical basis inside the big module, as sparse vectors.
    """

    __slots__ = ("module", "p", "summands")

    def __init__(self, module, p, summands):
        self.module = module
        self.p = p
        self.summands = summands

    def multiplicities(self) -> dict:
        out = {}
        for mu, _, _ in self.summands:
            out[mu] = out.get(mu, 0) + 1
        return out

    def total_dim(self) -> int:
        return sum(lm.dim for _, lm, _ in self.summands)

    def __repr__(self):
        return f"LeviBranching({self.multiplicities()})"


def _levi_hw_vectors(m, theta, weight_indices):
    """Joint kernel of the Theta raising operators on a span of basis indices."""
    rows = []
    for j in theta:
        e = m.e_matrix(j)
        cols = {c: {} for c in weight_indices}
        touched = set()
        for (r, c), x in e.data.items():
            if c in cols:
                cols[c][r] = x
                touched.add(r)
        for r in sorted(touched):
            rows.append([cols[c].get(r, RF_ZERO) for c in weight_indices])
    if not rows:
        rows = [[RF_ZERO] * len(weight_indices)]
    kern = kernel_basis(rows, len(weight_indices))
    return [{weight_indices[k]: x for k, x in vec.items()} for vec in kern]


def restrict_levi(m: IrrepModule, p: ParabolicData, cache: IrrepCache) -> LeviBranching:
    """Complete decomposition of a module under the Levi subalgebra."""
    cd = p.cd
    rho = (1,) * cd.rank
    spaces = m.weight_spaces()
    order = sorted(spaces, key=lambda w: (-inner(cd, w, rho), tuple(-c for c in w)))
    summands = []
    covered = 0
    for w in order:
        if any(w[j - 1] < 0 for j in p.theta):
            continue
        hwvs = _levi_hw_vectors(m, p.theta, spaces[w])
        if not hwvs:
            continue
        levi_mod = cache.levi(cd, p.theta, w)
        for u in hwvs:
            cols = levi_mod.embed_from_highest(
                lambda i, vec: m.f_matrix(i).apply(vec), u
            )
            summands.append((w, levi_mod, cols))
            covered += levi_mod.dim
    if covered != m.dim:
        raise ArithmeticError(
            f"branching covers {covered} of {m.dim} dimensions"
        )
    return LeviBranching(m, p, summands)


class HomBasis:
    """Basis of an intertwiner space as explicit matrices target x source."""

    __slots__ = ("source", "target", "flavor", "maps")

    def __init__(self, source, target, flavor, maps):
        self.source = source
        self.target = target
        self.flavor = flavor
        self.maps = maps

    def __len__(self):
        return len(self.maps)

    def __iter__(self):
        return iter(self.maps)

    def to_json(self):
        from .uqrep import _mat_to_json

        return {
            "source": list(self.source.hw),
            "target": list(self.target.hw),
            "target_lowering": list(self.target.lowering),
            "flavor": self.flavor,
            "maps": [_mat_to_json(phi) for phi in self.maps],
        }

    def __repr__(self):
        return f"HomBasis({self.flavor}, dim={len(self.maps)})"


def hom_space(m: IrrepModule, target: IrrepModule, p: ParabolicData,
              flavor: str = "levi") -> HomBasis:
    """Solve the intertwining equations phi x = x phi over the chosen subalgebra.

    flavor "levi" uses the reductive generators, "parabolic" additionally
    imposes the raising generators outside Theta (acting on the target
    through e_matrix, which is zero for proper Levi modules and the honest
    action when the target is the restriction of a full module).
    """
    if flavor not in ("levi", "parabolic"):
        raise ValueError(f"unknown flavor {flavor!r}")
    cd = p.cd
    # unknowns: entries (a, w) with matching full torus character
    tgt_spaces = target.weight_spaces()
    unknowns = []
    for w_idx, w in enumerate(m.weights):
        for a in tgt_spaces.get(w, ()):
            unknowns.append((a, w_idx))
    unknowns.sort()
    pos = {u: k for k, u in enumerate(unknowns)}
    if not unknowns:
        return HomBasis(m, target, flavor, [])

    gens = [("e", j) for j in p.theta] + [("f", j) for j in p.theta]
    if flavor == "parabolic":
        gens += [("e", j) for j in p.complement]

    rows = {}

    def add(constraint_key, unknown, coeff):
        if not coeff:
            return
        row = rows.setdefault(constraint_key, {})
        s = row.get(unknown, RF_ZERO) + coeff
        if s:
            row[unknown] = s
        else:
            row.pop(unknown, None)

    for gen in gens:
        mw = m.gen_matrix(gen)
        mv = target.gen_matrix(gen)
        # (phi Mw - Mv phi)[a, w'] = 0
        for (w, wp), x in mw.data.items():
            for a in range(target.dim):
                if (a, w) in pos:
                    add((gen, a, wp), pos[(a, w)], x)
        for (a, b), y in mv.data.items():
            for wp in range(m.dim):
                if (b, wp) in pos:
                    add((gen, a, wp), pos[(b, wp)], -y)

    mat = [
        [row.get(k, RF_ZERO) for k in range(len(unknowns))]
        for _, row in sorted(rows.items(), key=lambda kv: str(kv[0]))
    ]
    if not mat:
        mat = [[RF_ZERO] * len(unknowns)]
    kern = kernel_basis(mat, len(unknowns))
    maps = []
    for vec in kern:
        phi = Mat(target.dim, m.dim)
        for k, x in vec.items():
            a, w_idx = unknowns[k]
            phi.data[(a, w_idx)] = x
        maps.append(phi)
    return HomBasis(m, target, flavor, maps)


def check_intertwiner(phi: Mat, m: IrrepModule, target: IrrepModule,
                      p: ParabolicData, flavor: str) -> bool:
    """Exact re-verification of the intertwining equations for one map."""
    gens = [("k", i) for i in range(1, p.cd.rank + 1)]
    gens += [("e", j) for j in p.theta] + [("f", j) for j in p.theta]
    if flavor == "parabolic":
        gens += [("e", j) for j in p.complement]
    for gen in gens:
        if (phi @ m.gen_matrix(gen)) != (target.gen_matrix(gen) @ phi):
            return False
    return True


def tensor_hom(alg, p: ParabolicData, phi1: Mat, src1: IrrepModule, tgt1: IrrepModule,
               phi2: Mat, src2: IrrepModule, tgt2: IrrepModule):
    """Induced intertwiner on highest-weight sums.

    Composes the inclusion of the top tensor component with phi1 (x) phi2 and
    the Levi projection onto the top component of the target product.  The
    result is a nonzero intertwiner from the module of weight hw1 + hw2 to
    the Levi module of weight mu1 + mu2; a zero composite raises.
    """
    from .tensor import decompose, tensor_module

    cd = p.cd
    lam_sum = tuple(a + b for a, b in zip(src1.hw, src2.hw))
    mu_sum = tuple(a + b for a, b in zip(tgt1.hw, tgt2.hw))

    tsrc = tensor_module(src1, src2)
    cg_src = decompose(tsrc, alg.irreps)
    incl = None
    for nu, copies, canon in cg_src.components:
        if nu == lam_sum:
            incl = Mat(tsrc.dim, canon.dim)
            for c in range(canon.dim):
                incl.set_column(c, cg_src.basis.column(copies[0] + c))
            break
    if incl is None:
        raise ArithmeticError("top component missing from source product")

    ttgt = tensor_module(tgt1, tgt2)
    cg_tgt = decompose(ttgt, alg.irreps)
    proj = None
    for nu, copies, canon in cg_tgt.components:
        if nu == mu_sum:
            proj = Mat(canon.dim, ttgt.dim)
            off = copies[0]
            for (r, c), x in cg_tgt.basis_inv.data.items():
                if off <= r < off + canon.dim:
                    proj.data[(r - off, c)] = x
            break
    if proj is None:
        raise ArithmeticError("top component missing from target product")

    composite = proj @ phi1.kron(phi2) @ incl
    if composite.is_zero():
        raise ArithmeticError("induced intertwiner vanished")
    return composite


def central_hom_count(p: ParabolicData, cache: IrrepCache) -> int:
    """Number of independent Levi intertwiners from the adjoint-type module
    (highest root) to the trivial character; equals rank minus |Theta|."""
    cd = p.cd
    gamma = cd.root_to_fundamental(cd.highest_root)
    m = cache.irrep(cd, gamma)
    trivial = cache.levi(cd, p.theta, (0,) * cd.rank)
    return len(hom_space(m, trivial, p, "levi"))
