"""Explicit graded modules truncated at a degree bound.

A :class:`TruncatedModule` stores dimensions for degrees 0..D and, for each
degree n <= D-1 and 1 <= i <= n, the exact-rational matrix of the i-th
raising operator M_n -> M_{n+1}.  Operators with index above the degree act
as the identity and are not stored.  Everything downstream (Hom dimensions,
minimal-generator counts, truncation gradings, Koszul homology and Betti
tables) is computed from these matrices by exact linear algebra, so this
module serves as the brute-force oracle for the symbolic layer.

Truncation bookkeeping: results that depend on degrees near the bound carry
the highest degree at which they are certified; degree D itself is always
treated as suspect.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from itertools import combinations

from .linalg import Echelon, Matrix, Vec, hstack, kernel_basis, vec_int_normalize
from .words import check_word, gap_decomposition


class TruncatedModule:
    __slots__ = ("D", "dims", "alpha")

    def __init__(self, D: int, dims: list[int], alpha: dict):
        if D < 0 or len(dims) != D + 1:
            raise ValueError("dims must cover degrees 0..D")
        self.D = D
        self.dims = list(dims)
        self.alpha = dict(alpha)
        for n in range(D):
            for i in range(1, n + 1):
                m = self.alpha.get((n, i))
                if m is None:
                    self.alpha[(n, i)] = Matrix.zero(dims[n + 1], dims[n])
                elif (m.nrows, m.ncols) != (dims[n + 1], dims[n]):
                    raise ValueError(f"alpha[{n},{i}] has wrong shape")

    def action(self, n: int, i: int) -> Matrix:
        """The matrix of the i-th operator on degree n (identity for i > n)."""
        if not (0 <= n <= self.D):
            raise ValueError("degree out of range")
        if i > n:
            return Matrix.identity(self.dims[n])
        if n == self.D:
            raise ValueError("action out of the top degree is not stored")
        return self.alpha[(n, i)]

    def total_dim(self) -> int:
        return sum(self.dims)

    def to_json(self) -> dict:
        alpha = {}
        for (n, i), m in sorted(self.alpha.items()):
            alpha[f"{n},{i}"] = [[str(Fraction(v)) for v in row] for row in m.to_rows()]
        return {"D": self.D, "dims": list(self.dims), "alpha": alpha}

    @classmethod
    def from_json(cls, data: dict) -> "TruncatedModule":
        D = data["D"]
        dims = data["dims"]
        alpha = {}
        for key, rows in data["alpha"].items():
            n, i = (int(p) for p in key.split(","))
            alpha[(n, i)] = Matrix.from_rows(
                [[Fraction(v) for v in row] for row in rows]) if rows else \
                Matrix.zero(dims[n + 1], dims[n])
        return cls(D, dims, alpha)

    def __repr__(self):
        return f"TruncatedModule(D={self.D}, dims={self.dims})"


def verify_module(M: TruncatedModule) -> list[str]:
    """Check the commutation relations and shapes; empty list means valid."""
    bad = []
    for n in range(M.D):
        for i in range(1, n + 1):
            m = M.alpha[(n, i)]
            if (m.nrows, m.ncols) != (M.dims[n + 1], M.dims[n]):
                bad.append(f"alpha[{n},{i}] shape {m.nrows}x{m.ncols}")
    for n in range(M.D - 1):
        for j in range(2, n + 2):
            for i in range(1, j):
                lhs = M.action(n + 1, j) * M.action(n, i)
                rhs = M.action(n + 1, i) * M.action(n, j - 1)
                if lhs != rhs:
                    bad.append(f"relation failure at degree {n}: ({i},{j})")
    return bad


# -- monomial constructors -------------------------------------------------

def _admissible_tuples(lam: str, degree: int) -> list[tuple[int, ...]]:
    """Increasing tuples for the word lam whose last entry equals degree."""
    k = len(lam)
    if k == 0:
        return [()] if degree == 0 else []
    out: list[tuple[int, ...]] = []

    def build(prefix: tuple[int, ...], pos: int) -> None:
        prev = prefix[-1] if prefix else 0
        if pos == k - 1:
            lo = prev + 1 if lam[pos] == "a" else prev + 1
            ok = degree == prev + 1 if lam[pos] == "b" else degree > prev
            if ok:
                out.append(prefix + (degree,))
            return
        if lam[pos] == "b":
            build(prefix + (prev + 1,), pos + 1)
        else:
            # leave room for the remaining entries below the top degree
            for v in range(prev + 1, degree - (k - 1 - pos) + 1):
                build(prefix + (v,), pos + 1)

    build((), 0)
    return out


def _bump(t: tuple[int, ...], i: int) -> tuple[int, ...]:
    return tuple(v + 1 if v >= i else v for v in t)


def _is_admissible(lam: str, t: tuple[int, ...]) -> bool:
    prev = 0
    for letter, v in zip(lam, t):
        if v <= prev or (letter == "b" and v != prev + 1):
            return False
        prev = v
    return True


def std_module(lam: str, D: int) -> TruncatedModule:
    """Monomial module on the admissible tuples of a constraint word."""
    check_word(lam)
    if D < 0:
        raise ValueError("negative truncation degree")
    bases = [_admissible_tuples(lam, n) for n in range(D + 1)]
    index = [{t: k for k, t in enumerate(b)} for b in bases]
    dims = [len(b) for b in bases]
    alpha = {}
    for n in range(D):
        for i in range(1, n + 1):
            ent = {}
            for c, t in enumerate(bases[n]):
                u = _bump(t, i)
                if _is_admissible(lam, u):
                    ent[(index[n + 1][u], c)] = 1
            alpha[(n, i)] = Matrix(dims[n + 1], dims[n], ent)
    return TruncatedModule(D, dims, alpha)


def trivial(D: int) -> TruncatedModule:
    return std_module("", D)


def simple(n: int, D: int) -> TruncatedModule:
    if n > D:
        raise ValueError(f"simple({n}) does not fit in truncation degree {D}")
    return std_module("b" * n, D)


def principal(r: int, D: int) -> TruncatedModule:
    if r > D:
        raise ValueError(f"principal({r}) does not fit in truncation degree {D}")
    return std_module("a" * r, D)


def zero_module(D: int) -> TruncatedModule:
    return TruncatedModule(D, [0] * (D + 1), {})


# -- functors ----------------------------------------------------------------

def concat(M: TruncatedModule, N: TruncatedModule) -> TruncatedModule:
    """Concatenation product: degree-n part is the sum of M_i (x) N_{n-i}."""
    if M.D != N.D:
        raise ValueError("concat requires a shared truncation degree")
    D = M.D
    # basis of degree n: (i, p, q) laid out by ascending i
    offsets: list[list[int]] = []
    dims = []
    for n in range(D + 1):
        offs = []
        total = 0
        for i in range(n + 1):
            offs.append(total)
            total += M.dims[i] * N.dims[n - i]
        offsets.append(offs)
        dims.append(total)

    def pos(n, i, p, q):
        return offsets[n][i] + p * N.dims[n - i] + q

    alpha = {}
    for n in range(D):
        for k in range(1, n + 1):
            ent = {}
            for i in range(n + 1):
                j = n - i
                if not (M.dims[i] and N.dims[j]):
                    continue
                if k <= i:
                    act = M.alpha[(i, k)]
                    for (pp, p), v in act.entries.items():
                        for q in range(N.dims[j]):
                            ent[(pos(n + 1, i + 1, pp, q), pos(n, i, p, q))] = v
                else:
                    act = N.alpha[(j, k - i)]
                    for (qq, q), v in act.entries.items():
                        for p in range(M.dims[i]):
                            ent[(pos(n + 1, i, p, qq), pos(n, i, p, q))] = v
            alpha[(n, k)] = Matrix(dims[n + 1], dims[n], ent)
    return TruncatedModule(D, dims, alpha)


def shift(M: TruncatedModule) -> TruncatedModule:
    """Degree shift: new degree-n part is the old degree-(n+1) part."""
    if M.D == 0:
        return zero_module(0)
    D = M.D - 1
    dims = M.dims[1:]
    alpha = {}
    for n in range(D):
        for i in range(1, n + 1):
            alpha[(n, i)] = M.alpha[(n + 1, i + 1)]
    return TruncatedModule(D, dims, alpha)


def transpose_module(M: TruncatedModule) -> TruncatedModule:
    """Reverse the operator indexing on each degree: i becomes n+1-i."""
    alpha = {}
    for n in range(M.D):
        for i in range(1, n + 1):
            alpha[(n, i)] = M.alpha[(n, n + 1 - i)]
    return TruncatedModule(M.D, list(M.dims), alpha)


def coinduction(M: TruncatedModule) -> TruncatedModule:
    """Right adjoint of the shift; doubles the underlying space."""
    D = M.D
    dims = [M.dims[n] + (M.dims[n - 1] if n else 0) for n in range(D + 1)]
    # degree-n basis: copy-0 of M_n first, then copy-1 of M_{n-1}

    def pos0(n, p):
        return p

    def pos1(n, p):
        return M.dims[n] + p

    alpha = {}
    for n in range(D):
        for i in range(1, n + 1):
            ent = {}
            if M.dims[n]:
                act = M.alpha[(n, i)]
                for (pp, p), v in act.entries.items():
                    ent[(pos0(n + 1, pp), pos0(n, p))] = v
                if i == 1:
                    for p in range(M.dims[n]):
                        ent[(pos1(n + 1, p), pos0(n, p))] = 1
            if n and M.dims[n - 1] and i >= 2:
                act = M.alpha[(n - 1, i - 1)]
                for (pp, p), v in act.entries.items():
                    ent[(pos1(n + 1, pp), pos1(n, p))] = v
            alpha[(n, i)] = Matrix(dims[n + 1], dims[n], ent)
    return TruncatedModule(D, dims, alpha)


def induction(M: TruncatedModule) -> TruncatedModule:
    """Left adjoint of the shift: countably many copies, truncated at D."""
    D = M.D
    # degree-d basis: (k, p) with p in M_{d-k}, ordered by ascending k
    offsets: list[list[int]] = []
    dims = []
    for d in range(D + 1):
        offs = []
        total = 0
        for k in range(d + 1):
            offs.append(total)
            total += M.dims[d - k]
        offsets.append(offs)
        dims.append(total)

    def pos(d, k, p):
        return offsets[d][k] + p

    alpha = {}
    for d in range(D):
        for i in range(1, d + 1):
            ent = {}
            for k in range(d + 1):
                m = d - k
                if not M.dims[m]:
                    continue
                if i <= k + 1:
                    for p in range(M.dims[m]):
                        ent[(pos(d + 1, k + 1, p), pos(d, k, p))] = 1
                else:
                    act = M.alpha[(m, i - k - 1)]
                    for (pp, p), v in act.entries.items():
                        ent[(pos(d + 1, k, pp), pos(d, k, p))] = v
            alpha[(d, i)] = Matrix(dims[d + 1], dims[d], ent)
    return TruncatedModule(D, dims, alpha)


def injective_envelope_simple(n: int, D: int) -> TruncatedModule:
    """The finite-length injective with simple socle in degree n."""
    if n < 0:
        raise ValueError("negative index")
    if n == 0:
        return trivial(D)
    out = simple(1, D)
    for _ in range(n - 1):
        out = coinduction(out)
    return out


def injective_module(lam: str, D: int) -> TruncatedModule:
    """Indecomposable injective for a word: finite-length blocks joined by
    rank-one principals along the gap decomposition."""
    gaps = gap_decomposition(check_word(lam))
    out = injective_envelope_simple(gaps[0], D)
    for g in gaps[1:]:
        out = concat(out, principal(1, D))
        out = concat(out, injective_envelope_simple(g, D))
    return out


# -- invariants --------------------------------------------------------------

def t_functor(M: TruncatedModule) -> list[int]:
    """Minimal generator counts: dimension of degree n modulo the images of
    all raising operators from degree n-1."""
    out = [M.dims[0]]
    for n in range(1, M.D + 1):
        mats = [M.alpha[(n - 1, k)] for k in range(1, n)]
        if mats and M.dims[n - 1]:
            rk = hstack(mats).rank()
        else:
            rk = 0
        out.append(M.dims[n] - rk)
    return out


def generator_degrees(M: TruncatedModule) -> list[int]:
    return [n for n, d in enumerate(t_functor(M)) if d]


def saturation_rank(M: TruncatedModule, n: int) -> int:
    """Rank of the chain of raising maps from degree n to the top degree."""
    if not 0 <= n < M.D:
        raise ValueError("need 0 <= n < D")
    if n == 0:
        return 0
    mat = Matrix.identity(M.dims[n])
    for m in range(n, M.D):
        mat = M.alpha[(m, m)] * mat
    return mat.rank()


# -- truncation grading ------------------------------------------------------

def _degree_offsets(M: TruncatedModule) -> list[int]:
    offs = [0]
    for n in range(M.D + 1):
        offs.append(offs[-1] + M.dims[n])
    return offs


def canonical_grading_pieces(M: TruncatedModule, r: int) -> list[int]:
    """Graded dimensions of the quotient by the ideal generated by the
    differences (alpha_i - 1) with i >= r.

    The quotient is locally finite, hence carries a canonical grading whose
    degree-n piece is the invariants under high operators modulo those under
    higher ones; dimensions are read off that chain.  Only degrees up to
    D - 1 are certified, so the returned list has length D.
    """
    D = M.D
    if D == 0:
        return []
    if r <= 0:
        return [0] * D
    offs = _degree_offsets(M)
    total = offs[-1]
    low_total = offs[D]  # coordinates of degrees <= D-1

    def embed(vec: Vec, degree: int) -> Vec:
        return {offs[degree] + i: v for i, v in vec.items()}

    # span of (alpha_i - 1)x for x in degrees <= D-1, i >= r
    gens = []
    for n in range(D):
        for i in range(max(r, 1), n + 1):
            act = M.alpha[(n, i)]
            for p in range(M.dims[n]):
                row = embed(act.col(p), n + 1)
                base = offs[n] + p
                row[base] = row.get(base, 0) - 1
                if row:
                    gens.append(row)
    # echelon with top-degree coordinates first so that the rows supported
    # away from degree D can be read off
    def col_key(c):
        return (0, c) if c >= offs[D] else (1, c)

    ech = Echelon(col_key)
    for g in gens:
        ech.add(g)
    kv_rows = [row for lead, row in ech.pivots.items() if lead < offs[D]]

    def shifted_minus_id(vec: Vec, i: int) -> Vec:
        """(alpha_i - 1) applied to a vector supported in degrees <= D-1."""
        out: Vec = {}
        for n in range(D):
            comp = {p - offs[n]: v for p, v in vec.items()
                    if offs[n] <= p < offs[n + 1]}
            if not comp:
                continue
            if i <= n:
                img = M.alpha[(n, i)].apply(comp)
                for p, v in img.items():
                    key = offs[n + 1] + p
                    val = out.get(key, 0) + v
                    if val:
                        out[key] = val
                    elif key in out:
                        del out[key]
                for p, v in comp.items():
                    key = offs[n] + p
                    val = out.get(key, 0) - v
                    if val:
                        out[key] = val
                    elif key in out:
                        del out[key]
        return out

    def impose(basis: list[Vec], i: int) -> list[Vec]:
        """Subspace of span(basis) on which (alpha_i - 1) lands in the span
        of the truncation ideal."""
        if not basis:
            return []
        rows: dict[int, dict[int, object]] = {}
        for j, v in enumerate(basis):
            resid = ech.reduce_linear(shifted_minus_id(v, i))
            for coord, val in resid.items():
                rows.setdefault(coord, {})[j] = val
        coeffs = kernel_basis(rows.values(), len(basis))
        out = []
        for sol in coeffs:
            vec: Vec = {}
            for j, c in sol.items():
                for coord, val in basis[j].items():
                    nv = vec.get(coord, 0) + c * val
                    if nv:
                        vec[coord] = nv
                    elif coord in vec:
                        del vec[coord]
            out.append(vec_int_normalize(vec))
        return out

    full = [{c: 1} for c in range(low_total)]
    inter = [dict(row) for row in kv_rows]
    inv_dims: dict[int, int] = {}
    # descending sweep: after imposing operators above n, record the n-th level
    for n in range(D - 1, -1, -1):
        inv_dims[n] = len(full) - len(inter)
        if n:
            full = impose(full, n)
            inter = impose(inter, n)
    pieces = [inv_dims[0]]
    for n in range(1, D):
        pieces.append(inv_dims[n] - inv_dims[n - 1])
    return pieces


def xi_truncated(M: TruncatedModule) -> list[int]:
    """Graded dimensions of the completion: degree d is read off the
    truncation below d+1.  Certified for degrees up to D - 1."""
    out = []
    for d in range(M.D):
        out.append(canonical_grading_pieces(M, d + 1)[d])
    return out


# -- Hom spaces ---------------------------------------------------------------

def hom_dim(M: TruncatedModule, N: TruncatedModule) -> tuple[int, bool]:
    """Dimension of the space of degree-preserving equivariant maps M -> N.

    Solved degree by degree: a map on degree n+1 is determined on the span
    of the raising images by the degree-n data, subject to consistency on
    every linear relation among raised vectors; complementary coordinates
    (the minimal generators) are free.  The result is flagged reliable when
    D is at least the generator degree of M plus its top relation degree,
    both measured by the minimal-generator functor.
    """
    if M.D != N.D:
        raise ValueError("hom_dim requires a shared truncation degree")
    D = M.D
    # each basis solution: list of matrices f_0..f_n
    basis: list[list[Matrix]] = []
    for b in range(N.dims[0]):
        for a in range(M.dims[0]):
            basis.append([Matrix(N.dims[0], M.dims[0], {(b, a): 1})])
    if not basis:
        basis = [[Matrix.zero(N.dims[0], M.dims[0])]] if False else []
        # the zero solution is represented by the empty combination
        basis = []
    if M.dims[0] == 0 or N.dims[0] == 0:
        basis = []
        # no choice at degree 0; start from the zero solution space
    zero_prefix = [Matrix.zero(N.dims[0], M.dims[0])]

    for n in range(D):
        dm, dmn = M.dims[n], M.dims[n + 1]
        stacked = hstack([M.alpha[(n, i)] for i in range(1, n + 1)]) if n and dm \
            else Matrix.zero(dmn, 0)
        ker = kernel_basis(stacked.row_dicts(), stacked.ncols) if stacked.ncols else []

        def w_image(f_n: Matrix, coords: dict) -> Vec:
            """alpha_N applied to f_n along a (i,m)-indexed coefficient vector."""
            out: Vec = {}
            for flat, c in coords.items():
                i = flat // dm + 1
                m = flat % dm
                img = N.alpha[(n, i)].apply({k: v * c for k, v in f_n.col(m).items()})
                for p, v in img.items():
                    val = out.get(p, 0) + v
                    if val:
                        out[p] = val
                    elif p in out:
                        del out[p]
            return out

        # consistency of each current solution on the raising relations
        if basis and ker:
            rows = []
            for kv in ker:
                cols = [w_image(sol[n], kv) for sol in basis]
                coords = set()
                for col in cols:
                    coords.update(col)
                for p in coords:
                    rows.append({t: col[p] for t, col in enumerate(cols) if p in col})
            coeffs = kernel_basis(rows, len(basis))
        else:
            coeffs = [{j: Fraction(1)} for j in range(len(basis))]
        survivors = []
        for sol in coeffs:
            combo = []
            for k in range(n + 1):
                acc = Matrix.zero(N.dims[k], M.dims[k])
                for j, c in sol.items():
                    acc = acc + basis[j][k].scale(c)
                combo.append(acc)
            survivors.append(combo)

        # pivot columns of the stacked raising map, and free complement
        piv_ech = Echelon()
        pivots = []
        scols = stacked.cols()
        for idx in range(stacked.ncols):
            if piv_ech.add(dict(scols[idx])):
                pivots.append(idx)
        free = []
        for e in range(dmn):
            if piv_ech.add({e: 1}):
                free.append(e)
        change_cols = [scols[idx] for idx in pivots] + [{e: 1} for e in free]
        change = Matrix(dmn, dmn,
                        {(rr, cc): v for cc, col in enumerate(change_cols)
                         for rr, v in col.items()})
        change_inv = change.inverse() if dmn else Matrix.zero(0, 0)

        new_basis = []
        for combo in survivors:
            ent = {}
            for cc, idx in enumerate(pivots):
                i = idx // dm + 1
                m = idx % dm
                img = N.alpha[(n, i)].apply(combo[n].col(m))
                for p, v in img.items():
                    ent[(p, cc)] = v
            g = Matrix(N.dims[n + 1], dmn, ent)
            combo.append(g * change_inv)
            new_basis.append(combo)
        npos = len(pivots)
        for fi in range(len(free)):
            for b in range(N.dims[n + 1]):
                unit = Matrix(N.dims[n + 1], dmn, {(b, npos + fi): 1})
                sol = [Matrix.zero(N.dims[k], M.dims[k]) for k in range(n + 1)]
                sol.append(unit * change_inv)
                new_basis.append(sol)
        basis = new_basis

    gens = generator_degrees(M)
    maxgen = max(gens, default=0)
    rels = _relation_degrees(M)
    maxrel = max(rels, default=0)
    reliable = D >= maxgen + maxrel
    return len(basis), reliable


# -- Koszul complex and Betti tables ------------------------------------------

@dataclass
class BettiTable:
    """Finite map (row, column) -> generator count, with the top certified
    total degree; entries are only stored for row + column <= that degree."""

    entries: dict[tuple[int, int], int] = field(default_factory=dict)
    reliable_degree: int = 0

    def entry(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def rows(self) -> list[int]:
        return sorted({i for i, _ in self.entries})

    def to_json(self) -> dict:
        return {"reliable_degree": self.reliable_degree,
                "entries": [{"row": i, "column": j, "value": v}
                            for (i, j), v in sorted(self.entries.items())]}

    def __str__(self) -> str:
        if not self.entries:
            return f"(empty Betti table, reliable through degree {self.reliable_degree})"
        lines = [f"reliable through total degree {self.reliable_degree}"]
        cols = sorted({j for _, j in self.entries})
        for i in self.rows():
            cells = " ".join(f"{self.entry(i, j):>4}" for j in range(0, max(cols) + 1))
            lines.append(f"row {i:>2}: {cells}")
        return "\n".join(lines)


def _koszul_slice(M: TruncatedModule, n: int):
    """Bases and differentials of the Koszul complex in internal degree n.

    Returns (bases, maps) where bases[m] indexes wedge subsets of {1..n-1}
    of size m paired with module coordinates of degree n-m, and maps[m] is
    the differential from level m to level m-1.
    """
    bases = []
    for m in range(n + 1):
        if M.dims[n - m] == 0 or (m > 0 and m > n - 1):
            bases.append([])
            continue
        subs = list(combinations(range(1, n), m))
        bases.append([(s, p) for s in subs for p in range(M.dims[n - m])])
    index = [{lab: k for k, lab in enumerate(b)} for b in bases]
    maps = [None]
    for m in range(1, n + 1):
        ent = {}
        for col, (s, p) in enumerate(bases[m]):
            for j, a in enumerate(s, start=1):
                rest = s[:j - 1] + s[j:]
                sign = 1 if j % 2 else -1
                act = M.alpha[(n - m, a - j + 1)]
                for q, v in act.col(p).items():
                    key = (index[m - 1][(rest, q)], col)
                    val = ent.get(key, 0) + sign * v
                    if val:
                        ent[key] = val
                    elif key in ent:
                        del ent[key]
        maps.append(Matrix(len(bases[m - 1]), len(bases[m]), ent))
    return bases, maps


def koszul_betti(M: TruncatedModule) -> BettiTable:
    """Betti numbers from Koszul homology: the (i, j) entry counts degree
    i+j minimal generators of the j-th step of the minimal resolution."""
    reliable = M.D - 1
    entries = {}
    for n in range(0, reliable + 1):
        bases, maps = _koszul_slice(M, n)
        ranks = [maps[m].rank() if m >= 1 else 0 for m in range(len(maps))]
        for m in range(0, n + 1):
            dim_here = len(bases[m])
            if not dim_here:
                continue
            rk_out = ranks[m] if m >= 1 else 0
            rk_in = ranks[m + 1] if m + 1 < len(maps) else 0
            h = dim_here - rk_out - rk_in
            if m + 1 < len(maps) and not (maps[m] * maps[m + 1]).is_zero() if m >= 1 else False:
                raise AssertionError("Koszul differential does not square to zero")
            if h:
                entries[(n - m, m)] = h
    return BettiTable(entries, reliable)


def _relation_degrees(M: TruncatedModule) -> list[int]:
    """Degrees of first syzygies (level-1 Koszul homology), up to D-1."""
    out = []
    for n in range(1, M.D):
        bases, maps = _koszul_slice(M, n)
        if len(bases) < 2 or not bases[1]:
            continue
        rk1 = maps[1].rank()
        rk2 = maps[2].rank() if len(maps) > 2 else 0
        if len(bases[1]) - rk1 - rk2:
            out.append(n)
    return out
