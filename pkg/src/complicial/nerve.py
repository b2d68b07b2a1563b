"""The stratified nerve of an enriched category.

An n-simplex of the nerve is an enriched functor out of the coherent
n-path: an object map together with a stratified map on every homset,
compatible with concatenation.  Because the path category is freely
generated by its indecomposable arrows, enumeration proceeds by choosing
images of nondegenerate indecomposable cells dimension by dimension, with
face and thinness consistency pruning the search; images of all remaining
cells follow by splitting at zeros and composing in the target.

Thinness of a nerve simplex above dimension one tests the image of the top
special simplex of the long homset; the rule for 1-simplices searches for
an equivalence witness pair of thin 2-simplices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import OutOfRange
from .operators import (
    Operator,
    all_injections,
    compose_ops,
    delta,
    ez_factorize,
    identity,
    rho_operator,
    sigma,
    word_operator as _wop,
)
from .enriched import EnrichedCategory
from .hcpath import (
    PathArrow,
    arrow_normal_form,
    arrow_of_cell,
    hom_set,
    is_indecomposable,
    path_act,
    split_at_zeros,
    top_special_arrow,
)
from .stratified import FiniteStratifiedSet, Simplex


class NerveSimplex:
    """An enriched functor from the coherent n-path, tabulated on homsets."""

    def __init__(self, E: EnrichedCategory, n: int, obj: tuple[str, ...], maps):
        self.E = E
        self.n = n
        self.obj = obj
        self.maps = maps  # (r, s) -> {hom cell id -> Simplex in E.hom(obj r, obj s)}
        self._key = (
            n,
            obj,
            tuple(
                (rs, cid, img)
                for rs in sorted(maps)
                for cid, img in sorted(maps[rs].items())
            ),
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, NerveSimplex) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"NerveSimplex(n={self.n}, obj={self.obj})"

    def eval_arrow(self, a: PathArrow) -> Simplex:
        """Image of an arbitrary arrow of the coherent path."""
        if a.r == a.s:
            return self.E.identity_simplex(self.obj[a.r], a.m)
        core, word = arrow_normal_form(a)
        img = self.maps[(core.r, core.s)][core.cell_id()]
        if not word:
            return img
        target = self.E.hom(self.obj[a.r], self.obj[a.s])
        return target.act(img, _wop(a.m, word))


def _generators(n: int) -> list[tuple[int, int, str, int]]:
    """Nondegenerate indecomposable hom cells as (r, s, cell id, dim)."""
    gens = []
    for r in range(n + 1):
        for s in range(r + 1, n + 1):
            H = hom_set(r, s)
            for cid in H.cells():
                a = arrow_of_cell(r, s, cid)
                if is_indecomposable(a):
                    gens.append((r, s, cid, H.dims[cid]))
    gens.sort(key=lambda g: (g[3], g[0], g[1], g[2]))
    return gens


def _eval_partial(E, obj, assigned, a: PathArrow) -> Simplex | None:
    """Evaluate an arrow from generator images chosen so far; None if missing."""
    if a.r == a.s:
        return E.identity_simplex(obj[a.r], a.m)
    out = None
    for factor in split_at_zeros(a):
        core, word = arrow_normal_form(factor)
        img = assigned.get((core.r, core.s, core.cell_id()))
        if img is None:
            return None
        if word:
            img = E.hom(obj[factor.r], obj[factor.s]).act(img, _wop(factor.m, word))
        if out is None:
            out = img
        else:
            out = E.compose(obj[a.r], obj[factor.r], obj[factor.s], img, out)
    return out


def nerve_simplices(E: EnrichedCategory, n: int) -> list[NerveSimplex]:
    """All enriched functors from the coherent n-path, deterministically."""
    gens = _generators(n)
    results: list[NerveSimplex] = []

    def object_maps() -> Iterator[tuple[str, ...]]:
        def rec(prefix):
            if len(prefix) == n + 1:
                yield tuple(prefix)
                return
            for o in E.objects:
                if all(E.homs[(p, o)].dims for p in prefix):
                    yield from rec(prefix + [o])

        yield from rec([])

    for obj in object_maps():
        assigned: dict[tuple[int, int, str], Simplex] = {}

        def candidates(r, s, cid, d):
            a = arrow_of_cell(r, s, cid)
            hom = hom_set(r, s)
            target = E.hom(obj[r], obj[s])
            thin_needed = cid in hom.thin
            face_imgs = []
            ok = True
            for j in range(d + 1) if d >= 1 else ():
                img = _eval_partial(E, obj, assigned, _arrow_face(a, j))
                if img is None:
                    ok = False
                    break
                face_imgs.append(img)
            if not ok:
                return
            for z in target.simplices_of_dim(d):
                if thin_needed and not target.is_thin(z):
                    continue
                if all(
                    target.act(z, delta(d, j)) == face_imgs[j] for j in range(d + 1) if d >= 1
                ):
                    yield z

        def search(i: int):
            if i == len(gens):
                f = _finalize(E, n, obj, assigned)
                if f is not None:
                    results.append(f)
                return
            r, s, cid, d = gens[i]
            for z in sorted(candidates(r, s, cid, d)):
                assigned[(r, s, cid)] = z
                search(i + 1)
                del assigned[(r, s, cid)]

        search(0)
    return results


def _arrow_face(a: PathArrow, j: int) -> PathArrow:
    """The jth face of an arrow inside its homset (coordinatewise action)."""
    from .operators import rho_precompose

    d = delta(a.m, j)
    return PathArrow(a.r, a.s, a.m - 1, tuple(rho_precompose(v, d) for v in a.w))


def _finalize(E, n, obj, assigned) -> NerveSimplex | None:
    maps: dict[tuple[int, int], dict[str, Simplex]] = {}
    for r in range(n + 1):
        for s in range(r + 1, n + 1):
            H = hom_set(r, s)
            target = E.hom(obj[r], obj[s])
            table = {}
            for cid in H.cells():
                a = arrow_of_cell(r, s, cid)
                img = _eval_partial(E, obj, assigned, a)
                if img is None:
                    return None
                # stratify: thin hom cells must land on thin simplices
                if cid in H.thin and not target.is_thin(img):
                    return None
                table[cid] = img
            maps[(r, s)] = table
    return NerveSimplex(E, n, obj, maps)


def nerve_act(f: NerveSimplex, alpha: Operator) -> NerveSimplex:
    """Precomposition with the path functor of a simplicial operator."""
    p, n = alpha.n, alpha.m
    if n != f.n:
        raise OutOfRange(f"operator targets [{alpha.m}], simplex has dimension {f.n}")
    obj = tuple(f.obj[alpha(t)] for t in range(p + 1))
    maps = {}
    for r in range(p + 1):
        for s in range(r + 1, p + 1):
            H = hom_set(r, s)
            table = {}
            for cid in H.cells():
                a = arrow_of_cell(r, s, cid)
                table[cid] = f.eval_arrow(path_act(alpha, a))
            maps[(r, s)] = table
    return NerveSimplex(f.E, p, obj, maps)


def _degenerate_at(f: NerveSimplex, j: int) -> bool:
    g = nerve_act(f, delta(f.n, j + 1))
    return nerve_act(g, sigma(f.n - 1, j)) == f


def nerve_normal_form(f: NerveSimplex) -> tuple[NerveSimplex, tuple[int, ...]]:
    collapse = identity(f.n)
    while True:
        flats = [j for j in range(f.n) if _degenerate_at(f, j)]
        if not flats:
            break
        t = max(flats)
        cur = f.n
        f = nerve_act(f, delta(cur, t + 1))
        collapse = compose_ops(sigma(cur - 1, t), collapse)
    return f, ez_factorize(collapse)[1]


def nerve_thin(
    f: NerveSimplex, two_simplices: list[NerveSimplex] | None = None
) -> bool:
    """The nerve stratification above dimension one, witnesses at dimension one."""
    if f.n == 0:
        return False
    if f.n >= 2:
        E = f.E
        target = E.hom(f.obj[0], f.obj[f.n])
        return target.is_thin(f.eval_arrow(top_special_arrow(0, f.n)))
    pool = two_simplices if two_simplices is not None else nerve_simplices(f.E, 2)
    return _has_equivalence_inverse(f, pool)


def _identity_edge(E: EnrichedCategory, obj: str) -> NerveSimplex:
    v = NerveSimplex(E, 0, (obj,), {})
    return nerve_act(v, sigma(0, 0))


def _has_equivalence_inverse(e: NerveSimplex, pool: list[NerveSimplex]) -> bool:
    E = e.E
    x, y = e.obj
    id_x, id_y = _identity_edge(E, x), _identity_edge(E, y)
    d0 = delta(2, 0)
    d1 = delta(2, 1)
    d2 = delta(2, 2)
    for u in pool:
        if not nerve_thin(u):
            continue
        if nerve_act(u, d2) != e or nerve_act(u, d1) != id_x:
            continue
        back = nerve_act(u, d0)
        for v in pool:
            if not nerve_thin(v):
                continue
            if (
                nerve_act(v, d2) == back
                and nerve_act(v, d0) == e
                and nerve_act(v, d1) == id_y
            ):
                return True
    return False


def build_nerve_indexed(
    E: EnrichedCategory, D: int
) -> tuple[FiniteStratifiedSet, dict[str, NerveSimplex]]:
    """The truncated nerve as a stratified set plus the cell dictionary."""
    full_layers: list[list[NerveSimplex]] = []
    layers: list[list[NerveSimplex]] = []
    for n in range(D + 1):
        allf = nerve_simplices(E, n)
        full_layers.append(allf)
        layers.append([f for f in allf if all(not _degenerate_at(f, j) for j in range(n))])
    ids: dict[NerveSimplex, str] = {}
    for n, layer in enumerate(layers):
        for i, f in enumerate(layer):
            ids[f] = f"N{n}.{i}"
    dims = {ids[f]: n for n, layer in enumerate(layers) for f in layer}
    faces = {}
    for n, layer in enumerate(layers):
        if n == 0:
            continue
        for f in layer:
            entries = []
            for j in range(n + 1):
                core, word = nerve_normal_form(nerve_act(f, delta(n, j)))
                entries.append(Simplex(ids[core], word))
            faces[ids[f]] = tuple(entries)
    pool2 = full_layers[2] if D >= 2 else []
    thin = []
    for n, layer in enumerate(layers):
        if n == 0:
            continue
        for f in layer:
            if nerve_thin(f, pool2):
                thin.append(ids[f])
    X = FiniteStratifiedSet(D, dims, faces, thin)
    return X, {ids[f]: f for f in ids}


def build_nerve(E: EnrichedCategory, D: int) -> FiniteStratifiedSet:
    return build_nerve_indexed(E, D)[0]


# -- complicial classification -------------------------------------------------


def classify_complicial(f: NerveSimplex, k: int) -> bool:
    """Whether every k-admissible face sends its top special simplex to thin."""
    if not 0 < k < f.n:
        raise OutOfRange(f"inner index needed, got k={k} at dimension {f.n}")
    needed = {k - 1, k, k + 1}
    for m in range(1, f.n + 1):
        for alpha in all_injections(m, f.n):
            if not needed <= set(alpha.values):
                continue
            arrow = path_act(alpha, top_special_arrow(0, m))
            img = f.eval_arrow(arrow)
            if not f.E.hom(f.obj[arrow.r], f.obj[arrow.s]).is_thin(img):
                return False
    return True


# -- the suspension comparison functor and the faithfulness probe --------------


@dataclass(frozen=True)
class SigmaFunctor:
    """The collapse functor from the coherent (n+1)-path to a suspension."""

    n: int

    def obj(self, r: int) -> str:
        return "0" if r <= self.n else "1"

    def crossing(self, a: PathArrow) -> bool:
        return a.r <= self.n < a.s

    def delta_image(self, a: PathArrow) -> Simplex:
        """Image of a crossing arrow, as a simplex of the standard n-simplex."""
        from .shapes import simplex_of_operator

        n = self.n
        values = []
        for t in range(a.m + 1):
            zeros = [
                n - i
                for i in range(a.r + 1, n + 1)
                if rho_operator(a.value(i), a.m).values[t] == 0
            ]
            values.append(min([n] + zeros))
        return simplex_of_operator(Operator(a.m, n, tuple(values)))

    def eval_arrow(self, a: PathArrow, target: EnrichedCategory) -> Simplex:
        if self.crossing(a):
            return self.delta_image(a)
        return target.identity_simplex(self.obj(a.r), a.m)


def sigma_functor(n: int) -> SigmaFunctor:
    return SigmaFunctor(n)


def sigma_as_nerve_simplex(n: int) -> NerveSimplex:
    """The comparison functor as an (n+1)-simplex of the suspended simplex."""
    E = suspension_of_standard(n)
    return yoneda_composite(E, Simplex(".".join(map(str, range(n + 1)))), n)


def yoneda_composite(E: EnrichedCategory, x: Simplex, n: int) -> NerveSimplex:
    """The (n+1)-simplex of the nerve classified by an n-arrow of hom(0, 1).

    This is the composite of the suspension comparison functor with the
    functor out of the suspended n-simplex that names x.
    """
    F = sigma_functor(n)
    hom01 = E.hom("0", "1")
    maps = {}
    obj = tuple(F.obj(r) for r in range(n + 2))
    from .shapes import operator_of_simplex, standard

    Dn = standard(n)
    for r in range(n + 2):
        for s in range(r + 1, n + 2):
            H = hom_set(r, s)
            table = {}
            for cid in H.cells():
                a = arrow_of_cell(r, s, cid)
                if obj[r] == obj[s]:
                    table[cid] = E.identity_simplex(obj[r], H.dims[cid])
                else:
                    beta = operator_of_simplex(Dn, F.delta_image(a), H.dims[cid])
                    table[cid] = hom01.act(x, beta)
            maps[(r, s)] = table
    return NerveSimplex(E, n + 1, obj, maps)


_SUSPENDED_STANDARD: dict[int, EnrichedCategory] = {}


def suspension_of_standard(n: int) -> EnrichedCategory:
    from .enriched import suspension
    from .shapes import standard

    if n not in _SUSPENDED_STANDARD:
        _SUSPENDED_STANDARD[n] = suspension(standard(n))
    return _SUSPENDED_STANDARD[n]


def recover_arrow(f: NerveSimplex) -> Simplex:
    """Evaluate an (n+1)-simplex of the nerve at the top special simplex."""
    return f.eval_arrow(top_special_arrow(0, f.n))