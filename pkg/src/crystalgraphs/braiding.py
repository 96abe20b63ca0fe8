"""The Cartan braiding on tensor products of crystals, the induced partial
symmetric-group action, and the left/right end maps."""

from __future__ import annotations

from typing import Iterable, Sequence

from .crystal import (
    Crystal,
    TensorCrystal,
    canonical_morphism,
    cartan_project,
    highest_weight_crystal,
    tensor_of,
)
from .rootdata import Coords, RootDatum, sub_weights

_PAIR_TABLES: dict[tuple[RootDatum, Coords, Coords], dict] = {}
_RIGHT_END_MAPS: dict[tuple[RootDatum, Coords, Coords], dict[int, int]] = {}
_LEFT_END_MAPS: dict[tuple[RootDatum, Coords, Coords], dict[int, int]] = {}


def pair_braiding(datum: RootDatum, lam: Coords, lamp: Coords) -> dict:
    """Full braiding table for a pair of irreducible crystals.

    Maps each element of B(lam) x B(lamp) to its image in B(lamp) x B(lam):
    the canonical matching of Cartan components, None elsewhere.
    """
    key = (datum, tuple(lam), tuple(lamp))
    table = _PAIR_TABLES.get(key)
    if table is not None:
        return table
    source = tensor_of(datum, (lam, lamp))
    target = tensor_of(datum, (lamp, lam))
    match = canonical_morphism(
        source.decomposition().cartan_component,
        target.decomposition().cartan_component,
    )
    table = {t: match.get(t) for t in source.elements()}
    _PAIR_TABLES[key] = table
    return table


def _factors(crystal_like) -> tuple[Crystal, ...]:
    if isinstance(crystal_like, Crystal):
        return (crystal_like,)
    return crystal_like.factors


def _standardize(crystal_like, element):
    """Locate an element inside its component, identified with the standalone
    crystal of the component's highest weight.

    Returns (component weight, standardized element, map back or None if the
    ambient object is already irreducible)."""
    if isinstance(crystal_like, Crystal):
        return crystal_like.highest_weight, element, None
    dec = crystal_like.decomposition()
    cid = dec.ids[element]
    _, to_std, from_std = crystal_like.standard_map(cid)
    return dec.component(cid).weight, to_std[element], from_std


def _restore(back, element) -> tuple:
    if back is None:
        return (element,)
    return back[element]


def cartan_braiding(B, Bp, b, bp):
    """Braiding of products of irreducibles, evaluated at b (x) bp.

    The result is a flat tuple over the factors of Bp followed by those of B,
    or None.  Writing (lam, lamp) for the highest weights of B and Bp and
    (mu, mup) for those of the components containing b and bp, the value is
    zero unless the bilinear pairings (mu, mup) and (lam, lamp) agree, and is
    otherwise the canonical matching of the Cartan components of
    B(mu) (x) B(mup) and B(mup) (x) B(mu) transported along the component
    identifications.
    """
    if b is None or bp is None:
        return None
    datum = B.datum
    if Bp.datum != datum:
        raise ValueError("braiding operands live over different root data")
    lam, lamp = B.highest_weight, Bp.highest_weight
    mu, x, back = _standardize(B, b)
    mup, xp, backp = _standardize(Bp, bp)
    if datum.bilinear(mu, mup) != datum.bilinear(lam, lamp):
        return None
    image = pair_braiding(datum, mu, mup)[(x, xp)]
    if image is None:
        return None
    yp, y = image
    return _restore(backp, yp) + _restore(back, y)


def sigma_word(tc: TensorCrystal, word: Sequence[int], b):
    """Compose the adjacent braidings sigma_k along a word of transposition
    indices (1-based, applied in list order); None propagates."""
    factors = list(tc.factors)
    n = len(factors)
    cur = b
    for k in word:
        if not 1 <= k <= n - 1:
            raise ValueError(f"transposition index {k} out of range for {n} factors")
        if cur is not None:
            left, right = factors[k - 1], factors[k]
            table = pair_braiding(tc.datum, left.highest_weight, right.highest_weight)
            image = table[(cur[k - 1], cur[k])]
            cur = None if image is None else cur[: k - 1] + image + cur[k + 1 :]
        factors[k - 1], factors[k] = factors[k], factors[k - 1]
    return cur


def longest_permutation_word(n: int) -> tuple[int, ...]:
    """A reduced word for the order-reversing permutation of n letters."""
    word: list[int] = []
    for k in range(1, n):
        word.extend(range(k, 0, -1))
    return tuple(word)


def right_end_map(datum: RootDatum, lam: Coords, mu: Coords) -> dict[int, int]:
    key = (datum, tuple(lam), tuple(mu))
    cached = _RIGHT_END_MAPS.get(key)
    if cached is not None:
        return cached
    nu = sub_weights(lam, mu)
    if not datum.is_dominant(nu):
        raise ValueError(f"difference {nu} of {lam} and {mu} is not dominant")
    target = tensor_of(datum, (nu, mu))
    iso = canonical_morphism(
        highest_weight_crystal(datum, lam),
        target.decomposition().cartan_component,
    )
    table = {b: image[1] for b, image in iso.items()}
    _RIGHT_END_MAPS[key] = table
    return table


def left_end_map(datum: RootDatum, lam: Coords, mu: Coords) -> dict[int, int]:
    key = (datum, tuple(lam), tuple(mu))
    cached = _LEFT_END_MAPS.get(key)
    if cached is not None:
        return cached
    nu = sub_weights(lam, mu)
    if not datum.is_dominant(nu):
        raise ValueError(f"difference {nu} of {lam} and {mu} is not dominant")
    target = tensor_of(datum, (mu, nu))
    iso = canonical_morphism(
        highest_weight_crystal(datum, lam),
        target.decomposition().cartan_component,
    )
    table = {b: image[0] for b, image in iso.items()}
    _LEFT_END_MAPS[key] = table
    return table


def _project_irreducible(crystal_like, b):
    """Map an element of a product of irreducibles into the crystal of the
    total highest weight; None off the Cartan component."""
    if isinstance(crystal_like, Crystal):
        return b
    eta, image = cartan_project(crystal_like, b)
    return image if eta else None


def right_end(crystal_like, b, mu: Coords):
    """The B(mu)-factor of b under the embedding into B(lam-mu) (x) B(mu)."""
    if b is None:
        return None
    std = _project_irreducible(crystal_like, b)
    if std is None:
        return None
    return right_end_map(crystal_like.datum, crystal_like.highest_weight, mu)[std]


def left_end(crystal_like, b, mu: Coords):
    """The B(mu)-factor of b under the embedding into B(mu) (x) B(lam-mu)."""
    if b is None:
        return None
    std = _project_irreducible(crystal_like, b)
    if std is None:
        return None
    return left_end_map(crystal_like.datum, crystal_like.highest_weight, mu)[std]


def right_ends(crystal_like, b, weights: Iterable[Coords]):
    """Tuple of right ends over a family of weights; None off the Cartan
    component of the ambient product."""
    if b is None:
        return None
    std = _project_irreducible(crystal_like, b)
    if std is None:
        return None
    datum = crystal_like.datum
    lam = crystal_like.highest_weight
    return tuple(right_end_map(datum, lam, mu)[std] for mu in weights)


def left_ends(crystal_like, b, weights: Iterable[Coords]):
    if b is None:
        return None
    std = _project_irreducible(crystal_like, b)
    if std is None:
        return None
    datum = crystal_like.datum
    lam = crystal_like.highest_weight
    return tuple(left_end_map(datum, lam, mu)[std] for mu in weights)
