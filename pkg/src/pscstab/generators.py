"""Deterministic random isometry generators for the property suites.

Three sampling modes, all driven by a seeded ``random.Random`` stream so
that a fixed (form, seed, mode) triple always yields the same list, and
shorter requests are prefixes of longer ones:

* ``reflections``: products of one to three reflections in random
  non-isotropic integer vectors with entries in [-5, 5].  By the
  Cartan-Dieudonne theorem such products range over the whole isometry
  group, but the matrices are rational in general, so use them only
  with the determinant / delta / rational-eigenspace invariants;
* ``catalog-products``: random words in the catalog's named isometries
  of the given form and their negatives (always integral);
* ``signed-permutations``: integral isometries assembled block by
  block.  The form must decompose into orthogonal blocks that are
  1 x 1, hyperbolic planes, or E8 Cartan blocks of either sign; the
  sampler permutes identical blocks and applies random unit words
  (sign flips, the hyperbolic flip, basis reflections) inside each
  block.  For diag(+-1) forms this is exactly the group of signed
  permutation isometries.

Every emitted matrix goes through validate_isometry, so a sampling bug
cannot silently poison the test suites.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import GeneratorModeError
from .isometries import FormIsometry, compose, reflection, validate_isometry
from .quad_forms import SymForm

REFLECTIONS = "reflections"
CATALOG_PRODUCTS = "catalog-products"
SIGNED_PERMUTATIONS = "signed-permutations"
MODES = (REFLECTIONS, CATALOG_PRODUCTS, SIGNED_PERMUTATIONS)

DEFAULT_SEED = 20259
_VECTOR_BOUND = 5


@dataclass(frozen=True)
class IsometryGenerator:
    """Configuration for one deterministic sampling stream."""

    form: SymForm
    seed: int = DEFAULT_SEED
    mode: str = REFLECTIONS


def generate(gen: IsometryGenerator, count: int) -> list[FormIsometry]:
    """Sample ``count`` isometries; deterministic and prefix-stable."""
    if gen.mode not in MODES:
        raise GeneratorModeError(
            f"unknown mode {gen.mode!r}; expected one of {', '.join(MODES)}")
    if count < 0:
        raise GeneratorModeError("count must be nonnegative")
    rng = random.Random(f"{gen.seed}:{gen.mode}:{gen.form.matrix}")
    if gen.mode == REFLECTIONS:
        sampler = _sample_reflection_product
    elif gen.mode == CATALOG_PRODUCTS:
        sampler = _catalog_sampler(gen.form)
    else:
        sampler = _signed_permutation_sampler(gen.form)
    return [sampler(gen.form, rng) for _ in range(count)]


def _sample_reflection_product(form: SymForm, rng: random.Random) -> FormIsometry:
    n = form.rank
    q = form.matrix
    product = None
    for _ in range(rng.randint(1, 3)):
        while True:
            v = [rng.randint(-_VECTOR_BOUND, _VECTOR_BOUND) for _ in range(n)]
            if not any(v):
                continue
            qv = [sum(q[i][j] * v[j] for j in range(n)) for i in range(n)]
            if sum(v[i] * qv[i] for i in range(n)) != 0:
                break
        refl = reflection(form, v)
        product = refl if product is None else compose(product, refl)
    return validate_isometry(form, product.matrix)


def _catalog_sampler(form: SymForm):
    from .catalog import _fixed_entries

    pool: list[FormIsometry] = []
    for entry in _fixed_entries().values():
        if entry.form.matrix != form.matrix:
            continue
        for _, iso in entry.known_isometries:
            pool.append(iso)
            pool.append(FormIsometry(
                form=form,
                matrix=tuple(tuple(-x for x in row) for row in iso.matrix),
                integral=iso.integral,
            ))
    if not pool:
        raise GeneratorModeError(
            "catalog-products mode needs a form that appears in the catalog")

    def sample(form: SymForm, rng: random.Random) -> FormIsometry:
        word = [rng.choice(pool) for _ in range(rng.randint(1, 4))]
        product = word[0]
        for factor in word[1:]:
            product = compose(product, factor)
        return validate_isometry(form, product.matrix)

    return sample


def _contiguous_blocks(q: tuple[tuple[int, ...], ...]) -> list[tuple[int, int]]:
    """Split indices into the finest contiguous orthogonal blocks."""
    n = len(q)
    blocks = []
    i = 0
    while i < n:
        end = i + 1
        j = i
        while j < end:
            reach = max((c for c in range(n) if q[j][c] != 0), default=j) + 1
            end = max(end, reach)
            j += 1
        blocks.append((i, end))
        i = end
    return blocks


def _identity(k: int) -> list[list[int]]:
    return [[int(i == j) for j in range(k)] for i in range(k)]


def _small_matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    k = len(a)
    return [[sum(a[i][t] * b[t][j] for t in range(k)) for j in range(k)] for i in range(k)]


def _block_unit_generators(block: tuple[tuple[int, ...], ...]) -> list[list[list[int]]]:
    """Integral unit isometries of one supported block, or None."""
    k = len(block)
    if k == 1:
        return [[[-1]]]
    neg = [[-v for v in row] for row in _identity(k)]
    if k == 2 and block == ((0, 1), (1, 0)):
        return [[[0, 1], [1, 0]], neg]
    if k == 8 and all(abs(block[i][i]) == 2 for i in range(8)):
        gens = [neg]
        for i in range(8):
            # reflection in the i-th basis vector: integral because the
            # diagonal entry divides twice every pairing
            refl = _identity(8)
            d = block[i][i]
            for j in range(8):
                refl[i][j] -= 2 * block[i][j] // d
            gens.append(refl)
        return gens
    return None


def _signed_permutation_sampler(form: SymForm):
    q = form.matrix
    spans = _contiguous_blocks(q)
    block_mats = [tuple(tuple(q[i][j] for j in range(lo, hi)) for i in range(lo, hi))
                  for lo, hi in spans]
    unit_gens = []
    for mat in block_mats:
        gens = _block_unit_generators(mat)
        if gens is None:
            raise GeneratorModeError(
                "signed-permutations mode needs a signed diagonal form or "
                "an orthogonal sum of 1x1, hyperbolic and E8 blocks")
        unit_gens.append(gens)
    groups: dict[tuple, list[int]] = {}
    for idx, mat in enumerate(block_mats):
        groups.setdefault(mat, []).append(idx)

    def sample(form: SymForm, rng: random.Random) -> FormIsometry:
        n = form.rank
        target = list(range(len(spans)))
        for members in groups.values():
            shuffled = members[:]
            rng.shuffle(shuffled)
            for src, dst in zip(members, shuffled):
                target[src] = dst
        full = [[0] * n for _ in range(n)]
        for src, dst in enumerate(target):
            lo, hi = spans[src]
            unit = _identity(hi - lo)
            for _ in range(rng.randint(0, 2)):
                unit = _small_matmul(unit, rng.choice(unit_gens[src]))
            jlo, jhi = spans[dst]
            for r in range(jhi - jlo):
                for c in range(hi - lo):
                    full[jlo + r][lo + c] = unit[r][c]
        return validate_isometry(form, full)

    return sample
