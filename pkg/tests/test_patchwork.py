"""Multi-disc jet interpolation with certified sup-norm bounds."""
from __future__ import annotations

import random

import pytest

from simapprox import (
    ConditioningFailure,
    Direction,
    DirectionSet,
    Disc,
    OrderCapExceeded,
    OverlappingDiscs,
    Patchwork,
    TranslationFrame,
    ZERO,
    approximate,
    build_patchwork,
    certified_error,
    hermite_crt,
    poly,
    shift_argument,
    sub,
    sup_sample_on_disc,
    taylor_split,
)


def _two_disc() -> Patchwork:
    return Patchwork(((Disc(0j, 1.0), ZERO), (Disc(10.0 + 0j, 1.0), poly([1.0]))))


def test_overlapping_discs_rejected():
    with pytest.raises(OverlappingDiscs):
        Patchwork(((Disc(0j, 1.0), ZERO), (Disc(1.5 + 0j, 1.0), ZERO)))
    with pytest.raises(OverlappingDiscs):  # tangency counts as overlap
        Patchwork(((Disc(0j, 1.0), ZERO), (Disc(2.0 + 0j, 1.0), ZERO)))


def test_two_disc_linear_closed_form():
    # values 0 at 0 and 1 at 10 with one jet each -> q = z/10
    q = hermite_crt(_two_disc(), [1, 1])
    assert len(q.coeffs) == 2
    assert abs(q.coeffs[0]) < 1e-12
    assert abs(q.coeffs[1] - 0.1) < 1e-12
    bounds = certified_error(q, _two_disc())
    for b in bounds:
        assert b == pytest.approx(0.1, abs=1e-9)


def test_single_disc_reproduces_target():
    # targets live in local coordinates w = z - center
    target = poly([1.0, -2.0, 3.0j, 0.25])
    patch = Patchwork(((Disc(2j, 1.5), target),))
    q = hermite_crt(patch, [6])
    diff = sub(shift_argument(q, 2j), target)
    assert sup_sample_on_disc(diff, Disc(0j, 1.5), 256) < 1e-12


def test_zero_targets_give_zero_polynomial():
    patch = Patchwork(((Disc(0j, 1.0), ZERO), (Disc(5.0 + 0j, 1.0), ZERO)))
    q = hermite_crt(patch, [3, 3])
    assert q == ZERO
    assert certified_error(q, patch) == [0.0, 0.0]


def test_order_must_be_positive():
    with pytest.raises(ValueError):
        hermite_crt(_two_disc(), [1, 0])
    with pytest.raises(ValueError):
        hermite_crt(_two_disc(), [1])  # one order per piece


def test_far_offset_cluster_fails_conditioning_gate():
    # binary64 cannot carry these jets: even the exact interpolant rounds
    # to coefficients violating the 1e-8 jet-match guarantee
    patch = Patchwork(
        ((Disc(10 + 10j, 1.0), poly([1.0])), (Disc(13 + 10j, 1.0), poly([0.0, 1.0])))
    )
    with pytest.raises(ConditioningFailure):
        hermite_crt(patch, [4, 4])


def test_jet_match_and_bound_soundness_randomized():
    rng = random.Random(7)
    for _ in range(60):
        npieces = rng.randint(2, 4)
        radius = rng.uniform(0.3, 1.2)
        sep = 3.0 * radius
        half = 1.5 * sep
        centers = [0j]
        while len(centers) < npieces:
            c = complex(rng.uniform(-half, half), rng.uniform(-half, half))
            if all(abs(c - o) >= sep for o in centers):
                centers.append(c)
        pieces = tuple(
            (
                Disc(c, radius),
                poly(
                    [
                        complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
                        for _ in range(rng.randint(0, 5) + 1)
                    ]
                ),
            )
            for c in centers
        )
        total = rng.randint(npieces, 12)
        orders = [1] * npieces
        for _ in range(total - npieces):
            orders[rng.randrange(npieces)] += 1
        patch = Patchwork(pieces)
        q = hermite_crt(patch, orders)
        bounds = certified_error(q, patch)
        for (disc, target), d, b in zip(patch.pieces, orders, bounds):
            jets, _ = taylor_split(q, disc.center, d)
            want = [target.coeffs[i] if i < len(target.coeffs) else 0j for i in range(d)]
            scl = max(1.0, max(abs(w) for w in want))
            assert max(abs(a - w) for a, w in zip(jets, want)) / scl < 1e-8
            local = sub(shift_argument(q, disc.center), target)
            assert sup_sample_on_disc(local, Disc(0j, disc.radius), 2048) <= b


def test_approximate_two_disc():
    res = approximate(_two_disc(), 0.15)
    assert res.orders == (4, 4)
    assert max(res.per_disc_bound) < 0.15


def test_approximate_raises_on_order_cap():
    # a degree-5 target cannot be matched by low-order jets under a tiny cap
    patch = Patchwork(
        ((Disc(0j, 1.0), poly([0, 0, 0, 0, 0, 1.0])), (Disc(5.0 + 0j, 1.0), ZERO))
    )
    with pytest.raises(OrderCapExceeded):
        approximate(patch, 1e-3, order_cap=8)


def test_build_patchwork_layout():
    dirs = DirectionSet((Direction(0.0), Direction(0.25)))
    h = poly([2.0])
    g = poly([0.0, 1.0])
    patch = build_patchwork(h, g, TranslationFrame(1.0, 6.0, dirs))
    assert patch.pieces[0][0] == Disc(0j, 1.0)
    assert patch.pieces[0][1] == h
    assert patch.pieces[1][0].center == pytest.approx(6.0)
    assert abs(patch.pieces[2][0].center - 6j) < 1e-12
    assert patch.pieces[1][1] == g and patch.pieces[2][1] == g
