from fractions import Fraction as F

import pytest

from stablelab import modmaps
from stablelab.exactmath import sym, val_rat


@pytest.fixture(scope="module")
def maps():
    return modmaps.builtin_maps()


def test_transcription_degrees(maps):
    assert maps["pi1_j"].degrees() == (6, 5)
    assert maps["pi5_j"].degrees() == (6, 1)
    assert maps["pi1_t"].degrees() == (5, 4)
    assert maps["pi5_t"].degrees() == (5, 0)


def test_transcription_values(maps):
    u = F(2)
    assert maps["pi5_t"].evaluate(u) == u * (u**4 + 5 * u**3 + 15 * u**2 + 25 * u + 25)
    t = F(3)
    assert maps["pi1_j"].evaluate(t) == (t**2 + 250 * t + 3125) ** 3 / t**5
    assert maps["w5"].evaluate(t) == F(125, 3)


def test_map_constructor_rejects_common_factor():
    t = sym("t")
    with pytest.raises(ValueError):
        modmaps.RationalMap("bad", "t", "j", t**2 - 1, t - 1)
    with pytest.raises(ValueError):
        modmaps.RationalMap("bad", "t", "j", t, t * 0)


def test_involutions(maps):
    assert modmaps.is_involution(maps["w5"])
    assert modmaps.is_involution(maps["w25"])


def test_al_fixed_circles(maps):
    assert modmaps.al_fixed_circle(maps["w5"]) == F(3, 2)
    assert modmaps.al_fixed_circle(maps["w25"]) == F(1, 2)
    hypothetical = modmaps.RationalMap("c1", "t", "t", sym("t") * 0 + 1, sym("t"))
    assert modmaps.al_fixed_circle(hypothetical) == 0
    with pytest.raises(ValueError):
        modmaps.al_fixed_circle(maps["pi5_t"])


def test_image_valuations(maps):
    cert = modmaps.image_valuation(maps["pi5_t"], modmaps.ValRegion("u", "circle", F(3, 10)))
    assert cert.lower_bound == F(3, 2) and cert.unique
    assert cert.conclusion == "circle->circle exact"

    cert = modmaps.image_valuation(maps["pi1_j"], modmaps.ValRegion("t", "circle", F(3, 2)))
    assert cert.lower_bound == F(3, 2) and cert.unique

    cert = modmaps.image_valuation(maps["pi1_j"], modmaps.ValRegion("t", "circle", F(5, 2)))
    assert cert.lower_bound == F(5, 2) and not cert.unique
    assert cert.conclusion == "bound only (tie)"


def test_image_valuation_region_mismatch(maps):
    with pytest.raises(ValueError):
        modmaps.image_valuation(maps["pi5_t"], modmaps.ValRegion("t", "circle", F(1)))
    with pytest.raises(ValueError):
        modmaps.image_valuation(
            maps["pi5_t"], modmaps.ValRegion("u", "disk", F(1))
        )


def test_image_stability_within_cell(maps):
    for eps in (F(1, 1000), F(-1, 1000), F(3, 997)):
        lam = F(3, 10) + eps
        cert = modmaps.image_valuation(maps["pi5_t"], modmaps.ValRegion("u", "circle", lam))
        assert cert.unique and cert.lower_bound == 5 * lam


def test_ramification_image_polynomial():
    cert = modmaps.ramification_image_polynomial()
    assert cert.status == "pass"
    assert cert.squarefree_part == (-125, 0, 1)
    degree = len(cert.eliminant) - 1
    assert degree == 10 and degree % 2 == 0
    assert all(isinstance(c, int) for c in cert.eliminant)
    # a symbolic root tau with tau^2 = 125 has valuation v(125)/2 = 3/2
    assert val_rat(125, 5) / 2 == F(3, 2)


def test_cm_disk_identities():
    cert = modmaps.cm_disk_identities()
    assert cert.status == "pass"
    assert cert.u_disk_valuation == F(17, 5)
    assert cert.u_disk_valuation > 3
    assert val_rat(125, 5) == 3  # the boundary itself is not inside the disk
    j = sym("j")
    assert (j**2 - 125) * (j**2 + 125) == j**4 - 15625
