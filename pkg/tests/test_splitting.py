import json

import pytest

from symbolic_powers.engine import (
    CapExceededError, ChainBrokenError, ExcludedParameterError, Monomial, MonomialIdeal,
    SplitCertificate, betti_oracle, ek_combine, intersect, scale, split_chain, theorem_split,
    verify_ek,
)
from symbolic_powers.engine.logger import ComputationLogger
from symbolic_powers.engine.splitting import Violation


def mono(*exps):
    return Monomial(tuple(exps))


def valid_cases():
    for m in (3, 4):
        for s in (2, 3):
            for r in range(1, m + 1):
                if r != m - s - 1:
                    yield m, r, s


VALID = list(valid_cases())


def test_k3_cube_top_split():
    cert = theorem_split(3, 3, 3)
    assert len(cert.mapping) == 1
    w, phi, phi_hat = cert.mapping[0]
    assert w == mono(3, 3, 1)
    assert phi == mono(2, 2, 1)
    assert phi_hat == mono(3, 3, 0)
    assert cert.phi(w) == phi and cert.phi_hat(w) == phi_hat


def test_left_part_is_divisible_generators():
    cert = theorem_split(3, 2, 3)
    assert set(cert.left) == {g for g in cert.ideal if g.exponents[2] > 0}
    assert set(cert.right) == {mono(2, 2, 0)}


@pytest.mark.parametrize("m,r,s", VALID)
def test_theorem_split_passes_exhaustive_verification(m, r, s):
    verdict = verify_ek(theorem_split(m, s, r))
    assert verdict.valid, verdict.summary()
    assert verdict.exhaustive
    assert verdict.subsets_checked == 2 ** verdict.domain_size - 1


@pytest.mark.parametrize("m,r,s", VALID)
def test_split_betti_identity(m, r, s):
    cert = theorem_split(m, s, r)
    whole = betti_oracle(cert.ideal).to_ideal()
    left = betti_oracle(cert.left).to_ideal()
    right = betti_oracle(cert.right).to_ideal()
    both = betti_oracle(MonomialIdeal(m, cert.domain)).to_ideal()
    assert ek_combine(left, right, both).entries == whole.entries


def test_excluded_parameters_rejected():
    with pytest.raises(ExcludedParameterError) as info:
        theorem_split(5, 2, 2)
    assert (info.value.m, info.value.s, info.value.r) == (5, 2, 2)


def test_forced_excluded_construction_fails_verification():
    cert = theorem_split(5, 2, 2, allow_excluded=True)
    w = mono(0, 1, 1, 1, 1)
    assert w in cert.domain
    assert cert.phi(w) == mono(0, 1, 0, 1, 1)
    verdict = verify_ek(cert)
    assert not verdict.valid
    failed = {v.kind: v for v in verdict.violations}
    assert "phi_membership" in failed
    assert failed["phi_membership"].witness == ("x2*x3*x4*x5",)


@pytest.mark.parametrize("m,s,r", [(2, 2, 1), (3, 1, 1), (3, 2, 0), (3, 2, 4)])
def test_theorem_split_parameter_errors(m, s, r):
    with pytest.raises(ValueError):
        theorem_split(m, s, r)


def test_split_chain_covers_every_r():
    chain = split_chain(3, 2)
    assert [c.params for c in chain] == [(3, 3, 2), (3, 2, 2), (3, 1, 2)]
    assert all(verify_ek(c).valid for c in chain)


@pytest.mark.parametrize("m,r,s", VALID)
def test_intersection_is_right_part_times_xr(m, r, s):
    cert = theorem_split(m, s, r)
    assert intersect(cert.left, cert.right) == scale(r, cert.right)
    assert MonomialIdeal(m, cert.domain) == scale(r, cert.right)


@pytest.mark.parametrize("m,s", [(3, 2), (3, 3), (4, 3)])
def test_split_chain_feeds_left_part_forward(m, s):
    chain = split_chain(m, s)
    assert [c.params[1] for c in chain] == list(range(m, 0, -1))
    for step, following in zip(chain, chain[1:]):
        assert step.left == following.ideal


def test_split_chain_broken():
    with pytest.raises(ChainBrokenError) as info:
        split_chain(4, 2)
    assert info.value.r == 1


def test_verify_detects_bad_lcm():
    cert = theorem_split(3, 3, 3)
    w, phi, _ = cert.mapping[0]
    broken = SplitCertificate(cert.ideal, cert.left, cert.right, ((w, phi, phi),), cert.params)
    kinds = {v.kind for v in verify_ek(broken).violations}
    assert "lcm" in kinds
    assert "phi_hat_membership" in kinds


def test_verify_detects_strictness_failure():
    # φ̂ = w viola la divisione stretta
    left = MonomialIdeal(2, [(1, 0)])
    right = MonomialIdeal(2, [(0, 1)])
    ideal = MonomialIdeal(2, [(1, 0), (0, 1)])
    w = mono(1, 1)
    cert = SplitCertificate(ideal, left, right, ((w, mono(1, 0), w),))
    verdict = verify_ek(cert)
    kinds = {v.kind for v in verdict.violations}
    assert "strict_phi_hat" in kinds
    assert "phi_hat_membership" in kinds


def test_verify_detects_wrong_domain_and_partition():
    cert = theorem_split(3, 2, 3)
    bad = SplitCertificate(cert.ideal, cert.left, cert.left, (), cert.params)
    kinds = {v.kind for v in verify_ek(bad).violations}
    assert {"partition", "domain"} <= kinds


def test_sampled_verification_is_marked_non_exhaustive():
    cert = theorem_split(4, 3, 4)
    verdict = verify_ek(cert, subset_cap=1, sample=200, seed=11)
    assert verdict.valid
    assert not verdict.exhaustive
    assert verdict.subsets_checked == 200
    assert "NON esaustiva" in verdict.summary()


def test_verification_above_cap_without_sample():
    cert = theorem_split(4, 3, 4)
    with pytest.raises(CapExceededError):
        verify_ek(cert, subset_cap=1)


def test_certificate_json_round_trip():
    cert = theorem_split(4, 3, 2)
    data = json.loads(json.dumps(cert.to_dict()))
    restored = SplitCertificate.from_dict(data)
    assert restored == cert
    assert verify_ek(restored).valid


def test_split_is_logged():
    logger = ComputationLogger()
    cert = theorem_split(3, 2, 2, logger=logger)
    verify_ek(cert, logger=logger)
    assert logger.count("split") == 1
    assert logger.count("verify_ek") == 1


def test_violation_summary():
    verdict = verify_ek(theorem_split(5, 2, 2, allow_excluded=True))
    assert verdict.summary().startswith("violazione ")
    assert isinstance(verdict.violations[0], Violation)
