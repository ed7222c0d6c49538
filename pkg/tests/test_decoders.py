import math

import numpy as np
import pytest

from rmqmac import gf2
from rmqmac.channel import make_channel, transmit
from rmqmac.decoders import (
    DECODER_IDS,
    Order,
    joint_ml_decode,
    message_of,
    monte_carlo,
    pair_log_likelihood,
    successive_decode,
    trial_received,
    wilson_interval,
)
from rmqmac.errors import EnumerationLimitError, NoFeasiblePairError
from rmqmac.gf2 import BitVector
from rmqmac.rm import build_rm

NOISELESS = make_channel(0, 0, 0)
UNIFORM = make_channel(0.25, 0.25, 0.25)
C13 = build_rm(1, 3)


def oracle_joint(c1, c2, y, ch):
    """Per-symbol table lookup over all pairs; smallest pair among near-ties."""
    table = {(0, 0): ch.p_i, (1, 0): ch.p_x, (1, 1): ch.p_y, (0, 1): ch.p_z}
    logt = {k: (math.log(v) if v > 0 else -math.inf) for k, v in table.items()}
    books = [gf2.codebook(c.generator) for c in (c1, c2)]
    best, best_ll = None, -math.inf
    for u1, w1 in enumerate(books[0]):
        e1 = (w1 ^ y[:, 0]).tolist()
        for u2, w2 in enumerate(books[1]):
            e2 = (w2 ^ y[:, 1]).tolist()
            ll = sum(logt[a, b] for a, b in zip(e1, e2))
            if best is None or ll > best_ll + 1e-9:
                best, best_ll = (u1, u2), ll
    return best, best_ll


def test_noiseless_recovers_transmitted():
    c1, c2 = build_rm(1, 3), build_rm(2, 3)
    b1, b2 = gf2.codebook(c1.generator), gf2.codebook(c2.generator)
    for u1, u2 in [(0, 0), (5, 17), (15, 127)]:
        y = transmit(b1[u1], b2[u2], NOISELESS, seed=0)
        res = joint_ml_decode(c1, c2, y, NOISELESS)
        assert (res.message1.to_int(), res.message2.to_int()) == (u1, u2)
        assert res.log_likelihood == 0.0
        for order in Order:
            res = successive_decode(c1, c2, y, NOISELESS, order)
            assert (res.message1.to_int(), res.message2.to_int()) == (u1, u2)


def test_uniform_channel_tie_break():
    y = np.zeros((8, 2), dtype=np.uint8)
    res = joint_ml_decode(C13, C13, y, UNIFORM)
    assert res.message1.to_int() == 0 and res.message2.to_int() == 0
    assert res.log_likelihood == pytest.approx(8 * math.log(0.25))


def test_joint_matches_oracle():
    ch = make_channel(0.02, 0.02, 0.02)
    trials, fails, oracle_fails = 10_000, 0, 0
    for t in range(trials):
        u1, u2, y = trial_received(C13, C13, ch, seed=11, trial=t)
        res = joint_ml_decode(C13, C13, y, ch)
        got = (res.message1.to_int(), res.message2.to_int())
        want, ll = oracle_joint(C13, C13, y, ch)
        assert got == want
        assert res.log_likelihood == pytest.approx(ll, abs=1e-9)
        fails += got != (u1, u2)
        oracle_fails += want != (u1, u2)
    assert fails == oracle_fails
    assert monte_carlo(C13, C13, ch, "joint", trials, seed=11).failures == fails


def test_joint_matches_oracle_on_degenerate_channel():
    # zeros in the noise law create -inf likelihoods and many ties
    ch = make_channel(0.3, 0.0, 0.2)
    c1, c2 = build_rm(0, 3), build_rm(1, 3)
    for t in range(200):
        _, _, y = trial_received(c1, c2, ch, seed=2, trial=t)
        res = joint_ml_decode(c1, c2, y, ch)
        assert (res.message1.to_int(), res.message2.to_int()) == oracle_joint(c1, c2, y, ch)[0]


def test_joint_optimality_and_validity():
    ch = make_channel(0.05, 0.03, 0.04)
    c1, c2 = build_rm(1, 3), build_rm(2, 3)
    for t in range(200):
        u1, u2, y = trial_received(c1, c2, ch, seed=5, trial=t)
        res = joint_ml_decode(c1, c2, y, ch)
        assert res.log_likelihood >= pair_log_likelihood(c1, c2, u1, u2, y, ch)
        assert gf2.encode(c1.generator, res.message1) == res.codeword1
        assert gf2.encode(c2.generator, res.message2) == res.codeword2


def test_factorized_noise_decomposes():
    # independent X and Z flips: P(d1, d2) = P(d1) P(d2)
    a, b = 0.1, 0.15
    ch = make_channel(a * (1 - b), a * b, (1 - a) * b, p_i=(1 - a) * (1 - b))
    c1, c2 = build_rm(1, 3), build_rm(1, 3)
    for t in range(100):
        _, _, y = trial_received(c1, c2, ch, seed=8, trial=t)
        res = joint_ml_decode(c1, c2, y, ch)
        books = gf2.codebook(c1.generator)
        d1 = (books ^ y[:, 0]).sum(axis=1)
        d2 = (books ^ y[:, 1]).sum(axis=1)
        if (d1 == d1.min()).sum() == 1 and (d2 == d2.min()).sum() == 1:
            assert res.message1.to_int() == int(np.argmin(d1))
            assert res.message2.to_int() == int(np.argmin(d2))


def test_pure_x_noise_fails_only_in_first_stage():
    ch = make_channel(0.15, 0.0, 0.0)
    for t in range(100):
        u1, u2, y = trial_received(C13, C13, ch, seed=4, trial=t)
        res = successive_decode(C13, C13, y, ch, Order.X_FIRST)
        if res.message1.to_int() == u1:
            assert res.message2.to_int() == u2


def test_xor_first_internal_consistency():
    ch = make_channel(0.03, 0.02, 0.04)
    c1, c2 = build_rm(2, 3), build_rm(1, 3)
    for t in range(100):
        _, _, y = trial_received(c1, c2, ch, seed=9, trial=t)
        res = successive_decode(c1, c2, y, ch, Order.XOR_FIRST)
        assert res.first_stage == res.codeword1 + res.codeword2


def test_infeasible_received_word():
    ch = make_channel(0.0, 0.0, 0.0)
    y = np.zeros((8, 2), dtype=np.uint8)
    y[0, 0] = 1  # weight-1 word is not in RM(0, 3)
    with pytest.raises(NoFeasiblePairError):
        joint_ml_decode(build_rm(0, 3), build_rm(0, 3), y, ch)


def test_enumeration_limit():
    c = build_rm(2, 5)  # k = 16
    with pytest.raises(EnumerationLimitError):
        joint_ml_decode(c, c, np.zeros((32, 2), dtype=np.uint8), UNIFORM)


def test_message_of_roundtrip():
    c = build_rm(2, 4)
    for u in (0, 1, 77, 2047):
        w = gf2.encode(c.generator, BitVector.from_int(u, c.k))
        assert message_of(c, w) == u


def test_wilson_interval():
    lo, hi = wilson_interval(0, 100)
    assert lo == 0 and 0 < hi < 0.05
    lo, hi = wilson_interval(50, 100)
    assert lo < 0.5 < hi and hi - 0.5 == pytest.approx(0.5 - lo)


@pytest.mark.parametrize("decoder_id", DECODER_IDS)
def test_monte_carlo_noiseless_and_deterministic(decoder_id):
    rep = monte_carlo(C13, C13, NOISELESS, decoder_id, trials=100, seed=3)
    assert rep.failures == 0 and rep.error_rate == 0
    ch = make_channel(0.03, 0.03, 0.03)
    a = monte_carlo(C13, C13, ch, decoder_id, trials=200, seed=3)
    b = monte_carlo(C13, C13, ch, decoder_id, trials=200, seed=3)
    assert a == b and a.ci_low <= a.error_rate <= a.ci_high


def test_monte_carlo_trials_are_order_independent():
    ch = make_channel(0.03, 0.03, 0.03)
    forward = [trial_received(C13, C13, ch, 1, t) for t in range(20)]
    backward = [trial_received(C13, C13, ch, 1, t) for t in reversed(range(20))][::-1]
    for (a1, a2, ya), (b1, b2, yb) in zip(forward, backward):
        assert (a1, a2) == (b1, b2) and np.array_equal(ya, yb)


def test_successive_not_better_than_joint():
    ch = make_channel(0.04, 0.04, 0.04)
    joint = monte_carlo(C13, C13, ch, "joint", trials=1500, seed=21)
    for d in ("succ-x", "succ-z", "succ-xor"):
        rep = monte_carlo(C13, C13, ch, d, trials=1500, seed=21)
        sigma = math.sqrt(rep.trials * rep.error_rate * (1 - rep.error_rate))
        assert joint.failures <= rep.failures + 3 * sigma


def test_monotone_along_depolarizing_ray():
    c = build_rm(1, 4)
    rates = []
    for p in (0.01, 0.03, 0.06):
        q = p / 3
        rates.append(monte_carlo(c, c, make_channel(q, q, q), "joint", 1000, seed=0))
    for lo, hi in zip(rates, rates[1:]):
        sigma = math.sqrt(sum(r.error_rate * (1 - r.error_rate) / r.trials for r in (lo, hi)))
        assert hi.error_rate >= lo.error_rate - 3 * sigma


def test_monte_carlo_two_noise_levels():
    c = build_rm(1, 4)
    low = monte_carlo(c, c, make_channel(0.01, 0.01, 0.01), "joint", 2000, seed=0)
    high = monte_carlo(c, c, make_channel(0.03, 0.03, 0.03), "joint", 2000, seed=0)
    assert low.error_rate < high.error_rate < 0.5
    # golden values from the first verified run
    assert (low.failures, high.failures) == (1, 7)
