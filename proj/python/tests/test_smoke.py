import pytest

import spanlab


def path(n):
    return spanlab.new_graph(n, [(i, i + 1) for i in range(n - 1)])


def test_lambda_exact_known_values():
    lam, labels = spanlab.lambda_exact(path(2), 2, 1)
    assert lam == 2
    lam, labels = spanlab.lambda_exact(path(5), 2, 1)
    assert lam == 4
    assert spanlab.verify(path(5), labels, 2, 1)


def test_tracks_agree_on_k3():
    k3 = spanlab.new_graph(3, [(0, 1), (0, 2), (1, 2)])
    assert spanlab.lambda_exact(k3, 2, 1)[0] == 4
    assert spanlab.lambda_dp(k3, 2, 1)[0] == 4
    assert spanlab.lambda_tc(k3, 2)[0] == 4
    assert spanlab.lambda_l11(k3)[0] == 2
    assert spanlab.approx_lp1(k3, 2)[0] == 4


def test_decide_modes():
    k2 = path(2)
    assert spanlab.decide_dp(k2, 2, 1, 1) is None
    labels = spanlab.decide_exact(k2, 2, 1, 2)
    assert labels is not None and spanlab.verify(k2, labels, 2, 1)


def test_gr_round_trip():
    g = spanlab.new_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    again = spanlab.parse_gr(spanlab.emit_gr(g))
    assert again.n == g.n and list(again.edges) == list(g.edges)


def test_verify_catches_bad_labeling():
    assert not spanlab.verify(path(2), [0, 1], 2, 1)


def test_mso_round_trip():
    p3 = path(3)
    assert spanlab.naive_model_check(p3, spanlab.emit_phi(3, 2, 1))
    assert not spanlab.naive_model_check(p3, spanlab.emit_phi(2, 2, 1))


def test_errors_are_typed():
    two = spanlab.new_graph(2, [])
    with pytest.raises(spanlab.ContractError):
        spanlab.lambda_exact(two, 2, 1)  # disconnected
    with pytest.raises(spanlab.ContractError):
        spanlab.new_graph(2, [(0, 5)])
