import pytest

from sl3tensor.alcoves import classify, restricted_weights
from sl3tensor.decompose import (
    IntegrityError,
    Summand,
    case3_floor_solve,
    decompose,
    greedy_tilting,
    split_blocks,
    summand_char,
    summand_dim,
    sweep,
    tensor_char,
    verify,
)
from sl3tensor.modchar import to_simple_basis
from sl3tensor.weights import tau
from sl3tensor.weylchar import Character


def summand_set(d):
    return {(s.kind, s.weight, s.multiplicity) for s in d.summands}


def test_tensor_char_examples():
    tc = tensor_char((3, 1), (3, 1), 5)
    assert tc == Character(
        "weyl", {(6, 2): 1, (7, 0): 1, (4, 3): 1, (2, 4): 1, (0, 5): 1, (0, 2): 2}
    )
    assert tc.dimension() == 324

    assert tensor_char((0, 0), (4, 4), 5) == Character("weyl", {(4, 4): 1})

    tc2 = tensor_char((2, 2), (1, 1), 5)
    assert to_simple_basis(tc2, 5) == Character(
        "simple", {(3, 3): 1, (1, 4): 1, (4, 1): 1, (2, 2): 1}
    )
    assert tc2.dimension() == 152


def test_tensor_char_rejects_bad_input():
    with pytest.raises(ValueError):
        tensor_char((5, 0), (0, 0), 5)
    with pytest.raises(ValueError):
        tensor_char((0, 0), (0, 0), 4)
    with pytest.raises(ValueError):
        tensor_char((0, 0), (0, 0), 9)


def test_split_blocks_case3():
    tc = tensor_char((3, 1), (3, 1), 5)
    blocks = split_blocks(tc, 5)
    supports = sorted(tuple(sorted(b.coeffs)) for b in blocks.values())
    assert supports == [
        ((0, 2), (0, 5), (7, 0)),
        ((2, 4), (6, 2)),
        ((4, 3),),
    ]
    total = Character("weyl", {})
    for b in blocks.values():
        total = total + b
    assert total == tc


def test_split_blocks_trivial_and_case2():
    assert len(split_blocks(Character("weyl", {(0, 0): 1}), 5)) == 1
    blocks = split_blocks(tensor_char((2, 2), (1, 1), 5), 5)
    assert len(blocks) == 4
    # each block carries a single simple character
    for block in blocks.values():
        assert len(to_simple_basis(block, 5).coeffs) == 1


def test_greedy_tilting_examples():
    singular = Character("weyl", {(6, 2): 1, (2, 4): 1})
    got, residual = greedy_tilting(singular, 5)
    assert [(s.kind, s.weight, s.multiplicity) for s in got] == [("T", (6, 2), 1)]
    assert not residual

    st = Character("weyl", {(4, 4): 1})
    got, residual = greedy_tilting(st, 5)
    assert [(s.kind, s.weight, s.multiplicity) for s in got] == [("T", (4, 4), 1)]
    assert not residual

    block = tensor_char((1, 1), (1, 1), 5)
    got, residual = greedy_tilting(block, 5)
    assert not residual
    assert {(s.weight, s.multiplicity) for s in got} == {
        ((2, 2), 1), ((3, 0), 1), ((0, 3), 1), ((1, 1), 1), ((0, 0), 1)
    }


def test_greedy_respects_floor():
    block = Character("weyl", {(7, 0): 1, (0, 5): 1, (0, 2): 2})
    floor = frozenset({(7, 0), (0, 5), (1, 3), (0, 2)})
    got, residual = greedy_tilting(block, 5, floor)
    assert got == []
    assert residual == block


def test_greedy_negative_coefficient_is_integrity_error():
    with pytest.raises(IntegrityError):
        greedy_tilting(Character("weyl", {(0, 0): -1}), 5)


def test_case3_floor_solve():
    assert case3_floor_solve(1, 1, 2, 2) == (0, 0, 0, 1)
    assert case3_floor_solve(1, 0, 2, 1) == (1, 0, 0, 0)
    with pytest.raises(IntegrityError):
        case3_floor_solve(1, 1, 2, 1)
    with pytest.raises(IntegrityError):
        case3_floor_solve(0, 0, 1, 0)  # z = -..., negative part
    # masked variables must carry zero coefficients
    with pytest.raises(IntegrityError):
        case3_floor_solve(1, 0, 0, 0, present=(False, True, True, True))


def test_decompose_case3_worked_example():
    d = decompose((3, 1), (3, 1), 5)
    assert d.case == 3
    assert summand_set(d) == {
        ("M", (1, 3), 1), ("T", (0, 2), 1), ("T", (6, 2), 1), ("T", (4, 3), 1)
    }
    assert d.dim_product == 324
    assert [summand_dim(s, 5) for s in d.summands] == [165, 90, 63, 6]
    assert verify(d).passed


def test_decompose_case2_worked_example():
    d = decompose((2, 2), (1, 1), 5)
    assert d.case == 2
    assert summand_set(d) == {
        ("L", (3, 3), 1), ("T", (1, 4), 1), ("T", (4, 1), 1), ("L", (2, 2), 1)
    }
    assert sorted(summand_dim(s, 5) for s in d.summands) == [19, 35, 35, 63]
    assert d.dim_product == 152
    assert verify(d).passed


def test_decompose_case1():
    d = decompose((1, 1), (1, 1), 5)
    assert d.case == 1
    assert summand_set(d) == {
        ("T", (2, 2), 1), ("T", (3, 0), 1), ("T", (0, 3), 1),
        ("T", (1, 1), 1), ("T", (0, 0), 1),
    }
    assert sorted(summand_dim(s, 5) for s in d.summands) == [1, 8, 10, 10, 35]


def test_decompose_unit_factor():
    d = decompose((0, 0), (0, 0), 5)
    assert summand_set(d) == {("T", (0, 0), 1)}
    d = decompose((0, 0), (4, 4), 5)
    assert summand_set(d) == {("T", (4, 4), 1)}


def test_decompose_steinberg_square():
    d = decompose((4, 4), (4, 4), 5)
    assert all(s.kind == "T" for s in d.summands)
    assert sum(summand_dim(s, 5) for s in d.summands) == 15625
    assert verify(d).passed


def test_verify_catches_perturbation():
    d = decompose((3, 1), (3, 1), 5)
    broken = type(d)(
        p=d.p, left=d.left, right=d.right, case=d.case,
        summands=[
            Summand(s.kind, s.weight, s.multiplicity + (1 if i == 0 else 0))
            for i, s in enumerate(d.summands)
        ],
        dim_product=d.dim_product,
    )
    report = verify(broken)
    assert not report.passed
    names = {c.name for c in report.failures()}
    assert "character-sum" in names


def test_summand_char_consistency():
    d = decompose((3, 1), (3, 1), 5)
    total = Character("weyl", {})
    for s in d.summands:
        total = total + summand_char(s, 5)
    assert total == tensor_char((3, 1), (3, 1), 5)


@pytest.mark.parametrize("p", [5])
def test_tau_equivariance_sample(p):
    for nu in [(3, 1), (2, 2), (4, 0), (1, 3)]:
        for nu2 in [(1, 1), (3, 1), (0, 4)]:
            d = decompose(nu, nu2, p)
            mirrored = decompose(tau(nu2), tau(nu), p)
            assert {
                (s.kind, tau(s.weight), s.multiplicity) for s in d.summands
            } == summand_set(mirrored)
            assert summand_set(decompose(nu2, nu, p)) == summand_set(d)


def test_case_assignment():
    assert decompose((3, 1), (3, 1), 5).case == 3       # both second alcove
    assert decompose((3, 1), (1, 1), 5).case == 2
    assert decompose((4, 1), (2, 2), 5).case == 2       # wall x second alcove
    assert decompose((4, 1), (4, 4), 5).case == 1


def test_m_only_in_case3_small_sweep():
    for nu in restricted_weights(5):
        d = decompose(nu, (2, 2), 5)
        kinds = {s.kind for s in d.summands}
        if "M" in kinds:
            assert d.case == 3
        if "L" in kinds:
            assert classify(nu, 5) == "C2" or classify((2, 2), 5) == "C2"


def test_sweep_rejects_bad_prime():
    with pytest.raises(ValueError):
        sweep(4)
    with pytest.raises(ValueError):
        sweep(13)


def test_sweep_no_verify_counts_match():
    quick = sweep(5, run_verify=False)
    assert quick.pairs == 625
    assert quick.passed
    full = sweep(5, run_verify=True)
    assert full.summand_counts == quick.summand_counts
    assert full.m_pairs == quick.m_pairs


def test_sweep_parallel_agrees():
    serial = sweep(5, run_verify=False)
    parallel = sweep(5, run_verify=False, jobs=2)
    assert serial.to_json() == parallel.to_json()
