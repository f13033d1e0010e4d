import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import eq4_codeword, kron_power
from polarcat.core import (
    PolarCodeSpec,
    bits_to_str,
    encode_matrix,
    encode_recursive,
    kronecker_generator,
    load_spec,
    polar_transform,
    rate,
    save_spec,
    str_to_bits,
)

SPEC84 = PolarCodeSpec(3, (0, 1, 2, 4))


def test_kernel():
    assert kronecker_generator(1).tolist() == [[1, 0], [1, 1]]


def test_n2_generator():
    assert kronecker_generator(2).tolist() == [
        [1, 0, 0, 0], [1, 1, 0, 0], [1, 0, 1, 0], [1, 1, 1, 1]
    ]


def test_n3_last_row_all_ones():
    assert kronecker_generator(3)[7].tolist() == [1] * 8


@pytest.mark.parametrize("n", range(1, 8))
def test_generator_matches_numpy_kron(n):
    assert np.array_equal(kronecker_generator(n), kron_power(n))


@pytest.mark.parametrize("n", range(1, 9))
def test_top_right_quadrant_zero(n):
    G = kronecker_generator(n)
    h = G.shape[0] // 2
    assert not G[:h, h:].any()


@pytest.mark.parametrize("n", range(1, 5))
def test_generator_involution(n):
    G = kronecker_generator(n).astype(int)
    assert np.array_equal((G @ G) % 2, np.eye(1 << n, dtype=int))


def test_generator_size_errors():
    with pytest.raises(ValueError):
        kronecker_generator(0)
    with pytest.raises(ValueError):
        kronecker_generator(13)
    assert kronecker_generator(3, max_exponent=3).shape == (8, 8)
    with pytest.raises(ValueError):
        kronecker_generator(4, max_exponent=3)


@pytest.mark.parametrize("info,expected", [
    ((0, 0, 0, 0), [0] * 8),
    ((0, 0, 0, 1), [1] * 8),
    ((1, 0, 1, 1), [1, 0, 1, 0, 0, 1, 0, 1]),
])
def test_worked_example(info, expected):
    assert encode_matrix(SPEC84, info).tolist() == expected
    assert encode_recursive(SPEC84, info).tolist() == expected


def test_worked_example_exhaustive():
    for info in itertools.product((0, 1), repeat=4):
        expected = eq4_codeword(*info)
        assert encode_matrix(SPEC84, info).tolist() == expected
        assert encode_recursive(SPEC84, info).tolist() == expected


def test_kernel_n2():
    spec = PolarCodeSpec(1, ())
    assert encode_recursive(spec, [1, 1]).tolist() == [0, 1]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_encoders_agree_exhaustively(n):
    N = 1 << n
    # every frozen pattern with at least one info bit, every message
    for mask in range(1 << N):
        frozen = tuple(i for i in range(N) if mask >> i & 1)
        if len(frozen) == N:
            continue
        spec = PolarCodeSpec(n, frozen)
        msgs = np.array(list(itertools.product((0, 1), repeat=spec.info_count)))
        assert np.array_equal(encode_matrix(spec, msgs), encode_recursive(spec, msgs))


@pytest.mark.parametrize("n", [4, 5])
def test_encoders_agree_random(n):
    rng = np.random.default_rng(n)
    N = 1 << n
    frozen = tuple(rng.choice(N, N // 2, replace=False))
    spec = PolarCodeSpec(n, frozen)
    msgs = rng.integers(0, 2, (1000, spec.info_count))
    assert np.array_equal(encode_matrix(spec, msgs), encode_recursive(spec, msgs))


def test_full_rate_involution():
    rng = np.random.default_rng(0)
    for n in range(1, 5):
        spec = PolarCodeSpec(n, ())
        u = rng.integers(0, 2, 1 << n)
        assert np.array_equal(encode_recursive(spec, encode_recursive(spec, u)), u)


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 8), st.data())
def test_linearity(n, data):
    N = 1 << n
    seed = data.draw(st.integers(0, 2**32 - 1))
    rng = np.random.default_rng(seed)
    frozen = tuple(rng.choice(N, rng.integers(0, N), replace=False))
    spec = PolarCodeSpec(n, frozen)
    a, b = rng.integers(0, 2, (2, spec.info_count))
    lhs = encode_recursive(spec, a ^ b)
    assert np.array_equal(lhs, encode_recursive(spec, a) ^ encode_recursive(spec, b))


def test_rate():
    assert rate(SPEC84) == 0.5
    assert rate(PolarCodeSpec(11, tuple(range(2048 - 1723)))) == 1723 / 2048
    assert rate(PolarCodeSpec(1, ())) == 1.0


def test_spec_validation():
    with pytest.raises(ValueError):
        PolarCodeSpec(0, ())
    with pytest.raises(ValueError):
        PolarCodeSpec(2, (0, 0))
    with pytest.raises(ValueError):
        PolarCodeSpec(2, (4,))
    with pytest.raises(ValueError):
        PolarCodeSpec(1, (0, 1))
    spec = PolarCodeSpec(3, (4, 0, 2, 1))
    assert spec.frozen == (0, 1, 2, 4)
    assert (spec.block_length, spec.info_count) == (8, 4)
    assert spec.info_indices.tolist() == [3, 5, 6, 7]


def test_wrong_length():
    with pytest.raises(ValueError):
        encode_recursive(SPEC84, [1, 0, 1])
    with pytest.raises(ValueError):
        encode_matrix(SPEC84, [1, 0, 1, 1, 0])
    with pytest.raises(ValueError):
        encode_recursive(SPEC84, [1, 0, 2, 1])


def test_spec_file_roundtrip(tmp_path):
    path = tmp_path / "code.json"
    save_spec(SPEC84, path)
    assert path.read_text().strip() == '{"n": 3, "frozen": [0, 1, 2, 4]}'
    assert load_spec(path) == SPEC84


def test_bit_strings():
    assert bits_to_str([1, 0, 1, 1]) == "1011"
    assert str_to_bits("1011").tolist() == [1, 0, 1, 1]
    with pytest.raises(ValueError):
        str_to_bits("10a1")


def test_transform_batched_rows_independent():
    rng = np.random.default_rng(1)
    u = rng.integers(0, 2, (5, 32))
    batched = polar_transform(u)
    for row, out in zip(u, batched):
        assert np.array_equal(polar_transform(row), out)
