"""Character values, tables, and the orthogonality identities."""

import itertools

import pytest

from hwrep import (
    CycInt,
    GroupElement,
    GroupParams,
    IrrepLabel,
    NonCanonicalLabelError,
    character,
    character_norm_squared,
    character_table,
    characters_equal,
    enumerate_classes,
    enumerate_irreps,
    irrep_matrix,
)


def all_elements(N):
    return [GroupElement(m, n, l) for m in range(N) for n in range(N) for l in range(N)]


def test_character_examples():
    for s in (1, 2):
        for label in enumerate_irreps(s):
            value = character(label, GroupElement(0, 0, 0))
            assert not value.is_zero()
            assert value.scale == label.dim and value.exp == 0
    # n = 1 is not a multiple of 4
    assert character(IrrepLabel(2, 1, 0, 0), GroupElement(0, 1, 0)).is_zero()
    # trace of the monomial matrix must agree: 2 * w2^(1+1) = 2
    value = character(IrrepLabel(2, 2, 1, 1), GroupElement(0, 2, 2))
    assert value.to_cycint(4) == CycInt.from_int(4, 2)
    assert irrep_matrix(IrrepLabel(2, 2, 1, 1), GroupElement(0, 2, 2)).trace() == CycInt.from_int(4, 2)


@pytest.mark.parametrize("s", [1, 2])
def test_trace_consistency_exhaustive(s):
    N = 1 << s
    for label in enumerate_irreps(s):
        for g in all_elements(N):
            assert character(label, g).to_cycint(N) == irrep_matrix(label, g).trace()


def test_character_support():
    # zero unless n and l are both multiples of 2^(s-t)
    for label in enumerate_irreps(2):
        d = label.dim
        for g in all_elements(4):
            expect_zero = bool(g.n % d or g.l % d)
            assert character(label, g).is_zero() == expect_zero


def test_norm_squared_examples():
    assert character_norm_squared(IrrepLabel(1, 1, 0, 0)) == 8
    assert character_norm_squared(IrrepLabel(2, 0, 3, 2)) == 64
    for label in enumerate_irreps(3):
        assert character_norm_squared(label) == 512


@pytest.mark.parametrize("s", [1, 2])
def test_norm_squared_against_trace_oracle(s):
    # independent route: full-group sum of tr(G(g)) * conj(tr(G(g)))
    N = 1 << s
    for label in enumerate_irreps(s):
        total = CycInt.zero(N)
        for g in all_elements(N):
            tr = irrep_matrix(label, g).trace()
            total = total + tr * tr.conj()
        assert total.to_int() == character_norm_squared(label)


def test_characters_equal_examples():
    assert characters_equal(IrrepLabel(2, 1, 0, 0), IrrepLabel(2, 1, 2, 0))
    assert not characters_equal(IrrepLabel(2, 1, 0, 0), IrrepLabel(2, 3, 0, 0))
    assert characters_equal(IrrepLabel(2, 2, 1, 0), IrrepLabel(2, 2, 3, 0))
    assert not characters_equal(IrrepLabel(2, 2, 1, 0), IrrepLabel(2, 2, 1, 1))


def test_characters_equal_matches_full_group_comparison():
    # class-representative comparison agrees with comparing everywhere
    N = 4
    labels = [IrrepLabel(2, p, q, r) for p, q, r in [(1, 0, 0), (1, 2, 2), (2, 1, 1), (2, 3, 3)]]
    for a, b in itertools.product(labels, repeat=2):
        def full(x):
            from hwrep.characters import _char_value

            return [
                _char_value(2, x.p, x.q, x.r, g) for g in all_elements(N)
            ]

        assert characters_equal(a, b) == (full(a) == full(b))


@pytest.mark.parametrize("s,size", [(1, 5), (2, 22)])
def test_table_shape(s, size):
    table = character_table(s)
    assert len(table.irreps) == len(table.classes) == size
    assert len(table.values) == size and len(table.values[0]) == size


@pytest.mark.parametrize("s", [1, 2])
def test_class_function_property(s):
    params = GroupParams(s)
    for label in enumerate_irreps(s):
        for cls in enumerate_classes(params):
            assert len({character(label, g) for g in cls.members()}) == 1


@pytest.mark.parametrize("s", [1, 2])
def test_row_orthogonality_exact(s):
    table = character_table(s)
    N = 1 << s
    order = 1 << (3 * s)
    for i, row_i in enumerate(table.values):
        for j, row_j in enumerate(table.values):
            total = CycInt.zero(N)
            for cls, vi, vj in zip(table.classes, row_i, row_j):
                if vi.is_zero() or vj.is_zero():
                    continue
                total = total + cls.size * CycInt.root(N, (vi.exp - vj.exp) % N) * (
                    vi.scale * vj.scale
                )
            assert total.to_int() == (order if i == j else 0)


def test_row_orthogonality_class_weights_match_full_sum():
    # the |C|-weighted class sum equals the literal full-group sum
    N = 4
    table = character_table(2)
    for i, j in [(0, 0), (0, 1), (3, 5), (2, 2)]:
        weighted = CycInt.zero(N)
        for cls, vi, vj in zip(table.classes, table.values[i], table.values[j]):
            if vi.is_zero() or vj.is_zero():
                continue
            weighted = weighted + cls.size * (vi.scale * vj.scale) * CycInt.root(
                N, (vi.exp - vj.exp) % N
            )
        full = CycInt.zero(N)
        for g in all_elements(N):
            a = character(table.irreps[i], g).to_cycint(N)
            b = character(table.irreps[j], g).to_cycint(N)
            full = full + a * b.conj()
        assert weighted == full


def test_pairwise_distinct_rows():
    for s in (1, 2):
        table = character_table(s)
        assert len({tuple(row) for row in table.values}) == len(table.irreps)


def test_one_dim_rows_unit_scale():
    table = character_table(2)
    for label, row in zip(table.irreps, table.values):
        if label.dim == 1:
            assert all((not cell.is_zero()) and cell.scale == 1 for cell in row)


def test_csv_export_shape():
    table = character_table(1)
    text = table.to_csv_text()
    lines = text.strip().split("\n")
    assert len(lines) == 6
    assert lines[0].startswith("irrep,")
    assert '"1,0,0",0,0,0,2*w^0,2*w^1' in text


def test_csv_golden_regression():
    expected = (
        'irrep,"0,0,1 (x2)","0,1,0 (x2)","0,1,1 (x2)","0,0,0 (x1)","1,0,0 (x1)"\n'
        '"1,0,0",0,0,0,2*w^0,2*w^1\n'
        '"0,0,0",1*w^0,1*w^0,1*w^0,1*w^0,1*w^0\n'
        '"0,0,1",1*w^1,1*w^0,1*w^1,1*w^0,1*w^0\n'
        '"0,1,0",1*w^0,1*w^1,1*w^1,1*w^0,1*w^0\n'
        '"0,1,1",1*w^1,1*w^1,1*w^0,1*w^0,1*w^0\n'
    )
    assert character_table(1).to_csv_text() == expected


def test_json_export():
    table = character_table(1)
    obj = table.to_json()
    assert obj["s"] == 1
    assert obj["irreps"][0] == "1,0,0"
    assert obj["values"][0][3] == {"scale": 2, "exp": 0}
    assert obj["values"][0][0] is None


def test_non_canonical_rejected():
    with pytest.raises(NonCanonicalLabelError):
        character(IrrepLabel(2, 2, 3, 0), GroupElement(0, 0, 0))
    with pytest.raises(NonCanonicalLabelError):
        character_norm_squared(IrrepLabel(2, 1, 1, 0))
