import pytest

from tridend.products import product, star
from tridend.tensor import check_tensor_structure, tensor_basis_op, tensor_op, unit_tensor
from tridend.trees import LEAF, Y, enumerate_trees, parse_tree
from tridend.vectors import TensorVector

P = parse_tree


def t(*keys):
    return TensorVector.basis(tuple(keys))


def test_both_tails_units():
    assert tensor_basis_op("left", (Y, LEAF), (Y, LEAF)) == t(P("(|,(|,|))"), LEAF)


def test_tail_not_unit():
    assert tensor_basis_op("left", (Y, Y), (LEAF, Y)) == t(Y, P("(|,(|,|))"))
    assert tensor_basis_op("right", (LEAF, Y), (Y, LEAF)) == 0


def test_undefined_unit_products_propagate():
    with pytest.raises(ArithmeticError):
        tensor_basis_op("mid", (LEAF, LEAF), (LEAF, LEAF))


def test_star_is_factorwise():
    x = t(Y, P("(|,|,|)"))
    y = t(LEAF, Y)
    expected = TensorVector.tensor(star(Y, LEAF), star(P("(|,|,|)"), Y))
    assert tensor_op("star", x, y) == expected


def test_unit_tensor_is_unit_for_star():
    for a in [(Y, LEAF), (LEAF, Y), (Y, P("(|,(|,|))"))]:
        assert tensor_basis_op("star", unit_tensor(2), a) == t(*a)
        assert tensor_basis_op("star", a, unit_tensor(2)) == t(*a)


def test_mixed_unit_split():
    # (|⊗|) * (a⊗b) splits as 0 + 0 + a⊗b
    a = (Y, P("(|,|,|)"))
    u = unit_tensor(2)
    assert tensor_basis_op("left", u, a) == 0
    assert tensor_basis_op("mid", u, a) == 0
    assert tensor_basis_op("right", u, a) == t(*a)


def test_arity_mismatch_and_unknown_op():
    with pytest.raises(ValueError):
        tensor_basis_op("left", (Y,), (Y, Y))
    with pytest.raises(ValueError):
        tensor_op("cross", t(Y), t(Y))


def test_groupings_agree_on_four_factors():
    keys = [(Y, LEAF, LEAF, LEAF), (LEAF, Y, LEAF, Y), (LEAF, LEAF, LEAF, Y), (Y, Y, LEAF, LEAF)]
    for a in keys:
        for b in keys:
            for op in ("left", "mid", "right"):
                try:
                    lhs = tensor_basis_op(op, a, b, "left")
                except ArithmeticError:
                    with pytest.raises(ArithmeticError):
                        tensor_basis_op(op, a, b, "right")
                    continue
                assert lhs == tensor_basis_op(op, a, b, "right")


def test_one_factor_is_the_algebra_itself():
    for s in enumerate_trees(2):
        for op in ("left", "mid", "right"):
            expected = TensorVector({(w,): c for w, c in product(op, s, Y).items()})
            assert tensor_basis_op(op, (s,), (Y,)) == expected


def test_tensor_structure_exhaustive():
    report = check_tensor_structure(4)
    assert report.ok, report.violations[:3]
    assert report.cases > 0
