import pytest
from hypothesis import given, settings

from oracles import brute_dual_product
from strategies import nonunit_trees
from tridend.dual import (PIECES, check_compatibilities, check_cotri, check_dual_adjointness,
                          check_dual_structure, cotri_identities, dual_coproduct, dual_coproduct_mid,
                          dual_coproduct_prec, dual_coproduct_succ, dual_pieces, dual_product,
                          lightning_piece, lightning_split)
from tridend.products import star
from tridend.trees import LEAF, Y, degree, enumerate_trees, leaf_count, parse_tree
from tridend.vectors import TensorVector, TreeVector, pairing

P = parse_tree


def t2(*pairs):
    return TensorVector([((P(a), P(b)), 1) for a, b in pairs])


def vec(*texts):
    return TreeVector([(P(s), 1) for s in texts])


def strip_units(v, t):
    return v - TensorVector.basis((t, LEAF)) * v[(t, LEAF)] - TensorVector.basis((LEAF, t)) * v[(LEAF, t)]


# --- lightning splitting ----------------------------------------------------

@settings(max_examples=40)
@given(nonunit_trees)
def test_lightning_ends(t):
    assert lightning_split(t, 1) == (LEAF, t)
    assert lightning_split(t, leaf_count(t)) == (t, LEAF)


def test_lightning_examples():
    assert lightning_split(P("(|,(|,|))"), 2) == (Y, Y)
    assert lightning_split(P("(|,|,|)"), 2) == (Y, Y)
    assert lightning_piece(Y, 1) == "succ" and lightning_piece(Y, 2) == "prec"
    assert lightning_piece(P("(|,|,|)"), 2) == "mid"
    with pytest.raises(ValueError):
        lightning_split(Y, 3)
    with pytest.raises(ValueError):
        lightning_piece(LEAF, 1)


def test_dual_coproduct_examples():
    assert dual_coproduct(Y) == t2(("(|,|)", "|"), ("|", "(|,|)"))
    assert dual_coproduct_prec(Y) == t2(("(|,|)", "|"))
    assert dual_coproduct_succ(Y) == t2(("|", "(|,|)"))
    assert dual_coproduct_mid(Y) == 0
    assert dual_coproduct_mid(P("(|,|,|)")) == t2(("(|,|)", "(|,|)"))
    t = P("(|,(|,|))")
    assert strip_units(dual_coproduct_prec(t), t) == t2(("(|,|)", "(|,|)"))
    t = P("((|,|),|)")
    assert strip_units(dual_coproduct_succ(t), t) == t2(("(|,|)", "(|,|)"))
    assert dual_coproduct(LEAF) == t2(("|", "|"))
    with pytest.raises(ValueError):
        dual_pieces(LEAF)


def test_dual_coproduct_against_pairing():
    # <(|,(|,|)), Y*Y> = 1, and that term of Δ is Y⊗Y
    assert pairing(TreeVector.basis(P("(|,(|,|))")), star(Y, Y)) == 1
    assert dual_coproduct(P("(|,(|,|))"))[(Y, Y)] == 1


# --- dual product ------------------------------------------------------------

def test_dual_product_examples():
    assert dual_product(LEAF, P("(|,(|,|))")) == vec("(|,(|,|))")
    assert dual_product(P("(|,(|,|))"), LEAF) == vec("(|,(|,|))")
    assert dual_product(Y, Y) == vec("((|,|),|)", "(|,(|,|))")


@pytest.mark.parametrize("s,t", [("(|,|)", "(|,|,|)"), ("(|,|,|)", "(|,|)"), ("(|,(|,|))", "(|,|)"),
                                 ("(|,|)", "((|,|),|)"), ("((|,|),|)", "(|,(|,|))")])
def test_dual_product_against_cut_oracle(s, t):
    assert dual_product(P(s), P(t)) == brute_dual_product(P(s), P(t))


def test_dual_product_frozen_values():
    # Y falls off one of the three leaf positions of the 3-corolla
    assert dual_product(Y, P("(|,|,|)")) == vec("((|,|),|,|)", "(|,(|,|),|)", "(|,|,(|,|))")
    # (|,|,|) falls off Y, or two fallen Y's multiply to a sum containing it
    assert dual_product(P("(|,|,|)"), Y) == vec("((|,|,|),|)", "(|,(|,|,|))", "((|,|),(|,|))")


def test_dual_product_associative_and_unital():
    ts = [t for n in range(0, 4) for t in enumerate_trees(n)]
    for a in ts:
        assert dual_product(LEAF, a) == dual_product(a, LEAF) == TreeVector.basis(a)
        for b in ts:
            for c in ts:
                if degree(a) + degree(b) + degree(c) <= 6:
                    assert dual_product(dual_product(a, b), c) == dual_product(a, dual_product(b, c))


def test_dual_counit():
    for n in range(0, 5):
        for t in enumerate_trees(n):
            d = dual_coproduct(t)
            assert TreeVector({k[1]: c for k, c in d.items() if not k[0]}) == TreeVector.basis(t)
            assert TreeVector({k[0]: c for k, c in d.items() if not k[1]}) == TreeVector.basis(t)


def test_dual_coproduct_coassociative():
    for n in range(0, 6):
        for t in enumerate_trees(n):
            d = dual_coproduct(t)
            assert d.map_factor(0, dual_coproduct) == d.map_factor(1, dual_coproduct)


# --- structure checks --------------------------------------------------------

def test_dual_structure_bound_five():
    report = check_dual_structure(5)
    assert report.ok, report.violations[:3]


def test_misclassified_pieces_are_caught():
    def broken(t):
        p = dual_pieces(t)
        return {"prec": p["prec"] + p["mid"], "mid": TensorVector.zero(), "succ": p["succ"]}

    report = check_dual_adjointness(3, pieces=broken)
    assert not report.ok
    assert {"transpose-left", "transpose-mid"} <= report.laws()
    assert "pieces-sum" not in report.laws()


def test_cotri_detects_broken_pieces():
    def swapped(t):
        p = dual_pieces(t)
        return {"prec": p["succ"], "mid": p["mid"], "succ": p["prec"]}

    failures = set()
    for n in range(1, 4):
        for t in enumerate_trees(n):
            for name, lhs, rhs in cotri_identities(swapped):
                try:
                    if lhs(t) != rhs(t):
                        failures.add(name)
                except ValueError:
                    # a swapped piece puts | where a piece is applied again
                    failures.add(name)
    assert failures


def _reduced_pieces(g):
    pg = dual_pieces(g)
    gv, unit = TreeVector.basis(g), TreeVector.basis(LEAF)
    return {"prec": pg["prec"] - TensorVector.tensor(gv, unit), "mid": pg["mid"],
            "succ": pg["succ"] - TensorVector.tensor(unit, gv)}


def test_swapped_middle_compatibility_fails():
    """Δ•(fg) = f'g'•⊗f''g''• + fg'•⊗g''• + g''•⊗fg'•, with the last factors swapped."""
    failures = []
    for f in enumerate_trees(1) + enumerate_trees(2):
        for g in enumerate_trees(2) + enumerate_trees(3):
            fv = TreeVector.basis(f)
            df = dual_coproduct(f)
            rf = df - TensorVector.tensor(TreeVector.basis(LEAF), fv) - TensorVector.tensor(fv, TreeVector.basis(LEAF))
            gm = _reduced_pieces(g)["mid"]
            rhs = TensorVector.zero()
            for (f1, f2), a in rf.items():
                for (g1, g2), b in gm.items():
                    rhs = rhs + a * b * TensorVector.tensor(dual_product(f1, g1), dual_product(f2, g2))
            for (g1, g2), b in gm.items():
                rhs = rhs + b * TensorVector.tensor(dual_product(f, g1), TreeVector.basis(g2))
                rhs = rhs + b * TensorVector.tensor(TreeVector.basis(g2), dual_product(f, g1))
            lhs = dual_product(f, g).apply(dual_coproduct_mid, TensorVector)
            if lhs != rhs:
                failures.append((f, g))
    assert failures


@pytest.mark.parametrize("bound", [3, 5])
def test_cotri_and_compatibilities(bound):
    assert check_cotri(bound).ok
    assert check_compatibilities(bound).ok


@settings(max_examples=25, deadline=None)
@given(nonunit_trees)
def test_pieces_partition_the_leaves(t):
    pieces = dual_pieces(t)
    total = sum((pieces[p] for p in PIECES), TensorVector.zero())
    assert total == dual_coproduct(t)
    assert sum(c for p in PIECES for _, c in pieces[p].items()) == leaf_count(t)
