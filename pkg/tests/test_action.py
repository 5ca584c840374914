from fractions import Fraction

import pytest

from koszulkit.action import (
    ActionProvider, Bialgebra, LieAction, SmashAlgebra,
    action_bundle_from_json, action_bundle_to_json, dual_action, smash,
    takiff, takiff_graded_dims, validate_action_multiplicative,
    validate_bialgebra, validate_jacobi, validate_left_modules, validate_lie,
    validate_module_algebra,
)
from koszulkit.exactlin import F0, F1, Mat, Subspace, kron
from koszulkit.fixtures import (
    c2_group_algebra, c2_modules, c2_sign_provider, dual_numbers_presentation,
    ext_presentation, sl2_lie_action, sl2_provider, sweedler_bialgebra,
    sweedler_modules, sweedler_provider, sym_presentation,
    trivial_bialgebra,
)
from koszulkit.quadratic import (
    grow, presentation_from_relation_rows, quadratic_dual, reversal_perm,
)


def test_validate_bialgebras():
    assert validate_bialgebra(trivial_bialgebra()) == (True, None)
    assert validate_bialgebra(c2_group_algebra()) == (True, None)
    assert validate_bialgebra(sweedler_bialgebra()) == (True, None)


def test_validate_bialgebra_failure():
    b = c2_group_algebra()
    bad = Bialgebra(2, b.mult, b.unit, b.comult, Mat(1, 2, [[1, 0]]),
                    b.names)
    ok, axiom = validate_bialgebra(bad)
    assert not ok and axiom == "counit law"


def test_cocommutativity():
    assert c2_group_algebra().is_cocommutative()
    assert not sweedler_bialgebra().is_cocommutative()


def test_validate_lie_sl2():
    assert validate_lie(sl2_lie_action()) == (True, None)


def test_validate_lie_failure():
    lie = sl2_lie_action()
    bad = LieAction(lie.names, {(0, 2): [0, 1, 0], (2, 0): [0, -1, 0],
                                (1, 0): [2, 0, 0], (0, 1): [-2, 0, 0],
                                (1, 2): [0, 0, 2], (2, 1): [0, 0, -2]},
                    lie.rho)
    ok, _ = validate_lie(bad)
    assert not ok


def test_act_on_tensor_basics():
    p = c2_sign_provider()
    # unit acts as the identity; counit in power zero
    assert p.act_on_tensor([F1, F0], 3) == Mat.identity(1)
    assert p.act_on_tensor([F0, F1], 0) == Mat.identity(1)
    # group-like g acts by (-1)^r
    for r in range(4):
        want = Mat.identity(1).scale(Fraction((-1) ** r))
        assert p.act_on_tensor([F0, F1], r) == want


def test_act_on_tensor_lie_leibniz():
    p = sl2_provider()
    e = [F1, F0, F0]
    t1 = p.act_on_tensor(e, 1)
    t2 = p.act_on_tensor(e, 2)
    assert t2 == kron(t1, Mat.identity(3)) + kron(Mat.identity(3), t1)


def test_action_multiplicative():
    for provider in (c2_sign_provider(), sweedler_provider(), sl2_provider()):
        for r in (1, 2, 3):
            assert validate_action_multiplicative(provider, r) == (True, None)
    for provider in (dual_action(c2_sign_provider()),
                     dual_action(sweedler_provider()),
                     dual_action(sl2_provider())):
        for r in (1, 2):
            assert validate_action_multiplicative(provider, r) == (True, None)


def test_module_algebra_validation():
    assert validate_module_algebra(
        c2_sign_provider(), sym_presentation(1)) == (True, None)
    assert validate_module_algebra(
        sl2_provider(), sym_presentation(3)) == (True, None)
    assert validate_module_algebra(
        sweedler_provider(), dual_numbers_presentation()) == (True, None)
    # swap action on two generators stabilizes the commutator relation ...
    swap = ActionProvider.from_bialgebra(
        c2_group_algebra(),
        [Mat.identity(2), Mat(2, 2, [[0, 1], [1, 0]])])
    assert validate_module_algebra(swap, sym_presentation(2)) == (True, None)
    # ... but not the relation spanned by the single word x1 (x) x2
    lopsided = presentation_from_relation_rows(
        ["x1", "x2"], [[F0, F1, F0, F0]])
    ok, _ = validate_module_algebra(swap, lopsided)
    assert not ok


def test_dual_action_matrices():
    p = sl2_provider()
    d = dual_action(p)
    lie = p.base
    for a in range(3):
        assert d.mats[a] == lie.rho[a].scale(-1).transpose()
    dd = dual_action(d)
    assert dd.mats == p.mats and dd.side == "right" and not dd.cop


def test_dual_action_pairing_compatibility():
    # the dual tensor action is the transport of the original action
    # through the order-reversing pairing
    from koszulkit.exactlin import perm_matrix
    for provider in (c2_sign_provider(), sweedler_provider()):
        dprov = dual_action(provider)
        n = provider.space_dim
        d = provider.base.dim
        for r in (1, 2, 3):
            rev = perm_matrix(reversal_perm(n, r))
            for b in range(d):
                T = provider.act_basis_on_tensor(b, r)
                Tdual = dprov.act_basis_on_tensor(b, r)
                assert Tdual == rev @ T.transpose() @ rev


def test_dual_action_preserves_dual_relations():
    for provider, pres in ((c2_sign_provider(), sym_presentation(1)),
                           (sl2_provider(), sym_presentation(3)),
                           (sweedler_provider(), dual_numbers_presentation())):
        dprov = dual_action(provider)
        dual_pres = quadratic_dual(pres)
        assert validate_module_algebra(dprov, dual_pres) == (True, None)


def test_smash_c2_sign_products():
    alg = grow(sym_presentation(1), 4)
    s = smash(c2_sign_provider(), alg, "right")
    assert s.comp_dim(0) == 2 and s.comp_dim(3) == 2
    # (g (x) 1)(1 (x) t) = g (x) t  while  (1 (x) t)(g (x) 1) = -g (x) t
    # component 0 basis: 1, g ; component 1 basis: 1 (x) t, g (x) t
    g = [F0, F1]
    t = [F1, F0]  # 1 (x) t
    gt = [F0, F1]
    pair = [x * y for x in g for y in t]
    assert s.mult(0, 1).apply(pair) == gt
    pair = [x * y for x in t for y in g]
    assert s.mult(1, 0).apply(pair) == [F0, -F1]


def test_smash_degenerate_cases():
    # H truncated at zero: the smash is the acting algebra itself
    alg0 = grow(sym_presentation(1), 0)
    s = smash(c2_sign_provider(), alg0, "right")
    b = c2_group_algebra()
    assert s.mult(0, 0) == b.mult
    # trivial acting algebra: the smash is H itself
    alg = grow(sym_presentation(2), 3)
    triv = ActionProvider.from_bialgebra(trivial_bialgebra(),
                                         [Mat.identity(2)])
    s2 = smash(triv, alg, "right")
    for i in range(3):
        for j in range(3 - i):
            assert s2.mult(i, j) == alg.mult(i, j)


def test_smash_left_side_on_dual():
    # the dual smash: dual algebra as a left module algebra over the
    # co-opposite of the acting bialgebra
    for provider, pres in ((c2_sign_provider(), sym_presentation(1)),
                           (sweedler_provider(), dual_numbers_presentation())):
        dual_alg = grow(quadratic_dual(pres), 4)
        s = smash(dual_action(provider), dual_alg, "left")
        assert s.validate_associativity() == (True, None)


def test_smash_lie_virtual():
    alg = grow(sym_presentation(3), 3)
    s = smash(sl2_provider(), alg, "right")
    assert s.validate_associativity() == (True, None)
    dual_alg = grow(quadratic_dual(sym_presentation(3)), 3)
    s2 = smash(dual_action(sl2_provider()), dual_alg, "left")
    assert s2.validate_associativity() == (True, None)


def test_smash_rejects_bad_action():
    bad = ActionProvider.from_bialgebra(
        c2_group_algebra(), [Mat.identity(2), Mat(2, 2, [[0, 1], [1, 0]])])
    lopsided = presentation_from_relation_rows(["x1", "x2"],
                                               [[F0, F1, F0, F0]])
    alg = grow(lopsided, 3)
    with pytest.raises(ValueError):
        smash(bad, alg, "right")


def test_takiff_even_and_super():
    lie = sl2_lie_action()
    t_even = takiff(lie, "even")
    assert t_even.dim == 6
    assert validate_jacobi(t_even) == (True, None)
    t_super = takiff(lie, "super")
    assert validate_jacobi(t_super) == (True, None)
    assert t_super.parities == [0, 0, 0, 1, 1, 1]
    # mixed bracket: [e, v_h] = ad(e) v_h = -2 v_e
    vec = t_even.bracket_basis(0, 4)
    assert vec == [F0] * 3 + [Fraction(-2), F0, F0]


def test_takiff_degenerate():
    lie = LieAction(["z"], {}, [Mat.zeros(0, 0)])
    t = takiff(lie, "even")
    assert t.dim == 1


def test_takiff_graded_dims():
    lie = sl2_lie_action()
    pbw, grown = takiff_graded_dims(takiff(lie, "super"), 3)
    assert pbw == grown == [1, 3, 3, 1]
    pbw, grown = takiff_graded_dims(takiff(lie, "even"), 3)
    assert pbw == grown == [1, 3, 6, 10]


def test_action_json_roundtrip():
    for provider, modules in ((c2_sign_provider(), c2_modules()),
                              (sweedler_provider(), sweedler_modules()),
                              (sl2_provider(), sl2_lie_action().modules)):
        obj = action_bundle_to_json(provider, modules)
        back, mods = action_bundle_from_json(obj)
        assert back.kind == provider.kind
        assert back.mats == provider.mats
        assert sorted(mods) == sorted(modules)
        for name in modules:
            assert mods[name] == modules[name]
        assert validate_left_modules(back, mods) == (True, None)


def test_action_json_errors():
    with pytest.raises(ValueError):
        action_bundle_from_json({})
    obj = action_bundle_to_json(c2_sign_provider(), {})
    obj["action"] = obj["action"][:1]
    with pytest.raises(ValueError):
        action_bundle_from_json(obj)


def test_validate_left_modules_failure():
    mods = c2_modules()
    mods["bad"] = [Mat.identity(1), Mat(1, 1, [[2]])]
    ok, where = validate_left_modules(c2_sign_provider(), mods)
    assert not ok and where[0] == "bad"
