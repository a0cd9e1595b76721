import pytest

from pfrep.core import (SIG_AR, SIG_DR, FiniteAlgebra, Signature, atoms, canonical_symbol,
                        domain_elements, induced_order, is_zero_like, necessary_laws,
                        validate_algebra)
from pfrep.decide import GROUPS, counterexample_F, group_algebra
from pfrep.errors import MalformedInputError, NotRepresentableError


def z2():
    return group_algebra(*GROUPS["Z2"]())[0]


def one_element(sig=SIG_DR):
    tables = {s: (0 if s in ("zero", "ident") else [0] if s not in ("compose", "meet", "prefunion")
                  else [[0]]) for s in sig}
    return FiniteAlgebra(["0"], sig, tables)


def two_chain(dom):
    """0 < 1 with every composition 0 except 1∘1 = 1 and the given domain map."""
    return FiniteAlgebra(["0", "1"], SIG_DR, {
        "compose": [[0, 0], [0, 1]], "meet": [[0, 0], [0, 1]], "dom": dom, "ran": [0, 1]})


class TestSignature:
    def test_baseline_required(self):
        with pytest.raises(MalformedInputError):
            Signature(["compose", "meet", "dom"])

    def test_dom_may_come_from_antidom(self):
        assert "antidom" in SIG_AR and "dom" not in SIG_AR

    def test_unipoint_needs_flag(self):
        with pytest.raises(MalformedInputError):
            Signature(["compose", "meet", "dom", "ran", "unipoint"])
        sig = Signature(["compose", "meet", "dom", "ran", "U"], enable_unipoint=True)
        assert "unipoint" in sig and not sig.is_construction_signature

    def test_aliases_and_order(self):
        assert canonical_symbol("∘") == "compose"
        assert Signature(["R", "D", "∧", ";"]).symbols == ("compose", "meet", "dom", "ran")

    def test_unknown_symbol(self):
        with pytest.raises(MalformedInputError):
            canonical_symbol("join")


class TestTables:
    def test_out_of_range_entry_is_positioned(self):
        with pytest.raises(MalformedInputError) as exc:
            FiniteAlgebra(["a", "b"], SIG_DR, {
                "compose": [[0, 0], [0, 2]], "meet": [[0, 0], [0, 1]],
                "dom": [0, 1], "ran": [0, 1]})
        assert exc.value.position == "tables.compose[1][1]"

    def test_missing_table(self):
        with pytest.raises(MalformedInputError):
            FiniteAlgebra(["a"], SIG_DR, {"compose": [[0]], "meet": [[0]], "dom": [0]})

    def test_dom_derived_from_antidom(self):
        A = z2()
        assert A.dom_table == (0, 1, 1)


class TestValidate:
    def test_one_element_passes(self):
        assert validate_algebra(one_element()).passed

    def test_non_idempotent_meet_fails_with_witness(self):
        A = FiniteAlgebra(["0", "e"], SIG_DR, {
            "compose": [[0, 0], [0, 1]], "meet": [[0, 0], [0, 0]], "dom": [0, 1], "ran": [0, 1]})
        report = validate_algebra(A)
        assert not report.passed
        assert report["meet-idempotent"].witness == (1,)

    def test_group_algebra_passes(self):
        assert validate_algebra(z2()).passed


def test_order_of_z2():
    order = induced_order(z2())
    assert order.is_partial_order()
    assert order.le(0, 1) and order.le(0, 2)
    assert not order.le(1, 2) and not order.le(2, 1)


def test_order_of_F():
    A, _ = counterexample_F()
    order = induced_order(A)
    assert all(order.le(0, a) for a in A.elements)
    for a in range(1, 5):
        for b in range(1, 5):
            assert order.le(a, b) == (a == b)


class TestDomainElements:
    def test_F(self):
        A, _ = counterexample_F()
        assert [A.name(a) for a in domain_elements(A)] == ["0", "d", "r"]

    def test_z2(self):
        A = z2()
        assert [A.name(a) for a in domain_elements(A)] == ["0", "e"]

    def test_all_identity_like(self):
        A = two_chain([0, 1])
        assert domain_elements(A) == (0, 1)

    def test_not_meet_closed_raises(self):
        A = FiniteAlgebra(["0", "a", "b"], SIG_DR, {
            "compose": [[0] * 3] * 3, "meet": [[0, 0, 0], [0, 1, 0], [0, 0, 2]],
            "dom": [1, 1, 2], "ran": [0, 1, 2]})
        with pytest.raises(NotRepresentableError):
            domain_elements(A)


class TestAtoms:
    def test_z2(self):
        assert atoms(z2()).elements == (1, 2)

    def test_z3(self):
        A = group_algebra(*GROUPS["Z3"]())[0]
        assert [A.name(a) for a in atoms(A).elements] == ["e", "a", "a2"]

    def test_F(self):
        A, _ = counterexample_F()
        assert [A.name(a) for a in atoms(A).elements] == ["d", "r", "f", "g"]

    def test_one_element(self):
        at = atoms(one_element())
        assert at.elements == () and not at.no_zero

    def test_least_element_without_zero_constant(self):
        A = FiniteAlgebra(["a", "b"], SIG_DR, {
            "compose": [[0, 0], [1, 1]], "meet": [[0, 0], [0, 1]], "dom": [0, 1],
            "ran": [0, 1]})
        at = atoms(A)
        assert at.least == 0 and at.elements == (1,) and not at.no_zero


def test_zero_like():
    A = z2()
    assert is_zero_like(A, 0) and not is_zero_like(A, 1)


class TestNecessaryLaws:
    def test_F_passes_the_domain_laws(self):
        A, _ = counterexample_F()
        report = necessary_laws(A)
        assert all(report[name].passed for name in ("L1", "L2", "L3"))

    def test_z2_passes_all(self):
        report = necessary_laws(z2())
        assert report.passed
        assert {"L1", "L2", "L3", "L4", "L5"} <= set(report.names())

    def test_L1_violation(self):
        # 0 ≤ 1 but D(0) = D(1) = 1
        report = necessary_laws(two_chain([1, 1]))
        assert not report["L1"].passed
        assert report["L1"].witness == (1, 0)

    def test_L3_violation(self):
        # a < e = D(a)
        A = FiniteAlgebra(["0", "a", "e"], SIG_DR, {
            "compose": [[0, 0, 0], [0, 1, 1], [0, 1, 2]],
            "meet": [[0, 0, 0], [0, 1, 1], [0, 1, 2]],
            "dom": [0, 2, 2], "ran": [0, 2, 2]})
        report = necessary_laws(A)
        assert not report["L3"].passed
