"""Smoke tests for the Python bindings."""

import pytest

import pathmorph as pm


def test_parse_serialize_roundtrip():
    p = pm.parse("(0,1,2,1,0)")
    assert pm.serialize(p) == "(0,1,2,1,0)"
    assert p.positions == [0, 1, 2, 1, 0]
    assert p.half_length == 2
    assert p.steps() == [1, 1, -1, -1]
    assert pm.path_from_steps([1, 1, -1, -1]) == p


def test_validation_errors():
    with pytest.raises(pm.PathError, match="NonZeroStart"):
        pm.validate([1, 2, 1])
    with pytest.raises(pm.PathError, match="BadStep"):
        pm.parse("(0,2,1,0,1)")
    with pytest.raises(pm.PathError, match="SyntaxError"):
        pm.parse("zebra")


def test_membership_and_counts():
    assert pm.is_member(pm.parse("(0,1,2,3,4,5,6)"), pm.SetId.Bprime)
    assert pm.zero_touch_count(pm.parse("(0,1,0,1,0,1,0)")) == 2
    assert pm.count_formula(4, pm.SetId.C) == 5
    assert pm.count_formula(3, pm.SetId.Aprime) == 10
    # arbitrary precision survives the binding layer: C(80,40) from C(78,39)
    assert pm.count_formula(40, pm.SetId.A) == pm.count_formula(39, pm.SetId.A) * 80 * 79 // (40 * 40)
    assert len(pm.enumerate_members(3, pm.SetId.Aprime)) == 10


def test_golden_rows():
    assert pm.phi1(pm.parse("(0,1,2,3,2,1,0)")) == pm.parse("(0,1,2,3,4,5,6)")
    assert pm.psi1(pm.parse("(0,1,2,3,4,5,6)")) == pm.parse("(0,1,2,3,2,1,0)")
    assert pm.phi2(pm.parse("(0,1,2,3,4,3,2,1,0)")) == pm.parse("(0,1,2,3,2,1,0,1,0)")
    assert pm.psi2(pm.parse("(0,1,2,3,2,1,0,1,0)")) == pm.parse("(0,1,2,3,4,3,2,1,0)")
    assert pm.apply_bijection("phi1full", pm.parse("(0,-1,-2,-3,-2,-1,0)")) == pm.parse(
        "(0,-1,-2,-3,-4,-5,-6)"
    )


def test_decompositions_and_stop_times():
    vd = pm.decompose_valleys(pm.parse("(0,1,2,1,0,1,0)"))
    assert (vd.M, vd.a, vd.b) == (2, [1, 2], [0, 1])
    ad = pm.decompose_ascents(pm.parse("(0,1,2,3,4,5,6)"))
    assert (ad.h, ad.d) == (3, [0, 1, 2, 3])
    st = pm.stop_times(pm.parse("(0,1,2,3,4,3,2,1,0)"))
    assert st.tau == 7 and st.nu is None


def test_domain_errors():
    with pytest.raises(pm.PathError, match="NTooSmall"):
        pm.phi2(pm.parse("(0,1,0)"))
    with pytest.raises(pm.PathError, match="NotInDomain"):
        pm.phi1(pm.parse("(0,-1,0)"))


def test_verify_reports():
    report = pm.check_bijection(3, "phi1")
    assert report["passed"] is True
    assert report["domain_size"] == 10
    assert report["image_size"] == 10
    assert pm.check_counts(3)["passed"] is True
    assert pm.check_catalan_identity(30)["passed"] is True
    assert pm.check_theorem_invariants(4)["passed"] is True


def test_sampler():
    s = pm.Sampler(4, pm.SetId.C, 42)
    first = [s.next() for _ in range(20)]
    t = pm.Sampler(4, pm.SetId.C, 42)
    assert [t.next() for _ in range(20)] == first
    assert all(pm.is_member(p, pm.SetId.C) for p in first)
    assert s.family_size == 5
    with pytest.raises(pm.PathError, match="EmptyFamily"):
        pm.Sampler(1, pm.SetId.D, 0)


def test_render():
    svg = pm.render_gallery(3, "phi1")
    assert svg.count('<g class="panel"') == 10
    assert svg == pm.render_gallery(3, "phi1")
    spec = pm.RenderSpec()
    spec.image_color = "#d62728"
    pair = pm.render_pair(pm.parse("(0,1,0)"), pm.parse("(0,1,2)"), spec)
    assert "#d62728" in pair
    with pytest.raises(pm.PathError, match="LengthMismatch"):
        pm.render_pair(pm.parse("(0,1,0)"), pm.parse("(0,1,2,1,0)"))
