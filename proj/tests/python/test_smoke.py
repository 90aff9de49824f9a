"""Smoke tests for the Python bindings."""

import sys

import affine_fock as af


def test_core_quotient_round_trip():
    assert af.core_quotient([1], 2) == ([1, -1], [[], []])
    for lam, l in [([3, 1, 1], 2), ([4, 2, 2, 1], 3), ([5], 5)]:
        c, q = af.core_quotient(lam, l)
        assert af.cq_inverse(c, q, l) == lam


def test_errors_map_to_exceptions():
    for bad in ([1, 2], [0]):
        try:
            af.core_quotient(bad, 2)
        except af.ConstraintError:
            pass
        else:
            raise AssertionError("expected ConstraintError")
    try:
        af.act("p_1(-3)", [1], 2, side="frenkel-kac", window=2)
    except af.CommandError as e:
        assert e.code == 4
    else:
        raise AssertionError("expected a window overflow")


def test_act():
    assert af.act("e_0", [1], 2) == [{"coeff": "-1", "label": []}]
    assert af.act("e_0", [1], 2, side="frenkel-kac") == [{"coeff": "-1", "label": []}]


def test_verify():
    report = af.verify("relations", l=3, degree=4)
    assert report["status"] == "ok"
    assert report["suites"][0]["suite"] == "relations"


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for t in tests:
        t()
        print(f"ok {t.__name__}")
    sys.exit(0)
