"""End-to-end smoke tests for the Python bindings."""

import json

import pytest

import fibercone

CM_JOB = """\
field: Q
vars: x, y
I: x^7 + x^4*y^2 + y^12, x^5*y + x^2*y^6, x^7, x^2*y^6, y^12
Q: indices 1, 2
mode: explicit
"""

VERONESE_JOB = """\
field: Q
vars: x, y
I: x^2, x*y, y^2
Q: indices 1, 3
mode: explicit
"""


def test_analyze_reports_the_ladder():
    report = fibercone.run("analyze", CM_JOB)
    assert report["schema"] == 1
    assert report["command"] == "analyze"
    assert report["field"] == "Q"
    assert report["socle_bound"] == 13
    assert report["reduction_number"] == 2
    assert report["new_gen_counts"] == [3, 1, 0]
    assert report["rhs_colength"] == 5


def test_verify_closes_the_loop():
    report = fibercone.run("verify", VERONESE_JOB)
    assert report["lengths_equal"] is True
    assert report["candidate_equals_kernel"] is True
    assert report["is_cohen_macaulay"] is True
    assert report["theorem_consistent"] is True
    assert report["kernel_generators"] == ["X2^2 - X1*X3"]


def test_render_text_matches_the_machine_report():
    report = fibercone.run("analyze", VERONESE_JOB)
    text = fibercone.render_text(json.dumps(report))
    assert "reduction number r = 1" in text
    assert "socle bound s = 2" in text


def test_field_override():
    report = fibercone.run("verify", VERONESE_JOB, field="Fp 13")
    assert report["field"] == "Fp 13"
    assert report["theorem_consistent"] is True


def test_malformed_job_raises_input_error():
    with pytest.raises(fibercone.InputError):
        fibercone.run("analyze", "vars: x\n")
    with pytest.raises(ValueError):
        fibercone.run("analyze", "vars: x\n")


def test_power_cap_raises_resource_error():
    # x*y is not integral over (x^4, y^4), so the ladder can never terminate
    job = "field: Q\nvars: x, y\nI: x^4, x*y, y^4\nQ: indices 1, 3\nmode: explicit\n"
    with pytest.raises(fibercone.ResourceError):
        fibercone.run("analyze", job, power_cap=5)
