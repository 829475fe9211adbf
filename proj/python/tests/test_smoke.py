from pathlib import Path

import pytest

import dsmooth

DATA = Path(__file__).resolve().parents[2] / "data"


def text(name):
    return dsmooth.load(DATA / name)


def test_smooth_case_i():
    rep = dsmooth.smooth(text("theorem1_case_i.alg"), gkdim=3)
    assert rep["verdict"] == "SMOOTH_SUFFICIENT"
    assert rep["witness"][2]["images"] == {"x1": "1/3*x1", "x2": "2*x2", "x3": "3*x3"}


@pytest.mark.parametrize(
    "name, verdict",
    [
        ("class1.alg", "SMOOTH_SUFFICIENT"),
        ("class2a.alg", "NOT_SMOOTH"),
        ("class5a.alg", "NOT_SMOOTH"),
        ("class5e.alg", "SMOOTH_SUFFICIENT"),
        ("theorem1_gamma5.alg", "INCONCLUSIVE"),
    ],
)
def test_verdicts(name, verdict):
    assert dsmooth.smooth(text(name))["verdict"] == verdict


def test_classify3d():
    assert dsmooth.classify3d(text("class5a.alg"))["label"] == "5a"


def test_calculus():
    rep = dsmooth.calculus(text("theorem1_case_i.alg"), max_degree=3, integrability=3)
    assert rep["d_squared"]["pass"]
    assert rep["kernel"]["connected"]
    assert rep["integral_forms"]["normalized"]
    assert rep["integrability"]["pass"]
    assert [w["coefficient"] for w in rep["wedge_relations"]] == ["-1/2", "-3", "-1/2"]


def test_diffusion_classify():
    rep = dsmooth.diffusion_classify(text("diffusion_class_d.alg"))
    assert rep["labels"] == [{"label": "D", "crosswalk": "1"}]


def test_pbw_check():
    assert dsmooth.pbw_check(text("theorem1_case_i.alg"))["pass"]
    rep = dsmooth.pbw_check(text("theorem1_gamma5.alg"))
    assert not rep["pass"]
    assert rep["triples"][0]["discrepancy"] == "21/10*x2"


def test_verify_identities_is_seeded():
    a = dsmooth.verify_identities(n_max=3, samples=4, seed=42)
    assert a == dsmooth.verify_identities(n_max=3, samples=4, seed=42)
    assert a["pass"]
    assert [r["status"] for r in a["left_commutation"]] == ["DISCREPANT", "DISCREPANT"]


def test_normalize_round_trip():
    canon = dsmooth.normalize("n: 2\nx1*x2 + 2*x2*x1 = x1 - 1/2  # comment\n")
    assert canon == "name: unnamed\nkind: skew\nfield: Q\nn: 2\nx1*x2 + 2*x2*x1 = x1 - 1/2\n"
    assert dsmooth.normalize(canon) == canon


def test_errors():
    with pytest.raises(dsmooth.AlgebraSyntaxError, match="2:11:"):
        dsmooth.smooth("n: 2\nx1*x2 - 1/0*x2*x1 = 0\n")
    with pytest.raises(dsmooth.DsmoothError):
        dsmooth.smooth("field: Fp:3\nn: 2\n")
    assert issubclass(dsmooth.AlgebraSyntaxError, dsmooth.DsmoothError)
    with pytest.raises(ValueError):
        dsmooth.classify3d("n: 2\n")


def test_run_cli():
    code, out, err = dsmooth.run_cli(["classify3d", str(DATA / "class5a.alg")])
    assert code == 0 and out.startswith("5a\n")
    assert dsmooth.run_cli(["smooth", "--bogus"])[0] == 2
