import os

import pytest

import mogp

DATA_DIR = os.environ.get("MOGP_DATA_DIR", "data")


def test_program_round_trip():
    p = mogp.Program.from_sexpr("(+ (* x0 x1) (% x2 x0))")
    assert p.to_sexpr() == "(+ (* x0 x1) (% x2 x0))"
    assert p.depth() == 2
    assert p.node_count() == 7
    assert p.evaluate([2.0, 3.0, 5.0]) == 2.0 * 3.0 + 5.0 / 2.0


def test_protected_division():
    p = mogp.Program.from_sexpr("(% x0 x1)")
    assert p.evaluate([5.0, 0.0]) == 1.0


def test_dataset_and_objectives():
    d = mogp.load_csv(os.path.join(DATA_DIR, "spect.csv"), "class", "abnormal")
    assert len(d) == 267
    assert d.feature_count == 22
    assert d.positive_count() == 55

    train, test = mogp.stratified_split(d, seed=7)
    assert len(train) + len(test) == len(d)

    p = mogp.Program.from_sexpr("(- x0 x1)")
    tpr, tnr = mogp.objectives(p, train)
    assert 0.0 <= tpr <= 1.0
    assert 0.0 <= tnr <= 1.0
    assert len(mogp.semantics(p, train)) == len(train)


def test_pareto_helpers():
    assert mogp.dominates([1.0, 1.0], [0.5, 1.0])
    assert not mogp.dominates([1.0, 0.0], [0.0, 1.0])
    fronts = mogp.fast_nondominated_sort([[1, 1], [0, 0], [1, 0]])
    assert fronts[0] == [0]
    assert mogp.dominance_rank([[1, 1], [0, 0], [1, 0]]) == [0, 2, 1]
    cd = mogp.crowding_distance([[0, 1], [0.5, 0.5], [1, 0]])
    assert cd[0] > 1e308 and cd[2] > 1e308


def test_semantic_distances_complement():
    pivot = [0.0, 0.0, 0.0, 0.0]
    v = [0.3, 0.05, 2.0, 0.5]
    sdo = mogp.sdo_distance(pivot, v, lbss=0.1, ubss=1.0)
    psdo = mogp.psdo_distance(pivot, v, lbss=0.1, ubss=1.0)
    assert sdo == 2
    assert sdo + psdo == len(v)
    assert mogp.sdo_distance(pivot, v, lbss=None, ubss=1.0) == 1


def test_hypervolume():
    assert mogp.hypervolume_trapezoid([(1.0, 1.0)]) == 1.0
    assert mogp.hypervolume_trapezoid([(0.5, 1.0), (1.0, 0.5)]) == pytest.approx(0.875)
    assert mogp.hypervolume_staircase([(0.5, 1.0), (1.0, 0.5)]) == pytest.approx(0.75)
    acc = mogp.accumulate_po_front([[(1.0, 0.0)], [(0.0, 1.0)]])
    assert acc == [(0.0, 1.0), (1.0, 0.0)]


def test_statistics():
    assert mogp.wilcoxon_rank_sum([1, 2, 3], [4, 5, 6]) == pytest.approx(0.1)
    assert mogp.bonferroni_threshold(0.05, 16) == 0.003125


def test_run_config(tmp_path):
    cfg = tmp_path / "cell.ini"
    cfg.write_text(
        "[experiment]\n"
        f"data_path = {os.path.join(DATA_DIR, 'spect.csv')}\n"
        "dataset = spect\n"
        "label_column = class\n"
        "positive_label = abnormal\n"
        "population = 10\n"
        "generations = 1\n"
        "runs = 2\n"
        f"output_dir = {tmp_path / 'out'}\n"
    )
    results = mogp.run_config(str(cfg), jobs=1)
    assert len(results) == 2
    for r in results:
        assert 0.0 <= r["final_hv"] <= 1.0
        assert len(r["programs"]) == len(r["front"])
        for s in r["programs"]:
            mogp.Program.from_sexpr(s)
