import json
import os
import pathlib

import pytest

import rdnkbp

SOURCE_DIR = pathlib.Path(
    os.environ.get("RDNKBP_SOURCE_DIR", pathlib.Path(__file__).resolve().parents[2]))


def test_canonical_forms():
    assert rdnkbp.canonical_fact("wordLemma(w5, father).") == "wordLemma(w5,father)"
    assert (rdnkbp.canonical_clause("p(A,B), \\+ q(A) -> age(A,B)")
            == "p(A,B), \\+q(A) -> age(A,B)")


def test_parse_errors_raise_data_error():
    with pytest.raises(rdnkbp.DataError):
        rdnkbp.canonical_fact("age(Obama, 54).")
    with pytest.raises(ValueError):
        rdnkbp.canonical_clause("p(A) -> age(A,B)")


def test_generate_and_featurize():
    docs, gold = rdnkbp.generate(10, [("age_comma", 1.0)], seed=3, prefix="py")
    assert len(docs) == 2
    assert all(g[0] == "per:age" for g in gold)
    assert len(gold) == 10
    first = json.loads(docs[0])
    assert first["doc_id"] == "py_d0"
    facts = rdnkbp.featurize(docs[0])
    assert any(f.startswith("entityType(") for f in facts)
    assert facts == rdnkbp.featurize(docs[0])
    pairs = rdnkbp.candidate_pairs(docs[0], ["per:age"])
    assert set(g for g in gold if g[1] == "py_d0") <= set(pairs)


def test_generate_is_deterministic():
    assert rdnkbp.generate(20, [("age_comma", 0.5)], seed=5) == rdnkbp.generate(
        20, [("age_comma", 0.5)], seed=5)
    assert "age_comma" in rdnkbp.template_names()


def test_corrupt_document():
    with pytest.raises(rdnkbp.DataError, match="broken"):
        rdnkbp.featurize('{"doc_id": "broken", "sentences": [{}]}')


def test_metrics():
    scores = [0.9, 0.8, 0.3, 0.1]
    labels = [True, False, True, False]
    assert rdnkbp.auc_roc(scores, labels) == pytest.approx(0.75)
    assert rdnkbp.f1(scores, labels, 0.5) == pytest.approx(0.5)
    assert rdnkbp.recall_at_precision(scores, labels, 0.66) == pytest.approx(1.0)
    with pytest.raises(ValueError):
        rdnkbp.auc_roc([0.1], [True, False])


def test_run_experiment(tmp_path):
    config = json.loads((SOURCE_DIR / "config" / "synthetic_experiment.json").read_text())
    config["registry"] = str(SOURCE_DIR / "config" / "relations_kbp.tsv")
    config["rules"] = str(SOURCE_DIR / "rules" / "kbp_table2.rules")
    config["advice"] = str(SOURCE_DIR / "advice" / "kbp_table3.rules")
    config["relations"] = ["per:age"]
    config["train"]["synthetic"]["n_sentences"] = 60
    config["test"]["synthetic"]["n_sentences"] = 40
    config["train_config"]["n_trees"] = 2
    config["n_runs"] = 2
    path = tmp_path / "config.json"
    path.write_text(json.dumps(config))
    assert rdnkbp.setting_name(str(path)) == "default"
    tsv, log = rdnkbp.run_experiment(str(path))
    lines = tsv.splitlines()
    assert lines[0] == "relation\tsetting\tmetric\tmean\tstd\tn"
    auc = [l.split("\t") for l in lines if "\tauc\t" in l]
    assert auc and auc[0][0] == "per:age" and auc[0][5] == "2"
    assert log[0].startswith("run 0 seed ")
    assert rdnkbp.run_experiment(str(path))[0] == tsv
