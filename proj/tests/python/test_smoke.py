"""End-to-end smoke tests for the Python bindings.

Requires SLICECHECK_TOY to point at the bundled toy data directory; the
ctest entry sets it, as does `SLICECHECK_TOY=data/toy pytest tests/python`.
"""

import math
import os

import pytest

import slicecheck as sc

TOY = os.environ["SLICECHECK_TOY"]


@pytest.fixture(scope="module")
def cold_submission():
    descriptor = sc.resolve_descriptor("cold")
    table = sc.load_dataset(descriptor, data_path=os.path.join(TOY, "cold_toy.csv"))
    predictions = sc.load_predictions(os.path.join(TOY, "cold_preds.csv"))
    return sc.submit(table, descriptor, predictions, {"LABEL_0": "N", "LABEL_1": "Y"})


@pytest.fixture(scope="module")
def hatecheck_submissions():
    descriptor = sc.resolve_descriptor("hatecheck")
    table = sc.load_dataset(descriptor, data_path=os.path.join(TOY, "hatecheck_toy.csv"))
    label_map = {"LABEL_0": "non-hateful", "LABEL_1": "hateful"}
    sub_a = sc.submit(table, descriptor, sc.load_predictions(os.path.join(TOY, "hc_preds_a.csv")),
                      label_map)
    sub_b = sc.submit(table, descriptor, sc.load_predictions(os.path.join(TOY, "hc_preds_b.csv")),
                      label_map)
    return sub_a, sub_b


def test_builtin_schemas_listed():
    names = sc.builtin_schemas()
    assert {"cold", "hatecheck", "olid"} <= set(names)


def test_descriptor_fields():
    descriptor = sc.resolve_descriptor("cold")
    assert descriptor.name == "cold"
    assert descriptor.text_column == "Text"
    assert descriptor.gold_column == "Off"
    assert sorted(descriptor.label_domain) == ["N", "Y"]
    assert "cold" in repr(descriptor)


def test_load_and_submit(cold_submission):
    assert len(cold_submission) == 60
    assert set(cold_submission.mapped) <= {"Y", "N"}
    assert len(cold_submission.gold) == len(cold_submission.mapped)


def test_table_access():
    table = sc.Table.load_file(os.path.join(TOY, "cold_toy.csv"))
    assert len(table) == 60
    assert "Text" in table.column_names()
    assert table.text_at(0, "Cat") != ""


def test_analyze_on_partitions_rows(cold_submission):
    result = sc.analyze_on(cold_submission, "Cat")
    assert result.dimension == "Cat"
    info = result.to_dict()
    assert sum(row["total"] for row in info["rows"]) == 60
    for row in info["rows"]:
        if row["accuracy"] is not None:
            assert math.isclose(row["accuracy"], row["total_correct"] / row["total"])
    assert info["overall"]["total"] == 60
    assert set(info["reports"][0]["report"]["classes"]) == {"Y", "N"}


def test_agreement_diagnostics(cold_submission):
    result = sc.check_anno_agreement(cold_submission, ["Off1", "Off2", "Off3"])
    info = result.to_dict()
    slices = [row["slice"] for row in info["rows"]]
    assert slices == ["full", "partial"]
    assert "rows_with_missing_annotator_labels" in info["diagnostics"]


def test_substring_and_length(cold_submission):
    contains = sc.check_substring(cold_submission, "the", ignore_case=True)
    slices = [row["slice"] for row in contains.to_dict()["rows"]]
    assert slices == ["contains", "not-contains"]

    lengths = sc.str_len_analysis(cold_submission, unit="words", bins=4)
    assert sum(row["total"] for row in lengths.to_dict()["rows"]) == 60


def test_examples_are_deterministic(cold_submission):
    first = sc.analyze_on(cold_submission, "Cat", show_examples=True, seed=7).to_dict()
    second = sc.analyze_on(cold_submission, "Cat", show_examples=True, seed=7).to_dict()
    assert first == second
    examples = [row["example"] for row in first["rows"] if row["example"] is not None]
    assert examples, "toy predictions contain errors, so some slice has an example"
    for example in examples:
        assert example["predicted"] != example["gold"]


def test_cold_categories(cold_submission):
    result = sc.cold_analyze(cold_submission)
    assert result.dimension == "Cat"  # toy data has an explicit Cat column


def test_hatecheck_categories(hatecheck_submissions):
    sub_a, _ = hatecheck_submissions
    result = sc.hatecheck_analyze(sub_a)
    slices = [row["slice"] for row in result.to_dict()["rows"]]
    assert len(slices) == 11
    assert slices == sorted(slices)
    assert "slurs" in slices


def test_compare_models(hatecheck_submissions):
    sub_a, sub_b = hatecheck_submissions
    comparison = sc.compare_models(sub_a, sub_b, "target_ident", name_a="alpha", name_b="beta")
    info = comparison.to_dict()
    assert info["name_a"] == "alpha"
    assert info["rows"]
    for row in info["rows"]:
        if row["delta"] is not None:
            assert math.isclose(row["delta"], row["accuracy_a"] - row["accuracy_b"])
    csv_text = sc.comparison_csv(comparison)
    assert csv_text.startswith("slice,total,correct_a,correct_b,accuracy_a,accuracy_b,delta")
    assert sc.grouped_bars_svg(comparison).startswith("<?xml")


def test_classification_report_dict():
    report = sc.classification_report(["a", "a", "b"], ["a", "b", "b"])
    assert math.isclose(report["accuracy"], 2.0 / 3.0)
    assert report["classes"]["a"]["support"] == 2


def test_svg_and_csv_renderers(cold_submission):
    result = sc.analyze_on(cold_submission, "Cat")
    svg = sc.bar_chart_svg(result)
    assert svg.startswith("<?xml")
    assert svg.count('class="bar"') == len(result.to_dict()["rows"])
    assert sc.plot_info_csv(result).startswith(
        "slice,total,total_correct,accuracy,example_text,example_pred,example_gold")
    assert "macro avg" in sc.reports_csv(result)

    lengths = sc.str_len_analysis(cold_submission, unit="characters", bins=3)
    assert sc.length_histogram_svg(lengths).startswith("<?xml")


def test_preprocess_text():
    assert sc.preprocess_text("@someone CHECK www.example.org") == "USER check HTML"


def test_dialect_scoring():
    model = sc.load_dialect_model(os.path.join(TOY, "dialect_toy.tsv"))
    assert model.topics == ["aave", "sae"]
    proportions, uninformative = sc.score_message(model, "finna bruh")
    assert not uninformative
    assert math.isclose(sum(proportions), 1.0)
    assert proportions[0] > 0.5

    priors, uninformative = sc.score_message(model, "zzz qqq")
    assert uninformative
    assert priors == model.priors


def test_aave_analysis_slices(cold_submission):
    model = sc.load_dialect_model(os.path.join(TOY, "dialect_toy.tsv"))
    result = sc.aave_analysis(cold_submission, model, threshold=0.5)
    assert sum(row["total"] for row in result.to_dict()["rows"]) == 60


def test_errors_surface_as_slicecheck_error(cold_submission):
    with pytest.raises(sc.SliceCheckError, match="nope"):
        sc.analyze_on(cold_submission, "nope")
    with pytest.raises(sc.SliceCheckError):
        sc.str_len_analysis(cold_submission, unit="words", bins=0)
    with pytest.raises(sc.SliceCheckError):
        sc.load_predictions(os.path.join(TOY, "does_not_exist.csv"))
