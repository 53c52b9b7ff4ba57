import json

import pytest

from satdkit.classify.model import ClassifierConfig, ClassifierModel
from satdkit.classify.train import train_binary, train_type_classifiers
from satdkit.labels import TD_TYPES, TDLabel
from satdkit.synth import split_train_holdout, synth_comment_corpus


def binary_f1(model, holdout, positive):
    tp = fp = fn = 0
    for text, label in holdout:
        pred = model.predict_proba(text) > 0.5
        gold = positive(label)
        tp += pred and gold
        fp += pred and not gold
        fn += (not pred) and gold
    return 2 * tp / (2 * tp + fp + fn) if (2 * tp + fp + fn) else 0.0


@pytest.fixture(scope="module")
def corpus():
    records = synth_comment_corpus(600, seed=13)
    return split_train_holdout(records, 0.8, seed=1)


def test_binary_detector_separates_keyword_corpus(corpus):
    train, holdout = corpus
    model = train_binary([(t, l is not TDLabel.NON_SATD) for t, l in train])
    f1 = binary_f1(model, holdout, lambda l: l is not TDLabel.NON_SATD)
    assert f1 >= 0.95


def test_binary_on_hundred_todo_comments():
    # minimal separable corpus: positives are exactly the todo-carrying ones
    import random

    from satdkit.synth import FILLER

    rng = random.Random(0)
    records = []
    for i in range(100):
        words = [rng.choice(FILLER) for _ in range(rng.randint(3, 6))]
        positive = i % 2 == 0
        if positive:
            words.insert(rng.randrange(len(words) + 1), "todo")
        records.append((" ".join(words), positive))
    train, holdout = records[:80], records[80:]
    model = train_binary(train)
    f1 = binary_f1(model, [(t, p) for t, p in holdout], lambda p: p)
    assert f1 >= 0.95


def test_type_heads_separate_keyword_corpus(corpus):
    train, holdout = corpus
    models = train_type_classifiers(train)
    for td in TD_TYPES:
        f1 = binary_f1(models[td], holdout, lambda l, td=td: l == td)
        assert f1 >= 0.90, td


def test_training_is_bit_deterministic(corpus):
    train, _ = corpus
    records = [(t, l is not TDLabel.NON_SATD) for t, l in train]
    a = train_binary(records, ClassifierConfig(seed=5))
    b = train_binary(records, ClassifierConfig(seed=5))
    assert json.dumps(a.to_json(), sort_keys=True) == json.dumps(b.to_json(), sort_keys=True)


def test_degenerate_training_set_errors():
    with pytest.raises(ValueError, match="degenerate"):
        train_binary([("todo x", True), ("todo y", True)])
    with pytest.raises(ValueError, match="degenerate"):
        train_binary([("a", False), ("b", False)])


def test_missing_type_error_names_the_type():
    records = [("workaround it", TDLabel.DESIGN), ("todo it", TDLabel.IMPLEMENTATION),
               ("bug here", TDLabel.DEFECT), ("docs please", TDLabel.DOCUMENTATION),
               ("fine", TDLabel.NON_SATD)]
    with pytest.raises(ValueError, match="missing type TEST"):
        train_type_classifiers(records)


def test_one_vs_rest_uses_other_types_as_negatives(corpus):
    train, _ = corpus
    models = train_type_classifiers(train)
    design_texts = [t for t, l in train if l is TDLabel.DESIGN]
    # DESIGN examples should look negative to the DEFECT head
    flagged = sum(1 for t in design_texts if models[TDLabel.DEFECT].predict_proba(t) > 0.5)
    assert flagged <= len(design_texts) * 0.1


def test_retraining_one_head_never_changes_another(corpus):
    train, _ = corpus
    models = train_type_classifiers(train)
    before = json.dumps(models[TDLabel.DESIGN].to_json(), sort_keys=True)
    # retrain the DEFECT head on a perturbed set
    perturbed = train + [("an extra broken crash bug comment", TDLabel.DEFECT)]
    _ = train_type_classifiers(perturbed)
    assert json.dumps(models[TDLabel.DESIGN].to_json(), sort_keys=True) == before


def test_serialization_round_trip_is_exact(tmp_path, corpus):
    train, holdout = corpus
    model = train_binary([(t, l is not TDLabel.NON_SATD) for t, l in train])
    path = tmp_path / "m.json"
    model.save(path)
    loaded = ClassifierModel.load(path)
    for text, _ in holdout[:50]:
        assert loaded.predict_proba(text) == model.predict_proba(text)
    # saving the loaded model reproduces the same bytes
    loaded.save(tmp_path / "m2.json")
    assert (tmp_path / "m.json").read_bytes() == (tmp_path / "m2.json").read_bytes()


def test_model_header_fields(tmp_path, corpus):
    train, _ = corpus
    model = train_binary([(t, l is not TDLabel.NON_SATD) for t, l in train], ClassifierConfig(seed=9))
    blob = model.to_json()
    assert blob["format_version"] == 1
    assert blob["seed"] == 9
    assert len(blob["dataset_hash"]) == 64
