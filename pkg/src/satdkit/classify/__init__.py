from satdkit.classify.cleaning import clean_comment, mat_baseline, tokenize
from satdkit.classify.model import ClassifierConfig, ClassifierModel
from satdkit.classify.predict import Prediction, entropy, overlap_report, predict
from satdkit.classify.train import train_binary, train_type_classifiers

__all__ = [
    "clean_comment",
    "mat_baseline",
    "tokenize",
    "ClassifierConfig",
    "ClassifierModel",
    "train_binary",
    "train_type_classifiers",
    "Prediction",
    "predict",
    "entropy",
    "overlap_report",
]
