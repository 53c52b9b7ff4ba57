from satdkit.fusion.embed import EmbeddingMatrix, embed_tokens, fusion_tokens
from satdkit.fusion.ensemble import majority_vote
from satdkit.fusion.fuse import FusedRepresentation, code_att, str_concat
from satdkit.fusion.metrics import EvalReport, evaluate, evaluate_folds

__all__ = [
    "EmbeddingMatrix",
    "embed_tokens",
    "fusion_tokens",
    "str_concat",
    "code_att",
    "FusedRepresentation",
    "majority_vote",
    "EvalReport",
    "evaluate",
    "evaluate_folds",
]
