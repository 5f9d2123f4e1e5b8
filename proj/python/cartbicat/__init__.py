"""Exhaustive checks for small cartesian bicategories."""

import json

from ._core import ArityError, ParseError, arity, cli, law_catalog, normalise, suite_models
from . import _core

__all__ = [
    "ArityError", "ParseError", "CliError", "arity", "cli", "law_catalog", "normalise",
    "suite_models", "run_laws", "evaluate", "order", "homsets", "reconstruct",
]


class CliError(RuntimeError):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _json(*args):
    code, out, err = _core.cli([*args, "--format", "json"])
    if code == 2:
        raise CliError(code, err.strip())
    return json.loads(out)


def _model_args(model):
    if model.startswith("span-s/"):
        return ["--model", "span-s", "--covers", model[len("span-s/"):]]
    return ["--model", model]


def run_laws(model, bound=2, seed=0, cases=()):
    return json.loads(_core.suite_json(model, bound, seed, list(cases)))


def evaluate(model, *terms, width=1):
    return _json("eval", *_model_args(model), "--width", str(width), *terms)


def order(model, lhs, rhs, width=1):
    return _json("order", *_model_args(model), "--width", str(width), lhs, rhs)


def homsets(model, bound=2):
    rows = _json("homsets", *_model_args(model), "--bound", str(bound))["homsets"]
    return {(r["dom"], r["cod"]): r["count"] for r in rows}


def reconstruct(model, construction="span-s", bound=2):
    return _json("reconstruct", *_model_args(model), "--construction", construction,
                 "--bound", str(bound))
