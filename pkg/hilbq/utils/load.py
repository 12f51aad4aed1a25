"""Loader for surface model files and preset names."""


from __future__ import annotations

from ..base.surface import ModelError, SurfaceModel, PRESETS, preset
from ..series.utils import to_fraction

from typing import Any, IO, List, Mapping, Optional
import json
import logging
import os


__all__ = ["from_dict", "load", "load_path", "resolve_models"]


def _rationals(v: Any, what: str) -> List[Any]:
    if not isinstance(v, list):
        raise ModelError(f"{what} must be a list.")
    try:
        return [to_fraction(c) for c in v]
    except (TypeError, ValueError) as e:
        raise ModelError(f"{what}: {e}") from None


def from_dict(data: Mapping[str, Any], name: str = "custom") -> SurfaceModel:
    """Build a model from the fields r, P, K and lineBundles."""

    if not isinstance(data, Mapping):
        raise ModelError("A model description must be a JSON object.")
    unknown = set(data) - {"r", "P", "K", "lineBundles", "name"}
    if unknown:
        raise ModelError(f"Unknown model fields {sorted(unknown)}.")
    if "P" not in data:
        raise ModelError("A model description needs the pairing matrix P.")
    P = data["P"]
    if not isinstance(P, list):
        raise ModelError("P must be a list of rows.")
    rows = [_rationals(row, "Pairing row") for row in P]
    r = data.get("r", len(rows))
    if r != len(rows):
        raise ModelError(f"Field r={r} does not match {len(rows)} rows in P.")
    K = _rationals(data["K"], "K") if "K" in data else None
    lines = data.get("lineBundles", {})
    if not isinstance(lines, Mapping):
        raise ModelError("lineBundles must map names to vectors.")
    return SurfaceModel.build(rows, K=K,
        line_bundles={k: _rationals(v, f"Line bundle {k}")
            for k, v in lines.items()},
        name=str(data.get("name", name)))


def load(f: IO, name: Optional[str] = None) -> SurfaceModel:
    """Read a JSON model description from an open stream."""

    try:
        data = json.load(f)
    except json.JSONDecodeError as e:
        raise ModelError(f"Model file is not valid JSON: {e}") from None
    model = from_dict(data, name or getattr(f, "name", "custom"))
    logging.debug(f"Loaded surface model {model.name} (r={model.r}).")
    return model


def load_path(path: str) -> SurfaceModel:
    try:
        with open(path, "r") as f:
            stem = os.path.splitext(os.path.basename(path))[0]
            return load(f, stem)
    except OSError as e:
        raise ModelError(f"Cannot read model file '{path}': {e}") from None


def resolve_models(spec: str) -> List[SurfaceModel]:
    """
    Resolve a comma-separated list of preset names and model file paths.

    A preset may carry a parameter, as in kpos:kk=2.
    """

    models = []
    for item in filter(None, (s.strip() for s in spec.split(","))):
        name, _, params = item.partition(":")
        if name in PRESETS:
            kwds = {}
            for p in filter(None, params.split(";")):
                k, _, v = p.partition("=")
                kwds[k] = to_fraction(v)
            models.append(preset(name, **kwds))
        else:
            models.append(load_path(item))
    if not models:
        raise ModelError("No models given.")
    return models
