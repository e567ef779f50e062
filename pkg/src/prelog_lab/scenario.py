"""Scenario files: declarative JSON descriptions of a fading model plus the
study parameters, validated against the schema shipped with the package.

Loading normalizes the description (complex numbers as [re, im] pairs, SNR
grids expanded to explicit lists, filter taps in their unit-power form), so a
load -> dump -> load round trip is the identity on every field.
"""

from __future__ import annotations

import functools
import json
import math
from dataclasses import dataclass, replace

import jsonschema
import numpy as np

from . import fading, spectra

ARTIFACTS = ("bound", "prelog", "szego", "mi", "spectrum-check")

DEFAULT_N_LIST = (128, 256, 512, 1024, 2048)
DEFAULT_PATH_LENGTH = 65536
DEFAULT_SEGMENT_LENGTH = 256


class ScenarioError(ValueError):
    """A scenario failed validation; the message carries a location."""


@dataclass(frozen=True)
class Scenario:
    name: str
    model: fading.FadingModel
    snr_grid: tuple
    gamma_mode: object  # "optimized" or a positive float
    outputs: tuple
    seed: int = 0
    tolerances: tuple = ()  # sorted (name, value) pairs
    snr: float | None = None
    n_list: tuple = DEFAULT_N_LIST
    mc_samples: int | None = None
    path_length: int = DEFAULT_PATH_LENGTH
    segment_length: int = DEFAULT_SEGMENT_LENGTH

    def tolerance(self, name, default):
        for key, value in self.tolerances:
            if key == name:
                return value
        return default

    def with_seed(self, seed):
        if seed < 0:
            raise ScenarioError("seed must be nonnegative")
        return replace(self, seed=int(seed))


@functools.lru_cache(maxsize=1)
def schema():
    from importlib import resources

    text = (resources.files("prelog_lab") / "schema" / "scenario.schema.json").read_text()
    return json.loads(text)


def _complex_from(value):
    return complex(float(value[0]), float(value[1]))


def _density_from_dict(data, where):
    kind = data["kind"]
    if kind == "constant":
        if "value" not in data:
            raise ScenarioError(f"{where}: constant density needs 'value'")
        return spectra.ConstantDensity(float(data["value"]))
    if "coeffs" not in data:
        raise ScenarioError(f"{where}: {kind} density needs 'coeffs'")
    coeffs = data["coeffs"]
    if kind == "polynomial":
        if any(isinstance(c, list) for c in coeffs):
            raise ScenarioError(f"{where}: polynomial coefficients must be real")
        return spectra.PolynomialDensity(tuple(float(c) for c in coeffs))
    if len(coeffs) % 2 == 0:
        raise ScenarioError(f"{where}: trig coefficients must have odd length (m = -K..K)")
    parsed = tuple(_complex_from(c) if isinstance(c, list) else complex(float(c))
                   for c in coeffs)
    return spectra.TrigPolyDensity(parsed)


def _spectrum_from_dict(data):
    pieces = []
    for i, p in enumerate(data.get("pieces", [])):
        dens = _density_from_dict(p["density"], f"$.model.spectrum.pieces[{i}].density")
        pieces.append(spectra.Piece(float(p["lo"]), float(p["hi"]), dens))
    masses = tuple((float(loc), float(w)) for loc, w in data.get("point_masses", []))
    return spectra.SpectralDistribution(pieces=tuple(pieces), point_masses=masses)


def _density_to_dict(dens):
    if isinstance(dens, spectra.ConstantDensity):
        return {"kind": "constant", "value": dens.value}
    if isinstance(dens, spectra.PolynomialDensity):
        return {"kind": "polynomial", "coeffs": list(dens.coeffs)}
    return {"kind": "trig", "coeffs": [[c.real, c.imag] for c in dens.coeffs]}


def _spectrum_to_dict(spectrum):
    out = {}
    if spectrum.pieces:
        out["pieces"] = [{"lo": p.lo, "hi": p.hi, "density": _density_to_dict(p.density)}
                         for p in spectrum.pieces]
    if spectrum.point_masses:
        out["point_masses"] = [[loc, w] for loc, w in spectrum.point_masses]
    return out


def _model_from_dict(data):
    mean = _complex_from(data.get("mean", [0.0, 0.0]))
    try:
        if data["kind"] == "gaussian":
            return fading.gaussian_model(_spectrum_from_dict(data["spectrum"]), mean)
        taps = [_complex_from(t) for t in data["taps"]]
        return fading.fir_model(taps, data.get("innovation", fading.COMPLEX_GAUSSIAN), mean)
    except ScenarioError:
        raise
    except ValueError as exc:
        raise ScenarioError(f"$.model: {exc}") from None


def _model_to_dict(model):
    out = {"kind": model.kind, "mean": [model.mean.real, model.mean.imag]}
    if model.kind == fading.GAUSSIAN:
        out["spectrum"] = _spectrum_to_dict(model.spectrum)
    else:
        out["taps"] = [[t.real, t.imag] for t in model.taps]
        out["innovation"] = model.innovation
    return out


def _grid_from(data):
    if isinstance(data, dict):
        if data["points"] > 1 and data["stop"] <= data["start"]:
            raise ScenarioError("$.snr_grid: stop must exceed start")
        grid = np.logspace(math.log10(data["start"]), math.log10(data["stop"]),
                           data["points"])
    else:
        grid = np.asarray(data, dtype=float)
    if np.any(np.diff(grid) <= 0):
        raise ScenarioError("$.snr_grid: must be strictly increasing")
    return tuple(float(s) for s in grid)


def scenario_from_dict(data):
    try:
        jsonschema.validate(data, schema(),
                            format_checker=jsonschema.FormatChecker())
    except jsonschema.ValidationError as exc:
        loc = "$" + "".join(f"[{p!r}]" if isinstance(p, str) else f"[{p}]"
                            for p in exc.absolute_path)
        raise ScenarioError(f"{loc}: {exc.message}") from None
    tolerances = tuple(sorted((k, float(v))
                              for k, v in data.get("tolerances", {}).items()))
    return Scenario(
        name=data["name"],
        model=_model_from_dict(data["model"]),
        snr_grid=_grid_from(data["snr_grid"]),
        gamma_mode=(data.get("gamma_mode", "optimized") if data.get("gamma_mode", "optimized") == "optimized"
                    else float(data["gamma_mode"])),
        outputs=tuple(data["outputs"]),
        seed=int(data.get("seed", 0)),
        tolerances=tolerances,
        snr=float(data["snr"]) if "snr" in data else None,
        n_list=tuple(int(n) for n in data.get("n_list", DEFAULT_N_LIST)),
        mc_samples=int(data["mc_samples"]) if "mc_samples" in data else None,
        path_length=int(data.get("path_length", DEFAULT_PATH_LENGTH)),
        segment_length=int(data.get("segment_length", DEFAULT_SEGMENT_LENGTH)),
    )


def scenario_to_dict(scen):
    """Canonical JSON form; load(dump(s)) reproduces s field-by-field."""
    out = {
        "name": scen.name,
        "model": _model_to_dict(scen.model),
        "snr_grid": list(scen.snr_grid),
        "gamma_mode": scen.gamma_mode,
        "outputs": list(scen.outputs),
        "seed": scen.seed,
        "n_list": list(scen.n_list),
        "path_length": scen.path_length,
        "segment_length": scen.segment_length,
    }
    if scen.tolerances:
        out["tolerances"] = dict(scen.tolerances)
    if scen.snr is not None:
        out["snr"] = scen.snr
    if scen.mc_samples is not None:
        out["mc_samples"] = scen.mc_samples
    return out


def load_scenario(path):
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError(
            f"{path}:{exc.lineno}:{exc.colno}: invalid JSON: {exc.msg}") from None
    try:
        return scenario_from_dict(data)
    except ScenarioError as exc:
        raise ScenarioError(f"{path}: {exc}") from None


def save_scenario(scen, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(scenario_to_dict(scen), fh, indent=2)
        fh.write("\n")
