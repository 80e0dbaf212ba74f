"""The shared problem-description file format (JSON).

Rationals are serialized as "p/q" strings and infinity as "inf"; no floating
point appears anywhere.  A file describes a space with optional measures,
functions, a threshold family and a truncation model:

    {
      "atoms": ["a", "b"],
      "partition": [["a"], ["b"]],          // optional
      "measures": {"nu": {"rule": "additive", "weights": {"a": "1/2"}}},
      "functions": {"f": {"a": "2", "b": "5"}},
      "family": [{"alpha": "0", "set": ["a", "b"]}, ...],
      "zero_plus": ["a"],                    // optional family refinement
      "truncations": {"atoms": [...], "depths": [...],
                      "measures": {"mu": {...}, "nu": {...}},
                      "family": {"rule": "threshold_tail"}, "N_max": 8}
    }

Explicit measure tables are lists of {"set": [atoms...], "value": "p/q"}.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional

from .decomposition import DecompositionFamily, make_family
from .errors import ChoquetRnError, SpecFileError
from .functions import SimpleFunction, function_from_values
from .measures import MonotoneMeasure, make_measure
from .sigma_finite import TruncationModel, make_truncation_model
from .spaces import MeasurableSpace, build_space


@dataclass
class ProblemSpec:
    """A parsed problem description."""

    space: Optional[MeasurableSpace] = None
    measures: Dict[str, MonotoneMeasure] = field(default_factory=dict)
    functions: Dict[str, SimpleFunction] = field(default_factory=dict)
    family: Optional[DecompositionFamily] = None
    model: Optional[TruncationModel] = None
    family_generator: Optional[object] = None
    n_max: Optional[int] = None
    raw: dict = field(default_factory=dict)


def parse_problem(data: dict) -> ProblemSpec:
    spec = ProblemSpec(raw=data)
    try:
        if "atoms" in data:
            spec.space = build_space(data["atoms"], data.get("partition"))
    except (ValueError, ChoquetRnError) as exc:
        raise SpecFileError(str(exc), location="atoms/partition") from exc

    if spec.space is not None:
        for name, rule in data.get("measures", {}).items():
            try:
                spec.measures[name] = make_measure(spec.space, rule)
            except (ValueError, KeyError, ChoquetRnError) as exc:
                raise SpecFileError(str(exc), location=f"measures.{name}") from exc
        for name, table in data.get("functions", {}).items():
            try:
                spec.functions[name] = function_from_values(spec.space, table)
            except (ValueError, KeyError, ChoquetRnError) as exc:
                raise SpecFileError(str(exc), location=f"functions.{name}") from exc
        if "family" in data:
            try:
                breakpoints = [
                    (Fraction(entry["alpha"]), spec.space.make_set(entry["set"]))
                    for entry in data["family"]
                ]
                zero_plus = (
                    spec.space.make_set(data["zero_plus"])
                    if "zero_plus" in data
                    else None
                )
                spec.family = make_family(spec.space, breakpoints, zero_plus=zero_plus)
            except (ValueError, KeyError, ChoquetRnError) as exc:
                raise SpecFileError(str(exc), location="family") from exc

    if "truncations" in data:
        block = data["truncations"]
        try:
            n_max = block.get("N_max")
            atoms = block.get("atoms")
            depths = block.get("depths")
            if atoms is None:
                if n_max is None:
                    raise ValueError("truncations need 'atoms' or 'N_max'")
                atoms = [str(k) for k in range(int(n_max) + 1)]
                depths = [n + 1 for n in range(1, int(n_max) + 1)]
            spec.model = make_truncation_model(
                atoms,
                mu_rule=block["measures"]["mu"],
                nu_rule=block["measures"]["nu"],
                depths=depths,
            )
            spec.family_generator = block.get("family", "threshold_tail")
            spec.n_max = n_max
        except (ValueError, KeyError, ChoquetRnError) as exc:
            raise SpecFileError(str(exc), location="truncations") from exc

    return spec


def load_problem(path: str) -> ProblemSpec:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        raise SpecFileError(str(exc), location=path) from exc
    except json.JSONDecodeError as exc:
        raise SpecFileError(
            f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}",
            location=path,
        ) from exc
    if not isinstance(data, dict):
        raise SpecFileError("top-level value must be an object", location=path)
    return parse_problem(data)


def problem_to_dict(spec: ProblemSpec) -> dict:
    """Normalized re-serialization; re-parsing yields an equivalent problem."""
    out: dict = {}
    if spec.space is not None:
        out["atoms"] = list(spec.space.atoms)
        if not spec.space.is_power_set:
            out["partition"] = [
                list(spec.space.block_set(i).atom_names())
                for i in range(spec.space.n_blocks)
            ]
        if spec.measures:
            out["measures"] = {
                name: {
                    "rule": "explicit",
                    "table": [
                        {"set": list(A.atom_names()), "value": str(m(A))}
                        for A in spec.space.subsets()
                    ],
                }
                for name, m in sorted(spec.measures.items())
            }
        if spec.functions:
            out["functions"] = {
                name: {
                    str(atom): str(f(atom)) for atom in spec.space.atoms
                }
                for name, f in sorted(spec.functions.items())
            }
        if spec.family is not None:
            out["family"] = [
                {"alpha": str(t), "set": list(A.atom_names())}
                for t, A in zip(spec.family.thresholds, spec.family.sets)
            ]
            if spec.family.zero_plus != spec.family.sets[0]:
                out["zero_plus"] = list(spec.family.zero_plus.atom_names())
    if spec.model is not None:
        out["truncations"] = spec.raw.get("truncations", {})
    return out
