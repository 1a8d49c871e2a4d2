"""Grid sweeps comparing the three deciders, plus (de)serialization of verdicts."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields
from math import gcd
from typing import Dict, Iterator, List, Optional, Tuple

from .lens import (
    Indeterminate,
    Lens,
    LensSpace,
    NotLens,
    Verdict,
    certify_lens,
    classify_theorem,
    lens_equivalent,
    obstruct,
)
from .rolfsen import constructive_lens
from .torsion import SurgerySpec

SCHEMA_VERSION = 1

CSV_COLUMNS = (
    "n", "p1", "q1", "p2", "q2",
    "theorem", "theorem_lens", "theorem_cases",
    "obstruction", "obstruction_levels",
    "constructive", "constructive_lens",
    "sound", "complete", "constructive_agrees", "torsion_certified",
    "disagreement",
)


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SweepConfig:
    n_range: Tuple[int, int] = (0, 3)
    p_bound: int = 20
    q_bound: int = 6
    epsilon: int = 1
    divisor_bound: int = 30
    output_format: str = "json"
    parallelism: int = 1

    def __post_init__(self):
        lo, hi = self.n_range
        if lo < 0:
            raise ConfigError(f"n_range must be non-negative, got {self.n_range}")
        if self.p_bound < 1 or self.q_bound < 1:
            raise ConfigError("p_bound and q_bound must be positive")
        if self.epsilon not in (1, -1):
            raise ConfigError(f"epsilon must be 1 or -1, got {self.epsilon}")
        if self.divisor_bound < 2:
            raise ConfigError("divisor_bound must be >= 2")
        if self.output_format not in ("json", "csv"):
            raise ConfigError(f"output_format must be json or csv, got {self.output_format!r}")
        if self.parallelism < 1:
            raise ConfigError("parallelism must be positive")

    @classmethod
    def from_mapping(cls, data: Dict) -> "SweepConfig":
        known = {f.name for f in fields(cls)}
        extra = set(data) - known
        if extra:
            raise ConfigError(f"unknown config keys: {', '.join(sorted(extra))}")
        data = dict(data)
        if "n_range" in data:
            nr = data["n_range"]
            if not (isinstance(nr, (list, tuple)) and len(nr) == 2 and all(isinstance(x, int) for x in nr)):
                raise ConfigError("n_range must be a pair of integers [min, max]")
            data["n_range"] = tuple(nr)
        for key in ("p_bound", "q_bound", "epsilon", "divisor_bound", "parallelism"):
            if key in data and (not isinstance(data[key], int) or isinstance(data[key], bool)):
                raise ConfigError(f"{key} must be an integer")
        return cls(**data)


def load_config(path: str) -> Dict:
    """Read a JSON config file; syntax errors report their line number."""
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"{path}: cannot read config: {exc.strerror}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}:{exc.lineno}: {exc.msg}") from exc
    if not isinstance(data, dict):
        raise ConfigError(f"{path}:1: config must be a JSON object")
    return data


def grid(config: SweepConfig) -> Iterator[SurgerySpec]:
    lo, hi = config.n_range
    pb, qb = config.p_bound, config.q_bound
    for n in range(lo, hi + 1):
        for p1 in range(-pb, pb + 1):
            for q1 in range(1, qb + 1):
                if gcd(p1, q1) != 1:
                    continue
                for p2 in range(-pb, pb + 1):
                    for q2 in range(1, qb + 1):
                        s = SurgerySpec(n, p1, q1, p2, q2)
                        if s.is_valid:
                            yield s


# -- verdict (de)serialization ------------------------------------------------

def verdict_to_dict(v: Optional[Verdict]) -> Optional[Dict]:
    if v is None:
        return None
    if isinstance(v, Lens):
        return {"kind": "Lens", "lens": [v.space.p, v.space.q],
                "normal_form": [v.space.normal_form().p, v.space.normal_form().q],
                "cases": list(v.cases)}
    if isinstance(v, NotLens):
        return {"kind": "NotLens", "obstruction": [[d, why] for d, why in v.obstruction]}
    return {"kind": "Indeterminate", "note": v.note}


def verdict_from_dict(data: Optional[Dict]) -> Optional[Verdict]:
    if data is None:
        return None
    kind = data["kind"]
    if kind == "Lens":
        return Lens(LensSpace(*data["lens"]), tuple(data["cases"]))
    if kind == "NotLens":
        return NotLens(tuple((int(d), str(why)) for d, why in data["obstruction"]))
    if kind == "Indeterminate":
        return Indeterminate(data.get("note", ""))
    raise ValueError(f"unknown verdict kind {kind!r}")


def spec_to_dict(s: SurgerySpec) -> Dict:
    return asdict(s)


# -- one record -----------------------------------------------------------------

def _signed(s: SurgerySpec, epsilon: int) -> SurgerySpec:
    # the eps = -1 family is the slope-negated eps = +1 family
    return s if epsilon == 1 else SurgerySpec(s.n, -s.p1, s.q1, -s.p2, s.q2)


def sweep_record(s: SurgerySpec, epsilon: int = 1, divisor_bound: int = 30) -> Dict:
    """Run every decider on one spec and record where they agree.

    ``complete`` (obstruction Indeterminate exactly on the theorem's lens
    cases) only counts toward disagreement when every divisor was tested.
    """
    base = _signed(s, epsilon)
    theorem = classify_theorem(base)
    obstruction = obstruct(s, epsilon, divisor_bound=divisor_bound)
    construction = constructive_lens(base)
    built = construction.space if construction else None

    is_lens = isinstance(theorem, Lens)
    sound = not (is_lens and isinstance(obstruction, NotLens))
    complete = is_lens == isinstance(obstruction, Indeterminate)
    exhaustive = max(abs(s.p1), abs(s.p2)) <= divisor_bound
    if is_lens:
        agrees = built is not None and lens_equivalent(built, theorem.space)
    else:
        agrees = built is None
    certified = None
    if is_lens and built is not None and s.n >= 1:
        certified = all(ok for _, _, ok in certify_lens(s, built, divisor_bound, epsilon))

    disagreement = (not sound) or (not agrees) or (exhaustive and not complete) or certified is False
    return {
        "spec": spec_to_dict(s),
        "theorem": verdict_to_dict(theorem),
        "obstruction": verdict_to_dict(obstruction),
        "constructive": None if construction is None else {
            "route": construction.route,
            "steps": list(construction.steps),
            "lens": None if built is None else [built.p, built.q],
        },
        "sound": sound,
        "complete": complete,
        "constructive_agrees": agrees,
        "torsion_certified": certified,
        "disagreement": disagreement,
    }


def _chunk(args) -> List[Dict]:
    specs, epsilon, divisor_bound = args
    return [sweep_record(s, epsilon, divisor_bound) for s in specs]


def run_sweep(config: SweepConfig) -> Dict:
    specs = sorted(grid(config))
    chunks = [specs[i:i + 500] for i in range(0, len(specs), 500)]
    jobs = [(c, config.epsilon, config.divisor_bound) for c in chunks]
    if config.parallelism == 1 or len(jobs) <= 1:
        parts = [_chunk(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=config.parallelism) as pool:
            parts = list(pool.map(_chunk, jobs))
    records = [r for part in parts for r in part]
    summary = {
        "records": len(records),
        "lens": sum(r["theorem"]["kind"] == "Lens" for r in records),
        "obstructed": sum(r["obstruction"]["kind"] == "NotLens" for r in records),
        "disagreements": sum(r["disagreement"] for r in records),
    }
    cfg = asdict(config)
    cfg["n_range"] = list(config.n_range)
    return {"schema_version": SCHEMA_VERSION, "command": "sweep", "config": cfg,
            "records": records, "summary": summary}


def csv_row(record: Dict) -> List:
    spec, th, ob, con = record["spec"], record["theorem"], record["obstruction"], record["constructive"]

    def lens_text(pair):
        return "" if pair is None else f"L({pair[0]},{pair[1]})"

    def flag(x):
        return "" if x is None else str(bool(x)).lower()

    return [
        spec["n"], spec["p1"], spec["q1"], spec["p2"], spec["q2"],
        th["kind"], lens_text(th.get("lens")), " ".join(th.get("cases", [])),
        ob["kind"], " ".join(str(d) for d, _ in ob.get("obstruction", [])),
        "" if con is None else con["route"], "" if con is None else lens_text(con["lens"]),
        flag(record["sound"]), flag(record["complete"]), flag(record["constructive_agrees"]),
        flag(record["torsion_certified"]), flag(record["disagreement"]),
    ]


# keys and JSON types of a sweep record; used to check emitted reports
RECORD_SCHEMA = {
    "spec": dict,
    "theorem": dict,
    "obstruction": dict,
    "constructive": (dict, type(None)),
    "sound": bool,
    "complete": bool,
    "constructive_agrees": bool,
    "torsion_certified": (bool, type(None)),
    "disagreement": bool,
}


def check_record(record: Dict) -> None:
    if set(record) != set(RECORD_SCHEMA):
        raise ValueError(f"record keys {sorted(record)} do not match the schema")
    for key, typ in RECORD_SCHEMA.items():
        if not isinstance(record[key], typ):
            raise ValueError(f"record field {key!r} has type {type(record[key]).__name__}")
    SurgerySpec(**record["spec"])
    verdict_from_dict(record["theorem"])
    verdict_from_dict(record["obstruction"])
