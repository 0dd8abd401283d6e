"""JSON point files: ``{"dim": d, "points": [["p/q", ...], ...]}``."""
import json
import re
from fractions import Fraction

from . import errors
from .geometry import PointConfig

_RATIONAL = re.compile(r"^\s*-?\d+\s*(/\s*\d+\s*)?$")


def parse_rational(x) -> Fraction:
    if isinstance(x, bool) or isinstance(x, float):
        raise errors.ParseError(f"coordinate {x!r} must be an integer or a 'p/q' string")
    if isinstance(x, int):
        return Fraction(x)
    if not isinstance(x, str) or not _RATIONAL.match(x):
        raise errors.ParseError(f"coordinate {x!r} is not a rational 'p/q' string")
    try:
        return Fraction(x.replace(" ", ""))
    except ZeroDivisionError:
        raise errors.ParseError(f"coordinate {x!r} has zero denominator") from None


def format_rational(q: Fraction) -> str:
    return str(Fraction(q))


def config_from_json(data, allow_duplicates=False) -> PointConfig:
    if not isinstance(data, dict) or "dim" not in data or "points" not in data:
        raise errors.ParseError("point file must be an object with 'dim' and 'points'")
    dim, pts = data["dim"], data["points"]
    if not isinstance(dim, int) or isinstance(dim, bool) or not isinstance(pts, list):
        raise errors.ParseError("'dim' must be an integer and 'points' a list")
    if any(not isinstance(p, list) for p in pts):
        raise errors.ParseError("each point must be a list of coordinates")
    return PointConfig(dim, tuple(tuple(parse_rational(c) for c in p) for p in pts), allow_duplicates)


def config_to_json(config: PointConfig) -> dict:
    return {"dim": config.dim, "points": [[format_rational(c) for c in p] for p in config.points]}


def load_points(path, allow_duplicates=False) -> PointConfig:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise errors.ParseError(f"{path}: invalid JSON ({exc})") from None
    return config_from_json(data, allow_duplicates)


def save_points(config: PointConfig, path):
    with open(path, "w") as fh:
        json.dump(config_to_json(config), fh, indent=1)
        fh.write("\n")
