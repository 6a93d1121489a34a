"""Curve specifications in JSON.

A spec looks like::

    {"p": 2, "k": 2, "model": "hyperelliptic", "f": [0, 0, 0, 1], "h": [1]}

Coefficients are listed low-to-high.  Over GF(p^k) with k > 1 an entry may
be an integer in range(p) (a prime-field element) or a length-k list of
prime-field coordinates.  An optional ``modulus`` overrides the default
defining polynomial of GF(p^k).
"""

import json
from importlib import resources

from .curves import CurveModel, HYPERELLIPTIC, RATIONAL
from .errors import ContractViolation
from .function_field import FunctionField
from .gf import FiniteField, get_field, is_prime


class SpecError(ContractViolation):
    """A curve spec could not be parsed."""


def _field_element(F, entry, where):
    if isinstance(entry, bool):
        raise SpecError(f"{where}: expected a coefficient, got {entry!r}")
    if isinstance(entry, int):
        if not 0 <= entry < F.p:
            raise SpecError(f"{where}: coefficient {entry} is not reduced mod {F.p}")
        return entry
    if isinstance(entry, list):
        if len(entry) != F.k:
            raise SpecError(f"{where}: extension-field entry must have length {F.k}")
        for i, c in enumerate(entry):
            if isinstance(c, bool) or not isinstance(c, int) or not 0 <= c < F.p:
                raise SpecError(f"{where}[{i}]: expected an integer in range({F.p}), got {c!r}")
        return F.from_coeffs(entry)
    raise SpecError(f"{where}: expected an integer or a list, got {type(entry).__name__}")


def _poly(F, data, key):
    if key not in data:
        return ()
    arr = data[key]
    if not isinstance(arr, list):
        raise SpecError(f"{key}: expected an array of coefficients")
    return tuple(_field_element(F, e, f"{key}[{i}]") for i, e in enumerate(arr))


def parse_spec(data, check=True):
    """CurveModel from a decoded spec dict."""
    if not isinstance(data, dict):
        raise SpecError("spec must be a JSON object")
    for key in ("p", "model"):
        if key not in data:
            raise SpecError(f"{key}: missing required field")
    p = data["p"]
    k = data.get("k", 1)
    if isinstance(p, bool) or not isinstance(p, int) or not is_prime(p):
        raise SpecError(f"p: expected a prime, got {p!r}")
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise SpecError(f"k: expected a positive integer, got {k!r}")
    modulus = data.get("modulus")
    try:
        if modulus is None:
            F = get_field(p, k)
        else:
            if not isinstance(modulus, list):
                raise SpecError("modulus: expected an array")
            F = FiniteField(p, k, tuple(modulus))
    except SpecError:
        raise
    except (ValueError, ContractViolation) as exc:
        raise SpecError(f"modulus: {exc}") from None
    model = data["model"]
    if model == RATIONAL:
        return CurveModel(F, RATIONAL)
    if model != HYPERELLIPTIC:
        raise SpecError(f"model: expected 'rational' or 'hyperelliptic', got {model!r}")
    if "f" not in data:
        raise SpecError("f: missing required field for a hyperelliptic model")
    f = _poly(F, data, "f")
    h = _poly(F, data, "h")
    try:
        return CurveModel(F, HYPERELLIPTIC, f, h, check=check)
    except ContractViolation as exc:
        raise SpecError(f"f/h: {exc}") from None


def load_spec(path, check=True):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise SpecError(f"{path}: {exc.strerror}") from None
    return loads_spec(text, check=check, source=str(path))


def loads_spec(text, check=True, source="<spec>"):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"{source}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return parse_spec(data, check=check)


def spec_of(curve):
    """The JSON-ready spec dict of a curve."""
    F = curve.base
    out = {"p": F.p, "k": F.k, "model": curve.kind}
    if not curve.is_rational:
        enc = (lambda c: c) if F.k == 1 else F.to_coeffs
        out["f"] = [enc(c) for c in curve.f]
        out["h"] = [enc(c) for c in curve.h]
    return out


def bundled_names():
    root = resources.files("toroidal_ff") / "data"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def bundled_spec_text(name):
    return (resources.files("toroidal_ff") / "data" / f"{name}.json").read_text()


def bundled_field(name):
    return FunctionField(loads_spec(bundled_spec_text(name), source=name))
