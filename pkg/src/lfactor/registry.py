"""Supercuspidal data: dimension, self-twist order, central character,
duality and the declared Shalika set.

The registry is the only source of arithmetic input; every L-factor in the
package is assembled from :func:`rs_pair_roots` and the Shalika sets stored
here.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Mapping, Optional

from .errors import RegistryFormatError, UnknownLabel, ValidationError
from .scalar import ONE, Scalar, roots_of_unity

__all__ = [
    "CuspidalDatum",
    "Dual",
    "Registry",
    "validate",
    "rs_pair_roots",
    "self_twists",
    "load_registry",
    "loads_registry",
    "dumps_registry",
    "std_registry",
    "BUNDLED",
]


@dataclass(frozen=True)
class Dual:
    """rho~ = rho' nu^{s0}; ``alpha0`` is q^{s0}."""

    label: str
    alpha0: Scalar = ONE


@dataclass(frozen=True)
class CuspidalDatum:
    label: str
    r: int
    f: int = 1
    omega: Scalar = ONE
    dual: Optional[Dual] = None
    shalika: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "shalika", frozenset(self.shalika))

    @property
    def self_dual(self) -> bool:
        return self.dual is not None and self.dual.label == self.label


class Registry:
    """Read-only mapping label -> CuspidalDatum."""

    def __init__(self, cuspidals):
        if isinstance(cuspidals, Mapping):
            items = list(cuspidals.values())
        else:
            items = list(cuspidals)
        self._data: dict[str, CuspidalDatum] = {}
        for c in items:
            if c.label in self._data:
                raise ValidationError(c.label, "labels are unique")
            self._data[c.label] = c

    def __getitem__(self, label: str) -> CuspidalDatum:
        try:
            return self._data[label]
        except KeyError:
            raise UnknownLabel(label) from None

    def __contains__(self, label):
        return label in self._data

    def __iter__(self):
        return iter(self._data.values())

    def __len__(self):
        return len(self._data)

    def labels(self):
        return list(self._data)

    def __repr__(self):
        return f"Registry({', '.join(self._data)})"


def self_twists(f: int) -> list[Scalar]:
    """The group mu_f of unramified self-twists of a cuspidal with order f."""
    return roots_of_unity(f)


def _check_datum(c: CuspidalDatum, reg: Registry) -> None:
    lab = c.label
    if c.r < 1 or c.f < 1:
        raise ValidationError(lab, "r and f are positive")
    if c.r % c.f:
        raise ValidationError(lab, "f divides r", f"f={c.f}, r={c.r}")
    if not c.omega.is_unitary:
        raise ValidationError(lab, "omega has qexp 0", str(c.omega))
    if c.dual is not None:
        if not c.dual.alpha0.is_unitary:
            raise ValidationError(lab, "alpha0 has qexp 0", str(c.dual.alpha0))
        if c.dual.label not in reg:
            raise ValidationError(lab, "dual label exists", c.dual.label)
        other = reg[c.dual.label]
        if c.omega * other.omega != c.dual.alpha0 ** c.r:
            raise ValidationError(
                lab,
                "omega(rho) * omega(rho') = alpha0^r",
                f"{c.omega * other.omega} != {c.dual.alpha0 ** c.r}",
            )
    if c.shalika:
        if not c.self_dual or c.r % 2:
            raise ValidationError(lab, "shalika set only for self-dual cuspidals of even r")
        coset = {c.dual.alpha0 * z for z in self_twists(c.f)}
        for a in sorted(c.shalika):
            if a not in coset:
                raise ValidationError(lab, "shalika is contained in alpha0 * mu_f", str(a))
            if a ** (c.r // 2) != c.omega:
                raise ValidationError(lab, "alpha^(r/2) = omega for shalika alpha", str(a))
            # rho chi = rho for chi in mu_f, and wedge^2(rho chi) = wedge^2(rho) chi^2
            for z in self_twists(c.f):
                if a * z ** 2 not in c.shalika:
                    raise ValidationError(
                        lab, "shalika is stable under squares of self-twists", f"{a} * {z ** 2}"
                    )


def validate(reg: Registry) -> None:
    """Raise ValidationError on the first violated invariant; return None otherwise."""
    for c in reg:
        _check_datum(c, reg)
    for c in reg:
        if c.dual is None:
            continue
        other = reg[c.dual.label]
        if other.dual is None or other.dual.label != c.label:
            raise ValidationError(c.label, "duality is involutive", f"dual of {other.label}")
        if other.r != c.r or other.f != c.f:
            raise ValidationError(c.label, "dual cuspidals share r and f", other.label)
        back = {c.dual.alpha0 * z for z in self_twists(c.f)}
        if other.dual.alpha0 not in back:
            raise ValidationError(
                c.label, "dual alpha0 lies in alpha0 * mu_f", f"{other.dual.alpha0} via {other.label}"
            )


def rs_pair_roots(reg: Registry, a: str, b: str) -> frozenset:
    """Inverse roots of L(s, rho_a x rho_b): the coset alpha0(a) * mu_f(b) or nothing."""
    ca, cb = reg[a], reg[b]
    if ca.r != cb.r or ca.dual is None or ca.dual.label != b:
        return frozenset()
    return frozenset(ca.dual.alpha0 * z for z in self_twists(cb.f))


# --- JSON -----------------------------------------------------------------


def _scalar(obj, path):
    if not isinstance(obj, dict):
        raise RegistryFormatError(f"{path}: expected an object with zeta and qexp")
    for key in ("zeta", "qexp"):
        if key not in obj:
            raise RegistryFormatError(f"{path}.{key}: missing")
        if not isinstance(obj[key], str):
            raise RegistryFormatError(f"{path}.{key}: expected a string fraction like \"k/N\"")
    try:
        return Scalar.from_json(obj)
    except (ValueError, ZeroDivisionError) as exc:
        raise RegistryFormatError(f"{path}: {exc}") from None


def _int(obj, key, path):
    val = obj.get(key)
    if not isinstance(val, int) or isinstance(val, bool):
        raise RegistryFormatError(f"{path}.{key}: expected an integer")
    return val


def _datum(obj, path) -> CuspidalDatum:
    if not isinstance(obj, dict):
        raise RegistryFormatError(f"{path}: expected an object")
    label = obj.get("label")
    if not isinstance(label, str) or not label:
        raise RegistryFormatError(f"{path}.label: expected a non-empty string")
    r = _int(obj, "r", path)
    f = _int(obj, "f", path)
    if "omega" not in obj:
        raise RegistryFormatError(f"{path}.omega: missing")
    omega = _scalar(obj["omega"], f"{path}.omega")
    dual = None
    d = obj.get("dual")
    if d is not None:
        if not isinstance(d, dict) or not isinstance(d.get("label"), str):
            raise RegistryFormatError(f"{path}.dual: expected {{\"label\": str, \"alpha0\": scalar}} or null")
        if "alpha0" not in d:
            raise RegistryFormatError(f"{path}.dual.alpha0: missing")
        dual = Dual(d["label"], _scalar(d["alpha0"], f"{path}.dual.alpha0"))
    sh = obj.get("shalika", [])
    if not isinstance(sh, list):
        raise RegistryFormatError(f"{path}.shalika: expected a list")
    shalika = frozenset(_scalar(s, f"{path}.shalika[{i}]") for i, s in enumerate(sh))
    return CuspidalDatum(label, r, f, omega, dual, shalika)


def loads_registry(text: str, check: bool = True) -> Registry:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RegistryFormatError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict) or not isinstance(doc.get("cuspidals"), list):
        raise RegistryFormatError("cuspidals: expected a top-level list under \"cuspidals\"")
    reg = Registry(_datum(c, f"cuspidals[{i}]") for i, c in enumerate(doc["cuspidals"]))
    if check:
        validate(reg)
    return reg


BUNDLED = ("std.json",)


def load_registry(path, check: bool = True) -> Registry:
    """Read a registry file.  A bare bundled name such as ``std.json`` that is
    not found on disk falls back to the copy shipped with the package."""
    p = Path(path)
    if not p.exists() and (p.name in BUNDLED or f"{p.name}.json" in BUNDLED) and len(p.parts) == 1:
        name = p.name if p.name.endswith(".json") else f"{p.name}.json"
        text = resources.files("lfactor").joinpath("data", name).read_text()
    else:
        text = p.read_text()
    return loads_registry(text, check=check)


def std_registry() -> Registry:
    return load_registry("std.json")


def dumps_registry(reg: Registry) -> str:
    out = []
    for c in reg:
        out.append(
            {
                "label": c.label,
                "r": c.r,
                "f": c.f,
                "omega": c.omega.to_json(),
                "dual": None if c.dual is None else {"label": c.dual.label, "alpha0": c.dual.alpha0.to_json()},
                "shalika": [s.to_json() for s in sorted(c.shalika)],
            }
        )
    return json.dumps({"cuspidals": out}, indent=2)
