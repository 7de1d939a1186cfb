"""Molecule catalogs: a line-oriented ``key=value`` format.

One molecule per block; a block ends at a blank line or at the next
``name=`` line.  Recognised keys::

    name=     label, unique within the file
    D_cm1=    well depth (cm^-1)
    re_A=     bond length (angstrom)
    bh_invA=  range parameter (1/angstrom)
    ch=       shape parameter, |ch| < 1
    mu_amu=   reduced mass (amu)
    source=   provenance of D_cm1 and mu_amu

``?`` marks a value that is not known.  Entries missing D_cm1 or mu_amu are
threshold-only: they can be classified (given ch) but not solved.  Lines
starting with ``#`` are comments.
"""

import math
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import DomainError, TietzHuaError
from .model import MoleculeParams

__all__ = ["CatalogError", "CatalogEntry", "load_catalog", "parse_catalog", "bundled_table1"]

_NUMERIC = {"D_cm1": "D", "re_A": "r_e", "bh_invA": "b_h", "ch": "c_h", "mu_amu": "mu"}
_KEYS = {"name", "source", *_NUMERIC}
_REQUIRED = ("name", "re_A", "bh_invA")


class CatalogError(TietzHuaError, ValueError):
    """A catalog file could not be parsed or violates a parameter invariant."""


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    D: float | None
    r_e: float
    b_h: float
    c_h: float | None
    mu: float | None
    source: str
    line: int

    @property
    def threshold_only(self):
        return self.D is None or self.mu is None

    def params(self, c_h=None):
        """MoleculeParams for this entry; ``c_h`` overrides the catalog value."""
        ch = self.c_h if c_h is None else c_h
        missing = [k for k, v in (("D_cm1", self.D), ("mu_amu", self.mu), ("ch", ch)) if v is None]
        if missing:
            raise CatalogError(f"{self.name} (line {self.line}): {', '.join(missing)} not given")
        try:
            return MoleculeParams(self.name, self.D, self.r_e, self.b_h, ch, self.mu)
        except DomainError as exc:
            raise CatalogError(f"{self.name} (line {self.line}): {exc}") from exc

    def shape_params(self, c_h):
        """Parameters with placeholder D and mu, enough for regime classification."""
        try:
            return MoleculeParams(self.name, self.D or 1.0, self.r_e, self.b_h, c_h, self.mu or 1.0)
        except DomainError as exc:
            raise CatalogError(f"{self.name} (line {self.line}): {exc}") from exc


def _number(key, text, lineno):
    if text == "?":
        return None
    try:
        value = float(text)
    except ValueError:
        raise CatalogError(f"line {lineno}: {key} is not a number: {text!r}") from None
    if not math.isfinite(value):
        raise CatalogError(f"line {lineno}: {key} must be finite, got {text!r}")
    return value


def _entry(block):
    fields = {key: value for key, (value, _) in block.items()}
    start = min(lineno for _, lineno in block.values())
    for key in _REQUIRED:
        if key not in fields:
            raise CatalogError(f"line {start}: block is missing {key}=")
    values = {}
    for key, attr in _NUMERIC.items():
        lineno = block[key][1] if key in block else start
        values[attr] = _number(key, fields[key], lineno) if key in fields else None
    for key, attr in (("re_A", "r_e"), ("bh_invA", "b_h")):
        if values[attr] is None:
            raise CatalogError(f"line {block[key][1]}: {key} is required")
        if values[attr] <= 0:
            raise CatalogError(f"line {block[key][1]}: {key} must be positive, got {values[attr]}")
    for key, attr in (("D_cm1", "D"), ("mu_amu", "mu")):
        if values[attr] is not None and values[attr] <= 0:
            raise CatalogError(f"line {block[key][1]}: {key} must be positive, got {values[attr]}")
    if values["c_h"] is not None and not abs(values["c_h"]) < 1:
        raise CatalogError(f"line {block['ch'][1]}: ch must satisfy |ch| < 1, got {values['c_h']}")
    source = fields.get("source", "").strip()
    if (values["D"] is not None or values["mu"] is not None) and not source:
        raise CatalogError(f"line {start}: source= is required when D_cm1 or mu_amu is given")
    name = fields["name"].strip()
    if not name:
        raise CatalogError(f"line {block['name'][1]}: empty name")
    return CatalogEntry(name, values["D"], values["r_e"], values["b_h"], values["c_h"], values["mu"],
                        source, start)


def parse_catalog(text):
    entries = []
    seen = {}
    block = {}

    def flush():
        if not block:
            return
        entry = _entry(block)
        if entry.name in seen:
            raise CatalogError(f"line {entry.line}: duplicate molecule {entry.name!r} "
                               f"(first defined on line {seen[entry.name]})")
        seen[entry.name] = entry.line
        entries.append(entry)
        block.clear()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            flush()
            continue
        if line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep:
            raise CatalogError(f"line {lineno}: expected key=value, got {raw!r}")
        if key not in _KEYS:
            raise CatalogError(f"line {lineno}: unknown key {key!r}")
        if key == "name":
            flush()
        if key in block:
            raise CatalogError(f"line {lineno}: {key} repeated within one block")
        block[key] = (value, lineno)
    flush()
    return entries


def load_catalog(path):
    """Entries of the catalog file at ``path``, in file order."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CatalogError(f"cannot read catalog {path}: {exc}") from exc
    return parse_catalog(text)


def bundled_table1():
    """The six threshold-only shape entries shipped with the package."""
    return parse_catalog(resources.files("tietzhua").joinpath("data/table1.cat").read_text(encoding="utf-8"))
