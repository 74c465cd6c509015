"""Size caps.

Every exponential operation checks one of these limits.  Defaults can be
overridden through the ``HIBI_CAPS`` environment variable, a comma separated
list such as ``oracle_poset=9,census=7``.
"""

import dataclasses
import os
from dataclasses import dataclass

from .errors import ParseError, SizeCapExceeded


@dataclass(frozen=True)
class Caps:
    poset_ideals: int = 20      # |P| for down-set enumeration
    lattice_size: int = 4096    # |L| for ideal_lattice
    distributive: int = 512     # |L| for the cubic distributivity check
    isomorphism: int = 10       # |P| for canonical forms
    oracle_poset: int = 8       # |P| for the Hilbert series oracle
    oracle_slack: int = 4       # Hilbert function degree n <= |P| + slack
    census: int = 8             # largest n for poset enumeration

    def __post_init__(self):
        for f in dataclasses.fields(self):
            if getattr(self, f.name) <= 0:
                raise ParseError(f"cap {f.name} must be positive")

    def replace(self, **overrides):
        return dataclasses.replace(self, **overrides)

    @classmethod
    def parse(cls, text, base=None):
        base = base or cls()
        names = {f.name for f in dataclasses.fields(cls)}
        overrides = {}
        for item in filter(None, (s.strip() for s in text.split(","))):
            key, sep, value = item.partition("=")
            key = key.strip()
            if not sep or key not in names:
                raise ParseError(f"bad cap override {item!r}")
            try:
                overrides[key] = int(value)
            except ValueError:
                raise ParseError(f"cap {key} needs an integer, got {value!r}") from None
        return base.replace(**overrides)

    @classmethod
    def from_env(cls):
        return cls.parse(os.environ.get("HIBI_CAPS", ""))


_default = None


def default_caps():
    global _default
    if _default is None:
        _default = Caps.from_env()
    return _default


def resolve(caps):
    return default_caps() if caps is None else caps


def check_cap(caps, name, value):
    limit = getattr(caps, name)
    if value > limit:
        raise SizeCapExceeded(name, limit, value)
