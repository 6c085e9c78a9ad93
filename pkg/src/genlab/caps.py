"""Guardrail for exhaustive enumerations.

Every enumerating operation refuses up front when the population it
would have to stream exceeds a cap, so a typo in a stratum index cannot
wedge a session. The cap is the ``cap`` argument if given, else the
``GENLAB_ENUM_CAP`` environment variable, else a desk-scale default.
"""

import os

DEFAULT_ENUMERATION_CAP = 10**7

ENV_CAP_VAR = "GENLAB_ENUM_CAP"


class EnumerationCapExceeded(Exception):
    """An exhaustive enumeration was refused because it is too large."""

    def __init__(self, required: int, cap: int):
        self.required = required
        self.cap = cap
        super().__init__(
            f"enumeration would stream {required} items, exceeding the cap of {cap}"
        )


def resolve_cap(cap: int | None = None) -> int:
    """Return the effective enumeration cap."""
    if cap is not None:
        return cap
    env = os.environ.get(ENV_CAP_VAR)
    if env is not None:
        return int(env)
    return DEFAULT_ENUMERATION_CAP


def check_cap(required: int, cap: int | None = None) -> None:
    """Raise EnumerationCapExceeded if ``required`` items exceed the cap."""
    effective = resolve_cap(cap)
    if required > effective:
        raise EnumerationCapExceeded(required, effective)
