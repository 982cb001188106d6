"""Exception types shared across the package."""

from __future__ import annotations


class UnsupportedDegree(Exception):
    """A requested value depends on data the library cannot produce."""

    def __init__(self, what: str, missing: str | None = None) -> None:
        self.missing = missing
        super().__init__(f"unsupported degree: {what}" + (f" (missing {missing})" if missing else ""))
