"""Enumeration guards.

Exact enumeration is the workhorse of this library, so every potentially
exponential loop is gated.  The codeword guard can be raised per-call
(``override=True``) or globally through the ``SRKIT_MAX_ENUM`` environment
variable.
"""

import os

from .errors import TooLarge

DEFAULT_MAX_ENUM = 1 << 24       # codeword / tuple enumerations
SUBSPACE_GUARD = 1 << 28         # subspace streams
MAX_DISTRIBUTION_KEYS = 10 ** 7  # support-distribution dictionaries


def max_enum() -> int:
    value = os.environ.get("SRKIT_MAX_ENUM")
    return int(value) if value else DEFAULT_MAX_ENUM


def check_enum(size, override=False, what="enumeration"):
    limit = max_enum()
    if not override and size > limit:
        raise TooLarge(
            f"{what} of size {size} exceeds guard {limit} "
            f"(pass override=True or set SRKIT_MAX_ENUM)"
        )


def check_subspaces(count, override=False):
    if not override and count > SUBSPACE_GUARD:
        raise TooLarge(
            f"subspace stream of size {count} exceeds guard {SUBSPACE_GUARD}"
        )


def check_keys(count):
    if count > MAX_DISTRIBUTION_KEYS:
        raise TooLarge(
            f"distribution would hold {count} keys "
            f"(guard {MAX_DISTRIBUTION_KEYS})"
        )
