"""American Soundex."""
from __future__ import annotations

from functools import lru_cache

from ..errors import NotCodable

_CODES = {
    **dict.fromkeys("bfpv", "1"),
    **dict.fromkeys("cgjkqsxz", "2"),
    **dict.fromkeys("dt", "3"),
    "l": "4",
    **dict.fromkeys("mn", "5"),
    "r": "6",
}


@lru_cache(maxsize=65536)
def soundex_code(word: str) -> str:
    """Letter + three digits, e.g. ``Robert -> R163``, ``Ashcraft -> A261``.

    Characters other than ASCII letters are dropped first. Vowels (and y)
    break a run of equal codes; h and w do not.
    """
    letters = [c for c in word.lower() if "a" <= c <= "z"]
    if not letters:
        raise NotCodable(f"no ASCII letter in {word!r}")
    digits = []
    prev = _CODES.get(letters[0], "")
    for c in letters[1:]:
        if c in "hw":
            continue
        code = _CODES.get(c, "")
        if code and code != prev:
            digits.append(code)
            if len(digits) == 3:
                break
        prev = code
    return (letters[0].upper() + "".join(digits)).ljust(4, "0")
