"""Text grammar for product objects, shared by the CLI and tests.

Grammar (whitespace-insensitive, factors joined by ``x``):

    product  = factor { "x" factor }
    factor   = "S(" m ";" area ")"                       sphere S^(2m-1)
             | "V(" k "," n ";" area ")"                 frame manifold
             | "C(" label "," halfdim ";" gen [";asph"] ")"   closed factor
    area     = rational with optional "pi" ("pi", "pi/2", "3pi/2", "3/2", ...)
    gen      = "0" (trivial spectrum) | area (lattice generator)

Areas are measured in units of pi, so a bare rational and the same
rational with a "pi" suffix parse identically.  ``format_product`` writes
the canonical form; parsing it back returns an equal object.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .errors import ExprParseError
from .spectra import Closed, ProductObject, Sphere, Spectrum, Stiefel

_SPHERE_RE = re.compile(r"^S\((\d+);([^;]+)\)$")
_STIEFEL_RE = re.compile(r"^V\((\d+),(\d+);([^;]+)\)$")
_CLOSED_RE = re.compile(r"^C\(([^,;()]+),(\d+);([^;]+?)(;asph)?\)$")


def parse_area(text: str) -> Fraction:
    """Parse a nonnegative rational in units of pi."""
    s = text.strip().replace(" ", "").replace("*", "")
    if not s:
        raise ExprParseError("empty area")
    if s.count("pi") > 1:
        raise ExprParseError(f"bad area {text!r}")
    body = s.replace("pi", "", 1)
    try:
        if body == "":
            value = Fraction(1)
        elif body.startswith("/"):
            value = Fraction("1" + body)
        else:
            value = Fraction(body)
    except (ValueError, ZeroDivisionError) as exc:
        raise ExprParseError(f"bad area {text!r}") from exc
    if value < 0:
        raise ExprParseError(f"area must be nonnegative, got {text!r}")
    return value


def _split_factors(text: str) -> list[str]:
    # Split on 'x' at parenthesis depth 0 only.
    parts, depth, current = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ExprParseError(f"unbalanced parentheses in {text!r}")
        if ch == "x" and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    if depth != 0:
        raise ExprParseError(f"unbalanced parentheses in {text!r}")
    parts.append("".join(current))
    return parts


def parse_atom(text: str):
    """Parse a single factor."""
    s = "".join(text.split())
    try:
        match = _SPHERE_RE.match(s)
        if match:
            return Sphere(int(match.group(1)), parse_area(match.group(2)))
        match = _STIEFEL_RE.match(s)
        if match:
            return Stiefel(int(match.group(1)), int(match.group(2)), parse_area(match.group(3)))
        match = _CLOSED_RE.match(s)
        if match:
            label, half_dim, gen_text, asph = match.groups()
            spectrum = (
                Spectrum.zero() if gen_text == "0" else Spectrum.lattice(parse_area(gen_text))
            )
            return Closed(label, int(half_dim), spectrum, aspherical=asph is not None)
    except ExprParseError:
        raise
    except ValueError as exc:
        raise ExprParseError(str(exc)) from exc
    raise ExprParseError(f"unrecognized factor {text.strip()!r}")


def parse_product(text: str) -> ProductObject:
    """Parse a product expression into a ``ProductObject``."""
    pieces = _split_factors(text)
    if any(not p.strip() for p in pieces):
        raise ExprParseError(f"empty factor in {text!r}")
    try:
        atoms = tuple(parse_atom(p) for p in pieces)
        return ProductObject(atoms)
    except ExprParseError:
        raise
    except ValueError as exc:
        raise ExprParseError(str(exc)) from exc


def format_product(obj: ProductObject) -> str:
    """Canonical text for an object; ``parse_product`` inverts it."""
    return str(obj)
