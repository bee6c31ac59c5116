"""Canonical JSON documents and text / LaTeX renderings of characters."""

from __future__ import annotations

import json

from .cartan import CartanDatum
from .character import QCharacter
from .monomial import Monomial, Weight


class MalformedInput(ValueError):
    pass


def character_to_json(chi: QCharacter) -> dict:
    return {
        "cartan": chi.cartan.to_json(),
        "highest": None if chi.highest is None else chi.highest.to_json(),
        "depth_bound": chi.depth_bound,
        "terms": [{"coeff": c, "factors": m.to_json()} for m, c in chi.sorted_terms()],
    }


def character_from_json(doc) -> QCharacter:
    try:
        if not isinstance(doc, dict) or set(doc) != {"cartan", "highest", "depth_bound", "terms"}:
            raise MalformedInput("a character document has exactly the keys cartan, highest, depth_bound, terms")
        cartan = CartanDatum.from_json(doc["cartan"])
        highest = None if doc["highest"] is None else Monomial.from_json(doc["highest"])
        bound = doc["depth_bound"]
        if bound is not None and type(bound) is not int:
            raise MalformedInput(f"depth_bound must be an integer or null, got {bound!r}")
        if not isinstance(doc["terms"], list):
            raise MalformedInput("terms must be a list")
        pairs = []
        for t in doc["terms"]:
            if not isinstance(t, dict) or set(t) != {"coeff", "factors"} or type(t["coeff"]) is not int:
                raise MalformedInput(f"bad term {t!r}")
            pairs.append((Monomial.from_json(t["factors"]), t["coeff"]))
        return QCharacter(cartan, pairs, bound, highest)
    except MalformedInput:
        raise
    except (ValueError, TypeError, OverflowError) as exc:
        raise MalformedInput(str(exc)) from exc


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def loads_character(text: str) -> QCharacter:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"invalid JSON: {exc}") from exc
    return character_from_json(doc)


def _join(terms: list[tuple[int, str]], times: str, one: str = "1") -> str:
    if not terms:
        return "0"
    out = []
    for k, (c, body) in enumerate(terms):
        mag = abs(c)
        piece = body if mag == 1 else f"{mag}{times}{body}"
        if k == 0:
            out.append(piece if c > 0 else f"-{piece}")
        else:
            out.append(f" + {piece}" if c > 0 else f" - {piece}")
    return "".join(out)


def character_to_text(chi: QCharacter) -> str:
    return _join([(c, str(m)) for m, c in chi.sorted_terms()], " × ")


def character_to_latex(chi: QCharacter) -> str:
    return _join([(c, m.latex()) for m, c in chi.sorted_terms()], " \\times ")


def parse_text_terms(text: str) -> list[tuple[Monomial, int]]:
    """Inverse of :func:`character_to_text` up to ordering (used by tests)."""
    from .monomial import parse_monomial

    text = text.strip()
    if text == "0":
        return []
    pairs = []
    sign = 1
    for chunk in _split_terms(text):
        if chunk in ("+", "-"):
            sign = 1 if chunk == "+" else -1
            continue
        if chunk.startswith("-"):
            sign, chunk = -1, chunk[1:]
        if " × " in chunk:
            c, body = chunk.split(" × ", 1)
            coeff = int(c)
        else:
            coeff, body = 1, chunk
        pairs.append((parse_monomial(body), sign * coeff))
        sign = 1
    return pairs


def _split_terms(text: str) -> list[str]:
    out, cur = [], []
    for tok in text.split(" "):
        if tok in ("+", "-"):
            if cur:
                out.append(" ".join(cur))
                cur = []
            out.append(tok)
        else:
            cur.append(tok)
    if cur:
        out.append(" ".join(cur))
    return out


def weights_to_json(cartan: CartanDatum, weights: dict[Weight, int]) -> dict:
    return {
        "cartan": cartan.to_json(),
        "weights": [dict(w.to_json(), coeff=c) for w, c in sorted(weights.items())],
    }


def weights_to_text(weights: dict[Weight, int]) -> str:
    return "\n".join(f"{w}: {c}" for w, c in sorted(weights.items()))
