"""Lattice text files and serialized formal-sum documents.

Lattice file grammar (blank lines and '#' comments ignored):

    elements: <label> <label> ...
    covers:
    <label> <label>      # one cover pair per line

Formal sums serialize to a JSON document carrying the ring, source and
target lattice fingerprints, and the coefficient/value-table terms in
canonical (value-table) order.  parse(serialize(s)) == s.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .algebra import FormalSum, Ring
from .errors import ParseError
from .lattices import Lattice, lattice_from_poset
from .morphisms import JoinMap
from .posets import poset_from_covers


def parse_lattice_file(text) -> Lattice:
    names = None
    covers = []
    in_covers = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("elements:"):
            names = line[len("elements:"):].split()
            continue
        if line.startswith("covers:"):
            if names is None:
                raise ParseError(f"line {lineno}: covers before elements")
            in_covers = True
            rest = line[len("covers:"):].strip()
            if rest:
                raise ParseError(f"line {lineno}: cover pairs go on their own lines")
            continue
        if not in_covers:
            raise ParseError(f"line {lineno}: expected 'elements:' or 'covers:'")
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected exactly two labels")
        covers.append((parts[0], parts[1]))
    if names is None:
        raise ParseError("missing 'elements:' line")
    return lattice_from_poset(poset_from_covers(names, covers))


def _coeff_to_json(ring: Ring, c):
    if ring.kind == "rat":
        return str(Fraction(c))
    return int(c)


def _coeff_from_json(ring: Ring, v):
    if ring.kind == "rat":
        return Fraction(str(v))
    return int(v)


def formal_sum_to_document(s: FormalSum) -> dict:
    return {
        "ring": str(s.ring),
        "source": s.source.fingerprint(),
        "target": s.target.fingerprint(),
        "terms": [
            {"coeff": _coeff_to_json(s.ring, c), "table": jm.table_labels()}
            for jm, c in s.sorted_terms()
        ],
    }


def formal_sum_from_document(doc: dict, source: Lattice, target: Lattice) -> FormalSum:
    try:
        ring = Ring.parse(doc["ring"])
        if doc["source"] != source.fingerprint():
            raise ParseError("document source fingerprint does not match the lattice")
        if doc["target"] != target.fingerprint():
            raise ParseError("document target fingerprint does not match the lattice")
        terms = []
        for term in doc["terms"]:
            table = term["table"]
            values = tuple(
                target.poset.index_of(table[source.names[x]])
                for x in range(source.n)
            )
            terms.append(
                (JoinMap(source, target, values), _coeff_from_json(ring, term["coeff"]))
            )
        return FormalSum(ring, source, target, terms)
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed formal-sum document: {exc}") from None


def formal_sum_to_json(s: FormalSum) -> str:
    return json.dumps(formal_sum_to_document(s), indent=2, ensure_ascii=False)


def formal_sum_to_text(s: FormalSum) -> str:
    """Human-readable signed terms; chain retractions print as their chain."""
    from .morphisms import alpha_of_chain, image_chain

    lines = []
    for jm, c in s.sorted_terms():
        label = None
        if jm.source == jm.target:
            img = image_chain(jm)
            if (
                img is not None
                and img.members
                and img.members[0] == jm.target.bottom
                and img.members[-1] == jm.target.top
                and jm == alpha_of_chain(jm.target, img)
            ):
                label = "alpha_{" + ",".join(img.labels()) + "}"
        if label is None:
            label = "[" + ",".join(
                f"{k}->{v}" for k, v in jm.table_labels().items()
            ) + "]"
        sign = "+" if (s.ring.kind != "rat" and int(c) >= 0) or (
            s.ring.kind == "rat" and Fraction(c) >= 0
        ) else "-"
        mag = abs(Fraction(c)) if s.ring.kind == "rat" else abs(int(c))
        lines.append(f"{sign} {mag}*{label}")
    return "\n".join(lines) if lines else "0"
