"""QuiverDocument: the single JSON interchange format.

Wire format (all indices 1-based, matching the published numbering):

    {
      "format": "affold/1",
      "n": 4,
      "b": [[0,-1,-1,0],[1,0,0,1],[1,0,0,1],[0,-1,-1,0]],
      "d": [1,1,1,1],                      # optional; computed when absent
      "names": ["1","2","3","4"],          # optional vertex names
      "action": {                          # optional group action
        "group": "Z2",
        "generators": [[4,3,2,1]]          # images of 1..n
      }
    }

Parsing rejects non-skew-symmetrizable matrices; in strict mode unknown
fields are rejected, otherwise they are dropped with a warning.  Documents
round-trip losslessly through parse/serialize.
"""

from __future__ import annotations

import json
import warnings

from .catalog import GroupAction, group_action
from .errors import FormatError
from .matrix import ExchangeMatrix, from_parts, make_exchange_matrix

FORMAP_VERSION = "affold/1"

_KNOWN_FIELDS = {"format", "n", "b", "d", "names", "action"}
_KNOWN_ACTION_FIELDS = {"group", "generators"}


def parse_document(data, strict: bool = False):
    """Parse a document dict (or JSON string) into
    (ExchangeMatrix, GroupAction | None, names | None)."""
    if isinstance(data, (str, bytes)):
        data = json.loads(data)
    if not isinstance(data, dict):
        raise FormatError("document must be a JSON object")
    unknown = set(data) - _KNOWN_FIELDS
    if unknown:
        msg = f"unknown document fields: {sorted(unknown)}"
        if strict:
            raise FormatError(msg)
        warnings.warn(msg, stacklevel=2)
    if data.get("format") != FORMAP_VERSION:
        raise FormatError(
            f"missing or unsupported format version (want {FORMAP_VERSION!r})"
        )
    if "b" not in data:
        raise FormatError("document lacks the matrix field 'b'")
    b = data["b"]
    if not isinstance(b, list) or not all(isinstance(r, list) for r in b):
        raise FormatError("'b' must be a row-major array of integer rows")
    n = data.get("n", len(b))
    if n != len(b) or any(len(r) != n for r in b):
        raise FormatError("'b' must be square and match 'n'")
    if "d" in data and data["d"] is not None:
        m = from_parts(b, data["d"])
    else:
        m = make_exchange_matrix(b)
    names = data.get("names")
    if names is not None:
        if len(names) != n or not all(isinstance(x, str) for x in names):
            raise FormatError("'names' must list one string per vertex")
        names = list(names)
    action = None
    if data.get("action") is not None:
        spec = data["action"]
        if not isinstance(spec, dict):
            raise FormatError("'action' must be an object")
        unknown = set(spec) - _KNOWN_ACTION_FIELDS
        if unknown:
            msg = f"unknown action fields: {sorted(unknown)}"
            if strict:
                raise FormatError(msg)
            warnings.warn(msg, stacklevel=2)
        gens = spec.get("generators", [])
        zero_based = []
        for g in gens:
            if sorted(g) != list(range(1, n + 1)):
                raise FormatError("action generators must permute 1..n")
            zero_based.append([v - 1 for v in g])
        action = group_action(n, zero_based, spec.get("group", "Z1"))
    return m, action, names


def serialize_document(
    m: ExchangeMatrix, action: GroupAction = None, names=None
) -> dict:
    doc = {
        "format": FORMAP_VERSION,
        "n": m.n,
        "b": [list(row) for row in m.b],
        "d": list(m.d),
    }
    if names is not None:
        doc["names"] = list(names)
    if action is not None and action.tag != "Z1":
        doc["action"] = {
            "group": action.tag,
            "generators": [[v + 1 for v in g] for g in action.generators],
        }
    return doc


def document_json(m: ExchangeMatrix, action=None, names=None) -> str:
    return json.dumps(serialize_document(m, action, names), indent=2)


def export_dot(m: ExchangeMatrix, names=None) -> str:
    """DOT text: one node per vertex, one edge per arrow bundle.

    Arrow multiplicity is an edge label (omitted when 1); for properly
    skew-symmetrizable pairs the label is "|b_ij|,|b_ji|".  Vertex order is
    1..n, edges sorted by (source, target)."""
    lines = ["digraph quiver {"]
    for i in range(m.n):
        label = names[i] if names else str(i + 1)
        lines.append(f'  v{i + 1} [label="{label}"];')
    for i in range(m.n):
        for j in range(m.n):
            if m.b[i][j] > 0:
                mult = m.b[i][j]
                back = -m.b[j][i]
                if mult == back:
                    attr = f' [label="{mult}"]' if mult != 1 else ""
                else:
                    attr = f' [label="{mult},{back}"]'
                lines.append(f"  v{i + 1} -> v{j + 1}{attr};")
    lines.append("}")
    return "\n".join(lines)
