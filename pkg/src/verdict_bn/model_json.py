"""Model JSON: the on-disk and over-the-wire network format.

Top level: ``{"variables": [{"id", "states"}...], "cpts": [{"child",
"parents", "rows", "structural"}...]}``. Row order is row-major in the
declared parent order and state order follows each variable's declaration;
probabilities are decimal numbers. Serialization is deterministic, so equal
networks produce byte-identical documents.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import BadRow
from .network import Cpt, Network, Variable, build_network


def network_to_dict(net: Network) -> dict[str, Any]:
    return {
        "variables": [{"id": v.id, "states": list(v.states)} for v in net.variables],
        "cpts": [
            {
                "child": c.child,
                "parents": list(c.parents),
                "rows": [list(row) for row in c.rows],
                "structural": [list(row) for row in c.structural],
            }
            for c in net.cpts
        ],
    }


def dumps_network(net: Network) -> str:
    return json.dumps(network_to_dict(net), indent=2) + "\n"


def network_from_dict(doc: Any) -> Network:
    """Parse and fully re-validate a model document via build_network."""
    if not isinstance(doc, dict):
        raise BadRow("model document must be a JSON object")
    try:
        raw_vars = doc["variables"]
        raw_cpts = doc["cpts"]
    except (KeyError, TypeError) as exc:
        raise BadRow(f"model document missing top-level key: {exc}") from None
    try:
        variables = [Variable(id=v["id"], states=tuple(v["states"])) for v in raw_vars]
        cpts = [
            Cpt(
                child=c["child"],
                parents=tuple(c["parents"]),
                rows=tuple(tuple(row) for row in c["rows"]),
                structural=tuple(tuple(row) for row in c["structural"]),
            )
            for c in raw_cpts
        ]
    except (KeyError, TypeError, ValueError) as exc:
        raise BadRow(f"malformed model document: {exc}") from None
    return build_network(variables, cpts)


def loads_network(text: str) -> Network:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BadRow(f"model file is not valid JSON: {exc}") from None
    return network_from_dict(doc)
