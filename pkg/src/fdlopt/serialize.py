"""JSON payload builders shared by the HTTP service and the CLI.

Coverage bounds and delays serialize as decimal strings: consumers with
64-bit JSON number parsers must not silently truncate them.
"""

import json

from .construction import Construction, build_construction
from .optimizer import DesignResult
from .oracle import OptimalSet
from .tables import TableRow


def design_payload(result: DesignResult) -> dict:
    candidates = []
    for profile in result.candidates():
        built = build_construction(profile)
        candidates.append(
            {
                "profile": list(profile.parts),
                "delays": [str(d) for d in built.delays],
                "B": str(built.block_B[-1]),
            }
        )
    return {
        "m": result.trace.m,
        "k": result.trace.k,
        "gcd": result.trace.gcd,
        "depth": result.trace.depth,
        "classification": result.classification.value,
        "candidates": candidates,
    }


def value_payload(built: Construction) -> dict:
    return {
        "m": built.profile.context_total,
        "k": len(built.profile.parts),
        "profile": list(built.profile.parts),
        "delays": [str(d) for d in built.delays],
        "B": str(built.block_B[-1]),
    }


def verify_payload(result: DesignResult, optimum: OptimalSet, agree: bool) -> dict:
    return {
        "m": optimum.m,
        "k": optimum.k,
        "gcd": result.trace.gcd,
        "classification": result.classification.value,
        "agree": agree,
        "candidates": [list(p.parts) for p in result.candidates()],
        "argmax": [list(p.parts) for p in optimum.argmax],
        "best_B": str(optimum.best_B),
        "space_size": optimum.space_size,
    }


def tables_payload(rows: tuple[TableRow, ...]) -> dict:
    return {
        "rows": [
            {
                "table": row.table,
                "m": row.m,
                "k": row.k,
                "source": list(row.source) if row.source is not None else None,
                "profile": list(row.profile),
                "B": str(row.value),
            }
            for row in rows
        ]
    }


def to_json(payload: dict) -> str:
    """Canonical rendering: parsing this output and re-serializing it with
    the same call is byte-identical."""
    return json.dumps(payload, indent=2)
