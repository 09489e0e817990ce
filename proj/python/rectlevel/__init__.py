"""Exact analysis of axis-parallel rectangle families.

Thin wrapper over the C++ core: arrangement engines, greedy piercing,
exact packing numbers, contribution classification and the inequality
verifier, plus the deterministic instance generators.
"""

import json as _json

from ._core import (
    ArrangementProfile,
    Axis,
    Family,
    InvalidFamilyError,
    Orientation,
    PackingLimitError,
    ParseError,
    PiercingStructure,
    Rect,
    Vertex,
    analyze_sweep,
    enumerate_vertices_oracle,
    gen_clustered,
    gen_grid,
    gen_random,
    gen_staircase,
    gen_tightness,
    greedy_lines,
    packing_bounds,
    packing_number_exact,
    perturb_to_general_position,
    read_instance_file,
    read_instance_text,
    reflect,
    render_svg,
    validate_general_position,
    write_instance_file,
    write_instance_text,
)
from ._core import analyze_json as _analyze_json
from ._core import verify_json as _verify_json

__version__ = "1.0.0"


def verify(family, k=0, known_nu=None):
    """Run every inequality check; returns the report as a dict."""
    return _json.loads(_verify_json(family, k, known_nu))


def analyze(family, k=0, engine="sweep", source="<memory>"):
    """Full analysis report (profile, piercing, packing, checks) as a dict."""
    return _json.loads(_analyze_json(family, source, k, engine))


__all__ = [
    "ArrangementProfile",
    "Axis",
    "Family",
    "InvalidFamilyError",
    "Orientation",
    "PackingLimitError",
    "ParseError",
    "PiercingStructure",
    "Rect",
    "Vertex",
    "analyze",
    "analyze_sweep",
    "enumerate_vertices_oracle",
    "gen_clustered",
    "gen_grid",
    "gen_random",
    "gen_staircase",
    "gen_tightness",
    "greedy_lines",
    "packing_bounds",
    "packing_number_exact",
    "perturb_to_general_position",
    "read_instance_file",
    "read_instance_text",
    "reflect",
    "render_svg",
    "validate_general_position",
    "verify",
    "write_instance_file",
    "write_instance_text",
]
