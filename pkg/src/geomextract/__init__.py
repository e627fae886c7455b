"""Proper colorings of geometric hypergraphs and residual-cover extraction.

Object classes: 1D intervals, axis-parallel segments, axis-parallel rays,
and octants toward (+inf,+inf,+inf). Each class gets a constructive proper
coloring with a small number of colors; dropping the heaviest color class
then yields a cover of any doubly-covered point set that leaves behind at
least a 1/kappa fraction of the total weight. Brute-force oracles
(hyperedge enumeration, properness and cover checks, exact minimum covers)
provide independent ground truth throughout.
"""

from .core import (
    AlgorithmInvariantError,
    Axis,
    ClassMismatchError,
    Coloring,
    DepthPreconditionError,
    GeomExtractError,
    ImproperColoringError,
    Instance,
    Interval,
    NoFourColoringError,
    ObjectClass,
    Octant,
    ParseError,
    PlaneTriangle,
    Ray,
    Segment,
    SizeCapError,
    UnboundedExtractionError,
    UncoverablePointError,
    contains,
    depth,
    make_instance,
    parse_rational,
    total_weight,
)
from .docio import (
    instance_digest,
    instance_to_json,
    parse_coloring,
    parse_instance,
    serialize_coloring,
    serialize_instance,
)
from .intervals import color_intervals
from .axis2d import clip_rays_to_box, color_rays, color_segments, ray_type_profile
from .octants import color_octants, color_triangles, compute_cmax, compute_domination, project
from .extraction import (
    ExtractionResult,
    exact_chromatic,
    exact_extraction_number,
    exact_min_cover,
    extract,
)
from .oracle import (
    HyperedgeSet,
    check_cover,
    check_proper,
    enumerate_hyperedges,
    enumerate_hyperedges_dense,
)
from .generators import (
    gen_interval_pair,
    gen_kbox,
    gen_kbox_rays,
    gen_octant4,
    gen_random,
    gen_rayfan,
    search_octant4,
)
from .render import render_svg
from .cli import color_instance

__version__ = "0.1.0"
