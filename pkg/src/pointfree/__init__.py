"""Point-free descriptions of the real line, the interval, the circle and their products."""

from .dyadic import Dyadic
from .zset import ZSet, path_relation, path_tlam, zo_step
from .region import ONE, ZERO, Cone, Q, RayDown, RayUp, Region, make_generator, phi
from .geometry import (
    ClosureSketch,
    DyInterval,
    IntervalSet,
    closure_sketch,
    delta_interval,
    geo_contact,
    region_from_intervals,
)
from .models import parse_model
from .products import ProductRegion
from .syntax import ParseError, format_region, parse_expression
from .engine import (
    ContactVerdict,
    TreeCone,
    TreeD,
    alexandroff_contact,
    contact,
    contact_generators,
    is_bounded,
    relativize,
    separated_bounded,
    tree_contact,
    tree_translate,
    well_inside,
)

__version__ = "0.1.0"

__all__ = [
    "Dyadic",
    "ZSet",
    "path_relation",
    "path_tlam",
    "zo_step",
    "ONE",
    "ZERO",
    "Cone",
    "Q",
    "RayDown",
    "RayUp",
    "Region",
    "make_generator",
    "phi",
    "ClosureSketch",
    "DyInterval",
    "IntervalSet",
    "closure_sketch",
    "delta_interval",
    "geo_contact",
    "region_from_intervals",
    "parse_model",
    "ProductRegion",
    "ParseError",
    "format_region",
    "parse_expression",
    "ContactVerdict",
    "TreeCone",
    "TreeD",
    "alexandroff_contact",
    "contact",
    "contact_generators",
    "is_bounded",
    "relativize",
    "separated_bounded",
    "tree_contact",
    "tree_translate",
    "well_inside",
]
