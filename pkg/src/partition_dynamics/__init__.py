"""Extended Farey and triangle maps acting on integer partitions."""

from .cfrac import cf_expand, cf_value, convergents, mirror
from .counting import count_report, p2_brute, p2_formula, p2_kim, pF2
from .extended_farey import ef_orbit, ef_step, find_root, root_of
from .farey import binary_sequence, depth, farey_step, farey_tree, matrix_of
from .mapdef import MapDef, builtin_mapdef, load_mapdef
from .mcf_zoo import classify, map_orbit
from .partitions import Partition, conjugate, young_shape
from .triangle import tri_inv_0, tri_inv_1, tri_inv_D, tri_orbit, tri_step

__version__ = "0.1.0"

__all__ = [
    "MapDef",
    "Partition",
    "binary_sequence",
    "builtin_mapdef",
    "cf_expand",
    "cf_value",
    "classify",
    "conjugate",
    "convergents",
    "count_report",
    "depth",
    "ef_orbit",
    "ef_step",
    "farey_step",
    "farey_tree",
    "find_root",
    "load_mapdef",
    "map_orbit",
    "matrix_of",
    "mirror",
    "p2_brute",
    "p2_formula",
    "p2_kim",
    "pF2",
    "root_of",
    "tri_inv_0",
    "tri_inv_1",
    "tri_inv_D",
    "tri_orbit",
    "tri_step",
    "young_shape",
]
