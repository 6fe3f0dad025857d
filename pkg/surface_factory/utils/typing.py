from __future__ import annotations

import argparse
from typing import Tuple, Union

from surface_factory.utils.attr_dict import AttrDict

Config = Union[argparse.Namespace, AttrDict]

StatusCode = int

TetIndex = int
FaceIndex = int
VertexIndex = int

# (tetrahedron, face) slot of the gluing table
FaceKey = Tuple[TetIndex, FaceIndex]

# 7n non-negative integers, per tetrahedron (t0, t1, t2, t3, q01, q02, q03)
NormalVector = Tuple[int, ...]
