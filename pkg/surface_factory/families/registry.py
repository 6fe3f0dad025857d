from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Optional

from surface_factory.families.binomial import build_binomial
from surface_factory.families.closed import build_closed_c
from surface_factory.families.errors import ParameterOutOfRange, UnknownFamily
from surface_factory.families.layered import build_fib_lst
from surface_factory.families.path import build_path
from surface_factory.families.tables import build_e, build_g
from surface_factory.families.tree import build_tree_step
from surface_factory.triangulation.triangulation import Triangulation
from surface_factory.utils.utils import log

BuildFamilyFunc = Callable[[int], Triangulation]


class FamilyKind:
    BINOMIAL = "binomial"
    PATH = "path"
    FIB_LST = "lst-fib"
    G = "g11"
    E = "plug-e"
    CLOSED_C = "closed-c"
    TREE_STEP = "tree-step"


# families that exist for exactly one size
FIXED_SIZES = {FamilyKind.G: 11, FamilyKind.E: 4}


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    # number of tetrahedra, except tree-step where it is the number of doubling steps applied to G
    n: Optional[int] = None

    def resolved_n(self) -> int:
        if self.kind in FIXED_SIZES:
            fixed = FIXED_SIZES[self.kind]
            if self.n is not None and self.n != fixed:
                raise ParameterOutOfRange(f"family {self.kind} only exists for n = {fixed}, got {self.n}")
            return fixed
        if self.n is None:
            raise ParameterOutOfRange(f"family {self.kind} needs a parameter")
        return self.n

    def __str__(self) -> str:
        return f"{self.kind}({self.resolved_n()})"


def _fixed(builder: Callable[[], Triangulation]) -> BuildFamilyFunc:
    def build(_n: int) -> Triangulation:
        return builder()

    return build


class FamilyContext:
    def __init__(self):
        self.family_registry: Dict[str, BuildFamilyFunc] = dict()


GLOBAL_FAMILY_CONTEXT: Optional[FamilyContext] = None


def family_context() -> FamilyContext:
    global GLOBAL_FAMILY_CONTEXT
    if GLOBAL_FAMILY_CONTEXT is None:
        GLOBAL_FAMILY_CONTEXT = FamilyContext()
        register_default_families(GLOBAL_FAMILY_CONTEXT.family_registry)
    return GLOBAL_FAMILY_CONTEXT


def reset_family_context() -> None:
    global GLOBAL_FAMILY_CONTEXT
    GLOBAL_FAMILY_CONTEXT = None


def global_family_registry() -> Dict[str, BuildFamilyFunc]:
    return family_context().family_registry


def register_family(name: str, build_func: BuildFamilyFunc) -> None:
    """
    Register a callable that builds a member of a family.
    build_func is called with the resolved family parameter and must return a Triangulation,
    raising ParameterOutOfRange for parameters the family does not cover.
    """
    registry = global_family_registry()

    if name in registry:
        log.warning(f"Family {name} already registered, overwriting...")

    assert callable(build_func), f"{build_func=} must be callable"

    registry[name] = build_func


def register_default_families(registry: Dict[str, BuildFamilyFunc]) -> None:
    registry[FamilyKind.BINOMIAL] = build_binomial
    registry[FamilyKind.PATH] = build_path
    registry[FamilyKind.FIB_LST] = build_fib_lst
    registry[FamilyKind.G] = _fixed(build_g)
    registry[FamilyKind.E] = _fixed(build_e)
    registry[FamilyKind.CLOSED_C] = build_closed_c
    registry[FamilyKind.TREE_STEP] = build_tree_step


def family_names():
    return sorted(global_family_registry().keys())


def build_family(spec: FamilySpec) -> Triangulation:
    registry = global_family_registry()

    if spec.kind not in registry:
        msg = f"Family {spec.kind} is not registered. See register_family()!"
        log.error(msg)
        log.debug(f"Registered families: {list(registry.keys())}")
        raise UnknownFamily(msg)

    n = spec.resolved_n()
    t = registry[spec.kind](n)
    log.debug("Built %s: %d tetrahedra, %d boundary faces", spec, t.n, len(t.boundary_faces()))
    return t
