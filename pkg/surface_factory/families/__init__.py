from surface_factory.families.binomial import build_binomial
from surface_factory.families.closed import build_closed_c
from surface_factory.families.errors import NoClosingMap, ParameterOutOfRange, PreconditionViolated, UnknownFamily
from surface_factory.families.layered import LayeredSolidTorus, build_fib_lst, build_lst, fibonacci
from surface_factory.families.path import build_path
from surface_factory.families.registry import (
    FamilyKind,
    FamilySpec,
    build_family,
    family_names,
    global_family_registry,
    register_family,
)
from surface_factory.families.tables import build_e, build_g
from surface_factory.families.tree import (
    TreeContext,
    free_tetrahedron_context,
    g_context,
    tree_chain,
    tree_extend,
)
