"""jumploci: exact jump loci of finitely presented groups.

Resonance and characteristic varieties, graded Malcev quotients, and the
obstruction battery for fundamental groups of normal complex varieties.
"""

from .exact import HAVE_COMPILED_KERNEL
from .fox import alexander_matrix, h1_dim_at, h1_dim_finite_character
from .graphs import SimpleGraph, parse_graph
from .lie import free_lie_dims, malcev_truncation, morgan_degree_check, relator_logs
from .magnus import cup_tensor, magnus_expand
from .charvar import charvar_ideal, charvar_member, exp_map, subtorus_verify
from .obstructions import ObstructionReport, raag_classify, run_battery
from .presentations import (
    ParseError,
    Presentation,
    Word,
    abelianization,
    cyclic_cover_presentation,
    direct_product,
    free_presentation,
    parse_presentation,
    raag_presentation,
    surface_presentation,
)
from .resonance import (
    LinearComponent,
    ResonanceLocus,
    SamplerConfig,
    resonance_components,
    resonance_member,
)

__version__ = "0.1.0"

__all__ = [
    "HAVE_COMPILED_KERNEL",
    "LinearComponent",
    "ObstructionReport",
    "ParseError",
    "Presentation",
    "ResonanceLocus",
    "SamplerConfig",
    "SimpleGraph",
    "Word",
    "abelianization",
    "alexander_matrix",
    "charvar_ideal",
    "charvar_member",
    "cup_tensor",
    "cyclic_cover_presentation",
    "direct_product",
    "exp_map",
    "free_lie_dims",
    "free_presentation",
    "h1_dim_at",
    "h1_dim_finite_character",
    "magnus_expand",
    "malcev_truncation",
    "morgan_degree_check",
    "parse_graph",
    "parse_presentation",
    "raag_classify",
    "raag_presentation",
    "relator_logs",
    "resonance_components",
    "resonance_member",
    "run_battery",
    "subtorus_verify",
    "surface_presentation",
]
