"""Executable finite-model algebra of binary multirelations.

Relations are packed bit matrices, multirelations map each source element
to a canonical sorted set of subset masks.  On top of the core operations
sit the power-allegory layer (membership, power transpose, approximation,
image functor, monad constants), Peleg/Kleisli liftings and compositions,
the determinisation maps, seeded instance generators, a registry of
executable laws with counterexample shrinking, a term language and a CLI.
"""

from .errors import (
    ENUM_CAP,
    MASK_CAP,
    POW_CAP,
    EnumerationTooLarge,
    IdentityShapeMismatch,
    MaskTooWide,
    MultirelError,
    PowersetTooLarge,
    ShapeMismatch,
    TermSyntaxError,
    UnboundVariable,
    UnknownLaw,
)
from .rel import (
    Carrier,
    Rel,
    RelFlags,
    bits,
    classify_rel,
    domain,
    full_mask,
    is_subrel,
    pow_carrier,
    rel_bool,
    rel_compose,
    rel_const,
    rel_converse,
    residual,
    symmetric_quotient,
)
from .mrel import (
    MRel,
    PropertyFlags,
    classify_mrel,
    closure,
    convex,
    down,
    icap,
    icomp,
    icup,
    inner_bool,
    inner_dual,
    inner_union_family,
    is_submrel,
    mrel_bool,
    mrel_const,
    mrel_to_rel,
    nu,
    preorder,
    rel_to_mrel,
    split_terminal,
    tau,
    up,
)
from .power import (
    alpha,
    ccomp,
    eta,
    has_element_rel,
    image_functor,
    member_rel,
    monad_const,
    mu,
    omega,
    power_transpose,
)
from .peleg import (
    d_subrelations,
    kleisli_compose,
    kleisli_lift,
    odot,
    peleg_compose,
    peleg_compose_oracle,
    peleg_lift,
)
from .determinise import (
    FixpointReport,
    closed_repr,
    cofission,
    cofusion,
    determinise,
    fission,
    fixpoint_class,
    fusion,
)
from .generate import GenSpec, SplitMix64, count_matching, instances, mix64
from .dsl import Env, evaluate, parse, print_term
from .laws import Law, LawReport, Slot, check
from .registry import law_by_id, registry

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
