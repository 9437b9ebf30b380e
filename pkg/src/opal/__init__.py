"""Machine checks for monoidal coherence, underlying multicategories, and
the free permutative strictification, on fully decidable word instances."""

from .adjunction import (counit_eps, free_permutative_functor,
                         lax_naturality_cell, nu_natural, triangle_checks,
                         unit_eta)
from .config import SuiteConfig, load_config
from .errors import ConfigError, StructuralError
from .freeperm import FreePermutative, LMorphism, free_permutative
from .functors import (LaxSMF, check_lax_coherence, compose_lax, identity_lax,
                       inflate_strict, lax_to_multifunctor,
                       multifunctor_to_lax, pad_strong, xi_tower)
from .hcat import H, HCategory, HMorphism, h_instance
from .multicat import (MultiArrow, Multifunctor, UnderlyingMulticategory,
                       canonical_iso, law_suite, underlying)
from .operad_y import (DEFAULT_KAPPA, EXOTIC_KAPPA, RIGHT_NESTED_KAPPA,
                       KappaFamily, YObject, act_y, default_kappa,
                       exotic_kappa, gamma_y, generators, kappa_from_file,
                       right_nested_kappa, y_objects)
from .perms import Perm, all_perms, block_perm, block_sum, transpose_blocks
from .shapes import (LEAF, Z_ATOM, Z_UNIT, ZObject, enumerate_parens,
                     gamma_z, tensor_z, z_objects)
from .smc import (SmcInstance, eval_can_iso, eval_obj, eval_obj_mor,
                  left_nested_obj, normal_iso)

__version__ = "0.1.0"
