"""Nests, interlocking families and orderability of finite spaces, with
exact Fermat-real arithmetic."""
from .errors import CapacityError, InputError, NestlabError
from .space import (FiniteSpace, PointSet, SubsetFamily, Topology, are_homeomorphic,
                    enumerate_families, enumerate_nests, enumerate_topologies,
                    find_homeomorphism, generate_topology, is_clopen, is_connected)
from .nests import (OrderClass, Relation, SeparationKind, classify_order, dense_nest_criterion,
                    induced_order, intersection_trigger, is_dense_order, is_interlocking,
                    is_nest, reverse, scatters, separation_kind, union_witness)
from .orderability import (OrdinalProfile, VdwVerdict, cardinal_scatter_check,
                           interval_topology, neight, neight_search, order_topology,
                           ordinal_profile, ray_nests, transitive_probe, vdw_verdict)
from .products import (ProductSpace, function_space, is_weakly_t0, is_weakly_t1, point_nest,
                       preimage_nest, project_nest, projection_condition,
                       weak_separation_kind)
from .fermat import FermatReal, canonicalize, compare, lt_f, mul, sample_at, sample_order

__version__ = "0.1.0"
