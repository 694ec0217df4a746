"""ninfty: enumeration and classification of transfer systems on finite
subgroup lattices."""

from .lattice import (SubgroupLattice, TransferSystem, QuotientPoset,
                      LatticeError, ParseError, ValidationError,
                      load_lattice, serialize, lattice_from_order,
                      is_transfer_system, opposite, conjugacy_quotient)
from .groups import PermutationGroup, builtin, subgroup_lattice, GroupError
from .rubin import closure, poset_closure, find_basis, width
from .enumeration import (Kind, EnumerationStore, enumerate_systems,
                          complexity, generation_statistics,
                          maximally_generated, saturated_filter,
                          MemoryCapExceeded)
from .classify import (is_saturated, is_cosaturated, is_flat,
                       minimal_fibrant_subgroup, left_set, saturated_hull,
                       cosaturated_core, dual, complete_system, trivial_system)
from .model import (weak_equivalences, model_check, is_compatible, intervals,
                    weak_equivalence_types, ModelScan, PreconditionError)
from .report import (Pipeline, data_sheet, data_sheet_latex,
                     subgroup_dictionary, all_transfers_text, sage_poset,
                     edges_to_tikz)

__version__ = "0.1.0"
