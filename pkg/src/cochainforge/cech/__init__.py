from .complexes import (Cochain, CohomologySpace, GroupElement, RingMismatch,
                        SimplicialComplex, cochain_complex, cohomology_groups,
                        cup, cup_i, quotient_by_class, sq)
from .double import (DeligneCochain, DoubleCochain, dc_wedge, deligne_cup,
                     deligne_groups)
from .fgab import FGAbelianGroup, GroupHom, PresentedGroup
from .snf import smith_normal_form, solve, kernel_basis
