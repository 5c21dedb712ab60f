"""quiverorbit: orbit categories of repetitive quiver algebras.

Exact-arithmetic toolkit for monomial bound quiver algebras: build finite
windows of the repetitive category, present its jump automorphisms as finite
scalar data, decide when two orbit algebras are isomorphic as graded algebras
via the simple-cycle criterion, and materialize and verify the isomorphisms.
"""

from .algebra import (
    Algebra,
    DualBasis,
    NonAdmissibleError,
    Path,
    ScalingAuto,
    apply_auto,
    build_algebra,
    compose_autos,
    dual_pairing_action,
    has_no_nonzero_oriented_cycles,
    identity_auto,
    invert_auto,
    vertex_scaling_auto,
)
from .criterion import (
    Cocycle,
    Gauge,
    GaugePreconditionError,
    ObjectMismatchError,
    build_cocycle,
    build_gauge,
    check_cycle_condition,
    check_scaling_condition,
    extend_gauge,
    shift_gauge,
    window_gauge_failure,
)
from .orbit import (
    GradedAlgebra,
    GradedIso,
    JumpZeroError,
    build_orbit,
    graded_iso_from_gauge,
    orbit_window_bounds,
    twisted_extension,
    verify_graded_iso,
)
from .oracle import CycleInventory, all_cycles_pass, enumerate_all_cycles, structure_table
from .quiver import (
    Arrow,
    Cycle,
    Quiver,
    Step,
    Walk,
    cycle_value,
    cycles_equivalent,
    double_quiver,
    enumerate_simple_cycles,
    rotate_cycle,
    spanning_walks,
)
from .repetitive import (
    JumpAuto,
    NonzeroJumpError,
    RepetitiveWindow,
    WindowExitError,
    WinElt,
    base_automorphism,
    build_window,
    compose_jump,
    decompose,
    hat_lift,
    invert_jump,
    jump_power,
    level_scaling_auto,
    nakayama,
    nakayama_shift,
)

__version__ = "0.1.0"
