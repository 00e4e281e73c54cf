"""Deformed Dicke states on qudits.

Exact and floating-point construction of the symmetric deformed basis states,
closed-form entanglement entropy across every bipartition, and two-level
preparation circuits with OpenQASM 3 export. The heavy lifting lives in the
compiled extension; this package just re-exports its surface.
"""

from qdicke._core import (
    CommutationReport,
    Composition,
    Circuit,
    DeformationParam,
    EntropyCurve,
    FidelityReport,
    Gate,
    GateKind,
    GateParams,
    LaurentPoly,
    ResourceError,
    StateVector,
    SuiteResult,
    UnsupportedError,
    Word,
    all_pass,
    amplitude,
    build_block_I,
    build_pruned_U,
    build_U,
    build_W,
    dicke_operator,
    dicke_recursive,
    dicke_sum,
    dual_transform,
    entanglement_entropy,
    entropy_bruteforce,
    entropy_csv,
    entropy_csv_filename,
    entropy_curve,
    enumerate_cuts,
    export_qasm,
    format_report,
    gate_count,
    identity_word,
    index_to_word,
    inner_product,
    inversion_number,
    max_inversion,
    multiset_permutations,
    parse_qasm,
    prepare_and_verify,
    q_bracket,
    q_bracket_poly,
    q_factorial_poly,
    q_multinomial_log,
    q_multinomial_poly,
    report_json,
    reverse_composition,
    run_verification,
    schmidt_coefficient,
    schmidt_reconstruct,
    simulate,
    state_json,
    u_angles,
    verify_commutation,
    verify_inversion_identity,
    verify_q_vandermonde,
    weak_compositions,
    wire_of_letter,
    word_to_index,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
