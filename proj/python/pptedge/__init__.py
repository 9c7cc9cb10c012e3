"""PPT entangled edge states on 3x3: catalog, separability criteria,
entanglement witnesses, and see-saw optimizers.

Functions taking ``input`` accept a catalog name (see ``catalog_names()``)
or the path of a JSON matrix file.
"""

from ._pptedge import (
    InapplicableError,
    InvalidStateError,
    LookupError,
    NotPsdError,
    NumericalError,
    ParseError,
    Witness,
    __version__,
    analyze,
    catalog_info,
    catalog_names,
    catalog_state,
    certify_edge,
    evaluate,
    exact_rank,
    exact_ranks,
    is_ppt,
    kernel_witness,
    min_product_expectation,
    min_schmidt2_expectation,
    numeric_rank,
    partial_transpose,
    read_matrix_file,
    realign,
    realignment_criterion,
    realignment_witness,
    schmidt2_evidence,
    schmidt_coefficients,
    shift_witness,
    trace_norm,
    write_witness,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
