"""Finite categories given by explicit composition tables."""

from .category import (
    UNDEFINED,
    FiniteCategory,
    Morphism,
    ValidationReport,
    Violation,
    check_functor,
    full_subcategory,
    opposite,
    thin_isomorphism,
    validate,
)
from .structure import (
    NotEpiError,
    Pushout,
    SupobjectClass,
    WellFoundedness,
    coimage,
    factors_through_epi,
    factors_through_mono,
    hom_count,
    hom_set,
    image,
    inverse,
    is_epi,
    is_extremal,
    is_extremal_epi,
    is_iso,
    is_mono,
    iso_classes,
    iso_representatives,
    maximal_supobjects,
    proper_supobjects,
    pushout,
    subobjects,
    supobjects,
    verify_pushout,
    well_founded_supobjects,
)
from .textformat import CategoryFormatError, dump_category, parse_category, read_category, write_category
