"""Categories of join-interval classes over finite semidistributive lattices."""

from taucat._core import (
    CatalogEntry,
    Category,
    CategoryOptions,
    CellData,
    CheckResult,
    Congruence,
    ContractionReport,
    FunctorAnalysis,
    GroupPresentation,
    InducedFunctor,
    Interval,
    JoinIntervalClass,
    LabelledArrow,
    LabelledHasse,
    Lattice,
    LatticeError,
    Morphism,
    NerveData,
    PictureGroupHom,
    Relation,
    SemidistributivityReport,
    analyze,
    arrow_label,
    build_category,
    build_lattice,
    catalog_entries,
    catalog_make,
    categories_isomorphic,
    category_to_json,
    check_essential_image_morphisms,
    check_faithful,
    check_full,
    check_image_generates,
    check_reflects_composition,
    check_surjective_on_objects,
    complete_signed_sequences,
    completely_join_irreducibles,
    compose,
    congruence_from_contractions,
    congruence_from_json,
    congruence_from_partition,
    contracted_labels,
    cw_f_vector,
    dot_hasse,
    dot_quiver,
    enumerate_join_interval_classes,
    full_object,
    hom_set,
    induced_functor,
    interval_atoms,
    interval_elements,
    interval_label_set,
    is_irreducible,
    is_join_interval,
    is_semidistributive,
    label_correspondence,
    label_preserving_iso,
    labelled_hasse,
    lattice_from_json,
    lattice_isomorphic,
    lattice_to_json,
    lift_interval,
    lift_interval_within,
    make_boolean,
    make_chain,
    make_m3,
    make_pentagon,
    make_product,
    make_tamari,
    make_weak_order,
    nerve_export,
    object_rank,
    picture_group,
    picture_group_hom,
    presentation_to_text,
    relations_match,
    signed_sequences,
    zero_object,
)

__all__ = [name for name in dir() if not name.startswith("_")]
