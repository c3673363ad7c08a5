"""Graphs, vertex partitions, hom counting and canonical forms."""

from .canon import (
    CanonicalForm,
    Distinction,
    brute_force_isomorphic,
    canonical_form,
    canonical_key,
    distinguish,
    enumerate_graphs,
    graphs_on,
    hom_profile,
    is_isomorphic,
)
from .counting import (
    InexactDivisionError,
    PultrGraphReport,
    PultrGraphTerm,
    aut_count,
    hom_count,
    hom_maps,
    inclusion_exclusion_coefficients,
    inj_count_direct,
    inj_via_inclusion_exclusion,
    inj_via_mobius,
    maximal_quotients,
    pultr_identity_graphs,
    surj_count,
    vertex_surj_count,
)
from .graph import (
    DirectednessError,
    Graph,
    GraphFormatError,
    complete,
    cycle,
    dump_graph,
    empty,
    loop_vertex,
    parse_graph,
    path,
    read_graph,
    same_kind,
    write_graph,
)
from .partition import (
    Partition,
    block_count,
    blocks,
    canonical,
    discrete,
    from_blocks,
    is_partition,
    merge_pair,
    mobius,
    quotient,
    set_partitions,
)
from .partition import join as partition_join

mobius_partition = mobius
