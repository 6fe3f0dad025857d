from surface_factory.census.errors import CensusTooLarge, InvalidCensusQuery
from surface_factory.census.face_pairings import CensusGraph, enumerate_census_graphs
from surface_factory.census.generator import CensusKind, CensusQuery, generate_census, search_graph
from surface_factory.census.runner import CensusEntry, CensusStats, aggregate_stats, make_runner, run_census
