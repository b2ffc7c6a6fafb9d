"""Deciding and enumerating realizable alternation data."""

from brunnian.realizability.adjacency import AdjacencyReport, adjacency_classes
from brunnian.realizability.chords import ChordArrangement, Endpoint
from brunnian.realizability.engines import (ENGINES, Verdict, check_block, check_matrix,
                                            enumerate_chord_engine,
                                            enumerate_constraint_engine,
                                            enumerate_sequence_engine, witness_search)
from brunnian.realizability.plan import (ConstructionPlan, PlanStep, construction_plan,
                                         plan_to_matrix)

__all__ = [
    "AdjacencyReport", "ChordArrangement", "ConstructionPlan", "ENGINES", "Endpoint",
    "PlanStep", "Verdict", "adjacency_classes", "check_block", "check_matrix",
    "construction_plan", "enumerate_chord_engine", "enumerate_constraint_engine",
    "enumerate_sequence_engine", "plan_to_matrix", "witness_search",
]
