"""Argumentation-based decision making over dynamic argumentation frameworks."""

from .daf import (
    ArgStructure,
    Argument,
    ConflictRelation,
    DafInstance,
    DialecticalTree,
    Mark,
    Pref,
    ResourceCapError,
    WorkingSet,
    active_arguments,
    active_instance,
    defeats,
    dialectical_tree,
    enumerate_structures,
    is_coherent,
    is_warranted,
    is_well_formed,
    justified_conclusions,
    mark_skeptical,
    render_tree,
    structure_conflicts,
)
from .framework import (
    AbstractDecisionFramework,
    AlternativeSet,
    CriterionOrder,
    CriterionSet,
    DecisionRule,
    EpistemicComponent,
    acceptable_alternatives,
    build_epistemic,
    build_framework,
    build_working_set,
    dlits,
    instantiate_rules,
    is_applicable,
    pref_dlits,
    update_evidence,
)
from .lang import EvidenceSet, Literal, complement, lit, make_evidence
from .oracle import (
    ChoiceStructure,
    PreferenceRelation,
    c_star,
    full_choice_structure,
    is_rational,
    lex_preference,
    satisfies_warp,
)
from .scenario import (
    Event,
    Scenario,
    ScenarioError,
    apply_event,
    bundled,
    derive_evidence,
    load_events,
    load_scenario,
    read_scenario,
    replay,
    save_scenario,
    to_framework,
)

__version__ = "0.1.0"
