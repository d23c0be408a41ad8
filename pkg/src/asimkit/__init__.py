"""Standard translations and asimulations for modal intuitionistic logic.

Kripke models here carry three accessibility relations: the
intuitionistic order R and one relation each for box and diamond.  Four
clause systems give four semantics; each has a matching first-order
translation and a matching family of direction-tagged simulation
relations that preserve translated formulas one way.
"""

from .asimulation import (
    Asimulation,
    DirectedPair,
    SeqAsimulation,
    SeqPair,
    Verdict,
    Violation,
    asim_from_dict,
    asim_to_dict,
    check_asimulation,
    check_k_asimulation,
    distinguishing_formula,
    dump_asimulation,
    dump_seq_asimulation,
    load_asimulation,
    load_seq_asimulation,
    maximal_asimulation,
    seq_asim_from_dict,
    seq_asim_to_dict,
)
from .classes import (
    AXIOM_SETS,
    Counterexample,
    ModelClassSpec,
    kappa_invariance_test,
    load_axioms,
    modal_companion_search,
    satisfies_axioms,
)
from .genmod import (
    BOX_1,
    BOX_2,
    DIA_1,
    DIA_2,
    ConditionSchema,
    ModalitySignature,
    check_generated,
    gen_conditions,
    gen_st,
    parse_signature,
    print_signature,
)
from .harness import SUITE_NAMES, SuiteReport, invariance_test, run_suite, write_report
from .kripke import (
    KripkeStructure,
    PointedModel,
    dump_model,
    dumps_model,
    load_model,
    loads_model,
    model_from_dict,
    model_to_dict,
    random_model,
)
from .semantics import VARIANTS, Variant, eval_fol, eval_modal
from .syntax import (
    And,
    Bottom,
    Box,
    Diamond,
    Exists,
    FolAnd,
    FolBottom,
    FolImplies,
    FolOr,
    Forall,
    Implies,
    Or,
    ParseError,
    PredAtom,
    Prop,
    RelAtom,
    degree,
    format_fol,
    format_modal,
    free_vars,
    parse_fol,
    parse_modal,
    random_modal_formula,
)
from .translate import translate, translation_degree
from .types import (
    FormulaPool,
    TypeSet,
    canonical_asimulation,
    canonical_k_asimulation,
    complete_conjunction,
    enumerate_pool,
    make_pools,
    type_set,
)

__version__ = "0.1.0"

__all__ = [
    "AXIOM_SETS",
    "And",
    "Asimulation",
    "BOX_1",
    "BOX_2",
    "Bottom",
    "Box",
    "ConditionSchema",
    "Counterexample",
    "DIA_1",
    "DIA_2",
    "Diamond",
    "DirectedPair",
    "Exists",
    "FolAnd",
    "FolBottom",
    "FolImplies",
    "FolOr",
    "Forall",
    "FormulaPool",
    "Implies",
    "KripkeStructure",
    "ModalitySignature",
    "ModelClassSpec",
    "Or",
    "ParseError",
    "PointedModel",
    "PredAtom",
    "Prop",
    "RelAtom",
    "SUITE_NAMES",
    "SeqAsimulation",
    "SeqPair",
    "SuiteReport",
    "TypeSet",
    "VARIANTS",
    "Variant",
    "Verdict",
    "Violation",
    "asim_from_dict",
    "asim_to_dict",
    "canonical_asimulation",
    "canonical_k_asimulation",
    "check_asimulation",
    "check_generated",
    "check_k_asimulation",
    "complete_conjunction",
    "degree",
    "distinguishing_formula",
    "dump_asimulation",
    "dump_model",
    "dump_seq_asimulation",
    "dumps_model",
    "enumerate_pool",
    "eval_fol",
    "eval_modal",
    "format_fol",
    "format_modal",
    "free_vars",
    "gen_conditions",
    "gen_st",
    "invariance_test",
    "kappa_invariance_test",
    "load_asimulation",
    "load_axioms",
    "load_model",
    "load_seq_asimulation",
    "loads_model",
    "make_pools",
    "maximal_asimulation",
    "modal_companion_search",
    "model_from_dict",
    "model_to_dict",
    "parse_fol",
    "parse_modal",
    "parse_signature",
    "print_signature",
    "random_modal_formula",
    "random_model",
    "run_suite",
    "satisfies_axioms",
    "seq_asim_from_dict",
    "seq_asim_to_dict",
    "translate",
    "translation_degree",
    "type_set",
    "write_report",
]
