//! Rule mining and attribute reduction for formal decision contexts.
//!
//! A *formal context* is a binary table stating which objects possess which
//! attributes. A *formal decision context* splits the attributes into a
//! conditional side and a decision side over the same objects. From these
//! tables the crate derives:
//!
//! * the formal, object-oriented and property-oriented [concept
//!   lattices](lattice) of any context;
//! * [decision rules](rules) whose premises are object-oriented concepts of
//!   the conditional part — type I rules conclude with formal decision
//!   concepts, type II rules with property-oriented ones — together with
//!   the *necessary* (non-redundant) subsets of both families;
//! * [attribute reductions](reduction): minimal conditional attribute
//!   selections that preserve every decision rule, enumerated exactly via a
//!   discernibility matrix and minimal hitting sets.
//!
//! ```
//! use fdc_core::{parse_decision_context, ContextFormat, RuleSetOptions};
//!
//! let table = "\
//! ;a;b;c;d;e;f;d1;d2;d3
//! 1;1;0;0;0;0;0;1;0;0
//! 2;0;1;0;1;0;0;1;1;0
//! 3;1;0;1;0;1;0;1;1;0
//! 4;0;1;0;1;0;1;0;1;1
//! 5;1;1;1;0;0;0;1;1;0
//! ";
//! let fdc = parse_decision_context(table, ContextFormat::Csv, &["d1", "d2", "d3"])?;
//!
//! // Non-redundant type-I rules, e.g. "objects with c or e have d1 and d2".
//! let acquired = fdc_core::necessary_i_rules_alg2(&fdc, RuleSetOptions::default());
//! let texts: Vec<String> = acquired
//!     .rules
//!     .iter()
//!     .map(|r| fdc_core::rule_text(r, &fdc))
//!     .collect();
//! assert_eq!(texts[1], "(35,ce)->(235,d1d2)");
//!
//! // Minimal attribute selections that keep all of those rules derivable.
//! let reductions = fdc_core::i_reductions(&fdc)?;
//! assert_eq!(reductions.reductions.len(), 2);
//! # Ok::<(), fdc_core::Error>(())
//! ```
//!
//! All types are immutable after construction and safe to share across
//! threads. Every list the crate emits (concepts, rules, clauses,
//! reductions) is sorted by a fixed canonical order, so output is
//! byte-stable across runs and platforms.

pub mod bitset;
pub mod context;
pub mod error;
pub mod io;
pub mod lattice;
mod operators;
pub mod reduction;
pub mod rules;

pub use bitset::{AttributeSet, AttributeTag, IndexSet, ObjectSet, ObjectTag};
pub use context::{
    set_labels, set_text, CanonicityReport, CanonicityViolation, FormalContext,
    FormalDecisionContext,
};
pub use error::{Error, Result};
pub use io::{
    decision_to_csv, parse_context, parse_decision_context, sniff_format, to_burmeister, to_csv,
    ContextFormat,
};
pub use lattice::{
    build_lattice, build_lattice_via_complement, concept_of_extent, concept_text, Concept,
    ConceptKind, ConceptLattice,
};
pub use reduction::{
    discernibility_function, discernibility_matrix, i_reductions, ii_reductions, is_consistent_by_rules,
    is_i_consistent, is_i_consistent_by_witness, is_ii_consistent, minimal_dnf, premise_extent_family,
    reduction_to_json, ConsistencyChecker, DiscernibilityMatrix, ReductionResult, ATTRIBUTE_LIMIT,
};
pub use rules::{
    all_i_rules, all_ii_rules, necessary_i_rules_alg1, necessary_i_rules_alg2, necessary_ii_rules_s1,
    necessary_ii_rules_s2, necessary_ii_rules_via_complement, necessary_rules,
    necessary_rules_bruteforce, partition_extents, rule_implies, rule_text, rules_to_json,
    Acquisition, AcquisitionStats, Algorithm, DecisionRule, ExtentClass, ExtentPartition,
    ExtentRelation, RuleSetOptions, RuleType,
};
