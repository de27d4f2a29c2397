//! Decision-rule acquisition.
//!
//! A decision rule pairs an object-oriented concept of the conditional
//! context with a concept of the decision context whose extent contains the
//! premise extent. Two families are supported:
//!
//! * **type I** — conclusions are formal concepts of the decision context:
//!   "an object with at least one premise attribute has every conclusion
//!   attribute";
//! * **type II** — conclusions are property-oriented concepts: "an object
//!   with at least one premise attribute has decision attributes only from
//!   the conclusion".
//!
//! A rule is *necessary* when no other rule implies it (wider premise,
//! narrower conclusion). Necessary rules are acquired without scanning the
//! full rule family, by classifying extents of one side:
//!
//! * [`necessary_i_rules_alg1`] / [`necessary_ii_rules_s1`] classify the
//!   conditional object-oriented extents by their decision image and emit
//!   one rule per class (premise = union of the class);
//! * [`necessary_i_rules_alg2`] / [`necessary_ii_rules_s2`] classify the
//!   decision extents by their conditional image (conclusion = intersection
//!   of the class) and never build the conditional lattice at all;
//! * [`necessary_ii_rules_via_complement`] reduces type II to type I over
//!   the complement decision context and maps conclusions back.
//!
//! All routes agree; [`necessary_rules_bruteforce`] keeps the minimal
//! elements of the full rule family under implication and serves as the
//! reference the fast paths are tested against.

use std::collections::{BTreeMap, BTreeSet};

use serde_json::{json, Value};

use crate::bitset::{AttributeSet, ObjectSet};
use crate::context::{set_labels, FormalDecisionContext};
use crate::error::{Error, Result};
use crate::lattice::{build_lattice, concept_text, Concept, ConceptKind};

/// The two supported rule families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleType {
    I,
    II,
}

impl RuleType {
    pub fn as_str(self) -> &'static str {
        match self {
            RuleType::I => "I",
            RuleType::II => "II",
        }
    }

    fn conclusion_kind(self) -> ConceptKind {
        match self {
            RuleType::I => ConceptKind::Formal,
            RuleType::II => ConceptKind::PropertyOriented,
        }
    }
}

/// Premise concept → conclusion concept.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DecisionRule {
    pub premise: Concept,
    pub conclusion: Concept,
    pub rule_type: RuleType,
}

/// Whether rules with an empty premise extent or a full conclusion extent
/// are admitted. Excluded by default: such rules carry no information.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RuleSetOptions {
    pub include_trivial: bool,
}

impl RuleSetOptions {
    pub fn including_trivial() -> Self {
        RuleSetOptions {
            include_trivial: true,
        }
    }

    fn admits(&self, premise_extent: &ObjectSet, conclusion_extent: &ObjectSet) -> bool {
        self.include_trivial || (!premise_extent.is_empty() && !conclusion_extent.is_full())
    }
}

/// `(premise)->(conclusion)` in compact label notation.
pub fn rule_text(rule: &DecisionRule, fdc: &FormalDecisionContext) -> String {
    format!(
        "{}->{}",
        concept_text(&rule.premise, fdc.objects(), fdc.conditional().attributes()),
        concept_text(&rule.conclusion, fdc.objects(), fdc.decision().attributes())
    )
}

/// JSON rendering of a rule list; `necessary` flags are supplied per rule.
pub fn rules_to_json(
    rules: &[DecisionRule],
    necessary: &[bool],
    fdc: &FormalDecisionContext,
) -> Value {
    assert_eq!(rules.len(), necessary.len());
    let objects = fdc.objects();
    let cond_attrs = fdc.conditional().attributes();
    let dec_attrs = fdc.decision().attributes();
    Value::Array(
        rules
            .iter()
            .zip(necessary)
            .map(|(r, &nec)| {
                json!({
                    "type": r.rule_type.as_str(),
                    "premise": {
                        "extent": set_labels(&r.premise.extent, objects),
                        "intent": set_labels(&r.premise.intent, cond_attrs),
                    },
                    "conclusion": {
                        "extent": set_labels(&r.conclusion.extent, objects),
                        "intent": set_labels(&r.conclusion.intent, dec_attrs),
                    },
                    "necessary": nec,
                })
            })
            .collect(),
    )
}

/// True when `by` implies `rule`: the premise of `by` is wider and its
/// conclusion narrower, so `rule` adds nothing. Rules of different types
/// are not comparable.
pub fn rule_implies(by: &DecisionRule, rule: &DecisionRule) -> Result<bool> {
    if by.rule_type != rule.rule_type {
        return Err(Error::InvalidArgument(
            "cannot compare rules of different types".into(),
        ));
    }
    Ok(implies_unchecked(by, rule))
}

fn implies_unchecked(by: &DecisionRule, rule: &DecisionRule) -> bool {
    rule.premise.extent.is_subset(&by.premise.extent)
        && by.premise.extent.is_subset(&by.conclusion.extent)
        && by.conclusion.extent.is_subset(&rule.conclusion.extent)
}

/// How many concepts an acquisition run materialised on each side.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AcquisitionStats {
    pub conditional_concepts: usize,
    pub decision_concepts: usize,
}

/// Rules plus the cost accounting of the run.
#[derive(Debug, Clone)]
pub struct Acquisition {
    pub rules: Vec<DecisionRule>,
    pub stats: AcquisitionStats,
}

/// Every type-I rule: all pairs of a conditional object-oriented concept
/// and a formal decision concept with nested extents.
pub fn all_i_rules(fdc: &FormalDecisionContext, opts: RuleSetOptions) -> Vec<DecisionRule> {
    all_rules(fdc, RuleType::I, opts).rules
}

/// Every type-II rule: conclusions range over the property-oriented
/// concepts of the decision context.
pub fn all_ii_rules(fdc: &FormalDecisionContext, opts: RuleSetOptions) -> Vec<DecisionRule> {
    all_rules(fdc, RuleType::II, opts).rules
}

fn all_rules(fdc: &FormalDecisionContext, rule_type: RuleType, opts: RuleSetOptions) -> Acquisition {
    let premises = build_lattice(fdc.conditional(), ConceptKind::ObjectOriented);
    let conclusions = build_lattice(fdc.decision(), rule_type.conclusion_kind());
    let mut rules = Vec::new();
    for premise in premises.concepts() {
        for conclusion in conclusions.concepts() {
            if premise.extent.is_subset(&conclusion.extent)
                && opts.admits(&premise.extent, &conclusion.extent)
            {
                rules.push(DecisionRule {
                    premise: premise.clone(),
                    conclusion: conclusion.clone(),
                    rule_type,
                });
            }
        }
    }
    rules.sort();
    Acquisition {
        rules,
        stats: AcquisitionStats {
            conditional_concepts: premises.len(),
            decision_concepts: conclusions.len(),
        },
    }
}

/// The four extent classifications used by the acquisition algorithms.
///
/// * `R1` — conditional object-oriented extents grouped by common intent
///   under `up` in the decision context;
/// * `R2` — formal decision extents grouped by common image under
///   `box_obj` in the conditional context;
/// * `S1` — conditional object-oriented extents grouped by common image
///   under `diamond_obj` in the decision context;
/// * `S2` — property-oriented decision extents grouped by common image
///   under `box_obj` in the conditional context.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtentRelation {
    R1,
    R2,
    S1,
    S2,
}

impl ExtentRelation {
    pub fn as_str(self) -> &'static str {
        match self {
            ExtentRelation::R1 => "R1",
            ExtentRelation::R2 => "R2",
            ExtentRelation::S1 => "S1",
            ExtentRelation::S2 => "S2",
        }
    }
}

/// One equivalence class: the shared image and the extents carrying it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtentClass {
    pub image: AttributeSet,
    pub members: Vec<ObjectSet>,
}

/// A full classification of an extent family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtentPartition {
    pub relation: ExtentRelation,
    pub classes: Vec<ExtentClass>,
}

/// Partitions the relevant extent family of `fdc` under the given relation.
/// Classes are ordered by image, members canonically within each class.
pub fn partition_extents(fdc: &FormalDecisionContext, relation: ExtentRelation) -> ExtentPartition {
    let cond = fdc.conditional();
    let dec = fdc.decision();
    let (extents, image): (Vec<ObjectSet>, Box<dyn Fn(&ObjectSet) -> AttributeSet>) = match relation
    {
        ExtentRelation::R1 => (
            build_lattice(cond, ConceptKind::ObjectOriented).extents(),
            Box::new(|o| dec.up(o)),
        ),
        ExtentRelation::S1 => (
            build_lattice(cond, ConceptKind::ObjectOriented).extents(),
            Box::new(|o| dec.diamond_obj(o)),
        ),
        ExtentRelation::R2 => (
            build_lattice(dec, ConceptKind::Formal).extents(),
            Box::new(|o| cond.box_obj(o)),
        ),
        ExtentRelation::S2 => (
            build_lattice(dec, ConceptKind::PropertyOriented).extents(),
            Box::new(|o| cond.box_obj(o)),
        ),
    };
    let mut classes: BTreeMap<AttributeSet, Vec<ObjectSet>> = BTreeMap::new();
    for extent in extents {
        classes.entry(image(&extent)).or_default().push(extent);
    }
    ExtentPartition {
        relation,
        classes: classes
            .into_iter()
            .map(|(image, members)| ExtentClass { image, members })
            .collect(),
    }
}

/// Necessary type-I rules by classifying the conditional side.
///
/// Object-oriented extents sharing the same decision intent collapse to one
/// rule whose premise is the union of the class; the conclusion is the
/// formal decision concept generated by that intent.
pub fn necessary_i_rules_alg1(fdc: &FormalDecisionContext, opts: RuleSetOptions) -> Acquisition {
    let cond = fdc.conditional();
    let dec = fdc.decision();
    let lattice = build_lattice(cond, ConceptKind::ObjectOriented);
    let stats = AcquisitionStats {
        conditional_concepts: lattice.len(),
        decision_concepts: 0,
    };

    let mut unions: BTreeMap<AttributeSet, ObjectSet> = BTreeMap::new();
    for concept in lattice.concepts() {
        unions
            .entry(dec.up(&concept.extent))
            .and_modify(|u| u.union_with(&concept.extent))
            .or_insert_with(|| concept.extent.clone());
    }

    let mut rules = BTreeSet::new();
    for (image, union) in unions {
        // The union of a class is itself a member of the class.
        debug_assert_eq!(dec.up(&union), image);
        debug_assert_eq!(cond.diamond_attr(&cond.box_obj(&union)), union);
        let conclusion_extent = dec.down(&image);
        if !opts.admits(&union, &conclusion_extent) {
            continue;
        }
        rules.insert(DecisionRule {
            premise: Concept {
                intent: cond.box_obj(&union),
                extent: union,
                kind: ConceptKind::ObjectOriented,
            },
            conclusion: Concept {
                extent: conclusion_extent,
                intent: image,
                kind: ConceptKind::Formal,
            },
            rule_type: RuleType::I,
        });
    }
    Acquisition {
        rules: rules.into_iter().collect(),
        stats,
    }
}

/// Necessary type-I rules by classifying the decision side.
///
/// Formal decision extents sharing the same conditional image collapse to
/// one rule whose conclusion is the intersection of the class. The premise
/// is rebuilt from the shared image, so the conditional lattice is never
/// constructed.
pub fn necessary_i_rules_alg2(fdc: &FormalDecisionContext, opts: RuleSetOptions) -> Acquisition {
    let cond = fdc.conditional();
    let dec = fdc.decision();
    let lattice = build_lattice(dec, ConceptKind::Formal);
    let stats = AcquisitionStats {
        conditional_concepts: 0,
        decision_concepts: lattice.len(),
    };

    let mut intersections: BTreeMap<AttributeSet, ObjectSet> = BTreeMap::new();
    for concept in lattice.concepts() {
        intersections
            .entry(cond.box_obj(&concept.extent))
            .and_modify(|v| v.intersect_with(&concept.extent))
            .or_insert_with(|| concept.extent.clone());
    }

    let mut rules = BTreeSet::new();
    for (image, intersection) in intersections {
        // The intersection of a class is itself a member of the class.
        debug_assert_eq!(cond.box_obj(&intersection), image);
        debug_assert_eq!(dec.down(&dec.up(&intersection)), intersection);
        let premise_extent = cond.diamond_attr(&image);
        if !opts.admits(&premise_extent, &intersection) {
            continue;
        }
        rules.insert(DecisionRule {
            premise: Concept {
                extent: premise_extent,
                intent: image,
                kind: ConceptKind::ObjectOriented,
            },
            conclusion: Concept {
                intent: dec.up(&intersection),
                extent: intersection,
                kind: ConceptKind::Formal,
            },
            rule_type: RuleType::I,
        });
    }
    Acquisition {
        rules: rules.into_iter().collect(),
        stats,
    }
}

/// Necessary type-II rules by classifying the conditional side; the image
/// is taken under `diamond_obj` and conclusions are property-oriented.
pub fn necessary_ii_rules_s1(fdc: &FormalDecisionContext, opts: RuleSetOptions) -> Acquisition {
    let cond = fdc.conditional();
    let dec = fdc.decision();
    let lattice = build_lattice(cond, ConceptKind::ObjectOriented);
    let stats = AcquisitionStats {
        conditional_concepts: lattice.len(),
        decision_concepts: 0,
    };

    let mut unions: BTreeMap<AttributeSet, ObjectSet> = BTreeMap::new();
    for concept in lattice.concepts() {
        unions
            .entry(dec.diamond_obj(&concept.extent))
            .and_modify(|u| u.union_with(&concept.extent))
            .or_insert_with(|| concept.extent.clone());
    }

    let mut rules = BTreeSet::new();
    for (image, union) in unions {
        debug_assert_eq!(dec.diamond_obj(&union), image);
        let conclusion_extent = dec.box_attr(&image);
        if !opts.admits(&union, &conclusion_extent) {
            continue;
        }
        rules.insert(DecisionRule {
            premise: Concept {
                intent: cond.box_obj(&union),
                extent: union,
                kind: ConceptKind::ObjectOriented,
            },
            conclusion: Concept {
                extent: conclusion_extent,
                intent: image,
                kind: ConceptKind::PropertyOriented,
            },
            rule_type: RuleType::II,
        });
    }
    Acquisition {
        rules: rules.into_iter().collect(),
        stats,
    }
}

/// Necessary type-II rules by classifying the property-oriented decision
/// side; dual of [`necessary_ii_rules_s1`], never builds the conditional
/// lattice.
pub fn necessary_ii_rules_s2(fdc: &FormalDecisionContext, opts: RuleSetOptions) -> Acquisition {
    let cond = fdc.conditional();
    let dec = fdc.decision();
    let lattice = build_lattice(dec, ConceptKind::PropertyOriented);
    let stats = AcquisitionStats {
        conditional_concepts: 0,
        decision_concepts: lattice.len(),
    };

    let mut intersections: BTreeMap<AttributeSet, ObjectSet> = BTreeMap::new();
    for concept in lattice.concepts() {
        intersections
            .entry(cond.box_obj(&concept.extent))
            .and_modify(|v| v.intersect_with(&concept.extent))
            .or_insert_with(|| concept.extent.clone());
    }

    let mut rules = BTreeSet::new();
    for (image, intersection) in intersections {
        debug_assert_eq!(cond.box_obj(&intersection), image);
        let premise_extent = cond.diamond_attr(&image);
        if !opts.admits(&premise_extent, &intersection) {
            continue;
        }
        rules.insert(DecisionRule {
            premise: Concept {
                extent: premise_extent,
                intent: image,
                kind: ConceptKind::ObjectOriented,
            },
            conclusion: Concept {
                intent: dec.diamond_obj(&intersection),
                extent: intersection,
                kind: ConceptKind::PropertyOriented,
            },
            rule_type: RuleType::II,
        });
    }
    Acquisition {
        rules: rules.into_iter().collect(),
        stats,
    }
}

/// Necessary type-II rules via the complement decision context: acquire
/// necessary type-I rules of the complement and complement each conclusion
/// intent back. Premises and every extent are unchanged by the mapping.
pub fn necessary_ii_rules_via_complement(
    fdc: &FormalDecisionContext,
    opts: RuleSetOptions,
) -> Acquisition {
    let complement = fdc.complement_decision();
    let inner = necessary_i_rules_alg2(&complement, opts);
    let mut rules: Vec<DecisionRule> = inner
        .rules
        .into_iter()
        .map(|r| DecisionRule {
            premise: r.premise,
            conclusion: Concept {
                extent: r.conclusion.extent,
                intent: r.conclusion.intent.complement(),
                kind: ConceptKind::PropertyOriented,
            },
            rule_type: RuleType::II,
        })
        .collect();
    rules.sort();
    Acquisition {
        rules,
        stats: inner.stats,
    }
}

/// Reference implementation: enumerate the full rule family and drop every
/// rule implied by a distinct one. Intended for small contexts.
pub fn necessary_rules_bruteforce(
    fdc: &FormalDecisionContext,
    rule_type: RuleType,
    opts: RuleSetOptions,
) -> Acquisition {
    let all = all_rules(fdc, rule_type, opts);
    let rules: Vec<DecisionRule> = all
        .rules
        .iter()
        .filter(|r| {
            !all.rules
                .iter()
                .any(|other| other != *r && implies_unchecked(other, r))
        })
        .cloned()
        .collect();
    Acquisition {
        rules,
        stats: all.stats,
    }
}

/// Selector for [`necessary_rules`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    /// Classify the conditional side (type I).
    Alg1,
    /// Classify the decision side (type I).
    Alg2,
    /// Classify the conditional side (type II).
    S1,
    /// Classify the decision side (type II).
    S2,
    /// Route type II through the complement context.
    Complement,
    /// Minimal elements of the full rule family.
    BruteForce,
}

impl Algorithm {
    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::Alg1 => "alg1",
            Algorithm::Alg2 => "alg2",
            Algorithm::S1 => "s1",
            Algorithm::S2 => "s2",
            Algorithm::Complement => "complement",
            Algorithm::BruteForce => "bruteforce",
        }
    }
}

/// Dispatches to the selected acquisition algorithm, rejecting
/// algorithm/rule-type combinations that do not exist.
pub fn necessary_rules(
    fdc: &FormalDecisionContext,
    rule_type: RuleType,
    algorithm: Algorithm,
    opts: RuleSetOptions,
) -> Result<Acquisition> {
    match (algorithm, rule_type) {
        (Algorithm::Alg1, RuleType::I) => Ok(necessary_i_rules_alg1(fdc, opts)),
        (Algorithm::Alg2, RuleType::I) => Ok(necessary_i_rules_alg2(fdc, opts)),
        (Algorithm::S1, RuleType::II) => Ok(necessary_ii_rules_s1(fdc, opts)),
        (Algorithm::S2, RuleType::II) => Ok(necessary_ii_rules_s2(fdc, opts)),
        (Algorithm::Complement, RuleType::II) => Ok(necessary_ii_rules_via_complement(fdc, opts)),
        (Algorithm::BruteForce, _) => Ok(necessary_rules_bruteforce(fdc, rule_type, opts)),
        (alg, ty) => Err(Error::InvalidArgument(format!(
            "algorithm {} does not produce type-{} rules",
            alg.as_str(),
            ty.as_str()
        ))),
    }
}
