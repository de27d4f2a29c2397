//! Attribute reduction that preserves decision rules.
//!
//! An attribute selection `E` is *consistent* when every rule of the full
//! context is implied by a rule of the subcontext restricted to `E`; a
//! *reduction* is a minimal consistent selection. Consistency has four
//! equivalent characterisations, all implemented here and tested against
//! each other:
//!
//! 1. the rule-cover definition ([`is_consistent_by_rules`]);
//! 2. an extent-witness form: between every nested premise/conclusion pair
//!    an extent of the subcontext must fit ([`is_i_consistent_by_witness`]);
//! 3. a closure form: every decision extent must reach the same
//!    object-oriented closure through `E` as through the full attribute set
//!    ([`is_i_consistent`] — the production test);
//! 4. a combinatorial form: `E` must intersect every entry of the
//!    [`DiscernibilityMatrix`].
//!
//! Form 4 turns reduction into clause satisfaction: the non-empty matrix
//! entries are CNF clauses, and the minimal hitting sets of those clauses
//! ([`minimal_dnf`]) are exactly the reductions. Type-II rules reduce to
//! type I over the complement decision context, so [`ii_reductions`] is a
//! one-liner on top of [`i_reductions`].

use std::collections::{BTreeMap, BTreeSet};

use serde_json::{json, Value};

use crate::bitset::{AttributeSet, ObjectSet};
use crate::context::{set_labels, set_text, FormalContext, FormalDecisionContext};
use crate::error::{Error, Result};
use crate::lattice::{build_lattice, concept_text, ConceptKind, ConceptLattice};
use crate::rules::RuleType;

/// Hard cap for exact minimal-DNF enumeration.
pub const ATTRIBUTE_LIMIT: usize = 24;

/// The premise extents of necessary type-I rules: the object-oriented
/// closures of the formal decision extents.
pub fn premise_extent_family(fdc: &FormalDecisionContext) -> BTreeSet<ObjectSet> {
    let cond = fdc.conditional();
    build_lattice(fdc.decision(), ConceptKind::Formal)
        .extents()
        .iter()
        .map(|y| cond.diamond_attr(&cond.box_obj(y)))
        .collect()
}

fn validate_selection(fdc: &FormalDecisionContext, selection: &AttributeSet) -> Result<()> {
    if selection.universe() != fdc.conditional().attribute_count() {
        return Err(Error::InvalidArgument(
            "attribute selection built against a different context".into(),
        ));
    }
    if selection.is_empty() {
        return Err(Error::InvalidArgument(
            "attribute selection is empty".into(),
        ));
    }
    Ok(())
}

/// Reusable closure-form consistency test (characterisation 3).
///
/// Precomputes, per decision extent `Y`, the conditional image `box_obj(Y)`
/// and its closure; a selection is consistent iff restricting the image to
/// the selection reaches the same closure. Restricted operators never
/// materialise a subcontext: `box` over `E` is `box` over `M` ∩ `E`, and
/// `diamond` is unchanged.
pub struct ConsistencyChecker<'a> {
    conditional: &'a FormalContext,
    /// Distinct decision-extent images with their full closures.
    images: Vec<(AttributeSet, ObjectSet)>,
}

impl<'a> ConsistencyChecker<'a> {
    pub fn new(fdc: &'a FormalDecisionContext) -> Self {
        let conditional = fdc.conditional();
        let mut seen = BTreeSet::new();
        let mut images = Vec::new();
        for y in build_lattice(fdc.decision(), ConceptKind::Formal).extents() {
            let image = conditional.box_obj(&y);
            if seen.insert(image.clone()) {
                let closure = conditional.diamond_attr(&image);
                images.push((image, closure));
            }
        }
        ConsistencyChecker {
            conditional,
            images,
        }
    }

    /// Evaluates the closure condition; the empty selection is permitted
    /// here (it is consistent only for an all-false conditional part).
    pub fn is_consistent(&self, selection: &AttributeSet) -> bool {
        self.images.iter().all(|(image, closure)| {
            &self
                .conditional
                .diamond_attr(&image.intersection(selection)) == closure
        })
    }
}

/// Type-I consistency via the closure characterisation.
pub fn is_i_consistent(fdc: &FormalDecisionContext, selection: &AttributeSet) -> Result<bool> {
    validate_selection(fdc, selection)?;
    Ok(ConsistencyChecker::new(fdc).is_consistent(selection))
}

/// Type-II consistency: type-I consistency over the complement decision
/// context.
pub fn is_ii_consistent(fdc: &FormalDecisionContext, selection: &AttributeSet) -> Result<bool> {
    validate_selection(fdc, selection)?;
    Ok(ConsistencyChecker::new(&fdc.complement_decision()).is_consistent(selection))
}

/// Object-oriented extents of the subcontext restricted to `selection`:
/// all unions of the selected columns. Independent of the lattice
/// enumerator; the empty selection yields only the empty extent.
fn restricted_object_extents(
    conditional: &FormalContext,
    selection: &AttributeSet,
) -> Vec<ObjectSet> {
    let columns: Vec<&ObjectSet> = selection.iter().map(|a| conditional.column(a)).collect();
    union_closure(conditional.object_count(), &columns)
}

fn union_closure(universe: usize, columns: &[&ObjectSet]) -> Vec<ObjectSet> {
    let mut seen = BTreeSet::new();
    let mut frontier = vec![ObjectSet::empty(universe)];
    seen.insert(ObjectSet::empty(universe));
    while let Some(current) = frontier.pop() {
        for column in columns {
            let next = current.union(column);
            if seen.insert(next.clone()) {
                frontier.push(next);
            }
        }
    }
    seen.into_iter().collect()
}

fn intersection_closure(universe: usize, columns: &[ObjectSet]) -> Vec<ObjectSet> {
    let mut seen = BTreeSet::new();
    let mut frontier = vec![ObjectSet::full(universe)];
    seen.insert(ObjectSet::full(universe));
    while let Some(current) = frontier.pop() {
        for column in columns {
            let next = current.intersection(column);
            if seen.insert(next.clone()) {
                frontier.push(next);
            }
        }
    }
    seen.into_iter().collect()
}

/// Extent-witness consistency (characterisation 2), contract-free: for
/// every conditional object-oriented extent `O` and decision extent `Y`
/// with `O ⊆ Y`, some extent of the subcontext must lie between them.
pub fn i_consistency_by_witness_unchecked(
    fdc: &FormalDecisionContext,
    selection: &AttributeSet,
) -> bool {
    let cond = fdc.conditional();
    let premise_extents = build_lattice(cond, ConceptKind::ObjectOriented).extents();
    let conclusion_extents = build_lattice(fdc.decision(), ConceptKind::Formal).extents();
    let witnesses = restricted_object_extents(cond, selection);
    pairs_covered(&premise_extents, &conclusion_extents, &witnesses)
}

/// Validated wrapper around [`i_consistency_by_witness_unchecked`].
pub fn is_i_consistent_by_witness(
    fdc: &FormalDecisionContext,
    selection: &AttributeSet,
) -> Result<bool> {
    validate_selection(fdc, selection)?;
    Ok(i_consistency_by_witness_unchecked(fdc, selection))
}

/// Rule-cover consistency (characterisation 1), contract-free.
///
/// The full rule family is every nested pair of a conditional
/// object-oriented extent and a conclusion extent (formal for type I,
/// property-oriented for type II); the pair is covered when the subcontext
/// offers a rule lying between — its premise an extent over `selection`,
/// its conclusion the covered rule's own conclusion. Extent families are
/// computed by plain union/intersection closure of the columns, not by the
/// lattice enumerator, so this doubles as an independent oracle.
pub fn consistency_by_rules_unchecked(
    fdc: &FormalDecisionContext,
    selection: &AttributeSet,
    rule_type: RuleType,
) -> bool {
    let cond = fdc.conditional();
    let n = fdc.object_count();
    let all_columns: Vec<&ObjectSet> = (0..cond.attribute_count()).map(|a| cond.column(a)).collect();
    let premise_extents = union_closure(n, &all_columns);
    let witnesses = restricted_object_extents(cond, selection);
    let decision = fdc.decision();
    let conclusion_extents = match rule_type {
        RuleType::I => intersection_closure(
            n,
            &(0..decision.attribute_count())
                .map(|a| decision.column(a).clone())
                .collect::<Vec<_>>(),
        ),
        RuleType::II => intersection_closure(
            n,
            &(0..decision.attribute_count())
                .map(|a| decision.column(a).complement())
                .collect::<Vec<_>>(),
        ),
    };
    pairs_covered(&premise_extents, &conclusion_extents, &witnesses)
}

/// Validated wrapper around [`consistency_by_rules_unchecked`].
pub fn is_consistent_by_rules(
    fdc: &FormalDecisionContext,
    selection: &AttributeSet,
    rule_type: RuleType,
) -> Result<bool> {
    validate_selection(fdc, selection)?;
    Ok(consistency_by_rules_unchecked(fdc, selection, rule_type))
}

fn pairs_covered(
    premises: &[ObjectSet],
    conclusions: &[ObjectSet],
    witnesses: &[ObjectSet],
) -> bool {
    for premise in premises {
        for conclusion in conclusions {
            if !premise.is_subset(conclusion) {
                continue;
            }
            let covered = witnesses
                .iter()
                .any(|w| premise.is_subset(w) && w.is_subset(conclusion));
            if !covered {
                return false;
            }
        }
    }
    true
}

/// Attribute sets discerning neighbouring object-oriented concepts.
///
/// An entry exists for every cover pair of the conditional object-oriented
/// lattice whose upper concept has its extent in the premise family; the
/// entry is the symmetric difference of the two intents (never empty,
/// since distinct concepts have distinct intents).
#[derive(Debug, Clone)]
pub struct DiscernibilityMatrix {
    lattice: ConceptLattice,
    premise_family: BTreeSet<ObjectSet>,
    entries: BTreeMap<(usize, usize), AttributeSet>,
}

impl DiscernibilityMatrix {
    /// The conditional object-oriented lattice the indices refer to.
    pub fn lattice(&self) -> &ConceptLattice {
        &self.lattice
    }

    pub fn premise_family(&self) -> &BTreeSet<ObjectSet> {
        &self.premise_family
    }

    /// Entries keyed by `(child index, parent index)` cover pairs.
    pub fn entries(&self) -> &BTreeMap<(usize, usize), AttributeSet> {
        &self.entries
    }

    pub fn entry(&self, child: usize, parent: usize) -> Option<&AttributeSet> {
        self.entries.get(&(child, parent))
    }

    /// True when the selection intersects every entry.
    pub fn is_hit_by(&self, selection: &AttributeSet) -> bool {
        self.entries.values().all(|d| !d.is_disjoint(selection))
    }

    /// Deduplicated, absorption-reduced entries: the CNF clauses of the
    /// discernibility function. A clause that contains another clause is
    /// dropped.
    pub fn clauses(&self) -> Vec<AttributeSet> {
        absorb(self.entries.values().cloned().collect())
    }

    /// Table rendering: one row per premise-family concept, one column per
    /// concept that it covers with a non-empty entry.
    pub fn to_text(&self, fdc: &FormalDecisionContext) -> String {
        let cond = fdc.conditional();
        let name = |i: usize| concept_text(self.lattice.concept(i), cond.objects(), cond.attributes());
        let rows: Vec<usize> = (0..self.lattice.len())
            .filter(|&i| self.premise_family.contains(&self.lattice.concept(i).extent))
            .collect();
        let mut columns: Vec<usize> = self.entries.keys().map(|&(child, _)| child).collect();
        columns.sort_unstable();
        columns.dedup();

        let mut grid: Vec<Vec<String>> = Vec::new();
        let mut header = vec![String::new()];
        header.extend(columns.iter().map(|&c| name(c)));
        grid.push(header);
        for &r in &rows {
            let mut line = vec![name(r)];
            for &c in &columns {
                line.push(match self.entries.get(&(c, r)) {
                    Some(d) => set_text(d, cond.attributes()),
                    None => String::new(),
                });
            }
            grid.push(line);
        }

        let width = |col: usize| grid.iter().map(|l| l[col].chars().count()).max().unwrap_or(0);
        let widths: Vec<usize> = (0..grid[0].len()).map(width).collect();
        let mut out = String::new();
        for line in &grid {
            let rendered: Vec<String> = line
                .iter()
                .enumerate()
                .map(|(i, cell)| {
                    let pad = widths[i].saturating_sub(cell.chars().count());
                    format!("{}{}", cell, " ".repeat(pad))
                })
                .collect();
            out.push_str(rendered.join("  ").trim_end());
            out.push('\n');
        }
        out
    }
}

/// Builds the discernibility matrix of the type-I reduction problem.
pub fn discernibility_matrix(fdc: &FormalDecisionContext) -> DiscernibilityMatrix {
    let lattice = build_lattice(fdc.conditional(), ConceptKind::ObjectOriented);
    let premise_family = premise_extent_family(fdc);
    let mut entries = BTreeMap::new();
    for &(child, parent) in lattice.covers() {
        if premise_family.contains(&lattice.concept(parent).extent) {
            let discern = lattice
                .concept(child)
                .intent
                .symmetric_difference(&lattice.concept(parent).intent);
            debug_assert!(!discern.is_empty(), "distinct concepts have distinct intents");
            entries.insert((child, parent), discern);
        }
    }
    DiscernibilityMatrix {
        lattice,
        premise_family,
        entries,
    }
}

/// The CNF clause list of the discernibility function.
pub fn discernibility_function(matrix: &DiscernibilityMatrix) -> Vec<AttributeSet> {
    matrix.clauses()
}

fn absorb(clauses: BTreeSet<AttributeSet>) -> Vec<AttributeSet> {
    // Canonical order puts subsets before supersets, so one forward pass
    // suffices.
    let mut kept: Vec<AttributeSet> = Vec::new();
    for clause in clauses {
        if !kept.iter().any(|k| k.is_subset(&clause)) {
            kept.push(clause);
        }
    }
    kept
}

fn prune_to_minimal(mut sets: Vec<AttributeSet>) -> Vec<AttributeSet> {
    sets.sort();
    sets.dedup();
    let mut kept: Vec<AttributeSet> = Vec::new();
    for set in sets {
        if !kept.iter().any(|k| k.is_subset(&set)) {
            kept.push(set);
        }
    }
    kept
}

/// All minimal hitting sets of a clause family over `{0..universe}`.
///
/// Clause-by-clause expansion with absorption. Zero clauses yield the
/// single empty hitting set (a vacuous conjunction constrains nothing); an
/// empty clause is unsatisfiable and reported as an error, as is a universe
/// beyond [`ATTRIBUTE_LIMIT`].
pub fn minimal_dnf(clauses: &[AttributeSet], universe: usize) -> Result<Vec<AttributeSet>> {
    if clauses.iter().any(|c| c.is_empty()) {
        return Err(Error::Unsatisfiable);
    }
    if clauses.is_empty() {
        return Ok(vec![AttributeSet::empty(universe)]);
    }
    if universe > ATTRIBUTE_LIMIT {
        return Err(Error::AttributeLimit {
            count: universe,
            limit: ATTRIBUTE_LIMIT,
        });
    }
    let clauses = absorb(clauses.iter().cloned().collect());
    let mut partial = vec![AttributeSet::empty(universe)];
    for clause in &clauses {
        let mut next = Vec::with_capacity(partial.len());
        for hitting in &partial {
            if !hitting.is_disjoint(clause) {
                next.push(hitting.clone());
            } else {
                for attr in clause.iter() {
                    let mut extended = hitting.clone();
                    extended.insert(attr);
                    next.push(extended);
                }
            }
        }
        partial = prune_to_minimal(next);
    }
    Ok(partial)
}

/// All reductions, their common core, and the clause list they hit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionResult {
    pub reductions: Vec<AttributeSet>,
    pub core: AttributeSet,
    pub clauses: Vec<AttributeSet>,
}

impl ReductionResult {
    /// True for the degenerate "no constraints" outcome, where the single
    /// empty reduction means no conditional attribute is needed.
    pub fn is_unconstrained(&self) -> bool {
        self.reductions.len() == 1 && self.reductions[0].is_empty()
    }
}

/// Type-I reductions via the discernibility pipeline.
pub fn i_reductions(fdc: &FormalDecisionContext) -> Result<ReductionResult> {
    let matrix = discernibility_matrix(fdc);
    let clauses = matrix.clauses();
    let m = fdc.conditional().attribute_count();
    let reductions = minimal_dnf(&clauses, m)?;
    let core = reductions
        .iter()
        .fold(AttributeSet::full(m), |acc, r| acc.intersection(r));
    Ok(ReductionResult {
        reductions,
        core,
        clauses,
    })
}

/// Type-II reductions: type-I reductions of the complement decision
/// context.
pub fn ii_reductions(fdc: &FormalDecisionContext) -> Result<ReductionResult> {
    i_reductions(&fdc.complement_decision())
}

/// JSON rendering of a reduction result using attribute labels.
pub fn reduction_to_json(result: &ReductionResult, fdc: &FormalDecisionContext) -> Value {
    let attrs = fdc.conditional().attributes();
    json!({
        "reductions": result
            .reductions
            .iter()
            .map(|r| set_labels(r, attrs))
            .collect::<Vec<_>>(),
        "core": set_labels(&result.core, attrs),
        "clauses": result
            .clauses
            .iter()
            .map(|c| set_labels(c, attrs))
            .collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::{parse_decision_context, ContextFormat};

    const TABLE: &str = "\
;a;b;c;d;e;f;d1;d2;d3
1;1;0;0;0;0;0;1;0;0
2;0;1;0;1;0;0;1;1;0
3;1;0;1;0;1;0;1;1;0
4;0;1;0;1;0;1;0;1;1
5;1;1;1;0;0;0;1;1;0
";

    fn sample() -> FormalDecisionContext {
        parse_decision_context(TABLE, ContextFormat::Csv, &["d1", "d2", "d3"]).unwrap()
    }

    fn objset(fdc: &FormalDecisionContext, labels: &[&str]) -> ObjectSet {
        fdc.conditional().object_set(labels).unwrap()
    }

    fn attrset(fdc: &FormalDecisionContext, labels: &[&str]) -> AttributeSet {
        fdc.conditional().attribute_set(labels).unwrap()
    }

    #[test]
    fn premise_family_of_sample() {
        let fdc = sample();
        let family = premise_extent_family(&fdc);
        let expected: BTreeSet<ObjectSet> = [
            objset(&fdc, &[]),
            objset(&fdc, &["4"]),
            objset(&fdc, &["3", "5"]),
            objset(&fdc, &["1", "3", "5"]),
            objset(&fdc, &["2", "3", "4", "5"]),
            objset(&fdc, &["1", "2", "3", "4", "5"]),
        ]
        .into_iter()
        .collect();
        assert_eq!(family, expected);
    }

    #[test]
    fn premise_family_of_complement() {
        let fdc = sample().complement_decision();
        let family = premise_extent_family(&fdc);
        let expected: BTreeSet<ObjectSet> = [
            objset(&fdc, &[]),
            objset(&fdc, &["4"]),
            objset(&fdc, &["1", "3", "5"]),
            objset(&fdc, &["1", "2", "3", "4", "5"]),
        ]
        .into_iter()
        .collect();
        assert_eq!(family, expected);
    }

    #[test]
    fn consistency_examples() {
        let fdc = sample();
        assert!(is_i_consistent(&fdc, &attrset(&fdc, &["a", "b", "c", "f"])).unwrap());
        assert!(is_i_consistent(&fdc, &fdc.conditional().full_attributes()).unwrap());
        assert!(!is_i_consistent(&fdc, &attrset(&fdc, &["a", "c", "f"])).unwrap());
        assert!(!is_consistent_by_rules(&fdc, &attrset(&fdc, &["e"]), RuleType::I).unwrap());
        assert!(is_i_consistent(&fdc, &attrset(&fdc, &[])).is_err());
    }

    #[test]
    fn matrix_reproduces_known_entries() {
        let fdc = sample();
        let matrix = discernibility_matrix(&fdc);
        let lattice = matrix.lattice();
        let idx = |labels: &[&str]| {
            lattice
                .index_of_extent(&objset(&fdc, labels))
                .expect("extent present")
        };
        let expected = [
            (&[][..], &["4"][..], &["f"][..]),
            (&["3"][..], &["3", "5"][..], &["c"][..]),
            (&["3", "5"][..], &["1", "3", "5"][..], &["a"][..]),
            (&["2", "3", "4"][..], &["2", "3", "4", "5"][..], &["b", "c"][..]),
            (&["2", "4", "5"][..], &["2", "3", "4", "5"][..], &["c", "e"][..]),
            (&["3", "4", "5"][..], &["2", "3", "4", "5"][..], &["b", "d"][..]),
            (&["1", "3", "4", "5"][..], &["1", "2", "3", "4", "5"][..], &["b", "d"][..]),
            (&["2", "3", "4", "5"][..], &["1", "2", "3", "4", "5"][..], &["a"][..]),
        ];
        assert_eq!(matrix.entries().len(), expected.len());
        for (child, parent, attrs) in expected {
            assert_eq!(
                matrix.entry(idx(child), idx(parent)),
                Some(&attrset(&fdc, attrs)),
                "entry for child {child:?} under parent {parent:?}"
            );
        }
    }

    #[test]
    fn clauses_absorb_supersets() {
        let fdc = sample();
        let matrix = discernibility_matrix(&fdc);
        let clauses = matrix.clauses();
        let expected = vec![
            attrset(&fdc, &["a"]),
            attrset(&fdc, &["c"]),
            attrset(&fdc, &["f"]),
            attrset(&fdc, &["b", "d"]),
        ];
        assert_eq!(clauses, expected);
    }

    #[test]
    fn minimal_dnf_on_known_clause_sets() {
        let fdc = sample();
        let m = fdc.conditional().attribute_count();
        let raw = vec![
            attrset(&fdc, &["f"]),
            attrset(&fdc, &["c"]),
            attrset(&fdc, &["a"]),
            attrset(&fdc, &["b", "c"]),
            attrset(&fdc, &["c", "e"]),
            attrset(&fdc, &["b", "d"]),
        ];
        let dnf = minimal_dnf(&raw, m).unwrap();
        assert_eq!(
            dnf,
            vec![attrset(&fdc, &["a", "b", "c", "f"]), attrset(&fdc, &["a", "c", "d", "f"])]
        );

        let complement_clauses = vec![
            attrset(&fdc, &["f"]),
            attrset(&fdc, &["a"]),
            attrset(&fdc, &["b", "d"]),
        ];
        let dnf = minimal_dnf(&complement_clauses, m).unwrap();
        assert_eq!(
            dnf,
            vec![attrset(&fdc, &["a", "b", "f"]), attrset(&fdc, &["a", "d", "f"])]
        );

        // Vacuous conjunction: the empty hitting set.
        assert_eq!(minimal_dnf(&[], m).unwrap(), vec![AttributeSet::empty(m)]);
        // Empty clause: unsatisfiable.
        assert!(matches!(
            minimal_dnf(&[AttributeSet::empty(m)], m),
            Err(Error::Unsatisfiable)
        ));
        // Guard against oversized universes.
        assert!(matches!(
            minimal_dnf(&[AttributeSet::singleton(30, 0)], 30),
            Err(Error::AttributeLimit { .. })
        ));
    }

    #[test]
    fn reductions_of_the_sample() {
        let fdc = sample();
        let result = i_reductions(&fdc).unwrap();
        assert_eq!(
            result.reductions,
            vec![attrset(&fdc, &["a", "b", "c", "f"]), attrset(&fdc, &["a", "c", "d", "f"])]
        );
        assert_eq!(result.core, attrset(&fdc, &["a", "c", "f"]));
        assert!(!result.is_unconstrained());

        let result = ii_reductions(&fdc).unwrap();
        assert_eq!(
            result.reductions,
            vec![attrset(&fdc, &["a", "b", "f"]), attrset(&fdc, &["a", "d", "f"])]
        );
        assert_eq!(result.core, attrset(&fdc, &["a", "f"]));
    }

    #[test]
    fn ii_consistency_routes_through_the_complement() {
        let fdc = sample();
        let e = attrset(&fdc, &["a", "b", "f"]);
        assert!(is_ii_consistent(&fdc, &e).unwrap());
        assert!(is_i_consistent(&fdc.complement_decision(), &e).unwrap());
        let too_small = attrset(&fdc, &["a", "f"]);
        assert!(!is_ii_consistent(&fdc, &too_small).unwrap());
    }

    #[test]
    fn no_constraints_yields_the_empty_reduction() {
        // All-false conditional incidence: the object-oriented lattice is
        // the single concept (∅,∅), so the matrix is empty and the sole
        // minimal "reduction" is the empty selection.
        let table = ";a;b;d1\n1;0;0;1\n2;0;0;0\n";
        let fdc = parse_decision_context(table, ContextFormat::Csv, &["d1"]).unwrap();
        let result = i_reductions(&fdc).unwrap();
        assert!(result.is_unconstrained());
        assert!(result.clauses.is_empty());
        assert!(result.core.is_empty());
    }

    #[test]
    fn matrix_text_layout_lists_premise_rows() {
        let fdc = sample();
        let matrix = discernibility_matrix(&fdc);
        let text = matrix.to_text(&fdc);
        assert!(text.contains("(4,f)"));
        assert!(text.contains("(12345,abcdef)"));
        // Premise rows in canonical order; (∅,∅) is in the family too.
        let first_data_line = text.lines().nth(1).unwrap();
        assert!(first_data_line.starts_with("(∅,∅)"));
        let second_data_line = text.lines().nth(2).unwrap();
        assert!(second_data_line.starts_with("(4,f)"));
    }
}
