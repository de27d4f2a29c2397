#![allow(dead_code)]

//! Shared fixture and independent oracles for the integration suites.
//!
//! The oracles deliberately avoid the library's enumeration machinery:
//! concepts are found by scanning all extent candidates, extent families by
//! plain union/intersection closure of columns. They are only usable on
//! small universes, which is all the test corpora need.

use fdc_core::{
    parse_decision_context, AttributeSet, ConceptKind, ContextFormat, FormalContext,
    FormalDecisionContext, ObjectSet,
};

pub const SAMPLE_TABLE: &str = "\
;a;b;c;d;e;f;d1;d2;d3
1;1;0;0;0;0;0;1;0;0
2;0;1;0;1;0;0;1;1;0
3;1;0;1;0;1;0;1;1;0
4;0;1;0;1;0;1;0;1;1
5;1;1;1;0;0;0;1;1;0
";

pub fn sample_fdc() -> FormalDecisionContext {
    parse_decision_context(SAMPLE_TABLE, ContextFormat::Csv, &["d1", "d2", "d3"]).unwrap()
}

pub fn objset(ctx: &FormalContext, labels: &[&str]) -> ObjectSet {
    ctx.object_set(labels).unwrap()
}

pub fn attrset(ctx: &FormalContext, labels: &[&str]) -> AttributeSet {
    ctx.attribute_set(labels).unwrap()
}

/// Every subset of the object universe, as `ObjectSet`s. Caller keeps the
/// universe small.
pub fn all_object_subsets(n: usize) -> Vec<ObjectSet> {
    assert!(n <= 16, "oracle only meant for tiny universes");
    (0u32..1 << n)
        .map(|mask| ObjectSet::from_indices(n, (0..n).filter(|&i| mask >> i & 1 == 1)))
        .collect()
}

/// Every subset of the attribute universe.
pub fn all_attribute_subsets(m: usize) -> Vec<AttributeSet> {
    assert!(m <= 16, "oracle only meant for tiny universes");
    (0u32..1 << m)
        .map(|mask| AttributeSet::from_indices(m, (0..m).filter(|&i| mask >> i & 1 == 1)))
        .collect()
}

/// Brute-force concept enumeration: test the closure condition on every
/// extent candidate.
pub fn brute_force_concepts(
    ctx: &FormalContext,
    kind: ConceptKind,
) -> Vec<(ObjectSet, AttributeSet)> {
    let mut out = Vec::new();
    for extent in all_object_subsets(ctx.object_count()) {
        let (closed, intent) = match kind {
            ConceptKind::Formal => {
                let intent = ctx.up(&extent);
                (ctx.down(&intent) == extent, intent)
            }
            ConceptKind::ObjectOriented => {
                let intent = ctx.box_obj(&extent);
                (ctx.diamond_attr(&intent) == extent, intent)
            }
            ConceptKind::PropertyOriented => {
                let intent = ctx.diamond_obj(&extent);
                (ctx.box_attr(&intent) == extent, intent)
            }
        };
        if closed {
            out.push((extent, intent));
        }
    }
    out.sort();
    out
}

/// Inclusion-minimal members of a family of attribute sets.
pub fn minimal_sets(mut sets: Vec<AttributeSet>) -> Vec<AttributeSet> {
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

/// Brute-force reduction search: all inclusion-minimal consistent
/// selections (the empty selection included as a candidate), judged by the
/// rule-cover oracle.
pub fn brute_force_reductions(
    fdc: &FormalDecisionContext,
    rule_type: fdc_core::RuleType,
) -> Vec<AttributeSet> {
    let consistent: Vec<AttributeSet> =
        all_attribute_subsets(fdc.conditional().attribute_count())
            .into_iter()
            .filter(|e| fdc_core::reduction::consistency_by_rules_unchecked(fdc, e, rule_type))
            .collect();
    minimal_sets(consistent)
}

/// Deterministic corpus of decision contexts spanning the size grid used
/// by the acceptance criteria.
pub fn random_corpus(count: usize) -> Vec<FormalDecisionContext> {
    let densities = [0.2, 0.4, 0.6];
    (0..count)
        .map(|i| {
            let u = 1 + (i * 7 + 3) % 8;
            let m = 1 + (i * 5 + 1) % 6;
            let n = 1 + (i * 3 + 2) % 4;
            let density = densities[i % densities.len()];
            FormalDecisionContext::random(u, m, n, density, 1000 + i as u64)
        })
        .collect()
}
