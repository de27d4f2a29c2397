//! Contexts: the object/attribute incidence tables everything else is
//! computed from.
//!
//! A [`FormalContext`] is an ordered object list, an ordered attribute list
//! and a boolean incidence matrix. A [`FormalDecisionContext`] glues two
//! contexts over the same object list: a conditional part and a decision
//! part with disjoint attribute labels.
//!
//! Both types are immutable after construction. Incidence is stored twice,
//! as per-object rows and per-attribute columns, because the derivation
//! operators consume one or the other in their inner loops.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitset::{AttributeSet, IndexSet, ObjectSet};
use crate::error::{Error, Result};

/// An object/attribute incidence table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalContext {
    objects: Vec<String>,
    attributes: Vec<String>,
    rows: Vec<AttributeSet>,
    cols: Vec<ObjectSet>,
}

fn validate_labels(labels: &[String], what: &str) -> Result<()> {
    if labels.is_empty() {
        return Err(Error::InvalidContext(format!("{what} list is empty")));
    }
    for (i, label) in labels.iter().enumerate() {
        if label.is_empty() || label.trim() != label {
            return Err(Error::InvalidContext(format!(
                "{what} label {} is empty or has surrounding whitespace",
                i + 1
            )));
        }
        if label.contains([';', ',', '\n', '\r']) {
            return Err(Error::InvalidContext(format!(
                "{what} label {label:?} contains a separator character"
            )));
        }
        if labels[..i].contains(label) {
            return Err(Error::InvalidContext(format!("duplicate {what} label {label:?}")));
        }
    }
    Ok(())
}

impl FormalContext {
    /// Builds a context from labels and a row-major incidence matrix.
    ///
    /// Labels must be non-empty, unique, free of separator characters and of
    /// surrounding whitespace; the matrix must be `objects × attributes`.
    pub fn new(
        objects: Vec<String>,
        attributes: Vec<String>,
        incidence: Vec<Vec<bool>>,
    ) -> Result<Self> {
        validate_labels(&objects, "object")?;
        validate_labels(&attributes, "attribute")?;
        if incidence.len() != objects.len() {
            return Err(Error::InvalidContext(format!(
                "incidence has {} rows for {} objects",
                incidence.len(),
                objects.len()
            )));
        }
        let n = objects.len();
        let m = attributes.len();
        let mut rows = vec![AttributeSet::empty(m); n];
        let mut cols = vec![ObjectSet::empty(n); m];
        for (x, row) in incidence.iter().enumerate() {
            if row.len() != m {
                return Err(Error::InvalidContext(format!(
                    "incidence row {} has {} cells for {} attributes",
                    x + 1,
                    row.len(),
                    m
                )));
            }
            for (a, &hit) in row.iter().enumerate() {
                if hit {
                    rows[x].insert(a);
                    cols[a].insert(x);
                }
            }
        }
        Ok(FormalContext {
            objects,
            attributes,
            rows,
            cols,
        })
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn attribute_count(&self) -> usize {
        self.attributes.len()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn attributes(&self) -> &[String] {
        &self.attributes
    }

    /// True when object `x` has attribute `a` (both by index).
    pub fn incidence(&self, x: usize, a: usize) -> bool {
        self.rows[x].contains(a)
    }

    /// Attributes of object `x` (the row of `x`).
    pub fn row(&self, x: usize) -> &AttributeSet {
        &self.rows[x]
    }

    /// Objects possessing attribute `a` (the column of `a`).
    pub fn column(&self, a: usize) -> &ObjectSet {
        &self.cols[a]
    }

    pub fn object_index(&self, label: &str) -> Option<usize> {
        self.objects.iter().position(|l| l == label)
    }

    pub fn attribute_index(&self, label: &str) -> Option<usize> {
        self.attributes.iter().position(|l| l == label)
    }

    pub fn empty_objects(&self) -> ObjectSet {
        ObjectSet::empty(self.object_count())
    }

    pub fn full_objects(&self) -> ObjectSet {
        ObjectSet::full(self.object_count())
    }

    pub fn empty_attributes(&self) -> AttributeSet {
        AttributeSet::empty(self.attribute_count())
    }

    pub fn full_attributes(&self) -> AttributeSet {
        AttributeSet::full(self.attribute_count())
    }

    /// Resolves attribute labels to an [`AttributeSet`].
    pub fn attribute_set(&self, labels: &[impl AsRef<str>]) -> Result<AttributeSet> {
        let mut set = self.empty_attributes();
        for label in labels {
            let label = label.as_ref();
            let idx = self.attribute_index(label).ok_or_else(|| {
                Error::InvalidArgument(format!("unknown attribute label {label:?}"))
            })?;
            set.insert(idx);
        }
        Ok(set)
    }

    /// Resolves object labels to an [`ObjectSet`].
    pub fn object_set(&self, labels: &[impl AsRef<str>]) -> Result<ObjectSet> {
        let mut set = self.empty_objects();
        for label in labels {
            let label = label.as_ref();
            let idx = self
                .object_index(label)
                .ok_or_else(|| Error::InvalidArgument(format!("unknown object label {label:?}")))?;
            set.insert(idx);
        }
        Ok(set)
    }

    /// The context with every incidence cell flipped.
    pub fn complement(&self) -> FormalContext {
        let n = self.object_count();
        let rows: Vec<AttributeSet> = self.rows.iter().map(|r| r.complement()).collect();
        let mut cols = vec![ObjectSet::empty(n); self.attribute_count()];
        for (x, row) in rows.iter().enumerate() {
            for a in row.iter() {
                cols[a].insert(x);
            }
        }
        FormalContext {
            objects: self.objects.clone(),
            attributes: self.attributes.clone(),
            rows,
            cols,
        }
    }

    /// Keeps only the attributes in `keep`, preserving their original order.
    pub fn restrict_attributes(&self, keep: &AttributeSet) -> Result<FormalContext> {
        if keep.universe() != self.attribute_count() {
            return Err(Error::InvalidArgument(
                "attribute selection built against a different context".into(),
            ));
        }
        if keep.is_empty() {
            return Err(Error::InvalidArgument(
                "cannot restrict a context to zero attributes".into(),
            ));
        }
        let kept: Vec<usize> = keep.iter().collect();
        let attributes: Vec<String> = kept.iter().map(|&a| self.attributes[a].clone()).collect();
        let incidence: Vec<Vec<bool>> = (0..self.object_count())
            .map(|x| kept.iter().map(|&a| self.incidence(x, a)).collect())
            .collect();
        FormalContext::new(self.objects.clone(), attributes, incidence)
    }

    /// Reports every empty/full row and column. An empty report means the
    /// context is canonical; violations are informational, not fatal.
    pub fn check_canonical(&self) -> CanonicityReport {
        let mut violations = Vec::new();
        for (x, row) in self.rows.iter().enumerate() {
            if row.is_empty() {
                violations.push(CanonicityViolation::EmptyRow(self.objects[x].clone()));
            } else if row.is_full() {
                violations.push(CanonicityViolation::FullRow(self.objects[x].clone()));
            }
        }
        for (a, col) in self.cols.iter().enumerate() {
            if col.is_empty() {
                violations.push(CanonicityViolation::EmptyColumn(self.attributes[a].clone()));
            } else if col.is_full() {
                violations.push(CanonicityViolation::FullColumn(self.attributes[a].clone()));
            }
        }
        CanonicityReport { violations }
    }
}

/// One canonicity defect, with the offending label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CanonicityViolation {
    EmptyRow(String),
    FullRow(String),
    EmptyColumn(String),
    FullColumn(String),
}

impl std::fmt::Display for CanonicityViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CanonicityViolation::EmptyRow(l) => write!(f, "object {l:?} has an empty row"),
            CanonicityViolation::FullRow(l) => write!(f, "object {l:?} has a full row"),
            CanonicityViolation::EmptyColumn(l) => write!(f, "attribute {l:?} has an empty column"),
            CanonicityViolation::FullColumn(l) => write!(f, "attribute {l:?} has a full column"),
        }
    }
}

/// Result of [`FormalContext::check_canonical`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicityReport {
    pub violations: Vec<CanonicityViolation>,
}

impl CanonicityReport {
    pub fn is_canonical(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A conditional context and a decision context over the same objects.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalDecisionContext {
    conditional: FormalContext,
    decision: FormalContext,
}

impl FormalDecisionContext {
    /// Glues a conditional and a decision context. Both must list the same
    /// objects in the same order, and their attribute labels must be
    /// disjoint.
    pub fn new(conditional: FormalContext, decision: FormalContext) -> Result<Self> {
        if conditional.objects != decision.objects {
            return Err(Error::InvalidContext(
                "conditional and decision parts list different objects".into(),
            ));
        }
        for label in &decision.attributes {
            if conditional.attributes.contains(label) {
                return Err(Error::InvalidContext(format!(
                    "attribute {label:?} appears on both the conditional and the decision side"
                )));
            }
        }
        Ok(FormalDecisionContext {
            conditional,
            decision,
        })
    }

    /// Splits one context into conditional and decision parts. The listed
    /// labels become the decision side; everything else stays conditional.
    /// Both sides keep the original attribute order.
    pub fn split(context: &FormalContext, decision_attrs: &[impl AsRef<str>]) -> Result<Self> {
        let decision_set = context.attribute_set(decision_attrs)?;
        if decision_set.is_empty() {
            return Err(Error::InvalidArgument(
                "decision attribute list is empty".into(),
            ));
        }
        if decision_set.is_full() {
            return Err(Error::InvalidArgument(
                "decision attributes cover the whole table; no conditional side remains".into(),
            ));
        }
        let conditional = context.restrict_attributes(&decision_set.complement())?;
        let decision = context.restrict_attributes(&decision_set)?;
        FormalDecisionContext::new(conditional, decision)
    }

    pub fn conditional(&self) -> &FormalContext {
        &self.conditional
    }

    pub fn decision(&self) -> &FormalContext {
        &self.decision
    }

    pub fn objects(&self) -> &[String] {
        &self.conditional.objects
    }

    pub fn object_count(&self) -> usize {
        self.conditional.object_count()
    }

    /// Same conditional part, decision incidence flipped cell-wise.
    pub fn complement_decision(&self) -> FormalDecisionContext {
        FormalDecisionContext {
            conditional: self.conditional.clone(),
            decision: self.decision.complement(),
        }
    }

    /// Restricts the conditional part to the attribute selection `keep`,
    /// leaving the decision part untouched. `keep` must be non-empty.
    pub fn restrict_conditional(&self, keep: &AttributeSet) -> Result<FormalDecisionContext> {
        let conditional = self.conditional.restrict_attributes(keep)?;
        FormalDecisionContext::new(conditional, self.decision.clone())
    }

    /// Generates a decision context with independent Bernoulli incidence.
    ///
    /// The stream is ChaCha8 keyed by `seed`, consumed cell by cell in
    /// row-major order (conditional part first, then decision part), so the
    /// same arguments give the same context on every platform. Objects are
    /// labelled `1..=n`, conditional attributes `m1..`, decision attributes
    /// `d1..`.
    ///
    /// # Panics
    ///
    /// When a size is zero or `density` is not strictly between 0 and 1.
    pub fn random(
        n_objects: usize,
        n_conditional: usize,
        n_decision: usize,
        density: f64,
        seed: u64,
    ) -> FormalDecisionContext {
        assert!(n_objects >= 1 && n_conditional >= 1 && n_decision >= 1, "sizes must be >= 1");
        assert!(
            density > 0.0 && density < 1.0,
            "density must lie strictly between 0 and 1"
        );
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let objects: Vec<String> = (1..=n_objects).map(|i| i.to_string()).collect();
        let mut sample = |rows: usize, cols: usize| -> Vec<Vec<bool>> {
            (0..rows)
                .map(|_| (0..cols).map(|_| rng.random::<f64>() < density).collect())
                .collect()
        };
        let cond_incidence = sample(n_objects, n_conditional);
        let dec_incidence = sample(n_objects, n_decision);
        let conditional = FormalContext::new(
            objects.clone(),
            (1..=n_conditional).map(|i| format!("m{i}")).collect(),
            cond_incidence,
        )
        .expect("generated conditional context is structurally valid");
        let decision = FormalContext::new(
            objects,
            (1..=n_decision).map(|i| format!("d{i}")).collect(),
            dec_incidence,
        )
        .expect("generated decision context is structurally valid");
        FormalDecisionContext {
            conditional,
            decision,
        }
    }
}

/// Renders a set as the concatenation of its member labels, `∅` when empty.
///
/// Single-character labels reproduce the compact notation used in the text
/// output, e.g. `{2,4,5}` over objects `1..5` prints as `245`.
pub fn set_text<T>(set: &IndexSet<T>, labels: &[String]) -> String {
    if set.is_empty() {
        return "∅".to_string();
    }
    set.iter().map(|i| labels[i].as_str()).collect()
}

/// Member labels of a set, in universe order.
pub fn set_labels<T>(set: &IndexSet<T>, labels: &[String]) -> Vec<String> {
    set.iter().map(|i| labels[i].clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny() -> FormalContext {
        FormalContext::new(
            vec!["1".into(), "2".into(), "3".into()],
            vec!["a".into(), "b".into()],
            vec![
                vec![true, false],
                vec![false, true],
                vec![true, true],
            ],
        )
        .unwrap()
    }

    #[test]
    fn rows_and_columns_agree_with_incidence() {
        let ctx = tiny();
        assert_eq!(ctx.row(0).indices(), vec![0]);
        assert_eq!(ctx.row(2).indices(), vec![0, 1]);
        assert_eq!(ctx.column(0).indices(), vec![0, 2]);
        assert!(ctx.incidence(1, 1));
        assert!(!ctx.incidence(1, 0));
    }

    #[test]
    fn duplicate_labels_rejected() {
        let err = FormalContext::new(
            vec!["1".into(), "1".into()],
            vec!["a".into()],
            vec![vec![true], vec![false]],
        )
        .unwrap_err();
        assert!(matches!(err, Error::InvalidContext(_)));
    }

    #[test]
    fn ragged_incidence_rejected() {
        let err = FormalContext::new(
            vec!["1".into()],
            vec!["a".into(), "b".into()],
            vec![vec![true]],
        )
        .unwrap_err();
        assert!(matches!(err, Error::InvalidContext(_)));
    }

    #[test]
    fn complement_is_involutive() {
        let ctx = tiny();
        assert_eq!(ctx.complement().complement(), ctx);
    }

    #[test]
    fn canonicity_report_flags_each_kind() {
        let ctx = FormalContext::new(
            vec!["g".into(), "h".into()],
            vec!["a".into(), "b".into(), "c".into()],
            vec![
                vec![false, false, false],
                vec![true, true, false],
            ],
        )
        .unwrap();
        let report = ctx.check_canonical();
        assert!(!report.is_canonical());
        assert!(report
            .violations
            .contains(&CanonicityViolation::EmptyRow("g".into())));
        assert!(report
            .violations
            .contains(&CanonicityViolation::EmptyColumn("c".into())));
    }

    #[test]
    fn split_rejects_degenerate_sides() {
        let ctx = tiny();
        assert!(FormalDecisionContext::split(&ctx, &["a", "b"]).is_err());
        assert!(FormalDecisionContext::split(&ctx, &[] as &[&str]).is_err());
        assert!(FormalDecisionContext::split(&ctx, &["z"]).is_err());
        let fdc = FormalDecisionContext::split(&ctx, &["b"]).unwrap();
        assert_eq!(fdc.conditional().attributes(), ["a"]);
        assert_eq!(fdc.decision().attributes(), ["b"]);
    }

    #[test]
    fn restrict_keeps_attribute_order_and_rejects_empty() {
        let ctx = FormalContext::new(
            vec!["1".into()],
            vec!["a".into(), "b".into(), "c".into()],
            vec![vec![true, false, true]],
        )
        .unwrap();
        let keep = ctx.attribute_set(&["c", "a"]).unwrap();
        let restricted = ctx.restrict_attributes(&keep).unwrap();
        assert_eq!(restricted.attributes(), ["a", "c"]);
        assert!(ctx.restrict_attributes(&ctx.empty_attributes()).is_err());
    }

    #[test]
    fn random_is_deterministic_and_shaped() {
        let a = FormalDecisionContext::random(5, 6, 3, 0.4, 1);
        let b = FormalDecisionContext::random(5, 6, 3, 0.4, 1);
        assert_eq!(a, b);
        assert_eq!(a.conditional().attribute_count(), 6);
        assert_eq!(a.decision().attribute_count(), 3);
        let one = FormalDecisionContext::random(1, 1, 1, 0.5, 7);
        assert_eq!(one.object_count(), 1);
        assert_eq!(one.conditional().attribute_count(), 1);
        assert_eq!(one.decision().attribute_count(), 1);
    }

    #[test]
    fn denser_draws_have_more_incidences() {
        let count = |fdc: &FormalDecisionContext| -> usize {
            (0..fdc.object_count())
                .map(|x| fdc.conditional().row(x).len() + fdc.decision().row(x).len())
                .sum()
        };
        // Popcount comparison across two densities, both seeds.
        for seed in [1, 2] {
            let sparse = FormalDecisionContext::random(12, 10, 4, 0.05, seed);
            let dense = FormalDecisionContext::random(12, 10, 4, 0.95, seed);
            assert!(count(&dense) > count(&sparse));
        }
    }

    #[test]
    fn set_text_concatenates_labels() {
        let ctx = tiny();
        let s = ctx.object_set(&["1", "3"]).unwrap();
        assert_eq!(set_text(&s, ctx.objects()), "13");
        assert_eq!(set_text(&ctx.empty_objects(), ctx.objects()), "∅");
    }
}
