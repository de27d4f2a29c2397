//! Concept lattices of a context.
//!
//! Three complete lattices are derived from one incidence table:
//!
//! * **formal** concepts `(O, C)` with `up(O) = C` and `down(C) = O`;
//! * **object-oriented** concepts with `box_obj(O) = C` and
//!   `diamond_attr(C) = O` — extents are exactly the unions of attribute
//!   columns;
//! * **property-oriented** concepts with `diamond_obj(O) = C` and
//!   `box_attr(C) = O` — extents are complements of object-oriented
//!   extents.
//!
//! Enumeration runs a Close-by-One search over the fixed points of the
//! matching closure operator, so each concept is produced exactly once.
//! Concepts are sorted by (extent cardinality, extent members), which makes
//! every emitted list byte-stable. The cover (Hasse) relation is computed
//! lazily because rule acquisition only needs the concept list.
//!
//! Two construction paths exist on purpose: [`build_lattice`] closes sets
//! directly with the operators above, while [`build_lattice_via_complement`]
//! routes object- and property-oriented lattices through the formal
//! concepts of the complement context. The two are interchangeable and are
//! tested against each other.

use std::sync::OnceLock;

use serde_json::{json, Value};

use crate::bitset::{AttributeSet, IndexSet, ObjectSet};
use crate::context::{set_labels, set_text, FormalContext};

/// Which of the three lattices a concept belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConceptKind {
    Formal,
    ObjectOriented,
    PropertyOriented,
}

impl ConceptKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ConceptKind::Formal => "formal",
            ConceptKind::ObjectOriented => "object-oriented",
            ConceptKind::PropertyOriented => "property-oriented",
        }
    }
}

/// An (extent, intent) pair tagged with its lattice kind.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Concept {
    pub extent: ObjectSet,
    pub intent: AttributeSet,
    pub kind: ConceptKind,
}

/// `(extent,intent)` in compact label notation, e.g. `(135,ace)`.
pub fn concept_text(concept: &Concept, objects: &[String], attributes: &[String]) -> String {
    format!(
        "({},{})",
        set_text(&concept.extent, objects),
        set_text(&concept.intent, attributes)
    )
}

/// All concepts of one kind, sorted canonically, plus the cover relation.
#[derive(Debug)]
pub struct ConceptLattice {
    kind: ConceptKind,
    concepts: Vec<Concept>,
    covers: OnceLock<Vec<(usize, usize)>>,
}

impl Clone for ConceptLattice {
    fn clone(&self) -> Self {
        ConceptLattice {
            kind: self.kind,
            concepts: self.concepts.clone(),
            covers: self.covers.clone(),
        }
    }
}

impl PartialEq for ConceptLattice {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.concepts == other.concepts
    }
}

impl Eq for ConceptLattice {}

impl ConceptLattice {
    fn from_concepts(kind: ConceptKind, mut concepts: Vec<Concept>) -> Self {
        concepts.sort_by(|a, b| a.extent.cmp(&b.extent));
        ConceptLattice {
            kind,
            concepts,
            covers: OnceLock::new(),
        }
    }

    pub fn kind(&self) -> ConceptKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.concepts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.concepts.is_empty()
    }

    pub fn concepts(&self) -> &[Concept] {
        &self.concepts
    }

    pub fn concept(&self, index: usize) -> &Concept {
        &self.concepts[index]
    }

    /// Extents in canonical order.
    pub fn extents(&self) -> Vec<ObjectSet> {
        self.concepts.iter().map(|c| c.extent.clone()).collect()
    }

    /// Position of the concept with the given extent, if present.
    pub fn index_of_extent(&self, extent: &ObjectSet) -> Option<usize> {
        self.concepts
            .binary_search_by(|c| c.extent.cmp(extent))
            .ok()
    }

    /// The unique greatest concept.
    pub fn top(&self) -> &Concept {
        self.concepts.last().expect("a lattice is never empty")
    }

    /// The unique least concept.
    pub fn bottom(&self) -> &Concept {
        self.concepts.first().expect("a lattice is never empty")
    }

    /// `(child, parent)` index pairs of the cover relation: the transitive
    /// reduction of extent inclusion. Computed on first use and cached.
    pub fn covers(&self) -> &[(usize, usize)] {
        self.covers.get_or_init(|| transitive_reduction(&self.concepts))
    }

    /// Children (covered concepts) of the concept at `index`.
    pub fn children_of(&self, index: usize) -> Vec<usize> {
        self.covers()
            .iter()
            .filter(|&&(_, p)| p == index)
            .map(|&(c, _)| c)
            .collect()
    }

    /// GraphViz rendering of the Hasse diagram; nodes carry
    /// `extent|intent` labels, edges run child → parent.
    pub fn to_dot(&self, ctx: &FormalContext) -> String {
        let mut out = String::from("digraph concept_lattice {\n  rankdir=BT;\n  node [shape=box];\n");
        for (i, c) in self.concepts.iter().enumerate() {
            let label = format!(
                "{}|{}",
                set_text(&c.extent, ctx.objects()),
                set_text(&c.intent, ctx.attributes())
            );
            out.push_str(&format!("  c{i} [label=\"{}\"];\n", escape_dot(&label)));
        }
        for &(child, parent) in self.covers() {
            out.push_str(&format!("  c{child} -> c{parent};\n"));
        }
        out.push_str("}\n");
        out
    }

    /// JSON rendering: concepts as label arrays plus covers as index pairs.
    pub fn to_json(&self, ctx: &FormalContext) -> Value {
        let concepts: Vec<Value> = self
            .concepts
            .iter()
            .map(|c| {
                json!({
                    "extent": set_labels(&c.extent, ctx.objects()),
                    "intent": set_labels(&c.intent, ctx.attributes()),
                })
            })
            .collect();
        let covers: Vec<Value> = self
            .covers()
            .iter()
            .map(|&(c, p)| json!([c, p]))
            .collect();
        json!({
            "kind": self.kind.as_str(),
            "concepts": concepts,
            "covers": covers,
        })
    }
}

fn escape_dot(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Enumerates all fixed points of a closure operator on `{0..universe}`.
///
/// Close-by-One recursion: a closed set is extended by one generator at a
/// time; a candidate closure is kept only when it introduces no element
/// below the generator, which guarantees each closed set appears once.
fn closed_sets<T, F>(universe: usize, cl: F) -> Vec<IndexSet<T>>
where
    F: Fn(&IndexSet<T>) -> IndexSet<T>,
{
    fn recurse<T, F>(current: IndexSet<T>, start: usize, universe: usize, cl: &F, out: &mut Vec<IndexSet<T>>)
    where
        F: Fn(&IndexSet<T>) -> IndexSet<T>,
    {
        for j in start..universe {
            if current.contains(j) {
                continue;
            }
            let mut seed = current.clone();
            seed.insert(j);
            let candidate = cl(&seed);
            if candidate.eq_below(&current, j) {
                recurse(candidate, j + 1, universe, cl, out);
            }
        }
        out.push(current);
    }

    let mut out = Vec::new();
    let root = cl(&IndexSet::empty(universe));
    recurse(root, 0, universe, &cl, &mut out);
    out
}

/// Builds the requested lattice by direct closure enumeration.
pub fn build_lattice(ctx: &FormalContext, kind: ConceptKind) -> ConceptLattice {
    let concepts = match kind {
        ConceptKind::Formal => {
            // Close over the smaller side; both give the same concepts.
            if ctx.attribute_count() <= ctx.object_count() {
                closed_sets(ctx.attribute_count(), |c: &AttributeSet| ctx.up(&ctx.down(c)))
                    .into_iter()
                    .map(|c| Concept {
                        extent: ctx.down(&c),
                        intent: c,
                        kind,
                    })
                    .collect()
            } else {
                closed_sets(ctx.object_count(), |o: &ObjectSet| ctx.down(&ctx.up(o)))
                    .into_iter()
                    .map(|o| Concept {
                        intent: ctx.up(&o),
                        extent: o,
                        kind,
                    })
                    .collect()
            }
        }
        ConceptKind::ObjectOriented => {
            // Intents are the closed attribute sets of diamond-then-box.
            closed_sets(ctx.attribute_count(), |c: &AttributeSet| {
                ctx.box_obj(&ctx.diamond_attr(c))
            })
            .into_iter()
            .map(|c| Concept {
                extent: ctx.diamond_attr(&c),
                intent: c,
                kind,
            })
            .collect()
        }
        ConceptKind::PropertyOriented => {
            // Extents are the closed object sets of diamond-then-box.
            closed_sets(ctx.object_count(), |o: &ObjectSet| {
                ctx.box_attr(&ctx.diamond_obj(o))
            })
            .into_iter()
            .map(|o| Concept {
                intent: ctx.diamond_obj(&o),
                extent: o,
                kind,
            })
            .collect()
        }
    };
    ConceptLattice::from_concepts(kind, concepts)
}

/// Builds the requested lattice through the complement context.
///
/// Formal concepts of the complement map onto property-oriented concepts of
/// the original by complementing intents, and onto object-oriented concepts
/// by complementing extents. A formal request falls through to the direct
/// path. Results are identical to [`build_lattice`]; this alternate route
/// exists as a cheap cross-check of both the enumerator and the complement
/// transformation.
pub fn build_lattice_via_complement(ctx: &FormalContext, kind: ConceptKind) -> ConceptLattice {
    if kind == ConceptKind::Formal {
        return build_lattice(ctx, kind);
    }
    let complement = ctx.complement();
    let formal = build_lattice(&complement, ConceptKind::Formal);
    let concepts = formal
        .concepts()
        .iter()
        .map(|c| match kind {
            ConceptKind::PropertyOriented => Concept {
                extent: c.extent.clone(),
                intent: c.intent.complement(),
                kind,
            },
            ConceptKind::ObjectOriented => Concept {
                extent: c.extent.complement(),
                intent: c.intent.clone(),
                kind,
            },
            ConceptKind::Formal => unreachable!(),
        })
        .collect();
    ConceptLattice::from_concepts(kind, concepts)
}

/// The concept of the requested kind generated by an arbitrary object set.
pub fn concept_of_extent(ctx: &FormalContext, kind: ConceptKind, objects: &ObjectSet) -> Concept {
    match kind {
        ConceptKind::Formal => {
            let intent = ctx.up(objects);
            Concept {
                extent: ctx.down(&intent),
                intent,
                kind,
            }
        }
        ConceptKind::ObjectOriented => {
            let intent = ctx.box_obj(objects);
            Concept {
                extent: ctx.diamond_attr(&intent),
                intent,
                kind,
            }
        }
        ConceptKind::PropertyOriented => {
            let intent = ctx.diamond_obj(objects);
            Concept {
                extent: ctx.box_attr(&intent),
                intent,
                kind,
            }
        }
    }
}

/// Transitive reduction of extent inclusion over a canonically sorted
/// concept list. Quadratic with an early cardinality cut; fine for the
/// lattice sizes this crate targets.
fn transitive_reduction(concepts: &[Concept]) -> Vec<(usize, usize)> {
    let mut covers = Vec::new();
    for parent in 0..concepts.len() {
        let parent_extent = &concepts[parent].extent;
        let mut children: Vec<usize> = Vec::new();
        // Walk candidates in descending canonical order so every accepted
        // child is maximal among the remaining candidates.
        for cand in (0..parent).rev() {
            let cand_extent = &concepts[cand].extent;
            if cand_extent.len() >= parent_extent.len() {
                continue;
            }
            if !cand_extent.is_subset(parent_extent) {
                continue;
            }
            if children
                .iter()
                .any(|&ch| cand_extent.is_subset(&concepts[ch].extent))
            {
                continue;
            }
            children.push(cand);
            covers.push((cand, parent));
        }
    }
    covers.sort_unstable();
    covers
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::{FormalContext, FormalDecisionContext};
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

    fn texts(lattice: &ConceptLattice, ctx: &FormalContext) -> Vec<String> {
        lattice
            .concepts()
            .iter()
            .map(|c| concept_text(c, ctx.objects(), ctx.attributes()))
            .collect()
    }

    #[test]
    fn object_oriented_lattice_of_sample_conditional() {
        let fdc = sample();
        let lattice = build_lattice(fdc.conditional(), ConceptKind::ObjectOriented);
        assert_eq!(lattice.len(), 13);
        let got = texts(&lattice, fdc.conditional());
        for expected in [
            "(∅,∅)",
            "(3,e)",
            "(4,f)",
            "(24,df)",
            "(34,ef)",
            "(35,ce)",
            "(135,ace)",
            "(234,def)",
            "(245,bdf)",
            "(345,cef)",
            "(1345,acef)",
            "(2345,bcdef)",
            "(12345,abcdef)",
        ] {
            assert!(got.contains(&expected.to_string()), "missing {expected} in {got:?}");
        }
    }

    #[test]
    fn formal_lattice_of_sample_decision() {
        let fdc = sample();
        let lattice = build_lattice(fdc.decision(), ConceptKind::Formal);
        let got = texts(&lattice, fdc.decision());
        assert_eq!(
            got,
            vec![
                "(∅,d1d2d3)",
                "(4,d2d3)",
                "(235,d1d2)",
                "(1235,d1)",
                "(2345,d2)",
                "(12345,∅)",
            ]
        );
    }

    #[test]
    fn property_lattice_of_sample_decision() {
        let fdc = sample();
        let lattice = build_lattice(fdc.decision(), ConceptKind::PropertyOriented);
        let got = texts(&lattice, fdc.decision());
        assert_eq!(
            got,
            vec![
                "(∅,∅)",
                "(1,d1)",
                "(4,d2d3)",
                "(1235,d1d2)",
                "(12345,d1d2d3)",
            ]
        );
    }

    #[test]
    fn complement_route_agrees_with_direct_route() {
        let fdc = sample();
        for ctx in [fdc.conditional(), fdc.decision()] {
            for kind in [
                ConceptKind::Formal,
                ConceptKind::ObjectOriented,
                ConceptKind::PropertyOriented,
            ] {
                assert_eq!(build_lattice(ctx, kind), build_lattice_via_complement(ctx, kind));
            }
        }
    }

    #[test]
    fn concept_of_extent_closes_seeds() {
        let fdc = sample();
        let dec = fdc.decision();
        let seed = dec.object_set(&["3", "5"]).unwrap();
        let c = concept_of_extent(dec, ConceptKind::Formal, &seed);
        assert_eq!(concept_text(&c, dec.objects(), dec.attributes()), "(235,d1d2)");

        let cond = fdc.conditional();
        let seed = cond.object_set(&["2", "3", "5"]).unwrap();
        let c = concept_of_extent(cond, ConceptKind::ObjectOriented, &seed);
        assert_eq!(concept_text(&c, cond.objects(), cond.attributes()), "(35,ce)");

        // A seed that is already an extent closes to itself.
        let lattice = build_lattice(cond, ConceptKind::ObjectOriented);
        for concept in lattice.concepts() {
            let again = concept_of_extent(cond, ConceptKind::ObjectOriented, &concept.extent);
            assert_eq!(&again, concept);
        }
    }

    #[test]
    fn covers_of_object_lattice_match_known_neighbours() {
        let fdc = sample();
        let cond = fdc.conditional();
        let lattice = build_lattice(cond, ConceptKind::ObjectOriented);
        let find = |labels: &[&str]| {
            lattice
                .index_of_extent(&cond.object_set(labels).unwrap())
                .unwrap()
        };
        let covers = lattice.covers();
        let has = |child: usize, parent: usize| covers.contains(&(child, parent));

        assert!(has(find(&["3", "5"]), find(&["1", "3", "5"])));
        assert!(has(find(&["1", "3", "4", "5"]), find(&["1", "2", "3", "4", "5"])));
        assert!(has(find(&["2", "3", "4", "5"]), find(&["1", "2", "3", "4", "5"])));
        assert!(!has(find(&["3"]), find(&["1", "3", "5"])), "3 < 35 < 135 is not a cover");

        // Top has no parents, bottom has no children.
        let top = lattice.len() - 1;
        assert!(covers.iter().all(|&(c, _)| c != top));
        assert!(covers.iter().all(|&(_, p)| p != 0));
    }

    #[test]
    fn one_by_one_full_context_lattices() {
        let ctx = FormalContext::new(
            vec!["1".into()],
            vec!["a".into()],
            vec![vec![true]],
        )
        .unwrap();
        // Resolved by enumerating all subsets of the 1×1 context: the
        // formal lattice has the single concept (1,a); the modal lattices
        // additionally contain (∅,∅).
        assert_eq!(build_lattice(&ctx, ConceptKind::Formal).len(), 1);
        assert_eq!(build_lattice(&ctx, ConceptKind::ObjectOriented).len(), 2);
        assert_eq!(build_lattice(&ctx, ConceptKind::PropertyOriented).len(), 2);
    }

    #[test]
    fn extent_count_equals_concept_count() {
        let fdc = sample();
        let lattice = build_lattice(fdc.decision(), ConceptKind::Formal);
        assert_eq!(lattice.extents().len(), lattice.len());
    }

    #[test]
    fn dot_output_lists_every_concept_once() {
        let fdc = sample();
        let lattice = build_lattice(fdc.decision(), ConceptKind::Formal);
        let dot = lattice.to_dot(fdc.decision());
        assert_eq!(dot.matches("label=").count(), lattice.len());
        assert!(dot.contains("digraph"));
    }
}
