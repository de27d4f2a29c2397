//! The four derivation operators.
//!
//! For a context with objects `U`, attributes `M` and incidence `I`:
//!
//! * `up(O)`            — attributes shared by every object in `O`
//! * `down(C)`          — objects possessing every attribute in `C`
//! * `diamond_obj(O)`   — attributes possessed by at least one object in `O`
//! * `box_obj(O)`       — attributes whose whole column lies inside `O`
//! * `diamond_attr(C)`  — objects possessing at least one attribute in `C`
//! * `box_attr(C)`      — objects whose whole row lies inside `C`
//!
//! Each is a pure function of the context and a set; the precomputed rows
//! and columns make every operator a short fold over bit sets. Subscripted
//! variants over a restricted attribute selection `E` are obtained by
//! passing a restricted context, or algebraically via
//! `box` over `E` = `box` over `M` intersected with `E`.

use crate::bitset::{AttributeSet, ObjectSet};
use crate::context::FormalContext;

impl FormalContext {
    /// Attributes common to all objects in `objects`; the full attribute
    /// set when `objects` is empty.
    pub fn up(&self, objects: &ObjectSet) -> AttributeSet {
        debug_assert_eq!(objects.universe(), self.object_count());
        let mut out = self.full_attributes();
        for x in objects.iter() {
            out.intersect_with(self.row(x));
        }
        out
    }

    /// Objects possessing all attributes in `attrs`; the full object set
    /// when `attrs` is empty.
    pub fn down(&self, attrs: &AttributeSet) -> ObjectSet {
        debug_assert_eq!(attrs.universe(), self.attribute_count());
        let mut out = self.full_objects();
        for a in attrs.iter() {
            out.intersect_with(self.column(a));
        }
        out
    }

    /// Attributes possessed by at least one object in `objects`.
    pub fn diamond_obj(&self, objects: &ObjectSet) -> AttributeSet {
        debug_assert_eq!(objects.universe(), self.object_count());
        let mut out = self.empty_attributes();
        for x in objects.iter() {
            out.union_with(self.row(x));
        }
        out
    }

    /// Attributes whose column is contained in `objects`.
    pub fn box_obj(&self, objects: &ObjectSet) -> AttributeSet {
        debug_assert_eq!(objects.universe(), self.object_count());
        let mut out = self.empty_attributes();
        for a in 0..self.attribute_count() {
            if self.column(a).is_subset(objects) {
                out.insert(a);
            }
        }
        out
    }

    /// Objects possessing at least one attribute in `attrs`.
    pub fn diamond_attr(&self, attrs: &AttributeSet) -> ObjectSet {
        debug_assert_eq!(attrs.universe(), self.attribute_count());
        let mut out = self.empty_objects();
        for a in attrs.iter() {
            out.union_with(self.column(a));
        }
        out
    }

    /// Objects whose row is contained in `attrs`.
    pub fn box_attr(&self, attrs: &AttributeSet) -> ObjectSet {
        debug_assert_eq!(attrs.universe(), self.attribute_count());
        let mut out = self.empty_objects();
        for x in 0..self.object_count() {
            if self.row(x).is_subset(attrs) {
                out.insert(x);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use crate::context::FormalDecisionContext;
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

    #[test]
    fn up_matches_table_rows() {
        let fdc = sample();
        let cond = fdc.conditional();
        let o3 = cond.object_set(&["3"]).unwrap();
        assert_eq!(cond.up(&o3), cond.attribute_set(&["a", "c", "e"]).unwrap());
        let o24 = cond.object_set(&["2", "4"]).unwrap();
        assert_eq!(cond.up(&o24), cond.attribute_set(&["b", "d"]).unwrap());
        assert_eq!(cond.up(&cond.empty_objects()), cond.full_attributes());
    }

    #[test]
    fn down_matches_table_columns() {
        let fdc = sample();
        let dec = fdc.decision();
        let d12 = dec.attribute_set(&["d1", "d2"]).unwrap();
        assert_eq!(dec.down(&d12), dec.object_set(&["2", "3", "5"]).unwrap());
        assert_eq!(dec.down(&dec.empty_attributes()), dec.full_objects());
        let cond = fdc.conditional();
        let e = cond.attribute_set(&["e"]).unwrap();
        assert_eq!(cond.down(&e), cond.object_set(&["3"]).unwrap());
    }

    #[test]
    fn diamond_obj_unions_rows() {
        let fdc = sample();
        let cond = fdc.conditional();
        let o24 = cond.object_set(&["2", "4"]).unwrap();
        assert_eq!(
            cond.diamond_obj(&o24),
            cond.attribute_set(&["b", "d", "f"]).unwrap()
        );
        assert!(cond.diamond_obj(&cond.empty_objects()).is_empty());
        // Every attribute has a non-empty column here, so U picks up all of M.
        assert_eq!(cond.diamond_obj(&cond.full_objects()), cond.full_attributes());
    }

    #[test]
    fn box_attr_collects_dominated_rows() {
        let fdc = sample();
        let dec = fdc.decision();
        let d23 = dec.attribute_set(&["d2", "d3"]).unwrap();
        assert_eq!(dec.box_attr(&d23), dec.object_set(&["4"]).unwrap());
        let d1 = dec.attribute_set(&["d1"]).unwrap();
        assert_eq!(dec.box_attr(&d1), dec.object_set(&["1"]).unwrap());
        assert_eq!(dec.box_attr(&dec.full_attributes()), dec.full_objects());
    }

    #[test]
    fn box_obj_collects_dominated_columns() {
        let fdc = sample();
        let cond = fdc.conditional();
        let o3 = cond.object_set(&["3"]).unwrap();
        assert_eq!(cond.box_obj(&o3), cond.attribute_set(&["e"]).unwrap());
        let o24 = cond.object_set(&["2", "4"]).unwrap();
        assert_eq!(cond.box_obj(&o24), cond.attribute_set(&["d", "f"]).unwrap());
        assert_eq!(cond.box_obj(&cond.full_objects()), cond.full_attributes());
    }

    #[test]
    fn diamond_attr_unions_columns() {
        let fdc = sample();
        let cond = fdc.conditional();
        let df = cond.attribute_set(&["d", "f"]).unwrap();
        assert_eq!(cond.diamond_attr(&df), cond.object_set(&["2", "4"]).unwrap());
        assert!(cond.diamond_attr(&cond.empty_attributes()).is_empty());
        let dec = fdc.decision();
        let d3 = dec.attribute_set(&["d3"]).unwrap();
        assert_eq!(dec.diamond_attr(&d3), dec.object_set(&["4"]).unwrap());
    }

    #[test]
    fn box_is_complement_dual_of_diamond() {
        // {a | a↓ ⊆ O} = M − {a | a↓ ∩ (U−O) ≠ ∅}, directly from the
        // definitions; checked on a few concrete sets.
        let fdc = sample();
        let cond = fdc.conditional();
        for labels in [&[][..], &["3"][..], &["2", "4"][..], &["1", "3", "5"][..]] {
            let o = cond.object_set(labels).unwrap();
            let dual = cond.diamond_obj(&o.complement()).complement();
            assert_eq!(cond.box_obj(&o), dual);
        }
    }
}
