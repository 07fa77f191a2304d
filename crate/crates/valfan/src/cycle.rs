//! The log Calabi-Yau pair `(X, C)`: cyclically ordered component classes,
//! nodes, the dual-complex circle, and the contraction of non-nef
//! components down to a cycle with nef components.
//!
//! A point of the dual complex is either a component vertex or an edge point
//! `(node, t)`, the valuation with weights `(1, t)` along the node's two
//! branches (weight `1` on the left branch). Under the contraction of a
//! (-1)-component the circle maps to the smaller circle by an explicit
//! bijection: at a node whose right branch is contracted the edge
//! coordinate becomes `t / (1 + t)`, at a node whose left branch is
//! contracted it becomes `1 + t`, and the vertex of the contracted
//! component lands on the merged edge at `t = 1`.

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::exact::{rint, ExactError, ExtPos, QuadVal, Rat};
use crate::lattice::{
    default_witness_bound, unicuspidal_witness, ContractionView, DivisorClass, LatticeError,
    SurfaceLattice, WitnessSearch,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("configuration is invalid: {0:?}")]
    Invalid(Vec<Violation>),
    #[error("non-nef component {index} has square {square}, not -1")]
    NonNefSquare { index: usize, square: String },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// A violated configuration invariant; violations are data, not panics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NoComponents,
    ComponentRank { index: usize, got: usize, expected: usize },
    NonIntegerComponent { index: usize },
    AnticanonicalSumMismatch { sum: String },
    TwoComponentProduct { got: String },
    AdjacentProduct { i: usize, j: usize, got: String },
    NonAdjacentProduct { i: usize, j: usize, got: String },
    Adjunction { index: usize, square: String, expected: String },
    NefCycleTooLong { k: usize },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::NoComponents => write!(f, "cycle has no components"),
            Violation::ComponentRank { index, got, expected } => write!(
                f,
                "component {index} has {got} coefficients, lattice rank is {expected}"
            ),
            Violation::NonIntegerComponent { index } => {
                write!(f, "component {index} has non-integer coefficients")
            }
            Violation::AnticanonicalSumMismatch { sum } => {
                write!(f, "components sum to {sum}, not the anticanonical class")
            }
            Violation::TwoComponentProduct { got } => {
                write!(f, "two-component cycle needs C1.C2 = 2, got {got}")
            }
            Violation::AdjacentProduct { i, j, got } => {
                write!(f, "adjacent components {i},{j} need product 1, got {got}")
            }
            Violation::NonAdjacentProduct { i, j, got } => {
                write!(f, "non-adjacent components {i},{j} need product 0, got {got}")
            }
            Violation::Adjunction { index, square, expected } => write!(
                f,
                "component {index} has square {square}, adjunction requires {expected}"
            ),
            Violation::NefCycleTooLong { k } => {
                write!(f, "a cycle of {k} nef components is impossible (k must be <= 4)")
            }
        }
    }
}

/// A node of the cycle with its ordered pair of branch components.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NodeRef {
    pub index: usize,
    pub left: usize,
    pub right: usize,
}

/// A point of the dual complex `D(X, C)`, a circle of vertices and edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DualComplexPoint {
    Vertex(usize),
    /// Weight `(1, t)` at the node, `t` finite and positive.
    Edge { node: usize, t: QuadVal },
}

impl DualComplexPoint {
    /// Edge point at weight `t`, normalizing the `t -> 0` and `t -> inf`
    /// limits to the branch vertices.
    pub fn at_weight(node: &NodeRef, t: &ExtPos) -> Self {
        match t {
            ExtPos::Zero => DualComplexPoint::Vertex(node.left),
            ExtPos::Infinity => DualComplexPoint::Vertex(node.right),
            ExtPos::Finite(v) => DualComplexPoint::Edge {
                node: node.index,
                t: v.clone(),
            },
        }
    }

    pub fn edge_from_rat(node: usize, t: Rat) -> Result<Self, ExactError> {
        let v = QuadVal::from_rat(t);
        if !v.is_positive() {
            return Err(ExactError::NotPositive(v.to_string()));
        }
        Ok(DualComplexPoint::Edge { node, t: v })
    }
}

impl std::fmt::Display for DualComplexPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DualComplexPoint::Vertex(i) => write!(f, "vertex({i})"),
            DualComplexPoint::Edge { node, t } => write!(f, "edge({node}, t = {t})"),
        }
    }
}

/// The pair `(X, C)`: a surface (possibly a contracted view) together with
/// the cyclically ordered components of a nodal anticanonical cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleConfig {
    view: ContractionView,
    components: Vec<DivisorClass>,
    /// For an irreducible cycle, fixes the order of the two branches at the
    /// single node; purely a labeling choice (`t <-> 1/t`).
    branch_flip: bool,
}

impl CycleConfig {
    pub fn new(surface: SurfaceLattice, components: Vec<DivisorClass>, branch_flip: bool) -> Self {
        Self {
            view: ContractionView::new(surface),
            components,
            branch_flip,
        }
    }

    pub fn irreducible(surface: SurfaceLattice) -> Self {
        let anti = surface.anticanonical();
        Self::new(surface, vec![anti], false)
    }

    pub fn view(&self) -> &ContractionView {
        &self.view
    }

    pub fn components(&self) -> &[DivisorClass] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn branch_flip(&self) -> bool {
        self.branch_flip
    }

    pub fn degree(&self) -> i64 {
        self.view.degree()
    }

    pub fn node_count(&self) -> usize {
        self.components.len().max(1)
    }

    pub fn node(&self, index: usize) -> NodeRef {
        let k = self.components.len();
        assert!(index < self.node_count(), "node index out of range");
        if k == 1 {
            NodeRef { index: 0, left: 0, right: 0 }
        } else {
            NodeRef {
                index,
                left: index,
                right: (index + 1) % k,
            }
        }
    }

    pub fn nodes(&self) -> Vec<NodeRef> {
        (0..self.node_count()).map(|i| self.node(i)).collect()
    }

    pub fn component_square(&self, i: usize) -> Result<Rat, LatticeError> {
        self.view.intersect(&self.components[i], &self.components[i])
    }

    /// Checks every structural invariant and returns the violations.
    pub fn validate(&self) -> Result<Vec<Violation>, LatticeError> {
        let mut out = Vec::new();
        let k = self.components.len();
        if k == 0 {
            return Ok(vec![Violation::NoComponents]);
        }
        let rank = self.view.ambient().rank();
        for (i, c) in self.components.iter().enumerate() {
            if c.len() != rank {
                out.push(Violation::ComponentRank { index: i, got: c.len(), expected: rank });
            }
        }
        if !out.is_empty() {
            return Ok(out);
        }
        for (i, c) in self.components.iter().enumerate() {
            if c.to_ints().is_none() {
                out.push(Violation::NonIntegerComponent { index: i });
            }
        }

        let mut sum = DivisorClass::zero(rank);
        for c in &self.components {
            sum = sum.add(c);
        }
        let anti = self.view.anticanonical();
        if self.view.pushforward(&sum)? != anti {
            out.push(Violation::AnticanonicalSumMismatch { sum: sum.to_string() });
        }

        if k == 2 {
            let p = self.view.intersect(&self.components[0], &self.components[1])?;
            if p != rint(2) {
                out.push(Violation::TwoComponentProduct { got: p.to_string() });
            }
        }
        if k >= 3 {
            for i in 0..k {
                for j in (i + 1)..k {
                    let p = self.view.intersect(&self.components[i], &self.components[j])?;
                    let adjacent = j == i + 1 || (i == 0 && j == k - 1);
                    if adjacent && p != rint(1) {
                        out.push(Violation::AdjacentProduct { i, j, got: p.to_string() });
                    }
                    if !adjacent && !p.is_zero() {
                        out.push(Violation::NonAdjacentProduct { i, j, got: p.to_string() });
                    }
                }
            }
        }
        if k >= 2 {
            // Each component is a smooth rational curve: c^2 = -K.c - 2.
            for (i, c) in self.components.iter().enumerate() {
                let sq = self.view.intersect(c, c)?;
                let expected = self.view.intersect(&anti, c)? - rint(2);
                if sq != expected {
                    out.push(Violation::Adjunction {
                        index: i,
                        square: sq.to_string(),
                        expected: expected.to_string(),
                    });
                }
            }
        }
        if k >= 5 {
            let mut all_nef = true;
            for c in &self.components {
                if !self.view.is_nef(c)? {
                    all_nef = false;
                    break;
                }
            }
            if all_nef {
                out.push(Violation::NefCycleTooLong { k });
            }
        }
        Ok(out)
    }

    pub fn ensure_valid(&self) -> Result<(), ConfigError> {
        let v = self.validate()?;
        if v.is_empty() {
            Ok(())
        } else {
            Err(ConfigError::Invalid(v))
        }
    }

    /// The cyclic walk around the circle: vertex `i`, then the edge from
    /// `i` to `i + 1`, back to the start.
    pub fn circle_atlas(&self) -> Vec<(usize, NodeRef)> {
        (0..self.node_count()).map(|i| (self.node(i).left, self.node(i))).collect()
    }

    pub fn all_components_nef(&self) -> Result<bool, LatticeError> {
        for c in &self.components {
            if !self.view.is_nef(c)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Contracts non-nef components one at a time until every component is
    /// nef, returning the resulting configuration and the induced bijection
    /// of circle points.
    pub fn contract_non_nef(&self) -> Result<(CycleConfig, PointMap), ConfigError> {
        let mut current = self.clone();
        let mut steps = Vec::new();
        loop {
            let mut target = None;
            for (i, c) in current.components.iter().enumerate() {
                if !current.view.is_nef(c)? {
                    target = Some(i);
                    break;
                }
            }
            let Some(j) = target else { break };
            let sq = current.component_square(j)?;
            if sq != rint(-1) {
                return Err(ConfigError::NonNefSquare { index: j, square: sq.to_string() });
            }
            let k = current.components.len();
            debug_assert!(k >= 2, "an irreducible anticanonical class is nef");
            let view = current.view.contract(&current.components[j])?;
            let mut components = Vec::with_capacity(k - 1);
            for (i, c) in current.components.iter().enumerate() {
                if i != j {
                    components.push(view.pushforward(c)?);
                }
            }
            steps.push(StepMap { j, k });
            current = CycleConfig {
                view,
                components,
                branch_flip: current.branch_flip,
            };
        }
        Ok((current, PointMap { steps }))
    }

    /// Exhaustive search for a unicuspidal witness class at a node, with
    /// weights `p` on the left branch and `q` on the right.
    pub fn witness(
        &self,
        node: &NodeRef,
        p: u64,
        q: u64,
        bound: i64,
    ) -> Result<WitnessSearch, LatticeError> {
        let branches = if self.components.len() >= 2 {
            Some((node.left, node.right))
        } else {
            None
        };
        unicuspidal_witness(&self.view, &self.components, branches, p, q, bound)
    }

    pub fn witness_default_bound(
        &self,
        node: &NodeRef,
        p: u64,
        q: u64,
    ) -> Result<WitnessSearch, LatticeError> {
        self.witness(node, p, q, default_witness_bound(p, q))
    }

    fn blowup_base(&self) -> Result<u8, ConfigError> {
        if !self.view.contracted().is_empty() {
            return Err(ConfigError::Lattice(LatticeError::UnknownKind(
                "blow-up of a contracted view".into(),
            )));
        }
        match self.view.ambient() {
            SurfaceLattice::BlowupOfPlane { n } if *n < 8 => Ok(*n),
            _ => Err(ConfigError::Lattice(LatticeError::TooManyPoints(9))),
        }
    }

    fn extend_class(c: &DivisorClass, last: i64) -> DivisorClass {
        let mut coeffs = c.coeffs().to_vec();
        coeffs.push(rint(last));
        DivisorClass::new(coeffs)
    }

    /// Blows up the node `node_index`: the exceptional curve becomes a new
    /// component between the two branches (for an irreducible cycle, the
    /// strict transform and the exceptional curve form a two-cycle). Both
    /// branch squares must stay nonnegative before the blow-up.
    pub fn blow_up_node(&self, node_index: usize) -> Result<CycleConfig, ConfigError> {
        let n = self.blowup_base()?;
        let node = self.node(node_index);
        let lattice = SurfaceLattice::blowup_of_plane(n + 1)?;
        let k = self.components.len();
        let exceptional = || {
            DivisorClass::new(
                std::iter::repeat(Rat::zero())
                    .take(lattice.rank() - 1)
                    .chain(std::iter::once(rint(1)))
                    .collect(),
            )
        };
        let mut comps: Vec<DivisorClass> = Vec::with_capacity(k + 1);
        if k == 1 {
            if self.degree() < 3 {
                return Err(ConfigError::NonNefSquare {
                    index: 0,
                    square: rint(self.degree() - 4).to_string(),
                });
            }
            // Strict transform of a nodal curve through the node: C - 2E.
            comps.push(Self::extend_class(&self.components[0], -2));
            comps.push(exceptional());
        } else {
            for (i, c) in self.components.iter().enumerate() {
                let on_node = i == node.left || i == node.right;
                let sq = self.view.intersect(c, c)?;
                if on_node && sq.is_negative() {
                    return Err(ConfigError::NonNefSquare { index: i, square: sq.to_string() });
                }
                comps.push(Self::extend_class(c, if on_node { -1 } else { 0 }));
                if i == node.left {
                    // The exceptional component sits between the branches;
                    // when the node joins the last and first components the
                    // end of the list is cyclically correct.
                    comps.push(exceptional());
                }
            }
        }
        Ok(CycleConfig::new(lattice, comps, self.branch_flip))
    }

    /// Blows up a general point of component `comp`: the component class
    /// drops by the new exceptional class, the cycle length is unchanged.
    pub fn blow_up_interior_point(&self, comp: usize) -> Result<CycleConfig, ConfigError> {
        let n = self.blowup_base()?;
        let lattice = SurfaceLattice::blowup_of_plane(n + 1)?;
        let sq = self.view.intersect(&self.components[comp], &self.components[comp])?;
        if sq.is_negative() {
            return Err(ConfigError::NonNefSquare { index: comp, square: sq.to_string() });
        }
        let comps = self
            .components
            .iter()
            .enumerate()
            .map(|(i, c)| Self::extend_class(c, if i == comp { -1 } else { 0 }))
            .collect();
        Ok(CycleConfig::new(lattice, comps, self.branch_flip))
    }
}

/// One contraction step: component `j` removed from a `k`-component cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
struct StepMap {
    j: usize,
    k: usize,
}

impl StepMap {
    fn new_comp(&self, i: usize) -> usize {
        if i < self.j {
            i
        } else {
            i - 1
        }
    }

    fn old_comp(&self, i: usize) -> usize {
        if i < self.j {
            i
        } else {
            i + 1
        }
    }

    /// Node whose right branch is the contracted component.
    fn node_right_contracted(&self) -> usize {
        (self.j + self.k - 1) % self.k
    }

    /// Node whose left branch is the contracted component.
    fn node_left_contracted(&self) -> usize {
        self.j
    }

    /// Index of the merged node in the contracted configuration.
    fn merged_node(&self) -> usize {
        self.new_comp(self.node_right_contracted())
    }

    fn apply(&self, pt: &DualComplexPoint) -> DualComplexPoint {
        let one = rint(1);
        match pt {
            DualComplexPoint::Vertex(i) if *i == self.j => DualComplexPoint::Edge {
                node: self.merged_node(),
                t: QuadVal::from_int(1),
            },
            DualComplexPoint::Vertex(i) => DualComplexPoint::Vertex(self.new_comp(*i)),
            DualComplexPoint::Edge { node, t } => {
                if *node == self.node_right_contracted() {
                    // Weights (1, t), t along the contracted branch, become
                    // (1 + t, t): edge coordinate t / (1 + t).
                    let t2 = t.try_div(&t.add_rat(&one)).expect("1 + t > 0");
                    DualComplexPoint::Edge { node: self.merged_node(), t: t2 }
                } else if *node == self.node_left_contracted() {
                    // Weights (1, t), 1 along the contracted branch, become
                    // (1, 1 + t).
                    DualComplexPoint::Edge {
                        node: self.merged_node(),
                        t: t.add_rat(&one),
                    }
                } else {
                    DualComplexPoint::Edge { node: self.new_comp(*node), t: t.clone() }
                }
            }
        }
    }

    fn invert(&self, pt: &DualComplexPoint) -> DualComplexPoint {
        let one = QuadVal::from_int(1);
        match pt {
            DualComplexPoint::Vertex(i) => DualComplexPoint::Vertex(self.old_comp(*i)),
            DualComplexPoint::Edge { node, t } => {
                if *node == self.merged_node() {
                    match t.cmp_exact(&one).expect("comparable with 1") {
                        std::cmp::Ordering::Less => {
                            // t' = t / (1 + t)  =>  t = t' / (1 - t').
                            let denom = one.try_sub(t).expect("shared radicand");
                            DualComplexPoint::Edge {
                                node: self.node_right_contracted(),
                                t: t.try_div(&denom).expect("t' < 1"),
                            }
                        }
                        std::cmp::Ordering::Equal => DualComplexPoint::Vertex(self.j),
                        std::cmp::Ordering::Greater => DualComplexPoint::Edge {
                            node: self.node_left_contracted(),
                            t: t.try_sub(&one).expect("shared radicand"),
                        },
                    }
                } else {
                    DualComplexPoint::Edge { node: self.old_comp(*node), t: t.clone() }
                }
            }
        }
    }
}

/// The bijection of circle points induced by a chain of contractions.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PointMap {
    steps: Vec<StepMap>,
}

impl PointMap {
    pub fn is_identity(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn step_count(&self) -> usize {
        self.steps.len()
    }

    /// Maps a point of the original circle to the contracted circle.
    pub fn apply(&self, pt: &DualComplexPoint) -> DualComplexPoint {
        let mut p = pt.clone();
        for s in &self.steps {
            p = s.apply(&p);
        }
        p
    }

    /// Maps a point of the contracted circle back to the original one.
    pub fn invert(&self, pt: &DualComplexPoint) -> DualComplexPoint {
        let mut p = pt.clone();
        for s in self.steps.iter().rev() {
            p = s.invert(&p);
        }
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn bl(n: u8) -> SurfaceLattice {
        SurfaceLattice::blowup_of_plane(n).unwrap()
    }

    fn cfg(n: u8, comps: &[&[i64]]) -> CycleConfig {
        CycleConfig::new(
            bl(n),
            comps.iter().map(|c| DivisorClass::from_ints(c)).collect(),
            false,
        )
    }

    #[test]
    fn validate_irreducible_and_broken() {
        let c = CycleConfig::irreducible(bl(1));
        assert!(c.validate().unwrap().is_empty());

        // k = 3 with wrong sum.
        let broken = cfg(0, &[&[1], &[1], &[2]]);
        let v = broken.validate().unwrap();
        assert!(v
            .iter()
            .any(|x| matches!(x, Violation::AnticanonicalSumMismatch { .. })));
    }

    #[test]
    fn validate_hexagon_of_minus_one_curves() {
        // Degree-6 toric hexagon: all components are (-1)-curves, so the
        // nef-cycle length cap does not apply and the config is valid.
        let hexagon = cfg(
            3,
            &[
                &[0, 1, 0, 0],
                &[1, -1, -1, 0],
                &[0, 0, 1, 0],
                &[1, 0, -1, -1],
                &[0, 0, 0, 1],
                &[1, -1, 0, -1],
            ],
        );
        assert_eq!(hexagon.validate().unwrap(), Vec::new());
    }

    #[test]
    fn validate_triangle_of_lines() {
        let c = cfg(0, &[&[1], &[1], &[1]]);
        assert!(c.validate().unwrap().is_empty());
        assert_eq!(c.node_count(), 3);
    }

    #[test]
    fn circle_atlas_shapes() {
        let k1 = CycleConfig::irreducible(bl(1));
        let atlas = k1.circle_atlas();
        assert_eq!(atlas.len(), 1);
        assert_eq!(atlas[0].1, NodeRef { index: 0, left: 0, right: 0 });

        let k2 = cfg(0, &[&[1], &[2]]);
        assert!(k2.validate().unwrap().is_empty());
        let atlas = k2.circle_atlas();
        assert_eq!(atlas.len(), 2);
        assert_eq!(atlas[0].1, NodeRef { index: 0, left: 0, right: 1 });
        assert_eq!(atlas[1].1, NodeRef { index: 1, left: 1, right: 0 });

        let quad = CycleConfig::new(
            SurfaceLattice::Quadric,
            vec![
                DivisorClass::from_ints(&[1, 0]),
                DivisorClass::from_ints(&[0, 1]),
                DivisorClass::from_ints(&[1, 0]),
                DivisorClass::from_ints(&[0, 1]),
            ],
            false,
        );
        assert!(quad.validate().unwrap().is_empty());
        assert_eq!(quad.circle_atlas().len(), 4);
    }

    #[test]
    fn contract_identity_when_nef() {
        let c = cfg(0, &[&[1], &[2]]);
        let (c2, map) = c.contract_non_nef().unwrap();
        assert!(map.is_identity());
        assert_eq!(c2, c);
    }

    /// Three-component cycle on Bl_2 with E_1 non-nef; contracting E_1
    /// lands on the line-plus-conic pair in the plane.
    #[test]
    fn contract_three_cycle() {
        let c = cfg(2, &[&[0, 1, 0], &[1, -1, 0], &[2, -1, -1]]);
        assert_eq!(c.validate().unwrap(), Vec::new());
        let (c2, map) = c.contract_non_nef().unwrap();
        assert_eq!(map.step_count(), 1);
        assert_eq!(c2.component_count(), 2);
        assert_eq!(c2.degree(), 8);
        // Pushforwards: H - E_1 -> H, 2H - E_2 unchanged.
        assert_eq!(c2.components()[0], DivisorClass::from_ints(&[1, 0, 0]));
        assert_eq!(c2.components()[1], DivisorClass::from_ints(&[2, 0, -1]));
        assert!(c2.all_components_nef().unwrap());

        // Vertex of the contracted component lands at t = 1 on the merged
        // node; the merged node joins the two surviving components.
        let img = map.apply(&DualComplexPoint::Vertex(0));
        assert_eq!(
            img,
            DualComplexPoint::Edge { node: 1, t: QuadVal::from_int(1) }
        );

        // Node 2 (left = comp 2, right = comp 0 = contracted): t -> t/(1+t).
        let pt = DualComplexPoint::edge_from_rat(2, rat(1, 2)).unwrap();
        let img = map.apply(&pt);
        assert_eq!(
            img,
            DualComplexPoint::Edge {
                node: 1,
                t: QuadVal::from_rat(rat(1, 3))
            }
        );
        // Node 0 (left = contracted, right = comp 1): t -> 1 + t.
        let pt = DualComplexPoint::edge_from_rat(0, rat(1, 2)).unwrap();
        let img = map.apply(&pt);
        assert_eq!(
            img,
            DualComplexPoint::Edge {
                node: 1,
                t: QuadVal::from_rat(rat(3, 2))
            }
        );
        // Node 1 (between survivors) keeps its coordinate.
        let pt = DualComplexPoint::edge_from_rat(1, rat(7, 5)).unwrap();
        let img = map.apply(&pt);
        assert_eq!(
            img,
            DualComplexPoint::Edge {
                node: 0,
                t: QuadVal::from_rat(rat(7, 5))
            }
        );

        // Round trips.
        for pt in [
            DualComplexPoint::Vertex(0),
            DualComplexPoint::Vertex(1),
            DualComplexPoint::Vertex(2),
            DualComplexPoint::edge_from_rat(0, rat(3, 4)).unwrap(),
            DualComplexPoint::edge_from_rat(1, rat(5, 2)).unwrap(),
            DualComplexPoint::edge_from_rat(2, rat(9, 7)).unwrap(),
        ] {
            assert_eq!(map.invert(&map.apply(&pt)), pt, "round trip of {pt}");
        }
    }

    /// Two components on Bl_1 with E non-nef; contracting reaches the
    /// irreducible nodal cubic in the plane.
    #[test]
    fn contract_two_cycle_to_irreducible() {
        let c = cfg(1, &[&[3, -2], &[0, 1]]);
        assert_eq!(c.validate().unwrap(), Vec::new());
        let (c2, map) = c.contract_non_nef().unwrap();
        assert_eq!(c2.component_count(), 1);
        assert_eq!(c2.degree(), 9);
        assert_eq!(c2.components()[0], DivisorClass::from_ints(&[3, 0]));

        // Node 0 = (c0, E): contracted on the right: t -> t/(1+t) in (0,1).
        let pt = DualComplexPoint::edge_from_rat(0, rat(2, 1)).unwrap();
        assert_eq!(
            map.apply(&pt),
            DualComplexPoint::Edge { node: 0, t: QuadVal::from_rat(rat(2, 3)) }
        );
        // Node 1 = (E, c0): contracted on the left: t -> 1 + t in (1, inf).
        let pt = DualComplexPoint::edge_from_rat(1, rat(2, 1)).unwrap();
        assert_eq!(
            map.apply(&pt),
            DualComplexPoint::Edge { node: 0, t: QuadVal::from_int(3) }
        );
        // Vertex(E) sits between them at t = 1.
        assert_eq!(
            map.apply(&DualComplexPoint::Vertex(1)),
            DualComplexPoint::Edge { node: 0, t: QuadVal::from_int(1) }
        );
        assert_eq!(
            map.apply(&DualComplexPoint::Vertex(0)),
            DualComplexPoint::Vertex(0)
        );

        // Order is preserved along each old edge.
        let ts = [rat(1, 3), rat(1, 2), rat(1, 1), rat(3, 2), rat(4, 1)];
        for node in 0..2 {
            let mut images = Vec::new();
            for t in &ts {
                let img = map.apply(&DualComplexPoint::edge_from_rat(node, t.clone()).unwrap());
                let DualComplexPoint::Edge { t: it, .. } = img else {
                    panic!("edge maps to edge")
                };
                images.push(it);
            }
            for w in images.windows(2) {
                assert_eq!(w[0].cmp_exact(&w[1]).unwrap(), std::cmp::Ordering::Less);
            }
        }

        for pt in [
            DualComplexPoint::Vertex(1),
            DualComplexPoint::edge_from_rat(0, rat(5, 3)).unwrap(),
            DualComplexPoint::edge_from_rat(1, rat(1, 6)).unwrap(),
        ] {
            assert_eq!(map.invert(&map.apply(&pt)), pt);
        }
    }

    #[test]
    fn contract_rejects_bad_square() {
        // E_1 - E_2 passes the numerical cycle invariants (square -2,
        // -K.c = 0) but is not a (-1)-class, so the contraction guard
        // must fire rather than contract it.
        let c = cfg(2, &[&[0, 1, -1], &[3, -2, 0]]);
        assert_eq!(c.validate().unwrap(), Vec::new());
        match c.contract_non_nef() {
            Err(ConfigError::NonNefSquare { index: 0, .. }) => {}
            other => panic!("expected NonNefSquare, got {other:?}"),
        }
    }

    #[test]
    fn witness_passthrough() {
        let c = CycleConfig::irreducible(bl(1));
        let node = c.node(0);
        match c.witness_default_bound(&node, 1, 2).unwrap() {
            WitnessSearch::Found(l) => assert_eq!(l, DivisorClass::from_ints(&[1, 0])),
            other => panic!("expected witness, got {other:?}"),
        }
    }
}
