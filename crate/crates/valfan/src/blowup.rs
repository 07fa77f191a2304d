//! Intersection calculus on weighted blow-up models: exceptional
//! self-intersections, pairwise exceptional products, strict-transform
//! intersection matrices as exact functions of the edge coordinate `t`,
//! and valuation-ideal colengths.
//!
//! Conventions: at a node the blow-up weight is `p` along the left branch
//! and `q` along the right, `t = q/p`. The strict transform of the left
//! component loses `1/t` from its square, the right one loses `t`, and
//! their product drops by `1`.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::cycle::{CycleConfig, DualComplexPoint, NodeRef};
use crate::exact::{ExactError, ExtPos, QuadVal, Rat};
use crate::lattice::LatticeError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BlowupError {
    #[error("weights must be coprime positive integers, got ({0}, {1})")]
    BadWeights(u64, u64),
    #[error("the two weight vectors have equal slope {0}/{1}")]
    EqualSlopes(u64, u64),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn check_weights(p: u64, q: u64) -> Result<(), BlowupError> {
    if p == 0 || q == 0 || gcd(p, q) != 1 {
        return Err(BlowupError::BadWeights(p, q));
    }
    Ok(())
}

/// `E^2 = -1/(pq)` for the `(p, q)`-weighted blow-up at a smooth point.
pub fn et_self(p: u64, q: u64) -> Result<Rat, BlowupError> {
    check_weights(p, q)?;
    Ok(Rat::new(BigInt::from(-1), BigInt::from(p * q)))
}

/// Intersection numbers of the two exceptional divisors extracted together
/// by weight vectors `(p1, q1)` and `(p2, q2)` at the same node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairIntersections {
    /// Weight vectors in canonical slope order (`q1/p1 < q2/p2`).
    pub first: (u64, u64),
    pub second: (u64, u64),
    pub e1_sq: Rat,
    pub e2_sq: Rat,
    pub e1_e2: Rat,
}

/// Computes `(E1^2, E2^2, E1.E2)` on the model extracting both divisors.
/// Inputs may come in either order; they are sorted so the determinant
/// `q2 p1 - p2 q1` is positive.
pub fn pair_intersections(
    p1: u64,
    q1: u64,
    p2: u64,
    q2: u64,
) -> Result<PairIntersections, BlowupError> {
    check_weights(p1, q1)?;
    check_weights(p2, q2)?;
    let det = |a: (u64, u64), b: (u64, u64)| -> i64 {
        (b.1 * a.0) as i64 - (b.0 * a.1) as i64
    };
    let (first, second) = if det((p1, q1), (p2, q2)) > 0 {
        ((p1, q1), (p2, q2))
    } else {
        ((p2, q2), (p1, q1))
    };
    let s = det(first, second);
    if s == 0 {
        return Err(BlowupError::EqualSlopes(p1, q1));
    }
    let s = BigInt::from(s);
    Ok(PairIntersections {
        first,
        second,
        e1_sq: Rat::new(BigInt::from(-(second.1 as i64)), BigInt::from(first.1) * &s),
        e2_sq: Rat::new(BigInt::from(-(first.0 as i64)), BigInt::from(second.0) * &s),
        e1_e2: Rat::new(BigInt::from(1), s),
    })
}

/// Colength of the valuation ideal at level `pq`: `(pq + p + q - 1)/2`,
/// the number of lattice points strictly below the segment from `(q, 0)`
/// to `(0, p)`.
pub fn colength(p: u64, q: u64) -> Result<u64, BlowupError> {
    check_weights(p, q)?;
    Ok((p * q + p + q - 1) / 2)
}

/// The symmetric matrix of strict-transform products on the model at one
/// circle point. For an edge point the matrix covers all `k` components;
/// for a vertex it covers the remaining `k - 1` on the surface itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformMatrix {
    entries: Vec<Vec<QuadVal>>,
    /// Component indices labelling the rows/columns.
    component_indices: Vec<usize>,
    point: DualComplexPoint,
}

impl TransformMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<QuadVal>] {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> &QuadVal {
        &self.entries[i][j]
    }

    pub fn component_indices(&self) -> &[usize] {
        &self.component_indices
    }

    pub fn point(&self) -> &DualComplexPoint {
        &self.point
    }

    /// Rational entry matrix, when every entry is rational.
    pub fn to_rational(&self) -> Option<Vec<Vec<Rat>>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|e| e.as_rat().cloned()).collect())
            .collect()
    }
}

/// Builds the strict-transform intersection matrix at weight `t` on the
/// edge of `node`, or at a branch vertex for `t` in `{0, inf}`.
pub fn transform_matrix(
    config: &CycleConfig,
    node: &NodeRef,
    t: &ExtPos,
) -> Result<TransformMatrix, BlowupError> {
    match t {
        ExtPos::Zero => vertex_matrix(config, node.left),
        ExtPos::Infinity => vertex_matrix(config, node.right),
        ExtPos::Finite(t) => edge_matrix(config, node, t),
    }
}

fn edge_matrix(
    config: &CycleConfig,
    node: &NodeRef,
    t: &QuadVal,
) -> Result<TransformMatrix, BlowupError> {
    let k = config.component_count();
    let view = config.view();
    let comps = config.components();
    let t_inv = t.recip()?;
    let mut entries = vec![vec![QuadVal::from_rat(Rat::zero()); k]; k];
    for i in 0..k {
        for j in i..k {
            let ambient = QuadVal::from_rat(view.intersect(&comps[i], &comps[j])?);
            let val = if k == 1 {
                // C_t^2 = C^2 - (1 + t)^2 / t = d - 1/t - t - 2.
                ambient
                    .try_sub(&t_inv)?
                    .try_sub(t)?
                    .try_sub(&QuadVal::from_int(2))?
            } else if i == j && i == node.left {
                ambient.try_sub(&t_inv)?
            } else if i == j && i == node.right {
                ambient.try_sub(t)?
            } else if (i, j) == (node.left.min(node.right), node.left.max(node.right)) {
                ambient.try_sub(&QuadVal::from_int(1))?
            } else {
                ambient
            };
            entries[i][j] = val.clone();
            entries[j][i] = val;
        }
    }
    Ok(TransformMatrix {
        entries,
        component_indices: (0..k).collect(),
        point: DualComplexPoint::Edge { node: node.index, t: t.clone() },
    })
}

/// Gram matrix of the components other than `exclude`, on the surface
/// itself (`C_Y = C - E` for a divisorial vertex point).
fn vertex_matrix(config: &CycleConfig, exclude: usize) -> Result<TransformMatrix, BlowupError> {
    let view = config.view();
    let comps = config.components();
    let indices: Vec<usize> = (0..comps.len()).filter(|&i| i != exclude).collect();
    let m = indices.len();
    let mut entries = vec![vec![QuadVal::from_rat(Rat::zero()); m]; m];
    for a in 0..m {
        for b in a..m {
            let v = QuadVal::from_rat(view.intersect(&comps[indices[a]], &comps[indices[b]])?);
            entries[a][b] = v.clone();
            entries[b][a] = v;
        }
    }
    Ok(TransformMatrix {
        entries,
        component_indices: indices,
        point: DualComplexPoint::Vertex(exclude),
    })
}

/// A weighted blow-up model at a node: one exceptional divisor for a single
/// weight vector, two for a pair of distinct slopes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlowupWeights {
    Single(u64, u64),
    Pair((u64, u64), (u64, u64)),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowupModel {
    pub node: NodeRef,
    pub weights: BlowupWeights,
}

impl BlowupModel {
    pub fn single(node: NodeRef, p: u64, q: u64) -> Result<Self, BlowupError> {
        check_weights(p, q)?;
        Ok(Self { node, weights: BlowupWeights::Single(p, q) })
    }

    pub fn pair(node: NodeRef, w1: (u64, u64), w2: (u64, u64)) -> Result<Self, BlowupError> {
        let pi = pair_intersections(w1.0, w1.1, w2.0, w2.1)?;
        Ok(Self { node, weights: BlowupWeights::Pair(pi.first, pi.second) })
    }

    /// The exceptional locus is a weighted projective line `P(p, q)`; the
    /// strict transforms of the two branches meet it in the two torus-fixed
    /// points.
    pub fn exceptional_weights(&self) -> Vec<(u64, u64)> {
        match &self.weights {
            BlowupWeights::Single(p, q) => vec![(*p, *q)],
            BlowupWeights::Pair(a, b) => vec![*a, *b],
        }
    }

    pub fn exceptional_self_intersections(&self) -> Result<Vec<Rat>, BlowupError> {
        match &self.weights {
            BlowupWeights::Single(p, q) => Ok(vec![et_self(*p, *q)?]),
            BlowupWeights::Pair(a, b) => {
                let pi = pair_intersections(a.0, a.1, b.0, b.1)?;
                Ok(vec![pi.e1_sq, pi.e2_sq])
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rint};
    use crate::lattice::{DivisorClass, SurfaceLattice};

    fn bl(n: u8) -> SurfaceLattice {
        SurfaceLattice::blowup_of_plane(n).unwrap()
    }

    #[test]
    fn et_self_values() {
        assert_eq!(et_self(1, 1).unwrap(), rint(-1));
        assert_eq!(et_self(2, 3).unwrap(), rat(-1, 6));
        assert_eq!(et_self(1, 5).unwrap(), rat(-1, 5));
        assert!(et_self(2, 4).is_err());
        assert!(et_self(0, 1).is_err());
    }

    #[test]
    fn pair_intersection_values() {
        let pi = pair_intersections(1, 1, 1, 2).unwrap();
        assert_eq!((pi.e1_sq.clone(), pi.e2_sq.clone(), pi.e1_e2.clone()),
            (rint(-2), rint(-1), rint(1)));
        let pi = pair_intersections(1, 1, 2, 3).unwrap();
        assert_eq!((pi.e1_sq.clone(), pi.e2_sq.clone(), pi.e1_e2.clone()),
            (rint(-3), rat(-1, 2), rint(1)));
        // Inputs in either order canonicalize to the same result.
        let a = pair_intersections(2, 3, 1, 2).unwrap();
        let b = pair_intersections(1, 2, 2, 3).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.first, (2, 3));
        assert!(pair_intersections(1, 2, 2, 4).is_err());
        assert!(pair_intersections(1, 2, 1, 2).is_err());
    }

    /// Independent toric route: insert both rays into the first-quadrant
    /// fan and read intersections off consecutive ray determinants.
    #[test]
    fn pair_intersections_match_toric_fan() {
        let det = |u: (i64, i64), v: (i64, i64)| u.0 * v.1 - u.1 * v.0;
        let cases = [
            ((1u64, 1u64), (1u64, 2u64)),
            ((1, 1), (2, 3)),
            ((2, 3), (3, 4)),
            ((1, 3), (2, 7)),
            ((3, 2), (5, 4)),
        ];
        for (w1, w2) in cases {
            let pi = pair_intersections(w1.0, w1.1, w2.0, w2.1).unwrap();
            let v1 = (pi.first.0 as i64, pi.first.1 as i64);
            let v2 = (pi.second.0 as i64, pi.second.1 as i64);
            let e1 = (1, 0);
            let e2 = (0, 1);
            // Fan rays in order e1, v1, v2, e2 (slopes increase).
            let e1_sq = Rat::new(BigInt::from(-det(e1, v2)), BigInt::from(det(e1, v1) * det(v1, v2)));
            let e2_sq = Rat::new(BigInt::from(-det(v1, e2)), BigInt::from(det(v1, v2) * det(v2, e2)));
            let e1_e2 = Rat::new(BigInt::from(1), BigInt::from(det(v1, v2)));
            assert_eq!(pi.e1_sq, e1_sq);
            assert_eq!(pi.e2_sq, e2_sq);
            assert_eq!(pi.e1_e2, e1_e2);
            // Hodge-index sanity: the exceptional block is negative definite.
            assert!(pi.e1_sq.clone() < Rat::zero());
            assert!(&pi.e1_sq * &pi.e2_sq - &pi.e1_e2 * &pi.e1_e2 > Rat::zero());
        }
        // The single blow-up is the one-ray case of the same fan reading.
        for (p, q) in [(1u64, 1u64), (2, 3), (1, 5), (4, 7)] {
            let v = (p as i64, q as i64);
            let expected = Rat::new(BigInt::from(-1), BigInt::from(det((1, 0), v) * det(v, (0, 1))));
            assert_eq!(et_self(p, q).unwrap(), expected);
        }
    }

    #[test]
    fn colength_values_and_pick_oracle() {
        assert_eq!(colength(1, 1).unwrap(), 1);
        assert_eq!(colength(2, 3).unwrap(), 5);
        assert_eq!(colength(3, 5).unwrap(), 11);
        // Brute lattice count below the (p, q) segment.
        let brute = |p: u64, q: u64| -> u64 {
            let mut n = 0;
            for i in 0..p {
                for j in 0..q {
                    if q * i + p * j < p * q {
                        n += 1;
                    }
                }
            }
            n
        };
        for p in 1..=12u64 {
            for q in 1..=12u64 {
                if gcd(p, q) == 1 {
                    assert_eq!(colength(p, q).unwrap(), brute(p, q), "({p}, {q})");
                }
            }
        }
    }

    #[test]
    fn transform_matrix_examples() {
        // d = 8, k = 1, t = 1: [4].
        let c = CycleConfig::irreducible(bl(1));
        let m = transform_matrix(&c, &c.node(0), &"1".parse().unwrap()).unwrap();
        assert_eq!(m.size(), 1);
        assert_eq!(m.entry(0, 0), &QuadVal::from_int(4));

        // d = 4, k = 2 with both squares 0, t = 1: [[-1, 1], [1, -1]].
        let c = CycleConfig::new(
            bl(5),
            vec![
                DivisorClass::from_ints(&[1, -1, 0, 0, 0, 0]),
                DivisorClass::from_ints(&[2, 0, -1, -1, -1, -1]),
            ],
            false,
        );
        assert_eq!(c.validate().unwrap(), Vec::new());
        let m = transform_matrix(&c, &c.node(0), &"1".parse().unwrap()).unwrap();
        assert_eq!(m.entry(0, 0), &QuadVal::from_int(-1));
        assert_eq!(m.entry(0, 1), &QuadVal::from_int(1));
        assert_eq!(m.entry(1, 1), &QuadVal::from_int(-1));

        // d = 5, k = 2 with squares (1, 0), t = 1: [[0, 1], [1, -1]].
        let c = CycleConfig::new(
            bl(4),
            vec![
                DivisorClass::from_ints(&[2, 0, -1, -1, -1]),
                DivisorClass::from_ints(&[1, -1, 0, 0, 0]),
            ],
            false,
        );
        assert_eq!(c.validate().unwrap(), Vec::new());
        let m = transform_matrix(&c, &c.node(0), &"1".parse().unwrap()).unwrap();
        assert_eq!(m.entry(0, 0), &QuadVal::from_int(0));
        assert_eq!(m.entry(1, 1), &QuadVal::from_int(-1));
        assert_eq!(m.entry(0, 1), &QuadVal::from_int(1));
    }

    #[test]
    fn transform_matrix_vertex_points() {
        let c = CycleConfig::new(
            bl(0),
            vec![DivisorClass::from_ints(&[1]), DivisorClass::from_ints(&[2])],
            false,
        );
        let m = transform_matrix(&c, &c.node(0), &ExtPos::Zero).unwrap();
        // Vertex of component 0: remaining component is the conic, square 4.
        assert_eq!(m.size(), 1);
        assert_eq!(m.component_indices(), &[1]);
        assert_eq!(m.entry(0, 0), &QuadVal::from_int(4));
        // k = 1 vertex: empty matrix.
        let c1 = CycleConfig::irreducible(bl(1));
        let m = transform_matrix(&c1, &c1.node(0), &ExtPos::Infinity).unwrap();
        assert_eq!(m.size(), 0);
    }

    #[test]
    fn matrix_swap_symmetry() {
        // The matrix at (node 0, t) equals the matrix at (node 1, 1/t):
        // entries are component-indexed.
        let c = CycleConfig::new(
            bl(0),
            vec![DivisorClass::from_ints(&[1]), DivisorClass::from_ints(&[2])],
            false,
        );
        let t: ExtPos = "5/3".parse().unwrap();
        let m0 = transform_matrix(&c, &c.node(0), &t).unwrap();
        let m1 = transform_matrix(&c, &c.node(1), &t.recip()).unwrap();
        assert_eq!(m0.entries(), m1.entries());
    }

    #[test]
    fn irrational_edge_entry_sign_matches_interval() {
        // k = 1: the single entry is positive iff t lies in I_d.
        let c = CycleConfig::irreducible(bl(1));
        let node = c.node(0);
        // Just inside and outside the right endpoint 3 + 2*sqrt(2).
        let inside: ExtPos = "2 + 2*sqrt(2)".parse().unwrap();
        let outside: ExtPos = "4 + 2*sqrt(2)".parse().unwrap();
        let m = transform_matrix(&c, &node, &inside).unwrap();
        assert!(m.entry(0, 0).is_positive());
        let m = transform_matrix(&c, &node, &outside).unwrap();
        assert!(m.entry(0, 0).is_negative());
        // At the endpoint itself the entry vanishes.
        let endpoint: ExtPos = "3 + 2*sqrt(2)".parse().unwrap();
        let m = transform_matrix(&c, &node, &endpoint).unwrap();
        assert!(m.entry(0, 0).is_zero());
    }

    #[test]
    fn blowup_model_data() {
        let c = CycleConfig::irreducible(bl(1));
        let m = BlowupModel::single(c.node(0), 2, 3).unwrap();
        assert_eq!(m.exceptional_weights(), vec![(2, 3)]);
        assert_eq!(m.exceptional_self_intersections().unwrap(), vec![rat(-1, 6)]);
        let m = BlowupModel::pair(c.node(0), (1, 2), (1, 1)).unwrap();
        assert_eq!(m.exceptional_weights(), vec![(1, 1), (1, 2)]);
    }
}
