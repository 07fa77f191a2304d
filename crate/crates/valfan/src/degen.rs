//! Degeneration certificates for the degree-8 family: the integer
//! recurrence behind the chamber endpoints, the toric polytopes of the
//! chamber degenerations with exact Ehrhart counting, the abstract monoid
//! algebra Hilbert function, and the weighted-projective complete
//! intersection records at chamber boundaries together with a weighted
//! homogeneity validator.
//!
//! The records in [`wps_ci_record`] are transcribed data. The validator
//! reports the weighted degree of every monomial and the naive
//! anticanonical degree of the complete intersection; mismatches are
//! reported as findings, not errors.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::exact::Rat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DegenError {
    #[error("a polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("duplicate vertex ({0}, {1})")]
    DuplicateVertex(String, String),
    #[error("vertices are not in convex position")]
    NonConvex,
    #[error("monoid generators must have positive level")]
    GeneratorLevelZero,
    #[error("polygon has a lattice point with a negative coordinate")]
    NegativeCoordinate,
}

/// The sequence with seeds `(g_0, ..., g_5) = (1, 1, 1, 1, 2, 4)` and
/// `g_{k+6} = 6 g_{k+3} - g_k` in both directions.
pub fn g(k: i64) -> BigInt {
    let seeds: [i64; 6] = [1, 1, 1, 1, 2, 4];
    if (0..6).contains(&k) {
        return BigInt::from(seeds[k as usize]);
    }
    if k >= 6 {
        // March the window [g_{k-6}, ..., g_{k-1}] upward.
        let mut window: Vec<BigInt> = seeds.iter().map(|&s| BigInt::from(s)).collect();
        let mut top = 5i64;
        while top < k {
            let next = 6 * &window[3] - &window[0];
            window.remove(0);
            window.push(next);
            top += 1;
        }
        window.pop().unwrap()
    } else {
        // g_k = 6 g_{k+3} - g_{k+6} downward.
        let mut window: Vec<BigInt> = seeds.iter().map(|&s| BigInt::from(s)).collect();
        let mut bottom = 0i64;
        while bottom > k {
            let prev = 6 * &window[2] - &window[5];
            window.pop();
            window.insert(0, prev);
            bottom -= 1;
        }
        window[0].clone()
    }
}

/// Memoized access to the same sequence.
#[derive(Debug, Default)]
pub struct GSequence {
    memo: HashMap<i64, BigInt>,
}

impl GSequence {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, k: i64) -> BigInt {
        self.memo.entry(k).or_insert_with(|| g(k)).clone()
    }
}

/// Endpoints `(g_{k+3}/g_k, g_{k+4}/g_{k+1})` of the `k`-th chamber, reduced.
pub fn chamber_endpoints(k: i64) -> (Rat, Rat) {
    (Rat::new(g(k + 3), g(k)), Rat::new(g(k + 4), g(k + 1)))
}

/// A convex polygon with rational vertices in cyclic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPolytope {
    vertices: Vec<(Rat, Rat)>,
}

impl RationalPolytope {
    /// Accepts vertices in either orientation and stores them
    /// counterclockwise; rejects non-convex input.
    pub fn new(vertices: Vec<(Rat, Rat)>) -> Result<Self, DegenError> {
        let n = vertices.len();
        if n < 3 {
            return Err(DegenError::TooFewVertices(n));
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if vertices[i] == vertices[j] {
                    return Err(DegenError::DuplicateVertex(
                        vertices[i].0.to_string(),
                        vertices[i].1.to_string(),
                    ));
                }
            }
        }
        let cross = |a: &(Rat, Rat), b: &(Rat, Rat), c: &(Rat, Rat)| -> Rat {
            (&b.0 - &a.0) * (&c.1 - &b.1) - (&b.1 - &a.1) * (&c.0 - &b.0)
        };
        let mut pos = false;
        let mut neg = false;
        for i in 0..n {
            let c = cross(&vertices[i], &vertices[(i + 1) % n], &vertices[(i + 2) % n]);
            if c.is_positive() {
                pos = true;
            } else if c.is_negative() {
                neg = true;
            }
        }
        if pos && neg {
            return Err(DegenError::NonConvex);
        }
        let mut vertices = vertices;
        if neg {
            vertices.reverse();
        }
        Ok(Self { vertices })
    }

    pub fn from_ints(vertices: &[(i64, i64)]) -> Result<Self, DegenError> {
        Self::new(
            vertices
                .iter()
                .map(|&(x, y)| (Rat::from_integer(x.into()), Rat::from_integer(y.into())))
                .collect(),
        )
    }

    pub fn vertices(&self) -> &[(Rat, Rat)] {
        &self.vertices
    }

    /// Twice the Euclidean area, by the shoelace sum; exact.
    pub fn area2(&self) -> Rat {
        let n = self.vertices.len();
        let mut acc = Rat::zero();
        for i in 0..n {
            let (x1, y1) = &self.vertices[i];
            let (x2, y2) = &self.vertices[(i + 1) % n];
            acc += x1 * y2 - x2 * y1;
        }
        acc.abs()
    }

    /// Least common multiple of the vertex coordinate denominators; the
    /// dilation `mP` has integral vertices exactly when this divides `m`.
    pub fn denominator_lcm(&self) -> BigInt {
        use num_integer::Integer;
        let mut l = BigInt::one();
        for (x, y) in &self.vertices {
            l = l.lcm(x.denom());
            l = l.lcm(y.denom());
        }
        l
    }

    /// `#(mP  Z^2)` by exact row scanning.
    pub fn ehrhart(&self, m: u32) -> u64 {
        self.rows(m)
            .into_par_iter()
            .map(|(lo, hi)| {
                let lo = lo.ceil().to_integer();
                let hi = hi.floor().to_integer();
                if lo <= hi {
                    (hi - lo + 1u32).to_u64().expect("row count fits u64")
                } else {
                    0
                }
            })
            .sum()
    }

    /// The lattice points of `mP`, row by row.
    pub fn lattice_points(&self, m: u32) -> Result<Vec<(BigInt, BigInt)>, DegenError> {
        let mut out = Vec::new();
        let ymin = self
            .vertices
            .iter()
            .map(|(_, y)| y)
            .min()
            .unwrap()
            .clone();
        let scale = Rat::from_integer(m.into());
        let ybase = (ymin * &scale).ceil().to_integer();
        for (i, (lo, hi)) in self.rows(m).into_iter().enumerate() {
            let y = &ybase + BigInt::from(i);
            let mut x = lo.ceil().to_integer();
            let xmax = hi.floor().to_integer();
            while x <= xmax {
                out.push((x.clone(), y.clone()));
                x += 1;
            }
        }
        Ok(out)
    }

    /// Exact `[x_min, x_max]` spans of the integer rows of `mP`.
    fn rows(&self, m: u32) -> Vec<(Rat, Rat)> {
        let scale = Rat::from_integer(m.into());
        let scaled: Vec<(Rat, Rat)> = self
            .vertices
            .iter()
            .map(|(x, y)| (x * &scale, y * &scale))
            .collect();
        let ymin = scaled.iter().map(|(_, y)| y.clone()).min().unwrap();
        let ymax = scaled.iter().map(|(_, y)| y.clone()).max().unwrap();
        let ylo = ymin.ceil().to_integer();
        let yhi = ymax.floor().to_integer();
        let mut rows = Vec::new();
        let mut y = ylo;
        while y <= yhi {
            let yr = Rat::from_integer(y.clone());
            let mut xlo: Option<Rat> = None;
            let mut xhi: Option<Rat> = None;
            let n = scaled.len();
            for i in 0..n {
                let (x1, y1) = &scaled[i];
                let (x2, y2) = &scaled[(i + 1) % n];
                let (ya, yb) = if y1 <= y2 { (y1, y2) } else { (y2, y1) };
                if &yr < ya || &yr > yb {
                    continue;
                }
                let candidates: Vec<Rat> = if y1 == y2 {
                    vec![x1.clone(), x2.clone()]
                } else {
                    let t = (&yr - y1) / (y2 - y1);
                    vec![x1 + (x2 - x1) * t]
                };
                for c in candidates {
                    xlo = Some(match xlo {
                        Some(v) if v <= c => v,
                        _ => c.clone(),
                    });
                    xhi = Some(match xhi {
                        Some(v) if v >= c => v,
                        _ => c,
                    });
                }
            }
            if let (Some(lo), Some(hi)) = (xlo, xhi) {
                rows.push((lo, hi));
            }
            y += 1;
        }
        rows
    }
}

/// The toric polytope of the `k`-th chamber degeneration; the vertex
/// formulas depend on `k mod 3`.
pub fn polytope(k: i64) -> RationalPolytope {
    let g1 = g(k + 1);
    let g2 = g(k + 2);
    let g3 = g(k + 3);
    let r = |n: BigInt, d: BigInt| Rat::new(n, d);
    let zero = Rat::zero();
    let verts = match k.rem_euclid(3) {
        0 => vec![
            (zero.clone(), zero.clone()),
            (r(2 * &g2 + &g3, g1.clone()), zero.clone()),
            (r(g3.clone(), g2.clone()), r(2 * &g1, g2.clone())),
            (zero, r(&g1 + &g2, g3)),
        ],
        1 => vec![
            (zero.clone(), zero.clone()),
            (r(&g2 + 2 * &g3, g1.clone()), zero.clone()),
            (r(g3.clone(), g2.clone()), r(g1.clone(), g2.clone())),
            (zero, r(2 * &g1 + &g2, g3)),
        ],
        _ => vec![
            (zero.clone(), zero.clone()),
            (r(&g2 + &g3, g1.clone()), zero.clone()),
            (r(2 * &g3, g2.clone()), r(g1.clone(), g2.clone())),
            (zero, r(&g1 + 2 * &g2, g3)),
        ],
    };
    RationalPolytope::new(verts).expect("chamber polytopes are convex")
}

/// A finitely generated submonoid of `N^3`, graded by the third coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidPresentation {
    generators: Vec<(u64, u64, u64)>,
}

impl MonoidPresentation {
    pub fn new(generators: Vec<(u64, u64, u64)>) -> Result<Self, DegenError> {
        if generators.iter().any(|&(_, _, m)| m == 0) {
            return Err(DegenError::GeneratorLevelZero);
        }
        Ok(Self { generators })
    }

    pub fn generators(&self) -> &[(u64, u64, u64)] {
        &self.generators
    }

    /// `#{(i, j) : (i, j, m)` is in the monoid`}`, by graded saturation up
    /// to level `m`.
    pub fn hilbert(&self, m: u64) -> u64 {
        let mut levels: Vec<HashSet<(u64, u64)>> = Vec::with_capacity(m as usize + 1);
        let mut base = HashSet::new();
        base.insert((0u64, 0u64));
        levels.push(base);
        for level in 1..=m {
            let mut set = HashSet::new();
            for &(gi, gj, gm) in &self.generators {
                if gm > level {
                    continue;
                }
                for &(i, j) in &levels[(level - gm) as usize] {
                    set.insert((i + gi, j + gj));
                }
            }
            levels.push(set);
        }
        levels[m as usize].len() as u64
    }
}

/// The level-one semigroup generators of a lattice polygon: one generator
/// `(x, y, 1)` per lattice point of `P`.
pub fn ehrhart_semigroup(p: &RationalPolytope) -> Result<MonoidPresentation, DegenError> {
    let pts = p.lattice_points(1)?;
    let mut gens = Vec::with_capacity(pts.len());
    for (x, y) in pts {
        let (Some(x), Some(y)) = (x.to_u64(), y.to_u64()) else {
            return Err(DegenError::NegativeCoordinate);
        };
        gens.push((x, y, 1));
    }
    MonoidPresentation::new(gens)
}

/// A complete intersection of two equations in a weighted projective space
/// on five variables, stored as formal monomial data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WpsCiRecord {
    pub weights: [BigInt; 5],
    /// Each equation is a list of `(coefficient, exponents)` terms.
    pub equations: [Vec<(i64, [BigInt; 5])>; 2],
}

/// The boundary-degeneration record at `t = g_{k+3}/g_k`, transcribed per
/// residue of `k` mod 3. The data is recorded as-is; see
/// [`validate_homogeneity`] for what it does and does not satisfy.
pub fn wps_ci_record(k: i64) -> WpsCiRecord {
    let gk = g(k);
    let g1 = g(k + 1);
    let g2 = g(k + 2);
    let g3 = g(k + 3);
    let e = |a: BigInt, b: BigInt, c: BigInt, d: BigInt, f: BigInt| [a, b, c, d, f];
    let z = BigInt::zero;
    let one = BigInt::one;
    match k.rem_euclid(3) {
        0 => WpsCiRecord {
            weights: [
                one(),
                gk.clone(),
                g3.clone(),
                &g1 * (&g1 + &g2),
                &g2 * (&g1 + &g2),
            ],
            equations: [
                // x0 x3 - x1^{2 g2}(x1^{g3} + x2^{gk})
                vec![
                    (1, e(one(), z(), z(), one(), z())),
                    (-1, e(z(), 2 * &g2 + &g3, z(), z(), z())),
                    (-1, e(z(), 2 * &g2, gk.clone(), z(), z())),
                ],
                // x0 x4 - x2^{2 g1}(x1^{g3} + x2^{gk})
                vec![
                    (1, e(one(), z(), z(), z(), one())),
                    (-1, e(z(), g3.clone(), 2 * &g1, z(), z())),
                    (-1, e(z(), z(), 2 * &g1 + &gk, z(), z())),
                ],
            ],
        },
        1 => WpsCiRecord {
            weights: [
                one(),
                gk.clone(),
                g3.clone(),
                &g1 * (2 * &g1 + &g2),
                &g2 * (2 * &g1 + &g2),
            ],
            equations: [
                // x0 x3 - x1^{g2}(x1^{g3} + x2^{gk})^2
                vec![
                    (1, e(one(), z(), z(), one(), z())),
                    (-1, e(z(), &g2 + 2 * &g3, z(), z(), z())),
                    (-2, e(z(), &g2 + &g3, gk.clone(), z(), z())),
                    (-1, e(z(), g2.clone(), 2 * &gk, z(), z())),
                ],
                // x0 x4 - x2^{g1}(x1^{g3} + x2^{gk})
                vec![
                    (1, e(one(), z(), z(), z(), one())),
                    (-1, e(z(), g3.clone(), g1.clone(), z(), z())),
                    (-1, e(z(), z(), &g1 + &gk, z(), z())),
                ],
            ],
        },
        _ => WpsCiRecord {
            weights: [
                one(),
                gk.clone(),
                g3.clone(),
                &g1 * (&g1 + 2 * &g2),
                &g2 * (&g1 + 2 * &g2),
            ],
            equations: [
                // x0 x3 - x1^{g2}(x1^{g3} + x2^{gk})
                vec![
                    (1, e(one(), z(), z(), one(), z())),
                    (-1, e(z(), &g2 + &g3, z(), z(), z())),
                    (-1, e(z(), g2.clone(), gk.clone(), z(), z())),
                ],
                // x0 x4 - x2^{g1}(x1^{g3} + x2^{gk})^2
                vec![
                    (1, e(one(), z(), z(), z(), one())),
                    (-1, e(z(), 2 * &g3, g1.clone(), z(), z())),
                    (-2, e(z(), g3.clone(), &g1 + &gk, z(), z())),
                    (-1, e(z(), z(), &g1 + 2 * &gk, z(), z())),
                ],
            ],
        },
    }
}

/// Per-equation homogeneity report: the weighted degree of every term,
/// whether they agree, and (when both equations are homogeneous) the naive
/// anticanonical degree `d1 d2 (sum w - d1 - d2)^2 / prod w` of the
/// complete intersection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneityReport {
    pub term_degrees: [Vec<BigInt>; 2],
    pub homogeneous: [bool; 2],
    pub degrees: [Option<BigInt>; 2],
    pub naive_anticanonical_square: Option<Rat>,
}

pub fn validate_homogeneity(rec: &WpsCiRecord) -> HomogeneityReport {
    let degree_of = |exps: &[BigInt; 5]| -> BigInt {
        exps.iter()
            .zip(&rec.weights)
            .map(|(e, w)| e * w)
            .sum()
    };
    let mut term_degrees: [Vec<BigInt>; 2] = [Vec::new(), Vec::new()];
    let mut homogeneous = [false, false];
    let mut degrees: [Option<BigInt>; 2] = [None, None];
    for (i, eq) in rec.equations.iter().enumerate() {
        let degs: Vec<BigInt> = eq.iter().map(|(_, e)| degree_of(e)).collect();
        homogeneous[i] = degs.windows(2).all(|w| w[0] == w[1]);
        if homogeneous[i] {
            degrees[i] = degs.first().cloned();
        }
        term_degrees[i] = degs;
    }
    let naive_anticanonical_square = match (&degrees[0], &degrees[1]) {
        (Some(d1), Some(d2)) => {
            let wsum: BigInt = rec.weights.iter().sum();
            let wprod: BigInt = rec.weights.iter().product();
            let amp = &wsum - d1 - d2;
            Some(Rat::new(d1 * d2 * (&amp * &amp), wprod))
        }
        _ => None,
    };
    HomogeneityReport {
        term_degrees,
        homogeneous,
        degrees,
        naive_anticanonical_square,
    }
}
