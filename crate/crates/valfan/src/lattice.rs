//! Picard lattices of del Pezzo surfaces: the intersection form, extremal
//! rays, nefness, anticanonical section counts, exhaustive witness search,
//! and contraction of (-1)-classes.
//!
//! Two presentations are supported: blow-ups of the plane in `n <= 8` points
//! (basis `H, E_1, ..., E_n`, form `diag(1, -1, ..., -1)`) and the quadric
//! (rank 2, hyperbolic form). Contracted models are handled through
//! [`ContractionView`], which keeps every class in ambient coordinates and
//! never leaves exact arithmetic.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::exact::{rint, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("class has {got} coefficients, lattice has rank {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("a plane blow-up supports at most 8 points, got {0}")]
    TooManyPoints(u8),
    #[error("unknown lattice kind `{0}`")]
    UnknownKind(String),
    #[error("class {0} is not a (-1)-class")]
    NotMinusOne(String),
    #[error("class {0} meets a previously contracted class")]
    NotOrthogonal(String),
    #[error("witness search requires integer classes, got {0}")]
    NonIntegerClass(String),
}

/// The Picard lattice of a del Pezzo surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SurfaceLattice {
    /// Blow-up of the plane in `n` general points; degree `9 - n`.
    BlowupOfPlane { n: u8 },
    /// The smooth quadric; rank 2, degree 8.
    Quadric,
}

impl SurfaceLattice {
    pub fn blowup_of_plane(n: u8) -> Result<Self, LatticeError> {
        if n > 8 {
            return Err(LatticeError::TooManyPoints(n));
        }
        Ok(SurfaceLattice::BlowupOfPlane { n })
    }

    pub fn projective_plane() -> Self {
        SurfaceLattice::BlowupOfPlane { n: 0 }
    }

    pub fn rank(&self) -> usize {
        match self {
            SurfaceLattice::BlowupOfPlane { n } => *n as usize + 1,
            SurfaceLattice::Quadric => 2,
        }
    }

    pub fn degree(&self) -> i64 {
        match self {
            SurfaceLattice::BlowupOfPlane { n } => 9 - *n as i64,
            SurfaceLattice::Quadric => 8,
        }
    }

    /// `K = -3H + sum E_i`, or `(-2, -2)` on the quadric.
    pub fn canonical(&self) -> DivisorClass {
        match self {
            SurfaceLattice::BlowupOfPlane { n } => {
                let mut c = vec![-3i64];
                c.extend(std::iter::repeat(1).take(*n as usize));
                DivisorClass::from_ints(&c)
            }
            SurfaceLattice::Quadric => DivisorClass::from_ints(&[-2, -2]),
        }
    }

    pub fn anticanonical(&self) -> DivisorClass {
        self.canonical().neg()
    }

    /// Symmetric bilinear intersection product.
    pub fn intersect(&self, u: &DivisorClass, v: &DivisorClass) -> Result<Rat, LatticeError> {
        self.check_dim(u)?;
        self.check_dim(v)?;
        let uc = &u.coeffs;
        let vc = &v.coeffs;
        Ok(match self {
            SurfaceLattice::BlowupOfPlane { .. } => {
                let mut acc = &uc[0] * &vc[0];
                for i in 1..uc.len() {
                    acc -= &uc[i] * &vc[i];
                }
                acc
            }
            SurfaceLattice::Quadric => &uc[0] * &vc[1] + &uc[1] * &vc[0],
        })
    }

    fn check_dim(&self, v: &DivisorClass) -> Result<(), LatticeError> {
        if v.coeffs.len() != self.rank() {
            return Err(LatticeError::DimensionMismatch {
                expected: self.rank(),
                got: v.coeffs.len(),
            });
        }
        Ok(())
    }

    /// Generators of the cone of curves: `{H}` on the plane, `{E, H-E}` on
    /// the one-point blow-up, the two rulings on the quadric, and the full
    /// list of (-1)-classes for degree <= 7.
    pub fn mori_rays(&self) -> Vec<DivisorClass> {
        match self {
            SurfaceLattice::Quadric => {
                vec![DivisorClass::from_ints(&[1, 0]), DivisorClass::from_ints(&[0, 1])]
            }
            SurfaceLattice::BlowupOfPlane { n: 0 } => vec![DivisorClass::from_ints(&[1])],
            SurfaceLattice::BlowupOfPlane { n: 1 } => vec![
                DivisorClass::from_ints(&[0, 1]),
                DivisorClass::from_ints(&[1, -1]),
            ],
            SurfaceLattice::BlowupOfPlane { n } => minus_one_classes(*n as usize),
        }
    }

    /// `true` iff `v` meets every extremal ray nonnegatively.
    pub fn is_nef(&self, v: &DivisorClass) -> Result<bool, LatticeError> {
        self.check_dim(v)?;
        for ray in self.mori_rays() {
            if self.intersect(v, &ray)?.is_negative() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Kind tag used in config files: `"blowup:n"` or `"quadric"`.
    pub fn kind_string(&self) -> String {
        match self {
            SurfaceLattice::BlowupOfPlane { n } => format!("blowup:{n}"),
            SurfaceLattice::Quadric => "quadric".to_string(),
        }
    }

    pub fn parse_kind(s: &str) -> Result<Self, LatticeError> {
        let t = s.trim();
        if t == "quadric" {
            return Ok(SurfaceLattice::Quadric);
        }
        if let Some(n) = t.strip_prefix("blowup:") {
            let n: u8 = n
                .parse()
                .map_err(|_| LatticeError::UnknownKind(s.to_string()))?;
            return SurfaceLattice::blowup_of_plane(n);
        }
        Err(LatticeError::UnknownKind(s.to_string()))
    }
}

/// Enumerates all classes `e` with `e^2 = -1`, `e.K = -1` on `Bl_n P^2`.
///
/// In coordinates `(a, b_1, ..., b_n)` the conditions read
/// `a^2 - sum b_i^2 = -1` and `3a + sum b_i = 1`; Cauchy-Schwarz bounds
/// `a` by `-1 <= a <= 7`, after which a pruned search over the `b_i` is
/// exhaustive.
fn minus_one_classes(n: usize) -> Vec<DivisorClass> {
    let mut out = Vec::new();
    let mut coords = vec![0i64; n];
    for a in -1..=7i64 {
        let sum = 1 - 3 * a;
        let sq = a * a + 1;
        if sq < 0 {
            continue;
        }
        search_fixed_sums(&mut coords, 0, sum, sq, &mut |b| {
            let mut c = Vec::with_capacity(n + 1);
            c.push(a);
            c.extend_from_slice(b);
            out.push(DivisorClass::from_ints(&c));
        });
    }
    out.sort();
    out
}

/// DFS over integer vectors with prescribed sum and sum of squares.
fn search_fixed_sums(
    coords: &mut Vec<i64>,
    idx: usize,
    sum: i64,
    sq: i64,
    emit: &mut impl FnMut(&[i64]),
) {
    let remaining = (coords.len() - idx) as i64;
    if remaining == 0 {
        if sum == 0 && sq == 0 {
            emit(coords);
        }
        return;
    }
    if sq < 0 || sum * sum > remaining * sq {
        return;
    }
    let max = (0..).find(|v| v * v > sq).unwrap_or(0) - 1;
    for v in -max..=max {
        if v * v > sq {
            continue;
        }
        coords[idx] = v;
        search_fixed_sums(coords, idx + 1, sum - v, sq - v * v, emit);
    }
    coords[idx] = 0;
}

/// `dim H^0(X, -m K_X)` for a del Pezzo surface of degree `d`:
/// `1 + d m (m + 1) / 2`.
pub fn h0_anticanonical(d: u8, m: u32) -> u64 {
    let m = m as u64;
    1 + (d as u64) * m * (m + 1) / 2
}

/// A divisor class: a rational vector in basis order (`H` or the first
/// ruling first).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DivisorClass {
    coeffs: Vec<Rat>,
}

impl DivisorClass {
    pub fn new(coeffs: Vec<Rat>) -> Self {
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self {
            coeffs: coeffs.iter().map(|&c| rint(c)).collect(),
        }
    }

    pub fn zero(rank: usize) -> Self {
        Self {
            coeffs: vec![Rat::zero(); rank],
        }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, r: &Rat) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Integer coefficient vector, when all entries are integers.
    pub fn to_ints(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    fn to_i64s(&self) -> Option<Vec<i64>> {
        self.to_ints()?.iter().map(|b| b.to_i64()).collect()
    }
}

impl std::fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// A surface obtained from an ambient lattice by contracting pairwise
/// orthogonal (-1)-classes. Classes on the contracted model are represented
/// by their total transforms in the ambient lattice, so intersection numbers
/// are plain ambient products of pushforwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionView {
    ambient: SurfaceLattice,
    contracted: Vec<DivisorClass>,
}

impl ContractionView {
    pub fn new(ambient: SurfaceLattice) -> Self {
        Self {
            ambient,
            contracted: Vec::new(),
        }
    }

    pub fn ambient(&self) -> &SurfaceLattice {
        &self.ambient
    }

    pub fn contracted(&self) -> &[DivisorClass] {
        &self.contracted
    }

    pub fn degree(&self) -> i64 {
        self.ambient.degree() + self.contracted.len() as i64
    }

    pub fn rank(&self) -> usize {
        self.ambient.rank() - self.contracted.len()
    }

    /// Records the contraction of `c`, which must be a (-1)-class orthogonal
    /// to everything contracted so far.
    pub fn contract(&self, c: &DivisorClass) -> Result<Self, LatticeError> {
        let sq = self.ambient.intersect(c, c)?;
        let ck = self.ambient.intersect(c, &self.ambient.canonical())?;
        if sq != rint(-1) || ck != rint(-1) {
            return Err(LatticeError::NotMinusOne(c.to_string()));
        }
        for prev in &self.contracted {
            if !self.ambient.intersect(c, prev)?.is_zero() {
                return Err(LatticeError::NotOrthogonal(c.to_string()));
            }
        }
        let mut next = self.clone();
        next.contracted.push(c.clone());
        Ok(next)
    }

    /// `v + sum (v . c_j) c_j`: the ambient representative of the
    /// pushforward, i.e. the orthogonal projection onto the complement of
    /// the contracted classes.
    pub fn pushforward(&self, v: &DivisorClass) -> Result<DivisorClass, LatticeError> {
        let mut out = v.clone();
        for c in &self.contracted {
            let m = self.ambient.intersect(v, c)?;
            out = out.add(&c.scale(&m));
        }
        Ok(out)
    }

    /// Intersection product on the contracted model.
    pub fn intersect(&self, u: &DivisorClass, v: &DivisorClass) -> Result<Rat, LatticeError> {
        let u = self.pushforward(u)?;
        let v = self.pushforward(v)?;
        self.ambient.intersect(&u, &v)
    }

    /// Anticanonical class of the contracted model (ambient coordinates).
    pub fn anticanonical(&self) -> DivisorClass {
        self.pushforward(&self.ambient.anticanonical())
            .expect("anticanonical has ambient rank")
    }

    /// Nefness on the contracted model. For a pushed-forward class this is
    /// equivalent to nonnegativity against the ambient rays.
    pub fn is_nef(&self, v: &DivisorClass) -> Result<bool, LatticeError> {
        self.ambient.is_nef(&self.pushforward(v)?)
    }
}

/// Outcome of a unicuspidal witness search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessSearch {
    /// Lexicographically smallest class satisfying all constraints.
    Found(DivisorClass),
    /// Exhaustive search in range found nothing.
    NotFound,
    /// `pq * deg <= (p+q)^2`: the witness equivalence does not apply.
    NotInRange,
}

/// Default exhaustive-search coefficient bound for weights `(p, q)`.
pub fn default_witness_bound(p: u64, q: u64) -> i64 {
    3 * (p + q) as i64
}

/// Searches for an integral class `L` with `-K . L = p + q` and
/// `L^2 = pq - 1`; when `branches = Some((l, r))` additionally
/// `L . C_l = p`, `L . C_r = q`, and `L . C_j = 0` for the other components.
///
/// The search is exhaustive over ambient integer vectors with coefficients
/// in `[-bound, bound]` (orthogonality to contracted classes is imposed as
/// extra linear constraints) and returns the lexicographically smallest
/// solution. Every returned class is re-verified against all constraints.
pub fn unicuspidal_witness(
    view: &ContractionView,
    components: &[DivisorClass],
    branches: Option<(usize, usize)>,
    p: u64,
    q: u64,
    bound: i64,
) -> Result<WitnessSearch, LatticeError> {
    let d = view.degree();
    let pq = (p as i64) * (q as i64);
    let s = (p + q) as i64;
    if pq * d <= s * s {
        return Ok(WitnessSearch::NotInRange);
    }

    // Linear constraints as integer functionals in ambient coordinates.
    let mut constraints: Vec<(Vec<i64>, i64)> = Vec::new();
    let push_con = |cons: &mut Vec<(Vec<i64>, i64)>,
                    class: &DivisorClass,
                    target: i64|
     -> Result<(), LatticeError> {
        let f = functional(view.ambient(), class)
            .ok_or_else(|| LatticeError::NonIntegerClass(class.to_string()))?;
        cons.push((f, target));
        Ok(())
    };
    for c in view.contracted() {
        push_con(&mut constraints, c, 0)?;
    }
    push_con(&mut constraints, &view.ambient().anticanonical(), s)?;
    if let Some((l, r)) = branches {
        for (j, comp) in components.iter().enumerate() {
            let target = if j == l {
                p as i64
            } else if j == r {
                q as i64
            } else {
                0
            };
            push_con(&mut constraints, comp, target)?;
        }
    }

    let rank = view.ambient().rank();
    let square = pq - 1;
    let found = search_class(rank, &constraints, square, bound, view.ambient());

    if let Some(class) = &found {
        verify_witness(view, components, branches, p, q, class)?;
    }
    Ok(match found {
        Some(c) => WitnessSearch::Found(c),
        None => WitnessSearch::NotFound,
    })
}

/// The linear functional `x -> v . x` in coordinates, as integers.
fn functional(lat: &SurfaceLattice, v: &DivisorClass) -> Option<Vec<i64>> {
    let ints = v.to_i64s()?;
    Some(match lat {
        SurfaceLattice::BlowupOfPlane { .. } => {
            let mut f = ints;
            for c in f.iter_mut().skip(1) {
                *c = -*c;
            }
            f
        }
        SurfaceLattice::Quadric => vec![ints[1], ints[0]],
    })
}

fn self_intersection_i64(lat: &SurfaceLattice, x: &[i64]) -> i64 {
    match lat {
        SurfaceLattice::BlowupOfPlane { .. } => {
            x[0] * x[0] - x[1..].iter().map(|c| c * c).sum::<i64>()
        }
        SurfaceLattice::Quadric => 2 * x[0] * x[1],
    }
}

/// Lexicographic DFS with interval pruning; the final coordinate is solved
/// from a pivot constraint when one uses it.
fn search_class(
    rank: usize,
    constraints: &[(Vec<i64>, i64)],
    square: i64,
    bound: i64,
    lat: &SurfaceLattice,
) -> Option<DivisorClass> {
    let pivot = constraints.iter().position(|(f, _)| f[rank - 1] != 0);
    // Suffix sums of |f_i| for pruning.
    let tails: Vec<Vec<i64>> = constraints
        .iter()
        .map(|(f, _)| {
            let mut t = vec![0i64; rank + 1];
            for i in (0..rank).rev() {
                t[i] = t[i + 1] + f[i].abs();
            }
            t
        })
        .collect();
    let mut x = vec![0i64; rank];
    let mut partial = vec![0i64; constraints.len()];

    fn dfs(
        idx: usize,
        rank: usize,
        x: &mut Vec<i64>,
        partial: &mut Vec<i64>,
        constraints: &[(Vec<i64>, i64)],
        tails: &[Vec<i64>],
        pivot: Option<usize>,
        square: i64,
        bound: i64,
        lat: &SurfaceLattice,
    ) -> bool {
        for (r, (_, target)) in constraints.iter().enumerate() {
            let slack = bound * tails[r][idx];
            if partial[r] - slack > *target || partial[r] + slack < *target {
                return false;
            }
        }
        let solve_here = idx == rank - 1 && pivot.is_some();
        if solve_here {
            let r = pivot.unwrap();
            let (f, target) = &constraints[r];
            let num = target - partial[r];
            if num % f[rank - 1] != 0 {
                return false;
            }
            let v = num / f[rank - 1];
            if v.abs() > bound {
                return false;
            }
            x[rank - 1] = v;
            let ok = constraints
                .iter()
                .enumerate()
                .all(|(s, (g, t))| partial[s] + g[rank - 1] * v == *t)
                && self_intersection_i64(lat, x) == square;
            if ok {
                return true;
            }
            x[rank - 1] = 0;
            return false;
        }
        if idx == rank {
            return constraints
                .iter()
                .enumerate()
                .all(|(r, (_, t))| partial[r] == *t)
                && self_intersection_i64(lat, x) == square;
        }
        for v in -bound..=bound {
            x[idx] = v;
            for (r, (f, _)) in constraints.iter().enumerate() {
                partial[r] += f[idx] * v;
            }
            if dfs(
                idx + 1,
                rank,
                x,
                partial,
                constraints,
                tails,
                pivot,
                square,
                bound,
                lat,
            ) {
                return true;
            }
            for (r, (f, _)) in constraints.iter().enumerate() {
                partial[r] -= f[idx] * v;
            }
        }
        x[idx] = 0;
        false
    }

    if dfs(
        0,
        rank,
        &mut x,
        &mut partial,
        constraints,
        &tails,
        pivot,
        square,
        bound,
        lat,
    ) {
        Some(DivisorClass::from_ints(&x))
    } else {
        None
    }
}

/// Re-verifies every witness constraint in exact rational arithmetic.
fn verify_witness(
    view: &ContractionView,
    components: &[DivisorClass],
    branches: Option<(usize, usize)>,
    p: u64,
    q: u64,
    class: &DivisorClass,
) -> Result<(), LatticeError> {
    let s = rint((p + q) as i64);
    let sq = rint((p * q) as i64 - 1);
    assert_eq!(
        view.intersect(&view.anticanonical(), class)?,
        s,
        "witness degree constraint"
    );
    assert_eq!(view.intersect(class, class)?, sq, "witness square constraint");
    if let Some((l, r)) = branches {
        for (j, comp) in components.iter().enumerate() {
            let expect = if j == l {
                rint(p as i64)
            } else if j == r {
                rint(q as i64)
            } else {
                rint(0)
            };
            assert_eq!(
                view.intersect(comp, class)?,
                expect,
                "witness branch constraint at component {j}"
            );
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn bl(n: u8) -> SurfaceLattice {
        SurfaceLattice::blowup_of_plane(n).unwrap()
    }

    #[test]
    fn intersection_known_values() {
        let p2 = SurfaceLattice::projective_plane();
        let h = DivisorClass::from_ints(&[1]);
        assert_eq!(p2.intersect(&h, &h).unwrap(), rint(1));

        let bl1 = bl(1);
        let e = DivisorClass::from_ints(&[0, 1]);
        assert_eq!(bl1.intersect(&e, &e).unwrap(), rint(-1));
        let u = DivisorClass::from_ints(&[2, -1]);
        let v = DivisorClass::from_ints(&[1, -1]);
        assert_eq!(bl1.intersect(&u, &v).unwrap(), rint(1));

        let q = SurfaceLattice::Quadric;
        let k = q.canonical();
        assert_eq!(q.intersect(&k, &k).unwrap(), rint(8));
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let bl1 = bl(1);
        let h = DivisorClass::from_ints(&[1]);
        assert!(matches!(
            bl1.intersect(&h, &h),
            Err(LatticeError::DimensionMismatch { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn mori_rays_low_rank() {
        let p2 = SurfaceLattice::projective_plane();
        assert_eq!(p2.mori_rays(), vec![DivisorClass::from_ints(&[1])]);
        let bl1 = bl(1);
        let rays = bl1.mori_rays();
        assert!(rays.contains(&DivisorClass::from_ints(&[0, 1])));
        assert!(rays.contains(&DivisorClass::from_ints(&[1, -1])));
        assert_eq!(rays.len(), 2);
    }

    #[test]
    fn mori_rays_deg6() {
        // Six (-1)-classes: E_1, E_2, E_3, H - E_i - E_j.
        let rays = bl(3).mori_rays();
        assert_eq!(rays.len(), 6);
        for e in &[
            DivisorClass::from_ints(&[0, 1, 0, 0]),
            DivisorClass::from_ints(&[0, 0, 1, 0]),
            DivisorClass::from_ints(&[0, 0, 0, 1]),
            DivisorClass::from_ints(&[1, -1, -1, 0]),
            DivisorClass::from_ints(&[1, -1, 0, -1]),
            DivisorClass::from_ints(&[1, 0, -1, -1]),
        ] {
            assert!(rays.contains(e), "missing {e}");
        }
    }

    #[test]
    fn minus_one_class_counts() {
        // Classical counts of (-1)-curves per number of blown-up points.
        for (n, count) in [(2usize, 3usize), (3, 6), (4, 10), (5, 16), (6, 27), (7, 56), (8, 240)] {
            let rays = bl(n as u8).mori_rays();
            assert_eq!(rays.len(), count, "n = {n}");
            let lat = bl(n as u8);
            let k = lat.canonical();
            for e in &rays {
                assert_eq!(lat.intersect(e, e).unwrap(), rint(-1));
                assert_eq!(lat.intersect(e, &k).unwrap(), rint(-1));
            }
        }
    }

    #[test]
    fn mori_rays_closed_under_point_permutation() {
        let lat = bl(4);
        let rays = lat.mori_rays();
        // Swap E_1 and E_2 in every ray; the set is unchanged.
        let swapped: Vec<DivisorClass> = rays
            .iter()
            .map(|r| {
                let mut c = r.coeffs().to_vec();
                c.swap(1, 2);
                DivisorClass::new(c)
            })
            .collect();
        for s in &swapped {
            assert!(rays.contains(s));
        }
    }

    #[test]
    fn nef_known_cases() {
        let bl1 = bl(1);
        let h = DivisorClass::from_ints(&[1, 0]);
        let e = DivisorClass::from_ints(&[0, 1]);
        assert!(bl1.is_nef(&h).unwrap());
        assert!(!bl1.is_nef(&e).unwrap());
        for lat in [bl(0), bl(1), bl(5), bl(8), SurfaceLattice::Quadric] {
            assert!(lat.is_nef(&lat.anticanonical()).unwrap(), "{lat:?}");
        }
    }

    #[test]
    fn h0_values() {
        assert_eq!(h0_anticanonical(9, 1), 10);
        assert_eq!(h0_anticanonical(8, 2), 25);
        for d in 1..=9u8 {
            assert_eq!(h0_anticanonical(d, 0), 1);
            // Discrete derivative of Riemann-Roch.
            for m in 1..=12u32 {
                assert_eq!(
                    h0_anticanonical(d, m) - h0_anticanonical(d, m - 1),
                    (d as u64) * m as u64
                );
            }
        }
    }

    #[test]
    fn contraction_known_values() {
        let view = ContractionView::new(bl(1));
        let e = DivisorClass::from_ints(&[0, 1]);
        let view = view.contract(&e).unwrap();
        assert_eq!(view.degree(), 9);
        let ruling = DivisorClass::from_ints(&[1, -1]);
        assert_eq!(view.pushforward(&ruling).unwrap(), DivisorClass::from_ints(&[1, 0]));
        assert!(view.pushforward(&e).unwrap().is_zero());
        let k = bl(1).canonical();
        assert_eq!(view.pushforward(&k).unwrap(), DivisorClass::from_ints(&[-3, 0]));
        // Contracting a non-(-1)-class is rejected.
        let h = DivisorClass::from_ints(&[1, 0]);
        assert!(ContractionView::new(bl(1)).contract(&h).is_err());
    }

    #[test]
    fn pushforward_preserves_orthogonal_intersections() {
        let lat = bl(3);
        let view = ContractionView::new(lat)
            .contract(&DivisorClass::from_ints(&[0, 1, 0, 0]))
            .unwrap();
        // u, v orthogonal to E_1 keep their product.
        let u = DivisorClass::from_ints(&[2, 0, -1, 0]);
        let v = DivisorClass::from_ints(&[1, 0, 0, -1]);
        let before = lat.intersect(&u, &v).unwrap();
        assert_eq!(view.intersect(&u, &v).unwrap(), before);
    }

    #[test]
    fn witness_search_known_values() {
        let view = ContractionView::new(bl(1));
        // (p, q) = (1, 2): L = H.
        match unicuspidal_witness(&view, &[], None, 1, 2, 10).unwrap() {
            WitnessSearch::Found(c) => assert_eq!(c, DivisorClass::from_ints(&[1, 0])),
            other => panic!("expected H, got {other:?}"),
        }
        // (p, q) = (1, 1): L = H - E.
        match unicuspidal_witness(&view, &[], None, 1, 1, 10).unwrap() {
            WitnessSearch::Found(c) => assert_eq!(c, DivisorClass::from_ints(&[1, -1])),
            other => panic!("expected H - E, got {other:?}"),
        }
        // (p, q) = (2, 3): no class in range.
        assert_eq!(
            unicuspidal_witness(&view, &[], None, 2, 3, 10).unwrap(),
            WitnessSearch::NotFound
        );
        // Side condition: d = 8, (p, q) = (1, 8): 8*8 = 64 <= 81.
        assert_eq!(
            unicuspidal_witness(&view, &[], None, 1, 8, 10).unwrap(),
            WitnessSearch::NotInRange
        );
    }

    #[test]
    fn rational_classes() {
        let lat = bl(1);
        let half = DivisorClass::new(vec![rat(1, 2), rat(-1, 3)]);
        let k = lat.canonical();
        assert_eq!(lat.intersect(&half, &k).unwrap(), rat(-3, 2) + rat(1, 3));
        assert!(half.to_ints().is_none());
    }

    #[test]
    fn kind_strings_round_trip() {
        for lat in [bl(0), bl(3), bl(8), SurfaceLattice::Quadric] {
            assert_eq!(SurfaceLattice::parse_kind(&lat.kind_string()).unwrap(), lat);
        }
        assert!(SurfaceLattice::parse_kind("blowup:9").is_err());
        assert!(SurfaceLattice::parse_kind("cubic").is_err());
    }
}
