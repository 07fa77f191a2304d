//! The decision core: which circle points induce special degenerations,
//! the witness set of a node, and the chamber partition of the special
//! locus.
//!
//! Classification runs two routes. The closed form contracts non-nef
//! components and reads the verdict off the shape of the resulting cycle
//! (irreducible: an exact quadratic interval; two components: everything
//! but at most two vertices; longer cycles: everything). The matrix route
//! asks for a strictly positive divisor supported on the strict transforms,
//! decided by exact linear feasibility. At every rational point the two
//! routes are compared and a disagreement is an error, never a silent
//! answer.

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::blowup::{transform_matrix, BlowupError};
use crate::cycle::{ConfigError, CycleConfig, DualComplexPoint, NodeRef, PointMap};
use crate::exact::{rat, ExactError, ExtPos, QuadVal, Rat};
use crate::feasible::strict_positivity_certificate;
use crate::lattice::{default_witness_bound, DivisorClass, LatticeError, WitnessSearch};

#[derive(Debug, Error)]
pub enum SpecialError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Blowup(#[from] BlowupError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("point {0} does not exist on this configuration")]
    BadPoint(String),
    #[error("witness enumeration requires nef components; contract first")]
    NotNef,
    #[error(
        "internal disagreement at {point}: closed form says {closed}, matrix test says {matrix}"
    )]
    RouteMismatch {
        point: String,
        closed: bool,
        matrix: bool,
    },
    #[error("chamber sample at {0} failed the positivity test")]
    ChamberSample(String),
}

/// Which classification rule produced the verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseTag {
    IrreducibleA,
    TwoCompB,
    CycleC,
    ContractedD,
    VertexRule,
}

impl CaseTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseTag::IrreducibleA => "Irreducible-a",
            CaseTag::TwoCompB => "TwoComp-b",
            CaseTag::CycleC => "Cycle-c",
            CaseTag::ContractedD => "Contracted-d",
            CaseTag::VertexRule => "VertexRule",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub special: bool,
    pub case_tag: CaseTag,
    /// Positive coefficient vector from the matrix route, when the point is
    /// rational and the system is feasible.
    pub certificate: Option<Vec<Rat>>,
}

/// The open interval of edge coordinates that are special for an
/// irreducible nodal cycle of degree `d`; empty when `d <= 4`.
pub fn special_interval(d: i64) -> Option<(QuadVal, QuadVal)> {
    if d < 5 {
        return None;
    }
    let half = rat(d - 2, 2);
    let disc = (d * d - 4 * d) as u64;
    let lo = QuadVal::new(half.clone(), rat(-1, 2), disc);
    let hi = QuadVal::new(half, rat(1, 2), disc);
    Some((lo, hi))
}

/// The special locus inside the dual-complex circle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Region {
    Empty,
    FullCircle,
    /// Open arc from `lo` to `hi` in the circle orientation. Equal
    /// endpoints mean the complement of that single point.
    OpenArc {
        lo: DualComplexPoint,
        hi: DualComplexPoint,
    },
}

/// Classifies a circle point: contract non-nef components, transport the
/// point, and apply the closed-form rule; at rational points the matrix
/// route is run as a cross-check and supplies the certificate.
pub fn classify(config: &CycleConfig, pt: &DualComplexPoint) -> Result<Verdict, SpecialError> {
    config.ensure_valid()?;
    check_point(config, pt)?;
    let (nef, map) = config.contract_non_nef()?;
    let moved = map.apply(pt);
    let (special, base_tag) = classify_nef(&nef, &moved)?;
    let case_tag = if map.is_identity() { base_tag } else { CaseTag::ContractedD };

    let mut certificate = None;
    if let Some(matrix_verdict) = classify_by_matrix(config, pt)? {
        if matrix_verdict.special != special {
            return Err(SpecialError::RouteMismatch {
                point: pt.to_string(),
                closed: special,
                matrix: matrix_verdict.special,
            });
        }
        certificate = matrix_verdict.certificate;
    }
    Ok(Verdict { special, case_tag, certificate })
}

fn check_point(config: &CycleConfig, pt: &DualComplexPoint) -> Result<(), SpecialError> {
    let ok = match pt {
        DualComplexPoint::Vertex(i) => *i < config.component_count(),
        DualComplexPoint::Edge { node, t } => *node < config.node_count() && t.is_positive(),
    };
    if ok {
        Ok(())
    } else {
        Err(SpecialError::BadPoint(pt.to_string()))
    }
}

/// Closed-form verdict on a configuration whose components are all nef.
fn classify_nef(
    nef: &CycleConfig,
    pt: &DualComplexPoint,
) -> Result<(bool, CaseTag), SpecialError> {
    let d = nef.degree();
    let k = nef.component_count();
    Ok(match pt {
        DualComplexPoint::Vertex(i) => {
            let special = match k {
                1 => false,
                2 => {
                    let other = 1 - i;
                    d >= 5 && nef.component_square(other)?.is_positive()
                }
                _ => true,
            };
            (special, CaseTag::VertexRule)
        }
        DualComplexPoint::Edge { t, .. } => match k {
            1 => {
                let special = match special_interval(d) {
                    None => false,
                    Some((lo, hi)) => {
                        t.cmp_exact(&lo)? == std::cmp::Ordering::Greater
                            && t.cmp_exact(&hi)? == std::cmp::Ordering::Less
                    }
                };
                (special, CaseTag::IrreducibleA)
            }
            2 => (d >= 5, CaseTag::TwoCompB),
            _ => (true, CaseTag::CycleC),
        },
    })
}

/// Matrix-route verdict at a rational point, directly on `config` (nef or
/// not): strict positivity of some combination of strict transforms.
/// Returns `None` at irrational edge points, where only the closed form
/// applies.
pub fn classify_by_matrix(
    config: &CycleConfig,
    pt: &DualComplexPoint,
) -> Result<Option<Verdict>, SpecialError> {
    config.ensure_valid()?;
    check_point(config, pt)?;
    let matrix = match pt {
        DualComplexPoint::Vertex(i) => {
            let node = config.node(if config.component_count() == 1 { 0 } else { *i });
            transform_matrix(config, &node, &ExtPos::Zero)?
        }
        DualComplexPoint::Edge { node, t } => {
            if !t.is_rational() {
                return Ok(None);
            }
            transform_matrix(config, &config.node(*node), &ExtPos::Finite(t.clone()))?
        }
    };
    let rational = matrix
        .to_rational()
        .expect("rational point gives a rational matrix");
    let cert = strict_positivity_certificate(&rational);
    Ok(Some(Verdict {
        special: cert.is_some(),
        case_tag: CaseTag::VertexRule,
        certificate: cert,
    }))
}

/// The special locus, reported on the original circle.
pub fn region(config: &CycleConfig) -> Result<Region, SpecialError> {
    config.ensure_valid()?;
    let (nef, map) = config.contract_non_nef()?;
    Ok(pull_back_region(&region_nef(&nef)?, &map))
}

fn region_nef(nef: &CycleConfig) -> Result<Region, SpecialError> {
    let d = nef.degree();
    let k = nef.component_count();
    Ok(match k {
        1 => match special_interval(d) {
            None => Region::Empty,
            Some((lo, hi)) => Region::OpenArc {
                lo: DualComplexPoint::Edge { node: 0, t: lo },
                hi: DualComplexPoint::Edge { node: 0, t: hi },
            },
        },
        2 => {
            if d < 5 {
                Region::Empty
            } else {
                let zero_at = (0..2)
                    .map(|i| nef.component_square(i))
                    .collect::<Result<Vec<_>, _>>()?
                    .iter()
                    .position(|s| s.is_zero());
                match zero_at {
                    // ord of the other component is excluded.
                    Some(i) => {
                        let v = DualComplexPoint::Vertex(1 - i);
                        Region::OpenArc { lo: v.clone(), hi: v }
                    }
                    None => Region::FullCircle,
                }
            }
        }
        _ => Region::FullCircle,
    })
}

fn pull_back_region(region: &Region, map: &PointMap) -> Region {
    match region {
        Region::Empty => Region::Empty,
        Region::FullCircle => Region::FullCircle,
        Region::OpenArc { lo, hi } => Region::OpenArc {
            lo: map.invert(lo),
            hi: map.invert(hi),
        },
    }
}

/// One enumerated witness: weights, the lattice class, and the defect
/// `m = d p q - (p + q)^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessEntry {
    pub p: u64,
    pub q: u64,
    pub class: DivisorClass,
    pub m: i64,
}

impl WitnessEntry {
    /// Edge coordinate `t = q/p` of this witness.
    pub fn t(&self) -> Rat {
        rat(self.q as i64, self.p as i64)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessSet {
    pub node: NodeRef,
    pub entries: Vec<WitnessEntry>,
    pub height_bound: u64,
}

/// Enumerates every coprime `(p, q)` with `max(p, q) <= height_bound` that
/// satisfies the case-appropriate numerical constraints, carries a lattice
/// witness, and sits at a special edge point. Requires nef components.
pub fn witness_set(
    config: &CycleConfig,
    node_index: usize,
    height_bound: u64,
) -> Result<WitnessSet, SpecialError> {
    config.ensure_valid()?;
    if !config.all_components_nef()? {
        return Err(SpecialError::NotNef);
    }
    let node = config.node(node_index);
    let d = config.degree();
    let k = config.component_count();

    let candidates: Vec<(u64, u64)> = if d < 5 || k >= 3 {
        Vec::new()
    } else if k == 1 {
        irreducible_candidates(d, height_bound)
    } else {
        two_component_candidates(config, &node, height_bound)?
    };

    let mut entries: Vec<WitnessEntry> = candidates
        .into_par_iter()
        .filter_map(|(p, q)| {
            let search = config
                .witness(&node, p, q, default_witness_bound(p, q))
                .expect("integral nef components");
            match search {
                WitnessSearch::Found(class) => {
                    let m = d * (p as i64) * (q as i64) - ((p + q) as i64).pow(2);
                    Some(WitnessEntry { p, q, class, m })
                }
                _ => None,
            }
        })
        .collect();
    entries.sort_by(|a, b| (a.q as u128 * b.p as u128).cmp(&(b.q as u128 * a.p as u128)));

    // Every edge point carrying an entry must itself be special; decided
    // by the full classification, whose matrix route runs at these
    // rational points rather than being assumed from witness existence.
    for e in &entries {
        let pt = DualComplexPoint::edge_from_rat(node.index, e.t())?;
        let verdict = classify(config, &pt)?;
        assert!(verdict.special, "witness at a non-special point {pt}");
    }
    Ok(WitnessSet { node, entries, height_bound })
}

/// `k = 1`: coprime solutions of `(p+q)^2 = d p q - m` for `1 <= m <= d`,
/// solved exactly for `q` at each `p`; such points lie in the special
/// interval automatically.
fn irreducible_candidates(d: i64, height_bound: u64) -> Vec<(u64, u64)> {
    let mut out: Vec<(u64, u64)> = (1..=height_bound)
        .into_par_iter()
        .flat_map_iter(|p| {
            let mut local = Vec::new();
            for m in 1..=d {
                // q^2 - (d-2) p q + p^2 + m = 0.
                let b = (d - 2) as i128 * p as i128;
                let disc = b * b - 4 * (p as i128 * p as i128 + m as i128);
                if disc < 0 {
                    continue;
                }
                let r = isqrt_i128(disc);
                if r * r != disc {
                    continue;
                }
                for q2 in [b - r, b + r] {
                    if q2 <= 0 || q2 % 2 != 0 {
                        continue;
                    }
                    let q = (q2 / 2) as u64;
                    if q >= 1 && q <= height_bound && gcd(p, q) == 1 {
                        local.push((p, q));
                    }
                }
            }
            local.into_iter()
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

/// `k = 2`: the Hodge-index constraints cut the candidates down to a strip.
/// With both squares positive only `(1,1)`, `(1,2)`, `(2,1)` survive; with
/// the left square zero the left weight is at most 2 (and symmetrically).
fn two_component_candidates(
    config: &CycleConfig,
    node: &NodeRef,
    height_bound: u64,
) -> Result<Vec<(u64, u64)>, SpecialError> {
    let sl = config.component_square(node.left)?;
    let sr = config.component_square(node.right)?;
    let mut out = Vec::new();
    if sl.is_zero() && sr.is_zero() {
        return Ok(out);
    }
    if sl.is_positive() && sr.is_positive() {
        for (p, q) in [(1, 1), (1, 2), (2, 1)] {
            if p <= height_bound && q <= height_bound {
                out.push((p, q));
            }
        }
    } else if sl.is_zero() {
        for p in 1..=2u64.min(height_bound) {
            for q in 1..=height_bound {
                if gcd(p, q) == 1 {
                    out.push((p, q));
                }
            }
        }
    } else {
        for q in 1..=2u64.min(height_bound) {
            for p in 1..=height_bound {
                if gcd(p, q) == 1 {
                    out.push((p, q));
                }
            }
        }
    }
    Ok(out)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn isqrt_i128(n: i128) -> i128 {
    if n < 0 {
        return -1;
    }
    let mut x = (n as f64).sqrt() as i128;
    while x > 0 && x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

/// What sits at a chamber boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundaryKind {
    /// A component vertex; no witness is asserted for these.
    Vertex,
    Witness(WitnessEntry),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Boundary {
    /// Position on the original circle.
    pub point: DualComplexPoint,
    pub kind: BoundaryKind,
}

/// An open arc between consecutive boundaries, with the interior sample
/// point that was verified special.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chamber {
    pub start: DualComplexPoint,
    pub end: DualComplexPoint,
    pub sample: DualComplexPoint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    pub region: Region,
    pub boundaries: Vec<Boundary>,
    pub chambers: Vec<Chamber>,
    pub height_bound: u64,
    /// Set when the region is a proper arc: the witness enumeration is a
    /// truncation and boundaries may accumulate at the two region ends.
    pub truncated_ends: (bool, bool),
}

/// A boundary or chamber endpoint on the nef model: a point of one edge,
/// with `t` in the extended axis.
#[derive(Debug, Clone)]
struct EdgePos {
    node: usize,
    t: ExtPos,
}

/// Computes the chamber decomposition of the special locus, truncated at
/// `height_bound`, and verifies each chamber at an interior rational point.
/// All reported points live on the original circle.
pub fn partition(config: &CycleConfig, height_bound: u64) -> Result<Partition, SpecialError> {
    config.ensure_valid()?;
    let (nef, map) = config.contract_non_nef()?;
    let region_local = region_nef(&nef)?;
    let region_global = pull_back_region(&region_local, &map);
    let k = nef.component_count();

    // Witness sets per node of the nef model.
    let mut witness_sets = Vec::new();
    for i in 0..nef.node_count() {
        witness_sets.push(witness_set(&nef, i, height_bound)?);
    }

    // Boundary walk in circle order, as (position, kind) on the nef model.
    let mut bounds: Vec<(EdgePos, BoundaryKind)> = Vec::new();
    let mut arc: Option<(EdgePos, EdgePos)> = None;
    let mut truncated = (false, false);
    match &region_local {
        Region::Empty => {
            return Ok(Partition {
                region: region_global,
                boundaries: Vec::new(),
                chambers: Vec::new(),
                height_bound,
                truncated_ends: (false, false),
            });
        }
        Region::OpenArc { lo, hi } if k == 1 => {
            let (DualComplexPoint::Edge { t: lo_t, .. }, DualComplexPoint::Edge { t: hi_t, .. }) =
                (lo, hi)
            else {
                unreachable!("irreducible region endpoints are edge points")
            };
            arc = Some((
                EdgePos { node: 0, t: ExtPos::Finite(lo_t.clone()) },
                EdgePos { node: 0, t: ExtPos::Finite(hi_t.clone()) },
            ));
            truncated = (true, true);
            for e in &witness_sets[0].entries {
                bounds.push((
                    EdgePos {
                        node: 0,
                        t: ExtPos::from_rat(e.t())?,
                    },
                    BoundaryKind::Witness(e.clone()),
                ));
            }
        }
        Region::OpenArc { lo, .. } => {
            // k = 2 with one square zero: the excluded vertex is both ends.
            let DualComplexPoint::Vertex(excl) = lo else {
                unreachable!("two-component region endpoints are vertices")
            };
            let excl = *excl;
            // Witness weights obey q < p (d - 2) with the small weight at
            // most 2, so the enumeration is complete once the height
            // reaches 2(d - 2).
            let complete = height_bound >= 2 * (nef.degree() - 2) as u64;
            truncated = (!complete, !complete);
            // Arc from the excluded vertex around the circle: edge with
            // left = excl, the other vertex, edge with right = excl.
            let first_edge = excl;
            let second_edge = 1 - excl;
            arc = Some((
                EdgePos { node: first_edge, t: ExtPos::Zero },
                EdgePos { node: second_edge, t: ExtPos::Infinity },
            ));
            for e in &witness_sets[first_edge].entries {
                bounds.push((
                    EdgePos { node: first_edge, t: ExtPos::from_rat(e.t())? },
                    BoundaryKind::Witness(e.clone()),
                ));
            }
            bounds.push((
                EdgePos { node: second_edge, t: ExtPos::Zero },
                BoundaryKind::Vertex,
            ));
            for e in &witness_sets[second_edge].entries {
                bounds.push((
                    EdgePos { node: second_edge, t: ExtPos::from_rat(e.t())? },
                    BoundaryKind::Witness(e.clone()),
                ));
            }
        }
        Region::FullCircle => {
            for (vertex, node) in nef.circle_atlas() {
                let _ = vertex;
                bounds.push((
                    EdgePos { node: node.index, t: ExtPos::Zero },
                    BoundaryKind::Vertex,
                ));
                for e in &witness_sets[node.index].entries {
                    bounds.push((
                        EdgePos { node: node.index, t: ExtPos::from_rat(e.t())? },
                        BoundaryKind::Witness(e.clone()),
                    ));
                }
            }
        }
    }

    // Chambers between consecutive boundaries (cyclically for the full
    // circle, with the region endpoints as outer ends otherwise).
    let mut chamber_spans: Vec<(EdgePos, EdgePos)> = Vec::new();
    match (&arc, bounds.is_empty()) {
        (Some((lo, hi)), true) => chamber_spans.push((lo.clone(), hi.clone())),
        (Some((lo, hi)), false) => {
            chamber_spans.push((lo.clone(), bounds[0].0.clone()));
            for w in bounds.windows(2) {
                chamber_spans.push((w[0].0.clone(), w[1].0.clone()));
            }
            chamber_spans.push((bounds.last().unwrap().0.clone(), hi.clone()));
        }
        (None, false) => {
            for i in 0..bounds.len() {
                let next = (i + 1) % bounds.len();
                chamber_spans.push((bounds[i].0.clone(), bounds[next].0.clone()));
            }
        }
        (None, true) => unreachable!("a full circle has at least one vertex boundary"),
    }

    // Verify each chamber at an interior rational point on the nef model.
    let mut chambers = Vec::new();
    for (start, end) in chamber_spans {
        let sample = chamber_sample(&nef, &start, &end)?;
        let start_pt = edge_pos_point(&nef, &start);
        let end_pt = edge_pos_point(&nef, &end);
        chambers.push(Chamber {
            start: map.invert(&start_pt),
            end: map.invert(&end_pt),
            sample: map.invert(&sample),
        });
    }

    let boundaries = bounds
        .into_iter()
        .map(|(pos, kind)| Boundary {
            point: map.invert(&edge_pos_point(&nef, &pos)),
            kind,
        })
        .collect();

    Ok(Partition {
        region: region_global,
        boundaries,
        chambers,
        height_bound,
        truncated_ends: truncated,
    })
}

fn edge_pos_point(config: &CycleConfig, pos: &EdgePos) -> DualComplexPoint {
    DualComplexPoint::at_weight(&config.node(pos.node), &pos.t)
}

/// Picks the simplest rational interior point of a chamber and checks the
/// positivity test there. Chamber spans that cross a vertex of the full
/// circle walk sit at the start of an edge: the span `(vertex, x)` lives on
/// the edge as `(0, x)`.
fn chamber_sample(
    nef: &CycleConfig,
    start: &EdgePos,
    end: &EdgePos,
) -> Result<DualComplexPoint, SpecialError> {
    // Identify the edge the open span lies on, and its (lo, hi) in t.
    let (node, lo, hi) = if start.node == end.node {
        match start.t.cmp_exact(&end.t) {
            Ok(std::cmp::Ordering::Less) => (start.node, start.t.clone(), end.t.clone()),
            _ => (start.node, start.t.clone(), ExtPos::Infinity),
        }
    } else {
        // Wrapping span: interior of the start edge past the last boundary.
        (start.node, start.t.clone(), ExtPos::Infinity)
    };
    let t = simplest_rational_between(&lo, &hi)?;
    let node_ref = nef.node(node);
    let matrix = transform_matrix(nef, &node_ref, &ExtPos::from_rat(t.clone())?)?;
    let rational = matrix.to_rational().expect("rational sample");
    if strict_positivity_certificate(&rational).is_none() {
        return Err(SpecialError::ChamberSample(format!(
            "edge {node}, t = {t}"
        )));
    }
    Ok(DualComplexPoint::Edge {
        node,
        t: QuadVal::from_rat(t),
    })
}

/// The rational number with the smallest Stern-Brocot depth inside the open
/// interval `(lo, hi)`; endpoint comparisons are exact, so quadratic
/// irrational endpoints are fine.
pub fn simplest_rational_between(lo: &ExtPos, hi: &ExtPos) -> Result<Rat, ExactError> {
    debug_assert!(matches!(
        lo.cmp_exact(hi),
        Ok(std::cmp::Ordering::Less) | Err(_)
    ) || matches!(hi, ExtPos::Infinity));
    // Walk the Stern-Brocot tree with exponential jumps.
    let to_rat = |n: u128, d: u128| {
        Rat::new(num_bigint::BigInt::from(n), num_bigint::BigInt::from(d))
    };
    let mut a = (0u128, 1u128); // left fence a.0/a.1
    let mut b = (1u128, 0u128); // right fence
    loop {
        let med = (a.0 + b.0, a.1 + b.1);
        let med_rat = to_rat(med.0, med.1);
        let med_pos = ExtPos::from_rat(med_rat.clone())?;
        let le_lo = matches!(
            med_pos.cmp_exact(lo)?,
            std::cmp::Ordering::Less | std::cmp::Ordering::Equal
        );
        if le_lo {
            // Jump right: largest j with (a + j b) still <= lo.
            let j = largest_step(|j| {
                match ExtPos::from_rat(to_rat(a.0 + j * b.0, a.1 + j * b.1)) {
                    Ok(c) => matches!(
                        c.cmp_exact(lo),
                        Ok(std::cmp::Ordering::Less) | Ok(std::cmp::Ordering::Equal)
                    ),
                    Err(_) => false,
                }
            });
            a = (a.0 + j * b.0, a.1 + j * b.1);
            continue;
        }
        let ge_hi = matches!(
            med_pos.cmp_exact(hi)?,
            std::cmp::Ordering::Greater | std::cmp::Ordering::Equal
        );
        if ge_hi {
            let j = largest_step(|j| {
                match ExtPos::from_rat(to_rat(b.0 + j * a.0, b.1 + j * a.1)) {
                    Ok(c) => matches!(
                        c.cmp_exact(hi),
                        Ok(std::cmp::Ordering::Greater) | Ok(std::cmp::Ordering::Equal)
                    ),
                    Err(_) => false,
                }
            });
            b = (b.0 + j * a.0, b.1 + j * a.1);
            continue;
        }
        return Ok(med_rat);
    }
}

/// Largest `j >= 1` with `pred(j)` true, assuming `pred(1)` holds and the
/// predicate is monotone (true then false).
fn largest_step(pred: impl Fn(u128) -> bool) -> u128 {
    debug_assert!(pred(1));
    let mut hi = 2u128;
    while pred(hi) {
        hi *= 2;
    }
    let mut lo = hi / 2;
    while lo + 1 < hi {
        let mid = lo + (hi - lo) / 2;
        if pred(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}
