//! Property tests for the exact-arithmetic substrate and the intersection
//! form: total order laws, agreement with plain rational comparison, a
//! 200-bit interval-arithmetic referee, and bilinearity.

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};

use valfan::exact::{rat, ExtPos, QuadVal, Rat};
use valfan::lattice::{DivisorClass, SurfaceLattice};

fn rat_strategy() -> impl Strategy<Value = Rat> {
    (-1000i64..1000, 1i64..1000).prop_map(|(n, d)| rat(n, d))
}

fn radicand() -> impl Strategy<Value = u64> {
    prop_oneof![Just(2u64), Just(3), Just(5), Just(7), Just(10), Just(13)]
}

fn quad(d: u64) -> impl Strategy<Value = QuadVal> {
    (rat_strategy(), rat_strategy()).prop_map(move |(a, b)| QuadVal::new(a, b, d))
}

proptest! {
    #[test]
    fn total_order_laws(d in radicand(), xs in (0..3usize), a in rat_strategy(), b in rat_strategy(),
                        c in rat_strategy(), e in rat_strategy(), f in rat_strategy(), g in rat_strategy()) {
        let _ = xs;
        let x = QuadVal::new(a, b, d);
        let y = QuadVal::new(c, e, d);
        let z = QuadVal::new(f, g, d);
        // Antisymmetry.
        prop_assert_eq!(x.cmp_exact(&y).unwrap(), y.cmp_exact(&x).unwrap().reverse());
        // Reflexivity.
        prop_assert_eq!(x.cmp_exact(&x).unwrap(), std::cmp::Ordering::Equal);
        // Transitivity on the ordered triple.
        let mut v = vec![x, y, z];
        v.sort_by(|p, q| p.cmp_exact(q).unwrap());
        prop_assert!(v[0].cmp_exact(&v[2]).unwrap() != std::cmp::Ordering::Greater);
    }

    #[test]
    fn rational_embedding_agrees(a in rat_strategy(), b in rat_strategy()) {
        let x = QuadVal::from_rat(a.clone());
        let y = QuadVal::from_rat(b.clone());
        prop_assert_eq!(x.cmp_exact(&y).unwrap(), a.cmp(&b));
    }

    #[test]
    fn display_parse_round_trip(d in radicand(), a in rat_strategy(), b in rat_strategy()) {
        let x = QuadVal::new(a, b, d);
        let back: QuadVal = x.to_string().parse().unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn field_inverse(d in radicand(), a in rat_strategy(), b in rat_strategy()) {
        let x = QuadVal::new(a, b, d);
        prop_assume!(!x.is_zero());
        let prod = x.try_mul(&x.recip().unwrap()).unwrap();
        prop_assert_eq!(prod, QuadVal::from_int(1));
    }

    #[test]
    fn intersection_symmetric_bilinear(
        which in 0..3usize,
        u in proptest::collection::vec(-9i64..9, 4),
        v in proptest::collection::vec(-9i64..9, 4),
        w in proptest::collection::vec(-9i64..9, 4),
        a in -5i64..5, b in -5i64..5,
    ) {
        let lat = match which {
            0 => SurfaceLattice::blowup_of_plane(3).unwrap(),
            1 => SurfaceLattice::Quadric,
            _ => SurfaceLattice::blowup_of_plane(3).unwrap(),
        };
        let r = lat.rank();
        let u = DivisorClass::from_ints(&u[..r]);
        let v = DivisorClass::from_ints(&v[..r]);
        let w = DivisorClass::from_ints(&w[..r]);
        prop_assert_eq!(lat.intersect(&u, &v).unwrap(), lat.intersect(&v, &u).unwrap());
        let lin = u.scale(&rat(a, 1)).add(&w.scale(&rat(b, 1)));
        let lhs = lat.intersect(&lin, &v).unwrap();
        let rhs = lat.intersect(&u, &v).unwrap() * rat(a, 1)
            + lat.intersect(&w, &v).unwrap() * rat(b, 1);
        prop_assert_eq!(lhs, rhs);
    }
}

/// Rational interval bounds on `a + b sqrt(d)` with the root taken to 200
/// fractional bits.
fn bounds_200(q: &QuadVal) -> (Rat, Rat) {
    let scale: BigInt = BigInt::one() << 200u32;
    let root_floor = (BigInt::from(q.radicand()) * &scale * &scale).sqrt();
    let lo_root = Rat::new(root_floor.clone(), scale.clone());
    let hi_root = Rat::new(root_floor + 1, scale);
    let b = q.radical_coeff();
    let (t_lo, t_hi) = if b.is_negative() {
        (b * &hi_root, b * &lo_root)
    } else {
        (b * &lo_root, b * &hi_root)
    };
    (q.rational_part() + t_lo, q.rational_part() + t_hi)
}

/// quad_cmp agrees with 200-bit interval arithmetic on ten thousand random
/// pairs.
#[test]
fn cmp_matches_interval_arithmetic() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x51ab);
    let ds = [2u64, 3, 5, 7, 10, 13, 17, 29];
    for _ in 0..10_000 {
        let d = ds[rng.gen_range(0..ds.len())];
        let mk = |rng: &mut rand_chacha::ChaCha8Rng| {
            QuadVal::new(
                rat(rng.gen_range(-10_000..10_000), rng.gen_range(1..10_000)),
                rat(rng.gen_range(-10_000..10_000), rng.gen_range(1..10_000)),
                d,
            )
        };
        let x = mk(&mut rng);
        let y = mk(&mut rng);
        let got = x.cmp_exact(&y).unwrap();
        let (xl, xh) = bounds_200(&x);
        let (yl, yh) = bounds_200(&y);
        if xh < yl {
            assert_eq!(got, std::cmp::Ordering::Less);
        } else if xl > yh {
            assert_eq!(got, std::cmp::Ordering::Greater);
        } else {
            // Overlapping 200-bit windows with these coefficient sizes can
            // only mean genuine equality.
            assert_eq!(got, std::cmp::Ordering::Equal);
            assert_eq!(x, y);
        }
    }
}

#[test]
fn extpos_order_and_recip() {
    let zero = ExtPos::Zero;
    let one = ExtPos::one();
    let inf = ExtPos::Infinity;
    assert!(zero.cmp_exact(&one).unwrap().is_lt());
    assert!(one.cmp_exact(&inf).unwrap().is_lt());
    assert_eq!(one.recip(), one);
    let t: ExtPos = "3 - 2*sqrt(2)".parse().unwrap();
    let r = t.recip();
    // (3 - 2 sqrt(2))^{-1} = 3 + 2 sqrt(2).
    assert_eq!(r, "3 + 2*sqrt(2)".parse().unwrap());
}
