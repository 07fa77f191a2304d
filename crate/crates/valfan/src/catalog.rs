//! A named catalog of standard cycle configurations across the degree
//! range, used by the examples and as seed stock for randomized tests.

use crate::cycle::CycleConfig;
use crate::lattice::{DivisorClass, SurfaceLattice};

fn bl(n: u8) -> SurfaceLattice {
    SurfaceLattice::blowup_of_plane(n).expect("n <= 8")
}

fn cfg(lat: SurfaceLattice, comps: &[&[i64]]) -> CycleConfig {
    CycleConfig::new(
        lat,
        comps.iter().map(|c| DivisorClass::from_ints(c)).collect(),
        false,
    )
}

/// Every catalog entry validates cleanly; entries marked `-contractible`
/// contain a non-nef component.
pub fn standard_configs() -> Vec<(&'static str, CycleConfig)> {
    vec![
        // Degree 9: the plane.
        ("p2-nodal-cubic", CycleConfig::irreducible(bl(0))),
        ("p2-line-conic", cfg(bl(0), &[&[1], &[2]])),
        ("p2-triangle", cfg(bl(0), &[&[1], &[1], &[1]])),
        // Degree 8, blow-up of the plane at a point.
        ("dp8-nodal", CycleConfig::irreducible(bl(1))),
        ("dp8-line-conic", cfg(bl(1), &[&[1, 0], &[2, -1]])),
        ("dp8-ruling-conic", cfg(bl(1), &[&[1, -1], &[2, 0]])),
        ("dp8-contractible", cfg(bl(1), &[&[3, -2], &[0, 1]])),
        // Degree 8, the quadric.
        ("quadric-nodal", CycleConfig::irreducible(SurfaceLattice::Quadric)),
        ("quadric-diagonal-pair", cfg(SurfaceLattice::Quadric, &[&[1, 1], &[1, 1]])),
        (
            "quadric-rulings",
            cfg(SurfaceLattice::Quadric, &[&[1, 0], &[0, 1], &[1, 0], &[0, 1]]),
        ),
        // Degree 7.
        ("dp7-nodal", CycleConfig::irreducible(bl(2))),
        ("dp7-conic-pair", cfg(bl(2), &[&[1, 0, 0], &[2, -1, -1]])),
        ("dp7-triangle", cfg(bl(2), &[&[1, -1, 0], &[1, 0, -1], &[1, 0, 0]])),
        (
            "dp7-contractible-triangle",
            cfg(bl(2), &[&[0, 1, 0], &[1, -1, 0], &[2, -1, -1]]),
        ),
        // Degree 6.
        ("dp6-nodal", CycleConfig::irreducible(bl(3))),
        (
            "dp6-triangle",
            cfg(bl(3), &[&[1, -1, 0, 0], &[1, 0, -1, 0], &[1, 0, 0, -1]]),
        ),
        (
            "dp6-contractible-square",
            cfg(
                bl(3),
                &[&[0, 0, 0, 1], &[1, 0, -1, -1], &[0, 0, 1, 0], &[2, -1, -1, -1]],
            ),
        ),
        (
            "dp6-hexagon",
            cfg(
                bl(3),
                &[
                    &[0, 1, 0, 0],
                    &[1, -1, -1, 0],
                    &[0, 0, 1, 0],
                    &[1, 0, -1, -1],
                    &[0, 0, 0, 1],
                    &[1, -1, 0, -1],
                ],
            ),
        ),
        // Degree 5.
        ("dp5-nodal", CycleConfig::irreducible(bl(4))),
        (
            "dp5-zero-square-pair",
            cfg(bl(4), &[&[2, 0, -1, -1, -1], &[1, -1, 0, 0, 0]]),
        ),
        // Degree 4.
        ("dp4-nodal", CycleConfig::irreducible(bl(5))),
        (
            "dp4-pair",
            cfg(bl(5), &[&[1, -1, 0, 0, 0, 0], &[2, 0, -1, -1, -1, -1]]),
        ),
    ]
}

/// Looks up a catalog entry by name.
pub fn by_name(name: &str) -> Option<CycleConfig> {
    standard_configs()
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, c)| c)
}
