//! Named, exact reconstructions of the reference models: tori, Klein
//! bottles, projective planes, Moebius strips, portal worlds, the pentagon
//! model, Lie spheres and the zoned curvature surface. The regression and
//! acceptance suites run against these fixtures.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::script::{Script, ScriptBuilder};

/// A value the catalog promises, together with a short note on where the
/// reference number comes from.
#[derive(Debug, Clone)]
pub struct Cited<T> {
    pub value: T,
    pub source: &'static str,
}

fn cited<T>(value: T, source: &'static str) -> Option<Cited<T>> {
    Some(Cited { value, source })
}

/// Known results for an entry; each carries its citation note. A chain in
/// `monogenic_basis` is a list of `(dim, name, coeff)` terms.
#[derive(Debug, Clone, Default)]
pub struct Expected {
    pub sound: Option<Cited<i64>>,
    pub dirac_eigenvalues: Option<Cited<Vec<(f64, usize)>>>,
    pub tight: Option<Cited<bool>>,
    pub unitary: Option<Cited<bool>>,
    pub orientable: Option<Cited<bool>>,
    pub monogenic_basis: Option<Cited<Vec<Vec<(i32, &'static str, i64)>>>>,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub script: Script,
    pub provenance: &'static str,
    pub expected: Expected,
    /// Readings chosen where the source tables disagree with themselves;
    /// the complex axioms are the arbiter.
    pub notes: &'static str,
}

const IDS: &[&str] = &[
    "torus",
    "torus-surface",
    "klein",
    "klein-extended",
    "klein-extended-3cell",
    "projective-plane",
    "projective-plane-extended",
    "projective-plane-extended-3cell",
    "moebius",
    "moebius-rectangle",
    "projective-from-moebius",
    "two-moebius",
    "klein-glued",
    "klein-refined",
    "portal-world",
    "portal-world-portal",
    "pentagon-rp2",
    "lie-sphere",
    "lie-sphere-tight",
    "curvature-surface",
    "disc",
];

pub fn list() -> Vec<&'static str> {
    IDS.to_vec()
}

pub fn get(id: &str) -> Result<CatalogEntry> {
    catalog()
        .get(id)
        .cloned()
        .ok_or_else(|| Error::UnknownId(id.to_string()))
}

fn catalog() -> &'static BTreeMap<&'static str, CatalogEntry> {
    static CACHE: OnceLock<BTreeMap<&'static str, CatalogEntry>> = OnceLock::new();
    CACHE.get_or_init(|| {
        let entries = vec![
            torus(),
            torus_surface(),
            klein(),
            klein_extended(),
            klein_extended_3cell(),
            projective_plane(),
            projective_plane_extended(),
            projective_plane_extended_3cell(),
            moebius(),
            moebius_rectangle(),
            projective_from_moebius(),
            two_moebius(),
            klein_glued(),
            klein_refined(),
            portal_world(),
            portal_world_portal(),
            pentagon_rp2(),
            lie_sphere(),
            lie_sphere_tight(),
            curvature_surface(),
            disc(),
        ];
        entries.into_iter().map(|e| (e.id, e)).collect()
    })
}

const SQRT2: f64 = std::f64::consts::SQRT_2;

fn torus_script() -> Script {
    let mut b = ScriptBuilder::new("torus");
    b.points(["p0", "p1", "p2", "p3"]);
    b.cell(1, "l1", [(1, "p1"), (-1, "p0")]);
    b.cell(1, "l2", [(1, "p0"), (-1, "p1")]);
    b.cell(1, "l3", [(1, "p2"), (-1, "p0")]);
    b.cell(1, "l4", [(1, "p0"), (-1, "p2")]);
    b.cell(1, "l5", [(1, "p3"), (-1, "p2")]);
    b.cell(1, "l6", [(1, "p2"), (-1, "p3")]);
    b.cell(1, "l7", [(1, "p3"), (-1, "p1")]);
    b.cell(1, "l8", [(1, "p1"), (-1, "p3")]);
    b.cell(2, "v1", [(1, "l5"), (1, "l8"), (-1, "l1"), (-1, "l4")]);
    b.cell(2, "v2", [(1, "l6"), (1, "l4"), (-1, "l2"), (-1, "l8")]);
    b.cell(2, "v3", [(1, "l1"), (1, "l7"), (-1, "l5"), (-1, "l3")]);
    b.cell(2, "v4", [(1, "l2"), (1, "l3"), (-1, "l6"), (-1, "l7")]);
    b.cell(3, "C", [(1, "v1"), (1, "v2"), (1, "v3"), (1, "v4")]);
    b.build()
}

fn torus() -> CatalogEntry {
    CatalogEntry {
        id: "torus",
        script: torus_script(),
        provenance: "square 2-torus on four points with a single volume cell",
        expected: Expected {
            sound: cited(80, "Dirac spectrum of the square torus"),
            dirac_eigenvalues: cited(
                vec![
                    (-2.0 * SQRT2, 2),
                    (-2.0, 6),
                    (0.0, 2),
                    (2.0, 6),
                    (2.0 * SQRT2, 2),
                ],
                "Dirac spectrum of the square torus",
            ),
            tight: cited(true, "the torus table is tight and unitary"),
            unitary: cited(true, "the torus table is tight and unitary"),
            orientable: None,
            monogenic_basis: cited(
                vec![
                    vec![(1, "l1", 1), (1, "l2", 1), (1, "l5", 1), (1, "l6", 1)],
                    vec![(1, "l3", 1), (1, "l4", 1), (1, "l7", 1), (1, "l8", 1)],
                ],
                "harmonic line cycles of the square torus",
            ),
        },
        notes: "",
    }
}

fn torus_surface() -> CatalogEntry {
    let mut s = torus_script();
    s.delete_cell(&crate::cell::CellId::new(3, "C")).unwrap();
    s.set_name("torus-surface");
    CatalogEntry {
        id: "torus-surface",
        script: s,
        provenance: "the 2-dimensional part of the square torus",
        expected: Expected {
            orientable: cited(true, "the full face sum is a cycle"),
            tight: cited(true, "dropping the free volume keeps every cell tight"),
            unitary: cited(true, "same tables as the torus"),
            ..Expected::default()
        },
        notes: "",
    }
}

fn klein_script() -> Script {
    let mut b = ScriptBuilder::new("klein");
    b.points(["p0", "p1", "p2", "p3"]);
    b.cell(1, "l1", [(1, "p1"), (-1, "p0")]);
    b.cell(1, "l2", [(1, "p0"), (-1, "p1")]);
    b.cell(1, "l3", [(1, "p2"), (-1, "p0")]);
    b.cell(1, "l4", [(1, "p0"), (-1, "p2")]);
    b.cell(1, "l5", [(1, "p3"), (-1, "p1")]);
    b.cell(1, "l6", [(1, "p1"), (-1, "p3")]);
    b.cell(1, "l7", [(1, "p3"), (-1, "p2")]);
    b.cell(1, "l8", [(1, "p2"), (-1, "p3")]);
    b.cell(2, "v1", [(1, "l5"), (1, "l8"), (-1, "l2"), (-1, "l3")]);
    b.cell(2, "v2", [(1, "l6"), (-1, "l1"), (-1, "l4"), (-1, "l8")]);
    b.cell(2, "v3", [(-1, "l1"), (1, "l3"), (1, "l7"), (-1, "l5")]);
    b.cell(2, "v4", [(1, "l4"), (-1, "l2"), (-1, "l6"), (-1, "l7")]);
    b.build()
}

fn klein() -> CatalogEntry {
    CatalogEntry {
        id: "klein",
        script: klein_script(),
        provenance: "Klein bottle on four points and eight lines",
        expected: Expected {
            sound: cited(72, "Dirac spectrum of the Klein bottle"),
            dirac_eigenvalues: cited(
                vec![
                    (-2.0 * SQRT2, 2),
                    (-2.0, 4),
                    (-SQRT2, 2),
                    (0.0, 1),
                    (SQRT2, 2),
                    (2.0, 4),
                    (2.0 * SQRT2, 2),
                ],
                "Dirac spectrum of the Klein bottle",
            ),
            tight: cited(true, "every face boundary is a 4-gon"),
            unitary: cited(true, "all coefficients are unit"),
            orientable: cited(false, "the face sum leaves -2 l1 - 2 l2"),
            monogenic_basis: cited(
                vec![vec![(1, "l3", 1), (1, "l4", 1), (1, "l5", 1), (1, "l6", 1)]],
                "harmonic line cycle of the Klein bottle",
            ),
        },
        notes: "",
    }
}

fn klein_extended_script() -> Script {
    let mut s = klein_script();
    s.set_name("klein-extended");
    let l = |n: &str| crate::cell::CellId::new(1, n);
    let chain = crate::cell::Chain::from_terms(
        1,
        [(l("l1"), crate::cell::int(1)), (l("l2"), crate::cell::int(1))],
    );
    s.insert_cell(crate::cell::CellId::new(2, "v5"), chain).unwrap();
    s
}

fn klein_extended() -> CatalogEntry {
    CatalogEntry {
        id: "klein-extended",
        script: klein_extended_script(),
        provenance: "Klein bottle with the extra face closing the double line",
        expected: Expected {
            sound: cited(76, "Dirac spectrum of the extended Klein bottle"),
            dirac_eigenvalues: cited(
                vec![
                    (-2.0 * SQRT2, 2),
                    (-2.0, 5),
                    (-SQRT2, 1),
                    (0.0, 2),
                    (SQRT2, 1),
                    (2.0, 5),
                    (2.0 * SQRT2, 2),
                ],
                "Dirac spectrum of the extended Klein bottle",
            ),
            unitary: cited(true, "v5 still has unit coefficients"),
            monogenic_basis: cited(
                vec![
                    vec![(1, "l3", 1), (1, "l4", 1), (1, "l5", 1), (1, "l6", 1)],
                    vec![
                        (2, "v1", 1),
                        (2, "v2", 1),
                        (2, "v3", 1),
                        (2, "v4", 1),
                        (2, "v5", 2),
                    ],
                ],
                "kernel chains of the extended Klein bottle",
            ),
            ..Expected::default()
        },
        notes: "",
    }
}

fn klein_extended_3cell() -> CatalogEntry {
    let mut s = klein_extended_script();
    s.set_name("klein-extended-3cell");
    let v = |n: &str| crate::cell::CellId::new(2, n);
    let i = crate::cell::int;
    let chain = crate::cell::Chain::from_terms(
        2,
        [
            (v("v1"), i(1)),
            (v("v2"), i(1)),
            (v("v3"), i(1)),
            (v("v4"), i(1)),
            (v("v5"), i(2)),
        ],
    );
    s.insert_cell(crate::cell::CellId::new(3, "C"), chain).unwrap();
    CatalogEntry {
        id: "klein-extended-3cell",
        script: s,
        provenance: "extended Klein bottle capped by a volume with a double face",
        expected: Expected {
            sound: cited(92, "Dirac spectrum of the capped extended Klein bottle"),
            dirac_eigenvalues: cited(
                vec![
                    (-2.0 * SQRT2, 3),
                    (-2.0, 5),
                    (-SQRT2, 1),
                    (0.0, 1),
                    (SQRT2, 1),
                    (2.0, 5),
                    (2.0 * SQRT2, 3),
                ],
                "Dirac spectrum of the capped extended Klein bottle",
            ),
            unitary: cited(false, "the volume carries coefficient 2 on v5"),
            monogenic_basis: cited(
                vec![vec![(1, "l3", 1), (1, "l4", 1), (1, "l5", 1), (1, "l6", 1)]],
                "kernel chain of the capped extended Klein bottle",
            ),
            ..Expected::default()
        },
        notes: "",
    }
}

fn projective_plane_script() -> Script {
    let mut b = ScriptBuilder::new("projective-plane");
    b.points(["p1", "p2", "p3"]);
    b.cell(1, "l1", [(1, "p2"), (-1, "p1")]);
    b.cell(1, "l2", [(1, "p1"), (-1, "p2")]);
    b.cell(1, "l3", [(1, "p3"), (-1, "p1")]);
    b.cell(1, "l4", [(1, "p1"), (-1, "p3")]);
    b.cell(1, "l5", [(1, "p3"), (-1, "p2")]);
    b.cell(1, "l6", [(1, "p2"), (-1, "p3")]);
    b.cell(2, "v1", [(-1, "l2"), (1, "l5"), (-1, "l3")]);
    b.cell(2, "v2", [(-1, "l1"), (-1, "l4"), (-1, "l5")]);
    b.cell(2, "v3", [(-1, "l1"), (1, "l3"), (1, "l6")]);
    b.cell(2, "v4", [(1, "l4"), (-1, "l2"), (-1, "l6")]);
    b.build()
}

fn projective_plane() -> CatalogEntry {
    const SQRT3: f64 = 1.7320508075688772;
    const SQRT6: f64 = 2.449489742783178;
    CatalogEntry {
        id: "projective-plane",
        script: projective_plane_script(),
        provenance: "projective plane on three points and six lines",
        expected: Expected {
            sound: cited(54, "Dirac spectrum of the projective plane"),
            dirac_eigenvalues: cited(
                vec![
                    (-SQRT6, 3),
                    (-SQRT3, 1),
                    (-SQRT2, 3),
                    (SQRT2, 3),
                    (SQRT3, 1),
                    (SQRT6, 3),
                ],
                "Dirac spectrum of the projective plane",
            ),
            tight: cited(true, "every face boundary is a polygon"),
            unitary: cited(true, "all coefficients are unit"),
            orientable: cited(false, "the face sum leaves -2 l1 - 2 l2"),
            monogenic_basis: cited(vec![], "no nonzero kernel chains"),
        },
        notes: "a later dual table lists dl4 = p1 - p2; the complex axioms force p1 - p3 as in the original table",
    }
}

fn projective_plane_extended_script() -> Script {
    let mut s = projective_plane_script();
    s.set_name("projective-plane-extended");
    let l = |n: &str| crate::cell::CellId::new(1, n);
    let chain = crate::cell::Chain::from_terms(
        1,
        [(l("l1"), crate::cell::int(1)), (l("l2"), crate::cell::int(1))],
    );
    s.insert_cell(crate::cell::CellId::new(2, "v5"), chain).unwrap();
    s
}

fn projective_plane_extended() -> CatalogEntry {
    const SQRT3: f64 = 1.7320508075688772;
    const SQRT6: f64 = 2.449489742783178;
    CatalogEntry {
        id: "projective-plane-extended",
        script: projective_plane_extended_script(),
        provenance: "projective plane with the extra face closing the double line",
        expected: Expected {
            sound: cited(58, "Dirac spectrum of the extended projective plane"),
            dirac_eigenvalues: cited(
                vec![
                    (-SQRT6, 3),
                    (-2.0, 1),
                    (-SQRT3, 1),
                    (-SQRT2, 2),
                    (0.0, 1),
                    (SQRT2, 2),
                    (SQRT3, 1),
                    (2.0, 1),
                    (SQRT6, 3),
                ],
                "Dirac spectrum of the extended projective plane",
            ),
            monogenic_basis: cited(
                vec![vec![
                    (2, "v1", 1),
                    (2, "v2", 1),
                    (2, "v3", 1),
                    (2, "v4", 1),
                    (2, "v5", 2),
                ]],
                "kernel chain of the extended projective plane",
            ),
            ..Expected::default()
        },
        notes: "",
    }
}

fn projective_plane_extended_3cell() -> CatalogEntry {
    const SQRT3: f64 = 1.7320508075688772;
    const SQRT6: f64 = 2.449489742783178;
    let mut s = projective_plane_extended_script();
    s.set_name("projective-plane-extended-3cell");
    let v = |n: &str| crate::cell::CellId::new(2, n);
    let i = crate::cell::int;
    let chain = crate::cell::Chain::from_terms(
        2,
        [
            (v("v1"), i(1)),
            (v("v2"), i(1)),
            (v("v3"), i(1)),
            (v("v4"), i(1)),
            (v("v5"), i(2)),
        ],
    );
    s.insert_cell(crate::cell::CellId::new(3, "C"), chain).unwrap();
    CatalogEntry {
        id: "projective-plane-extended-3cell",
        script: s,
        provenance: "extended projective plane capped by a volume with a double face",
        expected: Expected {
            sound: cited(74, "Dirac spectrum of the capped extended projective plane"),
            dirac_eigenvalues: cited(
                vec![
                    (-2.0 * SQRT2, 1),
                    (-SQRT6, 3),
                    (-2.0, 1),
                    (-SQRT3, 1),
                    (-SQRT2, 2),
                    (SQRT2, 2),
                    (SQRT3, 1),
                    (2.0, 1),
                    (SQRT6, 3),
                    (2.0 * SQRT2, 1),
                ],
                "Dirac spectrum of the capped extended projective plane",
            ),
            monogenic_basis: cited(vec![], "no nonzero kernel chains"),
            ..Expected::default()
        },
        notes: "",
    }
}

fn moebius_script() -> Script {
    let mut b = ScriptBuilder::new("moebius");
    b.points(["p1", "p2", "p3", "p4"]);
    b.cell(1, "l1", [(1, "p2"), (-1, "p1")]);
    b.cell(1, "l2", [(1, "p4"), (-1, "p3")]);
    b.cell(1, "l3", [(1, "p3"), (-1, "p1")]);
    b.cell(1, "l4", [(1, "p2"), (-1, "p3")]);
    b.cell(1, "l5", [(1, "p4"), (-1, "p2")]);
    b.cell(1, "l6", [(1, "p1"), (-1, "p4")]);
    b.cell(2, "v1", [(-1, "l1"), (1, "l2"), (1, "l3"), (-1, "l5")]);
    b.cell(2, "v2", [(-1, "l1"), (-1, "l2"), (1, "l4"), (-1, "l6")]);
    b.build()
}

fn moebius() -> CatalogEntry {
    CatalogEntry {
        id: "moebius",
        script: moebius_script(),
        provenance: "Moebius strip after gluing the rectangle edges",
        expected: Expected {
            sound: cited(48, "Dirac spectrum of the Moebius strip"),
            dirac_eigenvalues: cited(
                vec![(-2.0, 6), (0.0, 1), (2.0, 6)],
                "Dirac spectrum of the Moebius strip",
            ),
            tight: cited(true, "both faces are 4-gons"),
            unitary: cited(true, "all coefficients are unit"),
            monogenic_basis: cited(
                vec![vec![(1, "l3", 1), (1, "l4", 1), (1, "l5", 1), (1, "l6", 1)]],
                "harmonic line cycle of the Moebius strip",
            ),
            ..Expected::default()
        },
        notes: "",
    }
}

fn moebius_rectangle() -> CatalogEntry {
    let mut b = ScriptBuilder::new("moebius-rectangle");
    b.points(["p1", "p2", "p3", "p4", "p5", "p6"]);
    b.cell(1, "l1", [(1, "p2"), (-1, "p1")]);
    b.cell(1, "l2", [(1, "p4"), (-1, "p3")]);
    b.cell(1, "l3", [(1, "p3"), (-1, "p1")]);
    b.cell(1, "l4", [(1, "p5"), (-1, "p3")]);
    b.cell(1, "l5", [(1, "p4"), (-1, "p2")]);
    b.cell(1, "l6", [(1, "p6"), (-1, "p4")]);
    b.cell(1, "l7", [(1, "p6"), (-1, "p5")]);
    b.cell(2, "v1", [(1, "l3"), (1, "l2"), (-1, "l5"), (-1, "l1")]);
    b.cell(2, "v2", [(1, "l4"), (1, "l7"), (-1, "l6"), (-1, "l2")]);
    CatalogEntry {
        id: "moebius-rectangle",
        script: b.build(),
        provenance: "rectangle that folds into the Moebius strip",
        expected: Expected::default(),
        notes: "the narrative glues p6 = p4, but the effected equations need p6 = p1; the gluing that keeps the complex axioms is p5 = p2, p6 = p1",
    }
}

fn projective_from_moebius() -> CatalogEntry {
    let mut s = moebius_script();
    s.set_name("projective-from-moebius");
    let l = |n: &str| crate::cell::CellId::new(1, n);
    let i = crate::cell::int;
    let chain = crate::cell::Chain::from_terms(
        1,
        [(l("l5"), i(1)), (l("l6"), i(1)), (l("l3"), i(1)), (l("l4"), i(1))],
    );
    s.insert_cell(crate::cell::CellId::new(2, "v3"), chain).unwrap();
    CatalogEntry {
        id: "projective-from-moebius",
        script: s,
        provenance: "Moebius strip with a face attached along its boundary curve",
        expected: Expected {
            sound: cited(56, "Dirac spectrum of the second projective plane model"),
            dirac_eigenvalues: cited(
                vec![(-2.0, 7), (2.0, 7)],
                "Dirac spectrum of the second projective plane model",
            ),
            monogenic_basis: cited(vec![], "no nonzero kernel chains"),
            ..Expected::default()
        },
        notes: "",
    }
}

fn two_moebius() -> CatalogEntry {
    let mut b = ScriptBuilder::new("two-moebius");
    b.points(["p1", "p2", "p3", "p4", "p5", "p6", "p7", "p8"]);
    // first strip
    b.cell(1, "l1", [(1, "p2"), (-1, "p1")]);
    b.cell(1, "l2", [(1, "p4"), (-1, "p3")]);
    b.cell(1, "l3", [(1, "p3"), (-1, "p1")]);
    b.cell(1, "l4", [(1, "p4"), (-1, "p2")]);
    b.cell(1, "l5", [(1, "p2"), (-1, "p3")]);
    b.cell(1, "l6", [(1, "p1"), (-1, "p4")]);
    // second strip, mirrored on fresh points
    b.cell(1, "l7", [(1, "p6"), (-1, "p5")]);
    b.cell(1, "l8", [(1, "p8"), (-1, "p7")]);
    b.cell(1, "l9", [(1, "p7"), (-1, "p5")]);
    b.cell(1, "l10", [(1, "p6"), (-1, "p7")]);
    b.cell(1, "l11", [(1, "p8"), (-1, "p6")]);
    b.cell(1, "l12", [(1, "p5"), (-1, "p8")]);
    b.cell(2, "v1", [(1, "l3"), (1, "l2"), (-1, "l4"), (-1, "l1")]);
    b.cell(2, "v2", [(1, "l5"), (-1, "l1"), (-1, "l6"), (-1, "l2")]);
    b.cell(2, "v3", [(1, "l9"), (1, "l8"), (-1, "l11"), (-1, "l7")]);
    b.cell(2, "v4", [(1, "l10"), (-1, "l7"), (-1, "l12"), (-1, "l8")]);
    CatalogEntry {
        id: "two-moebius",
        script: b.build(),
        provenance: "two disjoint Moebius strips before gluing them into a Klein bottle",
        expected: Expected::default(),
        notes: "the second strip's equations are left as an exercise in the source; they are reconstructed by mirroring the first strip so that the published gluing produces the glued Klein table",
    }
}

fn klein_glued_script() -> Script {
    let mut b = ScriptBuilder::new("klein-glued");
    b.points(["p1", "p2", "p3", "p4"]);
    b.cell(1, "l1", [(1, "p2"), (-1, "p1")]);
    b.cell(1, "l2", [(1, "p4"), (-1, "p3")]);
    b.cell(1, "l3", [(1, "p3"), (-1, "p1")]);
    b.cell(1, "l4", [(1, "p4"), (-1, "p2")]);
    b.cell(1, "l5", [(1, "p2"), (-1, "p3")]);
    b.cell(1, "l6", [(1, "p1"), (-1, "p4")]);
    b.cell(1, "l7", [(1, "p1"), (-1, "p2")]);
    b.cell(1, "l8", [(1, "p3"), (-1, "p4")]);
    b.cell(2, "v1", [(-1, "l1"), (1, "l2"), (1, "l3"), (-1, "l4")]);
    b.cell(2, "v2", [(-1, "l1"), (-1, "l2"), (1, "l5"), (-1, "l6")]);
    b.cell(2, "v3", [(-1, "l3"), (1, "l4"), (-1, "l7"), (1, "l8")]);
    b.cell(2, "v4", [(-1, "l5"), (1, "l6"), (-1, "l7"), (-1, "l8")]);
    b.build()
}

fn klein_glued() -> CatalogEntry {
    const SQRT6: f64 = 2.449489742783178;
    CatalogEntry {
        id: "klein-glued",
        script: klein_glued_script(),
        provenance: "Klein bottle obtained by gluing two Moebius strips",
        expected: Expected {
            sound: cited(72, "Dirac spectrum of the glued Klein bottle"),
            dirac_eigenvalues: cited(
                vec![
                    (-SQRT6, 4),
                    (-2.0, 2),
                    (-SQRT2, 2),
                    (0.0, 1),
                    (SQRT2, 2),
                    (2.0, 2),
                    (SQRT6, 4),
                ],
                "Dirac spectrum of the glued Klein bottle",
            ),
            monogenic_basis: cited(
                vec![vec![(1, "l3", 1), (1, "l4", 1), (1, "l5", 1), (1, "l6", 1)]],
                "harmonic line cycle of the glued Klein bottle",
            ),
            ..Expected::default()
        },
        notes: "",
    }
}

fn klein_refined() -> CatalogEntry {
    let mut b = ScriptBuilder::new("klein-refined");
    b.points(["p1", "p2", "p3", "p4"]);
    b.cell(1, "l1", [(1, "p2"), (-1, "p1")]);
    b.cell(1, "l2", [(1, "p4"), (-1, "p3")]);
    b.cell(1, "l5", [(1, "p2"), (-1, "p3")]);
    b.cell(1, "l6", [(1, "p1"), (-1, "p4")]);
    b.cell(1, "l7", [(1, "p1"), (-1, "p2")]);
    b.cell(1, "l8", [(1, "p3"), (-1, "p4")]);
    b.cell(1, "l'3", [(1, "p4"), (-1, "p1")]);
    b.cell(1, "l'4", [(1, "p3"), (-1, "p2")]);
    b.cell(2, "v'1", [(1, "l'3"), (1, "l8"), (-1, "l'4"), (-1, "l1")]);
    b.cell(2, "v2", [(1, "l5"), (-1, "l1"), (-1, "l6"), (-1, "l2")]);
    b.cell(2, "v'3", [(1, "l'4"), (1, "l2"), (-1, "l'3"), (-1, "l7")]);
    b.cell(2, "v4", [(1, "l6"), (-1, "l7"), (-1, "l5"), (-1, "l8")]);
    CatalogEntry {
        id: "klein-refined",
        script: b.build(),
        provenance: "common refinement of the glued Klein bottle, equivalent to the first Klein table",
        expected: Expected::default(),
        notes: "the source lists the boundary of v'1 with -l4 where only -l'4 closes the complex; the primed line is used",
    }
}

fn portal_world_script() -> Script {
    let mut b = ScriptBuilder::new("portal-world");
    b.points(["pi1", "pi2", "p1", "p2"]);
    b.cell(1, "li1", [(1, "pi2"), (-1, "pi1")]);
    b.cell(1, "li2", [(1, "pi2"), (-1, "pi1")]);
    b.cell(1, "lp1", [(1, "p2"), (-1, "p1")]);
    b.cell(1, "lp2", [(1, "p2"), (-1, "p1")]);
    b.cell(1, "lt1", [(1, "p1"), (-1, "pi1")]);
    b.cell(1, "lb1", [(1, "p1"), (-1, "pi1")]);
    b.cell(1, "lt2", [(1, "pi2"), (-1, "p2")]);
    b.cell(1, "lb2", [(1, "pi2"), (-1, "p2")]);
    b.cell(2, "vi1", [(1, "li2"), (-1, "li1")]);
    b.cell(2, "vi2", [(1, "li2"), (-1, "li1")]);
    b.cell(2, "vp1", [(1, "lp2"), (-1, "lp1")]);
    b.cell(2, "vp2", [(1, "lp2"), (-1, "lp1")]);
    b.cell(2, "vt1", [(1, "lt1"), (1, "lp1"), (1, "lt2"), (-1, "li1")]);
    b.cell(2, "vt2", [(1, "li2"), (-1, "lt2"), (-1, "lp2"), (-1, "lt1")]);
    b.cell(2, "vb1", [(1, "lb1"), (1, "lp1"), (1, "lb2"), (-1, "li1")]);
    b.cell(2, "vb2", [(1, "li2"), (-1, "lb2"), (-1, "lp2"), (-1, "lb1")]);
    b.cell(3, "wt1", [(1, "vp1"), (1, "vt1"), (1, "vt2"), (-1, "vi1")]);
    b.cell(3, "wt2", [(1, "vi2"), (-1, "vp2"), (-1, "vt1"), (-1, "vt2")]);
    b.cell(3, "wb1", [(1, "vp2"), (1, "vb1"), (1, "vb2"), (-1, "vi1")]);
    b.cell(3, "wb2", [(1, "vi2"), (-1, "vp1"), (-1, "vb1"), (-1, "vb2")]);
    b.build()
}

fn portal_world() -> CatalogEntry {
    CatalogEntry {
        id: "portal-world",
        script: portal_world_script(),
        provenance: "two 3-dimensional half-worlds joined at a disk and at infinity",
        expected: Expected {
            sound: cited(120, "Dirac spectrum of the portal-free world"),
            dirac_eigenvalues: cited(
                vec![
                    (-2.0 * SQRT2, 4),
                    (-2.0, 6),
                    (-SQRT2, 2),
                    (0.0, 1),
                    (SQRT2, 2),
                    (2.0, 6),
                    (2.0 * SQRT2, 4),
                ],
                "Dirac spectrum of the portal-free world",
            ),
            monogenic_basis: cited(
                vec![vec![(1, "lt1", 1), (1, "lb1", -1), (1, "lt2", -1), (1, "lb2", 1)]],
                "kernel chain of the portal-free world",
            ),
            ..Expected::default()
        },
        notes: "",
    }
}

fn portal_world_portal() -> CatalogEntry {
    let mut s = portal_world_script();
    s.set_name("portal-world-portal");
    let i = crate::cell::int;
    let l = |n: &str| crate::cell::CellId::new(1, n);
    let v = |n: &str| crate::cell::CellId::new(2, n);
    // the portal faces are twins of vp1/vp2; rebuild the plane level so they
    // sit next to the other vp cells in the stored order
    let mut planes: Vec<(crate::cell::CellId, crate::cell::Chain)> = Vec::new();
    for name in ["vi1", "vi2", "vp1", "vp2", "vt1", "vt2", "vb1", "vb2"] {
        let id = v(name);
        planes.push((id.clone(), s.boundary_of(&id).unwrap()));
    }
    for (id, _) in &planes {
        s.delete_cell(id).unwrap();
    }
    let portal = crate::cell::Chain::from_terms(1, [(l("lp2"), i(1)), (l("lp1"), i(-1))]);
    for name in ["vi1", "vi2", "vp1", "vp2"] {
        let (id, chain) = planes.iter().find(|(c, _)| c.name == name).unwrap().clone();
        s.insert_cell(id, chain).unwrap();
    }
    s.insert_cell(v("vp3"), portal.clone()).unwrap();
    s.insert_cell(v("vp4"), portal).unwrap();
    for name in ["vt1", "vt2", "vb1", "vb2"] {
        let (id, chain) = planes.iter().find(|(c, _)| c.name == name).unwrap().clone();
        s.insert_cell(id, chain).unwrap();
    }
    let wt2 = crate::cell::Chain::from_terms(
        2,
        [(v("vi2"), i(1)), (v("vp3"), i(-1)), (v("vt1"), i(-1)), (v("vt2"), i(-1))],
    );
    let wb2 = crate::cell::Chain::from_terms(
        2,
        [(v("vi2"), i(1)), (v("vp4"), i(-1)), (v("vb1"), i(-1)), (v("vb2"), i(-1))],
    );
    s.set_boundary(&crate::cell::CellId::new(3, "wt2"), wt2).unwrap();
    s.set_boundary(&crate::cell::CellId::new(3, "wb2"), wb2).unwrap();
    let r8p2sq = |sign: f64| (8.0 + sign * 2.0 * SQRT2).sqrt();
    CatalogEntry {
        id: "portal-world-portal",
        script: s,
        provenance: "the half-worlds with the portal disk cut open",
        expected: Expected {
            sound: cited(128, "Dirac spectrum of the portal world"),
            dirac_eigenvalues: cited(
                vec![
                    (-r8p2sq(1.0), 1),
                    (-(7.0f64).sqrt(), 1),
                    (-r8p2sq(-1.0), 1),
                    (-2.0 * SQRT2, 2),
                    (-(5.0f64).sqrt(), 1),
                    (-2.0, 4),
                    (-(3.0f64).sqrt(), 1),
                    (-1.0, 1),
                    (0.0, 3),
                    (1.0, 1),
                    ((3.0f64).sqrt(), 1),
                    (2.0, 4),
                    ((5.0f64).sqrt(), 1),
                    (2.0 * SQRT2, 2),
                    (r8p2sq(-1.0), 1),
                    ((7.0f64).sqrt(), 1),
                    (r8p2sq(1.0), 1),
                ],
                "Dirac spectrum of the portal world",
            ),
            monogenic_basis: cited(
                vec![
                    vec![(1, "lt1", 1), (1, "lb1", -1), (1, "lt2", -1), (1, "lb2", 1)],
                    vec![
                        (2, "vi1", -1),
                        (2, "vi2", 1),
                        (2, "vp1", -1),
                        (2, "vp2", -1),
                        (2, "vp3", 1),
                        (2, "vp4", 1),
                    ],
                    vec![
                        (2, "vi1", -2),
                        (2, "vi2", 2),
                        (2, "vp2", -4),
                        (2, "vp3", 4),
                        (2, "vt1", -1),
                        (2, "vt2", -1),
                        (2, "vb1", 1),
                        (2, "vb2", 1),
                    ],
                ],
                "kernel chains of the portal world",
            ),
            ..Expected::default()
        },
        notes: "",
    }
}

fn pentagon_rp2() -> CatalogEntry {
    let mut b = ScriptBuilder::new("pentagon-rp2");
    let names: Vec<String> = (1..=5).map(|j| format!("p{j}")).collect();
    for n in &names {
        b.point(n);
    }
    for j in 1..=5 {
        b.point(&format!("q{j}"));
    }
    let next = |j: usize| if j == 5 { 1 } else { j + 1 };
    let next2 = |j: usize| next(next(j));
    for j in 1..=5 {
        let k = format!("k{j}");
        let pj = format!("p{j}");
        let pj1 = format!("p{}", next(j));
        b.cell(1, &k, [(1, pj1.as_str()), (-1, pj.as_str())]);
    }
    for j in 1..=5 {
        let l = format!("l{j}");
        let pj = format!("p{j}");
        let qj = format!("q{j}");
        b.cell(1, &l, [(1, pj.as_str()), (-1, qj.as_str())]);
    }
    for j in 1..=5 {
        let m = format!("m{j}");
        let qj = format!("q{j}");
        let qj2 = format!("q{}", next2(j));
        b.cell(1, &m, [(1, qj2.as_str()), (-1, qj.as_str())]);
    }
    for j in 1..=5 {
        let v = format!("v{j}");
        let lj = format!("l{j}");
        let kj = format!("k{j}");
        let kj1 = format!("k{}", next(j));
        let lj2 = format!("l{}", next2(j));
        let mj = format!("m{j}");
        b.cell(
            2,
            &v,
            [
                (1, lj.as_str()),
                (1, kj.as_str()),
                (1, kj1.as_str()),
                (-1, lj2.as_str()),
                (-1, mj.as_str()),
            ],
        );
    }
    b.cell(2, "v", [(1, "m1"), (1, "m2"), (1, "m3"), (1, "m4"), (1, "m5")]);
    let s5 = 5.0f64.sqrt();
    CatalogEntry {
        id: "pentagon-rp2",
        script: b.build(),
        provenance: "pentagon model of the projective plane: an outer pentagon, an inner pentagram and the core face",
        expected: Expected {
            sound: cited(140, "Dirac spectrum of the pentagon model"),
            dirac_eigenvalues: cited(
                vec![
                    (-(10.0f64).sqrt(), 1),
                    (-(5.0 + s5).sqrt(), 3),
                    (-s5, 4),
                    (-(5.0 - s5).sqrt(), 3),
                    (-SQRT2, 5),
                    (SQRT2, 5),
                    ((5.0 - s5).sqrt(), 3),
                    (s5, 4),
                    ((5.0 + s5).sqrt(), 3),
                    ((10.0f64).sqrt(), 1),
                ],
                "Dirac spectrum of the pentagon model",
            ),
            monogenic_basis: cited(vec![], "no nonzero kernel chains"),
            ..Expected::default()
        },
        notes: "",
    }
}

fn lie_sphere() -> CatalogEntry {
    let mut b = ScriptBuilder::new("lie-sphere");
    b.points(["p1", "p2"]);
    b.cell(1, "l1", [(1, "p2"), (-1, "p1")]);
    b.cell(1, "l2", [(1, "p2"), (-1, "p1")]);
    b.cell(1, "(p1,I)", [(1, "p2"), (-1, "p1")]);
    b.cell(1, "(p2,I)", [(1, "p1"), (-1, "p2")]);
    b.cell(2, "v1", [(1, "l2"), (-1, "l1")]);
    b.cell(2, "v2", [(1, "l2"), (-1, "l1")]);
    b.cell(2, "(l1,I)", [(1, "(p2,I)"), (-1, "(p1,I)"), (1, "l2"), (1, "l1")]);
    b.cell(2, "(l2,I)", [(1, "(p2,I)"), (-1, "(p1,I)"), (1, "l1"), (1, "l2")]);
    b.cell(3, "(v1,I)", [(1, "(l2,I)"), (-1, "(l1,I)"), (1, "v2"), (-1, "v1")]);
    b.cell(3, "(v2,I)", [(1, "(l2,I)"), (-1, "(l1,I)"), (1, "v1"), (-1, "v2")]);
    CatalogEntry {
        id: "lie-sphere",
        script: b.build(),
        provenance: "Lie sphere from a sphere crossed with an interval, end cells glued with a twist",
        expected: Expected {
            tight: cited(false, "the interval faces carry independent cycles"),
            ..Expected::default()
        },
        notes: "the boundary of (l2,I) is stated as `ibid`; the twist identification gives the same chain as (l1,I)",
    }
}

fn lie_sphere_tight() -> CatalogEntry {
    let mut b = ScriptBuilder::new("lie-sphere-tight");
    b.points(["p1", "p2", "ip1", "ip2"]);
    b.cell(1, "l1", [(1, "p2"), (-1, "p1")]);
    b.cell(1, "l2", [(1, "p2"), (-1, "p1")]);
    b.cell(1, "il1", [(1, "ip2"), (-1, "ip1")]);
    b.cell(1, "il2", [(1, "ip2"), (-1, "ip1")]);
    b.cell(1, "(p1,I1)", [(1, "ip1"), (-1, "p1")]);
    b.cell(1, "(p2,I1)", [(1, "ip2"), (-1, "p2")]);
    b.cell(1, "(p1,I2)", [(1, "p2"), (-1, "ip1")]);
    b.cell(1, "(p2,I2)", [(1, "p1"), (-1, "ip2")]);
    b.cell(2, "v1", [(1, "l2"), (-1, "l1")]);
    b.cell(2, "v2", [(1, "l2"), (-1, "l1")]);
    b.cell(2, "iv1", [(1, "il2"), (-1, "il1")]);
    b.cell(2, "iv2", [(1, "il2"), (-1, "il1")]);
    b.cell(2, "(l1,I1)", [(1, "(p2,I1)"), (-1, "(p1,I1)"), (-1, "il1"), (1, "l1")]);
    b.cell(2, "(l2,I1)", [(1, "(p2,I1)"), (-1, "(p1,I1)"), (-1, "il2"), (1, "l2")]);
    b.cell(2, "(l1,I2)", [(1, "(p2,I2)"), (-1, "(p1,I2)"), (1, "l2"), (1, "il1")]);
    b.cell(2, "(l2,I2)", [(1, "(p2,I2)"), (-1, "(p1,I2)"), (1, "l1"), (1, "il2")]);
    b.cell(3, "(v1,I1)", [(1, "(l2,I1)"), (-1, "(l1,I1)"), (1, "iv1"), (-1, "v1")]);
    b.cell(3, "(v2,I1)", [(1, "(l2,I1)"), (-1, "(l1,I1)"), (1, "iv2"), (-1, "v2")]);
    b.cell(3, "(v1,I2)", [(1, "(l2,I2)"), (-1, "(l1,I2)"), (1, "v2"), (-1, "iv1")]);
    b.cell(3, "(v2,I2)", [(1, "(l2,I2)"), (-1, "(l1,I2)"), (1, "v1"), (-1, "iv2")]);
    CatalogEntry {
        id: "lie-sphere-tight",
        script: b.build(),
        provenance: "Lie sphere from a sphere crossed with a double interval; every cell is tight",
        expected: Expected {
            tight: cited(true, "the double-interval model is tight"),
            unitary: cited(true, "all coefficients are unit"),
            ..Expected::default()
        },
        notes: "",
    }
}

fn disc() -> CatalogEntry {
    let mut b = ScriptBuilder::new("disc");
    b.points(["p1", "p2"]);
    b.cell(1, "l1", [(1, "p2"), (-1, "p1")]);
    b.cell(1, "l2", [(1, "p2"), (-1, "p1")]);
    b.cell(2, "v", [(1, "l2"), (-1, "l1")]);
    CatalogEntry {
        id: "disc",
        script: b.build(),
        provenance: "two points, two arcs and one face",
        expected: Expected::default(),
        notes: "",
    }
}

/// The zoned curvature surface in a finite window of the cubic grid:
/// three quarter-planes at height zero, two vertical walls and a quarter
/// plane at height three. One corner vertex meets five squares, another
/// meets three.
fn curvature_surface() -> CatalogEntry {
    const W: i64 = 4;
    const H: i64 = 3;
    let pt = |a: i64, b: i64, c: i64| format!("({a},{b},{c})");
    let lx = |j: i64, b: i64, c: i64| format!("(I{j},{b},{c})");
    let ly = |a: i64, j: i64, c: i64| format!("({a},I{j},{c})");
    let lz = |a: i64, b: i64, j: i64| format!("({a},{b},I{j})");

    let mut points: Vec<String> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    let mut push_point = |points: &mut Vec<String>, name: String| {
        if seen.insert(name.clone()) {
            points.push(name);
        }
    };
    // zones 1-3: the bent floor at height 0
    for a in -W..=0 {
        for b in 0..=W {
            push_point(&mut points, pt(a, b, 0));
        }
    }
    for a in -W..=0 {
        for b in -W..=0 {
            push_point(&mut points, pt(a, b, 0));
        }
    }
    for a in 0..=W {
        for b in -W..=0 {
            push_point(&mut points, pt(a, b, 0));
        }
    }
    // zones 4-5: vertical walls
    for a in 0..=W {
        for c in 0..=H {
            push_point(&mut points, pt(a, 0, c));
        }
    }
    for b in 0..=W {
        for c in 0..=H {
            push_point(&mut points, pt(0, b, c));
        }
    }
    // zone 6: the roof at height 3
    for a in 0..=W {
        for b in 0..=W {
            push_point(&mut points, pt(a, b, H));
        }
    }

    struct Line {
        name: String,
        from: String,
        to: String,
    }
    let mut lines: Vec<Line> = Vec::new();
    let mut seen_lines = std::collections::BTreeSet::new();
    let mut push_line = |lines: &mut Vec<Line>, name: String, from: String, to: String| {
        if seen_lines.insert(name.clone()) {
            lines.push(Line { name, from, to });
        }
    };
    // zone 1 lines
    for j in -W..0 {
        for b in 0..=W {
            push_line(&mut lines, lx(j, b, 0), pt(j, b, 0), pt(j + 1, b, 0));
        }
    }
    for j in 0..W {
        for a in -W..=0 {
            push_line(&mut lines, ly(a, j, 0), pt(a, j, 0), pt(a, j + 1, 0));
        }
    }
    // zone 2 lines
    for j in -W..0 {
        for b in -W..=0 {
            push_line(&mut lines, lx(j, b, 0), pt(j, b, 0), pt(j + 1, b, 0));
        }
    }
    for j in -W..0 {
        for a in -W..=0 {
            push_line(&mut lines, ly(a, j, 0), pt(a, j, 0), pt(a, j + 1, 0));
        }
    }
    // zone 3 lines
    for j in 0..W {
        for b in -W..=0 {
            push_line(&mut lines, lx(j, b, 0), pt(j, b, 0), pt(j + 1, b, 0));
        }
    }
    for j in -W..0 {
        for a in 0..=W {
            push_line(&mut lines, ly(a, j, 0), pt(a, j, 0), pt(a, j + 1, 0));
        }
    }
    // zone 4 lines
    for j in 0..W {
        for c in 0..=H {
            push_line(&mut lines, lx(j, 0, c), pt(j, 0, c), pt(j + 1, 0, c));
        }
    }
    for a in 0..=W {
        for j in 0..H {
            push_line(&mut lines, lz(a, 0, j), pt(a, 0, j), pt(a, 0, j + 1));
        }
    }
    // zone 5 lines
    for j in 0..W {
        for c in 0..=H {
            push_line(&mut lines, ly(0, j, c), pt(0, j, c), pt(0, j + 1, c));
        }
    }
    for b in 0..=W {
        for j in 0..H {
            push_line(&mut lines, lz(0, b, j), pt(0, b, j), pt(0, b, j + 1));
        }
    }
    // zone 6 lines
    for j in 0..W {
        for b in 0..=W {
            push_line(&mut lines, lx(j, b, H), pt(j, b, H), pt(j + 1, b, H));
        }
    }
    for j in 0..W {
        for a in 0..=W {
            push_line(&mut lines, ly(a, j, H), pt(a, j, H), pt(a, j + 1, H));
        }
    }

    struct Plane {
        name: String,
        // (line name, coefficient) in the cubic product sign convention
        terms: Vec<(String, i64)>,
    }
    let mut planes: Vec<Plane> = Vec::new();
    let plane_xy = |j: i64, k: i64, c: i64| Plane {
        name: format!("(I{j},I{k},{c})"),
        terms: vec![
            (ly(j + 1, k, c), 1),
            (ly(j, k, c), -1),
            (lx(j, k + 1, c), -1),
            (lx(j, k, c), 1),
        ],
    };
    let plane_xz = |j: i64, b: i64, k: i64| Plane {
        name: format!("(I{j},{b},I{k})"),
        terms: vec![
            (lz(j + 1, b, k), 1),
            (lz(j, b, k), -1),
            (lx(j, b, k + 1), -1),
            (lx(j, b, k), 1),
        ],
    };
    let plane_yz = |a: i64, j: i64, k: i64| Plane {
        name: format!("({a},I{j},I{k})"),
        terms: vec![
            (lz(a, j + 1, k), 1),
            (lz(a, j, k), -1),
            (ly(a, j, k + 1), -1),
            (ly(a, j, k), 1),
        ],
    };
    for j in -W..0 {
        for k in 0..W {
            planes.push(plane_xy(j, k, 0));
        }
    }
    for j in -W..0 {
        for k in -W..0 {
            planes.push(plane_xy(j, k, 0));
        }
    }
    for j in 0..W {
        for k in -W..0 {
            planes.push(plane_xy(j, k, 0));
        }
    }
    for j in 0..W {
        for k in 0..H {
            planes.push(plane_xz(j, 0, k));
        }
    }
    for j in 0..W {
        for k in 0..H {
            planes.push(plane_yz(0, j, k));
        }
    }
    for j in 0..W {
        for k in 0..W {
            planes.push(plane_xy(j, k, H));
        }
    }

    let mut b = ScriptBuilder::new("curvature-surface");
    for p in &points {
        b.point(p);
    }
    for l in &lines {
        b.cell(1, &l.name, [(1, l.to.as_str()), (-1, l.from.as_str())]);
    }
    for p in &planes {
        let terms: Vec<(i64, &str)> = p.terms.iter().map(|(n, k)| (*k, n.as_str())).collect();
        b.cell(2, &p.name, terms);
    }
    CatalogEntry {
        id: "curvature-surface",
        script: b.build(),
        provenance: "bent grid surface with one corner of five squares and one of three",
        expected: Expected {
            tight: cited(true, "grid squares and segments are tight"),
            unitary: cited(true, "grid boundaries are unit"),
            ..Expected::default()
        },
        notes: "the wall zone plane lists run to height 3; the plane index stops one short of the top row of points, matching the available lines",
    }
}

/// The n-point summation script: n points, each with accumulator
/// coefficient one, and nothing else.
pub fn addition_in_z(n: usize) -> Script {
    let mut b = ScriptBuilder::new(format!("addition-z-{n}"));
    for j in 1..=n {
        b.point(&format!("p{j}"));
    }
    b.build()
}

/// Curvature point annotations for the zoned surface: the vertex names and
/// how many squares meet there.
pub const CURVATURE_POINTS: [(&str, usize, i64); 2] = [
    ("(0,0,0)", 5, -1),
    ("(0,0,3)", 3, 1),
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_validates() {
        for id in list() {
            let entry = get(id).unwrap();
            let report = entry.script.validate();
            assert!(
                report.is_valid(),
                "{id}: {:?}",
                report.violations.first()
            );
        }
    }

    #[test]
    fn unknown_id_is_an_error() {
        assert!(matches!(get("nope"), Err(Error::UnknownId(_))));
    }

    #[test]
    fn torus_cell_counts() {
        let s = get("torus").unwrap().script;
        assert_eq!(
            [0, 1, 2, 3].map(|k| s.cells_of_dim(k).len()),
            [4, 8, 4, 1]
        );
    }

    #[test]
    fn pentagon_cell_counts() {
        let s = get("pentagon-rp2").unwrap().script;
        assert_eq!([0, 1, 2].map(|k| s.cells_of_dim(k).len()), [10, 15, 6]);
    }

    #[test]
    fn klein_extended_has_the_closing_face() {
        let s = get("klein-extended").unwrap().script;
        let dv5 = s
            .boundary_of(&crate::cell::CellId::new(2, "v5"))
            .unwrap();
        assert_eq!(dv5.support().len(), 2);
        assert_eq!(dv5.coeff(&crate::cell::CellId::new(1, "l1")), crate::cell::int(1));
        assert_eq!(dv5.coeff(&crate::cell::CellId::new(1, "l2")), crate::cell::int(1));
    }

    #[test]
    fn curvature_surface_has_the_two_special_corners() {
        let s = get("curvature-surface").unwrap().script;
        for (name, squares, _) in CURVATURE_POINTS {
            let p = crate::cell::CellId::new(0, name);
            assert!(s.has_cell(&p), "missing {name}");
            let mut incident = 0;
            for v in s.cells_of_dim(2) {
                let mut touches = false;
                for (line, _) in s.boundary_of(v).unwrap().iter() {
                    if s.boundary_of(line).unwrap().support().contains(&p) {
                        touches = true;
                        break;
                    }
                }
                if touches {
                    incident += 1;
                }
            }
            assert_eq!(incident, squares, "at {name}");
        }
    }

    #[test]
    fn addition_script_is_points_only() {
        let s = addition_in_z(4);
        assert_eq!(s.cell_count(), 4);
        assert!(s.validate().is_valid());
    }
}
