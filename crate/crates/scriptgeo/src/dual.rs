//! The Kronecker metric, the dual boundary operator, dual scripts with
//! their obstructions (the orientability signal), and the orientation
//! search itself.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::cell::{int, CellId, Chain, Int};
use crate::error::{Error, Result};
use crate::homology::cycle_basis;
use crate::script::Script;

/// The Kronecker metric: one exactly on equal cells of equal dimension.
pub fn kronecker(a: &CellId, b: &CellId) -> i8 {
    if a == b {
        1
    } else {
        0
    }
}

/// The adjoint of the boundary map: `d c` collects every cell one level up
/// weighted by the coefficient with which `c` sits in its boundary. The
/// accumulator pseudo-cell is a legal argument and yields the sum of the
/// bottom-level cells weighted by their accumulator coefficients.
pub fn dual_boundary(s: &Script, cell: &CellId) -> Result<Chain> {
    let is_acc = cell.is_accumulator() && cell.dim == s.acc_dim();
    if !is_acc && !s.has_cell(cell) {
        return Err(Error::UnknownCell(cell.clone()));
    }
    let mut out = Chain::zero(cell.dim + 1);
    for up in s.cells_of_dim(cell.dim + 1) {
        let coeff = s.boundary_of(up)?.coeff(cell);
        out.add_term(up.clone(), coeff);
    }
    Ok(out)
}

/// Extends `dual_boundary` linearly over a chain.
pub fn dual_boundary_of_chain(s: &Script, chain: &Chain) -> Result<Chain> {
    let mut out = Chain::zero(chain.dim() + 1);
    for (cell, coeff) in chain.iter() {
        out = out.add(&dual_boundary(s, cell)?.scale(coeff));
    }
    Ok(out)
}

/// Why a dual fails to be a script. This doubles as the orientability
/// signal for complexes carried by a single top cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DualObstruction {
    /// The top dimension must hold exactly one cell to act as the dual's
    /// accumulator.
    TopCellCount { dim: i32, count: usize },
    /// A cell below the top is killed by the dual operator (a free arc).
    FreeArc(CellId),
    /// A next-to-top cell enters the top cell with a non-unit coefficient,
    /// so no sign normalization can make it a point with boundary one.
    NonUnitIntoTop { cell: CellId, coeff: Int },
    /// A truncated complex has no accumulator to become the dual top cell.
    NoAccumulator,
}

impl fmt::Display for DualObstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DualObstruction::TopCellCount { dim, count } => {
                write!(f, "top dimension {dim} holds {count} cells instead of one")
            }
            DualObstruction::FreeArc(c) => {
                write!(f, "cell {c} is in the kernel of the dual operator")
            }
            DualObstruction::NonUnitIntoTop { cell, coeff } => {
                write!(f, "cell {cell} meets the top cell with coefficient {coeff}")
            }
            DualObstruction::NoAccumulator => write!(f, "script has no accumulator"),
        }
    }
}

/// Builds the dual script when the reversal produces one: the single top
/// cell becomes the new accumulator, the old accumulator the new top cell,
/// and signs are flipped so every new point has accumulator coefficient
/// plus one.
pub fn dual_script(s: &Script) -> std::result::Result<Script, DualObstruction> {
    build_dual(s, true)
}

/// The same grading reversal without the script-ness checks: free arcs stay
/// as floating cells, several top cells leave a truncated dual, non-unit
/// accumulator coefficients are kept. The result is always a valid complex.
pub fn dual_complex(s: &Script) -> std::result::Result<Script, DualObstruction> {
    build_dual(s, false)
}

fn build_dual(s: &Script, strict: bool) -> std::result::Result<Script, DualObstruction> {
    if !s.has_accumulator() {
        return Err(DualObstruction::NoAccumulator);
    }
    let Some(m) = s.top_dim() else {
        return Err(DualObstruction::TopCellCount { dim: 0, count: 0 });
    };
    let top_cells = s.cells_of_dim(m);
    let single_top = top_cells.len() == 1;
    if strict {
        if !single_top {
            return Err(DualObstruction::TopCellCount { dim: m, count: top_cells.len() });
        }
        let top = &top_cells[0];
        for cell in s.all_cells() {
            if cell == top {
                continue;
            }
            let d = dual_boundary(s, cell).expect("script cell");
            if d.is_zero() {
                return Err(DualObstruction::FreeArc(cell.clone()));
            }
            if cell.dim == m - 1 {
                let coeff = d.coeff(top);
                if !coeff.abs().is_one() {
                    return Err(DualObstruction::NonUnitIntoTop {
                        cell: cell.clone(),
                        coeff,
                    });
                }
            }
        }
    }

    // grading reversal: with a single top cell the top becomes the new
    // accumulator (offset m-1); otherwise the top cells become the new
    // bottom cells of a truncated dual (offset m)
    let offset = if single_top { m - 1 } else { m };
    let new_dim = |k: i32| offset - k;
    let bottom = s.acc_dim() + 1;

    let mut out = Script::new(format!("{}-dual", s.name()));
    out.set_has_accumulator(single_top);
    out.set_acc_dim(-1);
    let new_acc = out.accumulator_id();
    let top = single_top.then(|| top_cells[0].clone());

    let mut old_dims: Vec<i32> = s.dims();
    old_dims.reverse();
    for k in old_dims {
        for cell in s.cells_of_dim(k) {
            if Some(cell) == top.as_ref() {
                continue;
            }
            let d = dual_boundary(s, cell).expect("script cell");
            let mut chain = Chain::zero(new_dim(k) - 1);
            for (up, coeff) in d.iter() {
                if Some(up) == top.as_ref() {
                    chain.add_term(new_acc.clone(), coeff.clone());
                } else {
                    chain.add_term(CellId::new(new_dim(up.dim), up.name.clone()), coeff.clone());
                }
            }
            out.insert_cell(CellId::new(new_dim(k), cell.name.clone()), chain)
                .expect("dual names are the original names");
        }
    }
    // the old accumulator enters as the new top cell
    let d_acc = dual_boundary(s, &s.accumulator_id()).expect("accumulator");
    let mut top_chain = Chain::zero(new_dim(bottom));
    for (p, coeff) in d_acc.iter() {
        top_chain.add_term(CellId::new(new_dim(p.dim), p.name.clone()), coeff.clone());
    }
    out.insert_cell(CellId::new(new_dim(bottom) + 1, "1^"), top_chain)
        .expect("fresh top cell");

    // sign normalization: make every reachable point boundary +1
    let mut flips = std::collections::BTreeMap::new();
    for p in out.cells_of_dim(0) {
        if out.acc_coeff(p).is_negative() {
            flips.insert(p.clone(), -1i8);
        }
    }
    let out = if flips.is_empty() {
        out
    } else {
        out.relabel_equivalent(&flips).expect("flipping own points")
    };
    debug_assert!(out.validate().is_valid());
    Ok(out)
}

/// Searches for an orientation: a top-dimensional cycle with every
/// coefficient plus or minus one covering all top cells, independently per
/// connected component of the top level. Components are connected through
/// shared offprint cells.
pub fn is_orientable(s: &Script) -> Result<Option<Chain>> {
    let Some(m) = s.top_dim() else {
        return Ok(Some(Chain::zero(0)));
    };
    let top: Vec<CellId> = s.cells_of_dim(m).to_vec();
    let components = top_components(s, &top)?;
    let mut orientation = Chain::zero(m);
    for comp in components {
        let basis = cycle_basis(s, &comp)?;
        let rank = basis.len();
        if rank == 0 {
            return Ok(None);
        }
        let combos = 3usize
            .checked_pow(rank as u32)
            .filter(|c| *c <= 1_000_000)
            .ok_or(Error::SearchBudgetExceeded { budget: 1_000_000 })?;
        let mut found = None;
        'outer: for mask in 0..combos {
            let mut rest = mask;
            let mut candidate = Chain::zero(m);
            for vec in &basis {
                let c = (rest % 3) as i64 - 1;
                rest /= 3;
                if c != 0 {
                    candidate = candidate.add(&vec.scale(&int(c)));
                }
            }
            if candidate.support().len() != comp.len() {
                continue;
            }
            for (_, coeff) in candidate.iter() {
                if !coeff.abs().is_one() {
                    continue 'outer;
                }
            }
            found = Some(candidate);
            break;
        }
        match found {
            Some(mut chain) => {
                // deterministic sign: first component cell positive
                if let Some(first) = comp.iter().next() {
                    if chain.coeff(first).is_negative() {
                        chain = chain.neg();
                    }
                }
                orientation = orientation.add(&chain);
            }
            None => return Ok(None),
        }
    }
    Ok(Some(orientation))
}

fn top_components(s: &Script, top: &[CellId]) -> Result<Vec<BTreeSet<CellId>>> {
    let mut remaining: BTreeSet<CellId> = top.iter().cloned().collect();
    let mut components = Vec::new();
    while let Some(seed) = remaining.iter().next().cloned() {
        let mut comp: BTreeSet<CellId> = BTreeSet::new();
        let mut frontier = vec![seed.clone()];
        comp.insert(seed.clone());
        remaining.remove(&seed);
        while let Some(cell) = frontier.pop() {
            let row = s.offprint_row(&cell)?;
            let neighbours: Vec<CellId> = remaining
                .iter()
                .filter(|other| {
                    let orow = s.offprint_row(other).expect("top cell");
                    !row.is_disjoint(&orow)
                })
                .cloned()
                .collect();
            for n in neighbours {
                remaining.remove(&n);
                comp.insert(n.clone());
                frontier.push(n);
            }
        }
        components.push(comp);
    }
    Ok(components)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::equiv::are_equivalent;
    use crate::script::ScriptBuilder;

    fn torus() -> Script {
        catalog::get("torus").unwrap().script
    }

    #[test]
    fn kronecker_examples() {
        let l1 = CellId::new(1, "l1");
        let l2 = CellId::new(1, "l2");
        let p1 = CellId::new(0, "l1");
        assert_eq!(kronecker(&l1, &l1), 1);
        assert_eq!(kronecker(&l1, &l2), 0);
        assert_eq!(kronecker(&l1, &p1), 0);
    }

    #[test]
    fn torus_dual_boundary_of_l1() {
        let s = torus();
        let d = dual_boundary(&s, &CellId::new(1, "l1")).unwrap();
        assert_eq!(d.coeff(&CellId::new(2, "v3")), int(1));
        assert_eq!(d.coeff(&CellId::new(2, "v1")), int(-1));
        assert_eq!(d.support().len(), 2);
    }

    #[test]
    fn torus_dual_of_the_accumulator_sums_the_points() {
        let s = torus();
        let d = dual_boundary(&s, &s.accumulator_id()).unwrap();
        assert_eq!(d.support().len(), 4);
        for p in s.cells_of_dim(0) {
            assert_eq!(d.coeff(p), int(1));
        }
    }

    #[test]
    fn top_cells_die_under_the_dual_operator() {
        let s = torus();
        assert!(dual_boundary(&s, &CellId::new(3, "C")).unwrap().is_zero());
    }

    #[test]
    fn dual_squared_vanishes_on_the_torus() {
        let s = torus();
        for c in s.all_cells() {
            let d = dual_boundary(&s, c).unwrap();
            assert!(dual_boundary_of_chain(&s, &d).unwrap().is_zero(), "{c}");
        }
    }

    #[test]
    fn torus_dual_is_a_torus_again() {
        let dual = dual_script(&torus()).expect("the torus is orientable");
        assert!(dual.validate().is_valid());
        assert!(dual.is_unitary());
        assert!(are_equivalent(&dual, &torus()).unwrap().is_some());
    }

    #[test]
    fn klein_dual_is_obstructed() {
        let klein = catalog::get("klein").unwrap().script;
        match dual_script(&klein) {
            Err(DualObstruction::TopCellCount { dim: 2, count: 4 }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn projective_plane_dual_is_obstructed() {
        let s = catalog::get("projective-plane").unwrap().script;
        assert!(dual_script(&s).is_err());
    }

    #[test]
    fn capped_extended_klein_has_a_forced_dual_with_a_heavy_point() {
        let s = catalog::get("klein-extended-3cell").unwrap().script;
        // strict construction rejects the doubled accumulator coefficient
        match dual_script(&s) {
            Err(DualObstruction::NonUnitIntoTop { cell, coeff }) => {
                assert_eq!(cell.name, "v5");
                assert_eq!(coeff, int(2));
            }
            other => panic!("unexpected {other:?}"),
        }
        // the forced complex exists, validates, and v5 is not tight in it
        let dual = dual_complex(&s).unwrap();
        assert!(dual.validate().is_valid());
        let v5 = CellId::new(0, "v5");
        assert_eq!(dual.acc_coeff(&v5), int(2));
        assert!(!crate::tightness::is_cell_tight(&dual, &v5).unwrap());
        assert!(!dual.is_unitary());
    }

    #[test]
    fn ball_duals_are_unitary_scripts() {
        for m in 1..=3 {
            let ball = crate::products::gen_ball(m).unwrap();
            let dual = dual_script(&ball).expect("ball duals exist");
            assert!(dual.validate().is_valid(), "m = {m}");
            assert!(dual.is_unitary(), "m = {m}");
        }
    }

    #[test]
    fn orientation_verdicts() {
        let surface = catalog::get("torus-surface").unwrap().script;
        let orientation = is_orientable(&surface).unwrap().expect("orientable");
        assert_eq!(orientation.support().len(), 4);
        assert!(orientation.is_unitary());

        let klein = catalog::get("klein").unwrap().script;
        assert!(is_orientable(&klein).unwrap().is_none());

        let mut b = ScriptBuilder::new("sphere2");
        b.points(["p1", "p2"]);
        b.cell(1, "l1", [(1, "p1"), (-1, "p2")]);
        b.cell(1, "l2", [(1, "p1"), (-1, "p2")]);
        b.cell(2, "v1", [(1, "l1"), (-1, "l2")]);
        b.cell(2, "v2", [(1, "l1"), (-1, "l2")]);
        let sphere = b.build();
        let orientation = is_orientable(&sphere).unwrap().expect("orientable");
        assert_eq!(orientation.coeff(&CellId::new(2, "v1")), int(1));
        assert_eq!(orientation.coeff(&CellId::new(2, "v2")), int(-1));
    }
}
