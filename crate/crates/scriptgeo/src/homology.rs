//! Boundary matrices and the homology calculus: absolute, local, and
//! relative homology of cell sets, all through exact Smith reduction.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};

use crate::cell::{CellId, Chain, Int};
use crate::error::{Error, Result};
use crate::matrix::{self, IntMatrix};
use crate::script::Script;

/// Rank and ordered torsion coefficients of `Z^r (+) Z/d1 (+) ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyGroup {
    pub rank: usize,
    pub torsion: Vec<Int>,
}

impl HomologyGroup {
    pub fn trivial() -> Self {
        HomologyGroup { rank: 0, torsion: Vec::new() }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn free(rank: usize) -> Self {
        HomologyGroup { rank, torsion: Vec::new() }
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Row identifiers one level below dimension `k`: the cells there, or the
/// accumulator pseudo-cell when `k - 1` is the accumulator level.
fn row_ids(s: &Script, k: i32) -> Vec<CellId> {
    if k - 1 == s.acc_dim() {
        if s.has_accumulator() {
            vec![s.accumulator_id()]
        } else {
            Vec::new()
        }
    } else {
        s.cells_of_dim(k - 1).to_vec()
    }
}

/// The matrix of the boundary map on the k-cells: column j holds the
/// coefficients of the boundary of the j-th k-cell in the (k-1)-cell order.
pub fn boundary_matrix(s: &Script, k: i32) -> IntMatrix {
    let cols = s.cells_of_dim(k).to_vec();
    let rows = row_ids(s, k);
    matrix_for(s, &rows, &cols)
}

fn matrix_for(s: &Script, rows: &[CellId], cols: &[CellId]) -> IntMatrix {
    let mut m = IntMatrix::zero(rows.len(), cols.len());
    let index: std::collections::HashMap<&CellId, usize> =
        rows.iter().enumerate().map(|(i, c)| (c, i)).collect();
    for (j, cell) in cols.iter().enumerate() {
        let b = s.boundary_of(cell).expect("columns are script cells");
        for (target, coeff) in b.iter() {
            if let Some(&i) = index.get(target) {
                m.set(i, j, coeff.clone());
            }
        }
    }
    m.row_labels = Some(rows.to_vec());
    m.col_labels = Some(cols.to_vec());
    m
}

/// Orders a cell set by the script's stored cell order so that every matrix
/// built from it is reproducible.
fn in_script_order(s: &Script, set: &BTreeSet<CellId>) -> Result<Vec<CellId>> {
    for c in set {
        let is_acc = c.is_accumulator() && c.dim == s.acc_dim();
        if !is_acc && !s.has_cell(c) {
            return Err(Error::UnknownCell(c.clone()));
        }
    }
    if set.is_empty() {
        return Ok(Vec::new());
    }
    let dim = set.iter().next().unwrap().dim;
    if set.iter().any(|c| c.dim != dim) {
        return Err(Error::BadParameter("cell set spans several dimensions".into()));
    }
    let mut out = Vec::with_capacity(set.len());
    if dim == s.acc_dim() {
        // only the pseudo-accumulator lives there
        out.extend(set.iter().cloned());
        return Ok(out);
    }
    for c in s.cells_of_dim(dim) {
        if set.contains(c) {
            out.push(c.clone());
        }
    }
    Ok(out)
}

/// Kernel of the boundary restricted to columns `cols`, with the rows in
/// `deleted_rows` projected away. This is the workhorse behind local and
/// relative cycle modules.
fn restricted_kernel(
    s: &Script,
    cols: &[CellId],
    deleted_rows: &BTreeSet<CellId>,
) -> Result<Vec<Chain>> {
    if cols.is_empty() {
        return Ok(Vec::new());
    }
    let k = cols[0].dim;
    let rows: Vec<CellId> = row_ids(s, k)
        .into_iter()
        .filter(|r| !deleted_rows.contains(r))
        .collect();
    let m = matrix_for(s, &rows, cols);
    let basis = matrix::kernel_basis(&m);
    Ok(basis
        .into_iter()
        .map(|vec| {
            Chain::from_terms(
                k,
                cols.iter().cloned().zip(vec.into_iter()),
            )
        })
        .collect())
}

/// Basis of the module of k-cycles supported on `cells` (an absolute local
/// cycle module: no rows are deleted).
pub fn cycle_basis(s: &Script, cells: &BTreeSet<CellId>) -> Result<Vec<Chain>> {
    let cols = in_script_order(s, cells)?;
    restricted_kernel(s, &cols, &BTreeSet::new())
}

/// Basis of the relative cycle module: chains on `u` whose boundary support
/// lies inside `v`.
pub fn relative_cycles(
    s: &Script,
    u: &BTreeSet<CellId>,
    v: &BTreeSet<CellId>,
) -> Result<Vec<Chain>> {
    for c in v {
        let is_acc = c.is_accumulator() && c.dim == s.acc_dim();
        if !is_acc && !s.has_cell(c) {
            return Err(Error::UnknownCell(c.clone()));
        }
    }
    let cols = in_script_order(s, u)?;
    restricted_kernel(s, &cols, v)
}

/// Absolute homology of the script in degree k.
pub fn homology(s: &Script, k: i32) -> HomologyGroup {
    if k == s.acc_dim() {
        if !s.has_accumulator() {
            return HomologyGroup::trivial();
        }
        // the accumulator module itself: Z modulo the image of the point sums
        let above = boundary_matrix(s, k + 1);
        let factors = matrix::invariant_factors(&above);
        let rank = 1 - factors.len();
        let torsion: Vec<Int> = factors.into_iter().filter(|d| !d.is_one()).collect();
        return HomologyGroup { rank, torsion };
    }
    let here = boundary_matrix(s, k);
    let above = boundary_matrix(s, k + 1);
    let nullity = here.cols() - matrix::rank(&here);
    let factors = matrix::invariant_factors(&above);
    let rank = nullity - factors.len();
    let torsion: Vec<Int> = factors.into_iter().filter(|d| !d.is_one()).collect();
    HomologyGroup { rank, torsion }
}

/// Relative homology of `u` against `v`: relative cycles modulo the lattice
/// spanned by boundaries landing in the span of `u` together with chains on
/// the cells of `u` whose offprint already sits inside `v`.
pub fn relative_homology(
    s: &Script,
    u: &BTreeSet<CellId>,
    v: &BTreeSet<CellId>,
) -> Result<HomologyGroup> {
    let cols = in_script_order(s, u)?;
    if cols.is_empty() {
        return Ok(HomologyGroup::trivial());
    }
    let k = cols[0].dim;
    let cycles = relative_cycles(s, u, v)?;
    if cycles.is_empty() {
        return Ok(HomologyGroup::trivial());
    }

    // generators of the quotient lattice, in u-coordinates
    let mut quotient_gens: Vec<Vec<Int>> = Vec::new();
    let coord = |chain: &Chain| -> Vec<Int> {
        cols.iter().map(|c| chain.coeff(c)).collect()
    };

    // boundaries of (k+1)-chains whose boundary is supported in u
    let all_up: BTreeSet<CellId> = s.cells_of_dim(k + 1).iter().cloned().collect();
    if !all_up.is_empty() {
        for w in relative_cycles(s, &all_up, u)? {
            let b = s.boundary_of_chain(&w).expect("cells exist");
            if !b.is_zero() {
                quotient_gens.push(coord(&b));
            }
        }
    }
    // cells of u whose whole offprint lies in v
    for c in &cols {
        let row = s.offprint_row(c)?;
        if row.is_subset(v) {
            let mut e = vec![Int::zero(); cols.len()];
            let idx = cols.iter().position(|x| x == c).unwrap();
            e[idx] = Int::one();
            quotient_gens.push(e);
        }
    }

    // express the quotient generators in the cycle basis and take the cokernel
    let z = cycles.len();
    let mut zb = IntMatrix::zero(cols.len(), z);
    for (j, chain) in cycles.iter().enumerate() {
        for (i, val) in coord(chain).into_iter().enumerate() {
            zb.set(i, j, val);
        }
    }
    let zb_snf = matrix::smith_normal_form(&zb);
    let mut x = IntMatrix::zero(z, quotient_gens.len());
    for (j, gen) in quotient_gens.iter().enumerate() {
        let sol = matrix::solve_exact(&zb_snf, gen).ok_or_else(|| {
            Error::ComplexViolation("quotient generator escapes the cycle lattice".into())
        })?;
        for (i, val) in sol.into_iter().enumerate() {
            x.set(i, j, val);
        }
    }
    let factors = matrix::invariant_factors(&x);
    let rank = z - factors.len();
    let torsion: Vec<Int> = factors.into_iter().filter(|d| !d.is_one()).collect();
    Ok(HomologyGroup { rank, torsion })
}

/// Euler characteristic from cell counts (accumulator level excluded).
pub fn euler_characteristic(s: &Script) -> i64 {
    let mut chi: i64 = 0;
    for dim in s.dims() {
        let n = s.cells_of_dim(dim).len() as i64;
        if (dim - s.acc_dim()).rem_euclid(2) == 1 {
            chi += n;
        } else {
            chi -= n;
        }
    }
    // normalize so dimension 0 counts positively for ordinary scripts
    if (0 - s.acc_dim()).rem_euclid(2) == 1 {
        chi
    } else {
        -chi
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::cell::int;
    use crate::script::ScriptBuilder;

    fn torus() -> Script {
        catalog::get("torus").unwrap().script
    }

    #[test]
    fn torus_a0_is_the_all_ones_row() {
        let m = boundary_matrix(&torus(), 0);
        assert_eq!((m.rows(), m.cols()), (1, 4));
        for j in 0..4 {
            assert_eq!(m.get(0, j), int(1));
        }
    }

    #[test]
    fn torus_a3_is_the_all_ones_column() {
        let m = boundary_matrix(&torus(), 3);
        assert_eq!((m.rows(), m.cols()), (4, 1));
        for i in 0..4 {
            assert_eq!(m.get(i, 0), int(1));
        }
    }

    #[test]
    fn moebius_a2_matches_the_published_table() {
        let moebius = catalog::get("moebius").unwrap().script;
        let m = boundary_matrix(&moebius, 2);
        let expected = IntMatrix::from_rows(vec![
            vec![-1, -1],
            vec![1, -1],
            vec![1, 0],
            vec![0, 1],
            vec![-1, 0],
            vec![0, -1],
        ]);
        assert_eq!(m.get(0, 0), expected.get(0, 0));
        for i in 0..6 {
            for j in 0..2 {
                assert_eq!(m.get(i, j), expected.get(i, j), "at ({i},{j})");
            }
        }
    }

    #[test]
    fn torus_a1_has_unit_invariant_factors() {
        let m = boundary_matrix(&torus(), 1);
        let factors = matrix::invariant_factors(&m);
        assert_eq!(factors, vec![int(1), int(1), int(1)]);
    }

    #[test]
    fn torus_a2_kernel_is_the_full_face_sum() {
        let m = boundary_matrix(&torus(), 2);
        let basis = matrix::kernel_basis(&m);
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0], vec![int(1), int(1), int(1), int(1)]);
    }

    #[test]
    fn klein_a2_has_no_integer_kernel() {
        let klein = catalog::get("klein").unwrap().script;
        let m = boundary_matrix(&klein, 2);
        assert!(matrix::kernel_basis(&m).is_empty());
    }

    #[test]
    fn torus_h1_is_z_squared() {
        assert_eq!(homology(&torus(), 1), HomologyGroup::free(2));
    }

    #[test]
    fn klein_h1_is_z_plus_z2() {
        let klein = catalog::get("klein").unwrap().script;
        let h = homology(&klein, 1);
        assert_eq!(h.rank, 1);
        assert_eq!(h.torsion, vec![int(2)]);
        assert_eq!(format!("{h}"), "Z + Z/2");
    }

    #[test]
    fn interval_h0_is_trivial() {
        let mut b = ScriptBuilder::new("interval");
        b.points(["p", "q"]);
        b.cell(1, "l", [(1, "p"), (-1, "q")]);
        let s = b.build();
        assert!(homology(&s, 0).is_trivial());
    }

    #[test]
    fn relative_cycles_of_a_simple_curve_have_rank_one() {
        // p0 -l1-> p1 -l2-> p2 -l3-> p3
        let mut b = ScriptBuilder::new("curve");
        b.points(["p0", "p1", "p2", "p3"]);
        b.cell(1, "l1", [(1, "p1"), (-1, "p0")]);
        b.cell(1, "l2", [(1, "p2"), (-1, "p1")]);
        b.cell(1, "l3", [(1, "p3"), (-1, "p2")]);
        let s = b.build();
        let u: BTreeSet<_> = ["l1", "l2", "l3"]
            .iter()
            .map(|n| CellId::new(1, *n))
            .collect();
        let v: BTreeSet<_> = [CellId::new(0, "p0"), CellId::new(0, "p3")].into();
        let basis = relative_cycles(&s, &u, &v).unwrap();
        assert_eq!(basis.len(), 1);
        let gen = &basis[0];
        for l in ["l1", "l2", "l3"] {
            assert_eq!(
                num_traits::Signed::abs(&gen.coeff(&CellId::new(1, l))),
                int(1)
            );
        }
    }

    #[test]
    fn relative_cycles_with_full_v_are_unconstrained() {
        let torus = torus();
        let u: BTreeSet<_> = torus.cells_of_dim(1).iter().cloned().collect();
        let v: BTreeSet<_> = torus.cells_of_dim(0).iter().cloned().collect();
        let basis = relative_cycles(&torus, &u, &v).unwrap();
        assert_eq!(basis.len(), u.len());
    }

    #[test]
    fn relative_cycles_with_empty_v_are_absolute_cycles() {
        let torus = torus();
        let u: BTreeSet<_> = torus.cells_of_dim(2).iter().cloned().collect();
        let rel = relative_cycles(&torus, &u, &BTreeSet::new()).unwrap();
        let abs = cycle_basis(&torus, &u).unwrap();
        assert_eq!(rel, abs);
    }

    #[test]
    fn relative_homology_of_empty_u_is_trivial() {
        let torus = torus();
        let h = relative_homology(&torus, &BTreeSet::new(), &BTreeSet::new()).unwrap();
        assert!(h.is_trivial());
    }

    #[test]
    fn local_homology_at_a_tight_cell_is_trivial() {
        let torus = torus();
        let u = torus.offprint_row(&CellId::new(2, "v1")).unwrap();
        let h = relative_homology(&torus, &u, &BTreeSet::new()).unwrap();
        assert!(h.is_trivial(), "got {h}");
    }

    #[test]
    fn lie_sphere_offprint_of_the_interval_face_has_h1_z() {
        let lie = catalog::get("lie-sphere").unwrap().script;
        let u = lie.offprint_row(&CellId::new(2, "(l1,I)")).unwrap();
        let h = relative_homology(&lie, &u, &BTreeSet::new()).unwrap();
        assert_eq!(h, HomologyGroup::free(1));
    }

    #[test]
    fn accumulator_level_homology_vanishes_for_ordinary_scripts() {
        assert!(homology(&torus(), -1).is_trivial());
    }
}
