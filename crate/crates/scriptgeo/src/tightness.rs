//! Tightness predicates: when a cycle module has a single generator, when a
//! cell realizes it, what tight low-dimensional cells look like, and the
//! assignment solver that rebuilds boundary coefficients from offprint rows.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Signed, Zero};

use crate::cell::{CellId, Chain, Int};
use crate::error::{Error, Result};
use crate::homology::{cycle_basis, relative_cycles};
use crate::script::Script;

/// A set of k-cells is set-tight when its cycle module has exactly one
/// generator; the primitive generator is returned.
pub fn is_s_tight(s: &Script, cells: &BTreeSet<CellId>) -> Result<Option<Chain>> {
    let basis = cycle_basis(s, cells)?;
    if basis.len() == 1 {
        Ok(Some(basis.into_iter().next().unwrap()))
    } else {
        Ok(None)
    }
}

/// A cell is tight when the cycles of its offprint row form a rank-one
/// module generated by the cell's own boundary.
pub fn is_cell_tight(s: &Script, cell: &CellId) -> Result<bool> {
    let boundary = s.boundary_of(cell)?;
    if boundary.is_zero() {
        return Ok(false);
    }
    let row = boundary.support();
    match is_s_tight(s, &row)? {
        None => Ok(false),
        Some(generator) => Ok(boundary == generator || boundary == generator.neg()),
    }
}

/// A chain is cycle-tight when it generates the relative cycle module of
/// its support against its boundary support.
pub fn is_c_tight(s: &Script, chain: &Chain) -> Result<bool> {
    if chain.is_zero() {
        return Ok(false);
    }
    if !chain.content().is_one() {
        return Ok(false);
    }
    let u = chain.support();
    let v = s.boundary_of_chain(chain)?.support();
    let basis = relative_cycles(s, &u, &v)?;
    if basis.len() != 1 {
        return Ok(false);
    }
    let generator = &basis[0];
    Ok(chain == generator || *chain == generator.neg())
}

/// Verdict for one cell, with the structure recovered from the tight cases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CellVerdict {
    Tight(TightStructure),
    /// Zero boundary: removed by minimization, never tight.
    Pathological,
    NotTight { cycle_rank: usize },
}

impl CellVerdict {
    pub fn is_tight(&self) -> bool {
        matches!(self, CellVerdict::Tight(_))
    }
}

/// What a tight cell's boundary looks like in low dimensions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TightStructure {
    /// A tight line runs from one point to another: boundary q - p.
    Segment { from: CellId, to: CellId },
    /// A tight face is bounded by an n-polygon, listed in traversal order.
    Polygon(Vec<CellId>),
    /// No structural annotation applies (points, higher cells).
    Plain,
}

#[derive(Debug, Clone)]
pub struct TightnessReport {
    pub verdicts: BTreeMap<CellId, CellVerdict>,
    pub script_tight: bool,
}

impl TightnessReport {
    pub fn failures(&self) -> Vec<&CellId> {
        self.verdicts
            .iter()
            .filter(|(_, v)| !v.is_tight())
            .map(|(c, _)| c)
            .collect()
    }
}

/// Runs the per-cell tightness check over the whole script and annotates
/// tight lines with their endpoints and tight faces with their polygon
/// traversal. A tight cell whose promised structure cannot be recovered is
/// an internal inconsistency and panics.
pub fn script_tightness(s: &Script) -> TightnessReport {
    let mut verdicts = BTreeMap::new();
    let mut script_tight = true;
    for cell in s.all_cells() {
        let boundary = s.boundary_of(cell).expect("iterating script cells");
        let verdict = if boundary.is_zero() {
            CellVerdict::Pathological
        } else if is_cell_tight(s, cell).expect("cell exists") {
            let structure = if cell.dim - s.acc_dim() == 2 {
                // one level above the points: a segment
                segment_structure(s, &boundary)
                    .expect("tight line must run between two points")
            } else if cell.dim - s.acc_dim() == 3 {
                // faces: recover the polygon walk
                TightStructure::Polygon(
                    polygon_order(s, &boundary)
                        .expect("tight face boundary must close into a polygon"),
                )
            } else {
                TightStructure::Plain
            };
            CellVerdict::Tight(structure)
        } else {
            let rank = cycle_basis(s, &boundary.support())
                .expect("support cells exist")
                .len();
            CellVerdict::NotTight { cycle_rank: rank }
        };
        if !verdict.is_tight() {
            script_tight = false;
        }
        verdicts.insert(cell.clone(), verdict);
    }
    TightnessReport { verdicts, script_tight }
}

/// A script is tight exactly when each of its cells is.
pub fn is_tight(s: &Script) -> bool {
    script_tightness(s).script_tight
}

/// Tight and unitary.
pub fn is_geoscript(s: &Script) -> bool {
    s.is_unitary() && is_tight(s)
}

fn segment_structure(s: &Script, boundary: &Chain) -> Option<TightStructure> {
    let _ = s;
    let mut from = None;
    let mut to = None;
    for (cell, coeff) in boundary.iter() {
        if coeff.is_one() && to.is_none() {
            to = Some(cell.clone());
        } else if (-coeff).is_one() && from.is_none() {
            from = Some(cell.clone());
        } else {
            return None;
        }
    }
    Some(TightStructure::Segment { from: from?, to: to? })
}

/// Walks the boundary of a face: every coefficient must be a unit, every
/// traversal step must continue at the head of the previous oriented line,
/// and the walk must use each line exactly once before closing.
pub fn polygon_order(s: &Script, boundary: &Chain) -> Option<Vec<CellId>> {
    let mut oriented: BTreeMap<CellId, (CellId, CellId)> = BTreeMap::new();
    for (line, coeff) in boundary.iter() {
        let b = s.boundary_of(line).ok()?;
        let seg = match segment_structure(s, &b)? {
            TightStructure::Segment { from, to } => (from, to),
            _ => return None,
        };
        if coeff.is_one() {
            oriented.insert(line.clone(), seg);
        } else if (-coeff.clone()).is_one() {
            oriented.insert(line.clone(), (seg.1, seg.0));
        } else {
            return None;
        }
    }
    if oriented.len() < 2 {
        return None;
    }
    let (start_line, (start_tail, mut head)) = oriented.iter().next().map(|(l, s)| (l.clone(), s.clone()))?;
    let mut order = vec![start_line.clone()];
    let mut used: BTreeSet<CellId> = [start_line].into();
    while used.len() < oriented.len() {
        let mut next = None;
        for (line, (tail, to)) in &oriented {
            if used.contains(line) || *tail != head {
                continue;
            }
            if next.is_some() {
                return None; // branching
            }
            next = Some((line.clone(), to.clone()));
        }
        let (line, to) = next?;
        used.insert(line.clone());
        order.push(line);
        head = to;
    }
    (head == start_tail).then_some(order)
}

/// Solves the assignment problem: given offprint rows for new cells one
/// dimension above the script's current top, recover the unique (up to
/// sign) primitive coefficients making each new boundary a cycle. The first
/// listed row cell carrying a nonzero coefficient is normalized positive.
pub fn solve_assignment(
    s: &Script,
    rows: &[(String, Vec<CellId>)],
) -> Result<Script> {
    let mut out = s.clone();
    for (name, row) in rows {
        if row.is_empty() {
            return Err(Error::NoSolution { row: name.clone() });
        }
        for c in row {
            if !s.has_cell(c) {
                return Err(Error::UnknownCell(c.clone()));
            }
        }
        let dim = row[0].dim;
        if row.iter().any(|c| c.dim != dim) {
            return Err(Error::BadParameter(format!(
                "offprint row `{name}` spans several dimensions"
            )));
        }
        let set: BTreeSet<CellId> = row.iter().cloned().collect();
        let basis = cycle_basis(s, &set)?;
        match basis.len() {
            0 => return Err(Error::NoSolution { row: name.clone() }),
            1 => {}
            rank => return Err(Error::NotTight { row: name.clone(), rank }),
        }
        let mut generator = basis.into_iter().next().unwrap();
        if let Some(first) = row.iter().find(|c| !generator.coeff(c).is_zero()) {
            if generator.coeff(first).is_negative() {
                generator = generator.neg();
            }
        }
        out.insert_cell(CellId::new(dim + 1, name.clone()), generator)?;
    }
    Ok(out)
}

/// Convenience: rebuild a script degree by degree from its own offprint and
/// point level, the way the skeleton reconstruction works.
pub fn reconstruct_from_offprint(s: &Script) -> Result<Script> {
    let bottom = s.acc_dim() + 1;
    let mut partial = Script::new(format!("{}-reassigned", s.name()));
    partial.set_has_accumulator(s.has_accumulator());
    partial.set_acc_dim(s.acc_dim());
    for cell in s.cells_of_dim(bottom) {
        partial.insert_cell(cell.clone(), s.boundary_of(cell)?)?;
    }
    let top = s.top_dim().unwrap_or(bottom);
    let mut k = bottom + 1;
    while k <= top {
        let rows: Vec<(String, Vec<CellId>)> = s
            .cells_of_dim(k)
            .iter()
            .map(|c| {
                let row: Vec<CellId> = {
                    // keep the stored cell order for determinism
                    let supp = s.boundary_of(c).unwrap().support();
                    s.cells_of_dim(k - 1)
                        .iter()
                        .filter(|x| supp.contains(*x))
                        .cloned()
                        .collect()
                };
                (c.name.clone(), row)
            })
            .collect();
        partial = solve_assignment(&partial, &rows)?;
        k += 1;
    }
    Ok(partial)
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
    fn face_set_of_the_torus_is_s_tight() {
        let s = torus();
        let u: BTreeSet<_> = s.cells_of_dim(2).iter().cloned().collect();
        let gen = is_s_tight(&s, &u).unwrap().expect("tight");
        for v in s.cells_of_dim(2) {
            assert_eq!(gen.coeff(v), int(1));
        }
    }

    #[test]
    fn three_loose_points_are_not_s_tight() {
        let mut b = ScriptBuilder::new("pts");
        b.points(["p", "q", "r"]);
        let s = b.build();
        let u: BTreeSet<_> = s.cells_of_dim(0).iter().cloned().collect();
        assert!(is_s_tight(&s, &u).unwrap().is_none());
        assert!(is_s_tight(&s, &BTreeSet::new()).unwrap().is_none());
    }

    #[test]
    fn every_torus_cell_is_tight() {
        let s = torus();
        for c in s.all_cells() {
            assert!(is_cell_tight(&s, c).unwrap(), "cell {c}");
        }
    }

    #[test]
    fn lie_sphere_interval_faces_are_not_tight() {
        let s = catalog::get("lie-sphere").unwrap().script;
        assert!(!is_cell_tight(&s, &CellId::new(2, "(l1,I)")).unwrap());
        assert!(!is_cell_tight(&s, &CellId::new(2, "(l2,I)")).unwrap());
        let report = script_tightness(&s);
        assert!(!report.script_tight);
        // the interval faces carry two independent cycles; the volumes above
        // them inherit the defect, every lower cell is fine
        let failures: Vec<String> = report
            .failures()
            .iter()
            .map(|c| c.name.clone())
            .collect();
        assert_eq!(failures, ["(l1,I)", "(l2,I)", "(v1,I)", "(v2,I)"]);
        let face_failures: Vec<String> = report
            .failures()
            .iter()
            .filter(|c| c.dim == 2)
            .map(|c| c.name.clone())
            .collect();
        assert_eq!(face_failures, ["(l1,I)", "(l2,I)"]);
    }

    #[test]
    fn extended_klein_cycle_is_c_tight_but_not_unitary() {
        let s = catalog::get("klein-extended").unwrap().script;
        let mut chain = Chain::zero(2);
        for v in ["v1", "v2", "v3", "v4"] {
            chain.add_term(CellId::new(2, v), int(1));
        }
        chain.add_term(CellId::new(2, "v5"), int(2));
        assert!(is_c_tight(&s, &chain).unwrap());
        assert!(!chain.is_unitary());
    }

    #[test]
    fn simple_curves_are_c_tight_and_disjoint_cycles_are_not() {
        let mut b = ScriptBuilder::new("cyl");
        b.points(["p1", "p2", "q1", "q2"]);
        b.cell(1, "a1", [(1, "p2"), (-1, "p1")]);
        b.cell(1, "a2", [(1, "p1"), (-1, "p2")]);
        b.cell(1, "b1", [(1, "q2"), (-1, "q1")]);
        b.cell(1, "b2", [(1, "q1"), (-1, "q2")]);
        let s = b.build();
        let curve = Chain::from_terms(
            1,
            [(CellId::new(1, "a1"), int(1))],
        );
        assert!(is_c_tight(&s, &curve).unwrap());
        let two_circles = Chain::from_terms(
            1,
            [
                (CellId::new(1, "a1"), int(1)),
                (CellId::new(1, "a2"), int(1)),
                (CellId::new(1, "b1"), int(1)),
                (CellId::new(1, "b2"), int(1)),
            ],
        );
        assert!(!is_c_tight(&s, &two_circles).unwrap());
    }

    #[test]
    fn torus_report_annotates_faces_as_squares() {
        let report = script_tightness(&torus());
        assert!(report.script_tight);
        for v in ["v1", "v2", "v3", "v4"] {
            match &report.verdicts[&CellId::new(2, v)] {
                CellVerdict::Tight(TightStructure::Polygon(order)) => {
                    assert_eq!(order.len(), 4)
                }
                other => panic!("face {v}: {other:?}"),
            }
        }
        match &report.verdicts[&CellId::new(1, "l1")] {
            CellVerdict::Tight(TightStructure::Segment { from, to }) => {
                assert_eq!(from.name, "p0");
                assert_eq!(to.name, "p1");
            }
            other => panic!("line: {other:?}"),
        }
    }

    #[test]
    fn klein_is_tight_but_not_orientable_material() {
        let report = script_tightness(&catalog::get("klein").unwrap().script);
        assert!(report.script_tight);
    }

    #[test]
    fn geoscript_examples() {
        assert!(is_geoscript(&torus()));
        let extended = catalog::get("klein-extended-3cell").unwrap().script;
        assert!(!is_geoscript(&extended));
        assert!(is_geoscript(&Script::new("empty")));
    }

    #[test]
    fn assignment_recovers_the_moebius_cap() {
        let s = catalog::get("moebius").unwrap().script;
        let row: Vec<CellId> = ["l3", "l4", "l5", "l6"]
            .iter()
            .map(|n| CellId::new(1, *n))
            .collect();
        let extended = solve_assignment(&s, &[("v3".into(), row)]).unwrap();
        let dv3 = extended.boundary_of(&CellId::new(2, "v3")).unwrap();
        for l in ["l3", "l4", "l5", "l6"] {
            assert_eq!(dv3.coeff(&CellId::new(1, l)), int(1), "coefficient of {l}");
        }
        let expected = catalog::get("projective-from-moebius").unwrap().script;
        assert!(extended.same_content(&expected));
    }

    #[test]
    fn assignment_over_a_single_point_has_no_solution() {
        let mut b = ScriptBuilder::new("one-point");
        b.point("p");
        let s = b.build();
        let err = solve_assignment(&s, &[("l".into(), vec![CellId::new(0, "p")])]);
        assert!(matches!(err, Err(Error::NoSolution { .. })));
    }

    #[test]
    fn torus_reconstruction_from_its_own_offprint_validates() {
        let s = torus();
        let rebuilt = reconstruct_from_offprint(&s).unwrap();
        assert!(rebuilt.validate().is_valid());
        assert_eq!(rebuilt.cell_count(), s.cell_count());
        for c in s.all_cells() {
            assert_eq!(
                rebuilt.offprint_row(c).unwrap(),
                s.offprint_row(c).unwrap(),
                "offprint row of {c}"
            );
        }
    }

    #[test]
    fn tightness_matches_trivial_local_homology() {
        // a cell with nonzero boundary is tight exactly when the subscript
        // it generates has trivial homology one level down
        for id in ["torus", "klein", "moebius", "lie-sphere", "pentagon-rp2"] {
            let s = catalog::get(id).unwrap().script;
            for c in s.all_cells() {
                if s.boundary_of(c).unwrap().is_zero() {
                    continue;
                }
                let sub = s
                    .subscript_generated_by(&[c.clone()].into())
                    .unwrap();
                let h = crate::homology::homology(&sub, c.dim - 1);
                let tight = is_cell_tight(&s, c).unwrap();
                assert_eq!(
                    tight,
                    h.is_trivial(),
                    "{id}/{c}: tight={tight} but local H = {h}"
                );
            }
        }
    }
}
