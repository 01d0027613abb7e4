//! The central [`Script`] type: a finite chain complex of free integer
//! modules with an accumulator level, plus the structural operations that do
//! not need linear algebra (validation, offprint, subscripts, relabelling,
//! ring reduction).

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::cell::{int, CellId, Chain, Int};
use crate::error::{Error, Result};

/// A graded family of cells with one boundary chain per cell.
///
/// The accumulator module is not stored as a cell. When `has_accumulator` is
/// true, the boundary chains of cells at dimension `acc_dim + 1` may carry a
/// term on the reserved pseudo-cell [`CellId::accumulator`]; everything else
/// (validation, matrices, offprints, duals) treats that pseudo-cell
/// uniformly. Truncated complexes are the same type with
/// `has_accumulator == false`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Script {
    name: String,
    /// Cells per dimension in insertion order; this order fixes every matrix
    /// assembly and printout.
    cells: BTreeMap<i32, Vec<CellId>>,
    /// Boundary chain for every cell (possibly zero).
    boundary: HashMap<CellId, Chain>,
    has_accumulator: bool,
    /// Grading index of the accumulator module, usually -1. Simplicial
    /// products of l factors put it at -l.
    acc_dim: i32,
    /// When set, the script lives over Z/nZ with canonical representatives.
    modulus: Option<Int>,
}

impl Script {
    pub fn new(name: impl Into<String>) -> Self {
        Script {
            name: name.into(),
            cells: BTreeMap::new(),
            boundary: HashMap::new(),
            has_accumulator: true,
            acc_dim: -1,
            modulus: None,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn has_accumulator(&self) -> bool {
        self.has_accumulator
    }

    pub fn set_has_accumulator(&mut self, v: bool) {
        self.has_accumulator = v;
    }

    pub fn acc_dim(&self) -> i32 {
        self.acc_dim
    }

    pub fn set_acc_dim(&mut self, dim: i32) {
        self.acc_dim = dim;
    }

    pub fn modulus(&self) -> Option<&Int> {
        self.modulus.as_ref()
    }

    /// The pseudo-cell carrying the accumulator generator in chains.
    pub fn accumulator_id(&self) -> CellId {
        CellId::accumulator(self.acc_dim)
    }

    /// Dimensions that hold at least one cell, ascending.
    pub fn dims(&self) -> Vec<i32> {
        self.cells
            .iter()
            .filter(|(_, v)| !v.is_empty())
            .map(|(d, _)| *d)
            .collect()
    }

    pub fn top_dim(&self) -> Option<i32> {
        self.dims().last().copied()
    }

    pub fn cells_of_dim(&self, dim: i32) -> &[CellId] {
        self.cells.get(&dim).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn all_cells(&self) -> impl Iterator<Item = &CellId> {
        self.cells.values().flatten()
    }

    pub fn cell_count(&self) -> usize {
        self.cells.values().map(Vec::len).sum()
    }

    pub fn has_cell(&self, cell: &CellId) -> bool {
        self.boundary.contains_key(cell)
    }

    pub fn find_by_name(&self, name: &str) -> Vec<CellId> {
        self.all_cells().filter(|c| c.name == name).cloned().collect()
    }

    /// Boundary chain of a cell, or of the accumulator pseudo-cell (zero).
    pub fn boundary_of(&self, cell: &CellId) -> Result<Chain> {
        if *cell == self.accumulator_id() {
            return Ok(Chain::zero(self.acc_dim - 1));
        }
        self.boundary
            .get(cell)
            .cloned()
            .ok_or_else(|| Error::UnknownCell(cell.clone()))
    }

    /// Accumulator coefficient of a bottom-level cell (`0` when absent).
    pub fn acc_coeff(&self, cell: &CellId) -> Int {
        self.boundary
            .get(cell)
            .map(|ch| ch.coeff(&self.accumulator_id()))
            .unwrap_or_else(Int::zero)
    }

    /// Extends the boundary map linearly to a chain.
    pub fn boundary_of_chain(&self, chain: &Chain) -> Result<Chain> {
        let mut out = Chain::zero(chain.dim() - 1);
        for (cell, coeff) in chain.iter() {
            let b = self.boundary_of(cell)?;
            out = out.add(&b.scale(coeff));
        }
        if let Some(n) = &self.modulus {
            out = out.reduce_mod(n);
        }
        Ok(out)
    }

    /// Inserts a cell with its boundary chain. The chain dimension must be
    /// `cell.dim - 1`; references may dangle (validation reports them).
    pub fn insert_cell(&mut self, cell: CellId, boundary: Chain) -> Result<()> {
        if cell.is_accumulator() && cell.dim == self.acc_dim {
            return Err(Error::BadParameter(format!(
                "`{cell}` collides with the accumulator pseudo-cell"
            )));
        }
        if self.has_cell(&cell) {
            return Err(Error::DuplicateCell(cell));
        }
        debug_assert_eq!(boundary.dim(), cell.dim - 1);
        self.cells.entry(cell.dim).or_default().push(cell.clone());
        self.boundary.insert(cell, boundary);
        Ok(())
    }

    /// Replaces the boundary of an existing cell.
    pub fn set_boundary(&mut self, cell: &CellId, boundary: Chain) -> Result<()> {
        if !self.has_cell(cell) {
            return Err(Error::UnknownCell(cell.clone()));
        }
        debug_assert_eq!(boundary.dim(), cell.dim - 1);
        self.boundary.insert(cell.clone(), boundary);
        Ok(())
    }

    /// Removes a cell and its boundary row. Occurrences of the cell in
    /// higher boundaries are left to the caller.
    pub fn delete_cell(&mut self, cell: &CellId) -> Result<Chain> {
        let old = self
            .boundary
            .remove(cell)
            .ok_or_else(|| Error::UnknownCell(cell.clone()))?;
        if let Some(list) = self.cells.get_mut(&cell.dim) {
            list.retain(|c| c != cell);
            if list.is_empty() {
                self.cells.remove(&cell.dim);
            }
        }
        Ok(old)
    }

    /// Cells one dimension up whose boundary references `cell`, with the
    /// carried coefficient.
    pub fn occurrences_above(&self, cell: &CellId) -> Vec<(CellId, Int)> {
        let mut out = Vec::new();
        for up in self.cells_of_dim(cell.dim + 1) {
            let coeff = self.boundary[up].coeff(cell);
            if !coeff.is_zero() {
                out.push((up.clone(), coeff));
            }
        }
        out
    }

    /// Support of the boundary of a cell: the paper's per-cell offprint row.
    pub fn offprint_row(&self, cell: &CellId) -> Result<BTreeSet<CellId>> {
        Ok(self.boundary_of(cell)?.support())
    }

    // ---- validation --------------------------------------------------

    /// Checks the complex axioms and reports every violation.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        for cell in self.all_cells() {
            let b = &self.boundary[cell];
            for (target, coeff) in b.iter() {
                if coeff.is_zero() {
                    violations.push(Violation::ZeroCoefficientTerm {
                        cell: cell.clone(),
                        term: target.clone(),
                    });
                }
                if let Some(n) = &self.modulus {
                    if coeff.is_negative() || coeff >= n {
                        violations.push(Violation::NonCanonicalCoefficient {
                            cell: cell.clone(),
                            term: target.clone(),
                            coeff: coeff.clone(),
                        });
                    }
                }
                if target.is_accumulator() && target.dim == self.acc_dim {
                    if !self.has_accumulator {
                        violations.push(Violation::DanglingReference {
                            cell: cell.clone(),
                            missing: target.clone(),
                        });
                    }
                    continue;
                }
                if !self.has_cell(target) {
                    violations.push(Violation::DanglingReference {
                        cell: cell.clone(),
                        missing: target.clone(),
                    });
                }
            }
            // d(dC) over the stored chains; dangling targets contribute zero.
            let mut sq = Chain::zero(cell.dim - 2);
            for (target, coeff) in b.iter() {
                if let Ok(tb) = self.boundary_of(target) {
                    sq = sq.add(&tb.scale(coeff));
                }
            }
            if let Some(n) = &self.modulus {
                sq = sq.reduce_mod(n);
            }
            if !sq.is_zero() {
                violations.push(Violation::BoundarySquareNonzero {
                    cell: cell.clone(),
                    residual: sq,
                });
            }
        }
        ValidationReport { violations }
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_valid()
    }

    // ---- offprint and subscripts --------------------------------------

    /// The geometrical offprint: every cell mapped to the support of its
    /// boundary.
    pub fn offprint(&self) -> Offprint {
        let mut map = BTreeMap::new();
        for cell in self.all_cells() {
            map.insert(cell.clone(), self.boundary[cell].support());
        }
        Offprint { map }
    }

    /// The subscript generated by a set of same-dimension seed cells:
    /// iterated offprint closure with boundaries restricted unchanged.
    pub fn subscript_generated_by(&self, seed: &BTreeSet<CellId>) -> Result<Script> {
        for c in seed {
            if !self.has_cell(c) {
                return Err(Error::UnknownCell(c.clone()));
            }
        }
        if let Some(first) = seed.iter().next() {
            if seed.iter().any(|c| c.dim != first.dim) {
                return Err(Error::BadParameter(
                    "seed cells must share one dimension".into(),
                ));
            }
        }
        let mut keep: BTreeSet<CellId> = seed.clone();
        let mut frontier: BTreeSet<CellId> = seed.clone();
        while !frontier.is_empty() {
            let mut next = BTreeSet::new();
            for cell in &frontier {
                for target in self.boundary[cell].support() {
                    if target.is_accumulator() && target.dim == self.acc_dim {
                        continue;
                    }
                    if keep.insert(target.clone()) {
                        next.insert(target);
                    }
                }
            }
            frontier = next;
        }
        let mut out = Script::new(format!("{}-sub", self.name));
        out.has_accumulator = self.has_accumulator;
        out.acc_dim = self.acc_dim;
        out.modulus = self.modulus.clone();
        for dim_cells in self.cells.values() {
            for cell in dim_cells {
                if keep.contains(cell) {
                    out.insert_cell(cell.clone(), self.boundary[cell].clone())?;
                }
            }
        }
        Ok(out)
    }

    // ---- equivalence moves --------------------------------------------

    /// Replaces each flipped cell C by -C: its boundary is negated and every
    /// occurrence of it in a higher boundary changes sign. Offprints are
    /// untouched by construction.
    pub fn relabel_equivalent(&self, flips: &BTreeMap<CellId, i8>) -> Result<Script> {
        for (cell, sign) in flips {
            if !self.has_cell(cell) {
                return Err(Error::UnknownCell(cell.clone()));
            }
            if *sign != 1 && *sign != -1 {
                return Err(Error::BadParameter(format!(
                    "flip for `{cell}` must be +1 or -1"
                )));
            }
        }
        let sign_of = |cell: &CellId| -> Int {
            match flips.get(cell) {
                Some(-1) => int(-1),
                _ => int(1),
            }
        };
        let mut out = self.clone();
        for cell in self.all_cells() {
            let own = sign_of(cell);
            let mut chain = Chain::zero(cell.dim - 1);
            for (target, coeff) in self.boundary[cell].iter() {
                chain.add_term(target.clone(), coeff * &own * sign_of(target));
            }
            if let Some(n) = &self.modulus {
                chain = chain.reduce_mod(n);
            }
            out.boundary.insert(cell.clone(), chain);
        }
        Ok(out)
    }

    /// Renames cells wholesale; the map must be injective per dimension and
    /// cover only existing cells. Order is preserved.
    pub fn rename_cells(&self, names: &BTreeMap<CellId, String>) -> Result<Script> {
        for cell in names.keys() {
            if !self.has_cell(cell) {
                return Err(Error::UnknownCell(cell.clone()));
            }
        }
        let renamed = |cell: &CellId| -> CellId {
            if cell.is_accumulator() && cell.dim == self.acc_dim {
                return cell.clone();
            }
            match names.get(cell) {
                Some(n) => CellId::new(cell.dim, n.clone()),
                None => cell.clone(),
            }
        };
        let mut out = Script::new(self.name.clone());
        out.has_accumulator = self.has_accumulator;
        out.acc_dim = self.acc_dim;
        out.modulus = self.modulus.clone();
        for dim_cells in self.cells.values() {
            for cell in dim_cells {
                let chain = Chain::from_terms(
                    cell.dim - 1,
                    self.boundary[cell]
                        .iter()
                        .map(|(t, v)| (renamed(t), v.clone())),
                );
                out.insert_cell(renamed(cell), chain)?;
            }
        }
        Ok(out)
    }

    /// Shifts every grading index by `delta`, moving the accumulator level
    /// along with the cells.
    pub fn shift_dims(&self, delta: i32) -> Script {
        let shift = |cell: &CellId| CellId::new(cell.dim + delta, cell.name.clone());
        let mut out = Script::new(self.name.clone());
        out.has_accumulator = self.has_accumulator;
        out.acc_dim = self.acc_dim + delta;
        out.modulus = self.modulus.clone();
        for dim_cells in self.cells.values() {
            for cell in dim_cells {
                let chain = Chain::from_terms(
                    cell.dim - 1 + delta,
                    self.boundary[cell]
                        .iter()
                        .map(|(t, v)| (shift(t), v.clone())),
                );
                out.insert_cell(shift(cell), chain).expect("shift keeps names");
            }
        }
        out
    }

    // ---- predicates ----------------------------------------------------

    /// Every boundary coefficient, accumulator coefficients included, is
    /// plus or minus one. Over Z/nZ the units are 1 and n-1.
    pub fn is_unitary(&self) -> bool {
        match &self.modulus {
            None => self.all_cells().all(|c| self.boundary[c].is_unitary()),
            Some(n) => {
                let minus_one = n - 1;
                self.all_cells().all(|c| {
                    self.boundary[c]
                        .iter()
                        .all(|(_, v)| v.is_one() || *v == minus_one)
                })
            }
        }
    }

    /// No floating cell is referenced above, and every nonzero boundary has
    /// coefficient gcd one.
    pub fn is_minimal(&self) -> bool {
        for cell in self.all_cells() {
            let b = &self.boundary[cell];
            if b.is_zero() {
                if !self.occurrences_above(cell).is_empty() {
                    return false;
                }
            } else if !b.content().is_one() {
                return false;
            }
        }
        true
    }

    // ---- ring reduction -------------------------------------------------

    /// Projects the script onto Z/nZ with canonical representatives in
    /// 0..n-1. Accepts a script already reduced mod the same n (idempotent).
    pub fn reduce_mod(&self, n: u64) -> Result<Script> {
        if n < 2 {
            return Err(Error::BadParameter(format!("modulus {n} must be >= 2")));
        }
        let n_int = int(n as i64);
        if let Some(existing) = &self.modulus {
            if *existing != n_int {
                return Err(Error::BadParameter(format!(
                    "script is already over Z/{existing}Z"
                )));
            }
        }
        let mut out = self.clone();
        out.modulus = Some(n_int.clone());
        for cell in self.all_cells() {
            let reduced = self.boundary[cell].reduce_mod(&n_int);
            out.boundary.insert(cell.clone(), reduced);
        }
        Ok(out)
    }

    /// Ordered Dirac basis: the accumulator pseudo-cell (when present)
    /// followed by all cells in ascending dimension and stored order.
    pub fn dirac_basis(&self) -> Vec<CellId> {
        let mut basis = Vec::with_capacity(self.cell_count() + 1);
        if self.has_accumulator {
            basis.push(self.accumulator_id());
        }
        for dim_cells in self.cells.values() {
            basis.extend(dim_cells.iter().cloned());
        }
        basis
    }

    /// Order-insensitive comparison: same cell sets per dimension, same
    /// boundaries, same accumulator setup.
    pub fn same_content(&self, other: &Script) -> bool {
        if self.has_accumulator != other.has_accumulator
            || self.acc_dim != other.acc_dim
            || self.modulus != other.modulus
        {
            return false;
        }
        if self.cell_count() != other.cell_count() {
            return false;
        }
        self.all_cells()
            .all(|c| other.has_cell(c) && other.boundary[c] == self.boundary[c])
    }
}

/// A script that fails the complex axioms is data, not an error: the report
/// lists what is wrong.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// d(dC) != 0; the residual chain is attached.
    BoundarySquareNonzero { cell: CellId, residual: Chain },
    /// A boundary references a cell that does not exist.
    DanglingReference { cell: CellId, missing: CellId },
    /// A stored zero coefficient (canonical chains make this unreachable,
    /// but the report format covers it).
    ZeroCoefficientTerm { cell: CellId, term: CellId },
    /// Over Z/nZ, a coefficient outside 0..n-1.
    NonCanonicalCoefficient { cell: CellId, term: CellId, coeff: Int },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::BoundarySquareNonzero { cell, residual } => {
                write!(f, "dd{cell} = {residual} (expected 0)")
            }
            Violation::DanglingReference { cell, missing } => {
                write!(f, "boundary of {cell} references missing cell {missing}")
            }
            Violation::ZeroCoefficientTerm { cell, term } => {
                write!(f, "boundary of {cell} stores a zero coefficient on {term}")
            }
            Violation::NonCanonicalCoefficient { cell, term, coeff } => {
                write!(f, "coefficient {coeff} of {term} in d{cell} is not canonical")
            }
        }
    }
}

/// The geometrical offprint: cell -> support of its boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Offprint {
    pub map: BTreeMap<CellId, BTreeSet<CellId>>,
}

impl Offprint {
    pub fn row(&self, cell: &CellId) -> Option<&BTreeSet<CellId>> {
        self.map.get(cell)
    }
}

/// Incremental construction with the usual conventions: points carry
/// accumulator coefficient one unless overridden.
pub struct ScriptBuilder {
    script: Script,
}

impl ScriptBuilder {
    pub fn new(name: impl Into<String>) -> Self {
        ScriptBuilder { script: Script::new(name) }
    }

    pub fn truncated(mut self) -> Self {
        self.script.set_has_accumulator(false);
        self
    }

    /// Adds a point with accumulator coefficient one.
    pub fn point(&mut self, name: &str) -> &mut Self {
        self.point_acc(name, 1)
    }

    pub fn points<'a, I: IntoIterator<Item = &'a str>>(&mut self, names: I) -> &mut Self {
        for n in names {
            self.point(n);
        }
        self
    }

    pub fn point_acc(&mut self, name: &str, acc: i64) -> &mut Self {
        let chain = if self.script.has_accumulator() {
            Chain::singleton(self.script.accumulator_id(), int(acc))
        } else {
            Chain::zero(-1)
        };
        self.script
            .insert_cell(CellId::new(0, name), chain)
            .expect("builder points are fresh");
        self
    }

    /// Adds a cell of dimension `dim >= 1` whose boundary is given as
    /// (coefficient, cell-name) pairs one dimension down.
    pub fn cell<'a, I>(&mut self, dim: i32, name: &str, boundary: I) -> &mut Self
    where
        I: IntoIterator<Item = (i64, &'a str)>,
    {
        let chain = Chain::from_terms(
            dim - 1,
            boundary
                .into_iter()
                .map(|(k, n)| (CellId::new(dim - 1, n), int(k))),
        );
        self.script
            .insert_cell(CellId::new(dim, name), chain)
            .expect("builder cells are fresh");
        self
    }

    pub fn build(self) -> Script {
        self.script
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn interval() -> Script {
        let mut b = ScriptBuilder::new("interval");
        b.points(["p", "q"]);
        b.cell(1, "l", [(1, "p"), (-1, "q")]);
        b.build()
    }

    #[test]
    fn interval_is_a_valid_script() {
        assert!(interval().validate().is_valid());
    }

    #[test]
    fn broken_accumulator_coefficients_show_up_at_the_line() {
        let mut b = ScriptBuilder::new("broken");
        b.point("p").point_acc("q", 2);
        b.cell(1, "l", [(1, "p"), (-1, "q")]);
        let s = b.build();
        let report = s.validate();
        assert_eq!(report.violations.len(), 1);
        match &report.violations[0] {
            Violation::BoundarySquareNonzero { cell, residual } => {
                assert_eq!(cell.name, "l");
                assert_eq!(residual.coeff(&s.accumulator_id()), int(-1));
            }
            other => panic!("unexpected violation {other:?}"),
        }
    }

    #[test]
    fn torus_is_valid_unitary_and_minimal() {
        let torus = catalog::get("torus").unwrap().script;
        assert!(torus.validate().is_valid());
        assert!(torus.is_unitary());
        assert!(torus.is_minimal());
    }

    #[test]
    fn support_examples() {
        let torus = catalog::get("torus").unwrap().script;
        let dv1 = torus.boundary_of(&CellId::new(2, "v1")).unwrap();
        let names: Vec<_> = dv1.support().iter().map(|c| c.name.clone()).collect();
        assert_eq!(names, ["l1", "l4", "l5", "l8"]);
        let mut two_lines = Chain::zero(1);
        two_lines.add_term(CellId::new(1, "l1"), int(2));
        two_lines.add_term(CellId::new(1, "l2"), int(-1));
        assert_eq!(two_lines.support().len(), 2);
    }

    #[test]
    fn offprint_of_interval_and_floating_cell() {
        let s = interval();
        let off = s.offprint();
        let row = off.row(&CellId::new(1, "l")).unwrap();
        let names: Vec<_> = row.iter().map(|c| c.name.clone()).collect();
        assert_eq!(names, ["p", "q"]);
        // points map to the accumulator singleton
        let prow = off.row(&CellId::new(0, "p")).unwrap();
        assert!(prow.iter().all(|c| c.is_accumulator()));

        let mut b = ScriptBuilder::new("float");
        b.point("p");
        b.cell(1, "l", []);
        let s = b.build();
        assert!(s.offprint().row(&CellId::new(1, "l")).unwrap().is_empty());
    }

    #[test]
    fn klein_offprint_row_for_v1() {
        let klein = catalog::get("klein").unwrap().script;
        let row = klein.offprint_row(&CellId::new(2, "v1")).unwrap();
        let names: Vec<_> = row.iter().map(|c| c.name.clone()).collect();
        assert_eq!(names, ["l2", "l3", "l5", "l8"]);
    }

    #[test]
    fn subscript_generated_by_the_torus_top_cell_is_the_whole_torus() {
        let torus = catalog::get("torus").unwrap().script;
        let seed: BTreeSet<_> = [CellId::new(3, "C")].into();
        let sub = torus.subscript_generated_by(&seed).unwrap();
        assert_eq!(sub.cell_count(), torus.cell_count());
        assert!(sub.validate().is_valid());
    }

    #[test]
    fn subscript_generated_by_v1_closes_to_nine_cells() {
        let torus = catalog::get("torus").unwrap().script;
        let seed: BTreeSet<_> = [CellId::new(2, "v1")].into();
        let sub = torus.subscript_generated_by(&seed).unwrap();
        let lines: Vec<_> = sub.cells_of_dim(1).iter().map(|c| c.name.clone()).collect();
        assert_eq!(lines, ["l1", "l4", "l5", "l8"]);
        assert_eq!(sub.cells_of_dim(0).len(), 4);
        assert_eq!(sub.cells_of_dim(2).len(), 1);
        assert!(sub.validate().is_valid());
    }

    #[test]
    fn empty_seed_gives_accumulator_only_script() {
        let torus = catalog::get("torus").unwrap().script;
        let sub = torus.subscript_generated_by(&BTreeSet::new()).unwrap();
        assert_eq!(sub.cell_count(), 0);
        assert!(sub.has_accumulator());
    }

    #[test]
    fn relabel_flips_the_sphere_line() {
        // circle extended to a 2-sphere: dl_j = p1 - p2, dv_j = l1 - l2
        let mut b = ScriptBuilder::new("sphere2");
        b.points(["p1", "p2"]);
        b.cell(1, "l1", [(1, "p1"), (-1, "p2")]);
        b.cell(1, "l2", [(1, "p1"), (-1, "p2")]);
        b.cell(2, "v1", [(1, "l1"), (-1, "l2")]);
        b.cell(2, "v2", [(1, "l1"), (-1, "l2")]);
        let s = b.build();
        let flips: BTreeMap<_, _> = [(CellId::new(1, "l1"), -1i8)].into();
        let flipped = s.relabel_equivalent(&flips).unwrap();
        let dl1 = flipped.boundary_of(&CellId::new(1, "l1")).unwrap();
        assert_eq!(dl1.coeff(&CellId::new(0, "p1")), int(-1));
        assert_eq!(dl1.coeff(&CellId::new(0, "p2")), int(1));
        for v in ["v1", "v2"] {
            let dv = flipped.boundary_of(&CellId::new(2, v)).unwrap();
            assert_eq!(dv.coeff(&CellId::new(1, "l1")), int(-1));
            assert_eq!(dv.coeff(&CellId::new(1, "l2")), int(-1));
        }
        assert!(flipped.validate().is_valid());
        assert_eq!(flipped.offprint(), s.offprint());

        // empty flip map is the identity, double flip restores the original
        assert_eq!(s.relabel_equivalent(&BTreeMap::new()).unwrap(), s);
        assert_eq!(flipped.relabel_equivalent(&flips).unwrap(), s);
    }

    #[test]
    fn unitarity_examples() {
        let torus = catalog::get("torus").unwrap().script;
        assert!(torus.is_unitary());
        let extended = catalog::get("klein-extended-3cell").unwrap().script;
        assert!(!extended.is_unitary());
        assert!(Script::new("empty").is_unitary());
    }

    #[test]
    fn minimality_examples() {
        let mut b = ScriptBuilder::new("gcd2");
        b.points(["p1", "p2"]);
        b.cell(1, "l1", [(1, "p1"), (-1, "p2")]);
        b.cell(1, "l2", [(1, "p2"), (-1, "p1")]);
        b.cell(2, "v", [(2, "l1"), (2, "l2")]);
        assert!(!b.build().is_minimal());

        let mut b = ScriptBuilder::new("floating-referenced");
        b.point("p");
        b.cell(1, "l", []);
        b.cell(2, "v", [(1, "l")]);
        assert!(!b.build().is_minimal());
    }

    #[test]
    fn reduce_mod_three_fixes_unitary_tables() {
        let torus = catalog::get("torus").unwrap().script;
        let reduced = torus.reduce_mod(3).unwrap();
        assert!(reduced.validate().is_valid());
        assert!(reduced.is_unitary());
        let dv1 = reduced.boundary_of(&CellId::new(2, "v1")).unwrap();
        assert_eq!(dv1.coeff(&CellId::new(1, "l1")), int(2));
        assert_eq!(dv1.coeff(&CellId::new(1, "l5")), int(1));
        // idempotent
        assert_eq!(reduced.reduce_mod(3).unwrap(), reduced);
    }

    #[test]
    fn reduce_mod_two_kills_even_coefficients() {
        let s = catalog::get("klein-extended-3cell").unwrap().script;
        let reduced = s.reduce_mod(2).unwrap();
        let dc = reduced.boundary_of(&CellId::new(3, "C")).unwrap();
        assert_eq!(dc.support().len(), 4);
        assert!(dc.coeff(&CellId::new(2, "v5")).is_zero());
        assert!(reduced.validate().is_valid());
    }

    #[test]
    fn mod_two_offprint_inclusion_is_strict_on_the_torus_cycle() {
        let torus = catalog::get("torus").unwrap().script.reduce_mod(2).unwrap();
        let cycle = Chain::from_terms(
            2,
            ["v1", "v2", "v3", "v4"]
                .iter()
                .map(|n| (CellId::new(2, *n), int(1))),
        );
        let of_chain = torus.boundary_of_chain(&cycle).unwrap().support();
        let mut of_support = BTreeSet::new();
        for (cell, _) in cycle.iter() {
            of_support.extend(torus.boundary_of(cell).unwrap().support());
        }
        assert!(of_chain.is_subset(&of_support));
        assert!(of_chain.is_empty());
        assert_eq!(of_support.len(), 8);
    }
}
