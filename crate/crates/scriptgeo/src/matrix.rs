//! Sparse arbitrary-precision integer matrices and their Smith normal form.
//!
//! Everything downstream (homology, tightness, kernels, duals) reduces to
//! exact computations on these matrices; no floating point enters here.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::cell::{int, CellId, Int};

/// Sparse integer matrix with optional cell labels for traceability.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Int>,
    pub row_labels: Option<Vec<CellId>>,
    pub col_labels: Option<Vec<CellId>>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: BTreeMap::new(), row_labels: None, col_labels: None }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Int::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(Vec::len).unwrap_or(0);
        let mut m = IntMatrix::zero(r, c);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), c, "ragged row");
            for (j, v) in row.into_iter().enumerate() {
                m.set(i, j, int(v));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Int {
        self.entries.get(&(r, c)).cloned().unwrap_or_else(Int::zero)
    }

    pub fn set(&mut self, r: usize, c: usize, v: Int) {
        assert!(r < self.rows && c < self.cols, "index out of range");
        if v.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &Int) {
        if v.is_zero() {
            return;
        }
        let cur = self.get(r, c);
        self.set(r, c, cur + v);
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &Int)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut m = IntMatrix::zero(self.cols, self.rows);
        for (r, c, v) in self.iter() {
            m.set(c, r, v.clone());
        }
        m.row_labels = self.col_labels.clone();
        m.col_labels = self.row_labels.clone();
        m
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut other_rows: Vec<Vec<(usize, &Int)>> = vec![Vec::new(); other.rows];
        for (r, c, v) in other.iter() {
            other_rows[r].push((c, v));
        }
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for (r, k, a) in self.iter() {
            for &(c, b) in &other_rows[k] {
                out.add_to(r, c, &(a * b));
            }
        }
        out
    }

    /// Applies the matrix to an integer vector.
    pub fn apply(&self, x: &[Int]) -> Vec<Int> {
        assert_eq!(x.len(), self.cols);
        let mut out = vec![Int::zero(); self.rows];
        for (r, c, v) in self.iter() {
            out[r] += v * &x[c];
        }
        out
    }

    /// Sum of squared entries; for a Dirac matrix this is the Laplace trace.
    pub fn frobenius_square(&self) -> Int {
        self.entries.values().map(|v| v * v).sum()
    }

    /// Plain-text dump (`rows cols` header, then `r c value` triplets) for
    /// cross-checking against an external computer algebra system.
    pub fn to_triplet_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.rows, self.cols);
        for (r, c, v) in self.iter() {
            let _ = writeln!(out, "{r} {c} {v}");
        }
        out
    }

    /// Dense diagonal comparison helper used by the Smith form verifier.
    fn equals_diagonal(&self, d: &[Int]) -> bool {
        for (r, c, v) in self.iter() {
            if r != c || r >= d.len() || *v != d[r] {
                return false;
            }
        }
        d.iter().enumerate().all(|(i, v)| self.get(i, i) == *v)
    }
}

/// Outcome of a Smith decomposition: `u * a * v == diag(d)` with both
/// transforms unimodular and the invariant factors positive and dividing
/// each other in turn.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub d: Vec<Int>,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.d.len()
    }
}

fn round_div(a: &Int, b: &Int) -> Int {
    let (mut q, r) = a.div_rem(b);
    if r.abs() * 2 > b.abs() {
        if (r.is_positive() && b.is_positive()) || (r.is_negative() && b.is_negative()) {
            q += 1;
        } else {
            q -= 1;
        }
    }
    q
}

/// Row-major elimination workspace with a column index for pivot searches.
struct Elimination {
    rows: usize,
    cols: usize,
    row: Vec<BTreeMap<usize, Int>>,
    /// u mirrors row operations (left transform), row-major.
    u: Option<Vec<BTreeMap<usize, Int>>>,
    /// v mirrors column operations (right transform), column-major.
    v: Option<Vec<BTreeMap<usize, Int>>>,
}

impl Elimination {
    fn new(m: &IntMatrix, with_transforms: bool) -> Self {
        let mut row = vec![BTreeMap::new(); m.rows];
        for (r, c, v) in m.iter() {
            row[r].insert(c, v.clone());
        }
        let u = with_transforms.then(|| {
            (0..m.rows)
                .map(|i| BTreeMap::from([(i, Int::one())]))
                .collect()
        });
        let v = with_transforms.then(|| {
            (0..m.cols)
                .map(|j| BTreeMap::from([(j, Int::one())]))
                .collect()
        });
        Elimination { rows: m.rows, cols: m.cols, row, u, v }
    }

    fn get(&self, r: usize, c: usize) -> Int {
        self.row[r].get(&c).cloned().unwrap_or_else(Int::zero)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        self.row.swap(a, b);
        if let Some(u) = &mut self.u {
            u.swap(a, b);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for row in &mut self.row {
            let va = row.remove(&a);
            let vb = row.remove(&b);
            if let Some(v) = vb {
                row.insert(a, v);
            }
            if let Some(v) = va {
                row.insert(b, v);
            }
        }
        if let Some(v) = &mut self.v {
            v.swap(a, b);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for v in self.row[r].values_mut() {
            *v = -v.clone();
        }
        if let Some(u) = &mut self.u {
            for v in u[r].values_mut() {
                *v = -v.clone();
            }
        }
    }

    /// row[dst] += t * row[src]
    fn add_row(&mut self, dst: usize, src: usize, t: &Int) {
        if t.is_zero() {
            return;
        }
        let src_row: Vec<(usize, Int)> =
            self.row[src].iter().map(|(c, v)| (*c, v * t)).collect();
        for (c, v) in src_row {
            let slot = self.row[dst].entry(c).or_insert_with(Int::zero);
            *slot += v;
            if slot.is_zero() {
                self.row[dst].remove(&c);
            }
        }
        if let Some(u) = &mut self.u {
            let src_row: Vec<(usize, Int)> = u[src].iter().map(|(c, v)| (*c, v * t)).collect();
            for (c, v) in src_row {
                let slot = u[dst].entry(c).or_insert_with(Int::zero);
                *slot += v;
                if slot.is_zero() {
                    u[dst].remove(&c);
                }
            }
        }
    }

    /// col[dst] += t * col[src]
    fn add_col(&mut self, dst: usize, src: usize, t: &Int) {
        if t.is_zero() {
            return;
        }
        for row in &mut self.row {
            if let Some(v) = row.get(&src).cloned() {
                let slot = row.entry(dst).or_insert_with(Int::zero);
                *slot += &v * t;
                if slot.is_zero() {
                    row.remove(&dst);
                }
            }
        }
        if let Some(vm) = &mut self.v {
            let src_col: Vec<(usize, Int)> = vm[src].iter().map(|(r, v)| (*r, v * t)).collect();
            for (r, v) in src_col {
                let slot = vm[dst].entry(r).or_insert_with(Int::zero);
                *slot += v;
                if slot.is_zero() {
                    vm[dst].remove(&r);
                }
            }
        }
    }

    /// Smallest-magnitude nonzero entry in the trailing submatrix,
    /// preferring low row then low column on ties.
    fn find_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(Int, usize, usize)> = None;
        for r in t..self.rows {
            for (&c, v) in &self.row[r] {
                if c < t {
                    continue;
                }
                let mag = v.abs();
                match &best {
                    Some((bmag, _, _)) if *bmag <= mag => {}
                    _ => best = Some((mag.clone(), r, c)),
                }
                if mag.is_one() {
                    // cannot do better than a unit in this row
                    break;
                }
            }
            if let Some((m, _, _)) = &best {
                if m.is_one() && r >= t {
                    // a unit pivot is always acceptable; stop scanning early
                    break;
                }
            }
        }
        best.map(|(_, r, c)| (r, c))
    }

    fn run(&mut self) -> Vec<Int> {
        let mut t = 0;
        let steps = self.rows.min(self.cols);
        let mut d = Vec::new();
        while t < steps {
            let Some((pr, pc)) = self.find_pivot(t) else { break };
            self.swap_rows(t, pr);
            self.swap_cols(t, pc);
            loop {
                // clear column t below and above the pivot
                let mut dirty = false;
                let pivot = self.get(t, t);
                for r in 0..self.rows {
                    if r == t {
                        continue;
                    }
                    let v = self.get(r, t);
                    if v.is_zero() {
                        continue;
                    }
                    let q = round_div(&v, &pivot);
                    self.add_row(r, t, &-q);
                    if !self.get(r, t).is_zero() {
                        // remainder strictly smaller than the pivot: promote it
                        self.swap_rows(t, r);
                        dirty = true;
                        break;
                    }
                }
                if dirty {
                    continue;
                }
                let pivot = self.get(t, t);
                for c in 0..self.cols {
                    if c == t {
                        continue;
                    }
                    let v = self.get(t, c);
                    if v.is_zero() {
                        continue;
                    }
                    let q = round_div(&v, &pivot);
                    self.add_col(c, t, &-q);
                    if !self.get(t, c).is_zero() {
                        self.swap_cols(t, c);
                        dirty = true;
                        break;
                    }
                }
                if dirty {
                    continue;
                }
                // divisibility: the pivot must divide the whole submatrix
                let pivot = self.get(t, t);
                if !pivot.abs().is_one() {
                    let mut offender = None;
                    'scan: for r in (t + 1)..self.rows {
                        for (&c, v) in &self.row[r] {
                            if c > t && !v.mod_floor(&pivot).is_zero() {
                                offender = Some(r);
                                break 'scan;
                            }
                        }
                    }
                    if let Some(r) = offender {
                        self.add_row(t, r, &Int::one());
                        continue;
                    }
                }
                break;
            }
            if self.get(t, t).is_negative() {
                self.negate_row(t);
            }
            d.push(self.get(t, t));
            t += 1;
        }
        d
    }

    fn u_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zero(self.rows, self.rows);
        if let Some(u) = &self.u {
            for (r, row) in u.iter().enumerate() {
                for (c, v) in row {
                    m.set(r, *c, v.clone());
                }
            }
        }
        m
    }

    fn v_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zero(self.cols, self.cols);
        if let Some(v) = &self.v {
            for (c, col) in v.iter().enumerate() {
                for (r, val) in col {
                    m.set(*r, c, val.clone());
                }
            }
        }
        m
    }
}

/// Full Smith decomposition with unimodular transforms, verified by
/// multiplying back before returning.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let mut elim = Elimination::new(m, true);
    let d = elim.run();
    let u = elim.u_matrix();
    let v = elim.v_matrix();
    let product = u.mul(m).mul(&v);
    assert!(
        product.equals_diagonal(&d),
        "smith form verification failed: u*a*v is not diag(d)"
    );
    SmithForm { d, u, v }
}

/// Invariant factors only; skips the transform bookkeeping, which matters
/// for the larger refinement matrices.
pub fn invariant_factors(m: &IntMatrix) -> Vec<Int> {
    Elimination::new(m, false).run()
}

pub fn rank(m: &IntMatrix) -> usize {
    invariant_factors(m).len()
}

/// Basis of the saturated integer kernel lattice, from the trailing columns
/// of the Smith `v`. Columns of a unimodular matrix are primitive; signs are
/// normalized so the first nonzero coordinate is positive.
pub fn kernel_basis(m: &IntMatrix) -> Vec<Vec<Int>> {
    if m.cols == 0 {
        return Vec::new();
    }
    let snf = smith_normal_form(m);
    let mut basis = Vec::new();
    for j in snf.rank()..m.cols {
        let mut col: Vec<Int> = (0..m.cols).map(|r| snf.v.get(r, j)).collect();
        debug_assert!(col.iter().fold(Int::zero(), |g, x| g.gcd(x)).is_one());
        if let Some(first) = col.iter().find(|v| !v.is_zero()) {
            if first.is_negative() {
                for v in &mut col {
                    *v = -v.clone();
                }
            }
        }
        basis.push(col);
    }
    basis
}

/// Solves `a * x = b` exactly over the integers using a precomputed Smith
/// form of `a`. Returns `None` when the system is inconsistent or the
/// solution is not integral.
pub fn solve_exact(snf: &SmithForm, b: &[Int]) -> Option<Vec<Int>> {
    let rows = snf.u.rows();
    let cols = snf.v.rows();
    assert_eq!(b.len(), rows);
    let ub = snf.u.apply(b);
    let mut y = vec![Int::zero(); cols];
    for (i, entry) in ub.iter().enumerate() {
        if i < snf.d.len() {
            let (q, r) = entry.div_rem(&snf.d[i]);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        } else if !entry.is_zero() {
            return None;
        }
    }
    Some(snf.v.apply(&y))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn snf_of_diag_2_3_has_factors_1_6() {
        let m = IntMatrix::from_rows(vec![vec![2, 0], vec![0, 3]]);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.d, vec![int(1), int(6)]);
    }

    #[test]
    fn snf_of_zero_matrix_has_rank_zero() {
        let m = IntMatrix::zero(3, 4);
        let snf = smith_normal_form(&m);
        assert!(snf.d.is_empty());
        assert_eq!(rank(&m), 0);
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        let m = IntMatrix::identity(4);
        assert!(kernel_basis(&m).is_empty());
    }

    #[test]
    fn kernel_of_all_ones_row() {
        let m = IntMatrix::from_rows(vec![vec![1, 1, 1]]);
        let basis = kernel_basis(&m);
        assert_eq!(basis.len(), 2);
        for v in &basis {
            let s: Int = v.iter().cloned().sum();
            assert!(s.is_zero());
        }
    }

    #[test]
    fn divisibility_chain_holds_on_awkward_input() {
        let m = IntMatrix::from_rows(vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]);
        let snf = smith_normal_form(&m);
        for w in snf.d.windows(2) {
            assert!(w[1].mod_floor(&w[0]).is_zero(), "{:?}", snf.d);
        }
    }

    #[test]
    fn solve_exact_finds_integer_solutions() {
        let m = IntMatrix::from_rows(vec![vec![2, 1], vec![0, 3]]);
        let snf = smith_normal_form(&m);
        let b = vec![int(7), int(9)];
        let x = solve_exact(&snf, &b).unwrap();
        assert_eq!(m.apply(&x), b);
        // 2x + y = 1, 3y = 1 has no integer solution
        assert!(solve_exact(&snf, &[int(1), int(1)]).is_none());
    }

    #[test]
    fn triplet_dump_has_header_and_entries() {
        let m = IntMatrix::from_rows(vec![vec![0, -2], vec![5, 0]]);
        let text = m.to_triplet_text();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("2 2"));
        let rest: Vec<_> = lines.collect();
        assert_eq!(rest, vec!["0 1 -2", "1 0 5"]);
    }
}
