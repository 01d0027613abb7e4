//! Exact equivalence of scripts: a dimension-preserving cell bijection plus
//! a sign per cell carrying one boundary table onto the other. Decided by
//! backtracking over signature-compatible candidates, with an explicit node
//! budget so an exhausted search reports "unknown" rather than guessing.

use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::hash::{Hash, Hasher};

use num_traits::Zero;

use crate::cell::{CellId, Chain, Int};
use crate::error::{Error, Result};
use crate::script::Script;

pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000;

/// A successful match: where each cell goes and with which sign.
#[derive(Debug, Clone)]
pub struct EquivalenceWitness {
    pub cell_map: BTreeMap<CellId, CellId>,
    pub signs: BTreeMap<CellId, i8>,
}

/// Applies a witness to `a`: flip the signed cells, then rename. The result
/// has the same content as the matched script.
pub fn apply_witness(a: &Script, witness: &EquivalenceWitness) -> Result<Script> {
    let flipped = a.relabel_equivalent(&witness.signs)?;
    let names: BTreeMap<CellId, String> = witness
        .cell_map
        .iter()
        .map(|(from, to)| (from.clone(), to.name.clone()))
        .collect();
    flipped.rename_cells(&names)
}

pub fn are_equivalent(a: &Script, b: &Script) -> Result<Option<EquivalenceWitness>> {
    are_equivalent_with_budget(a, b, DEFAULT_NODE_BUDGET)
}

pub fn are_equivalent_with_budget(
    a: &Script,
    b: &Script,
    budget: u64,
) -> Result<Option<EquivalenceWitness>> {
    if a.has_accumulator() != b.has_accumulator()
        || a.acc_dim() != b.acc_dim()
        || a.modulus() != b.modulus()
        || a.dims() != b.dims()
    {
        return Ok(None);
    }
    for d in a.dims() {
        if a.cells_of_dim(d).len() != b.cells_of_dim(d).len() {
            return Ok(None);
        }
    }
    let sig_a = signatures(a);
    let sig_b = signatures(b);
    let mut count_a: BTreeMap<u64, usize> = BTreeMap::new();
    let mut count_b: BTreeMap<u64, usize> = BTreeMap::new();
    for v in sig_a.values() {
        *count_a.entry(*v).or_default() += 1;
    }
    for v in sig_b.values() {
        *count_b.entry(*v).or_default() += 1;
    }
    if count_a != count_b {
        return Ok(None);
    }

    // candidates per a-cell, then assign most-constrained cells first
    // within each dimension, bottom up
    let mut order: Vec<CellId> = a.all_cells().cloned().collect();
    let candidates: HashMap<CellId, Vec<CellId>> = order
        .iter()
        .map(|c| {
            let list: Vec<CellId> = b
                .cells_of_dim(c.dim)
                .iter()
                .filter(|d| sig_b[*d] == sig_a[c])
                .cloned()
                .collect();
            (c.clone(), list)
        })
        .collect();
    order.sort_by(|x, y| {
        (x.dim, candidates[x].len(), &x.name).cmp(&(y.dim, candidates[y].len(), &y.name))
    });

    let mut search = Search {
        a,
        b,
        order,
        candidates,
        map: HashMap::new(),
        used: HashSet::new(),
        nodes: 0,
        budget,
    };
    // the accumulator always maps to itself, positively
    search
        .map
        .insert(a.accumulator_id(), (b.accumulator_id(), 1));
    match search.go(0) {
        SearchOutcome::Found => {
            let mut cell_map = BTreeMap::new();
            let mut signs = BTreeMap::new();
            for (from, (to, sign)) in &search.map {
                if from.is_accumulator() && from.dim == a.acc_dim() {
                    continue;
                }
                cell_map.insert(from.clone(), to.clone());
                signs.insert(from.clone(), *sign);
            }
            let witness = EquivalenceWitness { cell_map, signs };
            debug_assert!(apply_witness(a, &witness)
                .map(|s| s.same_content(b))
                .unwrap_or(false));
            Ok(Some(witness))
        }
        SearchOutcome::Exhausted => Ok(None),
        SearchOutcome::OverBudget => Err(Error::SearchBudgetExceeded { budget }),
    }
}

enum SearchOutcome {
    Found,
    Exhausted,
    OverBudget,
}

struct Search<'a> {
    a: &'a Script,
    b: &'a Script,
    order: Vec<CellId>,
    candidates: HashMap<CellId, Vec<CellId>>,
    map: HashMap<CellId, (CellId, i8)>,
    used: HashSet<CellId>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn go(&mut self, idx: usize) -> SearchOutcome {
        if idx == self.order.len() {
            return SearchOutcome::Found;
        }
        let cell = self.order[idx].clone();
        let mapped = match self.mapped_boundary(&cell) {
            Some(m) => m,
            None => return SearchOutcome::Exhausted,
        };
        for cand in self.candidates[&cell].clone() {
            if self.used.contains(&cand) {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return SearchOutcome::OverBudget;
            }
            let target = self.b.boundary_of(&cand).expect("candidate exists");
            // both signs survive only for zero boundaries (and mod 2)
            let mut signs: Vec<i8> = Vec::new();
            if self.chains_match(&mapped, &target) {
                signs.push(1);
            }
            if self.chains_match(&mapped.neg(), &target) {
                signs.push(-1);
            }
            for sign in signs {
                self.map.insert(cell.clone(), (cand.clone(), sign));
                self.used.insert(cand.clone());
                match self.go(idx + 1) {
                    SearchOutcome::Found => return SearchOutcome::Found,
                    SearchOutcome::OverBudget => return SearchOutcome::OverBudget,
                    SearchOutcome::Exhausted => {}
                }
                self.map.remove(&cell);
                self.used.remove(&cand);
            }
        }
        SearchOutcome::Exhausted
    }

    /// The boundary of `cell` pushed through the partial map; lower cells
    /// are always assigned before higher ones.
    fn mapped_boundary(&self, cell: &CellId) -> Option<Chain> {
        let mut out = Chain::zero(cell.dim - 1);
        for (target, coeff) in self.a.boundary_of(cell).expect("cell exists").iter() {
            let (to, sign) = self.map.get(target)?;
            let signed = if *sign == 1 { coeff.clone() } else { -coeff.clone() };
            out.add_term(to.clone(), signed);
        }
        Some(out)
    }

    fn chains_match(&self, lhs: &Chain, rhs: &Chain) -> bool {
        match self.b.modulus() {
            None => lhs == rhs,
            Some(n) => lhs.reduce_mod(n) == *rhs,
        }
    }
}

/// One refinement round folds each cell's signature together with the
/// signed multiset of its neighbours' signatures, below and above.
fn signatures(s: &Script) -> HashMap<CellId, u64> {
    let mut sig: HashMap<CellId, u64> = HashMap::new();
    let acc = s.accumulator_id();
    sig.insert(acc.clone(), 0x5eed);
    for cell in s.all_cells() {
        let b = s.boundary_of(cell).expect("script cell");
        let mut h = DefaultHasher::new();
        cell.dim.hash(&mut h);
        let mut mags: Vec<Int> = b.iter().map(|(_, v)| num_traits::Signed::abs(v)).collect();
        mags.sort();
        mags.hash(&mut h);
        sig.insert(cell.clone(), h.finish());
    }
    for _round in 0..3 {
        let mut next: HashMap<CellId, u64> = HashMap::new();
        next.insert(acc.clone(), sig[&acc]);
        for cell in s.all_cells() {
            let mut h = DefaultHasher::new();
            sig[cell].hash(&mut h);
            let mut below: Vec<(Int, u64)> = s
                .boundary_of(cell)
                .expect("script cell")
                .iter()
                .map(|(t, v)| (num_traits::Signed::abs(v), sig[t]))
                .collect();
            below.sort();
            below.hash(&mut h);
            let mut above: Vec<(Int, u64)> = s
                .occurrences_above(cell)
                .into_iter()
                .map(|(up, v)| (num_traits::Signed::abs(&v), sig[&up]))
                .collect();
            above.sort();
            above.hash(&mut h);
            next.insert(cell.clone(), h.finish());
        }
        sig = next;
    }
    sig
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn torus_matches_a_renamed_torus() {
        let torus = catalog::get("torus").unwrap().script;
        let names: BTreeMap<CellId, String> = torus
            .all_cells()
            .map(|c| (c.clone(), format!("x_{}", c.name)))
            .collect();
        let renamed = torus.rename_cells(&names).unwrap();
        let witness = are_equivalent(&torus, &renamed).unwrap().expect("equivalent");
        let image = apply_witness(&torus, &witness).unwrap();
        assert!(image.same_content(&renamed));
    }

    #[test]
    fn klein_and_glued_klein_are_not_equivalent() {
        let klein = catalog::get("klein").unwrap().script;
        let glued = catalog::get("klein-glued").unwrap().script;
        assert!(are_equivalent(&klein, &glued).unwrap().is_none());
    }

    #[test]
    fn refined_glued_klein_matches_the_first_klein() {
        let refined = catalog::get("klein-refined").unwrap().script;
        let klein = catalog::get("klein").unwrap().script;
        let witness = are_equivalent(&refined, &klein).unwrap().expect("equivalent");
        let image = apply_witness(&refined, &witness).unwrap();
        assert!(image.same_content(&klein));
    }

    #[test]
    fn first_strip_of_the_pair_is_a_moebius_strip() {
        let two = catalog::get("two-moebius").unwrap().script;
        let seed: std::collections::BTreeSet<CellId> =
            [CellId::new(2, "v1"), CellId::new(2, "v2")].into();
        let strip = two.subscript_generated_by(&seed).unwrap();
        let moebius = catalog::get("moebius").unwrap().script;
        assert!(are_equivalent(&strip, &moebius).unwrap().is_some());
    }

    #[test]
    fn budget_exhaustion_is_reported_not_guessed() {
        let torus = catalog::get("torus").unwrap().script;
        let err = are_equivalent_with_budget(&torus, &torus, 2);
        assert!(matches!(err, Err(Error::SearchBudgetExceeded { .. })));
    }

    #[test]
    fn different_cell_counts_fail_fast() {
        let torus = catalog::get("torus").unwrap().script;
        let klein = catalog::get("klein").unwrap().script;
        assert!(are_equivalent(&torus, &klein).unwrap().is_none());
    }
}
