//! Cells and integer chains, the raw material every other module works with.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Shorthand for the arbitrary-precision coefficients used throughout.
pub type Int = BigInt;

/// Convenience constructor for small coefficients.
pub fn int(v: i64) -> Int {
    Int::from(v)
}

/// Identity of a generator cell: a grading index plus a name that is unique
/// within its dimension. Dimensions may be negative (simplicial products put
/// cells below dimension zero).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellId {
    pub dim: i32,
    pub name: String,
}

impl CellId {
    pub fn new(dim: i32, name: impl Into<String>) -> Self {
        CellId { dim, name: name.into() }
    }

    /// The reserved pseudo-cell standing for the generator of the
    /// accumulator module. It never appears in a script's cell lists, only
    /// inside boundary chains of bottom-level cells.
    pub fn accumulator(dim: i32) -> Self {
        CellId { dim, name: "1".into() }
    }

    pub fn is_accumulator(&self) -> bool {
        self.name == "1"
    }
}

impl fmt::Display for CellId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

/// A sparse integer combination of same-dimension cells. Stored canonically:
/// no zero coefficients, terms ordered by cell id.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Chain {
    dim: i32,
    terms: BTreeMap<CellId, Int>,
}

impl Chain {
    pub fn zero(dim: i32) -> Self {
        Chain { dim, terms: BTreeMap::new() }
    }

    /// Single-cell chain `coeff * cell`.
    pub fn singleton(cell: CellId, coeff: Int) -> Self {
        let mut c = Chain::zero(cell.dim);
        c.add_term(cell, coeff);
        c
    }

    pub fn from_terms<I>(dim: i32, terms: I) -> Self
    where
        I: IntoIterator<Item = (CellId, Int)>,
    {
        let mut c = Chain::zero(dim);
        for (cell, coeff) in terms {
            c.add_term(cell, coeff);
        }
        c
    }

    pub fn dim(&self) -> i32 {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, cell: &CellId) -> Int {
        self.terms.get(cell).cloned().unwrap_or_else(Int::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CellId, &Int)> {
        self.terms.iter()
    }

    /// Adds `coeff * cell`, keeping the canonical sparse form.
    pub fn add_term(&mut self, cell: CellId, coeff: Int) {
        debug_assert_eq!(cell.dim, self.dim, "term {cell:?} has wrong dimension");
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(cell);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Chain) -> Chain {
        debug_assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (cell, coeff) in other.iter() {
            out.add_term(cell.clone(), coeff.clone());
        }
        out
    }

    pub fn sub(&self, other: &Chain) -> Chain {
        debug_assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (cell, coeff) in other.iter() {
            out.add_term(cell.clone(), -coeff.clone());
        }
        out
    }

    pub fn neg(&self) -> Chain {
        self.scale(&int(-1))
    }

    pub fn scale(&self, factor: &Int) -> Chain {
        if factor.is_zero() {
            return Chain::zero(self.dim);
        }
        Chain {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(c, v)| (c.clone(), v * factor))
                .collect(),
        }
    }

    /// Exact division by a factor; panics if some coefficient is not divisible.
    pub fn div_exact(&self, factor: &Int) -> Chain {
        assert!(!factor.is_zero());
        Chain {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(c, v)| {
                    let (q, r) = num_integer::Integer::div_rem(v, factor);
                    assert!(r.is_zero(), "coefficient {v} not divisible by {factor}");
                    (c.clone(), q)
                })
                .collect(),
        }
    }

    /// Removes a cell from the chain entirely, returning its old coefficient.
    pub fn remove_cell(&mut self, cell: &CellId) -> Int {
        self.terms.remove(cell).unwrap_or_else(Int::zero)
    }

    /// Gcd of the coefficient magnitudes; zero for the zero chain.
    pub fn content(&self) -> Int {
        let mut g = Int::zero();
        for coeff in self.terms.values() {
            g = num_integer::Integer::gcd(&g, coeff);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// The support: cells carried with nonzero coefficient.
    pub fn support(&self) -> std::collections::BTreeSet<CellId> {
        self.terms.keys().cloned().collect()
    }

    /// All coefficients are plus or minus one.
    pub fn is_unitary(&self) -> bool {
        self.terms.values().all(|v| v.abs().is_one())
    }

    /// Reduce every coefficient to its canonical representative mod n,
    /// dropping terms that vanish.
    pub fn reduce_mod(&self, n: &Int) -> Chain {
        let mut out = Chain::zero(self.dim);
        for (cell, coeff) in self.iter() {
            out.add_term(cell.clone(), num_integer::Integer::mod_floor(coeff, n));
        }
        out
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(self.terms.iter(), f)
    }
}

/// An integer combination of cells of arbitrary mixed dimensions, the domain
/// of the Dirac operator. Kernel vectors are returned in primitive integer
/// form, so integer coefficients suffice here too.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedChain {
    terms: BTreeMap<CellId, Int>,
}

impl MixedChain {
    pub fn zero() -> Self {
        MixedChain { terms: BTreeMap::new() }
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (CellId, Int)>,
    {
        let mut m = MixedChain::zero();
        for (cell, coeff) in terms {
            m.add_term(cell, coeff);
        }
        m
    }

    pub fn add_term(&mut self, cell: CellId, coeff: Int) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(cell) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CellId, &Int)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, cell: &CellId) -> Int {
        self.terms.get(cell).cloned().unwrap_or_else(Int::zero)
    }

    /// The dimensions actually present.
    pub fn dims(&self) -> std::collections::BTreeSet<i32> {
        self.terms.keys().map(|c| c.dim).collect()
    }

    /// Some chains are a single dimension in disguise.
    pub fn as_homogeneous(&self) -> Option<Chain> {
        let dims = self.dims();
        if dims.len() != 1 {
            return None;
        }
        let dim = *dims.iter().next().unwrap();
        Some(Chain::from_terms(
            dim,
            self.terms.iter().map(|(c, v)| (c.clone(), v.clone())),
        ))
    }
}

impl fmt::Display for MixedChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(self.terms.iter(), f)
    }
}

/// Shared pretty-printer for chain-like maps: `l5 + l8 - l1 - 2 l4`.
fn fmt_terms<'a, I>(terms: I, f: &mut fmt::Formatter<'_>) -> fmt::Result
where
    I: Iterator<Item = (&'a CellId, &'a Int)>,
{
    let mut first = true;
    for (cell, coeff) in terms {
        let mag = coeff.abs();
        if first {
            if coeff.is_negative() {
                write!(f, "-")?;
            }
            first = false;
        } else if coeff.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        if !mag.is_one() {
            write!(f, "{} ", mag)?;
        }
        write!(f, "{}", cell)?;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(dim: i32, name: &str) -> CellId {
        CellId::new(dim, name)
    }

    #[test]
    fn chain_canonicalizes_on_addition() {
        let mut ch = Chain::zero(1);
        ch.add_term(c(1, "l1"), int(2));
        ch.add_term(c(1, "l2"), int(-1));
        ch.add_term(c(1, "l1"), int(-2));
        assert_eq!(ch.coeff(&c(1, "l1")), int(0));
        assert_eq!(ch.len(), 1);
        assert_eq!(ch.support().len(), 1);
    }

    #[test]
    fn support_of_zero_chain_is_empty() {
        assert!(Chain::zero(3).support().is_empty());
    }

    #[test]
    fn content_is_gcd_of_coefficients() {
        let ch = Chain::from_terms(1, [(c(1, "a"), int(4)), (c(1, "b"), int(-6))]);
        assert_eq!(ch.content(), int(2));
        assert_eq!(Chain::zero(1).content(), int(0));
    }

    #[test]
    fn display_matches_equation_style() {
        let ch = Chain::from_terms(
            1,
            [
                (c(1, "l1"), int(-1)),
                (c(1, "l4"), int(-1)),
                (c(1, "l5"), int(1)),
                (c(1, "l8"), int(2)),
            ],
        );
        assert_eq!(format!("{ch}"), "-l1 - l4 + l5 + 2 l8");
        assert_eq!(format!("{}", Chain::zero(0)), "0");
    }

    #[test]
    fn mixed_chain_homogeneous_detection() {
        let m = MixedChain::from_terms([(c(1, "l1"), int(1)), (c(1, "l2"), int(1))]);
        assert!(m.as_homogeneous().is_some());
        let m = MixedChain::from_terms([(c(0, "p"), int(1)), (c(1, "l1"), int(1))]);
        assert!(m.as_homogeneous().is_none());
    }
}
