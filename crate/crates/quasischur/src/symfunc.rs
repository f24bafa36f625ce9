//! Homogeneous (quasi)symmetric function values: finite maps from a basis
//! index to an exact integer coefficient, tagged with the basis.
//!
//! Indices are compositions for the F and M bases and partitions for the
//! Schur basis; both are stored as part sequences. Zero coefficients are
//! never stored.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Composition, Partition};
use crate::tableau::{descent_composition, enumerate_qyt, enumerate_syt};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Basis {
    /// Gessel's fundamental quasisymmetric basis, composition-indexed.
    F,
    /// Monomial quasisymmetric basis, composition-indexed.
    M,
    /// Schur basis, partition-indexed.
    S,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::F => write!(f, "F"),
            Basis::M => write!(f, "M"),
            Basis::S => write!(f, "s"),
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc {
    degree: u64,
    basis: Basis,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl SymFunc {
    pub fn zero(degree: u64, basis: Basis) -> Self {
        SymFunc {
            degree,
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn check_index(&self, index: &[u32]) {
        let size: u64 = index.iter().map(|&p| p as u64).sum();
        assert_eq!(size, self.degree, "index {index:?} has wrong degree");
        assert!(index.iter().all(|&p| p > 0), "index {index:?} has a zero part");
        if self.basis == Basis::S {
            assert!(
                index.windows(2).all(|w| w[0] >= w[1]),
                "Schur index {index:?} is not a partition"
            );
        }
    }

    /// Adds `coeff` to the coefficient at `index`, dropping the term if it
    /// cancels to zero.
    pub fn add_term(&mut self, index: &[u32], coeff: &BigInt) {
        if coeff.is_zero() {
            return;
        }
        self.check_index(index);
        let slot = self.terms.entry(index.to_vec()).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(index);
        }
    }

    pub fn coeff(&self, index: &[u32]) -> BigInt {
        self.terms.get(index).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms sorted by reverse lexicographic index (larger sequences first).
    pub fn terms_revlex(&self) -> Vec<(&[u32], &BigInt)> {
        let mut v: Vec<(&[u32], &BigInt)> = self
            .terms
            .iter()
            .map(|(k, c)| (k.as_slice(), c))
            .collect();
        v.sort_by(|a, b| cmp_index_revlex(a.0, b.0));
        v
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(k, c)| (k.as_slice(), c))
    }

    /// Indices with nonzero coefficient that are partitions.
    pub fn partition_support(&self) -> Vec<Partition> {
        self.terms
            .keys()
            .filter_map(|k| Composition::new(k.clone()).ok()?.to_partition())
            .collect()
    }

    fn assert_compatible(&self, other: &SymFunc, op: &str) {
        assert_eq!(self.basis, other.basis, "{op}: basis mismatch");
        assert_eq!(self.degree, other.degree, "{op}: degree mismatch");
    }

    pub fn add(&self, other: &SymFunc) -> SymFunc {
        self.assert_compatible(other, "add");
        let mut out = self.clone();
        for (k, c) in other.iter() {
            out.add_term(k, c);
        }
        out
    }

    pub fn sub(&self, other: &SymFunc) -> SymFunc {
        self.assert_compatible(other, "sub");
        let mut out = self.clone();
        for (k, c) in other.iter() {
            out.add_term(k, &(-c));
        }
        out
    }

    pub fn scale(&self, factor: &BigInt) -> SymFunc {
        let mut out = SymFunc::zero(self.degree, self.basis);
        if factor.is_zero() {
            return out;
        }
        for (k, c) in self.iter() {
            out.add_term(k, &(c * factor));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<JsonTerm> = self
            .terms_revlex()
            .into_iter()
            .map(|(k, c)| JsonTerm {
                index: k.to_vec(),
                coeff: c.to_string(),
            })
            .collect();
        serde_json::to_value(JsonSymFunc {
            degree: self.degree,
            basis: self.basis.to_string(),
            terms,
        })
        .expect("serializable")
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("serializable")
    }

    pub fn from_json_str(s: &str) -> Result<SymFunc> {
        let raw: JsonSymFunc = serde_json::from_str(s)?;
        let basis = match raw.basis.as_str() {
            "F" => Basis::F,
            "M" => Basis::M,
            "s" | "S" => Basis::S,
            other => return Err(Error::Parse(format!("unknown basis {other:?}"))),
        };
        let mut out = SymFunc::zero(raw.degree, basis);
        for term in raw.terms {
            let coeff: BigInt = term
                .coeff
                .parse()
                .map_err(|e| Error::Parse(format!("bad coefficient {:?}: {e}", term.coeff)))?;
            let size: u64 = term.index.iter().map(|&p| p as u64).sum();
            if size != raw.degree {
                return Err(Error::Parse(format!(
                    "index {:?} does not have degree {}",
                    term.index, raw.degree
                )));
            }
            if term.index.iter().any(|&p| p == 0) {
                return Err(Error::Parse(format!("index {:?} has a zero part", term.index)));
            }
            if basis == Basis::S && !term.index.windows(2).all(|w| w[0] >= w[1]) {
                return Err(Error::Parse(format!(
                    "Schur index {:?} is not a partition",
                    term.index
                )));
            }
            out.add_term(&term.index, &coeff);
        }
        Ok(out)
    }
}

/// Reverse lexicographic comparison of index sequences with implicit zero
/// padding; `Less` sorts first.
pub fn cmp_index_revlex(a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    let n = a.len().max(b.len());
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        match y.cmp(&x) {
            std::cmp::Ordering::Equal => continue,
            ord => return ord,
        }
    }
    std::cmp::Ordering::Equal
}

#[derive(Serialize, Deserialize)]
struct JsonSymFunc {
    degree: u64,
    basis: String,
    terms: Vec<JsonTerm>,
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    index: Vec<u32>,
    coeff: String,
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (idx, c)) in self.terms_revlex().into_iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let idx_str = idx
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",");
            write!(f, "{}*{}[{}]", c, self.basis, idx_str)?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Fundamental quasisymmetric expansion of a Schur function, computed over
/// quasi-Yamanouchi tableaux and cross-checked against the standard-tableau
/// descent route.
pub fn schur_to_f(lam: &Partition) -> SymFunc {
    let mut via_qyt = SymFunc::zero(lam.size(), Basis::F);
    let one = BigInt::from(1);
    for t in enumerate_qyt(lam, None, None) {
        let wt = t
            .weight_composition()
            .expect("quasi-Yamanouchi weight has no internal zeros");
        via_qyt.add_term(wt.parts(), &one);
    }
    let mut via_syt = SymFunc::zero(lam.size(), Basis::F);
    for t in enumerate_syt(lam) {
        let des = descent_composition(&t).expect("standard tableau");
        via_syt.add_term(des.parts(), &one);
    }
    assert_eq!(
        via_qyt, via_syt,
        "QYT-weight and SYT-descent expansions disagree for {lam}"
    );
    via_qyt
}

/// Expands an F-basis value into the monomial quasisymmetric basis by
/// summing over refinements of each index.
pub fn f_to_m(f: &SymFunc) -> SymFunc {
    assert_eq!(f.basis(), Basis::F, "f_to_m expects the F basis");
    let mut out = SymFunc::zero(f.degree(), Basis::M);
    for (idx, c) in f.iter() {
        let alpha = Composition::new(idx.to_vec()).expect("stored index is valid");
        for beta in alpha.refinements() {
            out.add_term(beta.parts(), c);
        }
    }
    out
}

/// True iff the monomial expansion of `f` assigns equal coefficients to all
/// rearrangements of each index.
pub fn is_symmetric(f: &SymFunc) -> bool {
    let m = f_to_m(f);
    let mut by_class: BTreeMap<Vec<u32>, Vec<(&[u32], &BigInt)>> = BTreeMap::new();
    for (idx, c) in m.iter() {
        let mut sorted = idx.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        by_class.entry(sorted).or_default().push((idx, c));
    }
    for (class, members) in by_class {
        let expected = distinct_permutations(&class);
        if members.len() != expected {
            return false; // some rearrangement has coefficient zero
        }
        let c0 = members[0].1;
        if members.iter().any(|(_, c)| *c != c0) {
            return false;
        }
    }
    true
}

/// Number of distinct rearrangements of a multiset of parts.
fn distinct_permutations(sorted_parts: &[u32]) -> usize {
    let n = sorted_parts.len();
    let mut numer = 1usize;
    for i in 1..=n {
        numer *= i;
    }
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j < n && sorted_parts[j] == sorted_parts[i] {
            j += 1;
        }
        let mut fact = 1usize;
        for k in 1..=(j - i) {
            fact *= k;
        }
        numer /= fact;
        i = j;
    }
    numer
}
