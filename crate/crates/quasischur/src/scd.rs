//! Symmetric chain decompositions of L(w,h) for widths 2, 3, 4, built from
//! explicit raising/lowering operators on strata, plus an independent
//! certifier for the cover, saturation, rank-symmetry, restriction,
//! extension, and pattern conditions.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::lattice::{cover_column, BoxLattice};
use crate::partition::{revlex_cmp, Partition};
use crate::plethysm::TwoRowPoly;

/// A saturated chain with its edge labelling (column index of each added
/// cell). Labels are always recomputed from consecutive elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    pub elements: Vec<Partition>,
    pub labels: Vec<u32>,
}

impl Chain {
    fn from_elements(elements: Vec<Partition>) -> Chain {
        assert!(!elements.is_empty(), "chains are nonempty");
        let labels = elements
            .windows(2)
            .map(|w| cover_column(&w[0], &w[1]))
            .collect();
        Chain { elements, labels }
    }

    pub fn min(&self) -> &Partition {
        &self.elements[0]
    }

    pub fn max(&self) -> &Partition {
        self.elements.last().expect("nonempty")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainDecomposition {
    pub lattice: BoxLattice,
    pub chains: Vec<Chain>,
}

impl ChainDecomposition {
    /// Wraps raw chains: recomputes labels and sorts chains by (rank of
    /// minimum, reverse-lex of minimum).
    pub fn new(lattice: BoxLattice, chains: Vec<Vec<Partition>>) -> ChainDecomposition {
        let mut chains: Vec<Chain> = chains.into_iter().map(Chain::from_elements).collect();
        chains.sort_by(|a, b| {
            a.min()
                .size()
                .cmp(&b.min().size())
                .then_with(|| revlex_cmp(a.min(), b.min()))
        });
        ChainDecomposition { lattice, chains }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let chains: Vec<serde_json::Value> = self
            .chains
            .iter()
            .map(|c| {
                serde_json::json!({
                    "elements": c.elements.iter().map(|p| p.parts().to_vec()).collect::<Vec<_>>(),
                    "labels": c.labels,
                })
            })
            .collect();
        serde_json::json!({
            "w": self.lattice.width(),
            "h": self.lattice.height(),
            "chains": chains,
        })
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("serializable")
    }

    pub fn from_json_str(s: &str) -> Result<ChainDecomposition> {
        #[derive(serde::Deserialize)]
        struct RawChain {
            elements: Vec<Vec<u32>>,
            #[allow(dead_code)]
            #[serde(default)]
            labels: Vec<u32>,
        }
        #[derive(serde::Deserialize)]
        struct Raw {
            w: u32,
            h: u32,
            chains: Vec<RawChain>,
        }
        let raw: Raw = serde_json::from_str(s)?;
        let chains = raw
            .chains
            .into_iter()
            .map(|c| {
                c.elements
                    .into_iter()
                    .map(Partition::new)
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ChainDecomposition::new(
            BoxLattice::new(raw.w, raw.h),
            chains,
        ))
    }
}

// ---- strata ----------------------------------------------------------

/// L'(3,h): no (3,1,1,1) subpartition, i.e. m3 = 0 or m1 <= 2.
pub fn in_l3_prime(p: &Partition) -> bool {
    p.multiplicity(3) == 0 || p.multiplicity(1) <= 2
}

/// L'(4,h): no (4,1,1) subpartition, i.e. m4 = 0 or m1 <= 1.
pub fn in_l4_prime(p: &Partition) -> bool {
    p.multiplicity(4) == 0 || p.multiplicity(1) <= 1
}

/// L''(4,h): neither (4,1,1) nor (2,2) as a subpartition.
pub fn in_l4_double_prime(p: &Partition) -> bool {
    in_l4_prime(p) && p.multiplicity(2) <= 1
}

fn check_stratum(
    lam: &Partition,
    w: u32,
    h: u32,
    stratum: &'static str,
    pred: impl Fn(&Partition) -> bool,
) -> Result<()> {
    if !BoxLattice::new(w, h).contains(lam) {
        return Err(Error::OutsideBox {
            partition: lam.to_string(),
            w,
            h,
        });
    }
    if !pred(lam) {
        return Err(Error::OutsideStratum {
            partition: lam.to_string(),
            stratum,
        });
    }
    Ok(())
}

// ---- column moves ----------------------------------------------------

/// Adds one cell in column `c`: a part of size c-1 grows to c (a new part
/// for c = 1).
fn apply_up(lam: &Partition, c: u32, w: u32) -> Partition {
    let mut m = lam.multiplicities(w);
    if c == 1 {
        m[1] += 1;
    } else {
        assert!(m[c as usize - 1] > 0, "no part of size {} in {lam}", c - 1);
        m[c as usize - 1] -= 1;
        m[c as usize] += 1;
    }
    Partition::from_multiplicities(&m)
}

/// Removes one cell from column `c`: a part of size c shrinks to c-1
/// (disappears for c = 1).
fn apply_down(lam: &Partition, c: u32, w: u32) -> Partition {
    let mut m = lam.multiplicities(w);
    assert!(m[c as usize] > 0, "no part of size {c} in {lam}");
    m[c as usize] -= 1;
    if c > 1 {
        m[c as usize - 1] += 1;
    }
    Partition::from_multiplicities(&m)
}

// ---- the w = 3 operators on L'(3,h) ----------------------------------

/// Phase 1 holds when m3 = 0 and either m1+m2 is even with m1 >= 1, or
/// m1+m2 is odd with m1 > 2.
fn l3_phase1(m1: u32, m2: u32, m3: u32) -> bool {
    m3 == 0 && ((m1 + m2) % 2 == 0 && m1 >= 1 || (m1 + m2) % 2 == 1 && m1 > 2)
}

fn f3_col(lam: &Partition, h: u32) -> Option<u32> {
    let m = lam.multiplicities(3);
    let (m1, m2, m3) = (m[1], m[2], m[3]);
    let len = lam.len() as u32;
    if l3_phase1(m1, m2, m3) {
        // cases 1 and 2: both parities add in column 2
        return Some(2);
    }
    match (m1, m2 % 2) {
        (0, 0) => (len < h).then_some(1), // case 3; at full height: lowest weight
        (0, 1) => Some(3),                // case 4
        (1, 0) => Some(2),                // case 5
        (1, 1) => (len < h).then_some(1), // case 6; at full height: lowest weight
        (2, 0) => Some(2),                // case 7
        (2, 1) => Some(3),                // case 8
        _ => unreachable!("no w=3 operator case matches {lam} (m1={m1}, m2={m2}, m3={m3})"),
    }
}

fn e3_col(lam: &Partition) -> Option<u32> {
    let m = lam.multiplicities(3);
    let (m1, m2, m3) = (m[1], m[2], m[3]);
    if l3_phase1(m1, m2, m3) {
        // cases 1 and 2: highest weight exactly when m2 = 0
        return (m2 > 0).then_some(2);
    }
    match (m1, m2 % 2) {
        // case 3: the empty partition is the only highest weight here
        (0, 0) => {
            if m3 > 0 {
                Some(3)
            } else if m2 > 0 {
                Some(2)
            } else {
                None
            }
        }
        (0, 1) => Some(2), // case 4
        (1, 0) => Some(1), // case 5
        (1, 1) => Some(2), // case 6
        (2, 0) => Some(3), // case 7
        (2, 1) => Some(if m3 > 0 { 1 } else { 2 }), // case 8
        _ => unreachable!("no w=3 operator case matches {lam} (m1={m1}, m2={m2}, m3={m3})"),
    }
}

/// Lowering operator on L'(3,h): the next chain element and the column of
/// the added cell, or `None` on lowest-weight elements.
pub fn f3(lam: &Partition, h: u32) -> Result<Option<(Partition, u32)>> {
    check_stratum(lam, 3, h, "L'(3,h)", in_l3_prime)?;
    Ok(f3_col(lam, h).map(|c| (apply_up(lam, c, 3), c)))
}

/// Raising operator on L'(3,h), partial inverse of [`f3`]; `None` on
/// highest-weight elements.
pub fn e3(lam: &Partition, h: u32) -> Result<Option<(Partition, u32)>> {
    check_stratum(lam, 3, h, "L'(3,h)", in_l3_prime)?;
    Ok(e3_col(lam).map(|c| (apply_down(lam, c, 3), c)))
}

// ---- the w = 4 operators on L''(4,h) ---------------------------------

/// Phase 1 holds when m4 = 0 and, with d = m1+m2+m3, either d is even with
/// m1+m2 >= 1, or d is odd with m1 > 1.
fn l4_phase1(m1: u32, m2: u32, m3: u32, m4: u32) -> bool {
    let d = m1 + m2 + m3;
    m4 == 0 && (d % 2 == 0 && m1 + m2 >= 1 || d % 2 == 1 && m1 > 1)
}

fn f4_col(lam: &Partition, h: u32) -> Option<u32> {
    let m = lam.multiplicities(4);
    let (m1, m2, m3, m4) = (m[1], m[2], m[3], m[4]);
    let len = lam.len() as u32;
    if l4_phase1(m1, m2, m3, m4) {
        // cases 1a/2a (m2 = 0) and 1b/2b (m2 = 1), same for both parities
        return match m2 {
            0 => Some(2),
            1 => Some(3),
            _ => unreachable!("phase-1 element outside L''(4,h): {lam}"),
        };
    }
    match (m1, m2, m3 % 2) {
        (0, 0, 0) => (len < h).then_some(1), // case 3; at full height: lowest weight
        (1, 0, 0) => Some(2),                // case 4
        (0, 1, 0) => Some(3),                // case 5
        (0, 0, 1) => Some(4),                // case 6
        (1, 1, 1) => Some(4),                // case 7
        (1, 1, 0) => Some(3),                // case 8
        (1, 0, 1) => Some(2),                // case 9
        (0, 1, 1) => (len < h).then_some(1), // case 10; at full height: lowest weight
        _ => unreachable!("no w=4 operator case matches {lam} (m=[{m1},{m2},{m3},{m4}])"),
    }
}

fn e4_col(lam: &Partition) -> Option<u32> {
    let m = lam.multiplicities(4);
    let (m1, m2, m3, m4) = (m[1], m[2], m[3], m[4]);
    if l4_phase1(m1, m2, m3, m4) {
        return match m2 {
            // cases 1a/2a: highest weight exactly when m3 = 0
            0 => (m3 > 0).then_some(3),
            1 => Some(2), // cases 1b/2b
            _ => unreachable!("phase-1 element outside L''(4,h): {lam}"),
        };
    }
    match (m1, m2, m3 % 2) {
        // case 3: the empty partition is the only highest weight here
        (0, 0, 0) => {
            if m4 > 0 {
                Some(4)
            } else if m3 > 0 {
                Some(3)
            } else {
                None
            }
        }
        (1, 0, 0) => Some(1), // case 4
        (0, 1, 0) => Some(2), // case 5
        (0, 0, 1) => Some(3), // case 6
        (1, 1, 1) => Some(if m4 > 0 { 1 } else { 2 }), // case 7
        (1, 1, 0) => Some(4), // case 8 (only reached with m4 > 0)
        (1, 0, 1) => Some(3), // case 9
        (0, 1, 1) => Some(2), // case 10
        _ => unreachable!("no w=4 operator case matches {lam} (m=[{m1},{m2},{m3},{m4}])"),
    }
}

/// Lowering operator on L''(4,h); `None` on lowest-weight elements.
pub fn f4(lam: &Partition, h: u32) -> Result<Option<(Partition, u32)>> {
    check_stratum(lam, 4, h, "L''(4,h)", in_l4_double_prime)?;
    Ok(f4_col(lam, h).map(|c| (apply_up(lam, c, 4), c)))
}

/// Raising operator on L''(4,h), partial inverse of [`f4`]; `None` on
/// highest-weight elements.
pub fn e4(lam: &Partition, h: u32) -> Result<Option<(Partition, u32)>> {
    check_stratum(lam, 4, h, "L''(4,h)", in_l4_double_prime)?;
    Ok(e4_col(lam).map(|c| (apply_down(lam, c, 4), c)))
}

// ---- builders --------------------------------------------------------

/// Chains of a stratum: start at every element whose raising operator is
/// undefined, then follow the lowering operator.
fn operator_chains(
    w: u32,
    h: u32,
    in_stratum: impl Fn(&Partition) -> bool,
    e_col: impl Fn(&Partition) -> Option<u32>,
    f_col: impl Fn(&Partition, u32) -> Option<u32>,
) -> Vec<Vec<Partition>> {
    let lattice = BoxLattice::new(w, h);
    let mut chains = Vec::new();
    for lam in lattice.elements() {
        if !in_stratum(&lam) || e_col(&lam).is_some() {
            continue;
        }
        let mut chain = vec![lam];
        while let Some(c) = f_col(chain.last().unwrap(), h) {
            let next = apply_up(chain.last().unwrap(), c, w);
            debug_assert!(lattice.contains(&next) && in_stratum(&next));
            chain.push(next);
        }
        chains.push(chain);
    }
    chains
}

/// Shifts every chain element by ⊕`shift` (multiplicity-wise union); cover
/// columns are preserved.
fn shift_chains(chains: &[Chain], shift: &Partition) -> Vec<Vec<Partition>> {
    chains
        .iter()
        .map(|c| c.elements.iter().map(|p| p.oplus(shift)).collect())
        .collect()
}

/// Symmetric chain decomposition of L(2,h): minima 1^{m1} with m1 even,
/// boxes added alternately in columns 1 and 2.
pub fn scd_w2(h: u32) -> ChainDecomposition {
    let mut chains = Vec::new();
    for m1 in (0..=h).step_by(2) {
        let mut chain = vec![Partition::from_multiplicities(&[0, m1])];
        for _ in 0..h - m1 {
            chain.push(apply_up(chain.last().unwrap(), 1, 2));
            chain.push(apply_up(chain.last().unwrap(), 2, 2));
        }
        chains.push(chain);
    }
    ChainDecomposition::new(BoxLattice::new(2, h), chains)
}

/// Symmetric chain decomposition of L(3,h): operator chains on L'(3,h)
/// together with the ⊕(3,1,1,1) shift of the decomposition of L(3,h-4).
pub fn scd_w3(h: u32) -> ChainDecomposition {
    let mut chains = operator_chains(3, h, in_l3_prime, e3_col, f3_col);
    if h >= 4 {
        let inner = scd_w3(h - 4);
        let shift = Partition::new(vec![3, 1, 1, 1]).unwrap();
        chains.extend(shift_chains(&inner.chains, &shift));
    }
    ChainDecomposition::new(BoxLattice::new(3, h), chains)
}

/// Chains of a decomposition of L'(4,h): operator chains on L''(4,h)
/// together with the ⊕(2,2) shift of the decomposition of L'(4,h-2).
fn l4_prime_chains(h: u32) -> Vec<Vec<Partition>> {
    let mut chains = operator_chains(4, h, in_l4_double_prime, e4_col, f4_col);
    if h >= 2 {
        let inner = l4_prime_chains(h - 2);
        let shift = Partition::new(vec![2, 2]).unwrap();
        for chain in inner {
            chains.push(chain.iter().map(|p| p.oplus(&shift)).collect());
        }
    }
    chains
}

/// Symmetric chain decomposition of L(4,h): a decomposition of L'(4,h)
/// together with the ⊕(4,1,1) shift of the decomposition of L(4,h-3).
pub fn scd_w4(h: u32) -> ChainDecomposition {
    let mut chains = l4_prime_chains(h);
    if h >= 3 {
        let inner = scd_w4(h - 3);
        let shift = Partition::new(vec![4, 1, 1]).unwrap();
        chains.extend(shift_chains(&inner.chains, &shift));
    }
    ChainDecomposition::new(BoxLattice::new(4, h), chains)
}

/// Builds the decomposition for a supported width.
pub fn scd(w: u32, h: u32) -> Result<ChainDecomposition> {
    match w {
        2 => Ok(scd_w2(h)),
        3 => Ok(scd_w3(h)),
        4 => Ok(scd_w4(h)),
        other => Err(Error::UnsupportedWidth(other)),
    }
}

// ---- certification ---------------------------------------------------

#[derive(Clone, Debug, Default)]
pub struct CertifyReport {
    pub violations: Vec<String>,
}

impl CertifyReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Verifies the six structural claims about a decomposition: exact disjoint
/// cover, saturation, rank symmetry, restriction to L(w,h-1), the extension
/// condition, and the edge-label pattern condition. Labels are recomputed
/// from consecutive elements, never trusted from construction.
pub fn certify(d: &ChainDecomposition) -> CertifyReport {
    let mut report = CertifyReport::default();
    let w = d.lattice.width();
    let h = d.lattice.height();

    check_scd_axioms(&d.lattice, &d.chains, &mut report, "");

    for (i, chain) in d.chains.iter().enumerate() {
        // stored labels must match the recomputed ones
        let recomputed: Vec<u32> = chain
            .elements
            .windows(2)
            .filter(|pair| covers(&pair[0], &pair[1]))
            .map(|pair| cover_column(&pair[0], &pair[1]))
            .collect();
        if recomputed.len() + 1 == chain.elements.len() && recomputed != chain.labels {
            report
                .violations
                .push(format!("chain {i}: stored labels differ from recomputed ones"));
        }
        if !pattern_ok(&recomputed, w) {
            report.violations.push(format!(
                "chain {i} (min {}): labels {recomputed:?} do not split into a 1-free prefix plus repeats of one permutation",
                chain.min()
            ));
        }
    }

    if h >= 1 {
        let small = BoxLattice::new(w, h - 1);
        let mut restricted: Vec<Chain> = Vec::new();
        for (i, chain) in d.chains.iter().enumerate() {
            let inside: Vec<Partition> = chain
                .elements
                .iter()
                .filter(|p| small.contains(p))
                .cloned()
                .collect();
            // removed elements must form a suffix of the chain
            let prefix_len = chain
                .elements
                .iter()
                .take_while(|p| small.contains(p))
                .count();
            if prefix_len != inside.len() {
                report.violations.push(format!(
                    "chain {i}: elements outside L({w},{}) are not a suffix",
                    h - 1
                ));
                continue;
            }
            if inside.is_empty() {
                continue;
            }
            let restricted_chain = Chain::from_elements(inside);
            // extension condition: the chain maximum and the restricted
            // maximum have the same complement
            match (
                d.lattice.complement(chain.max()),
                small.complement(restricted_chain.max()),
            ) {
                (Ok(a), Ok(b)) if a == b => {}
                (Ok(a), Ok(b)) => report.violations.push(format!(
                    "chain {i}: extension violated (complements {a} vs {b})"
                )),
                _ => report
                    .violations
                    .push(format!("chain {i}: element outside its box")),
            }
            restricted.push(restricted_chain);
        }
        check_scd_axioms(&small, &restricted, &mut report, "restriction: ");
    }

    report
}

fn covers(a: &Partition, b: &Partition) -> bool {
    b.size() == a.size() + 1 && b.contains(a)
}

/// Disjoint cover, saturation, and rank symmetry for a chain set.
fn check_scd_axioms(
    lattice: &BoxLattice,
    chains: &[Chain],
    report: &mut CertifyReport,
    tag: &str,
) {
    let mut seen = std::collections::BTreeSet::new();
    let mut duplicates = false;
    for (i, chain) in chains.iter().enumerate() {
        for p in &chain.elements {
            if !lattice.contains(p) {
                report.violations.push(format!(
                    "{tag}chain {i}: {p} outside L({},{})",
                    lattice.width(),
                    lattice.height()
                ));
            }
            if !seen.insert(p.clone()) {
                duplicates = true;
                report
                    .violations
                    .push(format!("{tag}chain {i}: {p} appears in more than one chain"));
            }
        }
        for pair in chain.elements.windows(2) {
            if !covers(&pair[0], &pair[1]) {
                report.violations.push(format!(
                    "{tag}chain {i}: {} -> {} is not a cover",
                    pair[0], pair[1]
                ));
            }
        }
        let (lo, hi) = (chain.min().size(), chain.max().size());
        if lo + hi != lattice.max_rank() {
            report.violations.push(format!(
                "{tag}chain {i}: ranks {lo}+{hi} != {}",
                lattice.max_rank()
            ));
        }
    }
    let all = lattice.elements();
    if !duplicates && seen.len() != all.len() {
        for p in &all {
            if !seen.contains(p) {
                report
                    .violations
                    .push(format!("{tag}element {p} not covered by any chain"));
            }
        }
    }
}

/// True when `labels` splits into a 1-free prefix followed by repeats of a
/// single permutation of 1..=w (the final repeat may be truncated).
fn pattern_ok(labels: &[u32], w: u32) -> bool {
    let w = w as usize;
    for j in 0..=labels.len() {
        if j > 0 && labels[j - 1] == 1 {
            return false; // the prefix may not contain a 1, and longer splits only add more
        }
        let rest = &labels[j..];
        if rest.is_empty() {
            return true;
        }
        let head = &rest[..w.min(rest.len())];
        let distinct = head
            .iter()
            .collect::<std::collections::BTreeSet<_>>()
            .len();
        if distinct == head.len()
            && head.iter().all(|&c| c >= 1 && c as usize <= w)
            && rest
                .iter()
                .enumerate()
                .all(|(i, &c)| c == rest[i % w])
            && (rest.len() < w || head.len() == w)
        {
            return true;
        }
    }
    false
}

// ---- chain-minima coefficients ----------------------------------------

/// Two-row Schur coefficients of s_w[s_h] read off the symmetric chain
/// decomposition: the coefficient of s_(wh-k, k) is the number of chains
/// whose minimum sits at rank k. Cross-checked against the closed-form
/// description of the minima.
pub fn scd_coefficients(w: u32, h: u32) -> Result<TwoRowPoly> {
    let d = scd(w, h)?;
    let degree = w as u64 * h as u64;
    let mut out = TwoRowPoly::zero(degree);
    let one = BigInt::one();
    for chain in &d.chains {
        out.add_coeff(chain.min().size(), &one);
    }
    let closed = closed_form_minima_counts(w, h);
    let mut expected = TwoRowPoly::zero(degree);
    for (k, count) in closed {
        expected.add_coeff(k, &BigInt::from(count));
    }
    if out != expected {
        return Err(Error::CrossCheck(format!(
            "SCD minima counts disagree with the closed form for w={w} h={h}"
        )));
    }
    Ok(out)
}

/// Closed-form minimal-element counts by rank.
fn closed_form_minima_counts(w: u32, h: u32) -> Vec<(u64, u64)> {
    let mut counts = std::collections::BTreeMap::new();
    match w {
        2 => {
            // minima 1^{m1} with m1 even
            for m1 in (0..=h as u64).step_by(2) {
                *counts.entry(m1).or_insert(0) += 1;
            }
        }
        3 => {
            // minima 3^{m3} 1^{m1} with m1 >= 3 m3 and m1 != 3 m3 + 1
            for m3 in 0..=h as u64 {
                for m1 in 0..=(h as u64 - m3) {
                    if m1 >= 3 * m3 && m1 != 3 * m3 + 1 {
                        *counts.entry(3 * m3 + m1).or_insert(0) += 1;
                    }
                }
            }
        }
        4 => {
            // minima 4^{m4} 2^{m2} 1^{m1} with m2 even, m1 >= 2 m4,
            // m1 != 2 m4 + 1
            for m4 in 0..=h as u64 {
                for m2 in (0..=(h as u64 - m4)).step_by(2) {
                    for m1 in 0..=(h as u64 - m4 - m2) {
                        if m1 >= 2 * m4 && m1 != 2 * m4 + 1 {
                            *counts.entry(4 * m4 + 2 * m2 + m1).or_insert(0) += 1;
                        }
                    }
                }
            }
        }
        _ => unreachable!("scd_coefficients only supports w in {{2,3,4}}"),
    }
    counts.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn w2_small() {
        let d = scd_w2(0);
        assert_eq!(d.chains.len(), 1);
        assert_eq!(d.chains[0].elements, vec![Partition::empty()]);

        let d = scd_w2(2);
        assert_eq!(d.chains.len(), 2);
        assert_eq!(
            d.chains.iter().map(|c| c.elements.len()).sum::<usize>(),
            6
        );
        assert!(certify(&d).passed());

        let d = scd_w2(4);
        assert_eq!(d.chains.len(), 3);
        let minima: Vec<&Partition> = d.chains.iter().map(|c| c.min()).collect();
        assert_eq!(
            minima,
            vec![&Partition::empty(), &p(&[1, 1]), &p(&[1, 1, 1, 1])]
        );
        assert!(certify(&d).passed());
    }

    #[test]
    fn strata_partition_w3() {
        // every element lies in exactly one of L'(3,h) and the shifted copy
        let shift = p(&[3, 1, 1, 1]);
        for h in 0..=12u32 {
            let lattice = BoxLattice::new(3, h);
            for lam in lattice.elements() {
                let in_prime = in_l3_prime(&lam);
                let stripped = crate::partition::subpartition_strip(&lam, &shift);
                let in_shift = stripped.map_or(false, |s| {
                    BoxLattice::new(3, h.saturating_sub(4)).contains(&s)
                });
                assert!(in_prime ^ in_shift, "{lam} in L(3,{h})");
            }
        }
    }

    #[test]
    fn strata_partition_w4() {
        let s411 = p(&[4, 1, 1]);
        let s22 = p(&[2, 2]);
        for h in 0..=10u32 {
            let lattice = BoxLattice::new(4, h);
            for lam in lattice.elements() {
                let in_dprime = in_l4_double_prime(&lam);
                let in_22_shift = in_l4_prime(&lam)
                    && crate::partition::subpartition_strip(&lam, &s22).map_or(false, |s| {
                        in_l4_prime(&s) && BoxLattice::new(4, h.saturating_sub(2)).contains(&s)
                    });
                let in_411_shift = crate::partition::subpartition_strip(&lam, &s411)
                    .map_or(false, |s| {
                        BoxLattice::new(4, h.saturating_sub(3)).contains(&s)
                    });
                let memberships =
                    u32::from(in_dprime) + u32::from(in_22_shift) + u32::from(in_411_shift);
                assert_eq!(memberships, 1, "{lam} in L(4,{h})");
            }
        }
    }

    #[test]
    fn f3_e3_partial_inverses() {
        for h in 0..=12u32 {
            for lam in BoxLattice::new(3, h).elements() {
                if !in_l3_prime(&lam) {
                    continue;
                }
                if let Some((next, c)) = f3(&lam, h).unwrap() {
                    let (back, c2) = e3(&next, h).unwrap().expect("e defined after f");
                    assert_eq!(back, lam, "e(f({lam})) at h={h}");
                    assert_eq!(c, c2);
                }
                if let Some((prev, c)) = e3(&lam, h).unwrap() {
                    let (fwd, c2) = f3(&prev, h).unwrap().expect("f defined after e");
                    assert_eq!(fwd, lam, "f(e({lam})) at h={h}");
                    assert_eq!(c, c2);
                }
            }
        }
    }

    #[test]
    fn f4_e4_partial_inverses() {
        for h in 0..=12u32 {
            for lam in BoxLattice::new(4, h).elements() {
                if !in_l4_double_prime(&lam) {
                    continue;
                }
                if let Some((next, c)) = f4(&lam, h).unwrap() {
                    let (back, c2) = e4(&next, h).unwrap().expect("e defined after f");
                    assert_eq!(back, lam, "e(f({lam})) at h={h}");
                    assert_eq!(c, c2);
                }
                if let Some((prev, c)) = e4(&lam, h).unwrap() {
                    let (fwd, c2) = f4(&prev, h).unwrap().expect("f defined after e");
                    assert_eq!(fwd, lam, "f(e({lam})) at h={h}");
                    assert_eq!(c, c2);
                }
            }
        }
    }

    #[test]
    fn l3_prime_boundary_elements() {
        for h in 0..=10u32 {
            for lam in BoxLattice::new(3, h).elements() {
                if !in_l3_prime(&lam) {
                    continue;
                }
                let m = lam.multiplicities(3);
                // highest weights: 1^{m1} with m1 != 1
                let is_hw = m[2] == 0 && m[3] == 0 && m[1] != 1;
                assert_eq!(e3(&lam, h).unwrap().is_none(), is_hw, "{lam} h={h}");
                // lowest weights: 3^{h-m2} 2^{m2} (m2 even) or
                // 3^{h-m2-1} 2^{m2} 1 (m2 odd)
                let is_lw = if m[2] % 2 == 0 {
                    m[1] == 0 && m[3] == h - m[2]
                } else {
                    m[1] == 1 && h >= m[2] + 1 && m[3] == h - m[2] - 1
                };
                assert_eq!(f3(&lam, h).unwrap().is_none(), is_lw, "{lam} h={h}");
            }
        }
    }

    #[test]
    fn l4_double_prime_boundary_elements() {
        for h in 0..=10u32 {
            for lam in BoxLattice::new(4, h).elements() {
                if !in_l4_double_prime(&lam) {
                    continue;
                }
                let m = lam.multiplicities(4);
                let is_hw = m[2] == 0 && m[3] == 0 && m[4] == 0 && m[1] != 1;
                assert_eq!(e4(&lam, h).unwrap().is_none(), is_hw, "{lam} h={h}");
                // lowest weights: 4^{h-m} 3^{m} (m even) or 4^{h-m-1} 3^{m} 2
                // (m odd), both of full height
                let is_lw = if m[2] == 0 {
                    m[1] == 0 && m[3] % 2 == 0 && m[4] == h - m[3]
                } else {
                    m[1] == 0 && m[2] == 1 && m[3] % 2 == 1 && h >= m[3] + 1 && m[4] == h - m[3] - 1
                };
                assert_eq!(f4(&lam, h).unwrap().is_none(), is_lw, "{lam} h={h}");
            }
        }
    }

    #[test]
    fn operators_reject_bad_input() {
        assert!(matches!(
            f3(&p(&[3, 1, 1, 1]), 6),
            Err(Error::OutsideStratum { .. })
        ));
        assert!(matches!(f3(&p(&[4]), 3), Err(Error::OutsideBox { .. })));
        assert!(matches!(
            f4(&p(&[4, 1, 1]), 5),
            Err(Error::OutsideStratum { .. })
        ));
        assert!(matches!(
            f4(&p(&[2, 2]), 5),
            Err(Error::OutsideStratum { .. })
        ));
    }

    #[test]
    fn scd_w3_h3_matches_figure() {
        let d = scd_w3(3);
        assert_eq!(d.chains.len(), 3);
        let minima: Vec<&Partition> = d.chains.iter().map(|c| c.min()).collect();
        assert_eq!(minima, vec![&Partition::empty(), &p(&[1, 1]), &p(&[1, 1, 1])]);
        assert!(certify(&d).passed());
    }

    #[test]
    fn scd_certifies_small() {
        for h in 0..=8u32 {
            let d3 = scd_w3(h);
            let r3 = certify(&d3);
            assert!(r3.passed(), "w=3 h={h}: {:?}", r3.violations);
            let d4 = scd_w4(h);
            let r4 = certify(&d4);
            assert!(r4.passed(), "w=4 h={h}: {:?}", r4.violations);
            let d2 = scd_w2(h);
            let r2 = certify(&d2);
            assert!(r2.passed(), "w=2 h={h}: {:?}", r2.violations);
        }
    }

    #[test]
    fn chains_centered_at_half_rank() {
        for (w, h) in [(2u32, 7u32), (3, 7), (4, 6)] {
            let d = scd(w, h).unwrap();
            let mid = (w as u64 * h as u64).div_ceil(2);
            for c in &d.chains {
                assert!(
                    c.min().size() <= mid && mid <= c.max().size(),
                    "chain at {} misses center {mid}",
                    c.min()
                );
            }
        }
    }

    #[test]
    fn corrupted_decomposition_fails() {
        let mut d = scd_w3(3);
        // swap the tails of the two longest chains
        let a = d.chains[0].elements.pop().unwrap();
        let b = d.chains[1].elements.pop().unwrap();
        d.chains[0].elements.push(b);
        d.chains[1].elements.push(a);
        let report = certify(&d);
        assert!(!report.passed());
        assert!(report
            .violations
            .iter()
            .any(|v| v.contains("not a cover") || v.contains("more than one chain")));
    }

    #[test]
    fn pattern_check_cases() {
        assert!(pattern_ok(&[], 3));
        assert!(pattern_ok(&[2, 2, 2], 3)); // all prefix
        assert!(pattern_ok(&[1, 2, 3, 1, 2, 3], 3));
        assert!(pattern_ok(&[2, 2, 1, 2, 3], 3)); // prefix then one period
        assert!(pattern_ok(&[2, 3, 2], 3)); // truncated final period
        assert!(!pattern_ok(&[1, 1], 2)); // period would repeat a column
        assert!(!pattern_ok(&[2, 1, 1, 2], 2));
        assert!(!pattern_ok(&[3, 2, 1, 3, 1, 2], 3)); // period changes
    }

    #[test]
    fn theorem_w3_minima_and_maxima() {
        for h in 0..=10u32 {
            let d = scd_w3(h);
            let minima: std::collections::BTreeSet<Partition> =
                d.chains.iter().map(|c| c.min().clone()).collect();
            let mut expected = std::collections::BTreeSet::new();
            for m3 in 0..=h {
                for m1 in 0..=h - m3 {
                    if m1 >= 3 * m3 && m1 != 3 * m3 + 1 {
                        expected.insert(Partition::from_multiplicities(&[0, m1, 0, m3]));
                    }
                }
            }
            assert_eq!(minima, expected, "w=3 h={h} minima");

            // part 3: the maximum determined by each minimum
            for chain in &d.chains {
                let m = chain.min().multiplicities(3);
                let (m3, m1) = (m[3] as i64, m[1] as i64 - 3 * m[3] as i64);
                assert!(m1 >= 0 && m1 != 1);
                let want = if m1 % 2 == 0 {
                    [0, 3 * m3, m1, h as i64 - m1 - 3 * m3]
                } else {
                    [0, 3 * m3 + 1, m1 - 2, h as i64 - m1 - 3 * m3 + 1]
                };
                let want =
                    Partition::from_multiplicities(&want.map(|v| u32::try_from(v).unwrap()));
                assert_eq!(chain.max(), &want, "w=3 h={h} max for min {}", chain.min());
            }

            // part 4: maxima characterized through complements
            let maxima: std::collections::BTreeSet<Partition> =
                d.chains.iter().map(|c| c.max().clone()).collect();
            let mut expected_max = std::collections::BTreeSet::new();
            let lattice = BoxLattice::new(3, h);
            for lam in lattice.elements() {
                let comp = lattice.complement(&lam).unwrap();
                let m = comp.multiplicities(3);
                if m[3] > 0 {
                    continue;
                }
                let (m1, m2) = (m[1], m[2]);
                let parity_ok = (m1 % 2 == 0) == (m2 % 3 == 0) && (m1 % 2 == 1) == (m2 % 3 == 1);
                let bound_ok = 3 * m1 + 4 * m2 <= 3 * h;
                if parity_ok && bound_ok {
                    expected_max.insert(lam);
                }
            }
            assert_eq!(maxima, expected_max, "w=3 h={h} maxima");
        }
    }

    #[test]
    fn theorem_w4_minima_and_maxima() {
        for h in 0..=8u32 {
            let d = scd_w4(h);
            let minima: std::collections::BTreeSet<Partition> =
                d.chains.iter().map(|c| c.min().clone()).collect();
            let mut expected = std::collections::BTreeSet::new();
            for m4 in 0..=h {
                for m2 in (0..=h - m4).step_by(2) {
                    for m1 in 0..=h - m4 - m2 {
                        if m1 >= 2 * m4 && m1 != 2 * m4 + 1 {
                            expected.insert(Partition::from_multiplicities(&[0, m1, m2, 0, m4]));
                        }
                    }
                }
            }
            assert_eq!(minima, expected, "w=4 h={h} minima");

            // part 3: the maximum determined by each minimum
            for chain in &d.chains {
                let m = chain.min().multiplicities(4);
                let (m4, m2x2, m1) = (m[4] as i64, m[2] as i64, m[1] as i64 - 2 * m[4] as i64);
                assert!(m2x2 % 2 == 0 && m1 >= 0 && m1 != 1);
                let m2 = m2x2 / 2;
                let want = if m1 % 2 == 0 {
                    [0, 2 * m4, 2 * m2, m1, h as i64 - m1 - 2 * m2 - 2 * m4]
                } else {
                    [0, 2 * m4, 2 * m2 + 1, m1 - 2, h as i64 - m1 - 2 * m2 - 2 * m4 + 1]
                };
                let want =
                    Partition::from_multiplicities(&want.map(|v| u32::try_from(v).unwrap()));
                assert_eq!(chain.max(), &want, "w=4 h={h} max for min {}", chain.min());
            }

            // part 4: maxima characterized through complements
            let maxima: std::collections::BTreeSet<Partition> =
                d.chains.iter().map(|c| c.max().clone()).collect();
            let mut expected_max = std::collections::BTreeSet::new();
            let lattice = BoxLattice::new(4, h);
            for lam in lattice.elements() {
                let comp = lattice.complement(&lam).unwrap();
                let m = comp.multiplicities(4);
                if m[4] > 0 {
                    continue;
                }
                let (m1, m2, m3) = (m[1], m[2], m[3]);
                if m3 % 2 != 0 || (m1 + m2) % 2 != 0 {
                    continue;
                }
                let lhs = 2 * (m1 + m2);
                let rhs = 2 * h as i64 - 3 * m3 as i64;
                let ok = (lhs as i64) < rhs || (lhs as i64 == rhs && m1 % 2 == 0 && m2 % 2 == 0);
                if ok {
                    expected_max.insert(lam);
                }
            }
            assert_eq!(maxima, expected_max, "w=4 h={h} maxima");
        }
    }

    #[test]
    fn unsupported_width() {
        assert!(matches!(scd(5, 3), Err(Error::UnsupportedWidth(5))));
    }

    #[test]
    fn coefficients_match_spec_examples() {
        // w=3, h=3, k=3: only mu = 1^3 qualifies
        let t = scd_coefficients(3, 3).unwrap();
        assert_eq!(t.coeff(3), BigInt::one());
        // k=0 is always the empty-rooted chain
        for (w, h) in [(2u32, 5u32), (3, 4), (4, 4)] {
            let t = scd_coefficients(w, h).unwrap();
            assert_eq!(t.coeff(0), BigInt::one(), "w={w} h={h}");
        }
    }

    #[test]
    fn json_round_trip() {
        let d = scd_w3(4);
        let s = d.to_json_string();
        let back = ChainDecomposition::from_json_str(&s).unwrap();
        assert_eq!(d, back);
    }
}
