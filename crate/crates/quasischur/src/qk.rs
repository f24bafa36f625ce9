//! The quasi-Kostka matrix, its exact inverse, signed chains of
//! quasi-Yamanouchi tableaux, and the conversion from a fundamental
//! quasisymmetric expansion to a Schur expansion.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Composition, Partition};
use crate::symfunc::{is_symmetric, schur_to_f, Basis, SymFunc};
use crate::tableau::{enumerate_qyt, quasi_kostka, Tableau};

/// Quasi-Kostka matrix for degree `n`, rows and columns indexed by the
/// partitions of `n` (optionally restricted to length at most `m`) in
/// reverse lexicographic order. Unit upper-triangular by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiKostkaMatrix {
    degree: u64,
    max_len: Option<usize>,
    index: Vec<Partition>,
    entries: Vec<Vec<u64>>,
}

impl QuasiKostkaMatrix {
    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn max_len(&self) -> Option<usize> {
        self.max_len
    }

    pub fn index(&self) -> &[Partition] {
        &self.index
    }

    pub fn dim(&self) -> usize {
        self.index.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> u64 {
        self.entries[row][col]
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.entries
    }

    /// Exact integer inverse via back substitution on the unit-triangular
    /// structure.
    pub fn inverse(&self) -> Vec<Vec<BigInt>> {
        let m: Vec<Vec<BigInt>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|&e| BigInt::from(e)).collect())
            .collect();
        invert_unitriangular(&m).expect("quasi-Kostka matrix is unit upper-triangular")
    }
}

/// Builds the quasi-Kostka matrix of degree `n`, optionally restricted to
/// partitions of length at most `m`.
///
/// Panics if `n == 0` (contract violation).
pub fn quasi_kostka_matrix(n: u64, max_len: Option<usize>) -> QuasiKostkaMatrix {
    assert!(n >= 1, "quasi_kostka_matrix needs n >= 1");
    let index = partitions_of(n, max_len, None);
    let entries: Vec<Vec<u64>> = index
        .iter()
        .map(|lam| {
            index
                .iter()
                .map(|mu| quasi_kostka(lam, &mu.as_composition()))
                .collect()
        })
        .collect();
    QuasiKostkaMatrix {
        degree: n,
        max_len,
        index,
        entries,
    }
}

/// Exact inverse of a unit upper-triangular integer matrix by back
/// substitution: X_{ij} = -sum_{i<k<=j} A_{ik} X_{kj}.
pub fn invert_unitriangular(a: &[Vec<BigInt>]) -> Result<Vec<Vec<BigInt>>> {
    let n = a.len();
    for (i, row) in a.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotUnitriangular);
        }
        if !row[i].is_one() {
            return Err(Error::NotUnitriangular);
        }
        if row[..i].iter().any(|e| !e.is_zero()) {
            return Err(Error::NotUnitriangular);
        }
    }
    let mut inv = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        inv[i][i] = BigInt::one();
    }
    for i in (0..n).rev() {
        for j in i + 1..n {
            let mut acc = BigInt::zero();
            for k in i + 1..=j {
                if !a[i][k].is_zero() && !inv[k][j].is_zero() {
                    acc += &a[i][k] * &inv[k][j];
                }
            }
            inv[i][j] = -acc;
        }
    }
    Ok(inv)
}

/// A signed chain of quasi-Yamanouchi tableaux: the shape of each tableau is
/// the weight of its predecessor, and the last tableau has equal shape and
/// weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedChain {
    tableaux: Vec<Tableau>,
}

impl SignedChain {
    pub fn tableaux(&self) -> &[Tableau] {
        &self.tableaux
    }

    pub fn len(&self) -> usize {
        self.tableaux.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tableaux.is_empty()
    }

    pub fn sign(&self) -> i64 {
        if self.tableaux.len() % 2 == 1 {
            1
        } else {
            -1
        }
    }

    /// Weight of the chain: the weight of its last tableau.
    pub fn weight(&self) -> Partition {
        let last = self.tableaux.last().expect("chains are nonempty");
        last.weight_composition()
            .and_then(|c| c.to_partition())
            .expect("final weight is a partition")
    }
}

/// All chains of quasi-Yamanouchi tableaux starting at shape `mu` and ending
/// with the superstandard tableau of shape `lam`.
///
/// Panics if `|mu| != |lam|` (contract violation).
pub fn enumerate_chains(mu: &Partition, lam: &Partition) -> Vec<SignedChain> {
    assert_eq!(mu.size(), lam.size(), "enumerate_chains needs |mu| = |lam|");
    let mut out = Vec::new();
    let mut stack: Vec<Tableau> = Vec::new();
    descend(mu, lam, &mut stack, &mut out);
    out
}

/// Chains starting at every quasi-Yamanouchi tableau of the current shape.
/// Weights strictly decrease in dominance order along a chain, so recursion
/// terminates; the final tableau is the unique one with weight equal to its
/// shape.
fn descend(shape: &Partition, lam: &Partition, stack: &mut Vec<Tableau>, out: &mut Vec<SignedChain>) {
    for t in enumerate_qyt(shape, None, None) {
        let Some(wt) = t.weight_composition().and_then(|c| c.to_partition()) else {
            continue; // a non-partition weight cannot be the next shape
        };
        if wt == *shape {
            // superstandard tableau terminates the chain
            if shape == lam {
                stack.push(t);
                out.push(SignedChain {
                    tableaux: stack.clone(),
                });
                stack.pop();
            }
            continue;
        }
        stack.push(t);
        descend(&wt, lam, stack, out);
        stack.pop();
    }
}

/// Signed chain count: the sum of signs over `enumerate_chains(mu, lam)`,
/// which equals the inverse quasi-Kostka entry.
pub fn chain_signed_sum(mu: &Partition, lam: &Partition) -> BigInt {
    enumerate_chains(mu, lam)
        .iter()
        .map(|c| BigInt::from(c.sign()))
        .sum()
}

/// Options for the F-to-Schur conversion.
#[derive(Clone, Copy, Default)]
pub struct ConvertOptions {
    /// Skip the symmetry precondition check.
    pub skip_symmetry_check: bool,
    /// Caller asserts no Schur term of length greater than this occurs, so a
    /// restricted quasi-Kostka submatrix suffices.
    pub max_len: Option<usize>,
}

/// Converts a symmetric F-basis value into the Schur basis using the inverse
/// quasi-Kostka matrix: each Schur coefficient depends only on the F
/// coefficients indexed by partitions.
///
/// The result is verified by re-expanding into the F basis; a round-trip
/// failure signals a violated precondition (asymmetric input or a wrong
/// `max_len` claim).
pub fn f_to_schur(f: &SymFunc, opts: ConvertOptions) -> Result<SymFunc> {
    assert_eq!(f.basis(), Basis::F, "f_to_schur expects the F basis");
    if !opts.skip_symmetry_check && !is_symmetric(f) {
        return Err(Error::NotSymmetric);
    }
    if f.is_zero() {
        return Ok(SymFunc::zero(f.degree(), Basis::S));
    }
    let n = f.degree();
    let q = quasi_kostka_matrix(n, opts.max_len);
    let qinv = q.inverse();
    let index = q.index();

    let c: Vec<BigInt> = index.iter().map(|mu| f.coeff(mu.parts())).collect();
    let mut out = SymFunc::zero(n, Basis::S);
    for (j, lam) in index.iter().enumerate() {
        let mut b = BigInt::zero();
        for (i, c_mu) in c.iter().enumerate() {
            if !c_mu.is_zero() && !qinv[i][j].is_zero() {
                b += &qinv[i][j] * c_mu;
            }
        }
        out.add_term(lam.parts(), &b);
    }

    verify_round_trip(f, &out)?;
    Ok(out)
}

/// The two-step substitution procedure: drop F terms not indexed by
/// partitions, then replace each remaining F_mu by the signed sum of Schur
/// functions over chains starting at shape mu.
pub fn f_to_schur_via_chains(f: &SymFunc, skip_symmetry_check: bool) -> Result<SymFunc> {
    assert_eq!(f.basis(), Basis::F, "f_to_schur_via_chains expects the F basis");
    if !skip_symmetry_check && !is_symmetric(f) {
        return Err(Error::NotSymmetric);
    }
    let n = f.degree();
    let mut out = SymFunc::zero(n, Basis::S);
    for (idx, c_mu) in f.iter() {
        let Some(mu) = Composition::new(idx.to_vec())
            .expect("stored index is valid")
            .to_partition()
        else {
            continue;
        };
        for chain in enumerate_all_chains_from(&mu) {
            let term = BigInt::from(chain.sign()) * c_mu;
            out.add_term(chain.weight().parts(), &term);
        }
    }
    verify_round_trip(f, &out)?;
    Ok(out)
}

/// All chains starting at shape `mu`, with any terminal weight.
pub fn enumerate_all_chains_from(mu: &Partition) -> Vec<SignedChain> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    descend_all(mu, &mut stack, &mut out);
    out
}

fn descend_all(shape: &Partition, stack: &mut Vec<Tableau>, out: &mut Vec<SignedChain>) {
    for t in enumerate_qyt(shape, None, None) {
        let Some(wt) = t.weight_composition().and_then(|c| c.to_partition()) else {
            continue;
        };
        if wt == *shape {
            stack.push(t);
            out.push(SignedChain {
                tableaux: stack.clone(),
            });
            stack.pop();
            continue;
        }
        stack.push(t);
        descend_all(&wt, stack, out);
        stack.pop();
    }
}

fn verify_round_trip(f: &SymFunc, schur: &SymFunc) -> Result<()> {
    let mut back = SymFunc::zero(f.degree(), Basis::F);
    for (idx, b) in schur.iter() {
        let lam = Partition::new(idx.to_vec()).expect("Schur index is a partition");
        back = back.add(&schur_to_f(&lam).scale(b));
    }
    if back != *f {
        return Err(Error::RoundTripFailed(format!(
            "re-expansion differs from input (got {back}, want {f})"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::dominance_leq;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn f_of(degree: u64, terms: &[(&[u32], i64)]) -> SymFunc {
        let mut f = SymFunc::zero(degree, Basis::F);
        for (idx, c) in terms {
            f.add_term(idx, &BigInt::from(*c));
        }
        f
    }

    #[test]
    fn small_matrices() {
        let q1 = quasi_kostka_matrix(1, None);
        assert_eq!(q1.dim(), 1);
        assert_eq!(q1.entry(0, 0), 1);

        let q8_2 = quasi_kostka_matrix(8, Some(2));
        assert_eq!(q8_2.dim(), 5);
        for i in 0..5 {
            for j in 0..5 {
                let want = if j == 0 {
                    u64::from(i == 0)
                } else {
                    u64::from(j >= i && i >= 1) + u64::from(i == 0 && j == 0)
                };
                assert_eq!(q8_2.entry(i, j), want, "entry ({i},{j})");
            }
        }
        // its inverse is bidiagonal with 1 / -1
        let inv = q8_2.inverse();
        for i in 0..5 {
            for j in 0..5 {
                let want = if i == j {
                    BigInt::from(1)
                } else if i >= 1 && j == i + 1 {
                    BigInt::from(-1)
                } else {
                    BigInt::zero()
                };
                assert_eq!(inv[i][j], want, "inverse entry ({i},{j})");
            }
        }
    }

    #[test]
    fn invert_identity_and_reject_bad() {
        let id: Vec<Vec<BigInt>> = (0..4)
            .map(|i| (0..4).map(|j| BigInt::from(u64::from(i == j))).collect())
            .collect();
        assert_eq!(invert_unitriangular(&id).unwrap(), id);

        let mut bad = id.clone();
        bad[2][1] = BigInt::from(3);
        assert!(invert_unitriangular(&bad).is_err());
        let mut bad2 = id;
        bad2[1][1] = BigInt::from(2);
        assert!(invert_unitriangular(&bad2).is_err());
    }

    #[test]
    fn inverse_times_matrix_is_identity() {
        for n in 1..=7u64 {
            let q = quasi_kostka_matrix(n, None);
            let inv = q.inverse();
            let d = q.dim();
            for i in 0..d {
                for j in 0..d {
                    let mut acc = BigInt::zero();
                    for k in 0..d {
                        acc += BigInt::from(q.entry(i, k)) * &inv[k][j];
                    }
                    assert_eq!(acc, BigInt::from(u64::from(i == j)), "({i},{j}) n={n}");
                }
            }
        }
    }

    #[test]
    fn chains_match_paper_example() {
        let chains = enumerate_chains(&p(&[4, 1, 1, 1]), &p(&[2, 2, 2, 1]));
        assert_eq!(chains.len(), 3);
        let mut signs: Vec<i64> = chains.iter().map(|c| c.sign()).collect();
        signs.sort_unstable();
        assert_eq!(signs, vec![-1, 1, 1]);
        assert_eq!(
            chain_signed_sum(&p(&[4, 1, 1, 1]), &p(&[2, 2, 2, 1])),
            BigInt::from(1)
        );
    }

    #[test]
    fn chain_from_shape_to_itself_is_superstandard() {
        for n in 1..=6u64 {
            for lam in partitions_of(n, None, None) {
                let chains = enumerate_chains(&lam, &lam);
                assert_eq!(chains.len(), 1, "shape {lam}");
                assert_eq!(chains[0].len(), 1);
                assert_eq!(chains[0].sign(), 1);
                assert_eq!(chains[0].weight(), lam);
            }
        }
    }

    #[test]
    fn chain_sums_equal_inverse_entries_n5() {
        let q = quasi_kostka_matrix(5, None);
        let inv = q.inverse();
        let index = q.index();
        for (i, mu) in index.iter().enumerate() {
            for (j, lam) in index.iter().enumerate() {
                assert_eq!(
                    chain_signed_sum(mu, lam),
                    inv[i][j],
                    "chains({mu},{lam}) vs inverse"
                );
            }
        }
        // the worked two-step example: chains from (3,2) sum to -s(2,2,1)+s(3,2)
        let i32_ = index.iter().position(|x| x == &p(&[3, 2])).unwrap();
        let j221 = index.iter().position(|x| x == &p(&[2, 2, 1])).unwrap();
        assert_eq!(inv[i32_][j221], BigInt::from(-1));
    }

    #[test]
    fn converts_worked_example() {
        let f = f_of(
            5,
            &[
                (&[1, 2, 2], 1),
                (&[1, 3, 1], 1),
                (&[1, 4], 1),
                (&[2, 2, 1], 1),
                (&[2, 3], 2),
                (&[3, 2], 2),
                (&[4, 1], 1),
            ],
        );
        let want = {
            let mut s = SymFunc::zero(5, Basis::S);
            s.add_term(&[3, 2], &BigInt::one());
            s.add_term(&[4, 1], &BigInt::one());
            s
        };
        assert_eq!(f_to_schur(&f, ConvertOptions::default()).unwrap(), want);
        assert_eq!(f_to_schur_via_chains(&f, false).unwrap(), want);
    }

    #[test]
    fn via_chains_substitution_pieces() {
        // F(4,1) contributes s(2,2,1) - s(3,2) + s(4,1)
        let contributions = enumerate_all_chains_from(&p(&[4, 1]));
        let mut s = SymFunc::zero(5, Basis::S);
        for ch in &contributions {
            s.add_term(ch.weight().parts(), &BigInt::from(ch.sign()));
        }
        let mut want = SymFunc::zero(5, Basis::S);
        want.add_term(&[2, 2, 1], &BigInt::one());
        want.add_term(&[3, 2], &BigInt::from(-1));
        want.add_term(&[4, 1], &BigInt::one());
        assert_eq!(s, want);

        // F(2,2,1) contributes s(2,2,1) only
        let only = enumerate_all_chains_from(&p(&[2, 2, 1]));
        assert_eq!(only.len(), 1);
        assert_eq!(only[0].weight(), p(&[2, 2, 1]));
    }

    #[test]
    fn round_trip_on_schur_functions() {
        for n in 1..=7u64 {
            for lam in partitions_of(n, None, None) {
                let f = schur_to_f(&lam);
                let s = f_to_schur(&f, ConvertOptions::default()).unwrap();
                assert_eq!(s.num_terms(), 1, "schur_to_f({lam}) converts back");
                assert_eq!(s.coeff(lam.parts()), BigInt::one());
            }
        }
    }

    #[test]
    fn lex_max_support_coefficient_carries_over() {
        // b_nu = c_nu for the lex-max support element
        let f = schur_to_f(&p(&[3, 2])).scale(&BigInt::from(4));
        let s = f_to_schur(&f, ConvertOptions::default()).unwrap();
        assert_eq!(s.coeff(&[3, 2]), f.coeff(&[3, 2]));
    }

    #[test]
    fn asymmetric_input_rejected() {
        let f = f_of(3, &[(&[2, 1], 1)]);
        assert!(matches!(
            f_to_schur(&f, ConvertOptions::default()),
            Err(Error::NotSymmetric)
        ));
        // skipping the check lets the round trip catch it instead
        let opts = ConvertOptions {
            skip_symmetry_check: true,
            max_len: None,
        };
        assert!(matches!(f_to_schur(&f, opts), Err(Error::RoundTripFailed(_))));
    }

    #[test]
    fn wrong_max_len_claim_fails_round_trip() {
        let f = schur_to_f(&p(&[2, 2, 1])); // length 3
        let opts = ConvertOptions {
            skip_symmetry_check: false,
            max_len: Some(2),
        };
        assert!(matches!(f_to_schur(&f, opts), Err(Error::RoundTripFailed(_))));
    }

    #[test]
    fn triangular_vanishing_and_hook_sparsity() {
        for n in 1..=7u64 {
            let q = quasi_kostka_matrix(n, None);
            let inv = q.inverse();
            let index = q.index();
            for (i, mu) in index.iter().enumerate() {
                for (j, lam) in index.iter().enumerate() {
                    if dominance_leq(mu, lam) && mu != lam {
                        assert_eq!(q.entry(j, i), 0, "QK({lam},{mu}) with {lam} < {mu}");
                        assert!(inv[i][j].is_zero(), "Qinv({mu},{lam}) with {lam} > {mu}");
                    }
                    let is_hook = lam.part(0) as u64 + lam.len() as u64 - 1 == n
                        || lam.len() <= 1;
                    if is_hook && mu != lam {
                        assert!(inv[i][j].is_zero(), "hook column ({mu},{lam})");
                    }
                }
            }
        }
    }

    #[test]
    fn submatrix_inverse_commutes() {
        for n in 1..=7u64 {
            let full = quasi_kostka_matrix(n, None);
            let full_inv = full.inverse();
            for m in 1..=n as usize {
                let sub = quasi_kostka_matrix(n, Some(m));
                let sub_inv = sub.inverse();
                // embed: positions of the restricted index inside the full one
                let pos: Vec<usize> = sub
                    .index()
                    .iter()
                    .map(|p| full.index().iter().position(|q| q == p).unwrap())
                    .collect();
                for (a, &i) in pos.iter().enumerate() {
                    for (b, &j) in pos.iter().enumerate() {
                        assert_eq!(sub.entry(a, b), full.entry(i, j), "Q n={n} m={m}");
                        assert_eq!(sub_inv[a][b], full_inv[i][j], "Qinv n={n} m={m}");
                    }
                }
            }
        }
    }
}
