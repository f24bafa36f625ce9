//! Plethysm of Schur functions: standard tableaux of tableaux, dynamic
//! reading words, the fundamental expansion, leading terms, and the
//! two-variable expansion of s_w[s_h] by three independent routes.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Composition, Partition};
use crate::qk::{f_to_schur, ConvertOptions};
use crate::symfunc::{cmp_index_revlex, Basis, SymFunc};
use crate::tableau::{enumerate_syt, Tableau};

/// Default bound on `|lambda| * |mu|` for tableau-of-tableaux enumeration.
pub const DEFAULT_SIZE_GUARD: u64 = 16;

/// A standard tableau of tableaux: an outer-shape filling whose entries are
/// inner-shape tableaux, globally standard. Outer rows are French (bottom
/// row first); inner tableaux in the same outer row increase left to right
/// and strictly up columns in lexicographic order of their row reading words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableauOfTableaux {
    outer: Partition,
    inner: Partition,
    filling: Vec<Vec<Tableau>>,
}

impl TableauOfTableaux {
    pub fn new(outer: Partition, inner: Partition, filling: Vec<Vec<Tableau>>) -> Result<Self> {
        let t = TableauOfTableaux {
            outer,
            inner,
            filling,
        };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        let total = self.outer.size() * self.inner.size();
        if self.filling.len() != self.outer.len() {
            return Err(Error::InvalidTableau("outer row count mismatch".into()));
        }
        let mut seen = vec![false; total as usize + 1];
        for (r, row) in self.filling.iter().enumerate() {
            if row.len() != self.outer.part(r) as usize {
                return Err(Error::InvalidTableau(format!("outer row {} length mismatch", r + 1)));
            }
            for t in row {
                if t.shape() != self.inner {
                    return Err(Error::InvalidTableau("inner shape mismatch".into()));
                }
                for &e in t.reading_word().iter() {
                    if e == 0 || e as u64 > total || seen[e as usize] {
                        return Err(Error::InvalidTableau(format!(
                            "entries must be exactly 1..{total} without repeats"
                        )));
                    }
                    seen[e as usize] = true;
                }
            }
        }
        // outer semistandard with respect to lex order on row reading words:
        // all entries are distinct so both comparisons are strict
        let word = |t: &Tableau| row_reading_word(t);
        for (r, row) in self.filling.iter().enumerate() {
            for (c, t) in row.iter().enumerate() {
                if c > 0 && word(&row[c - 1]) > word(t) {
                    return Err(Error::InvalidTableau("outer row not increasing".into()));
                }
                if r > 0 && word(&self.filling[r - 1][c]) >= word(t) {
                    return Err(Error::InvalidTableau("outer column not increasing".into()));
                }
            }
        }
        Ok(())
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn filling(&self) -> &[Vec<Tableau>] {
        &self.filling
    }

    /// The flat matrix: one row per outer cell read top to bottom, left to
    /// right; each row is that cell's row reading word.
    pub fn matrix(&self) -> Vec<Vec<u32>> {
        let mut rows = Vec::with_capacity(self.outer.len());
        for row in self.filling.iter().rev() {
            for t in row {
                rows.push(row_reading_word(t));
            }
        }
        rows
    }
}

/// Row reading word of a tableau: rows top to bottom, left to right.
fn row_reading_word(t: &Tableau) -> Vec<u32> {
    t.rows().iter().rev().flat_map(|r| r.iter().copied()).collect()
}

/// Visits every standard tableau of tableaux of the given outer and inner
/// shapes, in a deterministic order.
///
/// Enumeration works in two stages: partition 1..N into disjoint standard
/// fillings of the inner shape (placing values in increasing order, opening
/// copies in order of their minima), then arrange each resulting set into
/// the outer shape; the valid arrangements correspond to standard tableaux
/// of the outer shape via the total lex order on the distinct inner words.
pub fn for_each_stot<F: FnMut(&TableauOfTableaux)>(
    lam: &Partition,
    mu: &Partition,
    guard: Option<u64>,
    mut visit: F,
) -> Result<()> {
    let guard = guard.unwrap_or(DEFAULT_SIZE_GUARD);
    let total = lam.size() * mu.size();
    if total > guard {
        return Err(Error::SizeGuardExceeded {
            size: total,
            guard,
        });
    }
    if lam.is_empty() || mu.is_empty() {
        // a single empty tableau of tableaux
        let t = TableauOfTableaux {
            outer: lam.clone(),
            inner: mu.clone(),
            filling: vec![vec![]; lam.len()],
        };
        visit(&t);
        return Ok(());
    }

    let copies = lam.size() as usize;
    let outer_syt = enumerate_syt(lam);
    let mu_rows = mu.len();

    // partial fillings: per copy, the current length of each inner row and
    // the entries placed so far
    let mut fills: Vec<Vec<Vec<u32>>> = vec![vec![Vec::new(); mu_rows]; copies];
    let mut started = 0usize;

    struct Ctx<'a> {
        mu: &'a Partition,
        lam: &'a Partition,
        total: u64,
        outer_syt: &'a [Tableau],
    }

    fn rec<F: FnMut(&TableauOfTableaux)>(
        ctx: &Ctx,
        v: u32,
        fills: &mut Vec<Vec<Vec<u32>>>,
        started: &mut usize,
        visit: &mut F,
    ) {
        if v as u64 > ctx.total {
            emit(ctx, fills, visit);
            return;
        }
        let limit = *started;
        for k in 0..limit {
            for r in 0..ctx.mu.len() {
                let len = fills[k][r].len();
                if len < ctx.mu.part(r) as usize && (r == 0 || fills[k][r - 1].len() > len) {
                    fills[k][r].push(v);
                    rec(ctx, v + 1, fills, started, visit);
                    fills[k][r].pop();
                }
            }
        }
        if *started < fills.len() {
            // open the next copy; v becomes its minimum
            let k = *started;
            *started += 1;
            fills[k][0].push(v);
            rec(ctx, v + 1, fills, started, visit);
            fills[k][0].pop();
            *started -= 1;
        }
    }

    fn emit<F: FnMut(&TableauOfTableaux)>(ctx: &Ctx, fills: &[Vec<Vec<u32>>], visit: &mut F) {
        let tableaux: Vec<Tableau> = fills
            .iter()
            .map(|rows| Tableau::new(rows.clone()).expect("DFS placements are valid fillings"))
            .collect();
        let mut order: Vec<usize> = (0..tableaux.len()).collect();
        let words: Vec<Vec<u32>> = tableaux.iter().map(row_reading_word).collect();
        order.sort_by(|&a, &b| words[a].cmp(&words[b]));
        for q in ctx.outer_syt {
            let filling: Vec<Vec<Tableau>> = q
                .rows()
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|&e| tableaux[order[e as usize - 1]].clone())
                        .collect()
                })
                .collect();
            let t = TableauOfTableaux {
                outer: ctx.lam.clone(),
                inner: ctx.mu.clone(),
                filling,
            };
            debug_assert!(t.validate().is_ok());
            visit(&t);
        }
    }

    let ctx = Ctx {
        mu,
        lam,
        total,
        outer_syt: &outer_syt,
    };
    rec(&ctx, 1, &mut fills, &mut started, &mut visit);
    Ok(())
}

/// All standard tableaux of tableaux, materialized.
pub fn enumerate_stot(
    lam: &Partition,
    mu: &Partition,
    guard: Option<u64>,
) -> Result<Vec<TableauOfTableaux>> {
    let mut out = Vec::new();
    for_each_stot(lam, mu, guard, |t| out.push(t.clone()))?;
    Ok(out)
}

/// Dynamic reading word of a flat matrix: each column except the last is
/// emitted with its rows ordered by the next column's symbols ascending; the
/// last column is emitted top to bottom.
pub fn dynamic_word_of_matrix(a: &[Vec<u32>]) -> Vec<u32> {
    if a.is_empty() {
        return Vec::new();
    }
    let rows = a.len();
    let cols = a[0].len();
    let mut word = Vec::with_capacity(rows * cols);
    for k in 0..cols {
        if k + 1 < cols {
            let mut order: Vec<usize> = (0..rows).collect();
            order.sort_by_key(|&r| a[r][k + 1]);
            for r in order {
                word.push(a[r][k]);
            }
        } else {
            for row in a {
                word.push(row[k]);
            }
        }
    }
    word
}

/// Dynamic reading word of a tableau of tableaux.
pub fn dynamic_reading_word(t: &TableauOfTableaux) -> Vec<u32> {
    dynamic_word_of_matrix(&t.matrix())
}

/// Composition recording the inverse descent set of a permutation word:
/// the descents are the values `i` whose position is after that of `i+1`.
pub fn inverse_descent_composition(word: &[u32]) -> Result<Composition> {
    let n = word.len() as u64;
    let mut pos = vec![usize::MAX; word.len() + 1];
    for (i, &v) in word.iter().enumerate() {
        if v == 0 || v as u64 > n || pos[v as usize] != usize::MAX {
            return Err(Error::NotPermutation);
        }
        pos[v as usize] = i;
    }
    let descents: Vec<u64> = (1..n)
        .filter(|&i| pos[i as usize] > pos[i as usize + 1])
        .collect();
    Ok(Composition::from_descent_set(&descents, n))
}

/// Fundamental quasisymmetric expansion of s_lambda[s_mu], summing
/// F_{iDes(dynamic(T))} over all standard tableaux of tableaux.
pub fn plethysm_f(lam: &Partition, mu: &Partition, guard: Option<u64>) -> Result<SymFunc> {
    let mut out = SymFunc::zero(lam.size() * mu.size(), Basis::F);
    let one = BigInt::one();
    for_each_stot(lam, mu, guard, |t| {
        let word = dynamic_reading_word(t);
        let ides = inverse_descent_composition(&word).expect("dynamic word is a permutation");
        out.add_term(ides.parts(), &one);
    })?;
    Ok(out)
}

/// The lexicographically largest partition with nonzero coefficient in
/// s_lambda[s_mu]; its coefficient is 1.
pub fn leading_term(lam: &Partition, mu: &Partition) -> Result<Partition> {
    if lam.is_empty() || mu.is_empty() {
        return Err(Error::EmptyInput("leading_term needs nonempty shapes"));
    }
    let n = lam.size();
    let k = mu.len();
    let mut parts: Vec<u64> = Vec::with_capacity(k + lam.len() - 1);
    for i in 0..k - 1 {
        parts.push(n * mu.part(i) as u64);
    }
    parts.push(n * mu.part(k - 1) as u64 - n + lam.part(0) as u64);
    for i in 1..lam.len() {
        parts.push(lam.part(i) as u64);
    }
    let parts: Vec<u32> = parts.into_iter().map(|p| p as u32).collect();
    Ok(Partition::new(parts).expect("leading term is a partition"))
}

/// The second-largest partition in lexicographic order with nonzero
/// coefficient, defined when the smallest part of `mu` exceeds 1 and `lam`
/// has more than two parts; its coefficient is 1.
///
/// For inputs within the size guard the closed form is cross-validated
/// against the full expansion; a mismatch aborts with a diagnostic.
pub fn second_leading_term(
    lam: &Partition,
    mu: &Partition,
    guard: Option<u64>,
) -> Result<Option<Partition>> {
    if lam.is_empty() || mu.is_empty() {
        return Err(Error::EmptyInput("second_leading_term needs nonempty shapes"));
    }
    let ell = lam.len();
    let k = mu.len();
    if mu.part(k - 1) <= 1 || ell <= 2 {
        return Ok(None);
    }
    let n = lam.size();
    let mut parts: Vec<u64> = Vec::with_capacity(k + ell);
    for i in 0..k - 1 {
        parts.push(n * mu.part(i) as u64);
    }
    parts.push(n * mu.part(k - 1) as u64 - n + lam.part(0) as u64 - 1);
    parts.push(lam.part(1) as u64 + 2);
    for i in 2..ell - 1 {
        parts.push(lam.part(i) as u64);
    }
    parts.push(lam.part(ell - 1) as u64 - 1);
    while parts.last() == Some(&0) {
        parts.pop();
    }
    let kappa = Partition::new(parts.into_iter().map(|p| p as u32).collect())
        .expect("second leading term is a partition");

    let total = lam.size() * mu.size();
    if total <= guard.unwrap_or(DEFAULT_SIZE_GUARD) {
        let f = plethysm_f(lam, mu, guard)?;
        let schur = f_to_schur(&f, ConvertOptions::default())?;
        let mut support = schur.partition_support();
        support.sort_by(|a, b| cmp_index_revlex(a.parts(), b.parts()));
        assert!(
            support.len() >= 2,
            "second_leading_term({lam},{mu}): expansion has fewer than two terms"
        );
        let nu = leading_term(lam, mu)?;
        assert_eq!(
            support[0], nu,
            "second_leading_term({lam},{mu}): leading term mismatch"
        );
        assert_eq!(
            support[1], kappa,
            "second_leading_term({lam},{mu}): closed form {kappa} disagrees with expansion {}",
            support[1]
        );
        assert!(
            schur.coeff(kappa.parts()).is_one(),
            "second_leading_term({lam},{mu}): coefficient of {kappa} is not 1"
        );
    }
    Ok(Some(kappa))
}

/// Number of partitions of `lam2` inside L(w,h) that are not of the form
/// (w^k, a).
pub fn two_var_c(lam2: u64, w: u32, h: u32) -> u64 {
    partitions_of(lam2, Some(h as usize), Some(w))
        .iter()
        .filter(|p| !is_full_column_form(p, w))
        .count() as u64
}

/// True for partitions of the form (w^k, a) with 0 <= a < w, including the
/// empty partition.
fn is_full_column_form(p: &Partition, w: u32) -> bool {
    let parts = p.parts();
    parts
        .iter()
        .enumerate()
        .all(|(i, &v)| v == w || i + 1 == parts.len())
}

/// Homogeneous two-row Schur expansion: coefficients a_{(d-k, k)} keyed by
/// the smaller part k, all exact integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoRowPoly {
    degree: u64,
    coeffs: BTreeMap<u64, BigInt>,
}

impl TwoRowPoly {
    pub fn zero(degree: u64) -> Self {
        TwoRowPoly {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn coeff(&self, lam2: u64) -> BigInt {
        self.coeffs.get(&lam2).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_coeff(&mut self, lam2: u64, c: &BigInt) {
        assert!(2 * lam2 <= self.degree, "index ({}, {lam2}) is not a partition", self.degree - lam2);
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(lam2).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&lam2);
        }
    }

    /// Terms as ((lam1, lam2), coeff) sorted by descending lam1.
    pub fn terms(&self) -> Vec<((u64, u64), BigInt)> {
        self.coeffs
            .iter()
            .map(|(&k, c)| ((self.degree - k, k), c.clone()))
            .collect()
    }

    pub fn to_symfunc(&self) -> SymFunc {
        let mut out = SymFunc::zero(self.degree, Basis::S);
        for ((a, b), c) in self.terms() {
            let mut idx = Vec::new();
            if a > 0 {
                idx.push(a as u32);
            }
            if b > 0 {
                idx.push(b as u32);
            }
            out.add_term(&idx, &c);
        }
        out
    }

    /// Extracts the at-most-two-row part of a Schur-basis value.
    pub fn from_symfunc_truncated(f: &SymFunc) -> Self {
        assert_eq!(f.basis(), Basis::S, "expects the Schur basis");
        let mut out = TwoRowPoly::zero(f.degree());
        for (idx, c) in f.iter() {
            if idx.len() <= 2 {
                let b = idx.get(1).copied().unwrap_or(0) as u64;
                out.add_coeff(b, c);
            }
        }
        out
    }

    pub fn to_json(&self, w: u32, h: u32) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms()
            .into_iter()
            .map(|((a, b), c)| {
                serde_json::json!({ "index": [a, b], "coeff": c.to_string() })
            })
            .collect();
        serde_json::json!({ "w": w, "h": h, "terms": terms })
    }
}

/// Method selector for the two-variable plethysm expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwoVarMethod {
    /// Counting formula over partitions in the box.
    Formula,
    /// Minimal elements of the symmetric chain decomposition (w <= 4).
    Scd,
    /// Monomial substitution into h_w, fully independent of the tableau
    /// pipeline.
    Oracle,
}

/// Schur expansion of s_w[s_h] in two variables.
pub fn two_var_plethysm(w: u32, h: u32, method: TwoVarMethod) -> Result<TwoRowPoly> {
    assert!(w >= 1, "two_var_plethysm needs w >= 1");
    match method {
        TwoVarMethod::Formula => Ok(two_var_formula(w, h)),
        TwoVarMethod::Oracle => {
            let p = substitute_h_w(w, h);
            schur_two_rows(&p)
        }
        TwoVarMethod::Scd => crate::scd::scd_coefficients(w, h),
    }
}

fn two_var_formula(w: u32, h: u32) -> TwoRowPoly {
    let degree = w as u64 * h as u64;
    let mut out = TwoRowPoly::zero(degree);
    out.add_coeff(0, &BigInt::one());
    for lam2 in 1..=degree / 2 {
        let a = two_var_c(lam2, w, h) as i64 - two_var_c(lam2 - 1, w, h) as i64;
        out.add_coeff(lam2, &BigInt::from(a));
    }
    out
}

/// A homogeneous bivariate polynomial with exact integer coefficients,
/// keyed by (x-exponent, y-exponent).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariatePoly {
    degree: u64,
    coeffs: BTreeMap<(u64, u64), BigInt>,
}

impl BivariatePoly {
    pub fn zero(degree: u64) -> Self {
        BivariatePoly {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn add_term(&mut self, a: u64, b: u64, c: &BigInt) {
        assert_eq!(a + b, self.degree, "term x^{a} y^{b} has wrong degree");
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry((a, b)).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&(a, b));
        }
    }

    pub fn coeff(&self, a: u64, b: u64) -> BigInt {
        self.coeffs
            .get(&(a, b))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.coeffs
            .iter()
            .all(|(&(a, b), c)| self.coeff(b, a) == *c)
    }
}

/// h_w evaluated at the h+1 monomials x^h, x^{h-1}y, ..., y^h: the monomials
/// of s_h(x,y) all carry coefficient 1, so this is s_w[s_h](x,y).
pub fn substitute_h_w(w: u32, h: u32) -> BivariatePoly {
    let degree = w as u64 * h as u64;
    let mut out = BivariatePoly::zero(degree);
    let one = BigInt::one();
    // multisets of size w from {0..=h}: k_i copies of the monomial x^(h-i) y^i
    fn rec(
        i: u64,
        left: u64,
        h: u64,
        a: u64,
        b: u64,
        out: &mut BivariatePoly,
        one: &BigInt,
    ) {
        if i == h {
            out.add_term(a + left * (h - i), b + left * i, one);
            return;
        }
        for k in 0..=left {
            rec(i + 1, left - k, h, a + k * (h - i), b + k * i, out, one);
        }
    }
    rec(0, w as u64, h as u64, 0, 0, &mut out, &one);
    out
}

/// Decomposes a symmetric homogeneous bivariate polynomial into two-row
/// Schur polynomials: a_{(a,b)} = [x^a y^b]P - [x^{a+1} y^{b-1}]P. The
/// reconstruction is verified exactly.
pub fn schur_two_rows(p: &BivariatePoly) -> Result<TwoRowPoly> {
    if !p.is_symmetric() {
        return Err(Error::AsymmetricPolynomial);
    }
    let d = p.degree();
    let mut out = TwoRowPoly::zero(d);
    for b in 0..=d / 2 {
        let a = d - b;
        let c = if b == 0 {
            p.coeff(a, 0)
        } else {
            p.coeff(a, b) - p.coeff(a + 1, b - 1)
        };
        out.add_coeff(b, &c);
    }
    // reconstruction: sum of a_{(a,b)} s_{(a,b)}(x,y) must equal P, where
    // s_{(a,b)}(x,y) = x^a y^b + x^{a-1} y^{b+1} + ... + x^b y^a
    let mut rebuilt = BivariatePoly::zero(d);
    for ((a, b), c) in out.terms() {
        for j in b..=a {
            rebuilt.add_term(d - j, j, &c);
        }
    }
    if rebuilt != *p {
        return Err(Error::CrossCheck(
            "two-row Schur reconstruction differs from input".into(),
        ));
    }
    Ok(out)
}

/// Drops Schur terms with more than two rows.
pub fn truncate_two_rows(f: &SymFunc) -> SymFunc {
    assert_eq!(f.basis(), Basis::S, "truncate_two_rows expects the Schur basis");
    let mut out = SymFunc::zero(f.degree(), Basis::S);
    for (idx, c) in f.iter() {
        if idx.len() <= 2 {
            out.add_term(idx, c);
        }
    }
    out
}

/// The shift s_a ⊙ f: adds `a` componentwise to every Schur index of `f`.
pub fn shift_add(a: &Partition, f: &SymFunc) -> SymFunc {
    assert_eq!(f.basis(), Basis::S, "shift_add expects the Schur basis");
    let mut out = SymFunc::zero(f.degree() + a.size(), Basis::S);
    for (idx, c) in f.iter() {
        let lam = Partition::new(idx.to_vec()).expect("Schur index is a partition");
        let shifted = a.componentwise_add(&lam);
        out.add_term(shifted.parts(), c);
    }
    out
}
