//! Semistandard, standard, and quasi-Yamanouchi tableaux in French notation
//! (row 1 at the bottom; columns increase strictly upward), together with
//! descent compositions and the standardization bijection.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::{Composition, Partition};

/// A semistandard filling. `rows[0]` is the bottom row.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let t = Tableau { rows };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        for (r, row) in self.rows.iter().enumerate() {
            if row.is_empty() {
                return Err(Error::InvalidTableau(format!("empty row {}", r + 1)));
            }
            if row.iter().any(|&e| e == 0) {
                return Err(Error::InvalidTableau("entries must be positive".into()));
            }
            if !row.windows(2).all(|w| w[0] <= w[1]) {
                return Err(Error::InvalidTableau(format!(
                    "row {} not weakly increasing: {row:?}",
                    r + 1
                )));
            }
            if r > 0 {
                if row.len() > self.rows[r - 1].len() {
                    return Err(Error::InvalidTableau("row lengths must weakly decrease upward".into()));
                }
                for c in 0..row.len() {
                    if row[c] <= self.rows[r - 1][c] {
                        return Err(Error::InvalidTableau(format!(
                            "column {} not strictly increasing upward",
                            c + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len() as u32).collect())
            .expect("tableau rows weakly decrease in length")
    }

    pub fn size(&self) -> u64 {
        self.rows.iter().map(|r| r.len() as u64).sum()
    }

    pub fn max_entry(&self) -> u32 {
        self.rows
            .iter()
            .flat_map(|r| r.iter().copied())
            .max()
            .unwrap_or(0)
    }

    /// Weight vector `wt[i-1]` = number of entries equal to `i`, up to the
    /// largest entry (internal zeros kept).
    pub fn weight(&self) -> Vec<u32> {
        let mut wt = vec![0u32; self.max_entry() as usize];
        for row in &self.rows {
            for &e in row {
                wt[e as usize - 1] += 1;
            }
        }
        wt
    }

    /// The weight as a composition; `None` when the weight vector has an
    /// internal zero.
    pub fn weight_composition(&self) -> Option<Composition> {
        let wt = self.weight();
        if wt.iter().any(|&c| c == 0) {
            return None;
        }
        Some(Composition::new(wt).expect("positive weight parts"))
    }

    pub fn is_standard(&self) -> bool {
        let n = self.size();
        self.weight() == vec![1u32; n as usize]
    }

    /// Reading word: rows bottom to top, left to right within a row. Used as
    /// the enumeration order key.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().flat_map(|r| r.iter().copied()).collect()
    }

    /// Row of each entry value, for standard tableaux: `row_of[v-1]` is the
    /// 1-based row containing `v`.
    fn row_positions(&self) -> Result<Vec<u32>> {
        if !self.is_standard() {
            return Err(Error::NotStandard);
        }
        let mut pos = vec![0u32; self.size() as usize];
        for (r, row) in self.rows.iter().enumerate() {
            for &e in row {
                pos[e as usize - 1] = r as u32 + 1;
            }
        }
        Ok(pos)
    }
}

impl fmt::Display for Tableau {
    /// Textual form: rows bottom to top, semicolon separated, e.g.
    /// `[1,1,2,3;2,3;4]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                write!(f, ";")?;
            }
            for (c, e) in row.iter().enumerate() {
                if c > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Core backtracking enumerator. Cells are filled in reading order (bottom
/// row left to right, then the next row up), trying smaller letters first, so
/// the output is in lexicographic order of the reading word.
///
/// `remaining[i]` bounds the number of further entries `i+1` (weight mode);
/// in bounded mode any letter up to `max_entry` may be used freely.
fn enumerate_fillings(shape: &Partition, weight: Option<&[u32]>, max_entry: u32) -> Vec<Tableau> {
    let nrows = shape.len();
    if nrows == 0 {
        return vec![Tableau { rows: Vec::new() }];
    }
    let mut rows: Vec<Vec<u32>> = (0..nrows)
        .map(|r| Vec::with_capacity(shape.part(r) as usize))
        .collect();
    let mut remaining: Vec<u32> = weight.map(|w| w.to_vec()).unwrap_or_default();
    let mut out = Vec::new();

    struct Ctx<'a> {
        shape: &'a Partition,
        weight_mode: bool,
        max_entry: u32,
    }

    fn rec(ctx: &Ctx, r: usize, rows: &mut Vec<Vec<u32>>, remaining: &mut Vec<u32>, out: &mut Vec<Tableau>) {
        if r == ctx.shape.len() {
            out.push(Tableau { rows: rows.clone() });
            return;
        }
        let c = rows[r].len();
        if c == ctx.shape.part(r) as usize {
            rec(ctx, r + 1, rows, remaining, out);
            return;
        }
        let mut lo = 1u32;
        if c > 0 {
            lo = lo.max(rows[r][c - 1]); // weakly increasing along the row
        }
        if r > 0 {
            lo = lo.max(rows[r - 1][c] + 1); // strictly increasing up the column
        }
        for e in lo..=ctx.max_entry {
            if ctx.weight_mode {
                let slot = &mut remaining[e as usize - 1];
                if *slot == 0 {
                    continue;
                }
                *slot -= 1;
            }
            rows[r].push(e);
            rec(ctx, r, rows, remaining, out);
            rows[r].pop();
            if ctx.weight_mode {
                remaining[e as usize - 1] += 1;
            }
        }
    }

    let ctx = Ctx {
        shape,
        weight_mode: weight.is_some(),
        max_entry,
    };
    rec(&ctx, 0, &mut rows, &mut remaining, &mut out);
    out
}

/// All semistandard tableaux of the given shape and weight.
///
/// Panics if `|shape| != |weight|` (contract violation).
pub fn enumerate_ssyt(shape: &Partition, weight: &Composition) -> Vec<Tableau> {
    assert_eq!(shape.size(), weight.size(), "shape and weight sizes differ");
    enumerate_fillings(shape, Some(weight.parts()), weight.len() as u32)
}

/// All semistandard tableaux of the given shape with entries at most
/// `max_entry`.
pub fn enumerate_ssyt_bounded(shape: &Partition, max_entry: u32) -> Vec<Tableau> {
    enumerate_fillings(shape, None, max_entry)
}

/// Descent composition of a standard tableau: `i` is a descent when `i+1`
/// lies in a strictly higher row.
pub fn descent_composition(t: &Tableau) -> Result<Composition> {
    let pos = t.row_positions()?;
    let n = t.size();
    let descents: Vec<u64> = (1..n)
        .filter(|&i| pos[i as usize] > pos[i as usize - 1])
        .collect();
    Ok(Composition::from_descent_set(&descents, n))
}

/// Standardization: the letters `i` are replaced from left to right (in
/// increasing column order) by consecutive numbers.
pub fn standardize(t: &Tableau) -> Tableau {
    let wt = t.weight();
    let mut offset = vec![0u32; wt.len() + 1];
    for i in 0..wt.len() {
        offset[i + 1] = offset[i] + wt[i];
    }
    // For each letter, occurrences sorted by column index. Equal letters in
    // an SSYT form a horizontal strip, so columns are distinct.
    let mut occurrences: Vec<Vec<(usize, usize)>> = vec![Vec::new(); wt.len()];
    for (r, row) in t.rows.iter().enumerate() {
        for (c, &e) in row.iter().enumerate() {
            occurrences[e as usize - 1].push((c, r));
        }
    }
    let mut rows = t.rows.clone();
    for (i, occ) in occurrences.iter_mut().enumerate() {
        occ.sort_unstable();
        for (k, &(c, r)) in occ.iter().enumerate() {
            rows[r][c] = offset[i] + k as u32 + 1;
        }
    }
    Tableau { rows }
}

/// De-standardization: letters in the block between consecutive descents are
/// replaced by a single letter. Inverse of `standardize` on standard
/// tableaux; the image is quasi-Yamanouchi.
pub fn destandardize(t: &Tableau) -> Result<Tableau> {
    let pos = t.row_positions()?;
    let n = t.size();
    let mut letter = vec![0u32; n as usize];
    let mut cur = 1u32;
    for i in 0..n as usize {
        if i > 0 && pos[i] > pos[i - 1] {
            cur += 1;
        }
        letter[i] = cur;
    }
    let rows = t
        .rows
        .iter()
        .map(|row| row.iter().map(|&e| letter[e as usize - 1]).collect())
        .collect();
    Ok(Tableau { rows })
}

/// True iff for every letter `i > 1` present, some `i` sits strictly higher
/// than some `i-1`.
pub fn is_quasi_yamanouchi(t: &Tableau) -> bool {
    let max = t.max_entry() as usize;
    if max == 0 {
        return true;
    }
    let mut min_row = vec![u32::MAX; max + 1];
    let mut max_row = vec![0u32; max + 1];
    let mut present = vec![false; max + 1];
    for (r, row) in t.rows.iter().enumerate() {
        for &e in row {
            let e = e as usize;
            present[e] = true;
            min_row[e] = min_row[e].min(r as u32 + 1);
            max_row[e] = max_row[e].max(r as u32 + 1);
        }
    }
    (2..=max).all(|i| !present[i] || (present[i - 1] && max_row[i] > min_row[i - 1]))
}

/// Quasi-Yamanouchi tableaux of a shape, optionally restricted by weight
/// and/or largest entry.
pub fn enumerate_qyt(
    shape: &Partition,
    weight: Option<&Composition>,
    max_entry: Option<u32>,
) -> Vec<Tableau> {
    let n = shape.size() as u32;
    let all = match weight {
        Some(w) => {
            assert_eq!(shape.size(), w.size(), "shape and weight sizes differ");
            enumerate_ssyt(shape, w)
        }
        // a quasi-Yamanouchi weight has no internal zeros, so entries stay <= n
        None => enumerate_ssyt_bounded(shape, max_entry.unwrap_or(n).min(n)),
    };
    all.into_iter()
        .filter(|t| {
            is_quasi_yamanouchi(t) && max_entry.map_or(true, |m| t.max_entry() <= m)
        })
        .collect()
}

/// The quasi-Kostka number: quasi-Yamanouchi tableaux of the given shape and
/// weight.
///
/// Panics if `|shape| != |alpha|` (contract violation).
pub fn quasi_kostka(shape: &Partition, alpha: &Composition) -> u64 {
    enumerate_qyt(shape, Some(alpha), None).len() as u64
}

/// Standard tableaux of a shape.
pub fn enumerate_syt(shape: &Partition) -> Vec<Tableau> {
    let n = shape.size();
    let weight = Composition::new(vec![1u32; n as usize]).expect("all-ones weight");
    enumerate_ssyt(shape, &weight)
}
