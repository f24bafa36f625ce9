//! The box lattice L(w,h): partitions with first part at most `w` and at most
//! `h` parts, graded by size and ordered by containment.

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoxLattice {
    w: u32,
    h: u32,
}

impl BoxLattice {
    pub fn new(w: u32, h: u32) -> Self {
        BoxLattice { w, h }
    }

    pub fn width(&self) -> u32 {
        self.w
    }

    pub fn height(&self) -> u32 {
        self.h
    }

    pub fn max_rank(&self) -> u64 {
        self.w as u64 * self.h as u64
    }

    pub fn contains(&self, p: &Partition) -> bool {
        p.part(0) <= self.w && p.len() <= self.h as usize
    }

    /// All elements grouped by rank: group `k` holds the partitions of size
    /// `k`, each group in reverse lexicographic order.
    pub fn elements_by_rank(&self) -> Vec<Vec<Partition>> {
        (0..=self.max_rank())
            .map(|k| partitions_of(k, Some(self.h as usize), Some(self.w)))
            .collect()
    }

    /// All elements in rank order.
    pub fn elements(&self) -> Vec<Partition> {
        self.elements_by_rank().into_iter().flatten().collect()
    }

    /// The complement (w - λ_h, ..., w - λ_1) with zeros stripped.
    pub fn complement(&self, p: &Partition) -> Result<Partition> {
        if !self.contains(p) {
            return Err(Error::OutsideBox {
                partition: p.to_string(),
                w: self.w,
                h: self.h,
            });
        }
        let parts: Vec<u32> = (0..self.h as usize)
            .rev()
            .map(|i| self.w - p.part(i))
            .filter(|&v| v > 0)
            .collect();
        Ok(Partition::new(parts).expect("complement of a box element is a partition"))
    }

    /// Covers of `p` inside the box, each with the column index of the added
    /// cell (the conjugate coordinate of the new box). Ordered by descending
    /// column.
    ///
    /// Panics if `p` is not a box element (contract violation).
    pub fn covers(&self, p: &Partition) -> Vec<(Partition, u32)> {
        assert!(self.contains(p), "covers: {p} outside {}x{} box", self.w, self.h);
        let mut out = Vec::new();
        for i in 0..p.len() {
            let v = p.part(i);
            if v < self.w && (i == 0 || p.part(i - 1) > v) {
                let mut parts = p.parts().to_vec();
                parts[i] += 1;
                out.push((Partition::new(parts).unwrap(), v + 1));
            }
        }
        if p.len() < self.h as usize {
            let mut parts = p.parts().to_vec();
            parts.push(1);
            out.push((Partition::new(parts).unwrap(), 1));
        }
        out
    }
}

/// Column index of the single added cell between `a` and its cover `b`.
///
/// Panics unless `b` covers `a` (contract violation).
pub fn cover_column(a: &Partition, b: &Partition) -> u32 {
    assert_eq!(b.size(), a.size() + 1, "cover_column: {b} does not cover {a}");
    let mut col = None;
    for i in 0..b.len() {
        if b.part(i) != a.part(i) {
            assert!(
                col.is_none() && b.part(i) == a.part(i) + 1,
                "cover_column: {b} does not cover {a}"
            );
            col = Some(b.part(i));
        }
    }
    col.expect("cover adds exactly one cell")
}
