//! Integer partitions and compositions, with the orders used throughout:
//! reverse lexicographic on partitions, lexicographic on compositions, and
//! dominance on equal-size partitions.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A partition: weakly decreasing positive parts, no trailing zeros stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, validating weak decrease and positivity.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!("zero part in {parts:?}")));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts not weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts that may contain zeros and need sorting.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Part at `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of parts equal to `value`.
    pub fn multiplicity(&self, value: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == value).count() as u32
    }

    /// Multiplicity view `m[v]` = number of parts equal to `v`, for
    /// `v in 1..=max_value`. Index 0 is unused and kept zero.
    pub fn multiplicities(&self, max_value: u32) -> Vec<u32> {
        let mut m = vec![0u32; max_value as usize + 1];
        for &p in &self.parts {
            assert!(p <= max_value, "part {p} exceeds max_value {max_value}");
            m[p as usize] += 1;
        }
        m
    }

    /// Partition with multiplicity view `m` (index 0 ignored).
    pub fn from_multiplicities(m: &[u32]) -> Self {
        let mut parts = Vec::new();
        for v in (1..m.len()).rev() {
            for _ in 0..m[v] {
                parts.push(v as u32);
            }
        }
        Partition { parts }
    }

    pub fn conjugate(&self) -> Partition {
        let mut parts = Vec::new();
        let mut col = 1;
        loop {
            let n = self.parts.iter().filter(|&&p| p >= col).count() as u32;
            if n == 0 {
                break;
            }
            parts.push(n);
            col += 1;
        }
        Partition { parts }
    }

    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| self.part(i) >= other.part(i))
    }

    /// Componentwise sum of parts, zero-padding the shorter one.
    pub fn componentwise_add(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        let parts = (0..n).map(|i| self.part(i) + other.part(i)).collect();
        Partition { parts }
    }

    /// Multiplicity-wise union (the paper's ⊕ on frequency notation).
    pub fn oplus(&self, other: &Partition) -> Partition {
        let mut parts: Vec<u32> = self.parts.iter().chain(&other.parts).copied().collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn as_composition(&self) -> Composition {
        Composition {
            parts: self.parts.clone(),
        }
    }
}

/// Strips `pat` from `lam` multiplicity-wise; `None` when some multiplicity
/// of `pat` exceeds the corresponding one of `lam`.
pub fn subpartition_strip(lam: &Partition, pat: &Partition) -> Option<Partition> {
    let max = lam.part(0).max(pat.part(0));
    let ml = lam.multiplicities(max);
    let mp = pat.multiplicities(max);
    let mut diff = vec![0u32; max as usize + 1];
    for v in 1..=max as usize {
        if mp[v] > ml[v] {
            return None;
        }
        diff[v] = ml[v] - mp[v];
    }
    Some(Partition::from_multiplicities(&diff))
}

/// Reverse lexicographic comparison: `Less` means "listed earlier", so the
/// lexicographically larger part sequence compares `Less`. Sequences are
/// implicitly zero-padded, making a strict prefix larger than the shorter
/// sequence (its extra parts are positive).
pub fn revlex_cmp(a: &Partition, b: &Partition) -> Ordering {
    let n = a.len().max(b.len());
    for i in 0..n {
        match b.part(i).cmp(&a.part(i)) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

/// Dominance order on partitions of equal size: true iff every partial sum
/// of `a` is at most the corresponding partial sum of `b`.
///
/// Panics if `|a| != |b|` (contract violation).
pub fn dominance_leq(a: &Partition, b: &Partition) -> bool {
    assert_eq!(
        a.size(),
        b.size(),
        "dominance compares partitions of equal size"
    );
    let n = a.len().max(b.len());
    let (mut sa, mut sb) = (0u64, 0u64);
    for i in 0..n {
        sa += a.part(i) as u64;
        sb += b.part(i) as u64;
        if sa > sb {
            return false;
        }
    }
    true
}

/// All partitions of `n` subject to optional length/part bounds, in reverse
/// lexicographic order.
pub fn partitions_of(n: u64, max_len: Option<usize>, max_part: Option<u32>) -> Vec<Partition> {
    let max_len = max_len.unwrap_or(usize::MAX);
    let max_part = max_part.map(|p| p as u64).unwrap_or(u64::MAX);
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::new();
    fn rec(n: u64, max_len: usize, max_part: u64, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if max_len == 0 {
            return;
        }
        let hi = n.min(max_part);
        // a first part of k leaves n-k to split into at most max_len-1 parts of size <= k
        for k in (1..=hi).rev() {
            if n - k > k.saturating_mul(max_len as u64 - 1) {
                continue;
            }
            cur.push(k as u32);
            rec(n - k, max_len - 1, k, cur, out);
            cur.pop();
        }
    }
    rec(n, max_len, max_part, &mut cur, &mut out);
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let c: Composition = s.parse()?;
        c.to_partition()
            .ok_or_else(|| Error::InvalidPartition(format!("parts not weakly decreasing: {s}")))
    }
}

/// A composition: a sequence of positive parts, order significant.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidComposition(format!("zero part in {parts:?}")));
        }
        Ok(Composition { parts })
    }

    pub fn empty() -> Self {
        Composition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Lossless conversion when the parts are already weakly decreasing.
    pub fn to_partition(&self) -> Option<Partition> {
        if self.parts.windows(2).all(|w| w[0] >= w[1]) {
            Some(Partition {
                parts: self.parts.clone(),
            })
        } else {
            None
        }
    }

    /// The partition obtained by sorting the parts.
    pub fn sorted(&self) -> Partition {
        Partition::from_unsorted(self.parts.clone())
    }

    /// Composition of `n` determined by a strictly increasing descent set.
    pub fn from_descent_set(descents: &[u64], n: u64) -> Composition {
        let mut parts = Vec::with_capacity(descents.len() + 1);
        let mut prev = 0u64;
        for &d in descents {
            debug_assert!(d > prev && d < n);
            parts.push((d - prev) as u32);
            prev = d;
        }
        if n > prev {
            parts.push((n - prev) as u32);
        }
        Composition { parts }
    }

    /// All refinements of this composition (compositions β ≼ α), in a
    /// deterministic order.
    pub fn refinements(&self) -> Vec<Composition> {
        let mut out = vec![Vec::new()];
        for &part in &self.parts {
            let splits = compositions_of(part as u64);
            let mut next = Vec::with_capacity(out.len() * splits.len());
            for prefix in &out {
                for s in &splits {
                    let mut v = prefix.clone();
                    v.extend_from_slice(s.parts());
                    next.push(v);
                }
            }
            out = next;
        }
        out.into_iter().map(|parts| Composition { parts }).collect()
    }
}

/// All compositions of `n`, in a deterministic order.
pub fn compositions_of(n: u64) -> Vec<Composition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(n: u64, cur: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if n == 0 {
            out.push(Composition { parts: cur.clone() });
            return;
        }
        for k in 1..=n {
            cur.push(k as u32);
            rec(n - k, cur, out);
            cur.pop();
        }
    }
    rec(n, &mut cur, &mut out);
    out
}

/// Lexicographic comparison of compositions; a strict prefix compares smaller.
pub fn lex_cmp(a: &Composition, b: &Composition) -> Ordering {
    a.parts.cmp(&b.parts)
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected [a,b,...], got {s:?}")))?;
        let inner = inner.trim();
        if inner.is_empty() {
            return Ok(Composition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("bad part {p:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}
