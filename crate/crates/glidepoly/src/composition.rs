//! Weak and strong compositions, colored kompositions, dominance and
//! refinement orders, and glide enumeration.
//!
//! These are the combinatorial index sets for every polynomial basis in the
//! crate: exponent vectors are weak compositions, quasisymmetric bases are
//! indexed by strong compositions, and glide polynomials are generating
//! functions over colored kompositions.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;

/// A finite sequence of nonnegative integers. Trailing zeros are significant:
/// `(1,0)` and `(1,0,0)` are distinct compositions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeakComposition(Vec<u32>);

/// A finite sequence of strictly positive integers (possibly empty).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StrongComposition(Vec<u32>);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    Black,
    Red,
}

/// A weak composition whose positive entries are colored black or red.
/// Zero entries are always black.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeakKomposition(Vec<(u32, Color)>);

impl WeakComposition {
    pub fn new(entries: Vec<u32>) -> Self {
        WeakComposition(entries)
    }

    pub fn zeros(len: usize) -> Self {
        WeakComposition(vec![0; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn entry(&self, i: usize) -> u32 {
        self.0[i]
    }

    /// Sum of the entries, written `|a|`.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_all_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Number of zero entries (anywhere, including trailing).
    pub fn zero_count(&self) -> usize {
        self.0.iter().filter(|&&e| e == 0).count()
    }

    /// `z(a)`: the number of zeros that precede some nonzero entry.
    pub fn leading_zero_count(&self) -> usize {
        match self.0.iter().rposition(|&e| e != 0) {
            Some(last) => self.0[..last].iter().filter(|&&e| e == 0).count(),
            None => 0,
        }
    }

    /// Delete the zero entries, keeping order.
    pub fn flatten(&self) -> StrongComposition {
        StrongComposition(self.0.iter().copied().filter(|&e| e != 0).collect())
    }

    pub fn reverse(&self) -> WeakComposition {
        WeakComposition(self.0.iter().rev().copied().collect())
    }

    /// Prepend `m` zeros.
    pub fn prepend_zeros(&self, m: usize) -> WeakComposition {
        let mut v = vec![0; m];
        v.extend_from_slice(&self.0);
        WeakComposition(v)
    }

    /// Dominance order: `self >= other` iff every prefix sum of `self` is at
    /// least the corresponding prefix sum of `other`. The shorter composition
    /// is padded with trailing zeros.
    pub fn dominates(&self, other: &WeakComposition) -> bool {
        let n = self.0.len().max(other.0.len());
        let (mut s, mut o) = (0u64, 0u64);
        for i in 0..n {
            s += u64::from(self.0.get(i).copied().unwrap_or(0));
            o += u64::from(other.0.get(i).copied().unwrap_or(0));
            if s < o {
                return false;
            }
        }
        true
    }

    /// The set of glides of `self`, each returned once regardless of how many
    /// witnessing breakpoint sequences it admits.
    pub fn glides(&self) -> BTreeSet<WeakKomposition> {
        let mut out = BTreeSet::new();
        let nonzero_pos: Vec<usize> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, _)| i)
            .collect();
        let flat: Vec<u32> = nonzero_pos.iter().map(|&i| self.0[i]).collect();
        let mut prefix: Vec<(u32, Color)> = Vec::new();
        glide_blocks(self.0.len(), &nonzero_pos, &flat, 0, &mut prefix, &mut out);
        out
    }

    /// The unsplit glides of `self`: glides with the same number of nonzero
    /// black entries as `self` has nonzero entries, and no zero entry right of
    /// a nonzero entry.
    pub fn unsplit_glides(&self) -> BTreeSet<WeakKomposition> {
        let nonzero = self.0.iter().filter(|&&e| e != 0).count();
        self.glides()
            .into_iter()
            .filter(|b| {
                let blacks = b
                    .0
                    .iter()
                    .filter(|&&(v, c)| v != 0 && c == Color::Black)
                    .count();
                blacks == nonzero && b.no_zero_right_of_nonzero()
            })
            .collect()
    }
}

/// Extend one glide block at a time. Block `j` occupies positions
/// `start..=end` with `end <= nonzero_pos[j]`, its entries sum to
/// `flat[j]` plus the number of red entries in the block, and its leftmost
/// nonzero entry is black. Positions after the last block are zero.
fn glide_blocks(
    n: usize,
    nonzero_pos: &[usize],
    flat: &[u32],
    block: usize,
    prefix: &mut Vec<(u32, Color)>,
    out: &mut BTreeSet<WeakKomposition>,
) {
    if block == flat.len() {
        let mut b = prefix.clone();
        b.resize(n, (0, Color::Black));
        out.insert(WeakKomposition(b));
        return;
    }
    let start = prefix.len();
    for end in start..=nonzero_pos[block] {
        let len = end - start + 1;
        let mut entries: Vec<(u32, Color)> = Vec::with_capacity(len);
        block_entries(len, flat[block], 0, &mut entries, &mut |blk| {
            prefix.extend_from_slice(blk);
            glide_blocks(n, nonzero_pos, flat, block + 1, prefix, out);
            prefix.truncate(start);
        });
    }
}

/// Enumerate colored entry vectors of the given length whose values sum to
/// `target + #red`. The leftmost nonzero entry is black (a red entry records a
/// cross shared with an earlier row, so it needs a positive entry before it);
/// zero entries are black; red entries are positive.
fn block_entries(
    len: usize,
    target: u32,
    reds: u32,
    acc: &mut Vec<(u32, Color)>,
    emit: &mut dyn FnMut(&[(u32, Color)]),
) {
    if acc.len() == len {
        let sum: u32 = acc.iter().map(|&(v, _)| v).sum();
        if sum == target + reds {
            emit(acc);
        }
        return;
    }
    let sum: u32 = acc.iter().map(|&(v, _)| v).sum();
    let after = (len - acc.len() - 1) as u32;
    // Each later entry may itself be red, raising the attainable sum by one.
    let max_black = (target + reds + after).saturating_sub(sum);
    for v in 0..=max_black {
        acc.push((v, Color::Black));
        block_entries(len, target, reds, acc, emit);
        acc.pop();
    }
    if acc.iter().any(|&(v, _)| v > 0) {
        let max_red = (target + reds + 1 + after).saturating_sub(sum);
        for v in 1..=max_red {
            acc.push((v, Color::Red));
            block_entries(len, target, reds + 1, acc, emit);
            acc.pop();
        }
    }
}

impl StrongComposition {
    /// Construct from positive parts.
    ///
    /// # Panics
    /// Panics if any part is zero.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "strong composition parts must be positive");
        StrongComposition(parts)
    }

    pub fn empty() -> Self {
        StrongComposition(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// True iff `other` is obtained by summing consecutive entries of `self`.
    /// Positive parts make the grouping greedy and unique.
    pub fn refines(&self, other: &StrongComposition) -> bool {
        let mut acc = 0u32;
        let mut it = other.0.iter();
        let mut cur = match it.next() {
            Some(&c) => c,
            None => return self.0.is_empty(),
        };
        for &p in &self.0 {
            acc += p;
            if acc == cur {
                acc = 0;
                cur = match it.next() {
                    Some(&c) => c,
                    None => 0,
                };
            } else if acc > cur {
                return false;
            }
        }
        acc == 0 && cur == 0 && it.next().is_none()
    }

    /// Embed as a weak composition of length `n` by prepending zeros.
    /// Requires `self.len() <= n`.
    pub fn pad_front(&self, n: usize) -> WeakComposition {
        assert!(self.0.len() <= n);
        let mut v = vec![0; n - self.0.len()];
        v.extend_from_slice(&self.0);
        WeakComposition(v)
    }
}

impl WeakKomposition {
    /// # Panics
    /// Panics if a zero entry is colored red.
    pub fn new(entries: Vec<(u32, Color)>) -> Self {
        assert!(
            entries.iter().all(|&(v, c)| v > 0 || c == Color::Black),
            "zero entries must be black"
        );
        WeakKomposition(entries)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[(u32, Color)] {
        &self.0
    }

    /// Number of red entries.
    pub fn excess(&self) -> u32 {
        self.0.iter().filter(|&&(_, c)| c == Color::Red).count() as u32
    }

    /// Forget colors.
    pub fn values(&self) -> WeakComposition {
        WeakComposition(self.0.iter().map(|&(v, _)| v).collect())
    }

    /// Delete zero entries and forget colors.
    pub fn flatten(&self) -> StrongComposition {
        StrongComposition(self.0.iter().map(|&(v, _)| v).filter(|&v| v != 0).collect())
    }

    fn no_zero_right_of_nonzero(&self) -> bool {
        let mut seen_nonzero = false;
        for &(v, _) in &self.0 {
            if v != 0 {
                seen_nonzero = true;
            } else if seen_nonzero {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Display for StrongComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Display for WeakKomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self
            .0
            .iter()
            .map(|&(v, c)| match c {
                Color::Black => v.to_string(),
                Color::Red => format!("{v}r"),
            })
            .collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for WeakComposition {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        if s.trim().is_empty() {
            return Ok(WeakComposition(Vec::new()));
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| ParseError::new(format!("bad composition entry {t:?}")))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(WeakComposition)
    }
}

impl FromStr for StrongComposition {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let w: WeakComposition = s.parse()?;
        if w.entries().iter().any(|&e| e == 0) {
            return Err(ParseError::new("strong composition entries must be positive"));
        }
        Ok(StrongComposition(w.0))
    }
}

impl FromStr for WeakKomposition {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        if s.trim().is_empty() {
            return Ok(WeakKomposition(Vec::new()));
        }
        let entries = s
            .split(',')
            .map(|t| {
                let t = t.trim();
                let (num, color) = match t.strip_suffix(['r', 'R']) {
                    Some(num) => (num, Color::Red),
                    None => (t, Color::Black),
                };
                let v = num
                    .parse::<u32>()
                    .map_err(|_| ParseError::new(format!("bad komposition entry {t:?}")))?;
                if v == 0 && color == Color::Red {
                    return Err(ParseError::new("zero entries cannot be red"));
                }
                Ok((v, color))
            })
            .collect::<Result<Vec<_>, ParseError>>()?;
        Ok(WeakKomposition(entries))
    }
}
