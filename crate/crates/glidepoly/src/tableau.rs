//! Set-valued tableaux, Buch's formula for symmetric beta-Grothendieck
//! polynomials, the quasi-Yamanouchi condition, and the bijection with pipe
//! dreams of the associated Grassmannian permutation.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::basis::GlideIndex;
use crate::composition::WeakComposition;
use crate::error::{DomainError, ParseError};
use crate::pipedream::{Permutation, PipeDream};
use crate::polyring::{BetaInt, PolyZB};

/// A partition: weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// # Panics
    /// Panics unless the parts are weakly decreasing and positive.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0),
            "not a partition: {parts:?}"
        );
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn num_rows(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Vec<u32> = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| ParseError::new(format!("bad partition part {t:?}")))
            })
            .collect::<Result<_, _>>()?;
        if !(parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0)) {
            return Err(ParseError::new(format!("not a partition: {s:?}")));
        }
        Ok(Partition(parts))
    }
}

/// A set-valued filling of a Young diagram: each box holds a nonempty set,
/// min of the right neighbor is at least the max of a box, min of the box
/// below is strictly greater.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetValuedTableau {
    shape: Partition,
    rows: Vec<Vec<BTreeSet<u32>>>,
}

impl SetValuedTableau {
    /// # Panics
    /// Panics if the rows do not match the shape or the filling is invalid.
    pub fn new(shape: Partition, rows: Vec<Vec<BTreeSet<u32>>>) -> Self {
        assert_eq!(rows.len(), shape.num_rows());
        for (t, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), shape.parts()[t] as usize, "row {t} length");
            for cell in row {
                assert!(!cell.is_empty(), "empty box");
            }
        }
        let t = SetValuedTableau { shape, rows };
        assert!(t.is_semistandard(), "not semistandard: {t}");
        t
    }

    fn is_semistandard(&self) -> bool {
        for (t, row) in self.rows.iter().enumerate() {
            for (c, cell) in row.iter().enumerate() {
                let max = *cell.iter().max().unwrap();
                if c + 1 < row.len() && *row[c + 1].iter().min().unwrap() < max {
                    return false;
                }
                if let Some(below) = self.rows.get(t + 1).and_then(|r| r.get(c)) {
                    if *below.iter().min().unwrap() <= max {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<BTreeSet<u32>>] {
        &self.rows
    }

    /// Total number of entries, counting every element of every box.
    pub fn num_entries(&self) -> u32 {
        self.rows.iter().flatten().map(|c| c.len() as u32).sum()
    }

    /// Entries beyond one per box.
    pub fn excess(&self) -> u32 {
        self.num_entries() - self.shape.size()
    }

    /// Multiplicity of each label `1..=n`.
    pub fn weight(&self, n: usize) -> WeakComposition {
        let mut wt = vec![0u32; n];
        for cell in self.rows.iter().flatten() {
            for &v in cell {
                assert!(v >= 1 && (v as usize) <= n, "label {v} out of range");
                wt[v as usize - 1] += 1;
            }
        }
        WeakComposition::new(wt)
    }

    /// Positions `(row, col)` (one-indexed) of every instance of label `i`.
    fn positions_of(&self, i: u32) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (t, row) in self.rows.iter().enumerate() {
            for (c, cell) in row.iter().enumerate() {
                if cell.contains(&i) {
                    out.push((t + 1, c + 1));
                }
            }
        }
        out
    }

    /// True iff for every label `i > 1` used, some instance of `i` sits
    /// weakly left of some `i-1` in a different box.
    pub fn is_quasi_yamanouchi(&self) -> bool {
        let labels: BTreeSet<u32> = self.rows.iter().flatten().flatten().copied().collect();
        for &i in &labels {
            if i == 1 {
                continue;
            }
            let here = self.positions_of(i);
            let prev = self.positions_of(i - 1);
            let ok = here.iter().any(|&(t, c)| {
                prev.iter().any(|&(t2, c2)| c <= c2 && (t, c) != (t2, c2))
            });
            if !ok {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for SetValuedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|cell| {
                        let vals: Vec<String> = cell.iter().map(|v| v.to_string()).collect();
                        format!("{{{}}}", vals.join(","))
                    })
                    .collect::<String>()
            })
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}

impl FromStr for SetValuedTableau {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut rows = Vec::new();
        for row_text in s.split('/') {
            let mut row = Vec::new();
            for piece in row_text.split('}') {
                let piece = piece.trim();
                if piece.is_empty() {
                    continue;
                }
                let inner = piece
                    .strip_prefix('{')
                    .ok_or_else(|| ParseError::new(format!("expected '{{' in {piece:?}")))?;
                let cell: BTreeSet<u32> = inner
                    .split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<u32>()
                            .map_err(|_| ParseError::new(format!("bad label {t:?}")))
                    })
                    .collect::<Result<_, _>>()?;
                if cell.is_empty() || cell.contains(&0) {
                    return Err(ParseError::new("box labels must be positive"));
                }
                row.push(cell);
            }
            if row.is_empty() {
                return Err(ParseError::new("empty tableau row"));
            }
            rows.push(row);
        }
        let parts: Vec<u32> = rows.iter().map(|r| r.len() as u32).collect();
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(ParseError::new("row lengths not weakly decreasing"));
        }
        let shape = Partition::new(parts);
        let t = SetValuedTableau { shape, rows };
        if !t.is_semistandard() {
            return Err(ParseError::new(format!("not semistandard: {t}")));
        }
        Ok(t)
    }
}

/// All set-valued tableaux of shape `lambda` with labels from `{1..n}`, by
/// backtracking in row-reading order.
pub fn enumerate_svt(lambda: &Partition, n: usize) -> Vec<SetValuedTableau> {
    let boxes: Vec<(usize, usize)> = lambda
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(t, &len)| (0..len as usize).map(move |c| (t, c)))
        .collect();
    let mut rows: Vec<Vec<BTreeSet<u32>>> = lambda
        .parts()
        .iter()
        .map(|&len| vec![BTreeSet::new(); len as usize])
        .collect();
    let mut out = Vec::new();
    fill(&boxes, 0, n as u32, &mut rows, lambda, &mut out);
    out
}

fn fill(
    boxes: &[(usize, usize)],
    k: usize,
    n: u32,
    rows: &mut Vec<Vec<BTreeSet<u32>>>,
    lambda: &Partition,
    out: &mut Vec<SetValuedTableau>,
) {
    if k == boxes.len() {
        out.push(SetValuedTableau {
            shape: lambda.clone(),
            rows: rows.clone(),
        });
        return;
    }
    let (t, c) = boxes[k];
    // The box left of (t,c) forces min >= its max; the box above forces
    // min > its max.
    let mut lo = 1;
    if c > 0 {
        lo = lo.max(*rows[t][c - 1].iter().max().unwrap());
    }
    if t > 0 {
        lo = lo.max(rows[t - 1][c].iter().max().unwrap() + 1);
    }
    if lo > n {
        return;
    }
    // Choose a nonempty subset of {lo..n} by its sorted elements.
    let choices: Vec<u32> = (lo..=n).collect();
    for mask in 1u32..(1 << choices.len()) {
        let cell: BTreeSet<u32> = choices
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        rows[t][c] = cell;
        fill(boxes, k + 1, n, rows, lambda, out);
    }
    rows[t][c] = BTreeSet::new();
}

/// The quasi-Yamanouchi subset of `SV_n(lambda)`.
pub fn enumerate_qsv(lambda: &Partition, n: usize) -> Vec<SetValuedTableau> {
    enumerate_svt(lambda, n)
        .into_iter()
        .filter(|t| t.is_quasi_yamanouchi())
        .collect()
}

/// `K_lambda(x_1..x_n) = sum over SV_n(lambda) of beta^(|T|-|lambda|)
/// x^wt(T)`.
pub fn buch_poly(lambda: &Partition, n: usize) -> PolyZB {
    let mut f = PolyZB::zero(n);
    for t in enumerate_svt(lambda, n) {
        let c = BetaInt::beta_power(1, t.excess());
        f.add_term(t.weight(n).entries(), &c);
    }
    f
}

/// The Grassmannian permutation whose Lehmer code reads the parts of
/// `lambda` in reverse, ending at position `n` (its unique descent).
///
/// # Panics
/// Panics unless `n >= ` number of rows of `lambda`.
pub fn grassmannian_of(lambda: &Partition, n: usize) -> Permutation {
    let rows = lambda.num_rows();
    assert!(n >= rows, "need n >= number of rows");
    let total = n + lambda.parts().first().copied().unwrap_or(0) as usize;
    let mut code = vec![0u32; total];
    for (j, &part) in lambda.parts().iter().enumerate() {
        code[n - 1 - j] = part;
    }
    Permutation::from_lehmer(&WeakComposition::new(code))
}

/// Inverse of [`grassmannian_of`]: the partition (nonzero Lehmer entries in
/// reverse) and the descent position. The identity maps to `((), w.n())`.
pub fn partition_of(w: &Permutation) -> Result<(Partition, usize), DomainError> {
    let descents = w.descents();
    match descents.len() {
        0 => Ok((Partition::empty(), w.n())),
        1 => {
            let n = descents[0];
            let code = w.lehmer_code();
            let parts: Vec<u32> = code
                .entries()
                .iter()
                .rev()
                .copied()
                .filter(|&p| p > 0)
                .collect();
            Ok((Partition::new(parts), n))
        }
        _ => Err(DomainError::new(format!(
            "{w} has {} descents; at most one allowed",
            descents.len()
        ))),
    }
}

/// The pipe-dream image of `T` under the overlay bijection: the label `i` in
/// box `(t, c)` of `T` becomes a cross at `(n+1-i, c+i-t)`.
pub fn phi(t: &SetValuedTableau, n: usize) -> PipeDream {
    let w = grassmannian_of(t.shape(), n);
    let mut crosses = BTreeSet::new();
    for (ti, row) in t.rows().iter().enumerate() {
        let trow = ti + 1;
        for (ci, cell) in row.iter().enumerate() {
            let col = ci + 1;
            for &i in cell {
                let i = i as usize;
                assert!(i <= n, "label {i} exceeds n = {n}");
                let r = n + 1 - i;
                let c = col + i - trow;
                let fresh = crosses.insert((r, c));
                assert!(fresh, "overlay collision at ({r},{c})");
            }
        }
    }
    PipeDream::new(w.n(), crosses)
}

/// The glide expansion of `K_lambda(x_1..x_n)` read off quasi-Yamanouchi
/// set-valued tableaux: `T` contributes `beta^(|T|-|lambda|)
/// G_rev(wt(T))`.
pub fn symmetric_glide_expansion(lambda: &Partition, n: usize) -> BTreeMap<GlideIndex, i64> {
    let mut out: BTreeMap<GlideIndex, i64> = BTreeMap::new();
    for t in enumerate_qsv(lambda, n) {
        let idx = GlideIndex::new(t.excess(), t.weight(n).reverse());
        *out.entry(idx).or_insert(0) += 1;
    }
    out
}
