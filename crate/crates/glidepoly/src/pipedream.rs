//! Pipe dreams: pipe tracing, reduction, excess, weight, destandardization,
//! the quasi-Yamanouchi condition, and enumeration.
//!
//! A pipe dream is stored as its set of crossing tiles inside the staircase
//! `row + col <= n`; every other tile is an elbow. Pipe `i` enters from the
//! west side of row `i` and exits on the top edge at column `w(i)`.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::composition::WeakComposition;
use crate::error::ParseError;

/// A permutation of `{1..n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    /// # Panics
    /// Panics if the entries are not a rearrangement of `1..=n`.
    pub fn new(one_line: Vec<usize>) -> Self {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            assert!(v >= 1 && v <= n && !seen[v], "not a permutation: {one_line:?}");
            seen[v] = true;
        }
        Permutation(one_line)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// The longest element `n, n-1, ..., 1`.
    pub fn longest(n: usize) -> Self {
        Permutation((1..=n).rev().collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    /// `w(i)`, one-indexed.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// Number of inversions (Coxeter length).
    pub fn inversions(&self) -> usize {
        let mut count = 0;
        for i in 0..self.0.len() {
            for j in i + 1..self.0.len() {
                if self.0[i] > self.0[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Positions `i` with `w(i) > w(i+1)`, one-indexed.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.0.len())
            .filter(|&i| self.0[i - 1] > self.0[i])
            .collect()
    }

    /// Swap values at positions `i` and `i+1` (right multiplication by `s_i`).
    pub fn swap_positions(&self, i: usize) -> Permutation {
        let mut v = self.0.clone();
        v.swap(i - 1, i);
        Permutation(v)
    }

    /// Extend with fixed points to act on `{1..m}`.
    pub fn embed(&self, m: usize) -> Permutation {
        assert!(m >= self.0.len());
        let mut v = self.0.clone();
        v.extend(self.0.len() + 1..=m);
        Permutation(v)
    }

    /// The Lehmer code: `L(w)_i = #{j > i : w(i) > w(j)}`, length `n`.
    pub fn lehmer_code(&self) -> WeakComposition {
        let n = self.0.len();
        let code = (0..n)
            .map(|i| (i + 1..n).filter(|&j| self.0[i] > self.0[j]).count() as u32)
            .collect();
        WeakComposition::new(code)
    }

    /// Rebuild a permutation from a Lehmer code (`code_i < n - i` required).
    pub fn from_lehmer(code: &WeakComposition) -> Permutation {
        let n = code.len();
        let mut avail: Vec<usize> = (1..=n).collect();
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let k = code.entry(i) as usize;
            assert!(k < avail.len(), "invalid Lehmer code");
            out.push(avail.remove(k));
        }
        Permutation(out)
    }

    /// All permutations of `{1..n}`.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut v: Vec<usize> = (1..=n).collect();
        permute(&mut v, 0, &mut out);
        out
    }
}

fn permute(v: &mut Vec<usize>, k: usize, out: &mut Vec<Permutation>) {
    if k == v.len() {
        out.push(Permutation(v.clone()));
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, out);
        v.swap(k, i);
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() <= 9 {
            for &v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let s: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", s.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let s = s.trim();
        let vals: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| ParseError::new(format!("bad permutation entry {t:?}")))
                })
                .collect::<Result<_, _>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| ParseError::new(format!("bad permutation digit {c:?}")))
                })
                .collect::<Result<_, _>>()?
        };
        let n = vals.len();
        let mut seen = vec![false; n + 1];
        for &v in &vals {
            if v < 1 || v > n || seen[v] {
                return Err(ParseError::new(format!("not a permutation: {s:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation(vals))
    }
}

/// A pipe dream for permutations in `S_n`: a set of crossing tiles `(row,
/// col)` with `row + col <= n`, one-indexed from the top-left.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PipeDream {
    n: usize,
    crosses: BTreeSet<(usize, usize)>,
}

impl PipeDream {
    /// # Panics
    /// Panics if a cross lies outside the staircase.
    pub fn new(n: usize, crosses: BTreeSet<(usize, usize)>) -> Self {
        for &(r, c) in &crosses {
            assert!(r >= 1 && c >= 1 && r + c <= n, "cross ({r},{c}) outside staircase for n={n}");
        }
        PipeDream { n, crosses }
    }

    pub fn from_crosses(n: usize, crosses: &[(usize, usize)]) -> Self {
        PipeDream::new(n, crosses.iter().copied().collect())
    }

    pub fn empty(n: usize) -> Self {
        PipeDream { n, crosses: BTreeSet::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn crosses(&self) -> &BTreeSet<(usize, usize)> {
        &self.crosses
    }

    pub fn num_crosses(&self) -> usize {
        self.crosses.len()
    }

    /// Trace every pipe through the tiling. Returns the exit permutation
    /// (the permutation of the reduction) and the set of crosses retained by
    /// reduction: at a cross where the two incoming pipes have already
    /// crossed, the tile acts as an elbow and is dropped.
    fn trace(&self) -> (Permutation, BTreeSet<(usize, usize)>) {
        let n = self.n;
        // north_in[c] = pipe traveling north out of the row below at column c.
        let mut north_in: Vec<Option<usize>> = vec![None; n + 1];
        let mut crossed: HashSet<(usize, usize)> = HashSet::new();
        let mut kept = BTreeSet::new();
        for r in (1..=n).rev() {
            let mut east: Option<usize> = Some(r);
            for c in 1..=n {
                let w_in = east;
                let s_in = north_in[c];
                let mut acts_as_cross = false;
                if self.crosses.contains(&(r, c)) {
                    if let (Some(a), Some(b)) = (w_in, s_in) {
                        let key = (a.min(b), a.max(b));
                        if crossed.insert(key) {
                            acts_as_cross = true;
                        }
                    } else {
                        acts_as_cross = true;
                    }
                }
                if acts_as_cross {
                    kept.insert((r, c));
                    east = w_in;
                    // north_in[c] stays s_in: the vertical pipe passes through.
                } else {
                    north_in[c] = w_in;
                    east = s_in;
                }
            }
            debug_assert!(east.is_none(), "pipe exited east in row {r}");
        }
        let mut w = vec![0; n];
        for c in 1..=n {
            if let Some(p) = north_in[c] {
                w[p - 1] = c;
            }
        }
        (Permutation::new(w), kept)
    }

    /// The permutation of the pipe dream (of its reduction if nonreduced).
    pub fn permutation(&self) -> Permutation {
        self.trace().0
    }

    /// Replace all but the southwestmost crossing of each pipe pair with an
    /// elbow. Idempotent; the identity on reduced pipe dreams.
    pub fn reduct(&self) -> PipeDream {
        let (_, kept) = self.trace();
        PipeDream { n: self.n, crosses: kept }
    }

    pub fn is_reduced(&self) -> bool {
        self.trace().1.len() == self.crosses.len()
    }

    /// Crosses beyond the reduction.
    pub fn excess(&self) -> u32 {
        (self.crosses.len() - self.trace().1.len()) as u32
    }

    /// Per-row cross counts, as a weak composition of length `n`.
    pub fn weight(&self) -> WeakComposition {
        let mut wt = vec![0u32; self.n];
        for &(r, _) in &self.crosses {
            wt[r - 1] += 1;
        }
        WeakComposition::new(wt)
    }

    fn row(&self, r: usize) -> Vec<usize> {
        self.crosses
            .iter()
            .filter(|&&(rr, _)| rr == r)
            .map(|&(_, c)| c)
            .collect()
    }

    /// One destandardization sweep, top to bottom. Returns whether any row
    /// moved.
    fn dst_sweep(&mut self) -> bool {
        let mut moved = false;
        for r in 1..self.n {
            let above = self.row(r);
            if above.is_empty() || above.contains(&1) {
                continue;
            }
            let below = self.row(r + 1);
            let min_above = *above.iter().min().unwrap();
            let max_below = below.iter().max().copied().unwrap_or(0);
            if min_above > max_below {
                for &c in &above {
                    self.crosses.remove(&(r, c));
                }
                for &c in &above {
                    self.crosses.insert((r + 1, c - 1));
                }
                moved = true;
            }
        }
        moved
    }

    /// Destandardization: repeatedly shift eligible rows southwest until the
    /// quasi-Yamanouchi condition holds. Preserves the permutation.
    pub fn destandardize(&self) -> PipeDream {
        let mut p = self.clone();
        while p.dst_sweep() {}
        p
    }

    /// True iff every nonempty row's westmost cross is in column 1 or weakly
    /// west of some cross in the row below.
    pub fn is_quasi_yamanouchi(&self) -> bool {
        for r in 1..=self.n {
            let row = self.row(r);
            if row.is_empty() {
                continue;
            }
            let westmost = *row.iter().min().unwrap();
            if westmost == 1 {
                continue;
            }
            let below_max = self.row(r + 1).iter().max().copied().unwrap_or(0);
            if westmost > below_max {
                return false;
            }
        }
        true
    }

    /// Render as text: an `n=` header, then one line per staircase row with
    /// `+` for a cross and `.` for an elbow.
    pub fn render(&self) -> String {
        let mut s = format!("n={}\n", self.n);
        for r in 1..self.n {
            for c in 1..=(self.n - r) {
                s.push(if self.crosses.contains(&(r, c)) { '+' } else { '.' });
            }
            s.push('\n');
        }
        s
    }

    pub fn parse(text: &str) -> Result<PipeDream, ParseError> {
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| ParseError::new("empty pipe dream"))?;
        let n: usize = header
            .trim()
            .strip_prefix("n=")
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| ParseError::new("expected n= header"))?;
        let mut crosses = BTreeSet::new();
        for (i, line) in lines.enumerate() {
            let r = i + 1;
            if line.trim().is_empty() {
                continue;
            }
            for (j, ch) in line.trim_end().chars().enumerate() {
                let c = j + 1;
                match ch {
                    '+' => {
                        if r + c > n {
                            return Err(ParseError::new(format!("cross ({r},{c}) outside staircase")));
                        }
                        crosses.insert((r, c));
                    }
                    '.' => {}
                    _ => return Err(ParseError::new(format!("unexpected tile {ch:?}"))),
                }
            }
        }
        Ok(PipeDream { n, crosses })
    }
}

/// The reduced pipe dream with `L(w)_i` crosses left-justified in row `i`.
pub fn bottom_pipe_dream(w: &Permutation) -> PipeDream {
    let code = w.lehmer_code();
    let mut crosses = BTreeSet::new();
    for i in 0..w.n() {
        for c in 1..=code.entry(i) as usize {
            crosses.insert((i + 1, c));
        }
    }
    PipeDream::new(w.n(), crosses)
}

/// All pipe dreams for all of `S_n`, keyed by permutation. Brute force over
/// subsets of the staircase; practical for `n <= 6`.
pub fn enumerate_all(n: usize) -> BTreeMap<Permutation, Vec<PipeDream>> {
    let cells: Vec<(usize, usize)> = (1..n)
        .flat_map(|r| (1..=(n - r)).map(move |c| (r, c)))
        .collect();
    assert!(cells.len() < 64, "staircase too large for brute force");
    let mut out: BTreeMap<Permutation, Vec<PipeDream>> = BTreeMap::new();
    for mask in 0u64..(1 << cells.len()) {
        let crosses: BTreeSet<(usize, usize)> = cells
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &cell)| cell)
            .collect();
        let pd = PipeDream { n, crosses };
        let w = pd.permutation();
        out.entry(w).or_default().push(pd);
    }
    out
}

/// All pipe dreams whose reduction has permutation `w`.
pub fn enumerate_pd(w: &Permutation) -> Vec<PipeDream> {
    enumerate_all(w.n()).remove(w).unwrap_or_default()
}

/// The quasi-Yamanouchi pipe dreams for `w`.
pub fn enumerate_qpd(w: &Permutation) -> Vec<PipeDream> {
    enumerate_pd(w)
        .into_iter()
        .filter(|p| p.is_quasi_yamanouchi())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wc(entries: &[u32]) -> WeakComposition {
        WeakComposition::new(entries.to_vec())
    }

    fn pd(n: usize, crosses: &[(usize, usize)]) -> PipeDream {
        PipeDream::from_crosses(n, crosses)
    }

    #[test]
    fn permutation_of_examples() {
        let p = pd(4, &[(1, 2), (1, 3), (2, 2), (3, 1)]);
        assert_eq!(p.permutation(), "1432".parse().unwrap());
        assert_eq!(PipeDream::empty(4).permutation(), Permutation::identity(4));
        let r = pd(4, &[(1, 2), (1, 3), (3, 1)]);
        assert_eq!(r.permutation(), "1432".parse().unwrap());
    }

    #[test]
    fn reduct_examples() {
        let p = pd(4, &[(1, 2), (1, 3), (2, 2), (3, 1)]);
        assert_eq!(p.reduct(), pd(4, &[(1, 2), (1, 3), (3, 1)]));
        let r = pd(4, &[(1, 2), (1, 3), (3, 1)]);
        assert_eq!(r.reduct(), r);
        // Pipes 3 and 4 cross at (2,2) first (southwestmost), then again at (1,3).
        let q = pd(4, &[(2, 2), (1, 3)]);
        assert_eq!(q.reduct(), pd(4, &[(2, 2)]));
        assert_eq!(q.reduct().reduct(), q.reduct());
    }

    #[test]
    fn excess_and_weight_examples() {
        let p = pd(4, &[(1, 2), (1, 3), (2, 2), (3, 1)]);
        assert_eq!(p.excess(), 1);
        assert_eq!(p.weight(), wc(&[2, 1, 1, 0]));
        let r = p.reduct();
        assert_eq!(r.excess(), 0);
        assert_eq!(r.weight(), wc(&[2, 0, 1, 0]));
        assert_eq!(PipeDream::empty(3).excess(), 0);
        assert_eq!(PipeDream::empty(3).weight(), wc(&[0, 0, 0]));
    }

    #[test]
    fn lehmer_code_examples() {
        let w: Permutation = "146235".parse().unwrap();
        assert_eq!(w.lehmer_code(), wc(&[0, 2, 3, 0, 0, 0]));
        let w: Permutation = "13524".parse().unwrap();
        assert_eq!(w.lehmer_code(), wc(&[0, 1, 2, 0, 0]));
        assert_eq!(Permutation::identity(4).lehmer_code(), wc(&[0, 0, 0, 0]));
        assert_eq!(bottom_pipe_dream(&Permutation::identity(4)), PipeDream::empty(4));
    }

    #[test]
    fn bottom_pipe_dream_is_reduced_for_w() {
        for w in Permutation::all(4) {
            let p = bottom_pipe_dream(&w);
            assert!(p.is_reduced());
            assert_eq!(p.permutation(), w, "w = {w}");
        }
    }

    #[test]
    fn destandardize_paper_example() {
        let p = pd(5, &[(1, 4), (2, 1), (2, 2), (2, 3), (3, 2)]);
        let d = p.destandardize();
        assert_eq!(d, pd(5, &[(2, 1), (2, 2), (2, 3), (4, 1)]));
        assert_eq!(d.permutation(), p.permutation());
        assert!(d.is_quasi_yamanouchi());
        // Quasi-Yamanouchi pipe dreams are fixed points.
        assert_eq!(d.destandardize(), d);
    }

    #[test]
    fn destandardize_shifts_isolated_row() {
        let p = pd(4, &[(1, 2), (1, 3)]);
        let d = p.destandardize();
        assert_eq!(d, pd(4, &[(2, 1), (2, 2)]));
        assert_eq!(d.permutation(), p.permutation());
    }

    #[test]
    fn quasi_yamanouchi_examples() {
        assert!(pd(4, &[(1, 2), (1, 3), (2, 1), (2, 2), (3, 1)]).is_quasi_yamanouchi());
        assert!(!pd(4, &[(1, 2), (1, 3), (3, 1)]).is_quasi_yamanouchi());
        assert!(PipeDream::empty(4).is_quasi_yamanouchi());
        // Example reduced_PDs: P itself is also not quasi-Yamanouchi.
        assert!(!pd(4, &[(1, 2), (1, 3), (2, 2), (3, 1)]).is_quasi_yamanouchi());
    }

    #[test]
    fn enumeration_examples() {
        let w: Permutation = "132".parse().unwrap();
        let pds = enumerate_pd(&w);
        assert_eq!(pds.len(), 3);
        assert_eq!(pds.iter().filter(|p| p.excess() == 0).count(), 2);

        assert_eq!(enumerate_pd(&Permutation::identity(3)), vec![PipeDream::empty(3)]);

        let w: Permutation = "13524".parse().unwrap();
        assert_eq!(enumerate_qpd(&w).len(), 7);
    }

    #[test]
    fn dst_image_is_qpd_for_s4() {
        for (w, pds) in enumerate_all(4) {
            let qpd: BTreeSet<PipeDream> = pds
                .iter()
                .filter(|p| p.is_quasi_yamanouchi())
                .cloned()
                .collect();
            let image: BTreeSet<PipeDream> = pds.iter().map(|p| p.destandardize()).collect();
            assert_eq!(image, qpd, "w = {w}");
            for p in &pds {
                // Merges may drop crosses, so only the permutation is
                // preserved; the excess can decrease but never grow.
                let d = p.destandardize();
                assert_eq!(d.permutation(), w);
                assert!(d.excess() <= p.excess(), "excess grew for {p:?}");
            }
        }
    }

    #[test]
    fn dst_injectivity_matches_descent_criterion_on_s4() {
        for (w, pds) in enumerate_all(4) {
            let images: Vec<PipeDream> = pds.iter().map(|p| p.destandardize()).collect();
            let distinct: BTreeSet<&PipeDream> = images.iter().collect();
            let injective = distinct.len() == images.len();
            let m = w.inverse().apply(1);
            let no_descent_after = w.descents().iter().all(|&d| d < m);
            assert_eq!(injective, no_descent_after, "w = {w}");
        }
    }

    #[test]
    fn render_round_trip() {
        let p = pd(4, &[(1, 2), (1, 3), (3, 1)]);
        let text = p.render();
        assert_eq!(text, "n=4\n.++\n..\n+\n");
        assert_eq!(PipeDream::parse(&text).unwrap(), p);
    }

    #[test]
    fn permutation_parsing() {
        let w: Permutation = "13524".parse().unwrap();
        assert_eq!(w.one_line(), &[1, 3, 5, 2, 4]);
        let w2: Permutation = "1,3,5,2,4".parse().unwrap();
        assert_eq!(w, w2);
        assert!("1352".parse::<Permutation>().is_err());
        assert_eq!(w.to_string(), "13524");
    }
}
