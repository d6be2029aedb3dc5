//! The genomic shuffle product and the glide product it induces on weak
//! compositions: shuffles, superscripted words, genotypes, run structures,
//! GSS sets, BumpRuns, glide structure constants, and Littlewood-Richardson
//! coefficients for products of Grothendieck polynomials.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::basis::GlideIndex;
use crate::composition::WeakComposition;
use crate::error::ParseError;
use crate::pipedream::{enumerate_qpd, Permutation};

/// A superscripted letter `base^sup`. The derived order is lexicographic on
/// `(base, sup)`, which is the order used for runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub base: u32,
    pub sup: u32,
}

impl Letter {
    pub fn new(base: u32, sup: u32) -> Self {
        assert!(base >= 1 && sup >= 1);
        Letter { base, sup }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.base, self.sup)
    }
}

impl FromStr for Letter {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let (b, p) = s
            .split_once('^')
            .ok_or_else(|| ParseError::new(format!("expected base^sup, got {s:?}")))?;
        let base: u32 = b
            .trim()
            .parse()
            .map_err(|_| ParseError::new(format!("bad letter base {b:?}")))?;
        let sup: u32 = p
            .trim()
            .parse()
            .map_err(|_| ParseError::new(format!("bad superscript {p:?}")))?;
        if base == 0 || sup == 0 {
            return Err(ParseError::new("letter parts must be positive"));
        }
        Ok(Letter { base, sup })
    }
}

/// A word over the superscripted alphabet.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GenWord(pub Vec<Letter>);

impl GenWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }
}

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for GenWord {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let letters: Vec<Letter> = s
            .split_whitespace()
            .map(|t| t.parse())
            .collect::<Result<_, _>>()?;
        Ok(GenWord(letters))
    }
}

/// A sequence of (possibly empty) strictly increasing segments.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RunSequence(pub Vec<Vec<Letter>>);

impl RunSequence {
    pub fn num_segments(&self) -> usize {
        self.0.len()
    }

    pub fn segments(&self) -> &[Vec<Letter>] {
        &self.0
    }

    /// Letters per segment, counting only bases passing the filter.
    pub fn comp(&self, filter: impl Fn(u32) -> bool) -> WeakComposition {
        WeakComposition::new(
            self.0
                .iter()
                .map(|seg| seg.iter().filter(|l| filter(l.base)).count() as u32)
                .collect(),
        )
    }
}

impl fmt::Display for RunSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|seg| {
                let s: Vec<String> = seg.iter().map(|l| l.to_string()).collect();
                s.join(" ")
            })
            .collect();
        write!(f, "({})", parts.join(" | "))
    }
}

/// Superscript a plain word: the `j`th instance of `i` (left to right)
/// becomes `i^j`.
pub fn gen_word(word: &[u32]) -> GenWord {
    let mut counts: HashMap<u32, u32> = HashMap::new();
    GenWord(
        word.iter()
            .map(|&i| {
                let c = counts.entry(i).or_insert(0);
                *c += 1;
                Letter::new(i, *c)
            })
            .collect(),
    )
}

/// The classical shuffle product: all interleavings of `a` and `b`.
///
/// # Panics
/// Panics if the alphabets overlap.
pub fn shuffle(a: &[u32], b: &[u32]) -> BTreeSet<Vec<u32>> {
    let sa: BTreeSet<u32> = a.iter().copied().collect();
    let sb: BTreeSet<u32> = b.iter().copied().collect();
    assert!(sa.is_disjoint(&sb), "shuffle requires disjoint alphabets");
    let mut out = BTreeSet::new();
    let mut acc = Vec::with_capacity(a.len() + b.len());
    fn go(a: &[u32], b: &[u32], acc: &mut Vec<u32>, out: &mut BTreeSet<Vec<u32>>) {
        if a.is_empty() && b.is_empty() {
            out.insert(acc.clone());
            return;
        }
        if let Some((&x, rest)) = a.split_first() {
            acc.push(x);
            go(rest, b, acc, out);
            acc.pop();
        }
        if let Some((&x, rest)) = b.split_first() {
            acc.push(x);
            go(a, rest, acc, out);
            acc.pop();
        }
    }
    go(a, b, &mut acc, &mut out);
    out
}

/// All genotypes of `c`: pick one instance of each distinct letter, take the
/// subword, and delete superscripts.
pub fn genotypes_of_word(c: &GenWord) -> BTreeSet<Vec<u32>> {
    let mut out = BTreeSet::new();
    for_each_selection(c, |positions| {
        out.insert(positions.iter().map(|&p| c.0[p].base).collect());
    });
    out
}

/// Invoke `f` with the sorted position set of every one-instance-per-letter
/// selection.
fn for_each_selection(c: &GenWord, mut f: impl FnMut(&[usize])) {
    let mut occurrences: BTreeMap<Letter, Vec<usize>> = BTreeMap::new();
    for (p, &l) in c.0.iter().enumerate() {
        occurrences.entry(l).or_default().push(p);
    }
    let groups: Vec<&Vec<usize>> = occurrences.values().collect();
    let mut choice = vec![0usize; groups.len()];
    loop {
        let mut positions: Vec<usize> =
            choice.iter().zip(&groups).map(|(&i, g)| g[i]).collect();
        positions.sort_unstable();
        f(&positions);
        // Odometer over the occurrence lists.
        let mut k = 0;
        loop {
            if k == groups.len() {
                return;
            }
            choice[k] += 1;
            if choice[k] < groups[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// The definitional membership test for the genomic shuffle product:
/// superscripts weakly increase along equal bases, no two equal letters are
/// adjacent, and every one-instance-per-letter selection restricts to
/// exactly `A^gen` on the alphabet of `a` and `B^gen` on the alphabet of
/// `b`.
pub fn is_genomic_member(c: &GenWord, a: &[u32], b: &[u32]) -> bool {
    let mut last_sup: HashMap<u32, u32> = HashMap::new();
    for l in &c.0 {
        let e = last_sup.entry(l.base).or_insert(0);
        if l.sup < *e {
            return false;
        }
        *e = l.sup;
    }
    if c.0.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    let ag = gen_word(a).0;
    let bg = gen_word(b).0;
    let have: BTreeSet<Letter> = c.0.iter().copied().collect();
    let want: BTreeSet<Letter> = ag.iter().chain(&bg).copied().collect();
    if have != want {
        return false;
    }
    let abases: BTreeSet<u32> = a.iter().copied().collect();
    let mut ok = true;
    for_each_selection(c, |positions| {
        if !ok {
            return;
        }
        let sel: Vec<Letter> = positions.iter().map(|&p| c.0[p]).collect();
        let asub: Vec<Letter> = sel.iter().filter(|l| abases.contains(&l.base)).copied().collect();
        let bsub: Vec<Letter> = sel.iter().filter(|l| !abases.contains(&l.base)).copied().collect();
        if asub != ag || bsub != bg {
            ok = false;
        }
    });
    ok
}

/// All members of the genomic shuffle product of `a` and `b` of length at
/// most `maxlen`. Generation walks left to right, carrying a frontier into
/// each source word: the next letter is either a repeat of a word's current
/// frontier letter or its successor, which encodes the requirement that all
/// instances of consecutive source letters stay ordered. The definitional
/// check is still applied to every emitted word.
pub fn genomic_shuffle(a: &[u32], b: &[u32], maxlen: usize) -> BTreeSet<GenWord> {
    let sa: BTreeSet<u32> = a.iter().copied().collect();
    let sb: BTreeSet<u32> = b.iter().copied().collect();
    assert!(sa.is_disjoint(&sb), "genomic shuffle requires disjoint alphabets");
    let ag = gen_word(a).0;
    let bg = gen_word(b).0;
    let mut out = BTreeSet::new();
    let mut cur: Vec<Letter> = Vec::new();
    extend(&ag, &bg, 0, 0, maxlen, &mut cur, &mut out);
    out.retain(|w| {
        let member = is_genomic_member(w, a, b);
        debug_assert!(member, "generator emitted non-member {w}");
        member
    });
    out
}

fn extend(
    ag: &[Letter],
    bg: &[Letter],
    fa: usize,
    fb: usize,
    maxlen: usize,
    cur: &mut Vec<Letter>,
    out: &mut BTreeSet<GenWord>,
) {
    if fa == ag.len() && fb == bg.len() {
        out.insert(GenWord(cur.clone()));
    }
    if cur.len() == maxlen {
        return;
    }
    let last = cur.last().copied();
    let mut candidates: Vec<(Letter, usize, usize)> = Vec::new();
    if fa > 0 {
        candidates.push((ag[fa - 1], fa, fb));
    }
    if fa < ag.len() {
        candidates.push((ag[fa], fa + 1, fb));
    }
    if fb > 0 {
        candidates.push((bg[fb - 1], fa, fb));
    }
    if fb < bg.len() {
        candidates.push((bg[fb], fa, fb + 1));
    }
    for (l, nfa, nfb) in candidates {
        if last == Some(l) {
            continue;
        }
        if cur.len() + 1 + (ag.len() - nfa) + (bg.len() - nfb) > maxlen {
            continue;
        }
        cur.push(l);
        extend(ag, bg, nfa, nfb, maxlen, cur, out);
        cur.pop();
    }
}

/// The run structure: maximal strictly increasing runs in Letter order.
pub fn runs(c: &GenWord) -> RunSequence {
    let mut segs: Vec<Vec<Letter>> = Vec::new();
    for &l in &c.0 {
        match segs.last_mut() {
            Some(seg) if *seg.last().unwrap() < l => seg.push(l),
            _ => segs.push(vec![l]),
        }
    }
    RunSequence(segs)
}

/// All genotypes of a run sequence: one instance per distinct letter is
/// kept, the rest deleted, and superscripts dropped; segments may become
/// empty.
pub fn genotypes_of_runs(s: &RunSequence) -> BTreeSet<Vec<Vec<u32>>> {
    let mut occurrences: BTreeMap<Letter, Vec<(usize, usize)>> = BTreeMap::new();
    for (si, seg) in s.0.iter().enumerate() {
        for (pi, &l) in seg.iter().enumerate() {
            occurrences.entry(l).or_default().push((si, pi));
        }
    }
    let groups: Vec<&Vec<(usize, usize)>> = occurrences.values().collect();
    let mut out = BTreeSet::new();
    let mut choice = vec![0usize; groups.len()];
    loop {
        let mut kept: Vec<(usize, usize, u32)> = choice
            .iter()
            .zip(&groups)
            .map(|(&i, g)| {
                let (si, pi) = g[i];
                (si, pi, s.0[si][pi].base)
            })
            .collect();
        kept.sort_unstable();
        let mut geno = vec![Vec::new(); s.0.len()];
        for (si, _, base) in kept {
            geno[si].push(base);
        }
        out.insert(geno);
        let mut k = 0;
        loop {
            if k == groups.len() {
                return out;
            }
            choice[k] += 1;
            if choice[k] < groups[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// Letters per segment of a genotype, counting only bases passing the
/// filter.
pub fn comp(genotype: &[Vec<u32>], filter: impl Fn(u32) -> bool) -> WeakComposition {
    WeakComposition::new(
        genotype
            .iter()
            .map(|seg| seg.iter().filter(|&&v| filter(v)).count() as u32)
            .collect(),
    )
}

fn is_odd(v: u32) -> bool {
    v % 2 == 1
}

fn is_even(v: u32) -> bool {
    v % 2 == 0
}

/// Zeros of `a` that precede some nonzero entry.
fn z(a: &WeakComposition) -> usize {
    match a.entries().iter().rposition(|&v| v != 0) {
        Some(last) => a.entries()[..last].iter().filter(|&&v| v == 0).count(),
        None => 0,
    }
}

/// Both dominance conditions for every genotype of a run sequence, padding
/// to length `n`; more than `n` segments fails outright.
fn all_genotypes_dominate(
    s: &RunSequence,
    a: &WeakComposition,
    b: &WeakComposition,
) -> bool {
    let n = a.len();
    if s.num_segments() > n {
        return false;
    }
    genotypes_of_runs(s).iter().all(|g| {
        comp(g, is_odd).dominates(a) && comp(g, is_even).dominates(b)
    })
}

/// The same conditions checked only on the rightmost-instance genotype; the
/// tests verify this agrees with [`all_genotypes_dominate`].
fn rightmost_genotype_dominates(
    s: &RunSequence,
    a: &WeakComposition,
    b: &WeakComposition,
) -> bool {
    let n = a.len();
    if s.num_segments() > n {
        return false;
    }
    let mut rightmost: BTreeMap<Letter, (usize, usize)> = BTreeMap::new();
    for (si, seg) in s.0.iter().enumerate() {
        for (pi, &l) in seg.iter().enumerate() {
            rightmost.insert(l, (si, pi));
        }
    }
    let mut kept: Vec<(usize, usize, u32)> = rightmost
        .iter()
        .map(|(l, &(si, pi))| (si, pi, l.base))
        .collect();
    kept.sort_unstable();
    let mut geno = vec![Vec::new(); s.0.len()];
    for (si, _, base) in kept {
        geno[si].push(base);
    }
    comp(&geno, is_odd).dominates(a) && comp(&geno, is_even).dominates(b)
}

/// The source words of the genomic shuffle set: `a` maps to odd letters
/// `(2n-1)^{a_1} ... 3^{a_{n-1}} 1^{a_n}` and `b` to even letters
/// `(2n)^{b_1} ... 2^{b_n}`.
fn source_words(a: &WeakComposition, b: &WeakComposition) -> (Vec<u32>, Vec<u32>) {
    let n = a.len();
    let mut wa = Vec::new();
    let mut wb = Vec::new();
    for i in 0..n {
        let la = (2 * (n - i) - 1) as u32;
        for _ in 0..a.entry(i) {
            wa.push(la);
        }
        let lb = (2 * (n - i)) as u32;
        for _ in 0..b.entry(i) {
            wb.push(lb);
        }
    }
    (wa, wb)
}

/// The genomic shuffle set `GSS(a, b)`: genomic shuffles of the source
/// words, of length at most `|a|+|b|+z(a)+z(b)`, such that every genotype of
/// the run structure dominates `a` on odd letters and `b` on even letters.
///
/// # Panics
/// Panics if the lengths of `a` and `b` differ.
pub fn gss(a: &WeakComposition, b: &WeakComposition) -> BTreeSet<GenWord> {
    gss_impl(a, b, all_genotypes_dominate)
}

/// [`gss`] with the worst-genotype shortcut, kept separate so the tests can
/// confirm the two filters agree.
pub fn gss_rightmost(a: &WeakComposition, b: &WeakComposition) -> BTreeSet<GenWord> {
    gss_impl(a, b, rightmost_genotype_dominates)
}

fn gss_impl(
    a: &WeakComposition,
    b: &WeakComposition,
    dominates: fn(&RunSequence, &WeakComposition, &WeakComposition) -> bool,
) -> BTreeSet<GenWord> {
    assert_eq!(a.len(), b.len(), "gss requires equal-length compositions");
    let (wa, wb) = source_words(a, b);
    let maxlen = (a.size() + b.size()) as usize + z(a) + z(b);
    genomic_shuffle(&wa, &wb, maxlen)
        .into_iter()
        .filter(|c| dominates(&runs(c), a, b))
        .collect()
}

/// Insert empty segments into `runs(c)` to reach `n` segments so that every
/// genotype still satisfies both dominance conditions and the resulting
/// composition is dominance-minimal.
///
/// # Panics
/// Panics if no insertion is valid or the dominance-minimal one is not
/// unique (either would falsify the theory this implements).
pub fn bump_runs(c: &GenWord, a: &WeakComposition, b: &WeakComposition) -> RunSequence {
    let n = a.len();
    let base = runs(c);
    let k = base.num_segments();
    assert!(k <= n, "run structure of {c} has more than {n} segments");
    let mut valid: Vec<(WeakComposition, RunSequence)> = Vec::new();
    for slots in choose(n, k) {
        let mut segs: Vec<Vec<Letter>> = vec![Vec::new(); n];
        for (j, &slot) in slots.iter().enumerate() {
            segs[slot] = base.0[j].clone();
        }
        let padded = RunSequence(segs);
        if all_genotypes_dominate(&padded, a, b) {
            valid.push((padded.comp(|_| true), padded));
        }
    }
    let minima: Vec<&(WeakComposition, RunSequence)> = valid
        .iter()
        .filter(|(c0, _)| valid.iter().all(|(c1, _)| c1.dominates(c0)))
        .collect();
    match minima.as_slice() {
        [(_, seq)] => seq.clone(),
        [] => panic!("no dominance-minimum insertion for {c}"),
        _ => panic!("dominance-minimum insertion for {c} is not unique"),
    }
}

/// All size-`k` subsets of `0..n`, each sorted ascending.
fn choose(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut acc = Vec::with_capacity(k);
    fn go(n: usize, k: usize, start: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if acc.len() == k {
            out.push(acc.clone());
            return;
        }
        for v in start..n {
            if n - v < k - acc.len() {
                break;
            }
            acc.push(v);
            go(n, k, v + 1, acc, out);
            acc.pop();
        }
    }
    go(n, k, 0, &mut acc, &mut out);
    out
}

/// The glide product of `a` and `b`: the multiset of
/// `comp(bump_runs(C, a, b))` over `C` in `GSS(a, b)`. The multiplicity of
/// `c` is the glide structure constant `g^c_{a,b}`.
pub fn glide_product(
    a: &WeakComposition,
    b: &WeakComposition,
) -> BTreeMap<WeakComposition, i64> {
    let mut out: BTreeMap<WeakComposition, i64> = BTreeMap::new();
    for c in gss(a, b) {
        let comp = bump_runs(&c, a, b).comp(|_| true);
        *out.entry(comp).or_insert(0) += 1;
    }
    out
}

/// Littlewood-Richardson coefficients for `K_u K_v` in the glide basis:
/// `c^a_{u,v}` sums `g^a_{wt(P),wt(Q)}` over quasi-Yamanouchi pipe dream
/// pairs, attached to the beta power `|a| - inv(u) - inv(v)`.
pub fn lr_coefficients(u: &Permutation, v: &Permutation) -> BTreeMap<GlideIndex, i64> {
    let n = u.n().max(v.n());
    let u = u.embed(n);
    let v = v.embed(n);
    let invs = (u.inversions() + v.inversions()) as u32;
    let qu = enumerate_qpd(&u);
    let qv = enumerate_qpd(&v);
    let mut cache: HashMap<(WeakComposition, WeakComposition), BTreeMap<WeakComposition, i64>> =
        HashMap::new();
    let mut out: BTreeMap<GlideIndex, i64> = BTreeMap::new();
    for p in &qu {
        for q in &qv {
            let key = (p.weight(), q.weight());
            let g = cache
                .entry(key.clone())
                .or_insert_with(|| glide_product(&key.0, &key.1));
            for (c, &m) in g.iter() {
                let idx = GlideIndex::new(c.size() - invs, c.clone());
                *out.entry(idx).or_insert(0) += m;
            }
        }
    }
    out
}
