//! Polynomial bases indexed by compositions: glide, fundamental slide,
//! fundamental quasisymmetric, truncated multi-fundamental quasisymmetric and
//! quasisymmetric glide polynomials, together with the generic expansion of an
//! arbitrary polynomial in the glide basis.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use crate::composition::{StrongComposition, WeakComposition};
use crate::polyring::{BetaInt, PolyZB};

/// Index `(k, a)` of a basis element `beta^k * G_a`, ordered by the total
/// order that drives the expansion algorithm: a shape with more zeros is
/// larger; for equal zero counts the reverse-lexicographically later shape is
/// larger; for equal shapes the larger beta power wins.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GlideIndex {
    pub beta_power: u32,
    pub shape: WeakComposition,
}

impl GlideIndex {
    pub fn new(beta_power: u32, shape: WeakComposition) -> Self {
        GlideIndex { beta_power, shape }
    }
}

impl Ord for GlideIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        assert_eq!(self.shape.len(), other.shape.len(), "incomparable shape lengths");
        let za = self.shape.zero_count();
        let zb = other.shape.zero_count();
        za.cmp(&zb)
            .then_with(|| {
                // Reverse-lexicographic: compare from the last entry backwards.
                let (a, b) = (self.shape.entries(), other.shape.entries());
                for i in (0..a.len()).rev() {
                    if a[i] != b[i] {
                        return a[i].cmp(&b[i]);
                    }
                }
                Ordering::Equal
            })
            .then_with(|| self.beta_power.cmp(&other.beta_power))
    }
}

impl PartialOrd for GlideIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The glide polynomial `G_a = sum_b beta^{ex(b)} x^b` over the glides of `a`.
pub fn glide_poly(a: &WeakComposition) -> PolyZB {
    let mut p = PolyZB::zero(a.len());
    for b in a.glides() {
        p.add_term(b.values().entries(), &BetaInt::beta_power(1, b.excess()));
    }
    p
}

/// The fundamental slide polynomial `F_a`, computed as the beta = 0
/// specialization of the glide polynomial.
pub fn slide_poly(a: &WeakComposition) -> PolyZB {
    glide_poly(a).specialize_beta(0)
}

/// `F_a` computed from its own definition: the sum of `x^b` over weak
/// compositions `b >= a` whose flattening refines `flat(a)`. Must agree with
/// [`slide_poly`].
pub fn slide_poly_direct(a: &WeakComposition) -> PolyZB {
    let flat = a.flatten();
    let mut p = PolyZB::zero(a.len());
    for b in compositions_of(a.size(), a.len()) {
        let b = WeakComposition::new(b);
        if b.dominates(a) && b.flatten().refines(&flat) {
            p.add_term(b.entries(), &BetaInt::one());
        }
    }
    p
}

/// Gessel's fundamental quasisymmetric polynomial `F_a(x_1..x_n)`: the sum of
/// `x^b` over weak compositions `b` of length `n` with `flat(b)` refining `a`.
pub fn fundamental_qs(a: &StrongComposition, n: usize) -> PolyZB {
    let mut p = PolyZB::zero(n);
    for b in compositions_of(a.size(), n) {
        let b = WeakComposition::new(b);
        if b.flatten().refines(a) {
            p.add_term(b.entries(), &BetaInt::one());
        }
    }
    p
}

/// Truncation of the multi-fundamental quasisymmetric function: the sum of
/// `x^{wt(sigma)}` over chains of `|a|` nonempty subsets of `{1..m}`, where
/// consecutive sets satisfy `max < min` at prefix sums of `a` and
/// `max <= min` elsewhere.
pub fn multifundamental_truncated(a: &StrongComposition, m: usize) -> PolyZB {
    let total = a.size() as usize;
    let strict_after: Vec<bool> = {
        let mut prefix_sums = std::collections::BTreeSet::new();
        let mut acc = 0u32;
        for &p in a.parts() {
            acc += p;
            prefix_sums.insert(acc);
        }
        (1..=total).map(|i| prefix_sums.contains(&(i as u32))).collect()
    };
    let mut p = PolyZB::zero(m);
    let mut weight = vec![0u32; m];
    chains(total, m, &strict_after, 0, 0, false, &mut weight, &mut p);
    p
}

/// Extend a chain of subsets one set at a time. `lower` is the smallest value
/// the next set may use (`max` of the previous set, plus one when the
/// separation is strict).
fn chains(
    total: usize,
    m: usize,
    strict_after: &[bool],
    idx: usize,
    lower: usize,
    lower_excluded: bool,
    weight: &mut Vec<u32>,
    out: &mut PolyZB,
) {
    if idx == total {
        out.add_term(weight, &BetaInt::one());
        return;
    }
    let min_start = if lower_excluded { lower + 1 } else { lower.max(1) };
    // Choose the next set as a sorted list of distinct values in {min_start..m}.
    let mut set: Vec<usize> = Vec::new();
    subsets(min_start, m, &mut set, &mut |s: &[usize]| {
        for &v in s {
            weight[v - 1] += 1;
        }
        let max = *s.last().unwrap();
        chains(total, m, strict_after, idx + 1, max, strict_after[idx], weight, out);
        for &v in s {
            weight[v - 1] -= 1;
        }
    });
}

fn subsets(from: usize, to: usize, acc: &mut Vec<usize>, emit: &mut dyn FnMut(&[usize])) {
    for v in from..=to {
        acc.push(v);
        emit(acc);
        subsets(v + 1, to, acc, emit);
        acc.pop();
    }
}

/// The quasisymmetric glide polynomial `G_a(x_1..x_n)`: the glide polynomial
/// of `a` padded in front with zeros to length `n`, or zero if `a` is too long.
pub fn quasisym_glide(a: &StrongComposition, n: usize) -> PolyZB {
    if a.len() > n {
        return PolyZB::zero(n);
    }
    glide_poly(&a.pad_front(n))
}

/// Expansion of `quasisym_glide(a, n)` in the fundamental basis, keyed by
/// `(flat(b), ex(b))` over the unsplit glides `b` of the padded shape.
pub fn expand_unsplit(
    a: &StrongComposition,
    n: usize,
) -> BTreeMap<(StrongComposition, u32), i64> {
    let mut out = BTreeMap::new();
    if a.len() > n {
        return out;
    }
    for b in a.pad_front(n).unsplit_glides() {
        *out.entry((b.flatten(), b.excess())).or_insert(0) += 1;
    }
    out
}

/// Reassemble a glide-basis coefficient map into a polynomial in `nvars`
/// variables.
pub fn reassemble_glide<'a, I>(terms: I, nvars: usize) -> PolyZB
where
    I: IntoIterator<Item = (&'a GlideIndex, &'a i64)>,
{
    let mut cache: HashMap<WeakComposition, PolyZB> = HashMap::new();
    let mut p = PolyZB::zero(nvars);
    for (idx, &c) in terms {
        let g = cache
            .entry(idx.shape.clone())
            .or_insert_with(|| glide_poly(&idx.shape));
        p = p.add(&g.scale(&BetaInt::beta_power(c, idx.beta_power)));
    }
    p
}

/// Expand an arbitrary polynomial in the glide basis by repeatedly stripping
/// the leading term in the [`GlideIndex`] order. The leading monomial of
/// `G_a` is `beta^0 x^a`, so each step strictly decreases the leading index
/// and the loop terminates.
pub fn expand_in_glide(p: &PolyZB) -> BTreeMap<GlideIndex, i64> {
    let mut rest = p.clone();
    let mut out: BTreeMap<GlideIndex, i64> = BTreeMap::new();
    let mut cache: HashMap<WeakComposition, PolyZB> = HashMap::new();
    while !rest.is_zero() {
        let (idx, c) = leading_term(&rest);
        let g = cache
            .entry(idx.shape.clone())
            .or_insert_with(|| glide_poly(&idx.shape));
        rest = rest.sub(&g.scale(&BetaInt::beta_power(c, idx.beta_power)));
        *out.entry(idx).or_insert(0) += c;
    }
    out.retain(|_, c| *c != 0);
    out
}

fn leading_term(p: &PolyZB) -> (GlideIndex, i64) {
    let mut best: Option<(GlideIndex, i64)> = None;
    for (exp, coeff) in p.terms() {
        for (k, &c) in coeff.coeffs().iter().enumerate() {
            if c == 0 {
                continue;
            }
            let idx = GlideIndex::new(k as u32, WeakComposition::new(exp.to_vec()));
            match &best {
                Some((b, _)) if *b >= idx => {}
                _ => best = Some((idx, c)),
            }
        }
    }
    best.expect("leading term of nonzero polynomial")
}

/// Check that the truncated stable limit identity holds for `a` at `m`:
/// `G^{(1)}_{0^m a}` with variables past `x_m` killed equals the truncated
/// multi-fundamental quasisymmetric function of `flat(a)`.
pub fn stable_limit_check(a: &WeakComposition, m: usize) -> bool {
    let padded = a.prepend_zeros(m);
    let lhs = glide_poly(&padded).specialize_beta(1).restrict_vars(m);
    let rhs = multifundamental_truncated(&a.flatten(), m);
    lhs == rhs
}

/// All weak compositions of `total` into `parts` parts.
pub fn compositions_of(total: u32, parts: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut acc = Vec::with_capacity(parts);
    fn go(total: u32, parts: usize, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if acc.len() == parts {
            if total == 0 {
                out.push(acc.clone());
            }
            return;
        }
        if acc.len() + 1 == parts {
            acc.push(total);
            out.push(acc.clone());
            acc.pop();
            return;
        }
        for v in 0..=total {
            acc.push(v);
            go(total - v, parts, acc, out);
            acc.pop();
        }
    }
    go(total, parts, &mut acc, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wc(entries: &[u32]) -> WeakComposition {
        WeakComposition::new(entries.to_vec())
    }

    fn sc(parts: &[u32]) -> StrongComposition {
        StrongComposition::new(parts.to_vec())
    }

    #[test]
    fn glide_poly_spot_checks() {
        let g = glide_poly(&wc(&[0, 1, 0, 2]));
        assert_eq!(g.coeff(&wc(&[0, 1, 0, 2])), BetaInt::one());
        assert_eq!(g.coeff(&wc(&[1, 1, 0, 2])), BetaInt::beta_power(2, 1));
        assert_eq!(g.coeff(&wc(&[1, 1, 1, 1])), BetaInt::beta_power(3, 1));
        assert_eq!(g.coeff(&wc(&[1, 2, 1, 1])), BetaInt::beta_power(1, 2));
        assert_eq!(glide_poly(&wc(&[0, 0])), PolyZB::one(2));
    }

    #[test]
    fn slide_poly_matches_printed_nine_terms() {
        let s = slide_poly(&wc(&[0, 1, 0, 2]));
        let monos = [
            [0, 1, 0, 2], [1, 0, 0, 2], [0, 1, 2, 0], [1, 0, 2, 0], [1, 2, 0, 0],
            [0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, 1], [1, 1, 1, 0],
        ];
        assert_eq!(s.num_terms(), monos.len());
        for m in monos {
            assert_eq!(s.coeff(&wc(&m)), BetaInt::one());
        }
    }

    #[test]
    fn slide_routes_agree() {
        for n in 1..=4usize {
            for total in 0..=4u32 {
                for a in compositions_of(total, n) {
                    let a = WeakComposition::new(a);
                    assert_eq!(slide_poly(&a), slide_poly_direct(&a), "a = {a}");
                }
            }
        }
        assert_eq!(slide_poly(&wc(&[2, 0])), PolyZB::monomial(&wc(&[2, 0]), BetaInt::one()));
    }

    #[test]
    fn fundamental_qs_examples() {
        assert_eq!(
            fundamental_qs(&sc(&[1]), 2),
            PolyZB::var(2, 1).add(&PolyZB::var(2, 2))
        );
        let f = fundamental_qs(&sc(&[1, 2]), 3);
        assert_eq!(f.num_terms(), 4);
        for m in [[1, 2, 0], [1, 0, 2], [0, 1, 2], [1, 1, 1]] {
            assert_eq!(f.coeff(&wc(&m)), BetaInt::one());
        }
        // F_a(x_1..x_n) = slide_poly(0^{n - l(a)} a)
        for (a, n) in [(sc(&[1, 2]), 3), (sc(&[2]), 4), (sc(&[1, 1]), 2)] {
            assert_eq!(fundamental_qs(&a, n), slide_poly(&a.pad_front(n)));
        }
    }

    #[test]
    fn multifundamental_examples() {
        // a = (1), m = 2: chains ({1}), ({2}), ({1,2}).
        let p = multifundamental_truncated(&sc(&[1]), 2);
        let expected = PolyZB::var(2, 1)
            .add(&PolyZB::var(2, 2))
            .add(&PolyZB::var(2, 1).mul(&PolyZB::var(2, 2)));
        assert_eq!(p, expected);
        // The chain ({1,3},{3,4},{5}) contributes x1 x3^2 x4 x5 for a = (3), m = 5.
        let p = multifundamental_truncated(&sc(&[3]), 5);
        assert!(!p.coeff(&wc(&[1, 0, 2, 1, 1])).is_zero());
        // Empty composition: the empty chain only.
        assert_eq!(multifundamental_truncated(&StrongComposition::empty(), 3), PolyZB::one(3));
    }

    #[test]
    fn quasisym_glide_expansion_12_in_4_vars() {
        let g = quasisym_glide(&sc(&[1, 2]), 4);
        let mut expected = PolyZB::zero(4);
        let terms: [(&[u32], i64, u32); 6] = [
            (&[1, 2], 1, 0),
            (&[1, 1, 2], 2, 1),
            (&[1, 2, 1], 1, 1),
            (&[1, 1, 1, 2], 3, 2),
            (&[1, 1, 2, 1], 2, 2),
            (&[1, 2, 1, 1], 1, 2),
        ];
        for (parts, c, k) in terms {
            let f = fundamental_qs(&StrongComposition::new(parts.to_vec()), 4);
            expected = expected.add(&f.scale(&BetaInt::beta_power(c, k)));
        }
        assert_eq!(g, expected);
        assert!(g.is_quasisymmetric());
        assert_eq!(quasisym_glide(&sc(&[1, 2, 3]), 2), PolyZB::zero(2));
    }

    #[test]
    fn expand_unsplit_examples() {
        let m = expand_unsplit(&sc(&[1, 2]), 4);
        let expected: BTreeMap<(StrongComposition, u32), i64> = [
            ((sc(&[1, 2]), 0), 1),
            ((sc(&[1, 1, 2]), 1), 2),
            ((sc(&[1, 2, 1]), 1), 1),
            ((sc(&[1, 1, 1, 2]), 2), 3),
            ((sc(&[1, 1, 2, 1]), 2), 2),
            ((sc(&[1, 2, 1, 1]), 2), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(m, expected);

        let m = expand_unsplit(&sc(&[1]), 1);
        assert_eq!(m, [((sc(&[1]), 0), 1)].into_iter().collect());
        assert!(expand_unsplit(&sc(&[1, 1]), 1).is_empty());

        // Reassembly oracle for a = (2), n = 2.
        let m = expand_unsplit(&sc(&[2]), 2);
        let mut total = PolyZB::zero(2);
        for ((flat, k), c) in &m {
            total = total.add(&fundamental_qs(flat, 2).scale(&BetaInt::beta_power(*c, *k)));
        }
        assert_eq!(total, quasisym_glide(&sc(&[2]), 2));
    }

    #[test]
    fn glide_leading_term_is_beta0_xa() {
        for n in 1..=4usize {
            for total in 0..=4u32 {
                for a in compositions_of(total, n) {
                    let a = WeakComposition::new(a);
                    let g = glide_poly(&a);
                    let lead = super::leading_term(&g);
                    assert_eq!(lead.0, GlideIndex::new(0, a.clone()), "a = {a}");
                    assert_eq!(lead.1, 1);
                }
            }
        }
    }

    #[test]
    fn expand_in_glide_basis_element() {
        let a = wc(&[0, 1, 0, 2]);
        let m = expand_in_glide(&glide_poly(&a));
        assert_eq!(m, [(GlideIndex::new(0, a), 1)].into_iter().collect());
    }

    #[test]
    fn expand_in_glide_round_trips_x1x2() {
        let p = PolyZB::var(2, 1).mul(&PolyZB::var(2, 2));
        let m = expand_in_glide(&p);
        assert_eq!(reassemble_glide(m.iter(), 2), p);
    }

    #[test]
    fn stable_limit_examples() {
        assert!(stable_limit_check(&wc(&[3]), 3));
        assert!(stable_limit_check(&wc(&[1, 2]), 4));
        assert!(stable_limit_check(&wc(&[0, 0]), 2));
    }
}
