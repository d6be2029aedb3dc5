//! Beta-Grothendieck and Schubert polynomials, computed from pipe dreams,
//! together with an independent divided-difference recursion and the
//! glide expansion read off quasi-Yamanouchi pipe dreams.

use std::collections::{BTreeMap, HashMap};

use crate::basis::GlideIndex;
use crate::pipedream::{enumerate_pd, enumerate_qpd, Permutation, PipeDream};
use crate::polyring::{BetaInt, PolyZB};

/// `K_w = sum over pipe dreams P of w of beta^ex(P) x^wt(P)`, in `n`
/// variables for `w` in `S_n`.
pub fn grothendieck_poly(w: &Permutation) -> PolyZB {
    grothendieck_from_pds(w.n(), &enumerate_pd(w))
}

/// The same sum over an explicitly supplied set of pipe dreams, so callers
/// that enumerate all of `S_n` at once can avoid re-enumeration.
pub fn grothendieck_from_pds(n: usize, pds: &[PipeDream]) -> PolyZB {
    let mut f = PolyZB::zero(n);
    for p in pds {
        let c = BetaInt::beta_power(1, p.excess());
        f.add_term(p.weight().entries(), &c);
    }
    f
}

/// The Schubert polynomial: `K_w` at `beta = 0`.
pub fn schubert_poly(w: &Permutation) -> PolyZB {
    grothendieck_poly(w).specialize_beta(0)
}

/// Newton divided difference `(f - s_i f) / (x_i - x_{i+1})`, applied
/// termwise (`i` one-indexed, `i < nvars`).
pub fn divided_difference(f: &PolyZB, i: usize) -> PolyZB {
    assert!(i >= 1 && i < f.nvars());
    let mut out = PolyZB::zero(f.nvars());
    for (exp, c) in f.terms() {
        let a = exp[i - 1];
        let b = exp[i];
        if a == b {
            continue;
        }
        // (x_i^a x_{i+1}^b - x_i^b x_{i+1}^a) / (x_i - x_{i+1})
        //   = sign * sum of x_i^p x_{i+1}^{a+b-1-p} for p between min and max.
        let (lo, hi) = (a.min(b), a.max(b));
        let term = if a > b { c.clone() } else { c.neg() };
        let mut e = exp.to_vec();
        for p in lo..hi {
            e[i - 1] = p;
            e[i] = a + b - 1 - p;
            out.add_term(&e, &term);
        }
    }
    out
}

/// Isobaric variant used by the Grothendieck recursion:
/// `pi_i f = d_i((1 + beta x_{i+1}) f)`.
pub fn isobaric_divided_difference(f: &PolyZB, i: usize) -> PolyZB {
    let bx = PolyZB::var(f.nvars(), i + 1).scale(&BetaInt::beta_power(1, 1));
    divided_difference(&f.add(&f.mul(&bx)), i)
}

/// Which ascent to recurse on; the result is the same either way, which the
/// tests use as a path-independence check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AscentChoice {
    First,
    Last,
}

/// Compute `K_w` by the divided-difference recursion from the longest
/// element: `K_{w0} = x_1^{n-1} x_2^{n-2} ... x_{n-1}`, and `K_w = pi_i
/// K_{w s_i}` whenever `w(i) < w(i+1)`. Independent of pipe dreams.
pub fn grothendieck_via_divided_difference(w: &Permutation, choice: AscentChoice) -> PolyZB {
    let mut memo: HashMap<Permutation, PolyZB> = HashMap::new();
    go(w, choice, &mut memo)
}

fn go(w: &Permutation, choice: AscentChoice, memo: &mut HashMap<Permutation, PolyZB>) -> PolyZB {
    if let Some(f) = memo.get(w) {
        return f.clone();
    }
    let n = w.n();
    let ascents: Vec<usize> = (1..n).filter(|&i| w.apply(i) < w.apply(i + 1)).collect();
    let f = if ascents.is_empty() {
        let exp: Vec<u32> = (0..n).map(|i| (n - 1 - i) as u32).collect();
        let mut f = PolyZB::zero(n);
        f.add_term(&exp, &BetaInt::one());
        f
    } else {
        let i = match choice {
            AscentChoice::First => ascents[0],
            AscentChoice::Last => *ascents.last().unwrap(),
        };
        let v = w.swap_positions(i);
        let g = go(&v, choice, memo);
        isobaric_divided_difference(&g, i)
    };
    memo.insert(w.clone(), f.clone());
    f
}

/// The glide expansion of `K_w`: each quasi-Yamanouchi pipe dream `Q`
/// contributes `beta^ex(Q) G_{wt(Q)}`.
pub fn glide_expansion(w: &Permutation) -> BTreeMap<GlideIndex, i64> {
    glide_expansion_from_qpds(&enumerate_qpd(w))
}

pub fn glide_expansion_from_qpds(qpds: &[PipeDream]) -> BTreeMap<GlideIndex, i64> {
    let mut out: BTreeMap<GlideIndex, i64> = BTreeMap::new();
    for q in qpds {
        *out.entry(GlideIndex::new(q.excess(), q.weight())).or_insert(0) += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::{expand_in_glide, reassemble_glide};
    use crate::composition::WeakComposition;
    use crate::pipedream::enumerate_all;

    fn poly(n: usize, terms: &[(&[u32], i64, u32)]) -> PolyZB {
        let mut f = PolyZB::zero(n);
        for &(exp, c, k) in terms {
            f.add_term(exp, &BetaInt::beta_power(c, k));
        }
        f
    }

    #[test]
    fn small_grothendieck_polynomials() {
        let w: Permutation = "21".parse().unwrap();
        assert_eq!(grothendieck_poly(&w), poly(2, &[(&[1, 0], 1, 0)]));

        let w: Permutation = "132".parse().unwrap();
        let expected = poly(3, &[(&[1, 0, 0], 1, 0), (&[0, 1, 0], 1, 0), (&[1, 1, 0], 1, 1)]);
        assert_eq!(grothendieck_poly(&w), expected);
        assert_eq!(
            schubert_poly(&w),
            poly(3, &[(&[1, 0, 0], 1, 0), (&[0, 1, 0], 1, 0)])
        );

        assert_eq!(grothendieck_poly(&Permutation::identity(3)), PolyZB::one(3));
    }

    #[test]
    fn grothendieck_13524_printed_expansion() {
        let w: Permutation = "13524".parse().unwrap();
        let expected = poly(
            5,
            &[
                (&[2, 1, 0, 0, 0], 1, 0),
                (&[2, 0, 1, 0, 0], 1, 0),
                (&[1, 2, 0, 0, 0], 1, 0),
                (&[1, 1, 1, 0, 0], 2, 0),
                (&[1, 0, 2, 0, 0], 1, 0),
                (&[0, 2, 1, 0, 0], 1, 0),
                (&[0, 1, 2, 0, 0], 1, 0),
                (&[2, 2, 0, 0, 0], 1, 1),
                (&[2, 1, 1, 0, 0], 3, 1),
                (&[2, 0, 2, 0, 0], 1, 1),
                (&[1, 2, 1, 0, 0], 3, 1),
                (&[1, 1, 2, 0, 0], 3, 1),
                (&[0, 2, 2, 0, 0], 1, 1),
                (&[2, 2, 1, 0, 0], 2, 2),
                (&[2, 1, 2, 0, 0], 2, 2),
                (&[1, 2, 2, 0, 0], 2, 2),
                (&[2, 2, 2, 0, 0], 1, 3),
            ],
        );
        assert_eq!(grothendieck_poly(&w), expected);
    }

    #[test]
    fn divided_difference_basics() {
        // d_1 of x1^2 x2 = x1 x2 (a=2, b=1).
        let f = poly(2, &[(&[2, 1], 1, 0)]);
        assert_eq!(divided_difference(&f, 1), poly(2, &[(&[1, 1], 1, 0)]));
        // d_1 of x1^2 = x1 + x2.
        let f = poly(2, &[(&[2, 0], 1, 0)]);
        assert_eq!(
            divided_difference(&f, 1),
            poly(2, &[(&[1, 0], 1, 0), (&[0, 1], 1, 0)])
        );
        // Symmetric input is killed.
        let f = poly(2, &[(&[1, 1], 5, 2)]);
        assert!(divided_difference(&f, 1).is_zero());
    }

    #[test]
    fn divided_difference_recursion_matches_pipe_dreams() {
        for n in 2..=4 {
            for (w, pds) in enumerate_all(n) {
                let from_pds = grothendieck_from_pds(n, &pds);
                let first = grothendieck_via_divided_difference(&w, AscentChoice::First);
                assert_eq!(from_pds, first, "w = {w}");
                let last = grothendieck_via_divided_difference(&w, AscentChoice::Last);
                assert_eq!(first, last, "path dependence at w = {w}");
            }
        }
    }

    #[test]
    fn glide_expansion_13524_printed() {
        let w: Permutation = "13524".parse().unwrap();
        let got = glide_expansion(&w);
        let shape = |e: &[u32]| WeakComposition::new(e.to_vec());
        let expected: BTreeMap<GlideIndex, i64> = [
            (GlideIndex::new(0, shape(&[0, 1, 2, 0, 0])), 1),
            (GlideIndex::new(0, shape(&[0, 2, 1, 0, 0])), 1),
            (GlideIndex::new(1, shape(&[0, 2, 2, 0, 0])), 1),
            (GlideIndex::new(1, shape(&[1, 2, 1, 0, 0])), 1),
            (GlideIndex::new(2, shape(&[1, 2, 2, 0, 0])), 1),
            (GlideIndex::new(2, shape(&[2, 2, 1, 0, 0])), 1),
            (GlideIndex::new(3, shape(&[2, 2, 2, 0, 0])), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn glide_expansion_reassembles_and_matches_generic_expansion() {
        for (w, pds) in enumerate_all(4) {
            let k = grothendieck_from_pds(4, &pds);
            let qpds: Vec<PipeDream> = pds
                .iter()
                .filter(|p| p.is_quasi_yamanouchi())
                .cloned()
                .collect();
            let exp = glide_expansion_from_qpds(&qpds);
            let back = reassemble_glide(exp.iter(), 4);
            assert_eq!(back, k, "reassembly failed for w = {w}");
            let generic = expand_in_glide(&k);
            assert_eq!(exp, generic, "expansions disagree for w = {w}");
        }
    }
}
