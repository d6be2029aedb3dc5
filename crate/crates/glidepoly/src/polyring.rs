//! Sparse exact arithmetic for polynomials in `x_1..x_n` with coefficients in
//! `Z[beta]`, plus beta-specialization and quasisymmetry testing.
//!
//! Coefficient overflow fails loudly: all integer arithmetic is checked.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::composition::WeakComposition;
use crate::error::ParseError;

fn checked_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("integer overflow in coefficient arithmetic")
}

fn checked_mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("integer overflow in coefficient arithmetic")
}

/// An integer polynomial in the formal parameter beta, stored densely by
/// beta-degree with no trailing zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BetaInt(Vec<i64>);

impl BetaInt {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        BetaInt(coeffs)
    }

    pub fn zero() -> Self {
        BetaInt(Vec::new())
    }

    pub fn one() -> Self {
        BetaInt(vec![1])
    }

    pub fn from_int(c: i64) -> Self {
        BetaInt::new(vec![c])
    }

    /// `c * beta^k`.
    pub fn beta_power(c: i64, k: u32) -> Self {
        if c == 0 {
            return BetaInt::zero();
        }
        let mut v = vec![0; k as usize + 1];
        v[k as usize] = c;
        BetaInt(v)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    /// Coefficient of `beta^k`.
    pub fn coeff(&self, k: u32) -> i64 {
        self.0.get(k as usize).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &BetaInt) -> BetaInt {
        let n = self.0.len().max(other.0.len());
        let v = (0..n)
            .map(|i| {
                checked_add(
                    self.0.get(i).copied().unwrap_or(0),
                    other.0.get(i).copied().unwrap_or(0),
                )
            })
            .collect();
        BetaInt::new(v)
    }

    pub fn neg(&self) -> BetaInt {
        BetaInt(self.0.iter().map(|&c| -c).collect())
    }

    pub fn mul(&self, other: &BetaInt) -> BetaInt {
        if self.is_zero() || other.is_zero() {
            return BetaInt::zero();
        }
        let mut v = vec![0i64; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in other.0.iter().enumerate() {
                v[i + j] = checked_add(v[i + j], checked_mul(a, b));
            }
        }
        BetaInt::new(v)
    }

    /// Evaluate at `beta = v`.
    pub fn eval(&self, v: i64) -> i64 {
        let mut acc = 0i64;
        for &c in self.0.iter().rev() {
            acc = checked_add(checked_mul(acc, v), c);
        }
        acc
    }
}

impl fmt::Display for BetaInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "{}", if c < 0 { " - " } else { " + " })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match (a, k) {
                (_, 0) => write!(f, "{a}")?,
                (1, 1) => write!(f, "b")?,
                (1, _) => write!(f, "b^{k}")?,
                (_, 1) => write!(f, "{a}*b")?,
                (_, _) => write!(f, "{a}*b^{k}")?,
            }
        }
        Ok(())
    }
}

/// A sparse polynomial in `x_1..x_nvars` over `Z[beta]`. Exponent keys all
/// have length `nvars`; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyZB {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BetaInt>,
}

/// Graded reverse-lexicographic comparison on exponent vectors: lower total
/// degree first; within a degree, the monomial whose rightmost differing
/// entry is larger comes first.
pub fn cmp_grevlex(a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    let da: u64 = a.iter().map(|&e| u64::from(e)).sum();
    let db: u64 = b.iter().map(|&e| u64::from(e)).sum();
    da.cmp(&db).then_with(|| {
        for i in (0..a.len().max(b.len())).rev() {
            let (x, y) = (
                a.get(i).copied().unwrap_or(0),
                b.get(i).copied().unwrap_or(0),
            );
            if x != y {
                return y.cmp(&x);
            }
        }
        std::cmp::Ordering::Equal
    })
}

impl PolyZB {
    pub fn zero(nvars: usize) -> Self {
        PolyZB { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: BetaInt) -> Self {
        let mut p = PolyZB::zero(nvars);
        p.add_term(&vec![0; nvars], &c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        PolyZB::constant(nvars, BetaInt::one())
    }

    /// The monomial `c * x^a`.
    pub fn monomial(a: &WeakComposition, c: BetaInt) -> Self {
        let mut p = PolyZB::zero(a.len());
        p.add_term(a.entries(), &c);
        p
    }

    /// `x_i` (one-indexed) in `nvars` variables.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(1 <= i && i <= nvars);
        let mut exp = vec![0; nvars];
        exp[i - 1] = 1;
        let mut p = PolyZB::zero(nvars);
        p.add_term(&exp, &BetaInt::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BetaInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    /// Coefficient of `x^a` (zero if absent).
    pub fn coeff(&self, a: &WeakComposition) -> BetaInt {
        assert_eq!(a.len(), self.nvars, "variable-count mismatch");
        self.terms.get(a.entries()).cloned().unwrap_or_else(BetaInt::zero)
    }

    pub fn add_term(&mut self, exp: &[u32], c: &BetaInt) {
        assert_eq!(exp.len(), self.nvars, "variable-count mismatch");
        if c.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry(exp.to_vec())
            .or_insert_with(BetaInt::zero);
        *entry = entry.add(c);
        if entry.is_zero() {
            self.terms.remove(exp);
        }
    }

    pub fn add(&self, other: &PolyZB) -> PolyZB {
        assert_eq!(self.nvars, other.nvars, "variable-count mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn sub(&self, other: &PolyZB) -> PolyZB {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> PolyZB {
        PolyZB {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &BetaInt) -> PolyZB {
        let mut out = PolyZB::zero(self.nvars);
        for (e, t) in &self.terms {
            out.add_term(e, &t.mul(c));
        }
        out
    }

    pub fn mul(&self, other: &PolyZB) -> PolyZB {
        assert_eq!(self.nvars, other.nvars, "variable-count mismatch");
        let mut out = PolyZB::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exp: Vec<u32> = ea
                    .iter()
                    .zip(eb)
                    .map(|(&x, &y)| x.checked_add(y).expect("exponent overflow"))
                    .collect();
                out.add_term(&exp, &ca.mul(cb));
            }
        }
        out
    }

    /// Evaluate beta at an integer; the result has constant-in-beta
    /// coefficients.
    pub fn specialize_beta(&self, v: i64) -> PolyZB {
        let mut out = PolyZB::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e, &BetaInt::from_int(c.eval(v)));
        }
        out
    }

    /// Drop every term using a variable of index greater than `m`, then
    /// truncate to `m` variables.
    pub fn restrict_vars(&self, m: usize) -> PolyZB {
        assert!(m <= self.nvars);
        let mut out = PolyZB::zero(m);
        for (e, c) in &self.terms {
            if e[m..].iter().all(|&x| x == 0) {
                out.add_term(&e[..m], c);
            }
        }
        out
    }

    /// Total degree of the lowest-degree and highest-degree terms, or `None`
    /// for the zero polynomial.
    pub fn degree_range(&self) -> Option<(u32, u32)> {
        let degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let min = degs.clone().min()?;
        let max = degs.max()?;
        Some((min, max))
    }

    /// True iff the coefficient of `x_{i_1}^{a_1}...x_{i_k}^{a_k}` depends
    /// only on `(a_1,...,a_k)`, not on the increasing index sequence.
    pub fn is_quasisymmetric(&self) -> bool {
        // Group terms by the packed word of nonzero exponents; a pattern with
        // k parts must appear at all C(n, k) index placements with one shared
        // coefficient.
        let mut groups: BTreeMap<Vec<u32>, Vec<&BetaInt>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let packed: Vec<u32> = e.iter().copied().filter(|&x| x != 0).collect();
            groups.entry(packed).or_default().push(c);
        }
        for (packed, coeffs) in groups {
            let k = packed.len();
            if coeffs.len() as u128 != binomial(self.nvars, k) {
                return false;
            }
            if coeffs.windows(2).any(|w| w[0] != w[1]) {
                return false;
            }
        }
        true
    }

    pub fn to_json(&self) -> String {
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| cmp_grevlex(a, b));
        let terms = keys
            .into_iter()
            .map(|e| TermJson {
                exp: e.clone(),
                beta: self.terms[e].coeffs().to_vec(),
            })
            .collect();
        let doc = PolyJson { nvars: self.nvars, terms };
        serde_json::to_string(&doc).expect("serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<PolyZB, ParseError> {
        let doc: PolyJson =
            serde_json::from_str(s).map_err(|e| ParseError::new(format!("bad polynomial JSON: {e}")))?;
        let mut p = PolyZB::zero(doc.nvars);
        for t in doc.terms {
            if t.exp.len() != doc.nvars {
                return Err(ParseError::new("exponent length does not match nvars"));
            }
            p.add_term(&t.exp, &BetaInt::new(t.beta));
        }
        Ok(p)
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    nvars: usize,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: Vec<u32>,
    beta: Vec<i64>,
}

impl fmt::Display for PolyZB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| cmp_grevlex(a, b));
        for (i, e) in keys.iter().enumerate() {
            let c = &self.terms[*e];
            let mut coeff = c.to_string();
            let needs_parens = coeff.contains(" + ") || coeff.contains(" - ");
            if i > 0 {
                if !needs_parens && coeff.starts_with('-') {
                    write!(f, " - ")?;
                    coeff.remove(0);
                } else {
                    write!(f, " + ")?;
                }
            }
            let is_one = coeff == "1";
            let constant_term = e.iter().all(|&x| x == 0);
            if constant_term {
                if needs_parens {
                    write!(f, "({coeff})")?;
                } else {
                    write!(f, "{coeff}")?;
                }
                continue;
            }
            if needs_parens {
                write!(f, "({coeff})*")?;
            } else if coeff == "-1" {
                write!(f, "-")?;
            } else if !is_one {
                write!(f, "{coeff}*")?;
            }
            let mut first = true;
            for (j, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                if x == 1 {
                    write!(f, "x{}", j + 1)?;
                } else {
                    write!(f, "x{}^{}", j + 1, x)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wc(entries: &[u32]) -> WeakComposition {
        WeakComposition::new(entries.to_vec())
    }

    #[test]
    fn betaint_canonical_form() {
        assert_eq!(BetaInt::new(vec![1, 0, 0]), BetaInt::from_int(1));
        assert!(BetaInt::new(vec![0, 0]).is_zero());
        assert_eq!(BetaInt::beta_power(2, 3).coeff(3), 2);
    }

    #[test]
    fn add_identity_and_distributivity() {
        let x1 = PolyZB::var(2, 1);
        let x2 = PolyZB::var(2, 2);
        assert_eq!(x1.add(&PolyZB::zero(2)), x1);
        let x1x2 = x1.mul(&x2);
        assert_eq!(x1x2.coeff(&wc(&[1, 1])), BetaInt::one());

        // (x1 + b*x1*x2) * x2 = x1*x2 + b*x1*x2^2
        let p = x1.add(&x1x2.scale(&BetaInt::beta_power(1, 1)));
        let q = p.mul(&x2);
        assert_eq!(q.coeff(&wc(&[1, 1])), BetaInt::one());
        assert_eq!(q.coeff(&wc(&[1, 2])), BetaInt::beta_power(1, 1));
        assert_eq!(q.num_terms(), 2);
    }

    #[test]
    fn specialize_beta_examples() {
        let x1 = PolyZB::var(2, 1);
        let p = x1.add(&x1.mul(&PolyZB::var(2, 2)).scale(&BetaInt::beta_power(1, 1)));
        assert_eq!(p.specialize_beta(0), x1);
        let at_minus_one = p.specialize_beta(-1);
        assert_eq!(at_minus_one.coeff(&wc(&[1, 0])), BetaInt::from_int(1));
        assert_eq!(at_minus_one.coeff(&wc(&[1, 1])), BetaInt::from_int(-1));
    }

    #[test]
    fn quasisymmetry_detects_constants_and_counterexamples() {
        assert!(PolyZB::one(3).is_quasisymmetric());
        assert!(PolyZB::zero(3).is_quasisymmetric());
        // x1 + x2 + x3 is quasisymmetric, x1 + x2 in 3 vars is not.
        let p = PolyZB::var(3, 1).add(&PolyZB::var(3, 2)).add(&PolyZB::var(3, 3));
        assert!(p.is_quasisymmetric());
        let q = PolyZB::var(3, 1).add(&PolyZB::var(3, 2));
        assert!(!q.is_quasisymmetric());
    }

    #[test]
    fn json_round_trip() {
        let p = PolyZB::var(3, 1)
            .mul(&PolyZB::var(3, 3))
            .scale(&BetaInt::new(vec![2, -1]))
            .add(&PolyZB::one(3));
        let s = p.to_json();
        assert_eq!(PolyZB::from_json(&s).unwrap(), p);
    }

    #[test]
    fn restrict_vars_drops_high_variables() {
        let p = PolyZB::var(3, 1).add(&PolyZB::var(3, 3));
        let r = p.restrict_vars(2);
        assert_eq!(r, PolyZB::var(2, 1));
    }

    #[test]
    #[should_panic(expected = "integer overflow")]
    fn overflow_fails_loudly() {
        let big = BetaInt::from_int(i64::MAX);
        let _ = big.add(&BetaInt::from_int(1));
    }
}
