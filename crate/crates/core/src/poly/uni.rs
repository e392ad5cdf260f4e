//! Dense univariate polynomials, Sturm sequences and exact bisection.

use num_traits::{One, Signed, Zero};

use crate::scalar::{self, Scalar};

/// Coefficients from the constant term up; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly(Vec<Scalar>);

impl UniPoly {
    pub fn new(mut c: Vec<Scalar>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        UniPoly(c)
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| scalar::int(x)).collect())
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> Scalar {
        self.0.last().cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.0.iter().rev().fold(Scalar::zero(), |acc, c| acc * x + c)
    }

    pub fn deriv(&self) -> Self {
        Self::new(self.0.iter().enumerate().skip(1).map(|(k, c)| c * scalar::int(k as i64)).collect())
    }

    pub fn neg(&self) -> Self {
        UniPoly(self.0.iter().map(|c| -c).collect())
    }

    /// Remainder of division by nonzero `d`.
    pub fn rem(&self, d: &UniPoly) -> UniPoly {
        let dd = d.degree().expect("division by zero polynomial");
        let mut r = self.0.clone();
        let lead = d.lead();
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1;
            let f = &r[k] / &lead;
            if !f.is_zero() {
                for (i, c) in d.0.iter().enumerate() {
                    r[k - dd + i] -= &f * c;
                }
            }
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        UniPoly::new(r)
    }

    /// Scaled to a monic-like form with positive leading coefficient, for size control.
    fn normalized(&self) -> UniPoly {
        let l = self.lead().abs();
        if l.is_zero() {
            return self.clone();
        }
        UniPoly(self.0.iter().map(|c| c / &l).collect())
    }

    /// Sturm sequence `p, p', -rem(p, p'), …`.
    pub fn sturm(&self) -> Vec<UniPoly> {
        let mut seq = vec![self.clone()];
        if self.is_zero() {
            return seq;
        }
        let mut prev = self.clone();
        let mut cur = self.deriv();
        while !cur.is_zero() {
            seq.push(cur.clone());
            let next = prev.rem(&cur).neg().normalized();
            prev = cur;
            cur = next;
        }
        seq
    }

    fn sign_changes(signs: impl Iterator<Item = i8>) -> usize {
        let s: Vec<i8> = signs.filter(|&x| x != 0).collect();
        s.windows(2).filter(|w| w[0] != w[1]).count()
    }

    fn changes_at(seq: &[UniPoly], x: &Scalar) -> usize {
        Self::sign_changes(seq.iter().map(|p| scalar::sign(&p.eval(x))))
    }

    fn changes_at_pos_inf(seq: &[UniPoly]) -> usize {
        Self::sign_changes(seq.iter().map(|p| scalar::sign(&p.lead())))
    }

    /// Number of distinct real roots in `(lo, hi]`, `hi = None` meaning `+∞`.
    pub fn count_roots(&self, lo: &Scalar, hi: Option<&Scalar>) -> usize {
        let seq = self.sturm();
        let vlo = Self::changes_at(&seq, lo);
        let vhi = match hi {
            Some(h) => Self::changes_at(&seq, h),
            None => Self::changes_at_pos_inf(&seq),
        };
        vlo.saturating_sub(vhi)
    }

    /// Bisects a sign change on `[lo, hi]` down to width `tol`. Returns the bracket.
    pub fn bisect(&self, lo: &Scalar, hi: &Scalar, tol: &Scalar) -> Option<(Scalar, Scalar)> {
        let (mut lo, mut hi) = (lo.clone(), hi.clone());
        let slo = scalar::sign(&self.eval(&lo));
        let shi = scalar::sign(&self.eval(&hi));
        if slo == 0 {
            return Some((lo.clone(), lo));
        }
        if shi == 0 {
            return Some((hi.clone(), hi));
        }
        if slo == shi {
            return None;
        }
        let two = scalar::int(2);
        while &hi - &lo > *tol {
            let mid = (&lo + &hi) / &two;
            let s = scalar::sign(&self.eval(&mid));
            if s == 0 {
                return Some((mid.clone(), mid));
            }
            if s == slo {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Some((lo, hi))
    }

    /// Cauchy bound on the absolute value of every root.
    pub fn root_bound(&self) -> Scalar {
        let l = self.lead().abs();
        let m = self.0.iter().rev().skip(1).map(|c| c.abs() / &l).fold(Scalar::zero(), |a, b| if b > a { b } else { a });
        m + Scalar::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, q};

    #[test]
    fn sturm_counts() {
        // (x-1)(x-2)(x+3)
        let p = UniPoly::from_ints(&[6, -7, 0, 1]);
        assert_eq!(p.count_roots(&int(-10), Some(&int(10))), 3);
        assert_eq!(p.count_roots(&int(0), None), 2);
        assert_eq!(p.count_roots(&q(3, 2), Some(&int(5))), 1);
        // repeated roots are counted once
        let sq = UniPoly::from_ints(&[1, -2, 1]);
        assert_eq!(sq.count_roots(&int(0), Some(&int(2))), 1);
    }

    #[test]
    fn bisection_brackets() {
        let p = UniPoly::from_ints(&[-2, 0, 1]);
        let (lo, hi) = p.bisect(&int(1), &int(2), &scalar::pow2_neg(30)).unwrap();
        assert!(&hi - &lo <= scalar::pow2_neg(30));
        assert!(scalar::sign(&p.eval(&lo)) < 0 && scalar::sign(&p.eval(&hi)) > 0);
        assert!(p.bisect(&int(2), &int(3), &q(1, 8)).is_none());
    }

    #[test]
    fn remainder() {
        let p = UniPoly::from_ints(&[1, 0, 0, 1]);
        let d = UniPoly::from_ints(&[1, 1]);
        assert!(p.rem(&d).is_zero());
    }
}
