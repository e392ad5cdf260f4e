use std::ops::{Add, Mul, Neg, Sub};

use super::MultiPoly;
use crate::scalar::Scalar;

/// Quotient of polynomials. No gcd cancellation is attempted; equality is by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RatFunc {
    pub num: MultiPoly,
    pub den: MultiPoly,
}

impl RatFunc {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        RatFunc { num, den }
    }

    pub fn poly(p: MultiPoly) -> Self {
        RatFunc { num: p, den: MultiPoly::one() }
    }

    pub fn parse(num: &str, den: &str) -> Self {
        Self::new(MultiPoly::p(num), MultiPoly::p(den))
    }

    /// `num·o.den == o.num·den`.
    pub fn equals(&self, o: &RatFunc) -> bool {
        &self.num * &o.den == &o.num * &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn deriv(&self, v: char) -> Self {
        let n = &(&self.num.deriv(v) * &self.den) - &(&self.num * &self.den.deriv(v));
        RatFunc::new(n, &self.den * &self.den)
    }

    pub fn subst_scalar(&self, v: char, x: &Scalar) -> Self {
        RatFunc::new(self.num.subst_scalar(v, x), self.den.subst_scalar(v, x))
    }

    pub fn recip(&self) -> Self {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    /// Divides numerator and denominator by `g` when it divides both.
    pub fn cancel_by(&self, g: &MultiPoly) -> Self {
        match (self.num.exact_div(g), self.den.exact_div(g)) {
            (Some(n), Some(d)) => RatFunc::new(n, d),
            _ => self.clone(),
        }
    }

    pub fn eval(&self, vals: &[(char, Scalar)]) -> crate::error::Result<Scalar> {
        let d = self.den.eval(vals)?;
        if num_traits::Zero::is_zero(&d) {
            return Err(crate::error::Error::ParamOutOfRange("pole".into()));
        }
        Ok(self.num.eval(vals)? / d)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        if self.den == o.den {
            return RatFunc::new(&self.num + &o.num, self.den.clone());
        }
        RatFunc::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc::new(-&self.num, self.den.clone())
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        self + &(-o)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &o.num, &self.den * &o.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quotient_rule() {
        let f = RatFunc::parse("x^2", "x+1");
        let d = f.deriv('x');
        assert!(d.equals(&RatFunc::parse("x^2 + 2x", "(x+1)^2")));
    }

    #[test]
    fn cross_multiplied_equality() {
        assert!(RatFunc::parse("2x", "4x^2").equals(&RatFunc::parse("1", "2x")));
        assert!(!RatFunc::parse("1", "x").equals(&RatFunc::parse("1", "y")));
    }
}
