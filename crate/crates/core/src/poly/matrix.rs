use std::ops::{Add, Mul, Sub};

use super::MultiPoly;
use crate::kernel::Mat3;
use crate::scalar::Scalar;

/// 3×3 matrix with polynomial entries.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMat3(pub [[MultiPoly; 3]; 3]);

impl PolyMat3 {
    pub fn from_fn(f: impl Fn(usize, usize) -> MultiPoly) -> Self {
        PolyMat3(std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))))
    }

    /// Entries given as formula strings.
    pub fn parse(rows: [[&str; 3]; 3]) -> Self {
        Self::from_fn(|i, j| MultiPoly::p(rows[i][j]))
    }

    pub fn identity() -> Self {
        Self::from_fn(|i, j| if i == j { MultiPoly::one() } else { MultiPoly::zero() })
    }

    pub fn scale(&self, s: &MultiPoly) -> Self {
        Self::from_fn(|i, j| &self.0[i][j] * s)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.0[j][i].clone())
    }

    pub fn trace(&self) -> MultiPoly {
        &(&self.0[0][0] + &self.0[1][1]) + &self.0[2][2]
    }

    pub fn det(&self) -> MultiPoly {
        let m = &self.0;
        let t0 = &m[0][0] * &(&(&m[1][1] * &m[2][2]) - &(&m[1][2] * &m[2][1]));
        let t1 = &m[0][1] * &(&(&m[1][0] * &m[2][2]) - &(&m[1][2] * &m[2][0]));
        let t2 = &m[0][2] * &(&(&m[1][0] * &m[2][1]) - &(&m[1][1] * &m[2][0]));
        &(&t0 - &t1) + &t2
    }

    pub fn deriv(&self, v: char) -> Self {
        Self::from_fn(|i, j| self.0[i][j].deriv(v))
    }

    pub fn subst_scalar(&self, v: char, x: &Scalar) -> Self {
        Self::from_fn(|i, j| self.0[i][j].subst_scalar(v, x))
    }

    /// Exact matrix once every variable is assigned.
    pub fn eval(&self, vals: &[(char, Scalar)]) -> crate::error::Result<Mat3> {
        let mut m = Mat3::zero();
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] = self.0[i][j].eval(vals)?;
            }
        }
        Ok(m)
    }

    /// Characteristic polynomial `det(x I - M)` in the variable `x`.
    pub fn charpoly(&self, x: char) -> MultiPoly {
        let xi = PolyMat3::identity().scale(&MultiPoly::var(x));
        (&xi - self).det()
    }
}

impl Mul for &PolyMat3 {
    type Output = PolyMat3;
    fn mul(self, o: &PolyMat3) -> PolyMat3 {
        PolyMat3::from_fn(|i, j| {
            let a = &self.0[i][0] * &o.0[0][j];
            let b = &self.0[i][1] * &o.0[1][j];
            let c = &self.0[i][2] * &o.0[2][j];
            &(&a + &b) + &c
        })
    }
}

impl Add for &PolyMat3 {
    type Output = PolyMat3;
    fn add(self, o: &PolyMat3) -> PolyMat3 {
        PolyMat3::from_fn(|i, j| &self.0[i][j] + &o.0[i][j])
    }
}

impl Sub for &PolyMat3 {
    type Output = PolyMat3;
    fn sub(self, o: &PolyMat3) -> PolyMat3 {
        PolyMat3::from_fn(|i, j| &self.0[i][j] - &o.0[i][j])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_of_diagonal() {
        let m = PolyMat3::parse([["a", "0", "0"], ["0", "b", "0"], ["0", "0", "c"]]);
        assert_eq!(m.det(), MultiPoly::p("a b c"));
        assert_eq!(m.charpoly('x'), MultiPoly::p("(x-a)(x-b)(x-c)"));
    }
}
