//! Sylvester resultants with fraction-free (Bareiss) elimination.

use super::MultiPoly;
use crate::error::{Error, Result};

/// Sylvester matrix of `p` and `q` in `v`, rows ordered highest coefficient first.
pub fn sylvester(p: &MultiPoly, q: &MultiPoly, v: char) -> Vec<Vec<MultiPoly>> {
    let pc: Vec<MultiPoly> = p.coeffs_in(v).into_iter().rev().collect();
    let qc: Vec<MultiPoly> = q.coeffs_in(v).into_iter().rev().collect();
    let m = pc.len() - 1;
    let n = qc.len() - 1;
    let size = m + n;
    let mut rows = vec![vec![MultiPoly::zero(); size]; size];
    for i in 0..n {
        for (j, c) in pc.iter().enumerate() {
            rows[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in qc.iter().enumerate() {
            rows[n + i][i + j] = c.clone();
        }
    }
    rows
}

/// Determinant by Bareiss elimination; every division is exact.
pub fn bareiss_det(mut m: Vec<Vec<MultiPoly>>) -> MultiPoly {
    let n = m.len();
    if n == 0 {
        return MultiPoly::one();
    }
    let mut sign = false;
    let mut prev = MultiPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return MultiPoly::zero();
            };
            m.swap(k, r);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.exact_div(&prev).expect("Bareiss step is an exact division");
            }
            m[i][k] = MultiPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// `res_v(p, q)`: the Sylvester determinant in `v`.
pub fn resultant(p: &MultiPoly, q: &MultiPoly, v: char) -> Result<MultiPoly> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (dp, dq) = (p.degree(v), q.degree(v));
    if dp == 0 && dq == 0 {
        return Err(Error::ZeroPolynomial);
    }
    if dp == 0 {
        return Ok(p.pow(dq));
    }
    if dq == 0 {
        return Ok(q.pow(dp));
    }
    Ok(bareiss_det(sylvester(p, q, v)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiPoly {
        MultiPoly::p(s)
    }

    #[test]
    fn small_cases() {
        assert!(resultant(&p("x^2-1"), &p("x-1"), 'x').unwrap().is_zero());
        assert_eq!(resultant(&p("x-1"), &p("x-2"), 'x').unwrap(), p("-1"));
        assert_eq!(resultant(&p("x^2+y"), &p("x"), 'x').unwrap(), p("y"));
        assert_eq!(resultant(&p("0"), &p("x"), 'x'), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn quadratic_discriminant() {
        // res(f, f') = -a * disc for f = a x^2 + b x + c
        let f = p("a x^2 + b x + c");
        let r = resultant(&f, &f.deriv('x'), 'x').unwrap();
        assert_eq!(r, p("-a(b^2 - 4a c)"));
    }

    #[test]
    fn bareiss_matches_cofactor() {
        let m = vec![
            vec![p("a"), p("b"), p("1")],
            vec![p("c"), p("0"), p("a")],
            vec![p("2"), p("b"), p("c")],
        ];
        // cofactor expansion along the first row
        let det = p("a(0*c - a b) - b(c c - 2a) + 1(c b - 0)");
        assert_eq!(bareiss_det(m), det);
    }
}
