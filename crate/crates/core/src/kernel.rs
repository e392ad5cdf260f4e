//! Projective plane primitives over exact rationals, the `τ` invariant and
//! the action of `SL₃(ℝ)` and the standard polarity on the symmetric space.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::{Matrix3, SymmetricEigen};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

/// Homogeneous triple. Points and lines share the representation.
#[derive(Clone, Debug)]
pub struct Hom(pub [Scalar; 3]);

pub type HomPoint = Hom;
pub type HomLine = Hom;

impl Hom {
    pub fn new(x: Scalar, y: Scalar, z: Scalar) -> Result<Self> {
        let h = Hom([x, y, z]);
        if h.is_zero() {
            Err(Error::ZeroVector)
        } else {
            Ok(h)
        }
    }

    pub fn ints(x: i64, y: i64, z: i64) -> Self {
        Hom([scalar::int(x), scalar::int(y), scalar::int(z)])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Scaled so the first nonzero coordinate is 1.
    pub fn canonical(&self) -> Result<Hom> {
        let lead = self.0.iter().find(|x| !x.is_zero()).ok_or(Error::ZeroVector)?;
        Ok(Hom([&self.0[0] / lead, &self.0[1] / lead, &self.0[2] / lead]))
    }

    pub fn cross(&self, o: &Hom) -> Hom {
        let [a, b, c] = &self.0;
        let [x, y, z] = &o.0;
        Hom([b * z - c * y, c * x - a * z, a * y - b * x])
    }

    pub fn dot(&self, o: &Hom) -> Scalar {
        &self.0[0] * &o.0[0] + &self.0[1] * &o.0[1] + &self.0[2] * &o.0[2]
    }

    pub fn scale(&self, s: &Scalar) -> Hom {
        Hom([&self.0[0] * s, &self.0[1] * s, &self.0[2] * s])
    }

    /// Equality up to a nonzero scalar.
    pub fn proj_eq(&self, o: &Hom) -> bool {
        !self.is_zero() && !o.is_zero() && self.cross(o).is_zero()
    }

    /// Affine coordinates `(x/z, y/z)` when `z ≠ 0`.
    pub fn affine(&self) -> Option<(Scalar, Scalar)> {
        if self.0[2].is_zero() {
            None
        } else {
            Some((&self.0[0] / &self.0[2], &self.0[1] / &self.0[2]))
        }
    }

    pub fn to_f64(&self) -> [f64; 3] {
        [scalar::to_f64(&self.0[0]), scalar::to_f64(&self.0[1]), scalar::to_f64(&self.0[2])]
    }
}

impl PartialEq for Hom {
    fn eq(&self, o: &Self) -> bool {
        self.proj_eq(o)
    }
}

impl Add for &Hom {
    type Output = Hom;
    fn add(self, o: &Hom) -> Hom {
        Hom([&self.0[0] + &o.0[0], &self.0[1] + &o.0[1], &self.0[2] + &o.0[2]])
    }
}

impl Neg for &Hom {
    type Output = Hom;
    fn neg(self) -> Hom {
        Hom([-&self.0[0], -&self.0[1], -&self.0[2]])
    }
}

impl fmt::Display for Hom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}:{}:{}]",
            scalar::fmt(&self.0[0]),
            scalar::fmt(&self.0[1]),
            scalar::fmt(&self.0[2])
        )
    }
}

impl Serialize for Hom {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let c = self.canonical().unwrap_or_else(|_| self.clone());
        c.0.iter().map(scalar::fmt).collect::<Vec<_>>().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Hom {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<Scalar> = scalar::vec::deserialize(d)?;
        if v.len() != 3 {
            return Err(serde::de::Error::custom("expected three coordinates"));
        }
        let [x, y, z]: [Scalar; 3] = v.try_into().unwrap();
        Hom::new(x, y, z).map_err(serde::de::Error::custom)
    }
}

/// Line through two points, or intersection of two lines.
pub fn join(p: &Hom, q: &Hom) -> Result<Hom> {
    let l = p.cross(q);
    if l.is_zero() {
        Err(Error::DegenerateBox(format!("{p} and {q} coincide")))
    } else {
        Ok(l)
    }
}

pub use join as meet;

pub fn det3(a: &Hom, b: &Hom, c: &Hom) -> Scalar {
    a.cross(b).dot(c)
}

/// 3×3 matrix of scalars.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat3(pub [[Scalar; 3]; 3]);

/// Projective transformation; invertibility is checked where it matters.
pub type ProjMap = Mat3;

impl Mat3 {
    pub fn from_fn(f: impl Fn(usize, usize) -> Scalar) -> Self {
        Mat3(std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))))
    }

    pub fn ints(rows: [[i64; 3]; 3]) -> Self {
        Self::from_fn(|i, j| scalar::int(rows[i][j]))
    }

    pub fn identity() -> Self {
        Self::from_fn(|i, j| if i == j { Scalar::one() } else { Scalar::zero() })
    }

    pub fn zero() -> Self {
        Self::from_fn(|_, _| Scalar::zero())
    }

    pub fn diag(d: [Scalar; 3]) -> Self {
        Self::from_fn(|i, j| if i == j { d[i].clone() } else { Scalar::zero() })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.0[j][i].clone())
    }

    pub fn trace(&self) -> Scalar {
        &self.0[0][0] + &self.0[1][1] + &self.0[2][2]
    }

    pub fn det(&self) -> Scalar {
        let m = &self.0;
        &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
            - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
            + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self::from_fn(|i, j| &self.0[i][j] * s)
    }

    pub fn adjugate(&self) -> Self {
        let m = &self.0;
        let c = |i: usize, j: usize| {
            let (r0, r1) = ((i + 1) % 3, (i + 2) % 3);
            let (c0, c1) = ((j + 1) % 3, (j + 2) % 3);
            &m[r0][c0] * &m[r1][c1] - &m[r0][c1] * &m[r1][c0]
        };
        Self::from_fn(|i, j| c(j, i))
    }

    pub fn inverse(&self) -> Result<Self> {
        let d = self.det();
        if d.is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(self.adjugate().scale(&d.recip()))
    }

    /// Inverse transpose; the action on lines.
    pub fn dual(&self) -> Result<Self> {
        Ok(self.inverse()?.transpose())
    }

    pub fn apply(&self, p: &Hom) -> Hom {
        Hom(std::array::from_fn(|i| {
            &self.0[i][0] * &p.0[0] + &self.0[i][1] * &p.0[1] + &self.0[i][2] * &p.0[2]
        }))
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::identity(), |acc, _| &acc * self)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..3).all(|i| (0..3).all(|j| self.0[i][j] == self.0[j][i]))
    }

    /// `Some(s)` when the matrix equals `s·I`.
    pub fn scalar_multiple_of_identity(&self) -> Option<Scalar> {
        let s = self.0[0][0].clone();
        let ok = (0..3).all(|i| (0..3).all(|j| if i == j { self.0[i][j] == s } else { self.0[i][j].is_zero() }));
        ok.then_some(s)
    }

    /// Equality up to a nonzero scalar.
    pub fn proj_eq(&self, o: &Self) -> bool {
        let pivot = (0..9).find(|k| !self.0[k / 3][k % 3].is_zero());
        let Some(k) = pivot else { return false };
        let (i, j) = (k / 3, k % 3);
        if o.0[i][j].is_zero() {
            return false;
        }
        let s = &o.0[i][j] / &self.0[i][j];
        &self.scale(&s) == o
    }

    /// Leading principal minors.
    pub fn leading_minors(&self) -> [Scalar; 3] {
        let m = &self.0;
        [m[0][0].clone(), &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0], self.det()]
    }

    /// Positive or negative definite (symmetric input assumed).
    pub fn definiteness(&self) -> Option<i8> {
        let [m1, m2, m3] = self.leading_minors();
        if m1.is_positive() && m2.is_positive() && m3.is_positive() {
            Some(1)
        } else if m1.is_negative() && m2.is_positive() && m3.is_negative() {
            Some(-1)
        } else {
            None
        }
    }

    pub fn to_f64(&self) -> Matrix3<f64> {
        Matrix3::from_fn(|i, j| scalar::to_f64(&self.0[i][j]))
    }

    pub fn rows_str(&self) -> Vec<Vec<String>> {
        self.0.iter().map(|r| r.iter().map(scalar::fmt).collect()).collect()
    }
}

impl Mul for &Mat3 {
    type Output = Mat3;
    fn mul(self, o: &Mat3) -> Mat3 {
        Mat3::from_fn(|i, j| {
            &self.0[i][0] * &o.0[0][j] + &self.0[i][1] * &o.0[1][j] + &self.0[i][2] * &o.0[2][j]
        })
    }
}

impl Add for &Mat3 {
    type Output = Mat3;
    fn add(self, o: &Mat3) -> Mat3 {
        Mat3::from_fn(|i, j| &self.0[i][j] + &o.0[i][j])
    }
}

impl Sub for &Mat3 {
    type Output = Mat3;
    fn sub(self, o: &Mat3) -> Mat3 {
        Mat3::from_fn(|i, j| &self.0[i][j] - &o.0[i][j])
    }
}

impl Serialize for Mat3 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows_str().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Mat3 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<String>>::deserialize(d)?;
        if rows.len() != 3 || rows.iter().any(|r| r.len() != 3) {
            return Err(serde::de::Error::custom("expected a 3x3 array"));
        }
        let mut m = Mat3::zero();
        for (i, r) in rows.iter().enumerate() {
            for (j, x) in r.iter().enumerate() {
                m.0[i][j] = scalar::parse(x).map_err(serde::de::Error::custom)?;
            }
        }
        Ok(m)
    }
}

/// `tr³(m)/det(m)`, invariant under scaling and conjugation.
pub fn tau(m: &Mat3) -> Result<Scalar> {
    let d = m.det();
    if d.is_zero() {
        return Err(Error::SingularMatrix);
    }
    let t = m.trace();
    Ok(&t * &t * &t / d)
}

/// The standard elliptic polarity: the point `p` goes to the line with the same coefficients.
pub fn polarity_apply(p: &HomPoint) -> Result<HomLine> {
    if p.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(p.clone())
}

/// `Δ ∘ M`: the point `p` goes to the line `M p`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Duality {
    pub m: Mat3,
}

impl Duality {
    pub fn new(m: Mat3) -> Result<Self> {
        if m.det().is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(Duality { m })
    }

    pub fn standard() -> Self {
        Duality { m: Mat3::identity() }
    }

    pub fn apply_point(&self, p: &HomPoint) -> Result<HomLine> {
        polarity_apply(&self.m.apply(p))
    }

    /// Action on the symmetric space: `N ↦ M N⁻¹ Mᵗ` with `M` rescaled to unit determinant.
    pub fn act(&self, n: &SpdPoint) -> Result<SpdPoint> {
        let m = unit_det_f64(&self.m)?;
        let inv = n.0.try_inverse().ok_or(Error::SingularMatrix)?;
        Ok(SpdPoint(m * inv * m.transpose()))
    }
}

/// Point of `SL₃(ℝ)/SO(3)`: unit-determinant positive definite symmetric matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct SpdPoint(pub Matrix3<f64>);

impl SpdPoint {
    pub fn origin() -> Self {
        SpdPoint(Matrix3::identity())
    }

    /// Validates symmetry, definiteness and `det = 1` to `1e-9`.
    pub fn new(m: Matrix3<f64>) -> Result<Self> {
        if (m - m.transpose()).abs().max() > 1e-9 {
            return Err(Error::NotPositiveDefinite);
        }
        let e = SymmetricEigen::new(m).eigenvalues;
        if e.iter().any(|&x| x <= 0.0) || (m.determinant() - 1.0).abs() > 1e-9 {
            return Err(Error::NotPositiveDefinite);
        }
        Ok(SpdPoint(m))
    }

    pub fn from_exact(m: &Mat3) -> Result<Self> {
        Self::new(m.to_f64())
    }

    pub fn approx_eq(&self, o: &SpdPoint, tol: f64) -> bool {
        (self.0 - o.0).abs().max() <= tol
    }
}

fn unit_det_f64(t: &Mat3) -> Result<Matrix3<f64>> {
    let d = t.det();
    if d.is_zero() {
        return Err(Error::SingularMatrix);
    }
    let m = t.to_f64();
    Ok(m / scalar::to_f64(&d).cbrt())
}

/// `T(M) = T* M T⁻¹` with `T* = (T⁻¹)ᵗ`, after rescaling `T` to unit determinant.
pub fn spd_act(t: &ProjMap, m: &SpdPoint) -> Result<SpdPoint> {
    let t = unit_det_f64(t)?;
    let ti = t.try_inverse().ok_or(Error::SingularMatrix)?;
    Ok(SpdPoint(ti.transpose() * m.0 * ti))
}

/// Exact version of [`spd_act`] for `det T = 1`, on any symmetric matrix.
pub fn spd_act_exact(t: &ProjMap, m: &Mat3) -> Result<Mat3> {
    if !t.det().is_one() {
        return Err(Error::ParamOutOfRange("exact action needs det T = 1".into()));
    }
    let ti = t.inverse()?;
    Ok(&(&ti.transpose() * m) * &ti)
}

/// Fixed point of an elliptic polarity `Δ ∘ M` with `M` symmetric definite.
pub fn polarity_fixed_point(d: &Duality) -> Result<SpdPoint> {
    let m = &d.m;
    if !m.is_symmetric() {
        return Err(Error::NotElliptic("matrix is not symmetric".into()));
    }
    let sign = m
        .definiteness()
        .ok_or_else(|| Error::NotElliptic("matrix is indefinite".into()))?;
    let mut p = m.to_f64();
    if sign < 0 {
        p = -p;
    }
    p /= p.determinant().cbrt();
    let p = SpdPoint(p);
    let image = d.act(&p)?;
    if !image.approx_eq(&p, 1e-10 * (1.0 + p.0.abs().max())) {
        return Err(Error::Internal("polarity fixed point check failed".into()));
    }
    Ok(p)
}

/// `√Σ log² λᵢ` over the eigenvalues of `M`.
pub fn distance_to_origin(m: &SpdPoint) -> Result<f64> {
    let e = SymmetricEigen::new(m.0).eigenvalues;
    if e.iter().any(|&x| x <= 0.0) {
        return Err(Error::NotPositiveDefinite);
    }
    Ok(e.iter().map(|x| x.ln().powi(2)).sum::<f64>().sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, q};

    #[test]
    fn identity_and_det() {
        let i = Mat3::identity();
        assert_eq!(&i * &i, i);
        assert_eq!(Mat3::diag([int(1), int(2), int(3)]).det(), int(6));
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(&Mat3::identity()).unwrap(), int(27));
        assert_eq!(tau(&Mat3::diag([int(1), int(2), int(3)])).unwrap(), int(36));
        assert_eq!(tau(&Mat3::zero()), Err(Error::SingularMatrix));
    }

    #[test]
    fn inverse_of_singular() {
        let m = Mat3::ints([[1, 2, 3], [2, 4, 6], [0, 0, 1]]);
        assert_eq!(m.inverse(), Err(Error::SingularMatrix));
    }

    #[test]
    fn polarity_examples() {
        let l = polarity_apply(&Hom::ints(1, 0, 0)).unwrap();
        assert!(l.dot(&Hom::ints(0, 5, 7)).is_zero());
        let p = Hom::ints(2, 3, 5);
        assert_eq!(polarity_apply(&polarity_apply(&p).unwrap()).unwrap(), p);
        assert_eq!(polarity_apply(&Hom::ints(0, 0, 1)).unwrap(), Hom::ints(0, 0, 1));
        assert_eq!(polarity_apply(&Hom::ints(0, 0, 0)), Err(Error::ZeroVector));
    }

    #[test]
    fn spd_examples() {
        let o = SpdPoint::origin();
        assert_eq!(spd_act(&Mat3::identity(), &o).unwrap(), o);
        let t = Mat3::diag([int(2), int(1), q(1, 2)]);
        let r = spd_act(&t, &o).unwrap();
        assert!(r.approx_eq(&SpdPoint(Matrix3::from_diagonal(&[0.25, 1.0, 4.0].into())), 1e-12));
        let exact = spd_act_exact(&t, &Mat3::identity()).unwrap();
        assert_eq!(exact, Mat3::diag([q(1, 4), int(1), int(4)]));
        assert!(Duality::standard().act(&o).unwrap().approx_eq(&o, 1e-15));
    }

    #[test]
    fn fixed_points() {
        let o = polarity_fixed_point(&Duality::standard()).unwrap();
        assert!(o.approx_eq(&SpdPoint::origin(), 1e-12));
        let m = Mat3::diag([int(4), int(1), q(1, 4)]);
        let p = polarity_fixed_point(&Duality::new(m).unwrap()).unwrap();
        assert!(p.approx_eq(&SpdPoint(Matrix3::from_diagonal(&[4.0, 1.0, 0.25].into())), 1e-12));
        let bad = Duality::new(Mat3::ints([[1, 1, 0], [0, 1, 0], [0, 0, 1]])).unwrap();
        assert!(matches!(polarity_fixed_point(&bad), Err(Error::NotElliptic(_))));
    }

    #[test]
    fn distances() {
        assert_eq!(distance_to_origin(&SpdPoint::origin()).unwrap(), 0.0);
        let m = SpdPoint::new(Matrix3::from_diagonal(&[2.0, 1.0, 0.5].into())).unwrap();
        let d = distance_to_origin(&m).unwrap();
        assert!((d - 2f64.sqrt() * 2f64.ln()).abs() < 1e-12);
        assert!((d - 0.98026).abs() < 1e-5);
        let m = SpdPoint::new(Matrix3::from_diagonal(&[4.0, 1.0, 0.25].into())).unwrap();
        assert!((distance_to_origin(&m).unwrap() - 2.0 * 2f64.sqrt() * 2f64.ln()).abs() < 1e-12);
    }
}
