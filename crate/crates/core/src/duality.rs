//! The duality polynomial `ψ`, root isolation along the duality curves
//! `γ_{c,d}`, the local Jacobian check and the polarity solver.

use nalgebra::DMatrix;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::boxes::{self, IdentityCheck};
use crate::error::{Error, Result};
use crate::kernel::{Mat3, ProjMap};
use crate::morph::{self, FullParams};
use crate::poly::{
    positivity_check, DomainBox, Interval, MultiPoly, PolyMat3, PosCert, RatFunc, UniPoly,
};
use crate::scalar::{self, int, one, pow2_neg, Scalar};

/// `ψ(a, b, c, d)`, stored expanded.
pub type PsiPoly = MultiPoly;

/// The closed form of `ψ`.
pub fn psi_closed_form() -> PsiPoly {
    MultiPoly::p(
        "(a^2-1)(b^2+1)(a^2b^2+a^2+ab^2-a+b^2+1)(c^2+d^2-2c^2d^2) \
         + a(b^2-1)(a^2b^2+a^2+2ab^2-4ab-2a+b^2+1) c d (c^2-d^2)",
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PsiMethod {
    /// `det(r₁r₂ − I) = 0`.
    Determinant,
    /// `tr(r₁r₂) − tr(r₁²r₂²) = 0`.
    Traces,
}

impl PsiMethod {
    pub fn from_index(k: u8) -> Result<Self> {
        match k {
            1 => Ok(PsiMethod::Determinant),
            3 => Ok(PsiMethod::Traces),
            2 => Err(Error::Internal("method 2 needs coordinates outside this library".into())),
            _ => Err(Error::Parse(format!("unknown method {k}"))),
        }
    }
}

/// Numerator produced by one derivation, and its quotient by the closed form.
#[derive(Clone, Debug, Serialize)]
pub struct PsiBuild {
    pub method: PsiMethod,
    pub numerator: MultiPoly,
    /// `numerator / ψ` when the division is exact.
    pub cofactor: Option<MultiPoly>,
}

/// `4a²b²(1−c²)(1−d²)`: the common denominator of `r₁` and `Σ⁻¹r₂Σ`.
pub fn trace_denominator() -> MultiPoly {
    &MultiPoly::p("4a^2b^2") * &boxes::r1_denominator_symbolic()
}

/// `R₁ · 4a²b²Σ⁻¹r₂Σ`, so that `r₁r₂ₘ` is this divided by [`trace_denominator`].
pub fn product_numerator_symbolic() -> PolyMat3 {
    &boxes::r1_numerator_symbolic() * &morph::r2m_scaled_symbolic()
}

/// Numerator of `r₁²r₂ₘ²` over the squared denominator.
pub fn squares_numerator_symbolic() -> PolyMat3 {
    let r1 = boxes::r1_numerator_symbolic();
    let n = morph::r2m_scaled_symbolic();
    &(&r1 * &r1) * &(&n * &n)
}

pub fn build_psi(method: PsiMethod) -> Result<PsiBuild> {
    let m = product_numerator_symbolic();
    let den = trace_denominator();
    let numerator = match method {
        PsiMethod::Traces => {
            // tr(r₁r₂ₘ) − tr(r₁²r₂ₘ²) = (D tr(m) − tr(m₂))/D²
            let full = &(&m.trace() * &den) - &squares_numerator_symbolic().trace();
            full.exact_div(&den)
                .ok_or_else(|| Error::Internal("trace difference is not divisible by the denominator".into()))?
        }
        PsiMethod::Determinant => {
            let shifted = &m - &PolyMat3::identity().scale(&den);
            shifted.det()
        }
    };
    let cofactor = numerator.exact_div(&psi_closed_form());
    Ok(PsiBuild { method, numerator, cofactor })
}

/// `S_b`, the `a`-slice of `Θ`. `hi = None` means `+∞`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Segment {
    #[serde(with = "scalar")]
    pub lo: Scalar,
    #[serde(with = "scalar::opt")]
    pub hi: Option<Scalar>,
}

impl Segment {
    pub fn contains(&self, a: &Scalar) -> bool {
        a > &self.lo && self.hi.as_ref().is_none_or(|h| a < h)
    }
}

pub fn segment_sb(b: &Scalar) -> Result<Segment> {
    if b <= &one() {
        return Err(Error::ParamOutOfRange(format!("b = {} must exceed 1", scalar::fmt(b))));
    }
    let b2 = b * b;
    let g = int(1) + int(2) * b - &b2;
    if g.is_positive() {
        Ok(Segment { lo: &g / (&b2 + int(1)), hi: Some((&b2 + int(1)) / &g) })
    } else {
        Ok(Segment { lo: Scalar::zero(), hi: None })
    }
}

fn psi_in_a(b: &Scalar, c: &Scalar, d: &Scalar) -> UniPoly {
    psi_closed_form()
        .subst_many(&[('b', b.clone()), ('c', c.clone()), ('d', d.clone())])
        .to_uni('a')
        .expect("only a remains")
}

fn check_bcd(b: &Scalar, c: &Scalar, d: &Scalar) -> Result<()> {
    boxes::PappusParams::new(c.clone(), d.clone())?;
    if b < &one() {
        return Err(Error::ParamOutOfRange(format!("b = {} is below 1", scalar::fmt(b))));
    }
    Ok(())
}

/// Signs of `ψ` at the two ends of `S_b`. An infinite end uses the leading
/// `a`-coefficient; the end `a = 0` uses the value there.
pub fn wall_signs(b: &Scalar, c: &Scalar, d: &Scalar) -> Result<(i8, i8)> {
    check_bcd(b, c, d)?;
    if c.is_zero() && d.is_zero() {
        return Err(Error::ParamOutOfRange("(c, d) = (0, 0) has no wall signs".into()));
    }
    let seg = segment_sb(b)?;
    let f = psi_in_a(b, c, d);
    let left = scalar::sign(&f.eval(&seg.lo));
    let right = match &seg.hi {
        Some(h) => scalar::sign(&f.eval(h)),
        None => scalar::sign(&f.lead()),
    };
    Ok((left, right))
}

/// Interval with exact ends isolating the root of `ψ(·, b, c, d)` in `S_b`.
#[derive(Clone, Debug, Serialize)]
pub struct RootBracket {
    #[serde(with = "scalar")]
    pub lo: Scalar,
    #[serde(with = "scalar")]
    pub hi: Scalar,
    pub sign_lo: i8,
    pub sign_hi: i8,
    /// Sturm count of roots in `S_b`, when `S_b` is defined.
    pub sturm_count: Option<usize>,
    pub unique: bool,
}

impl RootBracket {
    fn exact(a: Scalar, sturm_count: Option<usize>) -> Self {
        RootBracket { lo: a.clone(), hi: a, sign_lo: 0, sign_hi: 0, sturm_count, unique: true }
    }

    pub fn width(&self) -> Scalar {
        &self.hi - &self.lo
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn midpoint(&self) -> Scalar {
        (&self.lo + &self.hi) / int(2)
    }

    pub fn contains(&self, a: &Scalar) -> bool {
        &self.lo <= a && a <= &self.hi
    }
}

pub fn default_tolerance() -> Scalar {
    pow2_neg(40)
}

/// The root of `ψ(·, b, c, d)` in `S_b`. `(c, d) = (0, 0)` and `b = 1` give `a = 1`.
pub fn solve_duality_a(b: &Scalar, c: &Scalar, d: &Scalar, tol: &Scalar) -> Result<RootBracket> {
    check_bcd(b, c, d)?;
    if (c.is_zero() && d.is_zero()) || b == &one() {
        return Ok(RootBracket::exact(one(), None));
    }
    let seg = segment_sb(b)?;
    let f = psi_in_a(b, c, d);
    let count = f.count_roots(&seg.lo, seg.hi.as_ref());
    if count != 1 {
        return Err(Error::Internal(format!(
            "{count} roots of psi in S_b at (b, c, d) = ({}, {}, {})",
            scalar::fmt(b),
            scalar::fmt(c),
            scalar::fmt(d)
        )));
    }
    if f.eval(&one()).is_zero() && seg.contains(&one()) {
        return Ok(RootBracket::exact(one(), Some(1)));
    }
    let hi = match &seg.hi {
        Some(h) => h.clone(),
        None => f.root_bound().max(one()),
    };
    refine(&f, &seg.lo, &hi, tol, Some(count))
}

fn refine(f: &UniPoly, lo: &Scalar, hi: &Scalar, tol: &Scalar, sturm_count: Option<usize>) -> Result<RootBracket> {
    let (lo, hi) = f
        .bisect(lo, hi, tol)
        .ok_or_else(|| Error::Internal("no sign change on the bracket".into()))?;
    if lo == hi {
        return Ok(RootBracket::exact(lo, sturm_count));
    }
    Ok(RootBracket {
        sign_lo: scalar::sign(&f.eval(&lo)),
        sign_hi: scalar::sign(&f.eval(&hi)),
        lo,
        hi,
        sturm_count,
        unique: sturm_count == Some(1),
    })
}

/// One sample of `γ_{c,d}`.
#[derive(Clone, Debug, Serialize)]
pub struct CurvePoint {
    #[serde(with = "scalar")]
    pub b: Scalar,
    pub bracket: RootBracket,
    pub a: f64,
}

/// `γ_{c,d}` over `b_grid`, starting at the endpoint `(1, 1)`. Parameters are
/// reduced to `0 ≤ c ≤ d` by `θ₄` and inverse symmetry.
pub fn trace_curve(c: &Scalar, d: &Scalar, b_grid: &[Scalar], tol: &Scalar) -> Result<Vec<CurvePoint>> {
    let canon = boxes::theta4_canonical(&boxes::PappusParams::new(c.clone(), d.clone())?);
    let (c, d) = (canon.c, canon.d);
    let swap = c > d;
    let mut grid: Vec<Scalar> = vec![one()];
    grid.extend(b_grid.iter().filter(|b| *b > &one()).cloned());
    grid.par_iter()
        .map(|b| {
            let bracket = if swap {
                let r = solve_duality_a(b, &d, &c, tol)?;
                if r.is_exact() {
                    RootBracket::exact(r.lo.recip(), r.sturm_count)
                } else {
                    let f = psi_in_a(b, &c, &d);
                    refine(&f, &r.hi.recip(), &r.lo.recip(), tol, r.sturm_count)?
                }
            } else {
                solve_duality_a(b, &c, &d, tol)?
            };
            Ok(CurvePoint { b: b.clone(), a: scalar::to_f64(&bracket.midpoint()), bracket })
        })
        .collect()
}

/// `max |a_root − 1|` over `b_grid` for each `(c, d)`.
pub fn max_deviation_from_one(cd: &[(Scalar, Scalar)], b_grid: &[Scalar], tol: &Scalar) -> Result<Vec<f64>> {
    cd.iter()
        .map(|(c, d)| {
            let curve = trace_curve(c, d, b_grid, tol)?;
            Ok(curve
                .iter()
                .map(|p| (scalar::to_f64(&p.bracket.lo) - 1.0).abs().max((scalar::to_f64(&p.bracket.hi) - 1.0).abs()))
                .fold(0.0, f64::max))
        })
        .collect()
}

/// `∂(P/Q)/∂v` at `a = b = 1`, as a rational function of `c, d`.
fn partial_at_pappus(p: &MultiPoly, q: &MultiPoly, v: char) -> RatFunc {
    let at = |m: &MultiPoly| m.subst_many(&[('a', one()), ('b', one())]);
    let (p0, q0) = (at(p), at(q));
    let (pv, qv) = (at(&p.deriv(v)), at(&q.deriv(v)));
    RatFunc::new(&(&pv * &q0) - &(&p0 * &qv), &q0 * &q0)
}

#[derive(Clone, Debug, Serialize)]
pub struct JacobianCert {
    pub identity: IdentityCheck,
    pub first_factor: Option<PosCert>,
    pub second_factor: Option<PosCert>,
    pub passed: bool,
}

/// The expected Jacobian determinant `8f(c²+d²−2)/((1−c²)²(1−d²)²)`.
pub fn jacobian_closed_form() -> RatFunc {
    RatFunc::parse("8(c^2+d^2-2c^2d^2)(c^2+d^2-2)", "(1-c^2)^2(1-d^2)^2")
}

/// Jacobian of `Φ(a, b) = (tr r₁r₂ₘ, tr r₁²r₂ₘ²)` at `(1, 1)`.
pub fn jacobian_at_pappus() -> RatFunc {
    let m = product_numerator_symbolic();
    let den = trace_denominator();
    let (p1, q1) = (m.trace(), den.clone());
    let (p2, q2) = (squares_numerator_symbolic().trace(), &den * &den);
    let da1 = partial_at_pappus(&p1, &q1, 'a');
    let db1 = partial_at_pappus(&p1, &q1, 'b');
    let da2 = partial_at_pappus(&p2, &q2, 'a');
    let db2 = partial_at_pappus(&p2, &q2, 'b');
    &(&da1 * &db2) - &(&db1 * &da2)
}

pub fn jacobian_check() -> JacobianCert {
    let j = jacobian_at_pappus();
    let closed = jacobian_closed_form();
    let lhs = &j.num * &closed.den;
    let rhs = &closed.num * &j.den;
    let identity = IdentityCheck {
        name: "det dPhi at (1,1) = 8(c^2+d^2-2c^2d^2)(c^2+d^2-2)/((1-c^2)^2(1-d^2)^2)".into(),
        holds: lhs == rhs,
        lhs: format!("({}) / ({})", j.num, j.den),
        rhs: format!("({}) / ({})", closed.num, closed.den),
    };
    let square = DomainBox::new()
        .with('c', Interval::open(int(-1), int(1)))
        .with('d', Interval::open(int(-1), int(1)));
    let first_factor = positivity_check(&MultiPoly::p("c^2+d^2-2c^2d^2"), &square.clone().puncture('c', 'd'), true).ok();
    let second_factor = positivity_check(&MultiPoly::p("2-c^2-d^2"), &square, true).ok();
    let passed = identity.holds && first_factor.is_some() && second_factor.is_some();
    JacobianCert { identity, first_factor, second_factor, passed }
}

#[derive(Clone, Debug, Serialize)]
pub struct InverseSymmetryCert {
    /// `e` with `a^e ψ(1/a, b, d, c) = −ψ(a, b, c, d)`.
    pub a_power: u32,
    pub inverse_symmetry: bool,
    pub theta4_invariance: bool,
    pub fixed_locus: bool,
    pub passed: bool,
}

/// `a^{deg} p(1/a)` as a polynomial.
pub fn reverse_in(p: &MultiPoly, v: char) -> (MultiPoly, u32) {
    let mut cs = p.coeffs_in(v);
    cs.reverse();
    (MultiPoly::from_coeffs(v, &cs), p.degree(v))
}

pub fn inverse_symmetry_check() -> InverseSymmetryCert {
    let psi = psi_closed_form();
    let swapped = psi.rename(&[('c', 'd'), ('d', 'c')]);
    let (rev, deg) = reverse_in(&swapped, 'a');
    // rev = a^deg ψ(1/a, b, d, c); it may still carry a factor a^k
    let target = -&psi;
    let shift = rev.min_degree_in(&['a']).unwrap_or(0);
    let reduced = rev.exact_div(&MultiPoly::var('a').pow(shift));
    let inverse_symmetry = reduced.as_ref() == Some(&target);
    let theta4_invariance = rotate_cd(&psi) == psi;
    let fixed_locus = psi.subst_scalar('a', &one()).subst('d', &MultiPoly::var('c')).is_zero();
    InverseSymmetryCert {
        a_power: deg - shift,
        inverse_symmetry,
        theta4_invariance,
        fixed_locus,
        passed: inverse_symmetry && theta4_invariance && fixed_locus,
    }
}

/// `ψ(a, b, −d, c)`.
pub fn rotate_cd(p: &MultiPoly) -> MultiPoly {
    let tmp = p.rename(&[('c', 'x'), ('d', 'y')]);
    tmp.subst('x', &MultiPoly::p("-d")).subst('y', &MultiPoly::var('c'))
}

/// Matrix of a polarity conjugating `r₁` to `r₂ₘ`.
#[derive(Clone, Debug, Serialize)]
pub struct Polarity {
    /// Exact symmetric matrix when the rational system is singular.
    pub exact: Option<Mat3>,
    pub approx: [[f64; 3]; 3],
    pub residual: f64,
    pub nullity: usize,
}

/// Rows of the linear system `M r₁^{−T} − r₂ₘ M = 0` in the six entries of a symmetric `M`.
fn polarity_system(r1: &ProjMap, r2m: &ProjMap) -> Result<Vec<Vec<Scalar>>> {
    let g = r1.dual()?;
    let idx = |i: usize, j: usize| -> usize {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        [[0, 1, 2], [1, 3, 4], [2, 4, 5]][i][j]
    };
    let mut rows = vec![];
    for i in 0..3 {
        for j in 0..3 {
            let mut row = vec![Scalar::zero(); 6];
            for k in 0..3 {
                // (M g)_{ij} = Σ_k M_{ik} g_{kj};  (r M)_{ij} = Σ_k r_{ik} M_{kj}
                row[idx(i, k)] += &g.0[k][j];
                row[idx(k, j)] -= &r2m.0[i][k];
            }
            rows.push(row);
        }
    }
    Ok(rows)
}

/// Basis of the rational nullspace, by reduced row echelon form.
pub fn nullspace(rows: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let n = rows.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<Scalar>> = rows.to_vec();
    let mut pivots = vec![];
    let mut r = 0;
    for col in 0..n {
        let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][col].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                let pivot = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Scalar::zero(); n];
            v[free] = one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[row][free].clone();
            }
            v
        })
        .collect()
}

fn sym_from(v: &[Scalar]) -> Mat3 {
    Mat3([
        [v[0].clone(), v[1].clone(), v[2].clone()],
        [v[1].clone(), v[3].clone(), v[4].clone()],
        [v[2].clone(), v[4].clone(), v[5].clone()],
    ])
}

fn normalize_max(v: &mut [Scalar]) {
    if let Some(m) = v.iter().max_by(|x, y| x.abs().cmp(&y.abs())).cloned() {
        if !m.is_zero() {
            for x in v.iter_mut() {
                *x /= &m;
            }
        }
    }
}

fn leading_minors_f64(m: &nalgebra::Matrix3<f64>) -> [f64; 3] {
    [m[(0, 0)], m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)], m.determinant()]
}

fn definite_f64(m: &nalgebra::Matrix3<f64>) -> bool {
    let [a, b, c] = leading_minors_f64(m);
    (a > 0.0 && b > 0.0 && c > 0.0) || (a < 0.0 && b > 0.0 && c < 0.0)
}

/// Solves `M r₁^{−T} = r₂ₘ M` for a symmetric `M` and requires it definite.
pub fn solve_polarity(r1: &ProjMap, r2m: &ProjMap, tol: f64) -> Result<Polarity> {
    let rows = polarity_system(r1, r2m)?;
    let basis = nullspace(&rows);
    if !basis.is_empty() {
        let nullity = basis.len();
        let mut candidates: Vec<Vec<Scalar>> = basis.clone();
        if nullity > 1 {
            // small integer combinations of the basis
            let coeffs: Vec<i64> = (-2..=2).collect();
            let mut combos: Vec<Vec<i64>> = vec![vec![]];
            for _ in 0..nullity.min(3) {
                combos = combos
                    .into_iter()
                    .flat_map(|c| coeffs.iter().map(move |&k| [c.clone(), vec![k]].concat()))
                    .collect();
            }
            for combo in combos {
                let v: Vec<Scalar> = (0..6)
                    .map(|e| combo.iter().zip(&basis).fold(Scalar::zero(), |acc, (k, b)| acc + int(*k) * &b[e]))
                    .collect();
                if v.iter().any(|x| !x.is_zero()) {
                    candidates.push(v);
                }
            }
        }
        for mut v in candidates {
            normalize_max(&mut v);
            let m = sym_from(&v);
            if m.definiteness().is_some() {
                let approx = m.to_f64();
                return Ok(Polarity {
                    approx: std::array::from_fn(|i| std::array::from_fn(|j| approx[(i, j)])),
                    exact: Some(m),
                    residual: 0.0,
                    nullity,
                });
            }
        }
        return Err(Error::NotElliptic(format!("{nullity}-dimensional solution space has no definite member")));
    }
    let a = DMatrix::from_fn(9, 6, |i, j| scalar::to_f64(&rows[i][j]));
    let scale = a.amax().max(f64::MIN_POSITIVE);
    let a = a / scale;
    let svd = a.clone().svd(false, true);
    let vt = svd.v_t.ok_or_else(|| Error::Internal("SVD failed".into()))?;
    let (k, _) = svd
        .singular_values
        .iter()
        .enumerate()
        .min_by(|x, y| x.1.total_cmp(y.1))
        .ok_or_else(|| Error::Internal("empty SVD".into()))?;
    let mut v: Vec<f64> = vt.row(k).iter().copied().collect();
    let m = v.iter().copied().fold(0.0f64, |acc, x| if x.abs() > acc.abs() { x } else { acc });
    for x in v.iter_mut() {
        *x /= m;
    }
    let residual = (&a * nalgebra::DVector::from_vec(v.clone())).amax();
    if residual > tol {
        return Err(Error::NoPolarity(residual));
    }
    let approx = nalgebra::Matrix3::new(v[0], v[1], v[2], v[1], v[3], v[4], v[2], v[4], v[5]);
    if !definite_f64(&approx) {
        return Err(Error::NotElliptic(format!("indefinite solution, residual {residual:e}")));
    }
    Ok(Polarity {
        exact: None,
        approx: std::array::from_fn(|i| std::array::from_fn(|j| approx[(i, j)])),
        residual,
        nullity: 0,
    })
}

/// `det(r₁r₂ₘ − I)`.
pub fn det_minus_identity(p: &FullParams) -> Result<Scalar> {
    let (r1, r2m) = morph::morphed_generators(p)?;
    Ok((&(&r1 * &r2m) - &Mat3::identity()).det())
}

/// `ψ` at a parameter point.
pub fn psi_at(p: &FullParams) -> Scalar {
    psi_closed_form().eval(&p.vals()).expect("all variables assigned")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    #[test]
    fn psi_special_values() {
        let psi = psi_closed_form();
        assert!(psi.subst_scalar('a', &one()).subst_scalar('b', &one()).is_zero());
        assert_eq!(psi.subst_scalar('a', &Scalar::zero()), MultiPoly::p("(1+b^2)^2(2c^2d^2-c^2-d^2)"));
        assert_eq!(psi.subst_scalar('b', &one()), MultiPoly::p("4(a^4-1)(c^2+d^2-2c^2d^2)"));
    }

    #[test]
    fn method_three_matches_closed_form() {
        let b = build_psi(PsiMethod::Traces).unwrap();
        assert_eq!(b.cofactor, Some(MultiPoly::one()), "{}", b.numerator);
    }

    #[test]
    fn method_one_is_a_multiple() {
        let b = build_psi(PsiMethod::Determinant).unwrap();
        assert_eq!(b.cofactor, Some(MultiPoly::p("16a^4b^4(1-c^2)^2(1-d^2)^2")));
    }

    #[test]
    fn segment_examples() {
        assert_eq!(segment_sb(&int(2)).unwrap(), Segment { lo: q(1, 5), hi: Some(int(5)) });
        assert_eq!(segment_sb(&int(3)).unwrap(), Segment { lo: int(0), hi: None });
        assert!(segment_sb(&int(1)).is_err());
    }

    #[test]
    fn wall_examples() {
        assert_eq!(wall_signs(&int(2), &q(1, 3), &q(1, 2)).unwrap(), (-1, 1));
        assert_eq!(wall_signs(&int(3), &q(1, 2), &q(1, 4)).unwrap(), (-1, 1));
        assert!(wall_signs(&int(2), &int(0), &int(0)).is_err());
    }

    #[test]
    fn root_examples() {
        let tol = default_tolerance();
        let r = solve_duality_a(&int(3), &int(0), &int(0), &tol).unwrap();
        assert!(r.is_exact() && r.lo == one());
        let r = solve_duality_a(&int(2), &q(1, 2), &q(1, 2), &tol).unwrap();
        assert!(r.is_exact() && r.lo == one());
        let r = solve_duality_a(&int(2), &q(1, 4), &q(1, 2), &tol).unwrap();
        assert!(r.lo >= one() && r.hi <= int(2) && r.width() <= tol && r.unique);
    }

    #[test]
    fn curve_examples() {
        let tol = default_tolerance();
        let grid = [q(3, 2), int(2), int(3)];
        for p in trace_curve(&q(1, 4), &q(1, 2), &grid, &tol).unwrap() {
            assert!(p.a >= 1.0 && p.a <= 2.0);
        }
        for p in trace_curve(&q(1, 2), &q(1, 4), &grid, &tol).unwrap() {
            assert!(p.a >= 0.5 && p.a <= 1.0 && p.bracket.width() <= tol);
        }
        for p in trace_curve(&q(1, 2), &q(1, 2), &[int(2), int(3), int(4)], &tol).unwrap() {
            assert_eq!(p.a, 1.0);
        }
    }

    #[test]
    fn jacobian_examples() {
        let c = jacobian_check();
        assert!(c.passed, "{:?}", c.identity);
        let v = jacobian_closed_form().eval(&[('c', q(1, 2)), ('d', int(0))]).unwrap();
        assert_eq!(v, q(-56, 9));
    }

    #[test]
    fn symmetry_examples() {
        let c = inverse_symmetry_check();
        assert!(c.passed, "{c:?}");
        let psi = psi_closed_form();
        assert_eq!(rotate_cd(&psi), psi);
        let v = |a, b, c, d| psi.eval(&[('a', a), ('b', b), ('c', c), ('d', d)]).unwrap();
        let x = v(int(2), int(2), q(1, 3), q(1, 2));
        let y = v(q(1, 2), int(2), q(1, 2), q(1, 3));
        assert_eq!(scalar::sign(&x), -scalar::sign(&y));
    }

    #[test]
    fn polarity_examples() {
        let on = FullParams::new(int(1), int(1), q(1, 3), q(1, 5)).unwrap();
        let (r1, r2m) = morph::morphed_generators(&on).unwrap();
        assert!(solve_polarity(&r1, &r2m, 1e-10).unwrap().exact.is_some());
        let flat = FullParams::new(int(1), int(2), int(0), int(0)).unwrap();
        let (r1, r2m) = morph::morphed_generators(&flat).unwrap();
        assert!(solve_polarity(&r1, &r2m, 1e-10).is_ok());
        let off = FullParams::new(q(3, 2), int(2), q(1, 3), q(1, 5)).unwrap();
        let (r1, r2m) = morph::morphed_generators(&off).unwrap();
        assert!(matches!(solve_polarity(&r1, &r2m, 1e-10), Err(Error::NoPolarity(_))));
        assert!(!det_minus_identity(&off).unwrap().is_zero());
    }
}
