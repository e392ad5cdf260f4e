//! Positivity certificates for polynomials on boxes.
//!
//! Three methods, tried in order:
//! 1. shift every variable to its lower bound and read off nonnegative coefficients;
//! 2. recognize `α·f_λ(c,d)` with `f_λ = c²+d²−2c²d²+λ(c³d−cd³)`, `α > 0`, `|λ| ≤ 1`;
//! 3. Bernstein bounds with bisection, after mapping unbounded variables by `v = lo + u/(1−u)`.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::{factorial, MultiPoly};
use crate::scalar::{self, Scalar};

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Bound {
    Open(#[serde(with = "scalar")] Scalar),
    Closed(#[serde(with = "scalar")] Scalar),
    Infinite,
}

impl Bound {
    fn value(&self) -> Option<&Scalar> {
        match self {
            Bound::Open(x) | Bound::Closed(x) => Some(x),
            Bound::Infinite => None,
        }
    }

    fn is_closed(&self) -> bool {
        matches!(self, Bound::Closed(_))
    }
}

/// Interval with a finite lower end.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Interval {
    pub lo: Bound,
    pub hi: Bound,
}

impl Interval {
    pub fn closed(lo: Scalar, hi: Scalar) -> Self {
        Interval { lo: Bound::Closed(lo), hi: Bound::Closed(hi) }
    }

    pub fn open(lo: Scalar, hi: Scalar) -> Self {
        Interval { lo: Bound::Open(lo), hi: Bound::Open(hi) }
    }

    pub fn closed_open(lo: Scalar, hi: Scalar) -> Self {
        Interval { lo: Bound::Closed(lo), hi: Bound::Open(hi) }
    }

    /// `[lo, ∞)`
    pub fn ray(lo: Scalar) -> Self {
        Interval { lo: Bound::Closed(lo), hi: Bound::Infinite }
    }

    /// `(lo, ∞)`
    pub fn open_ray(lo: Scalar) -> Self {
        Interval { lo: Bound::Open(lo), hi: Bound::Infinite }
    }

    pub fn contains(&self, x: &Scalar) -> bool {
        let lo_ok = match &self.lo {
            Bound::Open(l) => x > l,
            Bound::Closed(l) => x >= l,
            Bound::Infinite => true,
        };
        let hi_ok = match &self.hi {
            Bound::Open(h) => x < h,
            Bound::Closed(h) => x <= h,
            Bound::Infinite => true,
        };
        lo_ok && hi_ok
    }
}

/// Product of intervals, optionally with the origin of two variables removed.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct DomainBox {
    pub vars: Vec<(char, Interval)>,
    pub punctured: Option<(char, char)>,
}

impl DomainBox {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, v: char, iv: Interval) -> Self {
        self.vars.retain(|(w, _)| *w != v);
        self.vars.push((v, iv));
        self
    }

    pub fn puncture(mut self, c: char, d: char) -> Self {
        self.punctured = Some((c, d));
        self
    }

    pub fn interval(&self, v: char) -> Option<&Interval> {
        self.vars.iter().find(|(w, _)| *w == v).map(|(_, i)| i)
    }

    pub fn contains(&self, pt: &[(char, Scalar)]) -> bool {
        let inside = self.vars.iter().all(|(v, iv)| pt.iter().find(|(w, _)| w == v).is_some_and(|(_, x)| iv.contains(x)));
        let at_hole = self.punctured.is_some_and(|(c, d)| {
            let z = |v: char| pt.iter().find(|(w, _)| *w == v).is_some_and(|(_, x)| x.is_zero());
            z(c) && z(d)
        });
        inside && !at_hole
    }

    /// Uniform random points of the domain, unbounded coordinates drawn from `[lo, lo+10]`.
    pub fn sample(&self, rng: &mut impl rand::Rng, n: usize) -> Vec<Vec<(char, Scalar)>> {
        let mut out = Vec::with_capacity(n);
        while out.len() < n {
            let pt: Vec<(char, Scalar)> = self
                .vars
                .iter()
                .map(|(v, iv)| {
                    let lo = iv.lo.value().cloned().unwrap_or_else(|| scalar::int(-10));
                    let hi = iv.hi.value().cloned().unwrap_or_else(|| &lo + scalar::int(10));
                    let t = scalar::q(rng.gen_range(0..=1_000_000), 1_000_000);
                    (*v, &lo + (&hi - &lo) * t)
                })
                .collect();
            if self.contains(&pt) {
                out.push(pt);
            }
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct PositivityConfig {
    pub max_depth: u32,
    pub max_cells: usize,
}

impl Default for PositivityConfig {
    fn default() -> Self {
        PositivityConfig { max_depth: 20, max_cells: 1 << 16 }
    }
}

/// How a sign claim was discharged.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "method", rename_all = "snake_case")]
pub enum PosCert {
    ShiftedCoefficients {
        shifts: Vec<(char, String)>,
        terms: usize,
        strict: bool,
    },
    SpecialP {
        alpha: String,
        lambda: String,
        strict: bool,
    },
    Bernstein {
        cells: usize,
        max_depth: u32,
        compactified: Vec<char>,
        strict: bool,
    },
}

impl PosCert {
    pub fn method(&self) -> &'static str {
        match self {
            PosCert::ShiftedCoefficients { .. } => "shifted_coefficients",
            PosCert::SpecialP { .. } => "specialp",
            PosCert::Bernstein { .. } => "bernstein",
        }
    }
}

/// Why certification failed, with a counterexample when one was found.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PosFailure {
    pub reason: String,
    pub witness: Option<Vec<(char, String)>>,
    pub value: Option<String>,
    pub depth_limited: bool,
}

impl std::fmt::Display for PosFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.reason)?;
        if let Some(w) = &self.witness {
            let pts: Vec<String> = w.iter().map(|(v, x)| format!("{v}={x}")).collect();
            write!(f, " at ({})", pts.join(", "))?;
        }
        if let Some(v) = &self.value {
            write!(f, ", value {v}")?;
        }
        Ok(())
    }
}

impl From<PosFailure> for crate::error::Error {
    fn from(f: PosFailure) -> Self {
        crate::error::Error::CertificationFailed(f.to_string())
    }
}

/// Proves `p > 0` (`strict`) or `p ≥ 0` on `dom`.
pub fn positivity_check(p: &MultiPoly, dom: &DomainBox, strict: bool) -> Result<PosCert, PosFailure> {
    positivity_check_with(p, dom, strict, &PositivityConfig::default())
}

pub fn positivity_check_with(
    p: &MultiPoly,
    dom: &DomainBox,
    strict: bool,
    cfg: &PositivityConfig,
) -> Result<PosCert, PosFailure> {
    for v in p.vars() {
        if dom.interval(*v).is_none() {
            return Err(PosFailure {
                reason: format!("variable {v} has no domain"),
                witness: None,
                value: None,
                depth_limited: false,
            });
        }
    }
    if let Some(c) = p.as_constant() {
        let ok = if strict { c.is_positive() } else { !c.is_negative() };
        return if ok {
            Ok(PosCert::ShiftedCoefficients { shifts: vec![], terms: p.len(), strict })
        } else {
            Err(PosFailure {
                reason: "constant has the wrong sign".into(),
                witness: Some(vec![]),
                value: Some(scalar::fmt(&c)),
                depth_limited: false,
            })
        };
    }
    if let Some(c) = shifted_coefficients(p, dom, strict) {
        return Ok(c);
    }
    if let Some(c) = specialp_multiple(p, dom) {
        return Ok(c);
    }
    bernstein(p, dom, strict, cfg)
}

fn shifted_coefficients(p: &MultiPoly, dom: &DomainBox, strict: bool) -> Option<PosCert> {
    let mut q = p.clone();
    let mut shifts = vec![];
    let mut open_lo = vec![];
    for &v in p.vars() {
        let iv = dom.interval(v)?;
        let lo = iv.lo.value()?;
        if !lo.is_zero() {
            q = q.subst(v, &(&MultiPoly::var(v) + &MultiPoly::constant(lo.clone())));
        }
        shifts.push((v, scalar::fmt(lo)));
        if !iv.lo.is_closed() {
            open_lo.push(v);
        }
    }
    if q.coefficients().any(Signed::is_negative) {
        return None;
    }
    if strict {
        // some term must be positive everywhere: all its variables have open lower ends
        let ok = q.terms().any(|(m, c)| c.is_positive() && m.iter().all(|(v, _)| open_lo.contains(v)));
        if !ok {
            return None;
        }
    }
    Some(PosCert::ShiftedCoefficients { shifts, terms: q.len(), strict })
}

/// `f_λ(c,d) = c² + d² − 2c²d² + λ(c³d − cd³)`.
pub fn specialp(lambda: &Scalar, c: char, d: char) -> MultiPoly {
    let base = MultiPoly::p("c^2 + d^2 - 2c^2d^2").rename(&[('c', c), ('d', d)]);
    let odd = MultiPoly::p("c^3 d - c d^3").rename(&[('c', c), ('d', d)]);
    &base + &odd.scale(lambda)
}

/// Writes `p = α f_λ(c,d)` when possible.
pub fn match_specialp(p: &MultiPoly, c: char, d: char) -> Option<(Scalar, Scalar)> {
    let alpha = p.eval(&[(c, Scalar::one()), (d, Scalar::zero())]).ok()?;
    if alpha.is_zero() {
        return None;
    }
    let odd = MultiPoly::p("c^3 d - c d^3").rename(&[('c', c), ('d', d)]);
    let rest = p - &specialp(&Scalar::zero(), c, d).scale(&alpha);
    let beta = rest.eval(&[(c, scalar::int(2)), (d, Scalar::one())]).ok()? / scalar::int(6);
    if rest != odd.scale(&beta) {
        return None;
    }
    Some((alpha.clone(), beta / alpha))
}

fn specialp_multiple(p: &MultiPoly, dom: &DomainBox) -> Option<PosCert> {
    let (c, d) = dom.punctured?;
    if p.vars().iter().any(|&v| v != c && v != d) {
        return None;
    }
    for v in [c, d] {
        let iv = dom.interval(v)?;
        let inside = iv.lo.value().is_some_and(|l| *l >= scalar::int(-1))
            && iv.hi.value().is_some_and(|h| *h <= scalar::int(1))
            && iv.contains(&Scalar::zero());
        let unit_open = !(iv.lo == Bound::Closed(scalar::int(-1)) || iv.hi == Bound::Closed(scalar::int(1)));
        if !inside || !unit_open {
            return None;
        }
    }
    let (alpha, lambda) = match_specialp(p, c, d)?;
    if alpha.is_positive() && lambda.abs() <= Scalar::one() {
        Some(PosCert::SpecialP { alpha: scalar::fmt(&alpha), lambda: scalar::fmt(&lambda), strict: true })
    } else {
        None
    }
}

/// Per-variable map from `[0,1]` onto the domain interval.
#[derive(Clone)]
struct Chart {
    var: char,
    lo: Scalar,
    /// `None` for a compactified ray.
    width: Option<Scalar>,
    lo_excluded: bool,
    hi_excluded: bool,
}

impl Chart {
    fn to_domain(&self, w: &Scalar) -> Option<Scalar> {
        match &self.width {
            Some(wd) => Some(&self.lo + wd * w),
            None if w < &Scalar::one() => Some(&self.lo + w / (Scalar::one() - w)),
            None => None,
        }
    }
}

/// `p` pulled back to `[0,1]^n` (times a positive factor for compactified variables).
fn normalize_to_unit_box(p: &MultiPoly, dom: &DomainBox) -> (MultiPoly, Vec<Chart>) {
    let mut q = p.clone();
    let mut charts = vec![];
    for &v in p.vars() {
        let iv = dom.interval(v).expect("checked by caller");
        let lo = iv.lo.value().cloned().expect("finite lower bounds only");
        let x = MultiPoly::var(v);
        match iv.hi.value() {
            Some(hi) => {
                let width = hi - &lo;
                q = q.subst(v, &(&MultiPoly::constant(lo.clone()) + &x.scale(&width)));
                charts.push(Chart {
                    var: v,
                    lo,
                    width: Some(width),
                    lo_excluded: !iv.lo.is_closed(),
                    hi_excluded: !iv.hi.is_closed(),
                });
            }
            None => {
                // q(lo + u/(1-u)) (1-u)^n = Σ c_k (lo(1-u) + u)^k (1-u)^(n-k)
                let n = q.degree(v);
                let one_minus = &MultiPoly::one() - &x;
                let num = &one_minus.scale(&lo) + &x;
                let cs = q.coeffs_in(v);
                let mut acc = MultiPoly::zero();
                for (k, ck) in cs.iter().enumerate() {
                    let term = &(&num.pow(k as u32) * &one_minus.pow(n - k as u32)) * ck;
                    acc = &acc + &term;
                }
                q = acc;
                charts.push(Chart { var: v, lo, width: None, lo_excluded: !iv.lo.is_closed(), hi_excluded: true });
            }
        }
    }
    (q, charts)
}

/// Dense Bernstein coefficients of `q` on `[0,1]^n` in the variable order `vars`.
fn bernstein_coeffs(q: &MultiPoly, vars: &[char], degs: &[usize]) -> Vec<Scalar> {
    let n = vars.len();
    let mut strides = vec![1usize; n];
    for i in (0..n.saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * (degs[i + 1] + 1);
    }
    let size: usize = degs.iter().map(|d| d + 1).product();
    let mut t = vec![Scalar::zero(); size.max(1)];
    for (m, c) in q.terms() {
        let mut idx = 0;
        for (v, e) in m {
            let i = vars.iter().position(|&w| w == v).unwrap();
            idx += e as usize * strides[i];
        }
        t[idx] += c;
    }
    // along each axis: b_i = Σ_{j ≤ i} C(i,j)/C(N,j) a_j
    for ax in 0..n {
        let nd = degs[ax];
        let binom = |a: usize, b: usize| -> Scalar { factorial(a as u32) / (factorial(b as u32) * factorial((a - b) as u32)) };
        let weights: Vec<Vec<Scalar>> =
            (0..=nd).map(|i| (0..=i).map(|j| binom(i, j) / binom(nd, j)).collect()).collect();
        let outer = size / ((nd + 1) * strides[ax]);
        for o in 0..outer {
            for inner in 0..strides[ax] {
                let base = o * (nd + 1) * strides[ax] + inner;
                let a: Vec<Scalar> = (0..=nd).map(|k| t[base + k * strides[ax]].clone()).collect();
                for i in 0..=nd {
                    let mut s = Scalar::zero();
                    for j in 0..=i {
                        if !a[j].is_zero() {
                            s += &weights[i][j] * &a[j];
                        }
                    }
                    t[base + i * strides[ax]] = s;
                }
            }
        }
    }
    t
}

struct Cell {
    lo: Vec<Scalar>,
    hi: Vec<Scalar>,
    depth: u32,
}

fn bernstein(p: &MultiPoly, dom: &DomainBox, strict: bool, cfg: &PositivityConfig) -> Result<PosCert, PosFailure> {
    let (q, charts) = normalize_to_unit_box(p, dom);
    let vars: Vec<char> = charts.iter().map(|c| c.var).collect();
    let n = vars.len();
    let compactified: Vec<char> = charts.iter().filter(|c| c.width.is_none()).map(|c| c.var).collect();
    let witness_of = |w: &[Scalar]| -> Option<Vec<(char, Scalar)>> {
        charts.iter().zip(w).map(|(c, x)| c.to_domain(x).map(|y| (c.var, y))).collect()
    };
    let fail = |reason: String, w: Option<Vec<(char, Scalar)>>, depth_limited: bool| {
        let value = w.as_ref().and_then(|pt| p.eval(pt).ok()).map(|v| scalar::fmt(&v));
        PosFailure {
            reason,
            witness: w.map(|pt| pt.into_iter().map(|(v, x)| (v, scalar::fmt(&x))).collect()),
            value,
            depth_limited,
        }
    };

    let mut stack = vec![Cell { lo: vec![Scalar::zero(); n], hi: vec![Scalar::one(); n], depth: 0 }];
    let mut done = 0usize;
    let mut max_depth = 0;
    let half = scalar::q(1, 2);
    while let Some(cell) = stack.pop() {
        done += 1;
        if done > cfg.max_cells {
            return Err(fail(format!("cell budget {} exhausted", cfg.max_cells), None, true));
        }
        max_depth = max_depth.max(cell.depth);
        let mut local = q.clone();
        for (i, &v) in vars.iter().enumerate() {
            let map = &MultiPoly::constant(cell.lo[i].clone()) + &MultiPoly::var(v).scale(&(&cell.hi[i] - &cell.lo[i]));
            local = local.subst(v, &map);
        }
        let degs: Vec<usize> = vars.iter().map(|&v| local.degree(v) as usize).collect();
        let b = bernstein_coeffs(&local, &vars, &degs);
        let mut strides = vec![1usize; n];
        for i in (0..n.saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * (degs[i + 1] + 1);
        }
        // excluded faces of this cell: (axis, at_hi)
        let excluded = |axis: usize, at_hi: bool| -> bool {
            let c = &charts[axis];
            if at_hi {
                cell.hi[axis].is_one() && c.hi_excluded
            } else {
                cell.lo[axis].is_zero() && c.lo_excluded
            }
        };
        let min = b.iter().min().cloned().unwrap_or_else(Scalar::zero);
        let certified = if min.is_positive() {
            true
        } else if min.is_negative() {
            false
        } else if !strict {
            true
        } else {
            faces_covered(&b, &degs, &strides, &excluded)
        };
        if certified {
            continue;
        }
        // corner values are exact function values
        for corner in 0..(1usize << n) {
            let mut idx = 0;
            let mut w = vec![];
            let mut in_domain = true;
            for ax in 0..n {
                let at_hi = corner >> ax & 1 == 1;
                if at_hi {
                    idx += degs[ax] * strides[ax];
                }
                in_domain &= !excluded(ax, at_hi);
                w.push(if at_hi { cell.hi[ax].clone() } else { cell.lo[ax].clone() });
            }
            let bad = if strict { !b[idx].is_positive() } else { b[idx].is_negative() };
            if bad && in_domain {
                if let Some(pt) = witness_of(&w) {
                    if dom.contains(&pt) {
                        return Err(fail("polynomial has the wrong sign".into(), Some(pt), false));
                    }
                }
            }
        }
        let mid: Vec<Scalar> = (0..n).map(|i| (&cell.lo[i] + &cell.hi[i]) * &half).collect();
        if let Some(pt) = witness_of(&mid) {
            let v = p.eval(&pt).expect("all variables assigned");
            if (v.is_negative() || (strict && v.is_zero()))
                && dom.contains(&pt) {
                    return Err(fail("polynomial has the wrong sign".into(), Some(pt), false));
                }
        }
        if cell.depth >= cfg.max_depth {
            return Err(fail(format!("subdivision depth limit {} reached", cfg.max_depth), witness_of(&mid), true));
        }
        let axis = (0..n).max_by(|&i, &j| (&cell.hi[i] - &cell.lo[i]).cmp(&(&cell.hi[j] - &cell.lo[j]))).unwrap();
        let m = mid[axis].clone();
        let mut left_hi = cell.hi.clone();
        left_hi[axis] = m.clone();
        let mut right_lo = cell.lo.clone();
        right_lo[axis] = m;
        stack.push(Cell { lo: cell.lo.clone(), hi: left_hi, depth: cell.depth + 1 });
        stack.push(Cell { lo: right_lo, hi: cell.hi, depth: cell.depth + 1 });
    }
    Ok(PosCert::Bernstein { cells: done, max_depth, compactified, strict })
}

/// With all coefficients ≥ 0: every face of the cell not lying on an excluded
/// boundary sees some positive coefficient in its support.
fn faces_covered(b: &[Scalar], degs: &[usize], strides: &[usize], excluded: &dyn Fn(usize, bool) -> bool) -> bool {
    let n = degs.len();
    let faces = 3usize.pow(n as u32);
    'face: for f in 0..faces {
        // per axis: 0 → at lo, 1 → at hi, 2 → free
        let mut kinds = vec![0u8; n];
        let mut x = f;
        for k in kinds.iter_mut() {
            *k = (x % 3) as u8;
            x /= 3;
        }
        for (ax, &k) in kinds.iter().enumerate() {
            if k < 2 && excluded(ax, k == 1) {
                continue 'face;
            }
        }
        // enumerate the support of this face
        let ranges: Vec<(usize, usize)> = kinds
            .iter()
            .zip(degs)
            .map(|(&k, &d)| match k {
                0 => (0, 0),
                1 => (d, d),
                _ => (0, d),
            })
            .collect();
        let mut idx = ranges.iter().map(|r| r.0).collect::<Vec<_>>();
        loop {
            let flat: usize = idx.iter().zip(strides).map(|(i, s)| i * s).sum();
            if b[flat].is_positive() {
                continue 'face;
            }
            let mut ax = 0;
            loop {
                if ax == n {
                    return false;
                }
                if idx[ax] < ranges[ax].1 {
                    idx[ax] += 1;
                    break;
                }
                idx[ax] = ranges[ax].0;
                ax += 1;
            }
        }
    }
    true
}

/// `∂^k H/∂v^k` at `v = 1`.
pub fn taylor_at_one(h: &MultiPoly, v: char, k: u32) -> MultiPoly {
    h.nth_deriv(v, k).subst_scalar(v, &Scalar::one())
}

/// `H^(0), …, H^(m)` where `m = deg_v H`; all later ones vanish identically.
pub fn taylor_coefficients(h: &MultiPoly, v: char) -> Vec<MultiPoly> {
    (0..=h.degree(v)).map(|k| taylor_at_one(h, v, k)).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct TaylorCert {
    pub var: char,
    #[serde(with = "scalar")]
    pub lambda: Scalar,
    pub degree: u32,
    pub base: PosCert,
    pub derivatives: Vec<PosCert>,
}

/// Proves `H ≥ λ` (or `> λ` when `strict`) on `dom × {v ≥ 1}` by the Taylor series method.
pub fn taylor_certify(
    h: &MultiPoly,
    v: char,
    lambda: &Scalar,
    dom: &DomainBox,
    strict: bool,
) -> Result<TaylorCert, PosFailure> {
    let coeffs = taylor_coefficients(h, v);
    let tail = taylor_at_one(h, v, coeffs.len() as u32);
    if !tail.is_zero() {
        return Err(PosFailure {
            reason: "Taylor expansion does not terminate".into(),
            witness: None,
            value: None,
            depth_limited: false,
        });
    }
    let base_poly = &coeffs[0] - &MultiPoly::constant(lambda.clone());
    let base = positivity_check(&base_poly, dom, strict).map_err(|mut f| {
        f.reason = format!("H^(0) - λ: {}", f.reason);
        f
    })?;
    let mut derivatives = vec![];
    for (k, ck) in coeffs.iter().enumerate().skip(1) {
        let c = positivity_check(ck, dom, true).map_err(|mut f| {
            f.reason = format!("H^({k}): {}", f.reason);
            f
        })?;
        derivatives.push(c);
    }
    Ok(TaylorCert { var: v, lambda: lambda.clone(), degree: coeffs.len() as u32 - 1, base, derivatives })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, q};

    fn p(s: &str) -> MultiPoly {
        MultiPoly::p(s)
    }

    #[test]
    fn shifted_method() {
        let dom = DomainBox::new().with('b', Interval::ray(int(1)));
        let c = positivity_check(&p("(b-1)^3 + 2(b-1) + 5"), &dom, true).unwrap();
        assert_eq!(c.method(), "shifted_coefficients");
    }

    #[test]
    fn strictness_on_open_rays() {
        let open = DomainBox::new().with('x', Interval::open_ray(int(0)));
        assert!(positivity_check(&p("x"), &open, true).is_ok());
        let closed = DomainBox::new().with('x', Interval::ray(int(0)));
        assert!(positivity_check(&p("x"), &closed, true).is_err());
        assert!(positivity_check(&p("x"), &closed, false).is_ok());
    }

    #[test]
    fn specialp_recognition() {
        let dom = DomainBox::new()
            .with('c', Interval::open(int(-1), int(1)))
            .with('d', Interval::open(int(-1), int(1)))
            .puncture('c', 'd');
        let f = p("12c^2+12d^2-24c^2d^2-4c^3d+4cd^3");
        match positivity_check(&f, &dom, true).unwrap() {
            PosCert::SpecialP { alpha, lambda, .. } => {
                assert_eq!(alpha, "12");
                assert_eq!(lambda, "-1/3");
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(match_specialp(&specialp(&q(2, 1), 'c', 'd'), 'c', 'd'), Some((int(1), int(2))));
    }

    #[test]
    fn bernstein_on_unbounded_domain() {
        let dom = DomainBox::new().with('a', Interval::open_ray(int(0)));
        let r1 = p("(8-16a+16a^2)+16a^3+8a^4(2-2a+a^2)");
        let c = positivity_check(&r1, &dom, true).unwrap();
        assert_eq!(c.method(), "bernstein");
    }

    #[test]
    fn negative_polynomials_fail_with_witness() {
        let dom = DomainBox::new().with('b', Interval::ray(int(1)));
        let f = positivity_check(&p("-b^2"), &dom, false).unwrap_err();
        assert!(f.witness.is_some());
        let dom2 = DomainBox::new().with('x', Interval::closed(int(0), int(1)));
        let f = positivity_check(&p("(x - 1/3)^2 - 1/100"), &dom2, true).unwrap_err();
        let w = f.witness.unwrap();
        let x = scalar::parse(&w[0].1).unwrap();
        assert!(p("(x - 1/3)^2 - 1/100").eval(&[('x', x)]).unwrap() <= int(0));
    }

    #[test]
    fn nonstrict_touching_zero() {
        let dom = DomainBox::new().with('u', Interval::closed(int(0), int(1)));
        assert!(positivity_check(&p("(1-u^2)(1-u)"), &dom, false).is_ok());
        assert!(positivity_check(&p("(1-u^2)(1-2u)"), &dom, false).is_err());
    }

    #[test]
    fn taylor_method() {
        let dom = DomainBox::new().with('a', Interval::closed(int(1), int(2)));
        let w = p("(32a^2-16a^3+16a^4) + (16a+64a^2+32a^4)(b-1)");
        let cert = taylor_certify(&w, 'b', &int(32), &dom, false).unwrap();
        assert_eq!(cert.degree, 1);
        assert!(taylor_certify(&p("-b^2"), 'b', &int(0), &dom, false).is_err());
    }

    #[test]
    fn bernstein_coefficients_of_linear() {
        let c = bernstein_coeffs(&p("x"), &['x'], &[1]);
        assert_eq!(c, vec![int(0), int(1)]);
        let c = bernstein_coeffs(&p("x y"), &['x', 'y'], &[1, 1]);
        assert_eq!(c, vec![int(0), int(0), int(0), int(1)]);
    }
}
