//! Sparse multivariate polynomials over exact rationals.
//!
//! Variables are named by single letters. Each polynomial keeps only the
//! variables it actually uses, sorted, so structural equality is polynomial
//! equality.

mod matrix;
mod parse;
pub mod positivity;
mod ratfunc;
pub mod resultant;
pub mod uni;

pub use matrix::PolyMat3;
pub use positivity::{
    positivity_check, taylor_at_one, taylor_certify, taylor_coefficients, Bound, DomainBox, Interval, PosCert,
    PositivityConfig, PosFailure, TaylorCert, positivity_check_with,
};
pub use ratfunc::RatFunc;
pub use resultant::resultant;
pub use uni::UniPoly;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

type Exps = Vec<u32>;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    vars: Vec<char>,
    terms: BTreeMap<Exps, Scalar>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Scalar) -> Self {
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert(Vec::new(), c);
        }
        p
    }

    pub fn int(n: i64) -> Self {
        Self::constant(scalar::int(n))
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    pub fn var(v: char) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![1], Scalar::one());
        MultiPoly { vars: vec![v], terms }
    }

    /// `coef · Π vᵢ^eᵢ`.
    pub fn monomial(coef: Scalar, powers: &[(char, u32)]) -> Self {
        let mut p = Self::constant(coef);
        for &(v, e) in powers {
            p = &p * &Self::var(v).pow(e);
        }
        p
    }

    /// Parses an expression such as `"(a^2-1)(b^2+1) - 3/2*c*d"`.
    pub fn parse(s: &str) -> Result<Self> {
        parse::parse(s)
    }

    /// Parser wrapper for formulas known to be well formed.
    pub fn p(s: &str) -> Self {
        Self::parse(s).unwrap_or_else(|e| panic!("bad formula {s:?}: {e}"))
    }

    pub fn vars(&self) -> &[char] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Scalar> {
        if self.terms.is_empty() {
            return Some(Scalar::zero());
        }
        if self.vars.is_empty() {
            return self.terms.get(&Vec::new()).cloned();
        }
        None
    }

    pub fn terms(&self) -> impl Iterator<Item = (Vec<(char, u32)>, &Scalar)> {
        self.terms.iter().map(move |(e, c)| {
            let m = self.vars.iter().zip(e).filter(|(_, &k)| k > 0).map(|(&v, &k)| (v, k)).collect();
            (m, c)
        })
    }

    pub fn coefficients(&self) -> impl Iterator<Item = &Scalar> {
        self.terms.values()
    }

    fn from_parts(vars: Vec<char>, terms: BTreeMap<Exps, Scalar>) -> Self {
        let mut p = MultiPoly { vars, terms };
        p.normalize();
        p
    }

    /// Drops zero coefficients and unused variables.
    fn normalize(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
        let used: Vec<bool> = (0..self.vars.len())
            .map(|i| self.terms.keys().any(|e| e[i] > 0))
            .collect();
        if used.iter().all(|&u| u) {
            return;
        }
        let vars = self.vars.iter().zip(&used).filter(|(_, &u)| u).map(|(&v, _)| v).collect();
        let terms = std::mem::take(&mut self.terms)
            .into_iter()
            .map(|(e, c)| (e.iter().zip(&used).filter(|(_, &u)| u).map(|(&k, _)| k).collect(), c))
            .collect();
        self.vars = vars;
        self.terms = terms;
    }

    /// Re-expresses `self` over the sorted variable list `vars` (a superset).
    fn lift(&self, vars: &[char]) -> BTreeMap<Exps, Scalar> {
        if self.vars == vars {
            return self.terms.clone();
        }
        let idx: Vec<usize> = self.vars.iter().map(|v| vars.iter().position(|w| w == v).unwrap()).collect();
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut ne = vec![0; vars.len()];
                for (i, &k) in e.iter().enumerate() {
                    ne[idx[i]] = k;
                }
                (ne, c.clone())
            })
            .collect()
    }

    fn union_vars(&self, o: &Self) -> Vec<char> {
        let s: BTreeSet<char> = self.vars.iter().chain(&o.vars).copied().collect();
        s.into_iter().collect()
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        MultiPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    fn var_index(&self, v: char) -> Option<usize> {
        self.vars.iter().position(|&w| w == v)
    }

    pub fn degree(&self, v: char) -> u32 {
        match self.var_index(v) {
            Some(i) => self.terms.keys().map(|e| e[i]).max().unwrap_or(0),
            None => 0,
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// Smallest total degree in the given variables over all terms; `None` for zero.
    pub fn min_degree_in(&self, vs: &[char]) -> Option<u32> {
        let idx: Vec<usize> = vs.iter().filter_map(|&v| self.var_index(v)).collect();
        self.terms.keys().map(|e| idx.iter().map(|&i| e[i]).sum()).min()
    }

    /// Part of total degree exactly `k` in the given variables.
    pub fn homogeneous_part(&self, vs: &[char], k: u32) -> Self {
        let idx: Vec<usize> = vs.iter().filter_map(|&v| self.var_index(v)).collect();
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| idx.iter().map(|&i| e[i]).sum::<u32>() == k)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        Self::from_parts(self.vars.clone(), terms)
    }

    /// Coefficients in `v`: `self = Σ coeffs[k] v^k`.
    pub fn coeffs_in(&self, v: char) -> Vec<MultiPoly> {
        let Some(i) = self.var_index(v) else { return vec![self.clone()] };
        let deg = self.degree(v) as usize;
        let mut parts: Vec<BTreeMap<Exps, Scalar>> = vec![BTreeMap::new(); deg + 1];
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            let k = ne[i] as usize;
            ne[i] = 0;
            parts[k].insert(ne, c.clone());
        }
        parts.into_iter().map(|t| Self::from_parts(self.vars.clone(), t)).collect()
    }

    /// Coefficient of `v^k`.
    pub fn coeff(&self, v: char, k: u32) -> MultiPoly {
        self.coeffs_in(v).into_iter().nth(k as usize).unwrap_or_default()
    }

    pub fn from_coeffs(v: char, coeffs: &[MultiPoly]) -> Self {
        let x = Self::var(v);
        coeffs.iter().rev().fold(Self::zero(), |acc, c| &(&acc * &x) + c)
    }

    pub fn deriv(&self, v: char) -> Self {
        let Some(i) = self.var_index(v) else { return Self::zero() };
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e[i] > 0)
            .map(|(e, c)| {
                let mut ne = e.clone();
                ne[i] -= 1;
                (ne, c * scalar::int(e[i] as i64))
            })
            .collect();
        Self::from_parts(self.vars.clone(), terms)
    }

    pub fn nth_deriv(&self, v: char, k: u32) -> Self {
        (0..k).fold(self.clone(), |p, _| p.deriv(v))
    }

    /// Replaces `v` by the polynomial `by`.
    pub fn subst(&self, v: char, by: &MultiPoly) -> Self {
        if self.var_index(v).is_none() {
            return self.clone();
        }
        let cs = self.coeffs_in(v);
        cs.iter().rev().fold(Self::zero(), |acc, c| &(&acc * by) + c)
    }

    pub fn subst_scalar(&self, v: char, x: &Scalar) -> Self {
        let Some(i) = self.var_index(v) else { return self.clone() };
        let deg = self.degree(v) as usize;
        let mut pw = vec![Scalar::one(); deg + 1];
        for k in 1..=deg {
            pw[k] = &pw[k - 1] * x;
        }
        let mut terms: BTreeMap<Exps, Scalar> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            let k = ne[i] as usize;
            ne[i] = 0;
            *terms.entry(ne).or_insert_with(Scalar::zero) += c * &pw[k];
        }
        Self::from_parts(self.vars.clone(), terms)
    }

    pub fn subst_many(&self, vals: &[(char, Scalar)]) -> Self {
        vals.iter().fold(self.clone(), |p, (v, x)| p.subst_scalar(*v, x))
    }

    /// Full evaluation; missing variables are an error.
    pub fn eval(&self, vals: &[(char, Scalar)]) -> Result<Scalar> {
        let p = self.subst_many(vals);
        p.as_constant()
            .ok_or_else(|| Error::ParamOutOfRange(format!("unassigned variables {:?}", p.vars)))
    }

    pub fn eval_f64(&self, vals: &[(char, f64)]) -> f64 {
        let idx: Vec<f64> = self
            .vars
            .iter()
            .map(|v| vals.iter().find(|(w, _)| w == v).map(|x| x.1).unwrap_or(f64::NAN))
            .collect();
        self.terms
            .iter()
            .map(|(e, c)| scalar::to_f64(c) * e.iter().zip(&idx).map(|(&k, x)| x.powi(k as i32)).product::<f64>())
            .sum()
    }

    /// Renames variables, e.g. for symmetry checks. Applied simultaneously.
    pub fn rename(&self, map: &[(char, char)]) -> Self {
        let tmp: Vec<char> = (0..map.len()).map(|i| char::from_u32(0xE000 + i as u32).unwrap()).collect();
        let mut p = self.clone();
        for (i, &(from, _)) in map.iter().enumerate() {
            p = p.subst(from, &Self::var(tmp[i]));
        }
        for (i, &(_, to)) in map.iter().enumerate() {
            p = p.subst(tmp[i], &Self::var(to));
        }
        p
    }

    /// Exact quotient `self / q`, or `None` when `q` does not divide `self`.
    pub fn exact_div(&self, q: &MultiPoly) -> Option<MultiPoly> {
        if q.is_zero() {
            return None;
        }
        if let Some(c) = q.as_constant() {
            return Some(self.scale(&c.recip()));
        }
        let vars = self.union_vars(q);
        let qt = q.lift(&vars);
        let (qe, qc) = qt.iter().next_back().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let mut r = self.lift(&vars);
        let mut quot: BTreeMap<Exps, Scalar> = BTreeMap::new();
        while let Some((re, rc)) = r.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            if re.iter().zip(&qe).any(|(a, b)| a < b) {
                return None;
            }
            let me: Exps = re.iter().zip(&qe).map(|(a, b)| a - b).collect();
            let mc = &rc / &qc;
            for (e, c) in &qt {
                let ne: Exps = e.iter().zip(&me).map(|(a, b)| a + b).collect();
                let entry = r.entry(ne).or_insert_with(Scalar::zero);
                *entry -= c * &mc;
                if entry.is_zero() {
                    let key: Exps = e.iter().zip(&me).map(|(a, b)| a + b).collect();
                    r.remove(&key);
                }
            }
            quot.insert(me, mc);
        }
        Some(Self::from_parts(vars, quot))
    }

    /// Univariate view when at most `v` occurs.
    pub fn to_uni(&self, v: char) -> Option<UniPoly> {
        if self.vars.iter().any(|&w| w != v) {
            return None;
        }
        Some(UniPoly::new(self.coeffs_in(v).iter().map(|c| c.as_constant().unwrap()).collect()))
    }

    /// Content-free integer multiple with positive leading coefficient scaling ignored.
    pub fn max_coeff_bits(&self) -> u64 {
        self.terms.values().map(|c| c.numer().bits().max(c.denom().bits())).max().unwrap_or(0)
    }

    /// Lowest common denominator of the coefficients.
    pub fn denominator_lcm(&self) -> BigInt {
        use num_integer::Integer;
        self.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Human-readable form, highest terms first.
    pub fn to_string_pretty(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono: Vec<String> = self
                .vars
                .iter()
                .zip(e)
                .filter(|(_, &k)| k > 0)
                .map(|(v, &k)| if k == 1 { v.to_string() } else { format!("{v}^{k}") })
                .collect();
            if mono.is_empty() {
                out.push_str(&scalar::fmt(&a));
            } else {
                if !a.is_one() {
                    let s = scalar::fmt(&a);
                    if s.contains('/') {
                        out.push_str(&format!("({s})*"));
                    } else {
                        out.push_str(&format!("{s}*"));
                    }
                }
                out.push_str(&mono.join("*"));
            }
        }
        out
    }

    /// Largest exponent used, as a sanity bound for dense algorithms.
    pub fn max_exponent(&self) -> u32 {
        self.terms.keys().flat_map(|e| e.iter().copied()).max().unwrap_or(0)
    }

    /// Minimum and maximum coefficient as floats, for reporting.
    pub fn coeff_range_f64(&self) -> (f64, f64) {
        let v: Vec<f64> = self.terms.values().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect();
        (v.iter().cloned().fold(f64::INFINITY, f64::min), v.iter().cloned().fold(f64::NEG_INFINITY, f64::max))
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_pretty())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({})", self.to_string_pretty())
    }
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string_pretty())
    }
}

impl From<Scalar> for MultiPoly {
    fn from(c: Scalar) -> Self {
        Self::constant(c)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, o: &MultiPoly) -> MultiPoly {
        let vars = self.union_vars(o);
        let mut t = self.lift(&vars);
        for (e, c) in o.lift(&vars) {
            *t.entry(e).or_insert_with(Scalar::zero) += c;
        }
        MultiPoly::from_parts(vars, t)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, o: &MultiPoly) -> MultiPoly {
        self + &(-o)
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, o: &MultiPoly) -> MultiPoly {
        if self.is_zero() || o.is_zero() {
            return MultiPoly::zero();
        }
        let vars = self.union_vars(o);
        let a = self.lift(&vars);
        let b = o.lift(&vars);
        let mut t: BTreeMap<Exps, Scalar> = BTreeMap::new();
        for (ea, ca) in &a {
            for (eb, cb) in &b {
                let e: Exps = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                *t.entry(e).or_insert_with(Scalar::zero) += ca * cb;
            }
        }
        MultiPoly::from_parts(vars, t)
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, o: MultiPoly) -> MultiPoly { (&self).$m(&o) }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, o: &MultiPoly) -> MultiPoly { (&self).$m(o) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

/// The factorial `k!` as a scalar.
pub fn factorial(k: u32) -> Scalar {
    Scalar::from_integer((1..=k as u64).fold(BigInt::one(), |acc, i| acc * BigInt::from(i)))
}
