//! Certificates for the inequality lemmas, the duality-curve properties and
//! the properness computations.
//!
//! Each certificate is a list of obligations of three kinds: exact symbolic
//! identities, certified positivity claims and sampled checks. Where computed
//! algebra disagrees with a displayed formula both sides are recorded as a
//! [`Discrepancy`].

use std::time::Instant;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::boxes::{self, IdentityCheck, PappusParams};
use crate::duality::{self, PsiMethod};
use crate::error::Error;
use crate::morph::{self, FullParams, MorphParams};
use crate::poly::positivity::specialp;
use crate::poly::{
    positivity_check_with, resultant, taylor_at_one, taylor_certify, DomainBox, Interval, MultiPoly,
    PolyMat3, PositivityConfig,
};
use crate::scalar::{self, int, one, q, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ObligationKind {
    SymbolicIdentity,
    Positivity,
    Sampled,
}

#[derive(Clone, Debug, Serialize)]
pub struct Obligation {
    pub name: String,
    pub kind: ObligationKind,
    pub passed: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<serde_json::Value>,
}

/// A displayed formula that differs from the computed one.
#[derive(Clone, Debug, Serialize)]
pub struct Discrepancy {
    pub item: String,
    pub displayed: String,
    pub computed: String,
    pub note: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaCertificate {
    pub id: String,
    pub title: String,
    pub passed: bool,
    pub obligations: Vec<Obligation>,
    pub discrepancies: Vec<Discrepancy>,
    pub witnesses: Vec<String>,
    pub elapsed_ms: u128,
}

impl LemmaCertificate {
    pub fn failures(&self) -> impl Iterator<Item = &Obligation> {
        self.obligations.iter().filter(|o| !o.passed)
    }
}

/// Knobs for the certifiers.
#[derive(Clone, Debug)]
pub struct LemmaConfig {
    /// Random points per brute-force positivity cross-check.
    pub samples: usize,
    /// Side of the dense grid used for `f_λ`.
    pub grid: usize,
    /// Random parameter points for the sampled duality checks.
    pub random_points: usize,
    pub orbit_depth: usize,
    pub orbit_params: usize,
    pub seed: u64,
    pub tol: Scalar,
    pub positivity: PositivityConfig,
    /// Replaces the closed form of `ψ` (negative controls).
    pub psi: Option<MultiPoly>,
}

impl Default for LemmaConfig {
    fn default() -> Self {
        LemmaConfig {
            samples: 1000,
            grid: 100,
            random_points: 25,
            orbit_depth: 5,
            orbit_params: 20,
            seed: 20240601,
            tol: duality::default_tolerance(),
            positivity: PositivityConfig::default(),
            psi: None,
        }
    }
}

impl LemmaConfig {
    pub fn psi(&self) -> MultiPoly {
        self.psi.clone().unwrap_or_else(duality::psi_closed_form)
    }

    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }
}

struct Builder<'a> {
    cfg: &'a LemmaConfig,
    rng: ChaCha8Rng,
    cert: LemmaCertificate,
    start: Instant,
}

impl<'a> Builder<'a> {
    fn new(id: &str, title: &str, cfg: &'a LemmaConfig) -> Self {
        let salt = id.bytes().fold(0u64, |h, b| h.wrapping_mul(31).wrapping_add(b as u64));
        Builder {
            cfg,
            rng: cfg.rng(salt),
            cert: LemmaCertificate {
                id: id.into(),
                title: title.into(),
                passed: false,
                obligations: vec![],
                discrepancies: vec![],
                witnesses: vec![],
                elapsed_ms: 0,
            },
            start: Instant::now(),
        }
    }

    fn push(&mut self, name: &str, kind: ObligationKind, passed: bool, detail: String, certificate: Option<serde_json::Value>) {
        self.cert.obligations.push(Obligation { name: name.into(), kind, passed, detail, certificate });
    }

    fn identity(&mut self, name: &str, lhs: &MultiPoly, rhs: &MultiPoly) -> bool {
        let ok = lhs == rhs;
        let detail = if ok {
            format!("{} terms", lhs.len())
        } else {
            let diff = lhs - rhs;
            format!("lhs - rhs has {} terms, e.g. {}", diff.len(), truncate(&diff.to_string(), 200))
        };
        self.push(name, ObligationKind::SymbolicIdentity, ok, detail, None);
        ok
    }

    fn check(&mut self, c: IdentityCheck) -> bool {
        let ok = c.holds;
        let detail = if ok { "holds".into() } else { format!("{} vs {}", truncate(&c.lhs, 200), truncate(&c.rhs, 200)) };
        self.push(&c.name, ObligationKind::SymbolicIdentity, ok, detail, None);
        ok
    }

    fn symbolic(&mut self, name: &str, ok: bool, detail: String) -> bool {
        self.push(name, ObligationKind::SymbolicIdentity, ok, detail, None);
        ok
    }

    fn sampled(&mut self, name: &str, ok: bool, detail: String) -> bool {
        self.push(name, ObligationKind::Sampled, ok, detail, None);
        ok
    }

    /// Certified positivity, cross-checked at random domain points.
    fn positive(&mut self, name: &str, p: &MultiPoly, dom: &DomainBox, strict: bool) -> bool {
        let res = positivity_check_with(p, dom, strict, &self.cfg.positivity);
        let (mut ok, mut detail, cert) = match &res {
            Ok(c) => (true, format!("certified by {}", c.method()), serde_json::to_value(c).ok()),
            Err(f) => {
                if f.witness.is_some() {
                    self.cert.witnesses.push(format!("{name}: {f}"));
                }
                (false, f.to_string(), serde_json::to_value(f).ok())
            }
        };
        if ok {
            if let Some(bad) = self.brute_force(p, dom, strict) {
                ok = false;
                detail = format!("certificate contradicted by sampling at {bad}");
            }
        }
        self.push(name, ObligationKind::Positivity, ok, detail, cert);
        ok
    }

    fn brute_force(&mut self, p: &MultiPoly, dom: &DomainBox, strict: bool) -> Option<String> {
        let vars: Vec<char> = p.vars().to_vec();
        let dom = DomainBox { vars: dom.vars.iter().filter(|(v, _)| vars.contains(v)).cloned().collect(), ..dom.clone() };
        for pt in dom.sample(&mut self.rng, self.cfg.samples) {
            let v = p.eval(&pt).ok()?;
            if v.is_negative() || (strict && v.is_zero()) {
                return Some(fmt_point(&pt));
            }
        }
        None
    }

    fn taylor(&mut self, name: &str, h: &MultiPoly, v: char, lambda: &Scalar, dom: &DomainBox, strict: bool) -> bool {
        match taylor_certify(h, v, lambda, dom, strict) {
            Ok(c) => {
                self.push(name, ObligationKind::Positivity, true, format!("degree {} in {v}", c.degree), serde_json::to_value(&c).ok());
                true
            }
            Err(f) => {
                self.cert.witnesses.push(format!("{name}: {f}"));
                self.push(name, ObligationKind::Positivity, false, f.to_string(), serde_json::to_value(&f).ok());
                false
            }
        }
    }

    /// Compares `H^(k)` with the displayed list and checks that later ones vanish.
    fn taylor_list(&mut self, label: &str, h: &MultiPoly, v: char, displayed: &[(u32, &str)]) -> bool {
        let mut all = true;
        for (k, s) in displayed {
            let got = taylor_at_one(h, v, *k);
            all &= self.identity(&format!("{label}^({k}) as displayed"), &got, &MultiPoly::p(s));
        }
        let last = displayed.iter().map(|(k, _)| *k).max().unwrap_or(0);
        let next = taylor_at_one(h, v, last + 1);
        all &= self.symbolic(
            &format!("{label}^(k) = 0 for k > {last}"),
            next.is_zero() && h.degree(v) <= last,
            format!("degree in {v} is {}", h.degree(v)),
        );
        all
    }

    fn discrepancy(&mut self, item: &str, displayed: &str, computed: &str, note: &str) {
        self.cert.discrepancies.push(Discrepancy {
            item: item.into(),
            displayed: displayed.into(),
            computed: computed.into(),
            note: note.into(),
        });
    }

    fn finish(mut self) -> LemmaCertificate {
        self.cert.passed = self.cert.obligations.iter().all(|o| o.passed);
        self.cert.elapsed_ms = self.start.elapsed().as_millis();
        self.cert
    }
}

fn truncate(s: &str, n: usize) -> String {
    if s.chars().count() <= n {
        s.to_string()
    } else {
        format!("{}…", s.chars().take(n).collect::<String>())
    }
}

fn fmt_point(pt: &[(char, Scalar)]) -> String {
    let parts: Vec<String> = pt.iter().map(|(v, x)| format!("{v}={}", scalar::fmt(x))).collect();
    format!("({})", parts.join(", "))
}

fn p(s: &str) -> MultiPoly {
    MultiPoly::p(s)
}

/// `(−1, 1)²` in `c, d` without the origin.
pub fn punctured_square() -> DomainBox {
    DomainBox::new()
        .with('c', Interval::open(int(-1), int(1)))
        .with('d', Interval::open(int(-1), int(1)))
        .puncture('c', 'd')
}

/// `h^n · p(g/h)` with `n = deg_v p`.
pub fn subst_fraction(poly: &MultiPoly, v: char, g: &MultiPoly, h: &MultiPoly) -> MultiPoly {
    let cs = poly.coeffs_in(v);
    let n = cs.len() - 1;
    cs.iter().enumerate().fold(MultiPoly::zero(), |acc, (k, c)| &acc + &(&(c * &g.pow(k as u32)) * &h.pow((n - k) as u32)))
}

/// `r(a, b)` of the resultant identity.
pub fn r_poly() -> MultiPoly {
    p("(a^6+1)(b^2+1)^2 + (a^5+a)(4b^4-8b^3-8b-4) + (a^4+a^2)(5b^4-4b^3+2b^2+4b+5) + a^3(4b^4-4)")
}

/// `P(b)` of the restriction identities.
pub fn p_poly() -> MultiPoly {
    p("32+48(b-1)+24(b-1)^2+56(b-1)^3+92(b-1)^4+52(b-1)^5+10(b-1)^6+2(b-1)^7+(b-1)^8")
}

// ---------------------------------------------------------------------------

/// `f_λ(c, d) > 0` on the punctured square for `|λ| ≤ 1`.
pub fn certify_specialp(lambda: &Scalar, cfg: &LemmaConfig) -> LemmaCertificate {
    let mut b = Builder::new("specialp", &format!("f_λ > 0 for λ = {}", scalar::fmt(lambda)), cfg);
    b.sampled("|λ| <= 1", lambda.abs() <= one(), format!("λ = {}", scalar::fmt(lambda)));
    let f = specialp(lambda, 'c', 'd');
    let lam = MultiPoly::constant(lambda.clone());
    let fu1 = f.subst_scalar('d', &one()).rename(&[('c', 'u')]);
    b.identity("f(u,1) = (1-u^2)(1-λu)", &fu1, &(&p("1-u^2") * &(&MultiPoly::one() - &(&lam * &p("u")))));
    let f1v = f.subst_scalar('c', &one()).rename(&[('d', 'v')]);
    b.identity("f(1,v) = (1-v^2)(1+λv)", &f1v, &(&p("1-v^2") * &(&MultiPoly::one() + &(&lam * &p("v")))));
    b.identity("f(c,d) = f(-d,c)", &duality::rotate_cd(&f), &f);
    let a = &p("c^2+d^2") - &f;
    b.symbolic(
        "A = (u^2+v^2) - f homogeneous of degree 4",
        !a.is_zero() && a == a.homogeneous_part(&['c', 'd'], 4),
        truncate(&a.to_string(), 120),
    );
    let unit = Interval::closed(Scalar::zero(), one());
    b.positive("f(u,1) >= 0 on [0,1]", &fu1, &DomainBox::new().with('u', unit.clone()), false);
    b.positive("f(1,v) >= 0 on [0,1]", &f1v, &DomainBox::new().with('v', unit), false);
    b.positive("f > 0 on (-1,1)^2 minus 0", &f, &punctured_square(), true);

    // dense grid avoiding the origin: odd numerators over n
    let n = cfg.grid as i64;
    let pts: Vec<(i64, i64)> = (0..n).flat_map(|i| (0..n).map(move |j| (2 * i + 1 - n, 2 * j + 1 - n))).collect();
    let worst = pts
        .par_iter()
        .filter(|(i, j)| *i != 0 || *j != 0)
        .map(|&(i, j)| {
            let pt = [('c', q(i, n)), ('d', q(j, n))];
            (f.eval(&pt).expect("assigned"), pt)
        })
        .min_by(|x, y| x.0.cmp(&y.0));
    if let Some((v, pt)) = worst {
        let ok = v.is_positive();
        if !ok {
            b.cert.witnesses.push(format!("grid minimum {} at {}", scalar::fmt(&v), fmt_point(&pt)));
        }
        b.sampled(
            &format!("grid of {} points", pts.len()),
            ok,
            format!("minimum {} at {}", scalar::fmt(&v), fmt_point(&pt)),
        );
    }
    b.finish()
}

/// Signs of `ψ` on the walls of `Θ`.
pub fn certify_wall(cfg: &LemmaConfig) -> LemmaCertificate {
    let mut b = Builder::new("wall", "psi < 0 on the left wall of S_b and > 0 on the right", cfg);
    let psi = cfg.psi();
    b.identity(
        "psi(0,b,c,d) = (1+b^2)^2(2c^2d^2-c^2-d^2)",
        &psi.subst_scalar('a', &Scalar::zero()),
        &p("(1+b^2)^2(2c^2d^2-c^2-d^2)"),
    );
    b.positive("c^2+d^2-2c^2d^2 > 0", &p("c^2+d^2-2c^2d^2"), &punctured_square(), true);

    let g = p("1+2b-b^2");
    let h = p("1+b^2");
    let num = subst_fraction(&psi, 'a', &g, &h);
    let scale = p("-4b(b^2-1)(1+b^2)^2");
    let mu = num.exact_div(&scale);
    b.symbolic(
        "(1+b^2)^4 psi((1+2b-b^2)/(1+b^2)) = -4b(b^2-1)(1+b^2)^2 mu",
        mu.as_ref().is_some_and(|m| (m * &scale) == num),
        "mu is a polynomial".into(),
    );
    let Some(mu) = mu else { return b.finish() };
    b.taylor_list(
        "mu",
        &mu,
        'b',
        &[
            (0, "8c^2+8d^2-16c^2d^2"),
            (1, "12c^2+12d^2-24c^2d^2-4c^3d+4cd^3"),
            (2, "12c^2+12d^2-24c^2d^2-4c^3d+4cd^3"),
            (3, "12c^2+12d^2-24c^2d^2+12c^3d-12cd^3"),
            (4, "24c^2+24d^2-48c^2d^2+24c^3d-24cd^3"),
        ],
    );
    for k in 0..=4 {
        let mk = taylor_at_one(&mu, 'b', k);
        b.positive(&format!("mu^({k}) > 0 on (-1,1)^2 minus 0"), &mk, &punctured_square(), true);
    }
    b.taylor("mu > 0 for b >= 1", &mu, 'b', &Scalar::zero(), &punctured_square(), true);
    b.positive("4b(b^2-1) > 0 for b > 1", &p("4b(b^2-1)"), &DomainBox::new().with('b', Interval::open_ray(one())), true);
    let inv = duality::inverse_symmetry_check();
    b.symbolic(
        "a^k psi(1/a,b,d,c) = -psi(a,b,c,d)",
        inv.inverse_symmetry,
        format!("k = {}", inv.a_power),
    );

    let mut bad = vec![];
    for _ in 0..cfg.random_points {
        let (bb, c, d) = random_bcd(&mut b.rng, false);
        match duality::wall_signs(&bb, &c, &d) {
            Ok((-1, 1)) => {}
            other => bad.push(format!("{} -> {other:?}", fmt_point(&[('b', bb), ('c', c), ('d', d)]))),
        }
    }
    b.sampled(
        &format!("wall signs (-,+) at {} random (b,c,d)", cfg.random_points),
        bad.is_empty(),
        if bad.is_empty() { "all (-,+)".into() } else { bad.join("; ") },
    );
    b.finish()
}

/// Random `(b, c, d)` with `b ∈ (1, 5)` and `(c, d) ≠ 0`, optionally `0 ≤ c ≤ d`.
pub fn random_bcd(rng: &mut impl Rng, ordered: bool) -> (Scalar, Scalar, Scalar) {
    let b = int(1) + q(rng.gen_range(1..400), 100);
    loop {
        let mut c = q(rng.gen_range(-99..=99), 100);
        let mut d = q(rng.gen_range(-99..=99), 100);
        if ordered {
            c = c.abs();
            d = d.abs();
            if c > d {
                std::mem::swap(&mut c, &mut d);
            }
        }
        if !(c.is_zero() && d.is_zero()) {
            return (b, c, d);
        }
    }
}

/// `ψ(·, b, c, d)` has exactly one zero in `S_b`.
pub fn certify_zero(cfg: &LemmaConfig) -> LemmaCertificate {
    let mut b = Builder::new("zero", "psi vanishes exactly once in S_b", cfg);
    let psi = cfg.psi();
    let r = r_poly();
    match resultant(&psi, &psi.deriv('a'), 'c') {
        Ok(res) => {
            b.identity("res_c(psi, dpsi/da) = 4(b^4-1)^3(d^2-1)^2 d^9 r^3", &res, &(&p("4(b^4-1)^3(d^2-1)^2d^9") * &r.pow(3)));
        }
        Err(e) => {
            b.symbolic("res_c(psi, dpsi/da) = 4(b^4-1)^3(d^2-1)^2 d^9 r^3", false, e.to_string());
        }
    }
    let (rev, _) = duality::reverse_in(&r, 'a');
    b.identity("a^6 r(1/a, b) = r(a, b)", &rev, &r);

    let g = p("1+2b-b^2");
    let h = p("1+b^2");
    let pb = p_poly();
    let core = &p("8b(b^2-1)") * &pb;
    let on_alpha = subst_fraction(&r, 'a', &g, &h);
    b.identity("(1+b^2)^6 r|alpha = 8b(b^2-1)P(b)(1+b^2)^2", &on_alpha, &(&core * &h.pow(2)));
    let on_beta = subst_fraction(&r, 'a', &h, &g);
    b.identity("(b^2-2b-1)^6 r|beta = 8b(b^2-1)P(b)(1+b^2)^2", &on_beta, &(&core * &h.pow(2)));
    let displayed_off = on_beta != core && on_beta == &core * &h.pow(2);
    b.symbolic("displayed r|beta differs by exactly (1+b^2)^2", displayed_off, "see discrepancies".into());
    b.discrepancy(
        "r restricted to beta",
        "8b(b^2-1)P(b)/(b^2-2b-1)^6",
        "8b(b^2-1)P(b)(1+b^2)^2/(b^2-2b-1)^6",
        "the displayed form omits the factor (1+b^2)^2; positivity is unaffected",
    );
    b.positive("P(b) - 32 >= 0 on b >= 1", &(&pb - &MultiPoly::int(32)), &DomainBox::new().with('b', Interval::ray(one())), false);
    b.positive("8b(b^2-1) > 0 on b > 1", &p("8b(b^2-1)"), &DomainBox::new().with('b', Interval::open_ray(one())), true);
    b.taylor_list(
        "r",
        &r,
        'b',
        &[
            (1, "(8-16a+16a^2)+16a^3+8a^4(2-2a+a^2)"),
            (2, "16(1+a^6)+40(a^2+a^4)+48a^3"),
            (3, "24(1+a^6)+48(a+a^5)+96(a^2+a^4)+96a^3"),
            (4, "24(1+a^6)+96(a+a^5)+120(a^2+a^4)+96a^3"),
        ],
    );
    let pos_a = DomainBox::new().with('a', Interval::open_ray(Scalar::zero()));
    b.taylor("dr/db > 0 on (0,inf) x (1,inf)", &r.deriv('b'), 'b', &Scalar::zero(), &pos_a, true);
    let r11 = r.eval(&[('a', one()), ('b', one())]).expect("assigned");
    b.sampled("boundary value r(1,1)", true, format!("r(1,1) = {}", scalar::fmt(&r11)));

    let mut bad = vec![];
    for _ in 0..cfg.random_points {
        let (bb, c, d) = random_bcd(&mut b.rng, false);
        match duality::solve_duality_a(&bb, &c, &d, &cfg.tol) {
            Ok(br) if br.sturm_count == Some(1) && br.width() <= cfg.tol => {}
            other => bad.push(format!("{} -> {:?}", fmt_point(&[('b', bb), ('c', c), ('d', d)]), other.map(|x| x.sturm_count))),
        }
    }
    b.sampled(
        &format!("Sturm count 1 at {} random (b,c,d)", cfg.random_points),
        bad.is_empty(),
        if bad.is_empty() { "all unique".into() } else { bad.join("; ") },
    );
    b.finish()
}

/// `γ_{c,d} ⊂ [1, 2] × [1, ∞)` for `0 ≤ c ≤ d`.
pub fn certify_bound1(cfg: &LemmaConfig) -> LemmaCertificate {
    let mut b = Builder::new("bound1", "the duality curve lies in [1,2] x [1,inf) for 0 <= c <= d", cfg);
    let psi = cfg.psi();
    let psi1 = psi.subst_scalar('a', &one());
    b.identity("psi(1,b,c,d) = 4b(b-1)^2(b+1)cd(c^2-d^2)", &psi1, &p("4b(b-1)^2(b+1)cd(c^2-d^2)"));
    let psi2 = psi.subst_scalar('a', &int(2));
    let computed = p(
        "16b(b^2-1)cd(d^2-c^2) + (9c^2+9d^2-18c^2d^2+2cd^3-2c^3d) \
         + (30c^2+30d^2-60c^2d^2+16cd^3-16c^3d)b^2 + (21c^2+21d^2-42c^2d^2-(18cd^3-18c^3d))b^4",
    );
    let displayed = p(
        "16b^2(b-1)cd(d^2-c^2) + (9c^2+9d^2-18c^2d^2+(2cd^3-2c^3d)) \
         + (30c^2+30d^2-60c^2d^2+(16cd^3-16c^3d))b^2 + (21c^2+21d^2-42c^2d^2-(18cd^3+18c^3d))b^4",
    );
    b.identity("psi(2,b,c,d) expansion in b", &psi2, &computed);
    for (k, bracket) in [
        (0, "9c^2+9d^2-18c^2d^2+2cd^3-2c^3d"),
        (2, "30c^2+30d^2-60c^2d^2+16cd^3-16c^3d"),
    ] {
        b.identity(&format!("psi(2,b,c,d) b^{k} bracket as displayed"), &psi2.coeff('b', k), &p(bracket));
    }
    if psi2 != displayed {
        b.discrepancy(
            "psi(2,b,c,d), odd part",
            "16b^2(b-1)cd(d^2-c^2)",
            "16b(b^2-1)cd(d^2-c^2)",
            "both are >= 0 for b >= 1 and 0 <= c <= d",
        );
        b.discrepancy(
            "psi(2,b,c,d), b^4 coefficient",
            "21c^2+21d^2-42c^2d^2-(18cd^3+18c^3d)",
            "21c^2+21d^2-42c^2d^2-(18cd^3-18c^3d)",
            "the computed coefficient is 21 f_{6/7}",
        );
    }
    let ordered = DomainBox::new().with('c', Interval::closed_open(Scalar::zero(), one())).with('e', Interval::closed_open(Scalar::zero(), one()));
    let ray = DomainBox::new().with('b', Interval::ray(one()));
    // d = c + e
    let cd_odd = p("cd(d^2-c^2)").subst('d', &p("c+e"));
    b.positive("cd(d^2-c^2) >= 0 for 0 <= c <= d (d = c+e)", &cd_odd, &ordered, false);
    b.positive("4b(b-1)^2(b+1) >= 0 on b >= 1", &p("4b(b-1)^2(b+1)"), &ray, false);
    b.positive("16b(b^2-1) >= 0 on b >= 1", &p("16b(b^2-1)"), &ray, false);
    for (k, coeff) in [(0, "9"), (2, "30"), (4, "21")] {
        let ck = psi2.coeff('b', k);
        b.positive(&format!("b^{k} coefficient ({coeff} f_λ) > 0"), &ck, &punctured_square(), true);
    }
    let v = psi.eval(&[('a', int(2)), ('b', int(2)), ('c', q(1, 4)), ('d', q(1, 2))]).expect("assigned");
    b.sampled("psi(2,2,1/4,1/2) > 0", v.is_positive(), scalar::fmt(&v));

    let mut bad = vec![];
    for k in 0..30 {
        let (bb, c, d) = random_bcd(&mut b.rng, true);
        let (c, d, lo, hi) = if k % 2 == 0 { (c, d, one(), int(2)) } else { (d, c, q(1, 2), one()) };
        match duality::trace_curve(&c, &d, std::slice::from_ref(&bb), &cfg.tol) {
            Ok(curve) => {
                for pt in curve {
                    if pt.bracket.lo < lo || pt.bracket.hi > hi {
                        bad.push(format!("{} -> [{}, {}]", fmt_point(&[('b', pt.b.clone()), ('c', c.clone()), ('d', d.clone())]), scalar::fmt(&pt.bracket.lo), scalar::fmt(&pt.bracket.hi)));
                    }
                }
            }
            Err(e) => bad.push(e.to_string()),
        }
    }
    b.sampled(
        "roots in [1,2] for 0<=c<=d and in [1/2,1] for 0<=d<=c (30 random)",
        bad.is_empty(),
        if bad.is_empty() { "all inside".into() } else { bad.join("; ") },
    );
    b.finish()
}

/// Trace numerator pieces for the properness cases.
pub struct ProperData {
    /// Numerator of `tr(r₁r₂ₘ)` over `4a²b²(1−c²)(1−d²)`.
    pub trace_num: MultiPoly,
    /// `Y` with `tr(r₁r₂ₘ²)` numerator `= −(1−d²)Y`.
    pub y: Option<MultiPoly>,
    /// Numerator matrix of `r₁r₂ₘ²`.
    pub m2: PolyMat3,
}

pub fn properness_data() -> ProperData {
    let r1 = boxes::r1_numerator_symbolic();
    let r2 = boxes::r2_symbolic();
    let s = morph::sigma_scaled_symbolic();
    let si = morph::sigma_inverse_scaled_symbolic();
    let trace_num = duality::product_numerator_symbolic().trace();
    let m2 = &(&(&r1 * &si) * &(&r2 * &r2)) * &s;
    let y = (-&m2.trace()).exact_div(&p("1-d^2"));
    ProperData { trace_num, y, m2 }
}

/// Traces blow up as parameters leave every compact set.
pub fn certify_properness(cfg: &LemmaConfig) -> LemmaCertificate {
    let mut b = Builder::new("properness", "trace invariants diverge at the boundary (Cases 1-3)", cfg);
    let data = properness_data();
    let a12 = || {
        DomainBox::new()
            .with('a', Interval::closed(one(), int(2)))
            .with('c', Interval::closed_open(Scalar::zero(), one()))
            .with('d', Interval::closed_open(Scalar::zero(), one()))
    };

    // Case 1
    let u = p("a^2(1-c^2)+(1+a)(1-cd)");
    let v = p("(1+a)(1+cd)+a^2(1-d^2)");
    let uv = &u * &v;
    b.identity("Case 1: b^4 coefficient of the tr(r1 r2m) numerator = -UV", &data.trace_num.coeff('b', 4), &-&uv);
    let w = &data.trace_num + &(&uv * &p("b^4"));
    b.symbolic("Case 1: W has b-degree <= 3", w.degree('b') <= 3, format!("deg_b W = {}", w.degree('b')));
    b.positive("Case 1: U - a^2(1-c^2) > 0", &(&u - &p("a^2(1-c^2)")), &a12(), true);
    b.positive("Case 1: V - 2 > 0", &(&v - &MultiPoly::int(2)), &a12(), true);
    b.positive("Case 1: U > 0", &u, &a12(), true);

    // Case 2
    let Some(y) = data.y.clone() else {
        b.symbolic("Case 2: tr numerator of r1 r2m^2 divisible by (1-d^2)", false, String::new());
        return b.finish();
    };
    b.symbolic("Case 2: tr numerator of r1 r2m^2 = -(1-d^2) Y", true, format!("Y has {} terms", y.len()));
    b.identity(
        "Case 2: det numerator of r1 r2m^2 = -64a^6b^6(1-c^2)^4(1-d^2)^5",
        &data.m2.det(),
        &p("-64a^6b^6(1-c^2)^4(1-d^2)^5"),
    );
    b.symbolic(
        "Case 2: tau(r1 r2m^2) = Y^3/(64a^6b^6(1-c^2)^4(1-d^2)^2)",
        true,
        "follows from the two identities above".into(),
    );
    let y_d1 = y.subst_scalar('d', &one());
    let z = y_d1.exact_div(&p("1-c^2"));
    b.symbolic("Case 2: Y(a,b,c,1) = (1-c^2) Z", z.is_some(), String::new());
    if let Some(z) = z {
        b.taylor_list(
            "Z",
            &z,
            'b',
            &[
                (0, "4(1+2a^2+a^4)+4c(a-1)+4a^3c(a-1)"),
                (1, "8(1-c)+8a+24a^2+8a^3+8a^4+4ac+4a^3c(2a-1)"),
                (2, "16+24a+8a^2(8-c^2)+24a^3+16a^4+16c(a^4-1)"),
                (3, "24+48a+24a^2(4-c^2)+48a^3+24a^4+24c(a^4-1)+12ac(a^2-1)"),
                (4, "24+48a+24a^2(3-c^2)+48a^3+24a^4+24c(a^4-1)+24ac(a^2-1)"),
            ],
        );
        let dom = DomainBox::new()
            .with('a', Interval::closed(one(), int(2)))
            .with('c', Interval::closed_open(Scalar::zero(), one()));
        b.positive("Case 2: Z^(0) >= 16", &(&taylor_at_one(&z, 'b', 0) - &MultiPoly::int(16)), &dom, false);
        b.taylor("Case 2: Z >= 16 for b >= 1", &z, 'b', &int(16), &dom, false);
    }

    // Case 3
    let at11 = |m: &MultiPoly| m.subst_many(&[('c', one()), ('d', one())]);
    b.identity("Case 3: Y(a,b,1,1) = 0", &at11(&y), &MultiPoly::zero());
    let u3 = -&at11(&y.deriv('c'));
    let v3 = -&at11(&y.deriv('d'));
    let lin = y.subst('c', &p("1-x")).subst('d', &p("1-y"));
    b.identity(
        "Case 3: linear part of Y at (1,1) is U(1-c) + V(1-d)",
        &lin.homogeneous_part(&['x', 'y'], 1),
        &(&(&u3 * &p("x")) + &(&v3 * &p("y"))),
    );
    let wp = &u3 + &v3;
    let wm = &u3 - &v3;
    b.taylor_list(
        "W+",
        &wp,
        'b',
        &[
            (0, "32a^2-16a^3+16a^4"),
            (1, "16a+64a^2+32a^4"),
            (2, "48a+128a^2+48a^3+64a^4"),
            (3, "96a+192a^2+144a^3+96a^4"),
            (4, "96a+192a^2+192a^3+96a^4"),
        ],
    );
    b.taylor_list(
        "W-",
        &wm,
        'b',
        &[
            (0, "16a+16a^4"),
            (1, "32a+32a^2+16a^3+32a^4"),
            (2, "48a+96a^2+48a^3+64a^4"),
            (3, "48a+96a^2+96a^3+96a^4"),
            (4, "96a^3+96a^4"),
        ],
    );
    let dom_a = DomainBox::new().with('a', Interval::closed(one(), int(2)));
    b.taylor("Case 3: W+ >= 32 on [1,2] x [1,inf)", &wp, 'b', &int(32), &dom_a, false);
    b.taylor("Case 3: W- >= 32 on [1,2] x [1,inf)", &wm, 'b', &int(32), &dom_a, false);
    b.finish()
}

/// Expansion of `ψ(1+t, b, c, d)` for small `(c, d)`.
pub fn certify_small_cd(cfg: &LemmaConfig) -> LemmaCertificate {
    let mut b = Builder::new("small_cd", "psi(1+t,b,c,d) near (c,d) = 0", cfg);
    let psi = cfg.psi();
    let shifted = psi.subst('a', &p("1+t"));
    let cs = shifted.coeffs_in('t');
    let t0 = cs[0].clone();
    b.identity("t^0 coefficient = 4b(b+1)(b-1)^2cd(c^2-d^2)", &t0, &p("4b(b+1)(b-1)^2cd(c^2-d^2)"));
    b.identity("t^0 coefficient vanishes at c = d", &t0.subst('d', &p("c")), &MultiPoly::zero());
    let t1 = cs.get(1).cloned().unwrap_or_else(MultiPoly::zero);
    let quad = t1.homogeneous_part(&['c', 'd'], 2);
    let expected = p("2(b^2+1)(3b^2+1)(c^2+d^2)");
    b.identity("t^1 coefficient, (c,d)-degree 2 part", &quad, &expected);
    let rest = &t1 - &quad;
    b.symbolic(
        "t^1 coefficient, remaining terms have (c,d)-degree >= 4",
        rest.min_degree_in(&['c', 'd']).is_none_or(|k| k >= 4),
        format!("min degree {:?}", rest.min_degree_in(&['c', 'd'])),
    );
    b.positive("2(b^2+1)(3b^2+1) > 0 on b >= 1", &p("2(b^2+1)(3b^2+1)"), &DomainBox::new().with('b', Interval::ray(one())), true);
    let mut ok = true;
    let mut degs = vec![];
    for (k, ck) in cs.iter().enumerate().skip(2) {
        let m = ck.min_degree_in(&['c', 'd']);
        degs.push(format!("t^{k}: {m:?}"));
        ok &= m.is_none_or(|m| m >= 2);
    }
    b.symbolic("t^k coefficients (k >= 2) have (c,d)-degree >= 2", ok, degs.join(", "));
    if quad != p("2(c^2+d^2)") {
        b.discrepancy(
            "t coefficient of psi(1+t,b,c,d)",
            "2(c^2+d^2) + E_1",
            "2(b^2+1)(3b^2+1)(c^2+d^2) + E_1",
            "a positive multiple of c^2+d^2 for b >= 1, which is all the convergence argument needs",
        );
    }
    b.finish()
}

/// Duality-curve invariants: `ψ` by two derivations, symmetries, the
/// Jacobian, root isolation samples, convergence and the polarity gate.
pub fn certify_duality(cfg: &LemmaConfig) -> LemmaCertificate {
    let mut b = Builder::new("duality", "the duality polynomial and its curves", cfg);
    let psi = cfg.psi();
    match duality::build_psi(PsiMethod::Traces) {
        Ok(m3) => {
            b.identity("method 3 (traces) = psi", &m3.numerator, &psi);
        }
        Err(e) => {
            b.symbolic("method 3 (traces) = psi", false, e.to_string());
        }
    }
    match duality::build_psi(PsiMethod::Determinant) {
        Ok(m1) => {
            let cof = m1.numerator.exact_div(&psi);
            b.symbolic(
                "method 1 (determinant) is divisible by psi",
                cof.is_some(),
                cof.as_ref().map(|c| format!("cofactor {c}")).unwrap_or_default(),
            );
            if let Some(cof) = cof {
                let dom = DomainBox::new()
                    .with('a', Interval::open_ray(Scalar::zero()))
                    .with('b', Interval::ray(one()))
                    .with('c', Interval::open(int(-1), int(1)))
                    .with('d', Interval::open(int(-1), int(1)));
                // the cofactor is ± a product of squares times a⁴b⁴
                let sign = if cof.eval(&[('a', one()), ('b', one()), ('c', Scalar::zero()), ('d', Scalar::zero())]).map(|v| v.is_negative()).unwrap_or(false) {
                    -&cof
                } else {
                    cof
                };
                b.positive("method 1 cofactor does not vanish", &sign, &dom, true);
            }
        }
        Err(e) => {
            b.symbolic("method 1 (determinant) is divisible by psi", false, e.to_string());
        }
    }
    let inv = duality::inverse_symmetry_check();
    b.symbolic("inverse symmetry", inv.inverse_symmetry, format!("a power {}", inv.a_power));
    b.symbolic("psi o theta4 = psi", duality::rotate_cd(&psi) == psi, String::new());
    b.symbolic("psi(1,b,c,c) = 0", inv.fixed_locus, String::new());
    let j = duality::jacobian_check();
    b.check(j.identity.clone());
    b.symbolic(
        "Jacobian factors c^2+d^2-2c^2d^2 > 0 and 2-c^2-d^2 > 0",
        j.first_factor.is_some() && j.second_factor.is_some(),
        String::new(),
    );

    let r = convergence_check(&cfg.tol);
    b.sampled("convergence of gamma_{c,d} as (c,d) -> 0", r.passed, r.detail);
    let pg = polarity_gate(cfg, &mut b.rng.clone());
    b.sampled("polarity exists exactly on the duality curve", pg.passed, pg.detail);
    b.finish()
}

/// Outcome of a sampled check.
#[derive(Clone, Debug, Serialize)]
pub struct SampleReport {
    pub passed: bool,
    pub detail: String,
    pub values: Vec<f64>,
}

/// `max |a − 1|` along `γ_{c,d}` with `(c, d) = ε(3/5, 4/5)`, `b ∈ (1, 5]`;
/// each decade of `ε` must shrink it by at least 5.
pub fn convergence_check(tol: &Scalar) -> SampleReport {
    let grid: Vec<Scalar> = (1..=8).map(|k| int(1) + q(k, 2)).collect();
    let cd: Vec<(Scalar, Scalar)> = [10, 100, 1000].iter().map(|&n| (q(3, 5 * n), q(4, 5 * n))).collect();
    match duality::max_deviation_from_one(&cd, &grid, tol) {
        Ok(devs) => {
            let passed = devs.windows(2).all(|w| w[1] * 5.0 <= w[0]) && devs.iter().all(|d| d.is_finite());
            SampleReport { passed, detail: format!("max |a-1| = {devs:?}"), values: devs }
        }
        Err(e) => SampleReport { passed: false, detail: e.to_string(), values: vec![] },
    }
}

/// On-curve samples admit a definite polarity; off-curve ones do not and
/// have `det(r₁r₂ₘ − I) ≠ 0`.
pub fn polarity_gate(cfg: &LemmaConfig, rng: &mut impl Rng) -> SampleReport {
    let mut problems = vec![];
    let mut count = 0;
    let mut cases: Vec<(Scalar, Scalar, Scalar)> = vec![(int(2), q(1, 3), q(1, 3)), (int(3), q(-1, 2), q(-1, 2))];
    for _ in 0..6 {
        cases.push(random_bcd(rng, false));
    }
    for (bb, c, d) in cases {
        count += 1;
        let br = match duality::solve_duality_a(&bb, &c, &d, &cfg.tol) {
            Ok(br) => br,
            Err(e) => {
                problems.push(e.to_string());
                continue;
            }
        };
        let on = br.midpoint();
        let label = fmt_point(&[('b', bb.clone()), ('c', c.clone()), ('d', d.clone())]);
        let params = FullParams::new(on.clone(), bb.clone(), c.clone(), d.clone());
        match params.and_then(|p| morph::morphed_generators(&p)).and_then(|(r1, r2m)| duality::solve_polarity(&r1, &r2m, 1e-10)) {
            Ok(pol) if br.contains(&on) => {
                if br.is_exact() && pol.exact.is_none() {
                    problems.push(format!("{label}: rational root but no exact polarity"));
                }
            }
            Ok(_) => problems.push(format!("{label}: bracket lost")),
            Err(e) => problems.push(format!("{label}: on-curve {e}")),
        }
        let seg = duality::segment_sb(&bb).expect("b > 1");
        let off = &on + q(1, 10);
        if !seg.contains(&off) {
            continue;
        }
        let p = FullParams::new(off, bb.clone(), c.clone(), d.clone()).expect("in range");
        let (r1, r2m) = morph::morphed_generators(&p).expect("in range");
        match duality::solve_polarity(&r1, &r2m, 1e-10) {
            Err(Error::NoPolarity(_)) => {}
            other => problems.push(format!("{label}: off-curve gave {:?}", other.map(|x| x.residual))),
        }
        if duality::det_minus_identity(&p).map(|v| v.is_zero()).unwrap_or(true) {
            problems.push(format!("{label}: det(r1 r2m - I) = 0 off the curve"));
        }
    }
    SampleReport {
        passed: problems.is_empty(),
        detail: if problems.is_empty() { format!("{count} parameter points") } else { problems.join("; ") },
        values: vec![],
    }
}

/// Generator and trace identities, the box relations and the action of the Pappus operations.
pub fn certify_traces(cfg: &LemmaConfig) -> LemmaCertificate {
    let mut b = Builder::new("traces", "Pappus generators, trace identities and box relations", cfg);
    match boxes::symbolic_identities() {
        Ok(checks) => {
            for c in checks {
                b.check(c);
            }
        }
        Err(e) => {
            b.symbolic("generator identities", false, e.to_string());
        }
    }
    let grid: Vec<PappusParams> = (-4..=4)
        .flat_map(|i| (-4..=4).map(move |j| PappusParams::q((i, 5), (j, 5))))
        .collect();
    let bad: Vec<String> = grid
        .par_iter()
        .filter(|p| !boxes::op_action_check(p).unwrap_or(false) || !boxes::trace_identities(p).map(|t| t.matches_closed_forms).unwrap_or(false))
        .map(|p| format!("({}, {})", scalar::fmt(&p.c), scalar::fmt(&p.d)))
        .collect();
    b.sampled("action and trace identities on the 9x9 grid", bad.is_empty(), if bad.is_empty() { "81 points".into() } else { bad.join(" ") });
    let rel = relation_check(100, &mut b.rng);
    b.sampled("relations and nesting on 100 random boxes", rel.passed, rel.detail);
    let mut theta_ok = true;
    for p in &grid {
        let c = boxes::theta4_canonical(p);
        theta_ok &= boxes::theta4_canonical(&c) == c;
        theta_ok &= boxes::theta4_orbit(p).iter().all(|o| boxes::theta4_canonical(o) == c);
    }
    b.sampled("theta4 canonical form is idempotent and orbit-constant", theta_ok, String::new());
    b.finish()
}

/// The five relations, nesting and the doppelganger on random boxes.
pub fn relation_check(n: usize, rng: &mut impl Rng) -> SampleReport {
    let boxes_: Vec<_> = (0..n).map(|_| boxes::random_box(rng)).collect();
    let fails: Vec<String> = boxes_
        .par_iter()
        .enumerate()
        .filter_map(|(k, m)| {
            let t = boxes::op_t(m).ok()?;
            let bm = boxes::op_b(m).ok()?;
            let eq = |w: &str, target: &boxes::MarkedBox| boxes::apply_word(w, m).map(|x| x.box_eq(target)).unwrap_or(false);
            let mut bad = vec![];
            for (w, target, name) in [("ii", m, "i^2 = I"), ("tit", &bm, "tit = b"), ("bib", &t, "bib = t"), ("ibit", m, "tibi = I"), ("itib", m, "biti = I")] {
                if !eq(w, target) {
                    bad.push(name);
                }
            }
            let reg = m.region().ok()?;
            let (rt, rb) = (t.region().ok()?, bm.region().ok()?);
            if !(reg.weakly_contains(&rt) && reg.weakly_contains(&rb) && rt.interiors_disjoint(&rb)) {
                bad.push("nesting");
            }
            let dual = boxes::doppelganger(m).ok()?;
            let dd = boxes::doppelganger(&dual).ok()?;
            let commutes = boxes::doppelganger(&t).ok()?.box_eq(&boxes::op_t(&dual).ok()?);
            if !dd.box_eq(m) || !commutes {
                bad.push("doppelganger");
            }
            (!bad.is_empty()).then(|| format!("box {k}: {}", bad.join(", ")))
        })
        .collect();
    SampleReport { passed: fails.is_empty(), detail: if fails.is_empty() { format!("{n} boxes") } else { fails.join("; ") }, values: vec![] }
}

/// `Θ`: closed form against geometry, image vertices, orbit nesting.
pub fn certify_theta(cfg: &LemmaConfig) -> LemmaCertificate {
    let mut b = Builder::new("theta", "the good region and nesting of morphed orbits", cfg);
    for c in morph::image_vertex_identities() {
        b.check(c);
    }
    let g = theta_grid_agreement();
    b.sampled("closed form and geometric test agree on the 40x40 grid", g.passed, g.detail);
    let o = orbit_nesting(cfg, &mut b.rng.clone());
    b.sampled(
        &format!("depth-{} orbits nest at {} random parameters", cfg.orbit_depth, cfg.orbit_params),
        o.passed,
        o.detail,
    );
    let bad = FullParams::new(int(6), int(2), Scalar::zero(), Scalar::zero()).expect("in range");
    b.sampled(
        "orbit outside theta is refused",
        matches!(morph::generate_orbit(&bad, 2, morph::DEFAULT_MAX_DEPTH), Err(Error::NotInTheta(_))),
        "(a,b) = (6,2)".into(),
    );
    b.finish()
}

/// `(a, b) = (6i/40, 1 + 5j/40)`.
pub fn theta_grid_agreement() -> SampleReport {
    let pts: Vec<(i64, i64)> = (1..=40).flat_map(|i| (1..=40).map(move |j| (i, j))).collect();
    let bad: Vec<String> = pts
        .par_iter()
        .filter_map(|&(i, j)| {
            let l = MorphParams::new(q(6 * i, 40), int(1) + q(5 * j, 40)).ok()?;
            (morph::theta_contains_closed(&l) != morph::theta_contains_geometric(&l))
                .then(|| format!("({}, {})", scalar::fmt(&l.a), scalar::fmt(&l.b)))
        })
        .collect();
    SampleReport { passed: bad.is_empty(), detail: if bad.is_empty() { "1600 points".into() } else { bad.join(" ") }, values: vec![] }
}

pub fn orbit_nesting(cfg: &LemmaConfig, rng: &mut impl Rng) -> SampleReport {
    let params: Vec<FullParams> = (0..cfg.orbit_params).map(|_| morph::random_theta_params(rng)).collect();
    let bad: Vec<String> = params
        .par_iter()
        .filter_map(|p| {
            let label = fmt_point(&p.vals());
            match morph::generate_orbit(p, cfg.orbit_depth, morph::DEFAULT_MAX_DEPTH).and_then(|o| morph::nesting_report(&o)) {
                Ok(r) if r.passes() => None,
                Ok(r) => Some(format!("{label}: {:?}", r.first_failure)),
                Err(e) => Some(format!("{label}: {e}")),
            }
        })
        .collect();
    SampleReport {
        passed: bad.is_empty(),
        detail: if bad.is_empty() { format!("{} parameter points", params.len()) } else { bad.join("; ") },
        values: vec![],
    }
}

// ---------------------------------------------------------------------------

pub type Certifier = fn(&LemmaConfig) -> LemmaCertificate;

fn specialp_default(cfg: &LemmaConfig) -> LemmaCertificate {
    certify_specialp(&Scalar::one(), cfg)
}

/// All certifiers by id.
pub fn registry() -> Vec<(&'static str, Certifier)> {
    vec![
        ("specialp", specialp_default as Certifier),
        ("wall", certify_wall),
        ("zero", certify_zero),
        ("bound1", certify_bound1),
        ("properness", certify_properness),
        ("small_cd", certify_small_cd),
        ("duality", certify_duality),
        ("traces", certify_traces),
        ("theta", certify_theta),
    ]
}

pub fn lemma_ids() -> Vec<&'static str> {
    registry().into_iter().map(|(id, _)| id).collect()
}

/// Runs the given certifiers concurrently, preserving order.
pub fn run_registry(reg: &[(&'static str, Certifier)], cfg: &LemmaConfig) -> Vec<LemmaCertificate> {
    reg.par_iter().map(|(_, f)| f(cfg)).collect()
}

pub fn run_all(cfg: &LemmaConfig) -> Vec<LemmaCertificate> {
    run_registry(&registry(), cfg)
}

/// Runs one certifier by id. The specialp certifier covers `λ ∈ {0, ±1, −1/3, 6/7}`.
pub fn run_only(id: &str, cfg: &LemmaConfig) -> Option<LemmaCertificate> {
    registry().into_iter().find(|(k, _)| *k == id).map(|(_, f)| f(cfg))
}

/// `ψ` with one coefficient changed.
pub fn corrupted_psi() -> MultiPoly {
    &duality::psi_closed_form() + &p("a^2b^2c^2")
}

/// One-line summary table.
pub fn summary_table(certs: &[LemmaCertificate]) -> String {
    let mut out = format!("{:<12} {:<6} {:>5} {:>5} {:>6} {:>9}\n", "lemma", "status", "obl", "fail", "notes", "ms");
    for c in certs {
        out.push_str(&format!(
            "{:<12} {:<6} {:>5} {:>5} {:>6} {:>9}\n",
            c.id,
            if c.passed { "pass" } else { "FAIL" },
            c.obligations.len(),
            c.failures().count(),
            c.discrepancies.len(),
            c.elapsed_ms
        ));
    }
    out
}
