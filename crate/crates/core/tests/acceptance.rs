//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::process::ExitCode;
use std::time::Instant;

use num_traits::Signed;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use pappus_core::boxes::{self, PappusParams};
use pappus_core::duality::{self, PsiMethod};
use pappus_core::error::Error;
use pappus_core::lemmas::{self, LemmaCertificate, LemmaConfig};
use pappus_core::morph::{self, FullParams};
use pappus_core::poly::{resultant, MultiPoly};
use pappus_core::scalar::{self, int, one, pow2_neg, zero};

type Outcome = (bool, String);
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn p(s: &str) -> MultiPoly {
    MultiPoly::p(s)
}

fn obligations(cert: &LemmaCertificate, pick: impl Fn(&str) -> bool) -> Outcome {
    let chosen: Vec<_> = cert.obligations.iter().filter(|o| pick(&o.name)).collect();
    let failed: Vec<String> = chosen.iter().filter(|o| !o.passed).map(|o| format!("{}: {}", o.name, o.detail)).collect();
    (failed.is_empty() && !chosen.is_empty(), if failed.is_empty() { format!("{} checks", chosen.len()) } else { failed.join("; ") })
}

fn psi_consistency() -> Outcome {
    let psi = duality::psi_closed_form();
    let m3 = duality::build_psi(PsiMethod::Traces).map(|b| b.numerator == psi).unwrap_or(false);
    let m1 = duality::build_psi(PsiMethod::Determinant).ok().and_then(|b| b.numerator.exact_div(&psi));
    (m3 && m1.is_some(), format!("method 3 equal: {m3}, method 1 cofactor: {}", m1.map(|c| c.to_string()).unwrap_or("none".into())))
}

fn resultant_identity() -> Outcome {
    let psi = duality::psi_closed_form();
    let r = lemmas::r_poly();
    let res = resultant(&psi, &psi.deriv('a'), 'c').map(|x| x == &p("4(b^4-1)^3(d^2-1)^2d^9") * &r.pow(3)).unwrap_or(false);
    let (g, h) = (p("1+2b-b^2"), p("1+b^2"));
    let rhs = &(&p("8b(b^2-1)") * &lemmas::p_poly()) * &h.pow(2);
    let alpha = lemmas::subst_fraction(&r, 'a', &g, &h) == rhs;
    let beta = lemmas::subst_fraction(&r, 'a', &h, &g) == rhs;
    (
        res && alpha && beta,
        format!("resultant {res}, r|alpha {alpha}, r|beta {beta} (both carry the factor (1+b^2)^2)"),
    )
}

fn derivative_tables(wall: &LemmaCertificate, zero_: &LemmaCertificate, prop: &LemmaCertificate) -> Outcome {
    let table = |n: &str| n.contains("as displayed") || n.contains("for k >") || n.contains("r|alpha");
    let parts = [obligations(wall, table), obligations(zero_, table), obligations(prop, table)];
    (parts.iter().all(|x| x.0), parts.iter().map(|x| x.1.clone()).collect::<Vec<_>>().join(", "))
}

fn trace_identities() -> Outcome {
    match boxes::symbolic_identities() {
        Ok(checks) => {
            let bad: Vec<String> = checks.iter().filter(|c| !c.holds).map(|c| c.name.clone()).collect();
            (bad.is_empty(), if bad.is_empty() { format!("{} identities", checks.len()) } else { bad.join(", ") })
        }
        Err(e) => (false, e.to_string()),
    }
}

fn jacobian() -> Outcome {
    let j = duality::jacobian_check();
    (j.identity.holds, "det(dPhi) at (1,1) = 8(c^2+d^2-2c^2d^2)(c^2+d^2-2)/((1-c^2)^2(1-d^2)^2)".into())
}

fn lemma_good() -> Outcome {
    let g = lemmas::theta_grid_agreement();
    let ids = morph::image_vertex_identities();
    let ok = ids.iter().all(|c| c.holds);
    (g.passed && ok, format!("{}; {} image-vertex identities hold: {ok}", g.detail, ids.len()))
}

fn wall_zero_samples() -> Outcome {
    let tol = pow2_neg(40);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut bad = vec![];
    for _ in 0..25 {
        let (b, c, d) = lemmas::random_bcd(&mut rng, false);
        let label = format!("({}, {}, {})", scalar::fmt(&b), scalar::fmt(&c), scalar::fmt(&d));
        if duality::wall_signs(&b, &c, &d).ok() != Some((-1, 1)) {
            bad.push(format!("{label} wall signs"));
        }
        match duality::solve_duality_a(&b, &c, &d, &tol) {
            Ok(br) if br.sturm_count == Some(1) && br.width() <= tol => {}
            _ => bad.push(format!("{label} root")),
        }
        let (cc, dd) = if c.abs() <= d.abs() { (c.abs(), d.abs()) } else { (d.abs(), c.abs()) };
        match duality::solve_duality_a(&b, &cc, &dd, &tol) {
            Ok(br) if br.lo >= one() && br.hi <= int(2) => {}
            _ => bad.push(format!("{label} bound1")),
        }
    }
    (bad.is_empty(), if bad.is_empty() { "25 samples, width <= 2^-40".into() } else { bad.join("; ") })
}

fn convergence() -> Outcome {
    let r = lemmas::convergence_check(&duality::default_tolerance());
    (r.passed, r.detail)
}

fn relations() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let rel = lemmas::relation_check(100, &mut rng);
    let grid: Vec<PappusParams> = (-4..=4).flat_map(|i| (-4..=4).map(move |j| PappusParams::q((i, 5), (j, 5)))).collect();
    let action = grid.iter().all(|g| boxes::op_action_check(g).unwrap_or(false));
    let cfg = LemmaConfig::default();
    let orbit = lemmas::orbit_nesting(&cfg, &mut rng);
    (
        rel.passed && action && orbit.passed,
        format!("relations: {}; action on 9x9 grid: {action}; orbits: {}", rel.detail, orbit.detail),
    )
}

fn polarity() -> Outcome {
    let cfg = LemmaConfig::default();
    let r = lemmas::polarity_gate(&cfg, &mut ChaCha8Rng::seed_from_u64(13));
    (r.passed, r.detail)
}

fn negative_controls() -> Outcome {
    let cfg = LemmaConfig { psi: Some(lemmas::corrupted_psi()), ..Default::default() };
    let corrupted = lemmas::certify_duality(&cfg);
    let corrupted_ok = !corrupted.passed;
    let out = FullParams::new(int(6), int(2), zero(), zero()).expect("in range");
    let theta_ok = matches!(morph::generate_orbit(&out, 3, morph::DEFAULT_MAX_DEPTH), Err(Error::NotInTheta(_)));
    let sp = lemmas::certify_specialp(&int(2), &LemmaConfig::default());
    let sp_ok = !sp.passed && !sp.witnesses.is_empty();
    (
        corrupted_ok && theta_ok && sp_ok,
        format!(
            "corrupted psi rejected: {corrupted_ok}; (6,2) NotInTheta: {theta_ok}; specialp(2) rejected: {sp_ok} ({})",
            sp.witnesses.first().cloned().unwrap_or_default()
        ),
    )
}

fn main() -> ExitCode {
    let start = Instant::now();
    let cfg = LemmaConfig::default();
    let wall = lemmas::certify_wall(&cfg);
    let zero_ = lemmas::certify_zero(&cfg);
    let prop = lemmas::certify_properness(&cfg);

    let criteria: Vec<Criterion> = vec![
        ("psi consistency", Box::new(psi_consistency)),
        ("resultant identity", Box::new(resultant_identity)),
        ("derivative tables", Box::new(|| derivative_tables(&wall, &zero_, &prop))),
        ("trace identities", Box::new(trace_identities)),
        ("jacobian", Box::new(jacobian)),
        ("lemma GOOD", Box::new(lemma_good)),
        ("lemmas WALL/ZERO at samples", Box::new(wall_zero_samples)),
        ("convergence", Box::new(convergence)),
        ("marked-box relations and orbits", Box::new(relations)),
        ("polarity gate", Box::new(polarity)),
        ("negative controls", Box::new(negative_controls)),
    ];
    let mut failures = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let (ok, detail) = f();
        failures += usize::from(!ok);
        println!(
            "criterion {:>2} {} {name} [{} ms] {detail}",
            k + 1,
            if ok { "PASS" } else { "FAIL" },
            t.elapsed().as_millis()
        );
    }
    println!("{} of {} criteria passed in {:.1} s", criteria.len() - failures, criteria.len(), start.elapsed().as_secs_f64());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
