//! Worked values from the module contracts, checked through the public API.

use nalgebra::Matrix3;
use num_traits::{Signed, Zero};
use pappus_core::boxes::{self, PappusParams};
use pappus_core::duality::{self, PsiMethod};
use pappus_core::error::Error;
use pappus_core::kernel::{self, Hom, Mat3, SpdPoint};
use pappus_core::lemmas::{self, LemmaConfig};
use pappus_core::morph::{self, FullParams, MorphParams};
use pappus_core::poly::{resultant, taylor_at_one, MultiPoly};
use pappus_core::scalar::{int, one, q, zero, Scalar};

fn p(s: &str) -> MultiPoly {
    MultiPoly::p(s)
}

fn full(a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> FullParams {
    FullParams::new(a, b, c, d).unwrap()
}

#[test]
fn kernel_values() {
    let d = Mat3::diag([int(1), int(2), int(3)]);
    assert_eq!(d.det(), int(6));
    assert_eq!(kernel::tau(&Mat3::identity()).unwrap(), int(27));
    assert_eq!(kernel::tau(&d).unwrap(), int(36));
    let (r1, r2) = boxes::generators(&PappusParams::q((1, 2), (0, 1))).unwrap();
    assert_eq!(kernel::tau(&(&r1 * &r2.pow(2))).unwrap(), q(256, 3));
    let (r1, _) = boxes::generators(&PappusParams::q((1, 2), (1, 3))).unwrap();
    assert_eq!(&r1 * &r1.inverse().unwrap(), Mat3::identity());
}

#[test]
fn polarity_and_symmetric_space() {
    let line = kernel::polarity_apply(&Hom::ints(1, 0, 0)).unwrap();
    assert!(line.proj_eq(&Hom::ints(1, 0, 0)));
    let at_inf = kernel::polarity_apply(&Hom::ints(0, 0, 1)).unwrap();
    assert!(at_inf.proj_eq(&Hom::ints(0, 0, 1)));
    let t = Mat3::diag([int(2), one(), q(1, 2)]);
    let img = kernel::spd_act_exact(&t, &Mat3::identity()).unwrap();
    assert_eq!(img, Mat3::diag([q(1, 4), one(), int(4)]));
    let m = SpdPoint::new(Matrix3::from_diagonal(&[2.0, 1.0, 0.5].into())).unwrap();
    let dist = kernel::distance_to_origin(&m).unwrap();
    assert!((dist - 2f64.sqrt() * 2f64.ln()).abs() < 1e-12);
}

#[test]
fn box_oracles() {
    for (c, d) in [((0, 1), (0, 1)), ((1, 2), (1, 3)), ((-2, 3), (1, 7))] {
        assert!(boxes::op_action_check(&PappusParams::q(c, d)).unwrap());
    }
    let t = boxes::trace_identities(&PappusParams::q((0, 1), (0, 1))).unwrap();
    assert_eq!((t.tau_r1_r2sq, t.tau_r1sq_r2, t.comm_difference), (int(64), int(64), zero()));
    let t = boxes::trace_identities(&PappusParams::q((1, 2), (1, 2))).unwrap();
    assert_eq!(t.comm_difference, q(64, 9));
    let t = boxes::trace_identities(&PappusParams::q((1, 2), (1, 3))).unwrap();
    assert_eq!(t.trace_r1_r2, -one());
    let (r1, _) = boxes::generators(&PappusParams::q((1, 3), (1, 5))).unwrap();
    assert!(r1.pow(3).scalar_multiple_of_identity().is_some());
    let canon = |c, d| boxes::theta4_canonical(&PappusParams::q(c, d));
    assert_eq!(canon((-1, 2), (1, 3)), PappusParams::q((1, 3), (1, 2)));
    assert_eq!(canon((0, 1), (-1, 4)), PappusParams::q((1, 4), (0, 1)));
    assert_eq!(canon((0, 1), (0, 1)), PappusParams::q((0, 1), (0, 1)));
}

#[test]
fn morph_oracles() {
    let l = MorphParams::q((1, 1), (2, 1));
    let s = morph::sigma_matrix(&l);
    assert_eq!(s, Mat3([[one(), zero(), zero()], [zero(), q(5, 4), q(3, 4)], [zero(), q(3, 4), q(5, 4)]]));
    assert!(morph::theta_contains(&l));
    assert!(!morph::theta_contains(&MorphParams::q((6, 1), (2, 1))));
    assert!(morph::theta_contains(&MorphParams::q((1, 10), (5, 1))));
    let seg = duality::segment_sb(&int(2)).unwrap();
    assert_eq!((seg.lo.clone(), seg.hi.clone()), (q(1, 5), Some(int(5))));
    assert!(duality::segment_sb(&int(3)).unwrap().hi.is_none());
    assert!(duality::segment_sb(&one()).is_err());

    let b = int(3) / int(2);
    let (r1, r2m) = morph::morphed_generators(&full(one(), b.clone(), zero(), zero())).unwrap();
    let b2 = &b * &b;
    let expected = -((int(3) * &b2 - int(1)) * (int(3) * &b2 - int(1))) / (int(4) * &b2);
    assert_eq!((&r1 * &r2m).trace(), expected);
    assert_eq!((&r1 * &r2m).det(), one());

    let orbit = |a, b, c, d, depth| morph::generate_orbit(&full(a, b, c, d), depth, morph::DEFAULT_MAX_DEPTH);
    assert_eq!(orbit(one(), int(2), zero(), zero(), 0).unwrap().len(), 1);
    assert_eq!(orbit(one(), int(2), q(1, 3), q(1, 5), 1).unwrap().len(), 4);
    assert!(morph::nesting_certificate(&orbit(one(), int(2), zero(), zero(), 4).unwrap()));
    assert!(morph::nesting_certificate(&orbit(one(), int(3), q(1, 2), q(1, 4), 4).unwrap()));
    assert!(matches!(orbit(int(6), int(2), zero(), zero(), 2), Err(Error::NotInTheta(_))));
    assert!(matches!(orbit(one(), int(2), zero(), zero(), 9), Err(Error::DepthLimit(9, 7))));
}

#[test]
fn overlapping_boxes_fail_nesting() {
    let nodes = morph::generate_orbit(&full(one(), int(2), zero(), zero()), 1, 7).unwrap();
    let mut shifted = nodes[1].clone();
    let m = Mat3([[one(), zero(), q(1, 3)], [zero(), one(), zero()], [zero(), zero(), one()]]);
    shifted.mbox = nodes[0].mbox.apply(&m);
    shifted.word = "shifted".into();
    assert!(!morph::nesting_certificate(&[nodes[0].clone(), shifted]));
}

#[test]
fn psi_oracles() {
    let psi = duality::psi_closed_form();
    assert!(psi.subst_scalar('a', &one()).subst_scalar('b', &one()).is_zero());
    assert_eq!(psi.subst_scalar('a', &zero()), p("(1+b^2)^2(2c^2d^2-c^2-d^2)"));
    assert_eq!(psi.subst_scalar('b', &one()), p("4(a^4-1)(c^2+d^2-2c^2d^2)"));
    assert_eq!(duality::build_psi(PsiMethod::Traces).unwrap().numerator, psi);
    assert!(duality::build_psi(PsiMethod::Determinant).unwrap().numerator.exact_div(&psi).is_some());
    assert_eq!(duality::rotate_cd(&psi), psi);

    let v = |a, b, c, d| psi.eval(&[('a', a), ('b', b), ('c', c), ('d', d)]).unwrap();
    let x = v(int(2), int(2), q(1, 3), q(1, 2));
    let y = v(q(1, 2), int(2), q(1, 2), q(1, 3));
    assert!(!x.is_zero() && x.signum() == -y.signum());

    let j = duality::jacobian_closed_form();
    assert_eq!(j.eval(&[('c', q(1, 2)), ('d', zero())]).unwrap(), q(-56, 9));
    assert_eq!(j.eval(&[('c', zero()), ('d', zero())]).unwrap(), zero());
    assert!(duality::jacobian_at_pappus().equals(&j));
}

#[test]
fn root_oracles() {
    let tol = duality::default_tolerance();
    assert_eq!(duality::wall_signs(&int(2), &q(1, 3), &q(1, 2)).unwrap(), (-1, 1));
    assert_eq!(duality::wall_signs(&int(3), &q(1, 2), &q(1, 4)).unwrap(), (-1, 1));
    assert!(duality::wall_signs(&int(2), &zero(), &zero()).is_err());
    let exact = |b, c, d| duality::solve_duality_a(&b, &c, &d, &tol).unwrap();
    assert!(exact(int(5), zero(), zero()).is_exact());
    let r = exact(int(2), q(1, 2), q(1, 2));
    assert!(r.is_exact() && r.lo == one());
    let r = exact(int(2), q(1, 4), q(1, 2));
    assert!(r.lo >= one() && r.hi <= int(2) && r.width() <= tol);

    let grid = [int(2), int(3), int(4)];
    for pt in duality::trace_curve(&q(1, 2), &q(1, 2), &grid, &tol).unwrap() {
        assert!(pt.bracket.is_exact() && pt.bracket.lo == one());
    }
    for pt in duality::trace_curve(&q(1, 4), &q(1, 2), &[q(3, 2), int(2), int(3)], &tol).unwrap() {
        assert!(pt.bracket.lo >= one() && pt.bracket.hi <= int(2));
    }
}

#[test]
fn polarity_oracles() {
    let gens = |a, b, c, d| morph::morphed_generators(&full(a, b, c, d)).unwrap();
    let (r1, r2m) = gens(one(), one(), q(1, 3), q(1, 5));
    assert!(duality::solve_polarity(&r1, &r2m, 1e-10).unwrap().exact.is_some());
    let (r1, r2m) = gens(one(), int(2), zero(), zero());
    assert!(duality::solve_polarity(&r1, &r2m, 1e-10).is_ok());
    let off = full(q(3, 2), int(2), q(1, 3), q(1, 5));
    let (r1, r2m) = morph::morphed_generators(&off).unwrap();
    assert!(matches!(duality::solve_polarity(&r1, &r2m, 1e-10), Err(Error::NoPolarity(_))));
    assert!(!duality::det_minus_identity(&off).unwrap().is_zero());
}

#[test]
fn polynomial_oracles() {
    assert_eq!(&p("a+b") * &p("a-b"), p("a^2-b^2"));
    assert_eq!(p("a^3b").deriv('a'), p("3a^2b"));
    assert!(p("(b^2-1)(a+c)").subst_scalar('b', &one()).is_zero());
    assert!(resultant(&p("x^2-1"), &p("x-1"), 'x').unwrap().is_zero());
    assert_eq!(resultant(&p("x-1"), &p("x-2"), 'x').unwrap(), p("-1"));
    assert_eq!(taylor_at_one(&p("b^2"), 'b', 1), p("2"));
    assert_eq!(taylor_at_one(&lemmas::r_poly(), 'b', 2), p("16(1+a^6)+40(a^2+a^4)+48a^3"));
}

#[test]
fn lemma_oracles() {
    let cfg = LemmaConfig { samples: 100, grid: 40, random_points: 5, orbit_depth: 3, orbit_params: 3, ..Default::default() };
    assert!(lemmas::certify_specialp(&zero(), &cfg).passed);
    assert!(lemmas::certify_specialp(&one(), &cfg).passed);
    let failing = lemmas::certify_specialp(&int(2), &cfg);
    assert!(!failing.passed && !failing.witnesses.is_empty());
    let f2 = pappus_core::poly::positivity::specialp(&int(2), 'c', 'd');
    assert!(f2.eval(&[('c', q(9, 10)), ('d', q(99, 100))]).unwrap().is_negative());

    let r = lemmas::r_poly();
    assert_eq!(r.eval(&[('a', one()), ('b', one())]).unwrap(), zero());
    let psi = duality::psi_closed_form();
    assert!(psi.eval(&[('a', int(2)), ('b', int(2)), ('c', q(1, 4)), ('d', q(1, 2))]).unwrap().is_positive());
    assert!(lemmas::run_registry(&[], &cfg).is_empty());
}
