//! The morph `Σ_{a,b}`, the good region `Θ`, morphed box operations and
//! orbits with nesting certificates.

use std::collections::HashSet;

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::boxes::{self, initial_box, IdentityCheck, MarkedBox, PappusParams, Region};
use crate::error::{Error, Result};
use crate::kernel::{Hom, Mat3, ProjMap};
use crate::poly::{MultiPoly, PolyMat3};
use crate::scalar::{self, int, one, Scalar};

/// Morph parameters, `a > 0` and `b ≥ 1`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MorphParams {
    #[serde(with = "scalar")]
    pub a: Scalar,
    #[serde(with = "scalar")]
    pub b: Scalar,
}

impl MorphParams {
    pub fn new(a: Scalar, b: Scalar) -> Result<Self> {
        if !a.is_positive() || b < one() {
            return Err(Error::ParamOutOfRange(format!(
                "(a, b) = ({}, {}) needs a > 0 and b >= 1",
                scalar::fmt(&a),
                scalar::fmt(&b)
            )));
        }
        Ok(MorphParams { a, b })
    }

    pub fn q(a: (i64, i64), b: (i64, i64)) -> Self {
        Self::new(scalar::q(a.0, a.1), scalar::q(b.0, b.1)).expect("parameters in range")
    }

    pub fn identity() -> Self {
        MorphParams { a: one(), b: one() }
    }

    pub fn is_identity(&self) -> bool {
        self.a == one() && self.b == one()
    }
}

/// `Σ_{a,b}`; determinant 1.
pub fn sigma_matrix(l: &MorphParams) -> ProjMap {
    let (a, b) = (&l.a, &l.b);
    let b2 = b * b;
    let z = Scalar::zero();
    Mat3([
        [one(), z.clone(), z.clone()],
        [z.clone(), (&b2 + one()) / (int(2) * a * b), (&b2 - one()) / (int(2) * b)],
        [z, (&b2 - one()) / (int(2) * b), a * (&b2 + one()) / (int(2) * b)],
    ])
}

/// `2ab·Σ_{a,b}` over indeterminates `a`, `b`.
pub fn sigma_scaled_symbolic() -> PolyMat3 {
    PolyMat3::parse([
        ["2a b", "0", "0"],
        ["0", "1 + b^2", "a(b^2 - 1)"],
        ["0", "a(b^2 - 1)", "a^2(1 + b^2)"],
    ])
}

/// `2ab·Σ_{a,b}⁻¹` over indeterminates `a`, `b`.
pub fn sigma_inverse_scaled_symbolic() -> PolyMat3 {
    PolyMat3::parse([
        ["2a b", "0", "0"],
        ["0", "a^2(1 + b^2)", "-a(b^2 - 1)"],
        ["0", "-a(b^2 - 1)", "1 + b^2"],
    ])
}

/// Projective map sending `e₁, e₂, e₃, e₁+e₂+e₃` to `p[0..4]`.
fn four_point(p: [&Hom; 4]) -> Result<Mat3> {
    let a = Mat3::from_fn(|i, j| p[j].0[i].clone());
    let inv = a
        .inverse()
        .map_err(|_| Error::DegenerateBox("three vertices are collinear".into()))?;
    let lam = inv.apply(p[3]);
    if lam.0.iter().any(|x| x.is_zero()) {
        return Err(Error::DegenerateBox("three vertices are collinear".into()));
    }
    Ok(&a * &Mat3::diag(lam.0))
}

/// Normalized vertices `[−1:1:0], [1:1:0], [1:0:1], [−1:0:1]`.
pub fn normal_vertices() -> [Hom; 4] {
    [Hom::ints(-1, 1, 0), Hom::ints(1, 1, 0), Hom::ints(1, 0, 1), Hom::ints(-1, 0, 1)]
}

/// `T_M`: sends `TL, TR, BR, BL` to the normalized vertices in that order.
pub fn normalizer(m: &MarkedBox) -> Result<ProjMap> {
    let v = normal_vertices();
    let dst = four_point([&v[0], &v[1], &v[2], &v[3]])?;
    let src = four_point([&m.tl, &m.tr, &m.br, &m.bl])?;
    Ok(&dst * &src.inverse()?)
}

/// `T_M⁻¹ Σ T_M`.
pub fn morph_map(m: &MarkedBox, l: &MorphParams) -> Result<ProjMap> {
    let t = normalizer(m)?;
    Ok(&(&t.inverse()? * &sigma_matrix(l)) * &t)
}

pub fn morph_box(m: &MarkedBox, l: &MorphParams) -> Result<MarkedBox> {
    if l.is_identity() {
        return Ok(m.clone());
    }
    Ok(m.apply(&morph_map(m, l)?))
}

/// Morphed operation `x^λ = σ ∘ x`.
pub fn morphed_op(letter: char, m: &MarkedBox, l: &MorphParams) -> Result<MarkedBox> {
    morph_box(&boxes::op(letter, m)?, l)
}

/// The three morphed operations `(i^λ, t^λ, b^λ)` applied to `m`.
pub fn morphed_ops(m: &MarkedBox, l: &MorphParams) -> Result<[MarkedBox; 3]> {
    Ok([morphed_op('i', m, l)?, morphed_op('t', m, l)?, morphed_op('b', m, l)?])
}

pub fn apply_morphed_word(word: &str, m: &MarkedBox, l: &MorphParams) -> Result<MarkedBox> {
    word.chars().try_fold(m.clone(), |acc, ch| morphed_op(ch, &acc, l))
}

/// `Θ` by the closed form: `S_b` is `((1+2b−b²)/(b²+1), (b²+1)/(1+2b−b²))`
/// when `b² − 2b − 1 < 0`, and `(0, ∞)` otherwise.
pub fn theta_contains_closed(l: &MorphParams) -> bool {
    let (a, b) = (&l.a, &l.b);
    let b2 = b * b;
    let g = int(1) + int(2) * b - &b2;
    if !g.is_positive() {
        return a.is_positive();
    }
    let lo = &g / (&b2 + int(1));
    let hi = (&b2 + int(1)) / &g;
    &lo < a && a < &hi
}

/// `Θ` by direct geometry: `Σ` maps the vertices and edge midpoints of the
/// normalized box strictly inside it.
pub fn theta_contains_geometric(l: &MorphParams) -> bool {
    let m0 = initial_box(&PappusParams { c: Scalar::zero(), d: Scalar::zero() });
    let reg = m0.region().expect("normalized box is convex");
    let s = sigma_matrix(l);
    let img: Vec<Hom> = (0..4)
        .flat_map(|k| {
            let v = &reg.verts[k];
            let mid = v + &reg.verts[(k + 1) % 4];
            [s.apply(v), s.apply(&mid)]
        })
        .collect();
    [one(), -one()].iter().any(|sg| {
        img.iter().all(|p| reg.normals.iter().all(|n| n.dot(&p.scale(sg)).is_positive()))
    })
}

/// Both tests; they must agree.
pub fn theta_contains(l: &MorphParams) -> bool {
    let closed = theta_contains_closed(l);
    debug_assert_eq!(closed, theta_contains_geometric(l));
    closed
}

/// Affine images of `[1:1:0]` and `[1:0:1]` under `Σ` as polynomial identities.
pub fn image_vertex_identities() -> Vec<IdentityCheck> {
    let s = sigma_scaled_symbolic();
    let img = |v: [i64; 3]| -> [MultiPoly; 3] {
        std::array::from_fn(|i| {
            (0..3).fold(MultiPoly::zero(), |acc, j| &acc + &s.0[i][j].scale(&int(v[j])))
        })
    };
    let p = MultiPoly::p;
    let [x, y, z] = img([1, 1, 0]);
    let [x2, y2, z2] = img([1, 0, 1]);
    vec![
        IdentityCheck::new("x(S[1:1:0]) = 2b/(b^2-1)", &(&x * &p("b^2-1")), &(&p("2b") * &z)),
        IdentityCheck::new("y(S[1:1:0]) = (b^2+1)/(a(b^2-1))", &(&y * &p("a(b^2-1)")), &(&p("b^2+1") * &z)),
        IdentityCheck::new("x(S[1:0:1]) = 2b/(a(b^2+1))", &(&x2 * &p("a(b^2+1)")), &(&p("2b") * &z2)),
        IdentityCheck::new("y(S[1:0:1]) = (b^2-1)/(a(b^2+1))", &(&y2 * &p("a(b^2+1)")), &(&p("b^2-1") * &z2)),
        IdentityCheck::new("det S = 1", &s.det(), &p("8a^3b^3")),
        IdentityCheck::new(
            "S S^-1 = I",
            &(&s * &sigma_inverse_scaled_symbolic()).0[1][2],
            &MultiPoly::zero(),
        ),
    ]
}

/// Full parameter tuple `(a, b, c, d)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FullParams {
    pub morph: MorphParams,
    pub pappus: PappusParams,
}

impl FullParams {
    pub fn new(a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> Result<Self> {
        Ok(FullParams { morph: MorphParams::new(a, b)?, pappus: PappusParams::new(c, d)? })
    }

    pub fn vals(&self) -> [(char, Scalar); 4] {
        [
            ('a', self.morph.a.clone()),
            ('b', self.morph.b.clone()),
            ('c', self.pappus.c.clone()),
            ('d', self.pappus.d.clone()),
        ]
    }
}

/// Random parameters with `(a, b) ∈ Θ`, `b ∈ (1, 4]` and `c, d ∈ (−1, 1)`.
pub fn random_theta_params<R: rand::Rng>(rng: &mut R) -> FullParams {
    let b = int(1) + scalar::q(rng.gen_range(1..=24), 8);
    let b2 = &b * &b;
    let g = int(1) + int(2) * &b - &b2;
    let t = scalar::q(rng.gen_range(1..20), 20);
    let a = if g.is_positive() {
        let lo = &g / (&b2 + int(1));
        let hi = (&b2 + int(1)) / &g;
        &lo + (&hi - &lo) * t
    } else {
        t * int(5)
    };
    let c = scalar::q(rng.gen_range(-19..=19), 20);
    let d = scalar::q(rng.gen_range(-19..=19), 20);
    FullParams::new(a, b, c, d).expect("in range")
}

/// `(r₁, Σ⁻¹ r₂ Σ)`.
pub fn morphed_generators(p: &FullParams) -> Result<(ProjMap, ProjMap)> {
    let (r1, r2) = boxes::generators(&p.pappus)?;
    let s = sigma_matrix(&p.morph);
    let r2m = &(&s.inverse()? * &r2) * &s;
    Ok((r1, r2m))
}

/// `4a²b²·Σ⁻¹ r₂ Σ` over indeterminates `a, b, c, d`.
pub fn r2m_scaled_symbolic() -> PolyMat3 {
    &(&sigma_inverse_scaled_symbolic() * &boxes::r2_symbolic()) * &sigma_scaled_symbolic()
}

/// A box in a morphed orbit, named by the word of operations producing it.
#[derive(Clone, Debug, Serialize)]
pub struct OrbitNode {
    pub word: String,
    pub depth: usize,
    #[serde(rename = "box")]
    pub mbox: MarkedBox,
}

pub const DEFAULT_MAX_DEPTH: usize = 7;

/// Orbit of `M_{c,d}` under the morphed operations, requiring `(a, b) ∈ Θ`
/// or the classical case `(1, 1)`.
pub fn generate_orbit(p: &FullParams, depth: usize, max_depth: usize) -> Result<Vec<OrbitNode>> {
    if !p.morph.is_identity() && !theta_contains(&p.morph) {
        return Err(Error::NotInTheta(format!(
            "(a, b) = ({}, {})",
            scalar::fmt(&p.morph.a),
            scalar::fmt(&p.morph.b)
        )));
    }
    generate_orbit_unchecked(p, depth, max_depth)
}

/// Words start with any of `i, t, b` and continue with `t, b`, so every
/// later box descends into its parent.
pub fn generate_orbit_unchecked(p: &FullParams, depth: usize, max_depth: usize) -> Result<Vec<OrbitNode>> {
    if depth > max_depth {
        return Err(Error::DepthLimit(depth, max_depth));
    }
    let root = OrbitNode { word: String::new(), depth: 0, mbox: initial_box(&p.pappus) };
    let mut seen: HashSet<Vec<String>> = HashSet::from([root.mbox.canonical_key()]);
    let mut out = vec![root.clone()];
    let mut frontier = vec![root];
    for level in 1..=depth {
        let letters: &[char] = if level == 1 { &['i', 't', 'b'] } else { &['t', 'b'] };
        let next: Vec<OrbitNode> = frontier
            .par_iter()
            .flat_map_iter(|n| letters.iter().map(move |&ch| (n, ch)))
            .map(|(n, ch)| {
                let mbox = morphed_op(ch, &n.mbox, &p.morph)?;
                mbox.region()?;
                Ok(OrbitNode { word: format!("{}{}", n.word, ch), depth: level, mbox })
            })
            .collect::<Result<_>>()?;
        frontier = next.into_iter().filter(|n| seen.insert(n.mbox.canonical_key())).collect();
        out.extend(frontier.iter().cloned());
    }
    Ok(out)
}

/// Pairwise classification of an orbit.
#[derive(Clone, Debug, Default, Serialize)]
pub struct NestingReport {
    pub boxes: usize,
    pub pairs: usize,
    pub disjoint: usize,
    pub strictly_nested: usize,
    pub weakly_nested: usize,
    pub overlapping: usize,
    pub first_failure: Option<(String, String)>,
}

impl NestingReport {
    pub fn passes(&self) -> bool {
        self.weakly_nested == 0 && self.overlapping == 0
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum PairKind {
    Disjoint,
    Strict,
    Weak,
    Overlap,
}

fn classify(x: &Region, y: &Region) -> PairKind {
    if x.strictly_contains(y) || y.strictly_contains(x) {
        PairKind::Strict
    } else if x.interiors_disjoint(y) {
        PairKind::Disjoint
    } else if x.weakly_contains(y) || y.weakly_contains(x) {
        PairKind::Weak
    } else {
        PairKind::Overlap
    }
}

/// Every pair of boxes is disjoint or strictly nested.
pub fn nesting_report(nodes: &[OrbitNode]) -> Result<NestingReport> {
    let regions: Vec<Region> = nodes.par_iter().map(|n| n.mbox.region()).collect::<Result<_>>()?;
    let pairs: Vec<(usize, usize)> =
        (0..nodes.len()).flat_map(|i| (i + 1..nodes.len()).map(move |j| (i, j))).collect();
    let kinds: Vec<PairKind> = pairs.par_iter().map(|&(i, j)| classify(&regions[i], &regions[j])).collect();
    let mut r = NestingReport { boxes: nodes.len(), pairs: pairs.len(), ..Default::default() };
    for (&(i, j), k) in pairs.iter().zip(&kinds) {
        match k {
            PairKind::Disjoint => r.disjoint += 1,
            PairKind::Strict => r.strictly_nested += 1,
            PairKind::Weak => r.weakly_nested += 1,
            PairKind::Overlap => r.overlapping += 1,
        }
        if matches!(k, PairKind::Weak | PairKind::Overlap) && r.first_failure.is_none() {
            r.first_failure = Some((nodes[i].word.clone(), nodes[j].word.clone()));
        }
    }
    Ok(r)
}

pub fn nesting_certificate(nodes: &[OrbitNode]) -> bool {
    nesting_report(nodes).map(|r| r.passes()).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boxes::random_box;
    use crate::scalar::q;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma_matrix(&MorphParams::identity()), Mat3::identity());
        let s = sigma_matrix(&MorphParams::q((1, 1), (2, 1)));
        let z = Scalar::zero();
        let expect = Mat3([
            [one(), z.clone(), z.clone()],
            [z.clone(), q(5, 4), q(3, 4)],
            [z, q(3, 4), q(5, 4)],
        ]);
        assert_eq!(s, expect);
        assert_eq!(sigma_matrix(&MorphParams::q((3, 7), (5, 2))).det(), one());
        for chk in image_vertex_identities() {
            assert!(chk.holds, "{}", chk.name);
        }
    }

    #[test]
    fn normalizer_examples() {
        let m0 = initial_box(&PappusParams::q((1, 3), (-1, 2)));
        assert!(normalizer(&m0).unwrap().proj_eq(&Mat3::identity()));
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let m = random_box(&mut rng);
        let t = normalizer(&m).unwrap();
        let v = normal_vertices();
        for (p, target) in [&m.tl, &m.tr, &m.br, &m.bl].into_iter().zip(v.iter()) {
            assert!(t.apply(p).proj_eq(target));
        }
        let flat = MarkedBox::from_points([
            Hom::ints(0, 0, 1),
            Hom::ints(1, 0, 1),
            Hom::ints(2, 0, 1),
            Hom::ints(3, 0, 1),
            Hom::ints(4, 0, 1),
            Hom::ints(5, 0, 1),
        ]);
        assert!(matches!(normalizer(&flat), Err(Error::DegenerateBox(_))));
    }

    #[test]
    fn morph_is_independent_of_the_lift() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let l = MorphParams::q((1, 1), (2, 1));
        for _ in 0..5 {
            let m = random_box(&mut rng);
            let a = morph_box(&m, &l).unwrap();
            let b = morph_box(&m.mirror(), &l).unwrap();
            assert!(a.box_eq(&b));
        }
    }

    #[test]
    fn theta_examples() {
        assert!(theta_contains(&MorphParams::q((1, 1), (2, 1))));
        assert!(!theta_contains(&MorphParams::q((6, 1), (2, 1))));
        assert!(theta_contains(&MorphParams::q((1, 10), (5, 1))));
        assert!(!theta_contains(&MorphParams::q((1, 5), (2, 1))));
        assert!(theta_contains(&MorphParams::q((21, 100), (2, 1))));
        for a in 1..=12 {
            for b in 1..=12 {
                let l = MorphParams::q((a, 2), (b + 2, 2));
                assert_eq!(theta_contains_closed(&l), theta_contains_geometric(&l), "{a}/2 {}/2", b + 2);
            }
        }
    }

    #[test]
    fn morphed_generators_examples() {
        let p = FullParams::new(int(1), int(1), q(1, 2), q(1, 3)).unwrap();
        let (r1, r2m) = morphed_generators(&p).unwrap();
        assert_eq!((r1, r2m), boxes::generators(&p.pappus).unwrap());
        let b = q(3, 2);
        let p = FullParams::new(int(1), b.clone(), int(0), int(0)).unwrap();
        let (r1, r2m) = morphed_generators(&p).unwrap();
        let b2 = &b * &b;
        let expect = -(int(3) * &b2 - int(1)) * (int(3) * &b2 - int(1)) / (int(4) * &b2);
        assert_eq!((&r1 * &r2m).trace(), expect);
        assert_eq!((&r1 * &r2m).det(), one());
    }

    #[test]
    fn morphed_relations() {
        let l = MorphParams::q((1, 1), (2, 1));
        let m = initial_box(&PappusParams::q((1, 2), (1, 3)));
        assert!(apply_morphed_word("ii", &m, &l).unwrap().box_eq(&m));
        let t = morphed_op('t', &m, &l).unwrap();
        assert!(apply_morphed_word("tit", &m, &l).unwrap().box_eq(&morphed_op('b', &m, &l).unwrap()));
        assert!(m.region().unwrap().strictly_contains(&t.region().unwrap()));
    }

    #[test]
    fn orbit_sizes_and_nesting() {
        let p = FullParams::new(int(1), int(2), int(0), int(0)).unwrap();
        assert_eq!(generate_orbit(&p, 0, 7).unwrap().len(), 1);
        assert_eq!(generate_orbit(&p, 1, 7).unwrap().len(), 4);
        let orbit = generate_orbit(&p, 2, 7).unwrap();
        assert_eq!(orbit.len(), 10);
        assert!(nesting_certificate(&orbit));
        assert!(matches!(generate_orbit(&p, 9, 7), Err(Error::DepthLimit(9, 7))));
        let bad = FullParams::new(int(6), int(2), int(0), int(0)).unwrap();
        assert!(matches!(generate_orbit(&bad, 2, 7), Err(Error::NotInTheta(_))));
    }

    #[test]
    fn overlapping_list_fails() {
        let m = initial_box(&PappusParams::q((0, 1), (0, 1)));
        let shifted = m.apply(&Mat3([
            [one(), Scalar::zero(), q(1, 2)],
            [Scalar::zero(), one(), Scalar::zero()],
            [Scalar::zero(), Scalar::zero(), one()],
        ]));
        let nodes = vec![
            OrbitNode { word: "x".into(), depth: 0, mbox: m },
            OrbitNode { word: "y".into(), depth: 0, mbox: shifted },
        ];
        assert!(!nesting_certificate(&nodes));
    }
}
