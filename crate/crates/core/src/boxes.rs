//! Pappus marked boxes: the operations `i`, `t`, `b`, the doppelganger, the
//! initial box `M_{c,d}`, the generators `r₁`, `r₂` and their trace identities.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::{det3, join, meet, tau, Hom, HomPoint, Mat3, ProjMap};
use crate::poly::{resultant, MultiPoly, PolyMat3};
use crate::scalar::{self, int, one, q, Scalar};

/// Pappus parameters `(c, d) ∈ (−1, 1)²`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PappusParams {
    #[serde(with = "scalar")]
    pub c: Scalar,
    #[serde(with = "scalar")]
    pub d: Scalar,
}

impl PappusParams {
    pub fn new(c: Scalar, d: Scalar) -> Result<Self> {
        let inside = |x: &Scalar| x.abs() < one();
        if !inside(&c) || !inside(&d) {
            return Err(Error::ParamOutOfRange(format!(
                "(c, d) = ({}, {}) is outside (-1, 1)^2",
                scalar::fmt(&c),
                scalar::fmt(&d)
            )));
        }
        Ok(PappusParams { c, d })
    }

    pub fn q(c: (i64, i64), d: (i64, i64)) -> Self {
        Self::new(q(c.0, c.1), q(d.0, d.1)).expect("parameters in range")
    }

    pub fn is_origin(&self) -> bool {
        self.c.is_zero() && self.d.is_zero()
    }
}

/// A marked box. Fields follow the cyclic picture: top-left, top point,
/// top-right, bottom-left, bottom point, bottom-right, i.e. the six-tuple
/// `(s, t, u, a, b, c)`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MarkedBox {
    pub tl: HomPoint,
    pub t: HomPoint,
    pub tr: HomPoint,
    pub bl: HomPoint,
    pub b: HomPoint,
    pub br: HomPoint,
}

/// Convex cone over a box: lifted vertices in cyclic order `TL, TR, BR, BL`
/// and inward facet normals.
#[derive(Clone, Debug)]
pub struct Region {
    pub verts: [Hom; 4],
    pub normals: [Hom; 4],
    iverts: [IVec; 4],
    inormals: [IVec; 4],
}

/// Integral representative of a ray; sign tests only need one.
#[derive(Clone, Debug)]
struct IVec([BigInt; 3]);

impl IVec {
    fn from_hom(h: &Hom) -> Self {
        let l = h.0.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let v: [BigInt; 3] = std::array::from_fn(|i| (&h.0[i] * Scalar::from(l.clone())).to_integer());
        let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if g.is_zero() {
            IVec(v)
        } else {
            IVec(v.map(|x| x / &g))
        }
    }

    fn dot(&self, o: &IVec) -> BigInt {
        &self.0[0] * &o.0[0] + &self.0[1] * &o.0[1] + &self.0[2] * &o.0[2]
    }

    fn cross(&self, o: &IVec) -> IVec {
        let (a, b) = (&self.0, &o.0);
        IVec([
            &a[1] * &b[2] - &a[2] * &b[1],
            &a[2] * &b[0] - &a[0] * &b[2],
            &a[0] * &b[1] - &a[1] * &b[0],
        ])
    }

    fn neg(&self) -> IVec {
        IVec(self.0.clone().map(|x| -x))
    }

    fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }
}

impl MarkedBox {
    /// Validated constructor.
    pub fn new(pts: [HomPoint; 6]) -> Result<Self> {
        let m = Self::from_points(pts);
        m.region()?;
        Ok(m)
    }

    pub fn from_points(pts: [HomPoint; 6]) -> Self {
        let [tl, t, tr, bl, b, br] = pts;
        MarkedBox { tl, t, tr, bl, b, br }
    }

    pub fn points(&self) -> [&HomPoint; 6] {
        [&self.tl, &self.t, &self.tr, &self.bl, &self.b, &self.br]
    }

    pub fn map(&self, f: impl Fn(&HomPoint) -> HomPoint) -> Self {
        let p = self.points();
        Self::from_points(std::array::from_fn(|k| f(p[k])))
    }

    pub fn apply(&self, m: &ProjMap) -> Self {
        self.map(|p| m.apply(p))
    }

    /// The same box read right to left.
    pub fn mirror(&self) -> Self {
        Self::from_points([
            self.tr.clone(),
            self.t.clone(),
            self.tl.clone(),
            self.br.clone(),
            self.b.clone(),
            self.bl.clone(),
        ])
    }

    /// Pointwise projective equality, in the given order.
    pub fn same_labels(&self, o: &MarkedBox) -> bool {
        self.points().iter().zip(o.points()).all(|(p, q)| p.proj_eq(q))
    }

    /// Equality as marked boxes: a box and its mirror image coincide.
    pub fn box_eq(&self, o: &MarkedBox) -> bool {
        self.same_labels(o) || self.same_labels(&o.mirror())
    }

    /// Canonical six-tuple of the box, independent of the mirror choice.
    pub fn canonical_key(&self) -> Vec<String> {
        let key = |m: &MarkedBox| -> Vec<String> {
            m.points().iter().map(|p| p.canonical().map(|c| c.to_string()).unwrap_or_default()).collect()
        };
        let (a, b) = (key(self), key(&self.mirror()));
        a.min(b)
    }

    /// Cone over the quadrilateral, signs fixed by the marked points.
    pub fn region(&self) -> Result<Region> {
        let (v_tl, v_tr) = edge_lift(&self.tl, &self.t, &self.tr)?;
        let (v_bl, v_br) = edge_lift(&self.bl, &self.b, &self.br)?;
        for s in [1i64, -1] {
            let s = int(s);
            let verts = [v_tl.clone(), v_tr.clone(), v_br.scale(&s), v_bl.scale(&s)];
            if let Some(normals) = convex_normals(&verts) {
                let iverts = verts.clone().map(|v| IVec::from_hom(&v));
                let inormals = normals.clone().map(|n| IVec::from_hom(&n));
                return Ok(Region { verts, normals, iverts, inormals });
            }
        }
        Err(Error::DegenerateBox("vertices do not bound a convex quadrilateral".into()))
    }

    pub fn to_f64(&self) -> [[f64; 3]; 6] {
        let p = self.points();
        std::array::from_fn(|k| p[k].to_f64())
    }

    /// Maximum bit length over all numerators and denominators of the canonical coordinates.
    pub fn max_bits(&self) -> u64 {
        self.points()
            .iter()
            .filter_map(|p| p.canonical().ok())
            .flat_map(|p| p.0.into_iter())
            .map(|x| x.numer().bits().max(x.denom().bits()))
            .max()
            .unwrap_or(0)
    }
}

/// Lifts `p`, `q` so that `m` is a positive combination of them.
fn edge_lift(p: &Hom, m: &Hom, q: &Hom) -> Result<(Hom, Hom)> {
    if !det3(p, m, q).is_zero() {
        return Err(Error::DegenerateBox(format!("{m} is not on the line through {p} and {q}")));
    }
    let n = join(p, q)?;
    // m = α p + β q
    let alpha = m.cross(q).dot(&n);
    let beta = p.cross(m).dot(&n);
    if alpha.is_zero() || beta.is_zero() {
        return Err(Error::DegenerateBox(format!("{m} coincides with an endpoint")));
    }
    if alpha.is_positive() == beta.is_positive() {
        Ok((p.clone(), q.clone()))
    } else {
        Ok((p.clone(), -q))
    }
}

/// Inward normals of the cone spanned by `v` in cyclic order, if it is strictly convex.
fn convex_normals(v: &[Hom; 4]) -> Option<[Hom; 4]> {
    let mut normals: [Hom; 4] = std::array::from_fn(|k| v[k].cross(&v[(k + 1) % 4]));
    let mut orient = 0i8;
    for (k, n) in normals.iter().enumerate() {
        for j in [(k + 2) % 4, (k + 3) % 4] {
            let s = scalar::sign(&n.dot(&v[j]));
            if s == 0 || (orient != 0 && s != orient) {
                return None;
            }
            orient = s;
        }
    }
    if orient < 0 {
        for n in normals.iter_mut() {
            *n = -&*n;
        }
    }
    Some(normals)
}

impl Region {
    fn rays_inside(&self, o: &Region, strict: bool) -> bool {
        [false, true].iter().any(|&flip| {
            o.iverts.iter().all(|w| {
                self.inormals.iter().all(|n| {
                    let s = n.dot(w);
                    let s = if flip { -s } else { s };
                    if strict {
                        s.is_positive()
                    } else {
                        !s.is_negative()
                    }
                })
            })
        })
    }

    /// `o` lies in the interior of `self`.
    pub fn strictly_contains(&self, o: &Region) -> bool {
        self.rays_inside(o, true)
    }

    /// `o` lies in the closure of `self`.
    pub fn weakly_contains(&self, o: &Region) -> bool {
        self.rays_inside(o, false)
    }

    /// The two projective quadrilaterals have disjoint interiors.
    pub fn interiors_disjoint(&self, o: &Region) -> bool {
        let neg: Vec<IVec> = o.iverts.iter().map(IVec::neg).collect();
        separated(&self.iverts, &self.inormals, &o.iverts) && separated(&self.iverts, &self.inormals, &neg)
    }
}

/// A plane through the origin with `v` on its closed positive side and `w` on
/// its closed negative side. Candidates: facets of either cone and planes
/// spanned by one edge ray from each.
fn separated(v: &[IVec; 4], nv: &[IVec; 4], w: &[IVec]) -> bool {
    let works = |h: &IVec| {
        !h.is_zero()
            && v.iter().all(|x| !h.dot(x).is_negative())
            && w.iter().all(|x| !h.dot(x).is_positive())
    };
    if nv.iter().any(works) {
        return true;
    }
    for k in 0..w.len() {
        let n = w[k].cross(&w[(k + 1) % w.len()]);
        if works(&n) || works(&n.neg()) {
            return true;
        }
    }
    for x in v {
        for y in w {
            let n = x.cross(y);
            if works(&n) || works(&n.neg()) {
                return true;
            }
        }
    }
    false
}

/// Pappus points `(X, Y, Z)` of the top triple and the bottom triple.
pub fn pappus_points(m: &MarkedBox) -> Result<[HomPoint; 3]> {
    let x = meet(&join(&m.tl, &m.b)?, &join(&m.t, &m.bl)?)?;
    let y = meet(&join(&m.tl, &m.br)?, &join(&m.tr, &m.bl)?)?;
    let z = meet(&join(&m.t, &m.br)?, &join(&m.tr, &m.b)?)?;
    Ok([x, y, z])
}

/// Swap the top and bottom flags.
pub fn op_i(m: &MarkedBox) -> MarkedBox {
    MarkedBox::from_points([
        m.bl.clone(),
        m.b.clone(),
        m.br.clone(),
        m.tr.clone(),
        m.t.clone(),
        m.tl.clone(),
    ])
}

/// Keep the top flag; the Pappus line becomes the new bottom edge.
pub fn op_t(m: &MarkedBox) -> Result<MarkedBox> {
    let [x, y, z] = pappus_points(m)?;
    Ok(MarkedBox::from_points([m.tl.clone(), m.t.clone(), m.tr.clone(), x, y, z]))
}

/// Keep the bottom flag; the Pappus line becomes the new top edge.
pub fn op_b(m: &MarkedBox) -> Result<MarkedBox> {
    let [x, y, z] = pappus_points(m)?;
    Ok(MarkedBox::from_points([x, y, z, m.bl.clone(), m.b.clone(), m.br.clone()]))
}

/// Box operation by letter.
pub fn op(letter: char, m: &MarkedBox) -> Result<MarkedBox> {
    match letter {
        'i' => Ok(op_i(m)),
        't' => op_t(m),
        'b' => op_b(m),
        _ => Err(Error::Parse(format!("unknown box operation {letter:?}"))),
    }
}

/// Applies `word` left to right.
pub fn apply_word(word: &str, m: &MarkedBox) -> Result<MarkedBox> {
    word.chars().try_fold(m.clone(), |acc, ch| op(ch, &acc))
}

/// The dual box of lines `(S, T, U, A, B, C)`.
pub fn doppelganger(m: &MarkedBox) -> Result<MarkedBox> {
    Ok(MarkedBox::from_points([
        join(&m.t, &m.bl)?,
        join(&m.tl, &m.tr)?,
        join(&m.t, &m.br)?,
        join(&m.b, &m.tr)?,
        join(&m.bl, &m.br)?,
        join(&m.b, &m.tl)?,
    ]))
}

/// `M_{c,d}`: vertices `[∓1:1:0]`, `[∓1:0:1]`, top point `[c:1:0]`, bottom point `[d:0:1]`.
pub fn initial_box(p: &PappusParams) -> MarkedBox {
    let h = |x: i64, y: i64, z: i64| Hom::ints(x, y, z);
    MarkedBox::from_points([
        h(-1, 1, 0),
        Hom([p.c.clone(), one(), Scalar::zero()]),
        h(1, 1, 0),
        h(-1, 0, 1),
        Hom([p.d.clone(), Scalar::zero(), one()]),
        h(1, 0, 1),
    ])
}

/// `R₁` with `r₁ = R₁ / ((1−c²)(1−d²))`, over indeterminates `c`, `d`.
pub fn r1_numerator_symbolic() -> PolyMat3 {
    PolyMat3::parse([
        ["c d - 1", "c(1 - c d)", "d - c"],
        ["d - c", "1 - c d", "c d - 1"],
        ["0", "1 - c^2", "0"],
    ])
}

pub fn r1_denominator_symbolic() -> MultiPoly {
    MultiPoly::p("(1 - c^2)(1 - d^2)")
}

pub fn r2_symbolic() -> PolyMat3 {
    PolyMat3::parse([
        ["-1 - c d", "c + d", "d(1 + c d)"],
        ["0", "0", "d^2 - 1"],
        ["-c - d", "1 + c d", "1 + c d"],
    ])
}

fn cd_vals(p: &PappusParams) -> [(char, Scalar); 2] {
    [('c', p.c.clone()), ('d', p.d.clone())]
}

/// The generators `(r₁, r₂)`.
pub fn generators(p: &PappusParams) -> Result<(ProjMap, ProjMap)> {
    let v = cd_vals(p);
    let den = r1_denominator_symbolic().eval(&v)?;
    if den.is_zero() {
        return Err(Error::ParamOutOfRange("c² = 1 or d² = 1".into()));
    }
    let r1 = r1_numerator_symbolic().eval(&v)?.scale(&den.recip());
    let r2 = r2_symbolic().eval(&v)?;
    Ok((r1, r2))
}

/// `r₁: i(M) → t(M) → b(M) → i(M)` and `r₂: M → ti(M) → bi(M) → M`.
pub fn op_action_check(p: &PappusParams) -> Result<bool> {
    let (r1, r2) = generators(p)?;
    let m = initial_box(p);
    let im = op_i(&m);
    let (tm, bm) = (op_t(&m)?, op_b(&m)?);
    let (tim, bim) = (op_t(&im)?, op_b(&im)?);
    let cycle = |g: &ProjMap, boxes: [&MarkedBox; 3]| {
        (0..3).all(|k| boxes[k].apply(g).box_eq(boxes[(k + 1) % 3]))
    };
    Ok(cycle(&r1, [&im, &tm, &bm]) && cycle(&r2, [&m, &tim, &bim]))
}

/// Trace invariants of the Pappus representation together with their closed forms.
#[derive(Clone, Debug, Serialize)]
pub struct TraceRecord {
    #[serde(with = "scalar")]
    pub tau_r1_r2sq: Scalar,
    #[serde(with = "scalar")]
    pub tau_r1sq_r2: Scalar,
    #[serde(with = "scalar")]
    pub comm_difference: Scalar,
    #[serde(with = "scalar")]
    pub trace_r1_r2: Scalar,
    pub matches_closed_forms: bool,
}

/// `[x, y] = x y x² y²`.
pub fn commutator(x: &Mat3, y: &Mat3) -> Mat3 {
    &(&(x * y) * &x.pow(2)) * &y.pow(2)
}

pub fn trace_identities(p: &PappusParams) -> Result<TraceRecord> {
    let (r1, r2) = generators(p)?;
    let c2 = one() - &p.c * &p.c;
    let d2 = one() - &p.d * &p.d;
    let tau_r1_r2sq = tau(&(&r1 * &r2.pow(2)))?;
    let tau_r1sq_r2 = tau(&(&r1.pow(2) * &r2))?;
    let comm_difference = commutator(&r2, &r1).trace() - commutator(&r1, &r2).trace();
    let trace_r1_r2 = (&r1 * &r2).trace();
    let matches_closed_forms = tau_r1_r2sq == int(64) / (&c2 * &d2 * &d2)
        && tau_r1sq_r2 == int(64) / (&c2 * &c2 * &d2)
        && comm_difference == int(16) * &p.c * &p.d / (&c2 * &d2)
        && trace_r1_r2 == -one();
    Ok(TraceRecord { tau_r1_r2sq, tau_r1sq_r2, comm_difference, trace_r1_r2, matches_closed_forms })
}

/// One polynomial identity checked over the indeterminates.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub holds: bool,
    pub lhs: String,
    pub rhs: String,
}

impl IdentityCheck {
    pub fn new(name: &str, lhs: &MultiPoly, rhs: &MultiPoly) -> Self {
        IdentityCheck {
            name: name.into(),
            holds: lhs == rhs,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }
}

fn is_scalar_matrix(m: &PolyMat3) -> bool {
    (0..3).all(|i| (0..3).all(|j| i == j || m.0[i][j].is_zero()))
        && m.0[0][0] == m.0[1][1]
        && m.0[1][1] == m.0[2][2]
}

/// Generator identities over the indeterminates `c`, `d`. Each is a
/// polynomial identity after clearing the common denominator of `r₁`.
pub fn symbolic_identities() -> Result<Vec<IdentityCheck>> {
    let r1 = r1_numerator_symbolic();
    let r2 = r2_symbolic();
    let den = r1_denominator_symbolic();
    let cc = MultiPoly::p("1 - c^2");
    let dd = MultiPoly::p("1 - d^2");
    let k = |n: i64| MultiPoly::int(n);
    let zero = MultiPoly::zero();
    let mut out = Vec::new();

    out.push(IdentityCheck::new("tr(r1) = 0", &r1.trace(), &zero));
    out.push(IdentityCheck::new("tr(r2) = 0", &r2.trace(), &zero));
    let r1_cubed = &(&r1 * &r1) * &r1;
    let r2_cubed = &(&r2 * &r2) * &r2;
    let scalar_check = |name: &str, m: &PolyMat3| IdentityCheck {
        name: name.into(),
        holds: is_scalar_matrix(m),
        lhs: m.0[0][0].to_string(),
        rhs: "scalar matrix".into(),
    };
    out.push(scalar_check("r1^3 is scalar", &r1_cubed));
    out.push(scalar_check("r2^3 is scalar", &r2_cubed));

    let p12 = &r1 * &r2;
    out.push(IdentityCheck::new("det(r1 r2) = 1", &p12.det(), &den.pow(3)));
    out.push(IdentityCheck::new("tr(r1 r2) = -1", &p12.trace(), &-&den));
    let chi = p12.charpoly('x');
    let disc = resultant(&chi, &chi.deriv('x'), 'x')?;
    out.push(IdentityCheck::new("disc charpoly(r1 r2) = 0", &disc, &zero));

    // τ(r₁r₂²) = 64/((1−c²)(1−d²)²); τ is scale invariant so R₁ replaces r₁.
    let m = &r1 * &(&r2 * &r2);
    out.push(IdentityCheck::new(
        "tau(r1 r2^2) (1-c^2)(1-d^2)^2 = 64",
        &(&m.trace().pow(3) * &(&cc * &dd.pow(2))),
        &(&k(64) * &m.det()),
    ));
    let m = &(&r1 * &r1) * &r2;
    out.push(IdentityCheck::new(
        "tau(r1^2 r2) (1-c^2)^2(1-d^2) = 64",
        &(&m.trace().pow(3) * &(&cc.pow(2) * &dd)),
        &(&k(64) * &m.det()),
    ));
    // Both commutators carry r₁ three times, hence the factor den³.
    let diff = &commutator_poly(&r2, &r1).trace() - &commutator_poly(&r1, &r2).trace();
    out.push(IdentityCheck::new(
        "tr[r2,r1] - tr[r1,r2] = 16cd/((1-c^2)(1-d^2))",
        &diff,
        &(&MultiPoly::p("16 c d") * &den.pow(2)),
    ));
    Ok(out)
}

fn commutator_poly(x: &PolyMat3, y: &PolyMat3) -> PolyMat3 {
    &(&(&(x * y) * x) * &(x * y)) * y
}

/// Representative of the `θ₄`-orbit of `(c, d)` under `(c, d) ↦ (−d, c)`
/// with `c > 0`, `d ≥ 0`, or the origin.
pub fn theta4_canonical(p: &PappusParams) -> PappusParams {
    let mut cur = p.clone();
    for _ in 0..4 {
        if cur.c.is_positive() && !cur.d.is_negative() {
            return cur;
        }
        cur = PappusParams { c: -cur.d.clone(), d: cur.c.clone() };
    }
    cur
}

/// Orbit of `(c, d)` under `θ₄`.
pub fn theta4_orbit(p: &PappusParams) -> [PappusParams; 4] {
    let (c, d) = (p.c.clone(), p.d.clone());
    [
        PappusParams { c: c.clone(), d: d.clone() },
        PappusParams { c: -d.clone(), d: c.clone() },
        PappusParams { c: -c.clone(), d: -d.clone() },
        PappusParams { c: d, d: -c },
    ]
}

/// A random box: a perturbed square with marked points on its horizontal
/// edges, moved by a random integer projective map.
pub fn random_box<R: Rng>(rng: &mut R) -> MarkedBox {
    loop {
        let mut jitter = || q(rng.gen_range(-30..=30), 100);
        let corner = |x: i64, y: i64, j: &mut dyn FnMut() -> Scalar| {
            Hom([int(x) + j(), int(y) + j(), one()])
        };
        let tl = corner(-1, 1, &mut jitter);
        let tr = corner(1, 1, &mut jitter);
        let bl = corner(-1, -1, &mut jitter);
        let br = corner(1, -1, &mut jitter);
        let mut lerp = |p: &Hom, r: &Hom| {
            let s = q(rng.gen_range(1..=9), 10);
            &p.scale(&(one() - &s)) + &r.scale(&s)
        };
        let t = lerp(&tl, &tr);
        let b = lerp(&bl, &br);
        let e: Vec<i64> = (0..9).map(|_| rng.gen_range(-3..=3)).collect();
        let g = Mat3::from_fn(|i, j| int(e[3 * i + j] + if i == j { 6 } else { 0 }));
        if g.det().is_zero() {
            continue;
        }
        let m = MarkedBox::from_points([tl, t, tr, bl, b, br]).apply(&g);
        if m.region().is_ok() {
            return m;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn initial_box_is_valid_and_symmetric() {
        let m = initial_box(&PappusParams::q((0, 1), (0, 1)));
        let flip = Mat3::diag([-one(), one(), one()]);
        assert!(m.apply(&flip).box_eq(&m));
        assert!(MarkedBox::new(m.points().map(|p| p.clone())).is_ok());
    }

    #[test]
    fn action_examples() {
        for (c, d) in [((0, 1), (0, 1)), ((1, 2), (1, 3)), ((-2, 3), (1, 7))] {
            assert!(op_action_check(&PappusParams::q(c, d)).unwrap());
        }
    }

    #[test]
    fn generator_examples() {
        let (r1, r2) = generators(&PappusParams::q((1, 2), (1, 3))).unwrap();
        assert_eq!((&r1 * &r2).trace(), -one());
        assert_eq!((&r1 * &r1.inverse().unwrap()), Mat3::identity());
        let (r1, _) = generators(&PappusParams::q((1, 3), (1, 5))).unwrap();
        assert!(r1.pow(3).scalar_multiple_of_identity().is_some());
        assert!(PappusParams::new(one(), Scalar::zero()).is_err());
    }

    #[test]
    fn trace_examples() {
        let r = trace_identities(&PappusParams::q((0, 1), (0, 1))).unwrap();
        assert_eq!((r.tau_r1_r2sq.clone(), r.tau_r1sq_r2.clone(), r.comm_difference.clone()), (int(64), int(64), int(0)));
        let r = trace_identities(&PappusParams::q((1, 2), (1, 2))).unwrap();
        assert_eq!(r.comm_difference, q(64, 9));
        assert!(r.matches_closed_forms);
        let r = trace_identities(&PappusParams::q((1, 2), (0, 1))).unwrap();
        assert_eq!(r.tau_r1_r2sq, q(256, 3));
    }

    #[test]
    fn symbolic_generator_identities() {
        for chk in symbolic_identities().unwrap() {
            assert!(chk.holds, "{}: {} vs {}", chk.name, chk.lhs, chk.rhs);
        }
    }

    #[test]
    fn theta4_examples() {
        let t = |c, d| theta4_canonical(&PappusParams::q(c, d));
        assert_eq!(t((0, 1), (0, 1)), PappusParams::q((0, 1), (0, 1)));
        assert_eq!(t((-1, 2), (1, 3)), PappusParams::q((1, 3), (1, 2)));
        assert_eq!(t((0, 1), (-1, 4)), PappusParams::q((1, 4), (0, 1)));
    }

    #[test]
    fn relations_and_nesting_on_random_boxes() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let m = random_box(&mut rng);
            assert!(apply_word("ii", &m).unwrap().box_eq(&m));
            assert!(apply_word("tit", &m).unwrap().box_eq(&op_b(&m).unwrap()));
            assert!(apply_word("bib", &m).unwrap().box_eq(&op_t(&m).unwrap()));
            let reg = m.region().unwrap();
            let (t, b) = (op_t(&m).unwrap().region().unwrap(), op_b(&m).unwrap().region().unwrap());
            assert!(reg.weakly_contains(&t) && reg.weakly_contains(&b));
            assert!(t.interiors_disjoint(&b));
            assert!(!reg.interiors_disjoint(&t));
        }
    }

    #[test]
    fn doppelganger_is_involutive() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let m = random_box(&mut rng);
        let d = doppelganger(&m).unwrap();
        assert!(d.region().is_ok());
        assert!(doppelganger(&d).unwrap().box_eq(&m));
        assert!(doppelganger(&op_t(&m).unwrap()).unwrap().box_eq(&op_t(&d).unwrap()));
    }
}
