//! Elliptic curves over `F_p`, `Pic(E)` in `(point, degree)` form and the
//! correspondence between homomorphisms `ψ': P → E` and marked del Pezzo
//! data (blow-up centres on the anticanonical curve).

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::dplattice::{DPLattice, KappaQuotient, LatticeVector};
use crate::error::{Error, Result};
use crate::rootdata::TypeTag;

/// `y² = x³ + ax + b` over `F_p`, `p > 3` prime and `p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct EllipticCurve {
    p: u64,
    a: u64,
    b: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EcPoint {
    #[serde(with = "infinity_tag")]
    Infinity,
    Affine { x: u64, y: u64 },
}

mod infinity_tag {
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str("infinity")
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<(), D::Error> {
        let s = String::deserialize(d)?;
        if s == "infinity" {
            Ok(())
        } else {
            Err(D::Error::custom(format!("expected \"infinity\", got {s:?}")))
        }
    }
}

impl EcPoint {
    pub fn is_infinity(&self) -> bool {
        matches!(self, EcPoint::Infinity)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl EllipticCurve {
    pub fn new(p: u64, a: i64, b: i64) -> Result<Self> {
        if p <= 3 || p >= 1 << 31 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let c = EllipticCurve {
            p,
            a: a.rem_euclid(p as i64) as u64,
            b: b.rem_euclid(p as i64) as u64,
        };
        let a3 = c.mul(c.mul(c.a, c.a), c.a);
        let disc = (4 * a3 + 27 * c.mul(c.b, c.b)) % p;
        if disc == 0 {
            return Err(Error::SingularCurve(p));
        }
        Ok(c)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    fn mul(&self, x: u64, y: u64) -> u64 {
        x * y % self.p
    }

    fn sub(&self, x: u64, y: u64) -> u64 {
        (x + self.p - y) % self.p
    }

    fn pow(&self, mut base: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        base %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn inv(&self, x: u64) -> u64 {
        self.pow(x, self.p - 2)
    }

    fn rhs(&self, x: u64) -> u64 {
        let x2 = self.mul(x, x);
        (self.mul(x2, x) + self.mul(self.a, x) + self.b) % self.p
    }

    /// Tonelli–Shanks square root; `None` for non-residues.
    pub fn sqrt(&self, n: u64) -> Option<u64> {
        let p = self.p;
        let n = n % p;
        if n == 0 {
            return Some(0);
        }
        if self.pow(n, (p - 1) / 2) != 1 {
            return None;
        }
        let (mut q, mut s) = (p - 1, 0u32);
        while q % 2 == 0 {
            q /= 2;
            s += 1;
        }
        let z = (2..p)
            .find(|&z| self.pow(z, (p - 1) / 2) == p - 1)
            .expect("non-residue exists for odd p");
        let mut m = s;
        let mut c = self.pow(z, q);
        let mut t = self.pow(n, q);
        let mut r = self.pow(n, q.div_ceil(2));
        while t != 1 {
            let mut i = 0;
            let mut tt = t;
            while tt != 1 {
                tt = self.mul(tt, tt);
                i += 1;
            }
            let b = self.pow(c, 1 << (m - i - 1));
            m = i;
            c = self.mul(b, b);
            t = self.mul(t, c);
            r = self.mul(r, b);
        }
        Some(r)
    }

    pub fn contains(&self, pt: &EcPoint) -> bool {
        match *pt {
            EcPoint::Infinity => true,
            EcPoint::Affine { x, y } => x < self.p && y < self.p && self.mul(y, y) == self.rhs(x),
        }
    }

    pub fn point(&self, x: u64, y: u64) -> Result<EcPoint> {
        let pt = EcPoint::Affine { x, y };
        if self.contains(&pt) {
            Ok(pt)
        } else {
            Err(Error::NotOnCurve { x, y })
        }
    }

    fn check(&self, pt: &EcPoint) -> Result<()> {
        match *pt {
            EcPoint::Affine { x, y } if !self.contains(pt) => Err(Error::NotOnCurve { x, y }),
            _ => Ok(()),
        }
    }

    pub fn neg(&self, pt: &EcPoint) -> Result<EcPoint> {
        self.check(pt)?;
        Ok(self.neg_unchecked(pt))
    }

    fn neg_unchecked(&self, pt: &EcPoint) -> EcPoint {
        match *pt {
            EcPoint::Infinity => EcPoint::Infinity,
            EcPoint::Affine { x, y } => EcPoint::Affine {
                x,
                y: (self.p - y) % self.p,
            },
        }
    }

    pub fn add(&self, p1: &EcPoint, p2: &EcPoint) -> Result<EcPoint> {
        self.check(p1)?;
        self.check(p2)?;
        Ok(self.add_unchecked(p1, p2))
    }

    fn add_unchecked(&self, p1: &EcPoint, p2: &EcPoint) -> EcPoint {
        let (x1, y1, x2, y2) = match (*p1, *p2) {
            (EcPoint::Infinity, q) | (q, EcPoint::Infinity) => return q,
            (EcPoint::Affine { x: x1, y: y1 }, EcPoint::Affine { x: x2, y: y2 }) => {
                (x1, y1, x2, y2)
            }
        };
        let lambda = if x1 == x2 {
            if (y1 + y2) % self.p == 0 {
                return EcPoint::Infinity;
            }
            let num = (3 * self.mul(x1, x1) + self.a) % self.p;
            self.mul(num, self.inv(2 * y1 % self.p))
        } else {
            self.mul(self.sub(y2, y1), self.inv(self.sub(x2, x1)))
        };
        let x3 = self.sub(self.sub(self.mul(lambda, lambda), x1), x2);
        let y3 = self.sub(self.mul(lambda, self.sub(x1, x3)), y1);
        EcPoint::Affine { x: x3, y: y3 }
    }

    pub fn sub_points(&self, p1: &EcPoint, p2: &EcPoint) -> Result<EcPoint> {
        self.add(p1, &self.neg(p2)?)
    }

    /// `n·P` by double-and-add; negative `n` multiplies `-P`.
    pub fn scalar_mul(&self, n: i64, pt: &EcPoint) -> Result<EcPoint> {
        self.check(pt)?;
        Ok(self.scalar_mul_unchecked(n, pt))
    }

    fn scalar_mul_unchecked(&self, n: i64, pt: &EcPoint) -> EcPoint {
        let mut base = if n < 0 { self.neg_unchecked(pt) } else { *pt };
        let mut k = n.unsigned_abs();
        let mut acc = EcPoint::Infinity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add_unchecked(&acc, &base);
            }
            base = self.add_unchecked(&base, &base);
            k >>= 1;
        }
        acc
    }

    /// `Σ c_i P_i`.
    pub fn combination(&self, coeffs: &[i64], pts: &[EcPoint]) -> Result<EcPoint> {
        if coeffs.len() != pts.len() {
            return Err(Error::DimensionMismatch {
                expected: pts.len(),
                got: coeffs.len(),
            });
        }
        let mut acc = EcPoint::Infinity;
        for (c, pt) in coeffs.iter().zip(pts) {
            self.check(pt)?;
            if *c != 0 {
                acc = self.add_unchecked(&acc, &self.scalar_mul_unchecked(*c, pt));
            }
        }
        Ok(acc)
    }

    /// `#E(F_p)` by summing Legendre symbols.
    pub fn order(&self) -> u64 {
        let mut n = 1; // infinity
        for x in 0..self.p {
            let r = self.rhs(x);
            if r == 0 {
                n += 1;
            } else if self.pow(r, (self.p - 1) / 2) == 1 {
                n += 2;
            }
        }
        n
    }

    /// Uniform-ish random affine point (random `x`, random square root).
    pub fn random_point<R: Rng + ?Sized>(&self, rng: &mut R) -> EcPoint {
        loop {
            let x = rng.gen_range(0..self.p);
            if let Some(y) = self.sqrt(self.rhs(x)) {
                let y = if rng.gen::<bool>() { y } else { (self.p - y) % self.p };
                return EcPoint::Affine { x, y };
            }
        }
    }
}

/// The divisor class `[pt] + (deg - 1)[0_E]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PicClass {
    #[serde(skip)]
    pub curve: EllipticCurve,
    pub pt: EcPoint,
    pub deg: i64,
}

impl PicClass {
    pub fn zero(curve: EllipticCurve) -> Self {
        PicClass {
            curve,
            pt: EcPoint::Infinity,
            deg: 0,
        }
    }
}

pub fn pic_add(c1: &PicClass, c2: &PicClass) -> Result<PicClass> {
    if c1.curve != c2.curve {
        return Err(Error::CurveMismatch);
    }
    Ok(PicClass {
        curve: c1.curve,
        pt: c1.curve.add(&c1.pt, &c2.pt)?,
        deg: c1.deg + c2.deg,
    })
}

/// The homomorphism `ψ: I_{1,l} → Pic(E)` with `ψ(δ_i) = (q_i, 0)` and
/// `ψ(γ) = (0_E, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PsiHom {
    pub curve: EllipticCurve,
    pub tag: TypeTag,
    pub delta_images: Vec<EcPoint>,
}

impl PsiHom {
    pub fn new(curve: EllipticCurve, tag: TypeTag, delta_images: Vec<EcPoint>) -> Result<Self> {
        if delta_images.len() != tag.rank() {
            return Err(Error::DimensionMismatch {
                expected: tag.rank(),
                got: delta_images.len(),
            });
        }
        for pt in &delta_images {
            curve.check(pt)?;
        }
        Ok(PsiHom {
            curve,
            tag,
            delta_images,
        })
    }

    pub fn trivial(curve: EllipticCurve, tag: TypeTag) -> Self {
        PsiHom {
            curve,
            tag,
            delta_images: vec![EcPoint::Infinity; tag.rank()],
        }
    }

    /// `ψ'` given on the quotient basis of `I/Zκ` (see
    /// [`subgroup_psi_basis`]); the δ-images are `ψ'(δ̄_i)`. Because `ψ(γ)`
    /// is pinned to `0_E`, the point part of `ψ(κ)` is `-(9-l)·ψ'(γ̄)`.
    pub fn from_weight_basis(
        curve: EllipticCurve,
        lat: &DPLattice,
        quotient: &KappaQuotient,
        values: &[EcPoint],
    ) -> Result<Self> {
        let l = lat.rank();
        if values.len() != l {
            return Err(Error::DimensionMismatch {
                expected: l,
                got: values.len(),
            });
        }
        let images = (0..l)
            .map(|i| {
                let col: Vec<i64> = quotient.delta_images.iter().map(|r| r[i]).collect();
                curve.combination(&col, values)
            })
            .collect::<Result<Vec<_>>>()?;
        PsiHom::new(curve, lat.tag(), images)
    }

    /// Random `ψ'` on `P`.
    pub fn random<R: Rng + ?Sized>(
        curve: EllipticCurve,
        lat: &DPLattice,
        quotient: &KappaQuotient,
        rng: &mut R,
    ) -> Result<Self> {
        let values: Vec<EcPoint> = (0..lat.rank()).map(|_| curve.random_point(rng)).collect();
        PsiHom::from_weight_basis(curve, lat, quotient, &values)
    }

    pub fn eval(&self, v: &LatticeVector) -> Result<PicClass> {
        let l = self.tag.rank();
        if v.0.len() != l + 1 {
            return Err(Error::DimensionMismatch {
                expected: l + 1,
                got: v.0.len(),
            });
        }
        Ok(PicClass {
            curve: self.curve,
            pt: self.curve.combination(&v.0[..l], &self.delta_images)?,
            deg: v.gamma_coeff(),
        })
    }
}

/// Blow-up data: centres `p_1..p_l` on `E` (first blown up first) and the
/// point part `s` of the hyperplane class, `ψ(h) = [s] + 2[0_E]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MarkedDelPezzo {
    pub curve: EllipticCurve,
    pub tag: TypeTag,
    pub points: Vec<EcPoint>,
    pub hyperplane: EcPoint,
}

impl MarkedDelPezzo {
    /// Centres with the standard embedding `ψ(h) = 3[0_E]`.
    pub fn new(curve: EllipticCurve, tag: TypeTag, points: Vec<EcPoint>) -> Result<Self> {
        if points.len() != tag.rank() {
            return Err(Error::DimensionMismatch {
                expected: tag.rank(),
                got: points.len(),
            });
        }
        for pt in &points {
            curve.check(pt)?;
        }
        Ok(MarkedDelPezzo {
            curve,
            tag,
            points,
            hyperplane: EcPoint::Infinity,
        })
    }

    /// Pairwise distinct centres.
    pub fn is_generic(&self) -> bool {
        let mut pts = self.points.clone();
        pts.sort();
        pts.windows(2).all(|w| w[0] != w[1])
    }
}

fn check_tag(psi_tag: TypeTag, lat: &DPLattice) -> Result<()> {
    if psi_tag != lat.tag() {
        return Err(Error::Inconsistent(format!(
            "homomorphism of type {psi_tag} used with lattice of type {}",
            lat.tag()
        )));
    }
    Ok(())
}

/// `p_i` = point part of `ψ(e_i)`, each `ψ(e_i)` of degree 1.
pub fn construct_marked_dp(psi: &PsiHom, lat: &DPLattice) -> Result<MarkedDelPezzo> {
    check_tag(psi.tag, lat)?;
    let gb = lat.geometric_basis()?;
    let mut points = Vec::with_capacity(gb.e.len());
    for e in &gb.e {
        let c = psi.eval(e)?;
        if c.deg != 1 {
            return Err(Error::Inconsistent(format!("deg ψ(e_i) = {}", c.deg)));
        }
        points.push(c.pt);
    }
    let h = psi.eval(&gb.h)?;
    Ok(MarkedDelPezzo {
        curve: psi.curve,
        tag: psi.tag,
        points,
        hyperplane: h.pt,
    })
}

/// Inverse of [`construct_marked_dp`]: `q_1 = p_1 - p_2`,
/// `q_i = p_{i-1} - p_i` (`i ≥ 3`), `q_2 = s - (p_1 + p_2 + p_3)`.
pub fn recover_psi(m: &MarkedDelPezzo) -> Result<PsiHom> {
    let e = &m.curve;
    let p = &m.points;
    let l = m.tag.rank();
    if p.len() != l {
        return Err(Error::DimensionMismatch {
            expected: l,
            got: p.len(),
        });
    }
    let mut q = vec![EcPoint::Infinity; l];
    q[0] = e.sub_points(&p[0], &p[1])?;
    for i in 3..=l {
        q[i - 1] = e.sub_points(&p[i - 2], &p[i - 1])?;
    }
    let sum = e.add(&e.add(&p[0], &p[1])?, &p[2])?;
    q[1] = e.sub_points(&m.hyperplane, &sum)?;
    PsiHom::new(m.curve, m.tag, q)
}

/// Roots `δ` with `ψ(δ)` of trivial point part, taken as the effective
/// `(-2)`-classes of the surface built from `ψ`. Sorted.
pub fn effective_roots(psi: &PsiHom, lat: &DPLattice) -> Result<Vec<LatticeVector>> {
    check_tag(psi.tag, lat)?;
    let roots = lat.enumerate_roots()?.vectors;
    let mut out = Vec::new();
    for r in roots {
        if psi.eval(&r)?.pt.is_infinity() {
            out.push(r);
        }
    }
    Ok(out)
}

/// Explicit basis of `I_{1,l}/Zκ ≅ P` with lifts in `(δ, γ)` coordinates.
pub fn subgroup_psi_basis(lat: &DPLattice) -> Result<KappaQuotient> {
    lat.quotient_by_kappa()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::RootSystem;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn curve101() -> EllipticCurve {
        EllipticCurve::new(101, 1, 7).unwrap()
    }

    fn lattice(t: TypeTag) -> DPLattice {
        DPLattice::build(&RootSystem::build(t)).unwrap()
    }

    #[test]
    fn curve_validation() {
        assert_eq!(EllipticCurve::new(100, 1, 7), Err(Error::NotPrime(100)));
        assert_eq!(EllipticCurve::new(3, 1, 1), Err(Error::NotPrime(3)));
        assert_eq!(EllipticCurve::new(101, 0, 0), Err(Error::SingularCurve(101)));
        let c = curve101();
        assert!(c.point(0, 0).is_err());
        assert!(matches!(
            c.add(&EcPoint::Affine { x: 0, y: 0 }, &EcPoint::Infinity),
            Err(Error::NotOnCurve { .. })
        ));
    }

    #[test]
    fn sqrt_matches_brute_force() {
        for p in [101u64, 10007, 65537] {
            let c = EllipticCurve::new(p, 1, 7).unwrap();
            for n in 0..200u64 {
                let brute = (0..p).any(|y| y * y % p == n % p);
                match c.sqrt(n) {
                    Some(r) => assert_eq!(r * r % p, n % p),
                    None => assert!(!brute, "{n} mod {p}"),
                }
            }
        }
    }

    #[test]
    fn order_kills_points() {
        let c = curve101();
        // brute force count of affine solutions
        let brute = 1 + (0..101u64)
            .flat_map(|x| (0..101u64).map(move |y| (x, y)))
            .filter(|&(x, y)| (y * y) % 101 == (x * x * x + x + 7) % 101)
            .count() as u64;
        assert_eq!(c.order(), brute);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let pt = c.random_point(&mut rng);
            assert_eq!(c.scalar_mul(brute as i64, &pt).unwrap(), EcPoint::Infinity);
        }
    }

    #[test]
    fn group_identities() {
        let c = curve101();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let p = c.random_point(&mut rng);
        assert_eq!(c.add(&p, &EcPoint::Infinity).unwrap(), p);
        assert_eq!(c.add(&p, &c.neg(&p).unwrap()).unwrap(), EcPoint::Infinity);
        assert_eq!(c.scalar_mul(-3, &p).unwrap(), c.neg(&c.scalar_mul(3, &p).unwrap()).unwrap());
    }

    #[test]
    fn pic_arithmetic() {
        let c = curve101();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let (p, q) = (c.random_point(&mut rng), c.random_point(&mut rng));
        let a = PicClass { curve: c, pt: p, deg: 1 };
        let b = PicClass { curve: c, pt: q, deg: 1 };
        let s = pic_add(&a, &b).unwrap();
        assert_eq!((s.pt, s.deg), (c.add(&p, &q).unwrap(), 2));
        let z = PicClass::zero(c);
        let a0 = PicClass { deg: 0, ..a };
        assert_eq!(pic_add(&a0, &z).unwrap(), a0);
        let other = EllipticCurve::new(103, 1, 7).unwrap();
        assert_eq!(pic_add(&a, &PicClass::zero(other)), Err(Error::CurveMismatch));
    }

    #[test]
    fn degree_bookkeeping() {
        let c = EllipticCurve::new(10007, 1, 7).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for t in TypeTag::ALL {
            let lat = lattice(t);
            let q = subgroup_psi_basis(&lat).unwrap();
            let values: Vec<EcPoint> = (0..t.rank()).map(|_| c.random_point(&mut rng)).collect();
            let psi = PsiHom::from_weight_basis(c, &lat, &q, &values).unwrap();
            let k = psi.eval(lat.kappa()).unwrap();
            assert_eq!(k.deg, t.degree());
            let gbar = lat.project(&q, &lat.gamma());
            let psi_gamma = c.combination(&gbar, &values).unwrap();
            assert_eq!(k.pt, c.scalar_mul(-t.degree(), &psi_gamma).unwrap());
            let h = psi.eval(&lat.hyperplane_formula()).unwrap();
            assert_eq!(h.deg, 3);
            for e in lat.geometric_basis().unwrap().e {
                assert_eq!(psi.eval(&e).unwrap().deg, 1);
            }
        }
    }

    #[test]
    fn trivial_psi_gives_origin_chain() {
        let c = curve101();
        for t in TypeTag::ALL {
            let lat = lattice(t);
            let m = construct_marked_dp(&PsiHom::trivial(c, t), &lat).unwrap();
            assert!(m.points.iter().all(EcPoint::is_infinity));
            assert_eq!(recover_psi(&m).unwrap(), PsiHom::trivial(c, t));
        }
    }

    #[test]
    fn last_point_is_origin() {
        let c = EllipticCurve::new(10007, 2, 3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let lat = lattice(TypeTag::E7);
        let q = subgroup_psi_basis(&lat).unwrap();
        for _ in 0..10 {
            let psi = PsiHom::random(c, &lat, &q, &mut rng).unwrap();
            let m = construct_marked_dp(&psi, &lat).unwrap();
            assert_eq!(*m.points.last().unwrap(), EcPoint::Infinity);
        }
    }

    #[test]
    fn generic_psi_distinct_points() {
        let c = curve101();
        let lat = lattice(TypeTag::E6);
        let q = subgroup_psi_basis(&lat).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let m = (0..100)
            .map(|_| construct_marked_dp(&PsiHom::random(c, &lat, &q, &mut rng).unwrap(), &lat).unwrap())
            .find(MarkedDelPezzo::is_generic)
            .expect("a generic draw within 100 tries");
        assert_eq!(m.points.len(), 6);
    }

    #[test]
    fn recover_constant_points() {
        let c = curve101();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let p = c.random_point(&mut rng);
        let m = MarkedDelPezzo::new(c, TypeTag::E6, vec![p; 6]).unwrap();
        let psi = recover_psi(&m).unwrap();
        for (i, q) in psi.delta_images.iter().enumerate() {
            if i == 1 {
                assert_eq!(*q, c.neg(&c.scalar_mul(3, &p).unwrap()).unwrap());
            } else {
                assert_eq!(*q, EcPoint::Infinity);
            }
        }
    }

    #[test]
    fn effective_roots_cases() {
        let big = EllipticCurve::new(65537, 1, 7).unwrap();
        let lat = lattice(TypeTag::E8);
        assert_eq!(effective_roots(&PsiHom::trivial(big, TypeTag::E8), &lat).unwrap().len(), 240);

        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let mut imgs: Vec<EcPoint> = (0..8).map(|_| big.random_point(&mut rng)).collect();
        let generic = PsiHom::new(big, TypeTag::E8, imgs.clone()).unwrap();
        assert!(effective_roots(&generic, &lat).unwrap().is_empty());

        imgs[0] = EcPoint::Infinity;
        let one = PsiHom::new(big, TypeTag::E8, imgs).unwrap();
        let d1 = lat.delta(1);
        assert_eq!(effective_roots(&one, &lat).unwrap(), vec![d1.neg(), d1]);
    }

    #[test]
    fn quotient_indices() {
        let idx: Vec<i64> = TypeTag::ALL
            .iter()
            .map(|&t| subgroup_psi_basis(&lattice(t)).unwrap().root_lattice_index)
            .collect();
        assert_eq!(idx, vec![4, 3, 2, 1]);
    }

    #[test]
    fn point_json() {
        let pts = vec![EcPoint::Infinity, EcPoint::Affine { x: 3, y: 5 }];
        let s = serde_json::to_string(&pts).unwrap();
        assert_eq!(s, r#"["infinity",{"x":3,"y":5}]"#);
        let back: Vec<EcPoint> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, pts);
        assert!(serde_json::from_str::<EcPoint>(r#""origin""#).is_err());
    }
}
