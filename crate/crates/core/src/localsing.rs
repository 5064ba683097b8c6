//! Milnor numbers of hypersurface singularities at the origin of `A^3`.
//!
//! `μ_N = dim k[x,y,z] / (J_f + m^N)` is computed by sparse elimination on
//! the monomials of degree `< N`. The sequence is nondecreasing and
//! `μ_N = μ_{N+1}` forces `m^N` to vanish in the local algebra (Nakayama),
//! so the first repeated value is the Milnor number.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

pub type Monomial = [u32; 3];

const VARS: [char; 3] = ['x', 'y', 'z'];

/// Exact polynomial in `x, y, z` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LocalPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl LocalPoly {
    pub fn zero() -> Self {
        LocalPoly::default()
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = LocalPoly::zero();
        p.add_term([0, 0, 0], c);
        p
    }

    pub fn var(i: usize) -> Self {
        let mut m = [0; 3];
        m[i] = 1;
        let mut p = LocalPoly::zero();
        p.add_term(m, BigRational::one());
        p
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        let slot = self.terms.entry(m).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Lowest total degree of a term; `None` for the zero polynomial.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.iter().sum()).min()
    }

    pub fn add(&self, other: &LocalPoly) -> LocalPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn scale(&self, k: &BigRational) -> LocalPoly {
        let mut out = LocalPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, c * k);
        }
        out
    }

    pub fn mul(&self, other: &LocalPoly) -> LocalPoly {
        let mut out = LocalPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term([m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2]], c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> LocalPoly {
        (0..e).fold(LocalPoly::constant(BigRational::one()), |acc, _| acc.mul(self))
    }

    /// `∂/∂x_i`.
    pub fn derivative(&self, i: usize) -> LocalPoly {
        let mut out = LocalPoly::zero();
        for (m, c) in &self.terms {
            if m[i] > 0 {
                let mut n = *m;
                n[i] -= 1;
                out.add_term(n, c * BigRational::from_integer(BigInt::from(m[i])));
            }
        }
        out
    }

    /// Substitutes `x_i ↦ Σ_j a_ij x_j`.
    pub fn linear_substitution(&self, a: &[[BigRational; 3]; 3]) -> LocalPoly {
        let images: Vec<LocalPoly> = (0..3)
            .map(|i| {
                let mut p = LocalPoly::zero();
                for j in 0..3 {
                    p = p.add(&LocalPoly::var(j).scale(&a[i][j]));
                }
                p
            })
            .collect();
        let mut out = LocalPoly::zero();
        for (m, c) in &self.terms {
            let t = (0..3).fold(LocalPoly::constant(c.clone()), |acc, i| {
                acc.mul(&images[i].pow(m[i]))
            });
            out = out.add(&t);
        }
        out
    }
}

impl fmt::Display for LocalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let sign = if c.is_negative() { "-" } else if k > 0 { "+" } else { "" };
            write!(f, "{sign}")?;
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.iter().all(|&e| e == 0) {
                factors.push(abs.to_string());
            }
            for (v, &e) in VARS.iter().zip(m) {
                match e {
                    0 => {}
                    1 => factors.push(v.to_string()),
                    _ => factors.push(format!("{v}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl FromStr for LocalPoly {
    type Err = Error;

    /// Sums of terms like `3/2*x^2*y`, `-z^2`, `x3y` is not accepted; factors
    /// are separated by `*`.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut poly = LocalPoly::zero();
        let mut start = 0;
        let bytes = s.as_bytes();
        for i in 1..=bytes.len() {
            if i == bytes.len() || ((bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^') {
                let (m, c) = parse_term(&s[start..i])?;
                poly.add_term(m, c);
                start = i;
            }
        }
        Ok(poly)
    }
}

fn parse_term(t: &str) -> Result<(Monomial, BigRational)> {
    let bad = || Error::Parse(format!("bad term '{t}'"));
    let (neg, body) = match t.as_bytes().first() {
        Some(b'-') => (true, &t[1..]),
        Some(b'+') => (false, &t[1..]),
        _ => (false, t),
    };
    if body.is_empty() {
        return Err(bad());
    }
    let mut coeff = BigRational::one();
    let mut mono = [0u32; 3];
    for factor in body.split('*') {
        if factor.is_empty() {
            return Err(bad());
        }
        let first = factor.chars().next().unwrap();
        if let Some(v) = VARS.iter().position(|&c| c == first) {
            let exp = match &factor[1..] {
                "" => 1,
                rest => rest
                    .strip_prefix('^')
                    .and_then(|e| e.parse::<u32>().ok())
                    .ok_or_else(bad)?,
            };
            mono[v] += exp;
        } else {
            coeff *= parse_rational(factor).ok_or_else(bad)?;
        }
    }
    if neg {
        coeff = -coeff;
    }
    Ok((mono, coeff))
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

/// Coefficient field for the elimination.
pub trait Field: Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send;

    fn zero(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Inverse of a nonzero element.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn embed(&self, q: &BigRational) -> Result<Self::Elem>;
    fn name(&self) -> String;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub const DEFAULT_P: u64 = 10007;

    pub fn new(p: u64) -> Result<Self> {
        let prime = p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
        if !prime || p >= 1 << 31 {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut b: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % self.p;
            }
            b = b * b % self.p;
            e >>= 1;
        }
        acc
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: Self::DEFAULT_P }
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }

    fn inv(&self, a: &u64) -> u64 {
        self.pow(*a, self.p - 2)
    }

    fn embed(&self, q: &BigRational) -> Result<u64> {
        let p = BigInt::from(self.p);
        let reduce = |n: &BigInt| ((n % &p + &p) % &p).to_u64().expect("residue fits");
        let num = reduce(q.numer());
        let den = reduce(q.denom());
        if den == 0 {
            return Err(Error::BadCoefficient(format!("{q} mod {}", self.p)));
        }
        Ok(num * self.inv(&den) % self.p)
    }

    fn name(&self) -> String {
        format!("F_{}", self.p)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RationalField;

impl Field for RationalField {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }

    fn embed(&self, q: &BigRational) -> Result<BigRational> {
        Ok(q.clone())
    }

    fn name(&self) -> String {
        "Q".into()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Milnor {
    /// `μ_N = μ_{N+1}` first at `N = stabilized_at`.
    Isolated { mu: usize, stabilized_at: usize },
    /// No repetition below the cap: the cap is too small or the singularity
    /// is not isolated.
    NotStabilized { cap: usize, dims: Vec<usize> },
}

impl Milnor {
    pub fn mu(&self) -> Option<usize> {
        match self {
            Milnor::Isolated { mu, .. } => Some(*mu),
            Milnor::NotStabilized { .. } => None,
        }
    }
}

/// Monomials of total degree `< n`, by degree then lexicographically.
fn monomials_below(n: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for d in 0..n {
        for a in (0..=d).rev() {
            for b in (0..=d - a).rev() {
                out.push([a, b, d - a - b]);
            }
        }
    }
    out
}

fn check_critical(f: &LocalPoly) -> Result<()> {
    if !f.coeff(&[0, 0, 0]).is_zero() {
        return Err(Error::NonzeroConstant);
    }
    if f.order() == Some(1) {
        return Err(Error::NotCritical);
    }
    Ok(())
}

/// `[μ_1, …, μ_cap]` with `μ_N = dim k[x,y,z]/(J_f + m^N)`.
pub fn local_algebra_dims<F: Field>(f: &LocalPoly, cap: usize, field: &F) -> Result<Vec<usize>> {
    check_critical(f)?;
    let cap_u = u32::try_from(cap).map_err(|_| Error::NonPositiveBound(cap as i64))?;
    if cap == 0 {
        return Err(Error::NonPositiveBound(0));
    }
    let monos = monomials_below(cap_u);
    let index: HashMap<Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (*m, i)).collect();

    let partials: Vec<Vec<(Monomial, F::Elem)>> = (0..3)
        .map(|i| {
            f.derivative(i)
                .terms()
                .iter()
                .map(|(m, c)| Ok((*m, field.embed(c)?)))
                .filter(|r| !matches!(r, Ok((_, c)) if field.is_zero(c)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;

    // rows m·∂_i f truncated below the cap, sorted by leading monomial
    let mut rows: Vec<Vec<(usize, F::Elem)>> = Vec::new();
    for part in &partials {
        for mult in &monos {
            let mut row: Vec<(usize, F::Elem)> = part
                .iter()
                .filter_map(|(m, c)| {
                    let prod = [m[0] + mult[0], m[1] + mult[1], m[2] + mult[2]];
                    index.get(&prod).map(|&j| (j, c.clone()))
                })
                .collect();
            if !row.is_empty() {
                row.sort_by_key(|e| e.0);
                rows.push(row);
            }
        }
    }
    rows.sort_by_key(|r| r[0].0);

    let mut pivots: HashMap<usize, Vec<(usize, F::Elem)>> = HashMap::new();
    for mut row in rows {
        while let Some((lead, lc)) = row.first().cloned() {
            let Some(piv) = pivots.get(&lead) else { break };
            row = axpy(field, &row, piv, &lc);
        }
        if let Some((lead, lc)) = row.first().cloned() {
            let inv = field.inv(&lc);
            let normalized = row.into_iter().map(|(j, c)| (j, field.mul(&c, &inv))).collect();
            pivots.insert(lead, normalized);
        }
    }

    let mut dims = Vec::with_capacity(cap);
    let mut count = 0;
    let mut k = 0;
    for n in 1..=cap_u {
        while k < monos.len() && monos[k].iter().sum::<u32>() < n {
            if !pivots.contains_key(&k) {
                count += 1;
            }
            k += 1;
        }
        dims.push(count);
    }
    Ok(dims)
}

/// `row - c·piv` for a pivot with leading coefficient 1.
fn axpy<F: Field>(
    field: &F,
    row: &[(usize, F::Elem)],
    piv: &[(usize, F::Elem)],
    c: &F::Elem,
) -> Vec<(usize, F::Elem)> {
    let mut out = Vec::with_capacity(row.len() + piv.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < piv.len() {
        let take_row = j == piv.len() || (i < row.len() && row[i].0 < piv[j].0);
        let take_piv = i == row.len() || (j < piv.len() && piv[j].0 < row[i].0);
        if take_row {
            out.push(row[i].clone());
            i += 1;
        } else if take_piv {
            out.push((piv[j].0, field.sub(&field.zero(), &field.mul(c, &piv[j].1))));
            j += 1;
        } else {
            let v = field.sub(&row[i].1, &field.mul(c, &piv[j].1));
            if !field.is_zero(&v) {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn milnor_number<F: Field>(f: &LocalPoly, cap: usize, field: &F) -> Result<Milnor> {
    let dims = local_algebra_dims(f, cap, field)?;
    Ok(match dims.windows(2).position(|w| w[0] == w[1]) {
        Some(k) => Milnor::Isolated {
            mu: dims[k],
            stabilized_at: k + 1,
        },
        None => Milnor::NotStabilized { cap, dims },
    })
}

/// `z² + y³ + x⁶ + δ·x⁴y + t·x³y`.
pub fn e8_family(delta: i64, t: i64) -> LocalPoly {
    let mut f = LocalPoly::zero();
    let int = |k: i64| BigRational::from_integer(BigInt::from(k));
    f.add_term([0, 0, 2], int(1));
    f.add_term([0, 3, 0], int(1));
    f.add_term([6, 0, 0], int(1));
    f.add_term([4, 1, 0], int(delta));
    f.add_term([3, 1, 0], int(t));
    f
}

/// `x^a + y^b + z^c`.
pub fn brieskorn_pham(a: u32, b: u32, c: u32) -> LocalPoly {
    let mut f = LocalPoly::zero();
    f.add_term([a, 0, 0], BigRational::one());
    f.add_term([0, b, 0], BigRational::one());
    f.add_term([0, 0, c], BigRational::one());
    f
}
