//! The odd unimodular lattice `I_{1,l}` with basis `δ_1..δ_l, γ`.
//!
//! The `δ_i` form a root basis of type `E_l` (`δ_i² = -2`, `δ_i·δ_j = 1` on
//! edges) and `γ` is a `(-1)`-class meeting only `δ_l`. Lattice vectors are
//! coefficient vectors of length `l + 1`, the last entry being the `γ`
//! coefficient.
//!
//! The `δ` indices use the blow-up numbering: `γ, δ_l, δ_{l-1}, …, δ_3, δ_1`
//! is a chain and `δ_2` hangs off `δ_4`. For E6–E8 this is the root-data
//! numbering; for D5 nodes 2 and 3 trade places (see [`DPLattice::rootdata_node`]).
//!
//! The anticanonical class `κ` is the unique vector with `κ·δ_i = 0` and
//! `κ·γ = 1`; it satisfies `κ² = 9 - l`.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::intmat::{self, Mat};
use crate::rootdata::{RootSystem, TypeTag};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct LatticeVector(pub Vec<i64>);

impl LatticeVector {
    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn add(&self, other: &LatticeVector) -> LatticeVector {
        LatticeVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &LatticeVector) -> LatticeVector {
        LatticeVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> LatticeVector {
        LatticeVector(self.0.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> LatticeVector {
        self.scale(-1)
    }

    /// Coefficient of `γ`.
    pub fn gamma_coeff(&self) -> i64 {
        *self.0.last().expect("nonempty vector")
    }
}

impl std::str::FromStr for LatticeVector {
    type Err = Error;

    /// Comma separated integers, e.g. `"0,0,0,0,0,0,0,0,1"`.
    fn from_str(s: &str) -> Result<Self> {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad lattice coefficient '{t}'")))
            })
            .collect::<Result<Vec<_>>>()
            .map(LatticeVector)
    }
}

#[derive(Clone, Debug)]
pub struct DPLattice {
    tag: TypeTag,
    l: usize,
    gram: Mat,
    kappa: LatticeVector,
    /// `node_map[i-1]` is the root-data node of lattice root `δ_i`.
    node_map: Vec<usize>,
}

/// Proof data for an exhaustive search: every vector with the requested
/// norm and degree lies in the stated coefficient box.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub norm: i64,
    pub degree: i64,
    pub kappa_squared: i64,
    /// Exact bound `(K·x_i - k·κ_i)² · det C ≤ K·(k² - n·K) · adj(C)_ii`
    /// with `K = κ²`, `k` the degree, `n` the norm, `C` the Cartan matrix
    /// of the `δ_i`.
    pub bound: String,
    pub delta_box: Vec<(i64, i64)>,
    pub gamma_coeff: i64,
    pub candidates_scanned: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Enumeration {
    /// Lexicographically sorted.
    pub vectors: Vec<LatticeVector>,
    pub certificate: Certificate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeometricBasis {
    pub h: LatticeVector,
    /// `e_1..e_l`.
    pub e: Vec<LatticeVector>,
    /// Determinant of the change of basis `(h, e_1..e_l)` -> `(δ, γ)`.
    pub change_det: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NefReport {
    /// `x·m > 0` for all lines and `x·δ ≥ 0` for the given effective roots.
    pub nef: bool,
    /// Same with `x·m ≥ 0`.
    pub nef_weak: bool,
    /// Lines with `x·m = 0`.
    pub boundary_lines: Vec<LatticeVector>,
    pub negative_lines: Vec<LatticeVector>,
    pub negative_effective_roots: Vec<LatticeVector>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KappaQuotient {
    /// `l × (l+1)` matrix of `I_{1,l} -> I_{1,l}/Zκ ≅ Z^l`.
    pub projection: Mat,
    /// Lifts of the quotient basis, in `(δ, γ)` coordinates.
    pub lifts: Vec<LatticeVector>,
    /// Columns: images of `δ_1..δ_l` in the quotient basis.
    pub delta_images: Mat,
    /// `[I/Zκ : image of ⊕Zδ_i]`.
    pub root_lattice_index: i64,
    /// `det(lift_a · δ_b)`; `±1` means the pairing `I/Zκ × Q -> Z` is perfect.
    pub pairing_det: i64,
    /// Invariant factors of the Cartan matrix: the discriminant group of `Q`.
    pub discriminant_factors: Vec<i64>,
}

impl KappaQuotient {
    pub fn discriminant_order(&self) -> i64 {
        self.discriminant_factors.iter().product()
    }
}

impl DPLattice {
    pub fn build(rs: &RootSystem) -> Result<Self> {
        let l = rs.rank();
        let node_map = blowup_numbering(rs)?;
        let c = rs.cartan();
        let mut gram = vec![vec![0i64; l + 1]; l + 1];
        for a in 0..l {
            for b in 0..l {
                gram[a][b] = -c[node_map[a] - 1][node_map[b] - 1];
            }
        }
        gram[l][l] = -1;
        gram[l][l - 1] = 1;
        gram[l - 1][l] = 1;

        let inv = intmat::unimodular_inverse(&gram).ok_or_else(|| {
            Error::Inconsistent(format!("Gram determinant {} is not ±1", intmat::det(&gram)))
        })?;
        let kappa = LatticeVector(inv.iter().map(|row| row[l]).collect());

        let lat = DPLattice {
            tag: rs.tag(),
            l,
            gram,
            kappa,
            node_map,
        };
        let k2 = lat.dot(&lat.kappa, &lat.kappa);
        if k2 != rs.tag().degree() {
            return Err(Error::Inconsistent(format!("κ² = {k2}, expected {}", 9 - l)));
        }
        Ok(lat)
    }

    pub fn tag(&self) -> TypeTag {
        self.tag
    }

    pub fn rank(&self) -> usize {
        self.l
    }

    pub fn gram(&self) -> &Mat {
        &self.gram
    }

    pub fn kappa(&self) -> &LatticeVector {
        &self.kappa
    }

    /// Root-data node of `δ_i` (1-based).
    pub fn rootdata_node(&self, i: usize) -> usize {
        self.node_map[i - 1]
    }

    pub fn node_map(&self) -> &[usize] {
        &self.node_map
    }

    /// `δ_i`, 1-based.
    pub fn delta(&self, i: usize) -> LatticeVector {
        let mut v = vec![0; self.l + 1];
        v[i - 1] = 1;
        LatticeVector(v)
    }

    pub fn gamma(&self) -> LatticeVector {
        let mut v = vec![0; self.l + 1];
        v[self.l] = 1;
        LatticeVector(v)
    }

    pub fn zero(&self) -> LatticeVector {
        LatticeVector(vec![0; self.l + 1])
    }

    pub fn dot(&self, x: &LatticeVector, y: &LatticeVector) -> i64 {
        let (x, y) = (&x.0, &y.0);
        let mut s = 0;
        for (i, row) in self.gram.iter().enumerate() {
            if x[i] == 0 {
                continue;
            }
            s += x[i] * row.iter().zip(y).map(|(g, b)| g * b).sum::<i64>();
        }
        s
    }

    pub fn check_len(&self, x: &LatticeVector) -> Result<()> {
        if x.0.len() != self.l + 1 {
            return Err(Error::DimensionMismatch {
                expected: self.l + 1,
                got: x.0.len(),
            });
        }
        Ok(())
    }

    /// `δ_1 + δ_2 + 2δ_3 + 3Σ_{i≥4} δ_i + 3γ`: the pullback of a line of the
    /// plane under the blow-up description, `h² = 1`, `h·κ = 3`.
    pub fn hyperplane_formula(&self) -> LatticeVector {
        let mut v = vec![3; self.l + 1];
        v[0] = 1;
        v[1] = 1;
        v[2] = 2;
        LatticeVector(v)
    }

    /// Reflection in a `(-2)`-class: `x ↦ x + (x·δ) δ`.
    pub fn reflect(&self, x: &LatticeVector, delta: &LatticeVector) -> LatticeVector {
        let k = self.dot(x, delta);
        x.add(&delta.scale(k))
    }

    /// Exhaustive search for `{x : x² = norm, x·κ = degree}` inside the box
    /// cut out by the negative-definite form on `κ^⊥`.
    pub fn enumerate(&self, norm: i64, degree: i64) -> Result<Enumeration> {
        let l = self.l;
        let big_k = self.dot(&self.kappa, &self.kappa);
        let kap = &self.kappa.0;
        let cartan: Mat = (0..l)
            .map(|a| (0..l).map(|b| -self.gram[a][b]).collect())
            .collect();
        let det_c = intmat::det(&cartan);
        let adj = intmat::adjugate(&cartan);
        let bound = "(K*x_i - k*kappa_i)^2 * det(C) <= K*(k^2 - n*K) * adj(C)_ii".to_string();

        // x·κ is the γ coefficient since κ·δ_i = 0 and κ·γ = 1, and the
        // κ-component of x forces it to equal k·κ_γ / K.
        let radial = degree * degree - norm * big_k;
        let empty = |gamma_coeff| Enumeration {
            vectors: Vec::new(),
            certificate: Certificate {
                norm,
                degree,
                kappa_squared: big_k,
                bound: bound.clone(),
                delta_box: Vec::new(),
                gamma_coeff,
                candidates_scanned: 0,
            },
        };
        if big_k <= 0 || (degree * kap[l]) % big_k != 0 || radial < 0 {
            return Ok(empty(0));
        }
        let gamma_coeff = degree * kap[l] / big_k;
        if gamma_coeff != degree {
            return Err(Error::Inconsistent("κ·x differs from the γ coefficient".into()));
        }

        let mut delta_box = Vec::with_capacity(l);
        for i in 0..l {
            let rhs = big_k * radial * adj[i][i];
            let t = isqrt(rhs / det_c);
            let centre = degree * kap[i];
            let lo = div_ceil(centre - t, big_k);
            let hi = div_floor(centre + t, big_k);
            delta_box.push((lo, hi));
        }
        let candidates_scanned: u64 = delta_box
            .iter()
            .map(|&(lo, hi)| (hi - lo + 1).max(0) as u64)
            .product();

        let mut lin0 = [0i64; 9];
        for (j, slot) in lin0.iter_mut().enumerate().take(l) {
            *slot = self.gram[j][l] * gamma_coeff;
        }
        let q0 = self.gram[l][l] * gamma_coeff * gamma_coeff;
        let neighbours: Vec<Vec<(usize, i64)>> = (0..l)
            .map(|i| {
                (0..l)
                    .filter(|&j| j != i && self.gram[i][j] != 0)
                    .map(|j| (j, self.gram[i][j]))
                    .collect()
            })
            .collect();

        let (lo0, hi0) = delta_box[0];
        let mut vectors: Vec<LatticeVector> = (lo0..=hi0)
            .into_par_iter()
            .flat_map_iter(|v0| {
                let mut out = Vec::new();
                let mut x = [0i64; 9];
                let mut search = Search {
                    gram: &self.gram,
                    neighbours: &neighbours,
                    bounds: &delta_box,
                    norm,
                    l,
                    out: &mut out,
                };
                x[0] = v0;
                let mut lin = lin0;
                let q = q0 + v0 * (2 * lin[0] + self.gram[0][0] * v0);
                for &(j, g) in &neighbours[0] {
                    lin[j] += g * v0;
                }
                search.descend(1, &mut x, lin, q);
                out.into_iter().map(move |mut v: Vec<i64>| {
                    v.push(gamma_coeff);
                    LatticeVector(v)
                })
            })
            .collect();
        vectors.sort();

        Ok(Enumeration {
            vectors,
            certificate: Certificate {
                norm,
                degree,
                kappa_squared: big_k,
                bound,
                delta_box,
                gamma_coeff,
                candidates_scanned,
            },
        })
    }

    /// Lines: `m² = -1`, `m·κ = 1`.
    pub fn enumerate_lines(&self) -> Result<Enumeration> {
        self.enumerate(-1, 1)
    }

    /// Roots: `δ² = -2`, `δ·κ = 0`.
    pub fn enumerate_roots(&self) -> Result<Enumeration> {
        self.enumerate(-2, 0)
    }

    /// The unique line with `m·δ_i ≥ 0` for all `i`, which must be `γ`.
    pub fn dominant_line(&self) -> Result<(LatticeVector, Vec<i64>)> {
        let lines = self.enumerate_lines()?.vectors;
        let dominant: Vec<&LatticeVector> = lines
            .iter()
            .filter(|m| (1..=self.l).all(|i| self.dot(m, &self.delta(i)) >= 0))
            .collect();
        if dominant.len() != 1 {
            return Err(Error::Inconsistent(format!(
                "{} dominant lines instead of one",
                dominant.len()
            )));
        }
        let m = dominant[0].clone();
        let profile = self.delta_profile(&m);
        let mut expect = vec![0; self.l];
        expect[self.l - 1] = 1;
        if m != self.gamma() || profile != expect {
            return Err(Error::Inconsistent(format!(
                "dominant line {m:?} with profile {profile:?} is not γ"
            )));
        }
        Ok((m, profile))
    }

    /// `(x·δ_1, …, x·δ_l)`.
    pub fn delta_profile(&self, x: &LatticeVector) -> Vec<i64> {
        (1..=self.l).map(|i| self.dot(x, &self.delta(i))).collect()
    }

    /// `e_l = γ`, `e_{i-1} = e_i + δ_i` for `i = l..3`, `e_1 = e_2 + δ_1`,
    /// and `h = (κ + Σ e_i) / 3`.
    pub fn geometric_basis(&self) -> Result<GeometricBasis> {
        let l = self.l;
        let mut e = vec![self.zero(); l];
        e[l - 1] = self.gamma();
        for i in (3..=l).rev() {
            e[i - 2] = e[i - 1].add(&self.delta(i));
        }
        e[0] = e[1].add(&self.delta(1));

        let sum = e.iter().fold(self.kappa.clone(), |acc, v| acc.add(v));
        if sum.0.iter().any(|c| c % 3 != 0) {
            return Err(Error::Inconsistent(format!("κ + Σe = {:?} is not divisible by 3", sum.0)));
        }
        let h = LatticeVector(sum.0.iter().map(|c| c / 3).collect());

        let fail = |what: &str| Err(Error::Inconsistent(format!("geometric basis: {what}")));
        if self.dot(&h, &h) != 1 {
            return fail("h² ≠ 1");
        }
        for i in 0..l {
            if self.dot(&h, &e[i]) != 0 {
                return fail("h·e_i ≠ 0");
            }
            for j in 0..l {
                let want = if i == j { -1 } else { 0 };
                if self.dot(&e[i], &e[j]) != want {
                    return fail("e_i·e_j ≠ -δ_ij");
                }
            }
        }
        let line = h.sub(&e[0]).sub(&e[1]).sub(&e[2]);
        if line != self.delta(2) {
            return fail("δ_2 ≠ h - e_1 - e_2 - e_3");
        }
        let columns: Vec<&LatticeVector> = std::iter::once(&h).chain(e.iter()).collect();
        let change: Mat = (0..=l)
            .map(|r| columns.iter().map(|c| c.0[r]).collect())
            .collect();
        let change_det = intmat::det(&change);
        if change_det.abs() != 1 {
            return fail("change of basis is not unimodular");
        }
        Ok(GeometricBasis { h, e, change_det })
    }

    pub fn in_positive_cone(&self, x: &LatticeVector) -> bool {
        self.dot(x, x) > 0 && self.dot(x, &self.kappa) > 0
    }

    /// Nef test for `x` in the positive cone against the lines and the
    /// supplied effective roots. Both the strict and the weak line condition
    /// are reported.
    pub fn is_nef(&self, x: &LatticeVector, effective_roots: &[LatticeVector]) -> Result<NefReport> {
        self.check_len(x)?;
        if !self.in_positive_cone(x) {
            return Err(Error::OutsidePositiveCone);
        }
        let lines = self.enumerate_lines()?.vectors;
        let mut boundary_lines = Vec::new();
        let mut negative_lines = Vec::new();
        for m in lines {
            match self.dot(x, &m) {
                0 => boundary_lines.push(m),
                v if v < 0 => negative_lines.push(m),
                _ => {}
            }
        }
        let negative_effective_roots: Vec<LatticeVector> = effective_roots
            .iter()
            .filter(|d| self.dot(x, d) < 0)
            .cloned()
            .collect();
        let roots_ok = negative_effective_roots.is_empty();
        Ok(NefReport {
            nef: roots_ok && negative_lines.is_empty() && boundary_lines.is_empty(),
            nef_weak: roots_ok && negative_lines.is_empty(),
            boundary_lines,
            negative_lines,
            negative_effective_roots,
        })
    }

    /// Reflects in the first `δ_i` with `x·δ_i < 0` until none remains;
    /// returns the representative and the 1-based reflection word.
    pub fn dominant_representative(&self, x: &LatticeVector) -> (LatticeVector, Vec<usize>) {
        let mut cur = x.clone();
        let mut word = Vec::new();
        while let Some(i) = (1..=self.l).find(|&i| self.dot(&cur, &self.delta(i)) < 0) {
            cur = self.reflect(&cur, &self.delta(i));
            word.push(i);
        }
        (cur, word)
    }

    /// Closure of `start` under the simple reflections.
    pub fn orbit(&self, start: &[LatticeVector]) -> BTreeSet<LatticeVector> {
        let deltas: Vec<LatticeVector> = (1..=self.l).map(|i| self.delta(i)).collect();
        let mut seen: BTreeSet<LatticeVector> = start.iter().cloned().collect();
        let mut frontier: Vec<LatticeVector> = seen.iter().cloned().collect();
        while let Some(x) = frontier.pop() {
            for d in &deltas {
                let y = self.reflect(&x, d);
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        seen
    }

    /// Smith-normal-form description of `I_{1,l} → I_{1,l}/Zκ`.
    pub fn quotient_by_kappa(&self) -> Result<KappaQuotient> {
        let l = self.l;
        let column: Mat = self.kappa.0.iter().map(|&k| vec![k]).collect();
        let snf = intmat::smith_normal_form(&column);
        if snf.invariant_factors() != vec![1] {
            return Err(Error::Inconsistent("κ is not primitive".into()));
        }
        let projection: Mat = snf.u[1..].to_vec();
        let u_inv = intmat::unimodular_inverse(&snf.u)
            .ok_or_else(|| Error::Inconsistent("SNF transform is not unimodular".into()))?;
        let lifts: Vec<LatticeVector> = (1..=l)
            .map(|c| LatticeVector(u_inv.iter().map(|row| row[c]).collect()))
            .collect();
        let delta_images: Mat = projection
            .iter()
            .map(|row| (0..l).map(|i| row[i]).collect())
            .collect();
        let root_lattice_index = intmat::det(&delta_images).abs();
        let pairing: Mat = lifts
            .iter()
            .map(|w| (1..=l).map(|i| self.dot(w, &self.delta(i))).collect())
            .collect();
        let pairing_det = intmat::det(&pairing);
        let cartan: Mat = (0..l)
            .map(|a| (0..l).map(|b| -self.gram[a][b]).collect())
            .collect();
        let discriminant_factors = intmat::smith_normal_form(&cartan).invariant_factors();
        Ok(KappaQuotient {
            projection,
            lifts,
            delta_images,
            root_lattice_index,
            pairing_det,
            discriminant_factors,
        })
    }

    /// Coordinates of `x` in the quotient basis of `I/Zκ`.
    pub fn project(&self, q: &KappaQuotient, x: &LatticeVector) -> Vec<i64> {
        intmat::mul(&q.projection, &x.0.iter().map(|&c| vec![c]).collect::<Mat>())
            .into_iter()
            .map(|r| r[0])
            .collect()
    }

    /// Simple system of a root subsystem closed under negation: positive
    /// roots for a generic linear functional that are not sums of two
    /// positive roots. Sorted lexicographically.
    pub fn simple_system(&self, roots: &[LatticeVector]) -> Vec<LatticeVector> {
        let span = roots
            .iter()
            .flat_map(|r| r.0.iter())
            .map(|c| c.abs())
            .max()
            .unwrap_or(0);
        let base = 2 * span + 1;
        let weights: Vec<i64> = (0..=self.l)
            .scan(1i64, |p, _| {
                let w = *p;
                *p *= base;
                Some(w)
            })
            .collect();
        let f = |x: &LatticeVector| -> i64 { x.0.iter().zip(&weights).map(|(a, b)| a * b).sum() };
        let positive: BTreeSet<LatticeVector> =
            roots.iter().filter(|r| f(r) > 0).cloned().collect();
        positive
            .iter()
            .filter(|r| {
                !positive
                    .iter()
                    .any(|a| a != *r && positive.contains(&r.sub(a)))
            })
            .cloned()
            .collect()
    }

    /// `-(s_a · s_b)`.
    pub fn cartan_of(&self, simple: &[LatticeVector]) -> Mat {
        simple
            .iter()
            .map(|a| simple.iter().map(|b| -self.dot(a, b)).collect())
            .collect()
    }
}

struct Search<'a> {
    gram: &'a Mat,
    neighbours: &'a [Vec<(usize, i64)>],
    bounds: &'a [(i64, i64)],
    norm: i64,
    l: usize,
    out: &'a mut Vec<Vec<i64>>,
}

impl Search<'_> {
    /// `lin[j]` holds `Σ_{fixed k} G_jk x_k`, `q` the value of the form on
    /// the fixed coordinates.
    fn descend(&mut self, i: usize, x: &mut [i64; 9], lin: [i64; 9], q: i64) {
        if i == self.l {
            if q == self.norm {
                self.out.push(x[..self.l].to_vec());
            }
            return;
        }
        let (lo, hi) = self.bounds[i];
        let gii = self.gram[i][i];
        for v in lo..=hi {
            x[i] = v;
            let mut next = lin;
            for &(j, g) in &self.neighbours[i] {
                next[j] += g * v;
            }
            self.descend(i + 1, x, next, q + v * (2 * lin[i] + gii * v));
        }
    }
}

/// Lattice numbering from root-data numbering: the path from node `l` to the
/// branch keeps its labels, the two-node arm becomes `3, 1` (3 next to the
/// branch) and the one-node arm becomes 2.
fn blowup_numbering(rs: &RootSystem) -> Result<Vec<usize>> {
    let d = rs.diagram();
    let l = rs.rank();
    let branch = d.branch_node();
    let bad = || Error::Inconsistent(format!("{}: unexpected diagram shape", rs.tag()));

    // walk from l towards the branch node
    let mut path = vec![l];
    let mut prev = 0;
    let mut cur = l;
    while cur != branch {
        let next = d
            .neighbours(cur)
            .into_iter()
            .filter(|&n| n != prev)
            .min_by_key(|&n| n.abs_diff(branch))
            .ok_or_else(bad)?;
        prev = cur;
        cur = next;
        path.push(cur);
    }
    let expected_path: Vec<usize> = (branch..=l).rev().collect();
    if path != expected_path {
        return Err(bad());
    }

    let arm = |start: usize| -> Vec<usize> {
        let mut arm = vec![start];
        let (mut p, mut c) = (branch, start);
        loop {
            let nx: Vec<usize> = d.neighbours(c).into_iter().filter(|&n| n != p).collect();
            match nx.as_slice() {
                [n] => {
                    arm.push(*n);
                    p = c;
                    c = *n;
                }
                _ => break,
            }
        }
        arm
    };
    let arms: Vec<Vec<usize>> = d
        .neighbours(branch)
        .into_iter()
        .filter(|&n| n != prev && !path.contains(&n))
        .map(arm)
        .collect();
    let long = arms.iter().find(|a| a.len() == 2).ok_or_else(bad)?;
    let short = arms.iter().find(|a| a.len() == 1).ok_or_else(bad)?;

    let mut map = vec![0usize; l];
    map[0] = long[1];
    map[1] = short[0];
    map[2] = long[0];
    for i in branch..=l {
        map[i - 1] = i;
    }
    Ok(map)
}

fn isqrt(n: i64) -> i64 {
    if n <= 0 {
        return 0;
    }
    let mut r = (n as f64).sqrt() as i64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

fn div_floor(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

fn div_ceil(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}
