//! Simply laced root data for `D5, E6, E7, E8` in Bourbaki numbering.
//!
//! Roots are stored as integer coefficient vectors over the simple roots.
//! Weights are stored in fundamental-weight coordinates, so that pairing a
//! coroot-coordinate vector `v = Σ r_i α_i^∨` with a weight `w = Σ w_j ϖ_j`
//! is the plain dot product `Σ r_i w_i`. A root with coefficients `c` has
//! weight coordinates `C·c` where `C` is the (symmetric) Cartan matrix.
//!
//! Node numbering. For the E types the branch node is 4 and the long chain is
//! `1-3-4-5-6-7-8` with 2 hanging off 4. For D5 the branch node is also 4 and
//! node 5 sits on a short arm; the remaining labels are Bourbaki's D5 labels
//! with 3 and 4 exchanged, i.e. edges `{1,2},{2,4},{3,4},{4,5}`. Every table
//! downstream (m-vectors, `deg u_J`) depends on which node is called 5.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// One of the four supported types.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TypeTag {
    D5,
    E6,
    E7,
    E8,
}

impl TypeTag {
    pub const ALL: [TypeTag; 4] = [TypeTag::D5, TypeTag::E6, TypeTag::E7, TypeTag::E8];

    pub fn rank(self) -> usize {
        match self {
            TypeTag::D5 => 5,
            TypeTag::E6 => 6,
            TypeTag::E7 => 7,
            TypeTag::E8 => 8,
        }
    }

    /// Degree `9 - l` of the associated del Pezzo surface.
    pub fn degree(self) -> i64 {
        9 - self.rank() as i64
    }
}

impl fmt::Display for TypeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TypeTag::D5 => "D5",
            TypeTag::E6 => "E6",
            TypeTag::E7 => "E7",
            TypeTag::E8 => "E8",
        };
        f.write_str(s)
    }
}

impl FromStr for TypeTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "D5" | "E5" => Ok(TypeTag::D5),
            "E6" => Ok(TypeTag::E6),
            "E7" => Ok(TypeTag::E7),
            "E8" => Ok(TypeTag::E8),
            _ => Err(Error::UnsupportedType(s.to_string())),
        }
    }
}

/// Dynkin diagram with 1-based node labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DynkinDiagram {
    tag: TypeTag,
    edges: Vec<(usize, usize)>,
}

const E8_EDGES: [(usize, usize); 7] = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)];
const D5_EDGES: [(usize, usize); 4] = [(1, 2), (2, 4), (3, 4), (4, 5)];

impl DynkinDiagram {
    pub fn new(tag: TypeTag) -> Self {
        let l = tag.rank();
        let edges = match tag {
            TypeTag::D5 => D5_EDGES.to_vec(),
            _ => E8_EDGES
                .iter()
                .copied()
                .filter(|&(a, b)| a <= l && b <= l)
                .collect(),
        };
        DynkinDiagram { tag, edges }
    }

    pub fn tag(&self) -> TypeTag {
        self.tag
    }

    pub fn rank(&self) -> usize {
        self.tag.rank()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_edge(&self, i: usize, j: usize) -> bool {
        self.edges
            .iter()
            .any(|&(a, b)| (a, b) == (i, j) || (a, b) == (j, i))
    }

    pub fn neighbours(&self, i: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == i {
                    Some(b)
                } else if b == i {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// The unique node of valence 3.
    pub fn branch_node(&self) -> usize {
        (1..=self.rank())
            .find(|&i| self.neighbours(i).len() == 3)
            .expect("every supported diagram has a branch node")
    }

    /// Cartan matrix, 0-based indices.
    pub fn cartan(&self) -> Vec<Vec<i64>> {
        let l = self.rank();
        let mut c = vec![vec![0i64; l]; l];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        for &(a, b) in &self.edges {
            c[a - 1][b - 1] = -1;
            c[b - 1][a - 1] = -1;
        }
        c
    }
}

/// A finite simply laced root system built by closure from its diagram.
#[derive(Clone, Debug)]
pub struct RootSystem {
    diagram: DynkinDiagram,
    cartan: Vec<Vec<i64>>,
    /// Sorted by height, then lexicographically.
    positive_roots: Vec<Vec<i64>>,
    highest_root: Vec<i64>,
    two_rho: Vec<i64>,
}

/// JSON shape of a root system.
#[derive(Clone, Debug, Serialize)]
pub struct RootSystemDoc {
    #[serde(rename = "type")]
    pub tag: TypeTag,
    pub cartan: Vec<Vec<i64>>,
    pub positive_roots: Vec<Vec<i64>>,
    pub highest_root: Vec<i64>,
    pub m_vector: Vec<i64>,
}

impl RootSystem {
    /// Builds the positive roots by closure: starting from the simple roots,
    /// `β + α_i` is added whenever the `α_i`-string through `β` continues
    /// upwards, i.e. `q - ⟨β, α_i^∨⟩ > 0` where `q` counts how far the string
    /// extends downwards.
    pub fn build(tag: TypeTag) -> Self {
        let diagram = DynkinDiagram::new(tag);
        let cartan = diagram.cartan();
        let l = diagram.rank();

        let simple: Vec<Vec<i64>> = (0..l).map(|i| unit(l, i)).collect();
        let mut known: HashSet<Vec<i64>> = simple.iter().cloned().collect();
        let mut layer = simple.clone();
        let mut all = simple;

        while !layer.is_empty() {
            let mut next: Vec<Vec<i64>> = Vec::new();
            for beta in &layer {
                let w = mat_vec(&cartan, beta);
                for i in 0..l {
                    let mut q = 0;
                    let mut down = beta.clone();
                    loop {
                        down[i] -= 1;
                        if known.contains(&down) {
                            q += 1;
                        } else {
                            break;
                        }
                    }
                    if q - w[i] > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if known.insert(up.clone()) {
                            next.push(up);
                        }
                    }
                }
            }
            next.sort();
            all.extend(next.iter().cloned());
            layer = next;
        }

        all.sort_by(|a, b| height(a).cmp(&height(b)).then_with(|| a.cmp(b)));
        let highest_root = all.last().cloned().expect("nonempty root system");
        let two_rho = all.iter().fold(vec![0i64; l], |mut acc, r| {
            for (a, x) in acc.iter_mut().zip(mat_vec(&cartan, r)) {
                *a += x;
            }
            acc
        });

        RootSystem {
            diagram,
            cartan,
            positive_roots: all,
            highest_root,
            two_rho,
        }
    }

    pub fn tag(&self) -> TypeTag {
        self.diagram.tag()
    }

    pub fn rank(&self) -> usize {
        self.diagram.rank()
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// Highest root `θ` in simple-root coefficients.
    pub fn highest_root(&self) -> &[i64] {
        &self.highest_root
    }

    /// `2ρ` in fundamental-weight coordinates.
    pub fn two_rho(&self) -> &[i64] {
        &self.two_rho
    }

    /// Fundamental-weight coordinates of a root given by simple-root coefficients.
    pub fn root_weight(&self, coeffs: &[i64]) -> Vec<i64> {
        mat_vec(&self.cartan, coeffs)
    }

    /// `⟨v, w⟩` for `v` in coroot coordinates and `w` in weight coordinates.
    pub fn pair(&self, v: &[i64], w: &[i64]) -> Result<i64> {
        let l = self.rank();
        for len in [v.len(), w.len()] {
            if len != l {
                return Err(Error::DimensionMismatch {
                    expected: l,
                    got: len,
                });
            }
        }
        Ok(v.iter().zip(w).map(|(a, b)| a * b).sum())
    }

    /// Sum of the positive roots that involve some node of `nodes`
    /// (the roots of the unipotent radical of `P_J`), in weight coordinates.
    pub fn two_rho_j(&self, nodes: &[usize]) -> Result<Vec<i64>> {
        let mask = self.node_mask(nodes)?;
        Ok(self.two_rho_mask(mask))
    }

    /// Same as [`two_rho_j`](Self::two_rho_j) with `J` given as a bitmask
    /// (bit `i-1` set for node `i`).
    pub fn two_rho_mask(&self, mask: u32) -> Vec<i64> {
        let l = self.rank();
        let mut acc = vec![0i64; l];
        for r in &self.positive_roots {
            if r.iter().enumerate().any(|(i, &c)| c > 0 && mask >> i & 1 == 1) {
                for (a, x) in acc.iter_mut().zip(self.root_weight(r)) {
                    *a += x;
                }
            }
        }
        acc
    }

    pub(crate) fn node_mask(&self, nodes: &[usize]) -> Result<u32> {
        if nodes.is_empty() {
            return Err(Error::EmptySubset);
        }
        let mut mask = 0u32;
        for &j in nodes {
            if j == 0 || j > self.rank() {
                return Err(Error::NodeOutOfRange(j));
            }
            mask |= 1 << (j - 1);
        }
        Ok(mask)
    }

    /// `m_j` with `2ρ_{{j}} = m_j ϖ_j`.
    pub fn m_vector(&self) -> Result<Vec<i64>> {
        (1..=self.rank())
            .map(|j| {
                let w = self.two_rho_j(&[j])?;
                if w.iter().enumerate().any(|(k, &x)| k != j - 1 && x != 0) {
                    return Err(Error::Inconsistent(format!(
                        "2rho_{{{j}}} = {w:?} is not a multiple of the fundamental weight {j}"
                    )));
                }
                Ok(w[j - 1])
            })
            .collect()
    }

    /// Simple reflection `s_i(w) = w - ⟨α_i^∨, w⟩ α_i` on weight coordinates.
    pub fn reflect(&self, i: usize, w: &[i64]) -> Result<Vec<i64>> {
        if i == 0 || i > self.rank() {
            return Err(Error::NodeOutOfRange(i));
        }
        if w.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: w.len(),
            });
        }
        let k = w[i - 1];
        Ok(w
            .iter()
            .zip(&self.cartan[i - 1])
            .map(|(x, c)| x - k * c)
            .collect())
    }

    pub fn to_doc(&self) -> Result<RootSystemDoc> {
        Ok(RootSystemDoc {
            tag: self.tag(),
            cartan: self.cartan.clone(),
            positive_roots: self.positive_roots.clone(),
            highest_root: self.highest_root.clone(),
            m_vector: self.m_vector()?,
        })
    }
}

pub fn height(coeffs: &[i64]) -> i64 {
    coeffs.iter().sum()
}

pub(crate) fn unit(l: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; l];
    v[i] = 1;
    v
}

pub(crate) fn mat_vec(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

/// Finds a permutation `p` with `a[p[i]][p[j]] == b[i][j]`, if any.
pub fn cartan_isomorphism(a: &[Vec<i64>], b: &[Vec<i64>]) -> Option<Vec<usize>> {
    let n = a.len();
    if b.len() != n {
        return None;
    }
    let signature = |m: &[Vec<i64>], i: usize| {
        let mut row = m[i].clone();
        row.sort_unstable();
        row
    };
    let sig_a: Vec<_> = (0..n).map(|i| signature(a, i)).collect();
    let sig_b: Vec<_> = (0..n).map(|i| signature(b, i)).collect();

    fn extend(
        a: &[Vec<i64>],
        b: &[Vec<i64>],
        sig_a: &[Vec<i64>],
        sig_b: &[Vec<i64>],
        perm: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let i = perm.len();
        if i == a.len() {
            return true;
        }
        for cand in 0..a.len() {
            if used[cand] || sig_a[cand] != sig_b[i] {
                continue;
            }
            if perm.iter().enumerate().any(|(j, &pj)| a[cand][pj] != b[i][j]) {
                continue;
            }
            used[cand] = true;
            perm.push(cand);
            if extend(a, b, sig_a, sig_b, perm, used) {
                return true;
            }
            perm.pop();
            used[cand] = false;
        }
        false
    }

    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    extend(a, b, &sig_a, &sig_b, &mut perm, &mut used).then_some(perm)
}

/// Index lookup for the positive roots of a system.
pub fn root_index(rs: &RootSystem) -> HashMap<Vec<i64>, usize> {
    rs.positive_roots()
        .iter()
        .enumerate()
        .map(|(i, r)| (r.clone(), i))
        .collect()
}
