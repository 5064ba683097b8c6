//! `Gm`-weight bookkeeping: affine (Looijenga) weights, the weights on `Z`
//! coming from the centre of the Levi factor at node 5, and the weighted
//! complete-intersection presentation of the special fibre.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::intmat;
use crate::rootdata::{RootSystem, TypeTag};

/// Multiset of positive integer weights (weight -> multiplicity).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct WeightMultiset(BTreeMap<u32, u32>);

impl WeightMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, w: u32, mult: u32) {
        assert!(w >= 1, "weights are positive");
        if mult > 0 {
            *self.0.entry(w).or_insert(0) += mult;
        }
    }

    /// Removes one copy of `w`, returning whether one was present.
    pub fn take(&mut self, w: u32) -> bool {
        match self.0.get_mut(&w) {
            Some(m) if *m > 1 => {
                *m -= 1;
                true
            }
            Some(_) => {
                self.0.remove(&w);
                true
            }
            None => false,
        }
    }

    pub fn len(&self) -> usize {
        self.0.values().map(|&m| m as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|(&w, &m)| w as u64 * m as u64).sum()
    }

    pub fn multiplicity(&self, w: u32) -> u32 {
        self.0.get(&w).copied().unwrap_or(0)
    }

    /// Ascending list with repetitions.
    pub fn to_vec(&self) -> Vec<u32> {
        self.0
            .iter()
            .flat_map(|(&w, &m)| std::iter::repeat_n(w, m as usize))
            .collect()
    }

    pub fn max(&self) -> Option<u32> {
        self.0.keys().next_back().copied()
    }

    pub fn min(&self) -> Option<u32> {
        self.0.keys().next().copied()
    }
}

impl FromIterator<u32> for WeightMultiset {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        let mut m = WeightMultiset::new();
        for w in iter {
            m.insert(w, 1);
        }
        m
    }
}

/// Exponent notation, e.g. `1^2 2^3 5`.
impl fmt::Display for WeightMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(w, m)| {
                if *m == 1 {
                    w.to_string()
                } else {
                    format!("{w}^{m}")
                }
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

impl Serialize for WeightMultiset {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_vec().serialize(s)
    }
}

/// `{1} ∪ {coefficients of the highest root}`.
pub fn looijenga_weights(rs: &RootSystem) -> WeightMultiset {
    std::iter::once(1u32)
        .chain(rs.highest_root().iter().map(|&c| c as u32))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZWeights {
    pub weights: WeightMultiset,
    /// `d_i` for `i = 1..r`, `r` the node-5 coefficient of the highest root.
    pub d: Vec<i64>,
    /// `#I_5(i)`: number of positive roots with node-5 coefficient `i`.
    pub class_sizes: Vec<usize>,
}

const NODE5: usize = 4;

/// Splits the positive roots by their node-5 coefficient `i` and records
/// `Σ_{α ∈ I_5(i)} α = n_i ϖ_5`. Fails if some sum is not a multiple of `ϖ_5`,
/// or if `n_i (ϖ_5, ϖ_5) ≠ i · #I_5(i)`.
pub fn z_weights(rs: &RootSystem) -> Result<ZWeights> {
    let l = rs.rank();
    let top = rs.highest_root()[NODE5];
    let cartan = rs.cartan();
    let det = intmat::det(cartan);
    let adj = intmat::adjugate(cartan);

    let mut weights = WeightMultiset::new();
    let mut d = Vec::new();
    let mut class_sizes = Vec::new();
    for i in 1..=top {
        let class: Vec<&Vec<i64>> = rs
            .positive_roots()
            .iter()
            .filter(|r| r[NODE5] == i)
            .collect();
        let mut sum = vec![0i64; l];
        for r in &class {
            for (a, x) in sum.iter_mut().zip(rs.root_weight(r)) {
                *a += x;
            }
        }
        if sum.iter().enumerate().any(|(k, &x)| k != NODE5 && x != 0) {
            return Err(Error::Inconsistent(format!(
                "sum over I_5({i}) = {sum:?} is not a multiple of the fifth fundamental weight"
            )));
        }
        let n = sum[NODE5];
        // (ϖ_5, ϖ_5) = adj_55 / det
        if n * adj[NODE5][NODE5] != i * class.len() as i64 * det {
            return Err(Error::Inconsistent(format!(
                "n_{i} = {n} disagrees with #I_5({i}) = {}",
                class.len()
            )));
        }
        if n <= 0 {
            return Err(Error::Inconsistent(format!("n_{i} = {n} is not positive")));
        }
        weights.insert(i as u32, n as u32);
        d.push(n);
        class_sizes.push(class.len());
    }
    Ok(ZWeights {
        weights,
        d,
        class_sizes,
    })
}

/// `1 + Σ d_i`.
pub fn h0_dimension(rs: &RootSystem) -> Result<i64> {
    Ok(1 + z_weights(rs)?.d.iter().sum::<i64>())
}

/// Maximal embedding dimension `max{d, 3}`, `d = 9 - l`.
pub fn embedding_cap(tag: TypeTag) -> usize {
    tag.degree().max(3) as usize
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CIPresentation {
    pub ambient: WeightMultiset,
    pub relations: WeightMultiset,
    pub e: u32,
}

impl CIPresentation {
    pub fn codimension(&self) -> usize {
        self.relations.len()
    }

    pub fn embedding_dimension(&self) -> usize {
        self.ambient.len()
    }

    /// Multiplicity at the origin of a complete intersection cut out by
    /// generic weighted-homogeneous forms: the product over relations of the
    /// least ordinary degree of a monomial of that weighted degree.
    pub fn multiplicity(&self) -> Option<u64> {
        let weights: Vec<u32> = self.ambient.0.keys().copied().collect();
        self.relations
            .to_vec()
            .into_iter()
            .map(|deg| min_order(&weights, deg))
            .try_fold(1u64, |acc, o| o.map(|o| acc * o as u64))
    }
}

/// `X0 = (6) in A3(1,2,3)`.
impl fmt::Display for CIPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |m: &WeightMultiset| {
            m.to_vec()
                .iter()
                .map(|w| w.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(
            f,
            "X0 = ({}) in A{}({})",
            join(&self.relations),
            self.embedding_dimension(),
            join(&self.ambient)
        )
    }
}

/// Fewest monomial factors with weighted degree exactly `deg`.
fn min_order(weights: &[u32], deg: u32) -> Option<u32> {
    let deg = deg as usize;
    let mut best = vec![None::<u32>; deg + 1];
    best[0] = Some(0);
    for t in 1..=deg {
        best[t] = weights
            .iter()
            .filter(|&&w| (w as usize) <= t)
            .filter_map(|&w| best[t - w as usize].map(|b| b + 1))
            .min();
    }
    best[deg]
}

/// Cancels, for each `n ∈ A`, one copy of `e·n` from `B`. Unmatched scaled
/// `A`-weights become relation degrees and unmatched `B`-weights the ambient
/// weights. `None` when more than `cap` ambient weights remain.
pub fn ci_presentation(
    a: &WeightMultiset,
    b: &WeightMultiset,
    e: u32,
    cap: usize,
) -> Option<CIPresentation> {
    assert!(!a.is_empty() && !b.is_empty() && e >= 1);
    let mut ambient = b.clone();
    let mut relations = WeightMultiset::new();
    for n in a.to_vec() {
        if !ambient.take(e * n) {
            relations.insert(e * n, 1);
        }
    }
    (ambient.len() <= cap).then_some(CIPresentation {
        ambient,
        relations,
        e,
    })
}

/// All `e ≥ 1` giving a feasible presentation. Beyond `e = max B` nothing can
/// match, so the scan stops there.
pub fn scan_e(rs: &RootSystem) -> Result<Vec<u32>> {
    let a = looijenga_weights(rs);
    let b = z_weights(rs)?.weights;
    let cap = embedding_cap(rs.tag());
    let top = b.max().unwrap_or(1);
    Ok((1..=top)
        .filter(|&e| ci_presentation(&a, &b, e, cap).is_some())
        .collect())
}

/// Presentation with `e = 1`.
pub fn presentation(rs: &RootSystem) -> Result<CIPresentation> {
    let a = looijenga_weights(rs);
    let b = z_weights(rs)?.weights;
    ci_presentation(&a, &b, 1, embedding_cap(rs.tag())).ok_or_else(|| {
        Error::Inconsistent(format!("{}: e = 1 is infeasible", rs.tag()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(pairs: &[(u32, u32)]) -> WeightMultiset {
        let mut m = WeightMultiset::new();
        for &(w, k) in pairs {
            m.insert(w, k);
        }
        m
    }

    #[test]
    fn looijenga_tables() {
        let lw = |t| looijenga_weights(&RootSystem::build(t));
        assert_eq!(lw(TypeTag::E8), ms(&[(1, 1), (2, 2), (3, 2), (4, 2), (5, 1), (6, 1)]));
        assert_eq!(lw(TypeTag::E7), ms(&[(1, 2), (2, 3), (3, 2), (4, 1)]));
        assert_eq!(lw(TypeTag::E6), ms(&[(1, 3), (2, 3), (3, 1)]));
        assert_eq!(lw(TypeTag::D5), ms(&[(1, 4), (2, 2)]));
        for t in TypeTag::ALL {
            let rs = RootSystem::build(t);
            let w = looijenga_weights(&rs);
            assert_eq!(w.len(), t.rank() + 1);
            assert_eq!(w.sum() as i64, 1 + crate::rootdata::height(rs.highest_root()));
        }
    }

    #[test]
    fn z_weight_tables() {
        let z = |t| z_weights(&RootSystem::build(t)).unwrap();
        let e8 = z(TypeTag::E8);
        assert_eq!(e8.d, vec![2, 3, 3, 2, 1]);
        assert_eq!(e8.weights, ms(&[(1, 2), (2, 3), (3, 3), (4, 2), (5, 1)]));
        assert_eq!(z(TypeTag::E7).d, vec![4, 4, 2]);
        assert_eq!(z(TypeTag::E6).d, vec![6, 3]);
        assert_eq!(z(TypeTag::D5).d, vec![8]);
        for t in TypeTag::ALL {
            assert_eq!(z(t).weights.len(), t.rank() + 3);
        }
    }

    #[test]
    fn h0_is_l_plus_4() {
        for t in TypeTag::ALL {
            assert_eq!(
                h0_dimension(&RootSystem::build(t)).unwrap(),
                t.rank() as i64 + 4
            );
        }
    }

    #[test]
    fn ci_examples() {
        let e8a = ms(&[(1, 1), (2, 2), (3, 2), (4, 2), (5, 1), (6, 1)]);
        let e8b = ms(&[(1, 2), (2, 3), (3, 3), (4, 2), (5, 1)]);
        let p = ci_presentation(&e8a, &e8b, 1, 3).unwrap();
        assert_eq!(p.relations, ms(&[(6, 1)]));
        assert_eq!(p.ambient, ms(&[(1, 1), (2, 1), (3, 1)]));
        assert_eq!(p.to_string(), "X0 = (6) in A3(1,2,3)");
        assert!(ci_presentation(&e8a, &e8b, 2, 3).is_none());

        let d5 = ci_presentation(&ms(&[(1, 4), (2, 2)]), &ms(&[(1, 8)]), 1, 4).unwrap();
        assert_eq!(d5.relations, ms(&[(2, 2)]));
        assert_eq!(d5.ambient, ms(&[(1, 4)]));
    }

    #[test]
    fn presentations_and_invariants() {
        for t in TypeTag::ALL {
            let rs = RootSystem::build(t);
            let p = presentation(&rs).unwrap();
            let d = t.degree();
            assert_eq!(p.embedding_dimension() as i64, d.max(3));
            assert_eq!(p.codimension(), if d == 4 { 2 } else { 1 });
            assert_eq!(p.multiplicity(), Some(d.max(2) as u64));
            assert_eq!(scan_e(&rs).unwrap(), vec![1]);
        }
        let e7 = presentation(&RootSystem::build(TypeTag::E7)).unwrap();
        assert_eq!(e7.to_string(), "X0 = (4) in A3(1,1,2)");
    }

    #[test]
    fn multiset_basics() {
        let mut m: WeightMultiset = [3, 1, 1, 2].into_iter().collect();
        assert_eq!(m.to_vec(), vec![1, 1, 2, 3]);
        assert_eq!(m.to_string(), "1^2 2 3");
        assert!(m.take(1));
        assert!(m.take(1));
        assert!(!m.take(1));
        assert_eq!(m.len(), 2);
    }
}
