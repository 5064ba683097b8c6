//! Cocharacter descent and the instability classifier.
//!
//! A cocharacter is an integer vector `r` in the simple-coroot basis,
//! representing `Σ r_i α_i^∨`. It is `≤ 0` when every `r_i ≤ 0`, i.e. when
//! its pairing with each fundamental weight is non-positive.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootdata::RootSystem;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Cocharacter(pub Vec<i64>);

impl Cocharacter {
    pub fn zero(l: usize) -> Self {
        Cocharacter(vec![0; l])
    }

    /// `-α_i^∨` summed over the given (1-based) nodes.
    pub fn neg_coroots(l: usize, nodes: &[usize]) -> Self {
        let mut v = vec![0; l];
        for &i in nodes {
            v[i - 1] -= 1;
        }
        Cocharacter(v)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn is_nonpositive(&self) -> bool {
        self.0.iter().all(|&r| r <= 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Descent {
    pub result: Cocharacter,
    /// 1-based node subtracted at each step.
    pub trace: Vec<usize>,
}

/// Bend-and-break descent: while `v` is not `≤ 0`, subtract `α_j^∨` for the
/// smallest `j` with `⟨v, α_j⟩ > 0`. Each step lowers `⟨v, 2ρ⟩` by exactly 2.
///
/// If `v` is not `≤ 0` it has a positive coefficient; an anti-dominant
/// coweight has all coefficients `≤ 0`, so some `⟨v, α_j⟩` is positive and a
/// step is always available.
pub fn descend(rs: &RootSystem, v: &Cocharacter) -> Result<Descent> {
    let l = rs.rank();
    if v.0.len() != l {
        return Err(Error::DimensionMismatch {
            expected: l,
            got: v.0.len(),
        });
    }
    let cartan = rs.cartan();
    let mut cur = v.0.clone();
    let mut trace = Vec::new();
    while cur.iter().any(|&r| r > 0) {
        // ⟨v, α_j⟩ = Σ_i r_i C_ij
        let j = (0..l)
            .find(|&j| (0..l).map(|i| cur[i] * cartan[i][j]).sum::<i64>() > 0)
            .ok_or_else(|| {
                Error::Inconsistent(format!("no descending direction from {cur:?}"))
            })?;
        cur[j] -= 1;
        trace.push(j + 1);
    }
    Ok(Descent {
        result: Cocharacter(cur),
        trace,
    })
}

/// `deg u_J = ⟨Σ r_i α_i^∨, 2ρ_J⟩` for `r ≥ 0`.
pub fn deg_u(rs: &RootSystem, r: &[i64], nodes: &[usize]) -> Result<i64> {
    if r.iter().any(|&x| x < 0) {
        return Err(Error::NegativeCoefficient("r"));
    }
    let w = rs.two_rho_j(nodes)?;
    rs.pair(r, &w)
}

/// Which subsets `J` the classifier tests against.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SubsetFilter {
    /// Every nonempty `J ⊆ {1..l}`.
    AllSubsets,
    /// Only `|J| ∈ {1, 2}`.
    SingletonsAndPairs,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Regular,
    Subregular,
}

impl Mode {
    pub fn bound(self, l: usize) -> i64 {
        match self {
            Mode::Regular => l as i64 + 2,
            Mode::Subregular => l as i64 + 4,
        }
    }

    pub fn require_node5(self) -> bool {
        matches!(self, Mode::Subregular)
    }
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "regular" => Ok(Mode::Regular),
            "subregular" => Ok(Mode::Subregular),
            other => Err(format!("unknown mode '{other}'")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    /// The candidate `r ≥ 0`; the cocharacter is `-Σ r_i α_i^∨`.
    pub r: Vec<i64>,
    /// First rejecting subset (1-based nodes) and its degree, if any.
    pub rejected_by: Option<Vec<usize>>,
    pub rejecting_degree: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub bound: i64,
    pub require_node5: bool,
    pub filter: SubsetFilter,
    pub subsets_tested: usize,
    /// Sorted lexicographically by coefficients.
    pub cocharacters: Vec<Cocharacter>,
    pub ledger: Vec<Verdict>,
}

/// Enumerates `r ≥ 0`, `r ≠ 0`, with `r_i ≤ ⌊(bound-1)/m_i⌋`, keeps those with
/// `deg u_J(r) < bound` for every tested `J` (and `r_5 ≥ 1` when requested),
/// and returns the cocharacters `-Σ r_i α_i^∨`.
pub fn classify_unstable(
    rs: &RootSystem,
    bound: i64,
    require_node5: bool,
    filter: SubsetFilter,
) -> Result<Classification> {
    if bound <= 0 {
        return Err(Error::NonPositiveBound(bound));
    }
    let l = rs.rank();
    let m = rs.m_vector()?;
    let caps: Vec<i64> = m.iter().map(|&mj| (bound - 1) / mj).collect();

    let subsets: Vec<(u32, Vec<i64>)> = (1u32..(1 << l))
        .filter(|mask| match filter {
            SubsetFilter::AllSubsets => true,
            SubsetFilter::SingletonsAndPairs => mask.count_ones() <= 2,
        })
        .map(|mask| (mask, rs.two_rho_mask(mask)))
        .collect();

    let mut candidates = Vec::new();
    let mut r = vec![0i64; l];
    loop {
        if r.iter().any(|&x| x != 0) && (!require_node5 || r[4] >= 1) {
            candidates.push(r.clone());
        }
        // odometer over the box
        let mut k = 0;
        while k < l {
            if r[k] < caps[k] {
                r[k] += 1;
                break;
            }
            r[k] = 0;
            k += 1;
        }
        if k == l {
            break;
        }
    }
    candidates.sort();

    let ledger: Vec<Verdict> = candidates
        .par_iter()
        .map(|r| {
            let hit = subsets.iter().find_map(|(mask, w)| {
                let deg: i64 = r.iter().zip(w).map(|(a, b)| a * b).sum();
                (deg >= bound).then_some((*mask, deg))
            });
            Verdict {
                r: r.clone(),
                rejected_by: hit.map(|(mask, _)| mask_nodes(mask)),
                rejecting_degree: hit.map(|(_, d)| d),
            }
        })
        .collect();

    let cocharacters = ledger
        .iter()
        .filter(|v| v.rejected_by.is_none())
        .map(|v| Cocharacter(v.r.iter().map(|&x| -x).collect()))
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();

    Ok(Classification {
        bound,
        require_node5,
        filter,
        subsets_tested: subsets.len(),
        cocharacters,
        ledger,
    })
}

pub fn classify_mode(rs: &RootSystem, mode: Mode, filter: SubsetFilter) -> Result<Classification> {
    classify_unstable(rs, mode.bound(rs.rank()), mode.require_node5(), filter)
}

fn mask_nodes(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::TypeTag;

    #[test]
    fn descend_zero_and_single_step() {
        for t in TypeTag::ALL {
            let rs = RootSystem::build(t);
            let l = t.rank();
            let d = descend(&rs, &Cocharacter::zero(l)).unwrap();
            assert_eq!(d.result, Cocharacter::zero(l));
            assert!(d.trace.is_empty());

            let mut a4 = vec![0; l];
            a4[3] = 1;
            let d = descend(&rs, &Cocharacter(a4)).unwrap();
            assert_eq!(d.result, Cocharacter::zero(l));
            assert_eq!(d.trace, vec![4]);
        }
    }

    #[test]
    fn descend_keeps_nonpositive_input() {
        let rs = RootSystem::build(TypeTag::E8);
        let v = Cocharacter::neg_coroots(8, &[4]);
        let d = descend(&rs, &v).unwrap();
        assert_eq!(d.result, v);
        assert!(d.trace.is_empty());
    }

    #[test]
    fn deg_u_examples() {
        let e8 = RootSystem::build(TypeTag::E8);
        let mut r = vec![0; 8];
        r[3] = 1;
        assert_eq!(deg_u(&e8, &r, &[4]).unwrap(), 9);

        let d5 = RootSystem::build(TypeTag::D5);
        assert_eq!(deg_u(&d5, &[1, 0, 0, 0, 1], &[5, 1]).unwrap(), 11);
        assert_eq!(deg_u(&d5, &[0, 1, 0, 0, 1], &[5, 2]).unwrap(), 9);
        assert_eq!(deg_u(&d5, &[0, 0, 1, 0, 1], &[5, 3]).unwrap(), 10);
        assert_eq!(deg_u(&d5, &[0; 5], &[1]).unwrap(), 0);
        assert_eq!(
            deg_u(&d5, &[-1, 0, 0, 0, 0], &[1]),
            Err(Error::NegativeCoefficient("r"))
        );
    }

    #[test]
    fn classification_examples() {
        let e8 = RootSystem::build(TypeTag::E8);
        let reg = classify_unstable(&e8, 10, false, SubsetFilter::AllSubsets).unwrap();
        assert_eq!(reg.cocharacters, vec![Cocharacter::neg_coroots(8, &[4])]);
        assert_eq!(reg.subsets_tested, 255);

        let sub = classify_unstable(&e8, 12, true, SubsetFilter::AllSubsets).unwrap();
        let mut expect = vec![
            Cocharacter::neg_coroots(8, &[5]),
            Cocharacter::neg_coroots(8, &[4, 5]),
        ];
        expect.sort();
        assert_eq!(sub.cocharacters, expect);

        let d5 = RootSystem::build(TypeTag::D5);
        let sub = classify_unstable(&d5, 9, true, SubsetFilter::AllSubsets).unwrap();
        let mut expect = vec![
            Cocharacter::neg_coroots(5, &[5]),
            Cocharacter::neg_coroots(5, &[4, 5]),
        ];
        expect.sort();
        assert_eq!(sub.cocharacters, expect);

        assert_eq!(
            classify_unstable(&d5, 0, false, SubsetFilter::AllSubsets),
            Err(Error::NonPositiveBound(0))
        );
    }

    #[test]
    fn filters_agree_on_every_candidate() {
        for t in TypeTag::ALL {
            let rs = RootSystem::build(t);
            for mode in [Mode::Regular, Mode::Subregular] {
                let all = classify_mode(&rs, mode, SubsetFilter::AllSubsets).unwrap();
                let few = classify_mode(&rs, mode, SubsetFilter::SingletonsAndPairs).unwrap();
                let acc = |c: &Classification| {
                    c.ledger
                        .iter()
                        .map(|v| (v.r.clone(), v.rejected_by.is_none()))
                        .collect::<Vec<_>>()
                };
                assert_eq!(acc(&all), acc(&few), "{t} {mode:?}");
            }
        }
    }

    #[test]
    fn survivors_are_zero_one() {
        for t in TypeTag::ALL {
            let rs = RootSystem::build(t);
            for mode in [Mode::Regular, Mode::Subregular] {
                let c = classify_mode(&rs, mode, SubsetFilter::AllSubsets).unwrap();
                for v in &c.cocharacters {
                    assert!(v.0.iter().all(|&x| x == 0 || x == -1));
                }
            }
        }
    }
}
