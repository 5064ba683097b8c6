//! Reference values for the `tables` command.
//!
//! Nothing in the computing code reads this file; it is only consulted when
//! a freshly computed value is compared against the published tables.
//! Multisets are written as `(weight, multiplicity)` pairs.

use exdp::TypeTag;

pub struct Expected {
    /// `m_j = ⟨ϖ_j^∨, 2ρ⟩ / ⟨ϖ_j^∨, ϖ_j⟩`, nodes in root-data order.
    pub m_vector: &'static [i64],
    /// `Gm`-weights on the slice `Z` (centre of the node-5 Levi).
    pub z_weights: &'static [(u32, u32)],
    /// `1` together with the coefficients of the highest root.
    pub looijenga_weights: &'static [(u32, u32)],
    /// Degrees of the defining equations of `X_0`.
    pub ci_relations: &'static [(u32, u32)],
    /// Weights of the ambient affine space of `X_0`.
    pub ci_ambient: &'static [(u32, u32)],
    /// `dim H^0(E, g)` for the subregular bundle.
    pub h0_dimension: i64,
    /// Number of `Gm`-weights on `Z`.
    pub z_weight_count: usize,
}

const E8: Expected = Expected {
    m_vector: &[23, 17, 13, 9, 11, 14, 19, 29],
    z_weights: &[(1, 2), (2, 3), (3, 3), (4, 2), (5, 1)],
    looijenga_weights: &[(1, 1), (2, 2), (3, 2), (4, 2), (5, 1), (6, 1)],
    ci_relations: &[(6, 1)],
    ci_ambient: &[(1, 1), (2, 1), (3, 1)],
    h0_dimension: 12,
    z_weight_count: 11,
};

const E7: Expected = Expected {
    m_vector: &[17, 14, 11, 8, 10, 13, 18],
    z_weights: &[(1, 4), (2, 4), (3, 2)],
    looijenga_weights: &[(1, 2), (2, 3), (3, 2), (4, 1)],
    ci_relations: &[(4, 1)],
    ci_ambient: &[(1, 2), (2, 1)],
    h0_dimension: 11,
    z_weight_count: 10,
};

const E6: Expected = Expected {
    m_vector: &[12, 11, 9, 7, 9, 12],
    z_weights: &[(1, 6), (2, 3)],
    looijenga_weights: &[(1, 3), (2, 3), (3, 1)],
    ci_relations: &[(3, 1)],
    ci_ambient: &[(1, 3)],
    h0_dimension: 10,
    z_weight_count: 9,
};

const D5: Expected = Expected {
    m_vector: &[8, 7, 8, 6, 8],
    z_weights: &[(1, 8)],
    looijenga_weights: &[(1, 4), (2, 2)],
    ci_relations: &[(2, 2)],
    ci_ambient: &[(1, 4)],
    h0_dimension: 9,
    z_weight_count: 8,
};

pub fn expected(tag: TypeTag) -> &'static Expected {
    match tag {
        TypeTag::D5 => &D5,
        TypeTag::E6 => &E6,
        TypeTag::E7 => &E7,
        TypeTag::E8 => &E8,
    }
}

/// Line counts of `I_{1,l}` in type order D5, E6, E7, E8.
pub const LINE_COUNTS: [usize; 4] = [16, 27, 56, 240];
/// Root counts in the same order.
pub const ROOT_COUNTS: [usize; 4] = [40, 72, 126, 240];
/// `|P/Q|` in the same order.
pub const DISCRIMINANT_ORDERS: [i64; 4] = [4, 3, 2, 1];

/// Expands `(weight, multiplicity)` pairs into a sorted list.
pub fn expand(pairs: &[(u32, u32)]) -> Vec<u32> {
    let mut v: Vec<u32> = pairs
        .iter()
        .flat_map(|&(w, k)| std::iter::repeat_n(w, k as usize))
        .collect();
    v.sort_unstable();
    v
}
