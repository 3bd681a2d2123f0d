//! Series-class normalisation and the `b` to `b*` transfer across series contraction.

use num_traits::Zero;

use super::coefficient_families;
use crate::arith::{at, binom, Int};
use crate::error::{MatxError, Result};
use crate::matroid::Matroid;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesNormalizationReport {
    pub i: usize,
    /// `b_i` of the input matroid.
    pub original_b_i: Int,
    /// Every series class resized to exactly `i` elements.
    pub normalized: Matroid,
    /// `normalized` with every series class contracted to a single element.
    pub reduced: Matroid,
    /// `b_i(normalized)`.
    pub lhs: Int,
    /// `Σ_{j=1}^{i} C(n-r+i-j-1, i-j) b*_j(reduced)`.
    pub rhs: Int,
}

impl SeriesNormalizationReport {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn series_label_classes(m: &Matroid) -> Result<Vec<Vec<String>>> {
    Ok(m.series_classes()?.into_iter().map(|c| m.names(c.bits())).collect())
}

/// Resizes every series class to `i` elements, contracts each class to a point, and compares
/// `b_i` of the resized matroid with the binomial transfer of `b*` of the contracted one.
///
/// A matroid with a single series class is a circuit; contracting it to a point leaves a loop
/// and the transfer breaks down, so at least two classes are required.
pub fn series_normalization_check(m: &Matroid, i: usize) -> Result<SeriesNormalizationReport> {
    if i == 0 {
        return Err(MatxError::BadParams("series class size must be at least 1".into()));
    }
    if !m.is_connected() {
        return Err(MatxError::NotConnected);
    }
    let classes = series_label_classes(m)
        .map_err(|_| MatxError::PreconditionUnreachable("a coloop has no series class to resize".into()))?;
    if classes.len() < 2 {
        return Err(MatxError::PreconditionUnreachable(
            "a single series class contracts to a loop".into(),
        ));
    }
    let original_b_i = at(&coefficient_families(m).b.expect("connected with n > 1 is loopless"), i as i64);

    let mut norm = m.clone();
    for class in &classes {
        if class.len() > i {
            for label in &class[..class.len() - i] {
                norm = norm.contract_element(norm.index_of(label)?)?;
            }
        } else {
            for _ in class.len()..i {
                let fresh = norm.fresh_label(&format!("{}~", class[0]));
                norm = norm.series_extension(norm.index_of(&class[0])?, &fresh)?;
            }
        }
    }

    let mut reduced = norm.clone();
    let norm_classes = series_label_classes(&norm)?;
    debug_assert!(norm_classes.iter().all(|c| c.len() == i));
    for class in &norm_classes {
        for label in &class[1..] {
            reduced = reduced.contract_element(reduced.index_of(label)?)?;
        }
    }

    let fam = coefficient_families(&norm);
    let lhs = at(fam.b()?, i as i64);
    let b_star = coefficient_families(&reduced).b_star;
    let (n, r, i) = (norm.n() as i64, norm.rank() as i64, i as i64);
    let rhs = (1..=i).fold(Int::zero(), |acc, j| acc + binom(n - r + i - j - 1, i - j) * at(&b_star, j));
    Ok(SeriesNormalizationReport { i: i as usize, original_b_i, normalized: norm, reduced, lhs, rhs })
}
