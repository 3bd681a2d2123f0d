//! Short h-vectors and the vertex-deletion sum.

use num_traits::Zero;

use super::{h_from_f, SimplicialComplex};
use crate::arith::{at, int, Int};
use crate::error::{MatxError, Result};
use crate::set::bits_of;

/// `h̃_i` for `0 <= i <= r - 1`, computed three ways.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortH {
    /// `Σ_v h_i(lk v)`.
    pub by_links: Vec<Int>,
    /// `Σ_j (-1)^{i-j} C(r-j-1, r-i-1) (j+1) f_{j+1}`.
    pub by_f: Vec<Int>,
    /// `(i+1) h_{i+1} + (r-i) h_i`.
    pub by_h: Vec<Int>,
}

impl ShortH {
    pub fn agree(&self) -> bool {
        self.by_links == self.by_f && self.by_f == self.by_h
    }
}

/// Short h-vector of a pure complex.
pub fn short_h(c: &SimplicialComplex) -> Result<ShortH> {
    if !c.is_pure() {
        return Err(MatxError::NotPure);
    }
    let r = c.rank();
    let mut by_links = vec![Int::zero(); r];
    for v in bits_of(c.vertex_mask()) {
        let lk = c.link(1 << v);
        for (i, x) in h_from_f(&lk.f_vector(), r - 1).into_iter().enumerate() {
            by_links[i] += x;
        }
    }
    let f = c.f_vector();
    let ri = r as i64;
    let by_f = (0..ri)
        .map(|i| {
            (0..=i).fold(Int::zero(), |acc, j| {
                let t = crate::arith::binom(ri - j - 1, ri - i - 1) * int(j + 1) * at(&f, j + 1);
                if (i - j) % 2 == 0 {
                    acc + t
                } else {
                    acc - t
                }
            })
        })
        .collect();
    let h = c.h_vector();
    let by_h = (0..ri).map(|i| int(i + 1) * at(&h, i + 1) + int(ri - i) * at(&h, i)).collect();
    Ok(ShortH { by_links, by_f, by_h })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeletionSumReport {
    /// `Σ_v h_i(Δ - v)`, for `0 <= i <= r`.
    pub lhs: Vec<Int>,
    /// `(n - i) h_i - (r - i + 1) h_{i-1}`.
    pub rhs: Vec<Int>,
}

impl DeletionSumReport {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Sum of `h(Δ - v)` over vertices; every deletion must keep the dimension.
pub fn deletion_sum_check(c: &SimplicialComplex) -> Result<DeletionSumReport> {
    let r = c.rank();
    let n = c.num_vertices() as i64;
    let mut lhs = vec![Int::zero(); r + 1];
    for v in bits_of(c.vertex_mask()) {
        let d = c.delete_vertices(1 << v);
        if d.rank() != r {
            return Err(MatxError::DimensionDrops(c.labels()[v].clone()));
        }
        for (i, x) in d.h_vector().into_iter().enumerate() {
            lhs[i] += x;
        }
    }
    let h = c.h_vector();
    let ri = r as i64;
    let rhs = (0..=ri).map(|i| int(n - i) * at(&h, i) - int(ri - i + 1) * at(&h, i - 1)).collect();
    Ok(DeletionSumReport { lhs, rhs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{broken_circuit_complex, independence_complex};
    use crate::graph::theta_graph;
    use crate::matroid::Matroid;

    #[test]
    fn short_h_three_ways() {
        for m in [Matroid::uniform(2, 4).unwrap(), theta_graph(3, 2).unwrap().cycle_matroid()] {
            let s = short_h(&independence_complex(&m).unwrap()).unwrap();
            assert!(s.agree(), "{s:?}");
            let s = short_h(&broken_circuit_complex(&m, None).unwrap()).unwrap();
            assert!(s.agree(), "{s:?}");
        }
    }

    #[test]
    fn short_h_of_u24() {
        // links of U_{2,4} are three points each: h = (1, 2), summed over four vertices
        let s = short_h(&independence_complex(&Matroid::uniform(2, 4).unwrap()).unwrap()).unwrap();
        assert_eq!(s.by_links, vec![int(4), int(8)]);
    }

    #[test]
    fn deletion_sum_on_matroid() {
        let m = theta_graph(3, 2).unwrap().cycle_matroid();
        let rep = deletion_sum_check(&independence_complex(&m).unwrap()).unwrap();
        assert!(rep.holds(), "{rep:?}");
    }

    #[test]
    fn pendant_triangle_drops_dimension() {
        let c = SimplicialComplex::from_named_facets(&["a", "b", "c", "d"], &[vec!["a", "b", "c"], vec!["c", "d"]])
            .unwrap();
        assert_eq!(deletion_sum_check(&c), Err(MatxError::DimensionDrops("a".into())));
        assert_eq!(short_h(&c), Err(MatxError::NotPure));
    }
}
