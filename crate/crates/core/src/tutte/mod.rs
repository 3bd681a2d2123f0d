//! Tutte polynomials and the coefficient families read off their boundary slices.

mod families;
mod series;

use std::collections::HashMap;

use num_traits::Zero;

use crate::arith::{binom_u64, Int};
use crate::error::{MatxError, Result};
use crate::matroid::Matroid;
use crate::poly::BivarPolynomial;

pub use families::{
    beta_invariant, characteristic_polynomial, coefficient_families, graph_reliability, reliability_polynomial,
    CoefficientFamilies,
};
pub use series::{series_normalization_check, SeriesNormalizationReport};

/// Largest ground set accepted by [`tutte_sum`].
pub const TUTTE_SUM_MAX_N: usize = 20;

/// `Σ_A (x-1)^{r(E)-r(A)} (y-1)^{|A|-r(A)}` over all subsets.
pub fn tutte_sum(m: &Matroid) -> Result<BivarPolynomial> {
    let n = m.n();
    if n > TUTTE_SUM_MAX_N {
        return Err(MatxError::TooLarge(n));
    }
    let r = m.rank();
    let ranks = m.rank_table();
    let mut counts = vec![vec![0u64; n - r + 1]; r + 1];
    for (s, &rk) in ranks.iter().enumerate() {
        let rk = rk as usize;
        counts[r - rk][s.count_ones() as usize - rk] += 1;
    }
    let mut coeffs = vec![vec![Int::zero(); n - r + 1]; r + 1];
    for (a, row) in counts.iter().enumerate() {
        for (b, &c) in row.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for i in 0..=a {
                let xi = Int::from(binom_u64(a as u64, i as u64)) * c;
                let xi = if (a - i) % 2 == 1 { -xi } else { xi };
                for j in 0..=b {
                    let term = &xi * binom_u64(b as u64, j as u64);
                    if (b - j) % 2 == 1 {
                        coeffs[i][j] -= term;
                    } else {
                        coeffs[i][j] += term;
                    }
                }
            }
        }
    }
    Ok(BivarPolynomial::new(coeffs))
}

/// Deletion-contraction on the lowest element that is neither a loop nor a coloop,
/// memoised on the basis family.
pub fn tutte_dc(m: &Matroid) -> BivarPolynomial {
    let mut memo = HashMap::new();
    dc(m.n() as u32, m.basis_masks().to_vec(), &mut memo)
}

type Memo = HashMap<(u32, Vec<u32>), BivarPolynomial>;

fn drop_bits(mask: u32, remove: u32) -> u32 {
    crate::matroid::compact(mask, !remove)
}

fn dc(n: u32, bases: Vec<u32>, memo: &mut Memo) -> BivarPolynomial {
    let ground = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let union = bases.iter().fold(0, |a, b| a | b);
    let inter = bases.iter().fold(ground, |a, b| a & b);
    let loops = ground & !union;
    let coloops = inter;
    let strip = loops | coloops;
    let (n, bases) = if strip == 0 {
        (n, bases)
    } else {
        (n - strip.count_ones(), bases.iter().map(|&b| drop_bits(b, strip)).collect())
    };
    let core = if n == 0 { BivarPolynomial::one() } else { dc_core(n, bases, memo) };
    core.shift(coloops.count_ones() as usize, loops.count_ones() as usize)
}

fn dc_core(n: u32, bases: Vec<u32>, memo: &mut Memo) -> BivarPolynomial {
    let key = (n, bases);
    if let Some(t) = memo.get(&key) {
        return t.clone();
    }
    let bases = &key.1;
    // element 0 is neither a loop nor a coloop here
    let del: Vec<u32> = bases.iter().filter(|&&b| b & 1 == 0).map(|&b| b >> 1).collect();
    let con: Vec<u32> = bases.iter().filter(|&&b| b & 1 == 1).map(|&b| b >> 1).collect();
    let t = &dc(n - 1, del, memo) + &dc(n - 1, con, memo);
    memo.insert(key, t.clone());
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::graph::theta_graph;
    use crate::matroid::tests::m1;

    fn u(r: usize, n: usize) -> Matroid {
        Matroid::uniform(r, n).unwrap()
    }

    #[test]
    fn small_tutte_polynomials() {
        let t = tutte_sum(&u(1, 2)).unwrap();
        assert_eq!(t.to_string(), "x + y");
        let t = tutte_sum(&u(2, 3)).unwrap();
        assert_eq!(t, BivarPolynomial::from_terms([(2, 0, int(1)), (1, 0, int(1)), (0, 1, int(1))]));
        assert_eq!(tutte_sum(&u(1, 1)).unwrap(), BivarPolynomial::monomial(int(1), 1, 0));
        assert_eq!(tutte_sum(&u(0, 1)).unwrap(), BivarPolynomial::monomial(int(1), 0, 1));
        assert_eq!(tutte_dc(&u(0, 1)), BivarPolynomial::monomial(int(1), 0, 1));
        assert_eq!(tutte_sum(&Matroid::empty()).unwrap(), BivarPolynomial::one());
        assert_eq!(tutte_dc(&Matroid::empty()), BivarPolynomial::one());
    }

    #[test]
    fn algorithms_agree() {
        for m in [u(2, 4), u(3, 6), m1(), theta_graph(3, 2).unwrap().cycle_matroid(), u(0, 2), u(2, 2)] {
            assert_eq!(tutte_sum(&m).unwrap(), tutte_dc(&m), "{m:?}");
        }
    }

    #[test]
    fn dual_transposes() {
        let m = theta_graph(3, 2).unwrap().cycle_matroid();
        assert_eq!(tutte_dc(&m.dual()), tutte_dc(&m).transpose());
    }

    #[test]
    fn direct_sum_multiplies() {
        let a = u(2, 4);
        let b = theta_graph(2, 2).unwrap().cycle_matroid();
        assert_eq!(tutte_dc(&a.direct_sum(&b).unwrap()), &tutte_dc(&a) * &tutte_dc(&b));
    }

    #[test]
    fn evaluation_at_one_one_counts_bases() {
        let m = m1();
        assert_eq!(tutte_dc(&m).eval(&int(1), &int(1)), int(m.num_bases() as i64));
    }

    #[test]
    fn tutte_sum_size_cap() {
        assert_eq!(tutte_sum(&u(1, 21)), Err(MatxError::TooLarge(21)));
    }
}
