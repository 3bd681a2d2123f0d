//! The Macaulay operator `h ↦ h^{<i>}` and the `φ_i` polynomials.

use num_traits::{One, Signed, Zero};

use crate::arith::{binom, Int};

fn binom_big(a: &Int, b: i64) -> Int {
    // a may exceed i64 only for astronomically large h; the loop below keeps it small
    let a: i64 = a.try_into().expect("binomial top fits in i64");
    binom(a, b)
}

/// Greedy `i`-binomial expansion `h = C(a_i, i) + C(a_{i-1}, i-1) + ... + C(a_j, j)` with
/// `a_i > a_{i-1} > ... > a_j >= j >= 1`, returned as `(a_t, t)` pairs. Empty for `h = 0`.
pub fn macaulay_decomposition(h: &Int, i: usize) -> Vec<(Int, usize)> {
    assert!(i >= 1, "the Macaulay expansion needs i >= 1");
    assert!(!h.is_negative(), "the Macaulay expansion needs h >= 0");
    let mut rest = h.clone();
    let mut out = Vec::new();
    let mut t = i;
    while !rest.is_zero() && t >= 1 {
        let tb = t as i64;
        // largest a with C(a, t) <= rest: exponential then binary search
        let mut lo = Int::from(t);
        let mut step = Int::one();
        while binom_big(&(&lo + &step), tb) <= rest {
            lo += &step;
            step *= 2;
        }
        let mut hi = &lo + &step;
        while &hi - &lo > Int::one() {
            let mid: Int = (&lo + &hi) / 2;
            if binom_big(&mid, tb) <= rest {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        rest -= binom_big(&lo, tb);
        out.push((lo, t));
        t -= 1;
    }
    out
}

/// `h^{<i>}`, with `0^{<i>} = 0`.
pub fn macaulay_power(h: &Int, i: usize) -> Int {
    macaulay_decomposition(h, i)
        .into_iter()
        .fold(Int::zero(), |acc, (a, t)| acc + binom_big(&(a + 1), t as i64 + 1))
}

/// `h_0 = 1`, all entries nonnegative, and `h_{i+1} <= h_i^{<i>}` for `1 <= i <= r-1`.
pub fn is_cm_hvector(h: &[Int]) -> bool {
    if h.first() != Some(&Int::one()) || h.iter().any(Signed::is_negative) {
        return false;
    }
    (1..h.len().saturating_sub(1)).all(|i| h[i + 1] <= macaulay_power(&h[i], i))
}

/// `φ_i(x) = Σ_{t=0}^{i-1} C(x-2, i-1-t) C(x+t-1, t)`, and `φ_0 = 1`.
pub fn phi(i: usize, x: i64) -> Int {
    if i == 0 {
        return Int::one();
    }
    let i = i as i64;
    (0..i).fold(Int::zero(), |acc, t| acc + binom(x - 2, i - 1 - t) * binom(x + t - 1, t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use proptest::prelude::*;

    /// Every strictly decreasing expansion, found by exhaustive search.
    fn all_decompositions(h: i64, i: i64) -> Vec<Vec<(i64, i64)>> {
        fn go(rest: i64, t: i64, max_a: i64, acc: &mut Vec<(i64, i64)>, out: &mut Vec<Vec<(i64, i64)>>) {
            if rest == 0 {
                out.push(acc.clone());
                return;
            }
            if t == 0 {
                return;
            }
            for a in t..max_a {
                let c: i64 = (&binom(a, t)).try_into().unwrap();
                if c > rest {
                    break;
                }
                acc.push((a, t));
                go(rest - c, t - 1, a, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        go(h, i, h + i + 1, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn small_values() {
        assert_eq!(macaulay_power(&int(2), 1), int(3));
        assert_eq!(macaulay_power(&int(3), 2), int(4));
        assert_eq!(macaulay_power(&int(0), 5), int(0));
        assert!(is_cm_hvector(&[int(1), int(2), int(3)]));
        assert!(!is_cm_hvector(&[int(1), int(1), int(5)]));
    }

    #[test]
    fn greedy_is_the_unique_expansion() {
        for i in 1..=5 {
            for h in 1..=60 {
                let all = all_decompositions(h, i);
                assert_eq!(all.len(), 1, "h={h} i={i}: {all:?}");
                let greedy: Vec<(i64, i64)> = macaulay_decomposition(&int(h), i as usize)
                    .into_iter()
                    .map(|(a, t)| ((&a).try_into().unwrap(), t as i64))
                    .collect();
                assert_eq!(greedy, all[0]);
            }
        }
    }

    #[test]
    fn phi_values() {
        assert_eq!(phi(1, 4), int(1));
        assert_eq!(phi(2, 4), int(6));
        for x in 2..8 {
            for i in 1..6 {
                assert!(phi(i, x) < phi(i + 1, x));
            }
        }
    }

    proptest! {
        #[test]
        fn monotone_in_h(h in 0i64..10_000, i in 1usize..=8) {
            prop_assert!(macaulay_power(&int(h), i) <= macaulay_power(&int(h + 1), i));
        }
    }
}
