//! Bounds on the `h`-vector of the independence complex.

use num_traits::{Signed, Zero};

use super::macaulay::macaulay_power;
use super::{CheckResult, Profile, Relation, Verdict};
use crate::arith::{at, binom, Int};

fn coloop_free(id: &'static str, p: &Profile) -> Option<Vec<CheckResult>> {
    (!p.coloop_free).then(|| vec![CheckResult::skipped(id, "has coloops")])
}

/// `g_{i+1} <= g_i^{<i>}` with `g_i = h_i - h_{i-1}`, for `1 <= i <= (r+1)/2`.
pub fn check_g_theorem(p: &Profile) -> Vec<CheckResult> {
    const ID: &str = "g_theorem";
    if let Some(s) = coloop_free(ID, p) {
        return s;
    }
    let h = p.h();
    let g = |i: i64| at(h, i) - at(h, i - 1);
    (1..=(p.r as i64 + 1) / 2)
        .map(|i| {
            let gi = g(i);
            if gi.is_negative() {
                return CheckResult::skipped(ID, format!("g_{i} is negative")).at(i);
            }
            CheckResult::compare(ID, g(i + 1), Relation::Le, macaulay_power(&gi, i as usize)).at(i)
        })
        .collect()
}

/// `h_{i-1} <= h_i` and `h_i <= h_{r-i}` for `0 <= i <= r/2`.
pub fn check_chari(p: &Profile) -> Vec<CheckResult> {
    if let Some(s) = coloop_free("chari", p) {
        return s;
    }
    let (h, r) = (p.h(), p.r as i64);
    (0..=r / 2)
        .flat_map(|i| {
            [
                CheckResult::compare("chari_increasing", at(h, i - 1), Relation::Le, at(h, i)).at(i),
                CheckResult::compare("chari_mirror", at(h, i), Relation::Le, at(h, r - i)).at(i),
            ]
        })
        .collect()
}

/// `h_i >= Σ_{j=1}^{i} (-1)^{j-1} h_{i-j}` for `0 <= i <= r`.
pub fn check_brown_colbourn(p: &Profile) -> Vec<CheckResult> {
    const ID: &str = "brown_colbourn";
    if let Some(s) = coloop_free(ID, p) {
        return s;
    }
    let h = p.h();
    (0..=p.r as i64)
        .map(|i| {
            let rhs = (1..=i).fold(Int::zero(), |acc, j| if j % 2 == 1 { acc + at(h, i - j) } else { acc - at(h, i - j) });
            CheckResult::compare(ID, at(h, i), Relation::Ge, rhs).at(i)
        })
        .collect()
}

/// `Σ_{j=k}^{r} C(j, k) (-2)^{r-j} I_j >= 0` for `0 <= k <= r`.
pub fn check_wagner(p: &Profile) -> Vec<CheckResult> {
    const ID: &str = "wagner";
    if let Some(s) = coloop_free(ID, p) {
        return s;
    }
    let r = p.r as i64;
    (0..=r)
        .map(|k| {
            let lhs = (k..=r).fold(Int::zero(), |acc, j| {
                acc + binom(j, k) * Int::from(-2).pow((r - j) as u32) * at(&p.independent, j)
            });
            CheckResult::compare(ID, lhs, Relation::Ge, Int::zero()).with_k(k)
        })
        .collect()
}

/// `h_{j-i} <= h_i h_j` for `0 <= i <= j <= r`.
pub fn check_stanley_product(p: &Profile) -> Vec<CheckResult> {
    const ID: &str = "stanley_product";
    if let Some(s) = coloop_free(ID, p) {
        return s;
    }
    let (h, r) = (p.h(), p.r as i64);
    (0..=r)
        .flat_map(|j| (0..=j).map(move |i| (i, j)))
        .map(|(i, j)| CheckResult::compare(ID, at(h, j - i), Relation::Le, at(h, i) * at(h, j)).at(i).at_j(j))
        .collect()
}

/// `h_{i-j} C(n-i-1, r-i) <= C(n-i+j-1, r-i+j) h_i` for `1 <= j < i <= r`, with equality exactly
/// when every series class has more than `r-i+j` elements. A mismatch with that prediction is a
/// violation even when the inequality holds.
pub fn check_max_h(p: &Profile) -> Vec<CheckResult> {
    const ID: &str = "max_h";
    if let Some(s) = coloop_free(ID, p) {
        return s;
    }
    let (h, n, r) = (p.h(), p.n as i64, p.r as i64);
    let smallest = p.series_sizes.as_ref().and_then(|s| s.iter().min().copied()).unwrap_or(usize::MAX) as i64;
    let mut out = Vec::new();
    for i in 2..=r {
        for j in 1..i {
            let lhs = at(h, i - j) * binom(n - i - 1, r - i);
            let rhs = binom(n - i + j - 1, r - i + j) * at(h, i);
            let mut c = CheckResult::compare(ID, lhs, Relation::Le, rhs).at(i).at_j(j);
            let predicted = smallest > r - i + j;
            c.predicted_equality = Some(predicted);
            if c.verdict != Verdict::Violation && (c.verdict == Verdict::Equality) != predicted {
                c.verdict = Verdict::Violation;
                c.note = Some("equality does not match the series-class prediction".into());
            }
            out.push(c);
        }
    }
    out
}

/// `h_{r-i} <= C(r-1, i) h_r + C(r-1, i-1)` for `0 <= i <= r`, `r >= 1`, with the cascade:
/// equality at some `1 <= i <= r-1` forces equality at every `0 <= j <= i`.
pub fn check_ind_by_r(p: &Profile) -> Vec<CheckResult> {
    const ID: &str = "ind_by_r";
    if let Some(s) = coloop_free(ID, p) {
        return s;
    }
    if p.r < 1 {
        return vec![CheckResult::skipped(ID, "rank 0")];
    }
    let (h, r) = (p.h(), p.r as i64);
    let hr = at(h, r);
    let mut out: Vec<CheckResult> = (0..=r)
        .map(|i| {
            let rhs = binom(r - 1, i) * &hr + binom(r - 1, i - 1);
            CheckResult::compare(ID, at(h, r - i), Relation::Le, rhs).at(i)
        })
        .collect();
    let eq = |i: i64| out.iter().any(|c| c.i == Some(i) && c.verdict == Verdict::Equality);
    let cascade = match (1..r).rev().find(|&i| eq(i)) {
        None => CheckResult::flag("ind_by_r_cascade", true, "no equality to propagate"),
        Some(t) => {
            let broken: Vec<i64> = (0..t).filter(|&j| !eq(j)).collect();
            CheckResult::flag("ind_by_r_cascade", broken.is_empty(), format!("equality at {t}, gaps {broken:?}")).at(t)
        }
    };
    out.push(cascade);
    out
}

/// `I_j <= Σ_{i<=j} C(r-i, r-j) (C(r-1, i) h_r + C(r-1, i-1))`, taken as printed.
pub fn check_ij_bound(p: &Profile) -> Vec<CheckResult> {
    const ID: &str = "ij_bound";
    if let Some(s) = coloop_free(ID, p) {
        return s;
    }
    if p.r < 1 {
        return vec![CheckResult::skipped(ID, "rank 0")];
    }
    let r = p.r as i64;
    let hr = at(p.h(), r);
    (0..=r)
        .map(|j| {
            let rhs = (0..=j).fold(Int::zero(), |acc, i| {
                acc + binom(r - i, r - j) * (binom(r - 1, i) * &hr + binom(r - 1, i - 1))
            });
            CheckResult::compare(ID, at(&p.independent, j), Relation::Le, rhs).at(j)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::matroid::Matroid;

    fn prof(m: Matroid) -> Profile {
        Profile::new(&m)
    }

    #[test]
    fn u23_examples() {
        let p = prof(Matroid::uniform(2, 3).unwrap());
        assert!(check_chari(&p).iter().all(|c| !c.is_violation()));
        let mh = check_max_h(&p);
        let c = mh.iter().find(|c| c.i == Some(2) && c.j == Some(1)).unwrap();
        assert_eq!(c.verdict, Verdict::Equality);
        assert_eq!(c.predicted_equality, Some(true));
    }

    #[test]
    fn ind_by_r_family_u12_squared() {
        let u = Matroid::uniform(1, 2).unwrap();
        let p = prof(u.direct_sum(&u).unwrap());
        assert_eq!(p.h(), &[int(1), int(2), int(1)]);
        let rows = check_ind_by_r(&p);
        let c = rows.iter().find(|c| c.i == Some(1)).unwrap();
        assert_eq!((c.lhs.clone(), c.rhs.clone(), c.verdict), (Some(int(2)), Some(int(2)), Verdict::Equality));
        assert!(rows.iter().all(|c| !c.is_violation()));
    }

    #[test]
    fn wagner_boundary_on_u12() {
        let p = prof(Matroid::uniform(1, 2).unwrap());
        let w = check_wagner(&p);
        assert_eq!(w[0].lhs, Some(int(0)));
        assert_eq!(w[0].verdict, Verdict::Equality);
    }

    #[test]
    fn coloops_are_skipped() {
        let p = prof(Matroid::uniform(1, 1).unwrap());
        assert_eq!(check_stanley_product(&p)[0].verdict, Verdict::Skipped);
    }
}
