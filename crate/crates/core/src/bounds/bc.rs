//! Bounds on the `b` and `w` vectors of loopless matroids.

use num_traits::Zero;

use super::macaulay::phi;
use super::{CheckResult, Profile, Relation, Verdict};
use crate::arith::{at, binom, int, Int};

/// `b_i >= n - r` for `2 <= i <= r-1`. Needs a connected simple matroid: a direct sum has
/// `b_i = 0` below its component count, and parallel elements raise `n` without changing `b`.
pub fn check_brylawski_floor(p: &Profile) -> Vec<CheckResult> {
    const ID: &str = "brylawski_floor";
    let Some(b) = p.b() else { return vec![CheckResult::skipped(ID, "has loops")] };
    if !p.connected {
        return vec![CheckResult::skipped(ID, "not connected")];
    }
    if p.matroid.simplification().n() != p.n {
        return vec![CheckResult::skipped(ID, "not simple")];
    }
    let (n, r) = (p.n as i64, p.r as i64);
    (2..r).map(|i| CheckResult::compare(ID, at(b, i), Relation::Ge, int(n - r)).at(i)).collect()
}

fn eq1_rhs(r: i64, i: i64, b1: &Int) -> Int {
    binom(r - 2, i - 1) * b1 + binom(r - 2, i - 2)
}

/// `b_i <= C(r-2, i-1) b_1 + C(r-2, i-2)` for connected `M`, `r >= 2`, `1 <= i <= r`, plus the
/// cascade: equality at some `2 <= i <= r-1` forces equality at every `1 <= j <= i`.
/// (Equality at `i = 1` and `i = r` is automatic.)
pub fn check_eq1(p: &Profile) -> Vec<CheckResult> {
    const ID: &str = "eq1";
    if !p.connected {
        return vec![CheckResult::skipped(ID, "not connected")];
    }
    if p.r < 2 {
        return vec![CheckResult::skipped(ID, "rank below 2")];
    }
    let b = p.b().expect("connected matroids of rank >= 2 are loopless");
    let r = p.r as i64;
    let b1 = at(b, 1);
    let mut out: Vec<CheckResult> =
        (1..=r).map(|i| CheckResult::compare(ID, at(b, i), Relation::Le, eq1_rhs(r, i, &b1)).at(i)).collect();
    out.push(cascade("eq1_cascade", &out, 2, r - 1, 1));
    out
}

/// Equality at any index in `lo..=hi` must propagate down to `floor`.
fn cascade(id: &'static str, rows: &[CheckResult], lo: i64, hi: i64, floor: i64) -> CheckResult {
    let eq = |i: i64| rows.iter().any(|c| c.i == Some(i) && c.verdict == Verdict::Equality);
    let top = (lo..=hi).rev().find(|&i| eq(i));
    match top {
        None => CheckResult::flag(id, true, "no equality to propagate"),
        Some(t) => {
            let broken: Vec<i64> = (floor..t).filter(|&j| !eq(j)).collect();
            if broken.is_empty() {
                CheckResult::flag(id, true, format!("equality at {t} propagates to {floor}..{t}")).at(t)
            } else {
                CheckResult::flag(id, false, format!("equality at {t} but not at {broken:?}")).at(t)
            }
        }
    }
}

/// `b_{i+k-1} <= C(r-k-1, i-1) b_k + C(r-k-1, i-2)` for `k` components, `r - k >= 2`,
/// `2 <= i <= r-k`.
pub fn check_eqdisc(p: &Profile) -> Vec<CheckResult> {
    const ID: &str = "eqdisc";
    let Some(b) = p.b() else { return vec![CheckResult::skipped(ID, "has loops")] };
    let (r, k) = (p.r as i64, p.components as i64);
    if r - k < 2 {
        return vec![CheckResult::skipped(ID, "rank minus components below 2")];
    }
    let bk = at(b, k);
    (2..=r - k)
        .map(|i| {
            let rhs = binom(r - k - 1, i - 1) * &bk + binom(r - k - 1, i - 2);
            CheckResult::compare(ID, at(b, i + k - 1), Relation::Le, rhs).at(i).with_k(k)
        })
        .collect()
}

/// Whitney numbers: `w_i <= Σ_{j<=i} C(r-j, r-i) {C(r-2, r-j-1) β + C(r-2, r-j-2)}`.
pub fn check_w_bound(p: &Profile) -> Vec<CheckResult> {
    const ID: &str = "w_bound";
    let Some(w) = p.families.w.as_deref() else { return vec![CheckResult::skipped(ID, "has loops")] };
    if !p.connected {
        return vec![CheckResult::skipped(ID, "not connected")];
    }
    if p.r < 2 {
        return vec![CheckResult::skipped(ID, "rank below 2")];
    }
    let r = p.r as i64;
    let beta = at(p.b().expect("loopless"), 1);
    (0..=r)
        .map(|i| {
            let rhs = (0..=i).fold(Int::zero(), |acc, j| {
                acc + binom(r - j, r - i) * (binom(r - 2, r - j - 1) * &beta + binom(r - 2, r - j - 2))
            });
            CheckResult::compare(ID, at(w, i), Relation::Le, rhs).at(i)
        })
        .collect()
}

/// `b_i <= φ_i(n-r) b_1 + φ_{i-1}(n-r)` for connected `M`. With `n - r = 1` (a circuit) the
/// binomial convention makes `φ_i` vanish for `i >= 2`, so only `i = 1` is checked there.
pub fn check_eq2(p: &Profile) -> Vec<CheckResult> {
    const ID: &str = "eq2";
    if !p.connected {
        return vec![CheckResult::skipped(ID, "not connected")];
    }
    let Some(b) = p.b() else { return vec![CheckResult::skipped(ID, "has loops")] };
    let (r, x) = (p.r as i64, (p.n - p.r) as i64);
    if r < 1 || x < 1 {
        return vec![CheckResult::skipped(ID, "rank or corank is zero")];
    }
    let top = if x >= 2 { r } else { 1 };
    let b1 = at(b, 1);
    (1..=top)
        .map(|i| {
            let rhs = phi(i as usize, x) * &b1 + phi(i as usize - 1, x);
            CheckResult::compare(ID, at(b, i), Relation::Le, rhs).at(i)
        })
        .collect()
}

/// At least three regular series classes in a connected matroid with two or more series classes.
pub fn check_three_regular_series(p: &Profile) -> CheckResult {
    const ID: &str = "three_regular_series";
    if !p.connected {
        return CheckResult::skipped(ID, "not connected");
    }
    match p.series_sizes.as_ref().map(Vec::len) {
        Some(c) if c >= 2 => {}
        _ => return CheckResult::skipped(ID, "fewer than two series classes"),
    }
    let regular = p.matroid.regular_series_classes().map(|v| v.len()).unwrap_or(0);
    CheckResult::compare(ID, int(regular as i64), Relation::Ge, int(3))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::theta_graph;
    use crate::matroid::Matroid;

    fn theta() -> Profile {
        Profile::new(&theta_graph(3, 2).unwrap().cycle_matroid())
    }

    #[test]
    fn theta_instances() {
        let p = theta();
        let bry = check_brylawski_floor(&p);
        assert_eq!(bry[0].i, Some(2));
        assert_eq!(bry[0].lhs, Some(int(3)));
        assert_eq!(bry[0].rhs, Some(int(2)));
        let eq1 = check_eq1(&p);
        let i3 = eq1.iter().find(|c| c.i == Some(3)).unwrap();
        assert_eq!((i3.lhs.clone(), i3.rhs.clone(), i3.verdict), (Some(int(2)), Some(int(3)), Verdict::Holds));
        assert_eq!(check_three_regular_series(&p).lhs, Some(int(3)));
        assert!(check_w_bound(&p).iter().all(|c| !c.is_violation()));
        assert!(check_eq2(&p).iter().all(|c| !c.is_violation()));
    }

    #[test]
    fn u23_eq1_equality() {
        let p = Profile::new(&Matroid::uniform(2, 3).unwrap());
        let eq1 = check_eq1(&p);
        assert!(eq1.iter().filter(|c| c.i == Some(2) && c.check == "eq1").all(|c| c.verdict == Verdict::Equality));
        assert!(check_brylawski_floor(&p).is_empty());
        assert_eq!(check_eq2(&p)[0].verdict, Verdict::Equality);
    }

    #[test]
    fn circuit_skips_regular_series() {
        let p = Profile::new(&Matroid::uniform(3, 4).unwrap());
        assert_eq!(check_three_regular_series(&p).verdict, Verdict::Skipped);
        assert_eq!(check_eq2(&p).len(), 1);
    }

    #[test]
    fn disconnected_matroids_skip_floor() {
        let u = Matroid::uniform(1, 2).unwrap();
        let m = u.direct_sum(&u).unwrap().direct_sum(&u).unwrap();
        let p = Profile::new(&m);
        assert_eq!(check_brylawski_floor(&p)[0].verdict, Verdict::Skipped);
        assert_eq!(check_eqdisc(&p)[0].verdict, Verdict::Skipped);
    }
}
