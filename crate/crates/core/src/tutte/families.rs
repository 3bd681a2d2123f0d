use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::tutte_dc;
use crate::arith::{int, json_int, Int};
use crate::error::{MatxError, Result};
use crate::graph::Graph;
use crate::matroid::Matroid;
use crate::poly::{BivarPolynomial, IntPolynomial};

/// `h`, `b`, `b*` and `w` of a matroid. `b` and `w` need a loopless matroid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoefficientFamilies {
    #[serde(serialize_with = "json_int::vec::serialize")]
    pub h: Vec<Int>,
    #[serde(serialize_with = "json_int::opt_vec::serialize")]
    pub b: Option<Vec<Int>>,
    #[serde(serialize_with = "json_int::vec::serialize")]
    pub b_star: Vec<Int>,
    #[serde(serialize_with = "json_int::opt_vec::serialize")]
    pub w: Option<Vec<Int>>,
}

impl CoefficientFamilies {
    pub fn from_tutte(t: &BivarPolynomial, r: usize, n: usize, loopless: bool) -> Self {
        let tx1 = t.at_y(&Int::one());
        let h = (0..=r).map(|i| tx1.coeff(r - i)).collect();
        let tx0 = t.at_y(&Int::zero());
        let b = (0..=r).map(|i| tx0.coeff(i)).collect();
        let t0y = t.at_x(&Int::zero());
        let b_star = (0..=n - r).map(|i| t0y.coeff(i)).collect();
        let w = loopless.then(|| {
            let p = charpoly_from_tutte(t, r);
            (0..=r).map(|i| p.coeff(r - i).abs()).collect()
        });
        CoefficientFamilies { h, b: loopless.then_some(b), b_star, w }
    }

    pub fn b(&self) -> Result<&[Int]> {
        self.b.as_deref().ok_or(MatxError::HasLoops)
    }

    pub fn w(&self) -> Result<&[Int]> {
        self.w.as_deref().ok_or(MatxError::HasLoops)
    }
}

pub fn coefficient_families(m: &Matroid) -> CoefficientFamilies {
    CoefficientFamilies::from_tutte(&tutte_dc(m), m.rank(), m.n(), m.loop_mask() == 0)
}

/// `(-1)^r T(1-x, 0)`.
fn charpoly_from_tutte(t: &BivarPolynomial, r: usize) -> IntPolynomial {
    let p = t.at_y(&Int::zero()).compose(&IntPolynomial::from_i64(&[1, -1]));
    if r % 2 == 1 {
        p.scale(&int(-1))
    } else {
        p
    }
}

pub fn characteristic_polynomial(m: &Matroid) -> Result<IntPolynomial> {
    if m.loop_mask() != 0 {
        return Err(MatxError::HasLoops);
    }
    Ok(charpoly_from_tutte(&tutte_dc(m), m.rank()))
}

/// `b_1`.
pub fn beta_invariant(m: &Matroid) -> Int {
    tutte_dc(m).coeff(1, 0)
}

/// Probability, as a polynomial in the failure probability `p`, that the surviving elements
/// still span: `(1-p)^r Σ_i h_i(M*) p^i`.
pub fn reliability_polynomial(m: &Matroid) -> IntPolynomial {
    let dual = m.dual();
    let h = coefficient_families(&dual).h;
    let sum = IntPolynomial::new(h);
    &IntPolynomial::binomial_power(1, -1, m.rank()) * &sum
}

/// All-terminal reliability of a connected graph.
pub fn graph_reliability(g: &Graph) -> Result<IntPolynomial> {
    if !g.is_connected() {
        return Err(MatxError::NotConnected);
    }
    Ok(reliability_polynomial(&g.cycle_matroid()))
}
