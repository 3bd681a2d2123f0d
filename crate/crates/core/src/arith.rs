//! Exact binomials and small helpers shared by every module.
//!
//! Binomial convention: `C(a, b) = 0` whenever `b < 0`, `a < 0` or `a < b`.
//! Every displayed sum in the bounds module relies on this at its index edges.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serializer;

pub type Int = BigInt;

pub fn binom(a: i64, b: i64) -> Int {
    if b < 0 || a < 0 || a < b {
        return Int::zero();
    }
    let b = b.min(a - b);
    let mut acc = Int::one();
    for t in 0..b {
        acc *= a - t;
        acc /= t + 1;
    }
    acc
}

/// `C(a, b)` as a machine integer, for hot loops with small arguments.
pub(crate) fn binom_u64(a: u64, b: u64) -> u64 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for t in 0..b {
        acc = acc * (a - t) as u128 / (t + 1) as u128;
    }
    acc as u64
}

pub fn int(v: i64) -> Int {
    Int::from(v)
}

/// Reads index `i` of a coefficient vector, zero outside its range.
pub fn at(v: &[Int], i: i64) -> Int {
    if i < 0 {
        return Int::zero();
    }
    v.get(i as usize).cloned().unwrap_or_default()
}

/// Serializes exact integers as JSON numbers when they fit in 64 bits, strings otherwise.
pub mod json_int {
    use super::*;
    use num_traits::ToPrimitive;
    use serde::ser::SerializeSeq;

    pub fn value(v: &Int) -> serde_json::Value {
        match v.to_i64() {
            Some(x) => serde_json::Value::from(x),
            None => serde_json::Value::from(v.to_string()),
        }
    }

    pub fn serialize<S: Serializer>(v: &Int, s: S) -> Result<S::Ok, S::Error> {
        match v.to_i64() {
            Some(x) => s.serialize_i64(x),
            None => s.serialize_str(&v.to_string()),
        }
    }

    pub mod vec {
        use super::*;

        pub fn serialize<S: Serializer>(v: &[Int], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for x in v {
                seq.serialize_element(&value(x))?;
            }
            seq.end()
        }
    }

    pub mod opt_vec {
        use super::*;

        pub fn serialize<S: Serializer>(v: &Option<Vec<Int>>, s: S) -> Result<S::Ok, S::Error> {
            match v {
                None => s.serialize_none(),
                Some(v) => vec::serialize(v, s),
            }
        }
    }
}
