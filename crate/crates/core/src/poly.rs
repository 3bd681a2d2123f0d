//! Dense polynomials with exact integer coefficients.

use std::fmt;
use std::ops::{Add, Mul};

use num_traits::{One, Zero};

use crate::arith::{binom, Int};

/// Univariate polynomial, `coeffs[d]` is the coefficient of `t^d`. No trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<Int>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<Int>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Int::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(Int::one(), 0)
    }

    pub fn monomial(c: Int, degree: usize) -> Self {
        let mut coeffs = vec![Int::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// `(a + b t)^e`, expanded.
    pub fn binomial_power(a: i64, b: i64, e: usize) -> Self {
        let coeffs = (0..=e)
            .map(|k| binom(e as i64, k as i64) * Int::from(a).pow((e - k) as u32) * Int::from(b).pow(k as u32))
            .collect();
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> Int {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, t: &Int) -> Int {
        self.coeffs.iter().rev().fold(Int::zero(), |acc, c| acc * t + c)
    }

    /// Composition `self(q(t))`.
    pub fn compose(&self, q: &IntPolynomial) -> IntPolynomial {
        self.coeffs
            .iter()
            .rev()
            .fold(IntPolynomial::zero(), |acc, c| &(&acc * q) + &IntPolynomial::monomial(c.clone(), 0))
    }

    pub fn scale(&self, c: &Int) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|x| x * c).collect())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|d| self.coeff(d) + rhs.coeff(d)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![Int::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(d, c)| match d {
                0 => c.to_string(),
                1 => format!("{c}t"),
                _ => format!("{c}t^{d}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Bivariate polynomial in `x, y`; `coeffs[i][j]` is the coefficient of `x^i y^j`.
///
/// Stored as a dense `(dx+1) × (dy+1)` grid with trimmed outer rows/columns.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BivarPolynomial {
    coeffs: Vec<Vec<Int>>,
}

impl BivarPolynomial {
    pub fn new(coeffs: Vec<Vec<Int>>) -> Self {
        let mut p = Self { coeffs };
        p.normalize();
        p
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(Int::one(), 0, 0)
    }

    pub fn monomial(c: Int, i: usize, j: usize) -> Self {
        let mut coeffs = vec![vec![Int::zero(); j + 1]; i + 1];
        coeffs[i][j] = c;
        Self::new(coeffs)
    }

    /// Builds from sparse `(i, j, c)` terms; repeated exponents accumulate.
    pub fn from_terms<I: IntoIterator<Item = (usize, usize, Int)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (i, j, c) in terms {
            p.add_term(i, j, c);
        }
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        let width = self
            .coeffs
            .iter()
            .map(|row| row.iter().rposition(|c| !c.is_zero()).map_or(0, |p| p + 1))
            .max()
            .unwrap_or(0);
        for row in &mut self.coeffs {
            row.resize(width, Int::zero());
        }
        while self.coeffs.last().is_some_and(|row| row.iter().all(Zero::is_zero)) {
            self.coeffs.pop();
        }
        if width == 0 {
            self.coeffs.clear();
        }
    }

    fn add_term(&mut self, i: usize, j: usize, c: Int) {
        if self.coeffs.len() <= i {
            self.coeffs.resize(i + 1, Vec::new());
        }
        let width = self.coeffs.iter().map(Vec::len).max().unwrap_or(0).max(j + 1);
        for row in &mut self.coeffs {
            row.resize(width, Int::zero());
        }
        self.coeffs[i][j] += c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize, j: usize) -> Int {
        self.coeffs.get(i).and_then(|row| row.get(j)).cloned().unwrap_or_default()
    }

    /// Degree in `x` (0 for the zero polynomial).
    pub fn x_degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn y_degree(&self) -> usize {
        self.coeffs.first().map_or(0, |row| row.len().saturating_sub(1))
    }

    /// Nonzero terms `(i, j, c)` in lexicographic exponent order.
    pub fn terms(&self) -> Vec<(usize, usize, Int)> {
        let mut out = Vec::new();
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    out.push((i, j, c.clone()));
                }
            }
        }
        out
    }

    /// Multiplies by `x^a y^b`.
    pub fn shift(&self, a: usize, b: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let width = self.coeffs[0].len() + b;
        let mut coeffs = vec![vec![Int::zero(); width]; a];
        for row in &self.coeffs {
            let mut r = vec![Int::zero(); b];
            r.extend(row.iter().cloned());
            coeffs.push(r);
        }
        Self { coeffs }
    }

    /// Swaps the roles of `x` and `y`.
    pub fn transpose(&self) -> Self {
        Self::from_terms(self.terms().into_iter().map(|(i, j, c)| (j, i, c)))
    }

    /// Substitutes `y = v`, leaving a polynomial in `x`.
    pub fn at_y(&self, v: &Int) -> IntPolynomial {
        IntPolynomial::new(
            self.coeffs
                .iter()
                .map(|row| row.iter().rev().fold(Int::zero(), |acc, c| acc * v + c))
                .collect(),
        )
    }

    /// Substitutes `x = v`, leaving a polynomial in `y`.
    pub fn at_x(&self, v: &Int) -> IntPolynomial {
        self.transpose().at_y(v)
    }

    pub fn eval(&self, x: &Int, y: &Int) -> Int {
        self.at_y(y).eval(x)
    }
}

impl Add for &BivarPolynomial {
    type Output = BivarPolynomial;

    fn add(self, rhs: &BivarPolynomial) -> BivarPolynomial {
        let rows = self.coeffs.len().max(rhs.coeffs.len());
        let cols = self.y_degree().max(rhs.y_degree()) + 1;
        let coeffs = (0..rows)
            .map(|i| (0..cols).map(|j| self.coeff(i, j) + rhs.coeff(i, j)).collect())
            .collect();
        BivarPolynomial::new(coeffs)
    }
}

impl Mul for &BivarPolynomial {
    type Output = BivarPolynomial;

    fn mul(self, rhs: &BivarPolynomial) -> BivarPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return BivarPolynomial::zero();
        }
        let rows = self.x_degree() + rhs.x_degree() + 1;
        let cols = self.y_degree() + rhs.y_degree() + 1;
        let mut out = vec![vec![Int::zero(); cols]; rows];
        for (i, j, a) in self.terms() {
            for (k, l, b) in rhs.terms() {
                out[i + k][j + l] += &a * &b;
            }
        }
        BivarPolynomial::new(out)
    }
}

impl fmt::Debug for BivarPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for BivarPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        let pow = |v: &str, e: usize| match e {
            0 => String::new(),
            1 => v.to_string(),
            _ => format!("{v}^{e}"),
        };
        let parts: Vec<String> = terms
            .iter()
            .rev()
            .map(|(i, j, c)| {
                let mono = format!("{}{}", pow("x", *i), pow("y", *j));
                if mono.is_empty() {
                    c.to_string()
                } else if c.is_one() {
                    mono
                } else {
                    format!("{c}{mono}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
