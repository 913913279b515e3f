//! Commutative polynomials in two parameters `x`, `y` over ℚ.
//!
//! Used to check parametric identities exactly, e.g. that a family of minors
//! factors the way a hand computation says it does.

use alloc::collections::BTreeMap;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::ncalg::Q;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Bivariate {
    terms: BTreeMap<(u32, u32), Q>,
}

impl Bivariate {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Q) -> Self {
        let mut p = Self::default();
        p.add_term(0, 0, c);
        p
    }

    pub fn x() -> Self {
        let mut p = Self::default();
        p.add_term(1, 0, Q::one());
        p
    }

    pub fn y() -> Self {
        let mut p = Self::default();
        p.add_term(0, 1, Q::one());
        p
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: Q) {
        let e = self.terms.entry((i, j)).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self, x: &Q, y: &Q) -> Q {
        let mut acc = Q::zero();
        for ((i, j), c) in &self.terms {
            let mut t = c.clone();
            for _ in 0..*i {
                t *= x;
            }
            for _ in 0..*j {
                t *= y;
            }
            acc += t;
        }
        acc
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Bivariate { terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect() }
    }
}

impl Add for &Bivariate {
    type Output = Bivariate;
    fn add(self, rhs: &Bivariate) -> Bivariate {
        let mut out = self.clone();
        for ((i, j), c) in &rhs.terms {
            out.add_term(*i, *j, c.clone());
        }
        out
    }
}

impl Sub for &Bivariate {
    type Output = Bivariate;
    fn sub(self, rhs: &Bivariate) -> Bivariate {
        self + &(-rhs)
    }
}

impl Neg for &Bivariate {
    type Output = Bivariate;
    fn neg(self) -> Bivariate {
        Bivariate { terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect() }
    }
}

impl Mul for &Bivariate {
    type Output = Bivariate;
    fn mul(self, rhs: &Bivariate) -> Bivariate {
        let mut out = Bivariate::zero();
        for ((a, b), c) in &self.terms {
            for ((d, e), f) in &rhs.terms {
                out.add_term(a + d, b + e, c * f);
            }
        }
        out
    }
}

/// Determinant of a 3×3 matrix with polynomial entries.
pub fn det3(m: &[[Bivariate; 3]; 3]) -> Bivariate {
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| &(&m[r1][c1] * &m[r2][c2]) - &(&m[r1][c2] * &m[r2][c1]);
    let a = &m[0][0] * &minor(1, 2, 1, 2);
    let b = &m[0][1] * &minor(1, 2, 0, 2);
    let c = &m[0][2] * &minor(1, 2, 0, 1);
    &(&a - &b) + &c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::q;

    #[test]
    fn arithmetic_and_eval() {
        let x = Bivariate::x();
        let y = Bivariate::y();
        let p = &(&x + &y) * &(&x - &y);
        let expect = &(&x * &x) - &(&y * &y);
        assert_eq!(p, expect);
        assert_eq!(p.eval(&q(3), &q(2)), q(5));
        assert!((&p - &expect).is_zero());
    }

    #[test]
    fn det_of_diagonal() {
        let c = |n| Bivariate::constant(q(n));
        let m = [[Bivariate::x(), c(0), c(0)], [c(0), Bivariate::y(), c(0)], [c(0), c(0), c(2)]];
        assert_eq!(det3(&m), (&Bivariate::x() * &Bivariate::y()).scale(&q(2)));
    }
}
