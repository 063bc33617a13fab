//! Sparse multivariate polynomials over exact rationals, in 1, 2 or 3
//! variables. Coefficients of zero are never stored, so `is_zero` is a
//! structural check and equality of polynomials is equality of maps.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::rat::{rat, Expo, Rational};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    vars: usize,
    terms: BTreeMap<Expo, Rational>,
}

impl Polynomial {
    pub fn zero(vars: usize) -> Self {
        assert!((1..=3).contains(&vars));
        Polynomial { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: usize, c: Rational) -> Self {
        let mut p = Polynomial::zero(vars);
        p.add_term([0, 0, 0], c);
        p
    }

    pub fn one(vars: usize) -> Self {
        Polynomial::constant(vars, rat(1))
    }

    /// The coordinate monomial `x_axis` (0-based axis).
    pub fn var(vars: usize, axis: usize) -> Self {
        assert!(axis < vars);
        let mut e: Expo = [0, 0, 0];
        e[axis] = 1;
        Polynomial::monomial(vars, e, rat(1))
    }

    pub fn monomial(vars: usize, expo: Expo, coeff: Rational) -> Self {
        let mut p = Polynomial::zero(vars);
        p.add_term(expo, coeff);
        p
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Expo, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: &Expo) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|e| (e[0] + e[1] + e[2]) as i64)
            .max()
            .unwrap_or(-1)
    }

    pub fn add_term(&mut self, e: Expo, c: Rational) {
        if c.is_zero() {
            return;
        }
        for (i, &ei) in e.iter().enumerate() {
            assert!(i < self.vars || ei == 0, "exponent in unused variable");
        }
        match self.terms.entry(e) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &Polynomial) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::VarMismatch { left: self.vars, right: other.vars });
        }
        Ok(())
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.vars);
        }
        let mut p = Polynomial::zero(self.vars);
        for (e, v) in &self.terms {
            p.terms.insert(*e, v * c);
        }
        p
    }

    /// Exact partial derivative along 1-based `axis`.
    pub fn derive(&self, axis: usize) -> Result<Polynomial> {
        if axis == 0 || axis > self.vars {
            return Err(Error::AxisOutOfRange { axis, vars: self.vars });
        }
        Ok(self.diff(axis - 1))
    }

    /// Partial derivative along 0-based axis (internal convention).
    pub fn diff(&self, axis: usize) -> Polynomial {
        assert!(axis < self.vars);
        let mut p = Polynomial::zero(self.vars);
        for (e, c) in &self.terms {
            if e[axis] == 0 {
                continue;
            }
            let mut e2 = *e;
            e2[axis] -= 1;
            p.add_term(e2, c * rat(e[axis] as i64));
        }
        p
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        assert_eq!(x.len(), self.vars);
        let mut s = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, xi) in x.iter().enumerate() {
                for _ in 0..e[i] {
                    t *= xi;
                }
            }
            s += t;
        }
        s
    }

    /// Substitute each variable by a polynomial (all images over the same
    /// variable set). Used for restriction to faces/edges via affine charts.
    pub fn compose(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.vars);
        let tvars = images.first().map(|p| p.vars).unwrap_or(1);
        let maxes: Vec<u16> = (0..self.vars)
            .map(|i| self.terms.keys().map(|e| e[i]).max().unwrap_or(0))
            .collect();
        // power tables per variable
        let mut pows: Vec<Vec<Polynomial>> = Vec::with_capacity(self.vars);
        for (i, img) in images.iter().enumerate() {
            let mut tab = vec![Polynomial::one(tvars)];
            for p in 1..=maxes[i] as usize {
                let next = &tab[p - 1] * img;
                tab.push(next);
            }
            pows.push(tab);
        }
        let mut out = Polynomial::zero(tvars);
        for (e, c) in &self.terms {
            let mut t = Polynomial::constant(tvars, c.clone());
            for i in 0..self.vars {
                if e[i] > 0 {
                    t = &t * &pows[i][e[i] as usize];
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Sum of absolute values of all coefficients; exactly zero iff `self` is.
    pub fn coeff_abs_sum(&self) -> Rational {
        use num_traits::Signed;
        let mut s = Rational::zero();
        for c in self.terms.values() {
            s += c.abs();
        }
        s
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.check_vars(rhs).expect("variable mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.check_vars(rhs).expect("variable mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let mut out = Polynomial::zero(self.vars);
        for (e, c) in &self.terms {
            out.terms.insert(*e, -c.clone());
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.check_vars(rhs).expect("variable mismatch");
        let mut out = Polynomial::zero(self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e = [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]];
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = ["x", "y", "z"];
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", c)?;
            for i in 0..self.vars {
                if e[i] > 0 {
                    write!(f, "*{}^{}", names[i], e[i])?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::ratio;

    fn x() -> Polynomial {
        Polynomial::var(3, 0)
    }
    fn y() -> Polynomial {
        Polynomial::var(3, 1)
    }

    #[test]
    fn derive_power_rule() {
        // x^2 y along axis 1 -> 2 x y
        let p = &(&x() * &x()) * &y();
        let d = p.derive(1).unwrap();
        let expect = (&x() * &y()).scale(&rat(2));
        assert_eq!(d, expect);
        // constant along axis 2 -> 0
        assert!(Polynomial::constant(3, rat(5)).derive(2).unwrap().is_zero());
        // (x + y + z) along axis 3 -> 1
        let s = &(&x() + &y()) + &Polynomial::var(3, 2);
        assert_eq!(s.derive(3).unwrap(), Polynomial::one(3));
        assert!(matches!(s.derive(4), Err(Error::AxisOutOfRange { .. })));
    }

    #[test]
    fn zero_terms_are_dropped() {
        let p = &x() - &x();
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
    }

    #[test]
    fn compose_affine() {
        // p(x,y,z) = x^2 + z, restricted to x=s, y=0, z=1-s
        let p = &(&x() * &x()) + &Polynomial::var(3, 2);
        let s = Polynomial::var(1, 0);
        let one_minus_s = &Polynomial::one(1) - &s;
        let q = p.compose(&[s.clone(), Polynomial::zero(1), one_minus_s]);
        // s^2 - s + 1
        assert_eq!(q.coeff(&[2, 0, 0]), rat(1));
        assert_eq!(q.coeff(&[1, 0, 0]), rat(-1));
        assert_eq!(q.coeff(&[0, 0, 0]), rat(1));
    }

    #[test]
    fn eval_point() {
        let p = &(&x() * &y()) + &Polynomial::one(3);
        let v = p.eval(&[ratio(1, 2), rat(4), rat(0)]);
        assert_eq!(v, rat(3));
    }
}
