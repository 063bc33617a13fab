//! Vector- and matrix-valued polynomials in three variables, and the tensor
//! calculus acting on them: left (column-wise) and right (row-wise) dot and
//! cross products with vectors and with the Hamilton operator, the `inc`
//! operator, symmetrization, the mskw/vskw isomorphisms, Koszul operators and
//! the rigid motion projector.
//!
//! Conventions: a vector on the left of a matrix is a column vector and acts
//! column-wise; on the right it is treated as a row vector and acts row-wise,
//! so `b x A x c` needs no parentheses. `nabla_vec(v)` is the dyadic
//! `(d_i v_j)`; the letter-operator `grad_vec` is its transpose.

use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::poly::Polynomial;
use crate::rat::{rat, Rational, Rng};

/// Column vector of three polynomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VecPoly(pub [Polynomial; 3]);

/// 3x3 matrix of polynomials, entry `[i][j]` = row i, column j.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatPoly(pub [[Polynomial; 3]; 3]);

/// A `MatPoly` checked to be symmetric on construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymMatPoly(MatPoly);

/// Signature of the permutation `(i j k)`; zero when indices repeat.
pub fn eps(i: usize, j: usize, k: usize) -> i64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
        _ => 0,
    }
}

impl VecPoly {
    pub fn zero() -> Self {
        VecPoly(core::array::from_fn(|_| Polynomial::zero(3)))
    }

    pub fn from_fn(f: impl Fn(usize) -> Polynomial) -> Self {
        VecPoly(core::array::from_fn(f))
    }

    pub fn constant(v: &[Rational; 3]) -> Self {
        VecPoly::from_fn(|i| Polynomial::constant(3, v[i].clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|p| p.is_zero())
    }

    pub fn dot(&self, other: &VecPoly) -> Polynomial {
        let mut s = Polynomial::zero(3);
        for i in 0..3 {
            s = &s + &(&self.0[i] * &other.0[i]);
        }
        s
    }

    pub fn cross(&self, other: &VecPoly) -> VecPoly {
        VecPoly::from_fn(|i| {
            let mut s = Polynomial::zero(3);
            for j in 0..3 {
                for k in 0..3 {
                    let e = eps(i, j, k);
                    if e != 0 {
                        s = &s + &(&self.0[j] * &other.0[k]).scale(&rat(e));
                    }
                }
            }
            s
        })
    }

    /// Dyadic product `u v^T`.
    pub fn outer(&self, other: &VecPoly) -> MatPoly {
        MatPoly::from_fn(|i, j| &self.0[i] * &other.0[j])
    }

    pub fn scale(&self, c: &Rational) -> VecPoly {
        VecPoly::from_fn(|i| self.0[i].scale(c))
    }

    pub fn eval(&self, x: &[Rational]) -> [Rational; 3] {
        core::array::from_fn(|i| self.0[i].eval(x))
    }

    pub fn coeff_abs_sum(&self) -> Rational {
        let mut s = Rational::zero();
        for p in &self.0 {
            s += p.coeff_abs_sum();
        }
        s
    }
}

impl Add for &VecPoly {
    type Output = VecPoly;
    fn add(self, rhs: &VecPoly) -> VecPoly {
        VecPoly::from_fn(|i| &self.0[i] + &rhs.0[i])
    }
}

impl Sub for &VecPoly {
    type Output = VecPoly;
    fn sub(self, rhs: &VecPoly) -> VecPoly {
        VecPoly::from_fn(|i| &self.0[i] - &rhs.0[i])
    }
}

impl Neg for &VecPoly {
    type Output = VecPoly;
    fn neg(self) -> VecPoly {
        VecPoly::from_fn(|i| -&self.0[i])
    }
}

impl MatPoly {
    pub fn zero() -> Self {
        MatPoly(core::array::from_fn(|_| core::array::from_fn(|_| Polynomial::zero(3))))
    }

    pub fn from_fn(f: impl Fn(usize, usize) -> Polynomial) -> Self {
        MatPoly(core::array::from_fn(|i| core::array::from_fn(|j| f(i, j))))
    }

    pub fn identity() -> Self {
        MatPoly::from_fn(|i, j| if i == j { Polynomial::one(3) } else { Polynomial::zero(3) })
    }

    pub fn constant(m: &[[Rational; 3]; 3]) -> Self {
        MatPoly::from_fn(|i, j| Polynomial::constant(3, m[i][j].clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|r| r.iter().all(|p| p.is_zero()))
    }

    pub fn transpose(&self) -> MatPoly {
        MatPoly::from_fn(|i, j| self.0[j][i].clone())
    }

    pub fn is_symmetric(&self) -> bool {
        for i in 0..3 {
            for j in (i + 1)..3 {
                if self.0[i][j] != self.0[j][i] {
                    return false;
                }
            }
        }
        true
    }

    pub fn sym(&self) -> MatPoly {
        let half = crate::rat::ratio(1, 2);
        MatPoly::from_fn(|i, j| (&self.0[i][j] + &self.0[j][i]).scale(&half))
    }

    pub fn skw(&self) -> MatPoly {
        let half = crate::rat::ratio(1, 2);
        MatPoly::from_fn(|i, j| (&self.0[i][j] - &self.0[j][i]).scale(&half))
    }

    pub fn trace(&self) -> Polynomial {
        &(&self.0[0][0] + &self.0[1][1]) + &self.0[2][2]
    }

    pub fn scale(&self, c: &Rational) -> MatPoly {
        MatPoly::from_fn(|i, j| self.0[i][j].scale(c))
    }

    /// Frobenius inner product `A : B`.
    pub fn frobenius(&self, other: &MatPoly) -> Polynomial {
        let mut s = Polynomial::zero(3);
        for i in 0..3 {
            for j in 0..3 {
                s = &s + &(&self.0[i][j] * &other.0[i][j]);
            }
        }
        s
    }

    /// Matrix product `A B`.
    pub fn matmul(&self, other: &MatPoly) -> MatPoly {
        MatPoly::from_fn(|i, j| {
            let mut s = Polynomial::zero(3);
            for k in 0..3 {
                s = &s + &(&self.0[i][k] * &other.0[k][j]);
            }
            s
        })
    }

    /// Row-wise dot from the right: `(A . b)_i = sum_j A_ij b_j`.
    pub fn dot_right(&self, b: &VecPoly) -> VecPoly {
        VecPoly::from_fn(|i| {
            let mut s = Polynomial::zero(3);
            for j in 0..3 {
                s = &s + &(&self.0[i][j] * &b.0[j]);
            }
            s
        })
    }

    /// Column-wise dot from the left: `(b . A)_j = sum_i b_i A_ij`.
    pub fn dot_left(&self, b: &VecPoly) -> VecPoly {
        VecPoly::from_fn(|j| {
            let mut s = Polynomial::zero(3);
            for i in 0..3 {
                s = &s + &(&b.0[i] * &self.0[i][j]);
            }
            s
        })
    }

    /// Row-wise cross from the right: `(A x b)_ij = eps_jpq A_ip b_q`.
    pub fn cross_right(&self, b: &VecPoly) -> MatPoly {
        MatPoly::from_fn(|i, j| {
            let mut s = Polynomial::zero(3);
            for p in 0..3 {
                for q in 0..3 {
                    let e = eps(j, p, q);
                    if e != 0 {
                        s = &s + &(&self.0[i][p] * &b.0[q]).scale(&rat(e));
                    }
                }
            }
            s
        })
    }

    /// Column-wise cross from the left: `(b x A)_ij = eps_ipq b_p A_qj`.
    pub fn cross_left(&self, b: &VecPoly) -> MatPoly {
        MatPoly::from_fn(|i, j| {
            let mut s = Polynomial::zero(3);
            for p in 0..3 {
                for q in 0..3 {
                    let e = eps(i, p, q);
                    if e != 0 {
                        s = &s + &(&b.0[p] * &self.0[q][j]).scale(&rat(e));
                    }
                }
            }
            s
        })
    }

    pub fn eval(&self, x: &[Rational]) -> [[Rational; 3]; 3] {
        core::array::from_fn(|i| core::array::from_fn(|j| self.0[i][j].eval(x)))
    }

    pub fn coeff_abs_sum(&self) -> Rational {
        let mut s = Rational::zero();
        for r in &self.0 {
            for p in r {
                s += p.coeff_abs_sum();
            }
        }
        s
    }
}

impl Add for &MatPoly {
    type Output = MatPoly;
    fn add(self, rhs: &MatPoly) -> MatPoly {
        MatPoly::from_fn(|i, j| &self.0[i][j] + &rhs.0[i][j])
    }
}

impl Sub for &MatPoly {
    type Output = MatPoly;
    fn sub(self, rhs: &MatPoly) -> MatPoly {
        MatPoly::from_fn(|i, j| &self.0[i][j] - &rhs.0[i][j])
    }
}

impl Neg for &MatPoly {
    type Output = MatPoly;
    fn neg(self) -> MatPoly {
        MatPoly::from_fn(|i, j| -&self.0[i][j])
    }
}

impl Mul<&Polynomial> for &MatPoly {
    type Output = MatPoly;
    fn mul(self, rhs: &Polynomial) -> MatPoly {
        MatPoly::from_fn(|i, j| &self.0[i][j] * rhs)
    }
}

impl SymMatPoly {
    /// Wrap a matrix polynomial, checking symmetry.
    pub fn new(m: MatPoly) -> Option<SymMatPoly> {
        if m.is_symmetric() {
            Some(SymMatPoly(m))
        } else {
            None
        }
    }

    /// Wrap a matrix that is symmetric by construction. Panics otherwise:
    /// that would be a bug in the calculus, not bad input.
    pub fn expect_symmetric(m: MatPoly, what: &str) -> SymMatPoly {
        match SymMatPoly::new(m) {
            Some(s) => s,
            None => panic!("{what}: result is not symmetric"),
        }
    }

    pub fn mat(&self) -> &MatPoly {
        &self.0
    }

    pub fn into_mat(self) -> MatPoly {
        self.0
    }

    pub fn zero() -> Self {
        SymMatPoly(MatPoly::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

// ---- differential operators ----

/// The position field `x - c` as a vector polynomial.
pub fn x_minus(c: &[Rational; 3]) -> VecPoly {
    VecPoly::from_fn(|i| {
        let mut p = Polynomial::var(3, i);
        p.add_term([0, 0, 0], -c[i].clone());
        p
    })
}

/// Dyadic gradient `(d_i v_j)`, the paper-style `nabla v`.
pub fn nabla_vec(v: &VecPoly) -> MatPoly {
    MatPoly::from_fn(|i, j| v.0[j].diff(i))
}

/// Letter-operator gradient `(d_j v_i)`, the transpose of `nabla_vec`.
pub fn grad_vec(v: &VecPoly) -> MatPoly {
    MatPoly::from_fn(|i, j| v.0[i].diff(j))
}

pub fn grad_scalar(p: &Polynomial) -> VecPoly {
    VecPoly::from_fn(|i| p.diff(i))
}

pub fn curl_vec(v: &VecPoly) -> VecPoly {
    VecPoly::from_fn(|i| {
        let mut s = Polynomial::zero(3);
        for j in 0..3 {
            for k in 0..3 {
                let e = eps(i, j, k);
                if e != 0 {
                    s = &s + &v.0[k].diff(j).scale(&rat(e));
                }
            }
        }
        s
    })
}

pub fn div_vec(v: &VecPoly) -> Polynomial {
    let mut s = Polynomial::zero(3);
    for i in 0..3 {
        s = &s + &v.0[i].diff(i);
    }
    s
}

/// Column-wise curl `nabla x A`: `(d x A)_ij = eps_ipq d_p A_qj`.
pub fn nabla_cross_mat(a: &MatPoly) -> MatPoly {
    MatPoly::from_fn(|i, j| {
        let mut s = Polynomial::zero(3);
        for p in 0..3 {
            for q in 0..3 {
                let e = eps(i, p, q);
                if e != 0 {
                    s = &s + &a.0[q][j].diff(p).scale(&rat(e));
                }
            }
        }
        s
    })
}

/// Row-wise curl from the right `A x nabla`: `(A x d)_ij = eps_jpq d_q A_ip`.
pub fn mat_cross_nabla(a: &MatPoly) -> MatPoly {
    MatPoly::from_fn(|i, j| {
        let mut s = Polynomial::zero(3);
        for p in 0..3 {
            for q in 0..3 {
                let e = eps(j, p, q);
                if e != 0 {
                    s = &s + &a.0[i][p].diff(q).scale(&rat(e));
                }
            }
        }
        s
    })
}

/// Row-wise divergence `A . nabla`: component i is `sum_j d_j A_ij`.
pub fn div_row(a: &MatPoly) -> VecPoly {
    VecPoly::from_fn(|i| {
        let mut s = Polynomial::zero(3);
        for j in 0..3 {
            s = &s + &a.0[i][j].diff(j);
        }
        s
    })
}

/// Letter-operator curl: standard curl of each row, `(curl A)_ij = eps_jpq d_p A_iq`.
/// Equals `(nabla x A^T)^T = -A x nabla`.
pub fn curl_row(a: &MatPoly) -> MatPoly {
    MatPoly::from_fn(|i, j| {
        let mut s = Polynomial::zero(3);
        for p in 0..3 {
            for q in 0..3 {
                let e = eps(j, p, q);
                if e != 0 {
                    s = &s + &a.0[i][q].diff(p).scale(&rat(e));
                }
            }
        }
        s
    })
}

/// Symmetric gradient `def v = (nabla v + (nabla v)^T)/2`.
pub fn def(v: &VecPoly) -> SymMatPoly {
    SymMatPoly::expect_symmetric(nabla_vec(v).sym(), "def")
}

/// The incompatibility operator `inc t = nabla x t x nabla` on a symmetric
/// tensor. The result is symmetric; an asymmetric outcome panics.
pub fn inc(t: &SymMatPoly) -> SymMatPoly {
    SymMatPoly::expect_symmetric(mat_cross_nabla(&nabla_cross_mat(t.mat())), "inc")
}

/// Independent route for `inc`: `-curl (curl t)^T` with the row-wise letter
/// curl applied twice. Kept separate from [`inc`] so the two can cross-check
/// each other.
pub fn inc_via_double_curl(t: &SymMatPoly) -> MatPoly {
    -&curl_row(&curl_row(t.mat()).transpose())
}

/// `mskw w`: the skew matrix with `mskw(w) v = w x v`.
pub fn mskw(w: &VecPoly) -> MatPoly {
    let z = Polynomial::zero(3);
    MatPoly([
        [z.clone(), -&w.0[2], w.0[1].clone()],
        [w.0[2].clone(), z.clone(), -&w.0[0]],
        [-&w.0[1], w.0[0].clone(), z],
    ])
}

/// `vskw = mskw^{-1} . skw`.
pub fn vskw(m: &MatPoly) -> VecPoly {
    let s = m.skw();
    VecPoly([s.0[2][1].clone(), s.0[0][2].clone(), s.0[1][0].clone()])
}

// ---- Koszul operators (center c) ----

/// `t . (x - c)` applied row-wise.
pub fn koszul_dot_x(t: &SymMatPoly, c: &[Rational; 3]) -> VecPoly {
    t.mat().dot_right(&x_minus(c))
}

/// `(x - c) x t x (x - c)`; symmetric for symmetric input (asserted).
pub fn koszul_x_cross(t: &SymMatPoly, c: &[Rational; 3]) -> SymMatPoly {
    let x = x_minus(c);
    SymMatPoly::expect_symmetric(t.mat().cross_left(&x).cross_right(&x), "koszul_x_cross")
}

/// `sym(v (x - c)^T)`.
pub fn koszul_sym_vx(v: &VecPoly, c: &[Rational; 3]) -> SymMatPoly {
    SymMatPoly::expect_symmetric(v.outer(&x_minus(c)).sym(), "koszul_sym_vx")
}

/// Projection onto linearized rigid motions:
/// `pi_RM v = v(c) + (curl v)(c)/2 x (x - c)`.
pub fn pi_rm(v: &VecPoly, c: &[Rational; 3]) -> VecPoly {
    let v_c = v.eval(c);
    let w_c = curl_vec(v).eval(c);
    let half = crate::rat::ratio(1, 2);
    let a = VecPoly::constant(&w_c).scale(&half);
    &VecPoly::constant(&v_c) + &a.cross(&x_minus(c))
}

/// Basis of the rigid motions `{b, a x (x - c)}`: six vector fields.
pub fn rigid_motion_basis(c: &[Rational; 3]) -> Vec<VecPoly> {
    let mut out = Vec::with_capacity(6);
    for i in 0..3 {
        let mut e = [Rational::zero(), Rational::zero(), Rational::zero()];
        e[i] = rat(1);
        out.push(VecPoly::constant(&e));
    }
    for i in 0..3 {
        let mut e = [Rational::zero(), Rational::zero(), Rational::zero()];
        e[i] = rat(1);
        out.push(VecPoly::constant(&e).cross(&x_minus(c)));
    }
    out
}

/// Random symmetric matrix polynomial of total degree `<= deg` with small
/// rational coefficients.
pub fn random_sym(rng: &mut Rng, deg: i64) -> SymMatPoly {
    let monos = crate::rat::monomials_up_to(deg, 3);
    let mut m = MatPoly::zero();
    for i in 0..3 {
        for j in i..3 {
            let mut p = Polynomial::zero(3);
            for e in &monos {
                p.add_term(*e, rng.small_rational(3, 2));
            }
            m.0[i][j] = p.clone();
            m.0[j][i] = p;
        }
    }
    SymMatPoly::new(m).unwrap()
}

/// Random vector polynomial of total degree `<= deg`.
pub fn random_vec(rng: &mut Rng, deg: i64) -> VecPoly {
    let monos = crate::rat::monomials_up_to(deg, 3);
    VecPoly::from_fn(|_| {
        let mut p = Polynomial::zero(3);
        for e in &monos {
            p.add_term(*e, rng.small_rational(3, 2));
        }
        p
    })
}

/// Random scalar polynomial of total degree `<= deg` in `vars` variables.
pub fn random_scalar(rng: &mut Rng, deg: i64, vars: usize) -> Polynomial {
    let monos = crate::rat::monomials_up_to(deg, vars);
    let mut p = Polynomial::zero(vars);
    for e in &monos {
        p.add_term(*e, rng.small_rational(3, 2));
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::ratio;

    fn xyz() -> (Polynomial, Polynomial, Polynomial) {
        (Polynomial::var(3, 0), Polynomial::var(3, 1), Polynomial::var(3, 2))
    }

    #[test]
    fn nabla_examples() {
        let (x, y, z) = xyz();
        // v = (x, 0, 0): nabla entry (0,0) = 1
        let v = VecPoly([x.clone(), Polynomial::zero(3), Polynomial::zero(3)]);
        let g = nabla_vec(&v);
        assert_eq!(g.0[0][0], Polynomial::one(3));
        assert!(g.0[1][1].is_zero());
        // rotation field v = (y, -x, 0): (0,1) = -1, (1,0) = 1
        let v = VecPoly([y.clone(), -&x, Polynomial::zero(3)]);
        let g = nabla_vec(&v);
        assert_eq!(g.0[0][1], Polynomial::constant(3, rat(-1)));
        assert_eq!(g.0[1][0], Polynomial::one(3));
        // v = (z^2, 0, 0): (2,0) entry = 2z, rest zero
        let v = VecPoly([&z * &z, Polynomial::zero(3), Polynomial::zero(3)]);
        let g = nabla_vec(&v);
        assert_eq!(g.0[2][0], z.scale(&rat(2)));
        let mut nonzero = 0;
        for i in 0..3 {
            for j in 0..3 {
                if !g.0[i][j].is_zero() {
                    nonzero += 1;
                }
            }
        }
        assert_eq!(nonzero, 1);
    }

    #[test]
    fn def_vanishes_on_rigid_motions() {
        // v = a x x + b with a = (1,2,3)
        let a = VecPoly::constant(&[rat(1), rat(2), rat(3)]);
        let v = a.cross(&x_minus(&[Rational::zero(), Rational::zero(), Rational::zero()]));
        assert!(def(&v).is_zero());
        let (x, _, _) = xyz();
        let v = VecPoly([x.clone(), Polynomial::zero(3), Polynomial::zero(3)]);
        assert_eq!(def(&v).mat().0[0][0], Polynomial::one(3));
        // v = (0, x^2, 0): def entries (0,1) = (1,0) = x
        let v = VecPoly([Polynomial::zero(3), &x * &x, Polynomial::zero(3)]);
        let d = def(&v);
        assert_eq!(d.mat().0[0][1], x);
        assert_eq!(d.mat().0[1][0], x);
    }

    #[test]
    fn mskw_matches_paper_display() {
        let w = VecPoly::constant(&[rat(1), rat(0), rat(0)]);
        let m = mskw(&w);
        let at = |i: usize, j: usize| m.0[i][j].eval(&[rat(0), rat(0), rat(0)]);
        assert_eq!(at(1, 2), rat(-1));
        assert_eq!(at(2, 1), rat(1));
        assert_eq!(at(0, 0), rat(0));
        assert_eq!(at(0, 1), rat(0));
    }

    #[test]
    fn vskw_roundtrip_and_symmetric_kill() {
        let (x, y, z) = xyz();
        let w = VecPoly([x.clone(), &y * &y, &(&z * &z) * &z]);
        assert_eq!(vskw(&mskw(&w)), w);
        let s = random_sym(&mut Rng::new(3), 3);
        assert!(vskw(s.mat()).is_zero());
    }

    #[test]
    fn inc_examples() {
        // inc of def vanishes
        let (x, y, z) = xyz();
        let v = VecPoly([&(&x * &x) * &x, &(&x * &y) * &z, &(&z * &z) * &y]);
        assert!(inc(&def(&v)).is_zero());
        // t = z^2 e1 e1^T -> inc has (1,1)-entry -2 (0-based)
        let mut m = MatPoly::zero();
        m.0[0][0] = &z * &z;
        let t = SymMatPoly::new(m).unwrap();
        let it = inc(&t);
        assert_eq!(it.mat().0[1][1], Polynomial::constant(3, rat(-2)));
        let mut nonzero = 0;
        for i in 0..3 {
            for j in 0..3 {
                if !it.mat().0[i][j].is_zero() {
                    nonzero += 1;
                }
            }
        }
        assert_eq!(nonzero, 1);
        // x x^T is in the kernel of inc
        let c0 = [Rational::zero(), Rational::zero(), Rational::zero()];
        let xx = SymMatPoly::new(x_minus(&c0).outer(&x_minus(&c0))).unwrap();
        assert!(inc(&xx).is_zero());
    }

    #[test]
    fn inc_agrees_with_double_curl() {
        let mut rng = Rng::new(11);
        for _ in 0..4 {
            let t = random_sym(&mut rng, 4);
            assert_eq!(*inc(&t).mat(), inc_via_double_curl(&t));
        }
    }

    #[test]
    fn div_row_examples() {
        let (x, _, _) = xyz();
        let m = &MatPoly::identity() * &x;
        let d = div_row(&m);
        assert_eq!(d.0[0], Polynomial::one(3));
        assert!(d.0[1].is_zero());
        // div . inc = 0
        let t = random_sym(&mut Rng::new(5), 4);
        assert!(div_row(inc(&t).mat()).is_zero());
        // 2 div sym(x q^T) = 4q + (grad q).x + (div q) x with q = e1 -> (2,0,0)
        let c0 = [Rational::zero(), Rational::zero(), Rational::zero()];
        let q = VecPoly::constant(&[rat(1), rat(0), rat(0)]);
        let s = koszul_sym_vx(&q, &c0);
        let d = div_row(s.mat());
        assert_eq!(d.0[0], Polynomial::constant(3, rat(2)));
        assert!(d.0[1].is_zero() && d.0[2].is_zero());
    }

    #[test]
    fn koszul_compositions_vanish() {
        let c0 = [Rational::zero(), Rational::zero(), Rational::zero()];
        let (x, y, z) = xyz();
        let v = VecPoly([x, y, z]);
        assert!(koszul_x_cross(&koszul_sym_vx(&v, &c0), &c0).is_zero());
        let t = random_sym(&mut Rng::new(9), 3);
        assert!(koszul_x_cross(&t, &c0)
            .mat()
            .dot_right(&x_minus(&c0))
            .is_zero());
        // identity . x = x
        let id = SymMatPoly::new(MatPoly::identity()).unwrap();
        assert_eq!(koszul_dot_x(&id, &c0), x_minus(&c0));
    }

    #[test]
    fn pi_rm_behavior() {
        let c = [ratio(1, 3), ratio(-1, 2), rat(0)];
        // fixed on rigid motions
        let a = VecPoly::constant(&[rat(2), rat(-1), rat(3)]);
        let b = VecPoly::constant(&[rat(0), rat(5), ratio(1, 2)]);
        let v = &a.cross(&x_minus(&c)) + &b;
        assert_eq!(pi_rm(&v, &c), v);
        // kills (x^2, y^2, z^2) at c = 0
        let c0 = [Rational::zero(), Rational::zero(), Rational::zero()];
        let (x, y, z) = xyz();
        let v = VecPoly([&x * &x, &y * &y, &z * &z]);
        assert!(pi_rm(&v, &c0).is_zero());
        // kills t . x for symmetric t
        let t = random_sym(&mut Rng::new(2), 3);
        assert!(pi_rm(&koszul_dot_x(&t, &c), &c).is_zero());
    }

    #[test]
    fn bgg_identities() {
        let mut rng = Rng::new(21);
        let c0 = [Rational::zero(), Rational::zero(), Rational::zero()];
        let t = random_sym(&mut rng, 4);
        // curl(t.x) - (curl t).x = 2 vskw t  (column-wise curl, eq on K-blocks)
        let lhs = {
            let tx = koszul_dot_x(&t, &c0);
            curl_vec(&tx)
        };
        let rhs = &nabla_cross_mat(t.mat()).dot_right(&x_minus(&c0)) + &vskw(t.mat()).scale(&rat(2));
        assert_eq!(lhs, rhs);
        // tr(nabla x t) = -div(2 vskw t)
        let any = {
            // also exercise a non-symmetric input
            let mut m = t.mat().clone();
            m.0[0][1] = &m.0[0][1] + &Polynomial::var(3, 2);
            m
        };
        let lhs = nabla_cross_mat(&any).trace();
        let rhs = -&div_vec(&vskw(&any).scale(&rat(2)));
        assert_eq!(lhs, rhs);
        // tr(t x x) = -2 vskw(t) . x
        let lhs = any.cross_right(&x_minus(&c0)).trace();
        let rhs = -&vskw(&any).scale(&rat(2)).dot(&x_minus(&c0));
        assert_eq!(lhs, rhs);
        // grad v = def v + mskw(curl v)/2
        let v = random_vec(&mut rng, 5);
        let lhs = grad_vec(&v);
        let rhs = &def(&v).into_mat() + &mskw(&curl_vec(&v)).scale(&ratio(1, 2));
        assert_eq!(lhs, rhs);
    }
}
