//! Truncated exponential generating functions over the rationals.
//!
//! A [`TruncEGF`] of order `N` stores `c_0..=c_N`; the dimension in arity
//! `n` is `n! * c_n`. Binary operations truncate to the smaller order.

use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{qi, Rational};

pub const DEFAULT_ORDER: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncEGF {
    coeffs: Vec<Rational>,
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

fn ri(n: usize) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

impl TruncEGF {
    /// Ordinary coefficients `c_0, c_1, ...`, padded or cut to `order`.
    pub fn from_coeffs(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        Self { coeffs }
    }

    /// The series whose arity-`n` dimension is `dims[n]`.
    pub fn from_dims(dims: &[BigInt], order: usize) -> Self {
        let c = dims
            .iter()
            .enumerate()
            .map(|(n, d)| Rational::new(d.clone(), factorial(n)))
            .collect();
        Self::from_coeffs(c, order)
    }

    pub fn zero(order: usize) -> Self {
        Self::from_coeffs(Vec::new(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        Self::from_coeffs(alloc::vec![c], order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    /// The variable `x`.
    pub fn x(order: usize) -> Self {
        Self::from_coeffs(alloc::vec![Rational::zero(), Rational::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> Rational {
        self.coeffs.get(n).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// `n! * c_n`, which need not be an integer.
    pub fn dim(&self, n: usize) -> Rational {
        self.coeff(n) * Rational::from_integer(factorial(n))
    }

    /// All dimensions `1..=N`, failing if any is not a nonnegative integer.
    pub fn dims(&self) -> Result<Vec<BigInt>> {
        (1..=self.order())
            .map(|n| {
                let d = self.dim(n);
                if !d.is_integer() || d.is_negative() {
                    return Err(Error::Series("dimension is not a nonnegative integer"));
                }
                Ok(d.to_integer())
            })
            .collect()
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().take(order + 1).cloned().collect(), order)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// `f(-x)`.
    pub fn negate_argument(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| if n % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    pub fn derivative(&self) -> Self {
        let n = self.order();
        let c = (1..=n).map(|k| &self.coeffs[k] * ri(k)).collect();
        Self::from_coeffs(c, n)
    }

    /// Antiderivative with zero constant term.
    pub fn integral(&self) -> Self {
        let n = self.order();
        let mut c = alloc::vec![Rational::zero()];
        c.extend((0..n).map(|k| &self.coeffs[k] / ri(k + 1)));
        Self::from_coeffs(c, n)
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inv(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::Series("inverse needs a nonzero constant term"));
        }
        let n = self.order();
        let mut b: Vec<Rational> = alloc::vec![a0.recip()];
        for m in 1..=n {
            let s: Rational = (1..=m).map(|k| &self.coeffs[k] * &b[m - k]).sum();
            b.push(-s / a0);
        }
        Ok(Self { coeffs: b })
    }

    /// Square root with positive constant term; the constant term must be
    /// the square of a rational.
    pub fn sqrt(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if !a0.is_positive() {
            return Err(Error::Series("sqrt needs a positive constant term"));
        }
        let (p, q) = (a0.numer(), a0.denom());
        let (rp, rq) = (p.sqrt(), q.sqrt());
        if &(&rp * &rp) != p || &(&rq * &rq) != q {
            return Err(Error::Series("sqrt needs a rational square constant term"));
        }
        let b0 = Rational::new(rp, rq);
        let two_b0 = &b0 * qi(2);
        let n = self.order();
        let mut b = alloc::vec![b0];
        for m in 1..=n {
            let s: Rational = (1..m).map(|k| &b[k] * &b[m - k]).sum();
            b.push((&self.coeffs[m] - s) / &two_b0);
        }
        Ok(Self { coeffs: b })
    }

    /// `exp(f)` for `f(0) = 0`, from `n b_n = sum k a_k b_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Series("exp needs a zero constant term"));
        }
        let n = self.order();
        let mut b = alloc::vec![Rational::one()];
        for m in 1..=n {
            let s: Rational = (1..=m).map(|k| &self.coeffs[k] * ri(k) * &b[m - k]).sum();
            b.push(s / ri(m));
        }
        Ok(Self { coeffs: b })
    }

    /// `log(f)` for `f(0) = 1`.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Series("log needs constant term one"));
        }
        Ok((&self.derivative() * &self.inv()?).integral())
    }

    /// `self(inner(x))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::Series(
                "compose needs an inner series with zero constant term",
            ));
        }
        let n = self.order().min(inner.order());
        let inner = inner.truncate(n);
        let mut acc = Self::zero(n);
        for c in self.coeffs[..=n].iter().rev() {
            acc = &(&acc * &inner) + &Self::constant(c.clone(), n);
        }
        Ok(acc)
    }

    /// The series `g` with `self(g(x)) = x`, by Newton iteration.
    pub fn compositional_inverse(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() || self.coeff(1).is_zero() {
            return Err(Error::Series("inverse needs c0 = 0 and c1 != 0"));
        }
        let n = self.order();
        let x = Self::x(n);
        let df = self.derivative();
        let mut g = x.scale(&self.coeffs[1].recip());
        let mut prec = 1;
        while prec < n {
            prec *= 2;
            let residual = &self.compose(&g)? - &x;
            let step = &residual * &df.compose(&g)?.inv()?;
            g = &g - &step;
        }
        Ok(g)
    }
}

impl Add for &TruncEGF {
    type Output = TruncEGF;
    fn add(self, rhs: &TruncEGF) -> TruncEGF {
        let n = self.order().min(rhs.order());
        TruncEGF {
            coeffs: (0..=n).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect(),
        }
    }
}

impl Sub for &TruncEGF {
    type Output = TruncEGF;
    fn sub(self, rhs: &TruncEGF) -> TruncEGF {
        self + &-rhs
    }
}

impl Neg for &TruncEGF {
    type Output = TruncEGF;
    fn neg(self) -> TruncEGF {
        TruncEGF {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &TruncEGF {
    type Output = TruncEGF;
    fn mul(self, rhs: &TruncEGF) -> TruncEGF {
        let n = self.order().min(rhs.order());
        let coeffs = (0..=n)
            .map(|m| (0..=m).map(|k| &self.coeffs[k] * &rhs.coeffs[m - k]).sum())
            .collect();
        TruncEGF { coeffs }
    }
}

/// `1 - sqrt(1 - 2x)`: one binary-tree shape per arity, all labellings.
pub fn hilbert_commag(order: usize) -> TruncEGF {
    let one = TruncEGF::one(order);
    let inner = &one - &TruncEGF::x(order).scale(&qi(2));
    &one - &inner.sqrt().expect("constant term one")
}

/// `exp(1 - sqrt(1 - 2x)) - 1`.
pub fn hilbert_sp(order: usize) -> TruncEGF {
    let e = hilbert_commag(order).exp().expect("zero constant term");
    &e - &TruncEGF::one(order)
}

/// The same series assembled by substituting into `e^x - 1` term by term.
pub fn hilbert_sp_assembled(order: usize) -> TruncEGF {
    let exp_minus_one: Vec<Rational> = (0..=order)
        .map(|n| {
            if n == 0 {
                Rational::zero()
            } else {
                Rational::new(BigInt::one(), factorial(n))
            }
        })
        .collect();
    TruncEGF::from_coeffs(exp_minus_one, order)
        .compose(&hilbert_commag(order))
        .expect("zero constant term")
}

/// `((1 - log(1 - x))^2 - 1) / 2`, built from `-log(1 - x) = sum x^n / n`.
pub fn hilbert_sp_dual(order: usize) -> TruncEGF {
    let l: Vec<Rational> = (0..=order)
        .map(|n| {
            if n == 0 {
                Rational::zero()
            } else {
                Rational::new(BigInt::one(), BigInt::from(n))
            }
        })
        .collect();
    let l = TruncEGF::from_coeffs(l, order);
    &l + &(&l * &l).scale(&Rational::new(BigInt::one(), BigInt::from(2)))
}

/// `f(-g(-t)) - t`, zero when the two series are Koszul-compatible.
pub fn duality_residual(f: &TruncEGF, g: &TruncEGF) -> Result<TruncEGF> {
    let n = f.order().min(g.order());
    let inner = -&g.negate_argument();
    Ok(&f.compose(&inner)? - &TruncEGF::x(n))
}
