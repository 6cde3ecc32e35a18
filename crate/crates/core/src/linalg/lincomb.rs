use alloc::collections::btree_map::{self, BTreeMap};
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::Rational;

/// A finite formal linear combination with rational coefficients over a
/// basis keyed by `K`.
///
/// Zero coefficients are never stored, so two combinations are equal exactly
/// when their term maps are equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Rational>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis element `k` with coefficient one.
    pub fn basis(k: K) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(k, Rational::one());
        Self { terms }
    }

    pub fn term(k: K, c: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(k, c);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (K, Rational)>>(it: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in it {
            out.add_term(k, c);
        }
        out
    }

    /// Adds `c * k` in place.
    pub fn add_term(&mut self, k: K, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Adds `c * other` in place.
    pub fn add_scaled(&mut self, c: &Rational, other: &Self) {
        if c.is_zero() {
            return;
        }
        let unit = c.is_one();
        for (k, v) in &other.terms {
            let v = if unit { v.clone() } else { c * v };
            match self.terms.get_mut(k) {
                Some(x) => {
                    *x += v;
                    if x.is_zero() {
                        self.terms.remove(k);
                    }
                }
                None => {
                    self.terms.insert(k.clone(), v);
                }
            }
        }
    }

    /// Adds `c * other` in place, consuming `other`.
    pub fn add_scaled_owned(&mut self, c: &Rational, other: Self) {
        if c.is_zero() {
            return;
        }
        let unit = c.is_one();
        for (k, v) in other.terms {
            self.add_term(k, if unit { v } else { c * v });
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn coeff(&self, k: &K) -> Rational {
        self.terms.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Keys with a nonzero coefficient.
    pub fn support(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Rational)> {
        self.terms.iter()
    }

    pub fn first_key(&self) -> Option<&K> {
        self.terms.keys().next()
    }

    /// Applies `f` to every basis element, collecting coefficients of keys
    /// that collide.
    pub fn map_keys<L: Ord + Clone, F: FnMut(&K) -> L>(&self, mut f: F) -> LinComb<L> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_term(f(k), c.clone());
        }
        out
    }

    /// Linear extension of a map from basis elements to combinations.
    pub fn flat_map<L: Ord + Clone, E, F>(&self, mut f: F) -> Result<LinComb<L>, E>
    where
        F: FnMut(&K) -> Result<LinComb<L>, E>,
    {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled_owned(c, f(k)?);
        }
        Ok(out)
    }

    /// Bilinear extension of a map on pairs of basis elements.
    pub fn bilinear<L, M, E, F>(&self, other: &LinComb<L>, mut f: F) -> Result<LinComb<M>, E>
    where
        L: Ord + Clone,
        M: Ord + Clone,
        F: FnMut(&K, &L) -> Result<LinComb<M>, E>,
    {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            for (l, d) in &other.terms {
                out.add_scaled_owned(&(c * d), f(k, l)?);
            }
        }
        Ok(out)
    }

    pub fn into_terms(self) -> Vec<(K, Rational)> {
        self.terms.into_iter().collect()
    }
}

impl<K: Ord + Clone> FromIterator<(K, Rational)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, Rational)>>(iter: I) -> Self {
        Self::from_terms(iter)
    }
}

impl<K: Ord + Clone> AddAssign<&LinComb<K>> for LinComb<K> {
    fn add_assign(&mut self, rhs: &LinComb<K>) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), c.clone());
        }
    }
}

impl<K: Ord + Clone> SubAssign<&LinComb<K>> for LinComb<K> {
    fn sub_assign(&mut self, rhs: &LinComb<K>) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), -c.clone());
        }
    }
}

impl<K: Ord + Clone> Add for LinComb<K> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += &rhs;
        self
    }
}

impl<K: Ord + Clone> Add<&LinComb<K>> for &LinComb<K> {
    type Output = LinComb<K>;
    fn add(self, rhs: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Ord + Clone> Sub for LinComb<K> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self -= &rhs;
        self
    }
}

impl<K: Ord + Clone> Sub<&LinComb<K>> for &LinComb<K> {
    type Output = LinComb<K>;
    fn sub(self, rhs: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<K: Ord + Clone> Neg for LinComb<K> {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl<K: Ord + Clone> Mul<&LinComb<K>> for &Rational {
    type Output = LinComb<K>;
    fn mul(self, rhs: &LinComb<K>) -> LinComb<K> {
        rhs.scale(self)
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{}·{:?}", c, k)?;
        }
        Ok(())
    }
}
