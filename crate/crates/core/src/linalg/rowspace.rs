use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{LinComb, Rational};

type Entries = Vec<(u32, BigInt)>;

/// An incrementally built row space kept in reduced echelon form.
///
/// Basis keys are interned into column indices on first sight. The pivot of
/// every row is its smallest key under `K`'s order, and no row has a nonzero
/// entry in another row's pivot column. Rows are stored as primitive integer
/// vectors (fraction-free) and normalised to rationals only when read back.
#[derive(Clone, Debug)]
pub struct RowSpace<K: Ord> {
    keys: Vec<K>,
    index: BTreeMap<K, u32>,
    rows: Vec<Entries>,
    row_pivot_col: Vec<u32>,
    pivot_row: Vec<Option<usize>>,
}

impl<K: Ord + Clone> Default for RowSpace<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Ord + Clone> RowSpace<K> {
    pub fn new() -> Self {
        Self {
            keys: Vec::new(),
            index: BTreeMap::new(),
            rows: Vec::new(),
            row_pivot_col: Vec::new(),
            pivot_row: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn intern(&mut self, k: &K) -> u32 {
        if let Some(&i) = self.index.get(k) {
            return i;
        }
        let i = self.keys.len() as u32;
        self.keys.push(k.clone());
        self.index.insert(k.clone(), i);
        self.pivot_row.push(None);
        i
    }

    /// Integer entries proportional to `v`, interning new keys.
    fn intern_entries(&mut self, v: &LinComb<K>) -> Entries {
        let cols: Vec<u32> = v.iter().map(|(k, _)| self.intern(k)).collect();
        integer_entries(v, cols)
    }

    /// Integer entries proportional to `v`, or `None` if `v` has a key no
    /// row has ever touched.
    fn lookup_entries(&self, v: &LinComb<K>) -> Option<Entries> {
        let cols = v
            .iter()
            .map(|(k, _)| self.index.get(k).copied())
            .collect::<Option<Vec<u32>>>()?;
        Some(integer_entries(v, cols))
    }

    /// Reduces `v` against every row whose pivot it touches.
    fn reduce(&self, mut v: Entries) -> Entries {
        let pivots: Vec<(usize, BigInt)> = v
            .iter()
            .filter_map(|(c, x)| self.pivot_row[*c as usize].map(|r| (r, x.clone())))
            .collect();
        for (r, _) in pivots {
            let row = &self.rows[r];
            let p = self.pivot_col(r);
            let vp = match v.binary_search_by_key(&p, |e| e.0) {
                Ok(i) => v[i].1.clone(),
                Err(_) => continue,
            };
            let rp = entry(row, p);
            v = combine(&rp, &v, &vp, row);
            make_primitive(&mut v);
        }
        v
    }

    fn pivot_col(&self, r: usize) -> u32 {
        self.row_pivot_col[r]
    }

    fn row_pivot(&self, row: &Entries) -> u32 {
        row.iter()
            .map(|e| e.0)
            .min_by(|a, b| self.keys[*a as usize].cmp(&self.keys[*b as usize]))
            .expect("empty row")
    }

    /// Inserts `v`, returning `true` iff the rank grew.
    pub fn insert(&mut self, v: &LinComb<K>) -> bool {
        if v.is_zero() {
            return false;
        }
        let entries = self.intern_entries(v);
        let mut w = self.reduce(entries);
        if w.is_empty() {
            return false;
        }
        let p = self.row_pivot(&w);
        if entry(&w, p).is_negative() {
            for e in w.iter_mut() {
                e.1 = -core::mem::take(&mut e.1);
            }
        }
        let wp = entry(&w, p);
        for r in 0..self.rows.len() {
            if let Ok(i) = self.rows[r].binary_search_by_key(&p, |e| e.0) {
                let rp = self.rows[r][i].1.clone();
                let mut new = combine(&wp, &self.rows[r], &rp, &w);
                make_primitive(&mut new);
                self.rows[r] = new;
            }
        }
        self.pivot_row[p as usize] = Some(self.rows.len());
        self.row_pivot_col.push(p);
        self.rows.push(w);
        true
    }

    /// Whether `v` lies in the span.
    pub fn contains(&self, v: &LinComb<K>) -> bool {
        if v.is_zero() {
            return true;
        }
        // Unknown keys cannot be cancelled by any row.
        match self.lookup_entries(v) {
            None => false,
            Some(e) => self.reduce(e).is_empty(),
        }
    }

    /// The reduced rows, each scaled so that its pivot coefficient is one.
    pub fn basis(&self) -> Vec<LinComb<K>> {
        self.rows
            .iter()
            .zip(&self.row_pivot_col)
            .map(|(row, &p)| {
                let pc = entry(row, p);
                LinComb::from_terms(row.iter().map(|(c, x)| {
                    (
                        self.keys[*c as usize].clone(),
                        Rational::new(x.clone(), pc.clone()),
                    )
                }))
            })
            .collect()
    }

    /// Pivot keys, in row insertion order.
    pub fn pivots(&self) -> Vec<K> {
        self.row_pivot_col
            .iter()
            .map(|&p| self.keys[p as usize].clone())
            .collect()
    }

    /// A basis of `{x : <row, x> = 0 for every row}` inside the span of
    /// `ambient`, where `<., .>` is the coordinate dot product.
    ///
    /// Every key used by a row must appear in `ambient`.
    pub fn null_space(&self, ambient: &[K]) -> Vec<LinComb<K>> {
        let basis = self.basis();
        let pivots = self.pivots();
        ambient
            .iter()
            .filter(|k| !pivots.contains(k))
            .map(|free| {
                let mut x = LinComb::basis(free.clone());
                for (row, p) in basis.iter().zip(&pivots) {
                    let c = row.coeff(free);
                    if !c.is_zero() {
                        x.add_term(p.clone(), -c);
                    }
                }
                x
            })
            .collect()
    }
}

fn integer_entries<K: Ord + Clone>(v: &LinComb<K>, cols: Vec<u32>) -> Entries {
    let mut lcm = BigInt::one();
    for (_, c) in v.iter() {
        lcm = lcm.lcm(c.denom());
    }
    let mut out: Entries = v
        .iter()
        .zip(cols)
        .map(|((_, c), col)| (col, (c.numer() * (&lcm / c.denom()))))
        .collect();
    out.sort_by_key(|e| e.0);
    out
}

fn entry(row: &Entries, col: u32) -> BigInt {
    match row.binary_search_by_key(&col, |e| e.0) {
        Ok(i) => row[i].1.clone(),
        Err(_) => BigInt::zero(),
    }
}

/// `a * x - b * y` for sorted sparse vectors.
fn combine(a: &BigInt, x: &Entries, b: &BigInt, y: &Entries) -> Entries {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push((x[i].0, a * &x[i].1));
            i += 1;
        } else if take_y {
            out.push((y[j].0, -(b * &y[j].1)));
            j += 1;
        } else {
            let v = a * &x[i].1 - b * &y[j].1;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn make_primitive(v: &mut Entries) {
    let mut g = BigInt::zero();
    for (_, x) in v.iter() {
        g = g.gcd(x);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for e in v.iter_mut() {
        e.1 /= &g;
    }
}
