//! Exact dense linear algebra over a field.
//!
//! Everything here works for any type satisfying [`Field`]; the crate uses it
//! with `BigRational` and with Gaussian rationals `Complex<BigRational>`.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Exact rationals.
pub type Q = BigRational;
/// Exact Gaussian rationals, Q(i).
pub type Qi = Complex<BigRational>;

pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
}

impl<T> Field for T where
    T: Clone
        + PartialEq
        + Debug
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
        + Neg<Output = T>
        + Send
        + Sync
{
}

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(re: Q, im: Q) -> Qi {
    Complex::new(re, im)
}

/// Embeds an integer into Q(i).
pub fn ci(n: i64) -> Qi {
    Complex::new(q(n), Q::zero())
}

/// The fixed square root of -1 in Q(i).
pub fn imag_unit() -> Qi {
    Complex::new(Q::zero(), Q::one())
}

/// Incrementally built reduced row echelon form.
///
/// Rows are kept fully reduced with unit pivots, so the coordinates of a vector in the span
/// are read off at the pivot columns. With tracking enabled every row also records how it is
/// combined from the accepted input vectors.
#[derive(Clone, Debug)]
pub struct Echelon<T: Field> {
    width: usize,
    rows: Vec<Vec<T>>,
    pivots: Vec<usize>,
    combos: Option<Vec<Vec<T>>>,
}

impl<T: Field> Echelon<T> {
    pub fn new(width: usize) -> Self {
        Echelon {
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
            combos: None,
        }
    }

    pub fn tracked(width: usize) -> Self {
        Echelon {
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
            combos: Some(Vec::new()),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    /// Subtracts the span from `v` in place, returning the combination of rows removed.
    fn reduce_with(&self, v: &mut [T]) -> Vec<T> {
        let mut used = Vec::with_capacity(self.rows.len());
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p].clone();
            if !c.is_zero() {
                for (x, r) in v.iter_mut().zip(row) {
                    if !r.is_zero() {
                        *x = x.clone() - c.clone() * r.clone();
                    }
                }
            }
            used.push(c);
        }
        used
    }

    pub fn reduce(&self, v: &[T]) -> Vec<T> {
        let mut w = v.to_vec();
        self.reduce_with(&mut w);
        w
    }

    pub fn contains(&self, v: &[T]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Adds `v` to the span. Returns false (and changes nothing) when `v` is already in it.
    pub fn insert(&mut self, v: &[T]) -> bool {
        assert_eq!(v.len(), self.width, "vector width mismatch");
        let mut w = v.to_vec();
        let used = self.reduce_with(&mut w);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = T::one() / w[p].clone();
        for x in w.iter_mut() {
            if !x.is_zero() {
                *x = x.clone() * inv.clone();
            }
        }
        let k = self.rows.len();
        let mut combo = None;
        if let Some(combos) = &mut self.combos {
            // new row = (v - sum used_i * row_i) / pivot, expressed in inputs
            let mut c = vec![T::zero(); k + 1];
            c[k] = inv.clone();
            for (i, u) in used.iter().enumerate() {
                if u.is_zero() {
                    continue;
                }
                for (j, cij) in combos[i].iter().enumerate() {
                    if !cij.is_zero() {
                        c[j] = c[j].clone() - inv.clone() * u.clone() * cij.clone();
                    }
                }
            }
            for old in combos.iter_mut() {
                old.push(T::zero());
            }
            combo = Some(c);
        }
        // keep the form reduced: clear column p in the older rows
        for i in 0..k {
            let c = self.rows[i][p].clone();
            if c.is_zero() {
                continue;
            }
            for (x, r) in self.rows[i].iter_mut().zip(&w) {
                if !r.is_zero() {
                    *x = x.clone() - c.clone() * r.clone();
                }
            }
            if let (Some(combos), Some(nc)) = (&mut self.combos, &combo) {
                for (x, r) in combos[i].iter_mut().zip(nc) {
                    if !r.is_zero() {
                        *x = x.clone() - c.clone() * r.clone();
                    }
                }
            }
        }
        self.rows.push(w);
        self.pivots.push(p);
        if let (Some(combos), Some(nc)) = (&mut self.combos, combo) {
            combos.push(nc);
        }
        true
    }

    /// Coordinates of `v` with respect to the reduced rows, if `v` lies in the span.
    pub fn row_coordinates(&self, v: &[T]) -> Option<Vec<T>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Coordinates of `v` with respect to the accepted input vectors (tracked mode only).
    pub fn input_coordinates(&self, v: &[T]) -> Option<Vec<T>> {
        let combos = self
            .combos
            .as_ref()
            .expect("echelon built without tracking");
        let rc = self.row_coordinates(v)?;
        let mut out = vec![T::zero(); self.rows.len()];
        for (c, combo) in rc.iter().zip(combos) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(combo) {
                if !x.is_zero() {
                    *o = o.clone() + c.clone() * x.clone();
                }
            }
        }
        Some(out)
    }
}

/// Rank of a list of vectors of equal width.
pub fn rank<T: Field>(vectors: &[Vec<T>]) -> usize {
    let Some(first) = vectors.first() else {
        return 0;
    };
    let mut e = Echelon::new(first.len());
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

/// Dimension of the intersection of two spans, computed as the nullity of `[A | -B]`
/// and realized by explicit vectors lying in both spans.
pub fn intersection_basis<T: Field>(a: &[Vec<T>], b: &[Vec<T>]) -> Vec<Vec<T>> {
    let ea = independent(a);
    let eb = independent(b);
    if ea.is_empty() || eb.is_empty() {
        return Vec::new();
    }
    let width = ea[0].len();
    // columns of the system are the basis vectors; rows are coordinates
    let cols: Vec<Vec<T>> = ea
        .iter()
        .cloned()
        .chain(eb.iter().map(|v| v.iter().map(|x| -x.clone()).collect()))
        .collect();
    let system: Vec<Vec<T>> = (0..width)
        .map(|r| cols.iter().map(|c| c[r].clone()).collect())
        .collect();
    let ker = kernel(&system, cols.len());
    let mut out = Vec::new();
    for k in ker {
        let mut w = vec![T::zero(); width];
        for (coef, v) in k.iter().zip(&ea) {
            if coef.is_zero() {
                continue;
            }
            for (x, y) in w.iter_mut().zip(v) {
                *x = x.clone() + coef.clone() * y.clone();
            }
        }
        out.push(w);
    }
    out
}

/// A maximal linearly independent subfamily, in input order.
pub fn independent<T: Field>(vectors: &[Vec<T>]) -> Vec<Vec<T>> {
    let Some(first) = vectors.first() else {
        return Vec::new();
    };
    let mut e = Echelon::new(first.len());
    vectors.iter().filter(|v| e.insert(v)).cloned().collect()
}

/// Basis of the null space of the `rows × ncols` matrix given by its rows.
pub fn kernel<T: Field>(rows: &[Vec<T>], ncols: usize) -> Vec<Vec<T>> {
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(r);
    }
    let pivot_set: Vec<bool> = {
        let mut s = vec![false; ncols];
        for &p in e.pivots() {
            s[p] = true;
        }
        s
    };
    let mut out = Vec::new();
    for free in (0..ncols).filter(|&c| !pivot_set[c]) {
        let mut v = vec![T::zero(); ncols];
        v[free] = T::one();
        for (row, &p) in e.rows().iter().zip(e.pivots()) {
            v[p] = -row[free].clone();
        }
        out.push(v);
    }
    out
}

/// One solution of `A x = b`, where `A` is given by rows.
pub fn solve<T: Field>(rows: &[Vec<T>], ncols: usize, b: &[T]) -> Option<Vec<T>> {
    let augmented: Vec<Vec<T>> = rows
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut v = r.clone();
            v.push(bi.clone());
            v
        })
        .collect();
    let mut e = Echelon::new(ncols + 1);
    for r in &augmented {
        e.insert(r);
    }
    if e.pivots().contains(&ncols) {
        return None;
    }
    let mut x = vec![T::zero(); ncols];
    for (row, &p) in e.rows().iter().zip(e.pivots()) {
        x[p] = row[ncols].clone();
    }
    Some(x)
}

/// Dense row-major square or rectangular matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat<T: Field> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<T>,
}

impl<T: Field> Mat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m.data[i * n + j] = T::one();
        m
    }

    pub fn from_flat(n: usize, flat: &[T]) -> Self {
        assert_eq!(flat.len(), n * n);
        Mat {
            rows: n,
            cols: n,
            data: flat.to_vec(),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a.clone()).collect(),
        }
    }

    /// Product that skips zero entries of the left factor, which keeps sparse factors cheap.
    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows);
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o.data[k * o.cols + j];
                    if b.is_zero() {
                        continue;
                    }
                    let cell = &mut out.data[i * o.cols + j];
                    *cell = cell.clone() + a.clone() * b.clone();
                }
            }
        }
        out
    }

    pub fn commutator(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    pub fn row_vectors(&self) -> Vec<Vec<T>> {
        self.data.chunks(self.cols).map(|c| c.to_vec()).collect()
    }

    pub fn rank(&self) -> usize {
        rank(&self.row_vectors())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::identity(self.rows);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut e = Echelon::tracked(n);
        for r in self.row_vectors() {
            if !e.insert(&r) {
                return None;
            }
        }
        // rows of self are the inputs; reduced rows are the identity, so the tracked
        // combinations form the inverse after reordering by pivot
        let mut inv = Self::zeros(n, n);
        for j in 0..n {
            let mut unit = vec![T::zero(); n];
            unit[j] = T::one();
            let c = e.input_coordinates(&unit)?;
            // unit_j = sum_i c_i * row_i(self)  =>  (c as row) * self = e_j
            for (i, ci) in c.into_iter().enumerate() {
                inv.set(j, i, ci);
            }
        }
        Some(inv)
    }

    /// Submatrix on the given row and column index sets.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| {
            self.get(rows[i], cols[j]).clone()
        })
    }
}

/// Jordan type of a nilpotent matrix from the ranks of its powers.
pub fn jordan_partition<T: Field>(x: &Mat<T>) -> Option<Vec<usize>> {
    let n = x.rows;
    let mut ranks = vec![n];
    let mut p = Mat::identity(n);
    while *ranks.last().unwrap() > 0 {
        if ranks.len() > n + 1 {
            return None;
        }
        p = p.mul(x);
        let r = p.rank();
        if r == *ranks.last().unwrap() {
            return None;
        }
        ranks.push(r);
    }
    // number of blocks of size >= k is ranks[k-1] - ranks[k]
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut parts = Vec::new();
    for k in (1..=at_least.len()).rev() {
        let exact = at_least[k - 1] - at_least.get(k).copied().unwrap_or(0);
        parts.extend(std::iter::repeat_n(k, exact));
    }
    Some(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qv(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn rank_and_kernel() {
        let rows = vec![qv(&[1, 2, 3]), qv(&[2, 4, 6]), qv(&[1, 0, 1])];
        assert_eq!(rank(&rows), 2);
        let k = kernel(&rows, 3);
        assert_eq!(k.len(), 1);
        for r in &rows {
            let dot = r.iter().zip(&k[0]).fold(q(0), |a, (x, y)| a + x * y);
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn tracked_coordinates_reconstruct() {
        let inputs = vec![qv(&[1, 1, 0]), qv(&[0, 2, 1])];
        let mut e = Echelon::tracked(3);
        for v in &inputs {
            assert!(e.insert(v));
        }
        let target = qv(&[3, 7, 2]);
        let c = e.input_coordinates(&target).unwrap();
        assert_eq!(c, vec![q(3), q(2)]);
        assert!(e.input_coordinates(&qv(&[0, 0, 1])).is_none());
    }

    #[test]
    fn inverse_and_solve() {
        let m = Mat::from_fn(3, 3, |i, j| q([[2, 1, 0], [0, 1, 4], [1, 0, 1]][i][j]));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Mat::identity(3));
        let x = solve(&m.row_vectors(), 3, &qv(&[1, 2, 3])).unwrap();
        let back: Vec<Q> = m
            .row_vectors()
            .iter()
            .map(|r| r.iter().zip(&x).fold(q(0), |a, (p, s)| a + p * s))
            .collect();
        assert_eq!(back, qv(&[1, 2, 3]));
    }

    #[test]
    fn intersection_of_planes() {
        let a = vec![qv(&[1, 0, 0]), qv(&[0, 1, 0])];
        let b = vec![qv(&[0, 1, 0]), qv(&[0, 0, 1])];
        let i = intersection_basis(&a, &b);
        assert_eq!(i.len(), 1);
        assert_eq!(rank(&i), 1);
        assert!(i[0][0].is_zero() && i[0][2].is_zero());
    }

    #[test]
    fn jordan_types() {
        let mut x: Mat<Q> = Mat::zeros(5, 5);
        x.set(0, 1, q(1));
        x.set(1, 2, q(1));
        x.set(3, 4, q(1));
        assert_eq!(jordan_partition(&x), Some(vec![3, 2]));
        assert_eq!(jordan_partition(&Mat::<Q>::identity(2)), None);
        assert_eq!(
            jordan_partition(&Mat::<Q>::zeros(3, 3)),
            Some(vec![1, 1, 1])
        );
    }

    #[test]
    fn gaussian_rationals() {
        let i = imag_unit();
        assert_eq!(i.clone() * i.clone(), ci(-1));
        let rows = vec![vec![ci(1), i.clone()], vec![i.clone(), ci(-1)]];
        assert_eq!(rank(&rows), 1);
    }
}
