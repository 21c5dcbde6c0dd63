//! Root systems of the simple Lie algebras.
//!
//! Simple roots are numbered as in the Onishchik–Vinberg tables. For the classical types and
//! G2 this agrees with Bourbaki; for E6, E7, E8 and F4 the permutation is stored in
//! [`RootSystem::bourbaki_index`]. The invariant form is scaled so that long roots have
//! squared length 2.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;

pub type R64 = Rational64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Letter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Letter {
    pub fn from_char(c: char) -> Option<Letter> {
        match c.to_ascii_uppercase() {
            'A' => Some(Letter::A),
            'B' => Some(Letter::B),
            'C' => Some(Letter::C),
            'D' => Some(Letter::D),
            'E' => Some(Letter::E),
            'F' => Some(Letter::F),
            'G' => Some(Letter::G),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'A',
            Letter::B => 'B',
            Letter::C => 'C',
            Letter::D => 'D',
            Letter::E => 'E',
            Letter::F => 'F',
            Letter::G => 'G',
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A simple type such as `E6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimpleType {
    pub letter: Letter,
    pub rank: usize,
}

impl SimpleType {
    pub fn new(letter: Letter, rank: usize) -> Self {
        SimpleType { letter, rank }
    }

    pub fn validate(self) -> Result<Self> {
        let bad = |reason: &str| Error::InvalidType {
            letter: self.letter.as_char(),
            rank: self.rank,
            reason: reason.to_string(),
        };
        let ok = match self.letter {
            Letter::A => self.rank >= 1,
            Letter::B | Letter::C => self.rank >= 2,
            Letter::D => self.rank >= 4,
            Letter::E => (6..=8).contains(&self.rank),
            Letter::F => self.rank == 4,
            Letter::G => self.rank == 2,
        };
        if ok {
            Ok(self)
        } else {
            Err(bad(match self.letter {
                Letter::A => "rank must be at least 1",
                Letter::B | Letter::C => "rank must be at least 2 (use A1)",
                Letter::D => "rank must be at least 4 (D3 is A3, D2 is A1+A1)",
                Letter::E => "rank must be 6, 7 or 8",
                Letter::F => "only F4 exists",
                Letter::G => "only G2 exists",
            }))
        }
    }

    /// Dimension of the simple Lie algebra of this type.
    pub fn algebra_dim(self) -> usize {
        let n = self.rank;
        match self.letter {
            Letter::A => n * (n + 2),
            Letter::B | Letter::C => n * (2 * n + 1),
            Letter::D => n * (2 * n - 1),
            Letter::E => match n {
                6 => 78,
                7 => 133,
                _ => 248,
            },
            Letter::F => 52,
            Letter::G => 14,
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter, self.rank)
    }
}

/// Dynkin data in Bourbaki numbering: squared lengths of simple roots and the edges.
fn bourbaki_dynkin(t: SimpleType) -> (Vec<R64>, Vec<(usize, usize)>) {
    let n = t.rank;
    let long = R64::from_integer(2);
    let short = R64::from_integer(1);
    let chain = |k: usize| {
        (0..k.saturating_sub(1))
            .map(|i| (i, i + 1))
            .collect::<Vec<_>>()
    };
    match t.letter {
        Letter::A => (vec![long; n], chain(n)),
        Letter::B => {
            let mut l = vec![long; n];
            l[n - 1] = short;
            (l, chain(n))
        }
        Letter::C => {
            let mut l = vec![short; n];
            l[n - 1] = long;
            (l, chain(n))
        }
        Letter::D => {
            let mut e = chain(n - 1);
            e.push((n - 3, n - 1));
            (vec![long; n], e)
        }
        Letter::E => {
            let mut e = vec![(0, 2), (1, 3)];
            e.extend((2..n - 1).map(|i| (i, i + 1)));
            (vec![long; n], e)
        }
        Letter::F => (vec![long, long, short, short], chain(4)),
        Letter::G => (vec![R64::new(2, 3), long], chain(2)),
    }
}

/// Entry `i` is the Bourbaki index of the natively numbered simple root `i` (0-based).
fn native_to_bourbaki(t: SimpleType) -> Vec<usize> {
    match (t.letter, t.rank) {
        (Letter::F, 4) => vec![3, 2, 1, 0],
        (Letter::E, 6) => vec![0, 2, 3, 4, 5, 1],
        (Letter::E, 7) => vec![6, 5, 4, 3, 2, 0, 1],
        (Letter::E, 8) => vec![7, 6, 5, 4, 3, 2, 0, 1],
        _ => (0..t.rank).collect(),
    }
}

/// A weight in the basis of fundamental weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Weight(v)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn neg(&self) -> Self {
        Weight(self.0.iter().map(|x| -x).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Duality {
    NotSelfDual,
    Orthogonal,
    Symplectic,
}

impl fmt::Display for Duality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Duality::NotSelfDual => "no",
            Duality::Orthogonal => "orth",
            Duality::Symplectic => "sympl",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaData {
    /// Coefficient of the simple root in the highest root.
    pub coefficient: i64,
    /// (θ,θ)/(α,α).
    pub ratio: i64,
    /// Whether the fundamental weight of this node pairs to 1 with the highest coroot.
    pub fundamental_pairs_to_one: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LongRootSubsystem {
    pub components: Vec<SimpleType>,
    pub label: String,
    pub long_roots: usize,
    pub short_roots: usize,
    pub complement_is_short: bool,
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub stype: SimpleType,
    /// `cartan[i][j] = <α_i^∨, α_j>`.
    pub cartan: Vec<Vec<i64>>,
    /// Gram matrix `(α_i, α_j)`.
    pub gram: Vec<Vec<R64>>,
    /// Positive roots in simple-root coordinates, ordered by height.
    pub positive_roots: Vec<Vec<i64>>,
    bourbaki: Vec<usize>,
    cartan_inverse: Vec<Vec<R64>>,
    root_index: HashMap<Vec<i64>, usize>,
}

impl RootSystem {
    pub fn build(letter: Letter, rank: usize) -> Result<Self> {
        let t = SimpleType::new(letter, rank).validate()?;
        Ok(Self::build_unchecked(t))
    }

    /// Like [`RootSystem::build`] but also accepts D3, which partition computations for
    /// so6 need. The result is isomorphic to A3 with D-style numbering.
    pub fn build_lenient(letter: Letter, rank: usize) -> Result<Self> {
        if letter == Letter::D && rank == 3 {
            return Ok(Self::build_unchecked(SimpleType::new(letter, rank)));
        }
        Self::build(letter, rank)
    }

    fn build_unchecked(t: SimpleType) -> Self {
        let rank = t.rank;
        let (blen, bedges) = bourbaki_dynkin(t);
        let perm = native_to_bourbaki(t);
        let mut inv = vec![0; rank];
        for (p, &b) in perm.iter().enumerate() {
            inv[b] = p;
        }
        let mut gram = vec![vec![R64::zero(); rank]; rank];
        for i in 0..rank {
            gram[i][i] = blen[perm[i]];
        }
        for &(a, b) in &bedges {
            let (i, j) = (inv[a], inv[b]);
            let v = -std::cmp::max(blen[a], blen[b]) / 2;
            gram[i][j] = v;
            gram[j][i] = v;
        }
        let cartan: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| {
                        let v = gram[i][j] * 2 / gram[i][i];
                        assert!(v.is_integer());
                        v.to_integer()
                    })
                    .collect()
            })
            .collect();
        let cartan_inverse = invert_integer(&cartan);
        let positive_roots = generate_positive_roots(&cartan);
        let root_index = positive_roots
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, r)| (r, i))
            .collect();
        RootSystem {
            stype: t,
            cartan,
            gram,
            positive_roots,
            bourbaki: perm,
            cartan_inverse,
            root_index,
        }
    }

    pub fn from_type(t: SimpleType) -> Result<Self> {
        Self::build(t.letter, t.rank)
    }

    pub fn rank(&self) -> usize {
        self.stype.rank
    }

    pub fn letter(&self) -> Letter {
        self.stype.letter
    }

    pub fn dim(&self) -> usize {
        self.rank() + 2 * self.positive_roots.len()
    }

    pub fn name(&self) -> String {
        self.stype.to_string()
    }

    /// Bourbaki index of the natively numbered node `i` (both 0-based).
    pub fn bourbaki_index(&self, i: usize) -> usize {
        self.bourbaki[i]
    }

    /// Native index of the Bourbaki-numbered node `b` (both 0-based).
    pub fn native_index(&self, b: usize) -> usize {
        self.bourbaki
            .iter()
            .position(|&x| x == b)
            .expect("bourbaki index out of range")
    }

    pub fn root_position(&self, root: &[i64]) -> Option<usize> {
        self.root_index.get(root).copied()
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        let neg: Vec<i64> = v.iter().map(|x| -x).collect();
        self.root_index.contains_key(v) || self.root_index.contains_key(&neg)
    }

    pub fn height(root: &[i64]) -> i64 {
        root.iter().sum()
    }

    /// The highest root θ in simple-root coordinates.
    pub fn highest_root(&self) -> &[i64] {
        self.positive_roots.last().expect("root system has roots")
    }

    /// (γ, δ) for vectors in simple-root coordinates.
    pub fn root_inner(&self, a: &[i64], b: &[i64]) -> R64 {
        let mut s = R64::zero();
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj != 0 {
                    s += self.gram[i][j] * (ai * bj);
                }
            }
        }
        s
    }

    pub fn root_sq_len(&self, root: &[i64]) -> R64 {
        self.root_inner(root, root)
    }

    pub fn is_long(&self, root: &[i64]) -> bool {
        self.root_sq_len(root) == R64::from_integer(2)
    }

    /// Fundamental-weight coordinates of a vector given in simple-root coordinates.
    pub fn root_to_weight(&self, root: &[i64]) -> Weight {
        Weight(
            (0..self.rank())
                .map(|j| (0..self.rank()).map(|k| self.cartan[j][k] * root[k]).sum())
                .collect(),
        )
    }

    /// Simple-root coordinates of a weight (rational in general).
    pub fn weight_to_roots(&self, w: &Weight) -> Vec<R64> {
        (0..self.rank())
            .map(|k| {
                (0..self.rank()).fold(R64::zero(), |s, j| s + self.cartan_inverse[k][j] * w.0[j])
            })
            .collect()
    }

    /// (λ, γ) for a weight λ and γ in simple-root coordinates.
    pub fn weight_root_inner(&self, w: &Weight, root: &[i64]) -> R64 {
        // (ϖ_j, α_k) = δ_jk (α_k, α_k)/2
        let mut s = R64::zero();
        for (k, &c) in root.iter().enumerate() {
            if c != 0 {
                s += self.gram[k][k] * (c * w.0[k]) / 2;
            }
        }
        s
    }

    /// (λ, γ^∨) for a root γ in simple-root coordinates.
    pub fn coroot_pairing(&self, w: &Weight, root: &[i64]) -> R64 {
        self.weight_root_inner(w, root) * 2 / self.root_sq_len(root)
    }

    /// The invariant pairing of two weights; with `coroot` set, `gamma` is replaced by
    /// 2γ/(γ,γ).
    pub fn pairing(&self, lam: &Weight, gamma: &Weight, coroot: bool) -> R64 {
        let g = self.weight_to_roots(gamma);
        let mut s = R64::zero();
        for (k, gk) in g.iter().enumerate() {
            s += *gk * self.gram[k][k] * lam.0[k] / 2;
        }
        if coroot {
            let gg = {
                let mut t = R64::zero();
                for (k, gk) in g.iter().enumerate() {
                    t += *gk * self.gram[k][k] * gamma.0[k] / 2;
                }
                t
            };
            s * 2 / gg
        } else {
            s
        }
    }

    pub fn theta_weight(&self) -> Weight {
        self.root_to_weight(self.highest_root())
    }

    fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.0.len() != self.rank() {
            return Err(Error::WeightShape {
                weight: w.0.clone(),
                rank: self.rank(),
            });
        }
        Ok(())
    }

    fn check_dominant(&self, w: &Weight) -> Result<()> {
        self.check_weight(w)?;
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.0.clone()));
        }
        Ok(())
    }

    /// Applies simple reflections until the weight is dominant.
    pub fn dominant_conjugate(&self, w: &Weight) -> Weight {
        let mut v = w.0.clone();
        while let Some(i) = v.iter().position(|&x| x < 0) {
            let c = v[i];
            // s_i(ν) = ν - ν_i α_i, and α_i has fundamental coordinates A[j][i]
            for (j, vj) in v.iter_mut().enumerate() {
                *vj -= c * self.cartan[j][i];
            }
        }
        Weight(v)
    }

    /// λ* = -w0 λ, by driving -λ to the dominant chamber.
    pub fn dual_weight(&self, w: &Weight) -> Result<Weight> {
        self.check_dominant(w)?;
        Ok(self.dominant_conjugate(&w.neg()))
    }

    /// The diagram automorphism induced by -w0, as a permutation of nodes.
    pub fn duality_permutation(&self) -> Vec<usize> {
        let n = self.rank();
        (0..n)
            .map(|i| {
                let d = self.dominant_conjugate(&Weight::fundamental(n, i).neg());
                d.0.iter()
                    .position(|&x| x == 1)
                    .expect("dual of a fundamental weight is fundamental")
            })
            .collect()
    }

    pub fn theta_data(&self, node: usize) -> ThetaData {
        let theta = self.highest_root();
        let coefficient = theta[node];
        let r = self.root_sq_len(theta) / self.gram[node][node];
        assert!(r.is_integer());
        let pairs = self.pairing(
            &Weight::fundamental(self.rank(), node),
            &self.theta_weight(),
            true,
        );
        ThetaData {
            coefficient,
            ratio: r.to_integer(),
            fundamental_pairs_to_one: pairs == R64::one(),
        }
    }

    /// Weyl dimension formula.
    pub fn weyl_dim(&self, w: &Weight) -> Result<u128> {
        self.check_dominant(w)?;
        let rho = Weight(vec![1; self.rank()]);
        let shifted = w.add(&rho);
        let mut num = BigRational::one();
        for g in &self.positive_roots {
            let a = self.coroot_pairing(&shifted, g);
            let b = self.coroot_pairing(&rho, g);
            num *= BigRational::new(BigInt::from(*a.numer()), BigInt::from(*a.denom()));
            num /= BigRational::new(BigInt::from(*b.numer()), BigInt::from(*b.denom()));
        }
        assert!(num.is_integer());
        Ok(num.to_integer().to_u128().expect("dimension fits in u128"))
    }

    /// Dimension of the cone over the orbit of highest-weight vectors:
    /// 1 + #{γ > 0 : (λ, γ) ≠ 0}.
    pub fn min_orbit_dim(&self, w: &Weight) -> Result<usize> {
        self.check_dominant(w)?;
        if w.is_zero() {
            return Err(Error::ZeroWeight);
        }
        Ok(1 + self
            .positive_roots
            .iter()
            .filter(|g| !self.weight_root_inner(w, g).is_zero())
            .count())
    }

    /// (λ, 2ρ^∨) = sum of (λ, γ^∨) over positive roots.
    pub fn two_rho_check(&self, w: &Weight) -> i64 {
        let s = self
            .positive_roots
            .iter()
            .fold(R64::zero(), |s, g| s + self.coroot_pairing(w, g));
        assert!(s.is_integer());
        s.to_integer()
    }

    pub fn duality_type(&self, w: &Weight) -> Result<Duality> {
        let d = self.dual_weight(w)?;
        if &d != w {
            return Ok(Duality::NotSelfDual);
        }
        Ok(if self.two_rho_check(w) % 2 == 0 {
            Duality::Orthogonal
        } else {
            Duality::Symplectic
        })
    }

    pub fn long_root_subsystem(&self) -> Result<LongRootSubsystem> {
        let long: Vec<Vec<i64>> = self
            .positive_roots
            .iter()
            .filter(|g| self.is_long(g))
            .cloned()
            .collect();
        if long.len() == self.positive_roots.len() {
            return Err(Error::SimplyLaced(self.name()));
        }
        let components = identify_subsystem(self, &long);
        let short: Vec<&Vec<i64>> = self
            .positive_roots
            .iter()
            .filter(|g| !self.is_long(g))
            .collect();
        let complement_is_short = short.len() + long.len() == self.positive_roots.len()
            && short
                .iter()
                .all(|g| self.root_sq_len(g) < R64::from_integer(2));
        let label = subsystem_label(&components, self.letter() == Letter::C);
        Ok(LongRootSubsystem {
            components,
            label,
            long_roots: long.len(),
            short_roots: short.len(),
            complement_is_short,
        })
    }
}

fn invert_integer(m: &[Vec<i64>]) -> Vec<Vec<R64>> {
    let n = m.len();
    let mut a: Vec<Vec<R64>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row: Vec<R64> = r.iter().map(|&x| R64::from_integer(x)).collect();
            row.extend((0..n).map(|j| if i == j { R64::one() } else { R64::zero() }));
            row
        })
        .collect();
    for col in 0..n {
        let p = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("Cartan matrix is invertible");
        a.swap(col, p);
        let inv = R64::one() / a[col][col];
        for x in a[col].iter_mut() {
            *x *= inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let c = a[r][col];
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row) {
                    *x -= c * y;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

fn generate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut roots: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    let mut known: std::collections::HashSet<Vec<i64>> = roots.iter().cloned().collect();
    let mut layer = roots.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for b in &layer {
            for i in 0..n {
                // b - pα_i, ..., b + qα_i is the α_i-string; q = p - <b, α_i^∨>
                let mut p = 0;
                let mut probe = b.clone();
                loop {
                    probe[i] -= 1;
                    if known.contains(&probe) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|k| b[k] * cartan[i][k]).sum();
                if p - pairing > 0 {
                    let mut up = b.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        next.sort();
        roots.extend(next.iter().cloned());
        layer = next;
    }
    roots
}

/// Cartan type of a closed subsystem given by its positive roots.
pub fn identify_subsystem(rs: &RootSystem, positive: &[Vec<i64>]) -> Vec<SimpleType> {
    let set: std::collections::HashSet<&Vec<i64>> = positive.iter().collect();
    // simple roots of the subsystem: positive roots that are not sums of two positive ones
    let simple: Vec<&Vec<i64>> = positive
        .iter()
        .filter(|g| {
            !positive.iter().any(|a| {
                let d: Vec<i64> = g.iter().zip(a.iter()).map(|(x, y)| x - y).collect();
                d.iter().all(|&x| x >= 0) && d.iter().any(|&x| x > 0) && set.contains(&d)
            })
        })
        .collect();
    let k = simple.len();
    let cartan: Vec<Vec<i64>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    let v = rs.root_inner(simple[i], simple[j]) * 2 / rs.root_sq_len(simple[i]);
                    v.to_integer()
                })
                .collect()
        })
        .collect();
    let lens: Vec<R64> = simple.iter().map(|s| rs.root_sq_len(s)).collect();
    identify_cartan(&cartan, &lens)
}

/// Classifies a (possibly reducible) Cartan matrix into simple components.
/// Low-rank coincidences are reported as A1, A3 and C2.
pub fn identify_cartan(cartan: &[Vec<i64>], lens: &[R64]) -> Vec<SimpleType> {
    let k = cartan.len();
    let mut seen = vec![false; k];
    let mut out = Vec::new();
    for start in 0..k {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut i = 0;
        while i < comp.len() {
            let a = comp[i];
            for b in 0..k {
                if !seen[b] && cartan[a][b] != 0 {
                    seen[b] = true;
                    comp.push(b);
                }
            }
            i += 1;
        }
        out.push(classify_component(cartan, lens, &comp));
    }
    out.sort();
    out
}

fn classify_component(cartan: &[Vec<i64>], lens: &[R64], comp: &[usize]) -> SimpleType {
    let r = comp.len();
    let nbrs = |a: usize| {
        comp.iter()
            .copied()
            .filter(move |&b| b != a && cartan[a][b] != 0)
    };
    let bond = |a: usize, b: usize| cartan[a][b] * cartan[b][a];
    let mut max_bond = 0;
    for &a in comp {
        for b in nbrs(a) {
            max_bond = max_bond.max(bond(a, b));
        }
    }
    match max_bond {
        0 => SimpleType::new(Letter::A, 1),
        3 => SimpleType::new(Letter::G, 2),
        2 => {
            if r == 2 {
                return SimpleType::new(Letter::C, 2);
            }
            let ends: Vec<usize> = comp
                .iter()
                .copied()
                .filter(|&a| nbrs(a).count() == 1)
                .collect();
            let double_end = ends
                .iter()
                .copied()
                .find(|&e| nbrs(e).any(|b| bond(e, b) == 2));
            match double_end {
                None => SimpleType::new(Letter::F, 4),
                Some(e) => {
                    let other = nbrs(e).next().unwrap();
                    if lens[e] < lens[other] {
                        SimpleType::new(Letter::B, r)
                    } else {
                        SimpleType::new(Letter::C, r)
                    }
                }
            }
        }
        _ => {
            let branch = comp.iter().copied().find(|&a| nbrs(a).count() == 3);
            match branch {
                None => SimpleType::new(Letter::A, r),
                Some(b) => {
                    let mut arms: Vec<usize> = nbrs(b)
                        .map(|first| {
                            let mut len = 1;
                            let (mut prev, mut cur) = (b, first);
                            while let Some(next) = nbrs(cur).find(|&x| x != prev) {
                                prev = cur;
                                cur = next;
                                len += 1;
                            }
                            len
                        })
                        .collect();
                    arms.sort();
                    if arms[1] == 1 {
                        SimpleType::new(Letter::D, r)
                    } else {
                        SimpleType::new(Letter::E, r)
                    }
                }
            }
        }
    }
}

/// Renders a list of components as `A1+C3`; with `symplectic` set, rank-1 pieces read `C1`.
pub fn subsystem_label(components: &[SimpleType], symplectic: bool) -> String {
    if components.is_empty() {
        return "0".to_string();
    }
    let mut counts: Vec<(SimpleType, usize)> = Vec::new();
    for c in components {
        match counts.iter_mut().find(|(t, _)| t == c) {
            Some((_, n)) => *n += 1,
            None => counts.push((*c, 1)),
        }
    }
    counts
        .iter()
        .map(|(t, n)| {
            let name = if symplectic && t.rank == 1 {
                "C1".to_string()
            } else {
                t.to_string()
            };
            if *n == 1 {
                name
            } else {
                format!("{name}^{n}")
            }
        })
        .collect::<Vec<_>>()
        .join("+")
}

/// Number of positive roots for a simple type, from the closed formulas.
pub fn positive_root_count(t: SimpleType) -> usize {
    (t.algebra_dim() - t.rank) / 2
}

impl RootSystem {
    /// Root-length ratio (long/short) if there are two lengths.
    pub fn length_ratio(&self) -> Option<R64> {
        let mut lens: Vec<R64> = self
            .positive_roots
            .iter()
            .map(|g| self.root_sq_len(g))
            .collect();
        lens.sort();
        lens.dedup();
        if lens.len() == 2 {
            Some(lens[1] / lens[0])
        } else {
            None
        }
    }

    /// Symmetrized Cartan matrix is positive definite (all leading minors positive).
    pub fn form_is_positive_definite(&self) -> bool {
        let n = self.rank();
        (1..=n).all(|k| {
            let m: Vec<Vec<R64>> = (0..k).map(|i| self.gram[i][..k].to_vec()).collect();
            determinant(m).is_positive()
        })
    }
}

fn determinant(mut m: Vec<Vec<R64>>) -> R64 {
    let n = m.len();
    let mut det = R64::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return R64::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= m[c][c];
        for r in c + 1..n {
            let f = m[r][c] / m[c][c];
            let pivot = m[c].clone();
            for (x, v) in m[r][c..].iter_mut().zip(&pivot[c..]) {
                *x -= f * v;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(l: Letter, n: usize) -> RootSystem {
        RootSystem::build(l, n).unwrap()
    }

    #[test]
    fn positive_root_counts() {
        assert_eq!(rs(Letter::A, 2).positive_roots.len(), 3);
        assert_eq!(rs(Letter::E, 7).positive_roots.len(), 63);
        let g2 = rs(Letter::G, 2);
        assert_eq!(g2.positive_roots.len(), 6);
        assert_eq!(g2.length_ratio(), Some(R64::from_integer(3)));
        for (l, n) in [
            (Letter::B, 5),
            (Letter::C, 4),
            (Letter::D, 6),
            (Letter::E, 6),
            (Letter::E, 8),
            (Letter::F, 4),
        ] {
            let r = rs(l, n);
            assert_eq!(r.positive_roots.len(), positive_root_count(r.stype));
            assert!(r.form_is_positive_definite());
        }
    }

    #[test]
    fn invalid_types_rejected() {
        assert!(RootSystem::build(Letter::E, 5).is_err());
        assert!(RootSystem::build(Letter::D, 3).is_err());
        assert!(RootSystem::build(Letter::G, 3).is_err());
    }

    #[test]
    fn highest_root_is_long_and_maximal() {
        for (l, n) in [
            (Letter::A, 4),
            (Letter::B, 3),
            (Letter::C, 3),
            (Letter::F, 4),
            (Letter::G, 2),
            (Letter::E, 7),
        ] {
            let r = rs(l, n);
            let th = r.highest_root().to_vec();
            assert!(r.is_long(&th));
            for i in 0..n {
                let mut up = th.clone();
                up[i] += 1;
                assert!(!r.is_root(&up));
            }
            let tw = r.theta_weight();
            assert_eq!(r.pairing(&tw, &tw, true), R64::from_integer(2));
        }
    }

    #[test]
    fn pairing_examples() {
        let c4 = rs(Letter::C, 4);
        assert_eq!(
            c4.pairing(&Weight::fundamental(4, 0), &c4.theta_weight(), true),
            R64::one()
        );
        let a1 = rs(Letter::A, 1);
        assert_eq!(
            a1.coroot_pairing(&Weight(vec![2]), &[1]),
            R64::from_integer(2)
        );
    }

    #[test]
    fn dual_weights() {
        let a4 = rs(Letter::A, 4);
        assert_eq!(
            a4.dual_weight(&Weight(vec![0, 1, 0, 0])).unwrap(),
            Weight(vec![0, 0, 1, 0])
        );
        let b3 = rs(Letter::B, 3);
        assert_eq!(
            b3.dual_weight(&Weight(vec![0, 0, 1])).unwrap(),
            Weight(vec![0, 0, 1])
        );
        let a1 = rs(Letter::A, 1);
        assert_eq!(a1.dual_weight(&Weight(vec![3])).unwrap(), Weight(vec![3]));
        assert!(a1.dual_weight(&Weight(vec![-1])).is_err());
        let e6 = rs(Letter::E, 6);
        let perm = e6.duality_permutation();
        // chain reversed, branch node fixed
        assert_eq!(perm, vec![4, 3, 2, 1, 0, 5]);
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(e6.cartan[i][j], e6.cartan[perm[i]][perm[j]]);
            }
        }
    }

    #[test]
    fn theta_data_examples() {
        let c3 = rs(Letter::C, 3);
        let d = c3.theta_data(0);
        assert_eq!(
            (d.coefficient, d.ratio, d.fundamental_pairs_to_one),
            (2, 2, true)
        );
        let a3 = rs(Letter::A, 3);
        for i in 0..3 {
            let d = a3.theta_data(i);
            assert_eq!(
                (d.coefficient, d.ratio, d.fundamental_pairs_to_one),
                (1, 1, true)
            );
        }
        let b4 = rs(Letter::B, 4);
        let d = b4.theta_data(0);
        assert_eq!(
            (d.coefficient, d.ratio, d.fundamental_pairs_to_one),
            (1, 1, true)
        );
    }

    #[test]
    fn dimensions() {
        assert_eq!(rs(Letter::G, 2).weyl_dim(&Weight(vec![1, 0])).unwrap(), 7);
        let e7 = rs(Letter::E, 7);
        assert_eq!(e7.weyl_dim(&Weight::fundamental(7, 0)).unwrap(), 56);
        assert_eq!(e7.weyl_dim(&Weight::zero(7)).unwrap(), 1);
        assert_eq!(e7.min_orbit_dim(&Weight::fundamental(7, 0)).unwrap(), 28);
        assert_eq!(
            rs(Letter::C, 5)
                .min_orbit_dim(&Weight::fundamental(5, 0))
                .unwrap(),
            10
        );
        let e6 = rs(Letter::E, 6);
        assert_eq!(e6.min_orbit_dim(&e6.theta_weight()).unwrap(), 22);
        assert_eq!(e6.min_orbit_dim(&Weight::zero(6)), Err(Error::ZeroWeight));
        // adjoint representation
        assert_eq!(e6.weyl_dim(&e6.theta_weight()).unwrap(), 78);
    }

    #[test]
    fn duality_examples() {
        assert_eq!(
            rs(Letter::D, 6)
                .duality_type(&Weight::fundamental(6, 4))
                .unwrap(),
            Duality::Symplectic
        );
        assert_eq!(
            rs(Letter::A, 4)
                .duality_type(&Weight::fundamental(4, 1))
                .unwrap(),
            Duality::NotSelfDual
        );
        assert_eq!(
            rs(Letter::A, 1).duality_type(&Weight(vec![2])).unwrap(),
            Duality::Orthogonal
        );
    }

    #[test]
    fn long_roots() {
        assert_eq!(rs(Letter::B, 4).long_root_subsystem().unwrap().label, "D4");
        assert_eq!(rs(Letter::G, 2).long_root_subsystem().unwrap().label, "A2");
        assert_eq!(
            rs(Letter::C, 3).long_root_subsystem().unwrap().label,
            "C1^3"
        );
        assert_eq!(rs(Letter::F, 4).long_root_subsystem().unwrap().label, "D4");
        assert!(rs(Letter::E, 6).long_root_subsystem().is_err());
        assert!(
            rs(Letter::B, 3)
                .long_root_subsystem()
                .unwrap()
                .complement_is_short
        );
    }

    #[test]
    fn bourbaki_numbering() {
        let e7 = rs(Letter::E, 7);
        assert_eq!(e7.bourbaki_index(0), 6);
        assert_eq!(e7.native_index(6), 0);
        let f4 = rs(Letter::F, 4);
        // node 1 is short, node 4 long
        assert!(f4.gram[0][0] < f4.gram[3][3]);
    }
}
