//! Matrix models of classical symmetric pairs over Q(i).

use super::M;
use crate::error::{Error, Result};
use crate::involutions::{self, SymmetricPair};
use crate::linalg::{ci, Echelon, Mat, Qi};
use crate::rootsys::{Letter, RootSystem, SimpleType};
use num_traits::{One, Zero};
use serde::Serialize;
use std::fmt;

/// Which pair is realized. Sizes are the parameters of the classical families:
/// `SlSp { n }` is (sl_2n, sp_2n), `SoEvenOdd { n }` is (so_{2n+2}, so_{2n+1}), and so on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum PairKind {
    /// (sl_n, so_n) with σ(A) = -Aᵀ.
    SlSo { n: usize },
    /// (sl_2n, sp_2n) with σ(A) = J Aᵀ J.
    SlSp { n: usize },
    /// (sp_2n, gl_n), the maximal-rank involution of sp_2n.
    SpGl { n: usize },
    /// (so_{2n+2}, so_{2n+1}).
    SoEvenOdd { n: usize },
    /// (so_{2n+1}, so_{2n}).
    SoOddEven { n: usize },
    /// (sp_2n, sp_2k + sp_{2n-2k}).
    SpSp { n: usize, k: usize },
    /// sp_2n ⊃ sp_2 + ... + sp_2 (n copies), the long-root subalgebra; not symmetric for n ≥ 3.
    LongRoot { n: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Ambient {
    Sl(usize),
    /// Skew-symmetric matrices of the given size.
    So(usize),
    /// sp_2n for the form J = [[0, I], [-I, 0]]; the field is n.
    Sp(usize),
}

impl Ambient {
    pub fn size(self) -> usize {
        match self {
            Ambient::Sl(n) | Ambient::So(n) => n,
            Ambient::Sp(n) => 2 * n,
        }
    }

    pub fn simple_type(self) -> SimpleType {
        match self {
            Ambient::Sl(n) => SimpleType::new(Letter::A, n - 1),
            Ambient::So(n) if n % 2 == 1 => SimpleType::new(Letter::B, n / 2),
            Ambient::So(n) => SimpleType::new(Letter::D, n / 2),
            Ambient::Sp(n) => SimpleType::new(Letter::C, n),
        }
    }

    fn basis(self) -> Vec<M> {
        let n = self.size();
        let e = |i, j| Mat::<Qi>::unit(n, i, j);
        let mut out = Vec::new();
        match self {
            Ambient::Sl(n) => {
                for i in 0..n {
                    for j in 0..n {
                        if i != j {
                            out.push(e(i, j));
                        }
                    }
                }
                for i in 0..n - 1 {
                    out.push(e(i, i).sub(&e(i + 1, i + 1)));
                }
            }
            Ambient::So(n) => {
                for i in 0..n {
                    for j in i + 1..n {
                        out.push(e(i, j).sub(&e(j, i)));
                    }
                }
            }
            Ambient::Sp(m) => {
                for i in 0..m {
                    for j in 0..m {
                        out.push(e(i, j).sub(&e(m + j, m + i)));
                    }
                }
                for i in 0..m {
                    for j in i..m {
                        if i == j {
                            out.push(e(i, m + i));
                            out.push(e(m + i, i));
                        } else {
                            out.push(e(i, m + j).add(&e(j, m + i)));
                            out.push(e(m + i, j).add(&e(m + j, i)));
                        }
                    }
                }
            }
        }
        out
    }

    /// Membership in the ambient Lie algebra.
    pub fn contains(self, x: &M) -> bool {
        match self {
            Ambient::Sl(_) => x.trace().is_zero(),
            Ambient::So(_) => x.add(&x.transpose()).is_zero(),
            Ambient::Sp(m) => {
                let j = symplectic_j(m);
                x.transpose().mul(&j).add(&j.mul(x)).is_zero()
            }
        }
    }
}

/// J = [[0, I], [-I, 0]] of size 2m.
pub fn symplectic_j(m: usize) -> M {
    Mat::from_fn(2 * m, 2 * m, |i, j| {
        if j == i + m {
            Qi::one()
        } else if i == j + m {
            -Qi::one()
        } else {
            Qi::zero()
        }
    })
}

/// The decomposition g = g0 ⊕ g1 as an explicit linear map.
#[derive(Clone, Debug)]
pub enum Sigma {
    NegTranspose,
    /// A ↦ J Aᵀ J.
    SymplecticTranspose(M),
    /// Conjugation by a diagonal matrix of signs.
    Conj(Vec<i8>),
    /// No involution: g0 is spanned by the marked entries and g1 by the rest.
    Mask(Vec<bool>),
}

/// A realized pair: ambient algebra, projections, and bases of g, g0, g1.
#[derive(Clone, Debug)]
pub struct PairRealization {
    pub kind: PairKind,
    pub ambient: Ambient,
    pub sigma: Sigma,
    pub g: Vec<M>,
    pub g0: Vec<M>,
    pub g1: Vec<M>,
    /// Flat entry positions that determine an element of g.
    pub coord_pos: Vec<usize>,
    /// Index sets of the defining modules of the simple factors of g0.
    pub blocks: Vec<Vec<usize>>,
    /// The catalog pair this realizes; absent for non-symmetric subalgebras.
    pub pair: Option<SymmetricPair>,
    /// dim O_min of g, from the root system.
    pub dim_omin: usize,
}

impl fmt::Display for PairKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PairKind::SlSo { n } => write!(f, "sl{n}-so{n}"),
            PairKind::SlSp { n } => write!(f, "sl{}-sp{}", 2 * n, 2 * n),
            PairKind::SpGl { n } => write!(f, "sp{}-gl{n}", 2 * n),
            PairKind::SoEvenOdd { n } => write!(f, "so{}-so{}", 2 * n + 2, 2 * n + 1),
            PairKind::SoOddEven { n } => write!(f, "so{}-so{}", 2 * n + 1, 2 * n),
            PairKind::SpSp { n, k } => write!(f, "sp{}-sp{}+sp{}", 2 * n, 2 * k, 2 * (n - k)),
            PairKind::LongRoot { n } => write!(f, "sp{}-sp2^{n}", 2 * n),
        }
    }
}

impl PairKind {
    /// Parses names such as `sl3-so3`, `so8-so7`, `sp6-sp2+sp4`, `sp4-gl2` or `sp6-sp2^3`.
    pub fn parse(s: &str) -> Result<PairKind> {
        let s = s.trim().to_ascii_lowercase();
        let bad = || Error::Precondition(format!("unrecognized pair {s:?}"));
        let (g, h) = s.split_once(['-', '/']).ok_or_else(bad)?;
        let num =
            |t: &str, prefix: &str| t.strip_prefix(prefix).and_then(|r| r.parse::<usize>().ok());
        if let Some(c) = g.chars().next() {
            if matches!(c, 'e' | 'f' | 'g') {
                return Err(Error::Unsupported(
                    s.clone(),
                    "exceptional pairs have no matrix model here; use the diagram-level checks"
                        .into(),
                ));
            }
        }
        let kind = if let Some(n) = num(g, "sl") {
            if num(h, "so") == Some(n) {
                PairKind::SlSo { n }
            } else if num(h, "sp") == Some(n) && n % 2 == 0 {
                PairKind::SlSp { n: n / 2 }
            } else {
                return Err(bad());
            }
        } else if let Some(n) = num(g, "so") {
            match num(h, "so") {
                Some(m) if m + 1 == n && n % 2 == 0 => PairKind::SoEvenOdd { n: m / 2 },
                Some(m) if m + 1 == n => PairKind::SoOddEven { n: m / 2 },
                _ => return Err(bad()),
            }
        } else if let Some(n2) = num(g, "sp") {
            if n2 % 2 == 1 {
                return Err(bad());
            }
            let n = n2 / 2;
            if num(h, "gl") == Some(n) {
                PairKind::SpGl { n }
            } else if let Some(cnt) = h.strip_prefix("sp2^").and_then(|r| r.parse::<usize>().ok()) {
                if cnt != n {
                    return Err(bad());
                }
                PairKind::LongRoot { n }
            } else if let Some((a, b)) = h.split_once('+') {
                match (num(a, "sp"), num(b, "sp")) {
                    (Some(a), Some(b)) if a % 2 == 0 && b % 2 == 0 && a + b == n2 && a <= b => {
                        PairKind::SpSp { n, k: a / 2 }
                    }
                    _ => return Err(bad()),
                }
            } else {
                return Err(bad());
            }
        } else {
            return Err(bad());
        };
        Ok(kind)
    }

    fn ambient(self) -> Ambient {
        match self {
            PairKind::SlSo { n } => Ambient::Sl(n),
            PairKind::SlSp { n } => Ambient::Sl(2 * n),
            PairKind::SpGl { n } | PairKind::SpSp { n, .. } | PairKind::LongRoot { n } => {
                Ambient::Sp(n)
            }
            PairKind::SoEvenOdd { n } => Ambient::So(2 * n + 2),
            PairKind::SoOddEven { n } => Ambient::So(2 * n + 1),
        }
    }

    fn check_size(self) -> Result<()> {
        let ok = match self {
            PairKind::SlSo { n } => n >= 2,
            PairKind::SlSp { n } | PairKind::SpGl { n } | PairKind::LongRoot { n } => n >= 2,
            PairKind::SoEvenOdd { n } | PairKind::SoOddEven { n } => n >= 3,
            PairKind::SpSp { n, k } => k >= 1 && 2 * k <= n,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Precondition(format!(
                "{self} is outside the supported sizes"
            )))
        }
    }

    /// The catalog family and parameters of the pair, if it is symmetric.
    fn family(self) -> Option<(&'static str, Vec<(char, i64)>)> {
        let i = |x: usize| x as i64;
        Some(match self {
            PairKind::SlSo { n } => ("A(n) ⊃ so(n+1)", vec![('n', i(n - 1))]),
            PairKind::SlSp { n } => ("A(2n-1) ⊃ C(n)", vec![('n', i(n))]),
            PairKind::SpGl { n } => ("C(n) ⊃ gl(n)", vec![('n', i(n))]),
            PairKind::SoEvenOdd { n } => ("D(n+1) ⊃ B(n)", vec![('n', i(n))]),
            PairKind::SoOddEven { n } => ("B(n) ⊃ D(n)", vec![('n', i(n))]),
            PairKind::SpSp { n, k } => ("C(n) ⊃ C(k)+C(n-k)", vec![('n', i(n)), ('k', i(k))]),
            PairKind::LongRoot { n: 2 } => ("C(n) ⊃ C(k)+C(n-k)", vec![('n', 2), ('k', 1)]),
            PairKind::LongRoot { .. } => return None,
        })
    }
}

/// Builds the realization and checks it against its invariants.
pub fn realize_pair(kind: PairKind) -> Result<PairRealization> {
    kind.check_size()?;
    let ambient = kind.ambient();
    let size = ambient.size();
    let signs = |f: &dyn Fn(usize) -> bool| {
        (0..size)
            .map(|i| if f(i) { 1 } else { -1 })
            .collect::<Vec<i8>>()
    };
    let range = |a: usize, b: usize| (a..b).collect::<Vec<usize>>();
    let (sigma, blocks) = match kind {
        PairKind::SlSo { n } => (Sigma::NegTranspose, vec![range(0, n)]),
        PairKind::SlSp { n } => (
            Sigma::SymplecticTranspose(symplectic_j(n)),
            vec![range(0, 2 * n)],
        ),
        PairKind::SpGl { n } => (Sigma::Conj(signs(&|i| i < n)), vec![range(0, n)]),
        PairKind::SoEvenOdd { n } => (
            Sigma::Conj(signs(&|i| i < 2 * n + 1)),
            vec![range(0, 2 * n + 1)],
        ),
        PairKind::SoOddEven { n } => (Sigma::Conj(signs(&|i| i < 2 * n)), vec![range(0, 2 * n)]),
        PairKind::SpSp { n, k } => (
            Sigma::Conj(signs(&|i| i % n < k)),
            vec![
                range(0, k).into_iter().chain(n..n + k).collect(),
                range(k, n).into_iter().chain(n + k..2 * n).collect(),
            ],
        ),
        PairKind::LongRoot { n } => {
            let mut mask = vec![false; size * size];
            for i in 0..n {
                for (r, c) in [(i, i), (i, n + i), (n + i, i), (n + i, n + i)] {
                    mask[r * size + c] = true;
                }
            }
            (Sigma::Mask(mask), (0..n).map(|i| vec![i, n + i]).collect())
        }
    };
    let g = ambient.basis();
    let mut ech = Echelon::new(size * size);
    for b in &g {
        ech.insert(&b.data);
    }
    let coord_pos = ech.pivots().to_vec();
    let rs = RootSystem::from_type(ambient.simple_type())?;
    let dim_omin = rs.min_orbit_dim(&rs.theta_weight())?;
    let mut r = PairRealization {
        kind,
        ambient,
        sigma,
        g,
        g0: Vec::new(),
        g1: Vec::new(),
        coord_pos,
        blocks,
        pair: None,
        dim_omin,
    };
    r.g0 = independent_mats(r.g.iter().map(|b| r.p0(b)), size);
    r.g1 = independent_mats(r.g.iter().map(|b| r.p1(b)), size);
    if let Some((family, params)) = kind.family() {
        let pair = involutions::catalog(&rs)?
            .into_iter()
            .find(|p| p.family == family && p.params == params)
            .ok_or_else(|| Error::NoData(format!("catalog pair for {kind}")))?;
        r.pair = Some(pair);
    }
    r.check_invariants()?;
    Ok(r)
}

fn independent_mats(it: impl Iterator<Item = M>, size: usize) -> Vec<M> {
    let mut e = Echelon::new(size * size);
    it.filter(|m| !m.is_zero() && e.insert(&m.data)).collect()
}

impl PairRealization {
    pub fn size(&self) -> usize {
        self.ambient.size()
    }

    pub fn is_symmetric(&self) -> bool {
        !matches!(self.sigma, Sigma::Mask(_))
    }

    /// σ(x). For a masked subalgebra this is the linear map p0 - p1.
    pub fn sigma(&self, x: &M) -> M {
        match &self.sigma {
            Sigma::NegTranspose => x.transpose().neg(),
            Sigma::SymplecticTranspose(j) => j.mul(&x.transpose()).mul(j),
            Sigma::Conj(d) => {
                let n = self.size();
                Mat::from_fn(n, n, |i, j| {
                    if d[i] == d[j] {
                        x.get(i, j).clone()
                    } else {
                        -x.get(i, j).clone()
                    }
                })
            }
            Sigma::Mask(_) => self.p0(x).sub(&self.p1(x)),
        }
    }

    /// The projection φ onto g0.
    pub fn p0(&self, x: &M) -> M {
        match &self.sigma {
            Sigma::Mask(mask) => Mat {
                rows: x.rows,
                cols: x.cols,
                data: x
                    .data
                    .iter()
                    .zip(mask)
                    .map(|(v, &m)| if m { v.clone() } else { Qi::zero() })
                    .collect(),
            },
            _ => x.add(&self.sigma(x)).scale(&half()),
        }
    }

    /// The projection ψ onto g1.
    pub fn p1(&self, x: &M) -> M {
        match &self.sigma {
            Sigma::Mask(_) => x.sub(&self.p0(x)),
            _ => x.sub(&self.sigma(x)).scale(&half()),
        }
    }

    /// Coordinates of an element of g at the determining positions.
    pub fn coords(&self, x: &M) -> Vec<Qi> {
        self.coord_pos.iter().map(|&p| x.data[p].clone()).collect()
    }

    pub fn in_g(&self, x: &M) -> bool {
        self.ambient.contains(x)
    }

    pub fn in_g0(&self, x: &M) -> bool {
        self.in_g(x) && self.p1(x).is_zero()
    }

    pub fn in_g1(&self, x: &M) -> bool {
        self.in_g(x) && self.p0(x).is_zero()
    }

    /// Diagram-level intersection data of the catalog pair.
    pub fn intersections(&self) -> Option<involutions::Intersections> {
        let pair = self.pair.as_ref()?;
        let rs = RootSystem::from_type(pair.g).ok()?;
        Some(involutions::omin_intersections(&rs, pair))
    }

    /// Whether O_min meets g1; for a masked subalgebra, whether it meets the complement.
    pub fn meets_g1(&self) -> bool {
        match self.intersections() {
            Some(i) => i.meets_g1,
            // O_min of sp_2n misses the complement of the long-root subalgebra
            None => false,
        }
    }

    /// Checks σ² = id and dim g = dim g0 + dim g1 against the root system and the catalog;
    /// for symmetric pairs also that σ is a Lie algebra automorphism on the basis.
    pub fn check_invariants(&self) -> Result<()> {
        let fail = |m: String| Err(Error::Soundness(format!("{}: {m}", self.kind)));
        let t = self.ambient.simple_type();
        let dim = RootSystem::from_type(t)?.dim();
        if self.g.len() != dim {
            return fail(format!(
                "basis has {} elements, dim {t} = {dim}",
                self.g.len()
            ));
        }
        if self.g0.len() + self.g1.len() != dim {
            return fail(format!(
                "dim g0 + dim g1 = {} + {} != {dim}",
                self.g0.len(),
                self.g1.len()
            ));
        }
        for b in &self.g {
            if !self.in_g(b) || self.sigma(&self.sigma(b)) != *b {
                return fail("σ² is not the identity".into());
            }
        }
        if self.is_symmetric() {
            for (i, x) in self.g.iter().enumerate() {
                for y in &self.g[i + 1..] {
                    if self.sigma(&x.commutator(y)) != self.sigma(x).commutator(&self.sigma(y)) {
                        return fail("σ is not a Lie algebra automorphism".into());
                    }
                }
            }
        } else {
            for (i, x) in self.g0.iter().enumerate() {
                for y in &self.g0[i + 1..] {
                    if !self.in_g0(&x.commutator(y)) {
                        return fail("g0 is not a subalgebra".into());
                    }
                }
            }
        }
        if let Some(pair) = &self.pair {
            if (pair.dim_g0, pair.dim_g1) != (self.g0.len(), self.g1.len()) {
                return fail(format!(
                    "catalog {} has dims ({}, {}), realized ({}, {})",
                    pair.id,
                    pair.dim_g0,
                    pair.dim_g1,
                    self.g0.len(),
                    self.g1.len()
                ));
            }
        }
        Ok(())
    }
}

fn half() -> Qi {
    Qi::one() / ci(2)
}
