//! Weighted Dynkin diagrams and the gradings they induce.

use crate::error::{Error, Result};
use crate::rootsys::{Letter, RootSystem, SimpleType, R64};
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightedDiagram {
    pub stype: SimpleType,
    pub labels: Vec<u8>,
}

impl WeightedDiagram {
    pub fn new(rs: &RootSystem, labels: Vec<u8>) -> Result<Self> {
        if labels.len() != rs.rank() {
            return Err(Error::InvalidDiagram(format!(
                "{} labels given for rank {}",
                labels.len(),
                rs.rank()
            )));
        }
        if let Some(bad) = labels.iter().find(|&&l| l > 2) {
            return Err(Error::InvalidDiagram(format!(
                "label {bad} is outside {{0,1,2}}"
            )));
        }
        Ok(WeightedDiagram {
            stype: rs.stype,
            labels,
        })
    }

    pub fn zeros(&self) -> Vec<usize> {
        (0..self.labels.len())
            .filter(|&i| self.labels[i] == 0)
            .collect()
    }

    pub fn is_even(&self) -> bool {
        self.labels.iter().all(|l| l % 2 == 0)
    }

    /// Value of the characteristic on a root given in simple-root coordinates.
    pub fn eval(&self, root: &[i64]) -> i64 {
        root.iter()
            .zip(&self.labels)
            .map(|(c, &l)| c * l as i64)
            .sum()
    }
}

impl fmt::Display for WeightedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.labels.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join("-"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradingSummary {
    /// dim g(i) for every i with g(i) ≠ 0.
    pub dims: BTreeMap<i64, usize>,
    pub orbit_dim: usize,
    pub height: i64,
}

impl GradingSummary {
    pub fn dim(&self, i: i64) -> usize {
        self.dims.get(&i).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.dims.values().sum()
    }
}

/// Labels (α, θ^∨) of the minimal nilpotent orbit.
pub fn minimal_orbit_diagram(rs: &RootSystem) -> WeightedDiagram {
    let theta = rs.highest_root().to_vec();
    let theta_sq = rs.root_sq_len(&theta);
    let labels = (0..rs.rank())
        .map(|i| {
            let mut a = vec![0; rs.rank()];
            a[i] = 1;
            let v: R64 = rs.root_inner(&a, &theta) * 2 / theta_sq;
            v.to_u8()
                .expect("minimal orbit labels are small non-negative integers")
        })
        .collect();
    WeightedDiagram {
        stype: rs.stype,
        labels,
    }
}

pub fn grading_summary(rs: &RootSystem, d: &WeightedDiagram) -> GradingSummary {
    assert_eq!(rs.stype, d.stype, "diagram belongs to another root system");
    let mut dims = BTreeMap::new();
    dims.insert(0, rs.rank());
    for g in &rs.positive_roots {
        let v = d.eval(g);
        *dims.entry(v).or_insert(0) += 1;
        *dims.entry(-v).or_insert(0) += 1;
    }
    let height = *dims.keys().next_back().unwrap();
    let orbit_dim =
        rs.dim() - dims.get(&0).copied().unwrap_or(0) - dims.get(&1).copied().unwrap_or(0);
    GradingSummary {
        dims,
        orbit_dim,
        height,
    }
}

/// Multiplicities m_j of the (j+1)-dimensional simple sl2-modules in g,
/// m_j = dim g(j) - dim g(j+2).
pub fn sl2_decomposition(summary: &GradingSummary) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for j in 0..=summary.height.max(0) {
        let m = summary.dim(j) as i64 - summary.dim(j + 2) as i64;
        if m < 0 {
            return Err(Error::InvalidDiagram(format!(
                "grading gives negative multiplicity {m} for the {}-dimensional module",
                j + 1
            )));
        }
        out.push(m as usize);
    }
    Ok(out)
}

/// A classical Lie algebra in its defining representation of the given size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Classical {
    Sl(usize),
    So(usize),
    Sp(usize),
}

impl Classical {
    pub fn size(self) -> usize {
        match self {
            Classical::Sl(n) | Classical::So(n) | Classical::Sp(n) => n,
        }
    }

    pub fn root_system(self) -> Result<RootSystem> {
        match self {
            Classical::Sl(n) if n >= 2 => RootSystem::build(Letter::A, n - 1),
            Classical::Sp(2) => RootSystem::build(Letter::A, 1),
            Classical::Sp(n) if n >= 4 && n % 2 == 0 => RootSystem::build(Letter::C, n / 2),
            Classical::So(3) => RootSystem::build(Letter::A, 1),
            Classical::So(n) if n >= 5 && n % 2 == 1 => RootSystem::build(Letter::B, n / 2),
            Classical::So(n) if n >= 6 && n % 2 == 0 => RootSystem::build_lenient(Letter::D, n / 2),
            _ => Err(Error::Unsupported(
                self.to_string(),
                "not a simple classical algebra".into(),
            )),
        }
    }

    pub fn dim(self) -> usize {
        let n = self.size();
        match self {
            Classical::Sl(_) => n * n - 1,
            Classical::So(_) => n * (n - 1) / 2,
            Classical::Sp(_) => n * (n + 1) / 2,
        }
    }
}

impl fmt::Display for Classical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classical::Sl(n) => write!(f, "sl{n}"),
            Classical::So(n) => write!(f, "so{n}"),
            Classical::Sp(n) => write!(f, "sp{n}"),
        }
    }
}

pub fn validate_partition(alg: Classical, partition: &[usize]) -> Result<Vec<usize>> {
    let mut p: Vec<usize> = partition.iter().copied().filter(|&x| x > 0).collect();
    p.sort_unstable_by(|a, b| b.cmp(a));
    let bad = |reason: String| Error::InvalidPartition {
        algebra: alg.to_string(),
        partition: p.clone(),
        reason,
    };
    let total: usize = p.iter().sum();
    if total != alg.size() {
        return Err(bad(format!(
            "parts sum to {total}, expected {}",
            alg.size()
        )));
    }
    let mult = |x: usize| p.iter().filter(|&&y| y == x).count();
    match alg {
        Classical::Sp(_) => {
            if let Some(&x) = p.iter().find(|&&x| x % 2 == 1 && mult(x) % 2 == 1) {
                return Err(bad(format!("odd part {x} has odd multiplicity")));
            }
        }
        Classical::So(_) => {
            if let Some(&x) = p.iter().find(|&&x| x % 2 == 0 && mult(x) % 2 == 1) {
                return Err(bad(format!("even part {x} has odd multiplicity")));
            }
        }
        Classical::Sl(_) => {}
    }
    Ok(p)
}

/// Eigenvalues of the characteristic, sorted in decreasing order.
fn characteristic(partition: &[usize]) -> Vec<i64> {
    let mut h: Vec<i64> = partition
        .iter()
        .flat_map(|&p| (0..p).map(move |k| p as i64 - 1 - 2 * k as i64))
        .collect();
    h.sort_unstable_by(|a, b| b.cmp(a));
    h
}

/// Weighted Dynkin diagram of the nilpotent orbit with the given Jordan type.
pub fn diagram_from_partition(
    alg: Classical,
    partition: &[usize],
) -> Result<(RootSystem, WeightedDiagram)> {
    let p = validate_partition(alg, partition)?;
    let rs = alg.root_system()?;
    let h = characteristic(&p);
    let r = rs.rank();
    let labels: Vec<i64> = match alg {
        Classical::Sl(_) => (0..r).map(|i| h[i] - h[i + 1]).collect(),
        Classical::Sp(_) => {
            let mut l: Vec<i64> = (0..r - 1).map(|i| h[i] - h[i + 1]).collect();
            l.push(2 * h[r - 1]);
            l
        }
        Classical::So(n) if n % 2 == 1 => {
            let mut l: Vec<i64> = (0..r - 1).map(|i| h[i] - h[i + 1]).collect();
            l.push(h[r - 1]);
            l
        }
        Classical::So(_) => {
            let mut l: Vec<i64> = (0..r - 1).map(|i| h[i] - h[i + 1]).collect();
            l.push(h[r - 2] + h[r - 1]);
            l
        }
    };
    let labels = labels
        .into_iter()
        .map(|x| {
            u8::try_from(x).map_err(|_| Error::InvalidDiagram(format!("label {x} out of range")))
        })
        .collect::<Result<Vec<u8>>>()?;
    let d = WeightedDiagram::new(&rs, labels)?;
    Ok((rs, d))
}

/// Dual partition.
pub fn transpose_partition(p: &[usize]) -> Vec<usize> {
    let max = p.iter().copied().max().unwrap_or(0);
    (1..=max)
        .map(|k| p.iter().filter(|&&x| x >= k).count())
        .collect()
}

/// Orbit dimension from the classical closed formulas in terms of the partition.
pub fn partition_orbit_dim(alg: Classical, partition: &[usize]) -> Result<usize> {
    let p = validate_partition(alg, partition)?;
    let sq: usize = transpose_partition(&p).iter().map(|x| x * x).sum();
    let odd = p.iter().filter(|&&x| x % 2 == 1).count();
    let n = alg.size();
    Ok(match alg {
        Classical::Sl(_) => n * n - sq,
        Classical::Sp(_) => n * (n + 1) / 2 - (sq + odd) / 2,
        Classical::So(_) => n * (n - 1) / 2 - (sq - odd) / 2,
    })
}

pub fn format_partition(p: &[usize]) -> String {
    let mut out: Vec<String> = Vec::new();
    let mut i = 0;
    while i < p.len() {
        let j = (i..p.len()).find(|&k| p[k] != p[i]).unwrap_or(p.len());
        let m = j - i;
        out.push(if m == 1 {
            p[i].to_string()
        } else {
            format!("{}^{}", p[i], m)
        });
        i = j;
    }
    format!("({})", out.join(","))
}
