//! Exact simple highest-weight modules and the tangent-space computations
//! behind secant defects of their highest-weight orbits.
//!
//! A module is grown weight by weight from the highest-weight vector. A vector
//! f_i b at weight ν is new exactly when its images under all e_j are
//! independent of those of the vectors already kept; in a simple module a
//! vector below the top is zero iff every e_j kills it, so this reproduces the
//! quotient of the Verma module by the radical of the contravariant form.

use crate::error::{Error, Result};
use crate::linalg::{intersection_basis, rank, Echelon, Q};
use crate::rootsys::{RootSystem, Weight, R64};
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};
use std::ops::Range;

pub const DEFAULT_CAP: usize = 1000;

pub type SparseVec = Vec<(usize, Q)>;

fn axpy(acc: &mut BTreeMap<usize, Q>, c: &Q, v: &SparseVec) {
    for (i, x) in v {
        let e = acc.entry(*i).or_insert_with(Q::zero);
        *e += c * x;
    }
}

fn finish(acc: BTreeMap<usize, Q>) -> SparseVec {
    acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
}

/// A linear operator on the module, stored column by column.
#[derive(Clone, Debug, PartialEq)]
pub struct Operator {
    cols: Vec<SparseVec>,
}

impl Operator {
    fn zero(dim: usize) -> Self {
        Operator {
            cols: vec![Vec::new(); dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.cols[j]
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut acc = BTreeMap::new();
        for (j, c) in v {
            axpy(&mut acc, c, &self.cols[*j]);
        }
        finish(acc)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Operator) -> Operator {
        Operator {
            cols: other.cols.iter().map(|c| self.apply(c)).collect(),
        }
    }

    pub fn sub(&self, other: &Operator) -> Operator {
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| {
                let mut acc = BTreeMap::new();
                axpy(&mut acc, &Q::one(), a);
                axpy(&mut acc, &-Q::one(), b);
                finish(acc)
            })
            .collect();
        Operator { cols }
    }

    pub fn commutator(&self, other: &Operator) -> Operator {
        self.compose(other).sub(&other.compose(self))
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    /// Nonzero entries as (row, column, value).
    pub fn entries(&self) -> Vec<(usize, usize, Q)> {
        let mut out = Vec::new();
        for (j, col) in self.cols.iter().enumerate() {
            for (i, x) in col {
                out.push((*i, j, x.clone()));
            }
        }
        out.sort_by_key(|a| (a.0, a.1));
        out
    }
}

#[derive(Clone, Debug)]
pub struct HWModule {
    pub rs: RootSystem,
    pub lambda: Weight,
    /// Distinct weights, in order of depth below λ.
    pub weights: Vec<Weight>,
    /// Basis indices spanning each weight space.
    pub blocks: Vec<Range<usize>>,
    /// Weight index of every basis vector.
    pub vector_weight: Vec<usize>,
    pub e: Vec<Operator>,
    pub f: Vec<Operator>,
    /// Raising operators for all positive roots, in the root system's order.
    pub raising: Vec<Operator>,
    /// Lowering operators for all positive roots.
    pub lowering: Vec<Operator>,
    weight_index: HashMap<Vec<i64>, usize>,
}

fn simple_root_weight(rs: &RootSystem, i: usize) -> Vec<i64> {
    (0..rs.rank()).map(|j| rs.cartan[j][i]).collect()
}

fn shift(w: &[i64], d: &[i64], sign: i64) -> Vec<i64> {
    w.iter().zip(d).map(|(a, b)| a + sign * b).collect()
}

impl HWModule {
    pub fn build(rs: &RootSystem, lambda: &Weight, cap: usize) -> Result<HWModule> {
        let r = rs.rank();
        if lambda.0.len() != r {
            return Err(Error::WeightShape {
                weight: lambda.0.clone(),
                rank: r,
            });
        }
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.0.clone()));
        }
        let weyl = rs.weyl_dim(lambda)?;
        if weyl > cap as u128 {
            return Err(Error::DimensionCap {
                weyl_dim: weyl,
                cap,
            });
        }
        let alpha: Vec<Vec<i64>> = (0..r).map(|i| simple_root_weight(rs, i)).collect();
        #[allow(clippy::single_range_in_vec_init)]
        let mut m = HWModule {
            rs: rs.clone(),
            lambda: lambda.clone(),
            weights: vec![lambda.clone()],
            blocks: vec![0..1],
            vector_weight: vec![0],
            e: vec![Operator::zero(1); r],
            f: vec![Operator::zero(1); r],
            raising: Vec::new(),
            lowering: Vec::new(),
            weight_index: HashMap::from([(lambda.0.clone(), 0)]),
        };
        let mut level = vec![0usize];
        while !level.is_empty() {
            let mut next_weights: Vec<Vec<i64>> = Vec::new();
            for &wi in &level {
                for a in &alpha {
                    let nu = shift(&m.weights[wi].0, a, -1);
                    if !next_weights.contains(&nu) {
                        next_weights.push(nu);
                    }
                }
            }
            let mut next_level = Vec::new();
            for nu in next_weights {
                if let Some(idx) = m.grow_weight(&nu, &alpha) {
                    next_level.push(idx);
                }
            }
            level = next_level;
        }
        if m.dim() as u128 != weyl {
            return Err(Error::Soundness(format!(
                "built dimension {} but Weyl dimension {weyl}",
                m.dim()
            )));
        }
        m.build_root_operators();
        Ok(m)
    }

    fn block_of(&self, w: &[i64]) -> Option<Range<usize>> {
        self.weight_index.get(w).map(|&i| self.blocks[i].clone())
    }

    // Adds the weight space V[nu], if nonzero, and fills in f_i on the weight spaces above it.
    fn grow_weight(&mut self, nu: &[i64], alpha: &[Vec<i64>]) -> Option<usize> {
        let r = alpha.len();
        let targets: Vec<Option<Range<usize>>> = (0..r)
            .map(|j| self.block_of(&shift(nu, &alpha[j], 1)))
            .collect();
        let offsets: Vec<usize> = targets
            .iter()
            .scan(0, |acc, t| {
                let o = *acc;
                *acc += t.as_ref().map_or(0, |b| b.len());
                Some(o)
            })
            .collect();
        let width: usize = targets
            .iter()
            .map(|t| t.as_ref().map_or(0, |b| b.len()))
            .sum();
        let mut candidates: Vec<(usize, usize, Vec<SparseVec>)> = Vec::new();
        for i in 0..r {
            let Some(src) = targets[i].clone() else {
                continue;
            };
            let mu = shift(nu, &alpha[i], 1);
            for b in src {
                // e_j f_i b = f_i e_j b + δ_ij <μ, α_i^∨> b
                let images: Vec<SparseVec> = (0..r)
                    .map(|j| {
                        if targets[j].is_none() {
                            return Vec::new();
                        }
                        let mut acc = BTreeMap::new();
                        let ejb = self.e[j].column(b).clone();
                        axpy(&mut acc, &Q::one(), &self.f[i].apply(&ejb));
                        if i == j {
                            axpy(
                                &mut acc,
                                &Q::from_integer(mu[i].into()),
                                &vec![(b, Q::one())],
                            );
                        }
                        finish(acc)
                    })
                    .collect();
                candidates.push((i, b, images));
            }
        }
        let flat = |images: &[SparseVec]| {
            let mut v = vec![Q::zero(); width];
            for (j, img) in images.iter().enumerate() {
                if let Some(t) = &targets[j] {
                    for (k, x) in img {
                        v[offsets[j] + (k - t.start)] = x.clone();
                    }
                }
            }
            v
        };
        let mut ech = Echelon::tracked(width);
        let mut kept: Vec<usize> = Vec::new();
        let flats: Vec<Vec<Q>> = candidates.iter().map(|c| flat(&c.2)).collect();
        for (ci, v) in flats.iter().enumerate() {
            if ech.insert(v) {
                kept.push(ci);
            }
        }
        if kept.is_empty() {
            return None;
        }
        let start = self.dim();
        let widx = self.weights.len();
        self.weights.push(Weight(nu.to_vec()));
        self.blocks.push(start..start + kept.len());
        self.weight_index.insert(nu.to_vec(), widx);
        for (k, &ci) in kept.iter().enumerate() {
            self.vector_weight.push(widx);
            for j in 0..r {
                self.e[j].cols.push(candidates[ci].2[j].clone());
                self.f[j].cols.push(Vec::new());
            }
            debug_assert_eq!(self.e[0].cols.len(), start + k + 1);
        }
        for (ci, (i, b, _)) in candidates.iter().enumerate() {
            let coords = ech
                .input_coordinates(&flats[ci])
                .expect("candidate lies in the span of kept ones");
            self.f[*i].cols[*b] = coords
                .into_iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(k, x)| (start + k, x))
                .collect();
        }
        Some(widx)
    }

    fn build_root_operators(&mut self) {
        let rs = &self.rs;
        let mut raising: Vec<Operator> = Vec::new();
        let mut lowering: Vec<Operator> = Vec::new();
        for (k, root) in rs.positive_roots.iter().enumerate() {
            if RootSystem::height(root) == 1 {
                let i = root.iter().position(|&c| c == 1).unwrap();
                raising.push(self.e[i].clone());
                lowering.push(self.f[i].clone());
                continue;
            }
            // first simple root whose removal leaves a root, which comes earlier in height order
            let (i, prev) = (0..rs.rank())
                .find_map(|i| {
                    let mut p = root.clone();
                    p[i] -= 1;
                    rs.root_position(&p).map(|pos| (i, pos))
                })
                .expect("every non-simple positive root is a sum of a root and a simple root");
            debug_assert!(prev < k);
            raising.push(self.e[i].commutator(&raising[prev]));
            lowering.push(lowering[prev].commutator(&self.f[i]));
        }
        self.raising = raising;
        self.lowering = lowering;
    }

    pub fn dim(&self) -> usize {
        self.vector_weight.len()
    }

    pub fn weight_of(&self, v: usize) -> &Weight {
        &self.weights[self.vector_weight[v]]
    }

    pub fn highest_vector(&self) -> SparseVec {
        vec![(0, Q::one())]
    }

    /// The lowest weight is the last one reached; its space is a line.
    pub fn lowest_vector(&self) -> SparseVec {
        let b = self.blocks.last().unwrap();
        debug_assert_eq!(b.len(), 1);
        vec![(b.start, Q::one())]
    }

    pub fn lowest_weight(&self) -> &Weight {
        self.weights.last().unwrap()
    }

    /// h_i acts on a weight vector by the i-th fundamental coordinate of its weight.
    pub fn apply_h(&self, i: usize, v: &SparseVec) -> SparseVec {
        v.iter()
            .map(|(k, x)| (*k, x * Q::from_integer(self.weight_of(*k).0[i].into())))
            .filter(|(_, x)| !x.is_zero())
            .collect()
    }

    pub fn dense(&self, v: &SparseVec) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim()];
        for (i, x) in v {
            out[*i] = x.clone();
        }
        out
    }

    /// Images of `v` under a basis of g: raising, lowering, then Cartan elements.
    pub fn orbit_tangent_vectors(&self, v: &SparseVec) -> Vec<Vec<Q>> {
        let mut out = Vec::with_capacity(2 * self.raising.len() + self.rs.rank());
        for op in self.raising.iter().chain(&self.lowering) {
            out.push(self.dense(&op.apply(v)));
        }
        for i in 0..self.rs.rank() {
            out.push(self.dense(&self.apply_h(i, v)));
        }
        out
    }

    /// Basis of the tangent space g·v.
    pub fn tangent_space(&self, v: &SparseVec) -> Vec<Vec<Q>> {
        crate::linalg::independent(&self.orbit_tangent_vectors(v))
    }

    /// Checks [e_i, f_j] = δ_ij h_i and the Serre relations on the realized matrices.
    pub fn check_relations(&self) -> std::result::Result<(), String> {
        let r = self.rs.rank();
        for i in 0..r {
            for j in 0..r {
                let c = self.e[i].commutator(&self.f[j]);
                for v in 0..self.dim() {
                    let expected = if i == j {
                        self.apply_h(i, &vec![(v, Q::one())])
                    } else {
                        Vec::new()
                    };
                    if c.cols[v] != expected {
                        return Err(format!("[e{},f{}] wrong on basis vector {v}", i + 1, j + 1));
                    }
                }
                if i != j {
                    let times = 1 - self.rs.cartan[i][j];
                    for (name, ops) in [("e", &self.e), ("f", &self.f)] {
                        let mut x = ops[j].clone();
                        for _ in 0..times {
                            x = ops[i].commutator(&x);
                        }
                        if !x.is_zero() {
                            return Err(format!(
                                "Serre relation fails for {name}{},{name}{}",
                                i + 1,
                                j + 1
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DefectReport {
    pub module_dim: usize,
    pub orbit_dim: usize,
    /// dim(g·v_λ ∩ g·v_μ), from an explicit basis of the intersection.
    pub delta: usize,
    /// 2·dim g·v_λ − dim(g·v_λ + g·v_μ).
    pub delta_by_rank: usize,
    pub sum_dim: usize,
    /// v_μ lies in g·v_λ.
    pub lowest_in_tangent: bool,
}

pub fn secant_defect(m: &HWModule) -> DefectReport {
    let tl = m.tangent_space(&m.highest_vector());
    let tm = m.tangent_space(&m.lowest_vector());
    let delta = intersection_basis(&tl, &tm).len();
    let sum: Vec<Vec<Q>> = tl.iter().chain(&tm).cloned().collect();
    let sum_dim = rank(&sum);
    let mut ech = Echelon::new(m.dim());
    for v in &tl {
        ech.insert(v);
    }
    DefectReport {
        module_dim: m.dim(),
        orbit_dim: tl.len(),
        delta,
        delta_by_rank: 2 * tl.len() - sum_dim,
        sum_dim,
        lowest_in_tangent: ech.contains(&m.dense(&m.lowest_vector())),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// ξ = λ − λ*, in fundamental-weight coordinates.
    pub xi: Vec<i64>,
    /// (λ, ξ) and (μ, ξ) as reduced fractions.
    pub lambda_pairing: String,
    pub mu_pairing: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CsReport {
    pub defect: DefectReport,
    pub cs_dim: usize,
    pub fills_module: bool,
    /// g·v_λ + g·v_μ = V_λ, checked directly.
    pub tangents_span_module: bool,
    pub h_orbit_conical: bool,
    pub nullcone_witness: Option<Witness>,
}

pub fn cs_report(m: &HWModule) -> Result<CsReport> {
    let defect = secant_defect(m);
    let cs_dim = 2 * defect.orbit_dim - defect.delta;
    let mut h = m.highest_vector();
    h.extend(m.lowest_vector());
    if m.dim() == 1 {
        h.truncate(1);
    }
    let th = m.tangent_space(&h);
    let mut ech = Echelon::new(m.dim());
    for v in &th {
        ech.insert(v);
    }
    let h_orbit_conical = ech.contains(&m.dense(&h));
    let rs = &m.rs;
    let dual = rs.dual_weight(&m.lambda)?;
    let nullcone_witness = if dual != m.lambda {
        let xi = m.lambda.sub(&dual);
        let mu = dual.neg();
        let lp = rs.pairing(&m.lambda, &xi, false);
        let mp = rs.pairing(&mu, &xi, false);
        if !(lp.is_positive() && mp.is_positive()) {
            return Err(Error::Soundness(format!(
                "ξ = {xi} fails to separate λ and μ"
            )));
        }
        Some(Witness {
            xi: xi.0,
            lambda_pairing: lp.to_string(),
            mu_pairing: mp.to_string(),
        })
    } else {
        None
    };
    Ok(CsReport {
        fills_module: cs_dim == m.dim(),
        tangents_span_module: defect.sum_dim == m.dim(),
        cs_dim,
        defect,
        h_orbit_conical,
        nullcone_witness,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignTests {
    pub delta: usize,
    pub theta_pairing: String,
    /// δ > 0 implies (λ, θ^∨) ∈ {1, 2}.
    pub necessary_condition_holds: bool,
    /// Experimental: for (λ, θ^∨) = 1, whether λ + λ* − θ ∈ (Δ⁺ ∖ {θ}) ∪ {0}; None otherwise.
    pub experimental_prediction: Option<bool>,
    /// v_μ ∈ g·v_λ.
    pub lowest_in_tangent: bool,
}

pub fn delta_sign_tests(m: &HWModule) -> Result<SignTests> {
    let rs = &m.rs;
    let d = secant_defect(m);
    let theta = rs.theta_weight();
    let tp = rs.pairing(&m.lambda, &theta, true);
    let in_12 = tp == R64::from_integer(1) || tp == R64::from_integer(2);
    let experimental_prediction = if tp == R64::from_integer(1) {
        let dual = rs.dual_weight(&m.lambda)?;
        let s = m.lambda.add(&dual).sub(&theta);
        if s.is_zero() {
            Some(true)
        } else {
            let coords = rs.weight_to_roots(&s);
            let integral: Option<Vec<i64>> = coords
                .iter()
                .map(|c| c.is_integer().then(|| c.to_integer()))
                .collect();
            Some(
                integral
                    .is_some_and(|root| rs.is_root(&root) && root.as_slice() != rs.highest_root()),
            )
        }
    } else {
        None
    };
    Ok(SignTests {
        delta: d.delta,
        theta_pairing: tp.to_string(),
        necessary_condition_holds: d.delta == 0 || in_12,
        experimental_prediction,
        lowest_in_tangent: d.lowest_in_tangent,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ModuleDump {
    pub algebra: String,
    pub highest_weight: Vec<i64>,
    pub dim: usize,
    pub weights: Vec<(Vec<i64>, usize, usize)>,
    pub e: Vec<Vec<(usize, usize, String)>>,
    pub f: Vec<Vec<(usize, usize, String)>>,
}

impl HWModule {
    /// Weight spaces as (weight, first index, dimension) and the generator matrices.
    pub fn dump(&self) -> ModuleDump {
        let ser = |ops: &[Operator]| {
            ops.iter()
                .map(|o| {
                    o.entries()
                        .into_iter()
                        .map(|(i, j, x)| (i, j, x.to_string()))
                        .collect()
                })
                .collect()
        };
        ModuleDump {
            algebra: self.rs.name(),
            highest_weight: self.lambda.0.clone(),
            dim: self.dim(),
            weights: self
                .weights
                .iter()
                .zip(&self.blocks)
                .map(|(w, b)| (w.0.clone(), b.start, b.len()))
                .collect(),
            e: ser(&self.e),
            f: ser(&self.f),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Letter;

    fn module(l: Letter, n: usize, w: &[i64]) -> HWModule {
        let rs = RootSystem::build(l, n).unwrap();
        HWModule::build(&rs, &Weight(w.to_vec()), DEFAULT_CAP).unwrap()
    }

    #[test]
    fn small_modules() {
        assert_eq!(module(Letter::A, 2, &[1, 0]).dim(), 3);
        let g2 = module(Letter::G, 2, &[1, 0]);
        assert_eq!(g2.dim(), 7);
        g2.check_relations().unwrap();
        assert_eq!(secant_defect(&g2).orbit_dim, 6);
        module(Letter::B, 3, &[0, 0, 1]).check_relations().unwrap();
        module(Letter::A, 2, &[1, 1]).check_relations().unwrap();
    }

    #[test]
    fn defects() {
        assert_eq!(secant_defect(&module(Letter::G, 2, &[1, 0])).delta, 5);
        assert_eq!(secant_defect(&module(Letter::A, 2, &[1, 1])).delta, 1);
        assert_eq!(secant_defect(&module(Letter::A, 1, &[3])).delta, 0);
        let a3 = secant_defect(&module(Letter::A, 3, &[0, 1, 0]));
        assert_eq!((a3.delta, a3.delta_by_rank), (4, 4));
    }

    #[test]
    fn cs_reports() {
        let c3 = cs_report(&module(Letter::C, 3, &[1, 0, 0])).unwrap();
        assert!(c3.fills_module && c3.tangents_span_module);
        assert_eq!(c3.defect.delta, 6);
        let a1 = cs_report(&module(Letter::A, 1, &[2])).unwrap();
        assert!(a1.fills_module && !a1.h_orbit_conical);
        let a2 = cs_report(&module(Letter::A, 2, &[1, 0])).unwrap();
        assert!(a2.nullcone_witness.is_some());
    }

    #[test]
    fn lowest_vector_in_tangent() {
        assert!(secant_defect(&module(Letter::C, 3, &[1, 0, 0])).lowest_in_tangent);
        assert!(secant_defect(&module(Letter::A, 3, &[1, 0, 0])).lowest_in_tangent);
        assert!(!secant_defect(&module(Letter::B, 3, &[1, 0, 0])).lowest_in_tangent);
    }

    #[test]
    fn cap_is_enforced() {
        let rs = RootSystem::build(Letter::E, 8).unwrap();
        match HWModule::build(&rs, &Weight::fundamental(8, 7), 1000) {
            Err(Error::DimensionCap { weyl_dim, cap }) => assert!(weyl_dim > 1000 && cap == 1000),
            other => panic!("{:?}", other.map(|m| m.dim())),
        }
    }
}
