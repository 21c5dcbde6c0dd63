//! Seeded sampling of nilpotent elements by conjugation with Cayley transforms.

use super::realize::{Ambient, PairKind, PairRealization};
use super::M;
use crate::linalg::{ci, imag_unit, Mat, Qi};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// (I - x)⁻¹(I + x) and its inverse, when I - x is invertible.
fn cayley(x: &M) -> Option<(M, M)> {
    let id = Mat::identity(x.rows);
    let minus = id.sub(x);
    let plus = id.add(x);
    let c = minus.inverse()?.mul(&plus);
    let c_inv = plus.inverse()?.mul(&minus);
    Some((c, c_inv))
}

/// Conjugates `x` by a product of `factors` Cayley transforms of small multiples of random
/// elements of `basis`. With `basis` spanning a Lie algebra preserving the form, the product
/// lies in the corresponding group.
pub fn conjugate_random(x: &M, basis: &[M], factors: usize, rng: &mut ChaCha8Rng) -> M {
    let mut y = x.clone();
    let mut done = 0;
    while done < factors {
        let b = &basis[rng.random_range(0..basis.len())];
        let t = [-2, -1, 1, 2][rng.random_range(0..4)];
        if let Some((c, c_inv)) = cayley(&b.scale(&ci(t))) {
            y = c.mul(&y).mul(&c_inv);
            done += 1;
        }
    }
    y
}

/// A combination of `basis` with coefficients in [-3, 3].
pub fn random_element(basis: &[M], rng: &mut ChaCha8Rng) -> M {
    let n = basis[0].rows;
    basis.iter().fold(Mat::zeros(n, n), |acc, b| {
        acc.add(&b.scale(&ci(rng.random_range(-3..=3))))
    })
}

/// u vᵀ - v uᵀ for the isotropic vectors u = e_p + i e_{p+1} and v = e_{p+2} + i e_{p+3}.
fn isotropic_plane(n: usize, p: usize) -> M {
    let mut u = vec![Qi::zero(); n];
    let mut v = vec![Qi::zero(); n];
    u[p] = Qi::one();
    u[p + 1] = imag_unit();
    v[p + 2] = Qi::one();
    v[p + 3] = imag_unit();
    Mat::from_fn(n, n, |i, j| {
        u[i].clone() * v[j].clone() - v[i].clone() * u[j].clone()
    })
}

/// A fixed element of O_min.
pub fn base_minimal(r: &PairRealization) -> M {
    match r.ambient {
        Ambient::Sl(n) => Mat::unit(n, 0, n - 1),
        Ambient::So(n) => isotropic_plane(n, 0),
        Ambient::Sp(m) => Mat::unit(2 * m, 0, m),
    }
}

/// A fixed element of O_min ∩ g1, when the intersection is nonempty.
pub fn base_minimal_g1(r: &PairRealization) -> Option<M> {
    match r.kind {
        PairKind::SlSo { n } => {
            let mut u = vec![Qi::zero(); n];
            u[0] = Qi::one();
            u[1] = imag_unit();
            Some(Mat::from_fn(n, n, |i, j| u[i].clone() * u[j].clone()))
        }
        PairKind::SpGl { n } => Some(Mat::unit(2 * n, 0, n)),
        _ => None,
    }
}

/// An element of O_min conjugated by a random group element; deterministic per seed.
pub fn min_orbit_sample(r: &PairRealization, seed: u64) -> M {
    let mut rng = rng_for(seed);
    min_orbit_sample_with(r, &mut rng)
}

pub fn min_orbit_sample_with(r: &PairRealization, rng: &mut ChaCha8Rng) -> M {
    conjugate_random(&base_minimal(r), &r.g, 2 * r.size(), rng)
}

/// An element of O_min ∩ g1 moved by a random element of G0.
pub fn g1_min_sample_with(r: &PairRealization, rng: &mut ChaCha8Rng) -> Option<M> {
    let e = base_minimal_g1(r)?;
    Some(conjugate_random(&e, &r.g0, 2 * r.size(), rng))
}
