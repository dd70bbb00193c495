//! Seeded random draws and grids of exact scalars.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Vector;
use crate::multivector::Bivector;
use crate::oscillator::OscillatorAlgebra;
use crate::scalar::{self, Scalar};

pub const DEFAULT_SEED: u64 = 20_240_607;

pub struct Sampler {
    seed: u64,
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self { seed, rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Uniform on `{−3..3}/{1,2,3}`.
    pub fn scalar(&mut self) -> Scalar {
        scalar::ratio(self.rng.gen_range(-3..=3), self.rng.gen_range(1..=3))
    }

    /// Uniform on `{−2..2}/{1,2}`.
    pub fn small_scalar(&mut self) -> Scalar {
        scalar::ratio(self.rng.gen_range(-2..=2), self.rng.gen_range(1..=2))
    }

    pub fn nonzero_scalar(&mut self) -> Scalar {
        loop {
            let x = self.scalar();
            if x != scalar::zero() {
                return x;
            }
        }
    }

    pub fn scalars(&mut self, n: usize) -> Vec<Scalar> {
        (0..n).map(|_| self.scalar()).collect()
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen_bool(0.5)
    }

    pub fn vector(&mut self, d: usize) -> Vector {
        Vector::new(self.scalars(d))
    }

    pub fn vector_in_s(&mut self, g: &OscillatorAlgebra) -> Vector {
        let mut c = vec![scalar::zero(); g.dim()];
        for s in g.s_indices() {
            c[s] = self.scalar();
        }
        Vector::new(c)
    }

    /// Random bivector with entries from [`small_scalar`](Self::small_scalar).
    pub fn small_bivector(&mut self, d: usize) -> Bivector {
        let coords: Vec<Scalar> = (0..d * (d - 1) / 2).map(|_| self.small_scalar()).collect();
        Bivector::from_upper_coordinates(d, &coords)
    }

    pub fn bivector(&mut self, d: usize) -> Bivector {
        let coords = self.scalars(d * (d - 1) / 2);
        Bivector::from_upper_coordinates(d, &coords)
    }

    pub fn bivector_in_wedge2_s(&mut self, g: &OscillatorAlgebra) -> Bivector {
        let mut r = Bivector::zero(g.dim());
        let s: Vec<usize> = g.s_indices().collect();
        for (x, &i) in s.iter().enumerate() {
            for &j in &s[x + 1..] {
                r.set(i, j, self.scalar());
            }
        }
        r
    }

    /// A sparse random element of `∧²S`: each coordinate is zero with probability ½.
    pub fn sparse_bivector_in_wedge2_s(&mut self, g: &OscillatorAlgebra) -> Bivector {
        let mut r = Bivector::zero(g.dim());
        let s: Vec<usize> = g.s_indices().collect();
        for (x, &i) in s.iter().enumerate() {
            for &j in &s[x + 1..] {
                if self.coin() {
                    r.set(i, j, self.scalar());
                }
            }
        }
        r
    }
}

/// `{k/2 : |k| ≤ n}`; empty for negative `n`.
pub fn grid_values(n: i64) -> Vec<Scalar> {
    if n < 0 {
        return Vec::new();
    }
    (-n..=n).map(|k| scalar::ratio(k, 2)).collect()
}

/// Cartesian power of `values`, as index tuples decoded on demand.
pub fn grid_point(values: &[Scalar], dims: usize, mut index: usize) -> Vec<Scalar> {
    let m = values.len();
    let mut out = Vec::with_capacity(dims);
    for _ in 0..dims {
        out.push(values[index % m].clone());
        index /= m;
    }
    out
}

pub fn grid_size(values: &[Scalar], dims: usize) -> usize {
    values.len().pow(dims as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    #[test]
    fn seeds_are_reproducible() {
        let mut a = Sampler::new(7);
        let mut b = Sampler::new(7);
        assert_eq!(a.scalars(20), b.scalars(20));
        assert_eq!(a.seed(), 7);
    }

    #[test]
    fn grids() {
        assert_eq!(grid_values(2), vec![ratio(-1, 1), ratio(-1, 2), ratio(0, 1), ratio(1, 2), ratio(1, 1)]);
        assert!(grid_values(-1).is_empty());
        let v = grid_values(1);
        assert_eq!(grid_size(&v, 3), 27);
        assert_eq!(grid_point(&v, 2, 4), vec![v[1].clone(), v[1].clone()]);
    }

    #[test]
    fn scalar_ranges() {
        let mut s = Sampler::new(1);
        for _ in 0..200 {
            let x = s.scalar();
            assert!(x >= ratio(-3, 1) && x <= ratio(3, 1));
            assert!(*x.denom() <= 3.into());
        }
    }
}
