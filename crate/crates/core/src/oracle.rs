//! Independent reference computations used to cross-check the main code
//! paths. Nothing here calls into `schouten_self` or the connection formula.

use num_traits::{One, Zero};

use crate::algebra::{LieAlgebra, Vector};
use crate::multivector::{Bivector, Trivector};
use crate::scalar::Scalar;

/// `[r, r]` computed by expanding `r = Σ R_ij b_i∧b_j` and applying
/// `[x₁∧x₂, y₁∧y₂] = Σ_{a,b} (−1)^{a+b} [x_a, y_b] ∧ x_â ∧ y_b̂`.
pub fn schouten_by_decomposables(g: &LieAlgebra, r: &Bivector) -> Trivector {
    let d = g.dim();
    let terms: Vec<(Vector, Vector)> = r
        .upper_entries()
        .map(|(i, j, v)| (g.basis(i).scale(v), g.basis(j)))
        .collect();
    let mut acc = WedgeAccumulator::new(d);
    for (x1, x2) in &terms {
        for (y1, y2) in &terms {
            let x = [x1, x2];
            let y = [y1, y2];
            for a in 0..2 {
                for b in 0..2 {
                    let z = g.bracket(x[a], y[b]);
                    let sign = if (a + b) % 2 == 0 { Scalar::one() } else { -Scalar::one() };
                    acc.add_wedge(&sign, &z, x[1 - a], y[1 - b]);
                }
            }
        }
    }
    acc.finish()
}

/// Sums of `c · x∧y∧z`, stored on sorted index triples.
struct WedgeAccumulator {
    dim: usize,
    upper: Vec<Scalar>,
}

impl WedgeAccumulator {
    fn new(dim: usize) -> Self {
        Self { dim, upper: vec![Scalar::zero(); dim * dim * dim] }
    }

    fn add_wedge(&mut self, c: &Scalar, x: &Vector, y: &Vector, z: &Vector) {
        let nz = |v: &Vector| -> Vec<(usize, Scalar)> {
            v.components().iter().enumerate().filter(|(_, s)| !s.is_zero()).map(|(i, s)| (i, s.clone())).collect()
        };
        let (xs, ys, zs) = (nz(x), nz(y), nz(z));
        for (i, a) in &xs {
            for (j, b) in &ys {
                for (k, e) in &zs {
                    if i == j || j == k || i == k {
                        continue;
                    }
                    let mut idx = [*i, *j, *k];
                    let mut odd = false;
                    for p in 0..3 {
                        for q in 0..2 - p {
                            if idx[q] > idx[q + 1] {
                                idx.swap(q, q + 1);
                                odd = !odd;
                            }
                        }
                    }
                    let v = c * a * b * e;
                    let slot = &mut self.upper[(idx[0] * self.dim + idx[1]) * self.dim + idx[2]];
                    if odd {
                        *slot -= v;
                    } else {
                        *slot += v;
                    }
                }
            }
        }
    }

    fn finish(self) -> Trivector {
        let d = self.dim;
        let mut t = Trivector::zero(d);
        for i in 0..d {
            for j in i + 1..d {
                for k in j + 1..d {
                    let v = &self.upper[(i * d + j) * d + k];
                    if !v.is_zero() {
                        t.set_antisymmetric(i, j, k, v.clone());
                    }
                }
            }
        }
        t
    }
}
