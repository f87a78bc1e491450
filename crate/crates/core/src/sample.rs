//! Deterministic sample pools for universally quantified identities.
//!
//! A pool is the structured part (basis vectors, pairwise sums and
//! differences, all basis pairs or triples) followed by `pool_size` dense
//! pseudo-random elements drawn from a ChaCha stream keyed by the seed.
//! Vectors, pairs and triples use independent streams, so asking for one
//! kind never shifts another.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::field::{FieldElement, FieldSpec};
use crate::linalg::{add, sub, unit_vector, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleSpec {
    pub seed: u64,
    pub pool_size: usize,
    pub include_basis_combinations: bool,
}

impl Default for SampleSpec {
    fn default() -> Self {
        SampleSpec {
            seed: 42,
            pool_size: 200,
            include_basis_combinations: true,
        }
    }
}

impl SampleSpec {
    pub fn new(seed: u64, pool_size: usize) -> Self {
        SampleSpec {
            seed,
            pool_size,
            include_basis_combinations: true,
        }
    }

    fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream);
        rng
    }

    /// Basis vectors, then `b_i + b_j` and `b_i - b_j` for `i < j`, then
    /// `pool_size` random vectors of length `dim`.
    pub fn vectors(&self, spec: FieldSpec, dim: usize) -> Vec<Vector> {
        let mut out = Vec::new();
        if self.include_basis_combinations {
            let basis: Vec<Vector> = (0..dim).map(|i| unit_vector(spec, dim, i)).collect();
            out.extend(basis.iter().cloned());
            for i in 0..dim {
                for j in i + 1..dim {
                    out.push(add(&basis[i], &basis[j]));
                    out.push(sub(&basis[i], &basis[j]));
                }
            }
        }
        let mut rng = self.rng(1);
        out.extend((0..self.pool_size).map(|_| random_vector(&mut rng, spec, dim)));
        out
    }

    /// All ordered basis pairs, then `pool_size` random pairs.
    pub fn pairs(&self, spec: FieldSpec, dim: usize) -> Vec<(Vector, Vector)> {
        let mut out = Vec::new();
        if self.include_basis_combinations {
            for i in 0..dim {
                for j in 0..dim {
                    out.push((unit_vector(spec, dim, i), unit_vector(spec, dim, j)));
                }
            }
        }
        let mut rng = self.rng(2);
        out.extend((0..self.pool_size).map(|_| {
            let x = random_vector(&mut rng, spec, dim);
            (x, random_vector(&mut rng, spec, dim))
        }));
        out
    }

    /// All ordered basis triples, then `pool_size` random triples.
    pub fn triples(&self, spec: FieldSpec, dim: usize) -> Vec<[Vector; 3]> {
        let mut out = Vec::new();
        if self.include_basis_combinations {
            for i in 0..dim {
                for j in 0..dim {
                    for k in 0..dim {
                        out.push([
                            unit_vector(spec, dim, i),
                            unit_vector(spec, dim, j),
                            unit_vector(spec, dim, k),
                        ]);
                    }
                }
            }
        }
        let mut rng = self.rng(3);
        out.extend((0..self.pool_size).map(|_| {
            [
                random_vector(&mut rng, spec, dim),
                random_vector(&mut rng, spec, dim),
                random_vector(&mut rng, spec, dim),
            ]
        }));
        out
    }
}

/// Uniform residues for prime fields; small fractions `n/d` with
/// `|n| <= 4`, `d in {1, 2}` for the rationals.
pub fn random_scalar<R: Rng>(rng: &mut R, spec: FieldSpec) -> FieldElement {
    match spec {
        FieldSpec::Prime(p) => spec.from_i64(rng.gen_range(0..p) as i64),
        FieldSpec::Rational => {
            let num = rng.gen_range(-4i64..=4);
            let den = rng.gen_range(1i64..=2);
            spec.fraction(num, den).expect("nonzero denominator")
        }
    }
}

pub fn random_vector<R: Rng>(rng: &mut R, spec: FieldSpec, dim: usize) -> Vector {
    (0..dim).map(|_| random_scalar(rng, spec)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pool_is_reproducible() {
        let s = SampleSpec::new(7, 20);
        let gf5 = FieldSpec::prime(5).unwrap();
        assert_eq!(s.vectors(gf5, 8), s.vectors(gf5, 8));
        assert_eq!(s.pairs(FieldSpec::Rational, 8), s.pairs(FieldSpec::Rational, 8));
        assert_ne!(s.vectors(gf5, 8), SampleSpec::new(8, 20).vectors(gf5, 8));
    }

    #[test]
    fn pool_sizes() {
        let s = SampleSpec::new(1, 10);
        assert_eq!(s.vectors(FieldSpec::Rational, 8).len(), 8 + 56 + 10);
        assert_eq!(s.pairs(FieldSpec::Rational, 8).len(), 64 + 10);
        assert_eq!(s.triples(FieldSpec::Rational, 7).len(), 343 + 10);
        let bare = SampleSpec {
            include_basis_combinations: false,
            ..s
        };
        assert_eq!(bare.vectors(FieldSpec::Rational, 8).len(), 10);
    }
}
