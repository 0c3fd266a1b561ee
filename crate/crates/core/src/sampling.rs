//! Seeded random generation of rationals, parameter values and test data.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::SkewTriple;
use crate::error::{Error, Result};
use crate::gencohom::{MixedCochain, SubcomplexBasis};
use crate::index;
use crate::linalg::Matrix;
use crate::rep::{NuMap, Representation};
use crate::scalar::{ParameterAssignment, Scalar};

/// Environment variable overriding the default seed.
pub const SEED_VAR: &str = "TRILIE_SEED";
pub const DEFAULT_SEED: u64 = 20_240_601;

/// Seed from the environment, falling back to a fixed default.
pub fn seed_from_env() -> u64 {
    std::env::var(SEED_VAR)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

/// The environment seed if set, else `explicit`, else the default.
pub fn resolve_seed(explicit: Option<u64>) -> u64 {
    std::env::var(SEED_VAR)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .or(explicit)
        .unwrap_or(DEFAULT_SEED)
}

/// `count` assignments of `parameters` for which `checks` sees no vanishing denominator.
pub fn sample_assignments<F>(
    parameters: &BTreeSet<String>,
    count: usize,
    seed: u64,
    checks: F,
) -> Result<Vec<ParameterAssignment>>
where
    F: Fn(&ParameterAssignment) -> Result<()>,
{
    let mut sampler = Sampler::new(seed);
    (0..count).map(|_| sampler.assignment(parameters, &checks)).collect()
}

/// `name=value` pairs joined by commas.
pub fn describe_assignment(values: &ParameterAssignment) -> String {
    values
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(",")
}

/// Reproducible source of small random rationals `p/q` with `|p| <= 9`, `1 <= q <= 5`.
#[derive(Clone, Debug)]
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn from_env() -> Self {
        Self::new(seed_from_env())
    }

    pub fn rational(&mut self) -> BigRational {
        let num: i64 = self.rng.gen_range(-9..=9);
        let den: i64 = self.rng.gen_range(1..=5);
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    pub fn nonzero_rational(&mut self) -> BigRational {
        loop {
            let q = self.rational();
            if q != BigRational::from_integer(BigInt::from(0)) {
                return q;
            }
        }
    }

    pub fn scalar(&mut self) -> Scalar {
        Scalar::from_rational(self.rational())
    }

    /// A random scalar that is zero with probability `1 - density`.
    pub fn sparse_scalar(&mut self, density: f64) -> Scalar {
        if self.rng.gen_bool(density) {
            self.scalar()
        } else {
            Scalar::zero()
        }
    }

    pub fn index(&mut self, bound: usize) -> usize {
        self.rng.gen_range(0..bound)
    }

    /// Nonzero values for every parameter such that each of `checks` can be
    /// instantiated, retrying when a denominator vanishes.
    pub fn assignment<F>(&mut self, parameters: &BTreeSet<String>, checks: F) -> Result<ParameterAssignment>
    where
        F: Fn(&ParameterAssignment) -> Result<()>,
    {
        for _ in 0..64 {
            let values: ParameterAssignment = parameters
                .iter()
                .map(|p| (p.clone(), self.nonzero_rational()))
                .collect();
            match checks(&values) {
                Ok(()) => return Ok(values),
                Err(Error::DenominatorVanishes(_)) => continue,
                Err(e) => return Err(e),
            }
        }
        Err(Error::DenominatorVanishes(
            "no sampled parameter values avoid a vanishing denominator".into(),
        ))
    }

    pub fn matrix(&mut self, rows: usize, cols: usize, density: f64) -> Matrix {
        let mut out = Matrix::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                out.set(r, c, self.sparse_scalar(density));
            }
        }
        out
    }

    pub fn vector(&mut self, len: usize, density: f64) -> Vec<Scalar> {
        (0..len).map(|_| self.sparse_scalar(density)).collect()
    }

    pub fn representation(&mut self, n: usize, m: usize, density: f64) -> Representation {
        let mut rho = Representation::zero(n, m);
        for (i, j) in index::pairs(n) {
            let mat = self.matrix(m, m, density);
            rho.set(i, j, mat).expect("sizes agree");
        }
        rho
    }

    pub fn nu_map(&mut self, n: usize, m: usize, density: f64) -> NuMap {
        let mut nu = NuMap::zero(n, m);
        for i in 0..n {
            for (a, b) in index::pairs(m) {
                let v = self.vector(m, density);
                nu.set(i, a, b, &v).expect("distinct indices");
            }
        }
        nu
    }

    /// A fully skew map `^3 (dim) -> (codim)`.
    pub fn skew_triple(&mut self, dim: usize, codim: usize, density: f64) -> SkewTriple {
        let mut t = SkewTriple::zeros(dim, codim);
        for [i, j, k] in index::triples(dim) {
            let v = self.vector(codim, density);
            t.set(i, j, k, &v).expect("distinct indices");
        }
        t
    }

    /// A random element of the subcomplex in the given degree.
    pub fn mixed_cochain(&mut self, degree: usize, n: usize, m: usize, density: f64) -> MixedCochain {
        let basis = SubcomplexBasis::new(degree, n, m);
        let v = self.vector(basis.len(), density);
        basis.from_vector(&v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_stream() {
        let mut a = Sampler::new(7);
        let mut b = Sampler::new(7);
        for _ in 0..20 {
            assert_eq!(a.rational(), b.rational());
        }
    }

    #[test]
    fn rationals_stay_in_range() {
        let mut s = Sampler::new(1);
        for _ in 0..200 {
            let q = s.rational();
            assert!(q.numer().magnitude() <= &9u32.into());
            assert!(q.denom() <= &BigInt::from(5));
        }
    }

    #[test]
    fn assignment_avoids_vanishing_denominators() {
        let x = Scalar::parse("1/(s1 - 1)").unwrap();
        let mut s = Sampler::new(3);
        for _ in 0..20 {
            let values = s.assignment(&x.parameters(), |v| x.instantiate(v).map(|_| ())).unwrap();
            assert!(x.instantiate(&values).is_ok());
        }
    }

    #[test]
    fn sampled_cochains_lie_in_the_subcomplex() {
        let mut s = Sampler::new(5);
        for degree in 0..2 {
            assert!(s.mixed_cochain(degree, 3, 2, 0.5).is_in_c_greater());
        }
    }
}
