//! Random specialisation of formal parameters over a large prime field.

use exact_linalg::{Field, Matrix, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::BraidedError;

/// `2^31 - 1`.
pub const SPECIALISATION_PRIME: u64 = 2_147_483_647;

/// Names of formal parameters plus the sampling policy used to specialise them.
#[derive(Clone, Debug)]
pub struct GenericParams {
    pub names: Vec<String>,
    pub trials: usize,
    pub seed: u64,
    pub modulus: u64,
}

impl GenericParams {
    pub fn new(names: Vec<String>, trials: usize, seed: u64) -> Result<GenericParams, BraidedError> {
        if trials < 2 {
            return Err(BraidedError::Input("at least two specialisations are required".into()));
        }
        Ok(GenericParams { names, trials, seed, modulus: SPECIALISATION_PRIME })
    }

    /// Parameters `u_2, ..., u_n`.
    pub fn indexed(prefix: &str, range: std::ops::RangeInclusive<usize>, trials: usize, seed: u64) -> Result<GenericParams, BraidedError> {
        GenericParams::new(range.map(|k| format!("{prefix}{k}")).collect(), trials, seed)
    }

    pub fn field(&self) -> Field {
        Field::prime(self.modulus).expect("modulus is prime")
    }

    /// One value per name for each trial; values avoid `0` and `-1`.
    pub fn samples(&self) -> Vec<Vec<Scalar>> {
        let field = self.field();
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        (0..self.trials)
            .map(|_| {
                self.names
                    .iter()
                    .map(|_| field.int(rng.gen_range(1..self.modulus as i64 - 1)))
                    .collect()
            })
            .collect()
    }
}

/// Image of a scalar in another field; rationals need denominators prime to the modulus.
pub fn specialise_scalar(x: &Scalar, target: Field) -> Result<Scalar, BraidedError> {
    if x.field() == target {
        return Ok(x.clone());
    }
    match x.as_rational() {
        Some(q) => Ok(target.from_rational(q)?),
        None => Err(BraidedError::Input(format!(
            "cannot move a scalar of {:?} into {:?}",
            x.field(),
            target
        ))),
    }
}

pub fn specialise_matrix(m: &Matrix, target: Field) -> Result<Matrix, BraidedError> {
    let data = m.entries().iter().map(|x| specialise_scalar(x, target)).collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::new(target, m.rows(), m.cols(), data)?)
}
