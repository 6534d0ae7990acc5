//! Boost matrices for four-vectors, shared by the covariance experiments.

use crate::constants::PhysicalConstants;
use crate::error::{Error, Result};

/// 4×4 boost matrix Λ taking old-frame contravariant components
/// `(ct, x)` (or `(cρ, J)`) to the frame moving with velocity `v`.
pub fn boost_matrix(v: [f64; 3], constants: &PhysicalConstants) -> Result<[[f64; 4]; 4]> {
    let c = constants.c;
    let speed = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    if speed >= c {
        return Err(Error::SuperluminalBoost);
    }
    let mut lambda = [[0.0; 4]; 4];
    if speed == 0.0 {
        for (i, row) in lambda.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        return Ok(lambda);
    }
    let beta = speed / c;
    let n = [v[0] / speed, v[1] / speed, v[2] / speed];
    let gamma = 1.0 / (1.0 - beta * beta).sqrt();
    lambda[0][0] = gamma;
    for i in 0..3 {
        lambda[0][i + 1] = -gamma * beta * n[i];
        lambda[i + 1][0] = -gamma * beta * n[i];
        for j in 0..3 {
            lambda[i + 1][j + 1] =
                (if i == j { 1.0 } else { 0.0 }) + (gamma - 1.0) * n[i] * n[j];
        }
    }
    Ok(lambda)
}

pub fn apply(lambda: &[[f64; 4]; 4], x: [f64; 4]) -> [f64; 4] {
    let mut out = [0.0; 4];
    for (slot, row) in out.iter_mut().zip(lambda.iter()) {
        *slot = row[0] * x[0] + row[1] * x[1] + row[2] * x[2] + row[3] * x[3];
    }
    out
}

pub fn rapidity(v: [f64; 3], constants: &PhysicalConstants) -> Result<(f64, [f64; 3])> {
    let c = constants.c;
    let speed = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    if speed >= c {
        return Err(Error::SuperluminalBoost);
    }
    if speed == 0.0 {
        return Ok((0.0, [0.0, 0.0, 1.0]));
    }
    Ok((
        (speed / c).atanh(),
        [v[0] / speed, v[1] / speed, v[2] / speed],
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boost_preserves_minkowski_norm() {
        let c = PhysicalConstants::default();
        let lambda = boost_matrix([0.5, 0.2, -0.1], &c).unwrap();
        let x = [1.3, 0.2, -0.7, 0.4];
        let y = apply(&lambda, x);
        let q = |v: [f64; 4]| v[0] * v[0] - v[1] * v[1] - v[2] * v[2] - v[3] * v[3];
        assert!((q(x) - q(y)).abs() < 1e-12);
    }

    #[test]
    fn inverse_is_opposite_velocity() {
        let c = PhysicalConstants::default();
        let v = [0.4, -0.3, 0.1];
        let fwd = boost_matrix(v, &c).unwrap();
        let bwd = boost_matrix([-v[0], -v[1], -v[2]], &c).unwrap();
        let x = [0.9, 0.1, 0.5, -0.2];
        let there_and_back = apply(&bwd, apply(&fwd, x));
        for (a, b) in there_and_back.iter().zip(x.iter()) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn superluminal_rejected() {
        let c = PhysicalConstants::default();
        assert!(boost_matrix([1.0, 0.0, 0.0], &c).is_err());
        assert!(boost_matrix([0.8, 0.8, 0.0], &c).is_err());
    }
}
