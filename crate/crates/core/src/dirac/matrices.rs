//! The alpha, beta and spin matrices in the Dirac representation.

use num_complex::Complex64;

const Z: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// Dense 4×4 complex matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat4(pub [[Complex64; 4]; 4]);

impl Mat4 {
    pub fn zero() -> Self {
        Mat4([[Z; 4]; 4])
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            m.0[i][i] = ONE;
        }
        m
    }

    pub fn mul_vec(&self, v: &[Complex64; 4]) -> [Complex64; 4] {
        let mut out = [Z; 4];
        for (row, slot) in self.0.iter().zip(out.iter_mut()) {
            *slot = row[0] * v[0] + row[1] * v[1] + row[2] * v[2] + row[3] * v[3];
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                let mut s = Z;
                for (l, row) in other.0.iter().enumerate() {
                    s += self.0[i][l] * row[j];
                }
                out.0[i][j] = s;
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = *self;
        for i in 0..4 {
            for j in 0..4 {
                out.0[i][j] += other.0[i][j];
            }
        }
        out
    }

    pub fn scale(&self, s: Complex64) -> Self {
        let mut out = *self;
        for row in out.0.iter_mut() {
            for v in row.iter_mut() {
                *v *= s;
            }
        }
        out
    }

    pub fn dagger(&self) -> Self {
        let mut out = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                out.0[i][j] = self.0[j][i].conj();
            }
        }
        out
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        self.mul(other).add(&other.mul(self))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut m: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                m = m.max((self.0[i][j] - other.0[i][j]).norm());
            }
        }
        m
    }
}

/// α_i, β and the 4×4 spin matrices Σ_i (Pauli blocks on the diagonal),
/// all in the Dirac representation (β diagonal).
#[derive(Debug, Clone, Copy)]
pub struct DiracMatrices {
    pub alpha: [Mat4; 3],
    pub beta: Mat4,
    pub sigma: [Mat4; 3],
}

impl DiracMatrices {
    pub fn standard() -> Self {
        // Pauli blocks.
        let pauli: [[[Complex64; 2]; 2]; 3] = [
            [[Z, ONE], [ONE, Z]],
            [[Z, -I], [I, Z]],
            [[ONE, Z], [Z, -ONE]],
        ];
        let mut alpha = [Mat4::zero(); 3];
        let mut sigma = [Mat4::zero(); 3];
        for a in 0..3 {
            for i in 0..2 {
                for j in 0..2 {
                    // α_a = offdiag(σ_a, σ_a)
                    alpha[a].0[i][j + 2] = pauli[a][i][j];
                    alpha[a].0[i + 2][j] = pauli[a][i][j];
                    // Σ_a = diag(σ_a, σ_a)
                    sigma[a].0[i][j] = pauli[a][i][j];
                    sigma[a].0[i + 2][j + 2] = pauli[a][i][j];
                }
            }
        }
        let mut beta = Mat4::identity();
        beta.0[2][2] = -ONE;
        beta.0[3][3] = -ONE;
        Self { alpha, beta, sigma }
    }

    /// The free Dirac Hamiltonian matrix at wavevector k:
    /// `H(k) = c α·ħk + β mc²`.
    pub fn hamiltonian(&self, k: [f64; 3], constants: &crate::PhysicalConstants) -> Mat4 {
        let mut h = self.beta.scale(Complex64::new(constants.rest_energy(), 0.0));
        for a in 0..3 {
            let coeff = Complex64::new(constants.c * constants.hbar * k[a], 0.0);
            h = h.add(&self.alpha[a].scale(coeff));
        }
        h
    }
}
