//! Plane-wave eigenspinors of the free Dirac Hamiltonian.

use num_complex::Complex64;

use crate::constants::PhysicalConstants;

/// Sign of the mode frequency: positive-frequency modes carry
/// `e^{−iE t/ħ}`, negative-frequency modes `e^{+iE t/ħ}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    Positive,
    Negative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Spin {
    Up,
    Down,
}

impl Spin {
    fn two_spinor(self) -> [Complex64; 2] {
        match self {
            Spin::Up => [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
            Spin::Down => [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
        }
    }
}

/// One normalized eigenspinor of `H(k) = c α·ħk + β mc²`.
#[derive(Debug, Clone, Copy)]
pub struct PlaneWaveSpinor {
    pub wavevector: [f64; 3],
    pub branch: Branch,
    pub spin: Spin,
    pub amplitude: [Complex64; 4],
}

impl PlaneWaveSpinor {
    /// Signed energy eigenvalue: `+E(k)` for the positive branch, `−E(k)`
    /// for the negative branch.
    pub fn signed_energy(&self, constants: &PhysicalConstants) -> f64 {
        let e = constants.mode_energy(self.wavevector);
        match self.branch {
            Branch::Positive => e,
            Branch::Negative => -e,
        }
    }
}

/// `σ·p χ` for a two-spinor χ, with p = ħk.
fn sigma_dot(p: [f64; 3], chi: [Complex64; 2]) -> [Complex64; 2] {
    let pz = Complex64::new(p[2], 0.0);
    let p_minus = Complex64::new(p[0], -p[1]);
    let p_plus = Complex64::new(p[0], p[1]);
    [pz * chi[0] + p_minus * chi[1], p_plus * chi[0] - pz * chi[1]]
}

/// The four orthonormal eigenspinors at wavevector k, in the order
/// `[u(k,↑), u(k,↓), v(k,↑), v(k,↓)]`. At k = 0 these are the standard
/// rest-frame eigenvectors of β.
pub fn plane_wave_spinors(k: [f64; 3], constants: &PhysicalConstants) -> [PlaneWaveSpinor; 4] {
    let energy = constants.mode_energy(k);
    let mc2 = constants.rest_energy();
    let p = [
        constants.hbar * k[0],
        constants.hbar * k[1],
        constants.hbar * k[2],
    ];
    let norm = ((energy + mc2) / (2.0 * energy)).sqrt();
    let lower_scale = constants.c / (energy + mc2);

    let build = |branch: Branch, spin: Spin| {
        let chi = spin.two_spinor();
        let tail = sigma_dot(p, chi);
        let mut amplitude = [Complex64::new(0.0, 0.0); 4];
        match branch {
            Branch::Positive => {
                amplitude[0] = chi[0] * norm;
                amplitude[1] = chi[1] * norm;
                amplitude[2] = tail[0] * lower_scale * norm;
                amplitude[3] = tail[1] * lower_scale * norm;
            }
            Branch::Negative => {
                amplitude[0] = -tail[0] * lower_scale * norm;
                amplitude[1] = -tail[1] * lower_scale * norm;
                amplitude[2] = chi[0] * norm;
                amplitude[3] = chi[1] * norm;
            }
        }
        PlaneWaveSpinor {
            wavevector: k,
            branch,
            spin,
            amplitude,
        }
    };

    [
        build(Branch::Positive, Spin::Up),
        build(Branch::Positive, Spin::Down),
        build(Branch::Negative, Spin::Up),
        build(Branch::Negative, Spin::Down),
    ]
}

pub(crate) fn dot(a: &[Complex64; 4], b: &[Complex64; 4]) -> Complex64 {
    a[0].conj() * b[0] + a[1].conj() * b[1] + a[2].conj() * b[2] + a[3].conj() * b[3]
}
