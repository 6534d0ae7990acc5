//! The classical Dirac field on the lattice.
//!
//! A four-component complex field evolving by the free Dirac equation,
//! together with every derived observable the electron-as-field picture
//! uses: probability and charge flows, the Gordon split of the current,
//! energy and momentum densities, angular momentum and magnetic moment of
//! localized packets, flow velocities, and Lorentz boosts.

pub mod boost;
pub mod matrices;
pub mod spinors;

use num_complex::Complex64;
use rand::Rng;

use crate::basis::ModeBasis;
use crate::constants::PhysicalConstants;
use crate::error::{Error, Result};
use crate::spectral;

pub use matrices::{DiracMatrices, Mat4};
pub use spinors::{plane_wave_spinors, Branch, PlaneWaveSpinor, Spin};

use spinors::dot;

/// Which space the stored values live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Representation {
    Position,
    Mode,
}

/// Sign convention for charge and energy of negative-frequency modes.
///
/// `Standard` is the textbook classical Dirac field. `PositronFlipped`
/// applies the modification in which negative-frequency modes carry
/// positive charge and positive energy, mode by mode (interference terms
/// between the branches are dropped).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignConvention {
    Standard,
    PositronFlipped,
}

/// Default density floor for flow-velocity masking, as a fraction of the
/// peak density.
pub const DENSITY_FLOOR_FRACTION: f64 = 1e-10;
/// Default boundary-density warning threshold for packet moments.
pub const BOUNDARY_DENSITY_THRESHOLD: f64 = 1e-6;
/// Default cap on the norm fraction allowed in the unpaired Nyquist shell.
pub const TOP_MODE_THRESHOLD: f64 = 1e-8;

/// Four-component complex classical Dirac field.
#[derive(Debug, Clone)]
pub struct SpinorField {
    basis: ModeBasis,
    rep: Representation,
    /// Component-major storage: `values[c * sites + site]`.
    values: Vec<Complex64>,
}

impl SpinorField {
    pub fn zero(basis: ModeBasis, rep: Representation) -> Self {
        let n = basis.site_count();
        Self {
            basis,
            rep,
            values: vec![Complex64::default(); 4 * n],
        }
    }

    pub fn basis(&self) -> &ModeBasis {
        &self.basis
    }

    pub fn representation(&self) -> Representation {
        self.rep
    }

    pub fn component(&self, c: usize) -> &[Complex64] {
        let n = self.basis.site_count();
        &self.values[c * n..(c + 1) * n]
    }

    pub fn component_mut(&mut self, c: usize) -> &mut [Complex64] {
        let n = self.basis.site_count();
        &mut self.values[c * n..(c + 1) * n]
    }

    /// The four components at one site or mode index.
    pub fn site(&self, idx: usize) -> [Complex64; 4] {
        let n = self.basis.site_count();
        [
            self.values[idx],
            self.values[n + idx],
            self.values[2 * n + idx],
            self.values[3 * n + idx],
        ]
    }

    pub fn set_site(&mut self, idx: usize, v: [Complex64; 4]) {
        let n = self.basis.site_count();
        for c in 0..4 {
            self.values[c * n + idx] = v[c];
        }
    }

    /// Convert into the requested representation (no-op when already there).
    pub fn into_rep(mut self, rep: Representation) -> Self {
        if self.rep != rep {
            for c in 0..4 {
                let n = self.basis.site_count();
                let slice = &mut self.values[c * n..(c + 1) * n];
                match rep {
                    Representation::Mode => self.basis.to_mode(slice),
                    Representation::Position => self.basis.to_position(slice),
                }
            }
            self.rep = rep;
        }
        self
    }

    pub fn to_rep(&self, rep: Representation) -> Self {
        self.clone().into_rep(rep)
    }

    /// Physical norm ∫ψ†ψ d³x (= Σ_k |ψ̃|² in mode space).
    pub fn norm_squared(&self) -> f64 {
        let sum: f64 = self.values.iter().map(|v| v.norm_sqr()).sum();
        match self.rep {
            Representation::Position => sum * self.basis.cell_volume(),
            Representation::Mode => sum,
        }
    }

    pub fn inner(&self, other: &Self) -> Complex64 {
        assert_eq!(self.basis, other.basis);
        assert_eq!(self.rep, other.rep);
        let sum: Complex64 = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.conj() * b)
            .sum();
        match self.rep {
            Representation::Position => sum * self.basis.cell_volume(),
            Representation::Mode => sum,
        }
    }

    pub fn scaled(mut self, s: Complex64) -> Self {
        for v in self.values.iter_mut() {
            *v *= s;
        }
        self
    }

    pub fn normalized(self) -> Self {
        let n = self.norm_squared().sqrt();
        self.scaled(Complex64::new(1.0 / n, 0.0))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.basis, other.basis);
        assert_eq!(self.rep, other.rep);
        let mut out = self.clone();
        for (a, b) in out.values.iter_mut().zip(&other.values) {
            *a += b;
        }
        out
    }

    /// Random field with independent complex-normal mode amplitudes,
    /// restricted to the band `|n_axis| ≤ band_fraction · N/2`, unit norm.
    pub fn random_band_limited<R: Rng>(
        basis: &ModeBasis,
        rng: &mut R,
        band_fraction: f64,
    ) -> Self {
        let mut field = Self::zero(basis.clone(), Representation::Mode);
        let n = basis.points_per_axis();
        let cut = (band_fraction * (n / 2) as f64).floor() as i64;
        let sites = basis.site_count();
        for idx in 0..sites {
            let coords = basis.coords_of(idx);
            let in_band = (0..basis.dim()).all(|a| {
                let s = coords[a] as i64 - (n / 2) as i64;
                s.abs() <= cut && s != -((n / 2) as i64)
            });
            if !in_band {
                continue;
            }
            for c in 0..4 {
                field.values[c * sites + idx] =
                    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            }
        }
        field.normalized()
    }

    /// Fraction of the mode-space norm sitting in the unpaired Nyquist
    /// shell (any axis at n = −N/2).
    pub fn top_mode_fraction(&self) -> f64 {
        let modes = self.to_rep(Representation::Mode);
        let n = modes.basis.points_per_axis();
        let sites = modes.basis.site_count();
        let total: f64 = modes.values.iter().map(|v| v.norm_sqr()).sum();
        if total == 0.0 {
            return 0.0;
        }
        let mut top = 0.0;
        for idx in 0..sites {
            let coords = modes.basis.coords_of(idx);
            if (0..modes.basis.dim()).any(|a| coords[a] == 0) {
                for c in 0..4 {
                    top += modes.values[c * sites + idx].norm_sqr();
                }
            }
        }
        top / total
    }

    /// Split into positive-frequency (electron) and negative-frequency
    /// parts. The two parts are orthogonal and sum back to the field.
    pub fn split_frequencies(&self, constants: &PhysicalConstants) -> (Self, Self) {
        let modes = self.to_rep(Representation::Mode);
        let sites = modes.basis.site_count();
        let mut pos = Self::zero(modes.basis.clone(), Representation::Mode);
        let mut neg = Self::zero(modes.basis.clone(), Representation::Mode);
        for idx in 0..sites {
            let amp = modes.site(idx);
            let spinors = plane_wave_spinors(modes.basis.wavevector(idx), constants);
            let mut p = [Complex64::default(); 4];
            let mut m = [Complex64::default(); 4];
            for s in &spinors {
                let coeff = dot(&s.amplitude, &amp);
                let target = match s.branch {
                    Branch::Positive => &mut p,
                    Branch::Negative => &mut m,
                };
                for c in 0..4 {
                    target[c] += coeff * s.amplitude[c];
                }
            }
            pos.set_site(idx, p);
            neg.set_site(idx, m);
        }
        (pos.into_rep(self.rep), neg.into_rep(self.rep))
    }

    /// Exact free evolution: every (k, branch, spin) amplitude picks up
    /// the phase `e^{∓iE(k)t/ħ}`.
    pub fn evolve_free(&self, t: f64, constants: &PhysicalConstants) -> Self {
        let modes = self.to_rep(Representation::Mode);
        let sites = modes.basis.site_count();
        let mut out = Self::zero(modes.basis.clone(), Representation::Mode);
        for idx in 0..sites {
            let amp = modes.site(idx);
            let spinors = plane_wave_spinors(modes.basis.wavevector(idx), constants);
            let mut evolved = [Complex64::default(); 4];
            for s in &spinors {
                let coeff = dot(&s.amplitude, &amp);
                let phase =
                    Complex64::new(0.0, -s.signed_energy(constants) * t / constants.hbar).exp();
                for c in 0..4 {
                    evolved[c] += coeff * phase * s.amplitude[c];
                }
            }
            out.set_site(idx, evolved);
        }
        out.into_rep(self.rep)
    }

    /// Apply the free Hamiltonian `H = c α·p + β mc²` (exact, in mode space).
    pub fn apply_hamiltonian(&self, constants: &PhysicalConstants) -> Self {
        let matrices = DiracMatrices::standard();
        let modes = self.to_rep(Representation::Mode);
        let sites = modes.basis.site_count();
        let mut out = Self::zero(modes.basis.clone(), Representation::Mode);
        for idx in 0..sites {
            let h = matrices.hamiltonian(modes.basis.wavevector(idx), constants);
            out.set_site(idx, h.mul_vec(&modes.site(idx)));
        }
        out.into_rep(self.rep)
    }

    /// Probability density ρ = ψ†ψ and probability current J = c ψ†αψ.
    pub fn probability_densities(
        &self,
        constants: &PhysicalConstants,
    ) -> (Vec<f64>, Vec<[f64; 3]>) {
        let pos = self.to_rep(Representation::Position);
        let matrices = DiracMatrices::standard();
        let sites = pos.basis.site_count();
        let mut rho = Vec::with_capacity(sites);
        let mut current = Vec::with_capacity(sites);
        for idx in 0..sites {
            let psi = pos.site(idx);
            rho.push(dot(&psi, &psi).re);
            let mut j = [0.0; 3];
            for (a, slot) in j.iter_mut().enumerate() {
                let av = matrices.alpha[a].mul_vec(&psi);
                *slot = constants.c * dot(&psi, &av).re;
            }
            current.push(j);
        }
        (rho, current)
    }

    /// Charge density ρ_q = −e ψ†ψ and current J = −ec ψ†αψ, or the
    /// positron-flipped variant applied branch by branch.
    pub fn charge_current(
        &self,
        constants: &PhysicalConstants,
        convention: SignConvention,
    ) -> (Vec<f64>, Vec<[f64; 3]>) {
        match convention {
            SignConvention::Standard => {
                let (mut rho, mut j) = self.probability_densities(constants);
                for r in rho.iter_mut() {
                    *r *= -constants.e;
                }
                for v in j.iter_mut() {
                    for a in 0..3 {
                        v[a] *= -constants.e;
                    }
                }
                (rho, j)
            }
            SignConvention::PositronFlipped => {
                let (plus, minus) = self.split_frequencies(constants);
                let (rho_p, j_p) = plus.probability_densities(constants);
                let (rho_m, j_m) = minus.probability_densities(constants);
                let rho = rho_p
                    .iter()
                    .zip(&rho_m)
                    .map(|(p, m)| -constants.e * p + constants.e * m)
                    .collect();
                let j = j_p
                    .iter()
                    .zip(&j_m)
                    .map(|(p, m)| {
                        [
                            -constants.e * p[0] + constants.e * m[0],
                            -constants.e * p[1] + constants.e * m[1],
                            -constants.e * p[2] + constants.e * m[2],
                        ]
                    })
                    .collect();
                (rho, j)
            }
        }
    }

    /// Total field energy `iħ ∫ (ψ₊†∂ψ₊/∂t + ψ₋†∂ψ₋/∂t)`, evaluated mode
    /// by mode: Σ E(k) (|u-amps|² − |v-amps|²). The flipped convention
    /// counts both branches positively.
    pub fn energy(&self, constants: &PhysicalConstants, convention: SignConvention) -> f64 {
        let modes = self.to_rep(Representation::Mode);
        let sites = modes.basis.site_count();
        let mut total = 0.0;
        for idx in 0..sites {
            let amp = modes.site(idx);
            let e = constants.mode_energy(modes.basis.wavevector(idx));
            for s in &plane_wave_spinors(modes.basis.wavevector(idx), constants) {
                let w = dot(&s.amplitude, &amp).norm_sqr();
                let sign = match (convention, s.branch) {
                    (SignConvention::Standard, Branch::Negative) => -1.0,
                    _ => 1.0,
                };
                total += sign * e * w;
            }
        }
        total
    }

    /// ∂_a ψ for the three axes, spectral, position rep.
    fn gradient(&self) -> [Self; 3] {
        let pos = self.to_rep(Representation::Position);
        let mut out = [
            Self::zero(pos.basis.clone(), Representation::Position),
            Self::zero(pos.basis.clone(), Representation::Position),
            Self::zero(pos.basis.clone(), Representation::Position),
        ];
        for (a, field) in out.iter_mut().enumerate() {
            for c in 0..4 {
                let d = spectral::derivative(&pos.basis, pos.component(c), a);
                field.component_mut(c).copy_from_slice(&d);
            }
        }
        out
    }

    /// Momentum density of the symmetrized energy-momentum tensor:
    /// `g = (iħ/2)[(∇ψ†)ψ − ψ†∇ψ] + (ħ/4) ∇×(ψ†Σψ)`.
    pub fn momentum_density(&self, constants: &PhysicalConstants) -> Vec<[f64; 3]> {
        let pos = self.to_rep(Representation::Position);
        let matrices = DiracMatrices::standard();
        let sites = pos.basis.site_count();
        let grads = pos.gradient();

        let mut g: Vec<[f64; 3]> = vec![[0.0; 3]; sites];
        let mut spin_density: Vec<[f64; 3]> = vec![[0.0; 3]; sites];
        for idx in 0..sites {
            let psi = pos.site(idx);
            for a in 0..3 {
                let dpsi = grads[a].site(idx);
                g[idx][a] = constants.hbar * dot(&psi, &dpsi).im;
                let sv = matrices.sigma[a].mul_vec(&psi);
                spin_density[idx][a] = dot(&psi, &sv).re;
            }
        }
        let curl = spectral::curl_real(&pos.basis, &spin_density);
        for idx in 0..sites {
            for a in 0..3 {
                g[idx][a] += 0.25 * constants.hbar * curl[idx][a];
            }
        }
        g
    }

    /// Energy density Re[ψ†Hψ] of the symmetrized tensor.
    pub fn energy_density(&self, constants: &PhysicalConstants) -> Vec<f64> {
        let pos = self.to_rep(Representation::Position);
        let hpsi = pos.apply_hamiltonian(constants);
        (0..pos.basis.site_count())
            .map(|idx| dot(&pos.site(idx), &hpsi.site(idx)).re)
            .collect()
    }
}

/// The three pieces of the Gordon split of the charge current.
#[derive(Debug, Clone)]
pub struct GordonDecomposition {
    /// `(ieħ/2m){ψ†β∇ψ − (∇ψ†)βψ}`
    pub convection: Vec<[f64; 3]>,
    /// `−(eħ/2m) ∇×(ψ†βσψ)` — the spin magnetic-moment current.
    pub spin: Vec<[f64; 3]>,
    /// `(ieħ/2mc) ∂_t(ψ†βαψ)`, with ∂_t from the equation of motion.
    pub time_derivative: Vec<[f64; 3]>,
}

impl GordonDecomposition {
    /// Relative L² error of `convection + spin + time_derivative` against
    /// the direct current `−ec ψ†αψ`.
    pub fn closure_residual(&self, total: &[[f64; 3]]) -> f64 {
        let mut num = 0.0;
        let mut den = 0.0;
        for (i, t) in total.iter().enumerate() {
            for a in 0..3 {
                let s = self.convection[i][a] + self.spin[i][a] + self.time_derivative[i][a];
                num += (s - t[a]) * (s - t[a]);
                den += t[a] * t[a];
            }
        }
        if den == 0.0 {
            0.0
        } else {
            (num / den).sqrt()
        }
    }

    pub fn l2_norms(&self, basis: &ModeBasis) -> (f64, f64, f64) {
        let norm = |f: &Vec<[f64; 3]>| {
            (basis.cell_volume()
                * f.iter()
                    .map(|v| v[0] * v[0] + v[1] * v[1] + v[2] * v[2])
                    .sum::<f64>())
            .sqrt()
        };
        (
            norm(&self.convection),
            norm(&self.spin),
            norm(&self.time_derivative),
        )
    }
}

impl SpinorField {
    /// Gordon decomposition of the current density. Requires a free
    /// on-shell field with negligible occupation of the unpaired Nyquist
    /// shell; spatial derivatives are spectral and the time derivative is
    /// evaluated exactly through the equation of motion.
    pub fn gordon_decompose(
        &self,
        constants: &PhysicalConstants,
        top_mode_threshold: f64,
    ) -> Result<GordonDecomposition> {
        let frac = self.top_mode_fraction();
        if frac > top_mode_threshold {
            return Err(Error::TopModeOccupied {
                frac,
                threshold: top_mode_threshold,
            });
        }
        let pos = self.to_rep(Representation::Position);
        let matrices = DiracMatrices::standard();
        let sites = pos.basis.site_count();
        let grads = pos.gradient();
        let minus_i_over_hbar = Complex64::new(0.0, -1.0 / constants.hbar);
        let psi_dot = pos.apply_hamiltonian(constants).scaled(minus_i_over_hbar);

        let e = constants.e;
        let m = constants.m;
        let hbar = constants.hbar;
        let mut convection = vec![[0.0; 3]; sites];
        let mut magnetization = vec![[0.0; 3]; sites];
        let mut time_derivative = vec![[0.0; 3]; sites];
        for idx in 0..sites {
            let psi = pos.site(idx);
            let dpsi_dt = psi_dot.site(idx);
            for a in 0..3 {
                let dpsi = grads[a].site(idx);
                let beta_dpsi = matrices.beta.mul_vec(&dpsi);
                convection[idx][a] = -(e * hbar / m) * dot(&psi, &beta_dpsi).im;

                let beta_sigma = matrices.beta.mul_vec(&matrices.sigma[a].mul_vec(&psi));
                magnetization[idx][a] = dot(&psi, &beta_sigma).re;

                let beta_alpha_dot = matrices.beta.mul_vec(&matrices.alpha[a].mul_vec(&dpsi_dt));
                time_derivative[idx][a] =
                    -(e * hbar / (m * constants.c)) * dot(&psi, &beta_alpha_dot).im;
            }
        }
        let curl = spectral::curl_real(&pos.basis, &magnetization);
        let spin = curl
            .iter()
            .map(|v| {
                [
                    -(e * hbar / (2.0 * m)) * v[0],
                    -(e * hbar / (2.0 * m)) * v[1],
                    -(e * hbar / (2.0 * m)) * v[2],
                ]
            })
            .collect();
        Ok(GordonDecomposition {
            convection,
            spin,
            time_derivative,
        })
    }
}

/// Totals for a localized packet, taken about the charge centroid.
#[derive(Debug, Clone, Copy)]
pub struct SpinObservables {
    pub angular_momentum: [f64; 3],
    pub magnetic_moment: [f64; 3],
    pub centroid: [f64; 3],
    /// Peak boundary density over peak density; moments are unreliable
    /// when this is large.
    pub boundary_fraction: f64,
    pub boundary_ok: bool,
}

impl SpinorField {
    /// Total angular momentum `L = ∫ x×g` (g the symmetrized momentum
    /// density) and magnetic moment `m = (1/2c) ∫ x×J` about the charge
    /// centroid.
    pub fn spin_observables(
        &self,
        constants: &PhysicalConstants,
        boundary_threshold: f64,
    ) -> SpinObservables {
        let pos = self.to_rep(Representation::Position);
        let basis = pos.basis.clone();
        let sites = basis.site_count();
        let (rho, _) = pos.probability_densities(constants);
        let (_, current) = pos.charge_current(constants, SignConvention::Standard);
        let momentum = pos.momentum_density(constants);

        let total_rho: f64 = rho.iter().sum();
        let mut centroid = [0.0; 3];
        for idx in 0..sites {
            let x = basis.position(idx);
            for a in 0..3 {
                centroid[a] += x[a] * rho[idx] / total_rho;
            }
        }

        let n = basis.points_per_axis();
        let mut peak: f64 = 0.0;
        let mut boundary_peak: f64 = 0.0;
        for idx in 0..sites {
            peak = peak.max(rho[idx]);
            let coords = basis.coords_of(idx);
            if (0..basis.dim()).any(|a| coords[a] == 0 || coords[a] == n - 1) {
                boundary_peak = boundary_peak.max(rho[idx]);
            }
        }
        let boundary_fraction = if peak > 0.0 { boundary_peak / peak } else { 0.0 };

        let cell = basis.cell_volume();
        let cross = |r: [f64; 3], v: [f64; 3]| {
            [
                r[1] * v[2] - r[2] * v[1],
                r[2] * v[0] - r[0] * v[2],
                r[0] * v[1] - r[1] * v[0],
            ]
        };
        let mut angular_momentum = [0.0; 3];
        let mut magnetic_moment = [0.0; 3];
        for idx in 0..sites {
            let x = basis.position(idx);
            let r = [
                x[0] - centroid[0],
                x[1] - centroid[1],
                x[2] - centroid[2],
            ];
            let lg = cross(r, momentum[idx]);
            let mj = cross(r, current[idx]);
            for a in 0..3 {
                angular_momentum[a] += cell * lg[a];
                magnetic_moment[a] += cell * mj[a] / (2.0 * constants.c);
            }
        }
        SpinObservables {
            angular_momentum,
            magnetic_moment,
            centroid,
            boundary_fraction,
            boundary_ok: boundary_fraction <= boundary_threshold,
        }
    }
}

/// Charge-flow and energy-flow velocity fields.
#[derive(Debug, Clone)]
pub struct FlowVelocities {
    pub v_charge: Vec<[f64; 3]>,
    pub charge_mask: Vec<bool>,
    pub v_energy: Vec<[f64; 3]>,
    pub energy_mask: Vec<bool>,
    /// Unmasked sites where |v_energy| > c.
    pub superluminal_energy_sites: usize,
    /// max |v_charge| / c over unmasked sites.
    pub max_charge_speed: f64,
    /// max |v_energy| / c over unmasked sites.
    pub max_energy_speed: f64,
}

impl SpinorField {
    /// Charge velocity J/ρ and energy velocity c²g/u. Sites whose density
    /// falls below `floor_fraction` of the peak are masked.
    pub fn flow_velocities(
        &self,
        constants: &PhysicalConstants,
        floor_fraction: f64,
    ) -> FlowVelocities {
        let pos = self.to_rep(Representation::Position);
        let sites = pos.basis.site_count();
        let (rho, current) = pos.probability_densities(constants);
        let energy_density = pos.energy_density(constants);
        let momentum = pos.momentum_density(constants);

        let rho_floor = floor_fraction * rho.iter().cloned().fold(0.0_f64, f64::max);
        let u_floor =
            floor_fraction * energy_density.iter().map(|u| u.abs()).fold(0.0_f64, f64::max);

        let c = constants.c;
        let c2 = c * c;
        let mut v_charge = vec![[0.0; 3]; sites];
        let mut v_energy = vec![[0.0; 3]; sites];
        let mut charge_mask = vec![false; sites];
        let mut energy_mask = vec![false; sites];
        let mut superluminal = 0;
        let mut max_vc: f64 = 0.0;
        let mut max_ve: f64 = 0.0;
        for idx in 0..sites {
            if rho[idx] > rho_floor && rho_floor > 0.0 {
                charge_mask[idx] = true;
                let mut s2 = 0.0;
                for a in 0..3 {
                    v_charge[idx][a] = current[idx][a] / rho[idx];
                    s2 += v_charge[idx][a] * v_charge[idx][a];
                }
                max_vc = max_vc.max(s2.sqrt() / c);
            }
            if energy_density[idx].abs() > u_floor && u_floor > 0.0 {
                energy_mask[idx] = true;
                let mut s2 = 0.0;
                for a in 0..3 {
                    v_energy[idx][a] = c2 * momentum[idx][a] / energy_density[idx];
                    s2 += v_energy[idx][a] * v_energy[idx][a];
                }
                let speed = s2.sqrt() / c;
                max_ve = max_ve.max(speed);
                if speed > 1.0 + 1e-9 {
                    superluminal += 1;
                }
            }
        }
        FlowVelocities {
            v_charge,
            charge_mask,
            v_energy,
            energy_mask,
            superluminal_energy_sites: superluminal,
            max_charge_speed: max_vc,
            max_energy_speed: max_ve,
        }
    }

    /// Unit-norm, purely positive-frequency Gaussian packet: mode weights
    /// `exp(−σ²|k−p₀/ħ|²)` on the u(k, spin) spinors, centered at `center`.
    /// The density |ψ|² then has per-axis standard deviation σ in the wide
    /// limit.
    pub fn gaussian_packet(
        basis: &ModeBasis,
        constants: &PhysicalConstants,
        center: [f64; 3],
        sigma: f64,
        momentum: [f64; 3],
        spin: Spin,
    ) -> Result<Self> {
        if !(sigma > 2.0 * basis.spacing()) {
            return Err(Error::InvalidParameter(format!(
                "packet width {sigma} is under-resolved by lattice spacing {}",
                basis.spacing()
            )));
        }
        if 8.0 * sigma > basis.extent() {
            return Err(Error::InvalidParameter(format!(
                "packet width {sigma} does not fit inside box extent {}",
                basis.extent()
            )));
        }
        let k0 = [
            momentum[0] / constants.hbar,
            momentum[1] / constants.hbar,
            momentum[2] / constants.hbar,
        ];
        let mut field = Self::zero(basis.clone(), Representation::Mode);
        let sites = basis.site_count();
        for idx in 0..sites {
            let k = basis.wavevector(idx);
            let dk2 = (0..3).map(|a| (k[a] - k0[a]) * (k[a] - k0[a])).sum::<f64>();
            let w = (-sigma * sigma * dk2).exp();
            if w < 1e-300 {
                continue;
            }
            let phase = -(k[0] * center[0] + k[1] * center[1] + k[2] * center[2]);
            let coeff = Complex64::from_polar(w, phase);
            let spinors = plane_wave_spinors(k, constants);
            let u = match spin {
                Spin::Up => &spinors[0],
                Spin::Down => &spinors[1],
            };
            let mut amp = [Complex64::default(); 4];
            for c in 0..4 {
                amp[c] = coeff * u.amplitude[c];
            }
            field.set_site(idx, amp);
        }
        Ok(field.normalized())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn basis_1d() -> ModeBasis {
        ModeBasis::build(1, 16.0, 32).unwrap()
    }

    #[test]
    fn split_reconstructs_and_is_orthogonal() {
        let constants = PhysicalConstants::default();
        let basis = basis_1d();
        let mut rng = StdRng::seed_from_u64(42);
        let field = SpinorField::random_band_limited(&basis, &mut rng, 0.8);
        let (plus, minus) = field.split_frequencies(&constants);
        let sum = plus.add(&minus);
        let mut diff = 0.0;
        for c in 0..4 {
            for (a, b) in sum.component(c).iter().zip(field.component(c)) {
                diff += (a - b).norm_sqr();
            }
        }
        assert!(diff.sqrt() < 1e-12, "ψ₊ + ψ₋ = ψ");
        assert!(plus.inner(&minus).norm() < 1e-12, "⟨ψ₊, ψ₋⟩ = 0");
        // Pythagoras under orthogonal projection.
        let total = plus.norm_squared() + minus.norm_squared();
        assert!((total - field.norm_squared()).abs() < 1e-12);
    }

    #[test]
    fn split_of_single_u_mode_is_trivial() {
        let constants = PhysicalConstants::default();
        let basis = basis_1d();
        let mut field = SpinorField::zero(basis.clone(), Representation::Mode);
        let idx = 20;
        let k = basis.wavevector(idx);
        let u = plane_wave_spinors(k, &constants)[0];
        field.set_site(idx, u.amplitude);
        let (plus, minus) = field.split_frequencies(&constants);
        assert!((plus.norm_squared() - 1.0).abs() < 1e-12);
        assert!(minus.norm_squared() < 1e-24);
    }

    #[test]
    fn evolution_is_identity_at_t0_and_phase_on_eigenmode() {
        let constants = PhysicalConstants::default();
        let basis = basis_1d();
        let mut field = SpinorField::zero(basis.clone(), Representation::Mode);
        let idx = 21;
        let k = basis.wavevector(idx);
        let u = plane_wave_spinors(k, &constants)[0];
        field.set_site(idx, u.amplitude);

        let same = field.evolve_free(0.0, &constants);
        assert!((same.inner(&field) - Complex64::new(1.0, 0.0)).norm() < 1e-12);

        // Half-period phase rotation: t = π ħ / E flips the sign.
        let e = constants.mode_energy(k);
        let flipped = field.evolve_free(std::f64::consts::PI * constants.hbar / e, &constants);
        assert!((flipped.inner(&field) - Complex64::new(-1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn evolution_is_unitary_on_random_fields() {
        let constants = PhysicalConstants::default();
        let basis = basis_1d();
        let mut rng = StdRng::seed_from_u64(3);
        for trial in 0..20 {
            let field = SpinorField::random_band_limited(&basis, &mut rng, 1.0);
            let t = 0.7 + 0.1 * trial as f64;
            let evolved = field.evolve_free(t, &constants);
            let drift = (evolved.norm_squared() - field.norm_squared()).abs();
            assert!(drift < 1e-12, "norm drift {drift}");
        }
    }

    #[test]
    fn rest_frame_density_examples() {
        let constants = PhysicalConstants::default();
        let basis = basis_1d();
        // Uniform rest-frame u(0,↑) field: ρ uniform, J = 0.
        let mut field = SpinorField::zero(basis.clone(), Representation::Mode);
        let idx = basis.zero_index();
        field.set_site(idx, plane_wave_spinors([0.0; 3], &constants)[0].amplitude);
        let (rho, j) = field.probability_densities(&constants);
        let first = rho[0];
        for (r, jj) in rho.iter().zip(&j) {
            assert!((r - first).abs() < 1e-12 * first.max(1.0));
            assert!(jj[0].abs() + jj[1].abs() + jj[2].abs() < 1e-12);
        }
    }

    #[test]
    fn probability_density_nonnegative_and_current_bounded() {
        let constants = PhysicalConstants::default();
        let basis = basis_1d();
        let mut rng = StdRng::seed_from_u64(9);
        for _ in 0..50 {
            let field = SpinorField::random_band_limited(&basis, &mut rng, 1.0);
            let (rho, j) = field.probability_densities(&constants);
            for (r, jj) in rho.iter().zip(&j) {
                assert!(*r >= 0.0);
                let speed = (jj[0] * jj[0] + jj[1] * jj[1] + jj[2] * jj[2]).sqrt();
                assert!(speed <= constants.c * r * (1.0 + 1e-10));
            }
        }
    }

    #[test]
    fn charge_conventions() {
        let constants = PhysicalConstants::default();
        let basis = basis_1d();
        let mut rng = StdRng::seed_from_u64(5);
        let field = SpinorField::random_band_limited(&basis, &mut rng, 1.0);
        let (rho_p, _) = field.probability_densities(&constants);
        let (rho_q, _) = field.charge_current(&constants, SignConvention::Standard);
        for (p, q) in rho_p.iter().zip(&rho_q) {
            assert_eq!(*q, -constants.e * p);
        }
        // Normalized packet integrates to −e.
        let total = basis.integrate(&rho_q);
        assert!((total + constants.e).abs() < 1e-12);

        // Pure v-mode carries +e under the flipped convention.
        let mut vfield = SpinorField::zero(basis.clone(), Representation::Mode);
        let idx = 19;
        let v = plane_wave_spinors(basis.wavevector(idx), &constants)[3];
        vfield.set_site(idx, v.amplitude);
        let (rho_flip, _) = vfield.charge_current(&constants, SignConvention::PositronFlipped);
        let total = basis.integrate(&rho_flip);
        assert!((total - constants.e).abs() < 1e-12);
        assert!(rho_flip.iter().all(|r| *r >= 0.0));
    }

    #[test]
    fn energy_conventions_on_eigenmodes() {
        let constants = PhysicalConstants::default();
        let basis = basis_1d();
        let idx = 22;
        let k = basis.wavevector(idx);
        let e = constants.mode_energy(k);
        let spinors = plane_wave_spinors(k, &constants);

        let mut ufield = SpinorField::zero(basis.clone(), Representation::Mode);
        ufield.set_site(idx, spinors[0].amplitude);
        assert!((ufield.energy(&constants, SignConvention::Standard) - e).abs() < 1e-12);

        let mut vfield = SpinorField::zero(basis.clone(), Representation::Mode);
        vfield.set_site(idx, spinors[2].amplitude);
        assert!((vfield.energy(&constants, SignConvention::Standard) + e).abs() < 1e-12);
        assert!((vfield.energy(&constants, SignConvention::PositronFlipped) - e).abs() < 1e-12);

        // Mixed field: branch-wise sum.
        let mixed = ufield.add(&vfield);
        let expect = 0.0; // +E − E
        assert!((mixed.energy(&constants, SignConvention::Standard) - expect).abs() < 1e-12);
        assert!(
            (mixed.energy(&constants, SignConvention::PositronFlipped) - 2.0 * e).abs() < 1e-12
        );
    }

    #[test]
    fn charge_conservation_under_evolution() {
        let constants = PhysicalConstants::default();
        let basis = basis_1d();
        let mut rng = StdRng::seed_from_u64(17);
        let field = SpinorField::random_band_limited(&basis, &mut rng, 0.9);
        let (rho0, _) = field.charge_current(&constants, SignConvention::Standard);
        let q0 = basis.integrate(&rho0);
        let dt = 1e-4;
        let (rho1, _) = field
            .evolve_free(dt, &constants)
            .charge_current(&constants, SignConvention::Standard);
        let q1 = basis.integrate(&rho1);
        assert!(((q1 - q0) / dt).abs() < 1e-8, "d/dt ∫ρ_q = 0");
    }

    #[test]
    fn gordon_closure_on_random_band_limited_field() {
        let constants = PhysicalConstants::default();
        let basis = ModeBasis::build(3, 8.0, 8).unwrap();
        let mut rng = StdRng::seed_from_u64(23);
        let field = SpinorField::random_band_limited(&basis, &mut rng, 0.5);
        let gordon = field.gordon_decompose(&constants, TOP_MODE_THRESHOLD).unwrap();
        let (_, j) = field.charge_current(&constants, SignConvention::Standard);
        let residual = gordon.closure_residual(&j);
        assert!(residual < 1e-10, "closure residual {residual}");
    }

    #[test]
    fn gordon_spin_term_vanishes_for_uniform_field() {
        let constants = PhysicalConstants::default();
        let basis = ModeBasis::build(3, 8.0, 8).unwrap();
        let mut field = SpinorField::zero(basis.clone(), Representation::Mode);
        field.set_site(
            basis.zero_index(),
            plane_wave_spinors([0.0; 3], &constants)[0].amplitude,
        );
        let gordon = field.gordon_decompose(&constants, TOP_MODE_THRESHOLD).unwrap();
        let spin_norm: f64 = gordon
            .spin
            .iter()
            .map(|v| v[0].abs() + v[1].abs() + v[2].abs())
            .sum();
        assert!(spin_norm < 1e-12, "curl of a constant is zero");
    }

    #[test]
    fn gordon_rejects_nyquist_occupied_fields() {
        let constants = PhysicalConstants::default();
        let basis = ModeBasis::build(3, 8.0, 8).unwrap();
        let mut field = SpinorField::zero(basis.clone(), Representation::Mode);
        // Put norm on the unpaired Nyquist shell (coordinate index 0).
        field.set_site(
            basis.index_of([0, 4, 4]),
            [Complex64::new(1.0, 0.0); 4],
        );
        assert!(matches!(
            field.gordon_decompose(&constants, TOP_MODE_THRESHOLD),
            Err(Error::TopModeOccupied { .. })
        ));
    }

    #[test]
    fn plane_wave_charge_velocity_is_group_velocity() {
        let constants = PhysicalConstants::default();
        let basis = basis_1d();
        let mut field = SpinorField::zero(basis.clone(), Representation::Mode);
        let idx = 24;
        let k = basis.wavevector(idx);
        field.set_site(idx, plane_wave_spinors(k, &constants)[0].amplitude);
        let flows = field.flow_velocities(&constants, DENSITY_FLOOR_FRACTION);
        let expect = constants.hbar * k[0] * constants.c * constants.c / constants.mode_energy(k);
        for (idx, masked) in flows.charge_mask.iter().enumerate() {
            if *masked {
                assert!((flows.v_charge[idx][0] - expect).abs() < 1e-10);
            }
        }
        assert!(flows.max_charge_speed < 1.0);
    }

    #[test]
    fn gaussian_packet_is_positive_frequency_and_normalized() {
        let constants = PhysicalConstants::default();
        let basis = ModeBasis::build(1, 64.0, 64).unwrap();
        let packet = SpinorField::gaussian_packet(
            &basis,
            &constants,
            [0.0; 3],
            5.0,
            [0.0; 3],
            Spin::Up,
        )
        .unwrap();
        assert!((packet.norm_squared() - 1.0).abs() < 1e-12);
        let (_, minus) = packet.split_frequencies(&constants);
        assert!(minus.norm_squared() < 1e-24);
    }

    #[test]
    fn gaussian_packet_rejects_unresolvable_width() {
        let constants = PhysicalConstants::default();
        let basis = ModeBasis::build(1, 16.0, 16).unwrap();
        assert!(SpinorField::gaussian_packet(
            &basis,
            &constants,
            [0.0; 3],
            1.5,
            [0.0; 3],
            Spin::Up
        )
        .is_err());
        assert!(SpinorField::gaussian_packet(
            &basis,
            &constants,
            [0.0; 3],
            4.0,
            [0.0; 3],
            Spin::Up
        )
        .is_err());
    }
}
