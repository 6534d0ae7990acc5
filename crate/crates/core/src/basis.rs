//! Periodic lattice, discrete Fourier modes, and the transform contract.
//!
//! Every field representation in the crate shares this structure: a cubic
//! (or 1D) box of extent `L` with `N` points per axis, wavevectors
//! `k_n = 2π n / L` for `n ∈ {−N/2, …, N/2 − 1}` per axis, and a unitary
//! discrete transform between position and mode space.
//!
//! The transform convention carries the physical measure: for a field `f`
//! on the lattice, `Σ_x |f(x)|² · h^d  =  Σ_k |f̃(k)|²` exactly (`h` the
//! lattice spacing, `d` the dimension), so mode amplitudes are normalized
//! the way continuum formulas expect and Parseval holds with no extra
//! weights.

use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use crate::constants::PhysicalConstants;
use crate::error::{Error, Result};

/// Periodic lattice plus its discrete wavevector set.
///
/// Immutable after construction; transforms are pure and the FFT plans are
/// shared behind `Arc`, so the basis is cheap to clone and safe to share
/// across threads.
#[derive(Clone)]
pub struct ModeBasis {
    dim: usize,
    extent: f64,
    points: usize,
    spacing: f64,
    fwd: Arc<dyn Fft<f64>>,
    inv: Arc<dyn Fft<f64>>,
}

impl std::fmt::Debug for ModeBasis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ModeBasis")
            .field("dim", &self.dim)
            .field("extent", &self.extent)
            .field("points_per_axis", &self.points)
            .field("spacing", &self.spacing)
            .finish()
    }
}

impl PartialEq for ModeBasis {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.extent == other.extent && self.points == other.points
    }
}

impl ModeBasis {
    /// Build a basis with `dim` ∈ {1, 3}, box extent `extent` per axis and
    /// `points` lattice points per axis (even, at least 4).
    pub fn build(dim: usize, extent: f64, points: usize) -> Result<Self> {
        if dim != 1 && dim != 3 {
            return Err(Error::InvalidParameter(format!(
                "dim must be 1 or 3, got {dim}"
            )));
        }
        if points < 4 || points % 2 != 0 {
            return Err(Error::InvalidParameter(format!(
                "points_per_axis must be even and at least 4, got {points}"
            )));
        }
        if !(extent > 0.0) || !extent.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "extent must be positive, got {extent}"
            )));
        }
        let mut planner = FftPlanner::new();
        let fwd = planner.plan_fft_forward(points);
        let inv = planner.plan_fft_inverse(points);
        Ok(Self {
            dim,
            extent,
            points,
            spacing: extent / points as f64,
            fwd,
            inv,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn extent(&self) -> f64 {
        self.extent
    }

    pub fn points_per_axis(&self) -> usize {
        self.points
    }

    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    /// Total number of lattice sites, `N^dim`.
    pub fn site_count(&self) -> usize {
        self.points.pow(self.dim as u32)
    }

    /// Box volume `L^dim`.
    pub fn volume(&self) -> f64 {
        self.extent.powi(self.dim as i32)
    }

    /// Volume element `h^dim`.
    pub fn cell_volume(&self) -> f64 {
        self.spacing.powi(self.dim as i32)
    }

    /// Signed mode number for a storage index along one axis:
    /// `n = i − N/2 ∈ {−N/2, …, N/2 − 1}`.
    fn signed(&self, i: usize) -> i64 {
        i as i64 - (self.points / 2) as i64
    }

    /// Decompose a flat (row-major) index into per-axis indices. Unused
    /// axes of a 1D basis read as the central (n = 0) index.
    pub fn coords_of(&self, idx: usize) -> [usize; 3] {
        let n = self.points;
        match self.dim {
            1 => [idx, n / 2, n / 2],
            _ => [idx / (n * n), (idx / n) % n, idx % n],
        }
    }

    pub fn index_of(&self, coords: [usize; 3]) -> usize {
        let n = self.points;
        match self.dim {
            1 => coords[0],
            _ => (coords[0] * n + coords[1]) * n + coords[2],
        }
    }

    /// Wavevector of a flat mode index, canonical signed (row-major) order.
    pub fn wavevector(&self, idx: usize) -> [f64; 3] {
        let c = self.coords_of(idx);
        let scale = 2.0 * PI / self.extent;
        let mut k = [0.0; 3];
        for a in 0..self.dim {
            k[a] = scale * self.signed(c[a]) as f64;
        }
        k
    }

    /// Position of a flat site index, with the box spanning `[−L/2, L/2)`.
    pub fn position(&self, idx: usize) -> [f64; 3] {
        let c = self.coords_of(idx);
        let mut x = [0.0; 3];
        for a in 0..self.dim {
            x[a] = self.spacing * self.signed(c[a]) as f64;
        }
        x
    }

    /// All wavevectors in canonical order.
    pub fn wavevectors(&self) -> Vec<[f64; 3]> {
        (0..self.site_count()).map(|i| self.wavevector(i)).collect()
    }

    pub fn k_squared(&self, idx: usize) -> f64 {
        let k = self.wavevector(idx);
        k[0] * k[0] + k[1] * k[1] + k[2] * k[2]
    }

    /// Index of the mode at `−k`. The unpaired Nyquist mode `n = −N/2`
    /// aliases `+N/2` on the lattice and maps to itself, which makes the
    /// map a bijection of the mode set.
    pub fn negation_index(&self, idx: usize) -> usize {
        let c = self.coords_of(idx);
        let mut nc = [self.points / 2; 3];
        for a in 0..self.dim {
            nc[a] = (self.points - c[a]) % self.points;
        }
        self.index_of(nc)
    }

    /// Flat index of the k = 0 mode (also the x = 0 site).
    pub fn zero_index(&self) -> usize {
        let mid = self.points / 2;
        self.index_of([mid; 3])
    }

    /// Physical integral of a scalar lattice function: `h^d Σ_x f(x)`.
    pub fn integrate(&self, f: &[f64]) -> f64 {
        debug_assert_eq!(f.len(), self.site_count());
        self.cell_volume() * f.iter().sum::<f64>()
    }

    /// In-place position → mode transform of one field component.
    pub fn to_mode(&self, data: &mut [Complex64]) {
        self.transform(data, true);
    }

    /// In-place mode → position transform of one field component.
    pub fn to_position(&self, data: &mut [Complex64]) {
        self.transform(data, false);
    }

    fn transform(&self, data: &mut [Complex64], forward: bool) {
        assert_eq!(
            data.len(),
            self.site_count(),
            "component length must equal the site count"
        );
        let n = self.points;
        // Per-axis scale: unitary 1/sqrt(N), the Nyquist-offset phase
        // (-1)^{N/2} of the signed-order convention, and sqrt(h) of the
        // physical measure.
        let nyq = if (n / 2) % 2 == 0 { 1.0 } else { -1.0 };
        let scale = if forward {
            nyq * self.spacing.sqrt() / (n as f64).sqrt()
        } else {
            nyq / ((n as f64).sqrt() * self.spacing.sqrt())
        };
        let fft = if forward { &self.fwd } else { &self.inv };
        let mut buf = vec![Complex64::default(); n];
        let mut scratch = vec![Complex64::default(); fft.get_inplace_scratch_len()];

        match self.dim {
            1 => axis_pass(data, 0, 1, n, fft, &mut buf, &mut scratch, scale),
            _ => {
                let n2 = n * n;
                for axis in 0..3 {
                    let stride = match axis {
                        0 => n2,
                        1 => n,
                        _ => 1,
                    };
                    // Enumerate the start offset of every line along `axis`.
                    for u in 0..n {
                        for v in 0..n {
                            let base = match axis {
                                0 => u * n + v,
                                1 => u * n2 + v,
                                _ => u * n2 + v * n,
                            };
                            axis_pass(data, base, stride, n, fft, &mut buf, &mut scratch, scale);
                        }
                    }
                }
            }
        }
    }
}

/// One strided FFT line with the signed-order phase factors applied:
/// `f̃(n) = scale · (−1)^n · DFT[(−1)^m f(m)](n)`.
#[allow(clippy::too_many_arguments)]
fn axis_pass(
    data: &mut [Complex64],
    base: usize,
    stride: usize,
    n: usize,
    fft: &Arc<dyn Fft<f64>>,
    buf: &mut [Complex64],
    scratch: &mut [Complex64],
    scale: f64,
) {
    for (m, slot) in buf.iter_mut().enumerate() {
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        *slot = data[base + m * stride] * sign;
    }
    fft.process_with_scratch(buf, scratch);
    for (m, slot) in buf.iter().enumerate() {
        let sign = if m % 2 == 0 { scale } else { -scale };
        data[base + m * stride] = slot * sign;
    }
}

/// Angular frequency of a massive mode: `ω = sqrt(m²c⁴ + ħ²|k|²c²) / ħ`,
/// always at least `mc²/ħ`.
pub fn dispersion_massive(k: [f64; 3], constants: &PhysicalConstants) -> f64 {
    constants.mode_energy(k) / constants.hbar
}

/// Angular frequency of a photon mode: `ω = c|k|`.
pub fn dispersion_photon(k: [f64; 3], constants: &PhysicalConstants) -> f64 {
    constants.c * (k[0] * k[0] + k[1] * k[1] + k[2] * k[2]).sqrt()
}
