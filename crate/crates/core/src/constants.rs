use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Physical constants carried through every formula.
///
/// Natural units (ħ = c = m = e = 1) are the default, but the Gaussian-cgs
/// factors (1/8π in the field energy, 4π in the Coulomb kernel, ...) are kept
/// explicit so the formulas read the same in any unit system.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct PhysicalConstants {
    pub hbar: f64,
    pub c: f64,
    /// Electron mass.
    pub m: f64,
    /// Elementary charge, as a positive number; the electron carries -e.
    pub e: f64,
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self {
            hbar: 1.0,
            c: 1.0,
            m: 1.0,
            e: 1.0,
        }
    }
}

impl PhysicalConstants {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("hbar", self.hbar),
            ("c", self.c),
            ("m", self.m),
            ("e", self.e),
        ] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::InvalidParameter(format!(
                    "constant {name} must be strictly positive, got {v}"
                )));
            }
        }
        Ok(())
    }

    /// Rest energy mc².
    pub fn rest_energy(&self) -> f64 {
        self.m * self.c * self.c
    }

    /// Relativistic energy E(k) = sqrt(m²c⁴ + ħ²|k|²c²) of a massive mode.
    pub fn mode_energy(&self, k: [f64; 3]) -> f64 {
        let k2 = k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
        let mc2 = self.rest_energy();
        (mc2 * mc2 + self.hbar * self.hbar * k2 * self.c * self.c).sqrt()
    }

    /// Compton wavelength ħ/mc, the natural width scale for packets.
    pub fn compton(&self) -> f64 {
        self.hbar / (self.m * self.c)
    }
}
