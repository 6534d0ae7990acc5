//! Spectral derivative helpers on lattice fields.
//!
//! Derivatives are exact for the trigonometric interpolant of lattice data,
//! which is what "band-limited" means on a periodic box.

use num_complex::Complex64;

use crate::basis::ModeBasis;

/// ∂_axis of a complex scalar component, position rep in and out.
pub fn derivative(basis: &ModeBasis, data: &[Complex64], axis: usize) -> Vec<Complex64> {
    let mut modes = data.to_vec();
    basis.to_mode(&mut modes);
    for (idx, v) in modes.iter_mut().enumerate() {
        let k = basis.wavevector(idx);
        *v *= Complex64::new(0.0, k[axis]);
    }
    basis.to_position(&mut modes);
    modes
}

/// Curl of a real 3-vector lattice field, computed in mode space.
pub fn curl_real(basis: &ModeBasis, field: &[[f64; 3]]) -> Vec<[f64; 3]> {
    let sites = basis.site_count();
    let mut comps: Vec<Vec<Complex64>> = (0..3)
        .map(|a| field.iter().map(|v| Complex64::new(v[a], 0.0)).collect())
        .collect();
    for c in comps.iter_mut() {
        basis.to_mode(c);
    }
    let mut out_modes: Vec<Vec<Complex64>> = vec![vec![Complex64::default(); sites]; 3];
    for idx in 0..sites {
        let k = basis.wavevector(idx);
        let v = [comps[0][idx], comps[1][idx], comps[2][idx]];
        // (ik) × v
        let ik = |a: usize| Complex64::new(0.0, k[a]);
        out_modes[0][idx] = ik(1) * v[2] - ik(2) * v[1];
        out_modes[1][idx] = ik(2) * v[0] - ik(0) * v[2];
        out_modes[2][idx] = ik(0) * v[1] - ik(1) * v[0];
    }
    for c in out_modes.iter_mut() {
        basis.to_position(c);
    }
    (0..sites)
        .map(|i| [out_modes[0][i].re, out_modes[1][i].re, out_modes[2][i].re])
        .collect()
}

/// L² norm of the divergence of a real 3-vector field, relative to the
/// field's own L² norm. Zero for transverse fields.
pub fn relative_divergence_norm(basis: &ModeBasis, field: &[[f64; 3]]) -> f64 {
    let mut comps: Vec<Vec<Complex64>> = (0..3)
        .map(|a| field.iter().map(|v| Complex64::new(v[a], 0.0)).collect())
        .collect();
    for c in comps.iter_mut() {
        basis.to_mode(c);
    }
    let mut div2 = 0.0;
    let mut norm2 = 0.0;
    for idx in 0..basis.site_count() {
        let k = basis.wavevector(idx);
        let mut d = Complex64::default();
        for a in 0..3 {
            d += Complex64::new(0.0, k[a]) * comps[a][idx];
            norm2 += comps[a][idx].norm_sqr() * (1.0 + k[a] * k[a]);
        }
        div2 += d.norm_sqr();
    }
    if norm2 == 0.0 {
        0.0
    } else {
        (div2 / norm2).sqrt()
    }
}
