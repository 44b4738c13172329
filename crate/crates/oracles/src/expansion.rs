//! Term-by-term action of radial operators on `Σ c_k r^(α+k) e^(-κr)`,
//! using the closed second-derivative formula
//! `(r^β e^{-κr})'' = (β(β−1) r^{β−2} − 2κβ r^{β−1} + κ² r^β) e^{-κr}`.

/// Dense coefficients on the ladder starting at `alpha - 2`.
pub fn radial_hamiltonian(alpha: f64, kappa: f64, coeffs: &[f64], l: f64, gamma: f64) -> (f64, Vec<f64>) {
    let mut out = vec![0.0; coeffs.len() + 2];
    for (k, &c) in coeffs.iter().enumerate() {
        let beta = alpha + k as f64;
        // index k ↔ r^{β−2}, k+1 ↔ r^{β−1}, k+2 ↔ r^β
        out[k] += -0.5 * c * beta * (beta - 1.0) + 0.5 * l * (l + 1.0) * c;
        out[k + 1] += c * kappa * beta - gamma * c;
        out[k + 2] += -0.5 * c * kappa * kappa;
    }
    (alpha - 2.0, out)
}

/// `A⁺_L A⁻_L` expanded in closed form on the ladder starting at `alpha - 2`:
/// `½(−d/dr + W)(d/dr + W) = ½(−d²/dr² + W² − W')`.
pub fn factorized_hamiltonian(alpha: f64, kappa: f64, coeffs: &[f64], l: f64, gamma: f64) -> (f64, Vec<f64>) {
    let a = -(l + 1.0);
    let b = gamma / (l + 1.0);
    let mut out = vec![0.0; coeffs.len() + 2];
    for (k, &c) in coeffs.iter().enumerate() {
        let beta = alpha + k as f64;
        // −f'' part
        out[k] += -c * beta * (beta - 1.0);
        out[k + 1] += 2.0 * c * kappa * beta;
        out[k + 2] += -c * kappa * kappa;
        // (W² − W') f with W² = a²/r² + 2ab/r + b², W' = −a/r²
        out[k] += c * (a * a + a);
        out[k + 1] += c * 2.0 * a * b;
        out[k + 2] += c * b * b;
    }
    for v in out.iter_mut() {
        *v *= 0.5;
    }
    (alpha - 2.0, out)
}
