use hartmann_core::susy::{
    annihilation_check, build_u, energy_internal, factorization_residual, ground_state_u,
    partner_intertwining_check, partner_potentials, radial_r, LadderOperator, Superpotential,
};
use hartmann_core::QuasiPolynomial;
use hartmann_oracles::{closed_form, expansion, quadrature};
use rand::{rngs::StdRng, Rng, SeedableRng};

fn gammas() -> [f64; 4] {
    [0.5, 1.0, 2.0, std::f64::consts::PI]
}

fn to_poly(c: &closed_form::ClosedForm) -> QuasiPolynomial {
    QuasiPolynomial::from_dense(c.alpha, c.coeffs.clone(), c.kappa).unwrap()
}

#[test]
fn riccati_identities_on_random_parameters() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..100 {
        let l: f64 = rng.gen_range(0.0..10.0);
        let g: f64 = rng.gen_range(0.1..=5.0);
        let w = Superpotential::new(l, g).unwrap();
        assert!(w.riccati_deviation() <= 1e-12);
        let (v1, v2) = partner_potentials(&w).unwrap();
        assert!((v2.centrifugal - v1.centrifugal - 2.0 * (l + 1.0)).abs() <= 1e-12 * v2.centrifugal);
        // pointwise: ½(W² ∓ W') against the potentials
        for r in [0.3, 1.0, 4.0] {
            let wr = w.value(r).unwrap();
            let dw = (l + 1.0) / (r * r);
            assert!((0.5 * (wr * wr - dw) - v1.value(r)).abs() <= 1e-10 * (1.0 + v1.value(r).abs()));
            assert!((0.5 * (wr * wr + dw) - v2.value(r)).abs() <= 1e-10 * (1.0 + v2.value(r).abs()));
        }
    }
}

#[test]
fn annihilation_over_parameter_sweep() {
    let mut rng = StdRng::seed_from_u64(5);
    for _ in 0..100 {
        let l: f64 = rng.gen_range(0.0..10.0);
        let g: f64 = rng.gen_range(0.1..=5.0);
        assert!(annihilation_check(l, g).unwrap() <= 1e-12, "L={l} gamma={g}");
    }
}

#[test]
fn factorization_against_symbolic_expansion() {
    let cases = [(2.0, 1.0, 0.0, 1.0), (2.3, 0.7, 1.3, 2.0)];
    for (alpha, kappa, l, g) in cases {
        let f = QuasiPolynomial::monomial(alpha, 1.0, kappa).unwrap();
        let (base, coeffs) = expansion::factorized_hamiltonian(alpha, kappa, &[1.0], l, g);
        let oracle = QuasiPolynomial::from_dense(base, coeffs, kappa).unwrap();
        let lower = LadderOperator::lowering(l, g).unwrap();
        let ours = lower.adjoint().apply(&lower.apply(&f));
        assert!(ours.relative_distance(&oracle) <= 1e-12);
        assert!(factorization_residual(&f, l, g).unwrap() <= 1e-10);
    }
}

#[test]
fn eigen_residuals_for_chain_states() {
    for g in gammas() {
        for n in 1..=6u32 {
            let nf = f64::from(n);
            for l in (n.saturating_sub(6)..n).rev() {
                let lf = f64::from(l);
                let u = build_u(nf, lf, g).unwrap();
                let hu = u.apply_radial_hamiltonian(lf, g);
                let r = hu.relative_distance(&u.scale(energy_internal(nf, g)));
                assert!(r <= 1e-9, "N={n} L={l} gamma={g}: {r:e}");
            }
        }
    }
}

#[test]
fn eigen_residuals_for_irrational_l() {
    for g in gammas() {
        for m_abs in [2f64.sqrt(), 5f64.sqrt(), 0.37] {
            for j in 0..5 {
                for np in 0..(6 - j) {
                    let l = m_abs + f64::from(j);
                    let n = l + 1.0 + f64::from(np);
                    let u = build_u(n, l, g).unwrap();
                    let hu = u.apply_radial_hamiltonian(l, g);
                    assert!(hu.relative_distance(&u.scale(energy_internal(n, g))) <= 1e-9);
                }
            }
        }
    }
}

#[test]
fn energy_is_shared_across_hierarchy() {
    for g in gammas() {
        let n = 4.5;
        let energies: Vec<f64> = [3.5, 2.5, 1.5, 0.5]
            .iter()
            .map(|&l| {
                let u = build_u(n, l, g).unwrap();
                let hu = u.apply_radial_hamiltonian(l, g);
                u.inner_product(&hu).unwrap()
            })
            .collect();
        for e in &energies {
            assert!((e - energy_internal(n, g)).abs() <= 1e-10 * e.abs());
        }
    }
}

#[test]
fn orthonormality_at_fixed_l() {
    for g in [0.5, 1.0, 2.0] {
        for l in [0.0, 1.0, 1.7] {
            let states: Vec<_> = (0..5)
                .map(|np| build_u(l + 1.0 + f64::from(np), l, g).unwrap())
                .collect();
            for (i, a) in states.iter().enumerate() {
                for (j, b) in states.iter().enumerate() {
                    let expect = if i == j { 1.0 } else { 0.0 };
                    assert!((a.inner_product(b).unwrap() - expect).abs() <= 1e-10);
                }
            }
        }
    }
}

#[test]
fn node_counts() {
    for g in [0.5, 1.0, 2.0] {
        for l in [0.0, 0.5, 2.236_067_977_499_79] {
            for np in 0..6u32 {
                let u = build_u(l + 1.0 + f64::from(np), l, g).unwrap();
                let roots = u.positive_roots();
                assert_eq!(roots.len() as u32, np, "L={l} n'={np}");
                for r in roots {
                    let h = 1e-7 * r;
                    let left = u.evaluate(r - h).unwrap();
                    let right = u.evaluate(r + h).unwrap();
                    assert!(left * right < 0.0);
                }
            }
        }
    }
}

#[test]
fn closed_forms_match_chain() {
    for m_abs in [0.5, 1.0, 2.3, 5.0] {
        for g in [0.5, 1.0, 2.0] {
            let cases = [
                (closed_form::r_ground(m_abs, g), m_abs + 1.0, m_abs),
                (closed_form::r_second_nodeless(m_abs, g), m_abs + 2.0, m_abs + 1.0),
                (closed_form::r_first_excited(m_abs, g), m_abs + 2.0, m_abs),
            ];
            for (form, n, l) in cases {
                let r = radial_r(&build_u(n, l, g).unwrap());
                let d = r.relative_distance_up_to_sign(&to_poly(&form));
                assert!(d <= 1e-12, "|M|={m_abs} gamma={g} N={n} L={l}: {d:e}");
            }
        }
    }
}

#[test]
fn intertwining_for_excited_states() {
    for g in [0.5, 1.0, 2.0] {
        for l in [0.0, 1.3] {
            for np in 1..4 {
                let n = l + 1.0 + f64::from(np);
                let u = build_u(n, l, g).unwrap();
                let kappa = g / (l + 1.0);
                let eps = energy_internal(n, g) + 0.5 * kappa * kappa;
                assert!(partner_intertwining_check(&u, l, g, eps).unwrap() <= 1e-8);
            }
        }
    }
}

#[test]
fn ground_state_norm_by_quadrature() {
    for (l, g) in [(1.5, 2.0), (1.0, 1.0), (0.0, 0.5)] {
        let u = ground_state_u(l, g).unwrap();
        let q = quadrature::integrate_from_origin(|r| u.evaluate(r).unwrap().powi(2), 80.0 / u.kappa(), 1e-13);
        assert!((q - 1.0).abs() < 1e-10);
    }
}
