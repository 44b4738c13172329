use hartmann_core::numeric::{
    discretize, eigenvector, integrate_ground_state_ode, lowest_eigenvalues, sturm_count,
    verify_isospectrality, RadialGrid,
};
use hartmann_core::tolerances::fd_eigenvalue_tolerance;
use hartmann_core::{build_u, energy_internal, ground_state_u, HartmannParams};
use proptest::prelude::*;

fn fd_error(l: f64, gamma: f64, n: usize) -> f64 {
    let grid = RadialGrid::for_level(l + 1.0, gamma, n).unwrap();
    let t = discretize(l, gamma, &grid).unwrap();
    let e = lowest_eigenvalues(&t, 1, 1e-13).unwrap()[0];
    (e - energy_internal(l + 1.0, gamma)).abs()
}

#[test]
fn second_order_grid_convergence() {
    for l in [0.0, 0.5, 1.0] {
        let coarse = fd_error(l, 1.0, 1000);
        let fine = fd_error(l, 1.0, 2001);
        let factor = coarse / fine;
        assert!((3.5..=4.5).contains(&factor), "L={l}: factor {factor}");
    }
}

#[test]
fn hydrogen_levels_on_fine_grid() {
    let grid = RadialGrid::new(60.0, 6000).unwrap();
    let t = discretize(0.0, 1.0, &grid).unwrap();
    let ev = lowest_eigenvalues(&t, 3, 1e-12).unwrap();
    for (e, expect) in ev.iter().zip([-0.5, -0.125, -1.0 / 18.0]) {
        assert!((e - expect).abs() <= 2e-5, "{e} vs {expect}");
    }
    let t = discretize(0.5, 1.0, &grid).unwrap();
    let e = lowest_eigenvalues(&t, 1, 1e-12).unwrap()[0];
    assert!((e + 1.0 / 4.5).abs() <= 1e-4);
}

#[test]
fn eigenvectors_match_analytic_states() {
    let grid = RadialGrid::new(60.0, 6000).unwrap();
    let t = discretize(0.0, 1.0, &grid).unwrap();
    let ev = lowest_eigenvalues(&t, 2, 1e-12).unwrap();
    let v0 = eigenvector(&t, ev[0]).unwrap();
    let v1 = eigenvector(&t, ev[1]).unwrap();
    let u0 = build_u(1.0, 0.0, 1.0).unwrap();
    let err = grid
        .nodes()
        .zip(&v0)
        .map(|(r, v)| (u0.evaluate(r).unwrap() - v).abs())
        .fold(0.0, f64::max);
    assert!(err <= 1e-3, "{err}");
    let dot: f64 = grid.spacing() * v0.iter().zip(&v1).map(|(a, b)| a * b).sum::<f64>();
    assert!(dot.abs() <= 1e-6);
    for (v, e) in [(&v0, ev[0]), (&v1, ev[1])] {
        let tv = t.apply(v);
        let res: f64 = tv.iter().zip(v.iter()).map(|(a, b)| (a - e * b).powi(2)).sum::<f64>().sqrt();
        let norm: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        assert!(res <= 1e-6 * norm);
    }
}

#[test]
fn fd_spectrum_against_hartmann_labels() {
    let p = HartmannParams::new(1.0, 1.0).unwrap();
    let gamma = p.gamma();
    for m in [0, 1] {
        for j in 0..3 {
            let l = p.m_abs(m) + f64::from(j);
            let grid = RadialGrid::for_level(l + 1.0, gamma, 6000).unwrap();
            let t = discretize(l, gamma, &grid).unwrap();
            let e = lowest_eigenvalues(&t, 1, 1e-12).unwrap()[0];
            let exact = energy_internal(l + 1.0, gamma);
            assert!((e - exact).abs() <= fd_eigenvalue_tolerance(grid.spacing(), exact));
        }
    }
}

#[test]
fn isospectrality_for_irrational_l() {
    let grid = RadialGrid::for_level(2.7 + 4.0, 1.3, 6000).unwrap();
    let rep = verify_isospectrality(2.7, 1.3, &grid, 4).unwrap();
    assert!(rep.passed, "{rep:?}");
    assert_eq!(rep.levels.len(), 3);
}

#[test]
fn ode_route_for_non_integer_l() {
    let grid = RadialGrid::new(40.0, 3999).unwrap();
    let psi = integrate_ground_state_ode(1.5, 2.0, &grid).unwrap();
    let u = ground_state_u(1.5, 2.0).unwrap();
    let err = grid
        .nodes()
        .zip(&psi)
        .map(|(r, p)| (u.evaluate(r).unwrap() - p).abs())
        .fold(0.0, f64::max);
    assert!(err <= 1e-6, "{err:e}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn sturm_count_is_monotone(
        diag in prop::collection::vec(-5.0f64..5.0, 20),
        off in prop::collection::vec(-2.0f64..2.0, 19),
        mut shifts in prop::collection::vec(-15.0f64..15.0, 8),
    ) {
        let t = hartmann_core::TridiagonalOperator::new(diag, off).unwrap();
        shifts.sort_by(f64::total_cmp);
        let counts: Vec<usize> = shifts.iter().map(|s| sturm_count(&t, *s)).collect();
        for w in counts.windows(2) {
            prop_assert!(w[0] <= w[1]);
        }
        prop_assert_eq!(sturm_count(&t, f64::INFINITY), 20);
        prop_assert_eq!(sturm_count(&t, 1e300), 20);
    }

    #[test]
    fn eigenvector_residuals(
        diag in prop::collection::vec(-5.0f64..5.0, 24),
        off in prop::collection::vec(0.2f64..2.0, 23),
    ) {
        let t = hartmann_core::TridiagonalOperator::new(diag, off).unwrap();
        let ev = lowest_eigenvalues(&t, 3, 1e-13).unwrap();
        for e in ev {
            let v = eigenvector(&t, e).unwrap();
            let tv = t.apply(&v);
            let res: f64 = tv.iter().zip(&v).map(|(a, b)| (a - e * b).powi(2)).sum::<f64>().sqrt();
            let norm: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            prop_assert!(res <= 1e-6 * norm);
        }
    }
}
