use fta_core::estermann::select_direction;
use fta_core::solver::{descent_step, find_all_roots};
use fta_core::{ComplexPoly, DescentConfig, GaussianRational, SolveError};
use num_complex::Complex64;
use proptest::prelude::*;

fn coeff() -> impl Strategy<Value = Complex64> {
    (-4.0f64..4.0, -4.0f64..4.0).prop_map(|(re, im)| Complex64::new(re, im))
}

fn poly() -> impl Strategy<Value = ComplexPoly> {
    (prop::collection::vec(coeff(), 1..=8), coeff())
        .prop_filter("nonzero leading coefficient", |(_, lead)| {
            lead.norm() > 1e-3
        })
        .prop_map(|(mut c, lead)| {
            c.push(lead);
            ComplexPoly::new(c)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn roots_lie_in_enclosure_disc(p in poly()) {
        let radius = p.root_bound().unwrap();
        let roots = find_all_roots(&p, &DescentConfig::default(), false).unwrap();
        prop_assert_eq!(roots.len(), p.degree().unwrap());
        for r in &roots {
            prop_assert!(r.root.norm() < radius);
            prop_assert!(r.multiplicity_estimate >= 1);
        }
    }

    #[test]
    fn accepted_step_decreases_modulus(p in poly(), z in coeff()) {
        let cfg = DescentConfig::default();
        match descent_step(&p, z, None, &cfg) {
            Ok(step) => {
                let before = p.eval(&z).unwrap().norm_sqr();
                let after = p.eval(&step.z).unwrap().norm_sqr();
                prop_assert!(after < before);
                prop_assert_eq!(step.record.modulus_sq, after);
            }
            Err(SolveError::AtRoot) => prop_assert_eq!(p.eval(&z).unwrap().norm(), 0.0),
            Err(SolveError::StepFailure { .. }) => {}
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn every_nonzero_alpha_has_a_descent_direction(
        a in -50i64..50, b in 1i64..50, c in -50i64..50, d in 1i64..50, k in 1u64..40,
    ) {
        prop_assume!(a != 0 || c != 0);
        let alpha = GaussianRational::from_ratios(a, b, c, d);
        let sel = select_direction(&alpha, k).unwrap();
        prop_assert!(sel.is_some());
    }

    #[test]
    fn solving_is_deterministic(p in poly()) {
        let cfg = DescentConfig::default();
        let a = find_all_roots(&p, &cfg, true).unwrap();
        let b = find_all_roots(&p, &cfg, true).unwrap();
        prop_assert_eq!(a, b);
    }
}
