use painleve_core::{rf, var_index, RatFunc};
use painleve_picard_fuchs::{herfurtner, pullback, quartic_connection, rationalize, FuchsianSystem};
use painleve_scalar::*;
use proptest::prelude::*;

fn family_two() -> FuchsianSystem {
    let family = rationalize(&herfurtner(2).unwrap()).unwrap();
    pullback(&quartic_connection(&rf("a"), &rf("c")), &family).unwrap()
}

fn row_three_theta() -> [RatFunc; 4] {
    [rf("c-1/2"), rf("a+c-1"), rf("c-1/2"), rf("a+c-1")]
}

#[test]
fn family_two_has_one_simple_apparent_point() {
    let sys = family_two();
    let ode = system_to_scalar(&sys, Coordinate::First).unwrap();
    let points = apparent_singularities(&ode, sys.singularities()).unwrap();
    assert_eq!(points, vec![ApparentPoint { location: rf("1"), order: 1 }]);
}

#[test]
fn family_two_accessory_data() {
    let sys = family_two();
    let sl = sl_form(&system_to_scalar(&sys, Coordinate::First).unwrap());
    let points = [rf("-b"), rf("0"), rf("-1/b")];
    let theta = row_three_theta();
    let data = accessory_parameters(&sl, &points, &rf("1"), ThetaChoice::Reference(&theta)).unwrap();
    assert_eq!(data.theta, theta);
    assert_eq!(data.nu, rf("-3/(4*b)"));

    let t3 = &points[2];
    let normalized = [&points[0] / t3, rf("0"), rf("1")];
    let lambda = &data.lambda / t3;
    assert_eq!(normalized[0], rf("b^2"));
    assert_eq!(lambda, rf("-b"));
    let mu = momentum_from_accessory(&data.nu, &data.theta, &lambda, &normalized).unwrap();
    assert_eq!(mu, rf("(-a-2*c+2)/(2*b)"));
}

#[test]
fn family_two_scheme_obeys_fuchs_relation() {
    let sys = family_two();
    let ode = system_to_scalar(&sys, Coordinate::First).unwrap();
    let scheme = riemann_scheme(&ode).unwrap();
    assert_eq!(scheme.finite_points(), 4);
    assert!(scheme.satisfies_fuchs_relation());
    assert_eq!(scheme.exponents_at(&rf("1")).unwrap(), &[rf("0"), rf("2")]);
}

#[test]
fn sl_potential_matches_gauge_transform() {
    let ode = system_to_scalar(&family_two(), Coordinate::First).unwrap();
    let sl = sl_form(&ode);
    let z = var_index("z");
    let g = &ode.p1 * &rf("-1/2");
    let rhs = (&(&(&g.derivative(z) + &(&g * &g)) + &(&ode.p1 * &g)) + &ode.p2).neg();
    assert_eq!(sl.p, rhs);
}

#[test]
fn second_coordinate_has_irrational_apparent_points() {
    let sys = family_two();
    let second = system_to_scalar(&sys, Coordinate::Second).unwrap();
    assert!(matches!(
        apparent_singularities(&second, sys.singularities()),
        Err(Error::IrrationalZero(_))
    ));
    assert!(matches!(riemann_scheme(&second), Err(Error::NotFuchsian { .. })));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn template_parameters_round_trip(
        n in prop::array::uniform4(-9i64..9),
        l in -20i64..20,
        nu in -20i64..20,
        lam in 2i64..9,
    ) {
        let points = [rf("t"), rf("0"), rf("1")];
        let theta = [
            rf(&format!("{}/2", n[0].abs())),
            rf(&format!("a+{}", n[1].abs())),
            rf(&format!("{}/3", n[2].abs())),
            rf(&format!("c+{}", n[3].abs())),
        ];
        let lambda = rf(&format!("{lam}*t"));
        let p = template_potential(&points, &theta, &rf(&l.to_string()), &rf(&nu.to_string()), &lambda);
        let sl = SlForm { z: var_index("z"), p, singularities: vec![] };
        let data = accessory_parameters(&sl, &points, &lambda, ThetaChoice::Canonical).unwrap();
        prop_assert_eq!(data.theta, theta);
        prop_assert_eq!(data.l, rf(&l.to_string()));
        prop_assert_eq!(data.nu, rf(&nu.to_string()));
    }

    #[test]
    fn momentum_inverts_to_nu(nu in -30i64..30, th in prop::array::uniform3(-5i64..5)) {
        let points = [rf("t"), rf("0"), rf("1")];
        let theta = [rf(&th[0].to_string()), rf(&th[1].to_string()), rf(&th[2].to_string()), rf("a")];
        let lambda = rf("b");
        let nu = rf(&nu.to_string());
        let mu = momentum_from_accessory(&nu, &theta, &lambda, &points).unwrap();
        let mut back = mu.clone();
        for (t, p) in theta.iter().zip(&points) {
            back = &back + &(&(&rf("1") - t) / &(&(&lambda - p) * &rf("2")));
        }
        prop_assert_eq!(back, nu);
    }
}

#[test]
fn swapped_system_first_coordinate_is_second_coordinate() {
    let sys = family_two();
    let t = painleve_core::Matrix::parse(&[&["0", "1"], &["1", "0"]]).unwrap();
    let swapped = &(&t * sys.matrix()) * &t;
    let swapped = FuchsianSystem::new(swapped, "z", sys.singularities().to_vec()).unwrap();
    let a = system_to_scalar(&swapped, Coordinate::First).unwrap();
    let b = system_to_scalar(&sys, Coordinate::Second).unwrap();
    assert_eq!((a.p1, a.p2, a.off_diagonal), (b.p1, b.p2, b.off_diagonal));
}
