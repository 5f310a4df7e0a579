//! The verification suite: each check compares computed objects with the
//! printed data and reports every comparison it made.

use painleve_convolution::{mc_parameters, middle_convolution, residue_spectra};
use painleve_core::{rf, Matrix, RatFunc};
use painleve_scalar::{accessory_parameters, sl_form, ThetaChoice};
use painleve_schlesinger::{
    build_from_pvi, diagonalize_infinity, extract_pvi, invert_coordinate, scalar_twist, PVIData, SchlesingerSystem,
};

use crate::error::Result;
use crate::fixtures;
use crate::hamiltonian::verify_row;
use crate::linear::linear_ode;
use crate::pipeline::{convolve_pvi, derive_row};
use crate::registry::{solution_row, Table1Row};
use crate::relation::{check_relation, quartic_relation, reducibility_limit};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// One entry per comparison, with its outcome.
    pub items: Vec<(String, bool)>,
    pub notes: Vec<String>,
}

impl Check {
    fn run(name: &str, f: impl FnOnce(&mut Items) -> Result<()>) -> Check {
        let mut items = Items::default();
        let outcome = f(&mut items);
        let mut passed = items.list.iter().all(|(_, ok)| *ok) && !items.list.is_empty();
        if let Err(e) = outcome {
            items.list.push((format!("error: {e}"), false));
            passed = false;
        }
        Check { name: name.to_string(), passed, items: items.list, notes: items.notes }
    }

    pub fn failures(&self) -> Vec<&str> {
        self.items.iter().filter(|(_, ok)| !ok).map(|(n, _)| n.as_str()).collect()
    }
}

#[derive(Default)]
struct Items {
    list: Vec<(String, bool)>,
    notes: Vec<String>,
}

impl Items {
    fn eq<T: PartialEq>(&mut self, name: impl Into<String>, a: &T, b: &T) {
        self.list.push((name.into(), a == b));
    }

    fn holds(&mut self, name: impl Into<String>, ok: bool) {
        self.list.push((name.into(), ok));
    }

    fn note(&mut self, text: String) {
        self.notes.push(text);
    }
}

fn data(row: &Table1Row) -> Result<PVIData> {
    Ok(PVIData::new(row.theta.clone(), row.lambda.clone(), row.mu.clone(), row.t.clone())?)
}

fn dihedral() -> Result<(PVIData, SchlesingerSystem)> {
    let three = data(&solution_row(3)?)?;
    let e = [rf("-c"), rf("c+a-2")];
    Ok((three.clone(), convolve_pvi(&three, &rf("-c"), &e)?))
}

fn row_four_convolved() -> Result<(PVIData, SchlesingerSystem)> {
    let four = data(&solution_row(4)?)?;
    let e = [rf("-(3*a-2)"), rf("-(a-3/2)")];
    Ok((four.clone(), convolve_pvi(&four, &rf("-(3*a-2)"), &e)?))
}

/// Row 3 from curve family 2: theta, t, lambda, mu and nu.
pub fn row_three_pipeline() -> Check {
    Check::run("row-3 pipeline", |it| {
        let d = derive_row(3)?;
        let row = solution_row(3)?;
        it.eq("theta", &d.data.theta, &row.theta);
        it.eq("t", &d.data.t, &rf("b^2"));
        it.eq("lambda", &d.data.lambda, &rf("-b"));
        it.eq("mu", &d.data.mu, &rf("(-a-2*c+2)/(2*b)"));
        it.eq("nu", &d.data.nu, &rf("-3/(4*b)"));
        Ok(())
    })
}

/// Rows 3 to 6 from their curve families.
pub fn pipeline_rows() -> Check {
    Check::run("pipeline rows 3-6", |it| {
        for id in 3..=6 {
            let d = derive_row(id)?;
            let row = solution_row(id)?;
            it.eq(format!("row {id} theta"), &d.data.theta, &row.theta);
            it.eq(format!("row {id} t"), &d.data.t, &row.t);
            it.eq(format!("row {id} lambda"), &d.data.lambda, &row.lambda);
            it.eq(format!("row {id} mu"), &d.data.mu, &row.mu);
        }
        Ok(())
    })
}

/// Printed residues of the row-3 and row-4 systems and of the convolved
/// row-4 system.
pub fn schlesinger_fixtures() -> Check {
    Check::run("Schlesinger fixtures", |it| {
        let three = derive_row(3)?.schlesinger;
        compare_residues(it, "row 3", three.residues(), &fixtures::row_three_residues());
        let four = derive_row(4)?.schlesinger;
        compare_residues(it, "row 4", four.residues(), &fixtures::row_four_residues());

        let (_, conv) = row_four_convolved()?;
        let printed = fixtures::row_four_convolved_residues();
        let gauge = printed[0].get(0, 1).checked_div(conv.residue(0).get(0, 1))?;
        it.holds("convolved gauge is constant", !gauge.contains_var(painleve_core::var_index("z")));
        it.note(format!("convolved row 4 matches after the diagonal gauge diag(1, {gauge})"));
        let gauged = conv.diagonal_gauge(&gauge)?;
        compare_residues(it, "convolved row 4", gauged.residues(), &printed);
        Ok(())
    })
}

fn compare_residues(it: &mut Items, label: &str, got: &[Matrix], printed: &[Matrix]) {
    for (k, (g, p)) in got.iter().zip(printed).enumerate() {
        for i in 0..2 {
            for j in 0..2 {
                it.eq(format!("{label} q{}_{}{}", k + 1, i + 1, j + 1), g.get(i, j), p.get(i, j));
            }
        }
    }
}

/// The dihedral convolution of row 3 and its twist.
pub fn dihedral_system() -> Check {
    Check::run("dihedral convolution", |it| {
        let (_, s) = dihedral()?;
        for (k, (g, p)) in s.residues().iter().zip(fixtures::dihedral_residues().iter()).enumerate() {
            it.eq(format!("A{}", k + 1), g, p);
        }
        let a = s.matrix();
        let printed = fixtures::dihedral_matrix();
        for i in 0..2 {
            for j in 0..2 {
                it.eq(format!("A{}{}", i + 1, j + 1), a.get(i, j), printed.get(i, j));
            }
        }
        let d = extract_pvi(&s)?;
        it.eq("theta", &d.theta, &["-1/2", "a-1", "-1/2", "-(a+2*c-3)"].map(rf));
        it.eq("lambda_1", &d.lambda, &rf("(-a+1)/(a+2*c-3)*b"));
        it.eq("lambda_2", &d.lambda_second, &Some(rf("(-a+1)/(a+2*c-1)*b")));
        let twisted = scalar_twist(&s, &[(Some(rf("b^2")), rf("1/2")), (Some(rf("1")), rf("1/2"))])?;
        let t = extract_pvi(&diagonalize_infinity(&twisted, None)?)?;
        it.eq("mu_1 after twist", &t.mu, &rf("(-a-2*c+3)/(2*b)"));
        Ok(())
    })
}

/// Row 2 equals the twisted dihedral solution.
pub fn row_two_from_row_three() -> Check {
    Check::run("row 2 from row 3", |it| {
        let (three, s) = dihedral()?;
        let row = solution_row(2)?;
        let link = row.convolution.clone().expect("row 2 is a convolution");
        let (theta, _) = mc_parameters(&three.theta, &three.alpha, &link.mu_c);
        let twisted = scalar_twist(&s, &[(Some(rf("b^2")), rf("1/2")), (Some(rf("1")), rf("1/2"))])?;
        let d = extract_pvi(&diagonalize_infinity(&twisted, None)?)?;
        let shifted = [&theta[0] + &rf("1"), theta[1].clone(), &theta[2] + &rf("1"), theta[3].clone()];
        it.eq("theta (law plus twist)", &shifted, &row.theta);
        it.eq("theta (extracted)", &d.theta, &row.theta);
        it.eq("lambda", &d.lambda, &row.lambda);
        it.eq("mu", &d.mu, &row.mu);
        it.eq("t", &d.t, &row.t);
        Ok(())
    })
}

/// `theta_4^2 lambda_1^2 = t theta_2^2`, `(2-theta_4)^2 lambda_2^2 = t theta_2^2`
/// and the quartic on the convolved row 4 and on row 5.
pub fn relations() -> Check {
    Check::run("lambda-t relations", |it| {
        let d = extract_pvi(&dihedral()?.1)?;
        let (th2, th4) = (&d.theta[1], &d.theta[3]);
        let square = |x: &RatFunc| x * x;
        let rhs = &d.t * &square(th2);
        it.eq("theta_4^2 lambda_1^2 = t theta_2^2", &(&square(th4) * &square(&d.lambda)), &rhs);
        if let Some(l2) = &d.lambda_second {
            it.eq("(2-theta_4)^2 lambda_2^2 = t theta_2^2", &(&square(&(&rf("2") - th4)) * &square(l2)), &rhs);
        } else {
            it.holds("second apparent point exists", false);
        }
        let conv = extract_pvi(&row_four_convolved()?.1)?;
        it.holds("quartic on convolved row 4", check_relation(&conv.lambda, &conv.t, &quartic_relation())?);
        let five = solution_row(5)?;
        it.holds("quartic on row 5", check_relation(&five.lambda, &five.t, &quartic_relation())?);
        Ok(())
    })
}

/// The vector-field residual of one registry row.
pub fn residual(id: u8) -> Check {
    Check::run(&format!("row {id} residual"), |it| {
        let row = solution_row(id)?;
        let v = verify_row(&row)?;
        it.holds(format!("row {id} r_lambda = 0"), v.residual.r_lambda.is_zero());
        it.holds(format!("row {id} r_mu = 0"), v.residual.r_mu.is_zero());
        if let Some(signs) = v.alternate_signs {
            it.note(format!("row {id} vanishes with theta signs {signs:?}"));
        }
        if let Some(printed) = &row.printed_mu {
            let p = verify_row(&Table1Row { mu: printed.clone(), printed_mu: None, ..row.clone() })?;
            it.note(format!(
                "row {id} uses the corrected momentum {}; the printed {} has {} residual",
                row.mu,
                printed,
                if p.residual.is_zero() { "zero" } else { "nonzero" }
            ));
        }
        Ok(())
    })
}

/// Parameter law and quotient dimensions for both rank-two convolutions.
pub fn parameter_law() -> Check {
    Check::run("parameter law and dimensions", |it| {
        for (label, (src, out), mu_c) in [
            ("row 3", dihedral()?, "-c"),
            ("row 4", row_four_convolved()?, "-(3*a-2)"),
        ] {
            let mu_c = rf(mu_c);
            let d = extract_pvi(&out)?;
            let (theta, alpha) = mc_parameters(&src.theta, &src.alpha, &mu_c);
            it.eq(format!("{label} theta"), &d.theta, &theta);
            it.eq(format!("{label} alpha"), &d.alpha, &alpha);
            let s = build_from_pvi(&src)?;
            let r = middle_convolution(s.points(), s.residues(), &mu_c)?;
            it.eq(format!("{label} dim k + dim l"), &(r.dim_k + r.dim_l), &4);
            it.eq(format!("{label} quotient dimension"), &r.dimension(), &2);
        }
        Ok(())
    })
}

/// The reducible limit `b = 1` and the three-dimensional convolutions.
pub fn degenerations() -> Check {
    Check::run("reducibility and 3-dimensional spectra", |it| {
        let (_, s) = dihedral()?;
        it.eq("dihedral at b = 1", &reducibility_limit(&s, &rf("1"))?, &fixtures::dihedral_limit());
        for id in [5u8, 6] {
            let src = build_from_pvi(&data(&solution_row(id)?)?)?;
            let twist = fixtures::inversion_twist(id).expect("rows 5 and 6");
            let t = scalar_twist(&invert_coordinate(&src)?, &[(Some(rf("0")), twist)])?;
            let mut ms = t.residues().to_vec();
            ms.push(t.residue_at_infinity());
            it.holds(format!("row {id} eigenvalue pairs"), residue_spectra(&ms, &fixtures::inverted_spectra(id).expect("5, 6"))?);
            let r = middle_convolution(t.points(), t.residues(), &rf("-(a-1)"))?;
            it.eq(format!("row {id} convolution dimension"), &r.dimension(), &3);
            let mut ms = r.residues.clone();
            ms.push(r.residue_at_infinity());
            let expected = fixtures::three_dimensional_spectra(id).expect("5, 6");
            it.holds(format!("row {id} eigenvalue triples"), residue_spectra(&ms, &expected)?);
        }
        Ok(())
    })
}

/// The linear equation of each row returns its `theta` and `nu`.
pub fn linear_round_trip() -> Check {
    Check::run("linear equation round trip", |it| {
        for id in 2..=6 {
            let d = data(&solution_row(id)?)?;
            let sl = sl_form(&linear_ode(&d)?);
            let points = [d.t.clone(), rf("0"), rf("1")];
            let acc = accessory_parameters(&sl, &points, &d.lambda, ThetaChoice::Reference(&d.theta))?;
            it.eq(format!("row {id} theta"), &acc.theta, &d.theta);
            it.eq(format!("row {id} nu"), &acc.nu, &d.nu);
        }
        Ok(())
    })
}

/// Everything run by `verify --all`, in a fixed order.
pub fn all_checks() -> Vec<fn() -> Check> {
    vec![
        row_three_pipeline,
        pipeline_rows,
        schlesinger_fixtures,
        dihedral_system,
        row_two_from_row_three,
        relations,
        parameter_law,
        degenerations,
        linear_round_trip,
    ]
}
