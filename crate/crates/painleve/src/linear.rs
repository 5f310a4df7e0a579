use painleve_core::{rf, var_index};
use painleve_scalar::ScalarOde;
use painleve_schlesinger::PVIData;

use crate::error::{Error, Result};
use crate::hamiltonian::{hamiltonian, kappa};

/// `y'' + p_1 y' + p_2 y = 0` with
/// `p_1 = (1-theta_1)/(z-t) + (1-theta_2)/z + (1-theta_3)/(z-1) - 1/(z-lambda)` and
/// `p_2 = kappa/(z(z-1)) - t(t-1)K/(z(z-1)(z-t)) + lambda(lambda-1)mu/(z(z-1)(z-lambda))`.
pub fn linear_ode(d: &PVIData) -> Result<ScalarOde> {
    let (t, lambda, mu) = (&d.t, &d.lambda, &d.mu);
    for p in [rf("0"), rf("1"), t.clone()] {
        if lambda == &p {
            return Err(Error::Degenerate(format!("lambda = {p}")));
        }
    }
    let z = rf("z");
    let one = rf("1");
    let th = &d.theta;
    let p1 = &(&(&(&(&one - &th[0]) / &(&z - t)) + &(&(&one - &th[1]) / &z)) + &(&(&one - &th[2]) / &(&z - &one)))
        - &(&one / &(&z - lambda));
    let tk = &(t * &(t - &one)) * &hamiltonian(th).subs(&[("lambda", lambda), ("mu", mu), ("t", t)])?;
    let zz1 = &z * &(&z - &one);
    let p2 = &(&(&kappa(th) / &zz1) - &(&tk / &(&zz1 * &(&z - t))))
        + &(&(&(lambda * &(lambda - &one)) * mu) / &(&zz1 * &(&z - lambda)));
    Ok(ScalarOde {
        z: var_index("z"),
        p1,
        p2,
        singularities: vec![t.clone(), rf("0"), rf("1")],
        off_diagonal: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use painleve_core::pfrac::residue;

    #[test]
    fn residues_of_p1() {
        let d = PVIData::new([rf("0"), rf("0"), rf("0"), rf("0")], rf("2"), rf("0"), rf("3")).unwrap();
        let ode = linear_ode(&d).unwrap();
        let z = var_index("z");
        let res: Vec<_> = ["3", "0", "1", "2"].iter().map(|p| residue(&ode.p1, z, &rf(p)).unwrap()).collect();
        assert_eq!(res, vec![rf("1"), rf("1"), rf("1"), rf("-1")]);
    }
}
