use painleve_core::roots::sqrt;
use painleve_core::{partial_fractions, rf, Error as CoreError, RatFunc};

use crate::error::{Error, Result};
use crate::ode::SlForm;
use crate::util::limit_at_infinity;

/// How to fix the sign of each `theta_i`, which the potential determines
/// only through `theta_i^2`.
#[derive(Clone, Copy, Debug)]
pub enum ThetaChoice<'a> {
    /// Numerator with positive leading coefficient.
    Canonical,
    /// Match the given values up to sign; anything else is an error.
    Reference(&'a [RatFunc; 4]),
}

/// Local data of `p = sum a_i/(z-t_i)^2 + a_4/(z(z-t_3)) + ...` with
/// `t_2 = 0` and an apparent point `lambda` with exponents `-1/2, 3/2`.
#[derive(Clone, Debug, PartialEq)]
pub struct AccessoryData {
    pub points: [RatFunc; 3],
    pub lambda: RatFunc,
    pub theta: [RatFunc; 4],
    pub l: RatFunc,
    pub nu: RatFunc,
}

fn mismatch(msg: impl Into<String>) -> Error {
    Error::TemplateMismatch(msg.into())
}

/// The template potential in `z` built from its parameters:
/// `sum a_i/(z-t_i)^2 + a_4/(z(z-t3)) + t1(t1-t3)/t3 L/(z(z-t1)(z-t3))
///  + 3/4/(z-lambda)^2 - lambda(lambda-t3)/t3 nu/(z(z-t3)(z-lambda))`
/// with `a_i = (theta_i^2-1)/4` and `a_4 = -(theta_1^2+theta_2^2+theta_3^2-theta_4^2-1)/4 - 1/2`.
pub fn template_potential(
    points: &[RatFunc; 3],
    theta: &[RatFunc; 4],
    l: &RatFunc,
    nu: &RatFunc,
    lambda: &RatFunc,
) -> RatFunc {
    let z = rf("z");
    let quarter = rf("1/4");
    let one = rf("1");
    let [t1, t2, t3] = points;
    let sq: Vec<RatFunc> = theta.iter().map(|t| t * t).collect();
    let mut p = rf("0");
    for (t, s) in [t1, t2, t3].into_iter().zip(&sq) {
        let ai = &(s - &one) * &quarter;
        let d = &z - t;
        p = &p + &(&ai / &(&d * &d));
    }
    let a4 = &(&(&(&(&sq[0] + &sq[1]) + &sq[2]) - &sq[3]) - &one).neg() * &quarter;
    let a4 = &a4 - &rf("1/2");
    let z_zt3 = &z * &(&z - t3);
    p = &p + &(&a4 / &z_zt3);
    p = &p + &(&(&(t1 * &(t1 - t3)) / t3) * &(l / &(&z_zt3 * &(&z - t1))));
    let dl = &z - lambda;
    p = &p + &(&rf("3/4") / &(&dl * &dl));
    p = &p - &(&(&(lambda * &(lambda - t3)) / t3) * &(nu / &(&z_zt3 * &dl)));
    p
}

fn choose_sign(square: &RatFunc, index: usize, choice: ThetaChoice) -> Result<RatFunc> {
    let root = sqrt(square).ok_or_else(|| mismatch(format!("theta_{index}^2 = {square} is not a square")))?;
    match choice {
        ThetaChoice::Canonical => Ok(root),
        ThetaChoice::Reference(reference) => {
            let expected = &reference[index - 1];
            if &root == expected {
                Ok(root)
            } else if &root.neg() == expected {
                Ok(root.neg())
            } else {
                Err(Error::ThetaMismatch { index, found: root.to_string(), expected: expected.to_string() })
            }
        }
    }
}

/// Read `theta`, `L` and `nu` off an SL potential with singular points
/// `(t1, 0, t3)`, infinity, and the apparent point `lambda`:
/// `L = t3 Res_{t1} p` and `nu = -t3 Res_{lambda} p`. The potential must
/// equal the template rebuilt from these values.
pub fn accessory_parameters(
    sl: &SlForm,
    points: &[RatFunc; 3],
    lambda: &RatFunc,
    choice: ThetaChoice,
) -> Result<AccessoryData> {
    if !points[1].is_zero() {
        return Err(mismatch("the middle singular point must be 0"));
    }
    let z = sl.z;
    let all = [points[0].clone(), points[1].clone(), points[2].clone(), lambda.clone()];
    let pf = partial_fractions(&sl.p, z, &all).map_err(|e| match e {
        CoreError::UnaccountedPole(f) => mismatch(format!("extra pole at the zeros of {f}")),
        other => Error::Core(other),
    })?;
    if !pf.polynomial.is_zero() {
        return Err(mismatch("nonzero polynomial part"));
    }
    if pf.poles.iter().any(|t| t.order() > 2) {
        return Err(mismatch("pole of order above two"));
    }
    let at_lambda = &pf.poles[3];
    if at_lambda.coeffs.get(1) != Some(&rf("3/4")) {
        return Err(mismatch("apparent point does not have exponents -1/2, 3/2"));
    }
    let zero = rf("0");
    let mut theta = Vec::with_capacity(4);
    for (k, term) in pf.poles[..3].iter().enumerate() {
        let a = term.coeffs.get(1).unwrap_or(&zero);
        theta.push(choose_sign(&(&(&rf("4") * a) + &rf("1")), k + 1, choice)?);
    }
    let a_inf = limit_at_infinity(&sl.p, z, 2).ok_or_else(|| mismatch("p decays slower than 1/z^2"))?;
    theta.push(choose_sign(&(&(&rf("4") * &a_inf) + &rf("1")), 4, choice)?);
    let theta: [RatFunc; 4] = theta.try_into().expect("four exponents");
    let t3 = &points[2];
    let l = t3 * &pf.poles[0].residue();
    let nu = (t3 * &at_lambda.residue()).neg();
    if template_potential(points, &theta, &l, &nu, lambda) != sl.p {
        return Err(mismatch("residues are inconsistent with the behaviour at infinity"));
    }
    Ok(AccessoryData { points: points.clone(), lambda: lambda.clone(), theta, l, nu })
}

/// `mu = nu - (1/2) sum_i (1 - theta_i)/(lambda - t_i)`.
pub fn momentum_from_accessory(nu: &RatFunc, theta: &[RatFunc; 4], lambda: &RatFunc, points: &[RatFunc; 3]) -> Result<RatFunc> {
    let one = rf("1");
    let mut s = rf("0");
    for (th, t) in theta[..3].iter().zip(points) {
        s = &s + &(&one - th).checked_div(&(lambda - t))?;
    }
    Ok(nu - &(&s * &rf("1/2")))
}
