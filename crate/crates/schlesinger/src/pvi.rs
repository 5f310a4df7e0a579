use painleve_core::{rf, Matrix, RatFunc};

use crate::error::{Error, Result};
use crate::system::SchlesingerSystem;

/// Parameters and solution values of Painleve VI attached to a normalized
/// system with singular points `(t, 0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PVIData {
    pub theta: [RatFunc; 4],
    pub lambda: RatFunc,
    pub mu: RatFunc,
    pub t: RatFunc,
    /// Accessory parameter of the SL form of the first coordinate.
    pub nu: RatFunc,
    pub alpha: RatFunc,
    /// Apparent singularity of the second coordinate, when it is rational.
    pub lambda_second: Option<RatFunc>,
}

impl PVIData {
    pub fn new(theta: [RatFunc; 4], lambda: RatFunc, mu: RatFunc, t: RatFunc) -> Result<PVIData> {
        let points = [t.clone(), rf("0"), rf("1")];
        let one = rf("1");
        let mut shift = rf("0");
        for (th, p) in theta[..3].iter().zip(&points) {
            shift = &shift + &(&one - th).checked_div(&(&lambda - p))?;
        }
        let nu = &mu + &(&shift * &rf("1/2"));
        let alpha = alpha_of(&theta);
        Ok(PVIData { theta, lambda, mu, t, nu, alpha, lambda_second: None })
    }

    /// `((theta_1 + theta_2 + theta_3 - 1)^2 - theta_4^2)/4`.
    pub fn kappa(&self) -> RatFunc {
        let s = &(&(&(&self.theta[0] + &self.theta[1]) + &self.theta[2]) - &rf("1"));
        &(&(s * s) - &(&self.theta[3] * &self.theta[3])) * &rf("1/4")
    }
}

fn alpha_of(theta: &[RatFunc; 4]) -> RatFunc {
    let s = theta.iter().fold(rf("0"), |acc, x| &acc + x);
    &(&s - &rf("1")) * &rf("-1/2")
}

fn weights(t: &RatFunc, lambda: &RatFunc) -> Result<[RatFunc; 3]> {
    let one = rf("1");
    Ok([
        (lambda - t).checked_div(&(t * &(t - &one)))?,
        lambda.checked_div(t)?,
        (lambda - &one).checked_div(&(&one - t))?,
    ])
}

fn check_configuration(t: &RatFunc, lambda: &RatFunc) -> Result<()> {
    for p in [rf("0"), rf("1")] {
        if t == &p {
            return Err(Error::Degenerate(format!("t = {p}")));
        }
    }
    for p in [rf("0"), rf("1"), t.clone()] {
        if lambda == &p {
            return Err(Error::ApparentCollision(p.to_string()));
        }
    }
    Ok(())
}

/// The normalized system with residue at infinity `diag(alpha, alpha +
/// theta_4 - 1)` whose first coordinate has its apparent singularity at
/// `lambda` with momentum `mu`.
pub fn build_from_pvi(d: &PVIData) -> Result<SchlesingerSystem> {
    let [th1, th2, th3, th4] = &d.theta;
    if th4.is_one() {
        return Err(Error::ThetaFourIsOne);
    }
    let (t, lambda) = (&d.t, &d.lambda);
    check_configuration(t, lambda)?;
    let one = rf("1");
    let alpha = alpha_of(&d.theta);
    let m = weights(t, lambda)?;
    let shifted = &d.mu + &alpha.checked_div(lambda)?;
    let w = [
        &(lambda * &(lambda - &one)) * &shifted,
        &(&(&(lambda - t) * &(lambda - &one)) * &shifted) - &(t * &alpha).checked_div(lambda)?,
        &(lambda * &(lambda - t)) * &shifted,
    ];
    let theta = [th1, th2, th3];
    let mut total = rf("0");
    for i in 0..3 {
        total = &total + &(&w[i] * &(&(&m[i] * &w[i]) - theta[i]));
    }
    let big_w = total.checked_div(&(th4 - &one))?;
    let mut residues = Vec::with_capacity(3);
    for i in 0..3 {
        let diff = &w[i] - &big_w;
        let md = &m[i] * &diff;
        let lower = (&diff * &(&(&m[i] * &(&big_w - &w[i])) + theta[i])).neg();
        residues.push(Matrix::from_rows(vec![
            vec![md.clone(), m[i].neg()],
            vec![lower, theta[i] - &md],
        ])?);
    }
    SchlesingerSystem::new([t.clone(), rf("0"), rf("1")], residues.try_into().expect("three residues"))
}

/// Inverse of [`build_from_pvi`] up to a constant diagonal gauge: returns the
/// data and the factor `k` with `s = build_from_pvi(data)` conjugated by
/// `diag(1, k)`.
pub fn extract_pvi_with_gauge(s: &SchlesingerSystem) -> Result<(PVIData, RatFunc)> {
    let t = s.t().ok_or_else(|| Error::NotNormalized("points are not (t, 0, 1)".into()))?.clone();
    let r = s.residue_at_infinity();
    if !r.is_diagonal() {
        return Err(Error::NotNormalized("residue at infinity is not diagonal".into()));
    }
    let alpha = r.get(0, 0).clone();
    let theta4 = &(r.get(1, 1) - &alpha) + &rf("1");
    if theta4.is_one() {
        return Err(Error::ThetaFourIsOne);
    }
    let [th1, th2, th3] = s.traces();
    let theta = [th1, th2, th3, theta4];
    let lambda = s.apparent_point(1)?.ok_or(Error::NoApparentPoint)?;
    check_configuration(&t, &lambda)?;
    let m = weights(&t, &lambda)?;
    let k = s.residue(0).get(0, 1).checked_div(&m[0].neg())?;
    let gauged = s.diagonal_gauge(&k.inv()?)?;
    let d1 = gauged.residue(0).get(0, 0).checked_div(&m[0])?;
    let d2 = gauged.residue(1).get(0, 0).checked_div(&m[1])?;
    // W_1 - W_2 = t (lambda - 1)(mu + alpha/lambda) + t alpha/lambda
    let t_alpha = (&t * &alpha).checked_div(&lambda)?;
    let shifted = (&(&d1 - &d2) - &t_alpha).checked_div(&(&t * &(&lambda - &rf("1"))))?;
    let mu = &shifted - &alpha.checked_div(&lambda)?;
    let mut data = PVIData::new(theta, lambda, mu, t)?;
    data.lambda_second = s.apparent_point(2)?;
    let rebuilt = build_from_pvi(&data)?;
    if rebuilt != gauged {
        return Err(Error::Inconsistent("residues are not of the Painleve VI form".into()));
    }
    Ok((data, k))
}

/// Painleve VI data of a normalized system.
pub fn extract_pvi(s: &SchlesingerSystem) -> Result<PVIData> {
    extract_pvi_with_gauge(s).map(|(d, _)| d)
}
