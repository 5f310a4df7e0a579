use painleve_core::{rf, RatFunc};
use painleve_convolution::{mc_parameters, mc_to_schlesinger, middle_convolution};
use painleve_picard_fuchs::{
    cubic_connection, discriminant_roots, herfurtner, pullback, quartic_connection, rationalize, FuchsianSystem,
};
use painleve_scalar::{
    accessory_parameters, apparent_singularities, momentum_from_accessory, sl_form, system_to_scalar, AccessoryData,
    Coordinate, ThetaChoice,
};
use painleve_schlesinger::{build_from_pvi, PVIData, SchlesingerSystem};

use crate::error::{Error, Result};
use crate::registry::solution_row;

/// Every intermediate object of the derivation of a PVI solution from a
/// curve family.
#[derive(Clone, Debug)]
pub struct Derivation {
    pub family: u8,
    pub system: FuchsianSystem,
    /// Finite singular points `(t1, 0, t3)` before normalization.
    pub points: [RatFunc; 3],
    pub accessory: AccessoryData,
    pub data: PVIData,
    pub schlesinger: SchlesingerSystem,
}

/// Pullback of the hypergeometric connection along curve family `family`:
/// the quartic connection for family 2, the cubic one otherwise.
pub fn family_system(family: u8, a: &RatFunc, c: &RatFunc) -> Result<FuchsianSystem> {
    let fam = rationalize(&herfurtner(family)?)?;
    let connection = if family == 2 { quartic_connection(a, c) } else { cubic_connection(a) };
    Ok(pullback(&connection, &fam)?)
}

/// Builds the family's system, reduces it to the first coordinate, reads
/// `(theta, lambda, nu)` from the SL form, moves the singularities to
/// `(t, 0, 1)` and builds the Schlesinger system.
pub fn derive(family: u8, a: &RatFunc, c: &RatFunc, choice: ThetaChoice<'_>) -> Result<Derivation> {
    let fam = rationalize(&herfurtner(family)?)?;
    let system = family_system(family, a, c)?;
    let sp = discriminant_roots(&fam)?;
    let points = [sp.t1, sp.t2, sp.t3];
    let ode = system_to_scalar(&system, Coordinate::First)?;
    let apparent = apparent_singularities(&ode, system.singularities())?;
    if apparent.len() != 1 {
        return Err(Error::ApparentCount(apparent.len()));
    }
    let accessory = accessory_parameters(&sl_form(&ode), &points, &apparent[0].location, choice)?;
    let t3 = &points[2];
    let t = &points[0] / t3;
    let lambda = &accessory.lambda / t3;
    let mu = momentum_from_accessory(&accessory.nu, &accessory.theta, &lambda, &[t.clone(), rf("0"), rf("1")])?;
    let data = PVIData::new(accessory.theta.clone(), lambda, mu, t)?;
    let schlesinger = build_from_pvi(&data)?;
    Ok(Derivation { family, system, points, accessory, data, schlesinger })
}

/// Derives a registry row from its curve family, with the signs of theta
/// taken from the registry.
pub fn derive_row(id: u8) -> Result<Derivation> {
    let row = solution_row(id)?;
    let family = row.family.ok_or(Error::DegenerateRow(id))?;
    derive(family, &rf("a"), &rf("c"), ThetaChoice::Reference(&row.theta))
}

/// Middle convolution of the Schlesinger system of `d`, renormalized so that
/// the residue at infinity is `diag(e[0], e[1])`.
pub fn convolve_pvi(d: &PVIData, mu_c: &RatFunc, e: &[RatFunc; 2]) -> Result<SchlesingerSystem> {
    let s = build_from_pvi(d)?;
    let r = middle_convolution(s.points(), s.residues(), mu_c)?;
    Ok(mc_to_schlesinger(&r, e)?)
}

/// Middle convolution of a rank-two Schlesinger system, renormalized so that
/// the residue at infinity is `diag(alpha', alpha' + theta_4' - 1)` with the
/// parameters predicted by the transformation law.
pub fn convolve(s: &SchlesingerSystem, d: &PVIData, mu_c: &RatFunc) -> Result<SchlesingerSystem> {
    let (theta, alpha) = mc_parameters(&d.theta, &d.alpha, mu_c);
    let second = &(&alpha + &theta[3]) - &rf("1");
    let r = middle_convolution(s.points(), s.residues(), mu_c)?;
    Ok(mc_to_schlesinger(&r, &[alpha.neg(), second.neg()])?)
}
