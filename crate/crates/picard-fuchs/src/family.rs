use painleve_core::roots::{certify_no_root, split_roots};
use painleve_core::{rf, var_index, RatFunc};

use crate::error::{Error, Result};

/// Elliptic family `y^2 = 4x^3 - g2 x - g3` over the `(z, b)` plane.
///
/// `reparametrization` is the rational function substituted for `b`, and
/// `scale` is the third finite singular point, used later to move the
/// singularities to `(t, 0, 1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CurveFamily {
    id: Option<u8>,
    g2: RatFunc,
    g3: RatFunc,
    reparametrization: Option<RatFunc>,
    scale: Option<RatFunc>,
}

/// Finite singular points ordered as `(t1, t2 = 0, t3)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularPoints {
    pub t1: RatFunc,
    pub t2: RatFunc,
    pub t3: RatFunc,
}

impl SingularPoints {
    pub fn to_vec(&self) -> Vec<RatFunc> {
        vec![self.t1.clone(), self.t2.clone(), self.t3.clone()]
    }
}

/// Splitting `4x^3 - g2 x - g3 = (4x^2 - G2 x + G3)(x + G2/4)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicSplit {
    /// The rational root `-G2/4`.
    pub root: RatFunc,
    pub g2: RatFunc,
    pub g3: RatFunc,
}

impl CubicSplit {
    /// `4x^2 - G2 x + G3`.
    pub fn quadratic(&self) -> RatFunc {
        let x = rf("x");
        &(&(&rf("4") * &(&x * &x)) - &(&self.g2 * &x)) + &self.g3
    }

    /// `x + G2/4`.
    pub fn linear(&self) -> RatFunc {
        &rf("x") + &(&self.g2 * &rf("1/4"))
    }
}

impl CurveFamily {
    /// A family given by its Weierstrass coefficients. Rejects families whose
    /// discriminant vanishes identically.
    pub fn new(g2: RatFunc, g3: RatFunc) -> Result<CurveFamily> {
        let fam = CurveFamily { id: None, g2, g3, reparametrization: None, scale: None };
        if fam.discriminant().is_zero() {
            return Err(Error::Degenerate("discriminant vanishes identically".into()));
        }
        Ok(fam)
    }

    pub fn id(&self) -> Option<u8> {
        self.id
    }

    pub fn g2(&self) -> &RatFunc {
        &self.g2
    }

    pub fn g3(&self) -> &RatFunc {
        &self.g3
    }

    pub fn reparametrization(&self) -> Option<&RatFunc> {
        self.reparametrization.as_ref()
    }

    pub fn scale(&self) -> Option<&RatFunc> {
        self.scale.as_ref()
    }

    pub fn is_rationalized(&self) -> bool {
        self.scale.is_some()
    }

    /// `g2^3 - 27 g3^2`, the discriminant of `4x^3 - g2 x - g3` up to a
    /// constant factor.
    pub fn discriminant(&self) -> RatFunc {
        let g2_cubed = self.g2.pow(3).expect("nonnegative power");
        let g3_sq = self.g3.pow(2).expect("nonnegative power");
        &g2_cubed - &(&rf("27") * &g3_sq)
    }

    /// `4x^3 - g2 x - g3`.
    pub fn cubic(&self) -> RatFunc {
        let x = rf("x");
        &(&(&rf("4") * &x.pow(3).expect("power")) - &(&self.g2 * &x)) - &self.g3
    }
}

/// Weierstrass data of the five deformable families with four singular
/// fibers and nonconstant j-invariant.
pub fn herfurtner(id: u8) -> Result<CurveFamily> {
    let (g2, g3) = match id {
        1 => ("3*(z-1)*(z-b^2)^3", "(z-1)*(z-b^2)^4*(z+b)"),
        2 => ("12*z^2*(z^2+b*z+1)", "4*z^3*(2*z^3+3*b*z^2+3*b*z+2)"),
        3 => ("12*z^2*(z^2+2*b*z+1)", "4*z^3*(2*z^3+3*(b^2+1)*z^2+6*b*z+2)"),
        4 => ("3*z^3*(z+b)", "z^5*(z+1)"),
        5 => ("3*z^3*(z+2*b)", "z^4*(z^2+3*b*z+1)"),
        _ => return Err(Error::UnknownFamily(id)),
    };
    Ok(CurveFamily { id: Some(id), g2: rf(g2), g3: rf(g3), reparametrization: None, scale: None })
}

/// Reparametrization of `b` and third singular point for each family.
fn rationalizing_data(id: u8) -> (Option<&'static str>, &'static str) {
    match id {
        1 => (None, "1"),
        2 => (Some("3/4*(b+1/b)+1/2"), "-1/b"),
        3 => (Some("2/3*(b+1/b)-1/3"), "-(b^2+2*b)/3"),
        4 => (Some("2/3*(b^2-3)/(b^2+3)+1/3"), "-(b^3-3*b^2+3*b-1)/(b^3-3*b^2+3*b-9)"),
        5 => (Some("1/4*(b+2/b)"), "-2*b^3/(3*b^2-2)"),
        _ => unreachable!("validated by herfurtner"),
    }
}

/// Substitute the stored reparametrization of `b`, after which every
/// singular point is a rational function of the new `b`.
pub fn rationalize(family: &CurveFamily) -> Result<CurveFamily> {
    let id = family.id.ok_or_else(|| Error::Degenerate("only the listed families carry a reparametrization".into()))?;
    if family.is_rationalized() {
        return Ok(family.clone());
    }
    let (sub, scale) = rationalizing_data(id);
    let (g2, g3, reparametrization) = match sub {
        Some(text) => {
            let bt = rf(text);
            let b = var_index("b");
            (
                family.g2.substitute(&[(b, bt.clone())])?,
                family.g3.substitute(&[(b, bt.clone())])?,
                Some(bt),
            )
        }
        None => (family.g2.clone(), family.g3.clone(), None),
    };
    Ok(CurveFamily { id: Some(id), g2, g3, reparametrization, scale: Some(rf(scale)) })
}

/// The three finite zeros of the discriminant in `z`, ordered `(t1, 0, t3)`
/// with `t3` the stored scale.
pub fn discriminant_roots(family: &CurveFamily) -> Result<SingularPoints> {
    let roots = finite_singularities(family)?;
    if roots.len() != 3 {
        return Err(Error::SingularCount(roots.len()));
    }
    let scale = family.scale.as_ref().ok_or(Error::NotRationalized)?;
    let zero_pos = roots
        .iter()
        .position(RatFunc::is_zero)
        .ok_or_else(|| Error::Degenerate("z = 0 is not a singular point".into()))?;
    let scale_pos = roots
        .iter()
        .position(|r| r == scale)
        .ok_or_else(|| Error::Degenerate(format!("stored scale {scale} is not a singular point")))?;
    let other = (0..3).find(|&k| k != zero_pos && k != scale_pos).expect("three roots");
    Ok(SingularPoints { t1: roots[other].clone(), t2: roots[zero_pos].clone(), t3: scale.clone() })
}

/// Distinct zeros of the discriminant in `z`; errors if one of them is not
/// rational in the remaining variables.
pub(crate) fn finite_singularities(family: &CurveFamily) -> Result<Vec<RatFunc>> {
    let disc = family.discriminant();
    let z = var_index("z");
    let split = split_roots(disc.num(), z)?;
    if let Some((factor, _)) = split.leftover.first() {
        return Err(Error::IrrationalRoot(format!("{factor}")));
    }
    let mut out: Vec<RatFunc> = Vec::new();
    for (r, _) in split.roots {
        if !out.contains(&r) {
            out.push(r);
        }
    }
    Ok(out)
}

/// Splits `4x^3 - g2 x - g3` over the coefficient field when it has a
/// rational root in `x`.
pub fn factor_cubic(family: &CurveFamily) -> Result<Option<CubicSplit>> {
    let f = family.cubic();
    let x = var_index("x");
    let split = split_roots(f.num(), x)?;
    if let Some((root, _)) = split.roots.first() {
        let g2 = &rf("-4") * root;
        let g3 = &(&rf("4") * &(root * root)) - &family.g2;
        return Ok(Some(CubicSplit { root: root.clone(), g2, g3 }));
    }
    for (factor, _) in &split.leftover {
        if !certify_no_root(factor, x) {
            return Err(Error::Degenerate(format!("could not decide whether {factor} has a rational root")));
        }
    }
    Ok(None)
}
