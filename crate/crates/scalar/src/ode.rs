use painleve_core::{rf, Matrix, RatFunc};
use painleve_picard_fuchs::FuchsianSystem;

use crate::error::{Error, Result};

/// Which component of `Y` the scalar equation is written for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Coordinate {
    #[default]
    First,
    Second,
}

impl TryFrom<u8> for Coordinate {
    type Error = u8;

    fn try_from(v: u8) -> std::result::Result<Self, u8> {
        match v {
            1 => Ok(Coordinate::First),
            2 => Ok(Coordinate::Second),
            other => Err(other),
        }
    }
}

/// `y'' + p1 y' + p2 y = 0` in the variable `z`.
#[derive(Clone, Debug, PartialEq)]
pub struct ScalarOde {
    pub z: usize,
    pub p1: RatFunc,
    pub p2: RatFunc,
    /// Declared finite singular points.
    pub singularities: Vec<RatFunc>,
    /// The off-diagonal system entry the equation was derived from; its zeros
    /// are the apparent singularities.
    pub off_diagonal: Option<RatFunc>,
}

/// `y'' = p y`.
#[derive(Clone, Debug, PartialEq)]
pub struct SlForm {
    pub z: usize,
    pub p: RatFunc,
    pub singularities: Vec<RatFunc>,
}

impl SlForm {
    /// The same equation as `y'' + 0 y' - p y = 0`.
    pub fn to_ode(&self) -> ScalarOde {
        ScalarOde {
            z: self.z,
            p1: RatFunc::zero(self.p.space()),
            p2: self.p.neg(),
            singularities: self.singularities.clone(),
            off_diagonal: None,
        }
    }
}

/// Scalar equation satisfied by one coordinate of `Y' = Q Y`:
/// `p1 = -(log q12)' - tr Q`, `p2 = det Q - q11' + q11 (log q12)'`, with the
/// roles of the indices exchanged for the second coordinate.
pub fn system_to_scalar(system: &FuchsianSystem, coordinate: Coordinate) -> Result<ScalarOde> {
    let m = system.matrix();
    if m.rows() != 2 {
        return Err(Error::Core(painleve_core::Error::Shape(format!("{}x{} system", m.rows(), m.cols()))));
    }
    let (q11, q12, name) = match coordinate {
        Coordinate::First => (m.get(0, 0), m.get(0, 1), "12"),
        Coordinate::Second => (m.get(1, 1), m.get(1, 0), "21"),
    };
    if q12.is_zero() {
        return Err(Error::ZeroOffDiagonal(name));
    }
    let z = system.z();
    let (p1, p2) = reduce(m, q11, q12, z)?;
    Ok(ScalarOde {
        z,
        p1,
        p2,
        singularities: system.singularities().to_vec(),
        off_diagonal: Some(q12.clone()),
    })
}

fn reduce(m: &Matrix, q11: &RatFunc, q12: &RatFunc, z: usize) -> Result<(RatFunc, RatFunc)> {
    let log_d = q12.derivative(z).checked_div(q12)?;
    let p1 = &log_d.neg() - &m.trace()?;
    let p2 = &(&m.det()? - &q11.derivative(z)) + &(q11 * &log_d);
    Ok((p1, p2))
}

/// `p = -p2 + p1^2/4 + p1'/2`.
pub fn sl_form(ode: &ScalarOde) -> SlForm {
    let p1 = &ode.p1;
    let p = &(&ode.p2.neg() + &(&(p1 * p1) * &rf("1/4"))) + &(&p1.derivative(ode.z) * &rf("1/2"));
    SlForm { z: ode.z, p, singularities: ode.singularities.clone() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use painleve_core::var_index;

    fn system(rows: &[&[&str]]) -> FuchsianSystem {
        FuchsianSystem::new(Matrix::parse(rows).unwrap(), "z", vec![rf("0"), rf("1")]).unwrap()
    }

    #[test]
    fn diagonal_system_has_no_reduction() {
        let s = system(&[&["1/z", "0"], &["0", "1/(z-1)"]]);
        assert!(matches!(system_to_scalar(&s, Coordinate::First), Err(Error::ZeroOffDiagonal("12"))));
        assert!(matches!(system_to_scalar(&s, Coordinate::Second), Err(Error::ZeroOffDiagonal("21"))));
    }

    #[test]
    fn nilpotent_constant_system() {
        let s = system(&[&["0", "1"], &["0", "0"]]);
        let ode = system_to_scalar(&s, Coordinate::First).unwrap();
        assert!(ode.p1.is_zero() && ode.p2.is_zero());
    }

    #[test]
    fn sl_form_direct_cases() {
        let z = var_index("z");
        let ode = ScalarOde { z, p1: rf("1/z"), p2: rf("0"), singularities: vec![], off_diagonal: None };
        assert_eq!(sl_form(&ode).p, rf("-1/(4*z^2)"));
        let ode = ScalarOde { z, p1: rf("0"), p2: rf("b/(z-t)"), singularities: vec![], off_diagonal: None };
        assert_eq!(sl_form(&ode).p, rf("-b/(z-t)"));
    }

    #[test]
    fn coordinate_parsing() {
        assert_eq!(Coordinate::try_from(1), Ok(Coordinate::First));
        assert_eq!(Coordinate::try_from(2), Ok(Coordinate::Second));
        assert_eq!(Coordinate::try_from(3), Err(3));
    }
}
