use painleve_core::{rf, var_index, RatFunc};

use crate::error::{Error, Result};
use crate::registry::Table1Row;

/// `((theta_1 + theta_2 + theta_3 - 1)^2 - theta_4^2)/4`.
pub fn kappa(theta: &[RatFunc; 4]) -> RatFunc {
    let s = &(&(&theta[0] + &theta[1]) + &theta[2]) - &rf("1");
    &(&(&s * &s) - &(&theta[3] * &theta[3])) * &rf("1/4")
}

/// The Hamiltonian `K` in the variables `lambda`, `mu`, `t`:
/// `t(t-1)K = lambda(lambda-1)(lambda-t)mu^2
///   - (theta_2(lambda-1)(lambda-t) + theta_3 lambda(lambda-t) + (theta_1-1)lambda(lambda-1))mu
///   + kappa(lambda-t)`.
pub fn hamiltonian(theta: &[RatFunc; 4]) -> RatFunc {
    let (l, m, t) = (rf("lambda"), rf("mu"), rf("t"));
    let one = rf("1");
    let l1 = &l - &one;
    let lt = &l - &t;
    let quad = &(&(&(&l * &l1) * &lt) * &m) * &m;
    let lin = &(&(&theta[1] * &(&l1 * &lt)) + &(&theta[2] * &(&l * &lt))) + &(&(&theta[0] - &one) * &(&l * &l1));
    let tk = &(&quad - &(&lin * &m)) + &(&kappa(theta) * &lt);
    &tk / &(&t * &(&t - &one))
}

/// Residual of the vector field along a curve parametrized by `b`:
/// `r_lambda = lambda' - K_mu t'` and `r_mu = mu' + K_lambda t'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PVIResidual {
    pub r_lambda: RatFunc,
    pub r_mu: RatFunc,
}

impl PVIResidual {
    pub fn is_zero(&self) -> bool {
        self.r_lambda.is_zero() && self.r_mu.is_zero()
    }
}

pub fn verify_solution(theta: &[RatFunc; 4], lambda: &RatFunc, mu: &RatFunc, t: &RatFunc) -> Result<PVIResidual> {
    let b = var_index("b");
    let dt = t.derivative(b);
    if dt.is_zero() {
        return Err(Error::ConstantTime);
    }
    for (name, p) in [("0", rf("0")), ("1", rf("1")), ("t", t.clone())] {
        if lambda == &p {
            return Err(Error::Degenerate(format!("lambda = {name}")));
        }
    }
    let k = hamiltonian(theta);
    let at = |f: RatFunc| f.subs(&[("lambda", lambda), ("mu", mu), ("t", t)]);
    let k_mu = at(k.derivative(var_index("mu")))?;
    let k_lambda = at(k.derivative(var_index("lambda")))?;
    Ok(PVIResidual {
        r_lambda: &lambda.derivative(b) - &(&k_mu * &dt),
        r_mu: &mu.derivative(b) + &(&k_lambda * &dt),
    })
}

/// Outcome of checking a registry row. When the stored signs of theta give
/// a nonzero residual, every other sign pattern is tried and the first one
/// that works is reported; nothing is changed silently.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowVerification {
    pub residual: PVIResidual,
    pub alternate_signs: Option<[i8; 4]>,
}

pub fn verify_row(row: &Table1Row) -> Result<RowVerification> {
    let residual = verify_solution(&row.theta, &row.lambda, &row.mu, &row.t)?;
    let mut alternate_signs = None;
    if !residual.is_zero() {
        for mask in 1..16u8 {
            let signs: [i8; 4] = std::array::from_fn(|i| if mask >> i & 1 == 1 { -1 } else { 1 });
            let theta: [RatFunc; 4] = std::array::from_fn(|i| if signs[i] < 0 { row.theta[i].neg() } else { row.theta[i].clone() });
            if verify_solution(&theta, &row.lambda, &row.mu, &row.t)?.is_zero() {
                alternate_signs = Some(signs);
                break;
            }
        }
    }
    Ok(RowVerification { residual, alternate_signs })
}
