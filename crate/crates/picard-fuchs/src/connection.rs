use painleve_core::{rf, var_index, Matrix, RatFunc};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConnectionKind {
    /// Periods of `dx/y` with `y` a product of three powers of `x - t_i`.
    ThreePoint,
    /// Periods over `y = (4x^3 - t2 x - t3)^a`.
    Cubic,
    /// Periods over `y = (4x^2 - t2 x + t3)^c (x + t2/4)^a`.
    Quartic,
}

/// A connection `dY = (sum_v A_v dv) Y` over a parameter space, one 2x2
/// coefficient matrix per base variable.
#[derive(Clone, Debug)]
pub struct Connection {
    kind: ConnectionKind,
    base: Vec<usize>,
    coefficients: Vec<Matrix>,
}

impl Connection {
    pub fn kind(&self) -> ConnectionKind {
        self.kind
    }

    /// Standard-space indices of the base variables.
    pub fn base(&self) -> &[usize] {
        &self.base
    }

    pub fn base_names(&self) -> Vec<String> {
        let sp = painleve_core::Space::standard();
        self.base.iter().map(|&i| sp.name(i).to_string()).collect()
    }

    pub fn coefficients(&self) -> &[Matrix] {
        &self.coefficients
    }

    pub fn coefficient(&self, var: &str) -> Option<&Matrix> {
        let idx = painleve_core::Space::standard().index(var)?;
        self.base.iter().position(|&b| b == idx).map(|k| &self.coefficients[k])
    }

    /// `d_u A_v - d_v A_u - (A_u A_v - A_v A_u)` for every pair `u < v` of base
    /// variables. All vanish exactly when the connection is integrable.
    pub fn flatness_defects(&self) -> Vec<Matrix> {
        let mut out = Vec::new();
        for i in 0..self.base.len() {
            for j in i + 1..self.base.len() {
                let (u, v) = (self.base[i], self.base[j]);
                let (au, av) = (&self.coefficients[i], &self.coefficients[j]);
                let curl = &av.derivative(u) - &au.derivative(v);
                out.push(&curl - &au.commutator(av).expect("2x2 matrices"));
            }
        }
        out
    }

    pub fn is_flat(&self) -> bool {
        self.flatness_defects().iter().all(Matrix::is_zero)
    }
}

/// The `dt1` coefficient for periods of `dx/y`, `y` proportional to
/// `(x-t1)^a (x-t2)^b (x-t3)^c`. The other two follow by relabeling.
fn three_point_block(e: [&RatFunc; 3], t: [&RatFunc; 3]) -> Matrix {
    let [a, b, c] = e;
    let [t1, t2, t3] = t;
    let half = rf("1/2");
    let one = rf("1");
    let two = rf("2");
    let diag = &(&(&(&(b + c) - &two) * t1) + &(&(&(a + c) - &one) * t2)) + &(&(&(a + b) - &one) * t3);
    let diag = &diag * &half;
    let top = &(&two - a) - &(b + c);
    let bottom = &(&(&(a * t2) * t3) + &(&(&(b - &one) * t1) * t3)) + &(&(&(c - &one) * t1) * t2);
    let den = &(t1 - t2) * &(t1 - t3);
    let inv = den.inv().expect("distinct points");
    Matrix::from_rows(vec![vec![diag.clone(), top], vec![bottom, diag.neg()]])
        .expect("2x2")
        .scale(&inv)
}

/// Connection in `(t1, t2, t3)` for the three-point family with exponents
/// `(a, b, c)`.
pub fn three_point_connection(a: &RatFunc, b: &RatFunc, c: &RatFunc) -> Connection {
    let (t1, t2, t3) = (rf("t1"), rf("t2"), rf("t3"));
    let coefficients = vec![
        three_point_block([a, b, c], [&t1, &t2, &t3]),
        three_point_block([b, a, c], [&t2, &t1, &t3]),
        three_point_block([c, b, a], [&t3, &t2, &t1]),
    ];
    Connection {
        kind: ConnectionKind::ThreePoint,
        base: vec![var_index("t1"), var_index("t2"), var_index("t3")],
        coefficients,
    }
}

fn bind(m: Matrix, bindings: &[(&str, &RatFunc)]) -> Matrix {
    m.subs(bindings).expect("exponent substitution is polynomial")
}

/// Connection in `(t2, t3)` for the Weierstrass cubic with exponent `a`.
pub fn cubic_connection(a: &RatFunc) -> Connection {
    let den = rf("1/(27*t3^2-t2^3)");
    let dt2 = Matrix::parse(&[&["t2^2/4", "-27*a*t3+18*t3"], &["-9/4*a*t2*t3+3/4*t2*t3", "-t2^2/4"]])
        .expect("literal")
        .scale(&den);
    let dt3 = Matrix::parse(&[&["-9/2*t3", "18*a*t2-12*t2"], &["3/2*a*t2^2-1/2*t2^2", "9/2*t3"]])
        .expect("literal")
        .scale(&den);
    Connection {
        kind: ConnectionKind::Cubic,
        base: vec![var_index("t2"), var_index("t3")],
        coefficients: vec![bind(dt2, &[("a", a)]), bind(dt3, &[("a", a)])],
    }
}

/// Connection in `(t2, t3)` for the cubic split as a quadratic with exponent
/// `c` times a linear factor with exponent `a`.
pub fn quartic_connection(a: &RatFunc, c: &RatFunc) -> Connection {
    let den = rf("1/((t2^2-16*t3)*(t2^2+2*t3))");
    let dt2 = Matrix::parse(&[
        &["6*a*t2*t3-6*c*t2*t3-1/2*t2^3+5*t2*t3", "-48*a*t3-96*c*t3+96*t3"],
        &["12*a*t3^2-3*c*t2^2*t3+t2^2*t3-4*t3^2", "-6*a*t2*t3+6*c*t2*t3+1/2*t2^3-5*t2*t3"],
    ])
    .expect("literal")
    .scale(&den);
    let dt3 = Matrix::parse(&[
        &["-3*a*t2^2+3*c*t2^2+t2^2+8*t3", "24*a*t2+48*c*t2-48*t2"],
        &["-6*a*t2*t3+3/2*c*t2^3-1/2*t2^3+2*t2*t3", "3*a*t2^2-3*c*t2^2-t2^2-8*t3"],
    ])
    .expect("literal")
    .scale(&den);
    let b = [("a", a), ("c", c)];
    Connection {
        kind: ConnectionKind::Quartic,
        base: vec![var_index("t2"), var_index("t3")],
        coefficients: vec![bind(dt2, &b), bind(dt3, &b)],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_point_top_right_entry() {
        let conn = three_point_connection(&rf("a"), &rf("b"), &rf("c"));
        let m = conn.coefficient("t1").unwrap();
        assert_eq!(m.get(0, 1), &rf("(-a-b-c+2)/((t1-t2)*(t1-t3))"));
    }

    #[test]
    fn cubic_and_quartic_sample_entries() {
        let cubic = cubic_connection(&rf("a"));
        assert_eq!(cubic.coefficient("t3").unwrap().get(0, 0), &rf("(-9/2)*t3/(27*t3^2-t2^3)"));
        let quartic = quartic_connection(&rf("a"), &rf("c"));
        assert_eq!(
            quartic.coefficient("t2").unwrap().get(0, 1),
            &rf("(-48*a*t3-96*c*t3+96*t3)/((t2^2-16*t3)*(t2^2+2*t3))")
        );
        assert!(cubic.coefficient("t1").is_none());
    }

    #[test]
    fn specialized_exponents_stay_flat() {
        assert!(cubic_connection(&rf("1/2")).is_flat());
        assert!(quartic_connection(&rf("1/3"), &rf("b")).is_flat());
    }
}
