//! Printed systems used as regression data by the check suite.

use painleve_core::{rf, Matrix, RatFunc};

fn residue(q11: &str, q12: &str, q21: &str, q22: &str) -> Matrix {
    Matrix::from_rows(vec![vec![rf(q11), rf(q12)], vec![rf(q21), rf(q22)]]).expect("2x2")
}

fn scaled(rows: [[&str; 2]; 2], scale: &str) -> Matrix {
    Matrix::parse(&[&rows[0], &rows[1]]).expect("valid literal").scale(&rf(scale))
}

/// Residues of the row-3 system at `(b^2, 0, 1)`.
pub fn row_three_residues() -> [Matrix; 3] {
    let q11 = [
        "(b*a+a+2*b*c-3*b-1)*(a+2*c-2)/(4*b*(a+c-2))",
        "(-b^2+2*b-1)*(a+2*c-2)*(a-1)/(4*b*(a+c-2))",
        "(b*a+a-b+2*c-3)*(a+2*c-2)/(4*(a+c-2))",
    ];
    let q12 = ["1/(b*(b-1))", "1/b", "-1/(b-1)"];
    let q21 = [
        "(b-1)*(b*a+a-2*b+2*c-2)*(-b*a-a-2*b*c+3*b+1)*(a+2*c-2)*(a-1)/(16*b*(a+c-2)^2)",
        "(b-1)^2*((2-a-2*c)*(a-1)*(b^2+1)+(-2*a^2-4*a*c+6*a-4*c^2+8*c-4)*b)*(a+2*c-2)*(a-1)/(16*b*(a+c-2)^2)",
        "(b-1)*(b*a+a-b+2*c-3)*(b*a+a+2*b*c-2*b-2)*(a+2*c-2)*(a-1)/(16*(a+c-2)^2)",
    ];
    let theta = ["c-1/2", "a+c-1", "c-1/2"];
    std::array::from_fn(|i| residue(q11[i], q12[i], q21[i], &format!("-({}) + {}", q11[i], theta[i])))
}

/// Residues of the row-4 system; `q21` is fixed by `det = 0`.
pub fn row_four_residues() -> [Matrix; 3] {
    let q11 = [
        "(18*a^2*b^2+18*a^2*b+18*a^2-3*a*b^3-30*a*b^2-48*a*b-36*a+2*b^3+12*b^2+24*b+16)/(18*a*b+18*a-27*b-27)",
        "(3*a-2)*(b^2+(-6*a+7)*b+1)*(b-1)^2/(18*a*b^2-27*b^2)",
        "(18*a^2*b^3+18*a^2*b^2+18*a^2*b-36*a*b^3-48*a*b^2-30*a*b-3*a+16*b^3+24*b^2+12*b+2)/(18*a*b^3+18*a*b^2-27*b^3-27*b^2)",
    ];
    let q12 = ["(-b^4-2*b^3)/(b^2-1)", "b^2+2*b", "(b^2+2*b)/(b^2-1)"];
    let theta = ["a-1/2", "3*a-3/2", "a-1/2"];
    std::array::from_fn(|i| {
        let q22 = format!("{} - ({})", theta[i], q11[i]);
        let q21 = format!("({}) * ({}) / ({})", q11[i], q22, q12[i]);
        residue(q11[i], q12[i], &q21, &q22)
    })
}

/// Residues of the convolution of the row-4 system with `mu_c = -(3a-2)`.
pub fn row_four_convolved_residues() -> [Matrix; 3] {
    let q11 = [
        "(3*a-2)*(b+(-6*a+2))*(b+2)^2/(9*(4*a-1)*(b+1))",
        "(-3*a+2)*(b^2+(-6*a+4)*b+1)*(b^2+b+1)/(9*(4*a-1)*b^2)",
        "(3*a-2)*((-6*a+2)*b+1)*(2*b+1)^2/(9*(4*a-1)*b^2*(b+1))",
    ];
    let q12 = [
        "(b+2)/((72*a-18)*(b+1))",
        "-(b^2+b+1)/(18*(4*a-1)*b^2)",
        "(2*b+1)/(18*(4*a-1)*b^2*(b+1))",
    ];
    let q21 = [
        "(3*a-2)*((6*a-4)*b^3+(-36*a^2+60*a-24)*b^2+(24*a-21)*b-5)*(-b+(6*a-2))*(b+2)/(9*(4*a-1)*(b+1))",
        "((4-6*a)*b^4+(36*a^2-54*a+20)*b^3+(36*a^2-96*a+33)*b^2+(36*a^2-54*a+20)*b+4-6*a)/(9*(4*a-1)*b^2)*(3*a-2)*(-b^2+(6*a-4)*b-1)",
        "(3*a-2)*(-5*b^3+(24*a-21)*b^2+(-36*a^2+60*a-24)*b+(6*a-4))*((6*a-2)*b-1)*(2*b+1)/(9*(4*a-1)*b^2*(b+1))",
    ];
    let theta = ["-2*a+3/2", "1/2", "-2*a+3/2"];
    std::array::from_fn(|i| residue(q11[i], q12[i], q21[i], &format!("{} - ({})", theta[i], q11[i])))
}

/// Residues of the dihedral system obtained from row 3 with `mu_c = -c`.
pub fn dihedral_residues() -> [Matrix; 3] {
    [
        scaled([["-a*b-a-2*b*c+b+1", "a*b+a+2*b*c-3*b-1"], ["-a*b-a-2*b*c+b+1", "a*b+a+2*b*c-3*b-1"]], "1/(4*b)"),
        scaled([["a*b^2+2*a*b+a-b^2-2*b-1", "a*b^2-a-b^2+1"], ["-a*b^2+a+b^2-1", "-a*b^2+2*a*b-a+b^2-2*b+1"]], "1/(4*b)"),
        scaled([["-a*b-a+b-2*c+1", "-a*b-a+b-2*c+3"], ["a*b+a-b+2*c-1", "a*b+a-b+2*c-3"]], "1/4"),
    ]
}

/// The dihedral system as one matrix `A(z)`.
pub fn dihedral_matrix() -> Matrix {
    let den = "(4*z*(z-1)*(z-b^2))";
    let e = [
        ["-4*c*z^2+((1-a+2*c)*(b^2+1)+2*(1-a)*b)*z+(a-1)*(b+1)^2*b", "(b^2-1)*((a+2*c-3)*z+b*(a-1))"],
        ["(b^2-1)*((1-a-2*c)*z+(b-a*b))", "4*(a+c-2)*z^2+((5-3*a-2*c)*(b^2+1)+2*(a-1)*b)*z+(1-a)*(b-1)^2*b"],
    ];
    let rows = e.map(|r| r.map(|x| rf(&format!("({x})/{den}"))).to_vec()).to_vec();
    Matrix::from_rows(rows).expect("2x2")
}

/// The dihedral system at `b = 1`.
pub fn dihedral_limit() -> Matrix {
    Matrix::diag(&[rf("(-a-c*z+1)/(z^2-z)"), rf("(a+c-2)/(z-1)")])
}

fn tuples(list: &[&[&str]]) -> Vec<Vec<RatFunc>> {
    list.iter().map(|t| t.iter().map(|e| rf(e)).collect()).collect()
}

/// Residue eigenvalues at `(0, 1/t, 1, infinity)` of the three-dimensional
/// convolutions of rows 5 and 6.
pub fn three_dimensional_spectra(row: u8) -> Option<Vec<Vec<RatFunc>>> {
    match row {
        5 => Some(tuples(&[&["1/2", "0", "0"], &["-1/2", "0", "0"], &["1/2", "0", "0"], &["-(a-1)/2", "-a/2", "a-1"]])),
        6 => Some(tuples(&[&["1/2", "0", "0"], &["-3*a+3", "0", "0"], &["1/2", "0", "0"], &["-1/3+a-1", "-2/3+a-1", "a-1"]])),
        _ => None,
    }
}

/// Residue eigenvalue pairs of rows 5 and 6 after `z -> 1/z` and the twist.
pub fn inverted_spectra(row: u8) -> Option<Vec<Vec<RatFunc>>> {
    match row {
        5 => Some(tuples(&[&["a-1/2", "0"], &["a-3/2", "0"], &["a-1/2", "0"], &["-(3*a-3)/2", "-(3*a-2)/2"]])),
        6 => Some(tuples(&[&["a-1/2", "0"], &["-2*a+2", "0"], &["a-1/2", "0"], &["-1/3", "-2/3"]])),
        _ => None,
    }
}

/// The scalar twist at 0 applied after `z -> 1/z`.
pub fn inversion_twist(row: u8) -> Option<RatFunc> {
    match row {
        5 => Some(rf("(3*a-2)/2")),
        6 => Some(rf("2/3")),
        _ => None,
    }
}
