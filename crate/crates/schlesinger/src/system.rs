use painleve_core::roots::sqrt;
use painleve_core::{partial_fractions, rf, var_index, Matrix, RatFunc};
use painleve_picard_fuchs::FuchsianSystem;

use crate::error::{Error, Result};

/// `DY = (Q_1/(z - t_1) + Q_2/(z - t_2) + Q_3/(z - t_3)) Y` with constant
/// 2x2 residues; the residue at infinity is `-(Q_1 + Q_2 + Q_3)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchlesingerSystem {
    points: [RatFunc; 3],
    residues: [Matrix; 3],
}

impl SchlesingerSystem {
    pub fn new(points: [RatFunc; 3], residues: [Matrix; 3]) -> Result<SchlesingerSystem> {
        let z = var_index("z");
        for q in &residues {
            if q.rows() != 2 || q.cols() != 2 || q.entries().iter().any(|e| e.contains_var(z)) {
                return Err(Error::BadResidue);
            }
        }
        if points.iter().any(|p| p.contains_var(z)) {
            return Err(Error::Degenerate("singular points depend on z".into()));
        }
        for i in 0..3 {
            for j in i + 1..3 {
                if points[i] == points[j] {
                    return Err(Error::Degenerate(format!("t{} = t{} = {}", i + 1, j + 1, points[i])));
                }
            }
        }
        Ok(SchlesingerSystem { points, residues })
    }

    pub fn points(&self) -> &[RatFunc; 3] {
        &self.points
    }

    pub fn residues(&self) -> &[Matrix; 3] {
        &self.residues
    }

    pub fn residue(&self, i: usize) -> &Matrix {
        &self.residues[i]
    }

    /// `t` when the points are `(t, 0, 1)`.
    pub fn t(&self) -> Option<&RatFunc> {
        (self.points[1].is_zero() && self.points[2].is_one()).then_some(&self.points[0])
    }

    /// Points at `(t, 0, 1)` and a diagonal residue at infinity.
    pub fn is_normalized(&self) -> bool {
        self.t().is_some() && self.residue_at_infinity().is_diagonal()
    }

    pub fn residue_at_infinity(&self) -> Matrix {
        let sum = &(&self.residues[0] + &self.residues[1]) + &self.residues[2];
        sum.scale(&rf("-1"))
    }

    /// Traces of the residues; equal to `theta_i` when each `Q_i` has a zero
    /// eigenvalue.
    pub fn traces(&self) -> [RatFunc; 3] {
        self.residues.clone().map(|q| q.trace().expect("square"))
    }

    pub fn determinants(&self) -> [RatFunc; 3] {
        self.residues.clone().map(|q| q.det().expect("square"))
    }

    /// The coefficient matrix `A(z)`.
    pub fn matrix(&self) -> Matrix {
        let z = rf("z");
        let mut a = Matrix::zeros(z.space(), 2, 2);
        for (q, p) in self.residues.iter().zip(&self.points) {
            a = &a + &q.scale(&(&rf("1") / &(&z - p)));
        }
        a
    }

    pub fn to_fuchsian(&self) -> Result<FuchsianSystem> {
        FuchsianSystem::new(self.matrix(), "z", self.points.to_vec()).map_err(|e| Error::Format(e.to_string()))
    }

    /// Zero of the upper right (`coordinate == 1`) or lower left entry of
    /// `A(z)`, when that entry has exactly one finite zero and it is simple.
    pub fn apparent_point(&self, coordinate: u8) -> Result<Option<RatFunc>> {
        let (i, j) = if coordinate == 2 { (1, 0) } else { (0, 1) };
        let entry = self.matrix().get(i, j).clone();
        if entry.is_zero() {
            return Err(Error::ZeroOffDiagonal);
        }
        let z = var_index("z");
        let num = painleve_core::UPoly::from_poly(entry.num(), z);
        if num.degree() != Some(1) {
            return Ok(None);
        }
        let c = num.coeffs();
        Ok(Some((&c[0] / &c[1]).neg()))
    }

    fn conjugated(&self, s: &Matrix) -> Result<SchlesingerSystem> {
        let residues = [
            self.residues[0].conjugate(s)?,
            self.residues[1].conjugate(s)?,
            self.residues[2].conjugate(s)?,
        ];
        Ok(SchlesingerSystem { points: self.points.clone(), residues })
    }

    /// Conjugate every residue by `diag(1, k)`, which multiplies the upper
    /// right entries by `k` and divides the lower left ones by `k`.
    pub fn diagonal_gauge(&self, k: &RatFunc) -> Result<SchlesingerSystem> {
        self.conjugated(&Matrix::diag(&[rf("1"), k.clone()]))
    }
}

/// Residues of a Fuchsian system with exactly three finite singular points.
pub fn to_schlesinger(system: &FuchsianSystem) -> Result<SchlesingerSystem> {
    let points = system.singularities();
    if points.len() != 3 || system.dimension() != 2 {
        return Err(Error::SingularCount(points.len()));
    }
    let z = system.z();
    let space = system.matrix().space().clone();
    let mut residues: Vec<Matrix> = (0..3).map(|_| Matrix::zeros(&space, 2, 2)).collect();
    for i in 0..2 {
        for j in 0..2 {
            let pf = partial_fractions(system.matrix().get(i, j), z, points)?;
            if !pf.polynomial.is_zero() {
                return Err(Error::PolynomialPart);
            }
            for (k, term) in pf.poles.iter().enumerate() {
                if term.order() > 1 {
                    return Err(Error::HigherOrderPole { point: term.location.to_string(), order: term.order() });
                }
                residues[k].set(i, j, term.residue());
            }
        }
    }
    let standard = rf("0").space().clone();
    let residues: Vec<Matrix> = residues.iter().map(|m| m.to_space(&standard)).collect::<painleve_core::Result<_>>()?;
    let points: Vec<RatFunc> = points.iter().map(|p| p.to_space(&standard)).collect::<painleve_core::Result<_>>()?;
    SchlesingerSystem::new(
        points.try_into().expect("three points"),
        residues.try_into().expect("three residues"),
    )
}

/// Affine change `w = (z - t_2)/(t_3 - t_2)`, sending the points to
/// `(t, 0, 1)`. Residues are unchanged; apparent points move with `z`.
pub fn normalize_moebius(s: &SchlesingerSystem) -> Result<SchlesingerSystem> {
    let [t1, t2, t3] = &s.points;
    let scale = t3 - t2;
    if scale.is_zero() {
        return Err(Error::Degenerate("t3 = t2".into()));
    }
    let t = &(t1 - t2) / &scale;
    if t.is_one() {
        return Err(Error::Degenerate("t1 = t3, so t = 1".into()));
    }
    SchlesingerSystem::new([t, rf("0"), rf("1")], s.residues.clone())
}

fn eigenvector(m: &Matrix, e: &RatFunc) -> Result<Vec<RatFunc>> {
    let shifted = m - &Matrix::scalar(2, e);
    let mut kernel = shifted.kernel_basis();
    if kernel.len() != 1 {
        return Err(Error::ThetaFourIsOne);
    }
    let v = kernel.pop().expect("one vector");
    let lead = v.iter().find(|x| !x.is_zero()).expect("nonzero kernel vector").clone();
    Ok(v.iter().map(|x| x / &lead).collect())
}

/// Conjugate the system so that the residue at infinity becomes
/// `diag(alpha, alpha + theta_4 - 1)`, `alpha = -(theta_1+...+theta_4 - 1)/2`.
/// Without `theta4` the current diagonal order is kept, or for a
/// non-diagonal residue the root order of the characteristic polynomial.
pub fn diagonalize_infinity(s: &SchlesingerSystem, theta4: Option<&RatFunc>) -> Result<SchlesingerSystem> {
    let r = s.residue_at_infinity();
    let tr = r.trace()?;
    let det = r.det()?;
    let (e1, e2) = match theta4 {
        Some(th4) => {
            if th4.is_one() {
                return Err(Error::ThetaFourIsOne);
            }
            let alpha = &(&tr - &(th4 - &rf("1"))) * &rf("1/2");
            if !r.verify_eigenvalue(&alpha)? {
                return Err(Error::NotAnEigenvalue(alpha.to_string()));
            }
            let other = &tr - &alpha;
            (alpha, other)
        }
        None if r.is_diagonal() => (r.get(0, 0).clone(), r.get(1, 1).clone()),
        None => {
            let disc = &(&tr * &tr) - &(&rf("4") * &det);
            let d = sqrt(&disc).ok_or_else(|| Error::IrrationalEigenvalue(disc.to_string()))?;
            (&(&tr - &d) * &rf("1/2"), &(&tr + &d) * &rf("1/2"))
        }
    };
    if e1 == e2 {
        return Err(Error::ThetaFourIsOne);
    }
    if r.is_diagonal() && r.get(0, 0) == &e1 {
        return Ok(s.clone());
    }
    let p = Matrix::from_cols(&[eigenvector(&r, &e1)?, eigenvector(&r, &e2)?])?;
    s.conjugated(&p)
}

/// Conjugation by `[[0, 1], [1, 0]]`: exchanges the two coordinates, which
/// sends `theta_4` to `2 - theta_4`.
pub fn swap_coordinates(s: &SchlesingerSystem) -> SchlesingerSystem {
    let t = Matrix::parse(&[&["0", "1"], &["1", "0"]]).expect("literal");
    s.conjugated(&t).expect("invertible")
}

/// `w = 1/z` on a system with points `(t, 0, 1)`: the points become
/// `(1/t, 0, 1)` with residues `(Q_1, -(Q_1 + Q_2 + Q_3), Q_3)`, and `Q_2`
/// becomes the residue at infinity.
pub fn invert_coordinate(s: &SchlesingerSystem) -> Result<SchlesingerSystem> {
    let t = s.t().ok_or_else(|| Error::NotNormalized("points are not (t, 0, 1)".into()))?;
    let inv = t.inv()?;
    SchlesingerSystem::new(
        [inv, rf("0"), rf("1")],
        [s.residues[0].clone(), s.residue_at_infinity(), s.residues[2].clone()],
    )
}

/// `Y -> prod (z - p)^e Y`: adds `e` times the identity to the residue at
/// each listed point. `None` stands for infinity and is rejected.
pub fn scalar_twist(s: &SchlesingerSystem, shifts: &[(Option<RatFunc>, RatFunc)]) -> Result<SchlesingerSystem> {
    let mut residues = s.residues.clone();
    for (point, e) in shifts {
        let point = point.as_ref().ok_or(Error::ShiftAtInfinity)?;
        let k = s.points.iter().position(|p| p == point).ok_or_else(|| Error::ShiftNotSingular(point.to_string()))?;
        residues[k] = &residues[k] + &Matrix::scalar(2, e);
    }
    SchlesingerSystem::new(s.points.clone(), residues)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> SchlesingerSystem {
        SchlesingerSystem::new(
            [rf("b^2"), rf("0"), rf("1")],
            [
                Matrix::parse(&[&["1", "b"], &["0", "0"]]).unwrap(),
                Matrix::parse(&[&["a", "0"], &["1", "0"]]).unwrap(),
                Matrix::parse(&[&["0", "-b"], &["0", "c"]]).unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn double_swap_is_identity() {
        let s = sample();
        assert_eq!(swap_coordinates(&swap_coordinates(&s)), s);
    }

    #[test]
    fn normalized_points_are_fixed() {
        let s = sample();
        assert_eq!(normalize_moebius(&s).unwrap(), s);
    }

    #[test]
    fn scaling_moves_points_only() {
        let s = SchlesingerSystem::new([rf("-b"), rf("0"), rf("-1/b")], sample().residues.clone()).unwrap();
        let n = normalize_moebius(&s).unwrap();
        assert_eq!(n.points(), &[rf("b^2"), rf("0"), rf("1")]);
        assert_eq!(n.residues(), s.residues());
    }

    #[test]
    fn colliding_points_are_rejected() {
        let q = sample().residues.clone();
        assert!(matches!(SchlesingerSystem::new([rf("1"), rf("0"), rf("1")], q), Err(Error::Degenerate(_))));
    }

    #[test]
    fn twist_round_trip() {
        let s = sample();
        let there = scalar_twist(&s, &[(Some(rf("b^2")), rf("1/2")), (Some(rf("1")), rf("1/2"))]).unwrap();
        assert_eq!(there.traces()[0], rf("2"));
        let back = scalar_twist(&there, &[(Some(rf("b^2")), rf("-1/2")), (Some(rf("1")), rf("-1/2"))]).unwrap();
        assert_eq!(back, s);
        assert_eq!(scalar_twist(&s, &[]).unwrap(), s);
        assert_eq!(scalar_twist(&s, &[(None, rf("1"))]), Err(Error::ShiftAtInfinity));
        assert!(matches!(scalar_twist(&s, &[(Some(rf("7")), rf("1"))]), Err(Error::ShiftNotSingular(_))));
    }

    #[test]
    fn inversion_twice_is_identity() {
        let s = sample();
        let once = invert_coordinate(&s).unwrap();
        assert_eq!(once.points(), &[rf("1/b^2"), rf("0"), rf("1")]);
        assert_eq!(once.residue_at_infinity(), s.residue(1).clone());
        assert_eq!(invert_coordinate(&once).unwrap(), s);
    }

    #[test]
    fn diagonal_input_is_kept() {
        let s = SchlesingerSystem::new(
            [rf("t"), rf("0"), rf("1")],
            [
                Matrix::parse(&[&["1", "1"], &["0", "0"]]).unwrap(),
                Matrix::parse(&[&["0", "-1"], &["0", "a"]]).unwrap(),
                Matrix::parse(&[&["c", "0"], &["0", "0"]]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(diagonalize_infinity(&s, None).unwrap(), s);
        let swapped = diagonalize_infinity(&s, Some(&rf("a-c"))).unwrap();
        assert_eq!(swapped.residue_at_infinity(), Matrix::diag(&[rf("-a"), rf("-1-c")]));
    }
}
