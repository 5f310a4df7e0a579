use painleve_core::{Matrix, RatFunc, Vector};

use crate::error::{Error, Result};

/// `(y - T) DY = B Y` with `B` the block matrix whose every block row is
/// `(A_1, ..., A_r)`, plus `mu_c` times the identity, and
/// `T = diag(t_1 I_n, ..., t_r I_n)`. Equivalently `DY = sum B_i/(y - t_i) Y`
/// where `B_i` keeps only block row `i` of `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OkuboSystem {
    pub points: Vec<RatFunc>,
    pub residues: Vec<Matrix>,
    pub mu_c: RatFunc,
    pub b: Matrix,
    pub t: Matrix,
}

impl OkuboSystem {
    /// Size `n` of the input residues.
    pub fn rank(&self) -> usize {
        self.residues[0].rows()
    }

    pub fn residue(&self, i: usize) -> Matrix {
        let n = self.rank();
        let mut bi = Matrix::zeros(self.b.space(), self.b.rows(), self.b.cols());
        bi.set_block(i * n, 0, &self.b.block(i * n, 0, n, self.b.cols()));
        bi
    }

    pub fn okubo_residues(&self) -> Vec<Matrix> {
        (0..self.points.len()).map(|i| self.residue(i)).collect()
    }
}

pub fn okubo_build(points: &[RatFunc], residues: &[Matrix], mu_c: &RatFunc) -> Result<OkuboSystem> {
    let r = points.len();
    if r == 0 || residues.len() != r {
        return Err(Error::Shape);
    }
    let n = residues[0].rows();
    if residues.iter().any(|a| a.rows() != n || a.cols() != n) {
        return Err(Error::Shape);
    }
    for i in 0..r {
        if points[..i].contains(&points[i]) {
            return Err(Error::RepeatedPoint(points[i].to_string()));
        }
    }
    let space = residues[0].space();
    let mut b = Matrix::zeros(space, n * r, n * r);
    let mut t = Matrix::zeros(space, n * r, n * r);
    let shift = Matrix::scalar(n, mu_c);
    for i in 0..r {
        for (j, a) in residues.iter().enumerate() {
            let block = if i == j { a + &shift } else { a.clone() };
            b.set_block(i * n, j * n, &block);
        }
        t.set_block(i * n, i * n, &Matrix::scalar(n, &points[i]));
    }
    Ok(OkuboSystem { points: points.to_vec(), residues: residues.to_vec(), mu_c: mu_c.clone(), b, t })
}

/// `k` is the sum of the kernels of the `A_i`, each placed in its own block;
/// `l` is the diagonal copy `(v, ..., v)` of the kernel of `sum A_i + mu_c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspaces {
    pub k: Vec<Vector>,
    pub l: Vec<Vector>,
}

impl Subspaces {
    pub fn basis(&self) -> Vec<Vector> {
        self.k.iter().chain(&self.l).cloned().collect()
    }
}

pub fn invariant_subspaces(okubo: &OkuboSystem) -> Subspaces {
    let n = okubo.rank();
    let r = okubo.points.len();
    let zero = RatFunc::zero(okubo.b.space());
    let mut k = Vec::new();
    for (i, a) in okubo.residues.iter().enumerate() {
        for v in a.kernel_basis() {
            let mut full = vec![zero.clone(); n * r];
            full[i * n..(i + 1) * n].clone_from_slice(&v);
            k.push(full);
        }
    }
    let total = okubo.residues.iter().skip(1).fold(okubo.residues[0].clone(), |acc, a| &acc + a);
    let shifted = &total + &Matrix::scalar(n, &okubo.mu_c);
    let l = shifted.kernel_basis().into_iter().map(|v| (0..r).flat_map(|_| v.iter().cloned()).collect()).collect();
    Subspaces { k, l }
}

#[cfg(test)]
mod tests {
    use super::*;
    use painleve_core::rf;

    #[test]
    fn one_dimensional_single_point() {
        let o = okubo_build(&[rf("0")], &[Matrix::parse(&[&["0"]]).unwrap()], &rf("b")).unwrap();
        assert_eq!(o.b, Matrix::parse(&[&["b"]]).unwrap());
    }

    #[test]
    fn rank_one_two_points() {
        let residues = [Matrix::parse(&[&["a"]]).unwrap(), Matrix::parse(&[&["c"]]).unwrap()];
        let o = okubo_build(&[rf("0"), rf("1")], &residues, &rf("b")).unwrap();
        assert_eq!(o.b, Matrix::parse(&[&["a+b", "c"], &["a", "c+b"]]).unwrap());
        assert_eq!(o.t, Matrix::parse(&[&["0", "0"], &["0", "1"]]).unwrap());
        assert_eq!(o.residue(1), Matrix::parse(&[&["0", "0"], &["a", "c+b"]]).unwrap());
        assert_eq!(&o.residue(0) + &o.residue(1), o.b);
        let sub = invariant_subspaces(&o);
        assert!(sub.k.is_empty() && sub.l.is_empty());
    }

    #[test]
    fn repeated_point_is_rejected() {
        let residues = [Matrix::parse(&[&["a"]]).unwrap(), Matrix::parse(&[&["c"]]).unwrap()];
        assert!(matches!(okubo_build(&[rf("1"), rf("1")], &residues, &rf("b")), Err(Error::RepeatedPoint(_))));
    }

    #[test]
    fn kernel_of_the_shifted_sum_is_diagonal() {
        let residues = [Matrix::parse(&[&["a"]]).unwrap(), Matrix::parse(&[&["c"]]).unwrap()];
        let o = okubo_build(&[rf("0"), rf("1")], &residues, &rf("-a-c")).unwrap();
        let sub = invariant_subspaces(&o);
        assert_eq!(sub.l, vec![vec![rf("1"), rf("1")]]);
        assert!(o.b.mul_vec(&sub.l[0]).unwrap().iter().all(|x| x.is_zero()));
    }
}
