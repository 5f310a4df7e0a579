use painleve_core::{Matrix, RatFunc, UPoly, Vector};
use painleve_schlesinger::SchlesingerSystem;

use crate::error::{Error, Result};
use crate::okubo::{invariant_subspaces, okubo_build, OkuboSystem, Subspaces};

/// Quotient of an Okubo system by its invariant subspaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvolutionResult {
    pub points: Vec<RatFunc>,
    /// Residues of the quotient system at `points`.
    pub residues: Vec<Matrix>,
    /// Change of basis: invariant basis first, then the complement.
    pub basis: Matrix,
    pub dim_k: usize,
    pub dim_l: usize,
}

impl ConvolutionResult {
    pub fn dimension(&self) -> usize {
        self.residues.first().map_or(0, |m| m.rows())
    }

    pub fn residue_at_infinity(&self) -> Matrix {
        let sum = self.residues.iter().skip(1).fold(self.residues[0].clone(), |acc, a| &acc + a);
        sum.scale(&RatFunc::from_int(sum.space(), -1))
    }
}

fn rank_of(cols: &[Vector]) -> Result<usize> {
    if cols.is_empty() {
        return Ok(0);
    }
    Ok(Matrix::from_cols(cols)?.rank())
}

/// Standard vectors completing `basis` to a basis: the leading vector of
/// every block after the first comes first, then the remaining ones in
/// index order, each taken only when it raises the rank.
fn complement(basis: &[Vector], n: usize, r: usize, space: &painleve_core::SpaceRef) -> Result<Vec<Vector>> {
    let size = n * r;
    let mut order: Vec<usize> = (1..r).map(|k| k * n).collect();
    order.extend((0..size).filter(|i| !(i % n == 0 && *i > 0)));
    let mut cols = basis.to_vec();
    let mut rank = rank_of(&cols)?;
    let mut chosen = Vec::new();
    for i in order {
        if rank == size {
            break;
        }
        let mut e = vec![RatFunc::zero(space); size];
        e[i] = RatFunc::one(space);
        cols.push(e.clone());
        let next = rank_of(&cols)?;
        if next > rank {
            rank = next;
            chosen.push(e);
        } else {
            cols.pop();
        }
    }
    Ok(chosen)
}

fn in_span(basis: &[Vector], rank: usize, v: &Vector) -> Result<bool> {
    let mut cols = basis.to_vec();
    cols.push(v.clone());
    Ok(rank_of(&cols)? == rank)
}

pub fn mc_quotient(okubo: &OkuboSystem, sub: &Subspaces) -> Result<ConvolutionResult> {
    let n = okubo.rank();
    let r = okubo.points.len();
    let w = sub.basis();
    let rank = rank_of(&w)?;
    if rank != w.len() {
        return Err(Error::Overlap);
    }
    let bs = okubo.okubo_residues();
    for (i, bi) in bs.iter().enumerate() {
        for v in &w {
            if !in_span(&w, rank, &bi.mul_vec(v)?)? {
                return Err(Error::NotInvariant(i));
            }
        }
    }
    let space = okubo.b.space();
    let mut cols = w.clone();
    cols.extend(complement(&w, n, r, space)?);
    let s = Matrix::from_cols(&cols)?;
    let m = n * r - rank;
    let mut residues = Vec::with_capacity(r);
    for (i, bi) in bs.iter().enumerate() {
        let x = bi.conjugate(&s)?;
        if !x.block(rank, 0, m, rank).is_zero() {
            return Err(Error::NotInvariant(i));
        }
        residues.push(x.block(rank, rank, m, m));
    }
    Ok(ConvolutionResult { points: okubo.points.clone(), residues, basis: s, dim_k: sub.k.len(), dim_l: sub.l.len() })
}

/// Middle convolution with parameter `mu_c`, which must be nonzero.
pub fn middle_convolution(points: &[RatFunc], residues: &[Matrix], mu_c: &RatFunc) -> Result<ConvolutionResult> {
    if mu_c.is_zero() {
        return Err(Error::ZeroParameter);
    }
    let okubo = okubo_build(points, residues, mu_c)?;
    let sub = invariant_subspaces(&okubo);
    mc_quotient(&okubo, &sub)
}

/// `(theta_1 + mu_c, theta_2 + mu_c, theta_3 + mu_c, theta_4 - mu_c + 2 alpha)`
/// and `-mu_c`.
pub fn mc_parameters(theta: &[RatFunc; 4], alpha: &RatFunc, mu_c: &RatFunc) -> ([RatFunc; 4], RatFunc) {
    let two_alpha = alpha + alpha;
    (
        [&theta[0] + mu_c, &theta[1] + mu_c, &theta[2] + mu_c, &(&theta[3] - mu_c) + &two_alpha],
        mu_c.neg(),
    )
}

fn eigencolumn(p: &Matrix) -> Vector {
    let first = vec![p.get(0, 1).neg(), p.get(0, 0).clone()];
    if first.iter().any(|x| !x.is_zero()) {
        first
    } else {
        vec![p.get(1, 1).clone(), p.get(1, 0).neg()]
    }
}

/// Conjugate a rank-two quotient by the eigenvectors of the sum of its
/// residues for `targets`, so that the residue at infinity becomes
/// `diag(-targets[0], -targets[1])`. Each column is `(-P_12, P_11)` for
/// `P = sum - target`.
pub fn mc_to_schlesinger(result: &ConvolutionResult, targets: &[RatFunc; 2]) -> Result<SchlesingerSystem> {
    if result.dimension() != 2 || result.points.len() != 3 {
        return Err(Error::NotTwoDimensional(result.dimension()));
    }
    let sum = result.residue_at_infinity().scale(&RatFunc::from_int(result.residues[0].space(), -1));
    let mut cols = Vec::with_capacity(2);
    for e in targets {
        if !sum.verify_eigenvalue(e)? {
            return Err(Error::NotAnEigenvalue(e.to_string()));
        }
        cols.push(eigencolumn(&(&sum - &Matrix::scalar(2, e))));
    }
    let st = Matrix::from_cols(&cols)?;
    let residues: Vec<Matrix> = result.residues.iter().map(|a| a.conjugate(&st)).collect::<painleve_core::Result<_>>()?;
    let points: [RatFunc; 3] = result.points.clone().try_into().expect("three points");
    Ok(SchlesingerSystem::new(points, residues.try_into().expect("three residues"))?)
}

/// True when the characteristic polynomial of each matrix is
/// `prod (x - e)` over the matching candidate tuple.
pub fn residue_spectra(matrices: &[Matrix], candidates: &[Vec<RatFunc>]) -> Result<bool> {
    if matrices.len() != candidates.len() {
        return Ok(false);
    }
    for (m, c) in matrices.iter().zip(candidates) {
        if c.len() != m.rows() || m.char_poly()? != UPoly::from_roots(m.space(), c) {
            return Ok(false);
        }
    }
    Ok(true)
}
