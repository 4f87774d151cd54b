//! Exact linear algebra on small dense matrices.
//!
//! Forward elimination is fraction-free (Bareiss one-step), so intermediate
//! values stay in the same ring as the input and nothing is ever rounded.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

struct Echelon<S> {
    rows: Vec<Vec<S>>,
    /// Pivot column per eliminated row, in order.
    pivots: Vec<usize>,
}

fn eliminate<S: Scalar>(mut rows: Vec<Vec<S>>) -> Echelon<S> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut prev_pivot = S::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        for i in r + 1..nrows {
            for j in c + 1..ncols {
                let num = rows[r][c].clone() * rows[i][j].clone()
                    - rows[i][c].clone() * rows[r][j].clone();
                // Exact division by the previous pivot (Bareiss).
                rows[i][j] = num / prev_pivot.clone();
            }
            rows[i][c] = S::zero();
        }
        prev_pivot = rows[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    Echelon { rows, pivots }
}

fn check_rectangular<S>(matrix: &[Vec<S>]) -> Result<usize> {
    let ncols = matrix.first().map_or(0, |r| r.len());
    if matrix.iter().any(|r| r.len() != ncols) {
        return Err(Error::RaggedMatrix);
    }
    Ok(ncols)
}

/// Exact row rank, and a solution of `matrix * x = rhs` when one exists.
///
/// An inconsistent system is not a failure: the rank is still returned and
/// the solution slot is `None`. Underdetermined systems get one solution
/// with all free variables set to zero.
pub fn rank_and_solve<S: Scalar>(
    matrix: &[Vec<S>],
    rhs: Option<&[S]>,
) -> Result<(usize, Option<Vec<S>>)> {
    let ncols = check_rectangular(matrix)?;
    if let Some(b) = rhs {
        if b.len() != matrix.len() {
            return Err(Error::DimensionMismatch {
                expected: matrix.len(),
                got: b.len(),
            });
        }
    }
    let mut rows: Vec<Vec<S>> = matrix.to_vec();
    if let Some(b) = rhs {
        for (row, bi) in rows.iter_mut().zip(b) {
            row.push(bi.clone());
        }
    }
    let ech = eliminate(rows);
    let rank = ech.pivots.iter().filter(|&&c| c < ncols).count();
    if rhs.is_none() {
        return Ok((rank, None));
    }
    // A pivot in the augmented column marks an inconsistent system.
    if ech.pivots.iter().any(|&c| c == ncols) {
        return Ok((rank, None));
    }
    let mut x = vec![S::zero(); ncols];
    for (i, &pc) in ech.pivots.iter().enumerate().rev() {
        let mut acc = ech.rows[i][ncols].clone();
        for j in pc + 1..ncols {
            acc = acc - ech.rows[i][j].clone() * x[j].clone();
        }
        x[pc] = acc / ech.rows[i][pc].clone();
    }
    Ok((rank, Some(x)))
}

/// Exact row rank.
pub fn rank<S: Scalar>(matrix: &[Vec<S>]) -> Result<usize> {
    Ok(rank_and_solve(matrix, None)?.0)
}

/// Basis of the right nullspace `{ x : matrix * x = 0 }`.
pub fn nullspace_basis<S: Scalar>(matrix: &[Vec<S>]) -> Result<Vec<Vec<S>>> {
    let ncols = check_rectangular(matrix)?;
    let ech = eliminate(matrix.to_vec());
    let pivot_cols: Vec<usize> = ech.pivots.clone();
    let free_cols: Vec<usize> = (0..ncols).filter(|c| !pivot_cols.contains(c)).collect();
    let mut basis = Vec::with_capacity(free_cols.len());
    for &f in &free_cols {
        let mut x = vec![S::zero(); ncols];
        x[f] = S::one();
        for (i, &pc) in pivot_cols.iter().enumerate().rev() {
            let mut acc = S::zero();
            for j in pc + 1..ncols {
                acc = acc + ech.rows[i][j].clone() * x[j].clone();
            }
            x[pc] = -acc / ech.rows[i][pc].clone();
        }
        basis.push(x);
    }
    Ok(basis)
}
