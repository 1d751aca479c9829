//! Smith normal form over ℤ and the linear-algebra services built on it:
//! integer solving, kernel bases and image bases.
//!
//! The reduction is deterministic. At every step the pivot is the entry of
//! smallest nonzero absolute value in the remaining lower-right block, ties
//! broken by the lowest `(row, col)` in row-major order. The diagonal is
//! normalized to be nonnegative and to satisfy `d₁ | d₂ | …`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntegerMatrix;
use crate::error::{mismatch, Result};
use crate::report::CheckReport;

/// `u · m · v = d` with `u`, `v` unimodular and `d` in Smith normal form.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntegerMatrix,
    pub d: IntegerMatrix,
    pub v: IntegerMatrix,
    u_inv: IntegerMatrix,
    rank: usize,
}

/// Which transforms to accumulate. Kernels only need the right transform.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Track {
    pub left: bool,
    pub right: bool,
}

pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    reduce(m, Track { left: true, right: true })
}

pub(crate) fn reduce(m: &IntegerMatrix, track: Track) -> SmithForm {
    let rows = m.rows();
    let cols = m.cols();
    let mut a = m.clone();
    let (mut u, mut u_inv) = if track.left {
        (IntegerMatrix::identity(rows), IntegerMatrix::identity(rows))
    } else {
        (IntegerMatrix::zeros(0, 0), IntegerMatrix::zeros(0, 0))
    };
    let mut v = if track.right { IntegerMatrix::identity(cols) } else { IntegerMatrix::zeros(0, 0) };

    let mut rank = 0;
    for t in 0..rows.min(cols) {
        let mut exhausted = false;
        loop {
            let Some((pi, pj)) = find_pivot(&a, t) else {
                exhausted = true;
                break;
            };
            if pi != t {
                a.swap_rows(t, pi);
                if track.left {
                    u.swap_rows(t, pi);
                    u_inv.swap_cols(t, pi);
                }
            }
            if pj != t {
                a.swap_cols(t, pj);
                if track.right {
                    v.swap_cols(t, pj);
                }
            }

            let mut clean = true;
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = &a[(i, t)] / &a[(t, t)];
                if !q.is_zero() {
                    let neg_q = -&q;
                    a.add_row_multiple(i, t, &neg_q);
                    if track.left {
                        u.add_row_multiple(i, t, &neg_q);
                        u_inv.add_col_multiple(t, i, &q);
                    }
                }
                if !a[(i, t)].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = &a[(t, j)] / &a[(t, t)];
                if !q.is_zero() {
                    let neg_q = -&q;
                    a.add_col_multiple(j, t, &neg_q);
                    if track.right {
                        v.add_col_multiple(j, t, &neg_q);
                    }
                }
                if !a[(t, j)].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }

            // Enforce divisibility: fold an offending row into the pivot row and go again.
            let p = a[(t, t)].clone();
            if p.abs().is_one() {
                break;
            }
            let offending = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[(i, j)].is_multiple_of(&p)));
            if let Some(i) = offending {
                let one = BigInt::one();
                a.add_row_multiple(t, i, &one);
                if track.left {
                    u.add_row_multiple(t, i, &one);
                    u_inv.add_col_multiple(i, t, &-one);
                }
                continue;
            }
            break;
        }
        if exhausted {
            break;
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            if track.left {
                u.negate_row(t);
                u_inv.negate_col(t);
            }
        }
        rank = t + 1;
    }

    SmithForm { u, d: a, v, u_inv, rank }
}

fn find_pivot(a: &IntegerMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    let mut best_abs = BigInt::zero();
    for i in t..a.rows() {
        let row = a.row(i);
        for (j, x) in row.iter().enumerate().skip(t) {
            if x.is_zero() {
                continue;
            }
            let ax = x.abs();
            if best.is_none() || ax < best_abs {
                let unit = ax.is_one();
                best = Some((i, j));
                best_abs = ax;
                if unit {
                    return best;
                }
            }
        }
    }
    best
}

impl SmithForm {
    /// Checks `u · m · v = d`, `det u = ±1`, `det v = ±1`, that `d` is
    /// diagonal and nonnegative, and that `d₁ | d₂ | …`.
    pub fn verify(&self, m: &IntegerMatrix) -> CheckReport {
        let mut r = CheckReport::new();
        let product = self.u.mul(m).and_then(|um| um.mul(&self.v));
        r.record("factorization", product.as_ref() == Ok(&self.d));
        let unimodular = |x: &IntegerMatrix| x.determinant().map(|d| d.abs().is_one()).unwrap_or(false);
        r.record("unimodular", unimodular(&self.u) && unimodular(&self.v));
        let diagonal = (0..self.d.rows()).all(|i| {
            (0..self.d.cols()).all(|j| if i == j { !self.d[(i, j)].is_negative() } else { self.d[(i, j)].is_zero() })
        });
        let entries: Vec<BigInt> = (0..self.d.rows().min(self.d.cols())).map(|i| self.d[(i, i)].clone()).collect();
        let divides = entries.windows(2).all(|w| if w[0].is_zero() { w[1].is_zero() } else { (&w[1] % &w[0]).is_zero() });
        r.record("divisibility", diagonal && divides);
        r
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Nonzero diagonal entries `d₁ | d₂ | … | d_rank`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.d[(i, i)].clone()).collect()
    }

    /// Inverse of the left transform.
    pub fn u_inverse(&self) -> &IntegerMatrix {
        &self.u_inv
    }

    /// Basis of the integer kernel `{x : m x = 0}` as matrix columns.
    pub fn kernel_basis(&self) -> IntegerMatrix {
        let cols: Vec<usize> = (self.rank..self.v.cols()).collect();
        self.v.select_columns(&cols)
    }

    /// Basis of the column lattice of `m`.
    pub fn image_basis(&self) -> IntegerMatrix {
        let mut b = IntegerMatrix::zeros(self.u_inv.rows(), self.rank);
        for j in 0..self.rank {
            let dj = &self.d[(j, j)];
            for i in 0..self.u_inv.rows() {
                let x = &self.u_inv[(i, j)];
                if !x.is_zero() {
                    b[(i, j)] = x * dj;
                }
            }
        }
        b
    }

    /// An integer solution of `m x = b`, if one exists.
    pub fn solve(&self, b: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
        if b.len() != self.u.cols() {
            return Err(mismatch!("right-hand side of length {} for {} equations", b.len(), self.u.cols()));
        }
        let c = self.u.mul_vec(b)?;
        if c[self.rank..].iter().any(|x| !x.is_zero()) {
            return Ok(None);
        }
        let mut y = vec![BigInt::zero(); self.v.cols()];
        for i in 0..self.rank {
            let (q, r) = c[i].div_rem(&self.d[(i, i)]);
            if !r.is_zero() {
                return Ok(None);
            }
            y[i] = q;
        }
        Ok(Some(self.v.mul_vec(&y)?))
    }
}

impl SmithForm {
    /// Solves `m X = B` column by column; `None` if some column has no integer solution.
    ///
    /// Products are taken as `(Bᵀ Uᵀ)ᵀ` so that sparse right-hand sides stay cheap.
    pub fn solve_all(&self, b: &IntegerMatrix) -> Result<Option<IntegerMatrix>> {
        if b.rows() != self.u.cols() {
            return Err(mismatch!("right-hand sides have {} rows for {} equations", b.rows(), self.u.cols()));
        }
        let bt = b.transpose();
        let ct = bt.mul(&self.u.transpose())?;
        let mut yt = IntegerMatrix::zeros(b.cols(), self.v.cols());
        for j in 0..b.cols() {
            let row = ct.row(j);
            if row[self.rank..].iter().any(|x| !x.is_zero()) {
                return Ok(None);
            }
            for i in 0..self.rank {
                if row[i].is_zero() {
                    continue;
                }
                let (q, r) = row[i].div_rem(&self.d[(i, i)]);
                if !r.is_zero() {
                    return Ok(None);
                }
                yt[(j, i)] = q;
            }
        }
        Ok(Some(yt.mul(&self.v.transpose())?.transpose()))
    }
}

/// Basis of the kernel lattice of `m`.
pub fn kernel_basis(m: &IntegerMatrix) -> IntegerMatrix {
    // Zero rows impose nothing; dropping them keeps the reduction small.
    let keep: Vec<usize> = (0..m.rows()).filter(|&i| m.row(i).iter().any(|x| !x.is_zero())).collect();
    let trimmed = if keep.len() == m.rows() { m.clone() } else { m.select_rows(&keep) };
    reduce(&trimmed, Track { left: false, right: true }).kernel_basis()
}

/// Basis of the lattice spanned by the columns of `m`.
pub fn column_basis(m: &IntegerMatrix) -> IntegerMatrix {
    let nonzero = m.without_zero_columns();
    if nonzero.cols() == 0 {
        return IntegerMatrix::zeros(m.rows(), 0);
    }
    reduce(&nonzero, Track { left: true, right: false }).image_basis()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &IntegerMatrix) -> SmithForm {
        let s = smith_normal_form(m);
        assert_eq!(s.u.mul(m).unwrap().mul(&s.v).unwrap(), s.d);
        assert_eq!(s.u.mul(&s.u_inv).unwrap(), IntegerMatrix::identity(m.rows()));
        s
    }

    #[test]
    fn identity_case() {
        let s = check(&IntegerMatrix::from_rows(&[[1]], 1).unwrap());
        assert_eq!(s.d, IntegerMatrix::from_rows(&[[1]], 1).unwrap());
    }

    #[test]
    fn already_reduced() {
        let m = IntegerMatrix::from_rows(&[[2, 0], [0, 4]], 2).unwrap();
        assert_eq!(check(&m).d, m);
    }

    #[test]
    fn two_by_two_derived() {
        // gcd of entries = 2, |det| = 8, so d = (2, 4).
        let m = IntegerMatrix::from_rows(&[[2, 4], [6, 8]], 2).unwrap();
        let s = check(&m);
        assert_eq!(s.d, IntegerMatrix::from_rows(&[[2, 0], [0, 4]], 2).unwrap());
    }

    #[test]
    fn divisibility_is_enforced() {
        // diag(2, 3) is diagonal but not Smith; the form is diag(1, 6).
        let m = IntegerMatrix::from_rows(&[[2, 0], [0, 3]], 2).unwrap();
        assert_eq!(check(&m).diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn kernel_and_solve() {
        let m = IntegerMatrix::from_rows(&[[1, 1]], 2).unwrap();
        let k = kernel_basis(&m);
        assert_eq!(k.cols(), 1);
        assert!(m.mul(&k).unwrap().is_zero());
        let s = smith_normal_form(&IntegerMatrix::from_rows(&[[2]], 1).unwrap());
        assert!(s.solve(&[BigInt::from(3)]).unwrap().is_none());
        assert_eq!(s.solve(&[BigInt::from(4)]).unwrap(), Some(vec![BigInt::from(2)]));
    }

    #[test]
    fn empty_shapes() {
        let m = IntegerMatrix::zeros(0, 3);
        assert_eq!(kernel_basis(&m).cols(), 3);
        let m = IntegerMatrix::zeros(3, 0);
        let s = check(&m);
        assert_eq!(s.rank(), 0);
        assert_eq!(column_basis(&m).cols(), 0);
    }
}
