//! Phase-one simplex with integer-preserving pivots.
//!
//! Every tableau entry stays an integer multiple of the current pivot
//! determinant, and the division in each update is exact.

use super::lattice::IVec;
use crate::Error;

/// Decides whether `x` lies in `conv(ys)`.
pub(crate) fn in_convex_hull(x: &[i64], ys: &[&IVec]) -> Result<bool, Error> {
    if ys.is_empty() {
        return Ok(false);
    }
    let dim = x.len();
    let n = ys.len();
    let m = dim + 1;
    // Columns: lambda_0..lambda_{n-1}, artificial_0..artificial_{m-1}, rhs.
    let width = n + m + 1;
    let rhs = width - 1;
    let mut t: Vec<Vec<i128>> = Vec::with_capacity(m + 1);
    for r in 0..m {
        let mut row = vec![0i128; width];
        for (j, y) in ys.iter().enumerate() {
            row[j] = if r < dim { y[r] as i128 } else { 1 };
        }
        row[rhs] = if r < dim { x[r] as i128 } else { 1 };
        if row[rhs] < 0 {
            for v in row.iter_mut() {
                *v = -*v;
            }
        }
        row[n + r] = 1;
        t.push(row);
    }
    // Objective: minimise the artificial sum, written as reduced costs.
    let mut obj = vec![0i128; width];
    for row in &t {
        for j in 0..n {
            obj[j] -= row[j];
        }
        obj[rhs] -= row[rhs];
    }
    t.push(obj);
    let mut basis: Vec<usize> = (n..n + m).collect();
    let mut denom: i128 = 1;

    loop {
        let obj = &t[m];
        // Bland: lowest-index column with negative reduced cost.
        let Some(col) = (0..n + m).find(|&j| obj[j] < 0) else {
            break;
        };
        let mut leave: Option<usize> = None;
        for r in 0..m {
            if t[r][col] <= 0 {
                continue;
            }
            leave = match leave {
                None => Some(r),
                Some(best) => {
                    // Compare rhs_r / a_r with rhs_best / a_best.
                    let lhs = mul(t[r][rhs], t[best][col])?;
                    let rhs_v = mul(t[best][rhs], t[r][col])?;
                    if lhs < rhs_v || (lhs == rhs_v && basis[r] < basis[best]) {
                        Some(r)
                    } else {
                        Some(best)
                    }
                }
            };
        }
        let Some(prow) = leave else {
            // Unbounded is impossible for a phase-one objective bounded by 0.
            return Err(Error::Degenerate("unbounded phase-one program".into()));
        };
        let p = t[prow][col];
        let pivot_row = t[prow].clone();
        for (r, row) in t.iter_mut().enumerate() {
            if r == prow {
                continue;
            }
            let f = row[col];
            for (v, &pr) in row.iter_mut().zip(&pivot_row) {
                let num = sub(mul(*v, p)?, mul(f, pr)?)?;
                debug_assert_eq!(num % denom, 0);
                *v = num / denom;
            }
        }
        denom = p;
        basis[prow] = col;
    }
    // The objective row holds -(artificial sum) scaled by denom.
    Ok(t[m][rhs] == 0)
}

fn mul(a: i128, b: i128) -> Result<i128, Error> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

fn sub(a: i128, b: i128) -> Result<i128, Error> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hull(x: &[i64], ys: &[IVec]) -> bool {
        let refs: Vec<&IVec> = ys.iter().collect();
        in_convex_hull(x, &refs).unwrap()
    }

    #[test]
    fn square_membership() {
        let sq = vec![vec![0, 0], vec![2, 0], vec![0, 2], vec![2, 2]];
        assert!(hull(&[1, 1], &sq));
        assert!(hull(&[2, 1], &sq));
        assert!(hull(&[0, 0], &sq));
        assert!(!hull(&[3, 1], &sq));
        assert!(!hull(&[-1, 0], &sq));
    }

    #[test]
    fn degenerate_lower_dimensional_cloud() {
        // Points on the line x = y inside R^2.
        let line = vec![vec![0, 0], vec![4, 4]];
        assert!(hull(&[2, 2], &line));
        assert!(!hull(&[2, 3], &line));
        assert!(!hull(&[5, 5], &line));
    }

    #[test]
    fn empty_hull_contains_nothing() {
        assert!(!in_convex_hull(&[0], &[]).unwrap());
    }
}
