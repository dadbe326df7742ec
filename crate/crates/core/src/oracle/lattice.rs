//! Exact integer kernel behind the oracle.
//!
//! Rational input is scaled onto a common-denominator integer lattice; every
//! operation after that is checked `i64`/`i128` arithmetic, so an overflow is
//! an error and never a wrong answer.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::ExactPoint;
use crate::Error;

pub(crate) type IVec = Vec<i64>;

pub(crate) fn checked_i64(v: i128) -> Result<i64, Error> {
    i64::try_from(v).map_err(|_| Error::Overflow)
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> Result<i64, Error> {
    let mut acc: i128 = 0;
    for (x, y) in a.iter().zip(b) {
        acc += *x as i128 * *y as i128;
    }
    checked_i64(acc)
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

/// Divides a vector by the gcd of its entries (sign preserved).
pub(crate) fn make_primitive(v: &mut [i64]) {
    let g = v.iter().fold(0i64, |g, &x| gcd_i64(g, x));
    if g > 1 {
        for x in v.iter_mut() {
            *x /= g;
        }
    }
}

/// Scales all points by the lcm of their denominators.
pub(crate) fn to_lattice(points: &[ExactPoint]) -> Result<Vec<IVec>, Error> {
    let mut lcm = BigInt::one();
    for p in points {
        for c in &p.coords {
            lcm = lcm.lcm(c.denom());
        }
    }
    points
        .iter()
        .map(|p| {
            p.coords
                .iter()
                .map(|c| {
                    let scaled = c.numer() * (&lcm / c.denom());
                    scaled.to_i64().ok_or(Error::Overflow)
                })
                .collect()
        })
        .collect()
}

/// Integer row echelon form of the difference vectors `p_i - p_0`.
pub(crate) struct AffineFrame {
    /// Echelon basis of the direction space, one primitive row per pivot.
    pub basis: Vec<IVec>,
    pub pivots: Vec<usize>,
}

impl AffineFrame {
    pub fn new(points: &[IVec]) -> Result<Self, Error> {
        let mut basis: Vec<IVec> = Vec::new();
        let mut pivots: Vec<usize> = Vec::new();
        let Some(origin) = points.first() else {
            return Ok(Self { basis, pivots });
        };
        for p in &points[1..] {
            let mut v: IVec = p.iter().zip(origin).map(|(a, b)| a - b).collect();
            reduce_against(&mut v, &basis, &pivots)?;
            if let Some(col) = v.iter().position(|&x| x != 0) {
                make_primitive(&mut v);
                if v[col] < 0 {
                    v.iter_mut().for_each(|x| *x = -*x);
                }
                // Keep rows sorted by pivot column for a clean echelon form.
                let at = pivots.partition_point(|&c| c < col);
                pivots.insert(at, col);
                basis.insert(at, v);
            }
        }
        Ok(Self { basis, pivots })
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }
}

fn reduce_against(v: &mut IVec, basis: &[IVec], pivots: &[usize]) -> Result<(), Error> {
    for (row, &col) in basis.iter().zip(pivots) {
        if v[col] == 0 {
            continue;
        }
        let a = row[col];
        let b = v[col];
        let g = gcd_i64(a, b);
        let (fa, fb) = (a / g, b / g);
        for (x, r) in v.iter_mut().zip(row) {
            *x = checked_i64(*x as i128 * fa as i128 - *r as i128 * fb as i128)?;
        }
        make_primitive(v);
    }
    Ok(())
}

/// A facet of a full-dimensional lattice point set: `<normal, x> <= rhs`.
pub(crate) struct LatticeFacet {
    pub normal: IVec,
    #[cfg_attr(not(test), allow(dead_code))]
    pub rhs: i64,
    pub incident: Vec<usize>,
}

/// Enumerates all facets of `conv(points)`, which must be full-dimensional in
/// `Z^n`, by examining every hyperplane spanned by `n` of the points.
///
/// The search walks `n`-subsets depth-first while maintaining an integer
/// basis of the orthogonal complement of the chosen differences; branches
/// whose differences become dependent are cut.
pub(crate) fn full_dim_facets(points: &[IVec], n: usize) -> Result<Vec<LatticeFacet>, Error> {
    let mut search = FacetSearch {
        points,
        n,
        found: Vec::new(),
        seen: std::collections::HashSet::new(),
    };
    if n == 0 {
        return Ok(Vec::new());
    }
    let identity: Vec<IVec> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    for base in 0..points.len() {
        search.descend(base, base, 0, identity.clone())?;
    }
    let mut found = search.found;
    found.sort_by(|a, b| a.normal.cmp(&b.normal));
    Ok(found)
}

struct FacetSearch<'a> {
    points: &'a [IVec],
    n: usize,
    found: Vec<LatticeFacet>,
    seen: std::collections::HashSet<IVec>,
}

impl FacetSearch<'_> {
    fn descend(
        &mut self,
        base: usize,
        last: usize,
        depth: usize,
        complement: Vec<IVec>,
    ) -> Result<(), Error> {
        if depth + 1 == self.n {
            debug_assert_eq!(complement.len(), 1);
            return self.test_hyperplane(base, &complement[0]);
        }
        for next in last + 1..self.points.len() {
            let diff: IVec = self.points[next]
                .iter()
                .zip(&self.points[base])
                .map(|(a, b)| a - b)
                .collect();
            if let Some(reduced) = restrict_complement(&complement, &diff)? {
                self.descend(base, next, depth + 1, reduced)?;
            }
        }
        Ok(())
    }

    fn test_hyperplane(&mut self, base: usize, c: &[i64]) -> Result<(), Error> {
        let level = dot(c, &self.points[base])?;
        let (mut above, mut below) = (false, false);
        for p in self.points {
            let v = dot(c, p)?;
            above |= v > level;
            below |= v < level;
            if above && below {
                return Ok(());
            }
        }
        let sign = if above { -1 } else { 1 };
        let normal: IVec = c.iter().map(|x| x * sign).collect();
        if self.seen.contains(&normal) {
            return Ok(());
        }
        let rhs = level * sign;
        let mut incident = Vec::new();
        for (i, p) in self.points.iter().enumerate() {
            if dot(&normal, p)? == rhs {
                incident.push(i);
            }
        }
        self.seen.insert(normal.clone());
        self.found.push(LatticeFacet {
            normal,
            rhs,
            incident,
        });
        Ok(())
    }
}

/// Intersects the span of `complement` with `diff^perp`. Returns `None` when
/// `diff` is already orthogonal to all of it (the new point is dependent).
fn restrict_complement(complement: &[IVec], diff: &[i64]) -> Result<Option<Vec<IVec>>, Error> {
    let vals: Vec<i64> = complement
        .iter()
        .map(|c| dot(c, diff))
        .collect::<Result<_, _>>()?;
    let Some(pivot) = vals.iter().position(|&v| v != 0) else {
        return Ok(None);
    };
    let pv = vals[pivot];
    let mut out = Vec::with_capacity(complement.len() - 1);
    for (t, c) in complement.iter().enumerate() {
        if t == pivot {
            continue;
        }
        if vals[t] == 0 {
            out.push(c.clone());
            continue;
        }
        let g = gcd_i64(pv, vals[t]);
        let (fa, fb) = ((pv / g) as i128, (vals[t] / g) as i128);
        let mut v: IVec = c
            .iter()
            .zip(&complement[pivot])
            .map(|(&x, &y)| checked_i64(x as i128 * fa - y as i128 * fb))
            .collect::<Result<_, _>>()?;
        make_primitive(&mut v);
        out.push(v);
    }
    Ok(Some(out))
}

/// Solves the Gram system that lifts a functional given on pivot
/// coordinates back to a normal lying in the direction space.
pub(crate) fn lift_normal(frame: &AffineFrame, projected: &[i64]) -> Result<IVec, Error> {
    use num_rational::BigRational;
    let n = frame.rank();
    let mut m: Vec<Vec<BigRational>> = Vec::with_capacity(n);
    for s in 0..n {
        let mut row: Vec<BigRational> = (0..n)
            .map(|t| Ok(BigRational::from_integer(BigInt::from(dot(&frame.basis[s], &frame.basis[t])?))))
            .collect::<Result<_, Error>>()?;
        let rhs: i128 = frame
            .pivots
            .iter()
            .zip(projected)
            .map(|(&col, &c)| frame.basis[s][col] as i128 * c as i128)
            .sum();
        row.push(BigRational::from_integer(BigInt::from(rhs)));
        m.push(row);
    }
    let mu = solve_square(m).ok_or_else(|| Error::Degenerate("singular Gram matrix".into()))?;
    let d = frame.basis.first().map_or(0, Vec::len);
    let mut normal: Vec<BigRational> = vec![BigRational::zero(); d];
    for (coef, row) in mu.iter().zip(&frame.basis) {
        for (x, &r) in normal.iter_mut().zip(row) {
            *x += coef * BigRational::from_integer(BigInt::from(r));
        }
    }
    let lcm = normal
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut out: IVec = normal
        .iter()
        .map(|x| (x.numer() * (&lcm / x.denom())).to_i64().ok_or(Error::Overflow))
        .collect::<Result<_, _>>()?;
    make_primitive(&mut out);
    Ok(out)
}

/// Gaussian elimination on an augmented `n x (n+1)` rational matrix.
pub(crate) fn solve_square(
    mut m: Vec<Vec<num_rational::BigRational>>,
) -> Option<Vec<num_rational::BigRational>> {
    let n = m.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=n {
                    let sub = &f * &m[col][c];
                    m[r][c] -= sub;
                }
            }
        }
    }
    Some(m.into_iter().map(|mut row| row.pop().unwrap()).collect())
}

/// Determinant of a square rational matrix by elimination.
pub(crate) fn rational_det(mut m: Vec<Vec<num_rational::BigRational>>) -> num_rational::BigRational {
    use num_rational::BigRational;
    let n = m.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if piv != col {
            m.swap(col, piv);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if !m[r][col].is_zero() {
                let f = &m[r][col] / &p;
                for c in col..n {
                    let sub = &f * &m[col][c];
                    m[r][c] -= sub;
                }
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cube(d: usize) -> Vec<IVec> {
        (0..1u64 << d)
            .map(|m| (0..d).map(|i| ((m >> i) & 1) as i64).collect())
            .collect()
    }

    #[test]
    fn frame_rank_of_cube_and_segment() {
        assert_eq!(AffineFrame::new(&cube(3)).unwrap().rank(), 3);
        let seg = vec![vec![0, 0, 0], vec![1, 1, 1], vec![2, 2, 2]];
        let f = AffineFrame::new(&seg).unwrap();
        assert_eq!(f.rank(), 1);
        assert_eq!(f.basis[0], vec![1, 1, 1]);
    }

    #[test]
    fn cube_facets_are_coordinate_planes() {
        let facets = full_dim_facets(&cube(3), 3).unwrap();
        assert_eq!(facets.len(), 6);
        for f in &facets {
            assert_eq!(f.incident.len(), 4);
            assert_eq!(f.normal.iter().filter(|&&x| x != 0).count(), 1);
        }
    }

    #[test]
    fn interval_facets_are_endpoints() {
        let pts = vec![vec![3], vec![-1], vec![0]];
        let facets = full_dim_facets(&pts, 1).unwrap();
        let mut got: Vec<(IVec, i64)> = facets.iter().map(|f| (f.normal.clone(), f.rhs)).collect();
        got.sort();
        assert_eq!(got, vec![(vec![-1], 1), (vec![1], 3)]);
    }

    #[test]
    fn lifted_normal_lies_in_direction_space() {
        // Triangle in the plane x + y + z = 1.
        let pts = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        let frame = AffineFrame::new(&pts).unwrap();
        assert_eq!(frame.pivots, vec![0, 1]);
        let lifted = lift_normal(&frame, &[1, 0]).unwrap();
        assert_eq!(lifted.iter().sum::<i64>(), 0);
        assert_eq!(lifted, vec![2, -1, -1]);
    }
}
