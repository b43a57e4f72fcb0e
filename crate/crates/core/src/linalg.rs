//! Exact rational linear algebra on the small dense matrices that show up in
//! root-system work: null spaces, linear solves, and primitive integer null
//! vectors. Everything runs over `BigRational`; no floating point.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

/// Rational from an integer.
pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Rational p/q.
pub fn qr(p: i64, q: i64) -> Q {
    Q::new(BigInt::from(p), BigInt::from(q))
}

/// Row-reduce `m` in place (Gauss-Jordan). Returns the pivot column of each
/// pivot row, in order.
fn rref(m: &mut [Vec<Q>]) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return vec![];
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = &*x / &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let sub = &f * &m[r][j];
                    m[i][j] = &m[i][j] - sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

/// Basis of the right null space of `a` (solutions of `a x = 0`).
pub fn null_space(a: &[Vec<i64>]) -> Vec<Vec<Q>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<Q>> = a.iter().map(|r| r.iter().map(|&x| qi(x)).collect()).collect();
    let pivots = rref(&mut m);
    let mut basis = Vec::new();
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    for &f in &free {
        let mut v = vec![Q::zero(); cols];
        v[f] = Q::one();
        for (pr, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[pr][f].clone();
        }
        basis.push(v);
    }
    basis
}

/// Solve `a x = b` over the rationals. Returns one particular solution, or
/// `None` when the system is inconsistent.
pub fn solve(a: &[Vec<i64>], b: &[Q]) -> Option<Vec<Q>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut row: Vec<Q> = r.iter().map(|&x| qi(x)).collect();
            row.push(bi.clone());
            row
        })
        .collect();
    let pivots = rref(&mut m);
    // Inconsistent iff some pivot landed in the augmented column.
    if pivots.contains(&cols) {
        return None;
    }
    let mut x = vec![Q::zero(); cols];
    for (pr, &pc) in pivots.iter().enumerate() {
        x[pc] = m[pr][cols].clone();
    }
    Some(x)
}

/// Scale a rational vector to a primitive integer vector (coprime entries,
/// first nonzero entry positive). Panics on the zero vector.
pub fn primitive_integer(v: &[Q]) -> Vec<BigInt> {
    assert!(v.iter().any(|x| !x.is_zero()), "zero vector has no primitive form");
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * &lcm / x.denom()).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    let mut out: Vec<BigInt> = ints.iter().map(|x| x / &g).collect();
    if let Some(first) = out.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in out.iter_mut() {
                *x = -x.clone();
            }
        }
    }
    out
}

/// Matrix-vector product `a v` with rational `v`.
pub fn mat_vec(a: &[Vec<i64>], v: &[Q]) -> Vec<Q> {
    a.iter()
        .map(|row| {
            let mut acc = Q::zero();
            for (aij, vj) in row.iter().zip(v) {
                if *aij != 0 && !vj.is_zero() {
                    acc += qi(*aij) * vj;
                }
            }
            acc
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn null_space_of_affine_a1() {
        let a = vec![vec![2, -2], vec![-2, 2]];
        let ns = null_space(&a);
        assert_eq!(ns.len(), 1);
        let k = primitive_integer(&ns[0]);
        assert_eq!(k, vec![BigInt::from(1), BigInt::from(1)]);
    }

    #[test]
    fn solve_inconsistent() {
        let a = vec![vec![1, 1], vec![1, 1]];
        assert!(solve(&a, &[qi(0), qi(1)]).is_none());
        let x = solve(&a, &[qi(3), qi(3)]).unwrap();
        assert_eq!(x[0].clone() + x[1].clone(), qi(3));
    }

    #[test]
    fn primitive_scaling() {
        let v = vec![qr(2, 3), qr(4, 3), qi(2)];
        let p = primitive_integer(&v);
        assert_eq!(p, vec![BigInt::from(1), BigInt::from(2), BigInt::from(3)]);
    }
}
