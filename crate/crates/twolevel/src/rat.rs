//! Exact rational scalars and small dense linear algebra.
//!
//! All geometry in this crate runs over `num::BigRational` (always reduced,
//! positive denominator) and `num::BigInt`. The helpers here cover what the
//! polytope code needs: parsing/formatting of `"p/q"` strings, primitive
//! integer vectors, exact rank, and row reduction.

use crate::error::Error;
use crate::Result;
use num::bigint::Sign;
use num::{BigInt, BigRational, Integer, One, Signed, Zero};

/// Exact rational scalar.
pub type Rat = BigRational;
/// Arbitrary-precision integer.
pub type Int = BigInt;

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// Parse `"p/q"`, `"p"`, or a plain integer literal.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: Int = num
        .parse()
        .map_err(|_| Error::InvalidInput(format!("bad rational {s:?}")))?;
    let q: Int = den
        .parse()
        .map_err(|_| Error::InvalidInput(format!("bad rational {s:?}")))?;
    if q.is_zero() {
        return Err(Error::InvalidInput(format!("zero denominator in {s:?}")));
    }
    Ok(Rat::new(p, q))
}

/// Render as `"p"` or `"p/q"`.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Gcd of the absolute values of a slice, zero for an all-zero slice.
pub fn vec_gcd(v: &[Int]) -> Int {
    let mut g = Int::zero();
    for x in v {
        g = g.gcd(x);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Divide a vector by the gcd of its entries (no-op on the zero vector).
pub fn make_primitive(v: &mut [Int]) {
    let g = vec_gcd(v);
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in v.iter_mut() {
        *x /= &g;
    }
}

/// Flip signs so the first nonzero entry is positive. Returns true if flipped.
pub fn normalize_sign(v: &mut [Int]) -> bool {
    for x in v.iter() {
        match x.sign() {
            Sign::Plus => return false,
            Sign::Minus => {
                for y in v.iter_mut() {
                    *y = -std::mem::take(y);
                }
                return true;
            }
            Sign::NoSign => {}
        }
    }
    false
}

/// Scale a rational vector to a primitive integer vector (same direction).
pub fn clear_denoms(v: &[Rat]) -> Vec<Int> {
    let mut l = Int::one();
    for x in v {
        l = l.lcm(x.denom());
    }
    let mut out: Vec<Int> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    make_primitive(&mut out);
    out
}

pub fn dot_int(a: &[Int], b: &[Int]) -> Int {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Int::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

pub fn dot_int_rat(a: &[Int], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += Rat::from_integer(x.clone()) * y;
        }
    }
    acc
}

/// Exact rank of a rational matrix by Gaussian elimination.
pub fn rank_rat(rows: &[Vec<Rat>]) -> usize {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let f = &m[r][c] / &pivot;
                for k in c..cols {
                    let s = &m[rank][k] * &f;
                    m[r][k] -= s;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Exact rank of an integer matrix.
pub fn rank_int(rows: &[Vec<Int>]) -> usize {
    let rat_rows: Vec<Vec<Rat>> = rows
        .iter()
        .map(|r| r.iter().map(|x| Rat::from_integer(x.clone())).collect())
        .collect();
    rank_rat(&rat_rows)
}

/// Reduced row echelon form over the rationals, returned as primitive integer
/// rows with sign-normalized leading entries, sorted by pivot column.
pub fn rref_canonical(rows: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Rat>> = rows
        .iter()
        .map(|r| r.iter().map(|x| Rat::from_integer(x.clone())).collect())
        .collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for k in c..cols {
            m[rank][k] = &m[rank][k] / &pivot;
        }
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for k in c..cols {
                    let s = &m[rank][k] * &f;
                    m[r][k] -= s;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    m.truncate(rank);
    let mut out: Vec<Vec<Int>> = m
        .iter()
        .map(|r| {
            let mut v = clear_denoms(r);
            normalize_sign(&mut v);
            v
        })
        .collect();
    out.sort();
    out
}

/// Affine rank minus one: the dimension of the affine hull of `points`.
pub fn affine_dim(points: &[Vec<Rat>]) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let base = &points[0];
    let diffs: Vec<Vec<Rat>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    rank_rat(&diffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(format_rat(&parse_rat("3/6").unwrap()), "1/2");
        assert_eq!(format_rat(&parse_rat("-4/2").unwrap()), "-2");
        assert_eq!(format_rat(&parse_rat("7").unwrap()), "7");
        assert!(parse_rat("1/0").is_err());
    }

    #[test]
    fn primitive_and_sign() {
        let mut v = vec![Int::from(-4), Int::from(6), Int::from(-2)];
        make_primitive(&mut v);
        assert_eq!(v, vec![Int::from(-2), Int::from(3), Int::from(-1)]);
        normalize_sign(&mut v);
        assert_eq!(v, vec![Int::from(2), Int::from(-3), Int::from(1)]);
    }

    #[test]
    fn rank_of_singular_matrix() {
        let rows = vec![
            vec![rat_int(1), rat_int(2), rat_int(3)],
            vec![rat_int(2), rat_int(4), rat_int(6)],
            vec![rat_int(0), rat_int(1), rat_int(1)],
        ];
        assert_eq!(rank_rat(&rows), 2);
    }

    #[test]
    fn affine_dim_of_square() {
        let pts = vec![
            vec![rat_int(0), rat_int(0)],
            vec![rat_int(1), rat_int(0)],
            vec![rat_int(0), rat_int(1)],
            vec![rat_int(1), rat_int(1)],
        ];
        assert_eq!(affine_dim(&pts), 2);
    }
}
