//! Incremental double description over exact integers.
//!
//! Computes a minimal generator description (lineality basis plus extreme
//! rays) of a polyhedral cone `K = { y : r_j . y <= 0 }` given by integer
//! constraint rows. Constraints are inserted one at a time; rays carry the
//! bitset of constraints they satisfy with equality, and new rays are formed
//! only from adjacent pairs (combinatorial adjacency test). All vectors are
//! kept primitive, so intermediate coefficients stay small.
//!
//! Both facet enumeration (on the polar cone of a vertex set) and vertex
//! enumeration (on the homogenization of an inequality system) in
//! `polytope` reduce to this routine.

use crate::bits::BitSet;
use crate::rat::{dot_int, make_primitive, Int};
use num::Signed;
use num::Zero;

struct Ray {
    v: Vec<Int>,
    zeros: BitSet,
}

/// Minimal generator description of a cone: `span(lineality) + cone(rays)`.
pub struct ConeGenerators {
    pub lineality: Vec<Vec<Int>>,
    pub rays: Vec<Vec<Int>>,
}

/// Run double description on `rows` (each of length `n`), in the given order.
///
/// The caller is responsible for ordering the rows deterministically;
/// geometry code sorts them lexicographically first.
pub fn dd_cone(rows: &[Vec<Int>], n: usize) -> ConeGenerators {
    // Duplicate rows are legal but wasteful; drop exact repeats.
    let mut seen: std::collections::HashSet<&[Int]> = std::collections::HashSet::new();
    let rows: Vec<&Vec<Int>> = rows.iter().filter(|r| seen.insert(r.as_slice())).collect();
    let m = rows.len();

    let mut lineality: Vec<Vec<Int>> = (0..n)
        .map(|i| {
            let mut e = vec![Int::zero(); n];
            e[i] = Int::from(1);
            e
        })
        .collect();
    let mut rays: Vec<Ray> = Vec::new();

    for (ci, row) in rows.iter().enumerate() {
        let lin_dots: Vec<Int> = lineality.iter().map(|l| dot_int(row, l)).collect();
        if let Some(k) = lin_dots.iter().position(|d| !d.is_zero()) {
            // Lineality reduction: one lineality vector leaves the hyperplane
            // and becomes a ray; everything else is projected onto it.
            let mut l = lineality.remove(k);
            let mut dl = lin_dots[k].clone();
            if dl.is_positive() {
                for x in l.iter_mut() {
                    *x = -std::mem::take(x);
                }
                dl = -dl;
            }
            for (j, other) in lineality.iter_mut().enumerate() {
                let jj = if j < k { j } else { j + 1 };
                let dj = &lin_dots[jj];
                if !dj.is_zero() {
                    for (x, y) in other.iter_mut().zip(&l) {
                        *x = &*x * &dl - dj * y;
                    }
                    make_primitive(other);
                }
            }
            for ray in rays.iter_mut() {
                let dr = dot_int(row, &ray.v);
                if !dr.is_zero() {
                    // alpha*ray + beta*l with alpha = -dl > 0 lands on the
                    // hyperplane and keeps the ray's previous tight set.
                    for (x, y) in ray.v.iter_mut().zip(&l) {
                        *x = &*x * &(-&dl) + &dr * y;
                    }
                    make_primitive(&mut ray.v);
                }
                ray.zeros.set(ci);
            }
            let mut zeros = BitSet::new(m);
            for j in 0..ci {
                zeros.set(j);
            }
            rays.push(Ray { v: l, zeros });
            continue;
        }

        let dots: Vec<Int> = rays.iter().map(|r| dot_int(row, &r.v)).collect();
        if dots.iter().all(|d| !d.is_positive()) {
            for (ray, d) in rays.iter_mut().zip(&dots) {
                if d.is_zero() {
                    ray.zeros.set(ci);
                }
            }
            continue;
        }

        let pos: Vec<usize> = (0..rays.len()).filter(|&i| dots[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| dots[i].is_negative()).collect();
        let quotient_dim = n - lineality.len();
        let mut new_rays: Vec<Ray> = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let z = rays[p].zeros.and(&rays[q].zeros);
                if z.count() + 2 < quotient_dim {
                    continue;
                }
                let blocked = rays.iter().enumerate().any(|(i, r)| {
                    i != p && i != q && z.subset_of(&r.zeros)
                });
                if blocked {
                    continue;
                }
                let mut v: Vec<Int> = rays[p]
                    .v
                    .iter()
                    .zip(&rays[q].v)
                    .map(|(vp, vq)| &dots[p] * vq - &dots[q] * vp)
                    .collect();
                make_primitive(&mut v);
                let mut zeros = z;
                zeros.set(ci);
                new_rays.push(Ray { v, zeros });
            }
        }
        let mut kept: Vec<Ray> = Vec::new();
        for (i, ray) in rays.into_iter().enumerate() {
            if dots[i].is_positive() {
                continue;
            }
            let mut ray = ray;
            if dots[i].is_zero() {
                ray.zeros.set(ci);
            }
            kept.push(ray);
        }
        kept.extend(new_rays);
        rays = kept;
    }

    let mut ray_vecs: Vec<Vec<Int>> = rays.into_iter().map(|r| r.v).collect();
    ray_vecs.sort();
    ray_vecs.dedup();
    ConeGenerators {
        lineality,
        rays: ray_vecs,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| Int::from(x)).collect()
    }

    #[test]
    fn quadrant_cone() {
        // K = { y in R^2 : -y1 <= 0, -y2 <= 0 } is the nonnegative quadrant.
        let rows = vec![iv(&[-1, 0]), iv(&[0, -1])];
        let g = dd_cone(&rows, 2);
        assert!(g.lineality.is_empty());
        assert_eq!(g.rays, vec![iv(&[0, 1]), iv(&[1, 0])]);
    }

    #[test]
    fn halfspace_keeps_lineality() {
        let rows = vec![iv(&[1, 0, 0])];
        let g = dd_cone(&rows, 3);
        assert_eq!(g.lineality.len(), 2);
        assert_eq!(g.rays.len(), 1);
        assert!(g.rays[0][0].is_negative());
    }

    #[test]
    fn square_cone_has_four_rays() {
        // Homogenization of the unit square: (x1, x2, t) with
        // -x_i <= 0, x_i - t <= 0, -t <= 0.
        let rows = vec![
            iv(&[-1, 0, 0]),
            iv(&[0, -1, 0]),
            iv(&[1, 0, -1]),
            iv(&[0, 1, -1]),
            iv(&[0, 0, -1]),
        ];
        let g = dd_cone(&rows, 3);
        assert!(g.lineality.is_empty());
        assert_eq!(g.rays.len(), 4);
        for r in &g.rays {
            assert_eq!(r[2], Int::from(1));
        }
    }

    #[test]
    fn opposite_constraints_give_equality() {
        // y1 <= 0 and -y1 <= 0 force y1 = 0; the rest stays lineality.
        let rows = vec![iv(&[1, 0]), iv(&[-1, 0])];
        let g = dd_cone(&rows, 2);
        assert_eq!(g.lineality.len(), 1);
        assert!(g.lineality[0][0].is_zero());
        assert!(g.rays.is_empty());
    }

    #[test]
    fn redundant_constraint_changes_nothing() {
        let rows = vec![iv(&[-1, 0]), iv(&[0, -1]), iv(&[-1, -1])];
        let g = dd_cone(&rows, 2);
        assert_eq!(g.rays.len(), 2);
    }
}
