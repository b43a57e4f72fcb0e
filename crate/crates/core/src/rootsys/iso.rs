//! Isomorphism search between generalized Cartan matrices by backtracking.
//! The diagrams here never exceed ~a dozen nodes, so exhaustive search with
//! a node-invariant prefilter is plenty.

/// Per-node invariant: sorted multiset of incident bond types plus degree.
fn invariants(a: &[Vec<i64>]) -> Vec<Vec<(i64, i64)>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            let mut inc: Vec<(i64, i64)> = (0..n)
                .filter(|&j| j != i && a[i][j] != 0)
                .map(|j| (a[i][j], a[j][i]))
                .collect();
            inc.sort_unstable();
            inc
        })
        .collect()
}

/// All bijections `π` with `b[π(i)][π(j)] = a[i][j]`. With `first_only` the
/// search stops at the first hit.
pub fn isomorphisms(a: &[Vec<i64>], b: &[Vec<i64>], first_only: bool) -> Vec<Vec<usize>> {
    let n = a.len();
    if b.len() != n {
        return vec![];
    }
    if n == 0 {
        return vec![vec![]];
    }
    let inv_a = invariants(a);
    let inv_b = invariants(b);
    {
        let mut sa = inv_a.clone();
        let mut sb = inv_b.clone();
        sa.sort();
        sb.sort();
        if sa != sb {
            return vec![];
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut found = Vec::new();
    fn go(
        depth: usize,
        a: &[Vec<i64>],
        b: &[Vec<i64>],
        inv_a: &[Vec<(i64, i64)>],
        inv_b: &[Vec<(i64, i64)>],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        found: &mut Vec<Vec<usize>>,
        first_only: bool,
    ) -> bool {
        let n = a.len();
        if depth == n {
            found.push(map.clone());
            return first_only;
        }
        for k in 0..n {
            if used[k] || inv_a[depth] != inv_b[k] {
                continue;
            }
            let ok = (0..depth).all(|j| {
                let l = map[j];
                a[depth][j] == b[k][l] && a[j][depth] == b[l][k]
            });
            if ok {
                map[depth] = k;
                used[k] = true;
                if go(depth + 1, a, b, inv_a, inv_b, map, used, found, first_only) {
                    return true;
                }
                used[k] = false;
                map[depth] = usize::MAX;
            }
        }
        false
    }
    go(0, a, b, &inv_a, &inv_b, &mut map, &mut used, &mut found, first_only);
    found
}

pub fn is_isomorphic(a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    !isomorphisms(a, b, true).is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build::{affine_cartan, finite_cartan, Series};

    #[test]
    fn triangle_has_six_automorphisms() {
        let a = affine_cartan(Series::A, 2, 1).unwrap();
        assert_eq!(isomorphisms(&a, &a, false).len(), 6);
    }

    #[test]
    fn b2_c2_isomorphic_but_not_g2() {
        let b2 = finite_cartan(Series::B, 2).unwrap();
        let c2 = vec![vec![2, -2], vec![-1, 2]];
        let g2 = finite_cartan(Series::G, 2).unwrap();
        assert!(is_isomorphic(&b2, &c2));
        assert!(!is_isomorphic(&b2, &g2));
    }

    #[test]
    fn path_direction_matters_for_maps() {
        let a3 = finite_cartan(Series::A, 3).unwrap();
        let maps = isomorphisms(&a3, &a3, false);
        assert_eq!(maps.len(), 2); // identity and the flip
    }
}
