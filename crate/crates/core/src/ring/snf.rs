//! Diagonalization of integer relation matrices by unimodular column
//! operations, used to present quotients of finite abelian groups.

pub(crate) struct Diagonalization {
    /// Absolute values of the diagonal entries, one per column.
    pub diag: Vec<i64>,
    /// Column transform `V`: coordinates `x` map to `x·V`.
    pub transform: Vec<Vec<i64>>,
    /// `V⁻¹`; row `j` is the preimage of the `j`-th unit vector.
    pub inverse: Vec<Vec<i64>>,
}

fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

/// Reduces `rows` (each of length `cols`) to diagonal form `D = U·A·V`.
///
/// Only `V` and `V⁻¹` are tracked since row operations do not change the row
/// lattice. Divisibility between diagonal entries is not enforced.
pub(crate) fn diagonalize(mut a: Vec<Vec<i64>>, cols: usize) -> Diagonalization {
    let nrows = a.len();
    let mut v = identity(cols);
    let mut vinv = identity(cols);
    let mut diag = vec![0i64; cols];

    for t in 0..cols.min(nrows) {
        loop {
            let mut pivot: Option<(usize, usize)> = None;
            for (i, row) in a.iter().enumerate().skip(t) {
                for (j, &x) in row.iter().enumerate().skip(t) {
                    if x != 0 && pivot.is_none_or(|(pi, pj)| x.abs() < a[pi][pj].abs()) {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break };
            a.swap(t, pi);
            if pj != t {
                for row in a.iter_mut() {
                    row.swap(t, pj);
                }
                for row in v.iter_mut() {
                    row.swap(t, pj);
                }
                vinv.swap(t, pj);
            }

            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..nrows {
                let q = a[i][t].div_euclid(p);
                if q != 0 {
                    for j in t..cols {
                        a[i][j] -= q * a[t][j];
                    }
                }
                if a[i][t] != 0 {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                let q = a[t][j].div_euclid(p);
                if q != 0 {
                    for row in a.iter_mut() {
                        row[j] -= q * row[t];
                    }
                    for row in v.iter_mut() {
                        row[j] -= q * row[t];
                    }
                    let (head, tail) = vinv.split_at_mut(j);
                    for (x, y) in head[t].iter_mut().zip(&tail[0]) {
                        *x += q * y;
                    }
                }
                if a[t][j] != 0 {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        diag[t] = a[t][t].abs();
    }

    Diagonalization {
        diag,
        transform: v,
        inverse: vinv,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
        let n = b[0].len();
        a.iter()
            .map(|row| {
                (0..n)
                    .map(|j| row.iter().zip(b).map(|(x, brow)| x * brow[j]).sum())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn transform_and_inverse_agree() {
        let rows = vec![vec![12, 0], vec![0, 12], vec![4, 6], vec![2, 8]];
        let d = diagonalize(rows, 2);
        assert_eq!(matmul(&d.transform, &d.inverse), identity(2));
        // quotient of Z_12^2 by <(4,6),(2,8)> has order 12*12 / |subgroup|
        let order: i64 = d.diag.iter().product();
        // subgroup <(4,6),(2,8)> in Z_12^2: brute force size
        let mut seen = std::collections::HashSet::new();
        for a in 0..12 {
            for b in 0..12 {
                seen.insert(((4 * a + 2 * b) % 12, (6 * a + 8 * b) % 12));
            }
        }
        assert_eq!(order as usize, 144 / seen.len());
    }

    #[test]
    fn diagonal_input_is_left_alone() {
        let d = diagonalize(vec![vec![4, 0], vec![0, 3]], 2);
        let mut diag = d.diag.clone();
        diag.sort();
        assert_eq!(diag, vec![3, 4]);
    }
}
