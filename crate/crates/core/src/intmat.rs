//! Small dense integer matrices: determinant, adjugate, products and the
//! Smith normal form with unimodular transforms.

pub type Mat = Vec<Vec<i64>>;

pub fn identity(n: usize) -> Mat {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

pub fn mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Mat {
    let k = b.len();
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            assert_eq!(row.len(), k, "inner dimensions differ");
            (0..n)
                .map(|j| (0..k).map(|t| row[t] * b[t][j]).sum())
                .collect()
        })
        .collect()
}

pub fn transpose(a: &[Vec<i64>]) -> Mat {
    let n = a.first().map_or(0, Vec::len);
    (0..n).map(|j| a.iter().map(|r| r[j]).collect()).collect()
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn det(a: &[Vec<i64>]) -> i64 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut m: Vec<Vec<i128>> = a
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    (sign * m[n - 1][n - 1]) as i64
}

/// Adjugate, so that `a · adj(a) = det(a) · I`.
pub fn adjugate(a: &[Vec<i64>]) -> Mat {
    let n = a.len();
    let mut adj = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Mat = (0..n)
                .filter(|&r| r != i)
                .map(|r| {
                    (0..n)
                        .filter(|&c| c != j)
                        .map(|c| a[r][c])
                        .collect()
                })
                .collect();
            let s = if (i + j) % 2 == 0 { 1 } else { -1 };
            adj[j][i] = s * det(&minor);
        }
    }
    adj
}

/// Inverse of a matrix with determinant `±1`.
pub fn unimodular_inverse(a: &[Vec<i64>]) -> Option<Mat> {
    let d = det(a);
    if d.abs() != 1 {
        return None;
    }
    Some(
        adjugate(a)
            .into_iter()
            .map(|r| r.into_iter().map(|x| x * d).collect())
            .collect(),
    )
}

/// `u · a · v = d` with `d` diagonal, `d_ii | d_{i+1,i+1}`, `d_ii ≥ 0`, and
/// `u`, `v` unimodular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Smith {
    pub u: Mat,
    pub d: Mat,
    pub v: Mat,
}

impl Smith {
    /// Nonzero diagonal entries.
    pub fn invariant_factors(&self) -> Vec<i64> {
        let r = self.d.len().min(self.d.first().map_or(0, Vec::len));
        (0..r).map(|i| self.d[i][i]).filter(|&x| x != 0).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

pub fn smith_normal_form(a: &[Vec<i64>]) -> Smith {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut d: Mat = a.to_vec();
    let mut u = identity(m);
    let mut v = identity(n);

    for t in 0..m.min(n) {
        loop {
            // smallest nonzero entry of the trailing block
            let Some((pi, pj)) = (t..m)
                .flat_map(|i| (t..n).map(move |j| (i, j)))
                .filter(|&(i, j)| d[i][j] != 0)
                .min_by_key(|&(i, j)| d[i][j].abs())
            else {
                return finish(u, d, v);
            };
            d.swap(t, pi);
            u.swap(t, pi);
            swap_cols(&mut d, t, pj);
            swap_cols(&mut v, t, pj);

            let p = d[t][t];
            let mut clean = true;
            for i in t + 1..m {
                let q = d[i][t].div_euclid(p);
                if q != 0 {
                    row_axpy(&mut d, i, t, -q);
                    row_axpy(&mut u, i, t, -q);
                }
                clean &= d[i][t] == 0;
            }
            for j in t + 1..n {
                let q = d[t][j].div_euclid(p);
                if q != 0 {
                    col_axpy(&mut d, j, t, -q);
                    col_axpy(&mut v, j, t, -q);
                }
                clean &= d[t][j] == 0;
            }
            if !clean {
                continue;
            }
            // the pivot must divide the rest of the block
            let bad = (t + 1..m)
                .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| d[i][j] % p != 0);
            match bad {
                Some((i, _)) => {
                    row_axpy(&mut d, t, i, 1);
                    row_axpy(&mut u, t, i, 1);
                }
                None => break,
            }
        }
        if d[t][t] < 0 {
            for x in d[t].iter_mut() {
                *x = -*x;
            }
            for x in u[t].iter_mut() {
                *x = -*x;
            }
        }
    }
    finish(u, d, v)
}

fn finish(u: Mat, d: Mat, v: Mat) -> Smith {
    Smith { u, d, v }
}

fn swap_cols(a: &mut Mat, i: usize, j: usize) {
    if i != j {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
    }
}

/// row[dst] += k * row[src]
fn row_axpy(a: &mut Mat, dst: usize, src: usize, k: i64) {
    let src_row = a[src].clone();
    for (x, s) in a[dst].iter_mut().zip(src_row) {
        *x += k * s;
    }
}

/// col[dst] += k * col[src]
fn col_axpy(a: &mut Mat, dst: usize, src: usize, k: i64) {
    for row in a.iter_mut() {
        row[dst] += k * row[src];
    }
}
