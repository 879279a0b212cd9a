/// Kahan-compensated sum over an iterator, in iteration order.
///
/// Quadrature sums use this everywhere so results are deterministic and
/// insensitive to the magnitude spread of the terms.
pub fn kahan_sum<I: IntoIterator<Item = f64>>(terms: I) -> f64 {
    let mut sum = 0.0;
    let mut c = 0.0;
    for t in terms {
        let y = t - c;
        let s = sum + y;
        c = (s - sum) - y;
        sum = s;
    }
    sum
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Visits every k-subset of `0..n` in lexicographic order.
pub fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Solves `A x = b` by Gaussian elimination with partial pivoting.
/// Returns `None` when the matrix is (numerically) singular.
pub fn solve_linear(a: &[Vec<f64>], b: &[f64]) -> Option<Vec<f64>> {
    let n = b.len();
    let mut m: Vec<Vec<f64>> = a.iter().cloned().collect();
    let mut rhs = b.to_vec();
    for col in 0..n {
        let (pivot, pmax) = (col..n)
            .map(|r| (r, m[r][col].abs()))
            .max_by(|x, y| x.1.total_cmp(&y.1))?;
        if pmax < 1e-12 {
            return None;
        }
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        for r in col + 1..n {
            let factor = m[r][col] / m[col][col];
            for c in col..n {
                m[r][c] -= factor * m[col][c];
            }
            rhs[r] -= factor * rhs[col];
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let mut acc = rhs[row];
        for c in row + 1..n {
            acc -= m[row][c] * x[c];
        }
        x[row] = acc / m[row][row];
    }
    Some(x)
}

/// One vector spanning the null space of a rank `n-1` matrix with `rows.len() == n-1`
/// rows of length `n`, or `None` if the rank is lower.
pub fn null_direction(rows: &[Vec<f64>]) -> Option<Vec<f64>> {
    let n = rows.first().map_or(1, |r| r.len());
    if rows.is_empty() {
        return if n == 1 { Some(vec![1.0]) } else { None };
    }
    let mut m: Vec<Vec<f64>> = rows.to_vec();
    let k = m.len();
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some((p, pmax)) = (row..k).map(|r| (r, m[r][col].abs())).max_by(|x, y| x.1.total_cmp(&y.1))
        else {
            break;
        };
        if pmax < 1e-10 {
            continue;
        }
        m.swap(row, p);
        for r in 0..k {
            if r != row {
                let factor = m[r][col] / m[row][col];
                for c in 0..n {
                    m[r][c] -= factor * m[row][c];
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == k {
            break;
        }
    }
    if pivot_cols.len() != n - 1 {
        return None;
    }
    let free_col = (0..n).find(|c| !pivot_cols.contains(c))?;
    let mut x = vec![0.0; n];
    x[free_col] = 1.0;
    for (r, &pc) in pivot_cols.iter().enumerate() {
        x[pc] = -m[r][free_col] / m[r][pc];
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kahan_handles_cancellation() {
        let terms = vec![1e16, 1.0, -1e16];
        assert_eq!(kahan_sum(terms), 1.0);
    }

    #[test]
    fn combinations_count() {
        let mut count = 0;
        for_each_combination(5, 3, |_| count += 1);
        assert_eq!(count, 10);
    }

    #[test]
    fn solve_2x2() {
        let a = vec![vec![2.0, 1.0], vec![1.0, 3.0]];
        let x = solve_linear(&a, &[5.0, 10.0]).unwrap();
        assert!((x[0] - 1.0).abs() < 1e-12);
        assert!((x[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn null_direction_2d() {
        let d = null_direction(&[vec![1.0, 1.0]]).unwrap();
        assert!((d[0] + d[1]).abs() < 1e-10);
        assert!(d.iter().any(|v| v.abs() > 0.5));
    }
}
