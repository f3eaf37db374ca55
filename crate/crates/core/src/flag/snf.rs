//! Smith normal form over the integers.

#![allow(clippy::needless_range_loop)]

/// Diagonal of the Smith normal form of `matrix` (`rows x cols`), with
/// nonnegative entries satisfying `d_i | d_{i+1}`. Its length is
/// `min(rows, cols)`.
pub fn smith_diagonal(matrix: &[Vec<i64>], cols: usize) -> Vec<i64> {
    let mut a: Vec<Vec<i64>> = matrix.to_vec();
    let rows = a.len();
    let size = rows.min(cols);
    let mut diag = Vec::with_capacity(size);

    for t in 0..size {
        // Smallest nonzero entry in the remaining block becomes the pivot.
        loop {
            let pivot = (t..rows)
                .flat_map(|r| (t..cols).map(move |c| (r, c)))
                .filter(|&(r, c)| a[r][c] != 0)
                .min_by_key(|&(r, c)| a[r][c].abs());
            let Some((pr, pc)) = pivot else {
                // Remaining block is zero.
                diag.extend(std::iter::repeat_n(0, size - t));
                return normalize(diag);
            };
            a.swap(t, pr);
            for row in a.iter_mut() {
                row.swap(t, pc);
            }

            let p = a[t][t];
            let mut clean = true;
            for r in t + 1..rows {
                let f = a[r][t] / p;
                if f != 0 {
                    for c in t..cols {
                        a[r][c] -= f * a[t][c];
                    }
                }
                clean &= a[r][t] == 0;
            }
            for c in t + 1..cols {
                let f = a[t][c] / p;
                if f != 0 {
                    for r in t..rows {
                        a[r][c] -= f * a[r][t];
                    }
                }
                clean &= a[t][c] == 0;
            }
            if !clean {
                continue;
            }
            // Enforce divisibility by folding an offending row into row t.
            let offending = (t + 1..rows).find(|&r| (t + 1..cols).any(|c| a[r][c] % p != 0));
            match offending {
                Some(r) => {
                    for c in t..cols {
                        a[t][c] += a[r][c];
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    normalize(diag)
}

fn normalize(mut diag: Vec<i64>) -> Vec<i64> {
    for d in diag.iter_mut() {
        *d = d.abs();
    }
    diag
}

/// Invariant factors of the abelian group `Z^cols / rowspace(matrix)`: the
/// non-unit Smith diagonal entries followed by one `0` per free summand.
pub fn invariant_factors(matrix: &[Vec<i64>], cols: usize) -> Vec<i64> {
    let diag = smith_diagonal(matrix, cols);
    let mut factors: Vec<i64> = diag.iter().copied().filter(|&d| d != 1 && d != 0).collect();
    let free = cols - diag.iter().filter(|&&d| d != 0).count();
    factors.extend(std::iter::repeat_n(0, free));
    factors
}
