//! Dense row reduction over `F_p`.

use crate::ffield::{inv_mod, mul_mod, sub_mod};

/// Reduces `rows` in place to reduced row-echelon form, dropping zero rows.
/// Returns the pivot columns.
pub fn rref(rows: &mut Vec<Vec<u64>>, p: u64) -> Vec<usize> {
    let width = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..width {
        let Some(found) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, found);
        let inv = inv_mod(rows[rank][col], p).expect("pivot is nonzero");
        for v in rows[rank].iter_mut() {
            *v = mul_mod(*v, inv, p);
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col] == 0 {
                continue;
            }
            let factor = row[col];
            for (v, &pv) in row.iter_mut().zip(&pivot_row).skip(col) {
                if pv != 0 {
                    *v = sub_mod(*v, mul_mod(factor, pv, p), p);
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    pivots
}

pub fn rank(rows: &[Vec<u64>], p: u64) -> usize {
    let mut rows = rows.to_vec();
    rref(&mut rows, p).len()
}

/// Whether `v` lies in the row space of a matrix already in RREF with the given pivots.
pub fn in_row_space(rref_rows: &[Vec<u64>], pivots: &[usize], v: &[u64], p: u64) -> bool {
    let mut residual = v.to_vec();
    for (row, &col) in rref_rows.iter().zip(pivots) {
        let factor = residual[col];
        if factor == 0 {
            continue;
        }
        for (r, &x) in residual.iter_mut().zip(row) {
            *r = sub_mod(*r, mul_mod(factor, x, p), p);
        }
    }
    residual.iter().all(|&x| x == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_sum_zero_code() {
        let mut rows = vec![vec![4, 3, 3], vec![3, 4, 3], vec![3, 3, 4]];
        let pivots = rref(&mut rows, 5);
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(rows, vec![vec![1, 0, 4], vec![0, 1, 4]]);
        assert!(in_row_space(&rows, &pivots, &[2, 2, 1], 5));
        assert!(!in_row_space(&rows, &pivots, &[1, 1, 1], 5));
    }

    #[test]
    fn rank_of_zero_and_identity() {
        assert_eq!(rank(&[vec![0, 0], vec![0, 0]], 7), 0);
        assert_eq!(rank(&[vec![1, 0], vec![0, 1]], 7), 2);
        assert_eq!(rank(&[vec![1, 2], vec![2, 4]], 7), 1);
    }
}
