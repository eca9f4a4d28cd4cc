//! Exact matrix rank over the rationals and over prime fields.
//!
//! Char 0 uses fraction-free (Bareiss) elimination on integers: first over
//! `i128`, falling back to arbitrary precision only if an intermediate value
//! overflows. Char p reduces mod p and runs plain Gaussian elimination.

use num_bigint::BigInt;
use num_traits::Zero;

pub fn rank_over_rationals(matrix: &[Vec<i64>]) -> usize {
    match bareiss_i128(matrix) {
        Some(r) => r,
        None => bareiss_bigint(matrix),
    }
}

fn bareiss_i128(matrix: &[Vec<i64>]) -> Option<usize> {
    let rows = matrix.len();
    if rows == 0 {
        return Some(0);
    }
    let cols = matrix[0].len();
    let mut m: Vec<Vec<i128>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut rank = 0;
    let mut prev: i128 = 1;
    for c in 0..cols {
        let Some(pivot) = (rank..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        for i in rank + 1..rows {
            for j in c + 1..cols {
                let t1 = m[rank][c].checked_mul(m[i][j])?;
                let t2 = m[i][c].checked_mul(m[rank][j])?;
                m[i][j] = t1.checked_sub(t2)? / prev;
            }
            m[i][c] = 0;
        }
        prev = m[rank][c];
        rank += 1;
        if rank == rows {
            break;
        }
    }
    Some(rank)
}

fn bareiss_bigint(matrix: &[Vec<i64>]) -> usize {
    let rows = matrix.len();
    let cols = matrix[0].len();
    let mut m: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for c in 0..cols {
        let Some(pivot) = (rank..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for i in rank + 1..rows {
            for j in c + 1..cols {
                m[i][j] = (&m[rank][c] * &m[i][j] - &m[i][c] * &m[rank][j]) / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

pub fn rank_mod_p(matrix: &[Vec<i64>], p: u32) -> usize {
    let rows = matrix.len();
    if rows == 0 {
        return 0;
    }
    let cols = matrix[0].len();
    let p64 = p as i64;
    let mut m: Vec<Vec<u64>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| (x.rem_euclid(p64)) as u64).collect())
        .collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = mod_inverse(m[rank][c], p as u64);
        for j in c..cols {
            m[rank][j] = m[rank][j] * inv % p as u64;
        }
        for i in 0..rows {
            if i != rank && m[i][c] != 0 {
                let factor = m[i][c];
                for j in c..cols {
                    let sub = factor * m[rank][j] % p as u64;
                    m[i][j] = (m[i][j] + p as u64 - sub) % p as u64;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: p is prime and a != 0 mod p
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_identity_and_singular() {
        let id = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        assert_eq!(rank_over_rationals(&id), 3);
        assert_eq!(rank_mod_p(&id, 2), 3);

        let singular = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        assert_eq!(rank_over_rationals(&singular), 2);
        assert_eq!(rank_mod_p(&singular, 5), 2);
    }

    #[test]
    fn rank_depends_on_characteristic() {
        // determinant 2: full rank over Q, drops mod 2
        let m = vec![vec![1, 1], vec![1, -1]];
        assert_eq!(rank_over_rationals(&m), 2);
        assert_eq!(rank_mod_p(&m, 2), 1);
        assert_eq!(rank_mod_p(&m, 3), 2);
    }

    #[test]
    fn wide_and_tall_matrices() {
        let wide = vec![vec![0, 0, 1, -1, 2]];
        assert_eq!(rank_over_rationals(&wide), 1);
        let tall = vec![vec![1], vec![-1], vec![3]];
        assert_eq!(rank_over_rationals(&tall), 1);
        let zero = vec![vec![0, 0], vec![0, 0]];
        assert_eq!(rank_over_rationals(&zero), 0);
    }

    #[test]
    fn bigint_path_agrees_with_i128_path() {
        let m = vec![
            vec![3, 1, 4, 1, 5],
            vec![9, 2, 6, 5, 3],
            vec![5, 8, 9, 7, 9],
            vec![3, 2, 3, 8, 4],
        ];
        assert_eq!(bareiss_bigint(&m), bareiss_i128(&m).unwrap());
    }
}
