//! Dense linear algebra over the prime field F_p used by the character
//! solver. Primes stay below 2^31 so products fit in u64.

pub fn mulm(a: u64, b: u64, p: u64) -> u64 {
    a % p * (b % p) % p
}

pub fn addm(a: u64, b: u64, p: u64) -> u64 {
    (a + b) % p
}

pub fn subm(a: u64, b: u64, p: u64) -> u64 {
    (a + p - b % p) % p
}

pub fn powm(mut a: u64, mut e: u64, p: u64) -> u64 {
    a %= p;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulm(acc, a, p);
        }
        a = mulm(a, a, p);
        e >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue via Fermat's little theorem.
pub fn invm(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    powm(a, p - 2, p)
}

pub fn matvec(m: &[Vec<u64>], v: &[u64], p: u64) -> Vec<u64> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(0u64, |acc, (&a, &b)| addm(acc, mulm(a, b, p), p)))
        .collect()
}

/// In-place reduced row echelon form; returns the pivot columns and drops
/// zero rows. Deterministic: lowest-index usable row becomes each pivot.
pub fn rref(rows: &mut Vec<Vec<u64>>, p: u64) -> Vec<usize> {
    let width = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..width {
        let Some(pr) = (rank..rows.len()).find(|&r| !rows[r][col].is_multiple_of(p)) else {
            continue;
        };
        rows.swap(rank, pr);
        let inv = invm(rows[rank][col], p);
        for x in rows[rank].iter_mut() {
            *x = mulm(*x, inv, p);
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_multiple_of(p) {
                let f = row[col];
                for (x, pv) in row.iter_mut().zip(&pivot_row) {
                    *x = subm(*x, mulm(f, *pv, p), p);
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

/// Basis of the nullspace of a square matrix, one vector per free column,
/// in ascending free-column order.
pub fn nullspace(mat: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = mat.len();
    let mut rows = mat.to_vec();
    let pivots = rref(&mut rows, p);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u64; n];
            v[fc] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = subm(0, rows[r][fc], p);
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modular_basics() {
        let p = 13;
        assert_eq!(mulm(7, 8, p), 56 % 13);
        assert_eq!(powm(2, 12, p), 1);
        assert_eq!(mulm(invm(5, p), 5, p), 1);
    }

    #[test]
    fn rref_and_nullspace() {
        let p = 7;
        // singular matrix: rows (1,2,3), (2,4,6), (0,1,1)
        let m = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        let ns = nullspace(&m, p);
        assert_eq!(ns.len(), 1);
        for row in &m {
            let dot = row.iter().zip(&ns[0]).fold(0, |acc, (&a, &b)| addm(acc, mulm(a, b, p), p));
            assert_eq!(dot, 0);
        }
    }
}
