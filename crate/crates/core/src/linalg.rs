use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Debug)]
pub struct Nullspace {
    pub rank: usize,
    pub basis: Vec<Vec<BigRational>>,
}

/// Scale a row to integer entries with gcd 1. Rescaling rows does not move
/// the nullspace and keeps the elimination numbers small.
fn row_primitive(row: &mut [BigRational]) {
    let mut l: BigInt = One::one();
    for c in row.iter() {
        l = l.lcm(c.denom());
    }
    let mut g: BigInt = Zero::zero();
    for c in row.iter() {
        g = g.gcd(&(c.numer() * (&l / c.denom())));
    }
    if g.is_zero() {
        return;
    }
    let s = BigRational::new(l, g);
    for c in row.iter_mut() {
        *c *= &s;
    }
}

/// Basis of {v : A v = 0} over exact rationals, by row reduction to reduced
/// echelon form. Deterministic: the pivot is the first nonzero entry in
/// each column.
pub fn nullspace(rows: &[Vec<BigRational>], ncols: usize) -> Nullspace {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .filter(|r| r.iter().any(|c| !c.is_zero()))
        .cloned()
        .collect();
    for r in &mut m {
        debug_assert_eq!(r.len(), ncols);
        row_primitive(r);
    }
    let mut pivots: Vec<usize> = Vec::new();
    for col in 0..ncols {
        let rank = pivots.len();
        let Some(pr) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pr);
        let inv = m[rank][col].clone().recip();
        for j in 0..ncols {
            let v = &m[rank][j] * &inv;
            m[rank][j] = v;
        }
        for i in 0..m.len() {
            if i == rank || m[i][col].is_zero() {
                continue;
            }
            let f = m[i][col].clone();
            for j in 0..ncols {
                let v = &m[i][j] - &(&m[rank][j] * &f);
                m[i][j] = v;
            }
        }
        pivots.push(col);
        if pivots.len() == m.len() {
            break;
        }
    }
    let rank = pivots.len();
    let mut basis = Vec::with_capacity(ncols - rank);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    for j in 0..ncols {
        if is_pivot[j] {
            continue;
        }
        let mut v = vec![BigRational::zero(); ncols];
        v[j] = BigRational::one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -m[i][j].clone();
        }
        basis.push(v);
    }
    Nullspace { rank, basis }
}
