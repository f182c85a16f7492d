//! Rank of the standard relations among `Gamma(k/N)`, modulo gamma-free factors.

use crate::error::{Error, Result};
use crate::linalg::{rank, Matrix};
use crate::rational::{q, Rational};

use super::relation::{multiplication_lhs, reflection_lhs, Exponents};

pub fn euler_phi(n: u64) -> u64 {
    let (mut m, mut r, mut p) = (n, n, 2);
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            r -= r / p;
        }
        p += 1;
    }
    if m > 1 {
        r -= r / m;
    }
    r
}

fn row(n: i64, lhs: &Exponents) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); (n - 1) as usize];
    for (a, e) in lhs {
        let k = (a * n).to_i64().expect("argument on the 1/N grid");
        v[(k - 1) as usize] = e.clone();
    }
    v
}

/// Exponent rows of every reflection `R(x)` and every multiplication `M_m(x)`
/// with `m | N` and `x` on the `1/N` grid. Column `k - 1` is `Gamma(k/N)`.
pub fn relation_matrix(n: i64) -> Result<Matrix> {
    if n < 3 {
        return Err(Error::Domain(format!("kubert rank needs N >= 3, got {n}")));
    }
    let mut rows = Vec::new();
    for k in 1..=n / 2 {
        rows.push(row(n, &reflection_lhs(&q(k, n))?));
    }
    for m in 2..=n {
        if n % m != 0 {
            continue;
        }
        for k in 1..n {
            let (lhs, _) = multiplication_lhs(m as u32, &q(k, n))?;
            rows.push(row(n, &lhs));
        }
    }
    Ok(rows)
}

/// Number of gamma values at `k/N` that stay free under the standard relations.
pub fn kubert_rank(n: i64) -> Result<usize> {
    let m = relation_matrix(n)?;
    Ok((n - 1) as usize - rank(&m))
}

/// True when some relation holds among `{Gamma(k/N) : gcd(k, N) = 1, k < N/2}`,
/// so that this set is not a basis.
pub fn naive_basis_dependent(n: i64) -> Result<bool> {
    let mut m = relation_matrix(n)?;
    let base = rank(&m);
    let mut count = 0;
    for k in 1..n {
        if 2 * k < n && rug::Integer::from(k).gcd(&rug::Integer::from(n)) == 1 {
            let mut e = vec![Rational::zero(); (n - 1) as usize];
            e[(k - 1) as usize] = Rational::one();
            m.push(e);
            count += 1;
        }
    }
    Ok(rank(&m) - base < count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_values() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(60), 16);
        assert_eq!(euler_phi(120), 32);
        assert_eq!(euler_phi(7), 6);
    }

    #[test]
    fn small_ranks() {
        assert_eq!(kubert_rank(3).unwrap(), 1);
        assert_eq!(kubert_rank(4).unwrap(), 1);
        assert_eq!(kubert_rank(5).unwrap(), 2);
        assert!(kubert_rank(2).is_err());
    }

    #[test]
    fn naive_sets() {
        for n in [20, 24, 30] {
            assert!(naive_basis_dependent(n).unwrap(), "N = {n}");
        }
        // for a prime the naive set is the basis
        assert!(!naive_basis_dependent(7).unwrap());
    }
}
