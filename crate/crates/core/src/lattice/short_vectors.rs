//! Exact Fincke-Pohst enumeration for definite lattices.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::Lattice;

struct Cholesky {
    /// `mu[i][k]` for `i > k`: unit lower-triangular factor.
    mu: Vec<Vec<BigRational>>,
    d: Vec<BigRational>,
}

/// `G = L·D·Lᵀ` for a positive definite `G`.
fn ldl(gram: &[Vec<BigInt>]) -> Cholesky {
    let n = gram.len();
    let mut mu = vec![vec![BigRational::zero(); n]; n];
    let mut d = vec![BigRational::zero(); n];
    for j in 0..n {
        let mut dj = BigRational::from_integer(gram[j][j].clone());
        for k in 0..j {
            dj -= &mu[j][k] * &mu[j][k] * &d[k];
        }
        d[j] = dj;
        for i in j + 1..n {
            let mut s = BigRational::from_integer(gram[i][j].clone());
            for k in 0..j {
                s -= &mu[i][k] * &mu[j][k] * &d[k];
            }
            mu[i][j] = s / &d[j];
        }
    }
    Cholesky { mu, d }
}

/// Positive definite Gram matrix and the sign that produced it.
fn positive_gram(l: &Lattice) -> Option<(Vec<Vec<BigInt>>, i32)> {
    let sig = l.signature();
    let sign = match (sig.positive, sig.negative) {
        (_, 0) => 1,
        (0, _) => -1,
        _ => return None,
    };
    let rows = l.gram().to_rows();
    let rows = if sign == 1 {
        rows
    } else {
        rows.into_iter()
            .map(|r| r.into_iter().map(|x| -x).collect())
            .collect()
    };
    Some((rows, sign))
}

pub(crate) fn enumerate(l: &Lattice, bound: &BigInt) -> Option<Vec<(Vec<BigInt>, BigInt)>> {
    let (gram, sign) = positive_gram(l)?;
    let n = gram.len();
    let chol = ldl(&gram);
    let mut out = Vec::new();
    let mut x = vec![BigInt::zero(); n];
    let budget = BigRational::from_integer(bound.clone());
    if budget.is_negative() {
        return Some(out);
    }
    descend(n, &chol, &budget, &mut x, &mut out);
    for (v, norm) in &mut out {
        debug_assert_eq!(*norm, l.norm(v) * sign);
        if sign < 0 {
            *norm = -std::mem::take(norm);
        }
    }
    Some(out)
}

fn descend(
    level: usize,
    chol: &Cholesky,
    remaining: &BigRational,
    x: &mut Vec<BigInt>,
    out: &mut Vec<(Vec<BigInt>, BigInt)>,
) {
    let n = x.len();
    if level == 0 {
        let norm = positive_norm(chol, x);
        out.push((x.clone(), norm));
        return;
    }
    let k = level - 1;
    let mut center = BigRational::zero();
    for i in k + 1..n {
        center += &chol.mu[i][k] * BigRational::from_integer(x[i].clone());
    }
    let dk = &chol.d[k];
    let radius = (remaining / dk)
        .to_f64()
        .unwrap_or(f64::MAX)
        .max(0.0)
        .sqrt();
    let c = center.to_f64().unwrap_or(0.0);
    let lo = (-c - radius).floor() as i64 - 1;
    let hi = (-c + radius).ceil() as i64 + 1;
    for xk in lo..=hi {
        let t = BigRational::from_integer(BigInt::from(xk)) + &center;
        let term = dk * &t * &t;
        if &term > remaining {
            continue;
        }
        x[k] = BigInt::from(xk);
        let rest = remaining - term;
        descend(k, chol, &rest, x, out);
    }
    x[k] = BigInt::zero();
}

fn positive_norm(chol: &Cholesky, x: &[BigInt]) -> BigInt {
    let n = x.len();
    let mut acc = BigRational::zero();
    for k in 0..n {
        let mut t = BigRational::from_integer(x[k].clone());
        for i in k + 1..n {
            t += &chol.mu[i][k] * BigRational::from_integer(x[i].clone());
        }
        acc += &chol.d[k] * &t * &t;
    }
    debug_assert!(acc.is_integer());
    acc.to_integer()
}

pub(crate) fn minimum(l: &Lattice) -> Option<BigInt> {
    let (gram, _) = positive_gram(l)?;
    let bound = (0..gram.len()).map(|i| gram[i][i].clone()).min()?;
    enumerate(l, &bound)?
        .into_iter()
        .map(|(_, norm)| norm.abs())
        .filter(|norm| !norm.is_zero())
        .min()
}
