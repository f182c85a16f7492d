//! Integer relation search (PSLQ, Ferguson-Bailey).

use rug::float::{Constant, Round};
use rug::{Float, Integer};

use super::eval::generator_value;
use super::precision::PrecisionConfig;
use crate::atoms::Generator;

#[derive(Clone, Debug, PartialEq)]
pub enum PslqOutcome {
    /// Integer vector `c` with `sum c_i x_i` zero to working precision.
    Relation(Vec<Integer>),
    /// No relation with Euclidean norm below the returned bound exists.
    NoRelationBelow(f64),
    /// Precision or iteration budget ran out before either conclusion.
    Exhausted { iterations: usize, norm_bound: f64 },
}

fn round_to_integer(x: &Float) -> Integer {
    x.to_integer_round(Round::Nearest).map(|(i, _)| i).unwrap_or_default()
}

/// Searches for an integer relation among `x` at `prec` bits. Stops with
/// [`PslqOutcome::NoRelationBelow`] once relations of norm `<= max_norm` are excluded.
pub fn pslq(x: &[Float], prec: u32, max_norm: f64, max_iter: usize) -> PslqOutcome {
    let n = x.len();
    assert!(n >= 2, "need at least two values");
    let f = |v: &Float| Float::with_val(prec, v);
    let zero = || Float::new(prec);
    let gamma = Float::with_val(prec, 1.2);

    // partial norms s_j = sqrt(sum_{k >= j} x_k^2)
    let mut s = vec![zero(); n];
    let mut acc = zero();
    for j in (0..n).rev() {
        acc += Float::with_val(prec, x[j].square_ref());
        s[j] = Float::with_val(prec, acc.sqrt_ref());
    }
    let t = s[0].clone();
    let mut y: Vec<Float> = x.iter().map(|v| Float::with_val(prec, v / &t)).collect();
    for v in s.iter_mut() {
        *v /= &t;
    }

    let mut h = vec![vec![zero(); n - 1]; n];
    for j in 0..n - 1 {
        h[j][j] = Float::with_val(prec, &s[j + 1] / &s[j]);
        for i in j + 1..n {
            let num = Float::with_val(prec, &y[i] * &y[j]);
            let den = Float::with_val(prec, &s[j] * &s[j + 1]);
            h[i][j] = -(num / den);
        }
    }
    let ident = |n: usize| -> Vec<Vec<Integer>> {
        (0..n)
            .map(|i| (0..n).map(|j| Integer::from((i == j) as i32)).collect())
            .collect()
    };
    let mut a = ident(n);
    let mut b = ident(n);

    let reduce = |i: usize, j: usize, h: &mut Vec<Vec<Float>>, y: &mut Vec<Float>, a: &mut Vec<Vec<Integer>>, b: &mut Vec<Vec<Integer>>| {
        if h[j][j].is_zero() {
            return;
        }
        let q = round_to_integer(&Float::with_val(prec, &h[i][j] / &h[j][j]));
        if q == 0 {
            return;
        }
        let qf = Float::with_val(prec, &q);
        let delta = Float::with_val(prec, &qf * &y[i]);
        y[j] += delta;
        for k in 0..=j {
            let d = Float::with_val(prec, &qf * &h[j][k]);
            h[i][k] -= d;
        }
        for k in 0..n {
            let d = Integer::from(&q * &a[j][k]);
            a[i][k] -= d;
            let e = Integer::from(&q * &b[k][i]);
            b[k][j] += e;
        }
    };

    for i in 1..n {
        for j in (0..i).rev() {
            reduce(i, j, &mut h, &mut y, &mut a, &mut b);
        }
    }

    let mut threshold = Float::with_val(prec, 1);
    threshold >>= prec.saturating_sub(64);
    let mut entry_limit = Integer::from(1);
    entry_limit <<= prec * 9 / 10;
    let mut norm_bound = 0.0;

    for iteration in 0..max_iter {
        // pick the row maximising gamma^i |H_ii|
        let mut best = 0;
        let mut best_val = zero();
        let mut g = f(&gamma);
        for i in 0..n - 1 {
            let v = Float::with_val(prec, &g * &h[i][i]).abs();
            if v > best_val {
                best_val = v;
                best = i;
            }
            g *= &gamma;
        }
        let m = best;
        y.swap(m, m + 1);
        h.swap(m, m + 1);
        a.swap(m, m + 1);
        for row in b.iter_mut() {
            row.swap(m, m + 1);
        }
        if m + 2 < n {
            let t0 = (Float::with_val(prec, h[m][m].square_ref()) + Float::with_val(prec, h[m][m + 1].square_ref())).sqrt();
            let t1 = Float::with_val(prec, &h[m][m] / &t0);
            let t2 = Float::with_val(prec, &h[m][m + 1] / &t0);
            for row in h.iter_mut().skip(m) {
                let t3 = row[m].clone();
                let t4 = row[m + 1].clone();
                row[m] = Float::with_val(prec, &t1 * &t3) + Float::with_val(prec, &t2 * &t4);
                row[m + 1] = Float::with_val(prec, &t1 * &t4) - Float::with_val(prec, &t2 * &t3);
            }
        }
        for i in m + 1..n {
            for j in (0..i.min(m + 2)).rev() {
                reduce(i, j, &mut h, &mut y, &mut a, &mut b);
            }
        }

        // a tiny y_j means column j of B is a relation
        let mut best_j = None;
        let mut min_y = Float::with_val(prec, f64::MAX);
        for (j, v) in y.iter().enumerate() {
            let av = Float::with_val(prec, v.abs_ref());
            if av < min_y {
                min_y = av;
                best_j = Some(j);
            }
        }
        if min_y < threshold {
            let j = best_j.expect("nonempty");
            return PslqOutcome::Relation(b.iter().map(|row| row[j].clone()).collect());
        }

        let max_diag = h
            .iter()
            .enumerate()
            .take(n - 1)
            .map(|(i, row)| Float::with_val(prec, row[i].abs_ref()))
            .fold(zero(), |acc, v| if v > acc { v } else { acc });
        if !max_diag.is_zero() {
            norm_bound = Float::with_val(prec, max_diag.recip_ref()).to_f64();
            if norm_bound > max_norm {
                return PslqOutcome::NoRelationBelow(norm_bound);
            }
        }
        let too_big = a.iter().flatten().any(|v| v.clone().abs() > entry_limit);
        if too_big {
            return PslqOutcome::Exhausted { iterations: iteration, norm_bound };
        }
    }
    PslqOutcome::Exhausted { iterations: max_iter, norm_bound }
}

/// Runs PSLQ on `ln g` for the 18 generators and `ln pi`, excluding relations
/// of norm up to `10^6 sqrt(19)`.
pub fn generator_independence(cfg: &PrecisionConfig) -> PslqOutcome {
    let prec = cfg.bits();
    let mut x: Vec<Float> = Generator::ALL
        .iter()
        .map(|g| generator_value(*g, prec).mid().clone().ln())
        .collect();
    x.push(Float::with_val(prec, Constant::Pi).ln());
    let bound = 1e6 * (x.len() as f64).sqrt();
    pslq(&x, prec, bound, 100_000)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ln(prec: u32, v: f64) -> Float {
        Float::with_val(prec, v).ln()
    }

    #[test]
    fn finds_log_relation() {
        let p = 256;
        let x = [ln(p, 2.0), ln(p, 3.0), ln(p, 6.0)];
        match pslq(&x, p, 1e12, 1000) {
            PslqOutcome::Relation(c) => {
                let c: Vec<i64> = c.iter().map(|v| v.to_i64().unwrap()).collect();
                assert!(c == vec![1, 1, -1] || c == vec![-1, -1, 1], "{c:?}");
            }
            other => panic!("expected a relation, got {other:?}"),
        }
    }

    #[test]
    fn conjugate_surds() {
        let p = 300;
        let s2 = Float::with_val(p, 2).sqrt();
        let x = [
            Float::with_val(p, &s2 - 1u32).ln(),
            Float::with_val(p, &s2 + 1u32).ln(),
            Float::with_val(p, 5).ln(),
        ];
        assert!(matches!(pslq(&x, p, 1e12, 1000), PslqOutcome::Relation(_)));
    }

    #[test]
    fn independent_logs() {
        let p = 400;
        let x = [ln(p, 2.0), ln(p, 3.0), ln(p, 5.0), ln(p, 7.0)];
        assert!(matches!(pslq(&x, p, 1e8, 10_000), PslqOutcome::NoRelationBelow(_)));
    }
}
