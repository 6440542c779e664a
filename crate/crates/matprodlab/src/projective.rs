//! The δ-coefficient, the generalized contraction coefficient τ and the
//! projective distance on the simplex.
//!
//! δ-values are carried as exact maximal cross-ratios; the logarithm is
//! taken lazily in `f64` only for display and numeric diagnostics, so
//! every inequality stays decidable in rational arithmetic.

use crate::exactmat::{rational_ln, rational_to_string, support_pattern, ExactMatrix, Rational};
use crate::{Error, Result};
use num_traits::{One, Zero};

/// δ-value: either `log ratio` for an exact ratio ≥ 1, or +∞.
#[derive(Clone, Debug, PartialEq)]
pub enum ExtendedLogValue {
    Finite(Rational),
    Infinite,
}

impl ExtendedLogValue {
    pub fn is_finite(&self) -> bool {
        matches!(self, ExtendedLogValue::Finite(_))
    }

    /// The exact ratio `e^δ`; `None` when infinite.
    pub fn ratio(&self) -> Option<&Rational> {
        match self {
            ExtendedLogValue::Finite(r) => Some(r),
            ExtendedLogValue::Infinite => None,
        }
    }

    /// δ as `f64` (`+∞` for the infinite value).
    pub fn log_value(&self) -> f64 {
        match self {
            ExtendedLogValue::Finite(r) => {
                if r.is_one() {
                    0.0
                } else {
                    rational_ln(r)
                }
            }
            ExtendedLogValue::Infinite => f64::INFINITY,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            ExtendedLogValue::Finite(r) => {
                serde_json::json!({"kind": "finite", "ratio": rational_to_string(r)})
            }
            ExtendedLogValue::Infinite => serde_json::json!({"kind": "infinite"}),
        }
    }
}

/// Checks condition (H): the nonzero entries of `A` fill a rectangle
/// `I_A × J_A`.  Returns the rectangle (0-based index sets) when it
/// exists.
pub fn hypothesis_h(a: &ExactMatrix) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    if a.is_zero() {
        return Err(Error::ZeroMatrix("hypothesis (H) of zero matrix".into()));
    }
    let rows: Vec<usize> = (0..a.rows())
        .filter(|&i| (0..a.cols()).any(|j| !a.get(i, j).is_zero()))
        .collect();
    let cols: Vec<usize> = (0..a.cols())
        .filter(|&j| (0..a.rows()).any(|i| !a.get(i, j).is_zero()))
        .collect();
    for &i in &rows {
        for &j in &cols {
            if a.get(i, j).is_zero() {
                return Ok(None);
            }
        }
    }
    Ok(Some((rows, cols)))
}

/// δ(A): the maximal cross-ratio `A(i,j)A(k,l) / (A(k,j)A(i,l))` over the
/// rectangle of condition (H), or +∞ when (H) fails.
pub fn delta_coeff(a: &ExactMatrix) -> Result<ExtendedLogValue> {
    let Some((rows, cols)) = hypothesis_h(a)? else {
        return Ok(ExtendedLogValue::Infinite);
    };
    let mut best = Rational::one();
    for (ri, &i) in rows.iter().enumerate() {
        for &k in rows.iter().skip(ri + 1) {
            for (cj, &j) in cols.iter().enumerate() {
                for &l in cols.iter().skip(cj + 1) {
                    // cross-ratio and its inverse cover both orientations
                    let num = a.get(i, j) * a.get(k, l);
                    let den = a.get(k, j) * a.get(i, l);
                    let r = if num >= den { num / den } else { den / num };
                    if r > best {
                        best = r;
                    }
                }
            }
        }
    }
    Ok(ExtendedLogValue::Finite(best))
}

/// τ(A) = tanh(δ(A)/4); exactly 1.0 when (H) fails.
pub fn tau(a: &ExactMatrix) -> Result<f64> {
    Ok(match delta_coeff(a)? {
        ExtendedLogValue::Infinite => 1.0,
        ExtendedLogValue::Finite(r) => {
            if r.is_one() {
                0.0
            } else {
                (rational_ln(&r) / 4.0).tanh()
            }
        }
    })
}

/// Projective distance δ(X, Y) between nonzero nonnegative vectors;
/// infinite iff Δ(X) ≠ Δ(Y), scale invariant, exact ratio carried.
pub fn proj_distance(x: &ExactMatrix, y: &ExactMatrix) -> Result<ExtendedLogValue> {
    if !x.is_vector() || !y.is_vector() || x.rows() != y.rows() {
        return Err(Error::DimensionMismatch("proj_distance".into()));
    }
    if x.is_zero() || y.is_zero() {
        return Err(Error::ZeroVector("proj_distance of zero vector".into()));
    }
    let px = support_pattern(x);
    let py = support_pattern(y);
    if px != py {
        return Ok(ExtendedLogValue::Infinite);
    }
    // max_i X(i)/Y(i) * max_i Y(i)/X(i) over the common support
    let idx = px.index_set();
    let mut max_xy: Option<Rational> = None;
    let mut max_yx: Option<Rational> = None;
    for &i in &idx {
        let rxy = x.get(i, 0) / y.get(i, 0);
        let ryx = y.get(i, 0) / x.get(i, 0);
        if max_xy.as_ref().map_or(true, |m| rxy > *m) {
            max_xy = Some(rxy);
        }
        if max_yx.as_ref().map_or(true, |m| ryx > *m) {
            max_yx = Some(ryx);
        }
    }
    Ok(ExtendedLogValue::Finite(
        max_xy.unwrap() * max_yx.unwrap(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::ratio;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn m(rows: &[Vec<i64>]) -> ExactMatrix {
        ExactMatrix::from_int_rows(rows)
    }

    #[test]
    fn hypothesis_h_examples() {
        let pos = m(&[vec![1, 2], vec![3, 4]]);
        assert_eq!(
            hypothesis_h(&pos).unwrap(),
            Some((vec![0, 1], vec![0, 1]))
        );
        let id = ExactMatrix::identity(2);
        assert_eq!(hypothesis_h(&id).unwrap(), None);
        assert!(hypothesis_h(&ExactMatrix::zero(2, 2)).is_err());
    }

    #[test]
    fn delta_examples() {
        // rank-one positive matrix: all cross-ratios are 1
        let rank1 = m(&[vec![2, 4], vec![1, 2]]);
        assert_eq!(
            delta_coeff(&rank1).unwrap(),
            ExtendedLogValue::Finite(ratio(1, 1))
        );
        // enumerated by hand: max cross-ratio of [[1,2],[3,4]] is 3/2
        let a = m(&[vec![1, 2], vec![3, 4]]);
        assert_eq!(
            delta_coeff(&a).unwrap(),
            ExtendedLogValue::Finite(ratio(3, 2))
        );
        assert_eq!(
            delta_coeff(&ExactMatrix::identity(2)).unwrap(),
            ExtendedLogValue::Infinite
        );
    }

    #[test]
    fn tau_examples() {
        let rank1 = m(&[vec![2, 4], vec![1, 2]]);
        assert_eq!(tau(&rank1).unwrap(), 0.0);
        assert_eq!(tau(&ExactMatrix::identity(2)).unwrap(), 1.0);
        let a = m(&[vec![1, 2], vec![3, 4]]);
        let want = ((1.5f64).ln() / 4.0).tanh();
        assert!((tau(&a).unwrap() - want).abs() < 1e-15);
    }

    #[test]
    fn proj_distance_examples() {
        let x = ExactMatrix::column(vec![ratio(1, 1), ratio(1, 1)]);
        let y = ExactMatrix::column(vec![ratio(1, 1), ratio(2, 1)]);
        assert_eq!(
            proj_distance(&x, &x).unwrap(),
            ExtendedLogValue::Finite(ratio(1, 1))
        );
        assert_eq!(
            proj_distance(&x, &y).unwrap(),
            ExtendedLogValue::Finite(ratio(2, 1))
        );
        let z = ExactMatrix::column(vec![ratio(1, 1), ratio(0, 1)]);
        assert_eq!(proj_distance(&z, &x).unwrap(), ExtendedLogValue::Infinite);
    }

    #[test]
    fn proj_distance_is_delta_of_two_column_matrix() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let d = rng.gen_range(2..5);
            let x = ExactMatrix::column(
                (0..d).map(|_| ratio(rng.gen_range(1..9), rng.gen_range(1..4))).collect(),
            );
            let y = ExactMatrix::column(
                (0..d).map(|_| ratio(rng.gen_range(1..9), rng.gen_range(1..4))).collect(),
            );
            let mut data = Vec::new();
            for i in 0..d {
                data.push(x.get(i, 0).clone());
                data.push(y.get(i, 0).clone());
            }
            let xy = ExactMatrix::new(d, 2, data).unwrap();
            assert_eq!(
                proj_distance(&x, &y).unwrap(),
                delta_coeff(&xy).unwrap()
            );
        }
    }

    #[test]
    fn proj_distance_scale_invariant_and_triangle() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let d = rng.gen_range(2..5);
            let gen = |rng: &mut ChaCha8Rng| {
                ExactMatrix::column(
                    (0..d).map(|_| ratio(rng.gen_range(1..9), rng.gen_range(1..5))).collect(),
                )
            };
            let x = gen(&mut rng);
            let y = gen(&mut rng);
            let z = gen(&mut rng);
            let sx = x.scale(&ratio(7, 3)).unwrap();
            let sy = y.scale(&ratio(2, 5)).unwrap();
            assert_eq!(
                proj_distance(&x, &y).unwrap(),
                proj_distance(&sx, &sy).unwrap()
            );
            // triangle inequality on the exact ratios: d(x,z) <= d(x,y) d(y,z)
            let rxz = proj_distance(&x, &z).unwrap().ratio().unwrap().clone();
            let rxy = proj_distance(&x, &y).unwrap().ratio().unwrap().clone();
            let ryz = proj_distance(&y, &z).unwrap().ratio().unwrap().clone();
            assert!(rxz <= rxy * ryz);
        }
    }

    #[test]
    fn contraction_inequality_random() {
        // δ(AB) <= δ(A) τ(B) for A satisfying (H), float slack 1e-12
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let mut tested = 0;
        while tested < 300 {
            let d1 = rng.gen_range(2..4);
            let d2 = rng.gen_range(2..4);
            let d3 = rng.gen_range(2..4);
            let a = ExactMatrix::new(
                d1,
                d2,
                (0..d1 * d2).map(|_| ratio(rng.gen_range(1..9), 1)).collect(),
            )
            .unwrap();
            let b = ExactMatrix::new(
                d2,
                d3,
                (0..d2 * d3)
                    .map(|_| ratio(if rng.gen_bool(0.3) { 0 } else { rng.gen_range(1..9) }, 1))
                    .collect(),
            )
            .unwrap();
            let ab = a.product(&b).unwrap();
            if ab.is_zero() {
                continue;
            }
            let lhs = delta_coeff(&ab).unwrap().log_value();
            let rhs = delta_coeff(&a).unwrap().log_value() * tau(&b).unwrap();
            assert!(lhs <= rhs + 1e-12, "lhs={lhs} rhs={rhs}");
            tested += 1;
        }
    }

    #[test]
    fn sandwich_inequality_random() {
        // (1/d)||X-Y|| <= δ(X,Y) <= ||X-Y|| / min_i {X(i),Y(i)} on a face
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..300 {
            let d = rng.gen_range(2..6);
            let gen = |rng: &mut ChaCha8Rng| {
                ExactMatrix::column(
                    (0..d).map(|_| ratio(rng.gen_range(1..20), rng.gen_range(1..7))).collect(),
                )
                .normalized()
                .unwrap()
            };
            let x = gen(&mut rng);
            let y = gen(&mut rng);
            let delta = proj_distance(&x, &y).unwrap().log_value();
            let mut diff = 0f64;
            let mut minent = f64::INFINITY;
            for i in 0..d {
                let xi = crate::exactmat::rational_to_f64(x.get(i, 0));
                let yi = crate::exactmat::rational_to_f64(y.get(i, 0));
                diff += (xi - yi).abs();
                minent = minent.min(xi).min(yi);
            }
            assert!(diff / d as f64 <= delta + 1e-12);
            assert!(delta <= diff / minent + 1e-12);
        }
    }
}
