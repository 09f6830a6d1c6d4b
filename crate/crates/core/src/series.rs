//! Integer polynomials in `t` and rational generating-function numerators.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::perm::binomial;

/// The first `values.len()` coefficients of `(1 - t)^power · Σ_j values[j] t^j`.
pub fn numerator(values: &[BigInt], power: usize) -> Vec<BigInt> {
    (0..values.len())
        .map(|k| {
            let mut acc = BigInt::zero();
            for i in 0..=k.min(power) {
                let term = BigInt::from(binomial(power as u64, i as u64)) * &values[k - i];
                if i % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        })
        .collect()
}

/// Drops trailing zero coefficients.
pub fn trim(mut coeffs: Vec<BigInt>) -> Vec<BigInt> {
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    coeffs
}

/// Ascending-power text form, e.g. `1 + 7t + 7t^2 + t^3`.
pub fn format_poly<T: ToString + PartialEq + Zero + One>(coeffs: &[T]) -> String {
    let mut parts = Vec::new();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let coef = if k > 0 && c.is_one() { String::new() } else { c.to_string() };
        parts.push(match k {
            0 => coef,
            1 => format!("{coef}t"),
            _ => format!("{coef}t^{k}"),
        });
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cube_series() {
        let values: Vec<BigInt> = (0..6).map(|j| BigInt::from((j + 1) * (j + 1) * (j + 1))).collect();
        let num = trim(numerator(&values, 4));
        assert_eq!(num, vec![BigInt::from(1), BigInt::from(4), BigInt::from(1)]);
    }

    #[test]
    fn formatting() {
        assert_eq!(format_poly(&[1u64, 7, 7, 1]), "1 + 7t + 7t^2 + t^3");
        assert_eq!(format_poly(&[2u64, 1]), "2 + t");
        assert_eq!(format_poly(&[1u64]), "1");
        assert_eq!(format_poly::<u64>(&[]), "0");
    }
}
