//! Substitution `x = t / sqrt(3)` carried out in `Z[sqrt(3)]`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{IntPoly, RatFunc};
use crate::error::{Error, Result};

/// `a + b sqrt(3)` with integer components.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QuadInt {
    pub a: BigInt,
    pub b: BigInt,
}

impl QuadInt {
    /// `sqrt(3)^e` as an element of `Z[sqrt(3)]`.
    pub fn sqrt3_pow(e: usize) -> QuadInt {
        let half = num_traits::pow(BigInt::from(3), e / 2);
        if e % 2 == 0 {
            QuadInt {
                a: half,
                b: BigInt::zero(),
            }
        } else {
            QuadInt {
                a: BigInt::zero(),
                b: half,
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> QuadInt {
        QuadInt {
            a: &self.a * c,
            b: &self.b * c,
        }
    }
}

/// `p(t / sqrt(3))` written as `sqrt(3)^(-power) * sum_k coeffs[k] t^k` with
/// `coeffs[k] = c_k * sqrt(3)^(power - k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sqrt3Scaled {
    pub coeffs: Vec<QuadInt>,
    pub power: usize,
}

pub fn substitute_inv_sqrt3(p: &IntPoly) -> Sqrt3Scaled {
    let power = p.degree().unwrap_or(0);
    let coeffs = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| QuadInt::sqrt3_pow(power - k).scale(c))
        .collect();
    Sqrt3Scaled { coeffs, power }
}

impl Sqrt3Scaled {
    /// The substituted polynomial as a rational function of `t`, or an error
    /// when a `sqrt(3)` component survives.
    pub fn to_rational(&self) -> Result<RatFunc> {
        let a = IntPoly::from_coeffs(self.coeffs.iter().map(|q| q.a.clone()).collect());
        let b = IntPoly::from_coeffs(self.coeffs.iter().map(|q| q.b.clone()).collect());
        let three = BigInt::from(3);
        // (A + sqrt3 B) / sqrt3^power
        if self.power % 2 == 0 {
            if !b.is_zero() {
                return Err(Error::Irrational(format!(
                    "sqrt(3) component {} remains",
                    b.pretty("t")
                )));
            }
            RatFunc::new(a, IntPoly::constant(num_traits::pow(three, self.power / 2)))
        } else {
            if !a.is_zero() {
                return Err(Error::Irrational(format!(
                    "rational component {} carries a 1/sqrt(3) factor",
                    a.pretty("t")
                )));
            }
            // sqrt3 B / sqrt3^power = B / 3^((power-1)/2)
            RatFunc::new(
                b,
                IntPoly::constant(num_traits::pow(three, (self.power - 1) / 2)),
            )
        }
    }
}

/// `p(t / sqrt(3))` as an exact rational function of `t`.
pub fn compose_inv_sqrt3(p: &IntPoly) -> Result<RatFunc> {
    substitute_inv_sqrt3(p).to_rational()
}

/// `D_t log p(t / sqrt(3))`. Constant factors drop out of a logarithmic
/// derivative, so only one of the two `Z[sqrt(3)]` components may survive.
pub fn log_derivative_inv_sqrt3(p: &IntPoly) -> Result<RatFunc> {
    let s = substitute_inv_sqrt3(p);
    let a = IntPoly::from_coeffs(s.coeffs.iter().map(|q| q.a.clone()).collect());
    let b = IntPoly::from_coeffs(s.coeffs.iter().map(|q| q.b.clone()).collect());
    match (a.is_zero(), b.is_zero()) {
        (false, true) => RatFunc::from_poly(a).log_derivative(),
        (true, false) => RatFunc::from_poly(b).log_derivative(),
        (true, true) => Err(Error::DivisionByZero),
        (false, false) => Err(Error::Irrational(format!(
            "sqrt(3) does not cancel in the log-derivative of {}",
            p.pretty("x")
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hermite_two_at_t_over_sqrt3() {
        // 4 (t/sqrt3)^2 - 2 = (4/3) t^2 - 2
        let h2 = IntPoly::from_i64s(&[-2, 0, 4]);
        let r = compose_inv_sqrt3(&h2).unwrap();
        let expected = RatFunc::new(IntPoly::from_i64s(&[-6, 0, 4]), IntPoly::from_i64s(&[3])).unwrap();
        assert_eq!(r, expected);
    }

    #[test]
    fn odd_degree_leaves_sqrt3() {
        // 2 t / sqrt3 is irrational
        let h1 = IntPoly::from_i64s(&[0, 2]);
        assert!(matches!(compose_inv_sqrt3(&h1), Err(Error::Irrational(_))));
        // x^3 + 3x at t/sqrt3 = t^3/(3 sqrt3) + sqrt3 t: irrational overall
        let p = IntPoly::from_i64s(&[0, 3, 0, 1]);
        assert!(compose_inv_sqrt3(&p).is_err());
    }

    #[test]
    fn mixed_parity_is_rejected() {
        let p = IntPoly::from_i64s(&[1, 1]);
        assert!(matches!(compose_inv_sqrt3(&p), Err(Error::Irrational(_))));
    }

    #[test]
    fn log_derivative_of_odd_polynomial() {
        // H1 = 2x: d/dt log(2t/sqrt3) = 1/t
        let h1 = IntPoly::from_i64s(&[0, 2]);
        let expected = RatFunc::new(IntPoly::one(), IntPoly::x()).unwrap();
        assert_eq!(log_derivative_inv_sqrt3(&h1).unwrap(), expected);
        assert!(log_derivative_inv_sqrt3(&IntPoly::from_i64s(&[1, 1])).is_err());
    }

    #[test]
    fn scaled_coefficients() {
        let p = IntPoly::from_i64s(&[5, 0, 1]);
        let s = substitute_inv_sqrt3(&p);
        assert_eq!(s.power, 2);
        assert_eq!(s.coeffs[0], QuadInt { a: 15.into(), b: 0.into() });
        assert_eq!(s.coeffs[2], QuadInt { a: 1.into(), b: 0.into() });
    }
}
