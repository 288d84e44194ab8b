use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{BigRat, IntPoly, PolyJson};
use crate::error::{Error, Result};

/// Reduced quotient of two integer polynomials.
///
/// Canonical form: `gcd(num, den) = 1` over the rationals, `den` has a
/// positive leading coefficient, and the integer contents of `num` and
/// `den` are coprime. Zero is `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: IntPoly,
    den: IntPoly,
}

impl RatFunc {
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn zero() -> Self {
        RatFunc {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(IntPoly::one())
    }

    pub fn from_poly(p: IntPoly) -> Self {
        RatFunc {
            num: p,
            den: IntPoly::one(),
        }
    }

    pub fn from_rat(c: &BigRat) -> Self {
        Self::reduce(
            IntPoly::constant(c.numer().clone()),
            IntPoly::constant(c.denom().clone()),
        )
    }

    /// The rational function `c * x`.
    pub fn linear(c: &BigRat) -> Self {
        Self::reduce(
            IntPoly::monomial(c.numer().clone(), 1),
            IntPoly::constant(c.denom().clone()),
        )
    }

    fn reduce(num: IntPoly, den: IntPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.primitive_part().gcd(&den.primitive_part());
        let (mut num, mut den) = if g.is_constant() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        let c = num.content().gcd(&den.content());
        let c = if den.leading_coeff().is_some_and(|l| l.is_negative()) {
            -c
        } else {
            c
        };
        if !c.is_one() {
            num = num.div_scalar_exact(&c).expect("content");
            den = den.div_scalar_exact(&c).expect("content");
        }
        RatFunc { num, den }
    }

    pub fn numer(&self) -> &IntPoly {
        &self.num
    }

    pub fn denom(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The constant value, when the function is constant.
    pub fn as_constant(&self) -> Option<BigRat> {
        if self.num.is_constant() && self.den.is_constant() {
            Some(BigRat::new(self.num.coeff(0), self.den.coeff(0)))
        } else {
            None
        }
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        if self.den == other.den {
            return Self::reduce(&self.num + &other.num, self.den.clone());
        }
        Self::reduce(
            &(&self.num * &other.den) + &(&other.num * &self.den),
            &self.den * &other.den,
        )
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        Self::reduce(&self.num * &other.num, &self.den * &other.den)
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(
            &self.num * &other.den,
            &self.den * &other.num,
        ))
    }

    pub fn scale(&self, c: &BigRat) -> RatFunc {
        Self::reduce(self.num.scale(c.numer()), self.den.scale(c.denom()))
    }

    pub fn derivative(&self) -> RatFunc {
        let n1 = self.num.derivative(1);
        let d1 = self.den.derivative(1);
        Self::reduce(
            &(&n1 * &self.den) - &(&self.num * &d1),
            &self.den * &self.den,
        )
    }

    /// `f' / f`.
    pub fn log_derivative(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // (n/d)'/(n/d) = n'/n - d'/d
        let a = Self::reduce(self.num.derivative(1), self.num.clone());
        let b = Self::reduce(self.den.derivative(1), self.den.clone());
        Ok(a.sub(&b))
    }

    pub fn eval_rat(&self, x: &BigRat) -> Result<BigRat> {
        let d = self.den.eval_rat(x);
        if d.is_zero() {
            return Err(Error::Pole(format!("denominator vanishes at {x}")));
        }
        Ok(self.num.eval_rat(x) / d)
    }

    /// `f(c x)` for a rational scale factor `c`.
    pub fn compose_scale(&self, c: &BigRat) -> RatFunc {
        let sub = |p: &IntPoly| -> (IntPoly, BigInt) {
            // p(c x) = sum a_i c^i x^i = (1/q^d) sum a_i p^i q^(d-i) x^i
            let Some(d) = p.degree() else {
                return (IntPoly::zero(), BigInt::one());
            };
            let (cn, cd) = (c.numer(), c.denom());
            let coeffs = p
                .coeffs()
                .iter()
                .enumerate()
                .map(|(i, a)| a * num_traits::pow(cn.clone(), i) * num_traits::pow(cd.clone(), d - i))
                .collect();
            (IntPoly::from_coeffs(coeffs), num_traits::pow(cd.clone(), d))
        };
        let (n, nscale) = sub(&self.num);
        let (d, dscale) = sub(&self.den);
        Self::reduce(n.scale(&dscale), d.scale(&nscale))
    }

    pub fn pretty(&self, var: &str) -> String {
        if self.den == IntPoly::one() {
            return self.num.pretty(var);
        }
        format!("({}) / ({})", self.num.pretty(var), self.den.pretty(var))
    }

    pub fn to_json(&self, var: &str) -> RatFuncJson {
        RatFuncJson {
            num: self.num.to_json(var),
            den: self.den.to_json(var),
        }
    }

    pub fn from_json(json: &RatFuncJson) -> Result<RatFunc> {
        RatFunc::new(IntPoly::from_json(&json.num)?, IntPoly::from_json(&json.den)?)
    }
}

/// `{"num": <poly>, "den": <poly>}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatFuncJson {
    pub num: PolyJson,
    pub den: PolyJson,
}

/// Renders an exact rational as `p/q`, or `p` when the denominator is one.
pub fn rat_to_string(r: &BigRat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rat(s: &str) -> Result<BigRat> {
    let s = s.trim();
    let parse_int = |t: &str| {
        t.trim()
            .parse::<BigInt>()
            .map_err(|e| Error::Parse(format!("rational {s:?}: {e}")))
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(Error::Parse(format!("rational {s:?} has zero denominator")));
            }
            Ok(BigRat::new(parse_int(n)?, d))
        }
        None => Ok(BigRat::from_integer(parse_int(s)?)),
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty("x"))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({})", self.pretty("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn rf(n: &[i64], d: &[i64]) -> RatFunc {
        RatFunc::new(p(n), p(d)).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRat {
        BigRat::new(n.into(), d.into())
    }

    #[test]
    fn canonical_form() {
        let f = rf(&[0, 2], &[0, 0, 4]);
        assert_eq!(f.numer(), &p(&[1]));
        assert_eq!(f.denom(), &p(&[0, 2]));
        let g = rf(&[1], &[0, -1]);
        assert_eq!(g.numer(), &p(&[-1]));
        assert_eq!(g.denom(), &p(&[0, 1]));
        assert!(RatFunc::new(p(&[1]), IntPoly::zero()).is_err());
    }

    #[test]
    fn log_derivatives() {
        let x2 = RatFunc::from_poly(p(&[0, 0, 1]));
        assert_eq!(x2.log_derivative().unwrap(), rf(&[2], &[0, 1]));
        assert_eq!(
            RatFunc::from_rat(&q(5, 3)).log_derivative().unwrap(),
            RatFunc::zero()
        );
        assert_eq!(RatFunc::zero().log_derivative(), Err(Error::DivisionByZero));
    }

    #[test]
    fn quotient_rule() {
        // d/dt 1/(2t^2-3) = -4t/(2t^2-3)^2
        let f = rf(&[1], &[-3, 0, 2]);
        let den = &p(&[-3, 0, 2]) * &p(&[-3, 0, 2]);
        assert_eq!(f.derivative(), RatFunc::new(p(&[0, -4]), den).unwrap());
    }

    #[test]
    fn division_by_zero_function() {
        assert_eq!(
            RatFunc::one().div(&RatFunc::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn evaluation_at_pole() {
        let f = rf(&[1], &[-1, 1]);
        assert!(matches!(f.eval_rat(&q(1, 1)), Err(Error::Pole(_))));
        assert_eq!(f.eval_rat(&q(3, 1)).unwrap(), q(1, 2));
    }

    #[test]
    fn compose_rational_scale() {
        // H2(x) at x = t/2: t^2 - 2
        let h2 = RatFunc::from_poly(p(&[-2, 0, 4]));
        assert_eq!(h2.compose_scale(&q(1, 2)), RatFunc::from_poly(p(&[-2, 0, 1])));
        let f = rf(&[1], &[0, 3]);
        assert_eq!(f.compose_scale(&q(2, 3)), rf(&[1], &[0, 2]));
    }

    #[test]
    fn rational_strings() {
        assert_eq!(rat_to_string(&q(-32, 9)), "-32/9");
        assert_eq!(rat_to_string(&q(14, 2)), "7");
        assert_eq!(parse_rat("-32/9").unwrap(), q(-32, 9));
        assert_eq!(parse_rat("7").unwrap(), q(7, 1));
        assert!(parse_rat("1/0").is_err());
    }
}
