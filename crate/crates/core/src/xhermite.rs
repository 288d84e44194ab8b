//! Exceptional Hermite polynomials attached to a partition.
//!
//! `H_n^(λ) = Wr[H_{m_ℓ}, ..., H_{m_1}, H_{n+ℓ-|λ|}]` where `m_i` are the
//! positive elements of the standard diagram of `λ`. The family misses
//! exactly `|λ|` degrees.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::combinatorics::{MayaDiagram, Partition};
use crate::error::{Error, Result};
use crate::exactpoly::{rat_to_string, BigRat, IntPoly, RatFunc};
use crate::hermite::{equivalence_constant, hermite_wronskian, pseudo_wronskian};
use crate::minorder::xhermite_min_origin;
use crate::quadrature::{integrate_gaussian_rational, Context};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XHermiteFamily {
    pub lambda: Partition,
    pub maya: MayaDiagram,
    pub ell: usize,
    pub size: usize,
}

impl XHermiteFamily {
    pub fn new(lambda: &Partition) -> Self {
        XHermiteFamily {
            lambda: lambda.clone(),
            maya: MayaDiagram::from_partition(lambda),
            ell: lambda.len(),
            size: lambda.size(),
        }
    }

    /// Positive elements `m_1 > ... > m_ℓ`.
    pub fn elements(&self) -> &[i64] {
        self.maya.t_list()
    }

    /// `n + ℓ - |λ|`, when `n` is an admissible degree.
    pub fn inserted(&self, n: i64) -> Option<i64> {
        let e = n + self.ell as i64 - self.size as i64;
        (n >= 0 && !self.maya.contains(e)).then_some(e)
    }

    pub fn is_admissible(&self, n: i64) -> bool {
        self.inserted(n).is_some()
    }

    /// The missing degrees, ascending.
    pub fn excluded_degrees(&self) -> Vec<i64> {
        let offset = self.size as i64 - self.ell as i64;
        let mut out: Vec<i64> = (0..offset).collect();
        out.extend(self.elements().iter().rev().map(|m| m + offset));
        out
    }

    /// The first `count` admissible degrees.
    pub fn admissible_degrees(&self, count: usize) -> Vec<i64> {
        (0..).filter(|&n| self.is_admissible(n)).take(count).collect()
    }

    /// Admissible degrees up to and including `max`.
    pub fn admissible_up_to(&self, max: i64) -> Vec<i64> {
        (0..=max).filter(|&n| self.is_admissible(n)).collect()
    }

    fn require(&self, n: i64) -> Result<i64> {
        self.inserted(n).ok_or_else(|| Error::Inadmissible {
            partition: self.lambda.to_string(),
            n,
        })
    }

    /// `M ∪ {n + ℓ - |λ|}`.
    pub fn extended_diagram(&self, n: i64) -> Result<MayaDiagram> {
        Ok(self.maya.flip(self.require(n)?))
    }

    /// The sign relating the Wronskian to the pseudo-Wronskian of the
    /// extended diagram: `H_n^(λ) = sign · H_{M ∪ {e}}`. Moving `H_e` from
    /// the last row into ascending position passes every `m_i > e`.
    pub fn insertion_sign(&self, n: i64) -> Result<i32> {
        let e = self.require(n)?;
        let above = self.elements().iter().filter(|&&m| m > e).count();
        Ok(if above % 2 == 0 { 1 } else { -1 })
    }

    /// `H_M`, the Wronskian of the standard diagram.
    pub fn base(&self) -> IntPoly {
        pseudo_wronskian(&self.maya)
    }
}

/// `H_n^(λ)` computed as a Wronskian of order `ℓ + 1`.
pub fn exceptional_hermite(lambda: &Partition, n: i64) -> Result<IntPoly> {
    let family = XHermiteFamily::new(lambda);
    let e = family.require(n)?;
    let mut indices: Vec<usize> = family.elements().iter().rev().map(|&m| m as usize).collect();
    indices.push(e as usize);
    Ok(hermite_wronskian(&indices))
}

/// `H_M · T_λ[y] = H_M y'' - 2(x H_M + H_M') y' + (H_M'' + 2x H_M') y`.
pub fn t_lambda_numerator(base: &IntPoly, y: &IntPoly) -> IntPoly {
    let x = IntPoly::x();
    let two = BigInt::from(2);
    let d1 = base.derivative(1);
    let d2 = base.derivative(2);
    let first = &(&x * base) + &d1;
    let zeroth = &d2 + &(&x * &d1).scale(&two);
    let a = base * &y.derivative(2);
    let b = (&first * &y.derivative(1)).scale(&two);
    let c = &zeroth * y;
    &(&a - &b) + &c
}

/// `T_λ[y]` as an exact rational function.
pub fn apply_t_lambda(lambda: &Partition, y: &IntPoly) -> Result<RatFunc> {
    let base = XHermiteFamily::new(lambda).base();
    RatFunc::new(t_lambda_numerator(&base, y), base)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenReport {
    pub n: i64,
    pub eigenvalue: BigRat,
    /// `den(c) · H_M T_λ[y] - num(c) · H_M y`; zero when `T_λ[y] = c y`.
    pub residual: IntPoly,
}

impl EigenReport {
    pub fn holds(&self) -> bool {
        self.residual.is_zero()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "eigenvalue": rat_to_string(&self.eigenvalue),
            "residual_zero": self.holds(),
            "residual": self.residual.to_json("x"),
        })
    }
}

/// Eigenvalue of `T_λ` on `y`, read from leading coefficients, together
/// with the residual of the eigen-relation.
pub fn eigen_relation(base: &IntPoly, y: &IntPoly, n: i64) -> EigenReport {
    let lhs = t_lambda_numerator(base, y);
    let rhs = base * y;
    let eigenvalue = match (lhs.degree(), rhs.degree()) {
        (Some(dl), Some(dr)) if dl == dr => BigRat::new(
            lhs.leading_coeff().expect("non-zero").clone(),
            rhs.leading_coeff().expect("non-zero").clone(),
        ),
        _ => BigRat::zero(),
    };
    let residual = &lhs.scale(eigenvalue.denom()) - &rhs.scale(eigenvalue.numer());
    EigenReport {
        n,
        eigenvalue,
        residual,
    }
}

pub fn eigen_check(lambda: &Partition, n: i64) -> Result<EigenReport> {
    let y = exceptional_hermite(lambda, n)?;
    let base = XHermiteFamily::new(lambda).base();
    Ok(eigen_relation(&base, &y, n))
}

/// Exact least-squares line through `(n, eigenvalue)` points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenFit {
    pub slope: BigRat,
    pub intercept: BigRat,
    /// `N` in `eigenvalue = 2(N - n)`, i.e. `intercept / 2`.
    pub shift: BigRat,
    /// Every point lies on the line.
    pub exact: bool,
}

impl EigenFit {
    pub fn slope_is_minus_two(&self) -> bool {
        self.slope == BigRat::from_integer((-2).into())
    }
}

pub fn fit_eigenvalues(reports: &[EigenReport]) -> Result<EigenFit> {
    if reports.len() < 2 {
        return Err(Error::Precondition("at least two eigenvalues are needed".into()));
    }
    let count = BigRat::from_integer(reports.len().into());
    let xs: Vec<BigRat> = reports.iter().map(|r| BigRat::from_integer(r.n.into())).collect();
    let ys: Vec<&BigRat> = reports.iter().map(|r| &r.eigenvalue).collect();
    let mean_x = xs.iter().fold(BigRat::zero(), |a, x| a + x) / &count;
    let mean_y = ys.iter().fold(BigRat::zero(), |a, y| a + *y) / &count;
    let mut sxy = BigRat::zero();
    let mut sxx = BigRat::zero();
    for (x, y) in xs.iter().zip(&ys) {
        let dx = x - &mean_x;
        sxy += &dx * (*y - &mean_y);
        sxx += &dx * &dx;
    }
    if sxx.is_zero() {
        return Err(Error::Precondition("eigenvalues at a single degree".into()));
    }
    let slope = sxy / sxx;
    let intercept = &mean_y - &slope * &mean_x;
    let exact = xs.iter().zip(&ys).all(|(x, y)| &(&slope * x + &intercept) == *y);
    let shift = &intercept / BigRat::from_integer(2.into());
    Ok(EigenFit {
        slope,
        intercept,
        shift,
        exact,
    })
}

/// Eigenvalue shift `N` of the family, fitted over its first admissible
/// degrees.
pub fn family_shift(lambda: &Partition) -> Result<EigenFit> {
    let family = XHermiteFamily::new(lambda);
    let reports = family
        .admissible_degrees(4)
        .into_iter()
        .map(|n| eigen_check(lambda, n))
        .collect::<Result<Vec<_>>>()?;
    fit_eigenvalues(&reports)
}

/// A minimal-order pseudo-Wronskian for `H_n^(λ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinOrderForm {
    pub n: i64,
    pub origin: i64,
    /// `M ∪ {e}` relabelled at the origin.
    pub diagram: MayaDiagram,
    pub order: usize,
    pub polynomial: IntPoly,
    /// `H_n^(λ) = constant · polynomial`.
    pub constant: BigRat,
}

impl MinOrderForm {
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "origin": self.origin,
            "frobenius": self.diagram.to_string(),
            "order": self.order,
            "constant": rat_to_string(&self.constant),
            "polynomial": self.polynomial.to_json("x"),
        })
    }
}

pub fn min_order_form(lambda: &Partition, n: i64) -> Result<MinOrderForm> {
    let family = XHermiteFamily::new(lambda);
    let extended = family.extended_diagram(n)?;
    let choice = xhermite_min_origin(lambda, n)?;
    let diagram = extended.shift(-choice.origin);
    let sign = BigRat::from_integer(family.insertion_sign(n)?.into());
    Ok(MinOrderForm {
        n,
        origin: choice.origin,
        order: diagram.girth(),
        polynomial: pseudo_wronskian(&diagram),
        constant: sign * equivalence_constant(&extended, choice.origin),
        diagram,
    })
}

/// `√π 2^{j+ℓ} j! ∏(j - m_i)` without the `√π`.
pub fn norm_factor(family: &XHermiteFamily, j: i64) -> Result<BigInt> {
    if j < 0 {
        return Err(Error::Precondition(format!("negative index j = {j}")));
    }
    let mut out = BigInt::one() << (j as usize + family.ell);
    for k in 2..=j {
        out *= k;
    }
    for &m in family.elements() {
        out *= j - m;
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct NormReport {
    pub n: i64,
    pub m: i64,
    pub j: i64,
    pub integral: String,
    pub expected: String,
    /// `|I - expected| / scale`, where the scale is the expected norm, or
    /// the geometric mean of the two norms off the diagonal.
    pub relative_error: f64,
    pub passed: bool,
}

impl NormReport {
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "m": self.m,
            "j": self.j,
            "integral": self.integral,
            "expected": self.expected,
            "relative_error": self.relative_error,
            "passed": self.passed,
        })
    }
}

/// Numerically integrates `H_n^(λ) H_m^(λ) e^{-x^2} / H_M^2` and compares
/// with the closed-form norm, `j = n + ℓ - N`.
pub fn weight_and_norm_check(
    lambda: &Partition,
    n: i64,
    m: i64,
    digits: usize,
    tolerance: f64,
) -> Result<NormReport> {
    if !lambda.is_even() {
        return Err(Error::Precondition(format!("{lambda} is not an even partition")));
    }
    let family = XHermiteFamily::new(lambda);
    let fit = family_shift(lambda)?;
    if !fit.exact || !fit.shift.is_integer() {
        return Err(Error::Structural(format!("eigenvalue shift of {lambda} is not exact")));
    }
    let shift = fit.shift.to_integer();
    let j_of = |d: i64| -> i64 {
        let v: BigInt = BigInt::from(d + family.ell as i64) - &shift;
        i64::try_from(v).expect("small index")
    };
    let base = family.base();
    let weight_den = &base * &base;
    let product = &exceptional_hermite(lambda, n)? * &exceptional_hermite(lambda, m)?;
    let mut ctx = Context::new(digits)?;
    let integral = integrate_gaussian_rational(&mut ctx, &product, &weight_den, digits.saturating_sub(20).max(15))?;
    let sqrt_pi = ctx.sqrt_pi();
    let norm = |ctx: &mut Context, d: i64| -> Result<_> {
        let f = norm_factor(&family, j_of(d))?;
        let v = ctx.int(&f);
        Ok(ctx.mul(&v, &sqrt_pi))
    };
    let nn = norm(&mut ctx, n)?;
    let (expected, scale) = if n == m {
        (nn.clone(), nn.abs())
    } else {
        let mm = norm(&mut ctx, m)?;
        let prod = ctx.mul(&nn, &mm).abs();
        (ctx.small(0), prod.sqrt(ctx.bits, astro_float::RoundingMode::ToEven))
    };
    let diff = ctx.sub(&integral.value, &expected).abs();
    let rel = ctx.div(&diff, &scale);
    let relative_error = ctx.to_f64(&rel);
    Ok(NormReport {
        n,
        m,
        j: j_of(n),
        integral: ctx.format(&integral.value, 30),
        expected: ctx.format(&expected, 30),
        relative_error,
        passed: relative_error <= tolerance,
    })
}
