//! Tanh-sinh quadrature of `P(x) e^{-x^2} / Q(x)` over the real line in
//! multi-precision floating point. This is the only inexact computation in
//! the crate.

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactpoly::IntPoly;

const RM: RoundingMode = RoundingMode::ToEven;

/// Working precision in bits for the requested number of decimal digits,
/// with guard bits.
pub fn bits_for_digits(digits: usize) -> usize {
    ((digits as f64) * std::f64::consts::LOG2_10).ceil() as usize + 64
}

/// Multi-precision context shared by one integration.
pub struct Context {
    pub bits: usize,
    consts: Consts,
}

impl Context {
    pub fn new(digits: usize) -> Result<Self> {
        let consts = Consts::new().map_err(|e| Error::Numeric(format!("{e:?}")))?;
        Ok(Context {
            bits: bits_for_digits(digits),
            consts,
        })
    }

    pub fn int(&mut self, n: &BigInt) -> BigFloat {
        BigFloat::parse(&n.to_string(), Radix::Dec, self.bits, RM, &mut self.consts)
    }

    pub fn small(&self, n: i64) -> BigFloat {
        BigFloat::from_i64(n, self.bits)
    }

    pub fn pi(&mut self) -> BigFloat {
        self.consts.pi(self.bits, RM)
    }

    pub fn sqrt_pi(&mut self) -> BigFloat {
        self.pi().sqrt(self.bits, RM)
    }

    pub fn exp(&mut self, x: &BigFloat) -> BigFloat {
        x.exp(self.bits, RM, &mut self.consts)
    }

    pub fn add(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.add(b, self.bits, RM)
    }

    pub fn sub(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.sub(b, self.bits, RM)
    }

    pub fn mul(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.mul(b, self.bits, RM)
    }

    pub fn div(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.div(b, self.bits, RM)
    }

    /// Decimal rendering with `digits` significant digits.
    pub fn format(&mut self, x: &BigFloat, digits: usize) -> String {
        let mut y = x.clone();
        let p = bits_for_digits(digits) - 64;
        let _ = y.set_precision(p.max(8), RM);
        y.format(Radix::Dec, RM, &mut self.consts)
            .unwrap_or_else(|_| "NaN".to_string())
    }

    pub fn to_f64(&mut self, x: &BigFloat) -> f64 {
        self.format(x, 20).parse::<f64>().unwrap_or(f64::NAN)
    }

    fn coefficients(&mut self, p: &IntPoly) -> Vec<BigFloat> {
        p.coeffs().iter().map(|c| self.int(c)).collect()
    }

    fn horner(&self, coeffs: &[BigFloat], x: &BigFloat) -> BigFloat {
        let mut acc = self.small(0);
        for c in coeffs.iter().rev() {
            acc = self.add(&self.mul(&acc, x), c);
        }
        acc
    }
}

/// Outcome of an adaptive integration.
#[derive(Debug, Clone)]
pub struct Integral {
    pub value: BigFloat,
    /// Difference between the last two refinement levels.
    pub change: BigFloat,
    pub levels: usize,
}

/// `∫_R P(x) e^{-x^2} / Q(x) dx`, with `Q` free of real zeros.
///
/// The integral is truncated to `[-L, L]` where the Gaussian tail is far
/// below the working precision, mapped onto `(-1, 1)`, and evaluated with
/// the tanh-sinh rule, halving the step until two levels agree relative to
/// the integral of `|f|`.
pub fn integrate_gaussian_rational(
    ctx: &mut Context,
    p: &IntPoly,
    q: &IntPoly,
    tolerance_digits: usize,
) -> Result<Integral> {
    if q.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if real_root_count(q) > 0 {
        return Err(Error::Numeric(format!(
            "denominator {} has real zeros",
            q.pretty("x")
        )));
    }
    let pc = ctx.coefficients(p);
    let qc = ctx.coefficients(q);
    // e^{-L^2} L^deg well below 10^{-digits}
    let deg = p.degree().unwrap_or(0) as f64;
    let target = (ctx.bits as f64) * std::f64::consts::LN_2;
    let mut half_width = 4.0f64;
    while half_width * half_width - deg * half_width.ln() < target + 10.0 {
        half_width += 0.5;
    }
    let l = BigFloat::from_f64(half_width, ctx.bits);
    let pi = ctx.pi();
    let half_pi = ctx.div(&pi, &ctx.small(2));
    let tol = BigFloat::from_f64(10f64.powi(-(tolerance_digits as i32)), ctx.bits);

    let one = ctx.small(1);
    let two = ctx.small(2);
    let cutoff = target + 10.0;
    // weight-times-integrand at tau; zero where the Gaussian is negligible
    let sample = |ctx: &mut Context, tau: f64| -> BigFloat {
        let x_approx = half_width * (std::f64::consts::FRAC_PI_2 * tau.sinh()).tanh();
        if x_approx * x_approx - deg * x_approx.abs().max(1.0).ln() > cutoff {
            return ctx.small(0);
        }
        let t = BigFloat::from_f64(tau, ctx.bits);
        let et = ctx.exp(&t);
        let inv_et = ctx.div(&one, &et);
        let sh = ctx.div(&ctx.sub(&et, &inv_et), &two);
        let ch = ctx.div(&ctx.add(&et, &inv_et), &two);
        let arg = ctx.mul(&half_pi, &sh);
        let ea = ctx.exp(&arg);
        let inv_ea = ctx.div(&one, &ea);
        let sum_e = ctx.add(&ea, &inv_ea);
        let u = ctx.div(&ctx.sub(&ea, &inv_ea), &sum_e);
        // cosh(arg)^2 = sum_e^2 / 4
        let w = ctx.div(&ctx.mul(&ctx.mul(&half_pi, &ch), &ctx.small(4)), &ctx.mul(&sum_e, &sum_e));
        let x = ctx.mul(&l, &u);
        let square = ctx.mul(&x, &x).neg();
        let gauss = ctx.exp(&square);
        let f = ctx.div(&ctx.mul(&ctx.horner(&pc, &x), &gauss), &ctx.horner(&qc, &x));
        ctx.mul(&f, &w)
    };

    let tau_max = 4.5f64;
    let mut h = 0.5f64;
    // level 0: all nodes k*h
    let mut sum = sample(ctx, 0.0);
    // running estimate of the integral of |f|, the scale for convergence
    let mut mass = sum.abs();
    let mut k = 1;
    while (k as f64) * h <= tau_max {
        let t = k as f64 * h;
        let (a, b) = (sample(ctx, t), sample(ctx, -t));
        mass = ctx.add(&ctx.add(&mass, &a.abs()), &b.abs());
        sum = ctx.add(&ctx.add(&sum, &a), &b);
        k += 1;
    }
    let scale = |ctx: &Context, s: &BigFloat, h: f64| ctx.mul(&ctx.mul(s, &BigFloat::from_f64(h, ctx.bits)), &l);
    let mut estimate = scale(ctx, &sum, h);
    for level in 1..=10 {
        h /= 2.0;
        // odd multiples of the new step
        let mut k = 1;
        while (k as f64) * h <= tau_max {
            let t = k as f64 * h;
            let (a, b) = (sample(ctx, t), sample(ctx, -t));
            mass = ctx.add(&ctx.add(&mass, &a.abs()), &b.abs());
            sum = ctx.add(&ctx.add(&sum, &a), &b);
            k += 2;
        }
        let next = scale(ctx, &sum, h);
        let change = ctx.sub(&next, &estimate).abs();
        let bound = ctx.mul(&tol, &scale(ctx, &mass, h));
        estimate = next;
        if level >= 3 && change.cmp(&bound).is_some_and(|c| c <= 0) {
            return Ok(Integral {
                value: estimate,
                change,
                levels: level,
            });
        }
    }
    Err(Error::Numeric("tanh-sinh refinement did not converge".into()))
}

/// Number of distinct real zeros of `p`, by a Sturm sequence.
pub fn real_root_count(p: &IntPoly) -> usize {
    let Some(deg) = p.degree() else { return 0 };
    if deg == 0 {
        return 0;
    }
    let mut seq = vec![p.clone(), p.derivative(1)];
    loop {
        let a = &seq[seq.len() - 2];
        let b = &seq[seq.len() - 1];
        if b.degree().unwrap_or(0) == 0 {
            break;
        }
        // remainder by -b equals remainder by b; the divisor must have a
        // positive leading coefficient so the pseudo-remainder keeps its sign
        let divisor = if b.leading_coeff().is_some_and(|c| c.sign() == num_bigint::Sign::Minus) {
            -b
        } else {
            b.clone()
        };
        let r = -a.pseudo_rem(&divisor);
        if r.is_zero() {
            break;
        }
        let content = r.content();
        seq.push(r.div_scalar_exact(&content).expect("content divides"));
    }
    let changes = |signs: Vec<num_bigint::Sign>| {
        signs
            .windows(2)
            .filter(|w| w[0] != w[1])
            .count()
    };
    let at_plus = seq
        .iter()
        .map(|f| f.leading_coeff().expect("non-zero").sign())
        .collect();
    let at_minus = seq
        .iter()
        .map(|f| {
            let s = f.leading_coeff().expect("non-zero").sign();
            if f.degree().unwrap_or(0) % 2 == 1 {
                -s
            } else {
                s
            }
        })
        .collect();
    changes(at_minus) - changes(at_plus)
}
