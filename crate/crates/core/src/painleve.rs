//! Rational extensions of the harmonic oscillator, Maya diagram chains and
//! the rational solutions of the fourth Painlevé equation
//!
//! `y'' = y'^2/(2y) + (3/2) y^3 + 4t y^2 + 2(t^2 - a) y + b/y`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Value};

use crate::combinatorics::MayaDiagram;
use crate::error::{Error, Result};
use crate::exactpoly::{log_derivative_inv_sqrt3, rat_to_string, BigRat, IntPoly, PolyMatrix, RatFunc};
use crate::hermite::{
    derivative_row, equivalence_constant, hermite_poly, index_shift_row, pseudo_wronskian,
};
use crate::minorder::corner_report;

fn rat(n: i64) -> BigRat {
    BigRat::from_integer(n.into())
}

/// `Z_- ∪ {m, ..., m + ℓ - 1}`.
pub fn gh_maya(m: u32, ell: u32) -> MayaDiagram {
    MayaDiagram::from_positive_elements((m..m + ell).map(i64::from)).expect("distinct elements")
}

/// `Z_- ∪ {3j + 1 : j < ℓ1} ∪ {3j + 2 : j < ℓ2}`.
pub fn o_maya(l1: u32, l2: u32) -> MayaDiagram {
    let ones = (0..l1).map(|j| 3 * i64::from(j) + 1);
    let twos = (0..l2).map(|j| 3 * i64::from(j) + 2);
    MayaDiagram::from_positive_elements(ones.chain(twos)).expect("distinct elements")
}

/// A sequence of diagrams, each obtained from the previous one by adding
/// or removing a single integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MayaChain {
    pub diagrams: Vec<MayaDiagram>,
    pub flips: Vec<i64>,
}

impl MayaChain {
    pub fn from_flips(start: MayaDiagram, flips: &[i64]) -> Self {
        let mut diagrams = vec![start];
        for &m in flips {
            let next = diagrams.last().expect("non-empty").flip(m);
            diagrams.push(next);
        }
        MayaChain {
            diagrams,
            flips: flips.to_vec(),
        }
    }

    pub fn is_consistent(&self) -> bool {
        self.diagrams.len() == self.flips.len() + 1
            && self
                .diagrams
                .windows(2)
                .zip(&self.flips)
                .all(|(w, &m)| w[0].flip(m) == w[1])
    }

    /// `k` with last = first + k, if the chain closes up to translation.
    pub fn cyclic_shift(&self) -> Option<i64> {
        let first = self.diagrams.first()?;
        let last = self.diagrams.last()?;
        let (a, ka) = first.standardize();
        let (b, kb) = last.standardize();
        (a == b).then_some(kb - ka)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PivClass {
    Gh { m: u32, ell: u32 },
    O { l1: u32, l2: u32 },
}

impl fmt::Display for PivClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PivClass::Gh { m, ell } => write!(f, "GH({m},{ell})"),
            PivClass::O { l1, l2 } => write!(f, "O({l1},{l2})"),
        }
    }
}

impl PivClass {
    pub fn maya(&self) -> MayaDiagram {
        match *self {
            PivClass::Gh { m, ell } => gh_maya(m, ell),
            PivClass::O { l1, l2 } => o_maya(l1, l2),
        }
    }
}

/// The 3-cycle starting at a GH- or O-type diagram. GH flips `m + ℓ`, `0`,
/// `m` and closes with shift 1; O adds `3ℓ2 + 2`, `3ℓ1 + 1`, `0` and closes
/// with shift 3.
pub fn three_cycle(class: PivClass) -> MayaChain {
    match class {
        PivClass::Gh { m, ell } => {
            let (m, ell) = (i64::from(m), i64::from(ell));
            MayaChain::from_flips(gh_maya(m as u32, ell as u32), &[m + ell, 0, m])
        }
        PivClass::O { l1, l2 } => {
            let (a, b) = (3 * i64::from(l2) + 2, 3 * i64::from(l1) + 1);
            MayaChain::from_flips(o_maya(l1, l2), &[a, b, 0])
        }
    }
}

/// `U_M = x^2 - 2 (log H_M)'' + 2|M_+| - 2|M_-|`, split into its parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPotential {
    /// `-2 (log H_M)''`
    pub log_part: RatFunc,
    /// `2|M_+| - 2|M_-|`
    pub offset: i64,
}

impl RationalPotential {
    pub fn to_ratfunc(&self) -> RatFunc {
        let x2 = RatFunc::from_poly(IntPoly::monomial(BigInt::one(), 2));
        x2.add(&self.log_part).add(&RatFunc::from_rat(&rat(self.offset)))
    }
}

/// A lowest-order determinant with the same logarithmic derivative as
/// `H_M`.
fn economical_determinant(m: &MayaDiagram) -> IntPoly {
    let k = corner_report(m).largest_origin();
    pseudo_wronskian(&m.shift(-k))
}

pub fn potential(m: &MayaDiagram) -> RationalPotential {
    let h = RatFunc::from_poly(economical_determinant(m));
    let log_part = h
        .log_derivative()
        .expect("pseudo-Wronskian is non-zero")
        .derivative()
        .scale(&rat(-2));
    let offset = 2 * m.t_list().len() as i64 - 2 * m.s_list().len() as i64;
    RationalPotential { log_part, offset }
}

/// `U_{M+k} = U_M + 2k`, compared part by part.
pub fn shift_check(m: &MayaDiagram, k: i64) -> bool {
    let u = potential(m);
    let v = potential(&m.shift(k));
    v.log_part == u.log_part && v.offset == u.offset + 2 * k
}

/// One Darboux step `M → M'` of a factorization chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainStep {
    pub flipped: i64,
    pub added: bool,
    /// Sign of the linear term of `f`.
    pub sigma: i32,
    /// `f = (log H_{M'}/H_M)' + σ x`.
    pub f: RatFunc,
    pub lambda: BigRat,
}

/// Finds the `σ` and factorization energy `λ` for which
/// `f' + f^2 = U_M - λ` and `-f' + f^2 = U_{M'} - λ`.
pub fn chain_step_verify(m: &MayaDiagram, flipped: i64) -> Result<ChainStep> {
    let next = m.flip(flipped);
    let u = potential(m).to_ratfunc();
    let u_next = potential(&next).to_ratfunc();
    let ratio = RatFunc::from_poly(economical_determinant(&next))
        .div(&RatFunc::from_poly(economical_determinant(m)))?;
    let log = ratio.log_derivative()?;
    for sigma in [1, -1] {
        let f = log.add(&RatFunc::linear(&rat(sigma as i64)));
        let fp = f.derivative();
        let f2 = f.mul(&f);
        let Some(lambda) = u.sub(&fp.add(&f2)).as_constant() else {
            continue;
        };
        let second = u_next.sub(&f2.sub(&fp)).as_constant();
        if second.as_ref() == Some(&lambda) {
            return Ok(ChainStep {
                flipped,
                added: !m.contains(flipped),
                sigma,
                f,
                lambda,
            });
        }
    }
    Err(Error::Structural(format!(
        "no Darboux factorization links {m} and {next}"
    )))
}

/// Energies of a chain and the shift `Δ` with `U_last = U_first + Δ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainEnergies {
    pub steps: Vec<ChainStep>,
    /// `α_i = λ_i - λ_{i+1}`, the last one using the translated first step.
    pub alphas: Vec<BigRat>,
    pub delta: BigRat,
}

/// Verifies every step of a cyclic chain and the telescoping
/// `α_1 + ... + α_n = -Δ`.
pub fn chain_energies(chain: &MayaChain) -> Result<ChainEnergies> {
    let k = chain
        .cyclic_shift()
        .ok_or_else(|| Error::Precondition("chain does not close up to translation".into()))?;
    let steps = chain
        .diagrams
        .iter()
        .zip(&chain.flips)
        .map(|(d, &m)| chain_step_verify(d, m))
        .collect::<Result<Vec<_>>>()?;
    let delta = rat(2 * k);
    // the step after the last one is the first step translated by k
    let wrapped = &steps[0].lambda + &delta;
    let mut alphas = Vec::with_capacity(steps.len());
    for i in 0..steps.len() {
        let next = steps.get(i + 1).map(|s| s.lambda.clone()).unwrap_or_else(|| wrapped.clone());
        alphas.push(&steps[i].lambda - next);
    }
    Ok(ChainEnergies {
        steps,
        alphas,
        delta,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PivSolution {
    pub y: RatFunc,
    pub a: BigRat,
    pub b: BigRat,
    pub class: PivClass,
    pub branch: u8,
}

impl PivSolution {
    pub fn to_json(&self) -> Value {
        let (kind, p, q) = match self.class {
            PivClass::Gh { m, ell } => ("gh", m, ell),
            PivClass::O { l1, l2 } => ("o", l1, l2),
        };
        json!({
            "class": kind,
            "params": [p, q],
            "branch": self.branch,
            "y": self.y.to_json("t"),
            "a": rat_to_string(&self.a),
            "b": rat_to_string(&self.b),
        })
    }
}

fn nonzero(y: RatFunc, class: PivClass, branch: u8) -> Result<RatFunc> {
    if y.is_zero() {
        return Err(Error::InvalidParameters(format!(
            "{class} branch {branch} gives y = 0"
        )));
    }
    Ok(y)
}

/// `D_x log(H_P / H_Q)` at `x = t`.
fn log_ratio(p: &MayaDiagram, q: &MayaDiagram) -> Result<RatFunc> {
    let lp = RatFunc::from_poly(economical_determinant(p)).log_derivative()?;
    let lq = RatFunc::from_poly(economical_determinant(q)).log_derivative()?;
    Ok(lp.sub(&lq))
}

/// `D_t log(H_P(t/√3) / H_Q(t/√3))`.
fn log_ratio_inv_sqrt3(p: &MayaDiagram, q: &MayaDiagram) -> Result<RatFunc> {
    let lp = log_derivative_inv_sqrt3(&economical_determinant(p))?;
    let lq = log_derivative_inv_sqrt3(&economical_determinant(q))?;
    Ok(lp.sub(&lq))
}

pub fn piv_solution_gh(m: u32, ell: u32, branch: u8) -> Result<PivSolution> {
    let class = PivClass::Gh { m, ell };
    let here = gh_maya(m, ell);
    let (mi, li) = (i64::from(m), i64::from(ell));
    let (y, a, b) = match branch {
        1 => (
            log_ratio(&here, &gh_maya(m, ell + 1))?,
            rat(-(1 + mi + 2 * li)),
            rat(-2 * mi * mi),
        ),
        2 if m > 0 => (
            log_ratio(&here, &gh_maya(m - 1, ell))?,
            rat(2 * mi + li - 1),
            rat(-2 * li * li),
        ),
        3 if ell > 0 => (
            log_ratio(&here, &gh_maya(m + 1, ell - 1))?.sub(&RatFunc::linear(&rat(2))),
            rat(li - mi - 1),
            rat(-2 * (mi + li) * (mi + li)),
        ),
        2 => return Err(Error::InvalidParameters("GH branch 2 requires m > 0".into())),
        3 => return Err(Error::InvalidParameters("GH branch 3 requires ell > 0".into())),
        _ => return Err(Error::InvalidParameters(format!("branch {branch} not in 1..=3"))),
    };
    Ok(PivSolution {
        y: nonzero(y, class, branch)?,
        a,
        b,
        class,
        branch,
    })
}

pub fn piv_solution_o(l1: u32, l2: u32, branch: u8) -> Result<PivSolution> {
    let class = PivClass::O { l1, l2 };
    let here = o_maya(l1, l2);
    let (p, q) = (i64::from(l1), i64::from(l2));
    let two_ninths = BigRat::new((-2).into(), 9.into());
    let sq = |v: i64| &two_ninths * rat(v * v);
    let (other, a, b) = match branch {
        1 if l1 > 0 && l2 > 0 => (o_maya(l1 - 1, l2 - 1), rat(p + q), sq(1 - 3 * p + 3 * q)),
        1 => return Err(Error::InvalidParameters("O branch 1 requires l1, l2 > 0".into())),
        2 => (o_maya(l1 + 1, l2), rat(-1 - 2 * p + q), sq(2 + 3 * q)),
        3 => (o_maya(l1, l2 + 1), rat(-2 - 2 * q + p), sq(1 + 3 * p)),
        _ => return Err(Error::InvalidParameters(format!("branch {branch} not in 1..=3"))),
    };
    let linear = RatFunc::linear(&BigRat::new((-2).into(), 3.into()));
    let y = linear.add(&log_ratio_inv_sqrt3(&here, &other)?);
    Ok(PivSolution {
        y: nonzero(y, class, branch)?,
        a,
        b,
        class,
        branch,
    })
}

pub fn piv_solution(class: PivClass, branch: u8) -> Result<PivSolution> {
    match class {
        PivClass::Gh { m, ell } => piv_solution_gh(m, ell, branch),
        PivClass::O { l1, l2 } => piv_solution_o(l1, l2, branch),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PivCheck {
    pub verified: bool,
    /// `D^4 · den(a) den(b) · (2yy'' - y'^2 - 3y^4 - 8ty^3 - 4(t^2-a)y^2 - 2b)`
    /// for `y = N/D`.
    pub residual: IntPoly,
}

/// Checks `2yy'' - y'^2 - 3y^4 - 8ty^3 - 4(t^2 - a)y^2 - 2b = 0` exactly.
pub fn verify_piv_raw(y: &RatFunc, a: &BigRat, b: &BigRat) -> Result<PivCheck> {
    if y.is_zero() {
        return Err(Error::Precondition("y must be non-zero".into()));
    }
    let n = y.numer();
    let d = y.denom();
    let (n1, n2) = (n.derivative(1), n.derivative(2));
    let (d1, d2) = (d.derivative(1), d.derivative(2));
    let c = |v: i64| BigInt::from(v);
    // y' D^2 and y'' D^3
    let p1 = &(&n1 * d) - &(n * &d1);
    let p2 = &(&(&(&n2 * d) - &(n * &d2)) * d) - &(&d1 * &p1).scale(&c(2));
    let t = IntPoly::x();
    let n2p = n * n;
    let d2p = d * d;
    // scale so that a and b become integers
    let s = a.denom() * b.denom();
    let a_int = a.numer() * b.denom();
    let b_int = b.numer() * a.denom();
    let t2 = &(&t * &t).scale(&s) - &IntPoly::constant(a_int);
    let terms = [
        (n * &p2).scale(&(c(2) * &s)),
        -(&p1 * &p1).scale(&s),
        -(&n2p * &n2p).scale(&(c(3) * &s)),
        -(&(&t * &(&n2p * n)) * d).scale(&(c(8) * &s)),
        -(&(&t2 * &n2p) * &d2p).scale(&c(4)),
        -(&d2p * &d2p).scale(&(c(2) * b_int)),
    ];
    let residual = terms.iter().fold(IntPoly::zero(), |acc, p| &acc + p);
    Ok(PivCheck {
        verified: residual.is_zero(),
        residual,
    })
}

pub fn verify_piv(sol: &PivSolution) -> Result<PivCheck> {
    verify_piv_raw(&sol.y, &sol.a, &sol.b)
}

/// Every solution with both class parameters in `0..=max`, in a fixed
/// order: GH before O, parameters ascending, branches ascending.
pub fn catalog(max: u32) -> Vec<PivSolution> {
    let mut out = Vec::new();
    for p in 0..=max {
        for q in 0..=max {
            for branch in 1..=3 {
                if let Ok(s) = piv_solution_gh(p, q, branch) {
                    out.push(s);
                }
            }
        }
    }
    for p in 0..=max {
        for q in 0..=max {
            for branch in 1..=3 {
                if let Ok(s) = piv_solution_o(p, q, branch) {
                    out.push(s);
                }
            }
        }
    }
    out
}

/// A minimal-order determinant for a GH- or O-type diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalForm {
    pub order: usize,
    pub origin: i64,
    pub diagram: MayaDiagram,
    pub polynomial: IntPoly,
    /// `H_M = constant · polynomial`.
    pub constant: BigRat,
    /// The matrix in the row order of the closed-form statement.
    pub displayed: PolyMatrix,
    /// `det(displayed) = display_sign · polynomial`.
    pub display_sign: i32,
}

impl MinimalForm {
    pub fn to_json(&self) -> Value {
        json!({
            "order": self.order,
            "origin": self.origin,
            "frobenius": self.diagram.to_string(),
            "constant": rat_to_string(&self.constant),
            "display_sign": self.display_sign,
            "polynomial": self.polynomial.to_json("x"),
        })
    }
}

fn minimal_form(m: &MayaDiagram, origin: i64, displayed: PolyMatrix) -> Result<MinimalForm> {
    let diagram = m.shift(-origin);
    let polynomial = pseudo_wronskian(&diagram);
    let det = displayed.det_fraction_free()?;
    let display_sign = if det == polynomial {
        1
    } else if det == -&polynomial {
        -1
    } else {
        return Err(Error::Structural(format!(
            "closed-form matrix for {m} at origin {origin} is not ±H_(M-k)"
        )));
    };
    Ok(MinimalForm {
        order: diagram.girth(),
        origin,
        constant: equivalence_constant(m, origin),
        polynomial,
        diagram,
        displayed,
        display_sign,
    })
}

/// Order `min(m, ℓ)`: the Wronskian of `H_m..H_{m+ℓ-1}` when `ℓ ≤ m`,
/// otherwise the Hankel-type matrix of `ĥ_ℓ..ĥ_{ℓ+2m-2}` at origin `m + ℓ`.
pub fn min_order_gh(m: u32, ell: u32) -> Result<MinimalForm> {
    if m == 0 || ell == 0 {
        return Err(Error::InvalidParameters("GH minimal form requires m, ell > 0".into()));
    }
    let maya = gh_maya(m, ell);
    let (mu, lu) = (m as usize, ell as usize);
    if ell <= m {
        let rows = (mu..mu + lu).map(|j| derivative_row(&hermite_poly(j), lu)).collect();
        minimal_form(&maya, 0, PolyMatrix::from_rows(rows)?)
    } else {
        let rows = (0..mu).map(|i| index_shift_row(lu + i, mu)).collect();
        minimal_form(&maya, i64::from(m + ell), PolyMatrix::from_rows(rows)?)
    }
}

/// Order `max(ℓ1, ℓ2)` at origin `3 min(ℓ1, ℓ2)`: index-shift rows
/// `ĥ_2, ĥ_5, ...` followed by derivative rows of `H_2, H_5, ...` when
/// `ℓ1 ≤ ℓ2`, or of `H_1, H_4, ...` when `ℓ1 > ℓ2`.
pub fn min_order_o(l1: u32, l2: u32) -> Result<MinimalForm> {
    let maya = o_maya(l1, l2);
    let (small, large) = (l1.min(l2) as usize, l1.max(l2) as usize);
    let first_t = if l1 <= l2 { 2 } else { 1 };
    let mut rows: Vec<Vec<IntPoly>> = (0..small).map(|i| index_shift_row(3 * i + 2, large)).collect();
    rows.extend((0..large - small).map(|i| derivative_row(&hermite_poly(3 * i + first_t), large)));
    minimal_form(&maya, 3 * small as i64, PolyMatrix::from_rows(rows)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn maya(s: &str) -> MayaDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn family_diagrams() {
        assert_eq!(gh_maya(2, 5), maya("|6,5,4,3,2"));
        assert_eq!(gh_maya(3, 0), MayaDiagram::vacuum());
        assert_eq!(gh_maya(0, 3).standardize(), (MayaDiagram::vacuum(), 3));
        assert_eq!(o_maya(2, 5), maya("|14,11,8,5,4,2,1"));
        assert_eq!(o_maya(0, 0), MayaDiagram::vacuum());
        assert_eq!(o_maya(1, 2), maya("|5,2,1"));
    }

    #[test]
    fn cycles_close() {
        let c = three_cycle(PivClass::Gh { m: 2, ell: 4 });
        assert!(c.is_consistent());
        assert_eq!(c.cyclic_shift(), Some(1));
        assert_eq!(c.diagrams[1], gh_maya(2, 5));
        let c = three_cycle(PivClass::O { l1: 1, l2: 2 });
        assert_eq!(c.cyclic_shift(), Some(3));
        assert_eq!(c.diagrams[3], o_maya(1, 2).shift(3));
        let c = three_cycle(PivClass::Gh { m: 0, ell: 0 });
        assert!(c.diagrams.iter().all(|d| d.standardize().0 == MayaDiagram::vacuum()));
    }

    #[test]
    fn oscillator_step() {
        let step = chain_step_verify(&MayaDiagram::vacuum(), 0).unwrap();
        assert_eq!((step.sigma, step.lambda.clone()), (-1, rat(1)));
        assert!(step.added);
        let back = chain_step_verify(&MayaDiagram::vacuum().flip(0), 0).unwrap();
        assert_eq!(back.f, step.f.neg());
        assert_eq!(back.lambda, step.lambda);
    }

    #[test]
    fn potential_shifts() {
        let m = gh_maya(1, 1);
        let u = potential(&m);
        assert_eq!(potential(&m.shift(1)).offset - u.offset, 2);
        assert_eq!(potential(&m.shift(-3)).log_part, u.log_part);
        assert_eq!(potential(&MayaDiagram::vacuum()).log_part, RatFunc::zero());
        assert!(u.log_part.numer().degree() < u.log_part.denom().degree());
        assert!((-4..=4).all(|k| shift_check(&o_maya(2, 1), k)));
    }

    #[test]
    fn chain_alphas_telescope() {
        for class in [PivClass::Gh { m: 2, ell: 4 }, PivClass::O { l1: 1, l2: 2 }] {
            let e = chain_energies(&three_cycle(class)).unwrap();
            let sum = e.alphas.iter().fold(BigRat::zero(), |a, b| a + b);
            assert_eq!(sum, -e.delta.clone());
        }
    }

    #[test]
    fn example_solutions_verify() {
        for branch in 1..=3 {
            let s = piv_solution_gh(2, 4, branch).unwrap();
            assert!(verify_piv(&s).unwrap().verified, "gh branch {branch}");
            let s = piv_solution_o(1, 2, branch).unwrap();
            assert!(verify_piv(&s).unwrap().verified, "o branch {branch}");
        }
        let s = piv_solution_gh(2, 4, 1).unwrap();
        assert_eq!((s.a.clone(), s.b.clone()), (rat(-11), rat(-8)));
        let bad = verify_piv_raw(&s.y, &s.a, &(&s.b + rat(1))).unwrap();
        assert!(!bad.verified);
        assert!(piv_solution_gh(0, 0, 1).is_err());
        assert!(piv_solution_gh(0, 3, 2).is_err());
        assert!(piv_solution_o(0, 2, 1).is_err());
    }

    #[test]
    fn minimal_forms() {
        let f = min_order_gh(2, 4).unwrap();
        assert_eq!((f.order, f.origin), (2, 6));
        assert_eq!(f.polynomial, IntPoly::from_i64s(&[45, 0, 0, 0, 120, 0, 64, 0, 16]).scale(&(-32).into()));
        let f = min_order_gh(3, 5).unwrap();
        assert_eq!(f.order, 3);
        let f = min_order_gh(4, 2).unwrap();
        assert_eq!((f.order, f.origin, f.display_sign), (2, 0, 1));
        let f = min_order_o(2, 2).unwrap();
        assert_eq!((f.order, f.origin), (2, 6));
        assert_eq!(f.polynomial, IntPoly::from_i64s(&[5, 0, 10, 0, 20, 0, 8]).scale(&(-48).into()));
        let f = min_order_o(3, 5).unwrap();
        assert_eq!((f.order, f.diagram.to_string()), (5, "(8,5,2 | 5,2)".to_string()));
        let f = min_order_o(3, 1).unwrap();
        assert_eq!(f.order, 3);
        let f = min_order_o(0, 1).unwrap();
        assert_eq!((f.order, f.polynomial.clone()), (1, hermite_poly(2)));
        assert_eq!(min_order_o(0, 0).unwrap().polynomial, IntPoly::one());
    }
}
