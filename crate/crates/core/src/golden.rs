//! Reference identities between Hermite determinants, kept as data so the
//! command line self-test and the acceptance tests read the same matrices.
//!
//! Each [`Identity`] carries the constant as displayed in the literature
//! (`printed`) next to the two sides built from explicit matrices. Where the
//! displayed constant or matrix is wrong, [`golden_suite`] pins the value that
//! exact arithmetic gives instead.

use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Value};

use crate::combinatorics::{MayaDiagram, Partition};
use crate::exactpoly::{rat_to_string, BigRat, IntPoly, PolyMatrix, RatFunc};
use crate::hermite::{
    conj_hermite_poly, derivative_row, equivalence_constant, hermite_poly, hermite_wronskian,
    index_shift_row, is_scalar_multiple, proportionality, pseudo_wronskian, wronskian,
};
use crate::minorder::{corner_report, durfee_symbol};
use crate::painleve::{
    gh_maya, min_order_gh, min_order_o, o_maya, piv_solution, verify_piv, PivClass,
};
use crate::xhermite::exceptional_hermite;

/// `lhs = printed · rhs`, as displayed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Identity {
    pub label: String,
    pub lhs: IntPoly,
    pub rhs: IntPoly,
    pub printed: BigRat,
}

impl Identity {
    pub fn holds_as_printed(&self) -> bool {
        !self.rhs.is_zero() && is_scalar_multiple(&self.lhs, &self.printed, &self.rhs)
    }

    /// The constant that makes the identity true, if the sides are
    /// proportional at all.
    pub fn actual(&self) -> Option<BigRat> {
        proportionality(&self.lhs, &self.rhs)
    }
}

fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

fn rat(n: i64) -> BigRat {
    BigRat::from_integer(int(n))
}

fn pow2(e: u32) -> BigInt {
    BigInt::one() << e
}

fn det(rows: Vec<Vec<IntPoly>>) -> IntPoly {
    PolyMatrix::from_rows(rows)
        .and_then(|m| m.det_fraction_free())
        .expect("square matrix")
}

/// Row `(ĥ_s, ..., ĥ_{s+size-1})`.
fn hat(s: usize, size: usize) -> Vec<IntPoly> {
    index_shift_row(s, size)
}

/// Row `(H_n, H_n', ..., H_n^{(size-1)})`.
fn herm(n: usize, size: usize) -> Vec<IntPoly> {
    derivative_row(&hermite_poly(n), size)
}

fn part(p: &[usize]) -> Partition {
    Partition::new(p.to_vec()).expect("valid partition")
}

fn xh(lambda: &[usize], n: i64) -> IntPoly {
    exceptional_hermite(&part(lambda), n).expect("admissible degree")
}

/// The three determinants of the opening identity: the Wronskian of
/// `H_1, H_2, H_3, H_6`, the Wronskian of `ĥ_1, ĥ_2, ĥ_6`, and the mixed
/// determinant with rows `(H_2, H_2')` and `(ĥ_3, ĥ_4)`.
pub fn intro_determinants() -> [IntPoly; 3] {
    let d1 = hermite_wronskian(&[1, 2, 3, 6]);
    let d2 = wronskian(&[conj_hermite_poly(1), conj_hermite_poly(2), conj_hermite_poly(6)]);
    let d3 = det(vec![herm(2, 2), hat(3, 2)]);
    [d1, d2, d3]
}

/// `H_M`, `H_{M+3}` and `H_{M+6}` for `M = (5,2,1 | 2,1)`, the diagram of the
/// partition `(4,4,3,1,1)` at origin `-6`.
pub fn equivalence_example() -> (MayaDiagram, [IntPoly; 3]) {
    let m: MayaDiagram = "5,2,1|2,1".parse().expect("valid symbol");
    let h_m1 = det(vec![hat(2, 4), herm(2, 4), herm(4, 4), herm(5, 4)]);
    let h_m2 = hermite_wronskian(&[1, 2, 5, 7, 8]);
    (m.clone(), [pseudo_wronskian(&m), h_m1, h_m2])
}

/// The two Wronskians of the exceptional Hermite examples against their
/// lowest-order pseudo-Wronskians.
pub fn minimal_wronskian_identities() -> Vec<Identity> {
    vec![
        Identity {
            label: "Wr[H1,H2,H4,H5] vs det[h5 h6; h2 h3]".into(),
            lhs: hermite_wronskian(&[1, 2, 4, 5]),
            rhs: det(vec![hat(5, 2), hat(2, 2)]),
            printed: rat(-(1 << 5) * 24),
        },
        Identity {
            label: "Wr[H1,H2,H6,H7] vs det[h2 h3 h4; H3; H4]".into(),
            lhs: hermite_wronskian(&[1, 2, 6, 7]),
            rhs: det(vec![hat(2, 3), herm(3, 3), herm(4, 3)]),
            printed: rat((1 << 5) * 600),
        },
    ]
}

fn k_first(n: i64) -> BigRat {
    BigRat::from_integer(-pow2(9) * 24 * (n - 3) * (n - 4) * (n - 6) * (n - 7))
}

fn k_second(n: i64, factor: i64) -> BigRat {
    BigRat::from_integer(-pow2(10) * factor * (n - 7) * (n - 8))
}

/// Every displayed exceptional Hermite identity for `λ = (2,2,1,1)` and
/// `λ = (4,4,1,1)`, with the symbolic families expanded at `n ≤ max_n`.
/// Matrices and constants are exactly as displayed.
pub fn xhermite_displays(max_n: i64) -> Vec<Identity> {
    let a = [2, 2, 1, 1];
    let b = [4, 4, 1, 1];
    let c12 = BigRat::from_integer(pow2(12));
    let c11 = BigRat::from_integer(pow2(11));
    let mut out = vec![
        Identity {
            label: "(2,2,1,1) n=2".into(),
            lhs: xh(&a, 2),
            rhs: conj_hermite_poly(2),
            printed: &c12 * rat(120),
        },
        Identity {
            label: "(2,2,1,1) n=5".into(),
            lhs: xh(&a, 5),
            rhs: conj_hermite_poly(5),
            printed: &c12 * rat(72),
        },
        Identity {
            label: "(2,2,1,1) n=8".into(),
            lhs: xh(&a, 8),
            rhs: det(vec![hat(6, 2), hat(3, 2)]),
            printed: k_first(8),
        },
    ];
    for n in 9..=max_n {
        out.push(Identity {
            label: format!("(2,2,1,1) n={n} (K_n family)"),
            lhs: xh(&a, n),
            rhs: det(vec![hat(5, 3), hat(2, 3), herm((n - 8) as usize, 3)]),
            printed: k_first(n),
        });
    }
    out.extend([
        Identity {
            label: "(4,4,1,1) n=6".into(),
            lhs: xh(&b, 6),
            rhs: hermite_wronskian(&[3, 4]),
            printed: BigRat::from_integer(pow2(14) * 9 * 7 * 25),
        },
        Identity {
            label: "(4,4,1,1) n=9".into(),
            lhs: xh(&b, 9),
            rhs: det(vec![hat(2, 3), hat(3, 3), hat(7, 3)]),
            printed: &c11 * rat(45),
        },
        Identity {
            label: "(4,4,1,1) n=10".into(),
            lhs: xh(&b, 10),
            rhs: det(vec![hat(2, 3), hat(4, 3), hat(7, 3)]),
            printed: &c11 * rat(45),
        },
        Identity {
            label: "(4,4,1,1) n=11".into(),
            lhs: xh(&b, 11),
            rhs: det(vec![hat(3, 3), hat(4, 3), hat(7, 3)]),
            printed: &c11 * rat(-75),
        },
    ]);
    for n in 14..=max_n {
        out.push(Identity {
            label: format!("(4,4,1,1) n={n} (K_n family)"),
            lhs: xh(&b, n),
            rhs: det(vec![hat(2, 4), herm(2, 4), herm(4, 4), herm((n - 9) as usize, 4)]),
            printed: k_second(n, 45),
        });
    }
    out
}

/// A rational Painlevé IV solution as displayed.
#[derive(Debug, Clone)]
pub struct PrintedPiv {
    pub class: PivClass,
    pub branch: u8,
    pub y: RatFunc,
    pub a: BigRat,
    pub b: BigRat,
}

fn frac(num: &[i64], den: &[i64]) -> RatFunc {
    RatFunc::new(IntPoly::from_i64s(num), IntPoly::from_i64s(den)).expect("non-zero denominator")
}

fn scaled(c: i64, p: &[i64]) -> Vec<i64> {
    p.iter().map(|v| c * v).collect()
}

/// The six displayed solutions for `GH(2,4)` and `O(1,2)`.
pub fn printed_piv() -> Vec<PrintedPiv> {
    let t = RatFunc::linear(&BigRat::one());
    let d8 = [45, 0, 0, 0, 120, 0, 64, 0, 16];
    let g = frac(&scaled(32, &[0, 0, 0, 15, 0, 12, 0, 4]), &d8);
    let y1 = g.sub(&frac(
        &scaled(20, &[0, 45, 0, 120, 0, 216, 0, 96, 0, 16]),
        &[-225, 0, 450, 0, 600, 0, 720, 0, 240, 0, 32],
    ));
    let y2 = g.neg().sub(&frac(&scaled(8, &[0, 3, 0, 2]), &[3, 0, 12, 0, 4]));
    let y3 = frac(&[-1], &[0, 1])
        .sub(&frac(&scaled(32, &[0, 0, 0, 9, 0, 0, 0, 4]), &[-135, 0, 0, 0, 72, 0, 0, 0, 16]))
        .add(&g)
        .sub(&t.scale(&rat(2)));
    let base = t
        .scale(&BigRat::new(int(-2), int(3)))
        .add(&frac(&[0, 0, 0, 16], &[-45, 0, 0, 0, 4]))
        .add(&frac(&[1], &[0, 1]));
    let u1 = base.sub(&frac(&[0, 4], &[-3, 0, 2]));
    let u2 = base.sub(&frac(&scaled(12, &[0, 15, 0, 20, 0, 4]), &[135, 0, 90, 0, 60, 0, 8]));
    let u3 = base.sub(&frac(
        &scaled(20, &[0, -1215, 0, 1080, 0, -216, 0, -96, 0, 16]),
        &[-6075, 0, -12150, 0, 5400, 0, -720, 0, -240, 0, 32],
    ));
    let gh = PivClass::Gh { m: 2, ell: 4 };
    let o = PivClass::O { l1: 1, l2: 2 };
    let ninths = |n: i64| BigRat::new(int(n), int(9));
    vec![
        PrintedPiv { class: gh, branch: 1, y: y1, a: rat(-11), b: rat(-8) },
        PrintedPiv { class: gh, branch: 2, y: y2, a: rat(7), b: rat(-32) },
        PrintedPiv { class: gh, branch: 3, y: y3, a: rat(1), b: rat(-72) },
        PrintedPiv { class: o, branch: 1, y: u1, a: rat(3), b: ninths(-32) },
        PrintedPiv { class: o, branch: 2, y: u2, a: rat(-1), b: ninths(-128) },
        PrintedPiv { class: o, branch: 3, y: u3, a: rat(-5), b: ninths(-32) },
    ]
}

/// A displayed minimal-order determinant: the shifted diagram, the matrix
/// as displayed, and the displayed expanded polynomial.
#[derive(Debug, Clone)]
pub struct MinimalDisplay {
    pub label: String,
    pub diagram: MayaDiagram,
    pub matrix_det: IntPoly,
    pub printed: IntPoly,
}

fn poly(c: i64, p: &[i64]) -> IntPoly {
    IntPoly::from_i64s(p).scale(&int(c))
}

/// The minimal-order determinants of the two Painlevé examples. The
/// `GH(1,4)` entry uses `ĥ_4` and the `O(1,2)` entry uses `(ĥ_2, ĥ_3)`, the
/// entries that match the displayed polynomials.
pub fn minimal_displays() -> Vec<MinimalDisplay> {
    let x = IntPoly::x();
    vec![
        MinimalDisplay {
            label: "GH(2,4) at origin 6".into(),
            diagram: gh_maya(2, 4).shift(-6),
            matrix_det: det(vec![hat(5, 2), hat(4, 2)]),
            printed: poly(-32, &[45, 0, 0, 0, 120, 0, 64, 0, 16]),
        },
        MinimalDisplay {
            label: "GH(2,5) at origin 7".into(),
            diagram: gh_maya(2, 5).shift(-7),
            matrix_det: det(vec![hat(6, 2), hat(5, 2)]),
            printed: poly(-64, &[-225, 0, 450, 0, 600, 0, 720, 0, 240, 0, 32]),
        },
        MinimalDisplay {
            label: "GH(1,4) at origin 5".into(),
            diagram: gh_maya(1, 4).shift(-5),
            matrix_det: conj_hermite_poly(4),
            printed: poly(4, &[3, 0, 12, 0, 4]),
        },
        MinimalDisplay {
            label: "GH(3,3) at origin 6".into(),
            diagram: gh_maya(3, 3).shift(-6),
            matrix_det: det(vec![hat(5, 3), hat(4, 3), hat(3, 3)]),
            printed: &x * &poly(-512, &[-135, 0, 0, 0, 72, 0, 0, 0, 16]),
        },
        MinimalDisplay {
            label: "O(1,2) at origin 3".into(),
            diagram: o_maya(1, 2).shift(-3),
            matrix_det: det(vec![hat(2, 2), herm(2, 2)]),
            printed: &x * &poly(-8, &[-5, 0, 0, 0, 4]),
        },
        MinimalDisplay {
            label: "O(0,1)".into(),
            diagram: o_maya(0, 1),
            matrix_det: hermite_poly(2),
            printed: poly(2, &[-1, 0, 2]),
        },
        MinimalDisplay {
            label: "O(2,2) at origin 6".into(),
            diagram: o_maya(2, 2).shift(-6),
            matrix_det: det(vec![hat(5, 2), hat(2, 2)]),
            printed: poly(-48, &[5, 0, 10, 0, 20, 0, 8]),
        },
        MinimalDisplay {
            label: "O(1,3) at origin 3".into(),
            diagram: o_maya(1, 3).shift(-3),
            matrix_det: det(vec![hat(2, 3), herm(2, 3), herm(5, 3)]),
            printed: poly(192, &[-25, 0, -150, 0, 200, 0, -80, 0, -80, 0, 32]),
        },
    ]
}

/// Outcome of one reference check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl GoldenCheck {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        GoldenCheck {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "name": self.name, "passed": self.passed, "detail": self.detail })
    }
}

fn constant_check(name: &str, lhs: &IntPoly, expected: &BigRat, rhs: &IntPoly) -> GoldenCheck {
    let found = proportionality(lhs, rhs);
    let passed = !rhs.is_zero() && is_scalar_multiple(lhs, expected, rhs);
    let shown = found.map_or_else(|| "not proportional".to_string(), |c| rat_to_string(&c));
    GoldenCheck::new(name, passed, format!("expected {}, found {shown}", rat_to_string(expected)))
}

/// The reference values, each recomputed from scratch. Where a displayed
/// constant or matrix is in error, the value pinned here is the one that
/// holds; the check name says so.
pub fn golden_suite() -> Vec<GoldenCheck> {
    let mut out = Vec::new();

    let [d1, d2, d3] = intro_determinants();
    out.push(constant_check("opening identity, 4x4 Wronskian = 48 * 3x3", &d1, &rat(48), &d2));
    out.push(constant_check("opening identity, 4x4 Wronskian = 7680 * 2x2", &d1, &rat(7680), &d3));

    let (m, [h, h1, h2]) = equivalence_example();
    out.push(constant_check("(4,4,3,1,1): H_(M+6) = -483840 H_M", &h2, &rat(-483840), &h));
    out.push(constant_check("(4,4,3,1,1): H_(M+6) = -1935360 H_(M+3)", &h2, &rat(-1935360), &h1));
    let c = equivalence_constant(&m.shift(6), 6);
    out.push(GoldenCheck::new(
        "(4,4,3,1,1): shift constant for k = 6",
        c == rat(-483840),
        format!("found {}", rat_to_string(&c)),
    ));

    for id in minimal_wronskian_identities() {
        out.push(constant_check(&id.label, &id.lhs, &id.printed, &id.rhs));
    }

    // exceptional Hermite displays; three of them carry corrections
    for id in xhermite_displays(20) {
        let (name, expected, rhs) = match id.label.as_str() {
            "(2,2,1,1) n=2" => ("(2,2,1,1) n=2, constant 2^12*720 (corrected)".to_string(), BigRat::from_integer(pow2(12) * 720), id.rhs),
            "(4,4,1,1) n=11" => ("(4,4,1,1) n=11, constant +2^11*75 (corrected)".to_string(), &BigRat::from_integer(pow2(11)) * rat(75), id.rhs),
            label if label.starts_with("(4,4,1,1)") && label.contains("K_n") => {
                let n: i64 = label["(4,4,1,1) n=".len()..].split(' ').next().and_then(|s| s.parse().ok()).expect("label");
                let rhs = det(vec![hat(2, 4), herm(3, 4), herm(4, 4), herm((n - 9) as usize, 4)]);
                (format!("(4,4,1,1) n={n}, H3 row, K_n = -2^10*75(n-7)(n-8) (corrected)"), k_second(n, 75), rhs)
            }
            _ => (id.label.clone(), id.printed.clone(), id.rhs),
        };
        out.push(constant_check(&name, &id.lhs, &expected, &rhs));
    }

    for (lambda, r, k) in [([2usize, 2, 1, 1], 2usize, 6i64), ([4, 4, 1, 1], 3, 3)] {
        let rep = corner_report(&MayaDiagram::from_partition(&part(&lambda)));
        let passed = rep.minimal_girth == r && rep.origins == vec![k];
        out.push(GoldenCheck::new(
            format!("{} minimal girth {r} at origin {k}", part(&lambda)),
            passed,
            format!("found r = {}, origins {:?}", rep.minimal_girth, rep.origins),
        ));
    }
    let gh = min_order_gh(3, 5).expect("valid parameters");
    out.push(GoldenCheck::new("GH(3,5) minimal order 3", gh.order == 3, format!("found {}", gh.order)));
    let conj = wronskian(&[conj_hermite_poly(5), conj_hermite_poly(6), conj_hermite_poly(7)]);
    out.push(constant_check(
        "GH(3,5) = 18432 Wr[h5,h6,h7] (corrected from 1/18432)",
        &hermite_wronskian(&[3, 4, 5, 6, 7]),
        &rat(18432),
        &conj,
    ));
    let o = min_order_o(3, 5).expect("valid parameters");
    let durfee = durfee_symbol(&o.diagram).map(|d| d.to_string()).unwrap_or_default();
    out.push(GoldenCheck::new(
        "O(3,5) minimal order 5 with Durfee symbol [6,4,2|4,2]_3x2",
        o.order == 5 && durfee == "[6,4,2|4,2]_3x2",
        format!("found order {}, {durfee}", o.order),
    ));

    for printed in printed_piv() {
        let name = format!("{} branch {}", printed.class, printed.branch);
        let Ok(sol) = piv_solution(printed.class, printed.branch) else {
            out.push(GoldenCheck::new(name, false, "not generated"));
            continue;
        };
        let verified = verify_piv(&sol).is_ok_and(|c| c.verified);
        let params = sol.a == printed.a && sol.b == printed.b;
        // the second GH branch is displayed with the sign of its first term flipped
        let corrected = matches!(printed.class, PivClass::Gh { .. }) && printed.branch == 2;
        let expected = if corrected {
            let g = frac(&scaled(32, &[0, 0, 0, 15, 0, 12, 0, 4]), &[45, 0, 0, 0, 120, 0, 64, 0, 16]);
            printed.y.add(&g.scale(&rat(2)))
        } else {
            printed.y.clone()
        };
        let same = sol.y == expected;
        let label = if corrected { format!("{name} (first term sign corrected)") } else { name };
        out.push(GoldenCheck::new(
            label,
            verified && params && same,
            format!(
                "residual zero: {verified}, (a,b) = ({}, {}), y matches: {same}",
                rat_to_string(&sol.a),
                rat_to_string(&sol.b)
            ),
        ));
    }

    for d in minimal_displays() {
        let pw = pseudo_wronskian(&d.diagram);
        let passed = d.matrix_det == d.printed && pw == d.printed;
        out.push(GoldenCheck::new(
            format!("{} = {}", d.label, d.printed.pretty("x")),
            passed,
            format!("matrix {}, pseudo-Wronskian {}", d.matrix_det == d.printed, pw == d.printed),
        ));
    }

    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_is_green() {
        let failed: Vec<_> = golden_suite().into_iter().filter(|c| !c.passed).collect();
        assert!(failed.is_empty(), "{failed:#?}");
    }

    #[test]
    fn displayed_errata_are_detected() {
        let bad: Vec<String> = xhermite_displays(16)
            .into_iter()
            .filter(|id| !id.holds_as_printed())
            .map(|id| id.label)
            .collect();
        assert_eq!(bad, ["(2,2,1,1) n=2", "(4,4,1,1) n=11", "(4,4,1,1) n=14 (K_n family)", "(4,4,1,1) n=15 (K_n family)", "(4,4,1,1) n=16 (K_n family)"]);
        let wrong = printed_piv().into_iter().filter(|p| piv_solution(p.class, p.branch).unwrap().y != p.y).count();
        assert_eq!(wrong, 1);
    }

    #[test]
    fn intro_ratios() {
        let [d1, d2, d3] = intro_determinants();
        assert_eq!(proportionality(&d2, &d1), Some(BigRat::new(int(1), int(48))));
        assert_eq!(proportionality(&d3, &d1), Some(BigRat::new(int(1), int(7680))));
    }
}
