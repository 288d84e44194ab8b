use proptest::prelude::*;

use hermite_pw::exactpoly::{BigRat, IntPoly, RatFunc};
use hermite_pw::hermite::{hermite_wronskian, pseudo_wronskian};
use hermite_pw::xhermite::{exceptional_hermite, min_order_form, XHermiteFamily};
use hermite_pw::Partition;

fn partition() -> impl Strategy<Value = Partition> {
    (0usize..=6).prop_flat_map(|n| {
        let all = Partition::all_of_size(n);
        let len = all.len();
        (0..len).prop_map(move |i| all[i].clone())
    })
}

/// `y'' - 2(x + H'/H) y' + (H''/H + 2x H'/H) y` with plain rational arithmetic.
fn operator(base: &IntPoly, y: &IntPoly) -> RatFunc {
    let h = RatFunc::from_poly(base.clone());
    let q = |p: IntPoly| RatFunc::from_poly(p).div(&h).unwrap();
    let x = RatFunc::linear(&BigRat::from_integer(1.into()));
    let yr = RatFunc::from_poly(y.clone());
    let d1 = RatFunc::from_poly(y.derivative(1));
    let d2 = RatFunc::from_poly(y.derivative(2));
    let log = q(base.derivative(1));
    let two = BigRat::from_integer(2.into());
    let first = x.add(&log).mul(&d1).scale(&two);
    let zeroth = q(base.derivative(2)).add(&x.mul(&log).scale(&two)).mul(&yr);
    d2.sub(&first).add(&zeroth)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn wronskian_with_appended_index(lambda in partition(), pick in 0usize..8) {
        let family = XHermiteFamily::new(&lambda);
        let n = family.admissible_degrees(8)[pick];
        let e = family.inserted(n).unwrap();
        let mut indices: Vec<usize> = family.elements().iter().map(|&m| m as usize).collect();
        indices.sort_unstable();
        indices.push(e as usize);
        prop_assert_eq!(exceptional_hermite(&lambda, n).unwrap(), hermite_wronskian(&indices));
    }

    #[test]
    fn eigenvalue_is_linear_in_degree(lambda in partition(), pick in 0usize..8) {
        let family = XHermiteFamily::new(&lambda);
        let n = family.admissible_degrees(8)[pick];
        let y = exceptional_hermite(&lambda, n).unwrap();
        let t = operator(&family.base(), &y);
        let expected = BigRat::from_integer((2 * (lambda.size() as i64 - n)).into());
        prop_assert_eq!(t.div(&RatFunc::from_poly(y)).unwrap().as_constant(), Some(expected));
    }

    #[test]
    fn minimal_form_reconstructs(lambda in partition(), pick in 0usize..8) {
        let family = XHermiteFamily::new(&lambda);
        let n = family.admissible_degrees(8)[pick];
        let form = min_order_form(&lambda, n).unwrap();
        let full = exceptional_hermite(&lambda, n).unwrap();
        prop_assert_eq!(form.polynomial.clone(), pseudo_wronskian(&form.diagram));
        prop_assert!(form.order <= family.extended_diagram(n).unwrap().girth());
        prop_assert_eq!(full.scale(form.constant.denom()), form.polynomial.scale(form.constant.numer()));
    }
}

#[test]
fn excluded_degrees_are_exactly_the_gaps() {
    for n in 0..=7 {
        for lambda in Partition::all_of_size(n) {
            let f = XHermiteFamily::new(&lambda);
            let excluded = f.excluded_degrees();
            assert_eq!(excluded.len(), lambda.size(), "{lambda}");
            for d in 0..30 {
                assert_eq!(f.is_admissible(d), !excluded.contains(&d), "{lambda} {d}");
            }
        }
    }
}
