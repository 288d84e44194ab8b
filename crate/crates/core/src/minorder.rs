//! Minimal-order representatives of an equivalence class of diagrams.
//!
//! Every shift `M - k` has girth `i_k + j_k`, read off the bent diagram.
//! The minimum is attained only at corners, positions `k` with `k - 1 ∈ M`
//! and `k ∉ M`, and these correspond to the inside corners of the Ferrers
//! diagram together with the two degenerate corners `(λ_1, 0)` and `(0, ℓ)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{MayaDiagram, Partition};
use crate::error::{Error, Result};

/// Girth `p + q` of a labelled diagram.
pub fn girth(m: &MayaDiagram) -> usize {
    m.girth()
}

/// A corner position `k` of a diagram and the girth of `M - k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CornerGirth {
    pub origin: i64,
    pub girth: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CornerReport {
    pub minimal_girth: usize,
    /// Minimal girth origins, ascending.
    pub origins: Vec<i64>,
    /// Every corner, ascending by origin.
    pub corners: Vec<CornerGirth>,
}

impl CornerReport {
    /// Corners whose girth equals `r`, ascending.
    pub fn origins_with_girth(&self, r: usize) -> Vec<i64> {
        self.corners
            .iter()
            .filter(|c| c.girth == r)
            .map(|c| c.origin)
            .collect()
    }

    /// Largest corner with girth `r`; `None` when there is none.
    pub fn largest_origin_with_girth(&self, r: usize) -> Option<i64> {
        self.origins_with_girth(r).into_iter().max()
    }

    /// The largest minimal girth origin.
    pub fn largest_origin(&self) -> i64 {
        *self.origins.last().expect("a minimal girth origin exists")
    }
}

/// All corners of `M` with their girths.
pub fn corner_report(m: &MayaDiagram) -> CornerReport {
    let (lo, hi) = m.window();
    let corners: Vec<CornerGirth> = (lo..=hi + 1)
        .filter(|&k| m.contains(k - 1) && !m.contains(k))
        .map(|k| CornerGirth {
            origin: k,
            girth: m.girth_at(k),
        })
        .collect();
    let minimal_girth = corners.iter().map(|c| c.girth).min().expect("at least one corner");
    let origins = corners
        .iter()
        .filter(|c| c.girth == minimal_girth)
        .map(|c| c.origin)
        .collect();
    CornerReport {
        minimal_girth,
        origins,
        corners,
    }
}

/// Minimal girth data for the standard diagram of `λ`.
pub fn minimal_girth(lambda: &Partition) -> CornerReport {
    corner_report(&MayaDiagram::from_partition(lambda))
}

/// `min { λ_{j+1} + j : 0 ≤ j ≤ ℓ }`.
pub fn minimal_girth_from_parts(lambda: &Partition) -> usize {
    (0..=lambda.len())
        .map(|j| lambda.part(j + 1) + j)
        .min()
        .expect("range is non-empty")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CornerKind {
    Inside,
    /// `(λ_1, 0)`
    Width,
    /// `(0, ℓ)`
    Height,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Corner {
    pub i: usize,
    pub j: usize,
    pub kind: CornerKind,
}

impl Corner {
    pub fn taxicab(&self) -> usize {
        self.i + self.j
    }
}

/// Inside corners `(λ_{j+1}, j)` with `λ_j > λ_{j+1} > 0`, followed by the
/// two degenerate corners. For the empty partition both degenerate corners
/// sit at the origin and only one is reported.
pub fn inside_corners(lambda: &Partition) -> Vec<Corner> {
    let l = lambda.len();
    let mut out: Vec<Corner> = (1..l)
        .filter(|&j| lambda.part(j) > lambda.part(j + 1))
        .map(|j| Corner {
            i: lambda.part(j + 1),
            j,
            kind: CornerKind::Inside,
        })
        .collect();
    out.push(Corner {
        i: lambda.part(1),
        j: 0,
        kind: CornerKind::Width,
    });
    if l > 0 {
        out.push(Corner {
            i: 0,
            j: l,
            kind: CornerKind::Height,
        });
    }
    out
}

/// The rectangle at the origin of a diagram and the two remnant partitions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DurfeeSymbol {
    /// Rectangle height, the number of holes left of the origin.
    pub rows: usize,
    /// Rectangle width, the number of filled boxes right of the origin.
    pub cols: usize,
    pub mu: Partition,
    pub nu: Partition,
}

impl DurfeeSymbol {
    /// `rows · cols + |μ| + |ν|`.
    pub fn size(&self) -> usize {
        self.rows * self.cols + self.mu.size() + self.nu.size()
    }
}

impl fmt::Display for DurfeeSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |p: &Partition| {
            if p.is_empty() {
                "∅".to_string()
            } else {
                p.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
            }
        };
        write!(f, "[{}|{}]_{}x{}", side(&self.mu), side(&self.nu), self.rows, self.cols)
    }
}

/// Staircase subtraction `x_i - (n - i)` on a strictly decreasing list.
fn remnant(list: &[i64]) -> Partition {
    let n = list.len() as i64;
    let parts = list
        .iter()
        .enumerate()
        .map(|(i, &x)| (x - (n - 1 - i as i64)) as usize)
        .collect();
    Partition::new(parts).expect("strictly decreasing positive list")
}

/// Durfee symbol of a diagram whose origin sits at a corner.
pub fn durfee_symbol(m: &MayaDiagram) -> Result<DurfeeSymbol> {
    if !m.contains(-1) || m.contains(0) {
        return Err(Error::Precondition(format!(
            "origin of {m} is not at a corner (needs -1 in M and 0 not in M)"
        )));
    }
    Ok(DurfeeSymbol {
        rows: m.s_list().len(),
        cols: m.t_list().len(),
        mu: remnant(m.s_list()),
        nu: remnant(m.t_list()),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InsertCase {
    /// `m < k_r`
    BelowLargestOrigin,
    /// `m = k_r`
    AtLargestOrigin,
    /// `k_r < m < k_{r+1}`
    BetweenOrigins,
    /// `m > k_r` and `m ≥ k_{r+1}`
    AboveOrigins,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InsertReport {
    pub case: InsertCase,
    pub minimal_girth: usize,
    /// Minimal girth origins of `M ∪ {m}`, ascending.
    pub origins: Vec<i64>,
}

/// Minimal girth and origins of `M ∪ {m}` from the corner data of `M`.
pub fn min_order_after_insert(m: &MayaDiagram, element: i64) -> Result<InsertReport> {
    if m.contains(element) {
        return Err(Error::Precondition(format!("{element} already belongs to {m}")));
    }
    let report = corner_report(m);
    let r = report.minimal_girth;
    let k_r = report.largest_origin();
    let k_next = report.largest_origin_with_girth(r + 1);
    let above = |set: Vec<i64>| set.into_iter().filter(|&k| k > element).collect::<Vec<_>>();
    let (case, girth, mut origins) = if element < k_r {
        (InsertCase::BelowLargestOrigin, r - 1, above(report.origins_with_girth(r)))
    } else if element == k_r {
        let mut o = vec![element + 1];
        o.extend(above(report.origins_with_girth(r + 1)));
        (InsertCase::AtLargestOrigin, r, o)
    } else if k_next.is_some_and(|k| element < k) {
        (InsertCase::BetweenOrigins, r, above(report.origins_with_girth(r + 1)))
    } else {
        let mut o = report.origins_with_girth(r);
        o.extend(above(report.origins_with_girth(r + 2)));
        // the new corner right after the inserted element
        if m.girth_at(element) == r + 1 && !m.contains(element + 1) {
            o.push(element + 1);
        }
        (InsertCase::AboveOrigins, r + 1, o)
    };
    origins.sort_unstable();
    origins.dedup();
    Ok(InsertReport {
        case,
        minimal_girth: girth,
        origins,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OriginRule {
    /// `k_{r+1} > k_r`
    NextOriginAbove,
    /// `k_{r+1} < k_r`, or no corner of girth `r + 1`
    NextOriginBelow,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtendedOrigin {
    pub rule: OriginRule,
    /// The element `n + ℓ - |λ|` added to the standard diagram.
    pub inserted: i64,
    pub minimal_order: usize,
    pub origin: i64,
}

/// `n + ℓ - |λ|`, when it is a valid insertion into the standard diagram.
pub fn inserted_element(lambda: &Partition, n: i64) -> Result<i64> {
    let m = MayaDiagram::from_partition(lambda);
    let e = n + lambda.len() as i64 - lambda.size() as i64;
    if n < 0 || m.contains(e) {
        return Err(Error::Inadmissible {
            partition: lambda.to_string(),
            n,
        });
    }
    Ok(e)
}

/// Minimal order and a minimal origin for the exceptional polynomial of
/// degree `n` attached to `λ`.
pub fn xhermite_min_origin(lambda: &Partition, n: i64) -> Result<ExtendedOrigin> {
    let e = inserted_element(lambda, n)?;
    let report = minimal_girth(lambda);
    let r = report.minimal_girth;
    let k_r = report.largest_origin();
    let k_next = report.largest_origin_with_girth(r + 1);
    let (rule, minimal_order, origin) = match k_next {
        Some(k1) if k1 > k_r => {
            let (order, origin) = if e < k_r {
                (r - 1, k_r)
            } else if e < k1 {
                (r, k1)
            } else {
                // e = k_{r+1} joins the last range
                (r + 1, k_r)
            };
            (OriginRule::NextOriginAbove, order, origin)
        }
        _ => {
            let (order, origin) = if e < k_r {
                (r - 1, k_r)
            } else if e == k_r {
                (r, k_r + 1)
            } else {
                (r + 1, k_r)
            };
            (OriginRule::NextOriginBelow, order, origin)
        }
    };
    Ok(ExtendedOrigin {
        rule,
        inserted: e,
        minimal_order,
        origin,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn maya(text: &str) -> MayaDiagram {
        text.parse().unwrap()
    }

    #[test]
    fn girths() {
        assert_eq!(girth(&maya("5,2,1|2,1")), 5);
        assert_eq!(girth(&MayaDiagram::vacuum()), 0);
        assert_eq!(girth(&maya("5,2|")), 2);
    }

    #[test]
    fn worked_minimal_girths() {
        let r = minimal_girth(&part(&[2, 2, 1, 1]));
        assert_eq!((r.minimal_girth, r.origins.clone()), (2, vec![6]));
        assert_eq!(r.largest_origin_with_girth(3), Some(3));
        let r = minimal_girth(&part(&[4, 4, 1, 1]));
        assert_eq!((r.minimal_girth, r.origins.clone()), (3, vec![3]));
        assert_eq!(r.largest_origin_with_girth(4), Some(8));
        let r = minimal_girth(&Partition::empty());
        assert_eq!((r.minimal_girth, r.origins), (0, vec![0]));
        let r = minimal_girth(&part(&[4, 4, 3, 1, 1]));
        assert_eq!((r.minimal_girth, r.origins), (4, vec![3, 9]));
    }

    #[test]
    fn corners_of_figure_partition() {
        let c = inside_corners(&part(&[4, 4, 3, 1, 1]));
        let pts: Vec<(usize, usize)> = c.iter().map(|c| (c.i, c.j)).collect();
        assert_eq!(pts, vec![(3, 2), (1, 3), (4, 0), (0, 5)]);
        let d: Vec<usize> = c.iter().map(Corner::taxicab).collect();
        assert_eq!(d, vec![5, 4, 4, 5]);
        let c = inside_corners(&part(&[3]));
        let pts: Vec<(usize, usize)> = c.iter().map(|c| (c.i, c.j)).collect();
        assert_eq!(pts, vec![(3, 0), (0, 1)]);
        assert_eq!(inside_corners(&Partition::empty()).len(), 1);
    }

    #[test]
    fn durfee_symbols() {
        let d = durfee_symbol(&maya("8,5,2|5,2")).unwrap();
        assert_eq!(d.to_string(), "[6,4,2|4,2]_3x2");
        let d = durfee_symbol(&maya("7,6,5|")).unwrap();
        assert_eq!(d.to_string(), "[5,5,5|∅]_3x0");
        let lambda = part(&[4, 4, 3, 1, 1]);
        let std = MayaDiagram::from_partition(&lambda);
        let d = durfee_symbol(&std).unwrap();
        assert_eq!((d.rows, d.mu.clone(), d.nu.clone()), (0, Partition::empty(), lambda.clone()));
        let fig = maya("5,2,1|2,1");
        let d = durfee_symbol(&fig).unwrap();
        assert_eq!(d.to_string(), "[3,1,1|1,1]_3x2");
        assert_eq!(d.size(), 13);
        assert!(durfee_symbol(&maya("|0")).is_err());
        assert!(durfee_symbol(&maya("0|")).is_err());
    }

    #[test]
    fn insertion_examples() {
        let m = MayaDiagram::from_partition(&part(&[2, 2, 1, 1]));
        let r = min_order_after_insert(&m, 6).unwrap();
        assert_eq!(r.case, InsertCase::AtLargestOrigin);
        assert_eq!((r.minimal_girth, r.origins), (2, vec![7]));
        let m = MayaDiagram::from_partition(&part(&[4, 4, 1, 1]));
        for e in 3..=5 {
            assert!(min_order_after_insert(&m, e).unwrap().origins.contains(&8));
        }
        let r = min_order_after_insert(&m, 8).unwrap();
        assert_eq!(r.case, InsertCase::AboveOrigins);
        assert_eq!((r.minimal_girth, r.origins), (4, vec![3, 9]));
        assert!(min_order_after_insert(&m, 6).is_err());
    }

    #[test]
    fn extended_origins() {
        let lambda = part(&[2, 2, 1, 1]);
        let o = xhermite_min_origin(&lambda, 8).unwrap();
        assert_eq!(o.rule, OriginRule::NextOriginBelow);
        assert_eq!((o.minimal_order, o.origin), (2, 7));
        assert_eq!(xhermite_min_origin(&lambda, 2).unwrap().minimal_order, 1);
        assert_eq!(xhermite_min_origin(&lambda, 20).unwrap().origin, 6);
        assert!(xhermite_min_origin(&lambda, 7).is_err());
        assert!(xhermite_min_origin(&lambda, 0).is_err());
        let lambda = part(&[4, 4, 1, 1]);
        let o = xhermite_min_origin(&lambda, 10).unwrap();
        assert_eq!(o.rule, OriginRule::NextOriginAbove);
        assert_eq!((o.minimal_order, o.origin), (3, 8));
        let o = xhermite_min_origin(&lambda, 14).unwrap();
        assert_eq!((o.minimal_order, o.origin), (4, 3));
        assert_eq!(xhermite_min_origin(&lambda, 6).unwrap().origin, 3);
    }
}
