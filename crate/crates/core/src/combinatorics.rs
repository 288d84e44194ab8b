//! Maya diagrams, partitions, and the correspondences between them.
//!
//! A Maya diagram `M ⊂ Z` contains every sufficiently negative integer and
//! finitely many non-negative ones. It is stored through its Frobenius
//! symbol `(s_1,...,s_p | t_1,...,t_q)`: `s` lists the holes left of the
//! origin (a hole at `m < 0` is recorded as `-m-1`) and `t` the filled boxes
//! right of it, both strictly decreasing. The infinite set is never
//! materialised.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "MayaJson", into = "MayaJson")]
pub struct MayaDiagram {
    s: Vec<i64>,
    t: Vec<i64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct MayaJson {
    s: Vec<i64>,
    t: Vec<i64>,
}

impl TryFrom<MayaJson> for MayaDiagram {
    type Error = Error;
    fn try_from(j: MayaJson) -> Result<Self> {
        MayaDiagram::from_frobenius(j.s, j.t)
    }
}

impl From<MayaDiagram> for MayaJson {
    fn from(m: MayaDiagram) -> Self {
        MayaJson { s: m.s, t: m.t }
    }
}

/// The double list `(s | t)` of a labelled diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusSymbol {
    pub s: Vec<i64>,
    pub t: Vec<i64>,
}

impl FrobeniusSymbol {
    pub fn p(&self) -> usize {
        self.s.len()
    }

    pub fn q(&self) -> usize {
        self.t.len()
    }

    pub fn girth(&self) -> usize {
        self.p() + self.q()
    }
}

/// One point `(i_n, j_n)` of the bent diagram: `i_n` holes below `n`,
/// `j_n` filled boxes at or above `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BentPoint {
    pub n: i64,
    pub i: usize,
    pub j: usize,
}

fn check_list(name: &str, v: &[i64]) -> Result<()> {
    if v.iter().any(|&x| x < 0) {
        return Err(Error::Parse(format!("{name}-list entries must be non-negative: {v:?}")));
    }
    Ok(())
}

impl MayaDiagram {
    /// Builds a diagram from its Frobenius lists, given in any order.
    pub fn from_frobenius(mut s: Vec<i64>, mut t: Vec<i64>) -> Result<Self> {
        check_list("s", &s)?;
        check_list("t", &t)?;
        s.sort_unstable_by(|a, b| b.cmp(a));
        t.sort_unstable_by(|a, b| b.cmp(a));
        if s.windows(2).any(|w| w[0] == w[1]) || t.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Parse("Frobenius lists must have distinct entries".into()));
        }
        Ok(MayaDiagram { s, t })
    }

    /// The diagram of all negative integers.
    pub fn vacuum() -> Self {
        MayaDiagram {
            s: Vec::new(),
            t: Vec::new(),
        }
    }

    /// `Z_- ∪ elements`, for non-negative `elements`.
    pub fn from_positive_elements<I: IntoIterator<Item = i64>>(elements: I) -> Result<Self> {
        Self::from_frobenius(Vec::new(), elements.into_iter().collect())
    }

    /// Holes left of the origin, descending.
    pub fn s_list(&self) -> &[i64] {
        &self.s
    }

    /// Filled boxes right of the origin, descending.
    pub fn t_list(&self) -> &[i64] {
        &self.t
    }

    pub fn frobenius_symbol(&self) -> FrobeniusSymbol {
        FrobeniusSymbol {
            s: self.s.clone(),
            t: self.t.clone(),
        }
    }

    /// `p + q`, the order of the attached pseudo-Wronskian.
    pub fn girth(&self) -> usize {
        self.s.len() + self.t.len()
    }

    pub fn contains(&self, m: i64) -> bool {
        if m >= 0 {
            self.t.contains(&m)
        } else {
            !self.s.contains(&(-m - 1))
        }
    }

    /// `(lo, hi)` with every `n < lo` in the diagram and every `n > hi` out.
    pub fn window(&self) -> (i64, i64) {
        let lo = self.s.first().map_or(0, |&s| -s - 1);
        let hi = self.t.first().copied().unwrap_or(-1);
        (lo.min(0), hi.max(-1))
    }

    /// Largest element.
    pub fn max_element(&self) -> i64 {
        let (lo, hi) = self.window();
        (lo - 1..=hi).rev().find(|&m| self.contains(m)).expect("diagram has elements")
    }

    /// Smallest integer not in the diagram.
    pub fn min_hole(&self) -> i64 {
        let (lo, hi) = self.window();
        (lo..=hi + 1).find(|&m| !self.contains(m)).expect("diagram has holes")
    }

    /// `M + k`.
    pub fn shift(&self, k: i64) -> MayaDiagram {
        let (lo, hi) = self.window();
        let mut s = Vec::new();
        let mut t = Vec::new();
        for n in (lo + k).min(0)..=(hi + k).max(-1) {
            let inside = self.contains(n - k);
            if n < 0 && !inside {
                s.push(-n - 1);
            } else if n >= 0 && inside {
                t.push(n);
            }
        }
        s.sort_unstable_by(|a, b| b.cmp(a));
        t.sort_unstable_by(|a, b| b.cmp(a));
        MayaDiagram { s, t }
    }

    pub fn is_standard(&self) -> bool {
        self.s.is_empty() && !self.t.contains(&0)
    }

    /// The standard-form representative `M - k` together with the shift
    /// `k = min(Z \ M)`.
    pub fn standardize(&self) -> (MayaDiagram, i64) {
        let k = self.min_hole();
        (self.shift(-k), k)
    }

    /// Adds `m` when absent, removes it when present.
    pub fn flip(&self, m: i64) -> MayaDiagram {
        let mut s = self.s.clone();
        let mut t = self.t.clone();
        let toggle = |v: &mut Vec<i64>, x: i64| {
            if let Some(pos) = v.iter().position(|&y| y == x) {
                v.remove(pos);
            } else {
                v.push(x);
                v.sort_unstable_by(|a, b| b.cmp(a));
            }
        };
        if m >= 0 {
            toggle(&mut t, m);
        } else {
            toggle(&mut s, -m - 1);
        }
        MayaDiagram { s, t }
    }

    /// Elements of the diagram not below `lo`, descending.
    fn elements_from(&self, lo: i64) -> Vec<i64> {
        let (_, hi) = self.window();
        (lo..=hi).rev().filter(|&m| self.contains(m)).collect()
    }

    /// The partition `λ_i = #{m ∉ M : m < m_i}`; invariant under shifts.
    pub fn partition(&self) -> Partition {
        let (lo, _) = self.window();
        let holes_below = |x: i64| (lo..x).filter(|&m| !self.contains(m)).count();
        let parts = self
            .elements_from(lo)
            .into_iter()
            .map(holes_below)
            .take_while(|&c| c > 0)
            .collect();
        Partition { parts }
    }

    /// The standard-form diagram of a partition: `m_i = λ_i + ℓ - i`.
    pub fn from_partition(lambda: &Partition) -> MayaDiagram {
        let l = lambda.len() as i64;
        let t = lambda
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &p)| p as i64 + l - (i as i64 + 1))
            .collect();
        MayaDiagram { s: Vec::new(), t }
    }

    pub fn bent_point(&self, n: i64) -> BentPoint {
        let (lo, hi) = self.window();
        let i = (lo.min(n)..n).filter(|&m| !self.contains(m)).count();
        let j = if n > hi {
            0
        } else {
            // elements in [n, hi] plus everything below lo that is >= n
            let top = (n.max(lo)..=hi).filter(|&m| self.contains(m)).count();
            top + (n..lo).count()
        };
        BentPoint { n, i, j }
    }

    /// `(i_n, j_n)` for `n_lo <= n <= n_hi`.
    pub fn bent_diagram(&self, n_lo: i64, n_hi: i64) -> Result<Vec<BentPoint>> {
        if n_lo > n_hi {
            return Err(Error::Precondition(format!(
                "empty bent-diagram window [{n_lo}, {n_hi}]"
            )));
        }
        Ok((n_lo..=n_hi).map(|n| self.bent_point(n)).collect())
    }

    /// `|M - n| = i_n + j_n`.
    pub fn girth_at(&self, n: i64) -> usize {
        let b = self.bent_point(n);
        b.i + b.j
    }
}

impl fmt::Display for MayaDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} | {})", join_or_empty(&self.s), join_or_empty(&self.t))
    }
}

fn join_or_empty(v: &[i64]) -> String {
    if v.is_empty() {
        "∅".to_string()
    } else {
        v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    }
}

fn parse_int_list(text: &str) -> Result<Vec<i64>> {
    let text = text.trim();
    if text.is_empty() || text == "∅" {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|x| {
            x.trim()
                .parse::<i64>()
                .map_err(|e| Error::Parse(format!("{x:?}: {e}")))
        })
        .collect()
}

fn strip_parens(text: &str) -> &str {
    let t = text.trim();
    t.strip_prefix('(')
        .and_then(|u| u.strip_suffix(')'))
        .unwrap_or(t)
}

impl FromStr for MayaDiagram {
    type Err = Error;

    /// Accepts `s1,s2,...|t1,t2,...`, optionally parenthesised, with either
    /// side empty or written as `∅`.
    fn from_str(text: &str) -> Result<Self> {
        let inner = strip_parens(text);
        let (s, t) = inner
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("missing '|' in Frobenius symbol {text:?}")))?;
        MayaDiagram::from_frobenius(parse_int_list(s)?, parse_int_list(t)?)
    }
}

/// Non-increasing list of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse(format!("partition parts must be positive: {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("partition must be non-increasing: {parts:?}")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_i` with one-based `i`; zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// The length `ℓ`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `λ'_j = #{i : λ_i ≥ j}`.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let parts = (1..=width)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// `ℓ` even and `λ_{2i-1} = λ_{2i}`.
    pub fn is_even(&self) -> bool {
        self.parts.len() % 2 == 0 && self.parts.chunks(2).all(|c| c[0] == c[1])
    }

    /// Ferrers diagram `{(i, j) : 1 ≤ i ≤ λ_j}`.
    pub fn ferrers(&self) -> BTreeSet<(usize, usize)> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |i| (i, r + 1)))
            .collect()
    }

    /// Cells `(i, j)` of the Ferrers diagram with `(i+1, j+1)` outside it.
    pub fn rim(&self) -> BTreeSet<(usize, usize)> {
        let f = self.ferrers();
        f.iter()
            .copied()
            .filter(|&(i, j)| !f.contains(&(i + 1, j + 1)))
            .collect()
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = self
            .parts
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "({body})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `p1,p2,...`, optionally parenthesised.
    fn from_str(text: &str) -> Result<Self> {
        let parts = parse_int_list(strip_parens(text))?;
        if parts.iter().any(|&p| p < 0) {
            return Err(Error::Parse(format!("negative part in {text:?}")));
        }
        Partition::new(parts.into_iter().map(|p| p as usize).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig1() -> MayaDiagram {
        "5,2,1|2,1".parse().unwrap()
    }

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn partition_of_the_figure_diagram() {
        assert_eq!(fig1().partition(), part(&[4, 4, 3, 1, 1]));
        assert_eq!(MayaDiagram::vacuum().partition(), Partition::empty());
        let m = MayaDiagram::from_positive_elements([1, 2, 4, 5]).unwrap();
        assert_eq!(m.partition(), part(&[2, 2, 1, 1]));
    }

    #[test]
    fn standard_diagram_of_partition() {
        let m = MayaDiagram::from_partition(&part(&[4, 4, 3, 1, 1]));
        assert_eq!(m.t_list(), &[8, 7, 5, 2, 1]);
        assert!(m.s_list().is_empty());
        assert_eq!(MayaDiagram::from_partition(&Partition::empty()), MayaDiagram::vacuum());
        let m = MayaDiagram::from_partition(&part(&[2, 2, 1, 1]));
        assert_eq!(m.to_string(), "(∅ | 5,4,2,1)");
        let m = MayaDiagram::from_partition(&part(&[4, 4, 1, 1]));
        assert_eq!(m.t_list(), &[7, 6, 2, 1]);
    }

    #[test]
    fn standardize_and_shift() {
        let (std, k) = fig1().standardize();
        assert_eq!(k, -6);
        assert_eq!(std, fig1().shift(6));
        assert_eq!(std.t_list(), &[8, 7, 5, 2, 1]);
        let shifted = fig1().shift(3);
        assert_eq!(shifted.s_list(), &[2]);
        assert_eq!(shifted.t_list(), &[5, 4, 2]);
        let already = MayaDiagram::from_positive_elements([1, 3]).unwrap();
        assert_eq!(already.standardize(), (already.clone(), 0));
    }

    #[test]
    fn shift_examples() {
        // Z_- ∪ {0} shifted by -1 is Z_-
        let m = MayaDiagram::from_positive_elements([0]).unwrap();
        assert_eq!(m.shift(-1), MayaDiagram::vacuum());
        // GH(2,5) = Z_- ∪ {2..6}, shifted by -7: holes at -7,-6 and -5..-1 filled
        let gh = MayaDiagram::from_positive_elements(2..=6).unwrap();
        let moved = gh.shift(-7);
        assert_eq!(moved.s_list(), &[6, 5]);
        assert!(moved.t_list().is_empty());
        assert_eq!(fig1().shift(0), fig1());
        // holes right of the old window move below the origin
        assert_eq!(fig1().shift(-4).to_string(), "(9,6,5,3,0 | ∅)");
        assert_eq!(fig1().shift(-4).shift(4), fig1());
    }

    #[test]
    fn conjugation() {
        assert_eq!(part(&[4, 4, 3, 1, 1]).conjugate(), part(&[5, 3, 3, 2]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(part(&[3, 2, 1]).conjugate(), part(&[3, 2, 1]));
    }

    #[test]
    fn bent_points() {
        let m = MayaDiagram::from_partition(&part(&[4, 4, 3, 1, 1]));
        let b0 = m.bent_point(0);
        assert_eq!((b0.i, b0.j), (0, 5));
        let b9 = m.bent_point(9);
        assert_eq!((b9.i, b9.j), (4, 0));
        assert!(m.bent_diagram(3, 2).is_err());
    }

    #[test]
    fn rims() {
        assert!(Partition::empty().rim().is_empty());
        assert_eq!(part(&[1]).rim(), BTreeSet::from([(1, 1)]));
    }

    #[test]
    fn frobenius_symbols() {
        let f = fig1().frobenius_symbol();
        assert_eq!((f.s.as_slice(), f.t.as_slice()), (&[5, 2, 1][..], &[2, 1][..]));
        assert_eq!(f.girth(), 5);
        assert_eq!(MayaDiagram::vacuum().frobenius_symbol().girth(), 0);
        let m = MayaDiagram::from_partition(&part(&[4, 4, 1, 1]));
        assert_eq!(m.to_string(), "(∅ | 7,6,2,1)");
    }

    #[test]
    fn text_forms() {
        assert_eq!(fig1().to_string(), "(5,2,1 | 2,1)");
        for text in ["(5,2,1 | 2,1)", "5,2,1|2,1", " ( 5, 2,1|2 ,1 ) "] {
            assert_eq!(text.parse::<MayaDiagram>().unwrap(), fig1());
        }
        assert_eq!("5,2|".parse::<MayaDiagram>().unwrap().to_string(), "(5,2 | ∅)");
        assert_eq!("|".parse::<MayaDiagram>().unwrap(), MayaDiagram::vacuum());
        assert!("5,5|".parse::<MayaDiagram>().is_err());
        assert!("-1|".parse::<MayaDiagram>().is_err());
        assert!("1,2".parse::<MayaDiagram>().is_err());
        assert_eq!("4,4,1,1".parse::<Partition>().unwrap().to_string(), "(4,4,1,1)");
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
    }

    #[test]
    fn json_forms() {
        let text = serde_json::to_string(&fig1()).unwrap();
        assert_eq!(text, r#"{"s":[5,2,1],"t":[2,1]}"#);
        assert_eq!(serde_json::from_str::<MayaDiagram>(&text).unwrap(), fig1());
        assert!(serde_json::from_str::<MayaDiagram>(r#"{"s":[1,1],"t":[]}"#).is_err());
        let p = part(&[4, 4, 1, 1]);
        assert_eq!(serde_json::to_string(&p).unwrap(), "[4,4,1,1]");
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }

    #[test]
    fn flips() {
        let m = MayaDiagram::from_positive_elements([1, 2]).unwrap();
        assert_eq!(m.flip(5).t_list(), &[5, 2, 1]);
        assert_eq!(m.flip(1).t_list(), &[2]);
        assert_eq!(m.flip(-3).s_list(), &[2]);
        assert_eq!(m.flip(-3).flip(-3), m);
    }

    #[test]
    fn partition_enumeration_counts() {
        let counts: Vec<usize> = (0..=12).map(|n| Partition::all_of_size(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
    }

    #[test]
    fn even_partitions() {
        assert!(part(&[2, 2]).is_even());
        assert!(part(&[1, 1]).is_even());
        assert!(Partition::empty().is_even());
        assert!(!part(&[2, 1]).is_even());
        assert!(!part(&[2, 2, 1]).is_even());
    }
}
