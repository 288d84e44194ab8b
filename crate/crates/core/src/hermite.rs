//! Hermite and conjugate Hermite polynomials, pseudo-Wronskians, and the
//! exact constants relating pseudo-Wronskians of equivalent diagrams.

use std::path::Path;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{MayaDiagram, Partition};
use crate::error::{Error, Result};
use crate::exactpoly::{rat_to_string, BigRat, IntPoly, PolyJson, PolyMatrix};

/// Append-only tables of `H_n` and `ĥ_n`, extended on demand.
#[derive(Debug)]
pub struct HermiteCache {
    plain: RwLock<Vec<IntPoly>>,
    conj: RwLock<Vec<IntPoly>>,
}

/// Serialized form of a cache: both tables in coefficient-string JSON.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HermiteTable {
    pub hermite: Vec<PolyJson>,
    pub conjugate: Vec<PolyJson>,
}

fn extend_table(table: &RwLock<Vec<IntPoly>>, n: usize, sign: i64) -> IntPoly {
    if let Some(p) = table.read().expect("hermite table lock").get(n) {
        return p.clone();
    }
    let mut t = table.write().expect("hermite table lock");
    let two_x = IntPoly::from_i64s(&[0, 2]);
    while t.len() <= n {
        let k = t.len() - 1;
        // H_{k+1} = 2x H_k ∓ 2k H_{k-1}
        let next = &(&two_x * &t[k]) + &t[k - 1].scale(&BigInt::from(sign * 2 * k as i64));
        t.push(next);
    }
    t[n].clone()
}

impl HermiteCache {
    pub fn new() -> Self {
        let seed = || vec![IntPoly::one(), IntPoly::from_i64s(&[0, 2])];
        HermiteCache {
            plain: RwLock::new(seed()),
            conj: RwLock::new(seed()),
        }
    }

    /// Process-wide shared cache.
    pub fn global() -> &'static HermiteCache {
        static GLOBAL: OnceLock<HermiteCache> = OnceLock::new();
        GLOBAL.get_or_init(HermiteCache::new)
    }

    /// `H_n`, from `H_{n+1} = 2x H_n - 2n H_{n-1}`.
    pub fn hermite(&self, n: usize) -> IntPoly {
        extend_table(&self.plain, n, -1)
    }

    /// `ĥ_n(x) = i^{-n} H_n(ix)`, from `ĥ_{n+1} = 2x ĥ_n + 2n ĥ_{n-1}`.
    pub fn conj_hermite(&self, n: usize) -> IntPoly {
        extend_table(&self.conj, n, 1)
    }

    /// Number of cached entries in each table.
    pub fn cached_len(&self) -> (usize, usize) {
        (
            self.plain.read().expect("hermite table lock").len(),
            self.conj.read().expect("hermite table lock").len(),
        )
    }

    pub fn to_table(&self) -> HermiteTable {
        let dump = |t: &RwLock<Vec<IntPoly>>| {
            t.read()
                .expect("hermite table lock")
                .iter()
                .map(|p| p.to_json("x"))
                .collect()
        };
        HermiteTable {
            hermite: dump(&self.plain),
            conjugate: dump(&self.conj),
        }
    }

    /// Merges a stored table, rejecting any entry that disagrees with the
    /// recurrence.
    pub fn absorb(&self, table: &HermiteTable) -> Result<()> {
        for (n, j) in table.hermite.iter().enumerate() {
            if IntPoly::from_json(j)? != self.hermite(n) {
                return Err(Error::Parse(format!("stored H_{n} is corrupt")));
            }
        }
        for (n, j) in table.conjugate.iter().enumerate() {
            if IntPoly::from_json(j)? != self.conj_hermite(n) {
                return Err(Error::Parse(format!("stored conjugate H_{n} is corrupt")));
            }
        }
        Ok(())
    }

    pub fn save_json(&self, path: &Path) -> Result<()> {
        let text = serde_json::to_string(&self.to_table())
            .map_err(|e| Error::Parse(e.to_string()))?;
        std::fs::write(path, text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
    }

    pub fn load_json(&self, path: &Path) -> Result<()> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        let table: HermiteTable =
            serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
        self.absorb(&table)
    }
}

impl Default for HermiteCache {
    fn default() -> Self {
        Self::new()
    }
}

pub fn hermite_poly(n: usize) -> IntPoly {
    HermiteCache::global().hermite(n)
}

pub fn conj_hermite_poly(n: usize) -> IntPoly {
    HermiteCache::global().conj_hermite(n)
}

fn index(n: i64) -> usize {
    usize::try_from(n).expect("non-negative Hermite index")
}

/// Row `(f, f', ..., f^{(size-1)})`.
pub fn derivative_row(f: &IntPoly, size: usize) -> Vec<IntPoly> {
    let mut row = Vec::with_capacity(size);
    let mut cur = f.clone();
    for _ in 0..size {
        let next = cur.derivative(1);
        row.push(cur);
        cur = next;
    }
    row
}

/// Row `(ĥ_s, ĥ_{s+1}, ..., ĥ_{s+size-1})`.
pub fn index_shift_row(s: usize, size: usize) -> Vec<IntPoly> {
    (s..s + size).map(conj_hermite_poly).collect()
}

/// Wronskian of the given functions, rows in the given order.
pub fn wronskian(fs: &[IntPoly]) -> IntPoly {
    let n = fs.len();
    let rows = fs.iter().map(|f| derivative_row(f, n)).collect();
    PolyMatrix::from_rows(rows)
        .and_then(|m| m.det_fraction_free())
        .expect("square Wronskian matrix")
}

/// `Wr[H_{n_1}, ..., H_{n_k}]` in the listed order.
pub fn hermite_wronskian(indices: &[usize]) -> IntPoly {
    let fs: Vec<IntPoly> = indices.iter().map(|&n| hermite_poly(n)).collect();
    wronskian(&fs)
}

/// The pseudo-Wronskian matrix: index-shift rows for `s_1 > ... > s_p`,
/// then derivative rows for `t_q < ... < t_1`.
pub fn pseudo_wronskian_matrix(m: &MayaDiagram) -> PolyMatrix {
    let size = m.girth();
    let mut rows = Vec::with_capacity(size);
    for &s in m.s_list() {
        rows.push(index_shift_row(index(s), size));
    }
    for &t in m.t_list().iter().rev() {
        rows.push(derivative_row(&hermite_poly(index(t)), size));
    }
    PolyMatrix::from_rows(rows).expect("rows have equal length")
}

pub fn pseudo_wronskian(m: &MayaDiagram) -> IntPoly {
    pseudo_wronskian_matrix(m)
        .det_fraction_free()
        .expect("pseudo-Wronskian matrix is square")
}

/// Factors of the relation `(∏γ) H_M = (∏ε) H_{M-k}` for `k > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceFactor {
    pub k: i64,
    /// `{m ∈ M : 0 ≤ m < k}`
    pub e_set: Vec<i64>,
    /// `{m ∉ M : 0 ≤ m < k}`
    pub g_set: Vec<i64>,
    pub epsilon_product: BigInt,
    pub gamma_product: BigInt,
    /// `∏ε / ∏γ`, so that `H_M = ratio · H_{M-k}`.
    pub ratio: BigRat,
}

fn epsilon(m: &MayaDiagram, i: i64) -> BigInt {
    let (lo, hi) = m.window();
    let holes_below = (lo.min(i)..i).filter(|&x| !m.contains(x)).count();
    let mut prod: BigInt = ((i + 1)..=hi)
        .filter(|&x| m.contains(x))
        .map(|x| BigInt::from(2 * x - 2 * i))
        .product();
    if holes_below % 2 == 1 {
        prod = -prod;
    }
    prod
}

fn gamma(m: &MayaDiagram, i: i64) -> BigInt {
    let (lo, hi) = m.window();
    let filled_above = ((i + 1)..=hi.max(i)).filter(|&x| m.contains(x)).count();
    let mut prod: BigInt = (lo.min(i)..i)
        .filter(|&x| !m.contains(x))
        .map(|x| BigInt::from(2 * x - 2 * i))
        .product();
    if filled_above % 2 == 1 {
        prod = -prod;
    }
    prod
}

/// The factor relating `H_M` and `H_{M-k}` for `k > 0`.
pub fn equivalence_factor(m: &MayaDiagram, k: i64) -> Result<EquivalenceFactor> {
    if k <= 0 {
        return Err(Error::Precondition(format!("shift must be positive, got {k}")));
    }
    let (e_set, g_set): (Vec<i64>, Vec<i64>) = (0..k).partition(|&i| m.contains(i));
    let epsilon_product: BigInt = e_set.iter().map(|&i| epsilon(m, i)).product();
    let gamma_product: BigInt = g_set.iter().map(|&i| gamma(m, i)).product();
    assert!(
        !epsilon_product.is_zero() && !gamma_product.is_zero(),
        "vanishing equivalence factor for {m} and k = {k}"
    );
    let ratio = BigRat::new(epsilon_product.clone(), gamma_product.clone());
    Ok(EquivalenceFactor {
        k,
        e_set,
        g_set,
        epsilon_product,
        gamma_product,
        ratio,
    })
}

/// `c` with `H_M = c · H_{M-k}`, for any integer `k`.
pub fn equivalence_constant(m: &MayaDiagram, k: i64) -> BigRat {
    match k.signum() {
        0 => BigRat::one(),
        1 => equivalence_factor(m, k).expect("k > 0").ratio,
        _ => {
            let upper = m.shift(-k);
            equivalence_factor(&upper, -k).expect("-k > 0").ratio.recip()
        }
    }
}

/// `p = c · q` as polynomials.
pub fn is_scalar_multiple(p: &IntPoly, c: &BigRat, q: &IntPoly) -> bool {
    p.scale(c.denom()) == q.scale(c.numer())
}

/// The constant `c` with `p = c · q`, when one exists.
pub fn proportionality(p: &IntPoly, q: &IntPoly) -> Option<BigRat> {
    let (lp, lq) = (p.leading_coeff()?, q.leading_coeff()?);
    let c = BigRat::new(lp.clone(), lq.clone());
    is_scalar_multiple(p, &c, q).then_some(c)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub diagram: MayaDiagram,
    pub k: i64,
    /// Predicted `c` in `H_M = c · H_{M-k}`.
    pub constant: BigRat,
    pub matched: bool,
    pub lhs: IntPoly,
    pub rhs: IntPoly,
}

#[derive(Debug, Clone, Serialize)]
pub struct EquivalenceReportJson {
    #[serde(rename = "M")]
    pub diagram: MayaDiagram,
    pub k: i64,
    pub constant: String,
    #[serde(rename = "match")]
    pub matched: bool,
    pub lhs_degree: Option<usize>,
}

impl EquivalenceReport {
    pub fn to_json(&self) -> EquivalenceReportJson {
        EquivalenceReportJson {
            diagram: self.diagram.clone(),
            k: self.k,
            constant: rat_to_string(&self.constant),
            matched: self.matched,
            lhs_degree: self.lhs.degree(),
        }
    }
}

/// Computes `H_M` and `H_{M-k}` directly and checks the predicted constant.
pub fn verify_equivalence(m: &MayaDiagram, k: i64) -> EquivalenceReport {
    let lhs = pseudo_wronskian(m);
    let rhs = pseudo_wronskian(&m.shift(-k));
    let constant = equivalence_constant(m, k);
    let matched = is_scalar_multiple(&lhs, &constant, &rhs);
    EquivalenceReport {
        diagram: m.clone(),
        k,
        constant,
        matched,
        lhs,
        rhs,
    }
}

/// `Wr[ĥ_{s_1}, ..., ĥ_{s_p}]` for a diagram without positive elements.
pub fn pure_conjugate_wronskian(m: &MayaDiagram) -> Result<IntPoly> {
    if !m.t_list().is_empty() {
        return Err(Error::Precondition(format!("{m} has positive elements")));
    }
    let fs: Vec<IntPoly> = m.s_list().iter().map(|&s| conj_hermite_poly(index(s))).collect();
    Ok(wronskian(&fs))
}

/// `∏_{i<j} (a_j - a_i)`.
pub fn vandermonde(a: &[i64]) -> BigInt {
    let mut v = BigInt::one();
    for j in 0..a.len() {
        for i in 0..j {
            v *= a[j] - a[i];
        }
    }
    v
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugateIdentityReport {
    pub partition: Partition,
    /// `m_1 > ... > m_ℓ` for the partition.
    pub indices: Vec<i64>,
    /// `m'_1 > ... > m'_{ℓ'}` for the conjugate partition.
    pub conjugate_indices: Vec<i64>,
    /// `c` with `Wr[H_{m_1},...] = c · Wr[ĥ_{m'_1},...]`, computed directly.
    pub direct_constant: BigRat,
    /// `2^ℓ V(m) / (2^{ℓ'} V(m'))`.
    pub vandermonde_constant: BigRat,
    pub matches_vandermonde: bool,
    /// `2^{ℓ(ℓ-1)/2} V(m) / (2^{ℓ'(ℓ'-1)/2} V(m'))`, the ratio of leading
    /// coefficients.
    pub leading_term_constant: BigRat,
    pub matches_leading_term: bool,
}

/// Compares the Hermite Wronskian of `λ` with the conjugate Hermite
/// Wronskian of `λ'`, both with indices in descending order.
pub fn conjugate_wronskian_identity(lambda: &Partition) -> ConjugateIdentityReport {
    let indices = MayaDiagram::from_partition(lambda).t_list().to_vec();
    let conjugate_indices = MayaDiagram::from_partition(&lambda.conjugate()).t_list().to_vec();
    let plain = hermite_wronskian(&indices.iter().map(|&m| index(m)).collect::<Vec<_>>());
    let conj_fs: Vec<IntPoly> = conjugate_indices
        .iter()
        .map(|&m| conj_hermite_poly(index(m)))
        .collect();
    let conj = wronskian(&conj_fs);
    let direct_constant = proportionality(&plain, &conj).expect("Wronskians are proportional");
    let (l, lc) = (indices.len(), conjugate_indices.len());
    let with_powers = |a: usize, b: usize| {
        let two = BigInt::from(2);
        BigRat::new(
            num_traits::pow(two.clone(), a) * vandermonde(&indices),
            num_traits::pow(two, b) * vandermonde(&conjugate_indices),
        )
    };
    let vandermonde_constant = with_powers(l, lc);
    let leading_term_constant = with_powers(l * l.saturating_sub(1) / 2, lc * lc.saturating_sub(1) / 2);
    ConjugateIdentityReport {
        partition: lambda.clone(),
        indices,
        conjugate_indices,
        matches_vandermonde: vandermonde_constant == direct_constant,
        matches_leading_term: leading_term_constant == direct_constant,
        direct_constant,
        vandermonde_constant,
        leading_term_constant,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ShiftDirection {
    /// `M' = M - 1`, requires `0 ∈ M`.
    Down,
    /// `M' = M + 1`, requires `-1 ∉ M`.
    Up,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftLemmaReport {
    pub shifted: MayaDiagram,
    /// `c` with `H_M = c · H_{M'}`.
    pub constant: BigInt,
    pub holds: bool,
}

/// Checks the single-step relation between `H_M` and `H_{M∓1}`.
pub fn shift_lemma_check(m: &MayaDiagram, direction: ShiftDirection) -> Result<ShiftLemmaReport> {
    let p = m.s_list().len();
    let q = m.t_list().len();
    let two = BigInt::from(2);
    let (shifted, constant) = match direction {
        ShiftDirection::Down => {
            if !m.contains(0) {
                return Err(Error::Precondition(format!("0 ∉ {m}")));
            }
            let prod: BigInt = m.t_list()[..q - 1].iter().map(|&t| BigInt::from(t)).product();
            let mut c = num_traits::pow(two, q - 1) * prod;
            if p % 2 == 1 {
                c = -c;
            }
            (m.shift(-1), c)
        }
        ShiftDirection::Up => {
            if m.contains(-1) {
                return Err(Error::Precondition(format!("-1 ∈ {m}")));
            }
            let prod: BigInt = m.s_list()[..p - 1].iter().map(|&s| BigInt::from(s)).product();
            let mut c = num_traits::pow(two, p - 1) * prod;
            if (p + q - 1) % 2 == 1 {
                c = -c;
            }
            (m.shift(1), c)
        }
    };
    let holds = pseudo_wronskian(m) == pseudo_wronskian(&shifted).scale(&constant);
    Ok(ShiftLemmaReport {
        shifted,
        constant,
        holds,
    })
}

/// `c` with `H_M = c · Wr[H_{m_1}, ..., H_{m_ℓ}]` (descending indices) for
/// the standard form of `M`.
pub fn standard_wronskian_multiple(m: &MayaDiagram) -> (MayaDiagram, BigRat) {
    let (std, k) = m.standardize();
    (std, equivalence_constant(m, k))
}
