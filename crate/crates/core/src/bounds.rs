//! Upper bounds on `dim M_Lie(q)` and relative constraints tying it to the
//! multipliers of quotients.
//!
//! Everything here is integer arithmetic on the parameters `(n, m, d, c)`
//! and flags; no structure constants are needed.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{format_rational, Rational};
use crate::series::ClassificationReport;

/// `C(a, b)`, zero when `b < 0`, `a < 0` or `a < b`.
pub fn binom(a: i64, b: i64) -> BigInt {
    if b < 0 || a < 0 || a < b {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for k in 0..b {
        acc = acc * BigInt::from(a - k) / BigInt::from(k + 1);
    }
    acc
}

fn big(x: usize) -> BigInt {
    BigInt::from(x)
}

fn half(x: BigInt) -> Rational {
    Rational::new(x, BigInt::from(2))
}

/// `C(m+n−1, n) − d`
pub fn thm_general(n: usize, m: usize, d: usize) -> BigInt {
    binom((m + n - 1) as i64, n as i64) - big(d)
}

/// `Σ_{i=1..n} C(n−1, i−1)·C(m, i) − d`
pub fn thm_general_sum(n: usize, m: usize, d: usize) -> BigInt {
    let s: BigInt = (1..=n as i64)
        .map(|i| binom(n as i64 - 1, i - 1) * binom(m as i64, i))
        .sum();
    s - big(d)
}

/// `½m(m+1) − d`
pub fn thm_n2(m: usize, d: usize) -> BigInt {
    big(m * (m + 1) / 2) - big(d)
}

/// `C(m−d+n−1, n) + d·C(m−d+n−2, n−1) − d`
pub fn cor_nilp(n: usize, m: usize, d: usize) -> BigInt {
    let (n, m, d) = (n as i64, m as i64, d as i64);
    binom(m - d + n - 1, n) + BigInt::from(d) * binom(m - d + n - 2, n - 1) - BigInt::from(d)
}

/// `½(m² + m − md) − d`, as a rational.
pub fn cor_nilp_n2(m: usize, d: usize) -> Rational {
    let (m, d) = (BigInt::from(m), BigInt::from(d));
    half(&m * &m + &m - &m * &d) - Rational::from_integer(d)
}

/// `½[(m+d−1)·C(m−d+n−2, n−1) − d]`, as a rational.
pub fn cor_half(n: usize, m: usize, d: usize) -> Rational {
    let (n, m, d) = (n as i64, m as i64, d as i64);
    half(BigInt::from(m + d - 1) * binom(m - d + n - 2, n - 1) - BigInt::from(d))
}

/// `½(m² − m − d²)`, as a rational.
pub fn cor_half_n2(m: usize, d: usize) -> Rational {
    let (m, d) = (BigInt::from(m), BigInt::from(d));
    half(&m * &m - &m - &d * &d)
}

/// First branch `(m/2)·C(2n−2, n−1) − 1`. Exact: the central binomial
/// coefficient is even for `n ≥ 2`.
pub fn cor_filiform_small(n: usize, m: usize) -> BigInt {
    let c = binom(2 * n as i64 - 2, n as i64 - 1);
    debug_assert!(c.is_even());
    big(m) * c / 2 - 1
}

/// Second branch `C(2n−1, n) + C(2n−2, n−1) − 1`.
pub fn cor_filiform_large(n: usize) -> BigInt {
    binom(2 * n as i64 - 1, n as i64) + binom(2 * n as i64 - 2, n as i64 - 1) - 1
}

pub fn cor_filiform(n: usize, m: usize) -> BigInt {
    if m <= 5 {
        cor_filiform_small(n, m)
    } else {
        cor_filiform_large(n)
    }
}

fn floor(r: &Rational) -> BigInt {
    r.floor().to_integer()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoundId {
    ThmGeneral,
    ThmN2,
    CorDm1,
    CorNilp,
    CorNilpN2,
    CorHalf,
    CorHalfN2,
    CorFiliform,
    CorFiliformN2,
    RemarkAbelian,
    CorMaxclass,
}

impl BoundId {
    /// Catalog order.
    pub const ALL: [BoundId; 11] = [
        BoundId::ThmGeneral,
        BoundId::ThmN2,
        BoundId::CorDm1,
        BoundId::CorNilp,
        BoundId::CorNilpN2,
        BoundId::CorHalf,
        BoundId::CorHalfN2,
        BoundId::CorFiliform,
        BoundId::CorFiliformN2,
        BoundId::RemarkAbelian,
        BoundId::CorMaxclass,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BoundId::ThmGeneral => "THM_GENERAL",
            BoundId::ThmN2 => "THM_N2",
            BoundId::CorDm1 => "COR_DM1",
            BoundId::CorNilp => "COR_NILP",
            BoundId::CorNilpN2 => "COR_NILP_N2",
            BoundId::CorHalf => "COR_HALF",
            BoundId::CorHalfN2 => "COR_HALF_N2",
            BoundId::CorFiliform => "COR_FILIFORM",
            BoundId::CorFiliformN2 => "COR_FILIFORM_N2",
            BoundId::RemarkAbelian => "REMARK_ABELIAN",
            BoundId::CorMaxclass => "COR_MAXCLASS",
        }
    }

    fn index(self) -> usize {
        BoundId::ALL.iter().position(|&b| b == self).unwrap()
    }

    /// Whether this is the `n = 2` specialization of another entry.
    pub fn is_n2_specialization(self) -> bool {
        matches!(
            self,
            BoundId::ThmN2 | BoundId::CorNilpN2 | BoundId::CorHalfN2 | BoundId::CorFiliformN2
        )
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BoundId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BoundId::ALL
            .into_iter()
            .find(|b| b.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownBound(s.to_string()))
    }
}

/// The numerical data the catalog depends on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraParams {
    pub n: usize,
    pub m: usize,
    /// `dim q²_Lie`
    pub d: usize,
    /// Lie-nilpotency class, if Lie-nilpotent.
    pub lie_class: Option<usize>,
    pub lie_filiform: bool,
    pub lie_maximal_class: bool,
    pub lie_abelian: bool,
    /// `dim (q/Z_Lie(q)) / (q/Z_Lie(q))²_Lie`
    pub m_central: Option<usize>,
}

impl AlgebraParams {
    /// Plain parameters without flags; `d = 0` marks the algebra Lie-abelian.
    pub fn new(n: usize, m: usize, d: usize) -> Result<Self> {
        AlgebraParams {
            n,
            m,
            d,
            lie_class: None,
            lie_filiform: false,
            lie_maximal_class: false,
            lie_abelian: false,
            m_central: None,
        }
        .normalized()
    }

    pub fn with_class(mut self, c: usize) -> Result<Self> {
        self.lie_class = Some(c);
        self.normalized()
    }

    pub fn lie_filiform(mut self) -> Result<Self> {
        self.lie_filiform = true;
        self.normalized()
    }

    pub fn maximal_class(mut self) -> Result<Self> {
        self.lie_maximal_class = true;
        self.normalized()
    }

    pub fn abelian(mut self) -> Result<Self> {
        self.lie_abelian = true;
        self.normalized()
    }

    pub fn with_m_central(mut self, mc: usize) -> Result<Self> {
        self.m_central = Some(mc);
        self.normalized()
    }

    pub fn from_report(r: &ClassificationReport) -> Result<Self> {
        AlgebraParams {
            n: r.arity,
            m: r.dim,
            d: r.commutator_dim,
            lie_class: r.lie_class,
            lie_filiform: r.flags.lie_filiform,
            lie_maximal_class: r.flags.lie_maximal_class,
            lie_abelian: r.flags.lie_abelian,
            m_central: Some(r.central_quotient_abelianization_dim),
        }
        .normalized()
    }

    pub fn m_bar(&self) -> usize {
        self.m - self.d
    }

    pub fn lie_nilpotent(&self) -> bool {
        self.lie_class.is_some()
    }

    /// Checks the flags against `(n, m, d, c)` and fills in what they imply.
    pub fn normalized(mut self) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidParams(msg));
        let (n, m, d) = (self.n, self.m, self.d);
        if n < 2 {
            return bad(format!("arity n = {n} must be at least 2"));
        }
        if m < 1 {
            return bad("dimension m must be at least 1".into());
        }
        if d > m {
            return bad(format!("d = {d} exceeds m = {m}"));
        }
        if self.lie_abelian && d != 0 {
            return bad(format!("Lie-abelian requires d = 0, got d = {d}"));
        }
        self.lie_abelian = d == 0;
        let mut implied = Vec::new();
        if self.lie_abelian {
            implied.push(("Lie-abelian", 1));
        }
        if self.lie_filiform {
            if m < n || d != m - n {
                return bad(format!(
                    "Lie-filiform requires m >= n and d = m - n, got n = {n}, m = {m}, d = {d}"
                ));
            }
            implied.push(("Lie-filiform", m - n + 1));
        }
        if self.lie_maximal_class {
            if d + 1 != m {
                return bad(format!(
                    "maximal class requires d = m - 1, got m = {m}, d = {d}"
                ));
            }
            implied.push(("maximal class", m));
        }
        for (what, c) in implied {
            match self.lie_class {
                Some(given) if given != c => {
                    return bad(format!("{what} implies class {c}, got class {given}"))
                }
                _ => self.lie_class = Some(c),
            }
        }
        if let Some(c) = self.lie_class {
            if c == 0 || c > m {
                return bad(format!("class {c} must lie in 1..={m}"));
            }
            if (c == 1) != (d == 0) {
                return bad(format!("class {c} is inconsistent with d = {d}"));
            }
            if d == m {
                return bad("a Lie-nilpotent algebra has d < m".into());
            }
        }
        if let Some(mc) = self.m_central {
            if mc > m {
                return bad(format!("m_central = {mc} exceeds m = {m}"));
            }
        }
        Ok(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundItem {
    pub id: BoundId,
    pub applicable: bool,
    /// Whether `value` is the exact multiplier dimension rather than a bound.
    pub exact: bool,
    pub reason: String,
    pub value: Option<BigInt>,
    /// Un-floored value of formulas with a factor ½.
    pub raw: Option<Rational>,
}

impl BoundItem {
    fn na(id: BoundId, reason: impl Into<String>) -> Self {
        BoundItem {
            id,
            applicable: false,
            exact: false,
            reason: reason.into(),
            value: None,
            raw: None,
        }
    }

    fn ok(id: BoundId, reason: impl Into<String>, value: BigInt) -> Self {
        BoundItem {
            id,
            applicable: true,
            exact: false,
            reason: reason.into(),
            value: Some(value),
            raw: None,
        }
    }

    fn floored(id: BoundId, reason: impl Into<String>, raw: Rational) -> Self {
        BoundItem {
            raw: Some(raw.clone()),
            ..BoundItem::ok(id, reason, floor(&raw))
        }
    }

    fn exact(mut self) -> Self {
        self.exact = true;
        self
    }

    /// The formula produced a non-integer before flooring.
    pub fn floored_fraction(&self) -> bool {
        self.raw.as_ref().is_some_and(|r| !r.is_integer())
    }

    fn sort_key(&self) -> (BigInt, bool, bool, usize) {
        (
            self.value.clone().unwrap_or_default(),
            !self.exact,
            !self.id.is_n2_specialization(),
            self.id.index(),
        )
    }
}

fn nilpotent_reason(p: &AlgebraParams) -> std::result::Result<String, String> {
    match p.lie_class {
        Some(c) => Ok(format!("Lie-nilpotent of class {c}")),
        None => Err("requires Lie-nilpotent (class unknown)".into()),
    }
}

pub fn bound_value(id: BoundId, p: &AlgebraParams) -> BoundItem {
    use BoundId::*;
    let (n, m, d) = (p.n, p.m, p.d);
    let need_n2 = || format!("requires n = 2, got n = {n}");
    match id {
        ThmGeneral => {
            let v = thm_general(n, m, d);
            assert_eq!(v, thm_general_sum(n, m, d), "Vandermonde form disagrees");
            BoundItem::ok(id, "any Leibniz n-algebra", v)
        }
        ThmN2 if n != 2 => BoundItem::na(id, need_n2()),
        ThmN2 => BoundItem::ok(id, "any Leibniz algebra (n = 2)", thm_n2(m, d)),
        CorDm1 => match nilpotent_reason(p) {
            Err(r) => BoundItem::na(id, r),
            Ok(_) if d + 1 != m => {
                BoundItem::na(id, format!("requires d = m - 1, got m = {m}, d = {d}"))
            }
            Ok(r) => BoundItem::ok(id, format!("{r}, d = m - 1"), BigInt::one()),
        },
        CorNilp => match nilpotent_reason(p) {
            Err(r) => BoundItem::na(id, r),
            Ok(r) => BoundItem::ok(id, r, cor_nilp(n, m, d)),
        },
        CorNilpN2 if n != 2 => BoundItem::na(id, need_n2()),
        CorNilpN2 => match nilpotent_reason(p) {
            Err(r) => BoundItem::na(id, r),
            Ok(r) => BoundItem::floored(id, format!("n = 2, {r}"), cor_nilp_n2(m, d)),
        },
        CorHalf => match nilpotent_reason(p) {
            Err(r) => BoundItem::na(id, r),
            Ok(_) if d == 0 => BoundItem::na(id, "requires d >= 1 (Lie-abelian)"),
            Ok(r) => BoundItem::floored(id, format!("{r}, d = {d} >= 1"), cor_half(n, m, d)),
        },
        CorHalfN2 if n != 2 => BoundItem::na(id, need_n2()),
        CorHalfN2 => match nilpotent_reason(p) {
            Err(r) => BoundItem::na(id, r),
            Ok(_) if d == 0 => BoundItem::na(id, "requires d >= 1 (Lie-abelian)"),
            Ok(r) => BoundItem::floored(id, format!("n = 2, {r}, d = {d} >= 1"), cor_half_n2(m, d)),
        },
        CorFiliform if !p.lie_filiform => BoundItem::na(id, "requires Lie-filiform"),
        CorFiliform if m <= n => BoundItem::na(id, format!("requires m > n, got m = {m}, n = {n}")),
        CorFiliform => {
            let branch = if m <= 5 { "m <= 5" } else { "m >= 6" };
            BoundItem::ok(
                id,
                format!("Lie-filiform, m > n, {branch}"),
                cor_filiform(n, m),
            )
        }
        CorFiliformN2 if n != 2 => BoundItem::na(id, need_n2()),
        CorFiliformN2 if !p.lie_filiform => BoundItem::na(id, "requires Lie-filiform"),
        CorFiliformN2 if m == 2 => {
            BoundItem::ok(id, "Lie-filiform of dimension 2 (Lie-abelian)", big(3)).exact()
        }
        CorFiliformN2 => {
            let v = if m <= 5 { big(m - 1) } else { big(4) };
            BoundItem::ok(id, format!("n = 2, Lie-filiform, m = {m} > 2"), v)
        }
        RemarkAbelian if !p.lie_abelian => BoundItem::na(id, "requires Lie-abelian"),
        RemarkAbelian if n == 2 => BoundItem::ok(
            id,
            "n = 2 and Lie-abelian: equality case",
            big(m * (m + 1) / 2),
        )
        .exact(),
        RemarkAbelian if m == n => BoundItem::ok(
            id,
            "n-dimensional Lie-filiform, hence Lie-abelian",
            binom(2 * n as i64 - 1, n as i64),
        ),
        RemarkAbelian => {
            BoundItem::na(id, format!("requires m = n or n = 2, got n = {n}, m = {m}"))
        }
        CorMaxclass if !p.lie_maximal_class => BoundItem::na(id, "requires maximal class"),
        CorMaxclass => BoundItem::ok(id, "Lie-nilpotent of maximal class", BigInt::one()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub items: Vec<BoundItem>,
    /// Index into `items` of the smallest applicable value.
    pub best: Option<usize>,
}

impl BoundReport {
    pub fn best_item(&self) -> Option<&BoundItem> {
        self.best.map(|i| &self.items[i])
    }

    pub fn item(&self, id: BoundId) -> Option<&BoundItem> {
        self.items.iter().find(|it| it.id == id)
    }

    pub fn value(&self, id: BoundId) -> Option<&BigInt> {
        self.item(id).and_then(|it| it.value.as_ref())
    }

    /// The best value, when it is known to equal `dim M_Lie(q)`.
    pub fn exact_value(&self) -> Option<&BigInt> {
        self.best_item()
            .filter(|it| it.exact)
            .and_then(|it| it.value.as_ref())
    }
}

/// Minimum over applicable items; ties go to exact values, then to `n = 2`
/// specializations, then to catalog order.
pub fn select_best(items: &[BoundItem]) -> Option<usize> {
    items
        .iter()
        .enumerate()
        .filter(|(_, it)| it.applicable)
        .min_by_key(|(_, it)| it.sort_key())
        .map(|(i, _)| i)
}

pub fn best_bounds(p: &AlgebraParams) -> BoundReport {
    let items: Vec<BoundItem> = BoundId::ALL.iter().map(|&id| bound_value(id, p)).collect();
    let best = select_best(&items);
    BoundReport { items, best }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum RelativeId {
    T34,
    T39,
    T313,
    T321,
    L22Iv,
}

impl RelativeId {
    pub const ALL: [RelativeId; 5] = [
        RelativeId::T34,
        RelativeId::T39,
        RelativeId::T313,
        RelativeId::T321,
        RelativeId::L22Iv,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RelativeId::T34 => "T34",
            RelativeId::T39 => "T39",
            RelativeId::T313 => "T313",
            RelativeId::T321 => "T321",
            RelativeId::L22Iv => "L22IV",
        }
    }
}

impl fmt::Display for RelativeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RelativeId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RelativeId::ALL
            .into_iter()
            .find(|r| r.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownBound(s.to_string()))
    }
}

/// Quotient data the relative constraints need beyond [`AlgebraParams`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RelativeExtras {
    /// `(j, dim q^j_Lie)` pairs.
    pub qj_dims: Vec<(usize, usize)>,
    /// `(dim I, dim(I ∩ q²_Lie))` for an ideal `I ⊆ Z_Lie(q)`.
    pub central_ideal: Option<(usize, usize)>,
}

impl RelativeExtras {
    /// Extras read off a classification: every `dim q^j_Lie` for
    /// `2 ≤ j ≤ c`, and `I = Z_Lie(q)`.
    pub fn from_report(r: &ClassificationReport) -> Self {
        let qj_dims = match r.lie_class {
            Some(c) if c >= 2 => (2..=c).map(|j| (j, r.lie_series_dims[j - 1])).collect(),
            _ => Vec::new(),
        };
        RelativeExtras {
            qj_dims,
            central_ideal: Some((r.lie_center_dim, r.commutator_center_dim)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstraintShape {
    /// `dim M(q) = dim M(q/Z_Lie(q)) + k`, `lo ≤ k ≤ hi`
    KRange { lo: BigInt, hi: BigInt },
    /// `dim M(q) ≤ dim M(q/q^i_Lie) + dim_qj·factor` for every `i ≥ 2`
    Additive {
        j: usize,
        dim_qj: usize,
        factor: BigInt,
        term: BigInt,
    },
    /// `dim M(q) + dim M(q/q^i_Lie) ≤ rhs` for `2 ≤ i ≤ c`
    PairSum { c: usize, rhs: BigInt },
    /// `dim M(q) + cap ≤ dim M(q/I) + term`
    Central {
        dim_i: usize,
        cap: usize,
        term: BigInt,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelativeConstraint {
    pub id: RelativeId,
    pub applicable: bool,
    pub reason: String,
    pub shape: Option<ConstraintShape>,
}

impl RelativeConstraint {
    fn na(id: RelativeId, reason: impl Into<String>) -> Self {
        RelativeConstraint {
            id,
            applicable: false,
            reason: reason.into(),
            shape: None,
        }
    }

    fn ok(id: RelativeId, reason: impl Into<String>, shape: ConstraintShape) -> Self {
        RelativeConstraint {
            id,
            applicable: true,
            reason: reason.into(),
            shape: Some(shape),
        }
    }

    /// The constraint as a formula in the unknowns `M(q)` and `M(q/I)`,
    /// or `None` when inapplicable.
    pub fn description(&self) -> Option<String> {
        Some(match self.shape.as_ref()? {
            ConstraintShape::KRange { lo, hi } => {
                format!("dim M(q) = dim M(q/Z_Lie(q)) + k, {lo} <= k <= {hi}")
            }
            ConstraintShape::Additive { j, term, .. } => {
                format!("dim M(q) <= dim M(q/q^i_Lie) + {term}  (j = {j}, all i >= 2)")
            }
            ConstraintShape::PairSum { c, rhs } => {
                format!("dim M(q) + dim M(q/q^i_Lie) <= {rhs}  (2 <= i <= {c})")
            }
            ConstraintShape::Central { cap, term, .. } => {
                format!("dim M(q) + {cap} <= dim M(q/I) + {term}  (I in Z_Lie(q))")
            }
        })
    }

    /// Named integer coefficients, in a fixed order.
    pub fn coefficients(&self) -> Vec<(&'static str, BigInt)> {
        match &self.shape {
            None => Vec::new(),
            Some(ConstraintShape::KRange { lo, hi }) => {
                vec![("k_min", lo.clone()), ("k_max", hi.clone())]
            }
            Some(ConstraintShape::Additive {
                j,
                dim_qj,
                factor,
                term,
            }) => vec![
                ("j", big(*j)),
                ("dim_qj", big(*dim_qj)),
                ("factor", factor.clone()),
                ("term", term.clone()),
            ],
            Some(ConstraintShape::PairSum { c, rhs }) => {
                vec![("class", big(*c)), ("rhs", rhs.clone())]
            }
            Some(ConstraintShape::Central { dim_i, cap, term }) => vec![
                ("dim_i", big(*dim_i)),
                ("dim_i_cap_q2", big(*cap)),
                ("term", term.clone()),
            ],
        }
    }
}

fn additive(
    id: RelativeId,
    p: &AlgebraParams,
    extras: &RelativeExtras,
    base: usize,
    base_name: &str,
    requested: bool,
) -> Result<Vec<RelativeConstraint>> {
    let Some(c) = p.lie_class else {
        return Ok(vec![RelativeConstraint::na(id, "requires Lie-nilpotent")]);
    };
    if extras.qj_dims.is_empty() {
        if requested {
            return Err(Error::MissingExtras {
                id: id.as_str().into(),
                what: "dim q^j_Lie for some 2 <= j <= c".into(),
            });
        }
        return Ok(vec![RelativeConstraint::na(id, "no dim q^j_Lie supplied")]);
    }
    let factor = binom((base + p.n - 2) as i64, p.n as i64 - 1) - BigInt::one();
    let mut out = Vec::new();
    for &(j, dim_qj) in &extras.qj_dims {
        if !(2..=c).contains(&j) {
            return Err(Error::InvalidParams(format!(
                "j = {j} must satisfy 2 <= j <= c = {c}"
            )));
        }
        if dim_qj > p.d {
            return Err(Error::InvalidParams(format!(
                "dim q^{j}_Lie = {dim_qj} exceeds d = {}",
                p.d
            )));
        }
        out.push(RelativeConstraint::ok(
            id,
            format!("Lie-nilpotent of class {c}, {base_name} = {base}"),
            ConstraintShape::Additive {
                j,
                dim_qj,
                term: big(dim_qj) * &factor,
                factor: factor.clone(),
            },
        ));
    }
    Ok(out)
}

/// Every relative constraint, inapplicable ones included with reasons.
/// Ids in `requested` whose extra inputs are missing are an error instead.
pub fn relative_constraints(
    p: &AlgebraParams,
    extras: &RelativeExtras,
    requested: &[RelativeId],
) -> Result<Vec<RelativeConstraint>> {
    let (n, m) = (p.n, p.m);
    let mut out = Vec::new();

    out.push(if p.lie_maximal_class {
        RelativeConstraint::ok(
            RelativeId::T34,
            "Lie-nilpotent of maximal class",
            ConstraintShape::KRange {
                lo: BigInt::from(-1),
                hi: BigInt::zero(),
            },
        )
    } else if p.lie_filiform && m > n {
        RelativeConstraint::ok(
            RelativeId::T34,
            "Lie-filiform, m > n",
            ConstraintShape::KRange {
                lo: BigInt::from(-1),
                hi: binom(2 * n as i64 - 2, n as i64 - 1) - 1,
            },
        )
    } else {
        RelativeConstraint::na(
            RelativeId::T34,
            "requires Lie-filiform with m > n, or maximal class",
        )
    });

    out.extend(additive(
        RelativeId::T39,
        p,
        extras,
        p.m_bar(),
        "m_bar",
        requested.contains(&RelativeId::T39),
    )?);

    out.push(match p.lie_class {
        Some(c) if c >= 2 => RelativeConstraint::ok(
            RelativeId::T313,
            format!("Lie-nilpotent of class {c} >= 2"),
            ConstraintShape::PairSum {
                c,
                rhs: big(m - 1) * binom((p.m_bar() + n - 2) as i64, n as i64 - 1),
            },
        ),
        Some(c) => {
            RelativeConstraint::na(RelativeId::T313, format!("requires class >= 2, got {c}"))
        }
        None => RelativeConstraint::na(RelativeId::T313, "requires Lie-nilpotent"),
    });

    match p.m_central {
        Some(mc) => out.extend(additive(
            RelativeId::T321,
            p,
            extras,
            mc,
            "m_central",
            requested.contains(&RelativeId::T321),
        )?),
        None if requested.contains(&RelativeId::T321) => {
            return Err(Error::MissingExtras {
                id: "T321".into(),
                what: "m_central".into(),
            })
        }
        None => out.push(RelativeConstraint::na(
            RelativeId::T321,
            "no m_central supplied",
        )),
    }

    out.push(match extras.central_ideal {
        Some((dim_i, cap)) => {
            if cap > dim_i || dim_i > m || cap > p.d {
                return Err(Error::InvalidParams(format!(
                    "central ideal data dim I = {dim_i}, dim(I ∩ q²) = {cap} is inconsistent"
                )));
            }
            let term = big(dim_i) * num_traits::pow(big(p.m_bar()), n - 1);
            RelativeConstraint::ok(
                RelativeId::L22Iv,
                "ideal I contained in Z_Lie(q)",
                ConstraintShape::Central { dim_i, cap, term },
            )
        }
        None if requested.contains(&RelativeId::L22Iv) => {
            return Err(Error::MissingExtras {
                id: "L22IV".into(),
                what: "dim I and dim(I ∩ q²_Lie) for a central ideal".into(),
            })
        }
        None => RelativeConstraint::na(RelativeId::L22Iv, "no central ideal supplied"),
    });

    Ok(out)
}

/// Text form of an item value with the un-floored rational, if any.
pub fn render_value(item: &BoundItem) -> String {
    match (&item.value, &item.raw) {
        (None, _) => "n/a".into(),
        (Some(v), Some(r)) if !r.is_integer() => format!("{v} (raw {})", format_rational(r)),
        (Some(v), _) => v.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn val(id: BoundId, p: &AlgebraParams) -> i64 {
        bound_value(id, p).value.unwrap().to_i64().unwrap()
    }

    #[test]
    fn binom_conventions() {
        assert_eq!(binom(4, 2), BigInt::from(6));
        assert_eq!(binom(2, 3), BigInt::zero());
        assert_eq!(binom(10, 5), BigInt::from(252));
        assert_eq!(binom(-1, 0), BigInt::zero());
        assert_eq!(binom(3, -1), BigInt::zero());
        assert_eq!(binom(0, 0), BigInt::one());
    }

    #[test]
    fn catalog_examples() {
        let p = AlgebraParams::new(2, 2, 1).unwrap().with_class(2).unwrap();
        assert_eq!(val(BoundId::ThmGeneral, &p), 2);
        assert_eq!(val(BoundId::CorNilp, &p), 1);
        assert_eq!(val(BoundId::CorHalfN2, &p), 0);

        let p = AlgebraParams::new(2, 4, 2).unwrap().lie_filiform().unwrap();
        assert_eq!(p.lie_class, Some(3));
        assert_eq!(val(BoundId::CorFiliformN2, &p), 3);
        assert_eq!(val(BoundId::ThmGeneral, &p), 8);
        assert_eq!(val(BoundId::CorNilpN2, &p), 4);
        assert_eq!(val(BoundId::CorHalfN2, &p), 4);

        let p = AlgebraParams::new(3, 10, 1).unwrap().with_class(2).unwrap();
        assert_eq!(val(BoundId::CorHalf, &p), 224);
        assert_eq!(val(BoundId::ThmGeneral, &p), 219);

        let p = AlgebraParams::new(2, 2, 0).unwrap();
        let it = bound_value(BoundId::RemarkAbelian, &p);
        assert!(it.exact);
        assert_eq!(it.value, Some(BigInt::from(3)));
    }

    #[test]
    fn best_examples() {
        let p = AlgebraParams::new(2, 4, 2)
            .unwrap()
            .with_class(3)
            .unwrap()
            .lie_filiform()
            .unwrap();
        let r = best_bounds(&p);
        let b = r.best_item().unwrap();
        assert_eq!(
            (b.id, b.value.clone()),
            (BoundId::CorFiliformN2, Some(3.into()))
        );

        let p = AlgebraParams::new(2, 2, 1).unwrap().with_class(2).unwrap();
        let b = best_bounds(&p).best_item().cloned().unwrap();
        assert_eq!((b.id, b.value), (BoundId::CorHalfN2, Some(0.into())));

        let p = AlgebraParams::new(2, 3, 0).unwrap();
        let r = best_bounds(&p);
        let b = r.best_item().unwrap();
        assert_eq!((b.id, b.exact), (BoundId::RemarkAbelian, true));
        assert_eq!(r.exact_value(), Some(&BigInt::from(6)));
    }

    #[test]
    fn unknown_id_is_an_error() {
        assert!(matches!(
            "COR_FOO".parse::<BoundId>(),
            Err(Error::UnknownBound(_))
        ));
        assert_eq!(
            "cor_half_n2".parse::<BoundId>().unwrap(),
            BoundId::CorHalfN2
        );
    }

    #[test]
    fn inconsistent_params_rejected() {
        assert!(AlgebraParams::new(2, 3, 4).is_err());
        assert!(AlgebraParams::new(2, 3, 1).unwrap().abelian().is_err());
        assert!(AlgebraParams::new(2, 4, 1).unwrap().lie_filiform().is_err());
        assert!(AlgebraParams::new(2, 4, 2)
            .unwrap()
            .maximal_class()
            .is_err());
        assert!(AlgebraParams::new(2, 4, 0).unwrap().with_class(2).is_err());
        assert!(AlgebraParams::new(2, 4, 4).unwrap().with_class(2).is_err());
        let p = AlgebraParams::new(3, 5, 4)
            .unwrap()
            .maximal_class()
            .unwrap();
        assert_eq!(p.lie_class, Some(5));
    }

    #[test]
    fn floored_items_keep_raw() {
        let p = AlgebraParams::new(2, 3, 1).unwrap().with_class(2).unwrap();
        let it = bound_value(BoundId::CorNilpN2, &p);
        assert_eq!(it.value, Some(BigInt::from(3)));
        assert!(it.floored_fraction());
        assert_eq!(render_value(&it), "3 (raw 7/2)");
    }

    #[test]
    fn relative_examples() {
        let p = AlgebraParams::new(2, 4, 2).unwrap().lie_filiform().unwrap();
        let rc = relative_constraints(&p, &RelativeExtras::default(), &[]).unwrap();
        assert_eq!(
            rc[0].shape,
            Some(ConstraintShape::KRange {
                lo: BigInt::from(-1),
                hi: BigInt::one()
            })
        );
        assert!(rc.iter().any(|c| c.id == RelativeId::T39 && !c.applicable));
        assert!(relative_constraints(&p, &RelativeExtras::default(), &[RelativeId::T39]).is_err());

        let p = AlgebraParams::new(3, 5, 4)
            .unwrap()
            .maximal_class()
            .unwrap();
        let rc = relative_constraints(&p, &RelativeExtras::default(), &[]).unwrap();
        assert_eq!(
            rc[0].coefficients(),
            vec![("k_min", BigInt::from(-1)), ("k_max", BigInt::zero())]
        );

        // n = 3, m_bar = 3, dim q^j = 2
        let p = AlgebraParams::new(3, 6, 3).unwrap().with_class(3).unwrap();
        let extras = RelativeExtras {
            qj_dims: vec![(2, 2)],
            central_ideal: None,
        };
        let rc = relative_constraints(&p, &extras, &[RelativeId::T39]).unwrap();
        let t39 = rc.iter().find(|c| c.id == RelativeId::T39).unwrap();
        assert!(matches!(
            &t39.shape,
            Some(ConstraintShape::Additive { term, .. }) if *term == BigInt::from(10)
        ));
    }
}
