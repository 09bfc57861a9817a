//! Truncated multivariate power/Laurent series with exact rational
//! coefficients.
//!
//! A [`VarTable`] fixes an ordered set of variables. Truncated variables
//! carry an exponent cap and series arithmetic silently drops any term
//! whose exponent exceeds it; a truncated variable may also admit a bounded
//! negative exponent window (used for nome expansions whose coefficients
//! are Laurent in some of the bases). Exact variables are never truncated:
//! plain exact variables take nonnegative exponents, Laurent exact
//! variables any exponent with `|e| ≤ 64`.
//!
//! Coefficients are `BigRational`; there is no floating point. Zero
//! coefficients are never stored.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};
use thiserror::Error;

/// Largest absolute exponent allowed on an exact Laurent variable.
/// Exceeding it aborts: it signals a misconfigured check, not data.
pub const LAURENT_GUARD: i32 = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("series live over different variable tables")]
    VarTableMismatch,
    #[error("unknown variable {0:?}")]
    UnknownVar(String),
    #[error("negative exponent {exp} on non-Laurent variable {var:?}")]
    NegativeExponent { var: String, exp: i64 },
    #[error("exponent {exp} of {var:?} fell below the Laurent floor {floor}")]
    BelowLaurentFloor { var: String, exp: i64, floor: i32 },
    #[error("leading term is not a unit monomial, cannot invert")]
    NonInvertibleLeadingTerm,
    #[error("bad constant term for {op}")]
    BadConstantTerm { op: &'static str },
    #[error("infinite product does not terminate under the truncation caps")]
    NonterminatingProduct,
    #[error("power series for {op} does not terminate under the truncation caps")]
    Nonterminating { op: &'static str },
    #[error("truncation cap on {var:?} is too small for this substitution")]
    CapViolation { var: String },
}

type Result<T> = std::result::Result<T, SeriesError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum VarKind {
    /// Power-series variable, exponents `0..=cap`; terms above `cap` drop.
    Truncated { cap: u32 },
    /// Truncated variable with a bounded negative window. Terms above `cap`
    /// drop; an exponent below `floor` is an error rather than truncation,
    /// because dropping low-order Laurent terms is never sound.
    TruncatedLaurent { cap: u32, floor: i32 },
    /// Exact polynomial variable, exponents `≥ 0`, never truncated.
    Exact,
    /// Exact Laurent variable, any exponent with `|e| ≤ 64`.
    ExactLaurent,
}

impl VarKind {
    fn is_truncated(self) -> bool {
        matches!(self, VarKind::Truncated { .. } | VarKind::TruncatedLaurent { .. })
    }
}

/// Ordered list of named variables shared by all series in a computation.
#[derive(Debug, PartialEq, Eq, Serialize)]
pub struct VarTable {
    vars: Vec<(String, VarKind)>,
}

pub struct VarTableBuilder {
    vars: Vec<(String, VarKind)>,
}

impl VarTableBuilder {
    fn push(mut self, name: &str, kind: VarKind) -> Self {
        assert!(
            self.vars.iter().all(|(n, _)| n != name),
            "duplicate variable {name:?}"
        );
        self.vars.push((name.to_string(), kind));
        self
    }

    pub fn truncated(self, name: &str, cap: u32) -> Self {
        self.push(name, VarKind::Truncated { cap })
    }

    pub fn truncated_laurent(self, name: &str, cap: u32, floor: i32) -> Self {
        assert!(floor <= 0, "Laurent floor must be ≤ 0");
        self.push(name, VarKind::TruncatedLaurent { cap, floor })
    }

    pub fn exact(self, name: &str) -> Self {
        self.push(name, VarKind::Exact)
    }

    pub fn exact_laurent(self, name: &str) -> Self {
        self.push(name, VarKind::ExactLaurent)
    }

    pub fn build(self) -> Arc<VarTable> {
        Arc::new(VarTable { vars: self.vars })
    }
}

impl VarTable {
    pub fn builder() -> VarTableBuilder {
        VarTableBuilder { vars: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.vars.iter().map(|(n, _)| n.as_str())
    }

    pub fn kind(&self, idx: usize) -> VarKind {
        self.vars[idx].1
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.vars[idx].0
    }

    pub fn index(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|(n, _)| n == name)
            .ok_or_else(|| SeriesError::UnknownVar(name.to_string()))
    }

    /// Build a monomial from `(name, exponent)` pairs.
    pub fn mono(&self, pairs: &[(&str, i32)]) -> Result<Monomial> {
        let mut exps = vec![0i32; self.len()];
        for &(name, e) in pairs {
            exps[self.index(name)?] += e;
        }
        Ok(Monomial(exps))
    }

    /// Upper bound on how many factors with positive truncated content a
    /// surviving term can absorb; used as the termination guard for power
    /// series loops.
    fn degree_budget(&self) -> u64 {
        let mut total = 2u64;
        for &(_, kind) in &self.vars {
            match kind {
                VarKind::Truncated { cap } => total += u64::from(cap),
                VarKind::TruncatedLaurent { cap, floor } => {
                    total += u64::from(cap) + u64::from(floor.unsigned_abs())
                }
                _ => {}
            }
        }
        total
    }
}

/// Exponent vector aligned with a [`VarTable`]. Ordered lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<i32>);

impl Monomial {
    pub fn exponents(&self) -> &[i32] {
        &self.0
    }

    pub fn exponent(&self, idx: usize) -> i32 {
        self.0[idx]
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    fn inv(&self) -> Monomial {
        Monomial(self.0.iter().map(|e| -e).collect())
    }

    fn pow(&self, k: i32) -> Monomial {
        Monomial(
            self.0
                .iter()
                .map(|e| e.checked_mul(k).expect("exponent overflow"))
                .collect(),
        )
    }
}

fn rat_pow(r: &BigRational, e: i32) -> BigRational {
    if e == 0 {
        return BigRational::one();
    }
    let mut acc = BigRational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= r;
    }
    if e < 0 {
        acc.recip()
    } else {
        acc
    }
}

/// The fate of a term under the truncation caps.
enum Fate {
    Keep,
    Drop,
    Reject(SeriesError),
}

/// Sparse truncated series: monomial → nonzero rational coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiSeries {
    table: Arc<VarTable>,
    terms: BTreeMap<Monomial, BigRational>,
}

impl MultiSeries {
    pub fn zero(table: &Arc<VarTable>) -> Self {
        MultiSeries { table: Arc::clone(table), terms: BTreeMap::new() }
    }

    pub fn one(table: &Arc<VarTable>) -> Self {
        Self::constant(table, BigRational::one())
    }

    pub fn constant(table: &Arc<VarTable>, c: BigRational) -> Self {
        let mut s = Self::zero(table);
        if !c.is_zero() {
            s.terms.insert(Monomial(vec![0; table.len()]), c);
        }
        s
    }

    pub fn from_i64(table: &Arc<VarTable>, c: i64) -> Self {
        Self::constant(table, BigRational::from_integer(BigInt::from(c)))
    }

    /// A single term `c · Π var^e`.
    pub fn term(table: &Arc<VarTable>, c: BigRational, pairs: &[(&str, i32)]) -> Result<Self> {
        let mono = table.mono(pairs)?;
        let mut s = Self::zero(table);
        s.insert(mono, c)?;
        Ok(s)
    }

    pub fn var(table: &Arc<VarTable>, name: &str) -> Result<Self> {
        Self::term(table, BigRational::one(), &[(name, 1)])
    }

    pub fn table(&self) -> &Arc<VarTable> {
        &self.table
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: &Monomial) -> BigRational {
        self.terms.get(mono).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coefficient_of(&self, pairs: &[(&str, i32)]) -> Result<BigRational> {
        Ok(self.coefficient(&self.table.mono(pairs)?))
    }

    /// The constant coefficient (identity monomial).
    pub fn constant_term(&self) -> BigRational {
        self.coefficient(&Monomial(vec![0; self.table.len()]))
    }

    fn fate(&self, mono: &Monomial) -> Fate {
        for (idx, &e) in mono.0.iter().enumerate() {
            match self.table.kind(idx) {
                VarKind::Truncated { cap } => {
                    if e < 0 {
                        return Fate::Reject(SeriesError::NegativeExponent {
                            var: self.table.name(idx).to_string(),
                            exp: e.into(),
                        });
                    }
                    if e > cap as i32 {
                        return Fate::Drop;
                    }
                }
                VarKind::TruncatedLaurent { cap, floor } => {
                    if e > cap as i32 {
                        return Fate::Drop;
                    }
                    if e < floor {
                        return Fate::Reject(SeriesError::BelowLaurentFloor {
                            var: self.table.name(idx).to_string(),
                            exp: e.into(),
                            floor,
                        });
                    }
                }
                VarKind::Exact => {
                    if e < 0 {
                        return Fate::Reject(SeriesError::NegativeExponent {
                            var: self.table.name(idx).to_string(),
                            exp: e.into(),
                        });
                    }
                }
                VarKind::ExactLaurent => {
                    assert!(
                        e.abs() <= LAURENT_GUARD,
                        "Laurent exponent {e} on {:?} exceeds the guard {LAURENT_GUARD}: \
                         this signals a misconfigured check",
                        self.table.name(idx)
                    );
                }
            }
        }
        Fate::Keep
    }

    fn insert(&mut self, mono: Monomial, c: BigRational) -> Result<()> {
        if c.is_zero() {
            return Ok(());
        }
        match self.fate(&mono) {
            Fate::Drop => Ok(()),
            Fate::Reject(e) => Err(e),
            Fate::Keep => {
                use std::collections::btree_map::Entry;
                match self.terms.entry(mono) {
                    Entry::Vacant(v) => {
                        v.insert(c);
                    }
                    Entry::Occupied(mut o) => {
                        *o.get_mut() += c;
                        if o.get().is_zero() {
                            o.remove();
                        }
                    }
                }
                Ok(())
            }
        }
    }

    fn check_same_table(&self, other: &MultiSeries) -> Result<()> {
        if Arc::ptr_eq(&self.table, &other.table) || self.table == other.table {
            Ok(())
        } else {
            Err(SeriesError::VarTableMismatch)
        }
    }

    pub fn add(&self, other: &MultiSeries) -> Result<MultiSeries> {
        self.check_same_table(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(m.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &MultiSeries) -> Result<MultiSeries> {
        self.check_same_table(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(m.clone(), -c.clone())?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> MultiSeries {
        MultiSeries {
            table: Arc::clone(&self.table),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn scalar_mul(&self, c: &BigRational) -> MultiSeries {
        if c.is_zero() {
            return Self::zero(&self.table);
        }
        MultiSeries {
            table: Arc::clone(&self.table),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul(&self, other: &MultiSeries) -> Result<MultiSeries> {
        self.check_same_table(other)?;
        let mut out = Self::zero(&self.table);
        // iterate the smaller operand on the outside
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                out.insert(ma.mul(mb), ca * cb)?;
            }
        }
        Ok(out)
    }

    /// Integer power; negative exponents go through [`MultiSeries::inverse`].
    pub fn pow_int(&self, k: i64) -> Result<MultiSeries> {
        if k < 0 {
            return self.inverse()?.pow_int(-k);
        }
        let mut acc = Self::one(&self.table);
        let mut base = self.clone();
        let mut k = k as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Multiplicative inverse. The minimal term must be a unit: a monomial
    /// in exact Laurent variables only (no truncated or plain-exact part),
    /// with any nonzero rational coefficient.
    pub fn inverse(&self) -> Result<MultiSeries> {
        let (m0, c0) = self
            .terms
            .iter()
            .min_by_key(|(m, _)| {
                let tdeg: i64 = m
                    .0
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| self.table.kind(*i).is_truncated())
                    .map(|(_, &e)| i64::from(e))
                    .sum();
                (tdeg, (*m).clone())
            })
            .ok_or(SeriesError::NonInvertibleLeadingTerm)?;
        for (idx, &e) in m0.0.iter().enumerate() {
            if e != 0 && !matches!(self.table.kind(idx), VarKind::ExactLaurent) {
                return Err(SeriesError::NonInvertibleLeadingTerm);
            }
        }
        let m0 = m0.clone();
        let c0 = c0.clone();

        // a = c0·m0·(1 + x); invert the unit and expand the geometric series
        let mut x = Self::zero(&self.table);
        let m0_inv = m0.inv();
        let inv_c0 = c0.recip();
        for (m, c) in &self.terms {
            if *m == m0 {
                continue;
            }
            x.insert(m.mul(&m0_inv), c * &inv_c0)?;
        }

        let budget = self.table.degree_budget();
        let mut acc = Self::one(&self.table);
        let mut pow = Self::one(&self.table);
        let mut n = 0u64;
        loop {
            n += 1;
            if n > budget {
                return Err(SeriesError::Nonterminating { op: "inverse" });
            }
            pow = pow.mul(&x)?.neg();
            if pow.is_zero() {
                break;
            }
            acc = acc.add(&pow)?;
        }

        let mut out = Self::zero(&self.table);
        for (m, c) in &acc.terms {
            out.insert(m.mul(&m0_inv), c * &inv_c0)?;
        }
        Ok(out)
    }

    /// `exp(a)`; every term of `a` must have positive truncated content so
    /// the exponential terminates.
    pub fn exp(&self) -> Result<MultiSeries> {
        if !self.constant_term().is_zero() {
            return Err(SeriesError::BadConstantTerm { op: "exp" });
        }
        let budget = self.table.degree_budget();
        let mut acc = Self::one(&self.table);
        let mut pow = Self::one(&self.table);
        let mut factorial = BigRational::one();
        let mut n = 0u64;
        loop {
            n += 1;
            if n > budget {
                return Err(SeriesError::Nonterminating { op: "exp" });
            }
            pow = pow.mul(self)?;
            if pow.is_zero() {
                break;
            }
            factorial *= BigRational::from_integer(BigInt::from(n));
            acc = acc.add(&pow.scalar_mul(&factorial.recip()))?;
        }
        Ok(acc)
    }

    /// `log(a)` for `a` with constant term exactly 1.
    pub fn log(&self) -> Result<MultiSeries> {
        if !self.constant_term().is_one() {
            return Err(SeriesError::BadConstantTerm { op: "log" });
        }
        let x = self.sub(&Self::one(&self.table))?;
        let budget = self.table.degree_budget();
        let mut acc = Self::zero(&self.table);
        let mut pow = Self::one(&self.table);
        let mut n = 0u64;
        loop {
            n += 1;
            if n > budget {
                return Err(SeriesError::Nonterminating { op: "log" });
            }
            pow = pow.mul(&x)?;
            if pow.is_zero() {
                break;
            }
            let sign = if n % 2 == 1 { 1 } else { -1 };
            let coeff = BigRational::new(BigInt::from(sign), BigInt::from(n));
            acc = acc.add(&pow.scalar_mul(&coeff))?;
        }
        Ok(acc)
    }

    /// Raise a series with constant term 1 to the symbolic power `c·v` with
    /// `v` an exact variable, via `exp(c·v·log(a))`. Integer powers should
    /// use [`MultiSeries::pow_int`].
    pub fn pow_symbolic(&self, coeff: &BigRational, var: &str) -> Result<MultiSeries> {
        let idx = self.table.index(var)?;
        if self.table.kind(idx).is_truncated() {
            return Err(SeriesError::BadConstantTerm { op: "pow_symbolic" });
        }
        let lg = self.log()?;
        let v = Self::term(&self.table, coeff.clone(), &[(var, 1)])?;
        lg.mul(&v)?.exp()
    }

    /// Exact substitution `var ↦ c · image`, followed by re-truncation.
    ///
    /// When `var` is truncated and the image carries truncated content, the
    /// source cap must cover every source exponent that could still land
    /// inside the caps after substitution; otherwise the result would be
    /// missing terms and the call fails with `CapViolation`.
    pub fn substitute(
        &self,
        var: &str,
        c: &BigRational,
        image: &[(&str, i32)],
    ) -> Result<MultiSeries> {
        let idx = self.table.index(var)?;
        let image_mono = self.table.mono(image)?;

        if let VarKind::Truncated { cap } | VarKind::TruncatedLaurent { cap, .. } =
            self.table.kind(idx)
        {
            // largest source exponent whose image can survive the caps
            let mut reachable: u64 = u64::MAX;
            for (w, &e) in image_mono.0.iter().enumerate() {
                if e > 0 {
                    if let VarKind::Truncated { cap: wcap }
                    | VarKind::TruncatedLaurent { cap: wcap, .. } = self.table.kind(w)
                    {
                        reachable = reachable.min(u64::from(wcap) / e as u64);
                    }
                }
            }
            if reachable > u64::from(cap) {
                return Err(SeriesError::CapViolation { var: var.to_string() });
            }
        }
        let mut out = Self::zero(&self.table);
        for (m, k) in &self.terms {
            let e = m.0[idx];
            if c.is_zero() {
                match e {
                    0 => {
                        out.insert(m.clone(), k.clone())?;
                        continue;
                    }
                    _ if e > 0 => continue,
                    _ => return Err(SeriesError::BadConstantTerm { op: "substitute" }),
                }
            }
            let mut nm = m.clone();
            nm.0[idx] = 0;
            let nm = nm.mul(&image_mono.pow(e));
            out.insert(nm, k * rat_pow(c, e))?;
        }
        Ok(out)
    }

    /// Keep only terms whose `var` exponent lies in `lo..=hi`. This is the
    /// projection used to compare two series on a window in which both are
    /// exactly computed.
    pub fn restrict_var(&self, var: &str, lo: i32, hi: i32) -> Result<MultiSeries> {
        let idx = self.table.index(var)?;
        let mut out = Self::zero(&self.table);
        for (m, c) in &self.terms {
            if m.0[idx] >= lo && m.0[idx] <= hi {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        Ok(out)
    }

    /// First differing monomial in lexicographic order, with both
    /// coefficients; `None` when the series are equal.
    pub fn first_mismatch(&self, other: &MultiSeries) -> Result<Option<Mismatch>> {
        self.check_same_table(other)?;
        let mut keys: Vec<&Monomial> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        for m in keys {
            let a = self.coefficient(m);
            let b = other.coefficient(m);
            if a != b {
                return Ok(Some(Mismatch {
                    monomial: self.describe_monomial(m),
                    lhs: a,
                    rhs: b,
                }));
            }
        }
        Ok(None)
    }

    /// Readable `var → exponent` map for a monomial (zero exponents left out).
    pub fn describe_monomial(&self, m: &Monomial) -> BTreeMap<String, i32> {
        m.0.iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| (self.table.name(i).to_string(), e))
            .collect()
    }
}

/// Witness for a failed comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub monomial: BTreeMap<String, i32>,
    #[serde(serialize_with = "ser_rational")]
    pub lhs: BigRational,
    #[serde(serialize_with = "ser_rational")]
    pub rhs: BigRational,
}

fn ser_rational<S: Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

impl Serialize for MultiSeries {
    /// `{"vars": [...], "terms": [{"exp": [...], "num": "...", "den": "..."}]}`
    /// with numerator and denominator as decimal strings.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct TermRow<'a> {
            exp: &'a [i32],
            num: String,
            den: String,
        }
        struct Terms<'a>(&'a MultiSeries);
        impl Serialize for Terms<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut seq = s.serialize_seq(Some(self.0.terms.len()))?;
                for (m, c) in &self.0.terms {
                    seq.serialize_element(&TermRow {
                        exp: &m.0,
                        num: c.numer().to_string(),
                        den: c.denom().to_string(),
                    })?;
                }
                seq.end()
            }
        }
        let mut map = s.serialize_map(Some(2))?;
        map.serialize_entry("vars", &self.table.names().collect::<Vec<_>>())?;
        map.serialize_entry("terms", &Terms(self))?;
        map.end()
    }
}

impl fmt::Display for MultiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (i, &e) in m.0.iter().enumerate() {
                if e != 0 {
                    write!(f, "·{}^{}", self.table.name(i), e)?;
                }
            }
        }
        Ok(())
    }
}

/// The multiple shifted factorial `(a; Q_1, …, Q_m)_∞`: the product of
/// `1 − a·Q_1^{j_1}⋯Q_m^{j_m}` over all nonnegative `j`. The base is a
/// single term `c·mono`; every direction must carry positive truncated
/// content so that only finitely many factors differ from 1.
pub fn pochhammer_inf(
    table: &Arc<VarTable>,
    base_coeff: &BigRational,
    base: &Monomial,
    dirs: &[Monomial],
) -> Result<MultiSeries> {
    for d in dirs {
        let positive = d.0.iter().enumerate().any(|(i, &e)| e > 0 && table.kind(i).is_truncated());
        let nonneg = d
            .0
            .iter()
            .enumerate()
            .all(|(i, &e)| e >= 0 || !table.kind(i).is_truncated());
        if !(positive && nonneg) {
            return Err(SeriesError::NonterminatingProduct);
        }
    }

    let probe = MultiSeries::zero(table);
    let within = |m: &Monomial| -> bool { matches!(probe.fate(m), Fate::Keep) };

    // depth-first over the direction exponents, pruning once the factor
    // monomial leaves the caps (directions only push it further out)
    fn walk(
        table: &Arc<VarTable>,
        acc: &mut MultiSeries,
        coeff: &BigRational,
        current: &Monomial,
        dirs: &[Monomial],
        within: &dyn Fn(&Monomial) -> bool,
    ) -> Result<()> {
        if !within(current) {
            return Ok(());
        }
        if dirs.is_empty() {
            let mut factor = MultiSeries::one(table);
            factor.insert(current.clone(), -coeff.clone())?;
            *acc = acc.mul(&factor)?;
            return Ok(());
        }
        let mut m = current.clone();
        while within(&m) {
            walk(table, acc, coeff, &m, &dirs[1..], within)?;
            m = m.mul(&dirs[0]);
        }
        Ok(())
    }
    let mut acc = MultiSeries::one(table);
    walk(table, &mut acc, base_coeff, base, dirs, &within)?;
    Ok(acc)
}

/// Convenience: `(a_1, …, a_k; Q_1, …, Q_m)_∞` for several single-term bases.
pub fn pochhammer_multi(
    table: &Arc<VarTable>,
    bases: &[(BigRational, Monomial)],
    dirs: &[Monomial],
) -> Result<MultiSeries> {
    let mut acc = MultiSeries::one(table);
    for (c, m) in bases {
        acc = acc.mul(&pochhammer_inf(table, c, m, dirs)?)?;
    }
    Ok(acc)
}

/// Symbolic or integer exponent for eta-type products.
#[derive(Debug, Clone)]
pub enum EtaExponent {
    Int(i64),
    /// `coeff · var` with `var` an exact variable.
    Linear(BigRational, String),
}

/// `Π_{k≥1} (1 − var^k)^e`, truncated at the cap of `var`.
/// With `e = −z` its coefficients are the classical polynomials in `z`
/// counting weighted partitions.
pub fn eta_power(table: &Arc<VarTable>, var: &str, e: &EtaExponent) -> Result<MultiSeries> {
    let base = table.mono(&[(var, 1)])?;
    let x = pochhammer_inf(table, &BigRational::one(), &base, &[base.clone()])?;
    match e {
        EtaExponent::Int(k) => x.pow_int(*k),
        EtaExponent::Linear(c, v) => x.pow_symbolic(c, v),
    }
}
