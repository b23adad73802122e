//! Exponent vectors and truncated power series in the variables `t_1, t_2, ...`.
//!
//! A monomial `t_1^{m_1} t_2^{m_2} ...` is identified with its exponent vector
//! [`TypeVector`]. Series are graded by *edge weight* `m_1 + 2 m_2 + 3 m_3 + ...`,
//! so `t_n` has weight `n` and every truncation slice is finite.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

/// Arbitrary-precision nonnegative coefficient.
pub type BigCount = BigUint;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("truncation bounds differ: {left} vs {right}")]
    BoundMismatch { left: usize, right: usize },
    #[error("exponent must be positive")]
    ZeroExponent,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid type vector {input:?}: {reason}")]
pub struct TypeParseError {
    pub input: String,
    pub reason: String,
}

/// Exponent vector `m = (m_1, m_2, ...)` with finite support.
///
/// Stored without trailing zeros, so structural equality is equality of
/// sequences. Ordering is the graded order used everywhere in this crate:
/// first by [`edge_weight`](Self::edge_weight), then lexicographically
/// descending on the entries, e.g. `(3) < (1,1) < (0,0,1)`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct TypeVector(Vec<usize>);

impl TypeVector {
    /// Builds a vector from `(m_1, m_2, ...)`, trimming trailing zeros.
    pub fn new(mut entries: Vec<usize>) -> Self {
        while entries.last() == Some(&0) {
            entries.pop();
        }
        TypeVector(entries)
    }

    pub fn zero() -> Self {
        TypeVector(Vec::new())
    }

    /// The unit vector `e_n`.
    ///
    /// # Panics
    /// If `n == 0`; degrees start at one.
    pub fn unit(n: usize) -> Self {
        assert!(n >= 1, "unit vectors are indexed from 1");
        let mut v = vec![0; n];
        v[n - 1] = 1;
        TypeVector(v)
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    /// Multiplicity `m_n` (1-based); zero outside the support.
    pub fn get(&self, n: usize) -> usize {
        if n == 0 {
            return 0;
        }
        self.0.get(n - 1).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest `n` with `m_n > 0`, or 0 for the zero vector.
    pub fn max_degree(&self) -> usize {
        self.0.len()
    }

    /// `Σ n·m_n`: the number of edges of a tree of this type.
    pub fn edge_weight(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &m)| (i + 1) * m).sum()
    }

    /// `1 + Σ (n-1)·m_n`.
    pub fn leaf_count(&self) -> usize {
        1 + self.0.iter().enumerate().map(|(i, &m)| i * m).sum::<usize>()
    }

    /// `1 + Σ n·m_n`.
    pub fn node_count(&self) -> usize {
        1 + self.edge_weight()
    }

    /// `Σ m_n`: internal nodes of a tree, faces of a subdigon.
    pub fn internal_count(&self) -> usize {
        self.0.iter().sum()
    }

    /// Iterates `(n, m_n)` over the support.
    pub fn support(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().filter(|(_, &m)| m > 0).map(|(i, &m)| (i + 1, m))
    }

    pub fn add(&self, other: &TypeVector) -> TypeVector {
        let len = self.0.len().max(other.0.len());
        let entries = (1..=len).map(|n| self.get(n) + other.get(n)).collect();
        TypeVector::new(entries)
    }

    /// `self - other`, or `None` if some entry would go negative.
    pub fn checked_sub(&self, other: &TypeVector) -> Option<TypeVector> {
        let len = self.0.len().max(other.0.len());
        let mut entries = Vec::with_capacity(len);
        for n in 1..=len {
            entries.push(self.get(n).checked_sub(other.get(n))?);
        }
        Some(TypeVector::new(entries))
    }

    /// Entrywise `self <= other`.
    pub fn is_below(&self, other: &TypeVector) -> bool {
        self.0.iter().enumerate().all(|(i, &m)| m <= other.get(i + 1))
    }

    /// Adds `delta` to `m_n`, which must stay nonnegative.
    pub fn bumped(&self, n: usize, delta: isize) -> Option<TypeVector> {
        let mut entries = self.0.clone();
        if entries.len() < n {
            entries.resize(n, 0);
        }
        let slot = &mut entries[n - 1];
        *slot = slot.checked_add_signed(delta)?;
        Some(TypeVector::new(entries))
    }
}

impl Ord for TypeVector {
    fn cmp(&self, other: &Self) -> Ordering {
        // Trimmed vectors compare like zero-padded ones under Vec's lex order.
        self.edge_weight().cmp(&other.edge_weight()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for TypeVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for TypeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TypeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for TypeVector {
    type Err = TypeParseError;

    /// Parses the comma-separated text form; the empty string is `0`.
    /// Trailing zeros are accepted and trimmed.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Ok(TypeVector::zero());
        }
        let entries = trimmed
            .split(',')
            .map(|part| {
                part.trim().parse::<usize>().map_err(|e| TypeParseError {
                    input: s.to_string(),
                    reason: format!("entry {:?}: {e}", part.trim()),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(TypeVector::new(entries))
    }
}

impl From<Vec<usize>> for TypeVector {
    fn from(entries: Vec<usize>) -> Self {
        TypeVector::new(entries)
    }
}

/// All `m` with `edge_weight(m) <= max_weight`, in graded order.
pub fn enumerate_types(max_weight: usize) -> Vec<TypeVector> {
    let mut out = Vec::new();
    for w in 0..=max_weight {
        out.extend(types_of_weight(w));
    }
    out
}

/// All `m` with `edge_weight(m) == weight`, in graded order.
pub fn types_of_weight(weight: usize) -> Vec<TypeVector> {
    // Partitions of `weight` written as part multiplicities. Choosing the
    // multiplicity of the largest part first, from high to low, yields the
    // descending lexicographic order on reversed entries; sort afterwards so
    // the result matches `Ord` regardless of generation order.
    fn go(remaining: usize, part: usize, entries: &mut Vec<usize>, out: &mut Vec<TypeVector>) {
        if part == 0 {
            if remaining == 0 {
                out.push(TypeVector::new(entries.clone()));
            }
            return;
        }
        for mult in 0..=remaining / part {
            entries[part - 1] = mult;
            go(remaining - mult * part, part - 1, entries, out);
        }
        entries[part - 1] = 0;
    }
    let mut out = Vec::new();
    let mut entries = vec![0; weight];
    go(weight, weight, &mut entries, &mut out);
    out.sort();
    out
}

/// All ordered ways to write `total = parts[0] + ... + parts[k-1]` with
/// nonnegative vectors.
pub fn ordered_splits(total: &TypeVector, k: usize) -> Vec<Vec<TypeVector>> {
    fn sub_vectors(bound: &TypeVector) -> Vec<TypeVector> {
        let mut acc = vec![Vec::new()];
        for n in 1..=bound.max_degree() {
            let mut next = Vec::new();
            for prefix in &acc {
                for v in 0..=bound.get(n) {
                    let mut p: Vec<usize> = prefix.clone();
                    p.push(v);
                    next.push(p);
                }
            }
            acc = next;
        }
        acc.into_iter().map(TypeVector::new).collect()
    }
    fn go(rest: &TypeVector, k: usize, prefix: &mut Vec<TypeVector>, out: &mut Vec<Vec<TypeVector>>) {
        if k == 1 {
            prefix.push(rest.clone());
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        let mut heads = sub_vectors(rest);
        heads.sort();
        for head in heads {
            let tail = rest.checked_sub(&head).expect("head is below rest");
            prefix.push(head);
            go(&tail, k - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if k == 0 {
        if total.is_zero() {
            out.push(Vec::new());
        }
        return out;
    }
    go(total, k, &mut Vec::new(), &mut out);
    out
}

/// A power series truncated at edge weight `bound`.
///
/// Zero coefficients are never stored, so two series are equal exactly when
/// their maps are.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    bound: usize,
    coeffs: BTreeMap<TypeVector, BigCount>,
}

impl TruncatedSeries {
    pub fn zero(bound: usize) -> Self {
        TruncatedSeries { bound, coeffs: BTreeMap::new() }
    }

    pub fn one(bound: usize) -> Self {
        Self::monomial(bound, TypeVector::zero(), BigCount::one())
    }

    /// `coeff · t^m`, or zero if `m` lies above the bound.
    pub fn monomial(bound: usize, m: TypeVector, coeff: BigCount) -> Self {
        let mut s = Self::zero(bound);
        s.set(m, coeff);
        s
    }

    /// `t_n` (zero if `n > bound`).
    pub fn variable(bound: usize, n: usize) -> Self {
        Self::monomial(bound, TypeVector::unit(n), BigCount::one())
    }

    /// `t_1 + t_2 + ... + t_bound`.
    pub fn variable_sum(bound: usize) -> Self {
        let mut s = Self::zero(bound);
        for n in 1..=bound {
            s.set(TypeVector::unit(n), BigCount::one());
        }
        s
    }

    pub fn from_terms<I>(bound: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (TypeVector, BigCount)>,
    {
        let mut s = Self::zero(bound);
        for (m, c) in terms {
            let sum = s.coeff(&m) + c;
            s.set(m, sum);
        }
        s
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn coeff(&self, m: &TypeVector) -> BigCount {
        self.coeffs.get(m).cloned().unwrap_or_default()
    }

    /// Sets a coefficient; terms above the bound are dropped.
    pub fn set(&mut self, m: TypeVector, coeff: BigCount) {
        if m.edge_weight() > self.bound {
            return;
        }
        if coeff.is_zero() {
            self.coeffs.remove(&m);
        } else {
            self.coeffs.insert(m, coeff);
        }
    }

    /// Nonzero terms in graded order.
    pub fn terms(&self) -> impl Iterator<Item = (&TypeVector, &BigCount)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn check_bound(&self, other: &Self) -> Result<(), SeriesError> {
        if self.bound != other.bound {
            return Err(SeriesError::BoundMismatch { left: self.bound, right: other.bound });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_bound(other)?;
        let mut out = self.clone();
        for (m, c) in &other.coeffs {
            *out.coeffs.entry(m.clone()).or_default() += c;
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_bound(other)?;
        let mut out: BTreeMap<TypeVector, BigCount> = BTreeMap::new();
        for (ma, ca) in &self.coeffs {
            let wa = ma.edge_weight();
            for (mb, cb) in &other.coeffs {
                if wa + mb.edge_weight() > self.bound {
                    continue;
                }
                *out.entry(ma.add(mb)).or_default() += ca * cb;
            }
        }
        Ok(TruncatedSeries { bound: self.bound, coeffs: out })
    }

    pub fn pow(&self, k: usize) -> Result<Self, SeriesError> {
        if k == 0 {
            return Err(SeriesError::ZeroExponent);
        }
        let mut result: Option<Self> = None;
        let mut base = self.clone();
        let mut e = k;
        loop {
            if e & 1 == 1 {
                result = Some(match result {
                    None => base.clone(),
                    Some(r) => r.mul(&base)?,
                });
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.mul(&base)?;
        }
        Ok(result.expect("k >= 1"))
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0 + O(w^{})", self.bound + 1);
        }
        let mut first = true;
        for (m, c) in &self.coeffs {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let mono: Vec<String> = m
                .support()
                .map(|(n, e)| if e == 1 { format!("t{n}") } else { format!("t{n}^{e}") })
                .collect();
            match (mono.is_empty(), c.is_one()) {
                (true, _) => write!(f, "{c}")?,
                (false, true) => write!(f, "{}", mono.join("*"))?,
                (false, false) => write!(f, "{c}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}
