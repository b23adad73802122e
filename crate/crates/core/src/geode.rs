//! The Geode series `G`, defined by `S = 1 + (t_1 + t_2 + ...)·G`.
//!
//! Reading off the coefficient of `t^{k+e_1}` on both sides gives
//!
//! ```text
//! G_k = C_{k+e_1} - Σ_{n>=2, (k+e_1)_n >= 1} G_{k+e_1-e_n}
//! ```
//!
//! where every `G` on the right has edge weight below `edge_weight(k)`.
//! Equations for monomials with `m_1 = 0` are not consumed by the recurrence
//! and are checked separately.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;
use thiserror::Error;

use crate::hypercatalan::{series_s, FactorialCache};
use crate::report::{Report, Section};
use crate::series::{enumerate_types, BigCount, TruncatedSeries, TypeVector};
use crate::subdigons::count_marked_subdigons;
use crate::trees::count_marked_trees;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeodeError {
    #[error("negative Geode coefficient {value} at ({monomial})")]
    Negative { monomial: TypeVector, value: BigInt },
    #[error("processing order reaches ({monomial}) before its dependency ({dependency})")]
    OrderNotWellFounded { monomial: TypeVector, dependency: TypeVector },
    #[error("processing order does not list every monomial up to weight {0} exactly once")]
    IncompleteOrder(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeodeTable {
    bound: usize,
    values: BTreeMap<TypeVector, BigCount>,
}

impl GeodeTable {
    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn get(&self, m: &TypeVector) -> Option<&BigCount> {
        self.values.get(m)
    }

    /// Coefficients in graded order, zeros included.
    pub fn iter(&self) -> impl Iterator<Item = (&TypeVector, &BigCount)> {
        self.values.iter()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn to_series(&self) -> TruncatedSeries {
        TruncatedSeries::from_terms(self.bound, self.values.iter().map(|(m, c)| (m.clone(), c.clone())))
    }

    /// Solves the recurrence visiting monomials in `order`, which must list
    /// each monomial of weight `<= bound` once and place every dependency
    /// before its dependents.
    pub fn solve_in_order(bound: usize, order: &[TypeVector]) -> Result<Self, GeodeError> {
        let expected = enumerate_types(bound);
        if order.len() != expected.len() {
            return Err(GeodeError::IncompleteOrder(bound));
        }
        let cache = FactorialCache::up_to(bound + 2);
        let mut values: BTreeMap<TypeVector, BigCount> = BTreeMap::new();
        for k in order {
            if k.edge_weight() > bound || values.contains_key(k) {
                return Err(GeodeError::IncompleteOrder(bound));
            }
            let value = coefficient(&cache, k, |dep| {
                values.get(dep).cloned().ok_or_else(|| GeodeError::OrderNotWellFounded {
                    monomial: k.clone(),
                    dependency: dep.clone(),
                })
            })?;
            values.insert(k.clone(), value);
        }
        Ok(GeodeTable { bound, values })
    }
}

/// One step of the recurrence, with earlier coefficients supplied by `lookup`.
fn coefficient<F>(cache: &FactorialCache, k: &TypeVector, mut lookup: F) -> Result<BigCount, GeodeError>
where
    F: FnMut(&TypeVector) -> Result<BigCount, GeodeError>,
{
    let target = k.bumped(1, 1).expect("incrementing m_1");
    let mut acc = BigInt::from(cache.hyper_catalan(&target));
    for (n, _) in target.support().filter(|&(n, _)| n >= 2) {
        let dep = target.bumped(n, -1).expect("m_n >= 1");
        acc -= BigInt::from(lookup(&dep)?);
    }
    if acc.is_negative() {
        return Err(GeodeError::Negative { monomial: k.clone(), value: acc });
    }
    Ok(acc.to_biguint().expect("nonnegative"))
}

/// `G` up to edge weight `bound`, processed grade by grade. Coefficients
/// within one grade depend only on lower grades and are computed in parallel.
pub fn series_g(bound: usize) -> Result<GeodeTable, GeodeError> {
    let cache = FactorialCache::up_to(bound + 2);
    let mut values: BTreeMap<TypeVector, BigCount> = BTreeMap::new();
    for w in 0..=bound {
        let grade: Vec<TypeVector> = crate::series::types_of_weight(w);
        let computed = grade
            .par_iter()
            .map(|k| {
                let v = coefficient(&cache, k, |dep| {
                    Ok(values.get(dep).cloned().expect("lower grades are complete"))
                })?;
                Ok((k.clone(), v))
            })
            .collect::<Result<Vec<_>, GeodeError>>()?;
        values.extend(computed);
    }
    Ok(GeodeTable { bound, values })
}

/// Checks `1 + (t_1 + ... + t_W)·G = S` at every monomial of weight `<= W`.
///
/// Sections: the constant term, the `m_1 >= 1` equations that defined `G`,
/// and the overdetermined `m_1 = 0` equations.
pub fn verify_factorization(bound: usize) -> Result<Report, GeodeError> {
    let g = series_g(bound)?.to_series();
    let s = series_s(bound);
    let rhs = TruncatedSeries::one(bound)
        .add(&TruncatedSeries::variable_sum(bound).mul(&g).expect("same bound"))
        .expect("same bound");
    let mut constant = Section::new("constant");
    let mut recurrence = Section::new("m1>=1 (recurrence)");
    let mut consistency = Section::new("m1=0 (consistency)");
    for m in enumerate_types(bound) {
        let section = if m.is_zero() {
            &mut constant
        } else if m.get(1) >= 1 {
            &mut recurrence
        } else {
            &mut consistency
        };
        section.compare(&m, &s.coeff(&m), &rhs.coeff(&m));
    }
    let mut report = Report::new("factorization", bound);
    report.push(constant);
    report.push(recurrence);
    report.push(consistency);
    Ok(report)
}

/// Compares Geode coefficients with a combinatorial count, in parallel.
fn compare_with_count<F>(check: &str, label: &str, bound: usize, count: F) -> Result<Report, GeodeError>
where
    F: Fn(&TypeVector) -> BigCount + Sync,
{
    let g = series_g(bound)?;
    let types = enumerate_types(bound);
    let counts: Vec<BigCount> = types.par_iter().map(&count).collect();
    let mut section = Section::new(label);
    for (m, c) in types.iter().zip(&counts) {
        let gm = g.get(m).cloned().unwrap_or_default();
        section.compare(m, &gm, c);
    }
    let mut report = Report::new(check, bound);
    report.push(section);
    Ok(report)
}

/// `G_m = L_m`, the initial-leaf count over ordered trees of type `m`.
pub fn verify_theorem_g(bound: usize) -> Result<Report, GeodeError> {
    compare_with_count("theorem-g", "G_m vs marked trees", bound, count_marked_trees)
}

/// `G_m = |S̄_m|`, the marked-subdigon count.
pub fn verify_lemma_g(bound: usize) -> Result<Report, GeodeError> {
    compare_with_count("lemma-g", "G_m vs marked subdigons", bound, count_marked_subdigons)
}

/// Sum of Geode coefficients over one edge-weight grade.
pub fn grade_sum(table: &GeodeTable, weight: usize) -> BigCount {
    table.iter().filter(|(m, _)| m.edge_weight() == weight).map(|(_, c)| c.clone()).sum()
}
