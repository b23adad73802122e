//! Hyper-Catalan numbers `C_m` and the series `S = Σ C_m t^m`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::report::{Report, Section};
use crate::series::{enumerate_types, BigCount, TruncatedSeries, TypeVector};

/// `0!, 1!, ..., n!`, built once and shared across a whole table.
#[derive(Debug, Clone)]
pub struct FactorialCache {
    values: Vec<BigUint>,
}

impl FactorialCache {
    pub fn up_to(n: usize) -> Self {
        let mut values = Vec::with_capacity(n + 1);
        values.push(BigUint::one());
        for k in 1..=n {
            let next = &values[k - 1] * BigUint::from(k);
            values.push(next);
        }
        FactorialCache { values }
    }

    pub fn max(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: usize) -> BigUint {
        match self.values.get(n) {
            Some(v) => v.clone(),
            None => {
                let mut acc = self.values.last().cloned().unwrap_or_else(BigUint::one);
                for k in self.values.len()..=n {
                    acc *= BigUint::from(k);
                }
                acc
            }
        }
    }

    /// Numerator and denominator of the closed form for `C_m`.
    pub fn ratio(&self, m: &TypeVector) -> (BigUint, BigUint) {
        let numerator = self.get(m.edge_weight());
        let mut denominator = self.get(m.leaf_count());
        for &mult in m.entries() {
            denominator *= self.get(mult);
        }
        (numerator, denominator)
    }

    pub fn hyper_catalan(&self, m: &TypeVector) -> BigCount {
        let (num, den) = self.ratio(m);
        debug_assert!((&num % &den).is_zero(), "inexact hyper-Catalan division at {m:?}");
        num / den
    }
}

/// `C_m = (m_1 + 2m_2 + ...)! / ((1 + m_2 + 2m_3 + ...)! · m_1! · m_2! ···)`.
pub fn hyper_catalan(m: &TypeVector) -> BigCount {
    FactorialCache::up_to(m.edge_weight().max(m.leaf_count())).hyper_catalan(m)
}

/// Whether the closed-form division leaves no remainder.
pub fn division_is_exact(cache: &FactorialCache, m: &TypeVector) -> bool {
    let (num, den) = cache.ratio(m);
    (num % den).is_zero()
}

/// `C_m` for every monomial up to an edge-weight bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperCatalanTable {
    bound: usize,
    values: BTreeMap<TypeVector, BigCount>,
}

impl HyperCatalanTable {
    pub fn new(bound: usize) -> Self {
        // leaf_count(m) <= edge_weight(m) + 1
        let cache = FactorialCache::up_to(bound + 1);
        let values = enumerate_types(bound)
            .into_par_iter()
            .map(|m| {
                let c = cache.hyper_catalan(&m);
                (m, c)
            })
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        HyperCatalanTable { bound, values }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn get(&self, m: &TypeVector) -> Option<&BigCount> {
        self.values.get(m)
    }

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
}

/// `S` truncated at `bound`.
pub fn series_s(bound: usize) -> TruncatedSeries {
    HyperCatalanTable::new(bound).to_series()
}

/// Checks `S = 1 + Σ_{n>=1} t_n S^n` up to `bound`, coefficient by coefficient.
pub fn verify_functional_equation(bound: usize) -> Report {
    let s = series_s(bound);
    let mut rhs = TruncatedSeries::one(bound);
    let mut power = TruncatedSeries::one(bound);
    for n in 1..=bound {
        power = power.mul(&s).expect("same bound");
        let term = TruncatedSeries::variable(bound, n).mul(&power).expect("same bound");
        rhs = rhs.add(&term).expect("same bound");
    }
    let mut section = Section::new("monomials");
    for m in enumerate_types(bound) {
        section.compare(&m, &s.coeff(&m), &rhs.coeff(&m));
    }
    let mut report = Report::new("functional-eq", bound);
    report.push(section);
    report
}
