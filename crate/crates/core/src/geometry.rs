//! The special Schubert variety `S = {V ∈ Gr_k(C^l) : dim(V ∩ F) ≥ i}` with
//! `dim F = j`, its stratification `Δ_1 ⊂ … ⊂ Δ_{r+1} = S` and the numeric
//! invariants of the resolutions `π_p` and `ξ_p`.
//!
//! Strata are indexed `1..=r+1`, where `Δ_p` is the locus `dim(V ∩ F) ≥ i_p`
//! with `i_p = k - p + 1`.

use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Whether `π` admits non-trivial summands (`c < k`) or is small everywhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    NonSmall,
    AllSmall,
}

impl Regime {
    pub fn as_str(&self) -> &'static str {
        match self {
            Regime::NonSmall => "non-small",
            Regime::AllSmall => "all-small",
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Validated `(i, j, k, l)` with `0 < i < k ≤ j < l` and `k - i < l - j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SchubertInput {
    i: i64,
    j: i64,
    k: i64,
    l: i64,
}

impl SchubertInput {
    pub fn i(&self) -> i64 {
        self.i
    }
    pub fn j(&self) -> i64 {
        self.j
    }
    pub fn k(&self) -> i64 {
        self.k
    }
    pub fn l(&self) -> i64 {
        self.l
    }
    pub fn r(&self) -> i64 {
        self.k - self.i
    }
    pub fn c(&self) -> i64 {
        self.l - self.j
    }

    /// Number of strata, `r + 1`.
    pub fn strata(&self) -> i64 {
        self.r() + 1
    }

    pub fn regime(&self) -> Regime {
        if self.c() < self.k {
            Regime::NonSmall
        } else {
            Regime::AllSmall
        }
    }

    pub fn i_p(&self, p: i64) -> i64 {
        self.k - p + 1
    }

    /// `dim Δ_p`.
    pub fn m_p(&self, p: i64) -> i64 {
        let (j, k, l) = (self.j, self.k, self.l);
        (k + 1 - p) * (j + p - k - 1) + (p - 1) * (l - k)
    }

    pub fn n(&self) -> i64 {
        self.m_p(self.strata())
    }

    /// `dim F_pq = i_p (i_q - i_p)`.
    pub fn k_pq(&self, p: i64, q: i64) -> i64 {
        (p - q) * (self.k + 1 - p)
    }

    pub fn d_pq(&self, p: i64, q: i64) -> i64 {
        (p - q) * (self.c() + 1 - q)
    }

    pub fn delta_pq(&self, p: i64, q: i64) -> i64 {
        (p - q) * (self.k - self.c() + q - p)
    }

    /// `dim G_pq`, the fiber of `ξ_p` over `Δ_q^0`.
    pub fn kbar_pq(&self, p: i64, q: i64) -> i64 {
        (p - q) * (self.c() - p + 1)
    }

    /// `ξ_p` is small over `Δ_q^0`: `2·kbar_pq < m_p - m_q`.
    pub fn xi_small_at(&self, p: i64, q: i64) -> bool {
        let kbar = self.kbar_pq(p, q);
        kbar < self.m_p(p) - self.m_p(q) - kbar
    }

    pub fn xi_small(&self, p: i64) -> bool {
        (1..p).all(|q| self.xi_small_at(p, q))
    }

    pub fn pi_small(&self, p: i64) -> bool {
        (1..p).all(|q| self.delta_pq(p, q) < 0)
    }

    pub fn pi_semismall(&self, p: i64) -> bool {
        (1..p).all(|q| self.delta_pq(p, q) <= 0)
    }

    pub fn check_stratum(&self, p: i64) -> Result<()> {
        if (1..=self.strata()).contains(&p) {
            Ok(())
        } else {
            Err(Error::IndexRange {
                p,
                q: None,
                strata: self.strata(),
            })
        }
    }

    /// Requires `1 ≤ q < p ≤ r+1`.
    pub fn check_pair(&self, p: i64, q: i64) -> Result<()> {
        if 1 <= q && q < p && p <= self.strata() {
            Ok(())
        } else {
            Err(Error::IndexRange {
                p,
                q: Some(q),
                strata: self.strata(),
            })
        }
    }
}

impl fmt::Display for SchubertInput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.i, self.j, self.k, self.l)
    }
}

pub fn validate(i: i64, j: i64, k: i64, l: i64) -> Result<SchubertInput> {
    if i <= 0 {
        return Err(Error::OrderViolation("0 < i violated"));
    }
    if i >= k {
        return Err(Error::OrderViolation("i < k violated"));
    }
    if k > j {
        return Err(Error::OrderViolation("k <= j violated"));
    }
    if j >= l {
        return Err(Error::OrderViolation("j < l violated"));
    }
    let (r, c) = (k - i, l - j);
    if r >= c {
        return Err(Error::RNotLessThanC { r, c });
    }
    Ok(SchubertInput { i, j, k, l })
}

/// Every valid input with `l ≤ max_l`, sorted by `(l, k, j, i)`.
pub fn valid_inputs(max_l: i64) -> Vec<SchubertInput> {
    let mut out = Vec::new();
    for l in 1..=max_l {
        for k in 1..l {
            for j in k..l {
                for i in 1..k {
                    if let Ok(input) = validate(i, j, k, l) {
                        out.push(input);
                    }
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StratumRow {
    pub p: i64,
    pub i_p: i64,
    pub m_p: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumTable {
    pub rows: Vec<StratumRow>,
    pub n: i64,
}

pub fn stratum_invariants(input: &SchubertInput) -> StratumTable {
    let rows = (1..=input.strata())
        .map(|p| StratumRow {
            p,
            i_p: input.i_p(p),
            m_p: input.m_p(p),
        })
        .collect();
    StratumTable { rows, n: input.n() }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairRow {
    pub p: i64,
    pub q: i64,
    pub k: i64,
    pub d: i64,
    pub delta: i64,
    pub kbar: i64,
    pub xi_small: bool,
    pub pi_small: bool,
}

/// Rows for every `q < p`, ordered by `p` then `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairTable {
    pub rows: Vec<PairRow>,
}

impl PairTable {
    pub fn get(&self, p: i64, q: i64) -> Option<&PairRow> {
        self.rows.iter().find(|r| r.p == p && r.q == q)
    }
}

pub fn pair_invariants(input: &SchubertInput) -> PairTable {
    let mut rows = Vec::new();
    for p in 2..=input.strata() {
        for q in 1..p {
            rows.push(PairRow {
                p,
                q,
                k: input.k_pq(p, q),
                d: input.d_pq(p, q),
                delta: input.delta_pq(p, q),
                kbar: input.kbar_pq(p, q),
                xi_small: input.xi_small_at(p, q),
                pi_small: input.delta_pq(p, q) < 0,
            });
        }
    }
    PairTable { rows }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResolutionReport {
    pub p: i64,
    pub xi_small: bool,
    pub pi_small: bool,
    pub pi_semismall: bool,
}

pub fn resolution_smallness(input: &SchubertInput) -> Vec<ResolutionReport> {
    (1..=input.strata())
        .map(|p| ResolutionReport {
            p,
            xi_small: input.xi_small(p),
            pi_small: input.pi_small(p),
            pi_semismall: input.pi_semismall(p),
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FiberKind {
    /// `π^{-1}(x) ≅ Gr_i(C^{i_p})` for `x ∈ Δ_p^0`.
    Fp,
    /// `π_p^{-1}(x) ≅ Gr_{i_p}(C^{i_q})` for `x ∈ Δ_q^0`.
    Fpq,
    /// `ξ_p^{-1}(x) ≅ Gr_{p-q}(C^{c-q+1})` for `x ∈ Δ_q^0`.
    Gpq,
}

/// A fiber `Gr_a(C^b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FiberDescriptor {
    pub kind: FiberKind,
    pub a: i64,
    pub b: i64,
}

impl FiberDescriptor {
    pub fn dim(&self) -> i64 {
        self.a * (self.b - self.a)
    }
}

/// `F_p`, plus `F_pq` and `G_pq` when `q` is given.
pub fn fiber_descriptors(input: &SchubertInput, p: i64, q: Option<i64>) -> Result<Vec<FiberDescriptor>> {
    match q {
        Some(q) => input.check_pair(p, q)?,
        None => input.check_stratum(p)?,
    }
    let mut out = alloc::vec![FiberDescriptor {
        kind: FiberKind::Fp,
        a: input.i(),
        b: input.i_p(p),
    }];
    if let Some(q) = q {
        out.push(FiberDescriptor {
            kind: FiberKind::Fpq,
            a: input.i_p(p),
            b: input.i_p(q),
        });
        out.push(FiberDescriptor {
            kind: FiberKind::Gpq,
            a: p - q,
            b: input.c() - q + 1,
        });
    }
    Ok(out)
}
