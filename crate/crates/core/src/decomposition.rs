//! Decomposition data for the resolutions `π_p : Δ̃_p → Δ_p`.
//!
//! For `q < p` the fiber `F_pq = Gr_{i_p}(C^{i_q})` has cohomology `A_pq`,
//! indexed by partitions in a `(p-q) × i_p` rectangle. Its subspace `D_pq`
//! (partitions in the `(p-q) × (k-c+q-p)` rectangle, zero when `δ_pq < 0`)
//! carries the multiplicities of the summand supported on `Δ_q`; `E_pq` is the
//! image of `D_pq` under cup product with the top Chern class, realized on
//! partitions by adding `c+1-q` to each of the `p-q` rows. `B_pq` indexes the
//! stalk of `IC_{Δ_p}` along `Δ_q^0`.
//!
//! All polynomials are in `t` with `deg t = 1` in cohomological degree, so a
//! class `σ_λ` contributes `t^{2|λ|}`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::geometry::SchubertInput;
use crate::matrix::matrix_rank_exact;
use crate::partition::{add_to_parts, classify_stratum, gysin_compose, EnumLimit, Partition, Rectangle};
use crate::poly::{grassmannian_poincare, LaurentPoly};
use crate::schur::{lefschetz_power_matrix, RingSpec};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpaceKind {
    A,
    B,
    D,
    E,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GradedSpaceId {
    pub kind: SpaceKind,
    pub p: i64,
    pub q: i64,
}

impl GradedSpaceId {
    pub fn new(kind: SpaceKind, p: i64, q: i64) -> Self {
        Self { kind, p, q }
    }
}

/// A graded space given by a basis of partitions: every partition of `rect`
/// with `raise` added to each of its `rect.rows` rows. `rect = None` is the
/// zero space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GradedSpace {
    pub id: GradedSpaceId,
    pub rect: Option<Rectangle>,
    pub raise: usize,
}

impl GradedSpace {
    pub fn basis(&self, limit: EnumLimit) -> Result<Vec<Partition>> {
        let Some(rect) = self.rect else {
            return Ok(Vec::new());
        };
        limit.check(rect.area())?;
        (0..=rect.area())
            .flat_map(|w| rect.partitions_of_weight(w))
            .map(|lambda| add_to_parts(&lambda, rect.rows, self.raise))
            .collect()
    }

    /// `Σ t^{2|ν|}` over the basis.
    pub fn poincare_by_basis(&self, limit: EnumLimit) -> Result<LaurentPoly> {
        Ok(LaurentPoly::from_pairs(
            self.basis(limit)?.iter().map(|nu| (2 * nu.weight() as i64, 1)),
        ))
    }
}

/// Columns of the stalk rectangle of `IC_{Δ_p}`.
///
/// The stalk is the cohomology of the fiber of a small resolution: `G_pq`
/// (width `c-p+1`) when `c ≤ k`, `F_pq` (width `i_p = k-p+1`) when `k ≤ c`;
/// both cases agree at `c = k`.
fn stalk_cols(input: &SchubertInput, p: i64) -> i64 {
    input.c().min(input.k()) - p + 1
}

fn rect(rows: i64, cols: i64) -> Option<Rectangle> {
    (rows >= 0 && cols >= 0).then(|| Rectangle::new(rows as usize, cols as usize))
}

pub fn space_rectangle(id: GradedSpaceId, input: &SchubertInput) -> Result<GradedSpace> {
    let GradedSpaceId { kind, p, q } = id;
    input.check_pair(p, q)?;
    let rows = p - q;
    let d_cols = input.k() - input.c() + q - p;
    let (rect, raise) = match kind {
        SpaceKind::A => (rect(rows, input.i_p(p)), 0),
        SpaceKind::B => (rect(rows, stalk_cols(input, p)), 0),
        SpaceKind::D => (rect(rows, d_cols), 0),
        SpaceKind::E => (rect(rows, d_cols), (input.c() + 1 - q) as usize),
    };
    Ok(GradedSpace { id, rect, raise })
}

/// `f_pq(t)`: Poincaré polynomial of `Gr_{p-q}(C^{k-c})`, i.e. of `D_pq`.
pub fn f_poly(input: &SchubertInput, p: i64, q: i64) -> LaurentPoly {
    grassmannian_poincare(p - q, input.k() - input.c())
}

/// `B_pq` Poincaré polynomial; also defined for `q = p` (the point).
fn b_poly(input: &SchubertInput, p: i64, q: i64) -> LaurentPoly {
    grassmannian_poincare(p - q, stalk_cols(input, p) + p - q)
}

pub fn space_poincare(id: GradedSpaceId, input: &SchubertInput) -> Result<LaurentPoly> {
    let GradedSpaceId { kind, p, q } = id;
    input.check_pair(p, q)?;
    Ok(match kind {
        SpaceKind::A => grassmannian_poincare(p - q, input.i_p(q)),
        SpaceKind::B => b_poly(input, p, q),
        SpaceKind::D => f_poly(input, p, q),
        SpaceKind::E => f_poly(input, p, q).shift(2 * input.d_pq(p, q)),
    })
}

/// `H_p(t)`: `Δ̃_p` is a `Gr_{p-1}(C^{l-i_p})`-bundle over `Gr_{i_p}(C^j)`.
pub fn h_poly(input: &SchubertInput, p: i64) -> Result<LaurentPoly> {
    input.check_stratum(p)?;
    let ip = input.i_p(p);
    Ok(&grassmannian_poincare(ip, input.j()) * &grassmannian_poincare(p - 1, input.l() - ip))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairPolys {
    pub p: i64,
    pub q: i64,
    pub f: LaurentPoly,
    /// `g_pq = t^{2 d_pq} f_pq`.
    pub g: LaurentPoly,
    /// `P_pq = g_pq · I_q`, the Poincaré polynomial of the summand on `Δ_q`.
    pub contribution: LaurentPoly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IhTable {
    /// `H_p`, indexed by `p - 1`.
    pub h: Vec<LaurentPoly>,
    /// `I_p`, indexed by `p - 1`.
    pub ih: Vec<LaurentPoly>,
    /// One entry per `q < p`, ordered by `p` then `q`.
    pub pairs: Vec<PairPolys>,
}

impl IhTable {
    pub fn ih(&self, p: i64) -> &LaurentPoly {
        &self.ih[(p - 1) as usize]
    }

    pub fn h(&self, p: i64) -> &LaurentPoly {
        &self.h[(p - 1) as usize]
    }

    pub fn pair(&self, p: i64, q: i64) -> Option<&PairPolys> {
        self.pairs.iter().find(|x| x.p == p && x.q == q)
    }

    fn with_pairs(input: &SchubertInput, h: Vec<LaurentPoly>, ih: Vec<LaurentPoly>) -> Self {
        let mut pairs = Vec::new();
        for p in 2..=input.strata() {
            for q in 1..p {
                let f = f_poly(input, p, q);
                let g = f.shift(2 * input.d_pq(p, q));
                let contribution = &g * &ih[(q - 1) as usize];
                pairs.push(PairPolys { p, q, f, g, contribution });
            }
        }
        Self { h, ih, pairs }
    }
}

fn all_h(input: &SchubertInput) -> Vec<LaurentPoly> {
    (1..=input.strata())
        .map(|p| h_poly(input, p).expect("stratum in range"))
        .collect()
}

/// `I_1 = H_1`, `I_p = H_p - Σ_{q<p} t^{2d_pq} f_pq I_q`.
pub fn ih_recursion(input: &SchubertInput) -> IhTable {
    let h = all_h(input);
    let mut ih: Vec<LaurentPoly> = Vec::with_capacity(h.len());
    for p in 1..=input.strata() {
        let mut acc = h[(p - 1) as usize].clone();
        for q in 1..p {
            let g = f_poly(input, p, q).shift(2 * input.d_pq(p, q));
            acc -= &(&g * &ih[(q - 1) as usize]);
        }
        ih.push(acc);
    }
    IhTable::with_pairs(input, h, ih)
}

/// `I = Σ_{n=0}^{r} (-1)^n N^n H` with `N` the strictly triangular matrix of
/// `g_pq`; `N^{r+1} = 0`, so this inverts `1 + N` exactly.
pub fn ih_matrix(input: &SchubertInput) -> IhTable {
    let h = all_h(input);
    let size = h.len();
    let mut n = alloc::vec![alloc::vec![LaurentPoly::zero(); size]; size];
    for p in 2..=size as i64 {
        for q in 1..p {
            n[(p - 1) as usize][(q - 1) as usize] = f_poly(input, p, q).shift(2 * input.d_pq(p, q));
        }
    }
    let mut term = h.clone();
    let mut acc = h.clone();
    for power in 1..size {
        term = (0..size)
            .map(|row| {
                let mut s = LaurentPoly::zero();
                for (col, entry) in n[row].iter().enumerate() {
                    if !entry.is_zero() {
                        s += &(entry * &term[col]);
                    }
                }
                s
            })
            .collect();
        for (a, t) in acc.iter_mut().zip(&term) {
            if power % 2 == 1 {
                *a -= t;
            } else {
                *a += t;
            }
        }
    }
    IhTable::with_pairs(input, h, acc)
}

/// `IH*(Δ_p)` as the cohomology of a small resolution.
///
/// When `ξ_p` is small its source `{(U, V) : V + F ⊆ U}` fibers over
/// `{U ⊇ F} ≅ Gr_{p-1}(C^c)` with fiber `Gr_k(C^{k+j-i_p})`. Otherwise (only
/// when `k < c`) `π_p` is small and its source gives `H_p`.
pub fn small_resolution_oracle(input: &SchubertInput, p: i64) -> Result<LaurentPoly> {
    input.check_stratum(p)?;
    if input.xi_small(p) {
        let k = input.k();
        Ok(&grassmannian_poincare(p - 1, input.c()) * &grassmannian_poincare(k, k + input.j() - input.i_p(p)))
    } else if input.pi_small(p) {
        h_poly(input, p)
    } else {
        Err(Error::SmallnessViolated { p })
    }
}

/// Poincaré polynomial of the stalk of `IC_{Δ_p}[-m_p]` along `Δ_q^0`.
pub fn stalk_table(input: &SchubertInput, p: i64, q: i64) -> Result<LaurentPoly> {
    space_poincare(GradedSpaceId::new(SpaceKind::B, p, q), input)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SummandRecord {
    pub q: i64,
    pub delta: i64,
    /// Perverse shift `i` → `dim D_pq^{δ_pq + i}`; zero entries omitted.
    pub mults: BTreeMap<i64, BigInt>,
}

/// Summands of `Rπ_{p*} Q[m_p]`: `IC_{Δ_p}` once at shift 0 and, for each
/// `q < p`, `IC_{Δ_q}` with the listed multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SummandTable {
    pub p: i64,
    /// Ordered by ascending `q`; includes records with no multiplicities.
    pub summands: Vec<SummandRecord>,
}

impl SummandTable {
    pub fn is_trivial(&self) -> bool {
        self.summands.iter().all(|s| s.mults.is_empty())
    }
}

pub fn summand_table(input: &SchubertInput, p: i64) -> Result<SummandTable> {
    input.check_stratum(p)?;
    let summands = (1..p)
        .map(|q| {
            let delta = input.delta_pq(p, q);
            let f = f_poly(input, p, q);
            let mults = (-delta.abs()..=delta.abs())
                .filter_map(|i| {
                    let m = f.coeff(delta + i);
                    (!m.is_zero()).then_some((i, m))
                })
                .collect();
            SummandRecord { q, delta, mults }
        })
        .collect();
    Ok(SummandTable { p, summands })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Support {
    /// `IC_S` itself.
    Whole,
    Stratum(i64),
}

/// Perverse cohomology of `Rπ_* Q[n]` for `π = π_{r+1}`: shift `i` →
/// `(support, multiplicity)`. `IC_S` sits at `i = 0`; shifts with no summand
/// are absent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerverseTable {
    pub rows: BTreeMap<i64, Vec<(Support, BigInt)>>,
}

impl PerverseTable {
    pub fn is_symmetric(&self) -> bool {
        self.rows.iter().all(|(i, row)| self.rows.get(&-i) == Some(row))
    }
}

pub fn perverse_table(input: &SchubertInput) -> PerverseTable {
    let top = input.strata();
    let table = summand_table(input, top).expect("top stratum in range");
    let mut rows: BTreeMap<i64, Vec<(Support, BigInt)>> = BTreeMap::new();
    rows.entry(0).or_default().push((Support::Whole, BigInt::one()));
    for rec in &table.summands {
        for (&i, m) in &rec.mults {
            rows.entry(i).or_default().push((Support::Stratum(rec.q), m.clone()));
        }
    }
    PerverseTable { rows }
}

/// Whether `σ_ν ∈ A_pq` lies in `E_pq`: exactly `p-q` parts, all `≥ c+1-q`.
pub fn in_gysin_image(nu: &Partition, input: &SchubertInput, p: i64, q: i64) -> Result<bool> {
    let a = space_rectangle(GradedSpaceId::new(SpaceKind::A, p, q), input)?;
    let a_rect = a.rect.expect("A rectangle is never empty");
    if !a_rect.contains(nu) {
        return Err(Error::OutsideRectangle {
            partition: nu.clone(),
            rows: a_rect.rows,
            cols: a_rect.cols,
        });
    }
    let threshold = input.c() + 1 - q;
    let rows = (p - q) as usize;
    Ok(nu.len() == rows && nu.parts().iter().all(|&v| v as i64 >= threshold))
}

/// `ν = gysin_compose(μ, λ, p-q, c+1-q)` with `μ ∈ D_pq`, `λ ∈ B_ql`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassMember {
    pub nu: Partition,
    pub mu: Partition,
    pub lambda: Partition,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalDecomposition {
    pub p: i64,
    pub l: i64,
    /// Class `q ∈ [l, p]` → members in basis order.
    pub classes: BTreeMap<i64, Vec<ClassMember>>,
}

impl LocalDecomposition {
    pub fn class_sizes(&self) -> BTreeMap<i64, usize> {
        self.classes.iter().map(|(&q, v)| (q, v.len())).collect()
    }
}

/// Splits the `A_pl` basis into classes `q ∈ [l, p]`, inverts the Gysin
/// partition map on each class, and checks the graded count identity
/// `[A_pl] = Σ_q t^{2d_pq} f_pq [B_ql]` (with `d_pp = 0`, `f_pp = 1`,
/// `[B_ll] = 1`), class by class.
pub fn local_decomposition(input: &SchubertInput, p: i64, l: i64, limit: EnumLimit) -> Result<LocalDecomposition> {
    input.check_pair(p, l)?;
    let c = input.c();
    let a = space_rectangle(GradedSpaceId::new(SpaceKind::A, p, l), input)?;
    let mut classes: BTreeMap<i64, Vec<ClassMember>> = (l..=p).map(|q| (q, Vec::new())).collect();
    for nu in a.basis(limit)? {
        let q = classify_stratum(&nu, p, l, c)?;
        let head = (p - q) as usize;
        let shift = (c + 1 - q) as usize;
        let padded = nu.padded((p - l) as usize)?;
        let mu = Partition::new(padded[..head].iter().map(|&v| v - shift).collect())?;
        let lambda = Partition::new(padded[head..].to_vec())?;
        let d_fits = q == p || {
            let d = space_rectangle(GradedSpaceId::new(SpaceKind::D, p, q), input)?;
            d.rect.is_some_and(|r| r.contains(&mu))
        };
        let b_fits = q == l || rect(q - l, stalk_cols(input, q)).is_some_and(|r| r.contains(&lambda));
        if !d_fits || !b_fits {
            return Err(Error::Classification(format!(
                "({nu}) in class {q} splits as ({mu}) | ({lambda}) outside D_{p}{q} x B_{q}{l}"
            )));
        }
        let back = gysin_compose(&mu, &lambda, head, shift)?;
        if back != nu {
            return Err(Error::Classification(format!(
                "gysin_compose(({mu}), ({lambda})) = ({back}) != ({nu})"
            )));
        }
        classes.get_mut(&q).expect("q in range").push(ClassMember { nu, mu, lambda });
    }

    // class p must be exactly the B_pl basis
    let b_pl = space_rectangle(GradedSpaceId::new(SpaceKind::B, p, l), input)?.basis(limit)?;
    let class_p: Vec<_> = classes[&p].iter().map(|m| m.nu.clone()).collect();
    if class_p != b_pl {
        return Err(Error::Classification(format!(
            "class {p} has {} members, B_{p}{l} has {}",
            class_p.len(),
            b_pl.len()
        )));
    }

    let mut total = LaurentPoly::zero();
    for (&q, members) in &classes {
        let expected = if q == p {
            b_poly(input, p, l)
        } else {
            let g = f_poly(input, p, q).shift(2 * input.d_pq(p, q));
            let b = if q == l { LaurentPoly::one() } else { b_poly(input, q, l) };
            &g * &b
        };
        let got = LaurentPoly::from_pairs(members.iter().map(|m| (2 * m.nu.weight() as i64, 1)));
        if got != expected {
            return Err(Error::Classification(format!(
                "class {q} of A_{p}{l}: counted {got}, expected {expected}"
            )));
        }
        total += &expected;
    }
    let whole = space_poincare(GradedSpaceId::new(SpaceKind::A, p, l), input)?;
    if total != whole {
        return Err(Error::Classification(format!(
            "A_{p}{l} = {whole} but classes sum to {total}"
        )));
    }
    Ok(LocalDecomposition { p, l, classes })
}

/// Hard Lefschetz on `D_pq ≅ H*(Gr_{p-q}(C^{k-c}))`: `σ_1^i` is an isomorphism
/// from degree `δ-i` to `δ+i` for every `0 ≤ i ≤ δ`.
pub fn hard_lefschetz_verify(input: &SchubertInput, p: i64, q: i64) -> Result<bool> {
    input.check_pair(p, q)?;
    let delta = input.delta_pq(p, q);
    if delta < 0 {
        return Err(Error::Precondition(format!("delta_{p}{q} = {delta} < 0")));
    }
    let ring = RingSpec::new((p - q) as usize, (input.k() - input.c() + q - p) as usize);
    Ok((0..=delta as usize).all(|i| {
        let m = lefschetz_power_matrix(ring, i);
        m.is_square() && matrix_rank_exact(&m.entries) == m.size()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::validate;
    use alloc::vec;

    fn worked() -> SchubertInput {
        validate(2, 5, 4, 8).unwrap()
    }

    fn dense(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_dense(2, c)
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn id(kind: SpaceKind, p: i64, q: i64) -> GradedSpaceId {
        GradedSpaceId::new(kind, p, q)
    }

    #[test]
    fn rectangles() {
        let s = worked();
        let d32 = space_rectangle(id(SpaceKind::D, 3, 2), &s).unwrap();
        assert_eq!(d32.rect, Some(Rectangle::new(1, 0)));
        assert_eq!(d32.basis(EnumLimit::DEFAULT).unwrap(), vec![p(&[])]);
        assert_eq!(space_rectangle(id(SpaceKind::D, 3, 1), &s).unwrap().rect, None);
        assert_eq!(space_rectangle(id(SpaceKind::B, 3, 1), &s).unwrap().rect, Some(Rectangle::new(2, 1)));
        let e32 = space_rectangle(id(SpaceKind::E, 3, 2), &s).unwrap();
        assert_eq!(e32.basis(EnumLimit::DEFAULT).unwrap(), vec![p(&[2])]);
        assert!(space_rectangle(id(SpaceKind::A, 2, 3), &s).is_err());
    }

    #[test]
    fn space_polys() {
        let s = worked();
        assert_eq!(space_poincare(id(SpaceKind::D, 3, 2), &s).unwrap(), LaurentPoly::one());
        assert!(space_poincare(id(SpaceKind::D, 3, 1), &s).unwrap().is_zero());
        assert_eq!(space_poincare(id(SpaceKind::B, 2, 1), &s).unwrap(), dense(&[1, 1, 1]));
        assert_eq!(space_poincare(id(SpaceKind::E, 3, 2), &s).unwrap(), LaurentPoly::monomial(4, 1));
    }

    #[test]
    fn h_polys() {
        let s = worked();
        assert_eq!(h_poly(&s, 1).unwrap(), dense(&[1, 1, 1, 1, 1]));
        let h2 = h_poly(&s, 2).unwrap();
        assert_eq!(h2, dense(&[1, 2, 4, 6, 8, 8, 8, 6, 4, 2, 1]));
        assert_eq!(h2.eval_at_one(), BigInt::from(50));
        assert!(h_poly(&s, 0).is_err());
    }

    #[test]
    fn ih_worked_example() {
        let s = worked();
        let t = ih_recursion(&s);
        assert_eq!(t.ih(1), &dense(&[1, 1, 1, 1, 1]));
        assert_eq!(t.ih(2), &dense(&[1, 2, 4, 5, 7, 7, 7, 5, 4, 2, 1]));
        assert_eq!(t.ih(2).eval_at_one(), BigInt::from(45));
        assert_eq!(t.ih(3).eval_at_one(), BigInt::from(105));
        assert_eq!(ih_matrix(&s), t);
        for p in 1..=3 {
            assert_eq!(&small_resolution_oracle(&s, p).unwrap(), t.ih(p));
        }
    }

    #[test]
    fn ih_matrix_square_term() {
        // g_32 g_21 H_1 = t^4 · t^6 · H_1 enters I_3 with sign +
        let s = worked();
        let t = ih_recursion(&s);
        let g32 = &t.pair(3, 2).unwrap().g;
        let g21 = &t.pair(2, 1).unwrap().g;
        assert_eq!(g32, &LaurentPoly::monomial(4, 1));
        assert_eq!(g21, &LaurentPoly::monomial(6, 1));
        let first_order = t.h(3) - &(g32 * t.h(2));
        let expected = &first_order + &(&(g32 * g21) * t.h(1));
        assert_eq!(t.ih(3), &expected);
    }

    #[test]
    fn all_small_has_no_correction() {
        // i < k forces r >= 1; in the all-small regime every g_pq vanishes
        let s = validate(1, 2, 2, 4).unwrap();
        assert_eq!(s.strata(), 2);
        let t = ih_matrix(&s);
        assert!(t.pairs.iter().all(|x| x.g.is_zero()));
        assert_eq!(t.ih, t.h);
        assert_eq!(t, ih_recursion(&s));
    }

    #[test]
    fn stalks() {
        let s = worked();
        assert_eq!(stalk_table(&s, 3, 2).unwrap(), dense(&[1, 1]));
        assert_eq!(stalk_table(&s, 3, 1).unwrap(), dense(&[1, 1, 1]));
        assert_eq!(stalk_table(&s, 3, 2).unwrap().max_degree(), Some(2));
        assert!(2 < s.m_p(3) - s.m_p(2));
    }

    #[test]
    fn summands_worked_example() {
        let s = worked();
        let t = summand_table(&s, 3).unwrap();
        assert_eq!(t.summands.len(), 2);
        assert_eq!(t.summands[0].q, 1);
        assert!(t.summands[0].mults.is_empty());
        assert_eq!(t.summands[1].mults, BTreeMap::from([(0, BigInt::one())]));
        let ih = ih_recursion(&s);
        assert_eq!(ih.h(3), &(ih.ih(3) + &ih.ih(2).shift(4)));
    }

    #[test]
    fn perverse_examples() {
        let s = validate(3, 5, 5, 8).unwrap();
        let t = perverse_table(&s);
        let one = BigInt::one();
        assert_eq!(t.rows[&-1], vec![(Support::Stratum(2), one.clone())]);
        assert_eq!(t.rows[&0], vec![(Support::Whole, one.clone()), (Support::Stratum(1), one.clone())]);
        assert_eq!(t.rows[&1], vec![(Support::Stratum(2), one.clone())]);
        assert_eq!(t.rows.len(), 3);
        assert!(t.is_symmetric());

        let t = perverse_table(&worked());
        assert_eq!(t.rows.len(), 1);
        assert_eq!(t.rows[&0], vec![(Support::Whole, one.clone()), (Support::Stratum(2), one.clone())]);

        let t = perverse_table(&validate(1, 3, 3, 7).unwrap());
        assert_eq!(t.rows.len(), 1);
        assert_eq!(t.rows[&0], vec![(Support::Whole, one)]);
    }

    #[test]
    fn gysin_image() {
        let s = worked();
        assert!(in_gysin_image(&p(&[2]), &s, 3, 2).unwrap());
        assert!(!in_gysin_image(&p(&[1]), &s, 3, 2).unwrap());
        assert!(!in_gysin_image(&p(&[]), &s, 3, 2).unwrap());
        assert!(in_gysin_image(&p(&[3]), &s, 3, 2).is_err());
    }

    #[test]
    fn local_worked_example() {
        let s = worked();
        let dec = local_decomposition(&s, 3, 1, EnumLimit::DEFAULT).unwrap();
        assert_eq!(dec.class_sizes(), BTreeMap::from([(1, 0), (2, 3), (3, 3)]));
        let nus = |q: i64| dec.classes[&q].iter().map(|m| m.nu.clone()).collect::<Vec<_>>();
        assert_eq!(nus(3), vec![p(&[]), p(&[1]), p(&[1, 1])]);
        assert_eq!(nus(2), vec![p(&[2]), p(&[2, 1]), p(&[2, 2])]);
        let m = dec.classes[&2].iter().find(|m| m.nu == p(&[2, 1])).unwrap();
        assert_eq!((m.mu.clone(), m.lambda.clone()), (p(&[]), p(&[1])));
        assert_eq!(
            grassmannian_poincare(2, 4),
            &dense(&[1, 1, 1]) + &dense(&[1, 1, 1]).shift(4)
        );
    }

    #[test]
    fn lefschetz_checks() {
        assert!(hard_lefschetz_verify(&worked(), 3, 2).unwrap());
        assert!(hard_lefschetz_verify(&validate(3, 5, 5, 8).unwrap(), 2, 1).unwrap());
        assert!(matches!(hard_lefschetz_verify(&worked(), 3, 1), Err(Error::Precondition(_))));
    }
}
