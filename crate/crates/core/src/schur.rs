//! Cohomology of `Gr(rows, C^{rows+cols})` in the Schur basis.
//!
//! Basis classes `σ_λ` are indexed by partitions inside the `rows × cols`
//! rectangle; products are computed in `Λ` and then truncated to the
//! rectangle, which is the quotient-ring presentation of the Grassmannian.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::partition::{add_to_parts, Partition, Rectangle};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingSpec {
    pub rows: usize,
    pub cols: usize,
}

impl RingSpec {
    pub const fn new(rows: usize, cols: usize) -> Self {
        Self { rows, cols }
    }

    pub fn rect(&self) -> Rectangle {
        Rectangle::new(self.rows, self.cols)
    }

    /// Complex dimension of the Grassmannian.
    pub fn dim(&self) -> usize {
        self.rows * self.cols
    }

    pub fn basis(&self, weight: usize) -> Vec<Partition> {
        self.rect().partitions_of_weight(weight)
    }

    fn check(&self, lambda: &Partition) -> Result<()> {
        if self.rect().contains(lambda) {
            Ok(())
        } else {
            Err(Error::OutsideRectangle {
                partition: lambda.clone(),
                rows: self.rows,
                cols: self.cols,
            })
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.rows, self.cols)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurVector {
    spec: RingSpec,
    terms: BTreeMap<Partition, BigInt>,
}

impl SchurVector {
    pub fn zero(spec: RingSpec) -> Self {
        Self {
            spec,
            terms: BTreeMap::new(),
        }
    }

    /// The basis class `σ_λ`.
    pub fn basis(spec: RingSpec, lambda: Partition) -> Result<Self> {
        spec.check(&lambda)?;
        let mut v = Self::zero(spec);
        v.terms.insert(lambda, BigInt::one());
        Ok(v)
    }

    /// Builds a vector from untruncated terms, dropping classes outside the rectangle.
    pub fn truncated(spec: RingSpec, terms: impl IntoIterator<Item = (Partition, BigInt)>) -> Self {
        let mut v = Self::zero(spec);
        for (nu, c) in terms {
            if spec.rect().contains(&nu) {
                v.add_term(nu, c);
            }
        }
        v
    }

    pub fn spec(&self) -> RingSpec {
        self.spec
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    /// Terms in basis order (weight, then lexicographically descending).
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn add_term(&mut self, lambda: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(lambda.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    /// Multiplication by `σ_(1)`.
    pub fn times_box(&self) -> Self {
        let mut out = Self::zero(self.spec);
        for (lambda, c) in &self.terms {
            for nu in horizontal_strips(lambda, 1) {
                if self.spec.rect().contains(&nu) {
                    out.add_term(nu, c.clone());
                }
            }
        }
        out
    }
}

/// `c·σ_(ν)` terms joined by ` + `, or `0`.
impl fmt::Display for SchurVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (nu, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            if !c.is_one() {
                write!(f, "{c}·")?;
            }
            write!(f, "σ_({nu})")?;
        }
        Ok(())
    }
}

/// All `ν ⊇ λ` with `ν/λ` a horizontal strip of `m` boxes, no size bound.
pub fn horizontal_strips(lambda: &Partition, m: usize) -> Vec<Partition> {
    strips_with_counts(lambda.parts(), m)
        .into_iter()
        .map(|(nu, _)| Partition::from_sorted_unchecked(nu))
        .collect()
}

/// Horizontal strips on `shape` together with the number of boxes added per row.
fn strips_with_counts(shape: &[usize], m: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    fn go(
        shape: &[usize],
        row: usize,
        remaining: usize,
        nu: &mut Vec<usize>,
        counts: &mut Vec<usize>,
        out: &mut Vec<(Vec<usize>, Vec<usize>)>,
    ) {
        if remaining == 0 {
            let mut nu_full = nu.clone();
            nu_full.extend_from_slice(&shape[row.min(shape.len())..]);
            out.push((nu_full, counts.clone()));
            return;
        }
        if row > shape.len() {
            return;
        }
        let base = shape.get(row).copied().unwrap_or(0);
        let cap = if row == 0 { base + remaining } else { shape[row - 1] };
        let max_add = cap.saturating_sub(base).min(remaining);
        for add in (0..=max_add).rev() {
            nu.push(base + add);
            counts.push(add);
            go(shape, row + 1, remaining - add, nu, counts, out);
            nu.pop();
            counts.pop();
        }
    }
    let mut out = Vec::new();
    go(shape, 0, m, &mut Vec::new(), &mut Vec::new(), &mut out);
    for (nu, counts) in &mut out {
        while nu.last() == Some(&0) {
            nu.pop();
        }
        while counts.last() == Some(&0) {
            counts.pop();
        }
    }
    out
}

/// All `ν ⊇ λ` with `ν/λ` a vertical strip of `m` boxes, no size bound.
pub fn vertical_strips(lambda: &Partition, m: usize) -> Vec<Partition> {
    fn go(lam: &[usize], row: usize, remaining: usize, nu: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            let mut full = nu.clone();
            full.extend_from_slice(&lam[row.min(lam.len())..]);
            out.push(Partition::from_sorted_unchecked(full));
            return;
        }
        let base = lam.get(row).copied().unwrap_or(0);
        // add a box to this row if the result stays a partition
        if row == 0 || nu[row - 1] > base {
            nu.push(base + 1);
            go(lam, row + 1, remaining - 1, nu, out);
            nu.pop();
        }
        if row < lam.len() {
            nu.push(base);
            go(lam, row + 1, remaining, nu, out);
            nu.pop();
        }
    }
    let mut out = Vec::new();
    go(lambda.parts(), 0, m, &mut Vec::new(), &mut out);
    out
}

pub fn pieri_row(spec: RingSpec, lambda: &Partition, m: usize) -> Result<SchurVector> {
    spec.check(lambda)?;
    Ok(SchurVector::truncated(
        spec,
        horizontal_strips(lambda, m).into_iter().map(|nu| (nu, BigInt::one())),
    ))
}

pub fn pieri_column(spec: RingSpec, lambda: &Partition, m: usize) -> Result<SchurVector> {
    spec.check(lambda)?;
    Ok(SchurVector::truncated(
        spec,
        vertical_strips(lambda, m).into_iter().map(|nu| (nu, BigInt::one())),
    ))
}

/// Littlewood–Richardson expansion `s_λ · s_μ = Σ c^ν_{λμ} s_ν` in the full
/// ring of symmetric functions.
///
/// Counts LR tableaux of shape `ν/λ` and content `μ`: a sequence of
/// horizontal strips labelled `1, 2, …` whose reverse reading word is a
/// lattice word.
pub fn lr_expand(lambda: &Partition, mu: &Partition) -> BTreeMap<Partition, BigInt> {
    let mut out = BTreeMap::new();
    let no_prev = vec![usize::MAX; lambda.len() + mu.weight() + 1];
    lr_place(mu.parts(), 0, lambda.parts().to_vec(), &no_prev, &mut out);
    out
}

fn lr_place(
    content: &[usize],
    letter: usize,
    shape: Vec<usize>,
    prev_counts: &[usize],
    out: &mut BTreeMap<Partition, BigInt>,
) {
    if letter == content.len() {
        *out.entry(Partition::from_sorted_unchecked(shape))
            .or_insert_with(BigInt::zero) += 1;
        return;
    }
    for (nu, counts) in strips_with_counts(&shape, content[letter]) {
        // Reading rows top to bottom, right to left: after the copies of this
        // letter in row r, its running count may not exceed that of the
        // previous letter in rows strictly above r.
        let lattice = letter == 0 || {
            let mut mine = 0usize;
            let mut theirs = 0usize;
            counts.iter().enumerate().all(|(r, &n)| {
                mine += n;
                let ok = mine <= theirs;
                theirs += prev_counts.get(r).copied().unwrap_or(0);
                ok
            })
        };
        if lattice {
            lr_place(content, letter + 1, nu, &counts, out);
        }
    }
}

pub fn lr_multiply(spec: RingSpec, u: &SchurVector, v: &SchurVector) -> Result<SchurVector> {
    if u.spec != spec || v.spec != spec {
        return Err(Error::SpecMismatch(format!("{}", u.spec), format!("{}", v.spec)));
    }
    let mut out = SchurVector::zero(spec);
    for (lambda, a) in &u.terms {
        for (mu, b) in &v.terms {
            let ab = a * b;
            for (nu, c) in lr_expand(lambda, mu) {
                if spec.rect().contains(&nu) {
                    out.add_term(nu, &ab * c);
                }
            }
        }
    }
    Ok(out)
}

/// Product with the full-rank rectangle class `σ_{(a^rows)}`: `σ_{λ + (a^rows)}`
/// when it still fits, else zero.
pub fn multiply_by_full_rectangle(spec: RingSpec, lambda: &Partition, a: usize) -> Result<SchurVector> {
    spec.check(lambda)?;
    let nu = add_to_parts(lambda, spec.rows, a)?;
    Ok(SchurVector::truncated(spec, [(nu, BigInt::one())]))
}

/// Matrix of cup product by `σ_(1)^i` from weight `(dim-i)/2` to weight
/// `(dim+i)/2`. `entries[t][s]` is the coefficient of `target[t]` in the image
/// of `source[s]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LefschetzMatrix {
    pub source: Vec<Partition>,
    pub target: Vec<Partition>,
    pub entries: Vec<Vec<BigInt>>,
}

impl LefschetzMatrix {
    pub fn is_square(&self) -> bool {
        self.source.len() == self.target.len()
    }

    pub fn size(&self) -> usize {
        self.source.len()
    }
}

/// Empty matrix when `dim ± i` is odd or `i > dim`.
pub fn lefschetz_power_matrix(spec: RingSpec, i: usize) -> LefschetzMatrix {
    let dim = spec.dim();
    if i > dim || !(dim - i).is_multiple_of(2) {
        return LefschetzMatrix {
            source: Vec::new(),
            target: Vec::new(),
            entries: Vec::new(),
        };
    }
    let source = spec.basis((dim - i) / 2);
    let target = spec.basis((dim + i) / 2);
    let mut entries = vec![vec![BigInt::zero(); source.len()]; target.len()];
    for (s, lambda) in source.iter().enumerate() {
        let mut v = SchurVector::basis(spec, lambda.clone()).expect("basis element fits");
        for _ in 0..i {
            v = v.times_box();
        }
        for (t, nu) in target.iter().enumerate() {
            entries[t][s] = v.coeff(nu);
        }
    }
    LefschetzMatrix {
        source,
        target,
        entries,
    }
}

pub fn render_terms(v: &SchurVector) -> String {
    format!("{v}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::matrix_rank_exact;
    use alloc::string::ToString;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn vecof(spec: RingSpec, terms: &[(&[usize], i64)]) -> SchurVector {
        SchurVector::truncated(spec, terms.iter().map(|(l, c)| (p(l), BigInt::from(*c))))
    }

    const S22: RingSpec = RingSpec::new(2, 2);

    #[test]
    fn pieri_row_examples() {
        assert_eq!(pieri_row(S22, &p(&[1]), 1).unwrap(), vecof(S22, &[(&[2], 1), (&[1, 1], 1)]));
        assert_eq!(pieri_row(S22, &p(&[2, 1]), 1).unwrap(), vecof(S22, &[(&[2, 2], 1)]));
        assert!(pieri_row(S22, &p(&[2, 2]), 1).unwrap().is_zero());
        assert!(pieri_row(S22, &p(&[3]), 1).is_err());
    }

    #[test]
    fn pieri_column_examples() {
        assert_eq!(pieri_column(S22, &p(&[]), 2).unwrap(), vecof(S22, &[(&[1, 1], 1)]));
        assert_eq!(pieri_column(S22, &p(&[1]), 1).unwrap(), vecof(S22, &[(&[2], 1), (&[1, 1], 1)]));
        assert_eq!(pieri_column(S22, &p(&[1, 1]), 2).unwrap(), vecof(S22, &[(&[2, 2], 1)]));
    }

    #[test]
    fn strips_unbounded() {
        let h = horizontal_strips(&p(&[2, 1]), 2);
        // (4,1) (3,2) (3,1,1) (2,2,1)
        assert_eq!(h.len(), 4);
        let v = vertical_strips(&p(&[2, 1]), 2);
        // (3,2) (3,1,1) (2,2,1) (2,1,1,1)
        assert_eq!(v.len(), 4);
        assert!(v.contains(&p(&[2, 1, 1, 1])));
        assert_eq!(horizontal_strips(&p(&[]), 0), vec![p(&[])]);
    }

    #[test]
    fn lr_examples() {
        let one = SchurVector::basis(S22, p(&[1])).unwrap();
        assert_eq!(lr_multiply(S22, &one, &one).unwrap(), vecof(S22, &[(&[2], 1), (&[1, 1], 1)]));
        let e2 = SchurVector::basis(S22, p(&[1, 1])).unwrap();
        assert_eq!(lr_multiply(S22, &e2, &e2).unwrap(), vecof(S22, &[(&[2, 2], 1)]));
        let unit = SchurVector::basis(S22, p(&[])).unwrap();
        let v = vecof(S22, &[(&[2], 3), (&[1, 1], -1)]);
        assert_eq!(lr_multiply(S22, &unit, &v).unwrap(), v);
        let other = SchurVector::basis(RingSpec::new(1, 3), p(&[])).unwrap();
        assert!(matches!(lr_multiply(S22, &other, &v), Err(Error::SpecMismatch(..))));
    }

    #[test]
    fn lr_classic_coefficient() {
        // c^{(4,2,1)}_{(2,1),(2,1)} = 2 ... and c^{(3,2,1)}_{(2,1),(2,1)} = 2
        let e = lr_expand(&p(&[2, 1]), &p(&[2, 1]));
        assert_eq!(e[&p(&[3, 2, 1])], BigInt::from(2));
        assert_eq!(e[&p(&[4, 2])], BigInt::from(1));
        let total: usize = e.values().map(|c| usize::try_from(c).unwrap()).sum();
        assert_eq!(total, 8);
    }

    #[test]
    fn full_rectangle() {
        let s = RingSpec::new(1, 3);
        assert_eq!(multiply_by_full_rectangle(s, &p(&[1]), 2).unwrap(), vecof(s, &[(&[3], 1)]));
        assert!(multiply_by_full_rectangle(s, &p(&[2]), 2).unwrap().is_zero());
        assert_eq!(multiply_by_full_rectangle(s, &p(&[]), 0).unwrap(), vecof(s, &[(&[], 1)]));
    }

    #[test]
    fn lefschetz_examples() {
        let m = lefschetz_power_matrix(RingSpec::new(1, 1), 1);
        assert_eq!(m.entries, vec![vec![BigInt::from(1)]]);
        let m = lefschetz_power_matrix(S22, 2);
        assert_eq!((m.source.clone(), m.target.clone()), (vec![p(&[1])], vec![p(&[2, 1])]));
        assert_eq!(m.entries, vec![vec![BigInt::from(2)]]);
        assert_eq!(matrix_rank_exact(&m.entries), 1);
        let m = lefschetz_power_matrix(S22, 0);
        assert_eq!(m.entries, vec![vec![BigInt::from(1), BigInt::zero()], vec![BigInt::zero(), BigInt::from(1)]]);
        assert_eq!(lefschetz_power_matrix(S22, 1).size(), 0);
        assert_eq!(lefschetz_power_matrix(S22, 6).size(), 0);
        // point ring
        let m = lefschetz_power_matrix(RingSpec::new(1, 0), 0);
        assert_eq!(m.entries, vec![vec![BigInt::from(1)]]);
    }

    #[test]
    fn display() {
        assert_eq!(vecof(S22, &[(&[2], 1), (&[1, 1], 1)]).to_string(), "σ_(2) + σ_(1,1)");
        assert_eq!(SchurVector::zero(S22).to_string(), "0");
        assert_eq!(vecof(S22, &[(&[2, 1], 2)]).to_string(), "2·σ_(2,1)");
    }
}
