//! Brute-force cross-checks. Nothing here calls the code it validates: Schur
//! polynomials come from semistandard tableaux, products from monomial
//! convolution, Gaussian binomials from listing partitions.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::partition::{enumerate_by_weight, EnumLimit, Partition, Rectangle};
use crate::poly::LaurentPoly;
use crate::schur::{lr_expand, lr_multiply, RingSpec, SchurVector};
use crate::{Error, Result};

/// Polynomial in `x_1..x_n` as exponent tuple → coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MonomialVector {
    pub nvars: usize,
    pub terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MonomialVector {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: BigInt) {
        let slot = self.terms.entry(exps.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn add_scaled(&mut self, other: &MonomialVector, c: &BigInt) {
        for (e, v) in &other.terms {
            self.add_term(e.clone(), v * c);
        }
    }

    pub fn mul(&self, other: &MonomialVector) -> MonomialVector {
        let mut out = MonomialVector::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// Invariant under swapping `x_a` and `x_b`.
    pub fn is_symmetric_under(&self, a: usize, b: usize) -> bool {
        self.terms.iter().all(|(e, c)| {
            let mut swapped = e.clone();
            swapped.swap(a, b);
            self.terms.get(&swapped) == Some(c)
        })
    }
}

/// `s_λ(x_1..x_n)` as a sum over semistandard tableaux with entries `1..=n`.
pub fn schur_monomial_expand(lambda: &Partition, nvars: usize, limit: EnumLimit) -> Result<MonomialVector> {
    limit.check(nvars * lambda.weight())?;
    if lambda.len() > nvars {
        return Err(Error::TooManyParts {
            partition: lambda.clone(),
            rows: nvars,
        });
    }
    let shape = lambda.parts();
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<u32>> = shape.iter().map(|&len| vec![0; len]).collect();
    let mut out = MonomialVector::zero(nvars);
    fill_ssyt(&cells, 0, nvars as u32, &mut grid, &mut out);
    Ok(out)
}

fn fill_ssyt(cells: &[(usize, usize)], idx: usize, n: u32, grid: &mut Vec<Vec<u32>>, out: &mut MonomialVector) {
    if idx == cells.len() {
        let mut exps = vec![0u32; n as usize];
        for row in grid.iter() {
            for &v in row {
                exps[(v - 1) as usize] += 1;
            }
        }
        out.add_term(exps, BigInt::from(1));
        return;
    }
    let (r, c) = cells[idx];
    let left = if c > 0 { grid[r][c - 1] } else { 1 };
    let above = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
    for v in left.max(above)..=n {
        grid[r][c] = v;
        fill_ssyt(cells, idx + 1, n, grid, out);
    }
    grid[r][c] = 0;
}

/// Checks `σ_λ · σ_μ` from [`lr_multiply`] against monomial convolution in
/// `spec.rows` variables, and that truncation dropped exactly the classes
/// outside the rectangle.
pub fn brute_product_check(spec: RingSpec, lambda: &Partition, mu: &Partition, limit: EnumLimit) -> Result<bool> {
    let n = spec.rows;
    let lhs = schur_monomial_expand(lambda, n, limit)?.mul(&schur_monomial_expand(mu, n, limit)?);

    let expansion = lr_expand(lambda, mu);
    let mut rhs = MonomialVector::zero(n);
    for (nu, c) in &expansion {
        // s_ν vanishes in n variables when ν has more than n parts
        if nu.len() <= n {
            rhs.add_scaled(&schur_monomial_expand(nu, n, EnumLimit(usize::MAX))?, c);
        }
    }
    if lhs != rhs {
        return Ok(false);
    }

    let product = lr_multiply(
        spec,
        &SchurVector::basis(spec, lambda.clone())?,
        &SchurVector::basis(spec, mu.clone())?,
    )?;
    let rect = spec.rect();
    for (nu, c) in &expansion {
        let kept = product.coeff(nu);
        let ok = if nu.first() > spec.cols || nu.len() > spec.rows {
            kept.is_zero()
        } else {
            &kept == c
        };
        if !ok {
            return Ok(false);
        }
    }
    let clean = product.terms().all(|(nu, _)| rect.contains(nu) && expansion.contains_key(nu));
    Ok(clean)
}

/// `Σ_{λ ⊆ a×(b-a)} t^{2|λ|}`, the Poincaré polynomial of `Gr_a(C^b)` by listing.
pub fn gaussian_by_enumeration(a: i64, b: i64, limit: EnumLimit) -> Result<LaurentPoly> {
    if a < 0 || b < 0 || a > b {
        return Ok(LaurentPoly::zero());
    }
    let rect = Rectangle::new(a as usize, (b - a) as usize);
    let by_weight = enumerate_by_weight(rect, limit)?;
    Ok(LaurentPoly::from_pairs(
        by_weight
            .iter()
            .enumerate()
            .map(|(w, list)| (2 * w as i64, list.len() as i64)),
    ))
}
