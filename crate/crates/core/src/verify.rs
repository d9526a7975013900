//! Named invariant checks, shared by the test suites and `schubert verify`.
//!
//! [`check_input`] runs everything that depends on one `(i, j, k, l)`;
//! [`kernel_checks`] runs the input-independent Schur/Gaussian checks once.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::decomposition::{
    hard_lefschetz_verify, ih_matrix, ih_recursion, in_gysin_image, local_decomposition, perverse_table,
    small_resolution_oracle, space_poincare, space_rectangle, stalk_table, summand_table, GradedSpaceId,
    SpaceKind,
};
use crate::geometry::{fiber_descriptors, FiberKind, Regime, SchubertInput};
use crate::matrix::matrix_rank_exact;
use crate::oracle::{brute_product_check, gaussian_by_enumeration};
use crate::partition::{classify_stratum, enumerate_by_weight, gysin_compose, EnumLimit, Partition, Rectangle};
use crate::poly::{binomial, gaussian_binomial, LaurentPoly};
use crate::Error;
use crate::schur::{
    lefschetz_power_matrix, lr_multiply, multiply_by_full_rectangle, pieri_column, pieri_row, RingSpec, SchurVector,
};

/// Deliberate corruption used to prove the sweep can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Adds `t^2` to every nontrivial Gaussian binomial seen by the checks.
    GaussianRecurrence,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct VerifyOptions {
    pub limit: EnumLimit,
    pub fault: Option<Fault>,
}

impl VerifyOptions {
    fn gaussian(&self, n: i64, k: i64) -> LaurentPoly {
        let g = gaussian_binomial(n, k, 2);
        match self.fault {
            Some(Fault::GaussianRecurrence) if 0 < k && k < n => &g + &LaurentPoly::monomial(2, 1),
            _ => g,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Pass,
    /// Some enumeration exceeded the limit and nothing else went wrong.
    Skip,
    Fail,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Skip => "skip",
            Status::Fail => "fail",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub status: Status,
    /// Empty on success; the first violation (or skip reason) otherwise.
    pub detail: String,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Collects the first violation of a named check.
struct Check {
    name: &'static str,
    failure: Option<String>,
    skipped: Option<String>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            failure: None,
            skipped: None,
        }
    }

    fn require(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if !ok && self.failure.is_none() {
            self.failure = Some(detail());
        }
    }

    /// Limit errors skip; anything else fails.
    fn error(&mut self, context: impl FnOnce() -> String, e: Error) {
        if matches!(e, Error::LimitExceeded { .. }) {
            if self.skipped.is_none() {
                self.skipped = Some(format!("{}: {e}", context()));
            }
        } else {
            self.require(false, || format!("{}: {e}", context()));
        }
    }

    fn done(self) -> CheckOutcome {
        let (status, detail) = match (self.failure, self.skipped) {
            (Some(f), _) => (Status::Fail, f),
            (None, Some(s)) => (Status::Skip, s),
            (None, None) => (Status::Pass, String::new()),
        };
        CheckOutcome {
            name: self.name,
            status,
            detail,
        }
    }
}

fn pairs(input: &SchubertInput) -> impl Iterator<Item = (i64, i64)> {
    let top = input.strata();
    (2..=top).flat_map(|p| (1..p).map(move |q| (p, q)))
}

pub fn check_input(input: &SchubertInput, opts: &VerifyOptions) -> Vec<CheckOutcome> {
    let rec = ih_recursion(input);
    let top = input.strata();
    let mut out = Vec::new();

    let mut ck = Check::new("geometry_identities");
    for p in 1..=top {
        if p < top {
            let lhs = input.n() - input.m_p(p);
            let rhs = (input.r() + 1 - p) * (input.c() + input.k() + 1 - input.r() - p);
            ck.require(lhs == rhs && lhs > 0, || format!("n - m_{p} = {lhs}, formula {rhs}"));
            ck.require(input.m_p(p) < input.m_p(p + 1), || format!("m_{p} not increasing"));
        }
        ck.require(input.m_p(p) >= 0, || format!("m_{p} < 0"));
    }
    for (p, q) in pairs(input) {
        let (k, d, delta) = (input.k_pq(p, q), input.d_pq(p, q), input.delta_pq(p, q));
        let gap = input.m_p(p) - input.m_p(q);
        ck.require(k == d + delta, || format!("k_{p}{q} != d + delta"));
        ck.require(gap == k + d, || format!("m_{p} - m_{q} = {gap} != k + d = {}", k + d));
        ck.require(gap == (p - q) * (input.c() + input.k() + 2 - p - q), || {
            format!("m_{p} - m_{q} = {gap} disagrees with closed form")
        });
        for f in fiber_descriptors(input, p, Some(q)).expect("pair in range") {
            match f.kind {
                FiberKind::Fpq => ck.require(f.dim() == k, || format!("dim F_{p}{q} = {} != {k}", f.dim())),
                FiberKind::Gpq => ck.require(f.dim() == input.kbar_pq(p, q), || format!("dim G_{p}{q} mismatch")),
                FiberKind::Fp => {}
            }
        }
    }
    out.push(ck.done());

    let mut ck = Check::new("ih_triple_oracle");
    let mat = ih_matrix(input);
    for p in 1..=top {
        let a = rec.ih(p);
        ck.require(a == mat.ih(p), || format!("p={p}: recursion {a}, matrix {}", mat.ih(p)));
        match small_resolution_oracle(input, p) {
            Ok(o) => ck.require(&o == a, || format!("p={p}: recursion {a}, small resolution {o}")),
            Err(e) => ck.require(false, || format!("p={p}: {e}")),
        }
    }
    out.push(ck.done());

    let mut ck = Check::new("ih_poincare_duality");
    for p in 1..=top {
        let ip = rec.ih(p);
        let m = input.m_p(p);
        ck.require(ip.is_palindromic(m), || format!("I_{p} not palindromic about {m}: {ip}"));
        ck.require(ip.is_nonnegative(), || format!("I_{p} has a negative coefficient: {ip}"));
        ck.require(ip.is_even(), || format!("I_{p} has odd degrees: {ip}"));
        ck.require(ip.min_degree() == Some(0) && ip.max_degree() == Some(2 * m), || {
            format!("I_{p} not supported on 0..={}", 2 * m)
        });
    }
    out.push(ck.done());

    let mut ck = Check::new("decomposition_identity");
    for p in 1..=top {
        let mut sum = rec.ih(p).clone();
        for q in 1..p {
            sum += &rec.pair(p, q).expect("pair").contribution;
        }
        ck.require(&sum == rec.h(p), || format!("p={p}: H = {}, I + sum P = {sum}", rec.h(p)));
    }
    out.push(ck.done());

    let mut ck = Check::new("euler_count");
    for p in 1..=top {
        let ip = input.i_p(p);
        let (c, j, k, l) = (input.c(), input.j(), input.k(), input.l());
        let h1 = binomial(j, ip) * binomial(l - ip, p - 1);
        ck.require(rec.h(p).eval_at_one() == h1, || format!("H_{p}(1) != {h1}"));
        let i1 = if input.xi_small(p) {
            binomial(c, p - 1) * binomial(k + j - ip, k)
        } else {
            h1
        };
        ck.require(rec.ih(p).eval_at_one() == i1, || {
            format!("I_{p}(1) = {} != {i1}", rec.ih(p).eval_at_one())
        });
    }
    out.push(ck.done());

    let mut ck = Check::new("stalk_support");
    for (p, q) in pairs(input) {
        let stalk = stalk_table(input, p, q).expect("pair");
        let top_deg = stalk.max_degree().unwrap_or(0);
        let gap = input.m_p(p) - input.m_p(q);
        ck.require(top_deg < gap, || format!("stalk ({p},{q}) top degree {top_deg} >= {gap}"));
        if input.regime() == Regime::NonSmall {
            ck.require(top_deg == 2 * input.kbar_pq(p, q), || format!("stalk ({p},{q}) top degree != 2 kbar"));
        }
    }
    out.push(ck.done());

    let mut ck = Check::new("space_bases");
    for (p, q) in pairs(input) {
        for kind in [SpaceKind::A, SpaceKind::B, SpaceKind::D, SpaceKind::E] {
            let id = GradedSpaceId::new(kind, p, q);
            let closed = space_poincare(id, input).expect("pair");
            match space_rectangle(id, input).and_then(|s| s.poincare_by_basis(opts.limit)) {
                Ok(listed) => ck.require(listed == closed, || {
                    format!("{kind:?}_{p}{q}: listed {listed}, closed form {closed}")
                }),
                Err(e) => ck.error(|| format!("{kind:?}_{p}{q}"), e),
            }
        }
    }
    out.push(ck.done());

    let mut ck = Check::new("summand_multiplicities");
    for p in 1..=top {
        let table = summand_table(input, p).expect("stratum");
        for rec_q in &table.summands {
            let q = rec_q.q;
            let delta = rec_q.delta;
            let mut rebuilt = LaurentPoly::zero();
            for (&i, m) in &rec_q.mults {
                ck.require(rec_q.mults.get(&-i) == Some(m), || format!("({p},{q}) shift {i} not symmetric"));
                ck.require(i.abs() <= delta && (delta + i) % 2 == 0, || format!("({p},{q}) bad shift {i}"));
                rebuilt.add_term(delta + i, m.clone());
            }
            let f = space_poincare(GradedSpaceId::new(SpaceKind::D, p, q), input).expect("pair");
            ck.require(rebuilt == f, || format!("({p},{q}) multiplicities {rebuilt} != D poly {f}"));
        }
    }
    out.push(ck.done());

    let mut ck = Check::new("local_decomposition");
    for (p, l) in pairs(input) {
        if let Err(e) = local_decomposition(input, p, l, opts.limit) {
            ck.error(|| format!("(p,l)=({p},{l})"), e);
        }
    }
    out.push(ck.done());

    let mut ck = Check::new("gysin_roundtrip");
    let c = input.c();
    let basis = |ck: &mut Check, kind, p, q| {
        match space_rectangle(GradedSpaceId::new(kind, p, q), input).and_then(|s| s.basis(opts.limit)) {
            Ok(b) => b,
            Err(e) => {
                ck.error(|| format!("{kind:?}_{p}{q}"), e);
                Vec::new()
            }
        }
    };
    for (p, q) in pairs(input) {
        let d_basis = basis(&mut ck, SpaceKind::D, p, q);
        for l in 1..=q {
            let b_basis = if l == q {
                alloc::vec![Partition::empty()]
            } else {
                basis(&mut ck, SpaceKind::B, q, l)
            };
            for mu in &d_basis {
                for lambda in &b_basis {
                    let got = gysin_compose(mu, lambda, (p - q) as usize, (c + 1 - q) as usize)
                        .and_then(|nu| classify_stratum(&nu, p, l, c));
                    ck.require(got == Ok(q), || format!("({mu})|({lambda}) at ({p},{q},{l}) gave {got:?}"));
                }
            }
        }
        // membership predicate agrees with the E basis
        let e_basis = basis(&mut ck, SpaceKind::E, p, q);
        for nu in &basis(&mut ck, SpaceKind::A, p, q) {
            let member = in_gysin_image(nu, input, p, q);
            ck.require(member == Ok(e_basis.contains(nu)), || format!("in_gysin_image({nu}) at ({p},{q})"));
        }
    }
    out.push(ck.done());

    let mut ck = Check::new("relative_hard_lefschetz");
    ck.require(perverse_table(input).is_symmetric(), || String::from("perverse table not symmetric"));
    for (p, q) in pairs(input) {
        if input.delta_pq(p, q) >= 0 {
            ck.require(hard_lefschetz_verify(input, p, q) == Ok(true), || format!("({p},{q}) not full rank"));
        }
    }
    out.push(ck.done());

    let mut ck = Check::new("smallness_bookkeeping");
    match input.regime() {
        Regime::NonSmall => {
            for (p, q) in pairs(input) {
                ck.require(input.xi_small_at(p, q), || format!("xi_{p} fails smallness over stratum {q}"));
            }
            ck.require(!input.pi_small(top), || String::from("pi is small in the non-small regime"));
        }
        Regime::AllSmall => {
            for p in 1..=top {
                let trivial = summand_table(input, p).expect("stratum").is_trivial();
                ck.require(trivial, || format!("summand table of {p} not trivial"));
                ck.require(rec.ih(p) == rec.h(p), || format!("I_{p} != H_{p}"));
                ck.require(input.pi_small(p), || format!("pi_{p} not small"));
            }
        }
    }
    out.push(ck.done());

    let mut ck = Check::new("gaussian_factors");
    // the Grassmannians this input touches, through the (possibly faulty) recurrence
    for p in 1..=top {
        let ip = input.i_p(p);
        for (a, b) in [(ip, input.j()), (p - 1, input.l() - ip), (p - 1, input.c())] {
            match gaussian_by_enumeration(a, b, opts.limit) {
                Ok(listed) => {
                    let g = opts.gaussian(b, a);
                    ck.require(g == listed, || format!("Gr({a},{b}): recurrence {g}, listed {listed}"));
                }
                Err(e) => ck.error(|| format!("Gr({a},{b})"), e),
            }
        }
    }
    out.push(ck.done());

    out
}

fn spec_partitions(spec: RingSpec) -> Vec<Partition> {
    (0..=spec.dim()).flat_map(|w| spec.basis(w)).collect()
}

pub fn kernel_checks(opts: &VerifyOptions) -> Vec<CheckOutcome> {
    let mut out = Vec::new();

    let mut ck = Check::new("gaussian_vs_enumeration");
    for n in 0..=10 {
        for k in 0..=n {
            let g = opts.gaussian(n, k);
            match gaussian_by_enumeration(k, n, opts.limit) {
                Ok(e) => ck.require(g == e, || format!("[{n},{k}]: recurrence {g}, enumeration {e}")),
                Err(e) => ck.error(|| format!("[{n},{k}]"), e),
            }
        }
    }
    out.push(ck.done());

    let mut ck = Check::new("gaussian_identities");
    for n in 0..=12i64 {
        for k in 0..=n {
            let g = opts.gaussian(n, k);
            if n > 0 {
                let pascal = &opts.gaussian(n - 1, k - 1) + &opts.gaussian(n - 1, k).shift(2 * k);
                ck.require(g == pascal, || format!("Pascal fails at [{n},{k}]"));
            }
            ck.require(g.eval_at_one() == binomial(n, k), || format!("[{n},{k}](1) != C({n},{k})"));
            ck.require(g.is_palindromic(k * (n - k)), || format!("[{n},{k}] not palindromic"));
        }
    }
    out.push(ck.done());

    let mut ck = Check::new("enumeration_counts");
    for rows in 0..=20usize {
        for cols in 0..=20usize {
            if rows * cols > 20 {
                continue;
            }
            match enumerate_by_weight(Rectangle::new(rows, cols), opts.limit) {
                Ok(by_weight) => {
                    let total: usize = by_weight.iter().map(Vec::len).sum();
                    let expected = binomial((rows + cols) as i64, rows as i64);
                    ck.require(BigInt::from(total) == expected, || format!("{rows}x{cols}: {total} != {expected}"));
                }
                Err(e) => ck.error(|| format!("{rows}x{cols}"), e),
            }
        }
    }
    out.push(ck.done());

    let mut ck = Check::new("lr_vs_pieri");
    for rows in 1..=3 {
        for cols in 1..=4 {
            let spec = RingSpec::new(rows, cols);
            for lambda in spec_partitions(spec) {
                let u = SchurVector::basis(spec, lambda.clone()).expect("fits");
                for m in 0..=cols {
                    let row = SchurVector::basis(spec, Partition::row(m)).expect("fits");
                    let lr = lr_multiply(spec, &u, &row).expect("same ring");
                    let pieri = pieri_row(spec, &lambda, m).expect("fits");
                    ck.require(lr == pieri, || format!("{spec}: ({lambda})*({m}) LR {lr} vs Pieri {pieri}"));
                }
                for m in 0..=rows {
                    let column = SchurVector::basis(spec, Partition::column(m)).expect("fits");
                    let lr = lr_multiply(spec, &u, &column).expect("same ring");
                    let pieri = pieri_column(spec, &lambda, m).expect("fits");
                    ck.require(lr == pieri, || format!("{spec}: ({lambda})*(1^{m}) LR {lr} vs Pieri {pieri}"));
                }
            }
        }
    }
    out.push(ck.done());

    let mut ck = Check::new("lr_vs_brute");
    for rows in 1..=3 {
        for cols in 1..=3 {
            let spec = RingSpec::new(rows, cols);
            let basis = spec_partitions(spec);
            for lambda in &basis {
                for mu in &basis {
                    match brute_product_check(spec, lambda, mu, opts.limit) {
                        Ok(ok) => ck.require(ok, || format!("{spec}: ({lambda})*({mu}) disagrees with monomials")),
                        Err(e) => ck.error(|| format!("{spec}: ({lambda})*({mu})"), e),
                    }
                }
            }
        }
    }
    out.push(ck.done());

    let mut ck = Check::new("full_rectangle_vs_lr");
    for rows in 1..=3 {
        for cols in 1..=3 {
            let spec = RingSpec::new(rows, cols);
            for a in 0..=2usize.min(cols) {
                let rect = SchurVector::basis(spec, Partition::rectangle(rows, a)).expect("fits");
                for lambda in spec_partitions(spec) {
                    let direct = multiply_by_full_rectangle(spec, &lambda, a).expect("fits");
                    let u = SchurVector::basis(spec, lambda.clone()).expect("fits");
                    let lr = lr_multiply(spec, &u, &rect).expect("same ring");
                    ck.require(direct == lr, || format!("{spec}: ({lambda}) * ({a}^{rows}): {direct} vs {lr}"));
                }
            }
        }
    }
    out.push(ck.done());

    let mut ck = Check::new("lefschetz_full_rank");
    for rows in 1..=12usize {
        for cols in 0..=12usize {
            if rows * cols > 12 {
                continue;
            }
            let spec = RingSpec::new(rows, cols);
            for i in 0..=spec.dim() {
                let m = lefschetz_power_matrix(spec, i);
                let rank = matrix_rank_exact(&m.entries);
                ck.require(m.is_square() && rank == m.size(), || {
                    format!("{spec}, i={i}: {}x{} of rank {rank}", m.target.len(), m.source.len())
                });
            }
            for w in 0..=spec.dim() {
                ck.require(spec.basis(w).len() == spec.basis(spec.dim() - w).len(), || {
                    format!("{spec}: basis counts not dual at weight {w}")
                });
            }
        }
    }
    out.push(ck.done());

    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::validate;

    #[test]
    fn worked_input_passes_everything() {
        let s = validate(2, 5, 4, 8).unwrap();
        for outcome in check_input(&s, &VerifyOptions::default()) {
            assert!(outcome.passed(), "{}: {}", outcome.name, outcome.detail);
        }
    }

    #[test]
    fn fault_is_detected() {
        let opts = VerifyOptions {
            fault: Some(Fault::GaussianRecurrence),
            ..Default::default()
        };
        let kernel = kernel_checks(&opts);
        let g = kernel.iter().find(|c| c.name == "gaussian_vs_enumeration").unwrap();
        assert_eq!(g.status, Status::Fail);
        assert!(!g.detail.is_empty());
        let s = validate(2, 5, 4, 8).unwrap();
        assert!(check_input(&s, &opts).iter().any(|c| c.status == Status::Fail));
    }

    #[test]
    fn tiny_limit_skips_instead_of_failing() {
        let opts = VerifyOptions {
            limit: EnumLimit(1),
            fault: None,
        };
        let s = validate(2, 5, 4, 8).unwrap();
        let outcomes = check_input(&s, &opts);
        assert!(outcomes.iter().all(|c| c.status != Status::Fail));
        let local = outcomes.iter().find(|c| c.name == "local_decomposition").unwrap();
        assert_eq!(local.status, Status::Skip);
        assert!(local.detail.contains("limit"));
    }
}
