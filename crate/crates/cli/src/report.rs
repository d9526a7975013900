//! The `analyze` report and its three renderings.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

use schubert_ic::decomposition::{
    ih_recursion, perverse_table, stalk_table, summand_table, IhTable, PerverseTable, Support, SummandTable,
};
use schubert_ic::geometry::{pair_invariants, stratum_invariants, PairTable, StratumTable};
use schubert_ic::verify::{check_input, CheckOutcome, Status, VerifyOptions};
use schubert_ic::{LaurentPoly, SchubertInput};

pub const SCHEMA: &str = "schubert-ic/report/1";

#[derive(Debug, Clone)]
pub struct Report {
    pub input: SchubertInput,
    pub strata: StratumTable,
    pub pairs: PairTable,
    pub ih: IhTable,
    pub summands: Vec<SummandTable>,
    pub perverse: PerverseTable,
    /// `((p, q), stalk)` for every `q < p`.
    pub stalks: Vec<((i64, i64), LaurentPoly)>,
    pub checks: Vec<CheckOutcome>,
}

impl Report {
    pub fn build(input: &SchubertInput, opts: &VerifyOptions) -> Self {
        let top = input.strata();
        let stalks = (2..=top)
            .flat_map(|p| (1..p).map(move |q| (p, q)))
            .map(|(p, q)| ((p, q), stalk_table(input, p, q).expect("pair in range")))
            .collect();
        Report {
            input: *input,
            strata: stratum_invariants(input),
            pairs: pair_invariants(input),
            ih: ih_recursion(input),
            summands: (1..=top)
                .map(|p| summand_table(input, p).expect("stratum in range"))
                .collect(),
            perverse: perverse_table(input),
            stalks,
            checks: check_input(input, opts),
        }
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> Value {
        let s = &self.input;
        let mut root = Map::new();
        root.insert("schema".into(), json!(SCHEMA));
        root.insert(
            "input".into(),
            json!({
                "i": s.i(), "j": s.j(), "k": s.k(), "l": s.l(),
                "r": s.r(), "c": s.c(), "regime": s.regime().as_str(),
            }),
        );
        root.insert(
            "strata".into(),
            self.strata
                .rows
                .iter()
                .map(|r| json!({"p": r.p, "i_p": r.i_p, "m_p": r.m_p}))
                .collect(),
        );
        root.insert(
            "pairs".into(),
            self.pairs
                .rows
                .iter()
                .map(|r| {
                    json!({
                        "p": r.p, "q": r.q, "k": r.k, "d": r.d, "delta": r.delta, "kbar": r.kbar,
                        "xi_small": r.xi_small, "pi_small": r.pi_small,
                    })
                })
                .collect(),
        );
        let by_stratum = |f: fn(&IhTable, i64) -> &LaurentPoly| -> Value {
            self.strata
                .rows
                .iter()
                .map(|r| (r.p.to_string(), poly_to_json(f(&self.ih, r.p))))
                .collect::<Map<_, _>>()
                .into()
        };
        root.insert("h".into(), by_stratum(IhTable::h));
        root.insert("ih".into(), by_stratum(IhTable::ih));
        root.insert(
            "summands".into(),
            self.summands
                .iter()
                .map(|t| {
                    let list: Value = t
                        .summands
                        .iter()
                        .map(|rec| {
                            let mults: Map<_, _> =
                                rec.mults.iter().map(|(i, m)| (i.to_string(), big_to_json(m))).collect();
                            json!({"q": rec.q, "mults": mults})
                        })
                        .collect();
                    (t.p.to_string(), list)
                })
                .collect::<Map<_, _>>()
                .into(),
        );
        root.insert(
            "perverse".into(),
            self.perverse
                .rows
                .iter()
                .map(|(i, row)| {
                    let entries: Value = row
                        .iter()
                        .map(|(support, m)| {
                            let tag = match support {
                                Support::Whole => json!("IC_S"),
                                Support::Stratum(q) => json!(q),
                            };
                            json!([tag, big_to_json(m)])
                        })
                        .collect();
                    (i.to_string(), entries)
                })
                .collect::<Map<_, _>>()
                .into(),
        );
        root.insert(
            "stalks".into(),
            self.stalks
                .iter()
                .map(|((p, q), poly)| (format!("{p},{q}"), poly_to_json(poly)))
                .collect::<Map<_, _>>()
                .into(),
        );
        root.insert(
            "checks".into(),
            self.checks
                .iter()
                .map(|c| (c.name.to_string(), json!(c.status.as_str())))
                .collect::<Map<_, _>>()
                .into(),
        );
        Value::Object(root)
    }

    pub fn render_json(&self) -> String {
        let mut out = String::new();
        write_json(&mut out, &self.to_json(), 0);
        out.push('\n');
        out
    }

    pub fn render_text(&self) -> String {
        let s = &self.input;
        let mut out = String::new();
        let _ = writeln!(out, "input {s}: r = {}, c = {}, {}", s.r(), s.c(), s.regime());
        let _ = writeln!(out, "dim S = {}, strata = {}", self.strata.n, s.strata());
        out.push_str("\nstrata\n");
        for r in &self.strata.rows {
            let _ = writeln!(out, "  p = {}: i_p = {}, m_p = {}", r.p, r.i_p, r.m_p);
        }
        if !self.pairs.rows.is_empty() {
            out.push_str("\npairs\n");
            for r in &self.pairs.rows {
                let _ = writeln!(
                    out,
                    "  ({},{}): k = {}, d = {}, delta = {}, kbar = {}, xi small: {}, pi small: {}",
                    r.p,
                    r.q,
                    r.k,
                    r.d,
                    r.delta,
                    r.kbar,
                    yes_no(r.xi_small),
                    yes_no(r.pi_small)
                );
            }
        }
        out.push_str("\nintersection cohomology\n");
        for r in &self.strata.rows {
            let _ = writeln!(out, "  H_{} = {}", r.p, self.ih.h(r.p));
            let _ = writeln!(out, "  I_{} = {}", r.p, self.ih.ih(r.p));
        }
        out.push_str("\nsummands\n");
        out.push_str(&render_summands(&self.summands));
        out.push_str("\nperverse cohomology of the top resolution\n");
        out.push_str(&render_perverse(&self.perverse));
        if !self.stalks.is_empty() {
            out.push_str("\nstalks\n");
            for ((p, q), poly) in &self.stalks {
                let _ = writeln!(out, "  ({p},{q}): {poly}");
            }
        }
        out.push_str("\nchecks\n");
        for c in &self.checks {
            let _ = write!(out, "  {}: {}", c.name, c.status.as_str());
            if !c.detail.is_empty() {
                let _ = write!(out, " ({})", c.detail);
            }
            out.push('\n');
        }
        out
    }

    pub fn render_latex(&self) -> String {
        let s = &self.input;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "% (i,j,k,l) = {s}, r = {}, c = {}, {}",
            s.r(),
            s.c(),
            s.regime()
        );

        out.push_str("\n% strata\n\\begin{tabular}{rrr}\n$p$ & $i_p$ & $m_p$ \\\\\n\\hline\n");
        for r in &self.strata.rows {
            let _ = writeln!(out, "{} & {} & {} \\\\", r.p, r.i_p, r.m_p);
        }
        out.push_str("\\end{tabular}\n");

        if !self.pairs.rows.is_empty() {
            out.push_str(
                "\n% pairs\n\\begin{tabular}{rrrrrr}\n$p$ & $q$ & $k_{pq}$ & $d_{pq}$ & $\\delta_{pq}$ & $\\bar k_{pq}$ \\\\\n\\hline\n",
            );
            for r in &self.pairs.rows {
                let _ = writeln!(out, "{} & {} & {} & {} & {} & {} \\\\", r.p, r.q, r.k, r.d, r.delta, r.kbar);
            }
            out.push_str("\\end{tabular}\n");
        }

        // one row per stratum, one column per even degree
        let top_deg = self
            .strata
            .rows
            .iter()
            .filter_map(|r| self.ih.ih(r.p).max_degree())
            .max()
            .unwrap_or(0);
        let degrees: Vec<i64> = (0..=top_deg).step_by(2).collect();
        let _ = write!(out, "\n% intersection cohomology\n\\begin{{tabular}}{{r|{}}}\n$p$", "r".repeat(degrees.len()));
        for d in &degrees {
            let _ = write!(out, " & $t^{{{d}}}$");
        }
        out.push_str(" \\\\\n\\hline\n");
        for r in &self.strata.rows {
            let ip = self.ih.ih(r.p);
            let _ = write!(out, "{}", r.p);
            for &d in &degrees {
                let _ = write!(out, " & {}", ip.coeff(d));
            }
            out.push_str(" \\\\\n");
        }
        out.push_str("\\end{tabular}\n");

        out.push_str("\n% summands\n\\begin{tabular}{rrrl}\n$p$ & $q$ & $\\delta_{pq}$ & multiplicities \\\\\n\\hline\n");
        for t in &self.summands {
            for rec in &t.summands {
                let _ = writeln!(out, "{} & {} & {} & {} \\\\", t.p, rec.q, rec.delta, latex_mults(rec.mults.iter()));
            }
        }
        out.push_str("\\end{tabular}\n");

        out.push_str("\n% perverse cohomology\n\\begin{tabular}{rl}\n$i$ & summands \\\\\n\\hline\n");
        for (i, row) in &self.perverse.rows {
            let cells: Vec<String> = row
                .iter()
                .map(|(support, m)| {
                    let name = match support {
                        Support::Whole => String::from("IC_S"),
                        Support::Stratum(q) => format!("IC_{{\\Delta_{q}}}"),
                    };
                    format!("${name}^{{\\oplus {m}}}$")
                })
                .collect();
            let _ = writeln!(out, "{i} & {} \\\\", cells.join(", "));
        }
        out.push_str("\\end{tabular}\n");

        if !self.stalks.is_empty() {
            out.push_str("\n% stalks\n\\begin{tabular}{rrl}\n$p$ & $q$ & stalk \\\\\n\\hline\n");
            for ((p, q), poly) in &self.stalks {
                let _ = writeln!(out, "{p} & {q} & ${}$ \\\\", latex_poly(poly));
            }
            out.push_str("\\end{tabular}\n");
        }

        out.push_str("\n% checks\n\\begin{tabular}{ll}\ncheck & status \\\\\n\\hline\n");
        for c in &self.checks {
            let _ = writeln!(out, "\\texttt{{{}}} & {} \\\\", c.name.replace('_', "\\_"), c.status.as_str());
        }
        out.push_str("\\end{tabular}\n");
        out
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn latex_mults<'a>(mults: impl Iterator<Item = (&'a i64, &'a BigInt)>) -> String {
    let parts: Vec<String> = mults.map(|(i, m)| format!("${i}\\mapsto {m}$")).collect();
    if parts.is_empty() {
        String::from("--")
    } else {
        parts.join(", ")
    }
}

fn latex_poly(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return String::from("0");
    }
    let mut out = String::new();
    for (n, (e, c)) in p.terms().enumerate() {
        let negative = c.sign() == num_bigint::Sign::Minus;
        let mag = c.magnitude().to_string();
        out.push_str(match (n, negative) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        });
        match (e, mag.as_str()) {
            (0, m) => out.push_str(m),
            (e, "1") => out.push_str(&format!("t^{{{e}}}")),
            (e, m) => out.push_str(&format!("{m}t^{{{e}}}")),
        }
    }
    out
}

pub fn render_summands(tables: &[SummandTable]) -> String {
    let mut out = String::new();
    for t in tables {
        let _ = writeln!(out, "  p = {}: IC(Delta_{}) x1 at 0", t.p, t.p);
        for rec in &t.summands {
            let _ = write!(out, "    q = {}, delta = {}:", rec.q, rec.delta);
            if rec.mults.is_empty() {
                out.push_str(" none");
            }
            for (n, (i, m)) in rec.mults.iter().enumerate() {
                let sep = if n == 0 { " " } else { ", " };
                let _ = write!(out, "{sep}x{m} at {i}");
            }
            out.push('\n');
        }
    }
    out
}

pub fn render_perverse(table: &PerverseTable) -> String {
    let mut out = String::new();
    for (i, row) in &table.rows {
        let cells: Vec<String> = row
            .iter()
            .map(|(support, m)| match support {
                Support::Whole => format!("IC_S x{m}"),
                Support::Stratum(q) => format!("IC(Delta_{q}) x{m}"),
            })
            .collect();
        let _ = writeln!(out, "  i = {i}: {}", cells.join(", "));
    }
    out
}

/// Pretty-prints like `serde_json`, but arrays built only from scalars and
/// scalar arrays stay on one line, so `[[0, 1], [2, 2]]` is not spread out.
fn write_json(out: &mut String, v: &Value, indent: usize) {
    let pad = |out: &mut String, n: usize| out.extend(std::iter::repeat_n(' ', 2 * n));
    match v {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (n, (k, item)) in map.iter().enumerate() {
                pad(out, indent + 1);
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_json(out, item, indent + 1);
                out.push_str(if n + 1 < map.len() { ",\n" } else { "\n" });
            }
            pad(out, indent);
            out.push('}');
        }
        Value::Array(items) if !items.iter().all(is_flat) => {
            out.push_str("[\n");
            for (n, item) in items.iter().enumerate() {
                pad(out, indent + 1);
                write_json(out, item, indent + 1);
                out.push_str(if n + 1 < items.len() { ",\n" } else { "\n" });
            }
            pad(out, indent);
            out.push(']');
        }
        other => out.push_str(&inline_json(other)),
    }
}

fn inline_json(v: &Value) -> String {
    match v {
        Value::Array(items) => format!("[{}]", items.iter().map(inline_json).collect::<Vec<_>>().join(", ")),
        other => other.to_string(),
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|x| !x.is_array() && !x.is_object()),
        Value::Object(_) => false,
        _ => true,
    }
}

pub fn big_to_json(n: &BigInt) -> Value {
    Value::Number(n.to_string().parse::<Number>().expect("integer literal"))
}

/// `[[exp, coeff], ...]` sorted by exponent.
pub fn poly_to_json(p: &LaurentPoly) -> Value {
    p.terms().map(|(e, c)| json!([e, big_to_json(c)])).collect()
}

pub fn poly_from_json(v: &Value) -> Option<LaurentPoly> {
    let mut out = LaurentPoly::zero();
    for pair in v.as_array()? {
        let [e, c] = pair.as_array()?.as_slice() else {
            return None;
        };
        let c: BigInt = match c {
            Value::Number(n) => n.to_string().parse().ok()?,
            _ => return None,
        };
        out.add_term(e.as_i64()?, c);
    }
    Some(out)
}
