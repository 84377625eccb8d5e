//! Command-line front end: factor, order, census, bch, rs, selftest.

use std::sync::Arc;

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::bch::{bch_spec_with, rs_spec_with, BchSpec};
use crate::census::{census_report, partition_identity_sides, verify_lemmas, CensusBranch};
use crate::cyclotomic::{factor_xe_minus_1_with, Factorization};
use crate::error::Result;
use crate::fields::{
    find_irreducible_modulus, make_field_with, Field, FieldElement, PrimePower,
    DEFAULT_MAX_CARDINALITY,
};
use crate::orders::{order_any, order_bruteforce_with_limit, DEFAULT_SCAN_LIMIT};
use crate::poly::{parse_element, parse_poly};

#[derive(Parser)]
#[command(
    name = "cyclex",
    version,
    about = "Orders of polynomials over finite fields and exponents of cyclic codes"
)]
struct Cli {
    /// Emit JSON on stdout instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Factor x^e - 1 over F_q, with the order of every irreducible factor.
    Factor {
        /// Ground field size (a prime power).
        #[arg(long)]
        q: u64,
        #[arg(long)]
        e: u64,
        /// Modulus for F_q over F_p when q is not prime (default: first
        /// irreducible in index order).
        #[arg(long)]
        base_modulus: Option<String>,
        /// Largest splitting field the factorization may build.
        #[arg(long, default_value_t = DEFAULT_MAX_CARDINALITY)]
        max_field: u64,
    },
    /// Order of a polynomial: the least e with g dividing x^e - 1.
    Order {
        #[arg(long)]
        q: u64,
        /// The polynomial, e.g. "x^6 + x^4 + x^3 + x^2 + 1" or "(x^2+1)^3".
        #[arg(long)]
        poly: String,
        #[arg(long)]
        base_modulus: Option<String>,
        /// Scan e = 1, 2, ... instead of the structured computation.
        #[arg(long)]
        brute: bool,
        /// Ceiling for the --brute scan.
        #[arg(long, default_value_t = DEFAULT_SCAN_LIMIT)]
        scan_limit: u64,
    },
    /// Count cyclic codes whose exponent is exactly e.
    Census {
        #[arg(long)]
        q: u64,
        #[arg(long, required_unless_present = "sweep", conflicts_with = "sweep")]
        e: Option<u64>,
        /// Also count exhaustively (the reported bound is always valid as a
        /// bound; this enumerates every divisor of x^e - 1).
        #[arg(long)]
        exact: bool,
        /// Run the census for every e up to N instead. Implies --exact.
        #[arg(long, value_name = "N")]
        sweep: Option<u64>,
        /// Enumeration ceiling for --exact.
        #[arg(long, default_value_t = crate::census::DEFAULT_ENUM_CAP)]
        enum_cap: u64,
        #[arg(long)]
        base_modulus: Option<String>,
    },
    /// BCH code over F_q with roots beta^a, ..., beta^(a+delta-2) in F_{q^m}.
    Bch {
        #[arg(long)]
        q: u64,
        /// Splitting field degree; the length is q^m - 1.
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 1)]
        a: u64,
        /// Designed distance (2 <= delta <= length).
        #[arg(long)]
        delta: u64,
        /// Modulus for the splitting field over F_q.
        #[arg(long)]
        modulus: Option<String>,
        /// Primitive element of the splitting field (default: smallest).
        #[arg(long)]
        beta: Option<String>,
        #[arg(long)]
        base_modulus: Option<String>,
    },
    /// Reed-Solomon code over F_q: roots beta^(a+1), ..., beta^(a+delta-1).
    Rs {
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 0)]
        a: u64,
        #[arg(long)]
        delta: u64,
        #[arg(long)]
        beta: Option<String>,
        #[arg(long)]
        base_modulus: Option<String>,
    },
    /// Run built-in known-answer checks; exits nonzero on any failure.
    Selftest,
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    let json = cli.json;
    let outcome = match cli.command {
        Command::Factor { q, e, base_modulus, max_field } => {
            cmd_factor(q, e, base_modulus.as_deref(), max_field, json)
        }
        Command::Order { q, poly, base_modulus, brute, scan_limit } => {
            cmd_order(q, &poly, base_modulus.as_deref(), brute, scan_limit, json)
        }
        Command::Census { q, e, exact, sweep, enum_cap, base_modulus } => {
            cmd_census(q, e, exact, sweep, enum_cap, base_modulus.as_deref(), json)
        }
        Command::Bch { q, m, a, delta, modulus, beta, base_modulus } => cmd_bch(
            q,
            m,
            a,
            delta,
            modulus.as_deref(),
            beta.as_deref(),
            base_modulus.as_deref(),
            json,
        ),
        Command::Rs { q, a, delta, beta, base_modulus } => {
            cmd_rs(q, a, delta, beta.as_deref(), base_modulus.as_deref(), json)
        }
        Command::Selftest => cmd_selftest(json),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn ground_field(q: u64, base_modulus: Option<&str>, limit: u64) -> Result<Arc<Field>> {
    let q = PrimePower::new(q)?;
    let base_modulus = match base_modulus {
        Some(text) => {
            let prime = Field::prime(q.p())?;
            Some(parse_poly(text, &prime)?)
        }
        None => None,
    };
    make_field_with(q, 1, None, base_modulus, limit)
}

fn factor_rows(fac: &Factorization) -> Vec<serde_json::Value> {
    fac.factors
        .iter()
        .map(|f| {
            json!({
                "poly": f.poly.to_string(),
                "degree": f.poly.degree().unwrap_or(0),
                "multiplicity": f.multiplicity,
                "order": f.order,
            })
        })
        .collect()
}

fn cmd_factor(
    q: u64,
    e: u64,
    base_modulus: Option<&str>,
    max_field: u64,
    json: bool,
) -> Result<i32> {
    let field = ground_field(q, base_modulus, max_field)?;
    let fac = factor_xe_minus_1_with(&field, e, max_field)?;
    if json {
        let doc = json!({
            "q": q,
            "e": e,
            "coprime_part": fac.e_coprime,
            "char_power": fac.p_power,
            "splitting_degree": fac.m,
            "factors": factor_rows(&fac),
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        return Ok(0);
    }
    println!(
        "x^{e} - 1 over {}: {} distinct irreducible factor(s), coprime part {}, multiplicity {}",
        field.describe(),
        fac.factors.len(),
        fac.e_coprime,
        fac.p_power,
    );
    let width = fac.factors.iter().map(|f| f.poly.to_string().len()).max().unwrap_or(0);
    for f in &fac.factors {
        println!(
            "  {:<width$}   multiplicity {}   order {}",
            f.poly.to_string(),
            f.multiplicity,
            f.order,
        );
    }
    Ok(0)
}

fn cmd_order(
    q: u64,
    poly: &str,
    base_modulus: Option<&str>,
    brute: bool,
    scan_limit: u64,
    json: bool,
) -> Result<i32> {
    let field = ground_field(q, base_modulus, DEFAULT_MAX_CARDINALITY)?;
    let g = parse_poly(poly, &field)?;
    if brute {
        let order = order_bruteforce_with_limit(&g, scan_limit)?;
        if json {
            let doc = json!({
                "q": q,
                "poly": g.to_string(),
                "order": order,
                "method": "brute",
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        } else {
            println!("order = {order}  (method: brute)");
        }
        return Ok(0);
    }
    let res = order_any(&g)?;
    if json {
        let witness: Vec<_> = res
            .witness
            .iter()
            .map(|w| {
                json!({
                    "factor": w.factor.to_string(),
                    "multiplicity": w.multiplicity,
                    "order": w.order,
                    "lifted_order": w.lifted_order,
                })
            })
            .collect();
        let doc = json!({
            "q": q,
            "poly": g.to_string(),
            "order": res.order,
            "method": res.method.tag(),
            "stripped_x": res.stripped_x,
            "witness": witness,
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        return Ok(0);
    }
    if res.stripped_x > 0 {
        println!(
            "order = {}  (method: {}, after stripping x^{})",
            res.order, res.method, res.stripped_x
        );
    } else {
        println!("order = {}  (method: {})", res.order, res.method);
    }
    if res.witness.len() > 1 || res.witness.iter().any(|w| w.multiplicity > 1) {
        let width =
            res.witness.iter().map(|w| w.factor.to_string().len()).max().unwrap_or(0);
        for w in &res.witness {
            println!(
                "  {:<width$}   multiplicity {}   order {}   order of the power {}",
                w.factor.to_string(),
                w.multiplicity,
                w.order,
                w.lifted_order,
            );
        }
    }
    Ok(0)
}

fn census_json(rep: &crate::census::CensusReport) -> serde_json::Value {
    let fac = &rep.factorization;
    let names = |ix: &[usize]| -> Vec<String> {
        ix.iter().map(|&i| fac.factors[i].poly.to_string()).collect()
    };
    let branch = match &rep.branch {
        CensusBranch::Coprime { m, t } => json!({
            "kind": "coprime",
            "splitting_degree": m,
            "full_order_factors": t,
        }),
        CensusBranch::CharDivides { s } => json!({
            "kind": "char-divides",
            "s": s,
        }),
    };
    json!({
        "q": rep.q,
        "e": rep.e,
        "coprime_part": fac.e_coprime,
        "char_power": fac.p_power,
        "factors": factor_rows(fac),
        "k_values": rep.k_values,
        "branch": branch,
        "m_set": names(&rep.m_set),
        "n_set": names(&rep.n_set),
        "s_set": names(&rep.s_set),
        "t_values": rep.t_values
            .iter()
            .map(|&(i, t)| json!({"factor": fac.factors[i].poly.to_string(), "t": t}))
            .collect::<Vec<_>>(),
        "lower_bound": rep.lower_bound_formula,
        "distinct_generators": rep.distinct_generators,
        "exact_count": rep.exact_count,
        "notes": rep.discrepancy_notes,
    })
}

fn cmd_census(
    q: u64,
    e: Option<u64>,
    exact: bool,
    sweep: Option<u64>,
    enum_cap: u64,
    base_modulus: Option<&str>,
    json: bool,
) -> Result<i32> {
    let field = ground_field(q, base_modulus, DEFAULT_MAX_CARDINALITY)?;
    if let Some(max_e) = sweep {
        return census_sweep(&field, max_e, enum_cap, json);
    }
    let e = e.expect("clap requires --e without --sweep");
    let rep = census_report(&field, e, exact, enum_cap)?;
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&census_json(&rep)).expect("serializable")
        );
        return Ok(0);
    }
    println!(
        "q = {q}, e = {e}  (coprime part {}, char power {})",
        rep.factorization.e_coprime, rep.factorization.p_power
    );
    let width = rep
        .factorization
        .factors
        .iter()
        .map(|f| f.poly.to_string().len())
        .max()
        .unwrap_or(0);
    for (f, k) in rep.factorization.factors.iter().zip(&rep.k_values) {
        println!(
            "  {:<width$}   multiplicity {}   order {}   k = {}",
            f.poly.to_string(),
            f.multiplicity,
            f.order,
            k,
        );
    }
    match &rep.branch {
        CensusBranch::Coprime { m, t } => {
            println!("branch: gcd(e, p) = 1, splitting degree {m}, full-order factors {t}");
        }
        CensusBranch::CharDivides { s } => {
            let names: Vec<String> = rep
                .s_set
                .iter()
                .map(|&i| rep.factorization.factors[i].poly.to_string())
                .collect();
            println!("branch: char divides e (s = {s}); forcing factors: {}", names.join(", "));
        }
    }
    println!("lower bound: {}", rep.lower_bound_formula);
    if rep.distinct_generators != rep.lower_bound_formula {
        println!("distinct generators behind the bound: {}", rep.distinct_generators);
    }
    if let Some(n) = rep.exact_count {
        println!("exact count: {n}");
    }
    if !rep.discrepancy_notes.is_empty() {
        println!("note: {}", rep.discrepancy_notes);
    }
    Ok(0)
}

fn census_sweep(field: &Arc<Field>, max_e: u64, enum_cap: u64, json: bool) -> Result<i32> {
    let mut rows = Vec::new();
    for e in 1..=max_e {
        let rep = census_report(field, e, true, enum_cap)?;
        rows.push((e, rep.lower_bound_formula, rep.exact_count.expect("exact requested")));
    }
    if json {
        let doc = json!({
            "q": field.cardinality(),
            "max_e": max_e,
            "rows": rows
                .iter()
                .map(|&(e, lb, ex)| json!({"e": e, "lower_bound": lb, "exact_count": ex}))
                .collect::<Vec<_>>(),
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        return Ok(0);
    }
    println!("census for every e up to {max_e} (q = {})", field.cardinality());
    for (e, lb, ex) in &rows {
        println!("  e = {e:<6}  lower bound {lb:<8}  exact {ex}");
    }
    Ok(0)
}

fn bch_json(spec: &BchSpec, q: u64, m: u32, json_extra: serde_json::Value) -> serde_json::Value {
    let mut doc = json!({
        "q": q,
        "m": m,
        "a": spec.a,
        "delta": spec.delta,
        "length": spec.length,
        "dimension": spec.dimension,
        "generator": spec.generator.to_string(),
        "exponent": spec.exponent,
        "beta": spec.beta.to_string(),
        "modulus": spec.ext.modulus().map(|h| h.to_string()),
        "defining_leaders": spec.defining_leaders,
        "corollary_applies": spec.delta_corollary_applies(),
    });
    if let (Some(obj), Some(extra)) = (doc.as_object_mut(), json_extra.as_object()) {
        for (k, v) in extra {
            obj.insert(k.clone(), v.clone());
        }
    }
    doc
}

fn print_spec_text(spec: &BchSpec, kind: &str) {
    println!(
        "{kind} over {}: length {}, designed distance {}, a = {}",
        spec.base.describe(),
        spec.length,
        spec.delta,
        spec.a,
    );
    if spec.ext.as_ref() != spec.base.as_ref() {
        println!("splitting field {}", spec.ext.describe());
    }
    println!("beta      = {}", spec.beta);
    println!("generator = {}", spec.generator);
    println!("dimension = {}", spec.dimension);
    println!("exponent  = {}", spec.exponent);
    let leaders: Vec<String> = spec.defining_leaders.iter().map(u64::to_string).collect();
    println!("defining coset leaders: {}", leaders.join(", "));
    if spec.delta_corollary_applies() {
        println!("exponent equals length (designed distance above 2)");
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_bch(
    q: u64,
    m: u32,
    a: u64,
    delta: u64,
    modulus: Option<&str>,
    beta: Option<&str>,
    base_modulus: Option<&str>,
    json: bool,
) -> Result<i32> {
    let field = ground_field(q, base_modulus, DEFAULT_MAX_CARDINALITY)?;
    let modulus_poly = match modulus {
        Some(text) => Some(parse_poly(text, &field)?),
        None => None,
    };
    let beta_el: Option<FieldElement> = match beta {
        Some(text) => {
            let ext = if m <= 1 {
                field.clone()
            } else {
                let h = match &modulus_poly {
                    Some(h) => h.clone(),
                    None => find_irreducible_modulus(&field, m)?,
                };
                Field::extension(&field, h)?
            };
            Some(parse_element(text, &ext)?)
        }
        None => None,
    };
    let spec =
        bch_spec_with(&field, m, a, delta, modulus_poly, beta_el, DEFAULT_MAX_CARDINALITY)?;
    if json {
        let doc = bch_json(&spec, q, m, json!({}));
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
    } else {
        print_spec_text(&spec, "BCH code");
    }
    Ok(0)
}

fn cmd_rs(
    q: u64,
    a: u64,
    delta: u64,
    beta: Option<&str>,
    base_modulus: Option<&str>,
    json: bool,
) -> Result<i32> {
    let field = ground_field(q, base_modulus, DEFAULT_MAX_CARDINALITY)?;
    let beta_el = match beta {
        Some(text) => Some(parse_element(text, &field)?),
        None => None,
    };
    let spec = rs_spec_with(&field, a, delta, beta_el)?;
    if json {
        // report the caller's a, not the shifted start index
        let doc = bch_json(&spec, q, 1, json!({ "a": a }));
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
    } else {
        print_spec_text(&spec, "Reed-Solomon code");
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// selftest
// ---------------------------------------------------------------------------

type Check = fn() -> Result<bool>;

fn selftest_cases() -> Vec<(&'static str, Check)> {
    vec![
        ("order of x^2 + x + 1 over F_2 is 3", || {
            let f2 = Field::prime(2)?;
            let g = parse_poly("x^2+x+1", &f2)?;
            Ok(crate::orders::order_of(&g)? == 3)
        }),
        ("order of (x^2 + x + 1)(x^4 + x^3 + x^2 + x + 1) is 15", || {
            let f2 = Field::prime(2)?;
            let g = parse_poly("(x^2+x+1)(x^4+x^3+x^2+x+1)", &f2)?;
            Ok(crate::orders::order_of(&g)? == 15)
        }),
        ("x^12 - 1 over F_3: three cubed factors of orders 1, 2, 4", || {
            let f3 = Field::prime(3)?;
            let fac = crate::cyclotomic::factor_xe_minus_1(&f3, 12)?;
            let mut orders: Vec<u64> = fac.factors.iter().map(|f| f.order).collect();
            orders.sort_unstable();
            Ok(fac.factors.len() == 3
                && fac.factors.iter().all(|f| f.multiplicity == 3)
                && orders == [1, 2, 4])
        }),
        ("census at q = 3, e = 12: lower bound 32, exact 44", || {
            let f3 = Field::prime(3)?;
            let rep = census_report(&f3, 12, true, crate::census::DEFAULT_ENUM_CAP)?;
            Ok(rep.lower_bound_formula == 32
                && rep.distinct_generators == 32
                && rep.exact_count == Some(44))
        }),
        ("length-15 binary BCH at a = 5, delta = 3: exponent 15", || {
            let f2 = Field::prime(2)?;
            let spec = crate::bch::bch_spec(&f2, 4, 5, 3, None)?;
            Ok(spec.exponent == 15
                && spec.generator.to_string() == "x^6 + x^4 + x^3 + x^2 + 1")
        }),
        ("length-8 ternary BCH at delta = 4: generator x^4 + x^3 + x + 2", || {
            let f3 = Field::prime(3)?;
            let spec = crate::bch::bch_spec(&f3, 2, 1, 4, None)?;
            Ok(spec.generator.to_string() == "x^4 + x^3 + x + 2" && spec.exponent == 8)
        }),
        ("Reed-Solomon over F_7 at delta = 3: exponent 6", || {
            let f7 = Field::prime(7)?;
            Ok(crate::bch::rs_exponent(&f7, 0, 3)? == 6)
        }),
        ("partition identity at q = 2, n = 6", || {
            let f2 = Field::prime(2)?;
            let (lhs, rhs) = partition_identity_sides(&f2, 6)?;
            Ok(lhs == rhs && lhs == 9)
        }),
        ("coset and order checks pass at q = 3, e = 12", || {
            let f3 = Field::prime(3)?;
            Ok(verify_lemmas(&f3, 12)?.all_pass)
        }),
    ]
}

fn cmd_selftest(json: bool) -> Result<i32> {
    let mut rows = Vec::new();
    let mut failed = 0usize;
    for (name, check) in selftest_cases() {
        let ok = match check() {
            Ok(ok) => ok,
            Err(e) => {
                if !json {
                    eprintln!("  ({name}: {e})");
                }
                false
            }
        };
        if !ok {
            failed += 1;
        }
        if json {
            rows.push(json!({ "name": name, "ok": ok }));
        } else {
            println!("{} — {name}", if ok { "ok  " } else { "FAIL" });
        }
    }
    let passed = rows.len().max(selftest_cases().len()) - failed;
    if json {
        let doc = json!({ "passed": passed, "failed": failed, "cases": rows });
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
    } else {
        println!("{passed} passed, {failed} failed");
    }
    Ok(if failed == 0 { 0 } else { 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selftest_all_green() {
        for (name, check) in selftest_cases() {
            assert!(check().unwrap(), "{name}");
        }
    }

    #[test]
    fn cli_parses() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
