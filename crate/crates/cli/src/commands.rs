use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::Args;
use rgroup_core::{
    classify, induced_parameter, run_fuzz, unitary_maximal_levi_r_group,
    validate_inducing, validate_unitary_inducing, verify_theorem, weyl_quotient, Entry, Error,
    FuzzBounds, GroupFamily, InducingData, OracleCheck, OracleOptions, UnitaryInducingData,
    UnitaryVerificationResult, ValidationReport, VerificationResult,
};
use serde_json::{json, Value};

use rgroup_cli::instance::{InstanceFile, LoadError, Problem};
use crate::{parse_family, Side};

const OK: u8 = 0;
const DOMAIN: u8 = 1;
const USAGE: u8 = 2;

#[derive(Debug, Args)]
pub struct FuzzArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1000)]
    pub count: u64,
    #[arg(long, value_parser = parse_family, default_value = "sp")]
    pub family: GroupFamily,
    #[arg(long, default_value_t = 5)]
    pub max_deltas: usize,
    #[arg(long, default_value_t = 4)]
    pub max_dim: u32,
    #[arg(long, default_value_t = 5)]
    pub max_a: u32,
    #[arg(long, default_value_t = 3)]
    pub max_mult: u32,
    #[arg(long, default_value_t = 6)]
    pub max_residual_rank: u32,
    /// Also run the Weyl-group oracle on every instance.
    #[arg(long)]
    pub oracle: bool,
    /// Directory for replay files of failing instances.
    #[arg(long)]
    pub out_dir: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

enum Loaded {
    Ready(InstanceFile, Problem),
    Exit(u8),
}

fn load(path: &Path, json: bool) -> Loaded {
    let file = match InstanceFile::read(path) {
        Ok(f) => f,
        Err(e) => return Loaded::Exit(report_load_error(None, &e, json)),
    };
    match file.problem() {
        Ok(p) => Loaded::Ready(file, p),
        Err(e) => Loaded::Exit(report_load_error(Some(&file), &e, json)),
    }
}

fn report_load_error(file: Option<&InstanceFile>, e: &LoadError, json: bool) -> u8 {
    match e {
        LoadError::Parse(msg) => {
            if json {
                println!("{}", json!({ "error": { "kind": "parse", "message": msg } }));
            } else {
                eprintln!("parse error: {msg}");
            }
            USAGE
        }
        LoadError::Domain(report) => {
            emit_validation(file, report, json);
            DOMAIN
        }
    }
}

fn violations_json(report: &ValidationReport) -> Value {
    Value::Array(
        report
            .violations
            .iter()
            .map(|v| json!({ "rule": v.rule.tag(), "message": v.message }))
            .collect(),
    )
}

fn with_results(file: Option<&InstanceFile>, results: Value) -> Value {
    let mut out = match file {
        Some(f) => serde_json::to_value(f).expect("instance files always serialize"),
        None => json!({}),
    };
    out["results"] = results;
    out
}

fn emit_validation(file: Option<&InstanceFile>, report: &ValidationReport, json: bool) {
    if json {
        let results = json!({ "valid": report.is_valid(), "violations": violations_json(report) });
        println!("{}", with_results(file, results));
    } else if report.is_valid() {
        println!("valid");
    } else {
        println!("invalid: {} violation(s)", report.violations.len());
        for v in &report.violations {
            println!("  {v}");
        }
    }
}

fn validation_of(problem: &Problem) -> ValidationReport {
    match problem {
        Problem::Classical(pi) => validate_inducing(pi),
        Problem::Unitary(pi) => validate_unitary_inducing(pi),
    }
}

pub fn validate(path: &Path, json: bool) -> u8 {
    let (file, problem) = match load(path, json) {
        Loaded::Ready(f, p) => (f, p),
        Loaded::Exit(code) => return code,
    };
    let report = validation_of(&problem);
    emit_validation(Some(&file), &report, json);
    if report.is_valid() {
        OK
    } else {
        DOMAIN
    }
}

fn domain_error(file: &InstanceFile, e: &Error, json: bool) -> u8 {
    if json {
        println!("{}", with_results(Some(file), json!({ "error": e.to_string() })));
    } else {
        eprintln!("error: {e}");
    }
    DOMAIN
}

/// Loads and validates; on failure prints the report and yields the exit code.
fn load_valid(path: &Path, json: bool) -> Result<(InstanceFile, Problem), u8> {
    let (file, problem) = match load(path, json) {
        Loaded::Ready(f, p) => (f, p),
        Loaded::Exit(code) => return Err(code),
    };
    let report = validation_of(&problem);
    if !report.is_valid() {
        emit_validation(Some(&file), &report, json);
        return Err(DOMAIN);
    }
    Ok((file, problem))
}

fn ranks_line(side: Side, ks: u32, arthur: u32) -> String {
    match side {
        Side::Ks => format!("ks={ks}"),
        Side::Arthur => format!("arthur={arthur}"),
        Side::Both => {
            let verdict = if ks == arthur { "agree" } else { "disagree" };
            format!("ks={ks} arthur={arthur} {verdict}")
        }
    }
}

fn oracle_line(check: &OracleCheck, expected: u32) -> (String, bool) {
    match check {
        OracleCheck::NotRun => (String::new(), true),
        OracleCheck::Rank(r) => {
            let ok = *r == expected;
            (format!("oracle={r} {}", if ok { "agree" } else { "disagree" }), ok)
        }
        OracleCheck::Skipped(why) => (format!("oracle=skipped ({why})"), true),
    }
}

fn oracle_json(check: &OracleCheck) -> Value {
    match check {
        OracleCheck::NotRun => Value::Null,
        OracleCheck::Rank(r) => json!(r),
        OracleCheck::Skipped(why) => json!({ "skipped": why }),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn witness_table(r: &VerificationResult) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "  {:<16} {:>4}  {:<9}  {:<9}  {:<7}  counted",
        "delta", "mult", "self-dual", "same-type", "in-Jord"
    );
    for w in &r.witness {
        let same = w.same_type.map_or("-", yes_no);
        let _ = writeln!(
            out,
            "  {:<16} {:>4}  {:<9}  {:<9}  {:<7}  {}",
            w.delta.to_string(),
            w.multiplicity,
            yes_no(w.self_dual),
            same,
            yes_no(w.in_jordan),
            yes_no(w.counted)
        );
    }
    out
}

fn classical_rgroup(file: &InstanceFile, pi: &InducingData, side: Side, oracle: bool, json: bool) -> u8 {
    let options = oracle.then(OracleOptions::default);
    let r = match verify_theorem(pi, options) {
        Ok(r) => r,
        Err(e) => return domain_error(file, &e, json),
    };
    let (oracle_text, oracle_ok) = oracle_line(&r.oracle, r.arthur_rank);
    let agree = side != Side::Both || r.agree;
    if json {
        let witness: Vec<Value> = r
            .witness
            .iter()
            .map(|w| {
                json!({
                    "delta": w.delta.to_string(),
                    "multiplicity": w.multiplicity,
                    "self_dual": w.self_dual,
                    "same_type": w.same_type,
                    "in_jordan": w.in_jordan,
                    "counted": w.counted,
                })
            })
            .collect();
        let mut results = json!({
            "group": pi.ambient_group().to_string(),
            "levi": pi.levi_shape().to_string(),
            "parameter": r.parameter.to_string(),
            "centralizer": r.centralizer.to_string(),
            "witness": witness,
            "oracle": oracle_json(&r.oracle),
        });
        if side != Side::Arthur {
            results["ks_rank"] = json!(r.ks_rank);
        }
        if side != Side::Ks {
            results["arthur_rank"] = json!(r.arthur_rank);
        }
        if side == Side::Both {
            results["agree"] = json!(r.agree);
        }
        println!("{}", with_results(Some(file), results));
    } else {
        println!("group: {}", pi.ambient_group());
        println!("levi: {}", pi.levi_shape());
        println!("parameter: {}", r.parameter);
        println!("centralizer: {}", r.centralizer);
        if !r.witness.is_empty() {
            print!("{}", witness_table(&r));
        }
        println!("{}", ranks_line(side, r.ks_rank, r.arthur_rank));
        if !oracle_text.is_empty() {
            println!("{oracle_text}");
        }
    }
    if agree && oracle_ok {
        OK
    } else {
        DOMAIN
    }
}

fn unitary_verification(pi: &UnitaryInducingData) -> Result<UnitaryVerificationResult, Error> {
    let (delta, _) = &pi.deltas[0];
    unitary_maximal_levi_r_group(delta, &pi.sigma)
}

fn unitary_rgroup(
    file: &InstanceFile,
    pi: &UnitaryInducingData,
    side: Side,
    oracle: bool,
    json: bool,
) -> u8 {
    let r = match unitary_verification(pi) {
        Ok(r) => r,
        Err(e) => return domain_error(file, &e, json),
    };
    let check = if oracle {
        match weyl_quotient(&r.centralizer, OracleOptions::default()) {
            Ok(q) => OracleCheck::Rank(q.rank),
            Err(Error::BoundExceeded(why)) => OracleCheck::Skipped(why),
            Err(e) => return domain_error(file, &e, json),
        }
    } else {
        OracleCheck::NotRun
    };
    let (oracle_text, oracle_ok) = oracle_line(&check, r.arthur_rank);
    let phi_e = r
        .phi_e
        .iter()
        .map(|(s, m)| format!("{m}·{s}"))
        .collect::<Vec<_>>()
        .join(" ⊕ ");
    let agree = side != Side::Both || r.agree;
    if json {
        let mut results = json!({
            "group": format!("U({})", r.ambient_rank),
            "case": r.case.to_string(),
            "phi_e": phi_e,
            "centralizer": r.centralizer.to_string(),
            "oracle": oracle_json(&check),
        });
        if side != Side::Arthur {
            results["ks_rank"] = json!(r.ks_rank);
        }
        if side != Side::Ks {
            results["arthur_rank"] = json!(r.arthur_rank);
        }
        if side == Side::Both {
            results["agree"] = json!(r.agree);
        }
        println!("{}", with_results(Some(file), results));
    } else {
        println!("group: U({})", r.ambient_rank);
        println!("levi: GL({}, E) × U({})", pi.deltas[0].0.dim(), pi.sigma.n);
        println!("case: {}", r.case);
        println!("phi_E: {phi_e}");
        println!("centralizer: {}", r.centralizer);
        println!("{}", ranks_line(side, r.ks_rank, r.arthur_rank));
        if !oracle_text.is_empty() {
            println!("{oracle_text}");
        }
    }
    if agree && oracle_ok {
        OK
    } else {
        DOMAIN
    }
}

pub fn rgroup(path: &Path, side: Side, oracle: bool, json: bool) -> u8 {
    match load_valid(path, json) {
        Err(code) => code,
        Ok((file, Problem::Classical(pi))) => classical_rgroup(&file, &pi, side, oracle, json),
        Ok((file, Problem::Unitary(pi))) => unitary_rgroup(&file, &pi, side, oracle, json),
    }
}

fn entries_text(entries: &[Entry]) -> String {
    if entries.is_empty() {
        return "-".into();
    }
    entries.iter().map(Entry::to_string).collect::<Vec<_>>().join(", ")
}

fn entries_json(entries: &[Entry]) -> Value {
    Value::Array(entries.iter().map(|e| json!(e.to_string())).collect())
}

pub fn explain(path: &Path, json: bool) -> u8 {
    let (file, problem) = match load_valid(path, json) {
        Ok(x) => x,
        Err(code) => return code,
    };
    let pi = match problem {
        Problem::Classical(pi) => pi,
        Problem::Unitary(pi) => return explain_unitary(&file, &pi, json),
    };
    let group = pi.ambient_group();
    let phi = match induced_parameter(&pi) {
        Ok(p) => p,
        Err(e) => return domain_error(&file, &e, json),
    };
    let (c, desc) = match classify(&phi, group).and_then(|c| Ok((c, rgroup_core::centralizer(&phi, group)?))) {
        Ok(x) => x,
        Err(e) => return domain_error(&file, &e, json),
    };
    if json {
        let results = json!({
            "group": group.to_string(),
            "levi": pi.levi_shape().to_string(),
            "parameter": phi.to_string(),
            "dual_pairs": entries_json(&c.dual_pairs),
            "opposite_type": entries_json(&c.opposite_type),
            "same_type_odd_mult": entries_json(&c.same_type_odd_mult),
            "same_type_even_mult": entries_json(&c.same_type_even_mult),
            "p": c.p(), "q": c.q(), "r": c.r(), "s": c.s(), "d": c.d(),
            "centralizer": desc.to_string(),
        });
        println!("{}", with_results(Some(&file), results));
    } else {
        println!("group: {group}");
        println!("levi: {}", pi.levi_shape());
        println!("parameter: {phi}");
        println!("dual pairs (GL):                 {}", entries_text(&c.dual_pairs));
        println!("opposite type (Sp):              {}", entries_text(&c.opposite_type));
        println!("same type, odd multiplicity:     {}", entries_text(&c.same_type_odd_mult));
        println!("same type, even multiplicity:    {}", entries_text(&c.same_type_even_mult));
        println!("p={} q={} r={} s={} d={}", c.p(), c.q(), c.r(), c.s(), c.d());
        println!("centralizer: {desc}");
        println!("R ≅ {}", rgroup_core::ElementaryTwoGroup::new(c.d() as u32));
    }
    OK
}

fn explain_unitary(file: &InstanceFile, pi: &UnitaryInducingData, json: bool) -> u8 {
    let r = match unitary_verification(pi) {
        Ok(r) => r,
        Err(e) => return domain_error(file, &e, json),
    };
    let rows: Vec<(String, u32, String, String)> = r
        .phi_e
        .iter()
        .zip(&r.centralizer.factors)
        .map(|((s, m), f)| {
            let duality = match s.duality() {
                rgroup_core::ConjugateDuality::ConjSelfDual { lambda } => format!("λ={lambda}"),
                rgroup_core::ConjugateDuality::NotConjSelfDual { .. } => "not conj-self-dual".into(),
            };
            (s.to_string(), *m, duality, f.to_string())
        })
        .collect();
    if json {
        let summands: Vec<Value> = rows
            .iter()
            .map(|(s, m, d, f)| json!({ "summand": s, "multiplicity": m, "duality": d, "factor": f }))
            .collect();
        let results = json!({
            "group": format!("U({})", r.ambient_rank),
            "case": r.case.to_string(),
            "summands": summands,
            "centralizer": r.centralizer.to_string(),
        });
        println!("{}", with_results(Some(file), results));
    } else {
        println!("group: U({})", r.ambient_rank);
        println!("case: {}", r.case);
        for (s, m, d, f) in rows {
            println!("  {m}·{s:<12} {d:<20} {f}");
        }
        println!("centralizer: {}", r.centralizer);
    }
    OK
}

pub fn fuzz(args: &FuzzArgs) -> u8 {
    let bounds = FuzzBounds {
        max_deltas: args.max_deltas,
        max_dim: args.max_dim,
        max_a: args.max_a,
        max_mult: args.max_mult,
        max_residual_rank: args.max_residual_rank,
        family: args.family,
    };
    let options = args.oracle.then(OracleOptions::default);
    let summary = match run_fuzz(args.seed, args.count, &bounds, options) {
        Ok(s) => s,
        Err(e @ Error::BoundsInfeasible(_)) => {
            eprintln!("error: {e}");
            return USAGE;
        }
        Err(e) => {
            eprintln!("error: {e}");
            return DOMAIN;
        }
    };
    let mut written = Vec::new();
    if let Some(dir) = &args.out_dir {
        if let Err(e) = fs::create_dir_all(dir) {
            eprintln!("error: cannot create {}: {e}", dir.display());
            return USAGE;
        }
        for f in &summary.failures {
            let path = dir.join(format!("fuzz-{}-{}.json", args.family.short_name(), f.seed));
            if let Err(e) = InstanceFile::from_classical(&f.instance).write(&path) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return USAGE;
            }
            written.push(path);
        }
    }
    if args.json {
        let failures: Vec<Value> = summary
            .failures
            .iter()
            .map(|f| {
                json!({
                    "index": f.index,
                    "seed": f.seed,
                    "ks_rank": f.result.ks_rank,
                    "arthur_rank": f.result.arthur_rank,
                    "oracle": oracle_json(&f.result.oracle),
                    "instance": serde_json::to_value(InstanceFile::from_classical(&f.instance))
                        .expect("instance files always serialize"),
                })
            })
            .collect();
        println!(
            "{}",
            json!({
                "seed": args.seed,
                "count": summary.total,
                "family": args.family.short_name(),
                "agreed": summary.agreed,
                "failures": failures,
            })
        );
    } else {
        for f in &summary.failures {
            println!(
                "FAIL index={} seed={} ks={} arthur={} {}",
                f.index, f.seed, f.result.ks_rank, f.result.arthur_rank, f.instance
            );
        }
        for p in &written {
            println!("wrote {}", p.display());
        }
        println!("{}/{} agree", summary.agreed, summary.total);
    }
    if summary.all_agree() {
        OK
    } else {
        DOMAIN
    }
}
