mod render;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ringlab::deciders::*;
use ringlab::harness::{census, render_ledger, run_checks, Corpus, PropositionCheck, PropositionId};
use ringlab::{build_with, BuildOptions, Elem, Error, FiniteRing, RingSpec, StructureTables};
use serde::Serialize;
use serde_json::{json, Value};

/// Witness searches above this order use the constructive paths.
const EXHAUSTIVE_LIMIT: usize = 4096;

#[derive(Parser)]
#[command(name = "ringlab", version, about = "Finite ring laboratory")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify one ring.
    Classify {
        spec: String,
        #[arg(long)]
        json: bool,
        /// Include per-decider wall time.
        #[arg(long)]
        timings: bool,
        /// Print the element legend.
        #[arg(long)]
        show_elements: bool,
    },
    /// Print a re-validated witness for one element.
    Witness {
        spec: String,
        element: u64,
        property: Property,
        #[arg(long)]
        json: bool,
    },
    /// Run proposition checks and print the ledger.
    Verify {
        /// Comma separated ids, or `all`.
        #[arg(long, default_value = "all")]
        props: String,
        /// `default` or a file with one spec per line.
        #[arg(long, default_value = "default")]
        corpus: String,
        #[arg(long)]
        json: bool,
    },
    /// Classify every ring of a corpus.
    Census {
        /// File with one spec per line; the default corpus otherwise.
        #[arg(long)]
        specs: Option<PathBuf>,
        #[arg(long)]
        csv: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    Wnc,
    WncAlt,
    Clean,
    Nilclean,
    Exchange,
    Pireg,
    Spireg,
    Sreg,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::OrderOverCap { .. }) { 3 } else { 2 };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

type CmdResult = Result<u8, Failure>;

fn options() -> Result<BuildOptions, Failure> {
    Ok(BuildOptions::from_env()?)
}

fn load(spec: &str) -> Result<FiniteRing, Failure> {
    let parsed: RingSpec = spec.parse()?;
    Ok(build_with(&parsed, &options()?)?)
}

fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes());
}

fn classify_cmd(spec: &str, as_json: bool, timings: bool, show_elements: bool) -> CmdResult {
    let r = load(spec)?;
    let rep = classify(&r);
    if as_json {
        let mut doc = render::report_json(&rep, timings);
        if show_elements {
            doc["elements"] = r.elements().map(|a| r.render(a)).collect();
        }
        emit(&format!("{}\n", serde_json::to_string_pretty(&doc).expect("json")));
    } else {
        let mut text = render::report_text(&rep, timings);
        if show_elements {
            text.push_str(&render::legend(&r));
        }
        emit(&text);
    }
    Ok(0)
}

struct Found {
    fields: String,
    json: Value,
    trace: Vec<String>,
}

fn found<W: Serialize>(w: W, fields: String, trace: Vec<String>) -> Found {
    Found { fields, json: json!(w), trace }
}

fn wncl_fields(w: &WnclWitness) -> String {
    let form = match w.form {
        WitnessForm::Primal => "primal",
        WitnessForm::Alternate => "alternate",
    };
    format!("e={} q={} x={} ({form})", w.e, w.q, w.x)
}

/// Finds a witness and re-checks it; `Ok(None)` when the element lacks the property.
fn find_witness(r: &FiniteRing, a: Elem, prop: Property) -> Result<Option<Found>, Failure> {
    let s = StructureTables::new(r);
    let large = r.order() > EXHAUSTIVE_LIMIT;
    let out = match prop {
        Property::Wnc => {
            let w = if large { decide_wncl(&s, a) } else { wncl_witness(&s, a) };
            w.map(|w| w.check(r, a).map(|_| found(w, wncl_fields(&w), w.trace(r, a)))).transpose()?
        }
        Property::WncAlt => {
            let w = if large {
                match decide_wncl(&s, r.neg(a)) {
                    Some(p) => Some(primal_to_alternate(r, a, &p)?),
                    None => None,
                }
            } else {
                wncl_witness_alt(&s, a)?
            };
            w.map(|w| w.check(r, a).map(|_| found(w, wncl_fields(&w), w.trace(r, a)))).transpose()?
        }
        Property::Clean | Property::Nilclean => {
            let w = if matches!(prop, Property::Clean) { clean_witness(&s, a)? } else { nil_clean_witness(&s, a) };
            w.map(|w| {
                let second = match w.kind {
                    SumKind::Unit => "u",
                    SumKind::Nilpotent => "q",
                };
                w.check(r, a).map(|_| found(w, format!("e={} {second}={}", w.e, w.second), w.trace(r, a)))
            })
            .transpose()?
        }
        Property::Exchange => {
            let w = if large { decide_exchange(&s, a)? } else { exchange_witness(&s, a)? };
            w.map(|w| w.check(r, a).map(|_| found(w, format!("e={} r={} s={}", w.e, w.r, w.s), w.trace(r, a))))
                .transpose()?
        }
        Property::Pireg => pi_regular_witness(r, a)
            .map(|w| w.check(r, a).map(|_| found(w, format!("n={} r={}", w.n, w.r), w.trace(r, a))))
            .transpose()?,
        Property::Spireg => strong_pi_witness(r, a)?
            .map(|w| w.check(r, a).map(|_| found(w, format!("n={} r={} e={}", w.n, w.r, w.e), w.trace(r, a))))
            .transpose()?,
        Property::Sreg => strongly_regular_witness(r, a)
            .map(|w| w.check(r, a).map(|_| found(w, format!("r={}", w.r), w.trace(r, a))))
            .transpose()?,
    };
    Ok(out)
}

fn witness_cmd(spec: &str, element: u64, prop: Property, as_json: bool) -> CmdResult {
    let r = load(spec)?;
    let a = r.elem(element)?;
    let name = prop.to_possible_value().expect("named").get_name().to_string();
    let found = find_witness(&r, a, prop)?;
    if as_json {
        let doc = json!({
            "spec": r.spec_string(),
            "element": a,
            "property": name,
            "witness": found.as_ref().map(|f| f.json.clone()),
            "trace": found.as_ref().map(|f| f.trace.clone()),
        });
        emit(&format!("{}\n", serde_json::to_string_pretty(&doc).expect("json")));
    } else {
        match &found {
            Some(f) => {
                let mut text = format!("{name} witness for element {a} of {}\n{}\ntrace:\n", r.spec_string(), f.fields);
                for line in &f.trace {
                    text.push_str(&format!("  {line}\n"));
                }
                emit(&text);
            }
            None => emit("none\n"),
        }
    }
    Ok(if found.is_some() { 0 } else { 1 })
}

fn read_corpus(arg: &str) -> Result<Corpus, Failure> {
    let opts = options()?;
    if arg == "default" {
        return Ok(Corpus::default_corpus(&opts));
    }
    let text = fs::read_to_string(arg).map_err(|e| usage(format!("cannot read corpus {arg}: {e}")))?;
    Ok(Corpus::from_specs(&Corpus::parse_list(&text), &opts))
}

fn parse_props(arg: &str) -> Result<Vec<PropositionId>, Failure> {
    if arg.trim().eq_ignore_ascii_case("all") {
        return Ok(PropositionId::ALL.to_vec());
    }
    arg.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| p.parse::<PropositionId>().map_err(|_| usage(format!("unknown proposition id {:?}", p.trim()))))
        .collect()
}

fn build_failure_code(corpus: &Corpus) -> u8 {
    let errs: Vec<&Error> = corpus.entries.iter().filter_map(|e| e.ring.as_ref().err()).collect();
    if errs.is_empty() {
        0
    } else if errs.iter().all(|e| matches!(e, Error::OrderOverCap { .. })) {
        3
    } else {
        2
    }
}

fn verify_cmd(props: &str, corpus: &str, as_json: bool) -> CmdResult {
    let ids = parse_props(props)?;
    if ids.is_empty() {
        return Err(usage("no propositions selected"));
    }
    let corpus = read_corpus(corpus)?;
    let checks: Vec<PropositionCheck> = run_checks(&ids, &corpus);
    if as_json {
        emit(&format!("{}\n", serde_json::to_string_pretty(&checks).expect("json")));
    } else {
        emit(&render_ledger(&checks));
    }
    for e in &corpus.entries {
        if let Err(err) = &e.ring {
            eprintln!("error: {}: {err}", e.text);
        }
    }
    if checks.iter().any(|c| !c.passed()) {
        return Ok(1);
    }
    Ok(build_failure_code(&corpus))
}

fn census_cmd(specs: Option<&PathBuf>, csv_out: bool) -> CmdResult {
    let corpus = match specs {
        Some(p) => read_corpus(p.to_str().ok_or_else(|| usage("spec path is not UTF-8"))?)?,
        None => read_corpus("default")?,
    };
    let rows: Vec<Vec<String>> = census(&corpus).iter().map(render::census_row).collect();
    if csv_out {
        let mut w = csv::Writer::from_writer(std::io::stdout().lock());
        let write = |w: &mut csv::Writer<_>| -> csv::Result<()> {
            w.write_record(render::CSV_HEADER)?;
            for row in &rows {
                w.write_record(row)?;
            }
            w.flush()?;
            Ok(())
        };
        write(&mut w).map_err(|e| Failure { code: 1, message: e.to_string() })?;
    } else {
        emit(&render::table(&rows));
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.cmd {
        Cmd::Classify { spec, json, timings, show_elements } => classify_cmd(spec, *json, *timings, *show_elements),
        Cmd::Witness { spec, element, property, json } => witness_cmd(spec, *element, *property, *json),
        Cmd::Verify { props, corpus, json } => verify_cmd(props, corpus, *json),
        Cmd::Census { specs, csv } => census_cmd(specs.as_ref(), *csv),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
