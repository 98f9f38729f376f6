use ringlab::deciders::ClassificationReport;
use ringlab::{Error, FiniteRing};
use serde_json::{json, Value};

pub const CSV_HEADER: [&str; 17] = [
    "spec", "order", "wnc", "clean", "nilclean", "exchange", "pireg", "spireg", "sreg", "abelian", "uniq_e", "uniq_q",
    "|Id|", "|Nil|", "|U|", "|J|", "bidx",
];

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "n/a".to_string(), |x| x.to_string())
}

pub fn report_json(rep: &ClassificationReport, timings: bool) -> Value {
    json!({
        "spec": rep.spec,
        "order": rep.order,
        "properties": rep.properties,
        "counts": rep.counts,
        "bounded_index": rep.bounded_index,
        "timings": if timings { json!(rep.timings) } else { Value::Null },
    })
}

pub fn report_text(rep: &ClassificationReport, timings: bool) -> String {
    let p = &rep.properties;
    let c = &rep.counts;
    let mut out = format!("spec: {}\norder: {}\nunital: {}\nproperties:\n", rep.spec, rep.order, rep.unital);
    for (name, v) in [
        ("weakly_nil_clean", p.weakly_nil_clean),
        ("clean", p.clean),
        ("nil_clean", p.nil_clean),
        ("exchange", p.exchange),
        ("pi_regular", p.pi_regular),
        ("strongly_pi_regular", p.strongly_pi_regular),
        ("strongly_regular", p.strongly_regular),
        ("abelian", p.abelian),
        ("unique_idempotent_all", p.unique_idempotent_all),
        ("unique_nilpotent_all", p.unique_nilpotent_all),
    ] {
        out.push_str(&format!("  {name}: {}\n", opt(v)));
    }
    out.push_str(&format!(
        "counts:\n  id: {}\n  nil: {}\n  unit: {}\n  center: {}\n  radical: {}\nbounded_index: {}\n",
        c.id,
        c.nil,
        opt(c.unit),
        c.center,
        opt(c.radical),
        rep.bounded_index
    ));
    if timings {
        if let Some(t) = &rep.timings {
            out.push_str("timings_ms:\n");
            for (k, v) in t {
                out.push_str(&format!("  {k}: {v:.3}\n"));
            }
        }
    }
    out
}

pub fn legend(r: &FiniteRing) -> String {
    let mut out = String::from("elements:\n");
    for a in r.elements() {
        out.push_str(&format!("  {a}: {}\n", r.render(a)));
    }
    out
}

fn cell(v: Option<bool>) -> String {
    v.map_or_else(|| "NA".to_string(), |b| b.to_string())
}

pub fn census_row(row: &Result<ClassificationReport, (String, Error)>) -> Vec<String> {
    match row {
        Ok(rep) => {
            let p = &rep.properties;
            let c = &rep.counts;
            vec![
                rep.spec.clone(),
                rep.order.to_string(),
                cell(p.weakly_nil_clean),
                cell(p.clean),
                cell(p.nil_clean),
                cell(p.exchange),
                cell(p.pi_regular),
                cell(p.strongly_pi_regular),
                cell(p.strongly_regular),
                cell(p.abelian),
                cell(p.unique_idempotent_all),
                cell(p.unique_nilpotent_all),
                c.id.to_string(),
                c.nil.to_string(),
                c.unit.map_or_else(|| "NA".into(), |u| u.to_string()),
                c.radical.map_or_else(|| "NA".into(), |j| j.to_string()),
                rep.bounded_index.to_string(),
            ]
        }
        Err((spec, err)) => {
            let mut cells = vec![spec.clone(), format!("error: {err}")];
            cells.resize(CSV_HEADER.len(), String::new());
            cells
        }
    }
}

pub fn table(rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = CSV_HEADER.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(CSV_HEADER.to_vec());
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}
