use std::fmt::Write as _;
use std::sync::Arc;

use matprod_regseq::algebra::{format_monomial_in, format_poly, PolyRing, Polynomial};
use matprod_regseq::grobner::{buchberger, BuchbergerOptions, GrobnerError};
use matprod_regseq::regseq::{
    certify_sequence, greedy_extend, sequence_oracle, CandidateOutcome, OracleError, OracleMethod,
    RegularityCertificate, StepKind, Verdict,
};
use matprod_regseq::xypattern::{
    build_ftilde, certify_theorem, counterexample_n2, is_selected, matrix_ring, GenericProduct,
    OrderChoice, PatternSpec, WitnessCheck,
};
use serde::Serialize;
use serde_json::json;

use crate::input::{infer_ring, parse_lines, polynomial_lines, read_file};
use crate::{Config, Emission, Failure, Format};

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn oracle_failure(e: OracleError) -> Failure {
    match e {
        OracleError::Inconclusive(msg) => Failure::Inconclusive(msg),
        other => Failure::Usage(other.to_string()),
    }
}

fn grobner_failure(e: GrobnerError) -> Failure {
    match e {
        GrobnerError::Budget { .. } => Failure::Inconclusive(e.to_string()),
        other => Failure::Usage(other.to_string()),
    }
}

fn pretty<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

fn product(cfg: &Config) -> Result<GenericProduct, Failure> {
    let ring = matrix_ring(cfg.n, cfg.order, cfg.field).map_err(usage)?;
    GenericProduct::new(&ring).map_err(usage)
}

/// A parsed `--input` file: its ring and polynomials.
type InputSequence = (Arc<PolyRing>, Vec<Polynomial>);

/// Polynomials from `--input`, if given, in the ring they determine.
fn input_sequence(cfg: &Config) -> Result<Option<InputSequence>, Failure> {
    let Some(path) = &cfg.input else {
        return Ok(None);
    };
    let text = read_file(path)?;
    let lines = polynomial_lines(&text);
    if lines.is_empty() {
        return Err(Failure::Usage(format!("{} contains no polynomials", path.display())));
    }
    let ring = infer_ring(&lines, cfg.n, cfg.order, cfg.field)?;
    let polys = parse_lines(&lines, &ring)?;
    Ok(Some((ring, polys)))
}

fn selected_f(g: &GenericProduct) -> Vec<(String, Polynomial)> {
    let spec = PatternSpec::new(g.n()).expect("n >= 2");
    spec.f
        .iter()
        .map(|&(s, t)| (format!("f[{s},{t}]"), g.entry(s, t).expect("in range")))
        .collect()
}

pub fn gen(cfg: &Config) -> Result<Emission, Failure> {
    let g = product(cfg)?;
    let spec = PatternSpec::new(cfg.n).map_err(usage)?;
    let f = selected_f(&g);
    let ftilde = build_ftilde(&g);
    let text = match cfg.format {
        Format::Json => pretty(&json!({
            "n": cfg.n,
            "order": cfg.order,
            "field": cfg.field.to_string(),
            "matrix": spec.render_matrix(),
            "pattern": spec,
            "entries": g.entries().iter().map(|((i, j), p)| json!({
                "label": format!("f[{i},{j}]"),
                "selected": is_selected(cfg.n, *i, *j),
                "poly": format_poly(p),
            })).collect::<Vec<_>>(),
            "f": f.iter().map(|(l, p)| json!({"label": l, "poly": format_poly(p)})).collect::<Vec<_>>(),
            "ftilde": ftilde.iter().map(|(item, p)| json!({"label": item.label(), "poly": format_poly(p)})).collect::<Vec<_>>(),
        })),
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "n = {}, |F| = {}, |F~| = {}", cfg.n, f.len(), ftilde.len()).unwrap();
            writeln!(out).unwrap();
            out.push_str(&spec.render_matrix());
            writeln!(out).unwrap();
            let labels: Vec<&str> = f.iter().map(|(l, _)| l.as_str()).collect();
            writeln!(out, "F  = {}", labels.join(", ")).unwrap();
            let tl: Vec<String> = ftilde.iter().map(|(i, _)| i.label()).collect();
            writeln!(out, "F~ = {}", tl.join(", ")).unwrap();
            writeln!(out).unwrap();
            for (l, p) in &f {
                writeln!(out, "{l} = {}", format_poly(p)).unwrap();
            }
            out
        }
    };
    Ok(Emission { text, holds: true })
}

fn certificate_text(cert: &RegularityCertificate) -> String {
    let ring = &cert.ring;
    let mut out = String::new();
    writeln!(out, "order: {}, field: {}", cert.order.name(), ring.field()).unwrap();
    for (k, s) in cert.steps.iter().enumerate() {
        let label = s.label.clone().unwrap_or_else(|| format!("#{}", k + 1));
        let lead = format_monomial_in(&s.effective.effective_lead, ring);
        match (&s.kind, &s.technical) {
            (StepKind::Technical, Some(t)) => {
                let subs: Vec<String> = t
                    .subtractions
                    .iter()
                    .map(|sub| {
                        let mult = Polynomial::from_term(ring, sub.multiplier.coeff.clone(), sub.multiplier.mono.clone());
                        format!("({})*{}", format_poly(&mult), format_monomial_in(&sub.monomial, ring))
                    })
                    .collect();
                writeln!(
                    out,
                    "{:>3}  TECHNICAL       {label:<8} lead {lead}  minus [{}]{}",
                    k + 1,
                    subs.join(", "),
                    if t.strict_form { "" } else { "  (relaxed multipliers)" }
                )
                .unwrap();
            }
            _ => {
                writeln!(out, "{:>3}  COPRIME_EXTEND  {label:<8} lead {lead}", k + 1).unwrap();
            }
        }
    }
    match &cert.verdict {
        Verdict::Certified => writeln!(out, "verdict: certified ({} steps)", cert.steps.len()).unwrap(),
        Verdict::Failed { step, reason } => {
            writeln!(out, "verdict: failed at step {}: {reason}", step + 1).unwrap()
        }
    }
    for note in &cert.notes {
        writeln!(out, "note: {note}").unwrap();
    }
    out
}

pub fn certify(cfg: &Config) -> Result<Emission, Failure> {
    let cert = match input_sequence(cfg)? {
        Some((ring, polys)) => certify_sequence(&ring, cfg.order, &polys),
        None if cfg.order == OrderChoice::Paper => certify_theorem(cfg.n, cfg.field).map_err(usage)?,
        None => {
            let g = product(cfg)?;
            let seq: Vec<Polynomial> = build_ftilde(&g).into_iter().map(|(_, p)| p).collect();
            certify_sequence(g.ring(), cfg.order, &seq)
        }
    };
    let text = match cfg.format {
        Format::Json => cert.to_json(),
        Format::Text => certificate_text(&cert),
    };
    Ok(Emission {
        text,
        holds: cert.verdict.is_certified(),
    })
}

pub fn oracle(cfg: &Config) -> Result<Emission, Failure> {
    let (seq, labels) = match input_sequence(cfg)? {
        Some((_, polys)) => {
            let labels = (1..=polys.len()).map(|k| format!("#{k}")).collect();
            (polys, labels)
        }
        None => {
            let (labels, polys): (Vec<String>, Vec<Polynomial>) =
                selected_f(&product(cfg)?).into_iter().unzip();
            (polys, labels)
        }
    };
    let report = sequence_oracle(&seq, cfg.method, cfg.budget).map_err(oracle_failure)?;
    let text = match cfg.format {
        Format::Json => pretty(&json!({
            "sequence": seq.iter().zip(&labels).map(|(p, l)| json!({"label": l, "poly": format_poly(p)})).collect::<Vec<_>>(),
            "report": report,
        })),
        Format::Text => {
            let mut out = String::new();
            let method = match cfg.method {
                OracleMethod::Hilbert => "hilbert",
                OracleMethod::Colon => "colon",
            };
            writeln!(out, "method: {method}").unwrap();
            writeln!(out, "sequence: {}", labels.join(", ")).unwrap();
            for s in &report.steps {
                writeln!(out, "  step {}: {} ({})", s.index, if s.regular { "ok" } else { "fails" }, s.note).unwrap();
            }
            match report.first_failure {
                None => writeln!(out, "verdict: regular").unwrap(),
                Some(k) => writeln!(out, "verdict: not regular (first failure at element {k}, {})", labels[k - 1]).unwrap(),
            }
            out
        }
    };
    Ok(Emission {
        text,
        holds: report.is_regular(),
    })
}

fn witness_text(out: &mut String, title: &str, w: &WitnessCheck) {
    writeln!(out, "{title}: {}", w.identity).unwrap();
    writeln!(out, "  residue: {}", w.residue).unwrap();
    writeln!(out, "  {} * f22 in J: {}", w.multiplier, w.product_in_ideal).unwrap();
    writeln!(out, "  {} outside J: {}", w.multiplier, w.multiplier_outside_ideal).unwrap();
    writeln!(out, "  shows f22 is a zerodivisor modulo J: {}", w.demonstrates()).unwrap();
}

pub fn counterexample(cfg: &Config) -> Result<Emission, Failure> {
    let r = counterexample_n2(cfg.field).map_err(grobner_failure)?;
    let text = match cfg.format {
        Format::Json => pretty(&r),
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "J = <{}> over {}", r.ideal.join(", "), r.field).unwrap();
            witness_text(&mut out, "quoted relation", &r.quoted);
            witness_text(&mut out, "corrected relation", &r.corrected);
            out
        }
    };
    Ok(Emission {
        text,
        holds: r.quoted.demonstrates(),
    })
}

pub fn search(cfg: &Config) -> Result<Emission, Failure> {
    let g = product(cfg)?;
    let base = selected_f(&g);
    let rest: Vec<(String, Polynomial)> = g
        .entries()
        .into_iter()
        .filter(|((i, j), _)| !is_selected(cfg.n, *i, *j))
        .map(|((i, j), p)| (format!("f[{i},{j}]"), p))
        .collect();
    let base_polys: Vec<Polynomial> = base.iter().map(|(_, p)| p.clone()).collect();
    let cand: Vec<Polynomial> = rest.iter().map(|(_, p)| p.clone()).collect();
    let result = greedy_extend(&base_polys, &cand, cfg.method, cfg.budget).map_err(oracle_failure)?;
    let final_length = base.len() + result.accepted.len();
    let log: Vec<serde_json::Value> = result
        .log
        .iter()
        .map(|o| match o {
            CandidateOutcome::Accepted { index } => json!({"candidate": rest[*index].0, "outcome": "accepted"}),
            CandidateOutcome::Rejected { index } => json!({"candidate": rest[*index].0, "outcome": "rejected"}),
            CandidateOutcome::Skipped { index, reason } => {
                json!({"candidate": rest[*index].0, "outcome": "skipped", "reason": reason})
            }
        })
        .collect();
    let text = match cfg.format {
        Format::Json => pretty(&json!({
            "n": cfg.n,
            "method": cfg.method,
            "base": base.iter().map(|(l, _)| l).collect::<Vec<_>>(),
            "log": log,
            "final_length": final_length,
        })),
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "base: {} elements (F)", base.len()).unwrap();
            for entry in &log {
                let reason = entry.get("reason").and_then(|r| r.as_str()).map(|r| format!(" ({r})")).unwrap_or_default();
                writeln!(out, "  {}: {}{reason}", entry["candidate"].as_str().unwrap(), entry["outcome"].as_str().unwrap()).unwrap();
            }
            writeln!(out, "final length: {final_length}").unwrap();
            out
        }
    };
    Ok(Emission { text, holds: true })
}

pub fn gb(cfg: &Config) -> Result<Emission, Failure> {
    let Some((ring, polys)) = input_sequence(cfg)? else {
        return Err(Failure::Usage("gb needs --input FILE".into()));
    };
    let opts = BuchbergerOptions {
        budget: cfg.budget,
        ..Default::default()
    };
    let basis = buchberger(&ring, &polys, &opts).map_err(grobner_failure)?;
    let gens: Vec<String> = basis.gens().iter().map(format_poly).collect();
    let text = match cfg.format {
        Format::Json => pretty(&json!({
            "order": cfg.order,
            "field": cfg.field.to_string(),
            "basis": gens,
        })),
        Format::Text => gens.join("\n"),
    };
    Ok(Emission { text, holds: true })
}
