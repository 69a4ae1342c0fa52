//! Text, JSON and CSV renderings. Every rendering ends with a newline and
//! lists properties and pairs in sorted order.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde_json::{json, Value};

use zn_ag::{ClassListing, ModGroupoid, Property, PropertyProfile, TheoremReport};

use crate::Format;

fn csv_row<I: IntoIterator<Item = T>, T: ToString>(cells: I) -> String {
    cells
        .into_iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn spaced(values: &[usize]) -> String {
    values
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn table(g: &ModGroupoid, format: Format) -> String {
    let table = g.cayley_table();
    match format {
        Format::Text => table.to_string(),
        Format::Csv => table.rows().map(|r| csv_row(r) + "\n").collect(),
        Format::Json => {
            let doc = json!({ "n": g.n(), "t": g.t(), "u": g.u(), "table": table.to_rows() });
            serde_json::to_string_pretty(&doc).unwrap() + "\n"
        }
    }
}

/// Witness arrays keyed by name: one per false property, plus
/// `left_identity` (the refutation when there is none) and `inverses` (when
/// the table is an AG-group).
fn witnesses(profile: &PropertyProfile) -> BTreeMap<&'static str, Vec<usize>> {
    let mut out: BTreeMap<_, _> = profile
        .counterexamples
        .iter()
        .map(|(p, w)| (p.name(), w.clone()))
        .collect();
    if let Some(r) = &profile.left_identity_refutation {
        out.insert("left_identity", r.clone());
    }
    if let Some(inv) = &profile.inverses {
        out.insert("inverses", inv.clone());
    }
    out
}

fn sorted_properties(profile: &PropertyProfile) -> BTreeMap<&'static str, bool> {
    Property::ALL
        .iter()
        .map(|&p| (p.name(), profile.get(p)))
        .collect()
}

pub fn profile(g: Option<&ModGroupoid>, profile: &PropertyProfile, format: Format) -> String {
    let properties = sorted_properties(profile);
    let witnesses = witnesses(profile);
    match format {
        Format::Json => {
            let doc = json!({
                "n": profile.n,
                "t": g.map(ModGroupoid::t),
                "u": g.map(ModGroupoid::u),
                "properties": properties,
                "witnesses": witnesses,
                "left_identity": profile.left_identity,
            });
            serde_json::to_string_pretty(&doc).unwrap() + "\n"
        }
        Format::Csv => {
            let mut out = String::from("property,value,witness\n");
            for (name, value) in &properties {
                let w = witnesses.get(name).map(|w| spaced(w)).unwrap_or_default();
                writeln!(out, "{name},{value},{w}").unwrap();
            }
            let e = profile
                .left_identity
                .map(|e| e.to_string())
                .unwrap_or_default();
            let w = witnesses
                .get("left_identity")
                .map(|w| spaced(w))
                .unwrap_or_default();
            writeln!(out, "left_identity,{e},{w}").unwrap();
            if let Some(inv) = witnesses.get("inverses") {
                writeln!(out, "inverses,,{}", spaced(inv)).unwrap();
            }
            out
        }
        Format::Text => {
            let mut out = match g {
                Some(g) => format!("{g}\n"),
                None => format!("table of order {}\n", profile.n),
            };
            for (name, value) in &properties {
                write!(out, "{name:<25} {value}").unwrap();
                if let Some(w) = witnesses.get(name) {
                    write!(out, "  counterexample {w:?}").unwrap();
                }
                out.push('\n');
            }
            match profile.left_identity {
                Some(e) => writeln!(out, "{:<25} {e}", "left_identity").unwrap(),
                None => writeln!(
                    out,
                    "{:<25} none  refutation {:?}",
                    "left_identity", witnesses["left_identity"]
                )
                .unwrap(),
            }
            if let Some(inv) = witnesses.get("inverses") {
                writeln!(out, "{:<25} {inv:?}", "inverses").unwrap();
            }
            out
        }
    }
}

pub fn listing(listing: &ClassListing, format: Format) -> String {
    match format {
        Format::Text => listing
            .pairs
            .iter()
            .map(|(t, u)| format!("({t},{u})\n"))
            .collect(),
        Format::Csv => {
            let mut out = String::from("t,u\n");
            for (t, u) in &listing.pairs {
                writeln!(out, "{t},{u}").unwrap();
            }
            out
        }
        Format::Json => {
            let pairs: Vec<[usize; 2]> = listing.pairs.iter().map(|&(t, u)| [t, u]).collect();
            let doc = json!({
                "n": listing.n,
                "class": listing.variant.name(),
                "ag_filtered": listing.ag_filtered,
                "pairs": pairs,
            });
            serde_json::to_string_pretty(&doc).unwrap() + "\n"
        }
    }
}

fn result_word(r: &TheoremReport) -> &'static str {
    if r.passed() {
        "pass"
    } else {
        "fail"
    }
}

pub fn reports(reports: &[TheoremReport], format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            for r in reports {
                let mode = if r.converse { "converse" } else { "verify" };
                writeln!(
                    out,
                    "{:<24} {:<8} n={:<10} instances={:<7} {}",
                    r.id.name(),
                    mode,
                    r.n_range.to_string(),
                    r.instances_checked,
                    result_word(r).to_uppercase()
                )
                .unwrap();
                for v in &r.violations {
                    writeln!(
                        out,
                        "    Z_{}({},{})  {}  witness {:?}",
                        v.n, v.t, v.u, v.obligation, v.witness
                    )
                    .unwrap();
                }
            }
            out
        }
        Format::Csv => {
            let mut out = String::from(
                "theorem,mode,n_min,n_max,instances_checked,instances_sampled,result,violations\n",
            );
            for r in reports {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{}",
                    r.id.name(),
                    if r.converse { "converse" } else { "verify" },
                    r.n_range.lo,
                    r.n_range.hi,
                    r.instances_checked,
                    r.instances_sampled,
                    result_word(r),
                    r.violations.len()
                )
                .unwrap();
            }
            out
        }
        Format::Json => {
            let docs: Vec<Value> = reports
                .iter()
                .map(|r| {
                    let violations: Vec<Value> = r
                        .violations
                        .iter()
                        .map(|v| {
                            json!({
                                "n": v.n, "t": v.t, "u": v.u,
                                "obligation": v.obligation.to_string(),
                                "witness": v.witness,
                            })
                        })
                        .collect();
                    json!({
                        "theorem": r.id.name(),
                        "statement": r.id.statement(),
                        "converse": r.converse,
                        "n_range": [r.n_range.lo, r.n_range.hi],
                        "instances_checked": r.instances_checked,
                        "instances_sampled": r.instances_sampled,
                        "result": result_word(r),
                        "violations": violations,
                    })
                })
                .collect();
            serde_json::to_string_pretty(&json!({ "reports": docs })).unwrap() + "\n"
        }
    }
}
