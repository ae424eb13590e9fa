//! Command-line front end: builds catalog graphs, enumerates girth cycles,
//! solves orientation assignments, zips cycle powers, runs the analysis
//! checks, and emits machine-readable reports. JSON goes to stdout, human
//! logging to stderr.

use std::process::ExitCode;
use std::time::Instant;

use cdtzip::catalog::{self, expected_row, CatalogName};
use cdtzip::cycles::girth_cycles;
use cdtzip::error::{Error, Result};
use cdtzip::graph::Graph;
use cdtzip::oac::{build_constraint_graph, solve_oa, OacJson, SolveOutcome};
use cdtzip::report::{analyze_report, verify_all, RunReport, VerifyOptions};
use cdtzip::zip::{orientation_plan, zip_with_plan, PlanOutcome};

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match run(&args) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn usage() -> ExitCode {
    eprintln!(
        "usage: cdtzip <command>\n\
         \n\
         commands:\n\
         \x20 catalog list\n\
         \x20 catalog build <name> [--out FILE] [--dot FILE]\n\
         \x20 cycles enum <graph|name> [--girth-only]\n\
         \x20 oac solve <graph|name> --k INT\n\
         \x20 zip <graph|name> [--oac FILE] --k INT [--out FILE] [--dot FILE]\n\
         \x20 analyze <pappus|desargues|coxeter|lkn> [--n INT]\n\
         \x20 verify-all [--slow] [--only NAME]\n\
         \x20 export <name> <graph|oac|zip|dual> --out PATH [--dot]\n\
         \n\
         graphs are catalog names or JSON files; reports print to stdout.\n\
         CDTZIP_THREADS bounds the verification worker count."
    );
    ExitCode::from(2)
}

fn flag_value<'a>(args: &'a [String], flag: &str) -> Option<&'a str> {
    args.iter().position(|a| a == flag).and_then(|i| args.get(i + 1)).map(String::as_str)
}

fn load_graph(input: &str) -> Result<Graph> {
    if std::path::Path::new(input).exists() {
        let text = std::fs::read_to_string(input)?;
        Graph::from_json_str(&text)
    } else {
        Ok(catalog::build(CatalogName::parse(input)?).graph)
    }
}

fn emit_report(report: &RunReport) -> ExitCode {
    println!("{}", report.to_json_string());
    for c in &report.checks {
        let status = if c.pass { "pass" } else { "FAIL" };
        eprintln!("{status}  {}: expected {}, measured {}", c.id, c.expected, c.measured);
    }
    if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(args: &[String]) -> Result<ExitCode> {
    let Some(verb) = args.first().map(String::as_str) else { return Ok(usage()) };
    match verb {
        "catalog" => match args.get(1).map(String::as_str) {
            Some("list") => {
                for name in CatalogName::ALL {
                    let row = expected_row(name);
                    println!(
                        "{:<14} n={:<4} d={} g={:<2} k={} eta={:<3} a={:<5} b={} h={} kappa={}",
                        name.as_str(),
                        row.n,
                        row.d,
                        row.g,
                        row.k,
                        row.eta,
                        row.a,
                        u8::from(row.b),
                        u8::from(row.h),
                        row.kappa
                    );
                }
                Ok(ExitCode::SUCCESS)
            }
            Some("build") => {
                let Some(name) = args.get(2) else { return Ok(usage()) };
                let lg = catalog::build(CatalogName::parse(name)?);
                let json = lg.graph.to_json_string();
                match flag_value(args, "--out") {
                    Some(path) => std::fs::write(path, &json)?,
                    None => println!("{json}"),
                }
                if let Some(path) = flag_value(args, "--dot") {
                    std::fs::write(path, lg.graph.to_dot(name))?;
                }
                eprintln!("built {} ({} vertices)", name, lg.graph.n());
                Ok(ExitCode::SUCCESS)
            }
            _ => Ok(usage()),
        },
        "cycles" => {
            if args.get(1).map(String::as_str) != Some("enum") {
                return Ok(usage());
            }
            let Some(input) = args.get(2) else { return Ok(usage()) };
            let g = load_graph(input)?;
            let cycles = girth_cycles(&g);
            let seqs: Vec<&[usize]> = cycles.iter().map(|c| c.verts()).collect();
            println!("{}", serde_json::to_string_pretty(&seqs)?);
            eprintln!("{} girth cycles (girth {:?})", cycles.len(), g.girth());
            Ok(ExitCode::SUCCESS)
        }
        "oac" => {
            if args.get(1).map(String::as_str) != Some("solve") {
                return Ok(usage());
            }
            let Some(input) = args.get(2) else { return Ok(usage()) };
            let Some(k) = flag_value(args, "--k").and_then(|s| s.parse::<usize>().ok()) else {
                return Ok(usage());
            };
            let g = load_graph(input)?;
            let cycles = girth_cycles(&g);
            let cg = build_constraint_graph(&g, &cycles, k)?;
            match solve_oa(&cg) {
                SolveOutcome::Balanced(sol) => {
                    let oac = sol.oriented_cycles(&cycles);
                    let json: OacJson = oac.to_json(&g, k);
                    println!("{}", serde_json::to_string_pretty(&json)?);
                    eprintln!(
                        "balanced: {} oriented cycles, solution count 2^{}",
                        cycles.len(),
                        sol.count_log2()
                    );
                    Ok(ExitCode::SUCCESS)
                }
                SolveOutcome::Unbalanced(cert) => {
                    println!("{}", serde_json::to_string_pretty(&cert)?);
                    eprintln!("unbalanced: odd-parity certificate with {} steps", cert.paths.len());
                    Ok(ExitCode::from(1))
                }
            }
        }
        "zip" => {
            let Some(input) = args.get(1) else { return Ok(usage()) };
            let Some(k) = flag_value(args, "--k").and_then(|s| s.parse::<usize>().ok()) else {
                return Ok(usage());
            };
            let g = load_graph(input)?;
            let y = match flag_value(args, "--oac") {
                Some(path) => {
                    let text = std::fs::read_to_string(path)?;
                    let json: OacJson = serde_json::from_str(&text)?;
                    let named: Vec<(String, Vec<usize>)> = json
                        .cycles
                        .into_iter()
                        .enumerate()
                        .map(|(i, c)| {
                            let name = json
                                .names
                                .as_ref()
                                .and_then(|ns| ns.get(i).cloned())
                                .unwrap_or_else(|| format!("c{i}"));
                            (name, c)
                        })
                        .collect();
                    let oac = cdtzip::oac::OrientedCycleSet::from_directed(&g, named)?;
                    cdtzip::zip::zip(&g, &oac, k)?
                }
                None => {
                    let cycles = girth_cycles(&g);
                    match orientation_plan(&g, &cycles, k)? {
                        PlanOutcome::Planned(plan) => zip_with_plan(&g, &plan, k)?,
                        PlanOutcome::Obstructed(cert) => {
                            println!("{}", serde_json::to_string_pretty(&cert)?);
                            eprintln!("no orientation assignment; certificate emitted");
                            return Ok(ExitCode::from(1));
                        }
                    }
                }
            };
            let json = serde_json::to_string_pretty(&y.to_json())?;
            match flag_value(args, "--out") {
                Some(path) => std::fs::write(path, &json)?,
                None => println!("{json}"),
            }
            if let Some(path) = flag_value(args, "--dot") {
                std::fs::write(path, y.to_dot("zipped"))?;
            }
            eprintln!("zipped: {} vertices, {} edges, {} faces", y.vertex_count(), y.edge_count(), y.faces.len());
            Ok(ExitCode::SUCCESS)
        }
        "analyze" => {
            let Some(which) = args.get(1) else { return Ok(usage()) };
            let n = flag_value(args, "--n").and_then(|s| s.parse::<usize>().ok());
            let t0 = Instant::now();
            let report = analyze_report(which, n)?;
            eprintln!("analyze {which} finished in {:?}", t0.elapsed());
            Ok(emit_report(&report))
        }
        "verify-all" => {
            let slow = args.iter().any(|a| a == "--slow");
            let only = match flag_value(args, "--only") {
                Some(name) => Some(CatalogName::parse(name)?),
                None => None,
            };
            let t0 = Instant::now();
            let report = verify_all(VerifyOptions { slow, only })?;
            eprintln!(
                "verify-all finished in {:?} ({} checks, {} workers)",
                t0.elapsed(),
                report.checks.len(),
                cdtzip::report::thread_count()
            );
            Ok(emit_report(&report))
        }
        "export" => {
            let Some(name) = args.get(1) else { return Ok(usage()) };
            let Some(what) = args.get(2) else { return Ok(usage()) };
            let Some(out) = flag_value(args, "--out") else { return Ok(usage()) };
            let with_dot = args.iter().any(|a| a == "--dot");
            let name = CatalogName::parse(name)?;
            export(name, what, out, with_dot)
        }
        _ => Ok(usage()),
    }
}

fn export(name: CatalogName, what: &str, out: &str, with_dot: bool) -> Result<ExitCode> {
    let lg = catalog::build(name);
    let row = expected_row(name);
    match what {
        "graph" => {
            std::fs::write(out, lg.graph.to_json_string())?;
            if with_dot {
                std::fs::write(format!("{out}.dot"), lg.graph.to_dot(name.as_str()))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        "oac" => match catalog::fixture_oac(name) {
            Ok((g, oac)) => {
                let json = oac.to_json(&g.graph, catalog::fixture_k(name)?);
                std::fs::write(out, serde_json::to_string_pretty(&json)?)?;
                Ok(ExitCode::SUCCESS)
            }
            Err(Error::NoFixture(_)) => {
                // No listing: solve, or emit the obstruction.
                let cycles = girth_cycles(&lg.graph);
                let cg = build_constraint_graph(&lg.graph, &cycles, row.k)?;
                match solve_oa(&cg) {
                    SolveOutcome::Balanced(sol) => {
                        let oac = sol.oriented_cycles(&cycles);
                        let json = oac.to_json(&lg.graph, row.k);
                        std::fs::write(out, serde_json::to_string_pretty(&json)?)?;
                        Ok(ExitCode::SUCCESS)
                    }
                    SolveOutcome::Unbalanced(cert) => {
                        std::fs::write(out, serde_json::to_string_pretty(&cert)?)?;
                        eprintln!("no orientation assignment for {}; certificate written", name.as_str());
                        Ok(ExitCode::from(1))
                    }
                }
            }
            Err(e) => Err(e),
        },
        "zip" | "dual" => {
            let cycles = girth_cycles(&lg.graph);
            match orientation_plan(&lg.graph, &cycles, row.k)? {
                PlanOutcome::Planned(plan) => {
                    let y = zip_with_plan(&lg.graph, &plan, row.k)?;
                    if what == "zip" {
                        std::fs::write(out, serde_json::to_string_pretty(&y.to_json())?)?;
                        if with_dot {
                            std::fs::write(format!("{out}.dot"), y.to_dot(name.as_str()))?;
                        }
                    } else {
                        let dual = cdtzip::analysis::dual_cycle_graph(&y.faces);
                        std::fs::write(out, dual.to_json_string())?;
                        if with_dot {
                            std::fs::write(format!("{out}.dot"), dual.to_dot("dual"))?;
                        }
                    }
                    Ok(ExitCode::SUCCESS)
                }
                PlanOutcome::Obstructed(cert) => {
                    std::fs::write(out, serde_json::to_string_pretty(&cert)?)?;
                    eprintln!(
                        "{} stage unavailable for {}: no orientation assignment; certificate written",
                        what,
                        name.as_str()
                    );
                    Ok(ExitCode::from(1))
                }
            }
        }
        _ => Ok(usage()),
    }
}
