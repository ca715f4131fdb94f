//! Command line front end. Exit codes: 0 success, 1 violated bound,
//! 2 usage or input error, 3 size limit exceeded.

use std::io::Read as _;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::forms::{self, FamilyKind, Value};
use crate::graph::{decode_graph6, generate, Family, Graph, VertexSet};
use crate::psd::propagate;
use crate::throttle::{search_all, ThrottlingWitness};

#[derive(Parser)]
#[command(
    name = "psd-throttle",
    about = "Positive semidefinite zero forcing and product throttling",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Tsv,
}

#[derive(Args)]
struct InputArgs {
    /// Graph in graph6 format ("-" reads one line from stdin)
    #[arg(long, group = "input")]
    graph6: Option<String>,
    /// Edge list file: first line "n m", then one "u v" per line
    #[arg(long, group = "input")]
    edges: Option<std::path::PathBuf>,
    /// Family name and parameters, e.g. --family cycle 15
    #[arg(long, group = "input", num_args = 1.., required = true)]
    family: Option<Vec<String>>,
    /// Seed for random families
    #[arg(long)]
    seed: Option<u64>,
}

impl InputArgs {
    fn load(&self) -> Result<Graph, Error> {
        if let Some(g6) = &self.graph6 {
            let line = if g6 == "-" {
                let mut buf = String::new();
                std::io::stdin()
                    .read_to_string(&mut buf)
                    .map_err(|e| Error::Input(e.to_string()))?;
                buf.trim().to_string()
            } else {
                g6.clone()
            };
            return decode_graph6(&line);
        }
        if let Some(path) = &self.edges {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Input(e.to_string()))?;
            return crate::graph::parse_edge_list(&text);
        }
        let tokens = self.family.as_ref().unwrap();
        let family = Family::parse(&tokens[0])
            .ok_or_else(|| Error::Input(format!("unknown family {:?}", tokens[0])))?;
        let params: Vec<usize> = tokens[1..]
            .iter()
            .map(|s| {
                s.parse()
                    .map_err(|_| Error::Input(format!("bad family parameter {:?}", s)))
            })
            .collect::<Result<_, _>>()?;
        generate(family, &params, self.seed)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute throttling parameters with witnesses
    Compute {
        #[command(flatten)]
        input: InputArgs,
        /// Parameter to report (default: all)
        #[arg(long = "param")]
        params: Vec<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Print vertices 1-indexed
        #[arg(long)]
        one_indexed: bool,
    },
    /// Check every applicable inequality; exit 1 on any violation
    Verify {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Also check subdivision and deletion inequalities on every edge
        #[arg(long)]
        operations: bool,
    },
    /// Compare closed-form family values against search
    Table {
        /// Family name, e.g. path, cycle, complete
        #[arg(long)]
        family: String,
        /// Parameter range, e.g. "4..10" or a single value
        #[arg(long)]
        range: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Print the propagation trace for an initial set
    Trace {
        #[command(flatten)]
        input: InputArgs,
        /// Initial blue vertices, comma separated
        #[arg(long)]
        set: String,
        #[arg(long)]
        one_indexed: bool,
    },
    /// Cops and robbers: capture time, cop number, cop throttling
    Cops {
        #[command(flatten)]
        input: InputArgs,
        /// Cop placement, comma separated; omit to search
        #[arg(long)]
        set: Option<String>,
        #[arg(long)]
        one_indexed: bool,
    },
}

fn parse_set(text: &str, n: usize, one_indexed: bool) -> Result<VertexSet, Error> {
    let shift = usize::from(one_indexed);
    let mut set = VertexSet::EMPTY;
    for part in text.split(',') {
        let raw: usize = part
            .trim()
            .parse()
            .map_err(|_| Error::Input(format!("bad vertex {:?}", part)))?;
        let v = raw
            .checked_sub(shift)
            .ok_or_else(|| Error::Input("vertex 0 is invalid with --one-indexed".into()))?;
        if v >= n {
            return Err(Error::Input(format!("vertex {} out of range", raw)));
        }
        set.insert(v);
    }
    Ok(set)
}

fn show_set(set: VertexSet, one_indexed: bool) -> String {
    let shift = usize::from(one_indexed);
    let parts: Vec<String> = set.iter().map(|v| (v + shift).to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn witness_line(name: &str, w: &ThrottlingWitness, one_indexed: bool) -> String {
    format!(
        "{} = {}  witness {} (pt {})",
        name,
        w.value,
        show_set(w.witness_set, one_indexed),
        w.witness_pt
    )
}

fn family_kind(name: &str) -> Result<FamilyKind, Error> {
    Ok(match name {
        "complete" => FamilyKind::Complete,
        "cycle" => FamilyKind::Cycle,
        "path" => FamilyKind::Path,
        "complete_bipartite" => FamilyKind::CompleteBipartite,
        "complete_multipartite" => FamilyKind::CompleteMultipartite,
        "hypercube" => FamilyKind::Hypercube,
        "complement_cycle" => FamilyKind::ComplementCycle,
        "complement_path" => FamilyKind::ComplementPath,
        other => {
            return Err(Error::Input(format!(
                "unknown table family {:?} (one-parameter families only)",
                other
            )))
        }
    })
}

fn family_graph(kind: FamilyKind, n: usize) -> Result<Graph, Error> {
    Ok(match kind {
        FamilyKind::Complete => generate(Family::Complete, &[n], None)?,
        FamilyKind::Cycle => generate(Family::Cycle, &[n], None)?,
        FamilyKind::Path => generate(Family::Path, &[n], None)?,
        FamilyKind::Hypercube => generate(Family::Hypercube, &[n], None)?,
        FamilyKind::ComplementCycle => generate(Family::Cycle, &[n], None)?.complement(),
        FamilyKind::ComplementPath => generate(Family::Path, &[n], None)?.complement(),
        _ => {
            return Err(Error::Input(
                "table ranges support one-parameter families".into(),
            ))
        }
    })
}

fn parse_range(text: &str) -> Result<(usize, usize), Error> {
    if let Some((a, b)) = text.split_once("..") {
        let lo = a
            .parse()
            .map_err(|_| Error::Input(format!("bad range start {:?}", a)))?;
        let hi = b
            .parse()
            .map_err(|_| Error::Input(format!("bad range end {:?}", b)))?;
        if lo > hi {
            return Err(Error::Input("empty range".into()));
        }
        Ok((lo, hi))
    } else {
        let v = text
            .parse()
            .map_err(|_| Error::Input(format!("bad range {:?}", text)))?;
        Ok((v, v))
    }
}

fn run_command(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Compute {
            input,
            params,
            format,
            workers,
            one_indexed,
        } => {
            let g = input.load()?;
            let record = search_all(&g, workers)?;
            let wanted: Vec<String> = if params.is_empty() {
                vec!["z_plus", "th_sum", "th_times", "th_star"]
                    .into_iter()
                    .map(String::from)
                    .collect()
            } else {
                params
            };
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&record).unwrap()),
                Format::Text | Format::Tsv => {
                    for p in &wanted {
                        match p.as_str() {
                            "z_plus" => println!(
                                "z_plus = {}  witness {}",
                                record.z_plus,
                                show_set(record.z_witness, one_indexed)
                            ),
                            "th_sum" => {
                                println!("{}", witness_line("th_sum", &record.th_sum, one_indexed))
                            }
                            "th_times" => println!(
                                "{}",
                                witness_line("th_times", &record.th_times, one_indexed)
                            ),
                            "th_star" => match &record.th_star {
                                Some(w) => {
                                    println!("{}", witness_line("th_star", w, one_indexed))
                                }
                                None => println!("th_star undefined (no proper forcing set)"),
                            },
                            other => {
                                return Err(Error::Input(format!("unknown parameter {:?}", other)))
                            }
                        }
                    }
                }
            }
            Ok(0)
        }
        Command::Verify {
            input,
            format,
            workers,
            operations,
        } => {
            let g = input.load()?;
            let record = search_all(&g, workers)?;
            let mut reports = vec![forms::bound_report(&g, &record)?];
            if operations {
                for (u, v) in g.edges() {
                    reports.push(forms::operation_bound_checks(&g, (u, v), workers)?);
                }
            }
            let violated = reports.iter().any(|r| !r.all_hold());
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&reports).unwrap()),
                Format::Tsv => {
                    for r in &reports {
                        print!("{}", r.to_tsv());
                    }
                }
                Format::Text => {
                    for r in &reports {
                        for e in &r.entries {
                            let status = if !e.applicable {
                                "n/a "
                            } else if e.holds {
                                "ok  "
                            } else {
                                "FAIL"
                            };
                            println!(
                                "{} {:<18} {} {} {}  {}",
                                status, e.name, e.lhs, e.relation, e.rhs, e.note
                            );
                        }
                    }
                }
            }
            Ok(if violated { 1 } else { 0 })
        }
        Command::Table {
            family,
            range,
            format,
            workers,
        } => {
            let kind = family_kind(&family)?;
            let (lo, hi) = parse_range(&range)?;
            let mut all_match = true;
            let mut rows = Vec::new();
            for n in lo..=hi {
                let rec = forms::family_values(kind, &[n])?;
                let g = family_graph(kind, n)?;
                let searched = search_all(&g, workers)?;
                let searched_star = searched.th_star.as_ref().map(|w| w.value);
                let matches = rec.th_times == searched.th_times.value
                    && match rec.th_star {
                        Value::Known(v) => searched_star == Some(v),
                        Value::Undefined => searched_star.is_none(),
                        Value::Unknown => true,
                    }
                    && rec.z_plus == searched.z_plus;
                all_match &= matches;
                rows.push((n, rec, searched, matches));
            }
            match format {
                Format::Json => {
                    let json: Vec<_> = rows
                        .iter()
                        .map(|(n, rec, searched, matches)| {
                            serde_json::json!({
                                "n": n,
                                "formula": rec,
                                "searched": searched,
                                "match": matches,
                            })
                        })
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&json).unwrap());
                }
                Format::Text | Format::Tsv => {
                    println!("n\tz_plus\tth_times\tth_star\tsearch_z\tsearch_thx\tsearch_ths\tmatch");
                    for (n, rec, searched, matches) in &rows {
                        let star = match rec.th_star {
                            Value::Known(v) => v.to_string(),
                            Value::Unknown => "?".into(),
                            Value::Undefined => "-".into(),
                        };
                        println!(
                            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                            n,
                            rec.z_plus,
                            rec.th_times,
                            star,
                            searched.z_plus,
                            searched.th_times.value,
                            searched
                                .th_star
                                .as_ref()
                                .map(|w| w.value.to_string())
                                .unwrap_or_else(|| "-".into()),
                            matches
                        );
                    }
                }
            }
            Ok(if all_match { 0 } else { 1 })
        }
        Command::Trace {
            input,
            set,
            one_indexed,
        } => {
            let g = input.load()?;
            let s = parse_set(&set, g.n(), one_indexed)?;
            let trace = propagate(&g, s);
            let shift = usize::from(one_indexed);
            for round in 1..=trace.rounds.len() {
                let forces: Vec<String> = trace
                    .forces
                    .iter()
                    .filter(|&&(_, _, r)| r == round)
                    .map(|&(u, w, _)| format!("{}->{}", u + shift, w + shift))
                    .collect();
                println!("round {}: {}", round, forces.join(" "));
            }
            match trace.prop_time() {
                Some(p) => println!("forced all in {} rounds", p),
                None => println!(
                    "stalled; derived set {}",
                    show_set(trace.derived_set(), one_indexed)
                ),
            }
            Ok(0)
        }
        Command::Cops {
            input,
            set,
            one_indexed,
        } => {
            let g = input.load()?;
            let mut solver = crate::cops::CopSolver::new(&g);
            match set {
                Some(text) => {
                    let s = parse_set(&text, g.n(), one_indexed)?;
                    match solver.capture_time(s)? {
                        Some(t) => println!("capture time = {}", t),
                        None => println!("capture time = infinity (robber escapes)"),
                    }
                }
                None => {
                    let c = solver.cop_number()?;
                    println!("cop number = {}", c);
                    let t = crate::cops::th_times_cops(&g)?;
                    println!(
                        "th_times_cops = {}  witness {}",
                        t.th_times,
                        show_set(t.th_times_witness, one_indexed)
                    );
                    match t.th_star {
                        Some(v) => println!("th_star_cops = {}", v),
                        None => println!("th_star_cops undefined"),
                    }
                }
            }
            Ok(0)
        }
    }
}

/// Entry point: returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version with success exits.
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run_command(cli) {
        Ok(code) => code,
        Err(e @ Error::SizeLimit(_)) => {
            eprintln!("error: {}", e);
            3
        }
        Err(e) => {
            eprintln!("error: {}", e);
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_parsing() {
        assert_eq!(parse_set("0,2,4", 5, false).unwrap().to_vec(), vec![0, 2, 4]);
        assert_eq!(parse_set("1,3", 5, true).unwrap().to_vec(), vec![0, 2]);
        assert!(parse_set("5", 5, false).is_err());
        assert!(parse_set("0", 5, true).is_err());
        assert!(parse_set("x", 5, false).is_err());
    }

    #[test]
    fn range_parsing() {
        assert_eq!(parse_range("4..10").unwrap(), (4, 10));
        assert_eq!(parse_range("7").unwrap(), (7, 7));
        assert!(parse_range("9..2").is_err());
        assert!(parse_range("a..b").is_err());
    }
}
