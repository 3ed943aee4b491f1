use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;
use std::process::ExitCode;

use spectra_core::census::{
    run_census, CensusConfig, CensusError, CensusRecord, CensusSource, CensusSummary, CSV_HEADER,
    SCHEMA_VERSION,
};
use spectra_core::graph::{parse_graph6, Graph};
use spectra_core::CheckOptions;

use crate::{usage_error, CensusArgs, Format, Outcome};

/// Where records go.
enum RecordSink {
    None,
    Csv(Box<csv::Writer<Box<dyn Write>>>),
    Json {
        out: BufWriter<File>,
        first: bool,
    },
}

impl RecordSink {
    fn csv(out: Box<dyn Write>) -> io::Result<Self> {
        let mut w = csv::WriterBuilder::new()
            .has_headers(false)
            .from_writer(out);
        w.write_record(CSV_HEADER)?;
        Ok(Self::Csv(Box::new(w)))
    }

    fn json(path: &Path) -> io::Result<Self> {
        let mut out = BufWriter::new(File::create(path)?);
        write!(out, "{{\"schema_version\":{SCHEMA_VERSION},\"columns\":")?;
        serde_json::to_writer(&mut out, &CSV_HEADER)?;
        write!(out, ",\"records\":[")?;
        Ok(Self::Json { out, first: true })
    }

    fn write(&mut self, r: &CensusRecord) -> Result<(), String> {
        match self {
            Self::None => Ok(()),
            Self::Csv(w) => w.serialize(r).map_err(|e| e.to_string()),
            Self::Json { out, first } => {
                if !*first {
                    out.write_all(b",").map_err(|e| e.to_string())?;
                }
                *first = false;
                out.write_all(b"\n").map_err(|e| e.to_string())?;
                serde_json::to_writer(&mut *out, r).map_err(|e| e.to_string())
            }
        }
    }

    fn finish(self, summary: &CensusSummary) -> io::Result<()> {
        match self {
            Self::None => Ok(()),
            Self::Csv(mut w) => w.flush(),
            Self::Json { mut out, .. } => {
                write!(out, "\n],\"summary\":")?;
                serde_json::to_writer(&mut out, summary)?;
                writeln!(out, "}}")?;
                out.flush()
            }
        }
    }
}

fn read_graphs(path: &Path) -> Result<Vec<Graph>, ExitCode> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage_error(format!("cannot read {}: {e}", path.display())))?;
    let mut graphs = Vec::new();
    for (line_no, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let g = parse_graph6(line).map_err(|e| {
            usage_error(format!(
                "{}:{}: invalid graph6: {e}",
                path.display(),
                line_no + 1
            ))
        })?;
        graphs.push(g);
    }
    Ok(graphs)
}

pub(crate) fn run(args: &CensusArgs) -> Result<Outcome, ExitCode> {
    if !(args.tol > 0.0 && args.tol.is_finite()) {
        return Err(usage_error("--tol must be positive and finite"));
    }
    let source = match (&args.input, args.n) {
        (Some(path), _) => CensusSource::Graphs(read_graphs(path)?),
        (None, Some(n)) => {
            if n == 8 && args.allow_n8 {
                eprintln!("warning: n = 8 enumerates 2^28 labeled graphs and may take many hours");
            }
            CensusSource::Enumerate {
                n,
                allow_large: args.allow_n8,
            }
        }
        (None, None) => unreachable!("clap requires --n or --input"),
    };
    let config = CensusConfig {
        source,
        kinds: args.matrix.kinds(),
        opts: CheckOptions::descriptive(args.tol),
        jobs: args.jobs,
    };

    let mut sink = match (&args.out, args.emit_records) {
        (Some(path), _) if path.extension().is_some_and(|e| e == "json") => RecordSink::json(path),
        (Some(path), _) => {
            File::create(path).and_then(|f| RecordSink::csv(Box::new(BufWriter::new(f))))
        }
        (None, true) => RecordSink::csv(Box::new(io::stdout().lock())),
        (None, false) => Ok(RecordSink::None),
    }
    .map_err(|e| usage_error(format!("cannot open output: {e}")))?;

    let summary = run_census(&config, |r| sink.write(r)).map_err(|e| match e {
        // A checker error on a connected graph is a failed check, not bad input.
        CensusError::Check { .. } => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        other => usage_error(other),
    })?;
    sink.finish(&summary)
        .map_err(|e| usage_error(format!("cannot write output: {e}")))?;

    let to_stderr = args.emit_records && args.out.is_none();
    let text = match args.format {
        Format::Text => summary_text(&config, &summary),
        Format::Json => serde_json::to_string_pretty(&summary).expect("serializable") + "\n",
    };
    if to_stderr {
        eprint!("{text}");
    } else {
        print!("{text}");
    }
    Ok(if summary.is_clean() {
        Outcome::Pass
    } else {
        Outcome::Fail
    })
}

fn summary_text(config: &CensusConfig, s: &CensusSummary) -> String {
    let mut out = String::new();
    match &config.source {
        CensusSource::Enumerate { n, .. } => out.push_str(&format!(
            "census of labeled graphs on {n} vertices (each isomorphism class counted once per labeling)\n"
        )),
        CensusSource::Graphs(gs) => out.push_str(&format!("census of {} input graphs\n", gs.len())),
    }
    out.push_str(&format!(
        "{:>3}  {:<10} {:>9} {:>9} {:>9} {:>10} {:>9} {:>9} {:>9}\n",
        "n",
        "kind",
        "examined",
        "connected",
        "distinct",
        "min_gap",
        "disagree",
        "failures",
        "invariant"
    ));
    for r in &s.rows {
        let gap = r
            .min_gap
            .map_or_else(|| "-".to_string(), |g| format!("{g:.3e}"));
        out.push_str(&format!(
            "{:>3}  {:<10} {:>9} {:>9} {:>9} {:>10} {:>9} {:>9} {:>9}\n",
            r.n,
            r.kind.as_str(),
            r.examined,
            r.connected,
            r.distinct,
            gap,
            r.disagreements,
            r.check_failures,
            r.invariant_violations
        ));
    }
    out.push_str(&format!("wall time: {:.2} s\n", s.wall_time_secs));
    out.push_str(if s.is_clean() {
        "result: OK\n"
    } else {
        "result: FAILED\n"
    });
    out
}
