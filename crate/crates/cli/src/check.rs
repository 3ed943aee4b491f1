use std::process::ExitCode;

use serde_json::{json, Value};
use spectra_core::characterization::{check_diameter_bound, check_graph, DiameterBound, Verdict};
use spectra_core::graph::{
    all_nonidentity_involutions, parse_graph6, GraphError, AUTOMORPHISM_MAX_N,
};
use spectra_core::{CharacterizationResult, CheckOptions, Graph, GraphMatrix};

use crate::{usage_error, CheckArgs, Format, Outcome};

/// Largest graph accepted by `check`.
const CHECK_MAX_N: usize = 512;

pub(crate) fn run(args: &CheckArgs) -> Result<Outcome, ExitCode> {
    let g = parse_graph6(&args.graph6)
        .map_err(|e| usage_error(format!("invalid graph6 {:?}: {e}", args.graph6)))?;
    if g.n() > CHECK_MAX_N {
        return Err(usage_error(GraphError::TooLarge {
            n: g.n(),
            max: CHECK_MAX_N,
        }));
    }
    if !(args.tol > 0.0 && args.tol.is_finite()) {
        return Err(usage_error("--tol must be positive and finite"));
    }
    let opts = if args.strict {
        CheckOptions::strict(args.tol)
    } else {
        CheckOptions::descriptive(args.tol)
    };

    let mut results = Vec::new();
    for kind in args.matrix.kinds() {
        let r = check_graph(&g, kind, &opts).map_err(|e| usage_error(format!("{kind}: {e}")))?;
        results.push((kind, r));
    }
    let bound = check_diameter_bound(&g).map_err(usage_error)?;
    let involutions = if results.iter().any(|(_, r)| r.is_distinct()) && g.n() <= AUTOMORPHISM_MAX_N
    {
        Some(all_nonidentity_involutions(&g).expect("size checked"))
    } else {
        None
    };

    let passed = results.iter().all(|(_, r)| r.verdict.is_pass())
        && bound.holds
        && involutions != Some(false);
    match args.format {
        Format::Text => print_text(args, &g, &results, &bound, involutions, passed),
        Format::Json => {
            let doc = json!({
                "graph6": args.graph6.trim(),
                "n": g.n(),
                "m": g.m(),
                "mode": opts.mode,
                "tol": opts.tol,
                "checks": results.iter().map(|(k, r)| result_json(*k, r)).collect::<Vec<_>>(),
                "diameter_bound": bound,
                "involution_condition": involutions,
                "passed": passed,
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&doc).expect("serializable")
            );
        }
    }
    Ok(if passed { Outcome::Pass } else { Outcome::Fail })
}

fn result_json(kind: GraphMatrix, r: &CharacterizationResult) -> Value {
    let (verdict, failed) = match r.verdict {
        Verdict::Pass => ("pass", None),
        Verdict::Fail(c) => ("fail", Some(c)),
    };
    json!({
        "kind": kind,
        "theorem": r.theorem,
        "k": r.k,
        "k_exact": r.k_exact,
        "k_float": r.k_float,
        "distinct_eigenvalues": r.distinct_eigenvalues,
        "condition_i_residuals": r.condition_i_residuals,
        "condition_i_tol": r.condition_i_tol,
        "condition_ii_residual": r.condition_ii_residual,
        "condition_ii_tol": r.condition_ii_tol,
        "coefficient_b": r.coefficient_b,
        "expected_b": r.expected_b,
        "alpha": r.alpha,
        "verdict": verdict,
        "failed_condition": failed,
    })
}

fn fmt_list(values: &[f64]) -> String {
    let parts: Vec<String> = values.iter().map(|v| format!("{v:.6}")).collect();
    format!("[{}]", parts.join(", "))
}

fn print_text(
    args: &CheckArgs,
    g: &Graph,
    results: &[(GraphMatrix, CharacterizationResult)],
    bound: &DiameterBound,
    involutions: Option<bool>,
    passed: bool,
) {
    println!(
        "graph {} (n = {}, m = {})",
        args.graph6.trim(),
        g.n(),
        g.m()
    );
    for (kind, r) in results {
        println!("{kind} [{}]: k = {} of n = {}", r.theorem, r.k, r.n);
        if r.k_exact != Some(r.k_float) {
            println!(
                "  float clustering found {} distinct values; exact count used",
                r.k_float
            );
        }
        println!(
            "  distinct eigenvalues: {}",
            fmt_list(&r.distinct_eigenvalues)
        );
        println!(
            "  condition (i):  max residual {:.2e} (tol {:.2e})",
            r.max_condition_i_residual(),
            r.condition_i_tol
        );
        println!(
            "  condition (ii): residual {:.2e} (tol {:.2e})",
            r.condition_ii_residual, r.condition_ii_tol
        );
        println!(
            "  coefficient: {:.9} (closed form {:.9})",
            r.coefficient_b, r.expected_b
        );
        println!("  alpha: {}", fmt_list(&r.alpha));
        match r.verdict {
            Verdict::Pass => println!("  verdict: PASS"),
            Verdict::Fail(c) => println!("  verdict: FAIL ({c})"),
        }
    }
    println!(
        "diameter bound: diam = {} <= k - 1 = {}: {}",
        bound.diam,
        bound.k - 1,
        if bound.holds { "holds" } else { "VIOLATED" }
    );
    match involutions {
        Some(true) => println!("involution condition: holds"),
        Some(false) => println!("involution condition: VIOLATED"),
        None if g.n() > AUTOMORPHISM_MAX_N => {
            println!("involution condition: skipped (n > {AUTOMORPHISM_MAX_N})")
        }
        None => println!("involution condition: not applicable (no distinct spectrum)"),
    }
    println!("result: {}", if passed { "PASS" } else { "FAIL" });
}
