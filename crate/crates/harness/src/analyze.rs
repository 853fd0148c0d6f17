//! Single-graph analyses behind `adhc-lab analyze`.

use std::fmt;
use std::str::FromStr;

use adhc_core::analysis::{
    check_nice_partition, classify_good_bad, derive_nice_partition, find_special_arcs,
    find_two_disjoint_special_arcs, is_robust_outexpander, ExpanderMode, ExpanderParams, EXACT_CAP,
};
use adhc_core::graph::{degree_profile, sigma_witness};
use adhc_core::{OrientedGraph, Partition4};
use anyhow::Context;
use serde_json::{json, Value};

use crate::params::Params;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnalyzeOp {
    Sigma,
    Expander,
    NicePartition,
    Classify,
    SpecialArcs,
}

impl FromStr for AnalyzeOp {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sigma" => Ok(AnalyzeOp::Sigma),
            "expander" => Ok(AnalyzeOp::Expander),
            "nice-partition" => Ok(AnalyzeOp::NicePartition),
            "classify" => Ok(AnalyzeOp::Classify),
            "special-arcs" => Ok(AnalyzeOp::SpecialArcs),
            other => Err(format!(
                "unknown op {other:?} (expected sigma, expander, nice-partition, classify or special-arcs)"
            )),
        }
    }
}

impl fmt::Display for AnalyzeOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AnalyzeOp::Sigma => "sigma",
            AnalyzeOp::Expander => "expander",
            AnalyzeOp::NicePartition => "nice-partition",
            AnalyzeOp::Classify => "classify",
            AnalyzeOp::SpecialArcs => "special-arcs",
        })
    }
}

fn expander_inputs(params: &Params) -> anyhow::Result<(ExpanderParams, ExpanderMode)> {
    let nu: f64 = params.require("nu")?;
    let tau: f64 = params.require("tau")?;
    let ep = ExpanderParams::new(nu, tau)?;
    let mode = match params.raw("mode").unwrap_or("exact") {
        "exact" => ExpanderMode::Exact { cap: params.get_or("cap", EXACT_CAP)? },
        "sampled" => ExpanderMode::Sampled { samples: params.get_or("samples", 1000)?, seed: params.get_or("seed", 0)? },
        other => anyhow::bail!("unknown expander mode {other:?} (expected exact or sampled)"),
    };
    Ok((ep, mode))
}

fn partition_input(g: &OrientedGraph, params: &Params, from_file: Option<Partition4>) -> anyhow::Result<Partition4> {
    let p = match params.raw("partition") {
        Some(letters) => Partition4::from_letters(letters)?,
        None => from_file.context("this op needs a partition: pass partition=ABCD... or a `# partition` comment")?,
    };
    p.validate(g.n()).context("partition does not match the graph")?;
    Ok(p)
}

fn partition_json(p: &Partition4) -> Value {
    json!({ "letters": p.to_letters(), "a": p.a, "b": p.b, "c": p.c, "d": p.d })
}

/// Runs `op` on `g`; the result is a JSON object with sets as sorted arrays.
pub fn run_analysis(
    g: &OrientedGraph,
    op: AnalyzeOp,
    params: &Params,
    file_partition: Option<Partition4>,
) -> anyhow::Result<Value> {
    let body = match op {
        AnalyzeOp::Sigma => {
            params.only(&[])?;
            let profile = degree_profile(g);
            let witness = sigma_witness(g).map(|(x, y, _)| [x, y]);
            json!({
                "n": g.n(),
                "arcs": g.arc_count(),
                "sigma_pm": profile.sigma_pm,
                "sigma_witness": witness,
                "delta0": profile.delta0,
            })
        }
        AnalyzeOp::Expander => {
            params.only(&["nu", "tau", "mode", "cap", "samples", "seed"])?;
            let (ep, mode) = expander_inputs(params)?;
            json!({ "params": ep, "report": is_robust_outexpander(g, ep, mode)? })
        }
        AnalyzeOp::NicePartition => {
            params.only(&["nu", "tau", "mode", "cap", "samples", "seed", "epsilon", "k"])?;
            let (ep, mode) = expander_inputs(params)?;
            let report = is_robust_outexpander(g, ep, mode)?;
            let epsilon: f64 = params.get_or("epsilon", ep.nu)?;
            let k: f64 = params.get_or("k", 1.0)?;
            let derived = if report.verdict {
                Value::Null
            } else {
                let d = derive_nice_partition(g, &report, ep.nu)?;
                let checks = check_nice_partition(&d.working_graph, &d.partition, epsilon, k);
                json!({ "partition": partition_json(&d.partition), "reversed": d.reversed, "checks": checks })
            };
            json!({ "params": ep, "report": report, "derived": derived })
        }
        AnalyzeOp::Classify => {
            params.only(&["delta", "partition"])?;
            let p = partition_input(g, params, file_partition)?;
            let delta: f64 = params.require("delta")?;
            let labels = classify_good_bad(g, &p, delta);
            json!({
                "partition": partition_json(&p),
                "delta": delta,
                "labels": labels.labels,
                "good": labels.good(),
                "bad": labels.bad(),
            })
        }
        AnalyzeOp::SpecialArcs => {
            params.only(&["partition"])?;
            let p = partition_input(g, params, file_partition)?;
            json!({
                "partition": partition_json(&p),
                "special_arcs": find_special_arcs(g, &p),
                "disjoint_pair": find_two_disjoint_special_arcs(g, &p),
            })
        }
    };
    Ok(json!({ "op": op.to_string(), "result": body }))
}
