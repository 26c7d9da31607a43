//! Serializable views of core results and their text renderings.
//!
//! JSON key sets are fixed; fields are only ever added.

use std::fmt::Write as _;

use cutcode_core::bounds::BoundsReport;
use cutcode_core::code::WeightDistribution;
use cutcode_core::minimal::{MinimalityReport, WeightRatio};
use cutcode_core::search::{EquivalenceCertificate, SearchReport};
use cutcode_core::Elem;
use serde::Serialize;

fn word(c: &[Elem]) -> Vec<u32> {
    c.iter().map(|e| e.value()).collect()
}

/// Nonzero `A_i` keyed by the weight as a string, ascending by weight.
pub fn weight_map(wd: &WeightDistribution) -> serde_json::Map<String, serde_json::Value> {
    wd.nonzero()
        .map(|(w, a)| (w.to_string(), serde_json::Value::from(a)))
        .collect()
}

#[derive(Debug, Serialize)]
pub struct WeightsJson {
    pub n: usize,
    pub k: usize,
    pub q: u32,
    #[serde(rename = "A")]
    pub a: serde_json::Map<String, serde_json::Value>,
}

impl WeightsJson {
    pub fn new(wd: &WeightDistribution) -> Self {
        WeightsJson {
            n: wd.n(),
            k: wd.k(),
            q: wd.q(),
            a: weight_map(wd),
        }
    }
}

pub fn weights_text(wd: &WeightDistribution) -> String {
    wd.nonzero()
        .map(|(w, a)| format!("A_{w}={a}"))
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Debug, Serialize)]
pub struct MinimalityJson {
    pub minimal: bool,
    pub criterion: &'static str,
    pub witness: Option<[Vec<u32>; 2]>,
}

impl From<&MinimalityReport> for MinimalityJson {
    fn from(r: &MinimalityReport) -> Self {
        MinimalityJson {
            minimal: r.minimal,
            criterion: r.criterion.name(),
            witness: r.witness.as_ref().map(|(a, b)| [word(a), word(b)]),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct RatioJson {
    pub applies: bool,
    pub w_min: usize,
    pub w_max: usize,
}

impl From<WeightRatio> for RatioJson {
    fn from(r: WeightRatio) -> Self {
        RatioJson {
            applies: r.applies,
            w_min: r.w_min,
            w_max: r.w_max,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct VerifyCodeJson {
    pub parameters: String,
    /// Verdict of the exact criteria that ran; absent when only the
    /// sufficient ratio test ran and it did not apply.
    pub minimal: Option<bool>,
    pub reports: Vec<MinimalityJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ab: Option<RatioJson>,
}

#[derive(Debug, Serialize)]
pub struct TFoldJson {
    pub t: usize,
    pub r: usize,
}

#[derive(Debug, Serialize)]
pub struct VerifyPointsJson {
    pub n: usize,
    pub cutting: bool,
    pub minimal_cutting: bool,
    /// Largest `t` for which the set is `t`-fold `r`-blocking.
    pub tfold: TFoldJson,
}

#[derive(Debug, Serialize)]
pub struct PredictedJson {
    pub n: usize,
    pub k: usize,
    pub d: usize,
}

#[derive(Debug, Serialize)]
pub struct ConstructJson {
    pub label: String,
    pub q: u32,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub minimal: bool,
    pub reduced: bool,
    pub predicted: PredictedJson,
    #[serde(rename = "A")]
    pub a: serde_json::Map<String, serde_json::Value>,
    pub files: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct Dim3Json {
    pub lb: u64,
    pub case: u8,
    pub ub_reduced: u64,
}

#[derive(Debug, Serialize)]
pub struct ConjectureJson {
    pub d_lb: u64,
    pub n_lb: u64,
    pub conjectural: bool,
}

#[derive(Debug, Serialize)]
pub struct RatesJson {
    pub one_over_q: f64,
    pub maximal: f64,
    pub minimal: f64,
}

#[derive(Debug, Serialize)]
pub struct BoundsJson {
    pub q: u32,
    pub k: usize,
    pub geometric: u64,
    pub griesmer: u64,
    pub best: u64,
    pub distance: u64,
    pub conjectured: ConjectureJson,
    pub dim3: Option<Dim3Json>,
    pub rates: RatesJson,
}

impl From<&BoundsReport> for BoundsJson {
    fn from(b: &BoundsReport) -> Self {
        BoundsJson {
            q: b.q,
            k: b.k,
            geometric: b.lb_length_geometric,
            griesmer: b.lb_length_griesmer,
            best: b.lb_length_best,
            distance: b.lb_distance,
            conjectured: ConjectureJson {
                d_lb: b.conjectured.d_lb,
                n_lb: b.conjectured.n_lb,
                conjectural: b.conjectured.conjectural,
            },
            dim3: b.dim3.map(|d| Dim3Json {
                lb: d.lb,
                case: d.case.number(),
                ub_reduced: d.ub_reduced,
            }),
            rates: RatesJson {
                one_over_q: b.rates.one_over_q,
                maximal: b.rates.maximal,
                minimal: b.rates.minimal,
            },
        }
    }
}

pub fn bounds_text(b: &BoundsReport) -> String {
    let mut s = format!(
        "geometric={} griesmer={} best={} distance={}",
        b.lb_length_geometric, b.lb_length_griesmer, b.lb_length_best, b.lb_distance
    );
    if let Some(d) = b.dim3 {
        write!(
            s,
            " dim3={} (case {}) reduced_ub={}",
            d.lb,
            d.case.number(),
            d.ub_reduced
        )
        .unwrap();
    }
    write!(
        s,
        " conjectured_d={} conjectured_n={} (conjectural)",
        b.conjectured.d_lb, b.conjectured.n_lb
    )
    .unwrap();
    s
}

const GRID_HEADER: &str =
    "| q | k | geometric | griesmer | dim3 | best | distance | conjectured n (CONJECTURAL) |\n\
                           |---|---|---|---|---|---|---|---|\n";

fn grid_row(b: &BoundsReport) -> String {
    let dim3 = b.dim3.map_or("-".to_string(), |d| d.lb.to_string());
    format!(
        "| {} | {} | {} | {} | {} | {} | {} | {} |\n",
        b.q,
        b.k,
        b.lb_length_geometric,
        b.lb_length_griesmer,
        dim3,
        b.lb_length_best,
        b.lb_distance,
        b.conjectured.n_lb
    )
}

pub fn bounds_markdown(rows: &[BoundsReport]) -> String {
    let mut s = String::from(GRID_HEADER);
    for b in rows {
        s.push_str(&grid_row(b));
    }
    s
}

#[derive(Debug, Serialize)]
pub struct SearchJson {
    pub q: u32,
    pub k: usize,
    pub n: usize,
    pub mode: &'static str,
    pub symmetry: &'static str,
    pub exhaustive: bool,
    pub truncated: bool,
    pub nodes: u64,
    /// Decimal string: counts can exceed the JSON-safe integer range.
    pub count: String,
    pub found: Vec<Vec<usize>>,
    pub files: Vec<String>,
}

impl SearchJson {
    pub fn new(r: &SearchReport, files: Vec<String>) -> Self {
        SearchJson {
            q: r.q,
            k: r.k,
            n: r.n,
            mode: r.mode.name(),
            symmetry: r.symmetry.name(),
            exhaustive: r.exhaustive,
            truncated: r.truncated,
            nodes: r.nodes,
            count: r.count.to_string(),
            found: r.found.clone(),
            files,
        }
    }
}

pub fn search_text(r: &SearchReport) -> String {
    let mut s = format!(
        "PG({},{}) n={} mode={} symmetry={} count={} exhaustive={} nodes={}",
        r.k - 1,
        r.q,
        r.n,
        r.mode.name(),
        r.symmetry.name(),
        r.count,
        r.exhaustive,
        r.nodes
    );
    if r.truncated {
        s.push_str(" truncated=true");
    }
    for set in &r.found {
        let pts: Vec<String> = set.iter().map(|p| p.to_string()).collect();
        write!(s, "\n{{{}}}", pts.join(",")).unwrap();
    }
    s
}

#[derive(Debug, Serialize)]
pub struct EquivJson {
    pub equivalent: bool,
    pub perm: Option<Vec<usize>>,
    pub scalars: Option<Vec<u32>>,
    pub collineation: Option<Vec<Vec<u32>>>,
}

impl EquivJson {
    pub fn new(cert: Option<&EquivalenceCertificate>) -> Self {
        EquivJson {
            equivalent: cert.is_some(),
            perm: cert.map(|c| c.perm.clone()),
            scalars: cert.map(|c| word(&c.scalars)),
            collineation: cert.map(|c| c.collineation.iter().map(|r| word(r)).collect()),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ClassifyJson {
    pub inputs: usize,
    pub classes: Vec<ClassJson>,
}

#[derive(Debug, Serialize)]
pub struct ClassJson {
    pub size: usize,
    pub representative: String,
    #[serde(rename = "A")]
    pub a: serde_json::Map<String, serde_json::Value>,
    pub members: Vec<String>,
}

pub fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("report types serialize")
}
