//! JSON report payloads. Every report is a pure function of the inputs:
//! only structs and ordered containers are serialized, so byte-identical
//! runs produce byte-identical reports.

use serde::Serialize;
use sha2::{Digest, Sha256};

use quiverhom::homalg::{ExtReport, Resolution};
use quiverhom::search::Witness;
use quiverhom::{Module, Side};

pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Serialize)]
pub struct Report<T: Serialize> {
    pub command: &'static str,
    pub engine_version: &'static str,
    pub inputs: Inputs,
    pub result: T,
}

impl<T: Serialize> Report<T> {
    pub fn new(command: &'static str, inputs: Inputs, result: T) -> Self {
        Report { command, engine_version: ENGINE_VERSION, inputs, result }
    }

    pub fn print(&self) {
        println!(
            "{}",
            serde_json::to_string_pretty(self).expect("reports serialize")
        );
    }
}

#[derive(Serialize, Default)]
pub struct Inputs {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub algebra: Option<SourceDigest>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub module: Option<SourceDigest>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub length: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub side: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub budget: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mode: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
}

/// Where an input came from and the digest of its bytes.
#[derive(Serialize, Clone)]
pub struct SourceDigest {
    pub source: String,
    pub sha256: String,
}

impl SourceDigest {
    pub fn new(source: impl Into<String>, bytes: &[u8]) -> Self {
        let mut hasher = Sha256::new();
        hasher.update(bytes);
        let digest = hasher.finalize();
        let mut hex = String::with_capacity(64);
        for byte in digest {
            hex.push_str(&format!("{byte:02x}"));
        }
        SourceDigest { source: source.into(), sha256: hex }
    }
}

fn side_str(side: Side) -> &'static str {
    side.as_str()
}

#[derive(Serialize)]
pub struct CheckPayload {
    pub dimension: usize,
    pub vertices: usize,
    pub arrows: usize,
    pub admissible: bool,
    pub basis_counts: Vec<BasisCount>,
}

#[derive(Serialize)]
pub struct BasisCount {
    pub from: String,
    pub to: String,
    pub count: usize,
}

#[derive(Serialize)]
pub struct ExtPayload {
    pub degree: usize,
    pub side: &'static str,
    pub dims: Vec<usize>,
    pub is_zero: bool,
    pub is_projective: bool,
    pub kernel_dims: Vec<usize>,
    pub image_dims: Vec<usize>,
}

impl ExtPayload {
    pub fn from_report(r: &ExtReport) -> Self {
        ExtPayload {
            degree: r.degree,
            side: side_str(r.module.side()),
            dims: r.dims.as_slice().to_vec(),
            is_zero: r.is_zero,
            is_projective: r.is_projective,
            kernel_dims: r.kernel_dims.as_slice().to_vec(),
            image_dims: r.image_dims.as_slice().to_vec(),
        }
    }
}

#[derive(Serialize)]
pub struct TransposePayload {
    pub side: &'static str,
    pub dims: Vec<usize>,
    pub is_zero: bool,
}

impl TransposePayload {
    pub fn from_module(m: &Module) -> Self {
        TransposePayload {
            side: side_str(m.side()),
            dims: m.dims().as_slice().to_vec(),
            is_zero: m.is_zero(),
        }
    }
}

#[derive(Serialize)]
pub struct ResolvePayload {
    pub module_dims: Vec<usize>,
    pub terms: Vec<TermPayload>,
    pub syzygies: Vec<SyzygyPayload>,
}

#[derive(Serialize)]
pub struct TermPayload {
    pub summands: Vec<String>,
    pub dims: Vec<usize>,
}

#[derive(Serialize)]
pub struct SyzygyPayload {
    pub degree: usize,
    pub dims: Vec<usize>,
}

impl ResolvePayload {
    pub fn from_resolution(res: &Resolution) -> Self {
        let side = res.module().side();
        let quiver = res.module().algebra().quiver();
        let terms = res
            .terms()
            .iter()
            .zip(res.term_summands())
            .map(|(term, summands)| TermPayload {
                summands: summands
                    .iter()
                    .map(|&v| {
                        let label = quiver.vertex_label(v);
                        match side {
                            Side::Right => format!("e{label}R"),
                            Side::Left => format!("Re{label}"),
                        }
                    })
                    .collect(),
                dims: term.dims().as_slice().to_vec(),
            })
            .collect();
        let syzygies = res
            .syzygies()
            .iter()
            .enumerate()
            .map(|(k, m)| SyzygyPayload { degree: k + 1, dims: m.dims().as_slice().to_vec() })
            .collect();
        ResolvePayload {
            module_dims: res.module().dims().as_slice().to_vec(),
            terms,
            syzygies,
        }
    }
}

#[derive(Serialize)]
pub struct EvaluationPayload {
    pub injective: bool,
    pub surjective: bool,
    pub isomorphism: bool,
    pub double_dual_dims: Vec<usize>,
}

#[derive(Serialize)]
pub struct ReflexivePayload {
    pub torsionless: bool,
    pub reflexive: bool,
    pub two_reflexive: &'static str,
    pub evaluation: EvaluationPayload,
    pub ext1_of_transpose: ExtPayload,
    pub ext2_of_transpose: ExtPayload,
}

#[derive(Serialize)]
pub struct VerdictsPayload {
    pub torsionless: bool,
    pub reflexive: bool,
    pub two_reflexive: &'static str,
}

#[derive(Serialize)]
pub struct WitnessPayload {
    pub recipe: String,
    pub side: &'static str,
    pub dims: Vec<usize>,
    pub ext2: ExtPayload,
    pub verdicts: VerdictsPayload,
}

impl WitnessPayload {
    pub fn from_witness(w: &Witness) -> Self {
        WitnessPayload {
            recipe: w.recipe.clone(),
            side: side_str(w.module.side()),
            dims: w.module.dims().as_slice().to_vec(),
            ext2: ExtPayload::from_report(&w.ext2),
            verdicts: VerdictsPayload {
                torsionless: w.verdicts.torsionless,
                reflexive: w.verdicts.reflexive,
                two_reflexive: w.verdicts.two_reflexive.as_str(),
            },
        }
    }
}

#[derive(Serialize)]
pub struct HuntPayload {
    pub mode: &'static str,
    pub side: &'static str,
    pub budget: usize,
    pub candidates: usize,
    pub witnesses: Vec<WitnessPayload>,
}

#[derive(Serialize)]
pub struct VerifyPayload {
    pub field: String,
    pub passed: usize,
    pub failed: usize,
    pub checks: Vec<CheckOutcome>,
}

#[derive(Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}
