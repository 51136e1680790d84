//! The full check of a complex: Whitney test, simple connectivity, planar
//! rotation systems, local surfaces and the fattening, gathered into one
//! serializable report with an exit status.

use serde::Serialize;

use crate::complex::Complex2;
use crate::fattening::{fatten, induced_fat_rotation, verify_fat, FatReport};
use crate::rotation::{
    enumerate_by_oracle, enumerate_planar_rotation_systems, Method, RotationSystem, DEFAULT_ORACLE_BUDGET,
};
use crate::surfaces::{LocalStructure, SurfaceStats};
use crate::topology::{is_simply_connected, SimpleConnectivity, Verdict, DEFAULT_TIETZE_BUDGET};
use crate::whitney::{check_whitney, WhitneyReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_FAILED: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PipelineOptions {
    /// Enumerate rotation systems by exhaustive search even for Whitney complexes.
    pub force_oracle: bool,
    pub oracle_budget: u64,
    pub tietze_budget: usize,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions {
            force_oracle: false,
            oracle_budget: DEFAULT_ORACLE_BUDGET,
            tietze_budget: DEFAULT_TIETZE_BUDGET,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexSummary {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub euler_characteristic: i64,
    pub simplicial: bool,
    pub connected: bool,
}

impl ComplexSummary {
    pub fn of(x: &Complex2) -> Self {
        ComplexSummary {
            vertices: x.vertex_count(),
            edges: x.edge_count(),
            faces: x.face_count(),
            euler_characteristic: x.euler_characteristic(),
            simplicial: x.is_simplicial(),
            connected: x.is_connected(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologySection {
    /// `H_1` written as `0`, `Z^2`, `Z + Z/2` and so on.
    pub h1: Option<String>,
    pub simple_connectivity: Option<SimpleConnectivity>,
    pub verdict: Option<Verdict>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RotationSection {
    pub method: Method,
    /// Planar rotation systems up to reversal, when the search finished.
    pub count: Option<usize>,
    /// Each system as cycles keyed by `"u->v"` over the edges in at least three faces.
    pub systems: Vec<std::collections::BTreeMap<String, Vec<usize>>>,
    pub witness: Option<String>,
    pub nodes: u64,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurfaceEntry {
    pub faces: Vec<String>,
    pub stats: SurfaceStats,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurfacesSection {
    /// Index of the rotation system the surfaces belong to.
    pub system: Option<usize>,
    pub surfaces: Vec<SurfaceEntry>,
    pub skipped: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FatteningSection {
    pub status: &'static str,
    pub reason: Option<String>,
    pub complex: Option<ComplexSummary>,
    pub report: Option<FatReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PipelineReport {
    pub complex: ComplexSummary,
    pub whitney: WhitneyReport,
    pub homology: HomologySection,
    pub rotation_systems: RotationSection,
    pub surfaces: SurfacesSection,
    pub fattening: FatteningSection,
    pub exit_status: i32,
}

impl PipelineReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

pub fn homology_section(x: &Complex2, tietze_budget: usize) -> HomologySection {
    match is_simply_connected(x, tietze_budget) {
        Ok(sc) => HomologySection {
            h1: Some(sc.h1.to_string()),
            verdict: Some(sc.verdict),
            simple_connectivity: Some(sc),
            error: None,
        },
        Err(e) => HomologySection { h1: None, simple_connectivity: None, verdict: None, error: Some(e.to_string()) },
    }
}

/// Runs propagation when X is Whitney and the oracle otherwise.
pub fn rotation_section(
    x: &Complex2,
    whitney: bool,
    options: &PipelineOptions,
) -> (RotationSection, Vec<RotationSystem>) {
    let method = if whitney && !options.force_oracle { Method::Propagation } else { Method::Oracle };
    let result = match method {
        Method::Propagation => enumerate_planar_rotation_systems(x),
        Method::Oracle => enumerate_by_oracle(x, options.oracle_budget),
    };
    match result {
        Ok(en) => {
            let systems = en
                .systems
                .iter()
                .map(|s| {
                    let mut named = s.to_named_map(x);
                    named.retain(|_, c| c.len() >= 3);
                    named
                })
                .collect();
            let section = RotationSection {
                method,
                count: Some(en.systems.len()),
                systems,
                witness: en.witness,
                nodes: en.nodes,
                error: None,
            };
            (section, en.systems)
        }
        Err(e) => {
            let section = RotationSection {
                method,
                count: None,
                systems: Vec::new(),
                witness: None,
                nodes: 0,
                error: Some(e.to_string()),
            };
            (section, Vec::new())
        }
    }
}

pub fn surfaces_section(x: &Complex2, systems: &[RotationSystem]) -> SurfacesSection {
    let Some(sigma) = systems.first() else {
        return SurfacesSection {
            system: None,
            surfaces: Vec::new(),
            skipped: Some("no planar rotation system".to_string()),
        };
    };
    let surfaces = LocalStructure::new(x, sigma)
        .analyse()
        .into_iter()
        .map(|(s, stats)| SurfaceEntry { faces: s.faces.iter().map(|f| f.to_string()).collect(), stats })
        .collect();
    SurfacesSection { system: Some(0), surfaces, skipped: None }
}

pub fn fattening_section(x: &Complex2, whitney: bool, systems: &[RotationSystem]) -> FatteningSection {
    let skipped = |reason: &str| FatteningSection {
        status: "skipped",
        reason: Some(reason.to_string()),
        complex: None,
        report: None,
    };
    if !x.is_simplicial() {
        return skipped("complex is not simplicial");
    }
    if !whitney {
        return skipped("complex is not Whitney");
    }
    let Some(sigma) = systems.first() else {
        return skipped("no planar rotation system");
    };
    let failed = |reason: String, complex: Option<ComplexSummary>| FatteningSection {
        status: "failed",
        reason: Some(reason),
        complex,
        report: None,
    };
    let fat = match fatten(x, sigma) {
        Ok(fat) => fat,
        Err(e) => return failed(e.to_string(), None),
    };
    let summary = ComplexSummary::of(&fat.carrier);
    let sigma_fat = match induced_fat_rotation(&fat) {
        Ok(s) => s,
        Err(e) => return failed(e.to_string(), Some(summary)),
    };
    let report = verify_fat(&fat, &sigma_fat);
    FatteningSection {
        status: if report.ok { "verified" } else { "failed" },
        reason: (!report.ok).then(|| report.failures.join("; ")),
        complex: Some(summary),
        report: Some(report),
    }
}

pub fn run_pipeline(x: &Complex2, options: &PipelineOptions) -> PipelineReport {
    let whitney = check_whitney(x);
    let homology = homology_section(x, options.tietze_budget);
    let (rotation_systems, systems) = rotation_section(x, whitney.is_whitney, options);
    let surfaces = surfaces_section(x, &systems);
    let fattening = fattening_section(x, whitney.is_whitney, &systems);
    let success = whitney.is_whitney && homology.verdict == Some(Verdict::Proven) && rotation_systems.count == Some(1);
    PipelineReport {
        complex: ComplexSummary::of(x),
        whitney,
        homology,
        rotation_systems,
        surfaces,
        fattening,
        exit_status: if success { EXIT_OK } else { EXIT_FAILED },
    }
}
