//! Bundled analysis: invariants, theta, perfectness, witnesses,
//! classification, and the dimension bound for one graph, with stage timings.
//!
//! Witness vertex lists are printed 1-based to match the usual numbering of
//! the catalog graphs; everything internal stays 0-based.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::census::{find_odd_antihole, find_odd_hole, is_minimally_imperfect, HoleKind};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::{
    chromatic_number, clique_number, independence_number, DEFAULT_CHROMATIC_VERTEX_CAP,
};
use crate::orthorep::{dimension_lower_bound, DimensionBound, DIMENSION_BOUND_VERTEX_CAP};
use crate::theta::{classify, ContextualityClass, Verdict};

/// Hole-search stages are skipped above this size (subset enumeration).
pub const PERFECTNESS_VERTEX_CAP: usize = 18;
/// Minimal-imperfection stage cap (must test every vertex deletion).
use crate::census::MINIMAL_IMPERFECT_CAP;

/// A hole or antihole witness with 1-based vertex labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub kind: HoleKind,
    pub vertices: Vec<usize>,
}

/// Full per-graph analysis. Stages that exceed their caps are left `None`
/// and listed in `skipped`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub graph: String,
    pub n: usize,
    pub edges: usize,
    pub alpha: Option<usize>,
    pub omega: Option<usize>,
    pub chi: Option<usize>,
    pub perfect: Option<bool>,
    pub minimally_imperfect: Option<bool>,
    pub hole: Option<WitnessReport>,
    pub antihole: Option<WitnessReport>,
    pub classification: Option<ContextualityClass>,
    pub dimension: Option<DimensionBound>,
    pub skipped: Vec<String>,
    pub elapsed_ms: BTreeMap<String, f64>,
}

impl AnalysisReport {
    /// Whether the core stages (α, ϑ, classification) all ran.
    pub fn core_complete(&self) -> bool {
        self.classification.is_some() && self.alpha.is_some()
    }
}

/// Runs every analysis stage that fits its cap.
///
/// Consistency is machine-checked on every run: a perfect graph must classify
/// QNCG, and a QCG verdict must come with an odd-hole or odd-antihole
/// witness. A violation is a bug and reported as an internal error.
pub fn analyze(g: &Graph) -> Result<AnalysisReport> {
    let mut skipped = Vec::new();
    let mut elapsed = BTreeMap::new();

    let timed = |name: &str, out: &mut BTreeMap<String, f64>, f: &mut dyn FnMut() -> Result<()>| -> Result<()> {
        let started = Instant::now();
        let r = f();
        out.insert(name.to_string(), started.elapsed().as_secs_f64() * 1e3);
        r
    };

    let mut alpha = None;
    let mut omega = None;
    let mut chi = None;
    let mut perfect = None;
    let mut minimally_imperfect = None;
    let mut hole = None;
    let mut antihole = None;
    let mut classification: Option<ContextualityClass> = None;
    let mut dimension: Option<DimensionBound> = None;

    let stage = |name: &str,
                 skipped: &mut Vec<String>,
                 elapsed: &mut BTreeMap<String, f64>,
                 f: &mut dyn FnMut() -> Result<()>|
     -> Result<()> {
        match timed(name, elapsed, f) {
            Ok(()) => Ok(()),
            Err(Error::ResourceCap(reason)) => {
                skipped.push(format!("{name}: {reason}"));
                Ok(())
            }
            Err(other) => Err(other),
        }
    };

    stage("alpha", &mut skipped, &mut elapsed, &mut || {
        alpha = Some(independence_number(g)?);
        Ok(())
    })?;
    stage("omega", &mut skipped, &mut elapsed, &mut || {
        omega = Some(clique_number(g)?);
        Ok(())
    })?;
    if g.n() <= DEFAULT_CHROMATIC_VERTEX_CAP {
        stage("chi", &mut skipped, &mut elapsed, &mut || {
            chi = Some(chromatic_number(g)?);
            Ok(())
        })?;
    } else {
        skipped.push(format!(
            "chi: capped at {DEFAULT_CHROMATIC_VERTEX_CAP} vertices"
        ));
    }
    if g.n() <= PERFECTNESS_VERTEX_CAP {
        stage("perfectness", &mut skipped, &mut elapsed, &mut || {
            hole = find_odd_hole(g).map(|w| WitnessReport {
                kind: w.kind,
                vertices: w.vertices.iter().map(|v| v + 1).collect(),
            });
            antihole = find_odd_antihole(g).map(|w| WitnessReport {
                kind: HoleKind::Antihole,
                vertices: w.vertices.iter().map(|v| v + 1).collect(),
            });
            perfect = Some(hole.is_none() && antihole.is_none());
            Ok(())
        })?;
    } else {
        skipped.push(format!(
            "perfectness: capped at {PERFECTNESS_VERTEX_CAP} vertices"
        ));
    }
    if g.n() <= MINIMAL_IMPERFECT_CAP {
        stage("minimal_imperfection", &mut skipped, &mut elapsed, &mut || {
            minimally_imperfect = Some(is_minimally_imperfect(g)?);
            Ok(())
        })?;
    } else {
        skipped.push(format!(
            "minimal_imperfection: capped at {MINIMAL_IMPERFECT_CAP} vertices"
        ));
    }
    stage("classification", &mut skipped, &mut elapsed, &mut || {
        classification = Some(classify(g)?);
        Ok(())
    })?;
    if g.n() <= DIMENSION_BOUND_VERTEX_CAP {
        stage("dimension", &mut skipped, &mut elapsed, &mut || {
            dimension = Some(dimension_lower_bound(g)?);
            Ok(())
        })?;
    } else {
        skipped.push(format!(
            "dimension: capped at {DIMENSION_BOUND_VERTEX_CAP} vertices"
        ));
    }

    // Machine checks: perfect => QNCG; QCG => a basic (hole/antihole)
    // witness exists.
    if let (Some(true), Some(c)) = (perfect, &classification) {
        if c.verdict != Verdict::Qncg {
            return Err(Error::Internal(format!(
                "perfect graph {} classified {:?}",
                g.display_name(),
                c.verdict
            )));
        }
    }
    if let Some(c) = &classification {
        if c.verdict == Verdict::Qcg && perfect.is_some() && hole.is_none() && antihole.is_none() {
            return Err(Error::Internal(format!(
                "QCG verdict without hole or antihole witness for {}",
                g.display_name()
            )));
        }
    }

    Ok(AnalysisReport {
        graph: g.display_name(),
        n: g.n(),
        edges: g.edge_count(),
        alpha,
        omega,
        chi,
        perfect,
        minimally_imperfect,
        hole,
        antihole,
        classification,
        dimension,
        skipped,
        elapsed_ms: elapsed,
    })
}
