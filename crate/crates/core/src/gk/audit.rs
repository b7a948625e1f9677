//! Mechanical checks of the structural lemmas behind the lower bound, run
//! against a concrete representation of `G_k`.
//!
//! None of the checks can fail on a valid representation of `G_k` unless the
//! lemmas themselves are wrong; any such failure is recorded in
//! [`AuditReport::contradictions`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use super::{generate_gk, gk_vertices, GkParameters, GADGET_COUNT, SECONDARY_COUNT};
use crate::contact::{
    classify_constituents, contact_graph_unchecked, pure_members, validate, CpgRepresentation,
    PointKind, VertexId,
};
use crate::grid::{GridPath, GridPoint};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AuditError {
    #[error("representation has vertices outside G_{k}: {unexpected:?}")]
    VertexSetMismatch { k: u32, unexpected: Vec<VertexId> },
}

/// A shared point of two consecutive sewing paths of one gadget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claim1Contact {
    pub gadget: u32,
    /// Chain position `j` of the pair `(sew:i:j, sew:i:(j+1))`.
    pub pair: u32,
    pub point: GridPoint,
    pub kind: PointKind,
    pub at_flank_bend: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    pub k: u32,
    pub valid: bool,
    pub violation_count: usize,
    pub graph_match: bool,
    pub per_path_bends: BTreeMap<VertexId, usize>,
    pub max_bend: usize,
    pub pure_secondaries: BTreeSet<VertexId>,
    /// At most four secondaries carry a hub endpoint.
    pub impure_bound_ok: bool,
    pub observation1_ok: bool,
    pub claim1_contacts: Vec<Claim1Contact>,
    pub claim1_ok: bool,
    /// Gadget index -> (bends of the left flank, bends of the right flank)
    /// that coincide with endpoints of that gadget's sewing paths.
    pub claim2_table: BTreeMap<u32, (usize, usize)>,
    pub claim2_ok: bool,
    /// First `j` with `alpha:j..=alpha:(j+3)` all pure.
    pub pure_window: Option<u32>,
    /// A path with at least `k+1` bends, with its bend count.
    pub witness: Option<(VertexId, usize)>,
    pub counting_ok: bool,
    /// Valid representations of `G_k` never get below `k+1` bends.
    pub lower_bound_ok: bool,
    pub contradictions: Vec<String>,
    pub details: Vec<String>,
}

impl AuditReport {
    pub fn all_ok(&self) -> bool {
        self.valid
            && self.graph_match
            && self.impure_bound_ok
            && self.observation1_ok
            && self.claim1_ok
            && self.claim2_ok
            && self.counting_ok
            && self.lower_bound_ok
    }
}

/// Audits `rep` as a representation of `G_k`.
///
/// Labels outside `G_k` are an error; missing labels only make
/// `graph_match` false.
pub fn audit_gk(rep: &CpgRepresentation, k: u32) -> Result<AuditReport, AuditError> {
    let params = GkParameters::new(k);
    let expected: BTreeSet<VertexId> = gk_vertices(k).into_iter().collect();
    let unexpected: Vec<VertexId> = rep
        .vertex_ids()
        .filter(|v| !expected.contains(v))
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if !unexpected.is_empty() {
        return Err(AuditError::VertexSetMismatch { k, unexpected });
    }

    let violations = validate(rep);
    let valid = violations.is_empty();
    let graph_match = valid && contact_graph_unchecked(rep) == generate_gk(k);
    let per_path_bends: BTreeMap<VertexId, usize> = rep
        .entries()
        .map(|(id, p)| (id.clone(), p.bend_count()))
        .collect();
    let max_bend = per_path_bends.values().copied().max().unwrap_or(0);

    let mut report = AuditReport {
        k,
        valid,
        violation_count: violations.len(),
        graph_match,
        per_path_bends,
        max_bend,
        pure_secondaries: BTreeSet::new(),
        impure_bound_ok: false,
        observation1_ok: false,
        claim1_contacts: Vec::new(),
        claim1_ok: false,
        claim2_table: BTreeMap::new(),
        claim2_ok: false,
        pure_window: None,
        witness: None,
        counting_ok: false,
        lower_bound_ok: true,
        contradictions: Vec::new(),
        details: Vec::new(),
    };

    if !valid {
        report
            .details
            .push(format!("{} violation(s); structural checks skipped", violations.len()));
        return Ok(report);
    }
    if !graph_match {
        report
            .details
            .push("contact graph differs from G_k; structural checks skipped".into());
        return Ok(report);
    }

    let view = View::new(rep);
    let hubs: BTreeSet<VertexId> = [VertexId::A, VertexId::B].into_iter().collect();
    let secondaries: BTreeSet<VertexId> = (1..=SECONDARY_COUNT).map(VertexId::Alpha).collect();
    report.pure_secondaries =
        pure_members(rep, &hubs, &secondaries).expect("all G_k labels present");
    let pure = |i: u32| report.pure_secondaries.contains(&VertexId::Alpha(i));

    let impure = secondaries.len() - report.pure_secondaries.len();
    report.impure_bound_ok = impure <= 4;
    if !report.impure_bound_ok {
        report
            .contradictions
            .push(format!("{impure} secondaries carry a hub endpoint (at most 4 expected)"));
    }

    // Observation 1.
    let pa = view.path(&VertexId::A);
    let pb = view.path(&VertexId::B);
    report.observation1_ok = true;
    for id in &report.pure_secondaries {
        let [s, t] = view.path(id).endpoints();
        let ok = (pa.contains(s) && pb.contains(t)) || (pb.contains(s) && pa.contains(t));
        if !ok {
            report.observation1_ok = false;
            report
                .contradictions
                .push(format!("pure {id} does not join a and b with its endpoints"));
        }
    }

    // Claim 1 and Claim 2, over gadgets with both flanks pure.
    report.claim1_ok = true;
    report.claim2_ok = true;
    let m = params.chain_len();
    for i in (1..=GADGET_COUNT).filter(|&i| pure(i) && pure(i + 1)) {
        let left = view.path(&VertexId::Alpha(i));
        let right = view.path(&VertexId::Alpha(i + 1));
        for j in 1..m {
            let u = view.path(&VertexId::Sew(i, j));
            let v = view.path(&VertexId::Sew(i, j + 1));
            let shared: BTreeSet<GridPoint> = u.points().filter(|&p| v.contains(p)).collect();
            if shared.is_empty() {
                report.claim1_ok = false;
                report
                    .contradictions
                    .push(format!("sew:{i}:{j} and sew:{i}:{} do not touch", j + 1));
            }
            for p in shared {
                let class = classify_constituents(rep.constituents(p));
                let at_flank_bend = left.is_bend(p) || right.is_bend(p);
                let ok = class.kind == PointKind::TypeIIb && at_flank_bend;
                if !ok {
                    report.claim1_ok = false;
                    report.contradictions.push(format!(
                        "contact {p} of sew:{i}:{j}/sew:{i}:{} is {} (flank bend: {at_flank_bend})",
                        j + 1,
                        class.kind
                    ));
                }
                report.claim1_contacts.push(Claim1Contact {
                    gadget: i,
                    pair: j,
                    point: p,
                    kind: class.kind,
                    at_flank_bend,
                });
            }
        }

        let ends = view.sewing_endpoints(i, m);
        let c_left = count_in(left.bend_points(), &ends);
        let c_right = count_in(right.bend_points(), &ends);
        report.claim2_table.insert(i, (c_left, c_right));
        let lo = c_left.min(c_right);
        let hi = c_left.max(c_right);
        if lo < params.floor_half() || hi < params.ceil_half() {
            report.claim2_ok = false;
            report.contradictions.push(format!(
                "gadget {i} bend split ({c_left}, {c_right}) below ({}, {})",
                params.floor_half(),
                params.ceil_half()
            ));
        }
    }

    // Counting argument: with at least 16 pure secondaries some window of
    // four consecutive ones is pure, and one of its middle paths collects
    // floor + ceil = k+1 bends from two gadgets.
    let need = params.k as usize + 1;
    report.pure_window = (1..=SECONDARY_COUNT - 3).find(|&j| (j..j + 4).all(pure));
    if report.pure_secondaries.len() >= 16 {
        match report.pure_window {
            Some(j) => {
                let (_, mid_left) = report.claim2_table[&(j + 1)];
                let candidates = if mid_left >= params.ceil_half() {
                    [(j + 1, j, j + 1), (j + 2, j + 1, j + 2)]
                } else {
                    [(j + 2, j + 1, j + 2), (j + 1, j, j + 1)]
                };
                for (alpha, g1, g2) in candidates {
                    let path = view.path(&VertexId::Alpha(alpha));
                    let mut ends = view.sewing_endpoints(g1, m);
                    ends.extend(view.sewing_endpoints(g2, m));
                    let attributed = count_in(path.bend_points(), &ends);
                    if attributed >= need {
                        report.witness = Some((VertexId::Alpha(alpha), path.bend_count()));
                        break;
                    }
                }
                report.counting_ok = report.witness.is_some();
                if let Some(j) = report.pure_window {
                    report.details.push(format!("pure window alpha:{j}..alpha:{}", j + 3));
                }
                if !report.counting_ok {
                    report
                        .contradictions
                        .push(format!("no path in window {j} collects {need} sewing bends"));
                }
            }
            None => {
                report
                    .contradictions
                    .push("16+ pure secondaries but no pure window of four".into());
            }
        }
    } else {
        report.counting_ok = true;
        report.details.push(format!(
            "only {} pure secondaries; counting argument vacuous",
            report.pure_secondaries.len()
        ));
    }

    report.lower_bound_ok = max_bend >= need;
    if !report.lower_bound_ok {
        report
            .contradictions
            .push(format!("valid representation of G_{k} with max bend {max_bend} < {need}"));
    }
    Ok(report)
}

fn count_in(points: &[GridPoint], set: &BTreeSet<GridPoint>) -> usize {
    points.iter().filter(|p| set.contains(p)).count()
}

struct View<'a> {
    rep: &'a CpgRepresentation,
}

impl<'a> View<'a> {
    fn new(rep: &'a CpgRepresentation) -> Self {
        Self { rep }
    }

    fn path(&self, id: &VertexId) -> &'a GridPath {
        self.rep.get(id).expect("graph match guarantees every label")
    }

    fn sewing_endpoints(&self, gadget: u32, m: u32) -> BTreeSet<GridPoint> {
        (1..=m)
            .flat_map(|j| self.path(&VertexId::Sew(gadget, j)).endpoints())
            .collect()
    }
}

impl fmt::Display for AuditReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yn = |b: bool| if b { "true" } else { "false" };
        writeln!(f, "audit k={}", self.k)?;
        writeln!(f, "valid: {} ({} violations)", yn(self.valid), self.violation_count)?;
        writeln!(f, "graph_match: {}", yn(self.graph_match))?;
        writeln!(f, "max_bend: {}", self.max_bend)?;
        writeln!(f, "pure_secondaries: {}", self.pure_secondaries.len())?;
        writeln!(f, "impure_bound_ok: {}", yn(self.impure_bound_ok))?;
        writeln!(f, "observation1_ok: {}", yn(self.observation1_ok))?;
        let iib = self
            .claim1_contacts
            .iter()
            .filter(|c| c.kind == PointKind::TypeIIb)
            .count();
        writeln!(
            f,
            "claim1_ok: {} ({} contacts, {} TypeIIb)",
            yn(self.claim1_ok),
            self.claim1_contacts.len(),
            iib
        )?;
        writeln!(f, "claim2_ok: {}", yn(self.claim2_ok))?;
        for (g, (l, r)) in &self.claim2_table {
            writeln!(f, "  gadget {g}: left={l} right={r}")?;
        }
        match &self.witness {
            Some((id, bends)) => writeln!(
                f,
                "counting_ok: {} (witness {id} with {bends} bends)",
                yn(self.counting_ok)
            )?,
            None => writeln!(f, "counting_ok: {}", yn(self.counting_ok))?,
        }
        writeln!(f, "lower_bound_ok: {}", yn(self.lower_bound_ok))?;
        for c in &self.contradictions {
            writeln!(f, "contradiction: {c}")?;
        }
        for d in &self.details {
            writeln!(f, "note: {d}")?;
        }
        writeln!(f, "result: {}", if self.all_ok() { "PASS" } else { "FAIL" })
    }
}
