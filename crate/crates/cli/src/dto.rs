//! JSON wire formats for the CLI: file schemas for group specs, cocycle
//! tables, extensions, homomorphisms and representations, plus the report
//! shapes printed in `--format json`.

use pinlift::cohom::{AVal, CoeffHom, Coefficients, Cocycle2};
use pinlift::ext::{CentralExtension, LiftReport};
use pinlift::grp::{FiniteGroup, GroupHom, GroupSpec};
use pinlift::rat::{parse_rat, RatMat};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub type CocycleTable = Vec<Vec<AVal>>;

/// {"e": table spec, "i": [...], "p": [...], "coeffs": [...]} with the base
/// group reconstructed from the projection.
#[derive(Debug, Serialize, Deserialize)]
pub struct ExtensionFile {
    pub e: GroupSpec,
    pub i: Vec<usize>,
    pub p: Vec<usize>,
    pub coeffs: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub middle_iso: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct HomFile {
    pub source: GroupSpec,
    pub target: GroupSpec,
    pub map: Vec<usize>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CoeffHomFile {
    pub src: Vec<u64>,
    pub dst: Vec<u64>,
    pub images: Vec<AVal>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct RepFile {
    pub group: GroupSpec,
    pub dim: usize,
    /// element index (as a JSON object key) -> row-major matrix of "p/q"
    pub images: BTreeMap<String, Vec<Vec<String>>>,
}

pub fn parse_matrix(rows: &[Vec<String>], dim: usize) -> Result<RatMat, String> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err("matrix has the wrong shape".to_string());
    }
    let parsed: Option<Vec<Vec<_>>> = rows
        .iter()
        .map(|r| r.iter().map(|s| parse_rat(s)).collect())
        .collect();
    RatMat::from_rows(parsed.ok_or("unparsable rational entry")?)
        .ok_or_else(|| "matrix is not square".to_string())
}

pub fn cocycle_to_table(f: &Cocycle2) -> CocycleTable {
    f.rows()
}

pub fn extension_to_file(x: &CentralExtension) -> ExtensionFile {
    ExtensionFile {
        e: GroupSpec::Table { mul: x.middle().table_rows() },
        i: x.inclusion().map().to_vec(),
        p: x.projection().map().to_vec(),
        coeffs: x.coeffs().moduli().to_vec(),
        middle_iso: pinlift::grp::identify::identify(x.middle()),
    }
}

/// Rebuild a central extension from its file form. The base group table is
/// recovered from the projection; every structural invariant is re-checked.
pub fn extension_from_file(file: &ExtensionFile) -> Result<CentralExtension, String> {
    let e = match &file.e {
        GroupSpec::Table { mul } => {
            FiniteGroup::from_table(mul.clone()).map_err(|e| e.to_string())?
        }
        _ => return Err("extension middle group must be a table spec".to_string()),
    };
    let coeffs = Coefficients::new(file.coeffs.clone()).map_err(|e| e.to_string())?;
    if file.p.len() != e.order() {
        return Err("projection table has the wrong length".to_string());
    }
    let base_order = file.p.iter().max().map_or(0, |m| m + 1);
    if file.p[0] != 0 {
        return Err("projection must send the identity to index 0".to_string());
    }
    // reconstruct the base group table through representatives
    let mut rep = vec![usize::MAX; base_order];
    for (x, &g) in file.p.iter().enumerate() {
        if rep[g] == usize::MAX {
            rep[g] = x;
        }
    }
    if rep.contains(&usize::MAX) {
        return Err("projection is not surjective onto 0..max".to_string());
    }
    let mut mul = vec![vec![0usize; base_order]; base_order];
    for a in 0..base_order {
        for b in 0..base_order {
            mul[a][b] = file.p[e.mul(rep[a], rep[b])];
        }
    }
    let base = FiniteGroup::from_table(mul).map_err(|e| e.to_string())?;
    let i = GroupHom::new(coeffs.group(), e.clone(), file.i.clone())
        .map_err(|e| format!("kernel inclusion: {e}"))?;
    let p = GroupHom::new(e.clone(), base, file.p.clone())
        .map_err(|e| format!("projection: {e}"))?;
    CentralExtension::new(e, coeffs, i, p).map_err(|e| e.to_string())
}

pub fn hom_from_file(file: &HomFile, cap: usize) -> Result<GroupHom, String> {
    let source = pinlift::grp::generate(&file.source, cap).map_err(|e| e.to_string())?;
    let target = pinlift::grp::generate(&file.target, cap).map_err(|e| e.to_string())?;
    GroupHom::new(source.group, target.group, file.map.clone()).map_err(|e| e.to_string())
}

pub fn coeff_hom_from_file(file: &CoeffHomFile) -> Result<CoeffHom, String> {
    let src = Coefficients::new(file.src.clone()).map_err(|e| e.to_string())?;
    let dst = Coefficients::new(file.dst.clone()).map_err(|e| e.to_string())?;
    CoeffHom::new(src, dst, file.images.clone()).map_err(|e| e.to_string())
}

// ---------------------------------------------------------------------------
// reports
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize, Deserialize)]
pub struct GroupReport {
    pub order: usize,
    pub iso: Option<String>,
    pub center: usize,
    pub abelianization: Vec<u64>,
    pub exponent: usize,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct H2Report {
    pub group_order: usize,
    pub coeffs: Vec<u64>,
    pub dimension: usize,
    pub invariants: Vec<u64>,
    pub reps: Vec<CocycleTable>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ClassReport {
    pub group_order: usize,
    pub coeffs: Vec<u64>,
    pub table: CocycleTable,
    pub zero: bool,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct LiftJson {
    pub lifts: bool,
    pub obstruction: Option<CocycleTable>,
    pub count: u64,
    pub witness: Option<Vec<usize>>,
}

pub fn lift_to_json(report: &LiftReport) -> LiftJson {
    LiftJson {
        lifts: report.lifts,
        obstruction: report
            .obstruction
            .as_ref()
            .map(|c| cocycle_to_table(&c.canonical_rep())),
        count: report.count,
        witness: report.witness.as_ref().map(|w| w.map().to_vec()),
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct PinReport {
    pub order: usize,
    pub dim: usize,
    pub word_lengths: Vec<usize>,
    pub words: Vec<Vec<Vec<String>>>,
    pub plus: CocycleTable,
    pub minus: CocycleTable,
    pub tilde: CocycleTable,
    pub preimages: BTreeMap<String, Option<String>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SwcJson {
    pub w1: Vec<AVal>,
    pub w2: CocycleTable,
    pub w1_squared: CocycleTable,
    pub verdicts: BTreeMap<String, bool>,
    pub counts: BTreeMap<String, u64>,
    pub witnesses: BTreeMap<String, Option<Vec<usize>>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CheckJson {
    pub id: String,
    pub claim: String,
    pub passed: bool,
    pub millis: u128,
    pub budget_millis: u128,
    pub detail: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ChecksReport {
    pub seed: u64,
    pub checks: Vec<CheckJson>,
    pub all_passed: bool,
}
