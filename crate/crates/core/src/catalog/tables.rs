//! Table reproduction: every row is recomputed from the catalog at the manifest's sample points.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::algebras::real_algebra;
use super::appendix::{appendix_map, check_row, AppendixRow, Family, FamilyPoint, APPENDIX_ROWS};
use super::families::{FamilyIIParams, FamilyIParams, TABLE_1, TABLE_2};
use crate::complex::{classify_j_type, realify, standard_map, JType};
use crate::error::{Error, Result};
use crate::invariants::{betti, casimir_count_seeded};
use crate::kernel::rational::int;
use crate::kernel::{Complex, Gauss, QuadExt, RatFunc, Rational, DEFAULT_TRIALS};
use crate::lie::LieAlgebra;
use crate::parse::{eval_str, Env};

/// The checked-in sample manifest.
pub const BUILTIN_MANIFEST: &str = include_str!("../../data/samples.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TableId {
    T1,
    T2,
    T3,
    T4,
    T5,
    T8,
    T9,
    A,
    B,
}

impl TableId {
    pub const ALL: [TableId; 9] = [
        TableId::T1,
        TableId::T2,
        TableId::T3,
        TableId::T4,
        TableId::T5,
        TableId::T8,
        TableId::T9,
        TableId::A,
        TableId::B,
    ];

    pub fn title(self) -> &'static str {
        match self {
            TableId::T1 => "Family I: ascending type, center and J-type per parameter row",
            TableId::T2 => "Family II: ascending type, center and J-type per parameter row",
            TableId::T3 => "Ascending types of n1..n8",
            TableId::T4 => "Descending type and Casimir count in ascending type (1,3,6,8)",
            TableId::T5 => "Pairwise separation of the (1,3,6,8) classes",
            TableId::T8 => "Ascending types of m1..m4",
            TableId::T9 => "Second Betti number and Casimir count in ascending type (1,3,5,8)",
            TableId::A => "Family I dictionary rows realified against their targets",
            TableId::B => "Family II dictionary rows realified against their targets",
        }
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for TableId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        TableId::ALL
            .into_iter()
            .find(|t| t.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParams(format!("unknown table `{s}`")))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Manifest {
    pub version: u32,
    pub family_i: Vec<RowSamples<FamilyISample>>,
    pub family_ii: Vec<RowSamples<FamilyIISample>>,
    pub algebras: Vec<ClassSamples>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RowSamples<P> {
    pub row: String,
    pub points: Vec<P>,
    #[serde(default)]
    pub rationale: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FamilyISample {
    pub eps: u8,
    pub nu: u8,
    pub delta: i8,
    pub a: String,
    pub b: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FamilyIISample {
    pub eps: u8,
    pub mu: u8,
    pub nu: u8,
    pub a: String,
    pub b: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClassSamples {
    pub class: String,
    pub algebra: String,
    pub points: Vec<BTreeMap<String, String>>,
    #[serde(default)]
    pub rationale: String,
}

fn number(s: &str) -> Result<Rational> {
    eval_str::<Rational>(s, &Env::new(None))
}

impl FamilyISample {
    pub fn point(&self) -> Result<FamilyIParams> {
        FamilyIParams::numeric(self.eps, self.nu, self.delta, number(&self.a)?, number(&self.b)?)
    }
}

impl FamilyIISample {
    pub fn point(&self) -> Result<FamilyIIParams> {
        FamilyIIParams::numeric(self.eps, self.mu, self.nu, number(&self.a)?, number(&self.b)?)
    }
}

impl ClassSamples {
    /// The sample algebras with their labels.
    pub fn instances(&self) -> Result<Vec<(String, LieAlgebra<Rational>)>> {
        self.points
            .iter()
            .map(|p| {
                let vals = p
                    .iter()
                    .map(|(k, v)| Ok((k.as_str(), number(v)?)))
                    .collect::<Result<Vec<_>>>()?;
                let label = if p.is_empty() {
                    self.algebra.clone()
                } else {
                    let kv: Vec<String> = p.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    format!("{}({})", self.algebra, kv.join(","))
                };
                Ok((label, real_algebra(&self.algebra, &vals)?))
            })
            .collect()
    }
}

impl Manifest {
    pub fn builtin() -> Self {
        Self::from_json(BUILTIN_MANIFEST).expect("built-in manifest is valid")
    }

    /// Parses and checks that every point lies in the row it is listed under.
    pub fn from_json(src: &str) -> Result<Self> {
        let m: Manifest = serde_json::from_str(src)?;
        m.validate()?;
        Ok(m)
    }

    fn validate(&self) -> Result<()> {
        let bad = |row: &str, what: String| Error::InvalidParams(format!("manifest row {row}: {what}"));
        for r in &self.family_i {
            if !TABLE_1.iter().any(|t| t.label == r.row) {
                return Err(bad(&r.row, "unknown row".into()));
            }
            for s in &r.points {
                let p = s.point()?;
                let got = p.table_row().map(|t| t.label);
                if got != Some(r.row.as_str()) {
                    return Err(bad(&r.row, format!("point {s:?} lies in {got:?}")));
                }
            }
        }
        for r in &self.family_ii {
            if !TABLE_2.iter().any(|t| t.label == r.row) {
                return Err(bad(&r.row, "unknown row".into()));
            }
            for s in &r.points {
                let p = s.point()?;
                let got = p.table_row().map(|t| t.label);
                if got != Some(r.row.as_str()) {
                    return Err(bad(&r.row, format!("point {s:?} lies in {got:?}")));
                }
            }
        }
        for c in &self.algebras {
            c.instances()?;
        }
        Ok(())
    }

    fn class(&self, key: &str) -> Result<&ClassSamples> {
        self.algebras
            .iter()
            .find(|c| c.class == key)
            .ok_or_else(|| Error::InvalidParams(format!("manifest has no class `{key}`")))
    }

    fn family_points(&self, fam: Family) -> Result<Vec<(String, FamilyPoint)>> {
        let mut out = Vec::new();
        match fam {
            Family::I => {
                for r in &self.family_i {
                    for s in &r.points {
                        out.push((r.row.clone(), FamilyPoint::I(s.point()?)));
                    }
                }
            }
            Family::II => {
                for r in &self.family_ii {
                    for s in &r.points {
                        out.push((r.row.clone(), FamilyPoint::II(s.point()?)));
                    }
                }
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub column: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

impl Cell {
    fn new(column: &str, expected: impl Into<String>, computed: impl Into<String>) -> Self {
        let (expected, computed) = (expected.into(), computed.into());
        Cell {
            column: column.to_string(),
            pass: expected == computed,
            expected,
            computed,
        }
    }

    fn judged(column: &str, expected: &str, computed: String, pass: bool) -> Self {
        Cell {
            column: column.to_string(),
            expected: expected.to_string(),
            computed,
            pass,
        }
    }

    fn error(column: &str, expected: impl Into<String>, e: &Error) -> Self {
        Cell {
            column: column.to_string(),
            expected: expected.into(),
            computed: format!("error: {e}"),
            pass: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub row: String,
    pub sample: String,
    pub cells: Vec<Cell>,
    pub pass: bool,
}

impl ReportRow {
    fn new(row: impl Into<String>, sample: impl Into<String>, cells: Vec<Cell>) -> Self {
        let pass = !cells.is_empty() && cells.iter().all(|c| c.pass);
        ReportRow {
            row: row.into(),
            sample: sample.into(),
            cells,
            pass,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableReport {
    pub table: TableId,
    pub title: String,
    pub seed: u64,
    pub manifest_version: u32,
    pub rows: Vec<ReportRow>,
    pub pass: bool,
}

impl TableReport {
    pub fn render_text(&self) -> String {
        let mut s = format!("{} {}: {}\n", self.table, if self.pass { "PASS" } else { "FAIL" }, self.title);
        for r in &self.rows {
            let cells: Vec<String> = r
                .cells
                .iter()
                .map(|c| {
                    if c.pass {
                        format!("{}={}", c.column, c.computed)
                    } else {
                        format!("{}={} (expected {})", c.column, c.computed, c.expected)
                    }
                })
                .collect();
            s.push_str(&format!(
                "  [{}] {} | {} | {}\n",
                if r.pass { "ok" } else { "FAIL" },
                r.row,
                r.sample,
                cells.join("; ")
            ));
        }
        s
    }
}

pub fn tuple(v: &[usize]) -> String {
    let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", s.join(","))
}

/// Recomputes one table at the manifest's samples.
pub fn reproduce_table(table: TableId, manifest: &Manifest, seed: u64) -> Result<TableReport> {
    let rows = match table {
        TableId::T1 => family_rows(manifest, Family::I)?,
        TableId::T2 => family_rows(manifest, Family::II)?,
        TableId::T3 => ascending_rows(manifest, T3)?,
        TableId::T8 => ascending_rows(manifest, T8)?,
        TableId::T4 => invariant_rows(manifest, T4, seed)?,
        TableId::T9 => invariant_rows(manifest, T9, seed)?,
        TableId::T5 => separation_rows(manifest, seed)?,
        TableId::A => dictionary_rows(manifest, Family::I)?,
        TableId::B => dictionary_rows(manifest, Family::II)?,
    };
    Ok(TableReport {
        table,
        title: table.title().to_string(),
        seed,
        manifest_version: manifest.version,
        pass: !rows.is_empty() && rows.iter().all(|r| r.pass),
        rows,
    })
}

fn family_rows(m: &Manifest, fam: Family) -> Result<Vec<ReportRow>> {
    let mut out = Vec::new();
    let labels: Vec<(&str, &[usize])> = match fam {
        Family::I => TABLE_1.iter().map(|r| (r.label, r.ascending_type)).collect(),
        Family::II => TABLE_2.iter().map(|r| (r.label, r.ascending_type)).collect(),
    };
    let points = m.family_points(fam)?;
    for (label, expected) in labels {
        let mine: Vec<&FamilyPoint> = points.iter().filter(|(r, _)| r == label).map(|(_, p)| p).collect();
        if mine.is_empty() {
            out.push(ReportRow::new(label, "-", vec![Cell::new("samples", ">=1", "0")]));
        }
        for p in mine {
            let cells = match standard_realification(p) {
                Ok((g, jt)) => vec![
                    Cell::new("ascending", tuple(expected), tuple(&g.ascending_type())),
                    Cell::new("center", "1", g.center().dim().to_string()),
                    Cell::new("J-type", JType::StronglyNonNilpotent.label(), jt.label()),
                ],
                Err(e) => vec![Cell::error("ascending", tuple(expected), &e)],
            };
            out.push(ReportRow::new(label, p.label(), cells));
        }
    }
    Ok(out)
}

fn standard_realification(p: &FamilyPoint) -> Result<(LieAlgebra<Rational>, JType)> {
    let eqs = p.eqs::<Gauss>()?;
    let r = realify(&eqs, &standard_map::<Gauss>(4))?;
    let jt = classify_j_type(&r.algebra, &r.j);
    Ok((r.algebra, jt))
}

type ClassRow = (&'static str, &'static [&'static str]);

/// Rows of the ascending-type tables: label, manifest classes, expected type.
const T3: &[(ClassRow, &[usize])] = &[
    (("n1^0", &["n1^0"]), &[1, 3, 8]),
    (("n1^1", &["n1^1"]), &[1, 3, 8]),
    (("n2^alpha", &["n2^0", "n2^alpha"]), &[1, 3, 6, 8]),
    (("n3^0", &["n3^0"]), &[1, 3, 6, 8]),
    (("n3^1", &["n3^1"]), &[1, 3, 6, 8]),
    (("n4^{eta,theta}", &["n4^{eta,1}", "n4^{eta,theta}", "n4^{eta,0}"]), &[1, 3, 6, 8]),
    (("n5", &["n5"]), &[1, 4, 8]),
    (("n6", &["n6"]), &[1, 4, 6, 8]),
    (("n7", &["n7"]), &[1, 5, 8]),
    (("n8", &["n8"]), &[1, 5, 6, 8]),
];

const T8: &[(ClassRow, &[usize])] = &[
    (("m1^gamma", &["m1^gamma"]), &[1, 3, 5, 8]),
    (("m2^gamma", &["m2^0", "m2^1"]), &[1, 3, 5, 8]),
    (("m3^{alpha,beta}", &["m3^{alpha,beta}"]), &[1, 3, 5, 8]),
    (("m4^gamma", &["m4^gamma"]), &[1, 3, 5, 6, 8]),
];

fn ascending_rows(m: &Manifest, table: &[(ClassRow, &[usize])]) -> Result<Vec<ReportRow>> {
    let mut out = Vec::new();
    for ((label, classes), expected) in table {
        for c in *classes {
            for (sample, g) in m.class(c)?.instances()? {
                let cells = vec![Cell::new("ascending", tuple(expected), tuple(&g.ascending_type()))];
                out.push(ReportRow::new(*label, sample, cells));
            }
        }
    }
    Ok(out)
}

/// Expected `(column, value)` pairs per class.
type InvRow = (&'static str, &'static [(&'static str, &'static str)]);

const T4: &[InvRow] = &[
    ("n2^0", &[("descending", "(4,3,1,0)"), ("n_I", "4")]),
    ("n2^alpha", &[("descending", "(4,3,1,0)"), ("n_I", "2")]),
    ("n3^0", &[("descending", "(4,3,1,0)"), ("n_I", "4")]),
    ("n3^1", &[("descending", "(4,2,1,0)"), ("n_I", "4")]),
    ("n4^{eta,1}", &[("descending", "(4,2,1,0)"), ("n_I", "2")]),
    ("n4^{eta,theta}", &[("descending", "(4,3,1,0)"), ("n_I", "2")]),
    ("n4^{eta,0}", &[("descending", "(4,3,1,0)"), ("n_I", "2")]),
];

const T9: &[InvRow] = &[
    ("m1^gamma", &[("ascending", "(1,3,5,8)"), ("b2", "6"), ("n_I", "2")]),
    ("m2^0", &[("ascending", "(1,3,5,8)"), ("b2", "6"), ("n_I", "4")]),
    ("m2^1", &[("ascending", "(1,3,5,8)"), ("b2", "5"), ("n_I", "4")]),
    ("m3^{alpha,beta}", &[("ascending", "(1,3,5,8)"), ("b2", "4"), ("n_I", "2")]),
];

/// The invariant columns used by the tables, rendered as strings.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Invariants {
    ascending: String,
    descending: String,
    b2: String,
    n_i: String,
}

impl Invariants {
    fn of(g: &LieAlgebra<Rational>, seed: u64) -> Result<Self> {
        Ok(Invariants {
            ascending: tuple(&g.ascending_type()),
            descending: tuple(&g.descending_type()),
            b2: betti(g, 2).to_string(),
            n_i: casimir_count_seeded(g, DEFAULT_TRIALS, seed)?.to_string(),
        })
    }

    fn get(&self, column: &str) -> &str {
        match column {
            "ascending" => &self.ascending,
            "descending" => &self.descending,
            "b2" => &self.b2,
            "n_I" => &self.n_i,
            _ => unreachable!("unknown column {column}"),
        }
    }
}

fn invariant_rows(m: &Manifest, table: &[InvRow], seed: u64) -> Result<Vec<ReportRow>> {
    let mut out = Vec::new();
    for (class, cols) in table {
        for (sample, g) in m.class(class)?.instances()? {
            let inv = Invariants::of(&g, seed)?;
            let cells = cols.iter().map(|(c, e)| Cell::new(c, *e, inv.get(c))).collect();
            out.push(ReportRow::new(*class, sample, cells));
        }
    }
    Ok(out)
}

const T5_CLASSES: [&str; 7] = [
    "n2^0",
    "n2^alpha",
    "n3^0",
    "n3^1",
    "n4^{eta,1}",
    "n4^{eta,theta}",
    "n4^{eta,0}",
];

/// Upper triangle of the separation table. Named invariants must differ on every pair of
/// samples; roman cells are pairs the listed invariants do not separate, so they must agree.
const T5_CELLS: [[&str; 7]; 7] = [
    ["=", "nI", "(i)", "desc", "desc/nI", "nI", "nI"],
    ["", "(ii)", "nI", "nI", "desc", "(iii)", "(iii)"],
    ["", "", "=", "desc", "desc/nI", "nI", "nI"],
    ["", "", "", "=", "nI", "desc/nI", "desc/nI"],
    ["", "", "", "", "(iv)", "desc", "desc"],
    ["", "", "", "", "", "(v)", "(v)"],
    ["", "", "", "", "", "", "(v)"],
];

fn separation_rows(m: &Manifest, seed: u64) -> Result<Vec<ReportRow>> {
    let mut inv: Vec<Vec<(String, Invariants)>> = Vec::new();
    for c in T5_CLASSES {
        let mut v = Vec::new();
        for (s, g) in m.class(c)?.instances()? {
            v.push((s, Invariants::of(&g, seed)?));
        }
        inv.push(v);
    }
    let mut out = Vec::new();
    for i in 0..7 {
        for j in i..7 {
            let cell = T5_CELLS[i][j];
            let label = format!("{} vs {}: {cell}", T5_CLASSES[i], T5_CLASSES[j]);
            let mut pairs = Vec::new();
            for (a, (sa, x)) in inv[i].iter().enumerate() {
                for (b, (sb, y)) in inv[j].iter().enumerate() {
                    if i == j && b <= a && !(cell == "=" && a == b) {
                        continue;
                    }
                    pairs.push((format!("{sa} / {sb}"), x, y));
                }
            }
            if pairs.is_empty() {
                out.push(ReportRow::new(label, "-", vec![Cell::new("samples", ">=2", "1")]));
                continue;
            }
            for (sample, x, y) in pairs {
                let cells = match cell {
                    "=" | "(i)" | "(ii)" | "(iii)" | "(iv)" | "(v)" => ["ascending", "descending", "n_I"]
                        .iter()
                        .map(|c| Cell::new(c, "equal", if x.get(c) == y.get(c) { "equal" } else { "differ" }))
                        .collect(),
                    named => named
                        .split('/')
                        .map(|c| {
                            let c = if c == "desc" { "descending" } else { "n_I" };
                            let (u, v) = (x.get(c), y.get(c));
                            Cell::judged(c, "differ", format!("{u} vs {v}"), u != v)
                        })
                        .collect(),
                };
                out.push(ReportRow::new(label.clone(), sample, cells));
            }
        }
    }
    Ok(out)
}

fn dictionary_rows(m: &Manifest, fam: Family) -> Result<Vec<ReportRow>> {
    let points = m.family_points(fam)?;
    let mut out = Vec::new();
    for row in APPENDIX_ROWS.iter().filter(|r| r.family == fam) {
        let mine: Vec<&FamilyPoint> = points
            .iter()
            .map(|(_, p)| p)
            .filter(|p| appendix_map(p).map(|r| r.id == row.id).unwrap_or(false))
            .collect();
        if mine.is_empty() {
            out.push(ReportRow::new(row.id, "-", vec![Cell::new("samples", ">=1", "0")]));
        }
        for p in mine {
            out.push(dictionary_row(row, p, true));
        }
        for p in symbolic_points(row.id) {
            out.push(dictionary_row(row, &p, false));
        }
    }
    Ok(out)
}

/// Points with `a` or `b` left symbolic for the rows whose maps are rational in them.
fn symbolic_points(id: &str) -> Vec<FamilyPoint> {
    let i = |e, n, d, a: Option<i64>, b: Option<i64>| {
        FamilyPoint::I(FamilyIParams::new(e, n, d, a.map(int), b.map(int)).expect("valid flags"))
    };
    let ii = |e, m, n, a: Option<i64>, b: Option<i64>| {
        FamilyPoint::II(FamilyIIParams::new(e, m, n, a.map(int), b.map(int)).expect("valid flags"))
    };
    match id {
        "A2" => vec![i(0, 1, 1, Some(1), None), i(0, 1, -1, Some(1), None)],
        "A8" => vec![i(1, 1, 1, None, Some(2)), i(1, 1, -1, None, Some(-2))],
        "A10" => vec![i(1, 1, 1, Some(0), None)],
        "B1" => vec![ii(0, 1, 0, None, Some(0))],
        _ => vec![],
    }
}

fn dictionary_row(row: &AppendixRow, p: &FamilyPoint, numeric: bool) -> ReportRow {
    let check = if !numeric {
        check_row::<RatFunc>(row, p, false)
    } else if row.radical {
        check_row::<Complex<QuadExt>>(row, p, true)
    } else {
        check_row::<Gauss>(row, p, true)
    };
    let cells = match &check {
        Ok(c) => {
            let exact = if c.exact { "true".to_string() } else { format!("false: {}", c.realified) };
            let mut cells = vec![
                Cell::new("integrable", "true", c.integrable.to_string()),
                Cell::new("exact", "true", exact),
            ];
            if let Some(f) = c.fingerprint_match {
                cells.push(Cell::new("fingerprint", "true", f.to_string()));
            }
            cells
        }
        Err(e) => vec![Cell::error("realify", row.target, &e)],
    };
    let target = match &check {
        Ok(c) => c.target.clone(),
        Err(_) => row.target.to_string(),
    };
    ReportRow::new(format!("{} -> {target}", row.id), p.label(), cells)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::DEFAULT_SEED;

    fn report(t: TableId) -> TableReport {
        reproduce_table(t, &Manifest::builtin(), DEFAULT_SEED).unwrap()
    }

    #[test]
    fn all_tables_pass() {
        for t in TableId::ALL {
            let r = report(t);
            assert!(r.pass, "{}", r.render_text());
        }
    }
}
