//! Wire formats: JSON shapes for polynomials and lattices, CSV/JSON grids.
//!
//! Big integers always travel as decimal strings.

use std::fmt::Write as _;
use std::str::FromStr;

use anyon_deg_core::lattice::{Lattice, Vertex};
use anyon_deg_core::poly::{IntPoly, RationalFn};
use anyon_deg_core::spectral::SpectralReport;
use anyon_deg_core::syt::{AuditEntry, Shape3};
use anyon_deg_core::{BigInt, BigUint};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub coeffs: Vec<String>,
}

impl From<&IntPoly> for PolyJson {
    fn from(p: &IntPoly) -> Self {
        PolyJson {
            coeffs: p.coeffs().iter().map(ToString::to_string).collect(),
        }
    }
}

impl TryFrom<&PolyJson> for IntPoly {
    type Error = String;

    fn try_from(p: &PolyJson) -> Result<Self, Self::Error> {
        p.coeffs
            .iter()
            .map(|c| BigInt::from_str(c).map_err(|e| format!("bad coefficient {c:?}: {e}")))
            .collect::<Result<Vec<_>, _>>()
            .map(IntPoly::from_coeffs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeJson {
    pub k: u32,
    pub vertices: Vec<[u32; 2]>,
    pub edges: Vec<[[u32; 2]; 2]>,
}

fn pair(v: Vertex) -> [u32; 2] {
    [v.i, v.j]
}

impl From<&Lattice> for LatticeJson {
    fn from(l: &Lattice) -> Self {
        LatticeJson {
            k: l.k(),
            vertices: l.vertices().iter().copied().map(pair).collect(),
            edges: l.edges().iter().map(|&(a, b)| [pair(a), pair(b)]).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenFnJson {
    pub vertex: [u32; 2],
    pub num: PolyJson,
    pub den: PolyJson,
}

impl GenFnJson {
    pub fn new(v: Vertex, f: &RationalFn) -> Self {
        GenFnJson {
            vertex: pair(v),
            num: f.num().into(),
            den: f.den().into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionJson {
    pub k: u32,
    pub determinant: PolyJson,
    pub functions: Vec<GenFnJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralJson {
    pub k: u32,
    pub lambda_trig: f64,
    pub lambda_perron: f64,
    pub rho_root: f64,
    pub lambda_from_root: f64,
    pub agreement_gap: f64,
    pub rho_scaled: f64,
    pub tolerance: f64,
    pub agrees: bool,
}

impl SpectralJson {
    pub fn new(r: &SpectralReport, tolerance: f64) -> Self {
        SpectralJson {
            k: r.k,
            lambda_trig: r.lambda_trig,
            lambda_perron: r.lambda_perron,
            rho_root: r.rho_root,
            lambda_from_root: r.lambda_from_root,
            agreement_gap: r.agreement_gap,
            rho_scaled: r.rho_scaled,
            tolerance,
            agrees: r.agrees(tolerance),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditEntryJson {
    pub n: u32,
    pub vertex: [u32; 2],
    pub shape: [u32; 3],
    pub hook: String,
    /// Printed closed form as a reduced fraction `p/q`, or an integer.
    pub printed: String,
    pub agrees: bool,
}

impl From<&AuditEntry> for AuditEntryJson {
    fn from(e: &AuditEntry) -> Self {
        AuditEntryJson {
            n: e.n,
            vertex: pair(e.vertex),
            shape: e.shape.rows(),
            hook: e.hook.to_string(),
            printed: e.printed.to_string(),
            agrees: e.agrees(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditSummaryJson {
    pub checked: usize,
    pub agreements: usize,
    pub disagreements: usize,
    /// Every checked entry at the origin agrees.
    pub origin_all_agree: bool,
    pub first_disagreement: Option<AuditEntryJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditJson {
    pub max_n: u32,
    pub summary: AuditSummaryJson,
    pub entries: Vec<AuditEntryJson>,
}

impl AuditJson {
    pub fn new(max_n: u32, entries: &[AuditEntry]) -> Self {
        let entries: Vec<AuditEntryJson> = entries.iter().map(Into::into).collect();
        let agreements = entries.iter().filter(|e| e.agrees).count();
        let origin_all_agree = entries
            .iter()
            .filter(|e| e.vertex == [0, 0])
            .all(|e| e.agrees);
        AuditJson {
            max_n,
            summary: AuditSummaryJson {
                checked: entries.len(),
                agreements,
                disagreements: entries.len() - agreements,
                origin_all_agree,
                first_disagreement: entries.iter().find(|e| !e.agrees).cloned(),
            },
            entries,
        }
    }
}

/// Step counts shown in a table: all of `0..=n_max`, or only those with
/// `n ≡ 2i + j (mod 3)` where the count can be nonzero.
pub fn table_columns(n_max: u32, v: Vertex, all_columns: bool) -> Vec<u32> {
    (0..=n_max)
        .filter(|&n| all_columns || n % 3 == v.residue())
        .collect()
}

/// CSV with header `k\n,<columns>` and one row per level.
pub fn table_csv(rows: &[(u32, Vec<BigUint>)], columns: &[u32]) -> String {
    let mut out = String::from("k\\n");
    for n in columns {
        write!(out, ",{n}").unwrap();
    }
    out.push('\n');
    for (k, row) in rows {
        write!(out, "{k}").unwrap();
        for &n in columns {
            write!(out, ",{}", row[n as usize]).unwrap();
        }
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRowJson {
    pub k: u32,
    pub counts: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub vertex: [u32; 2],
    pub columns: Vec<u32>,
    pub rows: Vec<TableRowJson>,
}

impl TableJson {
    pub fn new(v: Vertex, rows: &[(u32, Vec<BigUint>)], columns: &[u32]) -> Self {
        TableJson {
            vertex: pair(v),
            columns: columns.to_vec(),
            rows: rows
                .iter()
                .map(|(k, row)| TableRowJson {
                    k: *k,
                    counts: columns.iter().map(|&n| row[n as usize].to_string()).collect(),
                })
                .collect(),
        }
    }
}

/// Parse `I,J`.
pub fn parse_vertex(s: &str) -> Result<Vertex, String> {
    let (i, j) = s
        .split_once(',')
        .ok_or_else(|| format!("expected I,J but got {s:?}"))?;
    let parse = |x: &str| {
        x.trim()
            .parse::<u32>()
            .map_err(|e| format!("bad coordinate {x:?}: {e}"))
    };
    Ok(Vertex::new(parse(i)?, parse(j)?))
}

/// Parse `R1,R2,R3`.
pub fn parse_shape(s: &str) -> Result<Shape3, String> {
    let rows = s
        .split(',')
        .map(|x| {
            x.trim()
                .parse::<u32>()
                .map_err(|e| format!("bad row length {x:?}: {e}"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let [r1, r2, r3] = rows[..] else {
        return Err(format!("expected R1,R2,R3 but got {s:?}"));
    };
    Shape3::new(r1, r2, r3).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_json_shape() {
        let p: IntPoly = "1 - 4*t^3 - 1*t^6".parse().unwrap();
        let json = serde_json::to_string(&PolyJson::from(&p)).unwrap();
        assert_eq!(json, r#"{"coeffs":["1","0","0","-4","0","0","-1"]}"#);
        let back: PolyJson = serde_json::from_str(&json).unwrap();
        assert_eq!(IntPoly::try_from(&back).unwrap(), p);
        let bad = PolyJson {
            coeffs: vec!["1".into(), "x".into()],
        };
        assert!(IntPoly::try_from(&bad).is_err());
    }

    #[test]
    fn lattice_json_shape() {
        let l = Lattice::new(1).unwrap();
        let json = serde_json::to_string(&LatticeJson::from(&l)).unwrap();
        assert_eq!(
            json,
            r#"{"k":1,"vertices":[[0,0],[0,1],[1,0]],"edges":[[[0,0],[0,1]],[[0,1],[1,0]],[[1,0],[0,0]]]}"#
        );
    }

    #[test]
    fn csv_layout() {
        let rows = vec![(1, (0..=6u32).map(|n| BigUint::from(u32::from(n % 3 == 0))).collect())];
        let cols = table_columns(6, Vertex::ORIGIN, false);
        assert_eq!(cols, [0, 3, 6]);
        assert_eq!(table_csv(&rows, &cols), "k\\n,0,3,6\n1,1,1,1\n");
        assert_eq!(table_columns(4, Vertex::new(0, 1), false), [1, 4]);
        assert_eq!(table_columns(2, Vertex::ORIGIN, true), [0, 1, 2]);
    }

    #[test]
    fn argument_parsing() {
        assert_eq!(parse_vertex("1,2"), Ok(Vertex::new(1, 2)));
        assert!(parse_vertex("1").is_err());
        assert!(parse_vertex("a,2").is_err());
        assert_eq!(parse_shape("3,2,1").unwrap().rows(), [3, 2, 1]);
        assert!(parse_shape("1,2,0").is_err());
        assert!(parse_shape("1,2").is_err());
    }
}
