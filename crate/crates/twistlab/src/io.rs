//! The JSON interchange formats: algebra tables, unary maps and subsets.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};
use twistlab_core::{Algebra, Elem, RawAlgebra, Subset, UnaryMap};

/// An algebra as stored on disk. Matrix entry `[x][y]` is `op(x, y)`; for
/// `rdiv` that is `x/y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraTable {
    pub size: usize,
    pub join: Vec<Vec<Elem>>,
    pub meet: Vec<Vec<Elem>>,
    pub prod: Vec<Vec<Elem>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ldiv: Option<Vec<Vec<Elem>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rdiv: Option<Vec<Vec<Elem>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Elem>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub invol: Option<Vec<Elem>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bottom: Option<Elem>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

impl From<RawAlgebra> for AlgebraTable {
    fn from(r: RawAlgebra) -> Self {
        AlgebraTable {
            size: r.size,
            join: r.join,
            meet: r.meet,
            prod: r.prod,
            ldiv: r.ldiv,
            rdiv: r.rdiv,
            unit: r.unit,
            invol: r.invol,
            bottom: r.bottom,
            names: r.names,
        }
    }
}

impl From<AlgebraTable> for RawAlgebra {
    fn from(t: AlgebraTable) -> Self {
        RawAlgebra {
            size: t.size,
            join: t.join,
            meet: t.meet,
            prod: t.prod,
            ldiv: t.ldiv,
            rdiv: t.rdiv,
            unit: t.unit,
            invol: t.invol,
            bottom: t.bottom,
            names: t.names,
        }
    }
}

impl From<&Algebra> for AlgebraTable {
    fn from(a: &Algebra) -> Self {
        a.to_raw().into()
    }
}

impl AlgebraTable {
    /// Validates the tables; the error carries the axiom report.
    pub fn certify(self) -> Result<Algebra> {
        Ok(Algebra::new(self.into())?)
    }

    /// Schema order, one matrix row per line.
    pub fn to_json(&self) -> String {
        let mut fields: Vec<(&str, String)> = vec![("size", self.size.to_string())];
        let matrix = |m: &Vec<Vec<Elem>>| {
            let rows: Vec<String> = m.iter().map(compact).collect();
            format!("[\n    {}\n  ]", rows.join(",\n    "))
        };
        fields.push(("join", matrix(&self.join)));
        fields.push(("meet", matrix(&self.meet)));
        fields.push(("prod", matrix(&self.prod)));
        if let Some(m) = &self.ldiv {
            fields.push(("ldiv", matrix(m)));
        }
        if let Some(m) = &self.rdiv {
            fields.push(("rdiv", matrix(m)));
        }
        if let Some(e) = self.unit {
            fields.push(("unit", e.to_string()));
        }
        if let Some(v) = &self.invol {
            fields.push(("invol", compact(v)));
        }
        if let Some(b) = self.bottom {
            fields.push(("bottom", b.to_string()));
        }
        if let Some(n) = &self.names {
            fields.push(("names", compact(n)));
        }
        let body: Vec<String> = fields.iter().map(|(k, v)| format!("  \"{k}\": {v}")).collect();
        format!("{{\n{}\n}}\n", body.join(",\n"))
    }
}

fn compact<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("plain data serializes")
}

/// A candidate (co)nucleus over a named algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnaryMapFile {
    pub parent: String,
    pub table: Vec<Elem>,
}

impl UnaryMapFile {
    pub fn for_algebra(&self, a: &Algebra) -> Result<UnaryMap> {
        if self.table.len() != a.size() || self.table.iter().any(|&v| v >= a.size()) {
            bail!("map over `{}` does not fit an algebra of size {}", self.parent, a.size());
        }
        Ok(UnaryMap::new(self.table.clone()))
    }
}

/// A subset, such as a filter, of a named algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetFile {
    pub parent: String,
    pub members: Vec<Elem>,
}

impl SubsetFile {
    pub fn for_algebra(&self, a: &Algebra) -> Result<Subset> {
        if let Some(&x) = self.members.iter().find(|&&x| x >= a.size()) {
            bail!("member {x} of a subset of `{}` is out of range", self.parent);
        }
        Ok(Subset::from_members(a.size(), self.members.iter().copied()))
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn read_algebra(path: &Path) -> Result<Algebra> {
    let table: AlgebraTable = read_json(path)?;
    table.certify().with_context(|| format!("validating {}", path.display()))
}

pub fn read_unary_map(path: &Path) -> Result<UnaryMapFile> {
    read_json(path)
}

pub fn read_subset(path: &Path) -> Result<SubsetFile> {
    read_json(path)
}

pub fn algebra_json(a: &Algebra) -> String {
    AlgebraTable::from(a).to_json()
}

pub fn write_algebra(path: &Path, a: &Algebra) -> Result<()> {
    fs::write(path, algebra_json(a)).with_context(|| format!("writing {}", path.display()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use twistlab_core::fixtures;

    #[test]
    fn pretty_output_parses_back() {
        let s3 = fixtures::sugihara3();
        let text = algebra_json(&s3);
        let back: AlgebraTable = serde_json::from_str(&text).unwrap();
        assert_eq!(back.certify().unwrap(), s3);
    }

    #[test]
    fn optional_fields_may_be_absent() {
        let text = r#"{"size":2,"join":[[0,1],[1,1]],"meet":[[0,0],[0,1]],"prod":[[0,0],[0,1]],"unit":1}"#;
        let t: AlgebraTable = serde_json::from_str(text).unwrap();
        let a = t.certify().unwrap();
        assert_eq!(a.ldiv(1, 0), 0);
        assert!(a.involution().is_none());
    }

    #[test]
    fn out_of_range_map_is_rejected() {
        let m = UnaryMapFile {
            parent: "2".into(),
            table: vec![0, 2],
        };
        assert!(m.for_algebra(&fixtures::two()).is_err());
    }
}
