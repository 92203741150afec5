use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{Elem, PartialAlgebra, Table};

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed algebra JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad algebra shape: {0}")]
    Shape(String),
}

/// An order entry: `true`/`false` or `1`/`0`.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Flag {
    Bool(bool),
    Int(u8),
}

impl Flag {
    fn value(self) -> Result<bool, LoadError> {
        match self {
            Flag::Bool(b) => Ok(b),
            Flag::Int(0) => Ok(false),
            Flag::Int(1) => Ok(true),
            Flag::Int(n) => Err(LoadError::Shape(format!("order entry {n} is not 0 or 1"))),
        }
    }
}

/// Wire format of an explicit algebra; `null` marks an undefined entry.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraJson {
    pub size: usize,
    pub leq: Vec<Vec<Flag>>,
    pub otimes: Vec<Vec<Option<Elem>>>,
    pub lol: Vec<Vec<Option<Elem>>>,
    pub lolinv: Vec<Vec<Option<Elem>>>,
    pub join: Vec<Vec<Option<Elem>>>,
    pub meet: Vec<Vec<Option<Elem>>>,
    pub neg: Vec<Option<Elem>>,
    pub one: Elem,
    pub top: Elem,
    pub bot: Elem,
}

impl From<&PartialAlgebra> for AlgebraJson {
    fn from(a: &PartialAlgebra) -> Self {
        AlgebraJson {
            size: a.size,
            leq: (0..a.size).map(|x| (0..a.size).map(|y| Flag::Bool(a.le(x, y))).collect()).collect(),
            otimes: a.otimes.rows(),
            lol: a.lol.rows(),
            lolinv: a.lolinv.rows(),
            join: a.join.rows(),
            meet: a.meet.rows(),
            neg: a.neg.clone(),
            one: a.one,
            top: a.top,
            bot: a.bot,
        }
    }
}

fn check_elem(size: usize, what: &str, v: Elem) -> Result<Elem, LoadError> {
    if v < size {
        Ok(v)
    } else {
        Err(LoadError::Shape(format!("{what} = {v} is outside 0..{size}")))
    }
}

fn load_table(size: usize, name: &str, rows: &[Vec<Option<Elem>>]) -> Result<Table, LoadError> {
    if rows.len() != size || rows.iter().any(|r| r.len() != size) {
        return Err(LoadError::Shape(format!("table `{name}` is not {size}x{size}")));
    }
    let mut t = Table::undefined(size);
    for (a, row) in rows.iter().enumerate() {
        for (b, v) in row.iter().enumerate() {
            if let Some(v) = v {
                t.set(a, b, Some(check_elem(size, &format!("{name}[{a}][{b}]"), *v)?));
            }
        }
    }
    Ok(t)
}

impl TryFrom<AlgebraJson> for PartialAlgebra {
    type Error = LoadError;

    fn try_from(j: AlgebraJson) -> Result<Self, LoadError> {
        let n = j.size;
        if n == 0 {
            return Err(LoadError::Shape("empty universe".into()));
        }
        if n > crate::bitset::MAX_BITS {
            return Err(LoadError::Shape(format!("size {n} exceeds {}", crate::bitset::MAX_BITS)));
        }
        if j.leq.len() != n || j.leq.iter().any(|r| r.len() != n) {
            return Err(LoadError::Shape(format!("order `leq` is not {n}x{n}")));
        }
        if j.neg.len() != n {
            return Err(LoadError::Shape(format!("negation has {} entries, expected {n}", j.neg.len())));
        }
        let mut leq = Vec::with_capacity(n * n);
        for row in &j.leq {
            for f in row {
                leq.push(f.value()?);
            }
        }
        let neg = j
            .neg
            .iter()
            .enumerate()
            .map(|(a, v)| v.map(|v| check_elem(n, &format!("neg[{a}]"), v)).transpose())
            .collect::<Result<_, _>>()?;
        Ok(PartialAlgebra {
            size: n,
            leq,
            otimes: load_table(n, "otimes", &j.otimes)?,
            lol: load_table(n, "lol", &j.lol)?,
            lolinv: load_table(n, "lolinv", &j.lolinv)?,
            join: load_table(n, "join", &j.join)?,
            meet: load_table(n, "meet", &j.meet)?,
            neg,
            one: check_elem(n, "one", j.one)?,
            top: check_elem(n, "top", j.top)?,
            bot: check_elem(n, "bot", j.bot)?,
        })
    }
}

impl PartialAlgebra {
    pub fn from_json_str(text: &str) -> Result<PartialAlgebra, LoadError> {
        let j: AlgebraJson = serde_json::from_str(text)?;
        PartialAlgebra::try_from(j)
    }

    pub fn load(path: &Path) -> Result<PartialAlgebra, LoadError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| LoadError::Io { path: path.display().to_string(), source })?;
        PartialAlgebra::from_json_str(&text)
    }

    pub fn to_json(&self) -> AlgebraJson {
        AlgebraJson::from(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let a = PartialAlgebra::boolean(2);
        let text = serde_json::to_string(&a.to_json()).unwrap();
        assert_eq!(PartialAlgebra::from_json_str(&text).unwrap(), a);
    }

    #[test]
    fn null_entries_and_integer_order() {
        let text = r#"{"size":2,"leq":[[1,1],[0,1]],
            "otimes":[[0,0],[0,1]],"lol":[[1,1],[null,1]],"lolinv":[[1,null],[1,1]],
            "join":[[0,1],[1,1]],"meet":[[0,0],[0,1]],"neg":[1,0],"one":1,"top":1,"bot":0}"#;
        let a = PartialAlgebra::from_json_str(text).unwrap();
        assert_eq!(a.lol.get(1, 0), None);
        assert_eq!(a.lolinv.get(0, 1), None);
        assert!(a.le(0, 1) && !a.le(1, 0));
    }

    #[test]
    fn shape_errors() {
        let mut j = PartialAlgebra::two_chain().to_json();
        j.otimes.pop();
        assert!(matches!(PartialAlgebra::try_from(j), Err(LoadError::Shape(_))));
        let mut j = PartialAlgebra::two_chain().to_json();
        j.top = 7;
        assert!(matches!(PartialAlgebra::try_from(j), Err(LoadError::Shape(_))));
        let mut j = PartialAlgebra::two_chain().to_json();
        j.leq[0][0] = Flag::Int(3);
        assert!(matches!(PartialAlgebra::try_from(j), Err(LoadError::Shape(_))));
        assert!(matches!(PartialAlgebra::from_json_str("{\"size\":"), Err(LoadError::Json(_))));
    }
}
