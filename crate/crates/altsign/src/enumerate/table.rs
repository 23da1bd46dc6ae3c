use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::arith::{Integer, LaurentPoly, Var};
use crate::asm::{BoundaryStat, SymmetryClass};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    BruteForce,
    ClosedForm,
    Convolution,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::BruteForce => "brute-force",
            Provenance::ClosedForm => "closed-form",
            Provenance::Convolution => "convolution",
        })
    }
}

/// Counts of a class at one order, refined by a boundary statistic.
#[derive(Clone, Debug, PartialEq)]
pub struct RefinedTable {
    pub class: SymmetryClass,
    pub order: usize,
    pub stat: BoundaryStat,
    pub counts: BTreeMap<usize, Integer>,
    pub provenance: Provenance,
}

impl RefinedTable {
    pub fn new(class: SymmetryClass, order: usize, stat: BoundaryStat, provenance: Provenance) -> Self {
        RefinedTable { class, order, stat, counts: BTreeMap::new(), provenance }
    }

    /// Builds a table from positions 1, 2, … in order; zero entries are kept.
    pub fn from_values(
        class: SymmetryClass,
        order: usize,
        stat: BoundaryStat,
        provenance: Provenance,
        values: impl IntoIterator<Item = Integer>,
    ) -> Self {
        let mut t = Self::new(class, order, stat, provenance);
        t.counts = values.into_iter().enumerate().map(|(k, v)| (k + 1, v)).collect();
        t
    }

    /// Count at a position, zero outside the stored support.
    pub fn get(&self, pos: i64) -> Integer {
        if pos < 1 {
            return Integer::zero();
        }
        self.counts.get(&(pos as usize)).cloned().unwrap_or_else(Integer::zero)
    }

    pub fn total(&self) -> Integer {
        self.counts.values().sum()
    }

    /// Positions with a nonzero count.
    pub fn support(&self) -> Vec<usize> {
        self.counts.iter().filter(|(_, v)| !v.is_zero()).map(|(k, _)| *k).collect()
    }

    /// Σ count(i) · var^(i + shift).
    pub fn to_laurent(&self, var: Var, shift: i64) -> LaurentPoly<Integer> {
        LaurentPoly::from_terms(var, self.counts.iter().map(|(i, c)| (*i as i64 + shift, c.clone())))
    }

    /// Pointwise sum of two tables for the same class, order and statistic.
    pub fn merge(&self, other: &RefinedTable) -> Result<RefinedTable> {
        if (self.class, self.order, self.stat) != (other.class, other.order, other.stat) {
            return Err(Error::Parse("merging tables of different kinds".into()));
        }
        let mut out = self.clone();
        for (k, v) in &other.counts {
            let e = out.counts.entry(*k).or_insert_with(Integer::zero);
            *e = e.clone() + v.clone();
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        let counts: serde_json::Map<String, Value> =
            self.counts.iter().map(|(k, v)| (k.to_string(), Value::String(v.to_string()))).collect();
        serde_json::json!({
            "class": self.class.name(),
            "order": self.order,
            "statistic": self.stat.name(),
            "counts": counts,
            "provenance": self.provenance,
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let field = |k: &str| v.get(k).ok_or_else(|| Error::Parse(format!("missing field {k}")));
        let class = field("class")?.as_str().ok_or_else(|| Error::Parse("class".into()))?.parse()?;
        let stat = field("statistic")?.as_str().ok_or_else(|| Error::Parse("statistic".into()))?.parse()?;
        let order = field("order")?.as_u64().ok_or_else(|| Error::Parse("order".into()))? as usize;
        let provenance =
            serde_json::from_value(field("provenance")?.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let mut t = RefinedTable::new(class, order, stat, provenance);
        for (k, c) in field("counts")?.as_object().ok_or_else(|| Error::Parse("counts".into()))? {
            let pos = k.parse().map_err(|_| Error::Parse(format!("bad position {k:?}")))?;
            let s = c.as_str().ok_or_else(|| Error::Parse("counts are strings".into()))?;
            t.counts.insert(pos, crate::arith::serial::parse_integer(s)?);
        }
        Ok(t)
    }

    /// CSV rows `class,order,statistic,position,count` without a header.
    pub fn csv_rows(&self) -> Vec<String> {
        self.counts.iter().map(|(k, v)| format!("{},{},{},{},{}", self.class, self.order, self.stat, k, v)).collect()
    }
}

impl fmt::Display for RefinedTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} order {} by {} ({})", self.class, self.order, self.stat, self.provenance)?;
        for (k, v) in &self.counts {
            writeln!(f, "{k:>4}  {v}")?;
        }
        write!(f, "total {}", self.total())
    }
}

impl Serialize for RefinedTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for RefinedTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        Self::from_json(&v).map_err(serde::de::Error::custom)
    }
}
