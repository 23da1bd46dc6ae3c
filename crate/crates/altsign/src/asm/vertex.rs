use serde::{Deserialize, Serialize};

use super::Asm;
use crate::{Error, Result};

/// The six vertex types. Zero entries split by the partial sums
/// r = Σ_{j'<j} a_{i,j'} and c = Σ_{i'<i} a_{i',j}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VertexType {
    /// Entry 1.
    A1,
    /// Entry −1.
    A2,
    /// Zero with (r, c) = (0, 0).
    BLeft,
    /// Zero with (r, c) = (1, 1).
    BRight,
    /// Zero with (r, c) = (0, 1).
    CUp,
    /// Zero with (r, c) = (1, 0).
    CDown,
}

impl VertexType {
    /// Types whose zero entry has equal row and column partial sums.
    pub fn is_equal_sums(self) -> bool {
        matches!(self, VertexType::BLeft | VertexType::BRight)
    }

    pub fn from_partial_sums(entry: i8, r: i8, c: i8) -> VertexType {
        match (entry, r, c) {
            (1, _, _) => VertexType::A1,
            (-1, _, _) => VertexType::A2,
            (_, 0, 0) => VertexType::BLeft,
            (_, 1, 1) => VertexType::BRight,
            (_, 0, _) => VertexType::CUp,
            _ => VertexType::CDown,
        }
    }
}

pub fn vertex_type(a: &Asm, i: usize, j: usize) -> Result<VertexType> {
    let n = a.order();
    if i >= n || j >= n {
        return Err(Error::OutOfRange(format!("cell ({i},{j}) in order {n}")));
    }
    let r: i8 = (0..j).map(|k| a.get(i, k)).sum();
    let c: i8 = (0..i).map(|k| a.get(k, j)).sum();
    Ok(VertexType::from_partial_sums(a.get(i, j), r, c))
}
