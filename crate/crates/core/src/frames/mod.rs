//! Residuated frames: ternary relations with a unit set, their complex
//! algebras, and the frame built from prime filters of a partial algebra.

mod associated;
mod complex;
mod enumerate;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::{BitSet64, MAX_BITS};

pub use associated::{associated_frame, iota, relation_rb};
pub use complex::{verify_embedding, ComplexAlgebra, EmbeddingViolation};
pub use enumerate::{enumerate_frames, FrameStream};

/// A finite frame `(P, I, R)` with `P = 0..points`.
///
/// `R` is stored as one successor set per pair: `succ[x*k + y]` is
/// `{z : R(x, y, z)}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Frame {
    points: usize,
    unit: BitSet64,
    succ: Vec<BitSet64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error, Serialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum FrameViolation {
    #[error("no unit y with R({x}, y, {x})")]
    RightUnitMissing { x: usize },
    #[error("no unit z with R(z, {x}, {x})")]
    LeftUnitMissing { x: usize },
    #[error("R({x}, {y}, {z}) with {unit} a unit but {other} != {z}")]
    UnitNotNeutral { x: usize, y: usize, z: usize, unit: usize, other: usize },
}

#[derive(Debug, Error)]
pub enum FrameJsonError {
    #[error("malformed frame JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad frame: {0}")]
    Shape(String),
}

impl Frame {
    pub fn new(points: usize, unit: BitSet64, triples: impl IntoIterator<Item = (usize, usize, usize)>) -> Frame {
        assert!(points <= MAX_BITS, "frame with {points} points");
        let mut f = Frame { points, unit, succ: vec![BitSet64::EMPTY; points * points] };
        for (x, y, z) in triples {
            f.insert(x, y, z);
        }
        f
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn unit(&self) -> BitSet64 {
        self.unit
    }

    pub fn universe(&self) -> BitSet64 {
        BitSet64::full(self.points)
    }

    #[inline]
    pub fn successors(&self, x: usize, y: usize) -> BitSet64 {
        self.succ[x * self.points + y]
    }

    #[inline]
    pub fn contains(&self, x: usize, y: usize, z: usize) -> bool {
        self.successors(x, y).contains(z)
    }

    pub fn insert(&mut self, x: usize, y: usize, z: usize) {
        self.succ[x * self.points + y].insert(z);
    }

    /// All triples in lexicographic order.
    pub fn triples(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let k = self.points;
        (0..k * k).flat_map(move |i| self.succ[i].iter().map(move |z| (i / k, i % k, z)))
    }

    /// `(unit mask, relation mask)` with bit `(x*k + y)*k + z` for
    /// `R(x, y, z)`; the canonical enumeration order. Needs `k ≤ 5`.
    pub fn key(&self) -> (u64, u128) {
        let k = self.points;
        assert!(k * k * k <= 128, "frame key needs at most 5 points");
        let mut r = 0u128;
        for (x, y, z) in self.triples() {
            r |= 1u128 << ((x * k + y) * k + z);
        }
        (self.unit.0, r)
    }

    pub fn from_key(points: usize, unit: u64, rel: u128) -> Frame {
        let k = points;
        let mut f = Frame::new(k, BitSet64(unit), []);
        for bit in 0..k * k * k {
            if (rel >> bit) & 1 == 1 {
                f.insert(bit / (k * k), (bit / k) % k, bit % k);
            }
        }
        f
    }

    /// Relabel point `x` as `perm[x]`.
    pub fn permute(&self, perm: &[usize]) -> Frame {
        let unit = BitSet64::from_indices(self.unit.iter().map(|x| perm[x]));
        Frame::new(self.points, unit, self.triples().map(|(x, y, z)| (perm[x], perm[y], perm[z])))
    }

    pub fn to_json(&self) -> FrameJson {
        FrameJson {
            points: self.points,
            unit: self.unit.to_vec(),
            rel: self.triples().map(|(x, y, z)| [x, y, z]).collect(),
        }
    }

    pub fn from_json_str(text: &str) -> Result<Frame, FrameJsonError> {
        let j: FrameJson = serde_json::from_str(text)?;
        Frame::try_from(j)
    }
}

/// Wire format of a frame.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrameJson {
    pub points: usize,
    pub unit: Vec<usize>,
    pub rel: Vec<[usize; 3]>,
}

impl TryFrom<FrameJson> for Frame {
    type Error = FrameJsonError;

    fn try_from(j: FrameJson) -> Result<Frame, FrameJsonError> {
        let k = j.points;
        if k > MAX_BITS {
            return Err(FrameJsonError::Shape(format!("{k} points exceed {MAX_BITS}")));
        }
        let bad = |i: &usize| *i >= k;
        if j.unit.iter().any(bad) || j.rel.iter().any(|t| t.iter().any(bad)) {
            return Err(FrameJsonError::Shape(format!("point index outside 0..{k}")));
        }
        Ok(Frame::new(k, BitSet64::from_indices(j.unit), j.rel.into_iter().map(|[x, y, z]| (x, y, z))))
    }
}

impl Serialize for Frame {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

/// Every point has a unit on each side, and units are neutral: with `y`
/// a unit, `R(x, y, z)` or `R(y, x, z)` forces `x = z`.
pub fn check_frame(f: &Frame) -> Result<(), FrameViolation> {
    let k = f.points;
    for x in 0..k {
        if !f.unit.iter().any(|y| f.contains(x, y, x)) {
            return Err(FrameViolation::RightUnitMissing { x });
        }
        if !f.unit.iter().any(|z| f.contains(z, x, x)) {
            return Err(FrameViolation::LeftUnitMissing { x });
        }
    }
    for (x, y, z) in f.triples() {
        if f.unit.contains(y) && x != z {
            return Err(FrameViolation::UnitNotNeutral { x, y, z, unit: y, other: x });
        }
        if f.unit.contains(x) && y != z {
            return Err(FrameViolation::UnitNotNeutral { x, y, z, unit: x, other: y });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frame_check_examples() {
        let single = Frame::new(1, BitSet64::singleton(0), [(0, 0, 0)]);
        assert_eq!(check_frame(&single), Ok(()));
        let no_unit = Frame::new(1, BitSet64::EMPTY, [(0, 0, 0)]);
        assert_eq!(check_frame(&no_unit), Err(FrameViolation::RightUnitMissing { x: 0 }));
        let f = Frame::new(2, BitSet64::singleton(1), [(0, 1, 1), (0, 1, 0), (1, 0, 0), (1, 1, 1)]);
        assert_eq!(
            check_frame(&f),
            Err(FrameViolation::UnitNotNeutral { x: 0, y: 1, z: 1, unit: 1, other: 0 })
        );
    }

    #[test]
    fn key_and_json_round_trip() {
        let f = Frame::new(3, BitSet64::from_indices([0, 2]), [(0, 1, 2), (2, 2, 2), (1, 0, 1)]);
        let (u, r) = f.key();
        assert_eq!(Frame::from_key(3, u, r), f);
        let text = serde_json::to_string(&f).unwrap();
        assert_eq!(text, r#"{"points":3,"unit":[0,2],"rel":[[0,1,2],[1,0,1],[2,2,2]]}"#);
        assert_eq!(Frame::from_json_str(&text).unwrap(), f);
        assert!(Frame::from_json_str(r#"{"points":1,"unit":[3],"rel":[]}"#).is_err());
    }
}
