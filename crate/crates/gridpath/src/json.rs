//! Canonical JSON interchange forms: a vertex is `[x,y]` (or `[x,y,z]`), a
//! path or cycle is `{"kind":"path","vertices":[[x,y],...]}`. Cycles are
//! serialized in their canonical orientation and rotation, so equal cycles
//! produce byte-identical output.

use crate::error::{Error, Result};
use crate::grid::{CycleSeq, PathSeq, Vertex, Violation};
use crate::grid3d::Vertex3;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

impl Serialize for Vertex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.x, self.y].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Vertex {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [x, y] = <[i64; 2]>::deserialize(d)?;
        Ok(Vertex::new(x, y))
    }
}

impl Serialize for Vertex3 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.x, self.y, self.z].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Vertex3 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [x, y, z] = <[i64; 3]>::deserialize(d)?;
        Ok(Vertex3::new(x, y, z))
    }
}

/// Any structure the CLI reads or writes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Artifact {
    Path(PathSeq),
    Cycle(CycleSeq),
    Path3(Vec<Vertex3>),
    Cycle3(Vec<Vertex3>),
}

#[derive(Serialize, Deserialize)]
struct Wire2 {
    kind: String,
    vertices: Vec<Vertex>,
}

#[derive(Serialize, Deserialize)]
struct Wire3 {
    kind: String,
    vertices: Vec<Vertex3>,
}

#[derive(Deserialize)]
struct WireProbe {
    kind: String,
    vertices: Vec<Vec<i64>>,
}

impl Artifact {
    pub fn to_json(&self) -> String {
        match self {
            Artifact::Path(p) => serde_json::to_string(&Wire2 {
                kind: "path".into(),
                vertices: p.vertices().to_vec(),
            }),
            Artifact::Cycle(c) => serde_json::to_string(&Wire2 {
                kind: "cycle".into(),
                vertices: c.vertices().to_vec(),
            }),
            Artifact::Path3(p) => serde_json::to_string(&Wire3 {
                kind: "path".into(),
                vertices: p.clone(),
            }),
            Artifact::Cycle3(c) => serde_json::to_string(&Wire3 {
                kind: "cycle".into(),
                vertices: c.clone(),
            }),
        }
        .expect("serialization of plain data cannot fail")
    }

    /// Parse either the 2D or the 3D form; the vertex arity decides.
    pub fn from_json(text: &str) -> Result<Artifact> {
        let probe: WireProbe = serde_json::from_str(text)
            .map_err(|_| Error::Invalid(Violation::TooShort))?;
        if probe.vertices.is_empty() {
            return Err(Error::Invalid(Violation::TooShort));
        }
        let arity = probe.vertices[0].len();
        if probe.vertices.iter().any(|v| v.len() != arity) {
            return Err(Error::Invalid(Violation::TooShort));
        }
        match (probe.kind.as_str(), arity) {
            ("path", 2) => {
                let vs = probe.vertices.iter().map(|v| Vertex::new(v[0], v[1])).collect();
                Ok(Artifact::Path(PathSeq::try_new(vs)?))
            }
            ("cycle", 2) => {
                let vs = probe.vertices.iter().map(|v| Vertex::new(v[0], v[1])).collect();
                Ok(Artifact::Cycle(CycleSeq::try_new(vs)?))
            }
            ("path", 3) => Ok(Artifact::Path3(
                probe
                    .vertices
                    .iter()
                    .map(|v| Vertex3::new(v[0], v[1], v[2]))
                    .collect(),
            )),
            ("cycle", 3) => Ok(Artifact::Cycle3(
                probe
                    .vertices
                    .iter()
                    .map(|v| Vertex3::new(v[0], v[1], v[2]))
                    .collect(),
            )),
            _ => Err(Error::Invalid(Violation::TooShort)),
        }
    }
}

pub fn deserialize_error(text: &str) -> serde_json::Error {
    serde_json::Error::custom(text.to_string())
}
