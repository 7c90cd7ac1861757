//! File formats: complexes, graphs, and planning inputs as JSON with
//! 1-based indices.
//!
//! Complex: `{"n": 3, "facets": [[1,2],[2,3]]}`
//! Graph:   `{"n": 3, "edges": [[1,2],[2,3]]}`
//! Plan input: a complex plus two product points, either as angles (unit
//! circles) or as unit coordinate vectors (everything else):
//! `{"complex": {..}, "x": [1.57, 0.0], "y": [[0,1,0],[1,0,0]]}`.

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{ComplexError, Graph, Parity, SimplicialComplex, VertexSet};
use crate::planner::ProductPoint;
use crate::sphere::{GeometryError, Sphere, SpherePoint};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: String, source: serde_json::Error },
    #[error("{path}: {context}: {source}")]
    Complex { path: String, context: String, source: ComplexError },
    #[error("{path}: {context}: {source}")]
    Geometry { path: String, context: String, source: GeometryError },
    #[error("{path}: {context}")]
    Invalid { path: String, context: String },
}

/// On-disk form of a complex.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComplexFile {
    pub n: usize,
    pub facets: Vec<Vec<usize>>,
}

impl ComplexFile {
    pub fn from_complex(complex: &SimplicialComplex) -> Self {
        ComplexFile {
            n: complex.n(),
            facets: complex.facets().iter().map(|f| f.to_vec()).collect(),
        }
    }

    pub fn to_complex(&self) -> Result<SimplicialComplex, ComplexError> {
        let facets = self
            .facets
            .iter()
            .map(|f| VertexSet::from_indices(f.iter().copied(), self.n))
            .collect::<Result<Vec<_>, _>>()?;
        SimplicialComplex::from_facets(self.n, facets)
    }
}

/// On-disk form of a graph.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl GraphFile {
    pub fn from_graph(graph: &Graph) -> Self {
        GraphFile { n: graph.n(), edges: graph.edges() }
    }

    pub fn to_graph(&self) -> Result<Graph, ComplexError> {
        Graph::from_edges(self.n, self.edges.iter().copied())
    }
}

/// Product-point coordinates: angles are accepted for products of unit
/// circles, full coordinate vectors everywhere.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PointData {
    Angles(Vec<f64>),
    Vectors(Vec<Vec<f64>>),
}

impl PointData {
    /// Interprets the data on the given sphere.  Vectors are accepted when
    /// within `1e-6` of unit length and renormalized to machine precision.
    pub fn to_product_point(&self, sphere: Sphere) -> Result<ProductPoint, GeometryError> {
        match self {
            PointData::Angles(angles) => {
                if sphere != Sphere::circle() {
                    return Err(GeometryError::DimensionMismatch {
                        expected: sphere.ambient_dim(),
                        got: 1,
                    });
                }
                Ok(ProductPoint::from_angles(angles))
            }
            PointData::Vectors(vectors) => {
                let points = vectors
                    .iter()
                    .map(|v| {
                        let norm: f64 = v.iter().map(|c| c * c).sum::<f64>().sqrt();
                        if (norm - 1.0).abs() > 1e-6 {
                            return Err(GeometryError::NotOnSphere { norm });
                        }
                        SpherePoint::from_unnormalized(sphere, v.clone())
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                ProductPoint::new(points).map_err(|_| GeometryError::SphereMismatch)
            }
        }
    }
}

/// On-disk form of a planning problem.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PlanInputFile {
    pub complex: ComplexFile,
    pub x: PointData,
    pub y: PointData,
    /// Optional parity/size override; defaults to odd circles.
    #[serde(default)]
    pub parity: Option<Parity>,
    #[serde(default)]
    pub k: Option<u32>,
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, IoError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| IoError::Read { path: path.display().to_string(), source })?;
    serde_json::from_str(&text)
        .map_err(|source| IoError::Parse { path: path.display().to_string(), source })
}

pub fn read_complex(path: &Path) -> Result<SimplicialComplex, IoError> {
    let file: ComplexFile = read_json(path)?;
    file.to_complex().map_err(|source| IoError::Complex {
        path: path.display().to_string(),
        context: "facets".into(),
        source,
    })
}

pub fn read_graph(path: &Path) -> Result<Graph, IoError> {
    let file: GraphFile = read_json(path)?;
    file.to_graph().map_err(|source| IoError::Complex {
        path: path.display().to_string(),
        context: "edges".into(),
        source,
    })
}

pub fn read_plan_input(path: &Path) -> Result<PlanInputFile, IoError> {
    read_json(path)
}

pub fn write_complex(path: &Path, complex: &SimplicialComplex) -> Result<(), IoError> {
    let file = ComplexFile::from_complex(complex);
    let text = serde_json::to_string_pretty(&file).expect("complex files serialize");
    std::fs::write(path, text)
        .map_err(|source| IoError::Read { path: path.display().to_string(), source })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_file_round_trip() {
        let complex = SimplicialComplex::from_facets(
            3,
            [VertexSet::of(&[1, 2]), VertexSet::of(&[3])],
        )
        .unwrap();
        let file = ComplexFile::from_complex(&complex);
        assert_eq!(file.facets, vec![vec![1, 2], vec![3]]);
        assert_eq!(file.to_complex().unwrap(), complex);
    }

    #[test]
    fn complex_file_rejects_bad_indices() {
        let file = ComplexFile { n: 2, facets: vec![vec![1, 3]] };
        assert!(file.to_complex().is_err());
    }

    #[test]
    fn parse_plan_input_with_angles() {
        let text = r#"{
            "complex": {"n": 2, "facets": [[1],[2]]},
            "x": [1.5707963267948966, 0.0],
            "y": [0.0, 1.5707963267948966]
        }"#;
        let input: PlanInputFile = serde_json::from_str(text).unwrap();
        let x = input.x.to_product_point(Sphere::circle()).unwrap();
        assert_eq!(x.n(), 2);
        assert!((x.coordinate(1).angle().unwrap() - 1.5707963267948966).abs() < 1e-15);
    }

    #[test]
    fn parse_plan_input_with_vectors() {
        let text = r#"{
            "complex": {"n": 1, "facets": [[1]]},
            "x": [[0.0, 1.0, 0.0]],
            "y": [[1.0, 0.0, 0.0]],
            "parity": "even"
        }"#;
        let input: PlanInputFile = serde_json::from_str(text).unwrap();
        assert_eq!(input.parity, Some(Parity::Even));
        let x = input.x.to_product_point(Sphere::even(1)).unwrap();
        assert_eq!(x.coordinate(1).coords(), &[0.0, 1.0, 0.0]);
        // angles are rejected off the circle
        assert!(PointData::Angles(vec![0.0]).to_product_point(Sphere::even(1)).is_err());
    }

    #[test]
    fn vectors_must_be_near_unit() {
        let data = PointData::Vectors(vec![vec![0.5, 0.5]]);
        assert!(data.to_product_point(Sphere::circle()).is_err());
    }
}
