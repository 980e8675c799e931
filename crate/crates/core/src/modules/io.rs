//! JSON module files: the algebra's presentation text, the dimension
//! vector, one row-major matrix per arrow, and optional degree labels.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};
use crate::quiver::{parse_quiver_spec, Algebra, AlgebraPresentation};

use super::{GradedRepresentation, Representation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleFile {
    /// Presentation of the algebra the module lives over, in spec format.
    pub algebra: String,
    pub dims: Vec<usize>,
    /// Arrow label to matrix rows; entries are field elements as strings.
    pub maps: BTreeMap<String, Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<Vec<i64>>>,
}

impl ModuleFile {
    pub fn from_module<F: Field>(m: &Representation<F>) -> Self {
        let alg = m.algebra();
        let f = m.field();
        let maps = alg
            .quiver()
            .arrows
            .iter()
            .zip(m.maps())
            .map(|(a, mat)| {
                let rows = mat.to_rows().iter().map(|r| r.iter().map(|x| f.format(x)).collect()).collect();
                (a.label.clone(), rows)
            })
            .collect();
        ModuleFile { algebra: alg.presentation().to_spec_text(), dims: m.dims().to_vec(), maps, degrees: None }
    }

    pub fn from_graded<F: Field>(m: &GradedRepresentation<F>) -> Self {
        ModuleFile { degrees: Some(m.degrees().to_vec()), ..Self::from_module(m.module()) }
    }

    pub fn presentation(&self) -> Result<AlgebraPresentation> {
        parse_quiver_spec(&self.algebra)
    }

    /// Read the module over `alg`, which must have the same quiver as the
    /// embedded presentation. Relations are checked.
    pub fn to_module<F: Field>(&self, alg: &Algebra<F>) -> Result<Representation<F>> {
        let q = alg.quiver();
        let f = alg.field();
        if self.dims.len() != q.num_vertices() {
            return Err(Error::Dimension(format!("{} dimensions for {} vertices", self.dims.len(), q.num_vertices())));
        }
        if let Some(extra) = self.maps.keys().find(|l| q.arrow_index(l).is_none()) {
            return Err(Error::Dimension(format!("no arrow labelled {extra}")));
        }
        let mut maps = Vec::with_capacity(q.num_arrows());
        for a in &q.arrows {
            let (rows, cols) = (self.dims[a.target], self.dims[a.source]);
            let Some(given) = self.maps.get(&a.label) else {
                if rows * cols == 0 {
                    maps.push(Matrix::zeros(f, rows, cols));
                    continue;
                }
                return Err(Error::Dimension(format!("missing matrix for arrow {}", a.label)));
            };
            if given.len() != rows || given.iter().any(|r| r.len() != cols) {
                return Err(Error::Dimension(format!("arrow {} needs a {rows}x{cols} matrix", a.label)));
            }
            let mut data = Vec::with_capacity(rows * cols);
            for s in given.iter().flatten() {
                data.push(f.parse(s).ok_or_else(|| Error::Serde(format!("bad field element {s:?}")))?);
            }
            maps.push(Matrix::new(f.clone(), rows, cols, data));
        }
        Representation::new_checked(alg.clone(), self.dims.clone(), maps)
    }

    pub fn to_graded<F: Field>(&self, alg: &Algebra<F>) -> Result<GradedRepresentation<F>> {
        let degrees = self.degrees.clone().ok_or_else(|| Error::Serde("module file has no degrees".into()))?;
        GradedRepresentation::from_unsorted(self.to_module(alg)?, degrees)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("module files always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Serde(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{FieldSpec, PrimeField};
    use crate::modules::{graded_projective_sum, simple};
    use crate::quiver::{build_lambda_k, linear_quiver, BoundQuiverAlgebra};

    #[test]
    fn round_trip() {
        let p = build_lambda_k(&linear_quiver(FieldSpec::default(), 2), 2).unwrap();
        let a = BoundQuiverAlgebra::build(&PrimeField::new(101), &p).unwrap();
        let m = crate::modules::projective_sum(&a, &[0]);
        let file = ModuleFile::from_json(&ModuleFile::from_module(&m).to_json()).unwrap();
        let b = BoundQuiverAlgebra::build(&PrimeField::new(101), &file.presentation().unwrap()).unwrap();
        let back = file.to_module(&b).unwrap();
        assert_eq!(back.dims(), m.dims());
        assert_eq!(back.maps(), m.maps());
        assert!(ModuleFile::from_module(&simple(&a, 0)).to_module(&a).is_ok());

        let g = graded_projective_sum(&a, &[1], &[2]);
        let gf = ModuleFile::from_graded(&g);
        assert_eq!(gf.to_graded(&a).unwrap().degrees(), g.degrees());
    }

    #[test]
    fn rejects_relation_violations() {
        let p = build_lambda_k(&linear_quiver(FieldSpec::default(), 2), 2).unwrap();
        let a = BoundQuiverAlgebra::build(&PrimeField::new(101), &p).unwrap();
        let mut file = ModuleFile::from_module(&simple(&a, 0));
        file.dims = vec![1, 0];
        let x = a.quiver().arrows.iter().find(|ar| ar.source == 0 && ar.target == 0).unwrap().label.clone();
        file.maps.insert(x, vec![vec!["1".into()]]);
        assert!(file.to_module(&a).is_err());
    }
}
