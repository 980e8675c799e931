//! Degree data of positively graded algebras.

use serde::{Deserialize, Serialize};

use crate::linalg::{Field, Matrix};

use super::algebra::BoundQuiverAlgebra;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GorensteinParameter {
    /// The right socle lies in this single degree.
    Degree(i64),
    /// The socle meets several degrees.
    Mixed(Vec<i64>),
}

/// Dimension of the right socle `{x : x·J = 0}` in each degree.
pub fn socle_degrees<F: Field>(a: &BoundQuiverAlgebra<F>) -> Vec<(i64, usize)> {
    let mut degrees: Vec<i64> = a.basis().iter().map(|b| b.degree).collect();
    degrees.sort_unstable();
    degrees.dedup();
    let f = a.field();
    let mut out = Vec::new();
    for d in degrees {
        let cols: Vec<usize> = (0..a.dim()).filter(|&b| a.basis()[b].degree == d).collect();
        // Right multiplication by every arrow, stacked.
        let rows = a.dim() * a.num_arrows();
        let mut m = Matrix::zeros(f, rows, cols.len());
        for (j, &b) in cols.iter().enumerate() {
            for arr in 0..a.num_arrows() {
                for (i, c) in a.right_arrow(b, arr) {
                    m.set(arr * a.dim() + i, j, c.clone());
                }
            }
        }
        let nullity = cols.len() - m.rank();
        if nullity > 0 {
            out.push((d, nullity));
        }
    }
    out
}

pub fn gorenstein_parameter<F: Field>(a: &BoundQuiverAlgebra<F>) -> GorensteinParameter {
    let degs: Vec<i64> = socle_degrees(a).into_iter().map(|(d, _)| d).collect();
    match degs.as_slice() {
        [d] => GorensteinParameter::Degree(*d),
        _ => GorensteinParameter::Mixed(degs),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{FieldSpec, PrimeField};
    use crate::quiver::constructions::{build_lambda_k, linear_quiver, truncated_polynomial};

    #[test]
    fn parameters() {
        let f = PrimeField::new(101);
        let ka2 = linear_quiver(FieldSpec::default(), 2);
        let l3 = BoundQuiverAlgebra::build(&f, &build_lambda_k(&ka2, 3).unwrap()).unwrap();
        assert_eq!(gorenstein_parameter(&l3), GorensteinParameter::Degree(2));
        let l1 = BoundQuiverAlgebra::build(&f, &ka2).unwrap();
        assert_eq!(gorenstein_parameter(&l1), GorensteinParameter::Degree(0));
        let r5 = BoundQuiverAlgebra::build(&f, &truncated_polynomial(FieldSpec::default(), 5)).unwrap();
        assert_eq!(gorenstein_parameter(&r5), GorensteinParameter::Degree(4));
    }
}
