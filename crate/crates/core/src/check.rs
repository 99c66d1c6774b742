use serde::{Deserialize, Serialize};

/// One verified relation: the largest residual seen over `cases` instances.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Relation {
    pub id: String,
    pub statement: String,
    pub residual: f64,
    pub cases: usize,
}

impl Relation {
    pub fn new(id: impl Into<String>, statement: impl Into<String>, residual: f64, cases: usize) -> Self {
        Self {
            id: id.into(),
            statement: statement.into(),
            residual,
            cases,
        }
    }

    pub fn holds_within(&self, tol: f64) -> bool {
        self.residual <= tol
    }
}

/// Largest residual across a set of relations.
pub fn worst(relations: &[Relation]) -> f64 {
    crate::numerics::max_residual(relations.iter().map(|r| r.residual))
}
