//! JSON and CSV renderings of generator matrices and structure constants.
//!
//! Exact values are written as strings such as `"-1/6√6"` so nothing is lost
//! crossing the process boundary; float values are plain JSON numbers.

use serde::Serialize;
use serde_json::{json, Value};
use su3st::numerics::{Backend, Complex64, ExactScalar, Matrix, Scalar};
use su3st::su3::{StructureConstants, Tensor3};

/// Scalar types that can be written out.
pub trait Render: Scalar {
    fn json(&self) -> Value;
    fn csv(&self) -> (String, String);
    /// Real part only, for structure constants.
    fn json_real(&self) -> Value;
    fn csv_real(&self) -> String;
}

impl Render for ExactScalar {
    fn json(&self) -> Value {
        json!({ "re": self.re.to_string(), "im": self.im.to_string() })
    }

    fn csv(&self) -> (String, String) {
        (self.re.to_string(), self.im.to_string())
    }

    fn json_real(&self) -> Value {
        Value::String(self.re.to_string())
    }

    fn csv_real(&self) -> String {
        self.re.to_string()
    }
}

impl Render for Complex64 {
    fn json(&self) -> Value {
        json!({ "re": self.re, "im": self.im })
    }

    fn csv(&self) -> (String, String) {
        (format!("{:?}", self.re), format!("{:?}", self.im))
    }

    fn json_real(&self) -> Value {
        json!(self.re)
    }

    fn csv_real(&self) -> String {
        format!("{:?}", self.re)
    }
}

#[derive(Serialize)]
struct MatrixDoc {
    name: String,
    index: usize,
    rows: usize,
    cols: usize,
    /// Row-major; `entries[r][c]` is the entry at 1-based (r+1, c+1).
    entries: Vec<Vec<Value>>,
}

/// A named list of matrices from one rep.
pub struct GenDump<'a, S> {
    pub rep: &'a str,
    pub which: &'a str,
    pub branch: Option<&'a str>,
    pub matrices: Vec<(String, Matrix<S>)>,
}

impl<S: Render> GenDump<'_, S> {
    pub fn to_json(&self) -> Value {
        let mats: Vec<MatrixDoc> = self
            .matrices
            .iter()
            .enumerate()
            .map(|(i, (name, m))| MatrixDoc {
                name: name.clone(),
                index: i + 1,
                rows: m.rows(),
                cols: m.cols(),
                entries: (0..m.rows())
                    .map(|r| (0..m.cols()).map(|c| m.get(r, c).json()).collect())
                    .collect(),
            })
            .collect();
        json!({
            "rep": self.rep,
            "which": self.which,
            "branch": self.branch,
            "backend": backend_name(S::BACKEND),
            "indexing": "1-based; entries are row-major",
            "matrices": mats,
        })
    }

    /// One line per entry: rep,name,row,col,re,im.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("rep,name,row,col,re,im\n");
        for (name, m) in &self.matrices {
            for r in 0..m.rows() {
                for c in 0..m.cols() {
                    let (re, im) = m.get(r, c).csv();
                    out.push_str(&format!("{},{name},{},{},{re},{im}\n", self.rep, r + 1, c + 1));
                }
            }
        }
        out
    }
}

fn backend_name(b: Backend) -> String {
    b.to_string()
}

/// Nonzero entries in canonical order: i<j<k for f, i≤j≤k for d.
pub fn canonical_entries<S: Scalar>(t: &Tensor3<S>, strict: bool) -> Vec<(usize, usize, usize, S)> {
    t.nonzero_entries(|i, j, k| if strict { i < j && j < k } else { i <= j && j <= k })
}

pub fn structure_json<S: Render>(sc: &StructureConstants<S>) -> Value {
    let rec = |(i, j, k, v): (usize, usize, usize, S)| json!({ "i": i, "j": j, "k": k, "value": v.json_real() });
    json!({
        "backend": backend_name(S::BACKEND),
        "f": canonical_entries(&sc.f, true).into_iter().map(rec).collect::<Vec<_>>(),
        "d": canonical_entries(&sc.d, false).into_iter().map(rec).collect::<Vec<_>>(),
    })
}

pub fn structure_csv<S: Render>(sc: &StructureConstants<S>) -> String {
    let mut out = String::from("tensor,i,j,k,value\n");
    for (name, strict, t) in [("f", true, &sc.f), ("d", false, &sc.d)] {
        for (i, j, k, v) in canonical_entries(t, strict) {
            out.push_str(&format!("{name},{i},{j},{k},{}\n", v.csv_real()));
        }
    }
    out
}
