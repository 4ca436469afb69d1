//! JSON and CSV renderings of the library's values, matching the documented
//! wire formats:
//!
//! * diagram: `{"k":2,"blocks":[[1,-2],[2,-1]]}`
//! * polynomial: `{"poly":[[exp,coeff],...]}` with descending exponents
//! * algebra element: `{"k":..,"family":..,"terms":[[diagram,poly],...]}`
//! * representing matrix: sparse row-major `{"basis":{..},"rows":[..]}`
//! * check report: `{"check":..,"family":..,"k":..,"params":..,"status":..,
//!   "witness":..,"ms":..}`

use serde_json::{json, Value};

use crate::algebra::Element;
use crate::diagram::Diagram;
use crate::model::{RepMatrix, SymmetricBasis};
use crate::poly::IntPoly;
use crate::symgroup::InvolutionDecomposition;
use crate::verify::{CheckReport, Status};

pub fn diagram_json(d: &Diagram) -> Value {
    json!({ "k": d.k(), "blocks": d.signed_blocks() })
}

pub fn poly_json(p: &IntPoly) -> Value {
    let pairs: Vec<Value> =
        p.terms_desc().map(|(e, c)| json!([e, c.to_string()])).collect();
    json!({ "poly": pairs })
}

pub fn element_json(e: &Element) -> Value {
    let terms: Vec<Value> =
        e.terms().map(|(d, c)| json!([d.to_string(), c.to_string()])).collect();
    json!({
        "k": e.k(),
        "family": e.family().name(),
        "terms": terms,
    })
}

pub fn basis_json(b: &SymmetricBasis) -> Value {
    json!({
        "family": b.family.name(),
        "k": b.k,
        "rank": b.rank,
        "fixed": b.fixed,
        "diagrams": b.diagrams().iter().map(|d| d.to_string()).collect::<Vec<_>>(),
    })
}

pub fn rep_matrix_json(basis: &SymmetricBasis, m: &RepMatrix) -> Value {
    // sparse row-major: one [column, poly] list per row
    let mut rows: Vec<Vec<Value>> = vec![Vec::new(); m.dim];
    for (col, entry) in m.cols.iter().enumerate() {
        if let Some((row, c)) = entry {
            rows[*row].push(json!([col, c.to_string()]));
        }
    }
    json!({ "basis": basis_json(basis), "rows": rows })
}

/// Dense CSV for small matrices: one row per line, entries as polynomials.
pub fn rep_matrix_csv(m: &RepMatrix) -> String {
    let mut out = String::new();
    for row in m.dense() {
        let line: Vec<String> = row.iter().map(|p| p.to_string()).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

pub fn report_json(r: &CheckReport) -> Value {
    json!({
        "check": r.check,
        "family": r.family.map(|f| f.name()),
        "k": r.k,
        "params": r.params,
        "status": if r.status == Status::Pass { "pass" } else { "fail" },
        "witness": r.witness,
        "ms": r.ms,
    })
}

pub fn decomposition_json(dec: &InvolutionDecomposition) -> Value {
    let rows: Vec<Value> = dec
        .partitions
        .iter()
        .enumerate()
        .map(|(li, lambda)| {
            json!({
                "partition": lambda,
                "multiplicities": dec.multiplicity[li],
            })
        })
        .collect();
    json!({ "k": dec.k, "fixed_counts": dec.fixed_counts, "rows": rows })
}

/// CSV with one row per partition and one column per fixed-point count.
pub fn decomposition_csv(dec: &InvolutionDecomposition) -> String {
    let mut out = String::from("partition");
    for f in &dec.fixed_counts {
        out.push_str(&format!(",f={f}"));
    }
    out.push('\n');
    for (li, lambda) in dec.partitions.iter().enumerate() {
        let name: Vec<String> = lambda.iter().map(|p| p.to_string()).collect();
        out.push_str(&format!("\"{}\"", name.join("+")));
        for mult in &dec.multiplicity[li] {
            out.push_str(&format!(",{mult}"));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Family;

    #[test]
    fn documented_shapes() {
        let swap = Diagram::from_signed_blocks(2, &[vec![1, -2], vec![2, -1]]).unwrap();
        assert_eq!(
            diagram_json(&swap).to_string(),
            r#"{"blocks":[[1,-2],[2,-1]],"k":2}"#
        );
        let p = &(&IntPoly::x() * &IntPoly::x()) + &IntPoly::constant(-3);
        assert_eq!(poly_json(&p).to_string(), r#"{"poly":[[2,"1"],[0,"-3"]]}"#);
        let e = Element::from_diagram(Family::Partition, swap).unwrap();
        let v = element_json(&e);
        assert_eq!(v["family"], "partition");
        assert_eq!(v["terms"][0][0], "1 -2 | 2 -1");
    }

    #[test]
    fn matrix_exports() {
        let basis = SymmetricBasis::new(Family::TemperleyLieb, 2, 0, 0);
        let cup = Diagram::from_signed_blocks(2, &[vec![1, 2], vec![-1, -2]]).unwrap();
        let m = crate::model::representation_matrix(&basis, &cup).unwrap();
        assert_eq!(rep_matrix_csv(&m), "x\n");
        let v = rep_matrix_json(&basis, &m);
        assert_eq!(v["rows"][0][0][1], "x");
    }

    #[test]
    fn decomposition_exports() {
        let dec = crate::symgroup::involution_decomposition(3).unwrap();
        let csv = decomposition_csv(&dec);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("partition,f=1,f=3"));
        assert_eq!(lines.next(), Some("\"1+1+1\",0,1"));
        let v = decomposition_json(&dec);
        assert_eq!(v["k"], 3);
        assert_eq!(v["rows"][0]["multiplicities"][1], 1);
    }
}
