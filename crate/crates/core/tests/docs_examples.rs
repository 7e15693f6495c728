use zpoly::klz::{kl_polynomial, KlMethod};
use zpoly::matroid::{enumerate_flats, MatroidSpec};
use zpoly::IntPolynomial;

#[test]
fn every_documented_matroid_parses() {
    let text =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/matroid-json.md")).unwrap();
    let blocks: Vec<&str> = text
        .split("```json")
        .skip(1)
        .map(|b| b.split("```").next().unwrap().trim())
        .collect();
    assert_eq!(blocks.len(), 5);
    let polys: Vec<IntPolynomial> = blocks
        .iter()
        .map(|b| {
            let spec = MatroidSpec::from_json(b).unwrap_or_else(|e| panic!("{b}: {e}"));
            kl_polynomial(&enumerate_flats(&spec).unwrap(), KlMethod::Defining)
        })
        .collect();
    // U(1,3), K4, then three rank-2 matroids
    assert_eq!(polys[0], IntPolynomial::from_i64s(&[1, 2]));
    assert_eq!(polys[1], IntPolynomial::from_i64s(&[1, 1]));
    assert!(polys[2..].iter().all(|p| *p == IntPolynomial::one()));
}
