//! JSON interchange files.
//!
//! All indices are 1-based. Values are rational literals `"p"` or `"p/q"`;
//! plain JSON integers are accepted on input, output always uses strings.
//! Omitted entries are zero, duplicate keys and unknown fields are rejected.
//!
//! - algebra: `{"name"?, "dim", "mul": [[i, j, k, q], ...]}` with `c_ij^k = q`
//! - bimodule: `{"vdim", "l": [[i, a, b, q], ...], "r": [...]}`; the action of
//!   `e_i` sends `v_a` to `Σ_b q v_b`
//! - bialgebra: `{"name"?, "dim", "mul", "comul": [[k, i, j, q], ...]}` with
//!   `α(e_k) += q e_i⊗e_j`, i.e. `f_ij^k = q`
//! - matched pair: `{"a": algebra, "b": algebra, "la", "ra", "lb", "rb"}`;
//!   `la`/`ra` records act by `e_i ∈ A` on `B`, `lb`/`rb` by `B` on `A`, in the
//!   bimodule record format

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::algebra::Algebra;
use crate::bialgebra::Bialgebra;
use crate::linalg::Matrix;
use crate::matched::CsMatchedPair;
use crate::scalar::Scalar;
use crate::tensor::Tensor3;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{field} record {record}: index {index} out of range 1..={bound}")]
    Index { field: &'static str, record: usize, index: usize, bound: usize },
    #[error("{field} record {record}: duplicate key {key:?}")]
    Duplicate { field: &'static str, record: usize, key: [usize; 3] },
}

/// A rational literal in a file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Literal(pub Scalar);

impl Serialize for Literal {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for Literal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl de::Visitor<'_> for V {
            type Value = Literal;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a rational literal \"p\" or \"p/q\", or an integer")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<Literal, E> {
                Scalar::from_str(v).map(Literal).map_err(E::custom)
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Literal, E> {
                Ok(Literal(Scalar::from_int(v)))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Literal, E> {
                i64::try_from(v).map(|v| Literal(Scalar::from_int(v))).map_err(|_| E::custom("integer too large"))
            }
        }
        d.deserialize_any(V)
    }
}

pub type Record = (usize, usize, usize, Literal);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub dim: usize,
    pub mul: Vec<Record>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BimoduleFile {
    pub vdim: usize,
    pub l: Vec<Record>,
    pub r: Vec<Record>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BialgebraFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub dim: usize,
    pub mul: Vec<Record>,
    pub comul: Vec<Record>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairFile {
    pub a: AlgebraFile,
    pub b: AlgebraFile,
    pub la: Vec<Record>,
    pub ra: Vec<Record>,
    pub lb: Vec<Record>,
    pub rb: Vec<Record>,
}

/// Validates ranges and duplicates; returns 0-based `(key, value)` pairs.
fn checked(field: &'static str, records: &[Record], bounds: [usize; 3]) -> Result<Vec<([usize; 3], Scalar)>, FormatError> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(records.len());
    for (n, (a, b, c, q)) in records.iter().enumerate() {
        let key = [*a, *b, *c];
        for (index, bound) in key.into_iter().zip(bounds) {
            if index == 0 || index > bound {
                return Err(FormatError::Index { field, record: n + 1, index, bound });
            }
        }
        if !seen.insert(key) {
            return Err(FormatError::Duplicate { field, record: n + 1, key });
        }
        out.push(([a - 1, b - 1, c - 1], q.0.clone()));
    }
    Ok(out)
}

fn tensor_records(t: &Tensor3) -> Vec<Record> {
    t.iter().map(|([i, j, k], v)| (i + 1, j + 1, k + 1, Literal(v.clone()))).collect()
}

fn read_tensor(field: &'static str, n: usize, records: &[Record]) -> Result<Tensor3, FormatError> {
    let mut t = Tensor3::cube(n);
    for ([i, j, k], v) in checked(field, records, [n; 3])? {
        t.set(i, j, k, v).expect("checked");
    }
    Ok(t)
}

/// Action records `[i, a, b, q]` meaning `M_i[b][a] = q`.
fn action_records(ops: &[Matrix]) -> Vec<Record> {
    let mut out = Vec::new();
    for (i, m) in ops.iter().enumerate() {
        for a in 0..m.cols() {
            for b in 0..m.rows() {
                let v = m.get(b, a);
                if !v.is_zero() {
                    out.push((i + 1, a + 1, b + 1, Literal(v.clone())));
                }
            }
        }
    }
    out
}

fn read_actions(field: &'static str, count: usize, side: usize, records: &[Record]) -> Result<Vec<Matrix>, FormatError> {
    let mut ops = vec![Matrix::zeros(side, side); count];
    for ([i, a, b], v) in checked(field, records, [count, side, side])? {
        ops[i].set(b, a, v);
    }
    Ok(ops)
}

impl AlgebraFile {
    pub fn from_algebra(a: &Algebra) -> Self {
        AlgebraFile { name: a.name().map(str::to_owned), dim: a.dim(), mul: tensor_records(a.structure()) }
    }

    pub fn to_algebra(&self) -> Result<Algebra, FormatError> {
        let a = Algebra::new(read_tensor("mul", self.dim, &self.mul)?).expect("cubic");
        Ok(match &self.name {
            Some(n) => a.with_name(n.clone()),
            None => a,
        })
    }
}

impl BimoduleFile {
    pub fn from_actions(vdim: usize, l: &[Matrix], r: &[Matrix]) -> Self {
        BimoduleFile { vdim, l: action_records(l), r: action_records(r) }
    }

    /// Left and right action matrices for a base algebra of dimension `base_dim`.
    pub fn to_actions(&self, base_dim: usize) -> Result<(Vec<Matrix>, Vec<Matrix>), FormatError> {
        Ok((read_actions("l", base_dim, self.vdim, &self.l)?, read_actions("r", base_dim, self.vdim, &self.r)?))
    }
}

impl BialgebraFile {
    pub fn from_bialgebra(bg: &Bialgebra) -> Self {
        let mut comul: Vec<Record> = bg.dual_product().iter().map(|([i, j, k], v)| (k + 1, i + 1, j + 1, Literal(v.clone()))).collect();
        comul.sort_by_key(|r| (r.0, r.1, r.2));
        BialgebraFile { name: bg.name().map(str::to_owned), dim: bg.dim(), mul: tensor_records(bg.product()), comul }
    }

    pub fn to_bialgebra(&self) -> Result<Bialgebra, FormatError> {
        let c = read_tensor("mul", self.dim, &self.mul)?;
        let mut f = Tensor3::cube(self.dim);
        for ([k, i, j], v) in checked("comul", &self.comul, [self.dim; 3])? {
            f.set(i, j, k, v).expect("checked");
        }
        let bg = Bialgebra::new(c, f).expect("same dims");
        Ok(match &self.name {
            Some(n) => bg.with_name(n.clone()),
            None => bg,
        })
    }
}

impl PairFile {
    pub fn from_pair(p: &CsMatchedPair) -> Self {
        PairFile {
            a: AlgebraFile::from_algebra(&p.a),
            b: AlgebraFile::from_algebra(&p.b),
            la: action_records(&p.la),
            ra: action_records(&p.ra),
            lb: action_records(&p.lb),
            rb: action_records(&p.rb),
        }
    }

    pub fn to_pair(&self) -> Result<CsMatchedPair, FormatError> {
        let (a, b) = (self.a.to_algebra()?, self.b.to_algebra()?);
        let (n, m) = (a.dim(), b.dim());
        Ok(CsMatchedPair {
            la: read_actions("la", n, m, &self.la)?,
            ra: read_actions("ra", n, m, &self.ra)?,
            lb: read_actions("lb", m, n, &self.lb)?,
            rb: read_actions("rb", m, n, &self.rb)?,
            a,
            b,
        })
    }
}

/// Indented JSON with a trailing newline. Arrays holding only scalars stay on
/// one line, so each record reads as `[i, j, k, "q"]`. Deterministic.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("serializable");
    let mut s = String::new();
    write_value(&mut s, &v, 0);
    s.push('\n');
    s
}

fn write_value(out: &mut String, v: &serde_json::Value, depth: usize) {
    use serde_json::Value;
    let pad = |out: &mut String, d: usize| out.push_str(&"  ".repeat(d));
    match v {
        Value::Array(xs) if xs.is_empty() => out.push_str("[]"),
        Value::Array(xs) if xs.iter().all(|x| !x.is_array() && !x.is_object()) => {
            let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
            out.push_str(&format!("[{}]", parts.join(", ")));
        }
        Value::Array(xs) => {
            out.push_str("[\n");
            for (n, x) in xs.iter().enumerate() {
                pad(out, depth + 1);
                write_value(out, x, depth + 1);
                out.push_str(if n + 1 < xs.len() { ",\n" } else { "\n" });
            }
            pad(out, depth);
            out.push(']');
        }
        Value::Object(m) if m.is_empty() => out.push_str("{}"),
        Value::Object(m) => {
            out.push_str("{\n");
            for (n, (k, x)) in m.iter().enumerate() {
                pad(out, depth + 1);
                out.push_str(&format!("{}: ", Value::String(k.clone())));
                write_value(out, x, depth + 1);
                out.push_str(if n + 1 < m.len() { ",\n" } else { "\n" });
            }
            pad(out, depth);
            out.push('}');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}

pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, FormatError> {
    Ok(serde_json::from_str(text)?)
}

pub fn parse_algebra(text: &str) -> Result<Algebra, FormatError> {
    from_json::<AlgebraFile>(text)?.to_algebra()
}

pub fn parse_bialgebra(text: &str) -> Result<Bialgebra, FormatError> {
    from_json::<BialgebraFile>(text)?.to_bialgebra()
}

pub fn parse_pair(text: &str) -> Result<CsMatchedPair, FormatError> {
    from_json::<PairFile>(text)?.to_pair()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fixtures::*;
    use crate::algebra::{left_ops, right_ops};
    use crate::algebra::tests::arb_algebra;
    use crate::bialgebra::fixtures::verified;
    use proptest::prelude::*;

    #[test]
    fn parses_literals_and_integers() {
        let a = parse_algebra(r#"{"dim": 2, "mul": [[1, 1, 2, "1"], [2, 1, 1, 1], [2, 2, 2, "-3/6"]]}"#).unwrap();
        assert_eq!(a, Algebra::new({
            let mut t = Tensor3::from_entries(2, &[(0, 0, 1, 1), (1, 0, 0, 1)]);
            t.set(1, 1, 1, Scalar::ratio(-1, 2)).unwrap();
            t
        }).unwrap());
        let text = to_json(&AlgebraFile::from_algebra(&a));
        assert!(text.contains(r#""-1/2""#));
    }

    #[test]
    fn rejects_bad_input() {
        let bad = [
            r#"{"dim": 2, "mul": [[1, 1, 5, "1"]]}"#,
            r#"{"dim": 2, "mul": [[0, 1, 1, "1"]]}"#,
            r#"{"dim": 2, "mul": [[1, 1, 1, "1"], [1, 1, 1, "2"]]}"#,
            r#"{"dim": 2, "mul": [[1, 1, 1, "1/0"]]}"#,
            r#"{"dim": 2, "mul": [[1, 1, 1, "0.5"]]}"#,
            r#"{"dim": 2, "mul": [], "extra": 1}"#,
            r#"{"dim": 2, "mul": [[1, 1, 1]]}"#,
            r#"{"dim": 2 "mul": []}"#,
        ];
        for text in bad {
            assert!(parse_algebra(text).is_err(), "{text}");
        }
        match parse_algebra(bad[0]) {
            Err(FormatError::Index { record: 1, index: 5, bound: 2, .. }) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn records_print_on_one_line() {
        let text = to_json(&AlgebraFile::from_algebra(&field().with_name("field")));
        assert_eq!(text, "{\n  \"name\": \"field\",\n  \"dim\": 1,\n  \"mul\": [\n    [1, 1, 1, \"1\"]\n  ]\n}\n");
        let empty = to_json(&AlgebraFile::from_algebra(&Algebra::zero(2)));
        assert!(empty.contains("\"mul\": []"));
    }

    #[test]
    fn bimodule_orientation() {
        // e_1 sends v_1 to 2 v_2
        let f: BimoduleFile = from_json(r#"{"vdim": 2, "l": [[1, 1, 2, "2"]], "r": []}"#).unwrap();
        let (l, r) = f.to_actions(1).unwrap();
        assert_eq!(l[0], Matrix::from_int_rows(&[&[0, 0], &[2, 0]]));
        assert!(r[0].is_zero());
        assert!(f.to_actions(0).is_err());
        let a = upper_triangular();
        let file = BimoduleFile::from_actions(3, &left_ops(&a), &right_ops(&a));
        assert_eq!(file.to_actions(3).unwrap(), (left_ops(&a), right_ops(&a)));
    }

    #[test]
    fn comultiplication_orientation() {
        let f: BialgebraFile = from_json(r#"{"dim": 2, "mul": [], "comul": [[2, 1, 1, "1"]]}"#).unwrap();
        let bg = f.to_bialgebra().unwrap();
        assert_eq!(bg.dual_product().get(0, 0, 1), &Scalar::one());
        assert_eq!(BialgebraFile::from_bialgebra(&bg), f);
    }

    #[test]
    fn round_trips() {
        let bg = verified().with_name("verified");
        let file = BialgebraFile::from_bialgebra(&bg);
        let back: BialgebraFile = from_json(&to_json(&file)).unwrap();
        assert_eq!(back, file);
        assert_eq!(back.to_bialgebra().unwrap(), bg);

        let p = crate::bialgebra::standard_cs_matched_pair(&bg).unwrap();
        let file = PairFile::from_pair(&p);
        let back: PairFile = from_json(&to_json(&file)).unwrap();
        assert_eq!(back, file);
        assert_eq!(back.to_pair().unwrap(), p);

        let a = field().with_name("field");
        assert_eq!(parse_algebra(&to_json(&AlgebraFile::from_algebra(&a))).unwrap().name(), Some("field"));
    }

    proptest! {
        #[test]
        fn algebra_files_round_trip(a in arb_algebra(3, -3, 3)) {
            let file = AlgebraFile::from_algebra(&a);
            let text = to_json(&file);
            let back: AlgebraFile = from_json(&text).unwrap();
            prop_assert_eq!(&back, &file);
            prop_assert_eq!(back.to_algebra().unwrap(), a);
            prop_assert_eq!(to_json(&back), text);
        }
    }
}
