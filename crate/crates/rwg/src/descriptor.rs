//! JSON descriptors of involution data.
//!
//! Vogan node labels are 1-based, as on a Dynkin diagram; root coordinates
//! are in the simple-root basis.

use std::sync::Arc;

use rwg_core::involution::from_vogan;
use rwg_core::{CartanType, InvolutionDatum, LatticeMode, RootSystem, Series, VoganDiagram};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum DescriptorError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed descriptor: {0}")]
    Malformed(String),
    #[error("invalid type: {0}")]
    InvalidType(String),
    #[error("{0}")]
    Datum(#[from] rwg_core::InvolutionError),
}

impl DescriptorError {
    pub fn kind(&self) -> &'static str {
        match self {
            DescriptorError::Io { .. } => "Io",
            DescriptorError::Malformed(_) => "Malformed",
            DescriptorError::InvalidType(_) => "InvalidType",
            DescriptorError::Datum(e) => e.kind(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TypeSpec {
    pub series: String,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VoganSpec {
    pub involution: Vec<usize>,
    #[serde(default)]
    pub painted: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Seed {
    pub root: Vec<i64>,
    pub sign: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Descriptor {
    #[serde(rename = "type")]
    pub ctype: TypeSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vogan: Option<VoganSpec>,
    #[serde(default)]
    pub grading_seed: Vec<Seed>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lattice: Option<String>,
}

impl Descriptor {
    pub fn parse(text: &str) -> Result<Self, DescriptorError> {
        serde_json::from_str(text).map_err(|e| DescriptorError::Malformed(e.to_string()))
    }

    pub fn load(path: &str) -> Result<Self, DescriptorError> {
        let text = std::fs::read_to_string(path).map_err(|source| DescriptorError::Io { path: path.into(), source })?;
        Self::parse(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("descriptor serializes")
    }

    pub fn cartan_type(&self) -> Result<CartanType, DescriptorError> {
        let mut chars = self.ctype.series.chars();
        let series = match (chars.next(), chars.next()) {
            (Some(c), None) => Series::from_letter(c.to_ascii_uppercase()),
            _ => None,
        }
        .ok_or_else(|| DescriptorError::InvalidType(format!("unknown series {:?}", self.ctype.series)))?;
        CartanType::new(series, self.ctype.rank).map_err(|e| DescriptorError::InvalidType(e.to_string()))
    }

    pub fn lattice_mode(&self) -> Result<LatticeMode, DescriptorError> {
        match &self.lattice {
            None => Ok(LatticeMode::default()),
            Some(s) => s.parse().map_err(|_| DescriptorError::Malformed(format!("unknown lattice {s:?}"))),
        }
    }

    /// Builds the datum. Vogan grading seeds are derived from the diagram;
    /// explicit seeds are appended after them.
    pub fn to_datum(&self) -> Result<InvolutionDatum, DescriptorError> {
        let ctype = self.cartan_type()?;
        let rs = Arc::new(RootSystem::new(ctype));
        let l = ctype.rank;
        let mut datum = match (&self.theta, &self.vogan) {
            (Some(theta), None) => {
                if theta.len() != l || theta.iter().any(|r| r.len() != l) {
                    return Err(DescriptorError::Malformed(format!("theta must be {l}x{l}")));
                }
                InvolutionDatum::new(rs, theta.clone(), Vec::new())
            }
            (None, Some(v)) => {
                let to0 = |x: usize, what: &str| {
                    x.checked_sub(1)
                        .filter(|&y| y < l)
                        .ok_or_else(|| DescriptorError::Malformed(format!("{what} node {x} outside 1..={l}")))
                };
                let involution = v.involution.iter().map(|&x| to0(x, "involution")).collect::<Result<Vec<_>, _>>()?;
                let painted = v.painted.iter().map(|&x| to0(x, "painted")).collect::<Result<Vec<_>, _>>()?;
                from_vogan(&VoganDiagram::new(ctype, involution, painted), rs)?
            }
            _ => return Err(DescriptorError::Malformed("exactly one of theta and vogan is required".into())),
        };
        for s in &self.grading_seed {
            if s.root.len() != l {
                return Err(DescriptorError::Malformed(format!("seed root {:?} must have length {l}", s.root)));
            }
            datum.grading_seed.push((s.root.clone(), s.sign));
        }
        Ok(datum)
    }

    pub fn from_theta(ctype: CartanType, theta: Vec<Vec<i64>>, seeds: Vec<(Vec<i64>, i64)>) -> Self {
        Descriptor {
            ctype: type_spec(ctype),
            theta: Some(theta),
            vogan: None,
            grading_seed: seeds.into_iter().map(|(root, sign)| Seed { root, sign }).collect(),
            lattice: None,
        }
    }

    /// `involution` and `painted` are 1-based.
    pub fn from_vogan(ctype: CartanType, involution: Vec<usize>, painted: Vec<usize>) -> Self {
        Descriptor {
            ctype: type_spec(ctype),
            theta: None,
            vogan: Some(VoganSpec { involution, painted }),
            grading_seed: Vec::new(),
            lattice: None,
        }
    }
}

fn type_spec(t: CartanType) -> TypeSpec {
    TypeSpec { series: t.series.letter().to_string(), rank: t.rank }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_theta_and_vogan() {
        let d = Descriptor::parse(r#"{"type":{"series":"A","rank":1},"theta":[[1]],"grading_seed":[{"root":[1],"sign":-1}]}"#).unwrap();
        let datum = d.to_datum().unwrap();
        assert_eq!(datum.grading_seed, vec![(vec![1], -1)]);
        assert_eq!(d.lattice_mode().unwrap(), LatticeMode::Weight);

        let v = Descriptor::parse(r#"{"type":{"series":"A","rank":3},"vogan":{"involution":[3,2,1],"painted":[2]}}"#).unwrap();
        assert!(v.to_datum().unwrap().validate().is_ok());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Descriptor::parse("{").is_err());
        assert!(Descriptor::parse(r#"{"type":{"series":"A","rank":1},"theta":[[1]],"bogus":1}"#).is_err());
        let both = Descriptor::parse(r#"{"type":{"series":"A","rank":1},"theta":[[1]],"vogan":{"involution":[1]}}"#).unwrap();
        assert_eq!(both.to_datum().unwrap_err().kind(), "Malformed");
        let bad_type = Descriptor::parse(r#"{"type":{"series":"H","rank":3},"theta":[[1]]}"#).unwrap();
        assert_eq!(bad_type.to_datum().unwrap_err().kind(), "InvalidType");
        let zero_node = Descriptor::parse(r#"{"type":{"series":"A","rank":2},"vogan":{"involution":[0,1]}}"#).unwrap();
        assert_eq!(zero_node.to_datum().unwrap_err().kind(), "Malformed");
    }

    #[test]
    fn round_trip() {
        let d = Descriptor::from_vogan("E6".parse().unwrap(), vec![6, 2, 5, 4, 3, 1], vec![2]);
        assert_eq!(Descriptor::parse(&d.to_json()).unwrap(), d);
    }
}
