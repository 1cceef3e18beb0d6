//! JSON file formats.
//!
//! A subset file is `{"group": [orders], "elements": [[coords], ...]}` and a
//! pair file is `{"group": [orders], "S": [...], "T": [...]}`. Elements are
//! written in canonical index order and output is compact, so equal inputs
//! produce byte-identical files.

use serde::{Deserialize, Serialize};

use crate::duality::DualPair;
use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupSpec};
use crate::ring::GroupRingElement;
use crate::scalar::Coeff;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubsetFile {
    pub group: GroupSpec,
    pub elements: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairFile {
    pub group: GroupSpec,
    #[serde(rename = "S")]
    pub s: Vec<Vec<u32>>,
    #[serde(rename = "T")]
    pub t: Vec<Vec<u32>>,
}

fn element_list<T: Coeff>(a: &GroupRingElement<T>) -> Result<Vec<Vec<u32>>> {
    a.ensure_subset()?;
    Ok(a.elements().into_iter().map(|e| e.coords).collect())
}

fn subset_from_list<T: Coeff>(group: &GroupSpec, list: &[Vec<u32>]) -> Result<GroupRingElement<T>> {
    let elements: Vec<GroupElement> = list.iter().cloned().map(GroupElement::new).collect();
    GroupRingElement::from_elements(group, &elements)
}

impl SubsetFile {
    pub fn from_subset<T: Coeff>(a: &GroupRingElement<T>) -> Result<Self> {
        Ok(Self {
            group: a.group().clone(),
            elements: element_list(a)?,
        })
    }

    pub fn to_subset<T: Coeff>(&self) -> Result<GroupRingElement<T>> {
        subset_from_list(&self.group, &self.elements)
    }
}

impl PairFile {
    pub fn from_pair<T: Coeff>(pair: &DualPair<T>) -> Result<Self> {
        Ok(Self {
            group: pair.group().clone(),
            s: element_list(&pair.s)?,
            t: element_list(&pair.t)?,
        })
    }

    pub fn to_pair<T: Coeff>(&self) -> Result<DualPair<T>> {
        DualPair::new(
            subset_from_list(&self.group, &self.s)?,
            subset_from_list(&self.group, &self.t)?,
        )
    }
}

pub fn to_canonical_json<S: Serialize>(value: &S) -> Result<String> {
    serde_json::to_string(value).map_err(|e| Error::Format(e.to_string()))
}

pub fn parse_subset<T: Coeff>(json: &str) -> Result<GroupRingElement<T>> {
    let file: SubsetFile = serde_json::from_str(json).map_err(|e| Error::Format(e.to_string()))?;
    file.to_subset()
}

pub fn parse_pair<T: Coeff>(json: &str) -> Result<DualPair<T>> {
    let file: PairFile = serde_json::from_str(json).map_err(|e| Error::Format(e.to_string()))?;
    file.to_pair()
}
