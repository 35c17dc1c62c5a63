//! Classification of subsets by symmetry, arithmetic-progression detection,
//! and Z-specific helpers.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupSpec, GroupSubset};

/// Symmetry class of a nonempty set:
///
/// * `Sym`:  A = -A
/// * `Asym`: A ∩ (-A) = ∅
/// * `Nsym`: not symmetric, but some single deletion leaves a symmetric set
/// * `Other`: none of the above
///
/// Checked in that order, so exactly one tag is returned.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, Serialize)]
pub enum SymmetryClass {
    Sym,
    Asym,
    Nsym,
    Other,
}

impl fmt::Display for SymmetryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SymmetryClass::Sym => "sym",
            SymmetryClass::Asym => "asym",
            SymmetryClass::Nsym => "nsym",
            SymmetryClass::Other => "other",
        };
        write!(f, "{s}")
    }
}

/// Witness that a set is the arithmetic progression
/// {first + i·diff : 0 <= i < length} with diff != 0.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct APWitness {
    pub first: GroupElement,
    pub diff: GroupElement,
    pub length: usize,
}

impl APWitness {
    /// Materialize the progression this witness describes.
    pub fn generate(&self, group: &GroupSpec) -> Result<GroupSubset> {
        let mut elems = Vec::with_capacity(self.length);
        let mut cur = self.first.clone();
        for _ in 0..self.length {
            elems.push(cur.clone());
            cur = group.add(&cur, &self.diff)?;
        }
        let set = GroupSubset::new(group.clone(), elems)?;
        if set.len() != self.length {
            return Err(Error::Precondition(
                "progression visits an element twice".into(),
            ));
        }
        Ok(set)
    }
}

/// Symmetry degree sdeg(A) = |A ∩ (-A)|.
pub fn sdeg(a: &GroupSubset) -> usize {
    a.intersect(&a.negated()).expect("same group").len()
}

/// A ∪ (-A).
pub fn union_with_negation(a: &GroupSubset) -> GroupSubset {
    let u = a.union(&a.negated()).expect("same group");
    debug_assert_eq!(
        u.len() + intersect_with_negation(a).len(),
        2 * a.len(),
        "|A ∪ -A| = 2|A| - |A ∩ -A|"
    );
    u
}

/// A ∩ (-A).
pub fn intersect_with_negation(a: &GroupSubset) -> GroupSubset {
    a.intersect(&a.negated()).expect("same group")
}

/// Classify a nonempty set into its symmetry class.
pub fn classify(a: &GroupSubset) -> SymmetryClass {
    debug_assert!(!a.is_empty());
    let neg = a.negated();
    if *a == neg {
        return SymmetryClass::Sym;
    }
    if a.intersect(&neg).expect("same group").is_empty() {
        return SymmetryClass::Asym;
    }
    for e in a.iter() {
        let rest: Vec<GroupElement> = a.iter().filter(|x| *x != e).cloned().collect();
        let rest = GroupSubset::new(a.group().clone(), rest).expect("members");
        if rest == rest.negated() {
            return SymmetryClass::Nsym;
        }
    }
    SymmetryClass::Other
}

/// Does A equal {start + i·d : 0 <= i < |A|}?
pub fn is_ap_with(a: &GroupSubset, start: &GroupElement, d: &GroupElement) -> bool {
    if d.is_zero() {
        return false;
    }
    let group = a.group();
    // cheap walk first: every step must land in A
    let mut cur = start.clone();
    for _ in 0..a.len() {
        if !a.contains(&cur) {
            return false;
        }
        cur = group.add(&cur, d).expect("members");
    }
    // a short cycle of d could revisit elements, so regenerate and compare
    APWitness {
        first: start.clone(),
        diff: d.clone(),
        length: a.len(),
    }
    .generate(group)
    .map(|s| s == *a)
    .unwrap_or(false)
}

/// Is A an arithmetic progression with difference d (for any start)?
pub fn is_ap_with_diff(a: &GroupSubset, d: &GroupElement) -> bool {
    a.iter().any(|start| is_ap_with(a, start, d))
}

/// Find a witness (first, diff) with A = {first + i·diff}, if one exists.
///
/// Over Z the sorted element list decides in one scan. In a finite group a
/// progression need not be sorted, so every (start ∈ A, nonzero diff ∈ G)
/// pair is tried with early pruning; the first witness in canonical order is
/// returned and callers must quantify existentially.
pub fn detect_ap(a: &GroupSubset) -> Result<Option<APWitness>> {
    if a.len() < 2 {
        return Err(Error::Precondition(
            "arithmetic progressions need at least 2 elements".into(),
        ));
    }
    let group = a.group();
    if !group.is_finite() {
        let elems = a.elements();
        let d = group
            .add(&elems[1], &group.neg(&elems[0])?)
            .expect("members");
        for w in elems.windows(2) {
            let step = group.add(&w[1], &group.neg(&w[0])?).expect("members");
            if step != d {
                return Ok(None);
            }
        }
        return Ok(Some(APWitness {
            first: elems[0].clone(),
            diff: d,
            length: a.len(),
        }));
    }
    for start in a.iter() {
        for d in group.enumerate_elements()? {
            if d.is_zero() {
                continue;
            }
            if is_ap_with(a, start, &d) {
                return Ok(Some(APWitness {
                    first: start.clone(),
                    diff: d,
                    length: a.len(),
                }));
            }
        }
    }
    Ok(None)
}

/// A_abs = {|a| : a ∈ A} for a set of integers.
pub fn abs_set(a: &GroupSubset) -> Result<GroupSubset> {
    if a.group().is_finite() {
        return Err(Error::IntegersOnly);
    }
    let elems: Vec<GroupElement> = a
        .iter()
        .map(|e| GroupElement::Int(e.as_bigint().unwrap().abs()))
        .collect();
    GroupSubset::new(GroupSpec::Integers, elems)
}

/// Is A = d * {1, 3, ..., 2k-1} for some positive integer d?
pub fn is_odd_spaced(a: &GroupSubset) -> Result<bool> {
    if a.group().is_finite() {
        return Err(Error::IntegersOnly);
    }
    if a.is_empty() {
        return Ok(false);
    }
    let first = a.elements()[0].as_bigint().unwrap();
    if !first.is_positive() {
        return Ok(false);
    }
    let d = first.clone();
    Ok(a.elements().iter().enumerate().all(|(i, e)| {
        *e.as_bigint().unwrap() == &d * BigInt::from(2 * i as i64 + 1)
    }))
}

/// Is A = d * [0, m-1] for some positive integer d?
pub fn is_dilated_interval(a: &GroupSubset) -> Result<bool> {
    if a.group().is_finite() {
        return Err(Error::IntegersOnly);
    }
    if a.is_empty() {
        return Ok(false);
    }
    let elems = a.elements();
    if !elems[0].as_bigint().unwrap().is_zero() {
        return Ok(false);
    }
    if a.len() == 1 {
        return Ok(true);
    }
    let d = elems[1].as_bigint().unwrap().clone();
    if !d.is_positive() {
        return Ok(false);
    }
    Ok(elems
        .iter()
        .enumerate()
        .all(|(i, e)| *e.as_bigint().unwrap() == &d * BigInt::from(i as i64)))
}
