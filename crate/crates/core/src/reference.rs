//! Brute-force λ-vector enumerators.
//!
//! These walk every admissible coefficient vector straight off the
//! definitions, using only `GroupSpec` arithmetic. They are deliberately
//! independent of the dynamic programs in [`crate::sumset`] and serve as the
//! oracles those engines are checked against. Exponential in |A| and h; use
//! for testing only.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupSubset};
use crate::sumset::SumsetKind;

/// h-fold sumset of the given kind by exhaustive coefficient enumeration.
pub fn naive_sumset(a: &GroupSubset, kind: SumsetKind, h: u32) -> Result<GroupSubset> {
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    let group = a.group().clone();
    let elems: Vec<GroupElement> = a.iter().cloned().collect();
    let mut out: BTreeSet<GroupElement> = BTreeSet::new();
    let mut partial = group.zero();
    recurse(
        &group, &elems, kind, 0, h as i64, &mut partial, &mut out,
    )?;
    GroupSubset::new(group, out.into_iter().collect())
}

fn recurse(
    group: &crate::group::GroupSpec,
    elems: &[GroupElement],
    kind: SumsetKind,
    i: usize,
    remaining: i64,
    partial: &mut GroupElement,
    out: &mut BTreeSet<GroupElement>,
) -> Result<()> {
    if i == elems.len() {
        if remaining == 0 {
            out.insert(partial.clone());
        }
        return Ok(());
    }
    let coeffs: Vec<i64> = match kind {
        SumsetKind::Plain => (0..=remaining).collect(),
        SumsetKind::Restricted => (0..=remaining.min(1)).collect(),
        SumsetKind::Signed => (-remaining..=remaining).collect(),
        SumsetKind::RestrictedSigned => {
            let mut cs = vec![0];
            if remaining >= 1 {
                cs.push(1);
                cs.push(-1);
            }
            cs
        }
    };
    for c in coeffs {
        let term = group.scalar_mul(c, &elems[i])?;
        let mut next = group.add(partial, &term)?;
        std::mem::swap(partial, &mut next);
        recurse(group, elems, kind, i + 1, remaining - c.abs(), partial, out)?;
        std::mem::swap(partial, &mut next);
    }
    Ok(())
}
