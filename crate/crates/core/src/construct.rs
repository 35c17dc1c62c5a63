//! Generators for the explicit extremal sets, plus the symmetry-raising
//! replacement procedure.

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupSpec, GroupSubset};
use crate::structure::sdeg;
use crate::sumset::signed_sumset;

/// {d, 3d, ..., (2m-1)d}: the odd multiples of d, the extremal family for
/// h-fold signed sumsets of positive integers.
pub fn odd_spaced_ap(d: u64, m: u64) -> Result<GroupSubset> {
    if d < 1 || m < 1 {
        return Err(Error::Precondition("odd_spaced_ap needs d >= 1, m >= 1".into()));
    }
    let vals: Vec<i64> = (0..m).map(|i| (d * (2 * i + 1)) as i64).collect();
    Ok(GroupSubset::from_i64s(&GroupSpec::Integers, &vals))
}

/// {0, d, ..., (m-1)d}: a dilated interval.
pub fn interval_set(d: u64, m: u64) -> Result<GroupSubset> {
    if d < 1 || m < 1 {
        return Err(Error::Precondition("interval_set needs d >= 1, m >= 1".into()));
    }
    let vals: Vec<i64> = (0..m).map(|i| (d * i) as i64).collect();
    Ok(GroupSubset::from_i64s(&GroupSpec::Integers, &vals))
}

/// Integer template with m elements and |A ∩ (-A)| = s, split by the parity
/// of s: an interval [-t, m-t-1] for s = 2t+1, and the odd-spaced set
/// {-(2t-1), ..., -1, 1, 3, ..., 2(m-t)-1} for s = 2t.
fn sdeg_template(m: u64, s: u64) -> Vec<i64> {
    if s % 2 == 1 {
        let t = (s - 1) / 2;
        (-(t as i64)..=(m - t - 1) as i64).collect()
    } else {
        let t = s / 2;
        let mut vals: Vec<i64> = (1..=t).map(|j| -(2 * j as i64 - 1)).collect();
        vals.extend((1..=(m - t)).map(|j| 2 * j as i64 - 1));
        vals
    }
}

/// An m-subset of `g` with |A ∩ (-A)| = s attaining
/// |h±A| = min(p(g), 2hm - hs - h + 1): the parity-appropriate integer
/// template pushed forward along x ↦ x·g0 for the first element g0 of order
/// p(g) in canonical order.
pub fn rho_s_witness(g: &GroupSpec, m: u64, s: u64) -> Result<GroupSubset> {
    if s < 1 || s > m {
        return Err(Error::Precondition(format!(
            "rho_s_witness needs 1 <= s <= m, got s={s}, m={m}"
        )));
    }
    let p = g
        .p_of_group()
        .finite()
        .ok_or(Error::InfiniteGroup)?;
    if 2 * m - s > p {
        return Err(Error::Precondition(format!(
            "construction needs 2m - s <= p(G): 2*{m} - {s} = {} > {p}",
            2 * m - s
        )));
    }
    let fg = FiniteGroup::new(g)?;
    let g0 = fg
        .first_element_of_order(p as usize)
        .ok_or_else(|| Error::Precondition(format!("no element of order {p}")))?;
    let g0 = fg.element(g0);
    let elems = sdeg_template(m, s)
        .into_iter()
        .map(|x| g.scalar_mul(x, &g0))
        .collect::<Result<Vec<_>>>()?;
    let set = GroupSubset::new(g.clone(), elems)?;
    assert_eq!(set.len() as u64, m, "template image lost elements");
    assert_eq!(sdeg(&set) as u64, s, "template image broke sdeg");
    Ok(set)
}

/// {0, g0, 2·g0, ..., (m-1)·g0} for the first element g0 of order p(g):
/// the extremal set for plain h-fold sumsets when m <= p(g).
pub fn subgroup_interval(g: &GroupSpec, m: u64) -> Result<GroupSubset> {
    if m < 1 {
        return Err(Error::Precondition("subgroup_interval needs m >= 1".into()));
    }
    let p = g.p_of_group().finite().ok_or(Error::InfiniteGroup)?;
    if m > p {
        return Err(Error::Precondition(format!(
            "subgroup_interval needs m <= p(G), got m={m} > p={p}"
        )));
    }
    let fg = FiniteGroup::new(g)?;
    let g0 = fg
        .first_element_of_order(p as usize)
        .ok_or_else(|| Error::Precondition(format!("no element of order {p}")))?;
    let g0 = fg.element(g0);
    let elems = (0..m as i64)
        .map(|i| g.scalar_mul(i, &g0))
        .collect::<Result<Vec<_>>>()?;
    GroupSubset::new(g.clone(), elems)
}

/// Outcome of [`symmetrize`]: the symmetry-raised set and the number of
/// replacement steps taken.
#[derive(Clone, Debug)]
pub struct Symmetrized {
    pub set: GroupSubset,
    pub steps: usize,
}

/// Raise sdeg to |A| - 1 or |A| by repeatedly swapping one element for the
/// negative of another: A ← (A ∪ {-b}) \ {a} with a, b ∈ A, -a, -b ∉ A.
/// Every step raises sdeg by exactly 2 and shrinks h±: the invariant
/// h±(step) ⊆ h±(previous) is asserted at each step.
///
/// The lexicographically smallest admissible (a, b) pair is replaced, which
/// pins the output for regression tests; any admissible choice works.
pub fn symmetrize(a: &GroupSubset, h: u32) -> Result<Symmetrized> {
    if a.len() < 2 {
        return Err(Error::Precondition("symmetrize needs |A| >= 2".into()));
    }
    if a.intersect(&a.negated())?.is_empty() {
        return Err(Error::Precondition("symmetrize needs A ∩ (-A) ≠ ∅".into()));
    }
    let start_sdeg = sdeg(a);
    if start_sdeg > a.len() - 2 {
        return Err(Error::Precondition(format!(
            "symmetrize needs sdeg(A) <= |A| - 2, got sdeg = {start_sdeg} for |A| = {}",
            a.len()
        )));
    }
    let max_steps = (a.len() - start_sdeg) / 2;
    let mut current = a.clone();
    let mut current_sumset = signed_sumset(&current, h)?;
    let mut steps = 0usize;
    while sdeg(&current) + 2 <= current.len() {
        let neg = current.negated();
        let loose: Vec<_> = current
            .iter()
            .filter(|e| !neg.contains(e))
            .cloned()
            .collect();
        // elements are in canonical order, so the first distinct pair is the
        // lexicographically smallest admissible (a, b)
        let (rm, add_neg) = (loose[0].clone(), loose[1].clone());
        let mut elems: Vec<_> = current
            .iter()
            .filter(|e| **e != rm)
            .cloned()
            .collect();
        elems.push(current.group().neg(&add_neg)?);
        let next = GroupSubset::new(current.group().clone(), elems)?;
        assert_eq!(next.len(), current.len(), "replacement changed cardinality");
        assert_eq!(sdeg(&next), sdeg(&current) + 2, "replacement must raise sdeg by 2");
        let next_sumset = signed_sumset(&next, h)?;
        assert!(
            next_sumset.difference(&current_sumset)?.is_empty(),
            "replacement must shrink the signed sumset"
        );
        current = next;
        current_sumset = next_sumset;
        steps += 1;
    }
    assert!(steps <= max_steps);
    debug_assert!(sdeg(&current) + 1 >= current.len());
    Ok(Symmetrized { set: current, steps })
}
