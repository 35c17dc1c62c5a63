//! The four sumset flavors and their H-fold unions.
//!
//! For a set A = {a_1, ..., a_k} and weight h, the engines compute
//!
//! * plain        hA      : sums with λ_i >= 0, Σλ_i = h
//! * restricted   h^A     : sums with λ_i in {0,1}, Σλ_i = h
//! * signed       h±A     : sums with λ_i in [-h,h], Σ|λ_i| = h
//! * restricted ± h±^A    : sums with λ_i in {-1,0,1}, Σ|λ_i| = h
//!
//! over the distinct elements of A, with the convention that every 0-fold
//! sumset is {0}. Each engine is a dynamic program over (partial sum,
//! consumed weight) states; the brute-force λ-vector enumerators in
//! [`crate::reference`] are the independent oracles the DPs are tested
//! against.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupElement, GroupSpec, GroupSubset};

/// Which of the four sumset flavors to compute.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, Serialize)]
pub enum SumsetKind {
    Plain,
    Restricted,
    Signed,
    RestrictedSigned,
}

impl SumsetKind {
    pub const ALL: [SumsetKind; 4] = [
        SumsetKind::Plain,
        SumsetKind::Restricted,
        SumsetKind::Signed,
        SumsetKind::RestrictedSigned,
    ];

    /// Restricted kinds use each element at most once, so the h-fold set is
    /// empty for h > |A|.
    pub fn is_restricted(&self) -> bool {
        matches!(self, SumsetKind::Restricted | SumsetKind::RestrictedSigned)
    }
}

impl fmt::Display for SumsetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SumsetKind::Plain => "plain",
            SumsetKind::Restricted => "restricted",
            SumsetKind::Signed => "signed",
            SumsetKind::RestrictedSigned => "restricted-signed",
        };
        write!(f, "{s}")
    }
}

impl FromStr for SumsetKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "plain" => Ok(SumsetKind::Plain),
            "restricted" => Ok(SumsetKind::Restricted),
            "signed" => Ok(SumsetKind::Signed),
            "restricted-signed" | "restricted_signed" => Ok(SumsetKind::RestrictedSigned),
            other => Err(Error::Parse {
                pos: 0,
                msg: format!("unknown sumset kind {other:?}"),
            }),
        }
    }
}

/// A nonempty finite set H of nonnegative multiplicities; the H-fold sumset
/// is the union of the h-fold sumsets over h in H.
#[derive(Clone, PartialEq, Eq, Debug, Hash, Serialize)]
pub struct MultiplicitySet {
    values: Vec<u32>,
}

impl MultiplicitySet {
    pub fn new(mut values: Vec<u32>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyMultiplicitySet);
        }
        values.sort_unstable();
        values.dedup();
        Ok(MultiplicitySet { values })
    }

    pub fn singleton(h: u32) -> Self {
        MultiplicitySet { values: vec![h] }
    }

    /// The interval [0, h] = {0, 1, ..., h}.
    pub fn interval(h: u32) -> Self {
        MultiplicitySet {
            values: (0..=h).collect(),
        }
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn max(&self) -> u32 {
        *self.values.last().unwrap()
    }

    pub fn contains(&self, h: u32) -> bool {
        self.values.binary_search(&h).is_ok()
    }
}

impl fmt::Display for MultiplicitySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for MultiplicitySet {
    type Err = Error;

    /// Accepts `2`, `1,3,5`, and the interval form `0..3`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if let Some((lo, hi)) = t.split_once("..") {
            let lo: u32 = lo.trim().parse().map_err(|_| Error::Parse {
                pos: 0,
                msg: format!("bad interval bound {lo:?}"),
            })?;
            let hi: u32 = hi.trim().parse().map_err(|_| Error::Parse {
                pos: 0,
                msg: format!("bad interval bound {hi:?}"),
            })?;
            if hi < lo {
                return Err(Error::Parse {
                    pos: 0,
                    msg: format!("empty interval {t:?}"),
                });
            }
            return MultiplicitySet::new((lo..=hi).collect());
        }
        let values = t
            .split(',')
            .map(|p| {
                p.trim().parse::<u32>().map_err(|_| Error::Parse {
                    pos: 0,
                    msg: format!("bad multiplicity {p:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        MultiplicitySet::new(values)
    }
}

// ---------------------------------------------------------------------------
// Finite-group engines: weight-indexed bitset DP.
// ---------------------------------------------------------------------------

fn translate(fg: &FiniteGroup, src: &BitSet, t: usize) -> BitSet {
    let mut out = BitSet::new(src.len());
    for i in src.iter_ones() {
        out.set(fg.add(i, t));
    }
    out
}

/// dp[w] = w-fold sumset of the given kind, for every w in [0, h_max].
///
/// The state is the set of achievable (partial sum, consumed weight) pairs
/// after a prefix of the element list; each step spends the next element's
/// coefficient within the remaining weight budget.
pub(crate) fn fold_table_finite(
    fg: &FiniteGroup,
    idxs: &[usize],
    kind: SumsetKind,
    h_max: u32,
) -> Vec<BitSet> {
    let n = fg.order();
    let h_max = h_max as usize;
    let mut zero_only = BitSet::new(n);
    zero_only.set(0);
    match kind {
        SumsetKind::Plain => {
            let mut dp = vec![zero_only];
            for w in 1..=h_max {
                let mut next = BitSet::new(n);
                for &a in idxs {
                    next.union_with(&translate(fg, &dp[w - 1], a));
                }
                dp.push(next);
            }
            dp
        }
        SumsetKind::Restricted => {
            let mut dp = vec![BitSet::new(n); h_max + 1];
            dp[0] = zero_only;
            for &a in idxs {
                for c in (1..=h_max).rev() {
                    let shifted = translate(fg, &dp[c - 1], a);
                    dp[c].union_with(&shifted);
                }
            }
            dp
        }
        SumsetKind::RestrictedSigned => {
            let mut dp = vec![BitSet::new(n); h_max + 1];
            dp[0] = zero_only;
            for &a in idxs {
                let na = fg.neg(a);
                for c in (1..=h_max).rev() {
                    let plus = translate(fg, &dp[c - 1], a);
                    let minus = translate(fg, &dp[c - 1], na);
                    dp[c].union_with(&plus);
                    dp[c].union_with(&minus);
                }
            }
            dp
        }
        SumsetKind::Signed => {
            let mut dp = vec![BitSet::new(n); h_max + 1];
            dp[0] = zero_only;
            for &a in idxs {
                // j-fold multiples of a and -a, j = 1..=h_max
                let mut mults = Vec::with_capacity(h_max);
                let mut acc = 0usize;
                for _ in 0..h_max {
                    acc = fg.add(acc, a);
                    mults.push((acc, fg.neg(acc)));
                }
                for w in (1..=h_max).rev() {
                    for j in 1..=w {
                        let (pj, nj) = mults[j - 1];
                        let plus = translate(fg, &dp[w - j], pj);
                        let minus = translate(fg, &dp[w - j], nj);
                        dp[w].union_with(&plus);
                        dp[w].union_with(&minus);
                    }
                }
            }
            dp
        }
    }
}

// ---------------------------------------------------------------------------
// Z engines: offset-bitset DP with a big-integer fallback.
// ---------------------------------------------------------------------------

const Z_BITSET_BUDGET: i128 = 4_000_000;

enum ZTable {
    /// Bit i represents the integer (i - offset).
    Bits { dp: Vec<BitSet>, offset: i128 },
    Big { dp: Vec<HashSet<BigInt>> },
}

fn fold_table_z(vals: &[BigInt], kind: SumsetKind, h_max: u32) -> ZTable {
    let bound: BigInt = vals
        .iter()
        .map(|v| v.abs())
        .max()
        .unwrap_or_else(BigInt::zero)
        * BigInt::from(h_max);
    if let Some(b) = bound.to_i128().filter(|&b| b <= Z_BITSET_BUDGET) {
        let small: Vec<i128> = vals.iter().map(|v| v.to_i128().unwrap()).collect();
        ZTable::Bits {
            dp: fold_table_z_bits(&small, kind, h_max, b),
            offset: b,
        }
    } else {
        ZTable::Big {
            dp: fold_table_z_big(vals, kind, h_max),
        }
    }
}

fn fold_table_z_bits(vals: &[i128], kind: SumsetKind, h_max: u32, bound: i128) -> Vec<BitSet> {
    let size = (2 * bound + 1) as usize;
    let off = bound;
    let h_max = h_max as usize;
    let shift = |src: &BitSet, delta: i128| -> BitSet {
        let mut out = BitSet::new(size);
        for i in src.iter_ones() {
            let j = i as i128 + delta;
            debug_assert!(j >= 0 && (j as usize) < size);
            out.set(j as usize);
        }
        out
    };
    let mut zero_only = BitSet::new(size);
    zero_only.set(off as usize);
    match kind {
        SumsetKind::Plain => {
            let mut dp = vec![zero_only];
            for w in 1..=h_max {
                let mut next = BitSet::new(size);
                for &a in vals {
                    next.union_with(&shift(&dp[w - 1], a));
                }
                dp.push(next);
            }
            dp
        }
        SumsetKind::Restricted => {
            let mut dp = vec![BitSet::new(size); h_max + 1];
            dp[0] = zero_only;
            for &a in vals {
                for c in (1..=h_max).rev() {
                    let s = shift(&dp[c - 1], a);
                    dp[c].union_with(&s);
                }
            }
            dp
        }
        SumsetKind::RestrictedSigned => {
            let mut dp = vec![BitSet::new(size); h_max + 1];
            dp[0] = zero_only;
            for &a in vals {
                for c in (1..=h_max).rev() {
                    let p = shift(&dp[c - 1], a);
                    let m = shift(&dp[c - 1], -a);
                    dp[c].union_with(&p);
                    dp[c].union_with(&m);
                }
            }
            dp
        }
        SumsetKind::Signed => {
            let mut dp = vec![BitSet::new(size); h_max + 1];
            dp[0] = zero_only;
            for &a in vals {
                for w in (1..=h_max).rev() {
                    for j in 1..=w {
                        let d = a * j as i128;
                        let p = shift(&dp[w - j], d);
                        let m = shift(&dp[w - j], -d);
                        dp[w].union_with(&p);
                        dp[w].union_with(&m);
                    }
                }
            }
            dp
        }
    }
}

fn fold_table_z_big(vals: &[BigInt], kind: SumsetKind, h_max: u32) -> Vec<HashSet<BigInt>> {
    let h_max = h_max as usize;
    let mut zero_only = HashSet::new();
    zero_only.insert(BigInt::zero());
    let mut dp: Vec<HashSet<BigInt>> = vec![HashSet::new(); h_max + 1];
    dp[0] = zero_only;
    match kind {
        SumsetKind::Plain => {
            for w in 1..=h_max {
                let mut next = HashSet::new();
                for s in &dp[w - 1] {
                    for a in vals {
                        next.insert(s + a);
                    }
                }
                dp[w] = next;
            }
        }
        SumsetKind::Restricted | SumsetKind::RestrictedSigned => {
            let signed = kind == SumsetKind::RestrictedSigned;
            for a in vals {
                for c in (1..=h_max).rev() {
                    let prev: Vec<BigInt> = dp[c - 1].iter().cloned().collect();
                    for s in prev {
                        dp[c].insert(&s + a);
                        if signed {
                            dp[c].insert(&s - a);
                        }
                    }
                }
            }
        }
        SumsetKind::Signed => {
            for a in vals {
                for w in (1..=h_max).rev() {
                    for j in 1..=w {
                        let d = a * BigInt::from(j);
                        let prev: Vec<BigInt> = dp[w - j].iter().cloned().collect();
                        for s in prev {
                            dp[w].insert(&s + &d);
                            dp[w].insert(&s - &d);
                        }
                    }
                }
            }
        }
    }
    dp
}

// ---------------------------------------------------------------------------
// Public API
// ---------------------------------------------------------------------------

/// Holds per-weight sumsets so a single DP pass serves H-fold unions.
pub struct FoldTable {
    group: GroupSpec,
    kind: SumsetKind,
    set_len: usize,
    inner: FoldInner,
}

enum FoldInner {
    Finite { fg: FiniteGroup, dp: Vec<BitSet> },
    Z(ZTable),
}

impl FoldTable {
    /// Compute w-fold sumsets of `a` for every w in [0, h_max].
    pub fn build(a: &GroupSubset, kind: SumsetKind, h_max: u32) -> Result<FoldTable> {
        if a.is_empty() {
            return Err(Error::EmptySet);
        }
        let group = a.group().clone();
        let inner = if group.is_finite() {
            let fg = FiniteGroup::new(&group)?;
            let idxs = fg.indices_of(a)?;
            let dp = fold_table_finite(&fg, &idxs, kind, h_max);
            FoldInner::Finite { fg, dp }
        } else {
            let vals: Vec<BigInt> = a
                .iter()
                .map(|e| e.as_bigint().unwrap().clone())
                .collect();
            FoldInner::Z(fold_table_z(&vals, kind, h_max))
        };
        Ok(FoldTable {
            group,
            kind,
            set_len: a.len(),
            inner,
        })
    }

    fn weight_in_range(&self, w: u32) -> bool {
        // restricted kinds cannot spend more weight than there are elements
        !(self.kind.is_restricted() && w as usize > self.set_len)
    }

    /// The w-fold sumset (empty for restricted kinds when w > |A|).
    pub fn at(&self, w: u32) -> GroupSubset {
        if !self.weight_in_range(w) {
            return GroupSubset::empty(self.group.clone());
        }
        match &self.inner {
            FoldInner::Finite { fg, dp } => fg.subset_from_indices(dp[w as usize].iter_ones()),
            FoldInner::Z(ZTable::Bits { dp, offset }) => {
                let elems = dp[w as usize]
                    .iter_ones()
                    .map(|i| GroupElement::Int(BigInt::from(i as i128 - offset)))
                    .collect();
                GroupSubset::new(GroupSpec::Integers, elems).unwrap()
            }
            FoldInner::Z(ZTable::Big { dp }) => {
                let elems = dp[w as usize]
                    .iter()
                    .cloned()
                    .map(GroupElement::Int)
                    .collect();
                GroupSubset::new(GroupSpec::Integers, elems).unwrap()
            }
        }
    }

    pub fn size_at(&self, w: u32) -> usize {
        if !self.weight_in_range(w) {
            return 0;
        }
        match &self.inner {
            FoldInner::Finite { dp, .. } => dp[w as usize].count(),
            FoldInner::Z(ZTable::Bits { dp, .. }) => dp[w as usize].count(),
            FoldInner::Z(ZTable::Big { dp }) => dp[w as usize].len(),
        }
    }

    /// Union over h in H of the h-fold sumsets.
    pub fn union_over(&self, hs: &MultiplicitySet) -> GroupSubset {
        let mut acc = GroupSubset::empty(self.group.clone());
        for &h in hs.values() {
            acc = acc.union(&self.at(h)).expect("same group");
        }
        acc
    }
}

/// The h-fold sumset hA.
pub fn hfold_sumset(a: &GroupSubset, h: u32) -> Result<GroupSubset> {
    Ok(FoldTable::build(a, SumsetKind::Plain, h)?.at(h))
}

/// The restricted h-fold sumset h^A: sums of h distinct elements.
pub fn restricted_sumset(a: &GroupSubset, h: u32) -> Result<GroupSubset> {
    Ok(FoldTable::build(a, SumsetKind::Restricted, h)?.at(h))
}

/// The h-fold signed sumset h±A.
pub fn signed_sumset(a: &GroupSubset, h: u32) -> Result<GroupSubset> {
    Ok(FoldTable::build(a, SumsetKind::Signed, h)?.at(h))
}

/// The restricted h-fold signed sumset h±^A: ±-signed sums of h distinct
/// elements.
pub fn restricted_signed_sumset(a: &GroupSubset, h: u32) -> Result<GroupSubset> {
    Ok(FoldTable::build(a, SumsetKind::RestrictedSigned, h)?.at(h))
}

/// The h-fold sumset of the requested kind.
pub fn sumset(a: &GroupSubset, kind: SumsetKind, h: u32) -> Result<GroupSubset> {
    Ok(FoldTable::build(a, kind, h)?.at(h))
}

/// The H-fold sumset of the requested kind: union of h-fold sumsets, h in H.
pub fn union_fold(a: &GroupSubset, hs: &MultiplicitySet, kind: SumsetKind) -> Result<GroupSubset> {
    Ok(FoldTable::build(a, kind, hs.max())?.union_over(hs))
}

/// Fast path for the signed sumset: h±A = h(A ∪ (-A)), valid exactly when
/// A ∩ (-A) is nonempty. The hypothesis is checked; the unguarded identity
/// is false in general (A = {1,2} over Z at h = 2 is the stock
/// counterexample, the two sides differing by {0}).
pub fn signed_sumset_fast(a: &GroupSubset, h: u32) -> Result<GroupSubset> {
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    if a.intersect(&a.negated())?.is_empty() {
        return Err(Error::Precondition(
            "signed_sumset_fast requires A ∩ (-A) ≠ ∅".into(),
        ));
    }
    hfold_sumset(&a.union(&a.negated())?, h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;

    fn zset(vals: &[i64]) -> GroupSubset {
        GroupSubset::from_i64s(&GroupSpec::Integers, vals)
    }

    fn zn(n: u64, vals: &[i64]) -> GroupSubset {
        GroupSubset::from_i64s(&GroupSpec::cyclic(n).unwrap(), vals)
    }

    #[test]
    fn hfold_examples() {
        assert_eq!(hfold_sumset(&zset(&[0, 1]), 3).unwrap(), zset(&[0, 1, 2, 3]));
        assert_eq!(hfold_sumset(&zset(&[5, 9]), 0).unwrap(), zset(&[0]));
        assert_eq!(hfold_sumset(&zn(5, &[1, 2]), 2).unwrap(), zn(5, &[2, 3, 4]));
        assert!(hfold_sumset(&GroupSubset::empty(GroupSpec::Integers), 2).is_err());
    }

    #[test]
    fn restricted_examples() {
        assert_eq!(
            restricted_sumset(&zset(&[1, 2, 3]), 2).unwrap(),
            zset(&[3, 4, 5])
        );
        // h = |A|: the single full sum
        assert_eq!(restricted_sumset(&zset(&[1, 2, 3]), 3).unwrap(), zset(&[6]));
        assert_eq!(restricted_sumset(&zn(7, &[1, 2, 4]), 3).unwrap(), zn(7, &[0]));
        // h > |A| is empty, h = 0 is {0}
        assert!(restricted_sumset(&zset(&[1, 2]), 3).unwrap().is_empty());
        assert_eq!(restricted_sumset(&zset(&[1, 2]), 0).unwrap(), zset(&[0]));
    }

    #[test]
    fn signed_examples() {
        assert_eq!(
            signed_sumset(&zset(&[1, 2]), 2).unwrap(),
            zset(&[-4, -3, -2, -1, 1, 2, 3, 4])
        );
        // h = 1 is A ∪ (-A)
        let a = zset(&[2, 5]);
        assert_eq!(
            signed_sumset(&a, 1).unwrap(),
            a.union(&a.negated()).unwrap()
        );
        assert_eq!(
            signed_sumset(&zset(&[0, 1, 2]), 2).unwrap(),
            zset(&[-4, -3, -2, -1, 0, 1, 2, 3, 4])
        );
    }

    #[test]
    fn restricted_signed_examples() {
        assert_eq!(
            restricted_signed_sumset(&zset(&[1, 2]), 2).unwrap(),
            zset(&[-3, -1, 1, 3])
        );
        let a = zn(17, &[1, 2, 3, 4, 5]);
        assert_eq!(restricted_signed_sumset(&a, 2).unwrap().len(), 16);
        let a = zn(41, &[0, 1, 3, 5, 7, 9, 11, 13, 15]);
        let s = restricted_signed_sumset(&a, 3).unwrap();
        assert_eq!(s.len(), 40);
        assert!(!s.contains(&GroupSpec::cyclic(41).unwrap().element_from_i64(0)));
    }

    #[test]
    fn union_fold_examples() {
        let a = zset(&[3, 7]);
        for kind in SumsetKind::ALL {
            assert_eq!(
                union_fold(&a, &MultiplicitySet::singleton(0), kind).unwrap(),
                zset(&[0])
            );
        }
        assert_eq!(
            union_fold(
                &zset(&[1]),
                &MultiplicitySet::new(vec![0, 1, 2]).unwrap(),
                SumsetKind::Signed
            )
            .unwrap(),
            zset(&[-2, -1, 0, 1, 2])
        );
        assert_eq!(
            union_fold(
                &zn(5, &[1, 2]),
                &MultiplicitySet::new(vec![1, 2]).unwrap(),
                SumsetKind::Plain
            )
            .unwrap(),
            zn(5, &[1, 2, 3, 4])
        );
    }

    #[test]
    fn fast_path_examples() {
        assert_eq!(
            signed_sumset_fast(&zset(&[-1, 1]), 2).unwrap(),
            zset(&[-2, 0, 2])
        );
        assert!(signed_sumset_fast(&zset(&[1, 2]), 2).is_err());
        assert_eq!(
            signed_sumset_fast(&zset(&[0, 1]), 3).unwrap(),
            zset(&[-3, -2, -1, 0, 1, 2, 3])
        );
    }

    #[test]
    fn fast_path_counterexample_without_guard() {
        // 2±{1,2} misses 0 but 2({1,2} ∪ {-1,-2}) contains it.
        let a = zset(&[1, 2]);
        let lhs = signed_sumset(&a, 2).unwrap();
        let rhs = hfold_sumset(&a.union(&a.negated()).unwrap(), 2).unwrap();
        let diff = rhs.difference(&lhs).unwrap();
        assert_eq!(diff, zset(&[0]));
        assert!(lhs.difference(&rhs).unwrap().is_empty());
    }

    #[test]
    fn multiplicity_set_parsing() {
        assert_eq!(
            "0..3".parse::<MultiplicitySet>().unwrap(),
            MultiplicitySet::interval(3)
        );
        assert_eq!(
            "2".parse::<MultiplicitySet>().unwrap(),
            MultiplicitySet::singleton(2)
        );
        assert_eq!(
            "3,1,3".parse::<MultiplicitySet>().unwrap().values(),
            &[1, 3]
        );
        assert!("".parse::<MultiplicitySet>().is_err());
        assert!("3..1".parse::<MultiplicitySet>().is_err());
    }

    #[test]
    fn big_value_fallback_matches_bitset_path() {
        // Same shape of set, one shifted beyond the bitset budget.
        let small = zset(&[1, 2, 5]);
        let small_out = signed_sumset(&small, 3).unwrap();
        let huge_base = BigInt::from(10).pow(30);
        let huge = GroupSubset::new(
            GroupSpec::Integers,
            [1i64, 2, 5]
                .iter()
                .map(|&v| GroupElement::Int(BigInt::from(v)))
                .collect(),
        )
        .unwrap();
        assert_eq!(signed_sumset(&huge, 3).unwrap(), small_out);
        // and a genuinely huge set exercises the BigInt DP
        let shifted = GroupSubset::new(
            GroupSpec::Integers,
            [1i64, 2, 5]
                .iter()
                .map(|&v| GroupElement::Int(&huge_base + BigInt::from(v)))
                .collect(),
        )
        .unwrap();
        let out = restricted_sumset(&shifted, 2).unwrap();
        let expect: Vec<BigInt> = vec![
            &huge_base * 2 + 3,
            &huge_base * 2 + 6,
            &huge_base * 2 + 7,
        ];
        assert_eq!(
            out,
            GroupSubset::new(
                GroupSpec::Integers,
                expect.into_iter().map(GroupElement::Int).collect()
            )
            .unwrap()
        );
    }
}
