//! Ambient groups and their elements.
//!
//! Three ambient groups are supported: the integers Z, finite products
//! Z_{n1} x ... x Z_{nr}, and additive models of prime-characteristic fields
//! (F_p^r, additively identical to r copies of Z_p). Characteristic-zero
//! fields are modeled by Z. Elements are stored in reduced canonical form,
//! so structural equality coincides with group equality.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Order of the smallest nontrivial subgroup, or infinity when none exists.
///
/// `Infinity` compares greater than every finite value, so `min` behaves as
/// expected: `min(Infinity, x) = x`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum ExtendedCount {
    Finite(u64),
    Infinity,
}

impl ExtendedCount {
    pub fn is_finite(&self) -> bool {
        matches!(self, ExtendedCount::Finite(_))
    }

    pub fn finite(&self) -> Option<u64> {
        match self {
            ExtendedCount::Finite(v) => Some(*v),
            ExtendedCount::Infinity => None,
        }
    }

    /// min(self, x) as a plain integer.
    pub fn min_with(&self, x: u64) -> u64 {
        match self {
            ExtendedCount::Finite(v) => (*v).min(x),
            ExtendedCount::Infinity => x,
        }
    }
}

impl fmt::Display for ExtendedCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedCount::Finite(v) => write!(f, "{v}"),
            ExtendedCount::Infinity => write!(f, "inf"),
        }
    }
}

impl FromStr for ExtendedCount {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") || t == "∞" {
            return Ok(ExtendedCount::Infinity);
        }
        t.parse::<u64>()
            .map(ExtendedCount::Finite)
            .map_err(|_| Error::Parse {
                pos: 0,
                msg: format!("expected a nonnegative integer or 'inf', got {t:?}"),
            })
    }
}

impl Serialize for ExtendedCount {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ExtendedCount::Finite(v) => ser.serialize_u64(*v),
            ExtendedCount::Infinity => ser.serialize_str("inf"),
        }
    }
}

/// Specification of the ambient group.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub enum GroupSpec {
    /// The additive group of integers. Elements are arbitrary-precision.
    Integers,
    /// Z_{n1} x ... x Z_{nr} with every modulus >= 2.
    FiniteProduct { moduli: Vec<u64> },
    /// Additive group of a field of characteristic `char_p` and extension
    /// degree `ext_degree`, i.e. Z_p^r. Multiplicative structure is never
    /// used: every bound in scope depends on the field only through its
    /// additive group and p(F).
    FieldModel { char_p: u64, ext_degree: u32 },
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn smallest_prime_factor(n: u64) -> u64 {
    debug_assert!(n >= 2);
    if n.is_multiple_of(2) {
        return 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return d;
        }
        d += 2;
    }
    n
}

impl GroupSpec {
    pub fn integers() -> Self {
        GroupSpec::Integers
    }

    pub fn cyclic(n: u64) -> Result<Self> {
        GroupSpec::product(vec![n])
    }

    pub fn product(moduli: Vec<u64>) -> Result<Self> {
        if moduli.is_empty() {
            return Err(Error::InvalidGroup("product needs at least one factor".into()));
        }
        if let Some(&m) = moduli.iter().find(|&&m| m < 2) {
            return Err(Error::InvalidGroup(format!("modulus {m} < 2")));
        }
        Ok(GroupSpec::FiniteProduct { moduli })
    }

    pub fn field(char_p: u64, ext_degree: u32) -> Result<Self> {
        if !is_prime(char_p) {
            return Err(Error::InvalidGroup(format!("{char_p} is not prime")));
        }
        if ext_degree < 1 {
            return Err(Error::InvalidGroup("extension degree must be >= 1".into()));
        }
        Ok(GroupSpec::FieldModel { char_p, ext_degree })
    }

    pub fn is_finite(&self) -> bool {
        !matches!(self, GroupSpec::Integers)
    }

    /// Moduli of the underlying product decomposition (finite groups only).
    pub fn moduli(&self) -> Option<Vec<u64>> {
        match self {
            GroupSpec::Integers => None,
            GroupSpec::FiniteProduct { moduli } => Some(moduli.clone()),
            GroupSpec::FieldModel { char_p, ext_degree } => {
                Some(vec![*char_p; *ext_degree as usize])
            }
        }
    }

    pub fn order(&self) -> Option<u128> {
        self.moduli()
            .map(|ms| ms.iter().fold(1u128, |acc, &m| acc * m as u128))
    }

    /// Order of the smallest nontrivial subgroup: the smallest prime dividing
    /// the order for finite groups, infinity for Z.
    pub fn p_of_group(&self) -> ExtendedCount {
        match self {
            GroupSpec::Integers => ExtendedCount::Infinity,
            GroupSpec::FieldModel { char_p, .. } => ExtendedCount::Finite(*char_p),
            GroupSpec::FiniteProduct { moduli } => ExtendedCount::Finite(
                moduli.iter().map(|&m| smallest_prime_factor(m)).min().unwrap(),
            ),
        }
    }

    pub fn zero(&self) -> GroupElement {
        match self.moduli() {
            None => GroupElement::Int(BigInt::zero()),
            Some(ms) => GroupElement::Coords(vec![0; ms.len()]),
        }
    }

    /// Build an element from an integer, reducing modulo the group structure.
    /// For products of rank > 1 the integer is reduced into every coordinate,
    /// which matches the diagonal reading of an integer literal; tuple
    /// literals are the usual way to address rank > 1 groups.
    pub fn element_from_bigint(&self, v: &BigInt) -> GroupElement {
        match self.moduli() {
            None => GroupElement::Int(v.clone()),
            Some(ms) => GroupElement::Coords(
                ms.iter().map(|&m| reduce_bigint(v, m)).collect(),
            ),
        }
    }

    pub fn element_from_i64(&self, v: i64) -> GroupElement {
        self.element_from_bigint(&BigInt::from(v))
    }

    pub fn element_from_coords(&self, coords: &[i64]) -> Result<GroupElement> {
        let ms = self.moduli().ok_or(Error::GroupMismatch(
            "coordinate tuples only address finite groups".into(),
        ))?;
        if coords.len() != ms.len() {
            return Err(Error::GroupMismatch(format!(
                "expected {} coordinates, got {}",
                ms.len(),
                coords.len()
            )));
        }
        Ok(GroupElement::Coords(
            coords
                .iter()
                .zip(&ms)
                .map(|(&c, &m)| (c.rem_euclid(m as i64)) as u64)
                .collect(),
        ))
    }

    pub fn contains(&self, a: &GroupElement) -> bool {
        match (self, a) {
            (GroupSpec::Integers, GroupElement::Int(_)) => true,
            (_, GroupElement::Coords(cs)) => match self.moduli() {
                Some(ms) => cs.len() == ms.len() && cs.iter().zip(&ms).all(|(&c, &m)| c < m),
                None => false,
            },
            _ => false,
        }
    }

    fn check_member(&self, a: &GroupElement) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::GroupMismatch(format!("{a} is not in {self}")))
        }
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check_member(a)?;
        self.check_member(b)?;
        Ok(match (a, b) {
            (GroupElement::Int(x), GroupElement::Int(y)) => GroupElement::Int(x + y),
            (GroupElement::Coords(x), GroupElement::Coords(y)) => {
                let ms = self.moduli().unwrap();
                GroupElement::Coords(
                    x.iter()
                        .zip(y)
                        .zip(&ms)
                        .map(|((&xc, &yc), &m)| (xc + yc) % m)
                        .collect(),
                )
            }
            _ => unreachable!("membership checked above"),
        })
    }

    pub fn neg(&self, a: &GroupElement) -> Result<GroupElement> {
        self.check_member(a)?;
        Ok(match a {
            GroupElement::Int(x) => GroupElement::Int(-x),
            GroupElement::Coords(x) => {
                let ms = self.moduli().unwrap();
                GroupElement::Coords(
                    x.iter()
                        .zip(&ms)
                        .map(|(&xc, &m)| if xc == 0 { 0 } else { m - xc })
                        .collect(),
                )
            }
        })
    }

    /// n-fold multiple of `a` (n may be negative).
    pub fn scalar_mul(&self, n: i64, a: &GroupElement) -> Result<GroupElement> {
        self.check_member(a)?;
        Ok(match a {
            GroupElement::Int(x) => GroupElement::Int(x * BigInt::from(n)),
            GroupElement::Coords(x) => {
                let ms = self.moduli().unwrap();
                GroupElement::Coords(
                    x.iter()
                        .zip(&ms)
                        .map(|(&xc, &m)| {
                            let prod = (n as i128) * (xc as i128);
                            prod.rem_euclid(m as i128) as u64
                        })
                        .collect(),
                )
            }
        })
    }

    /// All elements in canonical (lexicographic coordinate) order.
    pub fn enumerate_elements(&self) -> Result<Vec<GroupElement>> {
        let ms = self.moduli().ok_or(Error::InfiniteGroup)?;
        let order = self.order().unwrap();
        if order > (1 << 22) {
            return Err(Error::InvalidGroup(format!(
                "group of order {order} is beyond the enumeration envelope"
            )));
        }
        let mut out = Vec::with_capacity(order as usize);
        let mut coords = vec![0u64; ms.len()];
        loop {
            out.push(GroupElement::Coords(coords.clone()));
            // lexicographic increment
            let mut i = ms.len();
            loop {
                if i == 0 {
                    return Ok(out);
                }
                i -= 1;
                coords[i] += 1;
                if coords[i] < ms[i] {
                    break;
                }
                coords[i] = 0;
            }
        }
    }

    /// Closure of `S ∪ {0}` under addition (and hence negation, the group
    /// being finite). Over Z only S ⊆ {0} has a finite closure.
    pub fn subgroup_generated(&self, s: &GroupSubset) -> Result<GroupSubset> {
        if s.group() != self {
            return Err(Error::GroupMismatch("subset belongs to another group".into()));
        }
        if !self.is_finite() {
            if s.iter().all(|e| *e == self.zero()) {
                return GroupSubset::new(self.clone(), vec![self.zero()]);
            }
            return Err(Error::InfiniteGroup);
        }
        let mut known: std::collections::BTreeSet<GroupElement> =
            std::collections::BTreeSet::new();
        known.insert(self.zero());
        let mut frontier: Vec<GroupElement> = vec![self.zero()];
        let gens: Vec<GroupElement> = s.iter().cloned().collect();
        while let Some(x) = frontier.pop() {
            for g in &gens {
                let y = self.add(&x, g)?;
                if known.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        GroupSubset::new(self.clone(), known.into_iter().collect())
    }

    pub fn parse_element(&self, s: &str) -> Result<GroupElement> {
        let t = s.trim();
        if t.starts_with('(') {
            if !t.ends_with(')') {
                return Err(Error::Parse {
                    pos: t.len(),
                    msg: "unclosed tuple".into(),
                });
            }
            let inner = &t[1..t.len() - 1];
            let coords: Vec<i64> = inner
                .split(',')
                .map(|p| {
                    p.trim().parse::<i64>().map_err(|_| Error::Parse {
                        pos: 0,
                        msg: format!("bad coordinate {p:?}"),
                    })
                })
                .collect::<Result<_>>()?;
            self.element_from_coords(&coords)
        } else {
            let v = BigInt::from_str(t).map_err(|_| Error::Parse {
                pos: 0,
                msg: format!("bad element literal {t:?}"),
            })?;
            if let Some(ms) = self.moduli() {
                if ms.len() != 1 {
                    return Err(Error::Parse {
                        pos: 0,
                        msg: format!("group of rank {} needs a tuple literal", ms.len()),
                    });
                }
            }
            Ok(self.element_from_bigint(&v))
        }
    }

    /// Parse a comma-separated set literal; tuples keep their inner commas.
    pub fn parse_subset(&self, s: &str) -> Result<GroupSubset> {
        let mut t = s.trim();
        if t.starts_with('{') && t.ends_with('}') {
            t = t[1..t.len() - 1].trim();
        }
        if t.is_empty() {
            return Err(Error::Parse {
                pos: 0,
                msg: "empty set literal".into(),
            });
        }
        let mut parts = Vec::new();
        let mut depth = 0usize;
        let mut start = 0usize;
        for (i, c) in t.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => {
                    depth = depth.checked_sub(1).ok_or(Error::Parse {
                        pos: i,
                        msg: "unbalanced ')'".into(),
                    })?
                }
                ',' if depth == 0 => {
                    parts.push(&t[start..i]);
                    start = i + 1;
                }
                _ => {}
            }
        }
        if depth != 0 {
            return Err(Error::Parse {
                pos: t.len(),
                msg: "unbalanced '('".into(),
            });
        }
        parts.push(&t[start..]);
        let elems = parts
            .iter()
            .map(|p| self.parse_element(p))
            .collect::<Result<Vec<_>>>()?;
        GroupSubset::new(self.clone(), elems)
    }
}

fn reduce_bigint(v: &BigInt, m: u64) -> u64 {
    let m_big = BigInt::from(m);
    let mut r = v % &m_big;
    if r.is_negative() {
        r += &m_big;
    }
    r.to_u64().unwrap()
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Integers => write!(f, "Z"),
            GroupSpec::FiniteProduct { moduli } => {
                let parts: Vec<String> = moduli.iter().map(|m| format!("Z{m}")).collect();
                write!(f, "{}", parts.join("x"))
            }
            GroupSpec::FieldModel { char_p, ext_degree } => {
                write!(f, "F{char_p}^{ext_degree}")
            }
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    /// Grammar: `Z` | `Z<n>` | `Z<n1>xZ<n2>x...` | `F<p>^<r>` (also `F<p>`).
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() {
            return Err(Error::Parse {
                pos: 0,
                msg: "empty group spec".into(),
            });
        }
        if t == "Z" {
            return Ok(GroupSpec::Integers);
        }
        if let Some(rest) = t.strip_prefix('F') {
            let (p_str, r_str) = match rest.split_once('^') {
                Some((p, r)) => (p, r),
                None => (rest, "1"),
            };
            let p = p_str.parse::<u64>().map_err(|_| Error::Parse {
                pos: 1,
                msg: format!("bad characteristic {p_str:?}"),
            })?;
            let r = r_str.parse::<u32>().map_err(|_| Error::Parse {
                pos: 1 + p_str.len() + 1,
                msg: format!("bad extension degree {r_str:?}"),
            })?;
            return GroupSpec::field(p, r);
        }
        if t.starts_with('Z') {
            let mut moduli = Vec::new();
            for (i, part) in t.split('x').enumerate() {
                let n_str = part.strip_prefix('Z').ok_or(Error::Parse {
                    pos: i,
                    msg: format!("factor {part:?} must look like Z<n>"),
                })?;
                let n = n_str.parse::<u64>().map_err(|_| Error::Parse {
                    pos: i,
                    msg: format!("bad modulus {n_str:?}"),
                })?;
                moduli.push(n);
            }
            return GroupSpec::product(moduli);
        }
        Err(Error::Parse {
            pos: 0,
            msg: format!("unrecognized group spec {t:?}"),
        })
    }
}

/// A group element in reduced canonical form.
///
/// `Int` lives in Z; `Coords` lives in a finite product, every coordinate
/// already reduced into `[0, modulus)`. Structural equality is group equality.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub enum GroupElement {
    Int(BigInt),
    Coords(Vec<u64>),
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (GroupElement::Int(a), GroupElement::Int(b)) => a.cmp(b),
            (GroupElement::Coords(a), GroupElement::Coords(b)) => a.cmp(b),
            (GroupElement::Int(_), GroupElement::Coords(_)) => Ordering::Less,
            (GroupElement::Coords(_), GroupElement::Int(_)) => Ordering::Greater,
        }
    }
}

impl GroupElement {
    pub fn as_bigint(&self) -> Option<&BigInt> {
        match self {
            GroupElement::Int(v) => Some(v),
            GroupElement::Coords(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            GroupElement::Int(v) => v.is_zero(),
            GroupElement::Coords(cs) => cs.iter().all(|&c| c == 0),
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Int(v) => write!(f, "{v}"),
            GroupElement::Coords(cs) if cs.len() == 1 => write!(f, "{}", cs[0]),
            GroupElement::Coords(cs) => {
                let parts: Vec<String> = cs.iter().map(|c| c.to_string()).collect();
                write!(f, "({})", parts.join(","))
            }
        }
    }
}

/// A finite subset of a group: sorted, duplicate-free, every element reduced.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct GroupSubset {
    group: GroupSpec,
    elements: Vec<GroupElement>,
}

impl GroupSubset {
    pub fn new(group: GroupSpec, mut elements: Vec<GroupElement>) -> Result<Self> {
        for e in &elements {
            if !group.contains(e) {
                return Err(Error::GroupMismatch(format!("{e} is not in {group}")));
            }
        }
        elements.sort();
        elements.dedup();
        Ok(GroupSubset { group, elements })
    }

    pub fn empty(group: GroupSpec) -> Self {
        GroupSubset {
            group,
            elements: Vec::new(),
        }
    }

    pub fn from_i64s(group: &GroupSpec, vals: &[i64]) -> Self {
        let elements = vals.iter().map(|&v| group.element_from_i64(v)).collect();
        GroupSubset::new(group.clone(), elements).expect("elements built from the group")
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn iter(&self) -> std::slice::Iter<'_, GroupElement> {
        self.elements.iter()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, e: &GroupElement) -> bool {
        self.elements.binary_search(e).is_ok()
    }

    pub fn negated(&self) -> GroupSubset {
        let elements = self
            .elements
            .iter()
            .map(|e| self.group.neg(e).expect("member"))
            .collect();
        GroupSubset::new(self.group.clone(), elements).expect("negation stays in the group")
    }

    pub fn union(&self, other: &GroupSubset) -> Result<GroupSubset> {
        if self.group != other.group {
            return Err(Error::GroupMismatch("union across groups".into()));
        }
        let mut elements = self.elements.clone();
        elements.extend(other.elements.iter().cloned());
        GroupSubset::new(self.group.clone(), elements)
    }

    pub fn intersect(&self, other: &GroupSubset) -> Result<GroupSubset> {
        if self.group != other.group {
            return Err(Error::GroupMismatch("intersection across groups".into()));
        }
        let elements = self
            .elements
            .iter()
            .filter(|e| other.contains(e))
            .cloned()
            .collect();
        GroupSubset::new(self.group.clone(), elements)
    }

    pub fn difference(&self, other: &GroupSubset) -> Result<GroupSubset> {
        if self.group != other.group {
            return Err(Error::GroupMismatch("difference across groups".into()));
        }
        let elements = self
            .elements
            .iter()
            .filter(|e| !other.contains(e))
            .cloned()
            .collect();
        GroupSubset::new(self.group.clone(), elements)
    }

    pub fn with_zero(&self) -> GroupSubset {
        let mut elements = self.elements.clone();
        elements.push(self.group.zero());
        GroupSubset::new(self.group.clone(), elements).expect("zero is a member")
    }

    pub fn translated(&self, g: &GroupElement) -> Result<GroupSubset> {
        let elements = self
            .elements
            .iter()
            .map(|e| self.group.add(e, g))
            .collect::<Result<Vec<_>>>()?;
        GroupSubset::new(self.group.clone(), elements)
    }

    /// d * A = {d·a : a ∈ A}.
    pub fn scaled(&self, d: i64) -> GroupSubset {
        let elements = self
            .elements
            .iter()
            .map(|e| self.group.scalar_mul(d, e).expect("member"))
            .collect();
        GroupSubset::new(self.group.clone(), elements).expect("multiples stay in the group")
    }

    /// Comma-separated canonical element literals; round-trips through
    /// `GroupSpec::parse_subset`.
    pub fn canonical_literal(&self) -> String {
        let parts: Vec<String> = self.elements.iter().map(|e| e.to_string()).collect();
        parts.join(",")
    }
}

impl fmt::Display for GroupSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.canonical_literal())
    }
}

/// Dense tables for a finite group: element list in canonical order plus
/// addition and negation tables indexed by element rank. This is the
/// computational backbone of the sumset engines and the exhaustive search.
pub struct FiniteGroup {
    spec: GroupSpec,
    moduli: Vec<u64>,
    strides: Vec<u64>,
    order: usize,
    add: Vec<u32>,
    neg: Vec<u32>,
}

/// Largest order for which dense tables are built (the quadratic addition
/// table dominates memory).
pub const MAX_TABLE_ORDER: usize = 1 << 12;

impl FiniteGroup {
    pub fn new(spec: &GroupSpec) -> Result<Self> {
        let moduli = spec.moduli().ok_or(Error::InfiniteGroup)?;
        let order_big = spec.order().unwrap();
        if order_big > MAX_TABLE_ORDER as u128 {
            return Err(Error::InvalidGroup(format!(
                "group order {order_big} exceeds the dense-table envelope ({MAX_TABLE_ORDER})"
            )));
        }
        let order = order_big as usize;
        let rank = moduli.len();
        // index <-> coords is the mixed-radix correspondence; canonical
        // (lexicographic) element order equals increasing index order.
        let mut strides = vec![1u64; rank];
        for i in (0..rank.saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * moduli[i + 1];
        }
        let coords_of = |idx: usize| -> Vec<u64> {
            let mut rem = idx as u64;
            let mut cs = vec![0u64; rank];
            for i in 0..rank {
                cs[i] = rem / strides[i];
                rem %= strides[i];
            }
            cs
        };
        let index_of = |cs: &[u64]| -> usize {
            cs.iter()
                .zip(&strides)
                .map(|(&c, &s)| (c * s) as usize)
                .sum()
        };
        let mut add = vec![0u32; order * order];
        let mut neg = vec![0u32; order];
        let all: Vec<Vec<u64>> = (0..order).map(coords_of).collect();
        for (i, a) in all.iter().enumerate() {
            let n: Vec<u64> = a
                .iter()
                .zip(&moduli)
                .map(|(&c, &m)| if c == 0 { 0 } else { m - c })
                .collect();
            neg[i] = index_of(&n) as u32;
            for (j, b) in all.iter().enumerate() {
                let s: Vec<u64> = a
                    .iter()
                    .zip(b)
                    .zip(&moduli)
                    .map(|((&x, &y), &m)| (x + y) % m)
                    .collect();
                add[i * order + j] = index_of(&s) as u32;
            }
        }
        Ok(FiniteGroup {
            spec: spec.clone(),
            moduli,
            strides,
            order,
            add,
            neg,
        })
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_cyclic_presentation(&self) -> bool {
        self.moduli.len() == 1
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    pub fn element(&self, idx: usize) -> GroupElement {
        debug_assert!(idx < self.order);
        let mut rem = idx as u64;
        let cs = self
            .strides
            .iter()
            .map(|&s| {
                let c = rem / s;
                rem %= s;
                c
            })
            .collect();
        GroupElement::Coords(cs)
    }

    pub fn index_of(&self, e: &GroupElement) -> Result<usize> {
        match e {
            GroupElement::Coords(cs) if cs.len() == self.moduli.len() => {
                let mut idx = 0usize;
                for ((&c, &m), &s) in cs.iter().zip(&self.moduli).zip(&self.strides) {
                    if c >= m {
                        return Err(Error::GroupMismatch(format!("{e} is not reduced")));
                    }
                    idx += (c * s) as usize;
                }
                Ok(idx)
            }
            _ => Err(Error::GroupMismatch(format!(
                "{e} does not address {}",
                self.spec
            ))),
        }
    }

    pub fn indices_of(&self, s: &GroupSubset) -> Result<Vec<usize>> {
        s.iter().map(|e| self.index_of(e)).collect()
    }

    pub fn subset_from_indices(&self, idxs: impl IntoIterator<Item = usize>) -> GroupSubset {
        let elements = idxs.into_iter().map(|i| self.element(i)).collect();
        GroupSubset::new(self.spec.clone(), elements).expect("indices address the group")
    }

    /// Order of the element with the given index.
    pub fn element_order(&self, idx: usize) -> usize {
        let mut t = 1usize;
        let mut acc = idx;
        while acc != 0 {
            acc = self.add(acc, idx);
            t += 1;
        }
        t
    }

    /// First element (in canonical order) of the requested order, if any.
    pub fn first_element_of_order(&self, target: usize) -> Option<usize> {
        (0..self.order).find(|&i| self.element_order(i) == target)
    }

    /// Units of Z_n; empty for non-cyclic presentations.
    pub fn units(&self) -> Vec<u64> {
        if !self.is_cyclic_presentation() {
            return Vec::new();
        }
        let n = self.moduli[0];
        (1..n).filter(|&u| num_integer::gcd(u, n) == 1).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64) -> GroupSpec {
        GroupSpec::cyclic(n).unwrap()
    }

    #[test]
    fn extended_count_order_and_parsing() {
        use ExtendedCount::*;
        assert!(Infinity > Finite(u64::MAX));
        assert_eq!(Infinity.min(Finite(3)), Finite(3));
        assert_eq!(Infinity.min_with(9), 9);
        assert_eq!(Finite(4).min_with(9), 4);
        assert_eq!("inf".parse::<ExtendedCount>().unwrap(), Infinity);
        assert_eq!("∞".parse::<ExtendedCount>().unwrap(), Infinity);
        assert_eq!("17".parse::<ExtendedCount>().unwrap(), Finite(17));
        assert!("-1".parse::<ExtendedCount>().is_err());
        assert_eq!(Infinity.to_string(), "inf");
    }

    #[test]
    fn p_of_group_examples() {
        assert_eq!(z(12).p_of_group(), ExtendedCount::Finite(2));
        assert_eq!(GroupSpec::Integers.p_of_group(), ExtendedCount::Infinity);
        assert_eq!(
            GroupSpec::product(vec![7, 49]).unwrap().p_of_group(),
            ExtendedCount::Finite(7)
        );
        assert_eq!(
            GroupSpec::field(5, 2).unwrap().p_of_group(),
            ExtendedCount::Finite(5)
        );
    }

    #[test]
    fn add_examples() {
        let g = z(5);
        let s = g.add(&g.element_from_i64(3), &g.element_from_i64(4)).unwrap();
        assert_eq!(s, g.element_from_i64(2));

        let zz = GroupSpec::Integers;
        let s = zz
            .add(&zz.element_from_i64(3), &zz.element_from_i64(-4))
            .unwrap();
        assert_eq!(s, zz.element_from_i64(-1));

        let g = GroupSpec::product(vec![2, 3]).unwrap();
        let e = g.element_from_coords(&[1, 2]).unwrap();
        assert_eq!(g.add(&e, &e).unwrap(), g.element_from_coords(&[0, 1]).unwrap());
    }

    #[test]
    fn neg_and_scalar_mul_examples() {
        let g = z(5);
        assert_eq!(g.neg(&g.element_from_i64(2)).unwrap(), g.element_from_i64(3));

        let zz = GroupSpec::Integers;
        assert_eq!(
            zz.scalar_mul(3, &zz.element_from_i64(2)).unwrap(),
            zz.element_from_i64(6)
        );

        let g6 = z(6);
        assert_eq!(
            g6.scalar_mul(-2, &g6.element_from_i64(5)).unwrap(),
            g6.element_from_i64(2)
        );
    }

    #[test]
    fn element_group_mismatch() {
        let g5 = z(5);
        let g6 = z(6);
        let e6 = g6.element_from_i64(5);
        assert!(g5.add(&g5.element_from_i64(1), &e6).is_err());
    }

    #[test]
    fn subgroup_generated_examples() {
        let g = z(6);
        let s = GroupSubset::from_i64s(&g, &[2]);
        let h = g.subgroup_generated(&s).unwrap();
        assert_eq!(h, GroupSubset::from_i64s(&g, &[0, 2, 4]));

        let s = GroupSubset::empty(g.clone());
        let h = g.subgroup_generated(&s).unwrap();
        assert_eq!(h, GroupSubset::from_i64s(&g, &[0]));

        let g22 = GroupSpec::product(vec![2, 2]).unwrap();
        let s = GroupSubset::new(
            g22.clone(),
            vec![
                g22.element_from_coords(&[1, 0]).unwrap(),
                g22.element_from_coords(&[0, 1]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(g22.subgroup_generated(&s).unwrap().len(), 4);

        let zz = GroupSpec::Integers;
        let s = GroupSubset::from_i64s(&zz, &[1]);
        assert!(zz.subgroup_generated(&s).is_err());
        let s0 = GroupSubset::from_i64s(&zz, &[0]);
        assert_eq!(zz.subgroup_generated(&s0).unwrap().len(), 1);
    }

    #[test]
    fn enumerate_examples() {
        let g = z(3);
        let es = g.enumerate_elements().unwrap();
        assert_eq!(es, vec![
            g.element_from_i64(0),
            g.element_from_i64(1),
            g.element_from_i64(2)
        ]);

        let g22 = GroupSpec::product(vec![2, 2]).unwrap();
        let es = g22.enumerate_elements().unwrap();
        let lits: Vec<String> = es.iter().map(|e| e.to_string()).collect();
        assert_eq!(lits, vec!["(0,0)", "(0,1)", "(1,0)", "(1,1)"]);

        assert!(GroupSpec::cyclic(1).is_err());
        assert!(GroupSpec::Integers.enumerate_elements().is_err());
    }

    #[test]
    fn invalid_specs() {
        assert!(GroupSpec::product(vec![2, 1]).is_err());
        assert!(GroupSpec::field(6, 1).is_err());
        assert!(GroupSpec::field(7, 0).is_err());
    }

    #[test]
    fn parse_round_trip() {
        for s in ["Z", "Z17", "Z2xZ4", "F5^2", "F7^1"] {
            let g: GroupSpec = s.parse().unwrap();
            let back: GroupSpec = g.to_string().parse().unwrap();
            assert_eq!(g, back);
        }
        assert_eq!("F7".parse::<GroupSpec>().unwrap(), GroupSpec::field(7, 1).unwrap());
        assert!("Z1".parse::<GroupSpec>().is_err());
        assert!("Q".parse::<GroupSpec>().is_err());
        assert!("F8".parse::<GroupSpec>().is_err());
    }

    #[test]
    fn parse_subset_literals() {
        let g = z(17);
        let a = g.parse_subset("1,2,3,4,5").unwrap();
        assert_eq!(a.len(), 5);
        assert_eq!(a.canonical_literal(), "1,2,3,4,5");

        let zz = GroupSpec::Integers;
        let a = zz.parse_subset("{-3, 1, 2}").unwrap();
        assert_eq!(a.canonical_literal(), "-3,1,2");

        let g = GroupSpec::product(vec![2, 3]).unwrap();
        let a = g.parse_subset("(1,2),(0,1)").unwrap();
        assert_eq!(a.canonical_literal(), "(0,1),(1,2)");
        let back = g.parse_subset(&a.canonical_literal()).unwrap();
        assert_eq!(a, back);

        assert!(g.parse_subset("(1,2),(0").is_err());
        assert!(zz.parse_subset("").is_err());
    }

    #[test]
    fn reduction_of_literals() {
        let g = z(17);
        assert_eq!(g.parse_element("-1").unwrap(), g.element_from_i64(16));
        assert_eq!(g.parse_element("20").unwrap(), g.element_from_i64(3));
    }

    #[test]
    fn finite_group_tables() {
        let g = GroupSpec::product(vec![2, 3]).unwrap();
        let fg = FiniteGroup::new(&g).unwrap();
        assert_eq!(fg.order(), 6);
        for i in 0..6 {
            assert_eq!(fg.add(i, fg.neg(i)), 0);
            let e = fg.element(i);
            assert_eq!(fg.index_of(&e).unwrap(), i);
        }
        // (1,2) + (1,2) = (0,1)
        let i = fg
            .index_of(&g.element_from_coords(&[1, 2]).unwrap())
            .unwrap();
        assert_eq!(
            fg.element(fg.add(i, i)),
            g.element_from_coords(&[0, 1]).unwrap()
        );
    }

    #[test]
    fn element_orders_and_units() {
        let fg = FiniteGroup::new(&z(6)).unwrap();
        assert_eq!(fg.element_order(0), 1);
        assert_eq!(fg.element_order(3), 2);
        assert_eq!(fg.element_order(2), 3);
        assert_eq!(fg.first_element_of_order(2), Some(3));
        assert_eq!(fg.units(), vec![1, 5]);
        let fg22 = FiniteGroup::new(&GroupSpec::product(vec![2, 2]).unwrap()).unwrap();
        assert!(fg22.units().is_empty());
    }

    #[test]
    fn subset_ops() {
        let zz = GroupSpec::Integers;
        let a = GroupSubset::from_i64s(&zz, &[1, 2]);
        assert_eq!(a.negated(), GroupSubset::from_i64s(&zz, &[-2, -1]));
        assert_eq!(
            a.union(&a.negated()).unwrap(),
            GroupSubset::from_i64s(&zz, &[-2, -1, 1, 2])
        );
        assert!(a.intersect(&a.negated()).unwrap().is_empty());
        assert_eq!(a.scaled(3), GroupSubset::from_i64s(&zz, &[3, 6]));
        assert_eq!(a.with_zero().len(), 3);
    }
}
