//! Partitions, rational weights of `GL_n` and the `[λ+, λ−]` codec.
//!
//! A [`Partition`] is stored without trailing zeros, so `(5,2)` and
//! `(5,2,0,0)` are the same value. A [`RationalWeight`] is a weakly decreasing
//! integer tuple of fixed rank; it splits into a pair of partitions
//! `(λ+, λ−)` and is rebuilt by [`join`].
//!
//! Text codec: parts are comma separated (`"5,2"`); the empty partition is
//! written as the empty string or `"0"`. Rational weights use signed entries
//! (`"5,2,0,0,-1,-3,-4"`).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weakly decreasing sequence of nonnegative integers, trailing zeros stripped.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Build a partition, rejecting increasing sequences. Trailing zeros are dropped.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!("{parts:?} is not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Single-row partition `(k)`.
    pub fn row(k: u32) -> Self {
        if k == 0 {
            Self::empty()
        } else {
            Partition(vec![k])
        }
    }

    /// `(k, k, …, k)` with `rows` parts.
    pub fn rectangle(rows: usize, k: u32) -> Self {
        if k == 0 {
            Self::empty()
        } else {
            Partition(vec![k; rows])
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts, ℓ(·).
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// |λ|
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The `i`-th part (0-based), zero past the length.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Young-diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0) as usize;
        let cols = (0..width)
            .map(|c| self.0.iter().filter(|&&r| r as usize > c).count() as u32)
            .collect();
        Partition(cols)
    }

    /// Parts padded with zeros to length `n` (`n` must be at least the length).
    pub fn padded(&self, n: usize) -> Vec<u32> {
        let mut v = self.0.clone();
        v.resize(n.max(self.len()), 0);
        v
    }

    /// `(−λ_n, …, −λ_1)`: the highest weight of the dual representation of `GL_n`.
    pub fn dual_weight(&self, n: usize) -> Result<RationalWeight> {
        join(&Partition::empty(), self, n)
    }

    /// The partition viewed as a rank-`n` weight `(λ_1, …, λ_n)`.
    pub fn to_weight(&self, n: usize) -> Result<RationalWeight> {
        join(self, &Partition::empty(), n)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad partition part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Highest weight of a rational representation of `GL_n`: a weakly decreasing
/// integer `n`-tuple.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i32>", into = "Vec<i32>")]
pub struct RationalWeight(Vec<i32>);

impl RationalWeight {
    pub fn new(entries: Vec<i32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Invalid("rational weight of rank 0".into()));
        }
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!("{entries:?} is not weakly decreasing")));
        }
        Ok(RationalWeight(entries))
    }

    pub fn zero(n: usize) -> Self {
        RationalWeight(vec![0; n.max(1)])
    }

    pub fn entries(&self) -> &[i32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// Sum of the entries (the degree of the determinant character).
    pub fn degree(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn plus(&self) -> Partition {
        split(self).0
    }

    pub fn minus(&self) -> Partition {
        split(self).1
    }

    /// `ℓ(λ+) + ℓ(λ−)`
    pub fn signed_length(&self) -> usize {
        let (p, m) = split(self);
        p.len() + m.len()
    }

    /// Shift by `k` times the determinant.
    pub fn shifted(&self, k: i32) -> RationalWeight {
        RationalWeight(self.0.iter().map(|x| x + k).collect())
    }

    /// `(−λ_n, …, −λ_1)`
    pub fn dual(&self) -> RationalWeight {
        RationalWeight(self.0.iter().rev().map(|x| -x).collect())
    }

    pub fn is_polynomial(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    /// The weight as a partition, if it is polynomial.
    pub fn to_partition(&self) -> Option<Partition> {
        if self.is_polynomial() {
            Partition::new(self.0.iter().map(|&x| x as u32).collect()).ok()
        } else {
            None
        }
    }
}

impl fmt::Display for RationalWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(i32::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for RationalWeight {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let entries = parse_signed_list(s)?;
        RationalWeight::new(entries).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl TryFrom<Vec<i32>> for RationalWeight {
    type Error = Error;
    fn try_from(v: Vec<i32>) -> Result<Self> {
        RationalWeight::new(v)
    }
}

impl From<RationalWeight> for Vec<i32> {
    fn from(w: RationalWeight) -> Vec<i32> {
        w.0
    }
}

/// Parse `"a,b,c"` into signed integers. The empty string is rejected.
pub fn parse_signed_list(s: &str) -> Result<Vec<i32>> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty integer list".into()));
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i32>()
                .map_err(|_| Error::Parse(format!("bad integer {t:?} in {s:?}")))
        })
        .collect()
}

/// Split a weakly decreasing tuple into `(λ+, λ−)`.
pub fn split(w: &RationalWeight) -> (Partition, Partition) {
    let plus: Vec<u32> = w.0.iter().filter(|&&x| x > 0).map(|&x| x as u32).collect();
    let minus: Vec<u32> = w.0.iter().rev().filter(|&&x| x < 0).map(|&x| (-x) as u32).collect();
    (Partition(plus), Partition(minus))
}

/// `[λ+, λ−] = (λ+_1, …, λ+_a, 0, …, 0, −λ−_b, …, −λ−_1)` at rank `n`.
pub fn join(plus: &Partition, minus: &Partition, n: usize) -> Result<RationalWeight> {
    if n == 0 {
        return Err(Error::Invalid("rank must be positive".into()));
    }
    if plus.len() + minus.len() > n {
        return Err(Error::Invalid(format!(
            "[{plus}],[{minus}] does not exist at rank {n}: lengths {} + {} > {n}",
            plus.len(),
            minus.len()
        )));
    }
    let mut v = vec![0i32; n];
    for (i, &x) in plus.parts().iter().enumerate() {
        v[i] = x as i32;
    }
    for (i, &x) in minus.parts().iter().enumerate() {
        v[n - 1 - i] = -(x as i32);
    }
    Ok(RationalWeight(v))
}

/// All partitions of exactly `size` with at most `max_len` parts, each part at
/// most `max_part`, in reverse-lexicographic order.
pub fn partitions_of(size: u32, max_len: usize, max_part: u32) -> Vec<Partition> {
    fn rec(rest: u32, max_len: usize, max_part: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if cur.len() == max_len {
            return;
        }
        let slots = (max_len - cur.len()) as u64;
        for first in (1..=rest.min(max_part)).rev() {
            if (first as u64) * slots < rest as u64 {
                break;
            }
            cur.push(first);
            rec(rest - first, max_len, first, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(size, max_len, max_part, &mut Vec::new(), &mut out);
    out
}

/// Every partition with `|λ| ≤ size_bound` and `ℓ(λ) ≤ length_bound`, graded by
/// size and reverse-lexicographic within a size: `(), (1), (2), (1,1), …`.
pub fn partitions_up_to(size_bound: u32, length_bound: usize) -> impl Iterator<Item = Partition> {
    (0..=size_bound).flat_map(move |s| partitions_of(s, length_bound, u32::MAX))
}

/// Partitions contained in the `rows × cols` box, graded then revlex.
pub fn partitions_in_box(rows: usize, cols: u32) -> impl Iterator<Item = Partition> {
    (0..=rows as u32 * cols).flat_map(move |s| partitions_of(s, rows, cols))
}

/// All `μ ⊆ λ` (subdiagrams), graded then revlex.
pub fn subpartitions(lambda: &Partition) -> Vec<Partition> {
    fn rec(lambda: &[u32], i: usize, bound: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i == lambda.len() {
            out.push(Partition::new(cur.clone()).expect("decreasing by construction"));
            return;
        }
        for x in (0..=lambda[i].min(bound)).rev() {
            cur.push(x);
            rec(lambda, i + 1, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(lambda.parts(), 0, u32::MAX, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| b.cmp(a)));
    out.dedup();
    out
}

/// Dominant weights of `GL_n` (weakly decreasing tuples) with entries in `[lo, hi]`.
pub fn dominant_weights_in_range(n: usize, lo: i32, hi: i32) -> Vec<RationalWeight> {
    fn rec(n: usize, lo: i32, bound: i32, cur: &mut Vec<i32>, out: &mut Vec<RationalWeight>) {
        if cur.len() == n {
            out.push(RationalWeight(cur.clone()));
            return;
        }
        for x in (lo..=bound).rev() {
            cur.push(x);
            rec(n, lo, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 && lo <= hi {
        rec(n, lo, hi, &mut Vec::new(), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn w(v: &[i32]) -> RationalWeight {
        RationalWeight::new(v.to_vec()).unwrap()
    }

    #[test]
    fn split_examples() {
        assert_eq!(split(&w(&[5, 2, 0, 0, -1, -3, -4])), (p(&[5, 2]), p(&[4, 3, 1])));
        assert_eq!(split(&w(&[0, 0, 0])), (p(&[]), p(&[])));
        assert_eq!(split(&w(&[3, 3, -1])), (p(&[3, 3]), p(&[1])));
    }

    #[test]
    fn join_examples() {
        assert_eq!(join(&p(&[5, 2]), &p(&[4, 3, 1]), 7).unwrap(), w(&[5, 2, 0, 0, -1, -3, -4]));
        assert_eq!(join(&p(&[]), &p(&[]), 3).unwrap(), w(&[0, 0, 0]));
        assert_eq!(join(&p(&[1]), &p(&[1]), 2).unwrap(), w(&[1, -1]));
    }

    #[test]
    fn join_rejects_long_pairs() {
        assert!(matches!(join(&p(&[2, 1]), &p(&[1]), 2), Err(Error::Invalid(_))));
    }

    #[test]
    fn padding_is_ignored() {
        assert_eq!(p(&[5, 2]), p(&[5, 2, 0, 0]));
        assert_eq!(p(&[5, 2, 0]).len(), 2);
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn enumeration_examples() {
        let got: Vec<_> = partitions_up_to(2, 2).collect();
        assert_eq!(got, vec![p(&[]), p(&[1]), p(&[2]), p(&[1, 1])]);
        let got: Vec<_> = partitions_up_to(0, 5).collect();
        assert_eq!(got, vec![p(&[])]);
        let got: Vec<_> = partitions_up_to(3, 1).collect();
        assert_eq!(got, vec![p(&[]), p(&[1]), p(&[2]), p(&[3])]);
    }

    #[test]
    fn text_codec() {
        assert_eq!("5,2".parse::<Partition>().unwrap(), p(&[5, 2]));
        assert_eq!("".parse::<Partition>().unwrap(), p(&[]));
        assert_eq!("0".parse::<Partition>().unwrap(), p(&[]));
        assert_eq!(p(&[]).to_string(), "0");
        assert!("1,x".parse::<Partition>().is_err());
        assert!("1,2".parse::<Partition>().is_err());
        let wt: RationalWeight = "5,2,0,0,-1,-3,-4".parse().unwrap();
        assert_eq!(wt.to_string(), "5,2,0,0,-1,-3,-4");
        assert!("1,2".parse::<RationalWeight>().is_err());
    }

    #[test]
    fn conjugate_and_containment() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert!(p(&[3, 2]).contains(&p(&[2, 2])));
        assert!(!p(&[3, 2]).contains(&p(&[1, 1, 1])));
        assert_eq!(subpartitions(&p(&[2, 1])).len(), 5);
    }

    /// Independent count: all tuples in `[0, s]^l`, filtered.
    fn brute_count(s: u32, l: usize) -> usize {
        let mut count = 0;
        let total = (s as usize + 1).pow(l as u32);
        for code in 0..total {
            let mut c = code;
            let mut v = Vec::with_capacity(l);
            for _ in 0..l {
                v.push((c % (s as usize + 1)) as u32);
                c /= s as usize + 1;
            }
            if v.windows(2).all(|x| x[0] >= x[1]) && v.iter().sum::<u32>() <= s {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for s in 0..=8 {
            for l in 0..=6 {
                let got: Vec<_> = partitions_up_to(s, l).collect();
                let mut dedup = got.clone();
                dedup.sort();
                dedup.dedup();
                assert_eq!(dedup.len(), got.len());
                let expected = if l == 0 { 1 } else { brute_count(s, l) };
                assert_eq!(got.len(), expected, "s={s} l={l}");
            }
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn decreasing_tuple() -> impl Strategy<Value = Vec<i32>> {
            (1usize..=8).prop_flat_map(|n| proptest::collection::vec(-6i32..=6, n)).prop_map(|mut v| {
                v.sort_unstable_by(|a, b| b.cmp(a));
                v
            })
        }

        proptest! {
            #[test]
            fn split_join_round_trip(v in decreasing_tuple()) {
                let wt = RationalWeight::new(v.clone()).unwrap();
                let (plus, minus) = split(&wt);
                prop_assert_eq!(join(&plus, &minus, v.len()).unwrap(), wt);
            }
        }
    }
}
