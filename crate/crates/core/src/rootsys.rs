//! Root data for `sl_N` with a chosen set of noncompact simple roots.
//!
//! The noncompact simple roots sit at the block boundaries of a
//! [`BlockStructure`]. A root `ε_i − ε_j` is compact iff an even number of
//! boundaries lies between `i` and `j`, so the coordinates fall into two
//! compactness classes (even and odd blocks). The positive system is the
//! standard upper-triangular one.
//!
//! Weights are raw integer tuples in ε-coordinates ([`Weight`]); uniform
//! shifts are not quotiented out. `ρ_c` and `ρ_nc` are carried doubled
//! ([`HalfWeight`]) so no arithmetic ever leaves the integers.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{parse_signed_list, Partition, RationalWeight};

/// Largest compact Weyl group enumerated by default (10!).
pub const DEFAULT_WEYL_CAP: u64 = 3_628_800;

/// A weight in standard ε-coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i32>);

impl Weight {
    pub fn zero(n: usize) -> Self {
        Weight(vec![0; n])
    }

    pub fn coords(&self) -> &[i32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn scaled(&self, k: i32) -> Weight {
        Weight(self.0.iter().map(|x| x * k).collect())
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// `Σ |x_i|`
    pub fn l1_norm(&self) -> u32 {
        self.0.iter().map(|x| x.unsigned_abs()).sum()
    }
}

impl From<Vec<i32>> for Weight {
    fn from(v: Vec<i32>) -> Self {
        Weight(v)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(i32::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Weight {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_signed_list(s).map(Weight)
    }
}

/// A weight with half-integer coordinates, stored as twice its value.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HalfWeight {
    pub doubled: Vec<i32>,
}

impl HalfWeight {
    pub fn from_weight(w: &Weight) -> Self {
        HalfWeight { doubled: w.0.iter().map(|x| 2 * x).collect() }
    }

    pub fn add(&self, other: &HalfWeight) -> HalfWeight {
        HalfWeight { doubled: self.doubled.iter().zip(&other.doubled).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &HalfWeight) -> HalfWeight {
        HalfWeight { doubled: self.doubled.iter().zip(&other.doubled).map(|(a, b)| a - b).collect() }
    }

    /// The integral weight, if every coordinate is an integer.
    pub fn to_weight(&self) -> Option<Weight> {
        if self.doubled.iter().all(|x| x % 2 == 0) {
            Some(Weight(self.doubled.iter().map(|x| x / 2).collect()))
        } else {
            None
        }
    }
}

impl fmt::Display for HalfWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self
            .doubled
            .iter()
            .map(|&x| if x % 2 == 0 { (x / 2).to_string() } else { format!("{x}/2") })
            .collect();
        write!(f, "({})", s.join(","))
    }
}

/// The root `ε_i − ε_j` (0-based indices, `i ≠ j`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    pub i: usize,
    pub j: usize,
}

impl Root {
    pub fn new(i: usize, j: usize) -> Self {
        assert_ne!(i, j, "ε_i − ε_i is not a root");
        Root { i, j }
    }

    pub fn is_positive(&self) -> bool {
        self.i < self.j
    }

    pub fn to_weight(&self, n: usize) -> Weight {
        let mut v = vec![0; n];
        v[self.i] += 1;
        v[self.j] -= 1;
        Weight(v)
    }

    /// Number of simple roots in the root (negative for negative roots).
    pub fn height(&self) -> i64 {
        self.j as i64 - self.i as i64
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}-e{}", self.i + 1, self.j + 1)
    }
}

/// Which positive roots a half-sum runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootKind {
    Compact,
    Noncompact,
}

/// Dominance levels: blocks (`m′`), compactness classes (`k′`), everything (`g′`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Level {
    M,
    K,
    G,
}

impl FromStr for Level {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "m" | "m'" | "m-prime" => Ok(Level::M),
            "k" | "k'" | "k-prime" => Ok(Level::K),
            "g" | "g'" | "g-prime" => Ok(Level::G),
            other => Err(Error::Parse(format!("unknown dominance level {other:?}"))),
        }
    }
}

/// Block sizes `(b_1, …, b_k)` of `sl_N`, `N = Σ b_i`; the noncompact simple
/// roots are `α_{b_1}, α_{b_1+b_2}, …`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlockStructure {
    blocks: Vec<usize>,
    block_of: Vec<usize>,
}

impl BlockStructure {
    pub fn new(blocks: Vec<usize>) -> Result<Self> {
        if blocks.is_empty() || blocks.contains(&0) {
            return Err(Error::Invalid(format!("block sizes must be positive, got {blocks:?}")));
        }
        let n: usize = blocks.iter().sum();
        if n < 2 {
            return Err(Error::Invalid("sl_N needs N ≥ 2".into()));
        }
        let block_of = blocks.iter().enumerate().flat_map(|(b, &size)| std::iter::repeat_n(b, size)).collect();
        Ok(BlockStructure { blocks, block_of })
    }

    /// Shorthand for the three-block structure `(p, n, q)`.
    pub fn pnq(p: usize, n: usize, q: usize) -> Result<Self> {
        Self::new(vec![p, n, q])
    }

    pub fn rank(&self) -> usize {
        self.block_of.len()
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    /// `(p, n, q)` for a three-block structure.
    pub fn as_pnq(&self) -> Result<(usize, usize, usize)> {
        match self.blocks[..] {
            [p, n, q] => Ok((p, n, q)),
            _ => Err(Error::Invalid(format!("expected blocks (p,n,q), got {:?}", self.blocks))),
        }
    }

    /// 1-based positions of the noncompact simple roots.
    pub fn noncompact_simple_positions(&self) -> Vec<usize> {
        self.blocks[..self.blocks.len() - 1]
            .iter()
            .scan(0, |acc, &b| {
                *acc += b;
                Some(*acc)
            })
            .collect()
    }

    pub fn block_of(&self, coord: usize) -> usize {
        self.block_of[coord]
    }

    /// Coordinate range of block `b`.
    pub fn block_range(&self, b: usize) -> std::ops::Range<usize> {
        let start: usize = self.blocks[..b].iter().sum();
        start..start + self.blocks[b]
    }

    /// Compactness class (parity of the block index) of a coordinate.
    pub fn class_of(&self, coord: usize) -> usize {
        self.block_of[coord] % 2
    }

    /// Coordinates of each compactness class, in increasing order.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(), Vec::new()];
        for c in 0..self.rank() {
            classes[self.class_of(c)].push(c);
        }
        classes.retain(|c| !c.is_empty());
        classes
    }

    pub fn is_compact(&self, root: Root) -> bool {
        self.class_of(root.i) == self.class_of(root.j)
    }

    /// `(Φ⁺_c, Φ⁺_nc)`, each sorted lexicographically by `(i, j)`.
    pub fn positive_roots(&self) -> (Vec<Root>, Vec<Root>) {
        let n = self.rank();
        let mut compact = Vec::new();
        let mut noncompact = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let r = Root::new(i, j);
                if self.is_compact(r) {
                    compact.push(r);
                } else {
                    noncompact.push(r);
                }
            }
        }
        (compact, noncompact)
    }

    pub fn compact_positive_roots(&self) -> Vec<Root> {
        self.positive_roots().0
    }

    pub fn noncompact_positive_roots(&self) -> Vec<Root> {
        self.positive_roots().1
    }

    /// `(Φ_{𝔪′}, Φ̄_{𝔪′})`: compact positive roots inside one block, and the
    /// remaining ones joining the first and last block. Three blocks only.
    pub fn phi_m_split(&self) -> Result<(Vec<Root>, Vec<Root>)> {
        self.as_pnq()?;
        let (inside, across) =
            self.compact_positive_roots().into_iter().partition(|r| self.block_of(r.i) == self.block_of(r.j));
        Ok((inside, across))
    }

    /// Half the sum of the compact or noncompact positive roots.
    pub fn rho(&self, which: RootKind) -> HalfWeight {
        let n = self.rank();
        let (c, nc) = self.positive_roots();
        let roots = match which {
            RootKind::Compact => c,
            RootKind::Noncompact => nc,
        };
        let mut doubled = vec![0; n];
        for r in roots {
            doubled[r.i] += 1;
            doubled[r.j] -= 1;
        }
        HalfWeight { doubled }
    }

    /// `|W_𝔨| = Π (class size)!`, saturating.
    pub fn compact_weyl_order(&self) -> u64 {
        self.classes()
            .iter()
            .map(|c| (1..=c.len() as u64).fold(1u64, |a, b| a.saturating_mul(b)))
            .fold(1u64, |a, b| a.saturating_mul(b))
    }

    /// Lazily enumerate `W_𝔨`: permutations preserving each compactness class.
    pub fn compact_weyl_group(&self) -> CompactWeylIter {
        CompactWeylIter::new(self)
    }

    /// As [`compact_weyl_group`](Self::compact_weyl_group), refusing groups larger than `cap`.
    pub fn compact_weyl_group_capped(&self, cap: u64) -> Result<CompactWeylIter> {
        let order = self.compact_weyl_order();
        if order > cap {
            return Err(Error::CapExceeded(format!("compact Weyl group of order {order} exceeds cap {cap}")));
        }
        Ok(self.compact_weyl_group())
    }

    /// `⟦λ, μ, ν⟧ = (−μ_p, …, −μ_1, λ_1, …, λ_n, ν_1, …, ν_q)`.
    pub fn triple_encode(&self, lambda: &RationalWeight, mu: &Partition, nu: &Partition) -> Result<Weight> {
        let (p, n, q) = self.as_pnq()?;
        if lambda.rank() != n {
            return Err(Error::Invalid(format!("lambda has rank {}, expected {n}", lambda.rank())));
        }
        if mu.len() > p || nu.len() > q {
            return Err(Error::Invalid(format!("ℓ(μ)={} > p={p} or ℓ(ν)={} > q={q}", mu.len(), nu.len())));
        }
        let mut v = Vec::with_capacity(p + n + q);
        v.extend(mu.padded(p).iter().rev().map(|&x| -(x as i32)));
        v.extend_from_slice(lambda.entries());
        v.extend(nu.padded(q).iter().map(|&x| x as i32));
        Ok(Weight(v))
    }

    /// Raw inverse of `⟦·,·,·⟧`: `(μ*, λ, ν)` as plain integer tuples, with
    /// `μ* = (−μ_p, …, −μ_1)` undone to `(μ_1, …, μ_p)`.
    pub fn triple_split(&self, w: &Weight) -> Result<(Vec<i32>, Vec<i32>, Vec<i32>)> {
        let (p, n, q) = self.as_pnq()?;
        if w.rank() != p + n + q {
            return Err(Error::Invalid(format!("weight has rank {}, expected {}", w.rank(), p + n + q)));
        }
        let mu = w.0[..p].iter().rev().map(|x| -x).collect();
        let lambda = w.0[p..p + n].to_vec();
        let nu = w.0[p + n..].to_vec();
        Ok((mu, lambda, nu))
    }

    /// Decode `⟦λ, μ, ν⟧`; fails unless `λ` is weakly decreasing and `μ`, `ν`
    /// are partitions.
    pub fn triple_decode(&self, w: &Weight) -> Result<(RationalWeight, Partition, Partition)> {
        let (mu, lambda, nu) = self.triple_split(w)?;
        let lambda = RationalWeight::new(lambda)?;
        let to_partition = |v: Vec<i32>| -> Result<Partition> {
            if v.iter().any(|&x| x < 0) {
                return Err(Error::Invalid(format!("{v:?} has negative entries")));
            }
            Partition::new(v.into_iter().map(|x| x as u32).collect())
        };
        Ok((lambda, to_partition(mu)?, to_partition(nu)?))
    }

    /// Dominance at the given level; `strict` asks for strict inequalities.
    pub fn is_dominant(&self, w: &Weight, level: Level, strict: bool) -> bool {
        assert_eq!(w.rank(), self.rank(), "weight rank mismatch");
        let ok = |a: i32, b: i32| if strict { a > b } else { a >= b };
        match level {
            Level::G => w.0.windows(2).all(|x| ok(x[0], x[1])),
            Level::M => (0..self.blocks.len())
                .all(|b| w.0[self.block_range(b)].windows(2).all(|x| ok(x[0], x[1]))),
            Level::K => self
                .classes()
                .iter()
                .all(|class| class.windows(2).all(|x| ok(w.0[x[0]], w.0[x[1]]))),
        }
    }

    /// `𝔤`-regular: `(ξ, α) ≠ 0` for every root, i.e. pairwise distinct coordinates.
    pub fn is_regular(w: &HalfWeight) -> bool {
        let mut v = w.doubled.clone();
        v.sort_unstable();
        v.windows(2).all(|x| x[0] != x[1])
    }
}

impl FromStr for BlockStructure {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let blocks = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad block size {t:?} in {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        BlockStructure::new(blocks).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Display for BlockStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.blocks.iter().map(usize::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

/// An element of `W_𝔨` acting on coordinates: `(w·v)[perm[i]] = v[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompactWeylElement {
    pub perm: Vec<usize>,
    pub length: usize,
}

impl CompactWeylElement {
    pub fn act(&self, v: &[i32]) -> Vec<i32> {
        let mut out = vec![0; v.len()];
        for (i, &x) in v.iter().enumerate() {
            out[self.perm[i]] = x;
        }
        out
    }

    pub fn sign(&self) -> i64 {
        if self.length.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// Odometer over per-class permutations, each class advanced in lexicographic order.
pub struct CompactWeylIter {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    states: Vec<Vec<usize>>,
    done: bool,
}

impl CompactWeylIter {
    fn new(bs: &BlockStructure) -> Self {
        let classes = bs.classes();
        let states = classes.iter().map(|c| (0..c.len()).collect()).collect();
        let class_of = (0..bs.rank()).map(|c| bs.class_of(c)).collect();
        CompactWeylIter { classes, class_of, states, done: false }
    }

    fn current(&self) -> CompactWeylElement {
        let n = self.class_of.len();
        let mut perm = vec![0; n];
        for (class, state) in self.classes.iter().zip(&self.states) {
            for (k, &src) in class.iter().enumerate() {
                perm[src] = class[state[k]];
            }
        }
        let mut length = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.class_of[i] == self.class_of[j] && perm[i] > perm[j] {
                    length += 1;
                }
            }
        }
        CompactWeylElement { perm, length }
    }
}

pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl Iterator for CompactWeylIter {
    type Item = CompactWeylElement;

    fn next(&mut self) -> Option<CompactWeylElement> {
        if self.done {
            return None;
        }
        let item = self.current();
        let mut advanced = false;
        for state in self.states.iter_mut() {
            if next_permutation(state) {
                advanced = true;
                break;
            }
            state.sort_unstable();
        }
        self.done = !advanced;
        Some(item)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn bs(v: &[usize]) -> BlockStructure {
        BlockStructure::new(v.to_vec()).unwrap()
    }

    fn set(v: &[(usize, usize)]) -> BTreeSet<Root> {
        v.iter().map(|&(i, j)| Root::new(i - 1, j - 1)).collect()
    }

    #[test]
    fn positive_root_examples() {
        let (c, nc) = bs(&[1, 1, 1]).positive_roots();
        assert_eq!(c.into_iter().collect::<BTreeSet<_>>(), set(&[(1, 3)]));
        assert_eq!(nc.into_iter().collect::<BTreeSet<_>>(), set(&[(1, 2), (2, 3)]));

        let (c, nc) = bs(&[2]).positive_roots();
        assert_eq!(c.into_iter().collect::<BTreeSet<_>>(), set(&[(1, 2)]));
        assert!(nc.is_empty());

        let (c, nc) = bs(&[2, 1]).positive_roots();
        assert_eq!(c.into_iter().collect::<BTreeSet<_>>(), set(&[(1, 2)]));
        assert_eq!(nc.into_iter().collect::<BTreeSet<_>>(), set(&[(1, 3), (2, 3)]));
    }

    #[test]
    fn three_block_noncompact_shape() {
        for (p, n, q) in [(1, 1, 1), (2, 3, 1), (3, 1, 3), (2, 2, 2)] {
            let nc: BTreeSet<Root> = bs(&[p, n, q]).noncompact_positive_roots().into_iter().collect();
            let mut expected = BTreeSet::new();
            for i in 0..p {
                for j in 0..n {
                    expected.insert(Root::new(i, p + j));
                }
            }
            for i in 0..n {
                for j in 0..q {
                    expected.insert(Root::new(p + i, p + n + j));
                }
            }
            assert_eq!(nc, expected);
        }
    }

    #[test]
    fn phi_m_examples() {
        let (m, mbar) = bs(&[1, 1, 1]).phi_m_split().unwrap();
        assert!(m.is_empty());
        assert_eq!(mbar, vec![Root::new(0, 2)]);

        let (m, mbar) = bs(&[3, 1, 3]).phi_m_split().unwrap();
        assert_eq!((m.len(), mbar.len()), (6, 9));

        let (m, mbar) = bs(&[1, 2, 1]).phi_m_split().unwrap();
        assert_eq!(m, vec![Root::new(1, 2)]);
        assert_eq!(mbar, vec![Root::new(0, 3)]);

        assert!(bs(&[2, 2]).phi_m_split().is_err());
    }

    #[test]
    fn rho_examples() {
        let b = bs(&[1, 1, 1]);
        assert_eq!(b.rho(RootKind::Compact).doubled, vec![1, 0, -1]);
        assert_eq!(b.rho(RootKind::Noncompact).doubled, vec![1, 0, -1]);
        assert_eq!(bs(&[1, 1]).rho(RootKind::Compact).doubled, vec![0, 0]);
        assert_eq!(b.rho(RootKind::Compact).to_string(), "(1/2,0,-1/2)");
    }

    #[test]
    fn weyl_group_examples() {
        let w: Vec<_> = bs(&[1, 1, 1]).compact_weyl_group().collect();
        assert_eq!(w.len(), 2);
        assert_eq!(w[0], CompactWeylElement { perm: vec![0, 1, 2], length: 0 });
        assert_eq!(w[1], CompactWeylElement { perm: vec![2, 1, 0], length: 1 });

        let w: Vec<_> = bs(&[1, 1]).compact_weyl_group().collect();
        assert_eq!(w, vec![CompactWeylElement { perm: vec![0, 1], length: 0 }]);

        let w: Vec<_> = bs(&[2, 1]).compact_weyl_group().collect();
        assert_eq!(w.len(), 2);
        assert_eq!(w[1].perm, vec![1, 0, 2]);
        assert_eq!(w[1].length, 1);
    }

    #[test]
    fn weyl_group_order_and_cap() {
        let b = bs(&[2, 3, 1]);
        assert_eq!(b.compact_weyl_group().count() as u64, b.compact_weyl_order());
        assert_eq!(b.compact_weyl_order(), 6 * 6);
        assert!(matches!(b.compact_weyl_group_capped(10), Err(Error::CapExceeded(_))));
    }

    #[test]
    fn weyl_length_counts_sent_to_negative() {
        for blocks in [vec![2, 2], vec![1, 2, 3], vec![3, 1, 2], vec![2, 2, 2]] {
            let b = bs(&blocks);
            let n = b.rank();
            let compact = b.compact_positive_roots();
            for w in b.compact_weyl_group() {
                let sent_negative = compact
                    .iter()
                    .filter(|r| {
                        let image = w.act(&r.to_weight(n).0);
                        let hi = image.iter().position(|&x| x == 1).unwrap();
                        let lo = image.iter().position(|&x| x == -1).unwrap();
                        hi > lo
                    })
                    .count();
                assert_eq!(w.length, sent_negative);
                assert!(w.perm.iter().enumerate().all(|(i, &j)| b.class_of(i) == b.class_of(j)));
            }
        }
    }

    #[test]
    fn root_counts() {
        for n in 2..=10 {
            for cut in 0..(1usize << (n - 1)) {
                let mut blocks = Vec::new();
                let mut size = 1;
                for k in 0..n - 1 {
                    if cut >> k & 1 == 1 {
                        blocks.push(size);
                        size = 1;
                    } else {
                        size += 1;
                    }
                }
                blocks.push(size);
                let b = bs(&blocks);
                let (c, nc) = b.positive_roots();
                assert_eq!(c.len() + nc.len(), n * (n - 1) / 2);
                let total = b.rho(RootKind::Compact).add(&b.rho(RootKind::Noncompact));
                let all: Vec<i32> = (0..n as i32).map(|i| n as i32 - 1 - 2 * i).collect();
                assert_eq!(total.doubled, all);
            }
        }
    }

    #[test]
    fn phi_m_union_is_compact() {
        for p in 1..=4 {
            for n in 1..=4 {
                for q in 1..=4 {
                    let b = bs(&[p, n, q]);
                    let (m, mbar) = b.phi_m_split().unwrap();
                    let union: BTreeSet<Root> = m.iter().chain(&mbar).copied().collect();
                    assert_eq!(union.len(), m.len() + mbar.len());
                    assert_eq!(union, b.compact_positive_roots().into_iter().collect());
                }
            }
        }
    }

    #[test]
    fn triple_examples() {
        let b = bs(&[1, 1, 1]);
        let w = |v: &[i32]| RationalWeight::new(v.to_vec()).unwrap();
        let p = |v: &[u32]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(b.triple_encode(&w(&[1]), &p(&[1]), &p(&[])).unwrap().0, vec![-1, 1, 0]);
        assert_eq!(b.triple_encode(&w(&[-1]), &p(&[]), &p(&[1])).unwrap().0, vec![0, -1, 1]);
        let b313 = bs(&[3, 1, 3]);
        assert_eq!(b313.triple_encode(&w(&[0]), &p(&[]), &p(&[])).unwrap().0, vec![0; 7]);
        assert!(b.triple_encode(&w(&[0]), &p(&[1, 1]), &p(&[])).is_err());
        let enc = b313.triple_encode(&w(&[0]), &p(&[2, 1]), &p(&[1, 1, 1])).unwrap();
        assert_eq!(enc.0, vec![0, -1, -2, 0, 1, 1, 1]);
        assert_eq!(b313.triple_decode(&enc).unwrap(), (w(&[0]), p(&[2, 1]), p(&[1, 1, 1])));
    }

    #[test]
    fn dominance_examples() {
        assert!(bs(&[1, 1, 1]).is_dominant(&Weight(vec![-1, 1, 0]), Level::M, false));
        assert!(bs(&[3, 1, 3]).is_dominant(&Weight(vec![0, -1, -2, 0, 1, 1, 1]), Level::M, false));
        assert!(!bs(&[2, 1, 2]).is_dominant(&Weight(vec![-1, -2, 5, 3, 0]), Level::K, false));
        assert!(bs(&[2, 1, 2]).is_dominant(&Weight(vec![3, 2, 5, 1, 0]), Level::K, false));
        assert!(!bs(&[2, 1, 2]).is_dominant(&Weight(vec![3, 2, 5, 1, 0]), Level::G, false));
        assert!(!bs(&[2, 1]).is_dominant(&Weight(vec![1, 1, 0]), Level::M, true));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn triple_round_trip(
                p in 1usize..4, n in 1usize..4, q in 1usize..4,
                lam in proptest::collection::vec(-5i32..5, 3),
                mu in proptest::collection::vec(0u32..5, 3),
                nu in proptest::collection::vec(0u32..5, 3),
            ) {
                let b = bs(&[p, n, q]);
                let mut lam: Vec<i32> = lam[..n].to_vec();
                lam.sort_unstable_by(|a, b| b.cmp(a));
                let mut mu: Vec<u32> = mu[..p].to_vec();
                mu.sort_unstable_by(|a, b| b.cmp(a));
                let mut nu: Vec<u32> = nu[..q].to_vec();
                nu.sort_unstable_by(|a, b| b.cmp(a));
                let lam = RationalWeight::new(lam).unwrap();
                let mu = Partition::new(mu).unwrap();
                let nu = Partition::new(nu).unwrap();
                let enc = b.triple_encode(&lam, &mu, &nu).unwrap();
                prop_assert!(b.is_dominant(&enc, Level::M, false));
                prop_assert_eq!(b.triple_decode(&enc).unwrap(), (lam, mu, nu));
            }
        }
    }
}
