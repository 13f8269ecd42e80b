//! Exact arithmetic for braid words and free-group words.
//!
//! Global composition convention, used everywhere in this crate: letters of
//! a word are applied left to right, so the leftmost letter acts first.
//! `compose(a, b)` is "a, then b", `permutation` multiplies transpositions
//! leftmost first, and `act_on_free` is a right action with
//! `w^(a.b) = (w^a)^b`.

mod garside;
mod syntax;

pub use garside::NormalForm;
pub use syntax::{format_free_word, format_braid_word, parse_free_word, parse_braid_word};

use crate::{Error, Result};

/// A word in the Artin generators of the braid group on `strands` strands.
///
/// Letters are signed 1-based generator indices: `k` is a positive crossing
/// of strands `k, k+1` and `-k` its inverse. Words are stored uncompressed
/// and are not freely reduced; equality of the underlying braids is decided
/// by [`NormalForm`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands < 1 {
            return Err(Error::Invalid("strand count must be positive".into()));
        }
        for &l in &letters {
            let idx = l.unsigned_abs() as usize;
            if l == 0 || idx >= strands {
                return Err(Error::IndexOutOfRange {
                    index: idx,
                    bound: strands.saturating_sub(1),
                });
            }
        }
        Ok(Self { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        Self { strands, letters: Vec::new() }
    }

    /// Single Artin generator `sigma_k` (`k` negative for the inverse).
    pub fn generator(strands: usize, k: i32) -> Result<Self> {
        Self::new(strands, vec![k])
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Sum of letter signs; a braid-group invariant (image in Z).
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| if l > 0 { 1 } else { -1 }).sum()
    }

    pub fn inverse(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k >= 0 { self.clone() } else { self.inverse() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        Self { strands: self.strands, letters }
    }

    /// Remove adjacent inverse pairs. Not a normal form, only a shortening.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Self { strands: self.strands, letters: out }
    }

    /// Underlying permutation: `pi(i)` is the end position of the strand
    /// starting at position `i` (0-based), leftmost letter applied first.
    pub fn permutation(&self) -> Permutation {
        let mut pos: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            for p in pos.iter_mut() {
                if *p == i {
                    *p += 1;
                } else if *p == i + 1 {
                    *p -= 1;
                }
            }
        }
        Permutation { map: pos }
    }

    pub fn normal_form(&self) -> NormalForm {
        NormalForm::of(self)
    }

    /// Braid-group equality, decided by Garside left-greedy normal forms.
    pub fn braid_eq(&self, other: &Self) -> bool {
        self.strands == other.strands && self.normal_form() == other.normal_form()
    }

    /// Conjugate `self` by `c` in the right-action convention: `c^-1 . self . c`.
    pub fn conjugate_by(&self, c: &Self) -> Result<Self> {
        compose(&compose(&c.inverse(), self)?, c)
    }
}

/// `a` then `b`, under the global left-to-right convention.
pub fn compose(a: &BraidWord, b: &BraidWord) -> Result<BraidWord> {
    if a.strands != b.strands {
        return Err(Error::StrandMismatch(a.strands, b.strands));
    }
    let mut letters = a.letters.clone();
    letters.extend_from_slice(&b.letters);
    Ok(BraidWord { strands: a.strands, letters })
}

/// Compose a sequence of braid words left to right.
pub fn compose_all<'a, I: IntoIterator<Item = &'a BraidWord>>(strands: usize, words: I) -> Result<BraidWord> {
    let mut acc = BraidWord::identity(strands);
    for w in words {
        acc = compose(&acc, w)?;
    }
    Ok(acc)
}

/// The positive half twist `Delta_n` as the staircase word
/// `s1 (s2 s1) (s3 s2 s1) ...`; its square generates the center.
pub fn half_twist(n: usize) -> Result<BraidWord> {
    if n < 2 {
        return Err(Error::Invalid(format!("half twist needs at least 2 strands, got {n}")));
    }
    let mut letters = Vec::with_capacity(n * (n - 1) / 2);
    for k in 1..n {
        for i in (1..=k).rev() {
            letters.push(i as i32);
        }
    }
    Ok(BraidWord { strands: n, letters })
}

/// A freely reduced word in a free group of the given rank.
///
/// Letters are signed 1-based generator indices. The canonical form is
/// freely reduced; construction reduces eagerly.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<i32>,
}

impl FreeWord {
    pub fn new(rank: usize, letters: Vec<i32>) -> Result<Self> {
        for &l in &letters {
            let idx = l.unsigned_abs() as usize;
            if l == 0 || idx > rank {
                return Err(Error::IndexOutOfRange { index: idx, bound: rank });
            }
        }
        Ok(Self { rank, letters: free_reduce(letters) })
    }

    pub fn identity(rank: usize) -> Self {
        Self { rank, letters: Vec::new() }
    }

    pub fn generator(rank: usize, k: i32) -> Result<Self> {
        Self::new(rank, vec![k])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Self {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch(self.rank, other.rank));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self { rank: self.rank, letters: free_reduce(letters) })
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k >= 0 { self.clone() } else { self.inverse() };
        let mut acc = Self::identity(self.rank);
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base).expect("same rank");
        }
        acc
    }

    /// Remove matching first/last letters; relators are stored this way.
    pub fn cyclically_reduce(&self) -> Self {
        let mut w = self.letters.clone();
        while w.len() >= 2 && w[0] == -w[w.len() - 1] {
            w.pop();
            w.remove(0);
        }
        Self { rank: self.rank, letters: w }
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| if l > 0 { 1 } else { -1 }).sum()
    }

    /// Exponent sum of a single generator (1-based).
    pub fn exponent_sum_of(&self, gen: usize) -> i64 {
        self.letters
            .iter()
            .map(|&l| {
                if l.unsigned_abs() as usize == gen {
                    if l > 0 { 1 } else { -1 }
                } else {
                    0
                }
            })
            .sum()
    }
}

fn free_reduce(letters: Vec<i32>) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(letters.len());
    for l in letters {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Right action of a braid word on a free word of the same rank.
///
/// A positive generator `sigma_j` acts on free generators by
/// `g_j -> g_{j+1}`, `g_{j+1} -> g_{j+1} g_j g_{j+1}^-1`, fixing the rest,
/// extended as a group homomorphism; the braid word acts letter by letter,
/// leftmost first, so `(w^a)^b = w^(a.b)`.
pub fn act_on_free(w: &FreeWord, b: &BraidWord) -> Result<FreeWord> {
    if w.rank != b.strands {
        return Err(Error::RankMismatch(w.rank, b.strands));
    }
    let mut cur = w.letters.clone();
    for &l in &b.letters {
        let j = l.unsigned_abs() as usize;
        let mut next: Vec<i32> = Vec::with_capacity(cur.len() * 2);
        for &g in &cur {
            let i = g.unsigned_abs() as usize;
            let positive = g > 0;
            let image: &[i32] = if l > 0 {
                if i == j {
                    &[j as i32 + 1]
                } else if i == j + 1 {
                    &[j as i32 + 1, j as i32, -(j as i32 + 1)]
                } else {
                    &[g.abs()]
                }
            } else if i == j + 1 {
                &[j as i32]
            } else if i == j {
                &[-(j as i32), j as i32 + 1, j as i32]
            } else {
                &[g.abs()]
            };
            if positive {
                for &x in image {
                    if next.last() == Some(&-x) { next.pop(); } else { next.push(x); }
                }
            } else {
                for &x in image.iter().rev() {
                    if next.last() == Some(&x) && x != 0 {
                        // pushing -x cancels a trailing x
                        next.pop();
                    } else {
                        next.push(-x);
                    }
                }
            }
        }
        cur = next;
    }
    Ok(FreeWord { rank: w.rank, letters: free_reduce(cur) })
}

/// A bijection of `{0, .., n-1}` stored as its image array.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self { map: (0..n).collect() }
    }

    pub fn from_map(map: Vec<usize>) -> Result<Self> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &v in &map {
            if v >= n || seen[v] {
                return Err(Error::Invalid("image array is not a bijection".into()));
            }
            seen[v] = true;
        }
        Ok(Self { map })
    }

    pub fn size(&self) -> usize {
        self.map.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Self) -> Self {
        Self { map: self.map.iter().map(|&v| other.map[v]).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            inv[v] = i;
        }
        Self { map: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Cycle notation on 1-based points, e.g. `(1 4)(2 3)`; `()` for the identity.
    pub fn cycle_string(&self) -> String {
        let n = self.map.len();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for i in 0..n {
            if seen[i] || self.map[i] == i {
                seen[i] = true;
                continue;
            }
            let mut cyc = vec![i];
            seen[i] = true;
            let mut j = self.map[i];
            while j != i {
                seen[j] = true;
                cyc.push(j);
                j = self.map[j];
            }
            out.push('(');
            out.push_str(
                &cyc.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(" "),
            );
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }

    /// Multiset of cycle lengths >= 2, sorted.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.map.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for i in 0..n {
            if seen[i] {
                continue;
            }
            let mut len = 0;
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                len += 1;
                j = self.map[j];
            }
            if len >= 2 {
                out.push(len);
            }
        }
        out.sort_unstable();
        out
    }
}

/// A partition of `{1, .., n}` into disjoint nonempty blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    n: usize,
    block_of: Vec<usize>,
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    /// Blocks are given with 1-based members and must cover `{1, .., n}`.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut block_of = vec![usize::MAX; n];
        let mut norm: Vec<Vec<usize>> = Vec::with_capacity(blocks.len());
        for (bi, block) in blocks.into_iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            let mut b = block;
            b.sort_unstable();
            for &x in &b {
                if x == 0 || x > n {
                    return Err(Error::InvalidPartition(format!("member {x} outside 1..{n}")));
                }
                if block_of[x - 1] != usize::MAX {
                    return Err(Error::InvalidPartition(format!("member {x} repeated")));
                }
                block_of[x - 1] = bi;
            }
            norm.push(b);
        }
        if block_of.iter().any(|&b| b == usize::MAX) {
            return Err(Error::InvalidPartition("blocks do not cover the ground set".into()));
        }
        Ok(Self { n, block_of, blocks: norm })
    }

    pub fn discrete(n: usize) -> Self {
        Self::new(n, (1..=n).map(|i| vec![i]).collect()).expect("valid")
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Block index of a 1-based member.
    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x - 1]
    }

    /// Parse `"1,2|3,4"` into a partition of `{1..n}`.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let blocks = text
            .split('|')
            .map(|b| {
                b.split(',')
                    .map(|x| {
                        x.trim()
                            .parse::<usize>()
                            .map_err(|_| Error::InvalidPartition(format!("bad member {x:?}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, blocks)
    }
}

/// Whether the underlying permutation of `b` maps each block of `a` onto itself.
pub fn is_in_mixed(b: &BraidWord, a: &Partition) -> bool {
    if b.strands() != a.ground_size() {
        return false;
    }
    let p = b.permutation();
    (1..=a.ground_size()).all(|x| a.block_of(x) == a.block_of(p.apply(x - 1) + 1))
}

/// A finite generating set of the mixed braid group `B(A)`, the preimage in
/// `B_n` of the Young subgroup preserving each block of `A` setwise.
///
/// Built as Schreier generators over a BFS coset transversal of the Young
/// subgroup in `S_n`, deduplicated by normal form.
pub fn mixed_subgroup_generators(n: usize, a: &Partition) -> Result<Vec<BraidWord>> {
    if a.ground_size() != n {
        return Err(Error::InvalidPartition(format!(
            "partition covers {} points, expected {n}",
            a.ground_size()
        )));
    }
    // Coset key of a braid word w: for each end position, the block of the
    // starting position of the strand ending there. Two words lie in the same
    // right coset of B(A) iff their keys agree.
    let key_of = |w: &BraidWord| -> Vec<usize> {
        let inv = w.permutation().inverse();
        (0..n).map(|j| a.block_of(inv.apply(j) + 1)).collect()
    };
    let id = BraidWord::identity(n);
    let mut reps: Vec<BraidWord> = vec![id.clone()];
    let mut seen = std::collections::HashMap::new();
    seen.insert(key_of(&id), 0usize);
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for t in &frontier {
            for i in 1..n {
                let u = compose(t, &BraidWord::generator(n, i as i32)?)?;
                let k = key_of(&u);
                if !seen.contains_key(&k) {
                    seen.insert(k, reps.len());
                    reps.push(u.clone());
                    next.push(u);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<BraidWord> = Vec::new();
    let mut forms: Vec<NormalForm> = Vec::new();
    for t in &reps {
        for i in 1..n {
            let u = compose(t, &BraidWord::generator(n, i as i32)?)?;
            let rep = &reps[seen[&key_of(&u)]];
            let gamma = compose(&u, &rep.inverse())?.free_reduce();
            let nf = gamma.normal_form();
            if nf.is_identity() || forms.contains(&nf) {
                continue;
            }
            forms.push(nf);
            out.push(gamma);
        }
    }
    Ok(out)
}
