//! Irreducible crystallographic root systems in simple-root coordinates.
//!
//! Roots are integer vectors over the simple roots `S`. Cocharacters are
//! rational vectors over the fundamental coweights, so that the pairing of the
//! `i`-th simple root with a cocharacter is its `i`-th coordinate. Simple nodes
//! follow Bourbaki numbering; node `i` (0-based) is the simple root
//! `alpha_{i+1}` and node `rank` is the affine node `alpha_0 = -theta`.
//!
//! The Cartan matrix is stored as `a[i][j] = <alpha_i^vee, alpha_j>`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Mul, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// Cartan-Killing type of an irreducible root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        // Node sets are 16-bit masks over rank + 1 extended nodes.
        if !ok || rank > 15 {
            return Err(Error::InadmissibleType {
                family: family.letter(),
                rank,
            });
        }
        Ok(CartanType { family, rank })
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Every irreducible type up to the given rank, without the coincidences
    /// `D3 = A3` (C2 is kept alongside B2 since both labelings are in use).
    pub fn all_up_to_rank(max_rank: usize) -> Vec<CartanType> {
        let mut out = Vec::new();
        let mut push = |f, r| {
            if let Ok(t) = CartanType::new(f, r) {
                out.push(t);
            }
        };
        for r in 1..=max_rank {
            push(Family::A, r);
        }
        for r in 2..=max_rank {
            push(Family::B, r);
        }
        for r in 2..=max_rank {
            push(Family::C, r);
        }
        for r in 4..=max_rank {
            push(Family::D, r);
        }
        for r in 6..=max_rank.min(8) {
            push(Family::E, r);
        }
        if max_rank >= 4 {
            push(Family::F, 4);
        }
        if max_rank >= 2 {
            push(Family::G, 2);
        }
        out
    }

    /// Cartan matrix in Bourbaki numbering.
    pub fn cartan_matrix(self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.family {
            Family::A | Family::B | Family::C | Family::F | Family::G => {
                for i in 0..n - 1 {
                    link(i, i + 1);
                }
            }
            Family::D => {
                for i in 0..n - 2 {
                    link(i, i + 1);
                }
                link(n - 3, n - 1);
            }
            Family::E => {
                link(0, 2);
                link(1, 3);
                for i in 2..n - 1 {
                    link(i, i + 1);
                }
            }
        }
        match self.family {
            Family::B => a[n - 1][n - 2] = -2,
            Family::C => a[n - 2][n - 1] = -2,
            Family::F => a[2][1] = -2,
            Family::G => a[0][1] = -3,
            _ => {}
        }
        a
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::UnparseableType(s.to_string()))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::UnparseableType(s.to_string()))?;
        CartanType::new(family, rank)
    }
}

/// Coefficients of a root over the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVec(Vec<i64>);

impl RootVec {
    pub fn new(coords: Vec<i64>) -> Self {
        RootVec(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn neg(&self) -> RootVec {
        RootVec(self.0.iter().map(|c| -c).collect())
    }

    pub fn simple(rank: usize, i: usize) -> RootVec {
        let mut v = vec![0; rank];
        v[i] = 1;
        RootVec(v)
    }
}

/// Rational cocharacter in fundamental-coweight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CocharVec(Vec<Rational64>);

impl CocharVec {
    pub fn new(coords: Vec<Rational64>) -> Self {
        CocharVec(coords)
    }

    pub fn zero(rank: usize) -> Self {
        CocharVec(vec![Rational64::zero(); rank])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        CocharVec(coords.iter().map(|&c| Rational64::from_integer(c)).collect())
    }

    pub fn coords(&self) -> &[Rational64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|c| !c.is_negative())
    }

    /// Order of the image in `V/Y`, where `Y` is the coweight lattice.
    pub fn torus_order(&self) -> i64 {
        self.0.iter().fold(1, |acc, c| acc.lcm(c.denom()))
    }

    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.0
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }
}

impl fmt::Display for CocharVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Subset of the extended node set `S ∪ {alpha_0}` as a bit mask.
///
/// Bit `i < rank` is the simple node `alpha_{i+1}`; bit `rank` is `alpha_0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct NodeSet(u16);

impl NodeSet {
    pub const EMPTY: NodeSet = NodeSet(0);

    pub fn from_bits(bits: u16) -> Self {
        NodeSet(bits)
    }

    pub fn bits(self) -> u16 {
        self.0
    }

    pub fn from_nodes(nodes: impl IntoIterator<Item = usize>) -> Self {
        NodeSet(nodes.into_iter().fold(0u16, |m, i| m | (1 << i)))
    }

    /// All simple nodes `S` of a rank-`rank` system.
    pub fn simple(rank: usize) -> Self {
        NodeSet(((1u32 << rank) - 1) as u16)
    }

    /// The whole extended node set.
    pub fn extended(rank: usize) -> Self {
        NodeSet(((1u32 << (rank + 1)) - 1) as u16)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1 << i);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..16).filter(move |&i| self.contains(i))
    }

    pub fn is_subset(self, other: NodeSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Node names like `{a0, a2, a3}` for a system of the given rank.
    pub fn display(self, rank: usize) -> String {
        let names: Vec<String> = self.iter().map(|i| node_name(rank, i)).collect();
        format!("{{{}}}", names.join(", "))
    }
}

pub fn node_name(rank: usize, node: usize) -> String {
    if node == rank {
        "a0".to_string()
    } else {
        format!("a{}", node + 1)
    }
}

/// A word in the simple reflections, applied left to right.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeylWord {
    pub word: Vec<usize>,
}

impl WeylWord {
    pub fn apply_cochar(&self, rs: &RootSystem, lam: &CocharVec) -> CocharVec {
        let mut v = lam.0.clone();
        for &i in &self.word {
            reflect_coweight(&rs.cartan, &mut v, i);
        }
        CocharVec(v)
    }

    pub fn apply_root(&self, rs: &RootSystem, root: usize) -> usize {
        self.word.iter().fold(root, |r, &i| rs.reflections[i][r])
    }

    pub fn inverse(&self) -> WeylWord {
        WeylWord {
            word: self.word.iter().rev().copied().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }
}

fn reflect_coweight<T>(cartan: &[Vec<i64>], v: &mut [T], i: usize)
where
    T: Copy + Sub<Output = T> + Mul<Output = T> + From<i64>,
{
    let vi = v[i];
    for (j, x) in v.iter_mut().enumerate() {
        let a = cartan[i][j];
        if a != 0 {
            *x = *x - vi * T::from(a);
        }
    }
}

/// Reflects `v` into the dominant chamber, always at the smallest negative
/// coordinate. Returns the applied reflections in order.
pub(crate) fn dominate<T>(cartan: &[Vec<i64>], v: &mut [T]) -> Vec<usize>
where
    T: Copy + PartialOrd + Zero + Sub<Output = T> + Mul<Output = T> + From<i64>,
{
    let mut word = Vec::new();
    while let Some(i) = v.iter().position(|x| *x < T::zero()) {
        reflect_coweight(cartan, v, i);
        word.push(i);
    }
    word
}

/// Fixed-capacity set of root indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RootSet([u64; 8]);

impl RootSet {
    pub const CAPACITY: usize = 512;

    pub fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + b)
            })
        })
    }

    /// Image under a permutation of root indices.
    pub fn permute(&self, perm: &[usize]) -> RootSet {
        let mut out = RootSet::default();
        for i in self.iter() {
            out.insert(perm[i]);
        }
        out
    }
}

impl FromIterator<usize> for RootSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = RootSet::default();
        for i in iter {
            s.insert(i);
        }
        s
    }
}

/// An irreducible root system with its Weyl group action on root indices.
#[derive(Debug, Clone)]
pub struct RootSystem {
    ctype: CartanType,
    cartan: Vec<Vec<i64>>,
    /// Squared root lengths of the simple roots, up to a common scale.
    lengths: Vec<i64>,
    /// Positive roots sorted by (height, coordinates), then their negatives.
    roots: Vec<RootVec>,
    index: HashMap<RootVec, usize>,
    /// `coroots[r][k] = <alpha_k, r^vee>`: coroot of root `r` in coweight coordinates.
    coroots: Vec<Vec<i64>>,
    reflections: Vec<Vec<usize>>,
    highest: usize,
}

pub fn build_root_system(ctype: CartanType) -> RootSystem {
    RootSystem::from_cartan(ctype, ctype.cartan_matrix())
        .expect("Bourbaki Cartan matrices are valid")
}

impl RootSystem {
    pub fn new(ctype: CartanType) -> Self {
        build_root_system(ctype)
    }

    /// Builds the root system of an arbitrary (connected, finite type) Cartan
    /// matrix; `ctype` records its isomorphism type.
    pub fn from_cartan(ctype: CartanType, cartan: Vec<Vec<i64>>) -> Result<Self> {
        let n = cartan.len();
        if n != ctype.rank() || cartan.iter().any(|row| row.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: ctype.rank(),
                got: n,
            });
        }
        for i in 0..n {
            if cartan[i][i] != 2 {
                return Err(Error::Invariant("Cartan diagonal must be 2".into()));
            }
            for j in 0..n {
                if i != j && (cartan[i][j] > 0 || (cartan[i][j] == 0) != (cartan[j][i] == 0)) {
                    return Err(Error::Invariant(format!(
                        "Cartan entries ({i},{j}) are not a valid pair"
                    )));
                }
            }
        }
        let lengths = symmetrizer(&cartan)?;
        let positive = positive_roots(&cartan);
        let npos = positive.len();
        let mut roots = positive.clone();
        roots.extend(positive.iter().map(RootVec::neg));
        if roots.len() > RootSet::CAPACITY {
            return Err(Error::Invariant("too many roots".into()));
        }
        let index: HashMap<RootVec, usize> =
            roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();

        let norm = |r: &RootVec| -> i64 {
            // (r, r) with (alpha_i, alpha_j) = lengths[i] * a_ij / 2.
            let c = r.coords();
            let mut s = 0;
            for i in 0..n {
                for j in 0..n {
                    s += c[i] * c[j] * lengths[i] * cartan[i][j];
                }
            }
            s / 2
        };
        let coroots: Vec<Vec<i64>> = roots
            .iter()
            .map(|r| {
                let rr = norm(r);
                let c = r.coords();
                (0..n)
                    .map(|k| {
                        // 2 (alpha_k, r) / (r, r)
                        let num: i64 = (0..n).map(|j| c[j] * lengths[k] * cartan[k][j]).sum();
                        debug_assert_eq!(num % rr, 0);
                        num / rr
                    })
                    .collect()
            })
            .collect();

        let mut reflections = vec![vec![0usize; roots.len()]; n];
        for (i, perm) in reflections.iter_mut().enumerate() {
            for (r, root) in roots.iter().enumerate() {
                let c = root.coords();
                let p: i64 = (0..n).map(|j| c[j] * cartan[i][j]).sum();
                let mut image = c.to_vec();
                image[i] -= p;
                perm[r] = *index
                    .get(&RootVec(image))
                    .ok_or_else(|| Error::Invariant("root set not reflection-closed".into()))?;
            }
        }
        let highest = (0..npos)
            .max_by_key(|&r| roots[r].height())
            .expect("nonempty");
        Ok(RootSystem {
            ctype,
            cartan,
            lengths,
            roots,
            index,
            coroots,
            reflections,
            highest,
        })
    }

    pub fn ctype(&self) -> CartanType {
        self.ctype
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn roots(&self) -> &[RootVec] {
        &self.roots
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn positive_roots(&self) -> &[RootVec] {
        &self.roots[..self.num_positive()]
    }

    pub fn root(&self, i: usize) -> &RootVec {
        &self.roots[i]
    }

    pub fn root_index(&self, r: &RootVec) -> Option<usize> {
        self.index.get(r).copied()
    }

    /// Index of the negative of root `i`.
    pub fn negate(&self, i: usize) -> usize {
        let np = self.num_positive();
        if i < np {
            i + np
        } else {
            i - np
        }
    }

    pub fn simple_root_index(&self, i: usize) -> usize {
        self.index[&RootVec::simple(self.rank(), i)]
    }

    pub fn highest_root(&self) -> &RootVec {
        &self.roots[self.highest]
    }

    pub fn highest_root_index(&self) -> usize {
        self.highest
    }

    /// Coefficients `a_beta` of the highest root.
    pub fn marks(&self) -> &[i64] {
        self.roots[self.highest].coords()
    }

    pub fn squared_lengths(&self) -> &[i64] {
        &self.lengths
    }

    /// Coroot of root `i` in fundamental-coweight coordinates.
    pub fn coroot(&self, i: usize) -> &[i64] {
        &self.coroots[i]
    }

    /// `<root_a, root_b^vee>` for two root indices.
    pub fn root_pairing(&self, a: usize, b: usize) -> i64 {
        self.roots[a]
            .coords()
            .iter()
            .zip(&self.coroots[b])
            .map(|(x, y)| x * y)
            .sum()
    }

    /// Permutation of root indices induced by the simple reflection `i`.
    pub fn reflection(&self, i: usize) -> &[usize] {
        &self.reflections[i]
    }

    /// Squared length of root `i` relative to the simple-root scale.
    pub fn root_length(&self, i: usize) -> i64 {
        let c = self.roots[i].coords();
        let n = self.rank();
        let mut s = 0;
        for a in 0..n {
            for b in 0..n {
                s += c[a] * c[b] * self.lengths[a] * self.cartan[a][b];
            }
        }
        s / 2
    }

    /// Primes dividing some mark.
    pub fn bad_primes(&self) -> Vec<u64> {
        let mut out: Vec<u64> = Vec::new();
        for &m in self.marks() {
            let mut m = m as u64;
            let mut q = 2;
            while m > 1 {
                if m % q == 0 {
                    if !out.contains(&q) {
                        out.push(q);
                    }
                    m /= q;
                } else {
                    q += 1;
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub(crate) fn dominate_ints(&self, v: &mut [i64]) {
        dominate(&self.cartan, v);
    }
}

/// Positive integer `d_i` proportional to `(alpha_i, alpha_i)` with
/// `d_i a_ij = d_j a_ji`.
fn symmetrizer(cartan: &[Vec<i64>]) -> Result<Vec<i64>> {
    let n = cartan.len();
    let mut d: Vec<Option<Rational64>> = vec![None; n];
    d[0] = Some(Rational64::one());
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        let di = d[i].expect("visited");
        for j in 0..n {
            if i != j && cartan[i][j] != 0 {
                let dj = di * Rational64::new(cartan[i][j], cartan[j][i]);
                match d[j] {
                    None => {
                        d[j] = Some(dj);
                        stack.push(j);
                    }
                    Some(old) if old != dj => {
                        return Err(Error::Invariant("Cartan matrix not symmetrizable".into()))
                    }
                    _ => {}
                }
            }
        }
    }
    let d: Vec<Rational64> = d
        .into_iter()
        .map(|x| x.ok_or_else(|| Error::Invariant("Cartan matrix not connected".into())))
        .collect::<Result<_>>()?;
    let den = d.iter().fold(1i64, |acc, x| acc.lcm(x.denom()));
    let ints: Vec<i64> = d.iter().map(|x| (x * den).to_integer()).collect();
    let g = ints.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    Ok(ints.into_iter().map(|x| x / g).collect())
}

/// Positive roots by the root-string algorithm, layer by layer in height.
fn positive_roots(cartan: &[Vec<i64>]) -> Vec<RootVec> {
    use std::collections::HashSet;
    let n = cartan.len();
    let mut all: HashSet<Vec<i64>> = HashSet::new();
    let mut layer: Vec<Vec<i64>> = (0..n).map(|i| RootVec::simple(n, i).0).collect();
    let mut out = Vec::new();
    while !layer.is_empty() {
        for r in &layer {
            all.insert(r.clone());
        }
        let mut next: Vec<Vec<i64>> = Vec::new();
        for r in &layer {
            for i in 0..n {
                let pair: i64 = (0..n).map(|j| r[j] * cartan[i][j]).sum();
                // p = length of the alpha_i-string below r.
                let mut p = 0;
                let mut down = r.clone();
                loop {
                    down[i] -= 1;
                    if all.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pair > 0 {
                    let mut up = r.clone();
                    up[i] += 1;
                    if !next.contains(&up) {
                        next.push(up);
                    }
                }
            }
        }
        out.append(&mut layer);
        layer = next;
    }
    let mut roots: Vec<RootVec> = out.into_iter().map(RootVec).collect();
    roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
    roots
}

pub fn is_good_prime(rs: &RootSystem, p: u64) -> Result<bool> {
    if p == 0 {
        return Ok(true);
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(rs.marks().iter().all(|&m| m as u64 % p != 0))
}

pub(crate) fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|q| q * q <= p).all(|q| p % q != 0)
}

/// `<root, lam>` as an exact rational.
pub fn pairing(root: &RootVec, lam: &CocharVec) -> Result<Rational64> {
    if root.coords().len() != lam.dim() {
        return Err(Error::DimensionMismatch {
            expected: root.coords().len(),
            got: lam.dim(),
        });
    }
    Ok(root
        .coords()
        .iter()
        .zip(lam.coords())
        .fold(Rational64::zero(), |acc, (&c, x)| acc + x * c))
}

/// The unique dominant `W`-conjugate of `lam` and a word carrying `lam` to it.
pub fn to_dominant(rs: &RootSystem, lam: &CocharVec) -> (CocharVec, WeylWord) {
    let mut v = lam.0.clone();
    let word = dominate(&rs.cartan, &mut v);
    (CocharVec(v), WeylWord { word })
}

/// One step of an alcove reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AffineStep {
    /// Subtract a coweight-lattice vector.
    Translate(Vec<i64>),
    /// Simple reflection `s_i`.
    Reflect(usize),
    /// Reflection in the affine wall `<theta, x> = 1`.
    AffineReflect,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlcoveReduction {
    /// Representative in the closed fundamental alcove.
    pub point: CocharVec,
    /// Extended nodes pairing integrally with `point`, never all of them.
    pub walls: NodeSet,
    /// Steps carrying the input to `point`.
    pub trail: Vec<AffineStep>,
}

impl AlcoveReduction {
    /// Replays the trail backwards from `point`, recovering the input.
    pub fn replay_inverse(&self, rs: &RootSystem) -> CocharVec {
        let mut v = self.point.0.clone();
        for step in self.trail.iter().rev() {
            apply_affine_step(rs, &mut v, step, true);
        }
        CocharVec(v)
    }
}

fn apply_affine_step(rs: &RootSystem, v: &mut [Rational64], step: &AffineStep, inverse: bool) {
    match step {
        AffineStep::Translate(t) => {
            for (x, &s) in v.iter_mut().zip(t) {
                if inverse {
                    *x += s;
                } else {
                    *x -= s;
                }
            }
        }
        AffineStep::Reflect(i) => reflect_coweight(&rs.cartan, v, *i),
        AffineStep::AffineReflect => {
            let theta = rs.highest_root().coords();
            let ht: Rational64 = theta
                .iter()
                .zip(v.iter())
                .fold(Rational64::zero(), |a, (&c, x)| a + x * c);
            let shift = ht - Rational64::one();
            for (x, &c) in v.iter_mut().zip(rs.coroot(rs.highest)) {
                *x -= shift * c;
            }
        }
    }
}

/// Moves `point` into the closed fundamental alcove using `W` and
/// translations by the coweight lattice, and reports the wall set.
pub fn alcove_reduce(rs: &RootSystem, point: &CocharVec) -> AlcoveReduction {
    let n = rs.rank();
    let mut v = point.0.clone();
    let mut trail = Vec::new();
    let theta = rs.highest_root().coords().to_vec();
    loop {
        let t: Vec<i64> = v.iter().map(|x| x.floor().to_integer()).collect();
        if t.iter().any(|&c| c != 0) {
            let step = AffineStep::Translate(t);
            apply_affine_step(rs, &mut v, &step, false);
            trail.push(step);
        }
        let ht = theta
            .iter()
            .zip(&v)
            .fold(Rational64::zero(), |a, (&c, x)| a + x * c);
        if ht <= Rational64::one() {
            break;
        }
        apply_affine_step(rs, &mut v, &AffineStep::AffineReflect, false);
        trail.push(AffineStep::AffineReflect);
        for i in dominate(&rs.cartan, &mut v) {
            trail.push(AffineStep::Reflect(i));
        }
    }
    let mut walls = NodeSet::EMPTY;
    for (i, x) in v.iter().enumerate() {
        if x.is_integer() {
            walls.insert(i);
        }
    }
    let ht = theta
        .iter()
        .zip(&v)
        .fold(Rational64::zero(), |a, (&c, x)| a + x * c);
    if ht.is_integer() {
        walls.insert(n);
    }
    if walls == NodeSet::extended(n) {
        walls.remove(n);
    }
    AlcoveReduction {
        point: CocharVec(v),
        walls,
        trail,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        build_root_system(s.parse().unwrap())
    }

    fn q(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn parse_and_reject_types() {
        assert_eq!("e8".parse::<CartanType>().unwrap().to_string(), "E8");
        assert!("Q9".parse::<CartanType>().is_err());
        assert!("E9".parse::<CartanType>().is_err());
        assert!("B1".parse::<CartanType>().is_err());
        assert!("G3".parse::<CartanType>().is_err());
        assert!("A".parse::<CartanType>().is_err());
        assert!("D3".parse::<CartanType>().is_ok());
    }

    #[test]
    fn small_systems() {
        let a1 = rs("A1");
        assert_eq!(a1.num_positive(), 1);
        assert_eq!(a1.highest_root().coords(), &[1]);
        assert_eq!(a1.marks(), &[1]);

        let a2 = rs("A2");
        assert_eq!(a2.num_positive(), 3);
        assert_eq!(a2.marks(), &[1, 1]);
    }

    #[test]
    fn bourbaki_marks() {
        assert_eq!(rs("G2").marks(), &[3, 2]);
        assert_eq!(rs("F4").marks(), &[2, 3, 4, 2]);
        assert_eq!(rs("E6").marks(), &[1, 2, 2, 3, 2, 1]);
        assert_eq!(rs("E7").marks(), &[2, 2, 3, 4, 3, 2, 1]);
        assert_eq!(rs("E8").marks(), &[2, 3, 4, 6, 5, 4, 3, 2]);
        assert_eq!(rs("B4").marks(), &[1, 2, 2, 2]);
        assert_eq!(rs("C4").marks(), &[2, 2, 2, 1]);
        assert_eq!(rs("D5").marks(), &[1, 2, 2, 1, 1]);
    }

    #[test]
    fn good_primes() {
        assert!(is_good_prime(&rs("A5"), 2).unwrap());
        assert!(!is_good_prime(&rs("E8"), 5).unwrap());
        assert!(is_good_prime(&rs("G2"), 0).unwrap());
        assert!(!is_good_prime(&rs("G2"), 3).unwrap());
        assert!(is_good_prime(&rs("G2"), 5).unwrap());
        assert_eq!(is_good_prime(&rs("G2"), 6), Err(Error::NotPrime(6)));
        assert_eq!(rs("E8").bad_primes(), vec![2, 3, 5]);
        assert!(rs("A7").bad_primes().is_empty());
    }

    #[test]
    fn pairing_examples() {
        let a2 = rs("A2");
        let a1 = RootVec::simple(2, 0);
        assert_eq!(pairing(&a1, &CocharVec::zero(2)).unwrap(), q(0, 1));
        assert_eq!(pairing(&a1, &CocharVec::from_ints(&[2, 0])).unwrap(), q(2, 1));
        assert_eq!(
            pairing(a2.highest_root(), &CocharVec::from_ints(&[1, 1])).unwrap(),
            q(2, 1)
        );
        assert!(pairing(&a1, &CocharVec::zero(3)).is_err());
    }

    #[test]
    fn dominant_examples() {
        let a2 = rs("A2");
        let (d, w) = to_dominant(&a2, &CocharVec::zero(2));
        assert_eq!(d, CocharVec::zero(2));
        assert!(w.is_empty());
        let lam = CocharVec::from_ints(&[1, 3]);
        let (d, w) = to_dominant(&a2, &lam);
        assert_eq!(d, lam);
        assert!(w.is_empty());
        let (d, w) = to_dominant(&a2, &CocharVec::from_ints(&[-1, 1]));
        // s1(-1,1) = (1,0): already dominant.
        assert_eq!(d, CocharVec::from_ints(&[1, 0]));
        assert_eq!(w.word, vec![0]);
    }

    #[test]
    fn alcove_examples() {
        let a1 = rs("A1");
        let r = alcove_reduce(&a1, &CocharVec::zero(1));
        assert_eq!(r.point, CocharVec::zero(1));
        assert_eq!(r.walls, NodeSet::simple(1));

        // alpha^vee / 4 = (1/2) in coweight coordinates.
        let r = alcove_reduce(&a1, &CocharVec::new(vec![q(1, 2)]));
        assert_eq!(r.point, CocharVec::new(vec![q(1, 2)]));
        assert_eq!(r.walls, NodeSet::EMPTY);

        let g2 = rs("G2");
        let far = CocharVec::new(vec![q(-17, 5), q(9, 7)]);
        let r = alcove_reduce(&g2, &far);
        assert_eq!(r.replay_inverse(&g2), far);
        assert!(r.point.is_dominant());
        let ht = pairing(g2.highest_root(), &r.point).unwrap();
        assert!(ht <= q(1, 1));
    }

    #[test]
    fn coroots_of_g2() {
        let g2 = rs("G2");
        // Simple coroots in coweight coordinates are the Cartan rows.
        let s1 = g2.simple_root_index(0);
        assert_eq!(g2.coroot(s1), &[2, -3]);
        let s2 = g2.simple_root_index(1);
        assert_eq!(g2.coroot(s2), &[-1, 2]);
        // theta = 3a1 + 2a2 is long; its coroot is a1^v + 2 a2^v.
        assert_eq!(g2.coroot(g2.highest_root_index()), &[0, 1]);
        assert_eq!(g2.root_length(g2.highest_root_index()), 3);
    }
}
