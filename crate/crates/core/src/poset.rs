//! Dimension-two posets: intersections of two linear orders.
//!
//! Elements are labelled `1..=n` in the public API.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::guard::{self, Guards};
use crate::num::Count;
use crate::permutation::{Permutation, Permutations};

/// A total order on `1..=n`: element `e` has rank `ranking.at(e)`, smaller rank first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearOrder {
    ranking: Permutation,
}

impl LinearOrder {
    pub fn new(ranking: Permutation) -> Self {
        LinearOrder { ranking }
    }

    /// `1 < 2 < … < n`.
    pub fn natural(n: usize) -> Self {
        LinearOrder::new(Permutation::identity(n))
    }

    /// The order that lists the elements as `sequence`, smallest first.
    pub fn from_sequence(sequence: &Permutation) -> Self {
        LinearOrder::new(sequence.inverse())
    }

    pub fn len(&self) -> usize {
        self.ranking.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranking.is_empty()
    }

    pub fn rank(&self, element: usize) -> usize {
        self.ranking.at(element)
    }

    pub fn ranking(&self) -> &Permutation {
        &self.ranking
    }

    /// Elements from smallest to largest.
    pub fn sequence(&self) -> Permutation {
        self.ranking.inverse()
    }
}

/// A strict partial order on `1..=n`, stored as a dense relation matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    lt: Vec<bool>,
}

impl Poset {
    /// Validates irreflexivity, antisymmetry and transitivity of `lt[a][b] = a ≺ b`
    /// (0-indexed rows and columns).
    pub fn from_matrix(lt: Vec<Vec<bool>>) -> Result<Self> {
        let n = lt.len();
        if lt.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidPoset("relation matrix is not square".into()));
        }
        let p = Poset {
            n,
            lt: lt.into_iter().flatten().collect(),
        };
        p.validate()?;
        Ok(p)
    }

    /// The transitive closure of the given `(a, b)` meaning `a ≺ b` relations.
    pub fn generated_by(n: usize, relations: &[(usize, usize)]) -> Result<Self> {
        let mut p = Poset {
            n,
            lt: vec![false; n * n],
        };
        for &(a, b) in relations {
            if a == 0 || b == 0 || a > n || b > n {
                return Err(Error::OutOfRange(format!("relation ({a}, {b}) outside 1..{n}")));
            }
            p.lt[(a - 1) * n + (b - 1)] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if p.lt[i * n + k] {
                    for j in 0..n {
                        if p.lt[k * n + j] {
                            p.lt[i * n + j] = true;
                        }
                    }
                }
            }
        }
        p.validate()?;
        Ok(p)
    }

    pub fn chain(n: usize) -> Self {
        intersect_unchecked(&LinearOrder::natural(n), &LinearOrder::natural(n))
    }

    pub fn antichain(n: usize) -> Self {
        Poset {
            n,
            lt: vec![false; n * n],
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// `a ≺ b` for 1-indexed elements.
    pub fn less(&self, a: usize, b: usize) -> bool {
        self.lt[(a - 1) * self.n + (b - 1)]
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.less(a, b) || self.less(b, a)
    }

    /// All pairs `(a, b)` with `a ≺ b`, in lexicographic order.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 1..=self.n {
            for b in 1..=self.n {
                if self.less(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn to_matrix(&self) -> Vec<Vec<bool>> {
        if self.n == 0 {
            return Vec::new();
        }
        self.lt.chunks(self.n).map(<[bool]>::to_vec).collect()
    }

    /// The isomorphic poset in which element `e` is renamed `map.at(e)`.
    pub fn relabel(&self, map: &Permutation) -> Result<Poset> {
        if map.len() != self.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: map.len(),
            });
        }
        let n = self.n;
        let mut lt = vec![false; n * n];
        for a in 1..=n {
            for b in 1..=n {
                if self.less(a, b) {
                    lt[(map.at(a) - 1) * n + (map.at(b) - 1)] = true;
                }
            }
        }
        Ok(Poset { n, lt })
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        let lt = |a: usize, b: usize| self.lt[a * n + b];
        for a in 0..n {
            if lt(a, a) {
                return Err(Error::InvalidPoset(format!("{} ≺ {}", a + 1, a + 1)));
            }
            for b in 0..n {
                if lt(a, b) && lt(b, a) {
                    return Err(Error::InvalidPoset(format!("{} and {} precede each other", a + 1, b + 1)));
                }
                if lt(a, b) {
                    if let Some(c) = (0..n).find(|&c| lt(b, c) && !lt(a, c)) {
                        return Err(Error::InvalidPoset(format!(
                            "{} ≺ {} ≺ {} but not {} ≺ {}",
                            a + 1,
                            b + 1,
                            c + 1,
                            a + 1,
                            c + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

fn intersect_unchecked(first: &LinearOrder, second: &LinearOrder) -> Poset {
    let n = first.len();
    let mut lt = vec![false; n * n];
    for a in 1..=n {
        for b in 1..=n {
            lt[(a - 1) * n + (b - 1)] =
                first.rank(a) < first.rank(b) && second.rank(a) < second.rank(b);
        }
    }
    Poset { n, lt }
}

/// `a ≺ b` exactly when both orders put `a` before `b`.
pub fn intersect_linear_orders(first: &LinearOrder, second: &LinearOrder) -> Result<Poset> {
    if first.len() != second.len() {
        return Err(Error::SizeMismatch {
            left: first.len(),
            right: second.len(),
        });
    }
    Ok(intersect_unchecked(first, second))
}

/// `a ≺ b` iff `a < b` and `a` occurs before `b` in the word of `perm`.
pub fn poset_from_permutation(perm: &Permutation) -> Poset {
    let n = perm.len();
    let position = perm.inverse();
    let mut lt = vec![false; n * n];
    for a in 1..=n {
        for b in a + 1..=n {
            lt[(a - 1) * n + (b - 1)] = position.at(a) < position.at(b);
        }
    }
    Poset { n, lt }
}

/// Whether the pairs `(σ, τ)` and `(σ', τ')` are related by a relabelling of
/// the ground set, as unordered pairs.
pub fn linear_order_pairs_isomorphic(
    pair: (&LinearOrder, &LinearOrder),
    other: (&LinearOrder, &LinearOrder),
) -> bool {
    let n = pair.0.len();
    if [pair.1.len(), other.0.len(), other.1.len()].iter().any(|&m| m != n) {
        return false;
    }
    // a relabelling carrying σ onto σ' must send the element of rank r to the
    // element of rank r, so it is unique; check whether it also carries τ onto τ'
    let carries = |s: &LinearOrder, t: &LinearOrder, s2: &LinearOrder, t2: &LinearOrder| {
        let s2_seq = s2.sequence();
        (1..=n).all(|e| t2.rank(s2_seq.at(s.rank(e))) == t.rank(e))
    };
    carries(pair.0, pair.1, other.0, other.1) || carries(pair.0, pair.1, other.1, other.0)
}

/// Size and one witness of a largest antichain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Antichain {
    pub size: usize,
    /// Sorted 1-indexed elements.
    pub witness: Vec<usize>,
}

/// Largest antichain, by branch and bound for a maximum independent set of
/// the comparability graph. Candidate sets are bounded above by a greedy
/// cover with chains.
pub fn max_antichain(poset: &Poset) -> Antichain {
    let candidates: Vec<usize> = (0..poset.n).collect();
    let mut current = Vec::new();
    let mut best = Vec::new();
    grow_antichain(poset, &candidates, &mut current, &mut best);
    Antichain {
        size: best.len(),
        witness: best.into_iter().map(|e| e + 1).collect(),
    }
}

fn comparable0(poset: &Poset, a: usize, b: usize) -> bool {
    poset.lt[a * poset.n + b] || poset.lt[b * poset.n + a]
}

fn chain_cover_size(poset: &Poset, candidates: &[usize]) -> usize {
    let mut chains: Vec<Vec<usize>> = Vec::new();
    for &v in candidates {
        match chains
            .iter_mut()
            .find(|chain| chain.iter().all(|&u| comparable0(poset, u, v)))
        {
            Some(chain) => chain.push(v),
            None => chains.push(vec![v]),
        }
    }
    chains.len()
}

fn grow_antichain(poset: &Poset, candidates: &[usize], current: &mut Vec<usize>, best: &mut Vec<usize>) {
    if candidates.is_empty() {
        if current.len() > best.len() {
            best.clone_from(current);
        }
        return;
    }
    if current.len() + chain_cover_size(poset, candidates) <= best.len() {
        return;
    }
    let (&v, rest) = candidates.split_first().expect("non-empty");
    let compatible: Vec<usize> = rest
        .iter()
        .copied()
        .filter(|&u| !comparable0(poset, u, v))
        .collect();
    current.push(v);
    grow_antichain(poset, &compatible, current, best);
    current.pop();
    grow_antichain(poset, rest, current, best);
}

/// Relabelling-invariant encoding of a poset: equal exactly for isomorphic posets.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

/// Canonical form by search over relabellings.
///
/// Elements are first split into classes by an iterated refinement of
/// (down-degree, up-degree, height); only labellings that list the classes in
/// a fixed order are tried, twins (equal up- and down-sets) are placed in
/// label order, and partial codes already worse than the best are cut. The
/// code lists, for each position `p`, the relation bits against every earlier
/// position, so a labelling prefix fixes a code prefix.
pub fn canonical_form(poset: &Poset, guards: &Guards) -> Result<CanonicalForm> {
    guard::check("canonical_form", poset.n, guards.canonical_form)?;
    let n = poset.n;
    let colors = refine_colors(poset);
    let mut slot_colors = colors.clone();
    slot_colors.sort_unstable();

    // twin_before[v]: the twins of v with a smaller label
    let twin_before: Vec<Vec<usize>> = (0..n)
        .map(|v| (0..v).filter(|&u| colors[u] == colors[v] && are_twins(poset, u, v)).collect())
        .collect();

    let mut search = CanonSearch {
        poset,
        colors: &colors,
        slot_colors: &slot_colors,
        twin_before: &twin_before,
        order: Vec::with_capacity(n),
        used: vec![false; n],
        code: Vec::with_capacity(n * n),
        best: None,
    };
    search.descend();
    let bits = search.best.unwrap_or_default();

    let mut bytes = Vec::with_capacity(4 + bits.len() / 8 + 1);
    bytes.extend_from_slice(&(n as u32).to_be_bytes());
    for chunk in bits.chunks(8) {
        let byte = chunk.iter().enumerate().fold(0u8, |acc, (i, &b)| acc | (u8::from(b) << (7 - i)));
        bytes.push(byte);
    }
    Ok(CanonicalForm(bytes))
}

fn are_twins(poset: &Poset, u: usize, v: usize) -> bool {
    let n = poset.n;
    (0..n).all(|w| {
        w == u || w == v || (poset.lt[u * n + w] == poset.lt[v * n + w] && poset.lt[w * n + u] == poset.lt[w * n + v])
    })
}

/// Colour refinement seeded with (down-degree, up-degree, height). Colours
/// are ranks of sorted signatures, so they depend only on the isomorphism type.
fn refine_colors(poset: &Poset) -> Vec<usize> {
    let n = poset.n;
    let lt = |a: usize, b: usize| poset.lt[a * n + b];

    // height: longest chain ending at v; relaxation converges in n rounds
    let mut height = vec![0usize; n];
    for _ in 0..n {
        for b in 0..n {
            for a in 0..n {
                if lt(a, b) && height[a] + 1 > height[b] {
                    height[b] = height[a] + 1;
                }
            }
        }
    }
    let seed: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let down = (0..n).filter(|&u| lt(u, v)).count();
            let up = (0..n).filter(|&u| lt(v, u)).count();
            vec![down, up, height[v]]
        })
        .collect();
    let mut colors = rank_signatures(&seed);
    loop {
        let classes = colors.iter().collect::<BTreeSet<_>>().len();
        let signatures: Vec<Vec<usize>> = (0..n)
            .map(|v| {
                let mut below: Vec<usize> = (0..n).filter(|&u| lt(u, v)).map(|u| colors[u]).collect();
                let mut above: Vec<usize> = (0..n).filter(|&u| lt(v, u)).map(|u| colors[u]).collect();
                below.sort_unstable();
                above.sort_unstable();
                let mut sig = vec![colors[v], below.len()];
                sig.extend(below);
                sig.push(above.len());
                sig.extend(above);
                sig
            })
            .collect();
        let next = rank_signatures(&signatures);
        let next_classes = next.iter().collect::<BTreeSet<_>>().len();
        colors = next;
        if next_classes == classes {
            return colors;
        }
    }
}

fn rank_signatures(signatures: &[Vec<usize>]) -> Vec<usize> {
    let distinct: BTreeSet<&Vec<usize>> = signatures.iter().collect();
    let index: BTreeMap<&Vec<usize>, usize> = distinct.into_iter().enumerate().map(|(i, s)| (s, i)).collect();
    signatures.iter().map(|s| index[s]).collect()
}

struct CanonSearch<'a> {
    poset: &'a Poset,
    colors: &'a [usize],
    slot_colors: &'a [usize],
    twin_before: &'a [Vec<usize>],
    order: Vec<usize>,
    used: Vec<bool>,
    code: Vec<bool>,
    best: Option<Vec<bool>>,
}

impl CanonSearch<'_> {
    fn descend(&mut self) {
        let n = self.poset.n;
        let p = self.order.len();
        if p == n {
            if self.best.as_ref().is_none_or(|best| self.code < *best) {
                self.best = Some(self.code.clone());
            }
            return;
        }
        for v in 0..n {
            if self.used[v] || self.colors[v] != self.slot_colors[p] {
                continue;
            }
            if self.twin_before[v].iter().any(|&u| !self.used[u]) {
                continue;
            }
            let mark = self.code.len();
            for &u in &self.order {
                self.code.push(self.poset.lt[v * n + u]);
                self.code.push(self.poset.lt[u * n + v]);
            }
            let worse = self
                .best
                .as_ref()
                .is_some_and(|best| self.code[..] > best[..self.code.len()]);
            if !worse {
                self.used[v] = true;
                self.order.push(v);
                self.descend();
                self.order.pop();
                self.used[v] = false;
            }
            self.code.truncate(mark);
        }
    }
}

/// Isomorphism test through canonical forms.
pub fn is_isomorphic(a: &Poset, b: &Poset, guards: &Guards) -> Result<bool> {
    if a.size() != b.size() {
        guard::check("canonical_form", a.size().max(b.size()), guards.canonical_form)?;
        return Ok(false);
    }
    Ok(canonical_form(a, guards)? == canonical_form(b, guards)?)
}

/// Number of `n`-element dimension-two posets, up to isomorphism, by the size
/// of their largest antichain.
pub fn epsilon_exact(n: usize, guards: &Guards) -> Result<BTreeMap<usize, Count>> {
    guard::check("epsilon_exact", n, guards.epsilon)?;
    guard::check("canonical_form", n, guards.canonical_form)?;
    let classes = census(n, guards)?;
    let mut out = BTreeMap::new();
    for (k, forms) in classes {
        out.insert(k, Count::from(forms.len()));
    }
    Ok(out)
}

type Census = BTreeMap<usize, BTreeSet<CanonicalForm>>;

fn census_slice(perms: Permutations, guards: &Guards) -> Result<Census> {
    let mut classes = Census::new();
    for pi in perms {
        let poset = poset_from_permutation(&pi);
        let width = max_antichain(&poset).size;
        classes.entry(width).or_default().insert(canonical_form(&poset, guards)?);
    }
    Ok(classes)
}

#[cfg(feature = "parallel")]
fn merge(mut a: Census, b: Census) -> Census {
    for (k, forms) in b {
        a.entry(k).or_default().extend(forms);
    }
    a
}

#[cfg(not(feature = "parallel"))]
fn census(n: usize, guards: &Guards) -> Result<Census> {
    census_slice(Permutations::new(n), guards)
}

#[cfg(feature = "parallel")]
fn census(n: usize, guards: &Guards) -> Result<Census> {
    use rayon::prelude::*;
    if n == 0 {
        return census_slice(Permutations::new(0), guards);
    }
    (1..=n)
        .into_par_iter()
        .map(|first| census_slice(Permutations::starting_with(n, first), guards))
        .try_reduce(Census::new, |a, b| Ok(merge(a, b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stats::lds_length;

    fn perm(w: &[usize]) -> Permutation {
        Permutation::new(w.to_vec()).unwrap()
    }

    fn g() -> Guards {
        Guards::default()
    }

    /// Largest antichain by trying every subset.
    fn width_by_subsets(p: &Poset) -> usize {
        let n = p.size();
        (0u32..1 << n)
            .filter(|mask| {
                (0..n).all(|a| {
                    (0..n).all(|b| mask & (1 << a) == 0 || mask & (1 << b) == 0 || !comparable0(p, a, b))
                })
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Isomorphism by trying every relabelling.
    fn isomorphic_by_brute_force(a: &Poset, b: &Poset) -> bool {
        a.size() == b.size() && Permutations::new(a.size()).any(|m| a.relabel(&m).unwrap() == *b)
    }

    fn disjoint_chains(lengths: &[usize]) -> Poset {
        let n = lengths.iter().sum();
        let mut rel = Vec::new();
        let mut start = 1;
        for &len in lengths {
            for e in start..start + len - 1 {
                rel.push((e, e + 1));
            }
            start += len;
        }
        Poset::generated_by(n, &rel).unwrap()
    }

    #[test]
    fn intersection_examples() {
        let nat = LinearOrder::natural(3);
        assert_eq!(intersect_linear_orders(&nat, &nat).unwrap(), Poset::chain(3));
        let rev = LinearOrder::new(Permutation::reversal(3));
        assert_eq!(intersect_linear_orders(&nat, &rev).unwrap(), Poset::antichain(3));
        let v = intersect_linear_orders(&nat, &LinearOrder::new(perm(&[1, 3, 2]))).unwrap();
        assert_eq!(v.relations(), vec![(1, 2), (1, 3)]);
        assert_eq!(
            intersect_linear_orders(&nat, &LinearOrder::natural(2)),
            Err(Error::SizeMismatch { left: 3, right: 2 })
        );
    }

    #[test]
    fn permutation_posets() {
        assert_eq!(poset_from_permutation(&perm(&[1, 2, 3])), Poset::chain(3));
        assert_eq!(poset_from_permutation(&perm(&[3, 2, 1])), Poset::antichain(3));
        assert_eq!(poset_from_permutation(&perm(&[2, 3, 1])).relations(), vec![(2, 3)]);
        // same as intersecting the natural order with the word order
        for pi in Permutations::new(5) {
            let via_orders =
                intersect_linear_orders(&LinearOrder::natural(5), &LinearOrder::from_sequence(&pi)).unwrap();
            assert_eq!(poset_from_permutation(&pi), via_orders);
        }
    }

    #[test]
    fn intersections_are_partial_orders() {
        for s in Permutations::new(4) {
            for t in Permutations::new(4) {
                intersect_linear_orders(&LinearOrder::new(s.clone()), &LinearOrder::new(t))
                    .unwrap()
                    .validate()
                    .unwrap();
            }
        }
    }

    #[test]
    fn validation_rejects_non_orders() {
        assert!(Poset::from_matrix(vec![vec![true]]).is_err());
        assert!(Poset::from_matrix(vec![vec![false, true], vec![true, false]]).is_err());
        let not_transitive = vec![
            vec![false, true, false],
            vec![false, false, true],
            vec![false, false, false],
        ];
        assert!(Poset::from_matrix(not_transitive).is_err());
        assert!(Poset::generated_by(2, &[(1, 2), (2, 1)]).is_err());
    }

    #[test]
    fn antichain_examples() {
        assert_eq!(max_antichain(&Poset::chain(5)).size, 1);
        let a = max_antichain(&Poset::antichain(4));
        assert_eq!(a.size, 4);
        assert_eq!(a.witness, vec![1, 2, 3, 4]);
        let chains = disjoint_chains(&[3, 5, 7]);
        let a = max_antichain(&chains);
        assert_eq!(a.size, 3);
        assert_eq!(a.size, width_by_subsets(&chains));
        for (i, &x) in a.witness.iter().enumerate() {
            for &y in &a.witness[i + 1..] {
                assert!(!chains.comparable(x, y));
            }
        }
    }

    #[test]
    fn antichain_is_longest_decreasing_subsequence() {
        for n in 1..=7 {
            for pi in Permutations::new(n) {
                let p = poset_from_permutation(&pi);
                let a = max_antichain(&p);
                assert_eq!(a.size, lds_length(pi.word()), "{pi}");
                if n <= 5 {
                    assert_eq!(a.size, width_by_subsets(&p));
                }
            }
        }
    }

    #[test]
    fn canonical_examples() {
        let chain = Poset::chain(3);
        let relabeled = chain.relabel(&perm(&[2, 3, 1])).unwrap();
        assert_ne!(chain, relabeled);
        assert_eq!(canonical_form(&chain, &g()).unwrap(), canonical_form(&relabeled, &g()).unwrap());

        let v = poset_from_permutation(&perm(&[1, 3, 2]));
        let lambda = poset_from_permutation(&perm(&[2, 1, 3]));
        assert_ne!(canonical_form(&v, &g()).unwrap(), canonical_form(&lambda, &g()).unwrap());

        let a = poset_from_permutation(&perm(&[2, 3, 1]));
        let b = poset_from_permutation(&perm(&[3, 1, 2]));
        assert_ne!(a, b);
        assert!(is_isomorphic(&a, &b, &g()).unwrap());

        assert!(is_isomorphic(&Poset::chain(4), &Poset::chain(4), &g()).unwrap());
        assert!(!is_isomorphic(&Poset::chain(3), &Poset::antichain(3), &g()).unwrap());
        assert!(matches!(
            canonical_form(&Poset::chain(10), &g()),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn canonical_form_agrees_with_brute_force_isomorphism() {
        let posets: Vec<Poset> = Permutations::new(5).map(|p| poset_from_permutation(&p)).collect();
        let forms: Vec<CanonicalForm> = posets.iter().map(|p| canonical_form(p, &g()).unwrap()).collect();
        for i in 0..posets.len() {
            for j in i..posets.len() {
                assert_eq!(
                    forms[i] == forms[j],
                    isomorphic_by_brute_force(&posets[i], &posets[j]),
                    "{i} {j}"
                );
            }
        }
    }

    #[test]
    fn canonical_form_is_relabelling_invariant() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let samples = [
            poset_from_permutation(&perm(&[3, 1, 4, 6, 2, 5, 8, 7, 9])),
            poset_from_permutation(&perm(&[5, 6, 7, 1, 2, 8, 3, 4, 9])),
            disjoint_chains(&[2, 3, 4]),
            Poset::antichain(9),
            Poset::generated_by(8, &[(1, 3), (2, 3), (3, 4), (5, 6), (5, 7), (6, 8), (7, 8)]).unwrap(),
        ];
        for p in &samples {
            let form = canonical_form(p, &g()).unwrap();
            for _ in 0..100 {
                let mut word: Vec<usize> = (1..=p.size()).collect();
                word.shuffle(&mut rng);
                let q = p.relabel(&Permutation::new(word).unwrap()).unwrap();
                assert_eq!(canonical_form(&q, &g()).unwrap(), form);
            }
        }
    }

    #[test]
    fn census_examples() {
        let c = |pairs: &[(usize, u64)]| -> BTreeMap<usize, Count> {
            pairs.iter().map(|&(k, v)| (k, Count::from(v))).collect()
        };
        assert_eq!(epsilon_exact(1, &g()).unwrap(), c(&[(1, 1)]));
        assert_eq!(epsilon_exact(2, &g()).unwrap(), c(&[(1, 1), (2, 1)]));
        assert_eq!(epsilon_exact(3, &g()).unwrap(), c(&[(1, 1), (2, 3), (3, 1)]));
        assert!(matches!(epsilon_exact(8, &g()), Err(Error::GuardExceeded { .. })));
    }

    #[test]
    fn census_totals_match_poset_counts() {
        // every poset on at most five elements has dimension at most two, so the
        // totals are the numbers of unlabelled posets
        let all_posets = [1u64, 2, 5, 16, 63];
        for (i, &expected) in all_posets.iter().enumerate() {
            let total: Count = epsilon_exact(i + 1, &g()).unwrap().into_values().sum();
            assert_eq!(total, Count::from(expected), "n = {}", i + 1);
        }
    }

    #[test]
    fn pair_isomorphism() {
        let nat = LinearOrder::natural(3);
        let rev = LinearOrder::new(Permutation::reversal(3));
        assert!(linear_order_pairs_isomorphic((&nat, &rev), (&rev, &nat)));
        let other = LinearOrder::new(perm(&[2, 1, 3]));
        assert!(!linear_order_pairs_isomorphic((&nat, &rev), (&nat, &other)));
        // relabelling both orders by the same map preserves the pair type
        let m = perm(&[3, 1, 2]);
        let s = LinearOrder::new(perm(&[2, 3, 1]));
        let t = LinearOrder::new(perm(&[1, 3, 2]));
        let s2 = LinearOrder::new(s.ranking().compose(&m.inverse()).unwrap());
        let t2 = LinearOrder::new(t.ranking().compose(&m.inverse()).unwrap());
        assert!(linear_order_pairs_isomorphic((&s, &t), (&s2, &t2)));
    }
}
