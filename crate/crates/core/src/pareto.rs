//! Sets of mutually undominated (weight, profit) pairs.
//!
//! A pair `q` dominates `r` when `q.weight <= r.weight` and `q.profit >= r.profit`
//! with at least one inequality strict; equal pairs are duplicates. A
//! [`ParetoSet`] keeps its pairs sorted by strictly increasing weight and
//! strictly increasing profit, which is exactly the antichain of maxima.

use std::cmp::Reverse;

use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WpPair {
    pub weight: u64,
    pub profit: u64,
    pub witness: Option<VertexSet>,
}

impl WpPair {
    pub fn new(weight: u64, profit: u64) -> Self {
        Self {
            weight,
            profit,
            witness: None,
        }
    }

    pub fn with_witness(weight: u64, profit: u64, witness: VertexSet) -> Self {
        Self {
            weight,
            profit,
            witness: Some(witness),
        }
    }

    pub fn dominates(&self, other: &WpPair) -> bool {
        self.weight <= other.weight
            && self.profit >= other.profit
            && (self.weight < other.weight || self.profit > other.profit)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ParetoSet {
    pairs: Vec<WpPair>,
}

impl ParetoSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// `{(0, 0)}`, optionally with an empty witness over `universe` vertices.
    pub fn unit(universe: Option<usize>) -> Self {
        Self::singleton(WpPair {
            weight: 0,
            profit: 0,
            witness: universe.map(VertexSet::new),
        })
    }

    pub fn singleton(pair: WpPair) -> Self {
        Self { pairs: vec![pair] }
    }

    /// Prunes an arbitrary collection down to its maxima. On exact ties the
    /// earliest pair in `pairs` is kept.
    pub fn from_pairs(mut pairs: Vec<WpPair>) -> Self {
        pairs.sort_by_key(|p| (p.weight, Reverse(p.profit)));
        Self {
            pairs: prune_sorted(pairs),
        }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, WpPair> {
        self.pairs.iter()
    }

    pub fn as_slice(&self) -> &[WpPair] {
        &self.pairs
    }

    /// The `(weight, profit)` pairs in ascending weight order, witnesses dropped.
    pub fn pairs(&self) -> Vec<(u64, u64)> {
        self.pairs.iter().map(|p| (p.weight, p.profit)).collect()
    }

    pub fn is_antichain(&self) -> bool {
        self.pairs
            .windows(2)
            .all(|w| w[0].weight < w[1].weight && w[0].profit < w[1].profit)
    }

    pub fn insert(&mut self, p: WpPair) {
        // first index with weight >= p.weight
        let pos = self.pairs.partition_point(|q| q.weight < p.weight);
        // the predecessor has strictly smaller weight; it dominates p iff its profit is >= p's
        if pos > 0 && self.pairs[pos - 1].profit >= p.profit {
            return;
        }
        if let Some(q) = self.pairs.get(pos) {
            if q.weight == p.weight && q.profit >= p.profit {
                return;
            }
        }
        // p survives; drop everything at or after pos that p dominates
        let end = pos + self.pairs[pos..].partition_point(|q| q.profit <= p.profit);
        self.pairs.splice(pos..end, std::iter::once(p));
        debug_assert!(self.is_antichain());
    }

    pub fn merge(&self, other: &ParetoSet) -> ParetoSet {
        let (a, b) = (&self.pairs, &other.pairs);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let take_a = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => (x.weight, Reverse(x.profit)) <= (y.weight, Reverse(y.profit)),
                (Some(_), None) => true,
                _ => false,
            };
            if take_a {
                out.push(a[i].clone());
                i += 1;
            } else {
                out.push(b[j].clone());
                j += 1;
            }
        }
        ParetoSet {
            pairs: prune_sorted(out),
        }
    }

    pub fn merge_into(&mut self, other: &ParetoSet) {
        if other.is_empty() {
            return;
        }
        *self = self.merge(other);
    }

    /// Maxima of all pairwise sums whose weight is at most `cap`.
    pub fn cross_sum(&self, other: &ParetoSet, cap: u64) -> ParetoSet {
        self.cross_sum_offset(other, 0, 0, cap)
    }

    /// Like [`ParetoSet::cross_sum`] but every sum is reduced by
    /// `(sub_weight, sub_profit)` before the capacity check. Callers guarantee
    /// each operand pair already includes the subtracted amount.
    pub fn cross_sum_offset(
        &self,
        other: &ParetoSet,
        sub_weight: u64,
        sub_profit: u64,
        cap: u64,
    ) -> ParetoSet {
        let (a, b) = (&self.pairs, &other.pairs);
        if a.is_empty() || b.is_empty() {
            return ParetoSet::new();
        }
        // None once the sum exceeds `cap`; later `j` are only heavier.
        let sum = |i: usize, j: usize| -> Option<(u64, u64)> {
            let w = (a[i].weight + b[j].weight).saturating_sub(sub_weight);
            let p = (a[i].profit + b[j].profit).saturating_sub(sub_profit);
            (w <= cap).then_some((w, p))
        };
        let max_w = (a[a.len() - 1].weight + b[b.len() - 1].weight)
            .saturating_sub(sub_weight)
            .min(cap);
        let products = a.len() * b.len();

        let mut chosen: Vec<(u64, u64, usize, usize)> = Vec::new();
        if products > 64 && (max_w as u128) < 4 * products as u128 {
            // dense best-profit-per-weight table
            let mut best: Vec<Option<(u64, usize, usize)>> = vec![None; max_w as usize + 1];
            for i in 0..a.len() {
                for j in 0..b.len() {
                    let Some((w, p)) = sum(i, j) else { break };
                    let slot = &mut best[w as usize];
                    if slot.is_none_or(|(bp, _, _)| p > bp) {
                        *slot = Some((p, i, j));
                    }
                }
            }
            let mut last: Option<u64> = None;
            for (w, slot) in best.into_iter().enumerate() {
                if let Some((p, i, j)) = slot {
                    if last.is_none_or(|lp| p > lp) {
                        chosen.push((w as u64, p, i, j));
                        last = Some(p);
                    }
                }
            }
        } else {
            let mut all = Vec::with_capacity(products);
            for i in 0..a.len() {
                for j in 0..b.len() {
                    let Some((w, p)) = sum(i, j) else { break };
                    all.push((w, p, i, j));
                }
            }
            all.sort_by_key(|&(w, p, i, j)| (w, Reverse(p), i, j));
            let mut last: Option<u64> = None;
            for item in all {
                if last.is_none_or(|lp| item.1 > lp) {
                    last = Some(item.1);
                    chosen.push(item);
                }
            }
        }

        let pairs = chosen
            .into_iter()
            .map(|(weight, profit, i, j)| WpPair {
                weight,
                profit,
                witness: match (&a[i].witness, &b[j].witness) {
                    (Some(x), Some(y)) => Some(x.union(y)),
                    _ => None,
                },
            })
            .collect();
        let out = ParetoSet { pairs };
        debug_assert!(out.is_antichain());
        out
    }

    /// Adds `(dw, da)` to every pair, unions `extra` into witnesses, and drops
    /// pairs that exceed `cap`.
    pub fn shifted(&self, dw: u64, da: u64, extra: Option<&VertexSet>, cap: u64) -> ParetoSet {
        let pairs = self
            .pairs
            .iter()
            .take_while(|p| p.weight + dw <= cap)
            .map(|p| WpPair {
                weight: p.weight + dw,
                profit: p.profit + da,
                witness: match (&p.witness, extra) {
                    (Some(x), Some(y)) => Some(x.union(y)),
                    (Some(x), None) => Some(x.clone()),
                    _ => None,
                },
            })
            .collect();
        ParetoSet { pairs }
    }

    pub fn filter_capacity(&mut self, cap: u64) {
        let keep = self.pairs.partition_point(|p| p.weight <= cap);
        self.pairs.truncate(keep);
    }

    /// Largest profit among pairs of weight at most `s`.
    pub fn best_profit(&self, s: u64) -> Option<u64> {
        self.best_pair(s).map(|p| p.profit)
    }

    pub fn best_pair(&self, s: u64) -> Option<&WpPair> {
        let keep = self.pairs.partition_point(|p| p.weight <= s);
        keep.checked_sub(1).map(|i| &self.pairs[i])
    }

    /// Lightest pair reaching profit `d` within capacity `s`.
    pub fn first_reaching(&self, s: u64, d: u64) -> Option<&WpPair> {
        self.pairs.iter().take_while(|p| p.weight <= s).find(|p| p.profit >= d)
    }
}

impl<'a> IntoIterator for &'a ParetoSet {
    type Item = &'a WpPair;
    type IntoIter = std::slice::Iter<'a, WpPair>;

    fn into_iter(self) -> Self::IntoIter {
        self.pairs.iter()
    }
}

fn prune_sorted(sorted: Vec<WpPair>) -> Vec<WpPair> {
    let mut out: Vec<WpPair> = Vec::with_capacity(sorted.len());
    for p in sorted {
        if out.last().is_none_or(|q| p.profit > q.profit) {
            out.push(p);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(pairs: &[(u64, u64)]) -> ParetoSet {
        ParetoSet::from_pairs(pairs.iter().map(|&(w, p)| WpPair::new(w, p)).collect())
    }

    #[test]
    fn insert_examples() {
        let mut s = set(&[(3, 5), (4, 6)]);
        s.insert(WpPair::new(3, 6));
        assert_eq!(s.pairs(), vec![(3, 6)]);

        let mut s = ParetoSet::new();
        s.insert(WpPair::new(0, 0));
        assert_eq!(s.pairs(), vec![(0, 0)]);

        let mut s = set(&[(1, 1), (5, 9)]);
        s.insert(WpPair::new(3, 4));
        assert_eq!(s.pairs(), vec![(1, 1), (3, 4), (5, 9)]);
    }

    #[test]
    fn insert_dominated_and_duplicate_are_ignored() {
        let mut s = set(&[(1, 4), (3, 6)]);
        s.insert(WpPair::new(2, 3));
        s.insert(WpPair::new(3, 6));
        s.insert(WpPair::new(1, 4));
        assert_eq!(s.pairs(), vec![(1, 4), (3, 6)]);
    }

    #[test]
    fn cross_sum_examples() {
        let a = set(&[(1, 1)]);
        let b = set(&[(2, 3)]);
        assert_eq!(a.cross_sum(&b, 10).pairs(), vec![(3, 4)]);
        assert!(a.cross_sum(&b, 2).is_empty());
        // all four sums: (0,0) (1,2) (1,2) (2,4)
        let c = set(&[(0, 0), (1, 2)]);
        assert_eq!(c.cross_sum(&c, 2).pairs(), vec![(0, 0), (1, 2), (2, 4)]);
    }

    #[test]
    fn merge_examples() {
        assert_eq!(set(&[(1, 1)]).merge(&set(&[(1, 1)])).pairs(), vec![(1, 1)]);
        assert_eq!(set(&[(1, 3)]).merge(&set(&[(2, 2)])).pairs(), vec![(1, 3)]);
        let x = set(&[(0, 2), (4, 7)]);
        assert_eq!(ParetoSet::new().merge(&x), x);
    }

    #[test]
    fn best_profit_examples() {
        let s = set(&[(1, 1), (3, 4)]);
        assert_eq!(s.best_profit(2), Some(1));
        assert_eq!(ParetoSet::new().best_profit(5), None);
        assert_eq!(s.best_profit(3), Some(4));
        assert_eq!(s.best_profit(0), None);
    }

    #[test]
    fn witnesses_union_in_cross_sum() {
        let a = ParetoSet::singleton(WpPair::with_witness(1, 1, VertexSet::from_vertices(4, [0])));
        let b = ParetoSet::singleton(WpPair::with_witness(2, 2, VertexSet::from_vertices(4, [3])));
        let c = a.cross_sum(&b, 10);
        assert_eq!(c.as_slice()[0].witness.as_ref().unwrap().to_vec(), vec![0, 3]);
        let half = ParetoSet::singleton(WpPair::new(0, 0));
        assert!(a.cross_sum(&half, 10).as_slice()[0].witness.is_none());
    }

    #[test]
    fn dense_and_sorted_paths_agree() {
        // large enough to trigger the dense table
        let a = set(&(0..20).map(|i| (i, 2 * i)).collect::<Vec<_>>());
        let b = set(&(0..20).map(|i| (2 * i, 3 * i)).collect::<Vec<_>>());
        let dense = a.cross_sum(&b, 30);
        let brute = {
            let mut all = Vec::new();
            for x in a.iter() {
                for y in b.iter() {
                    if x.weight + y.weight <= 30 {
                        all.push(WpPair::new(x.weight + y.weight, x.profit + y.profit));
                    }
                }
            }
            ParetoSet::from_pairs(all)
        };
        assert_eq!(dense.pairs(), brute.pairs());
    }

    #[test]
    fn offset_sum_subtracts() {
        let a = set(&[(3, 3), (5, 8)]);
        let b = set(&[(3, 3)]);
        assert_eq!(a.cross_sum_offset(&b, 3, 3, 10).pairs(), vec![(3, 3), (5, 8)]);
        assert_eq!(a.cross_sum_offset(&b, 3, 3, 4).pairs(), vec![(3, 3)]);
    }

    #[test]
    fn shifted_filters_capacity() {
        let s = set(&[(0, 0), (2, 5), (4, 6)]);
        assert_eq!(s.shifted(1, 1, None, 3).pairs(), vec![(1, 1), (3, 6)]);
    }
}
