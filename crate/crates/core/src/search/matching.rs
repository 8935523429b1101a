//! Maximum matching in a general graph (Edmonds' blossom algorithm).

use std::collections::VecDeque;

const NONE: usize = usize::MAX;

struct Blossom<'a> {
    adj: &'a [u64],
    allowed: u64,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl Blossom<'_> {
    fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> {
        let mut m = self.adj[v] & self.allowed;
        std::iter::from_fn(move || {
            (m != 0).then(|| {
                let u = m.trailing_zeros() as usize;
                m &= m - 1;
                u
            })
        })
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut on_path = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            on_path[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if on_path[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Returns the free endpoint of an augmenting path from `root`.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            let nbrs: Vec<usize> = self.neighbours(v).collect();
            for to in nbrs {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.used[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }
}

/// A maximum matching of the graph induced on `allowed`, as pairs `(u, v)`
/// with `u < v` sorted ascending.
pub fn maximum_matching(adj: &[u64], allowed: u64) -> Vec<(usize, usize)> {
    let n = adj.len();
    let mut b = Blossom {
        adj,
        allowed,
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: (0..n).collect(),
        used: vec![false; n],
        in_blossom: vec![false; n],
        queue: VecDeque::new(),
    };
    let members = || (0..n).filter(move |&v| allowed >> v & 1 == 1);
    for v in members() {
        if b.mate[v] == NONE {
            if let Some(u) = b.neighbours(v).find(|&u| b.mate[u] == NONE) {
                b.mate[v] = u;
                b.mate[u] = v;
            }
        }
    }
    for root in members() {
        if b.mate[root] != NONE {
            continue;
        }
        if let Some(mut v) = b.find_path(root) {
            while v != NONE {
                let pv = b.parent[v];
                let next = b.mate[pv];
                b.mate[v] = pv;
                b.mate[pv] = v;
                v = next;
            }
        }
    }
    members()
        .filter(|&v| b.mate[v] != NONE && v < b.mate[v])
        .map(|v| (v, b.mate[v]))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_edges(n: usize, edges: &[(usize, usize)]) -> Vec<u64> {
        let mut adj = vec![0; n];
        for &(u, v) in edges {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        adj
    }

    #[test]
    fn odd_cycle_with_pendant() {
        // 5-cycle with a pendant at 0: greedy picks (0,1),(2,3) and leaves
        // 4 and 5 unmatched, so one augmentation is needed.
        let adj = from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)]);
        assert_eq!(maximum_matching(&adj, 0b111111).len(), 3);
    }

    #[test]
    fn star_matches_once() {
        let adj = from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        assert_eq!(maximum_matching(&adj, 0b11111), vec![(0, 1)]);
    }

    #[test]
    fn restricted_to_allowed() {
        let adj = from_edges(4, &[(0, 1), (2, 3)]);
        assert_eq!(maximum_matching(&adj, 0b1101), vec![(2, 3)]);
    }
}
