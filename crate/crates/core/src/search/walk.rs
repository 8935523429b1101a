//! Exact path and cycle search on a bitmask graph.
//!
//! Depth-first over vertices in ascending order, so the first hit is the
//! lexicographically least sequence. Two prunings keep it exact:
//! - reachability: the unvisited part reachable from the current end must be
//!   large enough to finish;
//! - twin ordering: among vertices with identical neighbourhoods only the
//!   smallest unvisited one may be entered next.
//!
//! Failed `(visited, end)` states are memoized.

use std::collections::HashSet;

use super::Budget;
use crate::error::Result;

const MEMO_CAP: usize = 1 << 22;

#[inline]
fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Smallest-first twin constraints: `smaller[v]` is the set of twins of `v`
/// (inside `allowed`) with a smaller index.
fn smaller_twins(adj: &[u64], allowed: u64) -> Vec<u64> {
    let n = adj.len();
    let mut out = vec![0u64; n];
    let mut rest = allowed;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let open = adj[v] & allowed;
        let closed = open | bit(v);
        let mut earlier = allowed & (bit(v) - 1);
        while earlier != 0 {
            let u = earlier.trailing_zeros() as usize;
            earlier &= earlier - 1;
            let nu = adj[u] & allowed;
            if nu == open || (nu | bit(u)) == closed {
                out[v] |= bit(u);
            }
        }
    }
    out
}

/// Vertices reachable from `start` through `within`, including `start`.
#[inline]
fn reach(adj: &[u64], start: usize, within: u64) -> u64 {
    let mut seen = bit(start);
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adj[v] & within & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen
}

struct Walker<'a> {
    adj: &'a [u64],
    allowed: u64,
    twins: Vec<u64>,
    /// Closing vertex for cycles.
    close_to: Option<usize>,
    stack: Vec<usize>,
    dead: HashSet<(u64, u8)>,
    budget: &'a mut Budget,
}

impl Walker<'_> {
    fn extend(&mut self, visited: u64, end: usize, remaining: usize) -> Result<bool> {
        if remaining == 0 {
            return Ok(match self.close_to {
                Some(s) => self.adj[end] & bit(s) != 0,
                None => true,
            });
        }
        self.budget.tick()?;
        if self.dead.contains(&(visited, end as u8)) {
            return Ok(false);
        }
        let open = self.allowed & !visited;
        let reachable = reach(self.adj, end, open) & !bit(end);
        let feasible = reachable.count_ones() as usize >= remaining
            && match self.close_to {
                Some(s) => reachable & self.adj[s] != 0,
                None => true,
            };
        if feasible {
            let mut cand = self.adj[end] & open;
            while cand != 0 {
                let v = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                if self.twins[v] & !visited != 0 {
                    continue;
                }
                self.stack.push(v);
                if self.extend(visited | bit(v), v, remaining - 1)? {
                    return Ok(true);
                }
                self.stack.pop();
            }
        }
        if self.dead.len() < MEMO_CAP {
            self.dead.insert((visited, end as u8));
        }
        Ok(false)
    }
}

/// Lexicographically least path on `order` vertices inside `allowed`.
pub fn path_in(adj: &[u64], allowed: u64, order: usize, budget: &mut Budget) -> Result<Option<Vec<usize>>> {
    if order == 0 || (allowed.count_ones() as usize) < order {
        return Ok(None);
    }
    let twins = smaller_twins(adj, allowed);
    let mut walker = Walker {
        adj,
        allowed,
        twins,
        close_to: None,
        stack: Vec::with_capacity(order),
        dead: HashSet::new(),
        budget,
    };
    let mut starts = allowed;
    while starts != 0 {
        let s = starts.trailing_zeros() as usize;
        starts &= starts - 1;
        if walker.twins[s] != 0 {
            continue;
        }
        walker.stack.clear();
        walker.stack.push(s);
        if walker.extend(bit(s), s, order - 1)? {
            return Ok(Some(walker.stack));
        }
    }
    Ok(None)
}

/// Lexicographically least cycle of length `len` inside `allowed`, listed
/// from its smallest vertex.
pub fn cycle_in(adj: &[u64], allowed: u64, len: usize, budget: &mut Budget) -> Result<Option<Vec<usize>>> {
    debug_assert!(len >= 3);
    let mut dead = HashSet::new();
    let mut starts = allowed;
    while starts != 0 {
        let s = starts.trailing_zeros() as usize;
        starts &= starts - 1;
        let above = allowed & !(bit(s) - 1);
        if (above.count_ones() as usize) < len {
            break;
        }
        if (adj[s] & above).count_ones() < 2 {
            continue;
        }
        let twins = smaller_twins(adj, above);
        let mut walker = Walker {
            adj,
            allowed: above,
            twins,
            close_to: Some(s),
            stack: vec![s],
            dead: std::mem::take(&mut dead),
            budget: &mut *budget,
        };
        if walker.extend(bit(s), s, len - 1)? {
            return Ok(Some(walker.stack));
        }
        dead = walker.dead;
    }
    Ok(None)
}
