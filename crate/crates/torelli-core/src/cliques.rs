//! Cliques of finite simple graphs on bitset rows.
//!
//! Enumeration is Bron–Kerbosch with Tomita pivoting; vertices are always
//! taken in increasing order so results are reproducible.

use alloc::vec;
use alloc::vec::Vec;

/// A simple graph on `0..n` with bitset adjacency rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    rows: Vec<Vec<u64>>,
}

fn words(n: usize) -> usize {
    n.div_ceil(64)
}

fn bits(set: &[u64]) -> impl Iterator<Item = usize> + '_ {
    set.iter().enumerate().flat_map(|(k, &w)| {
        let mut w = w;
        core::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(64 * k + b)
        })
    })
}

fn count(set: &[u64]) -> usize {
    set.iter().map(|w| w.count_ones() as usize).sum()
}

fn and(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { n, rows: vec![vec![0; words(n)]; n] }
    }

    /// Graph with an edge between `u != v` whenever `adjacent(u, v)`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.rows[u][v / 64] |= 1 << (v % 64);
            self.rows[v][u / 64] |= 1 << (u % 64);
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u][v / 64] >> (v % 64) & 1 == 1
    }

    pub fn neighbours(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        bits(&self.rows[u])
    }

    pub fn degree(&self, u: usize) -> usize {
        count(&self.rows[u])
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).sum::<usize>() / 2
    }

    fn full(&self) -> Vec<u64> {
        let mut s = vec![0u64; words(self.n)];
        for v in 0..self.n {
            s[v / 64] |= 1 << (v % 64);
        }
        s
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut k = 0;
            while k < comp.len() {
                let u = comp[k];
                k += 1;
                for v in self.neighbours(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// All maximal cliques, each sorted, in the order found; at most `cap`
    /// of them. The flag reports whether the cap cut the search short.
    pub fn maximal_cliques(&self, cap: usize) -> (Vec<Vec<usize>>, bool) {
        let mut out = Vec::new();
        let mut r = Vec::new();
        let truncated = !self.bk(&mut r, self.full(), vec![0; words(self.n)], &mut out, cap);
        (out, truncated)
    }

    /// Returns false once the cap is hit.
    fn bk(&self, r: &mut Vec<usize>, p: Vec<u64>, x: Vec<u64>, out: &mut Vec<Vec<usize>>, cap: usize) -> bool {
        if p.iter().all(|&w| w == 0) {
            if x.iter().all(|&w| w == 0) {
                if out.len() >= cap {
                    return false;
                }
                let mut c = r.clone();
                c.sort_unstable();
                out.push(c);
            }
            return true;
        }
        let pivot = bits(&p)
            .chain(bits(&x))
            .max_by_key(|&u| (count(&and(&p, &self.rows[u])), core::cmp::Reverse(u)))
            .unwrap_or(0);
        let mut p = p;
        let mut x = x;
        let cand: Vec<usize> = bits(&p).filter(|&v| !self.has_edge(pivot, v)).collect();
        for v in cand {
            r.push(v);
            let ok = self.bk(r, and(&p, &self.rows[v]), and(&x, &self.rows[v]), out, cap);
            r.pop();
            if !ok {
                return false;
            }
            p[v / 64] &= !(1 << (v % 64));
            x[v / 64] |= 1 << (v % 64);
        }
        true
    }

    /// A largest clique, least in lexicographic order of discovery.
    pub fn maximum_clique(&self) -> Vec<usize> {
        let mut best = Vec::new();
        let mut r = Vec::new();
        self.max_search(&mut r, self.full(), &mut best);
        best.sort_unstable();
        best
    }

    fn max_search(&self, r: &mut Vec<usize>, p: Vec<u64>, best: &mut Vec<usize>) {
        let np = count(&p);
        if np == 0 {
            if r.len() > best.len() {
                *best = r.clone();
            }
            return;
        }
        if r.len() + np <= best.len() {
            return;
        }
        let mut p = p;
        for v in bits(&p.clone()) {
            if r.len() + count(&p) <= best.len() {
                return;
            }
            r.push(v);
            self.max_search(r, and(&p, &self.rows[v]), best);
            r.pop();
            p[v / 64] &= !(1 << (v % 64));
        }
    }

    /// Whether `set` is a clique.
    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(k, &u)| set[k + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Graphviz text with the given vertex labels.
    pub fn to_dot(&self, name: &str, labels: &[alloc::string::String]) -> alloc::string::String {
        use core::fmt::Write;
        let mut s = alloc::string::String::new();
        let _ = writeln!(s, "graph {name} {{");
        for u in 0..self.n {
            let l = labels.get(u).map(|x| x.as_str()).unwrap_or("");
            let _ = writeln!(s, "  {u} [label=\"{l}\"];");
        }
        for u in 0..self.n {
            for v in self.neighbours(u) {
                if u < v {
                    let _ = writeln!(s, "  {u} -- {v};");
                }
            }
        }
        s.push_str("}\n");
        s
    }
}
