use std::collections::BTreeMap;

use super::{Graph, GraphError};

pub const DEFAULT_ISO_CAP: usize = 64;

/// Finds a bijection `map` with `u ~ v` in `g` iff `map[u] ~ map[v]` in `h`
/// (loops included), using the default vertex cap.
pub fn isomorphic(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>, GraphError> {
    isomorphic_with_cap(g, h, DEFAULT_ISO_CAP)
}

pub fn isomorphic_with_cap(
    g: &Graph,
    h: &Graph,
    cap: usize,
) -> Result<Option<Vec<usize>>, GraphError> {
    for x in [g, h] {
        if x.n() > cap {
            return Err(GraphError::SizeLimitExceeded { n: x.n(), cap });
        }
    }
    if g.n() != h.n()
        || g.edge_count() != h.edge_count()
        || g.degree_sequence() != h.degree_sequence()
    {
        return Ok(None);
    }
    let (cg, ch) = refine(g, h);
    let mut hist_g = cg.clone();
    let mut hist_h = ch.clone();
    hist_g.sort_unstable();
    hist_h.sort_unstable();
    if hist_g != hist_h {
        return Ok(None);
    }
    let order = search_order(g, &cg);
    let mut search = Search {
        g,
        h,
        cg: &cg,
        ch: &ch,
        order: &order,
        map: vec![usize::MAX; g.n()],
        used: vec![false; h.n()],
    };
    Ok(search.extend(0).then_some(search.map))
}

/// Joint 1-dimensional Weisfeiler–Leman refinement so colors are comparable
/// across the two graphs.
fn refine(g: &Graph, h: &Graph) -> (Vec<usize>, Vec<usize>) {
    let init = |x: &Graph| -> Vec<(usize, bool)> {
        x.vertices().map(|v| (x.degree(v), x.has_loop(v))).collect()
    };
    let mut table = BTreeMap::new();
    let ig = init(g);
    let ih = init(h);
    for key in ig.iter().chain(&ih) {
        let next = table.len();
        table.entry(*key).or_insert(next);
    }
    let mut cg: Vec<usize> = ig.iter().map(|k| table[k]).collect();
    let mut ch: Vec<usize> = ih.iter().map(|k| table[k]).collect();
    let mut classes = table.len();
    loop {
        let sig = |x: &Graph, c: &[usize]| -> Vec<(usize, Vec<usize>)> {
            x.vertices()
                .map(|v| {
                    let mut nc: Vec<usize> = x.neighbors(v).iter().map(|&w| c[w]).collect();
                    nc.sort_unstable();
                    (c[v], nc)
                })
                .collect()
        };
        let sg = sig(g, &cg);
        let sh = sig(h, &ch);
        let mut table = BTreeMap::new();
        for key in sg.iter().chain(&sh) {
            let next = table.len();
            table.entry(key.clone()).or_insert(next);
        }
        let ng: Vec<usize> = sg.iter().map(|k| table[k]).collect();
        let nh: Vec<usize> = sh.iter().map(|k| table[k]).collect();
        let done = table.len() == classes;
        classes = table.len();
        cg = ng;
        ch = nh;
        if done {
            return (cg, ch);
        }
    }
}

/// BFS order over `g`, each component started at its rarest color.
fn search_order(g: &Graph, colors: &[usize]) -> Vec<usize> {
    let mut freq = BTreeMap::new();
    for &c in colors {
        *freq.entry(c).or_insert(0usize) += 1;
    }
    let mut starts: Vec<usize> = g.vertices().collect();
    starts.sort_by_key(|&v| (freq[&colors[v]], v));
    let mut seen = vec![false; g.n()];
    let mut order = Vec::with_capacity(g.n());
    for s in starts {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut head = order.len();
        order.push(s);
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
    }
    order
}

struct Search<'a> {
    g: &'a Graph,
    h: &'a Graph,
    cg: &'a [usize],
    ch: &'a [usize],
    order: &'a [usize],
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        let anchor = self
            .g
            .neighbors(v)
            .iter()
            .copied()
            .find(|&w| self.map[w] != usize::MAX);
        let candidates: Vec<usize> = match anchor {
            Some(u) => self.h.neighbors(self.map[u]).to_vec(),
            None => self.h.vertices().collect(),
        };
        for c in candidates {
            if self.used[c] || self.ch[c] != self.cg[v] || !self.consistent(v, c, depth) {
                continue;
            }
            self.map[v] = c;
            self.used[c] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.map[v] = usize::MAX;
            self.used[c] = false;
        }
        false
    }

    fn consistent(&self, v: usize, c: usize, depth: usize) -> bool {
        if self.g.has_loop(v) != self.h.has_loop(c) {
            return false;
        }
        self.order[..depth]
            .iter()
            .all(|&w| self.g.has_edge(v, w) == self.h.has_edge(c, self.map[w]))
    }
}
