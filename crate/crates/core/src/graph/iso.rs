//! Exact isomorphism and induced-subgraph search.
//!
//! Isomorphism runs colour refinement on both graphs at once, naming the
//! refined colours by their sorted signatures so that the two colourings stay
//! comparable, then individualises a vertex of the smallest non-singleton
//! cell and backtracks over its possible images. The final answer is always
//! checked edge by edge.

use super::LabeledGraph;

pub fn is_isomorphic(g1: &LabeledGraph, g2: &LabeledGraph) -> bool {
    find_isomorphism(g1, g2).is_some()
}

/// A bijection `map` with `uv ∈ E(g1) ⇔ map[u]map[v] ∈ E(g2)`, if one exists.
pub fn find_isomorphism(g1: &LabeledGraph, g2: &LabeledGraph) -> Option<Vec<usize>> {
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() {
        return None;
    }
    let mut d1 = g1.degrees();
    let mut d2 = g2.degrees();
    let c1: Vec<u32> = d1.iter().map(|&d| d as u32).collect();
    let c2: Vec<u32> = d2.iter().map(|&d| d as u32).collect();
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 {
        return None;
    }
    if g1.n() == 0 {
        return Some(Vec::new());
    }
    let ctx = Pair {
        g1,
        g2,
        adj1: adjacency(g1),
        adj2: adjacency(g2),
    };
    ctx.search(c1, c2)
}

fn adjacency(g: &LabeledGraph) -> Vec<Vec<u32>> {
    (0..g.n()).map(|v| g.neighbors(v).map(|w| w as u32).collect()).collect()
}

struct Pair<'a> {
    g1: &'a LabeledGraph,
    g2: &'a LabeledGraph,
    adj1: Vec<Vec<u32>>,
    adj2: Vec<Vec<u32>>,
}

impl Pair<'_> {
    fn search(&self, c1: Vec<u32>, c2: Vec<u32>) -> Option<Vec<usize>> {
        let (c1, c2, k) = self.refine(c1, c2)?;
        let n = c1.len();
        if k == n {
            return self.check_discrete(&c1, &c2);
        }
        let mut sizes = vec![0usize; k];
        for &c in &c1 {
            sizes[c as usize] += 1;
        }
        let target = (0..k)
            .filter(|&c| sizes[c] > 1)
            .min_by_key(|&c| sizes[c])
            .expect("non-discrete partition has a non-singleton cell") as u32;
        let v = c1.iter().position(|&c| c == target).expect("cell is non-empty");
        let fresh = k as u32;
        for w in (0..n).filter(|&w| c2[w] == target) {
            let mut n1 = c1.clone();
            let mut n2 = c2.clone();
            n1[v] = fresh;
            n2[w] = fresh;
            if let Some(map) = self.search(n1, n2) {
                return Some(map);
            }
        }
        None
    }

    /// Refines both colourings to a common equitable partition. Returns
    /// `None` when the cell sizes of the two graphs disagree.
    fn refine(&self, mut c1: Vec<u32>, mut c2: Vec<u32>) -> Option<(Vec<u32>, Vec<u32>, usize)> {
        let n = c1.len();
        let mut classes = count_classes(&c1, &c2)?;
        let mut buf: Vec<u32> = Vec::new();
        let mut spans: Vec<(usize, usize)> = Vec::with_capacity(2 * n);
        loop {
            buf.clear();
            spans.clear();
            for (colors, adj) in [(&c1, &self.adj1), (&c2, &self.adj2)] {
                for v in 0..n {
                    let start = buf.len();
                    buf.push(colors[v]);
                    buf.extend(adj[v].iter().map(|&w| colors[w as usize]));
                    buf[start + 1..].sort_unstable();
                    spans.push((start, buf.len()));
                }
            }
            let key = |i: usize| &buf[spans[i].0..spans[i].1];
            let mut order: Vec<usize> = (0..2 * n).collect();
            order.sort_unstable_by(|&a, &b| key(a).cmp(key(b)));
            let mut next = vec![0u32; 2 * n];
            let mut id = 0u32;
            for (pos, &i) in order.iter().enumerate() {
                if pos > 0 && key(order[pos - 1]) != key(i) {
                    id += 1;
                }
                next[i] = id;
            }
            let new1 = next[..n].to_vec();
            let new2 = next[n..].to_vec();
            let new_classes = count_classes(&new1, &new2)?;
            c1 = new1;
            c2 = new2;
            if new_classes == classes {
                return Some((c1, c2, new_classes));
            }
            classes = new_classes;
        }
    }

    fn check_discrete(&self, c1: &[u32], c2: &[u32]) -> Option<Vec<usize>> {
        let n = c1.len();
        let mut by_color = vec![0usize; n];
        for (w, &c) in c2.iter().enumerate() {
            by_color[c as usize] = w;
        }
        let map: Vec<usize> = c1.iter().map(|&c| by_color[c as usize]).collect();
        self.g1
            .edges()
            .all(|(u, v)| self.g2.has_edge(map[u], map[v]))
            .then_some(map)
    }
}

/// Number of colour classes, or `None` if the two colourings have different
/// class sizes. Colours are assumed to be dense-ish small integers.
fn count_classes(c1: &[u32], c2: &[u32]) -> Option<usize> {
    let max = c1.iter().chain(c2).copied().max().map_or(0, |m| m as usize + 1);
    let mut counts = vec![0i64; max];
    for &c in c1 {
        counts[c as usize] += 1;
    }
    for &c in c2 {
        counts[c as usize] -= 1;
    }
    if counts.iter().any(|&c| c != 0) {
        return None;
    }
    let mut seen = vec![false; max];
    Some(
        c1.iter()
            .filter(|&&c| !std::mem::replace(&mut seen[c as usize], true))
            .count(),
    )
}

pub fn contains_induced(g: &LabeledGraph, h: &LabeledGraph) -> bool {
    find_induced(g, h).is_some()
}

/// Vertices `w` of `g` such that `h`'s vertex `i ↦ w[i]` is an induced embedding.
pub fn find_induced(g: &LabeledGraph, h: &LabeledGraph) -> Option<Vec<usize>> {
    let k = h.n();
    if k > g.n() {
        return None;
    }
    // place pattern vertices so each one is constrained by earlier ones where possible
    let mut order: Vec<usize> = Vec::with_capacity(k);
    let mut placed = vec![false; k];
    while order.len() < k {
        let next = (0..k)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let links = order.iter().filter(|&&u| h.has_edge(u, v)).count();
                (links, h.degree(v), std::cmp::Reverse(v))
            })
            .expect("unplaced vertex remains");
        placed[next] = true;
        order.push(next);
    }
    let mut image = vec![usize::MAX; k];
    let mut used = vec![false; g.n()];
    if embed(g, h, &order, 0, &mut image, &mut used) {
        Some(image)
    } else {
        None
    }
}

fn embed(
    g: &LabeledGraph,
    h: &LabeledGraph,
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&hv) = order.get(depth) else {
        return true;
    };
    for w in 0..g.n() {
        if used[w] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&hu| h.has_edge(hu, hv) == g.has_edge(image[hu], w));
        if !consistent {
            continue;
        }
        image[hv] = w;
        used[w] = true;
        if embed(g, h, order, depth + 1, image, used) {
            return true;
        }
        used[w] = false;
    }
    image[hv] = usize::MAX;
    false
}
