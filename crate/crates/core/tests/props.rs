//! Randomized cross-checks of the exact algorithms against brute force on
//! small graphs, plus structural checks over the generator corpus.

use penta2p_core::generators::{
    dodecahedron, gadget_f, gadget_h, prism, stacked_triangulation, theorem2_pentagulation,
};
use penta2p_core::ham::{hamiltonian_cycle, hamiltonian_path, lift_path, WitnessKind};
use penta2p_core::stellation::{check_consecutive_property, check_wheel_property, stellate};
use penta2p_core::{Graph, VertexSet};
use proptest::prelude::*;

const BUDGET: u64 = 10_000_000;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let m = pairs.len();
        proptest::collection::vec(any::<bool>(), m).prop_map(move |mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .zip(&mask)
                .filter(|(_, &keep)| keep)
                .map(|(&e, _)| e)
                .collect();
            Graph::build(n, &edges).unwrap()
        })
    })
}

fn connected_after_removal(g: &Graph, removed: u32) -> bool {
    let n = g.n();
    let keep: Vec<usize> = (0..n).filter(|&v| removed >> v & 1 == 0).collect();
    if keep.is_empty() {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![keep[0]];
    seen[keep[0]] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if removed >> w & 1 == 0 && !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == keep.len()
}

fn brute_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if g.is_complete() {
        return n.saturating_sub(1);
    }
    (0u32..1 << n)
        .filter(|&s| (s.count_ones() as usize) < n - 1 && !connected_after_removal(g, s))
        .map(|s| s.count_ones() as usize)
        .min()
        .expect("non-complete graph has a separating set")
}

fn brute_girth(g: &Graph) -> Option<usize> {
    // shortest cycle through edge (u, v) = dist(u, v) without that edge + 1
    let n = g.n();
    let mut best: Option<usize> = None;
    for (u, v) in g.edges() {
        let mut dist = vec![usize::MAX; n];
        dist[u] = 0;
        let mut queue = std::collections::VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if (x, y) == (u, v) || (y, x) == (u, v) {
                    continue;
                }
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        if dist[v] != usize::MAX {
            let c = dist[v] + 1;
            if best.is_none_or(|b| c < b) {
                best = Some(c);
            }
        }
    }
    best
}

fn brute_max_matching(g: &Graph) -> usize {
    fn rec(g: &Graph, used: u32, from: usize) -> usize {
        let mut best = 0;
        for u in from..g.n() {
            if used >> u & 1 == 1 {
                continue;
            }
            for &v in g.neighbors(u) {
                if v > u && used >> v & 1 == 0 {
                    let sub = rec(g, used | 1 << u | 1 << v, u + 1);
                    best = best.max(1 + sub);
                }
            }
        }
        best
    }
    rec(g, 0, 0)
}

fn brute_ham_cycle(g: &Graph) -> bool {
    let n = g.n();
    if n < 3 {
        return false;
    }
    let mut perm: Vec<usize> = (1..n).collect();
    permute(&mut perm, 0, &mut |order| {
        g.has_edge(0, order[0])
            && g.has_edge(0, *order.last().unwrap())
            && order.windows(2).all(|p| g.has_edge(p[0], p[1]))
    })
}

fn brute_ham_path(g: &Graph, s: usize, t: usize) -> bool {
    let n = g.n();
    let mut mid: Vec<usize> = (0..n).filter(|&v| v != s && v != t).collect();
    permute(&mut mid, 0, &mut |order| {
        let first = order.first().copied().unwrap_or(t);
        let last = order.last().copied().unwrap_or(t);
        g.has_edge(s, first)
            && (order.is_empty() || g.has_edge(last, t))
            && order.windows(2).all(|p| g.has_edge(p[0], p[1]))
    })
}

fn permute(v: &mut Vec<usize>, k: usize, check: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if k == v.len() {
        return check(v);
    }
    for i in k..v.len() {
        v.swap(k, i);
        if permute(v, k + 1, check) {
            v.swap(k, i);
            return true;
        }
        v.swap(k, i);
    }
    false
}

proptest! {
    #[test]
    fn connectivity_matches_brute_force(g in arb_graph(7)) {
        prop_assert_eq!(g.vertex_connectivity(), brute_connectivity(&g));
    }

    #[test]
    fn girth_matches_brute_force(g in arb_graph(8)) {
        prop_assert_eq!(g.girth(), brute_girth(&g));
    }

    #[test]
    fn components_partition_vertices(g in arb_graph(10)) {
        let comps = g.components();
        let mut all = VertexSet::new();
        for c in &comps {
            for &v in c {
                prop_assert!(all.insert(v), "component overlap at {}", v);
            }
        }
        prop_assert_eq!(all.len(), g.n());
        // no edge joins two distinct components
        for (u, v) in g.edges() {
            let cu = comps.iter().position(|c| c.contains(&u));
            let cv = comps.iter().position(|c| c.contains(&v));
            prop_assert_eq!(cu, cv);
        }
    }

    #[test]
    fn matching_bound_dominates_true_maximum(
        g in arb_graph(9),
        cut_mask in any::<u32>(),
    ) {
        let s: VertexSet = (0..g.n()).filter(|&v| cut_mask >> v & 1 == 1).collect();
        if !s.is_empty() && s.len() < g.n() {
            let (_odd, bound) = g.matching_upper_bound(&s);
            prop_assert!(brute_max_matching(&g) <= bound);
        }
    }

    #[test]
    fn cycle_search_matches_brute_force(g in arb_graph(7)) {
        if g.n() >= 3 {
            let found = hamiltonian_cycle(&g, BUDGET).unwrap();
            prop_assert_eq!(found.is_some(), brute_ham_cycle(&g));
            if let Some(w) = found {
                prop_assert!(w.verify(&g));
            }
        }
    }

    #[test]
    fn path_search_matches_brute_force(g in arb_graph(7), seed in any::<u64>()) {
        if g.n() >= 2 {
            let s = (seed as usize) % g.n();
            let t = (s + 1 + (seed / 64) as usize % (g.n() - 1)) % g.n();
            let found = hamiltonian_path(&g, s, t, BUDGET).unwrap();
            prop_assert_eq!(found.is_some(), brute_ham_path(&g, s, t));
            if let Some(w) = found {
                prop_assert!(w.verify(&g));
                prop_assert_eq!(w.vertices[0], s);
                prop_assert_eq!(*w.vertices.last().unwrap(), t);
            }
        }
    }
}

#[test]
fn lemma_checks_over_corpus() {
    let mut maps = vec![dodecahedron()];
    for s in 4..=8 {
        maps.push(prism(s).unwrap());
    }
    for m in &maps {
        let s = stellate(m).unwrap();
        assert!(s.map.is_triangulation().unwrap());
        assert!(check_wheel_property(&s));
        assert!(check_consecutive_property(&s));
        let added: usize = m.faces().unwrap().iter().map(|f| f.len()).sum();
        assert_eq!(s.map.edge_count(), m.edge_count() + added);
    }
}

#[test]
fn lift_is_sound_over_stellations() {
    for m in [dodecahedron(), prism(4).unwrap(), prism(5).unwrap()] {
        let s = stellate(&m).unwrap();
        // lifting against the complete shortcut graph always succeeds, so
        // the witness over initial vertices must verify there
        let pairs: Vec<(usize, usize)> = (0..s.initial_count())
            .flat_map(|u| (u + 1..s.initial_count()).map(move |v| (u, v)))
            .collect();
        let complete = Graph::build(s.initial_count(), &pairs).unwrap();
        let w = hamiltonian_path(&s.map.graph(), 0, 1, BUDGET)
            .unwrap()
            .expect("stellations of the corpus are traceable");
        let lifted = lift_path(&w, &s, &complete).unwrap();
        assert_eq!(lifted.kind, WitnessKind::Path);
        assert_eq!(lifted.vertices.len(), s.initial_count());
        assert!(lifted.verify(&complete));
    }
}

#[test]
fn planted_family_counts() {
    for (l, gadget, interior) in [(5, gadget_h(), 22), (6, gadget_f(), 25)] {
        let host = stacked_triangulation(l).unwrap();
        let faces = host.faces().unwrap().len();
        assert_eq!(faces, 2 * l - 4);
        let m = theorem2_pentagulation(l, &gadget).unwrap();
        assert_eq!(m.n(), l + interior * (2 * l - 4));
        assert!(m.is_pentagulation().unwrap());
        assert_eq!(m.graph().vertex_connectivity(), 3);
    }
}
