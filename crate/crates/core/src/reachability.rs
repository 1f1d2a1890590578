//! Rainbow and properly colored reachability.
//!
//! The rainbow engine searches states `(vertex, colors used so far)` reached
//! by rainbow walks. Cutting a closed subwalk out of a rainbow walk leaves a
//! rainbow walk, so a target is reachable by a rainbow walk exactly when it
//! is reachable by a rainbow path; breadth-first order makes the first walk
//! found a shortest one, which is a path.
//!
//! The properly colored engine is the layered pair relation over states
//! `(vertex, color)`: layer `k` relates `(v, c)` to `(v', c')` when some
//! properly colored walk of length at most `k` leaves `v` on an arc of color
//! `c` and enters `v'` on an arc of color `c'`.

use std::collections::HashMap;
use std::hash::Hash;

use crate::digraph::{Color, ColoredDigraph, PathKind, PathWitness, Tournament, Vertex};
use crate::error::Result;
use crate::guards::{self, Guards};

trait ColorSet: Clone + Eq + Hash {
    fn empty(m: usize) -> Self;
    fn contains(&self, c: Color) -> bool;
    fn with(&self, c: Color) -> Self;
    fn to_vec(&self) -> Vec<Color>;
}

impl ColorSet for u64 {
    fn empty(_: usize) -> Self {
        0
    }

    fn contains(&self, c: Color) -> bool {
        self >> c & 1 == 1
    }

    fn with(&self, c: Color) -> Self {
        self | 1 << c
    }

    fn to_vec(&self) -> Vec<Color> {
        (0..64).filter(|&c| self.contains(c)).collect()
    }
}

/// Color set for palettes wider than a machine word.
#[derive(Clone, PartialEq, Eq, Hash)]
struct WideColorSet(Box<[u64]>);

impl ColorSet for WideColorSet {
    fn empty(m: usize) -> Self {
        WideColorSet(vec![0; m.div_ceil(64)].into_boxed_slice())
    }

    fn contains(&self, c: Color) -> bool {
        self.0[c / 64] >> (c % 64) & 1 == 1
    }

    fn with(&self, c: Color) -> Self {
        let mut words = self.0.clone();
        words[c / 64] |= 1 << (c % 64);
        WideColorSet(words)
    }

    fn to_vec(&self) -> Vec<Color> {
        (0..self.0.len() * 64)
            .filter(|&c| self.contains(c))
            .collect()
    }
}

/// A state reached by a rainbow walk from a fixed source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RainbowState {
    pub vertex: Vertex,
    /// Colors used by the walk, ascending.
    pub colors: Vec<Color>,
    /// Length of the breadth-first walk that first reached the state.
    pub walk_len: usize,
}

struct Search<S> {
    states: Vec<(Vertex, S)>,
    depth: Vec<usize>,
    // (predecessor state, color of the arc taken)
    pred: Vec<Option<(usize, Color)>>,
}

impl<S: ColorSet> Search<S> {
    /// Breadth-first search from `source`; stops as soon as `target` is
    /// reached and returns that state's index.
    fn run(d: &ColoredDigraph, source: Vertex, target: Option<Vertex>) -> (Self, Option<usize>) {
        let mut search = Search {
            states: vec![(source, S::empty(d.m()))],
            depth: vec![0],
            pred: vec![None],
        };
        let mut index: HashMap<(Vertex, S), usize> = HashMap::new();
        index.insert(search.states[0].clone(), 0);
        let mut head = 0;
        while head < search.states.len() {
            let (v, used) = search.states[head].clone();
            for arc in d.out_arcs(v) {
                if used.contains(arc.color) {
                    continue;
                }
                let next = (arc.head, used.with(arc.color));
                if index.contains_key(&next) {
                    continue;
                }
                let id = search.states.len();
                index.insert(next.clone(), id);
                search.states.push(next);
                search.depth.push(search.depth[head] + 1);
                search.pred.push(Some((head, arc.color)));
                if Some(arc.head) == target {
                    return (search, Some(id));
                }
            }
            head += 1;
        }
        (search, None)
    }

    fn witness(&self, mut state: usize) -> PathWitness {
        let mut vertices = vec![self.states[state].0];
        let mut colors = Vec::new();
        while let Some((prev, color)) = self.pred[state] {
            vertices.push(self.states[prev].0);
            colors.push(color);
            state = prev;
        }
        vertices.reverse();
        colors.reverse();
        PathWitness {
            kind: PathKind::Rainbow,
            vertices,
            colors,
        }
    }
}

fn uses_word_sets(d: &ColoredDigraph) -> bool {
    d.m() <= 64
}

/// A rainbow `(u, v)`-path, if one exists. Returns `None` when `u == v`.
pub fn rainbow_reachable(d: &ColoredDigraph, u: Vertex, v: Vertex) -> Option<PathWitness> {
    assert!(u < d.n() && v < d.n(), "vertex out of range");
    if u == v {
        return None;
    }
    if uses_word_sets(d) {
        let (search, hit) = Search::<u64>::run(d, u, Some(v));
        hit.map(|s| search.witness(s))
    } else {
        let (search, hit) = Search::<WideColorSet>::run(d, u, Some(v));
        hit.map(|s| search.witness(s))
    }
}

/// Every vertex other than `u` that `u` reaches by a rainbow path.
pub fn rainbow_reachable_set(d: &ColoredDigraph, u: Vertex) -> Vec<bool> {
    fn collect<S: ColorSet>(d: &ColoredDigraph, u: Vertex) -> Vec<bool> {
        let (search, _) = Search::<S>::run(d, u, None);
        let mut reached = vec![false; d.n()];
        for (v, _) in &search.states {
            reached[*v] = true;
        }
        reached[u] = false;
        reached
    }
    if uses_word_sets(d) {
        collect::<u64>(d, u)
    } else {
        collect::<WideColorSet>(d, u)
    }
}

/// All walk states explored from `u`, in discovery order.
pub fn rainbow_walk_states(d: &ColoredDigraph, u: Vertex) -> Vec<RainbowState> {
    fn collect<S: ColorSet>(d: &ColoredDigraph, u: Vertex) -> Vec<RainbowState> {
        let (search, _) = Search::<S>::run(d, u, None);
        search
            .states
            .iter()
            .zip(&search.depth)
            .map(|((vertex, colors), &walk_len)| RainbowState {
                vertex: *vertex,
                colors: colors.to_vec(),
                walk_len,
            })
            .collect()
    }
    if uses_word_sets(d) {
        collect::<u64>(d, u)
    } else {
        collect::<WideColorSet>(d, u)
    }
}

/// Exhaustive simple-path oracle for rainbow reachability.
pub fn rainbow_reachable_bruteforce(
    d: &ColoredDigraph,
    u: Vertex,
    v: Vertex,
) -> Result<Option<PathWitness>> {
    rainbow_reachable_bruteforce_with(d, u, v, &Guards::default())
}

pub fn rainbow_reachable_bruteforce_with(
    d: &ColoredDigraph,
    u: Vertex,
    v: Vertex,
    limits: &Guards,
) -> Result<Option<PathWitness>> {
    guards::check("simple-path oracle", limits.oracle_max_vertices, d.n())?;
    Ok(enumerate_simple_paths(d, u, v, PathKind::Rainbow))
}

/// Exhaustive simple-path oracle for properly colored reachability.
pub fn pc_reachable_bruteforce(
    d: &ColoredDigraph,
    u: Vertex,
    v: Vertex,
) -> Result<Option<PathWitness>> {
    pc_reachable_bruteforce_with(d, u, v, &Guards::default())
}

pub fn pc_reachable_bruteforce_with(
    d: &ColoredDigraph,
    u: Vertex,
    v: Vertex,
    limits: &Guards,
) -> Result<Option<PathWitness>> {
    guards::check("simple-path oracle", limits.oracle_max_vertices, d.n())?;
    Ok(enumerate_simple_paths(d, u, v, PathKind::ProperlyColored))
}

fn enumerate_simple_paths(
    d: &ColoredDigraph,
    u: Vertex,
    v: Vertex,
    kind: PathKind,
) -> Option<PathWitness> {
    struct Dfs<'a> {
        d: &'a ColoredDigraph,
        kind: PathKind,
        target: Vertex,
        on_path: Vec<bool>,
        color_used: Vec<bool>,
        vertices: Vec<Vertex>,
        colors: Vec<Color>,
    }

    impl Dfs<'_> {
        fn go(&mut self, at: Vertex) -> bool {
            if at == self.target {
                return true;
            }
            for arc in self.d.out_arcs(at) {
                if self.on_path[arc.head] {
                    continue;
                }
                let allowed = match self.kind {
                    PathKind::Rainbow => !self.color_used[arc.color],
                    PathKind::ProperlyColored => self.colors.last() != Some(&arc.color),
                };
                if !allowed {
                    continue;
                }
                let rainbow = self.kind == PathKind::Rainbow;
                self.on_path[arc.head] = true;
                self.color_used[arc.color] |= rainbow;
                self.vertices.push(arc.head);
                self.colors.push(arc.color);
                if self.go(arc.head) {
                    return true;
                }
                self.colors.pop();
                self.vertices.pop();
                if rainbow {
                    self.color_used[arc.color] = false;
                }
                self.on_path[arc.head] = false;
            }
            false
        }
    }

    assert!(u < d.n() && v < d.n(), "vertex out of range");
    if u == v {
        return None;
    }
    let mut dfs = Dfs {
        d,
        kind,
        target: v,
        on_path: vec![false; d.n()],
        color_used: vec![false; d.m()],
        vertices: vec![u],
        colors: Vec::new(),
    };
    dfs.on_path[u] = true;
    if !dfs.go(u) {
        return None;
    }
    Some(PathWitness {
        kind,
        vertices: dfs.vertices,
        colors: dfs.colors,
    })
}

/// A `(vertex, color)` state of the layered construction. As a source it
/// records the first arc's color, as a target the last arc's color.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PcState {
    pub vertex: Vertex,
    pub last_color: Color,
}

impl PcState {
    pub fn new(vertex: Vertex, last_color: Color) -> Self {
        PcState { vertex, last_color }
    }
}

/// A properly colored walk: vertices may repeat.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredWalk {
    pub vertices: Vec<Vertex>,
    pub colors: Vec<Color>,
}

impl ColoredWalk {
    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        self.vertices.iter().all(|v| seen.insert(*v))
    }

    /// The walk as a properly colored path witness, if it repeats no vertex.
    pub fn into_path(self) -> Option<PathWitness> {
        self.is_simple().then_some(PathWitness {
            kind: PathKind::ProperlyColored,
            vertices: self.vertices,
            colors: self.colors,
        })
    }
}

const NO_VIA: u32 = u32::MAX;

/// The layered relation `D_0 ⊆ D_1 ⊆ … ⊆ D_k` over pairs of [`PcState`]s.
///
/// Each pair stores the first layer containing it and, for pairs added by
/// extension, the intermediate state it was extended through. Layer `k` is
/// computed from the pairs first added at layer `k - 1` only; pairs present
/// earlier were already extended when their own layer was built, so every
/// `D_k` equals the one produced by scanning all of `D_{k-1}`.
#[derive(Debug, Clone)]
pub struct LayeredPcRelation {
    n: usize,
    m: usize,
    // out-arcs per vertex as (head, color), input order
    out: Vec<Vec<(Vertex, Color)>>,
    // 0 = absent, otherwise the first layer containing the pair
    added_at: Vec<u32>,
    via: Vec<u32>,
    // pairs first added at each layer; index 0 is the empty D_0
    new_pairs: Vec<Vec<usize>>,
    work: u64,
}

impl LayeredPcRelation {
    /// Builds layers `D_1..=D_{max_layer}` for any colored digraph.
    pub fn build(d: &ColoredDigraph, max_layer: usize) -> Self {
        let n = d.n();
        let m = d.m();
        let states = n * m;
        let mut relation = LayeredPcRelation {
            n,
            m,
            out: (0..n)
                .map(|v| d.out_arcs(v).map(|a| (a.head, a.color)).collect())
                .collect(),
            added_at: vec![0; states * states],
            via: vec![NO_VIA; states * states],
            new_pairs: vec![Vec::new()],
            work: 0,
        };
        if max_layer == 0 {
            return relation;
        }
        let mut base = Vec::new();
        for arc in d.arcs() {
            let pair = relation.pair_index(
                PcState::new(arc.tail, arc.color),
                PcState::new(arc.head, arc.color),
            );
            relation.added_at[pair] = 1;
            base.push(pair);
            relation.work += 1;
        }
        relation.new_pairs.push(base);
        while relation.layer() < max_layer {
            relation.extend_one_layer();
        }
        relation
    }

    /// Computes `D_{k+1}` from `D_k`; returns how many pairs it added.
    pub fn extend_one_layer(&mut self) -> usize {
        let next = self.layer() + 1;
        if next == 1 {
            // D_1 needs the arcs themselves; only `build` starts from D_0.
            self.new_pairs.push(Vec::new());
            return 0;
        }
        let states = self.n * self.m;
        let mut added = Vec::new();
        let frontier = std::mem::take(&mut self.new_pairs[next - 1]);
        for &pair in &frontier {
            let (from, mid) = (pair / states, pair % states);
            let (mid_vertex, mid_color) = (mid / self.m, mid % self.m);
            for &(head, color) in &self.out[mid_vertex] {
                self.work += 1;
                if color == mid_color {
                    continue;
                }
                let extended = from * states + head * self.m + color;
                if self.added_at[extended] == 0 {
                    self.added_at[extended] = next as u32;
                    self.via[extended] = mid as u32;
                    added.push(extended);
                }
            }
        }
        self.new_pairs[next - 1] = frontier;
        let count = added.len();
        self.new_pairs.push(added);
        count
    }

    /// Index `k` of the last layer built.
    pub fn layer(&self) -> usize {
        self.new_pairs.len() - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn color_count(&self) -> usize {
        self.m
    }

    fn pair_index(&self, from: PcState, to: PcState) -> usize {
        let states = self.n * self.m;
        (from.vertex * self.m + from.last_color) * states + to.vertex * self.m + to.last_color
    }

    fn in_range(&self, s: PcState) -> bool {
        s.vertex < self.n && s.last_color < self.m
    }

    /// Whether the pair is in the last layer built.
    pub fn contains(&self, from: PcState, to: PcState) -> bool {
        self.contains_at(from, to, self.layer())
    }

    /// Whether the pair is in `D_k`.
    pub fn contains_at(&self, from: PcState, to: PcState, k: usize) -> bool {
        if !self.in_range(from) || !self.in_range(to) {
            return false;
        }
        match self.added_at[self.pair_index(from, to)] {
            0 => false,
            first => first as usize <= k,
        }
    }

    /// First layer containing the pair.
    pub fn first_layer(&self, from: PcState, to: PcState) -> Option<usize> {
        if !self.in_range(from) || !self.in_range(to) {
            return None;
        }
        match self.added_at[self.pair_index(from, to)] {
            0 => None,
            first => Some(first as usize),
        }
    }

    /// Number of pairs in `D_k`.
    pub fn layer_size(&self, k: usize) -> usize {
        self.new_pairs
            .iter()
            .take(k.min(self.layer()) + 1)
            .map(Vec::len)
            .sum()
    }

    /// Elementary steps spent so far: one per base arc plus one per
    /// (pair, out-arc) extension check.
    pub fn work(&self) -> u64 {
        self.work
    }

    /// All pairs of the last layer, in index order.
    pub fn pairs(&self) -> impl Iterator<Item = (PcState, PcState)> + '_ {
        let states = self.n * self.m;
        let m = self.m;
        self.added_at
            .iter()
            .enumerate()
            .filter(|(_, &a)| a != 0)
            .map(move |(i, _)| {
                let (f, t) = (i / states, i % states);
                (PcState::new(f / m, f % m), PcState::new(t / m, t % m))
            })
    }

    /// Whether some pair `((u, c'), (v, c''))` is present, `u != v`.
    pub fn reachable(&self, u: Vertex, v: Vertex) -> bool {
        u != v
            && (0..self.m).any(|first| {
                (0..self.m).any(|last| self.contains(PcState::new(u, first), PcState::new(v, last)))
            })
    }

    /// Reconstructs the properly colored walk recorded for a pair.
    pub fn walk(&self, from: PcState, to: PcState) -> Option<ColoredWalk> {
        if !self.contains(from, to) {
            return None;
        }
        let states = self.n * self.m;
        let mut rev_vertices = vec![to.vertex];
        let mut rev_colors = vec![to.last_color];
        let from_index = from.vertex * self.m + from.last_color;
        let mut pair = self.pair_index(from, to);
        while self.via[pair] != NO_VIA {
            let mid = self.via[pair] as usize;
            rev_vertices.push(mid / self.m);
            rev_colors.push(mid % self.m);
            pair = from_index * states + mid;
        }
        rev_vertices.push(from.vertex);
        rev_vertices.reverse();
        rev_colors.reverse();
        Some(ColoredWalk {
            vertices: rev_vertices,
            colors: rev_colors,
        })
    }

    /// Some recorded walk from `u` to `v`, preferring the earliest layer and
    /// then the smallest color pair.
    pub fn walk_between(&self, u: Vertex, v: Vertex) -> Option<ColoredWalk> {
        let mut best: Option<(usize, PcState, PcState)> = None;
        for first in 0..self.m {
            for last in 0..self.m {
                let (f, t) = (PcState::new(u, first), PcState::new(v, last));
                if let Some(layer) = self.first_layer(f, t) {
                    if best.is_none_or(|(b, _, _)| layer < b) {
                        best = Some((layer, f, t));
                    }
                }
            }
        }
        best.and_then(|(_, f, t)| self.walk(f, t))
    }
}

/// Layers `D_1..=D_{n-1}` of a tournament.
pub fn pc_closure_layers(t: &Tournament) -> LayeredPcRelation {
    LayeredPcRelation::build(t, t.n().saturating_sub(1))
}

/// Whether the last layer of the construction relates `u` to `v`.
pub fn pc_reachable(t: &Tournament, u: Vertex, v: Vertex) -> bool {
    pc_closure_layers(t).reachable(u, v)
}
