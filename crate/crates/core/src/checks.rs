//! Coloring hypotheses on tournaments and digraphs.

use itertools::Itertools;

use crate::digraph::{ColoredDigraph, PathWitness, Tournament, Vertex};
use crate::error::{Error, Result};
use crate::generators::is_t_star_shaped;
use crate::guards::{self, Guards};
use crate::reachability::rainbow_reachable;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypothesisReport {
    pub satisfied: bool,
    pub violating_subset: Option<Vec<Vertex>>,
    /// Distinct colors on the violating subset, 0 when satisfied.
    pub colors_found: usize,
}

impl HypothesisReport {
    fn satisfied() -> Self {
        HypothesisReport {
            satisfied: true,
            violating_subset: None,
            colors_found: 0,
        }
    }
}

/// A lower bound on the number of colors of strongly connected induced
/// subtournaments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorThreshold {
    /// Every strongly connected `k`-subtournament needs at least
    /// `k - deficit` colors.
    pub deficit: usize,
    /// Smallest subset size examined.
    pub min_size: usize,
    /// Vertices every examined subset must contain.
    pub required: Vec<Vertex>,
}

impl ColorThreshold {
    /// At least `k - 1` colors for every `k >= 3`.
    pub fn theorem2() -> Self {
        ColorThreshold {
            deficit: 1,
            min_size: 3,
            required: Vec::new(),
        }
    }

    /// At least `k - 2` colors for every `k >= 4`.
    pub fn fk() -> Self {
        ColorThreshold {
            deficit: 2,
            min_size: 4,
            required: Vec::new(),
        }
    }
}

/// Out-neighbor masks and arc colors, precomputed for subset scans.
struct SubsetScanner<'a> {
    t: &'a ColoredDigraph,
    out: Vec<u64>,
    inn: Vec<u64>,
}

impl<'a> SubsetScanner<'a> {
    fn new(t: &'a ColoredDigraph) -> Self {
        let mut out = vec![0u64; t.n()];
        let mut inn = vec![0u64; t.n()];
        for a in t.arcs() {
            out[a.tail] |= 1 << a.head;
            inn[a.head] |= 1 << a.tail;
        }
        SubsetScanner { t, out, inn }
    }

    fn closure(&self, start: Vertex, set: u64, step: &[u64]) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = step[v] & set & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen
    }

    fn strongly_connected(&self, set: u64) -> bool {
        let start = set.trailing_zeros() as usize;
        self.closure(start, set, &self.out) == set && self.closure(start, set, &self.inn) == set
    }

    fn colors(&self, subset: &[Vertex]) -> usize {
        let mut seen = vec![false; self.t.m()];
        let mut count = 0;
        for (i, &u) in subset.iter().enumerate() {
            for &v in &subset[i + 1..] {
                let c = self.t.color(u, v).or_else(|| self.t.color(v, u));
                if let Some(c) = c {
                    if !seen[c] {
                        seen[c] = true;
                        count += 1;
                    }
                }
            }
        }
        count
    }
}

/// First strongly connected induced subtournament, in size-then-lex order,
/// whose color count is below the threshold.
pub fn check_color_threshold(
    t: &Tournament,
    threshold: &ColorThreshold,
    limits: &Guards,
) -> Result<HypothesisReport> {
    guards::check(
        "subset enumeration",
        limits.hypothesis_max_vertices.min(64),
        t.n(),
    )?;
    let n = t.n();
    if let Some(&v) = threshold.required.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    let required: Vec<Vertex> = threshold
        .required
        .iter()
        .copied()
        .sorted()
        .dedup()
        .collect();
    let free: Vec<Vertex> = (0..n).filter(|v| !required.contains(v)).collect();
    let scanner = SubsetScanner::new(t);
    for k in threshold.min_size.max(required.len()).max(1)..=n {
        let mut found = None;
        for extra in free.iter().copied().combinations(k - required.len()) {
            let subset: Vec<Vertex> = required.iter().copied().merge(extra).collect();
            let mask = subset.iter().fold(0u64, |acc, &v| acc | 1 << v);
            if !scanner.strongly_connected(mask) {
                continue;
            }
            let colors = scanner.colors(&subset);
            if colors + threshold.deficit < k {
                // merged subsets are not produced in lex order; keep the least
                if found
                    .as_ref()
                    .is_none_or(|(s, _): &(Vec<Vertex>, usize)| subset < *s)
                {
                    found = Some((subset, colors));
                }
            }
        }
        if let Some((subset, colors)) = found {
            return Ok(HypothesisReport {
                satisfied: false,
                violating_subset: Some(subset),
                colors_found: colors,
            });
        }
    }
    Ok(HypothesisReport::satisfied())
}

/// Every strongly connected `k`-subtournament with `k >= 3` has at least
/// `k - 1` colors.
pub fn check_theorem2_hypothesis(t: &Tournament) -> Result<HypothesisReport> {
    check_color_threshold(t, &ColorThreshold::theorem2(), &Guards::default())
}

/// No monochromatic triangle, and every strongly connected
/// `k`-subtournament with `k >= 4` has at least `k - 2` colors.
pub fn check_fk_hypothesis(t: &Tournament) -> Result<HypothesisReport> {
    if let Some(tri) = find_triangle(t, |colors| colors == 1) {
        return Ok(HypothesisReport {
            satisfied: false,
            violating_subset: Some(tri.iter().copied().sorted().collect()),
            colors_found: 1,
        });
    }
    check_color_threshold(t, &ColorThreshold::fk(), &Guards::default())
}

/// A directed triangle as `[a, b, c]` with `a -> b -> c -> a` and `a` least.
pub type Triangle = [Vertex; 3];

fn find_triangle(t: &Tournament, bad: impl Fn(usize) -> bool) -> Option<Triangle> {
    let n = t.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let cycle = if t.beats(a, b) && t.beats(b, c) && t.beats(c, a) {
                    [a, b, c]
                } else if t.beats(a, c) && t.beats(c, b) && t.beats(b, a) {
                    [a, c, b]
                } else {
                    continue;
                };
                let colors = [
                    t.color(cycle[0], cycle[1]),
                    t.color(cycle[1], cycle[2]),
                    t.color(cycle[2], cycle[0]),
                ]
                .into_iter()
                .unique()
                .count();
                if bad(colors) {
                    return Some(cycle);
                }
            }
        }
    }
    None
}

/// First directed triangle, by vertex set in lex order, with fewer than
/// three colors.
pub fn check_all_triangles_rainbow(t: &Tournament) -> Option<Triangle> {
    find_triangle(t, |colors| colors < 3)
}

pub fn find_monochromatic_triangle(t: &Tournament) -> Option<Triangle> {
    find_triangle(t, |colors| colors == 1)
}

/// A cycle that repeats a color, as its vertex sequence starting at its
/// least vertex. Cycles are searched by least vertex, then depth first
/// along out-arcs in input order.
pub fn check_all_cycles_rainbow(d: &ColoredDigraph) -> Result<Option<Vec<Vertex>>> {
    check_all_cycles_rainbow_with(d, &Guards::default())
}

pub fn check_all_cycles_rainbow_with(
    d: &ColoredDigraph,
    limits: &Guards,
) -> Result<Option<Vec<Vertex>>> {
    guards::check("cycle enumeration", limits.cycle_max_vertices, d.n())?;
    for start in d.vertices() {
        let mut search = CycleSearch {
            d,
            start,
            on_path: vec![false; d.n()],
            color_count: vec![0; d.m()],
            repeats: 0,
            path: vec![start],
        };
        search.on_path[start] = true;
        if let Some(cycle) = search.dfs(start) {
            return Ok(Some(cycle));
        }
    }
    Ok(None)
}

struct CycleSearch<'a> {
    d: &'a ColoredDigraph,
    start: Vertex,
    on_path: Vec<bool>,
    color_count: Vec<usize>,
    repeats: usize,
    path: Vec<Vertex>,
}

impl CycleSearch<'_> {
    fn dfs(&mut self, v: Vertex) -> Option<Vec<Vertex>> {
        if self.repeats > 0 {
            // any way back to the start now closes a bad cycle
            return self.close_from(v);
        }
        for a in self.d.out_arcs(v) {
            if a.head < self.start {
                continue;
            }
            let repeat = self.color_count[a.color] > 0;
            if a.head == self.start {
                if repeat {
                    return Some(self.path.clone());
                }
                continue;
            }
            if self.on_path[a.head] {
                continue;
            }
            self.color_count[a.color] += 1;
            self.repeats += usize::from(repeat);
            self.on_path[a.head] = true;
            self.path.push(a.head);
            let found = self.dfs(a.head);
            self.path.pop();
            self.on_path[a.head] = false;
            self.repeats -= usize::from(repeat);
            self.color_count[a.color] -= 1;
            if found.is_some() {
                return found;
            }
        }
        None
    }

    /// Shortest way from `v` back to the start avoiding the current path.
    fn close_from(&self, v: Vertex) -> Option<Vec<Vertex>> {
        let n = self.d.n();
        let mut parent = vec![usize::MAX; n];
        let mut queue = std::collections::VecDeque::from([v]);
        parent[v] = v;
        while let Some(u) = queue.pop_front() {
            for a in self.d.out_arcs(u) {
                if a.head == self.start {
                    let mut tail = vec![];
                    let mut w = u;
                    while w != v {
                        tail.push(w);
                        w = parent[w];
                    }
                    tail.reverse();
                    let mut cycle = self.path.clone();
                    cycle.extend(tail);
                    return Some(cycle);
                }
                if a.head > self.start && !self.on_path[a.head] && parent[a.head] == usize::MAX {
                    parent[a.head] = u;
                    queue.push_back(a.head);
                }
            }
        }
        None
    }
}

/// The least `i` in `1..=t` with a rainbow `(v_i, v_{i-1})`-path, for a
/// tournament on `v_0..v_t` with `v_i -> v_j` for `i < j` except `v_t -> v_0`,
/// in which every strongly connected `k`-subtournament has at least `k - 1`
/// colors. Every strongly connected subtournament of this shape contains
/// `v_0` and `v_t`, so only those subsets are examined.
pub fn check_lemma1_instance(t: &Tournament) -> Result<Option<(usize, PathWitness)>> {
    if !is_t_star_shaped(t) {
        return Err(Error::Precondition(
            "expected v_i -> v_j for i < j except a single arc v_t -> v_0".into(),
        ));
    }
    let last = t.n() - 1;
    let threshold = ColorThreshold {
        deficit: 1,
        min_size: 3,
        required: vec![0, last],
    };
    let report = check_color_threshold(t, &threshold, &Guards::default())?;
    if let Some(subset) = report.violating_subset {
        return Err(Error::Precondition(format!(
            "strongly connected subtournament {subset:?} has only {} colors",
            report.colors_found
        )));
    }
    Ok((1..=last).find_map(|i| rainbow_reachable(t, i, i - 1).map(|p| (i, p))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{induced_subdigraph, is_strongly_connected, validate_tournament};
    use crate::generators::{
        rainbow_tournament, random_digraph, random_tournament, t5_star, t_star,
    };

    fn tournament(n: usize, arcs: &[(Vertex, Vertex, usize)]) -> Tournament {
        validate_tournament(ColoredDigraph::new(n, arcs.iter().copied()).unwrap()).unwrap()
    }

    /// Size-then-lex scan built on the general induced-subdigraph helpers.
    fn threshold_by_definition(t: &Tournament, deficit: usize) -> Option<(Vec<Vertex>, usize)> {
        for k in 3..=t.n() {
            for subset in (0..t.n()).combinations(k) {
                let (sub, _) = induced_subdigraph(t, &subset).unwrap();
                if is_strongly_connected(&sub) && sub.m() + deficit < k {
                    return Some((subset, sub.m()));
                }
            }
        }
        None
    }

    #[test]
    fn theorem2_examples() {
        assert!(
            check_theorem2_hypothesis(&rainbow_tournament(7, 1).unwrap())
                .unwrap()
                .satisfied
        );
        let r = check_theorem2_hypothesis(&t_star(5).unwrap()).unwrap();
        assert_eq!(r.violating_subset, Some(vec![0, 1, 2]));
        assert_eq!(r.colors_found, 1);
        let r = check_theorem2_hypothesis(&t5_star()).unwrap();
        assert!(!r.satisfied);
        let whole = check_color_threshold(
            &t5_star(),
            &ColorThreshold {
                deficit: 1,
                min_size: 5,
                required: vec![],
            },
            &Guards::default(),
        )
        .unwrap();
        assert_eq!(
            (whole.violating_subset, whole.colors_found),
            (Some(vec![0, 1, 2, 3, 4]), 2)
        );
        let big = random_tournament(15, 3, 0).unwrap();
        assert!(check_theorem2_hypothesis(&big).unwrap_err().is_guard());
    }

    #[test]
    fn threshold_matches_definition() {
        for seed in 0..200 {
            let t = random_tournament(6, 1 + (seed as usize % 8), seed).unwrap();
            let r = check_theorem2_hypothesis(&t).unwrap();
            let expected = threshold_by_definition(&t, 1);
            assert_eq!(
                r.violating_subset.clone().zip(Some(r.colors_found)),
                expected,
                "seed {seed}"
            );
            assert_eq!(r.satisfied, expected.is_none());
        }
    }

    #[test]
    fn t_star_strong_subtournaments_have_k_minus_2_colors() {
        for n in 3..=8 {
            let t = t_star(n).unwrap();
            for k in 3..=n {
                for subset in (0..n).combinations(k) {
                    let (sub, _) = induced_subdigraph(&t, &subset).unwrap();
                    if is_strongly_connected(&sub) {
                        assert_eq!(sub.m(), k - 2);
                    }
                }
            }
        }
    }

    #[test]
    fn triangle_examples() {
        assert_eq!(
            check_all_triangles_rainbow(&rainbow_tournament(6, 2).unwrap()),
            None
        );
        assert_eq!(
            check_all_triangles_rainbow(&t_star(4).unwrap()),
            Some([0, 2, 1])
        );
        assert_eq!(check_all_triangles_rainbow(&t5_star()), Some([0, 1, 3]));
        assert_eq!(find_monochromatic_triangle(&t5_star()), None);
        assert_eq!(
            find_monochromatic_triangle(&t_star(4).unwrap()),
            Some([0, 2, 1])
        );
    }

    #[test]
    fn fk_hypothesis_examples() {
        let t5 = check_fk_hypothesis(&t5_star()).unwrap();
        assert_eq!(t5.violating_subset, Some(vec![0, 1, 2, 3, 4]));
        assert!(!check_fk_hypothesis(&t_star(5).unwrap()).unwrap().satisfied);
        assert!(
            check_fk_hypothesis(&rainbow_tournament(6, 0).unwrap())
                .unwrap()
                .satisfied
        );
    }

    #[test]
    fn cycle_examples() {
        let acyclic = ColoredDigraph::new(3, [(0, 1, 0), (1, 2, 0), (0, 2, 0)]).unwrap();
        assert_eq!(check_all_cycles_rainbow(&acyclic).unwrap(), None);
        let mono = ColoredDigraph::new(3, [(0, 1, 0), (1, 2, 0), (2, 0, 0)]).unwrap();
        assert_eq!(
            check_all_cycles_rainbow(&mono).unwrap(),
            Some(vec![0, 1, 2])
        );
        let rainbow = rainbow_tournament(6, 5).unwrap();
        assert_eq!(check_all_cycles_rainbow(&rainbow).unwrap(), None);
        let digon = ColoredDigraph::new(2, [(0, 1, 0), (1, 0, 0)]).unwrap();
        assert_eq!(check_all_cycles_rainbow(&digon).unwrap(), Some(vec![0, 1]));
        assert!(check_all_cycles_rainbow(&ColoredDigraph::empty(13))
            .unwrap_err()
            .is_guard());
    }

    /// Every simple cycle, enumerated from its least vertex.
    fn all_cycles(d: &ColoredDigraph) -> Vec<Vec<Vertex>> {
        fn go(d: &ColoredDigraph, path: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
            let (start, v) = (path[0], *path.last().unwrap());
            for a in d.out_arcs(v) {
                if a.head == start {
                    out.push(path.clone());
                } else if a.head > start && !path.contains(&a.head) {
                    path.push(a.head);
                    go(d, path, out);
                    path.pop();
                }
            }
        }
        let mut out = vec![];
        for s in d.vertices() {
            go(d, &mut vec![s], &mut out);
        }
        out
    }

    #[test]
    fn cycle_check_matches_enumeration() {
        for seed in 0..200 {
            let d = random_digraph(6, 4, 0.3, seed).unwrap();
            let bad: Vec<Vec<Vertex>> = all_cycles(&d)
                .into_iter()
                .filter(|c| {
                    let colors: Vec<usize> = (0..c.len())
                        .map(|i| d.color(c[i], c[(i + 1) % c.len()]).unwrap())
                        .collect();
                    colors.iter().unique().count() < colors.len()
                })
                .collect();
            match check_all_cycles_rainbow(&d).unwrap() {
                None => assert!(bad.is_empty(), "seed {seed}"),
                Some(c) => assert!(bad.contains(&c), "seed {seed}: {c:?}"),
            }
        }
    }

    #[test]
    fn lemma1_examples() {
        let two_colors = tournament(3, &[(0, 1, 0), (1, 2, 1), (2, 0, 1)]);
        let (i, p) = check_lemma1_instance(&two_colors).unwrap().unwrap();
        assert_eq!(i, 2);
        assert_eq!(p.vertices, vec![2, 0, 1]);

        let mono = tournament(3, &[(0, 1, 0), (1, 2, 0), (2, 0, 0)]);
        assert!(matches!(
            check_lemma1_instance(&mono),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            check_lemma1_instance(&t5_star()),
            Err(Error::Precondition(_))
        ));
    }
}
