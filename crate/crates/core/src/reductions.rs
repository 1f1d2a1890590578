//! The two hardness gadgets: a 3-uniform hypergraph `H` becomes an oriented
//! graph `D_H` whose rainbow `(x, y)`-paths correspond to perfect matchings
//! of `H`, and an oriented graph `D` with query vertices becomes a tournament
//! `T_D` that has a rainbow kernel exactly when `D` has a rainbow
//! `(x, y)`-path.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::digraph::{
    parse_digraph, serialize_digraph, validate_tournament, Color, ColoredDigraph, PathWitness,
    Tournament, Vertex,
};
use crate::error::{Error, Result};
use crate::guards::{self, Guards};
use crate::kernels::{rainbow_kernel_with, KernelCertificate};
use crate::reachability::rainbow_reachable_bruteforce_with;

/// A 3-uniform hypergraph on the elements `1..=3n`. Each edge is stored
/// with its elements ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph3 {
    n_groups: usize,
    edges: Vec<[usize; 3]>,
}

impl Hypergraph3 {
    pub fn new(n_groups: usize, edges: Vec<[usize; 3]>) -> Result<Self> {
        if n_groups == 0 {
            return Err(Error::InvalidHypergraph("n must be at least 1".into()));
        }
        if edges.is_empty() {
            return Err(Error::InvalidHypergraph(
                "at least one edge is required".into(),
            ));
        }
        let mut seen = BTreeSet::new();
        let mut sorted = Vec::with_capacity(edges.len());
        for (j, mut e) in edges.into_iter().enumerate() {
            e.sort_unstable();
            if e[0] == e[1] || e[1] == e[2] {
                return Err(Error::InvalidHypergraph(format!(
                    "edge {j} repeats an element"
                )));
            }
            if e[0] == 0 || e[2] > 3 * n_groups {
                return Err(Error::InvalidHypergraph(format!(
                    "edge {j} has an element outside 1..={}",
                    3 * n_groups
                )));
            }
            if !seen.insert(e) {
                return Err(Error::InvalidHypergraph(format!(
                    "edge {j} duplicates an earlier edge"
                )));
            }
            sorted.push(e);
        }
        Ok(Hypergraph3 {
            n_groups,
            edges: sorted,
        })
    }

    /// `n`, a third of the number of elements.
    pub fn n_groups(&self) -> usize {
        self.n_groups
    }

    pub fn element_count(&self) -> usize {
        3 * self.n_groups
    }

    pub fn edges(&self) -> &[[usize; 3]] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }
}

/// Reads `hypergraph3 <3n> <m>` followed by `m` lines `edge <a> <b> <c>`.
pub fn parse_hypergraph(text: &str) -> Result<Hypergraph3> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let numbers = |rest: &[&str]| -> Result<Vec<usize>> {
            rest.iter()
                .map(|t| {
                    t.parse::<usize>().map_err(|_| {
                        Error::parse(line_no, format!("expected a number, found `{t}`"))
                    })
                })
                .collect()
        };
        match tokens[0] {
            "hypergraph3" => {
                if header.is_some() {
                    return Err(Error::parse(line_no, "duplicate header"));
                }
                let v = numbers(&tokens[1..])?;
                if v.len() != 2 {
                    return Err(Error::parse(line_no, "header needs <3n> <m>"));
                }
                if v[0] == 0 || v[0] % 3 != 0 {
                    return Err(Error::parse(
                        line_no,
                        format!("element count {} is not a positive multiple of 3", v[0]),
                    ));
                }
                header = Some((v[0] / 3, v[1], line_no));
            }
            "edge" => {
                if header.is_none() {
                    return Err(Error::parse(line_no, "edge before header"));
                }
                let v = numbers(&tokens[1..])?;
                if v.len() != 3 {
                    return Err(Error::parse(line_no, "an edge needs exactly 3 elements"));
                }
                edges.push([v[0], v[1], v[2]]);
            }
            other => {
                return Err(Error::parse(
                    line_no,
                    format!("unknown directive `{other}`"),
                ));
            }
        }
    }
    let (n, m, line) = header.ok_or_else(|| Error::parse(0, "missing `hypergraph3` header"))?;
    if edges.len() != m {
        return Err(Error::parse(
            line,
            format!("header declares {m} edges but {} were given", edges.len()),
        ));
    }
    Hypergraph3::new(n, edges)
}

pub fn serialize_hypergraph(h: &Hypergraph3) -> String {
    let mut out = format!("hypergraph3 {} {}\n", h.element_count(), h.edge_count());
    for e in h.edges() {
        writeln!(out, "edge {} {} {}", e[0], e[1], e[2]).expect("write to string");
    }
    out
}

/// An oriented graph with two distinct query vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RpogInstance {
    pub digraph: ColoredDigraph,
    pub x: Vertex,
    pub y: Vertex,
}

impl RpogInstance {
    pub fn new(digraph: ColoredDigraph, x: Vertex, y: Vertex) -> Result<Self> {
        for v in [x, y] {
            if v >= digraph.n() {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: digraph.n(),
                });
            }
        }
        if x == y {
            return Err(Error::InvalidRpog(format!("x and y are both {x}")));
        }
        if !digraph.is_oriented() {
            return Err(Error::InvalidRpog("the digraph has a 2-cycle".into()));
        }
        Ok(RpogInstance { digraph, x, y })
    }
}

/// The core digraph format followed by a line `query <x> <y>`.
pub fn parse_rpog(text: &str) -> Result<RpogInstance> {
    let mut query = None;
    let mut body = String::with_capacity(text.len());
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.split_whitespace().next() == Some("query") {
            if query.is_some() {
                return Err(Error::parse(idx + 1, "duplicate query line"));
            }
            let v: Vec<Vertex> = line
                .split_whitespace()
                .skip(1)
                .map(|t| {
                    t.parse().map_err(|_| {
                        Error::parse(idx + 1, format!("expected a vertex, found `{t}`"))
                    })
                })
                .collect::<Result<_>>()?;
            if v.len() != 2 {
                return Err(Error::parse(idx + 1, "query needs <x> <y>"));
            }
            query = Some((v[0], v[1]));
            // keep line numbering intact for the digraph parser
            body.push('\n');
        } else {
            body.push_str(raw);
            body.push('\n');
        }
    }
    let (x, y) = query.ok_or_else(|| Error::parse(0, "missing `query` line"))?;
    RpogInstance::new(parse_digraph(&body)?, x, y)
}

pub fn serialize_rpog(r: &RpogInstance) -> String {
    let mut out = serialize_digraph(&r.digraph);
    writeln!(out, "query {} {}", r.x, r.y).expect("write to string");
    out
}

/// `D_H`. The vertices `x_0..x_n` are `0..=n`. Segment `i` (from `x_{i-1}`
/// to `x_i`) holds one path of length 3 per edge `h_j`, with internal
/// vertices `n + 1 + 2((i - 1)m + j)` and the next id. The arcs of the path
/// for `h_j` carry the elements of `h_j` in ascending order, with elements
/// relabeled to dense color ids in ascending order.
pub fn build_dh(h: &Hypergraph3) -> RpogInstance {
    let n = h.n_groups();
    let m = h.edge_count();
    let used: Vec<usize> = h
        .edges()
        .iter()
        .flatten()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let color = |e: usize| -> Color { used.binary_search(&e).expect("element of an edge") };
    let mut arcs = Vec::with_capacity(3 * n * m);
    for i in 1..=n {
        for (j, e) in h.edges().iter().enumerate() {
            let a = n + 1 + 2 * ((i - 1) * m + j);
            let b = a + 1;
            arcs.push((i - 1, a, color(e[0])));
            arcs.push((a, b, color(e[1])));
            arcs.push((b, i, color(e[2])));
        }
    }
    let d = ColoredDigraph::new(2 * n * m + n + 1, arcs).expect("paths are internally disjoint");
    RpogInstance::new(d, 0, n).expect("x_0 and x_n are distinct")
}

/// `T_D` with the ids of the four added vertices and colors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TdGadget {
    pub tournament: Tournament,
    /// `x'`
    pub x1: Vertex,
    /// `x''`
    pub x2: Vertex,
    /// `y'`
    pub y1: Vertex,
    /// `y''`
    pub y2: Vertex,
    pub alpha: Color,
    pub beta: Color,
    pub gamma: Color,
    pub omega: Color,
}

/// `T_D` on `V(D)` plus `x' = N`, `x'' = N + 1`, `y' = N + 2`, `y'' = N + 3`
/// with the fresh colors `alpha..omega = M..M + 3`. Non-adjacent pairs of
/// `D` are joined from the lower to the higher id in color `alpha`.
pub fn build_td(r: &RpogInstance) -> TdGadget {
    let d = &r.digraph;
    let n = d.n();
    let m = d.m();
    let (x1, x2, y1, y2) = (n, n + 1, n + 2, n + 3);
    let (alpha, beta, gamma, omega) = (m, m + 1, m + 2, m + 3);
    let mut arcs: Vec<(Vertex, Vertex, Color)> =
        d.arcs().iter().map(|a| (a.tail, a.head, a.color)).collect();
    for u in 0..n {
        for v in u + 1..n {
            if !d.has_arc(u, v) && !d.has_arc(v, u) {
                arcs.push((u, v, alpha));
            }
        }
    }
    arcs.push((x1, r.x, alpha));
    for v in 0..n {
        if v != r.x {
            arcs.push((v, x1, beta));
        }
        arcs.push((v, x2, alpha));
        arcs.push((v, y1, if v == r.y { gamma } else { alpha }));
        arcs.push((v, y2, alpha));
    }
    arcs.extend([
        (x2, x1, beta),
        (x1, y1, beta),
        (x1, y2, beta),
        (y1, x2, beta),
        (y2, x2, beta),
        (y1, y2, omega),
    ]);
    let tournament = validate_tournament(
        ColoredDigraph::with_color_count(n + 4, m + 4, arcs).expect("gadget arcs are well formed"),
    )
    .expect("gadget completes every pair");
    TdGadget {
        tournament,
        x1,
        x2,
        y1,
        y2,
        alpha,
        beta,
        gamma,
        omega,
    }
}

/// The first perfect matching among the `n`-subsets of edge indices in
/// lexicographic order.
pub fn solve_3dpm_bruteforce(h: &Hypergraph3) -> Result<Option<Vec<usize>>> {
    solve_3dpm_bruteforce_with(h, &Guards::default())
}

pub fn solve_3dpm_bruteforce_with(h: &Hypergraph3, limits: &Guards) -> Result<Option<Vec<usize>>> {
    guards::check(
        "matching search (edges)",
        limits.matching_max_edges,
        h.edge_count(),
    )?;
    guards::check(
        "matching search (n)",
        limits.matching_max_groups,
        h.n_groups(),
    )?;
    let masks: Vec<u64> = h
        .edges()
        .iter()
        .map(|e| e.iter().fold(0u64, |acc, &x| acc | 1 << (x - 1)))
        .collect();
    let full = (1u64 << h.element_count()) - 1;
    Ok((0..h.edge_count())
        .combinations(h.n_groups())
        .find(|choice| {
            let mut covered = 0u64;
            for &j in choice {
                if covered & masks[j] != 0 {
                    return false;
                }
                covered |= masks[j];
            }
            covered == full
        }))
}

/// Outcome of one pass through both reductions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainReport {
    pub matching: Option<Vec<usize>>,
    pub path: Option<PathWitness>,
    pub kernel: Option<KernelCertificate>,
    pub dh_vertices: usize,
    pub dh_arcs: usize,
    pub td_vertices: usize,
}

impl ChainReport {
    /// The common answer of all three problems.
    pub fn answer(&self) -> bool {
        self.matching.is_some()
    }
}

pub fn verify_chain(h: &Hypergraph3) -> Result<ChainReport> {
    verify_chain_with(h, &Guards::for_reduction_chain())
}

/// Solves the matching problem on `H`, the path problem on `D_H` and the
/// kernel problem on `T_{D_H}` by brute force, checks the gadget sizes and
/// structure, and fails if the three answers differ.
pub fn verify_chain_with(h: &Hypergraph3, limits: &Guards) -> Result<ChainReport> {
    let matching = solve_3dpm_bruteforce_with(h, limits)?;
    let dh = build_dh(h);
    let (n, m) = (h.n_groups(), h.edge_count());
    check_dh_size(&dh, n, m)?;
    let path = rainbow_reachable_bruteforce_with(&dh.digraph, dh.x, dh.y, limits)?;
    let td = build_td(&dh);
    check_td_structure(&dh, &td)?;
    let kernel = rainbow_kernel_with(&td.tournament, limits)?;

    let answers = [
        ("3DPM", matching.is_some()),
        ("rainbow path in D_H", path.is_some()),
        ("rainbow kernel in T_D", kernel.is_some()),
    ];
    for pair in answers.iter().combinations(2) {
        let (a, b) = (pair[0], pair[1]);
        if a.1 != b.1 {
            return Err(Error::ChainMismatch(format!(
                "{} says {} but {} says {}",
                a.0,
                yes_no(a.1),
                b.0,
                yes_no(b.1)
            )));
        }
    }
    Ok(ChainReport {
        matching,
        path,
        kernel,
        dh_vertices: dh.digraph.n(),
        dh_arcs: dh.digraph.arc_count(),
        td_vertices: td.tournament.n(),
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn check_dh_size(dh: &RpogInstance, n: usize, m: usize) -> Result<()> {
    let (v, a) = (dh.digraph.n(), dh.digraph.arc_count());
    if v != 2 * n * m + n + 1 || a != 3 * n * m {
        return Err(Error::ChainMismatch(format!(
            "D_H has {v} vertices and {a} arcs, expected {} and {}",
            2 * n * m + n + 1,
            3 * n * m
        )));
    }
    Ok(())
}

/// `y''` and `x''` each have a single out-neighbor (`x''` and `x'`), both
/// arcs colored `beta`, and removing the gadget vertices and the `alpha`
/// arcs between vertices of `D` gives back `D`.
pub fn check_td_structure(r: &RpogInstance, g: &TdGadget) -> Result<()> {
    let t = &g.tournament;
    let outs =
        |v: Vertex| -> Vec<(Vertex, Color)> { t.out_arcs(v).map(|a| (a.head, a.color)).collect() };
    if outs(g.y2) != [(g.x2, g.beta)] || outs(g.x2) != [(g.x1, g.beta)] {
        return Err(Error::ChainMismatch(
            "y'' -> x'' -> x' is not the only way out of y'' and x''".into(),
        ));
    }
    if t.m() != r.digraph.m() + 4 {
        return Err(Error::ChainMismatch(format!(
            "T_D has {} colors, expected {}",
            t.m(),
            r.digraph.m() + 4
        )));
    }
    let n = r.digraph.n();
    let recovered = ColoredDigraph::with_color_count(
        n,
        r.digraph.m(),
        t.arcs()
            .iter()
            .filter(|a| a.tail < n && a.head < n && a.color != g.alpha)
            .map(|a| (a.tail, a.head, a.color)),
    )?;
    if recovered != r.digraph {
        return Err(Error::ChainMismatch("D is not recovered from T_D".into()));
    }
    Ok(())
}

/// All hypergraphs on `3n` elements with `1..=max_m` edges, edges listed in
/// lexicographic order within each hypergraph.
pub fn enumerate_hypergraphs(n: usize, max_m: usize) -> Vec<Hypergraph3> {
    let triples: Vec<[usize; 3]> = (1..=3 * n)
        .combinations(3)
        .map(|c| [c[0], c[1], c[2]])
        .collect();
    (1..=max_m)
        .flat_map(|m| triples.iter().copied().combinations(m))
        .map(|edges| Hypergraph3::new(n, edges).expect("distinct triples"))
        .collect()
}

/// `m` distinct random edges on `3n` elements. For odd seeds with `m >= n`
/// the first `n` edges form a random perfect matching, so both answers
/// occur; the edge order is shuffled afterwards.
pub fn random_hypergraph(n: usize, m: usize, seed: u64) -> Result<Hypergraph3> {
    let total = 3 * n * (3 * n - 1) * (3 * n).saturating_sub(2) / 6;
    if n == 0 || m == 0 || m > total {
        return Err(Error::InvalidParameter(format!(
            "random hypergraph needs n >= 1 and 1 <= m <= {total}, got n = {n}, m = {m}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: BTreeSet<[usize; 3]> = BTreeSet::new();
    if seed % 2 == 1 && m >= n {
        let mut elements: Vec<usize> = (1..=3 * n).collect();
        elements.shuffle(&mut rng);
        for chunk in elements.chunks(3) {
            let mut e = [chunk[0], chunk[1], chunk[2]];
            e.sort_unstable();
            edges.insert(e);
        }
    }
    while edges.len() < m {
        let mut e = [0; 3];
        let picked = rand::seq::index::sample(&mut rng, 3 * n, 3);
        for (slot, x) in e.iter_mut().zip(picked.iter()) {
            *slot = x + 1;
        }
        e.sort_unstable();
        edges.insert(e);
    }
    let mut edges: Vec<[usize; 3]> = edges.into_iter().collect();
    edges.shuffle(&mut rng);
    Hypergraph3::new(n, edges)
}
