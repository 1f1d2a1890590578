//! Closures and kernels.
//!
//! A set `S` is a kernel of an uncolored digraph when no arc joins two of
//! its members and every vertex outside `S` has an arc into `S`. Kernels by
//! rainbow (or properly colored) paths are exactly the kernels of the
//! rainbow (or properly colored) closure, the digraph with an arc `u -> v`
//! whenever such a `(u, v)`-path exists.

use crate::digraph::{ColoredDigraph, PathKind, PathWitness, Tournament, Vertex};
use crate::error::{Error, Result};
use crate::guards::{self, Guards};
use crate::reachability::{pc_closure_layers, rainbow_reachable, rainbow_reachable_set};

/// Largest vertex count the bitmask kernel search can represent.
const KERNEL_SEARCH_WORD: usize = 64;

/// An uncolored, loopless relation on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureDigraph {
    n: usize,
    adjacency: Vec<bool>,
}

impl ClosureDigraph {
    pub fn new(n: usize) -> Self {
        ClosureDigraph {
            n,
            adjacency: vec![false; n * n],
        }
    }

    /// The arc relation of `d`, colors dropped.
    pub fn from_digraph(d: &ColoredDigraph) -> Self {
        let mut g = ClosureDigraph::new(d.n());
        for a in d.arcs() {
            g.add_arc(a.tail, a.head);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Adds `tail -> head`; loops are ignored.
    pub fn add_arc(&mut self, tail: Vertex, head: Vertex) {
        assert!(tail < self.n && head < self.n, "vertex out of range");
        if tail != head {
            self.adjacency[tail * self.n + head] = true;
        }
    }

    pub fn has_arc(&self, tail: Vertex, head: Vertex) -> bool {
        tail < self.n && head < self.n && self.adjacency[tail * self.n + head]
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |u| {
            (0..self.n)
                .filter(move |&v| self.has_arc(u, v))
                .map(move |v| (u, v))
        })
    }

    pub fn arc_count(&self) -> usize {
        self.adjacency.iter().filter(|&&a| a).count()
    }

    pub fn in_degree(&self, v: Vertex) -> usize {
        (0..self.n).filter(|&u| self.has_arc(u, v)).count()
    }

    pub fn out_neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.n).filter(move |&w| self.has_arc(v, w))
    }

    /// Least vertex with in-degree `n - 1`.
    pub fn universal_sink(&self) -> Option<Vertex> {
        (0..self.n).find(|&v| self.in_degree(v) + 1 == self.n)
    }
}

/// How an outside vertex reaches the kernel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// A single arc of an uncolored digraph.
    Arc {
        tail: Vertex,
        head: Vertex,
    },
    Path(PathWitness),
}

impl Witness {
    pub fn source(&self) -> Vertex {
        match self {
            Witness::Arc { tail, .. } => *tail,
            Witness::Path(p) => p.source(),
        }
    }

    pub fn target(&self) -> Vertex {
        match self {
            Witness::Arc { head, .. } => *head,
            Witness::Path(p) => p.target(),
        }
    }
}

/// A kernel together with one witness per vertex outside it, listed by
/// ascending source vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelCertificate {
    pub kernel: Vec<Vertex>,
    pub witnesses: Vec<Witness>,
}

impl KernelCertificate {
    fn check_shape(&self, n: usize) -> Result<Vec<bool>> {
        let mut member = vec![false; n];
        for &v in &self.kernel {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            member[v] = true;
        }
        let outside: Vec<Vertex> = (0..n).filter(|&v| !member[v]).collect();
        let sources: Vec<Vertex> = self.witnesses.iter().map(Witness::source).collect();
        if sources != outside {
            return Err(Error::InvalidWitness(format!(
                "witness sources {sources:?} do not match the outside vertices {outside:?}"
            )));
        }
        if let Some(w) = self.witnesses.iter().find(|w| !member[w.target()]) {
            return Err(Error::InvalidWitness(format!(
                "witness from {} ends outside the kernel at {}",
                w.source(),
                w.target()
            )));
        }
        Ok(member)
    }

    /// Independence and absorption against an uncolored digraph.
    pub fn validate_closure(&self, g: &ClosureDigraph) -> Result<()> {
        self.check_shape(g.n())?;
        for &a in &self.kernel {
            for &b in &self.kernel {
                if g.has_arc(a, b) {
                    return Err(Error::InvalidWitness(format!(
                        "kernel members {a} and {b} are joined by an arc"
                    )));
                }
            }
        }
        for w in &self.witnesses {
            let ok = match w {
                Witness::Arc { tail, head } => g.has_arc(*tail, *head),
                Witness::Path(_) => false,
            };
            if !ok {
                return Err(Error::InvalidWitness(format!(
                    "no arc {} -> {} in the closure",
                    w.source(),
                    w.target()
                )));
            }
        }
        Ok(())
    }

    /// Independence and absorption by rainbow paths in `d`.
    pub fn validate_rainbow(&self, d: &ColoredDigraph) -> Result<()> {
        self.check_shape(d.n())?;
        for &a in &self.kernel {
            for &b in &self.kernel {
                if a != b && rainbow_reachable(d, a, b).is_some() {
                    return Err(Error::InvalidWitness(format!(
                        "kernel members {a} and {b} are joined by a rainbow path"
                    )));
                }
            }
        }
        for w in &self.witnesses {
            match w {
                Witness::Path(p) if p.kind == PathKind::Rainbow => p.validate(d)?,
                _ => {
                    return Err(Error::InvalidWitness(format!(
                        "witness from {} is not a rainbow path",
                        w.source()
                    )))
                }
            }
        }
        Ok(())
    }
}

/// Arc `u -> v` whenever `d` has a rainbow `(u, v)`-path.
pub fn rainbow_closure(d: &ColoredDigraph) -> ClosureDigraph {
    let mut g = ClosureDigraph::new(d.n());
    for u in d.vertices() {
        for (v, reached) in rainbow_reachable_set(d, u).into_iter().enumerate() {
            if reached {
                g.add_arc(u, v);
            }
        }
    }
    g
}

/// Arc `u -> v` whenever the last layer of the layered construction
/// relates `u` to `v`.
pub fn pc_closure(t: &Tournament) -> ClosureDigraph {
    let layers = pc_closure_layers(t);
    let mut g = ClosureDigraph::new(t.n());
    for (from, to) in layers.pairs() {
        if from.vertex != to.vertex {
            g.add_arc(from.vertex, to.vertex);
        }
    }
    g
}

/// The smallest kernel of `g`, lexicographically least among those of that
/// size, with single-arc witnesses.
pub fn kernel_of(g: &ClosureDigraph) -> Result<Option<KernelCertificate>> {
    kernel_of_with(g, &Guards::default())
}

pub fn kernel_of_with(g: &ClosureDigraph, limits: &Guards) -> Result<Option<KernelCertificate>> {
    guards::check(
        "kernel search",
        limits.kernel_max_vertices.min(KERNEL_SEARCH_WORD),
        g.n(),
    )?;
    let n = g.n();
    let mut out_mask = vec![0u64; n];
    let mut adjacent = vec![0u64; n];
    for (u, v) in g.arcs() {
        out_mask[u] |= 1 << v;
        adjacent[u] |= 1 << v;
        adjacent[v] |= 1 << u;
    }
    // a vertex without out-arcs can only be absorbed by being in the kernel
    let sinks: u64 = (0..n)
        .filter(|&v| out_mask[v] == 0)
        .fold(0, |acc, v| acc | 1 << v);

    let search = KernelSearch {
        n,
        out_mask: &out_mask,
        adjacent: &adjacent,
        sinks,
    };
    let smallest = (sinks.count_ones() as usize).max(usize::from(n > 0));
    for size in smallest..=n {
        if let Some(set) = search.first_of_size(size) {
            let kernel: Vec<Vertex> = (0..n).filter(|&v| set >> v & 1 == 1).collect();
            let witnesses = (0..n)
                .filter(|&v| set >> v & 1 == 0)
                .map(|v| Witness::Arc {
                    tail: v,
                    head: (out_mask[v] & set).trailing_zeros() as Vertex,
                })
                .collect();
            return Ok(Some(KernelCertificate { kernel, witnesses }));
        }
    }
    Ok(None)
}

struct KernelSearch<'a> {
    n: usize,
    out_mask: &'a [u64],
    adjacent: &'a [u64],
    sinks: u64,
}

impl KernelSearch<'_> {
    /// Lexicographically first independent absorbing set of `size` members.
    fn first_of_size(&self, size: usize) -> Option<u64> {
        self.extend(0, 0, 0, size)
    }

    fn extend(&self, next: Vertex, set: u64, blocked: u64, remaining: usize) -> Option<u64> {
        if remaining == 0 {
            // every sink at or after `next` was skipped
            if self.sinks & !set != 0 {
                return None;
            }
            let absorbing = (0..self.n).all(|v| set >> v & 1 == 1 || self.out_mask[v] & set != 0);
            return absorbing.then_some(set);
        }
        for v in next..self.n {
            if self.n - v < remaining {
                return None;
            }
            if blocked >> v & 1 == 0 {
                let found = self.extend(
                    v + 1,
                    set | 1 << v,
                    blocked | self.adjacent[v],
                    remaining - 1,
                );
                if found.is_some() {
                    return found;
                }
            }
            // skipping a sink can never lead to a kernel
            if self.sinks >> v & 1 == 1 {
                return None;
            }
        }
        None
    }
}

/// A kernel by rainbow paths, computed as a kernel of the rainbow closure.
pub fn rainbow_kernel(d: &ColoredDigraph) -> Result<Option<KernelCertificate>> {
    rainbow_kernel_with(d, &Guards::default())
}

pub fn rainbow_kernel_with(
    d: &ColoredDigraph,
    limits: &Guards,
) -> Result<Option<KernelCertificate>> {
    guards::check(
        "kernel search",
        limits.kernel_max_vertices.min(KERNEL_SEARCH_WORD),
        d.n(),
    )?;
    let closure = rainbow_closure(d);
    Ok(kernel_of_with(&closure, limits)?.map(|cert| upgrade_to_rainbow(d, cert)))
}

fn upgrade_to_rainbow(d: &ColoredDigraph, cert: KernelCertificate) -> KernelCertificate {
    let witnesses = cert
        .witnesses
        .iter()
        .map(|w| {
            Witness::Path(
                rainbow_reachable(d, w.source(), w.target())
                    .expect("closure arcs come from rainbow paths"),
            )
        })
        .collect();
    KernelCertificate {
        kernel: cert.kernel,
        witnesses,
    }
}

/// Rainbow witnesses from every other vertex into `kernel`, if all of them
/// exist. Each vertex is absorbed by the first member it reaches.
pub fn rainbow_certificate(d: &ColoredDigraph, kernel: &[Vertex]) -> Option<KernelCertificate> {
    let mut kernel = kernel.to_vec();
    kernel.sort_unstable();
    kernel.dedup();
    let witnesses = d
        .vertices()
        .filter(|v| kernel.binary_search(v).is_err())
        .map(|v| {
            kernel
                .iter()
                .find_map(|&s| rainbow_reachable(d, v, s))
                .map(Witness::Path)
        })
        .collect::<Option<Vec<_>>>()?;
    Some(KernelCertificate { kernel, witnesses })
}

/// The least vertex every other vertex reaches by a rainbow path. In a
/// tournament any two vertices are joined by an arc, so a kernel by rainbow
/// paths is always a single such vertex.
pub fn rainbow_kernel_tournament(t: &Tournament) -> Option<Vertex> {
    rainbow_closure(t).universal_sink()
}

/// The least vertex every other vertex reaches in the properly colored
/// closure built from the layered construction.
pub fn pcp_kernel_tournament(t: &Tournament) -> Option<Vertex> {
    pc_closure(t).universal_sink()
}

/// Which vertices count as sinks of the remaining vertex set `R` during
/// sink peeling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SinkRule {
    /// No arc of `D` leads from the vertex to another vertex of `R`.
    Arcs,
    /// No rainbow path of `D` leads from the vertex to another vertex of `R`.
    RainbowPaths,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Peeling {
    pub kernel: Vec<Vertex>,
    pub rounds: usize,
}

/// Repeatedly moves the sinks of the remaining vertices into `S`, then
/// removes every remaining vertex that reaches `S` by a rainbow path.
///
/// With [`SinkRule::Arcs`] the result need not be independent: two sinks of
/// the remaining set can still be joined by a rainbow path through vertices
/// removed earlier. [`SinkRule::RainbowPaths`] always yields a kernel by
/// rainbow paths.
pub fn sink_peeling(d: &ColoredDigraph, rule: SinkRule) -> Result<Peeling> {
    if let Some(v) = d.find_cycle_vertex() {
        return Err(Error::Cyclic(v));
    }
    let closure = rainbow_closure(d);
    let n = d.n();
    let mut remaining = vec![true; n];
    let mut in_kernel = vec![false; n];
    let mut left = n;
    let mut rounds = 0;
    while left > 0 {
        rounds += 1;
        let sinks: Vec<Vertex> = (0..n)
            .filter(|&v| remaining[v])
            .filter(|&v| match rule {
                SinkRule::Arcs => d.out_arcs(v).all(|a| !remaining[a.head]),
                SinkRule::RainbowPaths => closure.out_neighbors(v).all(|w| !remaining[w]),
            })
            .collect();
        assert!(!sinks.is_empty(), "an acyclic digraph always has a sink");
        for &s in &sinks {
            in_kernel[s] = true;
        }
        for v in 0..n {
            if remaining[v] && (in_kernel[v] || closure.out_neighbors(v).any(|w| in_kernel[w])) {
                remaining[v] = false;
                left -= 1;
            }
        }
    }
    Ok(Peeling {
        kernel: (0..n).filter(|&v| in_kernel[v]).collect(),
        rounds,
    })
}

/// A kernel by rainbow paths of an acyclic digraph, found by sink peeling.
pub fn acyclic_rainbow_kernel(d: &ColoredDigraph) -> Result<KernelCertificate> {
    let peeling = sink_peeling(d, SinkRule::RainbowPaths)?;
    let cert = rainbow_certificate(d, &peeling.kernel)
        .expect("peeling removes only vertices that reach the kernel");
    debug_assert!(cert.validate_rainbow(d).is_ok());
    Ok(cert)
}
