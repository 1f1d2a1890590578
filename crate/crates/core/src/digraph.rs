//! Arc-colored digraphs, tournaments and path witnesses.
//!
//! Vertices and colors are dense integer identifiers: a digraph on `n`
//! vertices uses ids `0..n`, and a digraph with `m` colors uses every color
//! id in `0..m` on at least one arc. Arcs keep their input order, and every
//! iteration in this crate follows that order.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::ops::Deref;

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type Color = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arc {
    pub tail: Vertex,
    pub head: Vertex,
    pub color: Color,
}

impl Arc {
    pub fn new(tail: Vertex, head: Vertex, color: Color) -> Self {
        Arc { tail, head, color }
    }
}

/// A simple loopless digraph whose arcs carry dense color ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredDigraph {
    n: usize,
    m: usize,
    arcs: Vec<Arc>,
    // arc indices per tail, in input order
    out: Vec<Vec<usize>>,
    // n * n matrix of color + 1, zero meaning "no arc"
    matrix: Vec<u32>,
}

impl ColoredDigraph {
    /// Builds a digraph and infers `m` from the colors in use. Fails if
    /// the color ids are not dense.
    pub fn new<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex, Color)>,
    {
        let arcs: Vec<Arc> = arcs
            .into_iter()
            .map(|(t, h, c)| Arc::new(t, h, c))
            .collect();
        let used: BTreeSet<Color> = arcs.iter().map(|a| a.color).collect();
        let m = used.len();
        if let Some(&max) = used.iter().next_back() {
            if max + 1 != m {
                return Err(Error::InvalidDigraph(format!(
                    "color ids are not dense: {m} colors in use but largest id is {max}"
                )));
            }
        }
        Self::from_arcs(n, m, arcs)
    }

    /// Builds a digraph with a declared color count `m`.
    pub fn with_color_count<I>(n: usize, m: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex, Color)>,
    {
        let arcs: Vec<Arc> = arcs
            .into_iter()
            .map(|(t, h, c)| Arc::new(t, h, c))
            .collect();
        Self::from_arcs(n, m, arcs)
    }

    /// Builds a digraph after relabeling the colors in use to `0..m`,
    /// preserving their relative order.
    pub fn densified<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex, Color)>,
    {
        let arcs: Vec<(Vertex, Vertex, Color)> = arcs.into_iter().collect();
        let used: Vec<Color> = arcs
            .iter()
            .map(|&(_, _, c)| c)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let remap = |c: Color| used.binary_search(&c).expect("color collected above");
        Self::new(n, arcs.into_iter().map(|(t, h, c)| (t, h, remap(c))))
    }

    pub fn empty(n: usize) -> Self {
        Self::from_arcs(n, 0, Vec::new()).expect("arcless digraph is valid")
    }

    fn from_arcs(n: usize, m: usize, arcs: Vec<Arc>) -> Result<Self> {
        let mut out = vec![Vec::new(); n];
        let mut matrix = vec![0u32; n * n];
        let mut seen_color = vec![false; m];
        for (idx, arc) in arcs.iter().enumerate() {
            for v in [arc.tail, arc.head] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if arc.color >= m {
                return Err(Error::ColorOutOfRange {
                    color: arc.color,
                    m,
                });
            }
            if arc.tail == arc.head {
                return Err(Error::InvalidDigraph(format!(
                    "loop at vertex {}",
                    arc.tail
                )));
            }
            let cell = &mut matrix[arc.tail * n + arc.head];
            if *cell != 0 {
                return Err(Error::InvalidDigraph(format!(
                    "duplicate arc {} -> {}",
                    arc.tail, arc.head
                )));
            }
            *cell = arc.color as u32 + 1;
            seen_color[arc.color] = true;
            out[arc.tail].push(idx);
        }
        if let Some(unused) = seen_color.iter().position(|&s| !s) {
            return Err(Error::InvalidDigraph(format!(
                "color {unused} is declared but used on no arc"
            )));
        }
        Ok(ColoredDigraph {
            n,
            m,
            arcs,
            out,
            matrix,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of distinct colors.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    /// Out-arcs of `v` in input order.
    pub fn out_arcs(&self, v: Vertex) -> impl Iterator<Item = &Arc> + '_ {
        self.out[v].iter().map(move |&i| &self.arcs[i])
    }

    pub fn out_degree(&self, v: Vertex) -> usize {
        self.out[v].len()
    }

    pub fn color(&self, tail: Vertex, head: Vertex) -> Option<Color> {
        if tail >= self.n || head >= self.n {
            return None;
        }
        match self.matrix[tail * self.n + head] {
            0 => None,
            c => Some(c as usize - 1),
        }
    }

    pub fn has_arc(&self, tail: Vertex, head: Vertex) -> bool {
        self.color(tail, head).is_some()
    }

    /// True if no pair of vertices carries arcs in both directions.
    pub fn is_oriented(&self) -> bool {
        self.arcs.iter().all(|a| !self.has_arc(a.head, a.tail))
    }

    pub fn is_acyclic(&self) -> bool {
        self.find_cycle_vertex().is_none()
    }

    pub(crate) fn find_cycle_vertex(&self) -> Option<Vertex> {
        strongly_connected_components(self)
            .into_iter()
            .find(|c| c.len() > 1)
            .map(|c| c[0])
    }

    /// Same arcs, every one recolored with color 0.
    pub fn monochromatic(&self) -> ColoredDigraph {
        ColoredDigraph::new(self.n, self.arcs.iter().map(|a| (a.tail, a.head, 0)))
            .expect("recoloring keeps the digraph simple")
    }

    /// Distinct colors carried by the given arcs.
    pub fn distinct_colors<'a>(arcs: impl IntoIterator<Item = &'a Arc>) -> usize {
        arcs.into_iter()
            .map(|a| a.color)
            .collect::<BTreeSet<_>>()
            .len()
    }
}

/// A colored digraph with exactly one arc between every two vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tournament(ColoredDigraph);

impl Tournament {
    pub fn new(d: ColoredDigraph) -> Result<Self> {
        validate_tournament(d)
    }

    pub fn digraph(&self) -> &ColoredDigraph {
        &self.0
    }

    pub fn into_inner(self) -> ColoredDigraph {
        self.0
    }

    /// Whether `u` beats `v`.
    pub fn beats(&self, u: Vertex, v: Vertex) -> bool {
        self.0.has_arc(u, v)
    }
}

impl Deref for Tournament {
    type Target = ColoredDigraph;

    fn deref(&self) -> &ColoredDigraph {
        &self.0
    }
}

impl AsRef<ColoredDigraph> for Tournament {
    fn as_ref(&self) -> &ColoredDigraph {
        &self.0
    }
}

/// Checks that every unordered pair carries exactly one arc.
pub fn validate_tournament(d: ColoredDigraph) -> Result<Tournament> {
    for u in 0..d.n() {
        for v in u + 1..d.n() {
            match (d.has_arc(u, v), d.has_arc(v, u)) {
                (true, true) => {
                    return Err(Error::NotTournament {
                        u,
                        v,
                        reason: "has arcs in both directions",
                    })
                }
                (false, false) => {
                    return Err(Error::NotTournament {
                        u,
                        v,
                        reason: "has no arc",
                    })
                }
                _ => {}
            }
        }
    }
    Ok(Tournament(d))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PathKind {
    /// All arc colors pairwise distinct.
    Rainbow,
    /// Consecutive arc colors distinct.
    ProperlyColored,
}

impl std::fmt::Display for PathKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            PathKind::Rainbow => "rainbow",
            PathKind::ProperlyColored => "properly-colored",
        })
    }
}

/// A directed path together with the colors of its arcs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathWitness {
    pub kind: PathKind,
    pub vertices: Vec<Vertex>,
    pub colors: Vec<Color>,
}

impl PathWitness {
    /// Reads the arc colors of `vertices` off `d` and validates the result.
    pub fn from_vertices(
        d: &ColoredDigraph,
        kind: PathKind,
        vertices: Vec<Vertex>,
    ) -> Result<Self> {
        let colors = vertices
            .windows(2)
            .map(|w| {
                d.color(w[0], w[1]).ok_or_else(|| {
                    Error::InvalidWitness(format!("{} -> {} is not an arc", w[0], w[1]))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let witness = PathWitness {
            kind,
            vertices,
            colors,
        };
        witness.validate(d)?;
        Ok(witness)
    }

    pub fn source(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn target(&self) -> Vertex {
        *self.vertices.last().expect("witness is nonempty")
    }

    /// Number of arcs.
    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Re-checks the witness against its host digraph and its tag.
    pub fn validate(&self, d: &ColoredDigraph) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidWitness(msg));
        if self.vertices.len() < 2 {
            return bad("a path needs at least one arc".into());
        }
        if self.colors.len() + 1 != self.vertices.len() {
            return bad(format!(
                "{} vertices but {} colors",
                self.vertices.len(),
                self.colors.len()
            ));
        }
        let mut seen = vec![false; d.n()];
        for &v in &self.vertices {
            if v >= d.n() {
                return bad(format!("vertex {v} out of range"));
            }
            if std::mem::replace(&mut seen[v], true) {
                return bad(format!("vertex {v} repeats"));
            }
        }
        for (w, &c) in self.vertices.windows(2).zip(&self.colors) {
            match d.color(w[0], w[1]) {
                Some(actual) if actual == c => {}
                Some(actual) => {
                    return bad(format!(
                        "arc {} -> {} has color {actual}, witness says {c}",
                        w[0], w[1]
                    ))
                }
                None => return bad(format!("{} -> {} is not an arc", w[0], w[1])),
            }
        }
        match self.kind {
            PathKind::Rainbow => {
                let distinct: BTreeSet<_> = self.colors.iter().collect();
                if distinct.len() != self.colors.len() {
                    return bad("rainbow witness repeats a color".into());
                }
            }
            PathKind::ProperlyColored => {
                if self.colors.windows(2).any(|w| w[0] == w[1]) {
                    return bad("consecutive arcs share a color".into());
                }
            }
        }
        Ok(())
    }
}

impl std::fmt::Display for PathWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.vertices[0])?;
        for (v, c) in self.vertices[1..].iter().zip(&self.colors) {
            write!(f, " -[{c}]-> {v}")?;
        }
        Ok(())
    }
}

/// Maps the vertices and colors of an induced subdigraph back to the host.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relabeling {
    /// `vertices[new] = old`
    pub vertices: Vec<Vertex>,
    /// `colors[new] = old`
    pub colors: Vec<Color>,
}

/// The subdigraph induced by `subset`, with vertices renumbered in
/// ascending host order and colors compacted in ascending host order.
pub fn induced_subdigraph(
    d: &ColoredDigraph,
    subset: &[Vertex],
) -> Result<(ColoredDigraph, Relabeling)> {
    let mut new_id = vec![usize::MAX; d.n()];
    let kept: BTreeSet<Vertex> = subset.iter().copied().collect();
    for &v in &kept {
        if v >= d.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: d.n(),
            });
        }
    }
    let vertices: Vec<Vertex> = kept.into_iter().collect();
    for (i, &v) in vertices.iter().enumerate() {
        new_id[v] = i;
    }
    let inner: Vec<&Arc> = d
        .arcs()
        .iter()
        .filter(|a| new_id[a.tail] != usize::MAX && new_id[a.head] != usize::MAX)
        .collect();
    let colors: Vec<Color> = inner
        .iter()
        .map(|a| a.color)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let sub = ColoredDigraph::new(
        vertices.len(),
        inner.iter().map(|a| {
            (
                new_id[a.tail],
                new_id[a.head],
                colors
                    .binary_search(&a.color)
                    .expect("color collected above"),
            )
        }),
    )?;
    Ok((sub, Relabeling { vertices, colors }))
}

/// Strongly connected components, each sorted ascending, listed so that no
/// arc runs from a later component to an earlier one. The last component is
/// therefore a sink component.
pub fn strongly_connected_components(d: &ColoredDigraph) -> Vec<Vec<Vertex>> {
    // Iterative Tarjan; components come out sinks first.
    const UNVISITED: usize = usize::MAX;
    let n = d.n();
    let mut index = vec![UNVISITED; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut components = Vec::new();
    let mut next_index = 0;
    let succ: Vec<Vec<Vertex>> = (0..n)
        .map(|v| d.out_arcs(v).map(|a| a.head).collect())
        .collect();

    for root in 0..n {
        if index[root] != UNVISITED {
            continue;
        }
        let mut call: Vec<(Vertex, usize)> = vec![(root, 0)];
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            if let Some(&w) = succ[v].get(*pos) {
                *pos += 1;
                if index[w] == UNVISITED {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut component = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack holds the component");
                    on_stack[w] = false;
                    component.push(w);
                    if w == v {
                        break;
                    }
                }
                component.sort_unstable();
                components.push(component);
            }
        }
    }
    components.reverse();
    components
}

pub fn is_strongly_connected(d: &ColoredDigraph) -> bool {
    d.n() <= 1 || strongly_connected_components(d).len() == 1
}

const HEADER_DIGRAPH: &str = "digraph";
const HEADER_TOURNAMENT: &str = "tournament";

/// Parses the line-oriented instance format. A `tournament` header also
/// validates the tournament property.
pub fn parse_digraph(text: &str) -> Result<ColoredDigraph> {
    let mut header: Option<(usize, &str, usize, usize)> = None;
    let mut arcs: Vec<Arc> = Vec::new();
    let mut arc_lines: Vec<usize> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match header {
            None => {
                let kind = fields[0];
                if kind != HEADER_DIGRAPH && kind != HEADER_TOURNAMENT {
                    return Err(Error::parse(
                        line_no,
                        format!(
                            "expected `digraph <n> <m>` or `tournament <n> <m>`, found `{line}`"
                        ),
                    ));
                }
                if fields.len() != 3 {
                    return Err(Error::parse(line_no, "header takes exactly two numbers"));
                }
                let n = parse_number(fields[1], line_no, "vertex count")?;
                let m = parse_number(fields[2], line_no, "color count")?;
                header = Some((line_no, kind, n, m));
            }
            Some((_, _, n, m)) => {
                if fields[0] != "arc" {
                    return Err(Error::parse(
                        line_no,
                        format!("unknown directive `{}`", fields[0]),
                    ));
                }
                if fields.len() != 4 {
                    return Err(Error::parse(line_no, "`arc` takes tail, head and color"));
                }
                let tail = parse_number(fields[1], line_no, "tail")?;
                let head = parse_number(fields[2], line_no, "head")?;
                let color = parse_number(fields[3], line_no, "color")?;
                for v in [tail, head] {
                    if v >= n {
                        return Err(Error::parse(
                            line_no,
                            format!("vertex {v} out of range for {n} vertices"),
                        ));
                    }
                }
                if color >= m {
                    return Err(Error::parse(
                        line_no,
                        format!("color {color} out of range for {m} colors"),
                    ));
                }
                if tail == head {
                    return Err(Error::parse(line_no, format!("loop at vertex {tail}")));
                }
                if let Some(prev) = arcs.iter().position(|a| a.tail == tail && a.head == head) {
                    return Err(Error::parse(
                        line_no,
                        format!(
                            "duplicate arc {tail} -> {head} (first given on line {})",
                            arc_lines[prev]
                        ),
                    ));
                }
                arcs.push(Arc::new(tail, head, color));
                arc_lines.push(line_no);
            }
        }
    }

    let (header_line, kind, n, m) =
        header.ok_or_else(|| Error::parse(1, "missing `digraph` or `tournament` header"))?;
    let d = ColoredDigraph::from_arcs(n, m, arcs)
        .map_err(|e| Error::parse(header_line, e.to_string()))?;
    if kind == HEADER_TOURNAMENT {
        validate_tournament(d.clone()).map_err(|e| Error::parse(header_line, e.to_string()))?;
    }
    Ok(d)
}

pub fn parse_tournament(text: &str) -> Result<Tournament> {
    validate_tournament(parse_digraph(text)?)
}

fn parse_number(field: &str, line: usize, what: &str) -> Result<usize> {
    field.parse().map_err(|_| {
        Error::parse(
            line,
            format!("{what} `{field}` is not a nonnegative integer"),
        )
    })
}

pub fn serialize_digraph(d: &ColoredDigraph) -> String {
    serialize_with_header(d, HEADER_DIGRAPH)
}

pub fn serialize_tournament(t: &Tournament) -> String {
    serialize_with_header(t, HEADER_TOURNAMENT)
}

fn serialize_with_header(d: &ColoredDigraph, header: &str) -> String {
    let mut out = format!("{header} {} {}\n", d.n(), d.m());
    for a in d.arcs() {
        writeln!(out, "arc {} {} {}", a.tail, a.head, a.color).expect("writing to a String");
    }
    out
}

const DOT_COLORS: [&str; 8] = [
    "black",
    "red",
    "blue",
    "darkgreen",
    "orange",
    "purple",
    "brown",
    "magenta",
];
const DOT_STYLES: [&str; 4] = ["solid", "dotted", "dashed", "bold"];

/// Graphviz rendering; arcs are labeled with their color id and styled by it.
pub fn serialize_dot(d: &ColoredDigraph) -> String {
    let mut out = String::from("digraph G {\n");
    for v in d.vertices() {
        writeln!(out, "  {v};").expect("writing to a String");
    }
    for a in d.arcs() {
        writeln!(
            out,
            "  {} -> {} [label=\"{}\", color=\"{}\", style=\"{}\"];",
            a.tail,
            a.head,
            a.color,
            DOT_COLORS[a.color % DOT_COLORS.len()],
            DOT_STYLES[a.color % DOT_STYLES.len()],
        )
        .expect("writing to a String");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{t5_star, t_star};

    fn brute_force_sccs(d: &ColoredDigraph) -> Vec<Vec<bool>> {
        let n = d.n();
        let mut reach = vec![vec![false; n]; n];
        for (v, row) in reach.iter_mut().enumerate() {
            row[v] = true;
        }
        for a in d.arcs() {
            reach[a.tail][a.head] = true;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if reach[i][k] && reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
        reach
    }

    #[test]
    fn parses_smallest_instance() {
        let d = parse_digraph("digraph 2 1\narc 0 1 0").unwrap();
        assert_eq!(d.n(), 2);
        assert_eq!(d.m(), 1);
        assert_eq!(d.arcs(), &[Arc::new(0, 1, 0)]);
    }

    #[test]
    fn rejects_loop_with_line_number() {
        let err = parse_digraph("digraph 2 1\narc 0 0 0").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        assert!(err.to_string().contains("loop"));
    }

    #[test]
    fn rejects_malformed_input() {
        let cases = [
            ("graph 2 1\narc 0 1 0", 1),
            ("digraph 2\narc 0 1 0", 1),
            ("digraph 2 1\narc 0 1 0\narc 0 1 0", 3),
            ("digraph 2 1\narc 0 2 0", 2),
            ("digraph 2 1\narc 0 1 1", 2),
            ("digraph 2 1\nedge 0 1 0", 2),
            ("digraph 2 x", 1),
        ];
        for (text, line) in cases {
            match parse_digraph(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
        // declared color 1 never used
        assert!(parse_digraph("digraph 2 2\narc 0 1 0").is_err());
        // tournament header with a missing pair
        assert!(parse_digraph("tournament 3 1\narc 0 1 0\narc 1 2 0").is_err());
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let d =
            parse_digraph("# T\n\ndigraph 3 2  # header\narc 0 1 0\n  # x\narc 1 2 1\n").unwrap();
        assert_eq!(d.arc_count(), 2);
        assert_eq!(d.m(), 2);
    }

    #[test]
    fn t5_star_round_trips_through_text() {
        let t = t5_star();
        let text = serialize_tournament(&t);
        assert_eq!(text.lines().count(), 11);
        let back = parse_tournament(&text).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn tournament_validation() {
        let single = ColoredDigraph::new(2, [(0, 1, 0)]).unwrap();
        assert!(validate_tournament(single).is_ok());
        assert!(validate_tournament(t5_star().into_inner()).is_ok());
        let mutual = ColoredDigraph::new(3, [(0, 1, 0), (1, 0, 0), (0, 2, 0), (1, 2, 0)]).unwrap();
        assert_eq!(
            validate_tournament(mutual).unwrap_err(),
            Error::NotTournament {
                u: 0,
                v: 1,
                reason: "has arcs in both directions"
            }
        );
    }

    #[test]
    fn induced_subdigraph_of_t5_star_triangle() {
        // v1, v2, v3 are ids 0, 1, 2
        let (sub, map) = induced_subdigraph(&t5_star(), &[0, 1, 2]).unwrap();
        assert_eq!(map.vertices, vec![0, 1, 2]);
        assert_eq!(sub.color(0, 1), Some(0));
        assert_eq!(sub.color(1, 2), Some(0));
        assert_eq!(sub.color(0, 2), Some(1));
        assert_eq!(sub.arc_count(), 3);
    }

    #[test]
    fn induced_subdigraph_edge_cases() {
        let (sub, map) = induced_subdigraph(&t5_star(), &[]).unwrap();
        assert_eq!(sub.n(), 0);
        assert!(map.vertices.is_empty());
        assert!(matches!(
            induced_subdigraph(&t5_star(), &[7]),
            Err(Error::VertexOutOfRange { vertex: 7, n: 5 })
        ));
        let t = t5_star();
        let (whole, map) = induced_subdigraph(&t, &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(&whole, t.digraph());
        assert_eq!(map.vertices, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn t8_star_four_vertex_subtournament() {
        let t = t_star(8).unwrap();
        let (sub, _) = induced_subdigraph(&t, &[0, 1, 2, 5]).unwrap();
        assert_eq!(sub.m(), 2);
        // only the triangle is strongly connected; v5 sits outside it
        assert!(!is_strongly_connected(&sub));
        assert_eq!(
            strongly_connected_components(&sub),
            vec![vec![3], vec![0, 1, 2]]
        );
    }

    #[test]
    fn scc_examples() {
        assert_eq!(
            strongly_connected_components(&t5_star()),
            vec![vec![0, 1, 2, 3, 4]]
        );
        let transitive = ColoredDigraph::new(
            4,
            [
                (0, 1, 0),
                (0, 2, 0),
                (0, 3, 0),
                (1, 2, 0),
                (1, 3, 0),
                (2, 3, 0),
            ],
        )
        .unwrap();
        assert_eq!(
            strongly_connected_components(&transitive),
            vec![vec![0], vec![1], vec![2], vec![3]]
        );
        assert_eq!(
            strongly_connected_components(&t_star(6).unwrap()),
            vec![vec![5], vec![4], vec![3], vec![0, 1, 2]]
        );
    }

    #[test]
    fn scc_matches_pairwise_reachability() {
        use rand::{Rng, SeedableRng};
        for seed in 0..300u64 {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let n = rng.gen_range(0..=7);
            let arcs: Vec<_> = (0..n)
                .flat_map(|u| (0..n).map(move |v| (u, v)))
                .filter(|&(u, v)| u != v)
                .filter(|_| rng.gen_bool(0.3))
                .map(|(u, v)| (u, v, 0))
                .collect();
            let d = ColoredDigraph::new(n, arcs).unwrap();
            let reach = brute_force_sccs(&d);
            let comps = strongly_connected_components(&d);
            let mut position = vec![usize::MAX; n];
            for (i, c) in comps.iter().enumerate() {
                for &v in c {
                    assert_eq!(position[v], usize::MAX);
                    position[v] = i;
                }
            }
            for u in 0..n {
                for v in 0..n {
                    let same = reach[u][v] && reach[v][u];
                    assert_eq!(same, position[u] == position[v], "seed {seed}");
                }
            }
            for a in d.arcs() {
                assert!(position[a.tail] <= position[a.head], "seed {seed}");
            }
        }
    }

    #[test]
    fn dot_output() {
        assert_eq!(serialize_dot(&ColoredDigraph::empty(0)), "digraph G {\n}\n");
        let t = t5_star();
        let dot = serialize_dot(&t);
        assert_eq!(
            dot.lines()
                .filter(|l| l.ends_with(';') && !l.contains("->"))
                .count(),
            5
        );
        assert_eq!(
            dot.lines()
                .filter(|l| l.contains("->") && l.contains("style="))
                .count(),
            10
        );
        assert_eq!(dot, serialize_dot(&t5_star()));
        assert!(dot.contains("0 -> 1 [label=\"0\", color=\"black\", style=\"solid\"];"));
        assert!(dot.contains("0 -> 2 [label=\"1\", color=\"red\", style=\"dotted\"];"));
    }

    #[test]
    fn witness_validation() {
        let t = t5_star();
        let ok = PathWitness::from_vertices(&t, PathKind::Rainbow, vec![0, 1, 3]).unwrap();
        assert_eq!(ok.colors, vec![0, 1]);
        assert!(PathWitness::from_vertices(&t, PathKind::Rainbow, vec![0, 1, 2]).is_err());
        assert!(PathWitness::from_vertices(&t, PathKind::ProperlyColored, vec![2, 3, 0]).is_ok());
        assert!(PathWitness::from_vertices(&t, PathKind::ProperlyColored, vec![0, 1, 2]).is_err());
        assert!(PathWitness::from_vertices(&t, PathKind::Rainbow, vec![1, 0]).is_err());
        assert!(PathWitness::from_vertices(&t, PathKind::Rainbow, vec![0]).is_err());
        let repeated = PathWitness {
            kind: PathKind::ProperlyColored,
            vertices: vec![0, 2, 4, 0, 1],
            colors: vec![1, 1, 0, 0],
        };
        assert!(repeated.validate(&t).is_err());
    }

    #[test]
    fn densified_compacts_colors() {
        let d = ColoredDigraph::densified(3, [(0, 1, 7), (1, 2, 3)]).unwrap();
        assert_eq!(d.m(), 2);
        assert_eq!(d.color(0, 1), Some(1));
        assert_eq!(d.color(1, 2), Some(0));
        assert!(ColoredDigraph::new(3, [(0, 1, 7)]).is_err());
    }
}
