//! Plain-text reports shared by the command-line tool and library callers.

use std::fmt::Write as _;

use itertools::Itertools;

use crate::checks::{
    check_all_cycles_rainbow, check_all_triangles_rainbow, check_lemma1_instance,
    check_theorem2_hypothesis,
};
use crate::digraph::{ColoredDigraph, Tournament, Vertex};
use crate::error::Result;
use crate::explore::{ExploreReport, KernelOutcome};
use crate::kernels::{pc_closure, pcp_kernel_tournament, rainbow_kernel, ClosureDigraph, Witness};
use crate::reachability::{pc_closure_layers, ColoredWalk};
use crate::reductions::{solve_3dpm_bruteforce, verify_chain, Hypergraph3};

/// A decided question and its explanation. `positive` is false for a
/// negative answer such as a missing kernel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub positive: bool,
    pub text: String,
}

impl Report {
    fn new(positive: bool, text: String) -> Self {
        Report { positive, text }
    }
}

fn set(vs: &[Vertex]) -> String {
    format!("{{{}}}", vs.iter().join(", "))
}

fn walk(w: &ColoredWalk) -> String {
    let mut s = w.vertices[0].to_string();
    for (v, c) in w.vertices[1..].iter().zip(&w.colors) {
        write!(s, " -[{c}]-> {v}").expect("write to string");
    }
    s
}

pub fn rainbow_kernel_report(d: &ColoredDigraph) -> Result<Report> {
    Ok(match rainbow_kernel(d)? {
        None => Report::new(false, "no rainbow kernel\n".into()),
        Some(cert) => {
            let mut text = format!("rainbow kernel {}\n", set(&cert.kernel));
            for w in &cert.witnesses {
                if let Witness::Path(p) = w {
                    writeln!(text, "  {p}").expect("write to string");
                }
            }
            Report::new(true, text)
        }
    })
}

pub fn pcp_kernel_report(t: &Tournament) -> Report {
    match pcp_kernel_tournament(t) {
        None => Report::new(false, "no pcp kernel\n".into()),
        Some(k) => {
            let layers = pc_closure_layers(t);
            let mut text = format!("pcp kernel {}\n", set(&[k]));
            for u in t.vertices().filter(|&u| u != k) {
                let w = layers
                    .walk_between(u, k)
                    .expect("every vertex reaches the kernel");
                writeln!(text, "  {}", walk(&w)).expect("write to string");
            }
            Report::new(true, text)
        }
    }
}

pub fn closure_report(kind: &str, g: &ClosureDigraph) -> Report {
    let mut text = format!("{kind} closure {} {}\n", g.n(), g.arc_count());
    for (u, v) in g.arcs() {
        writeln!(text, "arc {u} {v}").expect("write to string");
    }
    Report::new(true, text)
}

pub fn pc_closure_report(t: &Tournament) -> Report {
    closure_report("pc", &pc_closure(t))
}

pub fn theorem2_report(t: &Tournament) -> Result<Report> {
    let r = check_theorem2_hypothesis(t)?;
    Ok(match r.violating_subset {
        None => Report::new(true, "color threshold holds\n".into()),
        Some(s) => Report::new(
            false,
            format!(
                "color threshold fails: strongly connected subtournament {} has {} colors, needs {}\n",
                set(&s),
                r.colors_found,
                s.len() - 1
            ),
        ),
    })
}

pub fn triangles_report(t: &Tournament) -> Report {
    match check_all_triangles_rainbow(t) {
        None => Report::new(true, "all triangles rainbow\n".into()),
        Some([a, b, c]) => {
            let colors = [t.color(a, b), t.color(b, c), t.color(c, a)]
                .iter()
                .map(|c| c.expect("triangle arc").to_string())
                .join(" ");
            Report::new(
                false,
                format!("triangle {a} -> {b} -> {c} -> {a} is not rainbow (colors {colors})\n"),
            )
        }
    }
}

pub fn cycles_report(d: &ColoredDigraph) -> Result<Report> {
    Ok(match check_all_cycles_rainbow(d)? {
        None => Report::new(true, "all cycles rainbow\n".into()),
        Some(cycle) => {
            let mut text = String::from("cycle ");
            for (i, &v) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                let c = d.color(v, next).expect("cycle arc");
                write!(text, "{v} -[{c}]-> ").expect("write to string");
            }
            writeln!(text, "{} is not rainbow", cycle[0]).expect("write to string");
            Report::new(false, text)
        }
    })
}

pub fn lemma1_report(t: &Tournament) -> Result<Report> {
    Ok(match check_lemma1_instance(t)? {
        None => Report::new(false, "no rainbow (v_i, v_{i-1})-path\n".into()),
        Some((i, p)) => Report::new(true, format!("rainbow (v_{i}, v_{})-path: {p}\n", i - 1)),
    })
}

pub fn matching_report(h: &Hypergraph3) -> Result<Report> {
    Ok(match solve_3dpm_bruteforce(h)? {
        None => Report::new(false, "no perfect matching\n".into()),
        Some(edges) => {
            let mut text = format!("perfect matching: edges {}\n", edges.iter().join(" "));
            for &j in &edges {
                let e = h.edges()[j];
                writeln!(text, "  edge {} {} {}", e[0], e[1], e[2]).expect("write to string");
            }
            Report::new(true, text)
        }
    })
}

/// The chain report is positive whenever the three answers agree.
pub fn chain_report(h: &Hypergraph3) -> Result<Report> {
    let r = verify_chain(h)?;
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    let mut text = String::new();
    match &r.matching {
        Some(edges) => writeln!(text, "3dpm: yes (edges {})", edges.iter().join(" ")),
        None => writeln!(text, "3dpm: no"),
    }
    .expect("write to string");
    match &r.path {
        Some(p) => writeln!(text, "rainbow path in D_H: yes ({p})"),
        None => writeln!(text, "rainbow path in D_H: no"),
    }
    .expect("write to string");
    match &r.kernel {
        Some(k) => writeln!(text, "rainbow kernel in T_D: yes {}", set(&k.kernel)),
        None => writeln!(text, "rainbow kernel in T_D: no"),
    }
    .expect("write to string");
    writeln!(
        text,
        "D_H: {} vertices, {} arcs; T_D: {} vertices",
        r.dh_vertices, r.dh_arcs, r.td_vertices
    )
    .expect("write to string");
    writeln!(text, "chain agrees: {}", yes_no(r.answer())).expect("write to string");
    Ok(Report::new(true, text))
}

/// One line per instance and a summary line. Positive when no
/// counterexample was found.
pub fn explore_report(r: &ExploreReport) -> Report {
    let mut text = String::new();
    for rec in &r.records {
        let kernel = match &rec.kernel {
            KernelOutcome::Untested => "-".to_string(),
            KernelOutcome::Missing => "none".to_string(),
            KernelOutcome::Found(k) => set(k),
        };
        write!(
            text,
            "seed={} n={} m={} filter={} kernel={}",
            rec.seed,
            rec.n,
            rec.m,
            if rec.passed_filter { "pass" } else { "reject" },
            kernel
        )
        .expect("write to string");
        if rec.counterexample.is_some() {
            write!(text, " instance={}", rec.instance_name(r.name)).expect("write to string");
        }
        text.push('\n');
    }
    let found = r.counterexamples().count();
    writeln!(
        text,
        "{}: {} instances, {} passed the filter, {} counterexamples",
        r.name,
        r.records.len(),
        r.passed(),
        found
    )
    .expect("write to string");
    Report::new(found == 0, text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::validate_tournament;
    use crate::generators::{t5_star, t_star};
    use crate::kernels::rainbow_closure;

    #[test]
    fn kernel_reports() {
        let r = rainbow_kernel_report(&t5_star()).unwrap();
        assert_eq!(r, Report::new(false, "no rainbow kernel\n".into()));
        let two = validate_tournament(ColoredDigraph::new(2, [(1, 0, 0)]).unwrap()).unwrap();
        let r = rainbow_kernel_report(&two).unwrap();
        assert_eq!(r.text, "rainbow kernel {0}\n  1 -[0]-> 0\n");
        let r = pcp_kernel_report(&two);
        assert_eq!(r.text, "pcp kernel {0}\n  1 -[0]-> 0\n");
    }

    #[test]
    fn check_reports() {
        let t = t_star(4).unwrap();
        assert_eq!(
            theorem2_report(&t).unwrap().text,
            "color threshold fails: strongly connected subtournament {0, 1, 2} has 1 colors, needs 2\n"
        );
        assert_eq!(
            triangles_report(&t).text,
            "triangle 0 -> 2 -> 1 -> 0 is not rainbow (colors 0 0 0)\n"
        );
        assert_eq!(
            cycles_report(&t).unwrap().text,
            "cycle 0 -[0]-> 2 -[0]-> 1 -[0]-> 0 is not rainbow\n"
        );
    }

    #[test]
    fn closure_report_lists_arcs() {
        let two = validate_tournament(ColoredDigraph::new(2, [(1, 0, 0)]).unwrap()).unwrap();
        let r = closure_report("rainbow", &rainbow_closure(&two));
        assert_eq!(r.text, "rainbow closure 2 1\narc 1 0\n");
        assert_eq!(
            pc_closure_report(&two).text,
            r.text.replace("rainbow", "pc")
        );
    }
}
