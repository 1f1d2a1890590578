//! Named counterexamples and seeded random instances.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::digraph::{validate_tournament, Color, ColoredDigraph, Tournament, Vertex};
use crate::error::{Error, Result};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn check_density(density: f64) -> Result<()> {
    if (0.0..=1.0).contains(&density) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "density {density} is not in [0, 1]"
        )))
    }
}

/// The tournament on `v_0..v_{n-1}` in which `v_j -> v_i` for `i < j`,
/// except `v_0 -> v_2`. The triangle `v_0 v_1 v_2` is monochromatic in
/// color 0 and is the sink component; an arc whose larger endpoint is
/// `v_j` with `j >= 3` gets color `j - 2`.
pub fn t_star(n: usize) -> Result<Tournament> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "t_star needs at least 3 vertices, got {n}"
        )));
    }
    let mut arcs = vec![(1, 0, 0), (2, 1, 0), (0, 2, 0)];
    for j in 3..n {
        for i in 0..j {
            arcs.push((j, i, j - 2));
        }
    }
    validate_tournament(ColoredDigraph::new(n, arcs)?)
}

/// The 2-colored tournament on five vertices: the Hamilton cycle
/// `0 -> 1 -> 2 -> 3 -> 4 -> 0` in color 0 and the chords
/// `0 -> 2 -> 4 -> 1 -> 3 -> 0` in color 1.
pub fn t5_star() -> Tournament {
    let arcs = [
        (0, 1, 0),
        (1, 2, 0),
        (2, 3, 0),
        (3, 4, 0),
        (4, 0, 0),
        (0, 2, 1),
        (2, 4, 1),
        (4, 1, 1),
        (1, 3, 1),
        (3, 0, 1),
    ];
    validate_tournament(ColoredDigraph::new(5, arcs).expect("fixed arc list"))
        .expect("fixed arc list is a tournament")
}

/// Uniform orientation of every pair, uniform color from `0..m` on every
/// arc, then colors densified.
pub fn random_tournament(n: usize, m: usize, seed: u64) -> Result<Tournament> {
    let pairs = n * n.saturating_sub(1) / 2;
    if n < 2 || m == 0 || m > pairs {
        return Err(Error::InvalidParameter(format!(
            "random tournament needs n >= 2 and 1 <= m <= {pairs}, got n = {n}, m = {m}"
        )));
    }
    let mut rng = rng(seed);
    let mut arcs = Vec::with_capacity(pairs);
    for u in 0..n {
        for v in u + 1..n {
            let c = rng.gen_range(0..m);
            if rng.gen_bool(0.5) {
                arcs.push((u, v, c));
            } else {
                arcs.push((v, u, c));
            }
        }
    }
    validate_tournament(ColoredDigraph::densified(n, arcs)?)
}

/// Uniform orientation of every pair with all arc colors distinct.
pub fn rainbow_tournament(n: usize, seed: u64) -> Result<Tournament> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "rainbow tournament needs n >= 2, got {n}"
        )));
    }
    let mut rng = rng(seed);
    let mut colors: Vec<Color> = (0..n * (n - 1) / 2).collect();
    colors.shuffle(&mut rng);
    let mut arcs = Vec::with_capacity(colors.len());
    let mut next = colors.into_iter();
    for u in 0..n {
        for v in u + 1..n {
            let c = next.next().expect("one color per pair");
            if rng.gen_bool(0.5) {
                arcs.push((u, v, c));
            } else {
                arcs.push((v, u, c));
            }
        }
    }
    validate_tournament(ColoredDigraph::new(n, arcs)?)
}

/// Each ordered pair of distinct vertices independently becomes an arc with
/// probability `density`, colored uniformly from `0..m`; colors densified.
pub fn random_digraph(n: usize, m: usize, density: f64, seed: u64) -> Result<ColoredDigraph> {
    check_density(density)?;
    if m == 0 {
        return Err(Error::InvalidParameter("m must be at least 1".into()));
    }
    let mut rng = rng(seed);
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(density) {
                arcs.push((u, v, rng.gen_range(0..m)));
            }
        }
    }
    ColoredDigraph::densified(n, arcs)
}

/// Like [`random_digraph`], but arcs only follow a random vertex order, so
/// the result is acyclic.
pub fn random_acyclic_digraph(
    n: usize,
    m: usize,
    density: f64,
    seed: u64,
) -> Result<ColoredDigraph> {
    check_density(density)?;
    if m == 0 {
        return Err(Error::InvalidParameter("m must be at least 1".into()));
    }
    let mut rng = rng(seed);
    let mut order: Vec<Vertex> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                arcs.push((order[i], order[j], rng.gen_range(0..m)));
            }
        }
    }
    ColoredDigraph::densified(n, arcs)
}

/// True when `t` has vertices `v_0..v_t`, `v_i -> v_j` for `i < j`, and the
/// single exception `v_t -> v_0`.
pub fn is_t_star_shaped(t: &Tournament) -> bool {
    let n = t.n();
    n >= 3
        && (0..n).all(|i| {
            (i + 1..n).all(|j| {
                let back = i == 0 && j == n - 1;
                t.beats(i, j) != back
            })
        })
}

/// A tournament of the shape checked by [`is_t_star_shaped`] on `t + 1`
/// vertices with colors drawn uniformly from `0..m`, then densified.
pub fn random_t_star_shaped(t: usize, m: usize, seed: u64) -> Result<Tournament> {
    if t < 2 || m == 0 {
        return Err(Error::InvalidParameter(format!(
            "T*-shaped tournament needs t >= 2 and m >= 1, got t = {t}, m = {m}"
        )));
    }
    let n = t + 1;
    let mut rng = rng(seed);
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let c = rng.gen_range(0..m);
            if i == 0 && j == t {
                arcs.push((j, i, c));
            } else {
                arcs.push((i, j, c));
            }
        }
    }
    validate_tournament(ColoredDigraph::densified(n, arcs)?)
}
