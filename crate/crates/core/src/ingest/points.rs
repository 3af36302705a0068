//! Planar point clouds: neighborhood graphs, the two-component Gaussian
//! mixture generator, and the two-cluster classification rate.

use std::fmt::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::graph::{build_graph, WeightedGraph};

pub type Point = [f64; 2];

#[derive(Debug, Clone, PartialEq)]
pub struct LabeledPoints {
    pub points: Vec<Point>,
    pub labels: Vec<usize>,
}

/// Edge rule and weighting of [`knn_eps_graph`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KnnEpsParams {
    /// Nearest neighbors linked from every point.
    pub k: usize,
    /// Every pair closer than this is linked.
    pub eps: f64,
    /// Weight `exp(-d / scale)`.
    pub scale: f64,
}

impl Default for KnnEpsParams {
    fn default() -> Self {
        KnnEpsParams {
            k: 5,
            eps: 0.2,
            scale: 0.2,
        }
    }
}

fn dist(a: &Point, b: &Point) -> f64 {
    (a[0] - b[0]).hypot(a[1] - b[1])
}

/// Symmetric union of the k-nearest-neighbor graph and the `eps`-ball graph.
///
/// Neighbor ranking breaks distance ties by point index.
pub fn knn_eps_graph(points: &[Point], params: KnnEpsParams) -> Result<WeightedGraph> {
    let n = points.len();
    if n < 2 {
        return Err(Error::TooFewPoints(n));
    }
    let mut linked = vec![false; n * n];
    let mut order: Vec<(f64, usize)> = Vec::with_capacity(n);
    for u in 0..n {
        order.clear();
        order.extend(
            (0..n)
                .filter(|&v| v != u)
                .map(|v| (dist(&points[u], &points[v]), v)),
        );
        order.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        for (rank, &(d, v)) in order.iter().enumerate() {
            if rank < params.k || d <= params.eps {
                linked[u.min(v) * n + u.max(v)] = true;
            } else {
                break;
            }
        }
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if linked[u * n + v] {
                let w = (-dist(&points[u], &points[v]) / params.scale).exp();
                // exp underflow would silently drop a kNN edge
                edges.push((u, v, w.max(f64::MIN_POSITIVE)));
            }
        }
    }
    build_graph(n, edges)
}

/// `n` draws from `B·N((0,0), I) + (1-B)·N((δ,δ), I)` with `B ~ Ber(1/2)`.
///
/// Label 0 marks the component at the origin, label 1 the shifted one. The
/// stream is ChaCha8 (`rand_chacha` 0.9) seeded with `seed_from_u64(seed)`;
/// per point: one Bernoulli(1/2) draw, then the x and y standard normals.
pub fn sample_gaussian_mixture(n: usize, delta: f64, seed: u64) -> LabeledPoints {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = Vec::with_capacity(n);
    let mut labels = Vec::with_capacity(n);
    for _ in 0..n {
        let origin = rng.random_bool(0.5);
        let shift = if origin { 0.0 } else { delta };
        let x: f64 = rng.sample(StandardNormal);
        let y: f64 = rng.sample(StandardNormal);
        points.push([x + shift, y + shift]);
        labels.push(usize::from(!origin));
    }
    LabeledPoints { points, labels }
}

/// Fraction of agreeing labels, maximized over both label permutations.
pub fn classification_rate(truth: &[usize], predicted: &[usize]) -> Result<f64> {
    if truth.len() != predicted.len() {
        return Err(Error::LengthMismatch(truth.len(), predicted.len()));
    }
    if let Some(&bad) = truth.iter().chain(predicted).find(|&&l| l > 1) {
        return Err(Error::InvalidLabel(bad));
    }
    if truth.is_empty() {
        return Ok(1.0);
    }
    let agree = truth.iter().zip(predicted).filter(|(a, b)| a == b).count();
    let best = agree.max(truth.len() - agree);
    Ok(best as f64 / truth.len() as f64)
}

/// Reads `x,y[,label]` rows; a non-numeric first row is taken as a header.
pub fn parse_points_csv(text: &str) -> Result<(Vec<Point>, Option<Vec<usize>>)> {
    let mut points = Vec::new();
    let mut labels: Vec<usize> = Vec::new();
    let mut labeled = None;
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if points.is_empty() && labeled.is_none() && fields[0].parse::<f64>().is_err() {
            continue;
        }
        let err = |message: String| Error::Parse {
            line: i + 1,
            message,
        };
        if !(2..=3).contains(&fields.len()) {
            return Err(err(format!(
                "expected `x,y[,label]`, found {} fields",
                fields.len()
            )));
        }
        match labeled {
            None => labeled = Some(fields.len() == 3),
            Some(l) if l != (fields.len() == 3) => {
                return Err(err("inconsistent number of columns".into()))
            }
            _ => {}
        }
        let coord = |t: &str| {
            t.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| err(format!("invalid coordinate `{t}`")))
        };
        points.push([coord(fields[0])?, coord(fields[1])?]);
        if let Some(t) = fields.get(2) {
            labels.push(t.parse().map_err(|_| err(format!("invalid label `{t}`")))?);
        }
    }
    Ok((points, labeled.unwrap_or(false).then_some(labels)))
}

pub fn emit_points_csv(points: &[Point], labels: Option<&[usize]>) -> String {
    let mut out = String::from(if labels.is_some() {
        "x,y,label\n"
    } else {
        "x,y\n"
    });
    for (i, p) in points.iter().enumerate() {
        match labels {
            Some(l) => writeln!(out, "{},{},{}", p[0], p[1], l[i]),
            None => writeln!(out, "{},{}", p[0], p[1]),
        }
        .expect("writing to a String");
    }
    out
}
