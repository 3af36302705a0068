//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so the report reads top to bottom. Exits
//! nonzero if a gating criterion fails. Criterion 9 runs only when
//! `XIST_MUSAE_EDGES` points at the MUSAE Facebook edge list.

use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use xist::ingest::{
    classification_rate, image_grid_graph, knn_eps_graph, largest_component, parse_edge_list,
    sample_gaussian_mixture, GrayImage, KnnEpsParams,
};
use xist::oracle::{
    best_st_mincut_xcut, check_noncrossing, check_path_inequality, check_three_cut_nonuniqueness,
    distinct_pair_values, exact_xcut, noncrossing_quadruple, random_connected_graph, same_value,
};
use xist::{
    build_graph, cut_with, multi_xist, normalized_xcut_value, xcut_value, xist, xist_on_subset,
    CutKind, Error, Terminals, VertexSet, WeightedGraph,
};

const VALUE_TOL: f64 = 1e-9;

type Criterion<'a> = dyn Fn(&mut Report) -> xist::Result<()> + 'a;

struct Report {
    gating_failures: usize,
}

impl Report {
    fn line(&mut self, id: &str, gating: bool, pass: bool, detail: String) {
        let status = match (pass, gating) {
            (true, _) => "PASS",
            (false, true) => "FAIL",
            (false, false) => "WARN",
        };
        if gating && !pass {
            self.gating_failures += 1;
        }
        println!("{status} [{id}] {detail}");
    }
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}

fn criterion1_graphs() -> Vec<WeightedGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(20_241);
    (0..200)
        .map(|_| {
            let n = rng.random_range(4..=10);
            random_connected_graph(&mut rng, n, 0.5, 0.5, 1.5)
        })
        .collect()
}

fn oracle_equivalence(report: &mut Report, graphs: &[WeightedGraph]) -> xist::Result<()> {
    let start = Instant::now();
    let (mut checked, mut vacuous, mut bad) = (0, 0, Vec::new());
    for (i, g) in graphs.iter().enumerate() {
        let vloc = g.local_maxima();
        if vloc.len() < 2 {
            vacuous += 1;
            continue;
        }
        for kind in CutKind::BALANCED {
            let mut pairwise = f64::INFINITY;
            for (a, &s) in vloc.iter().enumerate() {
                for &t in &vloc[a + 1..] {
                    pairwise = pairwise.min(best_st_mincut_xcut(g, kind, s, t)?);
                }
            }
            let got = xist(g, kind)?.result.value;
            checked += 1;
            if !same_value(got, pairwise) {
                bad.push(format!("graph {i} {kind}: xist {got} vs {pairwise}"));
            }
        }
    }
    report.line(
        "1 oracle equivalence",
        true,
        bad.is_empty() && checked > 0,
        format!(
            "{checked} (graph, kind) comparisons, {vacuous} graphs with one local maximum, {} mismatches, {:.1}s{}",
            bad.len(),
            start.elapsed().as_secs_f64(),
            bad.first().map(|b| format!("; first: {b}")).unwrap_or_default()
        ),
    );
    Ok(())
}

/// The same sweep over random terminal sets of 3 or more vertices, where the
/// local-maximum graphs above rarely reach.
fn oracle_equivalence_subsets(report: &mut Report) -> xist::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(5_150);
    let (mut checked, mut bad) = (0, Vec::new());
    for i in 0..200 {
        let n = rng.random_range(4..=10);
        let g = random_connected_graph(&mut rng, n, 0.5, 0.5, 1.5);
        let subset = loop {
            let s = VertexSet::from_vertices(n, (0..n).filter(|_| rng.random_bool(0.6)));
            if s.len() >= 3 {
                break s;
            }
        };
        let terminals = subset.to_vec();
        for kind in CutKind::BALANCED {
            let mut pairwise = f64::INFINITY;
            for (a, &s) in terminals.iter().enumerate() {
                for &t in &terminals[a + 1..] {
                    pairwise = pairwise.min(best_st_mincut_xcut(&g, kind, s, t)?);
                }
            }
            let run = xist_on_subset(&g, kind, &subset)?;
            checked += 1;
            if !same_value(run.result.value, pairwise) || run.flow_calls != terminals.len() - 1 {
                bad.push(format!(
                    "graph {i} {kind}: {} vs {pairwise}",
                    run.result.value
                ));
            }
        }
    }
    report.line(
        "1+ arbitrary terminal sets",
        false,
        bad.is_empty(),
        format!(
            "{checked} comparisons, {} mismatches{}",
            bad.len(),
            bad.first()
                .map(|b| format!("; first: {b}"))
                .unwrap_or_default()
        ),
    );
    Ok(())
}

fn call_count(report: &mut Report, graphs: &[WeightedGraph]) -> xist::Result<()> {
    let (mut checked, mut bad_calls, mut bad_distinct, mut max_distinct) = (0, 0, 0, 0);
    for g in graphs {
        let vloc = g.local_maxima();
        if vloc.len() < 2 {
            // no pair to cut: the sweep refuses before any flow call
            if xist(g, CutKind::NCut) != Err(Error::DegenerateVloc) {
                bad_calls += 1;
            }
            continue;
        }
        checked += 1;
        for kind in CutKind::BALANCED {
            if xist(g, kind)?.flow_calls != vloc.len() - 1 {
                bad_calls += 1;
            }
        }
        let distinct = distinct_pair_values(g, &vloc)?;
        max_distinct = max_distinct.max(distinct);
        if distinct > vloc.len() - 1 {
            bad_distinct += 1;
        }
    }
    report.line(
        "2 call count",
        true,
        bad_calls == 0 && bad_distinct == 0,
        format!(
            "{checked} graphs: {bad_calls} with flow calls != |V_loc|-1, {bad_distinct} with more than |V_loc|-1 distinct pair values (max seen {max_distinct})"
        ),
    );
    Ok(())
}

fn min_cut_structure(report: &mut Report) -> xist::Result<()> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7_331);
    let random_graph = |rng: &mut ChaCha8Rng| {
        let n = rng.random_range(4..=12);
        random_connected_graph(rng, n, 0.5, 0.5, 1.5)
    };
    let (mut path, mut three, mut noncross) = ((0, 0), (0, 0), (0, 0));
    while path.0 < 500 {
        let g = random_graph(&mut rng);
        let len = rng.random_range(2..=g.n().min(7));
        let mut seq: Vec<usize> = Vec::with_capacity(len);
        while seq.len() < len {
            let v = rng.random_range(0..g.n());
            if seq.last() != Some(&v) {
                seq.push(v);
            }
        }
        path.0 += 1;
        path.1 += usize::from(!check_path_inequality(&g, &seq)?);
    }
    while three.0 < 500 {
        let g = random_graph(&mut rng);
        let s = rng.random_range(0..g.n());
        let t = (s + rng.random_range(1..g.n())) % g.n();
        let v = (0..g.n())
            .filter(|&x| x != s && x != t)
            .nth(rng.random_range(0..g.n() - 2))
            .unwrap();
        three.0 += 1;
        three.1 += usize::from(!check_three_cut_nonuniqueness(&g, s, t, v)?);
    }
    while noncross.0 < 500 {
        let g = random_graph(&mut rng);
        if let Some((s, t, u, v)) = noncrossing_quadruple(&mut rng, &g) {
            noncross.0 += 1;
            noncross.1 += usize::from(!check_noncrossing(&g, s, t, u, v)?);
        }
    }
    report.line(
        "3 min-cut structure",
        true,
        path.1 + three.1 + noncross.1 == 0,
        format!(
            "violations: path inequality {}/{}, three-cut {}/{}, noncrossing {}/{}; {:.1}s",
            path.1,
            path.0,
            three.1,
            three.0,
            noncross.1,
            noncross.0,
            start.elapsed().as_secs_f64()
        ),
    );
    Ok(())
}

fn dumbbell() -> WeightedGraph {
    build_graph(
        6,
        [
            (0, 1, 1.0),
            (1, 2, 1.0),
            (0, 2, 1.0),
            (3, 4, 1.0),
            (4, 5, 1.0),
            (3, 5, 1.0),
            (2, 3, 0.5),
        ],
    )
    .unwrap()
}

fn dumbbell_fixture(report: &mut Report) -> xist::Result<()> {
    let g = dumbbell();
    let ncut = xist(&g, CutKind::NCut)?;
    let ratio = xist(&g, CutKind::RatioCut)?;
    let cheeger = xist(&g, CutKind::CheegerCut)?;
    let s = VertexSet::from_vertices(6, [0, 1, 2]);
    let exact_ok = CutKind::BALANCED
        .iter()
        .all(|&k| exact_xcut(&g, k).is_ok_and(|e| e.partition == s));
    let pass = close(ncut.result.value, 0.5 / 42.25, 1e-12)
        && ncut.result.partition == s
        && close(ncut.result.normalized_value, 0.153846, 1e-6)
        && close(ncut.result.normalized_value, 2.0 / 13.0, 1e-9)
        && close(ratio.result.value, 1.0 / 18.0, 1e-12)
        && close(cheeger.result.value, 1.0 / 13.0, 1e-12)
        && exact_ok;
    report.line(
        "4 D6 fixture",
        true,
        pass,
        format!(
            "NCut {:.7} on {:?} (normalized {:.6}), RatioCut {:.7}, Cheeger {:.7}, brute force agrees: {exact_ok}",
            ncut.result.value, ncut.result.partition, ncut.result.normalized_value, ratio.result.value, cheeger.result.value
        ),
    );
    Ok(())
}

fn random_proper_subset(rng: &mut ChaCha8Rng, n: usize) -> VertexSet {
    loop {
        let s = VertexSet::from_vertices(n, (0..n).filter(|_| rng.random_bool(0.5)));
        if s.is_proper() {
            return s;
        }
    }
}

fn minimizers(values: &[f64]) -> Vec<usize> {
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    (0..values.len()).filter(|&i| values[i] == min).collect()
}

fn normalization_laws(report: &mut Report) -> xist::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let (mut scale_checks, mut scale_bad, mut argmin_checks, mut argmin_bad) = (0, 0, 0, 0);
    for _ in 0..100 {
        let n = rng.random_range(4..=10);
        let g = random_connected_graph(&mut rng, n, 0.5, 0.5, 1.5);
        let s = random_proper_subset(&mut rng, n);
        for c in [0.1, 3.0, 10.0] {
            let scaled = g.scale_weights(c)?;
            for kind in CutKind::BALANCED {
                let a = normalized_xcut_value(&g, kind, &s)?;
                let b = normalized_xcut_value(&scaled, kind, &s)?;
                scale_checks += 1;
                if (a - b).abs() > VALUE_TOL * a.abs().max(1.0) {
                    scale_bad += 1;
                }
            }
        }
        for kind in CutKind::BALANCED {
            let mut raw = Vec::new();
            let mut norm = Vec::new();
            for mask in 1..(1u64 << n) - 1 {
                let s = VertexSet::from_mask(n, mask);
                raw.push(xcut_value(&g, kind, &s)?);
                norm.push(normalized_xcut_value(&g, kind, &s)?);
            }
            argmin_checks += 1;
            if minimizers(&raw) != minimizers(&norm) {
                argmin_bad += 1;
            }
        }
    }
    report.line(
        "5 normalization laws",
        true,
        scale_bad == 0 && argmin_bad == 0,
        format!(
            "scale invariance {scale_bad}/{scale_checks} violations, argmin sets {argmin_bad}/{argmin_checks} differ"
        ),
    );
    Ok(())
}

fn refines(finer: &[VertexSet], coarser: &[VertexSet]) -> bool {
    finer.iter().all(|f| coarser.iter().any(|c| f.is_subset(c)))
}

fn multi_xist_structure(report: &mut Report) -> xist::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(4_242);
    let (mut runs, mut bad) = (0, Vec::new());
    for i in 0..100 {
        let n = rng.random_range(6..=30);
        let p = rng.random_range(0.15..0.6);
        let g = random_connected_graph(&mut rng, n, p, 0.5, 1.5);
        for kind in CutKind::BALANCED {
            let two_way = cut_with(&g, kind, &Terminals::LocalMaxima)?
                .result
                .partition;
            for k in 2..=4 {
                let run = multi_xist(&g, kind, k)?;
                runs += 1;
                let mut cover = VertexSet::empty(n);
                let mut disjoint = true;
                for c in &run.clusters {
                    disjoint &= cover.is_disjoint(c);
                    cover = cover.union(c);
                }
                let structure = run.clusters.len() == k
                    && run.clusters.iter().all(|c| !c.is_empty())
                    && disjoint
                    && cover == VertexSet::full(n)
                    && run.labels.len() == n
                    && run.labels.iter().all(|&l| l < k);
                let refinement = run
                    .steps
                    .windows(2)
                    .all(|w| refines(&w[1].clusters, &w[0].clusters))
                    && run.steps.last().is_some_and(|s| s.clusters == run.clusters);
                let matches = k != 2
                    || (run.clusters.contains(&two_way)
                        && run.clusters.contains(&two_way.complement()));
                if !(structure && refinement && matches) {
                    bad.push(format!(
                        "graph {i} n={n} {kind} k={k}: structure {structure}, refinement {refinement}, 2-way match {matches}"
                    ));
                }
            }
        }
    }
    report.line(
        "6 Multi-Xist structure",
        true,
        bad.is_empty(),
        format!(
            "{runs} runs, {} failures{}",
            bad.len(),
            bad.first()
                .map(|b| format!("; first: {b}"))
                .unwrap_or_default()
        ),
    );
    Ok(())
}

fn gaussian_quality(report: &mut Report) -> xist::Result<()> {
    let mut means = Vec::new();
    for delta in [4.0, 2.0] {
        let mut total = 0.0;
        for seed in 0..20 {
            let data = sample_gaussian_mixture(100, delta, seed);
            let g = knn_eps_graph(&data.points, KnnEpsParams::default())?;
            let s = cut_with(&g, CutKind::NCut, &Terminals::LocalMaxima)?
                .result
                .partition;
            let predicted: Vec<usize> = (0..g.n()).map(|v| usize::from(s.contains(v))).collect();
            total += classification_rate(&data.labels, &predicted)?;
        }
        means.push(total / 20.0);
    }
    report.line(
        "7 Gaussian mixture",
        true,
        means[0] >= 0.9 && means[1] >= 0.6,
        format!(
            "mean rate {:.3} at delta=4 (need >= 0.9), {:.3} at delta=2 (need >= 0.6)",
            means[0], means[1]
        ),
    );
    Ok(())
}

fn log_log_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let mx = lx.iter().sum::<f64>() / lx.len() as f64;
    let my = ly.iter().sum::<f64>() / ly.len() as f64;
    let cov: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let var: f64 = lx.iter().map(|x| (x - mx).powi(2)).sum();
    cov / var
}

fn runtime_scaling(report: &mut Report) -> xist::Result<()> {
    let img = GrayImage::synthetic(64)?;
    let sizes = [8usize, 12, 16, 24, 32];
    let mut ns = Vec::new();
    let mut times = Vec::new();
    let mut info = Vec::new();
    for &r in &sizes {
        let ig = image_grid_graph(&img, r)?;
        let mut best = f64::INFINITY;
        let mut calls = 0;
        // enough repetitions that the smallest grid still takes measurable time
        let reps = (20_000 / (r * r)).clamp(5, 200);
        for _ in 0..7 {
            let start = Instant::now();
            for _ in 0..reps {
                calls = cut_with(&ig.graph, CutKind::NCut, &Terminals::LocalMaxima)?.flow_calls;
            }
            best = best.min(start.elapsed().as_secs_f64() / reps as f64);
        }
        ns.push((r * r) as f64);
        times.push(best);
        info.push(format!("r={r}: {:.2e}s/{calls} flows", best));
    }
    let slope = log_log_slope(&ns, &times);
    report.line(
        "8 runtime scaling",
        true,
        (0.8..=2.6).contains(&slope),
        format!(
            "log-log slope {slope:.2} (band [0.8, 2.6]); {}",
            info.join(", ")
        ),
    );
    Ok(())
}

fn musae_facebook(report: &mut Report) -> xist::Result<()> {
    let Ok(path) = std::env::var("XIST_MUSAE_EDGES") else {
        println!("SKIP [9 MUSAE Facebook] set XIST_MUSAE_EDGES to a local edge list to run");
        return Ok(());
    };
    let text = match std::fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) => {
            report.line("9 MUSAE Facebook", false, false, format!("{path}: {e}"));
            return Ok(());
        }
    };
    // tolerate the CSV header and commas of the published file
    let text: String = text
        .lines()
        .filter(|l| l.chars().next().is_some_and(|c| c.is_ascii_digit()))
        .map(|l| l.replace(',', " ") + "\n")
        .collect();
    let g = largest_component(&parse_edge_list(&text)?.graph).graph;
    let start = Instant::now();
    let run = cut_with(&g, CutKind::NCut, &Terminals::LocalMaxima)?;
    let competitor = 17.23e-8;
    report.line(
        "9 MUSAE Facebook",
        false,
        run.result.value < competitor,
        format!(
            "n={} m={} NCut {:.3e} vs 1.723e-7, {} flows, {:.1}s",
            g.n(),
            g.m(),
            run.result.value,
            run.flow_calls,
            start.elapsed().as_secs_f64()
        ),
    );
    Ok(())
}

fn main() -> ExitCode {
    let mut report = Report { gating_failures: 0 };
    let graphs = criterion1_graphs();
    let steps: [(&str, Box<Criterion>); 10] = [
        ("1", Box::new(|r| oracle_equivalence(r, &graphs))),
        ("1+", Box::new(oracle_equivalence_subsets)),
        ("2", Box::new(|r| call_count(r, &graphs))),
        ("3", Box::new(min_cut_structure)),
        ("4", Box::new(dumbbell_fixture)),
        ("5", Box::new(normalization_laws)),
        ("6", Box::new(multi_xist_structure)),
        ("7", Box::new(gaussian_quality)),
        ("8", Box::new(runtime_scaling)),
        ("9", Box::new(musae_facebook)),
    ];
    for (id, step) in &steps {
        if let Err(e) = step(&mut report) {
            report.line(id, true, false, format!("error: {e}"));
        }
    }
    if report.gating_failures == 0 {
        println!("acceptance: all gating criteria passed");
        ExitCode::SUCCESS
    } else {
        println!(
            "acceptance: {} gating criteria failed",
            report.gating_failures
        );
        ExitCode::FAILURE
    }
}
