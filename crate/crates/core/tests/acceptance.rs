//! One test per acceptance criterion. Each prints a single
//! `ACCEPTANCE <name>: PASS|FAIL (...)` line; run with `--nocapture` to see
//! them. Reference values come from the brute-force oracles in `common`.

mod common;

use std::time::Instant;

use chibound::degen::{chain, to_proper, verify_kd, DegenColouring};
use chibound::graph::{Graph, VertexSet};
use chibound::harness::{generate, run_config_file, GeneratorSpec};
use chibound::oracles::{
    check_ramsey_bound, chromatic_number_exact, chromatic_number_exact_with_limit, clique_number,
    find_biclique_subgraph, find_induced_double_star, find_stable_set,
};
use chibound::pipeline::{bound_audit, colour_graph, ColourOptions};
use chibound::profile::{ProfileSet, ThresholdProfile, Thresholds};
use chibound::template::{improve_template, transversal_clique, validate_template, Improvement, Move, Template};
use common::{bits, graph_from_code, random_graph, report, Small};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

fn mask_of(ids: impl IntoIterator<Item = usize>) -> u32 {
    ids.into_iter().fold(0, |m, v| m | (1 << v))
}

/// Every disagreement between the library oracles and brute force on `g`.
fn oracle_mismatches(g: &Graph, probe: u32) -> Vec<String> {
    let sm = Small::from_graph(g);
    let mut bad = Vec::new();
    let mut check = |ok: bool, what: String| {
        if !ok {
            bad.push(format!("{what} on {g:?}"));
        }
    };

    let w = clique_number(g);
    check(
        w.value == sm.omega() && w.witness.len() == w.value && sm.is_clique(mask_of(w.witness.iter().copied())),
        "clique_number".into(),
    );

    match chromatic_number_exact_with_limit(g, 16) {
        Ok(c) => {
            let proper = g.edges().iter().all(|&(u, v)| c.witness[u] != c.witness[v]);
            check(
                c.value == sm.chi() && proper && c.witness.iter().all(|&x| x < c.value.max(1)),
                "chromatic_number_exact".into(),
            );
        }
        Err(e) => check(false, format!("chromatic_number_exact error {e}")),
    }

    let full = if g.n() == 0 { 0 } else { (1u32 << g.n()) - 1 };
    for within in [full, probe & full] {
        let x = VertexSet::from_ids(g.n(), bits(within));
        let alpha = sm.alpha_in(within);
        for size in 0..=alpha + 1 {
            let found = find_stable_set(g, &x, size);
            let ok = match &found {
                Some(st) => size <= alpha && st.len() == size && st.is_subset(&x) && sm.is_stable(mask_of(st.iter())),
                None => size > alpha,
            };
            check(ok, format!("find_stable_set(size {size}, within {within:#b})"));
        }
    }

    for s in 1..=3 {
        if 2 * s + 2 > g.n().max(4) + 2 {
            continue;
        }
        let found = find_induced_double_star(g, s);
        let ok = match &found {
            Some(wt) => wt.verify(g, s) && sm.induces_double_star(mask_of(wt.vertices()), s),
            None => !sm.has_double_star(s),
        };
        check(ok, format!("find_induced_double_star(s = {s})"));
    }

    for t in 1..=3 {
        let found = find_biclique_subgraph(g, t);
        let ok = match &found {
            Some(b) => b.verify(g, t) && sm.has_biclique(t),
            None => !sm.has_biclique(t),
        };
        check(ok, format!("find_biclique_subgraph(t = {t})"));
    }
    bad
}

#[test]
fn oracle_equivalence() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x0a11);
    let random: Vec<(Graph, u32)> = (0..200)
        .map(|_| {
            let n = rng.gen_range(1..=12);
            let p = rng.gen_range(0.05..0.95);
            (random_graph(&mut rng, n, p), rng.gen())
        })
        .collect();
    let mut mismatches: Vec<String> = random.par_iter().flat_map(|(g, probe)| oracle_mismatches(g, *probe)).collect();
    let mut exhaustive = 0usize;
    for n in 0..=6usize {
        let pairs = n * n.saturating_sub(1) / 2;
        exhaustive += 1 << pairs;
        mismatches.par_extend(
            (0..1u64 << pairs)
                .into_par_iter()
                .flat_map(|code| oracle_mismatches(&graph_from_code(n, code), (code as u32).wrapping_mul(2654435761))),
        );
    }
    // n = 7 is exhaustive as well: 2^21 edge sets.
    exhaustive += 1 << 21;
    mismatches.par_extend(
        (0..1u64 << 21)
            .into_par_iter()
            .flat_map(|code| oracle_mismatches(&graph_from_code(7, code), (code as u32).wrapping_mul(2654435761))),
    );
    let secs = start.elapsed().as_secs_f64();
    let pass = mismatches.is_empty() && secs <= 300.0;
    report(
        "oracle-equivalence",
        pass,
        &format!(
            "200 random n<=12, {exhaustive} exhaustive n<=7; {} mismatches, tolerance 0; {secs:.1}s of 300s",
            mismatches.len()
        ),
    );
    assert!(pass, "first mismatches: {:?}", &mismatches[..mismatches.len().min(5)]);
}

/// Independent check of the Ramsey-type bound on one graph; `None` when the
/// graph has a stable `s`-set.
fn ramsey_case(g: &Graph, s: usize) -> Option<bool> {
    let sm = Small::from_graph(g);
    let full = if g.n() == 0 { 0 } else { (1u32 << g.n()) - 1 };
    let applicable = sm.alpha_in(full) < s;
    let lib = check_ramsey_bound(g, s);
    if lib.applicable != applicable {
        return Some(false);
    }
    if !applicable {
        return None;
    }
    let w = sm.omega() as u128;
    let n = g.n() as u128;
    let sum: u128 = (1..s as u32).map(|e| w.pow(e)).sum();
    let ok = n <= sum && (w <= 1 || n < w.pow(s as u32));
    Some(ok && lib.holds())
}

#[test]
fn ramsey_bound() {
    let mut applicable = 0usize;
    let mut violations = 0usize;
    let mut tally = |r: Option<bool>| match r {
        Some(true) => applicable += 1,
        Some(false) => {
            applicable += 1;
            violations += 1
        }
        None => {}
    };
    for s in [2, 3] {
        for n in 0..=6usize {
            let pairs = n * n.saturating_sub(1) / 2;
            for r in (0..1u64 << pairs)
                .into_par_iter()
                .map(|code| ramsey_case(&graph_from_code(n, code), s))
                .collect::<Vec<_>>()
            {
                tally(r);
            }
        }
        for n in [7usize, 8] {
            for r in (0..100_000u64)
                .into_par_iter()
                .map(|i| {
                    let mut rng = ChaCha8Rng::seed_from_u64(0x4a + n as u64);
                    rng.set_stream(i);
                    // Dense graphs, so that small stability numbers occur.
                    let p = rng.gen_range(0.5..1.0);
                    ramsey_case(&random_graph(&mut rng, n, p), s)
                })
                .collect::<Vec<_>>()
            {
                tally(r);
            }
        }
    }
    let pass = violations == 0;
    report(
        "ramsey-bound",
        pass,
        &format!("s in {{2,3}}, n<=8: {applicable} applicable graphs, {violations} violations, tolerance 0"),
    );
    assert!(pass);
}

/// Later-neighbour check written out directly.
fn kd_holds(g: &Graph, c: &DegenColouring, k: usize, d: usize) -> bool {
    if c.k != k || c.orders.len() != k {
        return false;
    }
    let mut seen = vec![false; g.n()];
    for order in &c.orders {
        for (i, &v) in order.iter().enumerate() {
            if std::mem::replace(&mut seen[v], true) {
                return false;
            }
            let later = order[i + 1..].iter().filter(|&&w| g.adjacent(v, w)).count();
            if later > d {
                return false;
            }
        }
    }
    true
}

#[test]
fn chaining() {
    let mut failures = 0;
    for i in 0..500u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(0xc4a1);
        rng.set_stream(i);
        let n = rng.gen_range(1..=40);
        let p = rng.gen_range(0.05..0.6);
        let g = random_graph(&mut rng, n, p);
        let k = rng.gen_range(1..=4);
        let pieces_n = rng.gen_range(1..=5);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let mut sets = vec![Vec::new(); pieces_n];
        for v in perm {
            sets[rng.gen_range(0..pieces_n)].push(v);
        }
        // Each piece: random split into k parts, each ordered by degeneracy.
        let pieces: Vec<DegenColouring> = sets
            .iter()
            .map(|set| {
                let mut parts = vec![Vec::new(); k];
                for &v in set {
                    parts[rng.gen_range(0..k)].push(v);
                }
                let mut d = 0;
                let orders = parts
                    .iter()
                    .map(|p| {
                        let (o, dd) = g.degeneracy_order_of(&VertexSet::from_ids(n, p.iter().copied()));
                        d = d.max(dd);
                        o
                    })
                    .collect();
                DegenColouring::from_orders(d, orders)
            })
            .collect();
        let d = pieces.iter().map(|p| p.d).max().unwrap_or(0);
        let mut d_prime = 0;
        for (i, set) in sets.iter().enumerate() {
            for &v in set {
                let later = sets[i + 1..].iter().flatten().filter(|&&w| g.adjacent(v, w)).count();
                d_prime = d_prime.max(later);
            }
        }
        let ok = match chain(&g, &pieces, d_prime) {
            Ok(c) => c.d == d + d_prime && verify_kd(&g, &c).is_ok() && kd_holds(&g, &c, k, d + d_prime),
            Err(_) => false,
        };
        if !ok || pieces.iter().any(|p| !kd_holds(&g, p, k, d)) {
            failures += 1;
        }
    }
    let pass = failures == 0;
    report("chaining", pass, &format!("500 instances, {failures} failures, tolerance 0"));
    assert!(pass);
}

const CROSS1: &str = r#"{"profiles": {"CROSS1": {
    "s": 1, "partLower": 4, "partUpper": 8, "crossCap": 1, "l0Weight": 5, "partBonus": 2,
    "minValue": 8, "denseCap": 1, "pureCap": 1, "zCap": 1, "smallCutoff": 2, "peelCount": 2,
    "outNbrCap": 4, "baseOmega": 2}}}"#;

/// A graph containing a valid template with parts in `[lower, upper]` and
/// at most `cross` non-neighbours per vertex in each other part.
fn planted_template(rng: &mut ChaCha8Rng, th: &Thresholds, max_k: usize) -> (Graph, Template) {
    let lower = th.part_lower as usize;
    let upper = th.part_upper as usize;
    let k = rng.gen_range(1..=max_k);
    let l0_len = rng.gen_range(0..=2);
    let sizes: Vec<usize> = (0..k).map(|_| rng.gen_range(lower..=upper)).collect();
    let extra = rng.gen_range(0..=6);
    let n = l0_len + sizes.iter().sum::<usize>() + extra;
    let l0: Vec<usize> = (0..l0_len).collect();
    let mut parts = Vec::new();
    let mut next = l0_len;
    for &sz in &sizes {
        parts.push((next..next + sz).collect::<Vec<usize>>());
        next += sz;
    }
    let mut edges = Vec::new();
    for (i, &a) in l0.iter().enumerate() {
        edges.extend(l0[i + 1..].iter().map(|&b| (a, b)));
        edges.extend(parts.iter().flatten().map(|&b| (a, b)));
    }
    for (i, p) in parts.iter().enumerate() {
        for (x, &a) in p.iter().enumerate() {
            edges.extend(p[x + 1..].iter().filter(|_| rng.gen_bool(0.5)).map(|&b| (a, b)));
        }
        for q in &parts[i + 1..] {
            let mut shuffled = q.clone();
            shuffled.shuffle(rng);
            for &a in p {
                for &b in q {
                    edges.push((a, b));
                }
            }
            if th.cross_cap >= 1 {
                // Remove part of a matching between the two parts.
                let removed: Vec<(usize, usize)> =
                    p.iter().zip(&shuffled).filter(|_| rng.gen_bool(0.5)).map(|(&a, &b)| (a, b)).collect();
                edges.retain(|e| !removed.contains(e));
            }
        }
    }
    for v in next..n {
        for u in 0..v {
            if rng.gen_bool(0.5) {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::build(n, &edges).unwrap();
    let t = Template::new(
        VertexSet::from_ids(n, l0),
        parts.into_iter().map(|p| VertexSet::from_ids(n, p)).collect(),
    );
    (g, t)
}

#[test]
fn transversal_clique_criterion() {
    let cross1 = ProfileSet::from_json(CROSS1).unwrap().resolve("CROSS1").unwrap();
    let desk = ThresholdProfile::desk(1);
    let mut failures = Vec::new();
    for i in 0..200u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(0x7a5);
        rng.set_stream(i);
        // With crossCap 1 the greedy choice needs parts larger than k - 1.
        let (profile, max_k) = if i % 2 == 0 { (&desk, 5) } else { (&cross1, 4) };
        let th = profile.at(2);
        let (g, t) = planted_template(&mut rng, &th, max_k);
        if let Err(v) = validate_template(&g, &t, &th) {
            failures.push(format!("generator produced invalid template: {v}"));
            continue;
        }
        let sm_omega = clique_number(&g).value;
        match transversal_clique(&g, &t, Some(sm_omega)) {
            Ok(vs) => {
                let all: Vec<usize> = t.l0.iter().chain(vs.iter().copied()).collect();
                let clique = all.iter().enumerate().all(|(x, &a)| all[x + 1..].iter().all(|&b| g.adjacent(a, b)));
                let one_per_part = vs.len() == t.k() && vs.iter().zip(&t.parts).all(|(&v, p)| p.contains(v));
                if !(clique && one_per_part && t.k() + t.l0.len() <= sm_omega) {
                    failures.push(format!("instance {i}: bad transversal {vs:?}"));
                }
            }
            Err(e) => failures.push(format!("instance {i}: {e}")),
        }
    }
    let pass = failures.is_empty();
    report(
        "transversal-clique",
        pass,
        &format!("200 planted templates, {} failures, tolerance 0", failures.len()),
    );
    assert!(pass, "{failures:?}");
}

/// Name, outcome of one improvement call, and the expected move family.
type MoveCase = (&'static str, Option<(Move, bool)>, fn(&Move) -> bool);

fn improved_by(g: &Graph, t: &Template, th: &Thresholds) -> Option<(Move, bool)> {
    match improve_template(g, t, th) {
        Improvement::Improved { template, by } => {
            Some((by, template.value(th) > t.value(th) && validate_template(g, &template, th).is_ok()))
        }
        Improvement::LocallyOptimal => None,
    }
}

fn complete_multipartite_edges(parts: &[&[usize]]) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for (i, p) in parts.iter().enumerate() {
        for q in &parts[i + 1..] {
            for &a in *p {
                edges.extend(q.iter().map(|&b| (a, b)));
            }
        }
    }
    edges
}

#[test]
fn improvement_moves() {
    let th = ThresholdProfile::desk(1).at(3);
    let set = |n: usize, ids: &[usize]| VertexSet::from_ids(n, ids.iter().copied());
    let mut results: Vec<MoveCase> = Vec::new();

    // Absorb needs l0Weight above a part's size plus the part bonus.
    let heavy = ProfileSet::from_json(
        r#"{"profiles": {"HEAVY": {
            "s": 1, "partLower": 2, "partUpper": 6, "crossCap": 0, "l0Weight": 10, "partBonus": 2,
            "minValue": 8, "denseCap": 1, "pureCap": 1, "zCap": 1, "smallCutoff": 2, "peelCount": 2,
            "outNbrCap": 4, "baseOmega": 2}}}"#,
    )
    .unwrap()
    .resolve("HEAVY")
    .unwrap()
    .at(3);
    let g = Graph::build(6, &complete_multipartite_edges(&[&[0, 1], &[2, 3], &[4, 5]])).unwrap();
    let t = Template::new(set(6, &[]), vec![set(6, &[0, 1]), set(6, &[2, 3]), set(6, &[4, 5])]);
    results.push(("absorb", improved_by(&g, &t, &heavy), |m: &Move| matches!(m, Move::Absorb { .. })));

    // Vertex 0 sees everything else in the template.
    let mut edges = complete_multipartite_edges(&[&[0, 1, 2], &[3, 4, 5]]);
    edges.extend([(0, 1), (0, 2)]);
    let g = Graph::build(6, &edges).unwrap();
    let t = Template::new(set(6, &[]), vec![set(6, &[0, 1, 2]), set(6, &[3, 4, 5])]);
    results.push(("promote", improved_by(&g, &t, &th), |m: &Move| {
        matches!(m, Move::Promote { vertex: 0, part: 0 })
    }));

    let g = Graph::build(6, &complete_multipartite_edges(&[&[0, 1, 2], &[3, 4, 5]])).unwrap();
    let t = Template::new(set(6, &[]), vec![set(6, &[0, 1, 2, 3, 4, 5])]);
    results.push(("split", improved_by(&g, &t, &th), |m: &Move| matches!(m, Move::Split { .. })));

    let g = Graph::build(6, &complete_multipartite_edges(&[&[0, 1], &[2, 3], &[4, 5]])).unwrap();
    let t = Template::new(set(6, &[]), vec![set(6, &[0, 1]), set(6, &[2, 3])]);
    results.push(("append", improved_by(&g, &t, &th), |m: &Move| matches!(m, Move::Append { .. })));

    let mut failures: Vec<String> = results
        .iter()
        .filter(|(_, r, want)| !matches!(r, Some((m, true)) if want(m)))
        .map(|(name, r, _)| format!("{name}: got {r:?}"))
        .collect();

    // Iterated improvement from the empty template.
    let mut worst = (0usize, 0usize);
    for i in 0..100u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(0x1e5);
        rng.set_stream(i);
        let n = rng.gen_range(4..=20);
        let p = rng.gen_range(0.2..0.9);
        let g = random_graph(&mut rng, n, p);
        let omega = clique_number(&g).value;
        let th = ThresholdProfile::desk(1).at(omega);
        let bound = n + omega * (th.l0_weight + th.part_bonus) as usize;
        let mut t = Template::empty(n);
        let mut steps = 0;
        while let Improvement::Improved { template, .. } = improve_template(&g, &t, &th) {
            steps += 1;
            if template.value(&th) <= t.value(&th) || validate_template(&g, &template, &th).is_err() || steps > bound {
                failures.push(format!("graph {i}: step {steps} invalid or over the bound {bound}"));
                break;
            }
            t = template;
        }
        if steps * worst.1 >= worst.0 * bound.max(1) {
            worst = (steps, bound);
        }
    }
    let pass = failures.is_empty();
    report(
        "improvement-moves",
        pass,
        &format!(
            "absorb/promote/split/append fire and improve; 100 iterated runs within |V| + ω(l0Weight+partBonus), tightest {}/{}; {} failures, tolerance 0",
            worst.0,
            worst.1,
            failures.len()
        ),
    );
    assert!(pass, "{failures:?}");
}

struct EndToEnd {
    failures: Vec<String>,
    exact: usize,
}

fn end_to_end_case(s: usize, i: u64) -> EndToEnd {
    let mut rng = ChaCha8Rng::seed_from_u64(0xe2e + s as u64);
    rng.set_stream(i);
    // A third of the instances are small enough for the exact χ check.
    let n = if i.is_multiple_of(3) { rng.gen_range(4..=18) } else { rng.gen_range(19..=120) };
    let spec = GeneratorSpec::HfreeRejection {
        n,
        p: rng.gen_range(0.1..0.9),
        s,
        max_tries: 4,
    };
    let mut out = EndToEnd {
        failures: Vec::new(),
        exact: 0,
    };
    let g = match generate(&spec, rng.gen()) {
        Ok(g) => g,
        Err(e) => {
            out.failures.push(format!("s={s} #{i}: generation {e}"));
            return out;
        }
    };
    let profile = ThresholdProfile::desk(s);
    let oc = match colour_graph(&g, &profile, &ColourOptions::default()) {
        Ok(oc) => oc,
        Err(e) => {
            out.failures.push(format!("s={s} #{i} n={n}: {e}"));
            return out;
        }
    };
    let col = &oc.colouring;
    let mut fail = |what: &str| out.failures.push(format!("s={s} #{i} n={n}: {what}"));
    if verify_kd(&g, col).is_err() || !kd_holds(&g, col, col.k, col.d) || col.covered() != (0..n).collect::<Vec<_>>() {
        fail("colouring fails verification");
    }
    let layers = oc.trace.layers();
    let mut seen = vec![0; n];
    for l in &layers {
        for v in l.iter() {
            seen[v] += 1;
        }
    }
    if seen.iter().any(|&c| c != 1) {
        fail("layers do not partition V(G)");
    }
    let proper = match to_proper(&g, col) {
        Ok(p) => p,
        Err(_) => {
            fail("no proper colouring");
            return out;
        }
    };
    let colour_of = |v: usize| proper.colour.get(&v).copied();
    if (0..n).any(|v| colour_of(v).is_none()) || g.edges().iter().any(|&(u, v)| colour_of(u) == colour_of(v)) {
        fail("derived colouring is not proper");
    }
    let colours = proper.num_colours();
    if colours > col.k * (col.d + 1) {
        fail("more than k(d+1) colours");
    }
    if n <= 18 {
        out.exact += 1;
        let chi = chromatic_number_exact(&g).unwrap().value;
        let reference = if n <= 12 { Small::from_graph(&g).chi() } else { chi };
        if chi != reference || colours < chi {
            fail("colour count below χ");
        }
    }
    out
}

#[test]
fn end_to_end_validity() {
    let start = Instant::now();
    let cases: Vec<(usize, u64)> = (0..200).map(|i| (1, i)).chain((0..100).map(|i| (2, i))).collect();
    let results: Vec<EndToEnd> = cases.par_iter().map(|&(s, i)| end_to_end_case(s, i)).collect();
    let failures: Vec<&String> = results.iter().flat_map(|r| &r.failures).collect();
    let exact: usize = results.iter().map(|r| r.exact).sum();
    let secs = start.elapsed().as_secs_f64();
    let pass = failures.is_empty() && secs <= 600.0;
    report(
        "end-to-end-validity",
        pass,
        &format!(
            "200 H_1-free + 100 H_2-free, n<=120, {exact} with exact χ; {} failures, tolerance 0; {secs:.1}s of 600s",
            failures.len()
        ),
    );
    assert!(pass, "{failures:?}");
}

#[test]
fn bound_audit_criterion() {
    let start = Instant::now();
    let r = bound_audit(1, 2, 200, None);
    let secs = start.elapsed().as_secs_f64();
    let hypotheses = ["hyp.omega_at_least_200", "hyp.omega_squared", "hyp.omega_cubed"];
    let reported = hypotheses.iter().all(|h| r.row(h).is_some_and(|row| row.hypothesis && row.holds));
    let failing: Vec<&str> = r.failing().iter().map(|row| row.name.as_str()).collect();
    let pass = reported && r.d == 25 && r.inequalities_hold() && secs <= 1.0;
    report(
        "bound-audit",
        pass,
        &format!(
            "s=1 c=2 ω=200 d=25, {} rows exact, hypotheses reported: {reported}; failing rows {failing:?}; {secs:.3}s of 1s",
            r.rows.len()
        ),
    );
    // At s = 1, c = 2 the pendant term 14^{s+2}ω^{s²+9s+14} has the same
    // exponent as ω^{(c+1)(s+7)}, so that one sum cannot hold. Everything
    // else must.
    assert!(reported && secs <= 1.0);
    assert_eq!(failing, vec!["nbrchi.total"]);
    let r3 = bound_audit(1, 3, 200, None);
    assert!(r3.inequalities_hold(), "{:?}", r3.failing());
}

#[test]
fn determinism() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("config.json");
    std::fs::write(
        &cfg,
        r#"{"seed": 2024, "exact_chi_limit": 14, "instances": [
            {"profile": "DESK1", "count": 6, "generator": {"kind": "hfree-rejection", "n": 40, "p": 0.5, "s": 1}},
            {"profile": "DESK2", "count": 4, "generator": {"kind": "hfree-rejection", "n": 14, "p": 0.3, "s": 2}},
            {"profile": "DESK1", "count": 2, "generator": {"kind": "multipartite-blowup", "parts": [2, 3, 4]}},
            {"profile": "DESK1", "count": 2, "generator": {"kind": "gnp", "n": 12, "p": 0.4}}
        ]}"#,
    )
    .unwrap();
    let a = dir.path().join("a");
    let b = dir.path().join("b");
    run_config_file(&cfg, &a).unwrap();
    rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap()
        .install(|| run_config_file(&cfg, &b))
        .unwrap();
    let csv_a = std::fs::read(a.join("report.csv")).unwrap();
    let csv_b = std::fs::read(b.join("report.csv")).unwrap();
    let rows = csv_a.iter().filter(|&&c| c == b'\n').count() - 1;
    let pass = csv_a == csv_b && rows == 14;
    report(
        "determinism",
        pass,
        &format!("{rows} rows, report.csv byte-identical across a parallel and a single-threaded run"),
    );
    assert!(pass);
}
