//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use adinkra::code::{all_codes, d2n_family, weight_sum_identity};
use adinkra::construct::*;
use adinkra::dashing::{anticommutation_failures, is_totally_odd, solve_dashings};
use adinkra::heights::{movable_vertices, move_vertex, valise, Direction, HeightAssignment};
use adinkra::latin::to_latin;
use adinkra::matrix::to_matrix;
use adinkra::structure::{bicolor_report, exchange_group, extract_code, DEFAULT_GROUP_CAP};
use adinkra::susy::{emit_rules, render, verify_algebra, RenderFormat};
use adinkra::{agf, BitVector, ColoredGraph, LinearCode, Sign};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;

fn fixture(name: &str) -> ColoredGraph {
    let path = format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"));
    agf::parse(&std::fs::read_to_string(&path).unwrap()).unwrap()
}

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn code(len: usize, words: &[&str]) -> LinearCode {
    let v: Vec<BitVector> = words.iter().map(|w| w.parse().unwrap()).collect();
    LinearCode::span(len, &v).unwrap()
}

/// The quotient codes named in the census criterion.
fn census_codes() -> Vec<(usize, LinearCode)> {
    let mut out: Vec<(usize, LinearCode)> = (1..=6).map(|n| (n, LinearCode::zero(n).unwrap())).collect();
    out.push((3, code(3, &["111"])));
    out.push((5, code(5, &["11110"])));
    out.push((6, d2n_family(3).unwrap()));
    out.push((8, d2n_family(4).unwrap()));
    out
}

fn latin_rectangles() -> Outcome {
    let start = Instant::now();
    let k4 = fixture("k4_tetrahedral.agf");
    check(k4 == build_complete_even(2).unwrap(), "K_4 fixture differs from constructor")?;
    let k4_text = to_latin(&k4).unwrap().render_text(&names(&["Black", "Blue", "Red"]));
    let k4_golden = "\
V     1 2 3 4
Black 4 3 2 1
Blue  3 4 1 2
Red   2 1 4 3
";
    check(k4_text == k4_golden, format!("K_4 table:\n{k4_text}"))?;

    let q3 = fixture("q3_twisted.agf");
    let q3_text = to_latin(&q3).unwrap().render_text(&names(&["Blue", "Green", "Red"]));
    let q3_golden = "\
V     1 2 3 4 | 5 6 7 8
Blue  6 5 7 8 | 2 1 3 4
Green 5 6 8 7 | 1 2 4 3
Red   7 8 5 6 | 3 4 1 2
";
    check(q3_text == q3_golden, format!("Q_3 table:\n{q3_text}"))?;
    let elapsed = start.elapsed();
    check(elapsed < Duration::from_secs(1), format!("took {elapsed:?}"))?;
    Ok(format!("both tables byte-identical in {elapsed:?}"))
}

fn semi_magic_matrices() -> Outcome {
    let k4 = to_matrix(&fixture("k4_tetrahedral.agf")).unwrap();
    check(
        k4.entries == [[0, 3, 2, 1], [3, 0, 1, 2], [2, 1, 0, 3], [1, 2, 3, 0]],
        format!("K_4 matrix {:?}", k4.entries),
    )?;
    let q3 = to_matrix(&fixture("q3_twisted.agf")).unwrap();
    let top = [[2, 1, 3, 0], [1, 2, 0, 3], [3, 0, 1, 2], [0, 3, 2, 1]];
    let mut expected = vec![vec![0i64; 8]; 8];
    for r in 0..4 {
        for c in 0..4 {
            expected[r][c + 4] = top[r][c];
            expected[c + 4][r] = top[r][c];
        }
    }
    check(q3.entries == expected, format!("Q_3 matrix {:?}", q3.entries))?;
    for m in [&k4, &q3] {
        check(m.line_sum() == 6, "line sum")?;
        check(m.is_semi_magic(), "unsigned line sums differ from 6")?;
        check(m.is_symmetric() && m.zero_diagonal(), "not symmetric with zero diagonal")?;
    }
    Ok("both matrices exact, line sums 6, symmetric, zero diagonal".into())
}

fn exchange_groups() -> Outcome {
    let k4 = exchange_group(&fixture("k4_tetrahedral.agf"), DEFAULT_GROUP_CAP).unwrap();
    check(k4.order == Some(4) && k4.elementary_abelian_2, format!("K_4: {k4:?}"))?;
    let q3 = exchange_group(&fixture("q3_twisted.agf"), DEFAULT_GROUP_CAP).unwrap();
    check(
        q3.order == Some(8) && !q3.abelian && q3.max_element_order == Some(4),
        format!("Q_3: {q3:?}"),
    )?;
    for m in 2..=6 {
        let ex = exchange_group(&build_bicolor_cycle(m).unwrap(), DEFAULT_GROUP_CAP).unwrap();
        check(ex.order == Some(2 * m), format!("{}-cycle: {ex:?}", 2 * m))?;
    }
    Ok("orders 4, 8 (non-abelian, element of order 4), 2m for m = 2..6".into())
}

fn bicolor_structure() -> Outcome {
    let r = bicolor_report(&fixture("q3_twisted.agf")).unwrap();
    let ms: Vec<usize> = r.pairs.iter().map(|p| p.m).collect();
    check(ms == [2, 4, 4], format!("m values {ms:?}"))?;
    let profiles: Vec<&[usize]> = r.pairs.iter().map(|p| p.cycle_lengths.as_slice()).collect();
    check(
        profiles == [&[4, 4][..], &[8][..], &[8][..]],
        format!("cycle profiles {profiles:?}"),
    )?;
    let k44 = bicolor_report(&build_complete_bipartite(4).unwrap()).unwrap();
    check(!k44.is_perfect_1factorization(), "K_4,4 reported perfect")?;
    let k4 = bicolor_report(&fixture("k4_tetrahedral.agf")).unwrap();
    check(k4.is_perfect_1factorization(), "K_4 not reported perfect")?;
    Ok("m = {2, 4, 4}; K_4,4 not perfect; K_4 perfect".into())
}

fn quotient_census() -> Outcome {
    for (n, c) in census_codes() {
        let k = c.dimension();
        let g = build_quotient(n, &c).unwrap();
        let tag = format!("N={n} k={k}");
        check(g.n() == 1 << (n - k), format!("{tag}: {} vertices", g.n()))?;
        check(g.edges().len() == n << (n - k - 1), format!("{tag}: {} edges", g.edges().len()))?;
        check(g.is_bipartite() == c.classify().even, format!("{tag}: bipartite mismatch"))?;
        check(bicolor_report(&g).unwrap().is_quadrilateral(), format!("{tag}: not quadrilateral"))?;
    }
    let f3 = build_folded_cube(3).unwrap();
    check(
        f3.n() == 4 && f3.vertices().all(|v| f3.neighbors(v).count() == 3),
        "F_3 is not complete on 4 vertices",
    )?;
    let f4 = build_folded_cube(4).unwrap();
    let (a, b) = f4.bipartition().ok_or("F_4 not bipartite")?;
    check(a.len() == 4 && b.len() == 4, "F_4 parts are not 4 + 4")?;
    check(
        a.iter().all(|&u| b.iter().all(|&w| f4.edge_between(u, w).is_some())),
        "F_4 is not complete bipartite",
    )?;
    Ok(format!("{} codes match 2^(N-k), N 2^(N-k-1); F_3 = K_4, F_4 = K_4,4", census_codes().len()))
}

fn random_even_code(rng: &mut StdRng) -> (usize, LinearCode) {
    loop {
        let n = rng.gen_range(4..=8);
        let k = rng.gen_range(0..=3);
        let words: Vec<BitVector> = (0..k)
            .map(|_| loop {
                let w = BitVector::from_bits(n, rng.gen_range(0..1u64 << n)).unwrap();
                if w.weight() % 2 == 0 {
                    break w;
                }
            })
            .collect();
        let c = LinearCode::span(n, &words).unwrap();
        if c.low_weight_codeword().is_none() {
            return (n, c);
        }
    }
}

fn code_round_trip() -> Outcome {
    let mut rng = StdRng::seed_from_u64(6);
    let mut cases = census_codes();
    cases.extend((0..50).map(|_| random_even_code(&mut rng)));
    for (n, c) in &cases {
        let back = extract_code(&build_quotient(*n, c).unwrap(), 1).unwrap();
        check(back == *c, format!("N={n}: {c:?} came back as {back:?}"))?;
    }
    let k4 = extract_code(&fixture("k4_tetrahedral.agf"), 1).unwrap();
    let words: Vec<String> = k4.codewords().unwrap().iter().map(|w| w.to_string()).collect();
    check(words == ["000", "111"], format!("K_4 code {words:?}"))?;
    Ok(format!("{} codes recovered; K_4 gives {{000, 111}}", cases.len()))
}

fn dashing_existence() -> Outcome {
    let start = Instant::now();
    let mut total = 0;
    let mut exceptions = Vec::new();
    let mut even_exceptions = 0;
    let mut mod4_exceptions = 0;
    for n in 1..=6 {
        for c in all_codes(n).unwrap() {
            if c.low_weight_codeword().is_some() {
                continue;
            }
            total += 1;
            let consistent = solve_dashings(&build_quotient(n, &c).unwrap()).unwrap().consistent();
            let class = c.classify();
            if consistent != class.doubly_even {
                let words: Vec<String> = c.codewords().unwrap().iter().map(|w| w.to_string()).collect();
                exceptions.push(format!("{{{}}}", words.join(",")));
                if class.even {
                    even_exceptions += 1;
                }
            }
            let weights_0_1_mod_4 = c.codewords().unwrap().iter().all(|w| w.weight() % 4 <= 1);
            if consistent != weights_0_1_mod_4 {
                mod4_exceptions += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    println!(
        "    note: restricted to even codes: {even_exceptions} exceptions; \
         existence vs. all weights 0 or 1 mod 4: {mod4_exceptions} exceptions"
    );
    check(elapsed < Duration::from_secs(60), format!("took {elapsed:?}"))?;
    check(
        exceptions.is_empty(),
        format!(
            "{} of {total} codes admit a totally odd dashing without being doubly even: {}",
            exceptions.len(),
            exceptions.join(" ")
        ),
    )?;
    Ok(format!("{total} codes, zero exceptions, {elapsed:?}"))
}

fn dashing_counts() -> Outcome {
    let mut details = Vec::new();
    for dim in [2, 3] {
        let g = build_hypercube(dim).unwrap();
        let e = g.edges().len();
        let brute = (0u64..1 << e)
            .filter(|mask| {
                let s: Vec<Sign> = (0..e).map(|i| Sign::from_dashed(mask >> i & 1 == 1)).collect();
                is_totally_odd(&g.with_signs(&s).unwrap()).unwrap()
            })
            .count() as u128;
        let sys = solve_dashings(&g).unwrap();
        let formula = 1u128 << (e - sys.rank());
        check(brute == formula, format!("Q_{dim}: brute {brute} vs 2^(E-rank) {formula}"))?;
        details.push(format!("Q_{dim}: {brute} of 2^{e}"));
    }
    Ok(details.join(", "))
}

fn heights() -> Outcome {
    let f7 = fixture("n4_adinkra_242.agf");
    let f8 = fixture("n4_adinkra_341.agf");
    let f9 = fixture("n4_valise.agf");
    let seq = |g: &ColoredGraph| HeightAssignment::of_graph(g).unwrap().rank_sequence();
    check(seq(&f7) == [2, 4, 2], format!("{:?}", seq(&f7)))?;
    check(seq(&f8) == [3, 4, 1], format!("{:?}", seq(&f8)))?;
    check(seq(&f9) == [4, 4], format!("{:?}", seq(&f9)))?;
    let h7 = HeightAssignment::of_graph(&f7).unwrap();
    let after8 = move_vertex(&f7, &h7, 8, Direction::Lower).unwrap();
    check(after8.rank_sequence() == [3, 4, 1], "lowering 8 does not give (3, 4, 1)")?;
    let after7 = move_vertex(&f7, &after8, 7, Direction::Lower).unwrap();
    check(after7 == HeightAssignment::of_graph(&f9).unwrap(), "did not reach the valise")?;
    check(after7 == valise(&f7).unwrap(), "valise mismatch")?;
    Ok("(2,4,2) -> (3,4,1) -> (4,4)".into())
}

/// Strips whitespace, alignment `&`, `\ ` spacing and line breaks.
fn normalize_latex(s: &str) -> String {
    s.replace("\\\\", "")
        .replace("\\ ", "")
        .replace("\\quad", "")
        .chars()
        .filter(|c| !c.is_whitespace() && *c != '&')
        .collect()
}

fn random_adinkra(rng: &mut StdRng, pool: &[(usize, LinearCode)]) -> ColoredGraph {
    let (n, c) = &pool[rng.gen_range(0..pool.len())];
    let g = build_quotient(*n, c).unwrap();
    let sys = solve_dashings(&g).unwrap();
    let mut signs = sys.particular().unwrap();
    for flip in sys.nullspace() {
        if rng.gen_bool(0.5) {
            for (s, f) in signs.iter_mut().zip(&flip) {
                *s = *s * *f;
            }
        }
    }
    let g = g.with_signs(&signs).unwrap();
    let mut h = valise(&g).unwrap();
    for _ in 0..rng.gen_range(0..12) {
        let m = movable_vertices(&g, &h);
        let mut options: Vec<(usize, Direction)> = m.raisable.iter().map(|&v| (v, Direction::Raise)).collect();
        options.extend(m.lowerable.iter().map(|&v| (v, Direction::Lower)));
        if options.is_empty() {
            break;
        }
        let (v, d) = options[rng.gen_range(0..options.len())];
        h = move_vertex(&g, &h, v, d).unwrap();
    }
    h.apply(&g).unwrap()
}

fn susy() -> Outcome {
    let f8 = fixture("n4_adinkra_341.agf");
    let latex = render(&emit_rules(&f8).unwrap(), &[1], RenderFormat::Latex);
    let produced: Vec<String> = latex.lines().map(normalize_latex).collect();
    let paper = [
        r"Q_1(f_3) & = & \ \ i \frac{d}{dt} b_7",
        r"Q_1(f_4) & = & \ \ \ i \frac{d}{dt}  b_1",
        r"Q_1(f_5) & = & -i \frac{d}{dt} b_2",
        r"Q_1(f_6) & = & \ \ \  -i \ b_8",
        r"Q_1(b_7) & = & \quad\ \ \  f_3",
        r"Q_1(b_1) & = &  \quad\ \ \ f_4",
        r"Q_1(b_2) & = &  \quad  - f_5",
        r"Q_1(b_8) & = & -\frac{d}{dt} f_6",
    ];
    for eq in paper {
        let want = normalize_latex(eq);
        check(produced.contains(&want), format!("missing {want}"))?;
    }

    for name in ["n4_adinkra_242.agf", "n4_adinkra_341.agf", "n4_valise.agf"] {
        let report = verify_algebra(&emit_rules(&fixture(name)).unwrap());
        check(report.passed(), format!("{name}: {report:?}"))?;
    }

    let pool: Vec<(usize, LinearCode)> = (1..=6)
        .flat_map(|n| all_codes(n).unwrap().into_iter().map(move |c| (n, c)))
        .filter(|(_, c)| c.low_weight_codeword().is_none() && c.classify().doubly_even)
        .collect();
    let mut rng = StdRng::seed_from_u64(10);
    let mut corrupted = 0;
    for trial in 0..100 {
        let g = random_adinkra(&mut rng, &pool);
        let report = verify_algebra(&emit_rules(&g).unwrap());
        check(report.passed(), format!("random Adinkra {trial} failed: {report:?}"))?;
        if g.colors() >= 2 {
            let mut signs = g.signs();
            let e = rng.gen_range(0..signs.len());
            signs[e] = signs[e].flipped();
            let bad = g.with_signs(&signs).unwrap();
            let report = verify_algebra(&emit_rules(&bad).unwrap());
            check(
                !report.anticommutator_failures.is_empty(),
                format!("corrupted Adinkra {trial} still anticommutes"),
            )?;
            check(!anticommutation_failures(&bad).unwrap().is_empty(), "signed permutations still anticommute")?;
            corrupted += 1;
        }
    }
    Ok(format!("8 equations match; 3 figures + 100 random pass; {corrupted} corruptions all fail"))
}

fn weight_sum() -> Outcome {
    let mut pairs = 0u64;
    for len in 1..=10 {
        for a in 0u64..1 << len {
            let x = BitVector::from_bits(len, a).unwrap();
            for b in 0u64..1 << len {
                let y = BitVector::from_bits(len, b).unwrap();
                let (sum, parts, overlap) = weight_sum_identity(&x, &y).unwrap();
                let direct = x.xor(&y).unwrap().weight();
                if sum != direct || direct + 2 * overlap != parts {
                    return Err(format!("fails at {x}, {y}"));
                }
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs, zero exceptions"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("Latin rectangles for K_4 and Q_3", latin_rectangles),
        ("semi-magic adjacency matrices", semi_magic_matrices),
        ("exchange group orders", exchange_groups),
        ("bicolor cycle structure", bicolor_structure),
        ("quotient census", quotient_census),
        ("code extraction round trip", code_round_trip),
        ("dashing existence iff doubly even, all codes N <= 6", dashing_existence),
        ("dashing counts vs brute force", dashing_counts),
        ("height rank sequences and moves", heights),
        ("supercharge rules and algebra", susy),
        ("weight-sum identity, length <= 10", weight_sum),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            Err(e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        match outcome {
            Ok(detail) => println!("criterion {:>2}: PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
