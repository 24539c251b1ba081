//! Acceptance suite. Runs as a plain binary (`harness = false`) so that every
//! criterion prints exactly one PASS/FAIL line; exits non-zero on any failure.

mod common;

use std::collections::{BTreeSet, HashMap};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use artin_convex::artin::{
    free_reduce, oracle_for, project_word, random_word, scramble, theta, abelianized_image,
    ArtinLetter, ArtinWord, BraidOracle,
};
use artin_convex::braid::{delete_strands, words_equal, BraidWord};
use artin_convex::cli::{coxeter_convexity, run_campaign, trial_rng, CampaignConfig, Trial};
use artin_convex::coxeter::{alternating_word, finite_order, CoxeterSystem, GeneratorId, GeneratorSet};
use artin_convex::salvetti::{EdgeImage, PosetNode, SalvettiPoset};
use artin_convex::Sign;
use common::*;
use rand::Rng;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Lengths of every projected word, for the length contract.
#[derive(Default)]
struct Ledger {
    projections: Vec<(usize, usize, bool)>,
    invariant_trials: usize,
    invariant_failures: usize,
}

impl Ledger {
    fn record(&mut self, w: &ArtinWord, projected: &ArtinWord, target: GeneratorSet) {
        self.projections.push((w.len(), projected.len(), w.lies_in(target)));
    }

    fn record_trials(&mut self, trials: &[Trial], target: GeneratorSet) {
        for t in trials {
            self.record(&t.scrambled, &t.report.projected, target);
            self.invariant_trials += 1;
            if !t.invariants {
                self.invariant_failures += 1;
            }
        }
    }
}

fn orders() -> Check {
    let mut cases: Vec<(String, CoxeterSystem, usize)> = vec![
        ("A2".into(), system("gens: s1 s2\nedge: s1 s2 3"), 6),
        ("A3".into(), a3(), 24),
        ("B3".into(), b3(), 48),
        ("H3".into(), h3(), 120),
    ];
    for m in 2..=7 {
        cases.push((format!("I2({m})"), dihedral(m), 2 * m as usize));
    }
    let mut parts = Vec::new();
    for (name, sys, expected) in cases {
        let start = Instant::now();
        let n = sys.enumerate().map_err(|e| format!("{name}: {e}"))?.len();
        let elapsed = start.elapsed();
        ensure(n == expected, || format!("{name}: |W| = {n}, expected {expected}"))?;
        let classified = finite_order(sys.graph(), sys.all());
        ensure(classified == Some(expected as u128), || format!("{name}: classification gives {classified:?}"))?;
        ensure(elapsed < Duration::from_secs(5), || format!("{name}: {elapsed:?}"))?;
        parts.push(format!("{name}={n}"));
    }
    Ok(parts.join(" "))
}

fn coxeter_theorem() -> Check {
    let mut geodesics = 0;
    let mut targets = 0;
    for (name, sys) in [("A3", a3()), ("B3", b3()), ("I2(5)", dihedral(5))] {
        for t in sys.all().subsets() {
            let c = coxeter_convexity(&sys, t).map_err(|e| e.to_string())?;
            ensure(c.violations == 0, || {
                format!("{name} T={}: {} geodesics leave T", sys.graph().format_set(t), c.violations)
            })?;
            ensure(c.elements == sys.parabolic_elements(t).unwrap().len(), || "element count".into())?;
            geodesics += c.geodesics;
            targets += 1;
        }
    }
    Ok(format!("{targets} subsets, {geodesics} geodesic words, 0 violations"))
}

fn claim_one(ledger: &mut Ledger) -> Check {
    let cases: [(&str, &str); 4] = [(A3, "s1,s3"), (B3, "s2,s3"), (MIXED_INF, "a,c"), (A2_AFFINE, "s,t")];
    let mut count = 0;
    for (k, (text, target)) in cases.iter().enumerate() {
        let sys = system(text);
        let t = sys.graph().parse_set(target).unwrap();
        let letters: Vec<GeneratorId> = t.iter().collect();
        for i in 0..250 {
            let mut rng = trial_rng(0xC1A1 + k as u64, i);
            let len = rng.gen_range(0..=32);
            let w = random_word(&mut rng, &letters, len);
            let (p, _) = project_word(&sys, &w, t).map_err(|e| e.to_string())?;
            ensure(p == w, || format!("{}: {} projected to {}", target, w.display(sys.graph()), p.display(sys.graph())))?;
            ledger.record(&w, &p, t);
            count += 1;
        }
    }
    Ok(format!("{count} words over 4 graphs (one with an infinite label) project to themselves"))
}

fn claim_two(ledger: &mut Ledger) -> Check {
    let sys = a3();
    let oracle = BraidOracle::new(sys.graph()).ok_or("A3 should have the braid oracle")?;
    let mut passed = 0;
    for (k, target) in ["s1,s2", "s1,s3"].iter().enumerate() {
        let t = sys.graph().parse_set(target).unwrap();
        let config = CampaignConfig {
            target: t,
            trials: 250,
            seed: 0xB4 + k as u64,
            max_len: 64,
            moves: 40,
            geodesic_len: 4,
        };
        let trials = run_campaign(&sys, &config).map_err(|e| e.to_string())?;
        for tr in &trials {
            let r = &tr.report;
            ensure(tr.moves <= 40, || "too many moves".into())?;
            ensure(r.claim2 == Some(true), || format!("trial {} ({target}): claim2 {:?}", tr.index, r.claim2))?;
            ensure(words_equal(&oracle.to_braid(&r.projected), &oracle.to_braid(&tr.witness)), || {
                format!("trial {}: projection differs from the witness in B4", tr.index)
            })?;
            ensure(tr.passes(), || format!("trial {} fails: {:?}", tr.index, r))?;
            passed += 1;
        }
        ledger.record_trials(&trials, t);
    }
    Ok(format!("{passed} scrambled trials in B4 equal their witnesses (Garside)"))
}

fn claim_three(ledger: &mut Ledger) -> Check {
    let cases: [(&str, &str); 4] = [(A3, "s1,s2"), (B3, "s1"), (MIXED_INF, "a,b"), (A2_AFFINE, "s")];
    let mut adversarial = 0;
    for (k, (text, target)) in cases.iter().enumerate() {
        let sys = system(text);
        let t = sys.graph().parse_set(target).unwrap();
        let all: Vec<GeneratorId> = sys.graph().generators().collect();
        let mut i = 0;
        while adversarial < 250 * (k + 1) {
            let mut rng = trial_rng(0xC3 + k as u64, i);
            i += 1;
            let len = rng.gen_range(1..=32);
            let w = random_word(&mut rng, &all, len);
            // θ(w) outside W_T certifies w ∉ A_T.
            if theta(&sys, &w).unwrap().lies_in(t) {
                continue;
            }
            let (p, _) = project_word(&sys, &w, t).map_err(|e| e.to_string())?;
            ledger.record(&w, &p, t);
            adversarial += 1;
        }
    }
    let total = ledger.projections.len();
    for &(w, p, inside) in &ledger.projections {
        ensure(p <= w, || format!("projection longer than input: {p} > {w}"))?;
        ensure(p < w || inside, || "equal lengths with a letter outside T".into())?;
    }
    let equal = ledger.projections.iter().filter(|(w, p, _)| w == p).count();
    Ok(format!("{total} projections ({adversarial} adversarial), {equal} length-preserving, all inside T"))
}

fn strand_deletion(ledger: &mut Ledger) -> Check {
    let sys = a3();
    let g = sys.graph();
    let oracle = BraidOracle::new(g).unwrap();
    let s1 = g.generator("s1").unwrap();
    for i in 0..500 {
        let mut rng = trial_rng(0xD5, i);
        let len = rng.gen_range(0..=16);
        let w = random_word(&mut rng, &[s1], len);
        let moves = rng.gen_range(0..=40);
        let scrambled = scramble(g, &w, moves, rng.gen());
        let invariant = theta(&sys, &scrambled).unwrap() == theta(&sys, &w).unwrap()
            && abelianized_image(g, &scrambled) == abelianized_image(g, &w);
        ledger.invariant_trials += 1;
        if !invariant {
            ledger.invariant_failures += 1;
        }
        let braid = oracle.to_braid(&scrambled);
        let deleted = delete_strands(&braid, &[1, 2]).map_err(|e| format!("trial {i}: {e}"))?;
        let expected = BraidWord::new(2, w.letters().iter().map(|l| (1, l.sign)).collect()).unwrap();
        ensure(deleted.len() <= braid.len(), || format!("trial {i}: output longer"))?;
        ensure(words_equal(&deleted, &expected), || format!("trial {i}: {deleted} differs from {expected} in B2"))?;
    }

    // Every geodesic of σ1^k in B3, |k| ≤ 4, is a power of σ1.
    let letters = [(1, Sign::Positive), (1, Sign::Negative), (2, Sign::Positive), (2, Sign::Negative)];
    let mut candidates = 0;
    for k in -4i32..=4 {
        let sign = if k < 0 { Sign::Negative } else { Sign::Positive };
        let x = BraidWord::new(3, vec![(1, sign); k.unsigned_abs() as usize]).unwrap();
        let geodesic = k.unsigned_abs();
        for len in 0..=geodesic {
            for code in 0..4usize.pow(len) {
                let mut c = code;
                let word: Vec<(usize, Sign)> = (0..len)
                    .map(|_| {
                        let l = letters[c % 4];
                        c /= 4;
                        l
                    })
                    .collect();
                candidates += 1;
                let candidate = BraidWord::new(3, word.clone()).unwrap();
                if words_equal(&candidate, &x) {
                    ensure(len == geodesic, || format!("σ1^{k} has a word of length {len}"))?;
                    ensure(word.iter().all(|&(i, _)| i == 1), || format!("geodesic {candidate} of σ1^{k} leaves ⟨σ1⟩"))?;
                }
            }
        }
    }
    Ok(format!("500 deletions B4 -> B2 agree (Garside); {candidates} B3 candidate words, geodesics stay in <s1>"))
}

fn alternating(s: GeneratorId, t: GeneratorId, m: usize) -> Vec<GeneratorId> {
    alternating_word(s, t, m).unwrap().0
}

/// All nodes and the full `⪯` matrix.
fn order_matrix(p: &SalvettiPoset) -> (Vec<PosetNode>, Vec<Vec<bool>>) {
    let nodes = p.nodes(None).unwrap();
    let matrix = nodes
        .iter()
        .map(|a| nodes.iter().map(|b| p.leq(a, b).unwrap()).collect())
        .collect();
    (nodes, matrix)
}

fn salvetti_combinatorics() -> Check {
    for m in 2..=6u32 {
        let p = SalvettiPoset::new(dihedral(m));
        let sys = p.system().clone();
        let m_ = m as usize;
        let c = p.build_complex(None).map_err(|e| e.to_string())?;
        ensure(c.cells == vec![2 * m_, 4 * m_, 2 * m_] && c.euler_characteristic == 0, || {
            format!("I2({m}) census {:?}, χ = {}", c.cells, c.euler_characteristic)
        })?;
        let (s, t) = (GeneratorId(0), GeneratorId(1));
        for u in sys.enumerate().unwrap() {
            for x in sys.spherical_subsets() {
                let size = p.lower_set(&p.node(u.clone(), x).unwrap()).unwrap().len();
                let expected = [1, 3, 4 * m_ + 1][x.len()];
                ensure(size == expected, || format!("I2({m}) lower set of dim {} has {size}", x.len()))?;
            }
            for (a, b) in [(s, t), (t, s)] {
                let loop_ = p.two_cell_boundary(&u, a, b).unwrap();
                ensure(p.is_closed(&loop_).unwrap(), || format!("I2({m}) boundary not closed"))?;
                let mut expected: Vec<(GeneratorId, Sign)> =
                    alternating(a, b, m_).into_iter().map(|g| (g, Sign::Positive)).collect();
                expected.extend(alternating(b, a, m_).into_iter().rev().map(|g| (g, Sign::Negative)));
                ensure(loop_.spelled() == expected, || format!("I2({m}) boundary spelling"))?;
            }
        }
    }

    let mut checked = Vec::new();
    for (name, sys) in [("I2(3)", dihedral(3)), ("I2(4)", dihedral(4)), ("A3", a3())] {
        let p = SalvettiPoset::new(sys.clone());
        let (nodes, leq) = order_matrix(&p);
        let n = nodes.len();
        for i in 0..n {
            ensure(leq[i][i], || format!("{name}: not reflexive"))?;
            for j in 0..n {
                if !leq[i][j] {
                    continue;
                }
                ensure(i == j || !leq[j][i], || format!("{name}: not antisymmetric"))?;
                for (k, &jk) in leq[j].iter().enumerate() {
                    ensure(!jk || leq[i][k], || format!("{name}: not transitive"))?;
                }
            }
            let below: BTreeSet<PosetNode> = p.lower_set(&nodes[i]).unwrap().into_iter().collect();
            let filtered: BTreeSet<PosetNode> = (0..n).filter(|&j| leq[j][i]).map(|j| nodes[j].clone()).collect();
            ensure(below == filtered, || format!("{name}: lower_set differs from the ⪯ filter"))?;
        }
        let index: HashMap<&PosetNode, usize> = nodes.iter().enumerate().map(|(i, v)| (v, i)).collect();
        for w in sys.enumerate().unwrap() {
            let moved: Vec<usize> = nodes
                .iter()
                .map(|a| index[&PosetNode { u: sys.multiply(&w, &a.u).unwrap(), x: a.x }])
                .collect();
            for i in 0..n {
                for j in 0..n {
                    ensure(leq[i][j] == leq[moved[i]][moved[j]], || format!("{name}: W-action breaks ⪯"))?;
                }
            }
        }
        checked.push(format!("{name}({n} nodes)"));
    }
    Ok(format!("I2(2..6) census, lower sets, boundaries; poset axioms and W-invariance on {}", checked.join(", ")))
}

fn retraction_laws() -> Check {
    let mut pairs = 0;
    let mut edges = 0;
    for (name, sys) in [("I2(3)", dihedral(3)), ("I2(4)", dihedral(4)), ("A3", a3())] {
        let p = SalvettiPoset::new(sys.clone());
        let (nodes, leq) = order_matrix(&p);
        for t in sys.all().subsets() {
            let image: Vec<PosetNode> = nodes.iter().map(|n| p.project_node(n, t).unwrap()).collect();
            for (n, img) in nodes.iter().zip(&image) {
                ensure(img.u.lies_in(t) && img.x.is_subset(t), || format!("{name}: image outside the sub-poset"))?;
                if n.u.lies_in(t) && n.x.is_subset(t) {
                    let back = p.project_node(&p.include_node(n, t).unwrap(), t).unwrap();
                    ensure(&back == n, || format!("{name}: π∘ι moves a node"))?;
                }
            }
            for i in 0..nodes.len() {
                for j in 0..nodes.len() {
                    if leq[i][j] {
                        pairs += 1;
                        ensure(p.leq(&image[i], &image[j]).unwrap(), || {
                            format!("{name} T={}: π is not monotone", sys.graph().format_set(t))
                        })?;
                    }
                }
            }
            for u in sys.enumerate().unwrap() {
                for s in sys.graph().generators() {
                    edges += 1;
                    let edge = p.node(u.clone(), GeneratorSet::singleton(s)).unwrap();
                    let mapped: BTreeSet<PosetNode> =
                        p.lower_set(&edge).unwrap().iter().map(|n| p.project_node(n, t).unwrap()).collect();
                    let expected: BTreeSet<PosetNode> = match p.project_edge(&u, s, t).unwrap() {
                        EdgeImage::Edge(e) => {
                            let top = p.node(e.u.clone(), GeneratorSet::singleton(e.s)).unwrap();
                            ensure(mapped.len() == 3, || format!("{name}: edge image is not an edge"))?;
                            p.lower_set(&top).unwrap().into_iter().collect()
                        }
                        EdgeImage::Vertex(v) => [p.vertex(v)].into_iter().collect(),
                    };
                    ensure(mapped == expected, || format!("{name}: project_edge disagrees with project_node"))?;
                }
            }
        }
    }
    Ok(format!("{pairs} comparable pairs preserved, {edges} edges agree"))
}

fn free_group(ledger: &mut Ledger) -> Check {
    let sys = system(FREE3);
    let oracle = oracle_for(sys.graph()).ok_or("free oracle missing")?;
    ensure(oracle.name() == "free-reduce", || "wrong oracle".into())?;
    let mut passed = 0;
    for (k, target) in ["a,b", "c"].iter().enumerate() {
        let t = sys.graph().parse_set(target).unwrap();
        let config = CampaignConfig {
            target: t,
            trials: 250,
            seed: 0xF3 + k as u64,
            max_len: 64,
            moves: 40,
            geodesic_len: 4,
        };
        let trials = run_campaign(&sys, &config).map_err(|e| e.to_string())?;
        for tr in &trials {
            let r = &tr.report;
            ensure(r.claim2 == Some(true), || format!("trial {}: claim2 {:?}", tr.index, r.claim2))?;
            ensure(free_reduce(&tr.scrambled) == free_reduce(&tr.witness), || format!("trial {}", tr.index))?;
            ensure(oracle.member(&tr.scrambled, t) == Some(true), || format!("trial {}: membership", tr.index))?;
            ensure(tr.passes(), || format!("trial {} fails", tr.index))?;
            passed += 1;
        }
        ledger.record_trials(&trials, t);
    }
    // A word outside A_T is recognised as such and still projects within bounds.
    let w = ArtinWord(vec![ArtinLetter::positive(GeneratorId(2)), ArtinLetter::positive(GeneratorId(0)), ArtinLetter::negative(GeneratorId(2))]);
    ensure(oracle.member(&w, GeneratorSet::singleton(GeneratorId(0))) == Some(false), || "conjugate counted as member".into())?;
    ensure(
        ledger.invariant_failures == 0,
        || format!("{} of {} campaign trials break θ or abelianization", ledger.invariant_failures, ledger.invariant_trials),
    )?;
    Ok(format!(
        "{passed} free-group trials verified by free reduction; θ and abelianization invariant on all {} campaign trials",
        ledger.invariant_trials
    ))
}

fn main() -> ExitCode {
    let mut ledger = Ledger::default();
    type Criterion<'a> = (usize, &'a str, Duration, Box<dyn FnOnce(&mut Ledger) -> Check + 'a>);
    let criteria: Vec<Criterion> = vec![
        (1, "finite Coxeter enumeration", Duration::from_secs(60), Box::new(|_| orders())),
        (2, "Coxeter parabolic convexity", Duration::from_secs(120), Box::new(|_| coxeter_theorem())),
        (3, "projection fixes words over T", Duration::from_secs(60), Box::new(claim_one)),
        (4, "projection equals the input in B4", Duration::from_secs(60), Box::new(claim_two)),
        (5, "length contract", Duration::from_secs(60), Box::new(claim_three)),
        (6, "strand deletion", Duration::from_secs(120), Box::new(strand_deletion)),
        (7, "Salvetti combinatorics", Duration::from_secs(120), Box::new(|_| salvetti_combinatorics())),
        (8, "retraction laws", Duration::from_secs(120), Box::new(|_| retraction_laws())),
        (9, "free group cross-validation", Duration::from_secs(60), Box::new(free_group)),
    ];
    let mut failures = 0;
    for (n, name, limit, check) in criteria {
        let start = Instant::now();
        let result = check(&mut ledger);
        let elapsed = start.elapsed();
        let result = result.and_then(|d| {
            if elapsed <= limit {
                Ok(d)
            } else {
                Err(format!("took {elapsed:?}, limit {limit:?}"))
            }
        });
        match result {
            Ok(detail) => println!("criterion {n} [{name}]: PASS ({:.2}s) {detail}", elapsed.as_secs_f64()),
            Err(why) => {
                failures += 1;
                println!("criterion {n} [{name}]: FAIL ({:.2}s) {why}", elapsed.as_secs_f64());
            }
        }
    }
    if failures == 0 {
        println!("acceptance: 9/9 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failures} of 9 criteria failed");
        ExitCode::FAILURE
    }
}
