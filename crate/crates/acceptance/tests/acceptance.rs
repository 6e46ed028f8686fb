//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line per
//! criterion, and exits non-zero if any criterion fails.
//!
//! Run alone with `cargo test -p duality-suite --test acceptance`.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use duality_cli::generate::{antitone_involutions, exhaustive, RandomPosets};
use duality_cli::{emit_document, parse_poset, Format, PosetDocument};
use duality_core::closure::{
    is_continuous, mixed_families, preimage, ClosureSpace, ContinuityMode, PointSubset, Side,
};
use duality_core::duplication::{build_y_space, duplicate, verify_homeo, verify_main_lemma};
use duality_core::involution::{
    detect_complementation, ortho_fixed_points, verify_co_iso, verify_pi_bicontinuous,
    InvolutedPoset,
};
use duality_core::mayet::verify_mayet;
use duality_core::order::named::{antichain, boolean4, chain, chain3_with_fixed_middle};
use duality_core::order::{check_ortho_axioms, BoundedPoset, OrthoPoset, Poset};
use duality_core::report::Check;
use duality_core::Caps;

/// Largest poset size for the exhaustive dual-representation corpus.
const DUAL_MAX: usize = 4;
/// Largest poset size for the exhaustive homeomorphism, main-lemma and
/// involution corpora.
const EXHAUSTIVE_MAX: usize = 5;
/// Number of labeled posets on 5 elements.
const LABELED_5: usize = 4231;
/// Random main-lemma corpus: count, size range, seed.
const RANDOM_POSETS: usize = 1000;
const RANDOM_MAX_SIZE: usize = 9;
const RANDOM_POSET_SEED: u64 = 0x5eed_0001;
/// Random closure-space corpus: count, point and base-size bounds, seed.
const RANDOM_SPACES: usize = 1000;
const SPACE_MAX_POINTS: usize = 10;
const SPACE_MAX_BASE: usize = 8;
const SPACE_SEED: u64 = 0x5eed_0002;
/// Tolerated disagreements between the π-homeomorphism criterion and the
/// complementation axioms.
const DETECT_DISAGREEMENTS_ALLOWED: usize = 0;
/// Labeled poset counts for n = 1..=4.
const LABELED_COUNTS: [usize; 4] = [1, 3, 19, 219];
/// Counterexamples printed when a criterion fails.
const SHOWN: usize = 3;

struct Outcome {
    passed: bool,
    summary: String,
    failures: Vec<String>,
}

impl Outcome {
    fn new(summary: String, failures: Vec<String>) -> Self {
        Outcome {
            passed: failures.is_empty(),
            summary,
            failures,
        }
    }
}

fn failed_checks(checks: &[Check]) -> Vec<String> {
    checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| match &c.witness {
            Some(w) => format!("{}: {}", c.name, w.message),
            None => c.name.to_string(),
        })
        .collect()
}

fn describe(p: &Poset) -> String {
    let doc = PosetDocument::from_poset(p);
    serde_json::to_string(&doc).unwrap()
}

fn all_posets(max: usize) -> Vec<Poset> {
    (1..=max).flat_map(|n| exhaustive(n).unwrap()).collect()
}

// ---------------------------------------------------------------------------
// brute-force oracles

fn assignments(n: usize) -> impl Iterator<Item = Vec<bool>> {
    (0u64..1 << n).map(move |m| (0..n).map(|i| m >> i & 1 == 1).collect())
}

fn is_monotone(p: &Poset, b: &[bool]) -> bool {
    (0..p.len()).all(|i| (0..p.len()).all(|j| !(p.le(i, j) && b[i] && !b[j])))
}

fn oracle_c_orthovaluations(p: &Poset, c: &[usize]) -> BTreeSet<Vec<bool>> {
    assignments(p.len())
        .filter(|b| is_monotone(p, b) && (0..p.len()).all(|i| b[c[i]] != b[i]))
        .collect()
}

/// Every intersection of a sub-collection of `base`, as point lists.
fn oracle_closed(n: usize, base: &[Vec<usize>]) -> BTreeSet<Vec<usize>> {
    (0u32..1 << base.len())
        .map(|mask| {
            (0..n)
                .filter(|x| {
                    (0..base.len())
                        .filter(|k| mask >> k & 1 == 1)
                        .all(|k| base[k].contains(x))
                })
                .collect()
        })
        .collect()
}

/// Intersection of every base member containing `a`.
fn oracle_closure(n: usize, base: &[PointSubset], a: &PointSubset) -> PointSubset {
    base.iter()
        .filter(|k| a.is_subset(k))
        .fold(PointSubset::full(n), |acc, k| acc.intersection(k))
}

/// Reflexive, antisymmetric, transitive relations on `n` points, found by
/// filtering all `2^(n(n-1))` off-diagonal relations.
fn oracle_partial_orders(n: usize) -> BTreeSet<Vec<bool>> {
    let off: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|(i, j)| i != j)
        .collect();
    let mut out = BTreeSet::new();
    for mask in 0u64..1 << off.len() {
        let mut m = vec![false; n * n];
        for i in 0..n {
            m[i * n + i] = true;
        }
        for (k, &(i, j)) in off.iter().enumerate() {
            m[i * n + j] = mask >> k & 1 == 1;
        }
        let le = |i: usize, j: usize| m[i * n + j];
        let antisymmetric = (0..n).all(|i| (0..n).all(|j| i == j || !(le(i, j) && le(j, i))));
        let transitive = (0..n)
            .all(|i| (0..n).all(|j| (0..n).all(|k| !(le(i, j) && le(j, k)) || le(i, k))));
        if antisymmetric && transitive {
            out.insert(m);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// criteria

fn criterion_dual_representation() -> Outcome {
    let caps = Caps::default();
    let mut failures = Vec::new();
    let mut cases = 0;
    for p in all_posets(DUAL_MAX) {
        let d = duplicate(&p);
        cases += 1;
        match verify_mayet(d.ortho(), caps) {
            Ok(r) => failures.extend(
                failed_checks(&r.checks)
                    .into_iter()
                    .map(|f| format!("duplicate of {}: {f}", describe(&p))),
            ),
            Err(e) => failures.push(format!("duplicate of {}: {e}", describe(&p))),
        }
    }
    let hand_built = [("B2", OrthoPoset::two()), ("Boolean 4-lattice", boolean4())];
    for (name, e) in &hand_built {
        cases += 1;
        match verify_mayet(e, caps) {
            Ok(r) if r.checks.len() == 4 => failures
                .extend(failed_checks(&r.checks).into_iter().map(|f| format!("{name}: {f}"))),
            Ok(r) => failures.push(format!("{name}: expected 4 checks, got {}", r.checks.len())),
            Err(err) => failures.push(format!("{name}: {err}")),
        }
    }
    // the 3-chain admits no complementation: its only antitone involution
    // fixes the middle element, and the oracle must reject it
    let (b, c) = chain3_with_fixed_middle();
    let chain3_rejected = antitone_involutions(b.poset()) == vec![c.clone()]
        && !check_ortho_axioms(&b, &c).unwrap().passed()
        && OrthoPoset::new(b, c).is_err();
    if !chain3_rejected {
        failures.push("3-chain: a complementation was accepted".into());
    }
    Outcome::new(
        format!("{cases} orthoposets (duplicates of every poset with |P| <= {DUAL_MAX}, B2, Boolean 4-lattice); 3-chain excluded by the axiom oracle"),
        failures,
    )
}

fn criterion_homeomorphism() -> Outcome {
    let caps = Caps::default();
    let mut failures = Vec::new();
    let mut cases = 0;
    for n in 1..=EXHAUSTIVE_MAX {
        let corpus = exhaustive(n).unwrap();
        if n == 5 && corpus.len() != LABELED_5 {
            failures.push(format!("expected {LABELED_5} posets on 5 elements, got {}", corpus.len()));
        }
        for p in corpus {
            cases += 1;
            match verify_homeo(&p, caps, ContinuityMode::Weak) {
                Ok(r) => {
                    if r.x_size != r.y_size {
                        failures.push(format!("{}: |X| = {} but |Y| = {}", describe(&p), r.x_size, r.y_size));
                    }
                    failures.extend(
                        failed_checks(&r.checks)
                            .into_iter()
                            .map(|f| format!("{}: {f}", describe(&p))),
                    );
                }
                Err(e) => failures.push(format!("{}: {e}", describe(&p))),
            }
        }
    }
    Outcome::new(
        format!("{cases} labeled posets with |P| <= {EXHAUSTIVE_MAX}; restriction and extension mutually inverse and weakly bicontinuous"),
        failures,
    )
}

fn main_lemma_case(p: &Poset, caps: Caps, failures: &mut Vec<String>) {
    match verify_main_lemma(p, caps) {
        Ok(r) => {
            if r.family.len() != p.len() {
                failures.push(format!(
                    "{}: {} proper mixed sets for {} elements",
                    describe(p),
                    r.family.len(),
                    p.len()
                ));
            }
            failures.extend(
                failed_checks(&r.checks)
                    .into_iter()
                    .map(|f| format!("{}: {f}", describe(p))),
            );
        }
        Err(e) => failures.push(format!("{}: {e}", describe(p))),
    }
}

fn criterion_main_lemma() -> Outcome {
    let caps = Caps::default();
    let mut failures = Vec::new();
    let exhaustive_corpus = all_posets(EXHAUSTIVE_MAX);
    for p in &exhaustive_corpus {
        main_lemma_case(p, caps, &mut failures);
    }
    for k in 0..RANDOM_POSETS {
        let n = 1 + k % RANDOM_MAX_SIZE;
        let p = RandomPosets::new(n, RANDOM_POSET_SEED + k as u64)
            .unwrap()
            .next()
            .unwrap();
        main_lemma_case(&p, caps, &mut failures);
    }
    Outcome::new(
        format!(
            "{} exhaustive (|P| <= {EXHAUSTIVE_MAX}) + {RANDOM_POSETS} random (|P| <= {RANDOM_MAX_SIZE}, seed {RANDOM_POSET_SEED:#x}); proper mixed family has exactly |P| members, order-isomorphic to P",
            exhaustive_corpus.len()
        ),
        failures,
    )
}

/// Bounded labeled posets with |P| <= 5, each with every antitone involution.
fn involution_corpus() -> Vec<InvolutedPoset> {
    let mut out = Vec::new();
    for p in all_posets(EXHAUSTIVE_MAX) {
        let Ok(b) = BoundedPoset::new(p) else {
            continue;
        };
        for c in antitone_involutions(b.poset()) {
            out.push(InvolutedPoset::new(b.clone(), c).unwrap());
        }
    }
    out
}

fn describe_involuted(ip: &InvolutedPoset) -> String {
    let p = ip.bounded().poset();
    let c: Vec<String> = (0..p.len())
        .map(|i| format!("{}->{}", p.label(i), p.label(ip.c()[i])))
        .collect();
    format!("{} with c = {{{}}}", describe(p), c.join(", "))
}

fn criterion_involution(corpus: &[InvolutedPoset]) -> Outcome {
    let caps = Caps::default();
    let mut structural = Vec::new();
    let mut disagreements = Vec::new();
    let mut strict_disagreements = 0;
    let mut eocs = 0;
    for ip in corpus {
        let name = describe_involuted(ip);
        match verify_pi_bicontinuous(ip, caps) {
            Ok(r) => structural.extend(
                failed_checks(&r.checks).into_iter().map(|f| format!("{name}: {f}")),
            ),
            Err(e) => structural.push(format!("{name}: {e}")),
        }
        match ortho_fixed_points(ip, caps) {
            Ok((fixed, r)) => {
                structural.extend(
                    failed_checks(&r.checks).into_iter().map(|f| format!("{name}: {f}")),
                );
                let got: BTreeSet<Vec<bool>> = fixed.iter().map(|x| x.bits().to_vec()).collect();
                if got != oracle_c_orthovaluations(ip.bounded().poset(), ip.c()) {
                    structural.push(format!("{name}: fixed points differ from brute force"));
                }
            }
            Err(e) => structural.push(format!("{name}: {e}")),
        }
        let oracle = check_ortho_axioms(ip.bounded(), ip.c()).unwrap().passed();
        if oracle {
            eocs += 1;
        }
        match detect_complementation(ip, caps, ContinuityMode::Weak) {
            Ok((criterion, ev)) => {
                if criterion != oracle || !ev.agrees() {
                    let detail = ev
                        .counterexample
                        .as_ref()
                        .map(|w| serde_json::to_string(w).unwrap())
                        .unwrap_or_default();
                    disagreements.push(format!(
                        "{name}: criterion {criterion}, axioms {oracle} {detail}"
                    ));
                }
            }
            Err(e) => structural.push(format!("{name}: {e}")),
        }
        // diagnostic only: the clopen-preimage reading of continuity
        if let Ok((criterion, _)) = detect_complementation(ip, caps, ContinuityMode::Strict) {
            if criterion != oracle {
                strict_disagreements += 1;
            }
        }
    }
    let summary = format!(
        "{} (bounded poset, antitone involution) pairs with |P| <= {EXHAUSTIVE_MAX}, {eocs} satisfy the axioms; pi∘pi = id, sigma1 preimage identity, Fix(pi) = c-orthovaluations: {} failures; detection disagreements: {} (allowed {DETECT_DISAGREEMENTS_ALLOWED}; strict continuity would give {strict_disagreements})",
        corpus.len(),
        structural.len(),
        disagreements.len()
    );
    let mut failures = structural;
    if disagreements.len() > DETECT_DISAGREEMENTS_ALLOWED {
        failures.extend(disagreements);
    }
    Outcome::new(summary, failures)
}

fn criterion_co_iso(corpus: &[InvolutedPoset]) -> Outcome {
    let caps = Caps::default();
    let mut failures = Vec::new();
    let mut cases = 0;
    for ip in corpus {
        if !check_ortho_axioms(ip.bounded(), ip.c()).unwrap().passed() {
            continue;
        }
        cases += 1;
        let name = describe_involuted(ip);
        match verify_co_iso(ip, caps) {
            Ok(r) => {
                if !r.checks.iter().any(|c| c.name == "same-bases") {
                    failures.push(format!("{name}: same-bases check missing"));
                }
                failures.extend(
                    failed_checks(&r.checks).into_iter().map(|f| format!("{name}: {f}")),
                );
            }
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    if cases == 0 {
        failures.push("no orthocomplemented poset in the corpus".into());
    }
    Outcome::new(
        format!("{cases} orthocomplemented posets from the involution corpus; same bases, clopen bijection, order and complement preserved"),
        failures,
    )
}

fn random_subset<R: Rng>(rng: &mut R, n: usize) -> PointSubset {
    let density = rng.gen::<f64>();
    let bits: Vec<bool> = (0..n).map(|_| rng.gen_bool(density)).collect();
    PointSubset::from_fn(n, |i| bits[i])
}

fn random_space<R: Rng>(rng: &mut R) -> ClosureSpace {
    let n = rng.gen_range(1..=SPACE_MAX_POINTS);
    let k = rng.gen_range(0..=SPACE_MAX_BASE);
    let base = (0..k).map(|_| random_subset(rng, n)).collect();
    ClosureSpace::unlabeled(n, base).unwrap()
}

fn criterion_closure_laws() -> Outcome {
    let cap = Caps::default().family;
    let mut rng = ChaCha8Rng::seed_from_u64(SPACE_SEED);
    let mut failures = Vec::new();
    for case in 0..RANDOM_SPACES {
        let s = random_space(&mut rng);
        let n = s.len();

        let base: Vec<Vec<usize>> = s.base().iter().map(|k| k.points().collect()).collect();
        let closed: BTreeSet<Vec<usize>> = s
            .closed_family(cap)
            .unwrap()
            .iter()
            .map(|a| a.points().collect())
            .collect();
        if closed != oracle_closed(n, &base) {
            failures.push(format!("space {case}: closed family differs from brute force"));
        }

        for _ in 0..8 {
            let a = random_subset(&mut rng, n);
            let b = a.union(&random_subset(&mut rng, n));
            let ca = s.closure_of(&a).unwrap();
            let cb = s.closure_of(&b).unwrap();
            if !a.is_subset(&ca) {
                failures.push(format!("space {case}: closure not extensive"));
            }
            if !ca.is_subset(&cb) {
                failures.push(format!("space {case}: closure not monotone"));
            }
            if s.closure_of(&ca).unwrap() != ca {
                failures.push(format!("space {case}: closure not idempotent"));
            }
            if ca != oracle_closure(n, s.base(), &a) {
                failures.push(format!("space {case}: closure differs from brute force"));
            }
        }

        let t = random_space(&mut rng);
        let f: Vec<usize> = (0..n).map(|_| rng.gen_range(0..t.len())).collect();
        let base_checked = is_continuous(&f, &s, &t, ContinuityMode::Weak, cap).unwrap();
        let full_checked = t
            .closed_family(cap)
            .unwrap()
            .iter()
            .all(|k| s.is_closed(&preimage(&f, k)).unwrap());
        if base_checked != full_checked {
            failures.push(format!(
                "space {case}: base-checked continuity {base_checked}, full-family {full_checked}"
            ));
        }
    }
    Outcome::new(
        format!("{RANDOM_SPACES} random spaces (<= {SPACE_MAX_POINTS} points, <= {SPACE_MAX_BASE} base sets, seed {SPACE_SEED:#x}); extensive, monotone, idempotent; base-checked = full-family weak continuity"),
        failures,
    )
}

fn criterion_micro_examples() -> Outcome {
    let caps = Caps::default();
    let mut failures = Vec::new();
    let mut expect = |ok: bool, what: &str| {
        if !ok {
            failures.push(what.to_string());
        }
    };

    // chain a < b: brute-force Y and its proper mixed family
    let p = chain(&["a", "b"]);
    let ys: Vec<Vec<bool>> = assignments(2).filter(|b| is_monotone(&p, b)).collect();
    expect(ys.len() == 3, "chain: |Y| = 3 by brute force");
    let sigma = |v: bool| -> Vec<Vec<usize>> {
        (0..2)
            .map(|e| (0..ys.len()).filter(|&y| ys[y][e] == v).collect())
            .collect()
    };
    let c1 = oracle_closed(ys.len(), &sigma(true));
    let c2 = oracle_closed(ys.len(), &sigma(false));
    let render = |y: usize| -> String { ys[y].iter().map(|&b| if b { '1' } else { '0' }).collect() };
    let brute: BTreeSet<BTreeSet<String>> = c1
        .iter()
        .filter(|a| {
            let comp: Vec<usize> = (0..ys.len()).filter(|x| !a.contains(x)).collect();
            c2.contains(&comp) && !a.is_empty() && a.len() != ys.len()
        })
        .map(|a| a.iter().map(|&y| render(y)).collect())
        .collect();
    let expected: BTreeSet<BTreeSet<String>> = [
        BTreeSet::from(["11".to_string()]),
        BTreeSet::from(["01".to_string(), "11".to_string()]),
    ]
    .into();
    expect(brute == expected, "chain: brute-force proper mixed family");
    let y = build_y_space(&p, caps).unwrap();
    let got: BTreeSet<BTreeSet<String>> = mixed_families(y.bi(), Side::First, Side::Second, caps.family)
        .unwrap()
        .into_iter()
        .filter(|a| !a.is_empty() && !a.is_full())
        .map(|a| a.labels(y.bi().points()).into_iter().collect())
        .collect();
    expect(y.points().len() == 3, "chain: |Y| = 3");
    expect(got == expected, "chain: proper mixed family");

    // 2-antichain: |X| = |Y| = 4 and 6 clopen sets
    let anti = antichain(&["a", "b"]);
    let d = duplicate(&anti);
    let e = d.ortho();
    let xs: Vec<Vec<bool>> = assignments(e.len())
        .filter(|b| is_monotone(e.poset(), b) && (0..e.len()).all(|i| b[e.complement(i)] != b[i]))
        .collect();
    let base: Vec<Vec<usize>> = (0..e.len())
        .map(|i| (0..xs.len()).filter(|&x| xs[x][i]).collect())
        .collect();
    let closed = oracle_closed(xs.len(), &base);
    let clopen = closed
        .iter()
        .filter(|a| closed.contains(&(0..xs.len()).filter(|x| !a.contains(x)).collect::<Vec<_>>()))
        .count();
    let anti_ys = assignments(2).filter(|b| is_monotone(&anti, b)).count();
    expect(xs.len() == 4 && anti_ys == 4 && clopen == 6, "antichain: brute force");
    let r = verify_mayet(e, caps).unwrap();
    let y = build_y_space(&anti, caps).unwrap();
    expect(
        r.x_size == 4 && y.points().len() == 4 && r.clopen_family.len() == 6,
        "antichain: |X| = |Y| = 4, |CO(X)| = 6",
    );

    // B2: one orthovaluation, the fixed point 01
    let two = OrthoPoset::two();
    let brute: Vec<Vec<bool>> = assignments(2)
        .filter(|b| is_monotone(two.poset(), b) && (0..2).all(|i| b[two.complement(i)] != b[i]))
        .collect();
    expect(brute == vec![vec![false, true]], "B2: brute-force orthovaluations");
    let ip = InvolutedPoset::new(two.bounded().clone(), two.comp().to_vec()).unwrap();
    let (fixed, _) = ortho_fixed_points(&ip, caps).unwrap();
    let fixed: Vec<String> = fixed.iter().map(|x| x.to_string()).collect();
    expect(fixed == vec!["01".to_string()], "B2: Fix(pi) = {01}");
    expect(verify_mayet(&two, caps).unwrap().x_size == 1, "B2: one orthovaluation");

    Outcome::new(
        "chain a<b: |Y| = 3, proper mixed family {{11},{01,11}}; 2-antichain: |X| = |Y| = 4, |CO(X)| = 6; B2: one orthovaluation, Fix(pi) = {01}".into(),
        failures,
    )
}

const CHAIN_DOC: &str = r#"{"elements":["a","b"],"le":[["a","b"]]}"#;
const B4_DOC: &str = r#"{"elements":["0","a","b","1"],"le":[["0","a"],["0","b"],["a","1"],["b","1"]],"complement":{"0":"1","1":"0","a":"b","b":"a"}}"#;
const CHAIN3_DOC: &str = r#"{"elements":["0","m","1"],"le":[["0","m"],["m","1"]],"complement":{"0":"1","m":"m","1":"0"}}"#;
const MALFORMED_DOC: &str = r#"{"elements":["a","b"],"le":[["a","c"]]"#;

/// Runs the command line in-process on `input` as stdin.
fn cli(args: &[&str], input: &str) -> (Option<i32>, Vec<u8>) {
    let mut out = Vec::new();
    let code = duality_cli::app::run(
        std::iter::once("duality").chain(args.iter().copied()),
        &mut input.as_bytes(),
        &mut out,
        &mut std::io::sink(),
    );
    (Some(code), out)
}

fn criterion_cli_contract() -> Outcome {
    let mut failures = Vec::new();

    // round-trip byte stability, through the library and the binary
    let mut docs: Vec<String> = vec![CHAIN_DOC.into(), B4_DOC.into(), CHAIN3_DOC.into()];
    docs.extend(
        RandomPosets::new(7, 11)
            .unwrap()
            .take(20)
            .map(|p| serde_json::to_string(&PosetDocument::from_poset(&p)).unwrap()),
    );
    for text in &docs {
        let once = emit_document(&parse_poset(text).unwrap(), Format::Json).unwrap();
        let twice = emit_document(&parse_poset(&once).unwrap(), Format::Json).unwrap();
        if once != twice || parse_poset(&once).unwrap() != parse_poset(text).unwrap() {
            failures.push(format!("round trip unstable for {text}"));
        }
        let (code, first) = cli(&["validate", "-"], text);
        let (_, second) = cli(&["validate", "-"], std::str::from_utf8(&first).unwrap());
        if code != Some(0) || first != second {
            failures.push(format!("validate not byte-stable for {text}"));
        }
    }

    // generator counts against relation filtering
    for (n, &expected) in (1..=LABELED_COUNTS.len()).zip(&LABELED_COUNTS) {
        let generated: BTreeSet<Vec<bool>> =
            exhaustive(n).unwrap().iter().map(|p| p.matrix().to_vec()).collect();
        let oracle = oracle_partial_orders(n);
        if oracle.len() != expected || generated != oracle {
            failures.push(format!(
                "n = {n}: generator {} posets, filtering oracle {}, expected {expected}",
                generated.len(),
                oracle.len()
            ));
        }
        let (code, out) = cli(&["gen", "--exhaustive", &n.to_string()], "");
        let parsed: Vec<PosetDocument> = serde_json::from_slice(&out).unwrap_or_default();
        if code != Some(0) || parsed.len() != expected {
            failures.push(format!("gen --exhaustive {n}: exit {code:?}, {} documents", parsed.len()));
        }
    }

    // exit codes: 0 pass, 1 counterexample, 2 input or precondition error
    let cases: &[(&str, &str, &[&str], i32)] = &[
        ("mayet", B4_DOC, &[], 0),
        ("mayet", CHAIN_DOC, &[], 2),
        ("homeo", CHAIN_DOC, &[], 0),
        ("homeo", CHAIN_DOC, &["--strict-continuity"], 1),
        ("main-lemma", CHAIN_DOC, &[], 0),
        ("pi-bicontinuous", B4_DOC, &[], 0),
        ("pi-bicontinuous", CHAIN_DOC, &[], 2),
        ("fix", CHAIN3_DOC, &[], 0),
        ("fix", CHAIN_DOC, &[], 2),
        ("co-iso", B4_DOC, &[], 0),
        ("co-iso", CHAIN3_DOC, &[], 2),
        ("eoc-detect", B4_DOC, &[], 0),
        ("eoc-detect", CHAIN3_DOC, &[], 1),
        ("eoc-detect", CHAIN_DOC, &[], 2),
    ];
    let claims = ["mayet", "homeo", "main-lemma", "pi-bicontinuous", "fix", "co-iso", "eoc-detect"];
    let malformed = claims.iter().map(|&c| (c, MALFORMED_DOC, &[][..], 2));
    for (claim, doc, extra, expected) in cases.iter().copied().chain(malformed) {
        let mut args = vec!["verify", "-", "--claim", claim];
        args.extend_from_slice(extra);
        let (code, _) = cli(&args, doc);
        if code != Some(expected) {
            failures.push(format!("verify --claim {claim} {extra:?}: exit {code:?}, expected {expected}"));
        }
    }
    for (args, expected) in [
        (&["validate", "-"][..], 2),
        (&["verify", "-", "--claim", "nonsense"][..], 2),
        (&["gen", "--exhaustive", "7"][..], 2),
    ] {
        let (code, _) = cli(args, MALFORMED_DOC);
        if code != Some(expected) {
            failures.push(format!("{args:?}: exit {code:?}, expected {expected}"));
        }
    }

    Outcome::new(
        format!(
            "{} documents byte-stable; generator counts {LABELED_COUNTS:?} match relation filtering; exit codes 0/1/2 across all claims",
            docs.len()
        ),
        failures,
    )
}

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn main() -> ExitCode {
    let corpus = involution_corpus();
    let criteria: Vec<Criterion> = vec![
        ("1 dual representation", Box::new(criterion_dual_representation)),
        ("2 restriction/extension homeomorphism", Box::new(criterion_homeomorphism)),
        ("3 poset as proper mixed family", Box::new(criterion_main_lemma)),
        ("4 involution pi and complementation detection", Box::new(|| criterion_involution(&corpus))),
        ("5 clopen ortho-isomorphism", Box::new(|| criterion_co_iso(&corpus))),
        ("6 closure laws and continuity", Box::new(criterion_closure_laws)),
        ("7 worked examples", Box::new(criterion_micro_examples)),
        ("8 command-line contract", Box::new(criterion_cli_contract)),
    ];
    let mut all_passed = true;
    for (name, run) in &criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        let verdict = if outcome.passed { "PASS" } else { "FAIL" };
        println!("{verdict} criterion {name}: {} [{secs:.1}s]", outcome.summary);
        for f in outcome.failures.iter().take(SHOWN) {
            println!("    counterexample: {f}");
        }
        if outcome.failures.len() > SHOWN {
            println!("    ... {} more", outcome.failures.len() - SHOWN);
        }
        all_passed &= outcome.passed;
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
