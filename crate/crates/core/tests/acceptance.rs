//! One line per acceptance criterion. Run with `--nocapture` to see the lines; the test fails
//! if any criterion fails, after all lines are printed.

mod common;

use braidlab::braid::BraidWord;
use braidlab::framed::verify_generalized_lantern;
use braidlab::hom::endo::engine_z_exponent;
use braidlab::hom::*;

const DUAL_ORACLE_PAIRS: usize = 10_000;
const DUAL_ORACLE_MAX_LEN: usize = 40;
const NEGATIVE_CONTROL_TRIALS: usize = 400;
const NEGATIVE_CONTROL_MIN_PERCENT: usize = 95;
const MIN_BALL_SIZE: usize = 20;
const FAREY_TRIANGLES: usize = 100;
const B_SWEEP_MAX: usize = 1000;

struct Line {
    name: &'static str,
    pass: bool,
    detail: String,
}

fn lantern() -> Line {
    let mut bad = vec![];
    let mut steps = 0;
    for n in 2..=5 {
        let c = verify_generalized_lantern(n).unwrap();
        steps += c.items.iter().filter(|i| i.name.starts_with("push-step")).count();
        bad.extend(c.failures().map(|f| format!("n={n} {}", f.name)));
        if n == 2 && c.find("plain-form (classical lantern)").map(|i| i.pass) != Some(true) {
            bad.push("classical lantern".into());
        }
    }
    Line { name: "generalized lantern n=2..5", pass: bad.is_empty(), detail: format!("{steps} push steps, failures {bad:?}") }
}

fn center() -> Line {
    let bad: Vec<usize> = (1..=5).filter(|&n| !common::center_factorization(n)).collect();
    Line { name: "center factorization n<=5", pass: bad.is_empty(), detail: format!("failing n {bad:?}") }
}

fn dual_oracle() -> Line {
    let st = common::dual_oracle(DUAL_ORACLE_PAIRS, DUAL_ORACLE_MAX_LEN, 2024);
    Line {
        name: "dual-oracle agreement",
        pass: st.pairs >= DUAL_ORACLE_PAIRS && st.disagreements == 0,
        detail: format!("{} pairs ({} equal), {} disagreements", st.pairs, st.equal_pairs, st.disagreements),
    }
}

fn fact1() -> Line {
    let mut fails = vec![];
    let mut pairs = 0;
    for s in [4, 5] {
        for r in 0..=2 {
            let st = common::fact1(s, r);
            pairs += st.pairs;
            fails.extend(st.failures);
        }
    }
    let farey = common::d3_farey(4);
    Line {
        name: "fact 1 suite",
        pass: fails.is_empty() && farey.mismatches == 0,
        detail: format!(
            "{pairs} ball pairs, {} failures; D3 {} curves {} pairs, {} Farey mismatches",
            fails.len(),
            farey.curves,
            farey.pairs,
            farey.mismatches
        ),
    }
}

fn z_exponents() -> Line {
    let mut checked = 0;
    let mut bad = vec![];
    for n in 3..=5 {
        let f = MappingClassSpec::identity(n + 1).unwrap();
        let mut grid: Vec<(Family, TransvectionParams)> =
            (-2..=2).map(|t| (Family::A, TransvectionParams::A { t })).collect();
        for u in -2..=2 {
            for v in -2..=2 {
                grid.push((Family::B, TransvectionParams::B { u, v }));
            }
        }
        let count = (n + 1) * n / 2;
        for k in 0..count {
            for x in -2..=2 {
                let mut t = vec![0; count];
                t[k] = x;
                grid.push((Family::Pure, TransvectionParams::Pure { t }));
            }
        }
        let mut hyper = vec![0; count];
        hyper[0] = 1;
        hyper[count - 1] = -2;
        grid.push((Family::Pure, TransvectionParams::Pure { t: hyper }));
        for (fam, p) in grid {
            let spec = catalogue_injection(fam, n, &f, &p).unwrap();
            let formula = z_image_exponent(fam, n, &p).unwrap();
            let engine = engine_z_exponent(&spec).unwrap();
            let hyper_ok = !(fam == Family::Pure && formula == 0) || spec.z_image().is_identity_element();
            checked += 1;
            if engine != Some(formula) || !hyper_ok || check_homomorphism(&spec).unwrap().is_some() {
                bad.push(format!("{fam} n={n} {p}"));
            }
        }
    }
    Line { name: "z-exponent formulas", pass: bad.is_empty(), detail: format!("{checked} specs, mismatches {bad:?}") }
}

fn transvections() -> Line {
    let rank_one = (3..=B_SWEEP_MAX).all(|n| {
        let (u, v) = b_lattice(n).generator;
        z_image_exponent(Family::B, n, &TransvectionParams::B { u, v }).unwrap() == 1
    });
    let solvable = b_inverse_z_sweep(3, B_SWEEP_MAX);
    let example = transvection_classify(Family::B, 3, &TransvectionParams::B { u: 2, v: -1 }).unwrap();
    Line {
        name: "transvection classification",
        pass: rank_one && solvable.is_empty() && example.class == TransvectionClass::Automorphism,
        detail: format!("lattice generator (n-1,-1); z^-1 solvable for n in 3..={B_SWEEP_MAX}: {solvable:?}"),
    }
}

fn xi1() -> Line {
    let mut items = 0;
    let mut bad = vec![];
    for n in 3..=4 {
        let s = n + 1;
        for eps in [1, -1] {
            let f = MappingClassSpec::geometric(BraidWord::parse(s, "s2 s3^-1 s2").unwrap(), eps).unwrap();
            let c = xi1_formula_check(n, &f, CapMode::Exact).unwrap();
            items += c.items.len();
            if !c.passed() || c.items.len() != 5 {
                bad.push(format!("n={n} eps={eps}"));
            }
        }
        let a = braidlab::curve::Curve::standard(s, 2, s).unwrap();
        let delta: Vec<usize> = (1..=s + 1).map(|l| if l == 1 { s + 1 } else if l == s + 1 { 1 } else { l }).collect();
        let f = MappingClassSpec::table(s, vec![(a.clone(), a)], 1, delta).unwrap();
        let c = xi1_formula_check(n, &f, CapMode::Exact).unwrap();
        items += c.items.len();
        if !c.passed() || c.find("fixed-exterior alpha=1").is_none() {
            bad.push(format!("n={n} extensional"));
        }
        let corrupted = xi1_formula_check(n, &MappingClassSpec::identity(s).unwrap(), CapMode::Corrupted).unwrap();
        if corrupted.passed() {
            bad.push(format!("n={n} corrupted cap not caught"));
        }
    }
    Line { name: "xi_1 formula", pass: bad.is_empty(), detail: format!("{items} case checks, failures {bad:?}") }
}

fn xi_top() -> Line {
    let mut bad = vec![];
    for n in 3..=5 {
        let c = xi_top_counterexample(n).unwrap();
        let disc = c.find("discrepancy").map(|i| i.rhs.clone()).unwrap_or_default();
        if !c.passed() || disc != "T_a z^-1 -> T_a z" {
            bad.push(n);
        }
    }
    Line {
        name: "xi_(n+1) counterexample",
        pass: bad.is_empty(),
        detail: format!("n=3..5 show T_a z^-1 -> T_a z with functorial control; failing n {bad:?}"),
    }
}

fn lemma_suite() -> Line {
    let (passed, total) = common::positive_controls(8, 99);
    let neg = common::negative_controls(NEGATIVE_CONTROL_TRIALS, 100);
    let farey = common::farey_extensions(FAREY_TRIANGLES, 101);
    let pass = passed == total
        && neg.ball_size >= MIN_BALL_SIZE
        && neg.rejected * 100 >= neg.trials * NEGATIVE_CONTROL_MIN_PERCENT
        && neg.verified_witnesses == neg.rejected
        && farey.trials >= FAREY_TRIANGLES
        && farey.good == farey.trials;
    Line {
        name: "curve-complex lemma suite",
        pass,
        detail: format!(
            "positive {passed}/{total}; negative {}/{} rejected on {} vertices, {} witnesses verified; Farey {}/{}",
            neg.rejected, neg.trials, neg.ball_size, neg.verified_witnesses, farey.good, farey.trials
        ),
    }
}

fn index_table() -> Line {
    let bad = common::index_table_mismatches(&[5, 6, 7]);
    Line { name: "index table m=5,6,7", pass: bad.is_empty(), detail: format!("mismatches {bad:?}") }
}

#[test]
fn acceptance() {
    let lines = [
        lantern(),
        center(),
        dual_oracle(),
        fact1(),
        z_exponents(),
        transvections(),
        xi1(),
        xi_top(),
        lemma_suite(),
        index_table(),
    ];
    println!();
    for l in &lines {
        println!("{} {}: {}", if l.pass { "PASS" } else { "FAIL" }, l.name, l.detail);
    }
    let failed: Vec<&str> = lines.iter().filter(|l| !l.pass).map(|l| l.name).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
