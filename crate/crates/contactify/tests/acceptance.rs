//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use contactify::clifford::{compact_generators, dirac_tower, pauli_tower, quaternionic_generators, CompactCase};
use contactify::exact::{qi, QMatrix};
use contactify::pipeline::{run_preset, Run, RunOptions};
use contactify::presets;
use contactify::repalg::*;
use contactify::symmetry::{closure_check, symmetry_space, DEFAULT_MAX_UNKNOWNS};
use contactify::tables::*;
use std::collections::BTreeMap;
use std::time::{Duration, Instant};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn clifford_identities() -> Outcome {
    let mut towers = Vec::new();
    for n in 1..=4 {
        towers.push((format!("pauli({n})"), pauli_tower(n)));
        towers.push((format!("dirac({n})"), dirac_tower(n)));
    }
    towers.push(("cl07".into(), compact_generators(CompactCase::Cl07)));
    towers.push(("cl08".into(), compact_generators(CompactCase::Cl08)));
    towers.push(("cl80".into(), compact_generators(CompactCase::Cl80)));
    towers.push(("quaternionic(+1)".into(), quaternionic_generators(1)));
    towers.push(("quaternionic(-1)".into(), quaternionic_generators(-1)));
    let mut pairs = 0;
    for (name, t) in &towers {
        t.check().map_err(|e| format!("{name}: pair ({}, {})", e.0, e.1))?;
        pairs += t.len() * (t.len() + 1) / 2;
    }
    Ok(format!("{} towers, {pairs} pairs", towers.len()))
}

fn golden_matrices() -> Outcome {
    let spin = |g| spin_representation(&g, false).map_err(|e| e.to_string()).map(|r| r.matrices);
    let table = |t: &[&str]| word_table(t).map_err(|e| e.to_string());
    let diff = |a: &[QMatrix], b: &[QMatrix]| -> Vec<usize> { (0..a.len()).filter(|&i| a[i] != b[i]).map(|i| i + 1).collect() };
    let f41 = diff(&spin(pauli_tower(4))?, &table(&F41)?);
    ensure(f41 == vec![4], format!("f41 mismatches at {f41:?}"))?;
    ensure(diff(&spin(compact_generators(CompactCase::Cl07))?, &table(&F42)?).is_empty(), "f42")?;
    ensure(diff(&spin(dirac_tower(4))?, &table(&DIR44)?).is_empty(), "dir44")?;
    ensure(diff(&spin(compact_generators(CompactCase::Cl80))?, &table(&DIR80)?).is_empty(), "dir80")?;
    for (name, gens, t) in [("rhopm", dirac_tower(4), &RHOPM), ("weylso8", compact_generators(CompactCase::Cl80), &WEYLSO8)] {
        let rep = spin_representation(&gens, false).map_err(|e| e.to_string())?;
        let (plus, minus) = split_weyl(&rep).map_err(|e| e.to_string())?;
        let (wp, wm) = weyl_pair_words(t).map_err(|e| e.to_string())?;
        let wp: Vec<QMatrix> = wp.iter().map(|w| w.matrix()).collect();
        let wm: Vec<QMatrix> = wm.iter().map(|w| w.matrix()).collect();
        ensure(diff(&plus.matrices, &wp).is_empty() && diff(&minus.matrices, &wm).is_empty(), name)?;
    }
    Ok("f41 (misprint at A4 flagged), f42, dir44, dir80, rhopm, weylso8 match".into())
}

fn so43_killing() -> Outcome {
    let rep = spin_representation(&pauli_tower(4), false).map_err(|e| e.to_string())?;
    let k = killing_form(&structure_constants(&rep).map_err(|e| e.to_string())?);
    let d = [1, -1, 1, 1, -1, 1, -1, 1, -1, 1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1];
    let expected = QMatrix::diagonal(&d.map(|x| qi(10 * x)));
    ensure(k == expected, "Killing form differs from 10·diag(…)")?;
    Ok("K = 10·diag(1,−1,1,1,−1,…)".into())
}

fn casimir_splits() -> Outcome {
    let sorted_dims = |c: &QMatrix| -> Result<Vec<(usize, String)>, String> {
        let mut v: Vec<(usize, String)> = eigenspaces(c).map_err(|e| e.to_string())?.into_iter().map(|(l, d)| (d, l.to_string())).collect();
        v.sort();
        Ok(v)
    };
    let rep = spin_representation(&pauli_tower(4), false).map_err(|e| e.to_string())?;
    let sc = structure_constants(&rep).map_err(|e| e.to_string())?;
    let c = casimir(&wedge_rep(&rep), &sc, &qi(10)).map_err(|e| e.to_string())?;
    let split = sorted_dims(&c)?;
    ensure(split.len() == 2 && split[0] == (7, "6".into()) && split[1].0 == 21, format!("so(4,3): {split:?}"))?;
    for (name, gens) in [("so(4,4)", dirac_tower(4)), ("so(8,0)", compact_generators(CompactCase::Cl80))] {
        let rep = spin_representation(&gens, false).map_err(|e| e.to_string())?;
        let sc = structure_constants(&rep).map_err(|e| e.to_string())?;
        let (p, m) = split_weyl(&rep).map_err(|e| e.to_string())?;
        let t = tensor_rep(&p, &m).map_err(|e| e.to_string())?;
        let c = casimir(&t, &sc, &qi(1)).map_err(|e| e.to_string())?;
        let dims: Vec<usize> = sorted_dims(&c)?.into_iter().map(|(d, _)| d).collect();
        ensure(dims == vec![8, 56], format!("{name}: {dims:?}"))?;
    }
    Ok("Λ²S = 21 ⊕ 7 (eigenvalue 6); S₊⊗S₋ = 56 ⊕ 8 twice".into())
}

/// Every named check of every run whose name starts with one of `prefixes`.
fn checks_with(runs: &BTreeMap<&str, Run>, prefixes: &[&str]) -> Outcome {
    let mut count = 0;
    for (name, run) in runs {
        for c in run.report.checks.iter().filter(|c| prefixes.iter().any(|p| c.name.starts_with(p))) {
            ensure(c.passed, format!("{name} {}: {}", c.name, c.detail))?;
            count += 1;
        }
    }
    Ok(format!("{count} checks"))
}

fn magical_spaces(runs: &BTreeMap<&str, Run>) -> Outcome {
    let names = presets::magical_names();
    for n in &names {
        ensure(runs[n].report.solution_dim == Some(1), format!("{n}: dimension {:?}", runs[n].report.solution_dim))?;
    }
    let goldens = checks_with(runs, &["magical/", "forms/golden-omega"])?;
    Ok(format!("{} presets with 1-dimensional spaces; {goldens}", names.len()))
}

fn contactification(runs: &BTreeMap<&str, Run>) -> Outcome {
    ensure(runs.values().all(|r| r.report.checks.iter().any(|c| c.name == "forms/golden-lambda")), "a preset lacks a λ golden file")?;
    checks_with(runs, &["forms/contactification", "forms/golden-lambda"])
}

fn prolongation_table(runs: &BTreeMap<&str, Run>) -> Outcome {
    let table: [(&str, [usize; 5], usize); 10] = [
        ("b3-flat36", [3, 3, 9, 3, 3], 21),
        ("qc-pos", [3, 4, 7, 4, 3], 21),
        ("qc-neg", [3, 4, 7, 4, 3], 21),
        ("f4-split", [7, 8, 22, 8, 7], 52),
        ("f4-fII", [7, 8, 22, 8, 7], 52),
        ("e6-I-24", [8, 16, 30, 16, 8], 78),
        ("e6-IV-24", [8, 16, 30, 16, 8], 78),
        ("e6-I-25", [5, 20, 28, 20, 5], 78),
        ("so76-21", [15, 6, 36, 6, 15], 78),
        ("cartan-f4-original", [7, 8, 22, 8, 7], 52),
    ];
    for (name, dims, total) in table {
        let g = &runs[name].algebra;
        ensure(g.dims() == dims && g.dim() == total, format!("{name}: {:?}", g.dims()))?;
        ensure(g.grade_dim(3) == 0 && g.is_grading_symmetric(), format!("{name}: grading"))?;
    }
    Ok("all 10 presets".into())
}

fn real_forms(runs: &BTreeMap<&str, Run>) -> Outcome {
    let sig = |n: &str| runs[n].report.classification.killing_signature;
    for (n, run) in runs {
        ensure(run.report.classification.semisimple, format!("{n}: degenerate Killing form"))?;
        ensure(sig(n) == presets::find(n).unwrap().expected.killing_signature, format!("{n}: {:?}", sig(n)))?;
    }
    ensure(sig("f4-split") != sig("f4-fII"), "f4 real forms coincide")?;
    ensure(sig("e6-I-24") != sig("e6-IV-24"), "e6 real forms coincide")?;
    ensure(sig("e6-I-24") == sig("e6-I-25"), "e_I realizations differ")?;
    ensure(sig("b3-flat36") == sig("qc-neg") && sig("qc-pos") != sig("qc-neg"), "dimension-21 signatures")?;
    Ok(format!(
        "f_I {:?}, f_II {:?}, e_I {:?}, e_IV {:?}, so(4,3) {:?}, sp(1,2) {:?}",
        sig("f4-split"),
        sig("f4-fII"),
        sig("e6-I-24"),
        sig("e6-IV-24"),
        sig("b3-flat36"),
        sig("qc-pos")
    ))
}

fn stabilizers(runs: &BTreeMap<&str, Run>) -> Outcome {
    let f = |n: &str| runs[n].report.four_form.clone().ok_or(format!("{n}: no four-form"));
    let fi = f("f4-split")?;
    ensure(fi.strict_dim == 21, format!("f_I strict {}", fi.strict_dim))?;
    ensure(fi.nonzero_weights.len() == 1 && fi.conformal_dim == 22, format!("f_I conformal weights {:?}", fi.nonzero_weights))?;
    ensure(fi.identity_weight.as_deref() == Some("4"), format!("identity weight {:?}", fi.identity_weight))?;
    ensure(f("f4-fII")?.conformal_dim == 22, "f_II")?;
    ensure(f("e6-I-24")?.conformal_dim == 30, "e_I")?;
    ensure(f("e6-IV-24")?.conformal_dim == 30, "e_IV")?;
    checks_with(runs, &["four-form/"])?;
    Ok("f_I strict 21 (S = 4 by the identity), f_II 22, e_I 30, e_IV 30".into())
}

fn oracle(runs: &BTreeMap<&str, Run>) -> Outcome {
    let mut out = Vec::new();
    for name in ["b3-flat36", "qc-pos", "qc-neg", "f4-split"] {
        let run = &runs[name];
        let t = Instant::now();
        let space = symmetry_space(&run.system, 4, Some(DEFAULT_MAX_UNKNOWNS)).map_err(|e| format!("{name}: {e}"))?;
        ensure(space.dim() == run.algebra.dim(), format!("{name}: {} vs {}", space.dim(), run.algebra.dim()))?;
        let sc = closure_check(&space.basis).map_err(|e| format!("{name}: {e}"))?;
        let sig = killing_form(&sc).signature().map_err(|e| e.to_string())?;
        ensure(sig == run.report.classification.killing_signature, format!("{name}: closure signature {sig:?}"))?;
        out.push(format!("{name} {} in {:.1}s", space.dim(), t.elapsed().as_secs_f64()));
    }
    Ok(out.join(", "))
}

fn property_suite(runs: &BTreeMap<&str, Run>) -> Outcome {
    checks_with(runs, &["tau/part-one", "tau/representation", "g0/"])
}

fn report(n: usize, title: &str, limit: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let t = Instant::now();
    let outcome = f();
    let elapsed = t.elapsed();
    let (ok, detail) = match outcome {
        Ok(d) if elapsed <= limit => (true, d),
        Ok(d) => (false, format!("{d}; took {:.1}s, limit {}s", elapsed.as_secs_f64(), limit.as_secs())),
        Err(e) => (false, e),
    };
    println!("criterion {n:>2} {:<4} {title}: {detail} [{:.2}s]", if ok { "PASS" } else { "FAIL" }, elapsed.as_secs_f64());
    ok
}

fn main() {
    let secs = Duration::from_secs;
    let mut passed = vec![
        report(1, "Clifford identities", secs(1), clifford_identities),
        report(2, "printed generator tables", secs(1), golden_matrices),
        report(3, "Killing form of so(4,3)", secs(60), so43_killing),
        report(4, "Casimir splits", secs(30), casimir_splits),
    ];
    let t = Instant::now();
    let mut runs = BTreeMap::new();
    let mut errors = Vec::new();
    for p in presets::catalog() {
        match run_preset(p.name, &RunOptions::default()) {
            Ok(run) => {
                runs.insert(p.name, run);
            }
            Err(e) => errors.push(format!("{}: {e}", p.name)),
        }
    }
    println!("pipeline over {} presets took {:.2}s", runs.len(), t.elapsed().as_secs_f64());
    if !errors.is_empty() {
        for e in &errors {
            println!("pipeline error: {e}");
        }
        println!("criteria 5-11 FAIL: pipeline did not complete");
        std::process::exit(1);
    }
    passed.push(report(5, "magical solution spaces", secs(60), || magical_spaces(&runs)));
    passed.push(report(6, "contactification", secs(60), || contactification(&runs)));
    passed.push(report(7, "prolongation dimensions", secs(600), || prolongation_table(&runs)));
    passed.push(report(8, "real forms by Killing inertia", secs(60), || real_forms(&runs)));
    passed.push(report(9, "four-form stabilizers", secs(120), || stabilizers(&runs)));
    passed.push(report(10, "symmetry oracle", secs(1800), || oracle(&runs)));
    passed.push(report(11, "property suite", secs(60), || property_suite(&runs)));
    let failed = passed.iter().filter(|p| !**p).count();
    println!("{} of {} criteria passed", passed.len() - failed, passed.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
