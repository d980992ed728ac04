use contactify::pipeline::*;
use contactify::presets::{self, Kind};

#[test]
fn catalog_has_nine_magical_presets_and_one_forms_only() {
    let catalog = presets::catalog();
    assert_eq!(catalog.iter().filter(|p| p.kind == Kind::Magical).count(), 9);
    assert_eq!(catalog.iter().filter(|p| p.kind == Kind::FormsOnly).map(|p| p.name).collect::<Vec<_>>(), vec!["cartan-f4-original"]);
    assert!(presets::find("g2-nope").is_err());
}

#[test]
fn expected_reports_agree_with_the_computation() {
    for p in presets::catalog() {
        let run = run_preset(p.name, &RunOptions::default()).unwrap();
        let r = &run.report;
        assert!(r.passed(), "{}: {:?}", p.name, r.failures());
        assert_eq!(run.algebra.dims(), p.expected.grade_dims.to_vec(), "{}", p.name);
        assert_eq!(r.classification.killing_signature, p.expected.killing_signature, "{}", p.name);
        if let Some(e) = &r.embed {
            assert_eq!(e.equal, p.expected.n00_is_n0, "{}", p.name);
        }
    }
}

#[test]
fn runs_are_deterministic() {
    for name in ["qc-pos", "e6-I-25"] {
        let a = run_preset(name, &RunOptions::default()).unwrap().report;
        let b = run_preset(name, &RunOptions::default()).unwrap().report;
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
        assert_eq!(a.to_text(), b.to_text());
    }
}

#[test]
fn a_wrong_golden_file_is_itemized() {
    let dir = std::env::temp_dir().join(format!("contactify-golden-{}", std::process::id()));
    let sub = dir.join("b3-flat36");
    std::fs::create_dir_all(&sub).unwrap();
    let good = read_golden(&default_golden_dir(), "b3-flat36", "lambda.txt").unwrap();
    std::fs::write(sub.join("lambda.txt"), good.replacen('+', "-", 1)).unwrap();
    let opts = RunOptions { golden_dir: dir.clone(), ..RunOptions::default() };
    let report = run_preset("b3-flat36", &opts).unwrap().report;
    let failed: Vec<&str> = report.failures().iter().map(|c| c.name.as_str()).collect();
    assert!(failed.contains(&"forms/golden-lambda"));
    assert!(failed.contains(&"magical/golden-omega"));
    assert!(report.to_text().contains("differs at line 1"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn oracle_runs_when_requested_and_respects_the_cap() {
    let opts = RunOptions { oracle: true, ..RunOptions::default() };
    let report = run_preset("qc-neg", &opts).unwrap().report;
    let sym = report.symmetry.as_ref().unwrap();
    assert_eq!(sym.dim, 21);
    assert!(report.passed());
    let huge = run_preset("e6-I-24", &opts).unwrap().report;
    assert!(huge.symmetry.is_none());
    assert!(huge.failures().iter().any(|c| c.name == "oracle/dimension" && c.detail.contains("--allow-huge")));
}

#[test]
fn exports() {
    let run = run_preset("cartan-f4-original", &RunOptions::default()).unwrap();
    let text = export(&run, Item::Lambda, Format::Text).unwrap();
    assert_eq!(text, read_golden(&default_golden_dir(), "cartan-f4-original", "lambda.txt").unwrap());
    assert!(text.starts_with("dx^9 + x^1 dx^8"));
    assert!(export(&run, Item::Rho, Format::Text).is_err());
    let json: serde_json::Value = serde_json::from_str(&export(&run, Item::Lambda, Format::Json).unwrap()).unwrap();
    assert_eq!(json.as_array().unwrap().len(), 7);
    let latex = export(&run, Item::Omega, Format::Latex).unwrap();
    assert!(latex.starts_with("\\omega^{1} = "));
    assert_eq!(latex.lines().count(), 7);

    let run = run_preset("b3-flat36", &RunOptions::default()).unwrap();
    let algebra: serde_json::Value = serde_json::from_str(&export(&run, Item::Algebra, Format::Json).unwrap()).unwrap();
    assert_eq!(algebra["dim"], 21);
    let brackets = export(&run, Item::Algebra, Format::Text).unwrap();
    assert!(brackets.lines().all(|l| l.starts_with('[') && l.contains("] = ")));
    let tau: serde_json::Value = serde_json::from_str(&export(&run, Item::Tau, Format::Json).unwrap()).unwrap();
    assert_eq!(tau["size"], 3);
    assert!(export(&run, Item::Tau, Format::Latex).unwrap().starts_with("\\tau(A1) = \\begin{pmatrix}"));
}

#[test]
fn matrix_latex_uses_fractions() {
    use contactify::exact::{QMatrix, Rational};
    let m = QMatrix::from_rows(vec![vec![Rational::new(1.into(), 2.into()), Rational::new((-3).into(), 4.into())]]);
    assert_eq!(matrix_latex(&m), "\\begin{pmatrix}\\tfrac{1}{2}&-\\tfrac{3}{4}\\end{pmatrix}");
}
