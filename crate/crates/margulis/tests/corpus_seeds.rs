//! Replays the fuzz corpus seeds through the same checks as the fuzz targets.

use std::fs;
use std::path::PathBuf;

use margulis::numfield::parse_poly;
use margulis::report::{parse_config, parse_mu_expr};
use margulis::rigor::parse_decimal;

fn seeds(target: &str) -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<(String, String)> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| {
            let p = e.unwrap().path();
            (p.file_name().unwrap().to_string_lossy().into_owned(), fs::read_to_string(&p).unwrap())
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

fn accepted<T, E>(seeds: &[(String, String)], parse: impl Fn(&str) -> Result<T, E>) -> Vec<&str> {
    seeds.iter().filter(|(_, s)| parse(s).is_ok()).map(|(n, _)| n.as_str()).collect()
}

#[test]
fn decimal_seeds() {
    let s = seeds("parse_decimal");
    for (_, text) in &s {
        if let Ok(d) = parse_decimal(text) {
            assert_eq!(parse_decimal(&d.to_string()).unwrap(), d);
        }
    }
    assert_eq!(
        accepted(&s, parse_decimal),
        ["chain", "exact", "integer", "leading_dot", "negative", "negative_exact", "six_places", "zero"]
    );
}

#[test]
fn poly_seeds() {
    let s = seeds("parse_poly");
    for (_, text) in &s {
        if let Ok(f) = parse_poly(text) {
            assert_eq!(parse_poly(&f.to_bracket()).unwrap(), f);
            assert_eq!(parse_poly(&f.to_string()).unwrap(), f);
        }
    }
    assert_eq!(accepted(&s, parse_poly), ["bette", "bracket", "display", "quadratic", "reducible", "spaced"]);
}

#[test]
fn mu_expr_seeds() {
    let s = seeds("parse_mu_expr");
    for (_, text) in &s {
        if let Ok(m) = parse_mu_expr(text) {
            assert_eq!(parse_mu_expr(&m.to_string()).unwrap(), m);
            m.eval(64).unwrap();
        }
    }
    assert_eq!(accepted(&s, parse_mu_expr), ["decimal", "ln_paren", "log3", "small"]);
}

#[test]
fn config_seeds() {
    let s = seeds("parse_config");
    assert_eq!(accepted(&s, parse_config), ["basic", "comments"]);
}
