//! End-to-end checks of the command-line surface: exit codes, output files,
//! and run-to-run determinism of the CSV emitters.

use ratapprox::cli::run;
use std::path::PathBuf;

fn tmp_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("ratapprox_cli_{tag}_{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    dir
}

fn argv(parts: &[&str]) -> Vec<String> {
    std::iter::once("ratapprox".to_string())
        .chain(parts.iter().map(|s| s.to_string()))
        .collect()
}

#[test]
fn approx_evaluates_and_exits_zero() {
    let code = run(argv(&[
        "approx", "--eq", "y^2-y-z", "--init", "1,1", "--z", "6", "--n", "40",
    ]));
    assert_eq!(code, 0);
}

#[test]
fn usage_error_exits_two() {
    assert_eq!(run(argv(&["no-such-command"])), 2);
    assert_eq!(run(argv(&["approx", "--eq", "y^2-y-z"])), 2); // missing args
}

#[test]
fn computation_error_exits_one() {
    // z = -1 is the pole of the leading coefficient
    let code = run(argv(&[
        "approx",
        "--eq",
        "(z+1)*y^3 = (z^2+1)*y^2 + (z-5*I)*y + (z^3-1-I)",
        "--z",
        "-1",
        "--n",
        "10",
    ]));
    assert_eq!(code, 1);
}

#[test]
fn parse_error_exits_one_with_position() {
    let code = run(argv(&["ratio", "--eq", "y^2 + w", "--n", "5"]));
    assert_eq!(code, 1);
}

#[test]
fn loci_writes_deterministic_csv() {
    let d1 = tmp_dir("loci1");
    let d2 = tmp_dir("loci2");
    for d in [&d1, &d2] {
        let code = run(argv(&[
            "loci",
            "--eq",
            "y^2-y-z",
            "--init",
            "1,-1",
            "--window",
            "-3,1,-1,1",
            "--grid",
            "64,64",
            "--out",
            d.to_str().unwrap(),
        ]));
        assert_eq!(code, 0);
    }
    let a = std::fs::read(d1.join("loci.csv")).unwrap();
    let b = std::fs::read(d2.join("loci.csv")).unwrap();
    assert_eq!(a, b, "CSV output differs between identical runs");
    assert!(d1.join("loci.svg").exists());
    // refuses to overwrite without --force
    let code = run(argv(&[
        "loci",
        "--eq",
        "y^2-y-z",
        "--init",
        "1,-1",
        "--window",
        "-3,1,-1,1",
        "--grid",
        "64,64",
        "--out",
        d1.to_str().unwrap(),
    ]));
    assert_eq!(code, 1);
    let _ = std::fs::remove_dir_all(&d1);
    let _ = std::fs::remove_dir_all(&d2);
}

#[test]
fn threeconj_checks_drive_exit_codes() {
    assert_eq!(
        run(argv(&["threeconj", "--C", "4", "--n", "41", "--check", "real-zeros"])),
        0
    );
    assert_eq!(
        run(argv(&["threeconj", "--C", "1", "--n", "41", "--check", "real-zeros"])),
        1
    );
    assert_eq!(
        run(argv(&["threeconj", "--C", "3.5", "--n", "31", "--check", "interlacing"])),
        0
    );
    assert_eq!(
        run(argv(&["threeconj", "--C", "0", "--n", "8", "--check", "discriminant"])),
        0
    );
}

#[test]
fn figures_emit_files() {
    let d = tmp_dir("figs");
    let code = run(argv(&[
        "figure1",
        "--triple",
        "standard",
        "--n",
        "15",
        "--grid",
        "64,64",
        "--out",
        d.to_str().unwrap(),
    ]));
    assert_eq!(code, 0);
    assert!(d.join("figure1_standard.svg").exists());
    assert!(d.join("figure1_standard_loci.csv").exists());
    assert!(d.join("figure1_standard_poles.csv").exists());
    let code = run(argv(&[
        "figure3",
        "--n",
        "12",
        "--grid",
        "64,64",
        "--out",
        d.to_str().unwrap(),
    ]));
    assert_eq!(code, 0);
    assert!(d.join("figure3_n12.svg").exists());
    let _ = std::fs::remove_dir_all(&d);
}
