use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn topolab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_topolab"))
        .args(args)
        .env_remove("TOPOLAB_THREADS")
        .output()
        .expect("spawn topolab")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

/// Writes `topolab generate KIND N` into `dir/NAME`.
fn generated(dir: &Path, name: &str, kind: &str, n: &str) -> PathBuf {
    let out = topolab(&["generate", kind, n]);
    assert!(out.status.success());
    let path = dir.join(name);
    fs::write(&path, out.stdout).unwrap();
    path
}

fn product(dir: &Path, name: &str, op: &str, a: &Path, b: &Path) -> PathBuf {
    let out = topolab(&["product", op, a.to_str().unwrap(), b.to_str().unwrap()]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let path = dir.join(name);
    fs::write(&path, out.stdout).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn generate_examples() {
    assert_eq!(
        stdout(&topolab(&["generate", "path", "4"])),
        "4 3\n0 1\n1 2\n2 3\n"
    );
    assert_eq!(
        stdout(&topolab(&["generate", "cycle", "3"])),
        "3 3\n0 1\n0 2\n1 2\n"
    );
    assert_eq!(stdout(&topolab(&["generate", "complete", "1"])), "1 0\n");
    let bad = topolab(&["generate", "cycle", "2"]);
    assert!(!bad.status.success());
    assert!(String::from_utf8_lossy(&bad.stderr).contains("at least 3"));
}

#[test]
fn product_examples() {
    let dir = TempDir::new().unwrap();
    let p1 = generated(dir.path(), "P1.el", "path", "1");
    let p2 = generated(dir.path(), "P2.el", "path", "2");
    let p3 = generated(dir.path(), "P3.el", "path", "3");
    let k3 = generated(dir.path(), "K3.el", "complete", "3");

    let j = fs::read_to_string(product(dir.path(), "J.el", "join", &p2, &p3)).unwrap();
    assert!(j.starts_with("5 9\n"));

    let c = fs::read_to_string(product(dir.path(), "C.el", "corona", &k3, &p2)).unwrap();
    assert!(c.starts_with("9 12\n"));

    let c3 = fs::read_to_string(product(dir.path(), "C3.el", "corona", &p1, &p2)).unwrap();
    assert_eq!(c3, stdout(&topolab(&["generate", "cycle", "3"])));
}

#[test]
fn product_parse_errors_carry_file_and_line() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.el");
    fs::write(&bad, "3 2\n0 1\n0 1\n").unwrap();
    let p2 = generated(dir.path(), "P2.el", "path", "2");
    let out = topolab(&["product", "join", s(&p2), s(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(
        err.contains("bad.el") && err.contains("line 3") && err.contains("duplicate"),
        "{err}"
    );
}

#[test]
fn compute_examples() {
    let dir = TempDir::new().unwrap();
    let p2 = generated(dir.path(), "P2.el", "path", "2");
    let k4 = product(dir.path(), "K4.el", "join", &p2, &p2);
    let c22 = product(dir.path(), "C22.el", "corona", &p2, &p2);

    assert_eq!(
        stdout(&topolab(&["compute", s(&k4), "eso"])),
        "108*sqrt(2) ≈ 152.735065\n"
    );
    assert_eq!(
        stdout(&topolab(&["compute", s(&c22), "eu"])),
        "7*sqrt(3) + 4*sqrt(19) ≈ 29.559951\n"
    );
    assert_eq!(
        stdout(&topolab(&["compute", s(&p2), "so"])),
        "1*sqrt(2) ≈ 1.414214\n"
    );

    let both = stdout(&topolab(&["compute", s(&k4), "--kinds", "eu,eso"]));
    assert_eq!(
        both,
        "eso: 108*sqrt(2) ≈ 152.735065\neu: 18*sqrt(3) ≈ 31.176915\n"
    );

    let json = stdout(&topolab(&[
        "compute",
        s(&c22),
        "--kinds",
        "eso",
        "--format",
        "json",
    ]));
    assert!(
        json.contains("\"exact\": \"34*sqrt(2) + 20*sqrt(13)\""),
        "{json}"
    );
    assert!(json.contains("\"kind\": \"eso\""));
}

#[test]
fn partition_examples() {
    let dir = TempDir::new().unwrap();
    let p4 = generated(dir.path(), "P4.el", "path", "4");
    let p2 = generated(dir.path(), "P2.el", "path", "2");
    let p3 = generated(dir.path(), "P3.el", "path", "3");
    let c3 = generated(dir.path(), "C3.el", "cycle", "3");
    let j = product(dir.path(), "J.el", "join", &p2, &p3);
    let cc = product(dir.path(), "CC.el", "corona", &c3, &c3);

    assert_eq!(
        stdout(&topolab(&["partition", s(&p4)])),
        "(1,2),2\n(2,2),1\n"
    );
    assert_eq!(
        stdout(&topolab(&["partition", s(&j)])),
        "(3,4),6\n(4,4),3\n"
    );
    assert_eq!(
        stdout(&topolab(&["partition", s(&cc)])),
        "(3,3),9\n(3,5),9\n(5,5),3\n"
    );
    assert_eq!(
        stdout(&topolab(&["partition", s(&p4), "--format", "csv"])),
        "a,b,count\n1,2,2\n2,2,1\n"
    );
}

#[test]
fn verify_single_point() {
    let out = topolab(&[
        "verify",
        "--families",
        "join-paths",
        "--r-max",
        "2",
        "--s-max",
        "2",
    ]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "family,kind,r,s,exact_equal,float_delta,oracle,closed\n\
         join-paths,eso,2,2,true,0.000000000e0,108*sqrt(2),108*sqrt(2)\n\
         join-paths,eu,2,2,true,0.000000000e0,18*sqrt(3),18*sqrt(3)\n"
    );
}

#[test]
fn verify_full_grid_passes() {
    let out = topolab(&[
        "verify",
        "--families",
        "all",
        "--r-max",
        "10",
        "--s-max",
        "10",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(!text.contains(",false,"));
    // 81 + 64 + 81 + 72 + 81 + 64 points, two kinds each, plus the header
    assert_eq!(text.lines().count(), 1 + 443 * 2);
}

#[test]
fn verify_audit_reports_known_errata() {
    let out = topolab(&[
        "verify",
        "--audit",
        "--families",
        "corona-cycles",
        "--r-max",
        "3",
        "--s-max",
        "3",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let audit_line = text
        .lines()
        .find(|l| l.starts_with("corona-cycles,eu,3,3,general,"))
        .expect("audit row for the EU statement");
    assert!(audit_line.ends_with(",true"), "{audit_line}");
}

#[test]
fn verify_is_byte_deterministic() {
    let args = [
        "verify",
        "--families",
        "all",
        "--r-max",
        "6",
        "--s-max",
        "6",
        "--audit",
    ];
    let a = topolab(&args);
    let b = Command::new(env!("CARGO_BIN_EXE_topolab"))
        .args(args)
        .env("TOPOLAB_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(a.stdout, b.stdout);

    let mut json_args = args.to_vec();
    json_args.extend(["--format", "json"]);
    assert_eq!(topolab(&json_args).stdout, topolab(&json_args).stdout);
}

#[test]
fn verify_out_file() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("report.json");
    let out = topolab(&[
        "verify",
        "--families",
        "join-complete",
        "--r-max",
        "3",
        "--s-max",
        "3",
        "--format",
        "json",
        "--out",
        s(&path),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let doc = fs::read_to_string(&path).unwrap();
    assert!(doc.contains("\"records\"") && doc.contains("\"summary\""));
}

#[test]
fn injected_fault_flips_exit_status() {
    let base = [
        "verify",
        "--families",
        "corona-paths",
        "--r-max",
        "5",
        "--s-max",
        "5",
    ];
    assert!(topolab(&base).status.success());
    let mut faulty = base.to_vec();
    faulty.extend(["--inject-fault", "corona-paths:3:4"]);
    let out = topolab(&faulty);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("corona-paths,eso,3,4,false,"));
}

#[test]
fn verify_argument_errors() {
    assert_eq!(
        topolab(&["verify", "--families", "trees"]).status.code(),
        Some(2)
    );
    let low = topolab(&[
        "verify",
        "--families",
        "join-cycles",
        "--r-max",
        "2",
        "--s-max",
        "5",
    ]);
    assert_eq!(low.status.code(), Some(2));
    assert_eq!(
        topolab(&["verify", "--format", "text"]).status.code(),
        Some(2)
    );
}
