//! The `xplanar` binary: exit codes, file outputs, and certificate replay.

mod common;

use std::path::PathBuf;
use std::process::{Command, Output};

fn xplanar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_xplanar")).args(args).output().unwrap()
}

fn corpus(name: &str) -> String {
    common::corpus_dir().join(name).to_string_lossy().into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn decide_exit_codes() {
    let o = xplanar(&["decide", &corpus("fig8-loop.xg")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("w +1\nw +0\nx 0\n"));

    let o = xplanar(&["decide", "--gauss", "a a"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("r 0 0.s 0.t 1.t 1.s\nf 3\n"));
}

#[test]
fn oracle_matches_decide() {
    for method in ["cycles", "rotations"] {
        let o = xplanar(&["oracle", &corpus("fig8-loop.xg"), "--method", method]);
        assert_eq!(o.status.code(), Some(1), "{method}");
        let o = xplanar(&["oracle", &corpus("fig8-pass.xg"), "--method", method]);
        assert_eq!(o.status.code(), Some(0), "{method}");
    }
    let o = xplanar(&["oracle", &corpus("random-12-1.xg"), "--max-v", "5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors() {
    for args in [&["decide", "--nope"][..], &["frobnicate"], &["oracle", "--method", "magic", "x.xg"], &[]] {
        let o = xplanar(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
    let o = xplanar(&["decide", "/definitely/not/here.xg"]);
    assert_eq!(o.status.code(), Some(2));
    let o = xplanar(&["decide", "--gauss", "a b"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn malformed_input_names_the_line() {
    let path = scratch("bad.xg");
    std::fs::write(&path, "xgraph 1 2\ne 0 0 0\ne 1 0\n").unwrap();
    let o = xplanar(&["decide", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));

    std::fs::write(&path, "xgraph 1 1\ne 0 0 0\np 0 0.s | 0.t\n").unwrap();
    let o = xplanar(&["validate", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("vertex degree 2 ≠ 4"));
    let o = xplanar(&["validate", &corpus("trefoil.xg")]);
    assert_eq!((o.status.code(), stdout(&o)), (Some(0), "ok\n".to_string()));
}

#[test]
fn certificates_replay() {
    for (name, simplify) in [("two-crossing.xg", false), ("pentagon-turning.xg", true), ("random-12-1.xg", true), ("union.xg", false)] {
        let cert = scratch(&format!("{name}.cert"));
        let mut args = vec!["certify", &corpus(name)[..], "-o", cert.to_str().unwrap()]
            .into_iter()
            .map(String::from)
            .collect::<Vec<_>>();
        if simplify {
            args.push("--simplify".into());
        }
        let o = Command::new(env!("CARGO_BIN_EXE_xplanar")).args(&args).output().unwrap();
        assert_eq!(o.status.code(), Some(1), "{name}");
        let o = xplanar(&["certify", &corpus(name), "--check", cert.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(1), "{name}: {}", stdout(&o));
        assert!(stdout(&o).contains("valid: not X-planar"));
    }
    // a certificate for one graph does not certify another
    let cert = scratch("fig8.cert");
    std::fs::write(&cert, "w +0\nw +1\nx 0\n").unwrap();
    let o = xplanar(&["certify", &corpus("fig8-pass.xg"), "--check", cert.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    std::fs::write(&cert, "w +0\nw +1\nx 5\n").unwrap();
    let o = xplanar(&["certify", &corpus("fig8-loop.xg"), "--check", cert.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn gauss_and_gen_outputs() {
    let o = xplanar(&["gauss", "a a"]);
    assert_eq!(o.status.code(), Some(0));
    let g = xplanar::format::parse_xgraph(&stdout(&o)).unwrap();
    assert_eq!(g, common::fig8_pass());

    let path = scratch("gen.xg");
    let o = xplanar(&["gen", "--letters", "3", "--seed", "42", "-o", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("# seed=42 letters=3 shuffle=false rng=ChaCha8\n"));
    assert_eq!(text, common::corpus("random-3-42.xg"));
}

#[test]
fn embed_and_render() {
    let o = xplanar(&["embed", &corpus("random-3-42.xg")]);
    assert_eq!(o.status.code(), Some(0));
    let g = xplanar::format::parse_xgraph(&common::corpus("random-3-42.xg")).unwrap();
    let r = xplanar::format::parse_embedding(&stdout(&o), &g).unwrap();
    assert!(xplanar::is_planar_rotation(&g, &r).unwrap());

    let o = xplanar(&["render", &corpus("fig8-pass.xg")]);
    assert_eq!(o.status.code(), Some(0));
    let svg = stdout(&o);
    let doc = roxmltree::Document::parse(&svg).unwrap();
    let paths: Vec<_> = doc.descendants().filter(|n| n.has_tag_name("path")).collect();
    assert_eq!(paths.len(), 2);
    assert_eq!(doc.descendants().filter(|n| n.has_tag_name("circle")).count(), 1);

    let o = xplanar(&["render", &corpus("fig8-loop.xg")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(o.stdout.is_empty());
}

#[test]
fn repeated_runs_are_identical() {
    for name in ["random-8-5-shuffled.xg", "pentagon-turning.xg", "random-3-42.xg"] {
        for sub in ["decide", "embed", "render"] {
            let a = xplanar(&[sub, &corpus(name)]);
            let b = xplanar(&[sub, &corpus(name)]);
            assert_eq!(a.stdout, b.stdout, "{sub} {name}");
            assert_eq!(a.status.code(), b.status.code());
        }
    }
}
