//! End-to-end tests of the `omcode` binary, driven by the command manifest.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

fn repo_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn omcode(args: &[String], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_omcode"))
        .args(args)
        .current_dir(repo_root())
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(text) = stdin {
            pipe.write_all(text.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

#[derive(Debug)]
struct Example {
    line: usize,
    args: Vec<String>,
    stdout: Vec<String>,
    stderr: Vec<String>,
    exit: i32,
}

fn manifest() -> Vec<Example> {
    let text = std::fs::read_to_string(repo_root().join("COMMANDS.md")).expect("COMMANDS.md exists");
    let mut examples = Vec::new();
    let mut in_block = false;
    for (i, line) in text.lines().enumerate() {
        if line.starts_with("```") {
            in_block = !in_block;
            continue;
        }
        if !in_block {
            continue;
        }
        if let Some(cmd) = line.strip_prefix("$ omcode ") {
            examples.push(Example {
                line: i + 1,
                args: shell_words::split(cmd).expect("manifest commands are well quoted"),
                stdout: vec![],
                stderr: vec![],
                exit: 0,
            });
            continue;
        }
        let ex = examples.last_mut().expect("output follows a command");
        if let Some(err) = line.strip_prefix("! ") {
            ex.stderr.push(err.to_string());
        } else if let Some(code) = line.strip_prefix("# exit ") {
            ex.exit = code.parse().unwrap();
        } else {
            ex.stdout.push(line.to_string());
        }
    }
    examples
}

fn lines_match(expected: &[String], actual: &str) -> bool {
    let actual: Vec<&str> = actual.lines().collect();
    if expected.len() != actual.len() {
        return false;
    }
    expected.iter().zip(actual).all(|(e, a)| match e.strip_suffix('…') {
        Some(prefix) => a.starts_with(prefix),
        None => e == a,
    })
}

#[test]
fn manifest_examples_reproduce() {
    let examples = manifest();
    assert!(examples.len() > 100, "manifest has {} examples", examples.len());
    let mut failures = Vec::new();
    for ex in &examples {
        let out = omcode(&ex.args, None);
        let stdout = String::from_utf8(out.stdout).unwrap();
        // Blank lines in diagnostics are not recorded in the manifest.
        let stderr: String = String::from_utf8(out.stderr)
            .unwrap()
            .lines()
            .filter(|l| !l.is_empty())
            .map(|l| format!("{l}\n"))
            .collect();
        let code = out.status.code().unwrap_or(-1);
        if code != ex.exit || !lines_match(&ex.stdout, &stdout) || !lines_match(&ex.stderr, &stderr) {
            failures.push(format!(
                "COMMANDS.md:{} omcode {}\n  exit {code} (expected {})\n  stdout {stdout:?}\n  stderr {stderr:?}",
                ex.line,
                ex.args.join(" "),
                ex.exit
            ));
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn manifest_covers_every_subcommand() {
    let examples = manifest();
    let used: std::collections::BTreeSet<String> = examples
        .iter()
        .filter(|e| e.exit != 64)
        .map(|e| match e.args[0].as_str() {
            "leq" => "leq".to_string(),
            first => format!("{first} {}", e.args[1]),
        })
        .collect();
    for expected in [
        "sign compose", "sign separator", "sign orthogonal", "sign parts",
        "validate covectors", "validate circuits",
        "convert covectors", "convert circuits", "convert topes", "convert minor", "convert flags",
        "convert tope-graph", "convert t-convex", "convert closure", "convert feasible",
        "code matroid", "code cover", "code half-spaces", "code trunk", "code is-trunk", "code isomorphic",
        "morphism apply", "morphism check", "morphism strong-map", "morphism w-plus", "leq",
        "ideal canonical-form", "ideal variety", "ideal weak-elimination", "ideal polarize", "ideal depolarize",
        "ideal om", "ideal om-primes", "ideal dual", "ideal alexander", "ideal affine", "ideal intersect",
        "ideal quotient", "ideal specialize", "ideal map", "ideal commuting-square",
        "topology complex", "topology link", "topology homology", "topology collapse", "topology obstructions",
        "catalog list", "catalog show", "catalog sunflower", "catalog battery", "catalog check",
    ] {
        assert!(used.contains(expected), "no manifest example for `{expected}`");
    }
}

#[test]
fn standard_input_is_read_when_no_source_is_given() {
    let args: Vec<String> = ["validate", "covectors"].map(String::from).to_vec();
    let out = omcode(&args, Some(r#"{"n":3,"covectors":["000","+++","---"]}"#));
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "{\"valid\":true}\n");
}

#[test]
fn file_and_name_together_is_invalid() {
    let args: Vec<String> = ["convert", "topes", "--name", "M1", "--file", "data/three_lines.json"]
        .map(String::from)
        .to_vec();
    let out = omcode(&args, None);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
}

#[test]
fn job_count_does_not_change_output() {
    for cmd in [
        "convert covectors --file data/cyclic_5_3.json",
        "code half-spaces --file data/cyclic_5_3.json --mode Lpm",
        "code cover --name fig1_cover",
        "ideal affine --file data/cyclic_5_3.json --g 5 --via-quotient",
    ] {
        let base: Vec<String> = shell_words::split(cmd).unwrap();
        let outputs: Vec<Vec<u8>> = ["1", "3", "8"]
            .iter()
            .map(|j| {
                let mut args = base.clone();
                args.extend(["--jobs".to_string(), j.to_string()]);
                let out = omcode(&args, None);
                assert!(out.status.success(), "{cmd}");
                out.stdout
            })
            .collect();
        assert!(outputs.windows(2).all(|w| w[0] == w[1]), "{cmd}");
    }
}

#[test]
fn help_goes_to_standard_output() {
    let out = omcode(&["--help".to_string()], None);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("Exit codes"));
    assert!(out.stderr.is_empty());
}
