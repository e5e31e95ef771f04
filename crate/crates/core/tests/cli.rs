use std::process::{Command, Output};

fn minperim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_minperim")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn compute() {
    let out = minperim(&["compute", "7"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "7 12 8 IV 4\n");
    assert_eq!(stdout(&minperim(&["compute", "16"])), "16 16 24 I 1\n");
    assert_eq!(stdout(&minperim(&["compute", "12"])), "12 14 17 III 1\n");
}

#[test]
fn bad_arguments_fail_on_stderr() {
    for args in [&["compute", "0"][..], &["compute", "-3"], &["table", "9", "3"], &["frobnicate"]] {
        let out = minperim(args);
        assert!(!out.status.success(), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn table_formats() {
    let csv = stdout(&minperim(&["table", "1", "10"]));
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "n,p,B,e");
    assert_eq!(lines[7], "7,12,8,4");
    assert_eq!(lines.len(), 11);
    let bfile = stdout(&minperim(&["table", "100", "102", "--format", "bfile"]));
    assert_eq!(bfile.lines().nth(1), Some("101 1615"));
}

#[test]
fn verify() {
    let out = minperim(&["verify"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "e_list: 144/144 OK; e_sq_plus_1: 49/49 OK; e_sq_s_1: 49/49 OK\n");
}

#[test]
fn enumerate_svg_and_ascii() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().to_str().unwrap();
    let out = minperim(&["enumerate", "10", "--format", "svg", "--out-dir", path]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "6\n");
    let mut names: Vec<String> = std::fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert_eq!(names, (1..=6).map(|i| format!("poly_10_{i}.svg")).collect::<Vec<_>>());
    let svg = std::fs::read_to_string(dir.path().join("poly_10_1.svg")).unwrap();
    assert_eq!(svg.matches("<rect").count(), 10);

    let out = minperim(&["enumerate", "3", "--out-dir", path]);
    assert_eq!(stdout(&out), "2\n");
    let drawn = std::fs::read_to_string(dir.path().join("poly_3_2.txt")).unwrap();
    assert_eq!(drawn.matches('#').count(), 3);

    let capped = minperim(&["enumerate", "50", "--cap", "20", "--out-dir", path]);
    assert!(!capped.status.success());
    assert!(String::from_utf8_lossy(&capped.stderr).contains("cap"));
}

#[test]
fn oracle() {
    let out = minperim(&["oracle", "8"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(1).take(8).collect();
    assert!(rows.iter().all(|r| r.ends_with(" OK")), "{text}");
    assert_eq!(rows[6], "7 12 12 8 8 4 4 OK");
    assert!(text.ends_with("overall OK\n"));
    assert!(!minperim(&["oracle", "13"]).status.success());
}
