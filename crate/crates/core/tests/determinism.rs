//! Reports must be byte-identical across runs and thread counts.

use std::path::PathBuf;
use std::process::Command;

fn spec(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("specs").join(name)
}

fn run(args: &[&str], threads: Option<&str>) -> Vec<u8> {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_qcode"));
    cmd.env_remove("QCODE_THREADS");
    if let Some(t) = threads {
        cmd.args(["--threads", t]);
    }
    let out = cmd.args(args).output().expect("qcode runs");
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    out.stdout
}

#[test]
fn reports_are_reproducible() {
    let cases: Vec<Vec<String>> = vec![
        vec!["build".into(), spec("color_code_pruned.spec").display().to_string()],
        vec![
            "distance".into(),
            "--max-weight".into(),
            "4".into(),
            spec("bb_patch_30.spec").display().to_string(),
        ],
        vec!["prune-search".into(), spec("bb_search_30.spec").display().to_string()],
        vec![
            "verify-gate".into(),
            spec("color_code_pruned.spec").display().to_string(),
        ],
        vec![
            "verify-gate".into(),
            spec("hgp_reduced_phase.spec").display().to_string(),
        ],
    ];
    for case in &cases {
        let args: Vec<&str> = case.iter().map(String::as_str).collect();
        let first = run(&args, None);
        assert!(!first.is_empty());
        assert_eq!(first, run(&args, None), "second run of {args:?}");
        assert_eq!(first, run(&args, Some("1")), "single thread {args:?}");
        assert_eq!(first, run(&args, Some("3")), "three threads {args:?}");
    }
}

#[test]
fn thread_count_from_environment() {
    let path = spec("cyclic_pair_5_reduced.spec").display().to_string();
    let plain = run(&["build", &path], None);
    let out = Command::new(env!("CARGO_BIN_EXE_qcode"))
        .env("QCODE_THREADS", "1")
        .args(["build", &path])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(out.stdout, plain);
}

#[test]
fn exports_are_reproducible() {
    let base = std::env::temp_dir().join(format!("qcode-export-{}", std::process::id()));
    let path = spec("color_code_pruned.spec").display().to_string();
    let mut listings = Vec::new();
    for (i, threads) in ["1", "4"].iter().enumerate() {
        let dir = base.join(i.to_string());
        let dir_s = dir.display().to_string();
        run(&["export", "--out", &dir_s, &path], Some(threads));
        let mut files: Vec<_> = std::fs::read_dir(&dir).unwrap().map(|e| e.unwrap().path()).collect();
        files.sort();
        let contents: Vec<(String, Vec<u8>)> = files
            .iter()
            .map(|f| {
                (
                    f.file_name().unwrap().to_string_lossy().into_owned(),
                    std::fs::read(f).unwrap(),
                )
            })
            .collect();
        listings.push(contents);
    }
    std::fs::remove_dir_all(&base).ok();
    assert!(!listings[0].is_empty());
    assert_eq!(listings[0], listings[1]);
}
