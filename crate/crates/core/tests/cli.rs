use std::path::PathBuf;
use std::process::Command;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn staircase(args: &[&str]) -> Run {
    let output = Command::new(env!("CARGO_BIN_EXE_staircase"))
        .args(args)
        .env_clear()
        .output()
        .expect("binary runs");
    Run {
        code: output.status.code().expect("exit code"),
        stdout: String::from_utf8(output.stdout).unwrap(),
        stderr: String::from_utf8(output.stderr).unwrap(),
    }
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn single_values() {
    for (args, expected) in [
        (&["phi", "17"][..], "9\n"),
        (&["delta", "111"], "40\n"),
        (&["eps", "1"], "1\n"),
        (&["phi", "1111111"], "2109\n"),
        (&["alpha", "1000000000000"], "250000000000000000000000\n"),
        (&["beta", "7"], "6\n"),
        (&["gamma", "7"], "8\n"),
        (&["delta", "1000000000000"], "2000000\n"),
    ] {
        let run = staircase(args);
        assert_eq!((run.code, run.stdout.as_str()), (0, expected), "{args:?}");
    }
}

#[test]
fn domain_errors_exit_two() {
    for args in [
        &["phi", "0"][..],
        &["delta", "1000000000001"],
        &["alpha", "1"],
        &["phi", "-3"],
        &["phi"],
        &["frobnicate"],
        &["table", "5", "4"],
        &["table", "1", "3", "eps,bogus"],
        &["partition", "5", "--force-multiblock"],
        &["partition", "43", "--multistep", "9"],
        &["partition", "200", "--oracle"],
        &["design", "--steps", "2x1,2x1"],
        &["design", "--steps", "6x5, 2x1"],
        &["scan", "lemma_9_9"],
        &["scan", "theorem_8_1", "--to", "500"],
        &["verify", "/nonexistent/file"],
    ] {
        let run = staircase(args);
        assert_eq!(run.code, 2, "{args:?}: {}", run.stdout);
        assert!(!run.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn tables() {
    assert_eq!(staircase(&["table", "12", "12", "eps,delta"]).stdout, "n\teps\tdelta\n12\t3\t7\n");
    assert_eq!(staircase(&["table", "64", "64", "delta,quarter"]).stdout, "n\tdelta\tquarter\n64\t16\t16\n");
    assert_eq!(staircase(&["table", "1", "4", "phi"]).stdout, "n\tphi\n1\t2\n2\t3\n3\t4\n4\t4\n");
    let full = staircase(&["table", "92", "92"]);
    assert_eq!(full.stdout, "n\teps\tcofactor\tdelta\tquarter\tphi\n92\t4\t23\t27\t23\t20\n");
}

#[test]
fn partitions() {
    for (args, expected) in [
        (&["partition", "32"][..], "n=32 w=12 steps=6x5,2x1\n"),
        (&["partition", "43", "--multistep", "3"], "n=43 w=14 steps=7x4,6x1,5x1,4x1\n"),
        (&["partition", "4", "--force-multiblock"], "n=4 w=5 steps=2x1,1x2\n"),
        (&["partition", "9"], "n=9 w=6 steps=3x3\n"),
        (&["partition", "32", "--oracle"], "n=32 w=12 steps=6x5,2x1\noracle_w=12\n"),
        (&["partition", "36", "--force-multiblock", "--oracle"], "n=36 w=13 steps=8x1,7x4\noracle_w=13\n"),
    ] {
        let run = staircase(args);
        assert_eq!((run.code, run.stdout.as_str()), (0, expected), "{args:?}");
    }
}

#[test]
fn designs_and_verification() {
    let run = staircase(&["design", "9"]);
    assert_eq!(run.code, 0);
    assert_eq!(run.stdout.lines().filter(|l| l.starts_with(['R', 'C'])).count(), 6);

    let path = scratch("steps.design");
    let run = staircase(&["design", "--steps", "6x5,2x1", "--out", path.to_str().unwrap()]);
    assert_eq!((run.code, run.stdout.as_str()), (0, ""));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("STAIRCASE-DESIGN v1\nn=32\nt=2\nr=6,2\ns=5,1\nR1: 1 2 3 4 5\n"));
    assert_eq!(text.lines().filter(|l| l.starts_with(['R', 'C'])).count(), 12);

    let run = staircase(&["verify", path.to_str().unwrap()]);
    assert_eq!(run.code, 0, "{}", run.stdout);
    assert_eq!(run.stdout.lines().count(), 5);
    assert!(run.stdout.lines().all(|l| l.ends_with("\tpass")));

    let broken = scratch("broken.design");
    std::fs::write(&broken, text.replace("R1: 1 2 3", "R1: 1 2 2")).unwrap();
    let run = staircase(&["verify", broken.to_str().unwrap()]);
    assert_eq!(run.code, 3);
    assert!(run.stdout.starts_with("check1\treplication\tFAIL\t"), "{}", run.stdout);

    let garbled = scratch("garbled.design");
    std::fs::write(&garbled, text.replace("t=2", "t=two")).unwrap();
    assert_eq!(staircase(&["verify", garbled.to_str().unwrap()]).code, 2);

    let run = staircase(&["design", "100", "--incidence"]);
    let lines: Vec<&str> = run.stdout.lines().collect();
    assert_eq!(lines[0], "# blocks=20 symbols=100");
    assert_eq!(lines.len(), 21);
    assert!(lines[1..].iter().all(|l| l.len() == 100));
}

#[test]
fn partition_files() {
    let good = scratch("good.partition");
    std::fs::write(&good, "n=32 w=12 steps=6x5,2x1\n").unwrap();
    let run = staircase(&["verify", good.to_str().unwrap()]);
    assert_eq!((run.code, run.stdout.as_str()), (0, "partition\tpass\n"));

    let bad = scratch("bad.partition");
    std::fs::write(&bad, "n=33 w=12 steps=6x5,2x1\n").unwrap();
    let run = staircase(&["verify", bad.to_str().unwrap()]);
    assert_eq!((run.code, run.stdout.as_str()), (3, "partition\tFAIL\tWRONG_SUM\n"));
}

#[test]
fn scans() {
    let run = staircase(&["scan", "lemma_3_7", "--to", "111"]);
    assert_eq!(run.code, 0);
    assert_eq!(run.stdout, "# property=lemma_3_7 range=1..111 matches=111\nn\tpaper\tcomputed\n");

    let run = staircase(&["scan", "table_8_3_phi"]);
    assert_eq!(run.code, 4);
    assert_eq!(
        run.stdout,
        "# property=table_8_3_phi range=1..1111111 matches=23\nn\tpaper\tcomputed\n1\t1\t2\n1111111\t2110\t2109\n"
    );

    let run = staircase(&["scan", "prop_4_1_b", "--to", "200"]);
    assert_eq!(run.code, 4);
    assert!(run.stdout.ends_with("n\tpaper\tcomputed\n32\t0\t1\n"), "{}", run.stdout);

    let run = staircase(&["scan", "example_6_8"]);
    assert_eq!(run.code, 4);
    assert!(run.stdout.ends_with("60\t1\t0\n66\t0\t1\n"), "{}", run.stdout);

    let run = staircase(&["scan", "prop_3_10", "--from", "50", "--to", "60", "--format", "tsv"]);
    assert_eq!((run.code, run.stdout.as_str()), (0, "# property=prop_3_10 range=50..60 matches=11\nn\tpaper\tcomputed\n"));
}

#[test]
fn output_is_deterministic() {
    for args in [&["table", "1", "200"][..], &["scan", "lemma_4_2_xi_as_printed", "--to", "3000"], &["design", "77"]] {
        assert_eq!(staircase(args).stdout, staircase(args).stdout, "{args:?}");
    }
}

#[test]
fn help_exits_zero() {
    let run = staircase(&["--help"]);
    assert_eq!(run.code, 0);
    assert!(run.stdout.contains("scan"));
}
