use std::path::Path;
use std::process::{Command, Output};

fn creditfock(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_creditfock"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

const BAD_INTEREST: &str = r#"
schema_version = 1
name = "bad_interest"
seed = 1
observables = ["charge"]

[basis]
money = 1
debt = 1

[energies]
money = [1.0]
particle_hole_symmetric = true

[[terms]]
free = {}

[[terms]]
perturb = { profit = { kind = "linear_ramp", slope = 0.1 }, interest = { kind = "constant", value = 0.1 } }

[initial_state]
kind = "vacuum"

[grid]
t_end = 1.0
n_steps = 10
"#;

#[test]
fn presets_list_and_show() {
    let out = creditfock(&["presets", "list"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 6);
    let show = creditfock(&["presets", "show", "microloan"]);
    assert!(String::from_utf8(show.stdout)
        .unwrap()
        .contains("kind = \"repay\""));
    assert_eq!(code(&creditfock(&["presets", "show", "nope"])), 1);
}

#[test]
fn validate_cites_initial_condition() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.toml");
    std::fs::write(&path, BAD_INTEREST).unwrap();
    let out = creditfock(&["validate", path.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("terms[1].perturb.interest"), "{err}");
    assert!(err.contains("V(t=0) = 0"), "{err}");
    assert_eq!(
        code(&creditfock(&["validate", "preset:informal_lending"])),
        0
    );
}

#[test]
fn exit_codes() {
    assert_eq!(code(&creditfock(&["run", "/definitely/missing.toml"])), 3);
    assert_eq!(
        code(&creditfock(&[
            "run",
            "preset:earned_money",
            "--format",
            "xml"
        ])),
        1
    );
    assert_eq!(code(&creditfock(&["frobnicate"])), 1);
    assert_eq!(code(&creditfock(&["--help"])), 0);
}

#[test]
fn numerical_failure_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("drift.toml");
    // one enormous step of a strongly time-dependent field is still unitary;
    // repaying a pair that was never formed is the runtime failure here
    let text = BAD_INTEREST
        .replace(
            "kind = \"constant\", value = 0.1",
            "kind = \"linear_ramp\", slope = 0.1",
        )
        .replace(
            "[grid]",
            "[[events]]\nkind = \"repay\"\nat = 0.0\nk = 0\nq = 0\n\n[grid]",
        );
    std::fs::write(&path, text).unwrap();
    let out = creditfock(&["run", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2, "{}", String::from_utf8_lossy(&out.stderr));
}

fn run_into(dir: &Path, preset: &str) {
    let out = creditfock(&[
        "run",
        &format!("preset:{preset}"),
        "--out",
        dir.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn run_twice_is_byte_identical() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    run_into(a.path(), "microloan");
    run_into(b.path(), "microloan");
    for file in ["microloan.csv", "microloan.jsonl"] {
        let x = std::fs::read(a.path().join(file)).unwrap();
        let y = std::fs::read(b.path().join(file)).unwrap();
        assert!(!x.is_empty());
        assert_eq!(x, y, "{file}");
    }
}

#[test]
fn single_format_to_stdout() {
    let out = creditfock(&["run", "preset:qe_pair_rabi", "--format", "jsonl"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 1 + 1001);
    assert!(text.starts_with("{\"events\":"));
}

#[test]
fn spectrum_and_selftest() {
    let out = creditfock(&["spectrum", "preset:microloan"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("n,energy"));
    assert_eq!(text.lines().count(), 1 + 2);
    let st = creditfock(&["selftest"]);
    assert_eq!(code(&st), 0);
    assert!(!String::from_utf8(st.stdout).unwrap().contains("FAIL"));
}

#[test]
fn exciton1d_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("ho.toml");
    std::fs::write(
        &cfg,
        "schema_version = 1\nname = \"ho\"\nn_states = 4\nwavefunctions = true\n\
         grid = { x_min = -8.0, x_max = 8.0, n_points = 801 }\n\
         potential = { kind = \"harmonic\", omega = 1.0 }\n",
    )
    .unwrap();
    let out_dir = dir.path().join("out");
    let out = creditfock(&[
        "exciton1d",
        cfg.to_str().unwrap(),
        "--out",
        out_dir.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let energies = std::fs::read_to_string(out_dir.join("ho_energies.csv")).unwrap();
    assert_eq!(energies.lines().count(), 5);
    let psi = std::fs::read_to_string(out_dir.join("ho_wavefunctions.csv")).unwrap();
    assert_eq!(psi.lines().next(), Some("x,psi_0,psi_1,psi_2,psi_3"));
    assert_eq!(psi.lines().count(), 802);

    let missing = dir.path().join("tab.toml");
    std::fs::write(
        &missing,
        "schema_version = 1\nname = \"tab\"\nn_states = 2\n\
         grid = { x_min = -1.0, x_max = 1.0, n_points = 21 }\n\
         potential = { kind = \"tabulated_file\", path = \"absent.csv\" }\n",
    )
    .unwrap();
    assert_eq!(
        code(&creditfock(&["exciton1d", missing.to_str().unwrap()])),
        3
    );
}
