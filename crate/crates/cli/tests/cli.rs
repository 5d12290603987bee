use std::io::Write;
use std::process::{Command, Stdio};

use num_bigint::BigInt;
use proptest::prelude::*;
use serde_json::Value;

use symcanon::matrix::IntMatrix;
use symcanon_cli::document::{emit_matrix, parse_matrix};

fn symcanon(args: &[&str], stdin: &str) -> (Value, i32) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_symcanon"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).expect("json report");
    (v, out.status.code().unwrap())
}

fn data(v: &Value) -> Vec<Vec<i64>> {
    v["data"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r.as_array().unwrap().iter().map(|e| e.as_i64().unwrap()).collect())
        .collect()
}

#[test]
fn verify_examples() {
    let (v, code) = symcanon(&["verify"], "1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n");
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["symplectic_involution"], true);
    assert_eq!(v["payload"]["invariants"], serde_json::json!({ "p": 2, "m": 0, "t": 0 }));

    let (v, code) = symcanon(&["verify"], "0 1\n-1 0\n");
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["symplectic"], true);
    assert_eq!(v["payload"]["involution"], false);
    assert!(v["payload"]["invariants"].is_null());

    let (v, code) = symcanon(&["verify"], "1 0 0\n0 1 0\n0 0 1\n");
    assert_eq!(code, 2);
    assert_eq!(v["status"], "error");
    assert!(v.get("payload").is_none());
}

#[test]
fn canonicalize_examples() {
    let minus_six = "-1 0 0 0 0 0\n0 -1 0 0 0 0\n0 0 -1 0 0 0\n0 0 0 -1 0 0\n0 0 0 0 -1 0\n0 0 0 0 0 -1\n";
    let (v, code) = symcanon(&["canonicalize"], minus_six);
    assert_eq!(code, 0);
    let p = &v["payload"];
    assert_eq!(p["invariants"], serde_json::json!({ "p": 0, "m": 3, "t": 0 }));
    assert!(IntMatrix::from_rows(data(&p["transform"])).is_identity());
    assert_eq!(p["conjugation_verified"], true);

    let (v, code) = symcanon(&["canonicalize"], "1 0 0 1\n0 -1 -1 0\n0 0 1 0\n0 0 0 -1\n");
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["invariants"], serde_json::json!({ "p": 0, "m": 0, "t": 1 }));
    assert_eq!(v["payload"]["transform"]["rows"], 4);

    // J squares to −Id, so it is not an involution.
    let (v, code) = symcanon(&["canonicalize"], "0 1\n-1 0\n");
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "invalid_input");
}

#[test]
fn wrapper_examples() {
    let (v, code) = symcanon(&["riemann", "--genus", "3", "--fixed-points", "0"], "");
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["quotient_genus"], 2);
    assert_eq!(v["payload"]["invariants"], serde_json::json!({ "p": 1, "m": 0, "t": 1 }));

    let (v, code) = symcanon(&["riemann", "--genus", "2", "--fixed-points", "0"], "");
    assert_eq!(code, 2);
    assert_eq!(v["status"], "error");

    let (v, _) = symcanon(&["riemann", "--genus", "4"], "");
    assert_eq!(v["payload"]["admissible"].as_array().unwrap().len(), 3);

    let (v, code) = symcanon(&["generate", "--p", "1", "--m", "1", "--t", "1", "--seed", "7"], "");
    assert_eq!(code, 0);
    let m = IntMatrix::from_rows(data(&v["payload"]["matrix"]));
    assert_eq!((m.rows(), m.cols()), (8, 8));
    let (again, _) = symcanon(&["generate", "--p", "1", "--m", "1", "--t", "1", "--seed", "7"], "");
    assert_eq!(v, again);
    let (canon, code) = symcanon(&["canonicalize"], &v.to_string());
    assert_eq!(code, 0);
    assert_eq!(canon["payload"]["invariants"], serde_json::json!({ "p": 1, "m": 1, "t": 1 }));

    let (v, code) = symcanon(&["smith"], r#"{"rows": 2, "cols": 2, "data": [[2, 0], [0, 3]]}"#);
    assert_eq!(code, 0);
    assert_eq!(data(&v["payload"]["d"]), vec![vec![1, 0], vec![0, 6]]);

    let (v, code) = symcanon(&["skew-frobenius"], "0 2\n-2 0\n");
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["divisors"], serde_json::json!([2]));

    let (v, code) = symcanon(&["comessatti"], "0 1\n1 0\n");
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["lambda"], 1);

    let (v, code) = symcanon(&["invariants"], "0 1 0\n1 0 0\n0 0 -1\n");
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["cohomology"]["h_odd_rank"], 1);
    assert_eq!(v["payload"]["cohomology"]["h_even_rank"], 0);
}

#[test]
fn parse_errors_exit_two_with_position() {
    let (v, code) = symcanon(&["smith"], "1 2\n3 x\n");
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "parse");
    assert_eq!(v["error"]["line"], 2);
}

#[test]
fn input_flag_reads_file() {
    let dir = std::env::temp_dir().join(format!("symcanon-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("m.txt");
    std::fs::write(&path, "2 4\n6 8\n").unwrap();
    let (v, code) = symcanon(&["smith", "--input", path.to_str().unwrap()], "");
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["divisors"], serde_json::json!([2, 4]));
    std::fs::remove_dir_all(&dir).unwrap();
}

proptest! {
    #[test]
    fn serialization_round_trips(
        r in 1usize..5, c in 1usize..5, words in prop::collection::vec(any::<(i64, u64)>(), 16)
    ) {
        // Shifting hi by 32, 64 or 96 bits pushes entries well past 64 bits.
        let entries: Vec<BigInt> = (0..r * c)
            .map(|i| {
                let (hi, lo) = words[i % words.len()];
                let shift = (i % 3) as u32 * 32;
                (BigInt::from(hi) << (32 + shift)) + BigInt::from(lo)
            })
            .collect();
        let m = IntMatrix::new(r, c, entries).unwrap();
        let doc = parse_matrix(&emit_matrix(&m, None)).unwrap();
        prop_assert_eq!(doc.matrix, m);
    }
}
