//! End-to-end checks of the `polyq` binary.

use std::io::Write;
use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_polyq"))
        .args(args)
        .output()
        .expect("run polyq");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
    )
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, text) = run(args);
    (
        code,
        serde_json::from_str(&text).unwrap_or_else(|e| panic!("{e}: {text}")),
    )
}

#[test]
fn norm_of_example() {
    let (code, v) = json(&["norm", "z*zbar"]);
    assert_eq!(code, 0);
    assert!((v["result"]["norm"].as_f64().unwrap() - 1.0).abs() <= 1e-3);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["diagnostics"]["grid_n"], 200);
    assert_eq!(v["diagnostics"]["D"], 64);
}

#[test]
fn report_key_order_is_fixed() {
    let (_, text) = run(&["norm", "z"]);
    let keys = [
        "\"schema_version\"",
        "\"command\"",
        "\"inputs\"",
        "\"result\"",
        "\"diagnostics\"",
    ];
    let pos: Vec<usize> = keys.iter().map(|k| text.find(k).unwrap()).collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]), "{text}");
}

#[test]
fn diamond_product_of_example() {
    let (code, v) = json(&["mul", "z*zbar", "1 - z*zbar", "--order", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["canonical"], "(z)*zbar");
    let (_, v) = json(&["mul", "z*zbar", "1 - z*zbar"]);
    assert_eq!(v["result"]["canonical"], "(z)*zbar + (-z^2)*zbar^2");
}

#[test]
fn parse_errors_exit_two_with_offset() {
    let (code, v) = json(&["eval", "z +", "0"]);
    assert_eq!(code, 2);
    assert_eq!(v["offset"], 3);
    let (code, v) = json(&["eval", "z $ 1", "0"]);
    assert_eq!(code, 2);
    assert_eq!(v["offset"], 2);
}

#[test]
fn argument_errors_exit_two() {
    for args in [
        &["frobnicate"][..],
        &["norm"],
        &["norm", "z", "--grid", "x"],
        &["norm", "z", "--region", "disc:0,0,-1"],
        &["norm", "z", "--order", "0"],
        &["seminorm", "z"],
        &["invert", "zbar", "--region", "disc:0,0,1"],
        &["fit", "/nonexistent.csv", "--order", "1"],
    ] {
        let (code, v) = json(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(v["error"].is_string());
    }
}

#[test]
fn spectrum_and_overflow_exit_codes() {
    let (code, v) = json(&[
        "resolvent",
        "z",
        "2",
        "--region",
        "disc:1,0,3.5",
        "--order",
        "1",
    ]);
    assert_eq!(code, 2, "lambda inside the spectrum: {v}");
    let (code, _) = json(&["eval", "1e200*1e200", "0"]);
    assert_eq!(code, 3);
}

#[test]
fn eval_at_point() {
    let (code, v) = json(&["eval", "z*zbar + 1", "3+4i"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["value"], serde_json::json!([26.0, 0.0]));
    let (_, v) = json(&["eval", "z*zbar + 1", "3+4i", "--order", "1"]);
    assert_eq!(v["result"]["value"], serde_json::json!([1.0, 0.0]));
}

#[test]
fn identical_runs_are_byte_identical() {
    for args in [
        &["seminorm", "zbar^2 + z", "--order", "2", "--grid", "40"][..],
        &["resolvent", "zbar + z/2", "3", "--region", "disc:0,0,1"],
        &[
            "spectrum",
            "z + zbar",
            "--grid",
            "12",
            "--region",
            "rect:0,0,1,1",
        ],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(a, b, "{args:?}");
    }
}

#[test]
fn resolvent_closed_form() {
    let (code, v) = json(&[
        "resolvent",
        "zbar",
        "2",
        "--order",
        "2",
        "--region",
        "disc:0,0,1",
    ]);
    assert_eq!(code, 0);
    let comps = v["result"]["inverse"]["components"].as_array().unwrap();
    assert_eq!(comps[0]["coeffs"][0][0], 0.5);
    assert_eq!(comps[1]["coeffs"][0][0], 0.25);
    assert!(v["diagnostics"]["residual"].as_f64().unwrap() <= 1e-12);
    assert_eq!(v["diagnostics"]["margin"], 2.0);
}

#[test]
fn invert_defaults_order_from_expression() {
    let (code, v) = json(&["invert", "1 - z*zbar", "--region", "disc:0,0,0.5"]);
    assert_eq!(code, 0);
    assert_eq!(v["inputs"]["q"], 2);
    assert!(v["diagnostics"]["residual"].as_f64().unwrap() <= 1e-10);
}

#[test]
fn spectrum_points_are_bounded() {
    let (code, v) = json(&[
        "spectrum",
        "z + zbar*z^2",
        "--region",
        "disc:0,0,1",
        "--grid",
        "10",
    ]);
    assert_eq!(code, 0);
    let bound = v["result"]["bound_radius"].as_f64().unwrap();
    assert!((bound - 1.0).abs() < 1e-9);
    for p in v["result"]["points"].as_array().unwrap() {
        let (x, y) = (p[0].as_f64().unwrap(), p[1].as_f64().unwrap());
        assert!(x.hypot(y) <= bound + 1e-9);
    }
}

#[test]
fn seminorm_of_ideal_element() {
    let (code, v) = json(&[
        "seminorm",
        "zbar^2",
        "--order",
        "2",
        "--region",
        "disc:0,0,1",
    ]);
    assert_eq!(code, 0);
    assert!(v["result"]["seminorm"].as_f64().unwrap() <= 1e-6);
    assert!((v["result"]["sup_norm"].as_f64().unwrap() - 1.0).abs() < 1e-9);
}

#[test]
fn fit_from_csv() {
    let dir = std::env::temp_dir().join(format!("polyq-fit-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("samples.csv");
    let mut file = std::fs::File::create(&path).unwrap();
    writeln!(file, "re_z,im_z,re_f,im_f").unwrap();
    // f = (1 + z) + z^2 zbar on a 7 x 7 grid.
    for i in 0..7 {
        for k in 0..7 {
            let (x, y) = (-1.0 + i as f64 / 3.0, -1.0 + k as f64 / 3.0);
            let z = polyq::Complex64::new(x, y);
            let f = 1.0 + z + z * z * z.conj();
            writeln!(file, "{x},{y},{},{}", f.re, f.im).unwrap();
        }
    }
    drop(file);
    let p = path.to_str().unwrap();
    let (code, v) = json(&["fit", p, "--order", "2", "--deg", "2"]);
    assert_eq!(code, 0, "{v}");
    assert!(v["diagnostics"]["residual"].as_f64().unwrap() <= 1e-9);
    let comps = v["result"]["element"]["components"].as_array().unwrap();
    let close = |val: &Value, want: f64| (val.as_f64().unwrap() - want).abs() < 1e-8;
    assert!(close(&comps[0]["coeffs"][0][0], 1.0) && close(&comps[0]["coeffs"][1][0], 1.0));
    assert!(close(&comps[1]["coeffs"][2][0], 1.0));

    let (code, _) = json(&["fit", p, "--order", "4", "--deg", "20"]);
    assert_eq!(code, 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn peel_recovers_top_component() {
    let (code, v) = json(&[
        "peel",
        "z*zbar",
        "--order",
        "2",
        "--deg",
        "2",
        "--region",
        "disc:0,0,1",
    ]);
    assert_eq!(code, 0);
    let a1 = &v["result"]["element"]["components"][1]["coeffs"];
    assert!((a1[1][0].as_f64().unwrap() - 1.0).abs() < 1e-5);
    let (code, _) = json(&["peel", "z", "--step", "0.5", "--region", "disc:0,0,1"]);
    assert_eq!(code, 2);
}

#[test]
fn verify_example_variants() {
    let (code, v) = json(&["verify-example"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["pass"], true);
    let (code, v) = json(&["verify-example", "--grid", "20"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["submultiplicative"], false);
    for (k, want) in [("norm_f", 1.0), ("norm_g", 0.75), ("norm_fg", 1.0)] {
        assert!((v["result"][k].as_f64().unwrap() - want).abs() <= 5e-2);
    }
    let (code, _) = json(&["verify-example", "--order", "1"]);
    assert_eq!(code, 2);
}

#[test]
fn csv_output() {
    let (code, text) = run(&["norm", "z*zbar", "--output", "csv"]);
    assert_eq!(code, 0);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("path,value"));
    assert!(text.contains("\nresult.norm,1.0\n"), "{text}");
    assert!(text.contains("\ninputs.region,\"disc:0.75,0,0.25\"\n"));
}
