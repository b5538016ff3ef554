//! End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
//! the test fails if any criterion fails.
//!
//! Run with `cargo test -p anyon-deg --test acceptance -- --nocapture`.

use std::process::{Command, Output};
use std::time::Instant;

use anyon_deg_core::lattice::Lattice;
use anyon_deg_core::pathcount::degeneracy;
use anyon_deg_core::syt::{brute_force_count, hook_count, unrestricted_count, Shape3};
use anyon_deg_core::{BigUint, IntPoly};
use serde_json::Value;

const TABLE_I: [[u64; 10]; 8] = [
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [1, 1, 5, 21, 89, 377, 1597, 6765, 28657, 121393],
    [1, 1, 5, 42, 341, 2731, 21846, 174763, 1398101, 11184810],
    [1, 1, 5, 42, 462, 5278, 60181, 683962, 7763097, 88079511],
    [1, 1, 5, 42, 462, 6006, 83028, 1166677, 16440171, 231612211],
    [1, 1, 5, 42, 462, 6006, 87516, 1357569, 21669957, 349920000],
    [1, 1, 5, 42, 462, 6006, 87516, 1385670, 23193775, 401389561],
    [1, 1, 5, 42, 462, 6006, 87516, 1385670, 23371634, 413180625],
];

const TABLE_II: [&str; 8] = [
    "1 - 1*t^3",
    "1 - 4*t^3 - 1*t^6",
    "1 - 9*t^3 + 9*t^6 - 8*t^9",
    "1 - 16*t^3 + 59*t^6 - 67*t^9 - 37*t^12 + 8*t^15",
    "1 - 25*t^3 + 191*t^6 - 559*t^9 + 531*t^12 - 507*t^15 + 341*t^18 + 27*t^21",
    "1 - 36*t^3 + 459*t^6 - 2655*t^9 + 7290*t^12 - 9801*t^15 + 3429*t^18 + 6075*t^21 - 1458*t^24 + 729*t^27",
    "1 - 49*t^3 + 929*t^6 - 8865*t^9 + 46315*t^12 - 136058*t^15 + 219202*t^18 - 198802*t^21 + 189535*t^24 - 152085*t^27 + 62341*t^30 + 20851*t^33 - 1331*t^36",
    "1 - 64*t^3 + 1679*t^6 - 23699*t^9 + 198636*t^12 - 1031272*t^15 + 3360456*t^18 - 6855112*t^21 + 8542281*t^24 - 5062167*t^27 - 1959023*t^30 + 4912958*t^33 - 1335971*t^36 + 1092507*t^39 - 375746*t^42 - 12167*t^45",
];

/// `(k, vertex, text output of genfunc)`.
const GENERATING_FUNCTIONS: [(u32, &str, &str); 11] = [
    (1, "0,0", "(1) / (1 - 1*t^3)"),
    (1, "0,1", "(1*t) / (1 - 1*t^3)"),
    (1, "1,0", "(1*t^2) / (1 - 1*t^3)"),
    (2, "0,0", "(1 - 3*t^3) / (1 - 4*t^3 - 1*t^6)"),
    (2, "0,1", "(1*t - 1*t^4) / (1 - 4*t^3 - 1*t^6)"),
    (2, "0,2", "(1*t^2 - 1*t^5) / (1 - 4*t^3 - 1*t^6)"),
    // matches the inverse-matrix entry t*z, not the displayed t(1 + t^3)
    (2, "1,0", "(1*t^2 + 1*t^5) / (1 - 4*t^3 - 1*t^6)"),
    (2, "1,1", "(2*t^3) / (1 - 4*t^3 - 1*t^6)"),
    (2, "2,0", "(2*t^4) / (1 - 4*t^3 - 1*t^6)"),
    (3, "0,0", "(1 - 8*t^3 + 5*t^6 - 2*t^9) / (1 - 9*t^3 + 9*t^6 - 8*t^9)"),
    (
        4,
        "0,0",
        "(1 - 15*t^3 + 48*t^6 - 46*t^9 - 19*t^12) / (1 - 16*t^3 + 59*t^6 - 67*t^9 - 37*t^12 + 8*t^15)",
    ),
];

type Criterion = fn() -> Result<(), String>;

const DET_DEGREES: [u64; 8] = [3, 6, 9, 15, 21, 27, 36, 45];

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_anyon-deg"))
        .args(args)
        .output()
        .expect("failed to launch binary")
}

fn stdout_of(args: &[&str]) -> Result<String, String> {
    let out = bin(args);
    if !out.status.success() {
        return Err(format!(
            "{args:?} exited {:?}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    Ok(String::from_utf8(out.stdout).unwrap())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Result<(), String> {
    let mut expect = String::from("k\\n");
    for n in (0..=27).step_by(3) {
        expect.push_str(&format!(",{n}"));
    }
    expect.push('\n');
    for (k, row) in TABLE_I.iter().enumerate() {
        expect.push_str(&(k + 1).to_string());
        for v in row {
            expect.push_str(&format!(",{v}"));
        }
        expect.push('\n');
    }
    let start = Instant::now();
    let got = stdout_of(&["table", "--max-k", "8", "--max-n", "27"])?;
    let elapsed = start.elapsed();
    ensure(got == expect, || format!("csv differs:\n{got}"))?;
    let json: Value = serde_json::from_str(&stdout_of(&[
        "table", "--max-k", "8", "--max-n", "27", "--format", "json",
    ])?)
    .unwrap();
    for (k, row) in TABLE_I.iter().enumerate() {
        for (c, v) in row.iter().enumerate() {
            let cell = &json["rows"][k]["counts"][c];
            ensure(cell == &Value::String(v.to_string()), || {
                format!("json k={} col={c}: {cell}", k + 1)
            })?;
        }
    }
    ensure(elapsed.as_secs_f64() < 1.0, || format!("took {elapsed:?}"))
}

fn criterion_2() -> Result<(), String> {
    let start = Instant::now();
    for (k, expect) in (1..=8).zip(TABLE_II) {
        let got = stdout_of(&["det", "--k", &k.to_string()])?;
        ensure(got.trim_end() == expect, || format!("k={k}: {got}"))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed.as_secs() < 60, || format!("took {elapsed:?}"))
}

fn criterion_3() -> Result<(), String> {
    for (k, v, expect) in GENERATING_FUNCTIONS {
        let got = stdout_of(&["genfunc", "--k", &k.to_string(), "--vertex", v])?;
        ensure(got.trim_end() == expect, || format!("k={k} v={v}: {got}"))?;
    }
    // lowest terms: gcd(num, den) is a unit
    for k in 1..=4u32 {
        let json: Value = serde_json::from_str(&stdout_of(&[
            "genfunc", "--k", &k.to_string(), "--format", "json",
        ])?)
        .unwrap();
        for f in json["functions"].as_array().unwrap() {
            let poly = |key: &str| -> IntPoly {
                let c: Vec<i64> = f[key]["coeffs"]
                    .as_array()
                    .unwrap()
                    .iter()
                    .map(|c| c.as_str().unwrap().parse::<i64>().unwrap())
                    .collect();
                IntPoly::from_i64s(&c)
            };
            let g = anyon_deg_core::poly_gcd(&poly("num"), &poly("den")).unwrap();
            ensure(g.is_one(), || format!("k={k} {}: common factor {g}", f["vertex"]))?;
        }
    }
    Ok(())
}

fn criterion_4() -> Result<(), String> {
    let start = Instant::now();
    for k in 1..=6 {
        stdout_of(&["verify", "--k", &k.to_string(), "--n", "24"])?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed.as_secs() < 30, || format!("took {elapsed:?}"))
}

fn count(k: u32, n: u32) -> Result<String, String> {
    Ok(stdout_of(&["count", "--k", &k.to_string(), "--n", &n.to_string()])?
        .trim_end()
        .to_string())
}

fn criterion_5() -> Result<(), String> {
    let mut fib = vec![0u64, 1];
    while fib.len() < 27 {
        fib.push(fib[fib.len() - 1] + fib[fib.len() - 2]);
    }
    for m in 1..=9u32 {
        let n = 3 * m;
        let got = count(2, n)?;
        let expect = fib[n as usize - 1];
        ensure(got == expect.to_string(), || format!("m={m}: {got} vs {expect}"))?;
        ensure(TABLE_I[1][m as usize] == expect, || format!("table entry m={m}"))?;
    }
    Ok(())
}

fn criterion_6() -> Result<(), String> {
    let fact = |n: u32| (1..=n).fold(BigUint::from(1u32), |acc, x| acc * x);
    for n in (0..=27u32).step_by(3) {
        let m = n / 3;
        let expect = BigUint::from(2u32) * fact(n) / (fact(m) * fact(m + 1) * fact(m + 2));
        for k in [n.max(1), n + 1, n + 2] {
            let got = count(k, n)?;
            ensure(got == expect.to_string(), || format!("n={n} k={k}: {got} vs {expect}"))?;
        }
    }
    Ok(())
}

fn criterion_7() -> Result<(), String> {
    let start = Instant::now();
    for n in 0..=12u32 {
        for shape in Shape3::all_with_boxes(n) {
            let brute = brute_force_count(&shape).map_err(|e| e.to_string())?;
            ensure(hook_count(&shape) == brute, || format!("{:?}", shape.rows()))?;
        }
        let k = n.max(1);
        for &v in Lattice::new(k).unwrap().vertices() {
            let dp = degeneracy(k, n, v).map_err(|e| e.to_string())?;
            ensure(unrestricted_count(n, v) == dp, || format!("n={n} v={v}"))?;
        }
    }
    let got = stdout_of(&["syt", "--shape", "4,4,4", "--oracle"])?;
    ensure(got.trim_end() == "hook=462 brute=462", || got.clone())?;
    let elapsed = start.elapsed();
    ensure(elapsed.as_secs() < 60, || format!("took {elapsed:?}"))
}

fn criterion_8() -> Result<(), String> {
    let start = Instant::now();
    for k in 1..=8u32 {
        let json: Value = serde_json::from_str(&stdout_of(&["qdim", "--k", &k.to_string()])?).unwrap();
        let trig = json["lambda_trig"].as_f64().unwrap();
        let perron = json["lambda_perron"].as_f64().unwrap();
        let root = 1.0 / json["rho_root"].as_f64().unwrap();
        ensure((trig - perron).abs() < 1e-6 && (trig - root).abs() < 1e-6, || {
            format!("k={k}: {json}")
        })?;
        let expect = (std::f64::consts::PI * 3.0 / f64::from(3 + k)).sin()
            / (std::f64::consts::PI / f64::from(3 + k)).sin();
        ensure((trig - expect).abs() < 1e-12, || format!("k={k} trig {trig}"))?;
    }
    // exact: det F_1 vanishes at 1 and det F_3 at 1/2
    let coeffs = |k: u32| -> Result<Vec<i64>, String> {
        let json: Value =
            serde_json::from_str(&stdout_of(&["det", "--k", &k.to_string(), "--format", "json"])?).unwrap();
        Ok(json["coeffs"]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| c.as_str().unwrap().parse().unwrap())
            .collect())
    };
    let at_one: i64 = coeffs(1)?.iter().sum();
    ensure(at_one == 0, || format!("det F_1(1) = {at_one}"))?;
    let c3 = coeffs(3)?;
    let deg = c3.len() as u32 - 1;
    // 2^deg * det(1/2) as an integer
    let scaled: i64 = c3.iter().zip(0..).map(|(c, e)| c << (deg - e)).sum();
    ensure(scaled == 0, || format!("2^{deg} det F_3(1/2) = {scaled}"))?;
    let elapsed = start.elapsed();
    ensure(elapsed.as_secs() < 10, || format!("took {elapsed:?}"))
}

fn criterion_9() -> Result<(), String> {
    for (k, expect_deg) in (1..=8u32).zip(DET_DEGREES) {
        let m = u64::from(k) / 3;
        let formula = match k % 3 {
            2 => 3 * (m + 1) * (3 * m + 4) / 2,
            0 => 9 * m * (m + 1) / 2,
            _ => 3 * (m + 1) * (3 * m + 2) / 2,
        };
        ensure(formula == expect_deg, || format!("k={k}: d_k {formula} vs table {expect_deg}"))?;
        let json: Value =
            serde_json::from_str(&stdout_of(&["det", "--k", &k.to_string(), "--format", "json"])?).unwrap();
        let coeffs: Vec<&str> = json["coeffs"].as_array().unwrap().iter().map(|c| c.as_str().unwrap()).collect();
        ensure(coeffs.len() as u64 - 1 == expect_deg, || format!("k={k}: degree {}", coeffs.len() - 1))?;
        ensure(coeffs[0] == "1", || format!("k={k}: constant {}", coeffs[0]))?;
        ensure(coeffs[3] == format!("-{}", k * k), || format!("k={k}: cubic {}", coeffs[3]))?;
        for (e, c) in coeffs.iter().enumerate() {
            ensure(e % 3 == 0 || *c == "0", || format!("k={k}: t^{e} has {c}"))?;
        }
    }
    Ok(())
}

fn criterion_10() -> Result<(), String> {
    let start = Instant::now();
    let n = 600u32;
    for k in 2..=5u32 {
        let digits = count(k, n)?;
        let lead: f64 = digits[..17.min(digits.len())].parse().unwrap();
        let ln = lead.ln() + (digits.len().saturating_sub(17)) as f64 * std::f64::consts::LN_10;
        let rate = (ln / f64::from(n)).exp();
        let lambda = (std::f64::consts::PI * 3.0 / f64::from(3 + k)).sin()
            / (std::f64::consts::PI / f64::from(3 + k)).sin();
        let rel = (rate - lambda).abs() / lambda;
        ensure(rel < 0.02, || format!("k={k}: rate {rate} lambda {lambda}"))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed.as_secs() < 30, || format!("took {elapsed:?}"))
}

fn criterion_11() -> Result<(), String> {
    let json: Value = serde_json::from_str(&stdout_of(&[
        "syt", "--n", "27", "--paper-formula", "--format", "json",
    ])?)
    .unwrap();
    let entries = json["entries"].as_array().unwrap();
    let origin: Vec<&Value> = entries.iter().filter(|e| e["vertex"] == serde_json::json!([0, 0])).collect();
    ensure(origin.len() == 10, || format!("{} origin entries", origin.len()))?;
    ensure(origin.iter().all(|e| e["agrees"] == Value::Bool(true)), || "origin disagreement".into())?;
    ensure(json["summary"]["origin_all_agree"] == Value::Bool(true), || "summary flag".into())?;
    let bad = entries
        .iter()
        .find(|e| e["shape"] == serde_json::json!([1, 1, 0]))
        .ok_or("shape (1,1,0) not audited")?;
    ensure(bad["agrees"] == Value::Bool(false) && bad["hook"] == "1", || format!("{bad}"))?;
    ensure(json["summary"]["disagreements"].as_u64().unwrap_or(0) >= 1, || "no disagreement".into())
}

#[test]
fn acceptance() {
    let criteria: [(&str, Criterion); 11] = [
        ("1 table of origin counts", criterion_1),
        ("2 determinants", criterion_2),
        ("3 generating functions", criterion_3),
        ("4 series equals walk counts", criterion_4),
        ("5 Fibonacci at k=2", criterion_5),
        ("6 Catalan diagonal", criterion_6),
        ("7 hook-length oracle", criterion_7),
        ("8 quantum dimension", criterion_8),
        ("9 determinant laws", criterion_9),
        ("10 growth rate", criterion_10),
        ("11 printed-formula audit", criterion_11),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        match check() {
            Ok(()) => println!("PASS {name} ({:.2?})", start.elapsed()),
            Err(e) => {
                failed += 1;
                println!("FAIL {name}: {e}");
            }
        }
    }
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}
