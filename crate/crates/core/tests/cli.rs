use std::path::PathBuf;

use zariski_series::cli::run;
use zariski_series::io::{load_fan_file, load_surface_file, FanFile, SurfaceFile};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn ok(args: &[&str]) -> String {
    let mut full = vec!["zariski-series".to_string()];
    full.extend(args.iter().map(|s| s.to_string()));
    let (code, out) = run(full);
    assert_eq!(code, 0, "{args:?}: {out}");
    out
}

fn code(args: &[&str]) -> i32 {
    let mut full = vec!["zariski-series"];
    full.extend_from_slice(args);
    run(full).0
}

#[test]
fn zariski_decompose_golden() {
    let f2 = data("f2.json");
    assert_eq!(ok(&["zariski-decompose", "--surface", &f2, "--divisor", "2E+1f"]), "P = 1/2 E + 1 f ; N = 3/2 E");
    assert_eq!(ok(&["zariski-decompose", "--surface", &f2, "--divisor", "[2, 1]"]), "P = 1/2 E + 1 f ; N = 3/2 E");
    let f1 = data("f1.json");
    assert_eq!(ok(&["zariski-decompose", "--surface", &f1, "--divisor", "H + 2E"]), "P = 1 H ; N = 2 E");
    let h2 = data("hirzebruch2.json");
    assert_eq!(ok(&["zariski-decompose", "--fan", &h2, "--divisor", "2 D2 + D1"]), "P = 1/2 D4 ; N = -3 D3 + 3/2 D4");
}

#[test]
fn chambers_golden() {
    let f2 = data("f2.json");
    let out = ok(&["chambers", "--surface", &f2, "--cone", "E+3f", "--cone", "E+f"]);
    assert_eq!(out, "gamma = {} ; rays = <(1, 2), (1, 3)>\ngamma = {E} ; rays = <(1, 1), (1, 2)>");
    assert_eq!(ok(&["chambers", "--surface", &f2]), "gamma = {} ; rays = <(0, 1), (1, 2)>");
}

#[test]
fn euler_chow_golden() {
    let h2 = data("hirzebruch2.json");
    assert_eq!(ok(&["euler-chow", "--fan", &h2, "--codim", "1"]), "1 / (1 - t3)^2 * (1 - t4) * (1 - t3^-2*t4)");
    assert_eq!(ok(&["euler-chow", "--fan", &h2, "--dim", "0"]), "1 / (1 - t)^4");
    assert_eq!(ok(&["euler-chow", "--fan", &h2, "--dim", "2"]), "1 / (1 - t)");
    let p4 = data("p4.json");
    assert_eq!(ok(&["euler-chow", "--fan", &p4, "--dim", "2", "--rank-one"]), "1 / (1 - t)^10");
    assert_eq!(code(&["euler-chow", "--fan", &p4, "--dim", "2"]), 2);
    assert_eq!(code(&["euler-chow", "--fan", &p4, "--codim", "7"]), 1);
}

#[test]
fn expand_matches_cone_membership() {
    let out = ok(&["expand", "--series", &data("cone_12.json"), "--bound", "5"]);
    let mut expect = Vec::new();
    for deg in 0..=5i64 {
        for x in (0..=deg).rev() {
            let y = deg - x;
            // Lattice points of the cone spanned by (1, 0) and (1, 2).
            if y <= 2 * x {
                expect.push(format!("({x}, {y}) : 1"));
            }
        }
    }
    let mut got: Vec<&str> = out.lines().collect();
    got.sort_by_key(|l| {
        let inner = &l[1..l.find(')').unwrap()];
        let v: Vec<i64> = inner.split(", ").map(|x| x.parse().unwrap()).collect();
        (v[0] + v[1], -v[0])
    });
    assert_eq!(got, expect);
    assert_eq!(ok(&["expand", "--series", &data("p2_hyperplane.json"), "--bound", "3"]), "(0) : 1\n(1) : 3\n(2) : 6\n(3) : 10");
}

#[test]
fn toric_commands() {
    let p2 = data("p2.json");
    assert_eq!(ok(&["toric-h0", "--fan", &p2, "--divisor", "2 D3"]), "6");
    let h2 = data("hirzebruch2.json");
    assert_eq!(ok(&["toric-h0", "--fan", &h2, "--divisor", "[0, 1, 0, 0]", "--fixed-part"]), "1\nF = 1 D2");
    assert_eq!(ok(&["poincare", "--fan", &p2, "--divisor", "D3", "--effective"]), "1 / (1 - t)^3");
    assert_eq!(
        ok(&["multi-series", "--fan", &h2, "--divisor=-D4", "--big", "D2 + D1"]),
        "t^2 / (1 - t^2) * (1 - t)^2"
    );
}

#[test]
fn fit_and_poincare_from_values() {
    let vals = (0..40).map(|n: i64| ((n / 2 + 1) * (n / 2 + 2) / 2).to_string()).collect::<Vec<_>>().join(",");
    let fit = ok(&["fit-quasipoly", "--values", &vals]);
    assert!(fit.starts_with("period = 2 ; onset = 0\nn = 0 mod 2 : a = 1/8 ; b = 3/4 ; c = 1"), "{fit}");
    assert_eq!(ok(&["poincare", "--values", &vals, "--r-hint", "2"]), "(1 + t) / (1 - t^2)^3");
    assert_eq!(code(&["fit-quasipoly", "--values", "1,2,4,8,16,32,64"]), 2);
}

#[test]
fn exit_codes() {
    let f2 = data("f2.json");
    assert_eq!(code(&["zariski-decompose", "--surface", &f2, "--divisor=-f"]), 2);
    assert_eq!(code(&["zariski-decompose", "--surface", &f2, "--divisor", "2G"]), 2);
    assert_eq!(code(&["zariski-decompose", "--surface", "missing.json", "--divisor", "f"]), 1);
    assert_eq!(code(&["zariski-decompose", "--surface", &f2]), 1);
    assert_eq!(code(&["no-such-command"]), 1);
    assert_eq!(code(&["--help"]), 0);
}

#[test]
fn invalid_files_are_domain_errors() {
    let dir = std::env::temp_dir().join(format!("zs-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"{"basis": ["E", "f"], "form": [[-2, 1], [0, 0]], "curves": []}"#).unwrap();
    let (c, msg) = run(["zariski-series", "zariski-decompose", "--surface", bad.to_str().unwrap(), "--divisor", "E"]);
    assert_eq!(c, 2);
    assert!(msg.contains("form[0][1]"), "{msg}");
    std::fs::write(&bad, "{not json").unwrap();
    assert_eq!(run(["zariski-series", "toric-h0", "--fan", bad.to_str().unwrap(), "--divisor", "D1"]).0, 1);
}

#[test]
fn random_check_is_seeded() {
    let a = ok(&["random-check", "--seed", "11", "--catalogues", "5"]);
    assert_eq!(a, "seed 11: 5 catalogues, 20 divisors, all decompositions agree");
}

#[test]
fn fixtures_round_trip() {
    for name in ["f1.json", "f2.json", "p1p1.json"] {
        let file = load_surface_file(data(name).as_ref()).unwrap();
        let s = file.to_lattice().unwrap();
        assert_eq!(SurfaceFile::from_lattice(&s, file.nef_generators.clone()), file, "{name}");
    }
    for name in ["p1.json", "p2.json", "p3.json", "p4.json", "hirzebruch1.json", "hirzebruch2.json", "hirzebruch3.json", "p1xp1.json"] {
        let file = load_fan_file(data(name).as_ref()).unwrap();
        assert_eq!(FanFile::from_fan(&file.to_fan().unwrap()), file, "{name}");
    }
}

#[test]
fn fixtures_match_schema_keys() {
    let schema = |name: &str| -> serde_json::Value {
        serde_json::from_str(&std::fs::read_to_string(data(&format!("schema/{name}.schema.json"))).unwrap()).unwrap()
    };
    let check = |file: &str, s: &serde_json::Value| {
        let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(data(file)).unwrap()).unwrap();
        let obj = v.as_object().unwrap();
        for r in s["required"].as_array().unwrap() {
            assert!(obj.contains_key(r.as_str().unwrap()), "{file} lacks {r}");
        }
        for k in obj.keys() {
            assert!(s["properties"].get(k).is_some(), "{file}: {k} not in schema");
        }
    };
    let surface = schema("surface");
    let fan = schema("fan");
    let series = schema("series");
    for f in ["f1.json", "f2.json", "p1p1.json"] {
        check(f, &surface);
    }
    for f in ["p1.json", "p2.json", "p3.json", "p4.json", "hirzebruch1.json", "hirzebruch2.json", "hirzebruch3.json", "p1xp1.json"] {
        check(f, &fan);
    }
    for f in ["cone_12.json", "p2_hyperplane.json"] {
        check(f, &series["oneOf"][1]);
    }
}
