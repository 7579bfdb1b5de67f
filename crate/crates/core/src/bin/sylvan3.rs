//! Command-line front end: Betti tables, Koszul complexes, lattice paths,
//! hedges, differential blocks, full resolutions, verification, and
//! cross-validation of the two evaluation routes.

use std::collections::BTreeMap;
use std::process::ExitCode;

use serde_json::{json, Value};

use sylvan3::closed;
use sylvan3::complex::Face;
use sylvan3::corpus::generate_corpus;
use sylvan3::fence::{self, Oracle};
use sylvan3::hedge;
use sylvan3::ideal::{DegreeVector, MonomialIdeal};
use sylvan3::koszul::{classify_shape, koszul_complex, reduced_homology_dims};
use sylvan3::lattice::{enumerate_paths, profile, validate_taxonomy};
use sylvan3::par::par_map;
use sylvan3::resolution::{betti_support, build_resolution, Method, SylvanResolution};
use sylvan3::sylvan::{display_label, SylvanMatrix};

const SCHEMA: &str = "sylvan3/1";

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match run(&args) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("{USAGE}");
            ExitCode::from(2)
        }
    }
}

const USAGE: &str = "\
usage: sylvan3 <command> [flags]

commands:
  betti       --gens \"...\" | --ideal FILE                  list free-summand degrees and ranks
  koszul      --degree B                                     face list, shape, homology of one Koszul complex
  paths       --from B --to A [--profile]                    lattice paths (and shape profiles)
  hedges      --degree B --dim I                             shrubberies, stake sets, delta counts
  matrix      --from B --to A --hom I [--method M]           one differential block (M: oracle|closed|both)
  resolve     [--method M] [--format json|text|macaulay2]    assemble the full resolution
  verify      [--method M]                                   check complex/exactness/minimality
  crosscheck  [ideal flags | --seed N --count N --max-exponent N]
                                                             compare oracle and closed blocks everywhere
  corpus      --seed N --count N --max-exponent N            print reproducible random ideals

common flags:
  --gens \"xy, y^3, z\"      inline generator list
  --ideal FILE               generators from a file (one per line, # comments)
  --format json|text         output format (default json)
  degrees are written as digits (\"131\") or comma-separated (\"1,3,1\")

environment: SYLVAN3_THREADS caps worker threads.

exit codes: 0 ok, 1 verification failure, 2 usage error.";

struct UsageError(String);

fn usage(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

struct Flags {
    map: BTreeMap<String, String>,
    bools: Vec<String>,
}

impl Flags {
    fn parse(args: &[String]) -> Result<Flags, UsageError> {
        let mut map = BTreeMap::new();
        let mut bools = Vec::new();
        let mut it = args.iter().peekable();
        while let Some(a) = it.next() {
            let Some(name) = a.strip_prefix("--") else {
                return Err(usage(format!("unexpected argument {a:?}")));
            };
            if matches!(name, "profile") {
                bools.push(name.to_string());
                continue;
            }
            let Some(v) = it.next() else {
                return Err(usage(format!("flag --{name} needs a value")));
            };
            map.insert(name.to_string(), v.clone());
        }
        Ok(Flags { map, bools })
    }

    fn get(&self, name: &str) -> Option<&str> {
        self.map.get(name).map(String::as_str)
    }

    fn has(&self, name: &str) -> bool {
        self.bools.iter().any(|b| b == name)
    }

    fn degree(&self, name: &str) -> Result<DegreeVector, UsageError> {
        let v = self
            .get(name)
            .ok_or_else(|| usage(format!("missing --{name}")))?;
        DegreeVector::parse(v).map_err(|e| usage(e.to_string()))
    }

    fn ideal(&self) -> Result<MonomialIdeal, UsageError> {
        if let Some(gens) = self.get("gens") {
            return MonomialIdeal::parse(gens).map_err(|e| usage(e.to_string()));
        }
        if let Some(path) = self.get("ideal") {
            let text = std::fs::read_to_string(path)
                .map_err(|e| usage(format!("cannot read {path}: {e}")))?;
            return MonomialIdeal::parse(&text).map_err(|e| usage(e.to_string()));
        }
        Err(usage("missing --gens or --ideal"))
    }

    fn method(&self) -> Result<Method, UsageError> {
        match self.get("method") {
            None => Ok(Method::Both),
            Some(m) => Method::parse(m).ok_or_else(|| usage(format!("unknown method {m:?}"))),
        }
    }

    fn format(&self) -> &str {
        self.get("format").unwrap_or("json")
    }

    fn number(&self, name: &str, default: u64) -> Result<u64, UsageError> {
        match self.get(name) {
            None => Ok(default),
            Some(v) => v
                .parse()
                .map_err(|_| usage(format!("bad number for --{name}: {v:?}"))),
        }
    }
}

fn run(args: &[String]) -> Result<ExitCode, UsageError> {
    let Some(command) = args.first() else {
        return Err(usage("missing command"));
    };
    let flags = Flags::parse(&args[1..])?;
    match command.as_str() {
        "betti" => cmd_betti(&flags),
        "koszul" => cmd_koszul(&flags),
        "paths" => cmd_paths(&flags),
        "hedges" => cmd_hedges(&flags),
        "matrix" => cmd_matrix(&flags),
        "resolve" => cmd_resolve(&flags),
        "verify" => cmd_verify(&flags),
        "crosscheck" => cmd_crosscheck(&flags),
        "corpus" => cmd_corpus(&flags),
        other => Err(usage(format!("unknown command {other:?}"))),
    }
}

fn degree_json(d: &DegreeVector) -> Value {
    json!([d.0[0], d.0[1], d.0[2]])
}

fn matrix_json(m: &SylvanMatrix) -> Value {
    m.to_json()
}

fn emit(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn cmd_betti(flags: &Flags) -> Result<ExitCode, UsageError> {
    let ideal = flags.ideal()?;
    let support = betti_support(&ideal);
    if flags.format() == "text" {
        println!("ideal <{}>", ideal.render());
        for (i, level) in support.iter().enumerate() {
            let parts: Vec<String> = level
                .iter()
                .map(|(d, r)| format!("{} (rank {r})", d.compact()))
                .collect();
            println!(
                "F{i}: {}",
                if parts.is_empty() {
                    "0".into()
                } else {
                    parts.join(", ")
                }
            );
        }
        return Ok(ExitCode::SUCCESS);
    }
    let summands: Vec<Value> = support
        .iter()
        .enumerate()
        .flat_map(|(i, level)| {
            level
                .iter()
                .map(move |(d, r)| {
                    json!({"hom": i, "degree": degree_json(d), "degree_str": d.compact(), "rank": r})
                })
                .collect::<Vec<_>>()
        })
        .collect();
    emit(&json!({
        "schema": SCHEMA,
        "command": "betti",
        "ideal": ideal.render(),
        "summands": summands,
    }));
    Ok(ExitCode::SUCCESS)
}

fn cmd_koszul(flags: &Flags) -> Result<ExitCode, UsageError> {
    let ideal = flags.ideal()?;
    let b = flags.degree("degree")?;
    let k = koszul_complex(&ideal, &b);
    let mut faces: Vec<Face> = k.faces().copied().collect();
    faces.sort_by_key(|f| (f.dim(), f.vertices()));
    let labels: Vec<&str> = faces.iter().map(|f| display_label(*f)).collect();
    let shape = classify_shape(&k);
    let (h_neg1, h0, h1) = reduced_homology_dims(&k);
    if flags.format() == "text" {
        println!("K^{} of <{}>", b.compact(), ideal.render());
        println!("faces: {}", labels.join(" "));
        println!("shape: {shape}");
        println!("reduced homology dims: H-1={h_neg1} H0={h0} H1={h1}");
        return Ok(ExitCode::SUCCESS);
    }
    emit(&json!({
        "schema": SCHEMA,
        "command": "koszul",
        "ideal": ideal.render(),
        "degree": degree_json(&b),
        "faces": labels,
        "shape": shape.label(),
        "homology": {"h_minus1": h_neg1, "h0": h0, "h1": h1},
    }));
    Ok(ExitCode::SUCCESS)
}

fn cmd_paths(flags: &Flags) -> Result<ExitCode, UsageError> {
    let ideal = flags.ideal()?;
    let b = flags.degree("from")?;
    let a = flags.degree("to")?;
    let paths = enumerate_paths(&a, &b).map_err(|e| usage(e.to_string()))?;
    let with_profile = flags.has("profile");
    let mut out = Vec::new();
    for p in &paths {
        let mut entry = json!({
            "points": p.points().iter().map(degree_json).collect::<Vec<_>>(),
            "steps": p.step_dirs().iter().map(|&d| ["x","y","z"][d]).collect::<Vec<_>>().join(""),
        });
        if with_profile {
            let prof = profile(&ideal, p);
            let taxonomy = validate_taxonomy(&ideal, p).ok();
            entry["profile"] = json!({
                "shapes": prof.shapes.iter().map(|s| s.label()).collect::<Vec<_>>(),
                "r": prof.r,
                "s": prof.s,
                "m": prof.m,
                "b_lambda": degree_json(&prof.b_lambda),
                "taxonomy_valid": taxonomy,
            });
        }
        out.push(entry);
    }
    if flags.format() == "text" {
        for (p, v) in paths.iter().zip(&out) {
            println!(
                "{p:?} {}",
                v.get("profile").map(|p| p.to_string()).unwrap_or_default()
            );
        }
        return Ok(ExitCode::SUCCESS);
    }
    emit(&json!({
        "schema": SCHEMA,
        "command": "paths",
        "ideal": ideal.render(),
        "from": degree_json(&b),
        "to": degree_json(&a),
        "count": paths.len(),
        "paths": out,
    }));
    Ok(ExitCode::SUCCESS)
}

fn cmd_hedges(flags: &Flags) -> Result<ExitCode, UsageError> {
    let ideal = flags.ideal()?;
    let b = flags.degree("degree")?;
    let dim: i64 = flags
        .get("dim")
        .ok_or_else(|| usage("missing --dim"))?
        .parse()
        .map_err(|_| usage("bad --dim"))?;
    let i = dim as i32;
    let k = koszul_complex(&ideal, &b);
    let shrubberies: Vec<Vec<&str>> = hedge::enumerate_shrubberies(&k, i)
        .iter()
        .map(|t| t.faces.iter().map(|f| display_label(*f)).collect())
        .collect();
    let stakes: Vec<Vec<&str>> = hedge::enumerate_stake_sets(&k, i - 1)
        .iter()
        .map(|s| s.faces.iter().map(|f| display_label(*f)).collect())
        .collect();
    let (dt, ds, dst) = (
        hedge::delta_t(&k, i),
        hedge::delta_s(&k, i - 1),
        hedge::delta_st(&k, i),
    );
    if flags.format() == "text" {
        println!("K^{} shrubberies (dim {i}): {shrubberies:?}", b.compact());
        println!("stake sets (dim {}): {stakes:?}", i - 1);
        println!("delta_t={dt} delta_s={ds} delta_st={dst}");
        return Ok(ExitCode::SUCCESS);
    }
    emit(&json!({
        "schema": SCHEMA,
        "command": "hedges",
        "ideal": ideal.render(),
        "degree": degree_json(&b),
        "dim": i,
        "shrubberies": shrubberies,
        "stake_sets": stakes,
        "delta_t": dt.to_string(),
        "delta_s": ds.to_string(),
        "delta_st": dst.to_string(),
    }));
    Ok(ExitCode::SUCCESS)
}

fn cmd_matrix(flags: &Flags) -> Result<ExitCode, UsageError> {
    let ideal = flags.ideal()?;
    let b = flags.degree("from")?;
    let a = flags.degree("to")?;
    let hom: u8 = flags
        .get("hom")
        .ok_or_else(|| usage("missing --hom"))?
        .parse()
        .map_err(|_| usage("bad --hom"))?;
    if hom > 1 {
        return Err(usage("--hom must be 0 or 1"));
    }
    let method = flags.method()?;
    let oracle_m = match method {
        Method::Oracle | Method::Both => Some(fence::matrix(&ideal, &a, &b, hom)),
        Method::Closed => None,
    };
    let closed_m = match method {
        Method::Closed | Method::Both => {
            Some(closed::matrix(&ideal, &a, &b, hom).map_err(|e| usage(e.to_string()))?)
        }
        Method::Oracle => None,
    };
    let equal = match (&oracle_m, &closed_m) {
        (Some(o), Some(c)) => Some(o == c),
        _ => None,
    };
    if flags.format() == "text" {
        if let Some(m) = &oracle_m {
            println!("oracle:\n{m:?}");
        }
        if let Some(m) = &closed_m {
            println!("closed:\n{m:?}");
        }
        if let Some(eq) = equal {
            println!("equal: {eq}");
        }
    } else {
        let mut v = json!({
            "schema": SCHEMA,
            "command": "matrix",
            "ideal": ideal.render(),
            "from": degree_json(&b),
            "to": degree_json(&a),
            "hom": hom,
        });
        if let Some(m) = &oracle_m {
            v["oracle"] = matrix_json(m);
        }
        if let Some(m) = &closed_m {
            v["closed"] = matrix_json(m);
        }
        if let Some(eq) = equal {
            v["equal"] = json!(eq);
        }
        emit(&v);
    }
    if equal == Some(false) {
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn resolution_json(res: &SylvanResolution, ideal: &MonomialIdeal) -> Value {
    let summands: Vec<Value> = (0..3)
        .flat_map(|i| {
            res.summands[i]
                .iter()
                .map(move |s| {
                    json!({
                        "hom": i,
                        "degree": degree_json(&s.degree),
                        "degree_str": s.degree.compact(),
                        "rank": s.rank(),
                    })
                })
                .collect::<Vec<_>>()
        })
        .collect();
    let maps: Vec<Value> = (0..2)
        .flat_map(|i| {
            res.maps[i]
                .iter()
                .map(move |b| {
                    let tgt = &res.summands[i][b.target];
                    let src = &res.summands[i + 1][b.source];
                    let monomial = src.degree.checked_sub(&tgt.degree).unwrap().monomial();
                    json!({
                        "hom": i,
                        "target": degree_json(&tgt.degree),
                        "source": degree_json(&src.degree),
                        "monomial": monomial,
                        "chain": matrix_json(&b.chain_matrix),
                        "induced": (0..b.induced.nrows()).map(|r| {
                            (0..b.induced.ncols()).map(|c| b.induced.get(r, c).to_string()).collect::<Vec<_>>()
                        }).collect::<Vec<_>>(),
                    })
                })
                .collect::<Vec<_>>()
        })
        .collect();
    json!({
        "ideal": ideal.render(),
        "summands": summands,
        "maps": maps,
    })
}

/// Script for an external computer algebra check: defines the multigraded
/// ring, the two differentials (with monomial entries), and asserts that
/// they compose to zero and resolve the ideal.
fn resolution_macaulay2(res: &SylvanResolution, ideal: &MonomialIdeal) -> String {
    let mut out = String::new();
    out.push_str("R = QQ[x,y,z, Degrees => {{1,0,0},{0,1,0},{0,0,1}}];\n");
    out.push_str(&format!(
        "I = ideal({});\n",
        ideal
            .gens()
            .iter()
            .map(|g| g.monomial())
            .collect::<Vec<_>>()
            .join(", ")
    ));
    let module = |summands: &[sylvan3::resolution::FreeSummand]| -> String {
        let degs: Vec<String> = summands
            .iter()
            .flat_map(|s| {
                std::iter::repeat_n(
                    format!("-{{{},{},{}}}", s.degree.0[0], s.degree.0[1], s.degree.0[2]),
                    s.rank(),
                )
            })
            .collect();
        if degs.is_empty() {
            "R^0".to_string()
        } else {
            format!("R^{{{}}}", degs.join(","))
        }
    };
    for i in 0..2 {
        let rows: usize = res.rank(i);
        let cols: usize = res.rank(i + 1);
        let mut grid = vec![vec!["0".to_string(); cols]; rows];
        let row_offset: Vec<usize> = res.summands[i]
            .iter()
            .scan(0, |acc, s| {
                let o = *acc;
                *acc += s.rank();
                Some(o)
            })
            .collect();
        let col_offset: Vec<usize> = res.summands[i + 1]
            .iter()
            .scan(0, |acc, s| {
                let o = *acc;
                *acc += s.rank();
                Some(o)
            })
            .collect();
        for b in &res.maps[i] {
            let tgt = &res.summands[i][b.target];
            let src = &res.summands[i + 1][b.source];
            let mono = src.degree.checked_sub(&tgt.degree).unwrap().monomial();
            for r in 0..b.induced.nrows() {
                for c in 0..b.induced.ncols() {
                    let coeff = b.induced.get(r, c);
                    if coeff.is_zero() {
                        continue;
                    }
                    grid[row_offset[b.target] + r][col_offset[b.source] + c] = if mono == "1" {
                        format!("({coeff})")
                    } else {
                        format!("({coeff})*{mono}")
                    };
                }
            }
        }
        let body: Vec<String> = grid
            .iter()
            .map(|row| format!("{{{}}}", row.join(", ")))
            .collect();
        out.push_str(&format!(
            "d{} = map({}, {}, {{{}}});\n",
            i + 1,
            module(&res.summands[i]),
            module(&res.summands[i + 1]),
            body.join(",\n  ")
        ));
    }
    out.push_str("assert(d1 * d2 == 0);\n");
    out.push_str("-- the image of d1 is the syzygy module of the generators:\n");
    out.push_str(
        "assert(image d1 == kernel map(R^1, source d1, \
         matrix{apply(degrees source d1, d -> x^(d#0)*y^(d#1)*z^(d#2))}));\n",
    );
    out
}

fn cmd_resolve(flags: &Flags) -> Result<ExitCode, UsageError> {
    let ideal = flags.ideal()?;
    let method = flags.method()?;
    let res = build_resolution(&ideal, method).map_err(|e| usage(e.to_string()))?;
    match flags.format() {
        "macaulay2" => print!("{}", resolution_macaulay2(&res, &ideal)),
        "text" => {
            for i in 0..3 {
                let parts: Vec<String> = res.summands[i]
                    .iter()
                    .map(|s| format!("{} (rank {})", s.degree.compact(), s.rank()))
                    .collect();
                println!(
                    "F{i}: {}",
                    if parts.is_empty() {
                        "0".into()
                    } else {
                        parts.join(", ")
                    }
                );
            }
            for i in 0..2 {
                for b in &res.maps[i] {
                    let tgt = &res.summands[i][b.target];
                    let src = &res.summands[i + 1][b.source];
                    println!(
                        "block F{} {} <- F{} {}:\n{:?}",
                        i,
                        tgt.degree.compact(),
                        i + 1,
                        src.degree.compact(),
                        b.chain_matrix
                    );
                }
            }
        }
        _ => {
            let mut v = resolution_json(&res, &ideal);
            v["schema"] = json!(SCHEMA);
            v["command"] = json!("resolve");
            v["method"] = json!(format!("{method:?}").to_lowercase());
            emit(&v);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(flags: &Flags) -> Result<ExitCode, UsageError> {
    let ideal = flags.ideal()?;
    let method = flags.method()?;
    let res = build_resolution(&ideal, method).map_err(|e| usage(e.to_string()))?;
    let report = res.verify_exact_and_minimal(&ideal);
    let unimodular = sylvan3::resolution::degree_box(&ideal)
        .iter()
        .all(|d| hedge::verify_unimodular(&koszul_complex(&ideal, d)));
    let ok = report.ok() && unimodular;
    if flags.format() == "text" {
        println!("complex: {}", if report.complex_ok { "ok" } else { "FAIL" });
        println!(
            "exactness: {}",
            if report.failing_degrees.is_empty() {
                "ok".into()
            } else {
                format!("FAIL {:?}", report.failing_degrees)
            }
        );
        println!(
            "betti ranks: {}",
            if report.betti_ok { "ok" } else { "FAIL" }
        );
        println!("unimodular: {}", if unimodular { "ok" } else { "FAIL" });
    } else {
        emit(&json!({
            "schema": SCHEMA,
            "command": "verify",
            "ideal": ideal.render(),
            "complex_ok": report.complex_ok,
            "exactness_ok": report.failing_degrees.is_empty(),
            "failing_degrees": report.failing_degrees.iter().map(|(d, m)| json!({
                "degree": degree_json(d), "reason": m,
            })).collect::<Vec<_>>(),
            "betti_ok": report.betti_ok,
            "unimodular_ok": unimodular,
            "ok": ok,
        }));
    }
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

/// Every comparable (target, source) pair of consecutive summand degrees.
fn block_pairs(ideal: &MonomialIdeal) -> Vec<(DegreeVector, DegreeVector, u8)> {
    let support = betti_support(ideal);
    let mut out = Vec::new();
    for i in 0..2usize {
        for (b, _) in &support[i + 1] {
            for (a, _) in &support[i] {
                if a.lt(b) {
                    out.push((*a, *b, i as u8));
                }
            }
        }
    }
    out
}

fn crosscheck_ideal(ideal: &MonomialIdeal) -> Vec<(DegreeVector, DegreeVector, u8)> {
    let mut mismatches = Vec::new();
    let mut oracles = [Oracle::new(ideal, 0), Oracle::new(ideal, 1)];
    for (a, b, i) in block_pairs(ideal) {
        let o = fence::matrix_with(&mut oracles[i as usize], &a, &b);
        let c = closed::matrix(ideal, &a, &b, i).expect("closed form applies to summand pairs");
        if o != c {
            mismatches.push((a, b, i));
        }
    }
    mismatches
}

fn cmd_crosscheck(flags: &Flags) -> Result<ExitCode, UsageError> {
    let ideals = if flags.get("gens").is_some() || flags.get("ideal").is_some() {
        vec![flags.ideal()?]
    } else {
        let seed = flags.number("seed", 1)?;
        let count = flags.number("count", 100)? as usize;
        let max_exp = flags.number("max-exponent", 6)? as u32;
        generate_corpus(seed, count, max_exp)
    };
    let results = par_map(ideals, |ideal| {
        let pairs = block_pairs(ideal).len();
        (ideal.render(), pairs, crosscheck_ideal(ideal))
    });
    let pairs_total: usize = results.iter().map(|(_, p, _)| p).sum();
    let mismatches: Vec<Value> = results
        .iter()
        .flat_map(|(ideal, _, mm)| {
            mm.iter()
                .map(move |(a, b, i)| {
                    json!({"ideal": ideal, "to": degree_json(a), "from": degree_json(b), "hom": i})
                })
                .collect::<Vec<_>>()
        })
        .collect();
    let equal = mismatches.is_empty();
    if flags.format() == "text" {
        println!(
            "checked {} ideals, {} blocks: {}",
            results.len(),
            pairs_total,
            if equal { "all equal" } else { "MISMATCH" }
        );
    } else {
        emit(&json!({
            "schema": SCHEMA,
            "command": "crosscheck",
            "ideals": results.len(),
            "blocks": pairs_total,
            "equal": equal,
            "mismatches": mismatches,
        }));
    }
    Ok(if equal {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_corpus(flags: &Flags) -> Result<ExitCode, UsageError> {
    let seed = flags.number("seed", 1)?;
    let count = flags.number("count", 100)? as usize;
    let max_exp = flags.number("max-exponent", 6)? as u32;
    let ideals = generate_corpus(seed, count, max_exp);
    if flags.format() == "text" {
        for i in &ideals {
            println!("{}", i.render());
        }
        return Ok(ExitCode::SUCCESS);
    }
    emit(&json!({
        "schema": SCHEMA,
        "command": "corpus",
        "seed": seed,
        "count": count,
        "max_exponent": max_exp,
        "ideals": ideals.iter().map(|i| json!({
            "render": i.render(),
            "gens": i.gens().iter().map(degree_json).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    }));
    Ok(ExitCode::SUCCESS)
}
