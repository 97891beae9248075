//! Acceptance run: one PASS/FAIL line per criterion, with timings against
//! each criterion's budget.
//!
//! Verdicts are never softened.  A criterion that compares against a typeset
//! display fails when the display is wrong; such failures are listed in
//! `KNOWN_FAILURES` with the analysis.  The process exits non-zero when the
//! set of failing criteria differs from that list in either direction, so a
//! regression and an unexpected fix are both noticed.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use lg_core::braid::builtin_knot_table;
use lg_core::colored::{
    coeff_a, coeff_b2, coeff_b2_typeset, multiplicities, sum_rule, v_to_lg, verify_specializations, Cable21Form,
    InvariantEngine,
};
use lg_core::laurent::{mono_rat, ChargedLaurent, LaurentPoly, RatFunc};
use lg_core::repcore::{build_braiding, build_module, check_open_hopf, fuse, tensor_power_of_generator, Decomposition};
use lg_core::rmatrices::{build_r_lg, build_r_v1, lg_to_v_vars, r_v1_eigenvalues, r_v1_file, spectral_decompose_r1};

const KNOWN_FAILURES: [(u32, &str); 3] = [
    (1, "the tabulated n = 6 triangle omits the row k = 2"),
    (10, "the typeset B(1,0) has the wrong sign"),
    (13, "the conjectured (2,1)-cable prefactors do not hold"),
];

struct Verdict {
    pass: bool,
    detail: String,
}

impl Verdict {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Verdict { pass, detail: detail.into() }
    }
}

type Check = Box<dyn Fn(&InvariantEngine) -> Verdict>;

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Duration,
    run: Check,
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn triangles(_: &InvariantEngine) -> Verdict {
    let shown = common::displayed_triangles();
    let bad: Vec<String> = (1..=6u32)
        .zip(&shown)
        .filter(|(n, rows)| &multiplicities(*n).rows != *rows)
        .map(|(n, rows)| format!("n={n}: computed {:?}, tabulated {:?}", multiplicities(n).rows, rows))
        .collect();
    if bad.is_empty() {
        Verdict::new(true, "n = 1..6 agree")
    } else {
        Verdict::new(
            false,
            format!(
                "{}; the computed triangle satisfies the symmetry, the dimension count 4^n and the character decomposition",
                bad.join("; ")
            ),
        )
    }
}

fn sum_rules(_: &InvariantEngine) -> Verdict {
    let bad: Vec<u32> = (2..=6).filter(|&n| !sum_rule(n).is_zero()).collect();
    Verdict::new(bad.is_empty(), if bad.is_empty() { "zero for n = 2..6".into() } else { format!("non-zero for n in {bad:?}") })
}

fn r_matrix_integrity(_: &InvariantEngine) -> Verdict {
    let mut notes = Vec::new();
    let mut pass = true;
    for built in [build_r_lg(), build_r_v1()] {
        let d = match built {
            Ok(d) => d,
            Err(e) => return Verdict::new(false, e.to_string()),
        };
        let ok = [
            ("inverse", d.check_inverse().unwrap_or(false)),
            ("Yang-Baxter", d.check_yang_baxter().unwrap_or(false)),
            ("enhancement", d.check_enhancement().unwrap_or(false)),
            ("twist 1", d.twist() == &ChargedLaurent::one()),
            ("Σμ = 0", d.mu_sum().is_zero()),
        ];
        let failed: Vec<&str> = ok.iter().filter(|x| !x.1).map(|x| x.0).collect();
        pass &= failed.is_empty();
        notes.push(if failed.is_empty() { format!("{} ok", d.label()) } else { format!("{} fails {failed:?}", d.label()) });
    }
    notes.push(format!("R_V1 uses {} corrected entries; as typeset it is not a braiding", r_v1_file().errata.len()));
    Verdict::new(pass, notes.join("; "))
}

fn repcore_reproduction(e: &InvariantEngine) -> Verdict {
    let v = build_module(0, 0, 0);
    match build_braiding(&v, &v) {
        Ok(c) => {
            let normalized = c.scale(&ChargedLaurent::new(2, LaurentPoly::mono(1, 2, 0)));
            let same = &normalized == e.r_lg().r();
            Verdict::new(same, if same { "all 256 entries agree" } else { "entries differ" })
        }
        Err(err) => Verdict::new(false, err.to_string()),
    }
}

fn v1_equals_lg1(e: &InvariantEngine) -> Verdict {
    let table = builtin_knot_table();
    let bad: Vec<String> = table
        .iter()
        .filter(|r| match (e.v1(&r.braid), e.lg1(&r.braid)) {
            (Ok(v), Ok(l)) => lg_to_v_vars(&v) != l,
            _ => true,
        })
        .map(|r| r.name.clone())
        .collect();
    Verdict::new(bad.is_empty(), format!("{} knots, mismatches {bad:?}", table.len()))
}

fn parallel_identity(e: &InvariantEngine) -> Verdict {
    let bad: Vec<String> = common::cabling_knots()
        .iter()
        .filter_map(|r| e.check_parallel_identity(&r.braid, 2).err().map(|err| format!("{}: {err}", r.name)))
        .collect();
    Verdict::new(bad.is_empty(), format!("{:?}; failures {bad:?}", common::CABLING_KNOTS))
}

fn second_invariant_routes(e: &InvariantEngine) -> Verdict {
    let mut bad = Vec::new();
    for r in common::cabling_knots() {
        let routes = (|| -> Result<bool, String> {
            let direct = e.lg2_direct(&r.braid).map_err(|x| x.to_string())?;
            let cable = e.lg2_via_cable(&r.braid).map_err(|x| x.to_string())?;
            let v2 = e.v2_via_cable(&r.braid).map_err(|x| x.to_string())?;
            Ok(direct == cable && v_to_lg(&v2, 2) == direct)
        })();
        match routes {
            Ok(true) => {}
            Ok(false) => bad.push(format!("{}: routes differ", r.name)),
            Err(err) => bad.push(format!("{}: {err}", r.name)),
        }
    }
    Verdict::new(
        bad.is_empty(),
        format!("direct = parallel extraction = V2 from the twisted cable; failures {bad:?} (V2 extraction uses the arguments t^2 h^-1, t^2 h)"),
    )
}

fn specializations(e: &InvariantEngine) -> Verdict {
    let table = builtin_knot_table();
    let mut checks = 0;
    let mut bad = Vec::new();
    for rec in &table {
        for n in [1, 2] {
            match verify_specializations(e, rec, n) {
                Ok(records) => {
                    for c in records.into_iter().filter(|c| !c.check.contains("genus") && !c.check.contains("sharpness")) {
                        checks += 1;
                        if !c.pass {
                            bad.push(format!("{} {}", c.knot, c.check));
                        }
                    }
                }
                Err(err) => bad.push(format!("{} n={n}: {err}", rec.name)),
            }
        }
    }
    Verdict::new(bad.is_empty(), format!("{} knots, {checks} checks, failures {bad:?}", table.len()))
}

fn genus_bounds(e: &InvariantEngine) -> Verdict {
    let table = builtin_knot_table();
    let mut bad = Vec::new();
    let mut sharp = 0;
    for rec in &table {
        for n in [1, 2] {
            match verify_specializations(e, rec, n) {
                Ok(records) => {
                    for c in records.into_iter().filter(|c| c.check.contains("genus") || c.check.contains("sharpness")) {
                        if c.check.contains("sharpness") && c.pass {
                            sharp += 1;
                        }
                        if !c.pass {
                            bad.push(format!("{} {} ({})", c.knot, c.check, c.detail));
                        }
                    }
                }
                Err(err) => bad.push(format!("{} n={n}: {err}", rec.name)),
            }
        }
    }
    Verdict::new(
        bad.is_empty(),
        format!("span bounds for n = 1, 2 and span_t V2 = 4·genus on {sharp}/{} knots; failures {bad:?}", table.len()),
    )
}

fn spectral_and_coefficients(_: &InvariantEngine) -> Verdict {
    let mut notes = Vec::new();
    let mut pass = true;
    match spectral_decompose_r1() {
        Ok(sd) => {
            let ok = sd.eigenvalues == r_v1_eigenvalues() && sd.ranks == vec![4, 4, 8];
            pass &= ok;
            notes.push(format!("eigenvalues t^-1 h, t h, -1 with ranks {:?}", sd.ranks));
        }
        Err(err) => {
            pass = false;
            notes.push(err.to_string());
        }
    }
    let solved = match coeff_b2() {
        Ok(c) => c,
        Err(err) => return Verdict::new(false, err.to_string()),
    };
    let typeset = coeff_b2_typeset();
    for (name, got, shown) in [("B00", &solved.b00, &typeset[0]), ("B01", &solved.b01, &typeset[1]), ("B10", &solved.b10, &typeset[2])] {
        if got == shown {
            notes.push(format!("{name} matches"));
        } else {
            pass = false;
            let how = if *got == -shown { "equals minus the typeset value" } else { "differs" };
            notes.push(format!("{name} {how}"));
        }
    }
    let to_lg = |x: &RatFunc| x.substitute_monomial([[-2, 0], [-1, -1]]).ok();
    let conversions = [
        to_lg(&solved.b00) == Some(&mono_rat(2, 0) * &coeff_a(2, 0, 0)),
        to_lg(&solved.b01) == Some(&mono_rat(-2, -2) * &coeff_a(2, 0, 1)),
        to_lg(&solved.b10) == Some(-coeff_a(2, 1, 0)),
    ];
    pass &= conversions.iter().all(|&x| x);
    notes.push(format!(
        "solved B map to (s^2 A00, s^-2 q^-2 A01, -A10): {conversions:?}; the typeset B10 would map to +A10, contradicting the conversion"
    ));
    Verdict::new(pass, notes.join("; "))
}

fn open_hopf(_: &InvariantEngine) -> Verdict {
    let mut bad = Vec::new();
    let mut count = 0;
    for (n, m) in [(0, 0), (0, 1), (1, 1)] {
        for j in [0, 1] {
            for parity in [0, 1] {
                count += 1;
                if let Err(err) = check_open_hopf(&build_module(n, 0, 0), &build_module(m, j, parity)) {
                    bad.push(format!("({n},{m}) β=α+{j} p={parity}: {err}"));
                }
            }
        }
    }
    Verdict::new(bad.is_empty(), format!("{count} cases; failures {bad:?}"))
}

fn fusion(_: &InvariantEngine) -> Verdict {
    let d = |e: &[((u32, i32), u32)]| -> Decomposition { e.iter().copied().collect() };
    let cases: [(&str, Result<Decomposition, _>, Decomposition); 4] = [
        ("V(0)^2", tensor_power_of_generator(2), d(&[((0, 0), 1), ((0, 1), 1), ((1, 0), 1)])),
        (
            "V(0)^3",
            tensor_power_of_generator(3),
            d(&[((0, 0), 1), ((0, 1), 3), ((0, 2), 1), ((1, 0), 2), ((1, 1), 2), ((2, 0), 1)]),
        ),
        (
            "V(1)⊗V(1)",
            fuse((1, 0), (1, 0)),
            d(&[((0, 1), 1), ((0, 2), 1), ((1, 1), 2), ((2, 0), 1), ((2, 1), 1), ((3, 0), 1)]),
        ),
        (
            "V(2)⊗V(2)",
            fuse((2, 0), (2, 0)),
            d(&[((0, 2), 1), ((0, 3), 1), ((1, 2), 2), ((2, 1), 1), ((2, 2), 1), ((3, 1), 2), ((4, 0), 1), ((4, 1), 1), ((5, 0), 1)]),
        ),
    ];
    let bad: Vec<String> = cases
        .into_iter()
        .filter(|(_, got, want)| got.as_ref().ok() != Some(want))
        .map(|(name, got, _)| format!("{name}: {got:?}"))
        .collect();
    Verdict::new(bad.is_empty(), format!("four decompositions; failures {bad:?}"))
}

fn conjectured_cable(e: &InvariantEngine) -> Verdict {
    let knots = common::cabling_knots();
    let holds = |form| -> Vec<String> {
        knots
            .iter()
            .filter(|r| e.cable21_identity(&r.braid, form).unwrap_or(false))
            .map(|r| r.name.clone())
            .collect()
    };
    let conjectured = holds(Cable21Form::Conjectured);
    let pattern = holds(Cable21Form::ConjecturedGeneralPattern);
    let derived = holds(Cable21Form::Derived);
    Verdict::new(
        conjectured.len() == knots.len(),
        format!(
            "conjectured form holds on {conjectured:?}; with argument q^(2α+2) on {pattern:?}; \
             the form with prefactors q^(2α), q^(-2α-2) and sign -A10 holds on {derived:?} (checked, not proved)"
        ),
    )
}

fn main() -> ExitCode {
    let criteria = vec![
        Criterion { id: 1, name: "multiplicity triangles n = 1..6", budget: Duration::from_millis(1), run: Box::new(triangles) as Check },
        Criterion { id: 2, name: "sum rule n = 2..6", budget: secs(1), run: Box::new(sum_rules) },
        Criterion { id: 3, name: "crossing-matrix integrity", budget: secs(5), run: Box::new(r_matrix_integrity) },
        Criterion { id: 4, name: "constructed braiding reproduces R_LG", budget: secs(10), run: Box::new(repcore_reproduction) },
        Criterion { id: 5, name: "V1 equals LG1 on the census", budget: secs(120), run: Box::new(v1_equals_lg1) },
        Criterion { id: 6, name: "parallel identity n = 2", budget: secs(600), run: Box::new(parallel_identity) },
        Criterion { id: 7, name: "LG2 equals V2 under the change of variables", budget: secs(600), run: Box::new(second_invariant_routes) },
        Criterion { id: 8, name: "symmetry and specializations n = 1, 2", budget: secs(600), run: Box::new(specializations) },
        Criterion { id: 9, name: "genus bounds and sharpness", budget: secs(1800), run: Box::new(genus_bounds) },
        Criterion { id: 10, name: "spectral decomposition and cable coefficients", budget: secs(60), run: Box::new(spectral_and_coefficients) },
        Criterion { id: 11, name: "open Hopf scalars", budget: secs(60), run: Box::new(open_hopf) },
        Criterion { id: 12, name: "fusion decompositions", budget: secs(10), run: Box::new(fusion) },
        Criterion { id: 13, name: "conjectured (2,1)-cable formula at n = 2", budget: secs(600), run: Box::new(conjectured_cable) },
    ];

    // The first criterion's budget is for the computation itself, so shared
    // setup is excluded from all timings.
    let engine = InvariantEngine::new().expect("crossing data build");
    let mut failed = BTreeSet::new();
    for c in &criteria {
        let start = Instant::now();
        let mut verdict = (c.run)(&engine);
        let elapsed = start.elapsed();
        if elapsed > c.budget {
            verdict.pass = false;
            verdict.detail = format!("over budget; {}", verdict.detail);
        }
        if !verdict.pass {
            failed.insert(c.id);
        }
        let known = KNOWN_FAILURES.iter().find(|k| k.0 == c.id);
        let tag = match (verdict.pass, known) {
            (true, _) => "PASS",
            (false, Some(_)) => "FAIL (known)",
            (false, None) => "FAIL",
        };
        println!("{tag:<12} {:>2}. {} [{elapsed:.2?} / {:?}] {}", c.id, c.name, c.budget, verdict.detail);
        if let (false, Some((_, why))) = (verdict.pass, known) {
            println!("{:<16}known: {why}", "");
        }
    }
    let expected: BTreeSet<u32> = KNOWN_FAILURES.iter().map(|k| k.0).collect();
    println!(
        "\n{} of {} criteria pass; failing {:?}, expected failing {:?}",
        criteria.len() - failed.len(),
        criteria.len(),
        failed,
        expected
    );
    if failed == expected {
        ExitCode::SUCCESS
    } else {
        println!("the set of failing criteria changed");
        ExitCode::FAILURE
    }
}
