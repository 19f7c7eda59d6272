//! One subcommand per library operation; each handler parses its JSON
//! payload, runs the operation, and assembles the report body.

use clap::Subcommand;
use monotor_core::cech::{cohomology_at_degree, degsupp_window, Coefficients};
use monotor_core::lattice::{GroupIndex, QuotientPresentation};
use monotor_core::monomial::Exponent;
use monotor_core::toric::{
    complement_monomial, cox_grading, flat_degree_report, floor_identity, irrelevant_ideal, CoxData,
};
use monotor_core::torsion::{
    compare_torsion, floor_equals_radical_torsion, nil_index, no_containment_witness,
    radical_power_in_ideal, restricted_torsion_equal, torsion_equal_by_floor, NilIndex,
};
use num_bigint::BigInt;
use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::input::{
    self, BaseRingSpec, FamilySpec, FanSpec, IdealSpec, ModuleSpec, RingSpec, SubgroupSpec,
};
use crate::report::{
    biguint_value, degree_entry_value, envelope, exponent_value, ideal_value, reduced_degree_value,
};
use crate::suite;
use crate::Cli;

#[derive(Debug)]
pub enum CliError {
    Schema(String),
    Domain(String),
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Squarefree-support floor of a monomial ideal.
    Floor,
    /// Degree restriction of an ideal to a finite-index subgroup.
    Restrict,
    /// Minimal support power of a generator inside the restricted ideal.
    MMu,
    /// Torsion-functor equality decided through floors.
    GammaEq,
    /// Torsion-functor comparison with least-power certificates.
    GammaCompare,
    /// Torsion equality of the degree-restricted ideals.
    GammaRestricted,
    /// Nilpotency index of the nilradical of a coefficient ring.
    NilIndex,
    /// Least radical power landing inside a monomial ideal.
    RadicalPower,
    /// Truncation witness that no floor power enters a growing family.
    Witness,
    /// Cech cohomology of a single degree slice.
    Cech,
    /// Windowed Cech degree-support report.
    Degsupp,
    /// Class-group grading of a fan.
    FanCox,
    /// Cartier subgroup of a fan's class group.
    FanPic,
    /// Irrelevant ideal of a fan.
    Irrelevant,
    /// Floor identity of the irrelevant ideal over a degree subgroup.
    FloorIdentity,
    /// Flat-degree report over the restricted Cox ring.
    FlatReport,
    /// Agreement suite between the two torsion-equality procedures.
    OracleAgree,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Floor => "floor",
            Command::Restrict => "restrict",
            Command::MMu => "m-mu",
            Command::GammaEq => "gamma-eq",
            Command::GammaCompare => "gamma-compare",
            Command::GammaRestricted => "gamma-restricted",
            Command::NilIndex => "nil-index",
            Command::RadicalPower => "radical-power",
            Command::Witness => "witness",
            Command::Cech => "cech",
            Command::Degsupp => "degsupp",
            Command::FanCox => "fan-cox",
            Command::FanPic => "fan-pic",
            Command::Irrelevant => "irrelevant",
            Command::FloorIdentity => "floor-identity",
            Command::FlatReport => "flat-report",
            Command::OracleAgree => "oracle-agree",
        }
    }
}

fn read_input(cli: &Cli) -> Result<String, CliError> {
    match cli.input.as_deref() {
        None => Err(CliError::Schema(
            "this command needs --in <file.json>".into(),
        )),
        Some("-") => {
            use std::io::Read;
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::Schema(format!("cannot read stdin: {e}")))?;
            Ok(buf)
        }
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| CliError::Schema(format!("cannot read {path}: {e}"))),
    }
}

fn parse_window(cli: &Cli) -> Result<(i64, i64), CliError> {
    let Some(w) = &cli.window else {
        return Err(CliError::Schema("this command needs --window a,b".into()));
    };
    let parts: Vec<&str> = w.split(',').collect();
    if parts.len() != 2 {
        return Err(CliError::Schema(
            "window must be two integers \"a,b\"".into(),
        ));
    }
    let a: i64 = parts[0]
        .trim()
        .parse()
        .map_err(|_| CliError::Schema("bad window".into()))?;
    let b: i64 = parts[1]
        .trim()
        .parse()
        .map_err(|_| CliError::Schema("bad window".into()))?;
    if a > b {
        return Err(CliError::Schema("window start exceeds its end".into()));
    }
    Ok((a, b))
}

/// Window degrees: the cartesian range over the free coordinates of the
/// grading group, torsion coordinates zero.
fn window_degrees(
    p: &QuotientPresentation,
    lo: i64,
    hi: i64,
) -> Result<Vec<Vec<BigInt>>, CliError> {
    let f = p.free_rank();
    let span = (hi - lo + 1) as usize;
    let total = span.checked_pow(f as u32).unwrap_or(usize::MAX);
    if total > 20_000 {
        return Err(CliError::Domain("window too large to enumerate".into()));
    }
    let mut out = Vec::with_capacity(total);
    let mut coords = vec![lo; f];
    loop {
        let free: Vec<BigInt> = coords.iter().map(|&c| BigInt::from(c)).collect();
        out.push(p.free_section(&free).map_err(input::domain)?);
        let mut i = 0;
        loop {
            if i == f {
                return Ok(out);
            }
            coords[i] += 1;
            if coords[i] <= hi {
                break;
            }
            coords[i] = lo;
            i += 1;
        }
    }
}

fn thread_count() -> usize {
    std::env::var("MONOTOR_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

fn options_value(cli: &Cli) -> Value {
    json!({
        "box": cli.box_radius,
        "seed": cli.seed,
        "window": cli.window,
    })
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum SubgroupChoice {
    Named(String),
    Explicit(SubgroupSpec),
}

fn apply_subgroup_choice(
    cox: CoxData,
    choice: &Option<SubgroupChoice>,
) -> Result<CoxData, CliError> {
    match choice {
        None => Ok(cox),
        Some(SubgroupChoice::Named(name)) => match name.as_str() {
            "full" => Ok(cox),
            "pic" => cox.with_pic_subgroup().map_err(input::domain),
            other => Err(CliError::Schema(format!(
                "unknown subgroup name {other:?}; use \"full\", \"pic\" or explicit generators"
            ))),
        },
        Some(SubgroupChoice::Explicit(spec)) => {
            let gens = input::matrix_from_columns(cox.group().ambient_rank(), &spec.generators)?;
            cox.with_subgroup(gens).map_err(input::domain)
        }
    }
}

pub fn dispatch(cli: &Cli) -> Result<Value, CliError> {
    let body = match &cli.command {
        Command::Floor => {
            #[derive(Deserialize)]
            #[serde(deny_unknown_fields)]
            struct In {
                ring: RingSpec,
                ideal: IdealSpec,
            }
            let spec: In = input::parse(&read_input(cli)?)?;
            let ring = spec.ring.build()?;
            let a = spec.ideal.build(ring.vars())?;
            let mut b = Map::new();
            b.insert("floor".into(), ideal_value(&a.floor()));
            b
        }
        Command::Restrict => {
            #[derive(Deserialize)]
            #[serde(deny_unknown_fields)]
            struct In {
                ring: RingSpec,
                subgroup: SubgroupSpec,
                ideal: IdealSpec,
            }
            let spec: In = input::parse(&read_input(cli)?)?;
            let s = spec.ring.restricted(&spec.subgroup)?;
            let a = spec.ideal.build(s.vars())?;
            let r = s.restrict_ideal(&a).map_err(input::domain)?;
            let mut b = Map::new();
            b.insert("restricted".into(), ideal_value(&r));
            b
        }
        Command::MMu => {
            #[derive(Deserialize)]
            #[serde(deny_unknown_fields)]
            struct In {
                ring: RingSpec,
                subgroup: SubgroupSpec,
                ideal: IdealSpec,
                mu: Vec<u32>,
            }
            let spec: In = input::parse(&read_input(cli)?)?;
            let s = spec.ring.restricted(&spec.subgroup)?;
            let a = spec.ideal.build(s.vars())?;
            let m = s
                .minimal_support_power(&a, &Exponent::new(spec.mu.clone()))
                .map_err(input::domain)?;
            let mut b = Map::new();
            b.insert("m".into(), json!(m));
            b
        }
        Command::GammaEq => {
            #[derive(Deserialize)]
            #[serde(deny_unknown_fields)]
            struct In {
                ring: RingSpec,
                ideal_a: IdealSpec,
                ideal_b: IdealSpec,
            }
            let spec: In = input::parse(&read_input(cli)?)?;
            let vars = spec.ring.variables.len();
            let a = spec.ideal_a.build(vars)?;
            let bb = spec.ideal_b.build(vars)?;
            let equal = torsion_equal_by_floor(&a, &bb).map_err(input::domain)?;
            let mut b = Map::new();
            b.insert("equal".into(), json!(equal));
            if equal {
                b.insert("floor".into(), ideal_value(&a.floor()));
            } else {
                b.insert("floor_a".into(), ideal_value(&a.floor()));
                b.insert("floor_b".into(), ideal_value(&bb.floor()));
            }
            b
        }
        Command::GammaCompare => {
            #[derive(Deserialize)]
            #[serde(deny_unknown_fields)]
            struct In {
                ring: RingSpec,
                ideal_a: IdealSpec,
                ideal_b: IdealSpec,
            }
            let spec: In = input::parse(&read_input(cli)?)?;
            let vars = spec.ring.variables.len();
            let a = spec.ideal_a.build(vars)?;
            let bb = spec.ideal_b.build(vars)?;
            let cmp = compare_torsion(&a, &bb).map_err(input::domain)?;
            let mut b = Map::new();
            b.insert("relation".into(), json!(cmp.relation.as_str()));
            b.insert("power_a_in_b".into(), json!(cmp.power_a_in_b));
            b.insert("power_b_in_a".into(), json!(cmp.power_b_in_a));
            b
        }
        Command::GammaRestricted => {
            #[derive(Deserialize)]
            #[serde(deny_unknown_fields)]
            struct In {
                ring: RingSpec,
                subgroup: SubgroupSpec,
                ideal_a: IdealSpec,
                ideal_b: IdealSpec,
            }
            let spec: In = input::parse(&read_input(cli)?)?;
            let s = spec.ring.restricted(&spec.subgroup)?;
            let a = spec.ideal_a.build(s.vars())?;
            let bb = spec.ideal_b.build(s.vars())?;
            let equal = restricted_torsion_equal(&s, &a, &bb).map_err(input::domain)?;
            let mut b = Map::new();
            b.insert("equal".into(), json!(equal));
            b.insert("floor_a".into(), ideal_value(&a.floor()));
            b.insert("floor_b".into(), ideal_value(&bb.floor()));
            b.insert(
                "subring_floor_a".into(),
                ideal_value(&s.floor_in_subring(&a).map_err(input::domain)?),
            );
            b.insert(
                "subring_floor_b".into(),
                ideal_value(&s.floor_in_subring(&bb).map_err(input::domain)?),
            );
            b
        }
        Command::NilIndex => {
            #[derive(Deserialize)]
            #[serde(deny_unknown_fields)]
            struct In {
                base_ring: BaseRingSpec,
            }
            let spec: In = input::parse(&read_input(cli)?)?;
            let base = spec.base_ring.build()?;
            let mut b = Map::new();
            b.insert(
                "nil_index".into(),
                match nil_index(&base) {
                    NilIndex::Finite(n) => json!(n),
                    NilIndex::Infinite => json!("infinite"),
                },
            );
            b.insert(
                "floor_equals_radical".into(),
                json!(floor_equals_radical_torsion(&base)),
            );
            b
        }
        Command::RadicalPower => {
            #[derive(Deserialize)]
            #[serde(deny_unknown_fields)]
            struct In {
                base_ring: BaseRingSpec,
                ring: RingSpec,
                ideal: IdealSpec,
            }
            let spec: In = input::parse(&read_input(cli)?)?;
            let base = spec.base_ring.build()?;
            let a = spec.ideal.build(spec.ring.variables.len())?;
            let n = radical_power_in_ideal(&base, &a).map_err(input::domain)?;
            let mut b = Map::new();
            b.insert("n".into(), json!(n));
            b
        }
        Command::Witness => {
            #[derive(Deserialize)]
            #[serde(deny_unknown_fields)]
            struct In {
                family: FamilySpec,
                n: u32,
            }
            let spec: In = input::parse(&read_input(cli)?)?;
            let (level, witness) =
                no_containment_witness(&spec.family.build(), spec.n).map_err(input::domain)?;
            let mut b = Map::new();
            b.insert("truncation".into(), json!(level));
            b.insert("witness".into(), exponent_value(&witness));
            b
        }
        Command::Cech => {
            #[derive(Deserialize)]
            #[serde(deny_unknown_fields)]
            struct In {
                ring: RingSpec,
                #[serde(default)]
                subgroup: Option<SubgroupSpec>,
                #[serde(default)]
                base_ring: Option<BaseRingSpec>,
                module: ModuleSpec,
                sequence: Vec<Vec<u32>>,
                degree: Vec<i64>,
            }
            let spec: In = input::parse(&read_input(cli)?)?;
            let ring = match &spec.subgroup {
                Some(h) => spec.ring.restricted(h)?,
                None => spec.ring.build()?.restrict_full(),
            };
            let coefficients = match &spec.base_ring {
                Some(b) => b.coefficients()?,
                None => Coefficients::Field { characteristic: 0 },
            };
            let presentation = ring.base().group().presentation();
            let module = spec.module.build(ring, coefficients)?;
            let seq = input::exponent_list(module.ring().vars(), &spec.sequence)?;
            let degree: Vec<BigInt> = spec.degree.iter().map(|&v| BigInt::from(v)).collect();
            let entry = cohomology_at_degree(&module, &seq, &degree, cli.box_radius)
                .map_err(input::domain)?;
            let Value::Object(b) = degree_entry_value(&presentation, &entry) else {
                unreachable!("entry serializes to an object")
            };
            b
        }
        Command::Degsupp => {
            #[derive(Deserialize)]
            #[serde(deny_unknown_fields)]
            struct In {
                ring: RingSpec,
                #[serde(default)]
                subgroup: Option<SubgroupSpec>,
                #[serde(default)]
                base_ring: Option<BaseRingSpec>,
                module: ModuleSpec,
                sequence: Vec<Vec<u32>>,
            }
            let spec: In = input::parse(&read_input(cli)?)?;
            let (lo, hi) = parse_window(cli)?;
            let ring = match &spec.subgroup {
                Some(h) => spec.ring.restricted(h)?,
                None => spec.ring.build()?.restrict_full(),
            };
            let coefficients = match &spec.base_ring {
                Some(b) => b.coefficients()?,
                None => Coefficients::Field { characteristic: 0 },
            };
            let presentation = ring.base().group().presentation();
            let module = spec.module.build(ring, coefficients)?;
            let seq = input::exponent_list(module.ring().vars(), &spec.sequence)?;
            let window = window_degrees(&presentation, lo, hi)?;
            let report = degsupp_window(&module, &seq, &window, cli.box_radius, thread_count())
                .map_err(input::domain)?;
            let mut b = Map::new();
            b.insert(
                "degsupp".into(),
                Value::Array(
                    report
                        .degsupp
                        .iter()
                        .map(|d| reduced_degree_value(&presentation, d))
                        .collect(),
                ),
            );
            b.insert(
                "flat_eligible".into(),
                Value::Array(
                    report
                        .flat_eligible
                        .iter()
                        .map(|d| reduced_degree_value(&presentation, d))
                        .collect(),
                ),
            );
            b.insert(
                "entries".into(),
                Value::Array(
                    report
                        .entries
                        .iter()
                        .map(|e| degree_entry_value(&presentation, e))
                        .collect(),
                ),
            );
            b
        }
        Command::FanCox => {
            #[derive(Deserialize)]
            #[serde(deny_unknown_fields)]
            struct In {
                fan: FanSpec,
            }
            let spec: In = input::parse(&read_input(cli)?)?;
            let fan = spec.fan.build()?;
            let cox = cox_grading(&fan).map_err(input::domain)?;
            let presentation = cox.group().presentation();
            let degrees: Vec<Value> = (0..fan.rays().len())
                .map(|i| reduced_degree_value(&presentation, &cox.deg_map().column(i)))
                .collect();
            let mut b = Map::new();
            b.insert(
                "invariant_factors".into(),
                Value::Array(
                    cox.group()
                        .invariant_factors()
                        .iter()
                        .map(biguint_value)
                        .collect(),
                ),
            );
            b.insert("free_rank".into(), json!(cox.group().free_rank()));
            b.insert("degrees".into(), Value::Array(degrees));
            b.insert("warnings".into(), json!(fan.warnings()));
            b
        }
        Command::FanPic => {
            #[derive(Deserialize)]
            #[serde(deny_unknown_fields)]
            struct In {
                fan: FanSpec,
            }
            let spec: In = input::parse(&read_input(cli)?)?;
            let fan = spec.fan.build()?;
            let cox = cox_grading(&fan).map_err(input::domain)?;
            let presentation = cox.group().presentation();
            let pic = cox.pic();
            let gens = pic.generators();
            let mut b = Map::new();
            b.insert(
                "index".into(),
                match pic.index() {
                    GroupIndex::Finite(n) => biguint_value(n),
                    GroupIndex::Infinite => json!("infinite"),
                },
            );
            b.insert(
                "generators".into(),
                Value::Array(
                    (0..gens.cols())
                        .map(|j| reduced_degree_value(&presentation, &gens.column(j)))
                        .collect(),
                ),
            );
            b
        }
        Command::Irrelevant => {
            #[derive(Deserialize)]
            #[serde(deny_unknown_fields)]
            struct In {
                fan: FanSpec,
            }
            let spec: In = input::parse(&read_input(cli)?)?;
            let fan = spec.fan.build()?;
            let mut b = Map::new();
            b.insert("gens".into(), ideal_value(&irrelevant_ideal(&fan)));
            b.insert(
                "cone_monomials".into(),
                Value::Array(
                    fan.cones()
                        .iter()
                        .map(|c| exponent_value(&complement_monomial(&fan, c)))
                        .collect(),
                ),
            );
            b
        }
        Command::FloorIdentity => {
            #[derive(Deserialize)]
            #[serde(deny_unknown_fields)]
            struct In {
                fan: FanSpec,
                #[serde(default)]
                b: Option<SubgroupChoice>,
            }
            let spec: In = input::parse(&read_input(cli)?)?;
            let fan = spec.fan.build()?;
            let cox = apply_subgroup_choice(cox_grading(&fan).map_err(input::domain)?, &spec.b)?;
            let report = floor_identity(&fan, &cox).map_err(input::domain)?;
            let b_in_pic = cox.b_in_pic().map_err(input::domain)?;
            let mut b = Map::new();
            b.insert("equal".into(), json!(report.equal));
            b.insert(
                "cone_power_ideal".into(),
                ideal_value(&report.cone_power_ideal),
            );
            b.insert(
                "restricted_irrelevant".into(),
                ideal_value(&report.restricted_irrelevant),
            );
            b.insert("subring_floor".into(), ideal_value(&report.subring_floor));
            b.insert(
                "certificates".into(),
                json!({
                    "floor_power_in_restricted": report.floor_certificates.0,
                    "floor_power_in_subring_floor": report.floor_certificates.1,
                    "restricted_power_in_cone_ideal": report.restricted_power_in_cone_ideal,
                }),
            );
            b.insert(
                "hypotheses".into(),
                json!({
                    "b_in_pic": b_in_pic,
                    "iti": "assumed-unverified",
                }),
            );
            b
        }
        Command::FlatReport => {
            #[derive(Deserialize)]
            #[serde(deny_unknown_fields)]
            struct In {
                fan: FanSpec,
                #[serde(default)]
                b: Option<SubgroupChoice>,
                #[serde(default)]
                module: Option<ModuleSpec>,
                #[serde(default)]
                base_ring: Option<BaseRingSpec>,
            }
            let spec: In = input::parse(&read_input(cli)?)?;
            let (lo, hi) = parse_window(cli)?;
            let fan = spec.fan.build()?;
            let cox = apply_subgroup_choice(cox_grading(&fan).map_err(input::domain)?, &spec.b)?;
            let coefficients = match &spec.base_ring {
                Some(b) => b.coefficients()?,
                None => Coefficients::Field { characteristic: 0 },
            };
            let presentation = cox.group().presentation();
            let window = window_degrees(&presentation, lo, hi)?;
            let module_spec = spec.module.unwrap_or(ModuleSpec {
                quotient: vec![],
                shift: None,
            });
            let quotient = IdealSpec {
                gens: module_spec.quotient.clone(),
            }
            .build(fan.rays().len())?;
            let shift = module_spec
                .shift
                .as_ref()
                .map(|s| s.iter().map(|&v| BigInt::from(v)).collect());
            let report = flat_degree_report(
                &fan,
                &cox,
                coefficients,
                quotient,
                shift,
                &window,
                cli.box_radius,
                thread_count(),
            )
            .map_err(input::domain)?;
            let mut b = Map::new();
            b.insert(
                "degsupp".into(),
                Value::Array(
                    report
                        .cohomology
                        .degsupp
                        .iter()
                        .map(|d| reduced_degree_value(&presentation, d))
                        .collect(),
                ),
            );
            b.insert(
                "flat_eligible".into(),
                Value::Array(
                    report
                        .flat_eligible
                        .iter()
                        .map(|d| reduced_degree_value(&presentation, d))
                        .collect(),
                ),
            );
            b.insert(
                "entries".into(),
                Value::Array(
                    report
                        .cohomology
                        .entries
                        .iter()
                        .map(|e| degree_entry_value(&presentation, e))
                        .collect(),
                ),
            );
            b.insert(
                "hypotheses".into(),
                json!({
                    "b_in_pic": report.b_in_pic,
                    "iti": "assumed-unverified",
                    "localized_flatness": "asserted-by-user",
                }),
            );
            b
        }
        Command::OracleAgree => {
            #[derive(Deserialize, Default)]
            #[serde(deny_unknown_fields)]
            struct In {
                #[serde(default)]
                pairs: Option<usize>,
                #[serde(default)]
                max_vars: Option<usize>,
                #[serde(default)]
                max_exp: Option<u32>,
            }
            let spec: In = match cli.input.as_deref() {
                None => In::default(),
                Some(_) => input::parse(&read_input(cli)?)?,
            };
            let pairs = spec.pairs.unwrap_or(1000);
            let max_vars = spec.max_vars.unwrap_or(5).clamp(1, 8);
            let max_exp = spec.max_exp.unwrap_or(4).clamp(1, 8);
            let outcome = suite::torsion_agreement(pairs, max_vars, max_exp, cli.seed);
            let mut b = Map::new();
            b.insert("checked".into(), json!(outcome.checked));
            b.insert("mismatches".into(), json!(outcome.mismatches));
            b.insert("agreement".into(), json!(outcome.mismatches == 0));
            b.insert("pairs".into(), json!(pairs));
            b.insert("max_vars".into(), json!(max_vars));
            b.insert("max_exp".into(), json!(max_exp));
            b
        }
    };
    Ok(envelope(cli.command.name(), options_value(cli), body))
}
