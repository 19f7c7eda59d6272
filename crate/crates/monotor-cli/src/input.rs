//! Input JSON schemas. Unknown fields are rejected; field-path diagnostics
//! come from deserializing through `serde_path_to_error`.

use monotor_core::cech::{Coefficients, GradedModule};
use monotor_core::lattice::{FgAbelianGroup, IntMatrix, Subgroup};
use monotor_core::monomial::{Exponent, IdealFamily, MonomialIdeal};
use monotor_core::restriction::{GradedRing, RestrictedRing};
use monotor_core::toric::{validate_fan, Fan, FanData};
use monotor_core::torsion::BaseRing;
use num_bigint::BigInt;
use serde::de::DeserializeOwned;
use serde::Deserialize;

use crate::run::CliError;

pub fn parse<T: DeserializeOwned>(text: &str) -> Result<T, CliError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de)
        .map_err(|e| CliError::Schema(format!("at {}: {}", e.path(), e.inner())))
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    pub variables: Vec<String>,
    #[serde(default)]
    pub grading: Option<GradingSpec>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GradingSpec {
    pub ambient_rank: usize,
    #[serde(default)]
    pub relations: Vec<Vec<i64>>,
    /// One ambient degree vector per variable.
    pub degrees: Vec<Vec<i64>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubgroupSpec {
    pub generators: Vec<Vec<i64>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealSpec {
    pub gens: Vec<Vec<u32>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields, tag = "variant", rename_all = "snake_case")]
pub enum BaseRingSpec {
    Zero,
    Field {
        characteristic: u64,
    },
    Integers,
    IntegersMod {
        modulus: u64,
    },
    TruncatedPolynomial {
        exponents: Vec<u32>,
    },
    SquareZeroFamily {
        #[serde(default)]
        unbounded: bool,
    },
    TruncatedFamilyUnbounded,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FanSpec {
    pub rank: usize,
    pub rays: Vec<Vec<i64>>,
    pub cones: Vec<Vec<usize>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    #[serde(default)]
    pub quotient: Vec<Vec<u32>>,
    #[serde(default)]
    pub shift: Option<Vec<i64>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilySpec {
    pub c: u64,
    pub d: i64,
}

pub fn domain(e: monotor_core::Error) -> CliError {
    CliError::Domain(e.to_string())
}

impl RingSpec {
    pub fn build(&self) -> Result<GradedRing, CliError> {
        let vars = self.variables.len();
        match &self.grading {
            None => Ok(GradedRing::trivially_graded(vars)),
            Some(g) => {
                if g.degrees.len() != vars {
                    return Err(CliError::Schema(format!(
                        "grading lists {} degree vectors for {vars} variables",
                        g.degrees.len()
                    )));
                }
                let relations = matrix_from_columns(g.ambient_rank, &g.relations)?;
                let group = FgAbelianGroup::new(g.ambient_rank, relations).map_err(domain)?;
                let psi = matrix_from_columns(g.ambient_rank, &g.degrees)?;
                GradedRing::new(vars, group, psi).map_err(domain)
            }
        }
    }

    pub fn restricted(&self, subgroup: &SubgroupSpec) -> Result<RestrictedRing, CliError> {
        let ring = self.build()?;
        let h = subgroup.build(ring.group().clone())?;
        ring.restrict(h).map_err(domain)
    }
}

impl SubgroupSpec {
    pub fn build(&self, parent: FgAbelianGroup) -> Result<Subgroup, CliError> {
        let gens = matrix_from_columns(parent.ambient_rank(), &self.generators)?;
        Subgroup::new(parent, gens).map_err(domain)
    }
}

impl IdealSpec {
    pub fn build(&self, vars: usize) -> Result<MonomialIdeal, CliError> {
        let gens: Vec<Exponent> = self.gens.iter().map(|g| Exponent::new(g.clone())).collect();
        for g in &gens {
            if g.len() != vars {
                return Err(CliError::Schema(format!(
                    "ideal generator {:?} does not have {vars} entries",
                    g.entries()
                )));
            }
        }
        MonomialIdeal::new(vars, gens).map_err(domain)
    }
}

impl BaseRingSpec {
    pub fn build(&self) -> Result<BaseRing, CliError> {
        Ok(match self {
            BaseRingSpec::Zero => BaseRing::Zero,
            BaseRingSpec::Field { characteristic } => BaseRing::Field {
                characteristic: *characteristic,
            },
            BaseRingSpec::Integers => BaseRing::Integers,
            BaseRingSpec::IntegersMod { modulus } => {
                if *modulus < 2 {
                    return Err(CliError::Schema("integers_mod needs modulus >= 2".into()));
                }
                BaseRing::IntegersMod { modulus: *modulus }
            }
            BaseRingSpec::TruncatedPolynomial { exponents } => {
                if exponents.contains(&0) {
                    return Err(CliError::Schema(
                        "truncated_polynomial exponents must be >= 1".into(),
                    ));
                }
                BaseRing::TruncatedPolynomial {
                    exponents: exponents.clone(),
                }
            }
            BaseRingSpec::SquareZeroFamily { unbounded } => BaseRing::SquareZeroFamily {
                unbounded: *unbounded,
            },
            BaseRingSpec::TruncatedFamilyUnbounded => BaseRing::TruncatedFamilyUnbounded,
        })
    }

    pub fn coefficients(&self) -> Result<Coefficients, CliError> {
        match self {
            BaseRingSpec::Field { characteristic } => Ok(Coefficients::Field {
                characteristic: *characteristic,
            }),
            BaseRingSpec::Integers => Ok(Coefficients::Integers),
            other => Err(CliError::Domain(format!(
                "cohomology needs a field or the integers, got {other:?}"
            ))),
        }
    }
}

impl FanSpec {
    pub fn build(&self) -> Result<Fan, CliError> {
        validate_fan(&FanData {
            rank: self.rank,
            rays: self.rays.clone(),
            cones: self.cones.clone(),
        })
        .map_err(domain)
    }
}

impl ModuleSpec {
    pub fn build(
        &self,
        ring: RestrictedRing,
        coefficients: Coefficients,
    ) -> Result<GradedModule, CliError> {
        let vars = ring.vars();
        let quotient = IdealSpec {
            gens: self.quotient.clone(),
        }
        .build(vars)?;
        let shift = self
            .shift
            .as_ref()
            .map(|s| s.iter().map(|&v| BigInt::from(v)).collect());
        GradedModule::new(ring, coefficients, quotient, shift).map_err(domain)
    }
}

impl FamilySpec {
    pub fn build(&self) -> IdealFamily {
        IdealFamily {
            scale: self.c,
            offset: self.d,
        }
    }
}

/// Columns given as a list of ambient vectors.
pub fn matrix_from_columns(ambient: usize, cols: &[Vec<i64>]) -> Result<IntMatrix, CliError> {
    let columns: Vec<Vec<BigInt>> = cols
        .iter()
        .map(|c| c.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    IntMatrix::from_columns(ambient, &columns)
        .map_err(|e| CliError::Schema(format!("bad matrix: {e}")))
}

pub fn exponent_list(vars: usize, list: &[Vec<u32>]) -> Result<Vec<Exponent>, CliError> {
    let out: Vec<Exponent> = list.iter().map(|g| Exponent::new(g.clone())).collect();
    for e in &out {
        if e.len() != vars {
            return Err(CliError::Schema(format!(
                "exponent {:?} does not have {vars} entries",
                e.entries()
            )));
        }
    }
    Ok(out)
}
