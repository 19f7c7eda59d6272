//! Graded polynomial rings and their degree restrictions to a finite-index
//! subgroup: the subring spanned by the monomials whose degree lies in the
//! subgroup, together with the restricted ideal, the minimal support powers,
//! and the two floor constructions relative to the subgroup.
//!
//! Restricted ideals are represented by ambient exponent vectors. All their
//! generators carry degrees inside the subgroup, so divisibility between two
//! such monomials automatically has a cofactor inside the subring, and the
//! plain monomial-ideal algorithms stay valid for them.

use num_bigint::{BigInt, BigUint};

use crate::error::{Error, Result};
use crate::lattice::{spans_ambient, FgAbelianGroup, GroupIndex, IntMatrix, Subgroup};
use crate::monomial::{Exponent, MonomialIdeal};

/// Polynomial ring on `vars` variables graded by a finitely generated abelian
/// group through a surjective degree map.
#[derive(Debug, Clone)]
pub struct GradedRing {
    vars: usize,
    group: FgAbelianGroup,
    /// `ambient_rank x vars`; column `i` is the ambient degree of variable `i`.
    psi: IntMatrix,
}

impl GradedRing {
    pub fn new(vars: usize, group: FgAbelianGroup, psi: IntMatrix) -> Result<Self> {
        if psi.rows() != group.ambient_rank() || psi.cols() != vars {
            return Err(Error::DimensionMismatch(format!(
                "degree map is {}x{}, expected {}x{vars}",
                psi.rows(),
                psi.cols(),
                group.ambient_rank()
            )));
        }
        // surjectivity: variable degrees and relations together span the ambient
        if !spans_ambient(&psi.hstack(group.relations())?) {
            return Err(Error::Internal(
                "degree map is not surjective onto the grading group".into(),
            ));
        }
        Ok(GradedRing { vars, group, psi })
    }

    /// Ring with the trivial (rank-zero) grading; every monomial has degree 0.
    pub fn trivially_graded(vars: usize) -> Self {
        GradedRing {
            vars,
            group: FgAbelianGroup::free(0),
            psi: IntMatrix::zeros(0, vars),
        }
    }

    /// Standard grading by Z where every variable has degree one.
    pub fn standard_graded(vars: usize) -> Self {
        let psi = IntMatrix::new(1, vars, vec![BigInt::from(1); vars]).expect("shape");
        GradedRing {
            vars,
            group: FgAbelianGroup::free(1),
            psi,
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn group(&self) -> &FgAbelianGroup {
        &self.group
    }

    pub fn psi(&self) -> &IntMatrix {
        &self.psi
    }

    /// Ambient representative of the degree of a monomial.
    pub fn degree(&self, m: &Exponent) -> Result<Vec<BigInt>> {
        if m.len() != self.vars {
            return Err(Error::DimensionMismatch("monomial length".into()));
        }
        let v: Vec<BigInt> = m.entries().iter().map(|&e| BigInt::from(e)).collect();
        self.psi.mul_vec(&v)
    }

    /// Degree of a Laurent exponent vector (entries may be negative).
    pub fn degree_laurent(&self, m: &[i64]) -> Result<Vec<BigInt>> {
        if m.len() != self.vars {
            return Err(Error::DimensionMismatch("monomial length".into()));
        }
        let v: Vec<BigInt> = m.iter().map(|&e| BigInt::from(e)).collect();
        self.psi.mul_vec(&v)
    }

    pub fn restrict(self, subgroup: Subgroup) -> Result<RestrictedRing> {
        RestrictedRing::new(self, subgroup)
    }

    /// Restriction to the whole grading group (no restriction at all).
    pub fn restrict_full(self) -> RestrictedRing {
        let h = Subgroup::full(self.group.clone());
        RestrictedRing::new(self, h).expect("full subgroup has index one")
    }
}

/// Degree restriction of a graded ring to a finite-index subgroup.
#[derive(Debug, Clone)]
pub struct RestrictedRing {
    base: GradedRing,
    subgroup: Subgroup,
    index: BigUint,
    /// Order of each variable's degree in the quotient group; the box bound
    /// for minimal-solution enumeration.
    variable_orders: Vec<u64>,
}

impl RestrictedRing {
    pub fn new(base: GradedRing, subgroup: Subgroup) -> Result<Self> {
        if subgroup.parent().ambient_rank() != base.group().ambient_rank() {
            return Err(Error::DimensionMismatch(
                "subgroup lives in a different ambient group".into(),
            ));
        }
        let GroupIndex::Finite(index) = subgroup.index().clone() else {
            return Err(Error::InfiniteIndex);
        };
        let mut variable_orders = Vec::with_capacity(base.vars());
        for i in 0..base.vars() {
            let col = base.psi().column(i);
            let ord = subgroup.element_order(&col)?;
            variable_orders.push(u64::try_from(&ord).map_err(|_| Error::IndexOverflow)?);
        }
        Ok(RestrictedRing {
            base,
            subgroup,
            index,
            variable_orders,
        })
    }

    pub fn base(&self) -> &GradedRing {
        &self.base
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn index(&self) -> &BigUint {
        &self.index
    }

    pub fn vars(&self) -> usize {
        self.base.vars()
    }

    /// Whether a monomial belongs to the subring.
    pub fn contains_monomial(&self, m: &Exponent) -> Result<bool> {
        let deg = self.base.degree(m)?;
        self.subgroup.contains(&deg)
    }

    pub fn contains_laurent(&self, m: &[i64]) -> Result<bool> {
        let deg = self.base.degree_laurent(m)?;
        self.subgroup.contains(&deg)
    }

    /// Minimal generators of `a` intersected with the subring, as an ideal of
    /// the subring.
    ///
    /// For each minimal generator, minimal completing exponents are searched
    /// in the box bounded per variable by the order of that variable's degree
    /// in the quotient: any larger coordinate could be reduced by the order
    /// and stay a solution.
    pub fn restrict_ideal(&self, a: &MonomialIdeal) -> Result<MonomialIdeal> {
        if a.vars() != self.vars() {
            return Err(Error::DimensionMismatch(
                "ideal over a different ring".into(),
            ));
        }
        let n = self.vars();
        let mut raw: Vec<Exponent> = Vec::new();
        for mu in a.gens() {
            let mut cursor = vec![0u64; n];
            loop {
                let cand = Exponent::new(
                    mu.entries()
                        .iter()
                        .zip(&cursor)
                        .map(|(&m, &c)| m + u32::try_from(c).expect("box coordinate fits u32"))
                        .collect(),
                );
                if self.contains_monomial(&cand)? {
                    raw.push(cand);
                }
                // odometer over the per-variable boxes
                let mut i = 0;
                loop {
                    if i == n {
                        break;
                    }
                    cursor[i] += 1;
                    if cursor[i] < self.variable_orders[i] {
                        break;
                    }
                    cursor[i] = 0;
                    i += 1;
                }
                if i == n {
                    break;
                }
            }
        }
        MonomialIdeal::new(n, raw)
    }

    /// Least `m >= 0` such that the squarefree support of `mu` raised to `m`
    /// lies in `a` and has degree in the subgroup. `mu` must be a minimal
    /// generator of `a`.
    pub fn minimal_support_power(&self, a: &MonomialIdeal, mu: &Exponent) -> Result<u32> {
        if a.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if !a.gens().contains(mu) {
            return Err(Error::NotAGenerator);
        }
        let supp = mu.squarefree_support();
        let supp_deg = self.base.degree(&supp)?;
        let ord = self.subgroup.element_order(&supp_deg)?;
        let ord = u64::try_from(&ord).map_err(|_| Error::IndexOverflow)?;
        let bound = u64::from(mu.max_entry()) + ord;
        for m in 0..=bound {
            let m32 = u32::try_from(m).map_err(|_| Error::IndexOverflow)?;
            let cand = supp.scale(m32);
            if a.contains_monomial(&cand)? && self.contains_monomial(&cand)? {
                return Ok(m32);
            }
        }
        Err(Error::Internal(
            "support power not found within its bound".into(),
        ))
    }

    /// Ideal generated by `support(mu)^{m_mu}` over the minimal generators of
    /// `a`: the floor taken relative to the subring.
    pub fn floor_in_subring(&self, a: &MonomialIdeal) -> Result<MonomialIdeal> {
        let mut raw = Vec::with_capacity(a.gens().len());
        for mu in a.gens() {
            let m = self.minimal_support_power(a, mu)?;
            raw.push(mu.squarefree_support().scale(m));
        }
        MonomialIdeal::new(self.vars(), raw)
    }

    /// Degree restriction of the plain floor: the other monomial radical.
    pub fn restricted_floor(&self, a: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.restrict_ideal(&a.floor())
    }
}
