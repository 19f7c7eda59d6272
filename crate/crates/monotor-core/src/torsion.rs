//! Decision procedures for equality and ordering of torsion functors with
//! monomial support. A torsion functor is never materialized: every question
//! is reduced to power containment between the defining monomial ideals,
//! floor comparisons, or nilpotency data of a symbolic coefficient ring.

use crate::error::{Error, Result};
use crate::monomial::{power_containment_exists, Exponent, IdealFamily, MonomialIdeal};
use crate::restriction::RestrictedRing;

/// Symbolic description of the coefficient ring, sufficient to answer
/// nilradical queries exactly. The unbounded variants answer symbolically,
/// with finite truncation witnesses for every individual claim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseRing {
    Zero,
    Field {
        characteristic: u64,
    },
    Integers,
    IntegersMod {
        modulus: u64,
    },
    /// `Q[Y_1..Y_N] / (Y_k^{e_k})` with characteristic-zero coefficients.
    TruncatedPolynomial {
        exponents: Vec<u32>,
    },
    /// `Q[(Y_k)] / (Y_j * Y_k : all j, k)`: products of two generators vanish.
    SquareZeroFamily {
        unbounded: bool,
    },
    /// `Q[(Y_k)_{k>=1}] / (Y_k^k)`: the nilradical is not nilpotent.
    TruncatedFamilyUnbounded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NilIndex {
    Finite(u64),
    Infinite,
}

impl NilIndex {
    pub fn is_finite(&self) -> bool {
        matches!(self, NilIndex::Finite(_))
    }

    pub fn finite(&self) -> Option<u64> {
        match self {
            NilIndex::Finite(n) => Some(*n),
            NilIndex::Infinite => None,
        }
    }
}

/// How two torsion functors with monomial support relate.
///
/// Convention: `LeftSubfunctor` means the functor of the left ideal is
/// contained in the functor of the right ideal, which holds exactly when some
/// power of the right ideal is contained in the left one (the left adic
/// topology is the coarser of the two).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TorsionRelation {
    Equal,
    LeftSubfunctor,
    RightSubfunctor,
    Incomparable,
}

impl TorsionRelation {
    pub fn as_str(&self) -> &'static str {
        match self {
            TorsionRelation::Equal => "equal",
            TorsionRelation::LeftSubfunctor => "left-subfunctor",
            TorsionRelation::RightSubfunctor => "right-subfunctor",
            TorsionRelation::Incomparable => "incomparable",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionComparison {
    pub relation: TorsionRelation,
    /// Least `m` with `a^m` inside `b`; certifies that the torsion functor of
    /// `b` is a subfunctor of the one of `a`.
    pub power_a_in_b: Option<u32>,
    /// Least `n` with `b^n` inside `a`; certifies the opposite containment.
    pub power_b_in_a: Option<u32>,
}

/// Compares the torsion functors of two ideals through mutual power
/// containment of the ideals themselves.
pub fn compare_torsion(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<TorsionComparison> {
    let power_a_in_b = power_containment_exists(a, b)?;
    let power_b_in_a = power_containment_exists(b, a)?;
    let relation = match (power_a_in_b.is_some(), power_b_in_a.is_some()) {
        (true, true) => TorsionRelation::Equal,
        (false, true) => TorsionRelation::LeftSubfunctor,
        (true, false) => TorsionRelation::RightSubfunctor,
        (false, false) => TorsionRelation::Incomparable,
    };
    Ok(TorsionComparison {
        relation,
        power_a_in_b,
        power_b_in_a,
    })
}

/// Fast path for torsion equality of finite-type monomial ideals: the two
/// functors agree exactly when the floors agree as canonical antichains.
pub fn torsion_equal_by_floor(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<bool> {
    if a.vars() != b.vars() {
        return Err(Error::DimensionMismatch(
            "ideals over different rings".into(),
        ));
    }
    Ok(a.floor() == b.floor())
}

/// Torsion equality of the degree-restricted ideals, decided in the ambient
/// ring: it holds exactly when the plain floors agree.
pub fn restricted_torsion_equal(
    s: &RestrictedRing,
    a: &MonomialIdeal,
    b: &MonomialIdeal,
) -> Result<bool> {
    if a.vars() != s.vars() || b.vars() != s.vars() {
        return Err(Error::DimensionMismatch(
            "ideals over a different ring".into(),
        ));
    }
    Ok(a.floor() == b.floor())
}

/// Certificates that the restricted ideal, its subring floor and its
/// restricted floor all define the same torsion functor: the least powers
/// `p`, `q` with `restricted_floor(a)^p` inside `restrict(a)` and
/// `restricted_floor(a)^q` inside `floor_in_subring(a)`.
pub fn floor_torsion_certificates(s: &RestrictedRing, a: &MonomialIdeal) -> Result<(u32, u32)> {
    if a.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let restricted = s.restrict_ideal(a)?;
    let floor_restricted = s.restricted_floor(a)?;
    let floor_subring = s.floor_in_subring(a)?;
    let p = power_containment_exists(&floor_restricted, &restricted)?
        .ok_or_else(|| Error::Internal("restricted floor power containment must exist".into()))?;
    let q = power_containment_exists(&floor_restricted, &floor_subring)?
        .ok_or_else(|| Error::Internal("subring floor power containment must exist".into()))?;
    // sanity cap: the search bound plus the subgroup index
    let max_exp = |i: &MonomialIdeal| i.gens().iter().map(Exponent::max_entry).max().unwrap_or(0);
    let index: u64 = u64::try_from(s.index()).map_err(|_| Error::IndexOverflow)?;
    let cap =
        (floor_restricted.gens().len() as u64) * u64::from(max_exp(&restricted).max(1)) + index + 1;
    if u64::from(p) > cap || u64::from(q) > cap {
        return Err(Error::Internal(
            "floor certificate exceeded its bound".into(),
        ));
    }
    Ok((p, q))
}

/// Least `n >= 0` with `nil(A)^n = 0`, answered per descriptor.
pub fn nil_index(base: &BaseRing) -> NilIndex {
    match base {
        BaseRing::Zero => NilIndex::Finite(0),
        BaseRing::Field { .. } | BaseRing::Integers => NilIndex::Finite(1),
        BaseRing::IntegersMod { modulus } => match *modulus {
            0 => NilIndex::Finite(1),
            1 => NilIndex::Finite(0),
            n => {
                let rad = radical_of(n);
                let mut cur = rad % n;
                let mut e = 1u64;
                while cur != 0 {
                    cur = ((u128::from(cur) * u128::from(rad)) % u128::from(n)) as u64;
                    e += 1;
                }
                NilIndex::Finite(e)
            }
        },
        BaseRing::TruncatedPolynomial { exponents } => {
            if exponents.contains(&0) {
                // a relation Y_k^0 = 1 collapses the ring
                return NilIndex::Finite(0);
            }
            let extra: u64 = exponents.iter().map(|&e| u64::from(e) - 1).sum();
            NilIndex::Finite(if extra == 0 { 1 } else { 1 + extra })
        }
        BaseRing::SquareZeroFamily { .. } => NilIndex::Finite(2),
        BaseRing::TruncatedFamilyUnbounded => NilIndex::Infinite,
    }
}

fn radical_of(mut n: u64) -> u64 {
    let mut rad = 1u64;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            rad *= p;
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        rad *= n;
    }
    rad
}

/// Whether the floor of every monomial ideal defines the same torsion functor
/// as the radical does; equivalent to the nilradical being nilpotent.
pub fn floor_equals_radical_torsion(base: &BaseRing) -> bool {
    nil_index(base).is_finite()
}

/// Monomial membership in the radical of `a`: over a nonzero coefficient
/// ring the radical meets the monomials exactly in the floor.
pub fn radical_contains_monomial(base: &BaseRing, a: &MonomialIdeal, m: &Exponent) -> Result<bool> {
    if matches!(base, BaseRing::Zero) {
        return Ok(true);
    }
    a.floor().contains_monomial(m)
}

/// Least `n` with the radical's `n`-th power inside the ideal, or `None` when
/// the nilradical of the coefficient ring is not nilpotent.
///
/// The radical of a monomial ideal decomposes as nilradical plus floor, so a
/// power lands in the ideal exactly when every surviving nilpotent level
/// still leaves enough floor factors; the least power is the nil index minus
/// one plus the least floor power inside the ideal.
pub fn radical_power_in_ideal(base: &BaseRing, a: &MonomialIdeal) -> Result<Option<u32>> {
    if a.is_zero() || a.is_unit() {
        return Err(Error::ImproperIdeal);
    }
    let nil = match nil_index(base) {
        NilIndex::Infinite => return Ok(None),
        NilIndex::Finite(0) => return Ok(Some(0)),
        NilIndex::Finite(n) => n,
    };
    let p = power_containment_exists(&a.floor(), a)?
        .ok_or_else(|| Error::Internal("floor power containment must exist".into()))?;
    let n = (nil - 1) + u64::from(p);
    Ok(Some(u32::try_from(n).map_err(|_| Error::IndexOverflow)?))
}

/// Witness that no power of the floor of a strictly growing family lands in
/// the family ideal: a truncation level and a monomial inside the `n`-th
/// floor power but outside the truncated ideal.
pub fn no_containment_witness(family: &IdealFamily, n: u32) -> Result<(usize, Exponent)> {
    if family.scale == 0 {
        return Err(Error::BoundedFamily);
    }
    // least 1-based index whose exponent exceeds n
    let needed = i64::from(n);
    let mut level = 1usize;
    while family.exponent_at(level) <= needed {
        level += 1;
    }
    let truncated = family.truncate(level)?;
    let mut w = vec![0u32; level];
    w[level - 1] = n;
    let witness = Exponent::new(w);
    let floor_power = truncated.floor().power(n);
    if !floor_power.contains_monomial(&witness)? || truncated.contains_monomial(&witness)? {
        return Err(Error::BoundedFamily);
    }
    Ok((level, witness))
}

/// Nonzero product of nilpotents of length `n` in the unbounded truncated
/// family, exhibited at a finite truncation level.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NilWitness {
    /// Number of variables needed.
    pub truncation_level: u64,
    /// 1-based index of the witness variable.
    pub variable: u64,
    /// Its exponent; the witness monomial is `Y_variable ^ exponent`.
    pub exponent: u64,
}

/// For each `n`, the monomial `Y_{n+1}^n` is a nonzero product of `n`
/// nilpotent generators of the unbounded truncated family; verified by
/// reduction against the truncation relations.
pub fn truncated_family_nil_witness(n: u64) -> Result<NilWitness> {
    let witness = NilWitness {
        truncation_level: n + 1,
        variable: n + 1,
        exponent: n,
    };
    // zero in the truncated ring iff the exponent reaches the relation power
    if witness.exponent >= witness.variable {
        return Err(Error::Internal(
            "nil witness vanished in its truncation".into(),
        ));
    }
    Ok(witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{FgAbelianGroup, IntMatrix, Subgroup};
    use crate::restriction::GradedRing;

    fn ideal(vars: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(
            vars,
            gens.iter().map(|g| Exponent::new(g.to_vec())).collect(),
        )
        .unwrap()
    }

    fn z_restricted(degrees: &[i64], d: i64) -> RestrictedRing {
        let vars = degrees.len();
        let psi = IntMatrix::from_rows_i64(&[degrees.to_vec()]).unwrap();
        let ring = GradedRing::new(vars, FgAbelianGroup::free(1), psi).unwrap();
        let h = Subgroup::new(
            FgAbelianGroup::free(1),
            IntMatrix::from_rows_i64(&[vec![d]]).unwrap(),
        )
        .unwrap();
        ring.restrict(h).unwrap()
    }

    #[test]
    fn compare_powers_of_one_variable() {
        let c = compare_torsion(&ideal(1, &[&[4]]), &ideal(1, &[&[2]])).unwrap();
        assert_eq!(c.relation, TorsionRelation::Equal);
        assert_eq!(c.power_a_in_b, Some(1));
        assert_eq!(c.power_b_in_a, Some(2));
    }

    #[test]
    fn compare_disjoint_supports() {
        let c = compare_torsion(&ideal(2, &[&[1, 0]]), &ideal(2, &[&[0, 1]])).unwrap();
        assert_eq!(c.relation, TorsionRelation::Incomparable);
        assert_eq!(c.power_a_in_b, None);
        assert_eq!(c.power_b_in_a, None);
    }

    #[test]
    fn compare_degenerate_ideals() {
        let zz = compare_torsion(&MonomialIdeal::zero(1), &MonomialIdeal::zero(1)).unwrap();
        assert_eq!(zz.relation, TorsionRelation::Equal);
        let uz = compare_torsion(&MonomialIdeal::unit(1), &MonomialIdeal::zero(1)).unwrap();
        assert_eq!(uz.relation, TorsionRelation::LeftSubfunctor);
        assert_eq!(uz.power_b_in_a, Some(0));
        assert_eq!(uz.power_a_in_b, None);
    }

    #[test]
    fn compare_one_sided() {
        // xy against x: xy lies in <x>, no power of x lies in <xy>, so the
        // torsion functor of x is the strictly smaller one.
        let c = compare_torsion(&ideal(2, &[&[1, 1]]), &ideal(2, &[&[1, 0]])).unwrap();
        assert_eq!(c.relation, TorsionRelation::RightSubfunctor);
        assert_eq!(c.power_a_in_b, Some(1));
        assert_eq!(c.power_b_in_a, None);
    }

    #[test]
    fn floor_equality_examples() {
        assert!(torsion_equal_by_floor(&ideal(1, &[&[4]]), &ideal(1, &[&[2]])).unwrap());
        let a = ideal(3, &[&[2, 1, 0], &[0, 0, 3]]);
        let b = ideal(3, &[&[1, 7, 0], &[0, 0, 1]]);
        assert!(torsion_equal_by_floor(&a, &b).unwrap());
        // oracle: mutual power containment
        assert_eq!(
            compare_torsion(&a, &b).unwrap().relation,
            TorsionRelation::Equal
        );
        assert!(!torsion_equal_by_floor(&ideal(2, &[&[1, 0]]), &ideal(2, &[&[1, 1]])).unwrap());
    }

    #[test]
    fn restricted_equality_examples() {
        let s = z_restricted(&[1], 2);
        let a = ideal(1, &[&[4]]);
        let b = ideal(1, &[&[2]]);
        assert!(restricted_torsion_equal(&s, &a, &b).unwrap());
        // even though the subring floors differ
        assert_ne!(
            s.floor_in_subring(&a).unwrap(),
            s.floor_in_subring(&b).unwrap()
        );

        let s2 = z_restricted(&[1, 1], 2);
        assert!(
            !restricted_torsion_equal(&s2, &ideal(2, &[&[1, 0]]), &ideal(2, &[&[0, 1]])).unwrap()
        );

        // restriction to the whole group coincides with the plain test
        let full = GradedRing::standard_graded(2).restrict_full();
        let x = ideal(2, &[&[1, 0]]);
        let x2 = ideal(2, &[&[2, 0]]);
        assert_eq!(
            restricted_torsion_equal(&full, &x, &x2).unwrap(),
            torsion_equal_by_floor(&x, &x2).unwrap()
        );
    }

    #[test]
    fn floor_certificates() {
        let s = z_restricted(&[1], 2);
        let (p, q) = floor_torsion_certificates(&s, &ideal(1, &[&[4]])).unwrap();
        assert_eq!((p, q), (2, 2));

        let full = GradedRing::standard_graded(2).restrict_full();
        let (p, _q) = floor_torsion_certificates(&full, &ideal(2, &[&[2, 1]])).unwrap();
        assert_eq!(p, 2);

        let (p, q) = floor_torsion_certificates(&full, &MonomialIdeal::unit(2)).unwrap();
        assert_eq!((p, q), (0, 0));

        assert!(matches!(
            floor_torsion_certificates(&full, &MonomialIdeal::zero(2)),
            Err(Error::ZeroIdeal)
        ));
    }

    #[test]
    fn nil_index_integers_mod() {
        // brute force over Z/12: nilpotents and their power sets
        let n = 12u64;
        let nilpotents: Vec<u64> = (0..n)
            .filter(|&x| {
                let mut cur = x % n;
                for _ in 0..8 {
                    if cur == 0 {
                        return true;
                    }
                    cur = cur * x % n;
                }
                cur == 0
            })
            .collect();
        assert_eq!(nilpotents, vec![0, 6]);
        let mut level: Vec<u64> = nilpotents.clone();
        let mut e = 1;
        while level.iter().any(|&x| x != 0) {
            let mut next = Vec::new();
            for &a in &level {
                for &b in &nilpotents {
                    next.push(a * b % n);
                }
            }
            next.sort_unstable();
            next.dedup();
            level = next;
            e += 1;
        }
        assert_eq!(e, 2);
        assert_eq!(
            nil_index(&BaseRing::IntegersMod { modulus: 12 }),
            NilIndex::Finite(2)
        );
        assert_eq!(
            nil_index(&BaseRing::IntegersMod { modulus: 6 }),
            NilIndex::Finite(1)
        );
        assert_eq!(
            nil_index(&BaseRing::IntegersMod { modulus: 8 }),
            NilIndex::Finite(3)
        );
    }

    #[test]
    fn nil_index_truncated_polynomial() {
        // brute force: products of nilpotent generators in
        // Q[y1,y2,y3]/(y1, y2^2, y3^3); monomial (a,b,c) survives iff a<1,b<2,c<3
        let exps = [1u32, 2, 3];
        let survives = |m: &[u32; 3]| m.iter().zip(&exps).all(|(a, e)| a < e);
        let mut longest = 0;
        for a in 0..=4u32 {
            for b in 0..=4u32 {
                for c in 0..=4u32 {
                    if survives(&[a, b, c]) && a + b + c > longest {
                        longest = a + b + c;
                    }
                }
            }
        }
        assert_eq!(longest, 3); // witness y2 * y3^2
        assert_eq!(
            nil_index(&BaseRing::TruncatedPolynomial {
                exponents: vec![1, 2, 3]
            }),
            NilIndex::Finite(u64::from(longest) + 1)
        );
        assert_eq!(
            nil_index(&BaseRing::TruncatedPolynomial {
                exponents: vec![1, 1]
            }),
            NilIndex::Finite(1)
        );
    }

    #[test]
    fn nil_index_families() {
        assert_eq!(nil_index(&BaseRing::Zero), NilIndex::Finite(0));
        assert_eq!(
            nil_index(&BaseRing::Field { characteristic: 0 }),
            NilIndex::Finite(1)
        );
        assert_eq!(nil_index(&BaseRing::Integers), NilIndex::Finite(1));
        assert_eq!(
            nil_index(&BaseRing::SquareZeroFamily { unbounded: true }),
            NilIndex::Finite(2)
        );
        assert_eq!(
            nil_index(&BaseRing::TruncatedFamilyUnbounded),
            NilIndex::Infinite
        );
        for n in 1..=10 {
            let w = truncated_family_nil_witness(n).unwrap();
            assert_eq!(w.truncation_level, n + 1);
            assert!(w.exponent < w.variable);
        }
    }

    #[test]
    fn floor_radical_equivalence() {
        assert!(floor_equals_radical_torsion(&BaseRing::Field {
            characteristic: 7
        }));
        assert!(!floor_equals_radical_torsion(
            &BaseRing::TruncatedFamilyUnbounded
        ));
        assert!(floor_equals_radical_torsion(&BaseRing::SquareZeroFamily {
            unbounded: true
        }));
    }

    #[test]
    fn radical_power_examples() {
        let a = ideal(1, &[&[2]]);
        assert_eq!(
            radical_power_in_ideal(&BaseRing::Field { characteristic: 0 }, &a).unwrap(),
            Some(2)
        );
        assert_eq!(
            radical_power_in_ideal(&BaseRing::IntegersMod { modulus: 12 }, &a).unwrap(),
            Some(3)
        );
        assert_eq!(
            radical_power_in_ideal(&BaseRing::TruncatedFamilyUnbounded, &a).unwrap(),
            None
        );
        assert!(matches!(
            radical_power_in_ideal(&BaseRing::Integers, &MonomialIdeal::zero(1)),
            Err(Error::ImproperIdeal)
        ));
        assert!(matches!(
            radical_power_in_ideal(&BaseRing::Integers, &MonomialIdeal::unit(1)),
            Err(Error::ImproperIdeal)
        ));
    }

    #[test]
    fn radical_power_termwise_oracle() {
        // over Z/12, expand (nil + floor)^n termwise: the power lands in the
        // ideal once every nonvanishing nilpotent level leaves enough floor
        let base = BaseRing::IntegersMod { modulus: 12 };
        let a = ideal(1, &[&[2]]);
        let nil = nil_index(&base).finite().unwrap() as u32;
        let floor = a.floor();
        let mut oracle = None;
        'n: for n in 0..10u32 {
            for k in 0..=n.min(nil.saturating_sub(1)) {
                if !a.contains_ideal(&floor.power(n - k)).unwrap() {
                    continue 'n;
                }
            }
            if n < nil {
                // a shorter power still carries a bare nilpotent term
                continue;
            }
            oracle = Some(n);
            break;
        }
        assert_eq!(oracle, Some(3));
        assert_eq!(radical_power_in_ideal(&base, &a).unwrap(), Some(3));
    }

    #[test]
    fn witness_examples() {
        let f = IdealFamily {
            scale: 1,
            offset: 0,
        };
        let (level, w) = no_containment_witness(&f, 3).unwrap();
        assert_eq!(level, 4);
        assert_eq!(w, Exponent::new(vec![0, 0, 0, 3]));
        let trunc = f.truncate(level).unwrap();
        assert!(trunc.floor().power(3).contains_monomial(&w).unwrap());
        assert!(!trunc.contains_monomial(&w).unwrap());

        let (level, w) = no_containment_witness(&f, 1).unwrap();
        assert_eq!(level, 2);
        assert_eq!(w, Exponent::new(vec![0, 1]));

        let constant = IdealFamily {
            scale: 0,
            offset: 1,
        };
        assert!(matches!(
            no_containment_witness(&constant, 1),
            Err(Error::BoundedFamily)
        ));
    }

    #[test]
    fn monomials_in_radical() {
        let a = ideal(2, &[&[2, 1]]);
        let base = BaseRing::TruncatedPolynomial {
            exponents: vec![2, 3],
        };
        let inside = Exponent::new(vec![1, 1]);
        let outside = Exponent::new(vec![0, 1]);
        assert!(radical_contains_monomial(&base, &a, &inside).unwrap());
        assert!(!radical_contains_monomial(&base, &a, &outside).unwrap());
        assert!(radical_contains_monomial(&BaseRing::Zero, &a, &outside).unwrap());
    }
}
