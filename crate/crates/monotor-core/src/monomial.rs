//! Monomial ideals in a finite polynomial ring, kept in canonical form: the
//! unique antichain of minimal generating exponents, sorted lexicographically.
//! Ideal equality is plain list equality. The empty generator list is the zero
//! ideal; the single all-zeros exponent is the unit ideal.

use crate::error::{Error, Result};

/// Exponent vector of a monomial; the componentwise order is divisibility.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exponent(Vec<u32>);

impl Exponent {
    pub fn new(entries: Vec<u32>) -> Self {
        Exponent(entries)
    }

    pub fn zero(n: usize) -> Self {
        Exponent(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Exponent) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Indices of the variables actually occurring.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter_map(|(i, &e)| (e > 0).then_some(i))
            .collect()
    }

    /// 0/1 vector of the support.
    pub fn squarefree_support(&self) -> Exponent {
        Exponent(self.0.iter().map(|&e| u32::from(e > 0)).collect())
    }

    pub fn add(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise `max(self - other, 0)`.
    pub fn saturating_sub(&self, other: &Exponent) -> Exponent {
        Exponent(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }

    /// Componentwise maximum (the lcm of the two monomials).
    pub fn sup(&self, other: &Exponent) -> Exponent {
        Exponent(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn scale(&self, k: u32) -> Exponent {
        Exponent(self.0.iter().map(|e| e * k).collect())
    }

    pub fn max_entry(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }
}

impl From<Vec<u32>> for Exponent {
    fn from(v: Vec<u32>) -> Self {
        Exponent(v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    vars: usize,
    gens: Vec<Exponent>,
}

impl MonomialIdeal {
    /// Canonicalizes an arbitrary generating set: drops multiples and
    /// duplicates, sorts lexicographically. Idempotent and insensitive to the
    /// input order.
    pub fn new(vars: usize, raw: Vec<Exponent>) -> Result<Self> {
        for g in &raw {
            if g.len() != vars {
                return Err(Error::DimensionMismatch(format!(
                    "generator has {} entries, ring has {vars} variables",
                    g.len()
                )));
            }
        }
        let mut sorted = raw;
        sorted.sort_by_key(|e| {
            (
                e.entries().iter().map(|&x| u64::from(x)).sum::<u64>(),
                e.clone(),
            )
        });
        let mut gens: Vec<Exponent> = Vec::new();
        for cand in sorted {
            if !gens.iter().any(|kept| kept.divides(&cand)) {
                gens.push(cand);
            }
        }
        gens.sort();
        Ok(MonomialIdeal { vars, gens })
    }

    pub fn zero(vars: usize) -> Self {
        MonomialIdeal {
            vars,
            gens: Vec::new(),
        }
    }

    pub fn unit(vars: usize) -> Self {
        MonomialIdeal {
            vars,
            gens: vec![Exponent::zero(vars)],
        }
    }

    /// Principal ideal generated by one monomial.
    pub fn principal(m: Exponent) -> Self {
        let vars = m.len();
        MonomialIdeal {
            vars,
            gens: vec![m],
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn gens(&self) -> &[Exponent] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_zero()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    fn check_vars(&self, other: &MonomialIdeal) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::DimensionMismatch(format!(
                "ideals over {} and {} variables",
                self.vars, other.vars
            )));
        }
        Ok(())
    }

    /// Squarefree supports of the minimal generators, re-minimalized.
    pub fn floor(&self) -> MonomialIdeal {
        let supports = self.gens.iter().map(Exponent::squarefree_support).collect();
        MonomialIdeal::new(self.vars, supports).expect("same variable count")
    }

    pub fn contains_monomial(&self, m: &Exponent) -> Result<bool> {
        if m.len() != self.vars {
            return Err(Error::DimensionMismatch(format!(
                "monomial has {} entries, ring has {} variables",
                m.len(),
                self.vars
            )));
        }
        Ok(self.gens.iter().any(|g| g.divides(m)))
    }

    /// Whether `self` contains `other` as an ideal.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_vars(other)?;
        for g in &other.gens {
            if !self.contains_monomial(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_vars(other)?;
        let mut raw = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                raw.push(a.add(b));
            }
        }
        MonomialIdeal::new(self.vars, raw)
    }

    /// `self^k`, with `self^0` the unit ideal for every ideal.
    pub fn power(&self, k: u32) -> MonomialIdeal {
        let mut acc = MonomialIdeal::unit(self.vars);
        for _ in 0..k {
            acc = acc.product(self).expect("same variable count");
        }
        acc
    }

    pub fn intersection(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_vars(other)?;
        let mut raw = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                raw.push(a.sup(b));
            }
        }
        MonomialIdeal::new(self.vars, raw)
    }

    /// Colon by a single monomial: `(self : m)`.
    pub fn colon(&self, m: &Exponent) -> Result<MonomialIdeal> {
        if m.len() != self.vars {
            return Err(Error::DimensionMismatch("colon divisor length".into()));
        }
        let raw = self.gens.iter().map(|g| g.saturating_sub(m)).collect();
        MonomialIdeal::new(self.vars, raw)
    }

    /// Colon by an ideal: intersection of the colons by its generators.
    /// The empty intersection (zero divisor ideal) is the unit ideal.
    pub fn colon_ideal(&self, a: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_vars(a)?;
        let mut acc = MonomialIdeal::unit(self.vars);
        for (i, g) in a.gens.iter().enumerate() {
            let part = self.colon(g)?;
            acc = if i == 0 {
                part
            } else {
                acc.intersection(&part)?
            };
        }
        Ok(acc)
    }

    /// Stable colon fixpoint `(self : a^infinity)`; terminates because the
    /// colon chain is ascending. The monomials of `saturation / self` are
    /// exactly the classes killed by a power of `a` in the quotient by `self`.
    pub fn saturation(&self, a: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_vars(a)?;
        let mut cur = self.clone();
        loop {
            let next = cur.colon_ideal(a)?;
            if next == cur {
                return Ok(cur);
            }
            cur = next;
        }
    }

    fn max_exponent(&self) -> u32 {
        self.gens.iter().map(Exponent::max_entry).max().unwrap_or(0)
    }
}

/// Least `n` with `a^n` contained in `b`, if any power is.
///
/// Existence is decided combinatorially first: a power lands in `b` iff every
/// minimal generator of `a` has its support dominated by the support of some
/// minimal generator of `b`. When a power exists, the least one is located by
/// upward search and is at most `|gens(a)| * max_exponent(b)`.
pub fn power_containment_exists(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<Option<u32>> {
    if a.vars() != b.vars() {
        return Err(Error::DimensionMismatch(
            "power containment over different rings".into(),
        ));
    }
    if b.is_unit() {
        return Ok(Some(0));
    }
    if a.is_zero() {
        return Ok(Some(1));
    }
    for mu in a.gens() {
        let mu_supp = mu.squarefree_support();
        if !b
            .gens()
            .iter()
            .any(|nu| nu.squarefree_support().divides(&mu_supp))
        {
            return Ok(None);
        }
    }
    let bound = (a.gens().len() as u32) * b.max_exponent().max(1);
    let mut cur = a.clone();
    for n in 1..=bound {
        if b.contains_ideal(&cur)? {
            return Ok(Some(n));
        }
        cur = cur.product(a)?;
    }
    Err(Error::Internal(format!(
        "power containment existed but was not found within bound {bound}"
    )))
}

/// Family of principal-power ideals with an affine exponent rule
/// `e(i) = scale * i + offset` for the 1-based variable index `i`.
/// Finite truncations realize its behavior at any size.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdealFamily {
    pub scale: u64,
    pub offset: i64,
}

impl IdealFamily {
    pub fn exponent_at(&self, i: usize) -> i64 {
        (self.scale as i64) * (i as i64) + self.offset
    }

    /// The ideal generated by `X_i^{e(i)}` for `i in 1..=n`, in `n` variables.
    pub fn truncate(&self, n: usize) -> Result<MonomialIdeal> {
        let mut gens = Vec::with_capacity(n);
        for i in 1..=n {
            let e = self.exponent_at(i);
            if e < 0 {
                return Err(Error::NegativeExponent(i));
            }
            let mut v = vec![0u32; n];
            v[i - 1] = u32::try_from(e).map_err(|_| Error::IndexOverflow)?;
            gens.push(Exponent::new(v));
        }
        MonomialIdeal::new(n, gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(vars: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(
            vars,
            gens.iter().map(|g| Exponent::new(g.to_vec())).collect(),
        )
        .unwrap()
    }

    #[test]
    fn minimalize_drops_multiples() {
        let a = ideal(2, &[&[2, 0], &[4, 0], &[1, 1]]);
        assert_eq!(a, ideal(2, &[&[1, 1], &[2, 0]]));
    }

    #[test]
    fn minimalize_zero_and_unit() {
        assert!(MonomialIdeal::new(2, vec![]).unwrap().is_zero());
        let u = ideal(2, &[&[0, 0], &[3, 1]]);
        assert!(u.is_unit());
    }

    #[test]
    fn floor_examples() {
        let a = ideal(3, &[&[2, 1, 0], &[0, 0, 3]]);
        assert_eq!(a.floor(), ideal(3, &[&[1, 1, 0], &[0, 0, 1]]));
        assert_eq!(ideal(1, &[&[4]]).floor(), ideal(1, &[&[1]]));
        assert!(MonomialIdeal::zero(2).floor().is_zero());
    }

    #[test]
    fn membership() {
        let a = ideal(2, &[&[2, 1]]);
        assert!(a.contains_monomial(&Exponent::new(vec![3, 1])).unwrap());
        assert!(!a.contains_monomial(&Exponent::new(vec![2, 0])).unwrap());
        let b = ideal(3, &[&[1, 1, 0], &[0, 0, 1]]);
        assert!(b.contains_monomial(&Exponent::new(vec![0, 0, 5])).unwrap());
    }

    #[test]
    fn product_and_power() {
        let x = ideal(2, &[&[1, 0]]);
        let y = ideal(2, &[&[0, 1]]);
        assert_eq!(x.product(&y).unwrap(), ideal(2, &[&[1, 1]]));
        let m = ideal(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(m.power(2), ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]));
        assert!(ideal(2, &[&[5, 5]]).power(0).is_unit());
        assert!(MonomialIdeal::zero(2).power(0).is_unit());
    }

    #[test]
    fn containment() {
        assert!(ideal(1, &[&[1]])
            .contains_ideal(&ideal(1, &[&[2]]))
            .unwrap());
        assert!(!ideal(1, &[&[2]])
            .contains_ideal(&ideal(1, &[&[1]]))
            .unwrap());
        assert!(MonomialIdeal::unit(2)
            .contains_ideal(&ideal(2, &[&[9, 9]]))
            .unwrap());
        assert!(MonomialIdeal::unit(2)
            .contains_ideal(&MonomialIdeal::zero(2))
            .unwrap());
    }

    #[test]
    fn colon_and_saturation() {
        let c = ideal(2, &[&[2, 1]]);
        assert_eq!(
            c.colon(&Exponent::new(vec![1, 0])).unwrap(),
            ideal(2, &[&[1, 1]])
        );
        // saturating by x: two colon steps then stable
        let once = c.colon_ideal(&ideal(2, &[&[1, 0]])).unwrap();
        let twice = once.colon_ideal(&ideal(2, &[&[1, 0]])).unwrap();
        let sat = c.saturation(&ideal(2, &[&[1, 0]])).unwrap();
        assert_eq!(twice, sat);
        assert_eq!(sat, ideal(2, &[&[0, 1]]));
        assert_eq!(twice.colon_ideal(&ideal(2, &[&[1, 0]])).unwrap(), twice);

        // saturating the unit ideal changes nothing
        let unit = MonomialIdeal::unit(2);
        assert!(unit.saturation(&ideal(2, &[&[1, 0]])).unwrap().is_unit());
        // colon fixpoint by the unit ideal is the ideal itself
        assert_eq!(c.saturation(&unit).unwrap(), c);
        // saturating by the zero ideal gives the unit ideal
        assert!(c.saturation(&MonomialIdeal::zero(2)).unwrap().is_unit());
    }

    #[test]
    fn power_containment_examples() {
        let a = ideal(1, &[&[2]]);
        let b = ideal(1, &[&[3]]);
        assert_eq!(power_containment_exists(&a, &b).unwrap(), Some(2));
        assert_eq!(
            power_containment_exists(&ideal(2, &[&[1, 0]]), &ideal(2, &[&[0, 1]])).unwrap(),
            None
        );
        let a = ideal(3, &[&[1, 1, 0], &[0, 0, 1]]);
        let b = ideal(3, &[&[1, 0, 0], &[0, 0, 5]]);
        // brute-force oracle: expand products of n generators directly
        let mut brute = None;
        'outer: for n in 1u32..=6 {
            fn products(gens: &[Exponent], n: u32) -> Vec<Exponent> {
                if n == 0 {
                    return vec![Exponent::zero(gens[0].len())];
                }
                let rest = products(gens, n - 1);
                let mut out = Vec::new();
                for r in &rest {
                    for g in gens {
                        out.push(r.add(g));
                    }
                }
                out
            }
            for p in products(a.gens(), n) {
                if !b.contains_monomial(&p).unwrap() {
                    continue 'outer;
                }
            }
            brute = Some(n);
            break;
        }
        assert_eq!(brute, Some(5));
        assert_eq!(power_containment_exists(&a, &b).unwrap(), Some(5));
    }

    #[test]
    fn power_containment_degenerate() {
        let b = ideal(1, &[&[3]]);
        assert_eq!(
            power_containment_exists(&MonomialIdeal::zero(1), &b).unwrap(),
            Some(1)
        );
        assert_eq!(
            power_containment_exists(&MonomialIdeal::unit(1), &b).unwrap(),
            None
        );
        assert_eq!(
            power_containment_exists(&b, &MonomialIdeal::unit(1)).unwrap(),
            Some(0)
        );
        assert_eq!(
            power_containment_exists(&b, &MonomialIdeal::zero(1)).unwrap(),
            None
        );
        assert_eq!(
            power_containment_exists(&MonomialIdeal::zero(1), &MonomialIdeal::zero(1)).unwrap(),
            Some(1)
        );
    }

    #[test]
    fn family_truncations() {
        let f = IdealFamily {
            scale: 1,
            offset: 0,
        };
        let t = f.truncate(3).unwrap();
        assert_eq!(t, ideal(3, &[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]]));
        let const1 = IdealFamily {
            scale: 0,
            offset: 1,
        };
        assert_eq!(const1.truncate(2).unwrap(), ideal(2, &[&[1, 0], &[0, 1]]));
        let const2 = IdealFamily {
            scale: 0,
            offset: 2,
        };
        assert_eq!(const2.truncate(1).unwrap(), ideal(1, &[&[2]]));
        let neg = IdealFamily {
            scale: 0,
            offset: -1,
        };
        assert!(matches!(neg.truncate(1), Err(Error::NegativeExponent(1))));
    }
}
