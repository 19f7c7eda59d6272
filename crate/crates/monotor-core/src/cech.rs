//! Graded Cech cocomplexes of monomial-quotient modules with respect to a
//! finite monomial sequence, sliced degree by degree.
//!
//! Every graded piece that is potentially infinite is enumerated inside an
//! explicit exponent box; a component that touches the box boundary is
//! flagged as truncated, and a degree report is additionally marked stable
//! when enlarging the box by one step changes no cohomology rank.
//!
//! The complex is the extended one: position 0 is the module itself, so the
//! 0-th cohomology is the submodule killed by powers of the sequence entries.
//! The differential from component `J` to `J + {j}` carries the sign
//! `(-1)^(number of entries of J below j)`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{rank, smith_normal_form, IntMatrix};
use crate::monomial::{Exponent, MonomialIdeal};
use crate::restriction::RestrictedRing;

/// Coefficient ring over which ranks are taken.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coefficients {
    /// Field of the given characteristic (0 or a prime).
    Field {
        characteristic: u64,
    },
    Integers,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            return false;
        }
        p += 1;
    }
    true
}

/// Monomial-quotient module over a (possibly restricted) graded ring: the
/// quotient of the ring by a monomial ideal, with degrees translated by an
/// optional shift. A monomial with exponent `m` sits in degree `psi(m) + shift`.
#[derive(Debug, Clone)]
pub struct GradedModule {
    ring: RestrictedRing,
    coefficients: Coefficients,
    quotient_by: MonomialIdeal,
    shift: Vec<BigInt>,
}

impl GradedModule {
    pub fn new(
        ring: RestrictedRing,
        coefficients: Coefficients,
        quotient_by: MonomialIdeal,
        shift: Option<Vec<BigInt>>,
    ) -> Result<Self> {
        if quotient_by.vars() != ring.vars() {
            return Err(Error::DimensionMismatch(
                "quotient ideal over a different ring".into(),
            ));
        }
        let ambient = ring.base().group().ambient_rank();
        let shift = shift.unwrap_or_else(|| vec![BigInt::zero(); ambient]);
        if shift.len() != ambient {
            return Err(Error::DimensionMismatch("shift length".into()));
        }
        if let Coefficients::Field { characteristic } = coefficients {
            if characteristic != 0 && !is_prime(characteristic) {
                return Err(Error::UnsupportedBase(format!(
                    "field characteristic {characteristic} is neither zero nor prime"
                )));
            }
        }
        for g in quotient_by.gens() {
            if !ring.contains_monomial(g)? {
                return Err(Error::DegreeOutsideSubgroup);
            }
        }
        Ok(GradedModule {
            ring,
            coefficients,
            quotient_by,
            shift,
        })
    }

    pub fn ring(&self) -> &RestrictedRing {
        &self.ring
    }

    pub fn coefficients(&self) -> Coefficients {
        self.coefficients
    }

    pub fn quotient_by(&self) -> &MonomialIdeal {
        &self.quotient_by
    }

    pub fn shift(&self) -> &[BigInt] {
        &self.shift
    }
}

/// Surviving monomial basis of a localized graded piece.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalizationBasis {
    /// Laurent exponent vectors in lexicographic order.
    pub monomials: Vec<Vec<i64>>,
    /// Some survivor touched the box boundary.
    pub truncated: bool,
}

/// Least shift making `m` nonnegative along `t`, then the shifted exponent.
fn nonnegative_translate(m: &[i64], t: &Exponent) -> Exponent {
    let mut k: i64 = 0;
    for (i, &ti) in t.entries().iter().enumerate() {
        if ti > 0 && m[i] < 0 {
            let need = (-m[i] + i64::from(ti) - 1) / i64::from(ti);
            k = k.max(need);
        }
    }
    Exponent::new(
        m.iter()
            .zip(t.entries())
            .map(|(&mi, &ti)| u32::try_from(mi + k * i64::from(ti)).expect("translate nonnegative"))
            .collect(),
    )
}

/// Monomial basis of the degree-`g` piece of the localization of the module
/// at the monomial `t`, enumerated inside the box. A Laurent monomial is zero
/// in the localization exactly when its nonnegative translate along `t` lies
/// in the stable colon fixpoint of the quotient ideal with respect to `t`.
pub fn localization_basis(
    module: &GradedModule,
    t: &Exponent,
    degree: &[BigInt],
    box_radius: u32,
) -> Result<LocalizationBasis> {
    let sat = module
        .quotient_by
        .saturation(&MonomialIdeal::principal(t.clone()))?;
    localization_basis_with(module, t, &sat, degree, box_radius)
}

fn localization_basis_with(
    module: &GradedModule,
    t: &Exponent,
    sat: &MonomialIdeal,
    degree: &[BigInt],
    box_radius: u32,
) -> Result<LocalizationBasis> {
    let n = module.ring.vars();
    if t.len() != n {
        return Err(Error::DimensionMismatch(
            "localization monomial length".into(),
        ));
    }
    let group = module.ring.base().group();
    if degree.len() != group.ambient_rank() {
        return Err(Error::DimensionMismatch("degree vector length".into()));
    }
    let b = i64::from(box_radius);
    let lows: Vec<i64> = t
        .entries()
        .iter()
        .map(|&ti| if ti > 0 { -b } else { 0 })
        .collect();
    let mut monomials = Vec::new();
    let mut truncated = false;
    let mut cur = lows.clone();
    if n == 0 {
        // no variables: the single empty monomial in degree zero
        let deg = module.ring.base().degree_laurent(&[])?;
        let shifted: Vec<BigInt> = deg.iter().zip(&module.shift).map(|(a, s)| a + s).collect();
        if group.same_class(&shifted, degree)? && !sat.contains_monomial(&Exponent::zero(0))? {
            monomials.push(Vec::new());
        }
        return Ok(LocalizationBasis {
            monomials,
            truncated: false,
        });
    }
    'enumerate: loop {
        let deg = module.ring.base().degree_laurent(&cur)?;
        let shifted: Vec<BigInt> = deg.iter().zip(&module.shift).map(|(a, s)| a + s).collect();
        if group.same_class(&shifted, degree)? && module.ring.subgroup().contains(&deg)? {
            let translate = nonnegative_translate(&cur, t);
            if !sat.contains_monomial(&translate)? {
                // a survivor on the box boundary means the enumeration of
                // this piece may be incomplete
                if cur
                    .iter()
                    .enumerate()
                    .any(|(i, &v)| v == b || (lows[i] == -b && v == -b))
                {
                    truncated = true;
                }
                monomials.push(cur.clone());
            }
        }
        // odometer, last coordinate fastest, so output is lex ordered
        let mut i = n;
        loop {
            if i == 0 {
                break 'enumerate;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] <= b {
                break;
            }
            cur[i] = lows[i];
        }
    }
    Ok(LocalizationBasis {
        monomials,
        truncated,
    })
}

/// One localized component of a slice: the subset of sequence indices and the
/// surviving basis at the slice degree.
#[derive(Debug, Clone)]
pub struct SliceComponent {
    pub subset: Vec<usize>,
    pub basis: LocalizationBasis,
}

/// Degree slice of the Cech cocomplex: per position the localized components
/// (subsets in colexicographic order) and the sign differentials between
/// consecutive positions.
#[derive(Debug, Clone)]
pub struct CechSlice {
    pub degree: Vec<BigInt>,
    pub components: Vec<Vec<SliceComponent>>,
    pub differentials: Vec<IntMatrix>,
    pub truncated: bool,
}

impl CechSlice {
    pub fn position_dims(&self) -> Vec<usize> {
        self.components
            .iter()
            .map(|comps| comps.iter().map(|c| c.basis.monomials.len()).sum())
            .collect()
    }
}

/// All `k`-subsets of `0..n` in colexicographic order, entries ascending.
pub fn subsets_colex(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for top in (k - 1)..n {
        for mut s in subsets_colex(top, k - 1) {
            s.push(top);
            out.push(s);
        }
    }
    out
}

fn sequence_product(seq: &[Exponent], subset: &[usize], vars: usize) -> Exponent {
    let mut acc = Exponent::zero(vars);
    for &j in subset {
        acc = acc.add(&seq[j]);
    }
    acc
}

/// Assembles the degree-`g` slice of the Cech cocomplex of the module with
/// respect to the sequence.
pub fn assemble_slice(
    module: &GradedModule,
    seq: &[Exponent],
    degree: &[BigInt],
    box_radius: u32,
) -> Result<CechSlice> {
    if seq.is_empty() {
        return Err(Error::DimensionMismatch("empty Cech sequence".into()));
    }
    let vars = module.ring.vars();
    for t in seq {
        if t.len() != vars {
            return Err(Error::DimensionMismatch("sequence monomial length".into()));
        }
        if !module.ring.contains_monomial(t)? {
            return Err(Error::DegreeOutsideSubgroup);
        }
    }
    let n = seq.len();
    let mut components: Vec<Vec<SliceComponent>> = Vec::with_capacity(n + 1);
    let mut saturations: Vec<Vec<MonomialIdeal>> = Vec::with_capacity(n + 1);
    let mut truncated = false;
    for i in 0..=n {
        let mut comps = Vec::new();
        let mut sats = Vec::new();
        for subset in subsets_colex(n, i) {
            let t = sequence_product(seq, &subset, vars);
            let sat = module
                .quotient_by
                .saturation(&MonomialIdeal::principal(t.clone()))?;
            let basis = localization_basis_with(module, &t, &sat, degree, box_radius)?;
            truncated |= basis.truncated;
            comps.push(SliceComponent { subset, basis });
            sats.push(sat);
        }
        components.push(comps);
        saturations.push(sats);
    }

    let mut differentials = Vec::with_capacity(n);
    for i in 0..n {
        let source = &components[i];
        let target = &components[i + 1];
        let target_sats = &saturations[i + 1];
        let src_dim: usize = source.iter().map(|c| c.basis.monomials.len()).sum();
        let tgt_dim: usize = target.iter().map(|c| c.basis.monomials.len()).sum();
        // subset -> (component index, basis offset)
        let mut lookup = std::collections::BTreeMap::new();
        let mut offset = 0;
        for (ci, comp) in target.iter().enumerate() {
            lookup.insert(comp.subset.clone(), (ci, offset));
            offset += comp.basis.monomials.len();
        }
        let mut d = IntMatrix::zeros(tgt_dim, src_dim);
        let mut src_offset = 0;
        for comp in source {
            for (bi, lam) in comp.basis.monomials.iter().enumerate() {
                let col = src_offset + bi;
                for j in 0..n {
                    if comp.subset.contains(&j) {
                        continue;
                    }
                    let mut key = comp.subset.clone();
                    let pos = key.iter().take_while(|&&k| k < j).count();
                    key.insert(pos, j);
                    let (ci, toff) = lookup[&key];
                    let t_target = sequence_product(seq, &key, vars);
                    let translate = nonnegative_translate(lam, &t_target);
                    if target_sats[ci].contains_monomial(&translate)? {
                        continue; // dies in the larger localization
                    }
                    let row = match target[ci].basis.monomials.binary_search(lam) {
                        Ok(k) => toff + k,
                        Err(_) => {
                            return Err(Error::Internal(
                                "surviving image missing from target basis".into(),
                            ))
                        }
                    };
                    let sign = if pos % 2 == 0 {
                        BigInt::one()
                    } else {
                        -BigInt::one()
                    };
                    d.set(row, col, sign);
                }
            }
            src_offset += comp.basis.monomials.len();
        }
        differentials.push(d);
    }
    if cfg!(debug_assertions) {
        for w in differentials.windows(2) {
            debug_assert!(w[1].mul(&w[0]).expect("chain shapes").is_zero(), "d.d != 0");
        }
    }
    Ok(CechSlice {
        degree: degree.to_vec(),
        components,
        differentials,
        truncated,
    })
}

/// Cohomology of a slice position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CohomologyGroup {
    FieldRank(usize),
    Integer {
        free_rank: usize,
        torsion: Vec<BigUint>,
    },
}

impl CohomologyGroup {
    pub fn is_zero(&self) -> bool {
        match self {
            CohomologyGroup::FieldRank(r) => *r == 0,
            CohomologyGroup::Integer { free_rank, torsion } => {
                *free_rank == 0 && torsion.is_empty()
            }
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            CohomologyGroup::FieldRank(r) => *r,
            CohomologyGroup::Integer { free_rank, .. } => *free_rank,
        }
    }
}

fn rank_mod_p(m: &IntMatrix, p: u64) -> usize {
    let rows = m.rows();
    let cols = m.cols();
    let pm = BigInt::from(p);
    let mut a: Vec<Vec<u64>> = (0..rows)
        .map(|i| {
            (0..cols)
                .map(|j| {
                    let mut v = m.get(i, j) % &pm;
                    if v.is_negative() {
                        v += &pm;
                    }
                    u64::try_from(v).expect("reduced residue")
                })
                .collect()
        })
        .collect();
    let inv = |x: u64| -> u64 {
        // Fermat inverse; p is prime
        let mut base = x % p;
        let mut e = p - 2;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = ((u128::from(acc) * u128::from(base)) % u128::from(p)) as u64;
            }
            base = ((u128::from(base) * u128::from(base)) % u128::from(p)) as u64;
            e >>= 1;
        }
        acc
    };
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..rows).find(|&i| !a[i][c].is_multiple_of(p)) else {
            continue;
        };
        a.swap(r, pivot);
        let scale = inv(a[r][c]);
        for j in c..cols {
            a[r][j] = ((u128::from(a[r][j]) * u128::from(scale)) % u128::from(p)) as u64;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_multiple_of(p) {
                let f = a[i][c];
                for j in c..cols {
                    let sub = (u128::from(f) * u128::from(a[r][j])) % u128::from(p);
                    a[i][j] = ((u128::from(a[i][j]) + u128::from(p) * u128::from(p) - sub)
                        % u128::from(p)) as u64;
                }
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Cohomology groups of an assembled slice over the given coefficients.
pub fn slice_cohomology(slice: &CechSlice, coefficients: Coefficients) -> Vec<CohomologyGroup> {
    let dims = slice.position_dims();
    let ranks: Vec<usize> = slice
        .differentials
        .iter()
        .map(|d| match coefficients {
            Coefficients::Field { characteristic: 0 } | Coefficients::Integers => rank(d),
            Coefficients::Field { characteristic } => rank_mod_p(d, characteristic),
        })
        .collect();
    (0..dims.len())
        .map(|i| {
            let out_rank = if i < ranks.len() { ranks[i] } else { 0 };
            let in_rank = if i > 0 { ranks[i - 1] } else { 0 };
            let free = dims[i] - out_rank - in_rank;
            match coefficients {
                Coefficients::Field { .. } => CohomologyGroup::FieldRank(free),
                Coefficients::Integers => {
                    // torsion of ker/im splits off the cokernel of the
                    // incoming differential
                    let torsion = if i == 0 {
                        Vec::new()
                    } else {
                        smith_normal_form(&slice.differentials[i - 1])
                            .diagonal()
                            .iter()
                            .filter(|d| !d.is_zero() && !d.is_one())
                            .map(|d| d.magnitude().clone())
                            .collect()
                    };
                    CohomologyGroup::Integer {
                        free_rank: free,
                        torsion,
                    }
                }
            }
        })
        .collect()
}

/// Per-degree cohomology report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeCohomology {
    pub degree: Vec<BigInt>,
    pub groups: Vec<CohomologyGroup>,
    pub position_dims: Vec<usize>,
    /// Some component touched the exponent box boundary.
    pub truncated: bool,
    /// Enlarging the box by one step left every group unchanged.
    pub stable: bool,
}

impl DegreeCohomology {
    pub fn is_nonzero(&self) -> bool {
        self.groups.iter().any(|g| !g.is_zero())
    }
}

/// Cohomology of the degree-`g` slice, with the stabilization check run at
/// `box + 1`.
pub fn cohomology_at_degree(
    module: &GradedModule,
    seq: &[Exponent],
    degree: &[BigInt],
    box_radius: u32,
) -> Result<DegreeCohomology> {
    let slice = assemble_slice(module, seq, degree, box_radius)?;
    let groups = slice_cohomology(&slice, module.coefficients());
    let bigger = assemble_slice(module, seq, degree, box_radius + 1)?;
    let groups_bigger = slice_cohomology(&bigger, module.coefficients());
    Ok(DegreeCohomology {
        degree: degree.to_vec(),
        position_dims: slice.position_dims(),
        truncated: slice.truncated,
        stable: groups == groups_bigger,
        groups,
    })
}

/// Windowed degree-support report: which degrees in the window carry nonzero
/// cohomology, and the complement that is eligible for flatness conclusions.
#[derive(Debug, Clone)]
pub struct CohomologyReport {
    pub entries: Vec<DegreeCohomology>,
    pub degsupp: Vec<Vec<BigInt>>,
    pub flat_eligible: Vec<Vec<BigInt>>,
}

/// Runs [`cohomology_at_degree`] over every degree in the window, fanning out
/// over at most `threads` workers; the merged output is ordered by degree and
/// identical to the sequential result.
pub fn degsupp_window(
    module: &GradedModule,
    seq: &[Exponent],
    window: &[Vec<BigInt>],
    box_radius: u32,
    threads: usize,
) -> Result<CohomologyReport> {
    let mut degrees: Vec<Vec<BigInt>> = window.to_vec();
    degrees.sort();
    degrees.dedup();
    let workers = threads.max(1).min(degrees.len().max(1));
    let entries: Vec<DegreeCohomology> = if workers <= 1 {
        degrees
            .iter()
            .map(|g| cohomology_at_degree(module, seq, g, box_radius))
            .collect::<Result<_>>()?
    } else {
        let chunk = degrees.len().div_ceil(workers);
        let mut out: Vec<Option<Result<DegreeCohomology>>> =
            (0..degrees.len()).map(|_| None).collect();
        std::thread::scope(|scope| {
            let mut handles = Vec::new();
            for (w, block) in degrees.chunks(chunk).enumerate() {
                let start = w * chunk;
                handles.push(scope.spawn(move || {
                    block
                        .iter()
                        .enumerate()
                        .map(|(i, g)| (start + i, cohomology_at_degree(module, seq, g, box_radius)))
                        .collect::<Vec<_>>()
                }));
            }
            for h in handles {
                for (i, r) in h.join().expect("worker panicked") {
                    out[i] = Some(r);
                }
            }
        });
        out.into_iter()
            .map(|r| r.expect("all degrees computed"))
            .collect::<Result<_>>()?
    };
    let mut degsupp = Vec::new();
    let mut flat_eligible = Vec::new();
    for e in &entries {
        if e.is_nonzero() {
            degsupp.push(e.degree.clone());
        } else {
            flat_eligible.push(e.degree.clone());
        }
    }
    Ok(CohomologyReport {
        entries,
        degsupp,
        flat_eligible,
    })
}

/// Degreewise comparison of the 0-th Cech cohomology with the colon-fixpoint
/// computation of the classes killed by powers of the sequence ideal.
///
/// The two routes are independent: one takes kernels of the assembled sign
/// differential, the other enumerates the stable colon fixpoint.
pub fn h0_equals_torsion(
    module: &GradedModule,
    seq: &[Exponent],
    window: &[Vec<BigInt>],
    box_radius: u32,
) -> Result<bool> {
    let seq_ideal = MonomialIdeal::new(module.ring.vars(), seq.to_vec())?;
    let sat = module.quotient_by.saturation(&seq_ideal)?;
    for degree in window {
        let slice = assemble_slice(module, seq, degree, box_radius)?;
        if slice.components[0][0].basis.truncated {
            return Err(Error::TruncationCollision(
                "module piece touches the box; enlarge the box to decide".into(),
            ));
        }
        let d0 = &slice.differentials[0];
        let h0_rank = slice.position_dims()[0] - rank(d0);
        // saturation route: surviving classes killed by a power of the ideal
        let killed: Vec<&Vec<i64>> = slice.components[0][0]
            .basis
            .monomials
            .iter()
            .filter(|m| {
                let e = Exponent::new(
                    m.iter()
                        .map(|&v| u32::try_from(v).expect("module exponents"))
                        .collect(),
                );
                sat.contains_monomial(&e).expect("same ring")
            })
            .collect();
        if killed.len() != h0_rank {
            return Ok(false);
        }
        // the kernel is spanned by the zero columns of the differential
        let zero_cols: Vec<&Vec<i64>> = slice.components[0][0]
            .basis
            .monomials
            .iter()
            .enumerate()
            .filter(|(c, _)| (0..d0.rows()).all(|r| d0.get(r, *c).is_zero()))
            .map(|(_, m)| m)
            .collect();
        if zero_cols != killed {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Flatness of one graded piece over the integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FlatnessPiece {
    pub flat: bool,
    pub truncated: bool,
}

/// The degree-`g` piece of a monomial quotient over the integers is free on
/// its surviving monomials, hence flat; the box flag records whether the
/// enumeration was complete.
pub fn flatness_check_piece(
    module: &GradedModule,
    degree: &[BigInt],
    box_radius: u32,
) -> Result<FlatnessPiece> {
    if !matches!(module.coefficients(), Coefficients::Integers) {
        return Err(Error::UnsupportedBase(
            "flatness checks run over the integers".into(),
        ));
    }
    let basis = localization_basis(
        module,
        &Exponent::zero(module.ring.vars()),
        degree,
        box_radius,
    )?;
    Ok(FlatnessPiece {
        flat: true,
        truncated: basis.truncated,
    })
}

/// Torsion-freeness (= flatness) of the cokernel of an explicit integer
/// presentation matrix.
pub fn cokernel_is_torsion_free(presentation: &IntMatrix) -> bool {
    smith_normal_form(presentation)
        .diagonal()
        .iter()
        .all(|d| d.is_zero() || d.is_one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::restriction::GradedRing;

    fn ideal(vars: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(
            vars,
            gens.iter().map(|g| Exponent::new(g.to_vec())).collect(),
        )
        .unwrap()
    }

    fn module_q(vars: usize, quot: MonomialIdeal) -> GradedModule {
        GradedModule::new(
            GradedRing::standard_graded(vars).restrict_full(),
            Coefficients::Field { characteristic: 0 },
            quot,
            None,
        )
        .unwrap()
    }

    fn deg(g: i64) -> Vec<BigInt> {
        vec![BigInt::from(g)]
    }

    #[test]
    fn colex_subsets() {
        assert_eq!(
            subsets_colex(4, 2),
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![1, 2],
                vec![0, 3],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(subsets_colex(3, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn localization_negative_degree() {
        let m = module_q(1, MonomialIdeal::zero(1));
        let b = localization_basis(&m, &Exponent::new(vec![1]), &deg(-2), 6).unwrap();
        assert_eq!(b.monomials, vec![vec![-2]]);
        assert!(!b.truncated);
    }

    #[test]
    fn localization_vanishes() {
        let m = module_q(1, ideal(1, &[&[3]]));
        for g in [-3i64, 0, 2, 5] {
            let b = localization_basis(&m, &Exponent::new(vec![1]), &deg(g), 6).unwrap();
            assert!(b.monomials.is_empty());
        }
    }

    #[test]
    fn localization_truncates() {
        let m = module_q(2, MonomialIdeal::zero(2));
        let b = localization_basis(&m, &Exponent::new(vec![1, 0]), &deg(0), 6).unwrap();
        let expected: Vec<Vec<i64>> = (0..=6).map(|k| vec![-k, k]).collect();
        let mut sorted = expected.clone();
        sorted.sort();
        assert_eq!(b.monomials, sorted);
        assert!(b.truncated);
    }

    #[test]
    fn single_variable_cohomology() {
        let m = module_q(1, MonomialIdeal::zero(1));
        let seq = [Exponent::new(vec![1])];
        let r = cohomology_at_degree(&m, &seq, &deg(-1), 6).unwrap();
        assert_eq!(
            r.groups,
            vec![CohomologyGroup::FieldRank(0), CohomologyGroup::FieldRank(1)]
        );
        assert!(r.stable);
        let r0 = cohomology_at_degree(&m, &seq, &deg(0), 6).unwrap();
        assert_eq!(
            r0.groups,
            vec![CohomologyGroup::FieldRank(0), CohomologyGroup::FieldRank(0)]
        );
    }

    #[test]
    fn killed_module_is_h0() {
        let m = module_q(1, ideal(1, &[&[1]]));
        let seq = [Exponent::new(vec![1])];
        let r = cohomology_at_degree(&m, &seq, &deg(0), 6).unwrap();
        assert_eq!(
            r.groups,
            vec![CohomologyGroup::FieldRank(1), CohomologyGroup::FieldRank(0)]
        );
        let r2 = cohomology_at_degree(&m, &seq, &deg(2), 6).unwrap();
        assert!(!r2.is_nonzero());
    }

    #[test]
    fn punctured_plane_pattern() {
        let m = module_q(2, MonomialIdeal::zero(2));
        let seq = [Exponent::new(vec![1, 0]), Exponent::new(vec![0, 1])];
        let window: Vec<Vec<BigInt>> = (-5..=5).map(deg).collect();
        let report = degsupp_window(&m, &seq, &window, 8, 1).unwrap();
        let expected: Vec<Vec<BigInt>> = (-5..=-2).map(deg).collect();
        assert_eq!(report.degsupp, expected);
        for e in &report.entries {
            let g = i64::try_from(&e.degree[0]).unwrap();
            let top = e.groups.last().unwrap().rank();
            let expected_top = if g <= -2 { (-g - 1) as usize } else { 0 };
            assert_eq!(top, expected_top, "degree {g}");
            assert_eq!(e.groups[0].rank(), 0);
            assert_eq!(e.groups[1].rank(), 0);
            assert!(e.stable);
        }
    }

    #[test]
    fn parallel_window_matches_sequential() {
        let m = module_q(2, ideal(2, &[&[1, 1]]));
        let seq = [Exponent::new(vec![1, 0])];
        let window: Vec<Vec<BigInt>> = (-4..=4).map(deg).collect();
        let seq_report = degsupp_window(&m, &seq, &window, 6, 1).unwrap();
        let par_report = degsupp_window(&m, &seq, &window, 6, 4).unwrap();
        assert_eq!(seq_report.entries, par_report.entries);
        assert_eq!(seq_report.degsupp, par_report.degsupp);
    }

    #[test]
    fn exact_slices_have_zero_euler() {
        let m = module_q(2, MonomialIdeal::zero(2));
        let seq = [Exponent::new(vec![1, 0]), Exponent::new(vec![0, 1])];
        for g in -1..=4 {
            let r = cohomology_at_degree(&m, &seq, &deg(g), 7).unwrap();
            assert!(!r.is_nonzero());
            let euler: i64 = r
                .position_dims
                .iter()
                .enumerate()
                .map(|(i, &d)| if i % 2 == 0 { d as i64 } else { -(d as i64) })
                .sum();
            assert_eq!(euler, 0, "degree {g}");
        }
    }

    #[test]
    fn redundant_sequence_entry_preserves_ranks() {
        let m = module_q(2, MonomialIdeal::zero(2));
        let seq2 = [Exponent::new(vec![1, 0]), Exponent::new(vec![0, 1])];
        let seq3 = [
            Exponent::new(vec![1, 0]),
            Exponent::new(vec![0, 1]),
            Exponent::new(vec![1, 1]),
        ];
        for g in -4..=2 {
            let a = cohomology_at_degree(&m, &seq2, &deg(g), 7).unwrap();
            let b = cohomology_at_degree(&m, &seq3, &deg(g), 7).unwrap();
            let ranks_a: Vec<usize> = a.groups.iter().map(CohomologyGroup::rank).collect();
            let mut ranks_b: Vec<usize> = b.groups.iter().map(CohomologyGroup::rank).collect();
            while ranks_b.len() > ranks_a.len() {
                assert_eq!(ranks_b.pop(), Some(0));
            }
            assert_eq!(ranks_a, ranks_b, "degree {g}");
        }
    }

    #[test]
    fn differentials_compose_to_zero() {
        let m = module_q(3, ideal(3, &[&[1, 1, 0], &[0, 0, 2]]));
        let seq = [
            Exponent::new(vec![1, 0, 0]),
            Exponent::new(vec![0, 1, 0]),
            Exponent::new(vec![0, 0, 1]),
        ];
        for g in [-3i64, 0, 2] {
            let slice = assemble_slice(&m, &seq, &deg(g), 5).unwrap();
            for w in slice.differentials.windows(2) {
                assert!(w[1].mul(&w[0]).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn window_disjoint_from_support_is_empty() {
        let m = module_q(2, MonomialIdeal::zero(2));
        let seq = [Exponent::new(vec![1, 0]), Exponent::new(vec![0, 1])];
        let window: Vec<Vec<BigInt>> = (0..=4).map(deg).collect();
        let report = degsupp_window(&m, &seq, &window, 7, 1).unwrap();
        assert!(report.degsupp.is_empty());
        assert_eq!(report.flat_eligible.len(), 5);
    }

    #[test]
    fn h0_matches_saturation() {
        let m = module_q(2, ideal(2, &[&[1, 1]]));
        let window: Vec<Vec<BigInt>> = (-6..=6).map(deg).collect();
        assert!(h0_equals_torsion(&m, &[Exponent::new(vec![1, 0])], &window, 8).unwrap());

        let free = module_q(2, MonomialIdeal::zero(2));
        let seq = [Exponent::new(vec![1, 0]), Exponent::new(vec![0, 1])];
        assert!(h0_equals_torsion(&free, &seq, &window, 8).unwrap());

        // localizing at the unit monomial kills nothing and the kernel is zero
        assert!(h0_equals_torsion(&free, &[Exponent::zero(2)], &window, 8).unwrap());
    }

    #[test]
    fn h0_truncation_collision() {
        let m = module_q(2, MonomialIdeal::zero(2));
        let window = vec![deg(6)];
        let err = h0_equals_torsion(&m, &[Exponent::new(vec![1, 0])], &window, 6);
        assert!(matches!(err, Err(Error::TruncationCollision(_))));
    }

    #[test]
    fn rank_depends_on_characteristic() {
        let two = IntMatrix::from_rows_i64(&[vec![2]]).unwrap();
        assert_eq!(rank(&two), 1);
        assert_eq!(rank_mod_p(&two, 2), 0);
        assert_eq!(rank_mod_p(&two, 3), 1);
        let mixed = IntMatrix::from_rows_i64(&[vec![1, 1], vec![1, -1]]).unwrap();
        assert_eq!(rank(&mixed), 2);
        assert_eq!(rank_mod_p(&mixed, 2), 1);
    }

    #[test]
    fn prime_field_ranks_match_characteristic_zero_here() {
        // sign differentials of these small slices have unimodular minors,
        // so every prime gives the same ranks
        let m0 = module_q(2, ideal(2, &[&[2, 1]]));
        let mp = GradedModule::new(
            GradedRing::standard_graded(2).restrict_full(),
            Coefficients::Field { characteristic: 5 },
            ideal(2, &[&[2, 1]]),
            None,
        )
        .unwrap();
        let seq = [Exponent::new(vec![1, 0]), Exponent::new(vec![0, 1])];
        for g in -3i64..=3 {
            let a = cohomology_at_degree(&m0, &seq, &deg(g), 6).unwrap();
            let b = cohomology_at_degree(&mp, &seq, &deg(g), 6).unwrap();
            let ra: Vec<usize> = a.groups.iter().map(CohomologyGroup::rank).collect();
            let rb: Vec<usize> = b.groups.iter().map(CohomologyGroup::rank).collect();
            assert_eq!(ra, rb, "degree {g}");
        }
    }

    #[test]
    fn integer_flatness() {
        let m = GradedModule::new(
            GradedRing::standard_graded(1).restrict_full(),
            Coefficients::Integers,
            ideal(1, &[&[2]]),
            None,
        )
        .unwrap();
        let p = flatness_check_piece(&m, &deg(1), 6).unwrap();
        assert!(p.flat);
        assert!(!p.truncated);
        // zero piece is flat
        let p = flatness_check_piece(&m, &deg(5), 6).unwrap();
        assert!(p.flat);

        let two = IntMatrix::from_rows_i64(&[vec![2]]).unwrap();
        assert!(!cokernel_is_torsion_free(&two));
        let unit = IntMatrix::from_rows_i64(&[vec![1]]).unwrap();
        assert!(cokernel_is_torsion_free(&unit));
        assert!(cokernel_is_torsion_free(&IntMatrix::zeros(2, 1)));
    }

    #[test]
    fn integer_cohomology_has_no_surprise_torsion() {
        let m = GradedModule::new(
            GradedRing::standard_graded(2).restrict_full(),
            Coefficients::Integers,
            MonomialIdeal::zero(2),
            None,
        )
        .unwrap();
        let seq = [Exponent::new(vec![1, 0]), Exponent::new(vec![0, 1])];
        let r = cohomology_at_degree(&m, &seq, &deg(-3), 7).unwrap();
        assert_eq!(
            r.groups[2],
            CohomologyGroup::Integer {
                free_rank: 2,
                torsion: vec![]
            }
        );
    }

    #[test]
    fn shifted_module_moves_degrees() {
        let shifted = GradedModule::new(
            GradedRing::standard_graded(1).restrict_full(),
            Coefficients::Field { characteristic: 0 },
            MonomialIdeal::zero(1),
            Some(vec![BigInt::from(2)]),
        )
        .unwrap();
        // monomial x^1 now sits in degree 3
        let b = localization_basis(&shifted, &Exponent::zero(1), &deg(3), 6).unwrap();
        assert_eq!(b.monomials, vec![vec![1]]);
    }

    #[test]
    fn rejects_bad_characteristic() {
        let err = GradedModule::new(
            GradedRing::standard_graded(1).restrict_full(),
            Coefficients::Field { characteristic: 6 },
            MonomialIdeal::zero(1),
            None,
        );
        assert!(matches!(err, Err(Error::UnsupportedBase(_))));
    }
}
