//! Fan combinatorics and the Cox side of the pipeline: validation of
//! simplicial fans, the ray-pairing grading group, the Cartier subgroup,
//! complement monomials per cone with their minimal restricted powers, the
//! irrelevant ideal, the floor identity over a finite-index degree subgroup,
//! and the flat-degree report driven by the Cech machinery.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;

use crate::cech::{degsupp_window, Coefficients, CohomologyReport, GradedModule};
use crate::error::{Error, Result};
use crate::lattice::{column_echelon_form, kernel_basis, FgAbelianGroup, IntMatrix, Subgroup};
use crate::monomial::{power_containment_exists, Exponent, MonomialIdeal};
use crate::restriction::{GradedRing, RestrictedRing};
use crate::torsion::floor_torsion_certificates;

/// Raw fan input before validation.
#[derive(Debug, Clone)]
pub struct FanData {
    pub rank: usize,
    pub rays: Vec<Vec<i64>>,
    pub cones: Vec<Vec<usize>>,
}

/// Validated simplicial fan: primitive pairwise-distinct rays, cones closed
/// under faces and sorted by dimension then ray indices.
#[derive(Debug, Clone)]
pub struct Fan {
    rank: usize,
    rays: Vec<Vec<BigInt>>,
    cones: Vec<Vec<usize>>,
    max_cones: Vec<Vec<usize>>,
    warnings: Vec<String>,
}

impl Fan {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rays(&self) -> &[Vec<BigInt>] {
        &self.rays
    }

    /// All cones including the trivial one, ordered by (dimension, indices).
    pub fn cones(&self) -> &[Vec<usize>] {
        &self.cones
    }

    pub fn max_cones(&self) -> &[Vec<usize>] {
        &self.max_cones
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }
}

fn primitivize(ray: &[i64]) -> Result<(Vec<BigInt>, bool)> {
    let mut g: u64 = 0;
    for &v in ray {
        g = g.gcd(&v.unsigned_abs());
    }
    if g == 0 {
        return Err(Error::InvalidFan("zero ray cannot be primitivized".into()));
    }
    let scaled: Vec<BigInt> = ray.iter().map(|&v| BigInt::from(v / g as i64)).collect();
    Ok((scaled, g > 1))
}

/// Whether `x` lies in the cone spanned by linearly independent rays.
fn in_simplicial_cone(rays: &[Vec<BigInt>], rank: usize, x: &[BigInt]) -> Result<bool> {
    if rays.is_empty() {
        return Ok(x.iter().all(Zero::is_zero));
    }
    let mut aug = IntMatrix::zeros(rank, rays.len() + 1);
    for (j, r) in rays.iter().enumerate() {
        for i in 0..rank {
            aug.set(i, j, r[i].clone());
        }
    }
    for i in 0..rank {
        aug.set(i, rays.len(), -x[i].clone());
    }
    let k = kernel_basis(&aug);
    if k.cols() == 0 {
        return Ok(false); // not even in the linear span
    }
    if k.cols() > 1 {
        return Err(Error::Internal(
            "simplicial cone rays were dependent".into(),
        ));
    }
    let t = k.get(rays.len(), 0).clone();
    if t.is_zero() {
        return Ok(false);
    }
    Ok((0..rays.len()).all(|i| !(k.get(i, 0) * &t).is_negative()))
}

/// Checks that two simplicial cones meet exactly in the cone on their common
/// rays, by enumerating the extreme rays of the intersection.
fn intersection_is_common_face(fan: &Fan, s: &[usize], t: &[usize]) -> Result<bool> {
    let common: Vec<usize> = s.iter().copied().filter(|i| t.contains(i)).collect();
    let common_rays: Vec<Vec<BigInt>> = common.iter().map(|&i| fan.rays[i].clone()).collect();
    let p = s.len();
    let total = p + t.len();
    if total == 0 {
        return Ok(true);
    }
    let mut m = IntMatrix::zeros(fan.rank, total);
    for (j, &r) in s.iter().enumerate() {
        for i in 0..fan.rank {
            m.set(i, j, fan.rays[r][i].clone());
        }
    }
    for (j, &r) in t.iter().enumerate() {
        for i in 0..fan.rank {
            m.set(i, p + j, -fan.rays[r][i].clone());
        }
    }
    // support-minimal nonnegative kernel vectors generate the intersection
    for mask in 1u32..(1 << total) {
        let support: Vec<usize> = (0..total).filter(|i| mask & (1 << i) != 0).collect();
        let mut ms = IntMatrix::zeros(fan.rank, support.len());
        for (nj, &j) in support.iter().enumerate() {
            for i in 0..fan.rank {
                ms.set(i, nj, m.get(i, j).clone());
            }
        }
        let k = kernel_basis(&ms);
        if k.cols() != 1 {
            continue;
        }
        let gen = k.column(0);
        if gen.iter().any(Zero::is_zero) {
            continue; // handled at a smaller support
        }
        let positive = gen.iter().all(|v| v.is_positive());
        let negative = gen.iter().all(|v| v.is_negative());
        if !positive && !negative {
            continue;
        }
        let mut x = vec![BigInt::zero(); fan.rank];
        for (nj, &j) in support.iter().enumerate() {
            if j < p {
                let c = if positive {
                    gen[nj].clone()
                } else {
                    -gen[nj].clone()
                };
                for i in 0..fan.rank {
                    x[i] += &c * fan.rays[s[j]].get(i).expect("rank");
                }
            }
        }
        if !in_simplicial_cone(&common_rays, fan.rank, &x)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Validates and normalizes a fan: primitivizes rays, closes the cone list
/// under faces, verifies simpliciality, strong convexity and that pairwise
/// intersections of maximal cones are common faces.
pub fn validate_fan(data: &FanData) -> Result<Fan> {
    let mut warnings = Vec::new();
    let mut rays = Vec::with_capacity(data.rays.len());
    for (i, ray) in data.rays.iter().enumerate() {
        if ray.len() != data.rank {
            return Err(Error::InvalidFan(format!("ray {i} has wrong length")));
        }
        let (prim, changed) = primitivize(ray)?;
        if changed {
            warnings.push(format!("ray {i} was not primitive; scaled down"));
        }
        rays.push(prim);
    }
    for i in 0..rays.len() {
        for j in i + 1..rays.len() {
            if rays[i] == rays[j] {
                return Err(Error::InvalidFan(format!("rays {i} and {j} coincide")));
            }
        }
    }
    let mut checked: Vec<Vec<usize>> = Vec::new();
    for cone in &data.cones {
        let mut c = cone.clone();
        c.sort_unstable();
        c.dedup();
        if c.iter().any(|&r| r >= rays.len()) {
            return Err(Error::InvalidFan(format!(
                "cone {cone:?} uses an unknown ray"
            )));
        }
        // independence of the cone's rays, before the subset expansion below
        let mut m = IntMatrix::zeros(data.rank, c.len());
        for (j, &r) in c.iter().enumerate() {
            for i in 0..data.rank {
                m.set(i, j, rays[r][i].clone());
            }
        }
        let k = kernel_basis(&m);
        if k.cols() > 0 {
            let line = k.cols() == 1 && {
                let gen = k.column(0);
                gen.iter().all(|v| !v.is_negative()) || gen.iter().all(|v| !v.is_positive())
            };
            return Err(Error::InvalidFan(if line {
                format!("cone {cone:?} is not strongly convex")
            } else {
                format!("cone {cone:?} is not simplicial")
            }));
        }
        checked.push(c);
    }
    let mut cone_set: BTreeSet<Vec<usize>> = BTreeSet::new();
    cone_set.insert(Vec::new());
    for c in &checked {
        // faces of a simplicial cone are the subsets of its rays
        for mask in 0u32..(1 << c.len()) {
            let face: Vec<usize> = (0..c.len())
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| c[i])
                .collect();
            cone_set.insert(face);
        }
    }
    let mut cones: Vec<Vec<usize>> = cone_set.into_iter().collect();
    cones.sort_by_key(|c| (c.len(), c.clone()));
    let max_cones: Vec<Vec<usize>> = cones
        .iter()
        .filter(|c| {
            !cones
                .iter()
                .any(|d| d.len() > c.len() && c.iter().all(|r| d.contains(r)))
        })
        .cloned()
        .collect();
    let fan = Fan {
        rank: data.rank,
        rays,
        cones,
        max_cones,
        warnings,
    };
    for (i, s) in fan.max_cones.iter().enumerate() {
        for t in fan.max_cones.iter().skip(i + 1) {
            if !intersection_is_common_face(&fan, s, t)? {
                return Err(Error::InvalidFan(format!(
                    "cones {s:?} and {t:?} do not intersect in a common face"
                )));
            }
        }
    }
    Ok(fan)
}

/// Grading data of the Cox ring: the class group presented on one variable
/// per ray, its Cartier subgroup, and a chosen finite-index degree subgroup.
#[derive(Debug, Clone)]
pub struct CoxData {
    group: FgAbelianGroup,
    deg_map: IntMatrix,
    pic: Subgroup,
    b: Subgroup,
}

impl CoxData {
    pub fn group(&self) -> &FgAbelianGroup {
        &self.group
    }

    /// Columns are the ambient classes of the ray variables.
    pub fn deg_map(&self) -> &IntMatrix {
        &self.deg_map
    }

    pub fn pic(&self) -> &Subgroup {
        &self.pic
    }

    pub fn b(&self) -> &Subgroup {
        &self.b
    }

    /// Replaces the degree subgroup; it must have finite index.
    pub fn with_subgroup(self, generators: IntMatrix) -> Result<CoxData> {
        let b = Subgroup::new(self.group.clone(), generators)?;
        if !b.index().is_finite() {
            return Err(Error::InfiniteIndex);
        }
        Ok(CoxData { b, ..self })
    }

    /// Restricts degrees to the Cartier subgroup.
    pub fn with_pic_subgroup(self) -> Result<CoxData> {
        let gens = self.pic.generators().clone();
        self.with_subgroup(gens)
    }

    pub fn b_in_pic(&self) -> Result<bool> {
        let gens = self.b.generators();
        for j in 0..gens.cols() {
            if !self.pic.contains(&gens.column(j))? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Class group of the fan: one variable per ray modulo the ray pairing, with
/// the Cartier subgroup precomputed and the degree subgroup defaulted to the
/// whole group.
pub fn cox_grading(fan: &Fan) -> Result<CoxData> {
    let s1 = fan.rays().len();
    // relation column j collects the j-th coordinates of all rays
    let mut relations = IntMatrix::zeros(s1, fan.rank());
    for (r, ray) in fan.rays().iter().enumerate() {
        for j in 0..fan.rank() {
            relations.set(r, j, ray[j].clone());
        }
    }
    let group = FgAbelianGroup::new(s1, relations)?;
    let deg_map = IntMatrix::identity(s1);
    let pic = pic_subgroup(fan, &group)?;
    let b = Subgroup::full(group.clone());
    Ok(CoxData {
        group,
        deg_map,
        pic,
        b,
    })
}

fn lattice_intersection(a: &IntMatrix, b: &IntMatrix) -> Result<IntMatrix> {
    let mut neg = b.clone();
    for i in 0..neg.rows() {
        for j in 0..neg.cols() {
            let v = -neg.get(i, j);
            neg.set(i, j, v);
        }
    }
    let stacked = a.hstack(&neg)?;
    let kernel = kernel_basis(&stacked);
    let mut top = IntMatrix::zeros(a.cols(), kernel.cols());
    for i in 0..a.cols() {
        for j in 0..kernel.cols() {
            top.set(i, j, kernel.get(i, j).clone());
        }
    }
    Ok(column_echelon_form(&a.mul(&top)?))
}

/// Cartier subgroup: divisors whose restriction to every maximal cone is an
/// integral pairing with some lattice point, intersected over the cones and
/// pushed into the class group.
pub fn pic_subgroup(fan: &Fan, group: &FgAbelianGroup) -> Result<Subgroup> {
    let s1 = fan.rays().len();
    let mut lattice = IntMatrix::identity(s1);
    for cone in fan.max_cones() {
        // pairings realizable on the cone: column span of its ray matrix rows
        let mut pairing = IntMatrix::zeros(cone.len(), fan.rank());
        for (i, &r) in cone.iter().enumerate() {
            for j in 0..fan.rank() {
                pairing.set(i, j, fan.rays()[r][j].clone());
            }
        }
        let image = column_echelon_form(&pairing);
        let mut gens: Vec<Vec<BigInt>> = Vec::new();
        for j in 0..image.cols() {
            let mut v = vec![BigInt::zero(); s1];
            for (i, &r) in cone.iter().enumerate() {
                v[r] = image.get(i, j).clone();
            }
            gens.push(v);
        }
        for r in 0..s1 {
            if !cone.contains(&r) {
                let mut v = vec![BigInt::zero(); s1];
                v[r] = BigInt::one();
                gens.push(v);
            }
        }
        let preimage = IntMatrix::from_columns(s1, &gens)?;
        lattice = lattice_intersection(&lattice, &preimage)?;
    }
    Subgroup::new(group.clone(), lattice)
}

/// Product of the ray variables outside the cone, as a 0/1 exponent.
pub fn complement_monomial(fan: &Fan, cone: &[usize]) -> Exponent {
    Exponent::new(
        (0..fan.rays().len())
            .map(|r| u32::from(!cone.contains(&r)))
            .collect(),
    )
}

/// Least power putting the complement monomial of the cone into the degree
/// subgroup; zero exactly for the degenerate cone containing every ray.
pub fn minimal_cone_power(cox: &CoxData, zhat: &Exponent) -> Result<u32> {
    if zhat.is_zero() {
        return Ok(0);
    }
    let deg: Vec<BigInt> = zhat.entries().iter().map(|&e| BigInt::from(e)).collect();
    let ord = cox.b.element_order(&deg)?;
    u32::try_from(&ord).map_err(|_| Error::IndexOverflow)
}

/// Irrelevant ideal: generated by the complement monomials of all cones; the
/// maximal cones dominate after minimalization.
pub fn irrelevant_ideal(fan: &Fan) -> MonomialIdeal {
    let gens = fan
        .cones()
        .iter()
        .map(|c| complement_monomial(fan, c))
        .collect();
    MonomialIdeal::new(fan.rays().len(), gens).expect("uniform length")
}

/// The Cox ring with its class-group grading.
pub fn cox_ring(fan: &Fan, cox: &CoxData) -> Result<GradedRing> {
    GradedRing::new(fan.rays().len(), cox.group.clone(), cox.deg_map.clone())
}

/// The Cox ring restricted to the chosen degree subgroup.
pub fn restricted_cox_ring(fan: &Fan, cox: &CoxData) -> Result<RestrictedRing> {
    cox_ring(fan, cox)?.restrict(cox.b.clone())
}

#[derive(Debug, Clone)]
pub struct FloorIdentityReport {
    /// Ideal generated by the cone complement monomials raised to their
    /// minimal restricted powers, over all cones.
    pub cone_power_ideal: MonomialIdeal,
    /// The irrelevant ideal restricted to the degree subgroup.
    pub restricted_irrelevant: MonomialIdeal,
    /// Subring floor built on the restricted irrelevant ideal's generators.
    pub subring_floor: MonomialIdeal,
    /// Antichain equality of the cone power ideal with the subring floor.
    pub equal: bool,
    /// Least powers putting the restricted floor of the irrelevant ideal into
    /// its restriction and into its subring floor.
    pub floor_certificates: (u32, u32),
    /// Least power putting the restricted irrelevant ideal into the cone
    /// power ideal; the reverse containment holds at the first power.
    pub restricted_power_in_cone_ideal: u32,
}

/// Verifies the floor identity for the irrelevant ideal over the chosen
/// degree subgroup and certifies that both ideals define the same torsion
/// functor.
pub fn floor_identity(fan: &Fan, cox: &CoxData) -> Result<FloorIdentityReport> {
    let ring = restricted_cox_ring(fan, cox)?;
    let irrelevant = irrelevant_ideal(fan);
    let restricted = ring.restrict_ideal(&irrelevant)?;
    let mut powers = Vec::new();
    for cone in fan.cones() {
        let zhat = complement_monomial(fan, cone);
        let m = minimal_cone_power(cox, &zhat)?;
        powers.push(zhat.scale(m));
    }
    let cone_power_ideal = MonomialIdeal::new(fan.rays().len(), powers)?;
    let subring_floor = ring.floor_in_subring(&restricted)?;
    let equal = cone_power_ideal == subring_floor;
    let floor_certificates = floor_torsion_certificates(&ring, &irrelevant)?;
    let restricted_power_in_cone_ideal = power_containment_exists(&restricted, &cone_power_ideal)?
        .ok_or_else(|| {
            Error::Internal("restricted irrelevant ideal must reach the cone powers".into())
        })?;
    if !restricted.contains_ideal(&cone_power_ideal)? {
        return Err(Error::Internal(
            "cone power ideal escapes the restricted irrelevant ideal".into(),
        ));
    }
    Ok(FloorIdentityReport {
        cone_power_ideal,
        restricted_irrelevant: restricted,
        subring_floor,
        equal,
        floor_certificates,
        restricted_power_in_cone_ideal,
    })
}

#[derive(Debug, Clone)]
pub struct FlatDegreeReport {
    pub cohomology: CohomologyReport,
    /// Whether the degree subgroup sits inside the Cartier subgroup (the
    /// hypothesis under which flat eligibility transfers to sheaves).
    pub b_in_pic: bool,
    /// Window degrees inside the degree subgroup carrying no cohomology.
    pub flat_eligible: Vec<Vec<BigInt>>,
}

/// Degree-support report for a quotient module over the restricted Cox ring
/// with respect to the cone complement powers, listing the window degrees
/// eligible for flatness conclusions.
#[allow(clippy::too_many_arguments)]
pub fn flat_degree_report(
    fan: &Fan,
    cox: &CoxData,
    coefficients: Coefficients,
    quotient: MonomialIdeal,
    shift: Option<Vec<BigInt>>,
    window: &[Vec<BigInt>],
    box_radius: u32,
    threads: usize,
) -> Result<FlatDegreeReport> {
    let ring = restricted_cox_ring(fan, cox)?;
    let module = GradedModule::new(ring, coefficients, quotient, shift)?;
    let mut seq = Vec::new();
    for cone in fan.cones() {
        let zhat = complement_monomial(fan, cone);
        let m = minimal_cone_power(cox, &zhat)?;
        seq.push(zhat.scale(m));
    }
    let cohomology = degsupp_window(&module, &seq, window, box_radius, threads)?;
    let mut flat_eligible = Vec::new();
    for deg in &cohomology.flat_eligible {
        if cox.b.contains(deg)? {
            flat_eligible.push(deg.clone());
        }
    }
    let b_in_pic = cox.b_in_pic()?;
    Ok(FlatDegreeReport {
        cohomology,
        b_in_pic,
        flat_eligible,
    })
}

/// Fan of the projective line: rays 1 and -1.
pub fn fan_projective_line() -> Fan {
    validate_fan(&FanData {
        rank: 1,
        rays: vec![vec![1], vec![-1]],
        cones: vec![vec![0], vec![1]],
    })
    .expect("valid fan")
}

/// Fan of the projective plane.
pub fn fan_projective_plane() -> Fan {
    validate_fan(&FanData {
        rank: 2,
        rays: vec![vec![1, 0], vec![0, 1], vec![-1, -1]],
        cones: vec![vec![0, 1], vec![1, 2], vec![0, 2]],
    })
    .expect("valid fan")
}

/// Fan of the product of two projective lines (the four quadrants).
pub fn fan_product_of_lines() -> Fan {
    validate_fan(&FanData {
        rank: 2,
        rays: vec![vec![1, 0], vec![-1, 0], vec![0, 1], vec![0, -1]],
        cones: vec![vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]],
    })
    .expect("valid fan")
}

/// Fan of the weighted projective plane with weights 1, 1, 2 (up to ray
/// order); the middle ray pairing is non-unimodular on one cone.
pub fn fan_weighted_112() -> Fan {
    validate_fan(&FanData {
        rank: 2,
        rays: vec![vec![1, 0], vec![0, 1], vec![-1, -2]],
        cones: vec![vec![0, 1], vec![1, 2], vec![0, 2]],
    })
    .expect("valid fan")
}
