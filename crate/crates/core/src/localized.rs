//! Lattices of the form `⊕_i Z[1/pi_i]` inside rational vector spaces.
//!
//! A [`ModuleShape`] records which primes are inverted in each coordinate.
//! The operations decide membership, whether a matrix maps the lattice into
//! itself, and — the workhorse of the certifier — whether it maps the
//! lattice *onto* itself. Surjectivity is decided prime by prime: a prime
//! `p` splits the coordinates into `p`-divisible ones (where the local
//! module is a rational vector space) and free ones (where it is the
//! `p`-local integers), and the map is onto at `p` exactly when the
//! divisible directions are covered by divisible images and the free
//! images generate the free quotient lattice over the `p`-local integers.

use alloc::collections::BTreeSet;
use alloc::fmt;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Zero};

use crate::matrix::RationalMatrix;
use crate::primes::PrimeSet;
use crate::rational::{self, Rational};

/// The ring a single lattice coordinate ranges over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoordinateRing {
    /// The zero ring; the coordinate is pinned to 0.
    Zero,
    /// The localization `Z[1/pi]`.
    Inv(PrimeSet),
}

impl CoordinateRing {
    pub fn is_zero(&self) -> bool {
        matches!(self, CoordinateRing::Zero)
    }

    pub fn primes(&self) -> Option<&PrimeSet> {
        match self {
            CoordinateRing::Zero => None,
            CoordinateRing::Inv(pi) => Some(pi),
        }
    }
}

impl fmt::Display for CoordinateRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoordinateRing::Zero => write!(f, "0"),
            CoordinateRing::Inv(pi) if pi.is_empty() => write!(f, "Z"),
            CoordinateRing::Inv(pi) => write!(f, "Z[1/{}]", pi),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShapeError {
    LengthMismatch { expected: usize, got: usize },
    NotSquare { rows: usize, cols: usize },
    /// Precondition of [`map_surjective`]: the matrix must preserve the
    /// lattice and be invertible.
    NotAnEndomorphism,
}

impl fmt::Display for ShapeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapeError::LengthMismatch { expected, got } => {
                write!(f, "expected a vector of length {}, got {}", expected, got)
            }
            ShapeError::NotSquare { rows, cols } => {
                write!(f, "matrix is {}x{}, expected square of the shape rank", rows, cols)
            }
            ShapeError::NotAnEndomorphism => write!(f, "not an endomorphism of the module"),
        }
    }
}

/// A finite direct sum `⊕_i R_i` with each `R_i` a [`CoordinateRing`],
/// viewed inside `Q^rank`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleShape {
    coords: Vec<CoordinateRing>,
}

impl ModuleShape {
    pub fn new(coords: Vec<CoordinateRing>) -> Self {
        ModuleShape { coords }
    }

    /// A shape with no zero-ring coordinates.
    pub fn of_prime_sets<I: IntoIterator<Item = PrimeSet>>(rings: I) -> Self {
        ModuleShape {
            coords: rings.into_iter().map(CoordinateRing::Inv).collect(),
        }
    }

    /// `Z^n`.
    pub fn integral(rank: usize) -> Self {
        Self::of_prime_sets((0..rank).map(|_| PrimeSet::empty()))
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coordinate(&self, i: usize) -> &CoordinateRing {
        &self.coords[i]
    }

    pub fn coordinates(&self) -> &[CoordinateRing] {
        &self.coords
    }

    pub fn has_zero_coordinates(&self) -> bool {
        self.coords.iter().any(CoordinateRing::is_zero)
    }

    /// Membership of a rational vector in the lattice.
    pub fn contains(&self, v: &[Rational]) -> Result<bool, ShapeError> {
        if v.len() != self.rank() {
            return Err(ShapeError::LengthMismatch { expected: self.rank(), got: v.len() });
        }
        Ok(self.coords.iter().zip(v).all(|(ring, q)| match ring {
            CoordinateRing::Zero => q.is_zero(),
            CoordinateRing::Inv(pi) => rational::in_localization(q, pi),
        }))
    }
}

impl fmt::Display for ModuleShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

/// `q * Z[1/src] ⊆ Z[1/dst]`, i.e. `q = 0` or (`den(q) ⊆ dst` and
/// `src ⊆ dst`).
pub fn conductor_allows(q: &Rational, src: &PrimeSet, dst: &PrimeSet) -> bool {
    q.is_zero() || (rational::in_localization(q, dst) && src.is_subset_of(dst))
}

/// Decides `A * shape ⊆ shape`, columnwise on ring generators.
pub fn map_preserves(a: &RationalMatrix, shape: &ModuleShape) -> Result<bool, ShapeError> {
    if !a.is_square() || a.rows() != shape.rank() {
        return Err(ShapeError::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    for i in 0..shape.rank() {
        let src = match shape.coordinate(i) {
            CoordinateRing::Zero => continue, // zero module maps anywhere
            CoordinateRing::Inv(pi) => pi,
        };
        for u in 0..shape.rank() {
            let q = a.at(u, i);
            let ok = match shape.coordinate(u) {
                CoordinateRing::Zero => q.is_zero(),
                CoordinateRing::Inv(dst) => conductor_allows(q, src, dst),
            };
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The shape of `Hom(src, dst)` coordinatized by matrix entries `(u, i)`
/// (row-major: target coordinate `u` outer, source coordinate `i` inner).
/// Entry `(u, i)` ranges over the conductor `(dst_u : src_i)`, which is
/// `dst_u` when `src_i ⊆ dst_u` and the zero ring otherwise.
pub fn hom_shape(src: &ModuleShape, dst: &ModuleShape) -> ModuleShape {
    let mut coords = Vec::with_capacity(src.rank() * dst.rank());
    for u in dst.coordinates() {
        for i in src.coordinates() {
            let ring = match (i, u) {
                (CoordinateRing::Inv(pi), CoordinateRing::Inv(pu)) if pi.is_subset_of(pu) => {
                    CoordinateRing::Inv(pu.clone())
                }
                _ => CoordinateRing::Zero,
            };
            coords.push(ring);
        }
    }
    ModuleShape::new(coords)
}

/// Row echelon basis of a rational subspace, pivots in fixed coordinate
/// order; used to span and quotient by the `p`-divisible part.
struct Echelon {
    dim: usize,
    /// (pivot column, row with pivot normalized to 1), sorted by pivot.
    rows: Vec<(usize, Vec<Rational>)>,
}

impl Echelon {
    fn new(dim: usize) -> Self {
        Echelon { dim, rows: Vec::new() }
    }

    /// Reduces `v` against the current rows (eliminating pivot coordinates).
    fn residual(&self, mut v: Vec<Rational>) -> Vec<Rational> {
        for (pivot, row) in &self.rows {
            if !v[*pivot].is_zero() {
                let factor = v[*pivot].clone();
                for c in 0..self.dim {
                    let t = &factor * &row[c];
                    v[c] -= t;
                }
            }
        }
        v
    }

    /// Inserts `v` if independent; returns whether the rank grew.
    fn insert(&mut self, v: Vec<Rational>) -> bool {
        let v = self.residual(v);
        let Some(pivot) = v.iter().position(|q| !q.is_zero()) else {
            return false;
        };
        let lead = v[pivot].clone();
        let normalized: Vec<Rational> = v.iter().map(|q| q / &lead).collect();
        // Back-substitute to keep the basis reduced and deterministic.
        for (_, row) in self.rows.iter_mut() {
            if !row[pivot].is_zero() {
                let factor = row[pivot].clone();
                for c in 0..self.dim {
                    let t = &factor * &normalized[c];
                    row[c] -= t;
                }
            }
        }
        self.rows.push((pivot, normalized));
        self.rows.sort_by_key(|(p, _)| *p);
        true
    }

    fn contains(&self, v: Vec<Rational>) -> bool {
        self.residual(v).iter().all(Zero::is_zero)
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    fn pivot_columns(&self) -> BTreeSet<usize> {
        self.rows.iter().map(|(p, _)| *p).collect()
    }

    /// Coordinates of the residual of `v` on the non-pivot columns, in
    /// increasing column order — coordinates for the quotient space.
    fn quotient_coordinates(&self, v: Vec<Rational>) -> Vec<Rational> {
        let pivots = self.pivot_columns();
        let r = self.residual(v);
        (0..self.dim)
            .filter(|c| !pivots.contains(c))
            .map(|c| r[c].clone())
            .collect()
    }
}

fn unit_vector(dim: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); dim];
    v[i] = Rational::one();
    v
}

/// `p`-adic valuation of the full-rank lattice spanned over the `p`-local
/// integers by `columns` inside `Q^dim`, relative to the unit lattice:
/// the valuation of the determinant of any local basis. Column operations
/// with `p`-integral multipliers preserve the lattice; pivots are chosen
/// by minimal valuation, ties by lowest row then column index. `None` if
/// the columns do not span.
fn local_lattice_valuation(columns: Vec<Vec<Rational>>, dim: usize, p: u64) -> Option<i64> {
    if dim == 0 {
        return Some(0);
    }
    let mut cols: Vec<Vec<Rational>> = columns;
    let mut live_rows: Vec<usize> = (0..dim).collect();
    let mut live_cols: Vec<usize> = (0..cols.len()).collect();
    let mut total = 0i64;
    for _ in 0..dim {
        let mut best: Option<(i64, usize, usize)> = None;
        for &r in &live_rows {
            for &c in &live_cols {
                let q = &cols[c][r];
                if q.is_zero() {
                    continue;
                }
                let v = rational::valuation(q, p);
                if best.as_ref().is_none_or(|(bv, br, bc)| (v, r, c) < (*bv, *br, *bc)) {
                    best = Some((v, r, c));
                }
            }
        }
        let (v, pr, pc) = best?;
        total += v;
        let pivot = cols[pc][pr].clone();
        for &c in &live_cols {
            if c == pc || cols[c][pr].is_zero() {
                continue;
            }
            // factor has p-valuation >= 0 by pivot minimality, so this is
            // a lattice-preserving column operation over Z_(p).
            let factor = &cols[c][pr] / &pivot;
            for &r in &live_rows {
                let t = &factor * &cols[pc][r];
                cols[c][r] -= t;
            }
        }
        live_rows.retain(|&r| r != pr);
        live_cols.retain(|&c| c != pc);
    }
    Some(total)
}

/// One prime of the surjectivity decision, shared between the square
/// endomorphism case and rectangular generator families.
///
/// `q_gens` are image generators whose coefficient ring inverts `p` (they
/// span the divisible part), `zp_gens` the rest. `d_targets` are the
/// target coordinates whose ring inverts `p`.
fn surjective_at_prime(
    q_gens: Vec<Vec<Rational>>,
    zp_gens: Vec<Vec<Rational>>,
    d_targets: &[usize],
    f_targets: &[usize],
    dim: usize,
    p: u64,
) -> bool {
    let mut span = Echelon::new(dim);
    for v in q_gens {
        span.insert(v);
    }
    // Every p-divisible target direction must already lie in the divisible
    // image; a finitely generated local part can never supply unbounded
    // p-denominators.
    for &j in d_targets {
        if !span.contains(unit_vector(dim, j)) {
            return false;
        }
    }
    let quotient_dim = dim - span.rank();
    let target: Vec<Vec<Rational>> = f_targets
        .iter()
        .map(|&j| span.quotient_coordinates(unit_vector(dim, j)))
        .collect();
    let image: Vec<Vec<Rational>> = zp_gens
        .into_iter()
        .map(|v| span.quotient_coordinates(v))
        .collect();
    match (
        local_lattice_valuation(target, quotient_dim, p),
        local_lattice_valuation(image, quotient_dim, p),
    ) {
        (Some(vt), Some(vi)) => vi == vt,
        _ => false,
    }
}

/// Primes at which `A` could fail to be onto: the supports of its entries
/// and of its determinant, restricted to primes not inverted in at least
/// one coordinate.
///
/// Primes outside this set are local isomorphisms: with every entry and
/// the determinant a `p`-unit-or-zero, the `p`-free diagonal block is
/// `p`-integral with unit determinant (the valution of `det A` splits as
/// a sum of the two nonnegative block valuations), so nothing to check.
fn relevant_primes(
    a: &RationalMatrix,
    det: &Rational,
    shape: &ModuleShape,
) -> BTreeSet<u64> {
    let mut primes: BTreeSet<u64> = BTreeSet::new();
    let mut add_support = |q: &Rational| {
        if let Ok((num, den)) = rational::prime_support(q) {
            primes.extend(num.iter());
            primes.extend(den.iter());
        }
    };
    for q in a.entries() {
        add_support(q);
    }
    add_support(det);
    primes
        .into_iter()
        .filter(|&p| complement_relevant(shape, p))
        .collect()
}

/// A prime matters only if at least one (nonzero) coordinate does not
/// invert it; otherwise the local module is a full rational vector space.
fn complement_relevant(shape: &ModuleShape, p: u64) -> bool {
    shape
        .coordinates()
        .iter()
        .any(|c| c.primes().is_some_and(|pi| !pi.contains(p)))
}

/// Splits the (nonzero) coordinates of `shape` at `p` into divisible and
/// free ones. Indices refer to positions in `nonzero`.
fn split_at_prime(rings: &[&PrimeSet], p: u64) -> (Vec<usize>, Vec<usize>) {
    let mut divisible = Vec::new();
    let mut free = Vec::new();
    for (i, pi) in rings.iter().enumerate() {
        if pi.contains(p) {
            divisible.push(i);
        } else {
            free.push(i);
        }
    }
    (divisible, free)
}

/// Decides `A * shape = shape` for a lattice endomorphism `A`.
///
/// Preconditions (checked): `map_preserves(A, shape)` and `det(A) != 0`.
pub fn map_surjective(a: &RationalMatrix, shape: &ModuleShape) -> Result<bool, ShapeError> {
    let (cols, rings, det) = endomorphism_parts(a, shape)?;
    let primes = relevant_primes(a, &det, shape);
    for p in primes {
        let (d, f) = split_at_prime(&rings, p);
        let q_gens: Vec<Vec<Rational>> = d.iter().map(|&i| cols[i].clone()).collect();
        let zp_gens: Vec<Vec<Rational>> = f.iter().map(|&i| cols[i].clone()).collect();
        if !surjective_at_prime(q_gens, zp_gens, &d, &f, rings.len(), p) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks the preconditions of [`map_surjective`] and restricts the
/// matrix to the nonzero coordinates (zero-ring rows and columns carry no
/// lattice content; preservation pins the coupling entries to zero).
fn endomorphism_parts<'a>(
    a: &RationalMatrix,
    shape: &'a ModuleShape,
) -> Result<(Vec<Vec<Rational>>, Vec<&'a PrimeSet>, Rational), ShapeError> {
    if !map_preserves(a, shape)? {
        return Err(ShapeError::NotAnEndomorphism);
    }
    let det = a.determinant().map_err(|_| ShapeError::NotAnEndomorphism)?;
    if det.is_zero() {
        return Err(ShapeError::NotAnEndomorphism);
    }
    let nonzero: Vec<usize> = (0..shape.rank())
        .filter(|&i| !shape.coordinate(i).is_zero())
        .collect();
    let rings: Vec<&PrimeSet> = nonzero
        .iter()
        .map(|&i| shape.coordinate(i).primes().expect("nonzero coordinate"))
        .collect();
    let cols: Vec<Vec<Rational>> = nonzero
        .iter()
        .map(|&i| nonzero.iter().map(|&u| a.at(u, i).clone()).collect())
        .collect();
    Ok((cols, rings, det))
}

/// Searches for a lattice generator `t * e_b` whose preimage under `A`
/// falls outside the lattice — a witness that `A` is not onto.
///
/// Returns the coordinate `b` and the scalar `t` (an element of the
/// coordinate ring). If `A * shape = shape` there is no witness; and
/// whenever `A * shape ⊊ shape`, some ring multiple of some unit vector
/// has a preimage outside the lattice, because if all preimages of all
/// ring multiples stayed inside, `A^{-1} shape ⊆ shape` would force
/// `shape ⊆ A * shape`.
pub fn surjectivity_witness(
    a: &RationalMatrix,
    shape: &ModuleShape,
) -> Result<Option<(usize, Rational)>, ShapeError> {
    let (_, _, _) = endomorphism_parts(a, shape)?;
    let n = shape.rank();
    for b in 0..n {
        let pi_b = match shape.coordinate(b) {
            CoordinateRing::Zero => continue,
            CoordinateRing::Inv(pi) => pi,
        };
        let e_b = unit_vector(n, b);
        let x = a.solve(&e_b).map_err(|_| ShapeError::NotAnEndomorphism)?;
        for (u, q) in x.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let pi_u = match shape.coordinate(u) {
                CoordinateRing::Zero => {
                    // Preimage has weight on a pinned-to-zero coordinate.
                    return Ok(Some((b, Rational::one())));
                }
                CoordinateRing::Inv(pi) => pi,
            };
            if !rational::in_localization(q, pi_u) {
                return Ok(Some((b, Rational::one())));
            }
            if let Some(p) = pi_b.iter().find(|&p| !pi_u.contains(p)) {
                // q itself is fine, but scaling by 1/p^k drives the u-th
                // coordinate of the preimage out of Z[1/pi_u].
                let k = rational::valuation(q, p).max(0) + 1;
                let t = rational::int_pow(&Rational::from_integer(p.into()), -k);
                return Ok(Some((b, t)));
            }
        }
    }
    Ok(None)
}

/// Decides whether the sublattice `sum_t Z[1/pi_t] * v_t` equals the full
/// lattice described by `shape` (which must have no zero coordinates).
///
/// Used to compare image lattices of graded bracket maps against section
/// lattices. The relevant primes extend the endomorphism case: entry and
/// pivot-determinant supports plus every prime mentioned by a generator
/// or coordinate ring, again restricted to complement-relevant primes —
/// at any other prime all generators are local units in local coordinates
/// and a chosen rational basis already has unit local determinant.
pub fn generated_lattice_equals(
    generators: &[(Vec<Rational>, PrimeSet)],
    shape: &ModuleShape,
) -> Result<bool, ShapeError> {
    let n = shape.rank();
    let rings: Vec<&PrimeSet> = (0..n)
        .map(|i| {
            shape
                .coordinate(i)
                .primes()
                .expect("generated_lattice_equals needs a torsion-free shape")
        })
        .collect();
    for (v, _) in generators {
        if v.len() != n {
            return Err(ShapeError::LengthMismatch { expected: n, got: v.len() });
        }
    }
    // Inclusion of the generated sublattice in the target lattice.
    for (v, pi_src) in generators {
        for (u, q) in v.iter().enumerate() {
            if !conductor_allows(q, pi_src, rings[u]) {
                return Ok(false);
            }
        }
    }
    // The generators must span rationally; record a deterministic basis
    // for the relevant-prime bound.
    let mut span = Echelon::new(n);
    let mut basis: Vec<Vec<Rational>> = Vec::new();
    for (v, _) in generators {
        if span.insert(v.clone()) {
            basis.push(v.clone());
        }
    }
    if span.rank() != n {
        return Ok(false);
    }
    let basis_det = RationalMatrix::from_rows(basis)
        .expect("basis is square")
        .transpose()
        .determinant()
        .expect("square");
    let mut primes: BTreeSet<u64> = BTreeSet::new();
    {
        let mut add_support = |q: &Rational| {
            if let Ok((num, den)) = rational::prime_support(q) {
                primes.extend(num.iter());
                primes.extend(den.iter());
            }
        };
        for (v, _) in generators {
            for q in v {
                add_support(q);
            }
        }
        add_support(&basis_det);
    }
    for (_, pi_src) in generators {
        primes.extend(pi_src.iter());
    }
    for pi in &rings {
        primes.extend(pi.iter());
    }
    for p in primes.into_iter().filter(|&p| complement_relevant(shape, p)) {
        let (d, f) = split_at_prime(&rings, p);
        let mut q_gens = Vec::new();
        let mut zp_gens = Vec::new();
        for (v, pi_src) in generators {
            if pi_src.contains(p) {
                q_gens.push(v.clone());
            } else {
                zp_gens.push(v.clone());
            }
        }
        if !surjective_at_prime(q_gens, zp_gens, &d, &f, n, p) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn m(rows: &[&[Rational]]) -> RationalMatrix {
        RationalMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn shape(rings: &[&[u64]]) -> ModuleShape {
        ModuleShape::of_prime_sets(rings.iter().map(|r| PrimeSet::of(r)))
    }

    #[test]
    fn contains_examples() {
        let s = shape(&[&[], &[2]]);
        assert!(s.contains(&[rat(3), ratio(5, 4)]).unwrap());
        assert!(!s.contains(&[ratio(1, 2), rat(0)]).unwrap());
        assert!(s.contains(&[rat(0), rat(0)]).unwrap());
        assert_eq!(
            s.contains(&[rat(1)]),
            Err(ShapeError::LengthMismatch { expected: 2, got: 1 })
        );
    }

    #[test]
    fn preserves_examples() {
        let s = shape(&[&[], &[2]]);
        let d = m(&[&[rat(2), rat(0)], &[rat(0), ratio(1, 2)]]);
        assert!(map_preserves(&d, &s).unwrap());
        let swap = m(&[&[rat(0), rat(1)], &[rat(1), rat(0)]]);
        assert!(!map_preserves(&swap, &s).unwrap());
        assert!(map_preserves(&RationalMatrix::identity(2), &s).unwrap());
    }

    #[test]
    fn surjective_examples() {
        let two = m(&[&[rat(2)]]);
        assert!(!map_surjective(&two, &shape(&[&[]])).unwrap());
        assert!(map_surjective(&two, &shape(&[&[2]])).unwrap());
        let shear = m(&[&[rat(1), rat(1)], &[rat(0), rat(1)]]);
        assert!(map_surjective(&shear, &shape(&[&[], &[]])).unwrap());
    }

    #[test]
    fn surjective_checks_preconditions() {
        let swap = m(&[&[rat(0), rat(1)], &[rat(1), rat(0)]]);
        assert_eq!(
            map_surjective(&swap, &shape(&[&[], &[2]])),
            Err(ShapeError::NotAnEndomorphism)
        );
        let singular = m(&[&[rat(0)]]);
        assert_eq!(
            map_surjective(&singular, &shape(&[&[]])),
            Err(ShapeError::NotAnEndomorphism)
        );
    }

    #[test]
    fn surjective_mixed_divisible_block() {
        // diag(2, 1/2) on (Z, Z[1/2]): the (2,3)-style divisible direction
        // is fine, but a |-> 2a misses 1 in Z.
        let d = m(&[&[rat(2), rat(0)], &[rat(0), ratio(1, 2)]]);
        let s = shape(&[&[], &[2]]);
        assert!(!map_surjective(&d, &s).unwrap());
        let w = surjectivity_witness(&d, &s).unwrap();
        assert_eq!(w, Some((0, rat(1))));
    }

    #[test]
    fn witness_examples() {
        // e_1 has preimage (-1/3, 1/3), outside (Z[1/2], Z).
        let a = m(&[&[rat(1), rat(1)], &[rat(0), rat(3)]]);
        let s = shape(&[&[2], &[]]);
        assert!(!map_surjective(&a, &s).unwrap());
        assert_eq!(surjectivity_witness(&a, &s).unwrap(), Some((1, rat(1))));

        // diag(2, 6) on (Z[1/2], Z[1/2]): 1/2 is a unit, 1/6 escapes.
        let a = m(&[&[rat(2), rat(0)], &[rat(0), rat(6)]]);
        let s = shape(&[&[2], &[2]]);
        assert!(!map_surjective(&a, &s).unwrap());
        assert_eq!(surjectivity_witness(&a, &s).unwrap(), Some((1, rat(1))));

        let a = m(&[&[rat(2), rat(1)], &[rat(0), rat(1)]]);
        assert!(map_surjective(&a, &s).unwrap());
        assert_eq!(surjectivity_witness(&a, &s).unwrap(), None);
    }

    #[test]
    fn hom_shape_examples() {
        let z = shape(&[&[]]);
        let z2 = shape(&[&[2]]);
        assert_eq!(
            hom_shape(&z, &z).coordinates(),
            &[CoordinateRing::Inv(PrimeSet::empty())]
        );
        assert_eq!(hom_shape(&z2, &z).coordinates(), &[CoordinateRing::Zero]);
        assert_eq!(
            hom_shape(&z, &z2).coordinates(),
            &[CoordinateRing::Inv(PrimeSet::of(&[2]))]
        );
    }

    #[test]
    fn generated_lattice_comparisons() {
        // Columns (1,1) and (1,3) over Z generate an index-2 sublattice of
        // Z^2 even though no entry is even.
        let gens = [
            (vec![rat(1), rat(1)], PrimeSet::empty()),
            (vec![rat(1), rat(3)], PrimeSet::empty()),
        ];
        let s = shape(&[&[], &[]]);
        assert!(!generated_lattice_equals(&gens, &s).unwrap());
        let gens = [
            (vec![rat(1), rat(1)], PrimeSet::empty()),
            (vec![rat(1), rat(2)], PrimeSet::empty()),
        ];
        assert!(generated_lattice_equals(&gens, &s).unwrap());
        // A Z-generator with value 1 and a Z[1/2]-generator together span
        // (Z, Z[1/2]).
        let gens = [
            (vec![rat(1), rat(0)], PrimeSet::empty()),
            (vec![rat(0), rat(1)], PrimeSet::of(&[2])),
        ];
        assert!(generated_lattice_equals(&gens, &shape(&[&[], &[2]])).unwrap());
        // ... but not with the rings the other way around.
        let gens = [
            (vec![rat(1), rat(0)], PrimeSet::empty()),
            (vec![rat(0), rat(1)], PrimeSet::empty()),
        ];
        assert!(!generated_lattice_equals(&gens, &shape(&[&[], &[2]])).unwrap());
        // Redundant generators are fine.
        let gens = [
            (vec![rat(1), rat(0)], PrimeSet::empty()),
            (vec![rat(0), rat(1)], PrimeSet::of(&[2])),
            (vec![rat(1), rat(1)], PrimeSet::empty()),
        ];
        assert!(generated_lattice_equals(&gens, &shape(&[&[], &[2]])).unwrap());
    }

    #[test]
    fn identity_is_surjective_on_anything() {
        for s in [
            shape(&[&[]]),
            shape(&[&[], &[2]]),
            shape(&[&[2], &[3], &[2, 5]]),
        ] {
            let id = RationalMatrix::identity(s.rank());
            assert!(map_surjective(&id, &s).unwrap());
            assert_eq!(surjectivity_witness(&id, &s).unwrap(), None);
        }
    }
}
