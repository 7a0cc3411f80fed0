//! Unitriangular pattern groups over localizations of the integers.
//!
//! A [`Pattern`] prescribes, for each superdiagonal position `(i, j)` of a
//! degree-`n` unitriangular matrix, a coefficient ring `Z[1/pi_ij]` (or
//! leaves the position pinned to zero). Multiplicative closure of the
//! rings — `ring(i,j) * ring(j,k) ⊆ ring(i,k)` — makes the member matrices
//! a group. The group is coordinatized by its Lie algebra through the
//! exact, finite `log`/`exp` series of nilpotent matrices.

use alloc::collections::BTreeMap;
use alloc::fmt;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::localized::ModuleShape;
use crate::matrix::RationalMatrix;
use crate::primes::PrimeSet;
use crate::rational::{self, Rational};

/// A superdiagonal position, 1-based as in `e_{12}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Position {
    pub row: usize,
    pub col: usize,
}

impl Position {
    pub fn new(row: usize, col: usize) -> Self {
        Position { row, col }
    }

    /// Superdiagonal depth `col - row`; products of two positions land at
    /// least this much deeper.
    pub fn depth(&self) -> usize {
        self.col - self.row
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A failure of multiplicative closure at a triple `i < j < k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureViolation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub reason: ClosureReason,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosureReason {
    /// `(i,k)` is a zero position but both factors are not.
    ProductPositionMissing,
    /// `pi_ij ∪ pi_jk ⊄ pi_ik`.
    RingsNotContained,
}

impl fmt::Display for ClosureViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.reason {
            ClosureReason::ProductPositionMissing => write!(
                f,
                "closure violated at ({},{},{}): position ({},{}) is zero but receives products",
                self.i, self.j, self.k, self.i, self.k
            ),
            ClosureReason::RingsNotContained => write!(
                f,
                "closure violated at ({},{},{}): ring({},{}) * ring({},{}) is not contained in ring({},{})",
                self.i, self.j, self.k, self.i, self.j, self.j, self.k, self.i, self.k
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PatternError {
    DegreeTooSmall(usize),
    BadPosition { row: usize, col: usize, degree: usize },
    DuplicatePosition(Position),
    /// A pattern needs at least one nonzero position.
    EmptyPattern,
    NotClosed(Vec<ClosureViolation>),
    WrongDegree { expected: usize, got: usize },
    NotUnitriangular { row: usize, col: usize },
    EntryOutsideRing { position: Position, entry: Rational },
    PatternMismatch,
    /// Preconditions of [`Pattern::rational_power`] not met.
    RootNotGuaranteed,
}

impl fmt::Display for PatternError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternError::DegreeTooSmall(n) => write!(f, "degree {} is too small; need n >= 2", n),
            PatternError::BadPosition { row, col, degree } => write!(
                f,
                "({},{}) is not a superdiagonal position of degree {}",
                row, col, degree
            ),
            PatternError::DuplicatePosition(p) => write!(f, "duplicate position {}", p),
            PatternError::EmptyPattern => write!(f, "pattern has no nonzero positions"),
            PatternError::NotClosed(violations) => {
                write!(f, "pattern is not multiplicatively closed:")?;
                for v in violations {
                    write!(f, " {};", v)?;
                }
                Ok(())
            }
            PatternError::WrongDegree { expected, got } => {
                write!(f, "matrix degree {} does not match pattern degree {}", got, expected)
            }
            PatternError::NotUnitriangular { row, col } => {
                write!(f, "matrix is not unitriangular at ({},{})", row, col)
            }
            PatternError::EntryOutsideRing { position, entry } => {
                write!(f, "entry {} at {} lies outside the coordinate ring", entry, position)
            }
            PatternError::PatternMismatch => write!(f, "elements belong to different patterns"),
            PatternError::RootNotGuaranteed => write!(f, "root not guaranteed in N"),
        }
    }
}

/// A unitriangular pattern: one coefficient ring per nonzero superdiagonal
/// position, plus the ambient prime set `pi` for divisibility claims.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    degree: usize,
    rings: BTreeMap<Position, PrimeSet>,
    pi: PrimeSet,
    /// Nonzero positions ordered by depth, then row — the fixed basis
    /// order of the associated Lie algebra.
    basis: Vec<Position>,
}

impl Pattern {
    /// Builds a pattern; closure is *not* required here — see
    /// [`Pattern::closure_violations`].
    pub fn new(
        degree: usize,
        rings: impl IntoIterator<Item = (Position, PrimeSet)>,
        pi: PrimeSet,
    ) -> Result<Arc<Self>, PatternError> {
        if degree < 2 {
            return Err(PatternError::DegreeTooSmall(degree));
        }
        let mut map = BTreeMap::new();
        for (pos, ring) in rings {
            if pos.row < 1 || pos.col > degree || pos.row >= pos.col {
                return Err(PatternError::BadPosition {
                    row: pos.row,
                    col: pos.col,
                    degree,
                });
            }
            if map.insert(pos, ring).is_some() {
                return Err(PatternError::DuplicatePosition(pos));
            }
        }
        if map.is_empty() {
            return Err(PatternError::EmptyPattern);
        }
        let mut basis: Vec<Position> = map.keys().copied().collect();
        basis.sort_by_key(|p| (p.depth(), p.row));
        Ok(Arc::new(Pattern { degree, rings: map, pi, basis }))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn pi(&self) -> &PrimeSet {
        &self.pi
    }

    /// Number of nonzero positions (the Hirsch length of the group).
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn ring(&self, pos: Position) -> Option<&PrimeSet> {
        self.rings.get(&pos)
    }

    /// Nonzero positions by increasing depth, then row.
    pub fn basis(&self) -> &[Position] {
        &self.basis
    }

    pub fn basis_index(&self, pos: Position) -> Option<usize> {
        self.basis.iter().position(|&p| p == pos)
    }

    /// The coordinate lattice `⊕ ring(i,j) E_ij` over the basis order.
    pub fn shape(&self) -> ModuleShape {
        ModuleShape::of_prime_sets(self.basis.iter().map(|p| self.rings[p].clone()))
    }

    /// All closure violations, empty iff the member matrices form a group.
    pub fn closure_violations(&self) -> Vec<ClosureViolation> {
        let mut out = Vec::new();
        for i in 1..=self.degree {
            for j in i + 1..=self.degree {
                let Some(left) = self.ring(Position::new(i, j)) else {
                    continue;
                };
                for k in j + 1..=self.degree {
                    let Some(right) = self.ring(Position::new(j, k)) else {
                        continue;
                    };
                    match self.ring(Position::new(i, k)) {
                        None => out.push(ClosureViolation {
                            i,
                            j,
                            k,
                            reason: ClosureReason::ProductPositionMissing,
                        }),
                        Some(target) => {
                            if !left.union(right).is_subset_of(target) {
                                out.push(ClosureViolation {
                                    i,
                                    j,
                                    k,
                                    reason: ClosureReason::RingsNotContained,
                                });
                            }
                        }
                    }
                }
            }
        }
        out
    }

    pub fn require_closed(&self) -> Result<(), PatternError> {
        let violations = self.closure_violations();
        if violations.is_empty() {
            Ok(())
        } else {
            Err(PatternError::NotClosed(violations))
        }
    }

    /// `pi`-divisibility: every coordinate ring inverts all of `pi`, so
    /// every member has a unique `p`-th root for `p` in `pi` (binomial
    /// interpolation keeps the root inside the pattern).
    pub fn is_divisible_by(&self, pi: &PrimeSet) -> bool {
        self.rings.values().all(|ring| pi.is_subset_of(ring))
    }

    /// Divisibility by the pattern's own ambient `pi`.
    pub fn is_pi_divisible(&self) -> bool {
        self.is_divisible_by(&self.pi)
    }

    pub fn identity(self: &Arc<Self>) -> GroupElement {
        GroupElement {
            pattern: Arc::clone(self),
            matrix: RationalMatrix::identity(self.degree),
        }
    }

    /// Validates a matrix as a member: unitriangular, entries in their
    /// rings, zero positions zero.
    pub fn member(self: &Arc<Self>, matrix: RationalMatrix) -> Result<GroupElement, PatternError> {
        if !matrix.is_square() || matrix.rows() != self.degree {
            return Err(PatternError::WrongDegree {
                expected: self.degree,
                got: matrix.rows(),
            });
        }
        for r in 1..=self.degree {
            for c in 1..=self.degree {
                let q = matrix.at(r - 1, c - 1);
                if r == c {
                    if !q.is_one() {
                        return Err(PatternError::NotUnitriangular { row: r, col: c });
                    }
                } else if r > c {
                    if !q.is_zero() {
                        return Err(PatternError::NotUnitriangular { row: r, col: c });
                    }
                } else {
                    let pos = Position::new(r, c);
                    let ok = match self.ring(pos) {
                        Some(pi) => rational::in_localization(q, pi),
                        None => q.is_zero(),
                    };
                    if !ok {
                        return Err(PatternError::EntryOutsideRing {
                            position: pos,
                            entry: q.clone(),
                        });
                    }
                }
            }
        }
        Ok(GroupElement {
            pattern: Arc::clone(self),
            matrix,
        })
    }

    /// The elementary member `e_pos(t) = 1 + t E_pos`.
    pub fn elementary(
        self: &Arc<Self>,
        pos: Position,
        t: Rational,
    ) -> Result<GroupElement, PatternError> {
        let mut m = RationalMatrix::identity(self.degree);
        *m.at_mut(pos.row - 1, pos.col - 1) = t;
        self.member(m)
    }

    /// Reads a strictly upper triangular matrix into basis coordinates.
    ///
    /// Panics if the matrix has weight outside the nonzero positions; by
    /// closure this cannot happen for anything produced from members.
    pub fn coordinates_of(&self, m: &RationalMatrix) -> LieVector {
        let mut coords = vec![Rational::zero(); self.rank()];
        for r in 1..=self.degree {
            for c in r + 1..=self.degree {
                let q = m.at(r - 1, c - 1);
                if q.is_zero() {
                    continue;
                }
                let idx = self
                    .basis_index(Position::new(r, c))
                    .expect("matrix supported on pattern positions");
                coords[idx] = q.clone();
            }
        }
        LieVector { coords }
    }

    /// Realizes basis coordinates as a strictly upper triangular matrix.
    pub fn matrix_of(&self, x: &LieVector) -> RationalMatrix {
        assert_eq!(x.coords.len(), self.rank(), "coordinate length mismatch");
        let mut m = RationalMatrix::zero(self.degree, self.degree);
        for (idx, pos) in self.basis.iter().enumerate() {
            *m.at_mut(pos.row - 1, pos.col - 1) = x.coords[idx].clone();
        }
        m
    }

    /// `exp` of a Lie algebra element, as a matrix. The result is only a
    /// pattern member for suitable inputs; validate with [`Pattern::member`]
    /// when claiming membership.
    pub fn exp(&self, x: &LieVector) -> RationalMatrix {
        nilpotent_exp(&self.matrix_of(x))
    }

    /// The unique `m`-th power `exp(m log g)` in the radicable closure.
    ///
    /// Requires the denominator of `m` to be supported on the ambient `pi`
    /// and the pattern to be `pi`-divisible, which together guarantee the
    /// result is a member.
    pub fn rational_power(
        self: &Arc<Self>,
        g: &GroupElement,
        m: &Rational,
    ) -> Result<GroupElement, PatternError> {
        if !rational::in_localization(m, &self.pi) || !self.is_pi_divisible() {
            return Err(PatternError::RootNotGuaranteed);
        }
        let x = g.log().scale(m);
        let matrix = self.exp(&x);
        match self.member(matrix) {
            Ok(h) => Ok(h),
            Err(e) => unreachable!(
                "pi-divisible pattern lost a guaranteed root: {}", e
            ),
        }
    }

    /// Writes `g` as an ordered product of elementary matrices, peeling
    /// positions by increasing depth, then row. Multiplying the factors
    /// back in order reproduces `g` exactly.
    pub fn factor_into_elementaries(
        self: &Arc<Self>,
        g: &GroupElement,
    ) -> Vec<(Position, Rational)> {
        let mut factors = Vec::new();
        let mut residual = g.clone();
        for &pos in &self.basis {
            let t = residual.entry(pos);
            if t.is_zero() {
                continue;
            }
            let e = self
                .elementary(pos, t.clone())
                .expect("residual entries stay in their rings");
            residual = e
                .inverse()
                .multiply(&residual)
                .expect("same pattern");
            factors.push((pos, t));
        }
        debug_assert!(residual.is_identity(), "peeling must exhaust the element");
        factors
    }
}

/// A member of a pattern group: a unitriangular matrix with entries in the
/// prescribed rings.
#[derive(Clone, Debug)]
pub struct GroupElement {
    pattern: Arc<Pattern>,
    matrix: RationalMatrix,
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.pattern == other.pattern && self.matrix == other.matrix
    }
}

impl Eq for GroupElement {}

impl GroupElement {
    pub fn pattern(&self) -> &Arc<Pattern> {
        &self.pattern
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn entry(&self, pos: Position) -> Rational {
        self.matrix.at(pos.row - 1, pos.col - 1).clone()
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == RationalMatrix::identity(self.pattern.degree)
    }

    fn same_pattern(&self, other: &Self) -> Result<(), PatternError> {
        if Arc::ptr_eq(&self.pattern, &other.pattern) || self.pattern == other.pattern {
            Ok(())
        } else {
            Err(PatternError::PatternMismatch)
        }
    }

    pub fn multiply(&self, other: &Self) -> Result<Self, PatternError> {
        self.same_pattern(other)?;
        Ok(GroupElement {
            pattern: Arc::clone(&self.pattern),
            matrix: self.matrix.mul(&other.matrix).expect("same degree"),
        })
    }

    /// Exact inverse via the terminating Neumann series of `g - 1`.
    pub fn inverse(&self) -> Self {
        let n = self.pattern.degree;
        let u = self
            .matrix
            .sub(&RationalMatrix::identity(n))
            .expect("same degree");
        let mut inv = RationalMatrix::identity(n);
        let mut power = RationalMatrix::identity(n);
        for k in 1..n {
            power = power.mul(&u).expect("same degree");
            let sign = if k % 2 == 0 { 1 } else { -1 };
            inv = inv
                .add(&power.scale(&Rational::from_integer(BigInt::from(sign))))
                .expect("same degree");
        }
        GroupElement {
            pattern: Arc::clone(&self.pattern),
            matrix: inv,
        }
    }

    /// `[g, h] = g^{-1} h^{-1} g h`.
    pub fn commutator(&self, other: &Self) -> Result<Self, PatternError> {
        self.inverse()
            .multiply(&other.inverse())?
            .multiply(self)?
            .multiply(other)
    }

    /// Exact matrix logarithm in basis coordinates.
    pub fn log(&self) -> LieVector {
        let u = self
            .matrix
            .sub(&RationalMatrix::identity(self.pattern.degree))
            .expect("same degree");
        self.pattern.coordinates_of(&nilpotent_log_from_offset(&u))
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.matrix)
    }
}

/// An element of the rational Lie algebra of a pattern, in basis
/// coordinates (ordered by depth, then row).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieVector {
    coords: Vec<Rational>,
}

impl LieVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        LieVector { coords }
    }

    pub fn zero(rank: usize) -> Self {
        LieVector { coords: vec![Rational::zero(); rank] }
    }

    pub fn coordinates(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        LieVector {
            coords: self.coords.iter().map(|c| c * s).collect(),
        }
    }
}

/// `log(1 + u)` for strictly upper triangular `u`; the series terminates.
fn nilpotent_log_from_offset(u: &RationalMatrix) -> RationalMatrix {
    let n = u.rows();
    let mut acc = RationalMatrix::zero(n, n);
    let mut power = RationalMatrix::identity(n);
    for k in 1..n {
        power = power.mul(u).expect("same degree");
        if power.is_zero() {
            break;
        }
        let sign = if k % 2 == 0 { -1 } else { 1 };
        let coeff = Rational::new(BigInt::from(sign), BigInt::from(k));
        acc = acc.add(&power.scale(&coeff)).expect("same degree");
    }
    acc
}

/// `exp(x)` for strictly upper triangular `x`; the series terminates.
pub fn nilpotent_exp(x: &RationalMatrix) -> RationalMatrix {
    let n = x.rows();
    let mut acc = RationalMatrix::identity(n);
    let mut term = RationalMatrix::identity(n);
    let mut factorial = BigInt::one();
    for k in 1..n {
        term = term.mul(x).expect("same degree");
        if term.is_zero() {
            break;
        }
        factorial *= BigInt::from(k);
        acc = acc
            .add(&term.scale(&Rational::new(BigInt::one(), factorial.clone())))
            .expect("same degree");
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn heisenberg(r12: &[u64], r23: &[u64], r13: &[u64], pi: &[u64]) -> Arc<Pattern> {
        Pattern::new(
            3,
            [
                (Position::new(1, 2), PrimeSet::of(r12)),
                (Position::new(2, 3), PrimeSet::of(r23)),
                (Position::new(1, 3), PrimeSet::of(r13)),
            ],
            PrimeSet::of(pi),
        )
        .unwrap()
    }

    /// The running example: (1 Z Z[1/2]; 1 Z[1/2]; 1).
    fn paper_pattern() -> Arc<Pattern> {
        heisenberg(&[], &[2], &[2], &[])
    }

    fn h_element(p: &Arc<Pattern>, a: Rational, b: Rational, c: Rational) -> GroupElement {
        let mut m = RationalMatrix::identity(3);
        *m.at_mut(0, 1) = a;
        *m.at_mut(1, 2) = b;
        *m.at_mut(0, 2) = c;
        p.member(m).unwrap()
    }

    #[test]
    fn closure_examples() {
        assert!(paper_pattern().closure_violations().is_empty());
        let bad = heisenberg(&[2], &[2], &[], &[]);
        let violations = bad.closure_violations();
        assert_eq!(violations.len(), 1);
        assert_eq!((violations[0].i, violations[0].j, violations[0].k), (1, 2, 3));
        let all_z = Pattern::new(
            4,
            (1..=4usize).flat_map(|i| {
                (i + 1..=4).map(move |j| (Position::new(i, j), PrimeSet::empty()))
            }),
            PrimeSet::empty(),
        )
        .unwrap();
        assert!(all_z.closure_violations().is_empty());
    }

    #[test]
    fn basis_order_is_depth_then_row() {
        let p = paper_pattern();
        assert_eq!(
            p.basis(),
            [Position::new(1, 2), Position::new(2, 3), Position::new(1, 3)]
        );
    }

    #[test]
    fn membership_is_checked() {
        let p = paper_pattern();
        assert!(p
            .member({
                let mut m = RationalMatrix::identity(3);
                *m.at_mut(0, 1) = ratio(1, 2);
                m
            })
            .is_err());
        assert!(h_element(&p, rat(1), ratio(5, 4), ratio(-3, 8)).entry(Position::new(1, 3)) == ratio(-3, 8));
    }

    #[test]
    fn group_operations() {
        let p = paper_pattern();
        let g = h_element(&p, rat(2), ratio(1, 2), ratio(3, 4));
        let gi = g.inverse();
        assert!(g.multiply(&gi).unwrap().is_identity());
        let e12 = p.elementary(Position::new(1, 2), rat(1)).unwrap();
        let e23 = p.elementary(Position::new(2, 3), rat(1)).unwrap();
        // Heisenberg relation [e12(1), e23(1)] = e13(1).
        let c = e12.commutator(&e23).unwrap();
        assert_eq!(c, p.elementary(Position::new(1, 3), rat(1)).unwrap());
        // e12(a) e23(b) has (1,3) entry ab.
        let prod = p
            .elementary(Position::new(1, 2), rat(3))
            .unwrap()
            .multiply(&p.elementary(Position::new(2, 3), ratio(1, 2)).unwrap())
            .unwrap();
        assert_eq!(prod.entry(Position::new(1, 3)), ratio(3, 2));
    }

    #[test]
    fn pattern_mismatch_is_an_error() {
        let p = paper_pattern();
        let q = heisenberg(&[], &[], &[], &[]);
        let g = p.identity();
        let h = q.identity();
        assert_eq!(g.multiply(&h), Err(PatternError::PatternMismatch));
    }

    #[test]
    fn log_exp_examples() {
        let p = paper_pattern();
        let g = h_element(&p, rat(3), ratio(1, 2), rat(2));
        // log(a,b,c) = (a, b, c - ab/2)
        assert_eq!(
            g.log().coordinates(),
            [rat(3), ratio(1, 2), rat(2) - rat(3) * ratio(1, 2) / rat(2)]
        );
        assert!(p.identity().log().is_zero());
        let x = LieVector::new(vec![ratio(7, 2), rat(0), rat(0)]);
        let back = p.exp(&x);
        assert_eq!(back.at(0, 1), &ratio(7, 2));
        assert_eq!(back.at(0, 2), &rat(0));
        // exp(log g) = g
        assert_eq!(p.member(p.exp(&g.log())).unwrap(), g);
    }

    #[test]
    fn divisibility_examples() {
        assert!(paper_pattern().is_divisible_by(&PrimeSet::empty()));
        assert!(!paper_pattern().is_divisible_by(&PrimeSet::of(&[2])));
        let half = heisenberg(&[2], &[2], &[2], &[2]);
        assert!(half.is_pi_divisible());
    }

    #[test]
    fn rational_power_examples() {
        let half = heisenberg(&[2], &[2], &[2], &[2]);
        let g = h_element(&half, rat(1), rat(0), rat(0));
        let r = half.rational_power(&g, &ratio(1, 2)).unwrap();
        assert_eq!(r, half.elementary(Position::new(1, 2), ratio(1, 2)).unwrap());
        // identity exponent
        let g = h_element(&half, rat(3), ratio(5, 2), rat(7));
        assert_eq!(half.rational_power(&g, &rat(1)).unwrap(), g);
        // general square root: entries (a/2, b/2, c/2 - ab/8)
        let a = rat(3);
        let b = ratio(5, 2);
        let c = rat(7);
        let g = h_element(&half, a.clone(), b.clone(), c.clone());
        let r = half.rational_power(&g, &ratio(1, 2)).unwrap();
        assert_eq!(r.entry(Position::new(1, 2)), &a / rat(2));
        assert_eq!(r.entry(Position::new(2, 3)), &b / rat(2));
        assert_eq!(
            r.entry(Position::new(1, 3)),
            &c / rat(2) - &a * &b / rat(8)
        );
        assert_eq!(r.multiply(&r).unwrap(), g);
        // precondition violations
        let p = paper_pattern();
        let g = p.identity();
        assert_eq!(
            p.rational_power(&g, &ratio(1, 2)),
            Err(PatternError::RootNotGuaranteed)
        );
        assert_eq!(
            half.rational_power(&half.identity(), &ratio(1, 3)),
            Err(PatternError::RootNotGuaranteed)
        );
    }

    #[test]
    fn factorization_examples() {
        let p = paper_pattern();
        assert!(p.factor_into_elementaries(&p.identity()).is_empty());
        let single = p.elementary(Position::new(1, 3), ratio(9, 4)).unwrap();
        assert_eq!(
            p.factor_into_elementaries(&single),
            vec![(Position::new(1, 3), ratio(9, 4))]
        );
        // Heisenberg (a,b,c) peels to e12(a) e23(b) e13(c - ab).
        let g = h_element(&p, rat(2), ratio(3, 2), rat(5));
        let factors = p.factor_into_elementaries(&g);
        assert_eq!(
            factors,
            vec![
                (Position::new(1, 2), rat(2)),
                (Position::new(2, 3), ratio(3, 2)),
                (Position::new(1, 3), rat(5) - rat(2) * ratio(3, 2)),
            ]
        );
        let mut acc = p.identity();
        for (pos, t) in factors {
            acc = acc.multiply(&p.elementary(pos, t).unwrap()).unwrap();
        }
        assert_eq!(acc, g);
    }
}
