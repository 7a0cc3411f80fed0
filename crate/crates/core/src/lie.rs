//! The Lie lattice of a pattern group: brackets, central series, graded
//! bracket maps, and the embedding of the second centre section into a
//! Hom module.
//!
//! The Lie algebra is spanned by the elementary matrices at the nonzero
//! pattern positions, with `[E_ij, E_kl] = δ_jk E_il - δ_li E_kj`. Each
//! bracket of two basis elements is `0` or `±` another basis element, and
//! for a fixed second argument distinct basis elements hit distinct
//! targets. Consequently every term of the lower and upper central series
//! is spanned by a subset of the basis positions, and the isolated
//! sections are simply the coordinate sublattices on the leftover
//! positions — lattice intersections with rational subspaces come for
//! free, with no torsion bookkeeping.

use alloc::collections::BTreeSet;
use alloc::fmt;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Zero};

use crate::localized::{self, ModuleShape};
use crate::matrix::RationalMatrix;
use crate::pattern::{Pattern, PatternError, Position};
use crate::primes::PrimeSet;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LieError {
    /// Requested graded map level outside `1..=class`.
    SectionOutOfRange { requested: usize, class: usize },
    /// The embedding of the second centre section needs class >= 2.
    NoSecondCentreSection,
    /// A filtration term was not invariant under the given matrix.
    SectionNotInvariant { level: usize, basis_index: usize },
}

impl fmt::Display for LieError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieError::SectionOutOfRange { requested, class } => {
                write!(f, "section {} out of range for class {}", requested, class)
            }
            LieError::NoSecondCentreSection => write!(f, "no second centre section"),
            LieError::SectionNotInvariant { level, basis_index } => write!(
                f,
                "filtration term {} is not invariant: image of basis element {} leaks out",
                level, basis_index
            ),
        }
    }
}

/// One isolated section of a central series: the coordinate sublattice on
/// the basis positions separating two consecutive terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    /// Basis indices (into the lattice basis) in fixed order.
    pub basis: Vec<usize>,
    /// The coordinate rings at those positions.
    pub shape: ModuleShape,
}

/// A central series of the Lie lattice, stored as a chain of coordinate
/// subspaces (sets of basis indices) together with its isolated sections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filtration {
    /// For the lower central series: `γ_1 ⊇ γ_2 ⊇ ... ⊇ ∅`.
    /// For the upper central series: `∅ ⊆ Z^1 ⊆ ... ⊆ V`.
    terms: Vec<BTreeSet<usize>>,
    /// Section `i` sits between `terms[i]` and `terms[i+1]`.
    sections: Vec<Section>,
    /// Whether `terms` decreases (lower series) or increases (upper).
    decreasing: bool,
}

impl Filtration {
    pub fn terms(&self) -> &[BTreeSet<usize>] {
        &self.terms
    }

    pub fn sections(&self) -> &[Section] {
        &self.sections
    }

    pub fn section(&self, i: usize) -> &Section {
        &self.sections[i]
    }

    pub fn len(&self) -> usize {
        self.sections.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sections.is_empty()
    }

    /// The coordinates of `v` on the basis of section `i`.
    pub fn project(&self, i: usize, v: &[Rational]) -> Vec<Rational> {
        self.sections[i].basis.iter().map(|&b| v[b].clone()).collect()
    }

    /// The term a section's basis must stay inside under an invariant map:
    /// for a decreasing chain that is `terms[i]`, for an increasing one
    /// `terms[i+1]`.
    fn enclosing_term(&self, i: usize) -> &BTreeSet<usize> {
        if self.decreasing {
            &self.terms[i]
        } else {
            &self.terms[i + 1]
        }
    }

    /// The matrix induced on section `i` by a lattice map `phi` (given on
    /// the full basis). Fails if `phi` does not preserve the enclosing
    /// term — which cannot happen for a bijective Lie endomorphism.
    pub fn section_matrix(
        &self,
        i: usize,
        phi: &RationalMatrix,
    ) -> Result<RationalMatrix, LieError> {
        let section = &self.sections[i];
        let term = self.enclosing_term(i);
        let mut rows = vec![vec![Rational::zero(); section.basis.len()]; section.basis.len()];
        for (c, &b) in section.basis.iter().enumerate() {
            let image = phi.column(b);
            for (idx, q) in image.iter().enumerate() {
                if q.is_zero() {
                    continue;
                }
                if !term.contains(&idx) {
                    return Err(LieError::SectionNotInvariant { level: i, basis_index: b });
                }
                if let Some(r) = section.basis.iter().position(|&s| s == idx) {
                    rows[r][c] = q.clone();
                }
            }
        }
        Ok(RationalMatrix::from_rows(rows).expect("sections are nonempty"))
    }
}

/// The graded bracket map from the `i`-th tensor power of the
/// abelianisation section to the `i`-th lower central section,
/// `x_1 ⊗ ... ⊗ x_i ↦ [x_1, ..., x_i]` (left-normed).
#[derive(Clone, Debug)]
pub struct GradedBracketMap {
    /// Rows: section-`i` basis; columns: tuples of abelianisation basis
    /// elements, lexicographic with the first factor outermost.
    pub matrix: RationalMatrix,
    /// The tuples indexing the columns (abelianisation basis indices).
    pub tuples: Vec<Vec<usize>>,
    /// Coefficient ring of each column: the tuple entries multiply, so the
    /// ring is `Z[1/(pi_1 ∪ ... ∪ pi_i)]`.
    pub column_rings: Vec<PrimeSet>,
}

impl GradedBracketMap {
    /// The image lattice, as generators with their coefficient rings —
    /// suitable for [`localized::generated_lattice_equals`].
    pub fn image_generators(&self) -> Vec<(Vec<Rational>, PrimeSet)> {
        (0..self.matrix.cols())
            .map(|c| (self.matrix.column(c), self.column_rings[c].clone()))
            .collect()
    }
}

/// The embedding of the second centre section into
/// `Hom(abelianisation, centre)`, `w ↦ (x ↦ [w, x])`.
#[derive(Clone, Debug)]
pub struct CentralHomEmbedding {
    /// Rows: hom coordinates `(u, x)` row-major (centre coordinate `u`
    /// outer); columns: the `Z^2/Z^1` section basis.
    pub matrix: RationalMatrix,
    /// The shape of the hom module the map lands in.
    pub hom_shape: ModuleShape,
    pub centre_rank: usize,
    pub abelianisation_rank: usize,
}

/// The strictly upper triangular Lie algebra of a pattern with its
/// coordinate lattice, bracket table, and both central series.
#[derive(Debug)]
pub struct LieLattice {
    pattern: Arc<Pattern>,
    /// `table[a][b] = Some((t, sign))` when `[E_a, E_b] = sign * E_t`.
    table: Vec<Vec<Option<(usize, i8)>>>,
    shape: ModuleShape,
    lower: Filtration,
    upper: Filtration,
}

impl LieLattice {
    /// Builds the lattice; the pattern must be multiplicatively closed.
    pub fn new(pattern: Arc<Pattern>) -> Result<Arc<Self>, PatternError> {
        pattern.require_closed()?;
        let basis = pattern.basis().to_vec();
        let rank = basis.len();
        let index_of = |pos: Position| pattern.basis_index(pos);
        let mut table = vec![vec![None; rank]; rank];
        for (a, &pa) in basis.iter().enumerate() {
            for (b, &pb) in basis.iter().enumerate() {
                // [E_ij, E_kl] = δ_jk E_il - δ_li E_kj; for strictly upper
                // triangular positions at most one term survives.
                if pa.col == pb.row {
                    let t = index_of(Position::new(pa.row, pb.col))
                        .expect("closure provides the product position");
                    table[a][b] = Some((t, 1));
                } else if pb.col == pa.row {
                    let t = index_of(Position::new(pb.row, pa.col))
                        .expect("closure provides the product position");
                    table[a][b] = Some((t, -1));
                }
            }
        }
        check_bracket_table(&table, rank);
        let shape = pattern.shape();
        let lower = lower_series(&table, rank, &shape);
        let upper = upper_series(&table, rank, &shape);
        assert!(
            lower.terms.last().is_some_and(BTreeSet::is_empty),
            "strictly upper triangular algebras are nilpotent"
        );
        Ok(Arc::new(LieLattice { pattern, table, shape, lower, upper }))
    }

    pub fn pattern(&self) -> &Arc<Pattern> {
        &self.pattern
    }

    pub fn rank(&self) -> usize {
        self.pattern.rank()
    }

    pub fn shape(&self) -> &ModuleShape {
        &self.shape
    }

    pub fn position(&self, basis_index: usize) -> Position {
        self.pattern.basis()[basis_index]
    }

    /// Nilpotency class: the length of the lower central series.
    pub fn class(&self) -> usize {
        self.lower.len()
    }

    pub fn lower_central_series(&self) -> &Filtration {
        &self.lower
    }

    pub fn upper_central_series(&self) -> &Filtration {
        &self.upper
    }

    /// `[E_a, E_b]` from the structure-constant table.
    pub fn bracket_basis(&self, a: usize, b: usize) -> Option<(usize, i8)> {
        self.table[a][b]
    }

    /// The bracket of two coordinate vectors.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.rank()];
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                if let Some((t, sign)) = self.table[a][b] {
                    let term = xa * yb;
                    if sign > 0 {
                        out[t] += term;
                    } else {
                        out[t] -= term;
                    }
                }
            }
        }
        out
    }

    /// The abelianisation section `Γ_1/Γ_2`.
    pub fn abelianisation(&self) -> &Section {
        self.lower.section(0)
    }

    /// The centre section `Z^1`.
    pub fn centre(&self) -> &Section {
        self.upper.section(0)
    }

    /// The graded bracket map at level `i` (1-based); level 1 is the
    /// identity on the abelianisation section.
    pub fn graded_bracket_map(&self, i: usize) -> Result<GradedBracketMap, LieError> {
        let class = self.class();
        if i < 1 || i > class {
            return Err(LieError::SectionOutOfRange { requested: i, class });
        }
        let ab = self.abelianisation();
        let target = self.lower.section(i - 1);
        let target_term = &self.lower.terms()[i - 1];
        let mut tuples: Vec<Vec<usize>> = vec![Vec::new()];
        for _ in 0..i {
            tuples = tuples
                .iter()
                .flat_map(|t| {
                    ab.basis.iter().map(move |&b| {
                        let mut t = t.clone();
                        t.push(b);
                        t
                    })
                })
                .collect();
        }
        let mut columns: Vec<Vec<Rational>> = Vec::with_capacity(tuples.len());
        let mut column_rings = Vec::with_capacity(tuples.len());
        for tuple in &tuples {
            let mut v = unit(self.rank(), tuple[0]);
            for &b in &tuple[1..] {
                v = self.bracket(&v, &unit(self.rank(), b));
            }
            debug_assert!(
                v.iter().enumerate().all(|(idx, q)| q.is_zero() || target_term.contains(&idx)),
                "an i-fold bracket lies in the i-th lower central term"
            );
            columns.push(self.lower.project(i - 1, &v));
            let ring = tuple.iter().fold(PrimeSet::empty(), |acc, &b| {
                acc.union(
                    self.pattern
                        .ring(self.position(b))
                        .expect("basis positions have rings"),
                )
            });
            column_rings.push(ring);
        }
        let rows = target.basis.len();
        let mut matrix = RationalMatrix::zero(rows, tuples.len());
        for (c, col) in columns.iter().enumerate() {
            for (r, q) in col.iter().enumerate() {
                *matrix.at_mut(r, c) = q.clone();
            }
        }
        Ok(GradedBracketMap { matrix, tuples, column_rings })
    }

    /// The split embedding of `Z^2/Z^1` into `Hom(abelianisation, Z^1)`,
    /// `w ↦ (x ↦ [w, x])`; the sign convention takes `w` from the upper
    /// central side as the left bracket argument.
    pub fn central_hom_embedding(&self) -> Result<CentralHomEmbedding, LieError> {
        if self.upper.len() < 2 {
            return Err(LieError::NoSecondCentreSection);
        }
        let centre = self.upper.section(0);
        let second = self.upper.section(1);
        let ab = self.abelianisation();
        let centre_set: BTreeSet<usize> = centre.basis.iter().copied().collect();
        let rows = centre.basis.len() * ab.basis.len();
        let mut matrix = RationalMatrix::zero(rows, second.basis.len());
        for (c, &w) in second.basis.iter().enumerate() {
            for (xi, &x) in ab.basis.iter().enumerate() {
                if let Some((t, sign)) = self.table[w][x] {
                    assert!(
                        centre_set.contains(&t),
                        "[Z^2, V] lands in the centre"
                    );
                    let u = centre
                        .basis
                        .iter()
                        .position(|&s| s == t)
                        .expect("target in centre basis");
                    *matrix.at_mut(u * ab.basis.len() + xi, c) =
                        Rational::from_integer(sign.into());
                }
            }
        }
        assert_eq!(
            matrix.rank(),
            second.basis.len(),
            "the centre-section embedding is injective"
        );
        Ok(CentralHomEmbedding {
            matrix,
            hom_shape: localized::hom_shape(&ab.shape, &centre.shape),
            centre_rank: centre.basis.len(),
            abelianisation_rank: ab.basis.len(),
        })
    }
}

/// The matrix of `θ ↦ dst_action ∘ θ ∘ src_coaction` on hom coordinates
/// `(u, i)` row-major. For the forward action of an automorphism `phi`,
/// pass its centre-section matrix and the inverse of its abelianisation
/// matrix.
pub fn hom_action_matrix(
    dst_action: &RationalMatrix,
    src_coaction: &RationalMatrix,
) -> RationalMatrix {
    let dr = dst_action.rows();
    let sr = src_coaction.rows();
    let mut out = RationalMatrix::zero(dr * sr, dr * sr);
    for u in 0..dr {
        for i in 0..sr {
            for u2 in 0..dr {
                for i2 in 0..sr {
                    // θ'[u][i] = Σ dst[u][u2] θ[u2][i2] src[i2][i]
                    *out.at_mut(u * sr + i, u2 * sr + i2) =
                        dst_action.at(u, u2) * src_coaction.at(i2, i);
                }
            }
        }
    }
    out
}

fn unit(rank: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); rank];
    v[i] = Rational::one();
    v
}

/// Antisymmetry and Jacobi, exhaustively over basis triples.
fn check_bracket_table(table: &[Vec<Option<(usize, i8)>>], rank: usize) {
    let value = |a: usize, b: usize| -> Vec<i64> {
        let mut v = vec![0i64; rank];
        if let Some((t, s)) = table[a][b] {
            v[t] = s as i64;
        }
        v
    };
    let bracket_vec = |x: &Vec<i64>, b: usize| -> Vec<i64> {
        let mut out = vec![0i64; rank];
        for (a, &xa) in x.iter().enumerate() {
            if xa != 0 {
                if let Some((t, s)) = table[a][b] {
                    out[t] += xa * s as i64;
                }
            }
        }
        out
    };
    for a in 0..rank {
        assert!(table[a][a].is_none(), "[x, x] = 0");
        for b in 0..rank {
            let ab = value(a, b);
            let ba = value(b, a);
            assert!(
                ab.iter().zip(&ba).all(|(x, y)| x + y == 0),
                "bracket table antisymmetry"
            );
            for c in 0..rank {
                // [[a,b],c] + [[b,c],a] + [[c,a],b] = 0
                let t1 = bracket_vec(&value(a, b), c);
                let t2 = bracket_vec(&value(b, c), a);
                let t3 = bracket_vec(&value(c, a), b);
                assert!(
                    (0..rank).all(|i| t1[i] + t2[i] + t3[i] == 0),
                    "bracket table Jacobi identity"
                );
            }
        }
    }
}

fn section_between(
    larger: &BTreeSet<usize>,
    smaller: &BTreeSet<usize>,
    shape: &ModuleShape,
) -> Section {
    let basis: Vec<usize> = larger.difference(smaller).copied().collect();
    let rings = basis
        .iter()
        .map(|&b| match shape.coordinate(b) {
            localized::CoordinateRing::Inv(pi) => pi.clone(),
            localized::CoordinateRing::Zero => unreachable!("lattice coordinates are nonzero"),
        })
        .collect::<Vec<_>>();
    Section {
        basis,
        shape: ModuleShape::of_prime_sets(rings),
    }
}

/// Lower central series by iterated brackets: each term is spanned by the
/// bracket targets of the previous term against the whole algebra.
fn lower_series(
    table: &[Vec<Option<(usize, i8)>>],
    rank: usize,
    shape: &ModuleShape,
) -> Filtration {
    let mut terms: Vec<BTreeSet<usize>> = vec![(0..rank).collect()];
    loop {
        let current = terms.last().expect("nonempty");
        if current.is_empty() {
            break;
        }
        let mut next = BTreeSet::new();
        for a in 0..rank {
            for &b in current.iter() {
                if let Some((t, _)) = table[a][b] {
                    next.insert(t);
                }
            }
        }
        assert!(
            next.len() < current.len(),
            "lower central series strictly decreases"
        );
        terms.push(next);
    }
    let sections = terms
        .windows(2)
        .map(|w| section_between(&w[0], &w[1], shape))
        .collect();
    Filtration { terms, sections, decreasing: true }
}

/// Upper central series: a basis element lies in the next centre iff all
/// its bracket targets lie in the current one. (For a fixed second
/// argument distinct basis elements bracket to distinct targets, so no
/// rational combination can cancel its way in: the terms really are
/// coordinate subspaces.)
fn upper_series(
    table: &[Vec<Option<(usize, i8)>>],
    rank: usize,
    shape: &ModuleShape,
) -> Filtration {
    let mut terms: Vec<BTreeSet<usize>> = vec![BTreeSet::new()];
    loop {
        let current = terms.last().expect("nonempty");
        if current.len() == rank {
            break;
        }
        let next: BTreeSet<usize> = (0..rank)
            .filter(|&c| {
                (0..rank).all(|a| match table[c][a] {
                    None => true,
                    Some((t, _)) => current.contains(&t),
                })
            })
            .collect();
        assert!(
            next.len() > current.len(),
            "upper central series strictly increases for nilpotent algebras"
        );
        terms.push(next);
    }
    let sections = terms
        .windows(2)
        .map(|w| section_between(&w[1], &w[0], shape))
        .collect();
    Filtration { terms, sections, decreasing: false }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn pos(r: usize, c: usize) -> Position {
        Position::new(r, c)
    }

    fn paper_lattice() -> Arc<LieLattice> {
        let p = Pattern::new(
            3,
            [
                (pos(1, 2), PrimeSet::empty()),
                (pos(2, 3), PrimeSet::of(&[2])),
                (pos(1, 3), PrimeSet::of(&[2])),
            ],
            PrimeSet::empty(),
        )
        .unwrap();
        LieLattice::new(p).unwrap()
    }

    fn ut4_lattice() -> Arc<LieLattice> {
        let p = Pattern::new(
            4,
            (1..=4usize).flat_map(|i| {
                (i + 1..=4).map(move |j| (pos(i, j), PrimeSet::empty()))
            }),
            PrimeSet::empty(),
        )
        .unwrap();
        LieLattice::new(p).unwrap()
    }

    #[test]
    fn heisenberg_lower_series() {
        let l = paper_lattice();
        assert_eq!(l.class(), 2);
        let lower = l.lower_central_series();
        // γ_2 = span(E_13): basis index 2 in depth-then-row order.
        assert_eq!(lower.terms()[1], BTreeSet::from([2]));
        assert!(lower.terms()[2].is_empty());
        assert_eq!(lower.section(0).basis, [0, 1]);
        assert_eq!(lower.section(1).basis, [2]);
        assert_eq!(
            lower.section(0).shape,
            ModuleShape::of_prime_sets([PrimeSet::empty(), PrimeSet::of(&[2])])
        );
    }

    #[test]
    fn heisenberg_upper_series() {
        let l = paper_lattice();
        let upper = l.upper_central_series();
        assert_eq!(upper.len(), 2);
        // Z(N) is the (1,3) coordinate with ring Z[1/2].
        assert_eq!(upper.section(0).basis, [2]);
        assert_eq!(
            upper.section(0).shape,
            ModuleShape::of_prime_sets([PrimeSet::of(&[2])])
        );
        assert_eq!(upper.section(1).basis, [0, 1]);
    }

    #[test]
    fn ut4_series() {
        let l = ut4_lattice();
        assert_eq!(l.class(), 3);
        let lower = l.lower_central_series();
        // Basis order: (1,2),(2,3),(3,4),(1,3),(2,4),(1,4).
        assert_eq!(lower.terms()[1], BTreeSet::from([3, 4, 5]));
        assert_eq!(lower.terms()[2], BTreeSet::from([5]));
        assert!(lower.terms()[3].is_empty());
        let upper = l.upper_central_series();
        assert_eq!(upper.terms()[1], BTreeSet::from([5]));
        assert_eq!(upper.terms()[2], BTreeSet::from([3, 4, 5]));
        assert_eq!(upper.terms()[3].len(), 6);
    }

    #[test]
    fn abelian_pattern_is_class_one() {
        let p = Pattern::new(2, [(pos(1, 2), PrimeSet::empty())], PrimeSet::empty()).unwrap();
        let l = LieLattice::new(p).unwrap();
        assert_eq!(l.class(), 1);
        assert_eq!(l.upper_central_series().len(), 1);
        assert_eq!(
            l.central_hom_embedding().unwrap_err(),
            LieError::NoSecondCentreSection
        );
    }

    #[test]
    fn graded_bracket_map_examples() {
        let l = paper_lattice();
        let g1 = l.graded_bracket_map(1).unwrap();
        assert_eq!(g1.matrix, RationalMatrix::identity(2));
        let g2 = l.graded_bracket_map(2).unwrap();
        // Columns in lex order: (E12,E12), (E12,E23), (E23,E12), (E23,E23).
        assert_eq!(g2.matrix.rows(), 1);
        assert_eq!(
            (0..4).map(|c| g2.matrix.at(0, c).clone()).collect::<Vec<_>>(),
            [rat(0), rat(1), rat(-1), rat(0)]
        );
        assert_eq!(g2.column_rings[1], PrimeSet::of(&[2]));
        assert_eq!(
            l.graded_bracket_map(3).unwrap_err(),
            LieError::SectionOutOfRange { requested: 3, class: 2 }
        );

        // UT4, level 3: [[E12, E23], E34] = E14.
        let l4 = ut4_lattice();
        let g3 = l4.graded_bracket_map(3).unwrap();
        let idx = g3
            .tuples
            .iter()
            .position(|t| t == &vec![0usize, 1, 2])
            .unwrap();
        assert_eq!(g3.matrix.at(0, idx), &rat(1));
    }

    #[test]
    fn graded_images_fill_the_sections() {
        for l in [paper_lattice(), ut4_lattice()] {
            for i in 1..=l.class() {
                let g = l.graded_bracket_map(i).unwrap();
                let section = &l.lower_central_series().section(i - 1);
                assert!(
                    localized::generated_lattice_equals(&g.image_generators(), &section.shape)
                        .unwrap(),
                    "graded image at level {} fills its section",
                    i
                );
            }
        }
    }

    #[test]
    fn central_hom_embedding_heisenberg() {
        let l = paper_lattice();
        let emb = l.central_hom_embedding().unwrap();
        // Z^2/Z^1 has basis (E12, E23); hom coordinates are (E13; E12),
        // (E13; E23). [E12, E12] = 0, [E12, E23] = E13, [E23, E12] = -E13.
        assert_eq!(emb.matrix.rows(), 2);
        assert_eq!(emb.matrix.cols(), 2);
        assert_eq!(emb.matrix.at(0, 0), &rat(0));
        assert_eq!(emb.matrix.at(1, 0), &rat(1));
        assert_eq!(emb.matrix.at(0, 1), &rat(-1));
        assert_eq!(emb.matrix.at(1, 1), &rat(0));
        // Entry rings: source Z gives Z[1/2], source Z[1/2] gives Z[1/2].
        assert_eq!(
            emb.hom_shape,
            ModuleShape::of_prime_sets([PrimeSet::of(&[2]), PrimeSet::of(&[2])])
        );
    }

    #[test]
    fn central_hom_embedding_ut4() {
        let l = ut4_lattice();
        let emb = l.central_hom_embedding().unwrap();
        // Z^2/Z^1 basis: E13 (index 3), E24 (index 4); ab rank 3.
        assert_eq!(emb.matrix.rows(), 3);
        assert_eq!(emb.matrix.cols(), 2);
        // [E13, E34] = E14 and [E24, E12] = -E14.
        assert_eq!(emb.matrix.at(2, 0), &rat(1));
        assert_eq!(emb.matrix.at(0, 1), &rat(-1));
    }

    #[test]
    fn section_matrix_extraction() {
        let l = paper_lattice();
        // φ1: diag(2, 1/2, 1) in basis order.
        let phi = RationalMatrix::from_rows(vec![
            vec![rat(2), rat(0), rat(0)],
            vec![rat(0), crate::rational::ratio(1, 2), rat(0)],
            vec![rat(0), rat(0), rat(1)],
        ])
        .unwrap();
        let ab = l.lower_central_series().section_matrix(0, &phi).unwrap();
        assert_eq!(ab.at(0, 0), &rat(2));
        assert_eq!(ab.at(1, 1), &crate::rational::ratio(1, 2));
        let z = l.upper_central_series().section_matrix(0, &phi).unwrap();
        assert_eq!(z, RationalMatrix::identity(1));
        // A map leaking out of γ_2 is rejected.
        let bad = RationalMatrix::from_rows(vec![
            vec![rat(1), rat(0), rat(1)],
            vec![rat(0), rat(1), rat(0)],
            vec![rat(0), rat(0), rat(1)],
        ])
        .unwrap();
        assert!(l.lower_central_series().section_matrix(1, &bad).is_err());
    }

    #[test]
    fn bracket_of_vectors() {
        let l = paper_lattice();
        let x = [rat(1), rat(2), rat(5)];
        let y = [rat(3), rat(4), rat(-1)];
        // [x, y] = (1*4 - 2*3) E13
        assert_eq!(l.bracket(&x, &y), [rat(0), rat(0), rat(-2)]);
    }
}
