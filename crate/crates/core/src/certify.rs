//! Endomorphism validation and the automorphism criteria.
//!
//! An endomorphism of a pattern group is presented by the square matrix of
//! the linear map `phi` it induces on the Lie lattice basis; the group map
//! is `exp ∘ phi ∘ log`. Validation checks three invariants:
//!
//! * `phi` is a Lie algebra homomorphism (on all basis pairs),
//! * `phi` is injective (nonzero determinant) — and hence, being a
//!   bijective Lie endomorphism of a finite-dimensional algebra, an
//!   automorphism of the rational Lie algebra that preserves both central
//!   series,
//! * the group map sends members to members.
//!
//! The last point is decided exactly. For an elementary generator
//! `e_b(t)`, the image `exp(t phi(E_b))` has entries that are polynomials
//! in `t` with zero constant term. Such a polynomial maps `Z[1/pi_src]`
//! into `Z[1/pi_dst]` iff it vanishes, or `pi_src ⊆ pi_dst` and all its
//! coefficients *in the binomial basis* `C(t,m)` lie in `Z[1/pi_dst]`:
//! integrality of `C(t,m)` on p-adic integers gives sufficiency, and
//! finite differences at integer points (plus large-denominator scaling at
//! primes of `pi_src`) give necessity. Monomial coefficients would be the
//! wrong test — `t(t+1)/2` maps `Z` to `Z` with non-integral coefficients,
//! and such maps genuinely occur as endomorphisms of integral patterns.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::lie::LieLattice;
use crate::localized::{self, ModuleShape};
use crate::matrix::RationalMatrix;
use crate::pattern::{self, Position};
use crate::poly::{self, Polynomial};
use crate::primes::PrimeSet;
use crate::rational::{self, Rational};

use alloc::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EndomorphismError {
    WrongSize { expected: usize, rows: usize, cols: usize },
    /// `phi [E_a, E_b] != [phi E_a, phi E_b]`.
    NotLieHomomorphism { left: Position, right: Position },
    /// Zero determinant.
    NotInjective,
    /// The group map takes some elementary generator outside the pattern:
    /// the entry polynomial at `target` has a binomial coefficient of the
    /// given order outside the conductor.
    NotPatternPreserving {
        generator: Position,
        target: Position,
        order: usize,
        coefficient: Rational,
    },
}

impl fmt::Display for EndomorphismError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EndomorphismError::WrongSize { expected, rows, cols } => write!(
                f,
                "endomorphism matrix is {}x{}, expected {}x{}",
                rows, cols, expected, expected
            ),
            EndomorphismError::NotLieHomomorphism { left, right } => write!(
                f,
                "not a Lie homomorphism: bracket of basis pair {} , {} is not respected",
                left, right
            ),
            EndomorphismError::NotInjective => write!(f, "not injective: determinant is zero"),
            EndomorphismError::NotPatternPreserving { generator, target, order, coefficient } => {
                write!(
                    f,
                    "image of generator {} leaves the pattern at {}: binomial coefficient of order {} is {}",
                    generator, target, order, coefficient
                )
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertifyError {
    /// The two pi-like detection routes disagreed — an implementation bug,
    /// never a property of the input.
    PiLikeRouteDisagreement { charpoly_route: bool, abelianisation_route: bool },
    /// An internal invariant broke; the caller should surface this as a
    /// soundness bug rather than guess.
    Internal(String),
}

impl fmt::Display for CertifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertifyError::PiLikeRouteDisagreement { charpoly_route, abelianisation_route } => {
                write!(
                    f,
                    "pi-like routes disagree: charpoly {}, abelianisation {}",
                    charpoly_route, abelianisation_route
                )
            }
            CertifyError::Internal(msg) => write!(f, "internal inconsistency: {}", msg),
        }
    }
}

/// How to decide pi-likeness.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PiLikeRoute {
    /// Coefficients of the full characteristic polynomial.
    Charpoly,
    /// Coefficients of the characteristic polynomial of the induced map on
    /// the torsion-free abelianisation.
    Abelianisation,
    /// Both, erroring on disagreement.
    Both,
}

/// A validated endomorphism: the Lie matrix plus the induced section
/// matrices of both central series, computed eagerly.
#[derive(Clone, Debug)]
pub struct Endomorphism {
    lattice: Arc<LieLattice>,
    matrix: RationalMatrix,
    determinant: Rational,
    charpoly: Polynomial,
    lower_sections: Vec<RationalMatrix>,
    upper_sections: Vec<RationalMatrix>,
}

/// Validates `phi` as an endomorphism of the pattern group.
pub fn validate_endomorphism(
    lattice: &Arc<LieLattice>,
    matrix: RationalMatrix,
) -> Result<Endomorphism, EndomorphismError> {
    let rank = lattice.rank();
    if !matrix.is_square() || matrix.rows() != rank {
        return Err(EndomorphismError::WrongSize {
            expected: rank,
            rows: matrix.rows(),
            cols: matrix.cols(),
        });
    }
    // Lie homomorphism on all basis pairs.
    for a in 0..rank {
        for b in 0..rank {
            let lhs = match lattice.bracket_basis(a, b) {
                None => vec![Rational::zero(); rank],
                Some((t, sign)) => {
                    let col = matrix.column(t);
                    if sign > 0 {
                        col
                    } else {
                        col.into_iter().map(|q| -q).collect()
                    }
                }
            };
            let rhs = lattice.bracket(&matrix.column(a), &matrix.column(b));
            if lhs != rhs {
                return Err(EndomorphismError::NotLieHomomorphism {
                    left: lattice.position(a),
                    right: lattice.position(b),
                });
            }
        }
    }
    let determinant = matrix.determinant().expect("square");
    if determinant.is_zero() {
        return Err(EndomorphismError::NotInjective);
    }
    check_pattern_preserving(lattice, &matrix)?;
    let charpoly = poly::characteristic_polynomial(&matrix).expect("square");
    let lower = lattice.lower_central_series();
    let upper = lattice.upper_central_series();
    let extract = |filtration: &crate::lie::Filtration| -> Vec<RationalMatrix> {
        (0..filtration.len())
            .map(|i| {
                filtration
                    .section_matrix(i, &matrix)
                    .expect("bijective Lie endomorphisms preserve central series")
            })
            .collect()
    };
    let lower_sections = extract(lower);
    let upper_sections = extract(upper);
    Ok(Endomorphism {
        lattice: Arc::clone(lattice),
        matrix,
        determinant,
        charpoly,
        lower_sections,
        upper_sections,
    })
}

/// The exact membership check described in the module docs.
fn check_pattern_preserving(
    lattice: &Arc<LieLattice>,
    matrix: &RationalMatrix,
) -> Result<(), EndomorphismError> {
    let pattern = lattice.pattern();
    let n = pattern.degree();
    let binomials = binomial_table(n);
    for (b, &gen_pos) in pattern.basis().iter().enumerate() {
        let src_ring = pattern.ring(gen_pos).expect("basis positions have rings");
        let image = pattern.matrix_of(&pattern::LieVector::new(matrix.column(b)));
        // exp(j X) = exp(X)^j: sample the entry polynomials at integers.
        let step = pattern::nilpotent_exp(&image);
        let mut samples: Vec<RationalMatrix> = vec![RationalMatrix::identity(n)];
        for j in 1..n {
            samples.push(samples[j - 1].mul(&step).expect("same degree"));
        }
        for row in 1..=n {
            for col in row + 1..=n {
                let target = Position::new(row, col);
                // Finite differences give the binomial-basis coefficients
                // a_m = Δ^m f(0) of the entry polynomial f.
                let mut coeffs: Vec<Rational> = Vec::with_capacity(n - 1);
                for m in 1..n {
                    let mut a_m = Rational::zero();
                    for j in 0..=m {
                        let sample = samples[j].at(row - 1, col - 1);
                        if sample.is_zero() {
                            continue;
                        }
                        let c = Rational::from_integer(binomials[m][j].clone());
                        if (m - j) % 2 == 0 {
                            a_m += sample * c;
                        } else {
                            a_m -= sample * c;
                        }
                    }
                    coeffs.push(a_m);
                }
                if coeffs.iter().all(Zero::is_zero) {
                    continue;
                }
                let Some(dst_ring) = pattern.ring(target) else {
                    let (order, coefficient) = first_nonzero(&coeffs);
                    return Err(EndomorphismError::NotPatternPreserving {
                        generator: gen_pos,
                        target,
                        order,
                        coefficient,
                    });
                };
                if !src_ring.is_subset_of(dst_ring) {
                    let (order, coefficient) = first_nonzero(&coeffs);
                    return Err(EndomorphismError::NotPatternPreserving {
                        generator: gen_pos,
                        target,
                        order,
                        coefficient,
                    });
                }
                for (k, a_m) in coeffs.iter().enumerate() {
                    if !rational::in_localization(a_m, dst_ring) {
                        return Err(EndomorphismError::NotPatternPreserving {
                            generator: gen_pos,
                            target,
                            order: k + 1,
                            coefficient: a_m.clone(),
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

fn first_nonzero(coeffs: &[Rational]) -> (usize, Rational) {
    coeffs
        .iter()
        .enumerate()
        .find(|(_, q)| !q.is_zero())
        .map(|(k, q)| (k + 1, q.clone()))
        .expect("called with a nonzero polynomial")
}

fn binomial_table(n: usize) -> Vec<Vec<BigInt>> {
    let mut t = vec![vec![BigInt::zero(); n + 1]; n + 1];
    for m in 0..=n {
        t[m][0] = BigInt::one();
        for j in 1..=m {
            t[m][j] = &t[m - 1][j - 1] + &t[m - 1][j];
        }
    }
    t
}

impl Endomorphism {
    pub fn lattice(&self) -> &Arc<LieLattice> {
        &self.lattice
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn determinant(&self) -> &Rational {
        &self.determinant
    }

    pub fn characteristic_polynomial(&self) -> &Polynomial {
        &self.charpoly
    }

    /// Induced matrix on lower central section `i` (0-based).
    pub fn lower_section(&self, i: usize) -> &RationalMatrix {
        &self.lower_sections[i]
    }

    /// Induced matrix on upper central section `i` (0-based).
    pub fn upper_section(&self, i: usize) -> &RationalMatrix {
        &self.upper_sections[i]
    }

    /// The induced map on the torsion-free abelianisation.
    pub fn abelianisation_matrix(&self) -> &RationalMatrix {
        &self.lower_sections[0]
    }

    /// The induced map on the centre.
    pub fn centre_matrix(&self) -> &RationalMatrix {
        &self.upper_sections[0]
    }

    pub fn abelianisation_charpoly(&self) -> Polynomial {
        poly::characteristic_polynomial(self.abelianisation_matrix()).expect("square")
    }

    /// Determinant of the restriction to the centre.
    pub fn centre_determinant(&self) -> Rational {
        self.centre_matrix().determinant().expect("square")
    }

    /// pi-likeness: the characteristic polynomial (of the whole map, or
    /// of the abelianisation section) has coefficients in `Z[1/pi]`.
    pub fn is_pi_like(&self, pi: &PrimeSet, route: PiLikeRoute) -> Result<bool, CertifyError> {
        let charpoly_route = || self.charpoly.coefficients_in(pi);
        let ab_route = || self.abelianisation_charpoly().coefficients_in(pi);
        match route {
            PiLikeRoute::Charpoly => Ok(charpoly_route()),
            PiLikeRoute::Abelianisation => Ok(ab_route()),
            PiLikeRoute::Both => {
                let c = charpoly_route();
                let a = ab_route();
                if c != a {
                    return Err(CertifyError::PiLikeRouteDisagreement {
                        charpoly_route: c,
                        abelianisation_route: a,
                    });
                }
                Ok(c)
            }
        }
    }

    /// The central criterion: pi-divisible pattern, pi-like endomorphism,
    /// centre determinant a pi-unit. With `pi = ∅` this is the
    /// integer-like criterion with centre determinant `±1`.
    pub fn check_central_criterion(&self, pi: &PrimeSet) -> Result<Verdict, CertifyError> {
        let pattern = self.lattice.pattern();
        let divisible = pattern.is_divisible_by(pi);
        let divisible_witness = (!divisible).then(|| {
            pattern
                .basis()
                .iter()
                .find_map(|&pos| {
                    let ring = pattern.ring(pos).expect("basis ring");
                    pi.iter()
                        .find(|&p| !ring.contains(p))
                        .map(|p| format!("position {} is not {}-divisible", pos, p))
                })
                .unwrap_or_else(|| String::from("pattern not divisible"))
        });
        let pi_like = self.is_pi_like(pi, PiLikeRoute::Both)?;
        let pi_like_witness = (!pi_like).then(|| {
            let ab = self.abelianisation_charpoly();
            ab.coefficients()
                .iter()
                .enumerate()
                .find(|(_, c)| !rational::in_localization(c, pi))
                .map(|(k, c)| {
                    format!(
                        "abelianisation charpoly coefficient of x^{} is {}, outside Z[1/{}]",
                        k, c, pi
                    )
                })
                .unwrap_or_else(|| String::from("full charpoly coefficient outside the ring"))
        });
        let det = self.centre_determinant();
        let det_unit = rational::is_pi_unit(&det, pi);
        Ok(Verdict::new(
            "central",
            vec![
                Hypothesis {
                    name: "pattern is pi-divisible",
                    passed: divisible,
                    witness: divisible_witness,
                },
                Hypothesis {
                    name: "endomorphism is pi-like",
                    passed: pi_like,
                    witness: pi_like_witness,
                },
                Hypothesis {
                    name: "centre determinant is a pi-unit",
                    passed: det_unit,
                    witness: Some(format!("centre determinant = {}", det)),
                },
            ],
        ))
    }

    /// The torsion-free abelianisation criterion: the induced map on the
    /// abelianisation section is onto.
    pub fn check_tfab_criterion(&self) -> Result<Verdict, CertifyError> {
        let shape = &self.lattice.abelianisation().shape;
        let matrix = self.abelianisation_matrix();
        let onto = localized::map_surjective(matrix, shape)
            .map_err(|e| CertifyError::Internal(format!("abelianisation section: {}", e)))?;
        let witness = if onto {
            None
        } else {
            self.section_witness(0)?
                .map(|(pos, t)| format!("e{}({}) has no preimage", pos, t))
        };
        Ok(Verdict::new(
            "tfab",
            vec![Hypothesis {
                name: "abelianisation map is onto",
                passed: onto,
                witness,
            }],
        ))
    }

    fn section_witness(&self, i: usize) -> Result<Option<(Position, Rational)>, CertifyError> {
        let section = self.lattice.lower_central_series().section(i);
        let witness = localized::surjectivity_witness(&self.lower_sections[i], &section.shape)
            .map_err(|e| CertifyError::Internal(format!("witness search: {}", e)))?;
        Ok(witness.map(|(b, t)| (self.lattice.position(section.basis[b]), t)))
    }

    /// Unconditional surjectivity test: the group map is onto iff the
    /// induced map on every isolated lower central section is onto. On
    /// failure produces an elementary generator with no preimage.
    pub fn surjectivity_oracle(&self) -> Result<OracleOutcome, CertifyError> {
        for i in 0..self.lattice.class() {
            let section = self.lattice.lower_central_series().section(i);
            let onto = localized::map_surjective(&self.lower_sections[i], &section.shape)
                .map_err(|e| CertifyError::Internal(format!("section {}: {}", i + 1, e)))?;
            if !onto {
                let Some((position, value)) = self.section_witness(i)? else {
                    return Err(CertifyError::Internal(String::from(
                        "section map not onto but no generator witness found",
                    )));
                };
                return Ok(OracleOutcome::ProperInjection { position, value });
            }
        }
        Ok(OracleOutcome::Automorphism)
    }

    /// Runs both criteria and (optionally) the oracle, flagging any
    /// soundness violation: a criterion may never claim an automorphism
    /// the oracle refutes. The converse direction is expected — the
    /// criteria are sufficient, not necessary.
    pub fn full_report(&self, pi: &PrimeSet, run_oracle: bool) -> Result<Report, CertifyError> {
        let central = self.check_central_criterion(pi)?;
        let tfab = self.check_tfab_criterion()?;
        let oracle = if run_oracle {
            self.surjectivity_oracle()?
        } else {
            OracleOutcome::Skipped
        };
        let oracle_refutes = matches!(oracle, OracleOutcome::ProperInjection { .. });
        let criterion_claims = central.conclusion == Conclusion::Automorphism
            || tfab.conclusion == Conclusion::Automorphism;
        Ok(Report {
            pi: pi.clone(),
            determinant: self.determinant.clone(),
            centre_determinant: self.centre_determinant(),
            characteristic_polynomial: self.charpoly.clone(),
            abelianisation_charpoly: self.abelianisation_charpoly(),
            central,
            tfab,
            oracle,
            soundness_bug: criterion_claims && oracle_refutes,
        })
    }
}

/// One hypothesis of a criterion, with an optional witness string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypothesis {
    pub name: &'static str,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conclusion {
    Automorphism,
    NotApplicable,
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Conclusion::Automorphism => write!(f, "automorphism"),
            Conclusion::NotApplicable => write!(f, "not-applicable"),
        }
    }
}

/// The structured outcome of one criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub criterion: &'static str,
    pub hypotheses: Vec<Hypothesis>,
    pub conclusion: Conclusion,
}

impl Verdict {
    /// Concludes automorphism iff every hypothesis passed.
    pub fn new(criterion: &'static str, hypotheses: Vec<Hypothesis>) -> Self {
        let conclusion = if hypotheses.iter().all(|h| h.passed) {
            Conclusion::Automorphism
        } else {
            Conclusion::NotApplicable
        };
        Verdict { criterion, hypotheses, conclusion }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleOutcome {
    Automorphism,
    /// Injective but not onto; the elementary generator `e_pos(value)`
    /// has no preimage.
    ProperInjection { position: Position, value: Rational },
    Skipped,
}

/// The full structured verdict for one endomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub pi: PrimeSet,
    pub determinant: Rational,
    pub centre_determinant: Rational,
    pub characteristic_polynomial: Polynomial,
    pub abelianisation_charpoly: Polynomial,
    pub central: Verdict,
    pub tfab: Verdict,
    pub oracle: OracleOutcome,
    pub soundness_bug: bool,
}

/// The hom-module shape `Hom(abelianisation, centre)` of a lattice.
pub fn central_hom_module(lattice: &LieLattice) -> ModuleShape {
    localized::hom_shape(
        &lattice.abelianisation().shape,
        &lattice.centre().shape,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::LieLattice;
    use crate::pattern::Pattern;
    use crate::rational::{rat, ratio};

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

    fn integral_heisenberg() -> Arc<LieLattice> {
        let p = Pattern::new(
            3,
            [
                (pos(1, 2), PrimeSet::empty()),
                (pos(2, 3), PrimeSet::empty()),
                (pos(1, 3), PrimeSet::empty()),
            ],
            PrimeSet::empty(),
        )
        .unwrap();
        LieLattice::new(p).unwrap()
    }

    fn diag(entries: &[Rational]) -> RationalMatrix {
        let n = entries.len();
        let mut m = RationalMatrix::zero(n, n);
        for (i, e) in entries.iter().enumerate() {
            *m.at_mut(i, i) = e.clone();
        }
        m
    }

    fn phi1() -> Endomorphism {
        validate_endomorphism(&paper_lattice(), diag(&[rat(2), ratio(1, 2), rat(1)])).unwrap()
    }

    fn phi2() -> Endomorphism {
        validate_endomorphism(&paper_lattice(), diag(&[rat(2), rat(1), rat(2)])).unwrap()
    }

    #[test]
    fn phi1_validates_and_acts_as_in_the_group() {
        let e = phi1();
        assert_eq!(e.determinant(), &rat(1));
        // Group action: (a, b, c) -> (2a, b/2, c).
        let lattice = e.lattice();
        let pattern = lattice.pattern();
        let mut m = RationalMatrix::identity(3);
        *m.at_mut(0, 1) = rat(3);
        *m.at_mut(1, 2) = ratio(1, 2);
        *m.at_mut(0, 2) = ratio(5, 4);
        let g = pattern.member(m).unwrap();
        let image = pattern.exp(&pattern::LieVector::new(
            e.matrix().mul_vector(g.log().coordinates()).unwrap(),
        ));
        let image = pattern.member(image).unwrap();
        assert_eq!(image.entry(pos(1, 2)), rat(6));
        assert_eq!(image.entry(pos(2, 3)), ratio(1, 4));
        assert_eq!(image.entry(pos(1, 3)), ratio(5, 4));
    }

    #[test]
    fn swap_map_is_rejected() {
        // E12 <-> E23 with E13 -> -E13 is a Lie homomorphism but violates
        // the conductor at target (1,2).
        let swap = RationalMatrix::from_rows(vec![
            vec![rat(0), rat(1), rat(0)],
            vec![rat(1), rat(0), rat(0)],
            vec![rat(0), rat(0), rat(-1)],
        ])
        .unwrap();
        let err = validate_endomorphism(&paper_lattice(), swap).unwrap_err();
        assert_eq!(
            err,
            EndomorphismError::NotPatternPreserving {
                generator: pos(2, 3),
                target: pos(1, 2),
                order: 1,
                coefficient: rat(1),
            }
        );
    }

    #[test]
    fn non_lie_homomorphism_is_rejected() {
        // Scaling E13 inconsistently with [E12, E23] = E13.
        let m = diag(&[rat(2), rat(1), rat(1)]);
        let err = validate_endomorphism(&paper_lattice(), m).unwrap_err();
        assert!(matches!(err, EndomorphismError::NotLieHomomorphism { .. }));
    }

    #[test]
    fn singular_map_is_rejected() {
        let mut m = RationalMatrix::zero(3, 3);
        *m.at_mut(2, 2) = rat(1);
        let err = validate_endomorphism(&paper_lattice(), m).unwrap_err();
        assert!(matches!(
            err,
            EndomorphismError::NotLieHomomorphism { .. } | EndomorphismError::NotInjective
        ));
    }

    #[test]
    fn integral_shear_with_central_correction_validates() {
        // x -> x^2 y, y -> xy on the integral Heisenberg group: the entry
        // polynomial at (1,3) is t(t+1)/2, integer-valued with
        // non-integral monomial coefficients.
        let l = integral_heisenberg();
        let m = RationalMatrix::from_rows(vec![
            vec![rat(2), rat(1), rat(0)],
            vec![rat(1), rat(1), rat(0)],
            vec![rat(1), ratio(1, 2), rat(1)],
        ])
        .unwrap();
        let e = validate_endomorphism(&l, m).unwrap();
        assert_eq!(e.centre_determinant(), rat(1));
        // Without the central correction the same abelianisation data is
        // NOT an endomorphism: exp(t(E12 + E23)) has (1,3) entry t^2/2.
        let bad = RationalMatrix::from_rows(vec![
            vec![rat(2), rat(1), rat(0)],
            vec![rat(1), rat(1), rat(0)],
            vec![rat(0), rat(0), rat(1)],
        ])
        .unwrap();
        let err = validate_endomorphism(&l, bad).unwrap_err();
        assert!(matches!(
            err,
            EndomorphismError::NotPatternPreserving { target: Position { row: 1, col: 3 }, .. }
        ));
    }

    #[test]
    fn pi_like_examples() {
        let pi_empty = PrimeSet::empty();
        assert!(!phi1().is_pi_like(&pi_empty, PiLikeRoute::Both).unwrap());
        assert!(phi2().is_pi_like(&pi_empty, PiLikeRoute::Both).unwrap());
        let id = validate_endomorphism(&paper_lattice(), RationalMatrix::identity(3)).unwrap();
        assert!(id.is_pi_like(&pi_empty, PiLikeRoute::Both).unwrap());
        assert!(id.is_pi_like(&PrimeSet::of(&[3]), PiLikeRoute::Both).unwrap());
        // The failing coefficient of phi1 is exactly -5/2 on the
        // abelianisation.
        let ab = phi1().abelianisation_charpoly();
        assert_eq!(ab.coefficients(), [rat(1), ratio(-5, 2), rat(1)]);
        assert!(phi1().is_pi_like(&PrimeSet::of(&[2]), PiLikeRoute::Both).unwrap());
    }

    #[test]
    fn centre_determinants() {
        assert_eq!(phi1().centre_determinant(), rat(1));
        assert_eq!(phi2().centre_determinant(), rat(2));
        let id = validate_endomorphism(&paper_lattice(), RationalMatrix::identity(3)).unwrap();
        assert_eq!(id.centre_determinant(), rat(1));
    }

    #[test]
    fn central_criterion_on_the_counterexamples() {
        let pi = PrimeSet::empty();
        let v1 = phi1().check_central_criterion(&pi).unwrap();
        assert_eq!(v1.conclusion, Conclusion::NotApplicable);
        assert!(v1.hypotheses[0].passed);
        assert!(!v1.hypotheses[1].passed, "phi1 is not ∅-like");
        assert!(v1.hypotheses[2].passed, "phi1 has centre determinant 1");

        let v2 = phi2().check_central_criterion(&pi).unwrap();
        assert_eq!(v2.conclusion, Conclusion::NotApplicable);
        assert!(v2.hypotheses[1].passed, "phi2 is ∅-like");
        assert!(!v2.hypotheses[2].passed, "2 is not an ∅-unit");
    }

    #[test]
    fn tfab_criterion_examples() {
        let id = validate_endomorphism(&paper_lattice(), RationalMatrix::identity(3)).unwrap();
        assert_eq!(
            id.check_tfab_criterion().unwrap().conclusion,
            Conclusion::Automorphism
        );
        let v = phi1().check_tfab_criterion().unwrap();
        assert_eq!(v.conclusion, Conclusion::NotApplicable);
    }

    #[test]
    fn oracle_on_the_counterexamples() {
        for e in [phi1(), phi2()] {
            assert_eq!(
                e.surjectivity_oracle().unwrap(),
                OracleOutcome::ProperInjection { position: pos(1, 2), value: rat(1) }
            );
        }
        let id = validate_endomorphism(&paper_lattice(), RationalMatrix::identity(3)).unwrap();
        assert_eq!(id.surjectivity_oracle().unwrap(), OracleOutcome::Automorphism);
    }

    #[test]
    fn full_reports_are_consistent() {
        let pi = PrimeSet::empty();
        let r1 = phi1().full_report(&pi, true).unwrap();
        assert!(!r1.soundness_bug);
        assert_eq!(r1.central.conclusion, Conclusion::NotApplicable);
        assert_eq!(r1.tfab.conclusion, Conclusion::NotApplicable);
        assert!(matches!(r1.oracle, OracleOutcome::ProperInjection { .. }));
        let id = validate_endomorphism(&paper_lattice(), RationalMatrix::identity(3)).unwrap();
        let r = id.full_report(&pi, true).unwrap();
        assert!(!r.soundness_bug);
        assert_eq!(r.central.conclusion, Conclusion::Automorphism);
        assert_eq!(r.tfab.conclusion, Conclusion::Automorphism);
        assert_eq!(r.oracle, OracleOutcome::Automorphism);
        let skipped = id.full_report(&pi, false).unwrap();
        assert_eq!(skipped.oracle, OracleOutcome::Skipped);
    }

    #[test]
    fn theorem_a_positive_case() {
        // x -> x^2 y, y -> xy on Heisenberg(Z): integer-like with centre
        // determinant 1; both criteria certify, oracle concurs.
        let l = integral_heisenberg();
        let m = RationalMatrix::from_rows(vec![
            vec![rat(2), rat(1), rat(0)],
            vec![rat(1), rat(1), rat(0)],
            vec![rat(1), ratio(1, 2), rat(1)],
        ])
        .unwrap();
        let e = validate_endomorphism(&l, m).unwrap();
        let report = e.full_report(&PrimeSet::empty(), true).unwrap();
        assert_eq!(report.central.conclusion, Conclusion::Automorphism);
        assert_eq!(report.tfab.conclusion, Conclusion::Automorphism);
        assert_eq!(report.oracle, OracleOutcome::Automorphism);
        assert!(!report.soundness_bug);
    }

    #[test]
    fn half_heisenberg_positive_case() {
        // phi2 on the all-Z[1/2] pattern with pi = {2}: det 2 is a 2-unit.
        let p = Pattern::new(
            3,
            [
                (pos(1, 2), PrimeSet::of(&[2])),
                (pos(2, 3), PrimeSet::of(&[2])),
                (pos(1, 3), PrimeSet::of(&[2])),
            ],
            PrimeSet::of(&[2]),
        )
        .unwrap();
        let l = LieLattice::new(p).unwrap();
        let e = validate_endomorphism(&l, diag(&[rat(2), rat(1), rat(2)])).unwrap();
        let report = e.full_report(&PrimeSet::of(&[2]), true).unwrap();
        assert_eq!(report.central.conclusion, Conclusion::Automorphism);
        assert_eq!(report.oracle, OracleOutcome::Automorphism);
        assert!(!report.soundness_bug);
    }
}
