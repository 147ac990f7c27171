//! Armature gauges `g(Σ λ_a x_a) = min(v(λ_a) + ½v(x_a²))`, their axiom
//! checks, and the degree-0 residue algebra.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::armature::{
    class_label, gf2_basis, ArmatureElement, ArmatureError, ArmaturePresentation, Class,
    SubPresentation,
};
use crate::linalg;
use crate::scalar::{BaseField, GammaValue, LaurentScalar, ScalarError};

type S<F> = LaurentScalar<F>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GaugeError {
    #[error("element has a term of negative value {0}")]
    NegativeValue(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Armature(#[from] ArmatureError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Armature gauge of a presentation.
///
/// `anisotropy_assumed` records that uniqueness of the involution-special
/// gauge rests on an anisotropy hypothesis that is not decided here.
#[derive(Clone, Debug)]
pub struct ArmatureGauge<F> {
    pres: ArmaturePresentation<F>,
    grades: Vec<GammaValue>,
    pub anisotropy_assumed: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Violation {
    pub check: String,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq, Default)]
pub struct CheckReport {
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub(crate) fn record(&mut self, ok: bool, check: &str, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations.push(Violation {
                check: check.to_string(),
                detail: detail(),
            });
        }
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.checked += other.checked;
        self.violations.extend(other.violations);
    }
}

impl<F: BaseField> ArmatureGauge<F> {
    pub fn new(pres: &ArmaturePresentation<F>) -> Self {
        let grades = pres
            .classes()
            .map(|a| {
                pres.square_of(a)
                    .valuation()
                    .halve()
                    .expect("integer valuations halve exactly")
            })
            .collect();
        ArmatureGauge {
            pres: pres.clone(),
            grades,
            anisotropy_assumed: true,
        }
    }

    pub fn presentation(&self) -> &ArmaturePresentation<F> {
        &self.pres
    }

    /// `ḡ(a) = ½·v(x_a²)`.
    pub fn grade(&self, a: Class) -> &GammaValue {
        &self.grades[a as usize]
    }

    pub fn grades(&self) -> &[GammaValue] {
        &self.grades
    }

    pub fn eval(&self, x: &ArmatureElement<F>) -> GammaValue {
        x.terms()
            .map(|(a, c)| &c.with_arity(self.pres.arity()).valuation() + self.grade(a))
            .min()
            .unwrap_or(GammaValue::Infinity)
    }

    /// `g(xy) ≥ g(x) + g(y)` on every class pair and on the given samples.
    pub fn check_surmultiplicative(
        &self,
        samples: &[(ArmatureElement<F>, ArmatureElement<F>)],
    ) -> CheckReport {
        let mut report = CheckReport::default();
        let p = &self.pres;
        for a in p.classes() {
            for b in p.classes() {
                let lhs = &p.cocycle(a, b).valuation() + self.grade(a ^ b);
                let rhs = self.grade(a) + self.grade(b);
                report.record(lhs >= rhs, "surmultiplicative", || {
                    format!("classes {} and {}", class_label(a), class_label(b))
                });
            }
        }
        for (x, y) in samples {
            let lhs = self.eval(&p.mul(x, y));
            let rhs = &self.eval(x) + &self.eval(y);
            report.record(lhs >= rhs, "surmultiplicative", || {
                format!("x = {}, y = {}", x, y)
            });
        }
        report
    }

    /// Invariance `g(θ(x)) = g(x)` and specialness `g(θ(x)x) = 2g(x)`,
    /// exhaustive on classes and on the given samples.
    pub fn check_special(&self, samples: &[ArmatureElement<F>]) -> CheckReport {
        let mut report = CheckReport::default();
        let p = &self.pres;
        let classes: Vec<ArmatureElement<F>> =
            p.classes().map(ArmatureElement::basis).collect();
        for x in classes.iter().chain(samples) {
            let tx = p.apply_involution(x);
            report.record(self.eval(&tx) == self.eval(x), "invariant", || {
                format!("x = {}", x)
            });
            let g = self.eval(x);
            report.record(self.eval(&p.mul(&tx, x)) == &g + &g, "special", || {
                format!("x = {}", x)
            });
        }
        report
    }

    /// `ḡ(a + b) ≡ ḡ(a) + ḡ(b)` modulo the integer lattice.
    pub fn check_homomorphism(&self) -> CheckReport {
        let mut report = CheckReport::default();
        for a in self.pres.classes() {
            for b in self.pres.classes() {
                let lhs = self.grade(a ^ b).class_mod_integers();
                let rhs = (self.grade(a) + self.grade(b)).class_mod_integers();
                report.record(lhs == rhs, "grade homomorphism", || {
                    format!("classes {} and {}", class_label(a), class_label(b))
                });
            }
        }
        report
    }

    /// Classes of integral grade.
    pub fn kernel(&self) -> Vec<Class> {
        self.pres
            .classes()
            .filter(|&a| self.grade(a).is_integral())
            .collect()
    }

    /// Number of distinct grade classes in `Γ / ℤⁿ`.
    pub fn image_size(&self) -> usize {
        self.grades
            .iter()
            .map(|g| g.class_mod_integers())
            .collect::<BTreeSet<_>>()
            .len()
    }

    /// Kernel subgroup and the degree-0 presentation over `F`.
    pub fn kernel_and_residue(&self) -> Result<ResidueReport<F>, GaugeError> {
        let kernel = self.kernel();
        let basis = gf2_basis(&kernel);
        let sub = self.pres.span_presentation(&basis)?;
        let sp = &sub.presentation;
        let mut shifts = Vec::new();
        let mut squares = Vec::new();
        for k in 0..sp.rank() {
            let sq = &sp.squares()[k];
            squares.push(S::constant(sq.leading_coefficient().unwrap()));
            shifts.push(sq.valuation_vector().unwrap().iter().map(|e| e / 2).collect());
        }
        let residue = ArmaturePresentation::new(
            0,
            squares,
            sp.pairing_matrix().to_vec(),
            sp.signs().to_vec(),
        )?;
        Ok(ResidueReport {
            kernel,
            image_size: self.image_size(),
            order: self.pres.order(),
            residue,
            sub,
            shifts,
            parent_grades: self.grades.clone(),
            arity: self.pres.arity(),
        })
    }
}

/// Kernel `𝒞₀` of the grade map and the residue presentation of
/// `gr(A)₀`, whose generators are the kernel basis generators divided by
/// `t^{v(x²)/2}`.
#[derive(Clone, Debug)]
pub struct ResidueReport<F> {
    pub kernel: Vec<Class>,
    pub image_size: usize,
    pub order: usize,
    pub residue: ArmaturePresentation<F>,
    pub sub: SubPresentation<F>,
    shifts: Vec<Vec<i64>>,
    parent_grades: Vec<GammaValue>,
    arity: usize,
}

impl<F: BaseField> ResidueReport<F> {
    pub fn cardinality_law_holds(&self) -> bool {
        self.kernel.len() * self.image_size == self.order
    }

    /// `t^{s_d}` with `z_d = y_d / t^{s_d}` for the residue word `z_d`.
    fn shift_monomial(&self, d: Class) -> S<F> {
        let mut exps = vec![0i64; self.arity];
        for (k, s) in self.shifts.iter().enumerate() {
            if d >> k & 1 == 1 {
                for (e, x) in exps.iter_mut().zip(s) {
                    *e += x;
                }
            }
        }
        S::monomial(F::one(), &exps)
    }

    /// Degree-0 component of `x` (which must have nonnegative gauge) in
    /// the residue presentation.
    pub fn project(&self, x: &ArmatureElement<F>) -> Result<ArmatureElement<F>, GaugeError> {
        let mut out = ArmatureElement::zero();
        let sub_classes = self.sub.classes();
        for (a, c) in x.terms() {
            let Some(d) = sub_classes.iter().position(|&p| p == a) else {
                // non-integral grade: the term lies in a nonzero degree
                let g = &c.with_arity(self.arity).valuation() + &self.parent_grades[a as usize];
                if g < GammaValue::zero(self.arity) {
                    return Err(GaugeError::NegativeValue(g.to_string()));
                }
                continue;
            };
            let d = d as Class;
            // x_a = z_d · t^{s_d} / corr[d]
            let unit = self.sub.from_parent(&ArmatureElement::basis(a))?;
            let corr_inv = unit.coeff(d);
            let coeff = &(c * &corr_inv) * &self.shift_monomial(d);
            let v = coeff.with_arity(self.arity).valuation();
            let zero = GammaValue::zero(self.arity);
            if v < zero {
                return Err(GaugeError::NegativeValue(v.to_string()));
            }
            if v == zero {
                out = out.add(&ArmatureElement::term(
                    d,
                    S::constant(coeff.leading_coefficient().unwrap()),
                ));
            }
        }
        Ok(out)
    }

    pub fn degree0_algebra(&self) -> FiniteAlgebra<F> {
        FiniteAlgebra::from_presentation(&self.residue)
    }
}

/// Finite-dimensional `F`-algebra given by structure constants
/// `e_i·e_j = Σ_k c_{ijk} e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAlgebra<F> {
    dim: usize,
    table: Vec<Vec<Vec<F>>>,
    one: Vec<F>,
}

impl<F: BaseField> FiniteAlgebra<F> {
    pub fn new(table: Vec<Vec<Vec<F>>>, one: Vec<F>) -> Self {
        FiniteAlgebra {
            dim: one.len(),
            table,
            one,
        }
    }

    /// Twisted group algebra of a presentation over `F` (height 0).
    pub fn from_presentation(p: &ArmaturePresentation<F>) -> Self {
        let n = p.order();
        let mut table = vec![vec![vec![F::zero(); n]; n]; n];
        for a in 0..n {
            for b in 0..n {
                let c = p.cocycle(a as Class, b as Class);
                table[a][b][a ^ b] = c.constant_value().expect("presentation over F");
            }
        }
        let mut one = vec![F::zero(); n];
        one[0] = F::one();
        FiniteAlgebra { dim: n, table, one }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mul(&self, x: &[F], y: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi.clone() * yj.clone();
                for (k, t) in self.table[i][j].iter().enumerate() {
                    if !t.is_zero() {
                        out[k] = out[k].clone() + c.clone() * t.clone();
                    }
                }
            }
        }
        out
    }

    fn trace_of_left_mul(&self, x: &[F]) -> F {
        let mut tr = F::zero();
        for k in 0..self.dim {
            let mut e = vec![F::zero(); self.dim];
            e[k] = F::one();
            tr = tr + self.mul(x, &e)[k].clone();
        }
        tr
    }

    /// Trace-form nondegeneracy; in characteristic 0 this is equivalent to
    /// semisimplicity.
    pub fn is_semisimple(&self) -> Result<bool, GaugeError> {
        if F::characteristic() != 0 {
            return Err(GaugeError::Unsupported(format!(
                "trace-form semisimplicity test over {}",
                F::name()
            )));
        }
        let basis = self.basis();
        let gram: Vec<Vec<F>> = basis
            .iter()
            .map(|x| {
                basis
                    .iter()
                    .map(|y| self.trace_of_left_mul(&self.mul(x, y)))
                    .collect()
            })
            .collect();
        Ok(linalg::rank(&gram) == self.dim)
    }

    fn basis(&self) -> Vec<Vec<F>> {
        (0..self.dim)
            .map(|k| {
                let mut e = vec![F::zero(); self.dim];
                e[k] = F::one();
                e
            })
            .collect()
    }

    /// Basis of the center.
    pub fn center(&self) -> Vec<Vec<F>> {
        let basis = self.basis();
        let mut rows = Vec::new();
        for e in &basis {
            // columns: unknown coordinates z_k; rows: coordinates of z·e − e·z
            let images: Vec<Vec<F>> = basis
                .iter()
                .map(|b| {
                    let l = self.mul(b, e);
                    let r = self.mul(e, b);
                    l.into_iter().zip(r).map(|(x, y)| x - y).collect()
                })
                .collect();
            for k in 0..self.dim {
                rows.push((0..self.dim).map(|j| images[j][k].clone()).collect());
            }
        }
        linalg::nullspace(&rows, self.dim)
    }

    fn powers(&self, x: &[F], n: usize) -> Vec<Vec<F>> {
        let mut out = vec![self.one.clone()];
        for _ in 0..n {
            let next = self.mul(out.last().unwrap(), x);
            out.push(next);
        }
        out
    }

    /// Monic minimal polynomial of `x`, constant term first.
    pub fn minimal_polynomial(&self, x: &[F]) -> Vec<F> {
        let pw = self.powers(x, self.dim);
        for d in 1..=self.dim {
            // solve Σ_{k<d} c_k x^k = −x^d
            let rows: Vec<Vec<F>> = (0..self.dim)
                .map(|r| (0..d).map(|k| pw[k][r].clone()).collect())
                .collect();
            let rhs: Vec<F> = pw[d].iter().map(|v| -v.clone()).collect();
            if let Some(c) = linalg::solve(&rows, &rhs) {
                let mut poly = c;
                poly.push(F::one());
                return poly;
            }
        }
        unreachable!("Cayley–Hamilton bounds the degree")
    }

    fn eval_poly(&self, poly: &[F], x: &[F]) -> Vec<F> {
        let mut acc = vec![F::zero(); self.dim];
        for c in poly.iter().rev() {
            acc = self.mul(&acc, x);
            for (a, o) in acc.iter_mut().zip(&self.one) {
                *a = a.clone() + c.clone() * o.clone();
            }
        }
        acc
    }

    /// A central idempotent other than 0 and 1, found from a root of the
    /// minimal polynomial of a central element.
    pub fn central_idempotent(&self) -> Result<Option<Vec<F>>, GaugeError> {
        let center = self.center();
        let mut candidates = center.clone();
        for i in 0..center.len() {
            for j in i + 1..center.len() {
                candidates.push(
                    center[i]
                        .iter()
                        .zip(&center[j])
                        .map(|(x, y)| x.clone() + y.clone())
                        .collect(),
                );
            }
        }
        for z in candidates {
            let m = self.minimal_polynomial(&z);
            if m.len() < 3 {
                continue;
            }
            let Some(r) = F::find_root(&m)? else { continue };
            // m = (X − r)·q; e = q(z)/q(r)
            let mut q = vec![F::zero(); m.len() - 1];
            let mut carry = F::zero();
            for k in (1..m.len()).rev() {
                carry = m[k].clone() + carry * r.clone();
                q[k - 1] = carry.clone();
            }
            let q_at_r = q
                .iter()
                .rev()
                .fold(F::zero(), |acc, c| acc * r.clone() + c.clone());
            if q_at_r.is_zero() {
                continue;
            }
            let e: Vec<F> = self
                .eval_poly(&q, &z)
                .into_iter()
                .map(|v| v / q_at_r.clone())
                .collect();
            let zero = vec![F::zero(); self.dim];
            if e != zero && e != self.one && self.mul(&e, &e) == e {
                return Ok(Some(e));
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{parse_scalar, Rational};

    fn s(src: &str, n: usize) -> S<Rational> {
        parse_scalar(src, n).unwrap()
    }

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn s2() -> ArmaturePresentation<Rational> {
        ArmaturePresentation::standard(
            2,
            vec![s("-1", 2), s("-1", 2), s("t1", 2), s("t2", 2)],
            vec![-1, -1, -1, -1],
        )
        .unwrap()
    }

    fn s1() -> ArmaturePresentation<Rational> {
        ArmaturePresentation::standard(
            1,
            vec![s("-1", 1), s("-1", 1), s("1", 1), s("t", 1)],
            vec![-1, -1, 1, -1],
        )
        .unwrap()
    }

    #[test]
    fn grades_and_eval() {
        let g = ArmatureGauge::new(&s2());
        assert_eq!(g.grade(0b0100).to_string(), "(1/2, 0)");
        assert_eq!(g.eval(&ArmatureElement::one()), GammaValue::zero(2));
        assert_eq!(g.eval(&ArmatureElement::zero()), GammaValue::Infinity);
        let g1 = ArmatureGauge::new(&s1());
        assert_eq!(g1.eval(&ArmatureElement::basis(0b1001)).to_string(), "(1/2)");
        assert!(g.check_homomorphism().passed());
        assert!(g.check_surmultiplicative(&[]).passed());
        assert!(g.check_special(&[]).passed());
    }

    #[test]
    fn residue_of_s2() {
        let g = ArmatureGauge::new(&s2());
        let r = g.kernel_and_residue().unwrap();
        assert_eq!(r.kernel.len(), 4);
        assert!(r.cardinality_law_holds());
        assert_eq!(r.residue.squares(), &[s("-1", 0), s("-1", 0)]);
        assert_eq!(r.residue.signs(), &[-1, -1]);
        assert!(r.degree0_algebra().is_semisimple().unwrap());
        assert_eq!(r.degree0_algebra().central_idempotent().unwrap(), None);
    }

    #[test]
    fn residue_of_s1_is_not_simple() {
        let g = ArmatureGauge::new(&s1());
        let r = g.kernel_and_residue().unwrap();
        assert_eq!(r.kernel.len(), 8);
        let alg = r.degree0_algebra();
        assert!(alg.is_semisimple().unwrap());
        let e = alg.central_idempotent().unwrap().expect("idempotent");
        assert_eq!(alg.mul(&e, &e), e);
    }

    #[test]
    fn dual_numbers_are_not_semisimple() {
        // F[x]/(x²)
        let table = vec![
            vec![vec![q(1), q(0)], vec![q(0), q(1)]],
            vec![vec![q(0), q(1)], vec![q(0), q(0)]],
        ];
        let a = FiniteAlgebra::new(table, vec![q(1), q(0)]);
        assert!(!a.is_semisimple().unwrap());
    }

    #[test]
    fn projection_of_degree_zero_parts() {
        let g = ArmatureGauge::new(&s2());
        let r = g.kernel_and_residue().unwrap();
        let x = ArmatureElement::basis(0b0001).add(&ArmatureElement::term(0b0100, s("t2", 2)));
        let p = r.project(&x).unwrap();
        assert_eq!(p, ArmatureElement::basis(0b01));
        let bad = ArmatureElement::term(0b0001, s("1/t1", 2));
        assert!(r.project(&bad).is_err());
    }
}
