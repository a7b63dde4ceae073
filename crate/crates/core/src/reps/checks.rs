use super::evaluate::fp_matrix;
use super::rep::evaluate;
use super::{MatrixRep, RepError, RepMatrix};
use crate::ncalg::{Presentation, TensorElement};
use crate::scalars::{Coeff, Rat};
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// `R₁₂R₁₃R₂₃ − R₂₃R₁₃R₁₂` for `R` acting on `V⊗V`, `dim V = n`.
pub fn qybe_check(r: &RepMatrix, n: usize) -> Result<RepMatrix, RepError> {
    if r.dim() != n * n {
        return Err(RepError::Shape(format!("R of size {} on V⊗V with dim V = {n}", r.dim())));
    }
    let id = RepMatrix::identity(n);
    let r12 = r.kron(&id);
    let r23 = id.kron(r);
    let r13 = r12.permute_legs(&[n, n, n], &[0, 2, 1])?;
    let lhs = r12.mul(&r13)?.mul(&r23)?;
    let rhs = r23.mul(&r13)?.mul(&r12)?;
    lhs.sub(&rhs)
}

/// `(ζ¹ coefficient of R) − ρ⊗ρ(r)`.
pub fn classical_limit_check(
    big_r: &RepMatrix,
    r: &TensorElement<Rat>,
    pres: &Presentation<Rat>,
    rep: &MatrixRep,
) -> Result<RepMatrix, RepError> {
    if !big_r.zeta_coefficient(0).is_identity() {
        return Err(RepError::Shape("ζ⁰ part of R is not the identity".into()));
    }
    big_r.zeta_coefficient(1).sub(&evaluate(r, pres, &[rep, rep])?)
}

fn bracket(x: &TensorElement<Rat>, y: &TensorElement<Rat>, pres: &Presentation<Rat>) -> Result<TensorElement<Rat>, RepError> {
    Ok(x.mul(y, pres)?.sub(&y.mul(x, pres)?)?)
}

/// `[[r, r]] = [r₁₂, r₁₃] + [r₁₂, r₂₃] + [r₁₃, r₂₃]` in normal form.
pub fn cybe_check(r: &TensorElement<Rat>, pres: &Presentation<Rat>) -> Result<TensorElement<Rat>, RepError> {
    check_bivector(r)?;
    let r12 = r.embed(&[0, 1], 3)?;
    let r13 = r.embed(&[0, 2], 3)?;
    let r23 = r.embed(&[1, 2], 3)?;
    Ok(bracket(&r12, &r13, pres)?.add(&bracket(&r12, &r23, pres)?)?.add(&bracket(&r13, &r23, pres)?)?)
}

fn check_bivector(r: &TensorElement<Rat>) -> Result<(), RepError> {
    if r.legs() != 2 {
        return Err(RepError::NotBivector("expected two legs".into()));
    }
    for (legs, c) in r.terms() {
        let linear = legs.iter().all(|w| w.letters().len() == 1 && w.letters()[0].exp == 1);
        if !linear || c.valuation() != Some(0) || c.coeffs().iter().skip(1).any(|x| !x.is_zero()) {
            return Err(RepError::NotBivector("terms must be constant multiples of x⊗y with x, y generators".into()));
        }
    }
    Ok(())
}

/// Basis of the maximal parabolic carrying `classical_r(n)`: the `D_p`, every
/// `E_ij` with `i < j`, and `E_ij` with `i > j ≥ 2`.
pub fn parabolic_basis(n: usize) -> Vec<String> {
    let mut b: Vec<String> = (1..n).map(|p| format!("D{p}")).collect();
    for i in 1..=n {
        for j in 1..=n {
            if i < j || (i > j && j >= 2) {
                b.push(format!("E{i}{j}"));
            }
        }
    }
    b
}

/// Determinant of the coefficient matrix `r = Σ r^{ij} b_i⊗b_j` over the parabolic basis.
pub fn frobenius_check(r: &TensorElement<Rat>, pres: &Presentation<Rat>, n: usize) -> Result<Rat, RepError> {
    check_bivector(r)?;
    let basis = parabolic_basis(n);
    let index: BTreeMap<&str, usize> = basis.iter().enumerate().map(|(i, b)| (b.as_str(), i)).collect();
    let dim = basis.len();
    let mut m = vec![vec![BigRational::zero(); dim]; dim];
    for (legs, c) in r.terms() {
        let pos = |k: usize| {
            let name = pres.gen_name(legs[k].letters()[0].gen);
            index.get(name).copied().ok_or_else(|| RepError::NotBivector(format!("{name} is outside the parabolic")))
        };
        m[pos(0)?][pos(1)?] += &c.coeff(0).0;
    }
    Ok(Rat(determinant(m)))
}

/// Exact determinant by fraction Gaussian elimination.
pub fn determinant(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det *= &pivot;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &pivot;
            for c in col..n {
                let d = &f * &m[col][c];
                m[r][c] -= d;
            }
        }
    }
    det
}

/// `F₁₂(Δ⊗id)(F) − F₂₃(id⊗Δ)(F)` on `V⊗V⊗V` for `F = F_p(n, a)`, with no truncation.
pub fn matrix_cocycle_residual(n: usize, a: &Rat, v: &MatrixRep) -> Result<RepMatrix, RepError> {
    let vv = MatrixRep::coproduct(v, v)?;
    let id = RepMatrix::identity(v.dim);
    let f = fp_matrix(n, a, [v, v])?;
    let left = f.kron(&id).mul(&fp_matrix(n, a, [&vv, v])?)?;
    let right = id.kron(&f).mul(&fp_matrix(n, a, [v, &vv])?)?;
    left.sub(&right)
}

/// Random elements of `U(sl_n)`: `terms` words of length ≤ 3 with small integer coefficients.
fn random_element(pres: &Presentation<Rat>, rng: &mut impl rand::Rng, terms: usize) -> Result<TensorElement<Rat>, RepError> {
    let names: Vec<&str> = pres.generators().iter().map(|g| g.name.as_str()).collect();
    let mut acc = TensorElement::zero(1, 0);
    for _ in 0..terms {
        let len = rng.gen_range(1..=3);
        let word: Vec<&str> = (0..len).map(|_| names[rng.gen_range(0..names.len())]).collect();
        let mut c = rng.gen_range(-3i64..=3);
        if c == 0 {
            c = 1;
        }
        let mut t = TensorElement::one(1, 0).scale(&Rat::from_int(c));
        for g in word {
            t = t.mul(&TensorElement::gen(pres, g, 0)?, pres)?;
        }
        acc = acc.add(&t)?;
    }
    Ok(acc)
}

/// Number of random pairs with `ρ(xy) ≠ ρ(x)ρ(y)`; `xy` is taken in normal form.
pub fn multiplicativity_failures(pres: &Presentation<Rat>, rep: &MatrixRep, seed: u64, samples: usize) -> Result<usize, RepError> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut bad = 0;
    for _ in 0..samples {
        let x = random_element(pres, &mut rng, 3)?;
        let y = random_element(pres, &mut rng, 3)?;
        let xy = x.mul(&y, pres)?;
        if evaluate(&xy, pres, &[rep])? != evaluate(&x, pres, &[rep])?.mul(&evaluate(&y, pres, &[rep])?)? {
            bad += 1;
        }
    }
    Ok(bad)
}
