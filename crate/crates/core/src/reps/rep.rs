use super::{RepError, RepMatrix, ZPoly};
use crate::algebras::d_entry;
use crate::ncalg::{Presentation, TensorElement, Word};
use crate::scalars::Rat;
use crate::twists::{iota_images, Carrier, IotaVariant, TwistError};
use num_rational::BigRational;
use num_traits::One;
use std::collections::BTreeMap;

/// Generator images as exact matrices over `Q[ζ]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixRep {
    pub name: String,
    pub dim: usize,
    pub images: BTreeMap<String, RepMatrix>,
}

/// The defining representation of `sl_n` on `Qⁿ`: `E_ij` is the matrix unit and
/// `D_p = diag((n−p)/n, …, −p/n, …)`.
pub fn fundamental_rep(n: usize) -> Result<MatrixRep, RepError> {
    if !(3..=4).contains(&n) {
        return Err(RepError::Unsupported(format!("fundamental representation for n = {n}")));
    }
    let mut images = BTreeMap::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                images.insert(format!("E{i}{j}"), RepMatrix::unit(n, i - 1, j - 1, BigRational::one()));
            }
        }
    }
    for p in 1..n {
        let diag = (1..=n).map(|i| (i - 1, i - 1, ZPoly::constant(d_entry(n, p, i).0)));
        images.insert(format!("D{p}"), RepMatrix::from_entries(n, diag));
    }
    Ok(MatrixRep { name: format!("V{n}"), dim: n, images })
}

impl MatrixRep {
    /// `x ↦ ρ_a(x)⊗1 + 1⊗ρ_b(x)`, the tensor product for primitive generators.
    pub fn coproduct(a: &MatrixRep, b: &MatrixRep) -> Result<MatrixRep, RepError> {
        let (ia, ib) = (RepMatrix::identity(a.dim), RepMatrix::identity(b.dim));
        let mut images = BTreeMap::new();
        for (g, x) in &a.images {
            let y = b.images.get(g).ok_or_else(|| RepError::UnknownGenerator(g.clone()))?;
            images.insert(g.clone(), x.kron(&ib).add(&ia.kron(y))?);
        }
        Ok(MatrixRep { name: format!("{}⊗{}", a.name, b.name), dim: a.dim * b.dim, images })
    }

    /// `ρ∘ι`: images of the generators of the semi-classical algebra.
    pub fn pullback(&self, variant: &IotaVariant) -> Result<MatrixRep, RepError> {
        let images = iota_images(self, variant)?.into_iter().map(|(g, m)| (g.to_string(), m)).collect();
        Ok(MatrixRep { name: format!("{}∘ι", self.name), dim: self.dim, images })
    }

    pub fn image(&self, g: &str) -> Result<&RepMatrix, RepError> {
        self.images.get(g).ok_or_else(|| RepError::UnknownGenerator(g.to_string()))
    }

    pub fn word(&self, pres: &Presentation<Rat>, w: &Word) -> Result<RepMatrix, RepError> {
        let mut acc = RepMatrix::identity(self.dim);
        for l in w.letters() {
            if l.exp < 0 {
                return Err(RepError::Unsupported("negative power in a representation".into()));
            }
            let x = self.image(pres.gen_name(l.gen))?;
            for _ in 0..l.exp {
                acc = acc.mul(x)?;
            }
        }
        Ok(acc)
    }

    /// Names of the rules `ba → rhs` of `pres` that `ρ` does not respect.
    pub fn homomorphism_failures(&self, pres: &Presentation<Rat>) -> Result<Vec<String>, RepError> {
        let mut out = Vec::new();
        for r in pres.rules() {
            let (b, a) = r.lhs;
            let lhs = self.image(pres.gen_name(b))?.mul(self.image(pres.gen_name(a))?)?;
            let mut rhs = RepMatrix::zero(self.dim);
            for (w, c) in &r.rhs {
                let c = ZPoly::from_series(c).ok_or(RepError::Truncated)?;
                rhs = rhs.add(&scale_poly(&self.word(pres, w)?, &c)?)?;
            }
            if lhs != rhs {
                out.push(format!("{} {}", pres.gen_name(b), pres.gen_name(a)));
            }
        }
        Ok(out)
    }
}

pub(crate) fn scale_poly(m: &RepMatrix, p: &ZPoly) -> Result<RepMatrix, RepError> {
    m.mul(&RepMatrix::scalar(m.dim(), p.clone()))
}

fn to_twist(e: RepError) -> TwistError {
    TwistError::Evaluation(e.to_string())
}

impl Carrier for MatrixRep {
    type El = RepMatrix;

    fn gen(&self, name: &str) -> Result<RepMatrix, TwistError> {
        self.image(name).cloned().map_err(to_twist)
    }

    fn unit(&self) -> RepMatrix {
        RepMatrix::identity(self.dim)
    }

    fn add(&self, a: &RepMatrix, b: &RepMatrix) -> Result<RepMatrix, TwistError> {
        a.add(b).map_err(to_twist)
    }

    fn scale(&self, a: &RepMatrix, c: &Rat) -> RepMatrix {
        a.scale(&c.0)
    }

    fn shift(&self, a: &RepMatrix, k: usize) -> RepMatrix {
        a.shift(k)
    }

    fn mul(&self, a: &RepMatrix, b: &RepMatrix) -> Result<RepMatrix, TwistError> {
        a.mul(b).map_err(to_twist)
    }

    fn inverse(&self, a: &RepMatrix) -> Result<RepMatrix, TwistError> {
        a.inverse().map_err(to_twist)
    }

    fn log1p(&self, a: &RepMatrix) -> Result<RepMatrix, TwistError> {
        a.log1p_nilpotent().map_err(to_twist)
    }
}

/// Exact image of a multi-leg element, one representation per leg. Fails if a
/// coefficient series reaches its truncation order.
pub fn evaluate(x: &TensorElement<Rat>, pres: &Presentation<Rat>, reps: &[&MatrixRep]) -> Result<RepMatrix, RepError> {
    evaluate_with(x, pres, reps, |s| ZPoly::from_series(s).ok_or(RepError::Truncated))
}

/// Image of a truncated element, valid modulo `ζ^{order+1}`.
pub fn evaluate_truncated(x: &TensorElement<Rat>, pres: &Presentation<Rat>, reps: &[&MatrixRep]) -> Result<RepMatrix, RepError> {
    let m = evaluate_with(x, pres, reps, |s| Ok(ZPoly::from_truncated(s)))?;
    Ok(m.truncate(x.order()))
}

fn evaluate_with(
    x: &TensorElement<Rat>,
    pres: &Presentation<Rat>,
    reps: &[&MatrixRep],
    coeff: impl Fn(&crate::scalars::ZetaSeries<Rat>) -> Result<ZPoly, RepError>,
) -> Result<RepMatrix, RepError> {
    if reps.len() != x.legs() {
        return Err(RepError::Shape(format!("{} representations for {} legs", reps.len(), x.legs())));
    }
    let dim = reps.iter().map(|r| r.dim).product();
    let mut acc = RepMatrix::zero(dim);
    for (legs, c) in x.terms() {
        let mut t = RepMatrix::scalar(1, coeff(c)?);
        for (w, rep) in legs.iter().zip(reps) {
            t = t.kron(&rep.word(pres, w)?);
        }
        acc = acc.add(&t)?;
    }
    Ok(acc)
}
