use super::{RepError, ZPoly};
use crate::par;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Square matrix over `Q[ζ]`, stored as sorted sparse rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMatrix {
    dim: usize,
    rows: Vec<Vec<(usize, ZPoly)>>,
}

fn merge_into(acc: &mut Vec<(usize, ZPoly)>, j: usize, p: ZPoly) {
    match acc.binary_search_by_key(&j, |e| e.0) {
        Ok(pos) => {
            acc[pos].1.add_assign(&p);
            if acc[pos].1.is_zero() {
                acc.remove(pos);
            }
        }
        Err(pos) => {
            if !p.is_zero() {
                acc.insert(pos, (j, p));
            }
        }
    }
}

impl RepMatrix {
    pub fn zero(dim: usize) -> Self {
        RepMatrix { dim, rows: vec![Vec::new(); dim] }
    }

    pub fn identity(dim: usize) -> Self {
        Self::scalar(dim, ZPoly::one())
    }

    pub fn scalar(dim: usize, p: ZPoly) -> Self {
        let mut m = Self::zero(dim);
        if !p.is_zero() {
            for i in 0..dim {
                m.rows[i].push((i, p.clone()));
            }
        }
        m
    }

    pub fn from_entries(dim: usize, entries: impl IntoIterator<Item = (usize, usize, ZPoly)>) -> Self {
        let mut m = Self::zero(dim);
        for (i, j, p) in entries {
            merge_into(&mut m.rows[i], j, p);
        }
        m
    }

    /// Matrix unit `e_{ij}` (zero-based) times a constant.
    pub fn unit(dim: usize, i: usize, j: usize, c: BigRational) -> Self {
        Self::from_entries(dim, [(i, j, ZPoly::constant(c))])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[Vec<(usize, ZPoly)>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> ZPoly {
        match self.rows[i].binary_search_by_key(&j, |e| e.0) {
            Ok(pos) => self.rows[i][pos].1.clone(),
            Err(_) => ZPoly::zero(),
        }
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim)
    }

    /// Highest ζ-degree of any entry.
    pub fn degree(&self) -> Option<usize> {
        self.rows.iter().flatten().filter_map(|(_, p)| p.degree()).max()
    }

    fn check(&self, o: &Self) -> Result<(), RepError> {
        if self.dim != o.dim {
            return Err(RepError::Shape(format!("{} vs {}", self.dim, o.dim)));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self, RepError> {
        self.check(o)?;
        let mut m = self.clone();
        for (i, row) in o.rows.iter().enumerate() {
            for (j, p) in row {
                merge_into(&mut m.rows[i], *j, p.clone());
            }
        }
        Ok(m)
    }

    pub fn neg(&self) -> Self {
        self.map_entries(|p| p.neg())
    }

    pub fn sub(&self, o: &Self) -> Result<Self, RepError> {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.dim);
        }
        self.map_entries(|p| p.scale(c))
    }

    pub fn shift(&self, k: usize) -> Self {
        self.map_entries(|p| p.shift(k))
    }

    /// Entries with degrees above `max` dropped.
    pub fn truncate(&self, max: usize) -> Self {
        self.map_entries(|p| p.truncate(max))
    }

    /// The constant matrix of `ζᵏ` coefficients.
    pub fn zeta_coefficient(&self, k: usize) -> Self {
        self.map_entries(|p| ZPoly::constant(p.coeff(k)))
    }

    fn map_entries(&self, f: impl Fn(&ZPoly) -> ZPoly) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|(j, p)| (*j, f(p))).filter(|(_, p)| !p.is_zero()).collect())
            .collect();
        RepMatrix { dim: self.dim, rows }
    }

    pub fn mul(&self, o: &Self) -> Result<Self, RepError> {
        self.mul_trunc(o, usize::MAX)
    }

    /// Product with degrees above `max` dropped; rows are computed in parallel.
    pub fn mul_trunc(&self, o: &Self, max: usize) -> Result<Self, RepError> {
        self.check(o)?;
        let rows = par::map(&self.rows, |row| {
            let mut dense: Vec<Option<ZPoly>> = vec![None; self.dim];
            for (k, a) in row {
                for (j, b) in &o.rows[*k] {
                    let p = a.mul_trunc(b, max);
                    match &mut dense[*j] {
                        Some(acc) => acc.add_assign(&p),
                        slot => *slot = Some(p),
                    }
                }
            }
            dense
                .into_iter()
                .enumerate()
                .filter_map(|(j, p)| p.filter(|p| !p.is_zero()).map(|p| (j, p)))
                .collect()
        });
        Ok(RepMatrix { dim: self.dim, rows })
    }

    pub fn commutator(&self, o: &Self) -> Result<Self, RepError> {
        self.mul(o)?.sub(&o.mul(self)?)
    }

    /// Kronecker product `self ⊗ o`.
    pub fn kron(&self, o: &Self) -> Self {
        let dim = self.dim * o.dim;
        let mut rows = vec![Vec::new(); dim];
        for (i1, r1) in self.rows.iter().enumerate() {
            for (i2, r2) in o.rows.iter().enumerate() {
                let row: &mut Vec<(usize, ZPoly)> = &mut rows[i1 * o.dim + i2];
                for (j1, a) in r1 {
                    for (j2, b) in r2 {
                        let p = a.mul(b);
                        if !p.is_zero() {
                            row.push((j1 * o.dim + j2, p));
                        }
                    }
                }
            }
        }
        RepMatrix { dim, rows }
    }

    /// Move tensor leg `k` (of sizes `dims`) to position `perm[k]`.
    pub fn permute_legs(&self, dims: &[usize], perm: &[usize]) -> Result<Self, RepError> {
        if dims.iter().product::<usize>() != self.dim || perm.len() != dims.len() {
            return Err(RepError::Shape("leg sizes do not match the matrix".into()));
        }
        let mut new_dims = vec![0; dims.len()];
        for (k, &p) in perm.iter().enumerate() {
            new_dims[p] = dims[k];
        }
        let map = |mut idx: usize| {
            let mut digits = vec![0; dims.len()];
            for k in (0..dims.len()).rev() {
                digits[k] = idx % dims[k];
                idx /= dims[k];
            }
            let mut out = vec![0; dims.len()];
            for (k, &p) in perm.iter().enumerate() {
                out[p] = digits[k];
            }
            out.iter().zip(&new_dims).fold(0, |acc, (d, n)| acc * n + d)
        };
        Ok(Self::from_entries(
            self.dim,
            self.rows.iter().enumerate().flat_map(|(i, r)| r.iter().map(move |(j, p)| (map(i), map(*j), p.clone()))),
        ))
    }

    pub fn trace(&self) -> ZPoly {
        let mut t = ZPoly::zero();
        for i in 0..self.dim {
            t.add_assign(&self.get(i, i));
        }
        t
    }

    /// `Σ M^k/k!` for nilpotent `M`.
    pub fn exp_nilpotent(&self) -> Result<Self, RepError> {
        self.power_series(|k| BigRational::one() / factorial(k), "exp")
    }

    /// `ln(1 + M) = Σ (−1)^{k+1} M^k/k` for nilpotent `M`.
    pub fn log1p_nilpotent(&self) -> Result<Self, RepError> {
        let s = self.power_series(
            |k| {
                let c = BigRational::new(1.into(), (k as i64).into());
                if k % 2 == 1 { c } else { -c }
            },
            "log",
        )?;
        s.sub(&Self::identity(self.dim))
    }

    /// `1 + Σ_{k≥1} c_k M^k`; `M^dim` must vanish.
    fn power_series(&self, c: impl Fn(usize) -> BigRational, what: &str) -> Result<Self, RepError> {
        let mut sum = Self::identity(self.dim);
        let mut p = Self::identity(self.dim);
        for k in 1..=self.dim {
            p = p.mul(self)?;
            if p.is_zero() {
                return Ok(sum);
            }
            sum = sum.add(&p.scale(&c(k)))?;
        }
        if p.mul(self)?.is_zero() {
            return Ok(sum);
        }
        Err(RepError::NonTerminating(format!("{what} argument is not nilpotent")))
    }

    /// Exact inverse over `Q[ζ]`. The ζ⁰ part must be the identity; the
    /// ζ-adic inverse is computed by Newton steps up to the adjugate degree
    /// bound and then checked, so a non-polynomial inverse is an error.
    pub fn inverse(&self) -> Result<Self, RepError> {
        if !self.zeta_coefficient(0).is_identity() {
            return Err(RepError::NotInvertible("ζ⁰ part is not the identity".into()));
        }
        let bound = self.dim.saturating_sub(1) * self.degree().unwrap_or(0);
        let two = Self::scalar(self.dim, ZPoly::constant(BigRational::from_integer(2.into())));
        let mut g = Self::identity(self.dim);
        let mut prec = 0usize;
        while prec < bound {
            prec = (2 * prec + 1).min(bound);
            let mg = self.mul_trunc(&g, prec)?;
            g = g.mul_trunc(&two.sub(&mg)?, prec)?;
        }
        if !self.mul(&g)?.is_identity() {
            return Err(RepError::NotInvertible("inverse is not a polynomial matrix".into()));
        }
        Ok(g)
    }
}

fn factorial(k: usize) -> BigRational {
    BigRational::from_integer((1..=k).fold(BigInt::one(), |a, i| a * BigInt::from(i)))
}
