//! The complex of `V`-valued cochains on `g + V` that vanish on purely-`V`
//! arguments, with differential `d = [[pi + rho-lift + nu-lift, .]]`.

use std::collections::HashMap;

use crate::algebra::{SkewTriple, ThreeLieAlgebra};
use crate::cochain::{cohomology_from_columns, decode_tuple, to_sparse, Cochain, CohomologyReport};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::index;
use crate::linalg::{add_scaled, column_kernel, is_zero_vector, unit_vector, Matrix, SparseEchelon, SparseVec};
use crate::rep::{
    check_genrep_eqs_with, family, run_families, total_structure, v_names, Ctx, EquationReport,
    GeneralizedRepresentation, NuMap, Representation, Slot,
};
use crate::scalar::{ParameterAssignment, Scalar};

/// A cochain on `W = g + V` with values in `W`; elements of the subcomplex
/// take values in `V` and vanish when every argument lies in `V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedCochain {
    n: usize,
    m: usize,
    inner: Cochain,
}

impl MixedCochain {
    pub fn new(n: usize, m: usize, inner: Cochain) -> Result<Self> {
        if inner.dim() != n + m || inner.codim() != n + m {
            return Err(Error::IncompatibleSignature(format!(
                "expected a cochain on {} -> {}, got {} -> {}",
                n + m,
                n + m,
                inner.dim(),
                inner.codim()
            )));
        }
        Ok(MixedCochain { n, m, inner })
    }

    pub fn zeros(degree: usize, n: usize, m: usize) -> Self {
        MixedCochain {
            n,
            m,
            inner: Cochain::zeros(degree, n + m, n + m),
        }
    }

    pub fn degree(&self) -> usize {
        self.inner.degree()
    }

    pub fn dim_g(&self) -> usize {
        self.n
    }

    pub fn dim_v(&self) -> usize {
        self.m
    }

    pub fn inner(&self) -> &Cochain {
        &self.inner
    }

    pub fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    /// A map `g -> V` given as an `m x n` matrix (column `i` is the image of `e_i`).
    pub fn from_hom(n: usize, m: usize, alpha: &Matrix) -> Result<Self> {
        if (alpha.rows(), alpha.cols()) != (m, n) {
            return Err(Error::DimensionMismatch {
                context: "map g -> V",
                expected: m * n,
                found: alpha.rows() * alpha.cols(),
            });
        }
        let mut c = MixedCochain::zeros(0, n, m);
        for i in 0..n {
            for r in 0..m {
                let x = alpha.get(r, i);
                if !x.is_zero() {
                    c.inner.add_component(&[], i, n + r, x)?;
                }
            }
        }
        Ok(c)
    }

    /// Embed a cochain on `g` with values in `V`.
    pub fn from_g_cochain(n: usize, m: usize, c: &Cochain) -> Result<Self> {
        if c.dim() != n || c.codim() != m {
            return Err(Error::IncompatibleSignature(format!(
                "expected a cochain on {n} -> {m}, got {} -> {}",
                c.dim(),
                c.codim()
            )));
        }
        let mut out = MixedCochain::zeros(c.degree(), n, m);
        for (pairs, s, l, x) in c.nonzero_entries() {
            out.inner.add_component(&pairs, s, n + l, x)?;
        }
        Ok(out)
    }

    /// The restriction to arguments in `g`, as a cochain on `g` valued in `V`.
    /// Embed a cochain on `g + V` with values in `V` (dimension `n + m`, codimension `m`).
    pub fn from_v_valued(n: usize, m: usize, c: &Cochain) -> Result<Self> {
        if c.dim() != n + m || c.codim() != m {
            return Err(Error::IncompatibleSignature(format!(
                "expected a cochain on {} -> {m}, got {} -> {}",
                n + m,
                c.dim(),
                c.codim()
            )));
        }
        let mut out = MixedCochain::zeros(c.degree(), n, m);
        for (pairs, s, l, x) in c.nonzero_entries() {
            out.inner.add_component(&pairs, s, n + l, x)?;
        }
        Ok(out)
    }

    /// The `V` components as a cochain on `g + V` with codimension `m`.
    pub fn to_v_valued(&self) -> Cochain {
        let (n, m) = (self.n, self.m);
        let mut out = Cochain::zeros(self.degree(), n + m, m);
        for (pairs, s, l, x) in self.inner.nonzero_entries() {
            if l >= n {
                out.add_component(&pairs, s, l - n, x).expect("indices in range");
            }
        }
        out
    }

    /// The map `g -> V` carried by a degree-0 cochain, as an `m x n` matrix.
    pub fn to_hom(&self) -> Matrix {
        let (n, m) = (self.n, self.m);
        let mut out = Matrix::zeros(m, n);
        for i in 0..n {
            let value = self.inner.value(&[], i);
            for r in 0..m {
                out.set(r, i, value[n + r].clone());
            }
        }
        out
    }

    pub fn forgetful_project(&self) -> Cochain {
        let (n, m) = (self.n, self.m);
        let mut out = Cochain::zeros(self.degree(), n, m);
        for (pairs, s, l, x) in self.inner.nonzero_entries() {
            let in_g = s < n && pairs.iter().all(|&(a, b)| a < n && b < n);
            if in_g && l >= n {
                out.add_component(&pairs, s, l - n, x).expect("indices in range");
            }
        }
        out
    }

    /// `Err` with a description when outside the subcomplex.
    pub fn check_membership(&self) -> std::result::Result<(), String> {
        let n = self.n;
        for (pairs, s, l, _) in self.inner.nonzero_entries() {
            if l < n {
                return Err(format!("component {} of the value lies in g", l + 1));
            }
            if s >= n && pairs.iter().all(|&(a, b)| a >= n && b >= n) {
                return Err("nonzero on arguments that all lie in V".into());
            }
        }
        Ok(())
    }

    pub fn is_in_c_greater(&self) -> bool {
        self.check_membership().is_ok()
    }

    pub fn add(&self, other: &MixedCochain) -> Result<MixedCochain> {
        Ok(MixedCochain {
            inner: self.inner.add(&other.inner)?,
            n: self.n,
            m: self.m,
        })
    }

    pub fn graded_bracket(&self, other: &MixedCochain, exec: Exec) -> Result<MixedCochain> {
        Ok(MixedCochain {
            inner: self.inner.graded_bracket(&other.inner, exec)?,
            n: self.n,
            m: self.m,
        })
    }

    pub fn instantiate(&self, values: &ParameterAssignment) -> Result<MixedCochain> {
        Ok(MixedCochain {
            inner: self.inner.instantiate(values)?,
            n: self.n,
            m: self.m,
        })
    }
}

/// Coordinates of the subcomplex in one degree: flat coordinates of the
/// underlying cochain with a `V`-valued component and not all arguments in `V`.
#[derive(Clone, Debug)]
pub struct SubcomplexBasis {
    degree: usize,
    n: usize,
    m: usize,
    flat: Vec<usize>,
    position: HashMap<usize, usize>,
}

impl SubcomplexBasis {
    pub fn new(degree: usize, n: usize, m: usize) -> Self {
        let w = n + m;
        let pairs = index::pairs(w);
        let tuples = Cochain::zeros(degree, w, w).num_tuples();
        let mut flat = Vec::new();
        for t in 0..tuples {
            let (ps, s) = decode_tuple(&pairs, w, degree, t);
            let all_v = s >= n && ps.iter().all(|&(a, _)| a >= n);
            if all_v {
                continue;
            }
            for l in n..w {
                flat.push(t * w + l);
            }
        }
        let position = flat.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        SubcomplexBasis {
            degree,
            n,
            m,
            flat,
            position,
        }
    }

    pub fn len(&self) -> usize {
        self.flat.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flat.is_empty()
    }

    pub fn element(&self, k: usize) -> MixedCochain {
        let w = self.n + self.m;
        MixedCochain {
            n: self.n,
            m: self.m,
            inner: Cochain::unit(self.degree, w, w, self.flat[k]),
        }
    }

    pub fn from_vector(&self, v: &[Scalar]) -> MixedCochain {
        let w = self.n + self.m;
        let mut data = vec![Scalar::zero(); Cochain::zeros(self.degree, w, w).coordinates().len()];
        for (k, x) in v.iter().enumerate() {
            data[self.flat[k]] = x.clone();
        }
        MixedCochain {
            n: self.n,
            m: self.m,
            inner: Cochain::from_coordinates(self.degree, w, w, data).expect("sizes agree"),
        }
    }

    pub fn to_sparse(&self, c: &MixedCochain) -> Result<SparseVec> {
        let raw = to_sparse(c.inner.coordinates())?;
        let mut entries = Vec::with_capacity(raw.entries().len());
        for (f, x) in raw.entries() {
            let k = self
                .position
                .get(f)
                .ok_or_else(|| Error::NotInCGreater(format!("coordinate {f} lies outside the subcomplex")))?;
            entries.push((*k, x.clone()));
        }
        Ok(SparseVec::from_entries(entries))
    }
}

/// A 2-cochain of the subcomplex in fully skew form: `a1` on `V ^ V ^ g`,
/// `a2` on `g ^ g ^ V`, `a3` on `g ^ g ^ g`, all valued in `V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCochainTriple {
    n: usize,
    m: usize,
    a1: Vec<Scalar>,
    a2: Vec<Scalar>,
    a3: Vec<Scalar>,
}

impl TwoCochainTriple {
    pub fn zeros(n: usize, m: usize) -> Self {
        TwoCochainTriple {
            n,
            m,
            a1: vec![Scalar::zero(); index::num_pairs(m) * n * m],
            a2: vec![Scalar::zero(); index::num_pairs(n) * m * m],
            a3: vec![Scalar::zero(); index::num_triples(n) * m],
        }
    }

    pub fn dim_g(&self) -> usize {
        self.n
    }

    pub fn dim_v(&self) -> usize {
        self.m
    }

    /// Dimension of the space of triples.
    pub fn space_dim(n: usize, m: usize) -> usize {
        let z = Self::zeros(n, m);
        z.a1.len() + z.a2.len() + z.a3.len()
    }

    pub fn coordinates(&self) -> Vec<Scalar> {
        self.a1.iter().chain(&self.a2).chain(&self.a3).cloned().collect()
    }

    pub fn from_coordinates(n: usize, m: usize, v: &[Scalar]) -> Result<Self> {
        let mut t = Self::zeros(n, m);
        let total = t.a1.len() + t.a2.len() + t.a3.len();
        if v.len() != total {
            return Err(Error::DimensionMismatch {
                context: "2-cochain coordinates",
                expected: total,
                found: v.len(),
            });
        }
        let (x1, rest) = v.split_at(t.a1.len());
        let (x2, x3) = rest.split_at(t.a2.len());
        t.a1 = x1.to_vec();
        t.a2 = x2.to_vec();
        t.a3 = x3.to_vec();
        Ok(t)
    }

    pub fn set_a1(&mut self, a: usize, b: usize, i: usize, value: &[Scalar]) -> Result<()> {
        let (s, pid) = index::signed_pair(self.m, a, b)
            .ok_or_else(|| Error::Invalid("a1 is antisymmetric in its V arguments".into()))?;
        let off = (pid * self.n + i) * self.m;
        write_signed(&mut self.a1[off..off + self.m], value, s)
    }

    pub fn set_a2(&mut self, i: usize, j: usize, a: usize, value: &[Scalar]) -> Result<()> {
        let (s, pid) = index::signed_pair(self.n, i, j)
            .ok_or_else(|| Error::Invalid("a2 is antisymmetric in its g arguments".into()))?;
        let off = (pid * self.m + a) * self.m;
        write_signed(&mut self.a2[off..off + self.m], value, s)
    }

    pub fn set_a3(&mut self, i: usize, j: usize, k: usize, value: &[Scalar]) -> Result<()> {
        let mut t = SkewTriple::zeros(self.n, self.m);
        t.set(i, j, k, value)?;
        for ([a, b, c], v) in t.entries() {
            let id = triple_id(self.n, a, b, c);
            self.a3[id * self.m..(id + 1) * self.m].clone_from_slice(v);
        }
        Ok(())
    }

    /// `a1(v_a, v_b, x_i)`.
    pub fn a1_basis(&self, a: usize, b: usize, i: usize) -> Vec<Scalar> {
        match index::signed_pair(self.m, a, b) {
            Some((s, pid)) => {
                let off = (pid * self.n + i) * self.m;
                read_signed(&self.a1[off..off + self.m], s)
            }
            None => vec![Scalar::zero(); self.m],
        }
    }

    /// `a2(x_i, x_j, v_a)`.
    pub fn a2_basis(&self, i: usize, j: usize, a: usize) -> Vec<Scalar> {
        match index::signed_pair(self.n, i, j) {
            Some((s, pid)) => {
                let off = (pid * self.m + a) * self.m;
                read_signed(&self.a2[off..off + self.m], s)
            }
            None => vec![Scalar::zero(); self.m],
        }
    }

    /// `a3(x_i, x_j, x_k)`.
    pub fn a3_basis(&self, i: usize, j: usize, k: usize) -> Vec<Scalar> {
        let mut idx = [i, j, k];
        if idx[0] == idx[1] || idx[1] == idx[2] || idx[0] == idx[2] {
            return vec![Scalar::zero(); self.m];
        }
        let mut sign = 1;
        for x in 0..3 {
            for y in 0..2 - x {
                if idx[y] > idx[y + 1] {
                    idx.swap(y, y + 1);
                    sign = -sign;
                }
            }
        }
        let id = triple_id(self.n, idx[0], idx[1], idx[2]);
        read_signed(&self.a3[id * self.m..(id + 1) * self.m], sign)
    }

    pub fn a1(&self, u: &[Scalar], w: &[Scalar], x: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.m];
        for (a, b) in index::pairs(self.m) {
            let c = &(&u[a] * &w[b]) - &(&u[b] * &w[a]);
            if c.is_zero() {
                continue;
            }
            for (i, xi) in x.iter().enumerate() {
                if !xi.is_zero() {
                    add_scaled(&mut out, &(&c * xi), &self.a1_basis(a, b, i));
                }
            }
        }
        out
    }

    pub fn a2(&self, x: &[Scalar], y: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.m];
        for (i, j) in index::pairs(self.n) {
            let c = &(&x[i] * &y[j]) - &(&x[j] * &y[i]);
            if c.is_zero() {
                continue;
            }
            for (a, va) in v.iter().enumerate() {
                if !va.is_zero() {
                    add_scaled(&mut out, &(&c * va), &self.a2_basis(i, j, a));
                }
            }
        }
        out
    }

    pub fn a3(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.m];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() || i == j {
                    continue;
                }
                for (k, zk) in z.iter().enumerate() {
                    if !zk.is_zero() {
                        add_scaled(&mut out, &(&(xi * yj) * zk), &self.a3_basis(i, j, k));
                    }
                }
            }
        }
        out
    }

    /// The fully skew triple on `g + V` with values in `g + V`.
    pub fn to_skew_triple(&self) -> SkewTriple {
        let (n, m) = (self.n, self.m);
        let mut t = SkewTriple::zeros(n + m, n + m);
        let mut put = |i: usize, j: usize, k: usize, v: &[Scalar]| {
            for (r, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    t.add_component(i, j, k, n + r, x).expect("distinct indices");
                }
            }
        };
        for (a, b) in index::pairs(m) {
            for i in 0..n {
                put(n + a, n + b, i, &self.a1_basis(a, b, i));
            }
        }
        for (i, j) in index::pairs(n) {
            for a in 0..m {
                put(i, j, n + a, &self.a2_basis(i, j, a));
            }
        }
        for [i, j, k] in index::triples(n) {
            put(i, j, k, &self.a3_basis(i, j, k));
        }
        t
    }

    pub fn to_mixed(&self) -> MixedCochain {
        MixedCochain {
            n: self.n,
            m: self.m,
            inner: self.to_skew_triple().to_cochain(),
        }
    }

    /// Read off the components of a fully skew 2-cochain of the subcomplex.
    pub fn from_mixed(c: &MixedCochain) -> Result<Self> {
        if c.degree() != 1 {
            return Err(Error::IncompatibleSignature("expected a degree-1 cochain".into()));
        }
        c.check_membership().map_err(Error::NotInCGreater)?;
        let t = c.inner.to_skew_triple()?;
        let (n, m) = (c.n, c.m);
        let mut out = Self::zeros(n, m);
        let v_part = |v: Vec<Scalar>| v[n..].to_vec();
        for (a, b) in index::pairs(m) {
            for i in 0..n {
                out.set_a1(a, b, i, &v_part(t.get(n + a, n + b, i)))?;
            }
        }
        for (i, j) in index::pairs(n) {
            for a in 0..m {
                out.set_a2(i, j, a, &v_part(t.get(i, j, n + a)))?;
            }
        }
        for [i, j, k] in index::triples(n) {
            out.set_a3(i, j, k, &v_part(t.get(i, j, k)))?;
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.coordinates().iter().all(Scalar::is_zero)
    }

    pub fn instantiate(&self, values: &ParameterAssignment) -> Result<Self> {
        let coords: Vec<Scalar> = self
            .coordinates()
            .iter()
            .map(|x| x.instantiate(values))
            .collect::<Result<_>>()?;
        Self::from_coordinates(self.n, self.m, &coords)
    }
}

fn triple_id(n: usize, i: usize, j: usize, k: usize) -> usize {
    index::triples(n)
        .iter()
        .position(|t| *t == [i, j, k])
        .expect("sorted triple")
}

fn write_signed(dst: &mut [Scalar], value: &[Scalar], s: i32) -> Result<()> {
    if dst.len() != value.len() {
        return Err(Error::DimensionMismatch {
            context: "cochain value",
            expected: dst.len(),
            found: value.len(),
        });
    }
    for (d, v) in dst.iter_mut().zip(value) {
        *d = if s == 1 { v.clone() } else { -v };
    }
    Ok(())
}

fn read_signed(src: &[Scalar], s: i32) -> Vec<Scalar> {
    src.iter().map(|x| if s == 1 { x.clone() } else { -x }).collect()
}

/// Cohomology of the subcomplex; in degree 2 also the part computed on fully
/// skew 2-cochains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenCohomologyReport {
    pub report: CohomologyReport,
    pub skew: Option<SkewPart>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewPart {
    pub dim_cochains: usize,
    pub dim_z: usize,
    pub dim_b: usize,
    pub dim_h: usize,
}

/// The differential determined by a generalized representation.
#[derive(Clone, Debug)]
pub struct GenComplex<'a> {
    alg: &'a ThreeLieAlgebra,
    gr: &'a GeneralizedRepresentation,
    pi: Cochain,
    exec: Exec,
}

impl<'a> GenComplex<'a> {
    pub fn new(alg: &'a ThreeLieAlgebra, gr: &'a GeneralizedRepresentation, exec: Exec) -> Result<Self> {
        if let Some(w) = alg.check_fi(exec).witness {
            return Err(Error::NotAThreeLie(alg.describe_witness(&w)));
        }
        let report = check_genrep_eqs_with(alg, gr, exec)?;
        if let Some(f) = report.failures.first() {
            return Err(Error::NotAGenRep(f.to_string()));
        }
        Self::new_unchecked(alg, gr, exec)
    }

    /// Build the differential without validating `(rho, nu)`.
    pub fn new_unchecked(alg: &'a ThreeLieAlgebra, gr: &'a GeneralizedRepresentation, exec: Exec) -> Result<Self> {
        let pi = total_structure(alg, gr)?.to_cochain();
        Ok(GenComplex { alg, gr, pi, exec })
    }

    pub fn algebra(&self) -> &ThreeLieAlgebra {
        self.alg
    }

    pub fn genrep(&self) -> &GeneralizedRepresentation {
        self.gr
    }

    fn n(&self) -> usize {
        self.alg.dim()
    }

    fn m(&self) -> usize {
        self.gr.dim_v()
    }

    fn check_shape(&self, c: &MixedCochain) -> Result<()> {
        if (c.n, c.m) != (self.n(), self.m()) {
            return Err(Error::IncompatibleSignature(format!(
                "cochain over {} + {} for a complex over {} + {}",
                c.n,
                c.m,
                self.n(),
                self.m()
            )));
        }
        Ok(())
    }

    pub fn d(&self, alpha: &MixedCochain) -> Result<MixedCochain> {
        self.check_shape(alpha)?;
        alpha.check_membership().map_err(Error::NotInCGreater)?;
        let out = MixedCochain {
            n: alpha.n,
            m: alpha.m,
            inner: self.pi.graded_bracket(&alpha.inner, self.exec)?,
        };
        out.check_membership()
            .map_err(|e| Error::NotInCGreater(format!("image of d: {e}")))?;
        Ok(out)
    }

    pub fn check_d_squared(&self, alpha: &MixedCochain) -> Result<bool> {
        Ok(self.d(&self.d(alpha)?)?.is_zero())
    }

    /// The two identities characterizing 1-cocycles `alpha: g -> V`
    /// (given as an `m x n` matrix).
    pub fn check_one_cocycle(&self, alpha: &Matrix) -> Result<EquationReport> {
        let (n, m) = (self.n(), self.m());
        if (alpha.rows(), alpha.cols()) != (m, n) {
            return Err(Error::DimensionMismatch {
                context: "map g -> V",
                expected: m * n,
                found: alpha.rows() * alpha.cols(),
            });
        }
        let ctx = Ctx::new(self.alg, &self.gr.rho, &self.gr.nu, None);
        let col = |i: usize| alpha.column(i);
        let fams = vec![
            family("(g,g,v)", &[Slot::G, Slot::G, Slot::V], |x| {
                let v = &ctx.ev[x[2]];
                let mut out = ctx.nu(x[0], &col(x[1]), v);
                add_scaled(&mut out, &Scalar::int(-1), &ctx.nu(x[1], &col(x[0]), v));
                out
            }),
            family("(g,g,g)", &[Slot::G, Slot::G, Slot::G], |x| {
                let (a, b, c) = (x[0], x[1], x[2]);
                let mut out = alpha.mul_vec(&ctx.br(a, b, c));
                let minus = Scalar::int(-1);
                add_scaled(&mut out, &minus, &ctx.rho(a, b, &col(c)));
                add_scaled(&mut out, &minus, &ctx.rho(b, c, &col(a)));
                add_scaled(&mut out, &minus, &ctx.rho(c, a, &col(b)));
                out
            }),
        ];
        Ok(run_families(fams, self.alg.names(), &v_names(m), self.exec))
    }

    /// The eight identities, one per argument pattern, characterizing
    /// 2-cocycles in fully skew form.
    pub fn check_two_cocycle(&self, t: &TwoCochainTriple) -> Result<EquationReport> {
        self.check_triple(t)?;
        let cc = CocycleCtx::new(self.alg, &self.gr.rho, &self.gr.nu, t);
        Ok(run_families(
            cc.families(),
            self.alg.names(),
            &v_names(self.m()),
            self.exec,
        ))
    }

    fn check_triple(&self, t: &TwoCochainTriple) -> Result<()> {
        if (t.n, t.m) != (self.n(), self.m()) {
            return Err(Error::IncompatibleSignature("2-cochain over different spaces".into()));
        }
        Ok(())
    }

    /// All eight identities evaluated on every basis tuple, concatenated.
    pub fn two_cocycle_residuals(&self, t: &TwoCochainTriple) -> Result<Vec<Scalar>> {
        self.check_triple(t)?;
        let cc = CocycleCtx::new(self.alg, &self.gr.rho, &self.gr.nu, t);
        let (n, m) = (self.n(), self.m());
        let mut out = Vec::new();
        for fam in cc.families() {
            let sizes: Vec<usize> = fam.slots.iter().map(|s| if *s == Slot::G { n } else { m }).collect();
            let total: usize = sizes.iter().product();
            for mut k in 0..total {
                let mut idx = vec![0; sizes.len()];
                for p in (0..sizes.len()).rev() {
                    idx[p] = k % sizes[p];
                    k /= sizes[p];
                }
                out.extend((fam.eval)(&idx));
            }
        }
        Ok(out)
    }

    /// Exact kernel basis of the linear system of the eight identities.
    pub fn solve_two_cocycles(&self) -> Result<Vec<TwoCochainTriple>> {
        if !self.alg.is_rational() || !self.gr.is_rational() {
            return Err(Error::ParametricEntries);
        }
        let (n, m) = (self.n(), self.m());
        let size = TwoCochainTriple::space_dim(n, m);
        let cols: Vec<Result<SparseVec>> = self.exec.map(size, |k| {
            let e = TwoCochainTriple::from_coordinates(n, m, &unit_vector(size, k))?;
            to_sparse(&self.two_cocycle_residuals(&e)?)
        });
        let cols: Vec<SparseVec> = cols.into_iter().collect::<Result<_>>()?;
        let rows = cols
            .iter()
            .flat_map(|c| c.entries().iter().map(|e| e.0 + 1))
            .max()
            .unwrap_or(0);
        let (_, kernel) = column_kernel(rows, &cols);
        kernel
            .into_iter()
            .map(|v| {
                let dense: Vec<Scalar> = v.to_dense(size).into_iter().map(Scalar::from_rational).collect();
                TwoCochainTriple::from_coordinates(n, m, &dense)
            })
            .collect()
    }

    /// Exact kernel basis of `d` on maps `g -> V`, each as an `m x n` matrix.
    pub fn solve_one_cocycles(&self) -> Result<Vec<Matrix>> {
        if !self.alg.is_rational() || !self.gr.is_rational() {
            return Err(Error::ParametricEntries);
        }
        let (n, m) = (self.n(), self.m());
        let src = SubcomplexBasis::new(0, n, m);
        let (_, kernel) = column_kernel(SubcomplexBasis::new(1, n, m).len(), &self.d_columns(0)?);
        Ok(kernel
            .into_iter()
            .map(|v| {
                let dense: Vec<Scalar> = v.to_dense(src.len()).into_iter().map(Scalar::from_rational).collect();
                src.from_vector(&dense).to_hom()
            })
            .collect())
    }

    /// Columns of `d` from degree `degree` of the subcomplex, in subcomplex coordinates.
    fn d_columns(&self, degree: usize) -> Result<Vec<SparseVec>> {
        let (n, m) = (self.n(), self.m());
        let src = SubcomplexBasis::new(degree, n, m);
        let dst = SubcomplexBasis::new(degree + 1, n, m);
        let inner = GenComplex {
            exec: Exec::Sequential,
            ..self.clone()
        };
        self.exec
            .map(src.len(), |k| dst.to_sparse(&inner.d(&src.element(k))?))
            .into_iter()
            .collect()
    }

    /// `p`-th cohomology: cocycles among cochains of degree `p - 1` modulo
    /// coboundaries of degree `p - 2`.
    pub fn cohomology(&self, p: usize, want_representatives: bool) -> Result<GenCohomologyReport> {
        if p == 0 {
            return Err(Error::Invalid("cohomology degree starts at 1".into()));
        }
        if !self.alg.is_rational() || !self.gr.is_rational() {
            return Err(Error::ParametricEntries);
        }
        let (n, m) = (self.n(), self.m());
        let dim_c = SubcomplexBasis::new(p - 1, n, m).len();
        let rows = SubcomplexBasis::new(p, n, m).len();
        let cur = self.d_columns(p - 1)?;
        let prev = if p >= 2 { self.d_columns(p - 2)? } else { Vec::new() };
        let report = cohomology_from_columns(p, dim_c, &prev, &cur, rows, want_representatives);
        let skew = if p == 2 { Some(self.skew_part(&prev)?) } else { None };
        Ok(GenCohomologyReport { report, skew })
    }

    fn skew_part(&self, coboundary_columns: &[SparseVec]) -> Result<SkewPart> {
        let (n, m) = (self.n(), self.m());
        let size = TwoCochainTriple::space_dim(n, m);
        let dst = SubcomplexBasis::new(2, n, m);
        let inner = GenComplex {
            exec: Exec::Sequential,
            ..self.clone()
        };
        let cols: Vec<SparseVec> = self
            .exec
            .map(size, |k| {
                let e = TwoCochainTriple::from_coordinates(n, m, &unit_vector(size, k))?;
                dst.to_sparse(&inner.d(&e.to_mixed())?)
            })
            .into_iter()
            .collect::<Result<_>>()?;
        let (rank, _) = column_kernel(dst.len(), &cols);
        let mut image = SparseEchelon::new(SubcomplexBasis::new(1, n, m).len());
        for c in coboundary_columns {
            image.insert(c.clone());
        }
        let dim_z = size - rank;
        let dim_b = image.rank();
        Ok(SkewPart {
            dim_cochains: size,
            dim_z,
            dim_b,
            dim_h: dim_z.saturating_sub(dim_b),
        })
    }
}

/// Evaluation of the eight 2-cocycle identities on basis tuples.
struct CocycleCtx<'a> {
    ctx: Ctx<'a>,
    t: &'a TwoCochainTriple,
    eg: Vec<Vec<Scalar>>,
}

impl<'a> CocycleCtx<'a> {
    fn new(alg: &'a ThreeLieAlgebra, rho: &'a Representation, nu: &'a NuMap, t: &'a TwoCochainTriple) -> Self {
        let n = alg.dim();
        CocycleCtx {
            ctx: Ctx::new(alg, rho, nu, None),
            t,
            eg: (0..n).map(|i| unit_vector(n, i)).collect(),
        }
    }

    fn families(&self) -> Vec<crate::rep::Family<'_>> {
        use Slot::{G, V};
        vec![
            family("(gg,gg,g)", &[G, G, G, G, G], |x| self.ggggg(x)),
            family("(gg,gg,v)", &[G, G, G, G, V], |x| self.ggggv(x)),
            family("(gv,gg,g)", &[G, G, G, G, V], |x| self.gvggg(x)),
            family("(gg,vv,g)", &[G, G, G, V, V], |x| self.ggvvg(x)),
            family("(gv,gv,g)", &[G, G, G, V, V], |x| self.gvgvg(x)),
            family("(vv,gg,g)", &[G, G, G, V, V], |x| self.vvggg(x)),
            family("(gv,vv,g)", &[G, G, V, V, V], |x| self.gvvvg(x)),
            family("(vv,gg,v)", &[G, G, V, V, V], |x| self.vvggv(x)),
        ]
    }

    fn a1(&self, u: &[Scalar], w: &[Scalar], x: &[Scalar]) -> Vec<Scalar> {
        self.t.a1(u, w, x)
    }

    fn a2(&self, x: &[Scalar], y: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        self.t.a2(x, y, v)
    }

    fn a3(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vec<Scalar> {
        self.t.a3(x, y, z)
    }

    fn ggggg(&self, x: &[usize]) -> Vec<Scalar> {
        let c = &self.ctx;
        let e = |i: usize| &self.eg[x[i]];
        let br = |i: usize, j: usize, k: usize| c.br(x[i], x[j], x[k]);
        let terms: [(i64, Vec<Scalar>); 8] = [
            (-1, c.rho(x[0], x[1], &self.a3(e(2), e(3), e(4)))),
            (-1, self.a3(e(0), e(1), &br(2, 3, 4))),
            (1, c.rho(x[3], x[4], &self.a3(e(0), e(1), e(2)))),
            (1, self.a3(&br(0, 1, 2), e(3), e(4))),
            (1, c.rho(x[4], x[2], &self.a3(e(0), e(1), e(3)))),
            (1, self.a3(e(2), &br(0, 1, 3), e(4))),
            (1, c.rho(x[2], x[3], &self.a3(e(0), e(1), e(4)))),
            (1, self.a3(e(2), e(3), &br(0, 1, 4))),
        ];
        combine(c.m(), &terms)
    }

    fn ggggv(&self, x: &[usize]) -> Vec<Scalar> {
        let c = &self.ctx;
        let e = |i: usize| &self.eg[x[i]];
        let v = &c.ev[x[4]];
        let terms: [(i64, Vec<Scalar>); 8] = [
            (1, c.nu(x[3], &self.a3(e(0), e(1), e(2)), v)),
            (1, c.nu(x[2], v, &self.a3(e(0), e(1), e(3)))),
            (1, c.rho(x[0], x[1], &self.a2(e(2), e(3), v))),
            (-1, c.rho(x[2], x[3], &self.a2(e(0), e(1), v))),
            (-1, self.a2(&c.br(x[0], x[1], x[2]), e(3), v)),
            (-1, self.a2(e(2), &c.br(x[0], x[1], x[3]), v)),
            (1, self.a2(e(0), e(1), &c.rho(x[2], x[3], v))),
            (-1, self.a2(e(2), e(3), &c.rho(x[0], x[1], v))),
        ];
        combine(c.m(), &terms)
    }

    fn gvggg(&self, x: &[usize]) -> Vec<Scalar> {
        let c = &self.ctx;
        let e = |i: usize| &self.eg[x[i]];
        let v = &c.ev[x[4]];
        let terms: [(i64, Vec<Scalar>); 8] = [
            (1, c.nu(x[0], v, &self.a3(e(1), e(2), e(3)))),
            (1, c.rho(x[2], x[3], &self.a2(e(0), e(1), v))),
            (-1, c.rho(x[1], x[3], &self.a2(e(0), e(2), v))),
            (1, c.rho(x[1], x[2], &self.a2(e(0), e(3), v))),
            (1, self.a2(e(2), e(3), &c.rho(x[0], x[1], v))),
            (-1, self.a2(e(1), e(3), &c.rho(x[0], x[2], v))),
            (1, self.a2(e(1), e(2), &c.rho(x[0], x[3], v))),
            (-1, self.a2(e(0), &c.br(x[1], x[2], x[3]), v)),
        ];
        combine(c.m(), &terms)
    }

    fn ggvvg(&self, x: &[usize]) -> Vec<Scalar> {
        let c = &self.ctx;
        let e = |i: usize| &self.eg[x[i]];
        let (v1, v2) = (&c.ev[x[3]], &c.ev[x[4]]);
        let r12 = |v: &[Scalar]| c.rho(x[0], x[1], v);
        let terms: [(i64, Vec<Scalar>); 7] = [
            (1, c.nu(x[2], v2, &self.a2(e(0), e(1), v1))),
            (1, c.nu(x[2], &self.a2(e(0), e(1), v2), v1)),
            (1, self.a2(e(0), e(1), &c.nu(x[2], v1, v2))),
            (1, r12(&self.a1(v1, v2, e(2)))),
            (-1, self.a1(&r12(v1), v2, e(2))),
            (-1, self.a1(v1, &r12(v2), e(2))),
            (-1, self.a1(v1, v2, &c.br(x[0], x[1], x[2]))),
        ];
        combine(c.m(), &terms)
    }

    fn gvgvg(&self, x: &[usize]) -> Vec<Scalar> {
        let c = &self.ctx;
        let e = |i: usize| &self.eg[x[i]];
        let (v1, v2) = (&c.ev[x[3]], &c.ev[x[4]]);
        let terms: [(i64, Vec<Scalar>); 8] = [
            (1, c.nu(x[2], v2, &self.a2(e(1), e(0), v1))),
            (1, c.nu(x[1], &self.a2(e(2), e(0), v1), v2)),
            (-1, c.nu(x[0], v1, &self.a2(e(1), e(2), v2))),
            (1, self.a2(e(1), e(2), &c.nu(x[0], v1, v2))),
            (1, c.rho(x[1], x[2], &self.a1(v1, v2, e(0)))),
            (1, self.a1(&c.rho(x[0], x[1], v1), v2, e(2))),
            (-1, self.a1(v1, &c.rho(x[1], x[2], v2), e(0))),
            (1, self.a1(v2, &c.rho(x[0], x[2], v1), e(1))),
        ];
        combine(c.m(), &terms)
    }

    fn vvggg(&self, x: &[usize]) -> Vec<Scalar> {
        let c = &self.ctx;
        let e = |i: usize| &self.eg[x[i]];
        let (v1, v2) = (&c.ev[x[3]], &c.ev[x[4]]);
        let terms: [(i64, Vec<Scalar>); 7] = [
            (1, self.a2(e(0), e(2), &c.nu(x[1], v1, v2))),
            (-1, self.a2(e(1), e(2), &c.nu(x[0], v1, v2))),
            (-1, self.a2(e(0), e(1), &c.nu(x[2], v1, v2))),
            (1, c.rho(x[0], x[2], &self.a1(v1, v2, e(1)))),
            (-1, c.rho(x[0], x[1], &self.a1(v1, v2, e(2)))),
            (-1, c.rho(x[1], x[2], &self.a1(v1, v2, e(0)))),
            (1, self.a1(v1, v2, &c.br(x[0], x[1], x[2]))),
        ];
        combine(c.m(), &terms)
    }

    fn gvvvg(&self, x: &[usize]) -> Vec<Scalar> {
        let c = &self.ctx;
        let e = |i: usize| &self.eg[x[i]];
        let (v1, v2, v3) = (&c.ev[x[2]], &c.ev[x[3]], &c.ev[x[4]]);
        let terms: [(i64, Vec<Scalar>); 6] = [
            (-1, c.nu(x[1], &self.a1(v1, v2, e(0)), v3)),
            (-1, c.nu(x[1], v2, &self.a1(v1, v3, e(0)))),
            (1, c.nu(x[0], v1, &self.a1(v2, v3, e(1)))),
            (-1, self.a1(&c.nu(x[0], v1, v2), v3, e(1))),
            (-1, self.a1(v2, &c.nu(x[0], v1, v3), e(1))),
            (1, self.a1(v1, &c.nu(x[1], v2, v3), e(0))),
        ];
        combine(c.m(), &terms)
    }

    fn vvggv(&self, x: &[usize]) -> Vec<Scalar> {
        let c = &self.ctx;
        let e = |i: usize| &self.eg[x[i]];
        let (v1, v2, v3) = (&c.ev[x[2]], &c.ev[x[3]], &c.ev[x[4]]);
        let terms: [(i64, Vec<Scalar>); 4] = [
            (1, c.nu(x[1], &self.a1(v1, v2, e(0)), v3)),
            (1, c.nu(x[0], v3, &self.a1(v1, v2, e(1)))),
            (1, self.a1(&c.nu(x[0], v1, v2), v3, e(1))),
            (-1, self.a1(&c.nu(x[1], v1, v2), v3, e(0))),
        ];
        combine(c.m(), &terms)
    }
}

fn combine(m: usize, terms: &[(i64, Vec<Scalar>)]) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); m];
    for (s, v) in terms {
        if !is_zero_vector(v) {
            add_scaled(&mut out, &Scalar::int(*s), v);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cochain::ClassicalComplex;
    use crate::rep::check_genrep_eqs;

    fn p(s: &str) -> Scalar {
        Scalar::parse(s).unwrap()
    }

    fn g3() -> ThreeLieAlgebra {
        ThreeLieAlgebra::from_brackets(3, &[([0, 1, 2], vec![(0, Scalar::one())])]).unwrap()
    }

    fn first_example() -> GeneralizedRepresentation {
        let mut rho = Representation::zero(3, 2);
        rho.set_entry(0, 2, 0, 0, p("s1*s2")).unwrap();
        rho.set_entry(0, 2, 1, 0, p("s1")).unwrap();
        rho.set_entry(0, 2, 0, 1, p("-s1*s2^2")).unwrap();
        rho.set_entry(0, 2, 1, 1, p("-s1*s2")).unwrap();
        rho.set_entry(1, 2, 0, 1, p("s2")).unwrap();
        rho.set_entry(1, 2, 1, 1, p("1")).unwrap();
        let mut nu = NuMap::zero(3, 2);
        nu.set(2, 0, 1, &[p("s3*s2"), p("s3")]).unwrap();
        GeneralizedRepresentation::new(rho, nu).unwrap()
    }

    fn second_example() -> GeneralizedRepresentation {
        let mut nu = NuMap::zero(3, 2);
        nu.set(1, 0, 1, &[p("s1"), p("s2")]).unwrap();
        nu.set(2, 0, 1, &[p("s3"), p("s2*s3/s1")]).unwrap();
        GeneralizedRepresentation::new(Representation::zero(3, 2), nu).unwrap()
    }

    fn at(gr: &GeneralizedRepresentation) -> GeneralizedRepresentation {
        let values = [("s1", 1), ("s2", 2), ("s3", 3)]
            .into_iter()
            .map(|(k, v)| (k.to_string(), Scalar::int(v).as_rational().unwrap().clone()))
            .collect();
        gr.instantiate(&values).unwrap()
    }

    fn first_cocycles() -> TwoCochainTriple {
        let mut t = TwoCochainTriple::zeros(3, 2);
        t.set_a2(0, 2, 0, &[p("s2*p1"), p("p1")]).unwrap();
        t.set_a2(0, 2, 1, &[p("-s2^2*p1"), p("-s2*p1")]).unwrap();
        t.set_a2(1, 2, 0, &[p("s2*p2"), p("p2")]).unwrap();
        t.set_a2(1, 2, 1, &[p("-s2^2*p2"), p("-s2*p2")]).unwrap();
        t
    }

    fn second_cocycles() -> TwoCochainTriple {
        let mut t = TwoCochainTriple::zeros(3, 2);
        t.set_a2(0, 1, 0, &[p("-s1*p2"), p("-s2*p2")]).unwrap();
        t.set_a2(0, 1, 1, &[p("s1*p1"), p("s2*p1")]).unwrap();
        t.set_a2(0, 2, 0, &[p("-s3*p2"), p("-s2*s3*p2/s1")]).unwrap();
        t.set_a2(0, 2, 1, &[p("s3*p1"), p("s2*s3*p1/s1")]).unwrap();
        t.set_a2(1, 2, 0, &[p("p3"), p("s2*p3/s1")]).unwrap();
        t.set_a2(1, 2, 1, &[p("p4"), p("s2*p4/s1")]).unwrap();
        t.set_a3(0, 1, 2, &[p("p1"), p("p2")]).unwrap();
        t
    }

    #[test]
    fn examples_are_generalized_representations() {
        for gr in [first_example(), second_example()] {
            let report = check_genrep_eqs(&g3(), &gr).unwrap();
            assert!(report.holds(), "{:?}", report.failures);
        }
    }

    #[test]
    fn listed_cocycles_satisfy_the_identities_symbolically() {
        let g = g3();
        for (gr, t) in [
            (first_example(), first_cocycles()),
            (second_example(), second_cocycles()),
        ] {
            let cx = GenComplex::new_unchecked(&g, &gr, Exec::Sequential).unwrap();
            let report = cx.check_two_cocycle(&t).unwrap();
            assert!(report.holds(), "{:?}", report.failures);
            assert!(cx.d(&t.to_mixed()).unwrap().is_zero());
        }
    }

    #[test]
    fn solved_cocycle_spaces_agree_with_kernel_of_d() {
        // dimensions frozen from the kernel of the assembled differential
        let g = g3();
        for (gr, dim) in [(at(&first_example()), 7), (at(&second_example()), 7)] {
            let cx = GenComplex::new(&g, &gr, Exec::default()).unwrap();
            let sols = cx.solve_two_cocycles().unwrap();
            assert_eq!(sols.len(), dim);
            let skew = cx.cohomology(2, false).unwrap().skew.unwrap();
            assert_eq!(skew.dim_z, dim);
            for s in &sols {
                assert!(cx.d(&s.to_mixed()).unwrap().is_zero());
                assert!(cx.check_two_cocycle(s).unwrap().holds());
            }
        }
    }

    #[test]
    fn differential_squares_to_zero() {
        let g = g3();
        let gr = at(&second_example());
        let cx = GenComplex::new(&g, &gr, Exec::Sequential).unwrap();
        for degree in 0..2 {
            let basis = SubcomplexBasis::new(degree, 3, 2);
            for k in 0..basis.len() {
                assert!(cx.check_d_squared(&basis.element(k)).unwrap());
            }
        }
    }

    #[test]
    fn triple_round_trip() {
        let t = first_cocycles();
        let back = TwoCochainTriple::from_mixed(&t.to_mixed()).unwrap();
        assert_eq!(back, t);
        assert_eq!(TwoCochainTriple::space_dim(3, 2), 6 + 12 + 2);
    }

    #[test]
    fn membership_is_enforced() {
        let g = g3();
        let gr = at(&first_example());
        let cx = GenComplex::new(&g, &gr, Exec::Sequential).unwrap();
        let mut c = MixedCochain::zeros(0, 3, 2);
        c.inner.add_component(&[], 3, 4, &Scalar::one()).unwrap();
        assert!(matches!(cx.d(&c), Err(Error::NotInCGreater(_))));
        let mut c = MixedCochain::zeros(0, 3, 2);
        c.inner.add_component(&[], 0, 1, &Scalar::one()).unwrap();
        assert!(!c.is_in_c_greater());
    }

    #[test]
    fn g_cochains_project_back() {
        let mut c = Cochain::zeros(1, 3, 2);
        c.add_component(&[(0, 1)], 2, 1, &Scalar::int(5)).unwrap();
        let mixed = MixedCochain::from_g_cochain(3, 2, &c).unwrap();
        assert!(mixed.is_in_c_greater());
        assert_eq!(mixed.forgetful_project(), c);
    }

    #[test]
    fn zero_nu_matches_classical_differential_on_g() {
        let g = g3();
        let gr = GeneralizedRepresentation::from_rho(g.adjoint_rep().unwrap());
        let cx = GenComplex::new(&g, &gr, Exec::Sequential).unwrap();
        let classical = ClassicalComplex::new(&g, &gr.rho).unwrap();
        for k in 0..Cochain::zeros(0, 3, 3).coordinates().len() {
            let c = Cochain::unit(0, 3, 3, k);
            let mixed = MixedCochain::from_g_cochain(3, 3, &c).unwrap();
            let d = cx.d(&mixed).unwrap().forgetful_project();
            assert_eq!(d, classical.delta(&c, Exec::Sequential).unwrap());
        }
    }

    #[test]
    fn v_valued_round_trip() {
        let values = [
            ("s1", 1),
            ("s2", 2),
            ("s3", 3),
            ("p1", 1),
            ("p2", -1),
            ("p3", 2),
            ("p4", 5),
        ]
        .into_iter()
        .map(|(k, v)| (k.to_string(), Scalar::int(v).as_rational().unwrap().clone()))
        .collect();
        let t = second_cocycles().instantiate(&values).unwrap();
        let c = t.to_mixed();
        let back = MixedCochain::from_v_valued(3, 2, &c.to_v_valued()).unwrap();
        assert_eq!(back, c);
        assert!(MixedCochain::from_v_valued(3, 2, &Cochain::zeros(1, 5, 5)).is_err());
    }

    #[test]
    fn solved_one_cocycles_satisfy_the_identities() {
        for gr in [first_example(), second_example()] {
            let gr = at(&gr);
            let alg = g3();
            let cx = GenComplex::new(&alg, &gr, Exec::Sequential).unwrap();
            let sols = cx.solve_one_cocycles().unwrap();
            assert_eq!(sols.len(), cx.cohomology(1, false).unwrap().report.dim_z);
            for a in &sols {
                assert!(cx.check_one_cocycle(a).unwrap().holds());
                assert_eq!(MixedCochain::from_hom(3, 2, a).unwrap().to_hom(), *a);
            }
        }
    }

    #[test]
    fn one_cocycles_agree_with_kernel_of_d() {
        let g = g3();
        let gr = at(&second_example());
        let cx = GenComplex::new(&g, &gr, Exec::Sequential).unwrap();
        for k in 0..6 {
            let mut alpha = Matrix::zeros(2, 3);
            alpha.set(k / 3, k % 3, Scalar::one());
            let eqs = cx.check_one_cocycle(&alpha).unwrap().holds();
            let by_d = cx.d(&MixedCochain::from_hom(3, 2, &alpha).unwrap()).unwrap().is_zero();
            assert_eq!(eqs, by_d, "alpha = e{k}");
        }
    }
}
