//! Representations `rho: g ^ g -> End(V)`, the maps `nu: g -> Hom(V ^ V, V)`,
//! their lifts to `g + V`, the identities they must satisfy and semidirect
//! products.

use std::collections::BTreeSet;
use std::fmt;

use crate::algebra::{default_names, format_vector, SkewTriple, ThreeLieAlgebra};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::index;
use crate::linalg::{add_scaled, is_zero_vector, unit_vector, Matrix};
use crate::scalar::{ParameterAssignment, Scalar};

/// `rho(e_i, e_j)` for `i < j`, extended antisymmetrically. Matrix entry
/// `(r, c)` is the coefficient of `v_r` in `rho(e_i, e_j) v_c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    n: usize,
    m: usize,
    mats: Vec<Matrix>,
}

impl Representation {
    pub fn zero(n: usize, m: usize) -> Self {
        Representation {
            n,
            m,
            mats: vec![Matrix::zeros(m, m); index::num_pairs(n)],
        }
    }

    pub fn dim_g(&self) -> usize {
        self.n
    }

    pub fn dim_v(&self) -> usize {
        self.m
    }

    fn pair(&self, i: usize, j: usize) -> Result<(i32, usize)> {
        if i >= self.n || j >= self.n {
            return Err(Error::Invalid(format!(
                "pair ({}, {}) out of range for dimension {}",
                i + 1,
                j + 1,
                self.n
            )));
        }
        index::signed_pair(self.n, i, j)
            .ok_or_else(|| Error::Invalid(format!("repeated index in pair ({}, {})", i + 1, j + 1)))
    }

    pub fn set(&mut self, i: usize, j: usize, matrix: Matrix) -> Result<()> {
        if (matrix.rows(), matrix.cols()) != (self.m, self.m) {
            return Err(Error::DimensionMismatch {
                context: "representation matrix",
                expected: self.m,
                found: matrix.rows().max(matrix.cols()),
            });
        }
        let (s, id) = self.pair(i, j)?;
        self.mats[id] = if s == 1 { matrix } else { matrix.scale(&Scalar::int(-1)) };
        Ok(())
    }

    /// Set the coefficient of `v_r` in `rho(e_i, e_j) v_c`.
    pub fn set_entry(&mut self, i: usize, j: usize, r: usize, c: usize, value: Scalar) -> Result<()> {
        let (s, id) = self.pair(i, j)?;
        if r >= self.m || c >= self.m {
            return Err(Error::Invalid("representation entry out of range".into()));
        }
        self.mats[id].set(r, c, if s == 1 { value } else { -value });
        Ok(())
    }

    pub fn matrix(&self, i: usize, j: usize) -> Matrix {
        match index::signed_pair(self.n, i, j) {
            Some((1, id)) => self.mats[id].clone(),
            Some((_, id)) => self.mats[id].scale(&Scalar::int(-1)),
            None => Matrix::zeros(self.m, self.m),
        }
    }

    /// `rho(e_i, e_j) v`.
    pub fn apply(&self, i: usize, j: usize, v: &[Scalar]) -> Vec<Scalar> {
        match index::signed_pair(self.n, i, j) {
            Some((s, id)) => {
                let w = self.mats[id].mul_vec(v);
                if s == 1 {
                    w
                } else {
                    w.into_iter().map(|x| -x).collect()
                }
            }
            None => vec![Scalar::zero(); self.m],
        }
    }

    /// `rho(x, y) v` for arbitrary vectors.
    pub fn act(&self, x: &[Scalar], y: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.m];
        for (i, j) in index::pairs(self.n) {
            let c = &(&x[i] * &y[j]) - &(&x[j] * &y[i]);
            if !c.is_zero() {
                add_scaled(&mut out, &c, &self.apply(i, j, v));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.mats.iter().all(Matrix::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.mats.iter().all(Matrix::is_rational)
    }

    pub fn parameters(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for m in &self.mats {
            for r in 0..m.rows() {
                for x in m.row(r) {
                    out.extend(x.parameters());
                }
            }
        }
        out
    }

    pub fn instantiate(&self, values: &ParameterAssignment) -> Result<Representation> {
        Ok(Representation {
            n: self.n,
            m: self.m,
            mats: self.mats.iter().map(|m| m.instantiate(values)).collect::<Result<_>>()?,
        })
    }
}

/// `nu(e_i)(v_a, v_b)` for `a < b`, extended antisymmetrically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NuMap {
    n: usize,
    m: usize,
    values: Vec<Scalar>,
}

impl NuMap {
    pub fn zero(n: usize, m: usize) -> Self {
        NuMap {
            n,
            m,
            values: vec![Scalar::zero(); n * index::num_pairs(m) * m],
        }
    }

    pub fn dim_g(&self) -> usize {
        self.n
    }

    pub fn dim_v(&self) -> usize {
        self.m
    }

    fn offset(&self, i: usize, pid: usize) -> usize {
        (i * index::num_pairs(self.m) + pid) * self.m
    }

    pub fn set(&mut self, i: usize, a: usize, b: usize, value: &[Scalar]) -> Result<()> {
        if value.len() != self.m {
            return Err(Error::DimensionMismatch {
                context: "nu value",
                expected: self.m,
                found: value.len(),
            });
        }
        if i >= self.n || a >= self.m || b >= self.m {
            return Err(Error::Invalid("nu index out of range".into()));
        }
        let (s, pid) = index::signed_pair(self.m, a, b)
            .ok_or_else(|| Error::Invalid(format!("nu is antisymmetric; ({}, {}) repeats an index", a + 1, b + 1)))?;
        let off = self.offset(i, pid);
        for (dst, v) in self.values[off..off + self.m].iter_mut().zip(value) {
            *dst = if s == 1 { v.clone() } else { -v };
        }
        Ok(())
    }

    /// `nu(e_i)(v_a, v_b)`.
    pub fn get(&self, i: usize, a: usize, b: usize) -> Vec<Scalar> {
        match index::signed_pair(self.m, a, b) {
            Some((s, pid)) => {
                let off = self.offset(i, pid);
                self.values[off..off + self.m]
                    .iter()
                    .map(|x| if s == 1 { x.clone() } else { -x })
                    .collect()
            }
            None => vec![Scalar::zero(); self.m],
        }
    }

    /// `nu(e_i)(u, w)` for arbitrary vectors of `V`.
    pub fn apply(&self, i: usize, u: &[Scalar], w: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.m];
        for (pid, (a, b)) in index::pairs(self.m).into_iter().enumerate() {
            let c = &(&u[a] * &w[b]) - &(&u[b] * &w[a]);
            if c.is_zero() {
                continue;
            }
            let off = self.offset(i, pid);
            add_scaled(&mut out, &c, &self.values[off..off + self.m]);
        }
        out
    }

    /// `nu(x)(u, w)` for an arbitrary algebra element `x`.
    pub fn act(&self, x: &[Scalar], u: &[Scalar], w: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.m];
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                add_scaled(&mut out, c, &self.apply(i, u, w));
            }
        }
        out
    }

    pub fn coordinates(&self) -> &[Scalar] {
        &self.values
    }

    pub fn from_coordinates(n: usize, m: usize, values: Vec<Scalar>) -> Result<Self> {
        let z = NuMap::zero(n, m);
        if values.len() != z.values.len() {
            return Err(Error::DimensionMismatch {
                context: "nu coordinates",
                expected: z.values.len(),
                found: values.len(),
            });
        }
        Ok(NuMap { values, ..z })
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Scalar::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.values.iter().all(Scalar::is_rational)
    }

    pub fn parameters(&self) -> BTreeSet<String> {
        self.values.iter().flat_map(|v| v.parameters()).collect()
    }

    pub fn instantiate(&self, values: &ParameterAssignment) -> Result<NuMap> {
        Ok(NuMap {
            n: self.n,
            m: self.m,
            values: self
                .values
                .iter()
                .map(|v| v.instantiate(values))
                .collect::<Result<_>>()?,
        })
    }
}

/// A pair `(rho, nu)` on the same module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralizedRepresentation {
    pub rho: Representation,
    pub nu: NuMap,
}

impl GeneralizedRepresentation {
    pub fn new(rho: Representation, nu: NuMap) -> Result<Self> {
        if (rho.n, rho.m) != (nu.n, nu.m) {
            return Err(Error::DimensionMismatch {
                context: "rho and nu module dimension",
                expected: rho.m,
                found: nu.m,
            });
        }
        Ok(GeneralizedRepresentation { rho, nu })
    }

    pub fn from_rho(rho: Representation) -> Self {
        let nu = NuMap::zero(rho.n, rho.m);
        GeneralizedRepresentation { rho, nu }
    }

    pub fn dim_g(&self) -> usize {
        self.rho.n
    }

    pub fn dim_v(&self) -> usize {
        self.rho.m
    }

    pub fn is_rational(&self) -> bool {
        self.rho.is_rational() && self.nu.is_rational()
    }

    pub fn parameters(&self) -> BTreeSet<String> {
        let mut p = self.rho.parameters();
        p.extend(self.nu.parameters());
        p
    }

    pub fn instantiate(&self, values: &ParameterAssignment) -> Result<Self> {
        Ok(GeneralizedRepresentation {
            rho: self.rho.instantiate(values)?,
            nu: self.nu.instantiate(values)?,
        })
    }
}

/// Which space a basis argument of an identity ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    G,
    V,
}

/// First basis tuple on which an identity fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquationFailure {
    pub equation: &'static str,
    pub arguments: Vec<String>,
    pub defect: String,
}

impl fmt::Display for EquationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} fails at ({}): defect {}",
            self.equation,
            self.arguments.join(", "),
            self.defect
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EquationReport {
    pub checked: Vec<&'static str>,
    pub failures: Vec<EquationFailure>,
}

impl EquationReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failed(&self) -> Vec<&'static str> {
        self.failures.iter().map(|f| f.equation).collect()
    }

    pub fn merge(&mut self, other: EquationReport) {
        self.checked.extend(other.checked);
        self.failures.extend(other.failures);
    }
}

type Identity<'a> = Box<dyn Fn(&[usize]) -> Vec<Scalar> + Sync + Send + 'a>;

/// Named identity over basis tuples, valued in `V` (or `g` when `out_g`).
pub(crate) struct Family<'a> {
    pub name: &'static str,
    pub slots: Vec<Slot>,
    pub eval: Identity<'a>,
}

pub(crate) fn run_families(
    families: Vec<Family<'_>>,
    g_names: &[String],
    v_names: &[String],
    exec: Exec,
) -> EquationReport {
    let mut report = EquationReport::default();
    for fam in families {
        report.checked.push(fam.name);
        let sizes: Vec<usize> = fam
            .slots
            .iter()
            .map(|s| match s {
                Slot::G => g_names.len(),
                Slot::V => v_names.len(),
            })
            .collect();
        let total: usize = sizes.iter().product();
        let decode = |mut t: usize| -> Vec<usize> {
            let mut idx = vec![0; sizes.len()];
            for k in (0..sizes.len()).rev() {
                idx[k] = t % sizes[k];
                t /= sizes[k];
            }
            idx
        };
        let hit = exec.find_first(total, |t| {
            let idx = decode(t);
            let d = (fam.eval)(&idx);
            (!is_zero_vector(&d)).then_some((idx, d))
        });
        if let Some((idx, d)) = hit {
            let arguments = idx
                .iter()
                .zip(&fam.slots)
                .map(|(&i, s)| match s {
                    Slot::G => g_names[i].clone(),
                    Slot::V => v_names[i].clone(),
                })
                .collect();
            report.failures.push(EquationFailure {
                equation: fam.name,
                arguments,
                defect: format_vector(&d, v_names),
            });
        }
    }
    report
}

fn sub_assign(acc: &mut [Scalar], v: &[Scalar]) {
    add_scaled(acc, &Scalar::int(-1), v);
}

fn add_assign(acc: &mut [Scalar], v: &[Scalar]) {
    add_scaled(acc, &Scalar::one(), v);
}

/// Basis-level evaluation helpers shared by the identity checkers.
pub(crate) struct Ctx<'a> {
    pub alg: &'a ThreeLieAlgebra,
    pub rho: &'a Representation,
    pub nu: &'a NuMap,
    pub omega: Option<&'a SkewTriple>,
    pub ev: Vec<Vec<Scalar>>,
}

impl<'a> Ctx<'a> {
    pub fn new(
        alg: &'a ThreeLieAlgebra,
        rho: &'a Representation,
        nu: &'a NuMap,
        omega: Option<&'a SkewTriple>,
    ) -> Self {
        let m = rho.dim_v();
        Ctx {
            alg,
            rho,
            nu,
            omega,
            ev: (0..m).map(|i| unit_vector(m, i)).collect(),
        }
    }

    pub fn m(&self) -> usize {
        self.rho.dim_v()
    }

    pub fn zero(&self) -> Vec<Scalar> {
        vec![Scalar::zero(); self.m()]
    }

    pub fn br(&self, i: usize, j: usize, k: usize) -> Vec<Scalar> {
        self.alg.bracket_basis(i, j, k)
    }

    pub fn rho(&self, i: usize, j: usize, v: &[Scalar]) -> Vec<Scalar> {
        self.rho.apply(i, j, v)
    }

    /// `rho(x, e_j) v` with `x` a vector of `g`.
    pub fn rho_xb(&self, x: &[Scalar], j: usize, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero();
        for (l, c) in x.iter().enumerate() {
            if !c.is_zero() {
                add_scaled(&mut out, c, &self.rho.apply(l, j, v));
            }
        }
        out
    }

    /// `rho(e_i, y) v` with `y` a vector of `g`.
    pub fn rho_bx(&self, i: usize, y: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero();
        for (l, c) in y.iter().enumerate() {
            if !c.is_zero() {
                add_scaled(&mut out, c, &self.rho.apply(i, l, v));
            }
        }
        out
    }

    pub fn nu(&self, i: usize, u: &[Scalar], w: &[Scalar]) -> Vec<Scalar> {
        self.nu.apply(i, u, w)
    }

    pub fn nu_x(&self, x: &[Scalar], u: &[Scalar], w: &[Scalar]) -> Vec<Scalar> {
        self.nu.act(x, u, w)
    }

    fn omega_triple(&self) -> &SkewTriple {
        self.omega.expect("identity needs omega")
    }

    pub fn omega(&self, i: usize, j: usize, k: usize) -> Vec<Scalar> {
        self.omega_triple().get(i, j, k)
    }

    /// `omega(e_i, e_j, u)` for a vector `u` of `g`.
    pub fn omega_bbx(&self, i: usize, j: usize, u: &[Scalar]) -> Vec<Scalar> {
        self.omega_triple().apply(i, j, u)
    }

    pub fn r1(&self, x: &[usize]) -> Vec<Scalar> {
        let [a, b, c, d, e] = [x[0], x[1], x[2], x[3], x[4]];
        let v = &self.ev[e];
        let mut out = self.rho(a, b, &self.rho(c, d, v));
        sub_assign(&mut out, &self.rho_xb(&self.br(a, b, c), d, v));
        sub_assign(&mut out, &self.rho_bx(c, &self.br(a, b, d), v));
        sub_assign(&mut out, &self.rho(c, d, &self.rho(a, b, v)));
        out
    }

    pub fn r2(&self, x: &[usize]) -> Vec<Scalar> {
        let [a, b, c, d, e] = [x[0], x[1], x[2], x[3], x[4]];
        let v = &self.ev[e];
        let mut out = self.rho_bx(a, &self.br(b, c, d), v);
        sub_assign(&mut out, &self.rho(c, d, &self.rho(a, b, v)));
        add_assign(&mut out, &self.rho(b, d, &self.rho(a, c, v)));
        sub_assign(&mut out, &self.rho(b, c, &self.rho(a, d, v)));
        out
    }

    pub fn r3(&self, x: &[usize]) -> Vec<Scalar> {
        let [a, b, c, e1, e2] = [x[0], x[1], x[2], x[3], x[4]];
        let (v1, v2) = (&self.ev[e1], &self.ev[e2]);
        let mut out = self.rho(a, b, &self.nu(c, v1, v2));
        sub_assign(&mut out, &self.nu_x(&self.br(a, b, c), v1, v2));
        sub_assign(&mut out, &self.nu(c, &self.rho(a, b, v1), v2));
        sub_assign(&mut out, &self.nu(c, v1, &self.rho(a, b, v2)));
        out
    }

    pub fn r4(&self, x: &[usize]) -> Vec<Scalar> {
        let [a, b, c, e1, e2] = [x[0], x[1], x[2], x[3], x[4]];
        let (v1, v2) = (&self.ev[e1], &self.ev[e2]);
        let mut out = self.nu(a, v1, &self.rho(b, c, v2));
        sub_assign(&mut out, &self.nu(c, v2, &self.rho(b, a, v1)));
        sub_assign(&mut out, &self.nu(b, &self.rho(c, a, v1), v2));
        sub_assign(&mut out, &self.rho(b, c, &self.nu(a, v1, v2)));
        out
    }

    pub fn r5(&self, x: &[usize]) -> Vec<Scalar> {
        let [a, b, c, e1, e2] = [x[0], x[1], x[2], x[3], x[4]];
        let (v1, v2) = (&self.ev[e1], &self.ev[e2]);
        let mut out = self.nu_x(&self.br(a, b, c), v1, v2);
        sub_assign(&mut out, &self.rho(b, c, &self.nu(a, v1, v2)));
        sub_assign(&mut out, &self.rho(c, a, &self.nu(b, v1, v2)));
        sub_assign(&mut out, &self.rho(a, b, &self.nu(c, v1, v2)));
        out
    }

    pub fn r6(&self, x: &[usize]) -> Vec<Scalar> {
        let [a, b, e1, e2, e3] = [x[0], x[1], x[2], x[3], x[4]];
        let (v1, v2, v3) = (&self.ev[e1], &self.ev[e2], &self.ev[e3]);
        let mut out = self.nu(a, v1, &self.nu(b, v2, v3));
        sub_assign(&mut out, &self.nu(b, &self.nu(a, v1, v2), v3));
        sub_assign(&mut out, &self.nu(b, v2, &self.nu(a, v1, v3)));
        out
    }

    pub fn r7(&self, x: &[usize]) -> Vec<Scalar> {
        let [a, b, e1, e2, e3] = [x[0], x[1], x[2], x[3], x[4]];
        let (v1, v2, v3) = (&self.ev[e1], &self.ev[e2], &self.ev[e3]);
        let mut out = self.nu(a, &self.nu(b, v1, v2), v3);
        sub_assign(&mut out, &self.nu(b, &self.nu(a, v1, v2), v3));
        out
    }

    pub fn t1(&self, x: &[usize]) -> Vec<Scalar> {
        let [a, b, c, d, e] = [x[0], x[1], x[2], x[3], x[4]];
        let mut out = self.zero();
        sub_assign(&mut out, &self.rho(a, b, &self.omega(c, d, e)));
        sub_assign(&mut out, &self.omega_bbx(a, b, &self.br(c, d, e)));
        add_assign(&mut out, &self.rho(d, e, &self.omega(a, b, c)));
        add_assign(&mut out, &self.omega_bbx(d, e, &self.br(a, b, c)));
        add_assign(&mut out, &self.rho(e, c, &self.omega(a, b, d)));
        add_assign(&mut out, &self.omega_bbx(e, c, &self.br(a, b, d)));
        add_assign(&mut out, &self.rho(c, d, &self.omega(a, b, e)));
        add_assign(&mut out, &self.omega_bbx(c, d, &self.br(a, b, e)));
        out
    }

    pub fn t2(&self, x: &[usize]) -> Vec<Scalar> {
        let [a, b, c, d, e] = [x[0], x[1], x[2], x[3], x[4]];
        let v = &self.ev[e];
        let mut out = self.nu(a, v, &self.omega(b, c, d));
        add_assign(&mut out, &self.rho_xb(&self.br(b, c, d), a, v));
        add_assign(&mut out, &self.rho(c, d, &self.rho(a, b, v)));
        sub_assign(&mut out, &self.rho(b, d, &self.rho(a, c, v)));
        add_assign(&mut out, &self.rho(b, c, &self.rho(a, d, v)));
        out
    }

    pub fn t3(&self, x: &[usize]) -> Vec<Scalar> {
        let [a, b, c, d, e] = [x[0], x[1], x[2], x[3], x[4]];
        let v = &self.ev[e];
        let mut out = self.rho(a, b, &self.rho(c, d, v));
        sub_assign(&mut out, &self.rho(c, d, &self.rho(a, b, v)));
        sub_assign(&mut out, &self.rho_xb(&self.br(a, b, c), d, v));
        sub_assign(&mut out, &self.nu(d, v, &self.omega(a, b, c)));
        sub_assign(&mut out, &self.rho_bx(c, &self.br(a, b, d), v));
        add_assign(&mut out, &self.nu(c, v, &self.omega(a, b, d)));
        out
    }
}

pub(crate) fn family<'a>(
    name: &'static str,
    slots: &[Slot],
    f: impl Fn(&[usize]) -> Vec<Scalar> + Sync + Send + 'a,
) -> Family<'a> {
    Family {
        name,
        slots: slots.to_vec(),
        eval: Box::new(f),
    }
}

use Slot::{G, V};

pub(crate) const GGGGV: [Slot; 5] = [G, G, G, G, V];
pub(crate) const GGGVV: [Slot; 5] = [G, G, G, V, V];
pub(crate) const GGVVV: [Slot; 5] = [G, G, V, V, V];
pub(crate) const GGGGG: [Slot; 5] = [G, G, G, G, G];

pub fn v_names(m: usize) -> Vec<String> {
    default_names("v", m)
}

fn check_dims(alg: &ThreeLieAlgebra, n: usize) -> Result<()> {
    if alg.dim() != n {
        return Err(Error::DimensionMismatch {
            context: "representation of the algebra",
            expected: alg.dim(),
            found: n,
        });
    }
    Ok(())
}

/// The two defining identities of a representation, on all basis tuples.
pub fn check_representation(alg: &ThreeLieAlgebra, rho: &Representation) -> Result<EquationReport> {
    check_representation_with(alg, rho, Exec::default())
}

pub fn check_representation_with(alg: &ThreeLieAlgebra, rho: &Representation, exec: Exec) -> Result<EquationReport> {
    check_dims(alg, rho.dim_g())?;
    let nu = NuMap::zero(rho.dim_g(), rho.dim_v());
    let ctx = Ctx::new(alg, rho, &nu, None);
    let fams = vec![family("r1", &GGGGV, |x| ctx.r1(x)), family("r2", &GGGGV, |x| ctx.r2(x))];
    Ok(run_families(fams, alg.names(), &v_names(rho.dim_v()), exec))
}

/// The six identities characterizing a generalized representation.
pub fn check_genrep_eqs(alg: &ThreeLieAlgebra, gr: &GeneralizedRepresentation) -> Result<EquationReport> {
    check_genrep_eqs_with(alg, gr, Exec::default())
}

pub fn check_genrep_eqs_with(
    alg: &ThreeLieAlgebra,
    gr: &GeneralizedRepresentation,
    exec: Exec,
) -> Result<EquationReport> {
    check_dims(alg, gr.dim_g())?;
    let ctx = Ctx::new(alg, &gr.rho, &gr.nu, None);
    let fams = vec![
        family("r1", &GGGGV, |x| ctx.r1(x)),
        family("r2", &GGGGV, |x| ctx.r2(x)),
        family("r3", &GGGVV, |x| ctx.r3(x)),
        family("r4", &GGGVV, |x| ctx.r4(x)),
        family("r6", &GGVVV, |x| ctx.r6(x)),
        family("r7", &GGVVV, |x| ctx.r7(x)),
    ];
    Ok(run_families(fams, alg.names(), &v_names(gr.dim_v()), exec))
}

/// The derived identity expressing `nu([x1,x2,x3])` through `rho` and `nu`.
pub fn check_r5(alg: &ThreeLieAlgebra, gr: &GeneralizedRepresentation) -> Result<EquationReport> {
    check_dims(alg, gr.dim_g())?;
    let ctx = Ctx::new(alg, &gr.rho, &gr.nu, None);
    let fams = vec![family("r5", &GGGVV, |x| ctx.r5(x))];
    Ok(run_families(fams, alg.names(), &v_names(gr.dim_v()), Exec::default()))
}

/// The bracket of `g` placed on `g + V` (zero whenever a `V` argument appears).
pub fn lift_bracket(alg: &ThreeLieAlgebra, m: usize) -> SkewTriple {
    let n = alg.dim();
    let slots: Vec<usize> = (0..n).collect();
    alg.structure().embed(n + m, n + m, &slots, 0)
}

/// `rho(x, y) w + rho(y, z) u + rho(z, x) v` as a skew triple on `g + V`.
pub fn lift_rho(rho: &Representation) -> SkewTriple {
    let (n, m) = (rho.dim_g(), rho.dim_v());
    let mut t = SkewTriple::zeros(n + m, n + m);
    for (i, j) in index::pairs(n) {
        let mat = rho.matrix(i, j);
        for c in 0..m {
            for r in 0..m {
                let x = mat.get(r, c);
                if !x.is_zero() {
                    t.add_component(i, j, n + c, n + r, x).expect("distinct indices");
                }
            }
        }
    }
    t
}

/// `nu(x)(v ^ w) + nu(y)(w ^ u) + nu(z)(u ^ v)` as a skew triple on `g + V`.
pub fn lift_nu(nu: &NuMap) -> SkewTriple {
    let (n, m) = (nu.dim_g(), nu.dim_v());
    let mut t = SkewTriple::zeros(n + m, n + m);
    for i in 0..n {
        for (a, b) in index::pairs(m) {
            for (r, x) in nu.get(i, a, b).iter().enumerate() {
                if !x.is_zero() {
                    t.add_component(i, n + a, n + b, n + r, x).expect("distinct indices");
                }
            }
        }
    }
    t
}

/// `pi + rho-lift + nu-lift` on `g + V`.
pub fn total_structure(alg: &ThreeLieAlgebra, gr: &GeneralizedRepresentation) -> Result<SkewTriple> {
    check_dims(alg, gr.dim_g())?;
    lift_bracket(alg, gr.dim_v())
        .add(&lift_rho(&gr.rho))?
        .add(&lift_nu(&gr.nu))
}

fn sum_names(alg: &ThreeLieAlgebra, m: usize) -> Vec<String> {
    let mut names = alg.names().to_vec();
    names.extend(v_names(m));
    names
}

pub fn semidirect(alg: &ThreeLieAlgebra, rho: &Representation) -> Result<ThreeLieAlgebra> {
    generalized_semidirect(alg, &GeneralizedRepresentation::from_rho(rho.clone()))
}

pub fn generalized_semidirect(alg: &ThreeLieAlgebra, gr: &GeneralizedRepresentation) -> Result<ThreeLieAlgebra> {
    ThreeLieAlgebra::new(sum_names(alg, gr.dim_v()), total_structure(alg, gr)?)
}

/// `[[Pi, Pi]] = 0` for `Pi = pi + rho-lift + nu-lift`.
pub fn check_genrep_canonical(alg: &ThreeLieAlgebra, gr: &GeneralizedRepresentation, exec: Exec) -> Result<bool> {
    if let Some(w) = alg.check_fi(exec).witness {
        return Err(Error::NotAThreeLie(alg.describe_witness(&w)));
    }
    let pi = total_structure(alg, gr)?.to_cochain();
    Ok(pi.graded_bracket(&pi, exec)?.is_zero())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceVerdict {
    pub equivalent: bool,
    pub reason: Option<String>,
}

/// Whether `T: V1 -> V2` intertwines both `rho` and `nu`.
pub fn are_equivalent(
    t: &Matrix,
    r1: &GeneralizedRepresentation,
    r2: &GeneralizedRepresentation,
) -> Result<EquivalenceVerdict> {
    let m = r1.dim_v();
    if t.rows() != t.cols() || t.rows() != m || r2.dim_v() != m || r1.dim_g() != r2.dim_g() {
        return Err(Error::DimensionMismatch {
            context: "intertwiner",
            expected: m,
            found: t.rows(),
        });
    }
    let fail = |reason: String| {
        Ok(EquivalenceVerdict {
            equivalent: false,
            reason: Some(reason),
        })
    };
    if t.determinant()?.is_zero() {
        return fail("T is singular".into());
    }
    let n = r1.dim_g();
    let vn = v_names(m);
    let tcols: Vec<Vec<Scalar>> = (0..m).map(|c| t.column(c)).collect();
    for (i, j) in index::pairs(n) {
        for c in 0..m {
            let e = unit_vector(m, c);
            let lhs = t.mul_vec(&r1.rho.apply(i, j, &e));
            let rhs = r2.rho.apply(i, j, &tcols[c]);
            if lhs != rhs {
                return fail(format!(
                    "T rho1(e{}, e{}) {} != rho2(e{}, e{}) T {}",
                    i + 1,
                    j + 1,
                    vn[c],
                    i + 1,
                    j + 1,
                    vn[c]
                ));
            }
        }
    }
    for i in 0..n {
        for (a, b) in index::pairs(m) {
            let lhs = t.mul_vec(&r1.nu.get(i, a, b));
            let rhs = r2.nu.apply(i, &tcols[a], &tcols[b]);
            if lhs != rhs {
                return fail(format!(
                    "T nu1(e{})({}, {}) != nu2(e{})(T {}, T {})",
                    i + 1,
                    vn[a],
                    vn[b],
                    i + 1,
                    vn[a],
                    vn[b]
                ));
            }
        }
    }
    Ok(EquivalenceVerdict {
        equivalent: true,
        reason: None,
    })
}

/// Basis of the maps `nu` solving the `rho = 0` form of `r3`:
/// `nu([x1, x2, x3]) = 0`.
pub fn trivial_rho_nu_solutions(alg: &ThreeLieAlgebra, m: usize) -> Result<Vec<NuMap>> {
    if !alg.is_rational() {
        return Err(Error::ParametricEntries);
    }
    let n = alg.dim();
    let pm = index::num_pairs(m);
    let unknowns = n * pm * m;
    let triples = index::triples(n);
    let mut rows = Vec::new();
    for &[a, b, c] in &triples {
        let br = alg.bracket_basis(a, b, c);
        for p in 0..pm {
            for r in 0..m {
                let mut row = vec![Scalar::zero(); unknowns];
                for (l, x) in br.iter().enumerate() {
                    row[(l * pm + p) * m + r] = x.clone();
                }
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        rows.push(vec![Scalar::zero(); unknowns]);
    }
    let mat = Matrix::from_rows(rows)?;
    mat.nullspace()?
        .into_iter()
        .map(|v| NuMap::from_coordinates(n, m, v))
        .collect()
}

/// For a perfect algebra, whether `rho = 0` forces `nu = 0` on a module of dimension `m`.
pub fn perfect_forces_nu_zero(alg: &ThreeLieAlgebra, m: usize) -> Result<bool> {
    let derived = alg.derived_dim()?;
    if derived != alg.dim() || alg.dim() == 0 {
        return Err(Error::NotPerfect {
            derived,
            dim: alg.dim(),
        });
    }
    Ok(trivial_rho_nu_solutions(alg, m)?.is_empty())
}
