//! Abelian extensions of a 3-Lie algebra `g` by `V`, described by
//! `(rho, nu, omega)` on `g + V`.

use crate::algebra::{SkewTriple, ThreeLieAlgebra};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::gencohom::MixedCochain;
use crate::rep::{
    family, lift_bracket, lift_nu, lift_rho, run_families, total_structure, v_names, Ctx, EquationReport,
    GeneralizedRepresentation, NuMap, Representation, GGGGG, GGGGV, GGGVV, GGVVV,
};
use crate::sampling::Sampler;
use crate::scalar::{ParameterAssignment, Scalar};

/// `(rho, nu, omega)` over a base algebra; `omega` is a fully skew map `^3 g -> V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionData {
    pub algebra: ThreeLieAlgebra,
    pub rho: Representation,
    pub nu: NuMap,
    pub omega: SkewTriple,
}

impl ExtensionData {
    pub fn new(algebra: ThreeLieAlgebra, rho: Representation, nu: NuMap, omega: SkewTriple) -> Result<Self> {
        let (n, m) = (algebra.dim(), rho.dim_v());
        let shapes = [
            ("rho", rho.dim_g(), n),
            ("nu", nu.dim_g(), n),
            ("nu values", nu.dim_v(), m),
            ("omega arguments", omega.dim(), n),
            ("omega values", omega.codim(), m),
        ];
        for (context, found, expected) in shapes {
            if found != expected {
                return Err(Error::DimensionMismatch {
                    context,
                    expected,
                    found,
                });
            }
        }
        Ok(ExtensionData {
            algebra,
            rho,
            nu,
            omega,
        })
    }

    /// Data of a generalized semidirect product (`omega = 0`).
    pub fn from_genrep(algebra: ThreeLieAlgebra, gr: GeneralizedRepresentation) -> Result<Self> {
        let omega = SkewTriple::zeros(algebra.dim(), gr.dim_v());
        Self::new(algebra, gr.rho, gr.nu, omega)
    }

    pub fn dim_g(&self) -> usize {
        self.algebra.dim()
    }

    pub fn dim_v(&self) -> usize {
        self.rho.dim_v()
    }

    pub fn genrep(&self) -> GeneralizedRepresentation {
        GeneralizedRepresentation::new(self.rho.clone(), self.nu.clone()).expect("shapes checked on construction")
    }

    /// `omega` placed on `g + V` with values in the `V` summand.
    pub fn omega_lift(&self) -> SkewTriple {
        let (n, m) = (self.dim_g(), self.dim_v());
        let slots: Vec<usize> = (0..n).collect();
        self.omega.embed(n + m, n + m, &slots, n)
    }

    /// Structure constants of the bracket on `g + V`.
    pub fn structure(&self) -> Result<SkewTriple> {
        total_structure(&self.algebra, &self.genrep())?.add(&self.omega_lift())
    }

    /// The bracket on `g + V` as an algebra (not necessarily 3-Lie).
    pub fn bracket(&self) -> Result<ThreeLieAlgebra> {
        let mut names = self.algebra.names().to_vec();
        names.extend(v_names(self.dim_v()));
        ThreeLieAlgebra::new(names, self.structure()?)
    }

    pub fn is_rational(&self) -> bool {
        self.algebra.is_rational() && self.rho.is_rational() && self.nu.is_rational() && self.omega.is_rational()
    }

    pub fn parameters(&self) -> std::collections::BTreeSet<String> {
        let mut out = self.algebra.parameters();
        out.extend(self.rho.parameters());
        out.extend(self.nu.parameters());
        out.extend(self.omega.parameters());
        out
    }

    pub fn instantiate(&self, values: &ParameterAssignment) -> Result<Self> {
        Ok(ExtensionData {
            algebra: self.algebra.instantiate(values)?,
            rho: self.rho.instantiate(values)?,
            nu: self.nu.instantiate(values)?,
            omega: self.omega.instantiate(values)?,
        })
    }

    /// The same data with `omega` replaced by zero.
    pub fn without_omega(&self) -> Self {
        ExtensionData {
            omega: SkewTriple::zeros(self.dim_g(), self.dim_v()),
            ..self.clone()
        }
    }
}

/// The identities on `(rho, nu, omega)` equivalent to the Fundamental
/// Identity of the bracket on `g + V`, on all basis tuples.
pub fn check_extension(ext: &ExtensionData, exec: Exec) -> Result<EquationReport> {
    let alg = &ext.algebra;
    if let Some(w) = alg.check_fi(exec).witness {
        return Err(Error::NotAThreeLie(alg.describe_witness(&w)));
    }
    let ctx = Ctx::new(alg, &ext.rho, &ext.nu, Some(&ext.omega));
    let fams = vec![
        family("t1", &GGGGG, |x| ctx.t1(x)),
        family("t2", &GGGGV, |x| ctx.t2(x)),
        family("t3", &GGGGV, |x| ctx.t3(x)),
        family("r3", &GGGVV, |x| ctx.r3(x)),
        family("r4", &GGGVV, |x| ctx.r4(x)),
        family("r5", &GGGVV, |x| ctx.r5(x)),
        family("r6", &GGVVV, |x| ctx.r6(x)),
        family("r7", &GGVVV, |x| ctx.r7(x)),
    ];
    Ok(run_families(fams, alg.names(), &v_names(ext.dim_v()), exec))
}

/// An algebra on `g + V` with a chosen decomposition: `g_indices` span the
/// image of the splitting, `v_indices` the abelian ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitData {
    pub algebra: ThreeLieAlgebra,
    pub g_indices: Vec<usize>,
    pub v_indices: Vec<usize>,
}

impl SplitData {
    /// The decomposition with the first `n` basis vectors spanning the complement.
    pub fn canonical(algebra: ThreeLieAlgebra, n: usize) -> Result<Self> {
        let total = algebra.dim();
        if n > total {
            return Err(Error::DimensionMismatch {
                context: "complement dimension",
                expected: total,
                found: n,
            });
        }
        Ok(SplitData {
            algebra,
            g_indices: (0..n).collect(),
            v_indices: (n..total).collect(),
        })
    }
}

/// Read `(rho, nu, omega)` and the quotient bracket off a decomposed algebra.
pub fn extract_from_split(split: &SplitData) -> Result<ExtensionData> {
    let e = &split.algebra;
    let (gi, vi) = (&split.g_indices, &split.v_indices);
    let (n, m) = (gi.len(), vi.len());
    let mut seen = vec![false; e.dim()];
    for &i in gi.iter().chain(vi) {
        if i >= e.dim() || std::mem::replace(&mut seen[i], true) {
            return Err(Error::NotAnExtensionShape(format!(
                "index {} repeated or out of range",
                i + 1
            )));
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::NotAnExtensionShape(
            "the decomposition does not cover the basis".into(),
        ));
    }
    let names = e.names();
    let g_part = |v: &[Scalar]| -> Vec<Scalar> { gi.iter().map(|&i| v[i].clone()).collect() };
    let v_part = |v: &[Scalar]| -> Vec<Scalar> { vi.iter().map(|&i| v[i].clone()).collect() };
    let only_v = |args: [usize; 3], v: &[Scalar]| -> Result<()> {
        if g_part(v).iter().all(Scalar::is_zero) {
            Ok(())
        } else {
            Err(Error::NotAnExtensionShape(format!(
                "[{}, {}, {}] has a component outside V",
                names[args[0]], names[args[1]], names[args[2]]
            )))
        }
    };

    let mut brackets = Vec::new();
    let mut omega = SkewTriple::zeros(n, m);
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let args = [gi[a], gi[b], gi[c]];
                let val = e.bracket_basis(args[0], args[1], args[2]);
                let g = g_part(&val);
                let terms: Vec<(usize, Scalar)> = g.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
                if !terms.is_empty() {
                    brackets.push(([a, b, c], terms));
                }
                omega.set(a, b, c, &v_part(&val))?;
            }
        }
    }
    let base_names: Vec<String> = gi.iter().map(|&i| names[i].clone()).collect();
    let base = ThreeLieAlgebra::from_brackets(n, &brackets)?;
    let algebra = ThreeLieAlgebra::new(base_names, base.structure().clone())?;

    let mut rho = Representation::zero(n, m);
    for a in 0..n {
        for b in a + 1..n {
            for c in 0..m {
                let args = [gi[a], gi[b], vi[c]];
                let val = e.bracket_basis(args[0], args[1], args[2]);
                only_v(args, &val)?;
                for (r, x) in v_part(&val).into_iter().enumerate() {
                    if !x.is_zero() {
                        rho.set_entry(a, b, r, c, x)?;
                    }
                }
            }
        }
    }
    let mut nu = NuMap::zero(n, m);
    for a in 0..n {
        for c in 0..m {
            for d in c + 1..m {
                let args = [gi[a], vi[c], vi[d]];
                let val = e.bracket_basis(args[0], args[1], args[2]);
                only_v(args, &val)?;
                nu.set(a, c, d, &v_part(&val))?;
            }
        }
    }
    for c in 0..m {
        for d in c + 1..m {
            for f in d + 1..m {
                let val = e.bracket_basis(vi[c], vi[d], vi[f]);
                if val.iter().any(|x| !x.is_zero()) {
                    return Err(Error::NotAnExtensionShape(format!(
                        "V is not abelian: [{}, {}, {}] is nonzero",
                        names[vi[c]], names[vi[d]], names[vi[f]]
                    )));
                }
            }
        }
    }
    ExtensionData::new(algebra, rho, nu, omega)
}

/// `P = rho-lift + nu-lift + omega` as an element of the subcomplex.
pub fn mc_element(ext: &ExtensionData) -> Result<MixedCochain> {
    let p = lift_rho(&ext.rho).add(&lift_nu(&ext.nu))?.add(&ext.omega_lift())?;
    MixedCochain::new(ext.dim_g(), ext.dim_v(), p.to_cochain())
}

/// `delta(P) + 1/2 [[P, P]]` where `delta = [[pi0, .]]` for the direct sum
/// bracket `pi0` of `g` and the abelian `V`.
pub fn mc_defect(ext: &ExtensionData, exec: Exec) -> Result<MixedCochain> {
    let alg = &ext.algebra;
    if let Some(w) = alg.check_fi(exec).witness {
        return Err(Error::NotAThreeLie(alg.describe_witness(&w)));
    }
    let (n, m) = (ext.dim_g(), ext.dim_v());
    let pi0 = lift_bracket(alg, m).to_cochain();
    let p = mc_element(ext)?;
    let delta = pi0.graded_bracket(p.inner(), exec)?;
    let square = p.inner().graded_bracket(p.inner(), exec)?;
    MixedCochain::new(n, m, delta.add(&square.scale(&Scalar::frac(1, 2)))?)
}

/// Whether random elements of the subcomplex of degrees 0 and 1 stay in
/// the subcomplex under `delta` and under the graded bracket.
pub fn check_sub_dgla_closure(alg: &ThreeLieAlgebra, m: usize, samples: usize, seed: u64) -> Result<bool> {
    let n = alg.dim();
    let pi0 = lift_bracket(alg, m).to_cochain();
    let mut sampler = Sampler::new(seed);
    for k in 0..samples {
        let deg_a = k % 2;
        let deg_b = (k / 2) % 2;
        let a = sampler.mixed_cochain(deg_a, n, m, 0.3);
        let b = sampler.mixed_cochain(deg_b, n, m, 0.3);
        let delta = MixedCochain::new(n, m, pi0.graded_bracket(a.inner(), Exec::default())?)?;
        if delta.degree() != deg_a + 1 || !delta.is_in_c_greater() {
            return Ok(false);
        }
        if !a.graded_bracket(&b, Exec::default())?.is_in_c_greater() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{check_genrep_canonical, check_genrep_eqs, generalized_semidirect};

    fn p(s: &str) -> Scalar {
        Scalar::parse(s).unwrap()
    }

    fn g3() -> ThreeLieAlgebra {
        ThreeLieAlgebra::from_brackets(3, &[([0, 1, 2], vec![(0, Scalar::one())])]).unwrap()
    }

    fn worked_example() -> ExtensionData {
        let mut rho = Representation::zero(3, 2);
        let entries = [
            (0, 1, 0, 0, "r1"),
            (0, 1, 1, 0, "s2*r1/s1"),
            (0, 1, 0, 1, "s1*r2/s2"),
            (0, 1, 1, 1, "r2"),
            (0, 2, 0, 0, "s3*r1/s1"),
            (0, 2, 1, 0, "s2*s3*r1/s1^2"),
            (0, 2, 0, 1, "s3*r2/s2"),
            (0, 2, 1, 1, "s3*r2/s1"),
            (1, 2, 0, 0, "s2*r1*r3/(s1*r2)"),
            (1, 2, 1, 0, "s2^2*r1*r3/(s1^2*r2)"),
            (1, 2, 0, 1, "r3"),
            (1, 2, 1, 1, "s2*r3/s1"),
        ];
        for (i, j, r, c, x) in entries {
            rho.set_entry(i, j, r, c, p(x)).unwrap();
        }
        let mut nu = NuMap::zero(3, 2);
        nu.set(1, 0, 1, &[p("s1"), p("s2")]).unwrap();
        nu.set(2, 0, 1, &[p("s3"), p("s2*s3/s1")]).unwrap();
        let mut omega = SkewTriple::zeros(3, 2);
        omega.set(0, 1, 2, &[p("r2/s2"), p("-r1/s1")]).unwrap();
        ExtensionData::new(g3(), rho, nu, omega).unwrap()
    }

    fn values(pairs: &[(&str, i64)]) -> ParameterAssignment {
        pairs
            .iter()
            .map(|(k, v)| (k.to_string(), Scalar::int(*v).as_rational().unwrap().clone()))
            .collect()
    }

    fn instantiated() -> ExtensionData {
        let v = values(&[("r1", 1), ("r2", 2), ("r3", 3), ("s1", 1), ("s2", 2), ("s3", 3)]);
        worked_example().instantiate(&v).unwrap()
    }

    #[test]
    fn worked_example_is_an_extension() {
        let ext = instantiated();
        assert!(ext.bracket().unwrap().is_three_lie());
        let report = check_extension(&ext, Exec::default()).unwrap();
        assert!(report.holds(), "{:?}", report.failures);
        assert!(mc_defect(&ext, Exec::default()).unwrap().is_zero());
    }

    #[test]
    fn worked_example_holds_symbolically() {
        let report = check_extension(&worked_example(), Exec::default()).unwrap();
        assert!(report.holds(), "{:?}", report.failures);
    }

    #[test]
    fn omega_compensates_the_failure_of_rho() {
        let ext = instantiated().without_omega();
        assert!(!ext.bracket().unwrap().is_three_lie());
        assert!(!check_extension(&ext, Exec::default()).unwrap().holds());
        assert!(!mc_defect(&ext, Exec::default()).unwrap().is_zero());
        assert!(!check_genrep_eqs(&g3(), &instantiated().genrep()).unwrap().holds());
    }

    #[test]
    fn generalized_representation_exactly_when_r1_r2_vanish() {
        let s = [("s1", 1), ("s2", 2), ("s3", 3), ("r3", 3)];
        let at = |r1: i64, r2: i64| {
            let mut base = worked_example();
            if r2 == 0 {
                // the rho(x2,x3) v1 entries carry r1/r2 and vanish with r1
                base.rho.set_entry(1, 2, 0, 0, Scalar::zero()).unwrap();
                base.rho.set_entry(1, 2, 1, 0, Scalar::zero()).unwrap();
            }
            let mut v = s.to_vec();
            v.extend([("r1", r1), ("r2", r2)]);
            base.instantiate(&values(&v)).unwrap()
        };
        let reduced = at(0, 0);
        assert!(reduced.omega.is_zero());
        let report = check_genrep_eqs(&g3(), &reduced.genrep()).unwrap();
        assert!(report.holds(), "{:?}", report.failures);
        for (r1, r2) in [(0, 1), (0, -2), (1, 2), (3, 1)] {
            let ext = at(r1, r2);
            assert!(check_extension(&ext, Exec::default()).unwrap().holds());
            assert!(
                !check_genrep_eqs(&g3(), &ext.genrep()).unwrap().holds(),
                "r1={r1}, r2={r2}"
            );
        }
    }

    #[test]
    fn perturbed_rho_breaks_the_extension() {
        let mut ext = instantiated();
        let x = ext.rho.matrix(0, 1).get(0, 0).clone();
        ext.rho.set_entry(0, 1, 0, 0, &x + &Scalar::one()).unwrap();
        assert!(!mc_defect(&ext, Exec::default()).unwrap().is_zero());
        assert!(!ext.bracket().unwrap().is_three_lie());
    }

    #[test]
    fn extraction_round_trips() {
        let ext = instantiated();
        let split = SplitData::canonical(ext.bracket().unwrap(), 3).unwrap();
        let back = extract_from_split(&split).unwrap();
        assert_eq!(back.structure().unwrap(), ext.structure().unwrap());
        assert_eq!(back.rho, ext.rho);
        assert_eq!(back.nu, ext.nu);
        assert_eq!(back.omega, ext.omega);
    }

    #[test]
    fn split_extension_recovers_a_generalized_representation() {
        let g = g3();
        let gr = GeneralizedRepresentation::from_rho(g.adjoint_rep().unwrap());
        let e = generalized_semidirect(&g, &gr).unwrap();
        let back = extract_from_split(&SplitData::canonical(e, 3).unwrap()).unwrap();
        assert!(back.omega.is_zero());
        assert_eq!(back.genrep(), gr);
        assert!(check_genrep_canonical(&g, &back.genrep(), Exec::default()).unwrap());
    }

    #[test]
    fn non_abelian_ideal_is_rejected() {
        let e = ThreeLieAlgebra::from_brackets(4, &[([1, 2, 3], vec![(1, Scalar::one())])]).unwrap();
        let split = SplitData::canonical(e, 1).unwrap();
        assert!(matches!(extract_from_split(&split), Err(Error::NotAnExtensionShape(_))));
    }

    #[test]
    fn zero_data_has_zero_defect() {
        let ext =
            ExtensionData::from_genrep(g3(), GeneralizedRepresentation::from_rho(Representation::zero(3, 2))).unwrap();
        assert!(mc_defect(&ext, Exec::default()).unwrap().is_zero());
    }

    #[test]
    fn subcomplex_is_closed() {
        assert!(check_sub_dgla_closure(&g3(), 2, 20, 11).unwrap());
    }
}
