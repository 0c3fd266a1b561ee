//! Built-in catalogue of algebras, representation families, cocycle families
//! and extensions, each with the verdicts the checkers must reproduce.

use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;

use crate::algebra::{SkewTriple, ThreeLieAlgebra};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::extension::{check_extension, mc_defect, ExtensionData};
use crate::gencohom::{GenComplex, TwoCochainTriple};
use crate::io;
use crate::rep::{
    check_genrep_canonical, check_genrep_eqs_with, check_representation_with, perfect_forces_nu_zero, semidirect,
    trivial_rho_nu_solutions, GeneralizedRepresentation, NuMap, Representation,
};
use crate::sampling::{describe_assignment, sample_assignments, seed_from_env};
use crate::scalar::{ParameterAssignment, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Payload {
    Algebra(ThreeLieAlgebra),
    Representation {
        algebra: ThreeLieAlgebra,
        rho: Representation,
    },
    GenRep {
        algebra: ThreeLieAlgebra,
        genrep: GeneralizedRepresentation,
    },
    /// A parametric family of fully skew 2-cochains, checked at fixed
    /// representation parameters `at` and unit values of `family_params`.
    Cocycles {
        algebra: ThreeLieAlgebra,
        genrep: GeneralizedRepresentation,
        at: ParameterAssignment,
        family: TwoCochainTriple,
        family_params: Vec<String>,
    },
    Extension(ExtensionData),
}

impl Payload {
    fn parameters(&self) -> BTreeSet<String> {
        match self {
            Payload::Algebra(a) => a.parameters(),
            Payload::Representation { algebra, rho } => {
                let mut p = algebra.parameters();
                p.extend(rho.parameters());
                p
            }
            Payload::GenRep { algebra, genrep } => {
                let mut p = algebra.parameters();
                p.extend(genrep.parameters());
                p
            }
            Payload::Cocycles { .. } => BTreeSet::new(),
            Payload::Extension(e) => e.parameters(),
        }
    }

    fn instantiate(&self, v: &ParameterAssignment) -> Result<Payload> {
        Ok(match self {
            Payload::Algebra(a) => Payload::Algebra(a.instantiate(v)?),
            Payload::Representation { algebra, rho } => Payload::Representation {
                algebra: algebra.instantiate(v)?,
                rho: rho.instantiate(v)?,
            },
            Payload::GenRep { algebra, genrep } => Payload::GenRep {
                algebra: algebra.instantiate(v)?,
                genrep: genrep.instantiate(v)?,
            },
            Payload::Cocycles { .. } => self.clone(),
            Payload::Extension(e) => Payload::Extension(e.instantiate(v)?),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expectation {
    /// Fundamental Identity verdict for an algebra payload.
    ThreeLie(bool),
    /// Verdict of the two representation identities.
    Representation(bool),
    /// Verdict of the generalized-representation identities (and agreement
    /// with the canonical-structure check).
    GenRep(bool),
    /// Verdict of the extension identities, the Fundamental Identity of the
    /// bracket and the Maurer-Cartan equation (all three must agree).
    Extension(bool),
    /// With `rho = 0` on a module of this dimension, only `nu = 0` survives.
    NuForcedZero(usize),
    /// Every unit member of the cocycle family lies in the kernel of `d`.
    CocyclesInKernel,
    /// Dimension of the fully skew 2-cocycle space, next to the size of the listed family.
    CocycleDimension { computed: usize, listed: usize },
}

impl fmt::Display for Expectation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expectation::ThreeLie(b) => write!(f, "3-Lie = {b}"),
            Expectation::Representation(b) => write!(f, "representation = {b}"),
            Expectation::GenRep(b) => write!(f, "generalized representation = {b}"),
            Expectation::Extension(b) => write!(f, "extension = {b}"),
            Expectation::NuForcedZero(m) => write!(f, "rho = 0 forces nu = 0 (dim V = {m})"),
            Expectation::CocyclesInKernel => write!(f, "listed cocycles in ker d"),
            Expectation::CocycleDimension { computed, .. } => write!(f, "dim Z2 (skew) = {computed}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub id: &'static str,
    pub citation: &'static str,
    pub payload: Payload,
    pub expectations: Vec<Expectation>,
}

#[derive(Clone, Debug)]
pub struct RunOptions {
    /// Parameter points sampled per parametric entry.
    pub samples: usize,
    pub seed: u64,
    /// Also check parametric entries identically in their parameters.
    pub symbolic: bool,
    pub exec: Exec,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            samples: 5,
            seed: seed_from_env(),
            symbolic: true,
            exec: Exec::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub check: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryReport {
    pub id: String,
    pub citation: String,
    pub outcomes: Vec<Outcome>,
}

impl EntryReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }
}

fn p(s: &str) -> Scalar {
    Scalar::parse(s).expect("corpus scalars parse")
}

/// Algebra from 1-based brackets `[i,j,k] = sum c x_l`.
fn algebra(n: usize, brackets: &[([usize; 3], &[(usize, &str)])]) -> ThreeLieAlgebra {
    let b: Vec<_> = brackets
        .iter()
        .map(|(args, value)| (args.map(|a| a - 1), value.iter().map(|(l, c)| (l - 1, p(c))).collect()))
        .collect();
    ThreeLieAlgebra::from_brackets(n, &b).expect("corpus algebra")
}

pub fn g3() -> ThreeLieAlgebra {
    algebra(3, &[([1, 2, 3], &[(1, "1")])])
}

pub fn simple4() -> ThreeLieAlgebra {
    algebra(
        4,
        &[
            ([1, 2, 3], &[(4, "1")]),
            ([1, 2, 4], &[(3, "1")]),
            ([1, 3, 4], &[(2, "1")]),
            ([2, 3, 4], &[(1, "1")]),
        ],
    )
}

pub fn alg4a() -> ThreeLieAlgebra {
    algebra(
        4,
        &[
            ([1, 2, 4], &[(3, "1")]),
            ([1, 3, 4], &[(2, "1")]),
            ([2, 3, 4], &[(1, "1")]),
        ],
    )
}

pub fn alg4b() -> ThreeLieAlgebra {
    algebra(4, &[([2, 3, 4], &[(1, "1")])])
}

/// A bracket violating the Fundamental Identity.
pub fn broken4() -> ThreeLieAlgebra {
    algebra(4, &[([1, 2, 3], &[(4, "1")]), ([1, 2, 4], &[(1, "1")])])
}

/// `rho(x_i, x_j)(v_c) = sum_r image[r] v_r`, 1-based.
type RhoImage<'a> = (usize, usize, usize, [&'a str; 2]);

fn rho2(n: usize, images: &[RhoImage<'_>]) -> Representation {
    let mut rho = Representation::zero(n, 2);
    for (i, j, c, image) in images {
        for (r, x) in image.iter().enumerate() {
            rho.set_entry(i - 1, j - 1, r, c - 1, p(x)).expect("corpus rho");
        }
    }
    rho
}

/// `nu(x_i)(v1, v2)`, 1-based.
fn nu2(n: usize, values: &[(usize, [&str; 2])]) -> NuMap {
    let mut nu = NuMap::zero(n, 2);
    for (i, v) in values {
        nu.set(i - 1, 0, 1, &[p(v[0]), p(v[1])]).expect("corpus nu");
    }
    nu
}

fn genrep(rho: Representation, nu: NuMap) -> GeneralizedRepresentation {
    GeneralizedRepresentation::new(rho, nu).expect("corpus genrep")
}

fn first_base_rho() -> Representation {
    rho2(
        3,
        &[
            (1, 2, 2, ["r1", "0"]),
            (1, 3, 2, ["r2", "0"]),
            (2, 3, 1, ["r3", "0"]),
            (2, 3, 2, ["r4", "r3 - 1"]),
        ],
    )
}

const RHO12_B: [RhoImage<'static>; 2] = [(1, 2, 1, ["r1*r4", "r1"]), (1, 2, 2, ["-r1*r4^2", "-r1*r4"])];
const RHO13_B: [RhoImage<'static>; 2] = [(1, 3, 1, ["r2*r4", "r2"]), (1, 3, 2, ["-r2*r4^2", "-r2*r4"])];

fn second_base_rho() -> Representation {
    let mut images = RHO12_B.to_vec();
    images.extend(RHO13_B);
    images.extend([(2, 3, 1, ["r3", "0"]), (2, 3, 2, ["r4", "1 + r3"])]);
    rho2(3, &images)
}

/// Case 2 of the first list, parametrised by the image of `v2` under `rho(x2, x3)`.
fn first_case2(rho23_v2: [&str; 2]) -> GeneralizedRepresentation {
    genrep(
        rho2(3, &[(1, 3, 2, ["r2", "0"]), (2, 3, 1, ["1", "0"]), (2, 3, 2, rho23_v2)]),
        nu2(3, &[(3, ["s1", "0"])]),
    )
}

fn first_list() -> Vec<GeneralizedRepresentation> {
    vec![
        genrep(
            rho2(
                3,
                &[
                    (1, 2, 2, ["r1", "0"]),
                    (1, 3, 2, ["r2", "0"]),
                    (2, 3, 1, ["1", "0"]),
                    (2, 3, 2, ["r4", "0"]),
                ],
            ),
            nu2(3, &[(2, ["s1", "0"]), (3, ["s1*r2/r1", "0"])]),
        ),
        first_case2(["r4", "0"]),
        genrep(
            rho2(3, &[(2, 3, 2, ["r4", "-1"])]),
            nu2(3, &[(2, ["-s1*r4", "s1"]), (3, ["-s2*r4", "s2"])]),
        ),
        genrep(
            rho2(3, &[(2, 3, 1, ["1", "0"]), (2, 3, 2, ["r4", "0"])]),
            nu2(3, &[(2, ["s1", "0"]), (3, ["s2", "0"])]),
        ),
    ]
}

fn second_list() -> Vec<GeneralizedRepresentation> {
    let with = |extra: &[RhoImage<'static>], base: &[RhoImage<'static>]| {
        let mut v = base.to_vec();
        v.extend_from_slice(extra);
        rho2(3, &v)
    };
    let both: Vec<RhoImage<'static>> = RHO12_B.iter().chain(&RHO13_B).cloned().collect();
    vec![
        genrep(
            with(&[(2, 3, 2, ["r4", "1"])], &both),
            nu2(3, &[(2, ["s1*r4", "s1"]), (3, ["s1*r2*r4/r1", "s1*r2/r1"])]),
        ),
        genrep(
            with(&[(2, 3, 2, ["r4", "1"])], &RHO13_B),
            nu2(3, &[(3, ["r4*s1", "s1"])]),
        ),
        genrep(
            rho2(3, &[(2, 3, 2, ["r4", "1"])]),
            nu2(3, &[(2, ["s1*r4", "s1"]), (3, ["s2*r4", "s2"])]),
        ),
        genrep(
            rho2(3, &[(2, 3, 1, ["-1", "0"]), (2, 3, 2, ["r4", "0"])]),
            nu2(3, &[(2, ["s1", "0"]), (3, ["s2", "0"])]),
        ),
        genrep(
            rho2(3, &[(1, 3, 1, ["0", "r2"]), (2, 3, 2, ["0", "1"])]),
            nu2(3, &[(3, ["0", "s1"])]),
        ),
        genrep(
            rho2(3, &[(1, 2, 1, ["0", "r1"]), (2, 3, 2, ["0", "1"])]),
            nu2(3, &[(2, ["0", "s1"])]),
        ),
    ]
}

fn trivial(n: usize, values: &[(usize, [&str; 2])]) -> GeneralizedRepresentation {
    genrep(Representation::zero(n, 2), nu2(n, values))
}

/// `rho = 0` and `nu = xi (x) [.,.]` on an abelian algebra, with `[v1, v2] = v2`.
fn abelian_lie_genrep() -> GeneralizedRepresentation {
    trivial(3, &[(1, ["0", "xi1"]), (2, ["0", "xi2"]), (3, ["0", "xi3"])])
}

pub fn cocycle_first_genrep() -> GeneralizedRepresentation {
    genrep(
        rho2(
            3,
            &[
                (1, 3, 1, ["s1*s2", "s1"]),
                (1, 3, 2, ["-s1*s2^2", "-s1*s2"]),
                (2, 3, 2, ["s2", "1"]),
            ],
        ),
        nu2(3, &[(3, ["s3*s2", "s3"])]),
    )
}

pub fn cocycle_second_genrep() -> GeneralizedRepresentation {
    trivial(3, &[(2, ["s1", "s2"]), (3, ["s3", "s2*s3/s1"])])
}

/// `alpha2(x_i, x_j, v_a)` and `alpha3(x_i, x_j, x_k)` values, 1-based.
fn triple(a2: &[(usize, usize, usize, [&str; 2])], a3: &[(usize, usize, usize, [&str; 2])]) -> TwoCochainTriple {
    let mut t = TwoCochainTriple::zeros(3, 2);
    for (i, j, a, v) in a2 {
        t.set_a2(i - 1, j - 1, a - 1, &[p(v[0]), p(v[1])])
            .expect("corpus cochain");
    }
    for (i, j, k, v) in a3 {
        t.set_a3(i - 1, j - 1, k - 1, &[p(v[0]), p(v[1])])
            .expect("corpus cochain");
    }
    t
}

pub fn cocycle_first_family() -> TwoCochainTriple {
    triple(
        &[
            (1, 3, 1, ["s2*p1", "p1"]),
            (1, 3, 2, ["-s2^2*p1", "-s2*p1"]),
            (2, 3, 1, ["s2*p2", "p2"]),
            (2, 3, 2, ["-s2^2*p2", "-s2*p2"]),
        ],
        &[],
    )
}

pub fn cocycle_second_family() -> TwoCochainTriple {
    triple(
        &[
            (1, 2, 1, ["-s1*p2", "-s2*p2"]),
            (1, 2, 2, ["s1*p1", "s2*p1"]),
            (1, 3, 1, ["-s3*p2", "-s2*s3*p2/s1"]),
            (1, 3, 2, ["s3*p1", "s2*s3*p1/s1"]),
            (2, 3, 1, ["p3", "s2*p3/s1"]),
            (2, 3, 2, ["p4", "s2*p4/s1"]),
        ],
        &[(1, 2, 3, ["p1", "p2"])],
    )
}

pub fn extension_example() -> ExtensionData {
    let rho = rho2(
        3,
        &[
            (1, 2, 1, ["r1", "s2*r1/s1"]),
            (1, 2, 2, ["s1*r2/s2", "r2"]),
            (1, 3, 1, ["s3*r1/s1", "s2*s3*r1/s1^2"]),
            (1, 3, 2, ["s3*r2/s2", "s3*r2/s1"]),
            (2, 3, 1, ["s2*r1*r3/(s1*r2)", "s2^2*r1*r3/(s1^2*r2)"]),
            (2, 3, 2, ["r3", "s2*r3/s1"]),
        ],
    );
    let nu = nu2(3, &[(2, ["s1", "s2"]), (3, ["s3", "s2*s3/s1"])]);
    let mut omega = SkewTriple::zeros(3, 2);
    omega.set(0, 1, 2, &[p("r2/s2"), p("-r1/s1")]).expect("corpus omega");
    ExtensionData::new(g3(), rho, nu, omega).expect("corpus extension")
}

pub fn assignment(values: &[(&str, i64)]) -> ParameterAssignment {
    values
        .iter()
        .map(|(k, v)| (k.to_string(), Scalar::int(*v).as_rational().expect("integer").clone()))
        .collect()
}

/// The instantiation used for the worked cocycle and extension examples.
pub fn standard_point() -> ParameterAssignment {
    assignment(&[("r1", 1), ("r2", 2), ("r3", 3), ("s1", 1), ("s2", 2), ("s3", 3)])
}

fn genrep_entry(
    id: &'static str,
    citation: &'static str,
    alg: ThreeLieAlgebra,
    gr: GeneralizedRepresentation,
    holds: bool,
) -> CorpusEntry {
    CorpusEntry {
        id,
        citation,
        payload: Payload::GenRep {
            algebra: alg,
            genrep: gr,
        },
        expectations: vec![Expectation::GenRep(holds)],
    }
}

/// Every catalogue entry.
pub fn entries() -> Vec<CorpusEntry> {
    use Expectation::*;
    let alg_entry = |id, citation, a: ThreeLieAlgebra, e: Vec<Expectation>| CorpusEntry {
        id,
        citation,
        payload: Payload::Algebra(a),
        expectations: e,
    };
    let mut out = vec![
        alg_entry("g3", "3-dim algebra [x1,x2,x3] = x1", g3(), vec![ThreeLie(true)]),
        alg_entry(
            "simple4",
            "4-dim simple algebra, corollary on perfect algebras",
            simple4(),
            vec![ThreeLie(true), NuForcedZero(2), NuForcedZero(3)],
        ),
        alg_entry(
            "alg4-a",
            "4-dim algebra [x1,x2,x4] = x3, [x1,x3,x4] = x2, [x2,x3,x4] = x1",
            alg4a(),
            vec![ThreeLie(true)],
        ),
        alg_entry("alg4-b", "4-dim algebra [x2,x3,x4] = x1", alg4b(), vec![ThreeLie(true)]),
        alg_entry(
            "broken4",
            "planted bracket violating the Fundamental Identity",
            broken4(),
            vec![ThreeLie(false)],
        ),
        alg_entry(
            "semidirect-g3-adjoint",
            "semidirect product of g3 with its adjoint representation",
            semidirect(&g3(), &g3().adjoint_rep().expect("g3 is 3-Lie")).expect("dims agree"),
            vec![ThreeLie(true)],
        ),
        alg_entry(
            "semidirect-simple4-adjoint",
            "semidirect product of the 4-dim simple algebra with its adjoint representation",
            semidirect(&simple4(), &simple4().adjoint_rep().expect("simple4 is 3-Lie")).expect("dims agree"),
            vec![ThreeLie(true)],
        ),
        CorpusEntry {
            id: "rep-g3-first-base",
            citation: "g3, first parametric usual representation (r1..r4)",
            payload: Payload::Representation {
                algebra: g3(),
                rho: first_base_rho(),
            },
            expectations: vec![Representation(true)],
        },
        CorpusEntry {
            id: "rep-g3-second-base",
            citation: "g3, second parametric usual representation (r1..r4)",
            payload: Payload::Representation {
                algebra: g3(),
                rho: second_base_rho(),
            },
            expectations: vec![Representation(true)],
        },
        genrep_entry(
            "genrep-abelian-lie",
            "abelian algebra, rho = 0, nu = xi (x) Lie bracket on V",
            ThreeLieAlgebra::abelian(3),
            abelian_lie_genrep(),
            true,
        ),
    ];
    let first_ids = [
        ("genrep-g3-first-case1", "g3, first representation list, case 1"),
        (
            "genrep-g3-first-case2",
            "g3, first representation list, case 2 with rho(x2,x3)(v2) = r4 v1",
        ),
        ("genrep-g3-first-case3", "g3, first representation list, case 3"),
        ("genrep-g3-first-case4", "g3, first representation list, case 4"),
    ];
    for ((id, cite), gr) in first_ids.into_iter().zip(first_list()) {
        out.push(genrep_entry(id, cite, g3(), gr, true));
    }
    out.push(genrep_entry(
        "genrep-g3-first-case2-printed",
        "g3, first representation list, case 2 with rho(x2,x3)(v2) = r4 v2 as printed",
        g3(),
        first_case2(["0", "r4"]),
        false,
    ));
    let second_ids = [
        ("genrep-g3-second-case1", "g3, second representation list, case 1"),
        ("genrep-g3-second-case2", "g3, second representation list, case 2"),
        ("genrep-g3-second-case3", "g3, second representation list, case 3"),
        ("genrep-g3-second-case4", "g3, second representation list, case 4"),
        ("genrep-g3-second-case5", "g3, second representation list, case 5"),
        ("genrep-g3-second-case6", "g3, second representation list, case 6"),
    ];
    for ((id, cite), gr) in second_ids.into_iter().zip(second_list()) {
        out.push(genrep_entry(id, cite, g3(), gr, true));
    }
    out.extend([
        genrep_entry(
            "trivial-rho-g3-case1",
            "g3, rho = 0, case 1",
            g3(),
            trivial(3, &[(2, ["s1", "s2"]), (3, ["s3", "s2*s3/s1"])]),
            true,
        ),
        genrep_entry(
            "trivial-rho-g3-case2",
            "g3, rho = 0, case 2",
            g3(),
            trivial(3, &[(2, ["0", "s1"]), (3, ["0", "s2"])]),
            true,
        ),
        genrep_entry(
            "trivial-rho-g3-case3",
            "g3, rho = 0, case 3",
            g3(),
            trivial(3, &[(3, ["s1", "s2"])]),
            true,
        ),
        genrep_entry(
            "trivial-rho-alg4-a",
            "alg4-a, rho = 0",
            alg4a(),
            trivial(4, &[(4, ["s1", "s2"])]),
            true,
        ),
        genrep_entry(
            "trivial-rho-alg4-b-case1",
            "alg4-b, rho = 0, case 1",
            alg4b(),
            trivial(
                4,
                &[(2, ["s1", "s2"]), (3, ["s3", "s2*s3/s1"]), (4, ["s4", "s2*s4/s1"])],
            ),
            true,
        ),
        genrep_entry(
            "trivial-rho-alg4-b-case2-printed",
            "alg4-b, rho = 0, case 2 with nu(x4) = s3 v1 + (s2 s4/s1) v2 as printed",
            alg4b(),
            trivial(4, &[(3, ["s1", "s2"]), (4, ["s3", "s2*s4/s1"])]),
            false,
        ),
        genrep_entry(
            "trivial-rho-alg4-b-case2",
            "alg4-b, rho = 0, case 2 with nu(x4) = s3 v1 + (s2 s3/s1) v2",
            alg4b(),
            trivial(4, &[(3, ["s1", "s2"]), (4, ["s3", "s2*s3/s1"])]),
            true,
        ),
        CorpusEntry {
            id: "cocycle-ex1",
            citation: "2-cocycles of g3, first worked generalized representation, at s = (1, 2, 3)",
            payload: Payload::Cocycles {
                algebra: g3(),
                genrep: cocycle_first_genrep(),
                at: assignment(&[("s1", 1), ("s2", 2), ("s3", 3)]),
                family: cocycle_first_family(),
                family_params: vec!["p1".into(), "p2".into()],
            },
            expectations: vec![
                GenRep(true),
                CocyclesInKernel,
                CocycleDimension { computed: 7, listed: 2 },
            ],
        },
        CorpusEntry {
            id: "cocycle-ex2",
            citation: "2-cocycles of g3, second worked generalized representation, at s = (1, 2, 3)",
            payload: Payload::Cocycles {
                algebra: g3(),
                genrep: cocycle_second_genrep(),
                at: assignment(&[("s1", 1), ("s2", 2), ("s3", 3)]),
                family: cocycle_second_family(),
                family_params: (1..=4).map(|i| format!("p{i}")).collect(),
            },
            expectations: vec![
                GenRep(true),
                CocyclesInKernel,
                CocycleDimension { computed: 7, listed: 4 },
            ],
        },
        CorpusEntry {
            id: "ext-g3",
            citation: "abelian extension of g3 by a 2-dim V with omega(x1,x2,x3) = (r2/s2) v1 - (r1/s1) v2",
            payload: Payload::Extension(extension_example()),
            expectations: vec![Extension(true)],
        },
        CorpusEntry {
            id: "ext-g3-without-omega",
            citation: "the same extension data with omega = 0, at r = (1, 2, 3), s = (1, 2, 3)",
            payload: Payload::Extension(
                extension_example()
                    .instantiate(&standard_point())
                    .expect("nonvanishing denominators")
                    .without_omega(),
            ),
            expectations: vec![Extension(false)],
        },
    ]);
    out
}

/// Whether `id` matches a pattern where `*` stands for any substring.
fn matches(pattern: &str, id: &str) -> bool {
    let parts: Vec<&str> = pattern.split('*').collect();
    if parts.len() == 1 {
        return pattern == id;
    }
    let (first, last) = (parts[0], parts[parts.len() - 1]);
    if !id.starts_with(first) || id.len() < first.len() + last.len() || !id.ends_with(last) {
        return false;
    }
    let mut rest = &id[first.len()..id.len() - last.len()];
    for mid in &parts[1..parts.len() - 1] {
        match rest.find(mid) {
            Some(k) => rest = &rest[k + mid.len()..],
            None => return false,
        }
    }
    true
}

/// Entries whose id matches `filter`; an unmatched filter is an error.
pub fn select(filter: Option<&str>) -> Result<Vec<CorpusEntry>> {
    let all = entries();
    let Some(f) = filter else { return Ok(all) };
    let chosen: Vec<CorpusEntry> = all.into_iter().filter(|e| matches(f, e.id)).collect();
    if chosen.is_empty() {
        return Err(Error::Invalid(format!("no corpus entry matches `{f}`")));
    }
    Ok(chosen)
}

pub fn run(filter: Option<&str>, opts: &RunOptions) -> Result<Vec<EntryReport>> {
    let chosen = select(filter)?;
    opts.exec
        .map(chosen.len(), |k| run_entry(&chosen[k], opts))
        .into_iter()
        .collect()
}

/// The points at which a parametric payload is checked.
fn points(payload: &Payload, opts: &RunOptions, salt: u64) -> Result<Vec<(String, Payload)>> {
    let params = payload.parameters();
    if params.is_empty() {
        return Ok(vec![("exact".into(), payload.clone())]);
    }
    let mut out = Vec::new();
    if opts.symbolic {
        out.push(("symbolic".into(), payload.clone()));
    }
    for values in sample_assignments(&params, opts.samples, opts.seed ^ salt, |v| {
        payload.instantiate(v).map(|_| ())
    })? {
        out.push((describe_assignment(&values), payload.instantiate(&values)?));
    }
    Ok(out)
}

fn salt(id: &str) -> u64 {
    id.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ b as u64).wrapping_mul(0x100_0000_01b3)
    })
}

pub fn run_entry(entry: &CorpusEntry, opts: &RunOptions) -> Result<EntryReport> {
    let mut outcomes = Vec::new();
    for exp in &entry.expectations {
        let (passed, detail) = check(entry, exp, opts)?;
        outcomes.push(Outcome {
            check: exp.to_string(),
            passed,
            detail,
        });
    }
    Ok(EntryReport {
        id: entry.id.to_string(),
        citation: entry.citation.to_string(),
        outcomes,
    })
}

fn check(entry: &CorpusEntry, exp: &Expectation, opts: &RunOptions) -> Result<(bool, String)> {
    let exec = opts.exec;
    let mismatch = |what: &str, label: &str, got: bool, expected: bool, extra: String| {
        format!("{what} = {got} at {label} (expected {expected}){extra}")
    };
    match (exp, &entry.payload) {
        (Expectation::ThreeLie(expected), Payload::Algebra(a)) => {
            let report = a.check_fi(exec);
            let got = report.holds();
            let detail = match &report.witness {
                Some(w) => format!("witness: {}", a.describe_witness(w)),
                None => "Fundamental Identity holds".into(),
            };
            Ok((got == *expected, detail))
        }
        (Expectation::Representation(expected), Payload::Representation { .. }) => {
            for (label, pt) in points(&entry.payload, opts, salt(entry.id))? {
                let Payload::Representation { algebra, rho } = pt else {
                    unreachable!()
                };
                let r = check_representation_with(&algebra, &rho, exec)?;
                if r.holds() != *expected {
                    let extra = r.failures.first().map(|f| format!(": {f}")).unwrap_or_default();
                    return Ok((false, mismatch("representation", &label, r.holds(), *expected, extra)));
                }
            }
            Ok((true, "verdict reproduced at every point".into()))
        }
        (Expectation::GenRep(expected), Payload::GenRep { .. } | Payload::Cocycles { .. }) => {
            let base = match &entry.payload {
                Payload::Cocycles { algebra, genrep, .. } => Payload::GenRep {
                    algebra: algebra.clone(),
                    genrep: genrep.clone(),
                },
                other => other.clone(),
            };
            let mut first_failure = None;
            for (label, pt) in points(&base, opts, salt(entry.id))? {
                let Payload::GenRep { algebra, genrep } = pt else {
                    unreachable!()
                };
                let r = check_genrep_eqs_with(&algebra, &genrep, exec)?;
                if first_failure.is_none() {
                    first_failure = r.failures.first().map(|f| f.to_string());
                }
                if r.holds() != *expected {
                    let extra = r.failures.first().map(|f| format!(": {f}")).unwrap_or_default();
                    return Ok((false, mismatch("identities", &label, r.holds(), *expected, extra)));
                }
                if genrep.is_rational() && check_genrep_canonical(&algebra, &genrep, exec)? != r.holds() {
                    return Ok((false, format!("identities and canonical check disagree at {label}")));
                }
            }
            Ok((true, first_failure.unwrap_or_else(|| "identities hold".into())))
        }
        (Expectation::Extension(expected), Payload::Extension(_)) => {
            for (label, pt) in points(&entry.payload, opts, salt(entry.id))? {
                let Payload::Extension(ext) = pt else { unreachable!() };
                let r = check_extension(&ext, exec)?;
                if r.holds() != *expected {
                    let extra = r.failures.first().map(|f| format!(": {f}")).unwrap_or_default();
                    return Ok((
                        false,
                        mismatch("extension identities", &label, r.holds(), *expected, extra),
                    ));
                }
                let fi = ext.bracket()?.check_fi(exec).holds();
                let mc = mc_defect(&ext, exec)?.is_zero();
                if fi != *expected || mc != *expected {
                    return Ok((false, format!("at {label}: FI = {fi}, Maurer-Cartan = {mc}")));
                }
            }
            Ok((true, "identities, Fundamental Identity and Maurer-Cartan agree".into()))
        }
        (Expectation::NuForcedZero(m), Payload::Algebra(a)) => {
            let forced = perfect_forces_nu_zero(a, *m)?;
            let dim = trivial_rho_nu_solutions(a, *m)?.len();
            Ok((forced && dim == 0, format!("solution space of nu has dimension {dim}")))
        }
        (
            Expectation::CocyclesInKernel,
            Payload::Cocycles {
                algebra,
                genrep,
                at,
                family,
                family_params,
            },
        ) => {
            let gr = genrep.instantiate(at)?;
            let cx = GenComplex::new(algebra, &gr, exec)?;
            for (k, name) in family_params.iter().enumerate() {
                let mut values = at.clone();
                for (l, other) in family_params.iter().enumerate() {
                    values.insert(
                        other.clone(),
                        Scalar::int((k == l) as i64).as_rational().expect("int").clone(),
                    );
                }
                let t = family.instantiate(&values)?;
                let in_kernel = cx.d(&t.to_mixed())?.is_zero();
                let eqs = cx.check_two_cocycle(&t)?;
                if !in_kernel || !eqs.holds() {
                    return Ok((false, format!("member {name} = 1 is not a cocycle")));
                }
            }
            Ok((true, format!("{} listed members in ker d", family_params.len())))
        }
        (
            Expectation::CocycleDimension { computed, listed },
            Payload::Cocycles {
                algebra, genrep, at, ..
            },
        ) => {
            let gr = genrep.instantiate(at)?;
            let cx = GenComplex::new(algebra, &gr, exec)?;
            let dim = cx.solve_two_cocycles()?.len();
            let kernel = cx.cohomology(2, false)?.skew.map(|s| s.dim_z);
            let agree = kernel == Some(dim);
            let note = if dim > *listed {
                format!("; exceeds the {listed}-parameter listed family")
            } else {
                String::new()
            };
            Ok((
                dim == *computed && agree,
                format!("solver {dim}, kernel of d {}{note}", kernel.unwrap_or(0)),
            ))
        }
        (exp, _) => Err(Error::Invalid(format!(
            "corpus entry {} pairs `{exp}` with an incompatible payload",
            entry.id
        ))),
    }
}

/// Write each payload in the JSON file formats under `dir`; returns the paths.
pub fn export(dir: &Path) -> Result<Vec<std::path::PathBuf>> {
    std::fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    let mut write = |name: String, body: String| -> Result<()> {
        let path = dir.join(name);
        std::fs::write(&path, body + "\n")?;
        written.push(path);
        Ok(())
    };
    for e in entries() {
        match &e.payload {
            Payload::Algebra(a) => write(format!("{}.json", e.id), io::algebra_to_json(a))?,
            Payload::Representation { algebra, rho } => {
                write(format!("{}.algebra.json", e.id), io::algebra_to_json(algebra))?;
                let gr = GeneralizedRepresentation::from_rho(rho.clone());
                write(format!("{}.rep.json", e.id), io::genrep_to_json(&gr))?;
            }
            Payload::GenRep { algebra, genrep } | Payload::Cocycles { algebra, genrep, .. } => {
                write(format!("{}.algebra.json", e.id), io::algebra_to_json(algebra))?;
                write(format!("{}.rep.json", e.id), io::genrep_to_json(genrep))?;
            }
            Payload::Extension(ext) => write(format!("{}.json", e.id), io::extension_to_json(ext))?,
        }
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn glob_matching() {
        assert!(matches("genrep-*", "genrep-g3-first-case1"));
        assert!(!matches("genrep-*", "trivial-rho-g3-case1"));
        assert!(matches("*case2*", "trivial-rho-alg4-b-case2-printed"));
        assert!(matches("g3", "g3"));
        assert!(!matches("g3", "g3x"));
        assert!(select(Some("nope")).is_err());
    }

    #[test]
    fn ids_are_unique() {
        let ids: BTreeSet<_> = entries().iter().map(|e| e.id).collect();
        assert_eq!(ids.len(), entries().len());
    }

    #[test]
    fn payloads_round_trip_through_json() {
        for e in entries() {
            match &e.payload {
                Payload::Algebra(a) => assert_eq!(&io::parse_algebra(&io::algebra_to_json(a)).unwrap(), a),
                Payload::GenRep { algebra, genrep } | Payload::Cocycles { algebra, genrep, .. } => {
                    assert_eq!(&io::parse_algebra(&io::algebra_to_json(algebra)).unwrap(), algebra);
                    let back = io::parse_genrep(&io::genrep_to_json(genrep), algebra.dim()).unwrap();
                    assert_eq!(&back, genrep, "{}", e.id);
                }
                Payload::Representation { rho, .. } => {
                    let gr = GeneralizedRepresentation::from_rho(rho.clone());
                    assert_eq!(io::parse_genrep(&io::genrep_to_json(&gr), rho.dim_g()).unwrap(), gr);
                }
                Payload::Extension(ext) => {
                    assert_eq!(&io::parse_extension(&io::extension_to_json(ext), None).unwrap(), ext)
                }
            }
        }
    }
}

#[cfg(test)]
mod run_tests {
    use super::*;

    #[test]
    fn full_corpus_reproduces_every_verdict() {
        let opts = RunOptions {
            samples: 3,
            seed: 7,
            ..RunOptions::default()
        };
        let mut failed = Vec::new();
        for r in run(None, &opts).unwrap() {
            for o in r.outcomes.iter().filter(|o| !o.passed) {
                failed.push(format!("{}: {} ({})", r.id, o.check, o.detail));
            }
        }
        assert!(failed.is_empty(), "{}", failed.join("\n"));
    }
}
