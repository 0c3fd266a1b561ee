use proptest::prelude::*;

use trilie::algebra::ThreeLieAlgebra;
use trilie::cochain::{ClassicalComplex, Cochain};
use trilie::corpus;
use trilie::extension::{check_extension, mc_defect, ExtensionData};
use trilie::gencohom::GenComplex;
use trilie::io;
use trilie::rep::{are_equivalent, check_genrep_canonical, check_genrep_eqs, GeneralizedRepresentation};
use trilie::sampling::Sampler;
use trilie::{Exec, Matrix, Scalar};

fn random_cochain(s: &mut Sampler, degree: usize, dim: usize) -> Cochain {
    let len = Cochain::zeros(degree, dim, dim).coordinates().len();
    Cochain::from_coordinates(degree, dim, dim, s.vector(len, 0.4)).unwrap()
}

fn sign(p: usize, q: usize) -> Scalar {
    Scalar::int(if (p * q).is_multiple_of(2) { 1 } else { -1 })
}

fn worked_examples() -> Vec<GeneralizedRepresentation> {
    let at = corpus::assignment(&[("s1", 1), ("s2", 2), ("s3", 3)]);
    [corpus::cocycle_first_genrep(), corpus::cocycle_second_genrep()]
        .iter()
        .map(|g| g.instantiate(&at).unwrap())
        .collect()
}

/// The worked extension at a random point, or random data over g3.
fn random_extension(s: &mut Sampler, structured: bool) -> ExtensionData {
    if structured {
        let ext = corpus::extension_example();
        let values = s
            .assignment(&ext.parameters(), |v| ext.instantiate(v).map(|_| ()))
            .unwrap();
        return ext.instantiate(&values).unwrap();
    }
    ExtensionData::new(
        corpus::g3(),
        s.representation(3, 2, 0.3),
        s.nu_map(3, 2, 0.3),
        s.skew_triple(3, 2, 0.5),
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn graded_antisymmetry(seed in any::<u64>(), dim in 2usize..=3, p in 0usize..=1, q in 0usize..=1) {
        let mut s = Sampler::new(seed);
        let (a, b) = (random_cochain(&mut s, p, dim), random_cochain(&mut s, q, dim));
        let ab = a.graded_bracket(&b, Exec::Sequential).unwrap();
        let ba = b.graded_bracket(&a, Exec::Sequential).unwrap();
        prop_assert_eq!(ab, ba.scale(&sign(p, q)).neg());
    }

    #[test]
    fn graded_jacobi(seed in any::<u64>(), dim in 2usize..=3, degrees in prop::array::uniform3(0usize..=1)) {
        let mut s = Sampler::new(seed);
        let [p, q, r] = degrees;
        let (a, b, c) = (random_cochain(&mut s, p, dim), random_cochain(&mut s, q, dim), random_cochain(&mut s, r, dim));
        let br = |x: &Cochain, y: &Cochain| x.graded_bracket(y, Exec::Sequential).unwrap();
        let total = br(&a, &br(&b, &c))
            .scale(&sign(p, r))
            .add(&br(&b, &br(&c, &a)).scale(&sign(q, p)))
            .unwrap()
            .add(&br(&c, &br(&a, &b)).scale(&sign(r, q)))
            .unwrap();
        prop_assert!(total.is_zero());
    }

    #[test]
    fn bracket_with_structure_is_the_coboundary(seed in any::<u64>(), p in 0usize..=2, simple in any::<bool>()) {
        let alg = if simple { corpus::simple4() } else { corpus::g3() };
        let ad = alg.adjoint_rep().unwrap();
        let cx = ClassicalComplex::new(&alg, &ad).unwrap();
        let alpha = random_cochain(&mut Sampler::new(seed), p, alg.dim());
        let pi = alg.structure().to_cochain();
        prop_assert_eq!(pi.graded_bracket(&alpha, Exec::Sequential).unwrap(), cx.delta(&alpha, Exec::Sequential).unwrap());
    }

    #[test]
    fn d_squares_to_zero(seed in any::<u64>(), degree in 0usize..=1, second in any::<bool>()) {
        let alg = corpus::g3();
        let gr = worked_examples().swap_remove(second as usize);
        let cx = GenComplex::new(&alg, &gr, Exec::Sequential).unwrap();
        let alpha = Sampler::new(seed).mixed_cochain(degree, 3, 2, 0.4);
        prop_assert!(cx.check_d_squared(&alpha).unwrap());
    }

    #[test]
    fn identity_and_canonical_checks_agree(seed in any::<u64>(), structured in any::<bool>()) {
        let mut s = Sampler::new(seed);
        let alg = corpus::g3();
        let gr = if structured {
            random_extension(&mut s, true).without_omega().genrep()
        } else {
            GeneralizedRepresentation::new(s.representation(3, 2, 0.3), s.nu_map(3, 2, 0.3)).unwrap()
        };
        let eqs = check_genrep_eqs(&alg, &gr).unwrap().holds();
        prop_assert_eq!(eqs, check_genrep_canonical(&alg, &gr, Exec::Sequential).unwrap());
    }

    #[test]
    fn extension_checks_agree(seed in any::<u64>(), structured in any::<bool>()) {
        let ext = random_extension(&mut Sampler::new(seed), structured);
        let identities = check_extension(&ext, Exec::Sequential).unwrap().holds();
        prop_assert_eq!(identities, ext.bracket().unwrap().is_three_lie());
        prop_assert_eq!(identities, mc_defect(&ext, Exec::Sequential).unwrap().is_zero());
        if structured {
            prop_assert!(identities);
        }
    }

    #[test]
    fn scaling_by_two_is_an_equivalence(seed in any::<u64>()) {
        let gr = random_extension(&mut Sampler::new(seed), true).genrep();
        let two = Scalar::int(2);
        let half = Scalar::frac(1, 2);
        // T = 2I intertwines (rho, nu) with (rho, nu / 2)
        let scaled = GeneralizedRepresentation::new(
            gr.rho.clone(),
            trilie::rep::NuMap::from_coordinates(3, 2, gr.nu.coordinates().iter().map(|x| x * &half).collect()).unwrap(),
        )
        .unwrap();
        let t = Matrix::identity(2).scale(&two);
        prop_assert!(are_equivalent(&t, &gr, &scaled).unwrap().equivalent);
        if !gr.nu.is_zero() {
            prop_assert!(!are_equivalent(&t, &gr, &gr).unwrap().equivalent);
        }
    }

    #[test]
    fn files_round_trip(seed in any::<u64>(), dim in 1usize..=4, degree in 0usize..=2) {
        let mut s = Sampler::new(seed);
        let alg = ThreeLieAlgebra::from_structure(s.skew_triple(dim, dim, 0.4)).unwrap();
        prop_assert_eq!(io::parse_algebra(&io::algebra_to_json(&alg)).unwrap(), alg);
        let gr = GeneralizedRepresentation::new(s.representation(dim, 2, 0.4), s.nu_map(dim, 2, 0.4)).unwrap();
        prop_assert_eq!(io::parse_genrep(&io::genrep_to_json(&gr), dim).unwrap(), gr);
        let c = random_cochain(&mut s, degree, dim);
        prop_assert_eq!(io::parse_cochain(&io::cochain_to_json(&c, None)).unwrap(), c);
        let mixed = s.mixed_cochain(degree.min(1), dim, 2, 0.4);
        prop_assert_eq!(io::parse_mixed_cochain(&io::mixed_cochain_to_json(&mixed), dim, 2).unwrap(), mixed);
    }
}
