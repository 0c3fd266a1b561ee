use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use trilie::corpus;
use trilie::gencohom::GenComplex;
use trilie::rep::semidirect;
use trilie::Exec;

const MODES: [(&str, Exec); 2] = [("parallel", Exec::Parallel), ("sequential", Exec::Sequential)];

fn fundamental_identity(c: &mut Criterion) {
    let alg = corpus::simple4();
    let big = semidirect(&alg, &alg.adjoint_rep().unwrap()).unwrap();
    let mut group = c.benchmark_group("fi_semidirect_simple4");
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| big.check_fi(exec)));
    }
    group.finish();
}

fn generalized_cohomology(c: &mut Criterion) {
    let alg = corpus::g3();
    let gr = corpus::cocycle_second_genrep()
        .instantiate(&corpus::assignment(&[("s1", 1), ("s2", 2), ("s3", 3)]))
        .unwrap();
    let mut group = c.benchmark_group("h2_generalized_g3");
    group.sample_size(10);
    for (name, exec) in MODES {
        let cx = GenComplex::new(&alg, &gr, exec).unwrap();
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| cx.cohomology(2, false).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, fundamental_identity, generalized_cohomology);
criterion_main!(benches);
