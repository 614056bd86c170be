use criterion::{criterion_group, criterion_main, Criterion};
use lgcy_core::ideal::{groebner, MonomialOrder};
use lgcy_core::milnor::build_milnor_ring;
use lgcy_core::oscillatory::{oscillatory_quadrature, QuadratureOptions};
use lgcy_core::{parse_polynomial, Polynomial, ResiduePairing, WeightSystem};

fn fermat(n: usize, d: u32) -> Polynomial {
    let vars: Vec<String> = (0..n).map(|i| format!("z{i}")).collect();
    let text: Vec<String> = vars.iter().map(|v| format!("{v}^{d}")).collect();
    parse_polynomial(&text.join(" + "), &vars).unwrap()
}

fn jacobian(f: &Polynomial) -> Vec<Polynomial> {
    (0..f.nvars()).map(|i| f.derivative(i)).collect()
}

fn bench_groebner(c: &mut Criterion) {
    for (n, d) in [(4, 4), (5, 5)] {
        let f = fermat(n, d);
        let gens = jacobian(&f);
        let order = MonomialOrder::grevlex(n);
        c.bench_function(&format!("groebner fermat {n}x{d}"), |b| b.iter(|| groebner(&gens, &order).unwrap()));
    }
    let deformed = parse_polynomial("x^4 + y^4 + z^4 + w^4 + 3*x*y*z*w", &["x", "y", "z", "w"]).unwrap();
    let gens = jacobian(&deformed);
    let order = MonomialOrder::grevlex(4);
    c.bench_function("groebner quartic + 3xyzw", |b| b.iter(|| groebner(&gens, &order).unwrap()));
}

fn bench_gram(c: &mut Criterion) {
    let ring = build_milnor_ring(&fermat(5, 5), &WeightSystem::homogeneous(5, 5)).unwrap();
    let pairing = ResiduePairing::new(ring).unwrap();
    c.bench_function("gram block quintic (5, 10)", |b| b.iter(|| pairing.gram_block(5, 10).unwrap()));
}

fn bench_quadrature(c: &mut Criterion) {
    let opts = QuadratureOptions::default();
    c.bench_function("thimble quadrature m=5 k=2", |b| {
        b.iter(|| oscillatory_quadrature(5, 2, 1, &opts).unwrap())
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = bench_groebner, bench_gram, bench_quadrature
}
criterion_main!(benches);
