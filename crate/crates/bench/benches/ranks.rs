use criterion::{criterion_group, criterion_main, Criterion};
use lowdeg_core::cohomology::a_m;
use lowdeg_core::exact::rank_mod_p;
use lowdeg_core::varieties::{elliptic_normal_curve, rational_normal_curve};
use lowdeg_core::{Field, Matrix};
use std::hint::black_box;

const P: u64 = 10007;

fn pseudo_random(n: usize, seed: u64) -> Vec<u64> {
    let mut x = seed;
    (0..n)
        .map(|_| {
            x = x
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            (x >> 33) % P
        })
        .collect()
}

fn rank_benches(c: &mut Criterion) {
    for size in [60, 120] {
        let data = pseudo_random(size * size, 1);
        c.bench_function(&format!("rank_mod_p {size}x{size}"), |b| {
            b.iter(|| rank_mod_p(size, size, black_box(data.clone()), P))
        });
    }
    let size = 12;
    let ints: Vec<i64> = pseudo_random(size * size, 2)
        .into_iter()
        .map(|x| x as i64 - P as i64 / 2)
        .collect();
    let m = Matrix::from_i64(Field::Rational, size, size, &ints).unwrap();
    c.bench_function("bareiss rank 12x12 over Q", |b| {
        b.iter(|| black_box(&m).rank())
    });
}

fn hypersurface_benches(c: &mut Criterion) {
    let f = Field::prime(P).unwrap();
    let rnc = rational_normal_curve(6, f).unwrap();
    c.bench_function("a_4 of rnc(6)", |b| {
        b.iter(|| a_m(black_box(&rnc), 4, 42).unwrap())
    });
    let ell = elliptic_normal_curve(4, f, 2, 3).unwrap();
    c.bench_function("a_3 of elliptic(c=4)", |b| {
        b.iter(|| a_m(black_box(&ell), 3, 42).unwrap())
    });
}

criterion_group!(benches, rank_benches, hypersurface_benches);
criterion_main!(benches);
