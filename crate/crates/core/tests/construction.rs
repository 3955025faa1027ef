use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tzmrd::harness::channel::random_message;
use tzmrd::linalg::{self, Matrix};
use tzmrd::space::{self, qvan, Basis};
use tzmrd::{CodeParams, Elem, Field, TzCode};

fn cfg() -> ProptestConfig {
    ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() }
}

fn random_basis(f: &Field, rng: &mut ChaCha8Rng) -> Basis {
    loop {
        if let Ok(b) = Basis::new(f, (0..f.degree()).map(|_| f.random(rng)).collect()) {
            return b;
        }
    }
}

#[test]
fn qvan_is_nonsingular_iff_independent_exhaustive() {
    let f = Field::new(3, 2).unwrap();
    for i in 0..f.order() {
        for j in 0..f.order() {
            let x = [f.elem_from_index(i), f.elem_from_index(j)];
            let nonsingular = linalg::rank(&f, &qvan(&f, &x, 2)) == 2;
            assert_eq!(nonsingular, space::independent(&f, &x), "{} {}", x[0], x[1]);
        }
    }
}

/// Solutions of random 3x3 systems over F_81 against enumeration of all
/// 81^3 candidate vectors.
#[test]
fn solve_and_kernel_match_enumeration() {
    let f = Field::new(3, 2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for trial in 0..4 {
        let mut m = Matrix::from_fn(3, 3, |_, _| f.random(&mut rng));
        if trial % 2 == 1 {
            // Force a dependency: row 2 = row 0 + c * row 1.
            let c = f.random(&mut rng);
            for j in 0..3 {
                let v = f.add(m.get(0, j), &f.mul(&c, m.get(1, j)));
                m.set(2, j, v);
            }
        }
        let rhs: Vec<Elem> = (0..3).map(|_| f.random(&mut rng)).collect();
        let (mut solutions, mut null) = (Vec::new(), 0usize);
        for a in 0..81 {
            for b in 0..81 {
                for c in 0..81 {
                    let x = [f.elem_from_index(a), f.elem_from_index(b), f.elem_from_index(c)];
                    let y = linalg::mat_vec(&f, &m, &x).unwrap();
                    if y == rhs {
                        solutions.push(x.to_vec());
                    }
                    if y.iter().all(Elem::is_zero) {
                        null += 1;
                    }
                }
            }
        }
        let kernel = linalg::kernel(&f, &m);
        assert_eq!(81usize.pow(kernel.len() as u32), null);
        match linalg::solve(&f, &m, &rhs) {
            Ok(x) => assert!(solutions.contains(&x)),
            Err(_) => assert!(solutions.is_empty()),
        }
    }
}

#[test]
fn biorthogonality_for_random_bases() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for (q, n, k) in [(3, 2, 1), (5, 2, 2), (3, 3, 2), (3, 3, 5), (7, 2, 3)] {
        let f = Field::new(q, n).unwrap();
        let lambda = random_basis(&f, &mut rng);
        let code =
            TzCode::build(f.clone(), k, CodeParams { lambda: Some(lambda.clone()), ..Default::default() }).unwrap();
        let m = f.degree();
        for i in 0..m {
            for j in 0..m {
                let li = space::frobenius_vec(&f, lambda.elems(), i as i64);
                let mj = space::frobenius_vec(&f, code.mu().elems(), j as i64);
                let ip = space::inner(&f, &li, &mj);
                assert_eq!(ip.is_zero(), i != j, "({q},{n},{k}) i={i} j={j}");
                if i == j && i == k {
                    assert_eq!(&ip, code.xi());
                }
            }
        }
        // Every perturbation of a single mu_j breaks some condition.
        for j in 0..m {
            let mut mu = code.mu().elems().to_vec();
            mu[j] = f.add(&mu[j], &f.random(&mut rng));
            if &mu[..] == code.mu().elems() {
                continue;
            }
            let broken = (0..m).any(|i| {
                let li = space::frobenius_vec(&f, lambda.elems(), i as i64);
                let ip = space::inner(&f, &li, &mu);
                let target = if i == 0 { f.frobenius(code.xi(), (m - k) as i64) } else { f.zero() };
                ip != target
            });
            assert!(broken);
        }
    }
}

#[test]
fn punctured_codes_have_full_rank_generators() {
    let f = Field::new(3, 3).unwrap();
    let code = TzCode::new(f.clone(), 2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    for l in 2..=6 {
        let pts = loop {
            let p: Vec<Elem> = (0..l).map(|_| f.random(&mut rng)).collect();
            if space::independent(&f, &p) {
                break p;
            }
        };
        let g = code.punctured_generator(&pts).unwrap();
        assert_eq!((g.rows(), g.cols()), (4, l));
    }
}

proptest! {
    #![proptest_config(cfg())]

    #[test]
    fn frobenius_is_an_automorphism(seed in any::<u64>(), i in -12i64..12) {
        let f = Field::new(3, 3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b) = (f.random(&mut rng), f.random(&mut rng));
        prop_assert_eq!(f.frobenius(&f.mul(&a, &b), i), f.mul(&f.frobenius(&a, i), &f.frobenius(&b, i)));
        prop_assert_eq!(f.frobenius(&f.add(&a, &b), i), f.add(&f.frobenius(&a, i), &f.frobenius(&b, i)));
        prop_assert_eq!(f.frobenius(&f.frobenius(&a, i), -i), a.clone());
        prop_assert_eq!(f.frobenius(&a, 6), a.clone());
        prop_assert_eq!(f.in_subfield(&a), f.frobenius(&a, 3) == a);
    }

    #[test]
    fn relative_trace_is_subfield_linear(seed in any::<u64>()) {
        let f = Field::new(5, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b) = (f.random(&mut rng), f.random(&mut rng));
        let c = f.random_subfield(&mut rng);
        let lhs = f.trace_rel(&f.add(&f.mul(&c, &a), &b));
        prop_assert_eq!(lhs.clone(), f.add(&f.mul(&c, &f.trace_rel(&a)), &f.trace_rel(&b)));
        prop_assert!(f.in_subfield(&lhs));
    }

    #[test]
    fn encode_is_subfield_linear_and_unmaps(seed in any::<u64>()) {
        let code = TzCode::new(Field::new(3, 3).unwrap(), 2).unwrap();
        let f = code.field();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (m1, m2) = (random_message(&code, &mut rng), random_message(&code, &mut rng));
        let (c1, c2) = (f.random_subfield(&mut rng), f.random_subfield(&mut rng));
        let mix: Vec<Elem> = m1.iter().zip(&m2).map(|(x, y)| f.add(&f.mul(&c1, x), &f.mul(&c2, y))).collect();
        let e1 = code.encode(&m1).unwrap();
        let e2 = code.encode(&m2).unwrap();
        let expect: Vec<Elem> = e1.iter().zip(&e2).map(|(x, y)| f.add(&f.mul(&c1, x), &f.mul(&c2, y))).collect();
        prop_assert_eq!(code.encode(&mix).unwrap(), expect);
        prop_assert_eq!(code.unmap(&e1).unwrap(), m1);
    }
}
