//! Benchmark system generators and the seeded random-system generator used
//! by the cross-checking suites.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::algebra::{FieldError, Monomial, MonomialOrder, Polynomial, Ring};
use crate::frontend::SystemDescription;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BenchFamily {
    Cyclic,
    Katsura,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BenchError {
    #[error("benchmark size must be at least 2, got {0}")]
    TooSmall(usize),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Instantiates a named benchmark family at size n.
///
/// cyclic-n: variables x1..xn; for d = 1..n-1 the sum of all cyclically
/// consecutive degree-d products, plus x1*...*xn - 1.
///
/// katsura-n: variables u0..un; for m = 0..n-1 the convolution equation
/// sum over i in [-n, n] of u_|i| * u_|m-i| - u_m (indices beyond n are
/// zero), plus u0 + 2*u1 + ... + 2*un - 1.
pub fn gen_benchmark(
    family: BenchFamily,
    n: usize,
    modulus: u64,
    order: MonomialOrder,
) -> Result<SystemDescription, BenchError> {
    if n < 2 {
        return Err(BenchError::TooSmall(n));
    }
    match family {
        BenchFamily::Cyclic => cyclic(n, modulus, order),
        BenchFamily::Katsura => katsura(n, modulus, order),
    }
}

fn cyclic(n: usize, modulus: u64, order: MonomialOrder) -> Result<SystemDescription, BenchError> {
    let ring = Ring::new(modulus, n, order)?;
    let one = ring.field().one();
    let mut generators = Vec::with_capacity(n);
    for d in 1..n {
        let mut terms = Vec::with_capacity(n);
        for i in 0..n {
            let mut exps = vec![0u32; n];
            for j in 0..d {
                exps[(i + j) % n] += 1;
            }
            terms.push((one, Monomial::from_exps(exps)));
        }
        generators.push(ring.polynomial(terms));
    }
    generators.push(ring.polynomial(vec![
        (one, Monomial::from_exps(vec![1; n])),
        (ring.field().neg(one), Monomial::one(n)),
    ]));
    Ok(SystemDescription {
        modulus,
        variables: (1..=n).map(|i| format!("x{i}")).collect(),
        order,
        generators,
    })
}

fn katsura(n: usize, modulus: u64, order: MonomialOrder) -> Result<SystemDescription, BenchError> {
    let nvars = n + 1;
    let ring = Ring::new(modulus, nvars, order)?;
    let field = ring.field();
    let one = field.one();
    let mut generators = Vec::with_capacity(n + 1);
    let signed = |k: i64| k.unsigned_abs() as usize;
    for m in 0..n as i64 {
        let mut terms = Vec::new();
        for i in -(n as i64)..=(n as i64) {
            let (a, b) = (signed(i), signed(m - i));
            if b > n {
                continue;
            }
            let mut exps = vec![0u32; nvars];
            exps[a] += 1;
            exps[b] += 1;
            terms.push((one, Monomial::from_exps(exps)));
        }
        let mut u_m = vec![0u32; nvars];
        u_m[m as usize] = 1;
        terms.push((field.neg(one), Monomial::from_exps(u_m)));
        generators.push(ring.polynomial(terms));
    }
    let two = field.from_u64(2);
    let mut linear = vec![(one, Monomial::var(nvars, 0))];
    for i in 1..=n {
        linear.push((two, Monomial::var(nvars, i)));
    }
    linear.push((field.neg(one), Monomial::one(nvars)));
    generators.push(ring.polynomial(linear));
    Ok(SystemDescription {
        modulus,
        variables: (0..=n).map(|i| format!("u{i}")).collect(),
        order,
        generators,
    })
}

/// Small seeded random system for cross-checking: up to 4 generators of
/// total degree at most 3 with at most 5 terms each. Identical seeds give
/// identical systems on every platform.
pub fn random_system(
    seed: u64,
    nvars: usize,
    modulus: u64,
    order: MonomialOrder,
) -> Result<SystemDescription, FieldError> {
    assert!(
        (1..=16).contains(&nvars),
        "random systems support 1..=16 variables"
    );
    let ring = Ring::new(modulus, nvars, order)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ngens = 1 + (rng.next_u32() % 4) as usize;
    let generators: Vec<Polynomial> = (0..ngens)
        .map(|_| {
            let nterms = 1 + rng.next_u32() % 5;
            ring.polynomial(
                (0..nterms)
                    .map(|_| {
                        let degree = rng.next_u32() % 4;
                        let mut exps = vec![0u32; nvars];
                        for _ in 0..degree {
                            exps[(rng.next_u32() as usize) % nvars] += 1;
                        }
                        (
                            ring.field().from_u64(rng.next_u64()),
                            Monomial::from_exps(exps),
                        )
                    })
                    .collect(),
            )
        })
        .collect();
    Ok(SystemDescription {
        modulus,
        variables: (1..=nvars).map(|i| format!("x{i}")).collect(),
        order,
        generators,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frontend::{format_basis, parse_system};

    #[test]
    fn cyclic_3_matches_the_formula() {
        let desc = gen_benchmark(BenchFamily::Cyclic, 3, 32003, MonomialOrder::GrevLex).unwrap();
        let expected = parse_system(
            "ring 32003 grevlex x1 x2 x3\n\
             x1 + x2 + x3\n\
             x1*x2 + x2*x3 + x3*x1\n\
             x1*x2*x3 - 1\n",
        )
        .unwrap();
        assert_eq!(desc.generators, expected.generators);
        assert_eq!(desc.variables, expected.variables);
    }

    #[test]
    fn katsura_2_matches_the_formula() {
        let desc = gen_benchmark(BenchFamily::Katsura, 2, 32003, MonomialOrder::GrevLex).unwrap();
        let expected = parse_system(
            "ring 32003 grevlex u0 u1 u2\n\
             u0^2 + 2*u1^2 + 2*u2^2 - u0\n\
             2*u0*u1 + 2*u1*u2 - u1\n\
             u0 + 2*u1 + 2*u2 - 1\n",
        )
        .unwrap();
        assert_eq!(desc.generators, expected.generators);
        assert_eq!(desc.variables, expected.variables);
    }

    #[test]
    fn sizes_below_two_are_rejected() {
        assert_eq!(
            gen_benchmark(BenchFamily::Cyclic, 1, 32003, MonomialOrder::GrevLex),
            Err(BenchError::TooSmall(1))
        );
        assert_eq!(
            gen_benchmark(BenchFamily::Katsura, 0, 32003, MonomialOrder::GrevLex),
            Err(BenchError::TooSmall(0))
        );
    }

    #[test]
    fn random_systems_are_reproducible_and_bounded() {
        for seed in 0..20 {
            let a = random_system(seed, 3, 7, MonomialOrder::GrevLex).unwrap();
            let b = random_system(seed, 3, 7, MonomialOrder::GrevLex).unwrap();
            assert_eq!(a.generators, b.generators);
            assert!(a.generators.len() <= 4);
            for g in &a.generators {
                assert!(g.total_degree() <= 3);
                assert!(g.num_terms() <= 5);
            }
        }
    }

    #[test]
    fn benchmark_text_round_trips() {
        let desc = gen_benchmark(BenchFamily::Cyclic, 4, 32003, MonomialOrder::GrevLex).unwrap();
        let text = format_basis(&desc, &desc.generators);
        let reparsed = parse_system(&text).unwrap();
        assert_eq!(reparsed.generators.len(), desc.generators.len());
        for g in &desc.generators {
            assert!(reparsed.generators.contains(g));
        }
    }
}
