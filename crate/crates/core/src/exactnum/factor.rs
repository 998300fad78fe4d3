//! Factorization of rational polynomials into monic irreducibles.
//!
//! Squarefree parts are factored modulo a single large prime that exceeds twice the
//! coefficient bound of any integer factor, followed by subset recombination.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::modp::{random_prime, PrimeField};
use super::poly::Poly;
use super::rational::{common_denominator, Rational};
use crate::error::{Error, Result};

/// Monic irreducible factors with multiplicities, ordered by degree then coefficients.
/// Their product equals `p` up to a nonzero rational constant.
pub fn factor_over_q(p: &Poly<Rational>) -> Result<Vec<(Poly<Rational>, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    for (s, k) in p.squarefree_decomposition() {
        for f in factor_squarefree(&s) {
            out.push((f, k));
        }
    }
    out.sort_by(|a, b| {
        a.0.deg()
            .cmp(&b.0.deg())
            .then_with(|| a.0.coeffs().iter().rev().cmp(b.0.coeffs().iter().rev()))
            .then(a.1.cmp(&b.1))
    });
    Ok(out)
}

/// Integer coefficients with positive leading coefficient and content one.
pub fn primitive_integer(p: &Poly<Rational>) -> Vec<BigInt> {
    let den = common_denominator(p.coeffs());
    let mut ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    let sign = if ints.last().is_some_and(|c| c.is_negative()) { -1 } else { 1 };
    if !content.is_zero() {
        for c in ints.iter_mut() {
            *c = &*c / &content * sign;
        }
    }
    ints
}

fn int_poly(c: &[BigInt]) -> Poly<Rational> {
    Poly::new(c.iter().map(|x| Rational::from_integer(x.clone())).collect())
}

/// Monic irreducible factors of a monic squarefree polynomial.
fn factor_squarefree(f: &Poly<Rational>) -> Vec<Poly<Rational>> {
    let n = f.deg();
    if n <= 1 {
        return vec![f.monic()];
    }
    let mut found = Vec::new();
    let mut rest = f.monic();
    // strip the factor x so the modular image keeps a nonzero constant term
    if rest.coeff(0).is_zero() {
        found.push(Poly::x());
        rest = rest.exact_div(&Poly::x());
    }
    if rest.deg() <= 1 {
        if rest.deg() == 1 {
            found.push(rest);
        }
        return found;
    }
    if rest.deg() == 2 {
        found.extend(factor_quadratic(&rest));
        return found;
    }
    found.extend(zassenhaus(&primitive_integer(&rest)).into_iter().map(|g| int_poly(&g).monic()));
    found
}

fn factor_quadratic(f: &Poly<Rational>) -> Vec<Poly<Rational>> {
    let (c, b) = (f.coeff(0), f.coeff(1));
    let disc = &b * &b - Rational::from_integer(4.into()) * &c;
    match rational_sqrt(&disc) {
        Some(s) => {
            let two = Rational::from_integer(2.into());
            let r1 = (-&b + &s) / &two;
            let r2 = (-&b - &s) / &two;
            vec![Poly::linear_root(r1), Poly::linear_root(r2)]
        }
        None => vec![f.clone()],
    }
}

/// Exact square root of a nonnegative rational, if it is a square.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().to_biguint()?;
    let d = r.denom().to_biguint()?;
    let (sn, sd) = (n.sqrt(), d.sqrt());
    (&sn * &sn == n && &sd * &sd == d).then(|| Rational::new(sn.into(), sd.into()))
}

/// Factors a primitive squarefree integer polynomial of degree ≥ 2 with nonzero
/// constant term into primitive irreducible integer factors.
fn zassenhaus(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = f.len() - 1;
    let lc = f[n].clone();
    let l1: BigInt = f.iter().map(|c| c.abs()).sum();
    // |coefficients of lc/lc(g) · g| ≤ |lc| · 2^n · ‖f‖₁ for every integer factor g
    let bound: BigInt = lc.abs() * (BigInt::one() << n) * l1;
    let bits = (bound * 2u32).bits() + 2;
    let mut rng = ChaCha8Rng::seed_from_u64(0x6e696c6f7262);
    let (fp, modular) = loop {
        let p = random_prime(bits.max(64), &mut rng);
        let fp = PrimeField { p };
        if (&lc % BigInt::from(fp.p.clone())).is_zero() {
            continue;
        }
        let fbar = fp.monic(&fp.reduce_ints(f));
        if fp.gcd(&fbar, &fp.derivative(&fbar)).len() != 1 {
            continue;
        }
        let mut pieces = Vec::new();
        for (g, d) in fp.distinct_degree(&fbar) {
            pieces.extend(fp.equal_degree(&g, d, &mut rng));
        }
        break (fp, pieces);
    };
    recombine(f.to_vec(), modular, &fp)
}

fn recombine(mut f: Vec<BigInt>, mut modular: Vec<Vec<BigUint>>, fp: &PrimeField) -> Vec<Vec<BigInt>> {
    let mut out = Vec::new();
    let mut s = 1;
    while 2 * s <= modular.len() {
        let mut hit = None;
        for subset in Combinations::new(modular.len(), s) {
            let lc = f.last().unwrap().clone();
            let mut g = vec![fp.reduce_int(&lc)];
            for &i in &subset {
                g = fp.mul(&g, &modular[i]);
            }
            let lifted: Vec<BigInt> = g.iter().map(|c| fp.lift(c)).collect();
            let candidate = primitive_integer(&int_poly(&lifted));
            if let Some(q) = exact_integer_quotient(&f, &candidate) {
                hit = Some((subset, candidate, q));
                break;
            }
        }
        match hit {
            Some((subset, g, q)) => {
                out.push(g);
                f = q;
                for &i in subset.iter().rev() {
                    modular.remove(i);
                }
            }
            None => s += 1,
        }
    }
    out.push(primitive_integer(&int_poly(&f)));
    out
}

fn exact_integer_quotient(f: &[BigInt], g: &[BigInt]) -> Option<Vec<BigInt>> {
    // cheap filters on leading and constant coefficients
    if !(f.last()? % g.last()?).is_zero() || !(&f[0] % &g[0]).is_zero() {
        return None;
    }
    let (q, r) = int_poly(f).div_rem(&int_poly(g));
    if !r.is_zero() || q.coeffs().iter().any(|c| !c.is_integer()) {
        return None;
    }
    Some(q.coeffs().iter().map(|c| c.to_integer()).collect())
}

/// Lexicographic `k`-subsets of `0..n`.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            idx: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::rat;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Poly<Rational> {
        Poly::new(c.iter().map(|&v| rat(v)).collect())
    }

    fn expand(factors: &[(Poly<Rational>, usize)]) -> Poly<Rational> {
        factors
            .iter()
            .fold(Poly::one(), |acc, (f, k)| &acc * &f.pow(*k as u32))
    }

    /// Brute-force divisor search over small integer polynomials; independent of the
    /// modular algorithm and only practical for tiny inputs.
    fn has_small_factor(f: &Poly<Rational>, coeff_bound: i64) -> bool {
        let n = f.deg();
        for d in 1..=n / 2 {
            let mut c = vec![-coeff_bound; d];
            loop {
                let mut coeffs: Vec<Rational> = c.iter().map(|&v| rat(v)).collect();
                coeffs.push(rat(1));
                let g = Poly::new(coeffs);
                if g.divides(f) {
                    return true;
                }
                let mut i = 0;
                while i < d && c[i] == coeff_bound {
                    c[i] = -coeff_bound;
                    i += 1;
                }
                if i == d {
                    break;
                }
                c[i] += 1;
            }
        }
        false
    }

    #[test]
    fn x4_minus_1() {
        let f = factor_over_q(&p(&[-1, 0, 0, 0, 1])).unwrap();
        assert_eq!(f, vec![(p(&[-1, 1]), 1), (p(&[1, 1]), 1), (p(&[1, 0, 1]), 1)]);
    }

    #[test]
    fn perfect_square() {
        assert_eq!(factor_over_q(&p(&[1, 2, 1])).unwrap(), vec![(p(&[1, 1]), 2)]);
    }

    #[test]
    fn sqrt2_irreducible() {
        assert_eq!(factor_over_q(&p(&[-2, 0, 1])).unwrap(), vec![(p(&[-2, 0, 1]), 1)]);
    }

    #[test]
    fn swinnerton_dyer_style_quartic_is_irreducible() {
        // x^4 - 10x^2 + 1 is irreducible over Q but splits modulo every prime
        let f = p(&[1, 0, -10, 0, 1]);
        assert_eq!(factor_over_q(&f).unwrap(), vec![(f.clone(), 1)]);
        assert!(!has_small_factor(&f, 12));
    }

    #[test]
    fn cyclotomic_product() {
        // x^12 - 1 = Φ1 Φ2 Φ3 Φ4 Φ6 Φ12
        let mut c = vec![0; 13];
        c[0] = -1;
        c[12] = 1;
        let f = p(&c);
        let fs = factor_over_q(&f).unwrap();
        assert_eq!(fs.len(), 6);
        assert_eq!(expand(&fs), f);
        assert!(fs.contains(&(p(&[1, 0, -1, 0, 1]), 1)));
    }

    #[test]
    fn non_monic_rational_input() {
        // (2x - 1)(3x^2 + 1/2)
        let f = &Poly::new(vec![rat(-1), rat(2)]) * &Poly::new(vec![Rational::new(1.into(), 2.into()), rat(0), rat(3)]);
        let fs = factor_over_q(&f).unwrap();
        assert_eq!(fs.len(), 2);
        assert_eq!(expand(&fs), f.monic());
    }

    #[test]
    fn rational_sqrt_works() {
        assert_eq!(rational_sqrt(&Rational::new(9.into(), 4.into())), Some(Rational::new(3.into(), 2.into())));
        assert_eq!(rational_sqrt(&rat(2)), None);
        assert_eq!(rational_sqrt(&rat(-4)), None);
    }

    /// Eisenstein at 2: leading coefficient odd, others even, constant not divisible by 4.
    fn eisenstein() -> impl Strategy<Value = Poly<Rational>> {
        (1usize..=4).prop_flat_map(|deg| {
            (proptest::collection::vec(-3i64..=3, deg - 1), 0i64..3, 0i64..2).prop_map(move |(mid, c0, lc)| {
                let mut c = vec![2 * (2 * c0 + 1)];
                c.extend(mid.iter().map(|v| 2 * v));
                c.push(2 * lc + 1);
                Poly::new(c.iter().map(|&v| rat(v)).collect())
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn products_of_irreducibles_are_recovered(
            parts in proptest::collection::vec((eisenstein(), 1usize..=2), 1..=3)
        ) {
            let f = parts.iter().fold(Poly::one(), |acc, (g, k)| &acc * &g.pow(*k as u32));
            let fs = factor_over_q(&f).unwrap();
            prop_assert_eq!(expand(&fs), f.monic());
            let mut expected: Vec<(Poly<Rational>, usize)> = Vec::new();
            for (g, k) in &parts {
                let g = g.monic();
                match expected.iter_mut().find(|(h, _)| *h == g) {
                    Some(e) => e.1 += k,
                    None => expected.push((g, *k)),
                }
            }
            let mut got = fs.clone();
            got.sort_by_key(|(g, k)| (format!("{g}"), *k));
            expected.sort_by_key(|(g, k)| (format!("{g}"), *k));
            prop_assert_eq!(got, expected);
        }

        #[test]
        fn expansion_reproduces_input(c in proptest::collection::vec(-20i64..=20, 1..=9)) {
            let f = p(&c);
            prop_assume!(!f.is_zero());
            let fs = factor_over_q(&f).unwrap();
            prop_assert_eq!(expand(&fs), f.monic());
            for (g, _) in &fs {
                prop_assert_eq!(g.leading(), rat(1));
                if g.deg() <= 4 {
                    prop_assert!(!has_small_factor(g, 4) || g.deg() == 1);
                }
            }
        }
    }
}
