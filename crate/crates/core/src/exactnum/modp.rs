//! Polynomials over a prime field F_p with Cantor–Zassenhaus factorization.

use num_bigint::{BigInt, BigUint, RandBigInt};
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;

/// Coefficients lowest first, reduced into `[0, p)`, no leading zeros.
pub(crate) type PolyP = Vec<BigUint>;

pub(crate) struct PrimeField {
    pub p: BigUint,
}

fn trim(mut a: PolyP) -> PolyP {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

impl PrimeField {
    pub fn reduce_int(&self, c: &BigInt) -> BigUint {
        let p = BigInt::from(self.p.clone());
        c.mod_floor(&p).to_biguint().unwrap()
    }

    pub fn reduce_ints(&self, c: &[BigInt]) -> PolyP {
        trim(c.iter().map(|x| self.reduce_int(x)).collect())
    }

    /// Symmetric lift into `(−p/2, p/2]`.
    pub fn lift(&self, c: &BigUint) -> BigInt {
        let half = &self.p >> 1;
        if c > &half {
            BigInt::from(c.clone()) - BigInt::from(self.p.clone())
        } else {
            BigInt::from(c.clone())
        }
    }

    fn inv(&self, a: &BigUint) -> BigUint {
        // Fermat: a^(p-2)
        a.modpow(&(&self.p - 2u32), &self.p)
    }

    pub fn sub(&self, a: &PolyP, b: &PolyP) -> PolyP {
        let n = a.len().max(b.len());
        let zero = BigUint::zero();
        trim(
            (0..n)
                .map(|k| {
                    let x = a.get(k).unwrap_or(&zero);
                    let y = b.get(k).unwrap_or(&zero);
                    (x + &self.p - y) % &self.p
                })
                .collect(),
        )
    }

    pub fn mul(&self, a: &PolyP, b: &PolyP) -> PolyP {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![BigUint::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        trim(out.into_iter().map(|c| c % &self.p).collect())
    }

    pub fn scale(&self, a: &PolyP, c: &BigUint) -> PolyP {
        trim(a.iter().map(|x| x * c % &self.p).collect())
    }

    pub fn monic(&self, a: &PolyP) -> PolyP {
        match a.last() {
            None => Vec::new(),
            Some(lc) => self.scale(a, &self.inv(lc)),
        }
    }

    pub fn div_rem(&self, a: &PolyP, b: &PolyP) -> (PolyP, PolyP) {
        let db = b.len() - 1;
        let inv = self.inv(b.last().unwrap());
        let mut r = a.clone();
        if r.len() <= db {
            return (Vec::new(), r);
        }
        let mut q = vec![BigUint::zero(); r.len() - db];
        for k in (0..q.len()).rev() {
            let c = &r[k + db] * &inv % &self.p;
            if c.is_zero() {
                continue;
            }
            for (j, bc) in b.iter().enumerate() {
                let t = &c * bc % &self.p;
                r[k + j] = (&r[k + j] + &self.p - t) % &self.p;
            }
            q[k] = c;
        }
        r.truncate(db);
        (trim(q), trim(r))
    }

    pub fn rem(&self, a: &PolyP, b: &PolyP) -> PolyP {
        self.div_rem(a, b).1
    }

    pub fn gcd(&self, a: &PolyP, b: &PolyP) -> PolyP {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    pub fn derivative(&self, a: &PolyP) -> PolyP {
        trim(
            a.iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigUint::from(k) % &self.p)
                .collect(),
        )
    }

    pub fn powmod(&self, base: &PolyP, e: &BigUint, m: &PolyP) -> PolyP {
        let mut result: PolyP = vec![BigUint::one()];
        let mut b = self.rem(base, m);
        for i in 0..e.bits() {
            if e.bit(i) {
                result = self.rem(&self.mul(&result, &b), m);
            }
            if i + 1 < e.bits() {
                b = self.rem(&self.mul(&b, &b), m);
            }
        }
        self.rem(&result, m)
    }

    /// Distinct-degree factorization of a monic squarefree polynomial.
    pub fn distinct_degree(&self, f: &PolyP) -> Vec<(PolyP, usize)> {
        let mut out = Vec::new();
        let mut f = f.clone();
        let x: PolyP = vec![BigUint::zero(), BigUint::one()];
        let mut h = x.clone();
        let mut d = 1;
        while f.len() > 2 * d {
            h = self.powmod(&h, &self.p, &f);
            let g = self.gcd(&self.sub(&h, &x), &f);
            if g.len() > 1 {
                f = self.div_rem(&f, &g).0;
                h = self.rem(&h, &f);
                out.push((g, d));
            }
            d += 1;
        }
        if f.len() > 1 {
            let deg = f.len() - 1;
            out.push((f, deg));
        }
        out
    }

    /// Splits a product of distinct monic irreducibles of degree `d` (odd `p`).
    pub fn equal_degree<R: Rng>(&self, f: &PolyP, d: usize, rng: &mut R) -> Vec<PolyP> {
        let n = f.len() - 1;
        if n == d {
            return vec![f.clone()];
        }
        let e = (self.p.pow(d as u32) - 1u32) >> 1;
        loop {
            let a: PolyP = trim((0..n).map(|_| rng.gen_biguint_below(&self.p)).collect());
            if a.len() < 2 {
                continue;
            }
            let b = self.sub(&self.powmod(&a, &e, f), &vec![BigUint::one()]);
            let g = self.gcd(&b, f);
            if g.len() > 1 && g.len() < f.len() {
                let h = self.div_rem(f, &g).0;
                let mut out = self.equal_degree(&g, d, rng);
                out.extend(self.equal_degree(&self.monic(&h), d, rng));
                return out;
            }
        }
    }
}

/// Miller–Rabin with `rounds` random bases.
pub(crate) fn is_probable_prime<R: Rng>(n: &BigUint, rounds: usize, rng: &mut R) -> bool {
    let two = BigUint::from(2u32);
    if n < &two {
        return false;
    }
    for small in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == &BigUint::from(small) {
            return true;
        }
        if (n % small).is_zero() {
            return false;
        }
    }
    let n1 = n - 1u32;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    'outer: for _ in 0..rounds {
        let a = rng.gen_biguint_range(&two, &n1);
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// A random probable prime with exactly `bits` bits.
pub(crate) fn random_prime<R: Rng>(bits: u64, rng: &mut R) -> BigUint {
    loop {
        let mut c = rng.gen_biguint(bits);
        c.set_bit(bits - 1, true);
        c.set_bit(0, true);
        if is_probable_prime(&c, 32, rng) {
            return c;
        }
    }
}
