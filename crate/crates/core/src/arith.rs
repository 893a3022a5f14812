//! Small modular arithmetic helpers: primality, residues, inverses.

/// Trial-division primality test; inputs here stay small.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut acc: u128 = 1;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    let (mut old_r, mut r) = (a.rem_euclid(m), m);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    (old_r == 1).then(|| old_s.rem_euclid(m))
}

/// Quadratic character of `t` modulo the odd prime `p`: `Some(true)` on
/// residues, `Some(false)` on non-residues, `None` on multiples of `p`.
pub fn quadratic_character(t: i64, p: u64) -> Option<bool> {
    let t = t.rem_euclid(p as i64) as u64;
    if t == 0 {
        None
    } else {
        Some(mod_pow(t, (p - 1) / 2, p) == 1)
    }
}

/// Membership table for `QR_p`, indexed by residue.
pub fn residue_table(p: u64) -> Vec<bool> {
    let mut table = vec![false; p as usize];
    for x in 1..p {
        table[((x * x) % p) as usize] = true;
    }
    table
}
