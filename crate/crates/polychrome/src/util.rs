//! Small numeric helpers shared across modules.

/// Binomial coefficient C(n, k) as a u64. Panics on overflow, which cannot
/// happen for the pattern sizes this crate supports (n <= 64).
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for j in 0..k {
        acc = acc * (n - j) as u128 / (j + 1) as u128;
    }
    u64::try_from(acc).expect("binomial overflow")
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_basics() {
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(10, 5), 252);
        assert_eq!(binomial(4, 7), 0);
        assert_eq!(binomial(64, 32), 1832624140942590534);
    }

    #[test]
    fn lcm_basics() {
        assert_eq!(lcm(5, 3), 15);
        assert_eq!(lcm(6, 4), 12);
        assert_eq!(lcm(1, 7), 7);
    }
}
