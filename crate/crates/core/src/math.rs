//! Small exact-arithmetic helpers shared across the crate: binomials,
//! surjection counts, integer powers, and correctly rounded count ratios.

/// `x^y` for real exponents. Routed through `libm` in `no_std` builds.
#[inline]
pub(crate) fn pow(x: f64, y: f64) -> f64 {
    #[cfg(feature = "std")]
    {
        x.powf(y)
    }
    #[cfg(not(feature = "std"))]
    {
        libm::pow(x, y)
    }
}

/// `x^e` by binary exponentiation; identical results on std and no_std.
pub(crate) fn powu(x: f64, e: u32) -> f64 {
    let mut base = x;
    let mut e = e;
    let mut acc = 1.0f64;
    while e > 0 {
        if e & 1 == 1 {
            acc *= base;
        }
        base *= base;
        e >>= 1;
    }
    acc
}

/// Exact binomial coefficient; intermediate products stay within `u128`
/// for every `n ≤ 8192`, `k ≤ 6` this crate needs.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc
            .checked_mul((n - i) as u128)
            .expect("binomial overflow");
        acc /= (i + 1) as u128;
    }
    acc
}

pub(crate) fn factorial(k: u64) -> u128 {
    (1..=k as u128).product()
}

/// Number of surjections from an `l`-set onto a `k`-set: `k! * S(l, k)`.
pub(crate) fn surjections(l: usize, k: usize) -> u128 {
    if k > l {
        return 0;
    }
    // Stirling numbers of the second kind by the standard recurrence.
    let mut stirling = [[0u128; 8]; 8];
    stirling[0][0] = 1;
    for n in 1..=l {
        for m in 1..=n {
            stirling[n][m] = m as u128 * stirling[n - 1][m] + stirling[n - 1][m - 1];
        }
    }
    factorial(k as u64) * stirling[l][k]
}

/// `num / den` rounded to the nearest representable f64 (ties to even).
///
/// Requires `num <= den` and `den < 2^127`; this covers every count/total
/// pair produced by the counting code.
pub(crate) fn ratio_f64(num: u128, den: u128) -> f64 {
    assert!(den > 0, "ratio_f64: zero denominator");
    assert!(num <= den, "ratio_f64: ratio above one");
    assert!(den < 1u128 << 127, "ratio_f64: denominator too wide");
    if num == 0 {
        return 0.0;
    }
    if num == den {
        return 1.0;
    }
    // Long division producing 54 quotient bits plus a sticky remainder.
    let mut rem = num;
    let mut exp: i32 = 0;
    loop {
        rem <<= 1;
        exp -= 1;
        if rem >= den {
            break;
        }
    }
    rem -= den;
    let mut mant: u64 = 1;
    for _ in 1..54 {
        rem <<= 1;
        mant <<= 1;
        if rem >= den {
            rem -= den;
            mant |= 1;
        }
    }
    // mant holds bits of weight 2^exp .. 2^(exp-53); round to 53 bits.
    let round = mant & 1;
    let sticky = rem != 0;
    let mut m53 = mant >> 1;
    if round == 1 && (sticky || m53 & 1 == 1) {
        m53 += 1;
        if m53 == 1u64 << 53 {
            m53 >>= 1;
            exp += 1;
        }
    }
    (m53 as f64) * exp2(exp - 52)
}

/// 2^e for exponents within the normal f64 range.
fn exp2(e: i32) -> f64 {
    debug_assert!((-1022..=1023).contains(&e));
    f64::from_bits(((1023 + e) as u64) << 52)
}
