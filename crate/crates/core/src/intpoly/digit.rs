use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::polynomial::Polynomial;
use crate::error::Result;
use crate::farey::Fraction;
use crate::kneading::{self, check_modality, SignData, Symbol};

/// The digits `c_1, ..., c_b` of `D_f` for `q = a/b`.
///
/// `c_i = m` exactly when `y = (a/b) t` takes an integer value for some
/// `t ∈ [i-1, i]`, that is when `floor(a·i / b) >= ceil(a·(i-1) / b)`.
pub fn digit_coefficients(m: u32, q: &Fraction) -> Result<Vec<u32>> {
    check_modality(m)?;
    q.require_interior()?;
    let (a, b) = (q.num(), q.den());
    let b_len = q.den_usize()?;
    let mut out = Vec::with_capacity(b_len);
    let mut i = BigInt::from(1u32);
    for _ in 0..b_len {
        let hi = (a * &i).div_floor(b);
        let lo = (a * (&i - 1u32)).div_ceil(b);
        out.push(if hi >= lo { m } else { m - 2 });
        i += 1u32;
    }
    Ok(out)
}

/// `D_f(t) = t^(b+1) + 1 - Σ_{i=1}^{b} c_i t^(b+1-i)`.
pub fn digit_polynomial(m: u32, q: &Fraction) -> Result<Polynomial<BigInt>> {
    let c = digit_coefficients(m, q)?;
    let b = c.len();
    let mut coeffs = vec![BigInt::zero(); b + 2];
    coeffs[0] = BigInt::from(1);
    coeffs[b + 1] = BigInt::from(1);
    for (idx, ci) in c.iter().enumerate() {
        let i = idx + 1;
        coeffs[b + 1 - i] = -BigInt::from(*ci);
    }
    Ok(Polynomial::new(coeffs))
}

/// `1 - t·ρ_f(t)` built from the itinerary of `1` and its cumulative signs.
///
/// `ρ_f(t) = k·s_N·t^N + Σ_{i<N} s_i c_i(f) t^i` with `N = b` and `k = 1`,
/// where `c_i(f)` is the address of `f^i(1)`, bumped by one on decreasing laps.
pub fn simple_zeta_poly(m: u32, q: &Fraction) -> Result<Polynomial<BigInt>> {
    let nu = kneading::principal_kneading(m, q)?;
    let signs = SignData::new(m)?;
    let b = q.den_usize()?;
    let itinerary = nu.entries();
    let s = signs.cumulative(&itinerary[..b]);
    // f^b(1) = k_1, so the critical index is k = 1
    debug_assert_eq!(itinerary[b], Symbol::Critical(1));
    let k = 1i64;
    let mut rho = vec![BigInt::zero(); b + 1];
    for i in 0..b {
        let lap = itinerary[i].lap().expect("interval address before time b");
        let c = if signs.sign_at(itinerary[i]) == 1 {
            lap
        } else {
            lap + 1
        };
        rho[i] = BigInt::from(s[i]) * BigInt::from(c);
    }
    rho[b] = BigInt::from(k * i64::from(s[b]));
    let phi = Polynomial::new(rho).shift(1);
    Ok(&Polynomial::one() - &phi)
}
