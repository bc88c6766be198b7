//! Exact Fourier (±1) expansion with dyadic coefficients, plus a Parseval
//! check: the squared norm of a Boolean ±1 function is 1.

use matchpoly::bpm::primal_polynomial;
use matchpoly::polyalg::to_fourier;
use matchpoly::Dyadic;

fn main() -> matchpoly::Result<()> {
    for n in 1..=3 {
        let f = to_fourier(&primal_polynomial(n)?)?;
        println!("n = {n}: {} nonzero Fourier coefficients, shared denominator 2^{}", f.len(), f.shared_exponent());
        println!("  empty-set coefficient {}", f.coeff(0));
        assert_eq!(f.squared_norm(), Dyadic::from_int(1));
    }
    print!("{}", to_fourier(&primal_polynomial(2)?)?.to_text());
    Ok(())
}
