//! Cyclic codes from check polynomials: dimension from the gcd with
//! `xⁿ − 1`, and the transpose code.

use qcode::classical::{cyclic_code, cyclic_dimension, transpose_code};
use qcode::poly::{poly_gcd, UniPoly};
use qcode::prune::gcd_normalize;

fn main() -> qcode::Result<()> {
    let cases = [
        ("1 + x", 3),
        ("1 + x + x^2", 6),
        ("1 + x + x^2", 5),
        ("1 + x + x^3", 7),
        ("1 + x^2 + x^3 + x^4", 7),
    ];
    println!(
        "{:<22} {:>3}  {:<16} {:<12} transpose",
        "h", "n", "gcd(h, x^n-1)", "code"
    );
    for (h, n) in cases {
        let h: UniPoly = h.parse()?;
        let code = cyclic_code(&h, n)?;
        let g = poly_gcd(&h, &UniPoly::cyclic_modulus(n))?;
        assert_eq!(cyclic_dimension(&h, n)?, code.k());
        let t = transpose_code(&code);
        println!(
            "{:<22} {n:>3}  {:<16} {:<12} {}",
            h.to_string(),
            g.to_string(),
            code.params().to_string(),
            t.params()
        );
    }

    // Same kernel after normalization.
    let h: UniPoly = "x + x^2 + x^4".parse()?;
    let g = gcd_normalize(&h, 7)?;
    println!(
        "\n{h} defines the same length-7 code as {g}: {}",
        cyclic_code(&h, 7)?.kernel_basis().len() == cyclic_code(&g, 7)?.k()
    );
    Ok(())
}
