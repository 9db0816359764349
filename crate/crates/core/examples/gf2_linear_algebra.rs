//! Rank, kernel and solving over GF(2).

use qcode::gf2::Echelon;
use qcode::{BitMatrix, BitVector};

fn main() -> qcode::Result<()> {
    // Parity checks of the [7,4,3] Hamming code.
    let h = BitMatrix::from_dense(&[[1u8, 0, 1, 0, 1, 0, 1], [0, 1, 1, 0, 0, 1, 1], [0, 0, 0, 1, 1, 1, 1]]);
    println!("H =\n{}", h.to_dense_string());
    println!("rank {}", h.rank());

    let kernel = h.kernel_basis();
    println!("kernel has {} generators:", kernel.len());
    for v in &kernel {
        println!("  {v}  syndrome {}", h.mul_vec(v)?);
    }

    let ech = Echelon::new(&h);
    println!("pivots {:?}, free columns {:?}", ech.pivots(), ech.free_columns());

    // Which rows of H add up to a given word?
    for word in ["1011010", "1000000"] {
        let target: BitVector = word.parse()?;
        match h.solve_left(&target)? {
            Some(x) => println!("{target} = x·H with x = {x}"),
            None => println!("{target} is not in the row space"),
        }
    }
    Ok(())
}
