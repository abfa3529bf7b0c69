//! Quadrics killing the type (ii) modules: for s >= 3 only the smooth
//! quadric survives.

use quadric_curves::curves::{quadric_rank, type_ii_presentation};
use quadric_curves::homology::{annihilator_space, cokernel_table};
use quadric_curves::poly::FieldSpec;

fn main() {
    for s in 1..=4 {
        let p = type_ii_presentation(FieldSpec::Rationals, s).unwrap();
        let m = cokernel_table(&p).unwrap();
        let ann = annihilator_space(&m, 2).unwrap();
        print!("s = {s}: module {m}, {} annihilating quadrics", ann.len());
        if let [only] = ann.as_slice() {
            print!(" ({only}, rank {})", quadric_rank(only).unwrap());
        }
        println!();
    }
}
