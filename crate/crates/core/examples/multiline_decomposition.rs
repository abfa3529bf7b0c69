//! Unions of lines from one ruling of xz = yt, built three ways.

use quadric_curves::curves::{decompose, multiline_matrix, MultilineSpec};
use quadric_curves::ideal::Ideal;
use quadric_curves::poly::MonomialOrder;

fn gb(i: &Ideal) -> String {
    i.groebner_basis(MonomialOrder::Grevlex).iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", ")
}

fn main() {
    let sets: [&[((i64, i64), u32)]; 3] =
        [&[((0, 1), 2)], &[((0, 1), 1), ((1, 0), 1)], &[((0, 1), 2), ((1, 0), 1), ((1, 1), 1)]];
    for lines in sets {
        let spec = MultilineSpec::from_ints(lines).unwrap();
        println!("== {spec} (degree {})", spec.degree());
        let m = multiline_matrix(&spec);
        println!("matrix is {} x {}", m.len(), m[0].len());
        let d = decompose(&spec);
        println!("sum/product:   {}", gb(&d.sum_product));
        println!("determinantal: {}", gb(&d.determinantal));
        println!("intersection:  {}", gb(&d.intersection));
        println!("all equal: {}", d.all_equal());
    }
}
