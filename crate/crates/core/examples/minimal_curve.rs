//! A minimal curve assembled from a double structure and a residual curve.

use quadric_curves::curves::{classify_curve, type_i_minimal_curve};
use quadric_curves::poly::{q, MonomialOrder};

fn main() {
    let c = type_i_minimal_curve(&q("y"), &q("z + t^2"), &q("z"), &q("t^3")).unwrap();
    for (name, i) in [("curve", &c.ideal), ("double structure", &c.double_structure), ("residual", &c.residual)] {
        let gb: Vec<String> = i.groebner_basis(MonomialOrder::Grevlex).iter().map(|g| g.to_string()).collect();
        println!("{name}: {}", gb.join(", "));
    }
    println!("intersection identity holds: {}", c.identity_holds);

    let double = type_i_minimal_curve(&q("y"), &q("1"), &q("z"), &q("t")).unwrap();
    println!("{:?}", classify_curve(&double.ideal).unwrap());

    if let Err(e) = type_i_minimal_curve(&q("y"), &q("t^2"), &q("z"), &q("t^3")) {
        println!("rejected: {e}");
    }
}
