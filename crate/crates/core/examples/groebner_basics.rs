//! Gröbner bases, ideal operations and Hilbert data for a few small ideals.

use quadric_curves::ideal::Ideal;
use quadric_curves::poly::{q, FieldSpec, MonomialOrder};

fn show(label: &str, i: &Ideal) {
    let gb: Vec<String> = i.groebner_basis(MonomialOrder::Grevlex).iter().map(|g| g.to_string()).collect();
    println!("{label}: {}", gb.join(", "));
}

fn main() {
    let qq = FieldSpec::Rationals;
    let cubic = Ideal::new(qq, ["xz - y^2", "xt - yz", "yt - z^2"].map(q).to_vec()).unwrap();

    for order in [MonomialOrder::Grevlex, MonomialOrder::Lex, MonomialOrder::Elimination(1)] {
        let gb: Vec<String> = cubic.groebner_basis(order).iter().map(|g| g.to_string()).collect();
        println!("{order:?}: {}", gb.join(", "));
    }

    let hd = cubic.hilbert_data().unwrap();
    println!("numerator {:?}, degree {}, genus {:?}", hd.numerator, hd.degree, hd.arithmetic_genus());
    println!("H(j) for j = 0..6: {:?}", (0..6).map(|j| hd.hilbert_function(j)).collect::<Vec<_>>());

    let l1 = Ideal::new(qq, vec![q("x"), q("y")]).unwrap();
    let l2 = Ideal::new(qq, vec![q("z"), q("t")]).unwrap();
    show("(x, y) ∩ (z, t)", &l1.intersection(&l2));
    show("(x, y)(z, t)", &l1.product(&l2));

    // an embedded point at the origin disappears under saturation
    let fat = cubic.intersection(&Ideal::maximal(qq).power(3));
    show("with embedded point", &fat);
    let sat = fat.saturate().unwrap();
    println!("saturation equals the cubic ideal: {}", sat.equals(&cubic));
    show("quotient by x", &fat.quotient_by(&q("x")));

    let f7 = FieldSpec::prime(7).unwrap();
    let p = Ideal::new(f7, vec![q("x^2 + y^2").map_terms_to_field(f7).unwrap()]).unwrap();
    println!("over F_7, x^2 + y^2 has krull dimension {}", p.krull_dimension());
}
