//! Curves on the reducible quadric xy = 0: generators, the explicit
//! resolution and its certificate, and the Rao module.

use quadric_curves::curves::{
    build_reducible_ideal, expected_rao_dims, predicted_reducible_resolution, ReducibleCurveSpec,
};
use quadric_curves::homology::{buchsbaum_eisenbud_check, duality_check, rao_module, verify_complex};
use quadric_curves::poly::q;

fn main() {
    let specs = [
        ("double line", ["1", "1", "z", "t", "0"]),
        ("degree 6", ["xz + z^2", "yt + t^2", "z^2", "t^2", "z"]),
        ("degree 9", ["z^3", "t^4", "z^2", "t^3", "z^2"]),
    ];
    for (name, [a, b, f, g, h]) in specs {
        let spec = ReducibleCurveSpec::new(q(a), q(b), q(f), q(g), q(h)).unwrap();
        let ideal = build_reducible_ideal(&spec);
        let gens: Vec<String> = ideal.generators().iter().map(|g| g.to_string()).collect();
        println!("== {name}: degree {}", spec.degree());
        println!("I = ({})", gens.join(", "));

        let res = predicted_reducible_resolution(&spec).unwrap();
        print!("{}", res.betti_table());
        let cert = buchsbaum_eisenbud_check(&res).unwrap();
        println!("complex: {}, exact: {}", verify_complex(&res), cert.passed());

        let rao = rao_module(&ideal, &res).unwrap();
        println!("Rao module {rao}, expected {:?}", expected_rao_dims(&spec));
        println!("self-dual about {}: {}", spec.degree() - 2, duality_check(&rao, spec.degree() as i32 - 2));
    }

    match ReducibleCurveSpec::new(q("0"), q("t"), q("z"), q("t"), q("0")) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
}
