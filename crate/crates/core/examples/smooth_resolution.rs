//! Minimal curves on the smooth quadric xz = yt and their resolutions.

use quadric_curves::curves::{
    build_smooth_minimal_ideal, predicted_smooth_resolution, smooth_structure_matrices, type_ii_presentation,
    SmoothMinimalSpec,
};
use quadric_curves::homology::{buchsbaum_eisenbud_check, cokernel_table, is_minimal_complex, rao_module};
use quadric_curves::poly::FieldSpec;

fn main() {
    let qq = FieldSpec::Rationals;
    let s = smooth_structure_matrices(qq, 2);
    for (name, m) in [("M_2", &s.m), ("N_2", &s.n)] {
        let rows: Vec<String> =
            m.iter().map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join("  ")).collect();
        println!("{name} = [{}]", rows.join("; "));
    }

    for d in 2..=5 {
        let spec = SmoothMinimalSpec::new(qq, d).unwrap();
        let ideal = build_smooth_minimal_ideal(&spec);
        let res = predicted_smooth_resolution(&spec).unwrap();
        let cert = buchsbaum_eisenbud_check(&res).unwrap();
        println!("== d = {d}, ranks {:?}", res.betti_table().ranks());
        print!("{}", res.betti_table());
        println!("minimal: {}, exact: {}", is_minimal_complex(&res), cert.passed());

        let rao = rao_module(&ideal, &res).unwrap();
        let coker = cokernel_table(&type_ii_presentation(qq, d - 1).unwrap()).unwrap();
        println!("Rao module {rao}; type (ii) module with s = {}: {coker}", d - 1);
    }
}
