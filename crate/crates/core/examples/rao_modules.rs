//! Rao modules from resolutions: automatic windows, explicit windows and
//! the Koszul complex of a complete intersection.

use quadric_curves::curves::{build_smooth_minimal_ideal, predicted_smooth_resolution, SmoothMinimalSpec};
use quadric_curves::homology::{complex_to_fixture, duality_check, koszul_complex, rao_in_window, rao_module};
use quadric_curves::ideal::Ideal;
use quadric_curves::poly::{q, FieldSpec};

fn main() {
    let qq = FieldSpec::Rationals;
    let spec = SmoothMinimalSpec::new(qq, 4).unwrap();
    let ideal = build_smooth_minimal_ideal(&spec);
    let res = predicted_smooth_resolution(&spec).unwrap();

    let rao = rao_module(&ideal, &res).unwrap();
    println!("d = 4: {rao}, total {}, symmetric about 2: {}", rao.total_dimension(), duality_check(&rao, 2));
    println!("window -5..8: {}", rao_in_window(&res, (-5, 8)).unwrap());
    match rao_in_window(&res, (1, 8)) {
        Err(e) => println!("window 1..8: {e}"),
        Ok(t) => println!("window 1..8: {t}"),
    }

    let ci = [q("xz - yt"), q("x^2 + y^2 + z^2 + t^2")];
    let k = koszul_complex(qq, &ci).unwrap();
    let i = Ideal::new(qq, ci.to_vec()).unwrap();
    println!("complete intersection: {}", rao_module(&i, &k).unwrap());
    println!("{}", complex_to_fixture(&k));
}
