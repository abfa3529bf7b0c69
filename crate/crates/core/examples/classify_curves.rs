//! Classification reports for a handful of curves, printed as JSON.

use quadric_curves::curves::{build_reducible_ideal, predicted_reducible_resolution};
use quadric_curves::curves::{
    classify_curve, classify_curve_with_resolution, is_acm_curve, quadric_rank, ReducibleCurveSpec,
};
use quadric_curves::ideal::Ideal;
use quadric_curves::poly::{q, FieldSpec};

fn main() {
    for form in ["x^2", "xy", "xz - y^2", "xz - yt"] {
        println!("rank of {form}: {}", quadric_rank(&q(form)).unwrap());
    }

    let qq = FieldSpec::Rationals;
    let curves = [
        ("twisted cubic", vec!["xz - y^2", "xt - yz", "yt - z^2"]),
        ("complete intersection", vec!["xy", "z^3"]),
        ("conic", vec!["x", "yz - t^2"]),
    ];
    for (name, gens) in curves {
        let i = Ideal::new(qq, gens.into_iter().map(q).collect()).unwrap();
        let report = classify_curve(&i).unwrap();
        println!("{name}: {}", serde_json::to_string(&report).unwrap());
        println!("  decided by {:?}", is_acm_curve(&i, None).unwrap().criterion);
    }

    let spec = ReducibleCurveSpec::new(q("1"), q("1"), q("z"), q("t"), q("0")).unwrap();
    let res = predicted_reducible_resolution(&spec).unwrap();
    let report = classify_curve_with_resolution(&build_reducible_ideal(&spec), &res).unwrap();
    println!("double line: {}", serde_json::to_string_pretty(&report).unwrap());
}
