use fraudscreen::benford::Digit;
use fraudscreen::synth::{calibrate, CalibrationConfig, ManipulationScheme};

#[test]
fn power_grows_with_digit_one_inflation() {
    let rates: Vec<f64> = [0.0, 0.1, 0.2, 0.3]
        .iter()
        .map(|&boost| {
            let scheme =
                ManipulationScheme::single_digit_inflation(Digit::new(1).unwrap(), boost).unwrap();
            let cfg = CalibrationConfig::new(scheme, 200, 500, 1e-8, 0.05, 11);
            calibrate(&cfg).unwrap().rejection_rate
        })
        .collect();
    let inversions: Vec<usize> = (1..rates.len())
        .filter(|&k| rates[k] < rates[k - 1])
        .collect();
    assert!(inversions.len() <= 1, "rates {rates:?}");
    for k in inversions {
        assert!(rates[k - 1] - rates[k] <= 0.03, "rates {rates:?}");
    }
    println!("inflation rates {rates:?}");
}

#[test]
fn theoretical_comparison_is_reported_when_requested() {
    let mut cfg = CalibrationConfig::new(
        ManipulationScheme::BenfordConforming,
        50,
        300,
        1e-8,
        0.05,
        3,
    );
    cfg.compare_theoretical = true;
    let r = calibrate(&cfg).unwrap();
    let t = r.theoretical_rejection_rate.expect("theoretical rate");
    assert!((0.0..=1.0).contains(&t));
}
