//! Runs a differential campaign from the command line:
//! `campaign <p> <rows> <cols> <deg> [modes...]`.

use matcomp::completion::{Mode, Ring};
use matcomp::field::Field;
use matcomp::oracle::{run_campaign, CampaignConfig};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let num = |i: usize, d: usize| args.get(i).and_then(|s| s.parse().ok()).unwrap_or(d);
    let field = Field::Prime(num(0, 2) as u32);
    let mut cfg = CampaignConfig::new(field, num(1, 1), num(2, 2), num(3, 1));
    let modes: Vec<Mode> = args.iter().skip(4).filter_map(|m| m.parse().ok()).collect();
    if !modes.is_empty() {
        cfg.modes = modes;
        cfg.projection = true;
    }
    cfg.rings = vec![Ring::Polynomial, Ring::Rational];
    let start = std::time::Instant::now();
    let report = run_campaign(&cfg).expect("campaign runs");
    print!("{}", report.to_text());
    println!("elapsed {:.1?}", start.elapsed());
}
