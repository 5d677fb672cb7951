use matcomp::completion::{Mode, Ring};
use matcomp::field::Field;
use matcomp::oracle::{run_campaign, CampaignConfig};

#[test]
fn gf3_one_by_two_campaign_has_no_disagreements() {
    let mut cfg = CampaignConfig::new(Field::Prime(3), 1, 2, 1);
    cfg.modes = Mode::ALL.to_vec();
    cfg.rings = vec![Ring::Polynomial, Ring::Rational];
    cfg.projection = true;
    let report = run_campaign(&cfg).unwrap();
    assert_eq!(report.sources.len(), 81);
    assert_eq!(report.disagreement_count(), 0, "{}", report.to_text());
    assert_eq!(report.sequence_violations(), 0, "{}", report.to_text());
}

#[test]
fn campaigns_are_deterministic() {
    let mut cfg = CampaignConfig::new(Field::Prime(2), 1, 2, 1);
    cfg.modes = vec![Mode::Complete, Mode::InfOnly];
    cfg.sample = Some((6, 11));
    let a = run_campaign(&cfg).unwrap();
    let b = run_campaign(&cfg).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.sources.len(), 6);
    assert_eq!(a.to_text(), b.to_text());
}
