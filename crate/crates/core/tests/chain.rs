use ordcal::chain::{
    chain_rule_defect, chain_rule_in_ideal, multiplier_family, multiplier_supports_disjoint, relations, TaggedAlphabet,
};
use ordcal::free::{truncated_ideal, FreeSeries, Var};

#[test]
fn defect_lies_in_the_relation_ideal() {
    for n in 0..=2 {
        for cap in 2..=4 {
            let report = chain_rule_in_ideal(&TaggedAlphabet::range(n), cap).unwrap();
            assert!(report.member, "|I| = {n}, cap = {cap}");
        }
    }
}

#[test]
fn perturbed_defect_is_rejected() {
    let alphabet = TaggedAlphabet::range(2);
    let cap = 3;
    let basis = truncated_ideal(&relations(&alphabet, cap), &alphabet.letters(), cap).unwrap();
    let defect = chain_rule_defect(&alphabet, cap);
    assert!(basis.contains(&defect));
    let off = &defect + &FreeSeries::var(Var::Sigma, cap);
    assert!(!basis.contains(&off));
    let off = &defect + &FreeSeries::var(Var::Plain(0), cap);
    assert!(!basis.contains(&off));
}

#[test]
fn single_factor_defect_is_its_relation() {
    let alphabet = TaggedAlphabet::range(1);
    let defect = chain_rule_defect(&alphabet, 3);
    assert_eq!(defect, -relations(&alphabet, 3).remove(0));
}

#[test]
fn multiplier_members_are_units() {
    for n in 0..=3 {
        let family = multiplier_family(&TaggedAlphabet::range(n), 3);
        assert_eq!(family.len(), n);
        assert!(family.members().iter().all(|m| m.constant_term() == ordcal::rational::int(1)));
        assert!(multiplier_supports_disjoint(&family));
    }
}
