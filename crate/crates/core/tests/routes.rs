use stringy_core::catalog::{build_graph, AdeType};
use stringy_core::closed::closed_e_function;
use stringy_core::engine::{e_str_direct, e_str_function, e_str_function_oracle};

fn sweep(types: Vec<AdeType>) {
    for ty in types {
        let g = build_graph(ty).unwrap();
        let f = e_str_function(&g).unwrap();
        assert_eq!(f, e_str_function_oracle(&g).unwrap(), "strata route differs for {ty}");
        assert_eq!(f, closed_e_function(ty).unwrap(), "closed form differs for {ty}");
        assert_eq!(f.limit_at_one().unwrap(), e_str_direct(&g).unwrap(), "limit differs for {ty}");
    }
}

#[test]
fn a_family_up_to_30() {
    sweep((1..=30).map(AdeType::A).collect());
}

#[test]
fn d_family_up_to_24() {
    sweep((4..=24).map(AdeType::D).collect());
}

#[test]
fn e_family() {
    sweep(vec![AdeType::E6, AdeType::E7, AdeType::E8]);
}
