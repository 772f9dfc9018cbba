use sp6_orbits::error::Error;
use sp6_orbits::orbits::{census, CensusScope};

#[test]
fn sampled_census_over_f5_is_job_independent() {
    let scope = CensusScope::Sample { n: 20_000, seed: 7 };
    let a = census(5, scope, 1, 3).unwrap();
    let b = census(5, scope, 4, 3).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.visited, 20_000);
    assert!(a.checks_pass(), "{:#}", a.to_json());
    assert_eq!(a.to_json()["checks_pass"], true);
}

#[test]
fn full_scope_restricted_to_three() {
    assert_eq!(census(5, CensusScope::Full, 2, 0).unwrap_err(), Error::ScopeTooLarge);
}
