use hopf_core::exactalg::{rat, Rational};
use hopf_core::report::Verdict;
use hopf_core::seqtests::{
    e_test, ek_limit_test, ek_test, growth_test, l_test, ord_exp_test, ord_type_test, quotient_nonneg_test, run_test,
    supermult_test, support_test, DimSequence, RunOptions, SeriesKind,
};
use hopf_core::structures::parse_species;
use hopf_core::Error;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

const BELL: [u64; 9] = [1, 1, 2, 5, 15, 52, 203, 877, 4140];
const PI_PRIME: [u64; 9] = [1, 1, 1, 4, 5, 16, 82, 169, 541];

fn seq(name: &str, a: &[u64]) -> DimSequence {
    DimSequence::new(name, a.iter().copied())
}

fn typed(name: &str, a: &[u64], abar: &[u64]) -> DimSequence {
    DimSequence::with_types(
        name,
        a.iter().map(|&x| BigInt::from(x)).collect(),
        Some(abar.iter().map(|&x| BigInt::from(x)).collect()),
    )
    .unwrap()
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn r(n: &BigInt) -> Rational {
    Rational::from_integer(n.clone())
}

/// Long division of power series, coefficient by coefficient.
fn oracle_div(num: &[Rational], den: &[Rational]) -> Vec<Rational> {
    let mut q: Vec<Rational> = Vec::new();
    for n in 0..num.len() {
        let mut c = num[n].clone();
        for i in 1..=n.min(den.len() - 1) {
            c -= &den[i] * &q[n - i];
        }
        q.push(c / &den[0]);
    }
    q
}

fn oracle_ogf(a: &[BigInt]) -> Vec<Rational> {
    a.iter().map(r).collect()
}

fn oracle_egf(a: &[BigInt]) -> Vec<Rational> {
    let mut f = BigInt::one();
    a.iter()
        .enumerate()
        .map(|(n, x)| {
            if n > 0 {
                f *= n;
            }
            Rational::new(x.clone(), f.clone())
        })
        .collect()
}

fn first_negative(q: &[Rational]) -> Option<usize> {
    q.iter().position(Signed::is_negative)
}

#[test]
fn quotient_examples() {
    let bell = seq("Bell", &BELL);
    let pi_prime = seq("PiPrime", &PI_PRIME);
    let report = quotient_nonneg_test(&bell, &pi_prime, SeriesKind::Egf).unwrap();
    assert_eq!(report.verdict, Verdict::Fail);
    assert_eq!(report.first_violation, Some(3));
    assert_eq!(report.witness[0].value, rat(-1, 3));

    let pi_type = seq("Pi types", &[1, 1, 2, 3, 5, 7, 11]);
    let pi_prime_type = seq("PiPrime types", &[1, 1, 1, 2, 2, 3, 4]);
    let report = quotient_nonneg_test(&pi_type, &pi_prime_type, SeriesKind::Tgf).unwrap();
    assert!(report.passed());
    let q = report.series.unwrap();
    let expected: Vec<Rational> = [1, 0, 1, 0, 2, 0, 3].iter().map(|&c| rat(c, 1)).collect();
    assert_eq!(q.coeffs(), expected.as_slice());

    for kind in [SeriesKind::Ogf, SeriesKind::Egf, SeriesKind::Tgf] {
        assert!(quotient_nonneg_test(&pi_prime, &pi_prime, kind).unwrap().passed());
    }
}

#[test]
fn quotient_rejects_zero_constant_term() {
    let el = seq("el", &[0, 1, 2, 3]);
    let err = quotient_nonneg_test(&el, &el, SeriesKind::Egf).unwrap_err();
    assert!(matches!(err, Error::ZeroConstantTerm));
}

#[test]
fn pi_prime_data_matches_the_species() {
    let sp = parse_species("PiPrime").unwrap();
    let computed = DimSequence::from_species(sp.as_ref(), 8, true);
    assert_eq!(computed.a, seq("", &PI_PRIME).a);
    let distinct_parts: Vec<BigInt> = [1u64, 1, 1, 2, 2, 3, 4, 5, 6].iter().map(|&x| BigInt::from(x)).collect();
    assert_eq!(computed.abar.unwrap(), distinct_parts);
}

#[test]
fn ord_exp_examples() {
    let bell = seq("Bell", &BELL);
    let oracle = oracle_div(&oracle_ogf(&bell.a), &oracle_egf(&bell.a));
    assert_eq!(first_negative(&oracle), None);
    let report = ord_exp_test(&bell, None).unwrap();
    assert!(report.passed());
    assert!(report.inequalities.iter().all(|c| c.holds));

    let ones = seq("ones", &[1; 9]);
    let oracle = oracle_div(&oracle_ogf(&ones.a), &oracle_egf(&ones.a));
    assert_eq!(first_negative(&oracle), None);
    let report = ord_exp_test(&ones, None).unwrap();
    assert!(report.passed());
    assert_eq!(report.inequalities[0].lhs, rat(5, 1));
    assert_eq!(report.inequalities[0].rhs, rat(3, 1));

    let report = ord_exp_test(&seq("bad", &[1, 2, 2, 2]), None).unwrap();
    assert_eq!(report.verdict, Verdict::Fail);
    assert_eq!(report.first_violation, Some(3));
    assert!(!report.inequalities[0].holds);
    assert_eq!((report.inequalities[0].lhs.clone(), report.inequalities[0].rhs.clone()), (rat(10, 1), rat(12, 1)));
}

#[test]
fn ord_exp_respects_order() {
    let report = ord_exp_test(&seq("bad", &[1, 2, 2, 2]), Some(2)).unwrap();
    assert!(report.passed());
    assert!(matches!(ord_exp_test(&seq("el", &[0, 1, 2]), None), Err(Error::PreconditionFailed(_))));
}

#[test]
fn ord_type_examples() {
    let pi = typed("Pi", &BELL, &[1, 1, 2, 3, 5, 7, 11, 15, 22]);
    let oracle = oracle_div(&oracle_ogf(&pi.a), &oracle_ogf(pi.abar.as_ref().unwrap()));
    assert_eq!(first_negative(&oracle), None);
    let report = ord_type_test(&pi, None).unwrap();
    assert!(report.passed());
    assert!(report.warnings.is_empty());

    let l_dims: Vec<u64> = (0..8).map(factorial).collect();
    let l = typed("L", &l_dims, &[1; 8]);
    let report = ord_type_test(&l, None).unwrap();
    assert!(report.passed());
    let q = report.series.unwrap();
    for n in 1..8 {
        assert_eq!(q.coeff(n), rat((factorial(n) - factorial(n - 1)) as i64, 1));
    }

    let report = ord_type_test(&typed("crafted", &[1, 1, 1], &[1, 2, 1]), None).unwrap();
    assert_eq!(report.verdict, Verdict::Fail);
    assert_eq!(report.first_violation, Some(1));
    assert_eq!(report.witness[0].value, rat(-1, 1));
    assert_eq!(report.series.unwrap().coeff(2), rat(2, 1));
}

#[test]
fn ord_type_needs_types_and_warns_on_fractions() {
    assert!(matches!(ord_type_test(&seq("Bell", &BELL), None), Err(Error::PreconditionFailed(_))));
    let report = ord_type_test(&typed("halves", &[2, 1], &[2, 1]), None).unwrap();
    assert!(report.passed());
    let report = ord_type_test(&typed("thirds", &[3, 2], &[3, 1]), None).unwrap();
    assert!(report.passed());
    assert_eq!(report.warnings.len(), 1);
}

#[test]
fn e_test_examples() {
    let report = e_test(&seq("PiPrime", &PI_PRIME)).unwrap();
    assert_eq!(report.verdict, Verdict::Fail);
    assert_eq!(report.first_violation, Some(4));
    assert_eq!(report.witness[0].value, rat(-8, 1));

    let bell = seq("Bell", &BELL);
    let oracle: Vec<BigInt> = (0..bell.len())
        .map(|n| {
            (0..=n).fold(BigInt::zero(), |acc, i| {
                let c = hopf_core::exactalg::rational::binomial(n, i) * &bell.a[n - i];
                if i % 2 == 0 {
                    acc + c
                } else {
                    acc - c
                }
            })
        })
        .collect();
    assert!(oracle.iter().all(|b| !b.is_negative()));
    assert!(e_test(&bell).unwrap().passed());

    let report = e_test(&seq("ones", &[1; 8])).unwrap();
    assert!(report.passed());
    assert!(report.notes.iter().any(|n| n.ends_with("1, 0, 0, 0, 0, 0, 0, 0")));
}

#[test]
fn e_test_reports_type_descents() {
    let report = e_test(&typed("descent", &[1, 2, 4, 8], &[1, 2, 1, 3])).unwrap();
    assert_eq!(report.first_violation, Some(2));
    assert_eq!(report.witness[0].value, rat(-1, 1));
}

#[test]
fn l_test_examples() {
    let pal = seq("Pal", &[1, 1, 3, 7, 43, 171]);
    let report = l_test(&pal);
    assert_eq!(report.first_violation, Some(3));
    assert_eq!(report.witness[0].value, rat(-2, 1));
    let diffs: Vec<i64> = (1..6).map(|n| [1, 1, 3, 7, 43, 171][n] - n as i64 * [1, 1, 3, 7, 43, 171][n - 1]).collect();
    assert_eq!(diffs, vec![0, 1, -2, 15, -44]);

    let l_dims: Vec<u64> = (0..9).map(factorial).collect();
    assert!(l_test(&seq("L", &l_dims)).passed());
    assert!(l_test(&seq("Sigma", &[1, 1, 3, 13, 75, 541])).passed());
}

#[test]
fn ek_examples() {
    let el = seq("el", &[0, 1, 2, 3, 4, 5]);
    let report = ek_limit_test(&el).unwrap();
    assert_eq!(report.verdict, Verdict::Fail);
    assert_eq!(report.first_violation, Some(3));
    let second = &report.inequalities[1];
    assert_eq!((second.lhs.clone(), second.rhs.clone(), second.holds), (rat(3, 1), rat(4, 1), false));

    let bell = seq("Bell", &BELL);
    assert!(ek_limit_test(&bell).unwrap().passed());
    for k in 0..6 {
        let report = ek_test(&bell, k, None).unwrap();
        assert!(report.passed(), "k = {k}");
        assert!(report.inequalities.iter().all(|c| c.holds));
    }

    for a1 in 1..5u64 {
        let geometric: Vec<u64> = (0..7).map(|n| a1.pow(n)).collect();
        let g = seq("geometric", &geometric);
        let report = ek_limit_test(&g).unwrap();
        assert!(report.passed());
        assert!(report.inequalities.iter().all(|c| c.lhs == c.rhs));
        assert!(ek_test(&g, 3, None).unwrap().passed());
    }
}

#[test]
fn supermult_examples() {
    let report = supermult_test(&seq("Bell", &BELL));
    assert!(report.passed());
    let report = supermult_test(&seq("bad", &[1, 2, 3]));
    assert_eq!(report.first_violation, Some(2));
    assert_eq!(report.witness[0].value, rat(-1, 1));
    let l_dims: Vec<u64> = (0..10).map(factorial).collect();
    assert!(supermult_test(&seq("L", &l_dims)).passed());
}

#[test]
fn growth_examples() {
    assert!(growth_test(&seq("Bell", &BELL), 2).unwrap().passed());
    assert!(matches!(growth_test(&seq("ones", &[1; 6]), 2), Err(Error::PreconditionFailed(_))));
    assert!(matches!(growth_test(&seq("gap", &[1, 0, 2, 2]), 2), Err(Error::PreconditionFailed(_))));
    let report = growth_test(&seq("slow", &[1, 2, 2, 2, 2, 2]), 1).unwrap();
    assert_eq!(report.first_violation, Some(2));
    let report = growth_test(&seq("descent", &[1, 2, 4, 3]), 1).unwrap();
    assert_eq!(report.first_violation, Some(3));
}

#[test]
fn support_examples() {
    let even = seq("PiS:2", &[1, 0, 1, 0, 4, 0, 31, 0, 379]);
    let report = support_test(&even);
    assert!(report.passed());
    assert!(report.notes.iter().any(|n| n.contains("gcd 2")));
    assert!(report.notes.iter().any(|n| n.contains("infinite")));

    let report = support_test(&seq("gappy", &[1, 0, 1, 1, 0, 0]));
    assert_eq!(report.verdict, Verdict::Fail);
    assert_eq!(report.first_violation, Some(4));
    let report = support_test(&seq("gappy", &[1, 0, 1, 1, 0, 0]).clone()).finish(true);
    assert_eq!(report.all_violations, vec![4, 5]);

    let report = support_test(&seq("trivial", &[1, 0, 0, 0]));
    assert!(report.passed());
    assert!(report.notes.iter().any(|n| n.contains("is {0}")));
}

#[test]
fn sequences_round_trip_through_json() {
    let s: DimSequence =
        serde_json::from_str(r#"{"name":"Pi","a":[1,1,2,5,"123456789012345678901234567890"],"abar":[1,1,2,3,5]}"#)
            .unwrap();
    assert_eq!(s.a[4], "123456789012345678901234567890".parse::<BigInt>().unwrap());
    let back: DimSequence = serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
    assert_eq!(back, s);
    assert!(serde_json::from_str::<DimSequence>(r#"{"a":[1,2],"abar":[1]}"#).is_err());
    assert!(serde_json::from_str::<DimSequence>(r#"{"a":[1,"-2"]}"#).is_err());
    let report = run_test("etest", &s, RunOptions::default()).unwrap();
    let json = serde_json::to_value(&report).unwrap();
    assert_eq!(json["verdict"], "pass");
    assert!(matches!(run_test("nope", &s, RunOptions::default()), Err(Error::UnknownIdentifier(_))));
}

fn shipped(id: &str, nmax: usize) -> DimSequence {
    DimSequence::from_species(parse_species(id).unwrap().as_ref(), nmax, true)
}

#[test]
fn shipped_monoids_pass_applicable_tests() {
    let ids = ["E", "L", "Pi", "PiS:2", "Sigma", "Pal", "Ek:2", "Ek:3", "Hadamard(L,Pi)"];
    for id in ids {
        let s = shipped(id, 6);
        for name in ["ordexp", "ordtype", "etest", "eklimit", "supermult", "support"] {
            if id == "PiS:2" && name == "etest" {
                continue;
            }
            let report = run_test(name, &s, RunOptions::default()).unwrap();
            assert!(report.passed(), "{id} {name}: {:?}", report.witness);
        }
        for k in 0..5 {
            assert!(ek_test(&s, k, None).unwrap().passed(), "{id} k={k}");
        }
    }
    for id in ["L", "Sigma", "Hadamard(L,Pi)"] {
        assert!(l_test(&shipped(id, 6)).passed(), "{id}");
    }
    for (id, k) in [("Pi", 2), ("Sigma", 2), ("Pal", 2), ("Ek:2", 1), ("L", 2)] {
        assert!(growth_test(&shipped(id, 6), k).unwrap().passed(), "{id}");
    }
}

#[test]
fn even_partitions_fail_the_e_test() {
    let report = e_test(&shipped("PiS:2", 6)).unwrap();
    assert_eq!(report.first_violation, Some(1));
    assert_eq!(report.witness[0].value, rat(-1, 1));
}

#[test]
fn chained_remark_holds_on_shipped_sequences() {
    for id in ["E", "L", "Pi", "Sigma", "Pal", "Ek:2", "Ek:3"] {
        let s = shipped(id, 5);
        if supermult_test(&s).passed() && ek_limit_test(&s).unwrap().passed() {
            assert!(s.a[3] >= &s.a[2] * &s.a[1], "{id}");
        }
    }
}

fn arb_sequence() -> impl Strategy<Value = DimSequence> {
    prop::collection::vec(0u64..60, 2..7).prop_map(|tail| {
        let mut a = vec![1u64];
        a.extend(tail);
        seq("random", &a)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ord_exp_agrees_with_oracle_division(s in arb_sequence()) {
        let oracle = oracle_div(&oracle_ogf(&s.a), &oracle_egf(&s.a));
        let report = ord_exp_test(&s, None).unwrap();
        prop_assert_eq!(report.first_violation, first_negative(&oracle));
        let series = report.series.unwrap();
        prop_assert_eq!(series.coeffs(), oracle.as_slice());
    }

    #[test]
    fn ord_exp_closed_forms_match_series(s in arb_sequence()) {
        let q = ord_exp_test(&s, None).unwrap();
        let series = q.series.clone().unwrap();
        for check in &q.inequalities {
            let scaled = if check.inequality.starts_with('5') {
                series.coeff(3) * rat(6, 1)
            } else {
                series.coeff(4) * rat(24, 1)
            };
            prop_assert_eq!(&check.lhs - &check.rhs, scaled);
        }
    }

    #[test]
    fn ek_closed_forms_match_series(s in arb_sequence(), k in 0u64..6) {
        let report = ek_test(&s, k, None).unwrap();
        let series = report.series.clone().unwrap();
        let factors = [2, 6];
        for (i, check) in report.inequalities.iter().enumerate() {
            prop_assert_eq!(&check.lhs - &check.rhs, series.coeff(i + 2) * rat(factors[i], 1));
        }
    }

    #[test]
    fn quotient_of_a_sequence_by_itself_is_one(s in arb_sequence()) {
        for kind in [SeriesKind::Ogf, SeriesKind::Egf, SeriesKind::Tgf] {
            let report = quotient_nonneg_test(&s, &s, kind).unwrap();
            prop_assert!(report.passed());
            let series = report.series.unwrap();
            let is_one = series.coeffs().iter().enumerate().all(|(n, c)| if n == 0 { c.is_one() } else { c.is_zero() });
            prop_assert!(is_one);
        }
    }

    #[test]
    fn e_test_matches_binomial_sum(s in arb_sequence()) {
        let report = e_test(&s).unwrap();
        let first = (0..s.len()).find(|&n| {
            let b = (0..=n).fold(BigInt::zero(), |acc, i| {
                let c = hopf_core::exactalg::rational::binomial(n, i) * &s.a[n - i];
                if i % 2 == 0 { acc + c } else { acc - c }
            });
            b.is_negative()
        });
        prop_assert_eq!(report.first_violation, first);
    }
}
