mod common;

use borel_core::dyck::*;
use borel_core::histogram::distribution;
use borel_core::triangles::catalan_number;
use common::{ballot, catalan_row, hist};
use proptest::prelude::*;

fn stat_row(n: usize, stat: DyckStat, to_k: impl Fn(usize) -> usize) -> Vec<u128> {
    hist(
        enumerate_dyck(n + 1).map(|p| to_k(dyck_statistic(&p, stat).unwrap())),
        n + 1,
    )
}

#[test]
fn dyck_statistics_follow_catalan_rows() {
    for n in 0..=8 {
        let row = catalan_row(n);
        assert_eq!(stat_row(n, DyckStat::UpNotGround, |v| v), row, "n={n}");
        assert_eq!(stat_row(n, DyckStat::DownNotGround, |v| v), row, "n={n}");
        for stat in [
            DyckStat::Returns,
            DyckStat::FirstPeakHeight,
            DyckStat::LastPeakHeight,
            DyckStat::LastRunLength,
        ] {
            assert_eq!(stat_row(n, stat, |v| n + 1 - v), row, "n={n} {stat:?}");
        }
    }
}

#[test]
fn ground_up_steps_equal_returns() {
    for m in 1..=9 {
        for p in enumerate_dyck(m) {
            let ground_ups = m - dyck_statistic(&p, DyckStat::UpNotGround).unwrap();
            assert_eq!(ground_ups, dyck_statistic(&p, DyckStat::Returns).unwrap());
        }
    }
}

#[test]
fn enumeration_is_lexicographic_and_complete() {
    for n in 0..=8 {
        let all: Vec<DyckPath> = enumerate_dyck(n).collect();
        assert_eq!(all.len() as u128, ballot(n, n));
        assert_eq!(catalan_number(n), (all.len() as u64).into());
        assert!(
            all.windows(2).all(|w| w[0].steps() < w[1].steps()),
            "U < D order"
        );
    }
}

#[test]
fn ballot_walk_matches_grid() {
    for n in 0..=8 {
        for k in 0..=n {
            assert_eq!(count_ballot_paths(n, k).unwrap(), ballot(n, k).into());
        }
    }
    assert!(count_ballot_paths(2, 3).is_err());
}

#[test]
fn forests_follow_catalan_rows() {
    for n in 0..=7 {
        let row = hist(
            enumerate_plane_forests(n + 1).map(|f| n + 1 - f.components()),
            n + 1,
        );
        assert_eq!(row, catalan_row(n));
    }
    assert_eq!(enumerate_plane_forests(5).count(), 42);
}

#[test]
fn parking_functions_follow_catalan_rows() {
    for n in 0..=8 {
        let all: Vec<_> = enumerate_ndpf(n + 1).collect();
        let row = catalan_row(n);
        let by = |f: &dyn Fn(&NondecParkingFunction) -> usize| hist(all.iter().map(f), n + 1);
        assert_eq!(by(&|f| ndpf_statistic(f, NdpfStat::MaxElement) - 1), row);
        assert_eq!(by(&|f| ndpf_statistic(f, NdpfStat::UnluckyCount)), row);
        assert_eq!(by(&|f| n + 1 - ndpf_statistic(f, NdpfStat::OnesCount)), row);
    }
}

#[test]
fn small_examples() {
    let d = distribution(enumerate_dyck(3), |p| {
        dyck_statistic(p, DyckStat::UpNotGround).unwrap()
    });
    assert_eq!(d.iter().collect::<Vec<_>>(), [(0, 1), (1, 2), (2, 2)]);
    let four: Vec<String> = enumerate_ndpf(4)
        .filter(|f| ndpf_statistic(f, NdpfStat::MaxElement) == 3)
        .map(|f| f.to_string())
        .collect();
    assert_eq!(four, ["1113", "1123", "1133", "1223", "1233"]);
    let ones: Vec<String> = enumerate_ndpf(4)
        .filter(|f| ndpf_statistic(f, NdpfStat::OnesCount) == 2)
        .map(|f| f.to_string())
        .collect();
    assert_eq!(ones, ["1122", "1123", "1124", "1133", "1134"]);
}

/// Any bit string steers a walk that is always a Dyck path.
fn dyck_from_bits(bits: &[bool]) -> DyckPath {
    let n = bits.len() / 2;
    let (mut ups, mut h) = (0, 0);
    let mut steps = Vec::new();
    for &b in bits.iter().take(2 * n) {
        let up = ups < n && (b || h == 0);
        if up {
            ups += 1;
            h += 1;
            steps.push(Step::U);
        } else {
            h -= 1;
            steps.push(Step::D);
        }
    }
    steps.extend(std::iter::repeat_n(Step::D, h));
    DyckPath::new(steps).unwrap()
}

proptest! {
    #[test]
    fn text_round_trip(bits in proptest::collection::vec(any::<bool>(), 0..40)) {
        let p = dyck_from_bits(&bits);
        prop_assert_eq!(p.to_string().parse::<DyckPath>().unwrap(), p.clone());
        let f = PlaneForest::from_dyck(&p);
        prop_assert_eq!(f.to_dyck(), p.clone());
        prop_assert_eq!(f.vertex_count(), p.semilength());
        let factors = p.primitive_factors();
        prop_assert!(factors.iter().all(|q| q.is_primitive()));
        let refs: Vec<&DyckPath> = factors.iter().collect();
        prop_assert_eq!(DyckPath::concat(&refs), p.clone());
        prop_assert_eq!(factors.len(), dyck_statistic(&p, DyckStat::Returns).unwrap());
    }
}
