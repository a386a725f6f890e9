use proptest::prelude::*;
use twopath_core::oracles::{count_fringes, FringeCountOutcome};
use twopath_core::unified::{E_FOLD_ARGUMENT, FRINGE_CONSTANT};
use twopath_core::{Coherence, UnifiedModel};

fn coherence() -> impl Strategy<Value = Coherence> {
    prop_oneof![Just(Coherence::Pure), (0.01f64..0.99).prop_map(Coherence::Mixed)]
}

proptest! {
    #[test]
    fn visibility_even_phase_odd(a in -50.0f64..50.0, b in 0.1f64..100.0, coh in coherence(), y in -3.0f64..3.0) {
        let m = UnifiedModel::new(a, b, coh).unwrap();
        prop_assert_eq!(m.visibility(y), m.visibility(-y));
        prop_assert_eq!(m.predictability(y), m.predictability(-y));
        prop_assert_eq!(m.phase(y), -m.phase(-y));
    }

    #[test]
    fn visibility_decreases_away_from_centre(a in 0.1f64..50.0, y in 0.0f64..2.0, dy in 1e-6f64..1.0) {
        let m = UnifiedModel::pure(a, 1.0).unwrap();
        prop_assert!(m.visibility(y + dy) <= m.visibility(y));
        prop_assert!(m.predictability(y + dy) >= m.predictability(y));
    }

    #[test]
    fn pure_states_saturate_duality(a in 0.0f64..100.0, y in -1.0f64..1.0) {
        let p = UnifiedModel::pure(a, 1.0).unwrap().point(y);
        prop_assert!(p.direct_residual().abs() < 1e-12);
    }

    #[test]
    fn mixed_states_stay_inside(a in 0.0f64..100.0, k in 0.01f64..0.99, y in -1.0f64..1.0) {
        let m = UnifiedModel::with_k(a, 1.0, k).unwrap();
        let p = m.point(y);
        prop_assert!(p.duality_residual <= 0.0);
        prop_assert!((p.direct_residual() - p.duality_residual).abs() < 1e-12);
        prop_assert!((0.0..=1.0).contains(&p.visibility) && (0.0..=1.0).contains(&p.predictability));
    }

    #[test]
    fn visibility_is_k_over_e_at_fold(a in 0.01f64..1e4, k in 0.05f64..=1.0) {
        let m = UnifiedModel::with_k(a, 3.0, k).unwrap();
        let y = m.e_fold_y().unwrap();
        prop_assert!((m.visibility(y) - k / std::f64::consts::E).abs() < 1e-12);
        let nu = m.fringe_index().nu.value().unwrap();
        prop_assert!((nu - FRINGE_CONSTANT * 3.0 / a).abs() <= 1e-12 * nu);
    }

    #[test]
    fn fringe_index_scales_inversely(r in 0.01f64..10.0) {
        let a = UnifiedModel::pure(r, 1.0).unwrap().fringe_index();
        let b = UnifiedModel::pure(2.0 * r, 2.0).unwrap().fringe_index();
        prop_assert!((a.r - b.r).abs() < 1e-12);
    }
}

#[test]
fn counted_maxima_track_fringe_index() {
    for r in [0.02, 0.05, 0.1, 0.2, 0.3, 0.5, 1.0, 2.0] {
        let m = UnifiedModel::pure(r * 7.0, 7.0).unwrap();
        match count_fringes(&m) {
            FringeCountOutcome::Counted(c) => {
                assert!(c.agrees_with_index(), "R={r}: {} vs {}", c.count(), c.nu);
                assert!(c.maxima.iter().all(|&y| y > 0.0 && y <= E_FOLD_ARGUMENT / m.a()));
            }
            FringeCountOutcome::Unbounded => panic!("finite A"),
        }
    }
    let flat = UnifiedModel::pure(0.0, 1.0).unwrap();
    assert!(matches!(count_fringes(&flat), FringeCountOutcome::Unbounded));
}
