//! Statistical behavior of the Monte Carlo pipeline against the exact
//! expectation engine.

use hyperslice::{
    estimate_expected_vertices, expected_vertices_exact, face_hit_frequencies, face_intersects,
    probability_table, sample_orientation, Body, Flat, FlatOrientation, OrientationMode,
    SeededRng, SimulationConfig, Vector, VectorList,
};

fn unit(coords: &[f64]) -> Vector {
    let v = Vector::new(coords.to_vec()).unwrap();
    v.scaled(1.0 / v.norm())
}

fn diagonal_orientation() -> FlatOrientation {
    FlatOrientation::new(
        VectorList::from_vectors(vec![unit(&[1.0, -1.0, 0.0]), unit(&[1.0, 1.0, -2.0])]).unwrap(),
    )
    .unwrap()
}

#[test]
fn fixed_orientation_means_track_the_exact_value() {
    // Over 20 disjoint seeds, the 3-sigma interval must cover the exact
    // expectation in at least 19 runs.
    let body = Body::cube(3).unwrap();
    let mut rng = SeededRng::from_seed(600);
    let orientation = sample_orientation(&mut rng, 3, 2).unwrap();
    let exact = expected_vertices_exact(&body, &orientation).unwrap();

    let mut covered = 0;
    for seed in 0..20u64 {
        let config = SimulationConfig::new(
            3,
            2,
            4_000,
            1_000 + seed,
            OrientationMode::Fixed {
                orientation: orientation.clone(),
            },
            body.clone(),
        )
        .unwrap();
        let report = estimate_expected_vertices(&config).unwrap();
        if (report.mean - exact).abs() <= 3.0 * report.std_error {
            covered += 1;
        }
    }
    assert!(covered >= 19, "only {covered}/20 runs covered the exact value");
}

#[test]
fn per_sample_vertex_count_equals_face_hits() {
    let body = Body::cube(4).unwrap();
    let mut rng = SeededRng::from_seed(4096);
    let orientation = sample_orientation(&mut rng, 4, 2).unwrap();
    let faces = hyperslice::enumerate_faces(4, 2).unwrap();
    for _ in 0..200 {
        let translation =
            hyperslice::sample_translation(&mut rng, &body, &orientation).unwrap();
        let flat = Flat::new(orientation.clone(), translation).unwrap();
        let count = hyperslice::vertex_count(&body, &flat).unwrap();
        let hits = faces
            .iter()
            .filter(|f| face_intersects(&body, &flat, f).unwrap())
            .count();
        assert_eq!(count, hits);
    }
}

#[test]
fn nonzero_counts_stay_in_the_documented_band() {
    for n in [3usize, 4, 5] {
        let body = Body::cube(n).unwrap();
        let config = SimulationConfig::new(
            n,
            2,
            20_000,
            7_000 + n as u64,
            OrientationMode::Isotropic,
            body,
        )
        .unwrap();
        let report = estimate_expected_vertices(&config).unwrap();
        for (&count, &freq) in &report.histogram {
            if count == 0 || freq == 0 {
                continue;
            }
            let in_band = (3..=2 * n).contains(&count);
            if !in_band {
                let flagged = report.flagged_histogram.get(&count).copied().unwrap_or(0);
                assert_eq!(
                    flagged, freq,
                    "n={n}: out-of-band count {count} has {freq} samples, {flagged} flagged"
                );
            }
        }
    }
}

#[test]
fn empirical_face_frequencies_match_the_exact_table() {
    let body = Body::cube(3).unwrap();
    let orientation = diagonal_orientation();
    let exact = probability_table(&body, &orientation).unwrap();
    let config = SimulationConfig::new(
        3,
        2,
        100_000,
        51,
        OrientationMode::Fixed {
            orientation: orientation.clone(),
        },
        body,
    )
    .unwrap();
    let report = face_hit_frequencies(&config).unwrap();
    assert_eq!(report.entries.len(), exact.entries.len());
    for (empirical, exact_entry) in report.entries.iter().zip(&exact.entries) {
        assert_eq!(empirical.free_indices, exact_entry.free_indices);
        assert!(
            (empirical.frequency - exact_entry.probability).abs() < 0.005,
            "subset {:?}: empirical {} vs exact {}",
            empirical.free_indices,
            empirical.frequency,
            exact_entry.probability
        );
    }
    // Counting identity: total face hits equal total vertices, exactly.
    assert_eq!(report.total_face_hits, report.total_vertex_count);
}

#[test]
fn isotropic_runs_cover_the_theorem_value() {
    let body = Body::cube(4).unwrap();
    let config =
        SimulationConfig::new(4, 2, 30_000, 42, OrientationMode::Isotropic, body).unwrap();
    let report = estimate_expected_vertices(&config).unwrap();
    assert!(
        (report.mean - 4.0).abs() <= 3.0 * report.std_error,
        "mean={} se={}",
        report.mean,
        report.std_error
    );
    assert!(report.rejection_acceptance_rate > 0.1);
    assert_eq!(report.orientation_redraws, 0);
    let total: u64 = report.histogram.values().sum();
    assert_eq!(total, report.samples_used);
}

#[test]
fn axis_mode_always_yields_squares() {
    let body = Body::cube(3).unwrap();
    let config =
        SimulationConfig::new(3, 2, 1_000, 1, OrientationMode::AxisAligned, body).unwrap();
    let report = estimate_expected_vertices(&config).unwrap();
    assert_eq!(report.histogram.len(), 1);
    assert_eq!(report.histogram[&4], 1_000);
    assert_eq!(report.mean, 4.0);
    assert_eq!(report.std_error, 0.0);
}
