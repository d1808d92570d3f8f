mod common;

use common::*;
use monideal::*;

fn gens(i: &MonomialIdeal) -> Vec<Vec<u64>> {
    i.generators().iter().map(|g| g.entries().to_vec()).collect()
}

/// Minimal elements of `{α ∈ N^d : pred(α)}` inside `[0, side]^d`, by
/// pairwise comparison.
fn brute_minimal(d: usize, side: u64, pred: impl Fn(&[u64]) -> bool + Sync) -> Vec<Vec<u64>> {
    let all = ehrhart::collect_in_box(&vec![side; d], pred);
    let mut out: Vec<Vec<u64>> = all
        .iter()
        .filter(|a| !all.iter().any(|b| b != *a && b.iter().zip(a.iter()).all(|(x, y)| x <= y)))
        .cloned()
        .collect();
    out.sort();
    out
}

#[test]
fn example_a_coefficients_match_linear_system() {
    let values: Vec<Rational> = (0..=3)
        .map(|n| int(hilbert_function(&example_a(), n).unwrap() as i64))
        .collect();
    let e = hilbert_coefficients_oracle(&values, 3);
    assert_eq!(e, vec![int(94), int(59), int(4), int(0)]);
    let report = hilbert_report(&example_a()).unwrap();
    assert_eq!(report.e_coefficients, e);
}

#[test]
fn example_b_coefficients_match_linear_system() {
    let values: Vec<Rational> = [0, 112, 704, 2176].iter().map(|&v| int(v)).collect();
    let e = hilbert_coefficients_oracle(&values, 3);
    assert_eq!(e, vec![int(400), int(320), int(32), int(0)]);
    let report = hilbert_report(&example_b()).unwrap();
    assert_eq!(report.e_coefficients, e);
    assert_eq!(report.facet_multiplicities, vec![int(40), int(50), int(80)]);
    assert!(report.all_hold());
}

#[test]
fn example_a_profile() {
    let p = example_a().profile();
    assert_eq!(p.pure_power_exponents, Some(vec![4, 5, 6]));
    assert_eq!(p.alpha0, Some(vec![q(1, 4), q(1, 5), q(1, 6)]));
    let alpha0 = p.alpha0.clone().unwrap();
    let dot: Rational = [1, 1, 2].iter().zip(&alpha0).map(|(&x, a)| int(x) * a).sum();
    assert_eq!(dot, q(47, 60));
    assert_eq!(p.split_index, Some(4));
    assert_eq!(p.equigenerated_degree, None);
    assert_eq!(p.rank, 3);
}

#[test]
fn example_a_square_matches_pairwise_sums() {
    let g = gens(&example_a());
    let sums: Vec<ExponentVector> = (0..g.len())
        .flat_map(|i| (i..g.len()).map(move |j| (i, j)))
        .map(|(i, j)| ExponentVector::new(g[i].iter().zip(&g[j]).map(|(a, b)| a + b).collect()))
        .collect();
    assert_eq!(sums.len(), 10);
    assert_eq!(example_a().power(2), minimal_generators(3, sums).unwrap());
}

#[test]
fn closures_by_direct_inequalities() {
    let c = closure_power(&ideal(2, &[&[2, 0], &[0, 2]]), 1);
    assert_eq!(gens(&c), brute_minimal(2, 4, |p| p[0] + p[1] >= 2));
    let c = closure_power(&ideal(2, &[&[3, 0], &[0, 3]]), 1);
    assert_eq!(gens(&c), brute_minimal(2, 6, |p| p[0] + p[1] >= 3));
    let c = closure_power(&example_a(), 2);
    let oracle = polyhedra::DilationOracle::new(&example_a());
    assert_eq!(gens(&c), brute_minimal(3, 12, |p| oracle.contains(p, 2)));
}

#[test]
fn membership_examples() {
    assert!(fm_member_oracle(&example_a(), &[1, 1, 2], 1));
    assert!(!fm_member_oracle(&example_a(), &[0, 0, 5], 1));
    let q2 = newton_polyhedron(&ideal(2, &[&[2, 0], &[0, 2]]));
    assert!(dilate_member(&q2, &[3, 1], 2));
    assert!(!dilate_member(&q2, &[1, 0], 1));
}

#[test]
fn product_example() {
    let a = ideal(2, &[&[2, 0], &[0, 2]]);
    let b = ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]);
    let sums: Vec<ExponentVector> = gens(&a)
        .iter()
        .flat_map(|x| gens(&b).into_iter().map(move |y| ExponentVector::new(vec![x[0] + y[0], x[1] + y[1]])))
        .collect();
    assert_eq!(a.product(&b).unwrap(), minimal_generators(2, sums).unwrap());
    assert_eq!(a.product(&b).unwrap().num_generators(), 5);
}

#[test]
fn polytope_p_of_segment_ideal() {
    let p = polytope_p(&ideal(2, &[&[2, 0], &[0, 2], &[1, 1]])).unwrap();
    assert_eq!(p.vertices().len(), 2);
    assert_eq!(p.affine_dimension(), 1);
}

#[test]
fn interior_count_of_doubled_simplex() {
    let s = Polytope::axis_simplex(&[2, 2]);
    let direct = ehrhart::count_in_box(&[4, 4], |p| p[0] >= 1 && p[1] >= 1 && p[0] + p[1] < 4);
    assert_eq!(direct, 3);
    assert_eq!(ehrhart::count_lattice_points(&s, 2, true), direct);
    let e = ehrhart_polynomial(&s).unwrap();
    assert_eq!(e.eval_int(-2), int(3));
}

#[test]
fn example_a_reciprocity() {
    let s = base_simplex(&example_a()).unwrap();
    assert!(reciprocity_check(&s, 2).unwrap().holds());
}

#[test]
fn stabilization_report_examples() {
    let r = stabilization_report(&ideal(3, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2], &[1, 1, 0]]));
    assert_eq!(
        (r.theorem_bound_d, r.rank_bound_r0, r.veronese_bound, r.a_invariant_bound),
        (3, Some(3), Some(3), Some(3))
    );
    assert_eq!(stabilization_report(&ideal(2, &[&[2, 0], &[0, 2]])).index_found, 2);
    assert_eq!(stabilization_report(&MonomialIdeal::maximal(3)).index_found, 1);
}
