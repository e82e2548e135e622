//! Small algebras used throughout the tests and examples.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{automorphism_from_quiver_map, Arrow, BoundQuiverAlgebra, QuiverPresentation};
use crate::field::FieldSpec;
use crate::group::{FiniteGroup, GroupAction};

fn build(
    field: FieldSpec,
    vertices: &[&str],
    arrows: &[(&str, usize, usize)],
) -> BoundQuiverAlgebra {
    let q = QuiverPresentation::new(
        vertices.iter().map(|v| String::from(*v)).collect(),
        arrows
            .iter()
            .map(|(l, s, t)| Arrow {
                label: (*l).into(),
                source: *s,
                target: *t,
            })
            .collect(),
    );
    BoundQuiverAlgebra::from_bound_quiver(field, q).expect("fixture quiver")
}

/// `1 --a--> 2`.
pub fn a2(field: FieldSpec) -> BoundQuiverAlgebra {
    build(field, &["1", "2"], &[("a", 0, 1)])
}

/// `2 <--alpha-- 1 --beta--> 2'`.
pub fn fork(field: FieldSpec) -> BoundQuiverAlgebra {
    build(field, &["1", "2", "2'"], &[("alpha", 0, 1), ("beta", 0, 2)])
}

/// Vertex and arrow permutation of [`fork`] swapping the two arms.
pub fn fork_swap() -> (Vec<usize>, Vec<usize>) {
    (vec![0, 2, 1], vec![1, 0])
}

/// Two disjoint copies of `A2`: `1 -a-> 2`, `3 -b-> 4`.
pub fn a2_pair(field: FieldSpec) -> BoundQuiverAlgebra {
    build(field, &["1", "2", "3", "4"], &[("a", 0, 1), ("b", 2, 3)])
}

/// Permutation of [`a2_pair`] swapping the two components.
pub fn a2_pair_swap() -> (Vec<usize>, Vec<usize>) {
    (vec![2, 3, 0, 1], vec![1, 0])
}

/// [`fork`] with `Z/2` swapping the arms.
pub fn fork_action(field: FieldSpec) -> GroupAction {
    let bq = fork(field);
    let (vm, am) = fork_swap();
    swap_action(&bq, &vm, &am)
}

/// [`a2_pair`] with `Z/2` swapping the components.
pub fn a2_pair_action(field: FieldSpec) -> GroupAction {
    let bq = a2_pair(field);
    let (vm, am) = a2_pair_swap();
    swap_action(&bq, &vm, &am)
}

fn swap_action(bq: &BoundQuiverAlgebra, vm: &[usize], am: &[usize]) -> GroupAction {
    let one = bq.algebra.field().one();
    let images: Vec<Vec<_>> = am.iter().map(|&b| vec![(one.clone(), b)]).collect();
    let swap = automorphism_from_quiver_map(bq, vm, &images).expect("swap automorphism");
    GroupAction::from_generator_maps(bq.algebra.clone(), FiniteGroup::cyclic(2), vec![swap])
        .expect("Z/2 action")
}

/// Three copies of `A2` permuted cyclically by `Z/3`.
pub fn cyclic_a2_action(field: FieldSpec) -> GroupAction {
    let bq = build(
        field,
        &["1", "2", "3", "4", "5", "6"],
        &[("a", 0, 1), ("b", 2, 3), ("c", 4, 5)],
    );
    let one = field.one();
    let images: Vec<Vec<_>> = [1, 2, 0].iter().map(|&b| vec![(one.clone(), b)]).collect();
    let rot = automorphism_from_quiver_map(&bq, &[2, 3, 4, 5, 0, 1], &images).expect("rotation");
    GroupAction::from_generator_maps(bq.algebra.clone(), FiniteGroup::cyclic(3), vec![rot])
        .expect("Z/3 action")
}
