//! Cross-module checks: expression evaluation feeding the variational
//! operators, the slot transform, and the character-level dimension counts
//! must all tell the same story.

use novikov_core::diffpoly::Multidegree;
use novikov_core::gd::commute_check;
use novikov_core::novikov::{is_novikov_element, multilinear_nov_dim, nov_basis, NovExpr};
use novikov_core::repr::sym_decomposition;
use novikov_core::variational::{
    antiderivative, criterion_check, is_null_lagrangian, is_symmetric, sym_multilinear_dim,
};

#[test]
fn circ_products_flow_through_the_variational_pipeline() {
    let x = NovExpr::gen(1);
    let y = NovExpr::gen(2);
    let z = NovExpr::gen(3);
    let f = NovExpr::circ(NovExpr::circ(x, y), z).eval();

    assert!(is_novikov_element(&f));
    assert!(is_symmetric(&f));
    assert!(is_null_lagrangian(&f));

    let g = antiderivative(&f).unwrap();
    assert_eq!(g.derive(), f);

    let r = criterion_check(&f).unwrap();
    assert!(r.consistent());
    assert!(r.condition1 && r.condition2 && r.condition3);

    let Multidegree::Homogeneous(lambda) = f.multidegree() else {
        panic!("circ product of generators must be homogeneous");
    };
    for k in 1..=lambda.len() as u32 {
        assert!(commute_check(&f, k).unwrap().holds());
    }
}

#[test]
fn lie_brackets_of_generators_are_never_null_lagrangians() {
    // criterion_check wants every variable up to the largest index present,
    // so stick to brackets of x1 and x2
    for (a, b) in [(1u32, 2u32), (2, 1)] {
        let f = NovExpr::lie(NovExpr::gen(a), NovExpr::gen(b)).eval();
        assert!(is_novikov_element(&f));
        assert!(!is_null_lagrangian(&f));
        assert!(antiderivative(&f).is_err());
        let r = criterion_check(&f).unwrap();
        assert!(r.consistent());
        assert!(!r.condition1 && !r.condition2 && !r.condition3);
    }
}

#[test]
fn multilinear_dimensions_agree_across_modules() {
    for n in 1..=6usize {
        let lambda = vec![1usize; n];
        assert_eq!(
            nov_basis(&lambda).unwrap().len() as u64,
            multilinear_nov_dim(n).unwrap()
        );
    }
    // the character computation on n+2 letters matches the polynomial count
    for n in 1..=5usize {
        assert_eq!(
            sym_decomposition(n).unwrap().total_dim(),
            sym_multilinear_dim(n + 2).unwrap()
        );
    }
}

#[test]
fn difference_of_symmetrized_products_is_detected_as_asymmetric() {
    // a∘(b∘c) and (a∘b)∘c are both symmetric, their associator is too,
    // but the plain Novikov product a·(b·c) is not
    let a = NovExpr::gen(1);
    let b = NovExpr::gen(2);
    let c = NovExpr::gen(3);
    let left = NovExpr::circ(a.clone(), NovExpr::circ(b.clone(), c.clone())).eval();
    let right = NovExpr::circ(NovExpr::circ(a.clone(), b.clone()), c.clone()).eval();
    let assoc = &left - &right;
    assert!(is_symmetric(&assoc));

    let plain = NovExpr::prod(a, NovExpr::prod(b, c)).eval();
    assert!(is_novikov_element(&plain));
    assert!(!is_symmetric(&plain));
}
