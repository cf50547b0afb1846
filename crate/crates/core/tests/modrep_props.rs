//! Specht modules, their irreducible heads and the sign twist.

use mullineux_core::modrep::standard_tableaux;
use mullineux_core::pflinalg::{FpMatrix, PrimeField};
use mullineux_core::*;

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

#[test]
fn specht_dimension_is_the_standard_tableau_count() {
    for d in 1..=6 {
        let total: usize = Partition::all(d).iter().map(|l| {
            let n = standard_tableaux(l).len();
            assert_eq!(specht(l, d, 7).unwrap().rep.dim(), n);
            n * n
        }).sum();
        assert_eq!(total, factorial(d));
    }
}

#[test]
fn gram_is_symmetric_and_invariant() {
    for d in 2..=5 {
        for l in Partition::all(d) {
            let sp = specht(&l, d, 3).unwrap();
            let g = sp.gram.reduce(PrimeField::new(3).unwrap());
            assert_eq!(g.transpose(), g);
            for a in sp.rep.gens() {
                assert_eq!(a.transpose().mul(&g).unwrap().mul(a).unwrap(), g);
            }
        }
    }
}

#[test]
fn irreducibles_have_trivial_commutant() {
    for p in [3, 5] {
        for d in 1..=5 {
            let mut squares = 0;
            for mu in Partition::regular(d, p).unwrap() {
                let rep = irreducible_d(&mu, d, p).unwrap();
                assert_eq!(rep.commutant_dimension().unwrap(), 1, "{mu} p={p}");
                squares += rep.dim() * rep.dim();
            }
            assert!(squares <= factorial(d));
            assert_eq!(squares == factorial(d), p as usize > d);
        }
    }
}

#[test]
fn distinct_regular_partitions_give_distinct_irreducibles() {
    let (d, p) = (5, 3);
    let reps: Vec<GroupRep> = Partition::regular(d, p).unwrap().iter().map(|mu| irreducible_d(mu, d, p).unwrap()).collect();
    for (a, ra) in reps.iter().enumerate() {
        for (b, rb) in reps.iter().enumerate() {
            assert_eq!(are_isomorphic(ra, rb).unwrap(), a == b);
        }
    }
}

#[test]
fn semisimple_case_is_ordinary_conjugation() {
    let (d, p) = (4, 5);
    for mu in Partition::all(d) {
        let sp = specht(&mu, d, p).unwrap();
        let g = sp.gram.reduce(PrimeField::new(p).unwrap());
        assert!(g.is_invertible());
        let twisted = tensor_sign(&sp.rep);
        let conj = specht(&mu.conjugate(), d, p).unwrap().rep;
        assert!(are_isomorphic(&twisted, &conj).unwrap());
    }
}

#[test]
fn tensor_sign_is_an_involution() {
    let rep = irreducible_d(&"3,2".parse().unwrap(), 5, 3).unwrap();
    let twice = tensor_sign(&tensor_sign(&rep));
    assert_eq!(twice, rep);
    assert_eq!(tensor_sign(&rep).dim(), rep.dim());
}

#[test]
fn isomorphism_argument_errors() {
    let a = irreducible_d(&"2,1".parse().unwrap(), 3, 5).unwrap();
    let b = irreducible_d(&"2,1".parse().unwrap(), 3, 7).unwrap();
    assert!(matches!(are_isomorphic(&a, &b), Err(Error::ParameterMismatch(_))));
    let empty = GroupRep::new(1, 3, 0, vec![]).unwrap();
    assert_eq!(are_isomorphic(&empty, &empty), Err(Error::ZeroDimension));
}

#[test]
fn intertwiner_respects_conjugated_generators() {
    let f = PrimeField::new(5).unwrap();
    let rep = irreducible_d(&"2,2".parse().unwrap(), 4, 5).unwrap();
    let x = FpMatrix::from_rows(f, &[vec![1, 2], vec![0, 1]]);
    let xinv = FpMatrix::from_rows(f, &[vec![1, 3], vec![0, 1]]);
    let conj: Vec<FpMatrix> = rep.gens().iter().map(|g| x.mul(g).unwrap().mul(&xinv).unwrap()).collect();
    let other = GroupRep::new(4, 5, 2, conj).unwrap();
    assert!(are_isomorphic(&rep, &other).unwrap());
}

#[test]
fn mullineux_reports_at_degree_seven() {
    let report = verify_mullineux(7, 3).unwrap();
    assert!(report.pass, "{report:?}");
}
