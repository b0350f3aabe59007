use num_bigint::BigInt;
use proptest::prelude::*;
use splitkit_core::dual::{b_gamma_dims, b_gamma_presentation, graded_dims, quadratic_dual, QuadraticPresentation, DEFAULT_SIZE_CAP};
use splitkit_core::mobius::{mobius_chain_sum, mobius_recursive, MobiusTable};
use splitkit_core::ncfactor::{check_all_orderings, RootSystem};
use splitkit_core::topo::{betti, ChainComplexMatrices};
use splitkit_core::*;

const Q: FieldSpec = FieldSpec::Rationals;

fn gf(p: u64) -> FieldSpec {
    FieldSpec::prime(p).unwrap()
}

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Random valid layered graph: level sizes, then for each vertex above level 0 a
/// nonempty set of children one level down.
fn layered_graph() -> impl Strategy<Value = LayeredGraph> {
    (prop::collection::vec(1usize..4, 1..4), any::<u64>()).prop_map(|(sizes, seed)| {
        let mut vertices = vec![("z".to_string(), 0)];
        let mut levels: Vec<Vec<String>> = vec![vec!["z".into()]];
        for (l, &n) in sizes.iter().enumerate() {
            let ids: Vec<String> = (0..n).map(|i| format!("v{}_{}", l + 1, i)).collect();
            vertices.extend(ids.iter().map(|id| (id.clone(), l + 1)));
            levels.push(ids);
        }
        let mut bits = seed;
        let mut edges = Vec::new();
        for l in 1..levels.len() {
            for v in &levels[l] {
                let below = &levels[l - 1];
                let mut any = false;
                for (j, w) in below.iter().enumerate() {
                    let take = bits & 1 == 1;
                    bits = bits.rotate_right(1) ^ 0x9e37_79b9_7f4a_7c15;
                    if take || (!any && j + 1 == below.len()) {
                        edges.push((v.clone(), w.clone()));
                        any = true;
                    }
                }
            }
        }
        LayeredGraph::new(vertices, edges).unwrap()
    })
}

fn small_complex() -> impl Strategy<Value = SimplicialComplex> {
    prop::collection::vec(prop::collection::btree_set(0u32..6, 1..4), 1..6)
        .prop_map(|sets| SimplicialComplex::from_simplices(sets.into_iter().map(|s| s.into_iter().collect())))
}

fn int_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-4i64..5, cols), rows)
}

fn to_matrix(field: FieldSpec, rows: &[Vec<i64>]) -> DenseMatrix {
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    DenseMatrix::from_i64_rows(field, &refs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn series_inverse_reconstructs(sign in prop::bool::ANY, tail in prop::collection::vec(-20i64..21, 0..12)) {
        let mut c = vec![if sign { 1 } else { -1 }];
        c.extend(tail);
        let a = TruncatedSeries::from_i64(&c);
        let d = a.truncation_degree();
        let inv = a.inverse().unwrap();
        prop_assert_eq!(a.mul(&inv).unwrap(), TruncatedSeries::one(d));
        prop_assert_eq!(inv.inverse().unwrap(), a);
    }

    #[test]
    fn poly_divide_reconstructs(
        num in prop::collection::vec(-50i64..51, 0..14),
        lead_pos in prop::bool::ANY,
        body in prop::collection::vec(-9i64..10, 0..6),
    ) {
        let mut den = body;
        den.push(if lead_pos { 1 } else { -1 });
        let n = IntPolynomial::from_i64(&num);
        let d = IntPolynomial::from_i64(&den);
        let (q, r) = n.divide(&d).unwrap();
        prop_assert_eq!(d.mul(&q).add(&r), n);
        let dd = d.degree().unwrap();
        prop_assert!(r.degree().is_none_or(|k| k < dd));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn substitute_neg_is_an_involution(c in prop::collection::vec(-30i64..31, 1..10)) {
        let p = IntPolynomial::from_i64(&c);
        prop_assert_eq!(p.substitute_neg().substitute_neg(), p.clone());
        let s = TruncatedSeries::from_i64(&c);
        prop_assert_eq!(s.substitute_neg().substitute_neg(), s);
        prop_assert_eq!(p.substitute_neg().eval_i64(3), p.eval_i64(-3));
    }

    #[test]
    fn rank_is_transpose_invariant(m in int_matrix(4, 5)) {
        for f in [Q, gf(2), gf(7)] {
            let a = to_matrix(f, &m);
            prop_assert_eq!(a.rank(), a.transpose().rank());
            prop_assert_eq!(a.rank() + a.nullspace_dim(), 5);
        }
    }

    #[test]
    fn rational_rank_bounds_modular_rank(m in int_matrix(5, 5)) {
        let rq = to_matrix(Q, &m).rank();
        for p in [2, 3, 5] {
            prop_assert!(to_matrix(gf(p), &m).rank() <= rq);
        }
    }

    #[test]
    fn inverse_is_two_sided(m in int_matrix(4, 4)) {
        for f in [Q, gf(5)] {
            let a = to_matrix(f, &m);
            match a.inverse() {
                Ok(inv) => {
                    prop_assert_eq!(a.mul(&inv).unwrap(), DenseMatrix::identity(f, 4));
                    prop_assert_eq!(inv.mul(&a).unwrap(), DenseMatrix::identity(f, 4));
                }
                Err(_) => prop_assert!(a.rank() < 4),
            }
        }
    }

    #[test]
    fn mobius_routes_agree(g in layered_graph()) {
        let p = PosetClosure::new(&g).unwrap();
        let t = MobiusTable::from_closure(&p);
        let n = g.vertex_count();
        for v in 0..n {
            for w in 0..n {
                let r = mobius_recursive(&p, v, w);
                prop_assert_eq!(r, mobius_chain_sum(&p, v, w));
                prop_assert_eq!(r, t.get(v, w));
                prop_assert_eq!(r, brute_chain_count(&p, v, w));
                if w != v && p.leq(w, v) {
                    let s: i64 = (0..n).filter(|&u| p.leq(w, u) && p.leq(u, v)).map(|u| t.get(u, w)).sum();
                    prop_assert_eq!(s, 0);
                }
            }
        }
    }

    #[test]
    fn hilbert_inverse_divides_exactly(g in layered_graph()) {
        // a unique minimum forces M(1) = 1, so 1 - τM vanishes at τ = 1
        let m = mobius::graded_mobius(&g, MobiusConvention::Inclusive).unwrap();
        prop_assert_eq!(m.eval_i64(1), BigInt::from(1));
        let q = mobius::hilbert_a_inverse_poly(&g, MobiusConvention::Inclusive).unwrap();
        let den = IntPolynomial::one().sub(&IntPolynomial::from_i64(&[0, 1]).mul(&m));
        prop_assert_eq!(q.mul(&IntPolynomial::from_i64(&[1, -1])), den);
    }

    #[test]
    fn path_basis_agrees_with_tensor_space(g in layered_graph()) {
        prop_assume!(g.vertex_count() <= 8);
        for f in [Q, gf(2)] {
            let p = b_gamma_presentation(&g, f).unwrap();
            let mut path = b_gamma_dims(&g, f, DEFAULT_SIZE_CAP).unwrap().dims;
            path.push(0);
            prop_assert_eq!(graded_dims(&p, g.height() + 1, DEFAULT_SIZE_CAP).unwrap().dims, path);
        }
    }

    #[test]
    fn euler_characteristic_identity(x in small_complex()) {
        let chi: i64 = x.f_vector().iter().enumerate().map(|(i, &f)| if i % 2 == 0 { f as i64 } else { -(f as i64) }).sum();
        for f in [Q, gf(2), gf(3)] {
            let cc = ChainComplexMatrices::new(&x, f, true);
            prop_assert_eq!(cc.betti().euler_characteristic(), chi - 1);
            prop_assert_eq!(betti(&x, f, false).euler_characteristic(), chi);
        }
    }

    #[test]
    fn betti_is_relabelling_invariant(x in small_complex(), shift in 1u32..50) {
        let y = x.relabel(|v| 100 - v * 3 + shift);
        for f in [Q, gf(2)] {
            prop_assert_eq!(betti(&x, f, true), betti(&y, f, true));
        }
        let q = betti(&x, Q, false);
        let two = betti(&x, gf(2), false);
        for i in 0..q.b.len() {
            prop_assert!(q.b[i] <= two.b[i]);
        }
    }

    #[test]
    fn boundary_squares_to_zero(x in small_complex()) {
        for f in [Q, gf(3)] {
            let cc = ChainComplexMatrices::new(&x, f, true);
            let mut i = 1;
            while let (Some(lower), Some(upper)) = (cc.boundary(i - 1), cc.boundary(i)) {
                prop_assert!(lower.mul(upper).unwrap().is_zero());
                i += 1;
            }
        }
    }

    #[test]
    fn scalar_roots_give_elementary_symmetric_functions(v in prop::collection::btree_set(-6i64..7, 3)) {
        let v: Vec<i64> = v.into_iter().collect();
        let rs = RootSystem::scalars(&v).unwrap();
        let p = check_all_orderings(&rs).unwrap();
        prop_assert!(p.pass);
        let common = p.common.unwrap();
        let e1: i64 = v.iter().sum();
        let e2 = v[0] * v[1] + v[0] * v[2] + v[1] * v[2];
        let e3 = v[0] * v[1] * v[2];
        let expect = [-e1, e2, -e3];
        for (k, &c) in expect.iter().enumerate() {
            prop_assert_eq!(common.coeff(k + 1), &DenseMatrix::from_i64_rows(Q, &[&[c]]));
        }
    }

    #[test]
    fn double_dual_returns_the_relations(rels in prop::collection::vec(prop::collection::vec(-2i64..3, 9), 0..5)) {
        for f in [Q, gf(3)] {
            let rows: Vec<Vec<Scalar>> = rels.iter().map(|r| r.iter().map(|&x| f.from_i64(x)).collect()).collect();
            let p = QuadraticPresentation::new(f, vec!["a".into(), "b".into(), "c".into()], &rows).unwrap();
            let dd = quadratic_dual(&quadratic_dual(&p).unwrap()).unwrap();
            prop_assert_eq!(dd.relations(), p.relations());
            prop_assert_eq!(quadratic_dual(&p).unwrap().relations().len() + p.relations().len(), 9);
        }
    }
}

/// Independent oracle: enumerate every chain `w = c_0 < ... < c_l = v` explicitly.
fn brute_chain_count(p: &PosetClosure, v: usize, w: usize) -> i64 {
    if !p.leq(w, v) {
        return 0;
    }
    if v == w {
        return 1;
    }
    fn walk(p: &PosetClosure, cur: usize, v: usize, len: usize) -> i64 {
        if cur == v {
            return if len.is_multiple_of(2) { 1 } else { -1 };
        }
        (0..p.len()).filter(|&u| p.lt(cur, u) && p.leq(u, v)).map(|u| walk(p, u, v, len + 1)).sum()
    }
    walk(p, w, v, 0)
}

#[test]
fn boolean_closed_forms() {
    for n in 1..=4u32 {
        let g = LayeredGraph::boolean(n).unwrap();
        let m = mobius::graded_mobius(&g, MobiusConvention::Inclusive).unwrap();
        assert_eq!(m, series::binomial_power(2, -1, n));
        assert_eq!(mobius::hilbert_a(&g, 8, MobiusConvention::Inclusive).unwrap(), mobius::qn_hilbert(n, 8).unwrap());
    }
    assert_eq!(mobius::qn_hilbert(2, 3).unwrap().coeffs(), big(&[1, 3, 8, 21]).as_slice());
}
