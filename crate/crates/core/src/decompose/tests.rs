use super::*;
use crate::exactmath::rank;
use crate::symgroup::{hook_dimension, regular_representation, specht_representation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn part(p: &[usize]) -> Partition {
    Partition::new(p.to_vec()).unwrap()
}

fn sum(terms: Vec<FunctorExpr>) -> FunctorExpr {
    FunctorExpr::Sum(terms)
}

fn builtins(max_n: usize) -> Vec<FunctorExpr> {
    let mut out = vec![FunctorExpr::Id, FunctorExpr::Const(2)];
    for n in 0..=max_n {
        out.push(FunctorExpr::TensorPow(n));
        out.push(FunctorExpr::SymPow(n));
        out.push(FunctorExpr::WedgePow(n));
        out.push(FunctorExpr::GammaPow(n));
        for p in Partition::all(n) {
            out.push(FunctorExpr::schur(p));
        }
    }
    out
}

/// Ambient dimension of `F(ℚ^d)` small enough for dense projectors.
fn small(value: &FunctorValue, d: usize) -> bool {
    value.dim(d) <= 1000
}

fn mults(pairs: &[(&[usize], u64)]) -> BTreeMap<Partition, u64> {
    pairs.iter().map(|(p, m)| (part(p), *m)).collect()
}

#[test]
fn homogeneity_examples() {
    assert!(is_homogeneous(&FunctorExpr::WedgePow(3), 3, 4));
    let mixed = sum(vec![FunctorExpr::SymPow(2), FunctorExpr::WedgePow(3)]);
    assert!(!is_homogeneous(&mixed, 2, 3));
    assert!(!is_homogeneous(&mixed, 3, 3));
    assert!(is_homogeneous(&FunctorExpr::Const(5), 0, 2));
    assert!(!is_homogeneous(&FunctorExpr::Const(5), 1, 2));
    let pleth = FunctorExpr::compose(FunctorExpr::SymPow(2), FunctorExpr::WedgePow(2));
    assert!(is_homogeneous(&pleth, 4, 3));
}

#[test]
fn piece_ranks() {
    let ranks = |e: &FunctorExpr, d| -> Vec<(usize, usize)> {
        homogeneous_pieces(e, d)
            .iter()
            .map(|p| (p.degree, p.rank()))
            .collect()
    };
    let mixed = sum(vec![FunctorExpr::SymPow(2), FunctorExpr::WedgePow(3)]);
    assert_eq!(ranks(&mixed, 3), vec![(2, 6), (3, 1)]);
    assert_eq!(ranks(&FunctorExpr::TensorPow(2), 2), vec![(2, 4)]);
    assert_eq!(
        ranks(&sum(vec![FunctorExpr::Const(1), FunctorExpr::Id]), 3),
        vec![(0, 1), (1, 3)]
    );
}

#[test]
fn piece_projectors_are_spectral() {
    let mut exprs = builtins(4);
    exprs.push(sum(vec![
        FunctorExpr::SymPow(2),
        FunctorExpr::WedgePow(3),
        FunctorExpr::Const(1),
    ]));
    exprs.push(FunctorExpr::TensorProd(vec![
        sum(vec![FunctorExpr::Id, FunctorExpr::Const(1)]),
        FunctorExpr::SymPow(2),
    ]));
    for e in exprs {
        let value = eval(&e);
        for d in 0..=4 {
            if !small(&value, d) {
                continue;
            }
            let pieces = homogeneous_pieces_value(&value, d);
            let three = value.map(&QMatrix::scalar(d, Rat::from_int(3)));
            let dim = value.dim(d);
            let mut total = QMatrix::zeros(dim, dim);
            for p in &pieces {
                assert_eq!(p.projector.mul(&p.projector), p.projector, "{e} d={d}");
                let scaled = p.projector.scale(&Rat::from_int(3).pow(p.degree as u32));
                assert_eq!(three.mul(&p.projector), scaled, "{e} d={d}");
                for q in &pieces {
                    if q.degree != p.degree {
                        assert!(p.projector.mul(&q.projector).is_zero());
                    }
                }
                total = total.add(&p.projector);
            }
            assert!(total.is_identity(), "{e} d={d}");
            assert_eq!(pieces.iter().map(|p| p.rank()).sum::<usize>(), dim);
        }
    }
}

#[test]
fn block_permutation_characterization() {
    assert!(block_permutation(&Perm::identity(3), &[2, 1, 3]).is_identity());
    let swap = block_permutation(&Perm::adjacent(0, 2), &[1, 1]);
    assert_eq!(swap, QMatrix::from_ints(&[&[0, 1], &[1, 0]]));
    for dims in [vec![1, 1, 1], vec![2, 1, 3]] {
        let offsets = |ds: &[usize], i: usize| ds[..i].iter().sum::<usize>();
        for sigma in Perm::all(3) {
            let m = block_permutation(&sigma, &dims);
            let target_dims: Vec<usize> = (0..3).map(|i| dims[sigma.apply(i)]).collect();
            for i in 0..3 {
                let src = sigma.apply(i);
                for k in 0..dims[src] {
                    let mut unit = vec![Rat::zero(); m.cols()];
                    unit[offsets(&dims, src) + k] = Rat::one();
                    let mut expect = vec![Rat::zero(); m.rows()];
                    expect[offsets(&target_dims, i) + k] = Rat::one();
                    assert_eq!(m.mul_vec(&unit), expect);
                }
            }
        }
    }
}

#[test]
fn multidegree_examples() {
    let w = multidegree_piece(&FunctorExpr::WedgePow(2), &[3, 2], &[2, 0]).unwrap();
    assert_eq!(w.dim(), 3);
    let t = multidegree_piece(&FunctorExpr::TensorPow(2), &[1, 1], &[1, 1]).unwrap();
    assert_eq!(t.dim(), 2);
    let s = multidegree_piece(&FunctorExpr::SymPow(2), &[1, 1], &[0, 2]).unwrap();
    assert_eq!(s.dim(), 1);
    assert_eq!(
        multidegree_piece(&FunctorExpr::SymPow(2), &[1, 1], &[1, 2]),
        Err(Error::MultidegreeOutsideTotal)
    );
    let mixed = sum(vec![FunctorExpr::SymPow(2), FunctorExpr::WedgePow(3)]);
    assert!(matches!(
        multidegree_piece(&mixed, &[1, 1], &[1, 1]),
        Err(Error::Precondition(_))
    ));
}

/// All compositions of `total` into `parts` nonnegative parts.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    (0..=total)
        .flat_map(|first| {
            compositions(total - first, parts - 1)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
        })
        .collect()
}

#[test]
fn multidegree_pieces_split_the_space() {
    let cases: Vec<(FunctorExpr, Vec<usize>)> = vec![
        (FunctorExpr::SymPow(3), vec![2, 1, 2]),
        (FunctorExpr::WedgePow(2), vec![2, 2]),
        (FunctorExpr::TensorPow(2), vec![1, 2]),
        (FunctorExpr::GammaPow(3), vec![1, 1, 2]),
        (FunctorExpr::schur(part(&[2, 1])), vec![1, 2, 1]),
    ];
    for (e, dims) in cases {
        let value = eval(&e);
        let n = homogeneous_degree(&value).unwrap();
        let total: usize = dims.iter().sum();
        let mut columns = Vec::new();
        let mut dim_sum = 0;
        for k in 0..=n + 1 {
            for md in compositions(k, dims.len()) {
                let piece = joint_piece(&value, &dims, &md);
                if k != n {
                    assert_eq!(piece.dim(), 0, "{e} {md:?}");
                }
                dim_sum += piece.dim();
                columns.push(piece.basis().clone());
            }
        }
        assert_eq!(dim_sum, value.dim(total), "{e}");
        let all = QMatrix::hstack(value.dim(total), &columns);
        assert_eq!(rank(&all), value.dim(total), "{e}");
    }
}

#[test]
fn linearization_dimensions() {
    assert_eq!(
        linearization(&FunctorExpr::WedgePow(3), &[2, 2, 2])
            .unwrap()
            .dim(),
        8
    );
    assert_eq!(
        linearization(&FunctorExpr::TensorPow(3), &[1, 1, 1])
            .unwrap()
            .dim(),
        6
    );
    assert_eq!(
        linearization(&FunctorExpr::TensorPow(4), &[1, 1, 1, 1])
            .unwrap()
            .dim(),
        24
    );
    assert_eq!(
        linearization(&FunctorExpr::SymPow(2), &[1, 1])
            .unwrap()
            .dim(),
        1
    );
    assert!(linearization(&FunctorExpr::SymPow(2), &[1, 1, 1]).is_err());
    for e in builtins(4) {
        let value = eval(&e);
        let Ok(n) = homogeneous_degree(&value) else {
            continue;
        };
        let v = component_module(&value, n).unwrap().rep.dim();
        for d in 1..=3 {
            if !small(&value, n * d) {
                continue;
            }
            let lin = joint_piece(&value, &vec![d; n], &vec![1; n]);
            assert_eq!(lin.dim(), v * d.pow(n as u32), "{e} d={d}");
        }
    }
}

#[test]
fn symmetric_module_examples() {
    let sign = symmetric_module(&FunctorExpr::WedgePow(2)).unwrap();
    assert_eq!(sign.dim(), 1);
    assert_eq!(
        *sign.action(&Perm::adjacent(0, 2)),
        QMatrix::from_ints(&[&[-1]])
    );
    for n in 1..=4 {
        let triv = symmetric_module(&FunctorExpr::SymPow(n)).unwrap();
        assert_eq!(multiplicities(&triv).unwrap(), mults(&[(&[n], 1)]));
    }
    let reg = symmetric_module(&FunctorExpr::TensorPow(3)).unwrap();
    assert_eq!(reg.dim(), 6);
    assert_eq!(
        multiplicities(&reg).unwrap(),
        mults(&[(&[3], 1), (&[2, 1], 2), (&[1, 1, 1], 1)])
    );
}

#[test]
fn module_right_action_law() {
    for e in builtins(4) {
        let value = eval(&e);
        let Ok(n) = homogeneous_degree(&value) else {
            continue;
        };
        let module = component_module(&value, n).unwrap();
        let rep = &module.rep;
        let basis = module.subspace.basis();
        let perms = Perm::all(n);
        for s in &perms {
            // u·σ is F(σ̃) u for every σ, not just the generators.
            let direct = value.map(&block_permutation(s, &vec![1; n])).mul(basis);
            assert_eq!(basis.mul(&rep.action(s)), direct, "{e} {s}");
            for t in &perms {
                assert_eq!(
                    *rep.action(&s.compose(t)),
                    rep.action(t).mul(&rep.action(s))
                );
            }
        }
    }
}

#[test]
fn classification_examples() {
    let c = classify(&FunctorExpr::WedgePow(2)).unwrap();
    assert_eq!(
        c.to_json().to_string(),
        r#"{"pieces":[{"degree":2,"dim_V":1,"multiplicities":{"[1,1]":1}}]}"#
    );
    let pleth = classify(&FunctorExpr::compose(
        FunctorExpr::SymPow(2),
        FunctorExpr::SymPow(2),
    ))
    .unwrap();
    assert_eq!(pleth.pieces.len(), 1);
    assert_eq!(pleth.pieces[0].degree, 4);
    assert_eq!(
        pleth.pieces[0].multiplicities,
        mults(&[(&[4], 1), (&[2, 2], 1)])
    );
    assert_eq!(pleth.dim_at(2), 6);
    for (e, shape) in [
        (FunctorExpr::SymPow(3), vec![3]),
        (FunctorExpr::WedgePow(3), vec![1, 1, 1]),
        (FunctorExpr::schur(part(&[2, 1])), vec![2, 1]),
    ] {
        let c = classify(&e).unwrap();
        assert_eq!(c.pieces.len(), 1);
        assert_eq!(c.pieces[0].multiplicities, mults(&[(&shape, 1)]));
    }
    assert!(classify(&FunctorExpr::Const(0)).unwrap().pieces.is_empty());
    assert!(classify(&FunctorExpr::WedgePow(3)).unwrap().pieces.len() == 1);
    let zero_wedge = classify(&FunctorExpr::compose(
        FunctorExpr::WedgePow(2),
        FunctorExpr::Const(1),
    ))
    .unwrap();
    assert!(zero_wedge.pieces.is_empty());
    let constant = classify(&FunctorExpr::Const(3)).unwrap();
    assert_eq!(constant.pieces[0].multiplicities, mults(&[(&[], 3)]));
}

#[test]
fn gamma_and_sym_classify_alike() {
    for n in 1..=4 {
        let g = classify(&FunctorExpr::GammaPow(n)).unwrap();
        let s = classify(&FunctorExpr::SymPow(n)).unwrap();
        assert_eq!(g.pieces.len(), 1);
        assert_eq!(g.pieces[0].multiplicities, s.pieces[0].multiplicities);
        assert_eq!(g.pieces[0].multiplicities, mults(&[(&[n], 1)]));
    }
}

#[test]
fn classification_reproduces_dimensions() {
    let mut exprs = builtins(4);
    exprs.push(FunctorExpr::compose(
        FunctorExpr::SymPow(2),
        FunctorExpr::WedgePow(2),
    ));
    exprs.push(FunctorExpr::compose(
        FunctorExpr::WedgePow(2),
        FunctorExpr::SymPow(2),
    ));
    exprs.push(FunctorExpr::TensorProd(vec![
        FunctorExpr::SymPow(2),
        FunctorExpr::WedgePow(2),
    ]));
    exprs.push(sum(vec![
        FunctorExpr::Const(2),
        FunctorExpr::Id,
        FunctorExpr::schur(part(&[2, 1])),
    ]));
    for e in exprs {
        let value = eval(&e);
        let c = classify_value(&value).unwrap();
        for p in &c.pieces {
            let total: u64 = p
                .multiplicities
                .iter()
                .map(|(l, m)| m * hook_dimension(l))
                .sum();
            assert_eq!(total, p.module.dim() as u64);
        }
        for d in 0..=4 {
            if value.dim(d) > 2000 {
                continue;
            }
            assert_eq!(c.dim_at(d), value.dim(d) as u64, "{e} d={d}");
        }
    }
}

#[test]
fn classify_is_additive() {
    let pool = builtins(3);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..12 {
        let a = pool[rng.random_range(0..pool.len())].clone();
        let b = pool[rng.random_range(0..pool.len())].clone();
        let ca = classify(&a).unwrap();
        let cb = classify(&b).unwrap();
        let cs = classify(&sum(vec![a.clone(), b.clone()])).unwrap();
        let mut expect: BTreeMap<usize, BTreeMap<Partition, u64>> = BTreeMap::new();
        for p in ca.pieces.iter().chain(&cb.pieces) {
            let slot = expect.entry(p.degree).or_default();
            for (l, m) in &p.multiplicities {
                *slot.entry(l.clone()).or_default() += m;
            }
        }
        let got: BTreeMap<usize, BTreeMap<Partition, u64>> = cs
            .pieces
            .iter()
            .map(|p| (p.degree, p.multiplicities.clone()))
            .collect();
        assert_eq!(got, expect, "{a} + {b}");
    }
}

#[test]
fn classify_schur_of_modules() {
    let reg = classify(&FunctorExpr::schur_module(regular_representation(3))).unwrap();
    assert_eq!(
        reg.pieces[0].multiplicities,
        mults(&[(&[3], 1), (&[2, 1], 2), (&[1, 1, 1], 1)])
    );
    let v = specht_representation(&part(&[2, 2]));
    let c = classify(&FunctorExpr::schur_module(v)).unwrap();
    assert_eq!(c.pieces[0].multiplicities, mults(&[(&[2, 2], 1)]));
}

#[test]
fn boundedness_examples() {
    let wedges = classify(&sum(vec![
        FunctorExpr::WedgePow(1),
        FunctorExpr::WedgePow(2),
        FunctorExpr::WedgePow(3),
    ]))
    .unwrap();
    let report = boundedness_report(&wedges);
    assert_eq!(report[&1], vec![part(&[1])]);
    assert_eq!(report[&3].len(), 3);
    assert_eq!(
        boundedness_report(&ClassifiedOperation::default()),
        BTreeMap::from([(0, vec![])])
    );
    let syms = classify(&sum((0..=3).map(FunctorExpr::SymPow).collect())).unwrap();
    let shapes: Vec<String> = boundedness_report(&syms)[&1]
        .iter()
        .map(|p| p.to_string())
        .collect();
    assert_eq!(shapes, vec!["[]", "[1]", "[2]", "[3]"]);
}
