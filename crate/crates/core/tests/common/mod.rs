//! Random inputs shared by the property and acceptance suites.

use proptest::prelude::*;
use qpartitions::dsl::Ast;
use qpartitions::qobjects::Monomial;
use qpartitions::series::LaurentSeries;

pub fn series() -> impl Strategy<Value = LaurentSeries> {
    (-3i64..4, prop::collection::vec(-20i64..=20, 1..12), 0i64..3).prop_map(|(lo, c, extra)| {
        let order = lo + c.len() as i64 + extra;
        LaurentSeries::from_coeffs(lo, c, order)
    })
}

pub fn unit_series() -> impl Strategy<Value = LaurentSeries> {
    (-2i64..3, prop::bool::ANY, prop::collection::vec(-9i64..=9, 0..10)).prop_map(|(lo, neg, tail)| {
        let lead = if neg { -1 } else { 1 };
        let order = lo + 1 + tail.len() as i64;
        LaurentSeries::from_coeffs(lo, std::iter::once(lead).chain(tail), order)
    })
}

pub fn monomial() -> impl Strategy<Value = Monomial> {
    prop_oneof![
        (-5i64..=5).prop_map(|c| Monomial::new(c, 0)),
        (-4i64..=4, 1i64..6).prop_map(|(c, e)| Monomial::new(c, e)),
    ]
}

pub fn leaf() -> impl Strategy<Value = Ast> {
    prop_oneof![
        (0i64..50).prop_map(Ast::int),
        Just(Ast::Q),
        (monomial(), 1u64..4, prop::option::of(0u64..6)).prop_map(|(a, step, len)| Ast::Poch { a, step, len }),
        (-2i64..8, -2i64..8).prop_map(|(a, b)| Ast::Qbin(a, b)),
    ]
}

pub fn ast() -> impl Strategy<Value = Ast> {
    leaf().prop_recursive(5, 40, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|x| Ast::Neg(Box::new(x))),
            (inner.clone(), inner.clone()).prop_map(|(x, y)| Ast::Add(Box::new(x), Box::new(y))),
            (inner.clone(), inner.clone()).prop_map(|(x, y)| Ast::Sub(Box::new(x), Box::new(y))),
            (inner.clone(), inner.clone()).prop_map(|(x, y)| Ast::Mul(Box::new(x), Box::new(y))),
            (inner.clone(), inner.clone()).prop_map(|(x, y)| Ast::Div(Box::new(x), Box::new(y))),
            (inner, -3i64..4).prop_map(|(x, k)| Ast::Pow(Box::new(x), k)),
        ]
    })
}

/// Trees without division or negative powers, so evaluation always succeeds.
#[allow(dead_code)]
pub fn ring_ast() -> impl Strategy<Value = Ast> {
    let leaf = prop_oneof![
        (0i64..9).prop_map(Ast::int),
        Just(Ast::Q),
        (1i64..4).prop_map(|e| Ast::Poch {
            a: Monomial::q(e),
            step: 1,
            len: None
        }),
        (0i64..5, 0i64..5).prop_map(|(a, b)| Ast::Qbin(a, b)),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|x| Ast::Neg(Box::new(x))),
            (inner.clone(), inner.clone()).prop_map(|(x, y)| Ast::Add(Box::new(x), Box::new(y))),
            (inner.clone(), inner.clone()).prop_map(|(x, y)| Ast::Sub(Box::new(x), Box::new(y))),
            (inner.clone(), inner).prop_map(|(x, y)| Ast::Mul(Box::new(x), Box::new(y))),
        ]
    })
}

/// Agreement on the part of the window both sides know.
pub fn agree(x: &LaurentSeries, y: &LaurentSeries) -> bool {
    let order = x.trunc_order().min(y.trunc_order());
    x.eq_to(y, order).unwrap()
}
