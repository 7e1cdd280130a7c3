//! Exact negative semidefiniteness with checkable witnesses.

use mason_clc::{is_negative_semidefinite, SymmetricMatrix};

fn main() {
    let cases: [&[&[i64]]; 5] = [
        &[&[-1, 0], &[0, -2]],
        &[&[1, 0], &[0, -1]],
        &[&[-2, -2, 1], &[-2, -2, 1], &[1, 1, -2]],
        &[&[0, 1], &[1, 0]],
        &[&[-1, 2, 0], &[2, -4, 1], &[0, 1, -1]],
    ];
    for rows in cases {
        let q = SymmetricMatrix::from_int_rows(rows).expect("symmetric");
        let verdict = is_negative_semidefinite(&q);
        match verdict.witness() {
            None => println!("{q:?}: negative semidefinite"),
            Some(v) => {
                let value = q.quadratic_form(v);
                let shown: Vec<String> = v.iter().map(ToString::to_string).collect();
                println!("{q:?}: indefinite, v = {shown:?}, vᵀQv = {value}");
            }
        }
    }
}
