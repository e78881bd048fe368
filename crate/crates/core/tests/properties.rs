mod common;

use common::SEED;

macro_rules! suite {
    ($($name:ident),* $(,)?) => {
        $(
            #[test]
            fn $name() {
                if let Err(e) = common::$name(SEED) {
                    panic!("{e}");
                }
            }
        )*
    };
}

suite!(
    leibniz_polynomial,
    leibniz_rational_function,
    leibniz_log_polynomial,
    rref_idempotent,
    rank_matches_minors,
    gcd_divides,
    field_inverse,
    structure_matrix_antisymmetric_even_rank,
    eigenvalue_law,
    xi_structure,
);
