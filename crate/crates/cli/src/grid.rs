use nilrad::exact::{frac, int, Rational};
use nilrad::families::{FamilyKind, FamilyLabel, FieldTag};

fn s6_vectors(n: usize) -> Vec<Vec<Rational>> {
    let len = n - 3;
    let mut out = Vec::new();
    for j in 0..len {
        let mut a = vec![int(0); len];
        a[j] = int(1);
        out.push(a);
    }
    out.push((0..len).map(|j| int([2, -1, 3, 0, -2][j % 5])).collect());
    out.push((0..len).map(|j| frac(j as i64 - 1, 2)).collect());
    out.retain(|a| a.iter().any(|x| *x != int(0)));
    out
}

/// Every family for n = 4..=n_max: the nilradical, S1 over beta in -3..5
/// and 1/2 (excluded values skipped), the parameter-free families, and a few
/// S6 vectors read over both fields.
pub fn cells(n_max: usize) -> Vec<(FamilyLabel, FieldTag)> {
    let mut cells = Vec::new();
    for n in 4..=n_max {
        cells.push((FamilyLabel::nilradical(n).expect("n >= 4"), FieldTag::Real));
        for beta in (-3..=5).map(int).chain([frac(1, 2)]) {
            match FamilyLabel::s1(n, beta) {
                Ok(l) if l.kind() == FamilyKind::S1 => cells.push((l, FieldTag::Real)),
                _ => {}
            }
        }
        for kind in [FamilyKind::S2, FamilyKind::S3, FamilyKind::S4, FamilyKind::S5, FamilyKind::Snp2] {
            cells.push((FamilyLabel::simple(kind, n).expect("n >= 4"), FieldTag::Real));
        }
        for a in s6_vectors(n) {
            let raw = FamilyLabel::s6(n, a).expect("nonzero vector");
            for field in [FieldTag::Real, FieldTag::Complex] {
                cells.push((raw.canonicalize(field).unwrap_or_else(|_| raw.clone()), field));
            }
        }
    }
    cells
}
