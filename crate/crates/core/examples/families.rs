//! Closed forms against direct evaluation for paths, stars, complete graphs
//! and the degree-balanced trees TB_{n,k}.
//!
//! ```bash
//! cargo run --example families
//! ```

use augecc::families::{
    balance_class, closed_form_value, closed_form_value_as_printed, make_family, tb_third, FamilyKind,
};
use augecc::index::{display_exact, index_value, IndexKind};

fn main() -> augecc::Result<()> {
    println!("{:>4} {:>14} {:>26} {:>26}", "n", "family", "closed form", "computed");
    for n in [6, 8, 12, 16, 20] {
        let mut kinds = vec![
            FamilyKind::Path,
            FamilyKind::Star,
            FamilyKind::Complete,
            FamilyKind::DegreeBalanced(tb_third(n)),
        ];
        if n % 2 == 0 {
            kinds.push(FamilyKind::DegreeBalanced(n / 2));
        }
        for kind in kinds {
            let Ok(closed) = closed_form_value(kind, n) else {
                continue;
            };
            let computed = index_value(&make_family(kind, n)?, IndexKind::Augmented)?;
            assert_eq!(closed, computed);
            println!(
                "{n:>4} {:>14} {:>26} {:>26}",
                kind.to_string(),
                display_exact(&closed),
                display_exact(&computed)
            );
        }
    }

    // n = 3k − 1: the printed constant −1/2 disagrees with direct evaluation
    for n in [8, 11, 14] {
        let kind = FamilyKind::DegreeBalanced(tb_third(n));
        let computed = index_value(&make_family(kind, n)?, IndexKind::Augmented)?;
        println!(
            "TB_{{{n},{}}} ({:?}): computed {computed}, corrected form {}, printed form {}",
            tb_third(n),
            balance_class(n, tb_third(n))?,
            closed_form_value(kind, n)?,
            closed_form_value_as_printed(kind, n)?
        );
    }
    Ok(())
}
