//! The concrete algebras: affine Borel-type subalgebras at generic `q`,
//! their semi-classical limits, and `U(sl_n)`.

mod affine;
mod classical;
mod qtest;

pub use affine::{
    d2, d3, d3_chevalley, d3_chevalley_with, d3_derived, D3_ORDER, D3_RULES, EMA_PREFACTOR,
    EMB_PREFACTOR,
};
pub(crate) use classical::d_entry;
pub use classical::{f2bar, f3bar, f3bar_table, usl, F3BAR_RULES};
pub use qtest::{five_term_algebra, line, qplane};

use crate::ncalg::{NcError, NcPoly, Presentation};
use crate::scalars::{Coeff, ZetaSeries};

/// `Σ c_i w_i` from `(coefficient, word)` pairs, normal-ordered.
pub fn poly<C: Coeff>(
    p: &Presentation<C>,
    terms: &[(C, &str)],
    order: usize,
) -> Result<NcPoly<C>, NcError> {
    let mut acc = NcPoly::zero(1, order);
    for (c, w) in terms {
        let letters = p.parse_word(w)?;
        acc = acc.add(&NcPoly::from_letters(
            p,
            &letters,
            ZetaSeries::constant(c.clone(), order),
        )?)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::{check_local_confluence, render_rules};

    /// Rewrites the shipped data files from their sources; run with `--ignored`.
    #[test]
    #[ignore]
    fn regenerate_data_files() {
        let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/data");
        std::fs::write(
            format!("{dir}/d3.rules"),
            render_rules(&d3_derived(6).unwrap()),
        )
        .unwrap();
        std::fs::write(
            format!("{dir}/f3bar.rules"),
            render_rules(&f3bar_table().unwrap()),
        )
        .unwrap();
    }

    #[test]
    fn shipped_tables_match_sources() {
        assert_eq!(render_rules(&d3().unwrap()), D3_RULES);
        assert_eq!(render_rules(&f3bar().unwrap()), F3BAR_RULES);
        assert_eq!(F3BAR_RULES, render_rules(&f3bar_table().unwrap()));
    }

    #[test]
    fn shipped_presentations_are_confluent() {
        for p in [
            usl(3).unwrap(),
            usl(4).unwrap(),
            f2bar().unwrap(),
            f3bar().unwrap(),
        ] {
            assert!(p.missing_rules().is_empty(), "{}", p.name());
            assert_eq!(
                check_local_confluence(&p, 3).unwrap(),
                vec![],
                "{}",
                p.name()
            );
        }
        for p in [d2().unwrap(), d3().unwrap()] {
            assert!(p.missing_rules().is_empty(), "{}", p.name());
            assert_eq!(
                check_local_confluence(&p, 3).unwrap(),
                vec![],
                "{}",
                p.name()
            );
        }
    }
}
