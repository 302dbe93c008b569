//! The sixteen simple modules of `rep(Λ_h + Λ_i)` for the `B_2` Cartan datum
//! (`a_hi = −1`, `a_ih = −2`), their characters and jump values, and the
//! crystal graph they span.

use serde::Serialize;

use crate::cartan::{CartanDatum, WeightH};
use crate::error::CharError;
use crate::klr::{
    char_lcal, char_lin, eps, etilde_top, in_rep, jump, phi_lambda, qshuffle, serre_clean, GradedChar, LaurentPoly,
};

pub const H: usize = 0;
pub const I: usize = 1;

/// Arrows of the drawn crystal graph: `(source, target, colour, thick)`.
pub const FIGURE_ARROWS: [(usize, usize, usize, bool); 18] = [
    (0, 1, I, true),
    (0, 2, H, true),
    (1, 3, H, false),
    (2, 4, I, false),
    (3, 5, I, false),
    (3, 6, H, true),
    (4, 7, I, false),
    (5, 8, H, true),
    (6, 8, I, false),
    (7, 9, H, false),
    (7, 10, I, true),
    (8, 11, I, false),
    (9, 12, I, true),
    (10, 12, H, false),
    (11, 13, I, false),
    (12, 14, H, false),
    (13, 15, H, false),
    (14, 15, I, false),
];

#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub name: String,
    pub character: GradedChar,
    /// `(jump_i, jump_h)` as printed.
    pub expected_jump: (i64, i64),
}

/// The catalog in drawing order: the unit first, then row by row.
pub fn build_catalog() -> Result<Vec<CatalogEntry>, CharError> {
    let cd = CartanDatum::rank2_appendix();
    let n = cd.n();
    let sh = |a: &GradedChar, b: &GradedChar| qshuffle(&cd, a, b);
    let li = char_lin(&cd, I, 1);
    let lh = char_lin(&cd, H, 1);
    // L(i h) and L(h i) are single strings of length one.
    let lih = char_lcal(&cd, I, H, 1, 0)?;
    let lhi = char_lcal(&cd, H, I, 1, 0)?;
    let lihi = char_lcal(&cd, I, H, 2, 1)?;
    let lhii = char_lcal(&cd, I, H, 2, 2)?;
    let fh_lhii = GradedChar::word_with(n, &[H, I, I, H], LaurentPoly::from_terms([(1, 0), (1, 2 * cd.d(I))]));
    let rows: Vec<(&str, GradedChar, (i64, i64))> = vec![
        ("1", GradedChar::unit(n), (0, 0)),
        ("L(i)", li.clone(), (0, 1)),
        ("L(h)", lh.clone(), (2, 0)),
        ("L(ih)", lih.clone(), (1, 0)),
        ("L(hi)", lhi.clone(), (1, 0)),
        ("L(ihi)", lihi.clone(), (0, 0)),
        ("ind L(ih)⊠L(h)", sh(&lih, &lh), (3, 0)),
        ("L(hii)", lhii.clone(), (0, 1)),
        ("ind L(ihi)⊠L(h)", sh(&lihi, &lh), (2, 0)),
        ("f̃_h L(hii)", fh_lhii.clone(), (0, 0)),
        ("ind L(hii)⊠L(i)", sh(&lhii, &li), (0, 2)),
        ("ind L(ihi)⊠L(hi)", sh(&lihi, &lhi), (1, 0)),
        ("ind f̃_h L(hii)⊠L(i)", sh(&fh_lhii, &li), (0, 1)),
        ("ind L(ihi)⊠L(hii)", sh(&lihi, &lhii), (0, 1)),
        ("ind f̃_h L(hii)⊠L(ih)", sh(&fh_lhii, &lih), (1, 0)),
        ("ind f̃_h L(hii)⊠L(ihi)", sh(&fh_lhii, &lihi), (0, 0)),
    ];
    Ok(rows
        .into_iter()
        .map(|(name, character, expected_jump)| CatalogEntry { name: name.into(), character, expected_jump })
        .collect())
}

fn depth(c: &GradedChar) -> i64 {
    c.content().map(|v| v.height()).unwrap_or(0)
}

#[derive(Clone, Debug, Serialize)]
pub struct Row {
    pub name: String,
    pub character: String,
    pub depth: i64,
    pub jump_i: i64,
    pub jump_h: i64,
    pub expected: (i64, i64),
    pub in_rep: bool,
    pub serre_clean: bool,
    pub phi_nonnegative: bool,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ArrowCheck {
    pub source: String,
    pub target: String,
    pub colour: char,
    pub thick: bool,
    pub pass: bool,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AppendixReport {
    pub rows: Vec<Row>,
    pub max_depth: i64,
    pub jump_matches: usize,
    pub arrows: Vec<ArrowCheck>,
    /// Arrows derived from characters alone, `(source, target, colour)`.
    pub derived_arrows: Vec<(usize, usize, usize)>,
    pub graph_matches: bool,
}

impl AppendixReport {
    pub fn passed(&self) -> bool {
        self.rows.len() == 16
            && self.rows.iter().all(|r| r.pass)
            && self.max_depth == 7
            && self.jump_matches == 32
            && self.arrows.iter().all(|a| a.pass)
            && self.graph_matches
    }
}

fn colour_name(j: usize) -> char {
    if j == H {
        'h'
    } else {
        'i'
    }
}

/// Jump table, membership, Serre annihilation, `φ ≥ 0`.
pub fn verify_jump_table(cat: &[CatalogEntry]) -> Result<Vec<Row>, CharError> {
    let cd = CartanDatum::rank2_appendix();
    let lambda = WeightH(vec![1, 1]);
    cat.iter()
        .map(|e| {
            let c = &e.character;
            let jump_i = jump(&cd, c, I)?;
            let jump_h = jump(&cd, c, H)?;
            let in_rep = in_rep(c, &lambda)?;
            let serre_clean = serre_clean(&cd, c)?;
            let mut phi_nonnegative = true;
            for j in [H, I] {
                phi_nonnegative &= phi_lambda(&cd, c, &lambda, j)? >= 0;
            }
            let pass = (jump_i, jump_h) == e.expected_jump && in_rep && serre_clean && phi_nonnegative;
            Ok(Row {
                name: e.name.clone(),
                character: c.to_text(),
                depth: depth(c),
                jump_i,
                jump_h,
                expected: e.expected_jump,
                in_rep,
                serre_clean,
                phi_nonnegative,
                pass,
            })
        })
        .collect()
}

/// Thick arrows: `jump_j(M) = 0` and `Char M′ = Char M ⧢ [j]`. Thin arrows:
/// `ε_j` goes up by one.
pub fn verify_thick_arrows(cat: &[CatalogEntry]) -> Result<Vec<ArrowCheck>, CharError> {
    let cd = CartanDatum::rank2_appendix();
    let n = cd.n();
    let mut out = vec![];
    for &(s, t, j, thick) in &FIGURE_ARROWS {
        let (m, m2) = (&cat[s].character, &cat[t].character);
        let detail = if thick {
            let jv = jump(&cd, m, j)?;
            let ind = qshuffle(&cd, m, &GradedChar::word(n, &[j]));
            if jv != 0 {
                Some(format!("jump_{} = {jv}", colour_name(j)))
            } else if !ind.eq_up_to_shift(m2) {
                Some("target is not the induced module".to_string())
            } else {
                None
            }
        } else {
            let (a, b) = (eps(m, j)?, eps(m2, j)?);
            (b != a + 1).then(|| format!("ε_{} goes {a} → {b}", colour_name(j)))
        };
        out.push(ArrowCheck {
            source: cat[s].name.clone(),
            target: cat[t].name.clone(),
            colour: colour_name(j),
            thick,
            pass: detail.is_none(),
            detail,
        });
    }
    Ok(out)
}

/// `M → M′` in colour `j` when both lie on the same `j`-string (equal
/// `ẽ_j^max` up to shift) and `ε_j(M′) = ε_j(M) + 1`.
pub fn derive_arrows(cat: &[CatalogEntry]) -> Result<Vec<(usize, usize, usize)>, CharError> {
    let cd = CartanDatum::rank2_appendix();
    let mut tops = vec![];
    for e in cat {
        tops.push([etilde_top(&cd, &e.character, H)?, etilde_top(&cd, &e.character, I)?]);
    }
    let mut out = vec![];
    for s in 0..cat.len() {
        for t in 0..cat.len() {
            for j in [H, I] {
                let (ms, ts) = &tops[s][j];
                let (mt, tt) = &tops[t][j];
                if *mt == ms + 1 && ts.eq_up_to_shift(tt) {
                    out.push((s, t, j));
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

pub fn appendix_suite() -> Result<AppendixReport, CharError> {
    let cat = build_catalog()?;
    let rows = verify_jump_table(&cat)?;
    let max_depth = rows.iter().map(|r| r.depth).max().unwrap_or(0);
    let jump_matches = rows
        .iter()
        .map(|r| usize::from(r.jump_i == r.expected.0) + usize::from(r.jump_h == r.expected.1))
        .sum();
    let arrows = verify_thick_arrows(&cat)?;
    let derived_arrows = derive_arrows(&cat)?;
    let mut drawn: Vec<_> = FIGURE_ARROWS.iter().map(|&(s, t, j, _)| (s, t, j)).collect();
    drawn.sort();
    let graph_matches = drawn == derived_arrows;
    Ok(AppendixReport { rows, max_depth, jump_matches, arrows, derived_arrows, graph_matches })
}

#[derive(Clone, Debug, Serialize)]
pub struct JumpAnchor {
    pub i: usize,
    pub j: usize,
    pub c: i64,
    pub n: i64,
    pub jump: i64,
    pub expected: i64,
}

/// `jump_i(L(i^{c−n} j i^n)) = −a_ij − c` over every legal `(c, n)`.
pub fn lcal_jump_anchors(cd: &CartanDatum) -> Result<Vec<JumpAnchor>, CharError> {
    let mut out = vec![];
    for i in 0..cd.n() {
        for j in (0..cd.n()).filter(|&j| j != i) {
            for c in 0..=-cd.a(i, j) {
                for n in 0..=c {
                    let ch = char_lcal(cd, i, j, c, n)?;
                    out.push(JumpAnchor { i, j, c, n, jump: jump(cd, &ch, i)?, expected: -cd.a(i, j) - c });
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exceptional_character_is_verbatim() {
        let cat = build_catalog().unwrap();
        let e = &cat[9];
        assert_eq!(e.name, "f̃_h L(hii)");
        assert_eq!(e.character.coeff(&[H, I, I, H]), LaurentPoly::from_terms([(1, 0), (1, 2)]));
        assert_eq!(e.character.dim(), 2);
    }

    #[test]
    fn lhii_closed_form() {
        let cd = CartanDatum::rank2_appendix();
        let cat = build_catalog().unwrap();
        assert_eq!(cat[7].character.coeff(&[H, I, I]), LaurentPoly::qfact(2, cd.d(I)));
    }

    #[test]
    fn induced_entry_is_shuffle() {
        let cd = CartanDatum::rank2_appendix();
        let cat = build_catalog().unwrap();
        let expect = qshuffle(&cd, &cat[3].character, &cat[2].character);
        assert_eq!(cat[6].character, expect);
    }

    #[test]
    fn anchors_small() {
        let cd = CartanDatum::rank2_appendix();
        let cat = build_catalog().unwrap();
        assert_eq!(jump(&cd, &cat[2].character, I).unwrap(), 2);
        assert_eq!(jump(&cd, &cat[2].character, H).unwrap(), 0);
        assert_eq!(jump(&cd, &cat[1].character, H).unwrap(), -cd.a(H, I));
        assert!(lcal_jump_anchors(&cd).unwrap().iter().all(|a| a.jump == a.expected));
    }

    #[test]
    fn full_suite() {
        let rep = appendix_suite().unwrap();
        for r in &rep.rows {
            assert!(r.pass, "{r:?}");
        }
        for a in &rep.arrows {
            assert!(a.pass, "{a:?}");
        }
        assert_eq!(rep.max_depth, 7);
        assert!(rep.graph_matches, "{:?}", rep.derived_arrows);
        assert!(rep.passed());
    }
}
