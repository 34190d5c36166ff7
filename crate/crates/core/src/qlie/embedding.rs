use std::collections::BTreeSet;

use super::vector::{Basis, QLieVector};
use super::QLieError;
use crate::pbw::{ad_apply, casimir, casimir_word, AdLetter, AdWord, AlgElement, Monomial};
use crate::scalar::ExtScalar;

/// A concrete copy of `(sl2)_h` inside `U_q(sl2)`: the images of the three
/// basis elements, the adjoint operators of those images, and the Casimir
/// polynomial `p(C)` the images are multiplied by.
#[derive(Clone, Debug, PartialEq)]
pub struct Embedding {
    images: [AlgElement; 3],
    ad_words: [AdWord; 3],
    twist: Vec<ExtScalar>,
}

impl Embedding {
    /// `X^±_h = s K^-1 X^±`, `H_h = 2/(q + q^-1) (q X^+ X^- - q^-1 X^- X^+)`.
    pub fn standard() -> Embedding {
        use AdLetter::*;
        let s = ExtScalar::s();
        let sigma = ExtScalar::sigma();
        let q = ExtScalar::q();
        let qi = ExtScalar::q_pow(-1);

        let xp = (&AlgElement::k_inv() * &AlgElement::e()).scale(&s);
        let xm = (&AlgElement::k_inv() * &AlgElement::f()).scale(&s);
        let ef = &AlgElement::e() * &AlgElement::f();
        let fe = &AlgElement::f() * &AlgElement::e();
        let h = (&ef.scale(&q) - &fe.scale(&qi)).scale(&sigma);

        let wp = AdWord::word(s.clone(), vec![KInv, E]);
        let wm = AdWord::word(s, vec![KInv, F]);
        let mut wh = AdWord::word(&sigma * &q, vec![E, F]);
        wh.push(-(&sigma * &qi), vec![F, E]);

        Embedding { images: [xp, xm, h], ad_words: [wp, wm, wh], twist: vec![ExtScalar::one()] }
    }

    /// The standard images right-multiplied by `p(C) = sum_i p_i C^i`.
    pub fn twisted(p: &[ExtScalar]) -> Result<Embedding, QLieError> {
        let sum = p.iter().fold(ExtScalar::zero(), |acc, c| &acc + c);
        if !sum.is_one() {
            return Err(QLieError::TwistSum(sum));
        }
        let c = casimir();
        let cw = casimir_word();
        let mut pc = AlgElement::zero();
        let mut pw = AdWord::zero();
        let mut c_pow = AlgElement::one();
        let mut w_pow = AdWord::identity();
        for (i, coeff) in p.iter().enumerate() {
            if i > 0 {
                c_pow = &c_pow * &c;
                w_pow = w_pow.compose(&cw);
            }
            pc.add_scaled(&c_pow, coeff);
            pw = pw.add(&w_pow.scale(coeff));
        }
        let base = Embedding::standard();
        let images = base.images.map(|x| &x * &pc);
        let ad_words = base.ad_words.map(|w| w.compose(&pw));
        let e = Embedding { images, ad_words, twist: p.to_vec() };
        e.check_independent()?;
        Ok(e)
    }

    pub fn image(&self, b: Basis) -> &AlgElement {
        &self.images[b.index()]
    }

    pub fn images(&self) -> &[AlgElement; 3] {
        &self.images
    }

    pub fn ad_word(&self, b: Basis) -> &AdWord {
        &self.ad_words[b.index()]
    }

    pub fn twist(&self) -> &[ExtScalar] {
        &self.twist
    }

    /// `sum_i v_i image_i`
    pub fn embed(&self, v: &QLieVector) -> AlgElement {
        let mut out = AlgElement::zero();
        for (b, c) in v.terms() {
            out.add_scaled(self.image(b), c);
        }
        out
    }

    /// The adjoint operator of the embedded vector.
    pub fn ad_of(&self, v: &QLieVector) -> AdWord {
        v.terms()
            .fold(AdWord::zero(), |acc, (b, c)| acc.add(&self.ad_word(b).scale(c)))
    }

    fn check_independent(&self) -> Result<(), QLieError> {
        let sol = Solver::new(&self.images, &AlgElement::zero());
        if sol.rank < 3 {
            return Err(QLieError::DependentImages);
        }
        Ok(())
    }

    /// Exact coordinates of `u` over the images.
    pub fn decompose(&self, u: &AlgElement) -> Result<QLieVector, QLieError> {
        let sol = Solver::new(&self.images, u);
        if sol.rank < 3 {
            return Err(QLieError::DependentImages);
        }
        let v = sol.coords;
        let residual = u - &self.embed(&v);
        if !residual.is_zero() {
            return Err(QLieError::NotInSpan { residual });
        }
        Ok(v)
    }

    /// Quantum Lie bracket `[a, b]_h = ad_a(b)`, decomposed over the images.
    pub fn bracket(&self, a: &QLieVector, b: &QLieVector) -> Result<QLieVector, QLieError> {
        let u = ad_apply(&self.ad_of(a), &self.embed(b));
        self.decompose(&u).map_err(|e| match e {
            QLieError::NotInSpan { residual } => QLieError::ClosureViolation {
                left: a.clone(),
                right: b.clone(),
                residual,
            },
            other => other,
        })
    }
}

/// Gaussian elimination of `[img_0 img_1 img_2 | u]` with one row per PBW
/// monomial. Pivots are taken from the lowest monomial (lexicographic) that
/// has a nonzero entry in the column.
struct Solver {
    rank: usize,
    coords: QLieVector,
}

impl Solver {
    fn new(images: &[AlgElement; 3], u: &AlgElement) -> Solver {
        let monomials: BTreeSet<Monomial> = images
            .iter()
            .chain(std::iter::once(u))
            .flat_map(|x| x.terms().map(|(m, _)| *m))
            .collect();
        let mut rows: Vec<[ExtScalar; 4]> = monomials
            .iter()
            .map(|m| [images[0].coeff(m), images[1].coeff(m), images[2].coeff(m), u.coeff(m)])
            .collect();
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut next_row = 0;
        for col in 0..3 {
            let Some(p) = (next_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows[next_row..=p].rotate_right(1);
            let inv = rows[next_row][col].inv().expect("nonzero pivot");
            let pivot_row: [ExtScalar; 4] = std::array::from_fn(|k| &rows[next_row][k] * &inv);
            for (r, row) in rows.iter_mut().enumerate() {
                if r == next_row || row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone();
                for k in 0..4 {
                    row[k] = &row[k] - &(&factor * &pivot_row[k]);
                }
            }
            rows[next_row] = pivot_row;
            pivots.push((next_row, col));
            next_row += 1;
        }
        let mut coords = QLieVector::zero();
        for &(r, col) in &pivots {
            coords.coords[col] = rows[r][3].clone();
        }
        Solver { rank: pivots.len(), coords }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_images() {
        let e = Embedding::standard();
        assert_eq!(e.image(Basis::Xp), &AlgElement::term(ExtScalar::s(), Monomial::new(0, -1, 1)));
        // K^-1 F = q F K^-1
        assert_eq!(
            e.image(Basis::Xm),
            &AlgElement::term(&ExtScalar::s() * &ExtScalar::q(), Monomial::new(1, -1, 0))
        );
        assert_eq!(e.twist(), &[ExtScalar::one()]);
    }

    #[test]
    fn standard_h_image_normal_form() {
        // sigma [(q - q^-1) F E + q/(q - q^-1) K^2 - q/(q - q^-1) K^-2]
        let q = ExtScalar::q();
        let d = &q - &ExtScalar::q_pow(-1);
        let r = &q / &d;
        let sigma = ExtScalar::sigma();
        let expected: AlgElement = [
            (Monomial::new(1, 0, 1), &sigma * &d),
            (Monomial::new(0, 2, 0), &sigma * &r),
            (Monomial::new(0, -2, 0), -(&sigma * &r)),
        ]
        .into_iter()
        .collect();
        assert_eq!(Embedding::standard().image(Basis::H), &expected);
    }

    #[test]
    fn decompose_examples() {
        let e = Embedding::standard();
        assert_eq!(e.decompose(e.image(Basis::H)).unwrap(), QLieVector::basis(Basis::H));
        assert_eq!(e.decompose(&AlgElement::zero()).unwrap(), QLieVector::zero());
        match e.decompose(&casimir()) {
            Err(QLieError::NotInSpan { residual }) => assert!(!residual.is_zero()),
            other => panic!("expected NotInSpan, got {other:?}"),
        }
    }

    #[test]
    fn twist_validation() {
        assert_eq!(Embedding::twisted(&[ExtScalar::one()]).unwrap(), Embedding::standard());
        let err = Embedding::twisted(&[ExtScalar::one(), ExtScalar::one()]).unwrap_err();
        assert_eq!(err, QLieError::TwistSum(ExtScalar::from_int(2)));
    }

    #[test]
    fn ad_word_matches_image_product_rule() {
        // ad of X^+_h image applied to 1 vanishes (counit of E is 0)
        let e = Embedding::standard();
        let r = ad_apply(e.ad_word(Basis::Xp), &AlgElement::one());
        assert!(r.is_zero());
    }
}
