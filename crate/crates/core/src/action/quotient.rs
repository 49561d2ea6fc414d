//! The quotient maps `pi_N`: `y -> y`, `r_n -> r_n` for `n <= N` and
//! `r_n -> e` for `n > N`, and the closed forms of `(id (x) pi_N)` applied to
//! the action on the generators.

use serde::Serialize;

use super::gaop::GAOperator;
use super::rep::EquivariantRep;
use super::unitary::{ad_u, build_u};
use crate::error::{Error, Result};
use crate::freeprod::{Generator, GroupAlgebraElement, Word};
use crate::podles::{
    block_function, build_pi, build_projections, build_tau, full_index, pseudo_power, BlockOperator, Leg,
    TruncationConfig,
};

/// Eigenvalues of `A - A^2 + c` at or below this are treated as zero by the
/// inverse powers.
const SPECTRAL_FLOOR: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct QuotientMorphism {
    cutoff: u32,
}

impl QuotientMorphism {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidConfig("quotient cutoff must be at least 1".into()));
        }
        let cutoff = u32::try_from(n).map_err(|_| Error::InvalidConfig(format!("quotient cutoff {n} too large")))?;
        Ok(QuotientMorphism { cutoff })
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff as usize
    }

    /// `pi_N o pi_N' = pi_min(N, N')`.
    pub fn compose(&self, other: &QuotientMorphism) -> QuotientMorphism {
        QuotientMorphism {
            cutoff: self.cutoff.min(other.cutoff),
        }
    }

    pub fn apply_word(&self, w: &Word) -> Word {
        w.substitute(|s| match s.generator {
            Generator::R(k) if k > self.cutoff => Word::identity(),
            Generator::R(k) => Word::r_pow(k, s.exponent),
            Generator::Y => Word::y(),
        })
    }

    pub fn apply(&self, a: &GroupAlgebraElement) -> GroupAlgebraElement {
        a.map_words(|w| self.apply_word(w))
    }

    /// `(id (x) pi_N)` applied entrywise.
    pub fn apply_operator(&self, x: &GAOperator) -> GAOperator {
        x.map_entries(|a| self.apply(a))
    }
}

fn ga(w: Word) -> GroupAlgebraElement {
    GroupAlgebraElement::from_word(w)
}

/// `1/(2 l+) {l+ (1 + s) + l- (1 - s)}` (leg `+`) or
/// `1/(2 l-) {l+ (1 - s) + l- (1 + s)}` (leg `-`) for a given `s`.
fn a_coefficient(cfg: &TruncationConfig, leg: Leg, s: &GroupAlgebraElement) -> GroupAlgebraElement {
    let (lp, lm) = (cfg.lambda_plus(), cfg.lambda_minus());
    let e = GroupAlgebraElement::one();
    let (plus, minus) = (&e + s, &e - s);
    match leg {
        Leg::Plus => (&plus.scale_real(lp) + &minus.scale_real(lm)).scale_real(0.5 / lp),
        Leg::Minus => (&minus.scale_real(lp) + &plus.scale_real(lm)).scale_real(0.5 / lm),
    }
}

/// The four-summand form of `(id (x) pi_N) alpha(A)`: for `n <= N` the
/// coefficients of `A P_n`, `A Q_n` use `s = r_n y r_n^{-1}`, for `n > N`
/// they use `s = y`.
pub fn quotient_alpha_a_four_summands(cfg: &TruncationConfig, n_cut: usize) -> Result<GAOperator> {
    cfg.validate()?;
    let m = cfg.m;
    let mut out = GAOperator::zeros(m);
    for n in 0..m {
        let s = if n <= n_cut {
            ga(Word::r(n as u32).mul(&Word::y()).mul(&Word::r_pow(n as u32, -1)))
        } else {
            ga(Word::y())
        };
        for leg in Leg::BOTH {
            let i = full_index(m, leg, n);
            out.set(i, i, a_coefficient(cfg, leg, &s).scale_real(cfg.a_eigenvalue(leg, n)));
        }
    }
    Ok(out)
}

/// `P_+ (1 - sum_{n in range} P_n)` on leg `+`, or the analogue with `Q_n` on
/// leg `-`.
fn leg_tail_projection(cfg: &TruncationConfig, leg: Leg, range: std::ops::RangeInclusive<usize>) -> Result<BlockOperator> {
    let mut t = BlockOperator::identity(cfg.m).compress_to(leg);
    for n in range {
        if n < cfg.m {
            let (p, q) = build_projections(cfg, n)?;
            t = &t - &(match leg {
                Leg::Plus => p,
                Leg::Minus => q,
            });
        }
    }
    Ok(t)
}

/// The same operator with the summands `n > N` collapsed into tail terms:
/// the first two summands plus
/// `A P_+ (1 - sum_{n=0}^N P_n) (x) a^+(y) + A P_- (1 - sum_{n=0}^N Q_n) (x) a^-(y)`.
pub fn quotient_alpha_a_collapsed(cfg: &TruncationConfig, n_cut: usize) -> Result<GAOperator> {
    cfg.validate()?;
    let m = cfg.m;
    let a = build_pi(cfg)?.a;
    let mut out = GAOperator::zeros(m);
    for n in 0..=n_cut.min(m - 1) {
        let s = ga(Word::r(n as u32).mul(&Word::y()).mul(&Word::r_pow(n as u32, -1)));
        for leg in Leg::BOTH {
            let i = full_index(m, leg, n);
            out.set(i, i, a_coefficient(cfg, leg, &s).scale_real(cfg.a_eigenvalue(leg, n)));
        }
    }
    let y = ga(Word::y());
    for leg in Leg::BOTH {
        let tail = &a * &leg_tail_projection(cfg, leg, 0..=n_cut)?;
        out = out.add(&GAOperator::tensor(&tail, &a_coefficient(cfg, leg, &y)));
    }
    Ok(out)
}

/// Operators predicted for the tail `n >= N + 2` of `(id (x) pi_N) alpha(B)`,
/// split by leg and by the coefficient of `e` and of `y`.
#[derive(Clone, Debug)]
pub struct BTailPrediction {
    pub plus_e: BlockOperator,
    pub plus_y: BlockOperator,
    pub minus_e: BlockOperator,
    pub minus_y: BlockOperator,
}

/// With `F = A - A^2 + c`, `rho_+ = l-/l+`, `rho_- = l+/l-` and
/// `T_+ = P_+(1 - sum_{n=1}^{N+1} P_n)`, `T_- = P_-(1 - sum_{n=1}^{N+1} Q_n)`:
///
/// `e`-part on leg `pm`: `1/2 B T [F^{-1/2} + F^{-1} (rho A - (rho A)^2 + c)^{1/2}] F^{1/2}`,
/// `y`-part on leg `pm`: `1/2 B T [F^{-1/2} - F^{-1} (rho A - (rho A)^2 + c)^{1/2}] F^{1/2}`.
///
/// On `e_n` of leg `+` this is `(s+ +- s-)/(2 s+)`, with `s_pm = c_pm(n)^(1/2)`.
pub fn quotient_alpha_b_tail(cfg: &TruncationConfig, n_cut: usize) -> Result<BTailPrediction> {
    let g = build_pi(cfg)?;
    let m = cfg.m;
    let id = BlockOperator::identity(m);
    let quad = |x: &BlockOperator| &(x - &(x * x)) + &id.scale_real(cfg.c);
    let f = quad(&g.a);
    let f_inv_half = block_function(&f, pseudo_power(-0.5, SPECTRAL_FLOOR));
    let f_inv = block_function(&f, pseudo_power(-1.0, SPECTRAL_FLOOR));
    let f_half = block_function(&f, pseudo_power(0.5, SPECTRAL_FLOOR));
    let part = |leg: Leg| -> Result<(BlockOperator, BlockOperator)> {
        let rho = match leg {
            Leg::Plus => cfg.lambda_minus() / cfg.lambda_plus(),
            Leg::Minus => cfg.lambda_plus() / cfg.lambda_minus(),
        };
        let other = block_function(&quad(&g.a.scale_real(rho)), pseudo_power(0.5, SPECTRAL_FLOOR));
        let t = leg_tail_projection(cfg, leg, 1..=n_cut + 1)?;
        let second = &f_inv * &other;
        let bt = (&g.b * &t).scale_real(0.5);
        let e_part = &(&bt * &(&f_inv_half + &second)) * &f_half;
        let y_part = &(&bt * &(&f_inv_half - &second)) * &f_half;
        Ok((e_part, y_part))
    };
    let (plus_e, plus_y) = part(Leg::Plus)?;
    let (minus_e, minus_y) = part(Leg::Minus)?;
    Ok(BTailPrediction {
        plus_e,
        plus_y,
        minus_e,
        minus_y,
    })
}

/// `(id (x) pi_N) alpha(tau)`: coefficient `r_{n-1} r_n^{-1}` for `n <= N`,
/// `r_N` at `n = N + 1` and `e` beyond.
pub fn quotient_alpha_tau(m: usize, n_cut: usize) -> GAOperator {
    let mut out = GAOperator::zeros(m);
    for n in 1..m {
        let w = if n <= n_cut {
            Word::r(n as u32 - 1).mul(&Word::r_pow(n as u32, -1))
        } else if n == n_cut + 1 {
            Word::r(n_cut as u32)
        } else {
            Word::identity()
        };
        for leg in Leg::BOTH {
            out.set(full_index(m, leg, n - 1), full_index(m, leg, n), ga(w.clone()));
        }
    }
    out
}

/// Residuals of the quotient checks at one cutoff, each the largest l1
/// distance between entries over interior columns.
#[derive(Clone, Debug, Serialize)]
pub struct QuotientReport {
    pub cutoff: usize,
    pub alpha_a_four_summands: f64,
    pub alpha_a_collapsed: f64,
    /// Tail of `alpha(B)`: `[plus_e, plus_y, minus_e, minus_y]`, over columns
    /// `N + 2 <= n <= m - buffer`.
    pub alpha_b_tail: [f64; 4],
    /// Largest coefficient of words other than `e` and `y` in the `B` tail.
    pub alpha_b_tail_other_words: f64,
    pub alpha_tau: f64,
}

impl QuotientReport {
    pub fn max_residual(&self) -> f64 {
        self.alpha_b_tail
            .iter()
            .copied()
            .chain([
                self.alpha_a_four_summands,
                self.alpha_a_collapsed,
                self.alpha_b_tail_other_words,
                self.alpha_tau,
            ])
            .fold(0.0, f64::max)
    }
}

/// Compares `(id (x) pi_N)` of the brute-force `ad_U(A)`, `ad_U(B)`,
/// `ad_U(tau)` with the closed forms above.
pub fn verify_quotient(rep: &EquivariantRep, cfg: &TruncationConfig, n_cut: usize) -> Result<QuotientReport> {
    cfg.validate()?;
    let pi_n = QuotientMorphism::new(n_cut)?;
    let m = cfg.m;
    let top = cfg.interior_max();
    let interior = |_: Leg, n: usize| n <= top;
    let u = build_u(rep, m)?;
    let g = build_pi(cfg)?;

    let qa = pi_n.apply_operator(&ad_u(&g.a, &u));
    let four = quotient_alpha_a_four_summands(cfg, n_cut)?;
    let collapsed = quotient_alpha_a_collapsed(cfg, n_cut)?;

    let qb = pi_n.apply_operator(&ad_u(&g.b, &u));
    let pred = quotient_alpha_b_tail(cfg, n_cut)?;
    let (e_w, y_w) = (Word::identity(), Word::y());
    let (qb_e, qb_y) = (qb.word_component(&e_w), qb.word_component(&y_w));
    let tail_cols = |leg: Leg, x: &BlockOperator| -> f64 {
        (n_cut + 2..=top.min(m - 1))
            .map(|n| x.column(leg, n).norm())
            .fold(0.0, f64::max)
    };
    let alpha_b_tail = [
        tail_cols(Leg::Plus, &(&qb_e - &pred.plus_e)),
        tail_cols(Leg::Plus, &(&qb_y - &pred.plus_y)),
        tail_cols(Leg::Minus, &(&qb_e - &pred.minus_e)),
        tail_cols(Leg::Minus, &(&qb_y - &pred.minus_y)),
    ];
    let mut other = 0.0f64;
    for (i, j, a) in qb.entries() {
        let (_, n) = crate::podles::split_index(m, j);
        let _ = i;
        if n < n_cut + 2 || n > top {
            continue;
        }
        for (w, c) in a.terms() {
            if *w != e_w && *w != y_w {
                other = other.max(c.norm());
            }
        }
    }

    let qt = pi_n.apply_operator(&ad_u(&build_tau(cfg), &u));
    Ok(QuotientReport {
        cutoff: n_cut,
        alpha_a_four_summands: qa.max_diff_on_columns(&four, interior),
        alpha_a_collapsed: qa.max_diff_on_columns(&collapsed, interior),
        alpha_b_tail,
        alpha_b_tail_other_words: other,
        alpha_tau: qt.max_diff_on_columns(&quotient_alpha_tau(m, n_cut), interior),
    })
}
