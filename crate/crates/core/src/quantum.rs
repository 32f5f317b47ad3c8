//! Exact two-qubit simulation for the CHSH setting.
//!
//! Basis order is `|00⟩, |01⟩, |10⟩, |11⟩` with Alice's qubit first.
//! Measurements lie in the x–z plane: `A(θ) = cos θ·Z + sin θ·X`.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::Real;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuantumError {
    #[error("state is not normalized: squared norm {0}")]
    NotNormalized(f64),
    #[error("cannot normalize the zero vector")]
    ZeroVector,
    #[error("a game needs at least one round")]
    NoRounds,
    #[error("surface grid needs at least 2 points per axis, got {0}")]
    GridTooSmall(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Qubit {
    A,
    B,
}

/// Single-qubit amplitudes `(⟨0|ψ⟩, ⟨1|ψ⟩)`.
pub type Qubit1<T> = [Complex<T>; 2];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoQubitState<T> {
    amps: [Complex<T>; 4],
}

impl<T: Real> TwoQubitState<T> {
    /// Wraps amplitudes that are already normalized.
    pub fn new(amps: [Complex<T>; 4]) -> Result<Self, QuantumError> {
        let state = TwoQubitState { amps };
        let n = state.norm_sqr();
        if (n - T::one()).abs() > T::tolerance() {
            return Err(QuantumError::NotNormalized(n.to_f64().unwrap_or(f64::NAN)));
        }
        Ok(state)
    }

    /// Rescales arbitrary amplitudes to unit norm.
    pub fn normalized(amps: [Complex<T>; 4]) -> Result<Self, QuantumError> {
        let n = amps
            .iter()
            .map(|a| a.norm_sqr())
            .fold(T::zero(), |x, y| x + y);
        if n <= T::zero() {
            return Err(QuantumError::ZeroVector);
        }
        let scale = n.sqrt().recip();
        Ok(TwoQubitState {
            amps: amps.map(|a| a * scale),
        })
    }

    /// `|ab⟩` for bits `a` (Alice) and `b` (Bob).
    pub fn basis(a: bool, b: bool) -> Self {
        let mut amps = [Complex::new(T::zero(), T::zero()); 4];
        amps[usize::from(a) * 2 + usize::from(b)] = Complex::new(T::one(), T::zero());
        TwoQubitState { amps }
    }

    /// `|a⟩ ⊗ |b⟩` for single-qubit vectors, normalized.
    pub fn product(a: [Complex<T>; 2], b: [Complex<T>; 2]) -> Result<Self, QuantumError> {
        Self::superposition_of_products(&[(a, b)])
    }

    /// `Σ |aᵢ⟩|bᵢ⟩`, normalized on construction.
    pub fn superposition_of_products(
        terms: &[(Qubit1<T>, Qubit1<T>)],
    ) -> Result<Self, QuantumError> {
        let mut amps = [Complex::new(T::zero(), T::zero()); 4];
        for (a, b) in terms {
            for i in 0..2 {
                for j in 0..2 {
                    amps[2 * i + j] = amps[2 * i + j] + a[i] * b[j];
                }
            }
        }
        Self::normalized(amps)
    }

    pub fn amplitudes(&self) -> &[Complex<T>; 4] {
        &self.amps
    }

    pub fn norm_sqr(&self) -> T {
        self.amps
            .iter()
            .map(|a| a.norm_sqr())
            .fold(T::zero(), |x, y| x + y)
    }

    /// Computational-basis weights `(P(0), P(1))` of one qubit.
    pub fn reduced_weights(&self, qubit: Qubit) -> (T, T) {
        let w: Vec<T> = self.amps.iter().map(|a| a.norm_sqr()).collect();
        match qubit {
            Qubit::A => (w[0] + w[1], w[2] + w[3]),
            Qubit::B => (w[0] + w[2], w[1] + w[3]),
        }
    }
}

fn c<T: Real>(re: T) -> Complex<T> {
    Complex::new(re, T::zero())
}

/// `(|00⟩ + |11⟩)/√2`.
pub fn bell_phi_plus<T: Real>() -> TwoQubitState<T> {
    let h = T::FRAC_1_SQRT_2();
    TwoQubitState {
        amps: [c(h), c(T::zero()), c(T::zero()), c(h)],
    }
}

/// `α|00⟩ + β|11⟩`, renormalized.
pub fn entangled_state<T: Real>(
    alpha: Complex<T>,
    beta: Complex<T>,
) -> Result<TwoQubitState<T>, QuantumError> {
    let z = Complex::new(T::zero(), T::zero());
    TwoQubitState::normalized([alpha, z, z, beta])
}

/// The anticorrelated electron–positron pair `(|−⟩|+⟩ + |+⟩|−⟩)/√2`, which
/// equals `(|00⟩ − |11⟩)/√2`.
pub fn epr_pair<T: Real>() -> TwoQubitState<T> {
    let h = T::FRAC_1_SQRT_2();
    let plus = [c(h), c(h)];
    let minus = [c(h), c(-h)];
    TwoQubitState::superposition_of_products(&[(minus, plus), (plus, minus)])
        .expect("nonzero superposition")
}

/// A ±1-valued measurement along angle `theta` in the x–z plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Observable<T> {
    pub theta: T,
}

impl<T: Real> Observable<T> {
    pub fn new(theta: T) -> Self {
        Observable { theta }
    }

    /// `cos θ·Z + sin θ·X` as a real 2×2 matrix.
    pub fn matrix(&self) -> [[T; 2]; 2] {
        let (s, c) = self.theta.sin_cos();
        [[c, s], [s, -c]]
    }

    /// Unit eigenvectors for outcome `+1` and `−1`.
    pub fn eigenvectors(&self) -> [[T; 2]; 2] {
        let half = self.theta / T::lit(2.0);
        let (s, c) = half.sin_cos();
        [[c, s], [-s, c]]
    }
}

/// `⟨ψ| A(θa) ⊗ B(θb) |ψ⟩`.
pub fn expectation<T: Real>(state: &TwoQubitState<T>, theta_a: T, theta_b: T) -> T {
    let ma = Observable::new(theta_a).matrix();
    let mb = Observable::new(theta_b).matrix();
    let psi = state.amplitudes();
    let mut acc = Complex::new(T::zero(), T::zero());
    for (i, amp_i) in psi.iter().enumerate() {
        let (ai, bi) = (i / 2, i % 2);
        for (j, amp_j) in psi.iter().enumerate() {
            let (aj, bj) = (j / 2, j % 2);
            let m = ma[ai][aj] * mb[bi][bj];
            acc = acc + amp_i.conj() * *amp_j * m;
        }
    }
    acc.re
}

/// `⟨A(θ)⟩` on one qubit with the other traced out.
pub fn single_expectation<T: Real>(state: &TwoQubitState<T>, qubit: Qubit, theta: T) -> T {
    let m = Observable::new(theta).matrix();
    let psi = state.amplitudes();
    let mut acc = Complex::new(T::zero(), T::zero());
    for (i, amp_i) in psi.iter().enumerate() {
        for (j, amp_j) in psi.iter().enumerate() {
            let (own_i, own_j, other_i, other_j) = match qubit {
                Qubit::A => (i / 2, j / 2, i % 2, j % 2),
                Qubit::B => (i % 2, j % 2, i / 2, j / 2),
            };
            if other_i == other_j {
                acc = acc + amp_i.conj() * *amp_j * m[own_i][own_j];
            }
        }
    }
    acc.re
}

/// Outcome probabilities `[P(++), P(+−), P(−+), P(−−)]`.
pub fn joint_probabilities<T: Real>(state: &TwoQubitState<T>, theta_a: T, theta_b: T) -> [T; 4] {
    let ea = Observable::new(theta_a).eigenvectors();
    let eb = Observable::new(theta_b).eigenvectors();
    let psi = state.amplitudes();
    let mut out = [T::zero(); 4];
    for (x, va) in ea.iter().enumerate() {
        for (y, vb) in eb.iter().enumerate() {
            let mut amp = Complex::new(T::zero(), T::zero());
            for i in 0..2 {
                for j in 0..2 {
                    amp = amp + psi[2 * i + j] * (va[i] * vb[j]);
                }
            }
            out[2 * x + y] = amp.norm_sqr();
        }
    }
    out
}

/// The four CHSH measurement settings.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChshAngles<T> {
    pub a: T,
    pub a_prime: T,
    pub b: T,
    pub b_prime: T,
}

impl<T: Real> ChshAngles<T> {
    /// `a = 0, a' = π/2, b = π/4, b' = 3π/4`: attains `2√2` under every
    /// sign pattern.
    pub fn optimal() -> Self {
        let q = T::FRAC_PI_4();
        ChshAngles {
            a: T::zero(),
            a_prime: T::FRAC_PI_2(),
            b: q,
            b_prime: q * T::lit(3.0),
        }
    }

    /// The game's bases: Alice `Z, X`; Bob `(Z+X)/√2, (Z−X)/√2`.
    pub fn game_bases() -> Self {
        ChshAngles {
            a: T::zero(),
            a_prime: T::FRAC_PI_2(),
            b: T::FRAC_PI_4(),
            b_prime: -T::FRAC_PI_4(),
        }
    }
}

/// Index of a correlator in `[E(a,b), E(a,b'), E(a',b), E(a',b')]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Term {
    Ab,
    #[default]
    AbPrime,
    APrimeB,
    APrimeBPrime,
}

impl Term {
    pub const ALL: [Term; 4] = [Term::Ab, Term::AbPrime, Term::APrimeB, Term::APrimeBPrime];

    fn index(self) -> usize {
        self as usize
    }
}

/// How the four correlators are combined into `S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SignPattern {
    /// `|E(a,b) − E(a,b')| + |E(a',b) + E(a',b')|`
    PaperEq4,
    /// `|ΣE|` with a minus sign on one term.
    Standard(Term),
    /// Largest `Standard` value over the four sign placements.
    #[default]
    Max,
}

impl FromStr for SignPattern {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "paper-eq4" => Ok(SignPattern::PaperEq4),
            "standard" => Ok(SignPattern::Standard(Term::default())),
            "max" => Ok(SignPattern::Max),
            other => Err(format!(
                "unknown sign pattern `{other}` (expected paper-eq4|standard|max)"
            )),
        }
    }
}

impl fmt::Display for SignPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SignPattern::PaperEq4 => "paper-eq4",
            SignPattern::Standard(_) => "standard",
            SignPattern::Max => "max",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChshResult<T> {
    /// `[E(a,b), E(a,b'), E(a',b), E(a',b')]`
    pub correlators: [T; 4],
    pub s_value: T,
    pub degree: T,
}

pub fn combine<T: Real>(e: &[T; 4], pattern: SignPattern) -> T {
    let signed = |minus: Term| {
        e.iter()
            .enumerate()
            .map(|(i, &v)| if i == minus.index() { -v } else { v })
            .fold(T::zero(), |x, y| x + y)
            .abs()
    };
    match pattern {
        SignPattern::PaperEq4 => (e[0] - e[1]).abs() + (e[2] + e[3]).abs(),
        SignPattern::Standard(t) => signed(t),
        SignPattern::Max => Term::ALL.iter().map(|&t| signed(t)).fold(T::zero(), T::max),
    }
}

pub fn chsh_s<T: Real>(
    state: &TwoQubitState<T>,
    angles: &ChshAngles<T>,
    pattern: SignPattern,
) -> ChshResult<T> {
    let correlators = [
        expectation(state, angles.a, angles.b),
        expectation(state, angles.a, angles.b_prime),
        expectation(state, angles.a_prime, angles.b),
        expectation(state, angles.a_prime, angles.b_prime),
    ];
    let s_value = combine(&correlators, pattern);
    ChshResult {
        correlators,
        s_value,
        degree: inconsistency_degree(s_value),
    }
}

/// `|S − 2|` rescaled so the classical limit maps to 0 and Tsirelson's
/// bound `2√2` to 100, clamped to `[0, 100]`.
pub fn inconsistency_degree<T: Real>(s_value: T) -> T {
    let two = T::lit(2.0);
    let span = two * T::SQRT_2() - two;
    let d = (s_value - two).abs() * T::lit(100.0) / span;
    d.max(T::zero()).min(T::lit(100.0))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Strategy<T> {
    /// Shared `Φ⁺`, Alice `{Z, X}`, Bob `{(Z+X)/√2, (Z−X)/√2}`.
    QuantumOptimal,
    /// Both players always answer 0.
    ClassicalBest,
    /// Shared `Φ⁺` with Alice's angles for inputs 0/1 and Bob's likewise.
    Custom(ChshAngles<T>),
}

impl<T> Strategy<T> {
    pub fn name(&self) -> &'static str {
        match self {
            Strategy::QuantumOptimal => "quantum-optimal",
            Strategy::ClassicalBest => "classical-best",
            Strategy::Custom(_) => "custom",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GameSummary {
    pub strategy: String,
    pub rounds: u64,
    pub seed: u64,
    pub wins: u64,
    pub win_rate: f64,
}

/// Plays `rounds` i.i.d. CHSH rounds with a ChaCha8 generator seeded by
/// `seed`. Outcome `+1` is answered as bit 0 and `−1` as bit 1; a round is
/// won when `out_A ⊕ out_B = in_A · in_B`.
pub fn play_chsh_game<T: Real>(
    strategy: Strategy<T>,
    rounds: u64,
    seed: u64,
) -> Result<GameSummary, QuantumError> {
    if rounds == 0 {
        return Err(QuantumError::NoRounds);
    }
    let angles = match strategy {
        Strategy::QuantumOptimal => Some(ChshAngles::<T>::game_bases()),
        Strategy::Custom(a) => Some(a),
        Strategy::ClassicalBest => None,
    };
    // cumulative outcome distributions per (x, y)
    let table: Option<[[f64; 4]; 4]> = angles.map(|ang| {
        let state = bell_phi_plus::<T>();
        let mut t = [[0.0; 4]; 4];
        for x in 0..2 {
            for y in 0..2 {
                let ta = if x == 0 { ang.a } else { ang.a_prime };
                let tb = if y == 0 { ang.b } else { ang.b_prime };
                let p = joint_probabilities(&state, ta, tb);
                let mut acc = 0.0;
                for (k, pk) in p.iter().enumerate() {
                    acc += pk.to_f64().unwrap_or(0.0);
                    t[2 * x + y][k] = acc;
                }
            }
        }
        t
    });

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut wins = 0u64;
    for _ in 0..rounds {
        let x: bool = rng.gen();
        let y: bool = rng.gen();
        let (out_a, out_b) = match &table {
            None => (false, false),
            Some(t) => {
                let cdf = &t[2 * usize::from(x) + usize::from(y)];
                let u: f64 = rng.gen::<f64>() * cdf[3];
                let k = cdf.iter().position(|&c| u < c).unwrap_or(3);
                (k >= 2, k % 2 == 1)
            }
        };
        if (out_a ^ out_b) == (x & y) {
            wins += 1;
        }
    }
    Ok(GameSummary {
        strategy: strategy.name().to_string(),
        rounds,
        seed,
        wins,
        win_rate: wins as f64 / rounds as f64,
    })
}

/// How normalized surface coordinates map to measurement angles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AngleMap {
    /// `a = 0, a' = x·π/2, b = y·π/2 − π/4, b' = y·π/2 + π/4`.
    #[default]
    PairOffset,
    /// `a = 0, a' = x·π, b = y·π, b' = y·π + π/2`.
    Absolute,
}

impl FromStr for AngleMap {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "pair-offset" => Ok(AngleMap::PairOffset),
            "absolute" => Ok(AngleMap::Absolute),
            other => Err(format!(
                "unknown angle map `{other}` (expected pair-offset|absolute)"
            )),
        }
    }
}

impl AngleMap {
    pub fn angles<T: Real>(self, x: T, y: T) -> ChshAngles<T> {
        match self {
            AngleMap::PairOffset => {
                let mid = y * T::FRAC_PI_2();
                ChshAngles {
                    a: T::zero(),
                    a_prime: x * T::FRAC_PI_2(),
                    b: mid - T::FRAC_PI_4(),
                    b_prime: mid + T::FRAC_PI_4(),
                }
            }
            AngleMap::Absolute => {
                let b = y * T::PI();
                ChshAngles {
                    a: T::zero(),
                    a_prime: x * T::PI(),
                    b,
                    b_prime: b + T::FRAC_PI_2(),
                }
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SurfacePoint<T> {
    pub x: T,
    pub y: T,
    #[serde(rename = "S")]
    pub s: T,
    #[serde(rename = "D")]
    pub d: T,
}

/// `S` (max pattern, on `Φ⁺`) and its inconsistency degree at one point.
pub fn surface_point<T: Real>(x: T, y: T, map: AngleMap) -> SurfacePoint<T> {
    let r = chsh_s(&bell_phi_plus(), &map.angles(x, y), SignPattern::Max);
    SurfacePoint {
        x,
        y,
        s: r.s_value,
        d: r.degree,
    }
}

/// Evaluates a `grid_n × grid_n` grid over `[0,1]²` (endpoints included),
/// `x` in the outer loop.
pub fn scan_surface<T: Real>(
    grid_n: usize,
    map: AngleMap,
) -> Result<Vec<SurfacePoint<T>>, QuantumError> {
    if grid_n < 2 {
        return Err(QuantumError::GridTooSmall(grid_n));
    }
    let step = |i: usize| T::from(i).unwrap() / T::from(grid_n - 1).unwrap();
    let mut out = Vec::with_capacity(grid_n * grid_n);
    for i in 0..grid_n {
        for j in 0..grid_n {
            out.push(surface_point(step(i), step(j), map));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const EPS: f64 = 1e-12;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn phi_plus_amplitudes() {
        let s = bell_phi_plus::<f64>();
        let a = s.amplitudes();
        assert!(
            close(a[0].re, std::f64::consts::FRAC_1_SQRT_2, EPS)
                && close(a[3].re, std::f64::consts::FRAC_1_SQRT_2, EPS)
        );
        assert_eq!(a[1], Complex::new(0.0, 0.0));
        assert!(close(s.norm_sqr(), 1.0, EPS));
        let (w0, w1) = s.reduced_weights(Qubit::A);
        assert!(close(w0, 0.5, EPS) && close(w1, 0.5, EPS));
        let (w0, w1) = s.reduced_weights(Qubit::B);
        assert!(close(w0, 0.5, EPS) && close(w1, 0.5, EPS));
    }

    #[test]
    fn entangled_state_constructor() {
        let one = Complex::new(1.0, 0.0);
        let zero = Complex::new(0.0, 0.0);
        assert_eq!(
            entangled_state(one, zero).unwrap(),
            TwoQubitState::basis(false, false)
        );
        let s = entangled_state(one, one).unwrap();
        for (x, y) in s
            .amplitudes()
            .iter()
            .zip(bell_phi_plus::<f64>().amplitudes())
        {
            assert!(close(x.re, y.re, EPS));
        }
        assert_eq!(entangled_state(zero, zero), Err(QuantumError::ZeroVector));
    }

    #[test]
    fn new_rejects_unnormalized() {
        let one = Complex::new(1.0, 0.0);
        let z = Complex::new(0.0, 0.0);
        assert!(matches!(
            TwoQubitState::new([one, one, z, z]),
            Err(QuantumError::NotNormalized(_))
        ));
        assert!(TwoQubitState::new([one, z, z, z]).is_ok());
    }

    #[test]
    fn epr_pair_is_anticorrelated_in_x() {
        let s = epr_pair::<f64>();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let a = s.amplitudes();
        assert!(close(a[0].re, h, EPS) && close(a[3].re, -h, EPS));
        assert!(close(
            expectation(&s, std::f64::consts::FRAC_PI_2, std::f64::consts::FRAC_PI_2),
            -1.0,
            EPS
        ));
        assert!(close(expectation(&s, 0.0, 0.0), 1.0, EPS));
    }

    #[test]
    fn eigenvectors_diagonalize() {
        for k in 0..16 {
            let o = Observable::new(k as f64 * 0.4 - 3.0);
            let m = o.matrix();
            let ev = o.eigenvectors();
            for (sign, v) in [(1.0, ev[0]), (-1.0, ev[1])] {
                for r in 0..2 {
                    let mv = m[r][0] * v[0] + m[r][1] * v[1];
                    assert!(close(mv, sign * v[r], EPS));
                }
            }
        }
    }

    #[test]
    fn expectation_examples() {
        let phi = bell_phi_plus::<f64>();
        assert!(close(expectation(&phi, 0.0, 0.0), 1.0, EPS));
        let zz = TwoQubitState::<f64>::basis(false, false);
        let x = std::f64::consts::FRAC_PI_2;
        assert!(close(expectation(&zz, x, x), 0.0, EPS));
        assert!(close(expectation(&zz, 0.0, 0.0), 1.0, EPS));
    }

    #[test]
    fn joint_probability_examples() {
        let phi = bell_phi_plus::<f64>();
        let p = joint_probabilities(&phi, 0.0, 0.0);
        for (got, want) in p.iter().zip([0.5, 0.0, 0.0, 0.5]) {
            assert!(close(*got, want, EPS));
        }
        let p = joint_probabilities(&phi, 0.0, std::f64::consts::FRAC_PI_4);
        let agree = (1.0 + std::f64::consts::FRAC_1_SQRT_2) / 4.0;
        let disagree = (1.0 - std::f64::consts::FRAC_1_SQRT_2) / 4.0;
        for (got, want) in p.iter().zip([agree, disagree, disagree, agree]) {
            assert!(close(*got, want, EPS));
        }
        assert!(close(agree, 0.42678, 1e-5) && close(disagree, 0.07322, 1e-5));
        let zz = TwoQubitState::<f64>::basis(false, false);
        let p = joint_probabilities(&zz, 0.0, 0.0);
        for (got, want) in p.iter().zip([1.0, 0.0, 0.0, 0.0]) {
            assert!(close(*got, want, EPS));
        }
    }

    #[test]
    fn chsh_examples() {
        let phi = bell_phi_plus::<f64>();
        let tsirelson = 2.0 * std::f64::consts::SQRT_2;
        let r = chsh_s(&phi, &ChshAngles::optimal(), SignPattern::PaperEq4);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        for (got, want) in r.correlators.iter().zip([h, -h, h, h]) {
            assert!(close(*got, want, EPS));
        }
        assert!(close(r.s_value, tsirelson, 1e-12));
        assert!(close(r.degree, 100.0, 1e-9));

        let literal = ChshAngles::game_bases();
        assert!(close(
            chsh_s(&phi, &literal, SignPattern::PaperEq4).s_value,
            0.0,
            EPS
        ));
        assert!(close(
            chsh_s(&phi, &literal, SignPattern::Max).s_value,
            tsirelson,
            1e-12
        ));
        assert!(close(
            chsh_s(&phi, &literal, SignPattern::Standard(Term::APrimeBPrime)).s_value,
            tsirelson,
            1e-12
        ));
    }

    #[test]
    fn degree_examples() {
        assert_eq!(inconsistency_degree(2.0), 0.0);
        assert!(close(
            inconsistency_degree(2.0 * std::f64::consts::SQRT_2),
            100.0,
            1e-12
        ));
        assert!(close(
            inconsistency_degree(1.0 + std::f64::consts::SQRT_2),
            50.0,
            1e-9
        ));
        assert!(close(inconsistency_degree(2.41421), 50.0, 1e-3));
        assert_eq!(inconsistency_degree(4.0), 100.0);
    }

    #[test]
    fn game_examples() {
        let a = play_chsh_game::<f64>(Strategy::QuantumOptimal, 200_000, 7).unwrap();
        let b = play_chsh_game::<f64>(Strategy::QuantumOptimal, 200_000, 7).unwrap();
        assert_eq!(a, b);
        let p = (std::f64::consts::PI / 8.0).cos().powi(2);
        let sigma = (p * (1.0 - p) / 200_000.0).sqrt();
        assert!((a.win_rate - p).abs() <= 4.0 * sigma, "{}", a.win_rate);
        let c = play_chsh_game::<f64>(Strategy::ClassicalBest, 200_000, 7).unwrap();
        let sigma = (0.75f64 * 0.25 / 200_000.0).sqrt();
        assert!((c.win_rate - 0.75).abs() <= 4.0 * sigma);
        assert_eq!(
            play_chsh_game::<f64>(Strategy::QuantumOptimal, 0, 1),
            Err(QuantumError::NoRounds)
        );
    }

    #[test]
    fn custom_strategy_with_game_bases_matches_optimal() {
        let custom =
            play_chsh_game(Strategy::Custom(ChshAngles::<f64>::game_bases()), 10_000, 3).unwrap();
        let opt = play_chsh_game::<f64>(Strategy::QuantumOptimal, 10_000, 3).unwrap();
        assert_eq!(custom.wins, opt.wins);
        assert_eq!(custom.strategy, "custom");
    }

    #[test]
    fn surface_examples() {
        let grid = scan_surface::<f64>(8, AngleMap::PairOffset).unwrap();
        assert_eq!(grid.len(), 64);
        let best = grid
            .iter()
            .cloned()
            .fold(grid[0], |m, p| if p.d > m.d { p } else { m });
        assert!(close(best.d, 100.0, 1e-6));
        assert!(close(best.x, 1.0, EPS));
        // off-grid point on the S = 2 locus
        let p = surface_point(1.0, 0.5, AngleMap::PairOffset);
        assert!(close(p.s, 2.0, 1e-12) && p.d < 1e-9);
        // all four settings equal: every correlator is cos 0 = 1
        let r = chsh_s(
            &bell_phi_plus::<f64>(),
            &ChshAngles {
                a: 0.3,
                a_prime: 0.3,
                b: 0.3,
                b_prime: 0.3,
            },
            SignPattern::Max,
        );
        assert!(r.correlators.iter().all(|&e| close(e, 1.0, EPS)));
        assert!(close(r.s_value, 2.0, EPS) && r.degree < 1e-9);
        assert_eq!(
            scan_surface::<f64>(1, AngleMap::Absolute),
            Err(QuantumError::GridTooSmall(1))
        );
    }

    #[test]
    fn works_in_single_precision() {
        let r = chsh_s(
            &bell_phi_plus::<f32>(),
            &ChshAngles::optimal(),
            SignPattern::PaperEq4,
        );
        assert!((r.s_value - 2.0 * std::f32::consts::SQRT_2).abs() < 1e-5);
        assert!((r.degree - 100.0).abs() < 1e-3);
    }
}
