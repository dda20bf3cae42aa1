//! Classical logical entropies and their Shannon counterparts.
//!
//! The logical entropy of a partition is the product measure `p x p` of its
//! ditset, equivalently `1 - Σ_B Pr(B)²`. Compound entropies are the measures
//! of the Venn regions of two ditsets. Every function is generic over
//! [`Weight`], so with `BigRational` weights all identities hold exactly.

use crate::error::{Error, Result};
use crate::exec::{self, Execution};
use crate::partition::{self, PairSet, Partition, Universe};
use crate::weight::{Weight, FLOAT_TOLERANCE};

/// A probability distribution on a finite universe.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbDist<T> {
    weights: Vec<T>,
}

impl<T: Weight> ProbDist<T> {
    /// Weights must be non-negative and sum to 1 (exactly for rationals).
    pub fn new(weights: Vec<T>) -> Result<Self> {
        Universe::new(weights.len())?;
        check_normalized(&weights)?;
        Ok(ProbDist { weights })
    }

    pub fn uniform(n: usize) -> Result<Self> {
        Universe::new(n)?;
        let w = T::one() / T::from_count(n);
        Ok(ProbDist { weights: vec![w; n] })
    }

    /// Skips the normalization check; for distributions derived from states.
    pub(crate) fn from_weights_unchecked(weights: Vec<T>) -> Self {
        ProbDist { weights }
    }

    pub fn universe(&self) -> Universe {
        Universe::new(self.weights.len()).expect("non-empty distribution")
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    pub fn prob_of(&self, set: &[usize]) -> T {
        set.iter().fold(T::zero(), |acc, &e| acc + self.weights[e].clone())
    }

    /// `Pr(B)` for each block of `pi`, in canonical block order.
    pub fn block_probs(&self, pi: &Partition) -> Result<Vec<T>> {
        self.check_universe(pi)?;
        Ok(pi.blocks().iter().map(|b| self.prob_of(b)).collect())
    }

    pub fn to_float(&self) -> ProbDist<f64> {
        ProbDist { weights: self.weights.iter().map(Weight::as_f64).collect() }
    }

    fn check_universe(&self, pi: &Partition) -> Result<()> {
        if pi.len() != self.len() {
            return Err(Error::UniverseMismatch(pi.len(), self.len()));
        }
        Ok(())
    }
}

fn check_normalized<T: Weight>(weights: &[T]) -> Result<()> {
    if let Some(w) = weights.iter().find(|w| **w < T::zero()) {
        return Err(Error::InvalidDistribution(format!("negative weight {w}")));
    }
    let total = weights.iter().fold(T::zero(), |acc, w| acc + w.clone());
    let ok = if T::EXACT { total.is_one() } else { (total.as_f64() - 1.0).abs() <= FLOAT_TOLERANCE };
    if !ok {
        return Err(Error::InvalidDistribution(format!("weights sum to {total}, not 1")));
    }
    Ok(())
}

/// A joint distribution `p(x, y)` on `X x Y`, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct JointDist<T> {
    x_size: usize,
    y_size: usize,
    weights: Vec<T>,
}

impl<T: Weight> JointDist<T> {
    pub fn new(rows: Vec<Vec<T>>) -> Result<Self> {
        let x_size = rows.len();
        let y_size = rows.first().map_or(0, Vec::len);
        Universe::new(x_size)?;
        Universe::new(y_size)?;
        if let Some(bad) = rows.iter().find(|r| r.len() != y_size) {
            return Err(Error::DimensionMismatch(bad.len(), y_size));
        }
        let weights: Vec<T> = rows.into_iter().flatten().collect();
        check_normalized(&weights)?;
        Ok(JointDist { x_size, y_size, weights })
    }

    /// `p(x, y) = p_X(x) p_Y(y)`.
    pub fn product(px: &ProbDist<T>, py: &ProbDist<T>) -> Self {
        let weights = px
            .weights()
            .iter()
            .flat_map(|a| py.weights().iter().map(move |b| a.clone() * b.clone()))
            .collect();
        JointDist { x_size: px.len(), y_size: py.len(), weights }
    }

    pub fn x_size(&self) -> usize {
        self.x_size
    }

    pub fn y_size(&self) -> usize {
        self.y_size
    }

    pub fn get(&self, x: usize, y: usize) -> &T {
        &self.weights[x * self.y_size + y]
    }

    pub fn marginal_x(&self) -> ProbDist<T> {
        let w = (0..self.x_size)
            .map(|x| (0..self.y_size).fold(T::zero(), |acc, y| acc + self.get(x, y).clone()))
            .collect();
        ProbDist::from_weights_unchecked(w)
    }

    pub fn marginal_y(&self) -> ProbDist<T> {
        let w = (0..self.y_size)
            .map(|y| (0..self.x_size).fold(T::zero(), |acc, x| acc + self.get(x, y).clone()))
            .collect();
        ProbDist::from_weights_unchecked(w)
    }
}

/// The six compound entropies of two partitions (or two observables).
#[derive(Debug, Clone, PartialEq)]
pub struct EntropyProfile<T> {
    pub h_pi: T,
    pub h_sigma: T,
    pub h_joint: T,
    pub h_pi_given_sigma: T,
    pub h_sigma_given_pi: T,
    pub mutual: T,
}

impl<T: Weight> EntropyProfile<T> {
    /// Build the profile from the three "outer" values.
    fn from_simple_and_joint(h_pi: T, h_sigma: T, h_joint: T) -> Self {
        EntropyProfile {
            h_pi_given_sigma: h_joint.clone() - h_sigma.clone(),
            h_sigma_given_pi: h_joint.clone() - h_pi.clone(),
            mutual: h_pi.clone() + h_sigma.clone() - h_joint.clone(),
            h_pi,
            h_sigma,
            h_joint,
        }
    }

    /// Residual of `h_joint = h(π|σ) + m + h(σ|π)`.
    pub fn partition_residual(&self) -> T {
        self.h_joint.clone() - (self.h_pi_given_sigma.clone() + self.mutual.clone() + self.h_sigma_given_pi.clone())
    }

    /// Residual of `m = h(π) + h(σ) - h_joint`.
    pub fn inclusion_exclusion_residual(&self) -> T {
        self.mutual.clone() - (self.h_pi.clone() + self.h_sigma.clone() - self.h_joint.clone())
    }

    pub fn to_float(&self) -> EntropyProfile<f64> {
        EntropyProfile {
            h_pi: self.h_pi.as_f64(),
            h_sigma: self.h_sigma.as_f64(),
            h_joint: self.h_joint.as_f64(),
            h_pi_given_sigma: self.h_pi_given_sigma.as_f64(),
            h_sigma_given_pi: self.h_sigma_given_pi.as_f64(),
            mutual: self.mutual.as_f64(),
        }
    }

    /// Named values in a fixed order.
    pub fn entries(&self) -> [(&'static str, &T); 6] {
        [
            ("h_pi", &self.h_pi),
            ("h_sigma", &self.h_sigma),
            ("h_joint", &self.h_joint),
            ("h_pi_given_sigma", &self.h_pi_given_sigma),
            ("h_sigma_given_pi", &self.h_sigma_given_pi),
            ("mutual", &self.mutual),
        ]
    }
}

fn sum_of_squares<T: Weight>(xs: &[T]) -> T {
    xs.iter().fold(T::zero(), |acc, x| acc + x.clone() * x.clone())
}

/// `Pr(B ∩ C)` for every pair of blocks that intersect.
fn intersection_probs<T: Weight>(pi: &Partition, sigma: &Partition, p: &ProbDist<T>) -> Result<Vec<T>> {
    p.check_universe(pi)?;
    p.check_universe(sigma)?;
    let mut cells = vec![T::zero(); pi.num_blocks() * sigma.num_blocks()];
    for (e, w) in p.weights().iter().enumerate() {
        let cell = &mut cells[pi.block_of(e) * sigma.num_blocks() + sigma.block_of(e)];
        *cell = cell.clone() + w.clone();
    }
    Ok(cells)
}

/// `h(π) = 1 - Σ_B Pr(B)²`.
pub fn logical_entropy<T: Weight>(pi: &Partition, p: &ProbDist<T>) -> Result<T> {
    Ok(T::one() - sum_of_squares(&p.block_probs(pi)?))
}

/// `p x p` of an explicit pair set.
pub fn pair_measure<T: Weight>(pairs: &PairSet, p: &ProbDist<T>) -> Result<T> {
    if pairs.universe_size() != p.len() {
        return Err(Error::UniverseMismatch(pairs.universe_size(), p.len()));
    }
    let w = p.weights();
    Ok(pairs.iter().fold(T::zero(), |acc, (a, b)| acc + w[a].clone() * w[b].clone()))
}

/// `h(π)` as the product measure of the materialized ditset.
pub fn logical_entropy_by_dits<T: Weight>(pi: &Partition, p: &ProbDist<T>) -> Result<T> {
    p.check_universe(pi)?;
    pair_measure(&partition::ditset(pi), p)
}

/// Compound logical entropies from block-intersection closed forms.
pub fn entropy_profile<T: Weight>(pi: &Partition, sigma: &Partition, p: &ProbDist<T>) -> Result<EntropyProfile<T>> {
    let h_pi = logical_entropy(pi, p)?;
    let h_sigma = logical_entropy(sigma, p)?;
    let h_joint = T::one() - sum_of_squares(&intersection_probs(pi, sigma, p)?);
    Ok(EntropyProfile::from_simple_and_joint(h_pi, h_sigma, h_joint))
}

/// Compound logical entropies as `p x p` of the explicit ditset Venn regions.
pub fn entropy_profile_by_dits<T: Weight>(
    pi: &Partition,
    sigma: &Partition,
    p: &ProbDist<T>,
) -> Result<EntropyProfile<T>> {
    p.check_universe(pi)?;
    p.check_universe(sigma)?;
    let dp = partition::ditset(pi);
    let ds = partition::ditset(sigma);
    Ok(EntropyProfile {
        h_pi: pair_measure(&dp, p)?,
        h_sigma: pair_measure(&ds, p)?,
        h_joint: pair_measure(&dp.union(&ds), p)?,
        h_pi_given_sigma: pair_measure(&dp.difference(&ds), p)?,
        h_sigma_given_pi: pair_measure(&ds.difference(&dp), p)?,
        mutual: pair_measure(&dp.intersection(&ds), p)?,
    })
}

fn bits(prob: f64) -> f64 {
    if prob <= 0.0 {
        0.0
    } else {
        prob * (1.0 / prob).log2()
    }
}

/// `H(π) = Σ_B Pr(B) log₂(1/Pr(B))`, with empty-probability blocks contributing 0.
pub fn shannon_entropy<T: Weight>(pi: &Partition, p: &ProbDist<T>) -> Result<f64> {
    Ok(p.block_probs(pi)?.iter().map(|b| bits(b.as_f64())).sum())
}

/// Shannon simple, joint, conditional, and mutual entropies in bits.
pub fn shannon_profile<T: Weight>(pi: &Partition, sigma: &Partition, p: &ProbDist<T>) -> Result<EntropyProfile<f64>> {
    let h_pi = shannon_entropy(pi, p)?;
    let h_sigma = shannon_entropy(sigma, p)?;
    let h_joint = intersection_probs(pi, sigma, p)?.iter().map(|c| bits(c.as_f64())).sum();
    Ok(EntropyProfile::from_simple_and_joint(h_pi, h_sigma, h_joint))
}

/// Which canonical count an averaged form is evaluated with.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountKind {
    /// `1 - Pr(B)`: yields logical entropies.
    Dit,
    /// `log₂(1/Pr(B))`: yields Shannon entropies.
    Bit,
}

#[derive(Debug, Clone, PartialEq)]
struct AverageTerm<T> {
    negative: bool,
    probs: Vec<T>,
}

/// An entropy written as a signed sum of block averages `Σ_B Pr(B)·count(Pr(B))`.
///
/// Evaluating the same form with [`CountKind::Dit`] gives the logical entropy and
/// with [`CountKind::Bit`] the corresponding Shannon entropy: the dit-bit transform.
#[derive(Debug, Clone, PartialEq)]
pub struct AveragedForm<T> {
    terms: Vec<AverageTerm<T>>,
}

impl<T: Weight> AveragedForm<T> {
    fn term(negative: bool, probs: Vec<T>) -> AverageTerm<T> {
        AverageTerm { negative, probs }
    }

    /// `h(π)`: one average over the blocks of `π`.
    pub fn simple(pi: &Partition, p: &ProbDist<T>) -> Result<Self> {
        Ok(AveragedForm { terms: vec![Self::term(false, p.block_probs(pi)?)] })
    }

    /// `h(π,σ)`: one average over the cells `B ∩ C`.
    pub fn joint(pi: &Partition, sigma: &Partition, p: &ProbDist<T>) -> Result<Self> {
        Ok(AveragedForm { terms: vec![Self::term(false, intersection_probs(pi, sigma, p)?)] })
    }

    /// `h(π|σ)`: average over `B ∩ C` minus average over `C`.
    pub fn conditional(pi: &Partition, sigma: &Partition, p: &ProbDist<T>) -> Result<Self> {
        Ok(AveragedForm {
            terms: vec![
                Self::term(false, intersection_probs(pi, sigma, p)?),
                Self::term(true, p.block_probs(sigma)?),
            ],
        })
    }

    /// `m(π,σ)`: averages over `B` and `C` minus the average over `B ∩ C`.
    pub fn mutual(pi: &Partition, sigma: &Partition, p: &ProbDist<T>) -> Result<Self> {
        Ok(AveragedForm {
            terms: vec![
                Self::term(false, p.block_probs(pi)?),
                Self::term(false, p.block_probs(sigma)?),
                Self::term(true, intersection_probs(pi, sigma, p)?),
            ],
        })
    }

    /// Evaluate with dit-counts, exactly in the weight type.
    pub fn dit_value(&self) -> T {
        self.terms.iter().fold(T::zero(), |acc, t| {
            let avg = t.probs.iter().fold(T::zero(), |s, b| s + b.clone() * (T::one() - b.clone()));
            if t.negative {
                acc - avg
            } else {
                acc + avg
            }
        })
    }

    /// Evaluate with bit-counts (the dit-bit transform).
    pub fn bit_value(&self) -> f64 {
        self.terms
            .iter()
            .map(|t| {
                let avg: f64 = t.probs.iter().map(|b| bits(b.as_f64())).sum();
                if t.negative {
                    -avg
                } else {
                    avg
                }
            })
            .sum()
    }

    pub fn value(&self, kind: CountKind) -> f64 {
        match kind {
            CountKind::Dit => self.dit_value().as_f64(),
            CountKind::Bit => self.bit_value(),
        }
    }
}

/// The different routes to the logical Hamming distance of two partitions.
#[derive(Debug, Clone, PartialEq)]
pub struct HammingForms<T> {
    /// `h(π|σ) + h(σ|π)`.
    pub conditional_sum: T,
    /// `2h(π∨σ) - h(π) - h(σ)`.
    pub joint_form: T,
    /// `tr[ρ(π)²] + tr[ρ(σ)²] - 2tr[ρ(π)ρ(σ)]`.
    pub density_form: T,
}

pub fn hamming_distance<T: Weight>(pi: &Partition, sigma: &Partition, p: &ProbDist<T>) -> Result<T> {
    let prof = entropy_profile(pi, sigma, p)?;
    Ok(prof.h_pi_given_sigma + prof.h_sigma_given_pi)
}

pub fn hamming_forms<T: Weight>(pi: &Partition, sigma: &Partition, p: &ProbDist<T>) -> Result<HammingForms<T>> {
    use crate::density::ClassicalDensity;

    let prof = entropy_profile(pi, sigma, p)?;
    let joined = partition::join(pi, sigma)?;
    let two = T::one() + T::one();
    let joint_form = two.clone() * logical_entropy(&joined, p)? - prof.h_pi.clone() - prof.h_sigma.clone();
    let rp = ClassicalDensity::from_partition(pi, p)?;
    let rs = ClassicalDensity::from_partition(sigma, p)?;
    let density_form = rp.purity() + rs.purity() - two * rp.trace_product(&rs)?;
    Ok(HammingForms { conditional_sum: prof.h_pi_given_sigma + prof.h_sigma_given_pi, joint_form, density_form })
}

/// Logical cross-entropy `h(π||σ) = 1 - Σ_{B,C} Pr(B ∩ C)²`.
pub fn cross_entropy_partitions<T: Weight>(pi: &Partition, sigma: &Partition, p: &ProbDist<T>) -> Result<T> {
    Ok(T::one() - sum_of_squares(&intersection_probs(pi, sigma, p)?))
}

/// One point of a two-draw sample space: its weight and its two class labels.
#[derive(Debug, Clone)]
pub(crate) struct ClassPoint<T> {
    pub weight: T,
    pub f_class: usize,
    pub g_class: usize,
}

/// The six measures of `p x p` on pairs of points, classified by whether the
/// pair has distinct f-classes and/or distinct g-classes.
///
/// Each quantity is accumulated independently, so the Venn identities are a
/// real check on the result. Rows are reduced in index order in both execution
/// modes.
pub(crate) fn region_measure<T: Weight>(points: &[ClassPoint<T>], exec: Execution) -> EntropyProfile<T> {
    let rows = exec::map_indexed(exec, points.len(), |i| {
        let a = &points[i];
        let mut acc: [T; 6] = std::array::from_fn(|_| T::zero());
        for b in points {
            let fd = a.f_class != b.f_class;
            let gd = a.g_class != b.g_class;
            let flags = [fd, gd, fd || gd, fd && !gd, gd && !fd, fd && gd];
            for (slot, hit) in acc.iter_mut().zip(flags) {
                if hit {
                    *slot = slot.clone() + b.weight.clone();
                }
            }
        }
        acc.map(|s| s * a.weight.clone())
    });
    let mut total: [T; 6] = std::array::from_fn(|_| T::zero());
    for row in rows {
        for (t, r) in total.iter_mut().zip(row) {
            *t = t.clone() + r;
        }
    }
    let [h_pi, h_sigma, h_joint, h_pi_given_sigma, h_sigma_given_pi, mutual] = total;
    EntropyProfile { h_pi, h_sigma, h_joint, h_pi_given_sigma, h_sigma_given_pi, mutual }
}

fn check_twoset<T: Weight>(pi: &Partition, sigma: &Partition, joint: &JointDist<T>) -> Result<()> {
    if pi.len() != joint.x_size() {
        return Err(Error::DimensionMismatch(pi.len(), joint.x_size()));
    }
    if sigma.len() != joint.y_size() {
        return Err(Error::DimensionMismatch(sigma.len(), joint.y_size()));
    }
    Ok(())
}

/// Entropies of `π x 0_Y`, `0_X x σ` and their compounds, by summing
/// `p(x,y) p(x',y')` over `(X x Y)²`.
pub fn twoset_profile<T: Weight>(pi: &Partition, sigma: &Partition, joint: &JointDist<T>) -> Result<EntropyProfile<T>> {
    twoset_profile_with(pi, sigma, joint, Execution::default())
}

pub fn twoset_profile_with<T: Weight>(
    pi: &Partition,
    sigma: &Partition,
    joint: &JointDist<T>,
    exec: Execution,
) -> Result<EntropyProfile<T>> {
    check_twoset(pi, sigma, joint)?;
    let mut points = Vec::with_capacity(joint.x_size() * joint.y_size());
    for x in 0..joint.x_size() {
        for y in 0..joint.y_size() {
            points.push(ClassPoint { weight: joint.get(x, y).clone(), f_class: pi.block_of(x), g_class: sigma.block_of(y) });
        }
    }
    Ok(region_measure(&points, exec))
}

/// The same quantities from marginals and block-product probabilities.
pub fn twoset_profile_closed<T: Weight>(
    pi: &Partition,
    sigma: &Partition,
    joint: &JointDist<T>,
) -> Result<EntropyProfile<T>> {
    check_twoset(pi, sigma, joint)?;
    let h_pi = logical_entropy(pi, &joint.marginal_x())?;
    let h_sigma = logical_entropy(sigma, &joint.marginal_y())?;
    let mut cells = vec![T::zero(); pi.num_blocks() * sigma.num_blocks()];
    for x in 0..joint.x_size() {
        for y in 0..joint.y_size() {
            let c = &mut cells[pi.block_of(x) * sigma.num_blocks() + sigma.block_of(y)];
            *c = c.clone() + joint.get(x, y).clone();
        }
    }
    let h_joint = T::one() - sum_of_squares(&cells);
    Ok(EntropyProfile::from_simple_and_joint(h_pi, h_sigma, h_joint))
}

/// `h(p) = 1 - Σ p_i²`.
pub fn dist_entropy<T: Weight>(p: &ProbDist<T>) -> T {
    T::one() - sum_of_squares(p.weights())
}

/// `h(p||q) = 1 - Σ p_i q_i`.
pub fn dist_cross_entropy<T: Weight>(p: &ProbDist<T>, q: &ProbDist<T>) -> Result<T> {
    if p.len() != q.len() {
        return Err(Error::LengthMismatch(p.len(), q.len()));
    }
    let dot = p.weights().iter().zip(q.weights()).fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone());
    Ok(T::one() - dot)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_partitions;
    use crate::weight::ratio;
    use num_rational::BigRational;

    fn u(n: usize) -> Universe {
        Universe::new(n).unwrap()
    }

    fn part(n: usize, blocks: &[&[usize]]) -> Partition {
        Partition::new(u(n), blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    fn uniform(n: usize) -> ProbDist<BigRational> {
        ProbDist::uniform(n).unwrap()
    }

    /// Brute-force `Σ p_a p_b` over pairs satisfying `keep`, without any pair set.
    fn brute(n: usize, p: &ProbDist<BigRational>, keep: impl Fn(usize, usize) -> bool) -> BigRational {
        let w = p.weights();
        let mut s = ratio(0, 1);
        for a in 0..n {
            for b in 0..n {
                if keep(a, b) {
                    s += &w[a] * &w[b];
                }
            }
        }
        s
    }

    fn parity() -> Partition {
        part(6, &[&[0, 2, 4], &[1, 3, 5]])
    }

    #[test]
    fn distribution_validation() {
        assert!(ProbDist::new(vec![ratio(1, 2), ratio(1, 3)]).is_err());
        assert!(ProbDist::new(vec![ratio(3, 2), ratio(-1, 2)]).is_err());
        assert!(ProbDist::new(vec![0.5, 0.5 + 1e-13]).is_ok());
        assert!(ProbDist::new(vec![0.5, 0.5 + 1e-9]).is_err());
        assert!(ProbDist::<f64>::new(vec![]).is_err());
        assert!(JointDist::new(vec![vec![ratio(1, 2)], vec![ratio(1, 4), ratio(1, 4)]]).is_err());
    }

    #[test]
    fn logical_entropy_examples() {
        assert_eq!(logical_entropy(&parity(), &uniform(6)).unwrap(), ratio(1, 2));
        let p = ProbDist::new(vec![ratio(1, 10), ratio(2, 10), ratio(7, 10)]).unwrap();
        assert_eq!(logical_entropy(&Partition::bottom(u(3)), &p).unwrap(), ratio(0, 1));
        for n in 1..8 {
            let h = logical_entropy(&Partition::top(u(n)), &uniform(n)).unwrap();
            assert_eq!(h, ratio(1, 1) - ratio(1, n as i64));
        }
        assert_eq!(logical_entropy(&Partition::top(u(3)), &uniform(4)), Err(Error::UniverseMismatch(3, 4)));
    }

    #[test]
    fn crossed_pair_profile() {
        let a = part(4, &[&[0, 1], &[2, 3]]);
        let b = part(4, &[&[0, 2], &[1, 3]]);
        let p = uniform(4);
        // Oracle: direct enumeration over the 16 ordered pairs.
        let da = |x: usize, y: usize| (x < 2) != (y < 2);
        let db = |x: usize, y: usize| (x % 2) != (y % 2);
        assert_eq!(brute(4, &p, da), ratio(1, 2));
        assert_eq!(brute(4, &p, |x, y| da(x, y) || db(x, y)), ratio(3, 4));
        assert_eq!(brute(4, &p, |x, y| da(x, y) && !db(x, y)), ratio(1, 4));
        assert_eq!(brute(4, &p, |x, y| da(x, y) && db(x, y)), ratio(1, 4));

        let prof = entropy_profile(&a, &b, &p).unwrap();
        let expected = EntropyProfile {
            h_pi: ratio(1, 2),
            h_sigma: ratio(1, 2),
            h_joint: ratio(3, 4),
            h_pi_given_sigma: ratio(1, 4),
            h_sigma_given_pi: ratio(1, 4),
            mutual: ratio(1, 4),
        };
        assert_eq!(prof, expected);
        assert_eq!(entropy_profile_by_dits(&a, &b, &p).unwrap(), expected);
        assert_eq!(hamming_distance(&a, &b, &p).unwrap(), ratio(1, 2));
        assert_eq!(cross_entropy_partitions(&a, &b, &p).unwrap(), ratio(3, 4));
    }

    #[test]
    fn profile_degenerate_cases() {
        let p = ProbDist::new(vec![ratio(1, 2), ratio(1, 4), ratio(1, 8), ratio(1, 8)]).unwrap();
        let a = part(4, &[&[0, 3], &[1], &[2]]);
        let same = entropy_profile(&a, &a, &p).unwrap();
        assert_eq!(same.h_pi_given_sigma, ratio(0, 1));
        assert_eq!(same.mutual, same.h_pi);
        let with_bottom = entropy_profile(&a, &Partition::bottom(u(4)), &p).unwrap();
        assert_eq!(with_bottom.h_joint, with_bottom.h_pi);
        assert_eq!(with_bottom.mutual, ratio(0, 1));
        assert_eq!(cross_entropy_partitions(&a, &a, &p).unwrap(), same.h_pi);
        assert_eq!(cross_entropy_partitions(&a, &Partition::bottom(u(4)), &p).unwrap(), same.h_pi);
        assert_eq!(hamming_distance(&a, &a, &p).unwrap(), ratio(0, 1));
    }

    #[test]
    fn hamming_top_bottom() {
        let d = hamming_distance(&Partition::top(u(6)), &Partition::bottom(u(6)), &uniform(6)).unwrap();
        assert_eq!(d, ratio(5, 6));
    }

    #[test]
    fn hamming_forms_agree_and_form_a_pseudometric() {
        for n in 1..=4 {
            let ps: Vec<_> = enumerate_partitions(u(n)).unwrap().collect();
            let p = uniform(n);
            let d = |a: &Partition, b: &Partition| hamming_distance(a, b, &p).unwrap();
            for a in &ps {
                assert_eq!(d(a, a), ratio(0, 1));
                for b in &ps {
                    let forms = hamming_forms(a, b, &p).unwrap();
                    assert_eq!(forms.conditional_sum, forms.joint_form);
                    assert_eq!(forms.conditional_sum, forms.density_form);
                    assert_eq!(d(a, b), d(b, a));
                    for c in &ps {
                        assert!(d(a, c) <= d(a, b) + d(b, c));
                    }
                }
            }
        }
    }

    #[test]
    fn shannon_examples() {
        let p = ProbDist::<f64>::uniform(8).unwrap();
        assert!((shannon_entropy(&Partition::top(u(8)), &p).unwrap() - 3.0).abs() < 1e-15);
        assert_eq!(shannon_entropy(&Partition::bottom(u(8)), &p).unwrap(), 0.0);
        let zero_block = ProbDist::new(vec![0.5, 0.5, 0.0]).unwrap();
        assert!((shannon_entropy(&Partition::top(u(3)), &zero_block).unwrap() - 1.0).abs() < 1e-15);
        let a = part(4, &[&[0, 1], &[2, 3]]);
        let b = part(4, &[&[0, 2], &[1, 3]]);
        let sp = shannon_profile(&a, &b, &ProbDist::<f64>::uniform(4).unwrap()).unwrap();
        assert!((sp.h_joint - 2.0).abs() < 1e-15);
        assert!((sp.h_pi_given_sigma - 1.0).abs() < 1e-15);
        assert!(sp.mutual.abs() < 1e-15);
    }

    #[test]
    fn averaged_forms() {
        let a = part(5, &[&[0, 1], &[2, 3, 4]]);
        let b = part(5, &[&[0, 2], &[1], &[3, 4]]);
        let p = ProbDist::new(vec![ratio(1, 3), ratio(1, 6), ratio(1, 4), ratio(1, 8), ratio(1, 8)]).unwrap();
        let prof = entropy_profile(&a, &b, &p).unwrap();
        assert_eq!(AveragedForm::simple(&a, &p).unwrap().dit_value(), prof.h_pi);
        assert_eq!(AveragedForm::joint(&a, &b, &p).unwrap().dit_value(), prof.h_joint);
        assert_eq!(AveragedForm::conditional(&a, &b, &p).unwrap().dit_value(), prof.h_pi_given_sigma);
        assert_eq!(AveragedForm::mutual(&a, &b, &p).unwrap().dit_value(), prof.mutual);
        let sp = shannon_profile(&a, &b, &p).unwrap();
        let cond = AveragedForm::conditional(&a, &b, &p).unwrap();
        assert!((cond.value(CountKind::Bit) - sp.h_pi_given_sigma).abs() < 1e-12);
        assert!((AveragedForm::simple(&a, &p).unwrap().bit_value() - sp.h_pi).abs() < 1e-12);
        assert!((AveragedForm::mutual(&a, &b, &p).unwrap().bit_value() - sp.mutual).abs() < 1e-12);
    }

    #[test]
    fn twoset_cases() {
        let px = ProbDist::new(vec![ratio(1, 2), ratio(1, 3), ratio(1, 6)]).unwrap();
        let py = ProbDist::new(vec![ratio(1, 4), ratio(1, 4), ratio(1, 2)]).unwrap();
        let joint = JointDist::product(&px, &py);
        let pi = part(3, &[&[0, 1], &[2]]);
        let sigma = part(3, &[&[0], &[1, 2]]);
        let prof = twoset_profile(&pi, &sigma, &joint).unwrap();
        assert_eq!(prof, twoset_profile_closed(&pi, &sigma, &joint).unwrap());
        let h_pi = logical_entropy(&pi, &px).unwrap();
        let h_sigma = logical_entropy(&sigma, &py).unwrap();
        assert_eq!(prof.h_pi, h_pi);
        assert_eq!(prof.mutual, h_pi * h_sigma);

        let bottom = twoset_profile(&pi, &Partition::bottom(u(3)), &joint).unwrap();
        assert_eq!(bottom.h_sigma, ratio(0, 1));
        assert_eq!(bottom.h_joint, bottom.h_pi);

        let corr = JointDist::new(vec![
            vec![ratio(1, 4), ratio(0, 1)],
            vec![ratio(1, 8), ratio(1, 8)],
            vec![ratio(0, 1), ratio(1, 2)],
        ])
        .unwrap();
        let t = twoset_profile(&Partition::top(u(3)), &Partition::top(u(2)), &corr).unwrap();
        assert_eq!(t.h_pi, dist_entropy(&corr.marginal_x()));
        assert_eq!(t.h_sigma, dist_entropy(&corr.marginal_y()));
        let flat: Vec<BigRational> = (0..3).flat_map(|x| (0..2).map(move |y| (x, y))).map(|(x, y)| corr.get(x, y).clone()).collect();
        assert_eq!(t.h_joint, dist_entropy(&ProbDist::new(flat).unwrap()));
        assert!(matches!(twoset_profile(&Partition::top(u(2)), &sigma, &joint), Err(Error::DimensionMismatch(2, 3))));
    }

    #[test]
    fn dist_entropies() {
        assert_eq!(dist_entropy(&uniform(5)), ratio(4, 5));
        let p = ProbDist::new(vec![ratio(1, 3), ratio(2, 3)]).unwrap();
        assert_eq!(dist_cross_entropy(&p, &p).unwrap(), dist_entropy(&p));
        let a = ProbDist::new(vec![1.0, 0.0]).unwrap();
        let b = ProbDist::new(vec![0.0, 1.0]).unwrap();
        assert_eq!(dist_cross_entropy(&a, &b).unwrap(), 1.0);
        assert_eq!(dist_cross_entropy(&a, &ProbDist::uniform(3).unwrap()), Err(Error::LengthMismatch(2, 3)));
    }

    #[test]
    fn monotone_under_refinement() {
        let p = ProbDist::new(vec![ratio(1, 2), ratio(1, 5), ratio(1, 5), ratio(1, 10)]).unwrap();
        let ps: Vec<_> = enumerate_partitions(u(4)).unwrap().collect();
        for a in &ps {
            let ha = logical_entropy(a, &p).unwrap();
            let min_block = p.block_probs(a).unwrap().into_iter().fold(ratio(1, 1), |m, b| if b < m { b } else { m });
            assert!(ha >= ratio(0, 1) && ha <= ratio(1, 1) - min_block);
            for b in &ps {
                if partition::refines(b, a).unwrap() {
                    assert!(logical_entropy(b, &p).unwrap() <= ha);
                }
            }
        }
    }
}
