use super::affine::AffineElt;
use super::signed_perm::SignedPerm;
use super::system::{AffineSystem, SystemKind};
use super::WeylError;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Number of sign changes of `u`.
pub fn flip_count(u: &SignedPerm) -> usize {
    u.flip_count()
}

/// Occurrences of `label` in reduced words of `x`.
///
/// The deterministic word and `extra` random reduced words (seeded) are
/// compared; disagreement is reported as an error.
pub fn occurrence_count(
    sys: &AffineSystem,
    x: &AffineElt,
    label: usize,
    extra: usize,
    seed: u64,
) -> Result<usize, WeylError> {
    sys.gen(label)?;
    let count = |w: &[usize]| w.iter().filter(|&&l| l == label).count();
    let base = count(&sys.reduced_word(x)?);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..extra {
        let c = count(&sys.random_reduced_word(x, &mut rng)?);
        if c != base {
            return Err(WeylError::InconsistentOccurrence { label, counts: (base, c) });
        }
    }
    Ok(base)
}

/// Rewrites a primed word in unprimed generators.
///
/// `t'_2 -> t_2 t_1 t_2` (others unchanged) for the backward systems, and
/// `s'_1 -> s_1 s_0 s_1` for the affine ones.
pub fn embed_prime_word(kind: SystemKind, word: &[usize]) -> Result<(SystemKind, Vec<usize>), WeylError> {
    let (target, special, image): (SystemKind, usize, [usize; 3]) = match kind {
        SystemKind::TPrime => (SystemKind::T, 2, [2, 1, 2]),
        SystemKind::SPrime => (SystemKind::S, 1, [1, 0, 1]),
        other => return Ok((other, word.to_vec())),
    };
    let mut out = Vec::with_capacity(word.len() + 2 * word.len());
    for &l in word {
        if l == special {
            out.extend_from_slice(&image);
        } else {
            out.push(l);
        }
    }
    Ok((target, out))
}

/// Image of a primed word as an element of the unprimed group.
pub fn embed_prime(kind: SystemKind, n: usize, word: &[usize]) -> Result<AffineElt, WeylError> {
    let primed = AffineSystem::by_kind(kind, n);
    for &l in word {
        primed.gen(l)?;
    }
    let (target, w) = embed_prime_word(kind, word)?;
    AffineSystem::by_kind(target, n).word_to_elt(&w)
}

/// Parses `"1,0,1"` into labels.
pub fn parse_word(s: &str) -> Result<Vec<usize>, WeylError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| WeylError::Parse(format!("bad generator index {t:?}")))
        })
        .collect()
}
