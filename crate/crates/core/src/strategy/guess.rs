//! Doubly-exponential speed and distance guesses for the strategies that
//! do not know the target speed.

use crate::error::{Error, Result};
use crate::kinematics::scalar::{fmt_pq, one, pow2, Scalar};
use crate::scenario::KnowledgeModel;
use std::fmt;

/// Largest round index whose guesses are materialised. Round `i` carries
/// `2^(2^(i+1))`-sized denominators, so this is a memory bound.
pub const MAX_GUESS_ROUND: usize = 24;

/// One round of the guessing schedule.
///
/// `f = 2^i`, `v = 1 - 2^-f`, `a = 1 + 2^-f`, `u = a*v = 1 - 2^-(2f)`.
/// Without distance knowledge the round also guesses `d = 2^g` with
/// `g_0 = 0` and `g_i = 2^i` afterwards.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GuessEntry {
    pub i: usize,
    pub f: u64,
    pub v: Scalar,
    pub a: Scalar,
    pub u: Scalar,
    pub g: Option<u64>,
    pub d: Option<Scalar>,
}

impl fmt::Display for GuessEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "round {} (f={}, v={}, u={}",
            self.i,
            self.f,
            fmt_pq(&self.v),
            fmt_pq(&self.u)
        )?;
        if let (Some(g), Some(d)) = (self.g, &self.d) {
            write!(f, ", g={g}, d={}", fmt_pq(d))?;
        }
        write!(f, ")")
    }
}

pub fn guess_schedule(model: KnowledgeModel, i: usize) -> Result<GuessEntry> {
    if model.knows_speed() {
        return Err(Error::Unsupported(format!(
            "model {model} knows the speed and has no guess schedule"
        )));
    }
    if i > MAX_GUESS_ROUND {
        return Err(Error::Domain(format!(
            "guess round {i} exceeds the supported maximum {MAX_GUESS_ROUND}"
        )));
    }
    let f = 1u64 << i;
    let step = pow2(-(f as i64));
    let v = one() - &step;
    let a = one() + &step;
    let u = &a * &v;
    let (g, d) = if model.knows_distance() {
        (None, None)
    } else {
        let g = if i == 0 { 0 } else { 1u64 << i };
        (Some(g), Some(pow2(g as i64)))
    };
    Ok(GuessEntry {
        i,
        f,
        v,
        a,
        u,
        g,
        d,
    })
}

/// `x_i = (d_base + t_cum * v_i) / (u_i - v_i)`.
///
/// `t_cum` is the distance covered in earlier rounds and `d_base` is the
/// known distance or the round's distance guess.
pub fn next_leg_length(entry: &GuessEntry, d_base: &Scalar, t_cum: &Scalar) -> Scalar {
    (d_base + t_cum * &entry.v) / (&entry.u - &entry.v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kinematics::scalar::{int, rat, zero};

    #[test]
    fn first_rounds() {
        let e0 = guess_schedule(KnowledgeModel::NoSpeed, 0).unwrap();
        assert_eq!(
            (e0.f, e0.v.clone(), e0.a.clone(), e0.u.clone()),
            (1, rat(1, 2), rat(3, 2), rat(3, 4))
        );
        assert_eq!(e0.d, None);
        let e1 = guess_schedule(KnowledgeModel::NoSpeed, 1).unwrap();
        assert_eq!((e1.v, e1.a, e1.u), (rat(3, 4), rat(5, 4), rat(15, 16)));
        let e2 = guess_schedule(KnowledgeModel::NoSpeed, 2).unwrap();
        assert_eq!(e2.u, rat(255, 256));
    }

    #[test]
    fn distance_guesses() {
        let gs: Vec<_> = (0..4)
            .map(|i| guess_schedule(KnowledgeModel::NoKnowledge, i).unwrap())
            .map(|e| (e.g.unwrap(), e.d.unwrap()))
            .collect();
        assert_eq!(
            gs,
            vec![(0, int(1)), (2, int(4)), (4, int(16)), (8, int(256))]
        );
    }

    #[test]
    fn speed_aware_models_have_no_schedule() {
        assert!(guess_schedule(KnowledgeModel::FullKnowledge, 0).is_err());
        assert!(guess_schedule(KnowledgeModel::NoDistance, 0).is_err());
        assert!(guess_schedule(KnowledgeModel::NoSpeed, MAX_GUESS_ROUND + 1).is_err());
    }

    #[test]
    fn leg_lengths() {
        let e0 = guess_schedule(KnowledgeModel::NoSpeed, 0).unwrap();
        assert_eq!(next_leg_length(&e0, &int(1), &zero()), int(4));
        let e1 = guess_schedule(KnowledgeModel::NoSpeed, 1).unwrap();
        assert_eq!(next_leg_length(&e1, &int(1), &int(4)), rat(64, 3));
        let n0 = guess_schedule(KnowledgeModel::NoKnowledge, 0).unwrap();
        assert_eq!(
            next_leg_length(&n0, n0.d.as_ref().unwrap(), &zero()),
            int(4)
        );
    }
}
