//! Source/target computation for web terms; diagrams read bottom to top.

use crate::error::{Error, Result};
use crate::rep::coil::Direction;
use crate::rep::LeviDatum;

use super::ast::{Gen, ObjectWord, WebTerm};

fn strip(word: &[i32]) -> ObjectWord {
    word.iter().copied().filter(|&k| k != 0).collect()
}

fn nonneg(args: &[i32]) -> Result<()> {
    if args.iter().any(|&k| k < 0) {
        Err(Error::NegativeLabel)
    } else {
        Ok(())
    }
}

fn gen_type(g: &Gen) -> Result<(ObjectWord, ObjectWord)> {
    Ok(match *g {
        Gen::Merge(k, l) => {
            nonneg(&[k, l])?;
            (strip(&[k, l]), strip(&[k + l]))
        }
        Gen::Split(k, l) => {
            nonneg(&[k, l])?;
            (strip(&[k + l]), strip(&[k, l]))
        }
        Gen::DMerge(k, l) => {
            nonneg(&[k, l])?;
            (strip(&[-k, -l]), strip(&[-k - l]))
        }
        Gen::DSplit(k, l) => {
            nonneg(&[k, l])?;
            (strip(&[-k - l]), strip(&[-k, -l]))
        }
        Gen::CapL(k) => {
            nonneg(&[k])?;
            (strip(&[-k, k]), vec![])
        }
        Gen::CapR(k) => {
            nonneg(&[k])?;
            (strip(&[k, -k]), vec![])
        }
        Gen::CupL(k) => {
            nonneg(&[k])?;
            (vec![], strip(&[k, -k]))
        }
        Gen::CupR(k) => {
            nonneg(&[k])?;
            (vec![], strip(&[-k, k]))
        }
        // crossings with dual strands are mates of the upward crossings, so
        // signed labels are allowed here
        Gen::Over(a, b) | Gen::Under(a, b) => (strip(&[a, b]), strip(&[b, a])),
    })
}

/// Domain and codomain of a term, or the first error.
pub fn typecheck(term: &WebTerm, ctx: &LeviDatum) -> Result<(ObjectWord, ObjectWord)> {
    match term {
        WebTerm::Gen(g) => gen_type(g),
        WebTerm::Id(w) => {
            if w.contains(&0) {
                return Err(Error::ShapeMismatch("object words have no zeros".into()));
            }
            Ok((w.clone(), w.clone()))
        }
        WebTerm::HTensor(a, b) => {
            let (da, ca) = typecheck(a, ctx)?;
            let (db, cb) = typecheck(b, ctx)?;
            let mut d = da;
            d.extend(db);
            let mut c = ca;
            c.extend(cb);
            Ok((d, c))
        }
        WebTerm::VCompose(top, bottom) => {
            let (db, cb) = typecheck(bottom, ctx)?;
            let (dt, ct) = typecheck(top, ctx)?;
            if cb != dt {
                return Err(Error::ShapeMismatch(format!(
                    "composition: {cb:?} feeds into {dt:?}"
                )));
            }
            Ok((db, ct))
        }
        WebTerm::CoilSlice(w, dir) => {
            if w.is_empty() {
                return Ok((vec![], vec![]));
            }
            if w.contains(&0) {
                return Err(Error::ShapeMismatch("object words have no zeros".into()));
            }
            let mut rotated: ObjectWord = w[1..].to_vec();
            rotated.push(w[0]);
            match dir {
                Direction::Winding => Ok((w.clone(), rotated)),
                Direction::Inverse => Ok((rotated, w.clone())),
            }
        }
        WebTerm::SkeinTensor(a, b) => {
            let (da, ca) = typecheck(a, ctx)?;
            let (db, cb) = typecheck(b, ctx)?;
            let mut d = da;
            d.extend(db);
            let mut c = ca;
            c.extend(cb);
            Ok((d, c))
        }
        WebTerm::Scale(_, t) => typecheck(t, ctx),
        WebTerm::Sum(a, b) => {
            let ta = typecheck(a, ctx)?;
            let tb = typecheck(b, ctx)?;
            if ta != tb {
                return Err(Error::ShapeMismatch(format!(
                    "sum of terms with types {ta:?} and {tb:?}"
                )));
            }
            Ok(ta)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::web::parse::parse;

    fn tc(src: &str) -> Result<(ObjectWord, ObjectWord)> {
        let ctx = LeviDatum::full(3);
        typecheck(&parse(src).unwrap(), &ctx)
    }

    #[test]
    fn generator_types() {
        assert_eq!(tc("merge(1,1)").unwrap(), (vec![1, 1], vec![2]));
        assert_eq!(tc("capR(2)").unwrap(), (vec![2, -2], vec![]));
        assert_eq!(tc("coil([1,1])").unwrap(), (vec![1, 1], vec![1, 1]));
        assert_eq!(tc("coil([1,2])").unwrap(), (vec![1, 2], vec![2, 1]));
        assert_eq!(tc("coil_inv([1,2])").unwrap(), (vec![2, 1], vec![1, 2]));
    }

    #[test]
    fn composition_mismatch() {
        assert!(matches!(
            tc("merge(1,1) ; capR(1)"),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn negative_labels_rejected() {
        assert!(matches!(tc("merge(-1,1)"), Err(Error::NegativeLabel)));
        assert!(matches!(tc("capL(-2)"), Err(Error::NegativeLabel)));
        // crossings may carry dual strands
        assert_eq!(tc("over(1,-1)").unwrap(), (vec![1, -1], vec![-1, 1]));
    }

    #[test]
    fn zero_label_edges_are_omitted() {
        assert_eq!(tc("merge(0,2)").unwrap(), (vec![2], vec![2]));
        assert_eq!(tc("split(3,0)").unwrap(), (vec![3], vec![3]));
    }
}
