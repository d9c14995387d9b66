//! Abstract syntax of annular web terms.

use std::fmt;

use crate::rep::coil::Direction;
use crate::scalar::FieldElem;

/// Object word: nonzero integers; entries of absolute value above `n` are
/// allowed and flag a zero-dimensional space.
pub type ObjectWord = Vec<i32>;

/// A named planar generator. Crossing labels may be signed (crossings with
/// dual strands are mates of the upward ones); all other labels must be
/// nonnegative.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Gen {
    Merge(i32, i32),
    Split(i32, i32),
    DMerge(i32, i32),
    DSplit(i32, i32),
    CapL(i32),
    CapR(i32),
    CupL(i32),
    CupR(i32),
    Over(i32, i32),
    Under(i32, i32),
}

#[derive(Clone, PartialEq, Debug)]
pub enum WebTerm {
    Gen(Gen),
    Id(ObjectWord),
    /// Planar/Hopf juxtaposition.
    HTensor(Box<WebTerm>, Box<WebTerm>),
    /// `VCompose(top, bottom)`: bottom first, then top.
    VCompose(Box<WebTerm>, Box<WebTerm>),
    /// The coil on a full boundary word; the first entry winds.
    CoilSlice(ObjectWord, Direction),
    /// The crossing-inserted monoidal product of two annular terms.
    SkeinTensor(Box<WebTerm>, Box<WebTerm>),
    Scale(FieldElem, Box<WebTerm>),
    Sum(Box<WebTerm>, Box<WebTerm>),
}

impl WebTerm {
    pub fn compose(top: WebTerm, bottom: WebTerm) -> WebTerm {
        WebTerm::VCompose(Box::new(top), Box::new(bottom))
    }

    pub fn tensor(left: WebTerm, right: WebTerm) -> WebTerm {
        WebTerm::HTensor(Box::new(left), Box::new(right))
    }

    /// Exchange up and down: merges with splits, caps with cups; involutive.
    pub fn flip_updown(&self) -> WebTerm {
        match self {
            WebTerm::Gen(g) => WebTerm::Gen(match *g {
                Gen::Merge(k, l) => Gen::Split(k, l),
                Gen::Split(k, l) => Gen::Merge(k, l),
                Gen::DMerge(k, l) => Gen::DSplit(k, l),
                Gen::DSplit(k, l) => Gen::DMerge(k, l),
                // labels are kept, so a cap flips to the cup on the same word
                Gen::CapL(k) => Gen::CupR(k),
                Gen::CupR(k) => Gen::CapL(k),
                Gen::CapR(k) => Gen::CupL(k),
                Gen::CupL(k) => Gen::CapR(k),
                Gen::Over(a, b) => Gen::Under(b, a),
                Gen::Under(a, b) => Gen::Over(b, a),
            }),
            WebTerm::Id(w) => WebTerm::Id(w.clone()),
            WebTerm::HTensor(a, b) => WebTerm::tensor(a.flip_updown(), b.flip_updown()),
            WebTerm::VCompose(top, bottom) => {
                WebTerm::compose(bottom.flip_updown(), top.flip_updown())
            }
            WebTerm::CoilSlice(w, dir) => WebTerm::CoilSlice(
                w.clone(),
                match dir {
                    Direction::Winding => Direction::Inverse,
                    Direction::Inverse => Direction::Winding,
                },
            ),
            WebTerm::SkeinTensor(a, b) => {
                WebTerm::SkeinTensor(Box::new(a.flip_updown()), Box::new(b.flip_updown()))
            }
            WebTerm::Scale(c, t) => WebTerm::Scale(c.clone(), Box::new(t.flip_updown())),
            WebTerm::Sum(a, b) => {
                WebTerm::Sum(Box::new(a.flip_updown()), Box::new(b.flip_updown()))
            }
        }
    }

    /// Mirror left-to-right; involutive.
    pub fn flip_leftright(&self) -> WebTerm {
        match self {
            WebTerm::Gen(g) => WebTerm::Gen(match *g {
                Gen::Merge(k, l) => Gen::Merge(l, k),
                Gen::Split(k, l) => Gen::Split(l, k),
                Gen::DMerge(k, l) => Gen::DMerge(l, k),
                Gen::DSplit(k, l) => Gen::DSplit(l, k),
                Gen::CapL(k) => Gen::CapR(k),
                Gen::CapR(k) => Gen::CapL(k),
                Gen::CupL(k) => Gen::CupR(k),
                Gen::CupR(k) => Gen::CupL(k),
                Gen::Over(a, b) => Gen::Under(b, a),
                Gen::Under(a, b) => Gen::Over(b, a),
            }),
            WebTerm::Id(w) => WebTerm::Id(w.iter().rev().copied().collect()),
            WebTerm::HTensor(a, b) => WebTerm::tensor(b.flip_leftright(), a.flip_leftright()),
            WebTerm::VCompose(top, bottom) => {
                WebTerm::compose(top.flip_leftright(), bottom.flip_leftright())
            }
            WebTerm::CoilSlice(w, dir) => {
                let mut flipped = vec![w[0]];
                flipped.extend(w[1..].iter().rev());
                WebTerm::CoilSlice(
                    flipped,
                    match dir {
                        Direction::Winding => Direction::Inverse,
                        Direction::Inverse => Direction::Winding,
                    },
                )
            }
            WebTerm::SkeinTensor(a, b) => {
                WebTerm::SkeinTensor(Box::new(b.flip_leftright()), Box::new(a.flip_leftright()))
            }
            WebTerm::Scale(c, t) => WebTerm::Scale(c.clone(), Box::new(t.flip_leftright())),
            WebTerm::Sum(a, b) => {
                WebTerm::Sum(Box::new(a.flip_leftright()), Box::new(b.flip_leftright()))
            }
        }
    }
}

fn fmt_word(w: &[i32]) -> String {
    let inner: Vec<String> = w.iter().map(|k| k.to_string()).collect();
    format!("[{}]", inner.join(","))
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::Merge(k, l) => write!(f, "merge({k},{l})"),
            Gen::Split(k, l) => write!(f, "split({k},{l})"),
            Gen::DMerge(k, l) => write!(f, "dmerge({k},{l})"),
            Gen::DSplit(k, l) => write!(f, "dsplit({k},{l})"),
            Gen::CapL(k) => write!(f, "capL({k})"),
            Gen::CapR(k) => write!(f, "capR({k})"),
            Gen::CupL(k) => write!(f, "cupL({k})"),
            Gen::CupR(k) => write!(f, "cupR({k})"),
            Gen::Over(a, b) => write!(f, "over({a},{b})"),
            Gen::Under(a, b) => write!(f, "under({a},{b})"),
        }
    }
}

impl WebTerm {
    fn fmt_atom(&self) -> String {
        match self {
            WebTerm::Gen(g) => g.to_string(),
            WebTerm::Id(w) => format!("id({})", fmt_word(w)),
            WebTerm::Scale(c, t) => format!("scalar \"{}\" * {}", c, t.fmt_atom()),
            _ => format!("({self})"),
        }
    }

    fn fmt_planar(&self) -> String {
        match self {
            // the parser folds '*' to the left, so only left nesting prints flat
            WebTerm::HTensor(a, b) => format!("{} * {}", a.fmt_planar(), b.fmt_atom()),
            _ => self.fmt_atom(),
        }
    }

    fn fmt_slice(&self) -> String {
        match self {
            WebTerm::CoilSlice(w, Direction::Winding) => format!("coil({})", fmt_word(w)),
            WebTerm::CoilSlice(w, Direction::Inverse) => format!("coil_inv({})", fmt_word(w)),
            _ => self.fmt_planar(),
        }
    }

    fn fmt_chain(&self) -> String {
        match self {
            WebTerm::VCompose(top, bottom) => {
                format!("{} ; {}", bottom.fmt_chain(), top.fmt_slice())
            }
            _ => self.fmt_slice(),
        }
    }
}

impl fmt::Display for WebTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WebTerm::Sum(a, b) => write!(f, "{} + {}", a.fmt_chain(), b.fmt_chain()),
            WebTerm::SkeinTensor(a, b) => {
                write!(f, "({}) @ ({})", a, b)
            }
            _ => write!(f, "{}", self.fmt_chain()),
        }
    }
}
