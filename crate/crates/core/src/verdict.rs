//! Pass/fail verdicts with minimal counterexample witnesses.
//!
//! Every axiom is expressed as a [`Law`]: a named identity `lhs(t) = rhs(t)`
//! over index tuples `t` of basis elements. By multilinearity it suffices to
//! test all basis tuples, and scanning them in lexicographic order makes the
//! first failure the lexicographically smallest one.

use std::fmt;

use crate::exactlin::Scalar;

/// The smallest basis tuple on which a law fails, with the two unequal sides
/// given as flat coordinate lists (vectors, or flattened tensors for
/// coalgebra laws).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub law: String,
    pub indices: Vec<usize>,
    pub lhs: Vec<Scalar>,
    pub rhs: Vec<Scalar>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckVerdict {
    pub passed: bool,
    pub witness: Option<Witness>,
}

impl CheckVerdict {
    pub fn pass() -> Self {
        CheckVerdict {
            passed: true,
            witness: None,
        }
    }

    pub fn fail(witness: Witness) -> Self {
        CheckVerdict {
            passed: false,
            witness: Some(witness),
        }
    }

    pub fn is_pass(&self) -> bool {
        self.passed
    }

    /// Name of the failing law, if any.
    pub fn failed_law(&self) -> Option<&str> {
        self.witness.as_ref().map(|w| w.law.as_str())
    }

    pub fn failed_indices(&self) -> Option<&[usize]> {
        self.witness.as_ref().map(|w| w.indices.as_slice())
    }

    /// Runs `next` only if this verdict passed.
    pub fn and_then<E>(
        self,
        next: impl FnOnce() -> Result<CheckVerdict, E>,
    ) -> Result<CheckVerdict, E> {
        if self.passed {
            next()
        } else {
            Ok(self)
        }
    }
}

impl fmt::Display for CheckVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "pass"),
            Some(w) => write!(
                f,
                "fail: {} at {:?}: {:?} != {:?}",
                w.law, w.indices, w.lhs, w.rhs
            ),
        }
    }
}

type Eval<'a> = Box<dyn Fn(&[usize]) -> (Vec<Scalar>, Vec<Scalar>) + 'a>;

/// A named multilinear identity, evaluated on basis index tuples.
pub struct Law<'a> {
    pub name: String,
    pub dim: usize,
    pub arity: usize,
    eval: Eval<'a>,
}

impl<'a> Law<'a> {
    pub fn new(
        name: impl Into<String>,
        dim: usize,
        arity: usize,
        eval: impl Fn(&[usize]) -> (Vec<Scalar>, Vec<Scalar>) + 'a,
    ) -> Self {
        Law {
            name: name.into(),
            dim,
            arity,
            eval: Box::new(eval),
        }
    }

    /// Both sides of the identity at `indices`.
    pub fn eval(&self, indices: &[usize]) -> (Vec<Scalar>, Vec<Scalar>) {
        (self.eval)(indices)
    }

    pub fn holds_at(&self, indices: &[usize]) -> bool {
        let (l, r) = self.eval(indices);
        l == r
    }

    /// Scans every tuple in lexicographic order, stopping at the first failure.
    pub fn check(&self) -> CheckVerdict {
        for t in tuples(self.dim, self.arity) {
            let (lhs, rhs) = self.eval(&t);
            if lhs != rhs {
                return CheckVerdict::fail(Witness {
                    law: self.name.clone(),
                    indices: t,
                    lhs,
                    rhs,
                });
            }
        }
        CheckVerdict::pass()
    }
}

impl fmt::Debug for Law<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Law")
            .field("name", &self.name)
            .field("dim", &self.dim)
            .field("arity", &self.arity)
            .finish()
    }
}

/// Checks the laws in order; the verdict of the first failing law wins.
pub fn check_laws(laws: &[Law<'_>]) -> CheckVerdict {
    for law in laws {
        let v = law.check();
        if !v.passed {
            return v;
        }
    }
    CheckVerdict::pass()
}

/// All tuples in `{0..dim}^arity`, in lexicographic order.
pub fn tuples(dim: usize, arity: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = if dim == 0 && arity > 0 {
        0
    } else {
        dim.pow(arity as u32)
    };
    (0..total).map(move |mut n| {
        let mut t = vec![0; arity];
        for slot in t.iter_mut().rev() {
            *slot = n % dim;
            n /= dim;
        }
        t
    })
}
