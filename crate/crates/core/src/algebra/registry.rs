use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::PfGraph;

/// Flags shared by every operation.
#[derive(Debug, Clone, Copy, Default)]
pub struct OpOptions {
    /// Skip the strong/complete precondition of the toggle complements.
    pub force: bool,
}

/// A graph operation selectable by name at runtime.
pub trait GraphOperation: Send + Sync {
    fn name(&self) -> &'static str;

    /// Number of input graphs.
    fn arity(&self) -> usize;

    fn apply(&self, inputs: &[&PfGraph], opts: &OpOptions) -> Result<PfGraph>;
}

fn check_arity(op: &dyn GraphOperation, inputs: &[&PfGraph]) -> Result<()> {
    if inputs.len() != op.arity() {
        return Err(Error::Arity {
            op: op.name(),
            expected: op.arity(),
            got: inputs.len(),
        });
    }
    Ok(())
}

macro_rules! binary_op {
    ($ty:ident, $name:literal, $f:path) => {
        pub struct $ty;

        impl GraphOperation for $ty {
            fn name(&self) -> &'static str {
                $name
            }

            fn arity(&self) -> usize {
                2
            }

            fn apply(&self, inputs: &[&PfGraph], _opts: &OpOptions) -> Result<PfGraph> {
                check_arity(self, inputs)?;
                $f(inputs[0], inputs[1])
            }
        }
    };
}

binary_op!(CartesianOp, "cartesian", super::cartesian_product);
binary_op!(CompositionOp, "compose", super::composition);
binary_op!(UnionOp, "union", super::union);
binary_op!(JoinOp, "join", super::join);

pub struct ComplementOp;

impl GraphOperation for ComplementOp {
    fn name(&self) -> &'static str {
        "complement"
    }

    fn arity(&self) -> usize {
        1
    }

    fn apply(&self, inputs: &[&PfGraph], _opts: &OpOptions) -> Result<PfGraph> {
        check_arity(self, inputs)?;
        super::complement(inputs[0])
    }
}

pub struct StrongComplementOp;

impl GraphOperation for StrongComplementOp {
    fn name(&self) -> &'static str {
        "strong-complement"
    }

    fn arity(&self) -> usize {
        1
    }

    fn apply(&self, inputs: &[&PfGraph], opts: &OpOptions) -> Result<PfGraph> {
        check_arity(self, inputs)?;
        super::strong_complement(inputs[0], opts.force)
    }
}

pub struct CompleteComplementOp;

impl GraphOperation for CompleteComplementOp {
    fn name(&self) -> &'static str {
        "complete-complement"
    }

    fn arity(&self) -> usize {
        1
    }

    fn apply(&self, inputs: &[&PfGraph], opts: &OpOptions) -> Result<PfGraph> {
        check_arity(self, inputs)?;
        super::complete_complement(inputs[0], opts.force)
    }
}

/// Name → operation table.
#[derive(Default)]
pub struct OperationRegistry {
    ops: BTreeMap<&'static str, Box<dyn GraphOperation>>,
}

impl OperationRegistry {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Registry holding the seven built-in operations.
    pub fn builtin() -> Self {
        let mut r = Self::empty();
        r.register(Box::new(CartesianOp));
        r.register(Box::new(CompositionOp));
        r.register(Box::new(UnionOp));
        r.register(Box::new(JoinOp));
        r.register(Box::new(ComplementOp));
        r.register(Box::new(StrongComplementOp));
        r.register(Box::new(CompleteComplementOp));
        r
    }

    /// Add an operation, replacing any previous one with the same name.
    pub fn register(&mut self, op: Box<dyn GraphOperation>) {
        self.ops.insert(op.name(), op);
    }

    pub fn get(&self, name: &str) -> Result<&dyn GraphOperation> {
        self.ops.get(name).map(|b| b.as_ref()).ok_or_else(|| Error::UnknownName {
            what: "operation",
            name: name.to_string(),
        })
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.ops.keys().copied()
    }

    pub fn apply(&self, name: &str, inputs: &[&PfGraph], opts: &OpOptions) -> Result<PfGraph> {
        self.get(name)?.apply(inputs, opts)
    }
}
