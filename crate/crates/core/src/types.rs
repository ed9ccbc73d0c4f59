//! Value types shared by every module.

use std::ops::Deref;

use crate::scalar::Scalar;

macro_rules! vector_newtype {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Debug, Clone, PartialEq, Default)]
        pub struct $name<T>(Vec<T>);

        impl<T> $name<T> {
            pub fn new(values: Vec<T>) -> Self {
                Self(values)
            }

            pub fn as_slice(&self) -> &[T] {
                &self.0
            }

            pub fn into_inner(self) -> Vec<T> {
                self.0
            }
        }

        impl<T> Deref for $name<T> {
            type Target = [T];

            fn deref(&self) -> &[T] {
                &self.0
            }
        }

        impl<T> From<Vec<T>> for $name<T> {
            fn from(values: Vec<T>) -> Self {
                Self(values)
            }
        }

        impl<T: Clone> From<&[T]> for $name<T> {
            fn from(values: &[T]) -> Self {
                Self(values.to_vec())
            }
        }

        impl<T, const N: usize> From<[T; N]> for $name<T> {
            fn from(values: [T; N]) -> Self {
                Self(values.into())
            }
        }
    };
}

vector_newtype!(
    /// A point in decision space.
    DecisionVector
);
vector_newtype!(
    /// The image of a decision vector in objective space.
    ObjectiveVector
);

/// A decision vector paired with its cached objective values.
///
/// Constructed by [`crate::problems::Problem::evaluate_solution`] so the cache
/// always matches the problem that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct EvaluatedSolution<T> {
    pub decision: DecisionVector<T>,
    pub objectives: ObjectiveVector<T>,
}

impl<T: Scalar> EvaluatedSolution<T> {
    pub fn new(decision: impl Into<DecisionVector<T>>, objectives: impl Into<ObjectiveVector<T>>) -> Self {
        Self {
            decision: decision.into(),
            objectives: objectives.into(),
        }
    }

    /// A solution known only by its objective values (empty decision part).
    /// Useful for metric-only callers such as subset selection over imported
    /// objective matrices.
    pub fn from_objectives(objectives: impl Into<ObjectiveVector<T>>) -> Self {
        Self {
            decision: DecisionVector::new(Vec::new()),
            objectives: objectives.into(),
        }
    }
}

/// Anything that exposes an objective vector. Metrics accept slices of any
/// implementor so callers can pass solutions or bare vectors.
pub trait Objectives<T> {
    fn objectives(&self) -> &[T];
}

impl<T> Objectives<T> for EvaluatedSolution<T> {
    fn objectives(&self) -> &[T] {
        &self.objectives
    }
}

impl<T> Objectives<T> for ObjectiveVector<T> {
    fn objectives(&self) -> &[T] {
        self
    }
}

impl<T> Objectives<T> for Vec<T> {
    fn objectives(&self) -> &[T] {
        self
    }
}

impl<T> Objectives<T> for [T] {
    fn objectives(&self) -> &[T] {
        self
    }
}

impl<T, const N: usize> Objectives<T> for [T; N] {
    fn objectives(&self) -> &[T] {
        self
    }
}

impl<T, O: Objectives<T> + ?Sized> Objectives<T> for &O {
    fn objectives(&self) -> &[T] {
        (**self).objectives()
    }
}

impl<T, O: Objectives<T> + ?Sized> Objectives<T> for std::sync::Arc<O> {
    fn objectives(&self) -> &[T] {
        (**self).objectives()
    }
}
