"""Dataset entity - complete discrete data over named variables."""

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class Variable(BaseModel):
    """A discrete variable with an ordered state space."""

    model_config = ConfigDict(frozen=True)

    name: str = Field(..., description="Variable name", min_length=1)
    states: tuple[str, ...] = Field(..., description="Ordered state labels")

    @field_validator("states")
    @classmethod
    def validate_states(cls, v: tuple[str, ...]) -> tuple[str, ...]:
        """Validate that the state space has at least two distinct states."""
        if len(v) < 2:
            raise ValueError("a variable needs at least two states")
        if len(set(v)) != len(v):
            raise ValueError("state labels must be unique")
        return v

    @property
    def arity(self) -> int:
        """Number of states r_i."""
        return len(self.states)

    @classmethod
    def with_arity(cls, name: str, arity: int) -> "Variable":
        """Build a variable whose states are labelled 0 .. arity-1."""
        return cls(name=name, states=tuple(str(k) for k in range(arity)))


class Dataset(BaseModel):
    """Immutable table of N complete instances over n discrete variables."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    variables: tuple[Variable, ...] = Field(..., description="Variable descriptors")
    rows: np.ndarray = Field(..., description="N x n matrix of state indices")

    @field_validator("rows", mode="before")
    @classmethod
    def coerce_rows(cls, v: object) -> np.ndarray:
        """Copy rows into a read-only int64 matrix."""
        rows = np.array(v, dtype=np.int64, copy=True)
        if rows.ndim != 2:
            raise ValueError("rows must be a two-dimensional matrix")
        rows.setflags(write=False)
        return rows

    @model_validator(mode="after")
    def validate_table(self) -> "Dataset":
        """Check names, shape and value ranges."""
        names = [v.name for v in self.variables]
        if not names:
            raise ValueError("a dataset needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError("variable names must be unique")
        n_rows, n_cols = self.rows.shape
        if n_rows < 1:
            raise ValueError("a dataset needs at least one instance")
        if n_cols != len(names):
            raise ValueError(f"rows have {n_cols} columns, expected {len(names)}")
        arities = np.array(self.arities, dtype=np.int64)
        if (self.rows < 0).any() or (self.rows >= arities).any():
            raise ValueError("row value outside its variable's state range")
        return self

    @property
    def n_variables(self) -> int:
        """Number of variables n."""
        return len(self.variables)

    @property
    def n_instances(self) -> int:
        """Number of instances N."""
        return int(self.rows.shape[0])

    @property
    def arities(self) -> tuple[int, ...]:
        """Per-variable arities r_i."""
        return tuple(v.arity for v in self.variables)

    @property
    def names(self) -> tuple[str, ...]:
        """Variable names in column order."""
        return tuple(v.name for v in self.variables)

    def __repr__(self) -> str:
        """String representation of the dataset."""
        return f"Dataset(n={self.n_variables}, N={self.n_instances}, r={list(self.arities)})"
