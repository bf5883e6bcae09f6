"""Resource budgets guarding the dense-linear-algebra entry points."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ResourceBudgetExceeded


@dataclass
class Budget:
    max_dim: int = 20000  # largest module dimension any operation touches
    solve_unknowns: int = 4_000_000  # dense Hom-solve cap (dim a * dim b)
    samples: int = 100_000  # class-survey sample count
    split_retries: int = 200  # meataxe split attempts before escalating

    def check_dim(self, dim, what="module"):
        if dim > self.max_dim:
            raise ResourceBudgetExceeded(f"{what} dimension {dim} > cap {self.max_dim}")

    def within_dim(self, dim) -> bool:
        return dim <= self.max_dim


DEFAULT = Budget()
