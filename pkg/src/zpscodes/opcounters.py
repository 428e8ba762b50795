"""Block-operation counters for the complexity model.

One block multiplication of an a x b by a b x c matrix costs P(a,b,c) = a*b*c
scalar multiplications; one block addition of a x b matrices costs
S(a,b) = a*b scalar additions.  Counters split block ops into "big" (target
in the wide n - t column group) and "small" (target in a t_i column group),
which is the split under which the closed-form totals are exact.  Products
by an order-0 identity minor are never performed, hence never counted.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field


@dataclass
class OpCounters:
    big_mults: int = 0
    big_adds: int = 0
    small_mults: int = 0
    small_adds: int = 0
    hist: Counter = field(default_factory=Counter)

    def record_mul(self, a: int, b: int, c: int, wide: bool) -> None:
        if wide:
            self.big_mults += 1
        else:
            self.small_mults += 1
        self.hist[("mul", a, b, c)] += 1

    def record_add(self, a: int, b: int, wide: bool) -> None:
        if wide:
            self.big_adds += 1
        else:
            self.small_adds += 1
        self.hist[("add", a, b)] += 1

    def total_block_ops(self) -> int:
        return self.big_mults + self.big_adds + self.small_mults + self.small_adds

    def total_scalar_ops(self) -> int:
        """P/S-weighted total: sum of a*b*c over products plus a*b over sums."""
        total = 0
        for key, count in self.hist.items():
            if key[0] == "mul":
                _, a, b, c = key
                total += a * b * c * count
            else:
                _, a, b = key
                total += a * b * count
        return total

    def summary(self) -> str:
        return (
            f"big: {self.big_mults} mults / {self.big_adds} adds; "
            f"small: {self.small_mults} mults / {self.small_adds} adds"
        )
