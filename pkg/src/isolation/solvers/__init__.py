from .exact import (
    exact_domination,
    exact_independence_family,
    exact_isolation,
    exact_k_independence,
    isolating_set_of_size,
)
from .oracles import decomposition_oracle, partition_isolation_oracle
from .ore import half_dominating_bits, half_dominating_set
from .trees import tree_domination

__all__ = [
    "decomposition_oracle",
    "exact_domination",
    "exact_independence_family",
    "exact_isolation",
    "exact_k_independence",
    "half_dominating_bits",
    "half_dominating_set",
    "isolating_set_of_size",
    "partition_isolation_oracle",
    "tree_domination",
]
