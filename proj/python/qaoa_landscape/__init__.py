# Copyright 2026 The qaoa-landscape Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""QAOA MaxCut landscape tools: simulation, BFGS descent and basin statistics."""

from ._core import (
    CSV_SCHEMA_VERSION,
    SUMMARY_HEADER,
    BasinEstimate,
    Graph,
    LocalMinimum,
    ResourceError,
    approx_ratio,
    cost_values,
    cut_value,
    estimate_basin,
    estimate_num_minima,
    expectation,
    gen_er,
    gradient,
    max_cut,
    minimize,
    quality_fraction,
    run_sweep,
    statevector,
)

__version__ = "0.1.0"

__all__ = [
    "CSV_SCHEMA_VERSION",
    "SUMMARY_HEADER",
    "BasinEstimate",
    "Graph",
    "LocalMinimum",
    "ResourceError",
    "approx_ratio",
    "cost_values",
    "cut_value",
    "estimate_basin",
    "estimate_num_minima",
    "expectation",
    "gen_er",
    "gradient",
    "max_cut",
    "minimize",
    "quality_fraction",
    "run_sweep",
    "statevector",
]
