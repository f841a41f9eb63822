"""Multi-objective GP engine bindings.

The heavy lifting lives in the compiled `_mogp` extension; this package
re-exports its surface. The extension sits inside the package when
pip-installed and on sys.path when run from a plain CMake build tree.
"""

try:
    from . import _mogp as _ext
except ImportError:  # plain CMake build: extension is top-level
    import _mogp as _ext

Program = _ext.Program
Dataset = _ext.Dataset
load_csv = _ext.load_csv
stratified_split = _ext.stratified_split
objectives = _ext.objectives
semantics = _ext.semantics
dominates = _ext.dominates
dominance_rank = _ext.dominance_rank
fast_nondominated_sort = _ext.fast_nondominated_sort
crowding_distance = _ext.crowding_distance
sdo_distance = _ext.sdo_distance
psdo_distance = _ext.psdo_distance
hypervolume_trapezoid = _ext.hypervolume_trapezoid
hypervolume_staircase = _ext.hypervolume_staircase
accumulate_po_front = _ext.accumulate_po_front
wilcoxon_rank_sum = _ext.wilcoxon_rank_sum
bonferroni_threshold = _ext.bonferroni_threshold
run_config = _ext.run_config
report = _ext.report

__all__ = [
    "Program", "Dataset", "load_csv", "stratified_split", "objectives",
    "semantics", "dominates", "dominance_rank", "fast_nondominated_sort",
    "crowding_distance", "sdo_distance", "psdo_distance",
    "hypervolume_trapezoid", "hypervolume_staircase", "accumulate_po_front",
    "wilcoxon_rank_sum", "bonferroni_threshold", "run_config", "report",
]
