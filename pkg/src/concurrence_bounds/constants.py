"""Numerical tolerances and fixed names shared across the package"""

# DensityMatrix acceptance
HERMITIAN_TOLERANCE = 1e-10
TRACE_TOLERANCE = 1e-10
PSD_TOLERANCE = -1e-9
NORMALIZATION_TOLERANCE = 1e-12

# Singular values below this fraction of the largest one count as zero
SINGULAR_VALUE_CUTOFF = 1e-13

# Largest imaginary residue tolerated on a Bloch coefficient trace
IMAGINARY_RESIDUE_TOLERANCE = 1e-10

# Slack on the strict pure-state range 1 <= |T|_F^2 < K + 1
PURE_RANGE_TOLERANCE = 1e-9

# Purity above which a state is treated as pure in reports
PURE_PURITY_TOLERANCE = 1e-10

# Normalization slack on the Example 2 weights
WEIGHT_SUM_TOLERANCE = 1e-12

# 0-based |ii> positions of the Example 2 coherence block in 4 x 4
EXAMPLE2_COHERENCE_POSITIONS = (0, 5, 10, 15)

FAMILY_EXAMPLE1 = "example1"
FAMILY_EXAMPLE2 = "example2"
FAMILY_MAXENT = "maxent"
FAMILY_ISOTROPIC = "isotropic"
FAMILY_HAAR = "haar"
FAMILY_MIXED = "mixed"

SWEEPABLE_FAMILIES = (FAMILY_EXAMPLE1, FAMILY_EXAMPLE2, FAMILY_ISOTROPIC)

BOUND_THM2_C = "thm2_c"
BOUND_THM2_C2 = "thm2_c2"
BOUND_CAF_C = "caf_c"
BOUND_QC_C2 = "qc_c2"
BOUND_PRA_C = "pra_c"
BOUND_OLD_C = "old_c"

EXAMPLE2_ONLY_BOUNDS = (BOUND_PRA_C, BOUND_OLD_C)

EXIT_CHECK_FAILURE = 1
EXIT_INPUT_ERROR = 2

CSV_FLOAT_FORMAT = ".17g"

# Margin above 1 for trace or correlation norms to count as detecting entanglement
DETECTION_TOLERANCE = 1e-9
