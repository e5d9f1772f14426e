"""
Sequences, b-files and the published tables
===========================================
"""
from endocount import SequenceSpec, compare_with_published, emit_bfile, generate_sequence

###############################################################################
# Rows and columns as integer sequences
# -------------------------------------

for spec in [
    SequenceSpec("semigroup", "n", 2, 1, 5),
    SequenceSpec("semigroup", "m", 1, 1, 6),
    SequenceSpec("uniform", "n", 3, 1, 6),
    SequenceSpec("monoid", "n", 2, 1, 6),
]:
    print(spec.variant.value, f"{spec.fixed_axis}={spec.fixed_value}",
          generate_sequence(spec), spec.oeis or "")

###############################################################################
# OEIS b-file output
# ------------------

print(emit_bfile(generate_sequence(SequenceSpec("semigroup", "n", 3, 1, 8)), 1), end="")

###############################################################################
# Auditing the printed tables
# ---------------------------
# Cells whose printed value disagrees with the recomputed count are shown
# with both numbers.

report = compare_with_published()
for record in report.mismatches:
    print(f"{record.variant} n={record.n} m={record.m}: printed {record.printed}, "
          f"computed {record.computed}")
print(f"{report.matched}/{len(report.records)} cells match")
