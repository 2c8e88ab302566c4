# How the closed cross-section expansion relates to the partial-wave amplitude.
#
# Runs the comparison behind abvortex/data/reconciliation.md and prints the
# report.  `abvortex verify` fails if the committed copy goes stale;
# `python -m abvortex.reconciliation --write` refreshes it.

from abvortex import reconciliation

report = reconciliation.run_reconciliation()
print(reconciliation.render_markdown(report))
print("committed report current:", not reconciliation.stale_reasons(report))
