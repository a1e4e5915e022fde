# Recompute the stored census and the list of inconsistencies in published values
from pauligraph import table1, discrepancy_ledger, export

res = table1()
print(res.summary())
print("all rows consistent:", res.passed)
open("census.csv", "wb").write(export(res, "csv"))

for d in discrepancy_ledger():
    print(d["id"])
    print("   published:", d["published"])
    print("   computed: ", d["computed"])
