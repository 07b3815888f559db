"""
Condition (K) against all small ultragraphs
===========================================

Walk every ultragraph with at most three vertices and three edge classes and
compare Condition (K) with Condition (L) on every quotient above each pair.
"""

from collections import Counter

from ultraquot import build_quotient, condition_K, condition_L, enumerate_admissible_pairs, pair_leq
from ultraquot.corpus import small_ultragraphs

tally = Counter()
for g in small_ultragraphs(3, 3):
    pairs = enumerate_admissible_pairs(g)
    has_l = {p: condition_L(build_quotient(g, p)).holds for p in pairs}
    for p in pairs:
        k = condition_K(g, p.h).holds
        all_l = all(has_l[x] for x in pairs if pair_leq(p, x))
        tally[k, all_l] += 1

for (k, all_l), n in sorted(tally.items()):
    print(f"(K) {'holds' if k else 'fails'}, (L) on every quotient above {all_l}: {n}")
