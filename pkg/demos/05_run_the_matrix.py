# Every check on the shipped case matrix, with timings.

import time

from nobodies.harness import DEFAULT_CASES, DEMAZURE_CASES, run_case

total = time.perf_counter()
for spec in DEFAULT_CASES + DEMAZURE_CASES:
    t0 = time.perf_counter()
    rep = run_case(spec)
    failed = [c.id for c in rep.checks if not c.passed]
    print(f"{spec.series}{spec.rank} {spec.word} lam={spec.lam} K={spec.kmax}",
          "ok" if rep.passed else f"FAILED {failed}",
          f"{time.perf_counter() - t0:.1f}s")
print(f"total {time.perf_counter() - total:.1f}s")
