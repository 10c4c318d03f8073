# The lowest term valuation along one order equals the negated, reversed
# highest term valuation along the other.  Checked here for B2 and G2.

from nobodies.cartan import build_root_system, longest_word
from nobodies.polyval import ChartContext, ValuationKind, semigroup_levels


def opneg(values):
    return {tuple(-x for x in reversed(v)) for v in values}


for series in ("B", "G"):
    rs = build_root_system(series, 2)
    w0 = longest_word(rs)
    ctx = ChartContext(rs, rs.rho, w0)
    low = semigroup_levels(ctx, ValuationKind.LowLex, 1)[1]
    high_tilde = semigroup_levels(ctx, ValuationKind.HighTilde, 1)[1]
    low_tilde = semigroup_levels(ctx, ValuationKind.LowTilde, 1)[1]
    high = semigroup_levels(ctx, ValuationKind.HighLex, 1)[1]
    print(series, w0, len(low), low == opneg(high_tilde), low_tilde == opneg(high))
