#pragma once

// Shared check: the specialized determinant construction, restricted to the
// permutation block, must reproduce the symbolic coefficient table after
// clearing the common denominator prod (u - z_i).

#include "bcm/gaudin.hpp"

#include <string>
#include <vector>

namespace testutil {

inline bool oracle_matches_table(int n, const bcm::gaudin::BetheCoeffs& bc,
                                 const std::vector<bcm::Rational>& z0,
                                 const std::vector<bcm::Rational>& l0, std::string* why) {
    using namespace bcm;
    auto fail = [&](const std::string& m) {
        if (why && why->empty()) *why = m;
        return false;
    };
    gaudin::OracleOutput oo = gaudin::rdet_oracle(n, z0, l0);
    int wn = static_cast<int>(bc.basis.size());
    if (oo.weight.coeff.size() != static_cast<size_t>(n) + 1) return fail("order mismatch");

    std::vector<Rational> vals = z0;
    vals.insert(vals.end(), l0.begin(), l0.end());
    RatFunc w(oo.w);

    for (int j = 0; j <= n; ++j) {
        const Matrix<RatFunc>& bj = oo.weight.coeff[n - j];
        for (int r = 0; r < wn; ++r)
            for (int c = 0; c < wn; ++c) {
                RatFunc cleared = w * bj(r, c);
                if (!cleared.is_polynomial())
                    return fail("residual pole at d-power " + std::to_string(n - j));
                const Poly1& p = cleared.num();
                if (p.deg() > n) return fail("cleared entry exceeds degree n");
                for (int i = 0; i <= n; ++i) {
                    Rational want = bc.b.at({i, j})(r, c).evaluate(vals);
                    if (p.coeff(n - i) != want)
                        return fail("entry (" + std::to_string(r) + "," + std::to_string(c) +
                                    ") at table key (" + std::to_string(i) + "," +
                                    std::to_string(j) + ")");
                }
            }
    }
    return true;
}

}  // namespace testutil
