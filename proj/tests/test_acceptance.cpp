#include "bcm/cherednik.hpp"
#include "bcm/gaudin.hpp"
#include "bcm/sampling.hpp"
#include "bcm/verify.hpp"
#include "oracle_match.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

// Acceptance gate: one line per criterion, process exit code = number of
// failed criteria.  Every check is exact; the printed time is wall clock.

namespace {

int failures = 0;

void criterion(int id, const std::string& label, const std::function<bool(std::string&)>& body) {
    std::string why;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(why);
    } catch (const std::exception& e) {
        why = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] criterion %2d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", id, label.c_str(),
                secs, ok ? "" : " -- ", ok ? "" : why.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

bool suite_ok(const bcm::verify::SuiteResult& r, std::string& why) {
    if (!r.passed && why.empty()) why = r.suite + " n=" + std::to_string(r.n) + ": " + r.first_failure;
    return r.passed;
}

}  // namespace

int main() {
    using namespace bcm;
    using verify::run_suite;

    criterion(1, "two-site closed forms match the stored golden tables", [](std::string& why) {
        return suite_ok(verify::run_n2_golden(false), why);
    });

    criterion(2, "generating-table coefficients are central, n=2,3", [](std::string& why) {
        for (int n : {2, 3}) {
            auto pz = cherednik::universal_central_poly(n);
            for (auto& [k, c] : pz.coeffs())
                if (!cherednik::is_central(c)) {
                    why = "n=" + std::to_string(n) + " coefficient u^" + std::to_string(k.first) +
                          " v^" + std::to_string(k.second) + " is not central";
                    return false;
                }
        }
        return true;
    });

    criterion(3, "module action transported through iota equals the central table, n=1..3",
              [](std::string& why) {
                  for (int n : {1, 2, 3}) {
                      std::string ff;
                      if (!gaudin::verify_ZB(n, 1000 + n, 20, &ff)) {
                          why = "n=" + std::to_string(n) + ": " + ff;
                          return false;
                      }
                  }
                  return true;
              });

    criterion(4, "coefficient matrices commute, n=2,3 symbolic and n=4 specialized",
              [](std::string& why) {
                  for (int n : {2, 3})
                      if (!suite_ok(run_suite("bethe-comm", n, 2024, 1, false), why)) return false;
                  return suite_ok(run_suite("bethe-comm", 4, 2024, 20, false), why);
              });

    criterion(5, "determinant construction matches the symbolic table, n=2,3",
              [](std::string& why) {
                  for (int n : {2, 3}) {
                      auto bc = gaudin::extract_bethe_coeffs(n);
                      Rng rng(500 + n);
                      for (int t = 0; t < 20; ++t) {
                          auto z0 = distinct_rationals(n, rng);
                          auto l0 = distinct_rationals(n, rng);
                          std::string w;
                          if (!testutil::oracle_matches_table(n, bc, z0, l0, &w)) {
                              why = "n=" + std::to_string(n) + " trial " + std::to_string(t) +
                                    ": " + w;
                              return false;
                          }
                      }
                  }
                  // two-site operator assembled from the field matrices
                  std::vector<Rational> z0{Rational(1), Rational(3)};
                  std::vector<Rational> l0{Rational(2), Rational(-1, 2)};
                  auto oo = gaudin::rdet_oracle(2, z0, l0);
                  auto E11 = gaudin::e_matrix(2, 1, 1, z0), E22 = gaudin::e_matrix(2, 2, 2, z0);
                  auto E12 = gaudin::e_matrix(2, 1, 2, z0), E21 = gaudin::e_matrix(2, 2, 1, z0);
                  auto scalar = [&](const Rational& c) {
                      return Matrix<RatFunc>::identity(4, RatFunc(Poly1::constant(Rational(1))))
                          .map([&](const RatFunc& f) { return scale(f, c); });
                  };
                  Matrix<RatFunc> b1 = -(scalar(l0[0] + l0[1]) + E11 + E22);
                  Matrix<RatFunc> b0 = (scalar(l0[0]) + E11) * (scalar(l0[1]) + E22) - E21 * E12 -
                                       E22.map([](const RatFunc& f) { return f.derivative(); });
                  if (oo.full.coeff[2] != scalar(Rational(1)) || oo.full.coeff[1] != b1 ||
                      oo.full.coeff[0] != b0) {
                      why = "n=2 operator differs from the field-matrix assembly";
                      return false;
                  }
                  return true;
              });

    criterion(6, "spherical table equals central table times symmetrizer, n=2,3",
              [](std::string& why) {
                  for (int n : {2, 3})
                      if (!suite_ok(run_suite("satake", n, 0, 1, false), why)) return false;
                  return true;
              });

    criterion(7, "polynomial representation and transport identity, n=2,3, 25 samples",
              [](std::string& why) {
                  for (int n : {2, 3})
                      if (!suite_ok(run_suite("dunkl", n, 77, 25, false), why)) return false;
                  return true;
              });

    criterion(8, "rank-one pairs satisfy the factorization identities, n=1..3, 10 points",
              [](std::string& why) {
                  for (int n : {1, 2, 3})
                      if (!suite_ok(run_suite("cm-identity", n, 31, 10, false), why)) return false;
                  return true;
              });

    criterion(9, "matrix pairs match quasi-exponential families, n=1..3, 10 configurations",
              [](std::string& why) {
                  for (int n : {1, 2, 3})
                      if (!suite_ok(run_suite("wilson", n, 9, 10, false), why)) return false;
                  return true;
              });

    criterion(10, "power sums recovered from coefficient generators, n=2,3",
              [](std::string& why) {
                  for (int n : {2, 3})
                      if (!suite_ok(run_suite("multisym", n, 0, 1, false), why)) return false;
                  return true;
              });

    criterion(11, "central coefficients commute pairwise in the mixed algebra, n=2",
              [](std::string& why) {
                  auto pz = cherednik::universal_central_poly(2);
                  std::vector<std::pair<std::pair<int, int>, cherednik::HElement>> cs;
                  for (auto& [k, c] : pz.coeffs()) cs.emplace_back(k, c);
                  for (size_t i = 0; i < cs.size(); ++i)
                      for (size_t j = i + 1; j < cs.size(); ++j)
                          if (!cherednik::alpha_commutes(cs[i].second, cs[j].second)) {
                              why = "pair (" + std::to_string(cs[i].first.first) + "," +
                                    std::to_string(cs[i].first.second) + ") x (" +
                                    std::to_string(cs[j].first.first) + "," +
                                    std::to_string(cs[j].first.second) + ")";
                              return false;
                          }
                  return true;
              });

    if (failures == 0)
        std::printf("all 11 acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria FAILED\n", failures);
    return failures;
}
