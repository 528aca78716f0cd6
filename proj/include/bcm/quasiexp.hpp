#pragma once

#include "bcm/rational.hpp"
#include "bcm/series.hpp"
#include "bcm/univar.hpp"

#include <string>
#include <vector>

namespace bcm::qexp {

/// One basis function q(u) e^{mu u}.
struct QExpTerm {
    Poly1 q;
    Rational mu;
};

/// Space spanned by quasi-exponentials; the basis must be linearly
/// independent (checked through the Wronskian wherever it matters).
struct QExpSpace {
    std::vector<QExpTerm> basis;

    int dim() const { return static_cast<int>(basis.size()); }
};

/// Monic polynomial part of the Wronskian, exponentials factored out.
/// Throws std::invalid_argument on a dependent family.
Poly1 wronskian(const QExpSpace& w);

/// Monic kernel operator v^n + sum_i g[i] v^{n-i}; g[0] = 1.
struct KernelOp {
    int order = 0;
    std::vector<RatFunc> g;
};

KernelOp kernel_operator(const QExpSpace& w);

/// Applies the operator to q e^{mu u} and divides out the exponential;
/// zero iff the function is annihilated.
RatFunc apply_kernel(const KernelOp& op, const QExpTerm& f);

/// Composition with (d - mu) on the right; order grows by one.
KernelOp compose_linear_right(const KernelOp& op, const Rational& mu);

/// (v^n + sum g_i v^{n-i}) / prod (v - mu_i), expanded at u = v = infinity.
TruncSeries<Rational> qexp_psi(const QExpSpace& w, int order);

struct SubspaceInfo {
    Rational exp;
    int dim = 0;
    Poly1 wr;  // monic Wronskian of the single-exponent subspace
};

struct Classification {
    bool is_generic = false;
    bool is_minimal = false;
    bool is_canonical = false;
    int degree = 0;  // deg of the full Wronskian
    std::vector<SubspaceInfo> subspaces;
};

Classification classify(const QExpSpace& w);

/// Space {(u - h_i) e^{l0_i u}} with h_i = d_i + sum_{j != i} 1/(l0_i - l0_j),
/// the quasi-exponential side of the matrix-pair correspondence.
QExpSpace matched_space(const std::vector<Rational>& l0, const std::vector<Rational>& d);

/// Full correspondence check at one parameter set: series equality to the
/// given order plus the exponent/Wronskian eigenvalue identities.
bool verify_wilson(const std::vector<Rational>& l0, const std::vector<Rational>& d, int order,
                   std::string* why = nullptr);

}  // namespace bcm::qexp
