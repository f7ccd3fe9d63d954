#pragma once

#include <cmath>

#include "mmdseq/errors.hpp"

namespace mmdseq {

enum class KernelKind { Gaussian };

// A bounded positive-definite kernel on the real line. Only the Gaussian
// kernel exp{-(x-y)^2 / (2 sigma0^2)} ships; any added kind must declare a
// finite sup bound, since every exponent formula divides by it.
struct KernelSpec {
    KernelKind kind = KernelKind::Gaussian;
    double sigma0 = 1.0;

    explicit KernelSpec(double bandwidth = 1.0, KernelKind k = KernelKind::Gaussian)
        : kind(k), sigma0(bandwidth) {
        if (!(sigma0 > 0.0) || !std::isfinite(sigma0)) {
            throw ValidationError("kernel.sigma0", "bandwidth must be a positive finite real");
        }
    }

    double eval(double x, double y) const {
        const double d = x - y;
        return std::exp(-(d * d) / (2.0 * sigma0 * sigma0));
    }

    // Uniform upper bound K0 = sup_{x,y} k(x,y). Exactly 1 for the Gaussian
    // kernel, independent of bandwidth.
    double sup_bound() const { return 1.0; }
};

}  // namespace mmdseq
