#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "mmdseq/errors.hpp"

namespace mmdseq {

// An append-only list of finite reals. Non-finite values are rejected here,
// at the ingestion boundary, so the kernel and estimator code never has to
// re-check.
class Sequence {
public:
    Sequence() = default;

    explicit Sequence(std::vector<double> samples) : samples_(std::move(samples)) {
        for (double v : samples_) check_finite(v);
    }

    Sequence(std::initializer_list<double> samples)
        : Sequence(std::vector<double>(samples)) {}

    void append(double sample) {
        check_finite(sample);
        samples_.push_back(sample);
    }

    std::size_t size() const { return samples_.size(); }
    bool empty() const { return samples_.empty(); }
    double operator[](std::size_t i) const { return samples_[i]; }
    const std::vector<double>& samples() const { return samples_; }

    auto begin() const { return samples_.begin(); }
    auto end() const { return samples_.end(); }

private:
    static void check_finite(double v) {
        if (!std::isfinite(v)) throw ValidationError("sample", "samples must be finite");
    }

    std::vector<double> samples_;
};

}  // namespace mmdseq
