// Copyright 2026 The qphase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QPHASE_PARALLEL_H
#define QPHASE_PARALLEL_H

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace qphase {

/// Worker cap: QPHASE_THREADS if set to a positive integer, else hardware concurrency.
size_t worker_count();

/// Calls fn(chunk) for every chunk in [0, num_chunks), spread over worker_count()
/// threads. Each chunk's result lands in its own slot, so callers merge results
/// in chunk order and the outcome does not depend on the thread count.
template <typename T>
std::vector<T> map_chunks(size_t num_chunks, const std::function<T(size_t)> &fn);

void run_chunks(size_t num_chunks, const std::function<void(size_t)> &fn);

template <typename T>
std::vector<T> map_chunks(size_t num_chunks, const std::function<T(size_t)> &fn) {
    std::vector<T> results(num_chunks);
    run_chunks(num_chunks, [&](size_t k) {
        results[k] = fn(k);
    });
    return results;
}

/// Neumaier-compensated running sum.
class CompensatedSum {
   public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            compensation_ += (sum_ - t) + x;
        } else {
            compensation_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    void add(const CompensatedSum &other) {
        add(other.sum_);
        add(other.compensation_);
    }
    double value() const {
        return sum_ + compensation_;
    }

   private:
    double sum_ = 0;
    double compensation_ = 0;
};

}  // namespace qphase

#endif
