// Budget-capped Nelder-Mead simplex maximization; deterministic, tracks the
// best point over every evaluation made.

#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace qsym {

struct NelderMeadResult {
    std::vector<double> best_point;
    double best_value = 0.0;
    std::size_t evaluations = 0;
};

NelderMeadResult nelder_mead_maximize(const std::function<double(const std::vector<double>&)>& f,
                                      const std::vector<double>& start, double initial_step,
                                      std::size_t max_evaluations);

} // namespace qsym
