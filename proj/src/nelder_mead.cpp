#include "qsym/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qsym {

NelderMeadResult nelder_mead_maximize(const std::function<double(const std::vector<double>&)>& f,
                                      const std::vector<double>& start, double initial_step,
                                      std::size_t max_evaluations) {
    const std::size_t n = start.size();
    NelderMeadResult res;
    res.best_point = start;
    res.best_value = -std::numeric_limits<double>::infinity();

    auto eval = [&](const std::vector<double>& x) {
        const double v = f(x);
        ++res.evaluations;
        if (v > res.best_value) {
            res.best_value = v;
            res.best_point = x;
        }
        return v;
    };

    if (max_evaluations == 0 || n == 0) {
        if (max_evaluations > 0) eval(start);
        return res;
    }

    constexpr double kReflect = 1.0, kExpand = 2.0, kContract = 0.5, kShrink = 0.5;

    std::vector<std::vector<double>> pts(n + 1, start);
    std::vector<double> vals(n + 1);
    for (std::size_t i = 1; i <= n; ++i) pts[i][i - 1] += initial_step;
    for (std::size_t i = 0; i <= n && res.evaluations < max_evaluations; ++i) vals[i] = eval(pts[i]);
    if (res.evaluations < n + 1) return res; // budget gone during simplex setup

    std::vector<std::size_t> order(n + 1);
    std::vector<double> centroid(n), cand(n);

    while (res.evaluations < max_evaluations) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return vals[a] > vals[b]; });
        const std::size_t best = order[0], second_worst = order[n - 1], worst = order[n];

        if (vals[best] - vals[worst] < 1e-15) break; // flat simplex

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == worst) continue;
            for (std::size_t k = 0; k < n; ++k) centroid[k] += pts[i][k];
        }
        for (std::size_t k = 0; k < n; ++k) centroid[k] /= static_cast<double>(n);

        auto blend = [&](double coeff) {
            for (std::size_t k = 0; k < n; ++k)
                cand[k] = centroid[k] + coeff * (centroid[k] - pts[worst][k]);
        };

        blend(kReflect);
        const double reflected = eval(cand);
        if (res.evaluations >= max_evaluations) break;

        if (reflected > vals[best]) {
            std::vector<double> refl_pt = cand;
            blend(kExpand);
            const double expanded = eval(cand);
            if (expanded > reflected) {
                pts[worst] = cand;
                vals[worst] = expanded;
            } else {
                pts[worst] = std::move(refl_pt);
                vals[worst] = reflected;
            }
        } else if (reflected > vals[second_worst]) {
            pts[worst] = cand;
            vals[worst] = reflected;
        } else {
            blend(-kContract);
            const double contracted = eval(cand);
            if (contracted > vals[worst]) {
                pts[worst] = cand;
                vals[worst] = contracted;
            } else {
                for (std::size_t i = 0; i <= n && res.evaluations < max_evaluations; ++i) {
                    if (i == best) continue;
                    for (std::size_t k = 0; k < n; ++k)
                        pts[i][k] = pts[best][k] + kShrink * (pts[i][k] - pts[best][k]);
                    vals[i] = eval(pts[i]);
                }
            }
        }
    }
    return res;
}

} // namespace qsym
