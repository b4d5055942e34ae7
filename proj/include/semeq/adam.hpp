#pragma once

#include <cmath>
#include <cstdint>
#include <utility>

#include "semeq/errors.hpp"
#include "semeq/matrix.hpp"

namespace semeq {

// State of the bias-corrected Adam optimizer (Kingma & Ba update rule).
struct AdamState {
    Vec first_moment;
    Vec second_moment;
    std::uint64_t step_count = 0;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    double learning_rate = 0.01;

    static AdamState make(std::size_t dim, double learning_rate = 0.01, double beta1 = 0.9,
                          double beta2 = 0.999, double epsilon = 1e-8) {
        if (!(learning_rate > 0.0)) throw InvalidArgument("AdamState: learning_rate must be > 0");
        if (!(beta1 > 0.0 && beta1 < 1.0)) throw InvalidArgument("AdamState: beta1 not in (0,1)");
        if (!(beta2 > 0.0 && beta2 < 1.0)) throw InvalidArgument("AdamState: beta2 not in (0,1)");
        if (!(epsilon > 0.0)) throw InvalidArgument("AdamState: epsilon must be > 0");
        AdamState s;
        s.first_moment.assign(dim, 0.0);
        s.second_moment.assign(dim, 0.0);
        s.beta1 = beta1;
        s.beta2 = beta2;
        s.epsilon = epsilon;
        s.learning_rate = learning_rate;
        return s;
    }
};

// One Adam step. Pure: identical inputs give bit-identical outputs.
inline std::pair<AdamState, Vec> adam_step(AdamState state, const Vec& gradient, Vec variable) {
    const std::size_t n = variable.size();
    if (gradient.size() != n || state.first_moment.size() != n ||
        state.second_moment.size() != n) {
        throw InvalidArgument("adam_step: gradient/variable/moment length mismatch");
    }
    for (const double g : gradient) {
        if (!std::isfinite(g)) throw NumericError("adam_step: non-finite gradient entry");
    }

    state.step_count += 1;
    const double t = static_cast<double>(state.step_count);
    const double corr1 = 1.0 - std::pow(state.beta1, t);
    const double corr2 = 1.0 - std::pow(state.beta2, t);
    for (std::size_t i = 0; i < n; ++i) {
        const double g = gradient[i];
        double& m = state.first_moment[i];
        double& v = state.second_moment[i];
        m = state.beta1 * m + (1.0 - state.beta1) * g;
        v = state.beta2 * v + (1.0 - state.beta2) * g * g;
        variable[i] -= state.learning_rate * (m / corr1) / (std::sqrt(v / corr2) + state.epsilon);
    }
    return {std::move(state), std::move(variable)};
}

}  // namespace semeq
