#include <cmath>
#include <string>

#include "besselq/cli.hpp"
#include "besselq/errors.hpp"

namespace besselq::cli {

void FrequencyGrid::validate() const
{
    if (!(min > 0.0) || !std::isfinite(max) || !(min < max)) {
        throw DomainError("frequency grid: need 0 < min < max");
    }
    if (count < 2) {
        throw DomainError("frequency grid: need at least 2 points");
    }
}

std::vector<double> FrequencyGrid::points() const
{
    validate();
    std::vector<double> out(static_cast<std::size_t>(count));
    const double last = count - 1.0;
    if (scale == Scale::linear) {
        const double step = (max - min) / last;
        for (int i = 0; i < count; ++i) {
            out[i] = min + i * step;
        }
    } else {
        const double lo = std::log(min);
        const double step = (std::log(max) - lo) / last;
        for (int i = 0; i < count; ++i) {
            out[i] = std::exp(lo + i * step);
        }
    }
    out.front() = min;
    out.back() = max;
    for (std::size_t i = 1; i < out.size(); ++i) {
        if (!(out[i] > out[i - 1])) {
            throw DomainError("frequency grid: points are not strictly increasing (too many points for the range)");
        }
    }
    return out;
}

}  // namespace besselq::cli
