#include "segrc/types.hpp"

#include <cmath>

namespace segrc {

void ProbabilityMap::validate() const {
    if (height < 1 || width < 1)
        throw ValidationError("probability map dimensions must be positive");
    if (values.size() != static_cast<size_t>(height) * width)
        throw ValidationError("probability map buffer length does not match height*width");
    for (double v : values) {
        if (!(v >= 0.0 && v <= 1.0))  // NaN fails both comparisons
            throw ValidationError("probability value outside [0,1]: " + std::to_string(v));
    }
}

void GroundTruthMask::validate() const {
    if (height < 1 || width < 1)
        throw ValidationError("mask dimensions must be positive");
    if (values.size() != static_cast<size_t>(height) * width)
        throw ValidationError("mask buffer length does not match height*width");
    for (std::uint8_t v : values) {
        if (v > 1)
            throw ValidationError("mask value outside {0,1}: " + std::to_string(int(v)));
    }
}

int GroundTruthMask::positive_count() const {
    int n = 0;
    for (std::uint8_t v : values) n += v;
    return n;
}

int PredictionSet::member_count() const {
    int n = 0;
    for (std::uint8_t v : member) n += v;
    return n;
}

}  // namespace segrc
