#ifndef SEGRC_TYPES_HPP
#define SEGRC_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace segrc {

/// Malformed file container (bad magic, header, dtype, ...).
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Well-formed container holding values that violate a domain invariant.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input is structurally valid but degenerate for the requested operation
/// (e.g. a probability map with zero total mass fed to a mass-ratio score).
class DegenerateInputError : public std::invalid_argument {
public:
    explicit DegenerateInputError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Calibration cannot proceed (e.g. every calibration mask is empty).
class CalibrationError : public std::runtime_error {
public:
    explicit CalibrationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Per-pixel inclusion probabilities for one image, row-major.
///
/// Values live on the float32 grid (the on-disk precision) but are kept as
/// doubles in memory so downstream arithmetic does not re-round.
struct ProbabilityMap {
    int height = 0;
    int width = 0;
    std::vector<double> values;

    int size() const { return height * width; }

    ProbabilityMap() = default;
    ProbabilityMap(int h, int w) : height(h), width(w), values(static_cast<size_t>(h) * w, 0.0) {}
    ProbabilityMap(int h, int w, std::vector<double> v) : height(h), width(w), values(std::move(v)) {}

    /// Throws ValidationError unless dimensions are positive, the buffer
    /// length matches, and every value is a finite number in [0,1].
    void validate() const;
};

/// Per-pixel binary ground-truth labels, row-major, values in {0,1}.
struct GroundTruthMask {
    int height = 0;
    int width = 0;
    std::vector<std::uint8_t> values;

    int size() const { return height * width; }

    GroundTruthMask() = default;
    GroundTruthMask(int h, int w) : height(h), width(w), values(static_cast<size_t>(h) * w, 0) {}
    GroundTruthMask(int h, int w, std::vector<std::uint8_t> v)
        : height(h), width(w), values(std::move(v)) {}

    void validate() const;

    /// Number of positive pixels |Y|.
    int positive_count() const;
};

enum class ScoreKind { CRC, CRA };

/// Per-pixel conformity scores in [0,1]; higher score = included earlier.
struct ScoreField {
    int height = 0;
    int width = 0;
    std::vector<double> values;
    ScoreKind kind = ScoreKind::CRC;

    int size() const { return height * width; }
};

/// Pixel membership flags for one prediction set.
struct PredictionSet {
    int height = 0;
    int width = 0;
    std::vector<std::uint8_t> member;
    /// Set when the input was degenerate (zero total mass) and the
    /// conservative all-pixel fallback was returned.
    bool degenerate_fallback = false;

    int size() const { return height * width; }
    int member_count() const;

    bool operator==(const PredictionSet& other) const {
        return height == other.height && width == other.width && member == other.member;
    }
};

/// Snap a double onto the float32 grid used by the array file format.
inline double to_f32_grid(double x) { return static_cast<double>(static_cast<float>(x)); }

}  // namespace segrc

#endif  // SEGRC_TYPES_HPP
