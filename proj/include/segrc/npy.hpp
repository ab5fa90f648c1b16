#ifndef SEGRC_NPY_HPP
#define SEGRC_NPY_HPP

#include <string>
#include <variant>

#include "segrc/types.hpp"

namespace segrc {

using LoadedArray = std::variant<ProbabilityMap, GroundTruthMask>;

/// Reads a v1.0 array file. `<f4` payloads become ProbabilityMap (values
/// checked against [0,1]), `|u1` payloads become GroundTruthMask (values
/// checked against {0,1}). Header problems raise FormatError, out-of-range
/// values raise ValidationError.
LoadedArray read_array(const std::string& path);

/// Typed wrappers; raise FormatError when the file holds the other kind.
ProbabilityMap read_probability_map(const std::string& path);
GroundTruthMask read_ground_truth_mask(const std::string& path);

/// Writes a probability map as little-endian float32 with the standard
/// self-describing header (64-byte aligned, identical bytes to what the
/// common scientific tools emit). Values must be finite, in [0,1]; they are
/// stored at float32 precision, so maps already on that grid round-trip
/// bit-exactly.
void write_array(const std::string& path, const ProbabilityMap& map);

/// Writes a mask as unsigned 8-bit. Round-trips bit-exactly.
void write_array(const std::string& path, const GroundTruthMask& mask);

}  // namespace segrc

#endif  // SEGRC_NPY_HPP
