#pragma once

#include <filesystem>
#include <optional>
#include <string_view>

#include "pcs/point_cloud.hpp"

namespace pcs {

/// xyz_text: one point per line, three whitespace-separated reals, '#' starts
/// a comment. f32_bin: little-endian 32-bit floats, 12 bytes per point,
/// widened to double on read. Both preserve storage order exactly.
enum class CloudFormat { XyzText, F32Bin };

const char* format_name(CloudFormat format);
std::optional<CloudFormat> parse_format(std::string_view name);

/// Throws std::runtime_error with the offending line number / byte count on
/// malformed input; an empty cloud is an error (N >= 1).
PointCloud read_cloud(const std::filesystem::path& path, CloudFormat format);

/// Text output carries enough digits for an exact double round-trip; binary
/// output narrows to 32-bit floats (bit-exact round-trip for values
/// representable in 32 bits).
void write_cloud(const PointCloud& cloud, const std::filesystem::path& path,
                 CloudFormat format);

}  // namespace pcs
