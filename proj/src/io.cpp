#include "pcs/io.hpp"

#include <bit>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

// f32_bin is defined as little-endian; raw float writes assume the host is.
static_assert(std::endian::native == std::endian::little,
              "f32_bin io needs byte swapping on big-endian hosts");

namespace pcs {

const char* format_name(CloudFormat format) {
  switch (format) {
    case CloudFormat::XyzText: return "xyz_text";
    case CloudFormat::F32Bin: return "f32_bin";
  }
  return "?";
}

std::optional<CloudFormat> parse_format(std::string_view name) {
  if (name == "xyz_text" || name == "xyz") return CloudFormat::XyzText;
  if (name == "f32_bin" || name == "f32") return CloudFormat::F32Bin;
  return std::nullopt;
}

namespace {

PointCloud read_xyz_text(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());

  PointCloud cloud;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);

    if (line.find_first_not_of(" \t\r\f\v") == std::string::npos) continue;

    std::istringstream fields(line);
    double x, y, z;
    if (!(fields >> x >> y >> z)) {
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                               ": expected three coordinates");
    }
    std::string trailing;
    if (fields >> trailing) {
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                               ": trailing data after three coordinates");
    }
    cloud.points.push_back({x, y, z});
  }
  if (cloud.points.empty())
    throw std::runtime_error(path.string() + ": no points (empty file)");
  return cloud;
}

PointCloud read_f32_bin(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());

  in.seekg(0, std::ios::end);
  const std::streamoff size = in.tellg();
  in.seekg(0);
  if (size == 0) throw std::runtime_error(path.string() + ": no points (empty file)");
  if (size % 12 != 0) {
    throw std::runtime_error(path.string() + ": truncated binary cloud (" +
                             std::to_string(size) + " bytes, not a multiple of 12)");
  }

  PointCloud cloud;
  const std::size_t n = static_cast<std::size_t>(size) / 12;
  cloud.points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    float coords[3];
    in.read(reinterpret_cast<char*>(coords), sizeof(coords));
    if (!in) throw std::runtime_error(path.string() + ": read failure");
    cloud.points.push_back({static_cast<double>(coords[0]),
                            static_cast<double>(coords[1]),
                            static_cast<double>(coords[2])});
  }
  return cloud;
}

}  // namespace

PointCloud read_cloud(const std::filesystem::path& path, CloudFormat format) {
  PointCloud cloud = format == CloudFormat::XyzText ? read_xyz_text(path)
                                                    : read_f32_bin(path);
  cloud.order_tag = OrderTag::unsorted();  // file order is preserved, not trusted
  return cloud;
}

void write_cloud(const PointCloud& cloud, const std::filesystem::path& path,
                 CloudFormat format) {
  if (format == CloudFormat::XyzText) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    char buf[96];
    for (const Point& p : cloud.points) {
      // 17 significant digits: doubles survive the text round-trip exactly.
      std::snprintf(buf, sizeof(buf), "%.17g %.17g %.17g\n", p[0], p[1], p[2]);
      out << buf;
    }
    if (!out.flush()) throw std::runtime_error("write failed for " + path.string());
  } else {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    for (const Point& p : cloud.points) {
      const float coords[3] = {static_cast<float>(p[0]), static_cast<float>(p[1]),
                               static_cast<float>(p[2])};
      out.write(reinterpret_cast<const char*>(coords), sizeof(coords));
    }
    if (!out.flush()) throw std::runtime_error("write failed for " + path.string());
  }
}

}  // namespace pcs
