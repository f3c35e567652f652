#pragma once

#include <string>

#include "apollonian/mat4.hpp"
#include "apollonian/packing.hpp"

namespace apollonian::io {

// Configuration JSON: { "rows": [[cocurv, curv, w1, w2] x4] } with rationals
// as bare integers or "p/q" strings in lowest terms; exact round trip.
std::string config_to_json(const Mat4Q& w);
Mat4Q config_from_json(const std::string& text);

Mat4Q load_config(const std::string& path);
void save_config(const Mat4Q& w, const std::string& path);

std::string packing_to_json(const packing::Packing& p);
packing::Packing packing_from_json(const std::string& text);

packing::Packing load_packing(const std::string& path);
void save_packing(const packing::Packing& p, const std::string& path);

/// "curvature,count" lines, curvatures ascending.
std::string spectrum_to_csv(const packing::Packing& p);

/// "re,im,word" lines.
std::string points_to_csv(const std::vector<std::complex<double>>& points,
                          const std::vector<std::string>& words);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace apollonian::io
