#pragma once

#include "landau/collision.hpp"
#include "landau/functionals.hpp"
#include "landau/gaussian.hpp"
#include "landau/grid.hpp"
#include "landau/lemma_lab.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace landau::io {

/// Shortest round-trip decimal form of a double ("%.17g"); all CSV and
/// JSON numbers go through this so identical inputs give bit-identical
/// artifacts.
std::string format_double(double x);

/// FNV-1a 64-bit hash; used to stamp every CSV artifact with the hash of
/// the experiment configuration that produced it.
std::uint64_t fnv1a(const std::string& bytes);
std::string hash_hex(std::uint64_t h);

/// CSV artifacts. Every file starts with comment lines
///   # spec_hash=<hex>
///   # <grid or column metadata>
/// followed by a column-name row.
void write_field_csv(const std::filesystem::path& path, const RadialField& f,
                     const std::string& spec_hash);
void write_coefficients_csv(const std::filesystem::path& path,
                            const CollisionCoefficients& c,
                            const std::string& spec_hash);
void write_diagnostics_csv(const std::filesystem::path& path,
                           const std::vector<DiagnosticsRecord>& series,
                           const std::string& spec_hash);

/// JSON forms.
nlohmann::json field_to_json(const RadialField& f);  // array of [r, value]
nlohmann::json to_json(const GaussianParams& p);     // {amplitude, temperature}
GaussianParams gaussian_from_json(const nlohmann::json& j);
nlohmann::json to_json(const BlowdownProfile& b);    // {delta, alpha, c0}
nlohmann::json to_json(const DiagnosticsRecord& d);
nlohmann::json diagnostics_to_json(const std::vector<DiagnosticsRecord>& series);
nlohmann::json to_json(const LemmaReport& r);
nlohmann::json to_json(const ScalingReport& r);

void write_json(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace landau::io
