#include "landau/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace landau::io {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  return out;
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hash_hex(std::uint64_t h) {
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void write_field_csv(const std::filesystem::path& path, const RadialField& f,
                     const std::string& spec_hash) {
  auto out = open_out(path);
  out << "# spec_hash=" << spec_hash << "\n";
  out << "# r_max=" << format_double(f.grid->r_max)
      << " n_cells=" << f.grid->n_cells
      << " grading=" << format_double(f.grid->grading) << "\n";
  out << "r,value\n";
  for (int i = 0; i < f.size(); ++i)
    out << format_double(f.grid->nodes[i]) << ','
        << format_double(f.values[i]) << '\n';
}

void write_coefficients_csv(const std::filesystem::path& path,
                            const CollisionCoefficients& c,
                            const std::string& spec_hash) {
  auto out = open_out(path);
  const auto& grid = c.a.grid;
  out << "# spec_hash=" << spec_hash << "\n";
  out << "# r_max=" << format_double(grid->r_max)
      << " n_cells=" << grid->n_cells
      << " grading=" << format_double(grid->grading) << "\n";
  out << "r,a,a_prime,lambda1,lambda2\n";
  for (int i = 0; i < c.a.size(); ++i)
    out << format_double(grid->nodes[i]) << ',' << format_double(c.a.values[i])
        << ',' << format_double(c.a_prime.values[i]) << ','
        << format_double(c.lambda1.values[i]) << ','
        << format_double(c.lambda2.values[i]) << '\n';
}

void write_diagnostics_csv(const std::filesystem::path& path,
                           const std::vector<DiagnosticsRecord>& series,
                           const std::string& spec_hash) {
  auto out = open_out(path);
  out << "# spec_hash=" << spec_hash << "\n";
  out << "time,mass,energy,entropy,fisher,norm_l2m,norm_l2mu,dist_to_meq\n";
  for (const auto& d : series)
    out << format_double(d.time) << ',' << format_double(d.mass) << ','
        << format_double(d.energy) << ',' << format_double(d.entropy) << ','
        << format_double(d.fisher) << ',' << format_double(d.norm_l2m_of_f)
        << ',' << format_double(d.norm_l2mu_of_f) << ','
        << format_double(d.dist_to_meq) << '\n';
}

nlohmann::json field_to_json(const RadialField& f) {
  nlohmann::json arr = nlohmann::json::array();
  for (int i = 0; i < f.size(); ++i)
    arr.push_back({f.grid->nodes[i], f.values[i]});
  return arr;
}

nlohmann::json to_json(const GaussianParams& p) {
  return {{"amplitude", p.amplitude}, {"temperature", p.temperature}};
}

GaussianParams gaussian_from_json(const nlohmann::json& j) {
  return GaussianParams(j.at("amplitude").get<double>(),
                        j.at("temperature").get<double>());
}

nlohmann::json to_json(const BlowdownProfile& b) {
  return {{"delta", b.delta()}, {"alpha", b.alpha()}, {"c0", b.c0()}};
}

nlohmann::json to_json(const DiagnosticsRecord& d) {
  return {{"time", d.time},
          {"mass", d.mass},
          {"energy", d.energy},
          {"entropy", d.entropy},
          {"fisher", d.fisher},
          {"norm_l2m", d.norm_l2m_of_f},
          {"norm_l2mu", d.norm_l2mu_of_f},
          {"dist_to_meq", d.dist_to_meq}};
}

nlohmann::json diagnostics_to_json(const std::vector<DiagnosticsRecord>& series) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& d : series) arr.push_back(to_json(d));
  return arr;
}

nlohmann::json to_json(const LemmaReport& r) {
  return {{"id", r.id}, {"pass", r.pass}, {"details", r.details}};
}

nlohmann::json to_json(const ScalingReport& r) {
  nlohmann::json samples = nlohmann::json::array();
  for (const auto& s : r.samples)
    samples.push_back({{"parameter", s.parameter},
                       {"lhs", s.lhs},
                       {"rhs_bound", s.rhs_bound}});
  return {{"id", r.lemma_id},
          {"measured_exponent", r.measured_exponent},
          {"expected_exponent", r.expected_exponent},
          {"tolerance", r.tolerance},
          {"samples", samples},
          {"pass", r.pass},
          {"details", r.details}};
}

void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
  auto out = open_out(path);
  out << j.dump(2) << '\n';
}

}  // namespace landau::io
