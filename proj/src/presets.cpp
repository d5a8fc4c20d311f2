#include "nfold/presets.hpp"

#include <filesystem>

#include "nfold/error.hpp"
#include "nfold/json_io.hpp"

namespace nfold {

namespace {

RingSpec make(const FieldSpec& f, long phi, const std::vector<long>& omega) {
  const Field F(f);
  RingSpec s{f, phi, {}};
  for (long c : omega) s.omega.push_back(F.from_int(c));
  return s;
}

}  // namespace

const std::vector<std::pair<std::string, RingSpec>>& ring_presets() {
  static const std::vector<std::pair<std::string, RingSpec>> presets = [] {
    std::vector<std::pair<std::string, RingSpec>> out;
    const std::vector<std::pair<std::string, std::vector<long>>> omegas{
        {"x2", {0, 0, 1}}, {"x3", {0, 0, 0, 1}}, {"x4", {0, 0, 0, 0, 1}}, {"x2(x-1)", {0, 0, -1, 1}}};
    for (const auto& [name, w] : omegas) out.push_back({"Q:" + name, make(FieldSpec::rationals(), 0, w)});
    for (const auto& [name, w] : omegas) out.push_back({"F5:" + name, make(FieldSpec::prime(5), 0, w)});
    const FieldSpec f4 = FieldSpec::extension(2, 2, {1, 1, 1});
    out.push_back({"F4frob:x", make(f4, 1, {0, 1})});
    out.push_back({"F4frob:x2", make(f4, 1, {0, 0, 1})});
    return out;
  }();
  return presets;
}

std::vector<std::string> default_commutative_presets() {
  std::vector<std::string> out;
  for (const auto& [name, spec] : ring_presets())
    if (spec.sigma_power == 0) out.push_back(name);
  return out;
}

std::vector<std::string> skew_presets() { return {"F4frob:x", "F4frob:x2"}; }

Ring preset_ring(const std::string& name) {
  for (const auto& [n, spec] : ring_presets())
    if (n == name) return Ring(spec);
  fail(ErrorKind::InvalidInput, "unknown ring preset '" + name + "'");
}

Ring parse_ring(const std::string& text) {
  for (const auto& [n, spec] : ring_presets())
    if (n == text) return Ring(spec);
  json j;
  if (!text.empty() && text.front() == '{') {
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      fail(ErrorKind::InvalidInput, std::string("ring JSON: ") + e.what());
    }
  } else if (std::filesystem::exists(text)) {
    j = read_json_file(text);
  } else {
    fail(ErrorKind::InvalidInput, "'" + text + "' is neither a ring preset, inline JSON nor a file");
  }
  if (j.is_object() && j.contains("ring")) j = j.at("ring");
  return ring_from_json(j);
}

}  // namespace nfold
