#include "burnside/cache.hpp"

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "burnside/arith.hpp"
#include "burnside/json_io.hpp"

namespace burnside {

std::string resolve_cache_dir(const std::string& flag_value) {
  const char* env = std::getenv("BURNSIDE_CACHE_DIR");
  if (env && *env) return env;
  return flag_value;
}

std::string cache_file_path(const std::string& dir, const std::string& spec) {
  std::string stem;
  for (char c : spec) {
    if (std::isalnum(static_cast<unsigned char>(c)))
      stem += c;
    else if (!stem.empty() && stem.back() != '-')
      stem += '-';
  }
  while (!stem.empty() && stem.back() == '-') stem.pop_back();
  if (stem.empty()) stem = "group";

  std::ostringstream hash;
  hash << std::hex << fnv1a64(spec);
  return (std::filesystem::path(dir) / (stem + "-" + hash.str() + ".json")).string();
}

ClassificationPtr load_or_compute_classification(const std::string& spec, int order_bound,
                                                 const std::string& dir) {
  std::string path;
  if (!dir.empty()) {
    path = cache_file_path(dir, spec);
    std::ifstream in(path);
    if (in) {
      try {
        Json doc = Json::parse(in);
        return classification_from_json(spec, order_bound, doc);
      } catch (const std::exception&) {
        // fall through and recompute
      }
    }
  }

  ClassificationPtr cls = subgroup_classes(parse_group(spec, order_bound));
  if (!dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    std::ofstream out(path);
    if (out) out << classification_json(spec, *cls).dump(2) << "\n";
  }
  return cls;
}

}  // namespace burnside
