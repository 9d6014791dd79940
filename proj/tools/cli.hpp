#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace bkneser::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kParameterError = 2, kGuardExceeded = 3 };

enum class OutputFormat { kText, kJson, kCsv, kDot, kM2, kSingular };

struct Guards {
  std::uint64_t max_subsets = 200'000;
  std::uint64_t max_faces = 1'000'000;
  std::uint64_t max_matrix_cells = 50'000'000;
  std::uint64_t max_search_nodes = 50'000'000;
};

struct RunConfig {
  int m = 0;
  int k = 0;
  int threads = 1;
  Guards guards;
  OutputFormat format = OutputFormat::kText;
  std::optional<std::filesystem::path> cache_dir;
};

/// Guard and cache defaults from BKNESER_* environment variables.
RunConfig config_from_environment();

std::string export_script(int m, int k, OutputFormat format);

/// Small JSON file cache keyed by (m, k, command, config digest).
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  static std::uint64_t fnv1a(const std::string& text);
  static std::string key(int m, int k, const std::string& command, const std::string& digest);

  std::filesystem::path path_for(const std::string& key) const;
  std::optional<std::string> load(const std::string& key) const;
  void store(const std::string& key, const std::string& payload) const;

 private:
  std::filesystem::path dir_;
};

/// Runs one command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bkneser::cli
