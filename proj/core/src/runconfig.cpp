#include "convgraph/runconfig.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "convgraph/rng.hpp"
#include "json.hpp"

namespace convgraph {

std::uint64_t file_checksum_fnv64(const std::filesystem::path& file) {
  if (std::filesystem::is_directory(file)) {
    // Directories hash to the combined hash of their files, in path order.
    std::vector<std::filesystem::path> entries;
    for (const auto& entry : std::filesystem::recursive_directory_iterator(file)) {
      if (entry.is_regular_file()) entries.push_back(entry.path());
    }
    std::sort(entries.begin(), entries.end());
    std::uint64_t combined = 0xcbf29ce484222325ull;
    for (const auto& entry : entries) {
      combined ^= fnv1a64(entry.filename().string());
      combined = combined * 0x100000001b3ull ^ file_checksum_fnv64(entry);
    }
    return combined;
  }
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for checksum: " + file.string());
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return fnv1a64(bytes);
}

void write_text_file(const std::filesystem::path& file, const std::string& content) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + file.string());
  out << content;
}

void write_manifest(const std::filesystem::path& out_dir, const std::string& command_line,
                    const std::vector<std::filesystem::path>& inputs, double wall_seconds) {
  nlohmann::ordered_json manifest;
  manifest["command"] = command_line;
  manifest["wall_seconds"] = wall_seconds;
  nlohmann::ordered_json files = nlohmann::ordered_json::object();
  for (const auto& input : inputs) {
    char checksum[32];
    std::snprintf(checksum, sizeof(checksum), "%016llx",
                  static_cast<unsigned long long>(file_checksum_fnv64(input)));
    nlohmann::ordered_json entry;
    if (std::filesystem::is_regular_file(input)) {
      entry["bytes"] = std::filesystem::file_size(input);
    }
    entry["fnv64"] = checksum;
    files[input.string()] = std::move(entry);
  }
  manifest["inputs"] = std::move(files);
  write_text_file(out_dir / "manifest.json", manifest.dump(2) + "\n");
}

}  // namespace convgraph
