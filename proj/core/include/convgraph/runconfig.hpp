#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace convgraph {

/// FNV-1a 64 over the file's bytes.
std::uint64_t file_checksum_fnv64(const std::filesystem::path& file);

void write_text_file(const std::filesystem::path& file, const std::string& content);

/// Writes <out_dir>/manifest.json recording the command, input checksums
/// and wall time, so any output can be replayed from its inputs.
void write_manifest(const std::filesystem::path& out_dir, const std::string& command_line,
                    const std::vector<std::filesystem::path>& inputs, double wall_seconds);

}  // namespace convgraph
