// File formats shared by the CLI and the tests: raw sample dumps with a
// JSON sidecar carrying the source metadata, raw SRAM images and seeds, and
// the JSON configuration for the source simulators.
#pragma once

#include "entrokit/sources.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace entrokit {

struct SampleStream {
    std::vector<uint8_t> samples;
    std::string source_kind = "external"; // vlo | temp | sram | external
    double rate_hz = 0.0;                 // 0 when not applicable
};

// Raw bytes to `path`, metadata to `path`.json.
void save_sample_stream(const std::filesystem::path& path, const SampleStream& stream);

// Raw bytes from `path`; sidecar metadata applied when present.
SampleStream load_sample_stream(const std::filesystem::path& path);

std::vector<uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const uint8_t> data);

struct SourcesConfig {
    VloConfig vlo;
    TempConfig temp;
    SramConfig sram;
};

SourcesConfig load_sources_config(const std::filesystem::path& path);
std::string sources_config_to_json(const SourcesConfig& config);

std::string to_hex(std::span<const uint8_t> data);

} // namespace entrokit
