#include "entrokit/stream_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <stdexcept>

namespace entrokit {

namespace {

using nlohmann::json;

json sidecar_path_contents(const SampleStream& stream) {
    return json{{"source_kind", stream.source_kind},
                {"rate_hz", stream.rate_hz},
                {"count", stream.samples.size()}};
}

} // namespace

std::vector<uint8_t> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::vector<uint8_t> data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return data;
}

void write_file(const std::filesystem::path& path, std::span<const uint8_t> data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

void save_sample_stream(const std::filesystem::path& path, const SampleStream& stream) {
    write_file(path, stream.samples);
    std::ofstream sidecar(path.string() + ".json", std::ios::trunc);
    if (!sidecar) throw std::runtime_error("cannot write sidecar for " + path.string());
    sidecar << sidecar_path_contents(stream).dump(2) << "\n";
}

SampleStream load_sample_stream(const std::filesystem::path& path) {
    SampleStream stream;
    stream.samples = read_file(path);

    const std::filesystem::path sidecar = path.string() + ".json";
    if (std::filesystem::exists(sidecar)) {
        std::ifstream in(sidecar);
        json meta = json::parse(in);
        stream.source_kind = meta.value("source_kind", stream.source_kind);
        stream.rate_hz = meta.value("rate_hz", stream.rate_hz);
    }
    return stream;
}

SourcesConfig load_sources_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config " + path.string());
    json j = json::parse(in);

    SourcesConfig config;
    if (j.contains("vlo")) {
        const json& v = j["vlo"];
        config.vlo.nominal_rate_hz = v.value("nominal_rate_hz", config.vlo.nominal_rate_hz);
        config.vlo.fast_clock_hz = v.value("fast_clock_hz", config.vlo.fast_clock_hz);
        config.vlo.jitter_sigma_s = v.value("jitter_sigma_s", config.vlo.jitter_sigma_s);
        config.vlo.wander_hz_per_s = v.value("wander_hz_per_s", config.vlo.wander_hz_per_s);
        config.vlo.noise_seed = v.value("noise_seed", config.vlo.noise_seed);
    }
    if (j.contains("temp")) {
        const json& t = j["temp"];
        config.temp.baseline_code = t.value("baseline_code", config.temp.baseline_code);
        config.temp.drift_codes_per_s = t.value("drift_codes_per_s", config.temp.drift_codes_per_s);
        config.temp.noise_sigma_codes = t.value("noise_sigma_codes", config.temp.noise_sigma_codes);
        config.temp.sample_rate_hz = t.value("sample_rate_hz", config.temp.sample_rate_hz);
        config.temp.noise_seed = t.value("noise_seed", config.temp.noise_seed);
    }
    if (j.contains("sram")) {
        const json& s = j["sram"];
        config.sram.bias_mix = s.value("bias_mix", config.sram.bias_mix);
        config.sram.flip_prob = s.value("flip_prob", config.sram.flip_prob);
        config.sram.persistence = s.value("persistence", config.sram.persistence);
        config.sram.bias_seed = s.value("bias_seed", config.sram.bias_seed);
        config.sram.noise_seed = s.value("noise_seed", config.sram.noise_seed);
    }
    return config;
}

std::string sources_config_to_json(const SourcesConfig& config) {
    json j{
        {"vlo",
         {{"nominal_rate_hz", config.vlo.nominal_rate_hz},
          {"fast_clock_hz", config.vlo.fast_clock_hz},
          {"jitter_sigma_s", config.vlo.jitter_sigma_s},
          {"wander_hz_per_s", config.vlo.wander_hz_per_s},
          {"noise_seed", config.vlo.noise_seed}}},
        {"temp",
         {{"baseline_code", config.temp.baseline_code},
          {"drift_codes_per_s", config.temp.drift_codes_per_s},
          {"noise_sigma_codes", config.temp.noise_sigma_codes},
          {"sample_rate_hz", config.temp.sample_rate_hz},
          {"noise_seed", config.temp.noise_seed}}},
        {"sram",
         {{"bias_mix", config.sram.bias_mix},
          {"flip_prob", config.sram.flip_prob},
          {"persistence", config.sram.persistence},
          {"bias_seed", config.sram.bias_seed},
          {"noise_seed", config.sram.noise_seed}}},
    };
    return j.dump(2);
}

std::string to_hex(std::span<const uint8_t> data) {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    out.reserve(data.size() * 2);
    for (uint8_t b : data) {
        out.push_back(kDigits[b >> 4]);
        out.push_back(kDigits[b & 0xF]);
    }
    return out;
}

} // namespace entrokit
