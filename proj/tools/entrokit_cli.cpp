// entrokit command line: simulate entropy sources, extract boot seeds, run
// the generator, estimate min-entropy, and run statistical test batches.
// Exit codes: 0 success, 1 statistical failure, 2 usage or I/O error.

#include "entrokit/accumulator.hpp"
#include "entrokit/estimators.hpp"
#include "entrokit/generator.hpp"
#include "entrokit/seed_extract.hpp"
#include "entrokit/sources.hpp"
#include "entrokit/stream_io.hpp"
#include "entrokit/sts.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace entrokit;

constexpr int kExitOk = 0;
constexpr int kExitStatFail = 1;
constexpr int kExitUsage = 2;

json report_to_json(const EntropyReport& r) {
    return json{{"min_entropy", r.min_entropy},
                {"mcv", r.mcv},
                {"collision", r.collision},
                {"markov", r.markov},
                {"compression", r.compression},
                {"sample_count", r.sample_count},
                {"alphabet_size", r.alphabet_size},
                {"bits_per_sample", r.bits_per_sample},
                {"collision_fallback", r.collision_fallback}};
}

json batch_to_json(const sts::BatchReport& report) {
    json tests = json::array();
    for (const auto& t : report.tests) {
        tests.push_back(json{{"test", t.test_name},
                             {"histogram", t.histogram},
                             {"uniformity_p", t.uniformity_p},
                             {"passes", t.passes},
                             {"total", t.total},
                             {"pass_ratio", t.pass_ratio},
                             {"threshold", t.threshold},
                             {"pass", t.pass}});
    }
    return json{{"stream_count", report.stream_count}, {"all_pass", report.all_pass}, {"tests", tests}};
}

void print_batch_table(const sts::BatchReport& report) {
    std::printf("%-16s %5s %5s %5s %5s %5s %5s %5s %5s %5s %5s %10s %12s\n", "Test", "C1", "C2",
                "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "P-Value", "Pass Ratio");
    for (const auto& t : report.tests) {
        std::printf("%-16s", t.test_name.c_str());
        for (uint64_t c : t.histogram) std::printf(" %5llu", static_cast<unsigned long long>(c));
        std::printf(" %10.6f %7llu/%llu %s\n", t.uniformity_p,
                    static_cast<unsigned long long>(t.passes),
                    static_cast<unsigned long long>(t.total), t.pass ? "" : "FAIL");
    }
}

void print_report_table(const EntropyReport& r) {
    std::printf("%-12s %-10s %-14s %-12s %-16s\n", "Min-Entropy", "MCV Est.", "Collision Est.",
                "Markov Est.", "Compression Est.");
    std::printf("%-12.4f %-10.4f %-14.4f %-12.4f %-16.4f\n", r.min_entropy, r.mcv, r.collision,
                r.markov, r.compression);
}

// ASCII '0'/'1' streams are accepted next to packed binary; detect by content.
sts::Bits file_to_bits(const std::filesystem::path& path) {
    const std::vector<uint8_t> raw = read_file(path);
    bool ascii = !raw.empty();
    for (uint8_t b : raw) {
        if (b == '0' || b == '1' || b == '\n' || b == '\r' || b == ' ') continue;
        ascii = false;
        break;
    }
    if (ascii) {
        sts::Bits bits;
        bits.reserve(raw.size());
        for (uint8_t b : raw)
            if (b == '0' || b == '1') bits.push_back(b == '1');
        return bits;
    }
    return sts::bytes_to_bits(raw);
}

std::vector<uint8_t> generate_bytes(Generator& generator, size_t n) {
    std::vector<uint8_t> out;
    out.reserve(n);
    while (out.size() < n) {
        const size_t chunk = std::min(n - out.size(), Generator::kMaxRequestBytes);
        const std::vector<uint8_t> part = generator.pseudo_random_data(chunk);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

struct CommonOpts {
    std::string config_path;
    std::optional<uint64_t> noise_seed;
};

SourcesConfig resolve_config(const CommonOpts& opts) {
    SourcesConfig config;
    if (!opts.config_path.empty()) config = load_sources_config(opts.config_path);
    if (opts.noise_seed) {
        config.vlo.noise_seed = *opts.noise_seed;
        config.temp.noise_seed = *opts.noise_seed + 1;
        config.sram.noise_seed = *opts.noise_seed + 2;
    }
    return config;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fortuna-style PRNG with simulated embedded entropy sources"};
    app.require_subcommand(1);

    // --- seed-extract ---
    std::string image_path, seed_out;
    auto* seed_extract_cmd = app.add_subcommand("seed-extract", "Mix an SRAM image into a 64-byte seed");
    seed_extract_cmd->add_option("image", image_path, "raw 10240-byte SRAM image")->required();
    seed_extract_cmd->add_option("-o,--out", seed_out, "write the 64-byte seed here");

    // --- generate ---
    std::string gen_seed_file, gen_image, gen_out;
    size_t gen_bytes = 0;
    bool gen_boot_sim = false;
    CommonOpts gen_opts;
    auto* generate_cmd = app.add_subcommand("generate", "Produce generator output bytes");
    generate_cmd->add_option("-n,--bytes", gen_bytes, "bytes to generate")->required();
    generate_cmd->add_option("-o,--out", gen_out, "output file")->required();
    auto* seed_src = generate_cmd->add_option("--seed-file", gen_seed_file, "64-byte seed file");
    auto* img_src = generate_cmd->add_option("--image", gen_image, "boot from an SRAM image file");
    auto* sim_src = generate_cmd->add_flag("--sram-boot", gen_boot_sim, "boot from a simulated SRAM startup");
    generate_cmd->add_option("--config", gen_opts.config_path, "sources config JSON");
    generate_cmd->add_option("--noise-seed", gen_opts.noise_seed, "override simulation noise seed");
    seed_src->excludes(img_src)->excludes(sim_src);
    img_src->excludes(sim_src);

    // --- simulate ---
    std::string sim_source, sim_out;
    size_t sim_count = 0;
    CommonOpts sim_opts;
    auto* simulate_cmd = app.add_subcommand("simulate", "Dump samples from a source model");
    simulate_cmd->add_option("--source", sim_source, "vlo | temp | sram")
        ->required()
        ->check(CLI::IsMember({"vlo", "temp", "sram"}));
    simulate_cmd->add_option("--count", sim_count, "samples (startups for sram)")->required();
    simulate_cmd->add_option("-o,--out", sim_out, "output sample file")->required();
    simulate_cmd->add_option("--config", sim_opts.config_path, "sources config JSON");
    simulate_cmd->add_option("--noise-seed", sim_opts.noise_seed, "override simulation noise seed");

    // --- estimate ---
    std::string est_in;
    bool est_table = false;
    auto* estimate_cmd = app.add_subcommand("estimate", "Min-entropy report for a sample file");
    estimate_cmd->add_option("input", est_in, "raw sample file, one sample per byte")->required();
    estimate_cmd->add_flag("--table", est_table, "also print the report as a table");

    // --- sts ---
    std::vector<std::string> sts_files;
    size_t sts_block_m = 128;
    bool sts_table = false;
    auto* sts_cmd = app.add_subcommand("sts", "Statistical test batch over bit streams");
    sts_cmd->add_option("files", sts_files, "packed-binary or ASCII 0/1 stream files")->required();
    sts_cmd->add_option("--block-frequency-m", sts_block_m, "BlockFrequency block length");
    sts_cmd->add_flag("--table", sts_table, "also print the batch as a table");

    // --- harvest ---
    double harvest_duration = 1.0;
    CommonOpts harvest_opts;
    uint32_t harvest_threshold = 58;
    double harvest_min_interval = 0.0;
    auto* harvest_cmd = app.add_subcommand("harvest", "Run both runtime sources into the accumulator");
    harvest_cmd->add_option("--duration", harvest_duration, "simulated seconds")->required();
    harvest_cmd->add_option("--config", harvest_opts.config_path, "sources config JSON");
    harvest_cmd->add_option("--noise-seed", harvest_opts.noise_seed, "override simulation noise seed");
    harvest_cmd->add_option("--reseed-threshold", harvest_threshold, "pool-0 events per reseed");
    harvest_cmd->add_option("--min-reseed-interval", harvest_min_interval, "seconds between reseeds");

    // --- pipeline ---
    size_t pipe_streams = 100;
    size_t pipe_bits = 1000000;
    double pipe_harvest_s = 0.1;
    std::string pipe_out;
    CommonOpts pipe_opts;
    auto* pipeline_cmd = app.add_subcommand(
        "pipeline", "Chain simulate -> harvest -> generate -> sts over N SRAM boots");
    pipeline_cmd->add_option("--streams", pipe_streams, "number of generated sequences");
    pipeline_cmd->add_option("--bits", pipe_bits, "bits per sequence (multiple of 8)");
    pipeline_cmd->add_option("--harvest-duration", pipe_harvest_s,
                             "simulated seconds of runtime-source harvesting per stream (0 skips)");
    pipeline_cmd->add_option("-o,--out", pipe_out, "write the batch report JSON here");
    pipeline_cmd->add_option("--config", pipe_opts.config_path, "sources config JSON");
    pipeline_cmd->add_option("--noise-seed", pipe_opts.noise_seed, "override simulation noise seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*seed_extract_cmd) {
            const std::vector<uint8_t> raw = read_file(image_path);
            const Seed seed = extract_seed(to_sram_image(raw));
            if (!seed_out.empty()) write_file(seed_out, seed);
            std::cout << to_hex(seed) << "\n";
            return kExitOk;
        }

        if (*generate_cmd) {
            if (gen_bytes == 0) throw std::invalid_argument("byte count must be positive");
            Generator generator;
            if (!gen_seed_file.empty()) {
                const std::vector<uint8_t> seed = read_file(gen_seed_file);
                if (seed.size() != kSeedBytes)
                    throw std::invalid_argument("seed file must be exactly 64 bytes");
                generator.reseed(seed);
            } else if (!gen_image.empty()) {
                const Seed seed = extract_seed(to_sram_image(read_file(gen_image)));
                generator.reseed(seed);
            } else if (gen_boot_sim) {
                SramModel sram(resolve_config(gen_opts).sram);
                const Seed seed = extract_seed(sram.power_on());
                generator.reseed(seed);
            } else {
                throw std::invalid_argument("choose one of --seed-file, --image, --sram-boot");
            }
            write_file(gen_out, generate_bytes(generator, gen_bytes));
            return kExitOk;
        }

        if (*simulate_cmd) {
            if (sim_count == 0) throw std::invalid_argument("count must be positive");
            const SourcesConfig config = resolve_config(sim_opts);
            SampleStream stream;
            if (sim_source == "vlo") {
                VloModel model(config.vlo);
                stream.samples.resize(sim_count);
                model.fill(stream.samples);
                stream.source_kind = "vlo";
                stream.rate_hz = config.vlo.nominal_rate_hz;
            } else if (sim_source == "temp") {
                TempModel model(config.temp);
                stream.samples.resize(sim_count);
                model.fill(stream.samples);
                stream.source_kind = "temp";
                stream.rate_hz = config.temp.sample_rate_hz;
            } else {
                SramModel model(config.sram);
                stream.samples.reserve(sim_count * kSramImageBytes);
                for (size_t i = 0; i < sim_count; ++i) {
                    const SramImage image = model.power_on();
                    stream.samples.insert(stream.samples.end(), image.begin(), image.end());
                }
                stream.source_kind = "sram";
                stream.rate_hz = 0.0;
            }
            save_sample_stream(sim_out, stream);
            return kExitOk;
        }

        if (*estimate_cmd) {
            const SampleStream stream = load_sample_stream(est_in);
            const EntropyReport report = full_report(stream.samples);
            std::cout << report_to_json(report).dump(2) << "\n";
            if (est_table) print_report_table(report);
            return kExitOk;
        }

        if (*sts_cmd) {
            std::vector<sts::Bits> streams;
            streams.reserve(sts_files.size());
            for (const auto& f : sts_files) streams.push_back(file_to_bits(f));
            sts::BatchConfig config;
            config.block_frequency_m = sts_block_m;
            const sts::BatchReport report = sts::run_batch(streams, config);
            std::cout << batch_to_json(report).dump(2) << "\n";
            if (sts_table) print_batch_table(report);
            return report.all_pass ? kExitOk : kExitStatFail;
        }

        if (*harvest_cmd) {
            const SourcesConfig config = resolve_config(harvest_opts);
            VloModel vlo(config.vlo);
            TempModel temp(config.temp);
            Accumulator accumulator(AccumulatorConfig{harvest_threshold, harvest_min_interval});
            Generator generator;
            const HarvestStats stats = run_harvest(vlo, temp, accumulator, generator, harvest_duration);

            const auto counts = accumulator.event_counts();
            json diag{
                {"duration_s", stats.duration_s},
                {"vlo_events", stats.vlo_events},
                {"temp_events", stats.temp_events},
                {"reseeds", stats.reseeds},
                {"first_reseed_time_s", stats.first_reseed_time_s},
                {"first_reseed_pool0_events", stats.first_reseed_pool0_events},
                {"measured_event_rate_hz", stats.measured_event_rate_hz},
                {"reseed_counter", accumulator.reseed_count()},
                {"pool_event_counts", counts},
                {"generator_seeded", generator.seeded()},
                // Both readings of the reseed cadence at the measured rate:
                // the single-pool reading assumes every event lands in the
                // gating pool; round-robin accounts for the 32-way split.
                {"cadence",
                 {{"gating_pool_seconds", stats.cadence.gating_pool_seconds},
                  {"round_robin_seconds", stats.cadence.round_robin_seconds}}},
            };
            std::cout << diag.dump(2) << "\n";
            return kExitOk;
        }

        if (*pipeline_cmd) {
            if (pipe_streams == 0 || pipe_bits == 0 || pipe_bits % 8 != 0)
                throw std::invalid_argument("pipeline needs streams >= 1 and bits a positive multiple of 8");
            const SourcesConfig config = resolve_config(pipe_opts);
            SramModel sram(config.sram);
            VloModel vlo(config.vlo);
            TempModel temp(config.temp);

            std::vector<sts::Bits> streams;
            streams.reserve(pipe_streams);
            for (size_t i = 0; i < pipe_streams; ++i) {
                Generator generator;
                generator.reseed(extract_seed(sram.power_on()));
                if (pipe_harvest_s > 0.0) {
                    Accumulator accumulator;
                    run_harvest(vlo, temp, accumulator, generator, pipe_harvest_s);
                }
                streams.push_back(sts::bytes_to_bits(generate_bytes(generator, pipe_bits / 8)));
            }
            const sts::BatchReport report = sts::run_batch(streams);
            const json out = batch_to_json(report);
            if (!pipe_out.empty()) {
                const std::string text = out.dump(2);
                write_file(pipe_out, std::span<const uint8_t>(
                                         reinterpret_cast<const uint8_t*>(text.data()), text.size()));
            }
            std::cout << out.dump(2) << "\n";
            print_batch_table(report);
            return report.all_pass ? kExitOk : kExitStatFail;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
