// Python bindings for the main operations: CRC seed extraction, the
// generator/accumulator pair, source simulators, min-entropy estimators,
// and the statistical test batch.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "entrokit/accumulator.hpp"
#include "entrokit/crc16.hpp"
#include "entrokit/estimators.hpp"
#include "entrokit/generator.hpp"
#include "entrokit/seed_extract.hpp"
#include "entrokit/sources.hpp"
#include "entrokit/sts.hpp"

#include <string>
#include <vector>

namespace py = pybind11;
using namespace entrokit;

namespace {

std::vector<uint8_t> to_vec(const py::bytes& data) {
    const std::string_view view = data;
    return std::vector<uint8_t>(view.begin(), view.end());
}

py::bytes to_bytes(std::span<const uint8_t> data) {
    return py::bytes(reinterpret_cast<const char*>(data.data()), data.size());
}

py::dict report_dict(const EntropyReport& r) {
    py::dict d;
    d["min_entropy"] = r.min_entropy;
    d["mcv"] = r.mcv;
    d["collision"] = r.collision;
    d["markov"] = r.markov;
    d["compression"] = r.compression;
    d["sample_count"] = r.sample_count;
    d["alphabet_size"] = r.alphabet_size;
    d["bits_per_sample"] = r.bits_per_sample;
    d["collision_fallback"] = r.collision_fallback;
    return d;
}

py::dict aggregate_dict(const sts::TestAggregate& t) {
    py::dict d;
    d["test"] = t.test_name;
    d["histogram"] = t.histogram;
    d["passes"] = t.passes;
    d["total"] = t.total;
    d["uniformity_p"] = t.uniformity_p;
    d["pass_ratio"] = t.pass_ratio;
    d["threshold"] = t.threshold;
    d["pass"] = t.pass;
    return d;
}

py::dict batch_dict(const sts::BatchReport& report) {
    py::list tests;
    for (const auto& t : report.tests) tests.append(aggregate_dict(t));
    py::dict d;
    d["stream_count"] = report.stream_count;
    d["all_pass"] = report.all_pass;
    d["tests"] = tests;
    return d;
}

sts::Bits bits_arg(const py::bytes& data) {
    // accepts a buffer of 0/1 byte values
    return to_vec(data);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Fortuna-style PRNG with simulated embedded entropy sources";

    // ---- CRC mixing and seed extraction
    m.def(
        "crc16",
        [](const py::bytes& block, uint16_t init) { return crc16(to_vec(block), init); },
        py::arg("block"), py::arg("init") = kCrc16Init);
    m.def("extract_seed", [](const py::bytes& image) {
        return to_bytes(extract_seed(to_sram_image(to_vec(image))));
    });

    // ---- generator
    py::class_<Generator>(m, "Generator")
        .def(py::init<>())
        .def("reseed", [](Generator& g, const py::bytes& material) { g.reseed(to_vec(material)); })
        .def("generate_blocks",
             [](Generator& g, uint64_t k) { return to_bytes(g.generate_blocks(k)); })
        .def("pseudo_random_data",
             [](Generator& g, size_t n) { return to_bytes(g.pseudo_random_data(n)); })
        .def_property_readonly("seeded", &Generator::seeded)
        .def_property_readonly("key", [](const Generator& g) { return to_bytes(g.key()); })
        .def_property_readonly("counter", [](const Generator& g) {
            const Counter128 c = g.counter();
            return py::make_tuple(c.hi, c.lo);
        });

    // ---- accumulator
    py::class_<Accumulator>(m, "Accumulator")
        .def(py::init([](uint32_t reseed_threshold, double min_reseed_interval_s) {
                 return std::make_unique<Accumulator>(
                     AccumulatorConfig{reseed_threshold, min_reseed_interval_s});
             }),
             py::arg("reseed_threshold") = 58, py::arg("min_reseed_interval_s") = 0.0)
        .def(
            "add_event",
            [](Accumulator& a, const py::bytes& payload, uint8_t source_tag) {
                a.add_event(EntropyEvent{to_vec(payload), source_tag});
            },
            py::arg("payload"), py::arg("source_tag"))
        .def("reseed_ready", [](const Accumulator& a) { return a.reseed_ready(); })
        .def("reseed", [](Accumulator& a, Generator& g) { a.reseed(g); })
        .def("event_counts", &Accumulator::event_counts)
        .def("reseed_count", &Accumulator::reseed_count)
        .def("peek_pool_digest",
             [](const Accumulator& a, int pool) { return to_bytes(a.peek_pool_digest(pool)); });

    m.def(
        "reseed_cadence",
        [](double events_per_second, uint32_t threshold) {
            const ReseedCadence c = reseed_cadence(events_per_second, threshold);
            py::dict d;
            d["gating_pool_seconds"] = c.gating_pool_seconds;
            d["round_robin_seconds"] = c.round_robin_seconds;
            return d;
        },
        py::arg("events_per_second"), py::arg("threshold") = 58);

    // ---- source simulators
    py::class_<VloModel>(m, "VloModel")
        .def(py::init([](double nominal_rate_hz, double fast_clock_hz, double jitter_sigma_s,
                         double wander_hz_per_s, uint64_t noise_seed) {
                 VloConfig c;
                 c.nominal_rate_hz = nominal_rate_hz;
                 c.fast_clock_hz = fast_clock_hz;
                 c.jitter_sigma_s = jitter_sigma_s >= 0 ? jitter_sigma_s : VloConfig{}.jitter_sigma_s;
                 c.wander_hz_per_s = wander_hz_per_s;
                 c.noise_seed = noise_seed;
                 return VloModel(c);
             }),
             py::arg("nominal_rate_hz") = 9500.0, py::arg("fast_clock_hz") = 24.0e6,
             py::arg("jitter_sigma_s") = -1.0, py::arg("wander_hz_per_s") = 0.0,
             py::arg("noise_seed") = 1)
        .def("sample", &VloModel::sample)
        .def("sample_stream", [](VloModel& v, size_t n) {
            std::vector<uint8_t> out(n);
            v.fill(out);
            return to_bytes(out);
        })
        .def_property_readonly("elapsed_s", &VloModel::elapsed_s);

    py::class_<TempModel>(m, "TempModel")
        .def(py::init([](double baseline_code, double drift_codes_per_s, double noise_sigma_codes,
                         double sample_rate_hz, uint64_t noise_seed) {
                 TempConfig c;
                 c.baseline_code = baseline_code;
                 c.drift_codes_per_s = drift_codes_per_s;
                 c.noise_sigma_codes =
                     noise_sigma_codes >= 0 ? noise_sigma_codes : TempConfig{}.noise_sigma_codes;
                 c.sample_rate_hz = sample_rate_hz;
                 c.noise_seed = noise_seed;
                 return TempModel(c);
             }),
             py::arg("baseline_code") = 1650.0, py::arg("drift_codes_per_s") = 0.0,
             py::arg("noise_sigma_codes") = -1.0, py::arg("sample_rate_hz") = 9500.0,
             py::arg("noise_seed") = 2)
        .def("sample", &TempModel::sample)
        .def("sample_code", &TempModel::sample_code)
        .def("sample_stream", [](TempModel& t, size_t n) {
            std::vector<uint8_t> out(n);
            t.fill(out);
            return to_bytes(out);
        });

    py::class_<SramModel>(m, "SramModel")
        .def(py::init([](double bias_mix, double flip_prob, double persistence, uint64_t bias_seed,
                         uint64_t noise_seed) {
                 SramConfig c;
                 c.bias_mix = bias_mix;
                 c.flip_prob = flip_prob;
                 c.persistence = persistence;
                 c.bias_seed = bias_seed;
                 c.noise_seed = noise_seed;
                 return SramModel(c);
             }),
             py::arg("bias_mix") = SramConfig{}.bias_mix,
             py::arg("flip_prob") = SramConfig{}.flip_prob,
             py::arg("persistence") = SramConfig{}.persistence, py::arg("bias_seed") = 3,
             py::arg("noise_seed") = 4)
        .def("power_on", [](SramModel& s) { return to_bytes(s.power_on()); });

    m.def(
        "run_harvest",
        [](VloModel& vlo, TempModel& temp, Accumulator& acc, Generator& gen, double duration_s) {
            const HarvestStats stats = run_harvest(vlo, temp, acc, gen, duration_s);
            py::dict d;
            d["duration_s"] = stats.duration_s;
            d["vlo_events"] = stats.vlo_events;
            d["temp_events"] = stats.temp_events;
            d["reseeds"] = stats.reseeds;
            d["first_reseed_time_s"] = stats.first_reseed_time_s;
            d["first_reseed_pool0_events"] = stats.first_reseed_pool0_events;
            d["measured_event_rate_hz"] = stats.measured_event_rate_hz;
            d["cadence_gating_pool_seconds"] = stats.cadence.gating_pool_seconds;
            d["cadence_round_robin_seconds"] = stats.cadence.round_robin_seconds;
            return d;
        },
        py::arg("vlo"), py::arg("temp"), py::arg("accumulator"), py::arg("generator"),
        py::arg("duration_s"));

    // ---- min-entropy estimators
    m.def("mcv_estimate", [](const py::bytes& s) { return mcv_estimate(to_vec(s)); });
    m.def("collision_estimate", [](const py::bytes& b) { return collision_estimate(bits_arg(b)); });
    m.def("markov_estimate", [](const py::bytes& b) { return markov_estimate(bits_arg(b)); });
    m.def("compression_estimate",
          [](const py::bytes& b) { return compression_estimate(bits_arg(b)); });
    m.def("full_report", [](const py::bytes& s) { return report_dict(full_report(to_vec(s))); });

    // ---- statistical tests
    m.def("bytes_to_bits", [](const py::bytes& data) { return to_bytes(sts::bytes_to_bits(to_vec(data))); });
    m.def("frequency_test", [](const py::bytes& b) { return sts::frequency_test(bits_arg(b)); });
    m.def(
        "block_frequency_test",
        [](const py::bytes& b, size_t m_len) { return sts::block_frequency_test(bits_arg(b), m_len); },
        py::arg("bits"), py::arg("block_len") = 128);
    m.def(
        "cusum_test",
        [](const py::bytes& b, bool reverse) {
            return sts::cusum_test(bits_arg(b), reverse ? sts::CusumDirection::reverse
                                                        : sts::CusumDirection::forward);
        },
        py::arg("bits"), py::arg("reverse") = false);
    m.def("runs_test", [](const py::bytes& b) { return sts::runs_test(bits_arg(b)); });
    m.def("longest_run_test", [](const py::bytes& b) { return sts::longest_run_test(bits_arg(b)); });
    m.def(
        "run_batch",
        [](const std::vector<py::bytes>& streams, size_t block_frequency_m) {
            std::vector<sts::Bits> bits;
            bits.reserve(streams.size());
            for (const auto& s : streams) bits.push_back(bits_arg(s));
            sts::BatchConfig config;
            config.block_frequency_m = block_frequency_m;
            return batch_dict(sts::run_batch(bits, config));
        },
        py::arg("streams"), py::arg("block_frequency_m") = 128);
    m.def(
        "aggregate_histogram",
        [](const std::string& name, const std::array<uint64_t, 10>& hist, uint64_t passes,
           uint64_t total) { return aggregate_dict(sts::aggregate_histogram(name, hist, passes, total)); },
        py::arg("name"), py::arg("histogram"), py::arg("passes"), py::arg("total"));

    m.attr("SRAM_IMAGE_BYTES") = kSramImageBytes;
    m.attr("SEED_BYTES") = kSeedBytes;
    m.attr("MAX_REQUEST_BYTES") = Generator::kMaxRequestBytes;
}
