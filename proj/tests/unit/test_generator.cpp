#include <doctest.h>

#include "entrokit/generator.hpp"
#include "entrokit/stream_io.hpp"

#include <numeric>
#include <vector>

using namespace entrokit;

namespace {

GeneratorKey zero_key() { return GeneratorKey{}; }

// 00 11 22 ... ff
std::vector<uint8_t> material_0_to_f() {
    std::vector<uint8_t> m(16);
    for (size_t i = 0; i < m.size(); ++i) m[i] = static_cast<uint8_t>(i * 0x11);
    return m;
}

} // namespace

TEST_CASE("fresh generator state") {
    Generator g;
    CHECK_FALSE(g.seeded());
    CHECK(g.counter().is_zero());
    CHECK(g.key() == zero_key());
    CHECK_THROWS_AS(g.generate_blocks(1), std::logic_error);
    CHECK_THROWS_AS(g.pseudo_random_data(16), std::logic_error);
}

TEST_CASE("reseed chains through SHA-256 and counts") {
    Generator g;
    g.reseed(material_0_to_f()); // 00 11 22 ... ff
    CHECK(g.seeded());
    CHECK(to_hex(g.key()) == "ed065baa6806cf487dda0c54575c21925b6ed1652246d0050e1584f4c6e86d1a");
    CHECK(g.counter() == Counter128{0, 1});

    Generator h;
    for (int i = 0; i < 5; ++i) h.reseed(material_0_to_f());
    CHECK(h.counter() == Counter128{0, 5});

    CHECK_THROWS_AS(g.reseed({}), std::invalid_argument);
}

TEST_CASE("two reseeds differ from one concatenated reseed") {
    const std::vector<uint8_t> m1(8, 0x01);
    const std::vector<uint8_t> m2(8, 0x02);
    std::vector<uint8_t> joined = m1;
    joined.insert(joined.end(), m2.begin(), m2.end());

    Generator a;
    a.reseed(m1);
    a.reseed(m2);
    Generator b;
    b.reseed(joined);
    CHECK(a.key() != b.key());
}

TEST_CASE("counter-mode block generation") {
    SUBCASE("zero key and zero counter reproduce the cipher known answer") {
        Generator g(zero_key(), Counter128{0, 0}, true);
        const auto block = g.generate_blocks(1);
        CHECK(to_hex(block) == "dc95c078a2408989ad48a21492842087");
        CHECK(g.counter() == Counter128{0, 1});
    }

    SUBCASE("one call of two blocks equals two calls of one") {
        Generator g;
        g.reseed(material_0_to_f());
        Generator h = g;
        auto both = g.generate_blocks(2);
        auto first = h.generate_blocks(1);
        auto second = h.generate_blocks(1);
        first.insert(first.end(), second.begin(), second.end());
        CHECK(both == first);
        CHECK(to_hex(both) ==
              "4b43d85a060f68c777cd3afac4404631974855152bf5413578ecd98e747c91ea");
        CHECK(g.counter() == h.counter());
    }

    SUBCASE("counter advances by the block count") {
        Generator g;
        g.reseed(material_0_to_f());
        g.generate_blocks(7);
        CHECK(g.counter() == Counter128{0, 8}); // 1 from the reseed
        CHECK_THROWS_AS(g.generate_blocks(0), std::invalid_argument);
    }
}

TEST_CASE("pseudo_random_data output and key rotation") {
    Generator g;
    g.reseed(material_0_to_f());
    const GeneratorKey before = g.key();
    const auto out = g.pseudo_random_data(16);

    CHECK(to_hex(out) == "4b43d85a060f68c777cd3afac4404631");
    CHECK(to_hex(g.key()) == "974855152bf5413578ecd98e747c91ea0afcb99436ed7343d48202781ae427c7");
    CHECK(g.key() != before);
    CHECK(g.counter() == Counter128{0, 4}); // reseed + 1 data block + 2 rotation blocks

    // short requests still consume whole blocks
    Generator h;
    h.reseed(material_0_to_f());
    const auto five = h.pseudo_random_data(5);
    CHECK(five.size() == 5);
    CHECK(std::equal(five.begin(), five.end(), out.begin()));
}

TEST_CASE("every request rotates the key and changes the output") {
    Generator g;
    g.reseed(material_0_to_f());
    std::vector<uint8_t> prev;
    for (int i = 0; i < 50; ++i) {
        const GeneratorKey key_before = g.key();
        const auto out = g.pseudo_random_data(16);
        CHECK(g.key() != key_before);
        if (!prev.empty()) CHECK(out != prev);
        prev = out;
    }
}

TEST_CASE("request size limits") {
    Generator g;
    g.reseed(material_0_to_f());
    CHECK_THROWS_AS(g.pseudo_random_data(0), std::invalid_argument);
    CHECK_THROWS_AS(g.pseudo_random_data(Generator::kMaxRequestBytes + 1), std::invalid_argument);
    CHECK_NOTHROW(g.pseudo_random_data(Generator::kMaxRequestBytes));
}

TEST_CASE("identical seeds give identical streams") {
    Generator a, b;
    a.reseed(material_0_to_f());
    b.reseed(material_0_to_f());
    CHECK(a.pseudo_random_data(4096) == b.pseudo_random_data(4096));
    CHECK(a.pseudo_random_data(100) == b.pseudo_random_data(100));
}

TEST_CASE("counter overflow is fatal") {
    Counter128 c{~uint64_t{0}, ~uint64_t{0}};
    CHECK_THROWS_AS(c.add(1), std::overflow_error);

    Counter128 carry{0, ~uint64_t{0}};
    carry.add(1);
    CHECK(carry == Counter128{1, 0});

    Generator g(zero_key(), Counter128{~uint64_t{0}, ~uint64_t{0}}, true);
    CHECK_THROWS_AS(g.generate_blocks(1), std::overflow_error);
}

TEST_CASE("counter serializes big-endian") {
    const Counter128 c{0x0102030405060708ULL, 0x090A0B0C0D0E0F10ULL};
    CHECK(to_hex(c.to_bytes_be()) == "0102030405060708090a0b0c0d0e0f10");
}
