// Thin RAII wrappers over the OpenSSL EVP primitives used by the generator
// and accumulator: SHA-256 (incremental, copyable) and AES-256 in ECB mode
// for single-block counter encryption. Correctness is gated by standard
// known-answer vectors in the test suite.
#pragma once

#include <array>
#include <cstdint>
#include <span>

typedef struct evp_md_ctx_st EVP_MD_CTX;

namespace entrokit {

using Digest256 = std::array<uint8_t, 32>;

class Sha256 {
public:
    Sha256();
    Sha256(const Sha256& other);
    Sha256& operator=(const Sha256& other);
    Sha256(Sha256&& other) noexcept;
    Sha256& operator=(Sha256&& other) noexcept;
    ~Sha256();

    void update(std::span<const uint8_t> data);

    // Digest of everything absorbed so far; the context stays usable.
    Digest256 digest() const;

    // Digest plus reset to the empty context.
    Digest256 finalize_reset();

    void reset();

    static Digest256 hash(std::span<const uint8_t> data);

private:
    EVP_MD_CTX* ctx_;
};

// One-block AES-256 encryption (ECB, no padding). The block cipher behind
// the counter-mode generator; input sizes must be multiples of 16.
class Aes256 {
public:
    explicit Aes256(std::span<const uint8_t, 32> key);
    Aes256(const Aes256&) = delete;
    Aes256& operator=(const Aes256&) = delete;
    ~Aes256();

    void encrypt(std::span<const uint8_t> plaintext, std::span<uint8_t> ciphertext) const;

private:
    void* ctx_;
};

} // namespace entrokit
