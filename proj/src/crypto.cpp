#include "entrokit/crypto.hpp"

#include <openssl/evp.h>

#include <stdexcept>

namespace entrokit {

namespace {

[[noreturn]] void fail(const char* what) { throw std::runtime_error(what); }

} // namespace

Sha256::Sha256() : ctx_(EVP_MD_CTX_new()) {
    if (!ctx_ || EVP_DigestInit_ex(ctx_, EVP_sha256(), nullptr) != 1) fail("SHA-256 init failed");
}

Sha256::Sha256(const Sha256& other) : ctx_(EVP_MD_CTX_new()) {
    if (!ctx_ || EVP_MD_CTX_copy_ex(ctx_, other.ctx_) != 1) fail("SHA-256 copy failed");
}

Sha256& Sha256::operator=(const Sha256& other) {
    if (this != &other && EVP_MD_CTX_copy_ex(ctx_, other.ctx_) != 1) fail("SHA-256 copy failed");
    return *this;
}

Sha256::Sha256(Sha256&& other) noexcept : ctx_(other.ctx_) { other.ctx_ = nullptr; }

Sha256& Sha256::operator=(Sha256&& other) noexcept {
    if (this != &other) {
        EVP_MD_CTX_free(ctx_);
        ctx_ = other.ctx_;
        other.ctx_ = nullptr;
    }
    return *this;
}

Sha256::~Sha256() { EVP_MD_CTX_free(ctx_); }

void Sha256::update(std::span<const uint8_t> data) {
    if (EVP_DigestUpdate(ctx_, data.data(), data.size()) != 1) fail("SHA-256 update failed");
}

Digest256 Sha256::digest() const {
    // Finalize a copy so the running context is preserved.
    Sha256 copy(*this);
    Digest256 out{};
    unsigned int len = 0;
    if (EVP_DigestFinal_ex(copy.ctx_, out.data(), &len) != 1 || len != out.size())
        fail("SHA-256 final failed");
    return out;
}

Digest256 Sha256::finalize_reset() {
    Digest256 out{};
    unsigned int len = 0;
    if (EVP_DigestFinal_ex(ctx_, out.data(), &len) != 1 || len != out.size())
        fail("SHA-256 final failed");
    reset();
    return out;
}

void Sha256::reset() {
    if (EVP_DigestInit_ex(ctx_, EVP_sha256(), nullptr) != 1) fail("SHA-256 reset failed");
}

Digest256 Sha256::hash(std::span<const uint8_t> data) {
    Sha256 h;
    h.update(data);
    return h.finalize_reset();
}

Aes256::Aes256(std::span<const uint8_t, 32> key) : ctx_(EVP_CIPHER_CTX_new()) {
    auto* ctx = static_cast<EVP_CIPHER_CTX*>(ctx_);
    if (!ctx || EVP_EncryptInit_ex(ctx, EVP_aes_256_ecb(), nullptr, key.data(), nullptr) != 1)
        fail("AES-256 init failed");
    EVP_CIPHER_CTX_set_padding(ctx, 0);
}

Aes256::~Aes256() { EVP_CIPHER_CTX_free(static_cast<EVP_CIPHER_CTX*>(ctx_)); }

void Aes256::encrypt(std::span<const uint8_t> plaintext, std::span<uint8_t> ciphertext) const {
    if (plaintext.size() % 16 != 0 || ciphertext.size() < plaintext.size())
        throw std::invalid_argument("AES-256 ECB requires whole 16-byte blocks");
    auto* ctx = static_cast<EVP_CIPHER_CTX*>(ctx_);
    int outl = 0;
    if (EVP_EncryptUpdate(ctx, ciphertext.data(), &outl,
                          plaintext.data(), static_cast<int>(plaintext.size())) != 1 ||
        outl != static_cast<int>(plaintext.size()))
        fail("AES-256 encrypt failed");
}

} // namespace entrokit
