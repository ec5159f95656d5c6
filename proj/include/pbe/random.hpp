#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>

#include <openssl/rand.h>

#include "pbe/bytes.hpp"
#include "pbe/primitives/hash.hpp"
#include "pbe/primitives/openssl.hpp"

namespace pbe {

/// Injected source of randomness. Every randomized operation in the library
/// draws from one of these, so seeded runs are reproducible bit for bit.
class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual void fill(std::span<std::uint8_t> out) = 0;

  Bytes bytes(std::size_t n) {
    Bytes b(n);
    fill(b);
    return b;
  }

  std::uint64_t next_u64() {
    std::array<std::uint8_t, 8> b{};
    fill(b);
    std::uint64_t v = 0;
    for (auto c : b) v = (v << 8) | c;
    return v;
  }

  /// Uniform integer in [0, bound). Rejection sampling, no modulo bias.
  std::uint64_t uniform_below(std::uint64_t bound) {
    if (bound == 0) throw Error("uniform_below: empty range");
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
    for (;;) {
      auto v = next_u64();
      if (v < limit) return v % bound;
    }
  }
};

/// Operating-system randomness via the OpenSSL DRBG.
class SystemRandom final : public RandomSource {
 public:
  void fill(std::span<std::uint8_t> out) override {
    if (out.empty()) return;
    ossl::check(RAND_bytes(out.data(), static_cast<int>(out.size())), "RAND_bytes");
  }
};

/// Deterministic ChaCha20 keystream keyed from a 64-bit seed and a stream id.
/// Distinct (seed, stream) pairs give independent streams.
class SeededRandom final : public RandomSource {
 public:
  explicit SeededRandom(std::uint64_t seed, std::uint64_t stream = 0) {
    Bytes material = to_bytes("pbe/seeded-random");
    put_u64(material, seed);
    put_u64(material, stream);
    init(sha256(material));
  }

  explicit SeededRandom(const Digest& key) { init(key); }

  SeededRandom(SeededRandom&&) noexcept = default;
  SeededRandom& operator=(SeededRandom&&) noexcept = default;

  void fill(std::span<std::uint8_t> out) override {
    std::size_t done = 0;
    while (done < out.size()) {
      if (pos_ == buf_.size()) refill();
      auto n = std::min(out.size() - done, buf_.size() - pos_);
      std::copy_n(buf_.begin() + static_cast<std::ptrdiff_t>(pos_), n, out.begin() + static_cast<std::ptrdiff_t>(done));
      pos_ += n;
      done += n;
    }
  }

 private:
  void init(const Digest& key) {
    ctx_ = ossl::new_cipher_ctx();
    std::array<std::uint8_t, 16> iv{};
    ossl::check(EVP_EncryptInit_ex(ctx_.get(), ossl::chacha20_cipher(), nullptr, key.data(), iv.data()),
                "EVP_EncryptInit_ex(ChaCha20)");
    pos_ = buf_.size();
  }

  void refill() {
    static const std::array<std::uint8_t, 4096> zeros{};
    int len = 0;
    ossl::check(EVP_EncryptUpdate(ctx_.get(), buf_.data(), &len, zeros.data(), static_cast<int>(zeros.size())),
                "EVP_EncryptUpdate(ChaCha20)");
    pos_ = 0;
  }

  ossl::CipherCtx ctx_;
  std::array<std::uint8_t, 4096> buf_{};
  std::size_t pos_ = 0;
};

/// Fisher-Yates over the injected source; every permutation equally likely.
template <class T>
void shuffle(std::span<T> items, RandomSource& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    auto j = static_cast<std::size_t>(rng.uniform_below(i));
    using std::swap;
    swap(items[i - 1], items[j]);
  }
}

}  // namespace pbe
