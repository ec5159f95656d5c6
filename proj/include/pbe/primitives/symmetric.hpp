#pragma once

#include <optional>

#include "pbe/counters.hpp"
#include "pbe/primitives/aead.hpp"
#include "pbe/primitives/params.hpp"
#include "pbe/random.hpp"

namespace pbe {

struct SymmetricKey {
  aead::Key bytes{};

  static SymmetricKey random(RandomSource& rng) {
    SymmetricKey k;
    rng.fill(k.bytes);
    return k;
  }

  static std::optional<SymmetricKey> from(ByteView b) {
    if (b.size() != kSymmetricKeyBytes) return std::nullopt;
    SymmetricKey k;
    std::copy(b.begin(), b.end(), k.bytes.begin());
    return k;
  }

  bool operator==(const SymmetricKey&) const = default;
};

/// Ciphertext layout: nonce || body || tag.
inline constexpr std::size_t kSymOverhead = aead::kNonceBytes + aead::kTagBytes;

inline Bytes sym_enc(const SymmetricKey& key, ByteView message, RandomSource& rng, OpCounters& counters) {
  ++counters.sym_enc;
  aead::Nonce nonce{};
  rng.fill(nonce);
  Bytes out(nonce.begin(), nonce.end());
  append(out, aead::seal(key.bytes, nonce, message));
  return out;
}

/// Empty on a wrong key or any corruption.
inline std::optional<Bytes> sym_dec(const SymmetricKey& key, ByteView ciphertext, OpCounters& counters) {
  ++counters.sym_dec;
  if (ciphertext.size() < kSymOverhead) return std::nullopt;
  aead::Nonce nonce{};
  std::copy_n(ciphertext.begin(), aead::kNonceBytes, nonce.begin());
  return aead::open(key.bytes, nonce, ciphertext.subspan(aead::kNonceBytes));
}

}  // namespace pbe
