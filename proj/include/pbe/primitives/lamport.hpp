#pragma once

#include <cstring>

#include "pbe/counters.hpp"
#include "pbe/primitives/hash.hpp"
#include "pbe/primitives/params.hpp"
#include "pbe/random.hpp"

namespace pbe {

/// Lamport one-time signature over SHA-256.
///
/// The key holds two rows of `kOtsBits` preimages, one row per message-digest
/// bit value. Row b, column i lives at offset `(b * kOtsBits + i) * kHashBytes`
/// in both the secret key and the verification key, and `vk[b][i] = H(sk[b][i])`.
/// A signature reveals, for each bit i of H(m) (most significant bit first),
/// the preimage `sk[bit_i][i]`.
inline constexpr std::size_t kOtsBits = kHashBytes * 8;
inline constexpr std::size_t kOtsKeyBytes = 2 * kOtsBits * kHashBytes;   // 16384
inline constexpr std::size_t kOtsSignatureBytes = kOtsBits * kHashBytes;  // 8192

namespace detail {

inline unsigned digest_bit(const Digest& d, std::size_t i) { return (d[i / 8] >> (7 - i % 8)) & 1u; }

inline std::size_t ots_slot(unsigned bit, std::size_t i) { return (bit * kOtsBits + i) * kHashBytes; }

}  // namespace detail

/// Move-only: a copy would carry its own `used` flag and defeat the one-shot
/// guarantee.
class OneTimeKeyPair {
 public:
  static OneTimeKeyPair generate(const SystemParams& params, RandomSource& rng, OpCounters& counters) {
    if (params.hash != HashId::sha256) throw Error("Lamport keys require the 256-bit hash");
    ++counters.ots_gen;
    OneTimeKeyPair kp;
    kp.sk_ = rng.bytes(kOtsKeyBytes);
    kp.vk_.resize(kOtsKeyBytes);
    for (std::size_t off = 0; off < kOtsKeyBytes; off += kHashBytes) {
      auto h = sha256(ByteView(kp.sk_).subspan(off, kHashBytes));
      std::memcpy(kp.vk_.data() + off, h.data(), kHashBytes);
    }
    return kp;
  }

  OneTimeKeyPair(OneTimeKeyPair&&) noexcept = default;
  OneTimeKeyPair& operator=(OneTimeKeyPair&&) noexcept = default;
  OneTimeKeyPair(const OneTimeKeyPair&) = delete;
  OneTimeKeyPair& operator=(const OneTimeKeyPair&) = delete;

  const Bytes& verification_key() const { return vk_; }
  ByteView secret_key() const { return sk_; }
  bool used() const { return used_; }

  /// Throws OtsKeyReuse on the second call.
  Bytes sign(ByteView message, OpCounters& counters) {
    if (used_) throw OtsKeyReuse();
    used_ = true;
    ++counters.ots_sign;
    auto d = sha256(message);
    Bytes sig(kOtsSignatureBytes);
    for (std::size_t i = 0; i < kOtsBits; ++i)
      std::memcpy(sig.data() + i * kHashBytes, sk_.data() + detail::ots_slot(detail::digest_bit(d, i), i), kHashBytes);
    return sig;
  }

 private:
  OneTimeKeyPair() = default;

  Bytes sk_;
  Bytes vk_;
  bool used_ = false;
};

/// Total predicate: any size mismatch or garbage key is simply `false`.
inline bool ots_verify(ByteView vk, ByteView message, ByteView sig, OpCounters& counters) {
  ++counters.ots_verify;
  if (vk.size() != kOtsKeyBytes || sig.size() != kOtsSignatureBytes) return false;
  auto d = sha256(message);
  for (std::size_t i = 0; i < kOtsBits; ++i) {
    auto h = sha256(sig.subspan(i * kHashBytes, kHashBytes));
    if (std::memcmp(h.data(), vk.data() + detail::ots_slot(detail::digest_bit(d, i), i), kHashBytes) != 0)
      return false;
  }
  return true;
}

}  // namespace pbe
