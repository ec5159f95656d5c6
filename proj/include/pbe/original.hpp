#pragma once

#include <optional>

#include "pbe/ciphertext.hpp"
#include "pbe/counters.hpp"
#include "pbe/primitives/lamport.hpp"
#include "pbe/primitives/pke.hpp"
#include "pbe/primitives/symmetric.hpp"

// The baseline private broadcast scheme: a fresh Lamport key per broadcast,
// its verification key shipped inside every recipient component, and the
// signature checked only after a component has been opened.
namespace pbe::original {

/// Plaintext of every component: vk (16384 bytes) || K (32 bytes).
inline constexpr std::size_t kComponentPlaintextBytes = kOtsKeyBytes + kSymmetricKeyBytes;

inline SystemParams setup(unsigned security_level) { return pke_init(security_level); }

inline RecipientKeyPair keygen(const SystemParams& params, RandomSource& rng) { return pke_gen(params, rng); }

inline BroadcastCiphertext encrypt(const SystemParams& params, const RecipientSet& recipients, ByteView message,
                                   RandomSource& rng, OpCounters& counters) {
  detail::check_message_size(message);
  auto ots = OneTimeKeyPair::generate(params, rng, counters);
  auto key = SymmetricKey::random(rng);

  Bytes payload = ots.verification_key();
  append(payload, key.bytes);

  BroadcastCiphertext ct;
  ct.scheme = SchemeTag::original;
  ct.c1.reserve(recipients.size());
  for (const auto& pk : recipients.keys()) ct.c1.push_back(pke_enc(params, pk, payload, rng, counters));
  shuffle(std::span(ct.c1), rng);
  ct.c2 = sym_enc(key, message, rng, counters);
  ct.sigma = ots.sign(ct.signed_payload(), counters);
  return ct;
}

/// Tries every component in order; returns at the first one whose recovered
/// vk accepts sigma. Empty on non-membership or any malformation.
inline std::optional<Bytes> decrypt(const SystemParams& params, const RecipientSecretKey& sk,
                                    const BroadcastCiphertext& ct, RejectMode mode, OpCounters& counters) {
  if (ct.scheme != SchemeTag::original || !ct.well_formed()) return std::nullopt;
  if (ct.c1.front().size() < pke_overhead(params)) return std::nullopt;
  const auto signed_bytes = ct.signed_payload();
  for (const auto& c : ct.c1) {
    auto p = pke_dec(params, sk, c, mode, counters);
    if (!p) continue;
    // A permissive-mode garbage plaintext of the wrong size fails to parse.
    if (p->size() != kComponentPlaintextBytes) continue;
    auto vk = ByteView(*p).first(kOtsKeyBytes);
    auto key = *SymmetricKey::from(ByteView(*p).subspan(kOtsKeyBytes));
    if (ots_verify(vk, signed_bytes, ct.sigma, counters)) return sym_dec(key, ct.c2, counters);
  }
  return std::nullopt;
}

}  // namespace pbe::original
