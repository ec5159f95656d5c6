#pragma once

#include <algorithm>
#include <optional>

#include "pbe/ciphertext.hpp"
#include "pbe/counters.hpp"
#include "pbe/primitives/pke.hpp"
#include "pbe/primitives/signature.hpp"
#include "pbe/primitives/symmetric.hpp"

// The improved scheme: a long-term broadcaster signing key, origin checked
// before any public-key decryption, and pk_B as a header inside each component
// so a recipient can tell which component is addressed to it.
namespace pbe::improved {

/// Plaintext of every component: pk_B (header_len bytes) || K (32 bytes).
inline std::size_t component_plaintext_bytes(const SystemParams& params) {
  return params.header_len() + kSymmetricKeyBytes;
}

inline BroadcasterKeyPair keygen_broadcaster(const SystemParams& params, RandomSource& rng) {
  return sig_gen(params, rng);
}

inline BroadcastCiphertext encrypt(const SystemParams& params, const RecipientSet& recipients, ByteView message,
                                   const BroadcasterKeyPair& broadcaster, RandomSource& rng, OpCounters& counters) {
  detail::check_message_size(message);
  if (broadcaster.pk.size() != params.header_len()) throw MalformedInput("broadcaster key has wrong length");
  auto key = SymmetricKey::random(rng);

  Bytes payload = broadcaster.pk.bytes;
  append(payload, key.bytes);

  BroadcastCiphertext ct;
  ct.scheme = SchemeTag::improved;
  ct.c1.reserve(recipients.size());
  for (const auto& pk : recipients.keys()) ct.c1.push_back(pke_enc(params, pk, payload, rng, counters));
  shuffle(std::span(ct.c1), rng);
  ct.c2 = sym_enc(key, message, rng, counters);
  ct.sigma = sig_sign(params, broadcaster.sk, ct.signed_payload(), counters);
  return ct;
}

/// `trusted` must come from an authentic channel. Exactly one signature
/// verification per call; no public-key decryption unless it succeeds.
inline std::optional<Bytes> decrypt(const SystemParams& params, const RecipientSecretKey& sk,
                                    const BroadcasterPublicKey& trusted, const BroadcastCiphertext& ct,
                                    RejectMode mode, OpCounters& counters) {
  const auto signed_bytes = ct.signed_payload();
  if (!sig_verify(params, trusted, signed_bytes, ct.sigma, counters)) return std::nullopt;
  if (ct.scheme != SchemeTag::improved || !ct.well_formed()) return std::nullopt;
  if (ct.c1.front().size() < pke_overhead(params)) return std::nullopt;
  const auto expected_len = component_plaintext_bytes(params);
  for (const auto& c : ct.c1) {
    auto p = pke_dec(params, sk, c, mode, counters);
    if (!p || p->size() != expected_len) continue;
    auto header = ByteView(*p).first(params.header_len());
    if (!std::equal(header.begin(), header.end(), trusted.bytes.begin(), trusted.bytes.end())) continue;
    ++counters.header_matches;
    auto key = *SymmetricKey::from(ByteView(*p).subspan(params.header_len()));
    // A colliding garbage header cannot open C2; keep scanning.
    if (auto m = sym_dec(key, ct.c2, counters)) return m;
  }
  return std::nullopt;
}

}  // namespace pbe::improved
