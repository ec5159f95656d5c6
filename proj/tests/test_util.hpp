#pragma once

#include <vector>

#include "pbe/pbe.hpp"

namespace pbe::testing {

inline std::vector<RecipientKeyPair> make_recipients(const SystemParams& params, std::size_t n, RandomSource& rng) {
  std::vector<RecipientKeyPair> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(pke_gen(params, rng));
  return out;
}

inline RecipientSet make_set(const SystemParams& params, const std::vector<RecipientKeyPair>& kps) {
  std::vector<RecipientPublicKey> pks;
  for (const auto& kp : kps) pks.push_back(kp.pk);
  return RecipientSet(params, pks);
}

/// 1-based position of the component addressed to `sk`, found by strict
/// trial decryption with its own counters. 0 if none.
inline std::size_t owned_position(const SystemParams& params, const RecipientSecretKey& sk,
                                  const BroadcastCiphertext& ct) {
  OpCounters scratch;
  for (std::size_t j = 0; j < ct.c1.size(); ++j)
    if (pke_dec(params, sk, ct.c1[j], RejectMode::strict, scratch)) return j + 1;
  return 0;
}

}  // namespace pbe::testing
