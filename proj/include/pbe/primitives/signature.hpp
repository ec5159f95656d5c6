#pragma once

#include "pbe/counters.hpp"
#include "pbe/primitives/keys.hpp"
#include "pbe/primitives/params.hpp"
#include "pbe/primitives/pke.hpp"
#include "pbe/random.hpp"

// Reusable broadcaster signature: Ed25519 or Ed448 depending on the group.
// Both are strongly unforgeable as implemented by OpenSSL (canonical S check).
namespace pbe {

inline BroadcasterKeyPair sig_gen(const SystemParams& params, RandomSource& rng) {
  const auto spec = params.spec();
  auto sk = rng.bytes(spec.signature_sk_len);
  auto key = detail::raw_private(spec.signature_type, sk);
  return {BroadcasterPublicKey{detail::public_of(key.get(), spec.signature_pk_len)},
          BroadcasterSecretKey{std::move(sk)}};
}

inline Bytes sig_sign(const SystemParams& params, const BroadcasterSecretKey& sk, ByteView message,
                      OpCounters& counters) {
  const auto spec = params.spec();
  if (sk.size() != spec.signature_sk_len) throw MalformedInput("broadcaster secret key has wrong length");
  ++counters.sig_sign;
  auto key = detail::raw_private(spec.signature_type, sk.view());
  ossl::MdCtx ctx(EVP_MD_CTX_new());
  if (!ctx) ossl::fail("EVP_MD_CTX_new");
  ossl::check(EVP_DigestSignInit(ctx.get(), nullptr, nullptr, nullptr, key.get()), "EVP_DigestSignInit");
  Bytes sig(spec.signature_len);
  std::size_t len = sig.size();
  ossl::check(EVP_DigestSign(ctx.get(), sig.data(), &len, message.data(), message.size()), "EVP_DigestSign");
  sig.resize(len);
  return sig;
}

/// Total predicate: malformed keys or signatures give `false`.
inline bool sig_verify(const SystemParams& params, const BroadcasterPublicKey& pk, ByteView message,
                       ByteView sig, OpCounters& counters) {
  ++counters.sig_verify;
  const auto spec = params.spec();
  if (pk.size() != spec.signature_pk_len || sig.size() != spec.signature_len) return false;
  auto key = detail::raw_public(spec.signature_type, pk.view());
  if (!key) {
    ERR_clear_error();
    return false;
  }
  ossl::MdCtx ctx(EVP_MD_CTX_new());
  if (!ctx) ossl::fail("EVP_MD_CTX_new");
  bool ok = EVP_DigestVerifyInit(ctx.get(), nullptr, nullptr, nullptr, key.get()) == 1 &&
            EVP_DigestVerify(ctx.get(), sig.data(), sig.size(), message.data(), message.size()) == 1;
  ERR_clear_error();
  return ok;
}

}  // namespace pbe
