#pragma once

#include <optional>

#include "pbe/counters.hpp"
#include "pbe/primitives/aead.hpp"
#include "pbe/primitives/hash.hpp"
#include "pbe/primitives/keys.hpp"
#include "pbe/primitives/params.hpp"
#include "pbe/random.hpp"

// Key-private hybrid public-key encryption: an ephemeral Diffie-Hellman share
// over the configured curve, SHA-256 key derivation, ChaCha20-Poly1305 for the
// payload. A component is `ephemeral_pk || body || tag`; its length depends on
// the plaintext length and the group only.
namespace pbe {

namespace detail {

inline ossl::Pkey raw_private(int type, ByteView sk) {
  ossl::Pkey key(EVP_PKEY_new_raw_private_key(type, nullptr, sk.data(), sk.size()));
  if (!key) ossl::fail("EVP_PKEY_new_raw_private_key");
  return key;
}

inline ossl::Pkey raw_public(int type, ByteView pk) {
  return ossl::Pkey(EVP_PKEY_new_raw_public_key(type, nullptr, pk.data(), pk.size()));
}

inline Bytes public_of(const EVP_PKEY* key, std::size_t len) {
  Bytes pk(len);
  std::size_t out = len;
  ossl::check(EVP_PKEY_get_raw_public_key(key, pk.data(), &out), "EVP_PKEY_get_raw_public_key");
  if (out != len) throw CryptoBackendError("unexpected public key length");
  return pk;
}

/// Raw shared secret, or empty when the peer share is rejected by the curve
/// implementation (e.g. a small-order point).
inline std::optional<Bytes> agree(const SystemParams& params, ByteView own_sk, ByteView peer_pk) {
  const auto spec = params.spec();
  auto own = raw_private(spec.agreement_type, own_sk);
  auto peer = raw_public(spec.agreement_type, peer_pk);
  if (!peer) {
    ERR_clear_error();
    return std::nullopt;
  }
  ossl::PkeyCtx ctx(EVP_PKEY_CTX_new(own.get(), nullptr));
  if (!ctx) ossl::fail("EVP_PKEY_CTX_new");
  std::size_t len = 0;
  if (EVP_PKEY_derive_init(ctx.get()) != 1 || EVP_PKEY_derive_set_peer(ctx.get(), peer.get()) != 1 ||
      EVP_PKEY_derive(ctx.get(), nullptr, &len) != 1) {
    ERR_clear_error();
    return std::nullopt;
  }
  Bytes secret(len);
  if (EVP_PKEY_derive(ctx.get(), secret.data(), &len) != 1) {
    ERR_clear_error();
    return std::nullopt;
  }
  secret.resize(len);
  return secret;
}

inline aead::Key component_key(ByteView ephemeral_pk, ByteView shared) {
  return sha256({as_bytes("pbe/pke-kdf"), ephemeral_pk, shared});
}

}  // namespace detail

using PkeComponent = Bytes;

/// Bytes added to the plaintext by `pke_enc`.
inline std::size_t pke_overhead(const SystemParams& params) {
  return params.spec().agreement_key_len + aead::kTagBytes;
}

inline RecipientKeyPair pke_gen(const SystemParams& params, RandomSource& rng) {
  const auto spec = params.spec();
  auto sk = rng.bytes(spec.agreement_key_len);
  auto key = detail::raw_private(spec.agreement_type, sk);
  return {RecipientPublicKey{detail::public_of(key.get(), spec.agreement_key_len)}, RecipientSecretKey{std::move(sk)}};
}

inline PkeComponent pke_enc(const SystemParams& params, const RecipientPublicKey& pk, ByteView message,
                            RandomSource& rng, OpCounters& counters) {
  if (message.size() > kMaxPkePlaintext) throw PlaintextTooLong(message.size(), kMaxPkePlaintext);
  if (pk.size() != params.recipient_pk_len()) throw MalformedInput("recipient public key has wrong length");
  ++counters.pke_enc;
  const auto spec = params.spec();
  auto eph_sk = rng.bytes(spec.agreement_key_len);
  auto eph = detail::raw_private(spec.agreement_type, eph_sk);
  auto eph_pk = detail::public_of(eph.get(), spec.agreement_key_len);
  auto shared = detail::agree(params, eph_sk, pk.view());
  if (!shared) throw MalformedInput("recipient public key rejected by key agreement");
  // Each derived key encrypts exactly one payload, so a fixed nonce is safe.
  const aead::Nonce nonce{};
  PkeComponent out = std::move(eph_pk);
  append(out, aead::seal(detail::component_key(ByteView(out), *shared), nonce, message));
  return out;
}

/// Strict: the plaintext under the matching key, empty otherwise.
/// Permissive: always a byte string of the plaintext length; garbage under a
/// non-matching key. Throws MalformedInput if `c` is too short to be a
/// component at all.
inline std::optional<Bytes> pke_dec(const SystemParams& params, const RecipientSecretKey& sk, ByteView c,
                                    RejectMode mode, OpCounters& counters) {
  ++counters.pke_dec;
  const auto spec = params.spec();
  if (c.size() < pke_overhead(params)) throw MalformedInput("component shorter than fixed overhead");
  if (sk.size() != spec.agreement_key_len) throw MalformedInput("recipient secret key has wrong length");
  auto eph_pk = c.first(spec.agreement_key_len);
  auto shared = detail::agree(params, sk.view(), eph_pk);
  if (!shared) {
    if (mode == RejectMode::strict) return std::nullopt;
    shared = Bytes(spec.agreement_key_len, 0);
  }
  const aead::Nonce nonce{};
  return aead::open(detail::component_key(eph_pk, *shared), nonce, c.subspan(spec.agreement_key_len),
                    mode == RejectMode::strict);
}

}  // namespace pbe
