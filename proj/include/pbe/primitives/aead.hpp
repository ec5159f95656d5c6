#pragma once

#include <array>
#include <optional>

#include "pbe/bytes.hpp"
#include "pbe/primitives/openssl.hpp"

namespace pbe::aead {

// ChaCha20-Poly1305 (RFC 8439).
inline constexpr std::size_t kKeyBytes = 32;
inline constexpr std::size_t kNonceBytes = 12;
inline constexpr std::size_t kTagBytes = 16;

using Key = std::array<std::uint8_t, kKeyBytes>;
using Nonce = std::array<std::uint8_t, kNonceBytes>;

/// Returns ciphertext || tag.
inline Bytes seal(const Key& key, const Nonce& nonce, ByteView plaintext) {
  auto ctx = ossl::new_cipher_ctx();
  ossl::check(EVP_EncryptInit_ex(ctx.get(), ossl::chacha20_poly1305_cipher(), nullptr, key.data(), nonce.data()),
              "EVP_EncryptInit_ex");
  Bytes out(plaintext.size() + kTagBytes);
  int len = 0;
  if (!plaintext.empty())
    ossl::check(EVP_EncryptUpdate(ctx.get(), out.data(), &len, plaintext.data(), static_cast<int>(plaintext.size())),
                "EVP_EncryptUpdate");
  int fin = 0;
  ossl::check(EVP_EncryptFinal_ex(ctx.get(), out.data() + len, &fin), "EVP_EncryptFinal_ex");
  ossl::check(EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_AEAD_GET_TAG, kTagBytes, out.data() + plaintext.size()),
              "EVP_CTRL_AEAD_GET_TAG");
  return out;
}

/// Decrypts ciphertext || tag. With `check_tag` the result is empty unless the
/// tag verifies; without it the raw keystream decryption is always returned.
inline std::optional<Bytes> open(const Key& key, const Nonce& nonce, ByteView sealed, bool check_tag = true) {
  if (sealed.size() < kTagBytes) return std::nullopt;
  auto body = sealed.first(sealed.size() - kTagBytes);
  auto tag = sealed.last(kTagBytes);
  auto ctx = ossl::new_cipher_ctx();
  ossl::check(EVP_DecryptInit_ex(ctx.get(), ossl::chacha20_poly1305_cipher(), nullptr, key.data(), nonce.data()),
              "EVP_DecryptInit_ex");
  Bytes out(body.size());
  int len = 0;
  if (!body.empty())
    ossl::check(EVP_DecryptUpdate(ctx.get(), out.data(), &len, body.data(), static_cast<int>(body.size())),
                "EVP_DecryptUpdate");
  if (!check_tag) return out;
  std::array<std::uint8_t, kTagBytes> expected{};
  std::copy(tag.begin(), tag.end(), expected.begin());
  ossl::check(EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_AEAD_SET_TAG, kTagBytes, expected.data()),
              "EVP_CTRL_AEAD_SET_TAG");
  int fin = 0;
  if (EVP_DecryptFinal_ex(ctx.get(), out.data() + len, &fin) != 1) {
    ERR_clear_error();
    return std::nullopt;
  }
  return out;
}

}  // namespace pbe::aead
