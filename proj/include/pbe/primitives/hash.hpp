#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>

#include "pbe/bytes.hpp"
#include "pbe/primitives/openssl.hpp"

namespace pbe {

inline constexpr std::size_t kHashBytes = 32;
using Digest = std::array<std::uint8_t, kHashBytes>;

inline Digest sha256(ByteView data) {
  Digest out{};
  unsigned int len = 0;
  ossl::check(EVP_Digest(data.data(), data.size(), out.data(), &len, ossl::sha256_md(), nullptr),
              "EVP_Digest");
  return out;
}

/// Hash of the concatenation of several byte strings.
inline Digest sha256(std::initializer_list<ByteView> parts) {
  ossl::MdCtx ctx(EVP_MD_CTX_new());
  if (!ctx) ossl::fail("EVP_MD_CTX_new");
  ossl::check(EVP_DigestInit_ex(ctx.get(), ossl::sha256_md(), nullptr), "EVP_DigestInit_ex");
  for (auto p : parts) ossl::check(EVP_DigestUpdate(ctx.get(), p.data(), p.size()), "EVP_DigestUpdate");
  Digest out{};
  unsigned int len = 0;
  ossl::check(EVP_DigestFinal_ex(ctx.get(), out.data(), &len), "EVP_DigestFinal_ex");
  return out;
}

}  // namespace pbe
