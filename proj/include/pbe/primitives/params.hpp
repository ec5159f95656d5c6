#pragma once

#include <cstdint>

#include <openssl/evp.h>

#include "pbe/bytes.hpp"
#include "pbe/primitives/hash.hpp"

namespace pbe {

/// Registry codes for the algebraic setting. Each code fixes both the
/// key-agreement curve used by the public-key encryption and the matching
/// Edwards curve used for the broadcaster signature.
enum class GroupId : std::uint8_t {
  curve25519 = 0x01,  // X25519 + Ed25519
  curve448 = 0x02,    // X448 + Ed448
};

enum class HashId : std::uint8_t {
  sha256 = 0x01,
};

/// Sizes and OpenSSL key types for one group.
struct GroupSpec {
  int agreement_type;
  int signature_type;
  std::size_t agreement_key_len;   // public and private scalar encodings
  std::size_t signature_pk_len;
  std::size_t signature_sk_len;
  std::size_t signature_len;
};

inline constexpr GroupSpec group_spec(GroupId g) {
  switch (g) {
    case GroupId::curve25519: return {EVP_PKEY_X25519, EVP_PKEY_ED25519, 32, 32, 32, 64};
    case GroupId::curve448: return {EVP_PKEY_X448, EVP_PKEY_ED448, 56, 57, 57, 114};
  }
  return {0, 0, 0, 0, 0, 0};
}

/// Global parameters shared by every key generation in one system.
struct SystemParams {
  std::uint16_t security_level = 128;
  GroupId group = GroupId::curve25519;
  HashId hash = HashId::sha256;

  GroupSpec spec() const { return group_spec(group); }

  /// One-byte registry code of the group.
  Bytes group_descriptor() const { return {static_cast<std::uint8_t>(group)}; }

  std::size_t recipient_pk_len() const { return spec().agreement_key_len; }
  std::size_t recipient_sk_len() const { return spec().agreement_key_len; }
  /// Length of the broadcaster key prefixed to each improved-scheme component.
  std::size_t header_len() const { return spec().signature_pk_len; }
  std::size_t signature_len() const { return spec().signature_len; }

  /// Canonical encoding: level (u16 BE) | group code | hash code.
  Bytes serialize() const {
    return {static_cast<std::uint8_t>(security_level >> 8), static_cast<std::uint8_t>(security_level),
            static_cast<std::uint8_t>(group), static_cast<std::uint8_t>(hash)};
  }

  static SystemParams deserialize(ByteView b);

  Digest digest() const {
    auto enc = serialize();
    return sha256({as_bytes("pbe/params"), enc});
  }

  bool operator==(const SystemParams&) const = default;
};

/// Symmetric and hash lengths are fixed at 256 bits for every level.
inline constexpr std::size_t kSymmetricKeyBytes = 32;
inline constexpr std::size_t kMaxPkePlaintext = 64 * 1024;

inline SystemParams pke_init(unsigned security_level) {
  switch (security_level) {
    case 128: return {128, GroupId::curve25519, HashId::sha256};
    case 192:
    case 256: return {static_cast<std::uint16_t>(security_level), GroupId::curve448, HashId::sha256};
    default: throw UnsupportedSecurityLevel(security_level);
  }
}

inline SystemParams SystemParams::deserialize(ByteView b) {
  ByteReader r(b);
  auto hi = r.u8();
  auto lo = r.u8();
  auto level = static_cast<unsigned>((hi << 8) | lo);
  auto group_off = r.offset();
  auto group = r.u8();
  auto hash_off = r.offset();
  auto hash = r.u8();
  r.expect_end();
  SystemParams p;
  try {
    p = pke_init(level);
  } catch (const UnsupportedSecurityLevel& e) {
    throw ParseError(ParseError::Kind::bad_value, 0, e.what());
  }
  if (group != static_cast<std::uint8_t>(p.group))
    throw ParseError(ParseError::Kind::unknown_tag, group_off, "group code");
  if (hash != static_cast<std::uint8_t>(p.hash))
    throw ParseError(ParseError::Kind::unknown_tag, hash_off, "hash code");
  return p;
}

}  // namespace pbe
