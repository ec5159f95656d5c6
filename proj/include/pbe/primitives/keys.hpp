#pragma once

#include "pbe/bytes.hpp"

namespace pbe {

/// Canonical key encoding tagged with its role so that a recipient key can
/// never be passed where a broadcaster key is expected.
template <class Role>
struct KeyBytes {
  Bytes bytes;

  ByteView view() const { return bytes; }
  std::size_t size() const { return bytes.size(); }
  bool operator==(const KeyBytes&) const = default;
};

namespace role {
struct RecipientPublic;
struct RecipientSecret;
struct BroadcasterPublic;
struct BroadcasterSecret;
}  // namespace role

using RecipientPublicKey = KeyBytes<role::RecipientPublic>;
using RecipientSecretKey = KeyBytes<role::RecipientSecret>;
using BroadcasterPublicKey = KeyBytes<role::BroadcasterPublic>;
using BroadcasterSecretKey = KeyBytes<role::BroadcasterSecret>;

struct RecipientKeyPair {
  RecipientPublicKey pk;
  RecipientSecretKey sk;
};

struct BroadcasterKeyPair {
  BroadcasterPublicKey pk;
  BroadcasterSecretKey sk;
};

/// Whether a wrong-key public-key decryption is detected (strict) or yields
/// unpredictable bytes that only later checks can reject (permissive).
enum class RejectMode { strict, permissive };

}  // namespace pbe
