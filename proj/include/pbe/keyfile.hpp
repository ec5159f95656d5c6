#pragma once

#include <array>

#include "pbe/bytes.hpp"
#include "pbe/primitives/keys.hpp"
#include "pbe/primitives/params.hpp"

namespace pbe {

inline constexpr std::array<std::uint8_t, 4> kKeyFileMagic = {'P', 'B', 'E', 'K'};

enum class KeyRole : std::uint8_t {
  recipient_public = 0x01,
  recipient_secret = 0x02,
  broadcaster_public = 0x03,
  broadcaster_secret = 0x04,
};

inline bool is_secret(KeyRole r) { return r == KeyRole::recipient_secret || r == KeyRole::broadcaster_secret; }

inline const char* role_name(KeyRole r) {
  switch (r) {
    case KeyRole::recipient_public: return "recipient-public";
    case KeyRole::recipient_secret: return "recipient-secret";
    case KeyRole::broadcaster_public: return "broadcaster-public";
    case KeyRole::broadcaster_secret: return "broadcaster-secret";
  }
  return "unknown";
}

/// magic "PBEK" | role | params digest (32) | prefixed pk | prefixed sk
/// (secret roles only).
struct KeyFile {
  KeyRole role = KeyRole::recipient_public;
  Digest params_digest{};
  Bytes pk;
  Bytes sk;

  bool operator==(const KeyFile&) const = default;
};

inline Bytes serialize(const KeyFile& kf) {
  Bytes out(kKeyFileMagic.begin(), kKeyFileMagic.end());
  out.push_back(static_cast<std::uint8_t>(kf.role));
  append(out, kf.params_digest);
  put_prefixed(out, kf.pk);
  if (is_secret(kf.role)) put_prefixed(out, kf.sk);
  return out;
}

inline KeyFile parse_keyfile(ByteView bytes) {
  ByteReader r(bytes);
  auto magic = r.take(kKeyFileMagic.size());
  if (!std::equal(magic.begin(), magic.end(), kKeyFileMagic.begin())) throw ParseError(ParseError::Kind::bad_magic, 0);
  KeyFile kf;
  auto role_off = r.offset();
  auto role = r.u8();
  if (role < 0x01 || role > 0x04) throw ParseError(ParseError::Kind::unknown_tag, role_off, "key role");
  kf.role = static_cast<KeyRole>(role);
  auto digest = r.take(kHashBytes);
  std::copy(digest.begin(), digest.end(), kf.params_digest.begin());
  kf.pk = r.prefixed();
  if (is_secret(kf.role)) kf.sk = r.prefixed();
  r.expect_end();
  return kf;
}

class KeyFileMismatch : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline const KeyFile& expect(const KeyFile& kf, KeyRole role, const SystemParams& params) {
  if (kf.role != role)
    throw KeyFileMismatch(std::string("expected a ") + role_name(role) + " key, got " + role_name(kf.role));
  if (kf.params_digest != params.digest()) throw KeyFileMismatch("key was generated under different system parameters");
  return kf;
}

}  // namespace detail

inline KeyFile make_keyfile(const SystemParams& params, const RecipientPublicKey& pk) {
  return {KeyRole::recipient_public, params.digest(), pk.bytes, {}};
}
inline KeyFile make_keyfile(const SystemParams& params, const RecipientKeyPair& kp) {
  return {KeyRole::recipient_secret, params.digest(), kp.pk.bytes, kp.sk.bytes};
}
inline KeyFile make_keyfile(const SystemParams& params, const BroadcasterPublicKey& pk) {
  return {KeyRole::broadcaster_public, params.digest(), pk.bytes, {}};
}
inline KeyFile make_keyfile(const SystemParams& params, const BroadcasterKeyPair& kp) {
  return {KeyRole::broadcaster_secret, params.digest(), kp.pk.bytes, kp.sk.bytes};
}

inline RecipientPublicKey recipient_public_from(const KeyFile& kf, const SystemParams& params) {
  return {detail::expect(kf, KeyRole::recipient_public, params).pk};
}
inline RecipientKeyPair recipient_secret_from(const KeyFile& kf, const SystemParams& params) {
  const auto& k = detail::expect(kf, KeyRole::recipient_secret, params);
  return {{k.pk}, {k.sk}};
}
inline BroadcasterPublicKey broadcaster_public_from(const KeyFile& kf, const SystemParams& params) {
  return {detail::expect(kf, KeyRole::broadcaster_public, params).pk};
}
inline BroadcasterKeyPair broadcaster_secret_from(const KeyFile& kf, const SystemParams& params) {
  const auto& k = detail::expect(kf, KeyRole::broadcaster_secret, params);
  return {{k.pk}, {k.sk}};
}

}  // namespace pbe
