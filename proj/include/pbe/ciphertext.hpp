#pragma once

#include <array>
#include <set>
#include <vector>

#include "pbe/bytes.hpp"
#include "pbe/primitives/keys.hpp"
#include "pbe/primitives/pke.hpp"

namespace pbe {

enum class SchemeTag : std::uint8_t {
  original = 0x01,
  improved = 0x02,
};

inline const char* scheme_name(SchemeTag s) { return s == SchemeTag::original ? "original" : "improved"; }

inline constexpr std::array<std::uint8_t, 4> kEnvelopeMagic = {'P', 'B', 'E', '1'};
/// Upper bound on a broadcast message.
inline constexpr std::size_t kMaxBroadcastMessage = 1024 * 1024;

/// sigma || C1 || C2. Immutable once produced by an encryptor.
struct BroadcastCiphertext {
  SchemeTag scheme = SchemeTag::original;
  Bytes sigma;
  std::vector<PkeComponent> c1;
  Bytes c2;

  /// The bytes covered by sigma: tag | u32 count | prefixed components |
  /// prefixed C2. The tag and the framing are bound so that components cannot
  /// be shifted into C2 (or across schemes) without breaking the signature.
  Bytes signed_payload() const {
    Bytes out;
    out.push_back(static_cast<std::uint8_t>(scheme));
    put_u32(out, static_cast<std::uint32_t>(c1.size()));
    for (const auto& c : c1) put_prefixed(out, c);
    put_prefixed(out, c2);
    return out;
  }

  /// True when C1 is non-empty and all components share one length.
  bool well_formed() const {
    if (c1.empty()) return false;
    for (const auto& c : c1)
      if (c.size() != c1.front().size()) return false;
    return true;
  }

  bool operator==(const BroadcastCiphertext&) const = default;
};

/// Envelope: magic "PBE1" | tag | prefixed sigma | u32 count | prefixed
/// components | prefixed C2. All lengths are 4-byte big-endian.
inline Bytes serialize(const BroadcastCiphertext& ct) {
  Bytes out(kEnvelopeMagic.begin(), kEnvelopeMagic.end());
  out.push_back(static_cast<std::uint8_t>(ct.scheme));
  put_prefixed(out, ct.sigma);
  put_u32(out, static_cast<std::uint32_t>(ct.c1.size()));
  for (const auto& c : ct.c1) put_prefixed(out, c);
  put_prefixed(out, ct.c2);
  return out;
}

/// Never reads past a declared length. Errors carry the failing offset.
inline BroadcastCiphertext parse_ciphertext(ByteView bytes) {
  ByteReader r(bytes);
  auto magic = r.take(kEnvelopeMagic.size());
  if (!std::equal(magic.begin(), magic.end(), kEnvelopeMagic.begin()))
    throw ParseError(ParseError::Kind::bad_magic, 0);
  BroadcastCiphertext ct;
  auto tag_off = r.offset();
  auto tag = r.u8();
  if (tag != static_cast<std::uint8_t>(SchemeTag::original) && tag != static_cast<std::uint8_t>(SchemeTag::improved))
    throw ParseError(ParseError::Kind::unknown_tag, tag_off, "scheme tag");
  ct.scheme = static_cast<SchemeTag>(tag);
  ct.sigma = r.prefixed();
  auto count_off = r.offset();
  auto count = r.u32();
  if (count == 0) throw ParseError(ParseError::Kind::bad_value, count_off, "empty component list");
  // Each component needs at least its 4-byte prefix.
  if (count > r.remaining() / 4) throw ParseError(ParseError::Kind::truncated, bytes.size());
  ct.c1.reserve(count);
  for (std::uint32_t j = 0; j < count; ++j) {
    auto off = r.offset();
    ct.c1.push_back(r.prefixed());
    if (ct.c1.back().size() != ct.c1.front().size())
      throw ParseError(ParseError::Kind::bad_value, off, "component length differs from the first");
  }
  ct.c2 = r.prefixed();
  r.expect_end();
  return ct;
}

/// The published key set S: non-empty, no duplicates, all well-sized.
class RecipientSet {
 public:
  RecipientSet(const SystemParams& params, std::vector<RecipientPublicKey> keys) : keys_(std::move(keys)) {
    if (keys_.empty()) throw InvalidRecipientSet("recipient set is empty");
    std::set<Bytes> seen;
    for (const auto& k : keys_) {
      if (k.size() != params.recipient_pk_len()) throw InvalidRecipientSet("recipient key has wrong length");
      if (!seen.insert(k.bytes).second) throw InvalidRecipientSet("duplicate recipient key");
    }
  }

  std::span<const RecipientPublicKey> keys() const { return keys_; }
  std::size_t size() const { return keys_.size(); }

 private:
  std::vector<RecipientPublicKey> keys_;
};

namespace detail {

inline void check_message_size(ByteView m) {
  if (m.size() > kMaxBroadcastMessage) throw PlaintextTooLong(m.size(), kMaxBroadcastMessage);
}

}  // namespace detail

}  // namespace pbe
