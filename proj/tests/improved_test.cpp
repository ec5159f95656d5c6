#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace pbe;
using pbe::testing::make_recipients;
using pbe::testing::make_set;
using pbe::testing::owned_position;

namespace {

struct ImprovedScheme : ::testing::Test {
  SystemParams params = pke_init(128);
  SeededRandom rng{23};
  BroadcasterKeyPair broadcaster = improved::keygen_broadcaster(params, rng);
};

}  // namespace

TEST_F(ImprovedScheme, BroadcasterKeys) {
  OpCounters c;
  auto m = to_bytes("m");
  EXPECT_TRUE(sig_verify(params, broadcaster.pk, m, sig_sign(params, broadcaster.sk, m, c), c));
  EXPECT_EQ(broadcaster.pk.size(), params.header_len());
  std::set<Bytes> seen;
  for (int i = 0; i < 100; ++i) seen.insert(improved::keygen_broadcaster(params, rng).pk.bytes);
  EXPECT_EQ(seen.size(), 100u);
}

TEST_F(ImprovedScheme, EncryptCountersShowNoOneTimeKey) {
  auto kps = make_recipients(params, 5, rng);
  OpCounters c;
  auto ct = improved::encrypt(params, make_set(params, kps), to_bytes("m"), broadcaster, rng, c);
  EXPECT_EQ(c.pke_enc, 5u);
  EXPECT_EQ(c.sig_sign, 1u);
  EXPECT_EQ(c.ots_gen, 0u);
  EXPECT_EQ(c.ots_sign, 0u);
  EXPECT_EQ(c.sym_enc, 1u);
  EXPECT_EQ(ct.scheme, SchemeTag::improved);
  EXPECT_EQ(ct.sigma.size(), params.signature_len());
}

TEST_F(ImprovedScheme, ComponentsCarryHeaderAndKey) {
  auto kps = make_recipients(params, 4, rng);
  OpCounters c;
  auto ct = improved::encrypt(params, make_set(params, kps), to_bytes("m"), broadcaster, rng, c);
  for (const auto& kp : kps) {
    auto k = owned_position(params, kp.sk, ct);
    ASSERT_GE(k, 1u);
    auto p = pke_dec(params, kp.sk, ct.c1[k - 1], RejectMode::strict, c);
    ASSERT_TRUE(p);
    EXPECT_EQ(p->size(), params.header_len() + 32);
    EXPECT_TRUE(std::equal(broadcaster.pk.bytes.begin(), broadcaster.pk.bytes.end(), p->begin()));
  }
}

TEST_F(ImprovedScheme, BroadcasterKeyIsReusable) {
  auto kps = make_recipients(params, 2, rng);
  auto set = make_set(params, kps);
  for (int i = 0; i < 100; ++i) {
    OpCounters c;
    auto m = rng.bytes(static_cast<std::size_t>(i));
    auto ct = improved::encrypt(params, set, m, broadcaster, rng, c);
    EXPECT_EQ(improved::decrypt(params, kps[i % 2].sk, broadcaster.pk, ct, RejectMode::strict, c), m);
  }
}

TEST_F(ImprovedScheme, CorrectnessAndExclusion) {
  for (std::size_t n : {1u, 3u, 16u, 32u}) {
    auto kps = make_recipients(params, n, rng);
    auto outsider = original::keygen(params, rng);
    auto m = rng.bytes(100 + n);
    OpCounters enc;
    auto ct = improved::encrypt(params, make_set(params, kps), m, broadcaster, rng, enc);
    for (auto mode : {RejectMode::strict, RejectMode::permissive}) {
      for (const auto& kp : kps) {
        OpCounters c;
        EXPECT_EQ(improved::decrypt(params, kp.sk, broadcaster.pk, ct, mode, c), m);
        EXPECT_EQ(c.sig_verify, 1u);
        EXPECT_EQ(c.header_matches, 1u);
      }
      OpCounters c;
      EXPECT_FALSE(improved::decrypt(params, outsider.sk, broadcaster.pk, ct, mode, c));
      EXPECT_EQ(c.sig_verify, 1u);
      EXPECT_EQ(c.pke_dec, n);
      EXPECT_EQ(c.header_matches, 0u);
    }
  }
}

TEST_F(ImprovedScheme, ForeignSignerIsRejectedBeforeAnyDecryption) {
  auto kps = make_recipients(params, 4, rng);
  auto other = improved::keygen_broadcaster(params, rng);
  OpCounters enc;
  auto ct = improved::encrypt(params, make_set(params, kps), to_bytes("m"), broadcaster, rng, enc);
  ct.sigma = sig_sign(params, other.sk, ct.signed_payload(), enc);
  for (auto mode : {RejectMode::strict, RejectMode::permissive}) {
    OpCounters c;
    EXPECT_FALSE(improved::decrypt(params, kps[0].sk, broadcaster.pk, ct, mode, c));
    EXPECT_EQ(c.sig_verify, 1u);
    EXPECT_EQ(c.pke_dec, 0u);
    EXPECT_EQ(c.sym_dec, 0u);
  }
}

TEST_F(ImprovedScheme, PermissiveMemberCostIsPositionWithOneVerification) {
  auto kps = make_recipients(params, 8, rng);
  auto set = make_set(params, kps);
  for (int t = 0; t < 30; ++t) {
    OpCounters enc;
    auto ct = improved::encrypt(params, set, to_bytes("pos"), broadcaster, rng, enc);
    for (const auto& kp : kps) {
      auto k = owned_position(params, kp.sk, ct);
      OpCounters c;
      ASSERT_TRUE(improved::decrypt(params, kp.sk, broadcaster.pk, ct, RejectMode::permissive, c));
      EXPECT_EQ(c.pke_dec, k);
      EXPECT_EQ(c.sig_verify, 1u);
      EXPECT_EQ(c.ots_verify, 0u);
    }
  }
}

TEST_F(ImprovedScheme, NonMemberHeadersNeverCollide) {
  auto kps = make_recipients(params, 2, rng);
  auto set = make_set(params, kps);
  auto outsider = original::keygen(params, rng);
  std::uint64_t matches = 0, accepted = 0;
  for (int t = 0; t < 10000; ++t) {
    OpCounters enc;
    auto ct = improved::encrypt(params, set, to_bytes("x"), broadcaster, rng, enc);
    OpCounters c;
    if (improved::decrypt(params, outsider.sk, broadcaster.pk, ct, RejectMode::permissive, c)) ++accepted;
    matches += c.header_matches;
  }
  EXPECT_EQ(matches, 0u);
  EXPECT_EQ(accepted, 0u);
}

TEST_F(ImprovedScheme, StrictSelectionAlwaysCarriesTrustedHeader) {
  auto kps = make_recipients(params, 6, rng);
  auto set = make_set(params, kps);
  for (int t = 0; t < 20; ++t) {
    OpCounters enc;
    auto ct = improved::encrypt(params, set, to_bytes("x"), broadcaster, rng, enc);
    for (const auto& kp : kps) {
      OpCounters c;
      ASSERT_TRUE(improved::decrypt(params, kp.sk, broadcaster.pk, ct, RejectMode::strict, c));
      EXPECT_EQ(c.header_matches, 1u);
      EXPECT_EQ(c.sym_dec, 1u);
    }
  }
}

TEST_F(ImprovedScheme, InvalidSignatureMeansZeroDecryptions) {
  auto kps = make_recipients(params, 3, rng);
  OpCounters enc;
  auto ct = improved::encrypt(params, make_set(params, kps), to_bytes("verify first"), broadcaster, rng, enc);
  std::vector<BroadcastCiphertext> bad;
  for (std::size_t i = 0; i < ct.sigma.size(); ++i) {
    auto b = ct;
    b.sigma[i] ^= 0x20;
    bad.push_back(b);
  }
  for (std::size_t j = 0; j < ct.c1.size(); ++j) {
    auto b = ct;
    b.c1[j][j * 13] ^= 1;
    bad.push_back(b);
  }
  auto b = ct;
  b.c2.back() ^= 1;
  bad.push_back(b);
  auto swapped = ct;
  std::swap(swapped.c1[0], swapped.c1[1]);
  bad.push_back(swapped);
  for (const auto& x : bad) {
    for (auto mode : {RejectMode::strict, RejectMode::permissive}) {
      OpCounters c;
      ASSERT_FALSE(improved::decrypt(params, kps[0].sk, broadcaster.pk, x, mode, c));
      ASSERT_EQ(c.pke_dec, 0u);
      ASSERT_EQ(c.sym_dec, 0u);
      ASSERT_EQ(c.sig_verify, 1u);
    }
  }
}

TEST_F(ImprovedScheme, CostDominatesOriginalForEverySetSize) {
  for (std::size_t n = 1; n <= 32; ++n) {
    auto kps = make_recipients(params, n, rng);
    auto set = make_set(params, kps);
    auto outsider = original::keygen(params, rng);
    OpCounters enc;
    auto o = original::encrypt(params, set, to_bytes("c"), rng, enc);
    auto i = improved::encrypt(params, set, to_bytes("c"), broadcaster, rng, enc);
    OpCounters co, ci;
    EXPECT_FALSE(original::decrypt(params, outsider.sk, o, RejectMode::permissive, co));
    EXPECT_FALSE(improved::decrypt(params, outsider.sk, broadcaster.pk, i, RejectMode::permissive, ci));
    EXPECT_EQ(co.ots_verify, n);
    EXPECT_EQ(ci.sig_verify, 1u);
    EXPECT_EQ(ci.ots_verify, 0u);
  }
}

TEST(ImprovedLevels, Curve448RoundTrip) {
  auto params = pke_init(192);
  SeededRandom rng(31);
  auto b = improved::keygen_broadcaster(params, rng);
  auto kps = make_recipients(params, 3, rng);
  OpCounters c;
  auto m = to_bytes("level 192");
  auto ct = improved::encrypt(params, make_set(params, kps), m, b, rng, c);
  for (const auto& kp : kps)
    EXPECT_EQ(improved::decrypt(params, kp.sk, b.pk, ct, RejectMode::permissive, c), m);
  EXPECT_EQ(improved::component_plaintext_bytes(params), 57u + 32u);
}
