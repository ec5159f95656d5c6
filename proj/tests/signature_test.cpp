#include <gtest/gtest.h>

#include <set>

#include "pbe/primitives/signature.hpp"

using namespace pbe;

class Signature : public ::testing::TestWithParam<unsigned> {
 protected:
  SystemParams params = pke_init(GetParam());
  SeededRandom rng{GetParam() + 1};
  OpCounters c;
};

TEST_P(Signature, RoundTrip) {
  auto kp = sig_gen(params, rng);
  auto m = to_bytes("broadcast body");
  auto s = sig_sign(params, kp.sk, m, c);
  EXPECT_EQ(s.size(), params.signature_len());
  EXPECT_TRUE(sig_verify(params, kp.pk, m, s, c));
  EXPECT_FALSE(sig_verify(params, kp.pk, to_bytes("other body"), s, c));
}

TEST_P(Signature, PublicKeyIsHeaderLength) {
  for (int i = 0; i < 10; ++i) EXPECT_EQ(sig_gen(params, rng).pk.size(), params.header_len());
}

TEST_P(Signature, KeysAreDistinct) {
  std::set<Bytes> seen;
  for (int i = 0; i < 100; ++i) seen.insert(sig_gen(params, rng).pk.bytes);
  EXPECT_EQ(seen.size(), 100u);
}

TEST_P(Signature, CrossVerificationFails) {
  std::vector<BroadcasterKeyPair> kps;
  for (int i = 0; i < 10; ++i) kps.push_back(sig_gen(params, rng));
  auto m = to_bytes("m");
  for (std::size_t i = 0; i < kps.size(); ++i) {
    auto s = sig_sign(params, kps[i].sk, m, c);
    for (std::size_t j = 0; j < kps.size(); ++j)
      EXPECT_EQ(sig_verify(params, kps[j].pk, m, s, c), i == j) << i << "," << j;
  }
}

TEST_P(Signature, KeyIsReusable) {
  auto kp = sig_gen(params, rng);
  for (int i = 0; i < 100; ++i) {
    auto m = rng.bytes(static_cast<std::size_t>(i));
    EXPECT_TRUE(sig_verify(params, kp.pk, m, sig_sign(params, kp.sk, m, c), c));
  }
}

TEST_P(Signature, EveryByteFlipIsRejected) {
  auto kp = sig_gen(params, rng);
  auto m = to_bytes("strong");
  auto s = sig_sign(params, kp.sk, m, c);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::uint8_t mask : {0x01, 0x80}) {
      auto bad = s;
      bad[i] ^= mask;
      EXPECT_FALSE(sig_verify(params, kp.pk, m, bad, c)) << i;
    }
  }
}

TEST_P(Signature, GarbageInputsAreFalse) {
  auto kp = sig_gen(params, rng);
  auto m = to_bytes("m");
  auto s = sig_sign(params, kp.sk, m, c);
  EXPECT_FALSE(sig_verify(params, BroadcasterPublicKey{rng.bytes(params.header_len())}, m, s, c));
  EXPECT_FALSE(sig_verify(params, BroadcasterPublicKey{Bytes(params.header_len(), 0xff)}, m, s, c));
  EXPECT_FALSE(sig_verify(params, BroadcasterPublicKey{Bytes(3, 1)}, m, s, c));
  EXPECT_FALSE(sig_verify(params, kp.pk, m, ByteView(s).first(s.size() - 1), c));
  EXPECT_FALSE(sig_verify(params, kp.pk, m, rng.bytes(s.size()), c));
}

INSTANTIATE_TEST_SUITE_P(Levels, Signature, ::testing::Values(128u, 192u));
